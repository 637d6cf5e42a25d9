//! Characteristic classes and linear functionals on Chern numbers.
//!
//! A Chern number of an `n`-dimensional manifold is indexed by a partition
//! of `n`. [`ChernVector`] holds all of them for one manifold (a point of the
//! rational cobordism group), [`LinearFunctional`] is a rational combination
//! of them. [`ChernPoly`] is the graded polynomial algebra `Q[c1, c2, ...]`
//! used to build functionals symbolically.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::partition::{partitions, Partition};
use crate::ring::{RingElement, RingPresentation};
use crate::scalar::Scalar;
use crate::symmetric::SymmetricPoly;

/// Chern classes `c_1..c_r` of a rank-`rank` bundle, `r = min(rank, dim)`.
#[derive(Clone, Debug)]
pub struct ChernData<S> {
    rank: u32,
    ring: Arc<RingPresentation<S>>,
    classes: Vec<RingElement<S>>,
}

impl<S: Scalar> PartialEq for ChernData<S> {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.classes == other.classes
    }
}

impl<S: Scalar> ChernData<S> {
    /// `classes[i]` is `c_{i+1}`. Missing classes are zero; classes past the
    /// rank must vanish and are dropped, as are classes past the dimension.
    pub fn new(ring: &Arc<RingPresentation<S>>, rank: u32, classes: Vec<RingElement<S>>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::pre("bundle rank must be positive"));
        }
        let keep = rank.min(ring.dimension()) as usize;
        let mut out = Vec::with_capacity(keep);
        for (i, c) in classes.into_iter().enumerate() {
            let degree = 2 * (i as u32 + 1);
            if !crate::ring::same_ring(c.ring(), ring) {
                return Err(Error::PresentationMismatch);
            }
            if !c.is_homogeneous_of(degree) {
                return Err(Error::pre(format!("c_{} is not homogeneous of degree {degree}", i + 1)));
            }
            if i < keep {
                out.push(c);
            } else if i as u32 >= rank && !c.is_zero() {
                return Err(Error::pre(format!("c_{} is nonzero above the rank {rank}", i + 1)));
            }
        }
        while out.len() < keep {
            out.push(RingElement::zero(ring));
        }
        Ok(ChernData { rank, ring: ring.clone(), classes: out })
    }

    pub fn trivial(ring: &Arc<RingPresentation<S>>, rank: u32) -> Result<Self> {
        Self::new(ring, rank, Vec::new())
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn ring(&self) -> &Arc<RingPresentation<S>> {
        &self.ring
    }

    pub fn classes(&self) -> &[RingElement<S>] {
        &self.classes
    }

    /// `c_i`, with `c_0 = 1` and zero outside the stored range.
    pub fn class(&self, i: u32) -> RingElement<S> {
        match i {
            0 => RingElement::one(&self.ring),
            _ => self
                .classes
                .get(i as usize - 1)
                .cloned()
                .unwrap_or_else(|| RingElement::zero(&self.ring)),
        }
    }

    pub fn total(&self) -> RingElement<S> {
        self.classes.iter().fold(RingElement::one(&self.ring), |acc, c| &acc + c)
    }

    /// Chern classes of `self ⊕ other` (Whitney sum).
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        let total = self.total().try_mul(&other.total())?;
        let rank = self.rank + other.rank;
        let classes = (1..=rank.min(self.ring.dimension())).map(|i| total.homogeneous(2 * i)).collect();
        Self::new(&self.ring, rank, classes)
    }

    /// Product `c_{m_1} ... c_{m_p}` in the ring.
    pub fn monomial(&self, m: &Partition) -> RingElement<S> {
        m.parts().iter().fold(RingElement::one(&self.ring), |acc, &i| &acc * &self.class(i))
    }
}

/// Components `α_0..α_max` of the inverse total Chern class.
pub fn segre<S: Scalar>(e: &ChernData<S>, max_degree: u32) -> Result<Vec<RingElement<S>>> {
    if max_degree > e.ring.dimension() {
        return Err(Error::pre(format!(
            "segre degree {max_degree} exceeds base dimension {}",
            e.ring.dimension()
        )));
    }
    let mut alpha: Vec<RingElement<S>> = vec![RingElement::one(&e.ring)];
    for j in 1..=max_degree {
        let mut acc = RingElement::zero(&e.ring);
        for i in 1..=j.min(e.rank) {
            acc = &acc - &(&e.class(i) * &alpha[(j - i) as usize]);
        }
        alpha.push(acc);
    }
    Ok(alpha)
}

/// Polynomial in the Chern classes; the monomial `c_{m_1}...c_{m_p}` is keyed
/// by the partition `m`, with the empty partition as the constant 1.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct ChernPoly<S> {
    terms: BTreeMap<Partition, S>,
}

impl<S: Scalar> ChernPoly<S> {
    pub fn zero() -> Self {
        ChernPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Partition::empty(), S::one())
    }

    pub fn monomial(m: Partition, c: S) -> Self {
        let mut out = Self::zero();
        out.add_term(m, c);
        out
    }

    /// `c_i`; `c_0 = 1`.
    pub fn chern(i: u32) -> Self {
        Self::monomial(Partition::from_parts_lossy([i]), S::one())
    }

    pub fn terms(&self) -> &BTreeMap<Partition, S> {
        &self.terms
    }

    pub fn coeff(&self, m: &Partition) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    fn add_term(&mut self, m: Partition, c: S) {
        let v = self.terms.remove(&m).unwrap_or_else(S::zero) + c;
        if !v.is_zero() {
            self.terms.insert(m, v);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-S::one()))
    }

    pub fn scale(&self, s: &S) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.clone() * s.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.merge(b), ca.clone() * cb.clone());
            }
        }
        out
    }

    /// Drops monomials of weight above `n`.
    pub fn truncate(&self, n: u32) -> Self {
        ChernPoly {
            terms: self.terms.iter().filter(|(m, _)| m.weight() <= n).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }
}

macro_rules! partition_indexed {
    ($name:ident, $field:ident) => {
        impl<S: Scalar> $name<S> {
            pub fn zero(dimension: u32) -> Self {
                Self::from_fn(dimension, |_| S::zero())
            }

            pub fn from_fn(dimension: u32, mut f: impl FnMut(&Partition) -> S) -> Self {
                let $field = partitions(dimension).into_iter().map(|m| {
                    let v = f(&m);
                    (m, v)
                });
                $name { dimension, $field: $field.collect() }
            }

            /// Builds from explicit entries; absent partitions are zero.
            pub fn from_entries(dimension: u32, entries: impl IntoIterator<Item = (Partition, S)>) -> Result<Self> {
                let mut out = Self::zero(dimension);
                for (m, v) in entries {
                    if m.weight() != dimension {
                        return Err(Error::DimensionMismatch {
                            expected: dimension as usize,
                            found: m.weight() as usize,
                        });
                    }
                    out.$field.insert(m, v);
                }
                Ok(out)
            }

            pub fn dimension(&self) -> u32 {
                self.dimension
            }

            pub fn get(&self, m: &Partition) -> S {
                self.$field.get(m).cloned().unwrap_or_else(S::zero)
            }

            pub fn entries(&self) -> impl Iterator<Item = (&Partition, &S)> {
                self.$field.iter()
            }

            /// Values in canonical partition order.
            pub fn dense(&self) -> Vec<S> {
                self.$field.values().cloned().collect()
            }

            pub fn from_dense(dimension: u32, values: Vec<S>) -> Result<Self> {
                let parts = partitions(dimension);
                if parts.len() != values.len() {
                    return Err(Error::DimensionMismatch { expected: parts.len(), found: values.len() });
                }
                Ok($name { dimension, $field: parts.into_iter().zip(values).collect() })
            }

            pub fn is_zero(&self) -> bool {
                self.$field.values().all(|v| v.is_zero())
            }

            pub fn add(&self, other: &Self) -> Result<Self> {
                self.same_dimension(other)?;
                Ok(Self::from_fn(self.dimension, |m| self.get(m) + other.get(m)))
            }

            pub fn sub(&self, other: &Self) -> Result<Self> {
                self.same_dimension(other)?;
                Ok(Self::from_fn(self.dimension, |m| self.get(m) - other.get(m)))
            }

            pub fn scale(&self, s: &S) -> Self {
                Self::from_fn(self.dimension, |m| self.get(m) * s.clone())
            }

            fn same_dimension(&self, other: &Self) -> Result<()> {
                if self.dimension == other.dimension {
                    Ok(())
                } else {
                    Err(Error::DimensionMismatch {
                        expected: self.dimension as usize,
                        found: other.dimension as usize,
                    })
                }
            }
        }
    };
}

/// Rational combination of the Chern numbers in one dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearFunctional<S> {
    dimension: u32,
    coeffs: BTreeMap<Partition, S>,
}

/// All Chern numbers of one manifold (or rational cobordism class).
#[derive(Clone, Debug, PartialEq)]
pub struct ChernVector<S> {
    dimension: u32,
    values: BTreeMap<Partition, S>,
}

partition_indexed!(LinearFunctional, coeffs);
partition_indexed!(ChernVector, values);

impl<S: Scalar> LinearFunctional<S> {
    /// The functional picking out `c_m`.
    pub fn indicator(m: &Partition) -> Self {
        let target = m.clone();
        Self::from_fn(m.weight(), |p| if *p == target { S::one() } else { S::zero() })
    }

    /// Reads a weight-`n` polynomial as a functional; lower-weight terms are
    /// an error.
    pub fn from_poly(dimension: u32, poly: &ChernPoly<S>) -> Result<Self> {
        if let Some((m, _)) = poly.terms().iter().find(|(m, _)| m.weight() != dimension) {
            return Err(Error::pre(format!("monomial {} has weight {} not {dimension}", m.chern_monomial(), m.weight())));
        }
        Self::from_entries(dimension, poly.terms().iter().map(|(m, c)| (m.clone(), c.clone())))
    }

    pub fn to_poly(&self) -> ChernPoly<S> {
        self.coeffs
            .iter()
            .fold(ChernPoly::zero(), |acc, (m, c)| acc.add(&ChernPoly::monomial(m.clone(), c.clone())))
    }

    /// Human-readable form such as `c1^2 - 2*c2`.
    pub fn pretty(&self) -> String {
        let mut out = String::new();
        for (m, c) in self.coeffs.iter() {
            if c.is_zero() {
                continue;
            }
            let negative = format!("{c}").starts_with('-');
            let mag = if negative { -c.clone() } else { c.clone() };
            let body = if mag.is_one() { m.chern_monomial() } else { format!("{mag}*{}", m.chern_monomial()) };
            match (out.is_empty(), negative) {
                (true, false) => out.push_str(&body),
                (true, true) => out.push_str(&format!("-{body}")),
                (false, false) => out.push_str(&format!(" + {body}")),
                (false, true) => out.push_str(&format!(" - {body}")),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Duality pairing `Σ f[m] v[m]`.
pub fn apply<S: Scalar>(f: &LinearFunctional<S>, v: &ChernVector<S>) -> Result<S> {
    if f.dimension() != v.dimension() {
        return Err(Error::DimensionMismatch { expected: f.dimension() as usize, found: v.dimension() as usize });
    }
    Ok(f.entries().fold(S::zero(), |acc, (m, c)| acc + c.clone() * v.get(m)))
}

/// `p_j = Σ_{i=0}^{2j} (-1)^{j+i} c_i c_{2j-i}`.
pub fn pontryagin_class<S: Scalar>(j: u32) -> ChernPoly<S> {
    (0..=2 * j).fold(ChernPoly::zero(), |acc, i| {
        let sign = if (j + i) % 2 == 0 { S::one() } else { -S::one() };
        acc.add(&ChernPoly::chern(i).mul(&ChernPoly::chern(2 * j - i)).scale(&sign))
    })
}

/// Pontryagin numbers `p_m` for every partition `m` of `n / 2`, as
/// functionals on Chern numbers.
pub fn pontryagin_functionals<S: Scalar>(n: u32) -> Result<Vec<(Partition, LinearFunctional<S>)>> {
    if n % 2 != 0 {
        return Err(Error::pre("no Pontryagin numbers in odd complex dimension"));
    }
    partitions(n / 2)
        .into_iter()
        .map(|m| {
            let poly = m
                .parts()
                .iter()
                .fold(ChernPoly::one(), |acc, &j| acc.mul(&pontryagin_class(j)))
                .truncate(n);
            LinearFunctional::from_poly(n, &poly).map(|f| (m, f))
        })
        .collect()
}

/// Newton polynomial `s_n` in the Chern classes.
pub fn milnor_s<S: Scalar>(n: u32) -> Result<LinearFunctional<S>> {
    if n == 0 {
        return Err(Error::pre("Milnor number needs n >= 1"));
    }
    let mut s: Vec<ChernPoly<S>> = vec![ChernPoly::zero()];
    for j in 1..=n {
        let mut acc = ChernPoly::zero();
        for i in 1..j {
            let sign = if (i - 1) % 2 == 0 { S::one() } else { -S::one() };
            acc = acc.add(&ChernPoly::chern(i).mul(&s[(j - i) as usize]).scale(&sign));
        }
        let sign = if (j - 1) % 2 == 0 { S::from_int(j as i64) } else { -S::from_int(j as i64) };
        acc = acc.add(&ChernPoly::chern(j).scale(&sign));
        s.push(acc);
    }
    LinearFunctional::from_poly(n, &s[n as usize])
}

fn invert_series<S: Scalar>(a: &[S]) -> Vec<S> {
    let mut inv = vec![S::zero(); a.len()];
    inv[0] = S::one() / a[0].clone();
    for j in 1..a.len() {
        let mut acc = S::zero();
        for i in 1..=j {
            acc = acc + a[i].clone() * inv[j - i].clone();
        }
        inv[j] = -acc / a[0].clone();
    }
    inv
}

/// Coefficients of `x^j` (`j = 0..=n`) of `x(1 + y e^{-x}) / (1 - e^{-x})`,
/// each a polynomial in `y` of degree at most 1.
fn chi_y_series<S: Scalar>(n: u32) -> Vec<[S; 2]> {
    let len = n as usize + 1;
    let mut factorial = vec![S::one(); len + 1];
    for i in 1..=len {
        factorial[i] = factorial[i - 1].clone() * S::from_int(i as i64);
    }
    let sign = |j: usize| if j % 2 == 0 { S::one() } else { -S::one() };
    // (1 - e^{-x}) / x
    let denom: Vec<S> = (0..len).map(|j| sign(j) / factorial[j + 1].clone()).collect();
    let todd = invert_series(&denom);
    let exp_neg: Vec<S> = (0..len).map(|j| sign(j) / factorial[j].clone()).collect();
    (0..len)
        .map(|j| {
            let shifted = (0..=j).fold(S::zero(), |acc, i| acc + todd[i].clone() * exp_neg[j - i].clone());
            [todd[j].clone(), shifted]
        })
        .collect()
}

fn poly_mul<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    let mut out = vec![S::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    out
}

/// `χ^p = χ(X, Ω^p)` for `p = 0..=n` as functionals on Chern numbers.
///
/// The genus series is expanded in exactly `n` roots; the coefficient of the
/// root monomial `x^λ` is the product of the one-variable coefficients at the
/// exponents of `λ` (zeros padded), and the resulting symmetric polynomial is
/// rewritten in elementary symmetric functions.
pub fn chi_functionals<S: Scalar>(n: u32) -> Result<Vec<LinearFunctional<S>>> {
    if n == 0 {
        return Err(Error::pre("chi_y genus needs n >= 1"));
    }
    let series = chi_y_series::<S>(n);
    let vars = n as usize;
    let mut by_power: Vec<Vec<(Partition, S)>> = vec![Vec::new(); vars + 1];
    for lambda in partitions(n) {
        let mut coeff = vec![S::one()];
        for i in 0..vars {
            let e = lambda.parts().get(i).copied().unwrap_or(0) as usize;
            coeff = poly_mul(&coeff, &series[e]);
        }
        for (p, c) in coeff.into_iter().enumerate() {
            if !c.is_zero() {
                by_power[p].push((lambda.clone(), c));
            }
        }
    }
    by_power
        .into_iter()
        .map(|terms| {
            let sym = SymmetricPoly::from_dominant(vars, n, terms)?;
            LinearFunctional::from_poly(n, &sym.to_elementary()?)
        })
        .collect()
}

/// `Σ_p χ^p y^p` evaluated at a given `y`.
pub fn chi_y_at<S: Scalar>(n: u32, y: &S) -> Result<LinearFunctional<S>> {
    let chis = chi_functionals::<S>(n)?;
    let mut power = S::one();
    let mut acc = LinearFunctional::zero(n);
    for chi in chis {
        acc = acc.add(&chi.scale(&power))?;
        power = power * y.clone();
    }
    Ok(acc)
}

/// The top Chern number `c_n`.
pub fn euler_functional<S: Scalar>(n: u32) -> LinearFunctional<S> {
    LinearFunctional::indicator(&Partition::single(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::BasisSymbol;
    use crate::Rational;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    fn poly(entries: &[(&str, i64)]) -> ChernPoly<Rational> {
        entries.iter().fold(ChernPoly::zero(), |acc, (m, c)| {
            acc.add(&ChernPoly::monomial(Partition::parse(m).unwrap(), Rational::from_int(*c)))
        })
    }

    fn projective_space(m: u32) -> Arc<RingPresentation<Rational>> {
        let basis = (0..=m).map(|i| BasisSymbol::new(format!("h{i}"), 2 * i)).collect();
        let mut products = Vec::new();
        for i in 0..=m as usize {
            for j in 0..=m as usize {
                if i + j <= m as usize {
                    products.push((i, j, vec![(i + j, Rational::from_int(1))]));
                }
            }
        }
        Arc::new(RingPresentation::new(m, basis, products, Some(m as usize)).unwrap())
    }

    #[test]
    fn segre_low_degrees() {
        let ring = Arc::new(RingPresentation::<Rational>::free(&[("e1", 1), ("e2", 2)], 2).unwrap());
        let e1 = RingElement::symbol(&ring, "e1").unwrap();
        let e2 = RingElement::symbol(&ring, "e2").unwrap();
        let data = ChernData::new(&ring, 2, vec![e1.clone(), e2.clone()]).unwrap();
        let alpha = segre(&data, 2).unwrap();
        assert_eq!(alpha[1], -&e1);
        assert_eq!(alpha[2], &(&e1 * &e1) - &e2);
    }

    #[test]
    fn segre_of_trivial_and_line() {
        let ring = projective_space(3);
        let trivial = ChernData::trivial(&ring, 2).unwrap();
        for a in &segre(&trivial, 3).unwrap()[1..] {
            assert!(a.is_zero());
        }
        let h = RingElement::symbol(&ring, "h1").unwrap();
        let line = ChernData::new(&ring, 1, vec![h.clone()]).unwrap();
        let alpha = segre(&line, 3).unwrap();
        for (j, a) in alpha.iter().enumerate() {
            assert_eq!(*a, (-&h).pow(j as u32));
        }
        assert!(segre(&line, 4).is_err());
    }

    #[test]
    fn chern_data_rejects_bad_degrees() {
        let ring = projective_space(2);
        let h = RingElement::symbol(&ring, "h1").unwrap();
        assert!(ChernData::new(&ring, 2, vec![h.clone(), h.clone()]).is_err());
        assert!(ChernData::new(&ring, 1, vec![h.clone(), &h * &h]).is_err());
        assert!(ChernData::new(&ring, 0, vec![]).is_err());
    }

    #[test]
    fn pontryagin_low_dimensions() {
        let p1 = pontryagin_functionals::<Rational>(2).unwrap();
        assert_eq!(p1.len(), 1);
        assert_eq!(p1[0].1.to_poly(), poly(&[("1,1", 1), ("2", -2)]));
        let p = pontryagin_functionals::<Rational>(4).unwrap();
        let p2 = &p.iter().find(|(m, _)| m.parts() == [2]).unwrap().1;
        assert_eq!(p2.to_poly(), poly(&[("2,2", 1), ("3,1", -2), ("4", 2)]));
        assert!(pontryagin_functionals::<Rational>(3).is_err());
    }

    #[test]
    fn p1_squared_is_formal_square() {
        let p = pontryagin_functionals::<Rational>(4).unwrap();
        let p11 = &p.iter().find(|(m, _)| m.parts() == [1, 1]).unwrap().1;
        // (c1^2 - 2c2)^2 = c1^4 - 4 c1^2 c2 + 4 c2^2
        assert_eq!(p11.to_poly(), poly(&[("1,1,1,1", 1), ("2,1,1", -4), ("2,2", 4)]));
        assert_eq!(p11.pretty(), "c1^4 - 4*c1^2*c2 + 4*c2^2");
    }

    #[test]
    fn milnor_low() {
        assert_eq!(milnor_s::<Rational>(1).unwrap().to_poly(), poly(&[("1", 1)]));
        assert_eq!(milnor_s::<Rational>(2).unwrap().to_poly(), poly(&[("1,1", 1), ("2", -2)]));
        // s_3 = c1^3 - 3 c1 c2 + 3 c3
        assert_eq!(milnor_s::<Rational>(3).unwrap().to_poly(), poly(&[("1,1,1", 1), ("2,1", -3), ("3", 3)]));
    }

    #[test]
    fn todd_genus_of_surfaces() {
        let chi = chi_functionals::<Rational>(2).unwrap();
        let expected = poly(&[("1,1", 1), ("2", 1)]).scale(&q(1, 12));
        assert_eq!(chi[0].to_poly(), expected);
    }

    #[test]
    fn apply_dimension_mismatch() {
        let f = euler_functional::<Rational>(3);
        let v = ChernVector::<Rational>::zero(2);
        assert!(matches!(apply(&f, &v), Err(Error::DimensionMismatch { .. })));
        let v = ChernVector::from_fn(3, |m| Rational::from_int(m.len() as i64));
        assert_eq!(apply(&f, &v).unwrap(), Rational::from_int(1));
    }

    #[test]
    fn functional_entries_must_match_dimension() {
        let bad = LinearFunctional::<Rational>::from_entries(3, [(Partition::single(2), q(1, 1))]);
        assert!(bad.is_err());
    }
}
