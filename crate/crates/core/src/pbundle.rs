//! Chern numbers of projectivized bundles.
//!
//! Two independent routes are provided. [`BundleOnBase::chern_number`]
//! evaluates the closed expression built from the class `f(𝔞)` entirely in
//! the cohomology of the base. [`BundleOnBase::chern_number_oracle`] builds
//! the cohomology ring of the projective bundle itself, with fibre
//! hyperplane class `y` subject to `Σ e_i y^{k-i} = 0`, and integrates the
//! product of Chern classes there.

use std::sync::Arc;

use crate::charclass::{segre, ChernData, ChernVector};
use crate::error::{Error, Result};
use crate::partition::{partitions, Partition, WeightedTuple};
use crate::ring::{BasisSymbol, Combination, RingElement, RingPresentation};
use crate::scalar::{binomial, Scalar};

/// A manifold modelled by its even rational cohomology and tangent Chern
/// classes.
#[derive(Clone, Debug)]
pub struct Base<S> {
    ring: Arc<RingPresentation<S>>,
    tangent: ChernData<S>,
}

impl<S: Scalar> Base<S> {
    pub fn new(ring: Arc<RingPresentation<S>>, tangent: ChernData<S>) -> Result<Self> {
        if !crate::ring::same_ring(&ring, tangent.ring()) {
            return Err(Error::PresentationMismatch);
        }
        if tangent.rank() != ring.dimension().max(1) {
            return Err(Error::pre(format!(
                "tangent rank {} differs from dimension {}",
                tangent.rank(),
                ring.dimension()
            )));
        }
        Ok(Base { ring, tangent })
    }

    /// Base with vanishing tangent classes beyond `c_0`.
    pub fn parallelizable(ring: Arc<RingPresentation<S>>) -> Result<Self> {
        let tangent = ChernData::trivial(&ring, ring.dimension().max(1))?;
        Self::new(ring, tangent)
    }

    pub fn ring(&self) -> &Arc<RingPresentation<S>> {
        &self.ring
    }

    pub fn tangent(&self) -> &ChernData<S> {
        &self.tangent
    }

    pub fn dimension(&self) -> u32 {
        self.ring.dimension()
    }

    /// Chern numbers; needs a ring with a fundamental class.
    pub fn chern_vector(&self) -> Result<ChernVector<S>> {
        let n = self.dimension();
        let mut values = Vec::new();
        for m in partitions(n) {
            values.push((m.clone(), self.tangent.monomial(&m).integrate()?));
        }
        ChernVector::from_entries(n, values)
    }
}

/// Rank-`k` bundle `E` over a base of dimension `n_B`; `ℙ(E)` has dimension
/// `n = n_B + k - 1`.
#[derive(Clone, Debug)]
pub struct BundleOnBase<S> {
    base: Base<S>,
    bundle: ChernData<S>,
    segre: Vec<RingElement<S>>,
}

/// Sign class of a positivity-scan value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct PositivityEntry {
    pub partition: Partition,
    pub value: i64,
    pub sign: Sign,
}

impl<S: Scalar> BundleOnBase<S> {
    pub fn new(base: Base<S>, bundle: ChernData<S>) -> Result<Self> {
        if !crate::ring::same_ring(base.ring(), bundle.ring()) {
            return Err(Error::PresentationMismatch);
        }
        let segre = segre(&bundle, base.dimension())?;
        Ok(BundleOnBase { base, bundle, segre })
    }

    /// Universal Chern data: the base ring is the free graded algebra on
    /// tangent classes `b1..b{n_B}` and bundle classes `e1..ek`, truncated at
    /// degree `n_B`. Useful for comparing formulas symbolically; it has no
    /// fundamental class.
    pub fn symbolic(rank: u32, base_dimension: u32) -> Result<Self> {
        let b_names: Vec<String> = (1..=base_dimension).map(|i| format!("b{i}")).collect();
        let e_names: Vec<String> = (1..=rank.min(base_dimension)).map(|i| format!("e{i}")).collect();
        let mut gens: Vec<(&str, u32)> = Vec::new();
        for (i, name) in e_names.iter().enumerate() {
            gens.push((name, i as u32 + 1));
        }
        for (i, name) in b_names.iter().enumerate() {
            gens.push((name, i as u32 + 1));
        }
        let ring = Arc::new(RingPresentation::free(&gens, base_dimension)?);
        let classes = |names: &[String]| -> Result<Vec<RingElement<S>>> {
            names.iter().map(|n| RingElement::symbol(&ring, n)).collect()
        };
        let tangent = ChernData::new(&ring, base_dimension.max(1), classes(&b_names)?)?;
        let bundle = ChernData::new(&ring, rank, classes(&e_names)?)?;
        Self::new(Base::new(ring, tangent)?, bundle)
    }

    pub fn base(&self) -> &Base<S> {
        &self.base
    }

    pub fn bundle(&self) -> &ChernData<S> {
        &self.bundle
    }

    pub fn ring(&self) -> &Arc<RingPresentation<S>> {
        self.base.ring()
    }

    pub fn rank(&self) -> u32 {
        self.bundle.rank()
    }

    pub fn base_dimension(&self) -> u32 {
        self.base.dimension()
    }

    /// Dimension of the projective bundle.
    pub fn dimension(&self) -> u32 {
        self.base_dimension() + self.rank() - 1
    }

    /// Segre components `α_0..α_{n_B}`.
    pub fn segre(&self) -> &[RingElement<S>] {
        &self.segre
    }

    /// `f(𝔞) = Σ_𝔡 Π binom(k - d_i, k - a_i) c_{d_i}(E) · α_{|𝔞| - |𝔡| - (k-1)}`,
    /// homogeneous of complex degree `|𝔞| - (k - 1)`; zero outside
    /// `0..=n_B`.
    pub fn f_class(&self, tuple: &WeightedTuple) -> RingElement<S> {
        let k = self.rank() as i64;
        let degree = tuple.weight() as i64 - (k - 1);
        let ring = self.ring();
        if degree < 0 || degree > self.base_dimension() as i64 {
            return RingElement::zero(ring);
        }
        let entries = tuple.entries();
        let mut acc = RingElement::zero(ring);
        let mut d = vec![0u32; entries.len()];
        self.visit_d(entries, 0, degree as u32, &mut d, &mut |d| {
            let mut coeff: i64 = 1;
            for (&a, &di) in entries.iter().zip(d) {
                coeff *= binomial(k - di as i64, k - a as i64);
                if coeff == 0 {
                    return;
                }
            }
            let used: u32 = d.iter().sum();
            let mut term = self.segre[(degree as u32 - used) as usize].scale(&S::from_int(coeff));
            for &di in d {
                if di > 0 {
                    term = &term * &self.bundle.class(di);
                }
            }
            acc = &acc + &term;
        });
        acc
    }

    fn visit_d(&self, a: &[u32], idx: usize, budget: u32, d: &mut Vec<u32>, visit: &mut impl FnMut(&[u32])) {
        if idx == a.len() {
            visit(d);
            return;
        }
        let bound = a[idx].min(self.rank()).min(self.base_dimension()).min(budget);
        for v in 0..=bound {
            d[idx] = v;
            self.visit_d(a, idx + 1, budget - v, d, visit);
        }
        d[idx] = 0;
    }

    /// Closed forms of `f(𝔞)` for weights `k-1`, `k` and `k+1`.
    pub fn f_closed_form(&self, tuple: &WeightedTuple) -> Result<RingElement<S>> {
        let k = self.rank();
        let a = tuple.entries();
        if a.iter().any(|&x| x > k) {
            return Err(Error::pre("closed form unavailable: entry exceeds rank"));
        }
        let prod_binom: i64 = a.iter().map(|&x| binomial(k as i64, x as i64)).product();
        let ring = self.ring();
        let w = tuple.weight();
        if w + 1 == k {
            Ok(RingElement::from_int(ring, prod_binom))
        } else if w == k {
            Ok(RingElement::zero(ring))
        } else if w == k + 1 && k >= 2 {
            let mut pairs: i64 = 0;
            for s in 0..a.len() {
                for t in (s + 1)..a.len() {
                    pairs += a[s] as i64 * a[t] as i64;
                }
            }
            let constant = S::from_int(prod_binom * (pairs - k as i64));
            let k = S::from_int(k as i64);
            let e1 = self.bundle.class(1);
            let e2 = self.bundle.class(2);
            let quadratic = &(&e1 * &e1).scale(&(S::one() / (k.clone() * k.clone())))
                - &e2.scale(&(S::from_int(2) / (k.clone() * (k - S::one()))));
            Ok(quadratic.scale(&constant))
        } else {
            Err(Error::pre(format!("closed form unavailable for weight {w} and rank {k}")))
        }
    }

    /// `c_𝔪(ℙ(E)) = Σ_𝔧 ∫_B c_{j_1}(B)···c_{j_p}(B) · f(m_1 - j_1, ..., m_p - j_p)`.
    pub fn chern_number(&self, m: &Partition) -> Result<S> {
        self.check_weight(m)?;
        let ring = self.ring();
        let mut acc = RingElement::zero(ring);
        let mut j = vec![0u32; m.len()];
        self.visit_j(m.parts(), 0, self.base_dimension(), RingElement::one(ring), &mut j, &mut |j, b| {
            let tuple = WeightedTuple::new(m.parts().iter().zip(j).map(|(mt, jt)| mt - jt).collect());
            let f = self.f_class(&tuple);
            if !f.is_zero() {
                acc = &acc + &(b * &f);
            }
        });
        acc.integrate()
    }

    fn visit_j(
        &self,
        m: &[u32],
        idx: usize,
        budget: u32,
        product: RingElement<S>,
        j: &mut Vec<u32>,
        visit: &mut impl FnMut(&[u32], &RingElement<S>),
    ) {
        if product.is_zero() {
            return;
        }
        if idx == m.len() {
            visit(j, &product);
            return;
        }
        for v in 0..=m[idx].min(budget) {
            j[idx] = v;
            let next = if v == 0 { product.clone() } else { &product * &self.base.tangent().class(v) };
            self.visit_j(m, idx + 1, budget - v, next, j, visit);
        }
        j[idx] = 0;
    }

    /// All Chern numbers of `ℙ(E)` via [`chern_number`](Self::chern_number).
    pub fn chern_vector(&self) -> Result<ChernVector<S>> {
        let n = self.dimension();
        let entries = partitions(n)
            .into_iter()
            .map(|m| self.chern_number(&m).map(|v| (m, v)))
            .collect::<Result<Vec<_>>>()?;
        ChernVector::from_entries(n, entries)
    }

    fn check_weight(&self, m: &Partition) -> Result<()> {
        if m.weight() != self.dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.dimension() as usize,
                found: m.weight() as usize,
            });
        }
        Ok(())
    }

    /// Cohomology ring of `ℙ(E)` and its tangent Chern classes.
    ///
    /// Basis `β·y^j` for base symbols `β` and `0 <= j < k`; `y^k` is reduced
    /// with `Σ_{i=0}^k e_i y^{k-i} = 0`; the top symbol is `[B]·y^{k-1}`. The
    /// total Chern class is `(Σ b_j)(Σ e_i (1+y)^{k-i})`.
    pub fn oracle_ring(&self) -> Result<Base<S>> {
        let base = self.ring();
        let k = self.rank() as usize;
        let width = base.len();
        let fibre = if base.index_of("y").is_some() { "y_E" } else { "y" };
        let idx = |b: usize, j: usize| b * k + j;
        let unit = base.unit();

        // powers[J][j]: coefficient of y^j in y^J after reduction, J < 2k.
        let mut powers: Vec<Vec<RingElement<S>>> = Vec::with_capacity(2 * k);
        for big in 0..(2 * k).max(2) {
            let mut v = vec![RingElement::zero(base); k];
            if big < k {
                v[big] = RingElement::one(base);
            } else {
                let prev = &powers[big - 1];
                let overflow = prev[k - 1].clone();
                for j in (1..k).rev() {
                    v[j] = prev[j - 1].clone();
                }
                v[0] = RingElement::zero(base);
                for i in 1..=k {
                    let shift = &overflow * &self.bundle.class(i as u32);
                    v[k - i] = &v[k - i] - &shift;
                }
            }
            powers.push(v);
        }

        let mut basis = Vec::with_capacity(width * k);
        for (b, sym) in base.basis().iter().enumerate() {
            for j in 0..k {
                let y = match j {
                    0 => String::new(),
                    1 => fibre.to_string(),
                    _ => format!("{fibre}^{j}"),
                };
                let name = match (b == unit, j == 0) {
                    (_, true) => sym.name.clone(),
                    (true, false) => y,
                    (false, false) => format!("{}*{y}", sym.name),
                };
                basis.push(BasisSymbol::new(name, sym.degree + 2 * j as u32));
            }
        }

        let mut products = Vec::new();
        for b1 in 0..width {
            for b2 in 0..width {
                let beta = base.product(b1, b2);
                for j1 in 0..k {
                    for j2 in 0..k {
                        let mut combo: Combination<S> = Vec::new();
                        for (m, c) in beta {
                            let bm = RingElement::basis_element(base, *m);
                            for (j, coeff) in powers[j1 + j2].iter().enumerate() {
                                if coeff.is_zero() {
                                    continue;
                                }
                                let term = &bm * coeff;
                                for (t, v) in term.coeffs().iter().enumerate() {
                                    if !v.is_zero() {
                                        combo.push((idx(t, j), c.clone() * v.clone()));
                                    }
                                }
                            }
                        }
                        products.push((idx(b1, j1), idx(b2, j2), combo));
                    }
                }
            }
        }
        let top = base.top().map(|t| idx(t, k - 1));
        let ring = Arc::new(RingPresentation::new(self.dimension(), basis, products, top)?);

        let lift = |e: &RingElement<S>| -> RingElement<S> {
            let mut out = RingElement::zero(&ring);
            for (b, c) in e.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    out = &out + &RingElement::basis_element(&ring, idx(b, 0)).scale(c);
                }
            }
            out
        };
        let y = powers[1].iter().enumerate().fold(RingElement::zero(&ring), |acc, (j, c)| {
            let yj = RingElement::basis_element(&ring, idx(unit, j));
            &acc + &(&lift(c) * &yj)
        });
        let one = RingElement::one(&ring);
        let one_plus_y = &one + &y;
        let mut relative = RingElement::zero(&ring);
        for i in 0..=k {
            let e = lift(&self.bundle.class(i as u32));
            relative = &relative + &(&e * &one_plus_y.pow((k - i) as u32));
        }
        let total = &lift(&self.base.tangent().total()) * &relative;
        let n = self.dimension();
        let classes = (1..=n).map(|i| total.homogeneous(2 * i)).collect();
        let tangent = ChernData::new(&ring, n.max(1), classes)?;
        Base::new(ring, tangent)
    }

    /// Chern number computed directly in the projective-bundle ring.
    pub fn chern_number_oracle(&self, m: &Partition) -> Result<S> {
        self.check_weight(m)?;
        let total = self.oracle_ring()?;
        total.tangent().monomial(m).integrate()
    }
}

/// Sign of `(Π binom(k, a_i)) (Σ_{s<t} a_s a_t - k)` over partitions `𝔞` of
/// `k + 1` with parts at most `k`.
pub fn positivity_scan(k: u32) -> Result<Vec<PositivityEntry>> {
    if k < 2 {
        return Err(Error::pre("positivity scan needs k >= 2"));
    }
    Ok(partitions(k + 1)
        .into_iter()
        .filter(|a| a.largest() <= k)
        .map(|a| {
            let value = positivity_value(k, a.parts());
            let sign = match value.signum() {
                -1 => Sign::Negative,
                0 => Sign::Zero,
                _ => Sign::Positive,
            };
            PositivityEntry { partition: a, value, sign }
        })
        .collect())
}

pub fn positivity_value(k: u32, a: &[u32]) -> i64 {
    let prod: i64 = a.iter().map(|&x| binomial(k as i64, x as i64)).product();
    let mut pairs: i64 = 0;
    for s in 0..a.len() {
        for t in (s + 1)..a.len() {
            pairs += a[s] as i64 * a[t] as i64;
        }
    }
    prod * (pairs - k as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::Rational;

    fn q(v: i64) -> Rational {
        Rational::from_int(v)
    }

    fn tuple(v: &[u32]) -> WeightedTuple {
        WeightedTuple::new(v.to_vec())
    }

    fn hirzebruch_f1() -> BundleOnBase<Rational> {
        let base = catalog::projective_space::<Rational>(1).unwrap();
        let h = RingElement::symbol(base.ring(), "h").unwrap();
        let bundle = ChernData::new(base.ring(), 2, vec![h]).unwrap();
        BundleOnBase::new(base, bundle).unwrap()
    }

    #[test]
    fn f_weight_k_minus_one() {
        let b = BundleOnBase::<Rational>::symbolic(3, 2).unwrap();
        let f = b.f_class(&tuple(&[1, 1]));
        assert_eq!(f, RingElement::from_int(b.ring(), 9));
    }

    #[test]
    fn f_symbolic_weight_k_plus_one() {
        let b = BundleOnBase::<Rational>::symbolic(2, 2).unwrap();
        let f = b.f_class(&tuple(&[1, 1, 1]));
        assert_eq!(f.to_string(), "2*e1^2 - 8*e2");
        assert_eq!(b.f_closed_form(&tuple(&[1, 1, 1])).unwrap(), f);
    }

    #[test]
    fn f_vanishes_at_weight_k_and_out_of_range() {
        let b = BundleOnBase::<Rational>::symbolic(3, 3).unwrap();
        assert!(b.f_class(&tuple(&[2, 1])).is_zero());
        assert!(b.f_class(&tuple(&[1])).is_zero());
        assert!(b.f_class(&tuple(&[3, 3])).is_zero());
        assert!(b.f_class(&tuple(&[4, 0])).is_zero());
        assert!(b.f_closed_form(&tuple(&[3, 3])).is_err());
    }

    #[test]
    fn hirzebruch_surface_numbers() {
        let b = hirzebruch_f1();
        let c11 = Partition::parse("1,1").unwrap();
        let c2 = Partition::single(2);
        assert_eq!(b.chern_number(&c11).unwrap(), q(8));
        assert_eq!(b.chern_number(&c2).unwrap(), q(4));
        assert_eq!(b.chern_number_oracle(&c11).unwrap(), q(8));
        assert_eq!(b.chern_number_oracle(&c2).unwrap(), q(4));
        assert!(b.chern_number(&Partition::single(3)).is_err());
    }

    #[test]
    fn oracle_relation_on_f1() {
        let b = hirzebruch_f1();
        let total = b.oracle_ring().unwrap();
        let ring = total.ring();
        let y = RingElement::symbol(ring, "y").unwrap();
        let h = RingElement::symbol(ring, "h").unwrap();
        assert_eq!(&y * &y, -&(&h * &y));
        assert_eq!((&h * &y).integrate().unwrap(), q(1));
    }

    #[test]
    fn projective_space_from_point() {
        for n in 1..=4u32 {
            let point = catalog::point::<Rational>();
            let bundle = ChernData::trivial(point.ring(), n + 1).unwrap();
            let b = BundleOnBase::new(point, bundle).unwrap();
            let ring = b.oracle_ring().unwrap();
            assert_eq!(ring.ring().len() as u32, n + 1);
            assert_eq!(b.chern_number_oracle(&Partition::single(n)).unwrap(), q(n as i64 + 1));
            assert_eq!(b.chern_number(&Partition::single(n)).unwrap(), q(n as i64 + 1));
        }
        let point = catalog::point::<Rational>();
        let bundle = ChernData::trivial(point.ring(), 3).unwrap();
        let b = BundleOnBase::new(point, bundle).unwrap();
        assert_eq!(b.chern_number(&Partition::parse("1,1").unwrap()).unwrap(), q(9));
    }

    #[test]
    fn line_times_plane() {
        let base = catalog::projective_space::<Rational>(1).unwrap();
        let bundle = ChernData::trivial(base.ring(), 3).unwrap();
        let b = BundleOnBase::new(base, bundle).unwrap();
        let m = Partition::parse("1,1,1").unwrap();
        assert_eq!(b.chern_number_oracle(&m).unwrap(), q(54));
        assert_eq!(b.chern_number(&m).unwrap(), q(54));
    }

    #[test]
    fn positivity_examples() {
        let scan = positivity_scan(2).unwrap();
        let find = |s: &str| scan.iter().find(|e| e.partition == Partition::parse(s).unwrap()).unwrap().clone();
        assert_eq!(find("2,1").value, 0);
        assert_eq!(find("2,1").sign, Sign::Zero);
        assert_eq!(find("1,1,1").value, 8);
        assert_eq!(find("1,1,1").sign, Sign::Positive);
        assert_eq!(scan.len(), 2);
        assert!(positivity_scan(1).is_err());
    }
}
