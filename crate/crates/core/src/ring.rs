//! Finitely presented graded commutative algebras given by an explicit
//! multiplication table on a basis of homogeneous symbols.
//!
//! Degrees are cohomological (twice the complex degree) and always even. A
//! presentation of complex dimension `n` integrates by reading off the
//! coefficient of its top symbol, the unique basis symbol of degree `2n`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use thiserror::Error;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisSymbol {
    pub name: String,
    /// Cohomological degree.
    pub degree: u32,
}

impl BasisSymbol {
    pub fn new(name: impl Into<String>, degree: u32) -> Self {
        BasisSymbol { name: name.into(), degree }
    }
}

/// Sparse linear combination of basis indices, sorted by index, no zeros.
pub type Combination<S> = Vec<(usize, S)>;

/// First invariant a presentation violates.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RingViolation {
    #[error("symbol `{0}` has odd degree")]
    OddDegree(String),
    #[error("symbol `{symbol}` has degree {degree} outside 0..={max}")]
    DegreeOutOfRange { symbol: String, degree: u32, max: u32 },
    #[error("duplicate symbol `{0}`")]
    DuplicateSymbol(String),
    #[error("missing unit: no symbol of degree 0")]
    MissingUnit,
    #[error("more than one symbol of degree 0")]
    MultipleUnits,
    #[error("unit law fails for `{0}`")]
    UnitLaw(String),
    #[error("missing top symbol")]
    MissingTop,
    #[error("top symbol `{symbol}` has degree {degree}, expected {expected}")]
    TopDegree { symbol: String, degree: u32, expected: u32 },
    #[error("more than one symbol of top degree {0}")]
    MultipleTop(u32),
    #[error("degree additivity fails for `{left}`*`{right}`")]
    DegreeAdditivity { left: String, right: String },
    #[error("product `{left}`*`{right}` is not commutative")]
    NonCommutative { left: String, right: String },
    #[error("associativity fails on (`{0}`, `{1}`, `{2}`)")]
    NonAssociative(String, String, String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct RingPresentation<S> {
    dimension: u32,
    basis: Vec<BasisSymbol>,
    table: Vec<Vec<Combination<S>>>,
    top: Option<usize>,
}

fn normalize<S: Scalar>(mut combo: Combination<S>) -> Combination<S> {
    combo.sort_by_key(|(i, _)| *i);
    let mut out: Combination<S> = Vec::with_capacity(combo.len());
    for (i, c) in combo {
        match out.last_mut() {
            Some((j, acc)) if *j == i => *acc = acc.clone() + c,
            _ => out.push((i, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

impl<S: Scalar> RingPresentation<S> {
    /// Builds and validates a presentation.
    ///
    /// `products` lists `(left, right, result)` for basis indices. A pair given
    /// in one order only is mirrored; products with the unit default to the
    /// identity; anything else not listed is zero.
    pub fn new(
        dimension: u32,
        basis: Vec<BasisSymbol>,
        products: Vec<(usize, usize, Combination<S>)>,
        top: Option<usize>,
    ) -> Result<Self> {
        let ring = Self::unchecked(dimension, basis, products, top);
        ring.validate()?;
        Ok(ring)
    }

    /// Same as [`new`](Self::new) without validation, for reporting.
    pub fn unchecked(
        dimension: u32,
        basis: Vec<BasisSymbol>,
        products: Vec<(usize, usize, Combination<S>)>,
        top: Option<usize>,
    ) -> Self {
        let size = basis.len();
        let mut table: Vec<Vec<Option<Combination<S>>>> = vec![vec![None; size]; size];
        for (l, r, combo) in products {
            table[l][r] = Some(normalize(combo));
        }
        for l in 0..size {
            for r in 0..size {
                if table[l][r].is_none() {
                    if let Some(c) = table[r][l].clone() {
                        table[l][r] = Some(c);
                    }
                }
            }
        }
        let units: Vec<usize> = (0..size).filter(|&i| basis[i].degree == 0).collect();
        if let [unit] = units[..] {
            for i in 0..size {
                if table[unit][i].is_none() {
                    table[unit][i] = Some(vec![(i, S::one())]);
                }
                if table[i][unit].is_none() {
                    table[i][unit] = Some(vec![(i, S::one())]);
                }
            }
        }
        let table = table
            .into_iter()
            .map(|row| row.into_iter().map(Option::unwrap_or_default).collect())
            .collect();
        RingPresentation { dimension, basis, table, top }
    }

    /// Truncated free graded polynomial algebra on `generators` (name,
    /// complex degree), keeping monomials of complex degree `<= max_degree`.
    /// Such a ring has no fundamental class; it carries symbolic Chern data.
    pub fn free(generators: &[(&str, u32)], max_degree: u32) -> Result<Self> {
        if generators.iter().any(|(_, d)| *d == 0) {
            return Err(Error::pre("free generators need positive degree"));
        }
        let mut monomials: Vec<Vec<u32>> = Vec::new();
        let mut current = vec![0u32; generators.len()];
        enumerate_monomials(generators, 0, max_degree, &mut current, &mut monomials);
        let deg = |m: &Vec<u32>| -> u32 { m.iter().zip(generators).map(|(e, (_, d))| e * d).sum() };
        monomials.sort_by(|a, b| deg(a).cmp(&deg(b)).then_with(|| b.cmp(a)));
        let index: HashMap<Vec<u32>, usize> =
            monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let basis = monomials
            .iter()
            .map(|m| {
                let name = monomial_name(generators, m);
                BasisSymbol::new(name, 2 * deg(m))
            })
            .collect();
        let mut products = Vec::new();
        for (i, a) in monomials.iter().enumerate() {
            for (j, b) in monomials.iter().enumerate() {
                let sum: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                if let Some(&k) = index.get(&sum) {
                    products.push((i, j, vec![(k, S::one())]));
                }
            }
        }
        Self::new(max_degree, basis, products, None)
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn basis(&self) -> &[BasisSymbol] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn top(&self) -> Option<usize> {
        self.top
    }

    pub fn unit(&self) -> usize {
        self.basis
            .iter()
            .position(|b| b.degree == 0)
            .expect("validated ring has a unit")
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.name == name)
    }

    pub fn product(&self, i: usize, j: usize) -> &Combination<S> {
        &self.table[i][j]
    }

    /// Checks every structural invariant, returning the first violation.
    pub fn validate(&self) -> std::result::Result<(), RingViolation> {
        let max = 2 * self.dimension;
        for (i, b) in self.basis.iter().enumerate() {
            if b.degree % 2 != 0 {
                return Err(RingViolation::OddDegree(b.name.clone()));
            }
            if b.degree > max {
                return Err(RingViolation::DegreeOutOfRange {
                    symbol: b.name.clone(),
                    degree: b.degree,
                    max,
                });
            }
            if self.basis[..i].iter().any(|o| o.name == b.name) {
                return Err(RingViolation::DuplicateSymbol(b.name.clone()));
            }
        }
        let units: Vec<usize> = (0..self.len()).filter(|&i| self.basis[i].degree == 0).collect();
        let unit = match units[..] {
            [] => return Err(RingViolation::MissingUnit),
            [u] => u,
            _ => return Err(RingViolation::MultipleUnits),
        };
        for i in 0..self.len() {
            let id = vec![(i, S::one())];
            if self.table[unit][i] != id || self.table[i][unit] != id {
                return Err(RingViolation::UnitLaw(self.basis[i].name.clone()));
            }
        }
        if let Some(top) = self.top {
            let sym = self.basis.get(top).ok_or(RingViolation::MissingTop)?;
            if sym.degree != max {
                return Err(RingViolation::TopDegree {
                    symbol: sym.name.clone(),
                    degree: sym.degree,
                    expected: max,
                });
            }
            if self.basis.iter().filter(|b| b.degree == max).count() != 1 {
                return Err(RingViolation::MultipleTop(max));
            }
        }
        for i in 0..self.len() {
            for j in 0..self.len() {
                let target = self.basis[i].degree + self.basis[j].degree;
                let ok = if target > max {
                    self.table[i][j].is_empty()
                } else {
                    self.table[i][j].iter().all(|(k, _)| self.basis[*k].degree == target)
                };
                if !ok {
                    return Err(RingViolation::DegreeAdditivity {
                        left: self.basis[i].name.clone(),
                        right: self.basis[j].name.clone(),
                    });
                }
            }
        }
        for i in 0..self.len() {
            for j in (i + 1)..self.len() {
                if self.table[i][j] != self.table[j][i] {
                    return Err(RingViolation::NonCommutative {
                        left: self.basis[i].name.clone(),
                        right: self.basis[j].name.clone(),
                    });
                }
            }
        }
        for i in 0..self.len() {
            for j in 0..self.len() {
                for l in 0..self.len() {
                    if i == unit || j == unit || l == unit {
                        continue;
                    }
                    let d = self.basis[i].degree + self.basis[j].degree + self.basis[l].degree;
                    if d > max {
                        continue;
                    }
                    let left = self.combo_times_basis(&self.table[i][j], l);
                    let right = self.basis_times_combo(i, &self.table[j][l]);
                    if left != right {
                        return Err(RingViolation::NonAssociative(
                            self.basis[i].name.clone(),
                            self.basis[j].name.clone(),
                            self.basis[l].name.clone(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    fn combo_times_basis(&self, combo: &Combination<S>, l: usize) -> Combination<S> {
        let mut out = Vec::new();
        for (k, c) in combo {
            for (m, d) in &self.table[*k][l] {
                out.push((*m, c.clone() * d.clone()));
            }
        }
        normalize(out)
    }

    fn basis_times_combo(&self, i: usize, combo: &Combination<S>) -> Combination<S> {
        let mut out = Vec::new();
        for (k, c) in combo {
            for (m, d) in &self.table[i][*k] {
                out.push((*m, c.clone() * d.clone()));
            }
        }
        normalize(out)
    }
}

fn enumerate_monomials(
    generators: &[(&str, u32)],
    idx: usize,
    budget: u32,
    current: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if idx == generators.len() {
        out.push(current.clone());
        return;
    }
    let d = generators[idx].1;
    for e in 0..=(budget / d) {
        current[idx] = e;
        enumerate_monomials(generators, idx + 1, budget - e * d, current, out);
    }
    current[idx] = 0;
}

fn monomial_name(generators: &[(&str, u32)], exps: &[u32]) -> String {
    let parts: Vec<String> = generators
        .iter()
        .zip(exps)
        .filter(|(_, &e)| e > 0)
        .map(|((name, _), &e)| if e == 1 { name.to_string() } else { format!("{name}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Künneth product of two presentations (even classes only, so no signs).
///
/// Symbols are named `a*b`, dropping unit factors. When the two factors share
/// a non-unit symbol name, left names get the suffix `_1` and right names `_2`.
pub fn product_ring<S: Scalar>(
    p: &RingPresentation<S>,
    q: &RingPresentation<S>,
) -> Result<RingPresentation<S>> {
    let (pu, qu) = (p.unit(), q.unit());
    let clash = p
        .basis
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != pu)
        .any(|(_, a)| q.basis.iter().enumerate().any(|(j, b)| j != qu && a.name == b.name));
    let label = |name: &str, suffix: &str| {
        if clash {
            format!("{name}_{suffix}")
        } else {
            name.to_string()
        }
    };
    let width = q.len();
    let idx = |i: usize, j: usize| i * width + j;
    let mut basis = Vec::with_capacity(p.len() * q.len());
    for (i, a) in p.basis.iter().enumerate() {
        for (j, b) in q.basis.iter().enumerate() {
            let name = match (i == pu, j == qu) {
                (true, true) => a.name.clone(),
                (true, false) => label(&b.name, "2"),
                (false, true) => label(&a.name, "1"),
                (false, false) => format!("{}*{}", label(&a.name, "1"), label(&b.name, "2")),
            };
            basis.push(BasisSymbol::new(name, a.degree + b.degree));
        }
    }
    let mut products = Vec::new();
    for i1 in 0..p.len() {
        for j1 in 0..q.len() {
            for i2 in 0..p.len() {
                for j2 in 0..q.len() {
                    let mut combo = Vec::new();
                    for (a, ca) in &p.table[i1][i2] {
                        for (b, cb) in &q.table[j1][j2] {
                            combo.push((idx(*a, *b), ca.clone() * cb.clone()));
                        }
                    }
                    products.push((idx(i1, j1), idx(i2, j2), combo));
                }
            }
        }
    }
    let top = match (p.top, q.top) {
        (Some(a), Some(b)) => Some(idx(a, b)),
        _ => None,
    };
    RingPresentation::new(p.dimension + q.dimension, basis, products, top)
}

/// Pulls an element of the left factor back to `product_ring(left, right)`.
pub fn pull_left<S: Scalar>(
    elem: &RingElement<S>,
    right: &RingPresentation<S>,
    product: &Arc<RingPresentation<S>>,
) -> RingElement<S> {
    let mut out = RingElement::zero(product);
    for (i, c) in elem.coeffs.iter().enumerate() {
        out.coeffs[i * right.len() + right.unit()] = c.clone();
    }
    out
}

/// Pulls an element of the right factor back to `product_ring(left, right)`.
pub fn pull_right<S: Scalar>(
    left: &RingPresentation<S>,
    elem: &RingElement<S>,
    product: &Arc<RingPresentation<S>>,
) -> RingElement<S> {
    let width = elem.ring.len();
    let mut out = RingElement::zero(product);
    for (j, c) in elem.coeffs.iter().enumerate() {
        out.coeffs[left.unit() * width + j] = c.clone();
    }
    out
}

/// Element of a presentation: dense coefficients over the basis.
#[derive(Clone, Debug)]
pub struct RingElement<S> {
    ring: Arc<RingPresentation<S>>,
    coeffs: Vec<S>,
}

impl<S: Scalar> PartialEq for RingElement<S> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.coeffs == other.coeffs
    }
}

pub(crate) fn same_ring<S: Scalar>(a: &Arc<RingPresentation<S>>, b: &Arc<RingPresentation<S>>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl<S: Scalar> RingElement<S> {
    pub fn zero(ring: &Arc<RingPresentation<S>>) -> Self {
        RingElement { ring: ring.clone(), coeffs: vec![S::zero(); ring.len()] }
    }

    pub fn one(ring: &Arc<RingPresentation<S>>) -> Self {
        Self::basis_element(ring, ring.unit())
    }

    pub fn basis_element(ring: &Arc<RingPresentation<S>>, i: usize) -> Self {
        let mut e = Self::zero(ring);
        e.coeffs[i] = S::one();
        e
    }

    pub fn symbol(ring: &Arc<RingPresentation<S>>, name: &str) -> Result<Self> {
        let i = ring.index_of(name).ok_or_else(|| Error::UnknownSymbol(name.into()))?;
        Ok(Self::basis_element(ring, i))
    }

    /// Builds `sum coeff * symbol`.
    pub fn from_terms<N: AsRef<str>>(
        ring: &Arc<RingPresentation<S>>,
        terms: &[(N, S)],
    ) -> Result<Self> {
        let mut e = Self::zero(ring);
        for (name, c) in terms {
            let i = ring
                .index_of(name.as_ref())
                .ok_or_else(|| Error::UnknownSymbol(name.as_ref().into()))?;
            e.coeffs[i] = e.coeffs[i].clone() + c.clone();
        }
        Ok(e)
    }

    pub fn from_int(ring: &Arc<RingPresentation<S>>, v: i64) -> Self {
        Self::one(ring).scale(&S::from_int(v))
    }

    pub fn ring(&self) -> &Arc<RingPresentation<S>> {
        &self.ring
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, name: &str) -> Option<&S> {
        self.ring.index_of(name).map(|i| &self.coeffs[i])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, s: &S) -> Self {
        RingElement {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|c| c.clone() * s.clone()).collect(),
        }
    }

    /// Component of cohomological degree `degree`.
    pub fn homogeneous(&self, degree: u32) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&self.ring.basis)
            .map(|(c, b)| if b.degree == degree { c.clone() } else { S::zero() })
            .collect();
        RingElement { ring: self.ring.clone(), coeffs }
    }

    /// Whether every nonzero term has cohomological degree `degree`.
    pub fn is_homogeneous_of(&self, degree: u32) -> bool {
        self.coeffs
            .iter()
            .zip(&self.ring.basis)
            .all(|(c, b)| c.is_zero() || b.degree == degree)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(RingElement {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() + b.clone()).collect(),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut coeffs = vec![S::zero(); self.ring.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.clone() * b.clone();
                for (k, c) in &self.ring.table[i][j] {
                    coeffs[*k] = coeffs[*k].clone() + ab.clone() * c.clone();
                }
            }
        }
        Ok(RingElement { ring: self.ring.clone(), coeffs })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficient of the top symbol.
    pub fn integrate(&self) -> Result<S> {
        let top = self.ring.top.ok_or(Error::NoFundamentalClass)?;
        Ok(self.coeffs[top].clone())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::PresentationMismatch)
        }
    }
}

/// Panics on a presentation mismatch; use [`RingElement::try_mul`] for the
/// checked form.
impl<S: Scalar> Mul for &RingElement<S> {
    type Output = RingElement<S>;
    fn mul(self, rhs: Self) -> RingElement<S> {
        self.try_mul(rhs).expect("ring presentation mismatch")
    }
}

impl<S: Scalar> Add for &RingElement<S> {
    type Output = RingElement<S>;
    fn add(self, rhs: Self) -> RingElement<S> {
        self.try_add(rhs).expect("ring presentation mismatch")
    }
}

impl<S: Scalar> Sub for &RingElement<S> {
    type Output = RingElement<S>;
    fn sub(self, rhs: Self) -> RingElement<S> {
        self + &(-rhs)
    }
}

impl<S: Scalar> Neg for &RingElement<S> {
    type Output = RingElement<S>;
    fn neg(self) -> RingElement<S> {
        RingElement {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<S: Scalar> fmt::Display for RingElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit = self.ring.unit();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = format!("{c}").starts_with('-');
            let magnitude = if negative { -c.clone() } else { c.clone() };
            let body = if i == unit {
                format!("{magnitude}")
            } else if magnitude.is_one() {
                self.ring.basis[i].name.clone()
            } else {
                format!("{magnitude}*{}", self.ring.basis[i].name)
            };
            match (first, negative) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
