//! Example families: the projective bundles `X_q = ℙ(E_q)` over
//! `Y_q = S_q × C` with `S_q` a Dolgachev surface, and the cobordism
//! generators `α_n`.

use std::sync::Arc;

use serde::Serialize;

use crate::catalog;
use crate::charclass::{ChernData, ChernVector};
use crate::error::{Error, Result};
use crate::partition::{partitions, Partition};
use crate::pbundle::{Base, BundleOnBase};
use crate::ring::{product_ring, RingElement};
use crate::scalar::Scalar;

/// Numerical data of the Dolgachev subring: `w = omega^2 > 0` and
/// `t = omega·G != 0`. The surface itself has `c_1^2 = 0`, `c_2 = 12`,
/// `b_2 = 10` and an odd intersection form of type (1,9); the default
/// `w = t = 1` is realised there by `omega = e_0`, `G = e_0 - e_1`.
#[derive(Clone, Debug, PartialEq)]
pub struct DolgachevModel<S> {
    pub w: S,
    pub t: S,
}

impl<S: Scalar> DolgachevModel<S> {
    pub const C1_SQUARED: i64 = 0;
    pub const C2: i64 = 12;
    pub const B2: u32 = 10;

    pub fn new(w: S, t: S) -> Result<Self> {
        if w <= S::zero() {
            return Err(Error::pre("omega^2 must be positive"));
        }
        if t.is_zero() {
            return Err(Error::pre("omega.G must be nonzero"));
        }
        Ok(DolgachevModel { w, t })
    }
}

impl<S: Scalar> Default for DolgachevModel<S> {
    fn default() -> Self {
        DolgachevModel { w: S::one(), t: S::one() }
    }
}

/// All parameters of the example families.
#[derive(Clone, Debug, PartialEq)]
pub struct ModelConfig<S> {
    pub dolgachev: DolgachevModel<S>,
    /// Genus of the curve factor of `Y_q`.
    pub genus: u32,
    /// `theta^2` on the abelian surface used for `α_n`.
    pub polarization: S,
}

impl<S: Scalar> Default for ModelConfig<S> {
    fn default() -> Self {
        ModelConfig { dolgachev: DolgachevModel::default(), genus: 0, polarization: S::from_int(2) }
    }
}

/// A family Chern number `slope * q + intercept`.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound = "")]
pub struct FamilyChernPolynomial<S: Scalar> {
    pub partition: Partition,
    #[serde(serialize_with = "crate::schema::ser_scalar")]
    pub slope: S,
    #[serde(serialize_with = "crate::schema::ser_scalar")]
    pub intercept: S,
}

impl<S: Scalar> FamilyChernPolynomial<S> {
    pub fn at(&self, q: i64) -> S {
        self.slope.clone() * S::from_int(q) + self.intercept.clone()
    }
}

fn check_q(q: i64) -> Result<()> {
    if q < 3 || q % 2 == 0 {
        return Err(Error::pre(format!("q must be odd and >= 3, got {q}")));
    }
    Ok(())
}

/// `Y_q = S_q × C` with
/// `c_1 = (q-2)G + (2-2g)F`, `c_2 = 12 pt + (2-2g)(q-2) G F`,
/// `c_3 = (2-2g) 12 pt F`.
pub fn build_yq<S: Scalar>(q: i64, genus: u32, model: &DolgachevModel<S>) -> Result<Base<S>> {
    check_q(q)?;
    let surface = catalog::dolgachev(model.w.clone(), model.t.clone(), q)?;
    let curve = catalog::curve::<S>(genus)?;
    let ring = Arc::new(product_ring(surface.ring(), curve.ring())?);
    let sym = |name: &str| RingElement::symbol(&ring, name);
    let euler = S::from_int(2 - 2 * genus as i64);
    let shift = S::from_int(q - 2);
    let c1 = &sym("G")?.scale(&shift) + &sym("F")?.scale(&euler);
    let c2 = &sym("pt")?.scale(&S::from_int(12)) + &sym("G*F")?.scale(&(euler.clone() * shift));
    let c3 = sym("pt*F")?.scale(&(euler * S::from_int(12)));
    let tangent = ChernData::new(&ring, 3, vec![c1, c2, c3])?;
    Base::new(ring, tangent)
}

/// `E_q = (L ⊠ O_C(1)) ⊕ O^{n-3}` of rank `k = n - 2`: `c_1 = omega + F`,
/// higher classes zero.
pub fn build_eq<S: Scalar>(q: i64, n: u32, genus: u32, model: &DolgachevModel<S>) -> Result<BundleOnBase<S>> {
    if n < 4 {
        return Err(Error::pre("family requires n >= 4"));
    }
    let base = build_yq(q, genus, model)?;
    let ring = base.ring().clone();
    let c1 = &RingElement::symbol(&ring, "omega")? + &RingElement::symbol(&ring, "F")?;
    let bundle = ChernData::new(&ring, n - 2, vec![c1])?;
    BundleOnBase::new(base, bundle)
}

/// Chern numbers of `X_q`.
pub fn family_vector<S: Scalar>(q: i64, n: u32, config: &ModelConfig<S>) -> Result<ChernVector<S>> {
    build_eq(q, n, config.genus, &config.dolgachev)?.chern_vector()
}

fn line_through<S: Scalar>(m: &Partition, v3: S, v5: S, v7: S) -> Result<FamilyChernPolynomial<S>> {
    let slope = (v5.clone() - v3.clone()) / S::from_int(2);
    let intercept = v3 - slope.clone() * S::from_int(3);
    let poly = FamilyChernPolynomial { partition: m.clone(), slope, intercept };
    if poly.at(5) != v5 || poly.at(7) != v7 {
        return Err(Error::Inconsistent(format!("c_{m}(X_q) is not affine in q")));
    }
    Ok(poly)
}

/// `c_m(X_q)` as an exact affine function of `q`, from `q = 3, 5` and checked
/// at `q = 7`.
pub fn family_chern<S: Scalar>(m: &Partition, n: u32, config: &ModelConfig<S>) -> Result<FamilyChernPolynomial<S>> {
    if m.weight() != n {
        return Err(Error::DimensionMismatch { expected: n as usize, found: m.weight() as usize });
    }
    let value = |q| build_eq(q, n, config.genus, &config.dolgachev)?.chern_number(m);
    line_through(m, value(3)?, value(5)?, value(7)?)
}

/// [`family_chern`] for every partition of `n`, sharing the bundle
/// constructions.
pub fn family_chern_all<S: Scalar>(n: u32, config: &ModelConfig<S>) -> Result<Vec<FamilyChernPolynomial<S>>> {
    let v3 = family_vector(3, n, config)?;
    let v5 = family_vector(5, n, config)?;
    let v7 = family_vector(7, n, config)?;
    partitions(n).iter().map(|m| line_through(m, v3.get(m), v5.get(m), v7.get(m))).collect()
}

/// The generator `α_n`: `ℙ^1`, `ℙ^2`, and for `n >= 3` the bundle
/// `ℙ(O_A(1) ⊕ O_A^{n-2})` over an abelian surface. The first two are
/// returned as trivial bundles over a point.
pub fn alpha_generator<S: Scalar>(n: u32, polarization: &S) -> Result<BundleOnBase<S>> {
    match n {
        0 => Err(Error::pre("generators start at n = 1")),
        1 | 2 => {
            let point = catalog::point::<S>();
            let bundle = ChernData::trivial(point.ring(), n + 1)?;
            BundleOnBase::new(point, bundle)
        }
        _ => {
            let base = catalog::abelian_surface(polarization.clone())?;
            let theta = RingElement::symbol(base.ring(), "theta")?;
            let bundle = ChernData::new(base.ring(), n - 1, vec![theta])?;
            BundleOnBase::new(base, bundle)
        }
    }
}

/// Chern numbers of `X × Y`: `c_m(X × Y) = Σ c_i(X) c_j(Y)` over part-wise
/// splittings `m_t = i_t + j_t` with `|i| = dim X`.
pub fn product_chern_vector<S: Scalar>(v: &ChernVector<S>, w: &ChernVector<S>) -> ChernVector<S> {
    let (n1, n2) = (v.dimension(), w.dimension());
    ChernVector::from_fn(n1 + n2, |m| {
        let mut acc = S::zero();
        let mut left = vec![0u32; m.len()];
        split(m.parts(), 0, n1, &mut left, &mut |left| {
            let i = Partition::from_parts_lossy(left.iter().copied());
            let j = Partition::from_parts_lossy(m.parts().iter().zip(left).map(|(a, b)| a - b));
            acc = acc.clone() + v.get(&i) * w.get(&j);
        });
        acc
    })
}

fn split(parts: &[u32], idx: usize, remaining: u32, left: &mut Vec<u32>, visit: &mut impl FnMut(&[u32])) {
    if idx == parts.len() {
        if remaining == 0 {
            visit(left);
        }
        return;
    }
    for v in 0..=parts[idx].min(remaining) {
        left[idx] = v;
        split(parts, idx + 1, remaining - v, left, visit);
    }
    left[idx] = 0;
}

/// Chern vector of the point, the unit for [`product_chern_vector`].
pub fn point_vector<S: Scalar>() -> ChernVector<S> {
    ChernVector::from_fn(0, |_| S::one())
}
