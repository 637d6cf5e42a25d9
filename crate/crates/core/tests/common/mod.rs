#![allow(dead_code)]

use chern_core::catalog;
use chern_core::{Base, Bundle, Chern, Element, Rational, Scalar};
use rand::Rng;

pub fn q(v: i64) -> Rational {
    Rational::from_int(v)
}

pub fn qq(a: i64, b: i64) -> Rational {
    Rational::new(a.into(), b.into())
}

pub const CATALOG: &[&str] = &[
    "point",
    "pp1",
    "curve(0)",
    "curve(2)",
    "pp2",
    "abelian(2)",
    "dolgachev(1,1,3)",
    "pp1 x pp1",
    "pp1 x curve(3)",
    "pp1 x pp2",
    "curve(1) x pp2",
    "dolgachev(2,1,5) x curve(0)",
];

/// Random homogeneous class of complex degree `i` with coefficients in -3..=3.
pub fn random_class<R: Rng>(rng: &mut R, base: &Base<Rational>, i: u32) -> Element {
    let ring = base.ring();
    let mut e = Element::zero(ring);
    for (k, sym) in ring.basis().iter().enumerate() {
        if sym.degree == 2 * i {
            let c = q(rng.gen_range(-3..=3));
            e = &e + &Element::basis_element(ring, k).scale(&c);
        }
    }
    e
}

/// Random bundle of rank 1..=4 over a catalog base with total dimension at
/// most `max_n`; half the time the tangent classes are randomized too.
pub fn random_bundle<R: Rng>(rng: &mut R, max_n: u32) -> Bundle {
    loop {
        let name = CATALOG[rng.gen_range(0..CATALOG.len())];
        let base = catalog::parse::<Rational>(name).unwrap();
        let rank = rng.gen_range(1..=4u32);
        if base.dimension() + rank - 1 > max_n || base.dimension() + rank < 2 {
            continue;
        }
        let base = if rng.gen_bool(0.5) && base.dimension() > 0 {
            let classes = (1..=base.dimension()).map(|i| random_class(rng, &base, i)).collect();
            let tangent = Chern::new(base.ring(), base.dimension(), classes).unwrap();
            Base::new(base.ring().clone(), tangent).unwrap()
        } else {
            base
        };
        let classes = (1..=rank.min(base.dimension())).map(|i| random_class(rng, &base, i)).collect();
        let bundle = Chern::new(base.ring(), rank, classes).unwrap();
        return Bundle::new(base, bundle).unwrap();
    }
}
