mod common;

use chern_core::catalog;
use chern_core::{partitions, Bundle, Chern, Element, Partition, Rational, WeightedTuple};
use common::{q, random_bundle};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn permutations(v: &[u32]) -> Vec<Vec<u32>> {
    if v.len() <= 1 {
        return vec![v.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..v.len() {
        let mut rest = v.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

#[test]
fn formula_matches_oracle_on_random_bundles() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..40 {
        let b = random_bundle(&mut rng, 5);
        let oracle = b.oracle_ring().unwrap();
        assert!(oracle.ring().validate().is_ok());
        for m in partitions(b.dimension()) {
            let direct = b.chern_number(&m).unwrap();
            let via_ring = oracle.tangent().monomial(&m).integrate().unwrap();
            assert_eq!(direct, via_ring, "partition {m}");
        }
    }
}

#[test]
fn f_class_support_and_symmetry() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..25 {
        let b = random_bundle(&mut rng, 6);
        let k = b.rank();
        let n = b.dimension();
        for len in 1..=3usize {
            for total in 0..=(n + 2) {
                for tuple in chern_core::partition::compositions(total, len) {
                    let f = b.f_class(&WeightedTuple::new(tuple.clone()));
                    if total + 1 < k || total > n || tuple.contains(&k) {
                        assert!(f.is_zero(), "f{tuple:?} with k={k}, n={n}");
                    }
                    for p in permutations(&tuple) {
                        assert_eq!(b.f_class(&WeightedTuple::new(p)), f);
                    }
                }
            }
        }
    }
}

#[test]
fn closed_forms_agree_symbolically() {
    for k in 2..=6u32 {
        let b = Bundle::symbolic(k, 2).unwrap();
        for w in [k - 1, k, k + 1] {
            for len in 1..=4usize {
                for tuple in chern_core::partition::compositions(w, len) {
                    if tuple.iter().any(|&a| a > k) {
                        continue;
                    }
                    let t = WeightedTuple::new(tuple);
                    assert_eq!(b.f_closed_form(&t).unwrap(), b.f_class(&t), "k={k} {:?}", t.entries());
                }
            }
        }
    }
}

#[test]
fn twist_does_not_change_numbers_over_elliptic_curve() {
    let base = catalog::curve::<Rational>(1).unwrap();
    let f = Element::symbol(base.ring(), "F").unwrap();
    for k in 1..=4u32 {
        let numbers = |shift: i64| {
            let e = Chern::new(base.ring(), k, vec![f.scale(&q(3 + shift))]).unwrap();
            Bundle::new(base.clone(), e).unwrap().chern_vector().unwrap()
        };
        let reference = numbers(0);
        for shift in [-5, -1, 1, 2, 7] {
            assert_eq!(numbers(shift), reference, "k={k}, shift={shift}");
        }
    }
}

#[test]
fn point_base_gives_projective_space() {
    for n in 1..=5u32 {
        let point = catalog::point::<Rational>();
        let b = Bundle::new(point.clone(), Chern::trivial(point.ring(), n + 1).unwrap()).unwrap();
        let direct = catalog::projective_space::<Rational>(n).unwrap().chern_vector().unwrap();
        assert_eq!(b.chern_vector().unwrap(), direct);
    }
}

#[test]
fn product_bundles_match_catalog_products() {
    // ℙ(O^3) over ℙ^1 is ℙ^1 × ℙ^2.
    let base = catalog::projective_space::<Rational>(1).unwrap();
    let b = Bundle::new(base.clone(), Chern::trivial(base.ring(), 3).unwrap()).unwrap();
    let product = catalog::parse::<Rational>("pp1 x pp2").unwrap().chern_vector().unwrap();
    assert_eq!(b.chern_vector().unwrap(), product);
    assert_eq!(product.get(&Partition::parse("1,1,1").unwrap()), q(54));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn oracle_agrees_for_any_seed(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = random_bundle(&mut rng, 4);
        for m in partitions(b.dimension()) {
            prop_assert_eq!(b.chern_number(&m).unwrap(), b.chern_number_oracle(&m).unwrap());
        }
    }

    #[test]
    fn segre_inverts_total_class(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = random_bundle(&mut rng, 6);
        let ring = b.ring();
        let alpha = b.segre().iter().fold(Element::zero(ring), |acc, a| &acc + a);
        let product = &b.bundle().total() * &alpha;
        for d in 1..=ring.dimension() {
            prop_assert!(product.homogeneous(2 * d).is_zero());
        }
        prop_assert_eq!(product.homogeneous(0), Element::one(ring));
    }
}
