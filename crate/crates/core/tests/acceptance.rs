//! Acceptance gate: one line per criterion, nonzero exit if any fails.

mod common;

use chern_core::cobordism::{ideal_i_formula, upper_bound};
use chern_core::{
    apply, chi_functionals, chi_y_at, euler_functional, family_chern_all, family_vector, milnor_s, partition_count,
    partitions, pontryagin_functionals, positivity_scan, Bundle, ChernPoly, Functional, Generators, ModelConfig,
    Partition, Rational, Sign, Space, WeightedTuple,
};
use chern_core::{linalg, partition::compositions};
use common::{q, qq, random_bundle};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: chern_core::Error) -> String {
    e.to_string()
}

fn oracle_equivalence() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut numbers = 0;
    let bundles = 240;
    for i in 0..bundles {
        let b = random_bundle(&mut rng, 6);
        for m in partitions(b.dimension()) {
            let lhs = b.chern_number(&m).map_err(err)?;
            let rhs = b.chern_number_oracle(&m).map_err(err)?;
            ensure(lhs == rhs, || format!("bundle #{i} (rank {}), {m}: {lhs} vs {rhs}", b.rank()))?;
            numbers += 1;
        }
    }
    Ok(format!("{bundles} bundles, {numbers} Chern numbers agree"))
}

fn closed_forms() -> Check {
    let mut count = 0;
    for k in 2..=6u32 {
        let b = Bundle::symbolic(k, 2).map_err(err)?;
        for w in [k - 1, k, k + 1] {
            for len in 1..=4usize {
                for tuple in compositions(w, len) {
                    if tuple.iter().any(|&a| a > k) {
                        continue;
                    }
                    let t = WeightedTuple::new(tuple.clone());
                    let closed = b.f_closed_form(&t).map_err(err)?;
                    ensure(closed == b.f_class(&t), || format!("k={k}, tuple {tuple:?}"))?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} tuples, k = 2..6"))
}

fn positivity() -> Check {
    let mut count = 0;
    for k in 2..=12u32 {
        for entry in positivity_scan(k).map_err(err)? {
            let all_below = entry.partition.largest() < k;
            ensure(entry.sign != Sign::Negative, || format!("k={k}, {}: negative", entry.partition))?;
            ensure((entry.sign == Sign::Positive) == all_below, || {
                format!("k={k}, {}: sign {:?}", entry.partition, entry.sign)
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} entries, k = 2..12"))
}

fn slopes() -> Check {
    let config = ModelConfig::<Rational>::default();
    let zero = q(0);
    for n in 4..=7u32 {
        let table = family_chern_all(n, &config).map_err(err)?;
        let nonzero: Vec<Partition> = table.iter().filter(|p| p.slope != zero).map(|p| p.partition.clone()).collect();
        let expected: Vec<Partition> = if n == 4 {
            vec![Partition::parse("1,1,1,1").unwrap(), Partition::parse("2,1,1").unwrap()]
        } else {
            partitions(n).into_iter().filter(|m| m.largest() <= n - 2).collect()
        };
        ensure(nonzero == expected, || format!("n={n}: nonzero slopes at {nonzero:?}"))?;
    }
    let p2 = pontryagin_functionals::<Rational>(4)
        .map_err(err)?
        .into_iter()
        .find(|(m, _)| m.parts() == [2])
        .map(|(_, f)| f)
        .ok_or("missing p_2")?;
    let expected = ChernPoly::monomial(Partition::parse("2,2").unwrap(), q(1))
        .sub(&ChernPoly::monomial(Partition::parse("3,1").unwrap(), q(2)))
        .add(&ChernPoly::monomial(Partition::single(4), q(2)));
    ensure(p2.to_poly() == expected, || format!("p_2 = {}", p2.pretty()))?;
    let values = [3, 5, 7, 9]
        .iter()
        .map(|&qv| family_vector(qv, 4, &config).and_then(|v| apply(&p2, &v)))
        .collect::<Result<Vec<_>, _>>()
        .map_err(err)?;
    ensure(values.iter().all(|v| *v == values[0]), || format!("p_2 values {values:?}"))?;
    Ok(format!("n = 4..7 slope supports exact; p_2(X_q) = {}", values[0]))
}

fn q_linearity() -> Check {
    let config = ModelConfig::<Rational>::default();
    let mut count = 0;
    for n in 4..=7u32 {
        let vs = [3, 5, 7, 9]
            .iter()
            .map(|&qv| family_vector(qv, n, &config))
            .collect::<Result<Vec<_>, _>>()
            .map_err(err)?;
        for m in partitions(n) {
            let y: Vec<Rational> = vs.iter().map(|v| v.get(&m)).collect();
            // Equally spaced samples: degree <= 1 iff all second differences vanish.
            for i in 0..2 {
                let second = y[i + 2].clone() - y[i + 1].clone() * q(2) + y[i].clone();
                ensure(second == q(0), || format!("n={n}, {m}: values {y:?}"))?;
            }
            count += 1;
        }
    }
    Ok(format!("{count} partitions, q in {{3,5,7,9}}"))
}

fn decomposition() -> Check {
    let config = ModelConfig::<Rational>::default();
    let mut summary = Vec::new();
    for n in 4..=8u32 {
        let space = Space::new(n, &config.polarization).map_err(err)?;
        let coords = [3, 5, 7]
            .iter()
            .map(|&qv| family_vector(qv, n, &config).and_then(|v| space.decompose(&v)))
            .collect::<Result<Vec<_>, _>>()
            .map_err(err)?;
        let special = Partition::new(vec![n - 1, 1]).unwrap();
        let mut g = Vec::new();
        for (i, (m, c3)) in coords[0].iter().enumerate() {
            let c5 = &coords[1][i].1;
            let c7 = &coords[2][i].1;
            if *m == special {
                let d1 = c5.clone() - c3.clone();
                let d2 = c7.clone() - c5.clone();
                ensure(d1 == d2, || format!("n={n}: g_n not affine: {c3}, {c5}, {c7}"))?;
                ensure(d1 != q(0), || format!("n={n}: g_n constant"))?;
                g = vec![c3.clone(), c5.clone(), c7.clone()];
            } else {
                ensure(c3 == c5 && c5 == c7, || format!("n={n}, {m}: {c3}, {c5}, {c7}"))?;
            }
        }
        ensure(!g.is_empty(), || format!("n={n}: missing (n-1,1) coordinate"))?;
        summary.push(format!("g_{n} slope {}", (g[1].clone() - g[0].clone()) / q(2)));
    }
    Ok(summary.join(", "))
}

fn ideal_ranks() -> Check {
    for n in 1..=12u32 {
        let space = Space::new(n, &q(2)).map_err(err)?;
        let rank = space.ideal_slice_i().map_err(err)?.rank as i64;
        ensure(rank == ideal_i_formula(n), || format!("n={n}: rank {rank}, formula {}", ideal_i_formula(n)))?;
        ensure(rank + upper_bound(n) == partition_count(n) as i64, || format!("n={n}: bound not complementary"))?;
    }
    let report = Space::new(4, &q(2)).map_err(err)?.span_report().map_err(err)?;
    ensure(report.upper_bound == 4, || format!("n=4 bound {}", report.upper_bound))?;
    ensure(report.sum_dim == 4, || format!("n=4 chi+Pontryagin dim {}", report.sum_dim))?;
    let bounds: Vec<String> = (4..=12).map(|n| format!("{}", upper_bound(n))).collect();
    Ok(format!("n = 1..12 ranks match; bounds n=4..12: {}", bounds.join(" ")))
}

fn basis_integrity() -> Check {
    let gens = Generators::<Rational>::new(10, &q(2)).map_err(err)?;
    let mut milnor = Vec::new();
    for n in 1..=10u32 {
        let space = Space::with_generators(n, gens.clone()).map_err(err)?;
        ensure(space.matrix_rank() == partition_count(n) as usize, || format!("n={n}: rank {}", space.matrix_rank()))?;
        let s = apply(&milnor_s(n).map_err(err)?, gens.generator(n).ok_or("missing generator")?).map_err(err)?;
        ensure(s != q(0), || format!("s_{n}(alpha_{n}) = 0"))?;
        milnor.push(s.to_string());
    }
    Ok(format!("full rank n = 1..10; s_n(alpha_n) = {}", milnor.join(" ")))
}

fn genus() -> Check {
    let chi2 = chi_functionals::<Rational>(2).map_err(err)?;
    let todd2 = ChernPoly::chern(1).mul(&ChernPoly::chern(1)).add(&ChernPoly::chern(2)).scale(&qq(1, 12));
    ensure(chi2[0].to_poly() == todd2, || format!("chi^0 = {}", chi2[0].pretty()))?;
    let p1 = &pontryagin_functionals::<Rational>(2).map_err(err)?[0].1;
    ensure(chi_y_at::<Rational>(2, &q(1)).map_err(err)? == p1.scale(&qq(1, 3)), || "signature at n=2".into())?;
    for n in 1..=6u32 {
        ensure(chi_y_at::<Rational>(n, &q(-1)).map_err(err)? == euler_functional(n), || format!("euler at n={n}"))?;
    }
    let chi4: Vec<Vec<Rational>> = chi_functionals::<Rational>(4).map_err(err)?.iter().map(Functional::dense).collect();
    let p = |s: &str| Partition::parse(s).unwrap();
    let special = ChernPoly::monomial(p("2,2"), q(3))
        .add(&ChernPoly::monomial(p("2,1,1"), q(4)))
        .sub(&ChernPoly::monomial(p("1,1,1,1"), q(1)));
    let target: Vec<Vec<Rational>> = vec![
        Functional::indicator(&p("4")).dense(),
        Functional::indicator(&p("3,1")).dense(),
        Functional::from_poly(4, &special).map_err(err)?.dense(),
    ];
    ensure(linalg::rank(&target) == 3 && linalg::rank(&chi4) == 3, || "n=4 span dimensions".into())?;
    ensure(linalg::contained(&chi4, &target) && linalg::contained(&target, &chi4), || "n=4 chi span differs".into())?;
    ensure(!linalg::in_span(&chi4, &Functional::indicator(&p("2,2")).dense()), || "c_2^2 in chi span".into())?;
    Ok("Todd, signature, Euler and n=4 span identities hold".into())
}

fn span_corollaries() -> Check {
    let mut dims = Vec::new();
    for n in 1..=8u32 {
        let r = Space::new(n, &q(2)).map_err(err)?.span_report().map_err(err)?;
        let mut expected = vec![Partition::single(n)];
        if n >= 2 {
            expected.push(Partition::new(vec![n - 1, 1]).unwrap());
        }
        expected.sort();
        ensure(r.chi_members == expected, || format!("n={n}: chi members {:?}", r.chi_members))?;
        if n == 4 {
            let want: Vec<Partition> = ["2,2", "3,1", "4"].iter().map(|s| Partition::parse(s).unwrap()).collect();
            ensure(r.sum_members == want, || format!("n=4: members {:?}", r.sum_members))?;
        }
        if n % 2 == 0 && n >= 4 {
            ensure(r.intersection_dim == 1, || format!("n={n}: intersection {}", r.intersection_dim))?;
            dims.push(format!("n={n}: {}", r.intersection_dim));
        }
    }
    Ok(format!("chi members {{c_n, c_1c_(n-1)}} for n <= 8; signature intersection {}", dims.join(", ")))
}

fn ideal_comparison() -> Check {
    let gens = Generators::<Rational>::new(12, &q(2)).map_err(err)?;
    for n in 3..=12u32 {
        let space = Space::with_generators(n, gens.clone()).map_err(err)?;
        let (sub, eq) = space.compare_ideals().map_err(err)?;
        ensure(sub, || format!("n={n}: I not contained in J"))?;
        ensure(eq == (n == 4), || format!("n={n}: equality {eq}"))?;
    }
    for n in 1..=8u32 {
        let r = Space::with_generators(n, gens.clone()).map_err(err)?.span_report().map_err(err)?;
        ensure(r.annihilates_j, || format!("n={n}: functional nonzero on J"))?;
        let bound = partition_count(n) as usize - r.j_rank;
        ensure(r.sum_dim <= bound, || format!("n={n}: span dim {} exceeds {bound}", r.sum_dim))?;
    }
    Ok("I ⊆ J for n = 3..12, equal only at n = 4; J annihilated for n <= 8".into())
}

fn main() {
    let criteria: [(&str, fn() -> Check); 11] = [
        ("oracle equivalence", oracle_equivalence),
        ("closed forms", closed_forms),
        ("positivity", positivity),
        ("family slopes", slopes),
        ("q-linearity", q_linearity),
        ("decomposition", decomposition),
        ("ideal ranks", ideal_ranks),
        ("basis integrity", basis_integrity),
        ("genus machinery", genus),
        ("span corollaries", span_corollaries),
        ("ideal comparison", ideal_comparison),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({secs:.2}s): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({secs:.2}s): {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
