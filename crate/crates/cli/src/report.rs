//! Multi-section reproduction report, one section per dimension.

use std::fmt::Write;

use chern_core::schema::{Coeff, PartitionEntry};
use chern_core::{
    apply, family_chern_all, family_vector, milnor_s, partition_count, Error, Generators, ModelConfig, Partition,
    Rational, Result, Space, SpanReport,
};
use serde::Serialize;
use serde_json::Value;

use crate::commands::{load_model, table, Output};
use crate::Context;

const SAMPLES: [i64; 3] = [3, 5, 7];

#[derive(Serialize)]
struct SlopeRow {
    partition: Partition,
    slope: String,
    intercept: String,
}

#[derive(Serialize)]
struct Decomposition {
    /// The (n-1,1) coordinate at q = 3, 5, 7.
    g_values: Vec<String>,
    g_slope: String,
    g_intercept: String,
    /// The remaining, q-independent coordinates.
    epsilon: Vec<PartitionEntry>,
}

#[derive(Serialize)]
struct Section {
    n: u32,
    partition_count: u64,
    slopes: Vec<SlopeRow>,
    nonzero_slopes: Vec<Partition>,
    decomposition: Decomposition,
    matrix_rank: usize,
    milnor_number: String,
    spans: SpanReport,
}

#[derive(Serialize)]
struct Model {
    w: String,
    t: String,
    genus: u32,
    polarization: String,
}

fn section(n: u32, config: &ModelConfig<Rational>, gens: &Generators<Rational>) -> Result<Section> {
    let polys = family_chern_all(n, config)?;
    let zero = Rational::from_integer(0.into());
    let nonzero_slopes = polys.iter().filter(|p| p.slope != zero).map(|p| p.partition.clone()).collect();
    let slopes = polys
        .iter()
        .map(|p| SlopeRow { partition: p.partition.clone(), slope: p.slope.to_string(), intercept: p.intercept.to_string() })
        .collect();

    let space = Space::with_generators(n, gens.clone())?;
    let coords = SAMPLES
        .iter()
        .map(|&q| family_vector(q, n, config).and_then(|v| space.decompose(&v)))
        .collect::<Result<Vec<_>>>()?;
    let special = Partition::new(vec![n - 1, 1])?;
    let mut g = Vec::new();
    let mut epsilon = Vec::new();
    for (i, (m, c)) in coords[0].iter().enumerate() {
        if *m == special {
            g = coords.iter().map(|cs| cs[i].1.clone()).collect();
        } else {
            if coords.iter().any(|cs| cs[i].1 != *c) {
                return Err(Error::Inconsistent(format!("coordinate {m} depends on q")));
            }
            epsilon.push(PartitionEntry { partition: m.clone(), value: Coeff::from_scalar(c) });
        }
    }
    let step = Rational::from_integer(2.into());
    let g_slope = (g[1].clone() - g[0].clone()) / step;
    let g_intercept = g[0].clone() - g_slope.clone() * Rational::from_integer(SAMPLES[0].into());

    let alpha_n = gens.generator(n).ok_or_else(|| Error::Precondition("missing generator".into()))?;
    let milnor = apply(&milnor_s(n)?, alpha_n)?;

    Ok(Section {
        n,
        partition_count: partition_count(n),
        slopes,
        nonzero_slopes,
        decomposition: Decomposition {
            g_values: g.iter().map(ToString::to_string).collect(),
            g_slope: g_slope.to_string(),
            g_intercept: g_intercept.to_string(),
            epsilon,
        },
        matrix_rank: space.matrix_rank(),
        milnor_number: milnor.to_string(),
        spans: space.span_report()?,
    })
}

fn render(model: &Model, sections: &[Section]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# Chern-number report\nmodel: w={} t={} genus={} polarization={}",
        model.w, model.t, model.genus, model.polarization
    );
    for s in sections {
        let _ = writeln!(out, "\n## n = {}  (p(n) = {})\n", s.n, s.partition_count);
        let _ = writeln!(out, "### Chern numbers of X_q = slope*q + intercept");
        let rows: Vec<Vec<String>> = s
            .slopes
            .iter()
            .map(|r| vec![r.partition.chern_monomial(), r.slope.clone(), r.intercept.clone()])
            .collect();
        out.push_str(&table(&["chern number", "slope", "intercept"], &rows));
        let nz: Vec<String> = s.nonzero_slopes.iter().map(Partition::chern_monomial).collect();
        let _ = writeln!(out, "nonzero slopes ({}): {}\n", nz.len(), nz.join(", "));

        let d = &s.decomposition;
        let _ = writeln!(out, "### alpha-monomial decomposition of X_q");
        let _ = writeln!(
            out,
            "g_{}(q) at q=3,5,7: {}   (= {})",
            s.n,
            d.g_values.join(", "),
            affine(&d.g_slope, &d.g_intercept)
        );
        let rows: Vec<Vec<String>> = d
            .epsilon
            .iter()
            .map(|e| vec![e.partition.to_string(), coeff_text(&e.value)])
            .collect();
        let _ = writeln!(out, "epsilon (q-independent part):");
        out.push_str(&table(&["alpha monomial", "coefficient"], &rows));
        let _ = writeln!(out, "monomial matrix rank: {} / {}", s.matrix_rank, s.partition_count);
        let _ = writeln!(out, "s_n(alpha_n) = {}\n", s.milnor_number);

        let _ = writeln!(out, "### spans and ideals");
        out.push_str(&s.spans.to_table());
    }
    out
}

fn affine(slope: &str, intercept: &str) -> String {
    match intercept.strip_prefix('-') {
        Some(abs) => format!("{slope}*q - {abs}"),
        None => format!("{slope}*q + {intercept}"),
    }
}

fn coeff_text(c: &Coeff) -> String {
    match c {
        Coeff::Int(v) => v.to_string(),
        Coeff::Text(t) => t.clone(),
    }
}

pub fn run(ctx: &Context, n_max: u32) -> Result<Output> {
    if !(4..=12).contains(&n_max) {
        return Err(Error::Precondition(format!("report needs 4 <= n <= 12, got {n_max}")));
    }
    let config = load_model(ctx, None)?;
    let gens = Generators::new(n_max, &config.polarization)?;
    let sections = (4..=n_max).map(|n| section(n, &config, &gens)).collect::<Result<Vec<_>>>()?;
    let model = Model {
        w: config.dolgachev.w.to_string(),
        t: config.dolgachev.t.to_string(),
        genus: config.genus,
        polarization: config.polarization.to_string(),
    };
    let text = render(&model, &sections);
    let json: Value = serde_json::json!({ "model": model, "sections": sections });
    Ok(Output { json, table: text, failed: false })
}
