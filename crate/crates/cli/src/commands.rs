use std::fmt::Write;
use std::path::Path;

use chern_core::cobordism::{ideal_i_formula, upper_bound};
use chern_core::schema::{self, BundleFile, Coeff, ModelFile, PartitionEntry, PartitionTable, RingFile};
use chern_core::{
    catalog, family_chern, family_chern_all, family_vector, partitions, positivity_scan, Bundle, Error,
    ModelConfig, Partition, Rational, Result, Space, WeightedTuple,
};
use serde_json::{json, Value};

use crate::{report, Command, Context};

/// Rendered result of a command. `failed` marks a completed check whose
/// verdict is negative (reported, then exit status 3).
pub struct Output {
    pub json: Value,
    pub table: String,
    pub failed: bool,
}

impl Output {
    fn ok(json: Value, table: String) -> Self {
        Output { json, table, failed: false }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn load_bundle(path: &Path) -> Result<Bundle> {
    schema::from_json::<BundleFile>(&read(path)?)?.to_bundle()
}

pub fn load_model(ctx: &Context, genus: Option<u32>) -> Result<ModelConfig<Rational>> {
    let file = match &ctx.model_file {
        Some(p) => schema::from_json::<ModelFile>(&read(p)?)?,
        None => ModelFile::default(),
    };
    let mut config = file.to_config()?;
    if let Some(g) = genus {
        config.genus = g;
    }
    Ok(config)
}

fn entries(coords: &[(Partition, Rational)]) -> Vec<PartitionEntry> {
    coords
        .iter()
        .map(|(m, v)| PartitionEntry { partition: m.clone(), value: Coeff::from_scalar(v) })
        .collect()
}

/// Aligned two-or-more column text table.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let mut out = String::new();
    let line = |cells: Vec<&str>, out: &mut String| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        let _ = writeln!(out, "{}", padded.join("  ").trim_end());
    };
    line(header.to_vec(), &mut out);
    for r in rows {
        line(r.iter().map(String::as_str).collect(), &mut out);
    }
    out
}

pub fn run(cmd: &Command, ctx: &Context) -> Result<Output> {
    match cmd {
        Command::Validate { input, ring } => validate(input.as_deref(), ring.as_deref()),
        Command::Segre { input, symbolic, k, n } => segre(input.as_deref(), *symbolic, *k, *n),
        Command::F { tuple, input, symbolic, k } => f_class(tuple, input.as_deref(), *symbolic, *k),
        Command::Pbundle { input, partition } => pbundle(input, partition.as_deref()),
        Command::OracleCheck { input } => oracle_check(input),
        Command::Positivity { k } => positivity(*k),
        Command::Family { n, partition, q, genus } => family(ctx, *n, partition.as_deref(), *q, *genus),
        Command::Decompose { n, q, genus, input } => decompose(ctx, *n, *q, *genus, input.as_deref()),
        Command::Ideals { n } => ideals(*n),
        Command::Spans { n } => spans(ctx, *n),
        Command::Report { n } => report::run(ctx, *n),
    }
}

fn validate(input: Option<&Path>, ring: Option<&str>) -> Result<Output> {
    let presentation = match (input, ring) {
        (Some(p), _) => {
            let ring = schema::from_json::<RingFile>(&read(p)?)?.to_unchecked::<Rational>()?;
            ring.validate()?;
            ring
        }
        (None, Some(name)) => catalog::parse::<Rational>(name)?.ring().as_ref().clone(),
        (None, None) => return Err(Error::Parse("need --input or --ring".into())),
    };
    let top = presentation.top().map(|t| presentation.basis()[t].name.clone());
    let json = json!({
        "valid": true,
        "dimension": presentation.dimension(),
        "basis_size": presentation.len(),
        "top": top,
    });
    let table = format!(
        "valid       true\ndimension   {}\nbasis size  {}\ntop         {}\n",
        presentation.dimension(),
        presentation.len(),
        top.as_deref().unwrap_or("-")
    );
    Ok(Output::ok(json, table))
}

fn bundle_or_symbolic(input: Option<&Path>, symbolic: bool, k: Option<u32>, base_dim: u32) -> Result<Bundle> {
    match (input, symbolic, k) {
        (_, true, Some(k)) => Bundle::symbolic(k, base_dim),
        (Some(p), false, _) => load_bundle(p),
        _ => Err(Error::Parse("need --input, or --symbolic with --k".into())),
    }
}

fn segre(input: Option<&Path>, symbolic: bool, k: Option<u32>, n: Option<u32>) -> Result<Output> {
    let b = bundle_or_symbolic(input, symbolic, k, n.unwrap_or(2))?;
    let classes: Vec<String> = b.segre().iter().map(|a| a.to_string()).collect();
    let rows: Vec<Vec<String>> = classes.iter().enumerate().map(|(j, s)| vec![format!("alpha_{j}"), s.clone()]).collect();
    Ok(Output::ok(json!({ "rank": b.rank(), "segre": classes }), table(&["class", "value"], &rows)))
}

fn f_class(tuple: &str, input: Option<&Path>, symbolic: bool, k: Option<u32>) -> Result<Output> {
    let t = WeightedTuple::parse(tuple)?;
    // Smallest symbolic base on which f(a) can be nonzero.
    let degree = (t.weight() + 1).saturating_sub(k.unwrap_or(1));
    let b = bundle_or_symbolic(input, symbolic, k, degree.max(1))?;
    let f = b.f_class(&t);
    let k = b.rank();
    let in_range = t.entries().iter().all(|&a| a <= k) && (k - 1..=k + 1).contains(&t.weight());
    let closed = if in_range { Some(b.f_closed_form(&t)?) } else { None };
    let agree = closed.as_ref().map(|c| c == &f);
    let json = json!({
        "k": k,
        "tuple": t.entries(),
        "f": f.to_string(),
        "closed_form": closed.as_ref().map(|c| c.to_string()),
        "agree": agree,
    });
    let mut out = Output::ok(json, format!("{f}\n"));
    out.failed = agree == Some(false);
    Ok(out)
}

fn pbundle(input: &Path, partition: Option<&str>) -> Result<Output> {
    let b = load_bundle(input)?;
    if let Some(p) = partition {
        let m = Partition::parse(p)?;
        let v = b.chern_number(&m)?;
        let json = json!({ "partition": m, "value": v.to_string() });
        return Ok(Output::ok(json, format!("{}  {v}\n", m.chern_monomial())));
    }
    let v = b.chern_vector()?;
    let rows: Vec<Vec<String>> = v.entries().map(|(m, x)| vec![m.chern_monomial(), x.to_string()]).collect();
    let json = serde_json::to_value(PartitionTable::from_vector(&v)).expect("serializable");
    Ok(Output::ok(json, table(&["chern number", "value"], &rows)))
}

fn oracle_check(input: &Path) -> Result<Output> {
    let b = load_bundle(input)?;
    let oracle = b.oracle_ring()?;
    oracle.ring().validate()?;
    let mut rows = Vec::new();
    let mut list = Vec::new();
    let mut agree = true;
    for m in partitions(b.dimension()) {
        let lhs = b.chern_number(&m)?;
        let rhs = oracle.tangent().monomial(&m).integrate()?;
        agree &= lhs == rhs;
        list.push(json!({ "partition": m, "formula": lhs.to_string(), "oracle": rhs.to_string() }));
        rows.push(vec![m.chern_monomial(), lhs.to_string(), rhs.to_string()]);
    }
    let json = json!({ "dimension": b.dimension(), "agree": agree, "entries": list });
    let mut text = table(&["chern number", "formula", "oracle"], &rows);
    let _ = writeln!(text, "agree: {agree}");
    Ok(Output { json, table: text, failed: !agree })
}

fn positivity(k: u32) -> Result<Output> {
    let scan = positivity_scan(k)?;
    let rows: Vec<Vec<String>> = scan
        .iter()
        .map(|e| vec![e.partition.to_string(), e.value.to_string(), format!("{:?}", e.sign).to_lowercase()])
        .collect();
    let json = json!({ "k": k, "entries": scan });
    Ok(Output::ok(json, table(&["partition", "value", "sign"], &rows)))
}

fn family(ctx: &Context, n: u32, partition: Option<&str>, q: Option<i64>, genus: Option<u32>) -> Result<Output> {
    let config = load_model(ctx, genus)?;
    let polys = match partition {
        Some(p) => vec![family_chern(&Partition::parse(p)?, n, &config)?],
        None => family_chern_all(n, &config)?,
    };
    if let Some(q) = q {
        // Validates q against the family's constraints.
        family_vector(q, n, &config)?;
    }
    let mut rows = Vec::new();
    let mut list = Vec::new();
    for p in &polys {
        let mut obj = json!({
            "partition": p.partition,
            "slope": p.slope.to_string(),
            "intercept": p.intercept.to_string(),
        });
        let mut row = vec![p.partition.chern_monomial(), p.slope.to_string(), p.intercept.to_string()];
        if let Some(q) = q {
            obj["value"] = json!(p.at(q).to_string());
            row.push(p.at(q).to_string());
        }
        list.push(obj);
        rows.push(row);
    }
    let json = if partition.is_some() { list.remove(0) } else { json!({ "n": n, "numbers": list }) };
    let value_header = format!("value at q={}", q.unwrap_or(0));
    let mut header = vec!["chern number", "slope", "intercept"];
    if q.is_some() {
        header.push(&value_header);
    }
    Ok(Output::ok(json, table(&header, &rows)))
}

fn decompose(ctx: &Context, n: Option<u32>, q: i64, genus: Option<u32>, input: Option<&Path>) -> Result<Output> {
    let config = load_model(ctx, genus)?;
    let v = match input {
        Some(p) => schema::from_json::<PartitionTable>(&read(p)?)?.to_vector::<Rational>()?,
        None => family_vector(q, n.expect("clap enforces --n"), &config)?,
    };
    let space = Space::new(v.dimension(), &config.polarization)?;
    let coords = space.decompose(&v)?;
    let rows: Vec<Vec<String>> = coords.iter().map(|(m, c)| vec![m.to_string(), c.to_string()]).collect();
    let json = json!({ "dimension": v.dimension(), "coordinates": entries(&coords) });
    Ok(Output::ok(json, table(&["alpha monomial", "coefficient"], &rows)))
}

fn ideals(n: u32) -> Result<Output> {
    let space = Space::new(n, &Rational::from_integer(2.into()))?;
    let rank = space.ideal_slice_i()?.rank as i64;
    let formula = ideal_i_formula(n);
    let json = json!({ "I_rank": rank, "formula": formula, "match": rank == formula });
    let table = format!(
        "rank I^n               {rank}\np(n-1) - floor((n+1)/2)  {formula}\nmatch                  {}\nupper bound            {}\n",
        rank == formula,
        upper_bound(n)
    );
    let mut out = Output::ok(json, table);
    out.failed = rank != formula;
    Ok(out)
}

fn spans(ctx: &Context, n: u32) -> Result<Output> {
    let config = load_model(ctx, None)?;
    let r = Space::new(n, &config.polarization)?.span_report()?;
    Ok(Output::ok(serde_json::to_value(&r).expect("serializable"), r.to_table()))
}
