use crate::config::{Format, JobConfig, Task};
use crate::error::CliError;
use serde::Serialize;
use skewcodes::bounds::{mds_search, verify_bound_general, BoundOutcome, BoundParams, SearchRecord};
use skewcodes::code::{
    decompose, dual_code, enumerate_generators, minimum_distance, CodeRecord, DecompositionReport, DualMethod,
    SkewGCCode,
};
use skewcodes::factor::FactorRecord;
use skewcodes::poly::is_invariant;
use skewcodes::pseudo_linear::{matrix_minimal_poly, semilinear_minimal_poly, theta_conjugate_product};
use skewcodes::{extend_field, parse_poly, Automorphism, Elem, Field, MatFq, PseudoLinearMap, RingCtx, SkewPoly};
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// Runs a job and returns the report text.
pub fn execute(config: &JobConfig) -> Result<String, CliError> {
    match config.jobs {
        Some(0) => Err(CliError::usage("--jobs must be at least 1")),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(j).build().map_err(CliError::io)?;
            pool.install(|| dispatch(config))
        }
        None => dispatch(config),
    }
}

/// Runs a job and writes the report to `config.out`, or returns it for printing.
pub fn execute_to_output(config: &JobConfig) -> Result<Option<String>, CliError> {
    let text = execute(config)?;
    match &config.out {
        Some(path) => {
            std::fs::write(path, text).map_err(CliError::io)?;
            Ok(None)
        }
        None => Ok(Some(text)),
    }
}

fn build_field(config: &JobConfig) -> Result<Field, CliError> {
    let spec = &config.field;
    Ok(Field::new(spec.p, spec.s, spec.modulus.as_deref())?)
}

fn build_ring(config: &JobConfig) -> Result<RingCtx, CliError> {
    let field = build_field(config)?;
    let beta = field.parse(&config.beta)?;
    Ok(RingCtx::new(&field, config.theta_t, beta)?)
}

fn dispatch(config: &JobConfig) -> Result<String, CliError> {
    let budget = config.budget as u128;
    match &config.task {
        Task::MdsSearch { n } => mds(config, *n, budget),
        Task::Enumerate { f } => enumerate(config, f, budget),
        Task::Decompose { f } => decomposition(config, f),
        Task::Dual { f, g } => dual(config, f, g),
        Task::Minpoly { matrix } => minpoly(config, matrix),
        Task::Bound { f, g, beta, ext, l, cs, ss, delta, distance } => {
            let params = BoundArgs { f, g, beta, ext: *ext, l: *l, cs, ss, delta: *delta, distance: *distance };
            bound(config, &params, budget)
        }
    }
}

fn json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value).map_err(CliError::io)?;
    s.push('\n');
    Ok(s)
}

fn csv_text(header: &[&str], rows: &[Vec<String>]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(CliError::io)?;
    for r in rows {
        w.write_record(r).map_err(CliError::io)?;
    }
    String::from_utf8(w.into_inner().map_err(CliError::io)?).map_err(CliError::io)
}

fn matrix_rows(m: &MatFq) -> Vec<Vec<String>> {
    m.to_string_rows()
}

fn matrix_pretty(m: &MatFq, indent: &str) -> String {
    let rows = matrix_rows(m);
    let width = rows.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r.iter().map(|c| format!("{c:>width$}")).collect();
        let _ = writeln!(out, "{indent}[ {} ]", cells.join(" "));
    }
    out
}

fn poly(ctx: &RingCtx, text: &str, what: &str) -> Result<SkewPoly, CliError> {
    parse_poly(ctx, text).map_err(|e| CliError::usage(format!("--{what}: {e}")))
}

fn monic_poly(ctx: &RingCtx, text: &str, what: &str) -> Result<SkewPoly, CliError> {
    let p = poly(ctx, text, what)?;
    if !p.is_monic() {
        return Err(CliError::usage(format!("--{what} must be monic, got {}", p.pretty())));
    }
    Ok(p)
}

// mds-search

#[derive(Serialize)]
struct SearchRow {
    #[serde(flatten)]
    record: SearchRecord,
    /// How `d` was obtained.
    distance_source: &'static str,
}

fn mds(config: &JobConfig, n: usize, budget: u128) -> Result<String, CliError> {
    let ctx = build_ring(config)?;
    let q = ctx.field().q() as usize;
    if n < 2 || n + 1 > q {
        return Err(CliError::usage(format!("--n must satisfy 2 <= n <= q - 1 = {}", q - 1)));
    }
    let rows = mds_search(&ctx, n, budget)?;
    let records: Vec<SearchRecord> = rows.iter().filter(|r| r.is_mds()).map(|r| r.record()).collect();
    match config.format {
        Format::Json => json(
            &records.into_iter().map(|record| SearchRow { record, distance_source: "exhaustive" }).collect::<Vec<_>>(),
        ),
        Format::Csv => {
            let rows: Vec<Vec<String>> = records
                .iter()
                .map(|r| {
                    let a = if r.constacyclic_a.is_empty() { "none".to_string() } else { r.constacyclic_a.join(" ") };
                    vec![r.q.to_string(), r.n.to_string(), r.k.to_string(), r.d.to_string(), r.g.clone(), a]
                })
                .collect();
            csv_text(&["q", "n", "k", "d", "g", "constacyclic_a"], &rows)
        }
        Format::Pretty => {
            let mut out = String::new();
            let _ = writeln!(out, "{:>3} | {:>2} | {:>2} | {:>2} | {:<40} | a", "q", "n", "k", "d", "g");
            for r in &records {
                let a = if r.constacyclic_a.is_empty() { "∄".to_string() } else { r.constacyclic_a.join(", ") };
                let _ = writeln!(out, "{:>3} | {:>2} | {:>2} | {:>2} | {:<40} | {a}", r.q, r.n, r.k, r.d, r.g);
            }
            Ok(out)
        }
    }
}

// enumerate

#[derive(Serialize)]
struct SpectrumEntry {
    n: usize,
    k: usize,
    d: usize,
    generators: usize,
}

#[derive(Serialize)]
struct EnumerateReport {
    generator_count: usize,
    distinct_codes: usize,
    all_mds: bool,
    spectrum: Vec<SpectrumEntry>,
    codes: Vec<CodeRecord>,
}

fn enumerate(config: &JobConfig, f: &str, budget: u128) -> Result<String, CliError> {
    let ctx = build_ring(config)?;
    let f = monic_poly(&ctx, f, "f")?;
    let gens = enumerate_generators(&f, budget)?;
    // scalar multiples of one divisor give the same code
    let mut codes: BTreeMap<Vec<Elem>, (SkewGCCode, usize)> = BTreeMap::new();
    let mut per_gen = Vec::with_capacity(gens.len());
    for g in &gens {
        let m = g.monic()?;
        if !codes.contains_key(m.coeffs()) {
            let code = SkewGCCode::new(&m, &f)?;
            let d = minimum_distance(&code, budget)?;
            codes.insert(m.coeffs().to_vec(), (code, d));
        }
        let (code, d) = &codes[m.coeffs()];
        per_gen.push((g.clone(), code.length(), code.dimension(), *d));
    }
    let mut spectrum: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
    for (_, n, k, d) in &per_gen {
        *spectrum.entry((*k, *n, *d)).or_default() += 1;
    }
    let mut records: Vec<CodeRecord> =
        codes.values().map(|(c, d)| CodeRecord::from_code(c, *d)).collect::<skewcodes::Result<_>>()?;
    records.sort_by(|a, b| (a.k, &a.g).cmp(&(b.k, &b.g)));
    let all_mds = per_gen.iter().all(|(_, n, k, d)| *d == n - k + 1);
    let report = EnumerateReport {
        generator_count: per_gen.len(),
        distinct_codes: codes.len(),
        all_mds,
        spectrum: spectrum.iter().map(|(&(k, n, d), &c)| SpectrumEntry { n, k, d, generators: c }).collect(),
        codes: records,
    };
    match config.format {
        Format::Json => json(&report),
        Format::Csv => {
            let rows: Vec<Vec<String>> = per_gen
                .iter()
                .map(|(g, n, k, d)| {
                    vec![n.to_string(), k.to_string(), d.to_string(), g.pretty(), (*d == n - k + 1).to_string()]
                })
                .collect();
            csv_text(&["n", "k", "d", "g", "mds"], &rows)
        }
        Format::Pretty => {
            let mut out = String::new();
            for (g, n, k, d) in &per_gen {
                let _ = writeln!(out, "Code of type: [{n}, {k}, {d}]   g = {}", g.pretty());
            }
            let mds = per_gen.iter().filter(|(_, n, k, d)| *d == n - k + 1).count();
            let _ = writeln!(out, "generators: {}", report.generator_count);
            let _ = writeln!(out, "distinct codes: {}", report.distinct_codes);
            let _ = writeln!(out, "MDS: {mds} of {}", report.generator_count);
            for e in &report.spectrum {
                let _ = writeln!(out, "  [{}, {}, {}]: {}", e.n, e.k, e.d, e.generators);
            }
            Ok(out)
        }
    }
}

// decompose

#[derive(Serialize)]
struct ComponentReport {
    factor: String,
    multiplicity: u32,
    dimension: usize,
    basis: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct DecomposeReport {
    f: String,
    factorization: Vec<FactorRecord>,
    components: Vec<ComponentReport>,
    checks: DecompositionReport,
}

fn decomposition(config: &JobConfig, f: &str) -> Result<String, CliError> {
    let ctx = build_ring(config)?;
    let f = monic_poly(&ctx, f, "f")?;
    if !is_invariant(&f)? {
        return Err(CliError::precondition(format!(
            "{} does not generate a two-sided ideal (R f != f R), so its factor kernels need not split GF(q)^n",
            f.pretty()
        )));
    }
    let dec = decompose(&f)?;
    let checks = dec.verify()?;
    let report = DecomposeReport {
        f: f.pretty(),
        factorization: dec.factorization.records(),
        components: dec
            .components
            .iter()
            .map(|c| ComponentReport {
                factor: c.factor.pretty(),
                multiplicity: c.multiplicity,
                dimension: c.subspace.rows(),
                basis: matrix_rows(&c.subspace),
            })
            .collect(),
        checks,
    };
    match config.format {
        Format::Json => json(&report),
        Format::Csv => {
            let mut rows = Vec::new();
            for (i, c) in report.components.iter().enumerate() {
                for (j, r) in c.basis.iter().enumerate() {
                    let mut row =
                        vec![(i + 1).to_string(), c.factor.clone(), c.multiplicity.to_string(), j.to_string()];
                    row.push(r.join(" "));
                    rows.push(row);
                }
            }
            csv_text(&["component", "factor", "multiplicity", "row", "entries"], &rows)
        }
        Format::Pretty => {
            let mut out = String::new();
            let fac: Vec<String> = report
                .factorization
                .iter()
                .map(|r| {
                    if r.multiplicity == 1 {
                        format!("({})", r.factor)
                    } else {
                        format!("({})^{}", r.factor, r.multiplicity)
                    }
                })
                .collect();
            let _ = writeln!(out, "f = {} = {}", report.f, fac.join(" "));
            for (i, c) in dec.components.iter().enumerate() {
                let power = match c.multiplicity {
                    1 => format!("({})", c.factor.pretty()),
                    a => format!("({})^{a}", c.factor.pretty()),
                };
                let _ = writeln!(out, "U_{} = ker {power}(T_f), dimension {}", i + 1, c.subspace.rows());
                out.push_str(&matrix_pretty(&c.subspace, "  "));
            }
            let ch = &report.checks;
            let _ = writeln!(out, "direct sum: {}", ch.direct_sum);
            let _ =
                writeln!(out, "dimensions match multiplicity * degree: {}", ch.dimensions == ch.expected_dimensions);
            let _ = writeln!(out, "e_i^2 = e_i: {}", ch.idempotent);
            let _ = writeln!(out, "e_i e_j = 0 (i != j): {}", ch.orthogonal);
            let _ = writeln!(out, "sum e_i = id: {}", ch.sum_is_identity);
            let _ = writeln!(out, "e_i kills U_j (i != j): {}", ch.kills_other_summands);
            let _ = writeln!(out, "fixed space of e_i is U_i: {}", ch.fixed_space_is_summand);
            Ok(out)
        }
    }
}

// dual

#[derive(Serialize)]
struct DualReport {
    n: usize,
    k: usize,
    method: DualMethod,
    matrix: Vec<Vec<String>>,
}

fn dual(config: &JobConfig, f: &str, g: &str) -> Result<String, CliError> {
    let ctx = build_ring(config)?;
    let f = monic_poly(&ctx, f, "f")?;
    let g = monic_poly(&ctx, g, "g")?;
    let code = SkewGCCode::new(&g, &f)?;
    let d = dual_code(&code)?;
    let report = DualReport { n: code.length(), k: code.dimension(), method: d.method, matrix: matrix_rows(&d.matrix) };
    match config.format {
        Format::Json => json(&report),
        Format::Csv => {
            let header: Vec<String> = (0..report.n).map(|j| format!("c{j}")).collect();
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            csv_text(&header, &report.matrix)
        }
        Format::Pretty => {
            let method = match d.method {
                DualMethod::Cofactor => "cofactor columns",
                DualMethod::NullSpace => "null space",
            };
            let mut out = format!("dual of [{}, {}] code ({method}):\n", report.n, report.k);
            out.push_str(&matrix_pretty(&d.matrix, "  "));
            Ok(out)
        }
    }
}

// minpoly

#[derive(Serialize)]
struct MinpolyReport {
    theta_order: u32,
    m_b: String,
    m_t: String,
    m_t_coeffs: Vec<String>,
}

fn minpoly(config: &JobConfig, matrix: &str) -> Result<String, CliError> {
    let field = build_field(config)?;
    let m = MatFq::parse(&field, matrix)?;
    let theta = Automorphism::new(&field, config.theta_t);
    let t = PseudoLinearMap::new(m, theta.clone(), Elem::ZERO)?;
    let m_t = semilinear_minimal_poly(&t)?;
    let m_b = matrix_minimal_poly(&theta_conjugate_product(t.matrix(), &theta)?)?;
    let report = MinpolyReport {
        theta_order: theta.order(),
        m_b: m_b.pretty(),
        m_t: m_t.pretty(),
        m_t_coeffs: m_t.coeffs().iter().map(|&c| field.format(c)).collect(),
    };
    match config.format {
        Format::Json => json(&report),
        Format::Csv => csv_text(
            &["theta_order", "m_b", "m_t"],
            &[vec![report.theta_order.to_string(), report.m_b.clone(), report.m_t.clone()]],
        ),
        Format::Pretty => Ok(format!("{}\n", report.m_t)),
    }
}

// bound

struct BoundArgs<'a> {
    f: &'a str,
    g: &'a str,
    beta: &'a str,
    ext: u32,
    l: u64,
    cs: &'a [u64],
    ss: &'a [u64],
    delta: usize,
    distance: bool,
}

#[derive(Serialize)]
struct BoundReport {
    n: usize,
    k: usize,
    outcome: BoundOutcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    minimum_distance: Option<usize>,
}

fn bound(config: &JobConfig, a: &BoundArgs, budget: u128) -> Result<String, CliError> {
    let ctx = build_ring(config)?;
    let f = monic_poly(&ctx, a.f, "f")?;
    let g = monic_poly(&ctx, a.g, "g")?;
    let code = SkewGCCode::new(&g, &f)?;
    let (ext, emb) = extend_field(ctx.field(), a.ext)?;
    let beta = ext.parse(a.beta)?;
    let params = BoundParams { beta, emb, l: a.l, cs: a.cs.to_vec(), ss: a.ss.to_vec(), delta: a.delta };
    let outcome = verify_bound_general(&g, code.length(), &params)?;
    let minimum_distance = if a.distance { Some(minimum_distance(&code, budget)?) } else { None };
    let report = BoundReport { n: code.length(), k: code.dimension(), outcome, minimum_distance };
    match config.format {
        Format::Json => json(&report),
        Format::Csv => {
            let (status, detail) = match &report.outcome {
                BoundOutcome::Certified(c) => ("certified", format!("d >= {}", c.claimed_bound)),
                BoundOutcome::Failed(e) => ("failed", e.to_string()),
            };
            let d = report.minimum_distance.map(|d| d.to_string()).unwrap_or_default();
            csv_text(
                &["n", "k", "status", "detail", "minimum_distance"],
                &[vec![report.n.to_string(), report.k.to_string(), status.into(), detail, d]],
            )
        }
        Format::Pretty => {
            let mut out = match &report.outcome {
                BoundOutcome::Certified(c) => format!(
                    "certified: d >= {} (beta = {}, l = {}, c = {:?}, s = {:?}, delta = {})\n",
                    c.claimed_bound, c.beta, c.l, c.cs, c.ss, c.delta
                ),
                BoundOutcome::Failed(e) => format!("failed: {e}\n"),
            };
            if let Some(d) = report.minimum_distance {
                let _ = writeln!(out, "minimum distance: {d}");
            }
            Ok(out)
        }
    }
}
