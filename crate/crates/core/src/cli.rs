//! The `yhdn` command line: enumeration, representation dumps, verification
//! suites and Schur elements.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::{jm_commute_check, trace_form_check};
use crate::combinatorics::{
    all_standard_dtableaux, enumerate_content_arrays, enumerate_dpartitions, enumerate_standard_dtableaux, DPartition,
    Partition,
};
use crate::idempotents::verify_idempotent_system_with;
use crate::linalg::RepMatrix;
use crate::report::VerificationReport;
use crate::representations::{branching_check, jm_separation_check, Representation};
use crate::roots::XiOrder;
use crate::schur::{schur_element, semisimple_at, tau_decomposition_check, SchurForm};
use crate::scalars::CyclotomicNumber;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "yhdn", version, about = "Exact computations in the Yokonuma-Hecke algebra Y_{d,n}(q)")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    /// Refuse work when d^n * n! exceeds this
    #[arg(long, global = true, env = "YHDN_BUDGET", default_value_t = 2000)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Dpartitions,
    Tableaux,
    ContentArrays,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Relations,
    Branching,
    Idempotents,
    TraceForm,
    TauDecomposition,
    JmCommute,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List d-partitions, standard tableaux or content arrays
    Enumerate {
        kind: Kind,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
        #[arg(long)]
        n: usize,
        /// Only print counts (per shape for tableaux)
        #[arg(long)]
        count_only: bool,
    },
    /// Dump the seminormal matrices of one irreducible representation
    Rep {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        d: Option<u32>,
        #[arg(long)]
        n: Option<usize>,
        /// Nested JSON arrays, e.g. "[[2,1],[1]]"; "[2]" is a single partition
        #[arg(long)]
        shape: String,
        /// Ordering of the roots of unity, e.g. "2,1"
        #[arg(long)]
        xi_order: Option<String>,
        /// Append the relation check
        #[arg(long)]
        verify: bool,
        /// Include the Jucys-Murphy matrices
        #[arg(long)]
        jm: bool,
    },
    /// Run a verification suite; exit 0 iff every check passes
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        xi_order: Option<String>,
    },
    /// Schur elements, optionally specialized at q = zeta_L^k
    Schur {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
        #[arg(long)]
        n: usize,
        #[arg(long, num_args = 2, value_names = ["L", "K"], allow_negative_numbers = true)]
        at_q: Option<Vec<i64>>,
    },
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

fn internal(e: crate::Error) -> Failure {
    Failure { code: EXIT_FAIL, message: e.to_string() }
}

type Outcome = std::result::Result<i32, Failure>;

/// Parse `args` (including the program name) and run; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{}", text) } else { write!(err, "{}", text) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Enumerate { kind, d, n, count_only } => cmd_enumerate(out, cli.format, kind, d as usize, n, count_only),
        Command::Rep { d, n, ref shape, ref xi_order, verify, jm } => {
            cmd_rep(out, err, cli.format, cli.budget, d.map(|x| x as usize), n, shape, xi_order.as_deref(), verify, jm)
        }
        Command::Verify { d, n, suite, ref xi_order } => {
            cmd_verify(out, err, cli.format, cli.budget, d as usize, n, suite, xi_order.as_deref())
        }
        Command::Schur { d, n, ref at_q } => cmd_schur(out, cli.format, d as usize, n, at_q.as_deref()),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn io(e: std::io::Error) -> Failure {
    Failure { code: EXIT_FAIL, message: format!("write failed: {}", e) }
}

fn check_budget(d: usize, n: usize, budget: u64) -> std::result::Result<(), Failure> {
    let mut cost: u128 = 1;
    for k in 1..=n {
        cost = cost.saturating_mul(d as u128).saturating_mul(k as u128);
    }
    if cost > budget as u128 {
        return Err(Failure {
            code: EXIT_BUDGET,
            message: format!("d^n * n! = {} exceeds the budget {} (raise with --budget or YHDN_BUDGET)", cost, budget),
        });
    }
    Ok(())
}

fn parse_xi(text: Option<&str>, d: usize) -> std::result::Result<XiOrder, Failure> {
    let Some(text) = text else { return Ok(XiOrder::standard(d)) };
    let perm = text
        .trim()
        .trim_start_matches('[')
        .trim_end_matches(']')
        .split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| usage(format!("--xi-order: cannot parse {:?}", text)))?;
    let xi = XiOrder::new(perm).map_err(|e| usage(format!("--xi-order: {}", e)))?;
    if xi.d() != d {
        return Err(usage(format!("--xi-order has {} entries but d = {}", xi.d(), d)));
    }
    Ok(xi)
}

/// "[2,1]" is one partition; "[[2,1],[1]]" is a d-partition.
fn parse_shape(text: &str, d: Option<usize>) -> std::result::Result<DPartition, Failure> {
    let value: Value = serde_json::from_str(text).map_err(|e| usage(format!("--shape: {}", e)))?;
    let nested = value.as_array().is_some_and(|a| a.iter().any(Value::is_array));
    let shape = if nested {
        serde_json::from_value::<DPartition>(value).map_err(|e| usage(format!("--shape: {}", e)))?
    } else {
        let p: Partition = serde_json::from_value(value).map_err(|e| usage(format!("--shape: {}", e)))?;
        DPartition::new(vec![p]).map_err(|e| usage(format!("--shape: {}", e)))?
    };
    if let Some(d) = d {
        if d != shape.d() {
            return Err(usage(format!("--shape has {} components but --d is {}", shape.d(), d)));
        }
    }
    Ok(shape)
}

fn csv_writer(out: &mut dyn Write) -> csv::Writer<&mut dyn Write> {
    csv::WriterBuilder::new().from_writer(out)
}

fn csv_err(e: csv::Error) -> Failure {
    Failure { code: EXIT_FAIL, message: format!("csv: {}", e) }
}

fn write_json(out: &mut dyn Write, v: &Value) -> std::result::Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, v).map_err(|e| Failure { code: EXIT_FAIL, message: e.to_string() })?;
    writeln!(out).map_err(io)
}

fn cmd_enumerate(out: &mut dyn Write, format: Format, kind: Kind, d: usize, n: usize, count_only: bool) -> Outcome {
    match kind {
        Kind::Dpartitions => {
            let shapes = enumerate_dpartitions(d, n);
            match format {
                Format::Json => {
                    let mut v = json!({"kind": "dpartitions", "d": d, "n": n, "count": shapes.len()});
                    if !count_only {
                        v["items"] = json!(shapes);
                    }
                    write_json(out, &v)?;
                }
                Format::Csv => {
                    let mut w = csv_writer(out);
                    if count_only {
                        w.write_record(["count"]).map_err(csv_err)?;
                        w.write_record([shapes.len().to_string()]).map_err(csv_err)?;
                    } else {
                        w.write_record(["index", "shape"]).map_err(csv_err)?;
                        for (i, s) in shapes.iter().enumerate() {
                            w.write_record([(i + 1).to_string(), s.to_string()]).map_err(csv_err)?;
                        }
                    }
                    w.flush().map_err(io)?;
                }
                Format::Pretty => {
                    if !count_only {
                        for s in &shapes {
                            writeln!(out, "{}", s).map_err(io)?;
                        }
                    }
                    writeln!(out, "count: {}", shapes.len()).map_err(io)?;
                }
            }
        }
        Kind::Tableaux => {
            let shapes = enumerate_dpartitions(d, n);
            let per_shape: Vec<(DPartition, usize)> =
                shapes.iter().map(|s| (s.clone(), enumerate_standard_dtableaux(s).len())).collect();
            let total: usize = per_shape.iter().map(|(_, c)| c).sum();
            let squares: u128 = per_shape.iter().map(|(_, c)| (*c as u128) * (*c as u128)).sum();
            let items = if count_only { Vec::new() } else { all_standard_dtableaux(d, n) };
            match format {
                Format::Json => {
                    let per: Vec<Value> = per_shape.iter().map(|(s, c)| json!({"shape": s, "count": c})).collect();
                    let mut v = json!({"kind": "tableaux", "d": d, "n": n, "count": total, "sumOfSquares": squares, "perShape": per});
                    if !count_only {
                        v["items"] = json!(items);
                    }
                    write_json(out, &v)?;
                }
                Format::Csv => {
                    let mut w = csv_writer(out);
                    if count_only {
                        w.write_record(["shape", "count"]).map_err(csv_err)?;
                        for (s, c) in &per_shape {
                            w.write_record([s.to_string(), c.to_string()]).map_err(csv_err)?;
                        }
                    } else {
                        w.write_record(["index", "shape", "tableau"]).map_err(csv_err)?;
                        for (i, t) in items.iter().enumerate() {
                            w.write_record([(i + 1).to_string(), t.shape().to_string(), t.to_string()]).map_err(csv_err)?;
                        }
                    }
                    w.flush().map_err(io)?;
                }
                Format::Pretty => {
                    if count_only {
                        for (s, c) in &per_shape {
                            writeln!(out, "{}: {}", s, c).map_err(io)?;
                        }
                    } else {
                        for t in &items {
                            writeln!(out, "{}", t).map_err(io)?;
                        }
                    }
                    writeln!(out, "count: {}", total).map_err(io)?;
                    writeln!(out, "sum of squares: {}", squares).map_err(io)?;
                }
            }
        }
        Kind::ContentArrays => {
            let arrays = enumerate_content_arrays(d, n);
            let join = |xs: Vec<String>| xs.join(" ");
            match format {
                Format::Json => {
                    let mut v = json!({"kind": "content-arrays", "d": d, "n": n, "count": arrays.len()});
                    if !count_only {
                        v["items"] = json!(arrays);
                    }
                    write_json(out, &v)?;
                }
                Format::Csv => {
                    let mut w = csv_writer(out);
                    if count_only {
                        w.write_record(["count"]).map_err(csv_err)?;
                        w.write_record([arrays.len().to_string()]).map_err(csv_err)?;
                    } else {
                        w.write_record(["index", "positions", "contents"]).map_err(csv_err)?;
                        for (i, a) in arrays.iter().enumerate() {
                            let p = join(a.positions.iter().map(|x| x.to_string()).collect());
                            let c = join(a.content_exps.iter().map(|x| x.to_string()).collect());
                            w.write_record([(i + 1).to_string(), p, c]).map_err(csv_err)?;
                        }
                    }
                    w.flush().map_err(io)?;
                }
                Format::Pretty => {
                    if !count_only {
                        for a in &arrays {
                            writeln!(out, "positions {:?} contents {:?}", a.positions, a.content_exps).map_err(io)?;
                        }
                    }
                    writeln!(out, "count: {}", arrays.len()).map_err(io)?;
                }
            }
        }
    }
    Ok(EXIT_OK)
}

fn matrix_strings(m: &RepMatrix) -> Vec<Vec<String>> {
    m.rows().iter().map(|row| row.iter().map(|x| x.to_string()).collect()).collect()
}

#[allow(clippy::too_many_arguments)]
fn cmd_rep(
    out: &mut dyn Write,
    err: &mut dyn Write,
    format: Format,
    budget: u64,
    d: Option<usize>,
    n: Option<usize>,
    shape: &str,
    xi_order: Option<&str>,
    verify: bool,
    jm: bool,
) -> Outcome {
    let shape = parse_shape(shape, d)?;
    if let Some(n) = n {
        if n != shape.size() {
            return Err(usage(format!("--shape has size {} but --n is {}", shape.size(), n)));
        }
    }
    let (d, n) = (shape.d(), shape.size());
    check_budget(d, n, budget)?;
    let xi = parse_xi(xi_order, d)?;
    let rep = Representation::new(&shape, &xi).map_err(|e| usage(e.to_string()))?;
    let mut named: Vec<(String, &RepMatrix)> = (1..=n).map(|j| (format!("t{}", j), rep.t_matrix(j))).collect();
    named.extend((1..n).map(|i| (format!("g{}", i), rep.g_matrix(i))));
    let jms = if jm { rep.jm_matrices() } else { Vec::new() };
    named.extend(jms.iter().enumerate().map(|(i, m)| (format!("J{}", i + 1), m)));
    let report = verify.then(|| rep.verify_relations());
    match format {
        Format::Json => {
            let mut v = json!({
                "shape": shape,
                "d": d,
                "n": n,
                "dim": rep.dim(),
                "tableaux": rep.tableaux(),
            });
            for (name, m) in &named {
                v[name.as_str()] = json!(matrix_strings(m));
            }
            if let Some(r) = &report {
                v["verification"] = json!(r);
            }
            write_json(out, &v)?;
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["matrix", "row", "col", "entry"]).map_err(csv_err)?;
            for (name, m) in &named {
                for (r, row) in m.rows().iter().enumerate() {
                    for (c, x) in row.iter().enumerate() {
                        if !x.is_zero() {
                            w.write_record([name.clone(), (r + 1).to_string(), (c + 1).to_string(), x.to_string()]).map_err(csv_err)?;
                        }
                    }
                }
            }
            w.flush().map_err(io)?;
        }
        Format::Pretty => {
            writeln!(out, "shape {} (d={}, n={}, dim={})", shape, d, n, rep.dim()).map_err(io)?;
            for (i, t) in rep.tableaux().iter().enumerate() {
                writeln!(out, "  v{} = {}", i + 1, t).map_err(io)?;
            }
            for (name, m) in &named {
                write!(out, "{}:\n{}", name, m).map_err(io)?;
            }
            if let Some(r) = &report {
                write!(out, "{}", r).map_err(io)?;
            }
        }
    }
    if let Some(r) = &report {
        let _ = writeln!(err, "elapsed: {:.3}s", r.elapsed.as_secs_f64());
        if !r.passed() {
            return Ok(EXIT_FAIL);
        }
    }
    Ok(EXIT_OK)
}

/// Run one named suite over Y_{d,n}.
pub fn run_suite(suite: &str, d: usize, n: usize, xi: &XiOrder) -> crate::Result<VerificationReport> {
    let mut report = VerificationReport::new(format!("{} d={} n={}", suite, d, n));
    match suite {
        "relations" => {
            for shape in enumerate_dpartitions(d, n).iter().filter(|s| s.size() > 0) {
                report.absorb(Representation::new(shape, xi)?.verify_relations());
            }
        }
        "branching" => {
            if n >= 2 {
                for shape in enumerate_dpartitions(d, n) {
                    report.absorb(branching_check(&shape, xi)?);
                }
            }
        }
        "idempotents" => report.absorb(verify_idempotent_system_with(d, n, xi)?),
        "trace-form" => report.absorb(trace_form_check(d, n)),
        "tau-decomposition" => report.absorb(tau_decomposition_check(d, n)?),
        "jm-commute" => {
            report.absorb(jm_commute_check(d, n));
            report.check("joint spectra separate tableaux", jm_separation_check(d, n), || "two tableaux share eigenvalues".into());
        }
        other => return Err(crate::Error::Invalid(format!("unknown suite {}", other))),
    }
    Ok(report.finish())
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Relations => "relations",
        Suite::Branching => "branching",
        Suite::Idempotents => "idempotents",
        Suite::TraceForm => "trace-form",
        Suite::TauDecomposition => "tau-decomposition",
        Suite::JmCommute => "jm-commute",
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    out: &mut dyn Write,
    err: &mut dyn Write,
    format: Format,
    budget: u64,
    d: usize,
    n: usize,
    suite: Suite,
    xi_order: Option<&str>,
) -> Outcome {
    check_budget(d, n, budget)?;
    let xi = parse_xi(xi_order, d)?;
    let report = run_suite(suite_name(suite), d, n, &xi).map_err(internal)?;
    write_report(out, format, &report)?;
    let _ = writeln!(err, "elapsed: {:.3}s", report.elapsed.as_secs_f64());
    Ok(if report.passed() { EXIT_OK } else { EXIT_FAIL })
}

fn write_report(out: &mut dyn Write, format: Format, report: &VerificationReport) -> std::result::Result<(), Failure> {
    match format {
        Format::Json => write_json(out, &json!(report)),
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["suite", "check", "passed", "witness"]).map_err(csv_err)?;
            for c in &report.checks {
                w.write_record([report.suite.as_str(), &c.name, if c.passed { "true" } else { "false" }, c.witness.as_deref().unwrap_or("")])
                    .map_err(csv_err)?;
            }
            w.flush().map_err(io)
        }
        Format::Pretty => write!(out, "{}", report).map_err(io),
    }
}

fn cmd_schur(out: &mut dyn Write, format: Format, d: usize, n: usize, at_q: Option<&[i64]>) -> Outcome {
    let elements: Vec<_> = enumerate_dpartitions(d, n).iter().map(|s| schur_element(s, SchurForm::Hook)).collect();
    let special = match at_q {
        Some(&[l, k]) => {
            if l < 1 || l > u32::MAX as i64 {
                return Err(usage(format!("--at-q: order {} must be positive", l)));
            }
            let qbar = CyclotomicNumber::root(l as u32, k);
            let values = elements
                .iter()
                .map(|e| e.value.evaluate(&qbar))
                .collect::<crate::Result<Vec<_>>>()
                .map_err(internal)?;
            let verdict = semisimple_at(d, n, &qbar).map_err(internal)?;
            Some((l, k, values, verdict))
        }
        Some(_) => return Err(usage("--at-q takes two integers L k")),
        None => None,
    };
    match format {
        Format::Json => {
            let mut v = json!({"d": d, "n": n, "elements": elements});
            if let Some((l, k, values, verdict)) = &special {
                let vals: Vec<String> = values.iter().map(|x| x.to_string()).collect();
                v["atQ"] = json!({"order": l, "k": k, "values": vals, "semisimple": verdict.semisimple, "vanishing": verdict.vanishing});
            }
            write_json(out, &v)?;
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            if let Some((_, _, values, _)) = &special {
                w.write_record(["shape", "schur", "schur_at_q1", "specialized"]).map_err(csv_err)?;
                for (e, x) in elements.iter().zip(values) {
                    w.write_record([e.shape.to_string(), e.value.to_string(), e.at_one().to_string(), x.to_string()]).map_err(csv_err)?;
                }
            } else {
                w.write_record(["shape", "schur", "schur_at_q1"]).map_err(csv_err)?;
                for e in &elements {
                    w.write_record([e.shape.to_string(), e.value.to_string(), e.at_one().to_string()]).map_err(csv_err)?;
                }
            }
            w.flush().map_err(io)?;
        }
        Format::Pretty => {
            for (i, e) in elements.iter().enumerate() {
                match &special {
                    Some((_, _, values, _)) => writeln!(out, "{}: {}  ->  {}", e.shape, e.value, values[i]).map_err(io)?,
                    None => writeln!(out, "{}: {}", e.shape, e.value).map_err(io)?,
                }
            }
            if let Some((l, k, _, verdict)) = &special {
                writeln!(out, "q = E({})^{}: {}", l, k, if verdict.semisimple { "semisimple" } else { "not semisimple" }).map_err(io)?;
                if !verdict.vanishing.is_empty() {
                    let names: Vec<String> = verdict.vanishing.iter().map(|s| s.to_string()).collect();
                    writeln!(out, "vanishing: {}", names.join("; ")).map_err(io)?;
                }
            }
        }
    }
    Ok(EXIT_OK)
}
