use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::Serialize;
use serde_json::{json, Value};

use gasket_core::algebraic::{gasket_dimension, multinacci, sierpinski_dimension, sigma, ExactReal};
use gasket_core::attractor::measure::{area_of_level, box_dimension_of_level, default_box_range};
use gasket_core::attractor::{
    build_level, check_total_self_similarity, classify_holes, render_svg, Limits, RenderOptions,
    Verdict, DEFAULT_WORD_CAP,
};
use gasket_core::numtheory::{converse_witness, ell_report, gap_check, ConverseOutcome};
use gasket_core::registry::{parse_decimal, parse_fraction, Registry};
use gasket_core::symbolic::uniqueness::successive_ratio;
use gasket_core::symbolic::{
    count_unique_addresses, greedy_expansion, h_sequence, p_sequence, trapezium_counts, u_sequence,
};

use crate::{Cli, Command, LambdaArgs, SeqArg, TableFormat};

/// Successful outcome of a command; the discriminant is the exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[repr(u8)]
pub enum Outcome {
    Done = 0,
    Negative = 2,
}

fn limits() -> Result<Limits> {
    match std::env::var("GASKET_MAX_WORDS") {
        Ok(v) => {
            let max_words: u128 = v
                .trim()
                .parse()
                .with_context(|| format!("GASKET_MAX_WORDS must be a positive integer, got `{v}`"))?;
            if max_words == 0 {
                bail!("GASKET_MAX_WORDS must be positive");
            }
            Ok(Limits { max_words })
        }
        Err(_) => Ok(Limits {
            max_words: DEFAULT_WORD_CAP,
        }),
    }
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

/// RFC 4180 table with CRLF line breaks.
fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let field = |s: &str| {
        if s.contains([',', '"', '\r', '\n']) {
            format!("\"{}\"", s.replace('"', "\"\""))
        } else {
            s.to_string()
        }
    };
    let mut out = String::new();
    let line = |cells: Vec<String>| cells.iter().map(|c| field(c)).collect::<Vec<_>>().join(",");
    let _ = write!(out, "{}\r\n", line(header.iter().map(|s| s.to_string()).collect()));
    for r in rows {
        let _ = write!(out, "{}\r\n", line(r.clone()));
    }
    out
}

fn table_json(header: &[&str], rows: &[Vec<String>]) -> Result<String> {
    let objs: Vec<Value> = rows
        .iter()
        .map(|r| {
            let map: serde_json::Map<String, Value> = header
                .iter()
                .zip(r)
                .map(|(h, c)| (h.to_string(), Value::String(c.clone())))
                .collect();
            Value::Object(map)
        })
        .collect();
    to_json(&objs)
}

fn table(format: TableFormat, header: &[&str], rows: &[Vec<String>]) -> Result<String> {
    match format {
        TableFormat::Csv => Ok(csv(header, rows)),
        TableFormat::Json => table_json(header, rows),
    }
}

fn describe_value(token: &str, v: &ExactReal) -> Value {
    let exact = match (v.as_rational(), v.number()) {
        (Some(r), _) => json!({ "rational": r.to_string() }),
        (None, Some(a)) => {
            let (lo, hi) = a.interval();
            json!({
                "minimal_polynomial": v.modulus().map(|p| p.to_string()),
                "isolating_interval": [lo.to_string(), hi.to_string()],
            })
        }
        (None, None) => Value::Null,
    };
    json!({ "token": token, "label": v.to_string(), "approx": v.approx(), "exact": exact })
}

fn resolve(registry: &Registry, token: &str) -> Result<ExactReal> {
    registry.parse(token).with_context(|| format!("resolving `{token}`"))
}

fn value_tokens(cmd: &Command) -> Vec<&str> {
    match cmd {
        Command::Render { lambda, .. }
        | Command::Holes { lambda, .. }
        | Command::Selfsim { lambda, .. }
        | Command::Area { lambda, .. }
        | Command::Boxdim { lambda, .. } => vec![lambda.lambda.as_str()],
        Command::Ell { theta, .. } => vec![theta.as_str()],
        Command::Witness { lambda, .. } | Command::Gap { lambda, .. } => vec![lambda.as_str()],
        Command::Expand { lambda, .. } => vec![lambda.as_str()],
        _ => Vec::new(),
    }
}

fn dry_run(cli: &Cli, registry: &Registry, limits: Limits) -> Result<String> {
    let values = value_tokens(&cli.command)
        .into_iter()
        .map(|t| Ok(describe_value(t, &resolve(registry, t)?)))
        .collect::<Result<Vec<_>>>()?;
    to_json(&json!({
        "command": format!("{:?}", cli.command).split([' ', '{']).next().unwrap_or(""),
        "values": values,
        "max_words": limits.max_words.to_string(),
        "threads": cli.threads.unwrap_or_else(rayon::current_num_threads),
    }))
}

fn lambda_of(registry: &Registry, a: &LambdaArgs) -> Result<ExactReal> {
    resolve(registry, &a.lambda)
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    if let Some(t) = cli.threads {
        if t == 0 {
            bail!("--threads must be positive");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .context("configuring the thread pool")?;
    }
    let registry = Registry::with_defaults();
    let limits = limits()?;
    let out = cli.output.as_deref();
    if cli.dry_run {
        emit(out, &dry_run(cli, &registry, limits)?)?;
        return Ok(Outcome::Done);
    }
    let mut outcome = Outcome::Done;
    let text = match &cli.command {
        Command::Table1 { format } => table1(*format)?,
        Command::Table2 { format } => table2(*format)?,
        Command::Render {
            lambda,
            depth,
            width,
            radial_holes,
            overlaps,
        } => {
            let l = lambda_of(&registry, lambda)?;
            let level = build_level(&l, lambda.dim, *depth, limits)?;
            let opts = RenderOptions {
                width: *width,
                radial_hole_fill: radial_holes.then(|| "#c03030".to_string()),
                overlap_fill: overlaps.then(|| "#3050c0".to_string()),
                ..RenderOptions::default()
            };
            render_svg(&level, &opts)?
        }
        Command::Holes { lambda, depth } => {
            let l = lambda_of(&registry, lambda)?;
            let r = classify_holes(&l, lambda.dim, *depth, limits)?;
            let violations = r.violation_words();
            if !violations.is_empty() {
                outcome = Outcome::Negative;
            }
            let genuine: Vec<String> = r.genuine_words().iter().map(|w| w.to_string()).collect();
            to_json(&json!({
                "lambda": l.to_string(),
                "d": lambda.dim,
                "n": depth,
                "candidates": r.candidates.len(),
                "genuine": genuine.len(),
                "empty": r.empty,
                "violations": violations,
                "genuine_words": genuine,
            }))?
        }
        Command::Selfsim { lambda, depth } => {
            let l = lambda_of(&registry, lambda)?;
            let v = check_total_self_similarity(&l, lambda.dim, *depth, limits)?;
            if matches!(v, Verdict::Violation { .. }) {
                outcome = Outcome::Negative;
            }
            to_json(&json!({ "lambda": l.to_string(), "d": lambda.dim, "result": v }))?
        }
        Command::Area {
            lambda,
            depth,
            resolution,
        } => {
            let l = lambda_of(&registry, lambda)?;
            if *resolution < 64 {
                bail!("resolution must be at least 64, got {resolution}");
            }
            let level = build_level(&l, lambda.dim, *depth, limits)?;
            let a = area_of_level(&level, *resolution)?;
            to_json(&json!({ "lambda": l.to_string(), "area": a }))?
        }
        Command::Boxdim {
            lambda,
            depth,
            from,
            to,
        } => {
            let l = lambda_of(&registry, lambda)?;
            let default = default_box_range(*depth);
            let ks = from.unwrap_or(*default.start())..=to.unwrap_or(*default.end());
            let level = build_level(&l, lambda.dim, *depth, limits)?;
            let b = box_dimension_of_level(&level, ks.clone())?;
            to_json(&json!({
                "lambda": l.to_string(),
                "n": depth,
                "k_range": [ks.start(), ks.end()],
                "estimate": b,
            }))?
        }
        Command::Ell { theta, degree } => {
            let t = resolve(&registry, theta)?;
            to_json(&ell_report(&t, *degree)?)?
        }
        Command::Witness { lambda, max_n } => {
            let l = resolve(&registry, lambda)?;
            let w = converse_witness(&l, *max_n)?;
            if matches!(w, ConverseOutcome::NotFound { .. }) {
                outcome = Outcome::Negative;
            }
            to_json(&w)?
        }
        Command::Uniq { m, n } => {
            let c = count_unique_addresses(*m, *n)?;
            let ratio = if *n >= 2 { Some(successive_ratio(*m, *n)?) } else { None };
            let s = sigma(*m)?.approx();
            to_json(&json!({
                "m": m,
                "n": n,
                "count": c.to_string(),
                "ratio_to_previous": ratio,
                "sigma_inverse": 1.0 / s,
            }))?
        }
        Command::Seq { kind, m, n, format } => {
            let need_m = || m.context("--m is required for h and p");
            let s = match kind {
                SeqArg::U => u_sequence(*n)?,
                SeqArg::H => h_sequence(need_m()?, *n)?,
                SeqArg::P => p_sequence(need_m()?, *n)?,
                SeqArg::Trapezium => trapezium_counts(*n)?,
            };
            let rows: Vec<Vec<String>> = s
                .values
                .iter()
                .enumerate()
                .map(|(k, v)| vec![k.to_string(), v.to_string()])
                .collect();
            table(*format, &["k", "value"], &rows)?
        }
        Command::Expand {
            lambda,
            x,
            n,
            periodic,
        } => {
            let l = resolve(&registry, lambda)?;
            let xq = if x.contains('/') {
                parse_fraction(x)?
            } else {
                parse_decimal(x)?
            };
            let e = greedy_expansion(&l, &l.constant(xq.clone()), *n, *periodic)?;
            to_json(&json!({
                "x": xq.to_string(),
                "expansion": e.to_digits(),
                "tail_bound_holds": e.satisfies_tail_bound()?,
            }))?
        }
        Command::Gap { lambda, n } => {
            let l = resolve(&registry, lambda)?;
            let r = gap_check(&l, *n)?;
            if !r.holds {
                outcome = Outcome::Negative;
            }
            to_json(&r)?
        }
        Command::Values => {
            let mut s = String::new();
            for f in registry.families() {
                let _ = writeln!(s, "{}", f.describe());
            }
            s
        }
    };
    emit(out, &text)?;
    Ok(outcome)
}

fn table1(format: TableFormat) -> Result<String> {
    let mut rows = Vec::new();
    for m in 2..=9 {
        let w = multinacci(m)?.approx();
        rows.push(vec![
            m.to_string(),
            format!("{w:.5}"),
            format!("{:.5}", gasket_dimension(m, 2)?),
        ]);
    }
    rows.push(vec![
        "inf".into(),
        "0.50000".into(),
        format!("{:.5}", 3f64.ln() / 2f64.ln()),
    ]);
    table(format, &["m", "omega_m", "dimension"], &rows)
}

fn table2(format: TableFormat) -> Result<String> {
    let mut rows = Vec::new();
    for d in 2..=6 {
        let mut row = vec![d.to_string()];
        for m in 2..=6 {
            row.push(format!("{:.2}", gasket_dimension(m, d)?));
        }
        row.push(format!("{:.3}", sierpinski_dimension(d, 0.5)?));
        rows.push(row);
    }
    table(
        format,
        &["d", "omega_2", "omega_3", "omega_4", "omega_5", "omega_6", "one_half"],
        &rows,
    )
}
