//! Report builders for each subcommand. Output depends only on the inputs and
//! the resolved configuration.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use pushpa_core::bounds::{chain_upper, push_dilatation_lower, BoundsRow, SurfaceType, BOUNDS_CSV_HEADER};
use pushpa_core::format::sig12;
use pushpa_core::pointpush::chain_self_intersections;
use pushpa_core::selfcheck::{run_check, CheckOptions, CHECK_NAMES};
use pushpa_core::{
    chain_loop, estimate_dilatation, push_braid, simulate_lower, simulate_upper, BraidWord, GrowthReport, GrowthStatus,
    LoopClass, LoopWord, StrandTrace,
};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::config::{OutputFormat, RunConfig};
use crate::{CliError, Exit, ModelArg, Report};

/// Sandwich slack when comparing an estimate with integer bounds.
const VERDICT_SLACK: f64 = 1e-6;

fn csv_table(header: &[&str], rows: &[Vec<String>]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn json_line(v: &Value) -> String {
    format!("{v}\n")
}

/// `key: value` lines in the given order.
fn text_block(pairs: &[(&str, String)]) -> String {
    pairs.iter().map(|(k, v)| format!("{k}: {v}\n")).collect()
}

fn loop_class_str(c: LoopClass) -> &'static str {
    match c {
        LoopClass::FillingPa => "filling_pa",
        LoopClass::NonFilling => "non_filling",
        LoopClass::Undetermined => "undetermined",
    }
}

fn trace_cells(r: &GrowthReport) -> String {
    r.ratio_trace.iter().map(|x| sig12(pushpa_core::format::rational_to_f64(x))).collect::<Vec<_>>().join(";")
}

pub fn dilatation(text: &str, trace: bool, cfg: &RunConfig) -> Result<Report, CliError> {
    let w: BraidWord = text.parse()?;
    let r = estimate_dilatation(&w, &cfg.growth_options())?;
    let mut pairs = vec![
        ("braid", w.to_string()),
        ("status", r.status.as_str().to_string()),
        ("lambda_hat", r.lambda_hat_string()),
        ("iterations_used", r.iterations_used.to_string()),
    ];
    if trace {
        pairs.push(("ratio_trace", trace_cells(&r)));
    }
    let body = match cfg.format_or(OutputFormat::Text) {
        OutputFormat::Text => text_block(&pairs),
        OutputFormat::Csv => {
            let header: Vec<&str> = pairs.iter().map(|(k, _)| *k).collect();
            csv_table(&header, &[pairs.iter().map(|(_, v)| v.clone()).collect()])?
        }
        OutputFormat::Json => {
            let mut v = r.to_json(trace);
            v["braid"] = Value::String(w.to_string());
            json_line(&v)
        }
    };
    Ok(Report { body, exit: r.status.into() })
}

pub fn push(loop_text: Option<&str>, chain: Option<usize>, cfg: &RunConfig) -> Result<Report, CliError> {
    let lp: LoopWord = match (loop_text, chain) {
        (Some(t), None) => t.parse()?,
        (None, Some(n)) => chain_loop(n)?,
        _ => return Err(CliError::Usage("give either a loop or --chain N".into())),
    };
    let pushed = push_braid(&lp)?;
    let opts = cfg.growth_options();
    let r = estimate_dilatation(&pushed.braid, &opts)?;
    // same rule as classify_loop, without iterating twice
    let class = match r.status {
        GrowthStatus::Converged if r.lambda_hat > 1.0 + opts.tolerance => LoopClass::FillingPa,
        GrowthStatus::NonPseudoAnosov => LoopClass::NonFilling,
        _ => LoopClass::Undetermined,
    };

    let mut pairs = vec![
        ("loop", lp.to_string()),
        ("braid", pushed.braid.to_string()),
        ("pushed_strand", pushed.pushed_strand.to_string()),
        ("loop_class", loop_class_str(class).to_string()),
        ("status", r.status.as_str().to_string()),
        ("lambda_hat", r.lambda_hat_string()),
        ("iterations_used", r.iterations_used.to_string()),
    ];
    let mut extra = serde_json::Map::new();
    if let Some(n) = chain {
        let k = chain_self_intersections(n)?;
        let lower = push_dilatation_lower(k as u64)?;
        let upper = chain_upper(n as u64)?;
        let inside = lower as f64 - VERDICT_SLACK <= r.lambda_hat && r.lambda_hat <= upper as f64 + VERDICT_SLACK;
        let verdict = format!("{} [{lower}, {upper}]", if inside { "inside" } else { "outside" });
        pairs.push(("self_intersections", k.to_string()));
        pairs.push(("lower_bound", lower.to_string()));
        pairs.push(("upper_bound", upper.to_string()));
        pairs.push(("verdict", verdict.clone()));
        extra.insert("self_intersections".into(), json!(k));
        extra.insert("lower_bound".into(), json!(lower));
        extra.insert("upper_bound".into(), json!(upper));
        extra.insert("verdict".into(), json!(verdict));
    }

    let body = match cfg.format_or(OutputFormat::Text) {
        OutputFormat::Text => text_block(&pairs),
        OutputFormat::Csv => {
            let header: Vec<&str> = pairs.iter().map(|(k, _)| *k).collect();
            csv_table(&header, &[pairs.iter().map(|(_, v)| v.clone()).collect()])?
        }
        OutputFormat::Json => {
            let mut v = pushed.to_json();
            v["loop_class"] = json!(loop_class_str(class));
            for (k, x) in r.to_json(false).as_object().expect("report object") {
                v[k] = x.clone();
            }
            for (k, x) in extra {
                v[k] = x;
            }
            json_line(&v)
        }
    };
    Ok(Report { body, exit: r.status.into() })
}

pub fn bounds(p: u32, n: Option<u32>, sweep: Option<RangeInclusive<u32>>, cfg: &RunConfig) -> Result<Report, CliError> {
    let ns: Vec<u32> = match (n, sweep) {
        (Some(n), None) => vec![n],
        (None, Some(r)) => r.collect(),
        _ => return Err(CliError::Usage("give either --n N or --sweep A..B".into())),
    };
    let rows: Vec<BoundsRow> =
        ns.par_iter().map(|&n| SurfaceType::new(p, n).and_then(BoundsRow::compute)).collect::<Result<_, _>>()?;
    let body = match cfg.format_or(OutputFormat::Csv) {
        OutputFormat::Csv | OutputFormat::Text => {
            let header: Vec<&str> = BOUNDS_CSV_HEADER.split(',').collect();
            csv_table(&header, &rows.iter().map(BoundsRow::csv_fields).collect::<Vec<_>>())?
        }
        OutputFormat::Json => rows.iter().map(|r| json_line(&r.to_json())).collect(),
    };
    Ok(Report { body, exit: Exit::Success })
}

pub fn strands(model: ModelArg, k: usize, m: usize, visits: bool, cfg: &RunConfig) -> Result<Report, CliError> {
    let trace = match model {
        ModelArg::Lower => simulate_lower(k, m)?,
        ModelArg::Upper => simulate_upper(k, m)?,
    };
    let body = match cfg.format_or(OutputFormat::Csv) {
        OutputFormat::Json => json_line(&trace.to_json()),
        OutputFormat::Csv if visits => {
            csv_table(&["model", "k", "cycle", "crossing", "pass", "before", "after"], &visit_rows(&trace))?
        }
        OutputFormat::Csv => csv_table(&["model", "k", "cycle", "count", "series"], &cycle_rows(&trace))?,
        OutputFormat::Text => strands_text(&trace, visits),
    };
    Ok(Report { body, exit: Exit::Success })
}

fn cycle_rows(t: &StrandTrace) -> Vec<Vec<String>> {
    t.cycles
        .iter()
        .map(|c| {
            vec![
                t.model.as_str().to_string(),
                t.k.to_string(),
                c.index.to_string(),
                c.end.to_string(),
                t.series_at(c.index).map(ToString::to_string).unwrap_or_default(),
            ]
        })
        .collect()
}

fn visit_rows(t: &StrandTrace) -> Vec<Vec<String>> {
    t.cycles
        .iter()
        .flat_map(|c| {
            c.visits.iter().map(move |v| {
                vec![
                    t.model.as_str().to_string(),
                    t.k.to_string(),
                    c.index.to_string(),
                    v.crossing.to_string(),
                    v.pass.to_string(),
                    v.before.to_string(),
                    v.after.to_string(),
                ]
            })
        })
        .collect()
}

fn strands_text(t: &StrandTrace, visits: bool) -> String {
    let mut out = format!("model: {}\nk: {}\ngrowth_factor: {}\n", t.model.as_str(), t.k, t.model.factor(t.k as u64));
    for c in &t.cycles {
        let _ = write!(out, "cycle {}: {} -> {}", c.index, c.start, c.end);
        if let Some(s) = t.series_at(c.index) {
            let _ = write!(out, " (series {s})");
        }
        out.push('\n');
        if visits {
            for v in &c.visits {
                let _ = writeln!(out, "  crossing {} pass {}: {} -> {}", v.crossing, v.pass, v.before, v.after);
            }
        }
    }
    out
}

pub fn verify(only: &[String], seed: Option<u64>, cfg: &RunConfig) -> Result<Report, CliError> {
    let names: Vec<&str> = if only.is_empty() {
        CHECK_NAMES.to_vec()
    } else {
        for name in only {
            if !CHECK_NAMES.contains(&name.as_str()) {
                return Err(CliError::Usage(format!("unknown check {name:?}; choose from {}", CHECK_NAMES.join(", "))));
            }
        }
        // canonical order regardless of how the filter was written
        CHECK_NAMES.iter().copied().filter(|n| only.iter().any(|o| o == n)).collect()
    };
    let mut opts = CheckOptions { growth: cfg.growth_options(), ..CheckOptions::default() };
    if let Some(s) = seed {
        opts.seed = s;
    }
    let outcomes = names.par_iter().map(|n| run_check(n, &opts)).collect::<Result<Vec<_>, _>>()?;
    let passed = outcomes.iter().filter(|o| o.passed).count();
    let total = outcomes.len();

    let body = match cfg.format_or(OutputFormat::Text) {
        OutputFormat::Text => {
            let mut out = format!("seed: {}\n", opts.seed);
            for o in &outcomes {
                let _ = writeln!(out, "{} {}: {}", if o.passed { "PASS" } else { "FAIL" }, o.name, o.detail);
            }
            let _ = writeln!(out, "summary: {passed}/{total} passed");
            out
        }
        OutputFormat::Csv => {
            let mut rows: Vec<Vec<String>> =
                outcomes.iter().map(|o| vec![o.name.to_string(), o.passed.to_string(), o.detail.clone()]).collect();
            rows.push(vec![
                "summary".into(),
                (passed == total).to_string(),
                format!("{passed}/{total} passed, seed {}", opts.seed),
            ]);
            csv_table(&["check", "passed", "detail"], &rows)?
        }
        OutputFormat::Json => {
            let mut out = json_line(&json!({ "seed": opts.seed, "checks": names }));
            for o in &outcomes {
                out.push_str(&json_line(&json!({ "check": o.name, "passed": o.passed, "detail": o.detail })));
            }
            out.push_str(&json_line(&json!({ "summary": { "passed": passed, "total": total } })));
            out
        }
    };
    Ok(Report { body, exit: if passed == total { Exit::Success } else { Exit::CheckFailed } })
}
