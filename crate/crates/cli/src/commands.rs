use std::path::Path;

use logarr::arrgmt::Arrangement;
use logarr::cycle::{Check, Report, Status, Verifier, VerifyOptions};
use logarr::fixtures::{builtin, builtin_matching, load_dir, Fixture};
use logarr::groebner::HilbertSeries;
use logarr::Error;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::{CheckOpts, Output};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_SKIPPED: u8 = 3;

fn input_error(e: &Error) -> u8 {
    eprintln!("error: {e}");
    match e {
        Error::Parse { .. } | Error::InvalidArrangement(_) | Error::IndexOutOfRange { .. } => EXIT_INPUT,
        _ => EXIT_FAIL,
    }
}

fn options(f: &Fixture, opts: &CheckOpts) -> VerifyOptions {
    VerifyOptions {
        max_degree: opts.max_degree,
        check_bound: opts.check_bound,
        dcplx_bound: opts.dcplx_bound,
        tame: f.flags.tame || opts.tame,
        ..VerifyOptions::default()
    }
}

fn print_json(v: &Value, out: Output) {
    let s = if out.pretty { serde_json::to_string_pretty(v) } else { serde_json::to_string(v) };
    println!("{}", s.expect("JSON values serialize"));
}

fn short(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn print_report_text(r: &Report, out: Output) {
    let mut line = r.summary_line();
    if out.timing {
        if let Some(d) = r.elapsed {
            line.push_str(&format!(" ({} ms)", d.as_millis()));
        }
    }
    println!("{}", line.trim_end());
    if !r.lhs.is_null() || !r.rhs.is_null() {
        println!("  lhs: {}", short(&r.lhs));
        println!("  rhs: {}", short(&r.rhs));
    }
    if let Some(reason) = r.witnesses.get("reason") {
        println!("  reason: {}", short(reason));
    }
}

fn info_report(a: &Arrangement) -> Report {
    let lat = a.lattice();
    let ess = a.essentialize();
    Report::new(a.name(), "info", Status::Pass)
        .witness("dimension", json!(a.dim()))
        .witness("hyperplanes", json!(a.n()))
        .witness("rank", json!(a.rank()))
        .witness("essential", json!(a.is_essential()))
        .witness("essential_rank", json!(ess.dim()))
        .witness("lattice_ranks", json!(lat.rank_sizes()))
        .witness("chi", json!(a.char_poly().display("t", "_")))
        .witness("tutte", json!(a.tutte().display("x", "y")))
        .witness("beta", json!(a.beta().to_string()))
        .witness("bridges", json!(a.bridges()))
        .witness("components", json!(a.decompose_indices()))
        .witness("lattice", lat.to_json_value())
}

pub fn info(path: &Path, out: Output) -> u8 {
    let f = match Fixture::load(path) {
        Ok(f) => f,
        Err(e) => return input_error(&e),
    };
    let r = info_report(&f.arrangement);
    if out.json {
        print_json(&r.to_json_value(false), out);
    } else {
        println!("name: {}", r.fixture);
        for (k, v) in &r.witnesses {
            if k != "lattice" {
                println!("{}: {}", k.replace('_', " "), short(v));
            }
        }
    }
    EXIT_PASS
}

pub fn verify(check: Check, path: &Path, opts: &CheckOpts, out: Output) -> u8 {
    let f = match Fixture::load(path) {
        Ok(f) => f,
        Err(e) => return input_error(&e),
    };
    let v = Verifier::new(&f.arrangement, options(&f, opts));
    let r = match v.run(check) {
        Ok(r) => r,
        Err(e) => return input_error(&e),
    };
    if out.json {
        print_json(&r.to_json_value(out.timing), out);
    } else {
        print_report_text(&r, out);
    }
    match r.status {
        Status::Pass => EXIT_PASS,
        Status::Fail => EXIT_FAIL,
        Status::Skipped => EXIT_SKIPPED,
    }
}

fn golden_report(f: &Fixture, v: &Verifier) -> Report {
    let e = &f.expected;
    if e.chi.is_none() && e.tutte.is_none() && e.class.is_none() && e.k_reduced.is_none() {
        return Report::new(f.name(), "golden", Status::Skipped).witness("reason", json!("no golden data"));
    }
    match f.golden_mismatches(v) {
        Ok(bad) => {
            let items: Vec<Value> = bad
                .iter()
                .map(|m| json!({ "field": m.field, "expected": m.expected, "computed": m.computed }))
                .collect();
            Report::new(f.name(), "golden", Status::from_bool(bad.is_empty()))
                .witness("mismatches", Value::Array(items))
        }
        Err(err) => Report::new(f.name(), "golden", Status::Fail).witness("error", json!(err.to_string())),
    }
}

fn run_fixture(f: &Fixture, checks: &[Check], opts: &CheckOpts) -> (Verifier, Vec<Report>) {
    let v = Verifier::new(&f.arrangement, options(f, opts));
    let mut reports = vec![golden_report(f, &v)];
    for &c in checks {
        reports.push(match v.run(c) {
            Ok(r) => r,
            Err(e) => Report::new(f.name(), c.name(), Status::Fail).witness("error", json!(e.to_string())),
        });
    }
    (v, reports)
}

/// Fixtures with the same Tutte polynomial must share a class; their
/// K-polynomials may still differ.
fn comparisons(runs: &[(&Fixture, &Verifier)]) -> Vec<Report> {
    let mut out = Vec::new();
    for (i, (f1, v1)) in runs.iter().enumerate() {
        for (f2, v2) in &runs[i + 1..] {
            if v1.essential().tutte() != v2.essential().tutte() {
                continue;
            }
            let (Ok(d1), Ok(d2)) = (v1.class_data(), v2.class_data()) else { continue };
            let name = format!("{}|{}", f1.name(), f2.name());
            let same_class = d1.class == d2.class;
            let mut r = Report::new(name, "compare", Status::from_bool(same_class))
                .sides(json!(d1.class.display()), json!(d2.class.display()))
                .witness(
                    "k_reduced",
                    json!([d1.series.reduced().0.display("t", "u"), d2.series.reduced().0.display("t", "u")]),
                )
                .witness("k_equal", json!(d1.series.k == d2.series.k));
            if d1.series.m == d2.series.m && d1.series.n == d2.series.n {
                let diff = HilbertSeries { m: d1.series.m, n: d1.series.n, k: &d1.series.k - &d2.series.k };
                let (k, m, n) = diff.reduced();
                r = r.witness("difference", json!({ "numerator": k.display("t", "u"), "t_power": m, "u_power": n }));
            }
            out.push(r);
        }
    }
    out
}

pub fn corpus(
    name: Option<&str>,
    dir: Option<&Path>,
    checks: &[Check],
    parallel: bool,
    opts: &CheckOpts,
    out: Output,
) -> u8 {
    let fixtures = match dir {
        Some(d) => match load_dir(d) {
            Ok(all) => all.into_iter().filter(|f| name.is_none_or(|p| f.name().starts_with(p))).collect(),
            Err(e) => return input_error(&e),
        },
        None => match name {
            Some(p) => builtin_matching(p),
            None => builtin(),
        },
    };
    if fixtures.is_empty() {
        eprintln!("error: no fixtures match");
        return EXIT_INPUT;
    }
    let runs: Vec<(Verifier, Vec<Report>)> = if parallel {
        fixtures.par_iter().map(|f| run_fixture(f, checks, opts)).collect()
    } else {
        fixtures.iter().map(|f| run_fixture(f, checks, opts)).collect()
    };
    let pairs: Vec<(&Fixture, &Verifier)> = fixtures.iter().zip(runs.iter().map(|(v, _)| v)).collect();
    let mut reports: Vec<&Report> = runs.iter().flat_map(|(_, rs)| rs.iter()).collect();
    let extra = comparisons(&pairs);
    reports.extend(extra.iter());

    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    let (pass, fail, skipped) = (count(Status::Pass), count(Status::Fail), count(Status::Skipped));
    if out.json {
        let items: Vec<Value> = reports.iter().map(|r| r.to_json_value(out.timing)).collect();
        print_json(
            &json!({
                "fixtures": fixtures.iter().map(|f| f.name()).collect::<Vec<_>>(),
                "reports": items,
                "summary": { "pass": pass, "fail": fail, "skipped": skipped },
            }),
            out,
        );
    } else {
        for r in &reports {
            print_report_text(r, out);
            if r.check == "compare" {
                if let Some(d) = r.witnesses.get("difference") {
                    println!("  difference: {}", d);
                }
            }
        }
        println!("{} fixtures: {pass} pass, {fail} fail, {skipped} skipped", fixtures.len());
    }
    if fail == 0 {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}
