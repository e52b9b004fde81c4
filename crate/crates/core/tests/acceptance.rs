//! One PASS/FAIL line per acceptance criterion. Exits non-zero if any fails.

mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use logarr::cycle::{leading_poles, Check, HilbertPolynomial, Status, Verifier};
use logarr::exactalg::{IntBiPoly, MultiPoly};
use logarr::fixtures::{builtin, Fixture};
use logarr::groebner::HilbertSeries;
use logarr::logideal::BigradedIdeal;
use num_bigint::BigInt;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

/// Randomized instances per property in criterion 9.
const PROPERTY_CASES: u32 = 32;
/// Bidegree bounds `a + b` for criteria 6 and 8.
const ORACLE_BOUND: u32 = 6;
const DCPLX_BOUND: u32 = 4;
const RUNTIME_LIMIT_SECS: u64 = 600;

type Outcome = Result<String, String>;

struct Corpus {
    entries: Vec<(Fixture, Verifier)>,
}

impl Corpus {
    fn load() -> Self {
        let entries = builtin().into_iter().map(|f| {
            let v = f.verifier();
            (f, v)
        });
        Corpus { entries: entries.collect() }
    }

    fn get(&self, name: &str) -> &(Fixture, Verifier) {
        self.entries.iter().find(|(f, _)| f.name() == name).unwrap_or_else(|| panic!("no fixture {name}"))
    }
}

fn poly(terms: &[((u32, u32), i64)]) -> IntBiPoly {
    IntBiPoly::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn run_check(v: &Verifier, c: Check) -> Result<logarr::cycle::Report, String> {
    v.run(c).map_err(|e| format!("{c}: {e}"))
}

fn three_lines(corpus: &Corpus) -> Outcome {
    let (_, v) = corpus.get("3lines");
    let a = v.essential();
    ensure(a.char_poly().display("t", "_") == "t^2 - 3*t + 2", || "chi".into())?;
    ensure(a.tutte().display("x", "y") == "x^2 + x + y", || "Tutte polynomial".into())?;
    let d = v.class_data().map_err(|e| e.to_string())?;

    let var = |i| MultiPoly::var(5, i);
    let (x, y, a1, a2, a3) = (var(0), var(1), var(2), var(3), var(4));
    let g1 = &(&a1 + &a2) + &a3;
    let g2 = &(&x * &(&a1 + &a3)) + &(&y * &(&a2 + &a3));
    let expected = BigradedIdeal::new(2, 3, vec![g1, g2]).map_err(|e| e.to_string())?;
    ensure(d.ideal.same_ideal(&expected), || "I(A) differs from (a1+a2+a3, x(a1+a3)+y(a2+a3))".into())?;

    // (1-u)(1-tu)
    let k = poly(&[((0, 0), 1), ((0, 1), -1), ((1, 1), -1), ((1, 2), 1)]);
    ensure(d.series.k == k, || format!("K = {}", d.series.k.display("t", "u")))?;
    // 1/((1-t)(1-u)^2) + 1/((1-t)^2(1-u)) - 1/((1-t)(1-u)) over (1-t)^2 (1-u)^3
    let one = IntBiPoly::one();
    let omt = &one - &IntBiPoly::x();
    let omu = &one - &IntBiPoly::y();
    let closed = &(&(&omt * &omu) + &omu.pow(2)) - &(&omt * &omu.pow(2));
    let closed = HilbertSeries { m: 2, n: 3, k: closed };
    for a in 0..8 {
        for b in 0..8 {
            ensure(closed.coefficient(a, b) == d.series.coefficient(a, b), || format!("h(S/I) at ({a},{b})"))?;
        }
    }
    let hp = HilbertPolynomial::from_series(&d.series);
    ensure(hp.display() == "p + q + 1", || format!("Hilbert polynomial {}", hp.display()))?;
    ensure(d.class.display() == "h*k + k^2", || format!("class {}", d.class.display()))?;
    let main = run_check(v, Check::Main)?;
    ensure(main.passed(), || "main theorem".into())?;
    Ok("chi, T, I(A), K, h(S/I), p = p+q+1, [X] = hk+k^2".into())
}

fn main_theorem(corpus: &Corpus) -> Outcome {
    let mut names = Vec::new();
    for (f, v) in &corpus.entries {
        let r = run_check(v, Check::Main)?;
        ensure(r.passed(), || format!("{}: {} vs {}", f.name(), r.lhs, r.rhs))?;
        names.push(f.name().to_string());
    }
    Ok(format!("{} fixtures: {}", names.len(), names.join(", ")))
}

fn ziegler(corpus: &Corpus) -> Outcome {
    let (_, v1) = corpus.get("ziegler1");
    let (_, v2) = corpus.get("ziegler2");
    let d1 = v1.class_data().map_err(|e| e.to_string())?;
    let d2 = v2.class_data().map_err(|e| e.to_string())?;
    let k1 = d1.series.numerator_over(3, 8).ok_or("ziegler1: (1-u)^8 denominator not reachable")?;
    let k2 = d2.series.numerator_over(3, 8).ok_or("ziegler2: (1-u)^8 denominator not reachable")?;
    let h1 = poly(&[((0, 0), 1), ((5, 1), -6), ((6, 1), 4), ((6, 2), 1)]);
    let h2 = poly(&[((0, 0), 1), ((4, 1), -1), ((5, 1), -3), ((6, 1), 1), ((6, 2), 1), ((7, 1), 1)]);
    let pair_ok = (k1 == h1 && k2 == h2) || (k1 == h2 && k2 == h1);
    ensure(pair_ok, || format!("K pair {} / {}", k1.display("t", "u"), k2.display("t", "u")))?;

    // h1 - h2, whichever fixture carries h1
    let (first, second) = if k1 == h1 { (d1, d2) } else { (d2, d1) };
    let (dk, dm, dn) =
        HilbertSeries { m: first.series.m, n: first.series.n, k: &first.series.k - &second.series.k }.reduced();
    ensure(dk == poly(&[((4, 1), 1)]) && dm == 0 && dn == 8, || {
        format!("difference {} / (1-t)^{dm} (1-u)^{dn}", dk.display("t", "u"))
    })?;

    let want: BTreeMap<u32, BigInt> =
        [(1, 15), (2, 6), (3, 1)].into_iter().map(|(i, c)| (i, BigInt::from(c))).collect();
    for d in [d1, d2] {
        let poles = leading_poles(&d.series);
        let nonzero: BTreeMap<u32, BigInt> = poles.leading.into_iter().filter(|(_, c)| *c != BigInt::from(0)).collect();
        ensure(nonzero == want && poles.excess.is_empty(), || format!("poles {nonzero:?}"))?;
    }
    ensure(d1.class == d2.class && d1.class.display() == "15*h^2*k + 6*h*k^2 + k^3", || {
        format!("classes {} / {}", d1.class.display(), d2.class.display())
    })?;
    ensure(d1.series.k != d2.series.k, || "K-polynomials coincide".into())?;
    Ok("K pair matched, difference t^4u/(1-u)^8, poles {15,6,1}, equal classes".into())
}

fn recurrences(corpus: &Corpus) -> Outcome {
    let mut hyperplanes = 0;
    let mut independent = Vec::new();
    for (f, v) in &corpus.entries {
        let a = v.essential();
        for i in 0..a.n() {
            ensure(a.delres_check_at(i) == Ok(true), || format!("{}: chi recurrence at {i}", f.name()))?;
        }
        ensure(v.homog_recurrence().passed(), || format!("{}: homogeneous recurrence", f.name()))?;
        for i in 0..a.n() {
            let r = v.recurrence(i).map_err(|e| format!("{}: {e}", f.name()))?;
            ensure(r.status != Status::Fail, || {
                format!("{}: class recurrence at {i}: {} vs {}", f.name(), r.lhs, r.rhs)
            })?;
            if r.witnesses.get("bridge") == Some(&false.into())
                && r.witnesses.get("restriction_boolean") == Some(&false.into())
            {
                independent.push(format!("{}#{i}", f.name()));
            }
            hyperplanes += 1;
        }
    }
    ensure(!independent.is_empty(), || "no non-bridge case with three Gröbner runs".into())?;
    Ok(format!(
        "{hyperplanes} hyperplanes; three-basis cases include {}",
        independent[..independent.len().min(4)].join(", ")
    ))
}

fn delres_sets(corpus: &Corpus) -> Outcome {
    let mut done = Vec::new();
    for (name, i) in [("3lines", 0), ("3lines", 2), ("generic4", 3), ("generic4", 0)] {
        let (_, v) = corpus.get(name);
        let r = v.delres_set(i).map_err(|e| e.to_string())?;
        ensure(r.passed() && r.witnesses["bridge"] == false, || format!("{name} at {i}: {:?}", r.witnesses))?;
        done.push(format!("{name}#{i}"));
    }
    let (_, v) = corpus.get("bridge");
    let a = v.essential();
    let z = (0..a.n()).find(|&i| a.is_bridge(i) == Ok(true)).ok_or("bridge fixture has no bridge")?;
    let r = v.delres_set(z).map_err(|e| e.to_string())?;
    ensure(r.passed() && r.witnesses["bridge"] == true, || format!("bridge at {z}: {:?}", r.witnesses))?;
    done.push(format!("bridge#{z} (bridge)"));
    Ok(done.join(", "))
}

fn hs_oracle(corpus: &Corpus) -> Outcome {
    let mut total = 0u64;
    for (f, v) in &corpus.entries {
        ensure(v.options().check_bound >= ORACLE_BOUND, || "oracle bound too small".into())?;
        let r = run_check(v, Check::HsOracle)?;
        ensure(r.passed(), || format!("{}: {:?}", f.name(), r.witnesses.get("mismatches")))?;
        total += r.witnesses["bidegrees_checked"].as_u64().unwrap_or(0);
    }
    Ok(format!("{total} bidegrees with a+b <= {ORACLE_BOUND}"))
}

fn tutte_and_st(corpus: &Corpus) -> Outcome {
    let mut count = 0;
    for (f, v) in &corpus.entries {
        if !(f.flags.tame || f.flags.free_expected) {
            continue;
        }
        let r = run_check(v, Check::TutteSpec)?;
        ensure(r.passed(), || format!("{}: quotient {} vs {}", f.name(), r.lhs, r.rhs))?;
        let st = run_check(v, Check::SolomonTerao)?;
        ensure(st.passed(), || format!("{}: Solomon-Terao {:?}", f.name(), st.witnesses))?;
        let path = st.witnesses["path"].as_str().unwrap_or("");
        let want = match f.name() {
            n if n.starts_with("boolean") || n == "3lines" || n == "braid4" => Some("free"),
            n if n.starts_with("ziegler") => Some("tame"),
            _ => None,
        };
        if let Some(w) = want {
            ensure(path == w, || format!("{}: took the {path} path", f.name()))?;
        }
        count += 1;
    }
    Ok(format!("{count} free or tame fixtures"))
}

fn dcplx(corpus: &Corpus) -> Outcome {
    for name in ["3lines", "ziegler1", "ziegler2"] {
        let (_, v) = corpus.get(name);
        ensure(v.options().dcplx_bound >= DCPLX_BOUND, || "dcplx bound too small".into())?;
        let r = run_check(v, Check::Dcplx)?;
        ensure(r.passed(), || format!("{name}: {:?}", r.witnesses.get("table")))?;
    }
    Ok(format!("3lines, ziegler1, ziegler2 at a+b <= {DCPLX_BOUND}"))
}

fn properties() -> Outcome {
    fn go<S: proptest::strategy::Strategy>(
        name: &str,
        seed: u8,
        strategy: S,
        f: impl Fn(S::Value) -> Result<(), String>,
    ) -> Result<(), String> {
        let config = Config { cases: PROPERTY_CASES, failure_persistence: None, ..Config::default() };
        let rng = proptest::test_runner::TestRng::from_seed(proptest::test_runner::RngAlgorithm::ChaCha, &[seed; 32]);
        let mut runner = TestRunner::new_with_rng(config, rng);
        runner.run(&strategy, |v| f(v).map_err(TestCaseError::fail)).map_err(|e| format!("{name}: {e}"))
    }
    use common::*;
    go("S-pairs", 1, ideal_strategy(), |g| prop_spairs_reduce(&g))?;
    go("HS permutation", 2, (arrangement_strategy(5), proptest::prelude::any::<u64>()), |(a, s)| {
        prop_hs_permutation(&a, s)
    })?;
    go("Möbius", 3, arrangement_strategy(6), |a| prop_mobius_sum(&a))?;
    go("Tutte order", 4, (arrangement_strategy(6), proptest::prelude::any::<u64>()), |(a, s)| prop_tutte_order(&a, s))?;
    go("essentialization", 5, embedded_strategy(), |(f, g)| prop_essentialization(&f, &g))?;
    Ok(format!("5 properties x {PROPERTY_CASES} instances"))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let corpus = Corpus::load();
    let criteria: [(&str, &dyn Fn() -> Outcome); 9] = [
        ("3-lines golden run", &|| three_lines(&corpus)),
        ("main theorem on the corpus", &|| main_theorem(&corpus)),
        ("Ziegler pair", &|| ziegler(&corpus)),
        ("recurrence suite", &|| recurrences(&corpus)),
        ("set-level deletion-restriction", &|| delres_sets(&corpus)),
        ("Hilbert series oracle", &|| hs_oracle(&corpus)),
        ("Tutte specialization and Solomon-Terao", &|| tutte_and_st(&corpus)),
        ("logarithmic complex Euler identity", &|| dcplx(&corpus)),
        ("property suites", &properties),
    ];
    let mut failed = 0;
    for (i, (title, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {title} ({secs:.1}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {title} ({secs:.1}s): {why}", i + 1);
            }
        }
    }
    let total = start.elapsed();
    let in_time = total.as_secs() <= RUNTIME_LIMIT_SECS;
    println!(
        "{} runtime {:.1}s (limit {RUNTIME_LIMIT_SECS}s)",
        if in_time { "PASS" } else { "FAIL" },
        total.as_secs_f64()
    );
    if failed == 0 && in_time {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
