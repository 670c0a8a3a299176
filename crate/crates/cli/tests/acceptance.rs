//! Acceptance suite. Prints one PASS/FAIL line per criterion.

use std::time::{Duration, Instant};

use qrgp::commands::{self, RunOptions};
use qrgp::Report;
use qrgp_core::nt::{is_prime, legendre};
use qrgp_core::qrext::{build_qr_family, verify_d_identity, DCase};
use serde_json::Value;

const GRID: [(u64, u64); 9] = [(2, 7), (2, 17), (2, 23), (2, 31), (2, 47), (3, 11), (3, 13), (5, 11), (5, 19)];

struct Outcome {
    id: &'static str,
    title: &'static str,
    pass: bool,
    detail: String,
    elapsed: Duration,
}

fn run(id: &'static str, title: &'static str, limit: Duration, f: impl FnOnce() -> (bool, String)) -> Outcome {
    let start = Instant::now();
    let (ok, detail) = f();
    let elapsed = start.elapsed();
    let pass = ok && elapsed <= limit;
    let detail = if ok && !pass { format!("{detail}; over time limit {limit:?}") } else { detail };
    let out = Outcome { id, title, pass, detail, elapsed };
    println!(
        "[{}] {:>3} {} ({:.2} s): {}",
        if out.pass { "PASS" } else { "FAIL" },
        out.id,
        out.title,
        out.elapsed.as_secs_f64(),
        out.detail
    );
    out
}

fn opts(workers: usize, long: bool) -> RunOptions {
    RunOptions { workers, long, ..RunOptions::default() }
}

fn field<'a>(r: &'a Report, key: &str) -> &'a Value {
    r.get(key).unwrap_or_else(|| panic!("report {} lacks {key}", r.command))
}

fn failed_checks(r: &Report) -> Vec<String> {
    r.checks.iter().filter(|c| !c.pass).map(|c| c.name.clone()).collect()
}

fn criterion_1() -> (bool, String) {
    let primes: Vec<u64> = (3..=50).filter(|&n| is_prime(n)).collect();
    let bad: Vec<u64> = primes
        .iter()
        .filter(|&&ell| !commands::periods(ell).map(|r| r.pass()).unwrap_or(false))
        .copied()
        .collect();
    (bad.is_empty() && primes.len() == 14, format!("{} primes, failures {bad:?}", primes.len()))
}

fn criterion_2() -> (bool, String) {
    let mut bad = Vec::new();
    for (p, ell) in GRID {
        match commands::family(p, ell) {
            Ok(r) => {
                let needed = ["gamma_sign", "gamma_square"];
                let present = needed.iter().all(|n| r.checks.iter().any(|c| c.name == *n && c.pass));
                if !r.pass() || !present {
                    bad.push(format!("({p},{ell}): {:?}", failed_checks(&r)));
                }
            }
            Err(e) => bad.push(format!("({p},{ell}): {e}")),
        }
    }
    (bad.is_empty(), format!("{} families, failures {bad:?}", GRID.len()))
}

fn criterion_3() -> (bool, String) {
    let mut bad = Vec::new();
    let mut cases = [false; 2];
    for (p, ell) in GRID {
        let r = commands::gleason_prange(p, ell).unwrap();
        let row_space = r.checks.iter().any(|c| c.name == "sigma_row_space_equal" && c.pass);
        if !row_space || !r.pass() {
            bad.push(format!("({p},{ell}): {:?}", failed_checks(&r)));
        }
        cases[(ell % 4 == 1) as usize] = true;
    }
    (bad.is_empty() && cases == [true, true], format!("both residue classes covered, failures {bad:?}"))
}

fn criterion_4() -> (bool, String) {
    let mut bad = Vec::new();
    let odd: Vec<_> = GRID.iter().filter(|(p, _)| *p != 2).collect();
    for &&(p, ell) in &odd {
        let r = commands::epsilon(p, ell).unwrap();
        if field(&r, "outcome") != "falsified" {
            bad.push((p, ell));
        }
    }
    (bad.is_empty() && odd.len() == 4, format!("{} odd-p families, not falsified {bad:?}", odd.len()))
}

/// `D` for the first-case families and `D'` for the second-case families
/// with every `s` in `set`.
fn d_runs(second_case_s: impl Fn(&qrgp_core::qrext::QrFamily) -> Vec<u64>) -> (bool, String) {
    let mut bad = Vec::new();
    let mut runs = 0;
    for (p, ell) in [(2, 7), (2, 23)] {
        let fam = build_qr_family(p, ell).unwrap();
        let d = verify_d_identity(&fam, DCase::Case1).unwrap();
        runs += 1;
        if !d.all_zero() || d.values.len() != ell as usize - 1 {
            bad.push(format!("({p},{ell})"));
        }
    }
    for (p, ell) in [(2, 17), (3, 13)] {
        let fam = build_qr_family(p, ell).unwrap();
        for s in second_case_s(&fam) {
            let d = verify_d_identity(&fam, DCase::Case2 { s }).unwrap();
            runs += 1;
            if !d.all_zero() {
                bad.push(format!("({p},{ell}) s={s}: {} of {} nonzero", d.nonzero_at().len(), d.values.len()));
            }
        }
    }
    (bad.is_empty(), format!("{runs} runs, nonvanishing {bad:?}"))
}

fn criterion_5_as_stated() -> (bool, String) {
    d_runs(|fam| fam.residues.clone())
}

fn criterion_5_consistent_root() -> (bool, String) {
    d_runs(|fam| fam.nonresidues.clone())
}

fn criterion_6() -> (bool, String) {
    let mut bad = Vec::new();
    for (p, m, n) in [(2, 3, 7), (2, 4, 15), (3, 2, 8), (5, 2, 24)] {
        assert_eq!(u64::pow(p, m as u32) % n, 1);
        match commands::lemma(p, m, n) {
            Ok(r) if r.pass() => {}
            Ok(r) => bad.push(format!("({p},{m},{n}): {:?}", failed_checks(&r))),
            Err(e) => bad.push(format!("({p},{m},{n}): {e}")),
        }
    }
    (bad.is_empty(), format!("4 triples, failures {bad:?}"))
}

fn chebotarev_counts(ells: &[(u64, u64)], long: bool) -> (bool, String) {
    let mut bad = Vec::new();
    let mut seen = Vec::new();
    for &(ell, expected) in ells {
        let r = commands::chebotarev(ell, None, &opts(1, long)).unwrap();
        let count = field(&r, "minors_checked").as_u64().unwrap();
        seen.push(count);
        if count != expected || !r.pass() {
            bad.push(ell);
        }
    }
    (bad.is_empty(), format!("counts {seen:?}, failures {bad:?}"))
}

fn criterion_8() -> (bool, String) {
    let mut bad = Vec::new();
    for (ell, p) in [(3, 7), (5, 11), (7, 29)] {
        let r = commands::mds(p, ell, &opts(4, false)).unwrap();
        let minors = r.checks.iter().any(|c| c.name == "all_mds" && c.pass);
        if !minors {
            bad.push(format!("({ell},{p}) minors"));
        }
        if (ell, p) == (5, 11) {
            let exhaustive = r.checks.iter().any(|c| c.name == "exhaustive_min_distance" && c.pass);
            let full = field(&r, "exhaustive_codes_checked") == 31 && field(&r, "exhaustive_codes_skipped") == 0;
            if !(exhaustive && full) {
                bad.push("(5,11) exhaustive".into());
            }
        }
    }
    (bad.is_empty(), format!("failures {bad:?}"))
}

fn criterion_9a() -> (bool, String) {
    let r = commands::weights(2, 23, false, &opts(1, false)).unwrap();
    let counts: Vec<u64> = serde_json::from_value(field(&r, "counts").clone()).unwrap();
    (counts[8] == 759 && counts[12] == 2576, format!("A8 = {}, A12 = {}", counts[8], counts[12]))
}

fn criterion_9b() -> (bool, String) {
    let r = commands::weights(2, 47, false, &opts(8, true)).unwrap();
    let counts: Vec<u64> = serde_json::from_value(field(&r, "counts").clone()).unwrap();
    let d = field(&r, "min_distance").as_u64().unwrap() as usize;
    (d == 12 && counts[12] == 17296, format!("d = {d}, A12 = {}", counts[12]))
}

fn criterion_10() -> (bool, String) {
    let mut sizes = Vec::new();
    for seed in [1u64, 2, 3] {
        let r = commands::orbits(2, 47, &RunOptions { seed, ..opts(8, true) }).unwrap();
        if !r.pass() {
            return (false, format!("seed {seed}: {:?}", failed_checks(&r)));
        }
        sizes.push(field(&r, "orbit_sizes").clone());
    }
    let v: Vec<u64> = serde_json::from_value(sizes[0].clone()).unwrap();
    let same = sizes.iter().all(|s| *s == sizes[0]);
    let sum: u64 = v.iter().sum();
    (v.len() == 3 && sum == 17296 && same, format!("orbit sizes {v:?}, sum {sum}"))
}

/// Every report of the suite as JSON text.
fn full_suite_json() -> String {
    let mut out = String::new();
    let mut push = |r: qrgp_core::Result<Report>| out.push_str(&serde_json::to_string(&r.unwrap().to_json()).unwrap());
    for ell in [3, 5, 7, 11, 13, 47] {
        push(commands::periods(ell));
    }
    for (p, ell) in GRID {
        push(commands::family(p, ell));
        push(commands::gleason_prange(p, ell));
        push(commands::epsilon(p, ell));
        push(commands::d_identity(p, ell, None, None));
    }
    for (p, m, n) in [(2, 3, 7), (2, 4, 15), (3, 2, 8), (5, 2, 24)] {
        push(commands::lemma(p, m, n));
    }
    for ell in [3, 5, 7] {
        push(commands::chebotarev(ell, None, &opts(1, false)));
    }
    push(commands::mds(11, 5, &opts(3, false)));
    push(commands::weights(2, 23, false, &opts(2, false)));
    push(commands::orbits(2, 23, &opts(4, false)));
    push(commands::orbits(3, 13, &opts(4, false)));
    out
}

fn criterion_11() -> (bool, String) {
    let a = full_suite_json();
    let b = full_suite_json();
    let bin = env!("CARGO_BIN_EXE_qr");
    let cli = |args: &[&str]| std::process::Command::new(bin).args(args).output().unwrap().stdout;
    let args = ["orbits", "--p", "2", "--ell", "23", "--format", "json"];
    let (c, d) = (cli(&args), cli(&args));
    (a == b && c == d && !c.is_empty(), format!("{} bytes of library JSON, {} bytes from the binary", a.len(), c.len()))
}

fn main() {
    // Criterion 5 as stated is expected to fail; `--ignored` turns it into a
    // hard failure.
    let strict = std::env::args().any(|a| a == "--ignored" || a == "--include-ignored");
    let s = Duration::from_secs;
    let outcomes = [
        run("1", "Gaussian period identities in Z[zeta], l <= 50", s(5), criterion_1),
        run("2", "QR family invariants and l gamma = -(eta - eta') mod p", s(5), criterion_2),
        run("3", "sigma preserves A_inf (row spaces equal)", s(10), criterion_3),
        run("4", "e0 = -1 falsified for odd p", s(5), criterion_4),
        run("5", "D/D' vanish; case 2 with every s in R, as stated", s(10), criterion_5_as_stated),
        run("5'", "D/D' vanish; case 2 with every s in R' (w^s a root of f)", s(10), criterion_5_consistent_root),
        run("6", "trace code = recursive_for(h*), dual = (h)", s(10), criterion_6),
        run("7", "Chebotarev minors nonzero, l = 3, 5, 7", s(30), || {
            chebotarev_counts(&[(3, 19), (5, 251), (7, 3431)], false)
        }),
        run("7L", "Chebotarev minors nonzero, l = 11 (--long)", s(1800), || {
            chebotarev_counts(&[(11, 705_431)], true)
        }),
        run("8", "MDS certification and exhaustive cross-check", s(30), criterion_8),
        run("9a", "[24,12] extended QR weights A8, A12", s(1), criterion_9a),
        run("9b", "[48,24] minimum weight 12, 17296 words, 8 workers", s(120), criterion_9b),
        run("10", "[48,24,12] weight-12 words in 3 PSL2(47) orbits", s(600), criterion_10),
        run("11", "two full runs give byte-identical JSON", s(600), criterion_11),
        run("-", "Legendre symbol (p/l) = +1 on the grid", s(1), || {
            (GRID.iter().all(|&(p, ell)| legendre(p as i64, ell) == 1), "9 families".into())
        }),
    ];
    // The statement of criterion 5 asks D' to vanish for s in R, but the
    // roots of f are w^s with s in R'. With s in R it fails at every j, so
    // the line is reported red and not counted unless --ignored is given.
    let known_red = if strict { &[][..] } else { &["5"][..] };
    let mut failures = Vec::new();
    for o in &outcomes {
        if known_red.contains(&o.id) {
            if o.pass {
                failures.push(format!("criterion {} unexpectedly passes; revisit the analysis", o.id));
            }
        } else if !o.pass {
            failures.push(format!("criterion {} ({}) failed: {}", o.id, o.title, o.detail));
        }
    }
    let red = outcomes.iter().filter(|o| !o.pass).count();
    println!("acceptance: {} of {} lines pass, {red} red", outcomes.len() - red, outcomes.len());
    if !failures.is_empty() {
        for f in &failures {
            eprintln!("{f}");
        }
        std::process::exit(1);
    }
}
