//! One function per subcommand. Each returns a [`Report`]; domain and budget
//! problems come back as library errors.

use std::collections::BTreeSet;
use std::sync::Arc;

use qrgp_core::cyccode::{divisor_codes, mds_check_via_minors, trace_code, CyclicCode, PackedCode, DEFAULT_BUDGET};
use qrgp_core::cycint::{chebotarev_check, gauss_periods, CycInt};
use qrgp_core::gf::FieldCtx;
use qrgp_core::nt;
use qrgp_core::qrext::{
    build_qr_family, epsilon_falsification, little_poly_split_check, orbit_report, part_one_checks,
    psl2_generators, sigma_map, verify_d_identity, verify_gleason_prange, Check, DCase, EpsilonOutcome,
    LittlePolyGrid, QrFamily, ResidueCase,
};
use qrgp_core::{Error, Result};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::parallel;
use crate::report::{cycint_json, family_fields, fq_json, fq_text, symbols, word_json, Report};

/// Enumerations visiting more messages than this need `--long`.
pub const LONG_MESSAGES: u128 = 1 << 22;
/// Minor sweeps visiting more minors than this need `--long`.
pub const LONG_MINORS: u128 = 200_000;
pub const DEFAULT_SEED: u64 = 0x5eed;

/// Settings shared by the enumeration-heavy commands.
#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    pub budget: u128,
    pub workers: usize,
    pub long: bool,
    pub seed: u64,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { budget: DEFAULT_BUDGET, workers: parallel::default_workers(), long: false, seed: DEFAULT_SEED }
    }
}

fn require_long(opts: &RunOptions, needed: u128, limit: u128, what: &str) -> Result<()> {
    if needed > limit && !opts.long {
        eprintln!("{what} needs {needed} steps, above the default limit of {limit}; rerun with --long");
        return Err(Error::Budget { needed, budget: limit });
    }
    Ok(())
}

/// Exact identities for the Gaussian periods of `ell` in `Z[zeta]`.
pub fn periods(ell: u64) -> Result<Report> {
    let (eta, eta_p) = gauss_periods(ell)?;
    let sign = nt::legendre(-1, ell) as i64;
    let signed_ell = sign * ell as i64;
    let one = CycInt::from_integer(ell, 1)?;
    let mut r = Report::new("periods");
    r.field("ell", json!(ell));
    r.field_with_text("eta", cycint_json(&eta), eta.to_string());
    r.field_with_text("eta_prime", cycint_json(&eta_p), eta_p.to_string());
    r.check(Check::new("periods_sum", (&(&one + &eta) + &eta_p).is_zero()));
    let four_prod = CycInt::from_integer(ell, 4)?.arith(&(&eta * &eta_p), qrgp_core::cycint::CycOp::Mul)?;
    r.check(Check::with_witness(
        "periods_product",
        four_prod == CycInt::from_integer(ell, 1 - signed_ell)?,
        format!("4 eta eta' = {four_prod}"),
    ));
    let diff = &eta - &eta_p;
    let sq = &diff * &diff;
    r.check(Check::with_witness(
        "difference_square",
        sq == CycInt::from_integer(ell, signed_ell)?,
        format!("(eta - eta')^2 = {sq}"),
    ));
    Ok(r)
}

pub fn family(p: u64, ell: u64) -> Result<Report> {
    let fam = build_qr_family(p, ell)?;
    let mut r = Report::new("family");
    family_fields(&mut r, &fam);
    r.field("m", json!(fam.big.degree()));
    r.field_with_text("z", fq_json(&fam.big, fam.z), fq_text(&fam.big, fam.z));
    r.field_with_text("f", json!(fam.f.prime_coeffs()), fam.f.to_string());
    r.field_with_text("g", json!(fam.g.prime_coeffs()), fam.g.to_string());
    r.field("residues", json!(fam.residues));
    for c in &fam.checks {
        r.check(c.clone());
    }
    Ok(r)
}

pub fn gleason_prange(p: u64, ell: u64) -> Result<Report> {
    let fam = build_qr_family(p, ell)?;
    let gp = verify_gleason_prange(&fam)?;
    let mut r = Report::new("gp");
    family_fields(&mut r, &fam);
    r.field("case", json!(case_number(&fam)));
    r.field("rows_checked", json!(gp.row_pass.len()));
    for c in gp.checks() {
        r.check(c);
    }
    r.check(Check::new("sigma_preserves_b_inf", sigma_map(&fam, 1)?.preserves(&fam.b_infinity())?));
    for c in part_one_checks(&fam)? {
        r.check(c);
    }
    Ok(r)
}

pub fn epsilon(p: u64, ell: u64) -> Result<Report> {
    let fam = build_qr_family(p, ell)?;
    let mut r = Report::new("epsilon");
    family_fields(&mut r, &fam);
    match epsilon_falsification(&fam)? {
        EpsilonOutcome::Degenerate => {
            r.field("outcome", json!("degenerate"));
            r.check(Check::with_witness(
                "epsilon_minus_one",
                true,
                "distinction degenerate in characteristic 2",
            ));
        }
        EpsilonOutcome::Falsified { row, image } => {
            r.field("outcome", json!("falsified"));
            r.field("witness_row", json!(row));
            r.field("witness_image", word_json(p, &symbols(&image)));
            r.check(Check::with_witness(
                "epsilon_minus_one_falsified",
                true,
                format!("generator row {row} leaves A_inf"),
            ));
        }
        EpsilonOutcome::NotFalsified => {
            r.field("outcome", json!("not_falsified"));
            r.check(Check::new("epsilon_minus_one_falsified", false));
        }
    }
    Ok(r)
}

fn case_number(fam: &QrFamily) -> u8 {
    match fam.case() {
        ResidueCase::MinusOne => 1,
        ResidueCase::PlusOne => 2,
    }
}

/// `D` (case 1) or `D'` (case 2) on the spanning set. Without `s`, case 2
/// runs every `s` in `R'`.
pub fn d_identity(p: u64, ell: u64, case: Option<u8>, s: Option<u64>) -> Result<Report> {
    let fam = build_qr_family(p, ell)?;
    let case = case.unwrap_or(case_number(&fam));
    let cases: Vec<DCase> = match case {
        1 => vec![DCase::Case1],
        2 => match s {
            Some(s) => vec![DCase::Case2 { s }],
            None => fam.nonresidues.iter().map(|&s| DCase::Case2 { s }).collect(),
        },
        c => return Err(Error::Domain(format!("case must be 1 or 2, got {c}"))),
    };
    if case == 1 && s.is_some_and(|s| s != 1) {
        return Err(Error::Domain("the first case fixes s = 1".into()));
    }
    let mut r = Report::new("d");
    family_fields(&mut r, &fam);
    r.field("case", json!(case));
    let big = fam.big.as_ref();
    let mut runs = Vec::new();
    let mut s_values = Vec::new();
    for dc in cases {
        let d = verify_d_identity(&fam, dc)?;
        let target = if d.root_of_f { "f" } else { "g" };
        let name = if case == 1 { "d_vanishes".to_string() } else { format!("d_prime_vanishes_s{}", d.s) };
        let witness = if d.all_zero() {
            format!("w^{} is a root of {target}", d.s)
        } else {
            format!("w^{} is a root of {target}; nonzero at j = {:?}", d.s, d.nonzero_at())
        };
        r.check(Check::with_witness(&name, d.all_zero(), witness));
        runs.push(json!({
            "s": d.s,
            "root_of_f": d.root_of_f,
            "w": fq_json(big, d.w),
            "values": d.values.iter().map(|&v| fq_json(big, v)).collect::<Vec<_>>(),
        }));
        s_values.push(d.s);
    }
    r.field_with_text("runs", json!(runs), format!("{} value(s) of s", runs.len()));
    let grid = LittlePolyGrid { s_values, triples: None };
    let lp = little_poly_split_check(ell, &grid)?;
    r.check(Check::with_witness(
        "little_polynomial_split",
        lp.pass(),
        format!("{} checked, {} with two roots, {} failures", lp.checked, lp.two_roots, lp.failures.len()),
    ));
    Ok(r)
}

/// The little-polynomial root split on the full `(r, j, k)` grid.
pub fn little(ell: u64, s: Option<u64>) -> Result<Report> {
    let mut grid = LittlePolyGrid::exhaustive(ell)?;
    if let Some(s) = s {
        grid.s_values = vec![s];
    }
    let lp = little_poly_split_check(ell, &grid)?;
    let mut r = Report::new("little");
    r.field("ell", json!(ell));
    r.field("s_values", json!(grid.s_values));
    r.field("checked", json!(lp.checked));
    r.field("two_roots", json!(lp.two_roots));
    r.field("no_roots", json!(lp.no_roots));
    let witness = lp.failures.first().map(|f| format!("first failure (s, r, j, k) = {f:?}"));
    r.check(match witness {
        Some(w) => Check::with_witness("little_polynomial_split", false, w),
        None => Check::new("little_polynomial_split", true),
    });
    Ok(r)
}

fn minor_count(ell: u64, max_order: usize) -> u128 {
    let binom = |n: u128, k: u128| (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1));
    (1..=max_order as u128).map(|k| binom(ell as u128, k).pow(2)).sum()
}

pub fn chebotarev(ell: u64, max_order: Option<usize>, opts: &RunOptions) -> Result<Report> {
    nt::ensure_odd_prime(ell)?;
    let order = max_order.unwrap_or(ell as usize).min(ell as usize);
    require_long(opts, minor_count(ell, order), LONG_MINORS, "this minor sweep")?;
    let rep = chebotarev_check(ell, max_order)?;
    let mut r = Report::new("chebotarev");
    r.field("ell", json!(ell));
    r.field("minors_checked", json!(rep.minors_checked));
    r.field("max_size_checked", json!(rep.max_size_checked));
    r.check(match &rep.witness {
        Some((rows, cols)) => {
            Check::with_witness("all_minors_nonzero", false, format!("rows {rows:?}, cols {cols:?}"))
        }
        None => Check::new("all_minors_nonzero", rep.all_nonzero),
    });
    Ok(r)
}

/// Minor certification plus an exhaustive minimum-distance check of every
/// divisor code small enough for the budget.
pub fn mds(p: u64, ell: u64, opts: &RunOptions) -> Result<Report> {
    let rep = mds_check_via_minors(p, ell)?;
    let mut r = Report::new("mds");
    r.field("ell", json!(ell));
    r.field("p", json!(p));
    r.field("zeta", json!(rep.zeta));
    r.field("minors_checked", json!(rep.minors_checked));
    r.check(match &rep.witness {
        Some((rows, cols)) => Check::with_witness("all_mds", false, format!("rows {rows:?}, cols {cols:?}")),
        None => Check::new("all_mds", rep.all_mds),
    });
    let limit = opts.budget.min(1 << 20);
    let (mut checked, mut skipped) = (0u64, 0u64);
    let mut bad: Option<String> = None;
    for (mask, code) in divisor_codes(p, ell)? {
        let k = code.dimension();
        if k == 0 {
            continue;
        }
        let packed = PackedCode::from_code(&code)?;
        let Ok(total) = packed.check_budget(limit) else {
            skipped += 1;
            continue;
        };
        checked += 1;
        let d = parallel::weight_counts(&packed, total, opts.workers).min_distance();
        if d != Some(ell as usize - k + 1) && bad.is_none() {
            bad = Some(format!("code {mask:b}: k = {k}, d = {d:?}"));
        }
    }
    r.field("exhaustive_codes_checked", json!(checked));
    r.field("exhaustive_codes_skipped", json!(skipped));
    r.check(match bad {
        Some(w) => Check::with_witness("exhaustive_min_distance", false, w),
        None => Check::new("exhaustive_min_distance", true),
    });
    Ok(r)
}

/// Trace code of an element of order `n` in `GF(p^m)` against
/// `((x^n - 1)/h*)` and its dual against `(h)`.
pub fn lemma(p: u64, m: usize, n: u64) -> Result<Report> {
    let ctx = Arc::new(FieldCtx::build(p, m)?);
    let z = ctx.find_element_of_order(n)?;
    let tc = trace_code(&ctx, n as usize, z)?;
    let prime = Arc::new(FieldCtx::prime(p)?);
    let recursive = CyclicCode::recursive_for(&prime, n as usize, &tc.min_poly.reverse()?)?;

    // Every c in GF(p^m), compared as a set with the p^k words of the code.
    let mut words = BTreeSet::new();
    let mut inside = true;
    for c in ctx.elements() {
        let w: Vec<_> = qrgp_core::cyccode::trace_word(&ctx, z, n as usize, c)
            .iter()
            .map(|&t| prime.from_int(ctx.prime_value(t).unwrap_or(0) as i64))
            .collect();
        inside &= recursive.contains(&w)?;
        words.insert(symbols(&w));
    }
    let code_size = (p as u128).pow(recursive.dimension() as u32);

    let mut r = Report::new("lemma");
    r.field("p", json!(p));
    r.field("m", json!(m));
    r.field("n", json!(n));
    r.field_with_text("z", fq_json(&ctx, z), fq_text(&ctx, z));
    r.field_with_text("h", json!(tc.min_poly.prime_coeffs()), tc.min_poly.to_string());
    r.field_with_text("generator", json!(tc.code.generator().prime_coeffs()), tc.code.generator().to_string());
    r.check(Check::new("trace_code_equals_recursive_for_h_reverse", tc.equals_recursive_for_reverse));
    r.check(Check::new("dual_equals_h_code", tc.dual_equals_min_poly_code));
    r.check(Check::with_witness(
        "codeword_sets_equal",
        inside && words.len() as u128 == code_size,
        format!("{} distinct trace words, code has {code_size}", words.len()),
    ));
    Ok(r)
}

/// Weight distribution of `A_inf`, or of `A+` with `base`.
pub fn weights(p: u64, ell: u64, base: bool, opts: &RunOptions) -> Result<Report> {
    let fam = build_qr_family(p, ell)?;
    let packed = if base { PackedCode::from_code(&fam.a_plus)? } else { PackedCode::from_code(&fam.a_infinity())? };
    let total = packed.check_budget(opts.budget)?;
    require_long(opts, total, LONG_MESSAGES, "this enumeration")?;
    let we = parallel::weight_counts(&packed, total, opts.workers);
    let mut r = Report::new("weights");
    family_fields(&mut r, &fam);
    r.field("code", json!(if base { "A+" } else { "A_inf" }));
    r.field("length", json!(packed.length()));
    r.field("dimension", json!(packed.dimension()));
    r.field("counts", json!(we.counts));
    r.field("min_distance", json!(we.min_distance()));
    r.check(Check::with_witness(
        "counts_sum_to_code_size",
        we.total() == total,
        format!("{} words", we.total()),
    ));
    Ok(r)
}

/// Orbits of the minimum-weight words of `A_inf` under shift, multiplier and
/// `sigma`, rerun with a seeded shuffle of the generators.
pub fn orbits(p: u64, ell: u64, opts: &RunOptions) -> Result<Report> {
    let fam = build_qr_family(p, ell)?;
    let ext = fam.a_infinity();
    let packed = PackedCode::from_code(&ext)?;
    let total = packed.check_budget(opts.budget)?;
    require_long(opts, total, LONG_MESSAGES, "this orbit computation")?;
    let gens = psl2_generators(&fam)?;
    let we = parallel::weight_counts(&packed, total, opts.workers);
    let weight = we.min_distance().unwrap_or(0);
    let words = if weight == 0 { Vec::new() } else { parallel::words_of_weight(&packed, total, weight, opts.workers) };
    let rep = orbit_report(weight, &words, &gens, p)?;

    let mut shuffled = gens.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    shuffled.shuffle(&mut rng);
    shuffled.reverse();
    let again = orbit_report(weight, &words, &shuffled, p)?;

    let mut r = Report::new("orbits");
    family_fields(&mut r, &fam);
    r.field("weight", json!(rep.weight));
    r.field("word_count", json!(rep.word_count));
    r.field("orbit_count", json!(rep.orbit_count()));
    r.field("orbit_sizes", json!(rep.orbit_sizes));
    r.field("group_order", json!(rep.group_order));
    r.field("projective", json!(rep.projective));
    r.field("seed", json!(opts.seed));
    r.check(Check::new("orbit_sizes_sum_to_word_count", rep.orbit_sizes.iter().sum::<u64>() == rep.word_count));
    if !rep.projective {
        if let Some(order) = rep.group_order {
            r.check(Check::new("orbit_sizes_divide_group_order", rep.orbit_sizes.iter().all(|s| order % s == 0)));
        }
    }
    r.check(Check::new("shuffled_generators_same_orbits", again.orbit_sizes == rep.orbit_sizes));
    Ok(r)
}
