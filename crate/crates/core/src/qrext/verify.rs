//! Mechanical checks of the invariance of `A_inf` under `sigma`.

use alloc::format;
use alloc::vec::Vec;

use super::{sigma_map, Check, QrFamily, ResidueCase};
use crate::cyccode::{trace_word, LinearCode};
use crate::error::domain;
use crate::gf::FqElem;
use crate::nt;
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GleasonPrangeReport {
    pub ell: u64,
    pub p: u64,
    /// Per generator row of `A_inf`: its image lies in `A_inf`.
    pub row_pass: Vec<bool>,
    /// The images span `A_inf` exactly.
    pub row_space_equal: bool,
}

impl GleasonPrangeReport {
    pub fn pass(&self) -> bool {
        self.row_space_equal && self.row_pass.iter().all(|&b| b)
    }

    pub fn checks(&self) -> Vec<Check> {
        let failed: Vec<usize> = (0..self.row_pass.len()).filter(|&i| !self.row_pass[i]).collect();
        let rows = if failed.is_empty() {
            Check::new("sigma_rows_in_a_inf", true)
        } else {
            Check::with_witness("sigma_rows_in_a_inf", false, format!("rows {failed:?}"))
        };
        alloc::vec![rows, Check::new("sigma_row_space_equal", self.row_space_equal)]
    }
}

/// Applies `sigma` (`e0 = +1`) to every generator row of `A_inf`, testing
/// membership through the parity-check matrix, then compares row spaces.
pub fn verify_gleason_prange(family: &QrFamily) -> Result<GleasonPrangeReport> {
    let ext = family.a_infinity();
    let sigma = sigma_map(family, 1)?;
    let gen = ext.generator_matrix();
    let image = sigma.apply_matrix(&gen)?;
    let row_pass = image
        .rows()
        .iter()
        .map(|r| ext.contains_via_parity_check(r))
        .collect::<Result<Vec<_>>>()?;
    Ok(GleasonPrangeReport {
        ell: family.ell,
        p: family.p,
        row_pass,
        row_space_equal: image.same_row_space(&gen),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EpsilonOutcome {
    /// `-1 = 1` in characteristic 2.
    Degenerate,
    /// Generator row `row` of `A_inf` maps outside `A_inf` under `e0 = -1`.
    Falsified { row: usize, image: Vec<FqElem> },
    NotFalsified,
}

/// Looks for a generator row of `A_inf` that `sigma` with `e0 = -1` moves
/// out of the code.
pub fn epsilon_falsification(family: &QrFamily) -> Result<EpsilonOutcome> {
    if family.p == 2 {
        return Ok(EpsilonOutcome::Degenerate);
    }
    let ext = family.a_infinity();
    let sigma = sigma_map(family, -1)?;
    for (row, word) in ext.generator_matrix().rows().iter().enumerate() {
        let image = sigma.apply(word)?;
        if !ext.contains_via_parity_check(&image)? {
            return Ok(EpsilonOutcome::Falsified { row, image });
        }
    }
    Ok(EpsilonOutcome::NotFalsified)
}

/// Part I: `<1,0>_A sigma` against `<1,0>_B` and the trace words.
///
/// The product `<1,0>_A sigma . <1,0>_B` equals `l gamma (1 - (-1/l))`, so
/// it vanishes in the second case (and in characteristic 2); in the first
/// case the self-orthogonal partner `<1,0>_A` is used.
pub fn part_one_checks(family: &QrFamily) -> Result<Vec<Check>> {
    let k = family.prime.as_ref();
    let big = family.big.as_ref();
    let n = family.ell as usize;
    let a_ext = family.a_infinity();
    let b_ext = family.b_infinity();
    let one_a = a_ext.all_ones();
    let one_b = b_ext.all_ones();
    let image = sigma_map(family, 1)?.apply(&one_a)?;
    let dot = |x: &[FqElem], y: &[FqElem]| {
        x.iter().zip(y).fold(FqElem::ZERO, |acc, (&a, &b)| k.add(acc, k.mul(a, b)))
    };

    let mut checks = Vec::new();
    let with_b = dot(&image, &one_b);
    let expected = k.mul(
        k.mul(k.from_int(family.ell as i64), family.gamma),
        k.from_int(1 - nt::legendre(-1, family.ell) as i64),
    );
    checks.push(Check::with_witness(
        "ia_dot_formula",
        with_b == expected,
        format!("<1,0>_A sigma . <1,0>_B = {}", with_b.index()),
    ));
    let (partner, label) = match family.case() {
        ResidueCase::PlusOne => (&one_b, "B"),
        ResidueCase::MinusOne => (&one_a, "A"),
    };
    let ia = dot(&image, partner);
    checks.push(Check::with_witness(
        "ia_orthogonal",
        ia.is_zero(),
        format!("<1,0>_A sigma . <1,0>_{label} = {}", ia.index()),
    ));

    // F_z(c) with z a root of f lies in A (first case) or B (second case);
    // its product with <1,0>_A sigma is T(c)(l gamma + eta - eta').
    let bracket = k.add(k.mul(k.from_int(family.ell as i64), family.gamma), k.sub(family.eta, family.eta_prime));
    let mut formula = true;
    let mut orthogonal = true;
    for j in 0..n {
        let c = big.pow(family.z, j as u64);
        let mut word = trace_word(big, family.z, n, c);
        word.push(FqElem::ZERO);
        let word: Vec<FqElem> = word.iter().map(|&t| k.from_int(big.prime_value(t).unwrap_or(0) as i64)).collect();
        let d = dot(&word, &image);
        let t = k.from_int(big.prime_value(big.trace(c)).unwrap_or(0) as i64);
        formula &= d == k.mul(t, bracket);
        orthogonal &= d.is_zero();
    }
    checks.push(Check::new("ib_dot_formula", formula));
    checks.push(Check::new("ib_orthogonal", orthogonal));
    checks.push(Check::new("sigma_all_ones_in_a_inf", a_ext.contains_via_parity_check(&image)?));
    Ok(checks)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DCase {
    /// `l = 3 mod 4`, `w = z` a root of `f`.
    Case1,
    /// `l = 1 mod 4`, `w` a root of `g`, evaluated against `w^s`.
    Case2 { s: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DReport {
    pub ell: u64,
    pub p: u64,
    pub case: DCase,
    /// Root of unity `w` used in `D(c) = sum e_i T(c w^(-1/i)) w^(s i)`.
    pub w: FqElem,
    pub s: u64,
    /// `w^s` is a root of `f`.
    pub root_of_f: bool,
    /// `D(w^j)` for `j = 1..l-1`.
    pub values: Vec<FqElem>,
}

impl DReport {
    pub fn all_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    pub fn nonzero_at(&self) -> Vec<usize> {
        (0..self.values.len()).filter(|&i| !self.values[i].is_zero()).map(|i| i + 1).collect()
    }
}

/// `sum_{0<i<l} (i/l) T(c w^(-1/i)) w^(s i)` in `GF(p^m)`.
pub fn d_value(family: &QrFamily, w: FqElem, s: u64, c: FqElem) -> FqElem {
    let big = family.big.as_ref();
    let ell = family.ell;
    let mut acc = FqElem::ZERO;
    for i in 1..ell {
        let neg_inv = ell - nt::mod_inv(i, ell).expect("unit");
        let t = big.trace(big.mul(c, big.pow(w, neg_inv)));
        let term = big.mul(t, big.pow(w, nt::mod_mul(s, i, ell)));
        acc = if nt::legendre(i as i64, ell) == 1 { big.add(acc, term) } else { big.sub(acc, term) };
    }
    acc
}

/// Evaluates `D` (first case) or `D'` (second case) on `w^j`, `0 < j < l`.
pub fn verify_d_identity(family: &QrFamily, case: DCase) -> Result<DReport> {
    let ell = family.ell;
    let big = family.big.as_ref();
    let (w, s) = match (case, family.case()) {
        (DCase::Case1, ResidueCase::MinusOne) => (family.z, 1),
        (DCase::Case2 { s }, ResidueCase::PlusOne) => {
            if s % ell == 0 {
                return Err(domain!("s must be a unit mod {ell}"));
            }
            let n0 = family.nonresidues[0];
            (big.pow(family.z, n0), s % ell)
        }
        (DCase::Case1, _) => return Err(domain!("the first case needs l = 3 mod 4, got l = {ell}")),
        (DCase::Case2 { .. }, _) => return Err(domain!("the second case needs l = 1 mod 4, got l = {ell}")),
    };
    let exponent = match case {
        DCase::Case1 => s,
        DCase::Case2 { .. } => nt::mod_mul(family.nonresidues[0], s, ell),
    };
    let values = (1..ell).map(|j| d_value(family, w, s, big.pow(w, j))).collect();
    Ok(DReport {
        ell,
        p: family.p,
        case,
        w,
        s,
        root_of_f: family.residues.contains(&exponent),
        values,
    })
}

/// Parameters for [`little_poly_split_check`]. `triples` lists `(r, j, k)`;
/// `None` means every `r` in `R`, `0 < j < l`, `0 <= k < l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LittlePolyGrid {
    pub s_values: Vec<u64>,
    pub triples: Option<Vec<(u64, u64, u64)>>,
}

impl LittlePolyGrid {
    /// `s = 1` when `l = 3 mod 4`, every `s` in `R'` when `l = 1 mod 4`.
    pub fn exhaustive(ell: u64) -> Result<Self> {
        let (_, nonresidues) = super::qr_split(ell)?;
        let s_values = if ell % 4 == 3 { alloc::vec![1] } else { nonresidues };
        Ok(LittlePolyGrid { s_values, triples: None })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LittlePolyReport {
    pub ell: u64,
    pub checked: u64,
    pub two_roots: u64,
    pub no_roots: u64,
    /// `(s, r, j, k)` where the root count or the split failed.
    pub failures: Vec<(u64, u64, u64, u64)>,
}

impl LittlePolyReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For `i^2 + s^-1 (r j - k) i - s^-1 r` over `GF(l)`: 0 or 2 distinct
/// roots, and when 2, one in `R` and one in `R'`. Roots by brute force.
pub fn little_poly_split_check(ell: u64, grid: &LittlePolyGrid) -> Result<LittlePolyReport> {
    let (residues, _) = super::qr_split(ell)?;
    let triples: Vec<(u64, u64, u64)> = match &grid.triples {
        Some(t) => t.clone(),
        None => residues
            .iter()
            .flat_map(|&r| (1..ell).flat_map(move |j| (0..ell).map(move |k| (r, j, k))))
            .collect(),
    };
    let mut report = LittlePolyReport { ell, ..Default::default() };
    for &s in &grid.s_values {
        let s_inv = nt::mod_inv(s % ell, ell).ok_or_else(|| domain!("s = {s} is not a unit mod {ell}"))?;
        for &(r, j, k) in &triples {
            let b = nt::mod_mul(s_inv, (nt::mod_mul(r % ell, j % ell, ell) + ell - k % ell) % ell, ell);
            let c = (ell - nt::mod_mul(s_inv, r % ell, ell)) % ell;
            let roots: Vec<u64> =
                (0..ell).filter(|&i| (nt::mod_mul(i, i, ell) + nt::mod_mul(b, i, ell) + c) % ell == 0).collect();
            report.checked += 1;
            let ok = match roots.as_slice() {
                [] => {
                    report.no_roots += 1;
                    true
                }
                [x, y] => {
                    report.two_roots += 1;
                    nt::legendre(*x as i64, ell) * nt::legendre(*y as i64, ell) == -1
                }
                _ => false,
            };
            if !ok {
                report.failures.push((s, r, j, k));
            }
        }
    }
    Ok(report)
}
