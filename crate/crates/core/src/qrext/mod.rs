//! Quadratic-residue codes of prime length `l` over `GF(p)`, `(p/l) = +1`,
//! and their extension to length `l + 1`.
//!
//! With `z` a primitive `l`-th root of unity in `GF(p^m)`, the family is built
//! from `x^l - 1 = (x - 1) f(x) g(x)` where `f` has the roots `z^r`, `r` a
//! quadratic residue, and `g` the roots `z^s`, `s` a non-residue. The
//! extension scalar is fixed by `l * gamma = -(eta - eta')`.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::cyccode::{CyclicCode, LinearCode};
use crate::error::{consistency, domain};
use crate::gf::{FieldCtx, FqElem};
use crate::linalg::Matrix;
use crate::nt;
use crate::poly::Poly;
use crate::Result;

mod monomial;
mod orbits;
mod verify;

pub use monomial::{
    multiplier_map, permutation_group_order, psl2_generators, shift_map, sigma_map, MonomialMap,
};
pub use orbits::{min_weight_orbits, min_weight_words, orbit_partition, orbit_report, OrbitReport};
pub use verify::{
    d_value, epsilon_falsification, little_poly_split_check, part_one_checks, verify_d_identity,
    verify_gleason_prange, DCase, DReport, EpsilonOutcome, GleasonPrangeReport, LittlePolyGrid,
    LittlePolyReport,
};

/// One named pass/fail check with an optional human-readable witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub witness: Option<String>,
}

impl Check {
    pub fn new(name: &str, pass: bool) -> Self {
        Check { name: name.to_string(), pass, witness: None }
    }

    pub fn with_witness(name: &str, pass: bool, witness: impl Into<String>) -> Self {
        Check { name: name.to_string(), pass, witness: Some(witness.into()) }
    }
}

/// Quadratic residues and non-residues mod `ell`, ascending.
pub fn qr_split(ell: u64) -> Result<(Vec<u64>, Vec<u64>)> {
    nt::ensure_odd_prime(ell)?;
    Ok(crate::cycint::residue_split(ell))
}

/// `l = 3 mod 4` is the first case, `l = 1 mod 4` the second.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResidueCase {
    MinusOne,
    PlusOne,
}

#[derive(Clone, Debug)]
pub struct QrFamily {
    pub ell: u64,
    pub p: u64,
    pub prime: Arc<FieldCtx>,
    /// `GF(p^m)` with `m = ord_l(p)`.
    pub big: Arc<FieldCtx>,
    /// The designated primitive `l`-th root; a root of `f` by construction.
    pub z: FqElem,
    pub residues: Vec<u64>,
    pub nonresidues: Vec<u64>,
    pub f: Poly,
    pub g: Poly,
    pub eta: FqElem,
    pub eta_prime: FqElem,
    /// `((x - 1) f)`.
    pub a: CyclicCode,
    /// `(f)`.
    pub a_plus: CyclicCode,
    pub b: CyclicCode,
    pub b_plus: CyclicCode,
    pub gamma: FqElem,
    /// Invariants asserted during construction, all passing.
    pub checks: Vec<Check>,
}

impl QrFamily {
    pub fn case(&self) -> ResidueCase {
        if self.ell % 4 == 3 {
            ResidueCase::MinusOne
        } else {
            ResidueCase::PlusOne
        }
    }

    /// `(k)` where `k = (l - 1)/2`.
    pub fn half(&self) -> usize {
        (self.ell as usize - 1) / 2
    }

    /// `(a/l)` embedded in `GF(p)`.
    pub fn legendre_elem(&self, a: i64) -> FqElem {
        self.prime.from_int(nt::legendre(a, self.ell) as i64)
    }

    /// `A_inf`: `A+` extended with `+gamma`.
    pub fn a_infinity(&self) -> ExtendedCode {
        ExtendedCode::extend(&self.a_plus, self.gamma)
    }

    /// `B_inf`: `B+` extended with `-gamma`.
    pub fn b_infinity(&self) -> ExtendedCode {
        ExtendedCode::extend(&self.b_plus, self.prime.neg(self.gamma))
    }
}

fn root_product(big: &Arc<FieldCtx>, z: FqElem, exps: &[u64]) -> Poly {
    exps.iter().fold(Poly::one(big), |acc, &e| &acc * &Poly::linear_root(big, big.pow(z, e)))
}

/// Builds the QR family over `GF(p)` for the odd prime `ell`.
pub fn build_qr_family(p: u64, ell: u64) -> Result<QrFamily> {
    nt::ensure_odd_prime(ell)?;
    if !nt::is_prime(p) {
        return Err(domain!("{p} is not prime"));
    }
    if p == ell || nt::legendre(p as i64, ell) != 1 {
        return Err(domain!("({p}/{ell}) != +1: f and g do not have coefficients in GF({p})"));
    }
    let prime = Arc::new(FieldCtx::prime(p)?);
    let big = Arc::new(FieldCtx::for_roots_of_unity(p, ell)?);
    let z = big.find_root_of_unity(ell)?;
    let (residues, nonresidues) = crate::cycint::residue_split(ell);

    let f = root_product(&big, z, &residues)
        .to_prime_field(&prime)
        .map_err(|_| consistency!("f has coefficients outside GF({p})"))?;
    let g = root_product(&big, z, &nonresidues)
        .to_prime_field(&prime)
        .map_err(|_| consistency!("g has coefficients outside GF({p})"))?;

    let period = |exps: &[u64]| -> Result<FqElem> {
        let sum = exps.iter().fold(FqElem::ZERO, |acc, &e| big.add(acc, big.pow(z, e)));
        big.prime_value(sum)
            .map(|v| prime.from_int(v as i64))
            .ok_or_else(|| consistency!("Gaussian period outside GF({p})"))
    };
    let eta = period(&residues)?;
    let eta_prime = period(&nonresidues)?;

    let k = prime.as_ref();
    let x_minus_one = Poly::from_ints(&prime, &[-1, 1]);
    let a = CyclicCode::new(&prime, ell as usize, &x_minus_one * &f)?;
    let a_plus = CyclicCode::new(&prime, ell as usize, f.clone())?;
    let b = CyclicCode::new(&prime, ell as usize, &x_minus_one * &g)?;
    let b_plus = CyclicCode::new(&prime, ell as usize, g.clone())?;

    let ell_elem = k.from_int(ell as i64);
    let diff = k.sub(eta, eta_prime);
    let gamma = k.div(k.neg(diff), ell_elem)?;

    let half = (ell as usize - 1) / 2;
    let minus_one_sym = nt::legendre(-1, ell) as i64;
    let big_f = f.embed(&big)?;
    let x_l_minus_one = Poly::x_pow_minus_one(&prime, ell as usize);

    let mut checks = Vec::new();
    checks.push(Check::new("factorization", &(&x_minus_one * &f) * &g == x_l_minus_one));
    checks.push(Check::new(
        "f_vanishes_on_residue_powers",
        residues.iter().all(|&r| big_f.eval(big.pow(z, r)).is_zero()),
    ));
    checks.push(Check::new(
        "trace_coefficients",
        f.coeff(half - 1) == k.neg(eta) && g.coeff(half - 1) == k.neg(eta_prime),
    ));
    checks.push(Check::new("periods_sum", k.add(k.add(k.one(), eta), eta_prime).is_zero()));
    checks.push(Check::new(
        "code_nesting",
        a_plus.generator().divides(a.generator())
            && b_plus.generator().divides(b.generator())
            && a.dimension() == half
            && a_plus.dimension() == half + 1,
    ));
    let f_rev = f.reverse()?;
    let g_rev = g.reverse()?;
    let reverse_ok = if minus_one_sym == -1 { f_rev == -&g } else { f_rev == f && g_rev == g };
    checks.push(Check::with_witness(
        "reverse_identity",
        reverse_ok,
        alloc::format!("f* = {f_rev}"),
    ));
    let zroot_target = if minus_one_sym == -1 { &f_rev } else { &g_rev };
    let zroot = zroot_target.exact_quotient_of(&x_l_minus_one).map(|q| q.monic());
    checks.push(Check::new("zroot_generator", zroot.as_ref().ok() == Some(a.generator())));
    checks.push(Check::new(
        "gamma_square",
        k.mul(ell_elem, k.mul(gamma, gamma)) == k.from_int(minus_one_sym),
    ));
    checks.push(Check::new("gamma_sign", k.add(k.mul(ell_elem, gamma), diff).is_zero()));

    if let Some(bad) = checks.iter().find(|c| !c.pass) {
        return Err(consistency!("QR family (p={p}, l={ell}) failed {}", bad.name));
    }
    Ok(QrFamily {
        ell,
        p,
        prime,
        big,
        z,
        residues,
        nonresidues,
        f,
        g,
        eta,
        eta_prime,
        a,
        a_plus,
        b,
        b_plus,
        gamma,
        checks,
    })
}

/// A cyclic code of length `n` extended by `a_inf = gamma * sum(a_i)`;
/// coordinates are `0, 1, ..., n-1, inf` with `inf` last.
#[derive(Clone, Debug)]
pub struct ExtendedCode {
    base: CyclicCode,
    gamma: FqElem,
    matrix: Matrix,
}

impl ExtendedCode {
    pub fn extend(base: &CyclicCode, gamma: FqElem) -> Self {
        let k = base.ctx().clone();
        let rows = base
            .generator_matrix()
            .into_rows()
            .into_iter()
            .map(|mut row| {
                let sum = row.iter().fold(FqElem::ZERO, |acc, &c| k.add(acc, c));
                row.push(k.mul(gamma, sum));
                row
            })
            .collect();
        let matrix = Matrix::new(k, base.length() + 1, rows).expect("rows have length n + 1");
        ExtendedCode { base: base.clone(), gamma, matrix }
    }

    pub fn base(&self) -> &CyclicCode {
        &self.base
    }

    pub fn gamma(&self) -> FqElem {
        self.gamma
    }

    pub fn length(&self) -> usize {
        self.base.length() + 1
    }

    pub fn dimension(&self) -> usize {
        self.base.dimension()
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        self.base.ctx()
    }

    /// `(a; gamma * sum(a))` for a word `a` of the base code.
    pub fn extend_word(&self, finite: &[FqElem]) -> Vec<FqElem> {
        let k = self.ctx();
        let sum = finite.iter().fold(FqElem::ZERO, |acc, &c| k.add(acc, c));
        let mut w = finite.to_vec();
        w.push(k.mul(self.gamma, sum));
        w
    }

    /// Membership: the finite part lies in the base code and the last
    /// coordinate is `gamma` times the coordinate sum.
    pub fn contains(&self, word: &[FqElem]) -> Result<bool> {
        if word.len() != self.length() {
            return Err(domain!("word of length {} for a code of length {}", word.len(), self.length()));
        }
        let (finite, inf) = word.split_at(self.base.length());
        Ok(self.base.contains(finite)? && self.extend_word(finite)[finite.len()] == inf[0])
    }

    /// Rows spanning the orthogonal complement.
    pub fn parity_check_matrix(&self) -> Matrix {
        self.matrix.nullspace()
    }

    /// Membership through the extended parity-check matrix.
    pub fn contains_via_parity_check(&self, word: &[FqElem]) -> Result<bool> {
        if word.len() != self.length() {
            return Err(domain!("word of length {} for a code of length {}", word.len(), self.length()));
        }
        Ok(self.parity_check_matrix().mul_vec(word).iter().all(|c| c.is_zero()))
    }

    /// `(1, ..., 1; n * gamma)`.
    pub fn all_ones(&self) -> Vec<FqElem> {
        let n = self.base.length();
        self.extend_word(&alloc::vec![FqElem::ONE; n])
    }
}

impl LinearCode for ExtendedCode {
    fn generator_matrix(&self) -> Matrix {
        self.matrix.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyccode::{min_distance, weight_enumerator, DEFAULT_BUDGET};
    use crate::Error;

    #[test]
    fn residue_sets() {
        assert_eq!(qr_split(7).unwrap(), (alloc::vec![1, 2, 4], alloc::vec![3, 5, 6]));
        assert_eq!(qr_split(5).unwrap(), (alloc::vec![1, 4], alloc::vec![2, 3]));
        // Squaring oracle.
        let mut sq: Vec<u64> = (1..11u64).map(|x| x * x % 11).collect();
        sq.sort();
        sq.dedup();
        assert_eq!(qr_split(11).unwrap().0, sq);
        assert!(qr_split(15).is_err());
    }

    #[test]
    fn binary_hamming_family() {
        let fam = build_qr_family(2, 7).unwrap();
        assert_eq!(fam.a_plus.dimension(), 4);
        assert_eq!(min_distance(&fam.a_plus, DEFAULT_BUDGET).unwrap(), 3);
        assert_eq!(fam.gamma, FqElem::ONE);
        let ext = fam.a_infinity();
        assert_eq!(weight_enumerator(&ext, DEFAULT_BUDGET).unwrap().counts, [1, 0, 0, 0, 14, 0, 0, 0, 1]);
        assert!(fam.checks.iter().all(|c| c.pass));
    }

    #[test]
    fn golay_families() {
        let fam = build_qr_family(2, 23).unwrap();
        assert_eq!(fam.a_plus.dimension(), 12);
        assert_eq!(fam.gamma, FqElem::ONE);
        assert_eq!(min_distance(&fam.a_plus, DEFAULT_BUDGET).unwrap(), 7);
        let we = weight_enumerator(&fam.a_infinity(), DEFAULT_BUDGET).unwrap();
        assert_eq!((we.counts[8], we.counts[12], we.counts[16], we.counts[24]), (759, 2576, 759, 1));

        let fam = build_qr_family(3, 11).unwrap();
        assert_eq!(fam.a_plus.dimension(), 6);
        assert_eq!(min_distance(&fam.a_plus, DEFAULT_BUDGET).unwrap(), 5);
        let k = &fam.prime;
        // l gamma^2 = (-1/11) = -1 in GF(3).
        assert_eq!(k.mul(k.from_int(11), k.mul(fam.gamma, fam.gamma)), k.from_int(-1));
    }

    #[test]
    fn rejects_nonresidue_characteristic() {
        assert!(matches!(build_qr_family(2, 11), Err(Error::Domain(_))));
        assert!(matches!(build_qr_family(7, 7), Err(Error::Domain(_))));
        assert!(build_qr_family(4, 7).is_err());
    }

    #[test]
    fn extension_membership() {
        let fam = build_qr_family(3, 13).unwrap();
        let ext = fam.a_infinity();
        for row in ext.generator_matrix().rows() {
            assert!(ext.contains(row).unwrap());
            assert!(ext.contains_via_parity_check(row).unwrap());
        }
        // A zero-sum word gets a zero infinite coordinate.
        let word = fam.a.generator_matrix().rows()[0].clone();
        assert!(ext.extend_word(&word).last().unwrap().is_zero());
        let mut bad = ext.generator_matrix().rows()[0].clone();
        let last = bad.len() - 1;
        bad[last] = fam.prime.add(bad[last], FqElem::ONE);
        assert!(!ext.contains(&bad).unwrap());
        assert!(!ext.contains_via_parity_check(&bad).unwrap());
        let k = &fam.prime;
        assert_eq!(*ext.all_ones().last().unwrap(), k.mul(k.from_int(13), fam.gamma));
    }
}
