//! Exact arithmetic in the cyclotomic ring `Z[z]/Phi_l(z)` for an odd prime `l`.
//!
//! Elements are kept on the power basis `1, z, ..., z^(l-2)`; the relation
//! `z^(l-1) = -(1 + z + ... + z^(l-2))` puts every element in a unique
//! canonical form, so structural equality is ring equality.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{consistency, domain};
use crate::nt;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycInt {
    ell: u32,
    coeffs: Vec<BigInt>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycOp {
    Add,
    Sub,
    Mul,
    Neg,
}

fn check_ell(ell: u64) -> Result<u32> {
    nt::ensure_odd_prime(ell)?;
    u32::try_from(ell).map_err(|_| domain!("{ell} is too large"))
}

impl CycInt {
    pub fn zero(ell: u64) -> Result<Self> {
        let ell = check_ell(ell)?;
        Ok(Self::zero_unchecked(ell))
    }

    fn zero_unchecked(ell: u32) -> Self {
        CycInt { ell, coeffs: vec![BigInt::zero(); ell as usize - 1] }
    }

    pub fn from_integer(ell: u64, n: impl Into<BigInt>) -> Result<Self> {
        let mut out = Self::zero(ell)?;
        out.coeffs[0] = n.into();
        Ok(out)
    }

    /// Builds an element from its canonical coefficients `c_0..c_{l-2}`.
    pub fn from_coeffs(ell: u64, coeffs: Vec<BigInt>) -> Result<Self> {
        let l = check_ell(ell)?;
        if coeffs.len() != l as usize - 1 {
            return Err(domain!("expected {} coefficients, got {}", l - 1, coeffs.len()));
        }
        Ok(CycInt { ell: l, coeffs })
    }

    /// Reduces `sum c_i z^i` given on the redundant basis `1, z, ..., z^(l-1)`.
    fn from_cyclic(ell: u32, mut cyc: Vec<BigInt>) -> Self {
        debug_assert_eq!(cyc.len(), ell as usize);
        let top = cyc.pop().expect("l >= 3");
        if !top.is_zero() {
            for c in cyc.iter_mut() {
                *c -= &top;
            }
        }
        CycInt { ell, coeffs: cyc }
    }

    /// Reduces an integer combination of arbitrary powers of `z`.
    pub fn from_exponent_sum(ell: u64, terms: impl IntoIterator<Item = (i64, i64)>) -> Result<Self> {
        let l = check_ell(ell)?;
        let mut cyc = vec![BigInt::zero(); l as usize];
        for (e, c) in terms {
            cyc[nt::reduce(e, ell) as usize] += c;
        }
        Ok(Self::from_cyclic(l, cyc))
    }

    /// `z^(e mod l)`.
    pub fn zeta_pow(ell: u64, e: i64) -> Result<Self> {
        Self::from_exponent_sum(ell, [(e, 1)])
    }

    pub fn ell(&self) -> u64 {
        self.ell as u64
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `Some(n)` when the element is the rational integer `n`.
    pub fn as_integer(&self) -> Option<&BigInt> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| &self.coeffs[0])
    }

    fn cyclic(&self) -> Vec<BigInt> {
        let mut c = self.coeffs.clone();
        c.push(BigInt::zero());
        c
    }

    fn assert_same_ring(&self, other: &CycInt) {
        assert_eq!(self.ell, other.ell, "cyclotomic integers for different primes");
    }

    /// Ring operation with an explicit ring check; `Neg` ignores `other`.
    pub fn arith(&self, other: &CycInt, op: CycOp) -> Result<CycInt> {
        if op != CycOp::Neg && self.ell != other.ell {
            return Err(domain!("mismatched primes {} and {}", self.ell, other.ell));
        }
        Ok(match op {
            CycOp::Add => self + other,
            CycOp::Sub => self - other,
            CycOp::Mul => self * other,
            CycOp::Neg => -self,
        })
    }

    /// Multiplication by `z^e`.
    pub fn mul_zeta_pow(&self, e: i64) -> CycInt {
        let l = self.ell as usize;
        let shift = nt::reduce(e, l as u64) as usize;
        let src = self.cyclic();
        let mut out = vec![BigInt::zero(); l];
        for (i, c) in src.into_iter().enumerate() {
            out[(i + shift) % l] = c;
        }
        Self::from_cyclic(self.ell, out)
    }

    /// Galois conjugate under `z -> z^t`, `t` a unit mod `l`.
    pub fn conjugate(&self, t: u64) -> Result<CycInt> {
        let l = self.ell as u64;
        if t % l == 0 {
            return Err(domain!("{t} is not a unit mod {l}"));
        }
        let mut out = vec![BigInt::zero(); l as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[nt::mod_mul(i as u64, t, l) as usize] += c;
        }
        Ok(Self::from_cyclic(self.ell, out))
    }

    /// Product of the nontrivial conjugates, so that `self * adjugate` is the norm.
    fn norm_adjugate(&self) -> CycInt {
        (2..self.ell as u64).fold(Self::one_unchecked(self.ell), |acc, t| {
            &acc * &self.conjugate(t).expect("unit")
        })
    }

    fn one_unchecked(ell: u32) -> Self {
        let mut one = Self::zero_unchecked(ell);
        one.coeffs[0] = BigInt::one();
        one
    }

    /// Field norm to `Q`, an integer.
    pub fn norm(&self) -> BigInt {
        let n = self * &self.norm_adjugate();
        n.as_integer().cloned().expect("norm is rational")
    }

    /// Exact quotient `self / d`; errors when `d` is zero or does not divide.
    pub fn exact_div(&self, d: &CycInt) -> Result<CycInt> {
        self.assert_same_ring(d);
        if d.is_zero() {
            return Err(Error::Arithmetic("division by zero".into()));
        }
        let (numer, denom) = match d.as_integer() {
            Some(n) => (self.clone(), n.clone()),
            None => {
                let adj = d.norm_adjugate();
                let n = (d * &adj).as_integer().cloned().expect("norm is rational");
                (self * &adj, n)
            }
        };
        let mut coeffs = Vec::with_capacity(numer.coeffs.len());
        for c in numer.coeffs {
            let (q, r) = c.div_rem(&denom);
            if !r.is_zero() {
                return Err(Error::Arithmetic("inexact division in Z[z]".into()));
            }
            coeffs.push(q);
        }
        Ok(CycInt { ell: self.ell, coeffs })
    }
}

impl Add for &CycInt {
    type Output = CycInt;
    fn add(self, rhs: &CycInt) -> CycInt {
        self.assert_same_ring(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        CycInt { ell: self.ell, coeffs }
    }
}

impl Sub for &CycInt {
    type Output = CycInt;
    fn sub(self, rhs: &CycInt) -> CycInt {
        self.assert_same_ring(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        CycInt { ell: self.ell, coeffs }
    }
}

impl Neg for &CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        CycInt { ell: self.ell, coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

impl Mul for &CycInt {
    type Output = CycInt;
    fn mul(self, rhs: &CycInt) -> CycInt {
        self.assert_same_ring(rhs);
        let l = self.ell as usize;
        let mut out = vec![BigInt::zero(); l];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[(i + j) % l] += a * b;
                }
            }
        }
        CycInt::from_cyclic(self.ell, out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for CycInt {
            type Output = CycInt;
            fn $method(self, rhs: CycInt) -> CycInt {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        -&self
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
                (true, false) => {}
            }
            first = false;
            let mag = c.abs();
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("z")?,
                _ => write!(f, "z^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycInt[l={}]({self})", self.ell)
    }
}

/// Residues and non-residues mod `ell`, ascending.
pub(crate) fn residue_split(ell: u64) -> (Vec<u64>, Vec<u64>) {
    (1..ell).partition(|&a| nt::legendre(a as i64, ell) == 1)
}

/// Gaussian periods `(eta, eta')`: sums of `z^r` over residues and non-residues.
pub fn gauss_periods(ell: u64) -> Result<(CycInt, CycInt)> {
    check_ell(ell)?;
    let (res, non) = residue_split(ell);
    let eta = CycInt::from_exponent_sum(ell, res.iter().map(|&r| (r as i64, 1)))?;
    let eta_prime = CycInt::from_exponent_sum(ell, non.iter().map(|&s| (s as i64, 1)))?;
    Ok((eta, eta_prime))
}

/// `l * gamma = -(eta - eta')`, checked against `(eta - eta')^2 = (-1/l) l`.
pub fn gamma_times_ell(ell: u64) -> Result<CycInt> {
    let (eta, eta_prime) = gauss_periods(ell)?;
    let diff = &eta - &eta_prime;
    let sign = nt::legendre(-1, ell) as i64;
    let expected = CycInt::from_integer(ell, sign * ell as i64)?;
    if &diff * &diff != expected {
        return Err(consistency!("(eta - eta')^2 != (-1/{ell}) {ell}"));
    }
    Ok(-&diff)
}

fn check_index_sets(ell: u64, rows: &[usize], cols: &[usize]) -> Result<()> {
    if rows.is_empty() || rows.len() != cols.len() {
        return Err(domain!("minor needs equal nonempty index sets, got {} and {}", rows.len(), cols.len()));
    }
    for set in [rows, cols] {
        if set.iter().any(|&i| i as u64 >= ell) {
            return Err(domain!("index out of range 0..{ell}"));
        }
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != set.len() {
            return Err(domain!("repeated index in {set:?}"));
        }
    }
    Ok(())
}

fn character_submatrix(ell: u64, rows: &[usize], cols: &[usize]) -> Vec<Vec<CycInt>> {
    rows.iter()
        .map(|&i| {
            cols.iter()
                .map(|&j| CycInt::zeta_pow(ell, nt::mod_mul(i as u64, j as u64, ell) as i64).expect("checked prime"))
                .collect()
        })
        .collect()
}

/// Determinant of the submatrix `(z^(ij))` for `i in rows`, `j in cols`, taken
/// in the given order, by fraction-free Bareiss elimination.
pub fn minor_det(ell: u64, rows: &[usize], cols: &[usize]) -> Result<CycInt> {
    check_ell(ell)?;
    check_index_sets(ell, rows, cols)?;
    bareiss_det(character_submatrix(ell, rows, cols))
}

/// Bareiss elimination over `Z[z]/Phi_l`; every division is exact.
pub fn bareiss_det(mut m: Vec<Vec<CycInt>>) -> Result<CycInt> {
    let n = m.len();
    if n == 0 || m.iter().any(|r| r.len() != n) {
        return Err(domain!("determinant needs a nonempty square matrix"));
    }
    let ell = m[0][0].ell;
    let mut negate = false;
    let mut prev = CycInt::one_unchecked(ell);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Ok(CycInt::zero_unchecked(ell));
            };
            m.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Laplace expansion along the first row. Exponential; intended as an
/// independent check of [`minor_det`] for small orders.
pub fn minor_det_cofactor(ell: u64, rows: &[usize], cols: &[usize]) -> Result<CycInt> {
    check_ell(ell)?;
    check_index_sets(ell, rows, cols)?;
    Ok(cofactor(&character_submatrix(ell, rows, cols)))
}

fn cofactor(m: &[Vec<CycInt>]) -> CycInt {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    let mut acc = CycInt::zero_unchecked(m[0][0].ell);
    for (t, a) in m[0].iter().enumerate() {
        let sub: Vec<Vec<CycInt>> = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(j, _)| j != t).map(|(_, c)| c.clone()).collect())
            .collect();
        let term = a * &cofactor(&sub);
        acc = if t % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Outcome of sweeping the square minors of `(z^(ij))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChebotarevReport {
    pub ell: u64,
    pub minors_checked: u64,
    pub max_size_checked: usize,
    pub all_nonzero: bool,
    /// First vanishing minor as (rows, cols), when one exists.
    pub witness: Option<(Vec<usize>, Vec<usize>)>,
}

/// Per-level storage cap for the minor sweep, in `i64` words.
const SWEEP_LEVEL_WORDS: u128 = 1 << 25;

/// k-subsets of `0..n` as bitmasks, in lexicographic order of their sorted
/// element lists.
pub(crate) fn subsets_lex(n: usize, k: usize) -> Vec<u32> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().fold(0u32, |m, &i| m | 1 << i));
        let Some(pos) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            break;
        };
        idx[pos] += 1;
        for i in pos + 1..k {
            idx[i] = idx[i - 1] + 1;
        }
    }
    out
}

pub(crate) fn mask_elements(mask: u32) -> Vec<usize> {
    (0..32).filter(|&i| mask >> i & 1 == 1).collect()
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// Visits every square minor of `(z^(ij))` of order `1..=max_order`, ordered by
/// size, then row set, then column set (both lexicographic). Values are given
/// on the redundant basis `1, z, ..., z^(l-1)`.
///
/// Minors of order `k` are obtained from those of order `k - 1` by expansion
/// along the smallest row, so each costs `k` rotated additions and no
/// division. Coefficients are bounded by `k!` in absolute value.
fn sweep_minors(ell: u64, max_order: usize, mut visit: impl FnMut(u32, u32, &[i64]) -> bool) -> Result<()> {
    let l = ell as usize;
    for k in 1..=max_order {
        let words = binomial(l as u128, k as u128).pow(2) * l as u128;
        if words > SWEEP_LEVEL_WORDS {
            return Err(Error::Budget { needed: words, budget: SWEEP_LEVEL_WORDS });
        }
    }
    let mut rank = vec![0u32; 1 << l];
    let mut prev: Vec<i64> = Vec::new();
    let mut prev_count = 0usize;
    for k in 1..=max_order {
        let subsets = subsets_lex(l, k);
        for (i, &s) in subsets.iter().enumerate() {
            rank[s as usize] = i as u32;
        }
        let count = subsets.len();
        let mut cur = vec![0i64; count * count * l];
        for (ri, &rmask) in subsets.iter().enumerate() {
            let r0 = rmask.trailing_zeros() as usize;
            let rrest = rmask & !(1 << r0);
            for (ci, &cmask) in subsets.iter().enumerate() {
                let slot = (ri * count + ci) * l;
                let out = &mut cur[slot..slot + l];
                if k == 1 {
                    out[(r0 * cmask.trailing_zeros() as usize) % l] = 1;
                } else {
                    let rr = rank[rrest as usize] as usize;
                    for (t, c) in mask_elements(cmask).into_iter().enumerate() {
                        let crest = cmask & !(1 << c);
                        let src = (rr * prev_count + rank[crest as usize] as usize) * l;
                        let shift = (r0 * c) % l;
                        let sub = &prev[src..src + l];
                        for (e, &v) in sub.iter().enumerate() {
                            let dst = &mut out[(e + shift) % l];
                            if t % 2 == 0 {
                                *dst += v;
                            } else {
                                *dst -= v;
                            }
                        }
                    }
                }
                if !visit(rmask, cmask, out) {
                    return Ok(());
                }
            }
        }
        prev = cur;
        prev_count = count;
    }
    Ok(())
}

fn cyclic_is_zero(v: &[i64]) -> bool {
    v.iter().all(|&c| c == v[0])
}

/// Sweeps every square minor of `(z^(ij))` up to `max_order` (default `l`).
pub fn chebotarev_check(ell: u64, max_order: Option<usize>) -> Result<ChebotarevReport> {
    check_ell(ell)?;
    let order = max_order.unwrap_or(ell as usize);
    if order == 0 || order as u64 > ell {
        return Err(domain!("max_order must lie in 1..={ell}"));
    }
    let mut report = ChebotarevReport {
        ell,
        minors_checked: 0,
        max_size_checked: order,
        all_nonzero: true,
        witness: None,
    };
    sweep_minors(ell, order, |rows, cols, v| {
        report.minors_checked += 1;
        if report.witness.is_none() && cyclic_is_zero(v) {
            report.all_nonzero = false;
            report.witness = Some((mask_elements(rows), mask_elements(cols)));
        }
        true
    })?;
    Ok(report)
}

/// Every minor from the sweep as a canonical [`CycInt`], in sweep order.
pub fn minor_table(ell: u64, max_order: usize) -> Result<Vec<(Vec<usize>, Vec<usize>, CycInt)>> {
    let l = check_ell(ell)?;
    if max_order == 0 || max_order as u64 > ell {
        return Err(domain!("max_order must lie in 1..={ell}"));
    }
    let mut out = Vec::new();
    sweep_minors(ell, max_order, |rows, cols, v| {
        let cyc = v.iter().map(|&c| BigInt::from(c)).collect();
        out.push((mask_elements(rows), mask_elements(cols), CycInt::from_cyclic(l, cyc)));
        true
    })?;
    Ok(out)
}
