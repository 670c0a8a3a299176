//! MDS certification of all cyclic codes of prime length `l` over `GF(p)`,
//! `p = 1 mod l`, through the minors of `(zeta^(ij))`.

use alloc::sync::Arc;
use alloc::vec::Vec;

use super::CyclicCode;
use crate::cycint::{mask_elements, subsets_lex};
use crate::error::domain;
use crate::gf::{FieldCtx, FqElem};
use crate::linalg::det_in_place;
use crate::nt;
use crate::poly::Poly;
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MdsReport {
    pub ell: u64,
    pub p: u64,
    pub zeta: u64,
    pub minors_checked: u64,
    pub all_mds: bool,
    pub witness: Option<(Vec<usize>, Vec<usize>)>,
}

/// Checks every square minor of `(zeta^(ij))_{0 <= i,j < l}` over `GF(p)`.
/// Minors are visited by size, then row set, then column set.
pub fn mds_check_via_minors(p: u64, ell: u64) -> Result<MdsReport> {
    nt::ensure_odd_prime(ell)?;
    if !nt::is_prime(p) || p % ell != 1 {
        return Err(domain!("need a prime p = 1 mod {ell}, got {p}"));
    }
    let k = FieldCtx::prime(p)?;
    let zeta = k.find_root_of_unity(ell)?;
    let l = ell as usize;
    let powers: Vec<FqElem> = (0..ell).map(|e| k.pow(zeta, e)).collect();
    let mut report = MdsReport {
        ell,
        p,
        zeta: zeta.index(),
        minors_checked: 0,
        all_mds: true,
        witness: None,
    };
    for size in 1..=l {
        let subsets = subsets_lex(l, size);
        for &rmask in &subsets {
            let rows = mask_elements(rmask);
            for &cmask in &subsets {
                let cols = mask_elements(cmask);
                let m = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&j| powers[i * j % l]).collect())
                    .collect();
                report.minors_checked += 1;
                if det_in_place(&k, m).is_zero() && report.witness.is_none() {
                    report.all_mds = false;
                    report.witness = Some((rows.clone(), cols));
                }
            }
        }
    }
    Ok(report)
}

/// All `2^l` cyclic codes of length `l` over `GF(p)` when `x^l - 1` splits,
/// i.e. `p = 1 mod l`. Code `S` (a bitmask over exponents) is generated by
/// `prod_{i in S} (x - zeta^i)`.
pub fn divisor_codes(p: u64, ell: u64) -> Result<Vec<(u32, CyclicCode)>> {
    if ell >= 32 || p % ell != 1 {
        return Err(domain!("x^{ell} - 1 does not split into linear factors over GF({p})"));
    }
    let k = Arc::new(FieldCtx::prime(p)?);
    let zeta = k.find_root_of_unity(ell)?;
    (0u32..1 << ell)
        .map(|mask| {
            let g = mask_elements(mask).into_iter().fold(Poly::one(&k), |acc, i| {
                &acc * &Poly::linear_root(&k, k.pow(zeta, i as u64))
            });
            Ok((mask, CyclicCode::new(&k, ell as usize, g)?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyccode::{min_distance, DEFAULT_BUDGET};
    use crate::Error;

    #[test]
    fn small_sweeps() {
        let r = mds_check_via_minors(7, 3).unwrap();
        assert_eq!((r.minors_checked, r.all_mds), (19, true));
        let r = mds_check_via_minors(11, 5).unwrap();
        assert_eq!((r.minors_checked, r.all_mds), (251, true));
        assert!(matches!(mds_check_via_minors(13, 5), Err(Error::Domain(_))));
    }

    #[test]
    fn vanishing_minor_is_reported() {
        let r = mds_check_via_minors(23, 11).unwrap();
        assert!(!r.all_mds);
        let (rows, cols) = r.witness.clone().unwrap();
        assert_eq!((rows.as_slice(), cols.as_slice()), ([0, 1, 3].as_slice(), [0, 1, 3].as_slice()));
        // Independent 3x3 rule of Sarrus over the integers mod 23.
        let z = r.zeta;
        let e = |i: usize, j: usize| nt::mod_pow(z, (rows[i] * cols[j]) as u64, 23) as i64;
        let det = e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
            + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
        assert_eq!(det.rem_euclid(23), 0);
        assert!(mds_check_via_minors(29, 7).unwrap().all_mds);
    }

    #[test]
    fn exhaustive_cross_check_l5_p11() {
        for (mask, code) in divisor_codes(11, 5).unwrap() {
            let k = code.dimension();
            assert_eq!(k, 5 - mask.count_ones() as usize);
            if k == 0 {
                continue;
            }
            assert_eq!(min_distance(&code, DEFAULT_BUDGET).unwrap(), 6 - k, "mask {mask:05b}");
        }
    }
}
