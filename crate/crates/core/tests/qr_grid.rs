use qrgp_core::cycint::{gamma_times_ell, gauss_periods, CycInt};
use qrgp_core::nt::legendre;
use qrgp_core::qrext::{
    build_qr_family, epsilon_falsification, part_one_checks, psl2_generators, sigma_map, verify_gleason_prange,
    EpsilonOutcome, ResidueCase,
};

const GRID: [(u64, u64); 9] = [(2, 7), (2, 17), (2, 23), (2, 31), (2, 47), (3, 11), (3, 13), (5, 11), (5, 19)];

#[test]
fn grid_invariants_and_gamma_sign() {
    for (p, ell) in GRID {
        let fam = build_qr_family(p, ell).unwrap();
        assert!(fam.checks.iter().all(|c| c.pass));
        let k = &fam.prime;
        let lhs = k.mul(k.from_int(ell as i64), fam.gamma);
        assert_eq!(lhs, k.neg(k.sub(fam.eta, fam.eta_prime)), "({p},{ell})");
    }
}

#[test]
fn exact_gamma_squares_to_signed_ell() {
    for ell in [3u64, 5, 7, 11, 13, 17, 19, 23] {
        let lg = gamma_times_ell(ell).unwrap();
        let target = CycInt::from_integer(ell, legendre(-1, ell) as i64 * ell as i64).unwrap();
        assert_eq!(&lg * &lg, target);
        let (eta, eta_p) = gauss_periods(ell).unwrap();
        assert_eq!(lg, -(&eta - &eta_p));
    }
}

#[test]
fn gleason_prange_on_grid() {
    for (p, ell) in GRID {
        let fam = build_qr_family(p, ell).unwrap();
        let r = verify_gleason_prange(&fam).unwrap();
        assert!(r.pass(), "({p},{ell})");
        // B_inf is preserved as well.
        let sigma = sigma_map(&fam, 1).unwrap();
        assert!(sigma.preserves(&fam.b_infinity()).unwrap(), "({p},{ell}) B_inf");
    }
}

#[test]
fn negative_epsilon_breaks_odd_families() {
    for (p, ell) in GRID {
        let fam = build_qr_family(p, ell).unwrap();
        let out = epsilon_falsification(&fam).unwrap();
        if p == 2 {
            assert_eq!(out, EpsilonOutcome::Degenerate);
        } else {
            assert!(matches!(out, EpsilonOutcome::Falsified { .. }), "({p},{ell})");
        }
    }
}

#[test]
fn part_one_on_grid() {
    for (p, ell) in GRID {
        let fam = build_qr_family(p, ell).unwrap();
        let checks = part_one_checks(&fam).unwrap();
        assert!(checks.iter().all(|c| c.pass), "({p},{ell}) {checks:?}");
        // Against <1,0>_B the product is l gamma (1 - (-1/l)).
        let ia = checks.iter().find(|c| c.name == "ia_dot_formula").unwrap();
        let zero = fam.case() == ResidueCase::PlusOne || p == 2;
        assert_eq!(ia.witness.as_deref().unwrap().ends_with("= 0"), zero, "({p},{ell})");
    }
}

#[test]
fn generators_preserve_small_grid() {
    for (p, ell) in [(2, 7), (2, 17), (3, 11), (3, 13), (5, 11)] {
        let fam = build_qr_family(p, ell).unwrap();
        assert_eq!(psl2_generators(&fam).unwrap().len(), 3);
    }
}
