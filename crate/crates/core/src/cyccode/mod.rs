//! Cyclic codes over finite fields.
//!
//! A cyclic code of length `n` is stored by its monic generator `g | x^n - 1`
//! together with the check polynomial `h = (x^n - 1)/g`. Codewords are
//! coefficient vectors of multiples of `g` of degree below `n`.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::domain;
use crate::gf::{FieldCtx, FqElem};
use crate::linalg::Matrix;
use crate::poly::Poly;
use crate::Result;

mod enumerate;
mod mds;

pub use enumerate::{min_distance, weight_enumerator, PackedCode, WeightEnumerator, DEFAULT_BUDGET};
pub use mds::{divisor_codes, mds_check_via_minors, MdsReport};

/// Anything with a generator matrix.
pub trait LinearCode {
    fn generator_matrix(&self) -> Matrix;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicCode {
    ctx: Arc<FieldCtx>,
    n: usize,
    generator: Poly,
    check: Poly,
}

impl CyclicCode {
    /// The cyclic code `(g)` of length `n`; `g` must be monic and divide `x^n - 1`.
    pub fn new(ctx: &Arc<FieldCtx>, n: usize, generator: Poly) -> Result<Self> {
        if n == 0 {
            return Err(domain!("code length must be positive"));
        }
        if !generator.is_monic() {
            return Err(domain!("generator {generator} is not monic"));
        }
        let modulus = Poly::x_pow_minus_one(ctx, n);
        let check = generator
            .exact_quotient_of(&modulus)
            .map_err(|_| domain!("{generator} does not divide x^{n} - 1"))?;
        Ok(CyclicCode { ctx: ctx.clone(), n, generator, check })
    }

    /// All `a(x)` with `a(x) f(x) = 0 mod x^n - 1`: the code generated by
    /// `(x^n - 1)/f`, of dimension `deg f`.
    pub fn recursive_for(ctx: &Arc<FieldCtx>, n: usize, f: &Poly) -> Result<Self> {
        if f.is_zero() {
            return Err(domain!("recursive_for needs a nonzero polynomial"));
        }
        let modulus = Poly::x_pow_minus_one(ctx, n);
        let g = f
            .exact_quotient_of(&modulus)
            .map_err(|_| domain!("{f} does not divide x^{n} - 1"))?;
        Self::new(ctx, n, g.monic())
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.check.degree().expect("check polynomial is nonzero")
    }

    pub fn generator(&self) -> &Poly {
        &self.generator
    }

    /// `h = (x^n - 1)/g`.
    pub fn check_poly(&self) -> &Poly {
        &self.check
    }

    /// The orthogonal code, generated by the monic reverse of `h`.
    pub fn dual(&self) -> CyclicCode {
        let g = self.check.reverse().expect("check polynomial is nonzero").monic();
        CyclicCode::new(&self.ctx, self.n, g).expect("reverse of a divisor of x^n - 1 divides it")
    }

    pub fn word_poly(&self, word: &[FqElem]) -> Result<Poly> {
        if word.len() != self.n {
            return Err(domain!("word of length {} for a code of length {}", word.len(), self.n));
        }
        Ok(Poly::new(self.ctx.clone(), word.to_vec()))
    }

    /// Membership by division by the generator.
    pub fn contains(&self, word: &[FqElem]) -> Result<bool> {
        Ok(self.generator.divides(&self.word_poly(word)?))
    }

    /// Membership by `w(x) h(x) = 0 mod x^n - 1`.
    pub fn contains_via_check(&self, word: &[FqElem]) -> Result<bool> {
        let prod = &self.word_poly(word)? * &self.check;
        let modulus = Poly::x_pow_minus_one(&self.ctx, self.n);
        Ok(prod.rem(&modulus)?.is_zero())
    }

    /// Codeword of the message polynomial `m(x)`, i.e. `m(x) g(x)`; the message
    /// must have fewer than `k` coefficients.
    pub fn encode(&self, message: &[FqElem]) -> Result<Vec<FqElem>> {
        if message.len() > self.dimension() {
            return Err(domain!("message longer than the dimension {}", self.dimension()));
        }
        let word = &Poly::new(self.ctx.clone(), message.to_vec()) * &self.generator;
        Ok(pad(word.coeffs(), self.n))
    }

    pub fn parity_check_matrix(&self) -> Matrix {
        self.dual().generator_matrix()
    }
}

impl LinearCode for CyclicCode {
    /// Rows `x^i g(x)` for `0 <= i < k`.
    fn generator_matrix(&self) -> Matrix {
        let rows = (0..self.dimension()).map(|i| pad(self.generator.shift(i).coeffs(), self.n)).collect();
        Matrix::new(self.ctx.clone(), self.n, rows).expect("rows have length n")
    }
}

pub(crate) fn pad(coeffs: &[FqElem], n: usize) -> Vec<FqElem> {
    let mut v = vec![FqElem::ZERO; n];
    v[..coeffs.len()].copy_from_slice(coeffs);
    v
}

/// Minimal polynomial over the prime field of an element of `ctx`, returned
/// over `prime`.
pub fn minimal_polynomial(ctx: &Arc<FieldCtx>, a: FqElem, prime: &Arc<FieldCtx>) -> Result<Poly> {
    let mut h = Poly::linear_root(ctx, a);
    let mut conj = ctx.frobenius(a);
    while conj != a {
        h = &h * &Poly::linear_root(ctx, conj);
        conj = ctx.frobenius(conj);
    }
    h.to_prime_field(prime)
}

/// `(T(c), T(c z), ..., T(c z^(n-1)))` over the prime field.
pub fn trace_word(ctx: &FieldCtx, z: FqElem, n: usize, c: FqElem) -> Vec<FqElem> {
    let mut out = Vec::with_capacity(n);
    let mut cz = c;
    for _ in 0..n {
        out.push(ctx.trace(cz));
        cz = ctx.mul(cz, z);
    }
    out
}

/// The trace construction `{ (T(c z^i))_i : c in GF(p^m) }` and the identities
/// it is expected to satisfy.
#[derive(Clone, Debug)]
pub struct TraceCode {
    pub code: CyclicCode,
    /// Minimal polynomial `h` of `z` over `GF(p)`.
    pub min_poly: Poly,
    /// `F_z(c)` for `c` running over the polynomial basis of `GF(p^m)`.
    pub basis_words: Matrix,
    pub equals_recursive_for_reverse: bool,
    pub dual_equals_min_poly_code: bool,
}

impl TraceCode {
    pub fn holds(&self) -> bool {
        self.equals_recursive_for_reverse && self.dual_equals_min_poly_code
    }
}

/// Builds the trace code of length `n` from `z` of exact order `n` in
/// `GF(p^m)`, where `z` must generate `GF(p^m)` over `GF(p)`.
pub fn trace_code(ctx: &Arc<FieldCtx>, n: usize, z: FqElem) -> Result<TraceCode> {
    if z.is_zero() || ctx.multiplicative_order(z)? != n as u64 {
        return Err(domain!("element does not have order {n}"));
    }
    let prime = Arc::new(FieldCtx::prime(ctx.characteristic())?);
    let h = minimal_polynomial(ctx, z, &prime)?;
    let m = ctx.degree();
    if h.degree() != Some(m) {
        return Err(domain!("minimal polynomial has degree {:?}, field degree is {m}", h.degree()));
    }
    let p = ctx.characteristic();
    let rows: Vec<Vec<FqElem>> = (0..m as u32)
        .map(|t| trace_word(ctx, z, n, ctx.from_index(p.pow(t)).expect("basis element")))
        .collect();
    let basis_words = Matrix::new(prime.clone(), n, rows)?;
    let mut g = Poly::x_pow_minus_one(&prime, n);
    for row in basis_words.rows() {
        g = g.gcd(&Poly::new(prime.clone(), row.clone()));
    }
    let code = CyclicCode::new(&prime, n, g)?;
    if code.dimension() != basis_words.rank() {
        return Err(crate::error::consistency!("trace words do not span a cyclic code"));
    }
    let recursive = CyclicCode::recursive_for(&prime, n, &h.reverse()?)?;
    let dual_expected = CyclicCode::new(&prime, n, h.clone())?;
    Ok(TraceCode {
        equals_recursive_for_reverse: code == recursive,
        dual_equals_min_poly_code: code.dual() == dual_expected,
        code,
        min_poly: h,
        basis_words,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    fn gf(p: u64) -> Arc<FieldCtx> {
        Arc::new(FieldCtx::prime(p).unwrap())
    }

    fn hamming(k: &Arc<FieldCtx>) -> CyclicCode {
        CyclicCode::new(k, 7, Poly::from_ints(k, &[1, 1, 0, 1])).unwrap()
    }

    #[test]
    fn construction_and_dimensions() {
        let k = gf(2);
        assert_eq!(hamming(&k).dimension(), 4);
        let zero = CyclicCode::new(&k, 7, Poly::x_pow_minus_one(&k, 7)).unwrap();
        assert_eq!(zero.dimension(), 0);
        assert_eq!(zero.generator_matrix().nrows(), 0);
        let full = CyclicCode::new(&k, 7, Poly::one(&k)).unwrap();
        assert_eq!(full.dimension(), 7);
        assert!(matches!(
            CyclicCode::new(&k, 7, Poly::from_ints(&k, &[1, 1, 1])),
            Err(Error::Domain(_))
        ));
        let k3 = gf(3);
        assert!(CyclicCode::new(&k3, 4, Poly::from_ints(&k3, &[1, 2])).is_err());
    }

    #[test]
    fn recursive_for_examples() {
        let k = gf(2);
        let f = Poly::from_ints(&k, &[1, 0, 1, 0, 0, 1]);
        let c = CyclicCode::recursive_for(&k, 31, &f).unwrap();
        assert_eq!(c.dimension(), 5);
        let gen = c.generator();
        assert_eq!(&(gen * &f), &Poly::x_pow_minus_one(&k, 31));
        // Every codeword a(x) satisfies a(x) f(x) = 0 mod x^31 - 1.
        for row in c.generator_matrix().rows() {
            let prod = &Poly::new(k.clone(), row.clone()) * &f;
            assert!(prod.rem(&Poly::x_pow_minus_one(&k, 31)).unwrap().is_zero());
        }
        assert_eq!(CyclicCode::recursive_for(&k, 7, &Poly::one(&k)).unwrap().dimension(), 0);
        assert_eq!(CyclicCode::recursive_for(&k, 7, &Poly::x_pow_minus_one(&k, 7)).unwrap().dimension(), 7);
        assert!(CyclicCode::recursive_for(&k, 7, &Poly::from_ints(&k, &[1, 1, 1])).is_err());
    }

    #[test]
    fn duals() {
        let k = gf(2);
        let c = hamming(&k);
        let d = c.dual();
        assert_eq!(d.dimension(), 3);
        let expected = Poly::from_ints(&k, &[1, 1, 1, 0, 1]).reverse().unwrap().monic();
        assert_eq!(d.generator(), &expected);
        assert!(d.generator_matrix().mul_transpose(&c.generator_matrix()).unwrap().is_zero());
        assert_eq!(d.dual(), c);
        let full = CyclicCode::new(&k, 7, Poly::one(&k)).unwrap();
        assert_eq!(full.dual().dimension(), 0);

        // Brute force: all 8 x 16 pairs are orthogonal.
        let gm = c.generator_matrix();
        let dm = d.generator_matrix();
        for a in 0..16u32 {
            for b in 0..8u32 {
                let wa = combine(&gm, a);
                let wb = combine(&dm, b);
                assert!(gm.dot(&wa, &wb).is_zero());
            }
        }
    }

    fn combine(m: &Matrix, bits: u32) -> Vec<FqElem> {
        let k = m.ctx();
        let mut acc = vec![FqElem::ZERO; m.ncols()];
        for (i, row) in m.rows().iter().enumerate() {
            if bits >> i & 1 == 1 {
                for (a, &r) in acc.iter_mut().zip(row) {
                    *a = k.add(*a, r);
                }
            }
        }
        acc
    }

    #[test]
    fn membership_tests_agree() {
        let k = gf(3);
        // x^8 - 1 over GF(3) = (x-1)(x+1)(x^2+1)(x^2+x+2)(x^2+2x+2)
        let g = &Poly::from_ints(&k, &[1, 0, 1]) * &Poly::from_ints(&k, &[2, 1, 1]);
        let c = CyclicCode::new(&k, 8, g).unwrap();
        let mut seed = 7u64;
        for _ in 0..300 {
            let word: Vec<FqElem> = (0..8)
                .map(|_| {
                    seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
                    k.from_int((seed >> 40) as i64 % 3)
                })
                .collect();
            assert_eq!(c.contains(&word).unwrap(), c.contains_via_check(&word).unwrap());
        }
        for row in c.generator_matrix().rows() {
            assert!(c.contains(row).unwrap() && c.contains_via_check(row).unwrap());
        }
        assert!(c.contains(&[FqElem::ZERO; 3]).is_err());
    }

    #[test]
    fn trace_code_hamming_dual() {
        let big = Arc::new(FieldCtx::build(2, 3).unwrap());
        let z = big.find_root_of_unity(7).unwrap();
        let tc = trace_code(&big, 7, z).unwrap();
        let k = tc.code.ctx().clone();
        assert_eq!(tc.min_poly, Poly::from_ints(&k, &[1, 1, 0, 1]));
        assert_eq!(tc.code.dimension(), 3);
        let expected = Poly::x_pow_minus_one(&k, 7)
            .divmod(&tc.min_poly.reverse().unwrap())
            .unwrap()
            .0;
        assert_eq!(tc.code.generator(), &expected);
        assert!(tc.holds());
        assert!(trace_word(&big, z, 7, FqElem::ZERO).iter().all(|c| c.is_zero()));
        assert!(matches!(trace_code(&big, 5, z), Err(Error::Domain(_))));
    }
}
