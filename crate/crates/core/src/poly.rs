//! Dense univariate polynomials over a [`FieldCtx`].

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::domain;
use crate::gf::{FieldCtx, FqElem};
use crate::{Error, Result};

/// Polynomial with ascending coefficients and no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    ctx: Arc<FieldCtx>,
    coeffs: Vec<FqElem>,
}

impl Poly {
    pub fn new(ctx: Arc<FieldCtx>, mut coeffs: Vec<FqElem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { ctx, coeffs }
    }

    /// Polynomial with prime-subfield coefficients given as integers.
    pub fn from_ints(ctx: &Arc<FieldCtx>, coeffs: &[i64]) -> Self {
        let c = coeffs.iter().map(|&a| ctx.from_int(a)).collect();
        Poly::new(ctx.clone(), c)
    }

    pub fn zero(ctx: &Arc<FieldCtx>) -> Self {
        Poly { ctx: ctx.clone(), coeffs: Vec::new() }
    }

    pub fn one(ctx: &Arc<FieldCtx>) -> Self {
        Poly::constant(ctx, FqElem::ONE)
    }

    pub fn constant(ctx: &Arc<FieldCtx>, c: FqElem) -> Self {
        Poly::new(ctx.clone(), vec![c])
    }

    /// `c * x^d`.
    pub fn monomial(ctx: &Arc<FieldCtx>, c: FqElem, d: usize) -> Self {
        let mut coeffs = vec![FqElem::ZERO; d + 1];
        coeffs[d] = c;
        Poly::new(ctx.clone(), coeffs)
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(ctx: &Arc<FieldCtx>, n: usize) -> Self {
        let mut coeffs = vec![FqElem::ZERO; n + 1];
        coeffs[0] = ctx.from_int(-1);
        coeffs[n] = FqElem::ONE;
        Poly::new(ctx.clone(), coeffs)
    }

    /// `x - a`.
    pub fn linear_root(ctx: &Arc<FieldCtx>, a: FqElem) -> Self {
        Poly::new(ctx.clone(), vec![ctx.neg(a), FqElem::ONE])
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[FqElem] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> FqElem {
        self.coeffs.get(i).copied().unwrap_or(FqElem::ZERO)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<FqElem> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(FqElem::ONE)
    }

    fn check_ctx(&self, other: &Poly) {
        assert!(
            Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx,
            "polynomials over different fields"
        );
    }

    pub fn scale(&self, c: FqElem) -> Poly {
        let k = &self.ctx;
        Poly::new(k.clone(), self.coeffs.iter().map(|&a| k.mul(a, c)).collect())
    }

    /// Divides by the leading coefficient; the zero polynomial is returned as is.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(lead) if lead != FqElem::ONE => {
                self.scale(self.ctx.inv(lead).expect("nonzero leading coefficient"))
            }
            _ => self.clone(),
        }
    }

    /// Multiplies by `x^d`.
    pub fn shift(&self, d: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![FqElem::ZERO; d];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { ctx: self.ctx.clone(), coeffs }
    }

    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check_ctx(divisor);
        let k = &self.ctx;
        let db = divisor
            .degree()
            .ok_or_else(|| Error::Arithmetic("division by the zero polynomial".into()))?;
        let lead_inv = k.inv(divisor.coeffs[db])?;
        let mut rem = self.coeffs.clone();
        let qlen = rem.len().saturating_sub(db);
        let mut quot = vec![FqElem::ZERO; qlen];
        for top in (db..rem.len()).rev() {
            let c = k.mul(rem[top], lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[top - db] = c;
            for (i, &b) in divisor.coeffs.iter().enumerate() {
                let idx = top - db + i;
                rem[idx] = k.sub(rem[idx], k.mul(c, b));
            }
        }
        rem.truncate(db);
        Ok((Poly::new(k.clone(), quot), Poly::new(k.clone(), rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divmod(divisor)?.1)
    }

    /// `true` when `self` divides `other`. The zero polynomial divides only zero.
    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Exact quotient `other / self`.
    pub fn exact_quotient_of(&self, other: &Poly) -> Result<Poly> {
        let (q, r) = other.divmod(self)?;
        if !r.is_zero() {
            return Err(domain!("{self} does not divide {other}"));
        }
        Ok(q)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        self.check_ctx(other);
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: FqElem) -> FqElem {
        let k = &self.ctx;
        self.coeffs.iter().rev().fold(FqElem::ZERO, |acc, &c| k.add(k.mul(acc, x), c))
    }

    /// Reciprocal polynomial `x^deg f(1/x)`.
    pub fn reverse(&self) -> Result<Poly> {
        if self.is_zero() {
            return Err(domain!("reverse of the zero polynomial"));
        }
        let mut c = self.coeffs.clone();
        c.reverse();
        Ok(Poly::new(self.ctx.clone(), c))
    }

    /// Re-homes a polynomial whose coefficients lie in the prime subfield onto
    /// the prime field `target`.
    pub fn to_prime_field(&self, target: &Arc<FieldCtx>) -> Result<Poly> {
        if !target.is_prime_field() || target.characteristic() != self.ctx.characteristic() {
            return Err(domain!("target is not the prime subfield"));
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| {
                self.ctx
                    .prime_value(c)
                    .map(|v| target.from_int(v as i64))
                    .ok_or_else(|| domain!("coefficient outside the prime subfield"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(target.clone(), coeffs))
    }

    /// Embeds a prime-field polynomial into an extension of the same characteristic.
    pub fn embed(&self, target: &Arc<FieldCtx>) -> Result<Poly> {
        if !self.ctx.is_prime_field() || target.characteristic() != self.ctx.characteristic() {
            return Err(domain!("source is not the prime subfield of the target"));
        }
        // Prime-subfield elements share their encoding in every extension.
        Ok(Poly::new(target.clone(), self.coeffs.clone()))
    }

    /// Coefficients as integers `0..p` when every coefficient is in the prime subfield.
    pub fn prime_coeffs(&self) -> Option<Vec<u64>> {
        self.coeffs.iter().map(|&c| self.ctx.prime_value(c)).collect()
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.check_ctx(rhs);
        let k = &self.ctx;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(k.clone(), (0..n).map(|i| k.add(self.coeff(i), rhs.coeff(i))).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let k = &self.ctx;
        Poly::new(k.clone(), self.coeffs.iter().map(|&a| k.neg(a)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.check_ctx(rhs);
        let k = &self.ctx;
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(k);
        }
        let mut out = vec![FqElem::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = k.add(out[i + j], k.mul(a, b));
            }
        }
        Poly::new(k.clone(), out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let show_coeff = c != FqElem::ONE || i == 0;
            if show_coeff {
                match self.ctx.prime_value(c) {
                    Some(v) => write!(f, "{v}")?,
                    None => write!(f, "[{}]", c.index())?,
                }
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn gf(p: u64) -> Arc<FieldCtx> {
        Arc::new(FieldCtx::prime(p).unwrap())
    }

    #[test]
    fn product_and_division() {
        let k = gf(5);
        let a = Poly::from_ints(&k, &[-1, 1]);
        let b = Poly::from_ints(&k, &[1, 1, 1]);
        assert_eq!(&a * &b, Poly::x_pow_minus_one(&k, 3));

        let k2 = gf(2);
        let (q, r) = Poly::x_pow_minus_one(&k2, 7).divmod(&Poly::from_ints(&k2, &[1, 1, 0, 1])).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, Poly::from_ints(&k2, &[1, 1, 1, 0, 1]));
        assert_eq!(Poly::from_ints(&k2, &[1, 1, 1]).eval(FqElem::ONE), FqElem::ONE);
        assert!(matches!(a.divmod(&Poly::zero(&k)), Err(Error::Arithmetic(_))));
    }

    #[test]
    fn reverse_and_gcd() {
        let k = gf(7);
        let f = Poly::from_ints(&k, &[1, 2, 3]);
        assert_eq!(f.reverse().unwrap(), Poly::from_ints(&k, &[3, 2, 1]));
        let k2 = gf(2);
        assert_eq!(
            Poly::from_ints(&k2, &[1, 1, 0, 1]).reverse().unwrap(),
            Poly::from_ints(&k2, &[1, 0, 1, 1])
        );
        assert!(Poly::zero(&k).reverse().is_err());
        let g = Poly::from_ints(&k, &[2, 4]).gcd(&Poly::from_ints(&k, &[-1, 0, 1]));
        // 2 + 4x = 4(x + 4), and x + 4 = x - 3 does not divide x^2 - 1; gcd is 1.
        assert_eq!(g, Poly::one(&k));
        let g = Poly::from_ints(&k, &[2, 2]).gcd(&Poly::from_ints(&k, &[-1, 0, 1]));
        assert_eq!(g, Poly::from_ints(&k, &[1, 1]));
        assert_eq!(Poly::from_ints(&k, &[3, 0, 1]).to_string(), "x^2 + 3");
    }

    #[test]
    fn divmod_identity_random() {
        let k = gf(11);
        let mut seed = 12345u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (seed >> 33) as i64
        };
        for _ in 0..200 {
            let a: Vec<i64> = (0..(next() % 9) as usize).map(|_| next()).collect();
            let mut b: Vec<i64> = (0..1 + (next() % 5) as usize).map(|_| next()).collect();
            *b.last_mut().unwrap() = 1;
            let (a, b) = (Poly::from_ints(&k, &a), Poly::from_ints(&k, &b));
            let (q, r) = a.divmod(&b).unwrap();
            assert_eq!(&(&q * &b) + &r, a);
            assert!(r.degree().is_none_or(|d| d < b.degree().unwrap()));
        }
    }
}
