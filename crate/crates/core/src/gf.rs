//! Finite fields `GF(p^m)` in the polynomial basis.
//!
//! An element is stored as the integer `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`
//! of its coefficient vector, so elements are `Copy` and the natural integer
//! order is the enumeration order used by every deterministic scan below.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::domain;
use crate::nt;
use crate::{Error, Result};

pub use crate::nt::legendre;

const MAX_DEGREE: usize = 64;

/// Element of some [`FieldCtx`], encoded as a base-`p` integer.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FqElem(u64);

impl FqElem {
    pub const ZERO: FqElem = FqElem(0);
    pub const ONE: FqElem = FqElem(1);

    /// Position of the element in the ascending enumeration of the field.
    pub fn index(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// A finite field `GF(p^m)` with a fixed monic irreducible modulus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldCtx {
    p: u64,
    m: usize,
    q: u64,
    /// Monic modulus, ascending coefficients, length `m + 1`. For `m = 1`
    /// this is the placeholder `x`.
    modulus: Vec<u64>,
}

impl FieldCtx {
    /// Builds `GF(p^m)` using the smallest monic irreducible polynomial of
    /// degree `m`, where candidates are ordered by the base-`p` integer
    /// `c_0 + c_1 p + ... + c_{m-1} p^{m-1}` of their lower coefficients.
    pub fn build(p: u64, m: usize) -> Result<Self> {
        if !nt::is_prime(p) {
            return Err(domain!("characteristic {p} is not prime"));
        }
        if p >= 1 << 31 {
            return Err(domain!("characteristic {p} exceeds 2^31"));
        }
        if m == 0 {
            return Err(domain!("extension degree must be at least 1"));
        }
        let q = p
            .checked_pow(m as u32)
            .filter(|&q| q < u64::MAX)
            .ok_or_else(|| domain!("field order {p}^{m} does not fit in 64 bits"))?;
        if m == 1 {
            return Ok(FieldCtx { p, m, q, modulus: vec![0, 1] });
        }
        for low in 0..q {
            let mut modulus = digits_of(low, p, m);
            modulus.push(1);
            let candidate = FieldCtx { p, m, q, modulus };
            if candidate.modulus_is_irreducible() {
                return Ok(candidate);
            }
        }
        Err(Error::Consistency(alloc::format!(
            "no irreducible polynomial of degree {m} over GF({p})"
        )))
    }

    pub fn prime(p: u64) -> Result<Self> {
        Self::build(p, 1)
    }

    /// The smallest extension of `GF(p)` containing a primitive `ell`-th root
    /// of unity: degree `ord_ell(p)`.
    pub fn for_roots_of_unity(p: u64, ell: u64) -> Result<Self> {
        if ell < 2 || ell % p == 0 {
            return Err(domain!("no primitive {ell}-th roots of unity in characteristic {p}"));
        }
        let m = nt::mul_order(p, ell).ok_or_else(|| domain!("{p} is not a unit mod {ell}"))?;
        Self::build(p, m as usize)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    /// Number of elements `p^m`.
    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.m == 1
    }

    pub fn zero(&self) -> FqElem {
        FqElem::ZERO
    }

    pub fn one(&self) -> FqElem {
        FqElem::ONE
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, a: i64) -> FqElem {
        FqElem(nt::reduce(a, self.p))
    }

    pub fn from_index(&self, index: u64) -> Result<FqElem> {
        if index >= self.q {
            return Err(domain!("index {index} out of range for GF({}^{})", self.p, self.m));
        }
        Ok(FqElem(index))
    }

    /// Element with the given polynomial-basis coefficients (reduced mod `p`).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FqElem> {
        if coeffs.len() > self.m {
            return Err(domain!("{} coefficients for a degree-{} field", coeffs.len(), self.m));
        }
        let mut v = 0u64;
        for &c in coeffs.iter().rev() {
            v = v * self.p + c % self.p;
        }
        Ok(FqElem(v))
    }

    /// Polynomial-basis coefficients, length `m`.
    pub fn coeffs(&self, a: FqElem) -> Vec<u64> {
        digits_of(a.0, self.p, self.m)
    }

    /// The class of `x` in `GF(p)[x]/(modulus)`; for a prime field this is
    /// the root of the placeholder modulus, i.e. zero.
    pub fn generator(&self) -> FqElem {
        if self.m == 1 {
            FqElem::ZERO
        } else {
            FqElem(self.p)
        }
    }

    /// `Some(v)` when `a` lies in the prime subfield and equals `v mod p`.
    pub fn prime_value(&self, a: FqElem) -> Option<u64> {
        (a.0 < self.p).then_some(a.0)
    }

    /// All elements in ascending enumeration order.
    pub fn elements(&self) -> impl Iterator<Item = FqElem> {
        (0..self.q).map(FqElem)
    }

    fn decode(&self, a: FqElem) -> [u64; MAX_DEGREE] {
        let mut out = [0u64; MAX_DEGREE];
        let mut v = a.0;
        for d in out.iter_mut().take(self.m) {
            *d = v % self.p;
            v /= self.p;
        }
        out
    }

    fn encode(&self, digits: &[u64]) -> FqElem {
        let mut v = 0u64;
        for &d in digits[..self.m].iter().rev() {
            v = v * self.p + d;
        }
        FqElem(v)
    }

    pub fn add(&self, a: FqElem, b: FqElem) -> FqElem {
        if self.p == 2 {
            return FqElem(a.0 ^ b.0);
        }
        if self.m == 1 {
            return FqElem((a.0 + b.0) % self.p);
        }
        let (x, y) = (self.decode(a), self.decode(b));
        let mut s = [0u64; MAX_DEGREE];
        for i in 0..self.m {
            s[i] = (x[i] + y[i]) % self.p;
        }
        self.encode(&s)
    }

    pub fn neg(&self, a: FqElem) -> FqElem {
        if self.p == 2 {
            return a;
        }
        if self.m == 1 {
            return FqElem((self.p - a.0) % self.p);
        }
        let mut x = self.decode(a);
        for d in x.iter_mut().take(self.m) {
            *d = (self.p - *d) % self.p;
        }
        self.encode(&x)
    }

    pub fn sub(&self, a: FqElem, b: FqElem) -> FqElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FqElem, b: FqElem) -> FqElem {
        if self.m == 1 {
            return FqElem(nt::mod_mul(a.0, b.0, self.p));
        }
        if self.p == 2 {
            return self.mul_binary(a, b);
        }
        let (p, m) = (self.p, self.m);
        let (x, y) = (self.decode(a), self.decode(b));
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..m {
            if x[i] == 0 {
                continue;
            }
            for j in 0..m {
                prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
            }
        }
        for d in (m..2 * m - 1).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            for i in 0..m {
                prod[d - m + i] = (prod[d - m + i] + (p - c) * self.modulus[i]) % p;
            }
            prod[d] = 0;
        }
        self.encode(&prod)
    }

    fn mul_binary(&self, a: FqElem, b: FqElem) -> FqElem {
        let m = self.m;
        let mut prod: u128 = 0;
        let mut x = a.0 as u128;
        let mut y = b.0;
        while y != 0 {
            if y & 1 == 1 {
                prod ^= x;
            }
            x <<= 1;
            y >>= 1;
        }
        let modulus: u128 = self
            .modulus
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &c)| acc | ((c as u128) << i));
        for d in (m..2 * m - 1).rev() {
            if prod >> d & 1 == 1 {
                prod ^= modulus << (d - m);
            }
        }
        FqElem(prod as u64)
    }

    pub fn pow(&self, a: FqElem, mut exp: u64) -> FqElem {
        let mut acc = FqElem::ONE;
        let mut base = a;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Power with a signed exponent; negative exponents go through the inverse.
    pub fn pow_signed(&self, a: FqElem, exp: i64) -> Result<FqElem> {
        if exp >= 0 {
            Ok(self.pow(a, exp as u64))
        } else {
            Ok(self.pow(self.inv(a)?, exp.unsigned_abs()))
        }
    }

    pub fn inv(&self, a: FqElem) -> Result<FqElem> {
        if a.is_zero() {
            return Err(Error::Arithmetic("inverse of zero".into()));
        }
        Ok(self.pow(a, self.q - 2))
    }

    pub fn div(&self, a: FqElem, b: FqElem) -> Result<FqElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn frobenius(&self, a: FqElem) -> FqElem {
        self.pow(a, self.p)
    }

    /// Absolute trace `a + a^p + ... + a^(p^(m-1))`, an element of `GF(p)`.
    pub fn trace(&self, a: FqElem) -> FqElem {
        let mut acc = a;
        let mut conj = a;
        for _ in 1..self.m {
            conj = self.frobenius(conj);
            acc = self.add(acc, conj);
        }
        acc
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: FqElem) -> Result<u64> {
        if a.is_zero() {
            return Err(domain!("zero has no multiplicative order"));
        }
        let mut order = self.q - 1;
        for r in nt::prime_factors(self.q - 1) {
            while order % r == 0 && self.pow(a, order / r) == FqElem::ONE {
                order /= r;
            }
        }
        Ok(order)
    }

    /// First element of exact multiplicative order `n` of the form
    /// `w^((q-1)/n)`, scanning `w` in ascending enumeration order.
    pub fn find_element_of_order(&self, n: u64) -> Result<FqElem> {
        if n == 0 || (self.q - 1) % n != 0 {
            let needed = if n % self.p == 0 { None } else { nt::mul_order(self.p, n) };
            return Err(match needed {
                Some(m) => domain!(
                    "{n} does not divide {}^{} - 1; an extension of degree divisible by {m} is required",
                    self.p,
                    self.m
                ),
                None => domain!("no elements of order {n} in characteristic {}", self.p),
            });
        }
        let cofactor = (self.q - 1) / n;
        let factors = nt::prime_factors(n);
        for w in 1..self.q {
            let z = self.pow(FqElem(w), cofactor);
            if factors.iter().all(|&r| self.pow(z, n / r) != FqElem::ONE) {
                return Ok(z);
            }
        }
        Err(Error::Consistency(alloc::format!("no element of order {n} found")))
    }

    /// Deterministic primitive `ell`-th root of unity for a prime `ell`.
    pub fn find_root_of_unity(&self, ell: u64) -> Result<FqElem> {
        if !nt::is_prime(ell) {
            return Err(domain!("{ell} is not prime"));
        }
        self.find_element_of_order(ell)
    }

    fn modulus_is_irreducible(&self) -> bool {
        let (p, m) = (self.p, self.m);
        if self.modulus[0] == 0 {
            return false;
        }
        // Ben-Or: f is irreducible iff gcd(f, x^(p^i) - x) = 1 for i <= m/2.
        let x = FqElem(p);
        let mut xp = x;
        for _ in 1..=m / 2 {
            xp = self.frobenius(xp);
            let diff = self.sub(xp, x);
            let g = fp_gcd(self.modulus.clone(), self.coeffs(diff), p);
            if g.len() > 1 {
                return false;
            }
        }
        true
    }
}

fn digits_of(mut v: u64, p: u64, m: usize) -> Vec<u64> {
    let mut out = vec![0u64; m];
    for d in out.iter_mut() {
        *d = v % p;
        v /= p;
    }
    out
}

fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

/// Remainder of `a` by nonzero `b` over `GF(p)`, on trimmed coefficient vectors.
fn fp_rem(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    trim(&mut a);
    let db = b.len() - 1;
    let lead_inv = nt::mod_inv(b[db], p).expect("trimmed divisor");
    while a.len() > db {
        let top = a.len() - 1;
        let c = nt::mod_mul(a[top], lead_inv, p);
        for (i, &bi) in b.iter().enumerate() {
            let idx = top - db + i;
            a[idx] = (a[idx] + p - nt::mod_mul(c, bi, p)) % p;
        }
        trim(&mut a);
    }
    a
}

fn fp_gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = fp_rem(a, &b, p);
        a = b;
        b = r;
    }
    a
}
