//! Small number-theory helpers on machine integers.

use alloc::vec::Vec;

use crate::error::domain;
use crate::Result;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d <= n / d {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub fn ensure_odd_prime(ell: u64) -> Result<()> {
    if ell == 2 || !is_prime(ell) {
        return Err(domain!("{ell} is not an odd prime"));
    }
    Ok(())
}

pub fn mod_mul(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

pub fn mod_pow(mut base: u64, mut exp: u64, n: u64) -> u64 {
    let mut acc = 1 % n;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mod_mul(acc, base, n);
        }
        base = mod_mul(base, base, n);
        exp >>= 1;
    }
    acc
}

/// Reduces a signed integer into `0..n`.
pub fn reduce(a: i64, n: u64) -> u64 {
    (a as i128).rem_euclid(n as i128) as u64
}

/// Inverse of `a` modulo the prime `p`; `None` when `p | a`.
pub fn mod_inv(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        None
    } else {
        Some(mod_pow(a, p - 2, p))
    }
}

/// Legendre symbol `(a / ell)` by Euler's criterion.
pub fn legendre(a: i64, ell: u64) -> i8 {
    let a = reduce(a, ell);
    if a == 0 {
        return 0;
    }
    if mod_pow(a, (ell - 1) / 2, ell) == 1 {
        1
    } else {
        -1
    }
}

/// Distinct prime factors in ascending order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d <= n / d {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Multiplicative order of `a` modulo `n`, for `gcd(a, n) = 1`.
pub fn mul_order(a: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(1);
    }
    let a = a % n;
    let mut x = a;
    for k in 1..=n {
        if x == 1 {
            return Some(k);
        }
        x = mod_mul(x, a, n);
    }
    None
}

/// Smallest primitive root modulo the odd prime `ell`.
pub fn primitive_root(ell: u64) -> u64 {
    let factors = prime_factors(ell - 1);
    (2..ell)
        .find(|&g| factors.iter().all(|&q| mod_pow(g, (ell - 1) / q, ell) != 1))
        .unwrap_or(1)
}

/// Odd primes `3 <= ell <= bound`.
pub fn odd_primes_up_to(bound: u64) -> Vec<u64> {
    (3..=bound).filter(|&n| is_prime(n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_values() {
        assert_eq!(legendre(1, 7), 1);
        assert_eq!(legendre(-1, 7), -1);
        assert_eq!(legendre(2, 17), 1);
        assert_eq!(legendre(14, 7), 0);
        assert_eq!(legendre(-1, 13), 1);
    }

    #[test]
    fn legendre_matches_square_table() {
        for ell in odd_primes_up_to(60) {
            let squares: Vec<u64> = (1..ell).map(|x| x * x % ell).collect();
            for a in 1..ell {
                let expected = if squares.contains(&a) { 1 } else { -1 };
                assert_eq!(legendre(a as i64, ell), expected, "({a}/{ell})");
            }
            let residues = (1..ell).filter(|&a| legendre(a as i64, ell) == 1).count();
            assert_eq!(residues as u64, (ell - 1) / 2);
        }
    }

    #[test]
    fn legendre_is_multiplicative() {
        for ell in odd_primes_up_to(31) {
            for a in 1..ell as i64 {
                for b in 1..ell as i64 {
                    assert_eq!(legendre(a * b, ell), legendre(a, ell) * legendre(b, ell));
                }
            }
        }
    }

    #[test]
    fn orders_and_roots() {
        assert_eq!(mul_order(2, 23), Some(11));
        assert_eq!(mul_order(2, 47), Some(23));
        assert_eq!(mul_order(3, 11), Some(5));
        assert_eq!(mul_order(5, 19), Some(9));
        assert_eq!(primitive_root(7), 3);
        assert_eq!(primitive_root(23), 5);
        assert_eq!(primitive_root(47), 5);
        assert_eq!(prime_factors(24), [2, 3]);
        assert!(ensure_odd_prime(2).is_err());
        assert!(ensure_odd_prime(9).is_err());
    }
}
