//! Exhaustive codeword enumeration over prime fields.
//!
//! Messages are walked so that consecutive messages differ in a single
//! generator row: a binary reflected Gray code for `q = 2` (words packed in a
//! `u64`, weight by popcount) and a mixed-radix counter otherwise. Both walks
//! can start anywhere, which lets callers split the message space into
//! independent ranges.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use super::LinearCode;
use crate::error::domain;
use crate::linalg::Matrix;
use crate::{Error, Result};

/// Default cap on the number of messages `q^k` an enumeration may visit.
pub const DEFAULT_BUDGET: u128 = 1 << 26;

/// Word counts `A_0..A_n` by Hamming weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightEnumerator {
    pub counts: Vec<u64>,
}

impl WeightEnumerator {
    pub fn zeros(n: usize) -> Self {
        WeightEnumerator { counts: vec![0; n + 1] }
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&c| c as u128).sum()
    }

    /// Smallest nonzero weight that occurs.
    pub fn min_distance(&self) -> Option<usize> {
        self.counts.iter().enumerate().skip(1).find(|(_, &c)| c > 0).map(|(w, _)| w)
    }

    pub fn merge(&mut self, other: &WeightEnumerator) {
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
    }
}

/// A generator matrix over `GF(p)` in a form suited to fast enumeration.
#[derive(Clone, Debug)]
pub enum PackedCode {
    /// `p = 2`, `n <= 64`: row `i` has coordinate `j` in bit `j`.
    Binary { n: usize, rows: Vec<u64> },
    Prime { p: u32, n: usize, rows: Vec<Vec<u32>> },
}

impl PackedCode {
    pub fn from_matrix(m: &Matrix) -> Result<Self> {
        let ctx = m.ctx();
        if !ctx.is_prime_field() {
            return Err(domain!("enumeration is implemented over prime fields only"));
        }
        let n = m.ncols();
        let p = ctx.characteristic();
        if p == 2 && n <= 64 {
            let rows = m
                .rows()
                .iter()
                .map(|r| r.iter().enumerate().fold(0u64, |acc, (j, c)| acc | (c.index() << j)))
                .collect();
            return Ok(PackedCode::Binary { n, rows });
        }
        let rows = m.rows().iter().map(|r| r.iter().map(|c| c.index() as u32).collect()).collect();
        Ok(PackedCode::Prime { p: p as u32, n, rows })
    }

    pub fn from_code<C: LinearCode + ?Sized>(code: &C) -> Result<Self> {
        Self::from_matrix(&code.generator_matrix())
    }

    pub fn length(&self) -> usize {
        match self {
            PackedCode::Binary { n, .. } | PackedCode::Prime { n, .. } => *n,
        }
    }

    pub fn dimension(&self) -> usize {
        match self {
            PackedCode::Binary { rows, .. } => rows.len(),
            PackedCode::Prime { rows, .. } => rows.len(),
        }
    }

    pub fn field_size(&self) -> u32 {
        match self {
            PackedCode::Binary { .. } => 2,
            PackedCode::Prime { p, .. } => *p,
        }
    }

    /// `q^k`, or `None` past `u128`.
    pub fn message_count(&self) -> Option<u128> {
        (self.field_size() as u128).checked_pow(self.dimension() as u32)
    }

    pub fn check_budget(&self, budget: u128) -> Result<u128> {
        match self.message_count() {
            Some(total) if total <= budget => Ok(total),
            total => Err(Error::Budget { needed: total.unwrap_or(u128::MAX), budget }),
        }
    }

    /// Calls `visit` on every codeword whose message index lies in `range`.
    /// The codeword is passed packed for binary codes and as symbols otherwise.
    fn walk(&self, range: Range<u128>, mut visit: impl FnMut(WordRef<'_>)) {
        if range.is_empty() {
            return;
        }
        match self {
            PackedCode::Binary { rows, .. } => {
                let (lo, hi) = (range.start as u64, range.end);
                let gray = lo ^ (lo >> 1);
                let mut word = rows
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| gray >> i & 1 == 1)
                    .fold(0u64, |acc, (_, r)| acc ^ r);
                visit(WordRef::Bits(word));
                let mut i = lo;
                while ((i + 1) as u128) < hi {
                    i += 1;
                    word ^= rows[i.trailing_zeros() as usize];
                    visit(WordRef::Bits(word));
                }
            }
            PackedCode::Prime { p, n, rows } => {
                let p = *p;
                let k = rows.len();
                let mut digits = vec![0u32; k];
                let mut rest = range.start;
                for d in digits.iter_mut() {
                    *d = (rest % p as u128) as u32;
                    rest /= p as u128;
                }
                let mut word = vec![0u32; *n];
                for (d, row) in digits.iter().zip(rows) {
                    for (w, &r) in word.iter_mut().zip(row) {
                        *w = ((*w as u64 + *d as u64 * r as u64) % p as u64) as u32;
                    }
                }
                visit(WordRef::Symbols(&word));
                for _ in range.start + 1..range.end {
                    // Each digit that wraps from p-1 to 0 adds its row once more
                    // (since -(p-1) = 1), as does the digit that is incremented.
                    for (t, row) in rows.iter().enumerate() {
                        for (w, &r) in word.iter_mut().zip(row) {
                            *w = (*w + r) % p;
                        }
                        digits[t] += 1;
                        if digits[t] < p {
                            break;
                        }
                        digits[t] = 0;
                    }
                    visit(WordRef::Symbols(&word));
                }
            }
        }
    }

    /// Weight counts over the messages in `range`.
    pub fn weight_counts(&self, range: Range<u128>) -> WeightEnumerator {
        let mut we = WeightEnumerator::zeros(self.length());
        self.walk(range, |w| we.counts[w.weight()] += 1);
        we
    }

    /// Codewords of weight exactly `weight` among the messages in `range`, as
    /// symbol vectors.
    pub fn words_of_weight(&self, range: Range<u128>, weight: usize) -> Vec<Vec<u32>> {
        let n = self.length();
        let mut out = Vec::new();
        self.walk(range, |w| {
            if w.weight() == weight {
                out.push(w.to_symbols(n));
            }
        });
        out
    }
}

#[derive(Clone, Copy)]
enum WordRef<'a> {
    Bits(u64),
    Symbols(&'a [u32]),
}

impl WordRef<'_> {
    fn weight(&self) -> usize {
        match self {
            WordRef::Bits(b) => b.count_ones() as usize,
            WordRef::Symbols(s) => s.iter().filter(|&&c| c != 0).count(),
        }
    }

    fn to_symbols(self, n: usize) -> Vec<u32> {
        match self {
            WordRef::Bits(b) => (0..n).map(|j| (b >> j & 1) as u32).collect(),
            WordRef::Symbols(s) => s.to_vec(),
        }
    }
}

/// Exact weight distribution by walking all `q^k` messages.
pub fn weight_enumerator<C: LinearCode + ?Sized>(code: &C, budget: u128) -> Result<WeightEnumerator> {
    let packed = PackedCode::from_code(code)?;
    let total = packed.check_budget(budget)?;
    Ok(packed.weight_counts(0..total))
}

/// Minimum distance by exhaustive enumeration; undefined for the zero code.
pub fn min_distance<C: LinearCode + ?Sized>(code: &C, budget: u128) -> Result<usize> {
    weight_enumerator(code, budget)?
        .min_distance()
        .ok_or_else(|| domain!("minimum distance of the zero code is undefined"))
}
