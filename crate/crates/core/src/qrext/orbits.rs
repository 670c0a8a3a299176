//! Orbits of minimum-weight codewords under a group of monomial maps.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use super::{permutation_group_order, ExtendedCode, MonomialMap};
use crate::cyccode::{LinearCode, PackedCode};
use crate::error::domain;
use crate::nt;
use crate::Result;

/// Cap on the generated permutation group when computing its order.
const GROUP_ORDER_CAP: u64 = 1 << 22;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitReport {
    pub weight: usize,
    pub word_count: u64,
    /// Orbit sizes in words, ascending.
    pub orbit_sizes: Vec<u64>,
    /// Order of the permutation group induced on coordinates, if within the cap.
    pub group_order: Option<u64>,
    /// Words were identified up to a nonzero scalar (`p > 2`).
    pub projective: bool,
}

impl OrbitReport {
    pub fn orbit_count(&self) -> usize {
        self.orbit_sizes.len()
    }
}

/// Every codeword of minimum nonzero weight, as symbol vectors in walk order.
pub fn min_weight_words<C: LinearCode + ?Sized>(code: &C, budget: u128) -> Result<(usize, Vec<Vec<u32>>)> {
    let packed = PackedCode::from_code(code)?;
    let total = packed.check_budget(budget)?;
    let Some(weight) = packed.weight_counts(0..total).min_distance() else {
        return Ok((0, Vec::new()));
    };
    Ok((weight, packed.words_of_weight(0..total, weight)))
}

/// Scales `word` so its first nonzero symbol is 1.
fn normalize(word: &mut [u32], p: u64) {
    if let Some(&lead) = word.iter().find(|&&c| c != 0) {
        let inv = nt::mod_inv(lead as u64, p).expect("nonzero");
        for c in word.iter_mut() {
            *c = nt::mod_mul(*c as u64, inv, p) as u32;
        }
    }
}

/// Partitions `words` (a set closed under `gens`) into orbits by
/// breadth-first closure. Returns orbit sizes in words, in order of first
/// appearance. For `p > 2` words are taken up to scalars, each projective
/// orbit counting `p - 1` words.
pub fn orbit_partition(words: &[Vec<u32>], gens: &[MonomialMap], p: u64) -> Result<Vec<u64>> {
    if words.is_empty() {
        return Ok(Vec::new());
    }
    let n = words[0].len();
    if gens.iter().any(|g| g.len() != n) || words.iter().any(|w| w.len() != n) {
        return Err(domain!("generators and words disagree on length"));
    }
    if p == 2 && n <= 128 {
        return binary_partition(words, gens);
    }
    let mut index: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    let mut keys = Vec::new();
    for w in words {
        let mut key = w.clone();
        normalize(&mut key, p);
        if !index.contains_key(&key) {
            index.insert(key.clone(), keys.len());
            keys.push(key);
        }
    }
    let mult = if p == 2 { 1 } else { p - 1 };
    let mut seen = vec![false; keys.len()];
    let mut sizes = Vec::new();
    for start in 0..keys.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut size = 0u64;
        while let Some(i) = queue.pop_front() {
            size += 1;
            for g in gens {
                let mut image = g.apply_symbols(&keys[i]);
                normalize(&mut image, p);
                let j = *index.get(&image).ok_or_else(|| domain!("word set is not closed under the generators"))?;
                if !seen[j] {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        sizes.push(size * mult);
    }
    Ok(sizes)
}

fn binary_partition(words: &[Vec<u32>], gens: &[MonomialMap]) -> Result<Vec<u64>> {
    let pack = |w: &[u32]| w.iter().enumerate().fold(0u128, |acc, (j, &c)| acc | ((c as u128 & 1) << j));
    let mut keys: Vec<u128> = words.iter().map(|w| pack(w)).collect();
    keys.sort_unstable();
    keys.dedup();
    let first_seen: Vec<u128> = {
        // Orbit starts follow the caller's word order.
        words.iter().map(|w| pack(w)).collect()
    };
    let perms: Vec<Vec<usize>> = gens.iter().map(|g| g.permutation()).collect();
    let apply = |perm: &[usize], w: u128| {
        let mut out = 0u128;
        let mut bits = w;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            out |= 1 << perm[j];
            bits &= bits - 1;
        }
        out
    };
    let mut seen = vec![false; keys.len()];
    let mut sizes = Vec::new();
    for start in first_seen {
        let s = keys.binary_search(&start).expect("present");
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([start]);
        let mut size = 0u64;
        while let Some(w) = queue.pop_front() {
            size += 1;
            for perm in &perms {
                let image = apply(perm, w);
                let j = keys
                    .binary_search(&image)
                    .map_err(|_| domain!("word set is not closed under the generators"))?;
                if !seen[j] {
                    seen[j] = true;
                    queue.push_back(image);
                }
            }
        }
        sizes.push(size);
    }
    Ok(sizes)
}

/// Enumerates the minimum-weight words of `ext` and splits them into orbits
/// under the group generated by `gens`.
pub fn min_weight_orbits(ext: &ExtendedCode, gens: &[MonomialMap], budget: u128) -> Result<OrbitReport> {
    let (weight, words) = min_weight_words(ext, budget)?;
    orbit_report(weight, &words, gens, ext.ctx().characteristic())
}

/// [`OrbitReport`] for a precomputed word list.
pub fn orbit_report(weight: usize, words: &[Vec<u32>], gens: &[MonomialMap], p: u64) -> Result<OrbitReport> {
    let mut orbit_sizes = orbit_partition(words, gens, p)?;
    orbit_sizes.sort_unstable();
    let perms: Vec<Vec<usize>> = gens.iter().map(|g| g.permutation()).collect();
    Ok(OrbitReport {
        weight,
        word_count: words.len() as u64,
        orbit_sizes,
        group_order: permutation_group_order(&perms, GROUP_ORDER_CAP).ok(),
        projective: p > 2,
    })
}
