//! Monomial transformations of `GF(p)^(l+1)`: a coordinate permutation with a
//! nonzero scalar on each output coordinate.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::{ExtendedCode, QrFamily};
use crate::cyccode::LinearCode;
use crate::error::{consistency, domain};
use crate::gf::{FieldCtx, FqElem};
use crate::linalg::Matrix;
use crate::nt;
use crate::{Error, Result};

/// `(w M)[i] = scale[i] * w[source[i]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMap {
    ctx: Arc<FieldCtx>,
    source: Vec<usize>,
    scale: Vec<FqElem>,
}

impl MonomialMap {
    pub fn new(ctx: Arc<FieldCtx>, source: Vec<usize>, scale: Vec<FqElem>) -> Result<Self> {
        let n = source.len();
        if scale.len() != n {
            return Err(domain!("{} scalars for {n} coordinates", scale.len()));
        }
        let mut seen = vec![false; n];
        for &s in &source {
            if s >= n || core::mem::replace(&mut seen[s], true) {
                return Err(domain!("coordinate map is not a bijection"));
            }
        }
        if scale.iter().any(|c| c.is_zero()) {
            return Err(domain!("monomial scalars must be nonzero"));
        }
        Ok(MonomialMap { ctx, source, scale })
    }

    pub fn identity(ctx: Arc<FieldCtx>, len: usize) -> Self {
        MonomialMap { ctx, source: (0..len).collect(), scale: vec![FqElem::ONE; len] }
    }

    pub fn len(&self) -> usize {
        self.source.len()
    }

    pub fn is_empty(&self) -> bool {
        self.source.is_empty()
    }

    /// Input coordinate feeding each output coordinate.
    pub fn source(&self) -> &[usize] {
        &self.source
    }

    pub fn scale(&self) -> &[FqElem] {
        &self.scale
    }

    /// Point map: input coordinate `j` lands on output coordinate `perm[j]`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm = vec![0; self.len()];
        for (i, &s) in self.source.iter().enumerate() {
            perm[s] = i;
        }
        perm
    }

    pub fn apply(&self, word: &[FqElem]) -> Result<Vec<FqElem>> {
        if word.len() != self.len() {
            return Err(domain!("word of length {} for a map on {} coordinates", word.len(), self.len()));
        }
        Ok(self.source.iter().zip(&self.scale).map(|(&s, &c)| self.ctx.mul(c, word[s])).collect())
    }

    /// [`apply`](Self::apply) on prime-field symbols.
    pub fn apply_symbols(&self, word: &[u32]) -> Vec<u32> {
        let p = self.ctx.characteristic();
        self.source
            .iter()
            .zip(&self.scale)
            .map(|(&s, &c)| nt::mod_mul(c.index(), word[s] as u64, p) as u32)
            .collect()
    }

    /// Image of every row.
    pub fn apply_matrix(&self, m: &Matrix) -> Result<Matrix> {
        let rows = m.rows().iter().map(|r| self.apply(r)).collect::<Result<Vec<_>>>()?;
        Matrix::new(m.ctx().clone(), m.ncols(), rows)
    }

    /// The map `w -> (w self) then`.
    pub fn then(&self, then: &MonomialMap) -> MonomialMap {
        let source = then.source.iter().map(|&t| self.source[t]).collect();
        let scale = then
            .source
            .iter()
            .zip(&then.scale)
            .map(|(&t, &c)| self.ctx.mul(c, self.scale[t]))
            .collect();
        MonomialMap { ctx: self.ctx.clone(), source, scale }
    }

    pub fn inverse(&self) -> MonomialMap {
        let n = self.len();
        let mut source = vec![0; n];
        let mut scale = vec![FqElem::ONE; n];
        for (i, (&s, &c)) in self.source.iter().zip(&self.scale).enumerate() {
            source[s] = i;
            scale[s] = self.ctx.inv(c).expect("nonzero scalar");
        }
        MonomialMap { ctx: self.ctx.clone(), source, scale }
    }

    /// Whether every generator row of `code` maps into `code`.
    pub fn preserves(&self, code: &ExtendedCode) -> Result<bool> {
        for row in code.generator_matrix().rows() {
            if !code.contains(&self.apply(row)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The Gleason-Prange map on coordinates `0..l` and `inf = l`:
/// `(a_0, ..., a_i, ...; a_inf) -> (e0 a_inf, ..., (i/l) a_(-1/i), ...; (-1/l) e0 a_0)`.
pub fn sigma_map(family: &QrFamily, epsilon0: i64) -> Result<MonomialMap> {
    if epsilon0 != 1 && epsilon0 != -1 {
        return Err(domain!("epsilon0 must be +1 or -1, got {epsilon0}"));
    }
    let ell = family.ell;
    let inf = ell as usize;
    let k = &family.prime;
    let mut source = vec![0; inf + 1];
    let mut scale = vec![FqElem::ONE; inf + 1];
    for i in 1..ell {
        let inv = nt::mod_inv(i, ell).expect("unit");
        source[i as usize] = ((ell - inv) % ell) as usize;
        scale[i as usize] = family.legendre_elem(i as i64);
    }
    source[0] = inf;
    scale[0] = k.from_int(epsilon0);
    source[inf] = 0;
    scale[inf] = k.from_int(nt::legendre(-1, ell) as i64 * epsilon0);
    MonomialMap::new(k.clone(), source, scale)
}

/// `i -> i + 1` on the finite coordinates, `inf` fixed.
pub fn shift_map(ctx: &Arc<FieldCtx>, ell: u64) -> MonomialMap {
    let l = ell as usize;
    let mut source: Vec<usize> = (0..l).map(|i| (i + l - 1) % l).collect();
    source.push(l);
    MonomialMap { ctx: ctx.clone(), source, scale: vec![FqElem::ONE; l + 1] }
}

/// `i -> a i` on the finite coordinates, `inf` fixed.
pub fn multiplier_map(ctx: &Arc<FieldCtx>, ell: u64, a: u64) -> Result<MonomialMap> {
    let a_inv = nt::mod_inv(a, ell).ok_or_else(|| domain!("{a} is not a unit mod {ell}"))?;
    let l = ell as usize;
    let mut source: Vec<usize> = (0..ell).map(|i| nt::mod_mul(a_inv, i, ell) as usize).collect();
    source.push(l);
    Ok(MonomialMap { ctx: ctx.clone(), source, scale: vec![FqElem::ONE; l + 1] })
}

/// Shift, multiplication by the square of the smallest primitive root, and
/// `sigma` with `e0 = +1`; each is checked to preserve `A_inf`.
pub fn psl2_generators(family: &QrFamily) -> Result<Vec<MonomialMap>> {
    let ell = family.ell;
    let r = nt::primitive_root(ell);
    let gens = vec![
        shift_map(&family.prime, ell),
        multiplier_map(&family.prime, ell, nt::mod_mul(r, r, ell))?,
        sigma_map(family, 1)?,
    ];
    let ext = family.a_infinity();
    for (name, g) in ["shift", "multiplier", "sigma"].iter().zip(&gens) {
        if !g.preserves(&ext)? {
            return Err(consistency!("{name} does not preserve A_inf for (p={}, l={ell})", family.p));
        }
    }
    Ok(gens)
}

/// Order of the permutation group generated by `perms`, by enumerating its
/// elements; fails when the group exceeds `cap` elements.
pub fn permutation_group_order(perms: &[Vec<usize>], cap: u64) -> Result<u64> {
    let Some(first) = perms.first() else {
        return Ok(1);
    };
    let n = first.len();
    if n > u16::MAX as usize || perms.iter().any(|p| p.len() != n) {
        return Err(domain!("generators act on different point sets"));
    }
    let gens: Vec<Vec<u16>> = perms.iter().map(|p| p.iter().map(|&i| i as u16).collect()).collect();
    let identity: Vec<u16> = (0..n as u16).collect();
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(identity.clone());
    queue.push_back(identity);
    while let Some(elem) = queue.pop_front() {
        for g in &gens {
            let next: Vec<u16> = elem.iter().map(|&i| g[i as usize]).collect();
            if seen.insert(next.clone()) {
                if seen.len() as u64 > cap {
                    return Err(Error::Budget { needed: seen.len() as u128, budget: cap as u128 });
                }
                queue.push_back(next);
            }
        }
    }
    Ok(seen.len() as u64)
}
