use std::collections::BTreeSet;

use super::formulas::k_of;
use crate::error::{Error, Result};

/// Six vertex sets that are supposed to cover every pair of `[n]`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SixCover {
    pub sets: [BTreeSet<usize>; 6],
}

impl SixCover {
    pub fn new(sets: [BTreeSet<usize>; 6]) -> Self {
        SixCover { sets }
    }

    pub fn from_slices(sets: [&[usize]; 6]) -> Self {
        SixCover {
            sets: sets.map(|s| s.iter().copied().collect()),
        }
    }

    /// Some pair of `[n]` not contained together in any set.
    ///
    /// Each vertex gets a 6-bit membership mask; a pair is covered iff the
    /// masks intersect, so only pairs of distinct mask classes need checking.
    pub fn uncovered_pair(&self, n: usize) -> Option<(usize, usize)> {
        let mut reps: [Vec<usize>; 64] = std::array::from_fn(|_| Vec::new());
        for v in 0..n {
            let mask = self
                .sets
                .iter()
                .enumerate()
                .filter(|(_, s)| s.contains(&v))
                .fold(0usize, |m, (i, _)| m | (1 << i));
            if reps[mask].len() < 2 {
                reps[mask].push(v);
            }
        }
        for a in 0..64 {
            if reps[a].is_empty() {
                continue;
            }
            if a == 0 && reps[a].len() >= 2 {
                return Some((reps[a][0], reps[a][1]));
            }
            for b in a + 1..64 {
                if !reps[b].is_empty() && a & b == 0 {
                    let (x, y) = (reps[a][0], reps[b][0]);
                    return Some((x.min(y), x.max(y)));
                }
            }
        }
        None
    }

    pub fn first_two_disjoint(&self) -> std::result::Result<(), usize> {
        match self.sets[0].intersection(&self.sets[1]).next() {
            Some(&x) => Err(x),
            None => Ok(()),
        }
    }
}

/// Smallest 1-based index `i` with `|U_i| >= k(n)`, after checking the
/// covering and disjointness hypotheses.
pub fn six_cover_witness(cov: &SixCover, n: usize) -> Result<usize> {
    let k = k_of(n)?;
    if let Some(x) = cov.sets.iter().flatten().find(|&&x| x >= n) {
        return Err(Error::VertexOutOfRange { vertex: *x, n });
    }
    if let Some((x, y)) = cov.uncovered_pair(n) {
        return Err(Error::CoverageViolated(x, y));
    }
    cov.first_two_disjoint().map_err(Error::NotDisjoint)?;
    cov.sets
        .iter()
        .position(|s| s.len() >= k)
        .map(|i| i + 1)
        .ok_or_else(|| {
            Error::Invariant(format!(
                "six sets satisfy the hypotheses but none has {k} vertices (n = {n})"
            ))
        })
}
