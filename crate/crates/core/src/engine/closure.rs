//! The closure order on GLₙ decomposition classes.
//!
//! `d1 ⪯ d2` holds when the blocks of `d2` can be distributed over the
//! blocks of `d1` so that each block `(m_j, f_j)` of `d1` receives blocks of
//! total size `m_j` whose induced partition dominates `f_j`. Geometrically:
//! collapsing eigenvalues of `d2` onto those of `d1` and inducing inside each
//! eigenspace yields an orbit whose closure contains `d1`.
//!
//! This order is characteristic-free; it is checked against the matrix
//! oracle in characteristic 0 and spot-checked over finite fields.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::partition::{dominates_unchecked, induce, Partition};

use super::datum::GLDecompDatum;

pub fn closure_leq(d1: &GLDecompDatum, d2: &GLDecompDatum) -> Result<bool> {
    if d1.n() != d2.n() {
        return Err(Error::SizeMismatch { left: d1.n(), right: d2.n() });
    }
    if d1.num_blocks() > d2.num_blocks() {
        return Ok(false);
    }
    Ok(FiberSearch::new(d1, d2).run())
}

/// Backtracking over fibre assignments, one `d1` block at a time, with `d2`
/// held as a multiset of distinct blocks.
struct FiberSearch<'a> {
    targets: &'a [(usize, Partition)],
    kinds: Vec<(usize, &'a Partition)>,
    initial: Vec<usize>,
    memo: HashMap<(usize, Vec<usize>), bool>,
}

impl<'a> FiberSearch<'a> {
    fn new(d1: &'a GLDecompDatum, d2: &'a GLDecompDatum) -> Self {
        let mut kinds: Vec<(usize, &Partition)> = Vec::new();
        let mut counts = Vec::new();
        for (s, e) in d2.blocks() {
            match kinds.last() {
                Some((ls, le)) if ls == s && *le == e => *counts.last_mut().unwrap() += 1,
                _ => {
                    kinds.push((*s, e));
                    counts.push(1);
                }
            }
        }
        FiberSearch { targets: d1.blocks(), kinds, initial: counts, memo: HashMap::new() }
    }

    fn run(&mut self) -> bool {
        let counts = std::mem::take(&mut self.initial);
        self.assign(0, counts)
    }

    fn assign(&mut self, j: usize, remaining: Vec<usize>) -> bool {
        if j == self.targets.len() {
            return remaining.iter().all(|&c| c == 0);
        }
        if let Some(&hit) = self.memo.get(&(j, remaining.clone())) {
            return hit;
        }
        let (size, target) = &self.targets[j];
        let mut chosen = vec![0usize; remaining.len()];
        let mut found = false;
        let mut fibres = Vec::new();
        self.fibres_of_size(0, *size, &remaining, &mut chosen, &mut fibres);
        for fibre in fibres {
            let parts: Vec<Partition> = fibre
                .iter()
                .enumerate()
                .flat_map(|(k, &c)| std::iter::repeat_n(self.kinds[k].1.clone(), c))
                .collect();
            let induced = induce(&parts).expect("fibre is non-empty");
            if !dominates_unchecked(&induced, target) {
                continue;
            }
            let rest: Vec<usize> = remaining.iter().zip(&fibre).map(|(r, c)| r - c).collect();
            if self.assign(j + 1, rest) {
                found = true;
                break;
            }
        }
        self.memo.insert((j, remaining), found);
        found
    }

    /// Sub-multisets of `remaining` with total block size `rem`.
    fn fibres_of_size(
        &self,
        k: usize,
        rem: usize,
        remaining: &[usize],
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if rem == 0 {
            out.push(chosen.clone());
            return;
        }
        if k == remaining.len() {
            return;
        }
        let size = self.kinds[k].0;
        let max = remaining[k].min(rem / size);
        for c in (0..=max).rev() {
            chosen[k] = c;
            self.fibres_of_size(k + 1, rem - c * size, remaining, chosen, out);
        }
        chosen[k] = 0;
    }
}
