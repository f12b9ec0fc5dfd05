//! Sampled induction and the closure-membership oracle.
//!
//! Induced orbits are found as the dense orbit meeting
//! `blockdiag(z_i I + J_{e_i}) + 𝔲`, where `𝔲` is the strictly block-upper
//! region: sample, take the largest Jordan type seen, and accept once two
//! consecutive samples agree with it.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::engine::GLDecompDatum;
use crate::error::{Error, Result};
use crate::field::{rat, Rationals};
use crate::matrix::Matrix;
use crate::partition::Partition;

use super::jordan::{jordan_matrix, jordan_type_with, orbit_closure_leq, rank_sequence, representative, JordanType};

/// Entries of the random unipotent part are uniform in `[-ENTRY_BOUND, ENTRY_BOUND]`.
pub const ENTRY_BOUND: i64 = 1_000_000;

/// Default number of samples per induced-orbit computation.
pub const DEFAULT_TRIALS: usize = 8;

#[derive(Clone, PartialEq)]
struct Sample {
    jordan: JordanType<BigRational>,
    ranks: Vec<Vec<usize>>,
}

impl Sample {
    /// Closure order on samples sharing a spectrum: ranks bounded pointwise.
    fn below(&self, other: &Sample) -> bool {
        self.ranks.iter().zip(&other.ranks).all(|(a, b)| a.iter().zip(b).all(|(x, y)| x <= y))
    }
}

pub fn generic_induced_type(
    blocks: &[(BigRational, Partition)],
    trials: usize,
    seed: u64,
) -> Result<JordanType<BigRational>> {
    if trials < 2 {
        return Err(Error::InvalidArgument("generic_induced_type needs at least 2 trials".into()));
    }
    if blocks.is_empty() || blocks.iter().any(|(_, p)| p.is_empty()) {
        return Err(Error::InvalidArgument("blocks must be non-empty partitions".into()));
    }
    let q = Rationals;
    let base = jordan_matrix(&q, blocks);
    let n = base.rows();
    let mut offsets = Vec::with_capacity(blocks.len() + 1);
    offsets.push(0);
    for (_, p) in blocks {
        offsets.push(offsets.last().unwrap() + p.size());
    }
    let owner = |i: usize| offsets.iter().rposition(|&o| o <= i).unwrap();
    let mut eigenvalues: Vec<BigRational> = blocks.iter().map(|(z, _)| z.clone()).collect();
    eigenvalues.sort();
    eigenvalues.dedup();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<Sample> = None;
    let mut previous: Option<Sample> = None;
    for _ in 0..trials {
        let mut m = base.clone();
        for i in 0..n {
            for j in 0..n {
                if owner(i) < owner(j) {
                    m.set(i, j, rat(rng.gen_range(-ENTRY_BOUND..=ENTRY_BOUND)));
                }
            }
        }
        let sample = Sample {
            jordan: jordan_type_with(&q, &m, &eigenvalues)?,
            ranks: eigenvalues.iter().map(|t| rank_sequence(&q, &m, t)).collect(),
        };
        best = Some(match best {
            Some(b) if sample.below(&b) => b,
            _ => sample.clone(),
        });
        if previous.as_ref() == Some(&sample) && best.as_ref() == Some(&sample) {
            return Ok(sample.jordan);
        }
        previous = Some(sample);
    }
    Err(Error::Inconclusive { trials })
}

/// Eigenvalues used for the generic point of a class: the first primes,
/// scaled by a seed-dependent non-zero factor.
pub fn seeded_eigenvalues(count: usize, seed: u64) -> Vec<BigRational> {
    let scale = (seed % 97 + 1) as i64;
    let mut primes = Vec::with_capacity(count);
    let mut c = 2i64;
    while primes.len() < count {
        if (2..c).take_while(|d| d * d <= c).all(|d| c % d != 0) {
            primes.push(c);
        }
        c += 1;
    }
    primes.into_iter().map(|p| rat(p * scale)).collect()
}

/// Whether a point of `d1` lies in the closure of the class `d2`, decided
/// on matrices: every way of sending the blocks of `d2` to eigenvalues of the
/// representative of `d1` (characteristic polynomials must agree) is tried,
/// the induced orbit is sampled, and the rank criterion decides membership.
pub fn class_closure_member_oracle(d1: &GLDecompDatum, d2: &GLDecompDatum, seed: u64) -> Result<bool> {
    if d1.n() != d2.n() {
        return Err(Error::SizeMismatch { left: d1.n(), right: d2.n() });
    }
    let q = Rationals;
    let z = seeded_eigenvalues(d1.num_blocks(), seed);
    let rep = representative(&q, d1, &z)?;
    let sizes1: Vec<usize> = d1.blocks().iter().map(|(s, _)| *s).collect();
    let blocks2 = d2.blocks();

    let mut assignment = vec![0usize; blocks2.len()];
    let mut load = vec![0usize; sizes1.len()];
    let mut attempt = 0u64;

    // depth-first over maps blocks2 -> blocks1 respecting capacities;
    // identical consecutive blocks of d2 get non-decreasing targets
    fn search(
        i: usize,
        blocks2: &[(usize, Partition)],
        sizes1: &[usize],
        assignment: &mut Vec<usize>,
        load: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> Result<bool>,
    ) -> Result<bool> {
        if i == blocks2.len() {
            if load.iter().zip(sizes1).all(|(l, s)| l == s) {
                return visit(assignment);
            }
            return Ok(false);
        }
        let start = if i > 0 && blocks2[i] == blocks2[i - 1] { assignment[i - 1] } else { 0 };
        for j in start..sizes1.len() {
            if load[j] + blocks2[i].0 > sizes1[j] {
                continue;
            }
            load[j] += blocks2[i].0;
            assignment[i] = j;
            let hit = search(i + 1, blocks2, sizes1, assignment, load, visit)?;
            load[j] -= blocks2[i].0;
            if hit {
                return Ok(true);
            }
        }
        Ok(false)
    }

    let mut visit = |assign: &[usize]| -> Result<bool> {
        attempt += 1;
        let labelled: Vec<(BigRational, Partition)> =
            assign.iter().zip(blocks2).map(|(&j, (_, e))| (z[j].clone(), e.clone())).collect();
        let induced = generic_induced_type(&labelled, DEFAULT_TRIALS, seed.wrapping_mul(7919).wrapping_add(attempt))?;
        let target: Matrix<BigRational> = jordan_matrix(&q, induced.spectrum());
        orbit_closure_leq(&q, &rep, &target)
    };
    search(0, blocks2, &sizes1, &mut assignment, &mut load, &mut visit)
}
