//! Engine-versus-oracle sweeps used by `decomp verify` and the acceptance
//! suite.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::engine::{closure_leq, enumerate_classes, GLDecompDatum};
use crate::error::{Error, Result};
use crate::field::rat;
use crate::oracle::{class_closure_member_oracle, generic_induced_type, DEFAULT_TRIALS};
use crate::partition::{centralizer_dim, induce, partitions_of, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureMismatch {
    pub lower: GLDecompDatum,
    pub upper: GLDecompDatum,
    pub engine: bool,
    pub oracle: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub n: usize,
    pub classes: usize,
    pub pairs: usize,
    pub relations: usize,
    pub mismatches: Vec<ClosureMismatch>,
}

/// `closure_leq` against `class_closure_member_oracle` on every ordered pair.
pub fn verify_closure(n: usize, seed: u64) -> Result<ClosureReport> {
    let classes = enumerate_classes(n);
    let pairs: Vec<(usize, usize)> =
        (0..classes.len()).flat_map(|i| (0..classes.len()).map(move |j| (i, j))).collect();
    let results = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (a, b) = (&classes[i], &classes[j]);
            let pair_seed = seed.wrapping_add((i * classes.len() + j) as u64);
            Ok((i, j, closure_leq(a, b)?, class_closure_member_oracle(a, b, pair_seed)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let relations = results.iter().filter(|r| r.2).count();
    let mismatches = results
        .into_iter()
        .filter(|r| r.2 != r.3)
        .map(|(i, j, engine, oracle)| ClosureMismatch {
            lower: classes[i].clone(),
            upper: classes[j].clone(),
            engine,
            oracle,
        })
        .collect();
    Ok(ClosureReport { n, classes: classes.len(), pairs: pairs.len(), relations, mismatches })
}

/// Every tuple `(λ₁, …, λ_k)` with `λ_i ⊢ n_i`, for one block shape.
pub fn partition_tuples(block_sizes: &[usize]) -> Vec<Vec<Partition>> {
    block_sizes.iter().fold(vec![Vec::new()], |acc, &s| {
        let options = partitions_of(s);
        acc.into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |p| {
                    let mut next = prefix.clone();
                    next.push(p.clone());
                    next
                })
            })
            .collect()
    })
}

/// `n² − c(Ind) = Σ (n_i² − c(λ_i)) + (n² − Σ n_i²)`, with `c` the
/// centraliser dimension.
pub fn dimension_law_holds(parts: &[Partition], induced: &Partition) -> bool {
    let n: usize = parts.iter().map(Partition::size).sum();
    let levi: usize = parts.iter().map(|p| p.size() * p.size()).sum();
    let orbits: usize = parts.iter().map(|p| p.size() * p.size() - centralizer_dim(p)).sum();
    n * n - centralizer_dim(induced) == orbits + (n * n - levi)
}

/// Induction in stages over a random nested grouping equals flat induction.
pub fn transitivity_holds(parts: &[Partition], rng: &mut impl Rng) -> bool {
    let mut shuffled = parts.to_vec();
    shuffled.shuffle(rng);
    let mut groups: Vec<Vec<Partition>> = Vec::new();
    for p in shuffled {
        if groups.is_empty() || rng.gen_bool(0.5) {
            groups.push(vec![p]);
        } else {
            groups.last_mut().unwrap().push(p);
        }
    }
    let staged: Vec<Partition> = groups.iter().map(|g| induce(g).expect("non-empty group")).collect();
    induce(&staged).ok() == induce(parts).ok()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InductionMismatch {
    pub parts: Vec<Partition>,
    pub formula: Partition,
    pub oracle: Option<Partition>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InductionReport {
    pub n: usize,
    pub tuples: usize,
    pub oracle_mismatches: Vec<InductionMismatch>,
    pub dimension_law_violations: usize,
    pub transitivity_violations: usize,
}

/// For every Levi shape of 𝔤𝔩ₙ and every tuple of nilpotent orbits: the
/// induction formula against the sampled oracle, the oracle's dimension law,
/// and a random transitivity check.
pub fn verify_induction(n: usize, seed: u64) -> Result<InductionReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let tuples: Vec<Vec<Partition>> =
        partitions_of(n).iter().flat_map(|shape| partition_tuples(shape.parts())).collect();
    let checked = tuples
        .par_iter()
        .enumerate()
        .map(|(idx, parts)| {
            let formula = induce(parts)?;
            let labelled: Vec<_> = parts.iter().map(|p| (rat(0), p.clone())).collect();
            let sampled = generic_induced_type(&labelled, DEFAULT_TRIALS, seed.wrapping_add(idx as u64))?;
            let oracle = sampled.get(&rat(0)).cloned();
            let law = oracle.as_ref().is_some_and(|o| dimension_law_holds(parts, o));
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (idx as u64).wrapping_mul(0x9E37_79B9));
            let transitive = transitivity_holds(parts, &mut rng);
            Ok((parts.clone(), formula, oracle, law, transitive))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut report = InductionReport {
        n,
        tuples: checked.len(),
        oracle_mismatches: Vec::new(),
        dimension_law_violations: 0,
        transitivity_violations: 0,
    };
    for (parts, formula, oracle, law, transitive) in checked {
        if oracle.as_ref() != Some(&formula) {
            report.oracle_mismatches.push(InductionMismatch { parts, formula, oracle });
        }
        report.dimension_law_violations += usize::from(!law);
        report.transitivity_violations += usize::from(!transitive);
    }
    Ok(report)
}

impl ClosureReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl InductionReport {
    pub fn ok(&self) -> bool {
        self.oracle_mismatches.is_empty() && self.dimension_law_violations == 0 && self.transitivity_violations == 0
    }
}
