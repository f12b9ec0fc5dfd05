//! Partitions as Jordan types of nilpotent 𝔤𝔩ₙ-orbits.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing positive parts. Serialises as a bare array, e.g. `[2,1]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(1^n)`: the zero orbit.
    pub fn trivial(n: usize) -> Self {
        Partition(vec![1; n])
    }

    /// `(n)`: the regular nilpotent orbit.
    pub fn regular(n: usize) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition(vec![n])
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Dot-separated parts, as used on the command line: `2.1.1`.
    pub fn dotted(&self) -> String {
        self.0.iter().map(usize::to_string).collect::<Vec<_>>().join(".")
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

pub fn transpose(lambda: &Partition) -> Partition {
    let first = lambda.part(0);
    Partition((1..=first).map(|j| lambda.0.iter().take_while(|&&x| x >= j).count()).collect())
}

/// Prefix-sum comparison `λ ⊴ μ`.
pub fn dominance_leq(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch { left: lambda.size(), right: mu.size() });
    }
    Ok(dominates_unchecked(mu, lambda))
}

/// `mu ⊵ lambda`, sizes assumed equal.
pub(crate) fn dominates_unchecked(mu: &Partition, lambda: &Partition) -> bool {
    let (mut a, mut b) = (0usize, 0usize);
    for k in 0..lambda.len().max(mu.len()) {
        a += lambda.part(k);
        b += mu.part(k);
        if a > b {
            return false;
        }
    }
    true
}

/// `dim 𝔠_{𝔤𝔩ₙ}(e_λ) = Σ_j (λ′_j)²`.
pub fn centralizer_dim(lambda: &Partition) -> usize {
    transpose(lambda).0.iter().map(|c| c * c).sum()
}

/// Induction from `𝔤𝔩_{n_1} × … × 𝔤𝔩_{n_k}`: the componentwise sum of the
/// zero-padded partitions.
pub fn induce(parts_list: &[Partition]) -> Result<Partition> {
    if parts_list.is_empty() {
        return Err(Error::EmptyInduction);
    }
    let len = parts_list.iter().map(Partition::len).max().unwrap_or(0);
    let sum = (0..len).map(|k| parts_list.iter().map(|p| p.part(k)).sum()).collect();
    Ok(Partition(sum))
}

/// All partitions of `n`, in reverse lexicographic order (`(n)` first).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for part in (1..=rem.min(max)).rev() {
            cur.push(part);
            go(rem - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}
