use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{self, centralizer_dim, partitions_of, Partition};

/// A GLₙ decomposition datum: a multiset of `(block size, Jordan type)`
/// pairs, one per distinct eigenvalue of the semisimple part.
///
/// Blocks are kept sorted descending by `(size, partition)`, so equality of
/// data is equality of the stored vectors. Serialises as
/// `[[n_i, [parts…]], …]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<(usize, Partition)>", into = "Vec<(usize, Partition)>")]
pub struct GLDecompDatum {
    blocks: Vec<(usize, Partition)>,
}

impl GLDecompDatum {
    pub fn new(mut blocks: Vec<(usize, Partition)>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidArgument("a decomposition datum needs at least one block".into()));
        }
        for (size, e) in &blocks {
            if *size == 0 || e.size() != *size {
                return Err(Error::BlockSizeMismatch { size: *size, partition_size: e.size() });
            }
        }
        blocks.sort_unstable_by(|a, b| b.cmp(a));
        Ok(GLDecompDatum { blocks })
    }

    /// Shorthand for tests and examples: `&[(2, &[1, 1]), (1, &[1])]`.
    pub fn from_slices(blocks: &[(usize, &[usize])]) -> Result<Self> {
        let blocks = blocks
            .iter()
            .map(|(n, e)| Ok((*n, Partition::new(e.to_vec())?)))
            .collect::<Result<Vec<_>>>()?;
        GLDecompDatum::new(blocks)
    }

    /// `{(n, (1ⁿ))}`: the centre of 𝔤𝔩ₙ.
    pub fn center(n: usize) -> Self {
        GLDecompDatum { blocks: vec![(n, Partition::trivial(n))] }
    }

    /// `{(1,(1))ⁿ}`: regular semisimple elements.
    pub fn regular_semisimple(n: usize) -> Self {
        GLDecompDatum { blocks: vec![(1, Partition::trivial(1)); n] }
    }

    pub fn blocks(&self) -> &[(usize, Partition)] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(|(s, _)| s).sum()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn levi_shape(&self) -> LeviShape {
        LeviShape::new(self.blocks.iter().map(|(s, _)| *s).collect())
    }

    /// `"(2,(1,1))(1,(1))"`
    pub fn label(&self) -> String {
        self.blocks.iter().map(|(s, e)| format!("({s},{e})")).collect()
    }

    /// The command-line grammar: `"2:1.1,1:1"`.
    pub fn flag_string(&self) -> String {
        self.blocks.iter().map(|(s, e)| format!("{s}:{}", e.dotted())).collect::<Vec<_>>().join(",")
    }
}

impl TryFrom<Vec<(usize, Partition)>> for GLDecompDatum {
    type Error = Error;
    fn try_from(v: Vec<(usize, Partition)>) -> Result<Self> {
        GLDecompDatum::new(v)
    }
}

impl From<GLDecompDatum> for Vec<(usize, Partition)> {
    fn from(d: GLDecompDatum) -> Self {
        d.blocks
    }
}

impl fmt::Display for GLDecompDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Dimensions attached to the Levi `GL_{n_1} × … × GL_{n_k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviShape {
    pub block_sizes: Vec<usize>,
    pub dim_levi: usize,
    pub dim_center: usize,
    pub dim_unipotent_radical: usize,
}

impl LeviShape {
    pub fn new(mut block_sizes: Vec<usize>) -> Self {
        block_sizes.sort_unstable_by(|a, b| b.cmp(a));
        let n: usize = block_sizes.iter().sum();
        let dim_levi: usize = block_sizes.iter().map(|s| s * s).sum();
        LeviShape {
            dim_center: block_sizes.len(),
            dim_unipotent_radical: (n * n - dim_levi) / 2,
            dim_levi,
            block_sizes,
        }
    }
}

/// Every decomposition datum of GLₙ, canonical and without repeats.
pub fn enumerate_classes(n: usize) -> Vec<GLDecompDatum> {
    // Items (size, partition) in descending order; a datum is a
    // non-increasing sequence of items.
    let mut items: Vec<(usize, Partition)> =
        (1..=n).flat_map(|s| partitions_of(s).into_iter().map(move |p| (s, p))).collect();
    items.sort_unstable_by(|a, b| b.cmp(a));

    fn go(
        items: &[(usize, Partition)],
        start: usize,
        rem: usize,
        cur: &mut Vec<(usize, Partition)>,
        out: &mut Vec<GLDecompDatum>,
    ) {
        if rem == 0 {
            out.push(GLDecompDatum { blocks: cur.clone() });
            return;
        }
        for (i, item) in items.iter().enumerate().skip(start) {
            if item.0 > rem {
                continue;
            }
            cur.push(item.clone());
            go(items, i, rem - item.0, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(&items, 0, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Stabiliser (= centraliser) dimension shared by every element of the class:
/// `Σ_i dim 𝔠_{𝔤𝔩_{n_i}}(e_i)`.
pub fn level_of(d: &GLDecompDatum) -> usize {
    d.blocks.iter().map(|(_, e)| centralizer_dim(e)).sum()
}

/// `dim 𝔷(𝔩) + dim G·x = #blocks + n² − level`.
pub fn class_dim(d: &GLDecompDatum) -> usize {
    let n = d.n();
    d.num_blocks() + n * n - level_of(d)
}

/// The nilpotent orbit meeting the sheet whose dense class is `d`:
/// induction of all the block partitions together.
pub fn sheet_nilpotent(d: &GLDecompDatum) -> Partition {
    let parts: Vec<Partition> = d.blocks.iter().map(|(_, e)| e.clone()).collect();
    partition::induce(&parts).expect("data have at least one block")
}

/// Induction of an arbitrary (not necessarily nilpotent) orbit: blocks
/// sharing an eigenvalue tag are induced together, distinct tags stay apart.
/// Output is sorted by tag.
pub fn induce_orbit<T: Ord + Clone>(blocks: &[(T, Partition)]) -> Result<Vec<(T, Partition)>> {
    let mut groups: BTreeMap<T, Vec<Partition>> = BTreeMap::new();
    for (tag, e) in blocks {
        if e.is_empty() {
            return Err(Error::InvalidArgument("partitions must have positive size".into()));
        }
        groups.entry(tag.clone()).or_default().push(e.clone());
    }
    groups.into_iter().map(|(t, ps)| Ok((t, partition::induce(&ps)?))).collect()
}
