use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

use super::closure::closure_leq;
use super::datum::{class_dim, enumerate_classes, level_of, sheet_nilpotent, GLDecompDatum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Group {
    #[serde(rename = "GL")]
    Gl,
    #[serde(rename = "PGL")]
    Pgl,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Group::Gl => "GL",
            Group::Pgl => "PGL",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    #[serde(rename = "blocks")]
    pub datum: GLDecompDatum,
    pub dim: usize,
    pub level: usize,
    #[serde(rename = "sheet_dense")]
    pub is_sheet_dense: bool,
    #[serde(rename = "isolated")]
    pub is_isolated: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sheet_nilpotent: Option<Partition>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseDiagram {
    pub group: Group,
    pub n: usize,
    pub nodes: Vec<ClassInfo>,
    /// `(lower, upper)` node indices.
    pub covers: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelSet {
    pub level: usize,
    pub classes: Vec<ClassInfo>,
}

impl LevelSet {
    /// One entry per sheet of this level set.
    pub fn dense_classes(&self) -> impl Iterator<Item = &ClassInfo> {
        self.classes.iter().filter(|c| c.is_sheet_dense)
    }
}

/// All classes of 𝔤𝔩ₙ with their closure relation, computed once.
#[derive(Clone, Debug)]
pub struct ClassPoset {
    n: usize,
    infos: Vec<ClassInfo>,
    /// `leq[i]` is the bitset of `j` with `i ⪯ j`.
    leq: Vec<Vec<u64>>,
}

fn bit(set: &[u64], j: usize) -> bool {
    set[j / 64] >> (j % 64) & 1 == 1
}

impl ClassPoset {
    pub fn build(n: usize) -> Self {
        let mut data = enumerate_classes(n);
        // descending dimension, then descending canonical datum
        data.sort_by(|a, b| class_dim(b).cmp(&class_dim(a)).then_with(|| b.cmp(a)));
        let words = data.len().div_ceil(64);
        let leq: Vec<Vec<u64>> = data
            .par_iter()
            .map(|a| {
                let mut row = vec![0u64; words];
                for (j, b) in data.iter().enumerate() {
                    if closure_leq(a, b).expect("same n") {
                        row[j / 64] |= 1 << (j % 64);
                    }
                }
                row
            })
            .collect();

        let levels: Vec<usize> = data.iter().map(level_of).collect();
        let infos = data
            .iter()
            .enumerate()
            .map(|(i, d)| {
                let same_level = |j: usize| j != i && levels[j] == levels[i];
                let maximal = !(0..data.len()).any(|j| same_level(j) && bit(&leq[i], j));
                let minimal = !(0..data.len()).any(|j| same_level(j) && bit(&leq[j], i));
                ClassInfo {
                    datum: d.clone(),
                    dim: class_dim(d),
                    level: levels[i],
                    is_sheet_dense: maximal,
                    is_isolated: maximal && minimal,
                    sheet_nilpotent: maximal.then(|| sheet_nilpotent(d)),
                }
            })
            .collect();
        ClassPoset { n, infos, leq }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[ClassInfo] {
        &self.infos
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        bit(&self.leq[i], j)
    }

    pub fn index_of(&self, d: &GLDecompDatum) -> Option<usize> {
        self.infos.iter().position(|c| &c.datum == d)
    }

    /// Transitive reduction of `⪯`.
    pub fn hasse(&self) -> HasseDiagram {
        let m = self.infos.len();
        let words = m.div_ceil(64);
        // geq[j] = { i : i ⪯ j }
        let mut geq = vec![vec![0u64; words]; m];
        for (j, down) in geq.iter_mut().enumerate() {
            for i in (0..m).filter(|&i| self.leq(i, j)) {
                down[i / 64] |= 1 << (i % 64);
            }
        }
        let mut covers: Vec<(usize, usize)> = (0..m)
            .into_par_iter()
            .flat_map_iter(|i| {
                let geq = &geq;
                (0..m).filter_map(move |j| {
                    if i == j || !self.leq(i, j) {
                        return None;
                    }
                    // strictly between: up(i) ∩ down(j) \ {i, j}
                    let between = (0..words).any(|w| {
                        let mut x = self.leq[i][w] & geq[j][w];
                        if i / 64 == w {
                            x &= !(1 << (i % 64));
                        }
                        if j / 64 == w {
                            x &= !(1 << (j % 64));
                        }
                        x != 0
                    });
                    (!between).then_some((i, j))
                })
            })
            .collect();
        covers.sort_unstable();
        HasseDiagram { group: Group::Gl, n: self.n, nodes: self.infos.clone(), covers }
    }

    /// Classes grouped by level, ascending.
    pub fn level_sets(&self) -> Vec<LevelSet> {
        let mut by_level: BTreeMap<usize, Vec<ClassInfo>> = BTreeMap::new();
        for c in &self.infos {
            by_level.entry(c.level).or_default().push(c.clone());
        }
        by_level.into_iter().map(|(level, classes)| LevelSet { level, classes }).collect()
    }
}

pub fn hasse(n: usize) -> HasseDiagram {
    ClassPoset::build(n).hasse()
}

pub fn sheets(n: usize) -> Vec<LevelSet> {
    ClassPoset::build(n).level_sets()
}

/// Carries a GLₙ diagram to PGLₙ along `GLₙ → PGLₙ`: the order is unchanged
/// and the centre contributes one dimension less to every class and every
/// stabiliser.
pub fn pgl_transport(diagram: &HasseDiagram) -> Result<HasseDiagram> {
    if diagram.group != Group::Gl {
        return Err(Error::InvalidArgument("pgl_transport expects a GL diagram".into()));
    }
    let nodes = diagram
        .nodes
        .iter()
        .map(|c| ClassInfo { dim: c.dim - 1, level: c.level - 1, ..c.clone() })
        .collect();
    Ok(HasseDiagram { group: Group::Pgl, n: diagram.n, nodes, covers: diagram.covers.clone() })
}

impl HasseDiagram {
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "digraph \"{}{}\" {{", self.group, self.n).unwrap();
        writeln!(out, "  rankdir=BT;").unwrap();
        writeln!(out, "  node [shape=box];").unwrap();
        for (i, c) in self.nodes.iter().enumerate() {
            writeln!(out, "  n{i} [label=\"{} | dim {}\"];", c.datum.label(), c.dim).unwrap();
        }
        let mut by_dim: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, c) in self.nodes.iter().enumerate() {
            by_dim.entry(c.dim).or_default().push(i);
        }
        for ids in by_dim.values() {
            let names: Vec<String> = ids.iter().map(|i| format!("n{i};")).collect();
            writeln!(out, "  {{ rank=same; {} }}", names.join(" ")).unwrap();
        }
        for (lo, hi) in &self.covers {
            writeln!(out, "  n{lo} -> n{hi};").unwrap();
        }
        out.push_str("}\n");
        out
    }

    pub fn minimum(&self) -> Option<&ClassInfo> {
        self.nodes.iter().min_by_key(|c| c.dim)
    }
}
