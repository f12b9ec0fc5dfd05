//! Root data and the characteristic-dependent root-vanishing computations.
//!
//! Roots are stored as integer vectors in a basis of the character lattice
//! and coroots in the dual basis of the cocharacter lattice, so the pairing
//! is the ordinary dot product. An element `y` of the torus Lie algebra is a
//! coordinate vector against the cocharacter basis, and `dα(y)` is the dot
//! product of the root vector with `y`, computed in the field.
//!
//! # File format
//!
//! ```text
//! # comment lines start with '#'
//! LABEL
//! GL2
//! RANK
//! 2
//! ROOTS
//! 1 -1
//! -1 1
//! COROOTS
//! 1 -1
//! -1 1
//! ```
//!
//! Section headers stand alone on their line, integers are separated by
//! whitespace and rows are aligned index-wise between `ROOTS` and `COROOTS`.
//! [`RootDatum::to_text`] writes exactly this layout (single spaces, no
//! comments, trailing newline), so parsing and re-serialising is
//! byte-stable.
//!
//! For PGLₙ the cocharacter lattice is `ℤⁿ / ℤ(1,…,1)`; its basis is the
//! images of `e₁ … e_{n-1}` (the last coordinate is dropped), and the
//! character lattice gets the dual basis `e_i − e_n`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::field::{is_prime, Field, PrimeField, Rationals};
use crate::matrix::{self, Matrix};

/// Zero or a prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Characteristic(u64);

impl Characteristic {
    pub const ZERO: Characteristic = Characteristic(0);

    pub fn new(p: u64) -> Result<Self> {
        if p == 0 || is_prime(p) {
            Ok(Characteristic(p))
        } else {
            Err(Error::InvalidCharacteristic(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    label: String,
    rank: usize,
    roots: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
}

impl RootDatum {
    /// Validates every invariant and names the first one that fails.
    pub fn new(
        label: impl Into<String>,
        rank: usize,
        roots: Vec<Vec<i64>>,
        coroots: Vec<Vec<i64>>,
    ) -> Result<Self> {
        let label = label.into();
        let bad = |invariant, detail: String| Err(Error::InvalidRootDatum { invariant, detail });
        if rank == 0 {
            return bad("positive rank", "rank is 0".into());
        }
        if roots.len() != coroots.len() {
            return bad(
                "roots and coroots paired",
                format!("{} roots but {} coroots", roots.len(), coroots.len()),
            );
        }
        for (i, v) in roots.iter().chain(&coroots).enumerate() {
            if v.len() != rank {
                return bad("vector length equals rank", format!("row {i} has length {}", v.len()));
            }
        }
        for (i, (r, c)) in roots.iter().zip(&coroots).enumerate() {
            let pairing: i64 = r.iter().zip(c).map(|(a, b)| a * b).sum();
            if pairing != 2 {
                return bad("pairing equals 2", format!("<root {i}, coroot {i}> = {pairing}"));
            }
        }
        let set: BTreeSet<&Vec<i64>> = roots.iter().collect();
        if set.len() != roots.len() {
            return bad("no duplicate roots", "a root appears twice".into());
        }
        for (i, r) in roots.iter().enumerate() {
            let neg: Vec<i64> = r.iter().map(|x| -x).collect();
            if !set.contains(&neg) {
                return bad("closed under negation", format!("-root {i} is missing"));
            }
        }
        Ok(RootDatum { label, rank, roots, coroots })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn coroots(&self) -> &[Vec<i64>] {
        &self.coroots
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn pairing(&self, root: usize, coroot: usize) -> i64 {
        self.roots[root].iter().zip(&self.coroots[coroot]).map(|(a, b)| a * b).sum()
    }

    pub fn index_of_root(&self, v: &[i64]) -> Option<usize> {
        self.roots.iter().position(|r| r == v)
    }

    pub fn all_roots(&self) -> BTreeSet<usize> {
        (0..self.roots.len()).collect()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let row = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
        writeln!(out, "LABEL\n{}\nRANK\n{}\nROOTS", self.label, self.rank).unwrap();
        for r in &self.roots {
            writeln!(out, "{}", row(r)).unwrap();
        }
        writeln!(out, "COROOTS").unwrap();
        for c in &self.coroots {
            writeln!(out, "{}", row(c)).unwrap();
        }
        out
    }
}

/// Parses the text format described in the module docs.
pub fn load_root_datum(source: &str) -> Result<RootDatum> {
    #[derive(PartialEq)]
    enum Section {
        None,
        Label,
        Rank,
        Roots,
        Coroots,
    }
    let mut section = Section::None;
    let mut label: Option<String> = None;
    let mut rank: Option<usize> = None;
    let mut roots = Vec::new();
    let mut coroots = Vec::new();
    let mut seen = BTreeSet::new();

    for (idx, raw) in source.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Parse { line: line_no, msg };
        let next = match line {
            "LABEL" => Some(Section::Label),
            "RANK" => Some(Section::Rank),
            "ROOTS" => Some(Section::Roots),
            "COROOTS" => Some(Section::Coroots),
            _ => None,
        };
        if let Some(s) = next {
            if !seen.insert(line.to_string()) {
                return Err(err(format!("duplicate section {line}")));
            }
            section = s;
            continue;
        }
        match section {
            Section::None => return Err(err("content before any section header".into())),
            Section::Label => {
                if label.is_some() {
                    return Err(err("LABEL takes a single line".into()));
                }
                label = Some(line.to_string());
            }
            Section::Rank => {
                if rank.is_some() {
                    return Err(err("RANK takes a single integer".into()));
                }
                rank = Some(line.parse().map_err(|_| err(format!("bad rank {line:?}")))?);
            }
            Section::Roots | Section::Coroots => {
                let row = line
                    .split_whitespace()
                    .map(|t| t.parse::<i64>().map_err(|_| err(format!("bad integer {t:?}"))))
                    .collect::<Result<Vec<_>>>()?;
                if let Some(r) = rank {
                    if row.len() != r {
                        return Err(err(format!("row has {} entries, rank is {r}", row.len())));
                    }
                }
                if section == Section::Roots {
                    roots.push(row);
                } else {
                    coroots.push(row);
                }
            }
        }
    }
    let missing = |s: &str| Error::Parse { line: 0, msg: format!("missing section {s}") };
    let label = label.ok_or_else(|| missing("LABEL"))?;
    let rank = rank.ok_or_else(|| missing("RANK"))?;
    if !seen.contains("ROOTS") {
        return Err(missing("ROOTS"));
    }
    if !seen.contains("COROOTS") {
        return Err(missing("COROOTS"));
    }
    RootDatum::new(label, rank, roots, coroots)
}

/// Ordered pairs `(a, b)`, `a != b`, in the order the type-A builders emit
/// the roots `e_a − e_b`.
fn type_a_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
}

pub fn build_gl(n: usize) -> Result<RootDatum> {
    if n == 0 {
        return Err(Error::RankTooSmall { group: "GL", n, min: 1 });
    }
    let (roots, coroots): (Vec<_>, Vec<_>) = type_a_pairs(n)
        .map(|(a, b)| {
            let mut v = vec![0i64; n];
            v[a] = 1;
            v[b] = -1;
            (v.clone(), v)
        })
        .unzip();
    RootDatum::new(format!("GL{n}"), n, roots, coroots)
}

/// Cocharacter basis: simple coroots `e_i − e_{i+1}`; characters in the
/// dual (fundamental weight) basis.
pub fn build_sl(n: usize) -> Result<RootDatum> {
    if n < 2 {
        return Err(Error::RankTooSmall { group: "SL", n, min: 2 });
    }
    let r = n - 1;
    let (roots, coroots): (Vec<_>, Vec<_>) = type_a_pairs(n)
        .map(|(a, b)| {
            let e = |k: usize, i: usize| i64::from(k == i);
            // <e_a - e_b, e_i - e_{i+1}>
            let root: Vec<i64> =
                (0..r).map(|i| e(a, i) - e(a, i + 1) - e(b, i) + e(b, i + 1)).collect();
            // e_a - e_b as a sum of simple coroots
            let (lo, hi, sign) = if a < b { (a, b, 1) } else { (b, a, -1) };
            let coroot: Vec<i64> = (0..r).map(|i| if lo <= i && i < hi { sign } else { 0 }).collect();
            (root, coroot)
        })
        .unzip();
    RootDatum::new(format!("SL{n}"), r, roots, coroots)
}

pub fn build_pgl(n: usize) -> Result<RootDatum> {
    if n < 2 {
        return Err(Error::RankTooSmall { group: "PGL", n, min: 2 });
    }
    let r = n - 1;
    let last = n - 1;
    let (roots, coroots): (Vec<_>, Vec<_>) = type_a_pairs(n)
        .map(|(a, b)| {
            let mut root = vec![0i64; r];
            if a != last {
                root[a] += 1;
            }
            if b != last {
                root[b] -= 1;
            }
            // image of e_a - e_b with e_n = -(e_1 + ... + e_{n-1})
            let mut coroot = vec![0i64; r];
            let mut put = |k: usize, s: i64| {
                if k == last {
                    coroot.iter_mut().for_each(|c| *c -= s);
                } else {
                    coroot[k] += s;
                }
            };
            put(a, 1);
            put(b, -1);
            (root, coroot)
        })
        .unzip();
    RootDatum::new(format!("PGL{n}"), r, roots, coroots)
}

/// A subsystem `Φ_L` of a root datum.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LeviDescriptor {
    root_indices: BTreeSet<usize>,
    /// Set for Levis built from consecutive blocks of a type-A datum.
    blocks: Option<Vec<usize>>,
}

impl LeviDescriptor {
    pub fn from_indices(datum: &RootDatum, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let root_indices: BTreeSet<usize> = indices.into_iter().collect();
        for &i in &root_indices {
            if i >= datum.num_roots() {
                return Err(Error::InvalidLevi(format!("root index {i} out of range")));
            }
            let neg: Vec<i64> = datum.roots()[i].iter().map(|x| -x).collect();
            let j = datum.index_of_root(&neg).expect("validated datum");
            if !root_indices.contains(&j) {
                return Err(Error::InvalidLevi(format!("root {i} present but its negative {j} is not")));
            }
        }
        Ok(LeviDescriptor { root_indices, blocks: None })
    }

    /// The standard Levi `GL_{n_1} × … × GL_{n_k}` on consecutive coordinates
    /// of a datum from [`build_gl`], [`build_sl`] or [`build_pgl`].
    pub fn type_a(datum: &RootDatum, blocks: &[usize]) -> Result<Self> {
        let n: usize = blocks.iter().sum();
        if blocks.contains(&0) {
            return Err(Error::InvalidLevi("block sizes must be positive".into()));
        }
        if datum.num_roots() != n * n.saturating_sub(1) {
            return Err(Error::InvalidLevi(format!(
                "blocks sum to {n} but the datum has {} roots",
                datum.num_roots()
            )));
        }
        let mut owner = Vec::with_capacity(n);
        for (b, &size) in blocks.iter().enumerate() {
            owner.extend(std::iter::repeat_n(b, size));
        }
        let root_indices = type_a_pairs(n)
            .enumerate()
            .filter(|(_, (a, b))| owner[*a] == owner[*b])
            .map(|(i, _)| i)
            .collect();
        Ok(LeviDescriptor { root_indices, blocks: Some(blocks.to_vec()) })
    }

    pub fn torus() -> Self {
        LeviDescriptor { root_indices: BTreeSet::new(), blocks: None }
    }

    pub fn whole(datum: &RootDatum) -> Self {
        LeviDescriptor { root_indices: datum.all_roots(), blocks: None }
    }

    pub fn root_indices(&self) -> &BTreeSet<usize> {
        &self.root_indices
    }

    pub fn blocks(&self) -> Option<&[usize]> {
        self.blocks.as_deref()
    }
}

/// Linear functionals on the torus Lie algebra whose common zero set is the
/// subspace, read in characteristic `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceDescriptor {
    ambient_rank: usize,
    equations: Vec<Vec<i64>>,
    characteristic: Characteristic,
}

impl SubspaceDescriptor {
    pub fn new(ambient_rank: usize, equations: Vec<Vec<i64>>, p: Characteristic) -> Result<Self> {
        for e in &equations {
            if e.len() != ambient_rank {
                return Err(Error::DimensionMismatch { expected: ambient_rank, got: e.len() });
            }
        }
        Ok(SubspaceDescriptor { ambient_rank, equations, characteristic: p })
    }

    pub fn full(ambient_rank: usize, p: Characteristic) -> Self {
        SubspaceDescriptor { ambient_rank, equations: Vec::new(), characteristic: p }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn equations(&self) -> &[Vec<i64>] {
        &self.equations
    }

    pub fn characteristic(&self) -> Characteristic {
        self.characteristic
    }

    pub fn dimension(&self) -> usize {
        self.ambient_rank - int_rank(self.characteristic, &self.equations, self.ambient_rank)
    }

    /// A basis of the subspace over the prime field (`F_p`, or ℚ scaled to
    /// integers when `p = 0`).
    pub fn basis_mod_p(&self) -> Vec<Vec<i64>> {
        let p = self.characteristic.get();
        let rows = if self.equations.is_empty() {
            vec![vec![0i64; self.ambient_rank]]
        } else {
            self.equations.clone()
        };
        if p == 0 {
            let q = Rationals;
            let m = Matrix::from_i64(&q, &rows);
            matrix::kernel_basis(&q, &m)
                .into_iter()
                .map(|v| {
                    let lcm = v.iter().fold(num_bigint::BigInt::from(1), |acc, x| {
                        num_integer::Integer::lcm(&acc, x.denom())
                    });
                    v.iter()
                        .map(|x| {
                            let scaled = x * num_rational::BigRational::from_integer(lcm.clone());
                            i64::try_from(scaled.to_integer()).expect("small integer basis")
                        })
                        .collect()
                })
                .collect()
        } else {
            let f = PrimeField::new(p).expect("validated characteristic");
            let m = Matrix::from_i64(&f, &rows);
            matrix::kernel_basis(&f, &m)
                .into_iter()
                .map(|v| v.into_iter().map(|x| x as i64).collect())
                .collect()
        }
    }
}

/// Rank of integer row vectors over ℚ (`p = 0`) or `F_p`.
pub fn int_rank(p: Characteristic, rows: &[Vec<i64>], cols: usize) -> usize {
    if rows.is_empty() {
        return 0;
    }
    debug_assert!(rows.iter().all(|r| r.len() == cols));
    match p.get() {
        0 => matrix::rank(&Rationals, &Matrix::from_i64(&Rationals, rows)),
        q => {
            let f = PrimeField::new(q).expect("validated characteristic");
            matrix::rank(&f, &Matrix::from_i64(&f, rows))
        }
    }
}

/// `Φ_y = { α : dα(y) = 0 }` for an explicit `y` with coordinates in `field`.
pub fn phi_y<F: Field>(
    datum: &RootDatum,
    p: Characteristic,
    field: &F,
    y: &[F::Elem],
) -> Result<BTreeSet<usize>> {
    if field.characteristic() != p.get() {
        return Err(Error::CharacteristicMismatch { field: field.characteristic(), requested: p.get() });
    }
    if y.len() != datum.rank() {
        return Err(Error::DimensionMismatch { expected: datum.rank(), got: y.len() });
    }
    Ok(datum
        .roots()
        .iter()
        .enumerate()
        .filter(|(_, r)| {
            let value = r
                .iter()
                .zip(y)
                .fold(field.zero(), |acc, (c, yi)| field.add(&acc, &field.mul(&field.from_i64(*c), yi)));
            field.is_zero(&value)
        })
        .map(|(i, _)| i)
        .collect())
}

/// `𝔷(𝔩)`: the common kernel of `dα` for `α ∈ Φ_L`.
pub fn center_of_levi(datum: &RootDatum, p: Characteristic, levi: &LeviDescriptor) -> SubspaceDescriptor {
    let equations = levi.root_indices().iter().map(|&i| datum.roots()[i].clone()).collect();
    SubspaceDescriptor { ambient_rank: datum.rank(), equations, characteristic: p }
}

/// Roots vanishing identically on the subspace: those whose `dα` lies in the
/// row space of the defining equations over the field.
pub fn generic_phi(datum: &RootDatum, subspace: &SubspaceDescriptor) -> Result<BTreeSet<usize>> {
    if subspace.ambient_rank() != datum.rank() {
        return Err(Error::DimensionMismatch { expected: datum.rank(), got: subspace.ambient_rank() });
    }
    let p = subspace.characteristic();
    let rank = datum.rank();
    let base = int_rank(p, subspace.equations(), rank);
    let mut rows = subspace.equations().to_vec();
    Ok((0..datum.num_roots())
        .filter(|&i| {
            rows.push(datum.roots()[i].clone());
            let r = int_rank(p, &rows, rank);
            rows.pop();
            r == base
        })
        .collect())
}

/// `L` occurs as the connected centraliser of a semisimple element exactly
/// when a generic point of `𝔷(𝔩)` kills no roots outside `Φ_L`.
pub fn is_stabiliser_type(datum: &RootDatum, p: Characteristic, levi: &LeviDescriptor) -> bool {
    let z = center_of_levi(datum, p, levi);
    generic_phi(datum, &z).expect("center has the datum's rank") == *levi.root_indices()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::GaloisField;

    fn p(v: u64) -> Characteristic {
        Characteristic::new(v).unwrap()
    }

    #[test]
    fn gl_shapes() {
        let g1 = build_gl(1).unwrap();
        assert_eq!((g1.rank(), g1.num_roots()), (1, 0));
        let g2 = build_gl(2).unwrap();
        assert_eq!(g2.roots(), &[vec![1, -1], vec![-1, 1]]);
        assert_eq!(g2.coroots(), g2.roots());
        let g3 = build_gl(3).unwrap();
        assert_eq!(g3.num_roots(), 6);
        assert!((0..6).all(|i| g3.pairing(i, i) == 2));
    }

    #[test]
    fn sl_and_pgl_shapes() {
        let s2 = build_sl(2).unwrap();
        assert_eq!(s2.rank(), 1);
        assert_eq!(s2.roots()[0], vec![2]);
        assert_eq!(s2.coroots()[0], vec![1]);
        let pg2 = build_pgl(2).unwrap();
        assert_eq!(pg2.rank(), 1);
        assert_eq!(pg2.roots()[0], vec![1]);
        assert_eq!(pg2.coroots()[0], vec![2]);
        let pg3 = build_pgl(3).unwrap();
        assert_eq!((pg3.rank(), pg3.num_roots()), (2, 6));
        assert!(build_sl(1).is_err());
        assert!(build_pgl(1).is_err());
        assert!(build_gl(0).is_err());
        for n in 2..6 {
            build_sl(n).unwrap();
            build_pgl(n).unwrap();
        }
    }

    #[test]
    fn text_round_trip() {
        let g2 = build_gl(2).unwrap();
        let text = g2.to_text();
        let back = load_root_datum(&text).unwrap();
        assert_eq!(back, g2);
        assert_eq!(back.to_text(), text);
    }

    #[test]
    fn loader_names_failing_invariant() {
        let bad_pairing = "LABEL\nX\nRANK\n1\nROOTS\n1\n-1\nCOROOTS\n3\n-3\n";
        match load_root_datum(bad_pairing) {
            Err(Error::InvalidRootDatum { invariant, .. }) => assert_eq!(invariant, "pairing equals 2"),
            other => panic!("{other:?}"),
        }
        let missing_neg = "# only a positive root\nLABEL\nX\nRANK\n1\nROOTS\n2\nCOROOTS\n1\n";
        match load_root_datum(missing_neg) {
            Err(Error::InvalidRootDatum { invariant, .. }) => assert_eq!(invariant, "closed under negation"),
            other => panic!("{other:?}"),
        }
        assert!(matches!(load_root_datum("LABEL\nX\nRANK\nfoo\n"), Err(Error::Parse { line: 4, .. })));
        assert!(matches!(load_root_datum("1 2\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn phi_y_examples() {
        let pg2 = build_pgl(2).unwrap();
        let f2 = PrimeField::new(2).unwrap();
        assert!(phi_y(&pg2, p(2), &f2, &[1]).unwrap().is_empty());

        let s2 = build_sl(2).unwrap();
        assert_eq!(phi_y(&s2, p(2), &f2, &[1]).unwrap(), s2.all_roots());

        let g3 = build_gl(3).unwrap();
        let q = Rationals;
        let zero = vec![q.zero(); 3];
        assert_eq!(phi_y(&g3, p(0), &q, &zero).unwrap(), g3.all_roots());
        assert!(phi_y(&g3, p(0), &q, &zero[..2]).is_err());
        assert!(phi_y(&g3, p(2), &q, &zero).is_err());
    }

    #[test]
    fn center_dimensions() {
        let g3 = build_gl(3).unwrap();
        let l = LeviDescriptor::type_a(&g3, &[2, 1]).unwrap();
        assert_eq!(center_of_levi(&g3, p(0), &l).dimension(), 2);
        let t = LeviDescriptor::torus();
        assert_eq!(center_of_levi(&g3, p(0), &t).dimension(), 3);
        let s2 = build_sl(2).unwrap();
        assert_eq!(center_of_levi(&s2, p(2), &t).dimension(), 1);
        assert_eq!(center_of_levi(&s2, p(2), &LeviDescriptor::whole(&s2)).dimension(), 1);
        assert_eq!(center_of_levi(&s2, p(3), &LeviDescriptor::whole(&s2)).dimension(), 0);
    }

    #[test]
    fn generic_phi_examples() {
        let s2 = build_sl(2).unwrap();
        let full2 = SubspaceDescriptor::full(1, p(2));
        assert_eq!(generic_phi(&s2, &full2).unwrap(), s2.all_roots());
        let full3 = SubspaceDescriptor::full(1, p(3));
        assert!(generic_phi(&s2, &full3).unwrap().is_empty());
        let g4 = build_gl(4).unwrap();
        let z = center_of_levi(&g4, p(5), &LeviDescriptor::whole(&g4));
        assert_eq!(generic_phi(&g4, &z).unwrap(), g4.all_roots());
    }

    #[test]
    fn stabiliser_type_examples() {
        let s2 = build_sl(2).unwrap();
        assert!(!is_stabiliser_type(&s2, p(2), &LeviDescriptor::torus()));
        assert!(is_stabiliser_type(&s2, p(3), &LeviDescriptor::torus()));
        assert!(is_stabiliser_type(&s2, p(2), &LeviDescriptor::whole(&s2)));
        let pg2 = build_pgl(2).unwrap();
        assert!(is_stabiliser_type(&pg2, p(2), &LeviDescriptor::torus()));
    }

    #[test]
    fn levi_validation() {
        let g3 = build_gl(3).unwrap();
        assert!(LeviDescriptor::from_indices(&g3, [0]).is_err());
        assert!(LeviDescriptor::from_indices(&g3, [99]).is_err());
        let l = LeviDescriptor::type_a(&g3, &[2, 1]).unwrap();
        assert_eq!(l.root_indices().len(), 2);
        let again = LeviDescriptor::from_indices(&g3, l.root_indices().iter().copied()).unwrap();
        assert_eq!(again.root_indices(), l.root_indices());
        assert!(LeviDescriptor::type_a(&g3, &[2, 2]).is_err());
    }

    #[test]
    fn subspace_basis_lies_in_subspace() {
        let g4 = build_gl(4).unwrap();
        for ch in [0, 2, 3] {
            let l = LeviDescriptor::type_a(&g4, &[2, 2]).unwrap();
            let z = center_of_levi(&g4, p(ch), &l);
            let basis = z.basis_mod_p();
            assert_eq!(basis.len(), z.dimension());
            for b in &basis {
                for e in z.equations() {
                    let v: i64 = e.iter().zip(b).map(|(a, c)| a * c).sum();
                    if ch == 0 {
                        assert_eq!(v, 0);
                    } else {
                        assert_eq!(v.rem_euclid(ch as i64), 0);
                    }
                }
            }
        }
    }

    #[test]
    fn phi_y_over_extension_field() {
        let s3 = build_sl(3).unwrap();
        let f8 = GaloisField::new(2, 3).unwrap();
        let y = vec![f8.generator(), f8.one()];
        let phi = phi_y(&s3, p(2), &f8, &y).unwrap();
        assert!(phi.is_empty());
    }
}
