//! The PGL₂ micro-model: centraliser versus stabiliser dimensions of a few
//! representatives of `𝔭𝔤𝔩₂` over `F_{p^k}`.
//!
//! Centraliser dimensions come from `ker(ad x)` in the structure-constant
//! algebra. Stabiliser dimensions use a shift sweep: `g ∈ GL₂` fixes `π(X)`
//! exactly when `g X g⁻¹ = X + μ I` for some `μ`, so for each `μ ∈ F_{p^k}`
//! the linear system `g X = (X + μ I) g` is solved and, when its solution
//! space contains an invertible matrix, contributes `dim − 1` (scalars die in
//! PGL₂). The maximum over `μ` is reported. The sweep only visits shifts in
//! `F_{p^k}`; raising `k` shows whether the answer is stable.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, FiniteField, GaloisField};
use crate::matrix::{self, Matrix};

use super::lie::{centralizer_dim_lie, mat2_mul, pgl2_algebra, pgl2_coords, Mat2};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MicroRow {
    pub element: String,
    pub centraliser_dim: usize,
    pub stabiliser_dim: usize,
    pub nilpotent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MicroSummary {
    /// Centraliser dimensions of `0`, `π(E₁₁)`, `π(E₁₂)`.
    pub centraliser_zero: usize,
    pub centraliser_e11: usize,
    pub centraliser_e12: usize,
    pub stabiliser_e11: usize,
    pub stabiliser_e12: usize,
    /// Some representative has centraliser dimension 1.
    pub centraliser_level_1_nonempty: bool,
    /// Some nilpotent representative has centraliser dimension 1.
    pub centraliser_level_1_has_nilpotent: bool,
    /// Centraliser and stabiliser dimensions agree on every row.
    pub all_dimensions_agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MicroReport {
    pub p: u64,
    pub k: usize,
    /// Non-leading coefficients of the defining polynomial, constant first.
    pub modulus: Vec<u64>,
    /// `p ≠ 2`: the non-degenerate comparison case.
    pub control: bool,
    pub rows: Vec<MicroRow>,
    pub summary: MicroSummary,
}

/// Solution space of `g X = (X + μ I) g` as 2×2 matrices.
fn shifted_commutant(f: &GaloisField, x: &Mat2<Vec<u64>>, mu: &Vec<u64>) -> Vec<Mat2<Vec<u64>>> {
    let shifted: Mat2<Vec<u64>> = [f.add(&x[0], mu), x[1].clone(), x[2].clone(), f.add(&x[3], mu)];
    // column c of the 4×4 system is the image of the elementary matrix E_c
    let cols: Vec<Mat2<Vec<u64>>> = (0..4)
        .map(|c| {
            let e: Mat2<Vec<u64>> = std::array::from_fn(|k| if k == c { f.one() } else { f.zero() });
            let lhs = mat2_mul(f, &e, x);
            let rhs = mat2_mul(f, &shifted, &e);
            std::array::from_fn(|k| f.sub(&lhs[k], &rhs[k]))
        })
        .collect();
    let system = Matrix::from_fn(4, 4, |r, c| cols[c][r].clone());
    matrix::kernel_basis(f, &system)
        .into_iter()
        .map(|v| std::array::from_fn(|k| v[k].clone()))
        .collect()
}

fn det2(f: &GaloisField, g: &Mat2<Vec<u64>>) -> Vec<u64> {
    f.sub(&f.mul(&g[0], &g[3]), &f.mul(&g[1], &g[2]))
}

/// Whether `det` restricted to the span of `basis` is a non-zero quadratic
/// form, i.e. the span meets `GL₂` over the algebraic closure.
fn span_has_invertible(f: &GaloisField, basis: &[Mat2<Vec<u64>>]) -> bool {
    let sum = |a: &Mat2<Vec<u64>>, b: &Mat2<Vec<u64>>| -> Mat2<Vec<u64>> {
        std::array::from_fn(|k| f.add(&a[k], &b[k]))
    };
    for (i, bi) in basis.iter().enumerate() {
        let di = det2(f, bi);
        if !f.is_zero(&di) {
            return true;
        }
        for bj in &basis[i + 1..] {
            let cross = f.sub(&f.sub(&det2(f, &sum(bi, bj)), &di), &det2(f, bj));
            if !f.is_zero(&cross) {
                return true;
            }
        }
    }
    false
}

fn stabiliser_dim(f: &GaloisField, x: &Mat2<Vec<u64>>) -> usize {
    f.elements()
        .iter()
        .filter_map(|mu| {
            let basis = shifted_commutant(f, x, mu);
            (!basis.is_empty() && span_has_invertible(f, &basis)).then(|| basis.len() - 1)
        })
        .max()
        .expect("mu = 0 always admits the identity")
}

/// `π(X)` is nilpotent iff `X − cI` is nilpotent for some `c`; for 2×2 that
/// `c` is the double root of the characteristic polynomial, which lies in
/// `F_{p^k}` (square roots exist in characteristic 2).
fn is_nilpotent_mod_scalars(f: &GaloisField, x: &Mat2<Vec<u64>>) -> bool {
    f.elements().iter().any(|c| {
        let y: Mat2<Vec<u64>> = [f.sub(&x[0], c), x[1].clone(), x[2].clone(), f.sub(&x[3], c)];
        mat2_mul(f, &y, &y).iter().all(|e| f.is_zero(e))
    })
}

pub fn pgl2_micro(p: u64, k: usize) -> Result<MicroReport> {
    if !(1..=4).contains(&k) {
        return Err(Error::InvalidArgument(format!("extension degree k must be in 1..=4, got {k}")));
    }
    let f = GaloisField::new(p, k)?;
    let alg = pgl2_algebra(f.clone())?;
    let o = || f.zero();
    let i = || f.one();

    let mut reps: Vec<(String, Mat2<Vec<u64>>)> = vec![
        ("0".into(), [o(), o(), o(), o()]),
        ("pi(E11)".into(), [i(), o(), o(), o()]),
        ("pi(E12)".into(), [o(), i(), o(), o()]),
    ];
    for lambda in f.elements() {
        reps.push((format!("pi(diag(1,{}))", f.render(&lambda)), [i(), o(), o(), lambda]));
    }

    let rows = reps
        .iter()
        .map(|(name, x)| {
            Ok(MicroRow {
                element: name.clone(),
                centraliser_dim: centralizer_dim_lie(&alg, &pgl2_coords(&f, x))?,
                stabiliser_dim: stabiliser_dim(&f, x),
                nilpotent: is_nilpotent_mod_scalars(&f, x),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let summary = MicroSummary {
        centraliser_zero: rows[0].centraliser_dim,
        centraliser_e11: rows[1].centraliser_dim,
        centraliser_e12: rows[2].centraliser_dim,
        stabiliser_e11: rows[1].stabiliser_dim,
        stabiliser_e12: rows[2].stabiliser_dim,
        centraliser_level_1_nonempty: rows.iter().any(|r| r.centraliser_dim == 1),
        centraliser_level_1_has_nilpotent: rows.iter().any(|r| r.nilpotent && r.centraliser_dim == 1),
        all_dimensions_agree: rows.iter().all(|r| r.centraliser_dim == r.stabiliser_dim),
    };
    Ok(MicroReport { p, k, modulus: f.modulus().to_vec(), control: p != 2, rows, summary })
}
