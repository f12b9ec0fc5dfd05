//! Lie algebras given by structure constants, and centralisers `ker(ad x)`.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{self, Matrix};

#[derive(Clone, Debug)]
pub struct StructureConstantAlgebra<F: Field> {
    field: F,
    dim: usize,
    /// `table[i][j][k]` is the coefficient of `b_k` in `[b_i, b_j]`.
    table: Vec<Vec<Vec<F::Elem>>>,
}

impl<F: Field> StructureConstantAlgebra<F> {
    /// Rejects tables that are not alternating or fail the Jacobi identity.
    pub fn new(field: F, table: Vec<Vec<Vec<F::Elem>>>) -> Result<Self> {
        let dim = table.len();
        if table.iter().any(|row| row.len() != dim || row.iter().any(|v| v.len() != dim)) {
            return Err(Error::InvalidAlgebra("table must be dim × dim × dim".into()));
        }
        let alg = StructureConstantAlgebra { field, dim, table };
        let f = &alg.field;
        for i in 0..dim {
            if alg.table[i][i].iter().any(|c| !f.is_zero(c)) {
                return Err(Error::InvalidAlgebra(format!("[b{i}, b{i}] != 0")));
            }
            for j in 0..dim {
                for k in 0..dim {
                    if f.add(&alg.table[i][j][k], &alg.table[j][i][k]) != f.zero() {
                        return Err(Error::InvalidAlgebra(format!("[b{i}, b{j}] != -[b{j}, b{i}]")));
                    }
                }
            }
        }
        for i in 0..dim {
            for j in 0..dim {
                for l in 0..dim {
                    let (bi, bj, bl) = (alg.basis(i), alg.basis(j), alg.basis(l));
                    let a = alg.bracket(&alg.bracket(&bi, &bj), &bl);
                    let b = alg.bracket(&alg.bracket(&bj, &bl), &bi);
                    let c = alg.bracket(&alg.bracket(&bl, &bi), &bj);
                    if a.iter().zip(&b).zip(&c).any(|((x, y), z)| !f.is_zero(&f.add(&f.add(x, y), z))) {
                        return Err(Error::InvalidAlgebra(format!("Jacobi fails on (b{i}, b{j}, b{l})")));
                    }
                }
            }
        }
        Ok(alg)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self, i: usize) -> Vec<F::Elem> {
        (0..self.dim).map(|k| if k == i { self.field.one() } else { self.field.zero() }).collect()
    }

    pub fn bracket(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if f.is_zero(yj) {
                    continue;
                }
                let s = f.mul(xi, yj);
                for (k, o) in out.iter_mut().enumerate() {
                    *o = f.add(o, &f.mul(&s, &self.table[i][j][k]));
                }
            }
        }
        out
    }

    /// Matrix of `ad x` in the structure basis (column `j` is `[x, b_j]`).
    pub fn ad(&self, x: &[F::Elem]) -> Matrix<F::Elem> {
        let cols: Vec<Vec<F::Elem>> = (0..self.dim).map(|j| self.bracket(x, &self.basis(j))).collect();
        Matrix::from_fn(self.dim, self.dim, |i, j| cols[j][i].clone())
    }
}

pub fn centralizer_dim_lie<F: Field>(alg: &StructureConstantAlgebra<F>, x: &[F::Elem]) -> Result<usize> {
    if x.len() != alg.dim() {
        return Err(Error::DimensionMismatch { expected: alg.dim(), got: x.len() });
    }
    Ok(alg.dim() - matrix::rank(alg.field(), &alg.ad(x)))
}

/// 2×2 matrices as `[a, b, c, d]` = `[[a, b], [c, d]]`.
pub type Mat2<E> = [E; 4];

pub fn mat2_mul<F: Field>(f: &F, x: &Mat2<F::Elem>, y: &Mat2<F::Elem>) -> Mat2<F::Elem> {
    let e = |i: usize, j: usize| {
        f.add(&f.mul(&x[2 * i], &y[j]), &f.mul(&x[2 * i + 1], &y[2 + j]))
    };
    [e(0, 0), e(0, 1), e(1, 0), e(1, 1)]
}

/// `𝔭𝔤𝔩₂ = 𝔤𝔩₂ / scalars` with basis the images of `E₁₁, E₁₂, E₂₁`.
pub fn pgl2_algebra<F: Field>(field: F) -> Result<StructureConstantAlgebra<F>> {
    let f = &field;
    let lifts: Vec<Mat2<F::Elem>> = vec![
        [f.one(), f.zero(), f.zero(), f.zero()],
        [f.zero(), f.one(), f.zero(), f.zero()],
        [f.zero(), f.zero(), f.one(), f.zero()],
    ];
    let table = lifts
        .iter()
        .map(|x| {
            lifts
                .iter()
                .map(|y| {
                    let xy = mat2_mul(f, x, y);
                    let yx = mat2_mul(f, y, x);
                    let c: Mat2<F::Elem> = std::array::from_fn(|k| f.sub(&xy[k], &yx[k]));
                    pgl2_coords(f, &c)
                })
                .collect()
        })
        .collect();
    StructureConstantAlgebra::new(field, table)
}

/// Coordinates of `π(X)`: `X ≡ (a − d) E₁₁ + b E₁₂ + c E₂₁` modulo scalars.
pub fn pgl2_coords<F: Field>(f: &F, x: &Mat2<F::Elem>) -> Vec<F::Elem> {
    vec![f.sub(&x[0], &x[3]), x[1].clone(), x[2].clone()]
}
