//! Dense matrices over an exact [`Field`] and the handful of
//! elimination-based routines everything else is built on.

use crate::field::Field;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<E>>, cols: usize) -> Self {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        Matrix { rows: nrows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<T: Clone>(&self, f: impl Fn(&E) -> T) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

impl<E: Clone> Matrix<E> {
    pub fn zeros<F: Field<Elem = E>>(field: &F, rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| field.zero())
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { field.one() } else { field.zero() })
    }

    pub fn from_i64<F: Field<Elem = E>>(field: &F, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Matrix::from_fn(rows.len(), cols, |i, j| field.from_i64(rows[i][j]))
    }
}

pub fn mul<F: Field>(field: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!(a.cols, b.rows, "incompatible shapes");
    let mut out = Matrix::zeros(field, a.rows, b.cols);
    for i in 0..a.rows {
        for k in 0..a.cols {
            let aik = a.get(i, k);
            if field.is_zero(aik) {
                continue;
            }
            for j in 0..b.cols {
                let v = field.add(out.get(i, j), &field.mul(aik, b.get(k, j)));
                out.set(i, j, v);
            }
        }
    }
    out
}

pub fn add<F: Field>(field: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols));
    Matrix::from_fn(a.rows, a.cols, |i, j| field.add(a.get(i, j), b.get(i, j)))
}

pub fn sub<F: Field>(field: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols));
    Matrix::from_fn(a.rows, a.cols, |i, j| field.sub(a.get(i, j), b.get(i, j)))
}

/// `A - tI`.
pub fn shift<F: Field>(field: &F, a: &Matrix<F::Elem>, t: &F::Elem) -> Matrix<F::Elem> {
    let mut out = a.clone();
    for i in 0..a.rows.min(a.cols) {
        out.set(i, i, field.sub(a.get(i, i), t));
    }
    out
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn row_reduce<F: Field>(field: &F, m: &mut Matrix<F::Elem>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !field.is_zero(m.get(i, c))) else {
            continue;
        };
        if p != r {
            for j in 0..m.cols {
                m.data.swap(p * m.cols + j, r * m.cols + j);
            }
        }
        let inv = field.inv(m.get(r, c)).expect("pivot is non-zero");
        for j in c..m.cols {
            let v = field.mul(m.get(r, j), &inv);
            m.set(r, j, v);
        }
        for i in 0..m.rows {
            if i == r || field.is_zero(m.get(i, c)) {
                continue;
            }
            let factor = m.get(i, c).clone();
            for j in c..m.cols {
                let v = field.sub(m.get(i, j), &field.mul(&factor, m.get(r, j)));
                m.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    let mut work = m.clone();
    row_reduce(field, &mut work).len()
}

/// A basis of `{ v : M v = 0 }`.
pub fn kernel_basis<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let mut work = m.clone();
    let pivots = row_reduce(field, &mut work);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![field.zero(); m.cols];
            v[f] = field.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = field.neg(work.get(r, f));
            }
            v
        })
        .collect()
}

pub fn determinant<F: Field>(field: &F, m: &Matrix<F::Elem>) -> F::Elem {
    assert!(m.is_square());
    let n = m.rows;
    let mut work = m.clone();
    let mut det = field.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !field.is_zero(work.get(i, c))) else {
            return field.zero();
        };
        if p != c {
            for j in 0..n {
                work.data.swap(p * n + j, c * n + j);
            }
            det = field.neg(&det);
        }
        let pivot = work.get(c, c).clone();
        det = field.mul(&det, &pivot);
        let inv = field.inv(&pivot).expect("non-zero pivot");
        for i in c + 1..n {
            if field.is_zero(work.get(i, c)) {
                continue;
            }
            let factor = field.mul(work.get(i, c), &inv);
            for j in c..n {
                let v = field.sub(work.get(i, j), &field.mul(&factor, work.get(c, j)));
                work.set(i, j, v);
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn rank_depends_on_characteristic() {
        let rows = vec![vec![2, 0], vec![0, 3]];
        assert_eq!(rank(&Rationals, &Matrix::from_i64(&Rationals, &rows)), 2);
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(rank(&f2, &Matrix::from_i64(&f2, &rows)), 1);
        let f3 = PrimeField::new(3).unwrap();
        assert_eq!(rank(&f3, &Matrix::from_i64(&f3, &rows)), 1);
    }

    #[test]
    fn kernel_vectors_are_killed() {
        let q = Rationals;
        let m = Matrix::from_i64(&q, &[vec![1, 2, 3, 4], vec![2, 4, 6, 8], vec![0, 1, 1, 0]]);
        let ker = kernel_basis(&q, &m);
        assert_eq!(ker.len(), 2);
        for v in ker {
            let col = Matrix::from_fn(4, 1, |i, _| v[i].clone());
            let prod = mul(&q, &m, &col);
            assert!((0..3).all(|i| q.is_zero(prod.get(i, 0))));
        }
    }

    #[test]
    fn determinant_small() {
        let q = Rationals;
        let m = Matrix::from_i64(&q, &[vec![0, 1, 2], vec![1, 0, 3], vec![4, -3, 8]]);
        assert_eq!(determinant(&q, &m), q.from_i64(-2));
    }
}
