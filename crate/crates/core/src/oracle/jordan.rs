//! Jordan types from rank sequences, and the rank criterion for orbit
//! closures in 𝔤𝔩ₙ.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::engine::GLDecompDatum;
use crate::error::{Error, Result};
use crate::field::{Field, FiniteField, GaloisField, PrimeField, Rationals};
use crate::matrix::{self, Matrix};
use crate::partition::Partition;

/// Eigenvalue → Jordan partition, sorted by eigenvalue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanType<E> {
    spectrum: Vec<(E, Partition)>,
}

impl<E: Clone + Ord> JordanType<E> {
    pub fn new(mut spectrum: Vec<(E, Partition)>) -> Result<Self> {
        spectrum.sort_by(|a, b| a.0.cmp(&b.0));
        if spectrum.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::BadEigenvalues("repeated eigenvalue key".into()));
        }
        Ok(JordanType { spectrum })
    }

    pub fn spectrum(&self) -> &[(E, Partition)] {
        &self.spectrum
    }

    pub fn size(&self) -> usize {
        self.spectrum.iter().map(|(_, p)| p.size()).sum()
    }

    pub fn get(&self, eigenvalue: &E) -> Option<&Partition> {
        self.spectrum.iter().find(|(e, _)| e == eigenvalue).map(|(_, p)| p)
    }
}

/// Fields in which the oracle can locate eigenvalues.
pub trait SpectrumField: Field
where
    Self::Elem: Ord,
{
    /// The distinct eigenvalues of `a` lying in the field.
    fn eigenvalues(&self, a: &Matrix<Self::Elem>) -> Result<Vec<Self::Elem>>;
}

fn finite_field_eigenvalues<F: FiniteField>(field: &F, a: &Matrix<F::Elem>) -> Vec<F::Elem> {
    let n = a.rows();
    field
        .elements()
        .into_iter()
        .filter(|t| matrix::rank(field, &matrix::shift(field, a, t)) < n)
        .collect()
}

impl SpectrumField for PrimeField {
    fn eigenvalues(&self, a: &Matrix<u64>) -> Result<Vec<u64>> {
        Ok(finite_field_eigenvalues(self, a))
    }
}

impl SpectrumField for GaloisField {
    fn eigenvalues(&self, a: &Matrix<Vec<u64>>) -> Result<Vec<Vec<u64>>> {
        let mut e = finite_field_eigenvalues(self, a);
        e.sort();
        Ok(e)
    }
}

impl SpectrumField for Rationals {
    fn eigenvalues(&self, a: &Matrix<BigRational>) -> Result<Vec<BigRational>> {
        let poly = characteristic_polynomial(a);
        rational_roots(&poly)
    }
}

/// Coefficients `c_0 … c_n` (monic) of `det(tI − A)`, by Faddeev–LeVerrier.
pub fn characteristic_polynomial(a: &Matrix<BigRational>) -> Vec<BigRational> {
    let q = Rationals;
    let n = a.rows();
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let mut m = Matrix::zeros(&q, n, n);
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        m = matrix::mul(&q, a, &m);
        for i in 0..n {
            let v = m.get(i, i) + &coeffs[n - k + 1];
            m.set(i, i, v);
        }
        let am = matrix::mul(&q, a, &m);
        let trace: BigRational = (0..n).map(|i| am.get(i, i).clone()).sum();
        coeffs[n - k] = -trace / BigRational::from_integer(BigInt::from(k));
    }
    coeffs
}

const TRIAL_DIVISION_LIMIT: u64 = 1 << 20;

/// Prime factorisation by trial division; fails when a cofactor beyond the
/// trial bound is too large to be certified prime that way.
fn factor(mut v: BigInt) -> Result<Vec<(BigInt, u32)>> {
    v = v.abs();
    let mut out = Vec::new();
    let mut d = 2u64;
    while d < TRIAL_DIVISION_LIMIT {
        let bd = BigInt::from(d);
        if &bd * &bd > v {
            break;
        }
        let mut e = 0;
        while (&v % &bd).is_zero() {
            v /= &bd;
            e += 1;
        }
        if e > 0 {
            out.push((bd, e));
        }
        d += 1;
    }
    if v > BigInt::one() {
        let limit = BigInt::from(TRIAL_DIVISION_LIMIT);
        if v >= &limit * &limit {
            return Err(Error::SpectrumNotInField(format!(
                "rational root search needs to factor {v}, beyond the trial-division bound"
            )));
        }
        out.push((v, 1));
    }
    Ok(out)
}

fn divisors(v: &BigInt) -> Result<Vec<BigInt>> {
    let mut divs = vec![BigInt::one()];
    for (p, e) in factor(v.clone())? {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    Ok(divs)
}

/// Distinct rational roots, by the rational root theorem.
pub fn rational_roots(poly: &[BigRational]) -> Result<Vec<BigRational>> {
    let lcm = poly.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> =
        poly.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    while ints.last().is_some_and(Zero::is_zero) {
        ints.pop();
    }
    let mut roots = Vec::new();
    if ints.iter().all(Zero::is_zero) {
        return Ok(roots);
    }
    if ints[0].is_zero() {
        roots.push(BigRational::zero());
        let first = ints.iter().position(|c| !c.is_zero()).unwrap();
        ints.drain(..first);
    }
    if ints.len() > 1 {
        let eval = |t: &BigRational| {
            ints.iter().rev().fold(BigRational::zero(), |acc, c| acc * t + BigRational::from_integer(c.clone()))
        };
        for u in divisors(&ints[0])? {
            for v in divisors(ints.last().unwrap())? {
                for sign in [1, -1] {
                    let t = BigRational::new(&u * sign, v.clone());
                    if !roots.contains(&t) && eval(&t).is_zero() {
                        roots.push(t);
                    }
                }
            }
        }
    }
    roots.sort();
    Ok(roots)
}

/// `rank((A − tI)^k)` for `k = 0 ..= n + 1`.
pub fn rank_sequence<F: Field>(field: &F, a: &Matrix<F::Elem>, t: &F::Elem) -> Vec<usize> {
    let n = a.rows();
    let shifted = matrix::shift(field, a, t);
    let mut power = Matrix::identity(field, n);
    let mut ranks = Vec::with_capacity(n + 2);
    for _ in 0..=n + 1 {
        ranks.push(matrix::rank(field, &power));
        power = matrix::mul(field, &power, &shifted);
    }
    assert!(ranks.windows(2).all(|w| w[0] >= w[1]), "rank sequence must be non-increasing");
    assert_eq!(ranks[n], ranks[n + 1], "rank sequence must stabilise by k = n");
    ranks
}

/// Jordan partition at `t` from its rank sequence: the number of blocks of
/// size `k` is `r_{k−1} − 2 r_k + r_{k+1}`.
fn partition_from_ranks(ranks: &[usize]) -> Partition {
    let mut parts = Vec::new();
    for k in (1..ranks.len() - 1).rev() {
        let count = ranks[k - 1] + ranks[k + 1] - 2 * ranks[k];
        parts.extend(std::iter::repeat_n(k, count));
    }
    Partition::new(parts).expect("sizes emitted in decreasing order")
}

/// Jordan type using a known list of candidate eigenvalues; fails when the
/// candidates do not account for the whole spectrum.
pub fn jordan_type_with<F: Field>(
    field: &F,
    a: &Matrix<F::Elem>,
    candidates: &[F::Elem],
) -> Result<JordanType<F::Elem>>
where
    F::Elem: Ord,
{
    if !a.is_square() {
        return Err(Error::DimensionMismatch { expected: a.rows(), got: a.cols() });
    }
    let n = a.rows();
    let mut spectrum = Vec::new();
    let mut total = 0;
    for t in candidates {
        if spectrum.iter().any(|(e, _)| e == t) {
            continue;
        }
        let ranks = rank_sequence(field, a, t);
        if ranks[n] == n {
            continue;
        }
        total += n - ranks[n];
        spectrum.push((t.clone(), partition_from_ranks(&ranks)));
    }
    if total != n {
        return Err(Error::SpectrumNotInField(format!(
            "eigenvalues in the field account for {total} of {n} dimensions"
        )));
    }
    JordanType::new(spectrum)
}

pub fn jordan_type<F: SpectrumField>(field: &F, a: &Matrix<F::Elem>) -> Result<JordanType<F::Elem>>
where
    F::Elem: Ord,
{
    let eig = field.eigenvalues(a)?;
    jordan_type_with(field, a, &eig)
}

/// Upper-triangular Jordan normal form `⊕ (t I + J_λ)` for the given blocks.
pub fn jordan_matrix<F: Field>(field: &F, blocks: &[(F::Elem, Partition)]) -> Matrix<F::Elem> {
    let n: usize = blocks.iter().map(|(_, p)| p.size()).sum();
    let mut m = Matrix::zeros(field, n, n);
    let mut offset = 0;
    for (t, lambda) in blocks {
        for &part in lambda.parts() {
            for i in 0..part {
                m.set(offset + i, offset + i, t.clone());
                if i + 1 < part {
                    m.set(offset + i, offset + i + 1, field.one());
                }
            }
            offset += part;
        }
    }
    m
}

/// A point of the class `d`: block diagonal `z_i I + J_{e_i}`.
pub fn representative<F: Field>(
    field: &F,
    d: &GLDecompDatum,
    eigenvalues: &[F::Elem],
) -> Result<Matrix<F::Elem>> {
    if eigenvalues.len() != d.num_blocks() {
        return Err(Error::BadEigenvalues(format!(
            "{} eigenvalues for {} blocks",
            eigenvalues.len(),
            d.num_blocks()
        )));
    }
    for (i, a) in eigenvalues.iter().enumerate() {
        if eigenvalues[..i].contains(a) {
            return Err(Error::BadEigenvalues(format!("eigenvalue {} repeated", field.render(a))));
        }
    }
    let blocks: Vec<(F::Elem, Partition)> =
        eigenvalues.iter().cloned().zip(d.blocks().iter().map(|(_, e)| e.clone())).collect();
    Ok(jordan_matrix(field, &blocks))
}

/// `A ∈ closure(GLₙ · B)`: equal spectra with multiplicity, and
/// `rank((A − tI)^k) ≤ rank((B − tI)^k)` for every eigenvalue `t` and `k`.
pub fn orbit_closure_leq<F: SpectrumField>(
    field: &F,
    a: &Matrix<F::Elem>,
    b: &Matrix<F::Elem>,
) -> Result<bool>
where
    F::Elem: Ord,
{
    if a.rows() != b.rows() || !a.is_square() || !b.is_square() {
        return Err(Error::DimensionMismatch { expected: a.rows(), got: b.rows() });
    }
    let n = a.rows();
    let ea = field.eigenvalues(a)?;
    let eb = field.eigenvalues(b)?;
    // both spectra must lie in the field
    jordan_type_with(field, a, &ea)?;
    jordan_type_with(field, b, &eb)?;
    let mut ea_sorted = ea.clone();
    ea_sorted.sort();
    let mut eb_sorted = eb;
    eb_sorted.sort();
    if ea_sorted != eb_sorted {
        return Ok(false);
    }
    for t in &ea_sorted {
        let ra = rank_sequence(field, a, t);
        let rb = rank_sequence(field, b, t);
        if ra[n] != rb[n] {
            return Ok(false);
        }
        if ra.iter().zip(&rb).any(|(x, y)| x > y) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Convenience for small integer test matrices.
pub fn rational_matrix(rows: &[Vec<i64>]) -> Matrix<BigRational> {
    Matrix::from_i64(&Rationals, rows)
}
