//! Exact scalar fields: the rationals, prime fields `F_p`, and extension
//! fields `F_{p^k}` realised as polynomials modulo a fixed irreducible.
//!
//! Fields are values that carry their own parameters; elements are plain
//! data and every arithmetic operation goes through the field.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub trait Field: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    /// 0 for the rationals, otherwise the prime `p`.
    fn characteristic(&self) -> u64;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    /// Human-readable rendering of an element.
    fn render(&self, a: &Self::Elem) -> String;
}

/// Finite fields can be enumerated.
pub trait FiniteField: Field {
    fn order(&self) -> u64;
    fn elements(&self) -> Vec<Self::Elem>;
}

// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn characteristic(&self) -> u64 {
        0
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn render(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
}

// ---------------------------------------------------------------------------

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) || p >= 1 << 31 {
            return Err(Error::InvalidCharacteristic(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = r * a % self.p;
            }
            a = a * a % self.p;
            e >>= 1;
        }
        r
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn characteristic(&self) -> u64 {
        self.p
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(*a, self.p - 2))
        }
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
}

impl FiniteField for PrimeField {
    fn order(&self) -> u64 {
        self.p
    }
    fn elements(&self) -> Vec<u64> {
        (0..self.p).collect()
    }
}

// ---------------------------------------------------------------------------

/// Defining polynomials for `F_{p^k}`, low-degree coefficient first, monic
/// leading coefficient omitted. These are the Conway polynomials.
const CONWAY: &[(u64, usize, &[u64])] = &[
    (2, 2, &[1, 1]),
    (2, 3, &[1, 1, 0]),
    (2, 4, &[1, 1, 0, 0]),
    (3, 2, &[2, 2]),
    (3, 3, &[1, 2, 0]),
    (5, 2, &[2, 4]),
    (5, 3, &[3, 3, 0]),
    (7, 2, &[3, 6]),
    (7, 3, &[4, 0, 6]),
];

/// `F_{p^k}` as `F_p[t] / (f)`.
///
/// For the pairs listed in [`GaloisField::defining_polynomials`] `f` is the
/// Conway polynomial; otherwise it is the lexicographically first monic
/// irreducible of degree `k` (coefficients compared from the constant term).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisField {
    base: PrimeField,
    degree: usize,
    /// Non-leading coefficients of the monic modulus, constant term first.
    modulus: Vec<u64>,
}

impl GaloisField {
    pub fn new(p: u64, k: usize) -> Result<Self> {
        let base = PrimeField::new(p)?;
        if k == 0 {
            return Err(Error::InvalidExtensionDegree(k));
        }
        if k == 1 {
            return Ok(GaloisField { base, degree: 1, modulus: vec![0] });
        }
        let modulus = match CONWAY.iter().find(|(q, d, _)| *q == p && *d == k) {
            Some((_, _, m)) => m.to_vec(),
            None => first_irreducible(p, k),
        };
        Ok(GaloisField { base, degree: k, modulus })
    }

    /// The built-in table of `(p, k, coefficients)`.
    pub fn defining_polynomials() -> &'static [(u64, usize, &'static [u64])] {
        CONWAY
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn prime(&self) -> u64 {
        self.base.p
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Embeds a base-field element.
    pub fn embed(&self, a: u64) -> Vec<u64> {
        let mut v = vec![0; self.degree];
        v[0] = a % self.base.p;
        v
    }

    /// The class of `t`; a primitive element when the modulus is Conway.
    pub fn generator(&self) -> Vec<u64> {
        let mut v = vec![0; self.degree];
        if self.degree == 1 {
            // F_p: any generator of the multiplicative group would do, but
            // t itself reduces to -modulus[0].
            v[0] = self.base.neg(&self.modulus[0]);
        } else {
            v[1] = 1;
        }
        v
    }

    pub fn from_index(&self, mut idx: u64) -> Vec<u64> {
        let p = self.base.p;
        let mut v = vec![0; self.degree];
        for c in v.iter_mut() {
            *c = idx % p;
            idx /= p;
        }
        v
    }

    fn pow(&self, a: &[u64], mut e: u64) -> Vec<u64> {
        let mut result = self.one();
        let mut base = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        result
    }
}

fn poly_is_irreducible(p: u64, coeffs_monic: &[u64]) -> bool {
    // Brute force: no monic factor of degree <= deg/2. Only used for tiny p^k.
    let deg = coeffs_monic.len() - 1;
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for idx in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut x = idx;
            for _ in 0..d {
                g.push(x % p);
                x /= p;
            }
            g.push(1);
            if poly_rem(p, coeffs_monic, &g).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn poly_rem(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    // b monic
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (i, &bc) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - lead * bc % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn first_irreducible(p: u64, k: usize) -> Vec<u64> {
    let count = p.pow(k as u32);
    for idx in 0..count {
        let mut f = Vec::with_capacity(k + 1);
        let mut x = idx;
        for _ in 0..k {
            f.push(x % p);
            x /= p;
        }
        f.push(1);
        if poly_is_irreducible(p, &f) {
            f.pop();
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Checks that a table entry really is irreducible.
pub fn check_defining_polynomial(p: u64, modulus: &[u64]) -> bool {
    let mut f = modulus.to_vec();
    f.push(1);
    poly_is_irreducible(p, &f)
}

impl Field for GaloisField {
    type Elem = Vec<u64>;

    fn characteristic(&self) -> u64 {
        self.base.p
    }
    fn zero(&self) -> Vec<u64> {
        vec![0; self.degree]
    }
    fn one(&self) -> Vec<u64> {
        self.embed(1)
    }
    fn from_i64(&self, v: i64) -> Vec<u64> {
        self.embed(self.base.from_i64(v))
    }
    fn add(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| self.base.add(x, y)).collect()
    }
    fn sub(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| self.base.sub(x, y)).collect()
    }
    fn mul(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let p = self.base.p;
        let k = self.degree;
        if k == 1 {
            return vec![a[0] * b[0] % p];
        }
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        // reduce: t^k = -modulus(t)
        for deg in (k..prod.len()).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            prod[deg] = 0;
            for (i, m) in self.modulus.iter().enumerate() {
                let idx = deg - k + i;
                prod[idx] = (prod[idx] + p - c * m % p) % p;
            }
        }
        prod.truncate(k);
        prod
    }
    fn neg(&self, a: &Vec<u64>) -> Vec<u64> {
        a.iter().map(|x| self.base.neg(x)).collect()
    }
    fn inv(&self, a: &Vec<u64>) -> Option<Vec<u64>> {
        if self.is_zero(a) {
            return None;
        }
        let q = self.order();
        Some(self.pow(a, q - 2))
    }
    fn is_zero(&self, a: &Vec<u64>) -> bool {
        a.iter().all(|&c| c == 0)
    }
    fn render(&self, a: &Vec<u64>) -> String {
        if self.degree == 1 {
            return a[0].to_string();
        }
        let terms: Vec<String> = a
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "t".to_string(),
                (1, c) => format!("{c}t"),
                (i, 1) => format!("t^{i}"),
                (i, c) => format!("{c}t^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }
}

impl FiniteField for GaloisField {
    fn order(&self) -> u64 {
        self.base.p.pow(self.degree as u32)
    }
    fn elements(&self) -> Vec<Vec<u64>> {
        (0..self.order()).map(|i| self.from_index(i)).collect()
    }
}

/// Integer -> rational helper used across the crate.
pub fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}
