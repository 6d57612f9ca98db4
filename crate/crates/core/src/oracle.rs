//! Independent brute-force verification path: the dense adjacency matrix
//! from the regular representation, its exact integer characteristic
//! polynomial (fraction-free determinants at integer points, then
//! interpolation), integer eigenvalue extraction by deflation, and the
//! commuting-matrices check.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::groups::{GMultiset, GroupElement, GroupSpec};
use crate::polyops;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("multiset is not inverse-closed: mu(s) != mu(s^-1) for s = {0:?}")]
    NotInverseClosed(GroupElement),
    #[error("multiset is not conjugation-closed: mu({conjugate:?}) != mu({element:?})")]
    NotConjugationClosed {
        element: GroupElement,
        conjugate: GroupElement,
    },
}

/// A dense square matrix with arbitrary-precision integer entries, indexed
/// by the canonical element enumeration of the group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    n: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(n: usize) -> IntMatrix {
        IntMatrix { n, data: vec![BigInt::zero(); n * n] }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.n + c] = v;
    }

    pub fn is_symmetric(&self) -> bool {
        for r in 0..self.n {
            for c in 0..r {
                if self.get(r, c) != self.get(c, r) {
                    return false;
                }
            }
        }
        true
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn row_sums(&self) -> Vec<BigInt> {
        (0..self.n)
            .map(|r| (0..self.n).map(|c| self.get(r, c)).sum())
            .collect()
    }

    /// Exact matrix product. Entries that provably fit machine words are
    /// multiplied in i64 arithmetic; the result is identical either way.
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let small = |m: &IntMatrix| -> Option<Vec<i64>> {
            m.data.iter().map(|v| v.to_i64()).collect()
        };
        if let (Some(a), Some(b)) = (small(self), small(other)) {
            let max_a = a.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0);
            let max_b = b.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0);
            if max_a
                .checked_mul(max_b)
                .and_then(|p| p.checked_mul(n as u64))
                .is_some_and(|p| p < i64::MAX as u64)
            {
                let mut out = IntMatrix::zero(n);
                for r in 0..n {
                    for c in 0..n {
                        let mut acc = 0i64;
                        for k in 0..n {
                            acc += a[r * n + k] * b[k * n + c];
                        }
                        out.set(r, c, BigInt::from(acc));
                    }
                }
                return out;
            }
        }
        let mut out = IntMatrix::zero(n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = BigInt::zero();
                for k in 0..n {
                    acc += self.get(r, k) * other.get(k, c);
                }
                out.set(r, c, acc);
            }
        }
        out
    }
}

/// The adjacency matrix of Cay(G, S): entry (g, h) = mu_S(g h^{-1}).
pub fn adjacency_matrix(spec: &GroupSpec, s: &GMultiset) -> IntMatrix {
    let elements = spec.elements();
    let n = elements.len();
    let mut m = IntMatrix::zero(n);
    for (r, g) in elements.iter().enumerate() {
        for (c, h) in elements.iter().enumerate() {
            let diff = spec.mul(g, &spec.inv(h));
            let mult = s.multiplicity(&diff);
            if !mult.is_zero() {
                m.set(r, c, BigInt::from(mult));
            }
        }
    }
    m
}

/// A monic integer polynomial, ascending coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        polyops::eval(&self.coeffs, x)
    }
}

/// Fraction-free (Bareiss) determinant; every division is exact.
fn det_bareiss(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = std::mem::take(&mut a[n - 1][n - 1]);
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// det(tI - M) for an integer point t.
fn char_poly_value(m: &IntMatrix, t: &BigInt) -> BigInt {
    let n = m.size();
    let mut a = vec![vec![BigInt::zero(); n]; n];
    for r in 0..n {
        for c in 0..n {
            a[r][c] = if r == c { t - m.get(r, c) } else { -m.get(r, c) };
        }
    }
    det_bareiss(a)
}

/// The default evaluation points 0, 1, -1, 2, -2, ...
fn default_points(count: usize) -> Vec<BigInt> {
    let mut points = Vec::with_capacity(count);
    points.push(BigInt::zero());
    let mut k = 1i64;
    while points.len() < count {
        points.push(BigInt::from(k));
        if points.len() < count {
            points.push(BigInt::from(-k));
        }
        k += 1;
    }
    points
}

/// The characteristic polynomial det(xI - M), exact: evaluated at n+1
/// distinct integer points by fraction-free elimination and interpolated
/// through Newton's divided differences.
pub fn char_poly(m: &IntMatrix) -> IntPolynomial {
    char_poly_with_points(m, &default_points(m.size() + 1))
}

/// Same, with caller-chosen evaluation points (must be pairwise distinct and
/// number at least n+1).
pub fn char_poly_with_points(m: &IntMatrix, points: &[BigInt]) -> IntPolynomial {
    let n = m.size();
    assert!(points.len() >= n + 1, "need at least n+1 evaluation points");
    let points = &points[..n + 1];
    let values: Vec<BigInt> = points.iter().map(|t| char_poly_value(m, t)).collect();

    // Newton divided differences over exact rationals
    let xs: Vec<BigRational> = points
        .iter()
        .map(|p| BigRational::from_integer(p.clone()))
        .collect();
    let mut table: Vec<BigRational> = values
        .iter()
        .map(|v| BigRational::from_integer(v.clone()))
        .collect();
    let mut coeffs_newton: Vec<BigRational> = Vec::with_capacity(n + 1);
    coeffs_newton.push(table[0].clone());
    for level in 1..=n {
        for i in (level..=n).rev() {
            let num = &table[i] - &table[i - 1];
            let den = &xs[i] - &xs[i - level];
            table[i] = num / den;
        }
        coeffs_newton.push(table[level].clone());
    }

    // expand sum of c_level * prod_{j < level} (x - x_j)
    let mut acc = vec![BigRational::zero(); n + 1];
    let mut basis = vec![BigRational::one()];
    for (level, c) in coeffs_newton.iter().enumerate() {
        for (k, b) in basis.iter().enumerate() {
            acc[k] += c * b;
        }
        if level < n {
            // basis *= (x - x_level)
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, b) in basis.iter().enumerate() {
                next[k + 1] += b;
                next[k] -= b * &xs[level];
            }
            basis = next;
        }
    }
    let coeffs: Vec<BigInt> = acc
        .into_iter()
        .map(|c| {
            debug_assert!(c.is_integer(), "interpolation must land on integers");
            c.to_integer()
        })
        .collect();
    debug_assert_eq!(coeffs.len(), n + 1);
    debug_assert!(coeffs.last().unwrap().is_one(), "char poly must be monic");
    IntPolynomial { coeffs }
}

/// Divides by (x - r), returning the quotient when the remainder vanishes.
fn synthetic_div(coeffs: &[BigInt], r: &BigInt) -> Option<Vec<BigInt>> {
    let deg = coeffs.len() - 1;
    let mut quotient = vec![BigInt::zero(); deg];
    let mut carry = coeffs[deg].clone();
    quotient[deg - 1] = carry.clone();
    for i in (1..deg).rev() {
        carry = &coeffs[i] + carry * r;
        quotient[i - 1] = carry.clone();
    }
    let remainder = &coeffs[0] + carry * r;
    if remainder.is_zero() {
        Some(quotient)
    } else {
        None
    }
}

/// Attempts to deflate a monic polynomial completely by integer roots from
/// [-bound, bound]. Returns the eigenvalue multiset (descending) on success;
/// None means some root is not an integer in that range.
pub fn integer_spectrum(p: &IntPolynomial, bound: &BigUint) -> Option<Vec<(BigInt, u64)>> {
    let mut coeffs = p.coeffs.clone();
    let mut out: Vec<(BigInt, u64)> = Vec::new();
    let bound = BigInt::from(bound.clone());
    let mut candidate = bound.clone();
    while candidate >= -&bound && coeffs.len() > 1 {
        let mut mult = 0u64;
        while coeffs.len() > 1 {
            match synthetic_div(&coeffs, &candidate) {
                Some(q) => {
                    coeffs = q;
                    mult += 1;
                }
                None => break,
            }
        }
        if mult > 0 {
            out.push((candidate.clone(), mult));
        }
        candidate -= 1;
    }
    if coeffs.len() == 1 {
        Some(out)
    } else {
        None
    }
}

/// Result of the brute-force integrality check.
#[derive(Clone, Debug)]
pub struct OracleVerdict {
    pub is_integral: bool,
    /// Present exactly when integral: the eigenvalue multiset, descending.
    pub spectrum: Option<Vec<(BigInt, u64)>>,
    pub char_poly: IntPolynomial,
}

/// Ground-truth integrality decision: adjacency matrix, exact characteristic
/// polynomial, full integer deflation bounded by the regular degree.
pub fn oracle_check(spec: &GroupSpec, s: &GMultiset) -> Result<OracleVerdict, OracleError> {
    if let Some(w) = s.inverse_closure_witness(spec) {
        return Err(OracleError::NotInverseClosed(w));
    }
    let a = adjacency_matrix(spec, s);
    let p = char_poly(&a);
    let spectrum = integer_spectrum(&p, &s.total());
    Ok(OracleVerdict { is_integral: spectrum.is_some(), spectrum, char_poly: p })
}

/// Whether mu_T is invariant under conjugation (equivalently gT = Tg for all g).
fn conjugation_witness(spec: &GroupSpec, t: &GMultiset) -> Option<(GroupElement, GroupElement)> {
    for (x, mult) in t.iter() {
        for g in spec.elements() {
            let conj = spec.mul(&spec.mul(&g, x), &spec.inv(&g));
            if t.multiplicity(&conj) != *mult {
                return Some((x.clone(), conj));
            }
        }
    }
    None
}

/// Tests whether the adjacency matrices of Cay(G, S) and Cay(G, T) commute.
/// Preconditions: S and T inverse-closed, T conjugation-closed.
pub fn commute_check(spec: &GroupSpec, s: &GMultiset, t: &GMultiset) -> Result<bool, OracleError> {
    if let Some(w) = s.inverse_closure_witness(spec) {
        return Err(OracleError::NotInverseClosed(w));
    }
    if let Some((element, conjugate)) = conjugation_witness(spec, t) {
        return Err(OracleError::NotConjugationClosed { element, conjugate });
    }
    if let Some(w) = t.inverse_closure_witness(spec) {
        return Err(OracleError::NotInverseClosed(w));
    }
    let a_s = adjacency_matrix(spec, s);
    let a_t = adjacency_matrix(spec, t);
    Ok(a_s.mul(&a_t) == a_t.mul(&a_s))
}
