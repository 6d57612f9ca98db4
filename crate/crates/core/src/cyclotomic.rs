//! Exact arithmetic in the ring of integers Z[zeta_m] of the m-th cyclotomic
//! field.
//!
//! Values are stored on the power basis {1, zeta, ..., zeta^{phi(m)-1}},
//! reduced modulo the m-th cyclotomic polynomial. That basis is an integral
//! basis of Z[zeta_m], so equality is coefficient-vector equality and
//! rationality is simply "all non-constant coefficients vanish". No floating
//! point anywhere.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::polyops;

/// The m-th cyclotomic polynomial, by exact division of x^m - 1 by the
/// product of Phi_d over proper divisors d of m. Coefficients ascending.
pub fn cyclotomic_poly(m: u64) -> Vec<BigInt> {
    assert!(m >= 1, "cyclotomic_poly: m must be positive");
    if m == 1 {
        return vec![BigInt::from(-1), BigInt::from(1)];
    }
    let mut denom = vec![BigInt::one()];
    for d in 1..m {
        if m % d == 0 {
            denom = polyops::mul(&denom, &cyclotomic_poly(d));
        }
    }
    let mut xm1 = vec![BigInt::zero(); m as usize + 1];
    xm1[0] = BigInt::from(-1);
    xm1[m as usize] = BigInt::one();
    polyops::div_exact(&xm1, &denom).expect("x^m - 1 is divisible by prod Phi_d")
}

fn euler_phi(m: u64) -> u64 {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Precomputed data for arithmetic in Z[zeta_m].
#[derive(Clone, Debug)]
pub struct CycContext {
    m: u64,
    phi: usize,
    poly: Vec<BigInt>,
}

/// An element of Z[zeta_m] in canonical (reduced) form. Two values are equal
/// iff their coefficient vectors are equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CycInt {
    m: u64,
    coeffs: Vec<BigInt>,
}

impl CycContext {
    pub fn new(m: u64) -> Self {
        let poly = cyclotomic_poly(m);
        let phi = poly.len() - 1;
        debug_assert_eq!(phi as u64, euler_phi(m));
        CycContext { m, phi, poly }
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    /// phi(m), the rank of Z[zeta_m] over Z.
    pub fn degree(&self) -> usize {
        self.phi
    }

    /// Phi_m, ascending coefficients, monic.
    pub fn polynomial(&self) -> &[BigInt] {
        &self.poly
    }

    fn check(&self, a: &CycInt) {
        assert_eq!(
            a.m, self.m,
            "cyclotomic context mismatch: value over Z[zeta_{}] used with context m = {}",
            a.m, self.m
        );
    }

    pub fn zero(&self) -> CycInt {
        CycInt { m: self.m, coeffs: vec![BigInt::zero(); self.phi] }
    }

    pub fn from_integer(&self, c: BigInt) -> CycInt {
        let mut v = self.zero();
        v.coeffs[0] = c;
        v
    }

    pub fn one(&self) -> CycInt {
        self.from_integer(BigInt::one())
    }

    /// Canonical form of zeta^t (t taken modulo m, negatives allowed).
    pub fn from_root_power(&self, t: i64) -> CycInt {
        let t = t.rem_euclid(self.m as i64) as usize;
        let mut dense = vec![BigInt::zero(); t + 1];
        dense[t] = BigInt::one();
        self.reduce_dense(dense)
    }

    /// Reduces a dense coefficient vector (arbitrary length, exponent i
    /// meaning zeta^i) into canonical form.
    pub fn reduce_dense(&self, mut dense: Vec<BigInt>) -> CycInt {
        // fold exponents >= m down first; cheaper than long division and
        // keeps intermediate degrees < m
        if dense.len() > self.m as usize {
            let m = self.m as usize;
            for i in (m..dense.len()).rev() {
                let c = std::mem::replace(&mut dense[i], BigInt::zero());
                dense[i - m] += c;
            }
            dense.truncate(m);
        }
        let mut coeffs = polyops::rem_monic(&dense, &self.poly);
        coeffs.resize(self.phi, BigInt::zero());
        CycInt { m: self.m, coeffs }
    }

    /// Builds sum of coeff * zeta^exponent terms and reduces once.
    pub fn from_exponent_terms<I>(&self, terms: I) -> CycInt
    where
        I: IntoIterator<Item = (u64, BigInt)>,
    {
        let mut dense = vec![BigInt::zero(); self.m as usize];
        for (e, c) in terms {
            dense[(e % self.m) as usize] += c;
        }
        self.reduce_dense(dense)
    }

    pub fn add(&self, a: &CycInt, b: &CycInt) -> CycInt {
        self.check(a);
        self.check(b);
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| x + y)
            .collect();
        CycInt { m: self.m, coeffs }
    }

    pub fn sub(&self, a: &CycInt, b: &CycInt) -> CycInt {
        self.add(a, &self.negate(b))
    }

    pub fn negate(&self, a: &CycInt) -> CycInt {
        self.check(a);
        CycInt { m: self.m, coeffs: a.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, a: &CycInt, b: &CycInt) -> CycInt {
        self.check(a);
        self.check(b);
        self.reduce_dense(polyops::mul(&a.coeffs, &b.coeffs))
    }

    /// The image under zeta -> zeta^{-1} (complex conjugation on roots of
    /// unity).
    pub fn conjugate(&self, a: &CycInt) -> CycInt {
        self.check(a);
        let m = self.m;
        self.from_exponent_terms(
            a.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(t, c)| ((m - t as u64 % m) % m, c.clone())),
        )
    }

    /// Returns the constant coefficient when the value is a rational integer
    /// (all non-constant coefficients zero); None signals an irrational
    /// value. An algebraic integer that is rational is a rational integer,
    /// so this test is exact.
    pub fn as_rational_integer(&self, a: &CycInt) -> Option<BigInt> {
        self.check(a);
        if a.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(a.coeffs[0].clone())
        } else {
            None
        }
    }
}

impl CycInt {
    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl fmt::Display for CycInt {
    /// Renders as `c0 + c1*z + ...` with z = zeta_m, skipping zero terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (t, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.magnitude();
            if wrote {
                write!(f, " {} ", if c.sign() == num_bigint::Sign::Minus { "-" } else { "+" })?;
            } else if c.sign() == num_bigint::Sign::Minus {
                write!(f, "-")?;
            }
            match t {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}*z")?,
                _ => write!(f, "{mag}*z^{t}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(cs: &[i64]) -> Vec<BigInt> {
        cs.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), big(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), big(&[1, 1]));
        assert_eq!(cyclotomic_poly(4), big(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(6), big(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(5), big(&[1, 1, 1, 1, 1]));
        assert_eq!(cyclotomic_poly(12), big(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn product_over_divisors_identity() {
        // prod over d | m of Phi_d = x^m - 1, coefficient-exactly, for m <= 60
        for m in 1..=60u64 {
            let mut prod = vec![BigInt::one()];
            for d in 1..=m {
                if m % d == 0 {
                    prod = polyops::mul(&prod, &cyclotomic_poly(d));
                }
            }
            let mut expect = vec![BigInt::zero(); m as usize + 1];
            expect[0] = BigInt::from(-1);
            expect[m as usize] = BigInt::one();
            assert_eq!(prod, expect, "m = {m}");
        }
    }

    #[test]
    fn degrees_match_totient() {
        for m in 1..=60u64 {
            assert_eq!(cyclotomic_poly(m).len() as u64 - 1, euler_phi(m));
        }
    }

    #[test]
    fn root_power_reductions() {
        let c5 = CycContext::new(5);
        assert_eq!(c5.from_root_power(0), c5.one());
        assert_eq!(c5.from_root_power(4).coefficients(), &big(&[-1, -1, -1, -1])[..]);
        let c4 = CycContext::new(4);
        assert_eq!(c4.from_root_power(2), c4.from_integer(BigInt::from(-1)));
    }

    #[test]
    fn root_sums_vanish() {
        for m in 2..=60u64 {
            let ctx = CycContext::new(m);
            let mut acc = ctx.zero();
            for t in 0..m {
                acc = ctx.add(&acc, &ctx.from_root_power(t as i64));
            }
            assert!(acc.is_zero(), "m = {m}");
            assert_eq!(ctx.as_rational_integer(&acc), Some(BigInt::zero()));
        }
    }

    #[test]
    fn inverse_roots_multiply_to_one() {
        for m in 1..=24u64 {
            let ctx = CycContext::new(m);
            for t in 0..m as i64 {
                let prod = ctx.mul(&ctx.from_root_power(t), &ctx.from_root_power(-t));
                assert_eq!(ctx.as_rational_integer(&prod), Some(BigInt::one()));
            }
        }
    }

    #[test]
    fn square_of_difference_example() {
        // (zeta - zeta^4)^2 over m = 5 reduces to zeta^2 - 2 + zeta^3
        let ctx = CycContext::new(5);
        let d = ctx.sub(&ctx.from_root_power(1), &ctx.from_root_power(4));
        let sq = ctx.mul(&d, &d);
        assert_eq!(sq.coefficients(), &big(&[-2, 0, 1, 1])[..]);
        assert_eq!(ctx.as_rational_integer(&sq), None);
    }

    #[test]
    fn rationality_test() {
        let ctx = CycContext::new(5);
        assert_eq!(
            ctx.as_rational_integer(&ctx.from_integer(BigInt::from(7))),
            Some(BigInt::from(7))
        );
        assert_eq!(ctx.as_rational_integer(&ctx.from_root_power(1)), None);
        let mut full = ctx.zero();
        for t in 0..5 {
            full = ctx.add(&full, &ctx.from_root_power(t));
        }
        assert_eq!(ctx.as_rational_integer(&full), Some(BigInt::zero()));
    }

    #[test]
    fn additive_inverse() {
        let ctx = CycContext::new(12);
        let a = ctx.from_exponent_terms([(1, BigInt::from(3)), (7, BigInt::from(-2))]);
        assert!(ctx.add(&a, &ctx.negate(&a)).is_zero());
    }

    #[test]
    fn conjugation_is_an_involution() {
        let ctx = CycContext::new(7);
        let a = ctx.from_exponent_terms([(1, BigInt::from(2)), (3, BigInt::from(-5))]);
        assert_eq!(ctx.conjugate(&ctx.conjugate(&a)), a);
        // conjugate of a rational is itself
        let r = ctx.from_integer(BigInt::from(-9));
        assert_eq!(ctx.conjugate(&r), r);
    }

    #[test]
    #[should_panic(expected = "context mismatch")]
    fn context_mismatch_is_loud() {
        let c5 = CycContext::new(5);
        let c7 = CycContext::new(7);
        let _ = c5.add(&c5.one(), &c7.one());
    }

    #[test]
    fn display_form() {
        let ctx = CycContext::new(5);
        let v = ctx.from_exponent_terms([(0, BigInt::from(-2)), (2, BigInt::from(1)), (3, BigInt::from(1))]);
        assert_eq!(v.to_string(), "-2 + 1*z^2 + 1*z^3");
        assert_eq!(ctx.zero().to_string(), "0");
        assert_eq!(
            ctx.from_exponent_terms([(1, BigInt::from(-1))]).to_string(),
            "-1*z"
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ring_axioms(
            m in prop::sample::select(vec![3u64, 4, 5, 6, 8, 12]),
            xs in prop::collection::vec((0u64..12, -9i64..10), 1..5),
            ys in prop::collection::vec((0u64..12, -9i64..10), 1..5),
            zs in prop::collection::vec((0u64..12, -9i64..10), 1..5),
        ) {
            let ctx = CycContext::new(m);
            let mk = |ts: &Vec<(u64, i64)>| {
                ctx.from_exponent_terms(ts.iter().map(|&(e, c)| (e, BigInt::from(c))))
            };
            let (a, b, c) = (mk(&xs), mk(&ys), mk(&zs));
            // associativity and commutativity
            prop_assert_eq!(ctx.mul(&ctx.mul(&a, &b), &c), ctx.mul(&a, &ctx.mul(&b, &c)));
            prop_assert_eq!(ctx.mul(&a, &b), ctx.mul(&b, &a));
            prop_assert_eq!(ctx.add(&a, &b), ctx.add(&b, &a));
            // distributivity
            prop_assert_eq!(
                ctx.mul(&a, &ctx.add(&b, &c)),
                ctx.add(&ctx.mul(&a, &b), &ctx.mul(&a, &c))
            );
            // zeta^m = 1
            prop_assert_eq!(ctx.from_root_power(m as i64), ctx.one());
        }
    }
}
