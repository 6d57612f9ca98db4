//! Multisets of group elements and integer group-algebra vectors.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::{GroupElement, GroupSpec};

/// A multiset of group elements with arbitrary-precision positive
/// multiplicities. Zero multiplicities are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GMultiset {
    entries: BTreeMap<GroupElement, BigUint>,
}

impl GMultiset {
    pub fn new() -> Self {
        GMultiset { entries: BTreeMap::new() }
    }

    pub fn from_pairs<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (GroupElement, BigUint)>,
    {
        let mut s = GMultiset::new();
        for (x, m) in pairs {
            s.add(x, m);
        }
        s
    }

    /// Adds `mult` copies of `x` (a no-op when `mult` is zero).
    pub fn add(&mut self, x: GroupElement, mult: BigUint) {
        if mult.is_zero() {
            return;
        }
        *self.entries.entry(x).or_insert_with(BigUint::zero) += mult;
    }

    pub fn add_one(&mut self, x: GroupElement) {
        self.add(x, BigUint::one());
    }

    pub fn multiplicity(&self, x: &GroupElement) -> BigUint {
        self.entries.get(x).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        self.entries.contains_key(x)
    }

    /// Total multiplicity.
    pub fn total(&self) -> BigUint {
        self.entries.values().sum()
    }

    /// Number of distinct elements in the support.
    pub fn support_size(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GroupElement, &BigUint)> {
        self.entries.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &GroupElement> {
        self.entries.keys()
    }

    /// True iff every multiplicity is 1.
    pub fn is_simple(&self) -> bool {
        self.entries.values().all(|m| m.is_one())
    }

    /// The multiset {x^{-1} : x in S} with multiplicities carried over.
    pub fn inverse(&self, spec: &GroupSpec) -> GMultiset {
        GMultiset::from_pairs(self.entries.iter().map(|(x, m)| (spec.inv(x), m.clone())))
    }

    /// Pointwise sum (multiset union with added multiplicities).
    pub fn sum(&self, other: &GMultiset) -> GMultiset {
        let mut out = self.clone();
        for (x, m) in &other.entries {
            out.add(x.clone(), m.clone());
        }
        out
    }

    /// Pointwise minimum of multiplicities (multiset intersection).
    pub fn pointwise_min(&self, other: &GMultiset) -> GMultiset {
        GMultiset::from_pairs(self.entries.iter().filter_map(|(x, m)| {
            let n = other.multiplicity(x);
            let v = m.clone().min(n);
            if v.is_zero() {
                None
            } else {
                Some((x.clone(), v))
            }
        }))
    }

    /// Pointwise difference; `other` must be pointwise <= `self`.
    pub fn checked_sub(&self, other: &GMultiset) -> Option<GMultiset> {
        let mut out = GMultiset::new();
        for (x, m) in &other.entries {
            if self.multiplicity(x) < *m {
                return None;
            }
        }
        for (x, m) in &self.entries {
            let v = m - other.multiplicity(x);
            if !v.is_zero() {
                out.entries.insert(x.clone(), v);
            }
        }
        Some(out)
    }

    /// True iff mu(s) = mu(s^{-1}) for every s in the support.
    pub fn is_inverse_closed(&self, spec: &GroupSpec) -> bool {
        self.entries
            .iter()
            .all(|(x, m)| self.multiplicity(&spec.inv(x)) == *m)
    }

    /// A witness element with mu(s) != mu(s^{-1}), if one exists.
    pub fn inverse_closure_witness(&self, spec: &GroupSpec) -> Option<GroupElement> {
        self.entries
            .iter()
            .find(|(x, m)| self.multiplicity(&spec.inv(x)) != **m)
            .map(|(x, _)| x.clone())
    }

    /// True iff `self` equals c * `other` for some positive integer c.
    pub fn is_integer_multiple_of(&self, other: &GMultiset) -> bool {
        if self.is_empty() || other.is_empty() {
            return self.is_empty() && other.is_empty();
        }
        if self.support_size() != other.support_size() {
            return false;
        }
        let mut ratio: Option<BigUint> = None;
        for ((x, m), (y, n)) in self.entries.iter().zip(other.entries.iter()) {
            if x != y {
                return false;
            }
            let (q, r) = num_integer::Integer::div_rem(m, n);
            if !r.is_zero() {
                return false;
            }
            match &ratio {
                None => ratio = Some(q),
                Some(c) if *c == q => {}
                _ => return false,
            }
        }
        true
    }

    /// Signed view of the multiset as a group-algebra vector.
    pub fn to_vector(&self) -> AlgebraVector {
        AlgebraVector {
            coeffs: self
                .entries
                .iter()
                .map(|(x, m)| (x.clone(), BigInt::from(m.clone())))
                .collect(),
        }
    }
}

/// A finitely supported integer-coefficient vector in the group algebra.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct AlgebraVector {
    coeffs: BTreeMap<GroupElement, BigInt>,
}

impl AlgebraVector {
    pub fn zero() -> Self {
        AlgebraVector { coeffs: BTreeMap::new() }
    }

    pub fn delta(x: GroupElement) -> Self {
        let mut v = AlgebraVector::zero();
        v.add(x, BigInt::one());
        v
    }

    pub fn add(&mut self, x: GroupElement, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(x.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&x);
        }
    }

    pub fn coefficient(&self, x: &GroupElement) -> BigInt {
        self.coeffs.get(x).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GroupElement, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The ring homomorphism to Z sending every group element to 1.
    pub fn coefficient_sum(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// self - other, as vectors.
    pub fn sub(&self, other: &AlgebraVector) -> AlgebraVector {
        let mut out = self.clone();
        for (x, c) in &other.coeffs {
            out.add(x.clone(), -c.clone());
        }
        out
    }

    pub fn plus(&self, other: &AlgebraVector) -> AlgebraVector {
        let mut out = self.clone();
        for (x, c) in &other.coeffs {
            out.add(x.clone(), c.clone());
        }
        out
    }
}

/// Group-algebra convolution: (f * g)(z) = sum over xy = z of f(x) g(y).
pub fn convolve(spec: &GroupSpec, f: &AlgebraVector, g: &AlgebraVector) -> AlgebraVector {
    let mut out = AlgebraVector::zero();
    for (x, cf) in &f.coeffs {
        for (y, cg) in &g.coeffs {
            out.add(spec.mul(x, y), cf * cg);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{AbelianGroup, Q8Elem};
    use num_traits::ToPrimitive;

    fn z5() -> GroupSpec {
        GroupSpec::abelian(AbelianGroup::new(vec![5]).unwrap())
    }

    fn el(spec: &GroupSpec, r: i64) -> GroupElement {
        spec.element(Q8Elem::One, &[r]).unwrap()
    }

    #[test]
    fn inverse_closed_checks() {
        let spec = z5();
        let mut s = GMultiset::new();
        s.add(el(&spec, 1), 2u32.into());
        s.add(el(&spec, 4), 2u32.into());
        assert!(s.is_inverse_closed(&spec));

        let mut t = GMultiset::new();
        t.add(el(&spec, 1), 2u32.into());
        t.add(el(&spec, 4), 1u32.into());
        assert!(!t.is_inverse_closed(&spec));
        assert!(t.inverse_closure_witness(&spec).is_some());
    }

    #[test]
    fn convolve_identity_is_neutral() {
        let spec = z5();
        let mut g = AlgebraVector::zero();
        g.add(el(&spec, 1), 3.into());
        g.add(el(&spec, 2), (-4).into());
        let delta = AlgebraVector::delta(spec.identity());
        assert_eq!(convolve(&spec, &delta, &g), g);
    }

    #[test]
    fn convolve_square_example() {
        // (a - a^4)^2 = a^2 - 2e + a^3 over Z5
        let spec = z5();
        let mut f = AlgebraVector::zero();
        f.add(el(&spec, 1), 1.into());
        f.add(el(&spec, 4), (-1).into());
        let sq = convolve(&spec, &f, &f);
        assert_eq!(sq.coefficient(&spec.identity()).to_i64(), Some(-2));
        assert_eq!(sq.coefficient(&el(&spec, 2)).to_i64(), Some(1));
        assert_eq!(sq.coefficient(&el(&spec, 3)).to_i64(), Some(1));
        assert_eq!(sq.coefficient(&el(&spec, 1)).to_i64(), Some(0));
        assert_eq!(sq.coefficient(&el(&spec, 4)).to_i64(), Some(0));
        // coefficient sums multiply: 0 * 0 = 0
        assert_eq!(sq.coefficient_sum(), BigInt::from(0));
    }

    #[test]
    fn multiset_algebra_ops() {
        let spec = z5();
        let mut s = GMultiset::new();
        s.add(el(&spec, 1), 4u32.into());
        s.add(el(&spec, 2), 3u32.into());
        let inv = s.inverse(&spec);
        assert_eq!(inv.multiplicity(&el(&spec, 4)), 4u32.into());
        assert_eq!(inv.multiplicity(&el(&spec, 3)), 3u32.into());

        let both = s.sum(&inv);
        assert_eq!(both.total(), 14u32.into());

        let meet = s.pointwise_min(&inv);
        assert!(meet.is_empty());

        let diff = s.checked_sub(&s).unwrap();
        assert!(diff.is_empty());
        assert!(inv.checked_sub(&s).is_none());
    }

    #[test]
    fn multiple_detection() {
        let spec = z5();
        let mut s = GMultiset::new();
        s.add(el(&spec, 1), 2u32.into());
        s.add(el(&spec, 4), 4u32.into());
        let mut t = GMultiset::new();
        t.add(el(&spec, 1), 1u32.into());
        t.add(el(&spec, 4), 2u32.into());
        assert!(s.is_integer_multiple_of(&t));
        assert!(!t.is_integer_multiple_of(&s));
        let mut u = GMultiset::new();
        u.add(el(&spec, 1), 1u32.into());
        u.add(el(&spec, 3), 2u32.into());
        assert!(!s.is_integer_multiple_of(&u));
    }
}
