//! Finite group arithmetic for abelian groups Z_{n1} x ... x Z_{nk}, the
//! quaternion group Q8, and direct products Q8 x A, together with multisets
//! of group elements and group-algebra convolution.
//!
//! All types are immutable values after construction and can be shared
//! freely across threads.

mod multiset;
pub mod parse;
mod q8;

pub use multiset::{convolve, AlgebraVector, GMultiset};
pub use q8::{table_satisfies_relations, Q8Elem, Q8Table, Q8_ELEMENTS, Q8_MUL};

use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("invalid cyclic factor {0} (factors must be >= 2)")]
    InvalidFactor(u64),
    #[error("bad group spec: {0}")]
    BadSpec(String),
    #[error("bad element literal `{0}`: {1}")]
    BadElement(String, String),
    #[error("multiset line {line}: {message}")]
    BadMultisetLine { line: usize, message: String },
}

/// A finite abelian group presented as an explicit list of cyclic factors.
///
/// The factor list is kept exactly as given (no normalization to invariant
/// factors), so isomorphic presentations are distinct specs with stable
/// element encodings.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AbelianGroup {
    factors: Vec<u64>,
}

impl AbelianGroup {
    /// Builds the group Z_{n1} x ... x Z_{nk}; the empty list is the trivial group.
    pub fn new(factors: Vec<u64>) -> Result<Self, GroupError> {
        if let Some(&bad) = factors.iter().find(|&&n| n < 2) {
            return Err(GroupError::InvalidFactor(bad));
        }
        Ok(AbelianGroup { factors })
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    /// The exponent m = lcm of the factors (1 for the trivial group).
    pub fn exponent(&self) -> u64 {
        self.factors.iter().fold(1u64, |m, &n| m.lcm(&n))
    }

    /// True iff the group has an element of order 4, i.e. some factor is
    /// divisible by 4.
    pub fn has_element_of_order_4(&self) -> bool {
        self.factors.iter().any(|&n| n % 4 == 0)
    }

    /// All residue tuples in lexicographic (odometer) order.
    pub fn tuples(&self) -> Vec<Vec<u64>> {
        let mut out = Vec::with_capacity(self.order() as usize);
        let mut cur = vec![0u64; self.factors.len()];
        loop {
            out.push(cur.clone());
            // odometer increment from the last coordinate
            let mut pos = self.factors.len();
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                cur[pos] += 1;
                if cur[pos] < self.factors[pos] {
                    break;
                }
                cur[pos] = 0;
            }
        }
    }
}

/// An element of a [`GroupSpec`]: a quaternion unit (fixed to 1 for abelian
/// specs) and a tuple of residues, one per cyclic factor.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GroupElement {
    q: Q8Elem,
    a: Vec<u64>,
}

impl GroupElement {
    pub fn q(&self) -> Q8Elem {
        self.q
    }

    pub fn residues(&self) -> &[u64] {
        &self.a
    }
}

/// The universe the library works over: a finite abelian group or a direct
/// product Q8 x A.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupSpec {
    quaternion: bool,
    abelian: AbelianGroup,
}

impl GroupSpec {
    pub fn abelian(a: AbelianGroup) -> Self {
        GroupSpec { quaternion: false, abelian: a }
    }

    pub fn quaternion_product(a: AbelianGroup) -> Self {
        GroupSpec { quaternion: true, abelian: a }
    }

    pub fn is_quaternion_product(&self) -> bool {
        self.quaternion
    }

    pub fn abelian_part(&self) -> &AbelianGroup {
        &self.abelian
    }

    /// The abelian part as its own spec (the home of the B_q multisets).
    pub fn abelian_subspec(&self) -> GroupSpec {
        GroupSpec::abelian(self.abelian.clone())
    }

    pub fn order(&self) -> u64 {
        if self.quaternion {
            8 * self.abelian.order()
        } else {
            self.abelian.order()
        }
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement { q: Q8Elem::One, a: vec![0; self.abelian.rank()] }
    }

    /// Builds an element, reducing residues modulo the factors.
    pub fn element(&self, q: Q8Elem, residues: &[i64]) -> Result<GroupElement, GroupError> {
        if residues.len() != self.abelian.rank() {
            return Err(GroupError::BadElement(
                format!("{:?}", residues),
                format!("expected {} residues, got {}", self.abelian.rank(), residues.len()),
            ));
        }
        if !self.quaternion && q != Q8Elem::One {
            return Err(GroupError::BadElement(
                q.symbol().to_string(),
                "quaternion component not allowed in an abelian spec".into(),
            ));
        }
        let a = residues
            .iter()
            .zip(self.abelian.factors())
            .map(|(&c, &n)| c.rem_euclid(n as i64) as u64)
            .collect();
        Ok(GroupElement { q, a })
    }

    /// Convenience constructor for abelian elements from unsigned residues.
    pub fn abelian_element(&self, residues: &[u64]) -> Result<GroupElement, GroupError> {
        let signed: Vec<i64> = residues.iter().map(|&c| c as i64).collect();
        self.element(Q8Elem::One, &signed)
    }

    /// Validates that an element belongs to this spec.
    pub fn check_element(&self, x: &GroupElement) -> Result<(), GroupError> {
        if x.a.len() != self.abelian.rank() {
            return Err(GroupError::BadElement(
                format!("{:?}", x),
                format!("expected {} residues, got {}", self.abelian.rank(), x.a.len()),
            ));
        }
        if !self.quaternion && x.q != Q8Elem::One {
            return Err(GroupError::BadElement(
                format!("{:?}", x),
                "quaternion component not allowed in an abelian spec".into(),
            ));
        }
        for (&c, &n) in x.a.iter().zip(self.abelian.factors()) {
            if c >= n {
                return Err(GroupError::BadElement(
                    format!("{:?}", x),
                    format!("residue {} out of range for Z{}", c, n),
                ));
            }
        }
        Ok(())
    }

    fn assert_element(&self, x: &GroupElement) {
        if let Err(e) = self.check_element(x) {
            panic!("invalid element for spec: {e}");
        }
    }

    /// All elements in canonical order: quaternion unit outermost (1, -1, i,
    /// -i, j, -j, k, -k), residue tuples lexicographic within.
    pub fn elements(&self) -> Vec<GroupElement> {
        let tuples = self.abelian.tuples();
        let qs: &[Q8Elem] = if self.quaternion { &Q8_ELEMENTS } else { &Q8_ELEMENTS[..1] };
        let mut out = Vec::with_capacity(self.order() as usize);
        for &q in qs {
            for t in &tuples {
                out.push(GroupElement { q, a: t.clone() });
            }
        }
        out
    }

    /// The group operation: Q8 component via the fixed table, abelian
    /// component via residue addition. Panics on elements that do not belong
    /// to this spec.
    pub fn mul(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        self.assert_element(x);
        self.assert_element(y);
        let a = x
            .a
            .iter()
            .zip(&y.a)
            .zip(self.abelian.factors())
            .map(|((&u, &v), &n)| (u + v) % n)
            .collect();
        GroupElement { q: x.q.mul(y.q), a }
    }

    pub fn inv(&self, x: &GroupElement) -> GroupElement {
        self.assert_element(x);
        let a = x
            .a
            .iter()
            .zip(self.abelian.factors())
            .map(|(&u, &n)| (n - u) % n)
            .collect();
        GroupElement { q: x.q.inv(), a }
    }

    /// Smallest t >= 1 with x^t = identity.
    pub fn element_order(&self, x: &GroupElement) -> u64 {
        let e = self.identity();
        let mut acc = x.clone();
        let mut t = 1u64;
        while acc != e {
            acc = self.mul(&acc, x);
            t += 1;
        }
        t
    }

    /// x^n for any integer n.
    pub fn pow(&self, x: &GroupElement, n: i64) -> GroupElement {
        let base = if n < 0 { self.inv(x) } else { x.clone() };
        let mut acc = self.identity();
        for _ in 0..n.unsigned_abs() {
            acc = self.mul(&acc, &base);
        }
        acc
    }

    /// The conjugacy class of x (a singleton for abelian specs).
    pub fn conjugacy_class(&self, x: &GroupElement) -> Vec<GroupElement> {
        if !self.quaternion {
            return vec![x.clone()];
        }
        // conjugation fixes the abelian component; the Q8 component ranges
        // over the Q8 conjugacy class
        let mut out: Vec<GroupElement> = Vec::new();
        for &g in &Q8_ELEMENTS {
            let conj = g.mul(x.q).mul(g.inv());
            let cand = GroupElement { q: conj, a: x.a.clone() };
            if !out.contains(&cand) {
                out.push(cand);
            }
        }
        out.sort();
        out
    }

    /// True iff the group is hamiltonian: a product Q8 x A with A containing
    /// no element of order 4.
    pub fn is_hamiltonian(&self) -> bool {
        self.quaternion && !self.abelian.has_element_of_order_4()
    }
}
