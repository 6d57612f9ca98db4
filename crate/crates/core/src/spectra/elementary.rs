//! Analysis of generating multisets over Q8 x C_p^d (p prime, d >= 2) with
//! B_1 = B_{-1} empty.
//!
//! The degree-2 condition value at a character lambda can be computed
//! inside the group algebra: with B'_q = B_q minus the pointwise minimum
//! with B_{-q}, the element T = sum over q in {i,j,k} of
//! (B'_q - B'_{-q}) * (B'_q - B'_{-q}) carries all of it. Integrality
//! forces the off-identity coefficients a_g of T to be constant on each
//! nontrivial atom A_r (value b_r), and for each non-principal character
//! (kernel = hyperplane) the quantity alpha^2 = p * sum of b_r over atoms
//! outside the kernel must be a perfect square.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::atom_partition;
use crate::groups::{convolve, AlgebraVector, GMultiset, GroupElement, GroupSpec, Q8Elem};
use crate::numutil::{is_prime, perfect_square_root};

use super::{characters, extract_bq, SpectraError};

/// Per-hyperplane outcome: alpha^2 = p * sum of b_r over atoms outside the
/// kernel of the character, and whether it is a perfect square.
#[derive(Clone, Debug)]
pub struct HyperplaneCheck {
    /// Index of a character whose kernel is this hyperplane.
    pub character_index: Vec<u64>,
    pub alpha_squared: BigInt,
    /// Integer square root when alpha^2 is a perfect square.
    pub alpha: Option<BigInt>,
}

#[derive(Clone, Debug)]
pub struct ElementaryReport {
    /// Whether the off-identity coefficients of T are constant on every
    /// nontrivial atom.
    pub atom_constant: bool,
    /// Two elements of one atom with differing coefficients, when not.
    pub nonconstant_witness: Option<(GroupElement, GroupElement, BigInt, BigInt)>,
    /// The common values b_r, one per nontrivial atom in class order
    /// (meaningful only when `atom_constant`).
    pub atom_values: Vec<BigInt>,
    /// One check per hyperplane (kernel of a non-principal character);
    /// empty when `atom_constant` is false.
    pub hyperplanes: Vec<HyperplaneCheck>,
    pub all_squares: bool,
    /// T(e), the coefficient of the identity.
    pub identity_coefficient: BigInt,
    /// -(sum over q and x of B'_q(x)^2 + B'_{-q}(x)^2); equals
    /// -2(|B'_i| + |B'_j| + |B'_k|) for simple multisets.
    pub expected_identity_coefficient: BigInt,
    pub identity_ok: bool,
    /// Sum of the off-identity coefficients of T.
    pub off_identity_sum: BigInt,
    pub coefficient_sum_ok: bool,
}

/// Runs the elementary-abelian analysis. Preconditions: the spec is
/// Q8 x C_p^d with p prime and d >= 2, S is inverse-closed, and
/// B_1 = B_{-1} are empty.
pub fn elementary_abelian_analysis(
    spec: &GroupSpec,
    s: &GMultiset,
) -> Result<ElementaryReport, SpectraError> {
    if !spec.is_quaternion_product() {
        return Err(SpectraError::NotQuaternionProduct);
    }
    let group = spec.abelian_part();
    let factors = group.factors();
    if factors.len() < 2 {
        return Err(SpectraError::Precondition(
            "abelian part must be C_p^d with d >= 2".into(),
        ));
    }
    let p = factors[0];
    if !is_prime(p) || factors.iter().any(|&n| n != p) {
        return Err(SpectraError::Precondition(
            "abelian part must be a power of a single prime cyclic factor".into(),
        ));
    }
    if let Some(w) = s.inverse_closure_witness(spec) {
        return Err(SpectraError::NotInverseClosed(w));
    }
    let split = extract_bq(spec, s)?;
    if !split.part(Q8Elem::One).is_empty() || !split.part(Q8Elem::MinusOne).is_empty() {
        return Err(SpectraError::Precondition(
            "B_1 and B_-1 must be empty".into(),
        ));
    }

    let sub = spec.abelian_subspec();
    let mut t = AlgebraVector::zero();
    let mut weight = BigInt::zero();
    for q in [Q8Elem::I, Q8Elem::J, Q8Elem::K] {
        let b_q = split.part(q);
        let b_neg = split.part(q.negate());
        let meet = b_q.pointwise_min(b_neg);
        let bp_q = b_q.checked_sub(&meet).expect("min is pointwise below");
        let bp_neg = b_neg.checked_sub(&meet).expect("min is pointwise below");
        for part in [&bp_q, &bp_neg] {
            for (_, mult) in part.iter() {
                let m = BigInt::from(mult.clone());
                weight += &m * &m;
            }
        }
        let f = bp_q.to_vector().sub(&bp_neg.to_vector());
        t = t.plus(&convolve(&sub, &f, &f));
    }

    let identity_coefficient = t.coefficient(&sub.identity());
    let expected_identity_coefficient = -weight.clone();
    let identity_ok = identity_coefficient == expected_identity_coefficient;
    let off_identity_sum = t.coefficient_sum() - &identity_coefficient;
    let coefficient_sum_ok = off_identity_sum == weight;

    // constancy of the off-identity coefficients on nontrivial atoms
    let partition = atom_partition(&sub);
    let mut atom_constant = true;
    let mut nonconstant_witness = None;
    let mut atom_values = Vec::new();
    for class in partition.classes() {
        if class.len() == 1 && class[0] == sub.identity() {
            continue;
        }
        let first = &class[0];
        let value = t.coefficient(first);
        for x in class.iter().skip(1) {
            let other = t.coefficient(x);
            if other != value {
                atom_constant = false;
                if nonconstant_witness.is_none() {
                    nonconstant_witness =
                        Some((first.clone(), x.clone(), value.clone(), other.clone()));
                }
            }
        }
        atom_values.push(value);
    }

    // one check per hyperplane: kernels of non-principal characters
    let mut hyperplanes = Vec::new();
    let mut all_squares = atom_constant;
    if atom_constant {
        let nontrivial_classes: Vec<&Vec<GroupElement>> = partition
            .classes()
            .iter()
            .filter(|c| !(c.len() == 1 && c[0] == sub.identity()))
            .collect();
        let mut seen_kernels: BTreeSet<Vec<GroupElement>> = BTreeSet::new();
        for chi in characters(group) {
            if chi.is_principal() {
                continue;
            }
            let kernel: Vec<GroupElement> = sub
                .elements()
                .into_iter()
                .filter(|x| chi.exponent_of(group, x) == 0)
                .collect();
            if !seen_kernels.insert(kernel.clone()) {
                continue;
            }
            let kernel_set: BTreeSet<&GroupElement> = kernel.iter().collect();
            let mut alpha_squared = BigInt::zero();
            for (class, value) in nontrivial_classes.iter().zip(&atom_values) {
                let inside = class.iter().all(|x| kernel_set.contains(x));
                if !inside {
                    alpha_squared += value;
                }
            }
            alpha_squared *= BigInt::from(p);
            let alpha = perfect_square_root(&alpha_squared);
            all_squares &= alpha.is_some();
            hyperplanes.push(HyperplaneCheck {
                character_index: chi.index().to_vec(),
                alpha_squared,
                alpha,
            });
        }
    }

    Ok(ElementaryReport {
        atom_constant,
        nonconstant_witness,
        atom_values,
        hyperplanes,
        all_squares,
        identity_coefficient,
        expected_identity_coefficient,
        identity_ok,
        off_identity_sum,
        coefficient_sum_ok,
    })
}
