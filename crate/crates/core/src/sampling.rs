//! Seeded random generators for inverse-closed multisets, subsets, and
//! cone members. All draws are deterministic functions of the supplied RNG,
//! so suites taking an explicit seed reproduce byte-identical results.

use num_bigint::BigUint;
use rand::Rng;

use crate::algebra::AtomPartition;
use crate::groups::{GMultiset, GroupElement, GroupSpec};

/// A random inverse-closed multiset: each inverse-pair orbit independently
/// receives a multiplicity in 0..=max_mult (0 meaning absent), assigned to
/// both members.
pub fn inverse_closed_multiset<R: Rng>(
    spec: &GroupSpec,
    rng: &mut R,
    max_mult: u64,
) -> GMultiset {
    let mut s = GMultiset::new();
    for x in spec.elements() {
        let inv = spec.inv(&x);
        if x <= inv {
            let mult = rng.gen_range(0..=max_mult);
            if mult > 0 {
                s.add(x.clone(), BigUint::from(mult));
                if inv != x {
                    s.add(inv, BigUint::from(mult));
                }
            }
        }
    }
    s
}

/// A random inverse-closed subset (multiplicities 0 or 1).
pub fn inverse_closed_subset<R: Rng>(spec: &GroupSpec, rng: &mut R) -> GMultiset {
    inverse_closed_multiset(spec, rng, 1)
}

/// A random member of the integral cone: one coefficient in 0..=max_coeff
/// per atom accepted by `eligible`.
pub fn cone_member<R: Rng, F: Fn(&[GroupElement]) -> bool>(
    partition: &AtomPartition,
    rng: &mut R,
    max_coeff: u64,
    eligible: F,
) -> GMultiset {
    let mut s = GMultiset::new();
    for class in partition.classes() {
        if !eligible(class) {
            continue;
        }
        let coeff = rng.gen_range(0..=max_coeff);
        if coeff > 0 {
            for x in class {
                s.add(x.clone(), BigUint::from(coeff));
            }
        }
    }
    s
}

/// A random union of atoms, as a 0/1 multiset.
pub fn atom_union<R: Rng>(partition: &AtomPartition, rng: &mut R) -> GMultiset {
    cone_member(partition, rng, 1, |_| true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{atom_partition, cone_decompose_with};
    use crate::groups::parse::parse_group_spec;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sampled_multisets_are_inverse_closed() {
        for name in ["Z12", "Q8xZ3", "Q8xZ2xZ2"] {
            let spec = parse_group_spec(name).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(5);
            for _ in 0..25 {
                let s = inverse_closed_multiset(&spec, &mut rng, 3);
                assert!(s.is_inverse_closed(&spec));
            }
        }
    }

    #[test]
    fn subsets_are_simple() {
        let spec = parse_group_spec("Q8xZ5").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..10 {
            let s = inverse_closed_subset(&spec, &mut rng);
            assert!(s.is_simple());
            assert!(s.is_inverse_closed(&spec));
        }
    }

    #[test]
    fn cone_members_decompose() {
        let spec = parse_group_spec("Q8xZ3xZ3").unwrap();
        let partition = atom_partition(&spec);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let s = cone_member(&partition, &mut rng, 3, |_| true);
            assert!(cone_decompose_with(&partition, &s).is_ok());
            assert!(s.is_inverse_closed(&spec));
        }
    }

    #[test]
    fn draws_are_seed_deterministic() {
        let spec = parse_group_spec("Q8xZ5").unwrap();
        let a = inverse_closed_multiset(&spec, &mut ChaCha8Rng::seed_from_u64(9), 3);
        let b = inverse_closed_multiset(&spec, &mut ChaCha8Rng::seed_from_u64(9), 3);
        assert_eq!(a, b);
        let c = inverse_closed_multiset(&spec, &mut ChaCha8Rng::seed_from_u64(10), 3);
        assert_ne!(a, c);
    }
}
