//! The boolean algebra generated by normal subgroups: normal closures N(x),
//! the partition of the group into atoms, and membership tests for sets
//! (union of atoms) and multisets (integral cone).

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::Zero;

use crate::groups::{GMultiset, GroupElement, GroupSpec};

/// The smallest normal subgroup containing `x`, computed as the subgroup
/// closure of the conjugacy class of `x`. For abelian specs this is the
/// cyclic subgroup generated by `x`.
pub fn normal_closure(spec: &GroupSpec, x: &GroupElement) -> BTreeSet<GroupElement> {
    let generators = spec.conjugacy_class(x);
    let mut closed: BTreeSet<GroupElement> = BTreeSet::new();
    closed.insert(spec.identity());
    let mut frontier: Vec<GroupElement> = vec![spec.identity()];
    while let Some(g) = frontier.pop() {
        for s in &generators {
            let next = spec.mul(&g, s);
            if closed.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    closed
}

/// The partition of the group into atoms of the boolean algebra of normal
/// subgroups: classes of the relation N(x) = N(y).
///
/// Classes are ordered by (|N(x)|, minimal element); elements within a class
/// follow canonical element order.
#[derive(Clone, Debug)]
pub struct AtomPartition {
    classes: Vec<Vec<GroupElement>>,
    subgroup_orders: Vec<u64>,
    index: BTreeMap<GroupElement, usize>,
}

impl AtomPartition {
    pub fn classes(&self) -> &[Vec<GroupElement>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// The id of the atom containing `x`.
    pub fn class_of(&self, x: &GroupElement) -> usize {
        self.index[x]
    }

    /// |N(x)| for the representatives of class `id`.
    pub fn subgroup_order(&self, id: usize) -> u64 {
        self.subgroup_orders[id]
    }
}

pub fn atom_partition(spec: &GroupSpec) -> AtomPartition {
    let mut by_closure: BTreeMap<Vec<GroupElement>, Vec<GroupElement>> = BTreeMap::new();
    for x in spec.elements() {
        let n: Vec<GroupElement> = normal_closure(spec, &x).into_iter().collect();
        by_closure.entry(n).or_default().push(x);
    }
    let mut classes: Vec<(u64, Vec<GroupElement>)> = by_closure
        .into_iter()
        .map(|(n, mut members)| {
            members.sort();
            (n.len() as u64, members)
        })
        .collect();
    classes.sort_by(|a, b| (a.0, &a.1[0]).cmp(&(b.0, &b.1[0])));
    let mut index = BTreeMap::new();
    for (id, (_, members)) in classes.iter().enumerate() {
        for x in members {
            index.insert(x.clone(), id);
        }
    }
    let (subgroup_orders, classes) = classes.into_iter().unzip();
    AtomPartition { classes, subgroup_orders, index }
}

/// True iff `set` is a union of atoms.
pub fn in_boolean_algebra(spec: &GroupSpec, set: &BTreeSet<GroupElement>) -> bool {
    let partition = atom_partition(spec);
    in_boolean_algebra_with(&partition, set)
}

pub fn in_boolean_algebra_with(partition: &AtomPartition, set: &BTreeSet<GroupElement>) -> bool {
    let touched: BTreeSet<usize> = set.iter().map(|x| partition.class_of(x)).collect();
    touched
        .into_iter()
        .all(|id| partition.classes()[id].iter().all(|x| set.contains(x)))
}

/// A certificate that a multiset lies in the integral cone: one non-negative
/// coefficient per atom (zero coefficients omitted). Reconstructing the
/// multiset from the certificate reproduces the input exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeCertificate {
    coefficients: BTreeMap<usize, BigUint>,
}

impl ConeCertificate {
    pub fn coefficients(&self) -> &BTreeMap<usize, BigUint> {
        &self.coefficients
    }

    pub fn reconstruct(&self, partition: &AtomPartition) -> GMultiset {
        let mut s = GMultiset::new();
        for (&id, coeff) in &self.coefficients {
            for x in &partition.classes()[id] {
                s.add(x.clone(), coeff.clone());
            }
        }
        s
    }
}

/// Witness that a multiset is not in the cone: the first atom on which the
/// multiplicity function is non-constant, with a differing element pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeFailure {
    pub class_id: usize,
    pub witness: (GroupElement, GroupElement),
    pub multiplicities: (BigUint, BigUint),
}

/// Decides membership in the integral cone: succeeds iff the multiplicity
/// function is constant on every atom.
pub fn cone_decompose(spec: &GroupSpec, s: &GMultiset) -> Result<ConeCertificate, ConeFailure> {
    let partition = atom_partition(spec);
    cone_decompose_with(&partition, s)
}

pub fn cone_decompose_with(
    partition: &AtomPartition,
    s: &GMultiset,
) -> Result<ConeCertificate, ConeFailure> {
    let mut coefficients = BTreeMap::new();
    for (id, class) in partition.classes().iter().enumerate() {
        let first = &class[0];
        let value = s.multiplicity(first);
        for x in class.iter().skip(1) {
            let other = s.multiplicity(x);
            if other != value {
                return Err(ConeFailure {
                    class_id: id,
                    witness: (first.clone(), x.clone()),
                    multiplicities: (value, other),
                });
            }
        }
        if !value.is_zero() {
            coefficients.insert(id, value);
        }
    }
    Ok(ConeCertificate { coefficients })
}
