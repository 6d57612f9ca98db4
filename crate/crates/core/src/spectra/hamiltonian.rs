//! Spectra and integrality conditions for Cayley multigraphs over Q8 x A.
//!
//! A generating multiset S splits into eight multisets B_q over A, one per
//! quaternion unit. The four linear representations contribute eigenvalues
//! sum over q of lambda(B_q) rho(q); the degree-2 block contributes the pair
//! lambdahat(B_1) +- alpha with alpha^2 = -(lambdahat(B_i)^2 +
//! lambdahat(B_j)^2 + lambdahat(B_k)^2), each branch with multiplicity 2.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::algebra::{atom_partition, cone_decompose_with, ConeFailure};
use crate::cyclotomic::{CycContext, CycInt};
use crate::groups::{AbelianGroup, GMultiset, GroupSpec, Q8Elem};
use crate::numutil::perfect_square_root;

use super::value::{SpectralValue, Spectrum};
use super::q8table::Q8Irrep;
use super::{char_sum, characters, Character, SpectraError};

/// The eight multisets B_q over the abelian part of a Q8 x A spec:
/// B_q(a) = mu_S((q, a)).
#[derive(Clone, Debug)]
pub struct BqSplit {
    parts: [GMultiset; 8],
}

impl BqSplit {
    pub fn part(&self, q: Q8Elem) -> &GMultiset {
        &self.parts[q.index()]
    }

    pub fn parts(&self) -> &[GMultiset; 8] {
        &self.parts
    }
}

/// Splits a multiset over Q8 x A by quaternion unit. The parts live over the
/// abelian subspec.
pub fn extract_bq(spec: &GroupSpec, s: &GMultiset) -> Result<BqSplit, SpectraError> {
    if !spec.is_quaternion_product() {
        return Err(SpectraError::NotQuaternionProduct);
    }
    let sub = spec.abelian_subspec();
    let mut parts: [GMultiset; 8] = Default::default();
    for (x, mult) in s.iter() {
        let a = sub
            .abelian_element(x.residues())
            .expect("residues already reduced");
        parts[x.q().index()].add(a, mult.clone());
    }
    Ok(BqSplit { parts })
}

/// lambdahat(B_q) = lambda(B_q) - lambda(B_{-q}), evaluated exactly in
/// Z[zeta_m].
pub fn lambda_hat(
    group: &AbelianGroup,
    ctx: &CycContext,
    chi: &Character,
    b_q: &GMultiset,
    b_neg_q: &GMultiset,
) -> CycInt {
    ctx.sub(
        &char_sum(group, ctx, chi, b_q),
        &char_sum(group, ctx, chi, b_neg_q),
    )
}

/// A cone-membership failure witness attached to the quaternion unit whose
/// multiset caused it.
#[derive(Clone, Debug)]
pub struct ConditionWitness {
    pub q: Q8Elem,
    pub failure: ConeFailure,
}

/// Per-character outcome of the degree-2 condition: the value
/// h = lambdahat(B_i)^2 + lambdahat(B_j)^2 + lambdahat(B_k)^2 must be a
/// negative square of an integer (zero counts as -0^2).
#[derive(Clone, Debug)]
pub struct CharacterIii {
    pub index: Vec<u64>,
    pub h: CycInt,
    pub h_rational: Option<BigInt>,
    pub alpha: Option<BigInt>,
    pub ok: bool,
}

impl CharacterIii {
    pub fn label(&self) -> String {
        Character::new(self.index.clone()).label()
    }
}

/// The full report of the three integrality conditions for Q8 x A.
#[derive(Clone, Debug)]
pub struct HamiltonianReport {
    /// B_1 and B_{-1} lie in the cone over A.
    pub cond_i: bool,
    pub cond_i_witness: Option<ConditionWitness>,
    /// B_q + B_{-q} lies in the cone over A for q in {i, j, k}.
    pub cond_ii: bool,
    pub cond_ii_witness: Option<ConditionWitness>,
    /// h is a negative square of an integer at every character of A.
    pub cond_iii: bool,
    pub characters: Vec<CharacterIii>,
    pub overall: bool,
}

impl HamiltonianReport {
    /// The first failing character entry, if any.
    pub fn cond_iii_witness(&self) -> Option<&CharacterIii> {
        self.characters.iter().find(|c| !c.ok)
    }
}

/// Evaluates the three conditions that characterize integrality over Q8 x A.
pub fn hamiltonian_conditions(
    spec: &GroupSpec,
    s: &GMultiset,
) -> Result<HamiltonianReport, SpectraError> {
    if !spec.is_quaternion_product() {
        return Err(SpectraError::NotQuaternionProduct);
    }
    if let Some(w) = s.inverse_closure_witness(spec) {
        return Err(SpectraError::NotInverseClosed(w));
    }
    let group = spec.abelian_part();
    let sub = spec.abelian_subspec();
    let split = extract_bq(spec, s)?;
    let partition = atom_partition(&sub);

    let mut cond_i = true;
    let mut cond_i_witness = None;
    for q in [Q8Elem::One, Q8Elem::MinusOne] {
        if let Err(failure) = cone_decompose_with(&partition, split.part(q)) {
            cond_i = false;
            cond_i_witness = Some(ConditionWitness { q, failure });
            break;
        }
    }

    let mut cond_ii = true;
    let mut cond_ii_witness = None;
    for q in [Q8Elem::I, Q8Elem::J, Q8Elem::K] {
        let union = split.part(q).sum(split.part(q.negate()));
        if let Err(failure) = cone_decompose_with(&partition, &union) {
            cond_ii = false;
            cond_ii_witness = Some(ConditionWitness { q, failure });
            break;
        }
    }

    let ctx = CycContext::new(group.exponent());
    let mut entries = Vec::new();
    let mut cond_iii = true;
    for chi in characters(group) {
        let mut h = ctx.zero();
        for q in [Q8Elem::I, Q8Elem::J, Q8Elem::K] {
            let lh = lambda_hat(group, &ctx, &chi, split.part(q), split.part(q.negate()));
            h = ctx.add(&h, &ctx.mul(&lh, &lh));
        }
        let h_rational = ctx.as_rational_integer(&h);
        let alpha = h_rational.as_ref().and_then(|r| {
            if r.is_positive() {
                None
            } else {
                perfect_square_root(&-r)
            }
        });
        let ok = alpha.is_some();
        cond_iii &= ok;
        entries.push(CharacterIii { index: chi.index().to_vec(), h, h_rational, alpha, ok });
    }

    let overall = cond_i && cond_ii && cond_iii;
    Ok(HamiltonianReport {
        cond_i,
        cond_i_witness,
        cond_ii,
        cond_ii_witness,
        cond_iii,
        characters: entries,
        overall,
    })
}

/// Assembles the exact spectrum of Cay(Q8 x A, S) from the representation
/// blocks: four degree-1 eigenvalues per character of A (multiplicity 1
/// each) plus the degree-2 surd pair (each branch with multiplicity 2).
pub fn hamiltonian_spectrum(spec: &GroupSpec, s: &GMultiset) -> Result<Spectrum, SpectraError> {
    if !spec.is_quaternion_product() {
        return Err(SpectraError::NotQuaternionProduct);
    }
    if let Some(w) = s.inverse_closure_witness(spec) {
        return Err(SpectraError::NotInverseClosed(w));
    }
    let group = spec.abelian_part();
    let split = extract_bq(spec, s)?;
    let ctx = CycContext::new(group.exponent());
    let mut raw = Vec::new();
    for chi in characters(group) {
        let values: Vec<CycInt> = crate::groups::Q8_ELEMENTS
            .iter()
            .map(|&q| char_sum(group, &ctx, &chi, split.part(q)))
            .collect();
        for rep in Q8Irrep::LINEAR {
            let mut acc = ctx.zero();
            for &q in &crate::groups::Q8_ELEMENTS {
                let v = &values[q.index()];
                match rep.linear_value(q) {
                    1 => acc = ctx.add(&acc, v),
                    -1 => acc = ctx.sub(&acc, v),
                    other => unreachable!("linear value {other}"),
                }
            }
            raw.push((SpectralValue::Cyclotomic(acc), 1));
        }
        let hat = |q: Q8Elem| {
            ctx.sub(
                &values[q.index()],
                &values[q.negate().index()],
            )
        };
        let base = hat(Q8Elem::One);
        let mut h = ctx.zero();
        for q in [Q8Elem::I, Q8Elem::J, Q8Elem::K] {
            let lh = hat(q);
            h = ctx.add(&h, &ctx.mul(&lh, &lh));
        }
        let radicand = ctx.negate(&h);
        raw.push((SpectralValue::Surd { base, radicand }, 2));
    }
    Ok(Spectrum::from_raw(&ctx, raw))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::parse::parse_group_spec;
    use num_traits::Zero;

    fn golden_multiset() -> (GroupSpec, GMultiset) {
        let spec = parse_group_spec("Q8xZ3").unwrap();
        let s = super::super::tests_support::golden(&spec);
        (spec, s)
    }

    #[test]
    fn split_of_golden_multiset() {
        let (spec, s) = golden_multiset();
        let split = extract_bq(&spec, &s).unwrap();
        let sub = spec.abelian_subspec();
        let one = sub.abelian_element(&[1]).unwrap();
        let two = sub.abelian_element(&[2]).unwrap();
        for q in [Q8Elem::I, Q8Elem::J, Q8Elem::K] {
            assert_eq!(split.part(q).multiplicity(&one), 1u32.into());
            assert_eq!(split.part(q).total(), 1u32.into());
            assert_eq!(split.part(q.negate()).multiplicity(&two), 1u32.into());
        }
        assert!(split.part(Q8Elem::One).is_empty());
        assert!(split.part(Q8Elem::MinusOne).is_empty());
        // totals add up
        let total: num_bigint::BigUint = split.parts().iter().map(|p| p.total()).sum();
        assert_eq!(total, s.total());
    }

    #[test]
    fn split_of_empty_multiset() {
        let spec = parse_group_spec("Q8xZ3").unwrap();
        let split = extract_bq(&spec, &GMultiset::new()).unwrap();
        assert!(split.parts().iter().all(|p| p.is_empty()));
    }

    #[test]
    fn split_requires_quaternion_product() {
        let spec = parse_group_spec("Z6").unwrap();
        assert!(matches!(
            extract_bq(&spec, &GMultiset::new()),
            Err(SpectraError::NotQuaternionProduct)
        ));
    }

    #[test]
    fn inverse_closure_transfers_to_parts() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let spec = parse_group_spec("Q8xZ5").unwrap();
        let sub = spec.abelian_subspec();
        for _ in 0..20 {
            let mut s = GMultiset::new();
            for x in spec.elements() {
                let inv = spec.inv(&x);
                if x <= inv {
                    let m = rng.gen_range(0..2u64);
                    if m > 0 {
                        s.add(x.clone(), m.into());
                        if inv != x {
                            s.add(inv, m.into());
                        }
                    }
                }
            }
            assert!(s.is_inverse_closed(&spec));
            let split = extract_bq(&spec, &s).unwrap();
            for q in [Q8Elem::I, Q8Elem::J, Q8Elem::K] {
                assert_eq!(
                    split.part(q.negate()).clone(),
                    split.part(q).inverse(&sub)
                );
            }
        }
    }

    #[test]
    fn lambda_hat_examples() {
        let group = AbelianGroup::new(vec![3]).unwrap();
        let sub = GroupSpec::abelian(group.clone());
        let ctx = CycContext::new(3);
        let chi = Character::new(vec![1]);
        let mut b_i = GMultiset::new();
        b_i.add(sub.abelian_element(&[1]).unwrap(), 1u32.into());
        let mut b_neg_i = GMultiset::new();
        b_neg_i.add(sub.abelian_element(&[2]).unwrap(), 1u32.into());
        // zeta - zeta^2 reduces to 1 + 2 zeta mod Phi_3
        let v = lambda_hat(&group, &ctx, &chi, &b_i, &b_neg_i);
        assert_eq!(
            v.coefficients(),
            &[BigInt::from(1), BigInt::from(2)][..]
        );
        // equal halves cancel
        assert!(lambda_hat(&group, &ctx, &chi, &b_i, &b_i).is_zero());
        // principal character sees total difference
        let principal = Character::new(vec![0]);
        assert_eq!(
            ctx.as_rational_integer(&lambda_hat(&group, &ctx, &principal, &b_i, &b_neg_i)),
            Some(BigInt::zero())
        );
    }

    #[test]
    fn golden_conditions() {
        let (spec, s) = golden_multiset();
        let report = hamiltonian_conditions(&spec, &s).unwrap();
        assert!(report.cond_i);
        assert!(report.cond_ii);
        assert!(report.cond_iii);
        assert!(report.overall);
        // h = -9 = -(3^2) at the two non-principal characters, 0 at the principal
        assert_eq!(report.characters.len(), 3);
        assert_eq!(report.characters[0].h_rational, Some(BigInt::zero()));
        assert_eq!(report.characters[0].alpha, Some(BigInt::zero()));
        for entry in &report.characters[1..] {
            assert_eq!(entry.h_rational, Some(BigInt::from(-9)));
            assert_eq!(entry.alpha, Some(BigInt::from(3)));
        }
    }

    #[test]
    fn cone_multisets_pass_trivially() {
        // S constant on atoms: all lambdahat vanish, h = 0 = -(0^2)
        let spec = parse_group_spec("Q8xZ3").unwrap();
        let partition = atom_partition(&spec);
        let mut s = GMultiset::new();
        for class in partition.classes() {
            for x in class {
                s.add(x.clone(), 2u32.into());
            }
        }
        let report = hamiltonian_conditions(&spec, &s).unwrap();
        assert!(report.overall);
        assert!(report.characters.iter().all(|c| c.alpha == Some(BigInt::zero())));
    }

    #[test]
    fn condition_iii_failure_names_h() {
        // only the i-pair present: h = (zeta - zeta^2)^2 = -3, not -alpha^2
        let spec = parse_group_spec("Q8xZ3").unwrap();
        let mut s = GMultiset::new();
        s.add(spec.element(Q8Elem::I, &[1]).unwrap(), 1u32.into());
        s.add(spec.element(Q8Elem::MinusI, &[2]).unwrap(), 1u32.into());
        let report = hamiltonian_conditions(&spec, &s).unwrap();
        assert!(!report.overall);
        assert!(!report.cond_iii);
        let witness = report.cond_iii_witness().unwrap();
        assert_eq!(witness.h_rational, Some(BigInt::from(-3)));
        assert_eq!(witness.alpha, None);
        assert_eq!(witness.label(), "a=(1)");
    }

    #[test]
    fn golden_spectrum() {
        let (spec, s) = golden_multiset();
        let spectrum = hamiltonian_spectrum(&spec, &s).unwrap();
        assert_eq!(spectrum.render_line(), "6 x1; 3 x4; 1 x6; 0 x4; -2 x3; -3 x6");
        assert_eq!(spectrum.eigenvalue_count(), 24);
    }

    #[test]
    fn empty_multiset_spectrum() {
        let spec = parse_group_spec("Q8xZ5").unwrap();
        let spectrum = hamiltonian_spectrum(&spec, &GMultiset::new()).unwrap();
        assert_eq!(spectrum.render_line(), "0 x40");
    }

    #[test]
    fn degree_one_eigenvalues_are_self_conjugate() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let spec = parse_group_spec("Q8xZ5").unwrap();
        let group = spec.abelian_part();
        let ctx = CycContext::new(group.exponent());
        for _ in 0..10 {
            let mut s = GMultiset::new();
            for x in spec.elements() {
                let inv = spec.inv(&x);
                if x <= inv {
                    let m = rng.gen_range(0..3u64);
                    if m > 0 {
                        s.add(x.clone(), m.into());
                        if inv != x {
                            s.add(inv, m.into());
                        }
                    }
                }
            }
            let spectrum = hamiltonian_spectrum(&spec, &s).unwrap();
            assert_eq!(spectrum.eigenvalue_count(), 40);
            for (value, _) in spectrum.entries() {
                match value {
                    SpectralValue::Cyclotomic(c) => {
                        assert_eq!(ctx.conjugate(c), c.clone());
                    }
                    SpectralValue::Surd { base, radicand } => {
                        assert_eq!(ctx.conjugate(base), base.clone());
                        assert_eq!(ctx.conjugate(radicand), radicand.clone());
                    }
                    SpectralValue::Rational(_) => {}
                }
            }
        }
    }

    #[test]
    fn is_integral_dispatch() {
        let (spec, s) = golden_multiset();
        assert!(super::super::is_integral(&spec, &s).unwrap());
        let z5 = parse_group_spec("Z5").unwrap();
        let mut c5 = GMultiset::new();
        c5.add(z5.element(Q8Elem::One, &[1]).unwrap(), 1u32.into());
        c5.add(z5.element(Q8Elem::One, &[4]).unwrap(), 1u32.into());
        assert!(!super::super::is_integral(&z5, &c5).unwrap());
    }
}
