//! Characters of finite abelian groups, exact character sums, spectrum
//! assembly for abelian and Q8 x A Cayley multigraphs, and the integrality
//! deciders.

mod elementary;
mod hamiltonian;
mod q8table;
mod value;

pub use elementary::{elementary_abelian_analysis, ElementaryReport, HyperplaneCheck};
pub use hamiltonian::{
    extract_bq, hamiltonian_conditions, hamiltonian_spectrum, lambda_hat, BqSplit,
    CharacterIii, ConditionWitness, HamiltonianReport,
};
pub use q8table::{rho_epsilon, GaussInt, Mat2, Q8Irrep};
pub use value::{SpectralValue, Spectrum};

use num_bigint::BigInt;
use thiserror::Error;

use crate::algebra::{atom_partition, cone_decompose_with};
use crate::cyclotomic::{CycContext, CycInt};
use crate::groups::{AbelianGroup, AlgebraVector, GMultiset, GroupElement, GroupSpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectraError {
    #[error("multiset is not inverse-closed: mu(s) != mu(s^-1) for s = {0:?}")]
    NotInverseClosed(GroupElement),
    #[error(
        "internal inconsistency: character-sum path says integral = {characters_rational}, \
         cone path says member = {cone_member}; these must agree"
    )]
    DualPathMismatch {
        characters_rational: bool,
        cone_member: bool,
    },
    #[error("operation requires a Q8 x A spec")]
    NotQuaternionProduct,
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// A character of an abelian group, indexed by a tuple `a` with
/// a_i in [0, n_i); its value at x is zeta_m^(sum_i (m/n_i) a_i x_i).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Character {
    index: Vec<u64>,
}

impl Character {
    pub fn new(index: Vec<u64>) -> Character {
        Character { index }
    }

    pub fn index(&self) -> &[u64] {
        &self.index
    }

    pub fn is_principal(&self) -> bool {
        self.index.iter().all(|&a| a == 0)
    }

    /// The exponent e with chi(x) = zeta_m^e.
    pub fn exponent_of(&self, group: &AbelianGroup, x: &GroupElement) -> u64 {
        let m = group.exponent();
        debug_assert_eq!(x.residues().len(), group.factors().len());
        let mut e = 0u64;
        for ((&a, &c), &n) in self.index.iter().zip(x.residues()).zip(group.factors()) {
            e = (e + (m / n) * a % m * c) % m;
        }
        e
    }

    pub fn evaluate(&self, group: &AbelianGroup, ctx: &CycContext, x: &GroupElement) -> CycInt {
        ctx.from_root_power(self.exponent_of(group, x) as i64)
    }

    /// Render as `a=(1,0)`.
    pub fn label(&self) -> String {
        let parts: Vec<String> = self.index.iter().map(|a| a.to_string()).collect();
        format!("a=({})", parts.join(","))
    }
}

/// All |A| characters, in lexicographic index order. The principal character
/// comes first.
pub fn characters(group: &AbelianGroup) -> Vec<Character> {
    group.tuples().into_iter().map(Character::new).collect()
}

/// The exact character sum over a multiset: sum of mu(g) chi(g) in Z[zeta_m].
pub fn char_sum(
    group: &AbelianGroup,
    ctx: &CycContext,
    chi: &Character,
    d: &GMultiset,
) -> CycInt {
    ctx.from_exponent_terms(
        d.iter()
            .map(|(g, mult)| (chi.exponent_of(group, g), BigInt::from(mult.clone()))),
    )
}

/// Character sum extended linearly to signed group-algebra vectors.
pub fn char_sum_signed(
    group: &AbelianGroup,
    ctx: &CycContext,
    chi: &Character,
    v: &AlgebraVector,
) -> CycInt {
    ctx.from_exponent_terms(
        v.iter()
            .map(|(g, coeff)| (chi.exponent_of(group, g), coeff.clone())),
    )
}

/// The exact spectrum of an abelian Cayley multigraph: one character sum per
/// character, merged on equal values.
pub fn abelian_spectrum(group: &AbelianGroup, s: &GMultiset) -> Result<Spectrum, SpectraError> {
    let spec = GroupSpec::abelian(group.clone());
    if let Some(w) = s.inverse_closure_witness(&spec) {
        return Err(SpectraError::NotInverseClosed(w));
    }
    let ctx = CycContext::new(group.exponent());
    let raw = characters(group)
        .iter()
        .map(|chi| (SpectralValue::Cyclotomic(char_sum(group, &ctx, chi, s)), 1))
        .collect();
    Ok(Spectrum::from_raw(&ctx, raw))
}

/// Integrality over an abelian group, decided along both characterizations
/// at once: every character sum is a rational integer iff the multiset lies
/// in the integral cone. A disagreement is an implementation bug and is
/// surfaced as a hard error.
pub fn is_integral_abelian(group: &AbelianGroup, s: &GMultiset) -> Result<bool, SpectraError> {
    let spec = GroupSpec::abelian(group.clone());
    if let Some(w) = s.inverse_closure_witness(&spec) {
        return Err(SpectraError::NotInverseClosed(w));
    }
    let ctx = CycContext::new(group.exponent());
    let characters_rational = characters(group)
        .iter()
        .all(|chi| ctx.as_rational_integer(&char_sum(group, &ctx, chi, s)).is_some());
    let partition = atom_partition(&spec);
    let cone_member = cone_decompose_with(&partition, s).is_ok();
    if characters_rational != cone_member {
        return Err(SpectraError::DualPathMismatch { characters_rational, cone_member });
    }
    Ok(cone_member)
}

/// Integrality of Cay(G, S) for any supported spec: the dual-path abelian
/// decider, or the three quaternion-product conditions.
pub fn is_integral(spec: &GroupSpec, s: &GMultiset) -> Result<bool, SpectraError> {
    if spec.is_quaternion_product() {
        Ok(hamiltonian_conditions(spec, s)?.overall)
    } else {
        is_integral_abelian(spec.abelian_part(), s)
    }
}

/// The exact spectrum for any supported spec.
pub fn spectrum(spec: &GroupSpec, s: &GMultiset) -> Result<Spectrum, SpectraError> {
    if spec.is_quaternion_product() {
        hamiltonian_spectrum(spec, s)
    } else {
        abelian_spectrum(spec.abelian_part(), s)
    }
}

#[cfg(test)]
pub(crate) mod tests_support {
    use crate::groups::parse::parse_multiset;
    use crate::groups::{GMultiset, GroupSpec};

    /// The golden generating multiset over Q8 x Z3.
    pub(crate) fn golden(spec: &GroupSpec) -> GMultiset {
        let text = "\
i;(1) : 1
-i;(2) : 1
j;(1) : 1
-j;(2) : 1
k;(1) : 1
-k;(2) : 1
";
        parse_multiset(spec, text).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::Q8Elem;

    fn zn(ns: &[u64]) -> AbelianGroup {
        AbelianGroup::new(ns.to_vec()).unwrap()
    }

    fn multiset(group: &AbelianGroup, rs: &[(i64, u64)]) -> GMultiset {
        let spec = GroupSpec::abelian(group.clone());
        let mut s = GMultiset::new();
        for &(r, m) in rs {
            s.add(spec.element(Q8Elem::One, &[r]).unwrap(), m.into());
        }
        s
    }

    #[test]
    fn characters_are_distinct_homomorphisms() {
        for group in [zn(&[5]), zn(&[2, 2]), zn(&[4, 6])] {
            let spec = GroupSpec::abelian(group.clone());
            let ctx = CycContext::new(group.exponent());
            let chars = characters(&group);
            assert_eq!(chars.len() as u64, group.order());
            let els = spec.elements();
            // multiplicativity and principal value
            for chi in &chars {
                assert_eq!(chi.evaluate(&group, &ctx, &spec.identity()), ctx.one());
                for x in &els {
                    for y in &els {
                        let lhs = chi.evaluate(&group, &ctx, &spec.mul(x, y));
                        let rhs = ctx.mul(
                            &chi.evaluate(&group, &ctx, x),
                            &chi.evaluate(&group, &ctx, y),
                        );
                        assert_eq!(lhs, rhs);
                    }
                }
            }
            // pairwise distinct as value vectors
            let mut tables: Vec<Vec<CycInt>> = chars
                .iter()
                .map(|chi| els.iter().map(|x| chi.evaluate(&group, &ctx, x)).collect())
                .collect();
            tables.sort();
            tables.dedup();
            assert_eq!(tables.len() as u64, group.order());
        }
    }

    #[test]
    fn char_sum_examples() {
        let group = zn(&[5]);
        let ctx = CycContext::new(5);
        let chars = characters(&group);
        let full = multiset(&group, &[(1, 1), (2, 1), (3, 1), (4, 1)]);
        // principal character: total multiplicity
        assert_eq!(
            ctx.as_rational_integer(&char_sum(&group, &ctx, &chars[0], &full)),
            Some(BigInt::from(4))
        );
        // full nontrivial sum reduces to -1
        assert_eq!(
            ctx.as_rational_integer(&char_sum(&group, &ctx, &chars[1], &full)),
            Some(BigInt::from(-1))
        );
        // a single generator stays irrational
        let single = multiset(&group, &[(1, 1)]);
        let v = char_sum(&group, &ctx, &chars[1], &single);
        assert_eq!(v, ctx.from_root_power(1));
        assert_eq!(ctx.as_rational_integer(&v), None);
    }

    #[test]
    fn abelian_spectrum_k5_and_c4() {
        let z5 = zn(&[5]);
        let k5 = multiset(&z5, &[(1, 1), (2, 1), (3, 1), (4, 1)]);
        let s = abelian_spectrum(&z5, &k5).unwrap();
        assert_eq!(s.render_line(), "4 x1; -1 x4");

        let z4 = zn(&[4]);
        let c4 = multiset(&z4, &[(1, 1), (3, 1)]);
        let s = abelian_spectrum(&z4, &c4).unwrap();
        assert_eq!(s.render_line(), "2 x1; 0 x2; -2 x1");
    }

    #[test]
    fn abelian_spectrum_c5_has_conjugate_pairs() {
        let z5 = zn(&[5]);
        let c5 = multiset(&z5, &[(1, 1), (4, 1)]);
        let s = abelian_spectrum(&z5, &c5).unwrap();
        assert_eq!(s.eigenvalue_count(), 5);
        let rationals: Vec<_> = s
            .entries()
            .iter()
            .filter(|(v, _)| matches!(v, SpectralValue::Rational(_)))
            .collect();
        assert_eq!(rationals.len(), 1);
        assert_eq!(rationals[0], &(SpectralValue::Rational(BigInt::from(2)), 1));
        let irrational: Vec<_> = s
            .entries()
            .iter()
            .filter(|(v, _)| matches!(v, SpectralValue::Cyclotomic(_)))
            .collect();
        assert_eq!(irrational.len(), 2);
        assert!(irrational.iter().all(|(_, m)| *m == 2));
        assert!(!s.is_integral());
    }

    #[test]
    fn abelian_spectrum_rejects_non_inverse_closed() {
        let z5 = zn(&[5]);
        let bad = multiset(&z5, &[(1, 1)]);
        assert!(matches!(
            abelian_spectrum(&z5, &bad),
            Err(SpectraError::NotInverseClosed(_))
        ));
    }

    #[test]
    fn dual_path_decider() {
        let z5 = zn(&[5]);
        assert!(is_integral_abelian(&z5, &multiset(&z5, &[(1, 1), (2, 1), (3, 1), (4, 1)])).unwrap());
        assert!(!is_integral_abelian(&z5, &multiset(&z5, &[(1, 1), (4, 1)])).unwrap());
        assert!(is_integral_abelian(&z5, &GMultiset::new()).unwrap());
    }

    #[test]
    fn rational_sums_force_atom_constancy() {
        // whenever every character sum of D is a rational integer, mu_D is
        // constant on every atom; checked in both directions on seeded data
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        for group in [zn(&[6]), zn(&[8]), zn(&[2, 4]), zn(&[9]), zn(&[12])] {
            let spec = GroupSpec::abelian(group.clone());
            let ctx = CycContext::new(group.exponent());
            let partition = atom_partition(&spec);
            let chars = characters(&group);
            for _ in 0..60 {
                let mut d = GMultiset::new();
                for x in spec.elements() {
                    let m = rng.gen_range(0..3u64);
                    if m > 0 {
                        d.add(x, m.into());
                    }
                }
                let all_rational = chars
                    .iter()
                    .all(|chi| ctx.as_rational_integer(&char_sum(&group, &ctx, chi, &d)).is_some());
                let constant = cone_decompose_with(&partition, &d).is_ok();
                assert_eq!(all_rational, constant);
            }
        }
    }

    #[test]
    fn trivial_group() {
        let t = zn(&[]);
        let spec = GroupSpec::abelian(t.clone());
        let mut s = GMultiset::new();
        s.add(spec.identity(), 5u32.into());
        let sp = abelian_spectrum(&t, &s).unwrap();
        assert_eq!(sp.render_line(), "5 x1");
        assert!(is_integral_abelian(&t, &s).unwrap());
        assert!(characters(&t)[0].is_principal());
        assert!(Character::new(vec![]).index().is_empty());
    }
}
