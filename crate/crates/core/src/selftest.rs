//! Built-in verification suites behind the `selftest` CLI command: quick,
//! seeded versions of the property checks that the full test suites run at
//! scale.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{atom_partition, cone_decompose_with};
use crate::cyclotomic::{cyclotomic_poly, CycContext};
use crate::diophantine::{
    build_counterexample_5, normalized_solutions_5, solutions_three_squares, verify_counterexample,
};
use crate::groups::parse::parse_group_spec;
use crate::groups::{table_satisfies_relations, GMultiset, GroupSpec, Q8Table, Q8_MUL};
use crate::oracle::{adjacency_matrix, commute_check, oracle_check};
use crate::sampling::{atom_union, inverse_closed_multiset};
use crate::spectra::{char_sum, characters, hamiltonian_conditions, hamiltonian_spectrum, Spectrum};

#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn outcome(name: &'static str, passed: bool, detail: String) -> SuiteOutcome {
    SuiteOutcome { name, passed, detail }
}

/// The Q8 relation suite, parameterized over the table so a corrupted copy
/// can serve as a negative control.
pub fn q8_relation_suite(table: &Q8Table) -> SuiteOutcome {
    let passed = table_satisfies_relations(table);
    outcome(
        "q8-relations",
        passed,
        if passed {
            "presentation relations and associativity hold".into()
        } else {
            "multiplication table violates the presentation".into()
        },
    )
}

fn cyclotomic_suite() -> SuiteOutcome {
    for m in 1..=60u64 {
        let mut prod = vec![BigInt::one()];
        for d in 1..=m {
            if m % d == 0 {
                prod = crate::polyops::mul(&prod, &cyclotomic_poly(d));
            }
        }
        let mut expect = vec![BigInt::zero(); m as usize + 1];
        expect[0] = BigInt::from(-1);
        expect[m as usize] = BigInt::one();
        if prod != expect {
            return outcome("cyclotomic", false, format!("divisor product fails at m = {m}"));
        }
        if m >= 2 {
            let ctx = CycContext::new(m);
            let mut acc = ctx.zero();
            for t in 0..m {
                acc = ctx.add(&acc, &ctx.from_root_power(t as i64));
            }
            if !acc.is_zero() {
                return outcome("cyclotomic", false, format!("root sum nonzero at m = {m}"));
            }
        }
    }
    outcome("cyclotomic", true, "divisor products and root sums exact for m <= 60".into())
}

/// Exact spectral bookkeeping for one spectrum against its multiset.
pub fn bookkeeping_holds(spec: &GroupSpec, s: &GMultiset, spectrum: &Spectrum) -> bool {
    let ctx = CycContext::new(spec.abelian_part().exponent());
    if spectrum.eigenvalue_count() != spec.order() {
        return false;
    }
    let order = BigInt::from(spec.order());
    let (s1, s2) = spectrum.power_sums(&ctx);
    let mu_identity = BigInt::from(s.multiplicity(&spec.identity()));
    if ctx.as_rational_integer(&s1) != Some(&order * mu_identity) {
        return false;
    }
    let sq_total: BigInt = s
        .iter()
        .map(|(_, m)| {
            let m = BigInt::from(m.clone());
            &m * &m
        })
        .sum();
    ctx.as_rational_integer(&s2) == Some(order * sq_total)
}

fn abelian_dual_path_suite(seed: u64) -> SuiteOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut runs = 0usize;
    for name in ["Z6", "Z8", "Z12", "Z2xZ2xZ3", "Z9"] {
        let spec = parse_group_spec(name).unwrap();
        let group = spec.abelian_part();
        let ctx = CycContext::new(group.exponent());
        let partition = atom_partition(&spec);
        let chars = characters(group);
        for _ in 0..20 {
            let s = inverse_closed_multiset(&spec, &mut rng, 3);
            let rational = chars
                .iter()
                .all(|chi| ctx.as_rational_integer(&char_sum(group, &ctx, chi, &s)).is_some());
            let cone = cone_decompose_with(&partition, &s).is_ok();
            let oracle = match oracle_check(&spec, &s) {
                Ok(v) => v.is_integral,
                Err(e) => return outcome("abelian-dual-path", false, e.to_string()),
            };
            if rational != cone || cone != oracle {
                return outcome(
                    "abelian-dual-path",
                    false,
                    format!("verdicts disagree over {name}: characters {rational}, cone {cone}, oracle {oracle}"),
                );
            }
            runs += 1;
        }
    }
    outcome("abelian-dual-path", true, format!("{runs} multisets, three verdicts agree"))
}

fn hamiltonian_suite(seed: u64) -> SuiteOutcome {
    let spec = parse_group_spec("Q8xZ3").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x51ec7a11);
    for _ in 0..10 {
        let s = inverse_closed_multiset(&spec, &mut rng, 2);
        let conditions = match hamiltonian_conditions(&spec, &s) {
            Ok(r) => r.overall,
            Err(e) => return outcome("hamiltonian-vs-oracle", false, e.to_string()),
        };
        let verdict = match oracle_check(&spec, &s) {
            Ok(v) => v,
            Err(e) => return outcome("hamiltonian-vs-oracle", false, e.to_string()),
        };
        if conditions != verdict.is_integral {
            return outcome(
                "hamiltonian-vs-oracle",
                false,
                format!("conditions say {conditions}, oracle says {}", verdict.is_integral),
            );
        }
        let spectrum = hamiltonian_spectrum(&spec, &s).expect("inverse-closed by construction");
        if !bookkeeping_holds(&spec, &s, &spectrum) {
            return outcome("hamiltonian-vs-oracle", false, "trace identities fail".into());
        }
        if let Some(oracle_spectrum) = verdict.spectrum {
            if spectrum.as_integer_multiset().as_deref() != Some(&oracle_spectrum[..]) {
                return outcome("hamiltonian-vs-oracle", false, "spectra differ".into());
            }
        }
    }
    outcome("hamiltonian-vs-oracle", true, "10 multisets over Q8xZ3 agree".into())
}

fn commute_suite(seed: u64) -> SuiteOutcome {
    let spec = parse_group_spec("Q8xZ3").unwrap();
    let partition = atom_partition(&spec);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xc0333u64);
    for _ in 0..5 {
        let s = inverse_closed_multiset(&spec, &mut rng, 2);
        let t = atom_union(&partition, &mut rng);
        match commute_check(&spec, &s, &t) {
            Ok(true) => {}
            Ok(false) => return outcome("commute", false, "matrices failed to commute".into()),
            Err(e) => return outcome("commute", false, e.to_string()),
        }
    }
    outcome("commute", true, "atom-union multisets commute with random generators".into())
}

fn diophantine_suite() -> SuiteOutcome {
    if !solutions_three_squares(7, 50).is_empty() {
        return outcome("diophantine", false, "unexpected solution of x^2+y^2+z^2 = 7 alpha^2".into());
    }
    let sol = normalized_solutions_5(1)[0];
    let (spec, s) = match build_counterexample_5(&sol) {
        Ok(v) => v,
        Err(e) => return outcome("diophantine", false, e.to_string()),
    };
    match verify_counterexample(&spec, &s) {
        Ok(true) => outcome(
            "diophantine",
            true,
            "first p=5 counterexample verified; p=7 three-square search empty".into(),
        ),
        Ok(false) => outcome("diophantine", false, "counterexample failed verification".into()),
        Err(e) => outcome("diophantine", false, e.to_string()),
    }
}

fn symmetry_suite(seed: u64) -> SuiteOutcome {
    // adjacency symmetry and row-sum regularity on random samples
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5f5f5f);
    for name in ["Z10", "Q8xZ3"] {
        let spec = parse_group_spec(name).unwrap();
        for _ in 0..5 {
            let s = inverse_closed_multiset(&spec, &mut rng, 3);
            let a = adjacency_matrix(&spec, &s);
            if !a.is_symmetric() {
                return outcome("adjacency", false, format!("asymmetric matrix over {name}"));
            }
            let degree = BigInt::from(s.total());
            if a.row_sums().iter().any(|d| *d != degree) {
                return outcome("adjacency", false, format!("row sums differ over {name}"));
            }
        }
    }
    outcome("adjacency", true, "symmetric with constant row sums".into())
}

/// Runs every suite with the given seed.
pub fn run_selftest(seed: u64) -> Vec<SuiteOutcome> {
    vec![
        q8_relation_suite(&Q8_MUL),
        cyclotomic_suite(),
        abelian_dual_path_suite(seed),
        hamiltonian_suite(seed),
        commute_suite(seed),
        symmetry_suite(seed),
        diophantine_suite(),
    ]
}
