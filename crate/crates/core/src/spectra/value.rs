//! Exact spectral values and spectra.

use std::fmt;

use num_bigint::BigInt;
use crate::cyclotomic::{CycContext, CycInt};
use crate::numutil::perfect_square_root;

/// An exact eigenvalue: a rational integer, a cyclotomic value, or a surd
/// pair `base +- sqrt(radicand)` standing for both branches of the
/// two-dimensional representation block.
///
/// A surd radicand is never asserted to be a non-negative real number;
/// instead it is kept self-conjugate (fixed under exponent negation), which
/// is testable coefficient-wise.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum SpectralValue {
    Rational(BigInt),
    Cyclotomic(CycInt),
    Surd { base: CycInt, radicand: CycInt },
}

impl SpectralValue {
    fn rank(&self) -> u8 {
        match self {
            SpectralValue::Rational(_) => 0,
            SpectralValue::Cyclotomic(_) => 1,
            SpectralValue::Surd { .. } => 2,
        }
    }

    /// Output ordering: rational values descending, then cyclotomic and surd
    /// entries in a fixed deterministic order.
    pub fn output_cmp(&self, other: &SpectralValue) -> std::cmp::Ordering {
        use SpectralValue::*;
        self.rank().cmp(&other.rank()).then_with(|| match (self, other) {
            (Rational(a), Rational(b)) => b.cmp(a),
            (Cyclotomic(a), Cyclotomic(b)) => b.cmp(a),
            (Surd { base: a, radicand: ra }, Surd { base: b, radicand: rb }) => {
                (b, rb).cmp(&(a, ra))
            }
            _ => unreachable!("rank already ordered mixed variants"),
        })
    }
}

impl fmt::Display for SpectralValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |v: &CycInt| {
            let s = v.to_string();
            if s.contains(' ') {
                format!("({s})")
            } else {
                s
            }
        };
        match self {
            SpectralValue::Rational(r) => write!(f, "{r}"),
            SpectralValue::Cyclotomic(c) => write!(f, "{}", wrap(c)),
            SpectralValue::Surd { base, radicand } => {
                write!(f, "{} +- sqrt({})", wrap(base), radicand)
            }
        }
    }
}

/// An exact spectrum: merged (value, multiplicity) pairs in output order.
/// A surd entry counts both branches, each with the stored multiplicity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Spectrum {
    entries: Vec<(SpectralValue, u64)>,
}

impl Spectrum {
    /// Merges raw entries into canonical form.
    ///
    /// A surd whose radicand is a non-negative perfect square collapses into
    /// its two branches `base + r` and `base - r` (which further collapse to
    /// rational entries when the base is rational).
    pub fn from_raw(ctx: &CycContext, raw: Vec<(SpectralValue, u64)>) -> Spectrum {
        let mut merged: std::collections::BTreeMap<SpectralValue, u64> =
            std::collections::BTreeMap::new();
        let mut push = |v: SpectralValue, mult: u64| {
            *merged.entry(v).or_insert(0) += mult;
        };
        for (value, mult) in raw {
            match value {
                SpectralValue::Rational(r) => push(SpectralValue::Rational(r), mult),
                SpectralValue::Cyclotomic(c) => match ctx.as_rational_integer(&c) {
                    Some(r) => push(SpectralValue::Rational(r), mult),
                    None => push(SpectralValue::Cyclotomic(c), mult),
                },
                SpectralValue::Surd { base, radicand } => {
                    let collapse = ctx
                        .as_rational_integer(&radicand)
                        .and_then(|r| perfect_square_root(&r));
                    match collapse {
                        Some(root) => {
                            for branch in [
                                ctx.add(&base, &ctx.from_integer(root.clone())),
                                ctx.sub(&base, &ctx.from_integer(root.clone())),
                            ] {
                                match ctx.as_rational_integer(&branch) {
                                    Some(r) => push(SpectralValue::Rational(r), mult),
                                    None => push(SpectralValue::Cyclotomic(branch), mult),
                                }
                            }
                        }
                        None => push(SpectralValue::Surd { base, radicand }, mult),
                    }
                }
            }
        }
        let mut entries: Vec<(SpectralValue, u64)> = merged.into_iter().collect();
        entries.sort_by(|a, b| a.0.output_cmp(&b.0));
        Spectrum { entries }
    }

    pub fn entries(&self) -> &[(SpectralValue, u64)] {
        &self.entries
    }

    /// Total eigenvalue count; surd entries contribute twice their stored
    /// multiplicity.
    pub fn eigenvalue_count(&self) -> u64 {
        self.entries
            .iter()
            .map(|(v, m)| match v {
                SpectralValue::Surd { .. } => 2 * m,
                _ => *m,
            })
            .sum()
    }

    /// The spectrum as a plain integer multiset, when every entry is
    /// rational.
    pub fn as_integer_multiset(&self) -> Option<Vec<(BigInt, u64)>> {
        self.entries
            .iter()
            .map(|(v, m)| match v {
                SpectralValue::Rational(r) => Some((r.clone(), *m)),
                _ => None,
            })
            .collect()
    }

    pub fn is_integral(&self) -> bool {
        self.as_integer_multiset().is_some()
    }

    /// Exact first and second power sums (sum of eigenvalues, sum of squared
    /// eigenvalues), with each surd pair contributing `2*base` and
    /// `2*(base^2 + radicand)` per stored multiplicity.
    pub fn power_sums(&self, ctx: &CycContext) -> (CycInt, CycInt) {
        let mut s1 = ctx.zero();
        let mut s2 = ctx.zero();
        for (value, mult) in &self.entries {
            let mult_int = ctx.from_integer(BigInt::from(*mult));
            match value {
                SpectralValue::Rational(r) => {
                    let v = ctx.from_integer(r.clone());
                    s1 = ctx.add(&s1, &ctx.mul(&mult_int, &v));
                    s2 = ctx.add(&s2, &ctx.mul(&mult_int, &ctx.mul(&v, &v)));
                }
                SpectralValue::Cyclotomic(c) => {
                    s1 = ctx.add(&s1, &ctx.mul(&mult_int, c));
                    s2 = ctx.add(&s2, &ctx.mul(&mult_int, &ctx.mul(c, c)));
                }
                SpectralValue::Surd { base, radicand } => {
                    let two = ctx.from_integer(BigInt::from(2));
                    let pair1 = ctx.mul(&two, base);
                    let pair2 = ctx.mul(&two, &ctx.add(&ctx.mul(base, base), radicand));
                    s1 = ctx.add(&s1, &ctx.mul(&mult_int, &pair1));
                    s2 = ctx.add(&s2, &ctx.mul(&mult_int, &pair2));
                }
            }
        }
        (s1, s2)
    }

    /// Machine-readable single-line rendering: `value xMULT; ...`.
    pub fn render_line(&self) -> String {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(v, m)| format!("{v} x{m}"))
            .collect();
        parts.join("; ")
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_line())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn merge_and_sort_descending() {
        let ctx = CycContext::new(3);
        let raw = vec![
            (SpectralValue::Rational(BigInt::from(-2)), 3),
            (SpectralValue::Rational(BigInt::from(6)), 1),
            (SpectralValue::Rational(BigInt::from(-2)), 2),
        ];
        let s = Spectrum::from_raw(&ctx, raw);
        assert_eq!(s.render_line(), "6 x1; -2 x5");
        assert_eq!(s.eigenvalue_count(), 6);
    }

    #[test]
    fn surd_collapse() {
        let ctx = CycContext::new(3);
        // base 0, radicand 9 -> +-3, each twice
        let raw = vec![(
            SpectralValue::Surd {
                base: ctx.zero(),
                radicand: ctx.from_integer(BigInt::from(9)),
            },
            2,
        )];
        let s = Spectrum::from_raw(&ctx, raw);
        assert_eq!(s.render_line(), "3 x2; -3 x2");
        assert!(s.is_integral());

        // radicand 0 merges both branches
        let raw = vec![(
            SpectralValue::Surd { base: ctx.from_integer(BigInt::from(1)), radicand: ctx.zero() },
            2,
        )];
        let s = Spectrum::from_raw(&ctx, raw);
        assert_eq!(s.render_line(), "1 x4");

        // radicand 5 stays symbolic and counts both branches
        let raw = vec![(
            SpectralValue::Surd {
                base: ctx.zero(),
                radicand: ctx.from_integer(BigInt::from(5)),
            },
            2,
        )];
        let s = Spectrum::from_raw(&ctx, raw);
        assert_eq!(s.render_line(), "0 +- sqrt(5) x2");
        assert_eq!(s.eigenvalue_count(), 4);
        assert!(!s.is_integral());
    }

    #[test]
    fn power_sums_count_surd_pairs() {
        let ctx = CycContext::new(3);
        let raw = vec![
            (
                SpectralValue::Surd {
                    base: ctx.from_integer(BigInt::from(1)),
                    radicand: ctx.from_integer(BigInt::from(5)),
                },
                2,
            ),
            (SpectralValue::Rational(BigInt::from(-4)), 1),
        ];
        let s = Spectrum::from_raw(&ctx, raw);
        let (s1, s2) = s.power_sums(&ctx);
        // (1 + sqrt 5) + (1 - sqrt 5) twice each = 4, minus 4 -> 0
        assert_eq!(ctx.as_rational_integer(&s1), Some(BigInt::zero()));
        // squares: 2 * (1 + 5) per stored multiplicity 2 -> 24, plus 16 -> 40
        assert_eq!(ctx.as_rational_integer(&s2), Some(BigInt::from(40)));
    }

    #[test]
    fn rationalizes_cyclotomic_constants() {
        let ctx = CycContext::new(5);
        let mut full = ctx.zero();
        for t in 1..5 {
            full = ctx.add(&full, &ctx.from_root_power(t));
        }
        let s = Spectrum::from_raw(&ctx, vec![(SpectralValue::Cyclotomic(full), 4)]);
        assert_eq!(s.render_line(), "-1 x4");
    }
}
