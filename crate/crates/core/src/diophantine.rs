//! Bounded brute-force enumeration of the two diophantine equations
//! x^2 + y^2 = p z^2 and x^2 + y^2 + z^2 = p alpha^2, and the builders that
//! turn their primitive solutions into generating multisets over Q8 x C_p
//! that are integral without lying in the integral cone.

use num_integer::Integer;
use thiserror::Error;

use crate::groups::{AbelianGroup, GMultiset, GroupSpec, Q8Elem};
use crate::numutil::is_prime;
use crate::oracle::{oracle_check, OracleError};
use crate::spectra::{is_integral, SpectraError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiophantineError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not congruent to 1 mod 4")]
    NotOneMod4(u64),
    #[error("({x}, {y}, {z}) does not solve x^2 + y^2 = {p} z^2 or is not primitive")]
    NotASolution { p: u64, x: u64, y: u64, z: u64 },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// A primitive solution of x^2 + y^2 = p z^2.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Solution3 {
    pub x: u64,
    pub y: u64,
    pub z: u64,
}

/// A primitive solution of x^2 + y^2 + z^2 = p alpha^2, with x <= y <= z.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Solution4 {
    pub x: u64,
    pub y: u64,
    pub z: u64,
    pub alpha: u64,
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

fn gcd3(a: u64, b: u64, c: u64) -> u64 {
    a.gcd(&b).gcd(&c)
}

/// All primitive nontrivial solutions of x^2 + y^2 = p z^2 with z <= bound,
/// lexicographically sorted. Requires p prime with p = 1 (mod 4).
pub fn solutions_two_squares(p: u64, bound: u64) -> Result<Vec<Solution3>, DiophantineError> {
    if !is_prime(p) {
        return Err(DiophantineError::NotPrime(p));
    }
    if p % 4 != 1 {
        return Err(DiophantineError::NotOneMod4(p));
    }
    let mut out = Vec::new();
    for z in 1..=bound {
        let target = p * z * z;
        for x in 0..=isqrt(target) {
            let rest = target - x * x;
            let y = isqrt(rest);
            if y * y == rest && gcd3(x, y, z) == 1 {
                out.push(Solution3 { x, y, z });
            }
        }
    }
    out.sort();
    Ok(out)
}

/// All primitive solutions of x^2 + y^2 + z^2 = p alpha^2 with
/// x <= y <= z and alpha <= bound, sorted by (alpha, x, y, z). The result
/// may be empty; for p = 7 it always is, since 7 alpha^2 has the form
/// 4^a (8b + 7), which sums of three squares never attain.
pub fn solutions_three_squares(p: u64, bound: u64) -> Vec<Solution4> {
    assert!(p >= 2, "p must be at least 2");
    let mut out = Vec::new();
    for alpha in 1..=bound {
        let target = p * alpha * alpha;
        for x in 0..=isqrt(target / 3) {
            let after_x = target - x * x;
            for y in x..=isqrt(after_x / 2) {
                let rest = after_x - y * y;
                let z = isqrt(rest);
                if z * z == rest && z >= y && gcd3(x, y, z).gcd(&alpha) == 1 {
                    out.push(Solution4 { x, y, z, alpha });
                }
            }
        }
    }
    out.sort_by_key(|s| (s.alpha, s.x, s.y, s.z));
    out
}

/// Builds the Q8 x C5 counterexample multiset from a primitive solution
/// (m, n, alpha) of x^2 + y^2 = 5 z^2 (swapped so that n <= m):
/// B_i = {a: 2m, a^2: m+n, a^3: m-n}, B_j = {a: m+n, a^4: m-n, a^3: 2m},
/// B_{-i} = B_i^{-1}, B_{-j} = B_j^{-1}, B_k = B_{-k} = B_1 = B_{-1} = empty.
pub fn build_counterexample_5(sol: &Solution3) -> Result<(GroupSpec, GMultiset), DiophantineError> {
    let (m, n) = if sol.x >= sol.y { (sol.x, sol.y) } else { (sol.y, sol.x) };
    let alpha = sol.z;
    if m * m + n * n != 5 * alpha * alpha || gcd3(m, n, alpha) != 1 {
        return Err(DiophantineError::NotASolution { p: 5, x: sol.x, y: sol.y, z: sol.z });
    }
    let spec = GroupSpec::quaternion_product(AbelianGroup::new(vec![5]).unwrap());
    let mut s = GMultiset::new();
    let mut put = |q: Q8Elem, t: i64, mult: u64| {
        s.add(spec.element(q, &[t]).unwrap(), mult.into());
    };
    for (t, mult) in [(1, 2 * m), (2, m + n), (3, m - n)] {
        put(Q8Elem::I, t, mult);
        put(Q8Elem::MinusI, -t, mult);
    }
    for (t, mult) in [(1, m + n), (4, m - n), (3, 2 * m)] {
        put(Q8Elem::J, t, mult);
        put(Q8Elem::MinusJ, -t, mult);
    }
    Ok((spec, s))
}

/// The three-squares analogue over C_p: from (m, n, l, alpha) take
/// B_i = {a: m, a^2: n, a^3: l}, B_j = {a: l, a^2: m, a^3: n},
/// B_k = {a: n, a^2: l, a^3: m}, each B_{-q} = B_q^{-1}. Reachable only for
/// p values where the three-squares search is nonempty.
pub fn build_counterexample_three(
    p: u64,
    sol: &Solution4,
) -> Result<(GroupSpec, GMultiset), DiophantineError> {
    if !(2..).contains(&p) || sol.x * sol.x + sol.y * sol.y + sol.z * sol.z != p * sol.alpha * sol.alpha
    {
        return Err(DiophantineError::NotASolution { p, x: sol.x, y: sol.y, z: sol.z });
    }
    let spec = GroupSpec::quaternion_product(AbelianGroup::new(vec![p]).unwrap());
    let mut s = GMultiset::new();
    let mut put = |q: Q8Elem, t: i64, mult: u64| {
        s.add(spec.element(q, &[t]).unwrap(), mult.into());
    };
    let (m, n, l) = (sol.x, sol.y, sol.z);
    for (q, coeffs) in [
        (Q8Elem::I, [m, n, l]),
        (Q8Elem::J, [l, m, n]),
        (Q8Elem::K, [n, l, m]),
    ] {
        for (t, &mult) in (1..=3i64).zip(coeffs.iter()) {
            put(q, t, mult);
            put(q.negate(), -t, mult);
        }
    }
    Ok((spec, s))
}

/// True iff S is integral, fails cone membership, and the brute-force oracle
/// agrees on integrality.
pub fn verify_counterexample(spec: &GroupSpec, s: &GMultiset) -> Result<bool, VerifyError> {
    let integral = is_integral(spec, s)?;
    let in_cone = crate::algebra::cone_decompose(spec, s).is_ok();
    let oracle_agrees = oracle_check(spec, s)?.is_integral == integral;
    Ok(integral && !in_cone && oracle_agrees)
}

/// The first `count` primitive solutions for p = 5, deduplicated after the
/// n <= m normalization the builder applies (so swapped pairs count once).
pub fn normalized_solutions_5(count: usize) -> Vec<Solution3> {
    let mut bound = 4u64;
    loop {
        let mut seen = std::collections::BTreeSet::new();
        let mut out = Vec::new();
        for sol in solutions_two_squares(5, bound).expect("5 is prime, 5 = 1 mod 4") {
            let normalized = Solution3 {
                x: sol.x.max(sol.y),
                y: sol.x.min(sol.y),
                z: sol.z,
            };
            if seen.insert(normalized) {
                out.push(normalized);
            }
            if out.len() == count {
                return out;
            }
        }
        bound *= 2;
    }
}
