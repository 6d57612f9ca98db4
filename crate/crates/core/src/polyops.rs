//! Dense integer polynomial helpers shared by the cyclotomic and oracle
//! modules. Coefficient vectors are ascending (constant term first) and
//! trimmed of trailing zeros except for the zero polynomial `[]`.

use num_bigint::BigInt;
use num_traits::Zero;

pub(crate) fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

pub(crate) fn degree(v: &[BigInt]) -> Option<usize> {
    if v.is_empty() {
        None
    } else {
        Some(v.len() - 1)
    }
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    trim(out)
}

/// Remainder of `a` modulo a monic divisor `d` (no fractions arise).
pub(crate) fn rem_monic(a: &[BigInt], d: &[BigInt]) -> Vec<BigInt> {
    let dd = d.len() - 1;
    debug_assert!(d.last().is_some_and(|c| *c == BigInt::from(1)));
    let mut r: Vec<BigInt> = a.to_vec();
    while r.len() > dd {
        let lead = r.pop().unwrap();
        if lead.is_zero() {
            continue;
        }
        let shift = r.len() - dd;
        for (k, c) in d[..dd].iter().enumerate() {
            r[shift + k] -= &lead * c;
        }
    }
    r.resize(dd, BigInt::zero());
    r
}

/// Exact division: returns `a / d` when the division is exact, else None.
pub(crate) fn div_exact(a: &[BigInt], d: &[BigInt]) -> Option<Vec<BigInt>> {
    let a = trim(a.to_vec());
    let d = trim(d.to_vec());
    if d.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < d.len() {
        return None;
    }
    let lead = d.last().unwrap();
    let mut rem = a;
    let mut q = vec![BigInt::zero(); rem.len() - d.len() + 1];
    for k in (0..q.len()).rev() {
        let top = rem[k + d.len() - 1].clone();
        if top.is_zero() {
            continue;
        }
        let (c, r) = num_integer::Integer::div_rem(&top, lead);
        if !r.is_zero() {
            return None;
        }
        q[k] = c.clone();
        for (i, dc) in d.iter().enumerate() {
            rem[k + i] -= &c * dc;
        }
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    Some(trim(q))
}

pub(crate) fn eval(p: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}
