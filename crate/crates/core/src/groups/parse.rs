//! Text grammar for group specs, element literals, and multiset files.
//!
//! Group spec: optional `Q8x` prefix (or bare `Q8`), then `Z<n>` factors
//! joined by `x`, e.g. `Z6`, `Q8xZ3`, `Q8xZ5xZ5`.
//!
//! Element literal: `<q>;(c1,...,ck)` with q one of 1,-1,i,-i,j,-j,k,-k;
//! abelian elements omit the `q;` prefix; a single abelian residue may be
//! written bare.
//!
//! Multiset file: UTF-8 text, one `element : multiplicity` per line, with
//! `#` starting a comment.

use num_bigint::BigUint;
use num_traits::Zero;

use super::{AbelianGroup, GMultiset, GroupElement, GroupError, GroupSpec, Q8Elem};

pub fn parse_group_spec(text: &str) -> Result<GroupSpec, GroupError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(GroupError::BadSpec("empty spec".into()));
    }
    let mut tokens = text.split('x').peekable();
    let mut quaternion = false;
    if tokens.peek() == Some(&"Q8") {
        tokens.next();
        quaternion = true;
    }
    let mut factors = Vec::new();
    for tok in tokens {
        let Some(num) = tok.strip_prefix('Z') else {
            return Err(GroupError::BadSpec(format!("unexpected token `{tok}`")));
        };
        let n: u64 = num
            .parse()
            .map_err(|_| GroupError::BadSpec(format!("bad cyclic order `{tok}`")))?;
        factors.push(n);
    }
    if !quaternion && factors.is_empty() {
        return Err(GroupError::BadSpec(format!("unexpected token `{text}`")));
    }
    let a = AbelianGroup::new(factors)?;
    Ok(if quaternion {
        GroupSpec::quaternion_product(a)
    } else {
        GroupSpec::abelian(a)
    })
}

/// Renders a spec back in grammar form.
pub fn format_group_spec(spec: &GroupSpec) -> String {
    let factors: Vec<String> = spec
        .abelian_part()
        .factors()
        .iter()
        .map(|n| format!("Z{n}"))
        .collect();
    match (spec.is_quaternion_product(), factors.is_empty()) {
        (true, true) => "Q8".to_string(),
        (true, false) => format!("Q8x{}", factors.join("x")),
        (false, _) => factors.join("x"),
    }
}

fn parse_residues(spec: &GroupSpec, text: &str, original: &str) -> Result<Vec<i64>, GroupError> {
    let text = text.trim();
    let k = spec.abelian_part().rank();
    let bad = |msg: &str| GroupError::BadElement(original.to_string(), msg.to_string());
    let inner = if let Some(stripped) = text.strip_prefix('(') {
        stripped
            .strip_suffix(')')
            .ok_or_else(|| bad("missing closing parenthesis"))?
    } else if k == 1 {
        // bare residue form for a single cyclic factor
        text
    } else if k == 0 && text.is_empty() {
        ""
    } else {
        return Err(bad("expected a parenthesized residue tuple"));
    };
    let parts: Vec<&str> = if inner.trim().is_empty() {
        Vec::new()
    } else {
        inner.split(',').collect()
    };
    if parts.len() != k {
        return Err(bad(&format!("expected {} residues, got {}", k, parts.len())));
    }
    parts
        .iter()
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| bad(&format!("bad residue `{}`", p.trim())))
        })
        .collect()
}

pub fn parse_element(spec: &GroupSpec, text: &str) -> Result<GroupElement, GroupError> {
    let text = text.trim();
    let bad = |msg: &str| GroupError::BadElement(text.to_string(), msg.to_string());
    if spec.is_quaternion_product() {
        let (q_str, rest) = match text.split_once(';') {
            Some((q, rest)) => (q.trim(), rest),
            // bare quaternion symbol is allowed when the abelian part is trivial
            None => (text, ""),
        };
        let q = Q8Elem::from_symbol(q_str)
            .ok_or_else(|| bad(&format!("bad quaternion unit `{q_str}`")))?;
        let residues = parse_residues(spec, rest, text)?;
        spec.element(q, &residues)
    } else {
        if text.contains(';') {
            return Err(bad("abelian elements carry no quaternion prefix"));
        }
        let residues = parse_residues(spec, text, text)?;
        spec.element(Q8Elem::One, &residues)
    }
}

/// Canonical display form, inverse to [`parse_element`].
pub fn format_element(spec: &GroupSpec, x: &GroupElement) -> String {
    let k = spec.abelian_part().rank();
    let tuple = |xs: &[u64]| -> String {
        let inner: Vec<String> = xs.iter().map(|c| c.to_string()).collect();
        format!("({})", inner.join(","))
    };
    if spec.is_quaternion_product() {
        if k == 0 {
            x.q().symbol().to_string()
        } else {
            format!("{};{}", x.q().symbol(), tuple(x.residues()))
        }
    } else if k == 1 {
        x.residues()[0].to_string()
    } else {
        tuple(x.residues())
    }
}

pub fn parse_multiset(spec: &GroupSpec, text: &str) -> Result<GMultiset, GroupError> {
    let mut s = GMultiset::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let Some((elem_str, mult_str)) = line.rsplit_once(':') else {
            return Err(GroupError::BadMultisetLine {
                line: line_no,
                message: format!("expected `element : multiplicity`, got `{line}`"),
            });
        };
        let elem = parse_element(spec, elem_str).map_err(|e| GroupError::BadMultisetLine {
            line: line_no,
            message: e.to_string(),
        })?;
        let mult: BigUint =
            mult_str
                .trim()
                .parse()
                .map_err(|_| GroupError::BadMultisetLine {
                    line: line_no,
                    message: format!("bad multiplicity `{}`", mult_str.trim()),
                })?;
        if mult.is_zero() {
            return Err(GroupError::BadMultisetLine {
                line: line_no,
                message: "multiplicity must be positive".into(),
            });
        }
        s.add(elem, mult);
    }
    Ok(s)
}

/// Serializes a multiset in file form, one entry per line in canonical
/// element order.
pub fn format_multiset(spec: &GroupSpec, s: &GMultiset) -> String {
    let mut out = String::new();
    for (x, m) in s.iter() {
        out.push_str(&format!("{} : {}\n", format_element(spec, x), m));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_grammar() {
        assert_eq!(format_group_spec(&parse_group_spec("Z6").unwrap()), "Z6");
        assert_eq!(format_group_spec(&parse_group_spec("Q8xZ3").unwrap()), "Q8xZ3");
        assert_eq!(
            format_group_spec(&parse_group_spec("Q8xZ5xZ5").unwrap()),
            "Q8xZ5xZ5"
        );
        assert_eq!(format_group_spec(&parse_group_spec("Q8").unwrap()), "Q8");
        assert!(parse_group_spec("Z1").is_err());
        assert!(parse_group_spec("Zx").is_err());
        assert!(parse_group_spec("Q8x").is_err());
        assert!(parse_group_spec("D4").is_err());
        assert!(parse_group_spec("").is_err());
    }

    #[test]
    fn element_literals() {
        let z6 = parse_group_spec("Z6").unwrap();
        let e = parse_element(&z6, "4").unwrap();
        assert_eq!(e.residues(), &[4]);
        assert_eq!(format_element(&z6, &e), "4");
        assert_eq!(parse_element(&z6, "(4)").unwrap(), e);
        assert_eq!(parse_element(&z6, "-2").unwrap(), e);
        assert!(parse_element(&z6, "i;(1)").is_err());

        let g = parse_group_spec("Q8xZ3").unwrap();
        let x = parse_element(&g, "-i;(2)").unwrap();
        assert_eq!(x.q(), Q8Elem::MinusI);
        assert_eq!(x.residues(), &[2]);
        assert_eq!(format_element(&g, &x), "-i;(2)");
        assert!(parse_element(&g, "w;(2)").is_err());
        assert!(parse_element(&g, "i;(2,1)").is_err());

        let q8 = parse_group_spec("Q8").unwrap();
        let j = parse_element(&q8, "j").unwrap();
        assert_eq!(format_element(&q8, &j), "j");

        let zz = parse_group_spec("Z2xZ2").unwrap();
        let t = parse_element(&zz, "(1,0)").unwrap();
        assert_eq!(format_element(&zz, &t), "(1,0)");
        assert!(parse_element(&zz, "1,0").is_err());
    }

    #[test]
    fn multiset_files() {
        let g = parse_group_spec("Q8xZ3").unwrap();
        let text = "\
# golden generating multiset
i;(1) : 1
-i;(2) : 1
j;(1) : 1   # trailing comment
-j;(2) : 1
k;(1) : 1
-k;(2) : 1
";
        let s = parse_multiset(&g, text).unwrap();
        assert_eq!(s.total(), 6u32.into());
        assert!(s.is_inverse_closed(&g));
        let round = parse_multiset(&g, &format_multiset(&g, &s)).unwrap();
        assert_eq!(round, s);
    }

    #[test]
    fn multiset_errors_name_the_line() {
        let z6 = parse_group_spec("Z6").unwrap();
        let err = parse_multiset(&z6, "3 : 1\n4 ; 2\n").unwrap_err();
        assert!(matches!(err, GroupError::BadMultisetLine { line: 2, .. }));
        let err = parse_multiset(&z6, "3 : 0\n").unwrap_err();
        assert!(err.to_string().contains("positive"));
        let err = parse_multiset(&z6, "x : 1\n").unwrap_err();
        assert!(err.to_string().contains("line 1"));
    }
}
