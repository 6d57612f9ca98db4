//! The quaternion group Q8 = <-1, i, j, k | (-1)^2 = 1, i^2 = j^2 = k^2 = ijk = -1>.

/// One of the eight quaternion units, in canonical order 1, -1, i, -i, j, -j, k, -k.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Q8Elem {
    One,
    MinusOne,
    I,
    MinusI,
    J,
    MinusJ,
    K,
    MinusK,
}

use Q8Elem::*;

/// All eight elements in canonical enumeration order.
pub const Q8_ELEMENTS: [Q8Elem; 8] = [One, MinusOne, I, MinusI, J, MinusJ, K, MinusK];

/// An 8x8 multiplication table indexed by canonical element order.
pub type Q8Table = [[Q8Elem; 8]; 8];

/// The multiplication table of Q8, expanded once by hand from the presentation
/// relations (rows are the left operand).
pub const Q8_MUL: Q8Table = [
    [One, MinusOne, I, MinusI, J, MinusJ, K, MinusK],
    [MinusOne, One, MinusI, I, MinusJ, J, MinusK, K],
    [I, MinusI, MinusOne, One, K, MinusK, MinusJ, J],
    [MinusI, I, One, MinusOne, MinusK, K, J, MinusJ],
    [J, MinusJ, MinusK, K, MinusOne, One, I, MinusI],
    [MinusJ, J, K, MinusK, One, MinusOne, MinusI, I],
    [K, MinusK, J, MinusJ, MinusI, I, MinusOne, One],
    [MinusK, K, MinusJ, J, I, MinusI, One, MinusOne],
];

impl Q8Elem {
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(idx: usize) -> Q8Elem {
        Q8_ELEMENTS[idx]
    }

    pub fn mul(self, other: Q8Elem) -> Q8Elem {
        Q8_MUL[self.index()][other.index()]
    }

    pub fn inv(self) -> Q8Elem {
        match self {
            One => One,
            MinusOne => MinusOne,
            I => MinusI,
            MinusI => I,
            J => MinusJ,
            MinusJ => J,
            K => MinusK,
            MinusK => K,
        }
    }

    pub fn negate(self) -> Q8Elem {
        self.mul(MinusOne)
    }

    /// Conjugacy class id: {1}, {-1}, {i,-i}, {j,-j}, {k,-k} -> 0..=4.
    pub fn class(self) -> usize {
        match self {
            One => 0,
            MinusOne => 1,
            I | MinusI => 2,
            J | MinusJ => 3,
            K | MinusK => 4,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            One => "1",
            MinusOne => "-1",
            I => "i",
            MinusI => "-i",
            J => "j",
            MinusJ => "-j",
            K => "k",
            MinusK => "-k",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Q8Elem> {
        Q8_ELEMENTS.iter().copied().find(|q| q.symbol() == s)
    }
}

/// Checks that a candidate table satisfies the defining relations of Q8.
///
/// Used by the self-test harness; passing a corrupted copy of [`Q8_MUL`]
/// serves as a negative control.
pub fn table_satisfies_relations(table: &Q8Table) -> bool {
    let mul = |a: Q8Elem, b: Q8Elem| table[a.index()][b.index()];
    // i^2 = j^2 = k^2 = ijk = -1, (-1)^2 = 1
    if mul(I, I) != MinusOne || mul(J, J) != MinusOne || mul(K, K) != MinusOne {
        return false;
    }
    if mul(mul(I, J), K) != MinusOne || mul(MinusOne, MinusOne) != One {
        return false;
    }
    for &q in &Q8_ELEMENTS {
        if mul(One, q) != q || mul(q, One) != q || mul(q, q.inv()) != One {
            return false;
        }
    }
    // associativity, exhaustively
    for &a in &Q8_ELEMENTS {
        for &b in &Q8_ELEMENTS {
            for &c in &Q8_ELEMENTS {
                if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_relations_hold() {
        assert!(table_satisfies_relations(&Q8_MUL));
    }

    #[test]
    fn hand_derived_products() {
        // ij = k, jk = i, ki = j and the anti-commuted forms
        assert_eq!(I.mul(J), K);
        assert_eq!(J.mul(K), I);
        assert_eq!(K.mul(I), J);
        assert_eq!(J.mul(I), MinusK);
        assert_eq!(K.mul(J), MinusI);
        assert_eq!(I.mul(K), MinusJ);
    }

    #[test]
    fn inverses() {
        assert_eq!(I.inv(), MinusI);
        for &q in &Q8_ELEMENTS {
            assert_eq!(q.mul(q.inv()), One);
        }
    }

    #[test]
    fn corrupted_table_fails_relations() {
        let mut bad = Q8_MUL;
        bad[I.index()][J.index()] = MinusK;
        assert!(!table_satisfies_relations(&bad));
    }

    #[test]
    fn symbols_round_trip() {
        for &q in &Q8_ELEMENTS {
            assert_eq!(Q8Elem::from_symbol(q.symbol()), Some(q));
        }
        assert_eq!(Q8Elem::from_symbol("ii"), None);
    }
}
