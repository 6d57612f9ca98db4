//! The irreducible representations of Q8: four linear characters and the
//! unique degree-2 representation.

use crate::groups::Q8Elem;

/// A row of the Q8 character table.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Q8Irrep {
    Principal,
    LambdaI,
    LambdaJ,
    LambdaK,
    Epsilon,
}

impl Q8Irrep {
    pub const ALL: [Q8Irrep; 5] = [
        Q8Irrep::Principal,
        Q8Irrep::LambdaI,
        Q8Irrep::LambdaJ,
        Q8Irrep::LambdaK,
        Q8Irrep::Epsilon,
    ];

    pub const LINEAR: [Q8Irrep; 4] = [
        Q8Irrep::Principal,
        Q8Irrep::LambdaI,
        Q8Irrep::LambdaJ,
        Q8Irrep::LambdaK,
    ];

    pub fn degree(self) -> u32 {
        match self {
            Q8Irrep::Epsilon => 2,
            _ => 1,
        }
    }

    /// The character value at q (constant on conjugacy classes).
    pub fn character_value(self, q: Q8Elem) -> i64 {
        let class = q.class(); // {1}, {-1}, {i,-i}, {j,-j}, {k,-k}
        match self {
            Q8Irrep::Principal => 1,
            Q8Irrep::LambdaI => [1, 1, 1, -1, -1][class],
            Q8Irrep::LambdaJ => [1, 1, -1, 1, -1][class],
            Q8Irrep::LambdaK => [1, 1, -1, -1, 1][class],
            Q8Irrep::Epsilon => [2, -2, 0, 0, 0][class],
        }
    }

    /// The scalar value of a linear representation at q; coincides with the
    /// character value. Panics for the degree-2 row.
    pub fn linear_value(self, q: Q8Elem) -> i64 {
        assert_ne!(self, Q8Irrep::Epsilon, "epsilon is not linear");
        self.character_value(q)
    }
}

pub fn symbol(rep: Q8Irrep) -> &'static str {
    match rep {
        Q8Irrep::Principal => "1",
        Q8Irrep::LambdaI => "lambda_i",
        Q8Irrep::LambdaJ => "lambda_j",
        Q8Irrep::LambdaK => "lambda_k",
        Q8Irrep::Epsilon => "epsilon",
    }
}

/// A Gaussian integer, used only to state the degree-2 representation
/// matrices exactly.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GaussInt {
    pub re: i64,
    pub im: i64,
}

impl GaussInt {
    pub const ZERO: GaussInt = GaussInt { re: 0, im: 0 };
    pub const ONE: GaussInt = GaussInt { re: 1, im: 0 };
    pub const I: GaussInt = GaussInt { re: 0, im: 1 };

    pub fn neg(self) -> GaussInt {
        GaussInt { re: -self.re, im: -self.im }
    }

    pub fn mul(self, o: GaussInt) -> GaussInt {
        GaussInt {
            re: self.re * o.re - self.im * o.im,
            im: self.re * o.im + self.im * o.re,
        }
    }

    pub fn add(self, o: GaussInt) -> GaussInt {
        GaussInt { re: self.re + o.re, im: self.im + o.im }
    }
}

pub type Mat2 = [[GaussInt; 2]; 2];

/// The degree-2 irreducible representation on the standard basis:
/// rho(i) = diag(i, -i), rho(j) = [[0,1],[-1,0]], rho(k) = [[0,i],[i,0]],
/// and rho(-q) = -rho(q).
pub fn rho_epsilon(q: Q8Elem) -> Mat2 {
    use Q8Elem::*;
    let z = GaussInt::ZERO;
    let o = GaussInt::ONE;
    let i = GaussInt::I;
    let base: Mat2 = match q {
        One | MinusOne => [[o, z], [z, o]],
        I | MinusI => [[i, z], [z, i.neg()]],
        J | MinusJ => [[z, o], [o.neg(), z]],
        K | MinusK => [[z, i], [i, z]],
    };
    match q {
        MinusOne | MinusI | MinusJ | MinusK => {
            [[base[0][0].neg(), base[0][1].neg()], [base[1][0].neg(), base[1][1].neg()]]
        }
        _ => base,
    }
}

#[cfg(test)]
fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [[GaussInt::ZERO; 2]; 2];
    for r in 0..2 {
        for c in 0..2 {
            out[r][c] = a[r][0].mul(b[0][c]).add(a[r][1].mul(b[1][c]));
        }
    }
    out
}
