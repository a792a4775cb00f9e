//! Displayed values from the worked examples, kept verbatim for comparison,
//! and closed forms for the cyclic and Hamming families.
//!
//! Matrices for `v = 4` are given in blocks over the isomorphism classes in
//! densest-first order, polynomial coefficients ascending in `abar` (or `alpha`
//! for the first factor). A block stands for its polynomial times the
//! containment indicator of the two classes.

use crate::posetlin::RationalPoly;
use crate::{int, rat, Rational};

/// Class order of the block displays.
pub const V4_CLASSES: [&str; 5] = ["K4", "K4-e", "C4", "K3", "empty"];

/// Transfer matrix for `v = 3`, complete graph first.
pub const PRINTED_M_V3: [[&[i64]; 2]; 2] = [[&[-1], &[1, -3, 3]], [&[], &[1]]];

/// Transfer matrix for `v = 4` as printed.
pub const PRINTED_M_V4: [[&[i64]; 5]; 5] = [
    [&[1], &[-1], &[1], &[-1, 3, -1, 1], &[1, -6, 15, -16]],
    [&[], &[-1], &[1], &[-1, 2], &[1, -5, 10, -3]],
    [&[], &[], &[1], &[], &[1, -4, 6, -4]],
    [&[], &[], &[], &[-1], &[1, -3, 3]],
    [&[], &[], &[], &[], &[1]],
];

/// Third factor `J_abar^{-1}` for `v = 4` as printed.
pub const PRINTED_J_INVERSE_V4: [[&[i64]; 5]; 5] = [
    [
        &[1],
        &[0, -1],
        &[0, 0, 1],
        &[0, 0, 0, 2],
        &[0, 0, 0, 0, 0, 0, -6],
    ],
    [&[], &[1], &[0, -1], &[0, 0, -1], &[0, 0, 0, 0, 0, 2]],
    [&[], &[], &[1], &[], &[0, 0, 0, 0, -1]],
    [&[], &[], &[], &[1], &[0, 0, 0, -1]],
    [&[], &[], &[], &[], &[1]],
];

/// Entry of a printed block display.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Printed {
    Poly(&'static [i64]),
    /// A symbol that is not a polynomial, e.g. a sign ambiguity.
    Placeholder(&'static str),
}

/// First factor `J_alpha` for `v = 4` as printed, in powers of `alpha`.
pub const PRINTED_J_ALPHA_V4: [[Printed; 5]; 5] = {
    use Printed::*;
    [
        [
            Poly(&[1]),
            Poly(&[0, 1]),
            Poly(&[0, 0, 1]),
            Poly(&[0, 0, 0, 1]),
            Poly(&[0, 0, 0, 0, 0, 0, 1]),
        ],
        [
            Poly(&[]),
            Poly(&[1]),
            Poly(&[0, 1]),
            Poly(&[0, 0, 1]),
            Poly(&[0, 0, 0, 0, 0, 1]),
        ],
        [
            Poly(&[]),
            Poly(&[]),
            Poly(&[1]),
            Poly(&[]),
            Poly(&[0, 0, 0, 1]),
        ],
        [
            Poly(&[]),
            Poly(&[]),
            Poly(&[]),
            Placeholder("±1"),
            Placeholder("c_9"),
        ],
        [Poly(&[]), Poly(&[]), Poly(&[]), Poly(&[]), Poly(&[1])],
    ]
};

/// A displayed cell that disagrees with the exact computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Erratum {
    pub matrix: &'static str,
    pub row_class: usize,
    pub col_class: usize,
    pub printed: Printed,
    /// Ascending coefficients of the computed entry.
    pub computed: &'static [i64],
    pub reason: &'static str,
}

/// Cells of the final `v = 4` transfer matrix whose printed values are wrong.
pub const M_V4_ERRATA: [Erratum; 2] = [
    Erratum {
        matrix: "M",
        row_class: 0,
        col_class: 3,
        printed: Printed::Poly(&[-1, 3, -1, 1]),
        computed: &[-1, 3],
        reason: "interval sum over {K3, three K4-e, K4}; the printed value breaks the chromatic polynomial of K4",
    },
    Erratum {
        matrix: "M",
        row_class: 1,
        col_class: 4,
        printed: Printed::Poly(&[1, -5, 10, -3]),
        computed: &[1, -5, 10, -8],
        reason: "the printed value makes the K4-e row sum to 5 instead of 0 at abar = 1",
    },
];

/// Cells of the displayed first factor `J_alpha` that differ from its definition.
pub const J_ALPHA_V4_ERRATA: [Erratum; 3] = [
    Erratum {
        matrix: "J_alpha",
        row_class: 2,
        col_class: 4,
        printed: Printed::Poly(&[0, 0, 0, 1]),
        computed: &[0, 0, 0, 0, 1],
        reason: "a 4-cycle has four edges, so the weight is alpha^4",
    },
    Erratum {
        matrix: "J_alpha",
        row_class: 3,
        col_class: 3,
        printed: Printed::Placeholder("±1"),
        computed: &[1],
        reason: "diagonal of a weighted zeta matrix is 1",
    },
    Erratum {
        matrix: "J_alpha",
        row_class: 3,
        col_class: 4,
        printed: Printed::Placeholder("c_9"),
        computed: &[0, 0, 0, 1],
        reason: "a triangle has three edges, so the weight is alpha^3",
    },
];

pub fn poly(coeffs: &[i64]) -> RationalPoly {
    RationalPoly::from_integers(coeffs)
}

pub fn printed_m_v4(row_class: usize, col_class: usize) -> RationalPoly {
    poly(PRINTED_M_V4[row_class][col_class])
}

/// True when the printed `M` cell is one of the known errata.
pub fn is_disputed_m_v4(row_class: usize, col_class: usize) -> bool {
    M_V4_ERRATA
        .iter()
        .any(|e| e.row_class == row_class && e.col_class == col_class)
}

/// `[M]` for `v = 4` with errata replaced by the computed values.
pub fn corrected_m_v4(row_class: usize, col_class: usize) -> RationalPoly {
    M_V4_ERRATA
        .iter()
        .find(|e| e.row_class == row_class && e.col_class == col_class)
        .map(|e| poly(e.computed))
        .unwrap_or_else(|| printed_m_v4(row_class, col_class))
}

/// Piecewise law for the triangle in `Z/f` with `A = {x : k < x < f - k}`:
/// returns `([Gamma^Abar]_K3, [Gamma^A]_K3)`.
pub fn cyclic_k3_law(f: u32, k: u32) -> (Rational, Rational) {
    let ab = Rational::new((2 * k + 1).into(), f.into());
    let inv_f2 = rat(1, (f as i64) * (f as i64));
    let upper = int(1) - int(3) * &ab + int(3) * &ab * &ab;
    if ab > rat(2, 3) {
        (upper, int(0))
    } else {
        let bar = rat(3, 4) * &ab * &ab + rat(1, 4) * &inv_f2;
        let set = int(1) - int(3) * &ab + rat(9, 4) * &ab * &ab - rat(1, 4) * &inv_f2;
        (bar, set)
    }
}

fn pow2(n: u32) -> Rational {
    Rational::from_integer(num_bigint::BigInt::from(2u32).pow(n))
}

/// Hamming family with `k = 1` on the triangle, as displayed:
/// `((3n+1) 4^{-n}, 1 - (3n+3) 2^{-n} + (3n^2+3n) 4^{-n})`.
pub fn hamming_k3_closed_form(n: u32) -> (Rational, Rational) {
    let m = n as i64;
    let (two, four) = (pow2(n), pow2(2 * n));
    let bar = int(3 * m + 1) / &four;
    let set = int(1) - int(3 * m + 3) / &two + int(3 * m * m + 3 * m) / &four;
    (bar, set)
}

/// Same quantities with `[Gamma^A]_K3` obtained from `[Gamma^Abar]_K3` through
/// the `v = 3` transfer row `1 - 3abar + 3abar^2`, abar = `(n+1) 2^{-n}`. The
/// quadratic coefficient comes out as `3n^2 + 3n + 2`.
pub fn hamming_k3_via_transfer(n: u32) -> (Rational, Rational) {
    let m = n as i64;
    let (two, four) = (pow2(n), pow2(2 * n));
    let bar = int(3 * m + 1) / &four;
    let set = int(1) - int(3 * m + 3) / &two + int(3 * m * m + 3 * m + 2) / &four;
    (bar, set)
}
