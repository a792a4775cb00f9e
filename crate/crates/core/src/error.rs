use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    EmptyGroup,
    InvalidCyclicOrder(u32),
    GroupTooLarge {
        order: u128,
        cap: usize,
    },
    NotCyclic {
        factors: usize,
    },
    IntervalTooWide {
        k: usize,
        order: usize,
    },
    HammingOutOfRange {
        n: u32,
        k: i64,
    },
    ElementOutOfRange {
        residues: Vec<u32>,
    },
    AsymmetricAllowedSet {
        element: Vec<u32>,
        negation: Vec<u32>,
    },
    GroupMismatch,
    VertexCountOutOfRange {
        v: usize,
        min: usize,
        max: usize,
    },
    EdgeOutOfRange {
        i: usize,
        j: usize,
        v: usize,
    },
    BudgetExceeded {
        work: u128,
        budget: u128,
        hint: &'static str,
    },
    FourierResidue {
        imaginary: f64,
    },
    NonPolynomial(String),
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyGroup => write!(f, "a group needs at least one cyclic factor"),
            Error::InvalidCyclicOrder(n) => write!(f, "cyclic factor of order {n} (must be >= 2)"),
            Error::GroupTooLarge { order, cap } => {
                write!(f, "group order {order} exceeds the cap of {cap}")
            }
            Error::NotCyclic { factors } => {
                write!(f, "interval allowed sets need a cyclic group, got {factors} factors")
            }
            Error::IntervalTooWide { k, order } => {
                write!(f, "interval k={k} needs 2k+1 <= f, but f={order}")
            }
            Error::HammingOutOfRange { n, k } => write!(f, "hamming threshold k={k} outside 0..={n}"),
            Error::ElementOutOfRange { residues } => {
                write!(f, "element {residues:?} is not in the group")
            }
            Error::AsymmetricAllowedSet { element, negation } => write!(
                f,
                "allowed set is not symmetric: {element:?} is listed but its negation {negation:?} is not"
            ),
            Error::GroupMismatch => write!(f, "operands belong to different groups"),
            Error::VertexCountOutOfRange { v, min, max } => {
                write!(f, "vertex count {v} outside {min}..={max}")
            }
            Error::EdgeOutOfRange { i, j, v } => write!(f, "edge {i}-{j} invalid on {v} vertices"),
            Error::BudgetExceeded { work, budget, hint } => {
                write!(f, "work {work} exceeds budget {budget}; {hint}")
            }
            Error::FourierResidue { imaginary } => write!(
                f,
                "Fourier sum left imaginary residue {imaginary:e}; kernel enumeration is wrong"
            ),
            Error::NonPolynomial(what) => write!(f, "expected a polynomial with integer coefficients: {what}"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
        }
    }
}

impl core::error::Error for Error {}
