//! The probability vector `Gamma^A` over the subgraph poset.
//!
//! `[Gamma^A]_E` is the probability that a uniform coloring `V -> F` has every
//! edge difference in `A`. Three independent routes compute it: direct
//! enumeration of vertex colorings, enumeration of the coboundary image (one
//! representative per coloring class), and the character double sum over the
//! kernel of the boundary map in floating point.

mod count;
mod fourier;
mod reciprocity;

pub use count::{gamma_bruteforce, gamma_cyclespace, CoboundaryContext};
pub use fourier::{boundary, dual_cycle_space, gamma_fourier};
pub use reciprocity::{
    apply_m, chromatic_via_m, gamma_plus, main_term, residual, verify_reciprocity,
    verify_reciprocity_vectors, ReciprocityReport,
};

use alloc::vec::Vec;
use core::fmt;

use crate::error::Result;
use crate::graphs::{EdgeSet, SubgraphPoset};
use crate::groups::AllowedSet;
use crate::limits::Limits;
use crate::Rational;

/// Exact counting route.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// All `f^v` vertex colorings.
    BruteForce,
    /// The `f^{v - c(E)}` elements of the coboundary image.
    CycleSpace,
    /// Cheapest exact route; currently always the coboundary image.
    Auto,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::BruteForce => "brute",
            Method::CycleSpace => "cycle",
            Method::Auto => "auto",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One exact value per poset member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaVector {
    values: Vec<Rational>,
    method: Method,
}

impl GammaVector {
    pub fn new(values: Vec<Rational>, method: Method) -> Self {
        GammaVector { values, method }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Rational> {
        self.values
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.values[i]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn method(&self) -> Method {
        self.method
    }
}

/// `[Gamma^A]_E` by the chosen exact method.
pub fn gamma_value(
    e: &EdgeSet,
    a: &AllowedSet,
    method: Method,
    limits: &Limits,
) -> Result<Rational> {
    match method {
        Method::BruteForce => gamma_bruteforce(e, a, limits),
        Method::CycleSpace | Method::Auto => gamma_cyclespace(e, a, limits),
    }
}

pub fn gamma_vector(
    poset: &SubgraphPoset,
    a: &AllowedSet,
    method: Method,
    limits: &Limits,
) -> Result<GammaVector> {
    let values = poset
        .members()
        .iter()
        .map(|e| gamma_value(e, a, method, limits))
        .collect::<Result<Vec<_>>>()?;
    Ok(GammaVector::new(values, method))
}

/// Floating-point vector from the character double sum.
pub fn gamma_vector_fourier(
    poset: &SubgraphPoset,
    a: &AllowedSet,
    limits: &Limits,
) -> Result<Vec<f64>> {
    poset
        .members()
        .iter()
        .map(|e| gamma_fourier(e, a, limits))
        .collect()
}
