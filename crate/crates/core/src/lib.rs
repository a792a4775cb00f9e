//! Exact computation of group-valued graph coloring probabilities.
//!
//! Colors are elements of a finite Abelian group `F`; an edge `{u, w}` is
//! satisfied when the difference of its end colors lies in a symmetric allowed
//! set `A`. The probability that a uniform coloring satisfies every edge of `E`
//! is collected, for every isthmus-free edge set `E` on a fixed vertex set,
//! into a vector indexed by the subgraph poset. The crate builds that poset,
//! the weighted zeta matrices `J_r` and the transfer matrix
//! `M_r = J_{1-r} (-1)^e J_r^{-1}`, and checks the reciprocity identity that
//! relates the vector for `A` to the vector for its complement.
//!
//! Everything except the Fourier cross-check runs in exact rational arithmetic.
//! The crate is `no_std` and needs only `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod gamma;
pub mod graphs;
pub mod groups;
pub mod limits;
pub mod posetlin;
pub mod reference;

pub use error::{Error, Result};
pub use gamma::{GammaVector, Method};
pub use graphs::{EdgeSet, Girth, IsoClass, SubgraphPoset};
pub use groups::{AllowedSet, Character, FiniteAbelianGroup, GroupElement};
pub use limits::Limits;
pub use posetlin::{RationalPoly, SquareMatrix};

/// Exact rational number used throughout the crate.
pub type Rational = num_rational::BigRational;

pub(crate) fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub(crate) fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
