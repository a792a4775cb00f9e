//! Matrices indexed by the subgraph poset: zeta `j`, its Möbius inverse, the
//! weighted zeta `J_r = r^e j r^{-e}` and the transfer matrix
//! `M_r = J_{1-r} (-1)^e J_r^{-1}`.
//!
//! Orientation: entry `(H, E)` is nonzero only when `E ⊆ H`, so every matrix
//! here is lower triangular in the poset's linear extension and acts on column
//! vectors by `[M x]_H = sum_E M(H, E) x_E`.

mod matrix;
mod poly;

pub use matrix::SquareMatrix;
pub use poly::RationalPoly;

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::Result;
use crate::graphs::SubgraphPoset;
use crate::Rational;

pub type PolyMatrix = SquareMatrix<RationalPoly>;
pub type RationalMatrix = SquareMatrix<Rational>;

/// Down-sets and Möbius values of a subgraph poset, stored sparsely.
#[derive(Debug, Clone)]
pub struct PosetAlgebra {
    edge_counts: Vec<usize>,
    /// For each `H`: pairs `(E, mu(E, H))` over `E ⊆ H`, ascending in `E`.
    intervals: Vec<Vec<(usize, i64)>>,
}

impl PosetAlgebra {
    pub fn new(poset: &SubgraphPoset) -> Self {
        let n = poset.len();
        let mut intervals: Vec<Vec<(usize, i64)>> = Vec::with_capacity(n);
        for h in 0..n {
            let down = poset.down_set(h);
            // mu(E, H) = -sum_{E ⊊ G ⊆ H} mu(G, H), filled from the top of the interval down
            let mut mu: Vec<i64> = alloc::vec![0; down.len()];
            let last = down.len() - 1;
            mu[last] = 1;
            for a in (0..last).rev() {
                let e = down[a];
                let mut s = 0i64;
                for b in a + 1..=last {
                    if poset.member(e).is_subset_of(&poset.member(down[b])) {
                        s += mu[b];
                    }
                }
                mu[a] = -s;
            }
            intervals.push(down.into_iter().zip(mu).collect());
        }
        let edge_counts = poset.members().iter().map(|e| e.len()).collect();
        PosetAlgebra {
            edge_counts,
            intervals,
        }
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn edge_count(&self, i: usize) -> usize {
        self.edge_counts[i]
    }

    /// `(E, mu(E, H))` for every `E ⊆ H`.
    pub fn interval(&self, h: usize) -> &[(usize, i64)] {
        &self.intervals[h]
    }

    pub fn mobius(&self, e: usize, h: usize) -> i64 {
        self.intervals[h]
            .binary_search_by_key(&e, |&(x, _)| x)
            .map(|k| self.intervals[h][k].1)
            .unwrap_or(0)
    }

    fn gap(&self, e: usize, h: usize) -> u32 {
        (self.edge_counts[h] - self.edge_counts[e]) as u32
    }

    fn sign(&self, e: usize) -> i64 {
        if self.edge_counts[e].is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// `J_r x`.
    pub fn apply_j(&self, r: &Rational, x: &[Rational]) -> Vec<Rational> {
        let powers = powers_of(r, self.max_edges());
        (0..self.len())
            .map(|h| {
                let mut acc = Rational::zero();
                for &(e, _) in self.interval(h) {
                    acc += &powers[self.gap(e, h) as usize] * &x[e];
                }
                acc
            })
            .collect()
    }

    /// `J_r^{-1} x`, with entries `mu(E, H) r^{|H| - |E|}`.
    pub fn apply_j_inverse(&self, r: &Rational, x: &[Rational]) -> Vec<Rational> {
        let powers = powers_of(r, self.max_edges());
        (0..self.len())
            .map(|h| {
                let mut acc = Rational::zero();
                for &(e, mu) in self.interval(h) {
                    if mu != 0 {
                        acc += &powers[self.gap(e, h) as usize]
                            * &x[e]
                            * Rational::from_integer(mu.into());
                    }
                }
                acc
            })
            .collect()
    }

    /// `(-1)^e x`.
    pub fn apply_sign(&self, x: &[Rational]) -> Vec<Rational> {
        x.iter()
            .enumerate()
            .map(|(i, v)| if self.sign(i) < 0 { -v } else { v.clone() })
            .collect()
    }

    /// `M_r x = J_{1-r} (-1)^e J_r^{-1} x`.
    pub fn apply_m(&self, r: &Rational, x: &[Rational]) -> Vec<Rational> {
        let inner = self.apply_sign(&self.apply_j_inverse(r, x));
        self.apply_j(&(Rational::one() - r), &inner)
    }

    fn max_edges(&self) -> usize {
        self.edge_counts.iter().copied().max().unwrap_or(0)
    }

    fn build<T: Clone + Zero>(
        &self,
        mut entry: impl FnMut(usize, usize, i64) -> T,
    ) -> SquareMatrix<T> {
        let mut m = SquareMatrix::zeros(self.len());
        for h in 0..self.len() {
            for &(e, mu) in self.interval(h) {
                m.set(h, e, entry(e, h, mu));
            }
        }
        m
    }

    pub fn zeta_matrix(&self) -> PolyMatrix {
        self.build(|_, _, _| RationalPoly::one())
    }

    pub fn mobius_matrix(&self) -> PolyMatrix {
        self.build(|_, _, mu| RationalPoly::constant(Rational::from_integer(mu.into())))
    }

    /// `j` with integer entries.
    pub fn zeta_integers(&self) -> SquareMatrix<Rational> {
        self.build(|_, _, _| Rational::one())
    }

    /// `j^{-1}` with integer entries.
    pub fn mobius_integers(&self) -> SquareMatrix<Rational> {
        self.build(|_, _, mu| Rational::from_integer(mu.into()))
    }

    /// Diagonal `r^e` in the formal variable.
    pub fn weight_matrix(&self) -> PolyMatrix {
        let mut m = SquareMatrix::zeros(self.len());
        for i in 0..self.len() {
            m.set(
                i,
                i,
                RationalPoly::monomial(Rational::one(), self.edge_counts[i]),
            );
        }
        m
    }

    /// Diagonal `(-1)^e`.
    pub fn sign_matrix(&self) -> PolyMatrix {
        let mut m = SquareMatrix::zeros(self.len());
        for i in 0..self.len() {
            m.set(
                i,
                i,
                RationalPoly::constant(Rational::from_integer(self.sign(i).into())),
            );
        }
        m
    }

    /// Symbolic `J_r`: entry `(H, E) = r^{|H| - |E|}` for `E ⊆ H`.
    pub fn j_matrix(&self) -> PolyMatrix {
        self.build(|e, h, _| RationalPoly::monomial(Rational::one(), self.gap(e, h) as usize))
    }

    /// Symbolic `J_{1-r}`: entry `(H, E) = (1-r)^{|H| - |E|}`.
    pub fn j_matrix_one_minus(&self) -> PolyMatrix {
        let powers = poly_powers(&RationalPoly::one_minus_var(), self.max_edges());
        self.build(|e, h, _| powers[self.gap(e, h) as usize].clone())
    }

    /// Symbolic `J_r^{-1}`: entry `(H, E) = mu(E, H) r^{|H| - |E|}`.
    pub fn j_inverse(&self) -> PolyMatrix {
        self.build(|e, h, mu| {
            RationalPoly::monomial(Rational::from_integer(mu.into()), self.gap(e, h) as usize)
        })
    }

    /// Symbolic `M_r = J_{1-r} (-1)^e J_r^{-1}`, formed by exact polynomial products.
    pub fn m_matrix(&self) -> Result<PolyMatrix> {
        self.j_matrix_one_minus()
            .mul(&self.sign_matrix())?
            .mul(&self.j_inverse())
    }

    pub fn j_matrix_at(&self, r: &Rational) -> RationalMatrix {
        let powers = powers_of(r, self.max_edges());
        self.build(|e, h, _| powers[self.gap(e, h) as usize].clone())
    }

    pub fn j_inverse_at(&self, r: &Rational) -> RationalMatrix {
        let powers = powers_of(r, self.max_edges());
        self.build(|e, h, mu| &powers[self.gap(e, h) as usize] * Rational::from_integer(mu.into()))
    }

    pub fn sign_at(&self) -> RationalMatrix {
        let mut m = SquareMatrix::zeros(self.len());
        for i in 0..self.len() {
            m.set(i, i, Rational::from_integer(self.sign(i).into()));
        }
        m
    }

    /// `M_r` at a rational point, formed from the three evaluated factors.
    pub fn m_matrix_at(&self, r: &Rational) -> Result<RationalMatrix> {
        self.j_matrix_at(&(Rational::one() - r))
            .mul(&self.sign_at())?
            .mul(&self.j_inverse_at(r))
    }
}

fn powers_of(r: &Rational, max: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(max + 1);
    out.push(Rational::one());
    for k in 0..max {
        let next = &out[k] * r;
        out.push(next);
    }
    out
}

fn poly_powers(p: &RationalPoly, max: usize) -> Vec<RationalPoly> {
    let mut out = alloc::vec![RationalPoly::one()];
    for k in 0..max {
        let next = &out[k] * p;
        out.push(next);
    }
    out
}

/// Entrywise evaluation of a polynomial matrix.
pub fn evaluate(m: &PolyMatrix, r: &Rational) -> RationalMatrix {
    m.map(|p| p.eval(r))
}

/// Substitutes `r -> 1 - r` in every entry.
pub fn reflect(m: &PolyMatrix) -> PolyMatrix {
    let one_minus = RationalPoly::one_minus_var();
    m.map(|p| {
        let mut acc = RationalPoly::zero();
        let mut power = RationalPoly::one();
        for c in p.coeffs() {
            acc += &power.scale(c);
            power = &power * &one_minus;
        }
        acc
    })
}

pub fn zeta_matrix(poset: &SubgraphPoset) -> PolyMatrix {
    PosetAlgebra::new(poset).zeta_matrix()
}

pub fn mobius_matrix(poset: &SubgraphPoset) -> PolyMatrix {
    PosetAlgebra::new(poset).mobius_matrix()
}

pub fn j_matrix(poset: &SubgraphPoset) -> PolyMatrix {
    PosetAlgebra::new(poset).j_matrix()
}

pub fn j_inverse(poset: &SubgraphPoset) -> PolyMatrix {
    PosetAlgebra::new(poset).j_inverse()
}

pub fn m_matrix(poset: &SubgraphPoset) -> Result<PolyMatrix> {
    PosetAlgebra::new(poset).m_matrix()
}

#[cfg(test)]
mod tests;
