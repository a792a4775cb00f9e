//! Finite Abelian groups as products of cyclic groups.
//!
//! Elements are stored as residue tuples and indexed `0..f` by a mixed-radix
//! encoding with the first factor most significant, so index 0 is the identity.
//! Characters reuse the same residue tuples; the pairing
//! `<p, q> = exp(2 pi i sum_i p_i q_i / n_i)` fixes the self-duality.

mod allowed;
mod character;

pub use allowed::AllowedSet;
pub use character::{pairing, Character};

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::limits::Limits;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    orders: Vec<u32>,
    strides: Vec<usize>,
    order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    residues: Vec<u32>,
}

impl GroupElement {
    pub fn new(residues: Vec<u32>) -> Self {
        GroupElement { residues }
    }

    pub fn residues(&self) -> &[u32] {
        &self.residues
    }
}

impl FiniteAbelianGroup {
    /// Product of cyclic groups `Z/n_1 x ... x Z/n_k`, capped at the default order limit.
    pub fn new(orders: &[u32]) -> Result<Self> {
        Self::with_cap(orders, Limits::DEFAULT_GROUP_ORDER)
    }

    pub fn with_cap(orders: &[u32], cap: usize) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::EmptyGroup);
        }
        let mut order: u128 = 1;
        for &n in orders {
            if n < 2 {
                return Err(Error::InvalidCyclicOrder(n));
            }
            order = order.saturating_mul(n as u128);
        }
        if order > cap as u128 {
            return Err(Error::GroupTooLarge { order, cap });
        }
        let mut strides = alloc::vec![1usize; orders.len()];
        for i in (0..orders.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * orders[i + 1] as usize;
        }
        Ok(FiniteAbelianGroup {
            orders: orders.to_vec(),
            strides,
            order: order as usize,
        })
    }

    pub fn cyclic(n: u32) -> Result<Self> {
        Self::new(&[n])
    }

    /// `(Z/2)^n`.
    pub fn binary(n: u32) -> Result<Self> {
        Self::new(&alloc::vec![2; n as usize])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn factors(&self) -> &[u32] {
        &self.orders
    }

    pub fn is_cyclic(&self) -> bool {
        self.orders.len() == 1
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::new(alloc::vec![0; self.orders.len()])
    }

    pub fn element(&self, index: usize) -> GroupElement {
        debug_assert!(index < self.order);
        let residues = self
            .orders
            .iter()
            .zip(&self.strides)
            .map(|(&n, &s)| ((index / s) % n as usize) as u32)
            .collect();
        GroupElement { residues }
    }

    pub fn index_of(&self, x: &GroupElement) -> Result<usize> {
        if x.residues.len() != self.orders.len()
            || x.residues.iter().zip(&self.orders).any(|(&r, &n)| r >= n)
        {
            return Err(Error::ElementOutOfRange {
                residues: x.residues.clone(),
            });
        }
        Ok(x.residues
            .iter()
            .zip(&self.strides)
            .map(|(&r, &s)| r as usize * s)
            .sum())
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order).map(move |i| self.element(i))
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.combine(a, b, |x, y, n| (x + y) % n)
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.combine(a, b, |x, y, n| (x + n - y) % n)
    }

    pub fn neg(&self, a: usize) -> usize {
        self.sub(0, a)
    }

    fn combine(&self, a: usize, b: usize, op: impl Fn(usize, usize, usize) -> usize) -> usize {
        if let [n] = self.orders[..] {
            return op(a, b, n as usize);
        }
        self.orders
            .iter()
            .zip(&self.strides)
            .map(|(&n, &s)| {
                let n = n as usize;
                op((a / s) % n, (b / s) % n, n) * s
            })
            .sum()
    }

    /// Hamming weight of an element: the number of nonzero residues.
    pub fn weight(&self, index: usize) -> u32 {
        self.orders
            .iter()
            .zip(&self.strides)
            .filter(|&(&n, &s)| !(index / s).is_multiple_of(n as usize))
            .count() as u32
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_multiply() {
        assert_eq!(FiniteAbelianGroup::new(&[5]).unwrap().order(), 5);
        assert_eq!(FiniteAbelianGroup::new(&[2, 2, 2]).unwrap().order(), 8);
        assert_eq!(FiniteAbelianGroup::new(&[3, 9]).unwrap().order(), 27);
    }

    #[test]
    fn rejects_bad_factors() {
        assert_eq!(FiniteAbelianGroup::new(&[]), Err(Error::EmptyGroup));
        assert_eq!(
            FiniteAbelianGroup::new(&[3, 1]),
            Err(Error::InvalidCyclicOrder(1))
        );
        assert!(matches!(
            FiniteAbelianGroup::new(&[2; 13]),
            Err(Error::GroupTooLarge {
                order: 8192,
                cap: 4096
            })
        ));
        assert!(FiniteAbelianGroup::with_cap(&[2; 13], 8192).is_ok());
    }

    #[test]
    fn mixed_radix_is_most_significant_first() {
        let g = FiniteAbelianGroup::new(&[3, 9]).unwrap();
        assert_eq!(g.element(0), g.identity());
        assert_eq!(g.element(10).residues(), &[1, 1]);
        assert_eq!(g.element(26).residues(), &[2, 8]);
        for i in 0..g.order() {
            assert_eq!(g.index_of(&g.element(i)).unwrap(), i);
        }
        assert!(g.index_of(&GroupElement::new(alloc::vec![3, 0])).is_err());
    }

    #[test]
    fn arithmetic_is_componentwise() {
        let g = FiniteAbelianGroup::new(&[3, 4]).unwrap();
        for a in 0..g.order() {
            assert_eq!(g.add(a, g.neg(a)), 0);
            for b in 0..g.order() {
                let (x, y) = (g.element(a), g.element(b));
                let expect: Vec<u32> = x
                    .residues()
                    .iter()
                    .zip(y.residues())
                    .zip(g.factors())
                    .map(|((&p, &q), &n)| (p + q) % n)
                    .collect();
                assert_eq!(g.element(g.add(a, b)).residues(), &expect[..]);
                assert_eq!(g.add(g.sub(a, b), b), a);
            }
        }
        assert_eq!(g.neg(0), 0);
    }
}
