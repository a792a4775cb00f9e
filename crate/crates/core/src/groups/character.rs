use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use super::{FiniteAbelianGroup, GroupElement};
use crate::error::{Error, Result};

/// Element of the dual group, written with the same residues as a group element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character {
    residues: Vec<u32>,
}

impl Character {
    pub fn new(residues: Vec<u32>) -> Self {
        Character { residues }
    }

    pub fn residues(&self) -> &[u32] {
        &self.residues
    }

    pub fn is_trivial(&self) -> bool {
        self.residues.iter().all(|&r| r == 0)
    }
}

impl FiniteAbelianGroup {
    pub fn character(&self, index: usize) -> Character {
        Character::new(self.element(index).residues().to_vec())
    }

    /// Least common multiple of the cyclic orders; every pairing is an `exponent()`-th root of unity.
    pub fn exponent(&self) -> u64 {
        self.factors()
            .iter()
            .fold(1u64, |l, &n| num_integer::lcm(l, n as u64))
    }

    /// `k` such that `<p, q> = exp(2 pi i k / exponent())`, computed exactly.
    pub fn phase(&self, p: usize, q: usize) -> u64 {
        let l = self.exponent();
        let (pe, qe) = (self.element(p), self.element(q));
        pe.residues()
            .iter()
            .zip(qe.residues())
            .zip(self.factors())
            .fold(0u64, |acc, ((&a, &b), &n)| {
                (acc + (a as u64 * b as u64 % n as u64) * (l / n as u64)) % l
            })
    }

    pub fn pairing_index(&self, p: usize, q: usize) -> Complex64 {
        root_of_unity(self.phase(p, q), self.exponent())
    }
}

pub(crate) fn root_of_unity(k: u64, l: u64) -> Complex64 {
    let theta = 2.0 * PI * (k as f64) / (l as f64);
    Complex64::new(theta.cos(), theta.sin())
}

/// The canonical pairing `<p, q>`.
pub fn pairing(group: &FiniteAbelianGroup, p: &Character, q: &GroupElement) -> Result<Complex64> {
    let pi = group
        .index_of(&GroupElement::new(p.residues.clone()))
        .map_err(|_| Error::GroupMismatch)?;
    let qi = group.index_of(q).map_err(|_| Error::GroupMismatch)?;
    Ok(group.pairing_index(pi, qi))
}
