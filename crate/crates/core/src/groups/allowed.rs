use alloc::vec::Vec;

use super::{FiniteAbelianGroup, GroupElement};
use crate::error::{Error, Result};
use crate::Rational;

/// Symmetric subset `A = -A` of a group: the permitted color differences along an edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AllowedSet {
    group: FiniteAbelianGroup,
    members: Vec<bool>,
    size: usize,
}

impl AllowedSet {
    fn from_members(group: FiniteAbelianGroup, members: Vec<bool>) -> Self {
        let size = members.iter().filter(|&&m| m).count();
        AllowedSet {
            group,
            members,
            size,
        }
    }

    /// Builds a set from element indices, rejecting it unless it is closed under negation.
    pub fn from_indices(group: &FiniteAbelianGroup, indices: &[usize]) -> Result<Self> {
        let mut members = alloc::vec![false; group.order()];
        for &i in indices {
            if i >= group.order() {
                return Err(Error::ElementOutOfRange {
                    residues: alloc::vec![i as u32],
                });
            }
            members[i] = true;
        }
        for i in indices.iter().copied() {
            let neg = group.neg(i);
            if !members[neg] {
                return Err(Error::AsymmetricAllowedSet {
                    element: group.element(i).residues().to_vec(),
                    negation: group.element(neg).residues().to_vec(),
                });
            }
        }
        Ok(Self::from_members(group.clone(), members))
    }

    pub fn explicit(group: &FiniteAbelianGroup, elements: &[GroupElement]) -> Result<Self> {
        let indices = elements
            .iter()
            .map(|x| group.index_of(x))
            .collect::<Result<Vec<_>>>()?;
        Self::from_indices(group, &indices)
    }

    /// Cyclic distant-color set `{x : k < x < f - k}`.
    pub fn interval(group: &FiniteAbelianGroup, k: usize) -> Result<Self> {
        if !group.is_cyclic() {
            return Err(Error::NotCyclic {
                factors: group.factors().len(),
            });
        }
        let f = group.order();
        if 2 * k + 1 > f {
            return Err(Error::IntervalTooWide { k, order: f });
        }
        let members = (0..f).map(|x| k < x && x < f - k).collect();
        Ok(Self::from_members(group.clone(), members))
    }

    /// In `(Z/2)^n`, the elements of Hamming weight greater than `k`.
    pub fn hamming(n: u32, k: i64) -> Result<Self> {
        if k < 0 || k > n as i64 {
            return Err(Error::HammingOutOfRange { n, k });
        }
        let group = FiniteAbelianGroup::binary(n)?;
        let members = (0..group.order())
            .map(|x| group.weight(x) as i64 > k)
            .collect();
        Ok(Self::from_members(group, members))
    }

    /// `F - {0}`: the allowed set whose coloring count is the chromatic polynomial.
    pub fn nonzero(group: &FiniteAbelianGroup) -> Self {
        let members = (0..group.order()).map(|x| x != 0).collect();
        Self::from_members(group.clone(), members)
    }

    pub fn full(group: &FiniteAbelianGroup) -> Self {
        Self::from_members(group.clone(), alloc::vec![true; group.order()])
    }

    pub fn empty(group: &FiniteAbelianGroup) -> Self {
        Self::from_members(group.clone(), alloc::vec![false; group.order()])
    }

    pub fn complement(&self) -> Self {
        Self::from_members(
            self.group.clone(),
            self.members.iter().map(|m| !m).collect(),
        )
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn contains(&self, index: usize) -> bool {
        self.members[index]
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| i)
    }

    /// Edge density `|A| / f`.
    pub fn alpha(&self) -> Rational {
        Rational::new(self.size.into(), self.group.order().into())
    }

    /// `1 - alpha`, the density of the complement.
    pub fn alpha_bar(&self) -> Rational {
        Rational::new(
            (self.group.order() - self.size).into(),
            self.group.order().into(),
        )
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.group.order()).all(|x| self.members[x] == self.members[self.group.neg(x)])
    }
}
