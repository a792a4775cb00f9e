use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{pair_count, EdgeSet, MAX_VERTICES};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// All isthmus-free edge sets on `v` labeled vertices, ordered by edge count
/// and then by mask. The order is a linear extension of inclusion and puts the
/// empty graph at index 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgraphPoset {
    v: usize,
    members: Vec<EdgeSet>,
    index: BTreeMap<u32, usize>,
}

impl SubgraphPoset {
    pub fn enumerate(v: usize) -> Result<Self> {
        Self::enumerate_with(v, &Limits::default())
    }

    pub fn enumerate_with(v: usize, limits: &Limits) -> Result<Self> {
        let max = limits.max_vertices.min(MAX_VERTICES);
        if !(2..=max).contains(&v) {
            return Err(Error::VertexCountOutOfRange { v, min: 2, max });
        }
        let mut members = Vec::new();
        for mask in 0..1u32 << pair_count(v) {
            let e = EdgeSet::new(v, mask)?;
            if e.is_isthmus_free() {
                members.push(e);
            }
        }
        members.sort_by_key(|e| (e.len(), e.mask()));
        let index = members
            .iter()
            .enumerate()
            .map(|(i, e)| (e.mask(), i))
            .collect();
        Ok(SubgraphPoset { v, members, index })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[EdgeSet] {
        &self.members
    }

    pub fn member(&self, i: usize) -> EdgeSet {
        self.members[i]
    }

    pub fn index_of(&self, e: &EdgeSet) -> Option<usize> {
        if e.v() != self.v {
            return None;
        }
        self.index.get(&e.mask()).copied()
    }

    /// Indices of members contained in member `h` (including `h`), ascending.
    pub fn down_set(&self, h: usize) -> Vec<usize> {
        let top = self.members[h];
        (0..=h)
            .filter(|&e| self.members[e].is_subset_of(&top))
            .collect()
    }

    /// Indices of members containing member `e` (including `e`), ascending.
    pub fn up_set(&self, e: usize) -> Vec<usize> {
        let bottom = self.members[e];
        (e..self.len())
            .filter(|&h| bottom.is_subset_of(&self.members[h]))
            .collect()
    }
}
