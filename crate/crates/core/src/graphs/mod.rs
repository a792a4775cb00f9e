//! Simple graphs on a fixed labeled vertex set, stored as edge bitmasks.
//!
//! Edge `{i, j}` with `i < j` has index `sum_{a < i} (v - 1 - a) + (j - i - 1)`,
//! i.e. pairs in lexicographic order.

mod chromatic;
mod iso;
mod poset;

pub use chromatic::chromatic_oracle;
pub use iso::{class_containment, iso_class_blocks, ClassContainment, IsoClass};
pub use poset::SubgraphPoset;

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Hard ceiling imposed by the 32-bit edge mask.
pub const MAX_VERTICES: usize = 8;

pub const fn pair_count(v: usize) -> usize {
    v * v.saturating_sub(1) / 2
}

pub fn edge_index(v: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < v);
    i * (2 * v - i - 1) / 2 + (j - i - 1)
}

pub fn edge_pair(v: usize, index: usize) -> (usize, usize) {
    let mut rest = index;
    for i in 0..v {
        let row = v - 1 - i;
        if rest < row {
            return (i, i + 1 + rest);
        }
        rest -= row;
    }
    panic!("edge index {index} out of range for v={v}");
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet {
    v: u8,
    bits: u32,
}

/// Length of the shortest cycle; forests have infinite girth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(u32),
    Infinite,
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

impl EdgeSet {
    pub fn new(v: usize, mask: u32) -> Result<Self> {
        if v == 0 || v > MAX_VERTICES {
            return Err(Error::VertexCountOutOfRange {
                v,
                min: 1,
                max: MAX_VERTICES,
            });
        }
        let m = pair_count(v);
        if m < 32 && mask >> m != 0 {
            let bad = (m..32).find(|&b| mask >> b & 1 == 1).unwrap();
            return Err(Error::EdgeOutOfRange { i: bad, j: bad, v });
        }
        Ok(EdgeSet {
            v: v as u8,
            bits: mask,
        })
    }

    pub fn empty(v: usize) -> Result<Self> {
        Self::new(v, 0)
    }

    pub fn complete(v: usize) -> Result<Self> {
        let m = pair_count(v);
        Self::new(v, if m >= 32 { u32::MAX } else { (1u32 << m) - 1 })
    }

    pub fn from_edges(v: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut mask = 0u32;
        for &(a, b) in edges {
            let (i, j) = (a.min(b), a.max(b));
            if i == j || j >= v {
                return Err(Error::EdgeOutOfRange { i: a, j: b, v });
            }
            mask |= 1 << edge_index(v, i, j);
        }
        Self::new(v, mask)
    }

    pub fn v(&self) -> usize {
        self.v as usize
    }

    pub fn mask(&self) -> u32 {
        self.bits
    }

    /// Number of edges, `e = |E|`.
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains_edge(&self, index: usize) -> bool {
        self.bits >> index & 1 == 1
    }

    pub fn without_edge(&self, index: usize) -> Self {
        EdgeSet {
            v: self.v,
            bits: self.bits & !(1 << index),
        }
    }

    pub fn is_subset_of(&self, other: &EdgeSet) -> bool {
        self.v == other.v && self.bits & !other.bits == 0
    }

    pub fn edge_indices(&self) -> impl Iterator<Item = usize> {
        let bits = self.bits;
        (0..32).filter(move |&b| bits >> b & 1 == 1)
    }

    /// Edges as `(i, j)` with `i < j`, in index order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> {
        let v = self.v();
        self.edge_indices().map(move |e| edge_pair(v, e))
    }

    /// Neighbor bitmask for each vertex.
    pub fn adjacency(&self) -> Vec<u32> {
        let mut adj = alloc::vec![0u32; self.v()];
        for (i, j) in self.edges() {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        adj
    }

    /// Component label of each vertex: the smallest vertex of its component.
    pub fn component_roots(&self) -> Vec<usize> {
        let v = self.v();
        let mut root: Vec<usize> = (0..v).collect();
        fn find(root: &mut [usize], mut x: usize) -> usize {
            while root[x] != x {
                root[x] = root[root[x]];
                x = root[x];
            }
            x
        }
        for (i, j) in self.edges() {
            let (a, b) = (find(&mut root, i), find(&mut root, j));
            if a != b {
                root[a.max(b)] = a.min(b);
            }
        }
        (0..v).map(|x| find(&mut root, x)).collect()
    }

    /// `c(E)`, counting isolated vertices as components.
    pub fn components(&self) -> usize {
        self.component_roots()
            .iter()
            .enumerate()
            .filter(|&(x, &r)| x == r)
            .count()
    }

    /// Rank `v - c(E)`, the exponent of the forest bound.
    pub fn rank(&self) -> usize {
        self.v() - self.components()
    }

    /// Edges whose removal increases `c(E)`, found by a low-link depth-first search.
    pub fn bridges(&self) -> Vec<usize> {
        let v = self.v();
        let adj = self.adjacency();
        let mut order = alloc::vec![usize::MAX; v];
        let mut low = alloc::vec![0usize; v];
        let mut counter = 0;
        let mut out = Vec::new();
        for start in 0..v {
            if order[start] != usize::MAX {
                continue;
            }
            // (vertex, parent, remaining neighbours)
            let mut stack = alloc::vec![(start, usize::MAX, adj[start])];
            order[start] = counter;
            low[start] = counter;
            counter += 1;
            while let Some(top) = stack.last_mut() {
                let (u, parent, rest) = *top;
                if rest == 0 {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[u]);
                        if low[u] > order[p] {
                            out.push(edge_index(v, p.min(u), p.max(u)));
                        }
                    }
                    continue;
                }
                let w = rest.trailing_zeros() as usize;
                top.2 &= rest - 1;
                if w == parent {
                    continue;
                }
                if order[w] == usize::MAX {
                    order[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push((w, u, adj[w]));
                } else {
                    low[u] = low[u].min(order[w]);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// True when no edge is a bridge, i.e. `c(E) = c(E - t)` for every `t` in `E`.
    pub fn is_isthmus_free(&self) -> bool {
        self.bridges().is_empty()
    }

    pub fn girth(&self) -> Girth {
        let v = self.v();
        let adj = self.adjacency();
        let mut best = u32::MAX;
        let mut dist = alloc::vec![u32::MAX; v];
        let mut parent = alloc::vec![usize::MAX; v];
        let mut queue = Vec::with_capacity(v);
        for root in 0..v {
            dist.iter_mut().for_each(|d| *d = u32::MAX);
            queue.clear();
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.push(root);
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                let mut nb = adj[u];
                while nb != 0 {
                    let w = nb.trailing_zeros() as usize;
                    nb &= nb - 1;
                    if dist[w] == u32::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        if best == u32::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    /// Relabels vertex `x` as `perm[x]`.
    pub fn permuted(&self, perm: &[usize]) -> EdgeSet {
        let v = self.v();
        let mut bits = 0;
        for (i, j) in self.edges() {
            let (a, b) = (perm[i], perm[j]);
            bits |= 1 << edge_index(v, a.min(b), a.max(b));
        }
        EdgeSet { v: self.v, bits }
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v={};edges=", self.v)?;
        for (n, (i, j)) in self.edges().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}{j}")?;
        }
        Ok(())
    }
}
