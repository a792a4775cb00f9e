use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graphs::EdgeSet;
use crate::groups::{AllowedSet, FiniteAbelianGroup};
use crate::limits::Limits;

const IMAGINARY_TOLERANCE: f64 = 1e-9;

/// Boundary of an edge labelling by characters: at each vertex, incoming
/// labels minus outgoing ones (edges run from lower to higher vertex).
pub fn boundary(e: &EdgeSet, group: &FiniteAbelianGroup, labels: &[usize]) -> Vec<usize> {
    let mut out = alloc::vec![0usize; e.v()];
    for ((i, j), &p) in e.edges().zip(labels) {
        out[j] = group.add(out[j], p);
        out[i] = group.sub(out[i], p);
    }
    out
}

/// Signed fundamental cycles of a spanning forest, one per non-tree edge.
/// Entry `[c][t]` is `+1`, `-1` or `0`: the multiplicity of edge `t` (in index
/// order of `e.edges()`) in cycle `c`.
pub fn dual_cycle_space(e: &EdgeSet) -> Vec<Vec<i8>> {
    let v = e.v();
    let edges: Vec<(usize, usize)> = e.edges().collect();
    let mut parent: Vec<Option<(usize, usize)>> = alloc::vec![None; v]; // (parent vertex, edge slot)
    let mut depth = alloc::vec![usize::MAX; v];
    let mut tree = alloc::vec![false; edges.len()];
    for root in 0..v {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        let mut queue = alloc::vec![root];
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for (t, &(i, j)) in edges.iter().enumerate() {
                let w = if i == u {
                    j
                } else if j == u {
                    i
                } else {
                    continue;
                };
                if depth[w] == usize::MAX {
                    depth[w] = depth[u] + 1;
                    parent[w] = Some((u, t));
                    tree[t] = true;
                    queue.push(w);
                }
            }
        }
    }
    let mut cycles = Vec::new();
    for (t, &(i, j)) in edges.iter().enumerate() {
        if tree[t] {
            continue;
        }
        // traverse the chord i -> j, then walk the tree from j back to i
        let mut cycle = alloc::vec![0i8; edges.len()];
        cycle[t] = 1;
        let (mut a, mut b) = (j, i);
        while a != b {
            if depth[a] >= depth[b] {
                // walk a -> parent
                let (p, s) = parent[a].expect("non-root vertex has a parent");
                cycle[s] += if a < p { 1 } else { -1 };
                a = p;
            } else {
                // walk parent -> b
                let (p, s) = parent[b].expect("non-root vertex has a parent");
                cycle[s] += if p < b { 1 } else { -1 };
                b = p;
            }
        }
        cycles.push(cycle);
    }
    cycles
}

/// `[Gamma^A]_E = f^{-|E|} sum_{P in ker d} sum_{Q in A^E} <P, Q>_E`, with the
/// inner sum factored edgewise into `prod_t sum_{q in A} <P_t, q>`.
pub fn gamma_fourier(e: &EdgeSet, a: &AllowedSet, limits: &Limits) -> Result<f64> {
    let g = a.group();
    let f = g.order();
    let cycles = dual_cycle_space(e);
    let m = e.len();
    let work = (f as u128)
        .checked_pow(cycles.len() as u32)
        .unwrap_or(u128::MAX)
        .saturating_mul(m.max(1) as u128);
    if work > limits.work_budget {
        return Err(Error::BudgetExceeded {
            work,
            budget: limits.work_budget,
            hint: "the dual cycle space is too large for the Fourier check",
        });
    }
    let transform: Vec<Complex64> = (0..f)
        .map(|p| a.indices().map(|q| g.pairing_index(p, q)).sum())
        .collect();

    let mut coeffs = alloc::vec![0usize; cycles.len()];
    let mut labels = alloc::vec![0usize; m];
    let mut total = Complex64::new(0.0, 0.0);
    loop {
        labels.iter_mut().for_each(|l| *l = 0);
        for (cycle, &p) in cycles.iter().zip(&coeffs) {
            for (t, &s) in cycle.iter().enumerate() {
                match s {
                    1 => labels[t] = g.add(labels[t], p),
                    -1 => labels[t] = g.sub(labels[t], p),
                    _ => {}
                }
            }
        }
        debug_assert!(boundary(e, g, &labels).iter().all(|&x| x == 0));
        total += labels.iter().map(|&p| transform[p]).product::<Complex64>();

        let mut k = 0;
        loop {
            if k == coeffs.len() {
                let value = total / (f as f64).powi(m as i32);
                if value.im.abs() > IMAGINARY_TOLERANCE {
                    return Err(Error::FourierResidue {
                        imaginary: value.im,
                    });
                }
                return Ok(value.re);
            }
            coeffs[k] += 1;
            if coeffs[k] < f {
                break;
            }
            coeffs[k] = 0;
            k += 1;
        }
    }
}
