use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graphs::EdgeSet;
use crate::groups::AllowedSet;
use crate::limits::Limits;
use crate::Rational;

/// Coboundary `delta X` of a vertex coloring, with every edge directed from its
/// lower to its higher vertex: `(delta X)_{ij} = X_j - X_i`.
#[derive(Debug, Clone)]
pub struct CoboundaryContext {
    v: usize,
    edges: Vec<(usize, usize)>,
    roots: Vec<usize>,
}

impl CoboundaryContext {
    pub fn new(e: &EdgeSet) -> Self {
        CoboundaryContext {
            v: e.v(),
            edges: e.edges().collect(),
            roots: e.component_roots(),
        }
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn components(&self) -> usize {
        self.roots
            .iter()
            .enumerate()
            .filter(|&(x, &r)| x == r)
            .count()
    }

    /// `v - c(E)`; the image has `f` to this power elements.
    pub fn image_rank(&self) -> usize {
        self.v - self.components()
    }

    pub fn is_root(&self, x: usize) -> bool {
        self.roots[x] == x
    }

    pub fn apply(&self, a: &AllowedSet, colors: &[usize]) -> Vec<usize> {
        let g = a.group();
        self.edges
            .iter()
            .map(|&(i, j)| g.sub(colors[j], colors[i]))
            .collect()
    }
}

fn check_budget(f: usize, exponent: usize, limits: &Limits, hint: &'static str) -> Result<()> {
    let work = (f as u128)
        .checked_pow(exponent as u32)
        .unwrap_or(u128::MAX);
    if work > limits.work_budget {
        return Err(Error::BudgetExceeded {
            work,
            budget: limits.work_budget,
            hint,
        });
    }
    Ok(())
}

fn ratio(count: u128, f: usize, exponent: usize) -> Rational {
    Rational::new(BigInt::from(count), BigInt::from(f).pow(exponent as u32))
}

pub(crate) fn count_colorings(e: &EdgeSet, a: &AllowedSet, reversed: bool) -> u128 {
    let g = a.group();
    let f = g.order();
    let v = e.v();
    let edges: Vec<(usize, usize)> = e
        .edges()
        .map(|(i, j)| if reversed { (j, i) } else { (i, j) })
        .collect();
    let mut colors = alloc::vec![0usize; v];
    let mut count = 0u128;
    loop {
        if edges
            .iter()
            .all(|&(i, j)| a.contains(g.sub(colors[j], colors[i])))
        {
            count += 1;
        }
        let mut x = 0;
        loop {
            if x == v {
                return count;
            }
            colors[x] += 1;
            if colors[x] < f {
                break;
            }
            colors[x] = 0;
            x += 1;
        }
    }
}

/// `f^{-v} |delta^{-1} A^E|`, enumerating every vertex coloring.
pub fn gamma_bruteforce(e: &EdgeSet, a: &AllowedSet, limits: &Limits) -> Result<Rational> {
    let f = a.group().order();
    check_budget(f, e.v(), limits, "use the cycle-space method")?;
    Ok(ratio(count_colorings(e, a, false), f, e.v()))
}

/// `f^{c(E) - v} |A^E ∩ Im(delta)|`. Each image element is reached exactly once
/// by fixing the color of every component's smallest vertex to 0; partial
/// colorings are abandoned as soon as an edge difference leaves `A`.
pub fn gamma_cyclespace(e: &EdgeSet, a: &AllowedSet, limits: &Limits) -> Result<Rational> {
    let ctx = CoboundaryContext::new(e);
    let f = a.group().order();
    let rank = ctx.image_rank();
    check_budget(f, rank, limits, "reduce the group order or vertex count")?;
    let v = e.v();
    // back[x]: lower endpoints of edges ending at x
    let mut back: Vec<Vec<usize>> = alloc::vec![Vec::new(); v];
    for &(i, j) in ctx.edges() {
        back[j].push(i);
    }
    let mut colors = alloc::vec![0usize; v];
    let mut count = 0u128;
    fn extend(
        x: usize,
        colors: &mut [usize],
        ctx: &CoboundaryContext,
        back: &[Vec<usize>],
        a: &AllowedSet,
        count: &mut u128,
    ) {
        if x == colors.len() {
            *count += 1;
            return;
        }
        let g = a.group();
        let choices = if ctx.is_root(x) { 1 } else { g.order() };
        for c in 0..choices {
            if back[x].iter().all(|&i| a.contains(g.sub(c, colors[i]))) {
                colors[x] = c;
                extend(x + 1, colors, ctx, back, a, count);
            }
        }
    }
    extend(0, &mut colors, &ctx, &back, a, &mut count);
    Ok(ratio(count, f, rank))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::tests::c4;
    use crate::groups::FiniteAbelianGroup;
    use crate::{int, rat};

    #[test]
    fn empty_graph_is_certain() {
        let a = AllowedSet::interval(&FiniteAbelianGroup::cyclic(5).unwrap(), 1).unwrap();
        let e = EdgeSet::empty(3).unwrap();
        let l = Limits::default();
        assert_eq!(gamma_bruteforce(&e, &a, &l).unwrap(), int(1));
        assert_eq!(gamma_cyclespace(&e, &a, &l).unwrap(), int(1));
    }

    #[test]
    fn triangle_examples() {
        let l = Limits::default();
        let k3 = EdgeSet::complete(3).unwrap();
        let z5 = FiniteAbelianGroup::cyclic(5).unwrap();
        let bar = AllowedSet::interval(&z5, 1).unwrap().complement();
        assert_eq!(count_colorings(&k3, &bar, false), 35);
        assert_eq!(gamma_bruteforce(&k3, &bar, &l).unwrap(), rat(7, 25));
        for f in 3..=9i64 {
            let a = AllowedSet::nonzero(&FiniteAbelianGroup::cyclic(f as u32).unwrap());
            let expect = (int(1) - rat(1, f)) * (int(1) - rat(2, f));
            assert_eq!(gamma_bruteforce(&k3, &a, &l).unwrap(), expect);
            assert_eq!(gamma_cyclespace(&k3, &a, &l).unwrap(), expect);
        }
    }

    #[test]
    fn cyclespace_examples() {
        let l = Limits::default();
        let z2 = FiniteAbelianGroup::cyclic(2).unwrap();
        let a = AllowedSet::from_indices(&z2, &[1]).unwrap();
        assert_eq!(
            gamma_cyclespace(&EdgeSet::complete(4).unwrap(), &a, &l).unwrap(),
            int(0)
        );
        let bar = AllowedSet::hamming(3, 1).unwrap().complement();
        assert_eq!(
            gamma_cyclespace(&EdgeSet::complete(3).unwrap(), &bar, &l).unwrap(),
            rat(10, 64)
        );
        let a = AllowedSet::nonzero(&FiniteAbelianGroup::cyclic(3).unwrap());
        assert_eq!(gamma_cyclespace(&c4(), &a, &l).unwrap(), rat(18, 81));
    }

    #[test]
    fn orientation_does_not_matter() {
        let g = FiniteAbelianGroup::new(&[2, 3]).unwrap();
        let a = AllowedSet::from_indices(&g, &[1, g.neg(1), 3]).unwrap();
        for mask in [0b111111u32, 0b011011, 0b101101] {
            let e = EdgeSet::new(4, mask).unwrap();
            assert_eq!(
                count_colorings(&e, &a, false),
                count_colorings(&e, &a, true)
            );
        }
    }

    #[test]
    fn budget_is_enforced() {
        let a = AllowedSet::nonzero(&FiniteAbelianGroup::cyclic(100).unwrap());
        let e = EdgeSet::complete(5).unwrap();
        let l = Limits::default().with_budget(1_000_000);
        assert!(matches!(
            gamma_bruteforce(&e, &a, &l),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(matches!(
            gamma_cyclespace(&e, &a, &l),
            Err(Error::BudgetExceeded { .. })
        ));
        // a triangle plus isolated vertices has a small image
        let tri = EdgeSet::from_edges(5, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert!(gamma_cyclespace(&tri, &a, &l).is_ok());
    }

    #[test]
    fn image_has_expected_size() {
        let g = FiniteAbelianGroup::cyclic(3).unwrap();
        let full = AllowedSet::full(&g);
        for mask in [0u32, 0b000111, 0b111111, 0b100001] {
            let e = EdgeSet::new(4, mask).unwrap();
            let ctx = CoboundaryContext::new(&e);
            let mut images = alloc::collections::BTreeSet::new();
            for code in 0..81usize {
                let colors: Vec<usize> = (0..4).map(|x| code / 3usize.pow(x) % 3).collect();
                images.insert(ctx.apply(&full, &colors));
            }
            assert_eq!(images.len(), 3usize.pow(ctx.image_rank() as u32));
        }
    }
}
