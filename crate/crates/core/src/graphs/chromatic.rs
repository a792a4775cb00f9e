use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::EdgeSet;
use crate::posetlin::RationalPoly;
use crate::Rational;

/// Chromatic polynomial of `(V, E)` in the number of colors, by deletion and
/// contraction. Isolated vertices contribute a factor each; bridges are fine.
pub fn chromatic_oracle(e: &EdgeSet) -> RationalPoly {
    let coeffs = deletion_contraction(&e.adjacency());
    RationalPoly::new(coeffs.into_iter().map(Rational::from_integer).collect())
}

fn deletion_contraction(adj: &[u32]) -> Vec<BigInt> {
    let n = adj.len();
    let Some(u) = (0..n).find(|&x| adj[x] != 0) else {
        let mut c = alloc::vec![BigInt::zero(); n + 1];
        c[n] = BigInt::one();
        return c;
    };
    let w = adj[u].trailing_zeros() as usize;

    let mut deleted = adj.to_vec();
    deleted[u] &= !(1 << w);
    deleted[w] &= !(1 << u);

    // merge w into u, then drop w and shift higher labels down
    let mut merged = deleted.clone();
    merged[u] |= merged[w];
    for x in 0..n {
        if merged[w] >> x & 1 == 1 {
            merged[x] |= 1 << u;
        }
    }
    merged.remove(w);
    let low = (1u32 << w) - 1;
    let contracted: Vec<u32> = merged
        .into_iter()
        .map(|m| {
            let m = m & !(1 << w);
            (m & low) | ((m >> 1) & !low)
        })
        .enumerate()
        .map(|(x, m)| m & !(1 << x))
        .collect();

    let mut out = deletion_contraction(&deleted);
    for (k, c) in deletion_contraction(&contracted).into_iter().enumerate() {
        out[k] -= c;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::tests::{c4, g};

    fn p(c: &[i64]) -> RationalPoly {
        RationalPoly::from_integers(c)
    }

    #[test]
    fn classical_values() {
        assert_eq!(
            chromatic_oracle(&EdgeSet::complete(3).unwrap()),
            p(&[0, 2, -3, 1])
        );
        assert_eq!(
            chromatic_oracle(&EdgeSet::complete(4).unwrap()),
            p(&[0, -6, 11, -6, 1])
        );
        assert_eq!(
            chromatic_oracle(&EdgeSet::empty(4).unwrap()),
            p(&[0, 0, 0, 0, 1])
        );
        // (f-1)^4 + (f-1)
        assert_eq!(chromatic_oracle(&c4()), p(&[0, -3, 6, -4, 1]));
        // path on 3 vertices plus an isolated one: f^2 (f-1)^2
        assert_eq!(
            chromatic_oracle(&g(4, &[(0, 1), (1, 2)])),
            p(&[0, 0, 1, -2, 1])
        );
    }

    #[test]
    fn matches_proper_coloring_count() {
        for v in 1..=5 {
            for mask in (0..1u32 << crate::graphs::pair_count(v)).step_by(7) {
                let e = EdgeSet::new(v, mask).unwrap();
                let chi = chromatic_oracle(&e);
                for f in 1..=4usize {
                    let mut count = 0i64;
                    let total = f.pow(v as u32);
                    for code in 0..total {
                        let color = |x: usize| code / f.pow(x as u32) % f;
                        if e.edges().all(|(i, j)| color(i) != color(j)) {
                            count += 1;
                        }
                    }
                    assert_eq!(
                        chi.eval(&crate::int(f as i64)),
                        crate::int(count),
                        "{e} f={f}"
                    );
                }
            }
        }
    }
}
