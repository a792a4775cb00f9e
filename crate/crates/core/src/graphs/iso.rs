use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{edge_index, pair_count, EdgeSet, SubgraphPoset};

/// Members of a poset that are isomorphic as graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoClass {
    pub label: String,
    /// Minimum mask over all vertex relabelings.
    pub canonical: EdgeSet,
    pub members: Vec<usize>,
}

impl IsoClass {
    pub fn edges(&self) -> usize {
        self.canonical.len()
    }
}

fn permutations(v: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..v).collect();
    // Heap's algorithm
    let mut c = alloc::vec![0usize; v];
    out.push(perm.clone());
    let mut i = 0;
    while i < v {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            out.push(perm.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Image of every edge index under every vertex permutation.
fn edge_permutations(v: usize) -> Vec<Vec<u8>> {
    permutations(v)
        .into_iter()
        .map(|p| {
            (0..pair_count(v))
                .map(|e| {
                    let (i, j) = super::edge_pair(v, e);
                    edge_index(v, p[i].min(p[j]), p[i].max(p[j])) as u8
                })
                .collect()
        })
        .collect()
}

fn canonical_with(e: &EdgeSet, tables: &[Vec<u8>]) -> EdgeSet {
    let best = tables
        .iter()
        .map(|t| e.edge_indices().fold(0u32, |m, x| m | 1 << t[x]))
        .min()
        .unwrap_or(0);
    EdgeSet::new(e.v(), best).expect("relabeling preserves the vertex count")
}

impl EdgeSet {
    pub fn canonical(&self) -> EdgeSet {
        canonical_with(self, &edge_permutations(self.v()))
    }
}

fn label(e: &EdgeSet) -> String {
    let edges = e.len();
    if edges == 0 {
        return String::from("empty");
    }
    let adj = e.adjacency();
    let active: Vec<usize> = (0..e.v()).filter(|&x| adj[x] != 0).collect();
    let k = active.len();
    let roots = e.component_roots();
    let connected = active.iter().all(|&x| roots[x] == roots[active[0]]);
    let degrees: Vec<u32> = active.iter().map(|&x| adj[x].count_ones()).collect();
    if connected {
        if edges == pair_count(k) {
            return format!("K{k}");
        }
        if degrees.iter().all(|&d| d == 2) {
            return format!("C{k}");
        }
        if edges + 1 == pair_count(k) {
            return format!("K{k}-e");
        }
    }
    format!("G{edges}#{:x}", e.mask())
}

/// Groups poset members by isomorphism type. Classes come densest first, the
/// empty graph last, ties broken by descending canonical mask.
pub fn iso_class_blocks(poset: &SubgraphPoset) -> Vec<IsoClass> {
    let tables = edge_permutations(poset.v());
    let mut classes: Vec<IsoClass> = Vec::new();
    let mut by_canon = alloc::collections::BTreeMap::new();
    for (i, e) in poset.members().iter().enumerate() {
        let canon = canonical_with(e, &tables);
        let slot = *by_canon.entry(canon.mask()).or_insert_with(|| {
            classes.push(IsoClass {
                label: label(&canon),
                canonical: canon,
                members: Vec::new(),
            });
            classes.len() - 1
        });
        classes[slot].members.push(i);
    }
    classes.sort_by_key(|c| core::cmp::Reverse((c.edges(), c.canonical.mask())));
    classes
}

/// Containment counts between two classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassContainment {
    /// Members of the lower class inside each member of the upper class.
    pub per_upper: usize,
    /// Members of the upper class containing each member of the lower class.
    pub per_lower: usize,
}

/// Containment counts for every ordered pair `(upper, lower)` of classes.
/// Returns `None` for a pair whose counts are not constant across a class,
/// which cannot happen for genuine isomorphism classes.
pub fn class_containment(
    poset: &SubgraphPoset,
    classes: &[IsoClass],
) -> Vec<Vec<Option<ClassContainment>>> {
    let count = |upper: usize, lower: &IsoClass| {
        lower
            .members
            .iter()
            .filter(|&&l| poset.member(l).is_subset_of(&poset.member(upper)))
            .count()
    };
    let contains = |upper: &IsoClass, lower: usize| {
        upper
            .members
            .iter()
            .filter(|&&u| poset.member(lower).is_subset_of(&poset.member(u)))
            .count()
    };
    classes
        .iter()
        .map(|up| {
            classes
                .iter()
                .map(|low| {
                    let a = count(up.members[0], low);
                    let b = contains(up, low.members[0]);
                    let uniform = up.members.iter().all(|&u| count(u, low) == a)
                        && low.members.iter().all(|&l| contains(up, l) == b);
                    uniform.then_some(ClassContainment {
                        per_upper: a,
                        per_lower: b,
                    })
                })
                .collect()
        })
        .collect()
}
