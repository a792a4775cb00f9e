/// Size caps for the exhaustive routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group order accepted by constructors that enumerate the group.
    pub max_group_order: usize,
    /// Largest vertex count for poset enumeration.
    pub max_vertices: usize,
    /// Maximum number of colorings (or kernel elements) a single coordinate may enumerate.
    pub work_budget: u128,
}

impl Limits {
    pub const DEFAULT_GROUP_ORDER: usize = 4096;
    pub const DEFAULT_MAX_VERTICES: usize = 6;
    pub const DEFAULT_WORK_BUDGET: u128 = 100_000_000;

    pub fn with_budget(self, work_budget: u128) -> Self {
        Limits {
            work_budget,
            ..self
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_group_order: Self::DEFAULT_GROUP_ORDER,
            max_vertices: Self::DEFAULT_MAX_VERTICES,
            work_budget: Self::DEFAULT_WORK_BUDGET,
        }
    }
}
