/// Resource limits for exhaustive searches.
///
/// Cover enumeration visits `(m!)^c` covers (`c` the cyclomatic number) and
/// the oracle counter visits `m^n` assignments; both are checked against
/// these limits before any work starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of covers a single enumeration may yield.
    pub max_covers: u64,
    /// Maximum number of leaves the unpruned oracle counter may visit.
    pub max_oracle_leaves: u64,
}

pub const DEFAULT_MAX_COVERS: u64 = 10_000_000;
pub const DEFAULT_MAX_ORACLE_LEAVES: u64 = 10_000_000;

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_covers: DEFAULT_MAX_COVERS,
            max_oracle_leaves: DEFAULT_MAX_ORACLE_LEAVES,
        }
    }
}
