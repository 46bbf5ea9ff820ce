//! Shared fixtures for the criterion benchmarks.

use dpcolor::MultiGraph;

/// K_4 minus an edge: the smallest graph whose cover search is not a
/// single-cycle special case.
pub fn diamond() -> MultiGraph {
    MultiGraph::new(4, &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]).expect("diamond is valid")
}

/// Even cycle with one tripled edge; five edges, cyclomatic number 3.
pub fn fat_c4() -> MultiGraph {
    MultiGraph::new(4, &[(1, 2), (2, 3), (3, 4), (4, 1), (4, 1), (4, 1)]).expect("valid")
}
