//! Exact counting of cover colorings and the exhaustive DP color function
//! and dual DP color function.
//!
//! A coloring of a cover picks one list index per vertex so that no matching
//! edge has both endpoints picked. [`count_colorings`] backtracks over
//! vertices in spanning-tree DFS order, so every vertex after a component
//! root is pruned by at least one colored neighbor;
//! [`count_colorings_oracle`] re-counts the same quantity by unpruned
//! product-space enumeration and exists to cross-check the first path.

use std::ops::RangeInclusive;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::cover::{enumerate_full_covers, Cover};
use crate::error::{input_err, Error, Result};
use crate::limits::Limits;
use crate::multigraph::{MultiGraph, Vertex};

/// Number of colorings of the cover (the value `P_DP(G, H)`).
pub fn count_colorings(h: &Cover) -> BigUint {
    let graph = h.graph();
    let order = graph.dfs_order();
    let mut position = vec![usize::MAX; graph.n() + 1];
    for (i, &x) in order.iter().enumerate() {
        position[x] = i;
    }
    // back[i]: for each edge to an earlier vertex, that vertex's position
    // and the table sending its chosen index to the index forbidden here
    let mut back: Vec<Vec<(usize, Vec<usize>)>> = vec![Vec::new(); order.len()];
    for edge in graph.edges() {
        let (pu, pv) = (position[edge.u], position[edge.v]);
        let (me, other) = if pu > pv {
            (edge.u, edge.v)
        } else {
            (edge.v, edge.u)
        };
        let table = h
            .map_from(edge.id, other)
            .expect("edge endpoint")
            .images()
            .to_vec();
        back[position[me]].push((position[other], table));
    }
    let mut chosen = vec![0usize; order.len()];
    count_rec(h.m(), &back, &mut chosen, 0)
}

fn count_rec(
    m: usize,
    back: &[Vec<(usize, Vec<usize>)>],
    chosen: &mut [usize],
    pos: usize,
) -> BigUint {
    if pos == back.len() {
        return BigUint::one();
    }
    let mut forbidden = vec![false; m];
    for (earlier, table) in &back[pos] {
        forbidden[table[chosen[*earlier]]] = true;
    }
    let mut total = BigUint::zero();
    for (c, blocked) in forbidden.iter().enumerate() {
        if !blocked {
            chosen[pos] = c;
            total += count_rec(m, back, chosen, pos + 1);
        }
    }
    total
}

/// Counts colorings by full product-space enumeration with no pruning.
/// Structurally independent of [`count_colorings`]; visits all `m^n`
/// assignments and therefore checks the resource limit first.
pub fn count_colorings_oracle(h: &Cover, limits: &Limits) -> Result<BigUint> {
    let n = h.graph().n();
    let m = h.m();
    let leaves = BigUint::from(m).pow(n as u32);
    if leaves > BigUint::from(limits.max_oracle_leaves) {
        return Err(Error::Resource {
            what: "oracle coloring count".into(),
            needed: leaves,
            limit: limits.max_oracle_leaves,
        });
    }
    let edges: Vec<(Vertex, Vertex, Vec<usize>)> = h
        .graph()
        .edges()
        .iter()
        .map(|e| {
            let sigma = h.perm(e.id).expect("edge has a permutation");
            (e.lo(), e.hi(), sigma.images().to_vec())
        })
        .collect();
    let mut assignment = vec![0usize; n + 1];
    let mut count = BigUint::zero();
    loop {
        let ok = edges
            .iter()
            .all(|(lo, hi, sigma)| sigma[assignment[*lo]] != assignment[*hi]);
        if ok {
            count += BigUint::one();
        }
        // odometer over assignments, vertex n fastest
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(count);
            }
            assignment[i] += 1;
            if assignment[i] < m {
                break;
            }
            assignment[i] = 0;
            i -= 1;
        }
    }
}

/// An extremal cover found by exhaustive search: the count, the first
/// witness in enumeration order, and its rank in that order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extremum {
    pub count: BigUint,
    pub witness: Cover,
    pub rank: u64,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Goal {
    Min,
    Max,
}

fn scan_covers(g: &MultiGraph, m: usize, limits: &Limits, goal: Goal) -> Result<Extremum> {
    if !g.is_connected() {
        return input_err(
            "color functions of disconnected graphs are the product over components; \
             compute per component",
        );
    }
    let mut best: Option<Extremum> = None;
    for (rank, cover) in enumerate_full_covers(g, m, limits)?.enumerate() {
        let count = count_colorings(&cover);
        let better = match &best {
            None => true,
            Some(b) => match goal {
                Goal::Min => count < b.count,
                Goal::Max => count > b.count,
            },
        };
        if better {
            let done = goal == Goal::Min && count.is_zero();
            best = Some(Extremum {
                count,
                witness: cover,
                rank: rank as u64,
            });
            if done {
                break; // nothing beats zero, and this is the first
            }
        }
    }
    Ok(best.expect("enumeration yields at least one cover"))
}

/// `P_DP(G, m)`: the minimum coloring count over all full m-fold covers,
/// with the first minimizing cover as witness. The graph must be connected;
/// for a disconnected graph the value is the product over components.
pub fn dp_color_function(g: &MultiGraph, m: usize, limits: &Limits) -> Result<Extremum> {
    scan_covers(g, m, limits, Goal::Min)
}

/// `P*_DP(G, m)`: the maximum coloring count over all full m-fold covers,
/// with the first maximizing cover as witness.
pub fn dual_dp_color_function(g: &MultiGraph, m: usize, limits: &Limits) -> Result<Extremum> {
    scan_covers(g, m, limits, Goal::Max)
}

/// `P(G, m)` as a count: colorings of the canonical cover, which biject
/// with the proper m-colorings.
pub fn chromatic_count(g: &MultiGraph, m: usize) -> Result<BigUint> {
    Ok(count_colorings(&Cover::canonical(g.clone(), m)?))
}

fn component_product(g: &MultiGraph, m: usize, limits: &Limits, which: Goal) -> Result<BigUint> {
    let mut product = BigUint::one();
    for (component, _) in g.components() {
        product *= scan_covers(&component, m, limits, which)?.count;
    }
    Ok(product)
}

/// `P_DP` of an arbitrary (possibly disconnected) graph: product of the
/// per-component minima.
pub fn dp_value(g: &MultiGraph, m: usize, limits: &Limits) -> Result<BigUint> {
    component_product(g, m, limits, Goal::Min)
}

/// `P*_DP` of an arbitrary graph: product of the per-component maxima.
pub fn dual_value(g: &MultiGraph, m: usize, limits: &Limits) -> Result<BigUint> {
    component_product(g, m, limits, Goal::Max)
}

/// The product lower bound `∏ (m - d_i)` attached to a vertex ordering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderingBound {
    pub value: BigUint,
    /// False when `m < max d_i`: the bound statement does not apply there
    /// and `value` is reported as zero.
    pub applicable: bool,
}

/// Evaluates the ordering lower bound on `P_DP(G, m)`: the product of
/// `m - d_i` where `d_i` counts edges from the i-th vertex back into the
/// ordering prefix.
pub fn ordering_lower_bound(g: &MultiGraph, order: &[Vertex], m: usize) -> Result<OrderingBound> {
    let (degrees, max) = g.ordering_degrees(order)?;
    if m < max {
        return Ok(OrderingBound {
            value: BigUint::zero(),
            applicable: false,
        });
    }
    let value = degrees.iter().map(|&d| BigUint::from(m - d)).product();
    Ok(OrderingBound {
        value,
        applicable: true,
    })
}

/// One row of a color-function table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub m: usize,
    pub p_dp: BigUint,
    pub chromatic: BigUint,
    pub p_dual: BigUint,
    pub min_witness: Cover,
    pub max_witness: Cover,
}

/// Per-m record of `(P_DP, P, P*_DP)` with witness covers for the extremes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorFunctionTable {
    pub graph: MultiGraph,
    pub rows: Vec<TableRow>,
}

/// Computes the full table for each `m` in the range by exhaustive search.
/// Every row is checked for `p_dp <= p <= p_dual` before it is emitted.
pub fn color_function_table(
    g: &MultiGraph,
    ms: RangeInclusive<usize>,
    limits: &Limits,
) -> Result<ColorFunctionTable> {
    if ms.is_empty() || *ms.start() < 1 {
        return input_err("m range must be nonempty with m >= 1");
    }
    let mut rows = Vec::new();
    for m in ms {
        let min = dp_color_function(g, m, limits)?;
        let max = dual_dp_color_function(g, m, limits)?;
        let chromatic = chromatic_count(g, m)?;
        if min.count > chromatic || chromatic > max.count {
            return Err(Error::Internal(format!(
                "sandwich violation at m={m}: {} <= {} <= {} fails",
                min.count, chromatic, max.count
            )));
        }
        rows.push(TableRow {
            m,
            p_dp: min.count,
            chromatic,
            p_dual: max.count,
            min_witness: min.witness,
            max_witness: max.witness,
        });
    }
    Ok(ColorFunctionTable {
        graph: g.clone(),
        rows,
    })
}

impl ColorFunctionTable {
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("m\tp_dp\tp\tp_dual\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\n",
                row.m, row.p_dp, row.chromatic, row.p_dual
            ));
        }
        out
    }

    /// JSON form; counts are decimal strings and witnesses are embedded in
    /// the cover text format.
    pub fn to_json(&self) -> String {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| {
                serde_json::json!({
                    "m": row.m,
                    "p_dp": row.p_dp.to_string(),
                    "p": row.chromatic.to_string(),
                    "p_dual": row.p_dual.to_string(),
                    "min_witness": row.min_witness.to_text(),
                    "max_witness": row.max_witness.to_text(),
                })
            })
            .collect();
        let value = serde_json::json!({
            "graph": self.graph.to_text(),
            "rows": rows,
        });
        serde_json::to_string_pretty(&value).expect("table serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::random_cover;
    use crate::multigraph::EdgeId;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn canonical_counts_are_chromatic() {
        let k3 = Cover::canonical(MultiGraph::complete(3), 3).unwrap();
        assert_eq!(count_colorings(&k3), big(6));
        let k2 = Cover::canonical(MultiGraph::path(2), 3).unwrap();
        assert_eq!(count_colorings(&k2), big(6));
        let c4 = Cover::canonical(MultiGraph::cycle(4), 2).unwrap();
        assert_eq!(count_colorings(&c4), big(2));
        // trees: m(m-1)^(n-1)
        let tree = Cover::canonical(MultiGraph::path(5), 2).unwrap();
        assert_eq!(count_colorings(&tree), big(2));
    }

    #[test]
    fn twister_counts_match_closed_forms() {
        for n in 2..=7usize {
            for m in 2..=4usize {
                let h = Cover::twister(MultiGraph::cycle(n), m).unwrap();
                let base = (m as u64 - 1).pow(n as u32);
                let expected = if n % 2 == 0 { base - 1 } else { base + 1 };
                assert_eq!(count_colorings(&h), big(expected), "twister C_{n} m={m}");
            }
        }
        let h = Cover::twister(MultiGraph::cycle(4), 3).unwrap();
        assert_eq!(count_colorings(&h), big(15));
        let h = Cover::twister(MultiGraph::cycle(5), 2).unwrap();
        assert_eq!(count_colorings(&h), big(2));
        let h = Cover::twister(MultiGraph::cycle(5), 3).unwrap();
        assert_eq!(count_colorings(&h), big(33));
    }

    #[test]
    fn oracle_agrees_with_backtracking_on_random_covers() {
        let limits = Limits::default();
        let graphs = [
            MultiGraph::cycle(3),
            MultiGraph::cycle(5),
            MultiGraph::complete(4),
            MultiGraph::new(3, &[(1, 2), (1, 2), (2, 3)]).unwrap(),
        ];
        let mut seed = 0;
        for g in &graphs {
            for m in 2..=3 {
                for _ in 0..50 {
                    seed += 1;
                    let h = random_cover(g, m, seed);
                    assert_eq!(
                        count_colorings(&h),
                        count_colorings_oracle(&h, &limits).unwrap(),
                        "graph {:?} m={m} seed={seed}",
                        g
                    );
                }
            }
        }
    }

    #[test]
    fn oracle_respects_leaf_limit() {
        let h = Cover::canonical(MultiGraph::path(3), 2).unwrap();
        assert_eq!(
            count_colorings_oracle(&h, &Limits::default()).unwrap(),
            big(2)
        );
        let tight = Limits {
            max_covers: 10,
            max_oracle_leaves: 7,
        };
        assert!(matches!(
            count_colorings_oracle(&h, &tight),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn dp_and_dual_on_cycles() {
        let limits = Limits::default();
        assert_eq!(
            dp_color_function(&MultiGraph::cycle(4), 2, &limits)
                .unwrap()
                .count,
            big(0)
        );
        assert_eq!(
            dp_color_function(&MultiGraph::cycle(3), 3, &limits)
                .unwrap()
                .count,
            big(6)
        );
        assert_eq!(
            dual_dp_color_function(&MultiGraph::cycle(3), 3, &limits)
                .unwrap()
                .count,
            big(9)
        );
        assert_eq!(
            dual_dp_color_function(&MultiGraph::cycle(4), 3, &limits)
                .unwrap()
                .count,
            big(18)
        );
        assert_eq!(
            dual_dp_color_function(&MultiGraph::cycle(2), 3, &limits)
                .unwrap()
                .count,
            big(6)
        );
    }

    #[test]
    fn diamond_extremes_at_m3() {
        // values fixed by the 36-cover search with oracle counting
        let limits = Limits::default();
        let diamond = MultiGraph::new(4, &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(
            dp_color_function(&diamond, 3, &limits).unwrap().count,
            big(6)
        );
        assert_eq!(
            dual_dp_color_function(&diamond, 3, &limits).unwrap().count,
            big(15)
        );
    }

    #[test]
    fn dual_sees_only_the_underlying_graph() {
        // P*_DP(G, m) = P*_DP(U, m) and P_DP(G, m) <= P_DP(U, m)
        let limits = Limits::default();
        let graphs = [
            MultiGraph::cycle(2),
            MultiGraph::new(3, &[(1, 2), (1, 2), (2, 3)]).unwrap(),
            MultiGraph::new(3, &[(1, 2), (1, 2), (2, 3), (3, 1)]).unwrap(),
            MultiGraph::new(4, &[(1, 2), (2, 3), (3, 4), (4, 1), (4, 1)]).unwrap(),
        ];
        for g in graphs {
            let u = g.underlying_graph();
            for m in 2..=3 {
                assert_eq!(
                    dual_dp_color_function(&g, m, &limits).unwrap().count,
                    dual_dp_color_function(&u, m, &limits).unwrap().count,
                    "dual differs from underlying on {g:?} m={m}"
                );
                assert!(
                    dp_color_function(&g, m, &limits).unwrap().count
                        <= dp_color_function(&u, m, &limits).unwrap().count,
                    "dp exceeds underlying on {g:?} m={m}"
                );
            }
        }
    }

    #[test]
    fn witnesses_are_deterministic_first_hits() {
        let limits = Limits::default();
        let g = MultiGraph::cycle(4);
        let a = dp_color_function(&g, 2, &limits).unwrap();
        let b = dp_color_function(&g, 2, &limits).unwrap();
        assert_eq!(a, b);
        assert_eq!(count_colorings(&a.witness), a.count);
    }

    #[test]
    fn disconnected_graphs_are_rejected_by_scans_but_multiply() {
        let limits = Limits::default();
        let g = MultiGraph::new(4, &[(1, 2), (3, 4)]).unwrap();
        assert!(dp_color_function(&g, 2, &limits).is_err());
        // two disjoint K_2: (m(m-1))^2
        assert_eq!(dp_value(&g, 3, &limits).unwrap(), big(36));
        assert_eq!(dual_value(&g, 3, &limits).unwrap(), big(36));
    }

    #[test]
    fn ordering_bound_examples() {
        let c4 = MultiGraph::cycle(4);
        let b = ordering_lower_bound(&c4, &[1, 2, 3, 4], 3).unwrap();
        assert!(b.applicable);
        assert_eq!(b.value, big(12));

        let double = MultiGraph::new(2, &[(1, 2), (1, 2)]).unwrap();
        let b = ordering_lower_bound(&double, &[1, 2], 3).unwrap();
        assert_eq!(b.value, big(3));
        let inapplicable = ordering_lower_bound(&double, &[1, 2], 1).unwrap();
        assert!(!inapplicable.applicable);
        assert_eq!(inapplicable.value, big(0));

        // trees: the bound is exact, m(m-1)^(n-1)
        let tree = MultiGraph::path(4);
        let order = tree.dfs_order();
        for m in 1..=4 {
            let b = ordering_lower_bound(&tree, &order, m).unwrap();
            assert_eq!(b.value, big((m * (m - 1).pow(3)) as u64));
        }
    }

    #[test]
    fn table_rows_and_formats() {
        let limits = Limits::default();
        let table = color_function_table(&MultiGraph::cycle(3), 2..=3, &limits).unwrap();
        assert_eq!(table.rows.len(), 2);
        assert_eq!(table.rows[0].p_dp, big(0));
        assert_eq!(table.rows[0].chromatic, big(0));
        assert_eq!(table.rows[0].p_dual, big(2));
        assert_eq!(table.rows[1].p_dp, big(6));
        assert_eq!(table.rows[1].chromatic, big(6));
        assert_eq!(table.rows[1].p_dual, big(9));

        let tsv = table.to_tsv();
        assert!(tsv.starts_with("m\tp_dp\tp\tp_dual\n"));
        assert!(tsv.contains("3\t6\t6\t9\n"));

        let json = table.to_json();
        assert!(json.contains("\"p_dual\": \"9\""));
        assert!(json.contains("cover m=3"));

        assert!(color_function_table(&MultiGraph::cycle(3), 0..=2, &limits).is_err());
    }

    #[test]
    fn monotone_sanity_canonical_in_range() {
        let limits = Limits::default();
        for g in [
            MultiGraph::cycle(4),
            MultiGraph::complete(4),
            MultiGraph::cycle(2),
        ] {
            for m in 1..=3 {
                let canonical = chromatic_count(&g, m).unwrap();
                let lo = dp_color_function(&g, m, &limits).unwrap().count;
                let hi = dual_dp_color_function(&g, m, &limits).unwrap().count;
                assert!(lo <= canonical && canonical <= hi);
            }
        }
    }

    #[test]
    fn deleting_twister_closing_edge_gives_path_count() {
        let h = Cover::twister(MultiGraph::cycle(4), 2).unwrap();
        let d = h.delete(EdgeId(4)).unwrap();
        assert_eq!(count_colorings(&d), big(2));
        let k3 = Cover::canonical(MultiGraph::complete(3), 3).unwrap();
        assert_eq!(count_colorings(&k3.delete(EdgeId(2)).unwrap()), big(12));
        let c2 = Cover::canonical(MultiGraph::cycle(2), 3).unwrap();
        assert_eq!(count_colorings(&c2.delete(EdgeId(1)).unwrap()), big(6));
    }

    #[test]
    fn contraction_counts() {
        // twister C_4 m=3, contract a path edge: count 9
        let h = Cover::twister(MultiGraph::cycle(4), 3).unwrap();
        let (c, _) = h.contract(EdgeId(2)).unwrap();
        assert_eq!(count_colorings(&c), big(9));
        // canonical C_2, contract: trivial cover counts m
        let c2 = Cover::canonical(MultiGraph::cycle(2), 3).unwrap();
        let (k1, _) = c2.contract(EdgeId(1)).unwrap();
        assert_eq!(count_colorings(&k1), big(3));
    }

    #[test]
    fn lift_preserves_counts() {
        let limits = Limits::default();
        // C_2 lifted from canonical K_2
        let c2 = MultiGraph::cycle(2);
        let base = Cover::canonical(c2.underlying_graph(), 3).unwrap();
        let lifted = base.lift_to_multigraph(&c2).unwrap();
        assert_eq!(count_colorings(&lifted), big(6));
        // fat triangle lifted from a K_3 twister
        let fat = MultiGraph::new(3, &[(1, 2), (1, 2), (2, 3), (2, 3), (3, 1), (3, 1)]).unwrap();
        let tw = Cover::twister(fat.underlying_graph(), 3).unwrap();
        let lifted = tw.lift_to_multigraph(&fat).unwrap();
        assert_eq!(count_colorings(&lifted), count_colorings(&tw));
        assert_eq!(count_colorings(&lifted), big(9));
        assert_eq!(
            count_colorings(&lifted),
            count_colorings_oracle(&lifted, &limits).unwrap()
        );
    }
}
