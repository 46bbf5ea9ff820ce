//! Verification of the deletion-contraction relation at the cover level and
//! the color-function level, plus gap tables and polynomial-degree checks
//! for how far the DP color functions sit from the chromatic polynomial.

use std::ops::RangeInclusive;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::catalog::connected_multigraphs;
use crate::counting::{chromatic_count, count_colorings, dp_value, dual_value};
use crate::cover::{enumerate_full_covers, Cover};
use crate::error::{input_err, Error, Result};
use crate::formulas::{auto_formula, chromatic_polynomial, TargetFn};
use crate::limits::Limits;
use crate::multigraph::{EdgeId, MultiGraph, Vertex};
use crate::poly::IntPolynomial;

/// The four quantities of the cover-level deletion-contraction relation for
/// one `(cover, edge)` pair, plus the verdicts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DcReport {
    /// Colorings of the cover itself.
    pub lhs: BigUint,
    /// Colorings of the deleted cover.
    pub deleted: BigUint,
    /// Colorings of the contracted cover.
    pub contracted: BigUint,
    /// The twin condition: no parallel partner's matching shares an
    /// endpoint pair with the contracted edge's matching.
    pub equality_condition: bool,
    /// `lhs >= deleted - contracted`; must hold for every valid input.
    pub inequality_holds: bool,
    /// `lhs = deleted - contracted`; implied by the condition.
    pub equality_holds: bool,
}

/// Checks the cover-level relation for edge `e` by counting all three
/// covers.
pub fn dc_check_cover(h: &Cover, e: EdgeId) -> Result<DcReport> {
    dc_check_with_lhs(h, e, count_colorings(h))
}

fn dc_check_with_lhs(h: &Cover, e: EdgeId, lhs: BigUint) -> Result<DcReport> {
    let deleted = count_colorings(&h.delete(e)?);
    let (contracted_cover, _) = h.contract(e)?;
    let contracted = count_colorings(&contracted_cover);
    let equality_condition = h.twin_condition(e)?;
    let sum = &lhs + &contracted;
    Ok(DcReport {
        inequality_holds: sum >= deleted,
        equality_holds: sum == deleted,
        lhs,
        deleted,
        contracted,
        equality_condition,
    })
}

/// Color-function values entering the deletion-contraction bounds for one
/// edge, with both verdicts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DcBoundsReport {
    pub m: usize,
    pub edge: EdgeId,
    pub edge_multiplicity: usize,
    pub p_dp: BigUint,
    pub p_dual: BigUint,
    pub p_dp_deleted: BigUint,
    pub p_dual_deleted: BigUint,
    pub p_dp_contracted: BigUint,
    pub p_dual_contracted: BigUint,
    /// `P_DP(G-e) - P*_DP(G·e) <= P_DP(G)`.
    pub lower_holds: bool,
    pub lower_tight: bool,
    /// The upper bound `P*_DP(G) <= P*_DP(G-e) - P_DP(G·e)` is only claimed
    /// for edges of multiplicity 1; `None` means it was skipped.
    pub upper: Option<BoundVerdict>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundVerdict {
    pub holds: bool,
    pub tight: bool,
}

/// Evaluates both color-function bounds of the deletion-contraction
/// relation at `(g, e, m)` by exhaustive search. The deleted graph may be
/// disconnected; values multiply over components.
pub fn dc_bounds_check(
    g: &MultiGraph,
    e: EdgeId,
    m: usize,
    limits: &Limits,
) -> Result<DcBoundsReport> {
    let edge = g.edge(e)?.clone();
    let edge_multiplicity = g.multiplicity(edge.u, edge.v)?;
    let deleted = g.delete_edge(e)?;
    let (contracted, _) = g.contract_edge(e)?;

    let p_dp = dp_value(g, m, limits)?;
    let p_dual = dual_value(g, m, limits)?;
    let p_dp_deleted = dp_value(&deleted, m, limits)?;
    let p_dual_deleted = dual_value(&deleted, m, limits)?;
    let p_dp_contracted = dp_value(&contracted, m, limits)?;
    let p_dual_contracted = dual_value(&contracted, m, limits)?;

    // P_DP(G-e) - P*_DP(G·e) <= P_DP(G), rearranged to avoid negatives
    let lower_holds = p_dp_deleted <= &p_dp + &p_dual_contracted;
    let lower_tight = p_dp_deleted == &p_dp + &p_dual_contracted;
    let upper = (edge_multiplicity == 1).then(|| BoundVerdict {
        holds: &p_dual + &p_dp_contracted <= p_dual_deleted,
        tight: &p_dual + &p_dp_contracted == p_dual_deleted,
    });
    Ok(DcBoundsReport {
        m,
        edge: e,
        edge_multiplicity,
        p_dp,
        p_dual,
        p_dp_deleted,
        p_dual_deleted,
        p_dp_contracted,
        p_dual_contracted,
        lower_holds,
        lower_tight,
        upper,
    })
}

/// One row of a gap table: how far the DP color function and its dual sit
/// from the chromatic polynomial at a given `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapRow {
    pub m: usize,
    /// `P(G,m) - P_DP(G,m)`.
    pub gap_dp: BigUint,
    /// `P*_DP(G,m) - P(G,m)`.
    pub gap_dual: BigUint,
}

/// Tabulates both gaps over an m-range by exhaustive search. Both gaps are
/// nonnegative by the sandwich property; a negative value is a bug.
pub fn gap_table(
    g: &MultiGraph,
    ms: RangeInclusive<usize>,
    limits: &Limits,
) -> Result<Vec<GapRow>> {
    if ms.is_empty() || *ms.start() < 1 {
        return input_err("m range must be nonempty with m >= 1");
    }
    let mut rows = Vec::new();
    for m in ms {
        let p_dp = dp_value(g, m, limits)?;
        let p = chromatic_count(g, m)?;
        let p_dual = dual_value(g, m, limits)?;
        let gap_dp = checked_gap(&p, &p_dp, m, "P - P_DP")?;
        let gap_dual = checked_gap(&p_dual, &p, m, "P*_DP - P")?;
        rows.push(GapRow {
            m,
            gap_dp,
            gap_dual,
        });
    }
    Ok(rows)
}

fn checked_gap(hi: &BigUint, lo: &BigUint, m: usize, what: &str) -> Result<BigUint> {
    if hi < lo {
        return Err(Error::Internal(format!(
            "negative gap {what} at m={m}: {hi} < {lo}"
        )));
    }
    Ok(hi - lo)
}

/// Degree information about the gap between the chromatic polynomial and a
/// DP color function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapDegree {
    /// True when the gap polynomial came from a closed-form family formula;
    /// false when the degree was estimated by finite differencing of
    /// tabulated values.
    pub exact: bool,
    /// The gap polynomial, present only on the exact path.
    pub gap: Option<IntPolynomial>,
    /// Degree of the gap; `None` reports an identically zero gap.
    pub degree: Option<usize>,
}

/// Degree of `P(G,m) - P_DP(G,m)` (`which = Dp`) or `P*_DP(G,m) - P(G,m)`
/// (`which = Dual`): exact as polynomials when a family formula exists,
/// otherwise a clearly labeled finite-difference estimate from exhaustive
/// values.
pub fn degree_gap_check(g: &MultiGraph, which: TargetFn, limits: &Limits) -> Result<GapDegree> {
    let p = chromatic_polynomial(g);
    if let Some(formula) = auto_formula(g, which)? {
        let gap = match which {
            TargetFn::Dp => &p - &formula.poly,
            TargetFn::Dual => &formula.poly - &p,
            TargetFn::Chromatic => unreachable!("auto_formula rejects Chromatic"),
        };
        return Ok(GapDegree {
            exact: true,
            degree: gap.degree(),
            gap: Some(gap),
        });
    }
    // enough points to spot any degree up to n-1, the most either gap can
    // reach; search cost grows steeply in m, so no more than that
    let samples = g.n() + 1;
    let mut values: Vec<BigInt> = Vec::with_capacity(samples);
    for m in 2..(2 + samples) {
        let extreme = match which {
            TargetFn::Dp => dp_value(g, m, limits)?,
            TargetFn::Dual => dual_value(g, m, limits)?,
            TargetFn::Chromatic => unreachable!(),
        };
        let p_at = p.evaluate_u64(m as u64);
        let gap = match which {
            TargetFn::Dp => p_at - BigInt::from(extreme),
            _ => BigInt::from(extreme) - p_at,
        };
        values.push(gap);
    }
    Ok(GapDegree {
        exact: false,
        gap: None,
        degree: estimate_degree(values),
    })
}

fn estimate_degree(mut values: Vec<BigInt>) -> Option<usize> {
    let mut level: usize = 0;
    while values.len() > 1 {
        if values.iter().all(Zero::is_zero) {
            return level.checked_sub(1);
        }
        values = values.windows(2).map(|w| &w[1] - &w[0]).collect();
        level += 1;
    }
    // never vanished within the sample budget; report the best bound seen
    Some(level.saturating_sub(1))
}

/// `P(G,m) - ∏(m - d_i)` as polynomials for a vertex ordering; both sides
/// are monic of degree n, so the difference has degree at most `n - 1`.
pub fn ordering_gap_polynomial(g: &MultiGraph, order: &[Vertex]) -> Result<IntPolynomial> {
    let (degrees, _) = g.ordering_degrees(order)?;
    let mut bound = IntPolynomial::one();
    for d in degrees {
        bound = &bound * &IntPolynomial::var_minus(d as i64);
    }
    Ok(&chromatic_polynomial(g) - &bound)
}

/// One `(graph, m, cover, edge)` case of the relation sweep.
#[derive(Clone, Debug)]
pub struct SweepCase {
    pub graph_index: usize,
    pub m: usize,
    pub cover_rank: u64,
    pub edge: EdgeId,
    pub report: DcReport,
}

/// Aggregate outcome of a relation sweep.
#[derive(Clone, Debug)]
pub struct SweepSummary {
    /// The graph catalog the sweep ran over, in sweep order.
    pub graphs: Vec<MultiGraph>,
    pub cases: u64,
    pub inequality_failures: u64,
    /// Cases where the twin condition held but equality did not.
    pub conditional_equality_failures: u64,
    /// Cases where the condition failed and equality failed too: witnesses
    /// that the relation is strict without the condition.
    pub strict_inequality_cases: u64,
}

pub const SWEEP_TSV_HEADER: &str =
    "graph\tm\tedge\tcover\tlhs\tdeleted\tcontracted\tcondition\tequality";

impl SweepCase {
    pub fn tsv_row(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.graph_index,
            self.m,
            self.edge,
            self.cover_rank,
            self.report.lhs,
            self.report.deleted,
            self.report.contracted,
            self.report.equality_condition,
            self.report.equality_holds,
        )
    }
}

/// Runs the deletion-contraction relation over every edge of every
/// normalized cover of every connected multigraph with up to `n_max`
/// vertices and `max_edges` edges, for each fold size in `ms`. Each case is
/// handed to `visit` in deterministic order.
pub fn relation_sweep(
    n_max: usize,
    max_edges: usize,
    ms: &[usize],
    limits: &Limits,
    mut visit: impl FnMut(&SweepCase),
) -> Result<SweepSummary> {
    let graphs = connected_multigraphs(n_max, max_edges);
    let mut summary = SweepSummary {
        graphs: graphs.clone(),
        cases: 0,
        inequality_failures: 0,
        conditional_equality_failures: 0,
        strict_inequality_cases: 0,
    };
    for (graph_index, g) in graphs.iter().enumerate() {
        if g.edge_count() == 0 {
            continue;
        }
        for &m in ms {
            for (rank, cover) in (0_u64..).zip(enumerate_full_covers(g, m, limits)?) {
                let lhs = count_colorings(&cover);
                for e in g.edge_ids() {
                    let report = dc_check_with_lhs(&cover, e, lhs.clone())?;
                    summary.cases += 1;
                    if !report.inequality_holds {
                        summary.inequality_failures += 1;
                    }
                    if report.equality_condition && !report.equality_holds {
                        summary.conditional_equality_failures += 1;
                    }
                    if !report.equality_condition && !report.equality_holds {
                        summary.strict_inequality_cases += 1;
                    }
                    visit(&SweepCase {
                        graph_index,
                        m,
                        cover_rank: rank,
                        edge: e,
                        report,
                    });
                }
            }
        }
    }
    Ok(summary)
}
