//! The chromatic polynomial via memoized deletion-contraction, and the
//! closed-form color-function formulas for the graph families that have
//! them: trees, cycles, unicyclic graphs, fat trees, even cycles with one
//! fat edge, even cycles glued at a vertex, odd cycles sharing an edge, and
//! pendant extensions of all of these.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::catalog::canonical_key;
use crate::error::{input_err, Result};
use crate::multigraph::{EdgeId, GraphClass, MultiGraph, Vertex};
use crate::poly::IntPolynomial;

/// Which color function a formula computes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TargetFn {
    /// The DP color function `P_DP` (minimum over covers).
    Dp,
    /// The chromatic polynomial `P`.
    Chromatic,
    /// The dual DP color function `P*_DP` (maximum over covers).
    Dual,
}

/// Recognized graph family of a closed-form formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Tree {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Unicyclic {
        n: usize,
        cycle_len: usize,
    },
    FatTree {
        degrees: Vec<usize>,
    },
    /// Even cycle `C_{2k+2}` with one edge of multiplicity `l`.
    FatEvenCycle {
        k: usize,
        l: usize,
    },
    /// Even cycles `C_{2k}` and `C_{2l}` sharing exactly one vertex.
    GluedEvenCycles {
        k: usize,
        l: usize,
    },
    /// Odd cycles `C_{2k+1}` and `C_{2l+1}` sharing exactly one edge.
    TwinOddCycles {
        k: usize,
        l: usize,
    },
    Complete {
        n: usize,
    },
    /// A pendant vertex of degree `k` attached to an inner family.
    Pendant {
        k: usize,
        inner: Box<Family>,
    },
}

/// A closed-form color-function formula with its validity range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyFormula {
    pub family: Family,
    /// The color functions this polynomial equals (an odd-cycle `P_DP`
    /// formula, say, is also the chromatic polynomial).
    pub gives: Vec<TargetFn>,
    pub poly: IntPolynomial,
    /// Structured rendering, e.g. `(m-1)^4 - (m-1)^2`.
    pub expression: String,
    /// The formula is proven for all `m >= min_m` only.
    pub min_m: usize,
}

impl FamilyFormula {
    pub fn gives(&self, which: TargetFn) -> bool {
        self.gives.contains(&which)
    }

    /// Evaluates inside the validity range; evaluation outside it is an
    /// error, not an extrapolation.
    pub fn evaluate(&self, m: usize) -> Result<BigInt> {
        if m < self.min_m {
            return input_err(format!(
                "formula for {:?} is valid for m >= {}, asked at m = {m}",
                self.family, self.min_m
            ));
        }
        Ok(self.poly.evaluate_u64(m as u64))
    }
}

fn mm1() -> IntPolynomial {
    IntPolynomial::var_minus(1)
}

fn pow_expr(base: &str, e: usize) -> String {
    match e {
        0 => "1".into(),
        1 => base.into(),
        _ => format!("{base}^{e}"),
    }
}

/// `m(m-1)^(n-1)`: all three color functions of a tree on `n` vertices.
pub fn tree_formula(n: usize) -> Result<FamilyFormula> {
    if n < 1 {
        return input_err("tree formula needs n >= 1");
    }
    let poly = &IntPolynomial::var() * &mm1().pow(n as u32 - 1);
    let expression = if n == 1 {
        "m".to_string()
    } else {
        format!("m{}", pow_expr("(m-1)", n - 1))
    };
    Ok(FamilyFormula {
        family: Family::Tree { n },
        gives: vec![TargetFn::Dp, TargetFn::Chromatic, TargetFn::Dual],
        poly,
        expression,
        min_m: 1,
    })
}

/// `(m-1)^n + (-1)^n (m-1)`: the chromatic polynomial of a cycle.
pub fn cycle_p(n: usize) -> Result<FamilyFormula> {
    if n < 2 {
        return input_err("cycle formulas need n >= 2");
    }
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    let poly = &mm1().pow(n as u32) + &(&IntPolynomial::constant(sign) * &mm1());
    let op = if sign == 1 { '+' } else { '-' };
    Ok(FamilyFormula {
        family: Family::Cycle { n },
        gives: vec![TargetFn::Chromatic],
        poly,
        expression: format!("{} {op} (m-1)", pow_expr("(m-1)", n)),
        min_m: 1,
    })
}

/// The DP color function of a cycle: `(m-1)^n - 1` for even `n`, the
/// chromatic polynomial for odd `n`. Valid for `m >= 2`.
pub fn cycle_dp(n: usize) -> Result<FamilyFormula> {
    if n < 2 {
        return input_err("cycle formulas need n >= 2");
    }
    let (poly, gives, expression) = if n.is_multiple_of(2) {
        (
            &mm1().pow(n as u32) - &IntPolynomial::one(),
            vec![TargetFn::Dp],
            format!("{} - 1", pow_expr("(m-1)", n)),
        )
    } else {
        (
            &mm1().pow(n as u32) - &mm1(),
            vec![TargetFn::Dp, TargetFn::Chromatic],
            format!("{} - (m-1)", pow_expr("(m-1)", n)),
        )
    };
    Ok(FamilyFormula {
        family: Family::Cycle { n },
        gives,
        poly,
        expression,
        min_m: 2,
    })
}

/// The dual DP color function of a cycle: `(m-1)^n + 1` for odd `n`, the
/// chromatic polynomial for even `n`. Valid for `m >= 2`.
pub fn cycle_dual(n: usize) -> Result<FamilyFormula> {
    if n < 2 {
        return input_err("cycle formulas need n >= 2");
    }
    let (poly, gives, expression) = if n % 2 == 1 {
        (
            &mm1().pow(n as u32) + &IntPolynomial::one(),
            vec![TargetFn::Dual],
            format!("{} + 1", pow_expr("(m-1)", n)),
        )
    } else {
        (
            &mm1().pow(n as u32) + &mm1(),
            vec![TargetFn::Dual, TargetFn::Chromatic],
            format!("{} + (m-1)", pow_expr("(m-1)", n)),
        )
    };
    Ok(FamilyFormula {
        family: Family::Cycle { n },
        gives,
        poly,
        expression,
        min_m: 2,
    })
}

/// DP color function of a simple unicyclic graph on `n` vertices whose
/// cycle has `cycle_len` vertices: `(m-1)^n - (m-1)^(n-2k)`.
pub fn unicyclic_dp(n: usize, cycle_len: usize) -> Result<FamilyFormula> {
    if cycle_len < 3 || cycle_len > n {
        return input_err("unicyclic formulas need 3 <= cycle_len <= n");
    }
    let k = cycle_len / 2; // cycle is C_2k or C_(2k+1)
    let low = n - 2 * k;
    let poly = &mm1().pow(n as u32) - &mm1().pow(low as u32);
    let gives = if cycle_len % 2 == 1 {
        vec![TargetFn::Dp, TargetFn::Chromatic]
    } else {
        vec![TargetFn::Dp]
    };
    Ok(FamilyFormula {
        family: Family::Unicyclic { n, cycle_len },
        gives,
        poly,
        expression: format!("{} - {}", pow_expr("(m-1)", n), pow_expr("(m-1)", low)),
        min_m: 2,
    })
}

/// Dual DP color function of a simple unicyclic graph:
/// `(m-1)^n + (m-1)^(n-2k+1)` when the cycle is even, exponent one lower
/// when odd.
pub fn unicyclic_dual(n: usize, cycle_len: usize) -> Result<FamilyFormula> {
    if cycle_len < 3 || cycle_len > n {
        return input_err("unicyclic formulas need 3 <= cycle_len <= n");
    }
    let k = cycle_len / 2;
    let (low, gives) = if cycle_len.is_multiple_of(2) {
        (n - 2 * k + 1, vec![TargetFn::Dual, TargetFn::Chromatic])
    } else {
        (n - 2 * k - 1, vec![TargetFn::Dual])
    };
    let poly = &mm1().pow(n as u32) + &mm1().pow(low as u32);
    Ok(FamilyFormula {
        family: Family::Unicyclic { n, cycle_len },
        gives,
        poly,
        expression: format!("{} + {}", pow_expr("(m-1)", n), pow_expr("(m-1)", low)),
        min_m: 2,
    })
}

/// DP color function of a multigraph whose underlying graph is a tree:
/// `∏ (m - d_i)` over an ordering in which each vertex has at most one
/// earlier neighbor, valid for `m >= max d_i`.
pub fn fat_tree_dp(degrees: &[usize]) -> Result<FamilyFormula> {
    if degrees.is_empty() || degrees[0] != 0 {
        return input_err("fat-tree degree sequence must start with d_1 = 0");
    }
    let mut poly = IntPolynomial::one();
    for &d in degrees {
        poly = &poly * &IntPolynomial::var_minus(d as i64);
    }
    // group equal factors for display: m(m-1)^2(m-3)
    let mut counts: Vec<(usize, usize)> = Vec::new();
    let mut sorted = degrees.to_vec();
    sorted.sort_unstable();
    for d in sorted {
        match counts.last_mut() {
            Some((val, c)) if *val == d => *c += 1,
            _ => counts.push((d, 1)),
        }
    }
    let expression = counts
        .iter()
        .map(|&(d, c)| {
            let base = if d == 0 {
                "m".to_string()
            } else {
                format!("(m-{d})")
            };
            pow_expr(&base, c)
        })
        .collect::<String>();
    let max = *degrees.iter().max().unwrap();
    Ok(FamilyFormula {
        family: Family::FatTree {
            degrees: degrees.to_vec(),
        },
        gives: vec![TargetFn::Dp],
        poly,
        expression,
        min_m: max.max(1),
    })
}

/// One pendant-vertex step: multiplies by `(m-k)` for the DP color
/// function of a degree-k pendant, by `(m-1)` for the chromatic polynomial
/// and the dual DP color function.
pub fn pendant_step(inner: &IntPolynomial, k: usize, which: TargetFn) -> IntPolynomial {
    let factor = match which {
        TargetFn::Dp => IntPolynomial::var_minus(k as i64),
        TargetFn::Chromatic | TargetFn::Dual => IntPolynomial::var_minus(1),
    };
    inner * &factor
}

/// DP color function of an even cycle `C_{2k+2}` with one edge of
/// multiplicity `l`: `(m-1)^(2k+1)(m-l) - l`, valid for `m >= l+1`.
pub fn fat_even_cycle_dp(k: usize, l: usize) -> Result<FamilyFormula> {
    if k < 1 || l < 1 {
        return input_err("fat even cycle formula needs k, l >= 1");
    }
    let poly = &(&mm1().pow(2 * k as u32 + 1) * &IntPolynomial::var_minus(l as i64))
        - &IntPolynomial::constant(l as i64);
    Ok(FamilyFormula {
        family: Family::FatEvenCycle { k, l },
        gives: vec![TargetFn::Dp],
        poly,
        expression: format!("{}(m-{l}) - {l}", pow_expr("(m-1)", 2 * k + 1)),
        min_m: l + 1,
    })
}

fn glue_quotient(k: usize, l: usize) -> Result<IntPolynomial> {
    let numerator = &(&mm1().pow(2 * k as u32) - &IntPolynomial::one())
        * &(&mm1().pow(2 * l as u32) - &IntPolynomial::one());
    // divisibility by m is part of the formula being a polynomial identity;
    // a remainder here means an implementation bug
    numerator.divide_exact(&IntPolynomial::var())
}

/// DP color function of two even cycles `C_{2k}`, `C_{2l}` sharing one
/// vertex: `((m-1)^(2k) - 1)((m-1)^(2l) - 1) / m`, valid for `m >= 2`.
pub fn glued_even_cycles_dp(k: usize, l: usize) -> Result<FamilyFormula> {
    if k < 1 || l < 1 {
        return input_err("glued even cycles formula needs k, l >= 1");
    }
    Ok(FamilyFormula {
        family: Family::GluedEvenCycles { k, l },
        gives: vec![TargetFn::Dp],
        poly: glue_quotient(k, l)?,
        expression: format!(
            "({} - 1)({} - 1)/m",
            pow_expr("(m-1)", 2 * k),
            pow_expr("(m-1)", 2 * l)
        ),
        min_m: 2,
    })
}

/// Dual DP color function of two odd cycles `C_{2k+1}`, `C_{2l+1}` sharing
/// exactly one edge: `(m-1)^(2k+2l) + (m-1) - ((m-1)^(2k)-1)((m-1)^(2l)-1)/m`,
/// valid for `m >= 2`.
pub fn twin_odd_cycles_dual(k: usize, l: usize) -> Result<FamilyFormula> {
    if k < 1 || l < 1 {
        return input_err("twin odd cycles formula needs k, l >= 1");
    }
    let poly = &(&mm1().pow(2 * (k + l) as u32) + &mm1()) - &glue_quotient(k, l)?;
    Ok(FamilyFormula {
        family: Family::TwinOddCycles { k, l },
        gives: vec![TargetFn::Dual],
        poly,
        expression: format!(
            "{} + (m-1) - ({} - 1)({} - 1)/m",
            pow_expr("(m-1)", 2 * (k + l)),
            pow_expr("(m-1)", 2 * k),
            pow_expr("(m-1)", 2 * l)
        ),
        min_m: 2,
    })
}

/// `∏_{i=0}^{n-1} (m-i)`: the chromatic polynomial of the complete graph.
pub fn complete_p(n: usize) -> Result<FamilyFormula> {
    if n < 1 {
        return input_err("complete graph formula needs n >= 1");
    }
    let mut poly = IntPolynomial::one();
    let mut expression = String::new();
    for i in 0..n {
        poly = &poly * &IntPolynomial::var_minus(i as i64);
        expression.push_str(&if i == 0 {
            "m".into()
        } else {
            format!("(m-{i})")
        });
    }
    Ok(FamilyFormula {
        family: Family::Complete { n },
        gives: vec![TargetFn::Chromatic],
        poly,
        expression,
        min_m: 1,
    })
}

/// The chromatic polynomial, by deletion-contraction on the underlying
/// simple graph (proper colorings ignore multiplicity). Memoized on the
/// canonical form, recursion grounded at edgeless graphs.
pub fn chromatic_polynomial(g: &MultiGraph) -> IntPolynomial {
    let mut memo = HashMap::new();
    chromatic_rec(&g.underlying_graph(), &mut memo)
}

fn chromatic_rec(g: &MultiGraph, memo: &mut HashMap<Vec<usize>, IntPolynomial>) -> IntPolynomial {
    if g.edge_count() == 0 {
        return IntPolynomial::var().pow(g.n() as u32);
    }
    let key = canonical_key(g);
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let e = pick_recursion_edge(g);
    let deleted = chromatic_rec(&g.delete_edge(e).expect("edge exists"), memo);
    let (contracted, _) = g.contract_edge(e).expect("edge exists");
    // contracting in a simple graph can create parallel edges; collapse
    // them before recursing
    let contracted = contracted.underlying_graph();
    let poly = &deleted - &chromatic_rec(&contracted, memo);
    memo.insert(key, poly.clone());
    poly
}

// Prefer an edge lying on a cycle; on forests any edge works.
fn pick_recursion_edge(g: &MultiGraph) -> EdgeId {
    for e in g.edges() {
        let pruned = g.delete_edge(e.id).expect("edge exists");
        if has_path(&pruned, e.u, e.v) {
            return e.id;
        }
    }
    g.edges()[0].id
}

fn has_path(g: &MultiGraph, from: Vertex, to: Vertex) -> bool {
    let mut seen = vec![false; g.n() + 1];
    let mut stack = vec![from];
    seen[from] = true;
    while let Some(x) = stack.pop() {
        if x == to {
            return true;
        }
        for y in g.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    false
}

/// Looks for a closed-form formula for `P_DP` or `P*_DP` of the graph.
/// Returns `None` when no family of the library matches.
pub fn auto_formula(g: &MultiGraph, which: TargetFn) -> Result<Option<FamilyFormula>> {
    let formula = match which {
        TargetFn::Dp => auto_dp(g)?,
        // the dual DP color function only depends on the underlying graph
        TargetFn::Dual => auto_dual(&g.underlying_graph())?,
        TargetFn::Chromatic => {
            return input_err("use chromatic_polynomial for the chromatic polynomial")
        }
    };
    debug_assert!(formula.as_ref().is_none_or(|f| f.gives(which)));
    Ok(formula)
}

fn auto_dp(g: &MultiGraph) -> Result<Option<FamilyFormula>> {
    if !g.is_connected() {
        return Ok(None);
    }
    match g.classify() {
        GraphClass::Tree => Ok(Some(tree_formula(g.n())?)),
        GraphClass::Cycle => Ok(Some(cycle_dp(g.n())?)),
        GraphClass::UnicyclicSimple => {
            let cycle_len = g.girth().expect("unicyclic graph has a cycle");
            Ok(Some(unicyclic_dp(g.n(), cycle_len)?))
        }
        GraphClass::FatTree => Ok(Some(fat_tree_dp(&fat_tree_degrees(g))?)),
        GraphClass::Other => {
            if let Some((k, l)) = recognize_fat_even_cycle(g) {
                return Ok(Some(fat_even_cycle_dp(k, l)?));
            }
            if let Some((k, l)) = recognize_glued_even_cycles(g) {
                return Ok(Some(glued_even_cycles_dp(k, l)?));
            }
            peel_pendant(g, TargetFn::Dp)
        }
    }
}

fn auto_dual(u: &MultiGraph) -> Result<Option<FamilyFormula>> {
    if !u.is_connected() {
        return Ok(None);
    }
    match u.classify() {
        GraphClass::Tree => Ok(Some(tree_formula(u.n())?)),
        GraphClass::Cycle => Ok(Some(cycle_dual(u.n())?)),
        GraphClass::UnicyclicSimple => {
            let cycle_len = u.girth().expect("unicyclic graph has a cycle");
            Ok(Some(unicyclic_dual(u.n(), cycle_len)?))
        }
        GraphClass::FatTree => unreachable!("underlying graph is simple"),
        GraphClass::Other => {
            if let Some((k, l)) = recognize_twin_odd_cycles(u) {
                return Ok(Some(twin_odd_cycles_dual(k, l)?));
            }
            peel_pendant(u, TargetFn::Dual)
        }
    }
}

fn peel_pendant(g: &MultiGraph, which: TargetFn) -> Result<Option<FamilyFormula>> {
    let Some(&p) = g.pendant_vertices().first() else {
        return Ok(None);
    };
    let k = g.degree(p);
    let rest = remove_vertex(g, p);
    let inner = match which {
        TargetFn::Dp => auto_dp(&rest)?,
        TargetFn::Dual => auto_dual(&rest)?,
        TargetFn::Chromatic => unreachable!(),
    };
    let Some(inner) = inner else {
        return Ok(None);
    };
    Ok(Some(FamilyFormula {
        poly: pendant_step(&inner.poly, k, which),
        expression: match which {
            TargetFn::Dp => format!("(m-{k})({})", inner.expression),
            _ => format!("(m-1)({})", inner.expression),
        },
        gives: vec![which],
        min_m: inner.min_m.max(k),
        family: Family::Pendant {
            k,
            inner: Box::new(inner.family),
        },
    }))
}

fn remove_vertex(g: &MultiGraph, p: Vertex) -> MultiGraph {
    let relabel = |x: Vertex| if x > p { x - 1 } else { x };
    let eps: Vec<(Vertex, Vertex)> = g
        .edges()
        .iter()
        .filter(|e| !e.touches(p))
        .map(|e| (relabel(e.u), relabel(e.v)))
        .collect();
    MultiGraph::new(g.n() - 1, &eps).expect("vertex removal is valid")
}

fn fat_tree_degrees(g: &MultiGraph) -> Vec<usize> {
    let order = g.dfs_order();
    g.ordering_degrees(&order)
        .expect("dfs order is a permutation")
        .0
}

fn recognize_fat_even_cycle(g: &MultiGraph) -> Option<(usize, usize)> {
    let n = g.n();
    if n < 4 || !n.is_multiple_of(2) {
        return None;
    }
    let underlying = g.underlying_graph();
    if underlying.classify() != GraphClass::Cycle {
        return None;
    }
    let mut fat = None;
    for e in underlying.edges() {
        let mult = g.multiplicity(e.u, e.v).expect("valid pair");
        if mult >= 2 {
            if fat.is_some() {
                return None; // more than one fat edge
            }
            fat = Some(mult);
        }
    }
    fat.map(|l| ((n - 2) / 2, l))
}

fn recognize_glued_even_cycles(g: &MultiGraph) -> Option<(usize, usize)> {
    let n = g.n();
    if g.edge_count() != n + 1 {
        return None;
    }
    let mut center = None;
    for x in g.vertices() {
        match g.degree(x) {
            2 => {}
            4 => {
                if center.is_some() {
                    return None;
                }
                center = Some(x);
            }
            _ => return None,
        }
    }
    let w = center?;
    let mut used = vec![false; g.edge_count() + 1];
    let len1 = trace_cycle(g, w, &mut used)?;
    let len2 = trace_cycle(g, w, &mut used)?;
    if len1 + len2 != g.edge_count() {
        return None; // edges outside the two cycles through w
    }
    if !len1.is_multiple_of(2) || !len2.is_multiple_of(2) {
        return None;
    }
    let (a, b) = (len1 / 2, len2 / 2);
    Some((a.min(b), a.max(b)))
}

// Walks from `w` along unused edges until returning to `w`; every interior
// vertex has degree 2, so the walk is forced. Returns the edge count.
fn trace_cycle(g: &MultiGraph, w: Vertex, used: &mut [bool]) -> Option<usize> {
    let first = g
        .incident_edges(w)
        .into_iter()
        .find(|e| !used[e.id.0])?
        .clone();
    used[first.id.0] = true;
    let mut len = 1;
    let mut current = first.other(w);
    let mut via = first.id;
    while current != w {
        let next = g
            .incident_edges(current)
            .into_iter()
            .find(|e| e.id != via && !used[e.id.0])?
            .clone();
        used[next.id.0] = true;
        via = next.id;
        current = next.other(current);
        len += 1;
    }
    Some(len)
}

fn recognize_twin_odd_cycles(u: &MultiGraph) -> Option<(usize, usize)> {
    let n = u.n();
    if !u.is_simple() || u.edge_count() != n + 1 {
        return None;
    }
    let mut deg3 = Vec::new();
    for x in u.vertices() {
        match u.degree(x) {
            2 => {}
            3 => deg3.push(x),
            _ => return None,
        }
    }
    let [a, b] = deg3[..] else {
        return None;
    };
    let shared = u.parallel_edges(a, b).expect("valid pair");
    let [shared_edge] = shared[..] else {
        return None;
    };
    let rest = u.delete_edge(shared_edge).expect("edge exists");
    // the remainder must be one cycle through all vertices
    if rest.vertices().any(|x| rest.degree(x) != 2) || !rest.is_connected() {
        return None;
    }
    // split the remaining cycle at `a` into the two a-b paths
    let mut used = vec![false; u.edge_count() + 1];
    let len1 = trace_path(&rest, a, b, &mut used)?;
    let len2 = n - len1;
    if !len1.is_multiple_of(2) || !len2.is_multiple_of(2) {
        return None;
    }
    let (k, l) = (len1 / 2, len2 / 2);
    Some((k.min(l), k.max(l)))
}

// Walks from `a` along unused edges to `b` through degree-2 territory.
fn trace_path(g: &MultiGraph, a: Vertex, b: Vertex, used: &mut [bool]) -> Option<usize> {
    let first = g
        .incident_edges(a)
        .into_iter()
        .find(|e| !used[e.id.0])?
        .clone();
    used[first.id.0] = true;
    let mut len = 1;
    let mut current = first.other(a);
    let mut via = first.id;
    while current != b {
        let next = g
            .incident_edges(current)
            .into_iter()
            .find(|e| e.id != via && !used[e.id.0])?
            .clone();
        used[next.id.0] = true;
        via = next.id;
        current = next.other(current);
        len += 1;
    }
    Some(len)
}
