//! Canonical forms for small multigraphs and catalogs of all connected
//! graphs up to isomorphism, used by the chromatic memo table and the
//! relation sweeps.

use std::collections::BTreeSet;

use crate::multigraph::MultiGraph;

/// Isomorphism-invariant key: the vertex count followed by the
/// lexicographically smallest upper-triangle multiplicity listing over all
/// vertex orderings grouped by descending degree. Orderings only permute
/// vertices within equal-degree classes, which isomorphisms preserve, so
/// two graphs get the same key exactly when they are isomorphic. Intended
/// for the handful-of-vertices graphs this crate works with.
pub fn canonical_key(g: &MultiGraph) -> Vec<usize> {
    let n = g.n();
    let mut mult = vec![vec![0usize; n + 1]; n + 1];
    for e in g.edges() {
        mult[e.lo()][e.hi()] += 1;
        mult[e.hi()][e.lo()] += 1;
    }
    // degree classes, largest degree first; ties resolved by trying every
    // within-class arrangement
    let mut by_degree: Vec<(usize, usize)> = (1..=n).map(|x| (g.degree(x), x)).collect();
    by_degree.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (d, x) in by_degree {
        match classes.last_mut() {
            Some(class) if g.degree(class[0]) == d => class.push(x),
            _ => classes.push(vec![x]),
        }
    }
    let mut best: Option<Vec<usize>> = None;
    let mut ordering: Vec<usize> = Vec::with_capacity(n);
    search_orderings(&classes, 0, &mut ordering, &mult, &mut best);
    let mut key = vec![n];
    key.extend(best.expect("at least one ordering"));
    key
}

fn search_orderings(
    classes: &[Vec<usize>],
    class_idx: usize,
    ordering: &mut Vec<usize>,
    mult: &[Vec<usize>],
    best: &mut Option<Vec<usize>>,
) {
    if class_idx == classes.len() {
        let n = ordering.len();
        let mut triangle = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in (i + 1)..n {
                triangle.push(mult[ordering[i]][ordering[j]]);
            }
        }
        if best.as_ref().is_none_or(|b| triangle < *b) {
            *best = Some(triangle);
        }
        return;
    }
    permute_class(
        &mut classes[class_idx].clone(),
        0,
        classes,
        class_idx,
        ordering,
        mult,
        best,
    );
}

fn permute_class(
    class: &mut Vec<usize>,
    start: usize,
    classes: &[Vec<usize>],
    class_idx: usize,
    ordering: &mut Vec<usize>,
    mult: &[Vec<usize>],
    best: &mut Option<Vec<usize>>,
) {
    if start == class.len() {
        ordering.extend_from_slice(class);
        search_orderings(classes, class_idx + 1, ordering, mult, best);
        ordering.truncate(ordering.len() - class.len());
        return;
    }
    for i in start..class.len() {
        class.swap(start, i);
        permute_class(class, start + 1, classes, class_idx, ordering, mult, best);
        class.swap(start, i);
    }
}

pub fn are_isomorphic(a: &MultiGraph, b: &MultiGraph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_key(a) == canonical_key(b)
}

/// All connected multigraphs with up to `n_max` vertices and at most
/// `max_edges` edges counted with multiplicity, one representative per
/// isomorphism class, in a fixed deterministic order.
pub fn connected_multigraphs(n_max: usize, max_edges: usize) -> Vec<MultiGraph> {
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for n in 1..=n_max {
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|u| ((u + 1)..=n).map(move |v| (u, v)))
            .collect();
        let mut mults = vec![0usize; pairs.len()];
        loop {
            let total: usize = mults.iter().sum();
            if total <= max_edges {
                let mut eps = Vec::with_capacity(total);
                for (i, &(u, v)) in pairs.iter().enumerate() {
                    for _ in 0..mults[i] {
                        eps.push((u, v));
                    }
                }
                let g = MultiGraph::new(n, &eps).expect("catalog graph is valid");
                if g.is_connected() && seen.insert(canonical_key(&g)) {
                    out.push(g);
                }
            }
            if !advance(&mut mults, max_edges) {
                break;
            }
        }
    }
    out
}

/// All connected simple graphs with up to `n_max` vertices, one per
/// isomorphism class.
pub fn connected_simple_graphs(n_max: usize) -> Vec<MultiGraph> {
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for n in 1..=n_max {
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|u| ((u + 1)..=n).map(move |v| (u, v)))
            .collect();
        for mask in 0u64..(1 << pairs.len()) {
            let eps: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            let g = MultiGraph::new(n, &eps).expect("catalog graph is valid");
            if g.is_connected() && seen.insert(canonical_key(&g)) {
                out.push(g);
            }
        }
    }
    out
}

fn advance(mults: &mut [usize], max: usize) -> bool {
    for slot in mults.iter_mut() {
        *slot += 1;
        if *slot <= max {
            return true;
        }
        *slot = 0;
    }
    false
}
