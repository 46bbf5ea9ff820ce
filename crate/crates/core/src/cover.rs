//! Full m-fold covers of multigraphs.
//!
//! A cover assigns every vertex a list of `m` cover vertices and every graph
//! edge a perfect matching between the endpoint lists. The lists themselves
//! are cliques, so a cover is fully determined by one permutation per edge;
//! neither the lists nor the cliques are ever materialized. The stored
//! permutation of an edge always maps indices of the lower endpoint's list
//! to indices of the higher endpoint's list: cover vertex `(lo, j)` is
//! matched to `(hi, perm(j))`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigUint;

use crate::error::{input_err, Error, Result};
use crate::limits::Limits;
use crate::multigraph::{ContractionMap, EdgeId, MultiGraph, Vertex};
use crate::perm::{factorial, Perm};

/// A full m-fold cover: the graph it covers plus one matching permutation
/// per edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    graph: MultiGraph,
    m: usize,
    perms: BTreeMap<EdgeId, Perm>,
}

/// A renaming of each vertex's list; relabeling a cover by one never
/// changes its coloring count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeling {
    perms: BTreeMap<Vertex, Perm>,
}

impl Relabeling {
    pub fn new(perms: BTreeMap<Vertex, Perm>) -> Relabeling {
        Relabeling { perms }
    }

    pub fn identity(graph: &MultiGraph, m: usize) -> Relabeling {
        Relabeling {
            perms: graph.vertices().map(|v| (v, Perm::identity(m))).collect(),
        }
    }

    pub fn perm(&self, v: Vertex) -> Option<&Perm> {
        self.perms.get(&v)
    }
}

impl Cover {
    /// Builds a cover from explicit per-edge permutations. Every edge of the
    /// graph must get exactly one permutation of size `m`.
    pub fn from_perms(graph: MultiGraph, m: usize, perms: BTreeMap<EdgeId, Perm>) -> Result<Cover> {
        if m == 0 {
            return input_err("fold size m must be at least 1");
        }
        for edge in graph.edges() {
            match perms.get(&edge.id) {
                None => return input_err(format!("edge {} has no matching permutation", edge.id)),
                Some(p) if p.size() != m => {
                    return input_err(format!(
                        "edge {} has a permutation of size {}, expected {m}",
                        edge.id,
                        p.size()
                    ))
                }
                Some(_) => {}
            }
        }
        if perms.len() != graph.edge_count() {
            return input_err("cover has permutations for unknown edge ids");
        }
        Ok(Cover { graph, m, perms })
    }

    /// The canonical cover: every matching is the identity. Its colorings
    /// correspond exactly to the proper m-colorings of the graph.
    pub fn canonical(graph: MultiGraph, m: usize) -> Result<Cover> {
        let perms = graph.edge_ids().map(|e| (e, Perm::identity(m))).collect();
        Cover::from_perms(graph, m, perms)
    }

    /// The twister cover of a cycle: identity matchings along the cycle
    /// except on the closing edge, which is shifted by one step.
    ///
    /// With the cycle traversed `v_1, v_2, ..., v_n` starting at vertex 1
    /// and taking the smaller neighbor first, the closing edge matches
    /// `(v_1, j)` with `(v_n, j-1)` cyclically.
    pub fn twister(graph: MultiGraph, m: usize) -> Result<Cover> {
        let n = graph.n();
        let is_cycle = n >= 2
            && graph.edge_count() == n
            && graph.is_connected()
            && graph.vertices().all(|x| graph.degree(x) == 2);
        if !is_cycle {
            return input_err("twister covers are defined for cycles only");
        }
        if m == 0 {
            return input_err("fold size m must be at least 1");
        }
        let closing = if n == 2 {
            // parallel pair: the higher-id edge closes the cycle
            graph.edges()[1].id
        } else {
            let mut walk = vec![1];
            let mut prev = 0;
            while walk.len() < n {
                let x = *walk.last().unwrap();
                let next = graph
                    .neighbors(x)
                    .into_iter()
                    .find(|&y| y != prev)
                    .expect("cycle vertex has a forward neighbor");
                prev = x;
                walk.push(next);
            }
            let last = *walk.last().unwrap();
            graph.parallel_edges(last, 1)?[0]
        };
        let shift = Perm::rotation(m, m - 1);
        let perms = graph
            .edge_ids()
            .map(|e| {
                let p = if e == closing {
                    shift.clone()
                } else {
                    Perm::identity(m)
                };
                (e, p)
            })
            .collect();
        Cover::from_perms(graph, m, perms)
    }

    /// Lifts a cover of `underlying_graph(g)` to a cover of `g`: every edge
    /// takes the permutation of its parallel-class representative. The
    /// coloring count is unchanged, the added matchings being duplicates.
    pub fn lift_to_multigraph(&self, g: &MultiGraph) -> Result<Cover> {
        if self.graph != g.underlying_graph() {
            return input_err("cover does not cover the underlying graph of the target");
        }
        let mut perms = BTreeMap::new();
        for edge in g.edges() {
            let class = g.parallel_edges(edge.u, edge.v)?;
            let rep = class[0];
            perms.insert(edge.id, self.perms[&rep].clone());
        }
        Cover::from_perms(g.clone(), self.m, perms)
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn perm(&self, e: EdgeId) -> Result<&Perm> {
        self.perms
            .get(&e)
            .ok_or_else(|| Error::Input(format!("unknown edge id {e}")))
    }

    /// The matching of edge `e` read as a map from `L(x)` to the other
    /// endpoint's list. `x` must be an endpoint of `e`.
    pub fn map_from(&self, e: EdgeId, x: Vertex) -> Result<Perm> {
        let edge = self.graph.edge(e)?;
        if x == edge.lo() {
            Ok(self.perms[&e].clone())
        } else if x == edge.hi() {
            Ok(self.perms[&e].inverse())
        } else {
            input_err(format!("vertex {x} is not an endpoint of edge {e}"))
        }
    }

    /// The cover of `g - e` obtained by dropping the matching of `e`.
    pub fn delete(&self, e: EdgeId) -> Result<Cover> {
        let graph = self.graph.delete_edge(e)?;
        let mut perms = self.perms.clone();
        perms.remove(&e);
        Cover::from_perms(graph, self.m, perms)
    }

    /// The cover of `g · e` obtained by contracting along the matching of
    /// `e`: list indices of the merged vertex follow the smaller endpoint
    /// (`(w, j)` is the contraction of the matching edge at `(lo, j)`), so
    /// edges formerly at the higher endpoint compose with the inverse of
    /// `e`'s matching. Matchings of the rest of `e`'s parallel class land
    /// inside the merged list and are discarded with the loops.
    pub fn contract(&self, e: EdgeId) -> Result<(Cover, ContractionMap)> {
        let edge = self.graph.edge(e)?.clone();
        let (a, b) = (edge.lo(), edge.hi());
        let sigma_inv = self.perms[&e].inverse();
        let (contracted, cmap) = self.graph.contract_edge(e)?;
        let w = cmap.merged_vertex;
        let mut perms = BTreeMap::new();
        for (&old_id, &new_id) in &cmap.edge_map {
            let old = self.graph.edge(old_id)?;
            let perm = if old.touches(a) {
                let x = old.other(a);
                let to_w = self.map_from(old_id, x)?;
                orient(to_w, cmap.vertex_map[x], w)
            } else if old.touches(b) {
                let x = old.other(b);
                let to_w = sigma_inv.compose(&self.map_from(old_id, x)?);
                orient(to_w, cmap.vertex_map[x], w)
            } else {
                // the vertex relabeling is monotone away from the merged
                // pair, so the stored orientation is unaffected
                self.perms[&old_id].clone()
            };
            perms.insert(new_id, perm);
        }
        let cover = Cover::from_perms(contracted, self.m, perms)?;
        Ok((cover, cmap))
    }

    /// Whether no other edge parallel to `e` has a matching edge with the
    /// same endpoints as a matching edge of `e`. Vacuously true on simple
    /// pairs; this is the equality condition of the deletion-contraction
    /// relation.
    pub fn twin_condition(&self, e: EdgeId) -> Result<bool> {
        let edge = self.graph.edge(e)?;
        let sigma = &self.perms[&e];
        for f in self.graph.parallel_edges(edge.u, edge.v)? {
            if f == e {
                continue;
            }
            let tau = &self.perms[&f];
            if (0..self.m).any(|j| tau.apply(j) == sigma.apply(j)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Renames each list by the given permutations. The matching of an edge
    /// with endpoints `(lo, hi)` becomes `r_hi ∘ σ ∘ r_lo⁻¹`; coloring
    /// counts are invariant.
    pub fn relabel(&self, r: &Relabeling) -> Result<Cover> {
        for v in self.graph.vertices() {
            match r.perm(v) {
                None => return input_err(format!("relabeling misses vertex {v}")),
                Some(p) if p.size() != self.m => {
                    return input_err(format!("relabeling at vertex {v} has wrong size"))
                }
                Some(_) => {}
            }
        }
        let mut perms = BTreeMap::new();
        for edge in self.graph.edges() {
            let r_lo_inv = r.perm(edge.lo()).unwrap().inverse();
            let r_hi = r.perm(edge.hi()).unwrap();
            let sigma = &self.perms[&edge.id];
            perms.insert(edge.id, r_hi.compose(sigma).compose(&r_lo_inv));
        }
        Cover::from_perms(self.graph.clone(), self.m, perms)
    }

    /// Relabels so that every matching on the given spanning tree becomes
    /// the identity, by rooting the tree at vertex 1 and propagating list
    /// renamings outward. The coloring count is unchanged.
    pub fn normalize(&self, tree: &BTreeSet<EdgeId>) -> Result<Cover> {
        let n = self.graph.n();
        if !self.graph.is_connected() {
            return input_err("normalization needs a connected graph");
        }
        if tree.len() != n - 1 {
            return input_err(format!(
                "spanning tree needs {} edges, got {}",
                n - 1,
                tree.len()
            ));
        }
        let mut adj: Vec<Vec<(EdgeId, Vertex)>> = vec![Vec::new(); n + 1];
        for &t in tree {
            let edge = self.graph.edge(t)?;
            adj[edge.u].push((t, edge.v));
            adj[edge.v].push((t, edge.u));
        }
        let mut relabel: Vec<Option<Perm>> = vec![None; n + 1];
        relabel[1] = Some(Perm::identity(self.m));
        let mut queue = VecDeque::from([1]);
        while let Some(p) = queue.pop_front() {
            for &(t, c) in &adj[p] {
                if relabel[c].is_some() {
                    continue;
                }
                // want the relabeled map L(p) -> L(c) to be the identity:
                // r_c = r_p ∘ μ⁻¹ for the current map μ
                let mu = self.map_from(t, p)?;
                relabel[c] = Some(relabel[p].as_ref().unwrap().compose(&mu.inverse()));
                queue.push_back(c);
            }
        }
        if relabel.iter().skip(1).any(Option::is_none) {
            return input_err("edge set is not a spanning tree");
        }
        let r = Relabeling::new(
            relabel
                .into_iter()
                .enumerate()
                .skip(1)
                .map(|(v, p)| (v, p.unwrap()))
                .collect(),
        );
        self.relabel(&r)
    }

    /// Serializes to the cover text format: a `cover m=<m>` header and one
    /// `p <edge-id> <σ(1)> ... <σ(m)>` line per edge, 1-based.
    pub fn to_text(&self) -> String {
        let mut out = format!("cover m={}\n", self.m);
        for edge in self.graph.edges() {
            let images: Vec<String> = self.perms[&edge.id]
                .images()
                .iter()
                .map(|&x| (x + 1).to_string())
                .collect();
            out.push_str(&format!("p {} {}\n", edge.id, images.join(" ")));
        }
        out
    }

    /// Parses the cover text format against the graph it covers.
    pub fn from_text(graph: &MultiGraph, s: &str) -> Result<Cover> {
        let mut m: Option<usize> = None;
        let mut perms: BTreeMap<EdgeId, Perm> = BTreeMap::new();
        for (idx, raw) in s.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if m.is_none() {
                let rest = line.strip_prefix("cover m=").ok_or_else(|| Error::Parse {
                    line: line_no,
                    msg: "expected `cover m=<m>` header".into(),
                })?;
                let val = rest.trim().parse::<usize>().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: "fold size is not a number".into(),
                })?;
                if val == 0 {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "fold size must be at least 1".into(),
                    });
                }
                m = Some(val);
                continue;
            }
            let m = m.unwrap();
            let mut parts = line.split_whitespace();
            if parts.next() != Some("p") {
                return Err(Error::Parse {
                    line: line_no,
                    msg: "expected `p <edge-id> <images...>` line".into(),
                });
            }
            let id = parts
                .next()
                .and_then(|t| t.parse::<usize>().ok())
                .ok_or_else(|| Error::Parse {
                    line: line_no,
                    msg: "missing edge id".into(),
                })?;
            let mut images = Vec::with_capacity(m);
            for tok in parts {
                let x = tok.parse::<usize>().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("bad image `{tok}`"),
                })?;
                if x < 1 || x > m {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("image {x} out of range 1..={m}"),
                    });
                }
                images.push(x - 1);
            }
            if images.len() != m {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("expected {m} images, got {}", images.len()),
                });
            }
            let perm = Perm::from_images(images).map_err(|e| Error::Parse {
                line: line_no,
                msg: e.to_string(),
            })?;
            if perms.insert(EdgeId(id), perm).is_some() {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("duplicate permutation for edge {id}"),
                });
            }
        }
        let m = m.ok_or(Error::Parse {
            line: s.lines().count().max(1),
            msg: "missing `cover m=<m>` header".into(),
        })?;
        Cover::from_perms(graph.clone(), m, perms).map_err(|e| match e {
            Error::Input(msg) => Error::Parse { line: 0, msg },
            other => other,
        })
    }

    /// Debug exporter: the cover graph H made explicit as a multigraph.
    /// Cover vertex `(x, j)` becomes vertex `(x-1)·m + j + 1`; lists are
    /// cliques and every matching contributes its m edges.
    pub fn to_cover_graph(&self) -> MultiGraph {
        let m = self.m;
        let id = |x: Vertex, j: usize| (x - 1) * m + j + 1;
        let mut eps = Vec::new();
        for x in self.graph.vertices() {
            for i in 0..m {
                for j in (i + 1)..m {
                    eps.push((id(x, i), id(x, j)));
                }
            }
        }
        for edge in self.graph.edges() {
            let sigma = &self.perms[&edge.id];
            for j in 0..m {
                eps.push((id(edge.lo(), j), id(edge.hi(), sigma.apply(j))));
            }
        }
        MultiGraph::new(self.graph.n() * m, &eps).expect("cover graph is valid")
    }
}

fn orient(to_w: Perm, x_new: Vertex, w: Vertex) -> Perm {
    if x_new < w {
        to_w
    } else {
        to_w.inverse()
    }
}

/// Number of covers the normalized enumeration yields: `(m!)^c` with `c`
/// the cyclomatic number.
pub fn normalized_cover_space(g: &MultiGraph, m: usize) -> BigUint {
    BigUint::from(factorial(m)).pow(g.cyclomatic_number() as u32)
}

/// Streams every full m-fold cover that is the identity on the graph's
/// deterministic spanning tree; by relabeling invariance the extremes over
/// this space equal the extremes over all `(m!)^{|E|}` covers. Covers come
/// in a fixed order: free edges sorted by id, permutation ranks counting up
/// lexicographically with the last free edge fastest.
pub fn enumerate_full_covers(
    g: &MultiGraph,
    m: usize,
    limits: &Limits,
) -> Result<CoverEnumeration> {
    if m == 0 {
        return input_err("fold size m must be at least 1");
    }
    if !g.is_connected() {
        return input_err("cover enumeration needs a connected graph");
    }
    let total = normalized_cover_space(g, m);
    if total > BigUint::from(limits.max_covers) {
        return Err(Error::Resource {
            what: "cover enumeration".into(),
            needed: total,
            limit: limits.max_covers,
        });
    }
    let tree = g.spanning_tree();
    let free: Vec<EdgeId> = g.edge_ids().filter(|e| !tree.contains(e)).collect();
    Ok(CoverEnumeration {
        graph: g.clone(),
        m,
        tree,
        free,
        ranks: Vec::new(),
        next_rank: 0,
        total: u64::try_from(&total).expect("total fits u64 after limit check"),
    })
}

/// Iterator over normalized covers; see [`enumerate_full_covers`].
pub struct CoverEnumeration {
    graph: MultiGraph,
    m: usize,
    tree: BTreeSet<EdgeId>,
    free: Vec<EdgeId>,
    ranks: Vec<u64>,
    next_rank: u64,
    total: u64,
}

impl CoverEnumeration {
    /// Total number of covers the stream will yield.
    pub fn total(&self) -> u64 {
        self.total
    }
}

impl Iterator for CoverEnumeration {
    type Item = Cover;

    fn next(&mut self) -> Option<Cover> {
        if self.next_rank >= self.total {
            return None;
        }
        if self.ranks.is_empty() {
            self.ranks = vec![0; self.free.len()];
        } else {
            let fact = factorial(self.m);
            for i in (0..self.ranks.len()).rev() {
                self.ranks[i] += 1;
                if self.ranks[i] < fact {
                    break;
                }
                self.ranks[i] = 0;
            }
        }
        self.next_rank += 1;
        let mut perms: BTreeMap<EdgeId, Perm> = self
            .tree
            .iter()
            .map(|&e| (e, Perm::identity(self.m)))
            .collect();
        for (i, &e) in self.free.iter().enumerate() {
            perms.insert(e, Perm::from_rank(self.m, self.ranks[i]));
        }
        Some(Cover {
            graph: self.graph.clone(),
            m: self.m,
            perms,
        })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next_rank) as usize;
        (left, Some(left))
    }
}

struct SplitMix64(u64);

impl SplitMix64 {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    fn below(&mut self, bound: u64) -> u64 {
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let x = self.next();
            if x < zone {
                return x % bound;
            }
        }
    }
}

/// A cover with one uniformly random permutation per edge, drawn from a
/// seeded deterministic generator: the same seed always gives the same
/// cover.
pub fn random_cover(g: &MultiGraph, m: usize, seed: u64) -> Cover {
    assert!(m >= 1, "fold size m must be at least 1");
    let mut rng = SplitMix64(seed);
    let perms = g
        .edge_ids()
        .map(|e| {
            let mut images: Vec<usize> = (0..m).collect();
            for i in (1..m).rev() {
                images.swap(i, rng.below(i as u64 + 1) as usize);
            }
            (
                e,
                Perm::from_images(images).expect("shuffle is a bijection"),
            )
        })
        .collect();
    Cover::from_perms(g.clone(), m, perms).expect("random cover is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_is_all_identity() {
        let h = Cover::canonical(MultiGraph::cycle(4), 3).unwrap();
        assert!(h
            .graph()
            .edge_ids()
            .all(|e| h.perm(e).unwrap().is_identity()));
        assert!(Cover::canonical(MultiGraph::path(2), 0).is_err());
    }

    #[test]
    fn twister_shifts_only_the_closing_edge() {
        let h = Cover::twister(MultiGraph::cycle(4), 3).unwrap();
        assert!(h.perm(EdgeId(1)).unwrap().is_identity());
        assert!(h.perm(EdgeId(2)).unwrap().is_identity());
        assert!(h.perm(EdgeId(3)).unwrap().is_identity());
        assert_eq!(h.perm(EdgeId(4)).unwrap().images(), &[2, 0, 1]);
        assert!(Cover::twister(MultiGraph::path(3), 2).is_err());
    }

    #[test]
    fn twister_of_parallel_pair() {
        let h = Cover::twister(MultiGraph::cycle(2), 3).unwrap();
        assert!(h.perm(EdgeId(1)).unwrap().is_identity());
        assert!(!h.perm(EdgeId(2)).unwrap().is_identity());
    }

    #[test]
    fn delete_drops_one_matching() {
        let h = Cover::twister(MultiGraph::cycle(4), 2).unwrap();
        let d = h.delete(EdgeId(4)).unwrap();
        assert_eq!(d.graph().edge_count(), 3);
        assert!(d
            .graph()
            .edge_ids()
            .all(|e| d.perm(e).unwrap().is_identity()));
        assert_eq!(
            *d.graph(),
            MultiGraph::cycle(4).delete_edge(EdgeId(4)).unwrap()
        );
    }

    #[test]
    fn contract_canonical_k3_gives_identity_pair() {
        for e in [EdgeId(1), EdgeId(2), EdgeId(3)] {
            let h = Cover::canonical(MultiGraph::complete(3), 3).unwrap();
            let (c, _) = h.contract(e).unwrap();
            assert_eq!(c.graph().n(), 2);
            assert_eq!(c.graph().edge_count(), 2);
            assert!(c
                .graph()
                .edge_ids()
                .all(|f| c.perm(f).unwrap().is_identity()));
        }
    }

    #[test]
    fn contract_c2_gives_trivial_cover() {
        let h = Cover::canonical(MultiGraph::cycle(2), 3).unwrap();
        let (c, _) = h.contract(EdgeId(1)).unwrap();
        assert_eq!(c.graph().n(), 1);
        assert_eq!(c.graph().edge_count(), 0);
    }

    #[test]
    fn contract_commutes_with_graph_contraction() {
        let h = Cover::twister(MultiGraph::cycle(4), 3).unwrap();
        let (c, cmap) = h.contract(EdgeId(2)).unwrap();
        let (expected, gmap) = MultiGraph::cycle(4).contract_edge(EdgeId(2)).unwrap();
        assert_eq!(*c.graph(), expected);
        assert_eq!(cmap, gmap);
    }

    #[test]
    fn contract_composes_and_reorients_by_hand() {
        // path 1-2-3-4 with shifts on edges (2,3) and (3,4); contract (2,3).
        // The surviving (3,4) edge becomes (2,3) and its stored permutation
        // is (σ⁻¹ ∘ τ_from_4)⁻¹ because the merged vertex is now the lower
        // endpoint: rot2 ∘ rot2 inverted = rot2.
        let g = MultiGraph::path(4);
        let mut perms = BTreeMap::new();
        perms.insert(EdgeId(1), Perm::identity(3));
        perms.insert(EdgeId(2), Perm::rotation(3, 1));
        perms.insert(EdgeId(3), Perm::rotation(3, 1));
        let h = Cover::from_perms(g, 3, perms).unwrap();
        let (c, _) = h.contract(EdgeId(2)).unwrap();
        assert!(c.perm(EdgeId(1)).unwrap().is_identity());
        assert_eq!(c.perm(EdgeId(2)).unwrap().images(), &[2, 0, 1]);
        // still a full cover of a tree: m(m-1)^(n-1) colorings
        assert_eq!(crate::counting::count_colorings(&c), BigUint::from(12u32));
    }

    #[test]
    fn twin_condition_cases() {
        let simple = Cover::canonical(MultiGraph::complete(3), 2).unwrap();
        assert!(simple.twin_condition(EdgeId(1)).unwrap());

        let c2 = MultiGraph::cycle(2);
        let both_id = Cover::canonical(c2.clone(), 3).unwrap();
        assert!(!both_id.twin_condition(EdgeId(1)).unwrap());

        let mut perms = BTreeMap::new();
        perms.insert(EdgeId(1), Perm::identity(2));
        perms.insert(EdgeId(2), Perm::from_images(vec![1, 0]).unwrap());
        let disjoint = Cover::from_perms(c2, 2, perms).unwrap();
        assert!(disjoint.twin_condition(EdgeId(1)).unwrap());
    }

    #[test]
    fn identity_relabeling_is_a_no_op() {
        let h = Cover::twister(MultiGraph::cycle(5), 3).unwrap();
        let r = Relabeling::identity(h.graph(), 3);
        assert_eq!(h.relabel(&r).unwrap(), h);
    }

    #[test]
    fn relabeling_moves_the_twist_but_cannot_remove_it() {
        // undo the closing-edge shift of a C_4 twister by renaming L(4);
        // the shift reappears on the edge into vertex 4
        let h = Cover::twister(MultiGraph::cycle(4), 3).unwrap();
        let mut perms: BTreeMap<usize, Perm> = h
            .graph()
            .vertices()
            .map(|v| (v, Perm::identity(3)))
            .collect();
        perms.insert(4, h.perm(EdgeId(4)).unwrap().inverse());
        let relabeled = h.relabel(&Relabeling::new(perms)).unwrap();
        assert!(relabeled.perm(EdgeId(4)).unwrap().is_identity());
        assert!(!relabeled.perm(EdgeId(3)).unwrap().is_identity());
        assert_eq!(
            crate::counting::count_colorings(&relabeled),
            crate::counting::count_colorings(&h)
        );
    }

    #[test]
    fn relabel_requires_every_vertex() {
        let h = Cover::canonical(MultiGraph::path(3), 2).unwrap();
        let r = Relabeling::new(BTreeMap::from([(1, Perm::identity(2))]));
        assert!(h.relabel(&r).is_err());
    }

    #[test]
    fn normalize_makes_tree_edges_identity() {
        let g = MultiGraph::cycle(3);
        let h = random_cover(&g, 3, 99);
        let tree = g.spanning_tree();
        let n = h.normalize(&tree).unwrap();
        for &t in &tree {
            assert!(n.perm(t).unwrap().is_identity());
        }
    }

    #[test]
    fn normalize_keeps_already_normal_twister() {
        let g = MultiGraph::cycle(4);
        let h = Cover::twister(g.clone(), 2).unwrap();
        let tree = g.spanning_tree();
        assert_eq!(h.normalize(&tree).unwrap(), h);
    }

    #[test]
    fn normalize_rejects_non_trees() {
        let g = MultiGraph::cycle(4);
        let h = Cover::canonical(g, 2).unwrap();
        let bad = BTreeSet::from([EdgeId(1), EdgeId(2)]);
        assert!(h.normalize(&bad).is_err());
    }

    #[test]
    fn normalize_on_a_different_tree_moves_the_twist() {
        // normalizing a C_4 twister on the tree that excludes edge 1 pushes
        // the shift onto edge 1; the count stays 15
        let g = MultiGraph::cycle(4);
        let h = Cover::twister(g, 3).unwrap();
        let tree = BTreeSet::from([EdgeId(2), EdgeId(3), EdgeId(4)]);
        let n = h.normalize(&tree).unwrap();
        for &t in &tree {
            assert!(n.perm(t).unwrap().is_identity());
        }
        assert!(!n.perm(EdgeId(1)).unwrap().is_identity());
        assert_eq!(crate::counting::count_colorings(&n), BigUint::from(15u32));
    }

    #[test]
    fn enumeration_order_is_documented() {
        // identity cover first, then the last free edge's rank counts up
        let limits = Limits::default();
        let g = MultiGraph::new(3, &[(1, 2), (2, 3), (3, 1), (3, 1)]).unwrap();
        let covers: Vec<Cover> = enumerate_full_covers(&g, 2, &limits).unwrap().collect();
        assert_eq!(covers.len(), 4);
        // tree = edges 1, 2; free edges 3 then 4
        let ranks: Vec<(u64, u64)> = covers
            .iter()
            .map(|h| {
                (
                    h.perm(EdgeId(3)).unwrap().rank(),
                    h.perm(EdgeId(4)).unwrap().rank(),
                )
            })
            .collect();
        assert_eq!(ranks, vec![(0, 0), (0, 1), (1, 0), (1, 1)]);
        for h in &covers {
            assert!(h.perm(EdgeId(1)).unwrap().is_identity());
            assert!(h.perm(EdgeId(2)).unwrap().is_identity());
        }
    }

    #[test]
    fn enumeration_counts_and_determinism() {
        let limits = Limits::default();
        let tree: Vec<Cover> = enumerate_full_covers(&MultiGraph::path(4), 3, &limits)
            .unwrap()
            .collect();
        assert_eq!(tree.len(), 1);
        assert!(tree[0]
            .graph()
            .edge_ids()
            .all(|e| tree[0].perm(e).unwrap().is_identity()));

        let en = enumerate_full_covers(&MultiGraph::cycle(4), 3, &limits).unwrap();
        assert_eq!(en.total(), 6);
        assert_eq!(en.count(), 6);

        let diamond = MultiGraph::new(4, &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]).unwrap();
        let en = enumerate_full_covers(&diamond, 2, &limits).unwrap();
        assert_eq!(en.total(), 4);
        let a: Vec<Cover> = enumerate_full_covers(&diamond, 2, &limits)
            .unwrap()
            .collect();
        let b: Vec<Cover> = enumerate_full_covers(&diamond, 2, &limits)
            .unwrap()
            .collect();
        assert_eq!(a, b);
    }

    #[test]
    fn enumeration_respects_limits_before_work() {
        let limits = Limits {
            max_covers: 5,
            max_oracle_leaves: 5,
        };
        match enumerate_full_covers(&MultiGraph::cycle(4), 3, &limits) {
            Err(Error::Resource { needed, limit, .. }) => {
                assert_eq!(needed, BigUint::from(6u32));
                assert_eq!(limit, 5);
            }
            other => panic!(
                "expected resource error, got {:?}",
                other.map(|e| e.total())
            ),
        }
    }

    #[test]
    fn enumeration_rejects_disconnected() {
        let g = MultiGraph::new(4, &[(1, 2), (3, 4)]).unwrap();
        assert!(enumerate_full_covers(&g, 2, &Limits::default()).is_err());
    }

    #[test]
    fn random_cover_is_seed_deterministic() {
        let g = MultiGraph::complete(4);
        assert_eq!(random_cover(&g, 3, 7), random_cover(&g, 3, 7));
        assert_ne!(random_cover(&g, 3, 7), random_cover(&g, 3, 8));
    }

    #[test]
    fn random_cover_spreads_over_permutations() {
        let g = MultiGraph::path(2);
        let mut counts = [0u32; 2];
        for seed in 0..1000 {
            let h = random_cover(&g, 2, seed);
            let idx = if h.perm(EdgeId(1)).unwrap().is_identity() {
                0
            } else {
                1
            };
            counts[idx] += 1;
        }
        assert!(counts[0] >= 400, "identity drawn {} times", counts[0]);
        assert!(counts[1] >= 400, "swap drawn {} times", counts[1]);
    }

    #[test]
    fn cover_text_round_trip() {
        let g = MultiGraph::cycle(3);
        let h = Cover::twister(g.clone(), 3).unwrap();
        let text = h.to_text();
        assert_eq!(text, "cover m=3\np 1 1 2 3\np 2 1 2 3\np 3 3 1 2\n");
        assert_eq!(Cover::from_text(&g, &text).unwrap(), h);
    }

    #[test]
    fn cover_text_rejects_bad_input() {
        let g = MultiGraph::path(2);
        assert!(Cover::from_text(&g, "p 1 1 2\n").is_err());
        assert!(Cover::from_text(&g, "cover m=2\np 1 1 1\n").is_err());
        assert!(Cover::from_text(&g, "cover m=2\np 1 1 2\np 1 2 1\n").is_err());
        assert!(Cover::from_text(&g, "cover m=2\n").is_err());
        assert!(Cover::from_text(&g, "cover m=2\np 1 1 2\np 2 1 2\n").is_err());
    }

    #[test]
    fn explicit_cover_graph_has_cliques_and_matchings() {
        let g = MultiGraph::path(2);
        let h = Cover::canonical(g, 3).unwrap();
        let big = h.to_cover_graph();
        assert_eq!(big.n(), 6);
        // two K_3 cliques plus one perfect matching
        assert_eq!(big.edge_count(), 3 + 3 + 3);
        assert_eq!(big.multiplicity(1, 4).unwrap(), 1);
        assert_eq!(big.multiplicity(1, 5).unwrap(), 0);
    }

    #[test]
    fn lift_duplicates_representative_matchings() {
        let fat_triangle =
            MultiGraph::new(3, &[(1, 2), (1, 2), (2, 3), (2, 3), (3, 1), (3, 1)]).unwrap();
        let u = fat_triangle.underlying_graph();
        let base = Cover::twister(u, 3);
        // underlying of the fat triangle is K_3 = C_3
        let base = base.unwrap();
        let lifted = base.lift_to_multigraph(&fat_triangle).unwrap();
        assert_eq!(
            lifted.perm(EdgeId(1)).unwrap(),
            lifted.perm(EdgeId(2)).unwrap()
        );
        assert_eq!(
            lifted.perm(EdgeId(5)).unwrap(),
            lifted.perm(EdgeId(6)).unwrap()
        );
        // simple graphs lift to themselves
        let simple = MultiGraph::cycle(4);
        let h = Cover::twister(simple.clone(), 2).unwrap();
        assert_eq!(h.lift_to_multigraph(&simple).unwrap(), h);
        // mismatched base is rejected
        let wrong = Cover::canonical(MultiGraph::path(3), 3).unwrap();
        assert!(wrong.lift_to_multigraph(&fat_triangle).is_err());
    }
}
