//! Loopless multigraphs with stable edge ids.
//!
//! Vertices are the dense integers `1..=n`. Edges are individually
//! addressable: parallel edges are distinct entries with distinct ids.
//! Deletion never renumbers surviving edges; contraction allocates fresh
//! ids and records the correspondence in a [`ContractionMap`].

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{input_err, Error, Result};

pub type Vertex = usize;

/// Stable 1-based edge identifier.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgeId(pub usize);

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: EdgeId,
    pub u: Vertex,
    pub v: Vertex,
}

impl Edge {
    /// Lower endpoint; covers orient their matchings from here.
    pub fn lo(&self) -> Vertex {
        self.u.min(self.v)
    }

    /// Higher endpoint.
    pub fn hi(&self) -> Vertex {
        self.u.max(self.v)
    }

    pub fn touches(&self, x: Vertex) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint other than `x`; `x` must be an endpoint.
    pub fn other(&self, x: Vertex) -> Vertex {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }

    fn same_pair(&self, u: Vertex, v: Vertex) -> bool {
        (self.u == u && self.v == v) || (self.u == v && self.v == u)
    }
}

/// Structural class of a connected multigraph, as far as the closed-form
/// color-function formulas care.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphClass {
    /// Simple connected acyclic graph (includes the single vertex).
    Tree,
    /// Simple cycle on `n >= 3` vertices.
    Cycle,
    /// Simple connected graph with exactly one cycle, not a pure cycle.
    UnicyclicSimple,
    /// Underlying graph is a tree and some multiplicity is at least 2.
    FatTree,
    Other,
}

/// Record of an edge contraction: how vertices and surviving edges of the
/// original graph map into the contracted graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionMap {
    /// New id of the merged vertex (the smaller endpoint of the contracted
    /// edge keeps its id).
    pub merged_vertex: Vertex,
    /// Old vertex -> new vertex; index 0 is unused.
    pub vertex_map: Vec<Vertex>,
    /// Old edge id -> new edge id. The contracted edge and the other members
    /// of its parallel class have no image: they became loops.
    pub edge_map: BTreeMap<EdgeId, EdgeId>,
}

/// Loopless multigraph on vertices `1..=n` with an explicit edge list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<Edge>,
}

impl MultiGraph {
    /// Builds a multigraph from an endpoint list. Edge ids are assigned
    /// sequentially from 1 in list order.
    pub fn new(n: usize, endpoints: &[(Vertex, Vertex)]) -> Result<MultiGraph> {
        if n == 0 {
            return input_err("a multigraph needs at least one vertex");
        }
        let mut edges = Vec::with_capacity(endpoints.len());
        for (i, &(u, v)) in endpoints.iter().enumerate() {
            if u == v {
                return input_err(format!("loop at vertex {u} (edge {})", i + 1));
            }
            if u < 1 || u > n || v < 1 || v > n {
                return input_err(format!("edge {} endpoint out of range 1..={n}", i + 1));
            }
            edges.push(Edge {
                id: EdgeId(i + 1),
                u,
                v,
            });
        }
        Ok(MultiGraph { n, edges })
    }

    /// Path on `n` vertices, edges `1-2, 2-3, ...`.
    pub fn path(n: usize) -> MultiGraph {
        let eps: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        MultiGraph::new(n.max(1), &eps).expect("path is valid")
    }

    /// Cycle on `n >= 2` vertices; `cycle(2)` is a pair of parallel edges.
    pub fn cycle(n: usize) -> MultiGraph {
        assert!(n >= 2, "cycle needs at least 2 vertices");
        let mut eps: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        eps.push((n, 1));
        MultiGraph::new(n, &eps).expect("cycle is valid")
    }

    /// Complete simple graph on `n` vertices.
    pub fn complete(n: usize) -> MultiGraph {
        let mut eps = Vec::new();
        for u in 1..=n {
            for v in (u + 1)..=n {
                eps.push((u, v));
            }
        }
        MultiGraph::new(n.max(1), &eps).expect("complete graph is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<Vertex> {
        1..=self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, id: EdgeId) -> Result<&Edge> {
        self.edges
            .iter()
            .find(|e| e.id == id)
            .ok_or_else(|| Error::Input(format!("unknown edge id {id}")))
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.iter().map(|e| e.id)
    }

    /// Edges incident to `x`, in id order.
    pub fn incident_edges(&self, x: Vertex) -> Vec<&Edge> {
        self.edges.iter().filter(|e| e.touches(x)).collect()
    }

    /// Degree of `x` counting multiplicity.
    pub fn degree(&self, x: Vertex) -> usize {
        self.edges.iter().filter(|e| e.touches(x)).count()
    }

    /// Distinct neighbors of `x`.
    pub fn neighbors(&self, x: Vertex) -> BTreeSet<Vertex> {
        self.edges
            .iter()
            .filter(|e| e.touches(x))
            .map(|e| e.other(x))
            .collect()
    }

    /// The edge set `E_G(u, v)`, in id order.
    pub fn parallel_edges(&self, u: Vertex, v: Vertex) -> Result<Vec<EdgeId>> {
        if u == v {
            return input_err("multiplicity is defined for distinct vertices");
        }
        if u < 1 || u > self.n || v < 1 || v > self.n {
            return input_err(format!("vertex out of range 1..={}", self.n));
        }
        Ok(self
            .edges
            .iter()
            .filter(|e| e.same_pair(u, v))
            .map(|e| e.id)
            .collect())
    }

    /// `e_G(u, v)`: the number of parallel edges between `u` and `v`.
    pub fn multiplicity(&self, u: Vertex, v: Vertex) -> Result<usize> {
        Ok(self.parallel_edges(u, v)?.len())
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.iter().all(|e| seen.insert((e.lo(), e.hi())))
    }

    /// Deletes edge `e`. All other edge ids are unchanged.
    pub fn delete_edge(&self, e: EdgeId) -> Result<MultiGraph> {
        self.edge(e)?;
        Ok(MultiGraph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .filter(|edge| edge.id != e)
                .cloned()
                .collect(),
        })
    }

    /// Contracts edge `e`: the endpoints are identified as one vertex and
    /// every edge of the parallel class `E_G(u, v)` disappears (those edges
    /// would become loops). The merged vertex takes the smaller endpoint id;
    /// vertices above the larger endpoint shift down by one. Surviving edges
    /// get fresh sequential ids, recorded in the returned map.
    pub fn contract_edge(&self, e: EdgeId) -> Result<(MultiGraph, ContractionMap)> {
        let edge = self.edge(e)?.clone();
        let (a, b) = (edge.lo(), edge.hi());
        let mut vertex_map = vec![0; self.n + 1];
        for (x, target) in vertex_map.iter_mut().enumerate().skip(1) {
            *target = if x == a || x == b {
                a
            } else if x > b {
                x - 1
            } else {
                x
            };
        }
        let mut edges = Vec::new();
        let mut edge_map = BTreeMap::new();
        for old in &self.edges {
            if old.same_pair(a, b) {
                continue;
            }
            let id = EdgeId(edges.len() + 1);
            edge_map.insert(old.id, id);
            edges.push(Edge {
                id,
                u: vertex_map[old.u],
                v: vertex_map[old.v],
            });
        }
        let contracted = MultiGraph {
            n: self.n - 1,
            edges,
        };
        Ok((
            contracted,
            ContractionMap {
                merged_vertex: a,
                vertex_map,
                edge_map,
            },
        ))
    }

    /// The underlying simple graph: keeps the lowest-id edge of each
    /// parallel class. Simple graphs come back unchanged, ids included.
    pub fn underlying_graph(&self) -> MultiGraph {
        let mut seen = BTreeSet::new();
        MultiGraph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .filter(|e| seen.insert((e.lo(), e.hi())))
                .cloned()
                .collect(),
        }
    }

    pub fn is_connected(&self) -> bool {
        let mut visited = vec![false; self.n + 1];
        let mut queue = VecDeque::from([1]);
        visited[1] = true;
        let mut count = 1;
        while let Some(x) = queue.pop_front() {
            for y in self.neighbors(x) {
                if !visited[y] {
                    visited[y] = true;
                    count += 1;
                    queue.push_back(y);
                }
            }
        }
        count == self.n
    }

    /// Connected components as standalone graphs. Each component keeps the
    /// relative order of its vertices and edges; the second element maps the
    /// component's vertices back to vertices of `self`.
    pub fn components(&self) -> Vec<(MultiGraph, Vec<Vertex>)> {
        let mut comp = vec![0usize; self.n + 1];
        let mut next = 0;
        for start in 1..=self.n {
            if comp[start] != 0 {
                continue;
            }
            next += 1;
            comp[start] = next;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for y in self.neighbors(x) {
                    if comp[y] == 0 {
                        comp[y] = next;
                        queue.push_back(y);
                    }
                }
            }
        }
        let mut out = Vec::new();
        for c in 1..=next {
            let verts: Vec<Vertex> = (1..=self.n).filter(|&x| comp[x] == c).collect();
            let mut local = vec![0usize; self.n + 1];
            for (i, &x) in verts.iter().enumerate() {
                local[x] = i + 1;
            }
            let eps: Vec<_> = self
                .edges
                .iter()
                .filter(|e| comp[e.u] == c)
                .map(|e| (local[e.u], local[e.v]))
                .collect();
            out.push((
                MultiGraph::new(verts.len(), &eps).expect("component is valid"),
                verts,
            ));
        }
        out
    }

    /// Length of a shortest cycle; `None` for acyclic graphs. A parallel
    /// pair is a cycle of length 2.
    pub fn girth(&self) -> Option<usize> {
        if !self.is_simple() {
            return Some(2);
        }
        let mut best: Option<usize> = None;
        for e in &self.edges {
            if let Some(d) = self.delete_edge(e.id).unwrap().bfs_distance(e.u, e.v) {
                let cycle = d + 1;
                best = Some(best.map_or(cycle, |b| b.min(cycle)));
            }
        }
        best
    }

    fn bfs_distance(&self, from: Vertex, to: Vertex) -> Option<usize> {
        let mut dist = vec![usize::MAX; self.n + 1];
        dist[from] = 0;
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            if x == to {
                return Some(dist[x]);
            }
            for y in self.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        None
    }

    /// Deterministic spanning tree (forest on disconnected graphs): scans
    /// edges in id order and keeps those joining distinct components.
    pub fn spanning_tree(&self) -> BTreeSet<EdgeId> {
        let mut parent: Vec<usize> = (0..=self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut tree = BTreeSet::new();
        for e in &self.edges {
            let (ru, rv) = (find(&mut parent, e.u), find(&mut parent, e.v));
            if ru != rv {
                parent[ru] = rv;
                tree.insert(e.id);
            }
        }
        tree
    }

    /// Cyclomatic number `|E| - |V| + #components`: the exponent of the
    /// normalized cover search space.
    pub fn cyclomatic_number(&self) -> usize {
        self.edges.len() + self.components().len() - self.n
    }

    /// Vertices with exactly one distinct neighbor.
    pub fn pendant_vertices(&self) -> Vec<Vertex> {
        (1..=self.n)
            .filter(|&x| self.neighbors(x).len() == 1)
            .collect()
    }

    /// Spanning-tree DFS order: starts at vertex 1, visits neighbors in
    /// ascending order, restarts at the lowest unvisited vertex on
    /// disconnected graphs. Every vertex after a component root has at least
    /// one earlier neighbor.
    pub fn dfs_order(&self) -> Vec<Vertex> {
        let mut order = Vec::with_capacity(self.n);
        let mut visited = vec![false; self.n + 1];
        for root in 1..=self.n {
            if visited[root] {
                continue;
            }
            let mut stack = vec![root];
            visited[root] = true;
            while let Some(x) = stack.pop() {
                order.push(x);
                // push descending so the smallest neighbor is visited first
                for y in self.neighbors(x).into_iter().rev() {
                    if !visited[y] {
                        visited[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        order
    }

    pub fn classify(&self) -> GraphClass {
        if !self.is_connected() {
            return GraphClass::Other;
        }
        let underlying = self.underlying_graph();
        if underlying.edge_count() == self.n - 1 {
            return if self.is_simple() {
                GraphClass::Tree
            } else {
                GraphClass::FatTree
            };
        }
        if self.is_simple() && self.edge_count() == self.n {
            return if (1..=self.n).all(|x| self.degree(x) == 2) {
                GraphClass::Cycle
            } else {
                GraphClass::UnicyclicSimple
            };
        }
        GraphClass::Other
    }

    /// For a vertex ordering, `d_i` counts the edges joining `v_i` to a
    /// vertex earlier in the ordering. Returns `(d_1..d_n, max d_i)`.
    pub fn ordering_degrees(&self, order: &[Vertex]) -> Result<(Vec<usize>, usize)> {
        if order.len() != self.n {
            return input_err(format!(
                "ordering has {} entries, expected {}",
                order.len(),
                self.n
            ));
        }
        let mut position = vec![usize::MAX; self.n + 1];
        for (i, &x) in order.iter().enumerate() {
            if x < 1 || x > self.n || position[x] != usize::MAX {
                return input_err("ordering is not a permutation of the vertices");
            }
            position[x] = i;
        }
        let degrees: Vec<usize> = order
            .iter()
            .map(|&x| {
                self.edges
                    .iter()
                    .filter(|e| e.touches(x) && position[e.other(x)] < position[x])
                    .count()
            })
            .collect();
        let max = degrees.iter().copied().max().unwrap_or(0);
        Ok((degrees, max))
    }

    /// Serializes to the line-oriented graph text format.
    pub fn to_text(&self) -> String {
        let mut out = format!("v {}\n", self.n);
        for e in &self.edges {
            out.push_str(&format!("e {} {}\n", e.u, e.v));
        }
        out
    }

    /// Parses the graph text format: `#` starts a comment, the first content
    /// line is `v <n>`, each following `e <u> <v>` line adds one edge. Edge
    /// ids follow file order starting at 1.
    pub fn from_text(s: &str) -> Result<MultiGraph> {
        let mut n: Option<usize> = None;
        let mut endpoints: Vec<(Vertex, Vertex)> = Vec::new();
        for (idx, raw) in s.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            match parts.next() {
                Some("v") if n.is_none() => {
                    let val = parts
                        .next()
                        .ok_or_else(|| Error::Parse {
                            line: line_no,
                            msg: "`v` needs a vertex count".into(),
                        })?
                        .parse::<usize>()
                        .map_err(|_| Error::Parse {
                            line: line_no,
                            msg: "vertex count is not a number".into(),
                        })?;
                    if parts.next().is_some() {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: "trailing tokens after `v <n>`".into(),
                        });
                    }
                    if val == 0 {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: "a multigraph needs at least one vertex".into(),
                        });
                    }
                    n = Some(val);
                }
                Some("v") => {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "duplicate `v` line".into(),
                    });
                }
                Some("e") => {
                    let Some(n) = n else {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: "`e` line before `v` line".into(),
                        });
                    };
                    let mut read = || -> std::result::Result<usize, Error> {
                        parts
                            .next()
                            .ok_or_else(|| Error::Parse {
                                line: line_no,
                                msg: "`e` needs two endpoints".into(),
                            })?
                            .parse::<usize>()
                            .map_err(|_| Error::Parse {
                                line: line_no,
                                msg: "endpoint is not a number".into(),
                            })
                    };
                    let u = read()?;
                    let v = read()?;
                    if parts.next().is_some() {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: "trailing tokens after `e <u> <v>`".into(),
                        });
                    }
                    if u < 1 || u > n || v < 1 || v > n {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("endpoint out of range 1..={n}"),
                        });
                    }
                    if u == v {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("loop at vertex {u}"),
                        });
                    }
                    endpoints.push((u, v));
                }
                Some(tok) => {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("unknown directive `{tok}`"),
                    });
                }
                None => unreachable!("empty lines are skipped"),
            }
        }
        let n = n.ok_or(Error::Parse {
            line: s.lines().count().max(1),
            msg: "missing `v <n>` line".into(),
        })?;
        MultiGraph::new(n, &endpoints).map_err(|e| match e {
            Error::Input(msg) => Error::Parse { line: 0, msg },
            other => other,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> MultiGraph {
        MultiGraph::cycle(3)
    }

    #[test]
    fn delete_edge_keeps_ids() {
        let g = triangle();
        let d = g.delete_edge(EdgeId(2)).unwrap();
        assert_eq!(d.n(), 3);
        assert_eq!(d.edge_count(), 2);
        assert_eq!(d.edge_ids().collect::<Vec<_>>(), vec![EdgeId(1), EdgeId(3)]);
        // K_3 minus an edge is a path on 3 vertices
        assert_eq!(d.classify(), GraphClass::Tree);
    }

    #[test]
    fn delete_from_c2_gives_k2() {
        let g = MultiGraph::cycle(2);
        let d = g.delete_edge(EdgeId(1)).unwrap();
        assert_eq!(d.edge_count(), 1);
        assert!(d.is_simple());
    }

    #[test]
    fn delete_from_c4_gives_path() {
        let g = MultiGraph::cycle(4);
        for e in g.edge_ids() {
            let d = g.delete_edge(e).unwrap();
            assert_eq!(d.classify(), GraphClass::Tree);
            assert_eq!(d.edge_count(), 3);
        }
    }

    #[test]
    fn delete_unknown_edge_fails() {
        assert!(triangle().delete_edge(EdgeId(9)).is_err());
    }

    #[test]
    fn contract_triangle_gives_parallel_pair() {
        let g = triangle();
        let (c, map) = g.contract_edge(EdgeId(1)).unwrap();
        assert_eq!(c.n(), 2);
        assert_eq!(c.edge_count(), 2);
        assert_eq!(c.multiplicity(1, 2).unwrap(), 2);
        assert_eq!(map.merged_vertex, 1);
        assert_eq!(map.edge_map.len(), 2);
        assert!(!map.edge_map.contains_key(&EdgeId(1)));
    }

    #[test]
    fn contract_c2_gives_single_vertex() {
        let g = MultiGraph::cycle(2);
        let (c, map) = g.contract_edge(EdgeId(1)).unwrap();
        assert_eq!(c.n(), 1);
        assert_eq!(c.edge_count(), 0);
        assert!(map.edge_map.is_empty());
    }

    #[test]
    fn contract_c4_gives_c3() {
        let g = MultiGraph::cycle(4);
        for e in g.edge_ids() {
            let (c, _) = g.contract_edge(e).unwrap();
            assert_eq!(c.classify(), GraphClass::Cycle);
            assert_eq!(c.n(), 3);
        }
    }

    #[test]
    fn contraction_removes_whole_parallel_class() {
        // 1=2 doubled plus 2-3: contracting either 1-2 edge removes both
        let g = MultiGraph::new(3, &[(1, 2), (1, 2), (2, 3)]).unwrap();
        let (c, map) = g.contract_edge(EdgeId(1)).unwrap();
        assert_eq!(c.n(), 2);
        assert_eq!(c.edge_count(), 1);
        assert_eq!(map.edge_map.get(&EdgeId(3)), Some(&EdgeId(1)));
        assert_eq!(map.vertex_map[3], 2);
    }

    #[test]
    fn multiplicity_counts() {
        assert_eq!(MultiGraph::cycle(2).multiplicity(1, 2).unwrap(), 2);
        assert_eq!(triangle().multiplicity(1, 2).unwrap(), 1);
        assert_eq!(MultiGraph::path(3).multiplicity(1, 3).unwrap(), 0);
        assert!(triangle().multiplicity(2, 2).is_err());
    }

    #[test]
    fn underlying_keeps_lowest_ids_and_is_idempotent() {
        let fat = MultiGraph::new(3, &[(1, 2), (2, 3), (1, 2), (3, 1)]).unwrap();
        let u = fat.underlying_graph();
        assert_eq!(
            u.edge_ids().collect::<Vec<_>>(),
            vec![EdgeId(1), EdgeId(2), EdgeId(4)]
        );
        assert_eq!(u, u.underlying_graph());
        let simple = MultiGraph::path(4);
        assert_eq!(simple.underlying_graph(), simple);
    }

    #[test]
    fn girth_values() {
        assert_eq!(MultiGraph::cycle(5).girth(), Some(5));
        assert_eq!(MultiGraph::cycle(2).girth(), Some(2));
        assert_eq!(MultiGraph::path(4).girth(), None);
        assert_eq!(MultiGraph::complete(4).girth(), Some(3));
    }

    #[test]
    fn spanning_tree_is_spanning_and_acyclic() {
        for g in [
            MultiGraph::cycle(5),
            MultiGraph::complete(4),
            MultiGraph::cycle(2),
        ] {
            let t = g.spanning_tree();
            assert_eq!(t.len(), g.n() - 1);
            let kept: Vec<_> = g
                .edges()
                .iter()
                .filter(|e| t.contains(&e.id))
                .map(|e| (e.u, e.v))
                .collect();
            let forest = MultiGraph::new(g.n(), &kept).unwrap();
            assert!(forest.is_connected());
            assert_eq!(forest.girth(), None);
        }
    }

    #[test]
    fn classify_examples() {
        assert_eq!(MultiGraph::path(1).classify(), GraphClass::Tree);
        assert_eq!(MultiGraph::path(4).classify(), GraphClass::Tree);
        assert_eq!(MultiGraph::cycle(4).classify(), GraphClass::Cycle);
        assert_eq!(MultiGraph::cycle(2).classify(), GraphClass::FatTree);
        let tri_pendant = MultiGraph::new(4, &[(1, 2), (2, 3), (3, 1), (3, 4)]).unwrap();
        assert_eq!(tri_pendant.classify(), GraphClass::UnicyclicSimple);
        assert_eq!(MultiGraph::complete(4).classify(), GraphClass::Other);
        let disconnected = MultiGraph::new(4, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(disconnected.classify(), GraphClass::Other);
    }

    #[test]
    fn pendant_vertices_includes_multi_edges() {
        let g = MultiGraph::new(3, &[(1, 2), (2, 3), (2, 3)]).unwrap();
        assert_eq!(g.pendant_vertices(), vec![1, 3]);
    }

    #[test]
    fn ordering_degrees_examples() {
        let c4 = MultiGraph::cycle(4);
        let (d, max) = c4.ordering_degrees(&[1, 2, 3, 4]).unwrap();
        assert_eq!(d, vec![0, 1, 1, 2]);
        assert_eq!(max, 2);

        let double = MultiGraph::new(2, &[(1, 2), (1, 2)]).unwrap();
        let (d, max) = double.ordering_degrees(&[1, 2]).unwrap();
        assert_eq!(d, vec![0, 2]);
        assert_eq!(max, 2);

        let (d, max) = MultiGraph::complete(3)
            .ordering_degrees(&[3, 1, 2])
            .unwrap();
        assert_eq!(d, vec![0, 1, 2]);
        assert_eq!(max, 2);

        assert!(c4.ordering_degrees(&[1, 2, 3, 3]).is_err());
        assert!(c4.ordering_degrees(&[1, 2, 3]).is_err());
    }

    #[test]
    fn text_round_trip() {
        let g = MultiGraph::new(3, &[(1, 2), (2, 1), (2, 3)]).unwrap();
        let text = g.to_text();
        assert_eq!(text, "v 3\ne 1 2\ne 2 1\ne 2 3\n");
        assert_eq!(MultiGraph::from_text(&text).unwrap(), g);
    }

    #[test]
    fn text_accepts_comments_and_blanks() {
        let g = MultiGraph::from_text("# a triangle\n\nv 3\ne 1 2\n e 2 3\ne 3 1\n").unwrap();
        assert_eq!(g, MultiGraph::cycle(3));
    }

    #[test]
    fn text_parse_errors_carry_line_numbers() {
        match MultiGraph::from_text("v 3\ne 1\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(MultiGraph::from_text("e 1 2\nv 3\n").is_err());
        assert!(MultiGraph::from_text("").is_err());
    }

    #[test]
    fn components_split_and_relabel() {
        let g = MultiGraph::new(5, &[(2, 4), (1, 3), (1, 5), (3, 5)]).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].1, vec![1, 3, 5]);
        assert_eq!(comps[0].0.edge_count(), 3);
        assert_eq!(comps[1].1, vec![2, 4]);
        assert!(!g.is_connected());
    }

    #[test]
    fn dfs_order_gives_earlier_neighbors() {
        let g = MultiGraph::cycle(6);
        let order = g.dfs_order();
        assert_eq!(order[0], 1);
        let mut seen = BTreeSet::from([order[0]]);
        for &x in &order[1..] {
            assert!(g.neighbors(x).iter().any(|y| seen.contains(y)));
            seen.insert(x);
        }
    }
}
