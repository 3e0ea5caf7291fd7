//! Directed graphs on the vertex set `{1, …, n}` as ordered edge lists.
//!
//! A [`DiGraph`] is simple: at most one edge per ordered `(init, fin)` pair,
//! so loops are allowed but never repeated. The edge list is kept in
//! lexicographic order, which makes structural equality canonical and lets
//! digraph sets be compared as sorted sequences.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Vertex identifier; valid vertices of a digraph of order `n` are `1..=n`.
pub type Vertex = usize;

/// A directed edge from `init` to `fin`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "(Vertex, Vertex)", from = "(Vertex, Vertex)")]
pub struct Edge {
    pub init: Vertex,
    pub fin: Vertex,
}

impl Edge {
    pub fn new(init: Vertex, fin: Vertex) -> Self {
        Edge { init, fin }
    }

    /// True for a self-loop `(v, v)`.
    pub fn is_loop(&self) -> bool {
        self.init == self.fin
    }
}

impl From<(Vertex, Vertex)> for Edge {
    fn from((init, fin): (Vertex, Vertex)) -> Self {
        Edge { init, fin }
    }
}

impl From<Edge> for (Vertex, Vertex) {
    fn from(e: Edge) -> Self {
        (e.init, e.fin)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.init, self.fin)
    }
}

/// In- and outdegrees of every vertex of a digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Degrees {
    indeg: Vec<usize>,
    outdeg: Vec<usize>,
}

impl Degrees {
    pub fn indeg(&self, v: Vertex) -> usize {
        self.indeg[v]
    }

    pub fn outdeg(&self, v: Vertex) -> usize {
        self.outdeg[v]
    }

    /// True when `indeg(v) = outdeg(v)` for every vertex.
    pub fn is_balanced(&self) -> bool {
        self.indeg[1..] == self.outdeg[1..]
    }

    /// True when `indeg(v) + outdeg(v) = 0`.
    pub fn is_isolated(&self, v: Vertex) -> bool {
        self.indeg[v] + self.outdeg[v] == 0
    }

    /// Vertices with no incident edge, in increasing order.
    pub fn isolated_vertices(&self) -> Vec<Vertex> {
        (1..self.indeg.len())
            .filter(|&v| self.is_isolated(v))
            .collect()
    }
}

/// An oriented simple cycle, stored in canonical rotation: the smallest
/// vertex comes first. A loop is a cycle of length 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleCycle {
    vertices: Vec<Vertex>,
}

impl SimpleCycle {
    pub(crate) fn new(vertices: Vec<Vertex>) -> Self {
        let min = vertices
            .iter()
            .enumerate()
            .min_by_key(|(_, v)| **v)
            .map(|(i, _)| i)
            .expect("cycle has at least one vertex");
        let mut vs = vertices;
        vs.rotate_left(min);
        SimpleCycle { vertices: vs }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    /// The cycle's edges, starting from the canonical first vertex.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |i| Edge::new(self.vertices[i], self.vertices[(i + 1) % k]))
    }

    /// The vertices of the cycle rotated so that `v` comes first.
    ///
    /// Panics if `v` is not on the cycle.
    pub fn rotated_to(&self, v: Vertex) -> Vec<Vertex> {
        let pos = self
            .vertices
            .iter()
            .position(|&u| u == v)
            .expect("vertex lies on the cycle");
        let mut vs = self.vertices.clone();
        vs.rotate_left(pos);
        vs
    }
}

#[derive(Serialize, Deserialize)]
struct RawDiGraph {
    edges: Vec<Edge>,
    n: usize,
}

/// A simple directed graph on the vertex set `{1, …, n}`.
///
/// Invariants, enforced at construction:
/// * every edge endpoint lies in `1..=n`,
/// * no `(init, fin)` pair occurs twice (at most one loop per vertex),
/// * the edge list is sorted lexicographically.
///
/// The JSON form is `{"edges": [[init, fin], …], "n": n}` with the edge list
/// sorted; deserialization re-validates all invariants.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "RawDiGraph", try_from = "RawDiGraph")]
pub struct DiGraph {
    n: usize,
    edges: Vec<Edge>,
}

impl From<DiGraph> for RawDiGraph {
    fn from(d: DiGraph) -> Self {
        RawDiGraph {
            edges: d.edges,
            n: d.n,
        }
    }
}

impl TryFrom<RawDiGraph> for DiGraph {
    type Error = Error;

    fn try_from(raw: RawDiGraph) -> Result<Self> {
        DiGraph::new(raw.n, raw.edges)
    }
}

impl DiGraph {
    /// Builds a digraph from an edge list, sorting it and rejecting
    /// out-of-range endpoints and duplicated pairs.
    pub fn new<E>(n: usize, edges: impl IntoIterator<Item = E>) -> Result<Self>
    where
        E: Into<Edge>,
    {
        let mut edges: Vec<Edge> = edges.into_iter().map(Into::into).collect();
        for e in &edges {
            for v in [e.init, e.fin] {
                if v < 1 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge {
                init: w[0].init,
                fin: w[0].fin,
            });
        }
        Ok(DiGraph { n, edges })
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(Edge::is_loop)
    }

    /// Out-neighborhood of `v` as edges, in lexicographic order.
    pub fn out_edges(&self, v: Vertex) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied().filter(move |e| e.init == v)
    }

    /// Indegree and outdegree of every vertex.
    pub fn degrees(&self) -> Degrees {
        let mut indeg = vec![0; self.n + 1];
        let mut outdeg = vec![0; self.n + 1];
        for e in &self.edges {
            outdeg[e.init] += 1;
            indeg[e.fin] += 1;
        }
        Degrees { indeg, outdeg }
    }

    /// True when every vertex reaches every other vertex by a directed path.
    pub fn is_strongly_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.reaches_all(1, false) && self.reaches_all(1, true)
    }

    fn reaches_all(&self, start: Vertex, reversed: bool) -> bool {
        let mut seen = vec![false; self.n + 1];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for e in &self.edges {
                let (from, to) = if reversed {
                    (e.fin, e.init)
                } else {
                    (e.init, e.fin)
                };
                if from == v && !seen[to] {
                    seen[to] = true;
                    count += 1;
                    queue.push_back(to);
                }
            }
        }
        count == self.n
    }

    /// Every oriented simple cycle of the digraph, each in canonical
    /// rotation, in increasing order. Loops count as cycles of length 1.
    pub fn simple_cycles(&self) -> Vec<SimpleCycle> {
        let mut cycles = Vec::new();
        // A cycle is discovered from its smallest vertex, walking only
        // through larger vertices, so each cycle appears exactly once.
        for start in 1..=self.n {
            let mut path = vec![start];
            let mut on_path = vec![false; self.n + 1];
            on_path[start] = true;
            self.cycle_dfs(start, start, &mut path, &mut on_path, &mut cycles);
        }
        cycles.sort_unstable();
        cycles
    }

    fn cycle_dfs(
        &self,
        start: Vertex,
        current: Vertex,
        path: &mut Vec<Vertex>,
        on_path: &mut Vec<bool>,
        cycles: &mut Vec<SimpleCycle>,
    ) {
        for e in self.out_edges(current) {
            if e.fin == start {
                cycles.push(SimpleCycle::new(path.clone()));
            } else if e.fin > start && !on_path[e.fin] {
                path.push(e.fin);
                on_path[e.fin] = true;
                self.cycle_dfs(start, e.fin, path, on_path, cycles);
                on_path[e.fin] = false;
                path.pop();
            }
        }
    }

    /// All oriented simple paths from `u` to `v` (as vertex sequences
    /// including both endpoints). Requires `u != v`.
    pub fn simple_paths(&self, u: Vertex, v: Vertex) -> Vec<Vec<Vertex>> {
        assert!(u != v, "simple paths are defined for distinct endpoints");
        let mut paths = Vec::new();
        let mut path = vec![u];
        let mut on_path = vec![false; self.n + 1];
        on_path[u] = true;
        self.path_dfs(u, v, &mut path, &mut on_path, &mut paths);
        paths
    }

    fn path_dfs(
        &self,
        current: Vertex,
        target: Vertex,
        path: &mut Vec<Vertex>,
        on_path: &mut Vec<bool>,
        paths: &mut Vec<Vec<Vertex>>,
    ) {
        for e in self.out_edges(current) {
            if e.fin == target {
                let mut p = path.clone();
                p.push(target);
                paths.push(p);
            } else if !on_path[e.fin] {
                path.push(e.fin);
                on_path[e.fin] = true;
                self.path_dfs(e.fin, target, path, on_path, paths);
                on_path[e.fin] = false;
                path.pop();
            }
        }
    }

    /// Number of oriented simple paths from `u` to `v`.
    pub fn count_simple_paths(&self, u: Vertex, v: Vertex) -> usize {
        self.simple_paths(u, v).len()
    }

    /// The oriented simple path from `u` to `v`, provided exactly one
    /// exists; `None` when there are zero or at least two.
    pub fn unique_simple_path(&self, u: Vertex, v: Vertex) -> Option<Vec<Vertex>> {
        let mut paths = self.simple_paths(u, v);
        if paths.len() == 1 {
            paths.pop()
        } else {
            None
        }
    }

    /// GraphViz DOT rendering; loops become self-arcs.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph G {\n");
        for v in 1..=self.n {
            out.push_str(&format!("    {v};\n"));
        }
        for e in &self.edges {
            out.push_str(&format!("    {} -> {};\n", e.init, e.fin));
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> DiGraph {
        DiGraph::new(n, edges.iter().copied()).unwrap()
    }

    /// Triangle 1 -> 2 -> 3 -> 1.
    fn three_cycle() -> DiGraph {
        graph(3, &[(1, 2), (2, 3), (3, 1)])
    }

    /// Two 2-cycles sharing vertex 1.
    fn bowtie() -> DiGraph {
        graph(3, &[(1, 2), (2, 1), (1, 3), (3, 1)])
    }

    /// 2-in 2-out digraph with loops at 1 and 3.
    fn looped_three() -> DiGraph {
        graph(3, &[(1, 1), (1, 2), (2, 1), (2, 3), (3, 2), (3, 3)])
    }

    #[test]
    fn rejects_out_of_range_vertex() {
        let err = DiGraph::new(2, [(1, 3)]).unwrap_err();
        assert_eq!(err, Error::VertexOutOfRange { vertex: 3, n: 2 });
    }

    #[test]
    fn rejects_duplicate_edge() {
        let err = DiGraph::new(2, [(1, 2), (1, 2)]).unwrap_err();
        assert_eq!(err, Error::DuplicateEdge { init: 1, fin: 2 });
    }

    #[test]
    fn edge_list_is_sorted_regardless_of_input_order() {
        let d = graph(3, &[(3, 1), (1, 2), (2, 3)]);
        assert_eq!(
            d.edges(),
            &[Edge::new(1, 2), Edge::new(2, 3), Edge::new(3, 1)]
        );
    }

    #[test]
    fn degrees_of_a_cycle_are_all_one_one() {
        let degs = three_cycle().degrees();
        for v in 1..=3 {
            assert_eq!((degs.indeg(v), degs.outdeg(v)), (1, 1));
        }
        assert!(degs.is_balanced());
    }

    #[test]
    fn degrees_of_the_bowtie() {
        let degs = bowtie().degrees();
        assert_eq!((degs.indeg(1), degs.outdeg(1)), (2, 2));
        assert_eq!((degs.indeg(2), degs.outdeg(2)), (1, 1));
        assert_eq!((degs.indeg(3), degs.outdeg(3)), (1, 1));
    }

    #[test]
    fn degrees_count_loops_on_both_sides() {
        let degs = looped_three().degrees();
        for v in 1..=3 {
            assert_eq!((degs.indeg(v), degs.outdeg(v)), (2, 2));
        }
    }

    #[test]
    fn isolated_vertex_detection() {
        let d = graph(3, &[(1, 2), (2, 1)]);
        assert_eq!(d.degrees().isolated_vertices(), vec![3]);
    }

    #[test]
    fn cycle_is_strongly_connected() {
        assert!(three_cycle().is_strongly_connected());
    }

    #[test]
    fn disjoint_two_cycles_are_not_strongly_connected() {
        let d = graph(4, &[(1, 2), (2, 1), (3, 4), (4, 3)]);
        assert!(!d.is_strongly_connected());
    }

    #[test]
    fn twelve_edge_example_is_strongly_connected() {
        let d = graph(
            9,
            &[
                (1, 2),
                (2, 7),
                (7, 3),
                (3, 1),
                (7, 9),
                (9, 8),
                (8, 7),
                (1, 4),
                (4, 5),
                (5, 1),
                (5, 6),
                (6, 5),
            ],
        );
        assert!(d.is_strongly_connected());
    }

    #[test]
    fn simple_cycles_of_a_triangle() {
        let cycles = three_cycle().simple_cycles();
        assert_eq!(cycles, vec![SimpleCycle::new(vec![1, 2, 3])]);
    }

    #[test]
    fn simple_cycles_of_the_bowtie() {
        let cycles = bowtie().simple_cycles();
        assert_eq!(
            cycles,
            vec![SimpleCycle::new(vec![1, 2]), SimpleCycle::new(vec![1, 3])]
        );
    }

    #[test]
    fn simple_cycles_of_the_seven_edge_example() {
        let d = graph(6, &[(1, 5), (5, 2), (2, 1), (1, 4), (4, 6), (6, 3), (3, 1)]);
        let cycles = d.simple_cycles();
        assert_eq!(
            cycles,
            vec![
                SimpleCycle::new(vec![1, 4, 6, 3]),
                SimpleCycle::new(vec![1, 5, 2]),
            ]
        );
    }

    #[test]
    fn loops_are_length_one_cycles() {
        let cycles = looped_three().simple_cycles();
        assert!(cycles.contains(&SimpleCycle::new(vec![1])));
        assert!(cycles.contains(&SimpleCycle::new(vec![3])));
        assert!(cycles.contains(&SimpleCycle::new(vec![1, 2])));
        assert!(cycles.contains(&SimpleCycle::new(vec![2, 3])));
        assert_eq!(cycles.len(), 4);
    }

    #[test]
    fn cycle_canonical_rotation_starts_at_smallest_vertex() {
        assert_eq!(SimpleCycle::new(vec![7, 3, 9]).vertices(), &[3, 9, 7],);
    }

    #[test]
    fn unique_path_in_a_cycle() {
        assert_eq!(three_cycle().unique_simple_path(1, 3), Some(vec![1, 2, 3]));
    }

    #[test]
    fn unique_path_in_the_twelve_edge_example() {
        let d = graph(
            9,
            &[
                (1, 2),
                (2, 7),
                (7, 3),
                (3, 1),
                (7, 9),
                (9, 8),
                (8, 7),
                (1, 4),
                (4, 5),
                (5, 1),
                (5, 6),
                (6, 5),
            ],
        );
        assert_eq!(d.unique_simple_path(3, 8), Some(vec![3, 1, 2, 7, 9, 8]));
    }

    #[test]
    fn two_parallel_routes_have_no_unique_path() {
        // bowtie plus 2 -> 3 gives both 2,3 and 2,1,3
        let d = graph(3, &[(1, 2), (2, 1), (1, 3), (3, 1), (2, 3)]);
        assert_eq!(d.count_simple_paths(2, 3), 2);
        assert_eq!(d.unique_simple_path(2, 3), None);
    }

    #[test]
    fn dot_renders_loops_as_self_arcs() {
        let d = graph(2, &[(1, 1), (1, 2), (2, 1)]);
        let dot = d.to_dot();
        assert!(dot.contains("1 -> 1;"));
        assert!(dot.starts_with("digraph G {"));
    }
}
