//! Eulerian tours: exhaustive backtracking enumeration and the membership
//! predicates built on it.
//!
//! Tours are stored as edge sequences. Two tours that differ by a cyclic
//! shift are the same tour, so [`EulerianTour`] keeps the canonical
//! rotation (lexicographically smallest edge first) and derives equality
//! from it.

use crate::digraph::{DiGraph, Edge};
use crate::{Error, Result};

/// A closed walk using every edge of its host digraph exactly once,
/// stored in canonical rotation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EulerianTour {
    edges: Vec<Edge>,
}

impl EulerianTour {
    /// Builds a tour from any rotation of its edge sequence.
    ///
    /// The sequence must be nonempty, free of repeated edges, and cyclically
    /// chained (`fin` of each edge equals `init` of the next, wrapping
    /// around). The stored rotation starts at the smallest edge.
    pub fn new(edges: Vec<Edge>) -> Result<Self> {
        if edges.is_empty() {
            return Err(Error::EmptyTour);
        }
        for i in 0..edges.len() {
            let a = edges[i];
            let b = edges[(i + 1) % edges.len()];
            if a.fin != b.init {
                return Err(Error::BrokenTourChain(a.init, a.fin, b.init, b.fin));
            }
        }
        let mut sorted = edges.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge {
                init: w[0].init,
                fin: w[0].fin,
            });
        }
        Ok(Self::from_rotation(edges))
    }

    fn from_rotation(mut edges: Vec<Edge>) -> Self {
        let min = edges
            .iter()
            .enumerate()
            .min_by_key(|(_, e)| **e)
            .map(|(i, _)| i)
            .expect("tour has at least one edge");
        edges.rotate_left(min);
        EulerianTour { edges }
    }

    /// Edge sequence in canonical rotation.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// The edge sequence rotated to start at `e`, or `None` when `e` is not
    /// on the tour.
    pub fn starting_at(&self, e: Edge) -> Option<Vec<Edge>> {
        let pos = self.edges.iter().position(|&x| x == e)?;
        let mut edges = self.edges.clone();
        edges.rotate_left(pos);
        Some(edges)
    }
}

impl DiGraph {
    /// Every Eulerian tour whose first edge is `e`, found by exhaustive
    /// backtracking. Distinct results are inequivalent under cyclic shift,
    /// and every shift class with a tour through `e` is represented once.
    pub fn eulerian_tours_from_edge(&self, e: Edge) -> Result<Vec<EulerianTour>> {
        if !self.has_edge(e) {
            return Err(Error::MissingEdge {
                init: e.init,
                fin: e.fin,
            });
        }
        let mut tours = Vec::new();
        self.tour_backtrack(e, &mut |seq| {
            tours.push(EulerianTour::new(seq.to_vec()).expect("backtracking yields closed walks"));
            true
        });
        Ok(tours)
    }

    /// Number of Eulerian tours up to cyclic shift; 0 when none exists.
    ///
    /// Every shift class contains exactly one tour starting with any fixed
    /// edge, so counting tours from one edge counts the classes.
    pub fn count_eulerian_tours(&self) -> usize {
        self.count_tours_capped(usize::MAX)
    }

    /// Counts tours up to cyclic shift, stopping once `cap` are found.
    pub(crate) fn count_tours_capped(&self, cap: usize) -> usize {
        let Some(&first) = self.edges().first() else {
            return 0;
        };
        let mut count = 0;
        self.tour_backtrack(first, &mut |_| {
            count += 1;
            count < cap
        });
        count
    }

    /// Depth-first search over edge sequences starting with `start`. The
    /// visitor receives each completed tour; returning `false` stops the
    /// search.
    fn tour_backtrack(&self, start: Edge, visit: &mut impl FnMut(&[Edge]) -> bool) {
        fn recurse(
            d: &DiGraph,
            seq: &mut Vec<Edge>,
            used: &mut Vec<bool>,
            current: usize,
            home: usize,
            visit: &mut impl FnMut(&[Edge]) -> bool,
        ) -> bool {
            if seq.len() == d.edge_count() {
                return current != home || visit(seq);
            }
            for (idx, e) in d.edges().iter().enumerate() {
                if e.init == current && !used[idx] {
                    used[idx] = true;
                    seq.push(*e);
                    let keep_going = recurse(d, seq, used, e.fin, home, visit);
                    seq.pop();
                    used[idx] = false;
                    if !keep_going {
                        return false;
                    }
                }
            }
            true
        }

        let start_idx = self
            .edges()
            .iter()
            .position(|&e| e == start)
            .expect("caller validated the start edge");
        let mut used = vec![false; self.edge_count()];
        used[start_idx] = true;
        let mut seq = vec![start];
        recurse(self, &mut seq, &mut used, start.fin, start.init, visit);
    }

    /// True when the digraph is loopless, has no isolated vertices, and has
    /// exactly one Eulerian tour up to cyclic shift.
    ///
    /// These digraphs are counted by `(n-1)! C_n / 2` (OEIS A102693).
    pub fn is_uniquely_eulerian(&self) -> bool {
        !self.has_loops()
            && self.degrees().isolated_vertices().is_empty()
            && self.count_tours_capped(2) == 1
    }

    /// The structural characterization of uniquely Eulerian digraphs:
    /// exactly one oriented simple path between every ordered vertex pair,
    /// and every vertex on exactly one or two simple cycles.
    ///
    /// Agrees with [`DiGraph::is_uniquely_eulerian`] on loopless digraphs
    /// without isolated vertices.
    pub fn satisfies_path_cycle_criterion(&self) -> bool {
        for u in 1..=self.order() {
            for v in 1..=self.order() {
                if u != v && self.count_simple_paths(u, v) != 1 {
                    return false;
                }
            }
        }
        let cycles = self.simple_cycles();
        (1..=self.order()).all(|v| {
            let on = cycles.iter().filter(|c| c.contains(v)).count();
            on == 1 || on == 2
        })
    }

    /// True when no edge lies on two distinct simple cycles.
    pub fn cycles_edge_disjoint(&self) -> bool {
        let cycles = self.simple_cycles();
        let mut seen = std::collections::HashSet::new();
        for c in &cycles {
            for e in c.edges() {
                if !seen.insert(e) {
                    return false;
                }
            }
        }
        true
    }
}

/// Explains why a digraph is not a loopless uniquely Eulerian digraph;
/// `None` when it is one. Used for CLI diagnostics.
pub fn explain_not_uniquely_eulerian(d: &DiGraph) -> Option<Error> {
    if let Some(e) = d.edges().iter().find(|e| e.is_loop()) {
        return Some(Error::UnexpectedLoop { vertex: e.init });
    }
    if let Some(&v) = d.degrees().isolated_vertices().first() {
        return Some(Error::IsolatedVertex { vertex: v });
    }
    match d.count_tours_capped(2) {
        0 => Some(Error::NoEulerianTour),
        1 => None,
        _ => Some(Error::MultipleEulerianTours),
    }
}
