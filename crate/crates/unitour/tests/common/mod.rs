//! Shared oracles for the integration suites. Everything here is
//! deliberately independent of the library's counting paths: arborescences
//! are counted by scanning edge subsets, never through the Laplacian.
#![allow(dead_code)] // each test binary uses a different subset

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

use unitour::{DiGraph, Edge};

pub fn graph(n: usize, edges: &[(usize, usize)]) -> DiGraph {
    DiGraph::new(n, edges.iter().copied()).unwrap()
}

/// Counts spanning arborescences rooted at `root` by testing every
/// (n-1)-subset of non-loop edges for the arborescence property: every
/// other vertex has exactly one outgoing edge and following those edges
/// reaches the root.
pub fn arborescence_count_by_search(d: &DiGraph, root: usize) -> usize {
    let n = d.order();
    if n == 1 {
        return 1;
    }
    let edges: Vec<Edge> = d.edges().iter().copied().filter(|e| !e.is_loop()).collect();
    let mut count = 0;
    let mut subset = Vec::with_capacity(n - 1);
    subsets_of_size(&edges, n - 1, 0, &mut subset, &mut |chosen| {
        if is_arborescence(n, root, chosen) {
            count += 1;
        }
    });
    count
}

fn subsets_of_size(
    edges: &[Edge],
    size: usize,
    from: usize,
    chosen: &mut Vec<Edge>,
    visit: &mut impl FnMut(&[Edge]),
) {
    if chosen.len() == size {
        visit(chosen);
        return;
    }
    let missing = size - chosen.len();
    for i in from..edges.len() {
        if edges.len() - i < missing {
            break;
        }
        chosen.push(edges[i]);
        subsets_of_size(edges, size, i + 1, chosen, visit);
        chosen.pop();
    }
}

fn is_arborescence(n: usize, root: usize, edges: &[Edge]) -> bool {
    let mut out = vec![None; n + 1];
    for e in edges {
        if e.init == root || out[e.init].replace(e.fin).is_some() {
            return false;
        }
    }
    for v in 1..=n {
        if v == root {
            continue;
        }
        // Follow out-edges; an arborescence reaches the root in < n steps.
        let mut current = v;
        for _ in 0..n {
            match out[current] {
                Some(next) if next == root => break,
                Some(next) => current = next,
                None => return false,
            }
        }
        if out[current] != Some(root) {
            return false;
        }
    }
    true
}

/// All loopless digraphs on `{1..n}`, one per subset of the n(n-1)
/// possible edges.
pub fn all_loopless_digraphs(n: usize) -> Vec<DiGraph> {
    let all_edges: Vec<Edge> = (1..=n)
        .flat_map(|u| {
            (1..=n)
                .filter(move |&v| v != u)
                .map(move |v| Edge::new(u, v))
        })
        .collect();
    subsets_as_graphs(n, &all_edges)
}

/// All digraphs on `{1..n}` over every (init, fin) pair, loops included.
pub fn all_digraphs_with_loops(n: usize) -> Vec<DiGraph> {
    let all_edges: Vec<Edge> = (1..=n)
        .flat_map(|u| (1..=n).map(move |v| Edge::new(u, v)))
        .collect();
    subsets_as_graphs(n, &all_edges)
}

fn subsets_as_graphs(n: usize, all_edges: &[Edge]) -> Vec<DiGraph> {
    let m = all_edges.len();
    assert!(m < 26, "subset scan too large");
    (0u32..1 << m)
        .map(|mask| {
            let edges = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| all_edges[i]);
            DiGraph::new(n, edges).unwrap()
        })
        .collect()
}

/// Samples a balanced, strongly connected digraph on `{1..n}` as a union of
/// 1..=3 pairwise edge-disjoint random simple cycles (length-1 cycles are
/// loops). Every balanced digraph decomposes into edge-disjoint simple
/// cycles, so any member of the family can be produced.
pub fn random_balanced_connected(n: usize, rng: &mut StdRng) -> DiGraph {
    loop {
        let cycle_count = rng.gen_range(1..=3);
        let mut edges: Vec<Edge> = Vec::new();
        let mut ok = true;
        for _ in 0..cycle_count {
            let len = rng.gen_range(1..=n);
            let mut vertices: Vec<usize> = (1..=n).collect();
            vertices.shuffle(rng);
            vertices.truncate(len);
            for i in 0..len {
                let e = Edge::new(vertices[i], vertices[(i + 1) % len]);
                if edges.contains(&e) {
                    ok = false;
                    break;
                }
                edges.push(e);
            }
            if !ok {
                break;
            }
        }
        if !ok {
            continue;
        }
        let d = DiGraph::new(n, edges).unwrap();
        let degrees = d.degrees();
        if degrees.isolated_vertices().is_empty() && d.is_strongly_connected() {
            debug_assert!(degrees.is_balanced());
            return d;
        }
    }
}
