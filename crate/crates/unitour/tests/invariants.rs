//! Module invariants beyond the acceptance criteria: start-edge
//! independence of tour counts, canonical rotations, determinant versus
//! subset-scan arborescence counts, the loop bijection, the inside/outside
//! separation property of arrangements, and serialization round trips.

mod common;

use num_bigint::BigUint;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::{
    all_digraphs_with_loops, all_loopless_digraphs, arborescence_count_by_search, graph,
    random_balanced_connected,
};
use unitour::best::spanning_arborescence_count;
use unitour::counting::enumerate_exhaustive;
use unitour::parens::{add_loops, enumerate_valid, is_two_regular_uniquely_eulerian, remove_loops};
use unitour::{
    DiGraph, Edge, EulerianTour, MarkedDigraph, ParenArrangement, ParenKind, ParenToken,
    RootedPlaneTree,
};

#[test]
fn tour_count_does_not_depend_on_the_start_edge() {
    for n in 1..=3 {
        for d in all_digraphs_with_loops(n) {
            if d.edge_count() == 0 || !d.is_strongly_connected() {
                continue;
            }
            let counts: Vec<usize> = d
                .edges()
                .iter()
                .map(|&e| d.eulerian_tours_from_edge(e).unwrap().len())
                .collect();
            assert!(
                counts.windows(2).all(|w| w[0] == w[1]),
                "counts differ per edge on {d:?}: {counts:?}"
            );
        }
    }
    let mut rng = StdRng::seed_from_u64(7);
    for n in [4usize, 5] {
        for _ in 0..25 {
            let d = random_balanced_connected(n, &mut rng);
            let counts: Vec<usize> = d
                .edges()
                .iter()
                .map(|&e| d.eulerian_tours_from_edge(e).unwrap().len())
                .collect();
            assert!(counts.windows(2).all(|w| w[0] == w[1]));
        }
    }
}

#[test]
fn canonical_rotation_is_idempotent_and_rotation_invariant() {
    let mut rng = StdRng::seed_from_u64(11);
    let mut samples: Vec<DiGraph> = enumerate_exhaustive(3).unwrap();
    for _ in 0..10 {
        samples.push(random_balanced_connected(4, &mut rng));
    }
    for d in samples {
        let e = d.edges()[0];
        for tour in d.eulerian_tours_from_edge(e).unwrap() {
            for shift in 0..tour.len() {
                let mut rotated = tour.edges().to_vec();
                rotated.rotate_left(shift);
                assert_eq!(EulerianTour::new(rotated).unwrap(), tour);
            }
        }
    }
}

#[test]
fn uniquely_eulerian_digraphs_are_balanced_connected_and_cycle_disjoint() {
    for n in 2..=4 {
        for d in all_loopless_digraphs(n) {
            if !d.is_uniquely_eulerian() {
                continue;
            }
            assert!(d.degrees().is_balanced(), "{d:?} is unbalanced");
            assert!(d.is_strongly_connected(), "{d:?} is disconnected");
            assert!(d.cycles_edge_disjoint(), "{d:?} has cycles sharing an edge");
        }
    }
}

#[test]
fn determinant_matches_subset_scan_exhaustively_up_to_order_four() {
    for n in 1..=4 {
        for d in all_digraphs_with_loops(n) {
            if !d.is_strongly_connected() {
                continue;
            }
            for root in 1..=n {
                assert_eq!(
                    spanning_arborescence_count(&d, root),
                    BigUint::from(arborescence_count_by_search(&d, root)),
                    "arborescence count mismatch on {d:?} rooted at {root}"
                );
            }
        }
    }
}

#[test]
fn determinant_matches_subset_scan_on_random_digraphs() {
    let mut rng = StdRng::seed_from_u64(23);
    let mut checked = 0;
    for n in [5usize, 6] {
        for _ in 0..60 {
            let edges: Vec<Edge> = (1..=n)
                .flat_map(|u| (1..=n).map(move |v| Edge::new(u, v)))
                .filter(|_| rng.gen_bool(0.35))
                .collect();
            let d = DiGraph::new(n, edges).unwrap();
            if d.edge_count() < n - 1 {
                continue;
            }
            let root = rng.gen_range(1..=n);
            assert_eq!(
                spanning_arborescence_count(&d, root),
                BigUint::from(arborescence_count_by_search(&d, root)),
                "arborescence count mismatch on {d:?} rooted at {root}"
            );
            checked += 1;
        }
    }
    assert!(checked >= 100, "only {checked} random digraphs were usable");
}

#[test]
fn loop_addition_and_removal_are_mutually_inverse_bijections() {
    for n in 2..=4 {
        let loopless_family = enumerate_exhaustive(n).unwrap();
        let mut images = Vec::new();
        for d in &loopless_family {
            let looped = add_loops(d).unwrap();
            let degrees = looped.degrees();
            for v in 1..=n {
                assert_eq!((degrees.indeg(v), degrees.outdeg(v)), (2, 2));
            }
            assert_eq!(&remove_loops(&looped).unwrap(), d);
            images.push(looped);
        }
        images.sort_unstable();
        images.dedup();
        assert_eq!(
            images.len(),
            loopless_family.len(),
            "images collide at n = {n}"
        );
    }

    // The other direction: every 2-in 2-out uniquely Eulerian digraph on
    // n <= 4 arises as such an image.
    for n in 2..=4 {
        let family_size = enumerate_exhaustive(n).unwrap().len();
        let mut two_regular = 0;
        for d in all_digraphs_with_loops(n) {
            if !is_two_regular_uniquely_eulerian(&d) {
                continue;
            }
            two_regular += 1;
            let stripped = remove_loops(&d).unwrap();
            assert!(stripped.is_uniquely_eulerian());
            assert_eq!(add_loops(&stripped).unwrap(), d);
        }
        assert_eq!(two_regular, family_size, "family sizes differ at n = {n}");
    }
}

/// Vertices reachable from `from` without ever touching `banned`.
fn reaches_avoiding(d: &DiGraph, from: usize, to: usize, banned: usize) -> bool {
    let mut seen = vec![false; d.order() + 1];
    seen[from] = true;
    let mut stack = vec![from];
    while let Some(v) = stack.pop() {
        if v == to {
            return true;
        }
        for e in d.edges() {
            if e.init == v && e.fin != banned && !seen[e.fin] {
                seen[e.fin] = true;
                stack.push(e.fin);
            }
        }
    }
    false
}

#[test]
fn pairs_inside_a_label_are_separated_from_pairs_outside() {
    // For a valid arrangement and a label i, every other label nests either
    // entirely inside i's pair or entirely outside; paths between the two
    // groups must pass through vertex i.
    for n in 2..=4 {
        for w in enumerate_valid(n) {
            let marked = MarkedDigraph::from_arrangement(&w).unwrap();
            let d = marked.graph();
            let tokens = w.tokens();
            for i in 1..=n {
                let open = tokens.iter().position(|t| t.label == i).unwrap();
                let close = tokens.iter().rposition(|t| t.label == i).unwrap();
                let inside: Vec<usize> = (1..=n)
                    .filter(|&v| v != i)
                    .filter(|&v| {
                        tokens
                            .iter()
                            .enumerate()
                            .filter(|(_, t)| t.label == v)
                            .all(|(pos, _)| open < pos && pos < close)
                    })
                    .collect();
                let outside: Vec<usize> = (1..=n)
                    .filter(|&v| v != i && !inside.contains(&v))
                    .collect();
                for &a in &inside {
                    for &b in &outside {
                        assert!(
                            !reaches_avoiding(d, a, b, i) && !reaches_avoiding(d, b, a, i),
                            "petals of {i} leak between {a} and {b} in {}",
                            w.to_text()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn digraph_rebuilt_from_its_tree_is_identical() {
    for n in 2..=4 {
        for d in enumerate_exhaustive(n).unwrap() {
            let tree = RootedPlaneTree::from_digraph(&d).unwrap();
            assert_eq!(tree.to_digraph().unwrap(), d);
        }
    }
}

#[test]
#[ignore = "runs 154440 round trips; cargo test -- --ignored"]
fn tree_round_trip_at_order_seven() {
    use unitour::plane_tree::enumerate_two_under_one;
    let mut count = 0;
    for tree in enumerate_two_under_one(7) {
        let d = tree.to_digraph().unwrap();
        assert_eq!(RootedPlaneTree::from_digraph(&d).unwrap(), tree);
        count += 1;
    }
    assert_eq!(count, 154440);
}

#[test]
fn dot_output_lists_every_vertex_and_edge() {
    let d = graph(3, &[(1, 2), (2, 1), (3, 3)]);
    let dot = d.to_dot();
    for line in ["1;", "2;", "3;", "1 -> 2;", "2 -> 1;", "3 -> 3;"] {
        assert!(dot.contains(line), "missing {line:?} in {dot}");
    }
}

proptest! {
    #[test]
    fn digraph_json_round_trip(n in 1usize..=6, mask in any::<u64>()) {
        let all: Vec<Edge> = (1..=n)
            .flat_map(|u| (1..=n).map(move |v| Edge::new(u, v)))
            .collect();
        let edges = all
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> (i % 64) & 1 == 1 || mask.rotate_left(*i as u32) & 1 == 1)
            .map(|(_, e)| *e);
        let d = DiGraph::new(n, edges).unwrap();
        let json = serde_json::to_string(&d).unwrap();
        let back: DiGraph = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, d);
    }

    #[test]
    fn tree_json_round_trip(
        seeds in prop::collection::vec((any::<u8>(), any::<u8>()), 1..=8)
    ) {
        let n = seeds.len();
        let mut children: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
        for (v, (parent_seed, pos_seed)) in seeds.iter().enumerate().map(|(i, s)| (i + 1, s)) {
            // Parents always carry a smaller label, so the result is a tree.
            let parent = (*parent_seed as usize) % v;
            let pos = (*pos_seed as usize) % (children[parent].len() + 1);
            children[parent].insert(pos, v);
        }
        let t = RootedPlaneTree::from_children(n, children).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        let back: RootedPlaneTree = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn arrangement_text_and_json_round_trip(
        n in 1usize..=6,
        keys in prop::collection::vec(any::<u16>(), 12)
    ) {
        // Order the 2n tokens by random sort keys, then repair each label
        // so its open comes first; the result is always well-formed.
        let mut slots: Vec<(u16, ParenToken)> = (1..=n)
            .flat_map(|l| [ParenToken::open(l), ParenToken::close(l)])
            .enumerate()
            .map(|(i, t)| (keys[i % keys.len()].wrapping_add(i as u16), t))
            .collect();
        slots.sort_by_key(|(k, _)| *k);
        let mut tokens: Vec<ParenToken> = slots.into_iter().map(|(_, t)| t).collect();
        for l in 1..=n {
            let first = tokens.iter().position(|t| t.label == l).unwrap();
            if tokens[first].kind == ParenKind::Close {
                tokens[first].kind = ParenKind::Open;
                let second = tokens.iter().rposition(|t| t.label == l).unwrap();
                tokens[second].kind = ParenKind::Close;
            }
        }
        let w = ParenArrangement::new(tokens).unwrap();
        prop_assert_eq!(&ParenArrangement::parse_text(&w.to_text()).unwrap(), &w);
        let json = serde_json::to_string(&w).unwrap();
        let back: ParenArrangement = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, w);
    }
}
