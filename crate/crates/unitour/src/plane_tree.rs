//! Labeled rooted plane trees and their bijection with loopless uniquely
//! Eulerian digraphs.
//!
//! Trees live on the labels `{0, 1, …, n}` with root 0 and ordered child
//! lists. Three nested families matter here:
//!
//! * all labeled rooted plane trees,
//! * the *anchored* trees, whose leftmost root child is vertex 1
//!   (`(n-1)! C_n` of them),
//! * the anchored trees with vertex 2 in the subtree rooted at vertex 1
//!   (half of the anchored ones).
//!
//! [`RootedPlaneTree::involution`] swaps the two halves of the anchored
//! family, and [`RootedPlaneTree::to_digraph`] /
//! [`RootedPlaneTree::from_digraph`] is the bijection between the last
//! family and the digraphs accepted by [`DiGraph::is_uniquely_eulerian`].

use std::collections::BTreeMap;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::digraph::{DiGraph, Edge, Vertex};
use crate::tour::explain_not_uniquely_eulerian;
use crate::{Error, Result};

#[derive(Serialize, Deserialize)]
struct RawTree {
    children: BTreeMap<String, Vec<usize>>,
    n: usize,
}

/// A rooted plane tree on the labels `{0, …, n}` with root 0; the order of
/// each child list is significant.
///
/// JSON form: `{"children": {"0": [1, 4], "1": [2]}, "n": 4}`; labels
/// without children are omitted from the map.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "RawTree", try_from = "RawTree")]
pub struct RootedPlaneTree {
    n: usize,
    children: Vec<Vec<usize>>,
}

impl From<RootedPlaneTree> for RawTree {
    fn from(t: RootedPlaneTree) -> Self {
        let children = t
            .children
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_empty())
            .map(|(label, c)| (label.to_string(), c.clone()))
            .collect();
        RawTree { children, n: t.n }
    }
}

impl TryFrom<RawTree> for RootedPlaneTree {
    type Error = Error;

    fn try_from(raw: RawTree) -> Result<Self> {
        let mut children = vec![Vec::new(); raw.n + 1];
        let mut listed = vec![false; raw.n + 1];
        for (key, kids) in raw.children {
            let label: usize = key
                .parse()
                .map_err(|_| Error::MalformedTree(format!("non-numeric label {key:?}")))?;
            if label > raw.n {
                return Err(Error::MalformedTree(format!(
                    "label {label} is out of range 0..={}",
                    raw.n
                )));
            }
            if listed[label] {
                return Err(Error::MalformedTree(format!("label {label} listed twice")));
            }
            listed[label] = true;
            children[label] = kids;
        }
        RootedPlaneTree::from_children(raw.n, children)
    }
}

impl RootedPlaneTree {
    /// Builds a tree from `(label, ordered children)` pairs; labels not
    /// mentioned are leaves.
    pub fn new(n: usize, nodes: impl IntoIterator<Item = (usize, Vec<usize>)>) -> Result<Self> {
        let mut children = vec![Vec::new(); n + 1];
        for (label, kids) in nodes {
            if label > n {
                return Err(Error::MalformedTree(format!(
                    "label {label} is out of range 0..={n}"
                )));
            }
            if !children[label].is_empty() {
                return Err(Error::MalformedTree(format!("label {label} listed twice")));
            }
            children[label] = kids;
        }
        Self::from_children(n, children)
    }

    /// Builds a tree from a full child-list table indexed by label.
    pub fn from_children(n: usize, children: Vec<Vec<usize>>) -> Result<Self> {
        if children.len() != n + 1 {
            return Err(Error::MalformedTree(format!(
                "expected {} child lists, got {}",
                n + 1,
                children.len()
            )));
        }
        let mut seen = vec![false; n + 1];
        for kids in &children {
            for &c in kids {
                if c < 1 || c > n {
                    return Err(Error::MalformedTree(format!(
                        "child label {c} is out of range 1..={n}"
                    )));
                }
                if seen[c] {
                    return Err(Error::MalformedTree(format!(
                        "label {c} has more than one parent"
                    )));
                }
                seen[c] = true;
            }
        }
        if let Some(v) = (1..=n).find(|&v| !seen[v]) {
            return Err(Error::MalformedTree(format!("label {v} is unattached")));
        }
        // Each of 1..=n has exactly one parent; the structure is a tree iff
        // everything is reachable from the root.
        let mut reached = 0;
        let mut stack = vec![0usize];
        let mut visited = vec![false; n + 1];
        visited[0] = true;
        while let Some(x) = stack.pop() {
            reached += 1;
            for &c in &children[x] {
                if !visited[c] {
                    visited[c] = true;
                    stack.push(c);
                }
            }
        }
        if reached != n + 1 {
            return Err(Error::MalformedTree(
                "not connected: some labels are unreachable from the root".into(),
            ));
        }
        Ok(RootedPlaneTree { n, children })
    }

    /// Number of non-root labels; the tree has `n + 1` nodes.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Ordered children of `label`.
    pub fn children(&self, label: usize) -> &[usize] {
        &self.children[label]
    }

    /// True when the leftmost child of the root is vertex 1.
    pub fn is_anchored(&self) -> bool {
        self.children[0].first() == Some(&1)
    }

    /// True when vertex 2 lies in the subtree rooted at vertex 1.
    pub fn has_two_under_one(&self) -> bool {
        self.n >= 2 && self.subtree_contains(1, 2)
    }

    fn subtree_contains(&self, root: usize, target: usize) -> bool {
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            if x == target {
                return true;
            }
            stack.extend_from_slice(&self.children[x]);
        }
        false
    }

    /// Swaps the children of the root after vertex 1 with the children of
    /// vertex 1: the j-th child of 1 becomes the (j+1)-th child of the root
    /// and vice versa. Everything else is untouched.
    ///
    /// This map is an involution on anchored trees and exchanges the trees
    /// with vertex 2 below vertex 1 with those without.
    pub fn involution(&self) -> Result<Self> {
        if !self.is_anchored() {
            return Err(Error::RootNotAnchoredAtOne {
                found: self.children[0].first().copied(),
            });
        }
        let mut children = self.children.clone();
        let mut new_root = vec![1];
        new_root.extend_from_slice(&self.children[1]);
        children[1] = self.children[0][1..].to_vec();
        children[0] = new_root;
        Ok(RootedPlaneTree {
            n: self.n,
            children,
        })
    }

    /// The digraph on `{1, …, n}` associated with a tree whose vertex 2 lies
    /// below vertex 1. For a node `x` with children `c_1 … c_r`:
    ///
    /// * consecutive children are chained: `(c_i, c_{i+1})`,
    /// * the root's children close into a cycle: `(c_r, c_1)`,
    /// * a non-root `x` is inserted into its children's cycle:
    ///   `(c_r, x)` and `(x, c_1)`.
    ///
    /// The result always has exactly one Eulerian tour.
    pub fn to_digraph(&self) -> Result<DiGraph> {
        if !self.is_anchored() {
            return Err(Error::RootNotAnchoredAtOne {
                found: self.children[0].first().copied(),
            });
        }
        if !self.has_two_under_one() {
            return Err(Error::TwoNotUnderOne);
        }
        let mut edges = Vec::new();
        for x in 0..=self.n {
            let kids = &self.children[x];
            let Some((&first, &last)) = kids.first().zip(kids.last()) else {
                continue;
            };
            for w in kids.windows(2) {
                edges.push(Edge::new(w[0], w[1]));
            }
            if x == 0 {
                // A single root child closes no cycle: the closure edge
                // would be a loop.
                if first != last {
                    edges.push(Edge::new(last, first));
                }
            } else {
                edges.push(Edge::new(last, x));
                edges.push(Edge::new(x, first));
            }
        }
        DiGraph::new(self.n, edges)
    }

    /// Inverts [`RootedPlaneTree::to_digraph`]: recovers the unique tree
    /// with vertex 2 below vertex 1 that maps to `d`. Rejects digraphs that
    /// are not loopless uniquely Eulerian.
    ///
    /// The tree is rebuilt from the cycle structure: every vertex lies on
    /// one or two simple cycles, and the cycles touch like the nodes of a
    /// tree. Children are attached in cycle order starting at the parent's
    /// successor, which is forced by the `(x, c_1)` edge rule.
    pub fn from_digraph(d: &DiGraph) -> Result<Self> {
        if let Some(reason) = explain_not_uniquely_eulerian(d) {
            return Err(reason);
        }
        let n = d.order();
        let cycles = d.simple_cycles();
        let mut cycles_at: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
        for (i, c) in cycles.iter().enumerate() {
            for &v in c.vertices() {
                cycles_at[v].push(i);
            }
        }

        let mut children: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
        let mut used = vec![false; cycles.len()];

        // Attaches cycle `c`'s vertices (after `r`) as children of `r`,
        // descending into each vertex's other cycle.
        fn attach(
            r: Vertex,
            c: usize,
            cycles: &[crate::digraph::SimpleCycle],
            cycles_at: &[Vec<usize>],
            children: &mut [Vec<usize>],
            used: &mut [bool],
        ) {
            used[c] = true;
            let order = cycles[c].rotated_to(r);
            for &v in &order[1..] {
                children[r].push(v);
                if let Some(&other) = cycles_at[v].iter().find(|&&i| !used[i]) {
                    attach(v, other, cycles, cycles_at, children, used);
                }
            }
        }

        match cycles_at[1].as_slice() {
            &[c] => {
                children[0] = vec![1];
                attach(1, c, &cycles, &cycles_at, &mut children, &mut used);
            }
            &[c1, c2] => {
                // The unique simple path from 1 to 2 shares edges with
                // exactly one of the two cycles through 1; that cycle hangs
                // below vertex 1 and the other becomes the root cycle. The
                // path's first edge decides, because each out-edge of 1
                // lies on exactly one of the two cycles.
                let path = d
                    .unique_simple_path(1, 2)
                    .expect("uniquely Eulerian digraphs have unique simple paths");
                let first = Edge::new(path[0], path[1]);
                let on_c1 = cycles[c1].edges().any(|e| e == first);
                let root_cycle = if on_c1 { c2 } else { c1 };
                used[root_cycle] = true;
                for &v in &cycles[root_cycle].rotated_to(1) {
                    children[0].push(v);
                    if let Some(&other) = cycles_at[v].iter().find(|&&i| !used[i]) {
                        attach(v, other, &cycles, &cycles_at, &mut children, &mut used);
                    }
                }
            }
            on => unreachable!(
                "vertex 1 lies on {} cycles in a uniquely Eulerian digraph",
                on.len()
            ),
        }

        let tree = RootedPlaneTree::from_children(n, children)?;
        debug_assert!(tree.has_two_under_one());
        debug_assert_eq!(tree.to_digraph().as_ref(), Ok(d));
        Ok(tree)
    }
}

/// One representative per unlabeled plane tree shape with `n + 1` nodes,
/// labeled in preorder (root 0, then 1, 2, … in visit order). There are
/// `C_n` of them.
pub fn enumerate_unlabeled(n: usize) -> Vec<RootedPlaneTree> {
    let mut shapes = Vec::new();
    let mut word = Vec::with_capacity(2 * n);
    dyck_words(n, n, &mut word, &mut |w| shapes.push(shape_of(n, w)));
    shapes
}

/// Generates all balanced parenthesis words with `open` opens and `close`
/// closes remaining, invoking `emit` on each complete word.
pub(crate) fn dyck_words(
    open: usize,
    close: usize,
    word: &mut Vec<bool>,
    emit: &mut impl FnMut(&[bool]),
) {
    if open == 0 && close == 0 {
        emit(word);
        return;
    }
    if open > 0 {
        word.push(true);
        dyck_words(open - 1, close, word, emit);
        word.pop();
    }
    if close > open {
        word.push(false);
        dyck_words(open, close - 1, word, emit);
        word.pop();
    }
}

/// Parses a Dyck word into the plane tree it encodes, labels in preorder.
fn shape_of(n: usize, word: &[bool]) -> RootedPlaneTree {
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    let mut stack = vec![0usize];
    let mut next = 1;
    for &is_open in word {
        if is_open {
            let top = *stack.last().expect("root stays on the stack");
            children[top].push(next);
            stack.push(next);
            next += 1;
        } else {
            stack.pop();
        }
    }
    RootedPlaneTree::from_children(n, children).expect("Dyck words encode trees")
}

/// All anchored labeled trees on `{0, …, n}`: root 0, leftmost root child 1,
/// the remaining labels `2..=n` in every possible arrangement. There are
/// `(n-1)! C_n` of them for `n >= 1`.
pub fn enumerate_anchored(n: usize) -> impl Iterator<Item = RootedPlaneTree> {
    let shapes = if n == 0 {
        Vec::new()
    } else {
        enumerate_unlabeled(n)
    };
    shapes.into_iter().flat_map(move |shape| {
        (2..=n).permutations(n.saturating_sub(1)).map(move |perm| {
            // Preorder position 0 is the root and position 1 the leftmost
            // root child, so relabeling fixes 0 and 1 and permutes the rest.
            let mut label = vec![0; n + 1];
            label[0] = 0;
            if n >= 1 {
                label[1] = 1;
            }
            for (pos, &l) in perm.iter().enumerate() {
                label[pos + 2] = l;
            }
            let mut children = vec![Vec::new(); n + 1];
            for pos in 0..=n {
                children[label[pos]] = shape.children(pos).iter().map(|&c| label[c]).collect();
            }
            RootedPlaneTree::from_children(n, children).expect("relabeling preserves the tree")
        })
    })
}

/// The anchored trees with vertex 2 in the subtree rooted at vertex 1:
/// exactly half of [`enumerate_anchored`] for `n >= 2`, and the domain of
/// [`RootedPlaneTree::to_digraph`].
pub fn enumerate_two_under_one(n: usize) -> impl Iterator<Item = RootedPlaneTree> {
    enumerate_anchored(n).filter(RootedPlaneTree::has_two_under_one)
}
