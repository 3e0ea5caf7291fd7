//! Labeled parenthesis arrangements and their bijection with marked
//! 2-in 2-out digraphs.
//!
//! An arrangement is a sequence of `2n` tokens, one open and one close per
//! label in `1..=n`, the open first. It is *valid* when no two pairs
//! interlace. Valid arrangements correspond to digraphs with every indegree
//! and outdegree equal to 2 (loops allowed), a unique Eulerian tour, and a
//! marked edge: walk the tour from the marked edge and open each vertex's
//! pair on first arrival, close it on the second.
//!
//! Adding a loop at every outdegree-1 vertex turns a loopless uniquely
//! Eulerian digraph into a 2-in 2-out one and stripping loops inverts it,
//! so both families have the same size.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::digraph::{DiGraph, Edge};
use crate::plane_tree::dyck_words;
use crate::tour::explain_not_uniquely_eulerian;
use crate::{Error, Result};

/// Opening or closing half of a labeled pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ParenKind {
    Open,
    Close,
}

/// One parenthesis token; serializes as `["open", label]` / `["close", label]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "(ParenKind, usize)", from = "(ParenKind, usize)")]
pub struct ParenToken {
    pub kind: ParenKind,
    pub label: usize,
}

impl ParenToken {
    pub fn open(label: usize) -> Self {
        ParenToken {
            kind: ParenKind::Open,
            label,
        }
    }

    pub fn close(label: usize) -> Self {
        ParenToken {
            kind: ParenKind::Close,
            label,
        }
    }
}

impl From<(ParenKind, usize)> for ParenToken {
    fn from((kind, label): (ParenKind, usize)) -> Self {
        ParenToken { kind, label }
    }
}

impl From<ParenToken> for (ParenKind, usize) {
    fn from(t: ParenToken) -> Self {
        (t.kind, t.label)
    }
}

#[derive(Serialize, Deserialize)]
struct RawArrangement {
    n: usize,
    tokens: Vec<ParenToken>,
}

/// A sequence of `2n` labeled parenthesis tokens, one open and one close
/// per label with the open first. Validity (no interlaced pairs) is a
/// separate property checked by [`ParenArrangement::is_valid`].
///
/// Text form: whitespace-separated `(i` and `)i` tokens, e.g.
/// `"(1 )1 (2 (3 )3 )2"`. JSON form:
/// `{"n": 2, "tokens": [["open", 1], ["close", 1], …]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "RawArrangement", try_from = "RawArrangement")]
pub struct ParenArrangement {
    n: usize,
    tokens: Vec<ParenToken>,
}

impl From<ParenArrangement> for RawArrangement {
    fn from(w: ParenArrangement) -> Self {
        RawArrangement {
            n: w.n,
            tokens: w.tokens,
        }
    }
}

impl TryFrom<RawArrangement> for ParenArrangement {
    type Error = Error;

    fn try_from(raw: RawArrangement) -> Result<Self> {
        let w = ParenArrangement::new(raw.tokens)?;
        if w.n != raw.n {
            return Err(Error::MalformedArrangement(format!(
                "n = {} does not match {} tokens",
                raw.n,
                2 * w.n
            )));
        }
        Ok(w)
    }
}

impl ParenArrangement {
    /// Builds an arrangement, checking that the labels are exactly `1..=n`
    /// with one open and one close each and every open before its close.
    pub fn new(tokens: Vec<ParenToken>) -> Result<Self> {
        if tokens.is_empty() || !tokens.len().is_multiple_of(2) {
            return Err(Error::MalformedArrangement(format!(
                "expected a nonempty even number of tokens, got {}",
                tokens.len()
            )));
        }
        let n = tokens.len() / 2;
        let mut open_at = vec![None; n + 1];
        let mut close_at = vec![None; n + 1];
        for (pos, t) in tokens.iter().enumerate() {
            if t.label < 1 || t.label > n {
                return Err(Error::MalformedArrangement(format!(
                    "label {} is out of range 1..={n}",
                    t.label
                )));
            }
            let slot = match t.kind {
                ParenKind::Open => &mut open_at[t.label],
                ParenKind::Close => &mut close_at[t.label],
            };
            if slot.replace(pos).is_some() {
                return Err(Error::MalformedArrangement(format!(
                    "label {} appears twice as {:?}",
                    t.label, t.kind
                )));
            }
        }
        for label in 1..=n {
            match (open_at[label], close_at[label]) {
                (Some(o), Some(c)) if o < c => {}
                (Some(_), Some(_)) => {
                    return Err(Error::MalformedArrangement(format!(
                        "label {label} closes before it opens"
                    )))
                }
                _ => {
                    return Err(Error::MalformedArrangement(format!(
                        "label {label} is missing an open or a close"
                    )))
                }
            }
        }
        Ok(ParenArrangement { n, tokens })
    }

    /// Number of labeled pairs.
    pub fn pair_count(&self) -> usize {
        self.n
    }

    pub fn tokens(&self) -> &[ParenToken] {
        &self.tokens
    }

    /// The token labels in sequence order (each label appears twice).
    pub fn labels(&self) -> impl Iterator<Item = usize> + '_ {
        self.tokens.iter().map(|t| t.label)
    }

    /// True when no two pairs interlace, i.e. the pattern
    /// `(i … (j … )i … )j` never occurs. Equivalently: erasing labels
    /// leaves a balanced word whose structurally matched positions carry
    /// equal labels.
    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// Like [`ParenArrangement::is_valid`], but names an interlaced pair on
    /// failure.
    pub fn validate(&self) -> Result<()> {
        let mut stack = Vec::new();
        for t in &self.tokens {
            match t.kind {
                ParenKind::Open => stack.push(t.label),
                ParenKind::Close => match stack.pop() {
                    Some(top) if top == t.label => {}
                    Some(top) => {
                        return Err(Error::InterlacedPairs {
                            first: t.label,
                            second: top,
                        })
                    }
                    None => {
                        return Err(Error::MalformedArrangement(
                            "a prefix has more closes than opens".into(),
                        ))
                    }
                },
            }
        }
        Ok(())
    }

    /// Text form `"(1 )1 (2 (3 )3 )2"`.
    pub fn to_text(&self) -> String {
        self.tokens
            .iter()
            .map(|t| {
                let mark = match t.kind {
                    ParenKind::Open => '(',
                    ParenKind::Close => ')',
                };
                format!("{mark}{}", t.label)
            })
            .join(" ")
    }

    /// Parses the whitespace-separated text form.
    pub fn parse_text(s: &str) -> Result<Self> {
        let mut tokens = Vec::new();
        for word in s.split_whitespace() {
            let (kind, digits) = match word.split_at(1) {
                ("(", rest) => (ParenKind::Open, rest),
                (")", rest) => (ParenKind::Close, rest),
                _ => {
                    return Err(Error::MalformedArrangement(format!(
                        "token {word:?} must start with '(' or ')'"
                    )))
                }
            };
            let label = digits.parse().map_err(|_| {
                Error::MalformedArrangement(format!("token {word:?} has no numeric label"))
            })?;
            tokens.push(ParenToken { kind, label });
        }
        Self::new(tokens)
    }
}

/// All valid arrangements of `n` labeled pairs; there are `n! C_n` of them.
pub fn enumerate_valid(n: usize) -> impl Iterator<Item = ParenArrangement> {
    // Every valid arrangement is a balanced shape with labels assigned to
    // its structurally matched pairs, so enumerate shapes times labelings.
    let mut shapes = Vec::new();
    let mut word = Vec::with_capacity(2 * n);
    dyck_words(n, n, &mut word, &mut |w| shapes.push(pair_indices(w)));
    shapes.into_iter().flat_map(move |pairs| {
        (1..=n).permutations(n).map(move |labels| {
            let tokens = pairs
                .iter()
                .map(|&(kind, pair)| ParenToken {
                    kind,
                    label: labels[pair],
                })
                .collect();
            ParenArrangement::new(tokens).expect("shape labelings are well-formed")
        })
    })
}

/// For each position of a Dyck word, its kind and the index of the pair it
/// belongs to (pairs numbered by opening order).
fn pair_indices(word: &[bool]) -> Vec<(ParenKind, usize)> {
    let mut stack = Vec::new();
    let mut next = 0;
    word.iter()
        .map(|&is_open| {
            if is_open {
                stack.push(next);
                next += 1;
                (ParenKind::Open, next - 1)
            } else {
                (ParenKind::Close, stack.pop().expect("word is balanced"))
            }
        })
        .collect()
}

/// Adds a loop at every outdegree-1 vertex of a loopless uniquely Eulerian
/// digraph, producing a 2-in 2-out digraph with the same unique tour
/// structure. Inverse of [`remove_loops`].
pub fn add_loops(d: &DiGraph) -> Result<DiGraph> {
    if let Some(reason) = explain_not_uniquely_eulerian(d) {
        return Err(reason);
    }
    let degs = d.degrees();
    let loops = (1..=d.order())
        .filter(|&v| degs.outdeg(v) == 1)
        .map(|v| Edge::new(v, v));
    DiGraph::new(d.order(), d.edges().iter().copied().chain(loops))
}

/// Deletes every loop of a 2-in 2-out uniquely Eulerian digraph; the result
/// is loopless and still has a unique tour. Inverse of [`add_loops`].
pub fn remove_loops(d: &DiGraph) -> Result<DiGraph> {
    validate_two_regular_unique_tour(d)?;
    DiGraph::new(
        d.order(),
        d.edges().iter().copied().filter(|e| !e.is_loop()),
    )
}

/// True when every vertex has indegree and outdegree 2 (loops allowed) and
/// the digraph has exactly one Eulerian tour up to cyclic shift.
pub fn is_two_regular_uniquely_eulerian(d: &DiGraph) -> bool {
    validate_two_regular_unique_tour(d).is_ok()
}

fn validate_two_regular_unique_tour(d: &DiGraph) -> Result<()> {
    if d.order() < 2 {
        return Err(Error::OrderTooSmall {
            operation: "2-in 2-out digraphs",
            min: 2,
            n: d.order(),
        });
    }
    let degs = d.degrees();
    for v in 1..=d.order() {
        if degs.indeg(v) != 2 || degs.outdeg(v) != 2 {
            return Err(Error::NotTwoRegular {
                vertex: v,
                indeg: degs.indeg(v),
                outdeg: degs.outdeg(v),
            });
        }
    }
    match d.count_tours_capped(2) {
        0 => Err(Error::NoEulerianTour),
        1 => Ok(()),
        _ => Err(Error::MultipleEulerianTours),
    }
}

#[derive(Serialize, Deserialize)]
struct RawMarked {
    graph: DiGraph,
    marked_edge: Edge,
}

/// A 2-in 2-out uniquely Eulerian digraph together with a marked edge that
/// anchors its tour.
///
/// JSON form: `{"graph": {…}, "marked_edge": [u, v]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "RawMarked", try_from = "RawMarked")]
pub struct MarkedDigraph {
    graph: DiGraph,
    mark: Edge,
}

impl From<MarkedDigraph> for RawMarked {
    fn from(m: MarkedDigraph) -> Self {
        RawMarked {
            graph: m.graph,
            marked_edge: m.mark,
        }
    }
}

impl TryFrom<RawMarked> for MarkedDigraph {
    type Error = Error;

    fn try_from(raw: RawMarked) -> Result<Self> {
        MarkedDigraph::new(raw.graph, raw.marked_edge)
    }
}

impl MarkedDigraph {
    /// Validates that `graph` is 2-in 2-out with a unique tour and that
    /// `mark` is one of its edges.
    pub fn new(graph: DiGraph, mark: Edge) -> Result<Self> {
        validate_two_regular_unique_tour(&graph)?;
        if !graph.has_edge(mark) {
            return Err(Error::MissingEdge {
                init: mark.init,
                fin: mark.fin,
            });
        }
        Ok(MarkedDigraph { graph, mark })
    }

    pub fn graph(&self) -> &DiGraph {
        &self.graph
    }

    pub fn mark(&self) -> Edge {
        self.mark
    }

    /// Follows the unique tour from the marked edge and emits each arrived
    /// vertex as an open token on first arrival, a close token on the
    /// second. The result is always a valid arrangement.
    pub fn to_arrangement(&self) -> ParenArrangement {
        let tours = self
            .graph
            .eulerian_tours_from_edge(self.mark)
            .expect("mark is validated to be an edge");
        debug_assert_eq!(tours.len(), 1);
        let walk = tours[0]
            .starting_at(self.mark)
            .expect("tour contains the mark");
        let mut seen = vec![false; self.graph.order() + 1];
        let tokens = walk
            .iter()
            .map(|e| {
                let v = e.fin;
                if seen[v] {
                    ParenToken::close(v)
                } else {
                    seen[v] = true;
                    ParenToken::open(v)
                }
            })
            .collect();
        ParenArrangement::new(tokens).expect("unique tours yield well-formed arrangements")
    }

    /// Rebuilds the marked digraph from a valid arrangement: consecutive
    /// labels become edges, the last label closes back to the first, and
    /// that closing edge is the mark. Inverse of
    /// [`MarkedDigraph::to_arrangement`].
    pub fn from_arrangement(w: &ParenArrangement) -> Result<Self> {
        w.validate()?;
        if w.pair_count() < 2 {
            return Err(Error::OrderTooSmall {
                operation: "the arrangement bijection",
                min: 2,
                n: w.pair_count(),
            });
        }
        let labels: Vec<usize> = w.labels().collect();
        let mut edges: Vec<Edge> = labels.windows(2).map(|p| Edge::new(p[0], p[1])).collect();
        let mark = Edge::new(labels[labels.len() - 1], labels[0]);
        edges.push(mark);
        let graph = DiGraph::new(w.pair_count(), edges)?;
        MarkedDigraph::new(graph, mark)
    }
}
