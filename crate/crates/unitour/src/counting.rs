//! Exact counting and exhaustive generation: Catalan numbers, the closed
//! form `(n-1)! C_n / 2` for the number of loopless uniquely Eulerian
//! digraphs, the brute-force edge-subset search, and cross-checking reports.

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::digraph::{DiGraph, Edge};
use crate::plane_tree;
use crate::{parens, Error, Result};

/// `k!` as an exact integer.
pub fn factorial(k: usize) -> BigUint {
    (1..=k as u64).fold(BigUint::from(1u8), |acc, i| acc * i)
}

/// The n-th Catalan number `binom(2n, n) / (n + 1)`, exact.
pub fn catalan(n: usize) -> BigUint {
    factorial(2 * n) / (factorial(n).pow(2) * (n as u64 + 1))
}

/// The closed-form count `(n-1)! C_n / 2` of loopless digraphs on `{1..n}`
/// with no isolated vertices and exactly one Eulerian tour up to cyclic
/// shift. Requires `n >= 2`; the expression is not an integer at `n = 1`.
pub fn closed_form_count(n: usize) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::OrderTooSmall {
            operation: "closed_form_count",
            min: 2,
            n,
        });
    }
    let doubled = factorial(n - 1) * catalan(n);
    debug_assert!(&doubled % 2u8 == BigUint::ZERO);
    Ok(doubled / 2u8)
}

/// Largest order accepted by [`enumerate_exhaustive`]; the scan visits
/// `2^(n(n-1))` edge subsets.
pub const EXHAUSTIVE_MAX_ORDER: usize = 5;

/// All loopless digraphs on `{1..n}` with no isolated vertices and exactly
/// one Eulerian tour, found by scanning every loopless edge subset.
/// Returned in canonical (sorted edge list) order.
///
/// This is the independent oracle for the bijective enumerations; it never
/// touches the tree or parenthesis machinery.
pub fn enumerate_exhaustive(n: usize) -> Result<Vec<DiGraph>> {
    if !(2..=EXHAUSTIVE_MAX_ORDER).contains(&n) {
        return Err(Error::SearchOutOfRange {
            n,
            max: EXHAUSTIVE_MAX_ORDER,
        });
    }
    let all_edges: Vec<Edge> = (1..=n)
        .flat_map(|u| {
            (1..=n)
                .filter(move |&v| v != u)
                .map(move |v| Edge::new(u, v))
        })
        .collect();
    let m = all_edges.len();
    let mut found = Vec::new();
    let mut indeg = vec![0usize; n + 1];
    let mut outdeg = vec![0usize; n + 1];

    for mask in 0u64..(1u64 << m) {
        indeg.fill(0);
        outdeg.fill(0);
        let mut bits = mask;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            outdeg[all_edges[i].init] += 1;
            indeg[all_edges[i].fin] += 1;
        }
        // Cheap necessary conditions first: no isolated vertex, balanced.
        if (1..=n).any(|v| indeg[v] + outdeg[v] == 0) || indeg[1..] != outdeg[1..] {
            continue;
        }
        let edges = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| all_edges[i]);
        let d = DiGraph::new(n, edges).expect("subset of valid distinct edges");
        if d.is_strongly_connected() && d.count_tours_capped(2) == 1 {
            found.push(d);
        }
    }
    found.sort_unstable();
    Ok(found)
}

/// The digraph images of all labeled plane trees with vertex 2 below
/// vertex 1, i.e. the uniquely Eulerian digraphs as produced by the tree
/// bijection. Duplicates would indicate a bug; the stream is not deduplicated.
pub fn enumerate_via_trees(n: usize) -> impl Iterator<Item = DiGraph> {
    plane_tree::enumerate_two_under_one(n).map(|t| {
        t.to_digraph()
            .expect("trees with 2 below 1 always map to digraphs")
    })
}

fn serialize_biguint<S: Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

/// Cross-check of the closed-form count against the independent
/// enumeration routes. Legs that are too expensive at the given order are
/// `None`; `agree` covers exactly the computed legs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub n: usize,
    /// `(n-1)! C_n / 2`, serialized as a decimal string.
    #[serde(serialize_with = "serialize_biguint")]
    pub expected: BigUint,
    /// Distinct digraphs found by the exhaustive edge-subset scan (n <= 5).
    pub via_search: Option<usize>,
    /// Distinct digraph images of the tree bijection (n <= 7).
    pub via_trees: Option<usize>,
    /// Valid parenthesis arrangements divided by 2n (n <= 4).
    pub via_parens: Option<usize>,
    pub agree: bool,
}

/// Largest order for which [`cross_check_count`] runs the tree leg.
pub const TREE_LEG_MAX_ORDER: usize = 7;
/// Largest order for which [`cross_check_count`] runs the parenthesis leg.
pub const PARENS_LEG_MAX_ORDER: usize = 4;

/// Computes the closed form and every affordable enumeration leg for `n`,
/// and reports whether they all agree. Requires `n >= 2`.
pub fn cross_check_count(n: usize) -> Result<CountReport> {
    let expected = closed_form_count(n)?;

    let via_search = if n <= EXHAUSTIVE_MAX_ORDER {
        Some(enumerate_exhaustive(n)?.len())
    } else {
        None
    };

    let via_trees = if n <= TREE_LEG_MAX_ORDER {
        let mut images: Vec<DiGraph> = enumerate_via_trees(n).collect();
        images.sort_unstable();
        images.dedup();
        Some(images.len())
    } else {
        None
    };

    let via_parens = if n <= PARENS_LEG_MAX_ORDER {
        let arrangements = parens::enumerate_valid(n).count();
        debug_assert_eq!(arrangements % (2 * n), 0);
        Some(arrangements / (2 * n))
    } else {
        None
    };

    let agree = [via_search, via_trees, via_parens]
        .into_iter()
        .flatten()
        .all(|leg| BigUint::from(leg) == expected);

    Ok(CountReport {
        n,
        expected,
        via_search,
        via_trees,
        via_parens,
        agree,
    })
}
