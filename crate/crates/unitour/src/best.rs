//! Tour counting via the BEST theorem (de Bruijn, van Aardenne-Ehrenfest,
//! Smith, Tutte): for a connected balanced digraph, the number of Eulerian
//! tours starting with an edge `e` equals the number of spanning
//! arborescences rooted at `init(e)` times `prod_u (outdeg(u) - 1)!`.
//!
//! Arborescences are counted exactly by the directed Matrix-Tree theorem:
//! the determinant of the Laplacian with the root's row and column removed,
//! computed with fraction-free Bareiss elimination over arbitrary-precision
//! integers. No floating point is involved anywhere.

use num_bigint::{BigInt, BigUint, Sign};

use crate::digraph::{DiGraph, Edge, Vertex};
use crate::{Error, Result};

/// The out-degree Laplacian of a digraph, with loops removed: entry `(v, v)`
/// is the number of non-loop edges leaving `v` and entry `(u, v)`, `u != v`,
/// is minus the number of edges from `u` to `v`. Every row sums to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Laplacian {
    n: usize,
    entries: Vec<BigInt>,
}

impl Laplacian {
    pub fn of(d: &DiGraph) -> Self {
        let n = d.order();
        let mut entries = vec![BigInt::ZERO; n * n];
        for e in d.edges() {
            if e.is_loop() {
                continue;
            }
            entries[(e.init - 1) * n + (e.init - 1)] += 1;
            entries[(e.init - 1) * n + (e.fin - 1)] -= 1;
        }
        Laplacian { n, entries }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Entry in row `u`, column `v` (vertices are 1-based).
    pub fn entry(&self, u: Vertex, v: Vertex) -> &BigInt {
        &self.entries[(u - 1) * self.n + (v - 1)]
    }

    /// Determinant of the matrix with row and column `root` deleted.
    fn minor_determinant(&self, root: Vertex) -> BigInt {
        let m = self.n - 1;
        let keep: Vec<usize> = (0..self.n).filter(|&i| i + 1 != root).collect();
        let mut a: Vec<BigInt> = Vec::with_capacity(m * m);
        for &i in &keep {
            for &j in &keep {
                a.push(self.entries[i * self.n + j].clone());
            }
        }
        bareiss_determinant(a, m)
    }
}

/// Fraction-free Bareiss elimination on a row-major `m x m` integer matrix.
/// Every intermediate value is an exact integer; every division is exact.
fn bareiss_determinant(mut a: Vec<BigInt>, m: usize) -> BigInt {
    if m == 0 {
        return BigInt::from(1);
    }
    let mut sign = 1i8;
    let mut prev = BigInt::from(1);
    for k in 0..m - 1 {
        if a[k * m + k] == BigInt::ZERO {
            let Some(pivot) = (k + 1..m).find(|&r| a[r * m + k] != BigInt::ZERO) else {
                return BigInt::ZERO;
            };
            for j in 0..m {
                a.swap(k * m + j, pivot * m + j);
            }
            sign = -sign;
        }
        for i in k + 1..m {
            for j in k + 1..m {
                let num = &a[i * m + j] * &a[k * m + k] - &a[i * m + k] * &a[k * m + j];
                a[i * m + j] = num / &prev;
            }
            a[i * m + k] = BigInt::ZERO;
        }
        prev = a[k * m + k].clone();
    }
    let det = a[(m - 1) * m + (m - 1)].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Number of spanning arborescences of `d` rooted at `root`: spanning
/// subgraphs with a unique directed path from every vertex to `root`.
///
/// Computed as the `root` minor determinant of the Laplacian. Returns 0 when
/// no arborescence exists. `root` must lie in `1..=n`.
pub fn spanning_arborescence_count(d: &DiGraph, root: Vertex) -> BigUint {
    assert!(
        (1..=d.order()).contains(&root),
        "root {root} out of range 1..={}",
        d.order()
    );
    let det = Laplacian::of(d).minor_determinant(root);
    match det.sign() {
        Sign::Minus => unreachable!("Laplacian minor determinants count arborescences"),
        _ => det.magnitude().clone(),
    }
}

/// Number of Eulerian tours of `d` starting with the edge `e`, via the BEST
/// formula. `d` must be balanced and strongly connected, and `e` one of its
/// edges; loops count toward the outdegrees in the factorial product.
pub fn best_tour_count(d: &DiGraph, e: Edge) -> Result<BigUint> {
    if !d.has_edge(e) {
        return Err(Error::MissingEdge {
            init: e.init,
            fin: e.fin,
        });
    }
    let degs = d.degrees();
    for v in 1..=d.order() {
        if degs.indeg(v) != degs.outdeg(v) {
            return Err(Error::NotBalanced {
                vertex: v,
                indeg: degs.indeg(v),
                outdeg: degs.outdeg(v),
            });
        }
    }
    if !d.is_strongly_connected() {
        return Err(Error::NotConnected);
    }
    let mut count = spanning_arborescence_count(d, e.init);
    for v in 1..=d.order() {
        count *= crate::counting::factorial(degs.outdeg(v).saturating_sub(1));
    }
    Ok(count)
}

/// The counting characterization of loopless uniquely Eulerian digraphs:
/// exactly one spanning arborescence into every root, and every outdegree
/// 1 or 2.
///
/// Agrees with [`DiGraph::is_uniquely_eulerian`] on loopless digraphs
/// without isolated vertices.
pub fn satisfies_arborescence_criterion(d: &DiGraph) -> bool {
    let one = BigUint::from(1u8);
    let degs = d.degrees();
    (1..=d.order())
        .all(|v| matches!(degs.outdeg(v), 1 | 2) && spanning_arborescence_count(d, v) == one)
}

/// First reason the arborescence criterion fails, for diagnostics.
pub fn explain_arborescence_criterion(d: &DiGraph) -> Option<Error> {
    let degs = d.degrees();
    for v in 1..=d.order() {
        if !matches!(degs.outdeg(v), 1 | 2) {
            return Some(Error::OutdegreeNotOneOrTwo {
                vertex: v,
                outdeg: degs.outdeg(v),
            });
        }
    }
    for v in 1..=d.order() {
        let count = spanning_arborescence_count(d, v);
        if count != BigUint::from(1u8) {
            return Some(Error::ArborescenceCountNotOne {
                root: v,
                count: usize::try_from(&count).unwrap_or(usize::MAX),
            });
        }
    }
    None
}
