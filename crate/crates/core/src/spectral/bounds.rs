//! Algebraic connectivity, the path lower bound, degree upper bounds, and
//! multiset inclusion of spectra.

use std::f64::consts::PI;

use serde::Serialize;

use super::eigen::{eigen_sym, Spectrum};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::laplacian::laplacian_of;

/// Second-smallest Laplacian eigenvalue of a loopless graph.
pub fn algebraic_connectivity(g: &Graph, tol: f64) -> Result<f64> {
    if g.vertex_count() < 2 {
        return Err(Error::TooFewVertices {
            n: g.vertex_count(),
            min: 2,
        });
    }
    if !g.is_loopless() {
        return Err(Error::HasSelfLoops);
    }
    let s = eigen_sym(&laplacian_of(g), tol)?;
    Ok(s.eigenvalues()[1])
}

/// `2(1 − cos(π/n))`, the algebraic connectivity of the path on `n`
/// vertices and a lower bound for every connected loopless graph of that
/// order.
pub fn fiedler_lower_bound(n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::TooFewVertices { n, min: 2 });
    }
    Ok(2.0 * (1.0 - (PI / n as f64).cos()))
}

/// Upper bound on the largest Laplacian eigenvalue: `2 d(G°) + 1` when the
/// graph has a self-loop, `2 d(G)` otherwise.
pub fn degree_upper_bound(g: &Graph) -> f64 {
    if g.is_loopless() {
        2.0 * g.max_degree() as f64
    } else {
        2.0 * g.strip_self_loops().max_degree() as f64 + 1.0
    }
}

/// Result of matching one spectrum into another.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SubsetWitness {
    /// `(index in source, index in target)` for each matched eigenvalue.
    pub matching: Vec<(usize, usize)>,
    /// Largest `|a_i − b_j|` over matched pairs.
    pub max_error: f64,
    /// First source index that could not be matched, if any.
    pub unmatched: Option<usize>,
}

impl SubsetWitness {
    pub fn holds(&self) -> bool {
        self.unmatched.is_none()
    }
}

/// Multiset inclusion of sorted eigenvalue lists within `match_tol`.
///
/// Each target eigenvalue is used at most once, so a repeated source value
/// needs equally many targets. Greedy two-pointer matching over ascending
/// lists; it finds a full matching whenever one exists.
pub fn subset_sorted(a: &[f64], b: &[f64], match_tol: f64) -> SubsetWitness {
    let mut matching = Vec::with_capacity(a.len());
    let mut max_error = 0.0f64;
    let mut j = 0;
    for (i, &x) in a.iter().enumerate() {
        while j < b.len() && b[j] < x - match_tol {
            j += 1;
        }
        if j < b.len() && (b[j] - x).abs() <= match_tol {
            max_error = max_error.max((b[j] - x).abs());
            matching.push((i, j));
            j += 1;
        } else {
            return SubsetWitness {
                matching,
                max_error,
                unmatched: Some(i),
            };
        }
    }
    SubsetWitness {
        matching,
        max_error,
        unmatched: None,
    }
}

pub fn spectrum_subset(a: &Spectrum, b: &Spectrum, match_tol: f64) -> SubsetWitness {
    subset_sorted(a.eigenvalues(), b.eigenvalues(), match_tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i, i + 1))).unwrap()
    }

    #[test]
    fn connectivity_examples() {
        assert!((algebraic_connectivity(&path(2), 1e-12).unwrap() - 2.0).abs() < 1e-12);
        let p5 = algebraic_connectivity(&path(5), 1e-12).unwrap();
        assert!((p5 - 0.381966011250105).abs() < 1e-12);
        let split = Graph::from_edges(3, [(1, 2)]).unwrap();
        assert!(algebraic_connectivity(&split, 1e-12).unwrap().abs() < 1e-12);

        assert!(matches!(
            algebraic_connectivity(&Graph::new(1).unwrap(), 1e-12),
            Err(Error::TooFewVertices { n: 1, min: 2 })
        ));
        let looped = Graph::from_edges(2, [(1, 1), (1, 2)]).unwrap();
        assert!(matches!(
            algebraic_connectivity(&looped, 1e-12),
            Err(Error::HasSelfLoops)
        ));
    }

    #[test]
    fn fiedler_bound_values() {
        assert!((fiedler_lower_bound(2).unwrap() - 2.0).abs() < 1e-15);
        assert!((fiedler_lower_bound(4).unwrap() - (2.0 - 2f64.sqrt())).abs() < 1e-15);
        // equals a(P5)
        assert!((fiedler_lower_bound(5).unwrap() - 0.381966011250105).abs() < 1e-14);
        assert!(fiedler_lower_bound(1).is_err());
        assert!(fiedler_lower_bound(0).is_err());
    }

    #[test]
    fn degree_bounds() {
        let g = Graph::from_edges(2, [(1, 1), (1, 2)]).unwrap();
        assert_eq!(degree_upper_bound(&g), 3.0);
        let c4 = Graph::from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        assert_eq!(degree_upper_bound(&c4), 4.0);
        let k1 = Graph::from_edges(1, [(1, 1)]).unwrap();
        assert_eq!(degree_upper_bound(&k1), 1.0);
    }

    #[test]
    fn subset_examples() {
        assert!(subset_sorted(&[1.0], &[0.0, 1.0, 3.0], 1e-8).holds());

        let a = [0.381966011250105, 2.618033988749895];
        let b = [
            0.0,
            0.381966011250105,
            1.381966011250105,
            2.618033988749895,
            3.618033988749895,
        ];
        let w = subset_sorted(&a, &b, 1e-8);
        assert!(w.holds());
        assert_eq!(w.matching, vec![(0, 1), (1, 3)]);

        let w = subset_sorted(&[0.5], &[0.0, 1.0], 1e-8);
        assert_eq!(w.unmatched, Some(0));
    }

    #[test]
    fn subset_respects_multiplicity() {
        assert!(!subset_sorted(&[1.0, 1.0], &[0.0, 1.0, 2.0], 1e-8).holds());
        assert!(subset_sorted(&[1.0, 1.0], &[1.0, 1.0 + 1e-9], 1e-8).holds());
        assert!(subset_sorted(&[], &[], 1e-8).holds());
    }
}
