//! Undirected graphs with self-loops and the pseudo-connectedness test.
//!
//! Vertices are numbered `1..=n`. An edge is stored as the ordered pair
//! `(i, j)` with `i <= j`; `i == j` is a self-loop. Multiple edges are
//! rejected, including a second loop at the same vertex.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An undirected edge in canonical form (`lo <= hi`, 1-indexed).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub lo: usize,
    pub hi: usize,
}

impl Edge {
    pub fn new(i: usize, j: usize) -> Self {
        Edge {
            lo: i.min(j),
            hi: i.max(j),
        }
    }

    pub fn is_loop(&self) -> bool {
        self.lo == self.hi
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lo, self.hi)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<Edge>,
}

impl Graph {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        Ok(Graph {
            n,
            edges: BTreeSet::new(),
        })
    }

    /// Builds a graph from a list of `(i, j)` pairs, rejecting duplicates.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n)?;
        for (i, j) in edges {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<()> {
        for v in [i, j] {
            if v == 0 || v > self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
        }
        let e = Edge::new(i, j);
        if !self.edges.insert(e) {
            return Err(Error::DuplicateEdge { i: e.lo, j: e.hi });
        }
        Ok(())
    }

    /// Consuming form of [`Graph::add_edge`].
    pub fn with_edge(mut self, i: usize, j: usize) -> Result<Self> {
        self.add_edge(i, j)?;
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&Edge::new(i, j))
    }

    /// Edges in canonical (lexicographic) order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn non_loop_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges().filter(|e| !e.is_loop())
    }

    /// Vertices carrying a self-loop, ascending.
    pub fn loop_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.edges().filter(Edge::is_loop).map(|e| e.lo)
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.edges.contains(&Edge::new(v, v))
    }

    /// Number of self-loops.
    pub fn loop_count(&self) -> usize {
        self.loop_vertices().count()
    }

    pub fn is_loopless(&self) -> bool {
        self.loop_count() == 0
    }

    /// Same vertex set, self-loops removed.
    pub fn strip_self_loops(&self) -> Graph {
        Graph {
            n: self.n,
            edges: self.non_loop_edges().collect(),
        }
    }

    /// Degree of every vertex (index `v - 1`). A self-loop counts once.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in self.edges() {
            deg[e.lo - 1] += 1;
            if !e.is_loop() {
                deg[e.hi - 1] += 1;
            }
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Neighbour lists over non-loop edges, 0-indexed.
    fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for e in self.non_loop_edges() {
            adj[e.lo - 1].push(e.hi - 1);
            adj[e.hi - 1].push(e.lo - 1);
        }
        adj
    }

    pub fn connected_components(&self) -> ComponentPartition {
        let adj = self.adjacency_lists();
        let mut labels = vec![0usize; self.n];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..self.n {
            if labels[start] != 0 {
                continue;
            }
            count += 1;
            labels[start] = count;
            stack.push(start);
            while let Some(u) = stack.pop() {
                for &w in &adj[u] {
                    if labels[w] == 0 {
                        labels[w] = count;
                        stack.push(w);
                    }
                }
            }
        }
        ComponentPartition { labels, count }
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().count == 1
    }

    /// Every vertex has an incident edge (a loop counts) and every connected
    /// component carries at least one self-loop.
    pub fn is_pseudo_connected(&self) -> bool {
        if self.degrees().contains(&0) {
            return false;
        }
        let parts = self.connected_components();
        let mut looped = vec![false; parts.count];
        for v in self.loop_vertices() {
            looped[parts.label(v) - 1] = true;
        }
        looped.into_iter().all(|b| b)
    }
}

/// Component labels for each vertex, numbered `1..=count` in order of first
/// appearance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    labels: Vec<usize>,
    count: usize,
}

impl ComponentPartition {
    pub fn count(&self) -> usize {
        self.count
    }

    /// Label of the 1-indexed vertex `v`.
    pub fn label(&self, v: usize) -> usize {
        self.labels[v - 1]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Vertex sets of each component, ascending.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.count];
        for (idx, &l) in self.labels.iter().enumerate() {
            out[l - 1].push(idx + 1);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_graph_rejects_zero() {
        assert!(matches!(Graph::new(0), Err(Error::NoVertices)));
        let g = Graph::new(3).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(Graph::new(1).unwrap().connected_components().count(), 1);
    }

    #[test]
    fn add_edge_is_undirected() {
        let mut g = Graph::new(2).unwrap();
        g.add_edge(1, 2).unwrap();
        assert!(g.has_edge(2, 1));
        assert!(matches!(
            g.add_edge(2, 1),
            Err(Error::DuplicateEdge { i: 1, j: 2 })
        ));
        g.add_edge(1, 1).unwrap();
        assert!(g.has_loop(1));
        assert!(matches!(g.add_edge(1, 1), Err(Error::DuplicateEdge { .. })));
        assert!(matches!(
            g.add_edge(0, 1),
            Err(Error::VertexOutOfRange { vertex: 0, n: 2 })
        ));
        assert!(matches!(
            g.add_edge(1, 3),
            Err(Error::VertexOutOfRange { vertex: 3, .. })
        ));
    }

    #[test]
    fn strip_self_loops_cases() {
        let g = Graph::from_edges(2, [(1, 1), (1, 2)]).unwrap();
        let s = g.strip_self_loops();
        assert_eq!(s.edges().collect::<Vec<_>>(), vec![Edge::new(1, 2)]);
        assert_eq!(s.strip_self_loops(), s);

        let single = Graph::from_edges(1, [(1, 1)]).unwrap();
        assert_eq!(single.strip_self_loops().edge_count(), 0);
    }

    #[test]
    fn components() {
        let path = Graph::from_edges(3, [(1, 2), (2, 3)]).unwrap();
        assert_eq!(path.connected_components().count(), 1);

        let split = Graph::from_edges(3, [(1, 2)]).unwrap();
        let parts = split.connected_components();
        assert_eq!(parts.components(), vec![vec![1, 2], vec![3]]);

        let lone = Graph::from_edges(1, [(1, 1)]).unwrap();
        assert_eq!(lone.connected_components().components(), vec![vec![1]]);
    }

    #[test]
    fn pseudo_connectedness() {
        let g = Graph::from_edges(2, [(1, 1), (1, 2)]).unwrap();
        assert!(g.is_pseudo_connected());

        let g = Graph::from_edges(2, [(1, 2)]).unwrap();
        assert!(!g.is_pseudo_connected());

        let g = Graph::from_edges(4, [(1, 1), (3, 4)]).unwrap();
        assert!(!g.is_pseudo_connected());

        // isolated vertex 2 fails the "connected to itself and/or another" clause
        let g = Graph::from_edges(2, [(1, 1)]).unwrap();
        assert!(!g.is_pseudo_connected());

        let g = Graph::from_edges(3, [(1, 1), (2, 2), (3, 3)]).unwrap();
        assert!(g.is_pseudo_connected());
    }

    #[test]
    fn max_degree_counts_loops_once() {
        let star = Graph::from_edges(4, [(1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(star.max_degree(), 3);
        assert_eq!(Graph::new(5).unwrap().max_degree(), 0);
        let g = Graph::from_edges(2, [(1, 1), (1, 2)]).unwrap();
        assert_eq!(g.degrees(), vec![2, 1]);
        assert_eq!(g.max_degree(), 2);
        assert_eq!(g.strip_self_loops().max_degree(), 1);
    }
}
