use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_ENUMERATION_N: usize = 5;

/// `2^(n(n+1)/2)`: labelled graphs on `n` vertices with optional loops.
pub fn graph_count(n: usize) -> u64 {
    1u64 << (n * (n + 1) / 2)
}

/// Every labelled graph on `n` vertices, loops allowed. Graph `k` contains
/// the `b`-th vertex pair (pairs `(i, j)`, `i <= j`, in lexicographic order)
/// iff bit `b` of `k` is set.
#[derive(Debug, Clone)]
pub struct GraphEnumerator {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    total: u64,
}

impl GraphEnumerator {
    pub fn graph_at(&self, index: u64) -> Graph {
        let edges = self
            .pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| index >> b & 1 == 1)
            .map(|(_, &p)| p);
        Graph::from_edges(self.n, edges).expect("pairs are distinct and in range")
    }

    pub fn total(&self) -> u64 {
        self.total
    }
}

impl Iterator for GraphEnumerator {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next == self.total {
            return None;
        }
        let g = self.graph_at(self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for GraphEnumerator {}

pub fn enumerate_graphs(n: usize) -> Result<GraphEnumerator> {
    if n == 0 {
        return Err(Error::NoVertices);
    }
    if n > MAX_ENUMERATION_N {
        return Err(Error::EnumerationTooLarge {
            n,
            max: MAX_ENUMERATION_N,
        });
    }
    let pairs = (1..=n).flat_map(|i| (i..=n).map(move |j| (i, j))).collect();
    Ok(GraphEnumerator {
        n,
        pairs,
        next: 0,
        total: graph_count(n),
    })
}
