//! The lifted graph: a loopless graph on `2N + 1` vertices that carries the
//! Laplacian spectrum of a graph with self-loops.
//!
//! Vertex `i` of the base graph appears as `i` and `i + N + 1`; vertex
//! `N + 1` is the middle vertex. A non-loop edge `(i, j)` is copied to
//! `(i, j)` and `(i + N + 1, j + N + 1)`. A loop `(i, i)` becomes the two
//! spokes `(i, N + 1)` and `(N + 1, i + N + 1)`.

use crate::graph::{Edge, Graph};
use crate::laplacian::{incidence_matrix, IncidenceMatrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedGraph {
    base: Graph,
    lifted: Graph,
    order: Vec<Edge>,
}

impl LiftedGraph {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn lifted(&self) -> &Graph {
        &self.lifted
    }

    /// Index of the middle vertex, `N + 1`.
    pub fn middle(&self) -> usize {
        self.base.vertex_count() + 1
    }

    /// Image of base vertex `i` in the mirrored copy.
    pub fn mirror(&self, i: usize) -> usize {
        i + self.base.vertex_count() + 1
    }

    /// Lifted edges in construction order: the original copy of `G°`, then
    /// the shifted copy, then the spokes of each loop in loop order.
    pub fn edges_in_lift_order(&self) -> &[Edge] {
        &self.order
    }

    /// The involution swapping `i` and `i + N + 1` and fixing the middle.
    pub fn swap_copies(&self, v: usize) -> usize {
        let n = self.base.vertex_count();
        match v {
            v if v <= n => v + n + 1,
            v if v == n + 1 => v,
            v => v - n - 1,
        }
    }

    /// `(E°, S)`: incidence rows of the base graph's non-loop edges and its
    /// loops. Stacking `[E°; S]` reproduces `incidence_matrix(base)` up to
    /// row order.
    pub fn incidence_blocks(&self) -> (IncidenceMatrix, IncidenceMatrix) {
        let stripped = incidence_matrix(&self.base.strip_self_loops());
        let n = self.base.vertex_count();
        let s_rows: Vec<Vec<i8>> = self
            .base
            .loop_vertices()
            .map(|v| {
                let mut row = vec![0i8; n];
                row[v - 1] = 1;
                row
            })
            .collect();
        let s = IncidenceMatrix::from_rows(n, &s_rows).expect("rows sized to n");
        (stripped, s)
    }

    /// Incidence matrix of the lifted graph assembled from the blocks:
    ///
    /// ```text
    /// [ E°   0   0  ]
    /// [ S   −1   0  ]
    /// [ 0   +1  −S  ]
    /// [ 0    0   E° ]
    /// ```
    ///
    /// Signs follow the `+1` at the smaller endpoint convention, so each
    /// row matches the corresponding row of `incidence_matrix(lifted)`.
    pub fn block_incidence(&self) -> IncidenceMatrix {
        let (e0, s) = self.incidence_blocks();
        let n = self.base.vertex_count();
        let cols = 2 * n + 1;
        let mut rows = Vec::with_capacity(2 * e0.rows() + 2 * s.rows());
        for r in e0.row_iter() {
            let mut row = vec![0i8; cols];
            row[..n].copy_from_slice(r);
            rows.push(row);
        }
        for r in s.row_iter() {
            let mut row = vec![0i8; cols];
            row[..n].copy_from_slice(r);
            row[n] = -1;
            rows.push(row);
        }
        for r in s.row_iter() {
            let mut row = vec![0i8; cols];
            row[n] = 1;
            for (c, &x) in r.iter().enumerate() {
                row[n + 1 + c] = -x;
            }
            rows.push(row);
        }
        for r in e0.row_iter() {
            let mut row = vec![0i8; cols];
            row[n + 1..].copy_from_slice(r);
            rows.push(row);
        }
        IncidenceMatrix::from_rows(cols, &rows).expect("rows sized to 2N + 1")
    }
}

pub fn lift(g: &Graph) -> LiftedGraph {
    let n = g.vertex_count();
    let mid = n + 1;
    let mut order = Vec::with_capacity(2 * g.edge_count());
    order.extend(g.non_loop_edges());
    order.extend(
        g.non_loop_edges()
            .map(|e| Edge::new(e.lo + mid, e.hi + mid)),
    );
    for v in g.loop_vertices() {
        order.push(Edge::new(v, mid));
        order.push(Edge::new(mid, v + mid));
    }
    let lifted = Graph::from_edges(2 * n + 1, order.iter().map(|e| (e.lo, e.hi)))
        .expect("lifted edges are distinct and in range");
    LiftedGraph {
        base: g.clone(),
        lifted,
        order,
    }
}
