//! Incidence matrices and Laplacians.
//!
//! Three assemblies are provided and must agree exactly for every graph:
//! the Gram matrix `EᵀE` of the incidence matrix, the degree/adjacency
//! difference `D − A`, and the direct sum of rank-one terms
//! `Σ (e_i − e_j)(e_i − e_j)ᵀ + Σ e_i e_iᵀ` over non-loop edges and loops.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::fmt_sig;
use crate::graph::Graph;

/// Signed edge-by-vertex matrix with entries in {−1, 0, +1}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IncidenceMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i8>,
}

impl IncidenceMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IncidenceMatrix {
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn from_rows(cols: usize, rows: &[Vec<i8>]) -> Result<Self> {
        let mut m = IncidenceMatrix::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Ragged);
            }
            m.entries[r * cols..(r + 1) * cols].copy_from_slice(row);
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i8 {
        self.entries[r * self.cols + c]
    }

    fn set(&mut self, r: usize, c: usize, v: i8) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[i8] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[i8]> + '_ {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn to_rows(&self) -> Vec<Vec<i8>> {
        self.row_iter().map(<[i8]>::to_vec).collect()
    }

    /// `EᵀE`, accumulated in integers.
    pub fn gram(&self) -> SymmetricMatrix {
        let mut acc = vec![0i64; self.cols * self.cols];
        for row in self.row_iter() {
            let nz: Vec<(usize, i64)> = row
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(c, &x)| (c, i64::from(x)))
                .collect();
            for &(a, xa) in &nz {
                for &(b, xb) in &nz {
                    acc[a * self.cols + b] += xa * xb;
                }
            }
        }
        SymmetricMatrix {
            dim: self.cols,
            data: acc.into_iter().map(|x| x as f64).collect(),
        }
    }
}

impl fmt::Display for IncidenceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.row_iter() {
            let line: Vec<String> = row.iter().map(i8::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Dense real symmetric matrix, row-major. Symmetry is exact.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zeros(dim: usize) -> Self {
        SymmetricMatrix {
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = SymmetricMatrix::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = 1.0;
        }
        m
    }

    /// Rejects ragged or non-symmetric input (exact comparison).
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Ragged);
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, other) in rows.iter().enumerate().skip(i + 1) {
                if row[j] != other[i] {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(SymmetricMatrix {
            dim,
            data: rows.concat(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    /// Adds `v` at `(i, j)` and, off the diagonal, at `(j, i)`.
    pub fn add_symmetric(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.dim + j] += v;
        if i != j {
            self.data[j * self.dim + i] += v;
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.data
            .chunks(self.dim.max(1))
            .map(<[f64]>::to_vec)
            .collect()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(v.len(), self.dim, "dimension mismatch");
        self.data
            .chunks(self.dim.max(1))
            .take(self.dim)
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `vᵀ M v`.
    pub fn quadratic_form(&self, v: &[f64]) -> f64 {
        self.mul_vec(v).iter().zip(v).map(|(a, b)| a * b).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn sub(&self, other: &SymmetricMatrix) -> SymmetricMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        SymmetricMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| i == j || self.get(i, j) == 0.0))
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.fract() == 0.0)
    }

    /// Text dump: one row per line, entries separated by single spaces.
    /// Integer entries print without a decimal point.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for row in self.data.chunks(self.dim.max(1)).take(self.dim) {
            let cells: Vec<String> = row
                .iter()
                .map(|&x| {
                    if x.fract() == 0.0 && x.abs() < 1e15 {
                        format!("{}", x as i64)
                    } else {
                        fmt_sig(x)
                    }
                })
                .collect();
            writeln!(out, "{}", cells.join(" ")).unwrap();
        }
        out
    }
}

impl fmt::Display for SymmetricMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.dump())
    }
}

/// Degree and adjacency matrices of a graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DegreeAdjacency {
    pub degree: Vec<Vec<f64>>,
    pub adjacency: Vec<Vec<f64>>,
}

/// One row per edge in canonical order. A non-loop edge `(p, q)`, `p < q`,
/// has `+1` at `p` and `−1` at `q`; a loop at `p` has a single `+1`.
pub fn incidence_matrix(g: &Graph) -> IncidenceMatrix {
    let mut m = IncidenceMatrix::zeros(g.edge_count(), g.vertex_count());
    for (r, e) in g.edges().enumerate() {
        m.set(r, e.lo - 1, 1);
        if !e.is_loop() {
            m.set(r, e.hi - 1, -1);
        }
    }
    m
}

/// `L(G) = Σ (e_i − e_j)(e_i − e_j)ᵀ + Σ_loops e_i e_iᵀ`.
pub fn laplacian_of(g: &Graph) -> SymmetricMatrix {
    let mut l = SymmetricMatrix::zeros(g.vertex_count());
    for e in g.edges() {
        let (i, j) = (e.lo - 1, e.hi - 1);
        l.add_symmetric(i, i, 1.0);
        if !e.is_loop() {
            l.add_symmetric(j, j, 1.0);
            l.add_symmetric(i, j, -1.0);
        }
    }
    l
}

/// `(D, A)` with `D − A = EᵀE`. A loop adds 1 to its vertex's degree and
/// leaves the adjacency diagonal at 0.
pub fn degree_adjacency(g: &Graph) -> (SymmetricMatrix, SymmetricMatrix) {
    let n = g.vertex_count();
    let mut d = SymmetricMatrix::zeros(n);
    for (i, deg) in g.degrees().into_iter().enumerate() {
        d.add_symmetric(i, i, deg as f64);
    }
    let mut a = SymmetricMatrix::zeros(n);
    for e in g.non_loop_edges() {
        a.add_symmetric(e.lo - 1, e.hi - 1, 1.0);
    }
    (d, a)
}

/// `Σ_loops e_i e_iᵀ`, the diagonal loop indicator.
pub fn loop_indicator(g: &Graph) -> SymmetricMatrix {
    let mut q = SymmetricMatrix::zeros(g.vertex_count());
    for v in g.loop_vertices() {
        q.add_symmetric(v - 1, v - 1, 1.0);
    }
    q
}
