//! Laplacians of undirected graphs with self-loops.
//!
//! A self-loop at vertex `i` adds `e_i e_iᵀ` to the Laplacian. A graph is
//! *pseudo-connected* when every vertex has an incident edge and every
//! connected component carries a loop; its Laplacian is then positive
//! definite. The *lifted* graph on `2N + 1` vertices replaces each loop by
//! two spokes through a middle vertex and contains the whole spectrum of
//! `L(G)` inside `[0, 2 d(G°) + 1]`.
//!
//! ```
//! use loopspec::{graph::Graph, lifting::lift, spectral::{verify_all, Tolerances}};
//!
//! let g = Graph::from_edges(2, [(1, 1), (1, 2)]).unwrap();
//! assert!(g.is_pseudo_connected());
//! assert_eq!(lift(&g).lifted().vertex_count(), 5);
//! assert!(verify_all(&g, &Tolerances::default()).unwrap().passed());
//! ```

pub mod analysis;
pub mod edgelist;
pub mod error;
pub mod format;
pub mod graph;
pub mod laplacian;
pub mod lifting;
pub mod oracle;
pub mod spectral;
pub mod sweep;

pub use error::{Error, Result};
pub use graph::{ComponentPartition, Edge, Graph};
pub use laplacian::{IncidenceMatrix, SymmetricMatrix};
pub use lifting::{lift, LiftedGraph};
pub use spectral::{Spectrum, Tolerances, VerificationReport};

/// Environment variable overriding the default relative match tolerance.
pub const TOLERANCE_ENV: &str = "LOOPSPEC_TOL";
