//! Independent ground truth: seeded random graphs, exhaustive enumeration
//! of small labelled graphs, and exact characteristic polynomials.
//!
//! Nothing here calls into the Jacobi solver.

mod charpoly;
mod enumerate;
mod generate;

pub use charpoly::{characteristic_polynomial, charpoly_eigenvalues, MAX_CHARPOLY_ORDER};
pub use enumerate::{enumerate_graphs, graph_count, GraphEnumerator, MAX_ENUMERATION_N};
pub use generate::{random_graph, Constraint, GeneratorConfig, RETRY_CAP};
