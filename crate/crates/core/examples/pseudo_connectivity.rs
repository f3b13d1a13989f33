// Classifying graphs as pseudo-connected and checking that exactly those
// have positive definite Laplacians.
//
//     cargo run --example pseudo_connectivity

use std::error::Error;

use loopspec::graph::Graph;
use loopspec::laplacian::laplacian_of;
use loopspec::spectral::eigen_sym;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cases: Vec<(&str, Graph)> = vec![
        ("loop + edge", Graph::from_edges(2, [(1, 1), (1, 2)])?),
        ("edge, no loop", Graph::from_edges(2, [(1, 2)])?),
        (
            "looped pair + bare pair",
            Graph::from_edges(4, [(1, 1), (1, 2), (3, 4)])?,
        ),
        ("loop + isolated vertex", Graph::from_edges(2, [(1, 1)])?),
        (
            "two looped components",
            Graph::from_edges(4, [(1, 2), (2, 2), (3, 4), (3, 3)])?,
        ),
    ];
    for (name, g) in &cases {
        let lam_min = eigen_sym(&laplacian_of(g), 1e-12)?.min();
        let parts = g.connected_components();
        println!(
            "{name:<26} components={} loops={} pseudo-connected={:<5} min eigenvalue={lam_min:.6}",
            parts.count(),
            g.loop_count(),
            g.is_pseudo_connected(),
        );
        if g.is_pseudo_connected() && lam_min <= 0.0 {
            return Err(format!("{name}: Laplacian is not positive definite").into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
