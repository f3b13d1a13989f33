// Graphs on which the spectral bounds are attained: paths for the
// algebraic connectivity lower bound, even cycles for 2d(G), and a single
// looped vertex for 2d(G°) + 1.
//
//     cargo run --example bound_tightness

use std::error::Error;

use loopspec::graph::Graph;
use loopspec::laplacian::laplacian_of;
use loopspec::spectral::{
    algebraic_connectivity, degree_upper_bound, eigen_sym, fiedler_lower_bound,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    println!("{:>3} {:>14} {:>14}", "N", "a(P_N)", "2(1-cos(pi/N))");
    for n in 2..=12 {
        let path = Graph::from_edges(n, (1..n).map(|i| (i, i + 1)))?;
        let a = algebraic_connectivity(&path, 1e-12)?;
        let bound = fiedler_lower_bound(n)?;
        println!("{n:>3} {a:>14.10} {bound:>14.10}");
        if (a - bound).abs() > 1e-8 {
            return Err(format!("P_{n} misses the bound").into());
        }
    }

    for n in [4, 6, 8] {
        let cycle = Graph::from_edges(n, (1..=n).map(|i| (i, i % n + 1)))?;
        let top = eigen_sym(&laplacian_of(&cycle), 1e-12)?.max();
        println!(
            "C_{n}: max eigenvalue {top:.10}, 2d = {}",
            degree_upper_bound(&cycle)
        );
    }

    let k1 = Graph::from_edges(1, [(1, 1)])?;
    let top = eigen_sym(&laplacian_of(&k1), 1e-12)?.max();
    println!(
        "looped K_1: max eigenvalue {top}, 2d(G°) + 1 = {}",
        degree_upper_bound(&k1)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
