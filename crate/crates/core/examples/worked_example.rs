// A single vertex loop plus one edge: L(G), its spectrum, the lifted
// 5-path, and the spectrum inclusion.
//
//     cargo run --example worked_example

use std::error::Error;

use loopspec::graph::Graph;
use loopspec::laplacian::laplacian_of;
use loopspec::lifting::lift;
use loopspec::spectral::{degree_upper_bound, eigen_sym, spectrum_subset};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g = Graph::from_edges(2, [(1, 1), (1, 2)])?;
    let lap = laplacian_of(&g);
    println!("L(G) =\n{lap}");

    let spectrum = eigen_sym(&lap, 1e-12)?;
    println!("σ(L(G)) = {:?}", spectrum.eigenvalues());

    let lg = lift(&g);
    println!(
        "lifted graph: {} vertices, edges {:?}",
        lg.lifted().vertex_count(),
        lg.lifted()
            .edges()
            .map(|e| (e.lo, e.hi))
            .collect::<Vec<_>>()
    );
    let lifted = eigen_sym(&laplacian_of(lg.lifted()), 1e-12)?;
    println!("σ(L(Ĝ)) = {:?}", lifted.eigenvalues());

    let witness = spectrum_subset(&spectrum, &lifted, 1e-8);
    println!(
        "inclusion holds: {} (matching {:?}, max error {:e})",
        witness.holds(),
        witness.matching,
        witness.max_error
    );
    println!(
        "largest eigenvalue {:.9} <= 2 d(G°) + 1 = {}",
        spectrum.max(),
        degree_upper_bound(&g)
    );
    if !witness.holds() || spectrum.max() > degree_upper_bound(&g) {
        return Err("inclusion failed".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
