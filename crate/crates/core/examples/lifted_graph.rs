// Lifting a graph with loops and checking that every eigenvector v of
// L(G) gives the eigenvector [v; 0; −v] of L(Ĝ).
//
//     cargo run --example lifted_graph

use std::error::Error;

use loopspec::graph::Graph;
use loopspec::laplacian::laplacian_of;
use loopspec::lifting::lift;
use loopspec::spectral::{eigen_sym, lift_eigvec_residual};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g = Graph::from_edges(4, [(1, 1), (1, 2), (2, 3), (3, 4), (3, 3)])?;
    let lg = lift(&g);
    println!(
        "base: N = {}, q = {}; lifted: {} vertices, {} edges, middle vertex {}",
        g.vertex_count(),
        g.loop_count(),
        lg.lifted().vertex_count(),
        lg.lifted().edge_count(),
        lg.middle()
    );
    for e in lg.edges_in_lift_order() {
        print!("{e} ");
    }
    println!();

    let (e0, s) = lg.incidence_blocks();
    println!("E° =\n{e0}S =\n{s}");

    let lifted_lap = laplacian_of(lg.lifted());
    let m = lg.middle() - 1;
    println!(
        "middle diagonal entry of L(Ĝ) = {} (2q = {})",
        lifted_lap.get(m, m),
        2 * g.loop_count()
    );

    let base = eigen_sym(&laplacian_of(&g), 1e-12)?;
    let residual = lift_eigvec_residual(&base, &lifted_lap);
    println!("max ‖L(Ĝ)x − λx‖ over x = [v; 0; −v]/√2: {residual:e}");
    if residual > 1e-10 {
        return Err("lifted eigenvector identity failed".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
