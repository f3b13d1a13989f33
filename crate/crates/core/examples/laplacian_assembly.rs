// Three ways to build the same Laplacian: EᵀE, D − A, and the sum of
// rank-one edge terms.
//
//     cargo run --example laplacian_assembly

use std::error::Error;

use loopspec::graph::Graph;
use loopspec::laplacian::{degree_adjacency, incidence_matrix, laplacian_of};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g = Graph::from_edges(4, [(1, 1), (1, 2), (2, 3), (3, 4), (4, 4), (1, 4)])?;

    let e = incidence_matrix(&g);
    println!("incidence matrix E ({} x {}):\n{e}", e.rows(), e.cols());

    let gram = e.gram();
    let (d, a) = degree_adjacency(&g);
    let direct = laplacian_of(&g);
    println!("EᵀE =\n{gram}");
    println!("D =\n{d}");
    println!("A =\n{a}");

    if gram != direct || d.sub(&a) != direct {
        return Err("Laplacian assemblies disagree".into());
    }
    let ones = vec![1.0; g.vertex_count()];
    println!(
        "all three agree; 1ᵀ L 1 = {} = number of loops {}",
        direct.quadratic_form(&ones),
        g.loop_count()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
