// Cross-checking the Jacobi eigensolver against exact characteristic
// polynomial roots on every labelled graph with three vertices.
//
//     cargo run --example charpoly_oracle

use std::error::Error;

use loopspec::laplacian::laplacian_of;
use loopspec::oracle::{characteristic_polynomial, charpoly_eigenvalues, enumerate_graphs};
use loopspec::spectral::eigen_sym;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let mut worst = 0.0f64;
    for (k, g) in enumerate_graphs(3)?.enumerate() {
        let lap = laplacian_of(&g);
        let jacobi = eigen_sym(&lap, 1e-12)?;
        let exact = charpoly_eigenvalues(&lap, 1e-13)?;
        let diff = jacobi
            .eigenvalues()
            .iter()
            .zip(&exact)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        worst = worst.max(diff);
        if k % 16 == 0 {
            let coeffs: Vec<String> = characteristic_polynomial(&lap)?
                .iter()
                .map(ToString::to_string)
                .collect();
            println!(
                "graph #{k:<2} charpoly coefficients [{}] roots {exact:?}",
                coeffs.join(", ")
            );
        }
    }
    println!("largest disagreement over 64 graphs: {worst:e}");
    if worst > 1e-8 {
        return Err("solver and oracle disagree".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
