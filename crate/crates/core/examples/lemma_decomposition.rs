// Positive definiteness through the split v = w + ζ1 with wᵀ1 = 0:
// vᵀLv = wᵀL°w + wᵀQw + 2ζ wᵀQ1 + qζ².
//
//     cargo run --example lemma_decomposition

use std::error::Error;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use loopspec::graph::Graph;
use loopspec::laplacian::{laplacian_of, loop_indicator};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // a 6-cycle with one loop
    let g = Graph::from_edges(6, (1..=6).map(|i| (i, i % 6 + 1)).chain([(2, 2)]))?;
    let lap = laplacian_of(&g);
    let stripped = laplacian_of(&g.strip_self_loops());
    let q_mat = loop_indicator(&g);
    let q = g.loop_count() as f64;
    let n = g.vertex_count();
    let ones = vec![1.0; n];

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut smallest = f64::INFINITY;
    for _ in 0..1000 {
        let raw: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let mean = raw.iter().sum::<f64>() / n as f64;
        let w: Vec<f64> = raw.iter().map(|x| x - mean).collect();
        let zeta: f64 = rng.gen_range(-1.0..1.0);
        let mut v: Vec<f64> = w.iter().map(|x| x + zeta).collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        v.iter_mut().for_each(|x| *x /= norm);
        let (w, zeta) = (w.iter().map(|x| x / norm).collect::<Vec<_>>(), zeta / norm);

        let qw = q_mat.mul_vec(&w);
        let cross: f64 = qw.iter().zip(&ones).map(|(a, b)| a * b).sum();
        let split = stripped.quadratic_form(&w)
            + q_mat.quadratic_form(&w)
            + 2.0 * zeta * cross
            + q * zeta * zeta;
        let direct = lap.quadratic_form(&v);
        if (split - direct).abs() > 1e-12 {
            return Err("decomposition identity failed".into());
        }
        smallest = smallest.min(direct);
    }
    println!("smallest vᵀLv over 1000 unit vectors: {smallest:.6}");
    if smallest <= 0.0 {
        return Err("found a non-positive quadratic form".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
