// Full verification report for a seeded random pseudo-connected graph,
// printed as JSON.
//
//     cargo run --example verify_report

use std::error::Error;

use loopspec::edgelist::write_edge_list;
use loopspec::oracle::{random_graph, Constraint, GeneratorConfig};
use loopspec::spectral::{verify_all, Tolerances};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cfg = GeneratorConfig::new(7, 0.35, 0.25, 11).requiring(Constraint::PseudoConnected);
    let g = random_graph(&cfg)?;
    print!("{}", write_edge_list(&g));

    let report = verify_all(&g, &Tolerances::default())?;
    println!("{}", serde_json::to_string_pretty(&report)?);
    if !report.passed() {
        return Err("verification failed".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
