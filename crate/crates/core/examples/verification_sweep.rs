// Exhaustive and randomized verification campaigns.
//
//     cargo run --release --example verification_sweep

use std::error::Error;

use loopspec::sweep::{run_sweep, SweepConfig};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let exhaustive = run_sweep(&SweepConfig::exhaustive(3))?;
    println!(
        "exhaustive n <= 3: {} / {} graphs pass",
        exhaustive.passed, exhaustive.total
    );

    let random = run_sweep(&SweepConfig::random(10, 200, 2024))?;
    println!(
        "random n in [2, 10]: {} / {} graphs pass",
        random.passed, random.total
    );
    for f in &random.failures {
        println!("failure: {}", serde_json::to_string(f)?);
    }
    if !exhaustive.all_passed() || !random.all_passed() {
        return Err("sweep reported failures".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
