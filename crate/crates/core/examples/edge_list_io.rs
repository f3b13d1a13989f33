// Reading and writing the edge-list format, and lifting a file.
//
//     cargo run --example edge_list_io

use std::error::Error;

use loopspec::analysis::LiftSummary;
use loopspec::edgelist::{parse_edge_list, write_edge_list};
use loopspec::lifting::lift;

const INPUT: &str = "\
# a triangle with a loop on vertex 3
n 3
1 2
2 3
3 1
3 3
";

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g = parse_edge_list(INPUT)?;
    let canonical = write_edge_list(&g);
    print!("canonical form:\n{canonical}");
    assert_eq!(parse_edge_list(&canonical)?, g);

    let lg = lift(&g);
    print!("lifted:\n{}", write_edge_list(lg.lifted()));
    println!("{}", serde_json::to_string(&LiftSummary::of(&lg))?);

    match parse_edge_list("n 2\n1 x\n") {
        Err(e) => println!("malformed input rejected: {e}"),
        Ok(_) => return Err("malformed input accepted".into()),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
