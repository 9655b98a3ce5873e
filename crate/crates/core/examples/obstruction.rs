//! Builds the 20-element obstruction for `n = 5` and prints its certificates.
//!
//! ```text
//! cargo run --release --example obstruction
//! ```

use std::time::Instant;

use nearreg::constructions::build_obstruction_with;

fn main() -> nearreg::Result<()> {
    let start = Instant::now();
    let result = build_obstruction_with(5, &|msg| eprintln!("[{:>6.1}s] {msg}", start.elapsed().as_secs_f64()))?;
    let summary = result.summary();
    println!("elements: {}, rank: {}", summary.elements, summary.rank);
    println!("{}", serde_json::to_string_pretty(&summary.certificates).expect("serializable"));
    println!("all certificates passed: {}", summary.all_passed);
    Ok(())
}
