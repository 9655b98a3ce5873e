//! Randomized checks of pivot, determinant, minor and homomorphism laws on
//! near-regular P-matrices drawn from a seeded generator.
//!
//! ```text
//! cargo run --release --example laws -- 7 500
//! ```

use nearreg::verify::verify_laws;

fn main() -> nearreg::Result<()> {
    let mut args = std::env::args().skip(1);
    let seed = args.next().map_or(Ok(1), |s| s.parse()).expect("seed is an integer");
    let trials = args.next().map_or(Ok(200), |s| s.parse()).expect("trials is an integer");
    print!("{}", verify_laws(seed, trials)?.to_text(true));
    Ok(())
}
