//! Automorphism group of `M12` and an explicit isomorphism to its dual.
//!
//! ```text
//! cargo run --release --example isomorphism
//! ```

use nearreg::constructions::build_m12;
use nearreg::matroid::{automorphisms, is_isomorphic, verify_isomorphism};

fn main() -> nearreg::Result<()> {
    let m = build_m12();
    let group = automorphisms(&m)?;
    println!("|Aut(M12)| = {}", group.len());
    for g in &group {
        println!("  {}", g.cycle_notation());
    }
    let d = m.dual();
    if let Some(w) = is_isomorphic(&m, &d)? {
        println!("M12 -> M12*: {}", w.cycle_notation());
        println!("verified: {}", verify_isomorphism(&m, &d, &w)?);
    }
    Ok(())
}
