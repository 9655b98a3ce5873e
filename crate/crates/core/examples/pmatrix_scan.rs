//! Exhaustive P-matrix scan of `A12`, then of a copy with one corrupted
//! entry, printing the failing submatrix.
//!
//! ```text
//! cargo run --release --example pmatrix_scan
//! ```

use nearreg::arith::parse_element;
use nearreg::constructions::build_a12;

fn main() -> nearreg::Result<()> {
    let a = build_a12();
    let cert = a.is_p_matrix();
    println!("A12: verdict {}, {} square submatrices", cert.verdict, cert.checked_count);

    let bad = a.with_entry("c", "6", parse_element("a")?)?;
    let cert = bad.is_p_matrix();
    println!("corrupted: verdict {}, {} submatrices checked", cert.verdict, cert.checked_count);
    if let Some(w) = cert.witness {
        println!("  rows {:?} cols {:?} det {}", w.rows, w.cols, w.determinant);
    }
    Ok(())
}
