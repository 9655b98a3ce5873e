//! Structural checklist for `M12` with one line per check.
//!
//! ```text
//! cargo run --release --example m12_checklist
//! ```

use nearreg::verify::verify_m12;

fn main() {
    let report = verify_m12(None);
    print!("{}", report.to_text(true));
}
