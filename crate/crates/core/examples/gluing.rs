//! Gluing `M(K5)` onto `M12` along a shared `M(K4)` keeps internal
//! 4-connectivity, while gluing onto `M(K4)` itself breaks the triad
//! hypothesis.
//!
//! ```text
//! cargo run --release --example gluing
//! ```

use nearreg::constructions::{build_a12, build_m12, complete_graph_rep, verify_gluing_instance};
use nearreg::matroid::Matroid;

fn main() -> nearreg::Result<()> {
    let t = build_a12().submatrix(&["a", "b", "c"], &["d", "e", "f"])?;
    let k5 = Matroid::graphic(complete_graph_rep(5, None, Some(&t), "g")?.graph)?;

    let r = verify_gluing_instance(&k5, &build_m12())?;
    println!("M(K5) + M12: hypotheses {}, conclusion {}", r.hypotheses_hold, r.conclusion_holds());
    if let Some(c) = &r.conclusion {
        println!("  {:?} after {} partitions", c.verdict, c.partitions_checked);
    }

    let k4 = k5.restrict(&["a", "b", "c", "d", "e", "f"])?;
    let r = verify_gluing_instance(&k5, &k4)?;
    println!("M(K5) + M(K4): triad condition {}, preserved triad {:?}", r.triad_condition, r.preserved_triad);
    Ok(())
}
