//! Modular flats of `M(K5)` under three equivalent tests, and the column
//! parallelism property of a representation.
//!
//! ```text
//! cargo run --release --example modular_flats
//! ```

use nearreg::constructions::{build_a12, complete_graph_rep};
use nearreg::gpc::{column_parallelism_check, modularity_certificate};
use nearreg::matroid::Matroid;

fn main() -> nearreg::Result<()> {
    let t = build_a12().submatrix(&["a", "b", "c"], &["d", "e", "f"])?;
    let rep = complete_graph_rep(5, None, Some(&t), "g")?;
    let k5 = Matroid::graphic(rep.graph.clone())?;
    println!("K5 edges: {:?}", k5.ground());

    for flat in [&["a", "b", "c", "d", "e", "f"][..], &["a", "b"][..], &["a", "g04"][..]] {
        let c = modularity_certificate(&k5, k5.set(flat)?)?;
        println!(
            "{flat:?}: definition {}, short circuits {} / {}, witness {:?}",
            c.verdict_definition, c.verdict_short_circuit2, c.verdict_short_circuit3, c.witness
        );
    }

    let x = ["a", "b", "c", "d", "e", "f"];
    let basis: Vec<&str> = rep.matrix.rows().iter().map(String::as_str).collect();
    let report = column_parallelism_check(&rep.matrix, &x, &["a", "b", "c"], &basis)?;
    println!("column parallelism holds: {}", report.holds);
    for c in &report.columns {
        println!("  {}: {:?}", c.column, c.kind);
    }
    Ok(())
}
