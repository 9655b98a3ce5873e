//! Glues `M(K5)` and `M12` along `M(K4)` by block assembly and compares the
//! result with the independent flats-based rank oracle.
//!
//! ```text
//! cargo run --release --example gpc_assemble
//! ```

use std::path::Path;

use nearreg::gpc::{gpc_assemble, gpc_oracle, GpcLayout};
use nearreg::matroid::Matroid;
use nearreg::verify::load_matrix;

fn main() -> nearreg::Result<()> {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let layout = GpcLayout::load(&data.join("k5_m12_layout.json"))?;
    let a = gpc_assemble(&layout)?;
    println!("assembled {}×{} matrix, P-matrix: {}", a.nrows(), a.ncols(), a.is_p_matrix().verdict);

    let m1 = Matroid::linear(load_matrix(&data.join("k5_block.json"))?)?;
    let m2 = Matroid::linear(load_matrix(&data.join("a12.json"))?)?;
    let oracle = gpc_oracle(&m1, &m2)?;
    let glued = Matroid::linear(a)?;
    println!("rank {}, oracle rank {}", glued.full_rank(), oracle.full_rank());
    println!("matrix and oracle agree on every subset: {}", glued.same_matroid(&oracle)?);
    Ok(())
}
