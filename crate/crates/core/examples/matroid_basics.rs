//! Rank oracles, duals and minors on `M(K4)` and `M12`.
//!
//! ```text
//! cargo run --release --example matroid_basics
//! ```

use nearreg::constructions::build_m12;
use nearreg::graph::Graph;
use nearreg::matroid::Matroid;

fn main() -> nearreg::Result<()> {
    let k4 = Matroid::graphic(Graph::complete(4, |u, v| format!("{u}{v}")))?;
    println!("M(K4): {} elements, rank {}", k4.size(), k4.full_rank());
    let show = |sets: Vec<_>| sets.into_iter().map(|s| k4.names(s).join(" ")).collect::<Vec<_>>();
    println!("  triangles {:?}", show(k4.triangles()?));
    println!("  triads    {:?}", show(k4.triads()?));

    let m = build_m12();
    let d = m.dual();
    println!("M12: rank {}, dual rank {}", m.full_rank(), d.full_rank());
    println!("  self-dual up to relabeling: {}", nearreg::matroid::is_isomorphic(&m, &d)?.is_some());
    println!("  r({{a, d, 1}}) = {}", m.rank_of(&["a", "d", "1"])?);

    let del = m.delete(&["1", "2", "3", "4", "5", "6"])?;
    let con = m.contract(&["a", "b", "c", "d", "e", "f"])?;
    println!("  M12 \\ digits: rank {}, {} triangles", del.full_rank(), del.triangles()?.len());
    println!("  M12 / letters: rank {}, {} triangles", con.full_rank(), con.triangles()?.len());
    println!("  bases: {}, circuits: {}", m.bases()?.len(), m.circuits()?.len());
    Ok(())
}
