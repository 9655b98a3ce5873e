//! Frame matroid of a triangle under two signings: balanced it is a
//! circuit, unbalanced it is independent.
//!
//! ```text
//! cargo run --example signed_graph
//! ```

use nearreg::constructions::{signed_graph_matroid, signed_graph_representation};
use nearreg::graph::{Graph, SignedGraph};

fn main() -> nearreg::Result<()> {
    let vertices = vec!["u".to_string(), "v".into(), "w".into()];
    let g = Graph::new(vertices, &[("u", "v", "x"), ("v", "w", "y"), ("u", "w", "z")])?;
    for signs in [vec![1, 1, 1], vec![1, 1, -1]] {
        let sg = SignedGraph::new(g.clone(), signs.clone())?;
        let a = signed_graph_representation(&sg)?;
        let m = signed_graph_matroid(&sg)?;
        println!("signs {signs:?}: rank {}, {} circuits", m.full_rank(), m.circuits()?.len());
        for (i, row) in a.rows().iter().enumerate() {
            let entries: Vec<String> = a.row_entries(i).iter().map(|e| e.to_string()).collect();
            println!("  {row}: {entries:?} over columns {:?}", a.cols());
        }
    }
    Ok(())
}
