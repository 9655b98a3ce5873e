//! Searches for a signed graph on six vertices whose frame matroid is `M12`.
//!
//! ```text
//! cargo run --release --example signed_graph_search
//! ```

use nearreg::constructions::{search_m12_signed_graph, SignedSearchOutcome, SIGNED_SEARCH_NODE_BOUND};

fn main() -> nearreg::Result<()> {
    let search = search_m12_signed_graph(SIGNED_SEARCH_NODE_BOUND)?;
    println!("{} candidate row-space vectors, {} search nodes", search.candidate_vectors, search.nodes);
    match &search.outcome {
        SignedSearchOutcome::Found { graph, verified, .. } => {
            for (u, v, label, sign) in &graph.edges {
                let kind = if u == v { "loop" } else if *sign > 0 { "positive" } else { "negative" };
                println!("{label}: {u} -- {v} ({kind})");
            }
            println!("frame matroid equals M12 under the identity map: {verified}");
        }
        SignedSearchOutcome::Exhausted { complete, node_bound } => {
            println!("no signed graph found (search complete: {complete}, node bound {node_bound})");
        }
    }
    Ok(())
}
