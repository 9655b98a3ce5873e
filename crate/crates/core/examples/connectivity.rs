//! Exhaustive separation scans with witnesses.
//!
//! ```text
//! cargo run --release --example connectivity
//! ```

use nearreg::constructions::build_m12;
use nearreg::graph::Graph;
use nearreg::matroid::{ConnectivityMode, Matroid};

fn main() -> nearreg::Result<()> {
    let k5 = Matroid::graphic(Graph::complete(5, |u, v| format!("{u}{v}")))?;
    let m12 = build_m12();
    for (name, m) in [("M(K5)", &k5), ("M12", &m12)] {
        for mode in [ConnectivityMode::ThreeConnected, ConnectivityMode::InternallyFourConnected] {
            let r = m.connectivity_scan(mode)?;
            print!("{name} {mode:?}: {:?} (k = {}, {} partitions)", r.verdict, r.k, r.partitions_checked);
            match r.witness {
                Some(s) => println!(" witness {:?} | {:?}", s.side_a, s.side_b),
                None => println!(),
            }
        }
    }
    Ok(())
}
