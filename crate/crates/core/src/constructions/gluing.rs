//! Gluing an internally 4-connected matroid to `M(K_n)` along a `K4`.
//!
//! When no triad of the shared `M(K4)` is a triad of the second matroid,
//! the generalized parallel connection is internally 4-connected. This
//! module checks the hypotheses and the conclusion on a concrete instance.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gpc::gpc_oracle;
use crate::graph::Graph;
use crate::matroid::{is_isomorphic, ConnectivityMode, Matroid, Provenance, SeparationReport, SeparationVerdict};

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GluingReport {
    pub shared: Vec<String>,
    pub shared_is_k4: bool,
    pub restrictions_agree: bool,
    pub second_internally_4_connected: bool,
    pub triad_condition: bool,
    /// A triad of the shared `M(K4)` that is also a triad of the second matroid.
    pub preserved_triad: Option<Vec<String>>,
    pub hypotheses_hold: bool,
    /// Connectivity scan of the glued matroid; absent when the gluing is
    /// undefined because the restrictions differ.
    pub conclusion: Option<SeparationReport>,
}

impl GluingReport {
    pub fn conclusion_holds(&self) -> bool {
        self.conclusion
            .as_ref()
            .is_some_and(|c| c.verdict == SeparationVerdict::InternallyFourConnected)
    }
}

/// `m1` must be `M(K_n)` for `n ∈ {5, 6}`.
pub fn verify_gluing_instance(m1: &Matroid, m2: &Matroid) -> Result<GluingReport> {
    let Provenance::Graphic(g) = m1.provenance() else {
        return Err(Error::Hypothesis("the first matroid must be graphic".into()));
    };
    let nv = g.vertices().len();
    let pairs: std::collections::HashSet<(usize, usize)> =
        g.edges().iter().filter(|e| e.u != e.v).map(|e| (e.u.min(e.v), e.u.max(e.v))).collect();
    let complete = g.edges().len() == pairs.len() && pairs.len() == nv * nv.saturating_sub(1) / 2;
    if !complete || !(5..=6).contains(&nv) {
        return Err(Error::Hypothesis("the first matroid must be M(K5) or M(K6)".into()));
    }
    let shared: Vec<String> = m1.ground().iter().filter(|e| m2.index(e).is_some()).cloned().collect();
    let n1 = m1.restrict(&shared)?;
    let n2 = m2.restrict(&shared)?;
    let k4 = Matroid::graphic(Graph::complete(4, |u, v| format!("{u}{v}")))?;
    let shared_is_k4 = shared.len() == 6 && is_isomorphic(&n2, &k4)?.is_some();
    let restrictions_agree = n1.same_matroid(&n2)?;
    let second_internally_4_connected = m2.is_internally_4_connected()?;
    let big_triads: Vec<Vec<String>> = m2.triads()?.into_iter().map(|t| m2.names(t)).collect();
    let preserved_triad = n2
        .triads()?
        .into_iter()
        .map(|t| n2.names(t))
        .find(|t| big_triads.contains(t));
    let triad_condition = preserved_triad.is_none();
    let hypotheses_hold = shared_is_k4 && restrictions_agree && second_internally_4_connected && triad_condition;
    let conclusion = if restrictions_agree {
        let p = gpc_oracle(m1, m2)?;
        Some(p.connectivity_scan(ConnectivityMode::InternallyFourConnected)?)
    } else {
        None
    };
    Ok(GluingReport {
        shared,
        shared_is_k4,
        restrictions_agree,
        second_internally_4_connected,
        triad_condition,
        preserved_triad,
        hypotheses_hold,
        conclusion,
    })
}
