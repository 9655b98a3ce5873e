//! The concrete matroids and gluings: `A12`/`M12`, complete-graph
//! representations, signed graphs and the excluded-minor construction.

mod a12;
mod align;
mod complete;
mod signed_search;
mod gluing;
mod obstruction;
mod signed;

pub use a12::{build_a12, build_m12, A12_COLS, A12_ROWS};
pub use align::align_representation;
pub use complete::{complete_graph_rep, k4_labels_for, CompleteGraphRep, K4Labels};
pub use signed_search::{search_m12_signed_graph, SignedSearchOutcome, SignedSearch, SIGNED_SEARCH_NODE_BOUND};
pub use gluing::{verify_gluing_instance, GluingReport};
pub use obstruction::{
    build_obstruction, build_obstruction_with, check_obstruction_matrix, MatrixCheck, ObstructionCertificates,
    ObstructionResult, ObstructionSummary, OracleEquality, ORACLE_SAMPLES,
};
pub use signed::{signed_graph_matroid, signed_graph_representation, signed_incidence};
