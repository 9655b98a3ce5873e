//! Generalized parallel connection: modular flats, the column parallelism
//! property, matrix assembly and an independent rank oracle.

mod assemble;
mod modular;
mod oracle;
mod parallel;

pub use assemble::{gpc_assemble, GpcLayout, GpcLayoutFile};
pub use modular::{
    is_modular_flat_by_definition, modularity_certificate, short_circuit_check2, short_circuit_check3,
    ModularCheck, ModularWitness, ModularityCertificate,
};
pub use oracle::{gpc_oracle, graph_clique_sum, GpcOracle};
pub use parallel::{column_parallelism_check, display_basis, ColumnKind, ColumnVerdict, ParallelismReport};
