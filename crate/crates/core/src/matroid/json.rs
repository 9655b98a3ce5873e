//! Matroid files: `{"linear": <matrix>}`, `{"graphic": <graph>}`,
//! `{"signed": <signed graph>}`, `{"dual": <matroid>}` or
//! `{"minor": {"of": <matroid>, "contract": [...], "delete": [...]}}`.

use serde::{Deserialize, Serialize};

use crate::constructions::signed_graph_matroid;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphSpec, SignedGraph, SignedGraphSpec};
use crate::matrix::LabeledMatrix;

use super::{Matroid, Provenance};

/// Linear matroids read from files are certified (and then ranked by
/// evaluation) when they have at most this many square submatrices.
pub const CERTIFY_LIMIT: u64 = 250_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum MatroidSpec {
    Linear(LabeledMatrix),
    Graphic(GraphSpec),
    Signed(SignedGraphSpec),
    Dual(Box<MatroidSpec>),
    Minor(MinorSpec),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MinorSpec {
    pub of: Box<MatroidSpec>,
    #[serde(default)]
    pub contract: Vec<String>,
    #[serde(default)]
    pub delete: Vec<String>,
}

impl MatroidSpec {
    pub fn build(&self) -> Result<Matroid> {
        match self {
            MatroidSpec::Linear(a) => Matroid::linear_auto(a.clone(), CERTIFY_LIMIT),
            MatroidSpec::Graphic(g) => Matroid::graphic(Graph::try_from(g)?),
            MatroidSpec::Signed(g) => signed_graph_matroid(&SignedGraph::try_from(g)?),
            MatroidSpec::Dual(m) => Ok(m.build()?.dual()),
            MatroidSpec::Minor(spec) => spec.of.build()?.minor(&spec.contract, &spec.delete),
        }
    }
}

impl Matroid {
    pub fn from_json(s: &str) -> Result<Matroid> {
        serde_json::from_str::<MatroidSpec>(s)?.build()
    }

    /// A file description reproducing this matroid; oracle matroids have none.
    pub fn to_spec(&self) -> Result<MatroidSpec> {
        Ok(match self.provenance() {
            Provenance::Linear(a) => MatroidSpec::Linear(a.clone()),
            Provenance::Graphic(g) => MatroidSpec::Graphic(g.into()),
            Provenance::Dual(m) => MatroidSpec::Dual(Box::new(m.to_spec()?)),
            Provenance::Minor { of, contract, delete } => MatroidSpec::Minor(MinorSpec {
                of: Box::new(of.to_spec()?),
                contract: contract.clone(),
                delete: delete.clone(),
            }),
            Provenance::Oracle(d) => {
                return Err(Error::InvalidArgument(format!("oracle matroid `{d}` has no file form")))
            }
        })
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.to_spec()?)?)
    }
}
