//! Matrix file format:
//! `{"field": "near-regular" | "regular" | {"gf": p}, "rows": [...],
//!   "cols": [...], "entries": [["1", "0", ...], ...]}`.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{PartialField, RingElement};
use crate::error::{Error, Result};

use super::LabeledMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Named(String),
    Prime { gf: u64 },
}

impl From<PartialField> for FieldSpec {
    fn from(f: PartialField) -> Self {
        match f {
            PartialField::NearRegular => FieldSpec::Named("near-regular".into()),
            PartialField::Regular => FieldSpec::Named("regular".into()),
            PartialField::FiniteField(p) => FieldSpec::Prime { gf: p },
        }
    }
}

impl TryFrom<FieldSpec> for PartialField {
    type Error = Error;
    fn try_from(spec: FieldSpec) -> Result<Self> {
        match spec {
            FieldSpec::Named(s) if s == "near-regular" => Ok(PartialField::NearRegular),
            FieldSpec::Named(s) if s == "regular" => Ok(PartialField::Regular),
            FieldSpec::Named(s) => Err(Error::InvalidArgument(format!("unknown field `{s}`"))),
            FieldSpec::Prime { gf } => PartialField::finite_field(gf),
        }
    }
}

/// On-disk shape of a [`LabeledMatrix`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub field: FieldSpec,
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub entries: Vec<Vec<String>>,
}

impl From<LabeledMatrix> for MatrixFile {
    fn from(a: LabeledMatrix) -> Self {
        MatrixFile {
            field: a.field().into(),
            rows: a.rows().to_vec(),
            cols: a.cols().to_vec(),
            entries: (0..a.nrows())
                .map(|i| a.row_entries(i).iter().map(|x| x.to_string()).collect())
                .collect(),
        }
    }
}

impl TryFrom<MatrixFile> for LabeledMatrix {
    type Error = Error;
    fn try_from(f: MatrixFile) -> Result<Self> {
        let field = PartialField::try_from(f.field)?;
        let entries = f
            .entries
            .iter()
            .map(|row| row.iter().map(|s| s.parse()).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        LabeledMatrix::new(field, f.rows, f.cols, entries)
    }
}

impl LabeledMatrix {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("matrix serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

impl Serialize for RingElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RingElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
