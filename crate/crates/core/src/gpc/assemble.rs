//! Block assembly of a representation of a generalized parallel connection.
//!
//! ```text
//!         Y1    Y             Y    Y2                Y1   Y    Y2
//! A1 = X1 [D1'  0 ]   A2 = X  [DX  D2 ]   A = X1 [D1'  0   0  ]
//!      X  [D1   DX]        X2 [0   D2']       X  [D1   DX  D2 ]
//!                                             X2 [0    0   D2']
//! ```

use std::collections::HashSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::arith::{PartialField, RingElement};
use crate::error::{Error, Result};
use crate::matrix::LabeledMatrix;
use crate::matroid::Matroid;

use super::modular::is_modular_flat_by_definition;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GpcLayout {
    pub field: PartialField,
    pub x: Vec<String>,
    pub y: Vec<String>,
    pub x1: Vec<String>,
    pub y1: Vec<String>,
    pub x2: Vec<String>,
    pub y2: Vec<String>,
    pub d_x: LabeledMatrix,
    pub d_1: LabeledMatrix,
    pub d_1p: LabeledMatrix,
    pub d_2: LabeledMatrix,
    pub d_2p: LabeledMatrix,
}

fn minus(all: &[String], drop: &[String]) -> Vec<String> {
    all.iter().filter(|l| !drop.contains(l)).cloned().collect()
}

fn require_subset(what: &str, part: &[String], all: &[String]) -> Result<()> {
    match part.iter().find(|l| !all.contains(l)) {
        Some(l) => Err(Error::BlockMismatch(format!("{what} label `{l}` is missing"))),
        None => Ok(()),
    }
}

impl GpcLayout {
    /// Splits `a1` (rows `X1 ∪ X`, columns `Y1 ∪ Y`) and `a2` (rows
    /// `X ∪ X2`, columns `Y ∪ Y2`) into blocks, checking the zero blocks,
    /// disjointness and entry-exact equality of the shared block.
    pub fn from_parts<S: AsRef<str>>(a1: &LabeledMatrix, a2: &LabeledMatrix, x: &[S], y: &[S]) -> Result<Self> {
        if a1.field() != a2.field() {
            return Err(Error::BlockMismatch("matrices are over different partial fields".into()));
        }
        let x: Vec<String> = x.iter().map(|s| s.as_ref().to_string()).collect();
        let y: Vec<String> = y.iter().map(|s| s.as_ref().to_string()).collect();
        require_subset("X row", &x, a1.rows())?;
        require_subset("X row", &x, a2.rows())?;
        require_subset("Y column", &y, a1.cols())?;
        require_subset("Y column", &y, a2.cols())?;
        let x1 = minus(a1.rows(), &x);
        let y1 = minus(a1.cols(), &y);
        let x2 = minus(a2.rows(), &x);
        let y2 = minus(a2.cols(), &y);
        let mut seen = HashSet::new();
        for l in x.iter().chain(&y).chain(&x1).chain(&y1).chain(&x2).chain(&y2) {
            if !seen.insert(l) {
                return Err(Error::BlockMismatch(format!("label `{l}` occurs in two label sets")));
            }
        }
        let d_x = a1.submatrix(&x, &y)?;
        if a2.submatrix(&x, &y)? != d_x {
            return Err(Error::BlockMismatch("the shared blocks differ".into()));
        }
        if !a1.submatrix(&x1, &y)?.is_zero() {
            return Err(Error::BlockMismatch("A1[X1, Y] is not zero".into()));
        }
        if !a2.submatrix(&x2, &y)?.is_zero() {
            return Err(Error::BlockMismatch("A2[X2, Y] is not zero".into()));
        }
        Ok(GpcLayout {
            field: a1.field(),
            d_1: a1.submatrix(&x, &y1)?,
            d_1p: a1.submatrix(&x1, &y1)?,
            d_2: a2.submatrix(&x, &y2)?,
            d_2p: a2.submatrix(&x2, &y2)?,
            d_x,
            x,
            y,
            x1,
            y1,
            x2,
            y2,
        })
    }

    fn entry(&self, r: &str, c: &str) -> RingElement {
        let blocks = [&self.d_x, &self.d_1, &self.d_1p, &self.d_2, &self.d_2p];
        blocks
            .iter()
            .find_map(|b| b.entry(r, c).ok().cloned())
            .unwrap_or_else(RingElement::zero)
    }

    fn build(&self, rows: Vec<String>, cols: Vec<String>) -> LabeledMatrix {
        let entries = rows
            .iter()
            .map(|r| cols.iter().map(|c| self.entry(r, c)).collect())
            .collect();
        LabeledMatrix::new(self.field, rows, cols, entries).expect("layout labels are disjoint")
    }

    pub fn a1(&self) -> LabeledMatrix {
        self.build([&self.x1[..], &self.x].concat(), [&self.y1[..], &self.y].concat())
    }

    pub fn a2(&self) -> LabeledMatrix {
        self.build([&self.x[..], &self.x2].concat(), [&self.y[..], &self.y2].concat())
    }

    /// The assembled matrix without any precondition checks.
    pub fn assemble_unchecked(&self) -> LabeledMatrix {
        self.build(
            [&self.x1[..], &self.x, &self.x2].concat(),
            [&self.y1[..], &self.y, &self.y2].concat(),
        )
    }
}

/// Checks that both halves are P-matrices and that `X ∪ Y` is a modular
/// flat of `M[I A1]`, then assembles. The output still has to be certified.
pub fn gpc_assemble(layout: &GpcLayout) -> Result<LabeledMatrix> {
    let a1 = layout.a1();
    let a2 = layout.a2();
    for (name, a) in [("A1", &a1), ("A2", &a2)] {
        let cert = a.is_p_matrix();
        if let Some(w) = cert.witness {
            return Err(Error::NotPMatrix(format!(
                "{name}: det[{:?}, {:?}] = {}",
                w.rows, w.cols, w.determinant
            )));
        }
    }
    let m1 = Matroid::from_certified(a1.certify().map_err(|_| Error::NotPMatrix("A1".into()))?)?;
    let shared: Vec<&String> = layout.x.iter().chain(&layout.y).collect();
    let flat = m1.set(&shared)?;
    let check = is_modular_flat_by_definition(&m1, flat)?;
    if !check.modular {
        return Err(Error::NotModular(format!("{:?}: {:?}", m1.names(flat), check.witness)));
    }
    Ok(layout.assemble_unchecked())
}

/// On-disk layout: the six label sets plus paths (relative to the layout
/// file) of the two matrices and the shared block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GpcLayoutFile {
    pub x: Vec<String>,
    pub y: Vec<String>,
    pub x1: Vec<String>,
    pub y1: Vec<String>,
    pub x2: Vec<String>,
    pub y2: Vec<String>,
    pub a1: String,
    pub a2: String,
    pub shared: String,
}

impl GpcLayout {
    pub fn load(path: &Path) -> Result<GpcLayout> {
        let file: GpcLayoutFile = serde_json::from_str(&std::fs::read_to_string(path)?)?;
        let dir = path.parent().unwrap_or_else(|| Path::new("."));
        let read = |p: &str| -> Result<LabeledMatrix> { LabeledMatrix::from_json(&std::fs::read_to_string(dir.join(p))?) };
        let a1 = read(&file.a1)?.reordered(&[&file.x1[..], &file.x].concat(), &[&file.y1[..], &file.y].concat())?;
        let a2 = read(&file.a2)?.reordered(&[&file.x[..], &file.x2].concat(), &[&file.y[..], &file.y2].concat())?;
        let shared = read(&file.shared)?;
        let layout = GpcLayout::from_parts(&a1, &a2, &file.x, &file.y)?;
        if shared.reordered(&file.x, &file.y)? != layout.d_x {
            return Err(Error::BlockMismatch("shared block file differs from the matrices".into()));
        }
        Ok(layout)
    }
}
