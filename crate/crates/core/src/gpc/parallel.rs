//! Columns outside a modular flat are parallel to columns inside it.
//!
//! With `X` a modular flat of `M = M[I A]`, `B_X` a basis of `M|X` and
//! `B ⊇ B_X` a basis of `M`, every column of `A[B_X, E \ (B ∪ X)]` (after
//! pivoting so that `A` displays `B`) is zero or a group multiple of a
//! column of `[I A[B_X, X \ B]]`.

use serde::Serialize;

use crate::arith::RingElement;
use crate::error::{Error, Result};
use crate::matrix::LabeledMatrix;
use crate::matroid::Matroid;

use super::modular::is_modular_flat_by_definition;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum ColumnKind {
    Zero,
    /// `factor` times the identity column of `row`.
    Unit { row: String, factor: RingElement },
    /// `factor` times the column of `to`.
    Parallel { to: String, factor: RingElement },
    NotParallel,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ColumnVerdict {
    pub column: String,
    pub kind: ColumnKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ParallelismReport {
    pub holds: bool,
    /// The representation actually inspected, displaying `B`.
    #[serde(skip)]
    pub displayed: LabeledMatrix,
    pub columns: Vec<ColumnVerdict>,
    pub witness: Option<String>,
}

/// Pivots until every element of `basis` labels a row.
pub fn display_basis<S: AsRef<str>>(a: &LabeledMatrix, basis: &[S]) -> Result<LabeledMatrix> {
    let want: Vec<&str> = basis.iter().map(|s| s.as_ref()).collect();
    let mut a = a.clone();
    if want.len() != a.nrows() {
        return Err(Error::Hypothesis(format!("{want:?} has the wrong size for a basis")));
    }
    while let Some(j) = (0..a.ncols()).find(|&j| want.contains(&a.cols()[j].as_str())) {
        let i = (0..a.nrows())
            .find(|&i| !want.contains(&a.rows()[i].as_str()) && !a.get(i, j).is_zero())
            .ok_or_else(|| Error::Hypothesis(format!("{want:?} is not a basis")))?;
        a = a.pivot_at(i, j)?;
    }
    Ok(a)
}

/// `col = g * w` for some group element `g`, returning `g`.
fn group_multiple(a: &LabeledMatrix, col: &[RingElement], w: &[RingElement]) -> Option<RingElement> {
    let i = w.iter().position(|x| !x.is_zero())?;
    if col[i].is_zero() {
        return None;
    }
    let g = col[i].checked_div(&w[i]).ok()?;
    if !a.field().contains(&g) {
        return None;
    }
    col.iter().zip(w).all(|(c, x)| *c == &g * x).then_some(g)
}

pub fn column_parallelism_check<S: AsRef<str>>(
    a: &LabeledMatrix,
    x: &[S],
    b_x: &[S],
    b: &[S],
) -> Result<ParallelismReport> {
    let m = Matroid::linear(a.clone())?;
    let xs = m.set(x)?;
    let bxs = m.set(b_x)?;
    let bs = m.set(b)?;
    let def = is_modular_flat_by_definition(&m, xs)?;
    if !def.modular {
        return Err(Error::Hypothesis(format!("{:?} is not a modular flat", m.names(xs))));
    }
    if !bxs.is_subset(xs) || !m.is_independent(bxs) || m.rank(bxs) != m.rank(xs) {
        return Err(Error::Hypothesis(format!("{:?} is not a basis of the restriction to X", m.names(bxs))));
    }
    if !bxs.is_subset(bs) || !m.is_independent(bs) || bs.len() != m.full_rank() {
        return Err(Error::Hypothesis(format!("{:?} is not a basis containing B_X", m.names(bs))));
    }
    let displayed = display_basis(a, &m.names(bs))?;
    let bx_rows: Vec<usize> = bxs
        .iter()
        .map(|e| displayed.row_index(m.element(e)).expect("basis is displayed"))
        .collect();
    let column = |j: usize| -> Vec<RingElement> { bx_rows.iter().map(|&i| displayed.get(i, j).clone()).collect() };
    let inside: Vec<usize> = (xs - bs)
        .iter()
        .map(|e| displayed.col_index(m.element(e)).expect("non-basis element is a column"))
        .collect();
    let mut columns = Vec::new();
    for v in (xs | bs).complement(m.size()).iter() {
        let name = m.element(v).to_string();
        let j = displayed.col_index(&name).expect("non-basis element is a column");
        let col = column(j);
        let kind = if col.iter().all(RingElement::is_zero) {
            ColumnKind::Zero
        } else if let Some((k, g)) = unit_multiple(&displayed, &col) {
            ColumnKind::Unit {
                row: displayed.rows()[bx_rows[k]].clone(),
                factor: g,
            }
        } else if let Some((to, g)) = inside
            .iter()
            .find_map(|&jx| group_multiple(&displayed, &col, &column(jx)).map(|g| (jx, g)))
        {
            ColumnKind::Parallel {
                to: displayed.cols()[to].clone(),
                factor: g,
            }
        } else {
            ColumnKind::NotParallel
        };
        columns.push(ColumnVerdict { column: name, kind });
    }
    let witness = columns
        .iter()
        .find(|c| c.kind == ColumnKind::NotParallel)
        .map(|c| c.column.clone());
    Ok(ParallelismReport {
        holds: witness.is_none(),
        displayed,
        columns,
        witness,
    })
}

fn unit_multiple(a: &LabeledMatrix, col: &[RingElement]) -> Option<(usize, RingElement)> {
    let nz: Vec<usize> = (0..col.len()).filter(|&i| !col[i].is_zero()).collect();
    match nz.as_slice() {
        [k] if a.field().contains(&col[*k]) => Some((*k, col[*k].clone())),
        _ => None,
    }
}
