//! Matrices whose rows and columns carry element labels, over a partial field.

mod det;
mod json;
pub(crate) mod modp;
mod pmatrix;

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{PartialField, RingElement};
use crate::error::{Error, Result};

pub use det::{det, det_via_pivot, poly_rank, row_cleared};
pub use json::{FieldSpec, MatrixFile};
pub use pmatrix::{is_p_matrix, CertifiedPMatrix, PMatrixCertificate, PMatrixWitness};
pub(crate) use pmatrix::binomial;

/// An `X x Y` matrix with ordered, disjoint row labels `X` and column labels
/// `Y`. Entries are kept in the canonical carrier form of the partial field.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MatrixFile", into = "MatrixFile")]
pub struct LabeledMatrix {
    field: PartialField,
    rows: Vec<String>,
    cols: Vec<String>,
    entries: Vec<RingElement>,
}

impl LabeledMatrix {
    pub fn new(
        field: PartialField,
        rows: Vec<String>,
        cols: Vec<String>,
        entries: Vec<Vec<RingElement>>,
    ) -> Result<Self> {
        if entries.len() != rows.len() {
            return Err(Error::InvalidArgument(format!(
                "{} row labels but {} rows of entries",
                rows.len(),
                entries.len()
            )));
        }
        let mut seen = HashSet::new();
        for label in rows.iter().chain(&cols) {
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        let mut flat = Vec::with_capacity(rows.len() * cols.len());
        for (i, row) in entries.into_iter().enumerate() {
            if row.len() != cols.len() {
                return Err(Error::InvalidArgument(format!(
                    "row `{}` has {} entries, expected {}",
                    rows[i],
                    row.len(),
                    cols.len()
                )));
            }
            for x in row {
                flat.push(field.reduce(x)?);
            }
        }
        Ok(LabeledMatrix {
            field,
            rows,
            cols,
            entries: flat,
        })
    }

    /// Convenience constructor from integer entries.
    pub fn from_ints(
        field: PartialField,
        rows: &[&str],
        cols: &[&str],
        entries: &[&[i64]],
    ) -> Result<Self> {
        Self::new(
            field,
            rows.iter().map(|s| s.to_string()).collect(),
            cols.iter().map(|s| s.to_string()).collect(),
            entries
                .iter()
                .map(|r| r.iter().map(|&c| RingElement::integer(c)).collect())
                .collect(),
        )
    }

    /// Parses every entry with the ring-element grammar.
    pub fn from_strs(
        field: PartialField,
        rows: &[&str],
        cols: &[&str],
        entries: &[&[&str]],
    ) -> Result<Self> {
        let parsed = entries
            .iter()
            .map(|r| r.iter().map(|s| s.parse()).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(
            field,
            rows.iter().map(|s| s.to_string()).collect(),
            cols.iter().map(|s| s.to_string()).collect(),
            parsed,
        )
    }

    pub fn empty(field: PartialField) -> Self {
        LabeledMatrix {
            field,
            rows: Vec::new(),
            cols: Vec::new(),
            entries: Vec::new(),
        }
    }

    pub fn field(&self) -> PartialField {
        self.field
    }

    pub fn rows(&self) -> &[String] {
        &self.rows
    }

    pub fn cols(&self) -> &[String] {
        &self.cols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn is_square(&self) -> bool {
        self.rows.len() == self.cols.len()
    }

    /// All labels, rows first.
    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.rows.iter().chain(&self.cols).map(String::as_str)
    }

    pub fn get(&self, i: usize, j: usize) -> &RingElement {
        &self.entries[i * self.cols.len() + j]
    }

    pub fn row_index(&self, label: &str) -> Option<usize> {
        self.rows.iter().position(|r| r == label)
    }

    pub fn col_index(&self, label: &str) -> Option<usize> {
        self.cols.iter().position(|c| c == label)
    }

    pub fn entry(&self, row: &str, col: &str) -> Result<&RingElement> {
        let i = self
            .row_index(row)
            .ok_or_else(|| Error::UnknownLabel(row.into()))?;
        let j = self
            .col_index(col)
            .ok_or_else(|| Error::UnknownLabel(col.into()))?;
        Ok(self.get(i, j))
    }

    pub fn row_entries(&self, i: usize) -> &[RingElement] {
        let n = self.cols.len();
        &self.entries[i * n..(i + 1) * n]
    }

    /// Returns a copy with one entry replaced.
    pub fn with_entry(&self, row: &str, col: &str, value: RingElement) -> Result<Self> {
        let i = self
            .row_index(row)
            .ok_or_else(|| Error::UnknownLabel(row.into()))?;
        let j = self
            .col_index(col)
            .ok_or_else(|| Error::UnknownLabel(col.into()))?;
        let mut out = self.clone();
        out.entries[i * self.cols.len() + j] = self.field.reduce(value)?;
        Ok(out)
    }

    /// `A[X', Y']`, keeping the label order of `self`.
    pub fn submatrix<S: AsRef<str>>(&self, rows: &[S], cols: &[S]) -> Result<Self> {
        for r in rows {
            if self.row_index(r.as_ref()).is_none() {
                return Err(Error::UnknownLabel(r.as_ref().into()));
            }
        }
        for c in cols {
            if self.col_index(c.as_ref()).is_none() {
                return Err(Error::UnknownLabel(c.as_ref().into()));
            }
        }
        let keep_r: Vec<usize> = (0..self.nrows())
            .filter(|&i| rows.iter().any(|r| r.as_ref() == self.rows[i]))
            .collect();
        let keep_c: Vec<usize> = (0..self.ncols())
            .filter(|&j| cols.iter().any(|c| c.as_ref() == self.cols[j]))
            .collect();
        Ok(self.select(&keep_r, &keep_c))
    }

    /// `A[Z] := A[X ∩ Z, Y ∩ Z]`; labels of `Z` outside the matrix are ignored.
    pub fn restrict<S: AsRef<str>>(&self, z: &[S]) -> Self {
        let keep_r: Vec<usize> = (0..self.nrows())
            .filter(|&i| z.iter().any(|l| l.as_ref() == self.rows[i]))
            .collect();
        let keep_c: Vec<usize> = (0..self.ncols())
            .filter(|&j| z.iter().any(|l| l.as_ref() == self.cols[j]))
            .collect();
        self.select(&keep_r, &keep_c)
    }

    pub(crate) fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                entries.push(self.get(i, j).clone());
            }
        }
        LabeledMatrix {
            field: self.field,
            rows: rows.iter().map(|&i| self.rows[i].clone()).collect(),
            cols: cols.iter().map(|&j| self.cols[j].clone()).collect(),
            entries,
        }
    }

    /// Pivot on `(x, y)`: `y` takes the row slot of `x` and `x` takes the
    /// column slot of `y`.
    pub fn pivot(&self, x: &str, y: &str) -> Result<Self> {
        let px = self.row_index(x).ok_or_else(|| Error::UnknownLabel(x.into()))?;
        let py = self.col_index(y).ok_or_else(|| Error::UnknownLabel(y.into()))?;
        self.pivot_at(px, py)
    }

    pub(crate) fn pivot_at(&self, px: usize, py: usize) -> Result<Self> {
        let a = self.get(px, py);
        if a.is_zero() {
            return Err(Error::ZeroPivot {
                row: self.rows[px].clone(),
                col: self.cols[py].clone(),
            });
        }
        let f = self.field;
        let inv = f.reduce(a.inverse()?)?;
        let (m, n) = (self.nrows(), self.ncols());
        let mut entries = Vec::with_capacity(m * n);
        for u in 0..m {
            let a_uy = self.get(u, py);
            let factor = if u == px {
                None
            } else {
                Some(f.reduce(a_uy * &inv)?)
            };
            for v in 0..n {
                let value = match (u == px, v == py) {
                    (true, true) => inv.clone(),
                    (true, false) => &inv * self.get(px, v),
                    (false, true) => -factor.as_ref().unwrap(),
                    (false, false) => {
                        let a_xv = self.get(px, v);
                        let fac = factor.as_ref().unwrap();
                        if fac.is_zero() || a_xv.is_zero() {
                            self.get(u, v).clone()
                        } else {
                            self.get(u, v) - &(fac * a_xv)
                        }
                    }
                };
                entries.push(f.reduce(value)?);
            }
        }
        let mut rows = self.rows.clone();
        let mut cols = self.cols.clone();
        std::mem::swap(&mut rows[px], &mut cols[py]);
        Ok(LabeledMatrix {
            field: f,
            rows,
            cols,
            entries,
        })
    }

    pub fn scale_row(&self, label: &str, c: &RingElement) -> Result<Self> {
        let i = self
            .row_index(label)
            .ok_or_else(|| Error::UnknownLabel(label.into()))?;
        self.check_group(c)?;
        let mut out = self.clone();
        let n = self.ncols();
        for j in 0..n {
            out.entries[i * n + j] = self.field.reduce(self.get(i, j) * c)?;
        }
        Ok(out)
    }

    pub fn scale_col(&self, label: &str, c: &RingElement) -> Result<Self> {
        let j = self
            .col_index(label)
            .ok_or_else(|| Error::UnknownLabel(label.into()))?;
        self.check_group(c)?;
        let mut out = self.clone();
        let n = self.ncols();
        for i in 0..self.nrows() {
            out.entries[i * n + j] = self.field.reduce(self.get(i, j) * c)?;
        }
        Ok(out)
    }

    fn check_group(&self, c: &RingElement) -> Result<()> {
        if self.field.contains(c) {
            Ok(())
        } else {
            Err(Error::NotGroupElement)
        }
    }

    /// `-A^T` with row and column labels exchanged: if `self` represents
    /// `M[I A]`, the result represents the dual matroid.
    pub fn negated_transpose(&self) -> Self {
        let (m, n) = (self.nrows(), self.ncols());
        let mut entries = Vec::with_capacity(m * n);
        for j in 0..n {
            for i in 0..m {
                let x = -self.get(i, j);
                entries.push(self.field.reduce(x).expect("negation stays in carrier"));
            }
        }
        LabeledMatrix {
            field: self.field,
            rows: self.cols.clone(),
            cols: self.rows.clone(),
            entries,
        }
    }

    /// Reinterprets the entries over another partial field.
    pub fn with_field(&self, field: PartialField) -> Result<Self> {
        let entries = self
            .entries
            .iter()
            .map(|x| field.reduce(x.clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(LabeledMatrix {
            field,
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            entries,
        })
    }

    /// Entrywise image under `a -> c` in `GF(p)`.
    pub fn eval_hom(&self, p: u64, c: u64) -> Result<Self> {
        let target = PartialField::finite_field(p)?;
        let entries = match self.field {
            PartialField::FiniteField(q) if q != p => {
                return Err(Error::InvalidArgument(format!(
                    "cannot map GF({q}) into GF({p})"
                )))
            }
            PartialField::FiniteField(_) => self.entries.clone(),
            _ => self
                .entries
                .iter()
                .map(|x| crate::arith::eval_hom(x, target, c).map(RingElement::integer))
                .collect::<Result<Vec<_>>>()?,
        };
        Ok(LabeledMatrix {
            field: target,
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            entries,
        })
    }

    /// Reorders rows and columns to the given label orders (same label sets).
    pub fn reordered<S: AsRef<str>>(&self, rows: &[S], cols: &[S]) -> Result<Self> {
        if rows.len() != self.nrows() || cols.len() != self.ncols() {
            return Err(Error::InvalidArgument("reorder must keep all labels".into()));
        }
        let ri = rows
            .iter()
            .map(|r| self.row_index(r.as_ref()).ok_or_else(|| Error::UnknownLabel(r.as_ref().into())))
            .collect::<Result<Vec<_>>>()?;
        let ci = cols
            .iter()
            .map(|c| self.col_index(c.as_ref()).ok_or_else(|| Error::UnknownLabel(c.as_ref().into())))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.select(&ri, &ci))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RingElement::is_zero)
    }

    pub fn det(&self) -> Result<RingElement> {
        det(self)
    }

    pub fn is_p_matrix(&self) -> PMatrixCertificate {
        is_p_matrix(self)
    }

    /// Certifies the P-matrix property, handing back the failing certificate
    /// otherwise.
    pub fn certify(self) -> std::result::Result<CertifiedPMatrix, Box<PMatrixCertificate>> {
        CertifiedPMatrix::certify(self)
    }
}

impl fmt::Debug for LabeledMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LabeledMatrix over {} [{}]", self.field, self.cols.join(" "))?;
        for (i, r) in self.rows.iter().enumerate() {
            let cells: Vec<String> = self.row_entries(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  {r}: [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Display for LabeledMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.nrows())
            .map(|i| self.row_entries(i).iter().map(|x| x.to_string()).collect())
            .collect();
        let label_w = self.rows.iter().map(|r| r.len()).max().unwrap_or(0);
        let mut widths: Vec<usize> = self.cols.iter().map(|c| c.len()).collect();
        for row in &cells {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.len());
            }
        }
        write!(f, "{:label_w$}", "")?;
        for (c, w) in self.cols.iter().zip(&widths) {
            write!(f, "  {c:>w$}")?;
        }
        writeln!(f)?;
        for (r, row) in self.rows.iter().zip(&cells) {
            write!(f, "{r:label_w$}")?;
            for (c, w) in row.iter().zip(&widths) {
                write!(f, "  {c:>w$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nr(rows: &[&str], cols: &[&str], e: &[&[&str]]) -> LabeledMatrix {
        LabeledMatrix::from_strs(PartialField::NearRegular, rows, cols, e).unwrap()
    }

    #[test]
    fn rejects_overlapping_labels() {
        let r = LabeledMatrix::from_ints(PartialField::Regular, &["x"], &["x"], &[&[1]]);
        assert!(matches!(r, Err(Error::DuplicateLabel(_))));
    }

    #[test]
    fn pivot_one_by_one() {
        let a = nr(&["x"], &["y"], &[&["a"]]);
        let p = a.pivot("x", "y").unwrap();
        assert_eq!(p.rows(), &["y".to_string()]);
        assert_eq!(p.cols(), &["x".to_string()]);
        assert_eq!(p.get(0, 0), &"1/a".parse().unwrap());
    }

    #[test]
    fn pivot_two_by_two() {
        let a = nr(&["x1", "x2"], &["y1", "y2"], &[&["1", "1"], &["1", "a"]]);
        let p = a.pivot("x1", "y1").unwrap();
        let expected = nr(&["y1", "x2"], &["x1", "y2"], &[&["1", "1"], &["-1", "a - 1"]]);
        assert_eq!(p, expected);
        assert_eq!(p.pivot("y1", "x1").unwrap(), a);
    }

    #[test]
    fn zero_pivot_is_an_error() {
        let a = nr(&["x"], &["y", "z"], &[&["0", "1"]]);
        assert!(matches!(a.pivot("x", "y"), Err(Error::ZeroPivot { .. })));
    }

    #[test]
    fn scaling_requires_group_elements() {
        let a = nr(&["x"], &["y"], &[&["1"]]);
        assert!(matches!(
            a.scale_row("x", &RingElement::integer(2)),
            Err(Error::NotGroupElement)
        ));
        let b = a.scale_col("y", &RingElement::alpha()).unwrap();
        let back = b
            .scale_col("y", &RingElement::alpha().inverse().unwrap())
            .unwrap();
        assert_eq!(back, a);
        assert_eq!(a.scale_row("x", &RingElement::one()).unwrap(), a);
    }

    #[test]
    fn finite_field_entries_reduce() {
        let a = LabeledMatrix::from_ints(PartialField::FiniteField(3), &["x"], &["y", "z"], &[&[4, -1]])
            .unwrap();
        assert_eq!(a.get(0, 0), &RingElement::integer(1));
        assert_eq!(a.get(0, 1), &RingElement::integer(2));
        let bad = LabeledMatrix::from_strs(PartialField::FiniteField(3), &["x"], &["y"], &[&["a"]]);
        assert!(bad.is_err());
    }

    #[test]
    fn submatrix_keeps_source_order() {
        let a = nr(&["x1", "x2"], &["y1", "y2"], &[&["1", "2"], &["3", "4"]]);
        let s = a.submatrix(&["x2", "x1"], &["y2"]).unwrap();
        assert_eq!(s.rows(), &["x1".to_string(), "x2".to_string()]);
        assert_eq!(s.get(1, 0), &RingElement::integer(4));
        assert!(a.submatrix(&["q"], &[]).is_err());
        let e = a.submatrix::<&str>(&[], &[]).unwrap();
        assert_eq!((e.nrows(), e.ncols()), (0, 0));
    }
}
