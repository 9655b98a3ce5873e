//! Making a block of one representation literally equal to another matrix.

use std::collections::VecDeque;

use crate::arith::RingElement;
use crate::error::{Error, Result};
use crate::matrix::LabeledMatrix;

fn not_equivalent(msg: impl Into<String>) -> Error {
    Error::NotScalingEquivalent(msg.into())
}

/// Pivots `a` so that `target`'s rows are rows and its columns are columns,
/// then scales those rows and columns by group elements until
/// `a[target rows, target cols]` equals `target` entry by entry. Pivots and
/// group scalings leave `M[I A]` unchanged.
pub fn align_representation(a: &LabeledMatrix, target: &LabeledMatrix) -> Result<LabeledMatrix> {
    let rows = target.rows();
    let cols = target.cols();
    let shared = |l: &str| rows.iter().chain(cols).any(|x| x == l);
    let mut a = a.clone();
    for l in rows.iter().chain(cols) {
        if a.row_index(l).is_none() && a.col_index(l).is_none() {
            return Err(Error::UnknownLabel(l.clone()));
        }
    }
    while let Some(j) = (0..a.ncols()).find(|&j| rows.contains(&a.cols()[j])) {
        let i = (0..a.nrows())
            .find(|&i| !rows.contains(&a.rows()[i]) && !a.get(i, j).is_zero())
            .ok_or_else(|| not_equivalent("the target's row labels are not a displayable basis"))?;
        a = a.pivot_at(i, j)?;
    }
    while let Some(i) = (0..a.nrows()).find(|&i| cols.contains(&a.rows()[i])) {
        let j = (0..a.ncols())
            .find(|&j| !shared(&a.cols()[j]) && !a.get(i, j).is_zero())
            .ok_or_else(|| not_equivalent("a target column label cannot be pivoted out of the basis"))?;
        a = a.pivot_at(i, j)?;
    }

    let block = a.submatrix(rows, cols)?;
    let (m, n) = (rows.len(), cols.len());
    for i in 0..m {
        for j in 0..n {
            if block.get(i, j).is_zero() != target.get(i, j).is_zero() {
                return Err(not_equivalent(format!(
                    "supports differ at ({}, {})",
                    rows[i], cols[j]
                )));
            }
        }
    }
    // target = r_i * block * c_j on the support, propagated over its
    // bipartite graph with one free factor per component
    let mut r: Vec<Option<RingElement>> = vec![None; m];
    let mut c: Vec<Option<RingElement>> = vec![None; n];
    for start in 0..m {
        if r[start].is_some() {
            continue;
        }
        r[start] = Some(RingElement::one());
        let mut queue = VecDeque::from([(true, start)]);
        while let Some((is_row, k)) = queue.pop_front() {
            if is_row {
                let rk = r[k].clone().expect("visited");
                for j in 0..n {
                    if c[j].is_none() && !block.get(k, j).is_zero() {
                        c[j] = Some(target.get(k, j).checked_div(&(&rk * block.get(k, j)))?);
                        queue.push_back((false, j));
                    }
                }
            } else {
                let ck = c[k].clone().expect("visited");
                for i in 0..m {
                    if r[i].is_none() && !block.get(i, k).is_zero() {
                        r[i] = Some(target.get(i, k).checked_div(&(block.get(i, k) * &ck))?);
                        queue.push_back((true, i));
                    }
                }
            }
        }
    }
    let r: Vec<RingElement> = r.into_iter().map(|x| x.unwrap_or_else(RingElement::one)).collect();
    let c: Vec<RingElement> = c.into_iter().map(|x| x.unwrap_or_else(RingElement::one)).collect();
    for (i, ri) in r.iter().enumerate() {
        if !ri.is_one() {
            a = a
                .scale_row(&rows[i], ri)
                .map_err(|_| not_equivalent(format!("row factor {ri} for `{}` is not a group element", rows[i])))?;
        }
    }
    for (j, cj) in c.iter().enumerate() {
        if !cj.is_one() {
            a = a
                .scale_col(&cols[j], cj)
                .map_err(|_| not_equivalent(format!("column factor {cj} for `{}` is not a group element", cols[j])))?;
        }
    }
    if a.submatrix(rows, cols)? != *target {
        return Err(not_equivalent("blocks differ by more than row and column scaling"));
    }
    Ok(a)
}
