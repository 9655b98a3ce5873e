//! Dense elimination over small prime fields.

use crate::arith::{mod_inverse, PartialField};

use super::LabeledMatrix;

/// Row-major residues of a prime-field matrix.
pub(crate) fn residues(a: &LabeledMatrix, p: u64) -> Vec<u64> {
    debug_assert_eq!(a.field(), PartialField::FiniteField(p));
    (0..a.nrows())
        .flat_map(|i| a.row_entries(i).iter())
        .map(|x| x.residue(p).expect("prime-field entries are residues"))
        .collect()
}

pub(crate) fn det_mod_p(mut m: Vec<u64>, n: usize, p: u64) -> u64 {
    let mut det = 1u64;
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| m[i * n + k] != 0) else {
            return 0;
        };
        if piv != k {
            for j in 0..n {
                m.swap(piv * n + j, k * n + j);
            }
            det = (p - det) % p;
        }
        let pk = m[k * n + k];
        det = det * pk % p;
        let inv = mod_inverse(pk, p);
        for i in k + 1..n {
            let f = m[i * n + k] * inv % p;
            if f == 0 {
                continue;
            }
            for j in k..n {
                let sub = f * m[k * n + j] % p;
                m[i * n + j] = (m[i * n + j] + p - sub) % p;
            }
        }
    }
    det
}

/// Rank of a `rows x cols` row-major matrix over `GF(p)`; destroys `m`.
pub(crate) fn rank_mod_p(m: &mut [u32], rows: usize, cols: usize, p: u32) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&i| m[i * cols + c] != 0) else {
            continue;
        };
        if piv != rank {
            for j in 0..cols {
                m.swap(piv * cols + j, rank * cols + j);
            }
        }
        let inv = mod_inverse(m[rank * cols + c] as u64, p as u64) as u32;
        for i in rank + 1..rows {
            let f = (m[i * cols + c] as u64 * inv as u64 % p as u64) as u32;
            if f == 0 {
                continue;
            }
            for j in c..cols {
                let sub = (f as u64 * m[rank * cols + j] as u64 % p as u64) as u32;
                m[i * cols + j] = (m[i * cols + j] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

/// Reduced row echelon form over `GF(p)`; returns the pivot columns.
pub(crate) fn rref_mod_p(m: &mut [u64], rows: usize, cols: usize, p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| m[i * cols + c] != 0) else {
            continue;
        };
        for j in 0..cols {
            m.swap(piv * cols + j, r * cols + j);
        }
        let inv = mod_inverse(m[r * cols + c], p);
        for j in 0..cols {
            m[r * cols + j] = m[r * cols + j] * inv % p;
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = m[i * cols + c];
            if f == 0 {
                continue;
            }
            for j in 0..cols {
                let sub = f * m[r * cols + j] % p;
                m[i * cols + j] = (m[i * cols + j] + p - sub) % p;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}
