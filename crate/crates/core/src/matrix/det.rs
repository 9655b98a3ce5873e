use crate::arith::{IntPolynomial, PartialField, RingElement};
use crate::error::{Error, Result};

use super::{modp, LabeledMatrix};

/// Clears denominators row by row: returns polynomial rows together with the
/// per-row multipliers `L_r`, so that `row_r = poly_row_r / L_r`.
pub fn row_cleared(a: &LabeledMatrix) -> (Vec<Vec<IntPolynomial>>, Vec<IntPolynomial>) {
    let mut rows = Vec::with_capacity(a.nrows());
    let mut lcms = Vec::with_capacity(a.nrows());
    for i in 0..a.nrows() {
        let entries = a.row_entries(i);
        let mut l = IntPolynomial::one();
        for x in entries {
            let d = x.denominator();
            if !d.is_one() {
                let g = l.gcd(d);
                l = &l * &d.div_exact(&g).expect("gcd divides");
            }
        }
        let row = entries
            .iter()
            .map(|x| {
                if x.denominator().is_one() {
                    x.numerator().scale_poly(&l)
                } else {
                    let cof = l.div_exact(x.denominator()).expect("lcm is a multiple");
                    x.numerator().scale_poly(&cof)
                }
            })
            .collect();
        rows.push(row);
        lcms.push(l);
    }
    (rows, lcms)
}

impl IntPolynomial {
    fn scale_poly(&self, by: &IntPolynomial) -> IntPolynomial {
        if by.is_one() {
            self.clone()
        } else {
            self * by
        }
    }
}

/// Exact determinant. Prime fields use modular elimination; over `Q(a)` the
/// rows are cleared to polynomials and reduced with fraction-free (Bareiss)
/// elimination, except that sizes up to 3 use cofactor expansion.
pub fn det(a: &LabeledMatrix) -> Result<RingElement> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.nrows(),
            cols: a.ncols(),
        });
    }
    let n = a.nrows();
    if n == 0 {
        return Ok(RingElement::one());
    }
    if let PartialField::FiniteField(p) = a.field() {
        let m = modp::residues(a, p);
        return Ok(RingElement::integer(modp::det_mod_p(m, n, p)));
    }
    if n <= 3 {
        return Ok(cofactor(a, &(0..n).collect::<Vec<_>>(), &(0..n).collect::<Vec<_>>()));
    }
    let (rows, lcms) = row_cleared(a);
    let num = bareiss_det(rows);
    let den = lcms.iter().fold(IntPolynomial::one(), |acc, l| &acc * l);
    RingElement::normalize(num, den)
}

fn cofactor(a: &LabeledMatrix, rows: &[usize], cols: &[usize]) -> RingElement {
    match rows.len() {
        0 => RingElement::one(),
        1 => a.get(rows[0], cols[0]).clone(),
        _ => {
            let mut acc = RingElement::zero();
            for (j, &c) in cols.iter().enumerate() {
                let x = a.get(rows[0], c);
                if x.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols.iter().copied().filter(|&k| k != c).collect();
                let term = x * &cofactor(a, &rows[1..], &rest);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

fn bareiss_det(mut m: Vec<Vec<IntPolynomial>>) -> IntPolynomial {
    let n = m.len();
    let mut negate = false;
    let mut prev = IntPolynomial::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    negate = !negate;
                }
                None => return IntPolynomial::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let mut v = &m[i][j] * &m[k][k];
                v = &v - &(&m[i][k] * &m[k][j]);
                m[i][j] = v.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Rank of a polynomial matrix over `Q(a)` by fraction-free elimination.
pub fn poly_rank(mut m: Vec<Vec<IntPolynomial>>) -> usize {
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut rank = 0;
    let mut prev = IntPolynomial::one();
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(p, rank);
        for i in rank + 1..nrows {
            for j in col + 1..ncols {
                let mut v = &m[i][j] * &m[rank][col];
                v = &v - &(&m[i][col] * &m[rank][j]);
                m[i][j] = v.div_exact(&prev).expect("fraction-free division is exact");
            }
            m[i][col] = IntPolynomial::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// `(-1)^(pos(x) + pos(y)) * A_xy * det(A^xy[X - x, Y - y])`, with 1-based
/// label positions.
pub fn det_via_pivot(a: &LabeledMatrix, x: &str, y: &str) -> Result<RingElement> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.nrows(),
            cols: a.ncols(),
        });
    }
    let px = a.row_index(x).ok_or_else(|| Error::UnknownLabel(x.into()))?;
    let py = a.col_index(y).ok_or_else(|| Error::UnknownLabel(y.into()))?;
    let pivoted = a.pivot_at(px, py)?;
    let rows: Vec<usize> = (0..a.nrows()).filter(|&i| i != px).collect();
    let cols: Vec<usize> = (0..a.ncols()).filter(|&j| j != py).collect();
    let minor = det(&pivoted.select(&rows, &cols))?;
    let mut value = a.get(px, py) * &minor;
    if (px + py) % 2 == 1 {
        value = -value;
    }
    a.field().reduce(value)
}
