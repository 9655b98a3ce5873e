//! Dense univariate polynomials in `a` with arbitrary-precision integer
//! coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Coefficient `i` multiplies `a^i`. The highest stored coefficient is
/// nonzero; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// The indeterminate itself.
    pub fn alpha() -> Self {
        Self::from_i64s(&[0, 1])
    }

    pub fn one_minus_alpha() -> Self {
        Self::from_i64s(&[1, -1])
    }

    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c.into();
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeffs.first().cloned().unwrap_or_default()
    }

    /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Divides every coefficient by `c`, which must divide all of them.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        debug_assert!(!c.is_zero());
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|x| x / c).collect(),
        }
    }

    pub fn primitive_part(&self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            self.clone()
        } else {
            self.div_scalar_exact(&g)
        }
    }

    /// Multiplies by `a^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    /// `self += x * y`, avoiding a temporary for the product.
    pub fn add_product(&mut self, x: &Self, y: &Self) {
        if x.is_zero() || y.is_zero() {
            return;
        }
        let len = x.coeffs.len() + y.coeffs.len() - 1;
        if self.coeffs.len() < len {
            self.coeffs.resize(len, BigInt::zero());
        }
        for (i, a) in x.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.coeffs.iter().enumerate() {
                self.coeffs[i + j] += a * b;
            }
        }
        self.trim();
    }

    /// Exact quotient over the integers, or `None` if `d` does not divide
    /// `self` in `Z[a]`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let ds = self.degree().unwrap();
        if ds < dd {
            return None;
        }
        let lead = d.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); ds - dd + 1];
        for k in (0..=ds - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (i, c) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(Self::from_coeffs(quot))
        } else {
            None
        }
    }

    /// Pseudo-remainder of `self` by `d`.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo-remainder by zero polynomial");
        let lead = d.leading().unwrap().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let lr = r.leading().unwrap().clone();
            let shifted = d.shift(dr - dd).scale(&lr);
            r = &r.scale(&lead) - &shifted;
        }
        r
    }

    /// Greatest common divisor in `Z[a]` with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.with_positive_leading();
        }
        if other.is_zero() {
            return self.with_positive_leading();
        }
        let g = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().scale(&g).with_positive_leading()
    }

    fn with_positive_leading(&self) -> Self {
        match self.leading() {
            Some(l) if l.is_negative() => -self,
            _ => self.clone(),
        }
    }

    pub fn value_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Evaluates at `a = c` in `Z/pZ`.
    pub fn eval_mod(&self, p: u64, c: u64) -> u64 {
        let p_big = BigInt::from(p);
        let mut acc: u128 = 0;
        for coef in self.coeffs.iter().rev() {
            let r = coef.mod_floor(&p_big).to_u64().unwrap() as u128;
            acc = (acc * c as u128 + r) % p as u128;
        }
        acc as u64
    }

    /// Splits off the largest power of `a`: returns `(k, q)` with
    /// `self = a^k q` and `q(0) != 0`. The zero polynomial returns `(0, 0)`.
    pub fn strip_alpha(&self) -> (u32, Self) {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if k == self.coeffs.len() {
            return (0, Self::zero());
        }
        (
            k as u32,
            IntPolynomial {
                coeffs: self.coeffs[k..].to_vec(),
            },
        )
    }

    /// Splits off the largest power of `1 - a`: returns `(k, q)` with
    /// `self = (1 - a)^k q` and `q(1) != 0`.
    pub fn strip_one_minus_alpha(&self) -> (u32, Self) {
        if self.is_zero() {
            return (0, Self::zero());
        }
        let mut k = 0;
        let mut cur = self.clone();
        while cur.degree().unwrap_or(0) > 0 && cur.value_at_one().is_zero() {
            cur = cur.div_by_one_minus_alpha();
            k += 1;
        }
        (k, cur)
    }

    /// Synthetic division by `1 - a`; assumes `self(1) == 0`.
    fn div_by_one_minus_alpha(&self) -> Self {
        // self = (a - 1) q, so self / (1 - a) = -q.
        let n = self.coeffs.len() - 1;
        let mut q = vec![BigInt::zero(); n];
        let mut carry = BigInt::zero();
        for k in (1..=n).rev() {
            carry += &self.coeffs[k];
            q[k - 1] = -carry.clone();
        }
        Self::from_coeffs(q)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        out.add_product(self, rhs);
        out
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

impl fmt::Display for IntPolynomial {
    /// Ascending powers: `1 - a`, `-a + 2*a^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match deg {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if deg == 1 {
                        write!(f, "a")?;
                    } else {
                        write!(f, "a^{deg}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn trims_leading_zeros() {
        assert_eq!(p(&[1, 0, 0]), p(&[1]));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0, 0]).degree(), None);
    }

    #[test]
    fn exact_division() {
        // a^2 - a = a (a - 1)
        let f = p(&[0, -1, 1]);
        assert_eq!(f.div_exact(&p(&[-1, 1])), Some(p(&[0, 1])));
        assert_eq!(f.div_exact(&p(&[1, 1])), None);
        assert_eq!(p(&[1, 1]).div_exact(&p(&[2])), None);
    }

    #[test]
    fn gcd_over_integers() {
        let a = &p(&[0, -1, 1]) * &p(&[2, 2]);
        let b = &p(&[-1, 1]) * &p(&[4]);
        assert_eq!(a.gcd(&b), p(&[-2, 2]));
        assert_eq!(p(&[3]).gcd(&p(&[0, 6])), p(&[3]));
    }

    #[test]
    fn strips_special_factors() {
        // a^2 (1 - a)^3 (1 + a)
        let base = &(&p(&[0, 0, 1]) * &p(&[1, -1])) * &(&p(&[1, -2, 1]) * &p(&[1, 1]));
        let (i, rest) = base.strip_alpha();
        assert_eq!(i, 2);
        let (j, rest) = rest.strip_one_minus_alpha();
        assert_eq!(j, 3);
        assert_eq!(rest, p(&[1, 1]));
        assert_eq!(p(&[2]).strip_one_minus_alpha(), (0, p(&[2])));
    }

    #[test]
    fn display_ascending() {
        assert_eq!(p(&[1, -1]).to_string(), "1 - a");
        assert_eq!(p(&[0, -1, 0, 2]).to_string(), "-a + 2*a^3");
        assert_eq!(p(&[]).to_string(), "0");
    }

    #[test]
    fn eval_mod_handles_negatives() {
        assert_eq!(p(&[1, -1]).eval_mod(5, 2), 4);
        assert_eq!(p(&[0, -1, 1]).eval_mod(7, 3), 6);
    }
}
