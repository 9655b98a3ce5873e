//! Canonical elements of the rational function field `Q(a)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::IntPolynomial;
use crate::error::{Error, Result};

/// A reduced quotient `numerator / denominator` of integer polynomials.
///
/// Canonical form: numerator and denominator share no common factor in
/// `Z[a]` (so in particular their coefficient contents are coprime), and the
/// denominator has a positive leading coefficient. Zero is `0 / 1`. Equality
/// of values is therefore structural equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl RingElement {
    pub fn normalize(num: IntPolynomial, den: IntPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (mut num, mut den) = if den.is_one() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.div_exact(&g).expect("gcd divides numerator"),
                    den.div_exact(&g).expect("gcd divides denominator"),
                )
            }
        };
        if den.leading().unwrap().is_negative() {
            num = -num;
            den = -den;
        }
        Ok(RingElement { num, den })
    }

    pub fn zero() -> Self {
        RingElement {
            num: IntPolynomial::zero(),
            den: IntPolynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    pub fn integer(c: impl Into<BigInt>) -> Self {
        RingElement {
            num: IntPolynomial::constant(c),
            den: IntPolynomial::one(),
        }
    }

    pub fn alpha() -> Self {
        Self::from_poly(IntPolynomial::alpha())
    }

    pub fn one_minus_alpha() -> Self {
        Self::from_poly(IntPolynomial::one_minus_alpha())
    }

    pub fn from_poly(p: IntPolynomial) -> Self {
        RingElement {
            num: p,
            den: IntPolynomial::one(),
        }
    }

    /// The rational constant `n / d`.
    pub fn rational(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<Self> {
        Self::normalize(IntPolynomial::constant(n), IntPolynomial::constant(d))
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True for rational constants (no dependence on `a`).
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// `Some(c)` if the element is the integer `c`.
    pub fn as_integer(&self) -> Option<BigInt> {
        (self.is_constant() && self.den.is_one()).then(|| self.num.constant_term())
    }

    pub fn as_i64(&self) -> Option<i64> {
        self.as_integer().and_then(|c| c.to_i64())
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.leading().unwrap().is_negative() {
            num = -num;
            den = -den;
        }
        Ok(RingElement { num, den })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn pow(&self, exp: i64) -> Result<Self> {
        let base = if exp < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..exp.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Image under `a -> c` in `GF(p)`. Fails if the denominator vanishes.
    pub fn eval_mod(&self, p: u64, c: u64) -> Result<u64> {
        let d = self.den.eval_mod(p, c);
        if d == 0 {
            return Err(Error::HomomorphismUndefined);
        }
        let n = self.num.eval_mod(p, c);
        Ok(n * mod_inverse(d, p) % p)
    }

    /// For a rational constant, its residue in `GF(p)`.
    pub fn residue(&self, p: u64) -> Result<u64> {
        if !self.is_constant() {
            return Err(Error::OutsideCarrier(self.to_string()));
        }
        self.eval_mod(p, 0)
    }
}

/// Inverse of a nonzero residue modulo a prime.
pub(crate) fn mod_inverse(x: u64, p: u64) -> u64 {
    let e = (x as i128).extended_gcd(&(p as i128));
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(p as i128) as u64
}

impl Default for RingElement {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for RingElement {
    fn from(c: i64) -> Self {
        Self::integer(c)
    }
}

impl Add for &RingElement {
    type Output = RingElement;
    fn add(self, rhs: &RingElement) -> RingElement {
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            return RingElement::normalize(num, self.den.clone()).unwrap();
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RingElement::normalize(num, &self.den * &rhs.den).unwrap()
    }
}

impl Sub for &RingElement {
    type Output = RingElement;
    fn sub(self, rhs: &RingElement) -> RingElement {
        self + &(-rhs)
    }
}

impl Mul for &RingElement {
    type Output = RingElement;
    fn mul(self, rhs: &RingElement) -> RingElement {
        if self.is_zero() || rhs.is_zero() {
            return RingElement::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RingElement::from_poly(&self.num * &rhs.num);
        }
        RingElement::normalize(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        RingElement {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RingElement {
            type Output = RingElement;
            fn $m(self, rhs: RingElement) -> RingElement {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// True if the polynomial prints as a single unsigned factor that can sit on
/// either side of `/` without parentheses.
fn is_atom(p: &IntPolynomial) -> bool {
    let nonzero = p.coeffs().iter().filter(|c| !c.is_zero()).count();
    if nonzero != 1 {
        return false;
    }
    let lead = p.leading().unwrap();
    !lead.is_negative() && (p.degree() == Some(0) || lead.is_one())
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let neg_atom = is_atom(&-&self.num);
        if is_atom(&self.num) {
            write!(f, "{}", self.num)?;
        } else if neg_atom {
            write!(f, "-{}", -&self.num)?;
        } else {
            write!(f, "({})", self.num)?;
        }
        if is_atom(&self.den) {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingElement({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn normalize_examples() {
        let x = RingElement::normalize(poly(&[0, 2]), poly(&[2])).unwrap();
        assert_eq!(x, RingElement::alpha());
        let y = RingElement::normalize(poly(&[0, -1, 1]), poly(&[-1, 1])).unwrap();
        assert_eq!(y, RingElement::alpha());
        let z = RingElement::normalize(poly(&[]), poly(&[5])).unwrap();
        assert_eq!(z, RingElement::zero());
        assert_eq!(z.denominator(), &IntPolynomial::one());
        assert!(matches!(
            RingElement::normalize(poly(&[1]), poly(&[])),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn denominator_sign_and_content() {
        let x = RingElement::normalize(poly(&[4]), poly(&[-6])).unwrap();
        assert_eq!(x.numerator(), &poly(&[-2]));
        assert_eq!(x.denominator(), &poly(&[3]));
    }

    #[test]
    fn field_operations() {
        let a = RingElement::alpha();
        let one = RingElement::one();
        assert_eq!(&a + &RingElement::one_minus_alpha(), one);
        assert_eq!(&a * &a.inverse().unwrap(), one);
        assert_eq!(&one - &a, RingElement::one_minus_alpha());
        assert!(RingElement::zero().inverse().is_err());
    }

    #[test]
    fn eval_mod_examples() {
        assert_eq!(RingElement::alpha().eval_mod(5, 2).unwrap(), 2);
        assert_eq!(RingElement::one_minus_alpha().eval_mod(5, 2).unwrap(), 4);
        let inv = RingElement::alpha().inverse().unwrap();
        assert!(matches!(inv.eval_mod(5, 0), Err(Error::HomomorphismUndefined)));
    }

    #[test]
    fn display() {
        let a = RingElement::alpha();
        let x = a.checked_div(&RingElement::one_minus_alpha()).unwrap();
        assert_eq!(x.to_string(), "-a/(-1 + a)");
        assert_eq!(RingElement::rational(-2, 3).unwrap().to_string(), "-2/3");
        assert_eq!(a.inverse().unwrap().to_string(), "1/a");
    }
}
