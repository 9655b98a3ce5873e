//! Partial fields: a carrier ring together with a multiplicative group that
//! every nonzero subdeterminant of a represented matrix must land in.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::poly::IntPolynomial;
use super::ring::RingElement;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PartialField {
    /// `Q(a)` with group generated by `-1`, `a`, `1 - a`.
    NearRegular,
    /// Rational constants with group `{1, -1}`.
    Regular,
    /// `GF(p)` with every nonzero residue a unit.
    FiniteField(u64),
}

/// `(-1)^sign * a^alpha_exp * (1 - a)^one_minus_alpha_exp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct GroupFactorization {
    pub sign: u8,
    pub alpha_exp: i64,
    pub one_minus_alpha_exp: i64,
}

impl GroupFactorization {
    pub fn to_element(&self) -> RingElement {
        let mut x = RingElement::alpha()
            .pow(self.alpha_exp)
            .expect("a is invertible");
        x = &x
            * &RingElement::one_minus_alpha()
                .pow(self.one_minus_alpha_exp)
                .expect("1 - a is invertible");
        if self.sign == 1 {
            -x
        } else {
            x
        }
    }

    /// Product in the group: exponents add, signs add mod 2.
    pub fn compose(&self, other: &Self) -> Self {
        GroupFactorization {
            sign: (self.sign + other.sign) % 2,
            alpha_exp: self.alpha_exp + other.alpha_exp,
            one_minus_alpha_exp: self.one_minus_alpha_exp + other.one_minus_alpha_exp,
        }
    }
}

/// Why an element belongs to the group of a partial field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupWitness {
    Factored(GroupFactorization),
    /// Nonzero residue in a prime field.
    Residue(u64),
}

impl GroupWitness {
    pub fn factorization(&self) -> Option<GroupFactorization> {
        match self {
            GroupWitness::Factored(f) => Some(*f),
            GroupWitness::Residue(_) => None,
        }
    }
}

impl PartialField {
    pub fn finite_field(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidArgument(format!(
                "field characteristic {p} is not prime"
            )));
        }
        Ok(PartialField::FiniteField(p))
    }

    pub fn characteristic(&self) -> Option<u64> {
        match self {
            PartialField::FiniteField(p) => Some(*p),
            _ => None,
        }
    }

    /// Brings `x` into the canonical carrier form for this partial field:
    /// residues in `0..p` for prime fields, constants only for `Regular`.
    pub fn reduce(&self, x: RingElement) -> Result<RingElement> {
        match self {
            PartialField::NearRegular => Ok(x),
            PartialField::Regular => {
                if x.is_constant() {
                    Ok(x)
                } else {
                    Err(Error::OutsideCarrier(x.to_string()))
                }
            }
            PartialField::FiniteField(p) => {
                let r = x.residue(*p).map_err(|e| match e {
                    Error::HomomorphismUndefined => Error::DivisionByZero,
                    other => other,
                })?;
                Ok(RingElement::integer(r))
            }
        }
    }

    pub fn in_group(&self, x: &RingElement) -> Option<GroupWitness> {
        match self {
            PartialField::NearRegular => {
                near_regular_factorization(x).map(GroupWitness::Factored)
            }
            PartialField::Regular => {
                let c = x.as_integer()?;
                if c.is_one() {
                    Some(GroupWitness::Factored(GroupFactorization::default()))
                } else if (-c).is_one() {
                    Some(GroupWitness::Factored(GroupFactorization {
                        sign: 1,
                        ..Default::default()
                    }))
                } else {
                    None
                }
            }
            PartialField::FiniteField(p) => match x.residue(*p) {
                Ok(r) if r != 0 => Some(GroupWitness::Residue(r)),
                _ => None,
            },
        }
    }

    pub fn contains(&self, x: &RingElement) -> bool {
        self.in_group(x).is_some()
    }

    /// Membership of the quotient `num / den` without normalizing it first.
    pub(crate) fn quotient_in_group(&self, num: &IntPolynomial, den: &IntPolynomial) -> bool {
        match self {
            PartialField::FiniteField(_) => {
                RingElement::normalize(num.clone(), den.clone())
                    .map(|x| self.contains(&x))
                    .unwrap_or(false)
            }
            PartialField::NearRegular | PartialField::Regular => {
                if num.is_zero() {
                    return false;
                }
                let (in_, rn) = num.strip_alpha();
                let (jn, rn) = rn.strip_one_minus_alpha();
                let (id, rd) = den.strip_alpha();
                let (jd, rd) = rd.strip_one_minus_alpha();
                if *self == PartialField::Regular && (in_ != id || jn != jd) {
                    return false;
                }
                rn == rd || rn == -&rd
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            PartialField::NearRegular => "near-regular".into(),
            PartialField::Regular => "regular".into(),
            PartialField::FiniteField(p) => format!("GF({p})"),
        }
    }
}

impl fmt::Display for PartialField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Strips all factors `a` and `1 - a` from numerator and denominator and
/// accepts iff what remains is `+1` or `-1`.
pub fn near_regular_factorization(x: &RingElement) -> Option<GroupFactorization> {
    if x.is_zero() {
        return None;
    }
    let (in_, rn) = x.numerator().strip_alpha();
    let (jn, rn) = rn.strip_one_minus_alpha();
    let (id, rd) = x.denominator().strip_alpha();
    let (jd, rd) = rd.strip_one_minus_alpha();
    if !rn.is_constant() || !rd.is_constant() {
        return None;
    }
    let (cn, cd): (BigInt, BigInt) = (rn.constant_term(), rd.constant_term());
    if cn.abs() != cd.abs() {
        return None;
    }
    let sign = u8::from(cn.is_negative() != cd.is_negative());
    Some(GroupFactorization {
        sign,
        alpha_exp: in_ as i64 - id as i64,
        one_minus_alpha_exp: jn as i64 - jd as i64,
    })
}

/// Image of `x` under the homomorphism `Q(a) -> GF(p)` sending `a` to `c`.
///
/// `c` must avoid `0` and `1` so that `a` and `1 - a` map to units.
pub fn eval_hom(x: &RingElement, pf: PartialField, c: u64) -> Result<u64> {
    let p = pf.characteristic().ok_or_else(|| {
        Error::InvalidArgument("homomorphism target must be a prime field".into())
    })?;
    let c = c % p;
    if c == 0 || c == 1 {
        return Err(Error::NotNearRegularImage);
    }
    x.eval_mod(p, c)
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(sign: u8, i: i64, j: i64) -> GroupFactorization {
        GroupFactorization {
            sign,
            alpha_exp: i,
            one_minus_alpha_exp: j,
        }
    }

    #[test]
    fn near_regular_membership_examples() {
        let nr = PartialField::NearRegular;
        assert_eq!(
            nr.in_group(&RingElement::one_minus_alpha()),
            Some(GroupWitness::Factored(f(0, 0, 1)))
        );
        assert_eq!(nr.in_group(&RingElement::zero()), None);
        let a2 = RingElement::alpha().pow(2).unwrap();
        let x = a2.checked_div(&RingElement::one_minus_alpha()).unwrap();
        assert_eq!(nr.in_group(&x), Some(GroupWitness::Factored(f(0, 2, -1))));
        let one_plus = &RingElement::one() + &RingElement::alpha();
        assert_eq!(nr.in_group(&one_plus), None);
        assert_eq!(nr.in_group(&RingElement::integer(2)), None);
    }

    #[test]
    fn alpha_minus_one_is_negative_one_minus_alpha() {
        let x = &RingElement::alpha() - &RingElement::one();
        assert_eq!(near_regular_factorization(&x), Some(f(1, 0, 1)));
    }

    #[test]
    fn regular_group() {
        let r = PartialField::Regular;
        assert!(r.contains(&RingElement::integer(-1)));
        assert!(!r.contains(&RingElement::integer(2)));
        assert!(!r.contains(&RingElement::alpha()));
    }

    #[test]
    fn finite_field_group() {
        let g = PartialField::finite_field(5).unwrap();
        assert_eq!(g.in_group(&RingElement::integer(7)), Some(GroupWitness::Residue(2)));
        assert_eq!(g.in_group(&RingElement::integer(10)), None);
        assert!(PartialField::finite_field(6).is_err());
    }

    #[test]
    fn eval_hom_examples() {
        let gf5 = PartialField::FiniteField(5);
        assert_eq!(eval_hom(&RingElement::alpha(), gf5, 2).unwrap(), 2);
        assert_eq!(eval_hom(&RingElement::one_minus_alpha(), gf5, 2).unwrap(), 4);
        assert!(matches!(
            eval_hom(&RingElement::alpha(), gf5, 6),
            Err(Error::NotNearRegularImage)
        ));
        let x = RingElement::one_minus_alpha().inverse().unwrap();
        let gf7 = PartialField::FiniteField(7);
        assert_eq!(eval_hom(&x, gf7, 3).unwrap(), 3); // 1 / (1 - 3) = -1/2 = 3 mod 7
    }

    #[test]
    fn reconstruction() {
        let g = f(1, -2, 3);
        assert_eq!(near_regular_factorization(&g.to_element()), Some(g));
    }
}
