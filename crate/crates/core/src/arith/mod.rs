//! Exact arithmetic in `Q(a)` and the partial fields built on it.

mod field;
mod parse;
mod poly;
mod ring;

pub use field::{
    eval_hom, is_prime, near_regular_factorization, GroupFactorization, GroupWitness,
    PartialField,
};
pub use parse::parse_element;
pub use poly::IntPolynomial;
pub use ring::RingElement;
pub(crate) use ring::mod_inverse;
