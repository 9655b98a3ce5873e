//! Exact arithmetic in `Q(a)`: parsing, field operations, unit
//! factorization and evaluation homomorphisms.
//!
//! ```text
//! cargo run --example arithmetic
//! ```

use nearreg::arith::{near_regular_factorization, parse_element, PartialField, RingElement};

fn main() -> nearreg::Result<()> {
    let x = parse_element("(1 - a) / a")?;
    let y = parse_element("a^2 - a")?;
    println!("x = {x}");
    println!("y = {y}");
    println!("x + y = {}", &x + &y);
    println!("x * y = {}", &x * &y);
    println!("1 / x = {}", x.inverse()?);

    for s in ["-a / (1 - a)^2", "2", "a + 1"] {
        let e = parse_element(s)?;
        match near_regular_factorization(&e) {
            Some(f) => println!("{s}: unit {f:?}"),
            None => println!("{s}: not in the near-regular group"),
        }
    }

    let gf7 = PartialField::FiniteField(7);
    let z = &RingElement::alpha() * &RingElement::one_minus_alpha();
    println!("a(1 - a) at a = 3 in GF(7): {}", nearreg::arith::eval_hom(&z, gf7, 3)?);
    Ok(())
}
