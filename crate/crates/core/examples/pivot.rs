//! Pivoting a representation: the matroid is unchanged, pivoting twice on
//! the same entry undoes it, and determinants follow the pivot identity.
//!
//! ```text
//! cargo run --example pivot
//! ```

use nearreg::constructions::build_a12;
use nearreg::matrix::det_via_pivot;
use nearreg::matroid::Matroid;

fn main() -> nearreg::Result<()> {
    let a = build_a12();
    let b = a.pivot("a", "d")?;
    println!("rows after pivot: {:?}", b.rows());
    println!("cols after pivot: {:?}", b.cols());
    println!("still a P-matrix: {}", b.is_p_matrix().verdict);
    println!("pivot back restores A12: {}", b.pivot("d", "a")? == a);
    let same = Matroid::linear(a.clone())?.same_matroid(&Matroid::linear(b)?)?;
    println!("same matroid: {same}");

    for (rows, cols) in [(["a", "b", "c"], ["d", "e", "f"]), (["a", "b", "1"], ["d", "e", "4"])] {
        let sq = a.submatrix(&rows, &cols)?;
        println!("{rows:?} x {cols:?}: det {} = det via pivot {}", sq.det()?, det_via_pivot(&sq, "a", "d")?);
    }
    Ok(())
}
