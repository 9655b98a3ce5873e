use crate::arith::PartialField;
use crate::matrix::LabeledMatrix;
use crate::matroid::Matroid;

pub const A12_ROWS: [&str; 6] = ["a", "b", "c", "1", "2", "3"];
pub const A12_COLS: [&str; 6] = ["d", "e", "f", "4", "5", "6"];

/// The 6×6 near-regular matrix whose matroid is `M12`.
pub fn build_a12() -> LabeledMatrix {
    LabeledMatrix::from_strs(
        PartialField::NearRegular,
        &A12_ROWS,
        &A12_COLS,
        &[
            &["1", "0", "1", "1", "1", "0"],
            &["0", "-1", "1", "1", "0", "a"],
            &["1", "1", "0", "0", "a", "-a"],
            &["0", "0", "0", "1", "0", "1"],
            &["0", "0", "0", "0", "1", "-1"],
            &["0", "0", "0", "1", "1", "0"],
        ],
    )
    .expect("A12 is well formed")
}

/// `M12 = M[I A12]`, certified and ranked by evaluation.
pub fn build_m12() -> Matroid {
    let cert = build_a12().certify().expect("A12 is totally near-unimodular");
    Matroid::from_certified(cert).expect("A12 labels are distinct")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::RingElement;

    #[test]
    fn displayed_entries() {
        let a = build_a12();
        assert_eq!(a.entry("b", "6").unwrap(), &RingElement::alpha());
        assert_eq!(a.entry("c", "6").unwrap(), &-RingElement::alpha());
        assert_eq!(a.entry("3", "4").unwrap(), &RingElement::one());
        assert_eq!(a.entry("b", "e").unwrap(), &RingElement::integer(-1));
    }

    #[test]
    fn m12_basics() {
        let m = build_m12();
        assert_eq!(m.size(), 12);
        assert_eq!(m.full_rank(), 6);
        assert_eq!(m.rank_of(&["a", "b", "c"]).unwrap(), 3);
        assert!(m.is_certified());
    }
}
