use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use nearreg::arith::{near_regular_factorization, parse_element, GroupFactorization, IntPolynomial, PartialField, RingElement};
use nearreg::matrix::LabeledMatrix;
use nearreg::matroid::{ElementSet, Matroid};
use nearreg::verify::random_p_matrix;

const P: u64 = 1_000_003;

fn poly() -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-4i64..=4, 0..4).prop_map(|c| IntPolynomial::from_i64s(&c))
}

fn element() -> impl Strategy<Value = RingElement> {
    (poly(), poly().prop_filter("nonzero denominator", |d| !d.is_zero()))
        .prop_map(|(n, d)| RingElement::normalize(n, d).unwrap())
}

fn unit() -> impl Strategy<Value = GroupFactorization> {
    (0u8..2, -3i64..=3, -3i64..=3).prop_map(|(sign, alpha_exp, one_minus_alpha_exp)| GroupFactorization {
        sign,
        alpha_exp,
        one_minus_alpha_exp,
    })
}

/// `r x c` matrix over `GF(p)` with `r + c ≤ 8`.
fn gf_matrix(p: u64) -> impl Strategy<Value = LabeledMatrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(move |(r, c)| {
        prop::collection::vec(prop::collection::vec(0..p as i64, c), r).prop_map(move |rows| {
            let xs: Vec<String> = (0..r).map(|i| format!("x{i}")).collect();
            let ys: Vec<String> = (0..c).map(|j| format!("y{j}")).collect();
            let entries = rows.into_iter().map(|row| row.into_iter().map(RingElement::integer).collect()).collect();
            LabeledMatrix::new(PartialField::FiniteField(p), xs, ys, entries).unwrap()
        })
    })
}

/// Rank of the columns of `[I A]` indexed by `set`, by Gaussian elimination mod `p`.
fn column_rank(a: &LabeledMatrix, set: &[String], p: u64) -> usize {
    let r = a.nrows();
    let mut cols: Vec<Vec<u64>> = set
        .iter()
        .map(|l| match a.row_index(l) {
            Some(i) => (0..r).map(|k| (k == i) as u64).collect(),
            None => {
                let j = a.col_index(l).unwrap();
                (0..r).map(|k| a.get(k, j).residue(p).unwrap()).collect()
            }
        })
        .collect();
    let mut rank = 0;
    for row in 0..r {
        let Some(piv) = (rank..cols.len()).find(|&c| cols[c][row] != 0) else {
            continue;
        };
        cols.swap(rank, piv);
        let inv = (1..p).find(|x| x * cols[rank][row] % p == 1).unwrap();
        for c in 0..cols.len() {
            if c != rank && cols[c][row] != 0 {
                let f = cols[c][row] * inv % p;
                for k in 0..r {
                    cols[c][k] = (cols[c][k] + p * p - f * cols[rank][k]) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn subset(m: &Matroid, mask: u64) -> ElementSet {
    ElementSet(mask & m.full_set().0)
}

proptest! {
    #[test]
    fn ring_operations_form_a_field(a in element(), b in element(), c in element()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn text_round_trip(a in element()) {
        prop_assert_eq!(parse_element(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn canonical_form_ignores_common_factors(n in poly(), d in poly(), k in poly()) {
        prop_assume!(!d.is_zero() && !k.is_zero());
        let mut nk = IntPolynomial::zero();
        nk.add_product(&n, &k);
        let mut dk = IntPolynomial::zero();
        dk.add_product(&d, &k);
        prop_assert_eq!(RingElement::normalize(nk, dk).unwrap(), RingElement::normalize(n, d).unwrap());
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in element(), b in element(), c in 2u64..P) {
        let ev = |x: &RingElement| x.eval_mod(P, c).ok();
        if let (Some(x), Some(y)) = (ev(&a), ev(&b)) {
            prop_assert_eq!(ev(&(&a * &b)), Some(x * y % P));
            prop_assert_eq!(ev(&(&a + &b)), Some((x + y) % P));
        }
    }

    #[test]
    fn group_factorization_round_trip(f in unit(), g in unit()) {
        let x = f.to_element();
        prop_assert_eq!(near_regular_factorization(&x), Some(f));
        prop_assert!(PartialField::NearRegular.contains(&x));
        prop_assert_eq!(&x * &g.to_element(), f.compose(&g).to_element());
    }

    #[test]
    fn non_units_are_rejected(k in 2i64..50) {
        prop_assert!(near_regular_factorization(&RingElement::integer(k)).is_none());
        let x = &RingElement::alpha() + &RingElement::integer(k);
        prop_assert!(near_regular_factorization(&x).is_none());
    }

    #[test]
    fn linear_rank_matches_elimination(a in gf_matrix(5), mask in any::<u64>()) {
        let m = Matroid::linear(a.clone()).unwrap();
        let s = subset(&m, mask);
        prop_assert_eq!(m.rank(s), column_rank(&a, &m.names(s), 5));
    }

    #[test]
    fn rank_axioms_hold(a in gf_matrix(3)) {
        prop_assert!(Matroid::linear(a).unwrap().satisfies_rank_axioms().unwrap());
    }

    #[test]
    fn duality(a in gf_matrix(7), mask in any::<u64>()) {
        let m = Matroid::linear(a).unwrap();
        let d = m.dual();
        let s = subset(&m, mask);
        let rest = s.complement(m.size());
        prop_assert_eq!(d.rank(s), s.len() + m.rank(rest) - m.full_rank());
        prop_assert!(d.dual().same_matroid(&m).unwrap());
        // connectivity is self-dual
        prop_assert_eq!(
            m.rank(s) + m.rank(rest) - m.full_rank(),
            d.rank(s) + d.rank(rest) - d.full_rank()
        );
    }

    #[test]
    fn minor_rank_formula(a in gf_matrix(5), cmask in any::<u64>(), dmask in any::<u64>(), smask in any::<u64>()) {
        let m = Matroid::linear(a).unwrap();
        let c = subset(&m, cmask);
        let d = subset(&m, dmask) - c;
        let n = m.minor(&m.names(c), &m.names(d)).unwrap();
        let s = subset(&n, smask);
        let lifted = m.set(&n.names(s)).unwrap();
        prop_assert_eq!(n.rank(s), m.rank(lifted | c) - m.rank(c));
    }

    #[test]
    fn pivoting_keeps_the_matroid(a in gf_matrix(5), pick in any::<prop::sample::Index>()) {
        let nonzero: Vec<(usize, usize)> = (0..a.nrows())
            .flat_map(|i| (0..a.ncols()).map(move |j| (i, j)))
            .filter(|&(i, j)| !a.get(i, j).is_zero())
            .collect();
        prop_assume!(!nonzero.is_empty());
        let (i, j) = nonzero[pick.index(nonzero.len())];
        let (x, y) = (a.rows()[i].clone(), a.cols()[j].clone());
        let b = a.pivot(&x, &y).unwrap();
        prop_assert_eq!(b.pivot(&y, &x).unwrap(), a.clone());
        prop_assert!(Matroid::linear(a).unwrap().same_matroid(&Matroid::linear(b).unwrap()).unwrap());
    }

    #[test]
    fn closure_is_idempotent(a in gf_matrix(3), mask in any::<u64>()) {
        let m = Matroid::linear(a).unwrap();
        let cl = m.closure(subset(&m, mask));
        prop_assert!(m.is_flat(cl));
        prop_assert_eq!(m.closure(cl), cl);
        prop_assert_eq!(m.rank(cl), m.rank(subset(&m, mask)));
    }

    #[test]
    fn near_regular_p_matrices(seed in any::<u64>()) {
        let a = random_p_matrix(&mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert!(a.is_p_matrix().verdict);
        prop_assert_eq!(LabeledMatrix::from_json(&a.to_json()).unwrap(), a.clone());
        let dual = Matroid::linear(a.negated_transpose()).unwrap();
        prop_assert!(dual.same_matroid(&Matroid::linear(a).unwrap().dual()).unwrap());
    }
}
