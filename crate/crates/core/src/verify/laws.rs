//! Randomized checks of the pivoting, determinant, minor and homomorphism
//! laws on small near-regular P-matrices.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::arith::RingElement;
use crate::constructions::{build_a12, complete_graph_rep};
use crate::error::{Error, Result};
use crate::matrix::{det, det_via_pivot, LabeledMatrix};
use crate::matroid::{minor_separating_inheritance, Matroid};

use super::{run_check, CheckResult, Report};

const HOMOMORPHISMS: [(u64, u64); 3] = [(3, 2), (5, 2), (7, 3)];

fn seeds() -> Vec<LabeledMatrix> {
    let a12 = build_a12();
    let k4 = ["p", "q", "r", "s", "t", "u"].map(String::from);
    let k5 = complete_graph_rep(5, Some(&k4), None, "g").expect("K5 representation").matrix;
    let (d12, d5) = (a12.negated_transpose(), k5.negated_transpose());
    vec![a12, k5, d12, d5]
}

fn random_unit(rng: &mut ChaCha8Rng) -> RingElement {
    let a = RingElement::alpha().pow(rng.gen_range(-1..=1)).expect("alpha is a unit");
    let b = RingElement::one_minus_alpha().pow(rng.gen_range(-1..=1)).expect("1 - alpha is a unit");
    let u = &a * &b;
    if rng.gen_bool(0.5) {
        -u
    } else {
        u
    }
}

fn nonzero_positions(a: &LabeledMatrix) -> Vec<(usize, usize)> {
    (0..a.nrows())
        .flat_map(|i| (0..a.ncols()).map(move |j| (i, j)))
        .filter(|&(i, j)| !a.get(i, j).is_zero())
        .collect()
}

fn random_pivot(a: &LabeledMatrix, rng: &mut ChaCha8Rng) -> Option<(String, String)> {
    nonzero_positions(a)
        .choose(rng)
        .map(|&(i, j)| (a.rows()[i].clone(), a.cols()[j].clone()))
}

/// A nonzero near-regular P-matrix with 2 to 5 rows and columns, obtained
/// from a known P-matrix by random pivots, unit scalings and a random
/// submatrix.
pub fn random_p_matrix(rng: &mut ChaCha8Rng) -> LabeledMatrix {
    let seeds = seeds();
    loop {
        let mut a = seeds.choose(rng).expect("seed matrices").clone();
        for _ in 0..rng.gen_range(0..6) {
            let (x, y) = random_pivot(&a, rng).expect("seed matrices are nonzero");
            a = a.pivot(&x, &y).expect("nonzero pivot");
        }
        for _ in 0..rng.gen_range(0..3) {
            let u = random_unit(rng);
            a = if rng.gen_bool(0.5) {
                let r = a.rows().choose(rng).expect("rows").clone();
                a.scale_row(&r, &u)
            } else {
                let c = a.cols().choose(rng).expect("cols").clone();
                a.scale_col(&c, &u)
            }
            .expect("group scaling");
        }
        let nr = rng.gen_range(2..=a.nrows().min(5));
        let nc = rng.gen_range(2..=a.ncols().min(5));
        let rows: Vec<String> = a.rows().choose_multiple(rng, nr).cloned().collect();
        let cols: Vec<String> = a.cols().choose_multiple(rng, nc).cloned().collect();
        let sub = a.submatrix(&rows, &cols).expect("labels exist");
        if !sub.is_zero() {
            return sub;
        }
    }
}

struct Law {
    name: &'static str,
    failure: Option<serde_json::Value>,
    elapsed: Duration,
}

impl Law {
    fn new(name: &'static str) -> Self {
        Law {
            name,
            failure: None,
            elapsed: Duration::ZERO,
        }
    }

    fn record(&mut self, trial: usize, a: &LabeledMatrix, check: impl FnOnce() -> Result<Option<String>>) {
        let start = Instant::now();
        let outcome = check();
        self.elapsed += start.elapsed();
        if self.failure.is_some() {
            return;
        }
        let reason = match outcome {
            Ok(None) => return,
            Ok(Some(reason)) => reason,
            Err(e) => format!("error: {e}"),
        };
        self.failure = Some(json!({
            "trial": trial,
            "reason": reason,
            "matrix": serde_json::to_value(a).expect("matrix serializes"),
        }));
    }

    fn finish(self, trials: usize) -> CheckResult {
        let mut check = run_check(self.name, || {
            Ok(match self.failure {
                None => (true, format!("{trials}/{trials} trials"), None),
                Some(w) => (false, format!("failed at trial {}: {}", w["trial"], w["reason"].as_str().unwrap_or("")), Some(w)),
            })
        });
        check.elapsed = self.elapsed;
        check
    }
}

fn check_involution(a: &LabeledMatrix, x: &str, y: &str) -> Result<Option<String>> {
    let back = a.pivot(x, y)?.pivot(y, x)?;
    Ok((back != *a).then(|| format!("pivoting twice on ({x}, {y}) changed the matrix")))
}

fn check_pivot_preserves(a: &LabeledMatrix, x: &str, y: &str) -> Result<Option<String>> {
    let b = a.pivot(x, y)?;
    let cert = b.is_p_matrix();
    if !cert.verdict {
        return Ok(Some(format!("pivot on ({x}, {y}) is not a P-matrix: {:?}", cert.witness)));
    }
    let same = Matroid::linear(a.clone())?.same_matroid(&Matroid::linear(b)?)?;
    Ok((!same).then(|| format!("pivot on ({x}, {y}) changed the matroid")))
}

fn check_det_pivot(a: &LabeledMatrix, rng: &mut ChaCha8Rng) -> Result<Option<String>> {
    let &(i, j) = nonzero_positions(a).choose(rng).expect("matrix is nonzero");
    let k = rng.gen_range(1..=a.nrows().min(a.ncols()));
    let pick = |labels: &[String], keep: usize, rng: &mut ChaCha8Rng| -> Vec<String> {
        let mut others: Vec<String> = labels.iter().filter(|l| **l != labels[keep]).cloned().collect();
        others.shuffle(rng);
        labels.iter().filter(|l| **l == labels[keep] || others[..k - 1].contains(l)).cloned().collect()
    };
    let rows = pick(a.rows(), i, rng);
    let cols = pick(a.cols(), j, rng);
    let s = a.submatrix(&rows, &cols)?;
    let (x, y) = (&a.rows()[i], &a.cols()[j]);
    let lhs = det(&s)?;
    let rhs = det_via_pivot(&s, x, y)?;
    Ok((lhs != rhs).then(|| format!("det {lhs} but pivot formula gives {rhs} on rows {rows:?} cols {cols:?}")))
}

fn check_inheritance(a: &LabeledMatrix, rng: &mut ChaCha8Rng) -> Result<Option<String>> {
    let m = Matroid::linear(a.clone())?;
    let (mut contract, mut delete) = (Vec::new(), Vec::new());
    for e in m.ground() {
        match rng.gen_range(0..4) {
            0 => contract.push(e.clone()),
            1 => delete.push(e.clone()),
            _ => {}
        }
    }
    let n = m.minor(&contract, &delete)?;
    for k in 1..=3 {
        if let Some((x, y)) = minor_separating_inheritance(&m, &n, k)? {
            return Ok(Some(format!("{k}-separating partition restricts to {x:?} | {y:?}, not {k}-separating")));
        }
    }
    Ok(None)
}

fn check_homomorphism(a: &LabeledMatrix, p: u64, c: u64) -> Result<Option<String>> {
    let m = Matroid::linear(a.clone())?;
    let image = Matroid::linear(a.eval_hom(p, c)?)?;
    Ok((!m.same_matroid(&image)?).then(|| format!("M[I A] differs from its image under alpha -> {c} in GF({p})")))
}

/// Runs each law on `trials` random P-matrices drawn from `seed`.
pub fn verify_laws(seed: u64, trials: usize) -> Result<Report> {
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut involution = Law::new("pivot involution");
    let mut preserves = Law::new("pivot preserves matroid and P-matrix");
    let mut det_pivot = Law::new("determinant pivot identity");
    let mut inheritance = Law::new("k-separating inheritance to minors");
    let mut homs: Vec<Law> = vec![
        Law::new("homomorphism invariance (p=3, c=2)"),
        Law::new("homomorphism invariance (p=5, c=2)"),
        Law::new("homomorphism invariance (p=7, c=3)"),
    ];
    for t in 0..trials {
        let a = random_p_matrix(&mut rng);
        let (x, y) = random_pivot(&a, &mut rng).expect("nonzero matrix");
        involution.record(t, &a, || check_involution(&a, &x, &y));
        preserves.record(t, &a, || check_pivot_preserves(&a, &x, &y));
        det_pivot.record(t, &a, || check_det_pivot(&a, &mut rng));
        inheritance.record(t, &a, || check_inheritance(&a, &mut rng));
        for (law, &(p, c)) in homs.iter_mut().zip(&HOMOMORPHISMS) {
            law.record(t, &a, || check_homomorphism(&a, p, c));
        }
    }
    let mut report = Report::new(format!("nearreg verify-laws --seed {seed} --trials {trials}"));
    for law in [involution, preserves, det_pivot, inheritance].into_iter().chain(homs) {
        report.push(law.finish(trials));
    }
    Ok(report)
}
