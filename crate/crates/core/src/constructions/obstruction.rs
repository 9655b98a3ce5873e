//! An internally 4-connected near-regular matroid with `M(K_n)` and
//! `M(K_n)*` minors, built by two generalized parallel connections with
//! `M12` in the middle.
//!
//! 1. Represent `M(G1)`, `G1 = K_n`, with a `K4` labelled so that its block
//!    equals `A12[{a,b,c},{d,e,f}]`, and glue it to `A12` (rows
//!    `X1, a b c, 1 2 3`).
//! 2. Dualize with `-Aᵀ` to get `M'`, and display a basis containing a basis
//!    of `M'|{1,…,6}`, which is again `M(K4)`.
//! 3. Represent `M(G2)`, `G2 = K_n`, aligned to that `{1,…,6}` block and
//!    glue it to `M'`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gpc::{display_basis, gpc_assemble, gpc_oracle, GpcLayout};
use crate::graph::{Graph, GraphSpec};
use crate::matrix::{CertifiedPMatrix, LabeledMatrix, PMatrixCertificate};
use crate::matroid::{is_isomorphic, ConnectivityMode, ElementSet, Matroid, SeparationReport, SeparationVerdict};

use super::a12::{build_a12, build_m12};
use super::complete::complete_graph_rep;

/// Random subsets compared on the last gluing step, besides all subsets
/// with at most four elements or at most four elements missing.
pub const ORACLE_SAMPLES: usize = 100_000;
const ORACLE_SEED: u64 = 0x004d_3132;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct OracleEquality {
    pub subsets_compared: u64,
    pub exhaustive: bool,
    pub mismatch: Option<Vec<String>>,
}

impl OracleEquality {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ObstructionCertificates {
    /// The first glued matrix.
    pub intermediate_pmatrix: PMatrixCertificate,
    pub first_oracle: OracleEquality,
    /// `M'|{1,…,6} ≅ M(K4)`.
    pub shared_k4_after_dual: bool,
    pub pmatrix: PMatrixCertificate,
    pub connectivity: SeparationReport,
    pub second_oracle: OracleEquality,
    /// `M|E(M') = M'`.
    pub restriction_m_prime: bool,
    /// `(M')*|E(G1) = M(G1)`.
    pub restriction_dual_g1: bool,
    /// `M|E(G2) = M(G2)`.
    pub restriction_g2: bool,
}

impl ObstructionCertificates {
    pub fn all_passed(&self) -> bool {
        self.intermediate_pmatrix.verdict
            && self.first_oracle.passed()
            && self.shared_k4_after_dual
            && self.pmatrix.verdict
            && self.connectivity.verdict == SeparationVerdict::InternallyFourConnected
            && self.second_oracle.passed()
            && self.restriction_m_prime
            && self.restriction_dual_g1
            && self.restriction_g2
    }
}

#[derive(Clone, Debug)]
pub struct ObstructionResult {
    pub n: usize,
    pub matroid: Matroid,
    pub matrix: LabeledMatrix,
    pub g1: Graph,
    pub g2: Graph,
    pub m_prime: Matroid,
    pub certificates: ObstructionCertificates,
}

/// Serializable digest written next to the matrix.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ObstructionSummary {
    pub n: usize,
    pub elements: usize,
    pub rank: usize,
    pub ground: Vec<String>,
    pub g1: GraphSpec,
    pub g2: GraphSpec,
    pub m_prime_elements: Vec<String>,
    pub certificates: ObstructionCertificates,
    pub all_passed: bool,
}

impl ObstructionResult {
    pub fn summary(&self) -> ObstructionSummary {
        ObstructionSummary {
            n: self.n,
            elements: self.matroid.size(),
            rank: self.matroid.full_rank(),
            ground: self.matroid.ground().to_vec(),
            g1: (&self.g1).into(),
            g2: (&self.g2).into(),
            m_prime_elements: self.m_prime.ground().to_vec(),
            certificates: self.certificates.clone(),
            all_passed: self.certificates.all_passed(),
        }
    }
}

fn certificate_error<T: Serialize>(what: &str, cert: &T) -> Error {
    Error::Certificate(format!(
        "{what}: {}",
        serde_json::to_string(cert).expect("certificates serialize")
    ))
}

/// Greedy basis of `target` preferring `preferred` elements, extended
/// greedily (again preferring) to a basis of `m`.
fn nested_basis(m: &Matroid, target: ElementSet, preferred: ElementSet) -> ElementSet {
    let mut basis = ElementSet::EMPTY;
    let order = |pool: ElementSet| -> Vec<usize> {
        (pool & preferred).iter().chain((pool - preferred).iter()).collect()
    };
    for pool in [target, m.full_set()] {
        for e in order(pool) {
            if !basis.contains(e) && m.is_independent(basis.with(e)) {
                basis = basis.with(e);
            }
        }
    }
    basis
}

fn exhaustive_equality(m: &Matroid, oracle: &Matroid) -> Result<OracleEquality> {
    Ok(OracleEquality {
        subsets_compared: 1 << m.size(),
        exhaustive: true,
        mismatch: m.rank_difference(oracle)?,
    })
}

fn sampled_equality(m: &Matroid, oracle: &Matroid, samples: usize) -> Result<OracleEquality> {
    if m.ground() != oracle.ground() {
        return Err(Error::InvalidArgument("ground sets differ".into()));
    }
    let n = m.size();
    let full = m.full_set().0;
    let mut masks: Vec<u64> = (0..1u64 << n)
        .filter(|s| {
            let k = s.count_ones() as usize;
            k <= 4 || k + 4 >= n
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(ORACLE_SEED);
    masks.extend((0..samples).map(|_| rng.gen::<u64>() & full));
    let mismatch = masks
        .par_iter()
        .find_first(|&&s| m.rank(ElementSet(s)) != oracle.rank(ElementSet(s)))
        .map(|&s| m.names(ElementSet(s)));
    Ok(OracleEquality {
        subsets_compared: masks.len() as u64,
        exhaustive: false,
        mismatch,
    })
}

pub fn build_obstruction(n: usize) -> Result<ObstructionResult> {
    build_obstruction_with(n, &|_| {})
}

/// As [`build_obstruction`], reporting each stage through `progress`.
pub fn build_obstruction_with(n: usize, progress: &(dyn Fn(&str) + Sync)) -> Result<ObstructionResult> {
    if n < 5 {
        return Err(Error::InvalidArgument("n must be at least 5".into()));
    }
    let a12 = build_a12();
    let m12 = build_m12();
    let (x, y) = (["a", "b", "c"], ["d", "e", "f"]);

    progress("gluing M(K_n) to M12");
    let rep1 = complete_graph_rep(n, None, Some(&a12.submatrix(&x, &y)?), "g")?;
    let first = gpc_assemble(&GpcLayout::from_parts(&rep1.matrix, &a12, &x, &y)?)?;
    let intermediate_pmatrix = first.is_p_matrix();
    if !intermediate_pmatrix.verdict {
        return Err(certificate_error("first glued matrix", &intermediate_pmatrix));
    }
    let p1 = Matroid::from_certified(CertifiedPMatrix::derived(first.clone()))?;
    let g1 = Matroid::graphic(rep1.graph.clone())?;
    progress("comparing the first gluing with the flats oracle");
    let first_oracle = exhaustive_equality(&p1, &gpc_oracle(&g1, &m12)?)?;
    if !first_oracle.passed() {
        return Err(certificate_error("first oracle comparison", &first_oracle));
    }

    progress("dualizing");
    let dual_rep = first.negated_transpose();
    let m_prime = Matroid::from_certified(CertifiedPMatrix::derived(dual_rep.clone()))?;
    let six = ["1", "2", "3", "4", "5", "6"];
    let shared = m_prime.set(&six)?;
    let shown = m_prime.set(dual_rep.rows())?;
    let basis = nested_basis(&m_prime, shared, shown);
    let displayed = display_basis(&dual_rep, &m_prime.names(basis))?;
    let x2: Vec<String> = displayed.rows().iter().filter(|l| six.contains(&l.as_str())).cloned().collect();
    let y2: Vec<String> = displayed.cols().iter().filter(|l| six.contains(&l.as_str())).cloned().collect();
    let k4 = Matroid::graphic(Graph::complete(4, |u, v| format!("{u}{v}")))?;
    let shared_k4_after_dual = is_isomorphic(&m_prime.restrict(&six)?, &k4)?.is_some();
    if !shared_k4_after_dual {
        return Err(Error::Certificate("M'|{1,...,6} is not M(K4)".into()));
    }

    progress("gluing a second M(K_n)");
    let rep2 = complete_graph_rep(n, None, Some(&displayed.submatrix(&x2, &y2)?), "h")?;
    let a = gpc_assemble(&GpcLayout::from_parts(&rep2.matrix, &displayed, &x2, &y2)?)?;
    progress("scanning all square submatrices");
    let pmatrix = a.is_p_matrix();
    if !pmatrix.verdict {
        return Err(certificate_error("final matrix", &pmatrix));
    }
    let m = Matroid::from_certified(CertifiedPMatrix::derived(a.clone()))?;
    progress("scanning all bipartitions");
    let connectivity = m.connectivity_scan(ConnectivityMode::InternallyFourConnected)?;
    let g2 = Matroid::graphic(rep2.graph.clone())?;
    progress("comparing the second gluing with the flats oracle");
    let second_oracle = sampled_equality(&m, &gpc_oracle(&g2, &m_prime)?, ORACLE_SAMPLES)?;
    progress("checking restrictions");
    let restriction_m_prime = m.restrict(m_prime.ground())?.same_matroid(&m_prime)?;
    let restriction_dual_g1 = m_prime.dual().restrict(g1.ground())?.same_matroid(&g1)?;
    let restriction_g2 = m.restrict(g2.ground())?.same_matroid(&g2)?;

    let certificates = ObstructionCertificates {
        intermediate_pmatrix,
        first_oracle,
        shared_k4_after_dual,
        pmatrix,
        connectivity,
        second_oracle,
        restriction_m_prime,
        restriction_dual_g1,
        restriction_g2,
    };
    if !certificates.all_passed() {
        return Err(certificate_error("obstruction", &certificates));
    }
    Ok(ObstructionResult {
        n,
        matroid: m,
        matrix: a,
        g1: rep1.graph,
        g2: rep2.graph,
        m_prime,
        certificates,
    })
}

/// Certificates for a matrix claimed to represent the obstruction: the
/// P-matrix scan and, when that passes, the connectivity scan.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MatrixCheck {
    pub pmatrix: PMatrixCertificate,
    pub connectivity: Option<SeparationReport>,
}

impl MatrixCheck {
    pub fn passed(&self) -> bool {
        self.pmatrix.verdict
            && self
                .connectivity
                .as_ref()
                .is_some_and(|c| c.verdict == SeparationVerdict::InternallyFourConnected)
    }
}

pub fn check_obstruction_matrix(a: &LabeledMatrix) -> Result<MatrixCheck> {
    let pmatrix = a.is_p_matrix();
    let connectivity = if pmatrix.verdict {
        let m = Matroid::from_certified(CertifiedPMatrix::derived(a.clone()))?;
        Some(m.connectivity_scan(ConnectivityMode::InternallyFourConnected)?)
    } else {
        None
    };
    Ok(MatrixCheck { pmatrix, connectivity })
}
