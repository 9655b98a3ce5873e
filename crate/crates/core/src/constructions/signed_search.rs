//! Search for a signed graph whose frame matroid is `M12`.
//!
//! `M12` is ternary, so all its `GF(3)` representations are projectively
//! equivalent to `[I φ(A12)]` with `φ(α) = 2`. A signed-graphic
//! representation is therefore six independent vectors of the row space of
//! `[I φ(A12)]` with at most two nonzeros in each column. Vectors are taken
//! up to sign, ordered by support size, and combined by backtracking.

use serde::Serialize;

use crate::error::Result;
use crate::graph::{Graph, SignedGraph, SignedGraphSpec};
use crate::matrix::modp::rank_mod_p;
use crate::matroid::{verify_isomorphism, IsoWitness};

use super::a12::build_a12;
use super::signed::signed_graph_matroid;

/// Default cap on backtracking nodes.
pub const SIGNED_SEARCH_NODE_BOUND: u64 = 50_000_000;

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum SignedSearchOutcome {
    Found {
        graph: SignedGraphSpec,
        witness: IsoWitness,
        verified: bool,
    },
    Exhausted {
        complete: bool,
        node_bound: u64,
    },
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SignedSearch {
    pub candidate_vectors: usize,
    pub nodes: u64,
    pub outcome: SignedSearchOutcome,
}

struct Search {
    vectors: Vec<Vec<u8>>,
    width: usize,
    bound: u64,
    nodes: u64,
    chosen: Vec<usize>,
    counts: Vec<u8>,
}

impl Search {
    fn independent(&self, extra: usize) -> bool {
        let rows = self.chosen.len() + 1;
        let mut m: Vec<u32> = self
            .chosen
            .iter()
            .chain(std::iter::once(&extra))
            .flat_map(|&i| self.vectors[i].iter().map(|&x| x as u32))
            .collect();
        rank_mod_p(&mut m, rows, self.width, 3) == rows
    }

    fn run(&mut self, start: usize) -> Option<Vec<usize>> {
        if self.chosen.len() == 6 {
            return Some(self.chosen.clone());
        }
        for i in start..self.vectors.len() {
            self.nodes += 1;
            if self.nodes > self.bound {
                return None;
            }
            let v = &self.vectors[i];
            if v.iter().zip(&self.counts).any(|(&x, &c)| x != 0 && c == 2) || !self.independent(i) {
                continue;
            }
            for (c, &x) in self.counts.iter_mut().zip(&self.vectors[i]) {
                *c += (x != 0) as u8;
            }
            self.chosen.push(i);
            if let Some(found) = self.run(i + 1) {
                return Some(found);
            }
            self.chosen.pop();
            for (c, &x) in self.counts.iter_mut().zip(&self.vectors[i]) {
                *c -= (x != 0) as u8;
            }
        }
        None
    }
}

pub fn search_m12_signed_graph(node_bound: u64) -> Result<SignedSearch> {
    let a = build_a12().eval_hom(3, 2)?;
    let labels: Vec<String> = a.rows().iter().chain(a.cols()).cloned().collect();
    let width = labels.len();
    let r = a.nrows();
    // [I A] row by row
    let base: Vec<Vec<u8>> = (0..r)
        .map(|i| {
            let mut row = vec![0u8; width];
            row[i] = 1;
            for j in 0..a.ncols() {
                row[r + j] = a.get(i, j).residue(3).expect("GF(3) entry") as u8;
            }
            row
        })
        .collect();
    let mut vectors: Vec<Vec<u8>> = Vec::new();
    for code in 1..3usize.pow(r as u32) {
        let coeffs: Vec<u8> = (0..r).map(|i| (code / 3usize.pow(i as u32) % 3) as u8).collect();
        // one representative per sign class: first nonzero coefficient is 1
        if coeffs.iter().find(|&&c| c != 0) != Some(&1) {
            continue;
        }
        let v: Vec<u8> = (0..width)
            .map(|j| (0..r).map(|i| coeffs[i] as u32 * base[i][j] as u32).sum::<u32>() as u8 % 3)
            .collect();
        vectors.push(v);
    }
    let support = |v: &Vec<u8>| v.iter().filter(|&&x| x != 0).count();
    let smin = vectors.iter().map(support).min().unwrap_or(0);
    // six rows share at most two nonzeros per column
    let cap = 2 * width - (r - 1) * smin;
    vectors.retain(|v| support(v) <= cap);
    vectors.sort_by(|x, y| support(x).cmp(&support(y)).then_with(|| x.cmp(y)));
    let mut search = Search {
        vectors,
        width,
        bound: node_bound,
        nodes: 0,
        chosen: Vec::new(),
        counts: vec![0; width],
    };
    let found = search.run(0);
    let candidate_vectors = search.vectors.len();
    let Some(rows) = found else {
        return Ok(SignedSearch {
            candidate_vectors,
            nodes: search.nodes,
            outcome: SignedSearchOutcome::Exhausted {
                complete: search.nodes <= node_bound,
                node_bound,
            },
        });
    };

    let vertices: Vec<String> = (1..=r).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::new();
    let mut signs = Vec::new();
    for (j, label) in labels.iter().enumerate() {
        let nz: Vec<(usize, u8)> = rows
            .iter()
            .enumerate()
            .filter_map(|(k, &i)| (search.vectors[i][j] != 0).then_some((k, search.vectors[i][j])))
            .collect();
        match nz.as_slice() {
            [(u, _)] => {
                edges.push((vertices[*u].clone(), vertices[*u].clone(), label.clone()));
                signs.push(-1);
            }
            [(u, xu), (v, xv)] => {
                // scale the column to +1 at u; then -1 at v means positive
                let ratio = (*xv as u32 * *xu as u32) % 3;
                edges.push((vertices[*u].clone(), vertices[*v].clone(), label.clone()));
                signs.push(if ratio == 2 { 1 } else { -1 });
            }
            _ => unreachable!("independent rows span the row space, so no column is zero"),
        }
    }
    let graph = SignedGraph::new(Graph::new(vertices, &edges)?, signs)?;
    let frame = signed_graph_matroid(&graph)?;
    let m12 = super::a12::build_m12();
    let witness = IsoWitness {
        map: m12.ground().iter().map(|e| (e.clone(), e.clone())).collect(),
    };
    let verified = verify_isomorphism(&frame, &m12, &witness)?;
    Ok(SignedSearch {
        candidate_vectors,
        nodes: search.nodes,
        outcome: SignedSearchOutcome::Found {
            graph: (&graph).into(),
            witness,
            verified,
        },
    })
}
