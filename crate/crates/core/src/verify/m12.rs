//! The structural checklist for `M12 = M[I A12]`.

use std::collections::{BTreeSet, VecDeque};

use serde_json::json;

use crate::constructions::build_a12;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::LabeledMatrix;
use crate::matroid::{
    automorphisms, is_isomorphic, verify_isomorphism, ConnectivityMode, ElementSet, IsoWitness, Matroid, SeparationVerdict,
};

use super::{run_check, to_value, Report};

const SMALL_SIDE: [&str; 6] = ["1", "2", "3", "4", "5", "6"];
const LETTERS: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

fn cycles_to_witness(ground: &[String], cycles: &[&[&str]]) -> IsoWitness {
    let mut map: Vec<(String, String)> = ground.iter().map(|e| (e.clone(), e.clone())).collect();
    for cycle in cycles {
        for (k, from) in cycle.iter().enumerate() {
            let to = cycle[(k + 1) % cycle.len()];
            if let Some(slot) = map.iter_mut().find(|(e, _)| e == from) {
                slot.1 = to.to_string();
            }
        }
    }
    IsoWitness { map }
}

/// `(c,e)(d,f)(1,5)(3,6)` and `(a,d)(b,e)(1,4)(2,3)` as maps on the ground set of `m`.
pub fn m12_automorphism_generators(m: &Matroid) -> [IsoWitness; 2] {
    [
        cycles_to_witness(m.ground(), &[&["c", "e"], &["d", "f"], &["1", "5"], &["3", "6"]]),
        cycles_to_witness(m.ground(), &[&["a", "d"], &["b", "e"], &["1", "4"], &["2", "3"]]),
    ]
}

fn as_perm(m: &Matroid, w: &IsoWitness) -> Option<Vec<usize>> {
    m.ground().iter().map(|e| w.image(e).and_then(|t| m.index(t))).collect()
}

/// Order of the permutation group generated by `gens`.
fn group_order(gens: &[Vec<usize>], n: usize) -> usize {
    let id: Vec<usize> = (0..n).collect();
    let mut seen = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q: Vec<usize> = p.iter().map(|&i| g[i]).collect();
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    seen.len()
}

fn k4() -> Result<Matroid> {
    Matroid::graphic(Graph::complete(4, |u, v| format!("{u}{v}")))
}

/// Runs the seven checks on `M[I a]`, with `a = A12` unless overridden.
pub fn verify_m12(matrix: Option<LabeledMatrix>) -> Report {
    let a = matrix.unwrap_or_else(build_a12);
    let mut report = Report::new("nearreg verify-m12");
    report.push(run_check("totally near-unimodular", || {
        let cert = a.is_p_matrix();
        let detail = match &cert.witness {
            None => format!("{} square submatrices checked, every determinant is 0 or in the group", cert.checked_count),
            Some(w) => format!("det of rows {:?} x cols {:?} is {}", w.rows, w.cols, w.determinant),
        };
        Ok((cert.verdict, detail, cert.witness.as_ref().and_then(to_value)))
    }));
    let m = match Matroid::linear(a.clone()) {
        Ok(m) => m,
        Err(e) => {
            report.push(run_check("matroid", || Err(e)));
            return report;
        }
    };
    report.push(run_check("internally 4-connected", || {
        let r = m.connectivity_scan(ConnectivityMode::InternallyFourConnected)?;
        let ok = r.verdict == SeparationVerdict::InternallyFourConnected;
        let detail = match &r.witness {
            None => format!("{} bipartition classes scanned, no small separation", r.partitions_checked),
            Some(s) => format!("{}-separation {:?} | {:?}", s.order(), s.side_a, s.side_b),
        };
        Ok((ok, detail, r.witness.as_ref().and_then(to_value)))
    }));
    report.push(run_check("self-dual", || {
        let dual = m.dual();
        match is_isomorphic(&m, &dual)? {
            Some(w) => {
                let ok = verify_isomorphism(&m, &dual, &w)?;
                Ok((ok, format!("M -> M* via {}", w.cycle_notation()), to_value(&w)))
            }
            None => Ok((false, "M is not isomorphic to its dual".into(), None)),
        }
    }));
    let k4_check = |name: &str, minor: Result<Matroid>, what: &'static str| {
        run_check(name, || {
            let minor = minor?;
            let k4 = k4()?;
            match is_isomorphic(&minor, &k4)? {
                Some(w) => {
                    let ok = verify_isomorphism(&minor, &k4, &w)?;
                    let pairs: Vec<String> = w.map.iter().map(|(x, y)| format!("{x}->{y}")).collect();
                    Ok((ok, format!("{what} = M(K4) via {}", pairs.join(" ")), to_value(&w)))
                }
                None => Ok((false, format!("{what} is not M(K4)"), None)),
            }
        })
    };
    report.push(k4_check("deletion is M(K4)", m.delete(&SMALL_SIDE), "M \\ {1..6}"));
    report.push(k4_check("contraction is M(K4)", m.contract(&LETTERS), "M / {a..f}"));
    report.push(run_check("triads not inherited", || {
        let n = m.delete(&SMALL_SIDE)?;
        let big: Vec<Vec<String>> = m.triads()?.into_iter().map(|t| m.names(t)).collect();
        let small: Vec<Vec<String>> = n.triads()?.into_iter().map(|t| n.names(t)).collect();
        match small.iter().find(|t| big.contains(t)) {
            None => Ok((true, format!("none of the {} triads of M \\ {{1..6}} is a triad of M", small.len()), None)),
            Some(t) => Ok((false, format!("{t:?} is a triad of both"), Some(json!(t)))),
        }
    }));
    report.push(run_check("automorphism group", || {
        let gens = m12_automorphism_generators(&m);
        let bases = m.bases()?;
        let mut broken = Vec::new();
        for g in &gens {
            let perm = as_perm(&m, g).ok_or_else(|| Error::InvalidArgument("generator leaves the ground set".into()))?;
            let moved = bases
                .iter()
                .filter(|b| !m.is_independent(b.iter().fold(ElementSet::EMPTY, |acc, i| acc.with(perm[i]))))
                .count();
            if moved > 0 {
                broken.push(format!("{} sends {moved} of {} bases to non-bases", g.cycle_notation(), bases.len()));
            }
        }
        let perms: Vec<Vec<usize>> = gens.iter().filter_map(|g| as_perm(&m, g)).collect();
        let generated = group_order(&perms, m.size());
        let group = automorphisms(&m)?;
        let ok = broken.is_empty() && generated == 6 && group.len() == 6;
        let mut detail = format!("stated generators generate a group of order {generated}; full group has order {}", group.len());
        if !broken.is_empty() {
            detail = format!("{}; {detail}", broken.join("; "));
        }
        let elements: Vec<String> = group.iter().map(|w| w.cycle_notation()).collect();
        Ok((ok, detail, Some(json!({ "brokenGenerators": broken, "automorphisms": elements }))))
    }));
    report
}
