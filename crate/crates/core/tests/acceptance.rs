//! Acceptance suite: one line per criterion, with pinned time limits.
//!
//! Criterion 2 cannot pass as stated: the two printed automorphism
//! generators of `M12` are not automorphisms of `M[I A12]`. It is reported
//! as a failure and checked to fail in exactly that way. Criterion 8 is
//! reported but not gated.

use std::collections::{BTreeSet, VecDeque};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use nearreg::arith::{PartialField, RingElement};
use nearreg::constructions::{
    build_a12, build_m12, check_obstruction_matrix, complete_graph_rep, search_m12_signed_graph, SignedSearchOutcome,
    SIGNED_SEARCH_NODE_BOUND,
};
use nearreg::gpc::{gpc_assemble, gpc_oracle, modularity_certificate, GpcLayout};
use nearreg::graph::Graph;
use nearreg::matrix::LabeledMatrix;
use nearreg::matroid::{automorphisms, verify_isomorphism, IsoWitness, Matroid};
use nearreg::verify::m12_automorphism_generators;

struct Outcome {
    passed: bool,
    detail: String,
    /// For a known failure: whether it failed for the documented reason.
    as_documented: bool,
}

fn ok(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
        as_documented: true,
    }
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn nearreg(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_nearreg"))
        .args(args)
        .output()
        .expect("nearreg runs");
    let json = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap_or(-1), json)
}

fn check<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["checks"]
        .as_array()
        .and_then(|c| c.iter().find(|c| c["name"] == name))
        .unwrap_or(&Value::Null)
}

fn criterion_1() -> Outcome {
    let (_, report) = nearreg(&["verify-m12", "--json"]);
    let items = [
        "totally near-unimodular",
        "internally 4-connected",
        "self-dual",
        "deletion is M(K4)",
        "contraction is M(K4)",
        "triads not inherited",
    ];
    let failed: Vec<&str> = items.iter().copied().filter(|n| check(&report, n)["passed"] != true).collect();
    let scan = check(&report, "totally near-unimodular")["detail"].as_str().unwrap_or("").starts_with("924 ");
    let classes = check(&report, "internally 4-connected")["detail"].as_str().unwrap_or("").starts_with("2048 ");
    let witness = check(&report, "self-dual")["witness"]["map"].as_array().is_some_and(|m| m.len() == 12);
    ok(
        failed.is_empty() && scan && classes && witness,
        format!("six items, failing: {failed:?}; 924 submatrices: {scan}; 2048 classes: {classes}; self-duality witness: {witness}"),
    )
}

fn group_order(m: &Matroid, gens: &[IsoWitness]) -> usize {
    let perms: Vec<Vec<usize>> = gens
        .iter()
        .map(|g| m.ground().iter().map(|e| m.index(g.image(e).unwrap()).unwrap()).collect())
        .collect();
    let id: Vec<usize> = (0..m.size()).collect();
    let mut seen = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in &perms {
            let q: Vec<usize> = p.iter().map(|&i| g[i]).collect();
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    seen.len()
}

fn criterion_2() -> Outcome {
    let m = build_m12();
    let gens = m12_automorphism_generators(&m);
    let verified: Vec<bool> = gens.iter().map(|g| verify_isomorphism(&m, &m, g).unwrap()).collect();
    let generated = group_order(&m, &gens);
    let full = automorphisms(&m).unwrap();
    let mut outcome = ok(
        verified.iter().all(|&v| v) && generated == 6 && full.len() == 6,
        format!(
            "stated generators are automorphisms: {verified:?}; they generate order {generated}; full group order {} ({})",
            full.len(),
            full.iter().map(|w| w.cycle_notation()).collect::<Vec<_>>().join(" ")
        ),
    );
    outcome.as_documented = verified == [false, false] && generated == 6 && full.len() == 6;
    outcome
}

fn criterion_3() -> Outcome {
    let a12 = build_a12();
    let (x, y) = (["a", "b", "c"], ["d", "e", "f"]);
    let rep = complete_graph_rep(5, None, Some(&a12.submatrix(&x, &y).unwrap()), "g").unwrap();
    let a = gpc_assemble(&GpcLayout::from_parts(&rep.matrix, &a12, &x, &y).unwrap()).unwrap();
    let cert = a.is_p_matrix();
    let assembled = Matroid::linear(a).unwrap();
    let oracle = gpc_oracle(&Matroid::graphic(rep.graph).unwrap(), &build_m12()).unwrap();
    let mismatch = assembled.rank_difference(&oracle).unwrap();
    ok(
        cert.verdict && mismatch.is_none() && assembled.size() == 16,
        format!(
            "{} subsets compared, first mismatch {mismatch:?}; P-matrix over near-regular: {} ({} submatrices)",
            1u64 << assembled.size(),
            cert.verdict,
            cert.checked_count
        ),
    )
}

fn random_linear(rng: &mut ChaCha8Rng) -> Matroid {
    let r = rng.gen_range(2..=5);
    let rows: Vec<String> = (0..r).map(|i| format!("x{i}")).collect();
    let cols: Vec<String> = (0..8 - r).map(|j| format!("y{j}")).collect();
    let entries = (0..r)
        .map(|_| (0..8 - r).map(|_| RingElement::integer(rng.gen_range(0..5))).collect())
        .collect();
    Matroid::linear(LabeledMatrix::new(PartialField::FiniteField(5), rows, cols, entries).unwrap()).unwrap()
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut matroids = vec![
        ("M(K4)", Matroid::graphic(Graph::complete(4, |u, v| format!("{u}{v}"))).unwrap()),
        ("M(K5)", Matroid::graphic(Graph::complete(5, |u, v| format!("{u}{v}"))).unwrap()),
        ("U(2,4)", Matroid::uniform(2, 4).unwrap()),
        ("M12", build_m12()),
    ];
    for _ in 0..20 {
        matroids.push(("random", random_linear(&mut rng)));
    }
    let (mut flats, mut modular) = (0, 0);
    for (name, m) in &matroids {
        for f in m.flats().unwrap().into_iter().filter(|f| !f.is_empty()) {
            match modularity_certificate(m, f) {
                Ok(c) => {
                    flats += 1;
                    modular += c.verdict_definition as usize;
                }
                Err(e) => return ok(false, format!("{name}: {e}")),
            }
        }
    }
    ok(true, format!("{} matroids, {flats} nonempty flats ({modular} modular), all three verdicts agree", matroids.len()))
}

fn criterion_5(out: &Path) -> Outcome {
    let (code, report) = nearreg(&["build-obstruction", "--n", "5", "--out", out.to_str().unwrap(), "--json"]);
    let certs: Value = std::fs::read_to_string(out.join("certificates.json"))
        .ok()
        .and_then(|s| serde_json::from_str(&s).ok())
        .unwrap_or(Value::Null);
    let c = &certs["certificates"];
    let size = certs["elements"] == 20 && certs["rank"] == 10;
    let pmatrix = c["pmatrix"]["verdict"] == true && c["pmatrix"]["checkedCount"] == 184_756;
    let iconn = c["connectivity"]["verdict"] == "internally4Connected" && c["connectivity"]["partitionsChecked"] == 1 << 19;
    let minors = c["restrictionMPrime"] == true && c["restrictionDualG1"] == true;
    ok(
        code == 0 && report["passed"] == true && size && pmatrix && iconn && minors,
        format!(
            "exit {code}; 20 elements rank 10: {size}; 184756-submatrix scan: {pmatrix}; 2^19 classes internally 4-connected: {iconn}; M|E(M') = M' and M'*|E(K5) = M(K5): {minors}"
        ),
    )
}

fn criterion_6() -> Outcome {
    let (code, report) = nearreg(&["verify-laws", "--seed", "1", "--trials", "200", "--json"]);
    let laws: Vec<String> = report["checks"]
        .as_array()
        .map(|c| c.iter().map(|c| format!("{}={}", c["name"].as_str().unwrap_or("?"), c["passed"])).collect())
        .unwrap_or_default();
    ok(code == 0 && laws.len() == 7, format!("exit {code}; {}", laws.join(", ")))
}

fn criterion_7(obstruction: &Path) -> Outcome {
    let (code, report) = nearreg(&["verify-m12", "--matrix", data("a12_corrupted.json").to_str().unwrap(), "--json"]);
    let first = check(&report, "totally near-unimodular");
    let m12_caught = code == 1 && first["passed"] == false && first["witness"]["determinant"].is_string();
    let text = std::fs::read_to_string(obstruction.join("matrix.json")).unwrap_or_default();
    let Ok(a) = LabeledMatrix::from_json(&text) else {
        return ok(false, "obstruction matrix missing");
    };
    let v = a.entry("6", "c").unwrap().clone();
    let bad = a.with_entry("6", "c", -v).unwrap();
    let c = check_obstruction_matrix(&bad).unwrap();
    let obstruction_caught = !c.passed() && (c.pmatrix.witness.is_some() || c.connectivity.is_some_and(|s| s.witness.is_some()));
    ok(
        m12_caught && obstruction_caught,
        format!(
            "corrupted A12: witness det {}; sign-flipped obstruction entry (6, c): witness {:?}",
            first["witness"]["determinant"],
            c.pmatrix.witness.map(|w| (w.rows, w.cols, w.determinant.to_string()))
        ),
    )
}

fn criterion_8() -> Outcome {
    let search = search_m12_signed_graph(SIGNED_SEARCH_NODE_BOUND).unwrap();
    match search.outcome {
        SignedSearchOutcome::Found { graph, verified, .. } => ok(
            verified && graph.edges.len() == 12,
            format!(
                "signed graph with {} edges found after {} nodes; frame matroid = M12 verified exhaustively: {verified}",
                graph.edges.len(),
                search.nodes
            ),
        ),
        SignedSearchOutcome::Exhausted { complete, node_bound } => {
            ok(false, format!("not found; search complete: {complete}, node bound {node_bound}"))
        }
    }
}

fn main() {
    let dir = tempfile::tempdir().expect("temporary directory");
    let obstruction = dir.path().join("obstruction");
    let minutes = |m: u64| Some(Duration::from_secs(60 * m));
    let criteria: Vec<(usize, &str, Option<Duration>, Box<dyn Fn() -> Outcome>)> = vec![
        (1, "M12 checklist", minutes(1), Box::new(criterion_1)),
        (2, "M12 automorphism group", minutes(1), Box::new(criterion_2)),
        (3, "K5 glued to M12: assembled matrix equals the flats oracle", minutes(10), Box::new(criterion_3)),
        (4, "modular flats: definition equals both short-circuit tests", minutes(5), Box::new(criterion_4)),
        (5, "obstruction at n = 5", minutes(30), Box::new(|| criterion_5(&obstruction))),
        (6, "randomized law suite", minutes(5), Box::new(criterion_6)),
        (7, "negative controls", None, Box::new(|| criterion_7(&obstruction))),
        (8, "signed-graph representation of M12 (reported, not gated)", None, Box::new(criterion_8)),
    ];
    let known_failures = [2];
    let ungated = [8];
    let mut gate_failed = false;
    for (id, name, limit, run) in &criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = limit.is_none_or(|l| elapsed <= l);
        let passed = outcome.passed && in_time;
        let limit_text = limit.map_or("no limit".to_string(), |l| format!("limit {}s", l.as_secs()));
        println!(
            "[{}] criterion {id}: {name} ({:.1}s, {limit_text}): {}",
            if passed { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            outcome.detail
        );
        if known_failures.contains(id) {
            gate_failed |= passed || !in_time || !outcome.as_documented;
        } else if !ungated.contains(id) {
            gate_failed |= !passed;
        }
    }
    if gate_failed {
        eprintln!("acceptance suite failed");
        std::process::exit(1);
    }
}
