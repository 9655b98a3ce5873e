//! Single-purpose checks on matrix and matroid files.

use std::fs;
use std::path::Path;

use serde_json::json;

use crate::error::{Error, Result};
use crate::gpc::modularity_certificate;
use crate::matrix::LabeledMatrix;
use crate::matroid::{is_isomorphic, verify_isomorphism, ConnectivityMode, Matroid, MatroidSpec, SeparationVerdict};

use super::{run_check, to_value, Report};

/// A matrix file, or a matroid file of the form `{"linear": ...}`.
pub fn load_matrix(path: &Path) -> Result<LabeledMatrix> {
    let text = fs::read_to_string(path)?;
    match LabeledMatrix::from_json(&text) {
        Ok(a) => Ok(a),
        Err(e) => match serde_json::from_str::<MatroidSpec>(&text) {
            Ok(MatroidSpec::Linear(a)) => Ok(a),
            _ => Err(e),
        },
    }
}

/// A matroid file, or a bare matrix file read as `M[I A]`.
pub fn load_matroid(path: &Path) -> Result<Matroid> {
    let text = fs::read_to_string(path)?;
    match serde_json::from_str::<MatroidSpec>(&text) {
        Ok(spec) => spec.build(),
        Err(e) => match LabeledMatrix::from_json(&text) {
            Ok(a) => MatroidSpec::Linear(a).build(),
            Err(_) => Err(Error::Json(e)),
        },
    }
}

fn command(kind: &str, paths: &[&Path], extra: &str) -> String {
    let files: Vec<String> = paths.iter().map(|p| p.display().to_string()).collect();
    format!("nearreg check {kind} {}{extra}", files.join(" "))
}

pub fn check_pmatrix(paths: &[&Path]) -> Result<Report> {
    let mut report = Report::new(command("pmatrix", paths, ""));
    for path in paths {
        let a = load_matrix(path)?;
        report.push(run_check(&format!("P-matrix {}", path.display()), || {
            let cert = a.is_p_matrix();
            let detail = match &cert.witness {
                None => format!("over {}: {} square submatrices", a.field().name(), cert.checked_count),
                Some(w) => format!("det of rows {:?} x cols {:?} is {}", w.rows, w.cols, w.determinant),
            };
            Ok((cert.verdict, detail, cert.witness.as_ref().and_then(to_value)))
        }));
    }
    Ok(report)
}

pub fn check_iconn4(paths: &[&Path]) -> Result<Report> {
    let mut report = Report::new(command("iconn4", paths, ""));
    for path in paths {
        let m = load_matroid(path)?;
        report.push(run_check(&format!("internally 4-connected {}", path.display()), || {
            let r = m.connectivity_scan(ConnectivityMode::InternallyFourConnected)?;
            let ok = r.verdict == SeparationVerdict::InternallyFourConnected;
            let detail = match &r.witness {
                None => format!("{} elements, {} bipartition classes", m.size(), r.partitions_checked),
                Some(s) => format!("{}-separation {:?} | {:?}", s.order(), s.side_a, s.side_b),
            };
            Ok((ok, detail, r.witness.as_ref().and_then(to_value)))
        }));
    }
    Ok(report)
}

/// With a flat: whether it is modular, by the definition and by both
/// short-circuit conditions. Without: that the three tests agree on every
/// nonempty flat.
pub fn check_modular<S: AsRef<str>>(path: &Path, flat: Option<&[S]>) -> Result<Report> {
    let m = load_matroid(path)?;
    match flat {
        Some(flat) => {
            let names: Vec<&str> = flat.iter().map(|s| s.as_ref()).collect();
            let x = m.set(&names)?;
            let mut report = Report::new(command("modular", &[path], &format!(" --flat {}", names.join(","))));
            report.push(run_check("modular flat", || {
                let cert = modularity_certificate(&m, x)?;
                let detail = format!(
                    "definition {}, short-circuit (ii) {}, short-circuit (iii) {}",
                    cert.verdict_definition, cert.verdict_short_circuit2, cert.verdict_short_circuit3
                );
                Ok((cert.verdict_definition, detail, cert.witness.as_ref().and_then(to_value)))
            }));
            Ok(report)
        }
        None => {
            let mut report = Report::new(command("modular", &[path], ""));
            report.push(run_check("modularity tests agree", || {
                let flats = m.flats()?;
                let mut modular = 0;
                let mut checked = 0;
                for f in flats.into_iter().filter(|f| !f.is_empty()) {
                    checked += 1;
                    modular += modularity_certificate(&m, f)?.verdict_definition as usize;
                }
                Ok((true, format!("{checked} nonempty flats, {modular} modular"), None))
            }));
            Ok(report)
        }
    }
}

pub fn check_iso(first: &Path, second: &Path) -> Result<Report> {
    let m1 = load_matroid(first)?;
    let m2 = load_matroid(second)?;
    let mut report = Report::new(command("iso", &[first, second], ""));
    report.push(run_check("isomorphic", || match is_isomorphic(&m1, &m2)? {
        Some(w) => {
            let ok = verify_isomorphism(&m1, &m2, &w)?;
            let pairs: Vec<String> = w.map.iter().map(|(x, y)| format!("{x}->{y}")).collect();
            Ok((ok, pairs.join(" "), to_value(&w)))
        }
        None => Ok((false, "no isomorphism".into(), None)),
    }));
    Ok(report)
}

/// Rank of `set`, or of the ground set when absent.
pub fn check_rank<S: AsRef<str>>(path: &Path, set: Option<&[S]>) -> Result<Report> {
    let m = load_matroid(path)?;
    let names: Vec<String> = match set {
        Some(s) => s.iter().map(|x| x.as_ref().to_string()).collect(),
        None => m.ground().to_vec(),
    };
    let s = m.set(&names)?;
    let extra = set.map(|_| format!(" --set {}", names.join(","))).unwrap_or_default();
    let mut report = Report::new(command("rank", &[path], &extra));
    report.push(run_check("rank", || {
        let r = m.rank(s);
        Ok((true, r.to_string(), Some(json!({ "set": names, "rank": r }))))
    }));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_a12, build_m12};

    fn write(dir: &Path, name: &str, text: &str) -> std::path::PathBuf {
        let p = dir.join(name);
        fs::write(&p, text).unwrap();
        p
    }

    #[test]
    fn matrix_and_matroid_files() {
        let dir = tempfile::tempdir().unwrap();
        let a = write(dir.path(), "a12.json", &build_a12().to_json());
        let m = write(dir.path(), "m12.json", &build_m12().to_json().unwrap());
        assert!(check_pmatrix(&[&a, &m]).unwrap().passed());
        assert!(check_iconn4(&[&m]).unwrap().passed());
        let r = check_rank(&m, Some(&["a", "b", "c"])).unwrap();
        assert_eq!(r.checks[0].detail, "3");
        assert!(check_iso(&a, &m).unwrap().passed());
        assert!(matches!(check_rank(&m, Some(&["zz"])), Err(Error::UnknownLabel(_))));
    }

    #[test]
    fn modular_flats() {
        let dir = tempfile::tempdir().unwrap();
        let k5 = r#"{"graphic": {"vertices": 5, "edges": [["0","1","01"],["0","2","02"],["0","3","03"],["0","4","04"],["1","2","12"],["1","3","13"],["1","4","14"],["2","3","23"],["2","4","24"],["3","4","34"]]}}"#;
        let p = write(dir.path(), "k5.json", k5);
        let r = check_modular(&p, Some(&["01", "02", "03", "12", "13", "23"])).unwrap();
        assert!(r.passed());
        let r = check_modular(&p, Some(&["01", "23"])).unwrap();
        assert!(!r.passed());
        assert!(check_modular::<&str>(&p, None).unwrap().passed());
    }

    #[test]
    fn garbage_is_a_parse_error() {
        let dir = tempfile::tempdir().unwrap();
        let p = write(dir.path(), "bad.json", "{\"nonsense\": 1}");
        assert!(matches!(load_matroid(&p), Err(Error::Json(_))));
    }
}
