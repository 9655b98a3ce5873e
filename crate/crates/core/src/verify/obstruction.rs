//! Builds the obstruction and writes `matrix.json` and `certificates.json`.

use std::fs;
use std::path::Path;

use crate::constructions::build_obstruction_with;
use crate::error::Result;
use crate::matroid::SeparationVerdict;

use super::{run_check, to_value, Report};

pub fn write_obstruction(n: usize, out: &Path, progress: &(dyn Fn(&str) + Sync)) -> Result<Report> {
    let result = build_obstruction_with(n, progress)?;
    let summary = result.summary();
    fs::create_dir_all(out)?;
    fs::write(out.join("matrix.json"), result.matrix.to_json() + "\n")?;
    fs::write(
        out.join("certificates.json"),
        serde_json::to_string_pretty(&summary).expect("summary serializes") + "\n",
    )?;

    let c = &summary.certificates;
    let mut report = Report::new(format!("nearreg build-obstruction --n {n} --out {}", out.display()));
    report.push(run_check("size", || {
        Ok((true, format!("{} elements, rank {}", summary.elements, summary.rank), None))
    }));
    report.push(run_check("first gluing is a P-matrix", || {
        let p = &c.intermediate_pmatrix;
        Ok((p.verdict, format!("{} square submatrices", p.checked_count), to_value(p)))
    }));
    report.push(run_check("first gluing matches the flats oracle", || {
        let o = &c.first_oracle;
        Ok((o.passed(), format!("{} subsets compared (exhaustive)", o.subsets_compared), to_value(o)))
    }));
    report.push(run_check("shared M(K4) survives dualizing", || {
        Ok((c.shared_k4_after_dual, "M'|{1,...,6} = M(K4)".into(), None))
    }));
    report.push(run_check("P-matrix", || {
        let p = &c.pmatrix;
        Ok((p.verdict, format!("{} square submatrices", p.checked_count), to_value(p)))
    }));
    report.push(run_check("internally 4-connected", || {
        let s = &c.connectivity;
        let ok = s.verdict == SeparationVerdict::InternallyFourConnected;
        Ok((ok, format!("{} bipartition classes", s.partitions_checked), to_value(s)))
    }));
    report.push(run_check("second gluing matches the flats oracle", || {
        let o = &c.second_oracle;
        Ok((o.passed(), format!("{} subsets compared (sampled)", o.subsets_compared), to_value(o)))
    }));
    report.push(run_check("M|E(M') = M'", || Ok((c.restriction_m_prime, "rank oracles agree".into(), None))));
    report.push(run_check("(M')*|E(G1) = M(G1)", || Ok((c.restriction_dual_g1, "rank oracles agree".into(), None))));
    report.push(run_check("M|E(G2) = M(G2)", || Ok((c.restriction_g2, "rank oracles agree".into(), None))));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn writes_deterministic_files() {
        let dir = tempfile::tempdir().unwrap();
        let r = write_obstruction(5, &dir.path().join("one"), &|_| {}).unwrap();
        assert!(r.passed(), "{}", r.to_text(false));
        write_obstruction(5, &dir.path().join("two"), &|_| {}).unwrap();
        for f in ["matrix.json", "certificates.json"] {
            let a = fs::read(dir.path().join("one").join(f)).unwrap();
            let b = fs::read(dir.path().join("two").join(f)).unwrap();
            assert_eq!(a, b, "{f}");
        }
    }
}
