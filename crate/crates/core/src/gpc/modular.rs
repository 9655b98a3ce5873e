//! Modular flats: by definition and by the two short-circuit conditions.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matroid::{ElementSet, Matroid};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum ModularWitness {
    NotAFlat,
    /// A flat `F` with `r(X) + r(F) != r(X ∪ F) + r(X ∩ F)`.
    Flat(Vec<String>),
    /// A circuit leaving `X` with no `x ∈ X` making `(C \ X) ∪ x` dependent.
    Circuit(Vec<String>),
    /// A circuit `C` and `e ∈ C \ X` with no `f ∈ X` placing `e` in a
    /// circuit inside `(C \ X) ∪ f`.
    CircuitElement { circuit: Vec<String>, element: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ModularCheck {
    pub modular: bool,
    pub witness: Option<ModularWitness>,
}

impl ModularCheck {
    fn pass() -> Self {
        ModularCheck {
            modular: true,
            witness: None,
        }
    }

    fn fail(w: ModularWitness) -> Self {
        ModularCheck {
            modular: false,
            witness: Some(w),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ModularityCertificate {
    pub flat: Vec<String>,
    pub verdict_definition: bool,
    pub verdict_short_circuit2: bool,
    pub verdict_short_circuit3: bool,
    pub witness: Option<ModularWitness>,
}

pub fn is_modular_flat_by_definition(m: &Matroid, x: ElementSet) -> Result<ModularCheck> {
    let flats = m.flats()?;
    if !m.is_flat(x) {
        return Ok(ModularCheck::fail(ModularWitness::NotAFlat));
    }
    let rx = m.rank(x);
    Ok(flats
        .into_iter()
        .find(|&f| rx + m.rank(f) != m.rank(x | f) + m.rank(x & f))
        .map_or_else(ModularCheck::pass, |f| {
            ModularCheck::fail(ModularWitness::Flat(m.names(f)))
        }))
}

fn require_nonempty_flat(m: &Matroid, x: ElementSet) -> Result<()> {
    if x.is_empty() {
        return Err(Error::Hypothesis("short-circuit conditions need a nonempty set".into()));
    }
    if !m.is_flat(x) {
        return Err(Error::Hypothesis(format!("{:?} is not a flat", m.names(x))));
    }
    Ok(())
}

/// Every circuit `C` with `C \ X` nonempty has some `x ∈ X` with
/// `(C \ X) ∪ x` dependent.
pub fn short_circuit_check2(m: &Matroid, x: ElementSet) -> Result<ModularCheck> {
    let circuits = m.circuits()?;
    require_nonempty_flat(m, x)?;
    let bad = circuits.into_iter().find(|&c| {
        let out = c - x;
        !out.is_empty() && !x.iter().any(|e| !m.is_independent(out.with(e)))
    });
    Ok(bad.map_or_else(ModularCheck::pass, |c| {
        ModularCheck::fail(ModularWitness::Circuit(m.names(c)))
    }))
}

/// Every circuit `C` and `e ∈ C \ X` admit `f ∈ X` and a circuit `C'` with
/// `e ∈ C' ⊆ (C \ X) ∪ f`, that is `e ∈ cl(((C \ X) ∪ f) \ e)`.
pub fn short_circuit_check3(m: &Matroid, x: ElementSet) -> Result<ModularCheck> {
    let circuits = m.circuits()?;
    require_nonempty_flat(m, x)?;
    for c in circuits {
        let out = c - x;
        for e in out.iter() {
            let found = x.iter().any(|f| {
                let rest = out.with(f).without(e);
                m.rank(rest.with(e)) == m.rank(rest)
            });
            if !found {
                return Ok(ModularCheck::fail(ModularWitness::CircuitElement {
                    circuit: m.names(c),
                    element: m.element(e).to_string(),
                }));
            }
        }
    }
    Ok(ModularCheck::pass())
}

/// Runs all three tests on a nonempty set; non-flats fail all three. An
/// inconsistent outcome is an error, never a verdict.
pub fn modularity_certificate(m: &Matroid, x: ElementSet) -> Result<ModularityCertificate> {
    let def = is_modular_flat_by_definition(m, x)?;
    let flat = m.names(x);
    if def.witness == Some(ModularWitness::NotAFlat) {
        return Ok(ModularityCertificate {
            flat,
            verdict_definition: false,
            verdict_short_circuit2: false,
            verdict_short_circuit3: false,
            witness: def.witness,
        });
    }
    let sc2 = short_circuit_check2(m, x)?;
    let sc3 = short_circuit_check3(m, x)?;
    if def.modular != sc2.modular || def.modular != sc3.modular {
        return Err(Error::InconsistentModularity(format!(
            "{flat:?}: definition {}, condition (ii) {}, condition (iii) {}",
            def.modular, sc2.modular, sc3.modular
        )));
    }
    let witness = def.witness.or(sc2.witness).or(sc3.witness);
    Ok(ModularityCertificate {
        flat,
        verdict_definition: def.modular,
        verdict_short_circuit2: sc2.modular,
        verdict_short_circuit3: sc3.modular,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn whole_ground_set_is_modular() {
        let m = Matroid::uniform(2, 4).unwrap();
        let c = modularity_certificate(&m, m.full_set()).unwrap();
        assert!(c.verdict_definition && c.verdict_short_circuit2 && c.verdict_short_circuit3);
    }

    #[test]
    fn independent_pair_in_u36() {
        let m = Matroid::uniform(3, 6).unwrap();
        let x = m.set(&["0", "1"]).unwrap();
        let c = modularity_certificate(&m, x).unwrap();
        assert!(!c.verdict_definition);
        let Some(ModularWitness::Flat(f)) = c.witness else { panic!("expected a flat witness") };
        let f = m.set(&f).unwrap();
        assert_eq!(m.rank(x) + m.rank(f), 4);
        assert_eq!(m.rank(x | f) + m.rank(x & f), 3);
        assert!(!short_circuit_check2(&m, x).unwrap().modular);
    }

    #[test]
    fn k4_flat_of_k5() {
        let k5 = Matroid::graphic(Graph::complete(5, |u, v| format!("{u}{v}"))).unwrap();
        let x = k5.set(&["01", "02", "03", "12", "13", "23"]).unwrap();
        assert!(is_modular_flat_by_definition(&k5, x).unwrap().modular);
        assert!(modularity_certificate(&k5, x).unwrap().verdict_short_circuit3);
    }

    #[test]
    fn non_flats_fail() {
        let k4 = Matroid::graphic(Graph::complete(4, |u, v| format!("{u}{v}"))).unwrap();
        let x = k4.set(&["01", "12"]).unwrap();
        let c = modularity_certificate(&k4, x).unwrap();
        assert_eq!(c.witness, Some(ModularWitness::NotAFlat));
        assert!(short_circuit_check2(&k4, x).is_err());
        assert!(short_circuit_check3(&k4, ElementSet::EMPTY).is_err());
    }
}
