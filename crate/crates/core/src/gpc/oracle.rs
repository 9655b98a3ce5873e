//! An independent rank oracle for `P_N(M1, M2)` built from flats alone.
//!
//! The flats of `P_N(M1, M2)` are the sets whose traces on `E1` and `E2` are
//! flats, so closure is the least fixpoint of
//! `Z ↦ Z ∪ cl1(Z ∩ E1) ∪ cl2(Z ∩ E2)`. Rank is the length of a maximal
//! chain of flats from `cl(∅)` to `cl(Z)`, built greedily.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matroid::{is_isomorphic, ElementSet, Matroid, Provenance};

use super::modular::is_modular_flat_by_definition;

fn closure_table(m: &Matroid) -> Result<Vec<u64>> {
    let t = m.rank_table()?;
    let n = m.size();
    Ok((0..1u64 << n)
        .map(|s| {
            (0..n).fold(s, |acc, e| {
                if t[(s | 1 << e) as usize] == t[s as usize] {
                    acc | 1 << e
                } else {
                    acc
                }
            })
        })
        .collect())
}

/// Where each element of the union sits in `M1` and `M2`.
struct Side {
    cl: Vec<u64>,
    /// `(union index, side index)` pairs.
    pos: Vec<(usize, usize)>,
}

impl Side {
    fn project(&self, z: u64) -> u64 {
        self.pos
            .iter()
            .filter(|(u, _)| z >> u & 1 == 1)
            .fold(0, |acc, (_, s)| acc | 1 << s)
    }

    fn lift(&self, s: u64) -> u64 {
        self.pos
            .iter()
            .filter(|(_, i)| s >> i & 1 == 1)
            .fold(0, |acc, (u, _)| acc | 1 << u)
    }
}

pub struct GpcOracle {
    ground: Vec<String>,
    sides: [Side; 2],
}

impl GpcOracle {
    /// Requires `M1|X = M2|X` for `X = E1 ∩ E2` and `X` a modular flat of `M1`.
    pub fn new(m1: &Matroid, m2: &Matroid) -> Result<Self> {
        let shared: Vec<String> = m1.ground().iter().filter(|e| m2.index(e).is_some()).cloned().collect();
        let n1 = m1.restrict(&shared)?;
        let n2 = m2.restrict(&shared)?;
        if !n1.same_matroid(&n2)? {
            return Err(Error::RestrictionMismatch);
        }
        let x = m1.set(&shared)?;
        if !is_modular_flat_by_definition(m1, x)?.modular {
            return Err(Error::NotModular(format!("{shared:?} in the first matroid")));
        }
        let mut ground: Vec<String> = m1.ground().iter().chain(m2.ground()).cloned().collect();
        ground.sort();
        ground.dedup();
        let side = |m: &Matroid| -> Result<Side> {
            Ok(Side {
                cl: closure_table(m)?,
                pos: ground
                    .iter()
                    .enumerate()
                    .filter_map(|(u, e)| m.index(e).map(|i| (u, i)))
                    .collect(),
            })
        };
        let sides = [side(m1)?, side(m2)?];
        Ok(GpcOracle { ground, sides })
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn closure(&self, z: ElementSet) -> ElementSet {
        let mut z = z.0;
        loop {
            let next = self
                .sides
                .iter()
                .fold(z, |acc, s| acc | s.lift(s.cl[s.project(z) as usize]));
            if next == z {
                return ElementSet(z);
            }
            z = next;
        }
    }

    /// Chain length, adding elements of `cl(Z)` in the given priority order.
    pub fn rank_along(&self, z: ElementSet, order: &[usize]) -> usize {
        let target = self.closure(z);
        let mut f = self.closure(ElementSet::EMPTY);
        let mut len = 0;
        while f != target {
            let e = order
                .iter()
                .copied()
                .find(|&e| target.contains(e) && !f.contains(e))
                .expect("order covers the ground set");
            f = self.closure(f.with(e));
            len += 1;
        }
        len
    }

    pub fn rank(&self, z: ElementSet) -> usize {
        let target = self.closure(z);
        let mut f = self.closure(ElementSet::EMPTY);
        let mut len = 0;
        while f != target {
            let e = (target - f).iter().next().expect("target strictly contains f");
            f = self.closure(f.with(e));
            len += 1;
        }
        len
    }

    pub fn into_matroid(self, description: impl Into<String>) -> Result<Matroid> {
        let ground = self.ground.clone();
        let oracle = Arc::new(self);
        Matroid::from_rank_fn(&ground, description, move |s| oracle.rank(s))
    }
}

/// `P_N(M1, M2)` as a rank oracle, glued along the common elements.
pub fn gpc_oracle(m1: &Matroid, m2: &Matroid) -> Result<Matroid> {
    GpcOracle::new(m1, m2)?.into_matroid("generalized parallel connection")
}

/// `P_N(M1, M2) \ X` where `N = M1|X ≅ M(K_k)` and `M1` is graphic.
pub fn graph_clique_sum(m1: &Matroid, m2: &Matroid) -> Result<Matroid> {
    if !matches!(m1.provenance(), Provenance::Graphic(_)) {
        return Err(Error::Hypothesis("the first matroid must be graphic".into()));
    }
    let shared: Vec<String> = m1.ground().iter().filter(|e| m2.index(e).is_some()).cloned().collect();
    let k = (1..)
        .find(|k| k * (k - 1) / 2 >= shared.len())
        .expect("some clique is large enough");
    if k * (k - 1) / 2 != shared.len() {
        return Err(Error::NotCliqueMatroid);
    }
    let clique = Matroid::graphic(Graph::complete(k, |u, v| format!("{u}-{v}")))?;
    if is_isomorphic(&m1.restrict(&shared)?, &clique)?.is_none() {
        return Err(Error::NotCliqueMatroid);
    }
    gpc_oracle(m1, m2)?.delete(&shared)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize, prefix: &str) -> Matroid {
        Matroid::graphic(Graph::complete(n, |u, v| {
            if v < 4 {
                format!("{u}{v}")
            } else {
                format!("{prefix}{u}{v}")
            }
        }))
        .unwrap()
    }

    #[test]
    fn two_k5_along_k4() {
        let (m1, m2) = (k(5, "p"), k(5, "q"));
        let o = GpcOracle::new(&m1, &m2).unwrap();
        assert_eq!(o.ground().len(), 14);
        let p = o.into_matroid("P").unwrap();
        assert_eq!(p.full_rank(), 4 + 4 - 3);
        // the result is the graph of two K5's glued along a K4
        let mut labels = Vec::new();
        let verts: Vec<String> = (0..6).map(|i| i.to_string()).collect();
        for u in 0..4 {
            for v in u + 1..4 {
                labels.push((u.to_string(), v.to_string(), format!("{u}{v}")));
            }
            labels.push((u.to_string(), "4".into(), format!("p{u}4")));
            labels.push((u.to_string(), "5".into(), format!("q{u}4")));
        }
        let g = Matroid::graphic(Graph::new(verts, &labels).unwrap()).unwrap();
        assert!(p.same_matroid(&g).unwrap());
    }

    #[test]
    fn restriction_is_each_side() {
        let (m1, m2) = (k(5, "p"), k(5, "q"));
        let p = gpc_oracle(&m1, &m2).unwrap();
        assert!(p.restrict(m2.ground()).unwrap().same_matroid(&m2).unwrap());
        assert!(p.restrict(m1.ground()).unwrap().same_matroid(&m1).unwrap());
    }

    #[test]
    fn chains_have_equal_length() {
        let o = GpcOracle::new(&k(5, "p"), &k(5, "q")).unwrap();
        let n = o.ground().len();
        let fwd: Vec<usize> = (0..n).collect();
        let back: Vec<usize> = (0..n).rev().collect();
        for z in [0u64, 0b1011, 0x3ff0, (1 << n) - 1] {
            let z = ElementSet(z);
            assert_eq!(o.rank_along(z, &fwd), o.rank_along(z, &back));
        }
    }

    #[test]
    fn clique_sums() {
        let s = graph_clique_sum(&k(5, "p"), &k(5, "q")).unwrap();
        assert_eq!(s.size(), 8);
        assert_eq!(s.full_rank(), 5);
        let disjoint = Matroid::graphic(Graph::complete(3, |u, v| format!("z{u}{v}"))).unwrap();
        let s = graph_clique_sum(&k(4, "p"), &disjoint).unwrap();
        assert_eq!(s.size(), 9);
        assert_eq!(s.full_rank(), 3 + 2);
        assert!(matches!(graph_clique_sum(&Matroid::uniform(2, 4).unwrap(), &disjoint), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn mismatched_restrictions() {
        let m1 = k(4, "p");
        let m2 = Matroid::from_rank_fn(&["01", "02", "12"], "U(1,3)", |s| s.len().min(1)).unwrap();
        assert!(matches!(GpcOracle::new(&m1, &m2), Err(Error::RestrictionMismatch)));
    }
}
