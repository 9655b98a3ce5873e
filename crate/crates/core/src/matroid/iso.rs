//! Isomorphism by backtracking over label bijections.
//!
//! Candidates for each element are pruned by its circuit and cocircuit
//! counts by size. Each extension of a partial map is checked on every
//! subset of the mapped elements of size at most `r + 1` that contains the
//! new element, and a complete map is accepted only if it carries bases to
//! bases.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};

use super::{ElementSet, Matroid};

/// Largest ground set for isomorphism search.
pub const ISO_BOUND: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IsoWitness {
    /// Pairs `(e, φ(e))` sorted by `e`.
    pub map: Vec<(String, String)>,
}

impl IsoWitness {
    pub fn image(&self, e: &str) -> Option<&str> {
        self.map.iter().find(|(a, _)| a == e).map(|(_, b)| b.as_str())
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().all(|(a, b)| a == b)
    }

    /// Non-trivial cycles of a permutation, each starting at its least
    /// element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<String>> {
        let m: BTreeMap<&str, &str> = self.map.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        let mut seen = std::collections::BTreeSet::new();
        let mut out = Vec::new();
        for &start in m.keys() {
            if seen.contains(start) {
                continue;
            }
            let mut cyc = vec![start.to_string()];
            seen.insert(start);
            let mut cur = m[start];
            while cur != start {
                match m.get(cur) {
                    Some(&next) => {
                        seen.insert(cur);
                        cyc.push(cur.to_string());
                        cur = next;
                    }
                    None => break,
                }
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    /// Cycle notation such as `(c,e)(d,f)`.
    pub fn cycle_notation(&self) -> String {
        let c = self.cycles();
        if c.is_empty() {
            return "()".into();
        }
        c.iter().map(|cyc| format!("({})", cyc.join(","))).collect()
    }
}

fn signatures(m: &Matroid) -> Result<Vec<Vec<u32>>> {
    let n = m.size();
    let mut sig = vec![vec![0u32; 2 * (n + 1)]; n];
    for c in m.circuits()? {
        for e in c.iter() {
            sig[e][c.len()] += 1;
        }
    }
    for c in m.cocircuits()? {
        for e in c.iter() {
            sig[e][n + 1 + c.len()] += 1;
        }
    }
    Ok(sig)
}

struct Search<'a> {
    t1: &'a [u8],
    t2: &'a [u8],
    n: usize,
    r: usize,
    order: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    map: Vec<usize>,
    limit: usize,
    found: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn image(&self, s: u64) -> u64 {
        let mut out = 0;
        let mut rest = s;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= 1 << self.map[i];
        }
        out
    }

    fn consistent(&self, assigned: u64, e: usize, f: usize) -> bool {
        // all submasks of the previously assigned elements
        let mut s = assigned;
        loop {
            if (s.count_ones() as usize) <= self.r {
                let lhs = self.t1[(s | 1 << e) as usize];
                let rhs = self.t2[(self.image(s) | 1 << f) as usize];
                if lhs != rhs {
                    return false;
                }
            }
            if s == 0 {
                return true;
            }
            s = (s - 1) & assigned;
        }
    }

    fn bases_match(&self) -> bool {
        (0..1u64 << self.n)
            .filter(|m| m.count_ones() as usize == self.r)
            .all(|m| (self.t1[m as usize] as usize == self.r) == (self.t2[self.image(m) as usize] as usize == self.r))
    }

    fn run(&mut self, depth: usize, assigned: u64, used: u64) {
        if self.found.len() >= self.limit {
            return;
        }
        if depth == self.n {
            if self.bases_match() {
                self.found.push(self.map.clone());
            }
            return;
        }
        let e = self.order[depth];
        for k in 0..self.candidates[e].len() {
            let f = self.candidates[e][k];
            if used >> f & 1 == 1 || !self.consistent(assigned, e, f) {
                continue;
            }
            self.map[e] = f;
            self.run(depth + 1, assigned | 1 << e, used | 1 << f);
            if self.found.len() >= self.limit {
                return;
            }
        }
    }
}

/// Up to `limit` isomorphisms `m1 → m2`, in lexicographic order of the image
/// sequence along the search order.
pub fn isomorphisms(m1: &Matroid, m2: &Matroid, limit: usize) -> Result<Vec<IsoWitness>> {
    for m in [m1, m2] {
        m.check_bound(ISO_BOUND)?;
    }
    let n = m1.size();
    if m2.size() != n || m1.full_rank() != m2.full_rank() {
        return Ok(Vec::new());
    }
    let (s1, s2) = (signatures(m1)?, signatures(m2)?);
    let mut a = s1.clone();
    let mut b = s2.clone();
    a.sort();
    b.sort();
    if a != b {
        return Ok(Vec::new());
    }
    let candidates: Vec<Vec<usize>> = (0..n).map(|e| (0..n).filter(|&f| s1[e] == s2[f]).collect()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&e| (candidates[e].len(), e));
    let mut search = Search {
        t1: m1.rank_table()?,
        t2: m2.rank_table()?,
        n,
        r: m1.full_rank(),
        order,
        candidates,
        map: vec![0; n],
        limit,
        found: Vec::new(),
    };
    search.run(0, 0, 0);
    Ok(search
        .found
        .into_iter()
        .map(|map| IsoWitness {
            map: (0..n).map(|e| (m1.element(e).to_string(), m2.element(map[e]).to_string())).collect(),
        })
        .collect())
}

pub fn is_isomorphic(m1: &Matroid, m2: &Matroid) -> Result<Option<IsoWitness>> {
    Ok(isomorphisms(m1, m2, 1)?.into_iter().next())
}

/// The full automorphism group, sorted.
pub fn automorphisms(m: &Matroid) -> Result<Vec<IsoWitness>> {
    let mut all = isomorphisms(m, m, usize::MAX)?;
    all.sort();
    Ok(all)
}

/// Exhaustive check that `w` preserves the rank of every subset.
pub fn verify_isomorphism(m1: &Matroid, m2: &Matroid, w: &IsoWitness) -> Result<bool> {
    if m1.size() != m2.size() || w.map.len() != m1.size() {
        return Ok(false);
    }
    let mut image = vec![0usize; m1.size()];
    let mut used = ElementSet::EMPTY;
    for (a, b) in &w.map {
        let i = m1.index(a).ok_or_else(|| Error::UnknownLabel(a.clone()))?;
        let j = m2.index(b).ok_or_else(|| Error::UnknownLabel(b.clone()))?;
        image[i] = j;
        used = used.with(j);
    }
    if used != m2.full_set() {
        return Ok(false);
    }
    let (t1, t2) = (m1.rank_table()?, m2.rank_table()?);
    Ok((0..1u64 << m1.size()).all(|s| {
        let img = ElementSet(s).iter().fold(0u64, |acc, i| acc | 1 << image[i]);
        t1[s as usize] == t2[img as usize]
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn k4() -> Matroid {
        Matroid::graphic(Graph::complete(4, |u, v| format!("{u}{v}"))).unwrap()
    }

    #[test]
    fn k4_automorphisms_are_s4() {
        let autos = automorphisms(&k4()).unwrap();
        assert_eq!(autos.len(), 24);
        assert!(autos[0].is_identity());
        for w in &autos {
            assert!(verify_isomorphism(&k4(), &k4(), w).unwrap());
        }
    }

    #[test]
    fn k4_is_not_u36() {
        assert!(is_isomorphic(&k4(), &Matroid::uniform(3, 6).unwrap()).unwrap().is_none());
    }

    #[test]
    fn cycle_notation() {
        let w = IsoWitness {
            map: vec![
                ("a".into(), "b".into()),
                ("b".into(), "a".into()),
                ("c".into(), "c".into()),
                ("d".into(), "e".into()),
                ("e".into(), "f".into()),
                ("f".into(), "d".into()),
            ],
        };
        assert_eq!(w.cycle_notation(), "(a,b)(d,e,f)");
    }

    #[test]
    fn relabelled_graph_is_isomorphic() {
        let g = Graph::complete(4, |u, v| format!("x{}", 10 * v + u));
        let w = is_isomorphic(&k4(), &Matroid::graphic(g.clone()).unwrap()).unwrap().unwrap();
        assert!(verify_isomorphism(&k4(), &Matroid::graphic(g).unwrap(), &w).unwrap());
    }
}
