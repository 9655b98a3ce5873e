//! Circuits, bases, closure and flats by exhaustive enumeration.

use rayon::prelude::*;

use crate::error::Result;

use super::{ElementSet, Matroid, ENUMERATION_BOUND};

impl Matroid {
    /// Minimal dependent sets, ordered by size and then mask.
    pub fn circuits(&self) -> Result<Vec<ElementSet>> {
        let t = self.rank_table()?;
        let n = self.size();
        let mut out: Vec<ElementSet> = (0..1u64 << n)
            .into_par_iter()
            .filter(|&m| {
                let s = ElementSet(m);
                let k = s.len();
                k > 0 && t[m as usize] as usize == k - 1 && s.iter().all(|e| t[s.without(e).0 as usize] as usize == k - 1)
            })
            .map(ElementSet)
            .collect();
        out.sort_by_key(|s| (s.len(), s.0));
        Ok(out)
    }

    pub fn cocircuits(&self) -> Result<Vec<ElementSet>> {
        self.dual().circuits()
    }

    pub fn triangles(&self) -> Result<Vec<ElementSet>> {
        Ok(self.circuits()?.into_iter().filter(|c| c.len() == 3).collect())
    }

    pub fn triads(&self) -> Result<Vec<ElementSet>> {
        Ok(self.cocircuits()?.into_iter().filter(|c| c.len() == 3).collect())
    }

    pub fn bases(&self) -> Result<Vec<ElementSet>> {
        let t = self.rank_table()?;
        let r = self.full_rank();
        Ok((0..1u64 << self.size())
            .filter(|&m| m.count_ones() as usize == r && t[m as usize] as usize == r)
            .map(ElementSet)
            .collect())
    }

    pub fn closure(&self, s: ElementSet) -> ElementSet {
        let r = self.rank(s);
        (0..self.size()).fold(s, |acc, e| {
            if !s.contains(e) && self.rank(s.with(e)) == r {
                acc.with(e)
            } else {
                acc
            }
        })
    }

    pub fn is_flat(&self, s: ElementSet) -> bool {
        self.closure(s) == s
    }

    /// All flats in mask order.
    pub fn flats(&self) -> Result<Vec<ElementSet>> {
        let t = self.rank_table()?;
        let n = self.size();
        let mut out: Vec<ElementSet> = (0..1u64 << n)
            .into_par_iter()
            .filter(|&m| {
                let r = t[m as usize];
                (0..n).all(|e| m >> e & 1 == 1 || t[(m | 1 << e) as usize] > r)
            })
            .map(ElementSet)
            .collect();
        out.sort();
        Ok(out)
    }

    pub fn loops(&self) -> ElementSet {
        self.closure(ElementSet::EMPTY)
    }

    /// Checks the rank axioms on every subset (pairs for submodularity are
    /// restricted to `S ⊆ T` plus two-element extensions, which suffices).
    pub fn satisfies_rank_axioms(&self) -> Result<bool> {
        self.check_bound(ENUMERATION_BOUND)?;
        let t = self.rank_table()?;
        let n = self.size();
        if t[0] != 0 {
            return Ok(false);
        }
        let ok = (0..1u64 << n).into_par_iter().all(|m| {
            let r = t[m as usize];
            (0..n).filter(|&e| m >> e & 1 == 0).all(|e| {
                let re = t[(m | 1 << e) as usize];
                let unit = re == r || re == r + 1;
                // local submodularity: r(S+e) + r(S+f) >= r(S+e+f) + r(S)
                let sub = (e + 1..n).filter(|&f| m >> f & 1 == 0).all(|f| {
                    re as u16 + t[(m | 1 << f) as usize] as u16 >= t[(m | 1 << e | 1 << f) as usize] as u16 + r as u16
                });
                unit && sub
            })
        });
        Ok(ok)
    }
}
