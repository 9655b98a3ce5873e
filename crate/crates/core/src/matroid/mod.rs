//! Matroids as rank oracles.
//!
//! Ground sets are ordered lexicographically by element name and subsets are
//! bitmasks over that order, so every enumeration (and every witness) is
//! deterministic. Linear matroids keep an explicit representation through
//! duals and minors; other provenances compose rank oracles.

mod connectivity;
mod iso;
mod json;
mod structure;

use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;

use crate::arith::{IntPolynomial, PartialField};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::modp::{rank_mod_p, residues};
use crate::matrix::{poly_rank, row_cleared, CertifiedPMatrix, LabeledMatrix};

pub use connectivity::{
    induced_separation_check, is_k_separating, minor_separating_inheritance, ConnectivityMode,
    Separation, SeparationReport, SeparationVerdict,
};
pub use iso::{automorphisms, is_isomorphic, isomorphisms, verify_isomorphism, IsoWitness, ISO_BOUND};
pub use json::MatroidSpec;

/// Largest ground set for which subset enumeration is attempted.
pub const ENUMERATION_BOUND: usize = 24;

/// Evaluation points used for certified P-matrices.
pub const EVALUATION_PAIRS: [(u32, u32); 3] = [(101, 2), (103, 3), (107, 5)];

/// Evaluation points that can only raise a symbolic rank lower bound.
const SCREEN_PAIRS: [(u32, u32); 2] = [(1_000_003, 2), (999_983, 7)];

/// A subset of a ground set of at most 64 elements.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet(pub u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        ElementSet(1 << i)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        ElementSet(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> Self {
        ElementSet(self.0 & !(1 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        })
    }

    /// Complement within a ground set of `n` elements.
    pub fn complement(self, n: usize) -> Self {
        ElementSet(!self.0 & Self::full(n).0)
    }
}

impl BitOr for ElementSet {
    type Output = Self;
    fn bitor(self, rhs: Self) -> Self {
        ElementSet(self.0 | rhs.0)
    }
}

impl BitAnd for ElementSet {
    type Output = Self;
    fn bitand(self, rhs: Self) -> Self {
        ElementSet(self.0 & rhs.0)
    }
}

impl Sub for ElementSet {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        ElementSet(self.0 & !rhs.0)
    }
}

impl Not for ElementSet {
    type Output = Self;
    fn not(self) -> Self {
        ElementSet(!self.0)
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Where a matroid came from.
#[derive(Clone)]
pub enum Provenance {
    Linear(LabeledMatrix),
    Graphic(Graph),
    Dual(Matroid),
    Minor {
        of: Matroid,
        contract: Vec<String>,
        delete: Vec<String>,
    },
    Oracle(String),
}

type RankFn = Arc<dyn Fn(ElementSet) -> usize + Send + Sync>;

enum Engine {
    Linear(LinearEngine),
    Graph {
        vertices: usize,
        ends: Vec<(usize, usize)>,
    },
    Dual(Matroid),
    Minor {
        parent: Matroid,
        map: Vec<usize>,
        contract: ElementSet,
        contract_rank: usize,
    },
    Table(Arc<[u8]>),
    Func(RankFn),
}

struct LinearEngine {
    matrix: LabeledMatrix,
    certified: bool,
    /// Ground index of each row and column label.
    row_ground: Vec<usize>,
    col_ground: Vec<usize>,
    mode: RankMode,
}

enum RankMode {
    Prime { p: u32, entries: Vec<u32> },
    Evaluated { images: Vec<(u32, Vec<u32>)>, polys: Vec<Vec<IntPolynomial>> },
    Symbolic { screens: Vec<(u32, Vec<u32>)>, polys: Vec<Vec<IntPolynomial>> },
}

struct Inner {
    ground: Vec<String>,
    provenance: Provenance,
    engine: Engine,
    table: OnceLock<Arc<[u8]>>,
}

/// Immutable and cheap to clone.
#[derive(Clone)]
pub struct Matroid {
    inner: Arc<Inner>,
}

fn sorted_ground<S: AsRef<str>>(names: &[S]) -> Result<Vec<String>> {
    let mut ground: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
    ground.sort();
    if let Some(w) = ground.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateLabel(w[0].clone()));
    }
    if ground.len() > 64 {
        return Err(Error::EnumerationBound {
            size: ground.len(),
            bound: 64,
        });
    }
    Ok(ground)
}

fn evaluate(polys: &[Vec<IntPolynomial>], p: u32, c: u32) -> Vec<u32> {
    polys
        .iter()
        .flat_map(|r| r.iter())
        .map(|x| x.eval_mod(p as u64, c as u64) as u32)
        .collect()
}

impl LinearEngine {
    fn new(matrix: LabeledMatrix, certified: bool, ground: &[String]) -> Self {
        let find = |l: &String| ground.binary_search(l).expect("label in ground set");
        let row_ground = matrix.rows().iter().map(find).collect();
        let col_ground = matrix.cols().iter().map(find).collect();
        let mode = match matrix.field() {
            PartialField::FiniteField(p) => RankMode::Prime {
                p: p as u32,
                entries: residues(&matrix, p).into_iter().map(|x| x as u32).collect(),
            },
            _ => {
                // row clearing scales rows by nonzero factors, leaving ranks intact
                let (polys, lcms) = row_cleared(&matrix);
                let usable = |p: u32, c: u32| {
                    lcms.iter().all(|l| l.eval_mod(p as u64, c as u64) != 0)
                };
                if certified && EVALUATION_PAIRS.iter().all(|&(p, c)| usable(p, c)) {
                    let images = EVALUATION_PAIRS
                        .iter()
                        .map(|&(p, c)| (p, evaluate(&polys, p, c)))
                        .collect();
                    RankMode::Evaluated { images, polys }
                } else {
                    let screens = SCREEN_PAIRS
                        .iter()
                        .filter(|&&(p, c)| usable(p, c))
                        .map(|&(p, c)| (p, evaluate(&polys, p, c)))
                        .collect();
                    RankMode::Symbolic { screens, polys }
                }
            }
        };
        LinearEngine {
            matrix,
            certified,
            row_ground,
            col_ground,
            mode,
        }
    }

    /// `rank([I A][:, S]) = |S ∩ X| + rank(A[X \ S, Y ∩ S])`.
    fn rank(&self, s: ElementSet) -> usize {
        let rows: Vec<usize> = (0..self.row_ground.len())
            .filter(|&i| !s.contains(self.row_ground[i]))
            .collect();
        let cols: Vec<usize> = (0..self.col_ground.len())
            .filter(|&j| s.contains(self.col_ground[j]))
            .collect();
        let base = self.row_ground.len() - rows.len();
        if rows.is_empty() || cols.is_empty() {
            return base;
        }
        let n = self.col_ground.len();
        let gather = |entries: &[u32]| -> Vec<u32> {
            let mut buf = Vec::with_capacity(rows.len() * cols.len());
            for &i in &rows {
                buf.extend(cols.iter().map(|&j| entries[i * n + j]));
            }
            buf
        };
        let symbolic = |polys: &[Vec<IntPolynomial>]| -> usize {
            let sub = rows
                .iter()
                .map(|&i| cols.iter().map(|&j| polys[i][j].clone()).collect())
                .collect();
            poly_rank(sub)
        };
        base + match &self.mode {
            RankMode::Prime { p, entries } => rank_mod_p(&mut gather(entries), rows.len(), cols.len(), *p),
            RankMode::Evaluated { images, polys } => {
                let mut ranks = images
                    .iter()
                    .map(|(p, e)| rank_mod_p(&mut gather(e), rows.len(), cols.len(), *p));
                let first = ranks.next().expect("at least one evaluation");
                if ranks.all(|r| r == first) {
                    first
                } else {
                    symbolic(polys)
                }
            }
            RankMode::Symbolic { screens, polys } => {
                let full = rows.len().min(cols.len());
                let lower = screens
                    .iter()
                    .map(|(p, e)| rank_mod_p(&mut gather(e), rows.len(), cols.len(), *p))
                    .max()
                    .unwrap_or(0);
                // an evaluation never exceeds the true rank
                if lower == full {
                    full
                } else {
                    symbolic(polys)
                }
            }
        }
    }
}

fn graph_rank(vertices: usize, ends: &[(usize, usize)], s: ElementSet) -> usize {
    let mut parent: Vec<usize> = (0..vertices).collect();
    fn root(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut rank = 0;
    for e in s.iter() {
        let (u, v) = ends[e];
        let (ru, rv) = (root(&mut parent, u), root(&mut parent, v));
        if ru != rv {
            parent[ru] = rv;
            rank += 1;
        }
    }
    rank
}

impl Matroid {
    fn build(ground: Vec<String>, provenance: Provenance, engine: Engine) -> Self {
        Matroid {
            inner: Arc::new(Inner {
                ground,
                provenance,
                engine,
                table: OnceLock::new(),
            }),
        }
    }

    fn linear_with(matrix: LabeledMatrix, certified: bool, provenance: Option<Provenance>) -> Result<Self> {
        let ground = sorted_ground(&matrix.labels().collect::<Vec<_>>())?;
        let engine = LinearEngine::new(matrix.clone(), certified, &ground);
        let provenance = provenance.unwrap_or(Provenance::Linear(matrix));
        Ok(Matroid::build(ground, provenance, Engine::Linear(engine)))
    }

    /// `M[I A]`. Near-regular and regular matrices are ranked symbolically;
    /// use [`Matroid::from_certified`] for the fast evaluated engine.
    pub fn linear(a: LabeledMatrix) -> Result<Self> {
        let certified = matches!(a.field(), PartialField::FiniteField(_));
        Matroid::linear_with(a, certified, None)
    }

    /// `M[I A]` for a certified P-matrix, ranked by evaluation into three
    /// prime fields (with symbolic arbitration on disagreement).
    pub fn from_certified(a: CertifiedPMatrix) -> Result<Self> {
        Matroid::linear_with(a.into_inner(), true, None)
    }

    /// Certifies `a` first when its square submatrices number at most
    /// `scan_limit`, otherwise falls back to [`Matroid::linear`].
    pub fn linear_auto(a: LabeledMatrix, scan_limit: u64) -> Result<Self> {
        let (m, n) = (a.nrows(), a.ncols());
        let count: u64 = (0..=m.min(n))
            .map(|k| (crate::matrix::binomial(m, k) as u64).saturating_mul(crate::matrix::binomial(n, k) as u64))
            .fold(0u64, |acc, x| acc.saturating_add(x));
        if count <= scan_limit {
            if let Ok(c) = a.clone().certify() {
                return Matroid::from_certified(c);
            }
        }
        Matroid::linear(a)
    }

    pub fn graphic(g: Graph) -> Result<Self> {
        let ground = sorted_ground(&g.edge_labels())?;
        let mut ends = vec![(0, 0); ground.len()];
        for e in g.edges() {
            let i = ground.binary_search(&e.label).expect("edge in ground set");
            ends[i] = (e.u, e.v);
        }
        let engine = Engine::Graph {
            vertices: g.vertices().len(),
            ends,
        };
        Ok(Matroid::build(ground, Provenance::Graphic(g), engine))
    }

    /// A matroid given directly by its rank function on bitmasks over the
    /// sorted ground set.
    pub fn from_rank_fn<S: AsRef<str>>(
        names: &[S],
        description: impl Into<String>,
        rank: impl Fn(ElementSet) -> usize + Send + Sync + 'static,
    ) -> Result<Self> {
        let ground = sorted_ground(names)?;
        Ok(Matroid::build(
            ground,
            Provenance::Oracle(description.into()),
            Engine::Func(Arc::new(rank)),
        ))
    }

    pub fn from_rank_table<S: AsRef<str>>(names: &[S], description: impl Into<String>, table: Vec<u8>) -> Result<Self> {
        let ground = sorted_ground(names)?;
        if table.len() != 1usize << ground.len() {
            return Err(Error::InvalidArgument("rank table has the wrong length".into()));
        }
        let table: Arc<[u8]> = table.into();
        let m = Matroid::build(ground, Provenance::Oracle(description.into()), Engine::Table(table.clone()));
        let _ = m.inner.table.set(table);
        Ok(m)
    }

    /// `U_{r,n}` on elements `"0".."n-1"`.
    pub fn uniform(r: usize, n: usize) -> Result<Self> {
        let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        Matroid::from_rank_fn(&names, format!("U({r},{n})"), move |s| s.len().min(r))
    }

    pub fn ground(&self) -> &[String] {
        &self.inner.ground
    }

    pub fn size(&self) -> usize {
        self.inner.ground.len()
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.size())
    }

    pub fn provenance(&self) -> &Provenance {
        &self.inner.provenance
    }

    /// The `A` of a displayed representation `[I A]`, when one is maintained.
    pub fn representation(&self) -> Option<&LabeledMatrix> {
        match &self.inner.engine {
            Engine::Linear(l) => Some(&l.matrix),
            _ => None,
        }
    }

    /// Whether ranks come from a certified P-matrix representation.
    pub fn is_certified(&self) -> bool {
        matches!(&self.inner.engine, Engine::Linear(l) if l.certified)
    }

    pub fn same_instance(&self, other: &Matroid) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.inner.ground.binary_search_by(|g| g.as_str().cmp(name)).ok()
    }

    pub fn element(&self, i: usize) -> &str {
        &self.inner.ground[i]
    }

    pub fn set<S: AsRef<str>>(&self, names: &[S]) -> Result<ElementSet> {
        names.iter().try_fold(ElementSet::EMPTY, |acc, n| {
            let n = n.as_ref();
            self.index(n)
                .map(|i| acc.with(i))
                .ok_or_else(|| Error::UnknownLabel(n.to_string()))
        })
    }

    pub fn names(&self, s: ElementSet) -> Vec<String> {
        s.iter().map(|i| self.inner.ground[i].clone()).collect()
    }

    fn engine_rank(&self, s: ElementSet) -> usize {
        match &self.inner.engine {
            Engine::Linear(l) => l.rank(s),
            Engine::Graph { vertices, ends } => graph_rank(*vertices, ends, s),
            Engine::Dual(m) => {
                let n = self.size();
                s.len() + m.rank(s.complement(n)) - m.rank(m.full_set())
            }
            Engine::Minor {
                parent,
                map,
                contract,
                contract_rank,
            } => {
                let lifted = s.iter().fold(*contract, |acc, i| acc.with(map[i]));
                parent.rank(lifted) - contract_rank
            }
            Engine::Table(t) => t[s.0 as usize] as usize,
            Engine::Func(f) => f(s),
        }
    }

    pub fn rank(&self, s: ElementSet) -> usize {
        match self.inner.table.get() {
            Some(t) => t[s.0 as usize] as usize,
            None => self.engine_rank(s),
        }
    }

    pub fn rank_of<S: AsRef<str>>(&self, names: &[S]) -> Result<usize> {
        Ok(self.rank(self.set(names)?))
    }

    pub fn full_rank(&self) -> usize {
        self.rank(self.full_set())
    }

    pub fn is_independent(&self, s: ElementSet) -> bool {
        self.rank(s) == s.len()
    }

    pub(crate) fn check_bound(&self, bound: usize) -> Result<()> {
        if self.size() > bound {
            return Err(Error::EnumerationBound {
                size: self.size(),
                bound,
            });
        }
        Ok(())
    }

    /// Ranks of all `2^|E|` subsets, computed in parallel once and cached.
    pub fn rank_table(&self) -> Result<&[u8]> {
        self.check_bound(ENUMERATION_BOUND)?;
        Ok(self.inner.table.get_or_init(|| {
            let n = self.size();
            let table: Vec<u8> = (0..1u64 << n)
                .into_par_iter()
                .map(|m| self.engine_rank(ElementSet(m)) as u8)
                .collect();
            table.into()
        }))
    }

    pub fn dual(&self) -> Matroid {
        let provenance = Provenance::Dual(self.clone());
        match &self.inner.engine {
            Engine::Linear(l) => Matroid::linear_with(l.matrix.negated_transpose(), l.certified, Some(provenance))
                .expect("dual has the same labels"),
            _ => Matroid::build(self.inner.ground.clone(), provenance, Engine::Dual(self.clone())),
        }
    }

    pub fn delete<S: AsRef<str>>(&self, d: &[S]) -> Result<Matroid> {
        self.minor::<S>(&[], d)
    }

    pub fn contract<S: AsRef<str>>(&self, c: &[S]) -> Result<Matroid> {
        self.minor::<S>(c, &[])
    }

    /// `M|Z`.
    pub fn restrict<S: AsRef<str>>(&self, z: &[S]) -> Result<Matroid> {
        let keep = self.set(z)?;
        let gone = self.names(keep.complement(self.size()));
        self.delete(&gone)
    }

    /// `M / C \ D` for disjoint `C` and `D`.
    pub fn minor<S: AsRef<str>>(&self, contract: &[S], delete: &[S]) -> Result<Matroid> {
        let c = self.set(contract)?;
        let d = self.set(delete)?;
        if !(c & d).is_empty() {
            return Err(Error::InvalidArgument(format!(
                "elements {:?} are both contracted and deleted",
                self.names(c & d)
            )));
        }
        let provenance = Provenance::Minor {
            of: self.clone(),
            contract: self.names(c),
            delete: self.names(d),
        };
        if c.is_empty() && d.is_empty() {
            return Ok(self.clone());
        }
        if let Engine::Linear(l) = &self.inner.engine {
            let a = minor_representation(&l.matrix, &self.names(c), &self.names(d))?;
            return Matroid::linear_with(a, l.certified, Some(provenance));
        }
        let keep = (c | d).complement(self.size());
        let ground = self.names(keep);
        let map: Vec<usize> = keep.iter().collect();
        let engine = Engine::Minor {
            parent: self.clone(),
            map,
            contract: c,
            contract_rank: self.rank(c),
        };
        Ok(Matroid::build(ground, provenance, engine))
    }

    /// Same labels and the same rank on every subset.
    pub fn same_matroid(&self, other: &Matroid) -> Result<bool> {
        if self.ground() != other.ground() {
            return Ok(false);
        }
        Ok(self.rank_table()? == other.rank_table()?)
    }

    /// First subset (in mask order) on which the ranks differ.
    pub fn rank_difference(&self, other: &Matroid) -> Result<Option<Vec<String>>> {
        if self.ground() != other.ground() {
            return Err(Error::InvalidArgument("ground sets differ".into()));
        }
        let (a, b) = (self.rank_table()?, other.rank_table()?);
        Ok(a.iter()
            .zip(b)
            .position(|(x, y)| x != y)
            .map(|m| self.names(ElementSet(m as u64))))
    }
}

/// Representation of `M[I A] / C \ D` obtained by pivoting.
fn minor_representation(a: &LabeledMatrix, contract: &[String], delete: &[String]) -> Result<LabeledMatrix> {
    let mut a = a.clone();
    for x in contract {
        if let Some(j) = a.col_index(x) {
            match (0..a.nrows()).find(|&i| !a.get(i, j).is_zero()) {
                Some(i) => a = a.pivot_at(i, j)?,
                None => {
                    // a loop: contraction equals deletion
                    a = drop_col(&a, j);
                    continue;
                }
            }
        }
        let i = a.row_index(x).expect("contracted element is now a row");
        a = drop_row(&a, i);
    }
    for x in delete {
        if let Some(i) = a.row_index(x) {
            match (0..a.ncols()).find(|&j| !a.get(i, j).is_zero()) {
                Some(j) => a = a.pivot_at(i, j)?,
                None => {
                    // a coloop: deletion equals contraction
                    a = drop_row(&a, i);
                    continue;
                }
            }
        }
        let j = a.col_index(x).expect("deleted element is now a column");
        a = drop_col(&a, j);
    }
    Ok(a)
}

fn drop_row(a: &LabeledMatrix, i: usize) -> LabeledMatrix {
    let rows: Vec<usize> = (0..a.nrows()).filter(|&r| r != i).collect();
    let cols: Vec<usize> = (0..a.ncols()).collect();
    a.select(&rows, &cols)
}

fn drop_col(a: &LabeledMatrix, j: usize) -> LabeledMatrix {
    let rows: Vec<usize> = (0..a.nrows()).collect();
    let cols: Vec<usize> = (0..a.ncols()).filter(|&c| c != j).collect();
    a.select(&rows, &cols)
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.provenance() {
            Provenance::Linear(_) => "linear",
            Provenance::Graphic(_) => "graphic",
            Provenance::Dual(_) => "dual",
            Provenance::Minor { .. } => "minor",
            Provenance::Oracle(_) => "oracle",
        };
        write!(f, "Matroid({kind}, {:?})", self.inner.ground)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::RingElement;

    fn k4_rep() -> LabeledMatrix {
        LabeledMatrix::from_ints(
            PartialField::NearRegular,
            &["a", "b", "c"],
            &["d", "e", "f"],
            &[&[-1, -1, 0], &[1, 0, -1], &[0, 1, 1]],
        )
        .unwrap()
    }

    #[test]
    fn element_set_ops() {
        let s = ElementSet::singleton(1) | ElementSet::singleton(3);
        assert_eq!(s.len(), 2);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(s.complement(4), ElementSet(0b0101));
        assert!(ElementSet(0b10).is_subset(s));
    }

    #[test]
    fn identity_columns_and_full_rank() {
        let m = Matroid::linear(k4_rep()).unwrap();
        assert_eq!(m.full_rank(), 3);
        assert_eq!(m.rank_of(&["a", "b", "c"]).unwrap(), 3);
        assert_eq!(m.rank_of(&["a", "b", "d"]).unwrap(), 2);
        assert!(m.rank_of(&["z"]).is_err());
    }

    #[test]
    fn engines_agree() {
        let a = k4_rep();
        let sym = Matroid::linear(a.clone()).unwrap();
        let ev = Matroid::from_certified(a.clone().certify().unwrap()).unwrap();
        let gf = Matroid::linear(a.with_field(PartialField::FiniteField(3)).unwrap()).unwrap();
        assert!(ev.is_certified());
        assert!(sym.same_matroid(&ev).unwrap());
        assert!(sym.same_matroid(&gf).unwrap());
    }

    #[test]
    fn graphic_rank() {
        let k4 = Matroid::graphic(Graph::complete(4, |u, v| format!("{u}{v}"))).unwrap();
        assert_eq!(k4.full_rank(), 3);
        let k5 = Matroid::graphic(Graph::complete(5, |u, v| format!("{u}{v}"))).unwrap();
        assert_eq!(k5.full_rank(), 4);
        assert_eq!(k5.dual().full_rank(), 6);
    }

    #[test]
    fn dual_is_involution_and_matches_corank() {
        let m = Matroid::linear(k4_rep()).unwrap();
        let d = m.dual();
        assert_eq!(d.representation().unwrap().rows(), &["d", "e", "f"]);
        let oracle = Matroid::from_rank_table(m.ground(), "copy", m.rank_table().unwrap().to_vec()).unwrap();
        assert!(oracle.dual().same_matroid(&d).unwrap());
        assert!(d.dual().same_matroid(&m).unwrap());
    }

    #[test]
    fn minors_match_oracle_minors() {
        let a = LabeledMatrix::from_strs(
            PartialField::NearRegular,
            &["1", "2"],
            &["3", "4", "5"],
            &[&["1", "1", "0"], &["1", "a", "0"]],
        )
        .unwrap();
        let m = Matroid::linear(a).unwrap();
        let oracle = Matroid::from_rank_table(m.ground(), "copy", m.rank_table().unwrap().to_vec()).unwrap();
        for (c, d) in [
            (vec!["3"], vec!["1"]),
            (vec!["5"], vec![]),
            (vec![], vec!["5", "2"]),
            (vec!["1", "4"], vec!["3"]),
        ] {
            let x = m.minor(&c, &d).unwrap();
            let y = oracle.minor(&c, &d).unwrap();
            assert!(x.representation().is_some());
            assert!(x.same_matroid(&y).unwrap(), "minor /{c:?} \\{d:?}");
        }
        assert!(m.delete::<&str>(&[]).unwrap().same_instance(&m));
        assert!(m.minor(&["1"], &["1"]).is_err());
    }

    #[test]
    fn symbolic_rank_with_fractions() {
        let a = LabeledMatrix::new(
            PartialField::NearRegular,
            vec!["x".into(), "y".into()],
            vec!["u".into(), "v".into()],
            vec![
                vec![RingElement::one(), "1/a".parse().unwrap()],
                vec![RingElement::alpha(), RingElement::one()],
            ],
        )
        .unwrap();
        let m = Matroid::linear(a).unwrap();
        assert_eq!(m.rank_of(&["u", "v"]).unwrap(), 1);
    }

    #[test]
    fn uniform_and_bounds() {
        let u = Matroid::uniform(2, 4).unwrap();
        assert_eq!(u.full_rank(), 2);
        let big = Matroid::uniform(1, 30).unwrap();
        assert!(matches!(big.rank_table(), Err(Error::EnumerationBound { .. })));
    }
}
