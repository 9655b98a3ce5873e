//! Network-matrix representations of complete graphs with a labelled `K4`.

use crate::arith::{PartialField, RingElement};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::LabeledMatrix;
use crate::matroid::{is_isomorphic, Matroid};

use super::align::align_representation;

/// A representation of `M(K_n)` together with the labelled graph.
#[derive(Clone, Debug)]
pub struct CompleteGraphRep {
    pub graph: Graph,
    pub matrix: LabeledMatrix,
}

/// Labels of the `K4` edges `01, 02, 03, 12, 13, 23` (in that order).
pub type K4Labels = [String; 6];

const K4_EDGES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

fn edge_name(prefix: &str, n: usize, u: usize, v: usize) -> String {
    if n <= 10 {
        format!("{prefix}{u}{v}")
    } else {
        format!("{prefix}{u}_{v}")
    }
}

/// Finds which `K4` edge each label of `target` is, using an isomorphism
/// `M[I target] → M(K4)`.
pub fn k4_labels_for(target: &LabeledMatrix) -> Result<K4Labels> {
    if target.nrows() != 3 || target.ncols() != 3 {
        return Err(Error::InvalidArgument("a K4 block must be 3×3".into()));
    }
    let m = Matroid::linear(target.clone())?;
    let k4 = Matroid::graphic(Graph::complete(4, |u, v| format!("{u}{v}")))?;
    let w = is_isomorphic(&m, &k4)?
        .ok_or_else(|| Error::InvalidArgument("the target block does not represent M(K4)".into()))?;
    let mut labels: K4Labels = Default::default();
    for (label, edge) in &w.map {
        let u = (edge.as_bytes()[0] - b'0') as usize;
        let v = (edge.as_bytes()[1] - b'0') as usize;
        let k = K4_EDGES.iter().position(|&e| e == (u, v)).expect("K4 edge");
        labels[k] = label.clone();
    }
    Ok(labels)
}

/// Fundamental-cycle matrix of `K_n` (`n ≥ 4`) for a spanning tree made of
/// three edges of the `K4` on vertices `0..4` plus the edges `0v`, `v ≥ 4`.
///
/// With a `target`, the `K4` labels come from [`k4_labels_for`], the tree
/// edges are the target's rows, and the result is aligned so its
/// `target.rows() × target.cols()` block equals `target`. Without one the
/// `K4` is labelled by `k4` and its tree is the star at vertex `0`. Other
/// edges are named `{prefix}{u}{v}`. Rows list the `K4` tree edges first
/// and columns list the `K4` edges first.
pub fn complete_graph_rep(
    n: usize,
    k4: Option<&K4Labels>,
    target: Option<&LabeledMatrix>,
    prefix: &str,
) -> Result<CompleteGraphRep> {
    if n < 4 {
        return Err(Error::InvalidArgument("n must be at least 4".into()));
    }
    let labels = match (target, k4) {
        (Some(t), _) => k4_labels_for(t)?,
        (None, Some(l)) => l.clone(),
        (None, None) => return Err(Error::InvalidArgument("K4 labels or a target block are required".into())),
    };
    let graph = Graph::complete(n, |u, v| match K4_EDGES.iter().position(|&e| e == (u, v)) {
        Some(k) => labels[k].clone(),
        None => edge_name(prefix, n, u, v),
    });
    let label_of = |u: usize, v: usize| -> &str {
        let (u, v) = (u.min(v), u.max(v));
        &graph.edges().iter().find(|e| e.u == u && e.v == v).expect("complete graph").label
    };
    let k4_tree: Vec<String> = match target {
        Some(t) => t.rows().to_vec(),
        None => vec![labels[0].clone(), labels[1].clone(), labels[2].clone()],
    };
    let mut tree_edges: Vec<(usize, usize)> = k4_tree
        .iter()
        .map(|l| {
            let e = graph.edge(l).expect("tree label is an edge");
            (e.u, e.v)
        })
        .collect();
    tree_edges.extend((4..n).map(|v| (0, v)));
    let rows: Vec<String> = tree_edges.iter().map(|&(u, v)| label_of(u, v).to_string()).collect();
    let mut cols: Vec<(usize, usize)> = Vec::new();
    if let Some(t) = target {
        for l in t.cols() {
            let e = graph.edge(l).expect("target column is an edge");
            cols.push((e.u, e.v));
        }
    }
    for e in graph.edges() {
        if !tree_edges.contains(&(e.u, e.v)) && !cols.contains(&(e.u, e.v)) {
            cols.push((e.u, e.v));
        }
    }
    let paths: Vec<Vec<i64>> = cols.iter().map(|&(u, v)| tree_path(n, &tree_edges, u, v)).collect();
    let entries: Vec<Vec<RingElement>> = (0..tree_edges.len())
        .map(|i| paths.iter().map(|p| RingElement::integer(p[i])).collect())
        .collect();
    let col_labels: Vec<String> = cols.iter().map(|&(u, v)| label_of(u, v).to_string()).collect();
    let mut matrix = LabeledMatrix::new(PartialField::NearRegular, rows, col_labels, entries)?;
    if let Some(t) = target {
        matrix = align_representation(&matrix, t)?;
    }
    Ok(CompleteGraphRep { graph, matrix })
}

/// Signed incidence of the tree path from `u` to `v`: `+1` for a tree edge
/// `(a, b)` (with `a < b`) walked from `a` to `b`, `-1` against.
fn tree_path(n: usize, tree: &[(usize, usize)], u: usize, v: usize) -> Vec<i64> {
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut stack = vec![u];
    seen[u] = true;
    while let Some(x) = stack.pop() {
        for (k, &(a, b)) in tree.iter().enumerate() {
            let y = if a == x {
                b
            } else if b == x {
                a
            } else {
                continue;
            };
            if !seen[y] {
                seen[y] = true;
                parent[y] = Some((x, k));
                stack.push(y);
            }
        }
    }
    let mut out = vec![0; tree.len()];
    let mut y = v;
    while let Some((x, k)) = parent[y] {
        out[k] = if tree[k] == (x, y) { 1 } else { -1 };
        y = x;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::build_a12;

    fn star_labels() -> K4Labels {
        ["p", "q", "r", "s", "t", "u"].map(String::from)
    }

    #[test]
    fn network_matrix_is_unimodular() {
        for n in 4..=5 {
            let rep = complete_graph_rep(n, Some(&star_labels()), None, "g").unwrap();
            assert_eq!((rep.matrix.nrows(), rep.matrix.ncols()), (n - 1, n * (n - 1) / 2 - (n - 1)));
            let cert = rep.matrix.with_field(PartialField::Regular).unwrap().is_p_matrix();
            assert!(cert.verdict, "{cert:?}");
        }
    }

    #[test]
    fn matches_graphic_matroid() {
        for n in 4..=6 {
            let rep = complete_graph_rep(n, Some(&star_labels()), None, "g").unwrap();
            let lin = Matroid::linear(rep.matrix.with_field(PartialField::FiniteField(3)).unwrap()).unwrap();
            assert!(lin.same_matroid(&Matroid::graphic(rep.graph.clone()).unwrap()).unwrap(), "K{n}");
        }
    }

    #[test]
    fn aligned_to_a12_block() {
        let t = build_a12().submatrix(&["a", "b", "c"], &["d", "e", "f"]).unwrap();
        for n in [4, 5] {
            let rep = complete_graph_rep(n, None, Some(&t), "g").unwrap();
            assert_eq!(rep.matrix.submatrix(&["a", "b", "c"], &["d", "e", "f"]).unwrap(), t);
            let lin = Matroid::linear(rep.matrix.clone()).unwrap();
            assert!(lin.same_matroid(&Matroid::graphic(rep.graph.clone()).unwrap()).unwrap());
        }
    }

    #[test]
    fn non_k4_target_rejected() {
        let t = LabeledMatrix::from_ints(
            PartialField::NearRegular,
            &["x", "y", "z"],
            &["u", "v", "w"],
            &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]],
        )
        .unwrap();
        assert!(complete_graph_rep(5, None, Some(&t), "g").is_err());
    }
}
