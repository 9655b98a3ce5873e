//! Frame matroids of signed graphs, represented over `GF(3)`.

use crate::arith::{PartialField, RingElement};
use crate::error::Result;
use crate::graph::SignedGraph;
use crate::matrix::modp::rref_mod_p;
use crate::matrix::LabeledMatrix;
use crate::matroid::Matroid;

/// Vertex-by-edge incidence over `GF(3)`: edge `uv` gets `+1` at `u` and
/// `-σ` at `v`, a negative loop a single `+1`, a positive loop nothing.
pub fn signed_incidence(g: &SignedGraph) -> Vec<Vec<u64>> {
    let graph = g.graph();
    let mut m = vec![vec![0u64; graph.edges().len()]; graph.vertices().len()];
    for (j, (e, &s)) in graph.edges().iter().zip(g.signs()).enumerate() {
        if e.u == e.v {
            if s < 0 {
                m[e.u][j] = 1;
            }
        } else {
            m[e.u][j] = 1;
            m[e.v][j] = if s > 0 { 2 } else { 1 };
        }
    }
    m
}

/// The incidence matrix brought to the standard form `[I A]` by row
/// reduction; rows of `A` are labelled by the pivot edges.
pub fn signed_graph_representation(g: &SignedGraph) -> Result<LabeledMatrix> {
    let inc = signed_incidence(g);
    let labels = g.graph().edge_labels();
    let (rows, cols) = (inc.len(), labels.len());
    let mut flat: Vec<u64> = inc.into_iter().flatten().collect();
    let pivots = rref_mod_p(&mut flat, rows, cols, 3);
    let free: Vec<usize> = (0..cols).filter(|j| !pivots.contains(j)).collect();
    let entries = (0..pivots.len())
        .map(|i| free.iter().map(|&j| RingElement::integer(flat[i * cols + j] as i64)).collect())
        .collect();
    LabeledMatrix::new(
        PartialField::FiniteField(3),
        pivots.iter().map(|&j| labels[j].clone()).collect(),
        free.iter().map(|&j| labels[j].clone()).collect(),
        entries,
    )
}

pub fn signed_graph_matroid(g: &SignedGraph) -> Result<Matroid> {
    Matroid::linear(signed_graph_representation(g)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn verts(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn positive_graph_is_graphic() {
        let g = Graph::new(
            verts(4),
            &[("0", "1", "a"), ("1", "2", "b"), ("2", "0", "c"), ("2", "3", "d"), ("3", "0", "e"), ("1", "3", "f"), ("1", "3", "g")],
        )
        .unwrap();
        let m = signed_graph_matroid(&SignedGraph::all_positive(g.clone())).unwrap();
        assert!(m.same_matroid(&Matroid::graphic(g).unwrap()).unwrap());
    }

    #[test]
    fn negative_loop_is_not_a_loop() {
        let g = Graph::new(verts(1), &[("0", "0", "h")]).unwrap();
        let m = signed_graph_matroid(&SignedGraph::new(g.clone(), vec![-1]).unwrap()).unwrap();
        assert_eq!(m.full_rank(), 1);
        let m = signed_graph_matroid(&SignedGraph::new(g, vec![1]).unwrap()).unwrap();
        assert_eq!(m.full_rank(), 0);
    }

    #[test]
    fn resigning_keeps_the_matroid() {
        let g = Graph::new(
            verts(3),
            &[("0", "1", "a"), ("1", "2", "b"), ("2", "0", "c"), ("0", "1", "d"), ("2", "2", "e")],
        )
        .unwrap();
        let s = SignedGraph::new(g, vec![1, -1, 1, 1, -1]).unwrap();
        let m = signed_graph_matroid(&s).unwrap();
        // the triangle is unbalanced, so the frame matroid has full rank 3
        assert_eq!(m.rank_of(&["a", "b", "c"]).unwrap(), 3);
        for v in 0..3 {
            assert!(signed_graph_matroid(&s.resigned_at(v)).unwrap().same_matroid(&m).unwrap());
        }
    }
}
