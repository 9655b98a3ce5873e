use nearreg::arith::PartialField;
use nearreg::constructions::{
    build_a12, build_m12, complete_graph_rep, signed_graph_matroid, verify_gluing_instance, K4Labels,
};
use nearreg::gpc::{gpc_assemble, gpc_oracle, GpcLayout};
use nearreg::graph::{Graph, SignedGraph};
use nearreg::matroid::Matroid;

fn k4_block() -> nearreg::matrix::LabeledMatrix {
    build_a12().submatrix(&["a", "b", "c"], &["d", "e", "f"]).unwrap()
}

#[test]
fn complete_graph_reps_are_totally_unimodular() {
    let labels: K4Labels = ["01", "02", "03", "12", "13", "23"].map(String::from);
    for n in 4..=5 {
        let rep = complete_graph_rep(n, Some(&labels), None, "e").unwrap();
        let a = rep.matrix.with_field(PartialField::Regular).unwrap();
        assert!(a.is_p_matrix().verdict, "K{n}");
        let graphic = Matroid::graphic(rep.graph).unwrap();
        assert!(Matroid::linear(rep.matrix).unwrap().same_matroid(&graphic).unwrap(), "K{n}");
    }
}

#[test]
fn complete_graph_rep_matches_target_block() {
    let t = k4_block();
    let rep = complete_graph_rep(5, None, Some(&t), "g").unwrap();
    assert_eq!(rep.matrix.submatrix(t.rows(), t.cols()).unwrap(), t);
}

#[test]
fn k6_glued_onto_m12_is_internally_4_connected() {
    let k6 = Matroid::graphic(complete_graph_rep(6, None, Some(&k4_block()), "g").unwrap().graph).unwrap();
    let r = verify_gluing_instance(&k6, &build_m12()).unwrap();
    assert!(r.hypotheses_hold);
    assert!(r.conclusion_holds());
    assert_eq!(r.conclusion.unwrap().partitions_checked, 1 << 20);
}

#[test]
fn assembled_matrix_agrees_with_flats_oracle() {
    let t = k4_block();
    let k5 = complete_graph_rep(5, None, Some(&t), "g").unwrap().matrix;
    let a12 = build_a12();
    let layout = GpcLayout::from_parts(&k5, &a12, t.rows(), t.cols()).unwrap();
    let glued = Matroid::linear(gpc_assemble(&layout).unwrap()).unwrap();
    let oracle = gpc_oracle(&Matroid::linear(k5).unwrap(), &Matroid::linear(a12).unwrap()).unwrap();
    assert_eq!(glued.size(), 16);
    assert!(glued.same_matroid(&oracle).unwrap());
}

#[test]
fn balanced_signed_graph_is_graphic() {
    let g = Graph::complete(4, |u, v| format!("{u}{v}"));
    let frame = signed_graph_matroid(&SignedGraph::all_positive(g.clone())).unwrap();
    assert!(frame.same_matroid(&Matroid::graphic(g.clone()).unwrap()).unwrap());
    // resigning at a vertex keeps the frame matroid
    let mut signs = vec![1i8; 6];
    signs[0] = -1;
    let sg = SignedGraph::new(g, signs).unwrap();
    let resigned = sg.resigned_at(2);
    assert!(signed_graph_matroid(&sg).unwrap().same_matroid(&signed_graph_matroid(&resigned).unwrap()).unwrap());
    assert_eq!(signed_graph_matroid(&sg).unwrap().full_rank(), 4);
}
