use aqcube::connectivity::extra_conn_exhaustive;
use aqcube::cuts::{kappa2_candidate_cut, lambda2_candidate_cut, super_edge_cut, super_vertex_cut, validate_cut};
use aqcube::neighborhood::path2_class;
use aqcube::{AugCube, ConnKind, Cut, Dimension, EdgeKind, Exec, Graph, VertexId};
use proptest::prelude::*;

fn d(n: u32) -> Dimension {
    Dimension::new(n).unwrap()
}

fn graph(n: u32) -> Graph {
    AugCube::build(d(n)).unwrap().graph().unwrap().clone()
}

fn vertex_cut(set: &[VertexId]) -> Cut {
    Cut::Vertex(set.iter().map(|v| v.0).collect())
}

#[test]
fn kappa2_size_for_every_base_and_index() {
    for n in 5..=12u32 {
        let dim = d(n);
        for x in dim.vertices() {
            for i in 2..=n - 3 {
                let (path, s) = kappa2_candidate_cut(dim, x, i).unwrap();
                assert_eq!(s.len(), 6 * n as usize - 17, "n = {n}, x = {x}, i = {i}");
                assert_eq!(path2_class(dim, &path).unwrap().key(), "CC/j=i+2,j<n");
            }
        }
    }
}

#[test]
fn kappa2_certifies_at_9_to_11() {
    for n in 9..=11 {
        let g = graph(n);
        let (_, s) = kappa2_candidate_cut(d(n), VertexId(0), 2).unwrap();
        let cert = validate_cut(&g, &vertex_cut(&s), 2).unwrap();
        assert!(cert.is_valid(), "n = {n}: {:?}", cert.component_sizes);
        assert_eq!(cert.component_sizes.iter().sum::<usize>() + s.len(), 1 << n);
    }
    let g = graph(9);
    for i in 2..=6 {
        let (_, s) = kappa2_candidate_cut(d(9), VertexId(0), i).unwrap();
        assert!(validate_cut(&g, &vertex_cut(&s), 2).unwrap().is_valid(), "i = {i}");
    }
}

#[test]
fn lambda2_certifies_at_4_to_11() {
    for n in 4..=11 {
        let g = graph(n);
        let (tri, f) = lambda2_candidate_cut(d(n), VertexId(0)).unwrap();
        assert_eq!(f.len(), 6 * n as usize - 9);
        let cert = validate_cut(&g, &Cut::Edge(f), 2).unwrap();
        assert!(cert.is_valid(), "n = {n}");
        assert_eq!(cert.component_sizes, vec![3, (1 << n) - 3]);
        for (a, b) in [(0, 1), (1, 2), (0, 2)] {
            assert!(g.has_edge(tri[a].0, tri[b].0));
        }
    }
}

#[test]
fn lambda2_size_for_every_base() {
    for n in 4..=12 {
        let dim = d(n);
        for x in dim.vertices() {
            assert_eq!(lambda2_candidate_cut(dim, x).unwrap().1.len(), 6 * n as usize - 9);
        }
    }
}

#[test]
fn lambda2_construction_is_optimal_at_n4() {
    let g = graph(4);
    let best = extra_conn_exhaustive(&g, 2, ConnKind::Edge, Exec::default()).unwrap();
    let (_, f) = lambda2_candidate_cut(d(4), VertexId(0)).unwrap();
    assert_eq!(best.value, Some(f.len()));
}

#[test]
fn super_cuts_certify_h1() {
    for n in 4..=8u32 {
        let dim = d(n);
        let g = graph(n);
        for i in 2..n {
            let s = super_vertex_cut(dim, VertexId(0), EdgeKind::Complement(i)).unwrap();
            assert_eq!(s.len(), 4 * n as usize - 8);
            assert!(validate_cut(&g, &vertex_cut(&s), 1).unwrap().is_valid(), "n = {n}, C{i}");
        }
        for kind in dim.edge_kinds() {
            let f = super_edge_cut(dim, VertexId(0), kind).unwrap();
            assert_eq!(f.len(), 4 * n as usize - 4);
            assert!(validate_cut(&g, &Cut::Edge(f), 1).unwrap().is_valid(), "n = {n}, {kind}");
        }
    }
}

#[test]
fn super_values_at_n4() {
    let g = graph(4);
    let v = extra_conn_exhaustive(&g, 1, ConnKind::Vertex, Exec::default()).unwrap();
    assert_eq!(v.value, Some(8));
    let e = extra_conn_exhaustive(&g, 1, ConnKind::Edge, Exec::default()).unwrap();
    assert_eq!(e.value, Some(4 * 4 - 4));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn kappa2_certifies_from_any_base(x in 0u32..512, i in 2u32..=6) {
        let g = graph(9);
        let (_, s) = kappa2_candidate_cut(d(9), VertexId(x), i).unwrap();
        prop_assert!(validate_cut(&g, &vertex_cut(&s), 2).unwrap().is_valid());
    }

    #[test]
    fn lambda2_certifies_from_any_base(n in 4u32..=9, x in any::<u32>()) {
        let x = VertexId(x & ((1 << n) - 1));
        let (_, f) = lambda2_candidate_cut(d(n), x).unwrap();
        prop_assert!(validate_cut(&graph(n), &Cut::Edge(f), 2).unwrap().is_valid());
    }
}
