use std::time::Duration;

use aqcube::connectivity::{
    edge_connectivity, extra_conn_exhaustive, extra_conn_fragment, menger_local, vertex_connectivity,
};
use aqcube::cuts::validate_cut;
use aqcube::{AqError, AugCube, ConnKind, Cut, Dimension, Edge, Exec, Graph, Method, SearchConfig};
use proptest::prelude::*;

fn cube(n: u32) -> Graph {
    AugCube::build(Dimension::new(n).unwrap()).unwrap().graph().unwrap().clone()
}

fn sizes_without(g: &Graph, alive: &[bool]) -> Vec<usize> {
    g.component_sizes(alive, |_, _| true)
}

/// Smallest vertex set whose removal leaves at least two components, all
/// larger than `h`.
fn brute_vertex(g: &Graph, h: usize) -> Option<usize> {
    let nv = g.vertex_count();
    (0u32..1 << nv)
        .filter(|s| {
            let alive: Vec<bool> = (0..nv).map(|v| s >> v & 1 == 0).collect();
            let sizes = sizes_without(g, &alive);
            sizes.len() >= 2 && sizes[0] > h
        })
        .map(|s| s.count_ones() as usize)
        .min()
}

/// Smallest `∂A` over bipartitions whose sides have only components larger
/// than `h`.
fn brute_edge(g: &Graph, h: usize) -> Option<usize> {
    let nv = g.vertex_count();
    let full = (1u32 << nv) - 1;
    (1..full)
        .filter(|a| {
            [*a, full & !a].iter().all(|side| {
                let alive: Vec<bool> = (0..nv).map(|v| side >> v & 1 == 1).collect();
                sizes_without(g, &alive)[0] > h
            })
        })
        .map(|a| g.edges().iter().filter(|e| (a >> e.u & 1) != (a >> e.v & 1)).count())
        .min()
}

fn connected_graph() -> impl Strategy<Value = Graph> {
    (4usize..=9).prop_flat_map(|nv| {
        proptest::collection::vec(any::<bool>(), nv * (nv - 1) / 2).prop_map(move |bits| {
            let mut edges: Vec<Edge> = (1..nv as u32).map(|v| Edge::new(v - 1, v)).collect();
            let mut k = 0;
            for u in 0..nv as u32 {
                for v in u + 1..nv as u32 {
                    if bits[k] && v != u + 1 {
                        edges.push(Edge::new(u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(nv, &edges).unwrap()
        })
    })
}

fn fragment(g: &Graph, h: usize, exec: Exec) -> aqcube::ConnectivityResult {
    let cfg = SearchConfig { exec, ..Default::default() };
    extra_conn_fragment(g, h, ConnKind::Edge, &cfg).unwrap()
}

fn assert_certified(g: &Graph, r: &aqcube::ConnectivityResult, h: usize) {
    let cut = r.certificate.as_ref().expect("certificate");
    assert_eq!(Some(cut.len()), r.value);
    let cert = validate_cut(g, cut, h).unwrap();
    assert!(cert.is_valid(), "{cert:?}");
    assert_eq!(cert.component_sizes.iter().sum::<usize>() + if cut.kind() == ConnKind::Vertex { cut.len() } else { 0 }, g.vertex_count());
}

#[test]
fn classical_connectivity_values() {
    let r = vertex_connectivity(&cube(3), Exec::default());
    assert_eq!(r.value, Some(4));
    assert_certified(&cube(3), &r, 0);
    for n in 4..=10u32 {
        let g = cube(n);
        let r = vertex_connectivity(&g, Exec::default());
        assert_eq!(r.value, Some(2 * n as usize - 1), "kappa, n = {n}");
        assert_certified(&g, &r, 0);
    }
    for n in 2..=9u32 {
        let g = cube(n);
        let r = edge_connectivity(&g, Exec::default());
        assert_eq!(r.value, Some(2 * n as usize - 1), "lambda, n = {n}");
        assert_certified(&g, &r, 0);
    }
}

#[test]
fn complete_cubes_use_the_convention() {
    for (n, k) in [(1, 1), (2, 3)] {
        let r = vertex_connectivity(&cube(n), Exec::default());
        assert!(r.complete_convention);
        assert_eq!(r.value, Some(k));
        assert!(r.certificate.is_none());
    }
}

#[test]
fn kappa_lambda_delta_on_cubes() {
    for n in 3..=8 {
        let g = cube(n);
        let k = vertex_connectivity(&g, Exec::default()).value.unwrap();
        let l = edge_connectivity(&g, Exec::default()).value.unwrap();
        assert!(k <= l && l <= g.min_degree(), "n = {n}: {k} {l}");
    }
}

#[test]
fn exhaustive_edge_values_at_n4() {
    let g = cube(4);
    for (h, want) in [(0, 7), (1, 12), (2, 15)] {
        let r = extra_conn_exhaustive(&g, h, ConnKind::Edge, Exec::default()).unwrap();
        assert_eq!(r.value, Some(want), "h = {h}");
        assert_eq!(r.method, Method::Exhaustive);
        assert_certified(&g, &r, h);
    }
}

#[test]
fn fragment_equals_exhaustive_at_n4() {
    let g = cube(4);
    for h in 0..=2 {
        let a = extra_conn_exhaustive(&g, h, ConnKind::Edge, Exec::default()).unwrap();
        let b = fragment(&g, h, Exec::default());
        assert!(b.exact);
        assert_eq!(a.value, b.value, "h = {h}");
        assert_eq!(a.certificate, b.certificate, "both report the smallest certificate");
    }
}

#[test]
fn fragment_values_at_n5() {
    let g = cube(5);
    for (h, want) in [(0, 9), (1, 16), (2, 21)] {
        let r = fragment(&g, h, Exec::default());
        assert!(r.exact);
        assert_eq!(r.value, Some(want), "h = {h}");
        assert_certified(&g, &r, h);
    }
}

#[test]
fn monotone_in_h() {
    for n in [3, 4] {
        let g = cube(n);
        for kind in [ConnKind::Vertex, ConnKind::Edge] {
            let vals: Vec<Option<usize>> = (0..=2)
                .map(|h| extra_conn_exhaustive(&g, h, kind, Exec::default()).unwrap().value)
                .collect();
            for w in vals.windows(2) {
                if let (Some(a), Some(b)) = (w[0], w[1]) {
                    assert!(a <= b, "n = {n} {kind}: {vals:?}");
                }
            }
        }
    }
}

#[test]
fn no_two_extra_vertex_cut_in_aq3() {
    let r = extra_conn_exhaustive(&cube(3), 2, ConnKind::Vertex, Exec::default()).unwrap();
    assert_eq!(r.value, None);
    assert!(r.certificate.is_none());
}

#[test]
fn exhaustive_refuses_large_graphs() {
    assert!(matches!(
        extra_conn_exhaustive(&cube(5), 1, ConnKind::Edge, Exec::default()),
        Err(AqError::Capacity(_))
    ));
    let cfg = SearchConfig::default();
    assert!(extra_conn_fragment(&cube(4), 1, ConnKind::Vertex, &cfg).is_err());
}

#[test]
fn menger_pairs_on_small_cubes() {
    let g = cube(3);
    let mut vertex_min = usize::MAX;
    for s in 0..8 {
        for t in s + 1..8 {
            let e = menger_local(&g, s, t, ConnKind::Edge).unwrap();
            assert_eq!(e.value, Some(5));
            if !g.has_edge(s, t) {
                let v = menger_local(&g, s, t, ConnKind::Vertex).unwrap();
                let cert = validate_cut(&g, v.certificate.as_ref().unwrap(), 0).unwrap();
                assert!(cert.disconnected);
                assert_eq!(v.value, Some(v.certificate.unwrap().len()));
                vertex_min = vertex_min.min(v.value.unwrap());
            } else {
                assert!(menger_local(&g, s, t, ConnKind::Vertex).is_err());
            }
        }
    }
    assert_eq!(vertex_min, 4);
    let g = cube(4);
    for t in 1..16 {
        assert!(menger_local(&g, 0, t, ConnKind::Edge).unwrap().value.unwrap() >= 7);
        if !g.has_edge(0, t) {
            assert!(menger_local(&g, 0, t, ConnKind::Vertex).unwrap().value.unwrap() >= 7);
        }
    }
}

#[test]
fn timeout_returns_an_upper_bound() {
    let g = cube(8);
    let cfg = SearchConfig { timeout: Duration::ZERO, ..Default::default() };
    let r = extra_conn_fragment(&g, 2, ConnKind::Edge, &cfg).unwrap();
    assert!(!r.exact);
    if let Some(v) = r.value {
        assert!(v >= 6 * 8 - 9);
    }
}

#[test]
fn exec_modes_agree() {
    let g = cube(6);
    assert_eq!(
        vertex_connectivity(&g, Exec::Sequential).certificate,
        vertex_connectivity(&g, Exec::Parallel).certificate
    );
    assert_eq!(
        edge_connectivity(&g, Exec::Sequential).certificate,
        edge_connectivity(&g, Exec::Parallel).certificate
    );
    let g = cube(5);
    assert_eq!(fragment(&g, 2, Exec::Sequential).certificate, fragment(&g, 2, Exec::Parallel).certificate);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn flow_matches_brute_force(g in connected_graph()) {
        let k = vertex_connectivity(&g, Exec::default());
        if g.is_complete() {
            prop_assert_eq!(k.value, Some(g.vertex_count() - 1));
        } else {
            prop_assert_eq!(k.value, brute_vertex(&g, 0));
            let cert = validate_cut(&g, k.certificate.as_ref().unwrap(), 0).unwrap();
            prop_assert!(cert.is_valid());
        }
        let l = edge_connectivity(&g, Exec::default());
        prop_assert_eq!(l.value, brute_edge(&g, 0));
        prop_assert!(k.value.unwrap() <= l.value.unwrap());
        prop_assert!(l.value.unwrap() <= g.min_degree());
    }

    #[test]
    fn exhaustive_matches_brute_force(g in connected_graph(), h in 0usize..=2) {
        let v = extra_conn_exhaustive(&g, h, ConnKind::Vertex, Exec::default()).unwrap();
        prop_assert_eq!(v.value, brute_vertex(&g, h));
        let e = extra_conn_exhaustive(&g, h, ConnKind::Edge, Exec::default()).unwrap();
        prop_assert_eq!(e.value, brute_edge(&g, h));
        for r in [&v, &e] {
            if let Some(c) = &r.certificate {
                prop_assert!(validate_cut(&g, c, h).unwrap().is_valid());
            }
        }
    }

    #[test]
    fn fragment_matches_exhaustive(g in connected_graph(), h in 0usize..=2) {
        let a = extra_conn_exhaustive(&g, h, ConnKind::Edge, Exec::default()).unwrap();
        let b = fragment(&g, h, Exec::default());
        prop_assert!(b.exact);
        prop_assert_eq!(a.value, b.value);
        prop_assert_eq!(a.certificate, b.certificate);
    }

    #[test]
    fn random_cuts_conserve_vertices(n in 3u32..=6, mask in any::<u64>(), h in 0usize..3) {
        let g = cube(n);
        let nv = g.vertex_count();
        let vertices: Vec<u32> = (0..nv as u32).filter(|v| mask >> v & 1 == 1).collect();
        let cert = validate_cut(&g, &Cut::Vertex(vertices.clone()), h).unwrap();
        prop_assert_eq!(cert.component_sizes.iter().sum::<usize>() + vertices.len(), nv);
        prop_assert!(cert.component_sizes.windows(2).all(|w| w[0] <= w[1]));
        prop_assert_eq!(cert.disconnected, cert.component_sizes.len() >= 2);
        prop_assert_eq!(cert.min_component, cert.component_sizes.first().copied().unwrap_or(0));

        let edges: Vec<Edge> = g.edges().into_iter().enumerate().filter(|(i, _)| mask.rotate_left(*i as u32) & 1 == 1).map(|(_, e)| e).collect();
        let cert = validate_cut(&g, &Cut::Edge(edges), h).unwrap();
        prop_assert_eq!(cert.component_sizes.iter().sum::<usize>(), nv);
        prop_assert_eq!(cert.h_extra_valid(h), cert.disconnected && cert.min_component > h);
    }
}
