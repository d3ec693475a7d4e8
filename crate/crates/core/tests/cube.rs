use aqcube::{AugCube, Dimension, EdgeKind, Half, VertexId};
use proptest::prelude::*;

fn d(n: u32) -> Dimension {
    Dimension::new(n).unwrap()
}

fn vertex_in(max_n: u32) -> impl Strategy<Value = (u32, VertexId)> {
    (1..=max_n).prop_flat_map(|n| (Just(n), (0..1u32 << n).prop_map(VertexId)))
}

#[test]
fn involutions_exhaustive_to_12() {
    for n in 1..=12 {
        let dim = d(n);
        for x in dim.vertices() {
            assert_eq!(x.hyper(1), x.complement(1));
            for i in 1..=n {
                assert_eq!(dim.hyper_neighbor(dim.hyper_neighbor(x, i).unwrap(), i).unwrap(), x);
                assert_eq!(dim.comp_neighbor(dim.comp_neighbor(x, i).unwrap(), i).unwrap(), x);
            }
        }
    }
}

#[test]
fn degree_and_edge_count_to_12() {
    for n in 2..=12u32 {
        let cube = AugCube::build(d(n)).unwrap();
        let g = cube.graph().unwrap();
        assert_eq!(g.min_degree(), 2 * n as usize - 1, "n = {n}");
        assert_eq!(g.max_degree(), 2 * n as usize - 1, "n = {n}");
        assert_eq!(g.edge_count(), (2 * n as usize - 1) << (n - 1), "n = {n}");
    }
}

#[test]
fn two_crossed_neighbors_to_12() {
    for n in 2..=12 {
        let dim = d(n);
        for x in dim.vertices() {
            let side = dim.half(x).unwrap();
            let crossed: Vec<VertexId> = dim
                .neighbors(x)
                .unwrap()
                .into_iter()
                .filter(|&y| dim.half(y).unwrap() != side)
                .collect();
            assert_eq!(crossed.len(), 2);
            let (a, b) = dim.crossed_neighbors(x).unwrap();
            assert!(crossed.contains(&a) && crossed.contains(&b));
        }
    }
}

#[test]
fn recursive_matches_direct_to_10() {
    for n in 2..=10 {
        let mut rec = d(n).recursive_edges().unwrap();
        rec.sort_unstable();
        assert_eq!(rec, d(n).direct_edges().unwrap(), "n = {n}");
    }
}

#[test]
fn halves_split_evenly() {
    let dim = d(6);
    let left = dim.vertices().filter(|&x| dim.half(x).unwrap() == Half::L).count();
    assert_eq!(left, 32);
}

proptest! {
    #[test]
    fn classify_iff_neighbor((n, x) in vertex_in(12), y in any::<u32>()) {
        let dim = d(n);
        let y = VertexId(y & ((1u32 << n) - 1));
        let forward = dim.classify_edge(x, y);
        let backward = dim.classify_edge(y, x);
        prop_assert_eq!(forward.is_some(), dim.neighbors(x).unwrap().contains(&y));
        prop_assert_eq!(forward, backward);
    }

    #[test]
    fn kinds_reach_their_endpoint((n, x) in vertex_in(12)) {
        let dim = d(n);
        for kind in dim.edge_kinds() {
            let y = dim.endpoint(x, kind).unwrap();
            prop_assert_eq!(dim.classify_edge(x, y), Some(kind));
        }
        prop_assert_eq!(dim.edge_kinds().count(), dim.degree());
    }

    #[test]
    fn one_bit_differences_are_hypercube((n, x) in vertex_in(12), i in 1u32..=12) {
        prop_assume!(i <= n);
        prop_assert_eq!(d(n).classify_edge(x, x.hyper(i)), Some(EdgeKind::Hypercube(i)));
    }

    #[test]
    fn neighbors_are_distinct_and_in_range((n, x) in vertex_in(20)) {
        let dim = d(n);
        let mut nb = dim.neighbors(x).unwrap();
        prop_assert!(nb.iter().all(|&y| dim.contains(y) && y != x));
        nb.sort_unstable();
        nb.dedup();
        prop_assert_eq!(nb.len(), 2 * n as usize - 1);
    }

    #[test]
    fn bits_round_trip((n, x) in vertex_in(20)) {
        prop_assert_eq!(VertexId::from_bits(&x.to_bits(n)).unwrap(), x);
    }
}
