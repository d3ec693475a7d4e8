use aqcube::io::{export, import, GraphFormat};
use aqcube::{AugCube, Dimension, Edge, Graph};
use proptest::prelude::*;

#[test]
fn cubes_round_trip_in_both_formats() {
    for n in 1..=10 {
        let cube = AugCube::build(Dimension::new(n).unwrap()).unwrap();
        let g = cube.graph().unwrap();
        for format in [GraphFormat::EdgeList, GraphFormat::Dimacs] {
            let bytes = export(g, format);
            let back = import(std::str::from_utf8(&bytes).unwrap(), format).unwrap();
            assert_eq!(back.edges(), g.edges(), "n = {n}, {format}");
            assert_eq!(export(&back, format), bytes);
        }
    }
}

#[test]
fn dimacs_is_one_based() {
    let g = AugCube::build(Dimension::new(2).unwrap()).unwrap();
    let text = String::from_utf8(export(g.graph().unwrap(), GraphFormat::Dimacs)).unwrap();
    assert!(text.starts_with("p edge 4 6\ne 1 2\n"));
}

proptest! {
    #[test]
    fn arbitrary_graphs_round_trip(nv in 2usize..40, pairs in proptest::collection::vec((0u32..40, 0u32..40), 0..120)) {
        let mut edges: Vec<Edge> = pairs
            .into_iter()
            .filter(|&(a, b)| a != b && (a as usize) < nv && (b as usize) < nv)
            .map(|(a, b)| Edge::new(a, b))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        let g = Graph::from_edges(nv, &edges).unwrap();
        for format in [GraphFormat::EdgeList, GraphFormat::Dimacs] {
            let text = String::from_utf8(export(&g, format)).unwrap();
            let back = import(&text, format).unwrap();
            prop_assert_eq!(back.vertex_count(), nv);
            prop_assert_eq!(back.edges(), edges.clone());
        }
    }
}
