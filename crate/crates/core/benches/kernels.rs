use std::hint::black_box;

use aqcube::census::{census_path2, verify_quad_bound};
use aqcube::connectivity::{extra_conn_exhaustive, extra_conn_fragment, vertex_connectivity};
use aqcube::{AugCube, ConnKind, Dimension, Exec, Graph, SearchConfig};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn cube(n: u32) -> Graph {
    AugCube::build(Dimension::new(n).unwrap()).unwrap().graph().unwrap().clone()
}

fn censuses(c: &mut Criterion) {
    let mut group = c.benchmark_group("census");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::new("path2", name), &8u32, |b, &n| {
            b.iter(|| census_path2(black_box(n), exec).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("quad-bound", name), &7u32, |b, &n| {
            b.iter(|| verify_quad_bound(black_box(n), exec).unwrap())
        });
    }
    group.finish();
}

fn searches(c: &mut Criterion) {
    let g4 = cube(4);
    let g5 = cube(5);
    let g8 = cube(8);
    let mut group = c.benchmark_group("search");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new("exhaustive-edge-h2-n4", name), |b| {
            b.iter(|| extra_conn_exhaustive(black_box(&g4), 2, ConnKind::Edge, exec).unwrap())
        });
        group.bench_function(BenchmarkId::new("exhaustive-vertex-h1-n4", name), |b| {
            b.iter(|| extra_conn_exhaustive(black_box(&g4), 1, ConnKind::Vertex, exec).unwrap())
        });
        let cfg = SearchConfig { exec, ..Default::default() };
        group.bench_function(BenchmarkId::new("fragment-edge-h2-n5", name), |b| {
            b.iter(|| extra_conn_fragment(black_box(&g5), 2, ConnKind::Edge, &cfg).unwrap())
        });
        group.bench_function(BenchmarkId::new("flow-vertex-n8", name), |b| {
            b.iter(|| vertex_connectivity(black_box(&g8), exec))
        });
    }
    group.finish();
}

criterion_group!(benches, censuses, searches);
criterion_main!(benches);
