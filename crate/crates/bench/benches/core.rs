use criterion::{black_box, criterion_group, criterion_main, Criterion};
use plancol_bench::{cube, family};
use plancol_core::caseenum::{min_final_charge, Center, Switches};
use plancol_core::coloring::{solve, verify_superextendability_on};
use plancol_core::configurations::{catalog, verify_local_extendability};
use plancol_core::discharging::apply_rules;
use plancol_core::io::{generate_plane_graphs, read_planar_code, write_planar_code, GraphFilter};
use plancol_core::plane_graph::{check_family_membership, enumerate_cycles};
use plancol_core::{ColorSpec, Coloring};

fn plane_graph(c: &mut Criterion) {
    let graphs = generate_plane_graphs(7, GraphFilter::All).unwrap();
    c.bench_function("family check, n <= 7", |b| {
        b.iter(|| graphs.iter().filter(|g| check_family_membership(*g).is_member()).count())
    });
    c.bench_function("cycles up to 7, n <= 7", |b| {
        b.iter(|| graphs.iter().map(|g| enumerate_cycles(g, 7).len()).sum::<usize>())
    });
}

fn coloring(c: &mut Criterion) {
    let graphs = family(8);
    let spec = ColorSpec::one_one_zero();
    c.bench_function("solve (1,1,0), F with n <= 8", |b| {
        b.iter(|| graphs.iter().filter(|g| solve(*g, &spec, &Coloring::empty(g.rotation().len())).unwrap().is_some()).count())
    });
    let with_triangles: Vec<_> = graphs
        .iter()
        .filter_map(|g| enumerate_cycles(g, 3).into_iter().next().map(|t| (g.clone(), t)))
        .take(100)
        .collect();
    c.bench_function("superextendability, 100 graphs", |b| {
        b.iter(|| {
            with_triangles
                .iter()
                .filter(|(g, t)| verify_superextendability_on(g, &spec, t, false).unwrap().is_ok())
                .count()
        })
    });
}

fn configurations(c: &mut Criterion) {
    let cat = catalog();
    c.bench_function("verify catalog", |b| {
        b.iter(|| cat.iter().filter(|cfg| verify_local_extendability(cfg).unwrap().ok).count())
    });
}

fn discharging(c: &mut Criterion) {
    let r = cube();
    c.bench_function("ledger, cube", |b| b.iter(|| apply_rules(black_box(&r))));
}

fn caseenum(c: &mut Criterion) {
    let mut g = c.benchmark_group("case minima");
    g.sample_size(10);
    for center in ["face:4", "vertex:4", "c0-vertex:5"] {
        let center: Center = center.parse().unwrap();
        g.bench_function(center.to_string(), |b| b.iter(|| min_final_charge(center, &Switches::all()).unwrap()));
    }
    g.finish();
}

fn io(c: &mut Criterion) {
    let graphs = generate_plane_graphs(7, GraphFilter::All).unwrap();
    let bytes = write_planar_code(&graphs);
    c.bench_function("planar_code read, n <= 7", |b| b.iter(|| read_planar_code(black_box(&bytes)).unwrap().len()));
    let mut g = c.benchmark_group("generator");
    g.sample_size(10);
    g.bench_function("all, n <= 7", |b| b.iter(|| generate_plane_graphs(7, GraphFilter::All).unwrap().len()));
    g.finish();
}

criterion_group!(benches, plane_graph, coloring, configurations, discharging, caseenum, io);
criterion_main!(benches);
