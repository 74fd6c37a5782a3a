//! The defective-coloring solver against exhaustive enumeration.

mod common;

use common::any_rooted;
use plancol_core::coloring::{solve, superextend_on, validate, Color};
use plancol_core::{Adjacency, ColorSpec, Coloring, SimpleGraph, Vertex};
use proptest::prelude::*;

/// Assignments of `k` colors to `n` vertices in lexicographic order.
fn assignments(n: usize, k: usize) -> impl Iterator<Item = Vec<Color>> {
    let total = (k as u64).pow(n as u32);
    (0..total).map(move |mut x| {
        let mut c = vec![0; n];
        for v in (0..n).rev() {
            c[v] = (x % k as u64) as Color;
            x /= k as u64;
        }
        c
    })
}

fn valid(g: &impl Adjacency, spec: &ColorSpec, c: &[Color]) -> bool {
    (0..g.vertex_count()).all(|v| {
        g.neighbors(v).iter().filter(|&&u| c[u] == c[v]).count() as u32 <= spec.cap(c[v])
    })
}

fn oracle(g: &impl Adjacency, spec: &ColorSpec) -> Option<Vec<Color>> {
    assignments(g.vertex_count(), spec.k()).find(|c| valid(g, spec, c))
}

fn any_simple_graph() -> impl Strategy<Value = SimpleGraph> {
    (1usize..=7).prop_flat_map(|n| {
        let pairs: Vec<(Vertex, Vertex)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let m = pairs.len();
        prop::collection::vec(any::<bool>(), m).prop_map(move |keep| {
            let edges: Vec<_> = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e).collect();
            SimpleGraph::from_edges(n, &edges).unwrap()
        })
    })
}

fn any_spec() -> impl Strategy<Value = ColorSpec> {
    prop::collection::vec(0u32..=2, 1..=3).prop_map(|caps| ColorSpec::new(caps).unwrap())
}

fn complete(m: usize) -> SimpleGraph {
    let edges: Vec<_> = (0..m).flat_map(|u| (u + 1..m).map(move |v| (u, v))).collect();
    SimpleGraph::from_edges(m, &edges).unwrap()
}

#[test]
fn complete_graphs_under_one_one_zero() {
    let spec = ColorSpec::one_one_zero();
    for m in 1..=7 {
        let sat = solve(&complete(m), &spec, &Coloring::empty(m)).unwrap().is_some();
        assert_eq!(sat, m <= 5, "K{m}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 400, ..ProptestConfig::default() })]

    #[test]
    fn solver_matches_enumeration(g in any_simple_graph(), spec in any_spec()) {
        let n = g.vertex_count();
        let got = solve(&g, &spec, &Coloring::empty(n)).unwrap();
        let want = oracle(&g, &spec);
        match (&got, &want) {
            (Some(phi), Some(w)) => {
                prop_assert!(validate(&g, &spec, phi, true).unwrap().is_valid());
                // The solver's answer is the lexicographically least coloring.
                prop_assert_eq!(&phi.to_total().unwrap(), w);
            }
            (None, None) => {}
            _ => prop_assert!(false, "solver {:?} oracle {:?}", got, want),
        }
    }

    #[test]
    fn larger_caps_keep_satisfiability(g in any_simple_graph(), spec in any_spec(), bumps in prop::collection::vec(0u32..=1, 3)) {
        let n = g.vertex_count();
        let bigger = ColorSpec::new(spec.caps().iter().zip(&bumps).map(|(c, b)| c + b).collect()).unwrap();
        prop_assert!(spec.le(&bigger));
        if solve(&g, &spec, &Coloring::empty(n)).unwrap().is_some() {
            prop_assert!(solve(&g, &bigger, &Coloring::empty(n)).unwrap().is_some());
        }
    }

    #[test]
    fn partial_colorings_are_respected(g in any_simple_graph(), spec in any_spec(), seed in prop::collection::vec(prop::option::of(0u8..3), 7)) {
        let n = g.vertex_count();
        let fixed: Vec<Option<Color>> = seed[..n].iter().map(|c| c.map(|c| c % spec.k() as Color)).collect();
        let got = solve(&g, &spec, &Coloring::from_partial(fixed.clone())).unwrap();
        let want = assignments(n, spec.k())
            .find(|c| valid(&g, &spec, c) && fixed.iter().zip(c).all(|(f, &x)| f.is_none_or(|f| f == x)));
        prop_assert_eq!(got.map(|p| p.to_total().unwrap()), want);
    }

    #[test]
    fn superextension_keeps_c0_and_matches_enumeration(r in any_rooted(), seed in prop::collection::vec(0u8..3, 12)) {
        prop_assume!(r.outer_is_cycle());
        let g = r.base();
        let spec = ColorSpec::one_one_zero();
        let c0 = r.outer().to_vec();
        let phi0: Vec<Color> = c0.iter().enumerate().map(|(i, _)| seed[i % seed.len()]).collect();
        let Ok(got) = superextend_on(g, &spec, &c0, &phi0) else {
            // Rejected precolorings are exactly the ones invalid on C0 itself.
            let valid_on_c0 = c0.iter().enumerate().all(|(i, &v)| {
                c0.iter().enumerate().filter(|&(j, &u)| j != i && phi0[j] == phi0[i] && g.has_edge(u, v)).count() as u32
                    <= spec.cap(phi0[i])
            });
            prop_assert!(!valid_on_c0);
            return Ok(());
        };
        let n = g.vertex_count();
        let on_c0 = |v: Vertex| c0.contains(&v);
        let ok = |c: &[Color]| {
            valid(g, &spec, c)
                && c0.iter().zip(&phi0).all(|(&v, &x)| c[v] == x)
                && (0..n).filter(|&v| !on_c0(v)).all(|v| g.neighbors(v).iter().all(|&u| !on_c0(u) || c[u] != c[v]))
        };
        match got {
            Some(phi) => {
                let total = phi.to_total().unwrap();
                for (&v, &x) in c0.iter().zip(&phi0) {
                    prop_assert_eq!(total[v], x);
                }
                prop_assert!(ok(&total));
            }
            None => prop_assert!(assignments(n, 3).all(|c| !ok(&c))),
        }
    }
}
