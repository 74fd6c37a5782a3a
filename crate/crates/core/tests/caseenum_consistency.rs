//! Scenarios read off concrete graphs must evaluate to the charge the
//! whole-graph engine computes, and admissible scenarios obey the degree bound.

use num_rational::Rational64 as Q;
use plancol_core::caseenum::{
    evaluate, scenario_at_c0, scenario_at_face, scenario_at_vertex, Center, Corner, LocalScenario, Occ, Switches,
    Unit, PREDICATES,
};
use plancol_core::discharging::{apply_rules_with, classify_roles, Element, Rule};
use plancol_core::io::{generate_plane_graphs, GraphFilter};
use plancol_core::{Adjacency, RootedPlaneGraph};
use proptest::prelude::*;

#[test]
fn extracted_scenarios_match_engine() {
    let graphs = generate_plane_graphs(8, GraphFilter::FamilyF).unwrap();
    let (mut vertices, mut faces, mut outers) = (0, 0, 0);
    for g in &graphs {
        for f in 0..g.face_count() {
            if !g.faces()[f].is_cycle() {
                continue;
            }
            let r = RootedPlaneGraph::at_face(g.clone(), f);
            let roles = classify_roles(&r);
            let ledger = apply_rules_with(&r, &roles);
            for v in 0..g.vertex_count() {
                if let Some(s) = scenario_at_vertex(&r, &roles, v) {
                    vertices += 1;
                    assert_eq!(evaluate(&s).final_charge, ledger.final_charge(Element::Vertex(v)), "{s} at v{v} in {:?}", g.rotation());
                }
            }
            for h in r.inner_faces() {
                if let Some(s) = scenario_at_face(&r, &roles, h) {
                    faces += 1;
                    // The extra unit C0 draws from a face at its 2-vertices is C0's business.
                    let extra = ledger.flow(Element::Face(h), Rule::R5, false);
                    assert_eq!(evaluate(&s).final_charge - extra, ledger.final_charge(Element::Face(h)), "{s} at f{h}");
                }
            }
            if let Some(s) = scenario_at_c0(&r) {
                outers += 1;
                assert_eq!(evaluate(&s).final_charge, ledger.final_charge(Element::C0), "{s}");
            }
        }
    }
    assert!(vertices > 1000 && faces > 100 && outers > 100, "{vertices} {faces} {outers}");
}

fn occ(l: &str) -> Occ {
    l.parse().unwrap()
}

/// Random vertex scenario, repaired toward well-formedness: clashing
/// triangles become big faces and misplaced flags are dropped.
fn vertex_scenario() -> impl Strategy<Value = LocalScenario> {
    let labels = ["3", "3w", "3p", "4", "4b", "4p", "4pq", "5", "6+", "C0"];
    let fars = ["3", "4", "4p", "5", "6+"];
    (5usize..=8, any::<bool>()).prop_flat_map(move |(k, weak)| {
        let unit = (0..labels.len(), 0..8usize, 0..fars.len());
        (Just(k), Just(weak), prop::collection::vec(unit, k))
    })
    .prop_map(move |(k, weak, raw)| {
        let mut units: Vec<Unit> = raw
            .iter()
            .map(|&(n, c, f)| Unit {
                neighbor: occ(labels[n]),
                corner: match c {
                    0 | 1 => Corner::Tri,
                    2..=4 => Corner::Quad(occ(fars[f])),
                    _ => Corner::Big,
                },
            })
            .collect();
        for i in 0..k {
            let j = (i + 1) % k;
            let (a, b) = (units[i].corner, units[j].corner);
            if (a.is_tri() && (b.is_tri() || b.is_quad())) || (b.is_tri() && a.is_quad()) {
                units[j].corner = Corner::Big;
            }
        }
        for i in 0..k {
            let (l, r) = (units[(i + k - 1) % k].corner, units[i].corner);
            let n = &mut units[i].neighbor;
            n.weak &= l.is_tri() || r.is_tri();
            n.bad &= l.is_tri() || r.is_tri();
            n.poor &= l.is_quad() && r.is_quad();
            n.q4 &= n.poor;
            n.pendant &= l == Corner::Big && r == Corner::Big;
        }
        LocalScenario::Vertex { on_c0: false, weak: weak && (k == 5 || k == 6), units }
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, max_global_rejects: 100_000, ..ProptestConfig::default() })]

    #[test]
    fn admissible_big_vertices_obey_the_degree_bound(s in vertex_scenario()) {
        prop_assume!(s.check().is_ok());
        let v = evaluate(&s);
        prop_assume!(v.admissible);
        let k = s.units().len() as i64;
        let bound = Q::from_integer(2 * k - 6)
            - Q::new(9, 4) * Q::from_integer(s.t3() as i64)
            - Q::from_integer(s.t4() as i64)
            - Q::new(1, 2) * Q::from_integer(s.tp() as i64);
        prop_assert!(v.final_charge >= bound, "{} : {} < {}", s, v.final_charge, bound);
        if k >= 7 {
            prop_assert!(v.final_charge >= Q::new(7 * k, 8) - Q::from_integer(6), "{}", s);
        }
    }

    #[test]
    fn canonical_form_is_idempotent_and_preserves_charge(s in vertex_scenario()) {
        prop_assume!(s.check().is_ok());
        let c = s.canonical();
        prop_assert_eq!(c.canonical(), c.clone());
        prop_assert!(c.is_canonical());
        prop_assert_eq!(evaluate(&c).final_charge, evaluate(&s).final_charge);
        prop_assert_eq!(evaluate(&c).failed, evaluate(&s).failed);
    }

    #[test]
    fn fewer_predicates_admit_more(s in vertex_scenario(), drop in 0..PREDICATES.len()) {
        prop_assume!(s.check().is_ok());
        let all = plancol_core::caseenum::evaluate_with(&s, &Switches::all());
        let some = plancol_core::caseenum::evaluate_with(&s, &Switches::without(&[PREDICATES[drop].id]).unwrap());
        prop_assert!(!all.admissible || some.admissible);
        prop_assert_eq!(all.final_charge, some.final_charge);
    }
}

#[test]
fn outer_profiles_follow_the_c0_identity() {
    // C0 ends at |C0| + 6 minus what R5 sends, plus the extra unit.
    for len in [3usize, 7] {
        for v in plancol_core::caseenum::enumerate(Center::C0(len), &Switches::all()).unwrap() {
            let LocalScenario::Outer { degrees } = &v.scenario else { unreachable!() };
            let sent: Q = degrees
                .iter()
                .map(|&d| match d {
                    2 => Q::from_integer(2),
                    3 => Q::new(3, 2),
                    4 => Q::from_integer(1),
                    5 => Q::new(1, 2),
                    _ => Q::from_integer(0),
                })
                .sum();
            let twos = degrees.iter().filter(|&&d| d == 2).count();
            let extra = if len == 7 && twos == 6 { Q::from_integer(1) } else { Q::from_integer(0) };
            assert_eq!(v.final_charge, Q::from_integer(len as i64 + 6) - sent + extra, "{}", v.scenario);
            // Closed-form lower bound 6 - (|C0| + s2)/2, tight when all degrees are 2 or 3.
            let formula = Q::from_integer(6) - Q::new((len + twos) as i64, 2);
            assert!(v.final_charge >= formula, "{}", v.scenario);
            if degrees.iter().all(|&d| d <= 3) && extra == Q::from_integer(0) {
                assert_eq!(v.final_charge, formula, "{}", v.scenario);
            }
        }
    }
}
