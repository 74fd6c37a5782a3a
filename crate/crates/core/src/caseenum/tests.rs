use std::collections::BTreeSet;

use super::*;
use crate::discharging::Charge;

fn q(n: i64, d: i64) -> Charge {
    Charge::new(n, d)
}

fn occs(labels: &[&str]) -> Vec<Occ> {
    labels.iter().map(|l| l.parse().unwrap()).collect()
}

/// Every well-formed scenario for a center, by brute force over all
/// occupant/corner tuples, reduced to canonical form.
fn brute_canonical(center: Center) -> BTreeSet<LocalScenario> {
    let all_occ = occs(&["3", "3w", "3p", "4", "4b", "4p", "4pq", "5", "5w", "6+", "6+w", "C0"]);
    let mut out = BTreeSet::new();
    let mut push = |s: LocalScenario| {
        if s.check().is_ok() {
            out.insert(s.canonical());
        }
    };
    match center {
        Center::Face(n) => {
            let mut idx = vec![0; n];
            loop {
                push(LocalScenario::Face { occupants: idx.iter().map(|&i| all_occ[i]).collect() });
                let mut p = 0;
                while p < n {
                    idx[p] += 1;
                    if idx[p] < all_occ.len() {
                        break;
                    }
                    idx[p] = 0;
                    p += 1;
                }
                if p == n {
                    break;
                }
            }
        }
        Center::Vertex(k) | Center::C0Vertex(k) => {
            let on_c0 = matches!(center, Center::C0Vertex(_));
            let mut corners = vec![Corner::Tri, Corner::Big, Corner::Outer];
            corners.extend(all_occ.iter().map(|&o| Corner::Quad(o)));
            let units: Vec<Unit> =
                all_occ.iter().flat_map(|&n| corners.iter().map(move |&c| Unit { neighbor: n, corner: c })).collect();
            let mut idx = vec![0; k];
            loop {
                for weak in [false, true] {
                    push(LocalScenario::Vertex { on_c0, weak, units: idx.iter().map(|&i| units[i]).collect() });
                }
                let mut p = 0;
                while p < k {
                    idx[p] += 1;
                    if idx[p] < units.len() {
                        break;
                    }
                    idx[p] = 0;
                    p += 1;
                }
                if p == k {
                    break;
                }
            }
        }
        Center::C0(l) => {
            let mut idx = vec![2; l];
            loop {
                push(LocalScenario::Outer { degrees: idx.clone() });
                let mut p = 0;
                while p < l {
                    idx[p] += 1;
                    if idx[p] <= 6 {
                        break;
                    }
                    idx[p] = 2;
                    p += 1;
                }
                if p == l {
                    break;
                }
            }
        }
    }
    out
}

#[test]
fn enumeration_matches_brute_force() {
    for c in ["face:3", "face:4", "vertex:3", "c0-vertex:2", "c0-vertex:3", "c0:3", "c0:7"] {
        let center: Center = c.parse().unwrap();
        let listed: Vec<LocalScenario> = enumerate(center, &Switches::all()).unwrap().map(|v| v.scenario).collect();
        let set: BTreeSet<LocalScenario> = listed.iter().cloned().collect();
        assert_eq!(set.len(), listed.len(), "{c}: duplicates");
        assert!(listed.windows(2).all(|w| w[0] < w[1]), "{c}: not in order");
        assert_eq!(set, brute_canonical(center), "{c}");
    }
}

#[test]
fn display_parse_round_trip() {
    for c in ["face:3", "face:4", "vertex:4", "c0-vertex:4", "c0:7"] {
        for v in enumerate(c.parse().unwrap(), &Switches::all()).unwrap().step_by(7) {
            let text = v.scenario.to_string();
            let back: LocalScenario = text.parse().unwrap();
            assert_eq!(back, v.scenario, "{text}");
        }
    }
}

#[test]
fn parse_rejects_malformed() {
    assert!("vertex:4 | 3 T 3 T 5 B 5 B".parse::<LocalScenario>().is_err());
    assert!("face:5 3 3 3 3 3".parse::<LocalScenario>().is_err());
    assert!(matches!("vertex:9".parse::<Center>(), Err(CaseError::CenterTooLarge { degree: 9, limit: 8 })));
    assert!(matches!(enumerate(Center::Vertex(12), &Switches::all()), Err(CaseError::CenterTooLarge { .. })));
    assert!(matches!(min_final_charge(Center::Face(5), &Switches::all()), Err(CaseError::InvalidCenter(_))));
}

#[test]
fn face_arithmetic_lines() {
    let cases = [
        ("face:3 3 4b 4b", "-3 + 2·(5/4) + 1/2 = 0"),
        ("face:3 3w 4b 5", "-3 + 9/4 + 3/4 = 0"),
        ("face:4 3 4 4p 5", "-2 + 5/6 + 2/3 + 1/2 = 0"),
        ("face:4 3 4p 4p 5", "-2 + 1 + 2·(1/2) = 0"),
    ];
    for (s, want) in cases {
        let v = evaluate(&s.parse().unwrap());
        assert_eq!(v.arithmetic(), want, "{s}");
    }
}

#[test]
fn face_enumeration_contains_printed_lines() {
    let lines: BTreeSet<String> = ["face:3", "face:4"]
        .iter()
        .flat_map(|c| enumerate(c.parse().unwrap(), &Switches::all()).unwrap())
        .filter(|v| v.admissible)
        .map(|v| v.arithmetic())
        .collect();
    for want in ["-3 + 2·(5/4) + 1/2 = 0", "-3 + 9/4 + 3/4 = 0", "-2 + 5/6 + 2/3 + 1/2 = 0"] {
        assert!(lines.contains(want), "{want}");
    }
}

fn brute_min(center: Center, sw: &Switches) -> Option<(Charge, LocalScenario)> {
    enumerate(center, sw).unwrap().filter(|v| v.admissible).map(|v| (v.final_charge, v.scenario)).min()
}

#[test]
fn branch_and_bound_agrees_with_enumeration() {
    let l235 = Switches::without(&["L2.3-5"]).unwrap();
    for (c, sw) in [
        ("face:3", Switches::all()),
        ("face:4", Switches::all()),
        ("vertex:3", Switches::all()),
        ("vertex:4", Switches::all()),
        ("vertex:4", l235),
        ("c0-vertex:3", Switches::all()),
        ("c0:7", Switches::all()),
    ] {
        let center: Center = c.parse().unwrap();
        let m = min_final_charge(center, &sw).unwrap();
        let (min, wit) = brute_min(center, &sw).unwrap();
        assert_eq!(m.min, Some(min), "{c}");
        assert_eq!(m.witness.as_ref().unwrap().scenario, wit, "{c}: least witness");
    }
}

#[test]
fn lemma_switches_reproduce_known_deficits() {
    let m = min_final_charge(Center::Vertex(4), &Switches::without(&["L2.3-5"]).unwrap()).unwrap();
    assert_eq!(m.min, Some(q(-1, 2)));
    let m = min_final_charge(Center::Vertex(4), &Switches::all()).unwrap();
    assert_eq!(m.min, Some(q(0, 1)));
}

#[test]
fn c0_seven_escape_hatch() {
    let m = min_final_charge(Center::C0(7), &Switches::all()).unwrap();
    assert_eq!(m.min, Some(q(0, 1)));
    assert_eq!(m.escapes.len(), 1);
    let e = &m.escapes[0];
    assert_eq!(e.scenario.to_string(), "c0:7 2 2 2 2 2 2 2");
    assert_eq!(e.final_charge, q(-1, 1));
    assert!(e.notes.iter().any(|n| n.contains("G = C0")));
}

#[test]
fn c0_three_vertex_claim_is_load_bearing() {
    let sw = Switches::without(&["c0-3-vertex-one-inner-3-or-4-face"]).unwrap();
    let m = min_final_charge(Center::C0Vertex(3), &sw).unwrap();
    assert_eq!(m.min, Some(q(-1, 2)));
    assert_eq!(m.witness.unwrap().scenario.to_string(), "c0-vertex:3 | C0 Q3 3 Q3 C0 O");
}

#[test]
fn disabling_predicates_never_raises_the_minimum() {
    for c in ["face:3", "face:4", "vertex:4", "c0-vertex:3"] {
        let center: Center = c.parse().unwrap();
        let all = min_final_charge(center, &Switches::all()).unwrap().min.unwrap();
        for p in PREDICATES {
            let sw = Switches::without(&[p.id]).unwrap();
            let m = min_final_charge(center, &sw).unwrap().min.unwrap();
            assert!(m <= all, "{c} without {}", p.id);
        }
    }
}

#[test]
fn merge_prefers_smaller_then_canonically_least() {
    let a = min_final_charge(Center::Face(3), &Switches::all()).unwrap();
    let b = min_final_charge(Center::Face(4), &Switches::all()).unwrap();
    let c = min_final_charge(Center::Vertex(3), &Switches::all()).unwrap();
    let left = a.clone().merge(b.clone()).merge(c.clone());
    let right = a.clone().merge(b.clone().merge(c.clone()));
    assert_eq!(left.witness, right.witness);
    assert_eq!(left.leaves, right.leaves);
    let ab = a.clone().merge(b.clone());
    let ba = b.merge(a);
    assert_eq!(ab.witness.unwrap().scenario, ba.witness.unwrap().scenario);
}

#[test]
fn unknown_predicate_is_an_error() {
    assert!(matches!(Switches::all().disable("L9.9"), Err(CaseError::UnknownPredicate(_))));
    let mut sw = Switches::all();
    sw.disable(" l2.3-5 ").unwrap();
    assert!(!sw.is_enabled("no-two-344-triangles-at-4-vertex"));
}

#[test]
fn verdict_table_has_one_row_per_scenario() {
    let rows: Vec<_> = enumerate(Center::C0(3), &Switches::all()).unwrap().collect();
    let t = verdict_table(rows.clone());
    assert_eq!(t.lines().count(), rows.len() + 1);
    assert!(t.lines().nth(1).unwrap().starts_with("c0:3 2 2 2\t"));
}
