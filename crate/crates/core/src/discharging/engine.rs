use std::collections::BTreeMap;

use super::roles::{incident_faces, is_f3, is_f4, others_on_face};
use super::rules::{self, Occupant, Rule};
use super::{classify_roles, Charge, ChargeLedger, Element, RoleTags, RuleAmbiguity, Transfer};
use crate::plane_graph::{Adjacency, RootedPlaneGraph, Vertex};

fn int(n: i64) -> Charge {
    Charge::from_integer(n)
}

/// Initial charges only (no transfers; finals equal initials).
pub fn initial_charges(g: &RootedPlaneGraph) -> ChargeLedger {
    let b = g.base();
    let mut initial = BTreeMap::new();
    for v in 0..b.vertex_count() {
        initial.insert(Element::Vertex(v), int(2 * b.degree(v) as i64 - 6));
    }
    let mut face_walks = BTreeMap::new();
    for f in g.inner_faces() {
        // K1's lone face has a one-vertex placeholder walk of degree 0.
        let d = if b.edge_count() == 0 { 0 } else { b.faces()[f].degree() };
        initial.insert(Element::Face(f), int(d as i64 - 6));
        face_walks.insert(f, b.faces()[f].walk.clone());
    }
    let c0 = if b.edge_count() == 0 { 0 } else { b.faces()[g.outer_face()].degree() };
    initial.insert(Element::C0, int(c0 as i64 + 6));
    let finals = initial.clone();
    ChargeLedger { initial, transfers: Vec::new(), finals, ambiguities: Vec::new(), notes: Vec::new(), face_walks }
}

/// Classifies roles and applies R1–R5.
pub fn apply_rules(g: &RootedPlaneGraph) -> ChargeLedger {
    apply_rules_with(g, &classify_roles(g))
}

struct Builder<'a> {
    g: &'a RootedPlaneGraph,
    roles: &'a RoleTags,
    ledger: ChargeLedger,
}

impl Builder<'_> {
    fn give(&mut self, from: Element, to: Element, amount: Charge, rule: Rule) {
        self.ledger.transfers.push(Transfer { from, to, amount, rule });
    }

    fn ambiguity(&mut self, element: Element, rule: Rule, message: String) {
        self.ledger.ambiguities.push(RuleAmbiguity { element, rule, message });
    }

    fn occupants<const K: usize>(&self, f: usize, v: Vertex) -> [Occupant; K] {
        let seq = others_on_face(self.g, f, v);
        std::array::from_fn(|i| self.roles.occupant(self.g, f, seq[i]))
    }

    fn four_vertex(&mut self, v: Vertex) {
        let g = self.g;
        let faces = incident_faces(g, v);
        let tri: Vec<usize> = faces.iter().copied().filter(|&f| is_f3(g, f)).collect();
        let n344 = tri
            .iter()
            .filter(|&&f| {
                let o: [Occupant; 2] = self.occupants(f, v);
                rules::is_344(4, [o[0].degree, o[1].degree])
            })
            .count();
        if n344 >= 2 {
            self.ambiguity(
                Element::Vertex(v),
                Rule::R1_1,
                format!("4-vertex on {n344} (3,4,4)-faces of F3; each receives 5/4"),
            );
        }
        for &f in &tri {
            let amount = rules::r1_1(self.occupants(f, v), self.roles.bad4[v]);
            self.give(Element::Vertex(v), Element::Face(f), amount, Rule::R1_1);
        }
        for &f in faces.iter().filter(|&&f| is_f4(g, f)) {
            let amount = rules::r1_2(self.occupants(f, v), self.roles.rich[v]);
            self.give(Element::Vertex(v), Element::Face(f), amount, Rule::R1_2);
        }
    }

    fn big_vertex(&mut self, v: Vertex) {
        let g = self.g;
        let weak = self.roles.is_weak_big(v);
        for f in incident_faces(g, v) {
            if is_f3(g, f) {
                match rules::r2_1(self.occupants(f, v), weak) {
                    Some((rule, amount)) => self.give(Element::Vertex(v), Element::Face(f), amount, rule),
                    None => self.ledger.notes.push(format!("R2.1: no clause for v{} on f{}", v + 1, f + 1)),
                }
            } else if is_f4(g, f) {
                match rules::r2_2(self.occupants(f, v)) {
                    Some(amount) => self.give(Element::Vertex(v), Element::Face(f), amount, Rule::R2_2),
                    None => self.ledger.notes.push(format!("R2.2: no tier for v{} on f{}", v + 1, f + 1)),
                }
            }
        }
        for &u in &self.roles.q4[v] {
            self.give(Element::Vertex(v), Element::Vertex(u), rules::r2_3(), Rule::R2_3);
        }
    }
}

/// Applies R1–R5 using precomputed roles.
pub fn apply_rules_with(g: &RootedPlaneGraph, roles: &RoleTags) -> ChargeLedger {
    let b = g.base();
    let n = b.vertex_count();
    let mut bld = Builder { g, roles, ledger: initial_charges(g) };

    // R1, R2: interior 4⁺-vertices.
    for v in g.interior_vertices() {
        match b.degree(v) {
            4 => bld.four_vertex(v),
            d if d >= 5 => bld.big_vertex(v),
            _ => {}
        }
    }

    // R3: 4⁺-vertices and C0-vertices to their pendant 3-faces.
    for v in 0..n {
        if b.degree(v) >= 4 || roles.on_c0[v] {
            for &f in &roles.pendant_faces[v] {
                bld.give(Element::Vertex(v), Element::Face(f), rules::r3(), Rule::R3);
            }
        }
    }

    // R4: C0-vertices to F3', F3'', F4''.
    for v in 0..n {
        if !roles.on_c0[v] {
            continue;
        }
        for f in incident_faces(g, v) {
            if f == g.outer_face() {
                continue;
            }
            let class = g.class(f);
            let cycle = b.faces()[f].is_cycle();
            if let Some(amount) = rules::r4(class).filter(|_| cycle) {
                bld.give(Element::Vertex(v), Element::Face(f), amount, Rule::R4);
            }
        }
    }

    // R5: C0 to its low-degree vertices, plus the extra unit for a 7-cycle
    // with six 2-vertices.
    let mut c0_vertices: Vec<Vertex> = g.outer().to_vec();
    c0_vertices.sort_unstable();
    c0_vertices.dedup();
    for &v in &c0_vertices {
        if let Some(amount) = rules::r5(b.degree(v)) {
            bld.give(Element::C0, Element::Vertex(v), amount, Rule::R5);
        }
    }
    let s2 = c0_vertices.iter().filter(|&&v| b.degree(v) == 2).count();
    if g.outer_is_cycle() {
        if let Some(amount) = rules::r5_extra(g.outer().len(), s2) {
            let mut payers: Vec<usize> = c0_vertices
                .iter()
                .filter(|&&v| b.degree(v) == 2)
                .flat_map(|&v| incident_faces(g, v))
                .filter(|&f| f != g.outer_face())
                .collect();
            payers.sort_unstable();
            payers.dedup();
            if payers.len() > 1 {
                bld.ambiguity(
                    Element::C0,
                    Rule::R5,
                    format!("{} faces meet the 2-vertices of C0; the least pays", payers.len()),
                );
            }
            if let Some(&f) = payers.first() {
                bld.give(Element::Face(f), Element::C0, amount, Rule::R5);
            }
        }
    }

    let mut ledger = bld.ledger;
    ledger.recompute_finals();
    ledger
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane_graph::fixtures::*;
    use crate::plane_graph::PlaneGraph;

    fn q(n: i64, d: i64) -> Charge {
        Charge::new(n, d)
    }

    #[test]
    fn cube_initial_and_final() {
        let r = cube().root_at(&[0, 1, 2, 3]).unwrap();
        let init = initial_charges(&r);
        assert!(init.elements().filter(|e| matches!(e, Element::Vertex(_))).all(|e| init.initial(e) == int(0)));
        assert_eq!(init.initial(Element::C0), int(10));
        assert_eq!(init.sum_initial(), int(0));

        let l = apply_rules(&r);
        assert_eq!(l.sum_final(), int(0));
        for v in 0..4 {
            assert_eq!(l.final_charge(Element::Vertex(v)), q(-1, 2));
            assert_eq!(l.flow(Element::Vertex(v), Rule::R4, false), int(2));
            assert_eq!(l.flow(Element::Vertex(v), Rule::R5, true), q(3, 2));
        }
        for v in 4..8 {
            assert_eq!(l.final_charge(Element::Vertex(v)), int(0));
        }
        let opposite = r.base().find_face(&[4, 5, 6, 7]).unwrap();
        assert_eq!(l.final_charge(Element::Face(opposite)), int(-2));
        assert_eq!(l.final_charge(Element::C0), int(4));
        let side: Charge = r
            .inner_faces()
            .filter(|&f| f != opposite)
            .map(|f| l.final_charge(Element::Face(f)))
            .sum();
        assert_eq!(side, int(0));
    }

    #[test]
    fn seven_cycle_outer_face() {
        let r = cycle(7).root_at(&[0, 1, 2, 3, 4, 5, 6]).unwrap();
        let l = initial_charges(&r);
        assert_eq!(l.initial(Element::C0), int(13));
        let l = apply_rules(&r);
        assert_eq!(l.sum_final(), int(0));
        // s2 = 7: no extra unit.
        assert!(l.transfers().iter().all(|t| t.to != Element::C0));
    }

    #[test]
    fn seven_cycle_with_six_two_vertices() {
        // C7 on 0..6 plus a pendant path at vertex 0 that closes a triangle
        // 0-7-8 inside.
        let g = PlaneGraph::from_rotation(vec![
            vec![1, 7, 8, 6],
            vec![2, 0],
            vec![3, 1],
            vec![4, 2],
            vec![5, 3],
            vec![6, 4],
            vec![0, 5],
            vec![8, 0],
            vec![0, 7],
        ])
        .unwrap();
        let r = g.root_at(&[0, 1, 2, 3, 4, 5, 6]).unwrap();
        let l = apply_rules(&r);
        let extra: Vec<_> = l.transfers().iter().filter(|t| t.to == Element::C0).collect();
        assert_eq!(extra.len(), 1);
        assert_eq!(extra[0].amount, int(1));
        assert_eq!(l.sum_final(), int(0));
    }

    #[test]
    fn r3_pendant_gift() {
        // Triangle 1-2-3 of 3-vertices with outer neighbors 0, 4, 5; only 0
        // (degree 5, on C0 = 0-6-7) qualifies as a sender.
        let g = crate::plane_graph::embed_planar(
            &crate::plane_graph::SimpleGraph::from_edges(
                8,
                &[(1, 2), (2, 3), (3, 1), (0, 1), (2, 4), (3, 5), (0, 4), (4, 5), (5, 0), (0, 6), (6, 7), (7, 0)],
            )
            .unwrap(),
        )
        .unwrap();
        let r = g.root_at(&[0, 6, 7]).unwrap();
        let roles = classify_roles(&r);
        let tri = r.base().find_face(&[1, 2, 3]).unwrap();
        assert_eq!(roles.pendant_of[tri], vec![0, 4, 5]);
        let l = apply_rules_with(&r, &roles);
        let r3: Vec<_> = l.transfers().iter().filter(|t| t.rule == Rule::R3 && t.from == Element::Vertex(0)).collect();
        assert_eq!(r3.len(), 1);
        assert_eq!(r3[0].amount, q(1, 2));
        assert_eq!(l.sum_final(), int(0));
    }

    #[test]
    fn sums_vanish_on_every_face_root() {
        for g in [triangle(), cube(), k4(), cycle(5)] {
            for f in 0..g.face_count() {
                let r = RootedPlaneGraph::at_face(g.clone(), f);
                let l = apply_rules(&r);
                assert_eq!(l.sum_initial(), int(0));
                assert_eq!(l.sum_final(), int(0));
            }
        }
    }
}
