use std::fmt::Write;

use super::{apply_rules, Charge, ChargeLedger, Element};
use crate::configurations::{scan_graph, PatternMatch, ScanMode};
use crate::plane_graph::{Adjacency, RootedPlaneGraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegativeElement {
    pub element: Element,
    pub charge: Charge,
    /// Pattern occurrences touching the element or a neighbor of it.
    pub nearby: Vec<PatternMatch>,
}

/// Final charges with the negative elements explained, where possible, by
/// reducible patterns present in the graph. Nothing here claims that the
/// charges of an arbitrary graph end up non-negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinalReport {
    pub ledger: ChargeLedger,
    pub negatives: Vec<NegativeElement>,
    pub patterns: Vec<PatternMatch>,
}

fn element_vertices(g: &RootedPlaneGraph, e: Element) -> Vec<Vertex> {
    match e {
        Element::Vertex(v) => vec![v],
        Element::Face(f) => g.base().faces()[f].vertex_set(),
        Element::C0 => g.outer().to_vec(),
    }
}

pub fn final_report(g: &RootedPlaneGraph) -> FinalReport {
    final_report_with(g, ScanMode::Strict)
}

pub fn final_report_with(g: &RootedPlaneGraph, mode: ScanMode) -> FinalReport {
    let ledger = apply_rules(g);
    let patterns = scan_graph(g, mode);
    let b = g.base();
    let negatives = ledger
        .negatives()
        .into_iter()
        .map(|(element, charge)| {
            let mut near = vec![false; b.vertex_count()];
            for v in element_vertices(g, element) {
                near[v] = true;
                for &u in b.neighbors(v) {
                    near[u] = true;
                }
            }
            let nearby = patterns.iter().filter(|p| p.vertices.iter().any(|&v| near[v])).cloned().collect();
            NegativeElement { element, charge, nearby }
        })
        .collect();
    FinalReport { ledger, negatives, patterns }
}

/// Element groups in report order.
pub const GROUPS: [&str; 5] = ["c0-vertices", "c0", "interior-vertices", "interior-faces", "faces-on-c0"];

/// Sums of final charges over the groups of [`GROUPS`]: C0 vertices, C0 itself,
/// interior vertices, inner faces missing C0, inner faces meeting C0.
pub fn group_sums(g: &RootedPlaneGraph, ledger: &ChargeLedger) -> [Charge; 5] {
    let mut sums = [Charge::from_integer(0); 5];
    for e in ledger.elements() {
        let i = match e {
            Element::Vertex(v) if g.on_outer(v) => 0,
            Element::C0 => 1,
            Element::Vertex(_) => 2,
            Element::Face(f) if g.base().faces()[f].walk.iter().any(|&v| g.on_outer(v)) => 4,
            Element::Face(_) => 3,
        };
        sums[i] += ledger.final_charge(e);
    }
    sums
}

impl FinalReport {
    pub fn to_text(&self) -> String {
        let mut s = self.ledger.to_text();
        if self.negatives.is_empty() {
            writeln!(s, "negative elements: none").unwrap();
        } else {
            writeln!(s, "negative elements:").unwrap();
            for n in &self.negatives {
                let near: Vec<String> = n.nearby.iter().map(|p| format!("{} at {}", p.name, p.location())).collect();
                let near = if near.is_empty() { "no pattern nearby".to_string() } else { near.join("; ") };
                writeln!(s, "  {} {}: {}", n.element, n.charge, near).unwrap();
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane_graph::fixtures::{cube, cycle};

    #[test]
    fn cube_negatives_have_patterns_nearby() {
        let r = cube().root_at(&[0, 1, 2, 3]).unwrap();
        let rep = final_report(&r);
        let opposite = r.base().find_face(&[4, 5, 6, 7]).unwrap();
        let mut expected: Vec<Element> = (0..4).map(Element::Vertex).collect();
        expected.push(Element::Face(opposite));
        let got: Vec<Element> = rep.negatives.iter().map(|n| n.element).collect();
        assert_eq!(got, expected);
        assert_eq!(rep.negatives[4].charge, Charge::from_integer(-2));
        for n in &rep.negatives {
            assert!(n.nearby.iter().any(|p| p.name == "L2.3-1"), "{}", n.element);
        }
        assert!(rep.to_text().contains("L2.3-1 at"));
        let sums = group_sums(&r, &rep.ledger);
        assert_eq!(sums.map(|c| c.to_integer()), [-2, 4, 0, -2, 0]);
    }

    #[test]
    fn six_cycle_is_negative_free() {
        for f in 0..2 {
            let r = RootedPlaneGraph::at_face(cycle(6), f);
            let rep = final_report(&r);
            assert!(rep.negatives.is_empty());
            assert!(rep.ledger.elements().all(|e| rep.ledger.final_charge(e) == Charge::from_integer(0)));
        }
    }
}
