//! Final charge of a scenario's center.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::predicates::{failed_predicates, Switches};
use super::{Class, Corner, LocalScenario, Occ, View};
use crate::discharging::rules::{self, Occupant};
use crate::discharging::{Charge, Rule};
use crate::plane_graph::FaceClass;

/// One transfer into or out of the center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flow {
    pub rule: Rule,
    pub amount: Charge,
    pub incoming: bool,
    /// The other party: `N2`, `corner 1`, `C0`, a face vertex, ...
    pub party: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScenarioVerdict {
    pub scenario: LocalScenario,
    pub initial: Charge,
    pub flows: Vec<Flow>,
    pub final_charge: Charge,
    /// Every enabled predicate holds.
    pub admissible: bool,
    /// Ids of the enabled predicates that fail.
    pub failed: Vec<&'static str>,
    /// Faces the rules reach without any clause applying, and similar remarks.
    pub notes: Vec<String>,
}

fn int(n: i64) -> Charge {
    Charge::from_integer(n)
}

pub(crate) fn fmt_charge(c: Charge) -> String {
    if c.is_integer() {
        c.to_integer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl ScenarioVerdict {
    /// Net in/out per rule.
    pub fn by_rule(&self) -> BTreeMap<Rule, (Charge, Charge)> {
        let mut m: BTreeMap<Rule, (Charge, Charge)> = BTreeMap::new();
        for fl in &self.flows {
            let e = m.entry(fl.rule).or_insert((int(0), int(0)));
            if fl.incoming {
                e.0 += fl.amount;
            } else {
                e.1 += fl.amount;
            }
        }
        m
    }

    pub fn total_in(&self) -> Charge {
        self.flows.iter().filter(|f| f.incoming).map(|f| f.amount).sum()
    }

    pub fn total_out(&self) -> Charge {
        self.flows.iter().filter(|f| !f.incoming).map(|f| f.amount).sum()
    }

    /// The charge computation as one line, e.g. `-3 + 2·(5/4) + 1/2 = 0`:
    /// initial charge, then incoming and outgoing amounts in decreasing
    /// order, equal amounts grouped.
    pub fn arithmetic(&self) -> String {
        let mut s = fmt_charge(self.initial);
        for incoming in [true, false] {
            let mut amounts: Vec<Charge> = self.flows.iter().filter(|f| f.incoming == incoming).map(|f| f.amount).collect();
            amounts.sort_unstable_by(|a, b| b.cmp(a));
            let mut i = 0;
            while i < amounts.len() {
                let j = amounts[i..].iter().take_while(|&&a| a == amounts[i]).count();
                let a = fmt_charge(amounts[i]);
                let term = match (j, amounts[i].is_integer()) {
                    (1, _) => a,
                    (m, true) => format!("{m}·{a}"),
                    (m, false) => format!("{m}·({a})"),
                };
                let _ = write!(s, " {} {term}", if incoming { '+' } else { '-' });
                i += j;
            }
        }
        let _ = write!(s, " = {}", fmt_charge(self.final_charge));
        s
    }
}

fn occupant(o: Occ) -> Occupant {
    Occupant { degree: o.class.degree().unwrap_or(0), bad4: o.bad, weak3: o.weak, poor: o.poor }
}

fn pair(o: &[Occ]) -> [Occupant; 2] {
    [occupant(o[0]), occupant(o[1])]
}

fn triple(o: &[Occ]) -> [Occupant; 3] {
    [occupant(o[0]), occupant(o[1]), occupant(o[2])]
}

/// Scratch state for one evaluation.
#[derive(Default)]
pub(crate) struct Tally {
    pub flows: Vec<Flow>,
    pub notes: Vec<String>,
}

impl Tally {
    fn push(&mut self, rule: Rule, amount: Charge, incoming: bool, party: String) {
        self.flows.push(Flow { rule, amount, incoming, party });
    }
}

/// The center of a 4-vertex scenario is bad: one of its triangles is (3,4,4).
pub(crate) fn four_is_bad(v: &View) -> bool {
    (0..v.k).any(|i| v.tri_f(i) && v.face_degrees(i) == [3, 4, 4])
}

/// The center is poor: interior and every corner a 4-face of F4.
pub(crate) fn center_poor(v: &View) -> bool {
    !v.on_c0 && (0..v.k).all(|i| v.quad_f(i))
}

/// Amount sent by an interior vertex center to corner face i, if any.
pub(crate) fn corner_gift(v: &View, i: usize) -> Option<(Rule, Charge)> {
    let others = v.face_others(i);
    if v.on_c0 {
        let degree = match v.c(i) {
            Corner::Tri => 3,
            Corner::Quad(_) => 4,
            _ => return None,
        };
        return rules::r4(FaceClass { degree, hits: v.hits(i) }).map(|a| (Rule::R4, a));
    }
    match (v.k, v.c(i)) {
        (4, Corner::Tri) if v.tri_f(i) => Some((Rule::R1_1, rules::r1_1(pair(&others), four_is_bad(v)))),
        (4, Corner::Quad(_)) if v.quad_f(i) => Some((Rule::R1_2, rules::r1_2(triple(&others), !center_poor(v)))),
        (k, Corner::Tri) if k >= 5 && v.tri_f(i) => rules::r2_1(pair(&others), v.weak),
        (k, Corner::Quad(_)) if k >= 5 && v.quad_f(i) => rules::r2_2(triple(&others)).map(|a| (Rule::R2_2, a)),
        _ => None,
    }
}

/// Amount a neighbor takes from the center beyond the corner faces:
/// R3 for a pendant 3-face, R2.3 for a Q4 member.
pub(crate) fn neighbor_gift(v: &View, i: usize) -> Option<(Rule, Charge)> {
    let o = v.n(i);
    let sender = v.on_c0 || v.k >= 4;
    if o.pendant && sender {
        Some((Rule::R3, rules::r3()))
    } else if o.q4 && !v.on_c0 && v.k >= 5 {
        Some((Rule::R2_3, rules::r2_3()))
    } else {
        None
    }
}

fn vertex_flows(v: &View, t: &mut Tally) {
    for i in 0..v.k {
        let pi = format!("corner {i}");
        match corner_gift(v, i) {
            Some((rule, a)) => t.push(rule, a, false, pi),
            None => {
                if !v.on_c0 && v.k >= 5 && v.quad_f(i) {
                    let faces: Vec<String> = v.face_others(i).iter().map(Occ::label).collect();
                    t.notes.push(format!("{pi}: no R2.2 tier for ({}, {})", v.k, faces.join(",")));
                }
            }
        }
        if let Some((rule, a)) = neighbor_gift(v, i) {
            t.push(rule, a, false, format!("N{i}"));
        }
    }
    if v.on_c0 {
        if let Some(a) = rules::r5(v.k) {
            t.push(Rule::R5, a, true, "C0".into());
        }
    } else if v.k == 4 && center_poor(v) {
        // R2.3 arrives from each interior 5⁺-neighbor once the center has a
        // (3,4,4,4)-face.
        let on_3444 = (0..4).any(|i| v.quad_f(i) && v.face_degrees(i) == [3, 4, 4, 4]);
        if on_3444 {
            for i in 0..4 {
                if v.n(i).class.is_big() {
                    t.push(Rule::R2_3, rules::r2_3(), true, format!("N{i}"));
                }
            }
        }
    }
}

fn face_flows(occ: &[Occ], t: &mut Tally) {
    let n = occ.len();
    let hits = occ.iter().filter(|o| o.on_c0()).count();
    for (i, o) in occ.iter().enumerate() {
        let others: Vec<Occ> = (1..n).map(|j| occ[(i + j) % n]).collect();
        let party = format!("{} at {i}", o.label());
        if hits > 0 {
            if o.on_c0() {
                if let Some(a) = rules::r4(FaceClass { degree: n, hits }) {
                    t.push(Rule::R4, a, true, party);
                }
            }
            continue;
        }
        match (n, o.class) {
            (3, Class::Four) => {
                // The giver's bad flag: on a (3,4,4)-face it is bad by definition.
                t.push(Rule::R1_1, rules::r1_1(pair(&others), o.bad), true, party)
            }
            (3, Class::Five | Class::SixPlus) => match rules::r2_1(pair(&others), o.weak) {
                Some((rule, a)) => t.push(rule, a, true, party),
                None => t.notes.push(format!("{party}: no R2.1 clause")),
            },
            (3, Class::Three) if !o.weak => t.push(Rule::R3, rules::r3(), true, format!("outer neighbor of {party}")),
            (4, Class::Four) => t.push(Rule::R1_2, rules::r1_2(triple(&others), !o.poor), true, party),
            (4, Class::Five | Class::SixPlus) => match rules::r2_2(triple(&others)) {
                Some(a) => t.push(Rule::R2_2, a, true, party),
                None => t.notes.push(format!("{party}: no R2.2 tier")),
            },
            _ => {}
        }
    }
}

fn outer_flows(degrees: &[usize], t: &mut Tally) {
    for (i, &d) in degrees.iter().enumerate() {
        if let Some(a) = rules::r5(d) {
            t.push(Rule::R5, a, false, format!("{d}-vertex at {i}"));
        }
    }
    let s2 = degrees.iter().filter(|&&d| d == 2).count();
    if let Some(a) = rules::r5_extra(degrees.len(), s2) {
        t.push(Rule::R5, a, true, "face at the 2-vertices".into());
    }
}

pub(crate) fn initial_charge(s: &LocalScenario) -> Charge {
    match s {
        LocalScenario::Face { occupants } => int(occupants.len() as i64 - 6),
        LocalScenario::Vertex { units, .. } => int(2 * units.len() as i64 - 6),
        LocalScenario::Outer { degrees } => int(degrees.len() as i64 + 6),
    }
}

/// Final charge with all transfers, without predicate checks.
pub(crate) fn flows_of(s: &LocalScenario) -> (Charge, Vec<Flow>, Vec<String>) {
    let mut t = Tally::default();
    match s {
        LocalScenario::Face { occupants } => face_flows(occupants, &mut t),
        LocalScenario::Vertex { .. } => vertex_flows(&View::of(s), &mut t),
        LocalScenario::Outer { degrees } => outer_flows(degrees, &mut t),
    }
    let mut c = initial_charge(s);
    for f in &t.flows {
        if f.incoming {
            c += f.amount;
        } else {
            c -= f.amount;
        }
    }
    (c, t.flows, t.notes)
}

/// Evaluates a scenario with every predicate enabled.
pub fn evaluate(s: &LocalScenario) -> ScenarioVerdict {
    evaluate_with(s, &Switches::all())
}

pub fn evaluate_with(s: &LocalScenario, sw: &Switches) -> ScenarioVerdict {
    let (final_charge, flows, mut notes) = flows_of(s);
    let failed = failed_predicates(s, sw);
    if let LocalScenario::Outer { degrees } = s {
        if degrees.iter().all(|&d| d == 2) {
            notes.push("every C0 vertex has degree 2: G = C0, which is trivially superextendable".into());
        }
    }
    ScenarioVerdict {
        scenario: s.clone(),
        initial: initial_charge(s),
        flows,
        final_charge,
        admissible: failed.is_empty(),
        failed,
        notes,
    }
}

/// Lower bound on the final charge of any completion, given the largest
/// amount each corner kind can take.
pub(crate) fn corner_cap(on_c0: bool, k: usize, c: Corner) -> Charge {
    match (on_c0, c) {
        (_, Corner::Big | Corner::Outer) => int(0),
        (true, Corner::Tri) => int(3),
        (true, Corner::Quad(_)) => int(1),
        (false, Corner::Tri) => match k {
            3 => int(0),
            4 => Charge::new(5, 4),
            _ => Charge::new(9, 4),
        },
        (false, Corner::Quad(_)) => {
            if k == 3 {
                int(0)
            } else {
                int(1)
            }
        }
    }
}
