//! Exact charges and the transfer rules R1–R5.
//!
//! Every vertex starts with `2d − 6`, every face other than C0 with `d − 6`
//! and C0 with `|C0| + 6`, so the total is zero by Euler's formula. The rules
//! only move charge; the ledger records every move with its rule id.

mod engine;
mod summary;
mod report;
mod roles;
pub mod rules;

pub use engine::{apply_rules, apply_rules_with, initial_charges};
pub use summary::{final_report, final_report_with, group_sums, FinalReport, NegativeElement, GROUPS};
pub use roles::{classify_roles, RoleTags, ThreeRole};
pub(crate) use roles::{incident_faces, is_f3, is_f4};
pub use rules::{Occupant, Rule};

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;

use crate::plane_graph::Vertex;

pub type Charge = Rational64;

/// Something that carries charge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Vertex(Vertex),
    /// A face other than C0, by face id.
    Face(usize),
    C0,
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "v{}", v + 1),
            Element::Face(i) => write!(f, "f{}", i + 1),
            Element::C0 => f.write_str("C0"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transfer {
    pub from: Element,
    pub to: Element,
    pub amount: Charge,
    pub rule: Rule,
}

/// A situation a reducibility lemma rules out in a minimal counterexample;
/// the engine proceeds with a fixed reading and records it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleAmbiguity {
    pub element: Element,
    pub rule: Rule,
    pub message: String,
}

impl fmt::Display for RuleAmbiguity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]: {}", self.element, self.rule, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeLedger {
    pub(crate) initial: BTreeMap<Element, Charge>,
    pub(crate) transfers: Vec<Transfer>,
    pub(crate) finals: BTreeMap<Element, Charge>,
    pub(crate) ambiguities: Vec<RuleAmbiguity>,
    pub(crate) notes: Vec<String>,
    pub(crate) face_walks: BTreeMap<usize, Vec<Vertex>>,
}

impl ChargeLedger {
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        self.initial.keys().copied()
    }

    pub fn initial(&self, e: Element) -> Charge {
        self.initial[&e]
    }

    pub fn final_charge(&self, e: Element) -> Charge {
        self.finals[&e]
    }

    pub fn transfers(&self) -> &[Transfer] {
        &self.transfers
    }

    pub fn ambiguities(&self) -> &[RuleAmbiguity] {
        &self.ambiguities
    }

    /// Situations outside every clause of a rule (no transfer made).
    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    pub fn sum_initial(&self) -> Charge {
        self.initial.values().sum()
    }

    pub fn sum_final(&self) -> Charge {
        self.finals.values().sum()
    }

    /// Total moved into (`incoming`) or out of `e` by `rule`.
    pub fn flow(&self, e: Element, rule: Rule, incoming: bool) -> Charge {
        self.transfers
            .iter()
            .filter(|t| t.rule == rule && if incoming { t.to == e } else { t.from == e })
            .map(|t| t.amount)
            .sum()
    }

    /// Elements with negative final charge, in element order.
    pub fn negatives(&self) -> Vec<(Element, Charge)> {
        self.finals.iter().filter(|(_, c)| **c < Charge::from_integer(0)).map(|(e, c)| (*e, *c)).collect()
    }

    /// Boundary walk of a face element.
    pub fn face_walk(&self, f: usize) -> Option<&[Vertex]> {
        self.face_walks.get(&f).map(Vec::as_slice)
    }

    fn recompute_finals(&mut self) {
        self.finals = self.initial.clone();
        for t in &self.transfers {
            *self.finals.get_mut(&t.from).expect("known element") -= t.amount;
            *self.finals.get_mut(&t.to).expect("known element") += t.amount;
        }
    }
}
