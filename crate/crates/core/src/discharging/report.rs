use std::fmt::Write;

use super::{ChargeLedger, Element, Rule};

impl ChargeLedger {
    /// Fixed-width table: element, initial, per-rule inflow/outflow, final.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "{:<8} {:>8}  {:<40} {:<40} {:>8}", "element", "initial", "in", "out", "final").unwrap();
        for e in self.elements() {
            let flows = |incoming: bool| {
                Rule::ALL
                    .iter()
                    .filter_map(|&r| {
                        let a = self.flow(e, r, incoming);
                        (a != 0.into()).then(|| format!("{r}:{a}"))
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            writeln!(
                s,
                "{:<8} {:>8}  {:<40} {:<40} {:>8}",
                e.to_string(),
                self.initial(e).to_string(),
                flows(true),
                flows(false),
                self.final_charge(e).to_string()
            )
            .unwrap();
        }
        writeln!(s, "sum initial {} final {}", self.sum_initial(), self.sum_final()).unwrap();
        if !self.face_walks.is_empty() {
            writeln!(s, "faces:").unwrap();
            for (f, w) in &self.face_walks {
                let walk: Vec<String> = w.iter().map(|v| (v + 1).to_string()).collect();
                writeln!(s, "  {} = {}", Element::Face(*f), walk.join(" ")).unwrap();
            }
        }
        for a in &self.ambiguities {
            writeln!(s, "ambiguity {a}").unwrap();
        }
        for n in &self.notes {
            writeln!(s, "note {n}").unwrap();
        }
        s
    }

    /// One `key=value` per line, sorted by element then field.
    pub fn to_kv(&self) -> String {
        let mut s = String::new();
        for e in self.elements() {
            writeln!(s, "{e}.initial={}", self.initial(e)).unwrap();
            for r in Rule::ALL {
                for (dir, incoming) in [("in", true), ("out", false)] {
                    let a = self.flow(e, r, incoming);
                    if a != 0.into() {
                        writeln!(s, "{e}.{dir}.{r}={a}").unwrap();
                    }
                }
            }
            writeln!(s, "{e}.final={}", self.final_charge(e)).unwrap();
        }
        for (i, t) in self.transfers.iter().enumerate() {
            writeln!(s, "transfer.{i}={},{},{},{}", t.from, t.to, t.amount, t.rule).unwrap();
        }
        for (i, a) in self.ambiguities.iter().enumerate() {
            writeln!(s, "ambiguity.{i}={a}").unwrap();
        }
        writeln!(s, "sum.initial={}", self.sum_initial()).unwrap();
        writeln!(s, "sum.final={}", self.sum_final()).unwrap();
        s
    }
}
