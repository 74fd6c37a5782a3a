use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use plancol_core::caseenum::{enumerate, min_final_charge, verdict_table, Center, ScenarioVerdict, Switches, PREDICATES};
use plancol_core::coloring::{
    solve, superextend_on, validate, verify_superextendability_on, ColoringError, SuperextReport,
};
use plancol_core::configurations::{
    catalog, falsified_variants, parse_configurations, serialize_configurations, verify_local_extendability,
    Configuration,
};
use plancol_core::discharging::{final_report, group_sums, Charge, ChargeLedger, Rule, GROUPS};
use plancol_core::io::{generate_plane_graphs, serialize_rotation, write_planar_code, GraphFilter};
use plancol_core::plane_graph::{check_family_membership, enumerate_cycles, FamilyVerdict};
use plancol_core::{ColorSpec, Coloring, PlaneGraph, Vertex};
use serde_json::{json, Value};

use crate::input::{join, load, load_one, one_based, root_cycle, Loaded};
use crate::{internal, usage, CliError, Format, InputArgs, Outcome, RootArgs};

fn parse_spec(s: &str) -> Result<ColorSpec, CliError> {
    s.parse().map_err(usage)
}

/// Prefix for per-graph lines when the input holds more than one graph.
fn label(i: usize, total: usize) -> String {
    if total == 1 {
        String::new()
    } else {
        format!("graph {}: ", i + 1)
    }
}

fn q(c: Charge) -> Value {
    Value::String(c.to_string())
}

pub fn check(args: &InputArgs) -> Result<Outcome, CliError> {
    let graphs = load(args)?;
    let mut out = String::new();
    let mut rows = Vec::new();
    let mut members = 0;
    for (i, l) in graphs.iter().enumerate() {
        let verdict = check_family_membership(&l.graph);
        let (line, row) = match &verdict {
            FamilyVerdict::InFamily => {
                members += 1;
                ("in F".to_string(), json!({"in_family": true}))
            }
            FamilyVerdict::FiveCycle(c) => (
                format!("not in F: 5-cycle {}", join(c)),
                json!({"in_family": false, "violation": "5-cycle", "witness": [one_based(c)]}),
            ),
            FamilyVerdict::AdjacentTriangles(a, b) => (
                format!("not in F: adjacent triangles {} | {}", join(a), join(b)),
                json!({"in_family": false, "violation": "adjacent-triangles", "witness": [one_based(a), one_based(b)]}),
            ),
        };
        writeln!(out, "{}{line}", label(i, graphs.len())).unwrap();
        rows.push(row);
    }
    if graphs.len() != 1 {
        writeln!(out, "{members} of {} graphs in F", graphs.len()).unwrap();
    }
    print!("{out}");
    let code = u8::from(members != graphs.len());
    Ok(Outcome { code, json: json!({"command": "check", "graphs": rows}) })
}

pub fn color(args: &InputArgs, spec: &str) -> Result<Outcome, CliError> {
    let spec = parse_spec(spec)?;
    let graphs = load(args)?;
    let mut rows = Vec::new();
    let mut unsat = 0;
    for (i, l) in graphs.iter().enumerate() {
        let n = l.graph.rotation().len();
        let found = solve(&l.graph, &spec, &Coloring::empty(n)).map_err(internal)?;
        match found {
            Some(phi) => {
                if !validate(&l.graph, &spec, &phi, true).map_err(internal)?.is_valid() {
                    return Err(internal(format!("solver returned an invalid coloring {phi}")));
                }
                println!("{}SAT {phi}", label(i, graphs.len()));
                let colors: Vec<u32> = phi.to_total().unwrap().iter().map(|&c| u32::from(c) + 1).collect();
                rows.push(json!({"sat": true, "coloring": colors}));
            }
            None => {
                unsat += 1;
                println!("{}UNSAT", label(i, graphs.len()));
                rows.push(json!({"sat": false}));
            }
        }
    }
    let code = u8::from(unsat > 0);
    Ok(Outcome { code, json: json!({"command": "color", "spec": spec.to_string(), "graphs": rows}) })
}

fn require_root(l: &Loaded, root: &RootArgs) -> Result<Vec<Vertex>, CliError> {
    root_cycle(l, root)?.ok_or_else(|| usage("no C0: pass --c0 or add an `outer:` line"))
}

pub fn superextend(args: &InputArgs, root: &RootArgs, precolor: &str, spec: &str) -> Result<Outcome, CliError> {
    let spec = parse_spec(spec)?;
    let l = load_one(args)?;
    let c0 = require_root(&l, root)?;
    let phi0 = precolor
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| match t.parse::<u8>() {
            Ok(c) if c >= 1 => Ok(c - 1),
            _ => Err(usage(format!("bad color {t:?}; colors are 1-based"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    let found = superextend_on(&l.graph, &spec, &c0, &phi0).map_err(usage)?;
    let json = |ext: Value| {
        json!({"command": "superextend", "spec": spec.to_string(), "c0": one_based(&c0),
               "precoloring": phi0.iter().map(|c| c + 1).collect::<Vec<_>>(), "superextension": ext})
    };
    Ok(match found {
        Some(phi) => {
            println!("superextension {phi}");
            let colors: Vec<u32> = phi.to_total().unwrap().iter().map(|&c| u32::from(c) + 1).collect();
            Outcome { code: 0, json: json(json!(colors)) }
        }
        None => {
            println!("no superextension");
            Outcome { code: 1, json: json(Value::Null) }
        }
    })
}

/// C0 for `theorem` on a graph without an explicit root: its least triangle.
fn least_triangle(g: &PlaneGraph) -> Option<Vec<Vertex>> {
    enumerate_cycles(g, 3).into_iter().find(|c| c.len() == 3)
}

fn theorem_line(r: &SuperextReport) -> String {
    let c0 = join(&r.c0);
    match &r.failing {
        None => format!("C0 {c0}: all {} precolorings superextend", r.tried),
        Some(phi) => {
            let phi: Vec<String> = phi.iter().map(|c| (c + 1).to_string()).collect();
            format!("C0 {c0}: FAIL, precoloring {} does not superextend", phi.join(" "))
        }
    }
}

pub fn theorem(args: &InputArgs, root: &RootArgs, spec: &str, symmetric: bool) -> Result<Outcome, CliError> {
    let spec = parse_spec(spec)?;
    let graphs = load(args)?;
    let single = graphs.len() == 1;
    let mut rows = Vec::new();
    let mut failures = 0;
    for (i, l) in graphs.iter().enumerate() {
        let tag = label(i, graphs.len());
        let n = l.graph.rotation().len();
        let colorable = solve(&l.graph, &spec, &Coloring::empty(n)).map_err(internal)?.is_some();
        let c0 = match root_cycle(l, root)? {
            Some(c) => c,
            None => match least_triangle(&l.graph) {
                Some(c) => c,
                None if single => return Err(usage("no C0 given and the graph has no triangle")),
                None => {
                    println!("{tag}skipped: no triangle");
                    rows.push(json!({"skipped": "no triangle"}));
                    continue;
                }
            },
        };
        match verify_superextendability_on(&l.graph, &spec, &c0, symmetric) {
            Ok(r) => {
                failures += usize::from(!r.is_ok() || !colorable);
                println!("{tag}{}colorable {}", if colorable { "" } else { "NOT " }, spec);
                println!("{tag}{}", theorem_line(&r));
                rows.push(json!({
                    "colorable": colorable,
                    "c0": one_based(&r.c0),
                    "tried": r.tried,
                    "failing": r.failing.as_ref().map(|p| p.iter().map(|c| c + 1).collect::<Vec<_>>()),
                    "chords": r.chords.iter().map(|&(a, b)| [a + 1, b + 1]).collect::<Vec<_>>(),
                    "symmetry_reduced": r.symmetry_reduced,
                }));
            }
            Err(e @ (ColoringError::NotInFamily(_) | ColoringError::BadC0Length(_) | ColoringError::InvalidPrecoloring))
                if !single =>
            {
                println!("{tag}skipped: {e}");
                rows.push(json!({"skipped": e.to_string()}));
            }
            Err(e) => return Err(usage(e)),
        }
    }
    let code = u8::from(failures > 0);
    Ok(Outcome { code, json: json!({"command": "theorem", "spec": spec.to_string(), "graphs": rows}) })
}

pub fn configs_list() -> Result<Outcome, CliError> {
    let all = catalog();
    print!("{}", serialize_configurations(&all));
    let names: Vec<&str> = all.iter().map(|c| c.name.as_str()).collect();
    Ok(Outcome { code: 0, json: json!({"command": "configs list", "configurations": names}) })
}

pub fn configs_verify(id: Option<&str>, falsified: bool, file: Option<&Path>) -> Result<Outcome, CliError> {
    let mut cfgs: Vec<Configuration> = match file {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| usage(format!("cannot read {}: {e}", p.display())))?;
            parse_configurations(&text).map_err(usage)?
        }
        None => catalog(),
    };
    if falsified {
        cfgs.extend(falsified_variants());
    }
    if let Some(id) = id {
        cfgs.retain(|c| c.name == id);
        if cfgs.is_empty() {
            return Err(usage(format!("no configuration named {id:?}")));
        }
    }
    let mut rows = Vec::new();
    let mut failed = 0;
    for cfg in &cfgs {
        let r = verify_local_extendability(cfg).map_err(usage)?;
        let status = if r.ok { "ok" } else { "FAIL" };
        print!("{}\t{status}\t{} precolorings, {} extend", r.name, r.tried, r.extended);
        if let Some(w) = r.witness_text(cfg) {
            print!("\twitness {w}");
        }
        println!();
        failed += usize::from(!r.ok);
        rows.push(json!({
            "name": r.name,
            "anchor": cfg.anchor,
            "ok": r.ok,
            "tried": r.tried,
            "extended": r.extended,
            "witness": r.witness_text(cfg),
            "symmetry_reduced": r.symmetry_reduced,
        }));
    }
    println!("{} of {} configurations verified", cfgs.len() - failed, cfgs.len());
    Ok(Outcome { code: u8::from(failed > 0), json: json!({"command": "configs verify", "configurations": rows}) })
}

fn ledger_json(l: &ChargeLedger) -> Value {
    let rows: Vec<Value> = l
        .elements()
        .map(|e| {
            let flows = |incoming: bool| {
                let m: serde_json::Map<String, Value> = Rule::ALL
                    .iter()
                    .map(|&r| (r, l.flow(e, r, incoming)))
                    .filter(|(_, a)| *a != Charge::from_integer(0))
                    .map(|(r, a)| (r.to_string(), q(a)))
                    .collect();
                Value::Object(m)
            };
            json!({"element": e.to_string(), "initial": q(l.initial(e)), "in": flows(true),
                   "out": flows(false), "final": q(l.final_charge(e))})
        })
        .collect();
    json!({"elements": rows, "sum_initial": q(l.sum_initial()), "sum_final": q(l.sum_final())})
}

pub fn discharge(args: &InputArgs, root: &RootArgs, kv: bool) -> Result<Outcome, CliError> {
    let l = load_one(args)?;
    let c0 = require_root(&l, root)?;
    let r = l.graph.root_at(&c0).map_err(usage)?;
    let rep = final_report(&r);
    let zero = Charge::from_integer(0);
    if rep.ledger.sum_initial() != zero || rep.ledger.sum_final() != zero {
        return Err(internal(format!(
            "charge not conserved: initial {} final {}",
            rep.ledger.sum_initial(),
            rep.ledger.sum_final()
        )));
    }
    let sums = group_sums(&r, &rep.ledger);
    let mut out = if kv { rep.ledger.to_kv() } else { rep.to_text() };
    writeln!(out, "groups:").unwrap();
    for (name, s) in GROUPS.iter().zip(sums) {
        writeln!(out, "  {name} {s}").unwrap();
    }
    writeln!(out, "  total {}", sums.iter().sum::<Charge>()).unwrap();
    print!("{out}");
    let mut json = ledger_json(&rep.ledger);
    json["command"] = json!("discharge");
    json["c0"] = json!(one_based(&c0));
    json["groups"] = Value::Object(GROUPS.iter().zip(sums).map(|(n, s)| (n.to_string(), q(s))).collect());
    json["negatives"] = rep
        .negatives
        .iter()
        .map(|n| json!({"element": n.element.to_string(), "final": q(n.charge),
                        "nearby": n.nearby.iter().map(|p| format!("{} at {}", p.name, p.location())).collect::<Vec<_>>()}))
        .collect();
    Ok(Outcome { code: 0, json })
}

fn verdict_json(v: &ScenarioVerdict) -> Value {
    json!({"scenario": v.scenario.to_string(), "final": q(v.final_charge), "arithmetic": v.arithmetic(),
           "admissible": v.admissible, "failed": v.failed, "notes": v.notes})
}

pub fn cases(center: &str, disable: &[String], table: bool) -> Result<Outcome, CliError> {
    let center: Center = center.parse().map_err(usage)?;
    let mut sw = Switches::all();
    for d in disable {
        sw.disable(d).map_err(usage)?;
    }
    let disabled: Vec<&str> = sw.disabled().collect();
    if table {
        let rows: Vec<ScenarioVerdict> = enumerate(center, &sw).map_err(usage)?.collect();
        print!("{}", verdict_table(rows.iter().cloned()));
        let json = json!({"command": "cases", "center": center.to_string(), "disabled": disabled,
                          "scenarios": rows.iter().map(verdict_json).collect::<Vec<_>>()});
        return Ok(Outcome { code: 0, json });
    }
    let m = min_final_charge(center, &sw).map_err(usage)?;
    let mut out = String::new();
    writeln!(out, "center {center}").unwrap();
    for id in &disabled {
        let p = PREDICATES.iter().find(|p| p.id == *id).expect("disabled ids come from the predicate table");
        writeln!(out, "disabled {} ({})", p.id, p.lemma).unwrap();
    }
    writeln!(out, "scenarios examined {}", m.leaves).unwrap();
    match (&m.min, &m.witness) {
        (Some(min), Some(w)) => {
            writeln!(out, "min {min}").unwrap();
            writeln!(out, "witness {}", w.scenario).unwrap();
            writeln!(out, "arithmetic {}", w.arithmetic()).unwrap();
            for f in &w.flows {
                let dir = if f.incoming { "in " } else { "out" };
                writeln!(out, "  {dir} {} {} {}", f.rule, f.amount, f.party).unwrap();
            }
            for n in &w.notes {
                writeln!(out, "  note {n}").unwrap();
            }
        }
        _ => writeln!(out, "no admissible scenario").unwrap(),
    }
    for e in &m.escapes {
        writeln!(out, "excluded {} final {} ({})", e.scenario, e.final_charge, e.failed.join(",")).unwrap();
    }
    print!("{out}");
    let negative = m.min.is_some_and(|c| c < Charge::from_integer(0));
    let json = json!({
        "command": "cases",
        "center": center.to_string(),
        "disabled": disabled,
        "leaves": m.leaves,
        "min": m.min.map(q),
        "witness": m.witness.as_ref().map(verdict_json),
        "escapes": m.escapes.iter().map(verdict_json).collect::<Vec<_>>(),
    });
    Ok(Outcome { code: u8::from(negative), json })
}

pub fn gen(max_n: usize, filter: &str, out: Format, output: Option<&Path>) -> Result<Outcome, CliError> {
    let filter: GraphFilter = filter.parse().map_err(usage)?;
    let graphs = generate_plane_graphs(max_n, filter).map_err(usage)?;
    let bytes = match out {
        Format::Pcode => write_planar_code(&graphs),
        Format::Rot => graphs.iter().map(|g| serialize_rotation(g, None)).collect::<Vec<_>>().join("\n").into_bytes(),
    };
    match output {
        Some(p) => std::fs::write(p, &bytes).map_err(|e| usage(format!("cannot write {}: {e}", p.display())))?,
        None => std::io::stdout().write_all(&bytes).map_err(internal)?,
    }
    eprintln!("{} graphs", graphs.len());
    let by_order: Vec<usize> =
        (1..=max_n).map(|n| graphs.iter().filter(|g| g.rotation().len() == n).count()).collect();
    Ok(Outcome {
        code: 0,
        json: json!({"command": "gen", "max_n": max_n, "filter": format!("{filter:?}"), "count": graphs.len(),
                     "by_order": by_order}),
    })
}
