use std::path::Path;

use plancol_core::io::{parse_rotation, read_planar_code};
use plancol_core::{PlaneGraph, Vertex};

use crate::{usage, CliError, Format, InputArgs, RootArgs};

/// A graph from the input, with the `outer:` line if the document had one.
pub struct Loaded {
    pub graph: PlaneGraph,
    pub outer: Option<Vec<Vertex>>,
}

fn format_of(path: &Path, explicit: Option<Format>) -> Format {
    explicit.unwrap_or_else(|| match path.extension().and_then(|e| e.to_str()) {
        Some("pcode" | "pc") => Format::Pcode,
        _ => Format::Rot,
    })
}

pub fn load(args: &InputArgs) -> Result<Vec<Loaded>, CliError> {
    let path = &args.input;
    let bytes = std::fs::read(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    match format_of(path, args.format) {
        Format::Pcode => {
            let graphs = read_planar_code(&bytes).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            Ok(graphs.into_iter().map(|graph| Loaded { graph, outer: None }).collect())
        }
        Format::Rot => {
            let text = String::from_utf8(bytes).map_err(|_| usage(format!("{}: not UTF-8 text", path.display())))?;
            let doc = parse_rotation(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            Ok(vec![Loaded { graph: doc.graph, outer: doc.outer }])
        }
    }
}

/// Exactly one graph, for commands that act on a single graph.
pub fn load_one(args: &InputArgs) -> Result<Loaded, CliError> {
    let mut all = load(args)?;
    if all.len() != 1 {
        return Err(usage(format!("{}: expected one graph, found {}", args.input.display(), all.len())));
    }
    Ok(all.pop().unwrap())
}

/// 1-based ids separated by spaces or commas, returned 0-based.
pub fn parse_ids(s: &str, n: usize) -> Result<Vec<Vertex>, CliError> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| match t.parse::<usize>() {
            Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
            _ => Err(usage(format!("bad vertex id {t:?} (graph has {n} vertices)"))),
        })
        .collect()
}

/// C0 from `--c0`, else from the document.
pub fn root_cycle(loaded: &Loaded, root: &RootArgs) -> Result<Option<Vec<Vertex>>, CliError> {
    match &root.c0 {
        Some(s) => parse_ids(s, loaded.graph.rotation().len()).map(Some),
        None => Ok(loaded.outer.clone()),
    }
}

pub fn one_based(vs: &[Vertex]) -> Vec<usize> {
    vs.iter().map(|v| v + 1).collect()
}

pub fn join(vs: &[Vertex]) -> String {
    one_based(vs).iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}
