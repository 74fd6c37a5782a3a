//! Line-oriented configuration format.
//!
//! ```text
//! config NAME
//! anchor free text
//! spec 1,1,0
//! vertices a b c
//! edges a-b b-c
//! core a
//! recolor
//! allow c:1
//! equal
//! end
//! ```
//!
//! `#` starts a comment line. Edges, sets and equalities are written in
//! canonical order by the serializer, so parse ∘ serialize is the identity
//! and serialize ∘ parse is the identity on canonical text.

use super::{ConfigError, Configuration};
use crate::coloring::ColorSpec;

fn syntax(line: usize, message: impl Into<String>) -> ConfigError {
    ConfigError::Syntax { line, message: message.into() }
}

#[derive(Default)]
struct Partial {
    name: String,
    start: usize,
    anchor: Option<String>,
    spec: Option<ColorSpec>,
    vertices: Option<Vec<String>>,
    edges: Vec<(String, String)>,
    core: Vec<String>,
    recolor: Vec<String>,
    allow: Vec<(String, u32)>,
    equal: Vec<(String, String)>,
}

impl Partial {
    fn finish(self, line: usize) -> Result<Configuration, ConfigError> {
        let vertices = self.vertices.ok_or_else(|| syntax(line, "missing vertices line"))?;
        let id = |s: &str| -> Result<usize, ConfigError> {
            vertices.iter().position(|n| n == s).ok_or_else(|| syntax(line, format!("unknown vertex {s:?}")))
        };
        let pair = |a: &str, b: &str| -> Result<(usize, usize), ConfigError> {
            let (x, y) = (id(a)?, id(b)?);
            Ok((x.min(y), x.max(y)))
        };
        let mut edges = self.edges.iter().map(|(a, b)| pair(a, b)).collect::<Result<Vec<_>, _>>()?;
        edges.sort_unstable();
        let mut core = self.core.iter().map(|s| id(s)).collect::<Result<Vec<_>, _>>()?;
        core.sort_unstable();
        core.dedup();
        let mut recolorable = self.recolor.iter().map(|s| id(s)).collect::<Result<Vec<_>, _>>()?;
        recolorable.sort_unstable();
        recolorable.dedup();
        let mut allowance = vec![0; vertices.len()];
        for (s, k) in &self.allow {
            allowance[id(s)?] = *k;
        }
        let mut equalities = self.equal.iter().map(|(a, b)| pair(a, b)).collect::<Result<Vec<_>, _>>()?;
        equalities.sort_unstable();
        equalities.dedup();
        let cfg = Configuration {
            name: self.name,
            anchor: self.anchor.unwrap_or_default(),
            spec: self.spec.unwrap_or_else(ColorSpec::one_one_zero),
            vertices,
            edges,
            core,
            recolorable,
            allowance,
            equalities,
        };
        cfg.validate().map_err(|e| match e {
            ConfigError::ConfigTooLarge { .. } => e,
            other => syntax(self.start, other.to_string()),
        })?;
        Ok(cfg)
    }
}

fn split_pair(tok: &str, sep: char, line: usize) -> Result<(String, String), ConfigError> {
    let (a, b) = tok.split_once(sep).ok_or_else(|| syntax(line, format!("expected x{sep}y, got {tok:?}")))?;
    Ok((a.to_string(), b.to_string()))
}

pub fn parse_configurations(text: &str) -> Result<Vec<Configuration>, ConfigError> {
    let mut out = Vec::new();
    let mut cur: Option<Partial> = None;
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, rest) = line.split_once(char::is_whitespace).map_or((line, ""), |(k, r)| (k, r.trim()));
        let toks = || rest.split_whitespace();
        if key == "config" {
            if cur.is_some() {
                return Err(syntax(ln, "config inside config (missing end)"));
            }
            if rest.is_empty() || rest.contains(char::is_whitespace) {
                return Err(syntax(ln, "config needs a single-word name"));
            }
            cur = Some(Partial { name: rest.to_string(), start: ln, ..Default::default() });
            continue;
        }
        let p = cur.as_mut().ok_or_else(|| syntax(ln, format!("{key:?} outside a config block")))?;
        match key {
            "anchor" => p.anchor = Some(rest.to_string()),
            "spec" => {
                let caps = rest
                    .split(',')
                    .map(|t| t.trim().parse::<u32>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| syntax(ln, e.to_string()))?;
                p.spec = Some(ColorSpec::new(caps).map_err(|e| syntax(ln, e.to_string()))?);
            }
            "vertices" => p.vertices = Some(toks().map(str::to_string).collect()),
            "edges" => p.edges = toks().map(|t| split_pair(t, '-', ln)).collect::<Result<_, _>>()?,
            "core" => p.core = toks().map(str::to_string).collect(),
            "recolor" => p.recolor = toks().map(str::to_string).collect(),
            "allow" => {
                p.allow = toks()
                    .map(|t| {
                        let (a, k) = split_pair(t, ':', ln)?;
                        Ok((a, k.parse::<u32>().map_err(|e| syntax(ln, e.to_string()))?))
                    })
                    .collect::<Result<_, ConfigError>>()?
            }
            "equal" => p.equal = toks().map(|t| split_pair(t, '=', ln)).collect::<Result<_, _>>()?,
            "end" => out.push(cur.take().unwrap().finish(ln)?),
            other => return Err(syntax(ln, format!("unknown key {other:?}"))),
        }
    }
    if cur.is_some() {
        return Err(syntax(text.lines().count(), "unterminated config block"));
    }
    Ok(out)
}

pub fn serialize_configurations(cfgs: &[Configuration]) -> String {
    let mut s = String::new();
    for (i, c) in cfgs.iter().enumerate() {
        if i > 0 {
            s.push('\n');
        }
        let name = |v: usize| c.vertices[v].as_str();
        let caps: Vec<String> = c.spec.caps().iter().map(u32::to_string).collect();
        s += &format!("config {}\n", c.name);
        s += &format!("anchor {}\n", c.anchor);
        s += &format!("spec {}\n", caps.join(","));
        let line = |key: &str, items: Vec<String>| {
            if items.is_empty() {
                format!("{key}\n")
            } else {
                format!("{key} {}\n", items.join(" "))
            }
        };
        s += &line("vertices", c.vertices.clone());
        s += &line("edges", c.edges.iter().map(|&(a, b)| format!("{}-{}", name(a), name(b))).collect());
        s += &line("core", c.core.iter().map(|&v| name(v).to_string()).collect());
        s += &line("recolor", c.recolorable.iter().map(|&v| name(v).to_string()).collect());
        let fixed = c.fixed_shell();
        s += &line(
            "allow",
            fixed.iter().filter(|&&v| c.allowance[v] > 0).map(|&v| format!("{}:{}", name(v), c.allowance[v])).collect(),
        );
        s += &line("equal", c.equalities.iter().map(|&(a, b)| format!("{}={}", name(a), name(b))).collect());
        s += "end\n";
    }
    s
}
