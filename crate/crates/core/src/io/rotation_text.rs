use super::FormatError;
use crate::plane_graph::{PlaneGraph, RootedPlaneGraph, Vertex};

/// Parsed rotation text: the graph and, when an `outer:` line is present, its root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationDocument {
    pub graph: PlaneGraph,
    pub outer: Option<Vec<Vertex>>,
}

impl RotationDocument {
    pub fn rooted(&self) -> Option<Result<RootedPlaneGraph, FormatError>> {
        self.outer.as_ref().map(|c| self.graph.root_at(c).map_err(FormatError::from))
    }
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

fn parse_ids(line: usize, s: &str, n: usize) -> Result<Vec<Vertex>, FormatError> {
    s.split_whitespace()
        .map(|t| match t.parse::<usize>() {
            Ok(v) if v >= 1 && v <= n => Ok(v - 1),
            Ok(v) => Err(syntax(line, format!("vertex {v} out of range 1..={n}"))),
            Err(_) => Err(syntax(line, format!("expected a vertex id, found {t:?}"))),
        })
        .collect()
}

/// Parses a `pgraph v1` document.
///
/// ```text
/// pgraph v1
/// n 3
/// 1: 2 3
/// 2: 3 1
/// 3: 1 2
/// outer: 1 2 3
/// ```
/// Blank lines and `#` comments are ignored. The `outer:` line must list a
/// face boundary; it roots the graph.
pub fn parse_rotation(text: &str) -> Result<RotationDocument, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (ln, header) = lines.next().ok_or_else(|| syntax(1, "empty document"))?;
    if header.split_whitespace().collect::<Vec<_>>() != ["pgraph", "v1"] {
        return Err(syntax(ln, "expected header `pgraph v1`"));
    }
    let (ln, nline) = lines.next().ok_or_else(|| syntax(ln + 1, "missing `n <N>` line"))?;
    let n = match nline.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["n", count] => count.parse::<usize>().map_err(|_| syntax(ln, "bad vertex count"))?,
        _ => return Err(syntax(ln, "expected `n <N>`")),
    };
    if n == 0 {
        return Err(syntax(ln, "vertex count must be positive"));
    }
    let mut rotation: Vec<Option<Vec<Vertex>>> = vec![None; n];
    let mut outer = None;
    let mut last = ln;
    for (ln, l) in lines {
        last = ln;
        let (head, rest) = l.split_once(':').ok_or_else(|| syntax(ln, "expected `<v>: <neighbors>`"))?;
        let head = head.trim();
        if head == "outer" {
            if outer.is_some() {
                return Err(syntax(ln, "duplicate `outer:` line"));
            }
            outer = Some(parse_ids(ln, rest, n)?);
            continue;
        }
        if outer.is_some() {
            return Err(syntax(ln, "`outer:` must be the last line"));
        }
        let v = parse_ids(ln, head, n)?;
        let [v] = v.as_slice() else {
            return Err(syntax(ln, "expected a single vertex id before `:`"));
        };
        if rotation[*v].is_some() {
            return Err(syntax(ln, format!("vertex {} listed twice", v + 1)));
        }
        rotation[*v] = Some(parse_ids(ln, rest, n)?);
    }
    let mut rot = Vec::with_capacity(n);
    for (v, r) in rotation.into_iter().enumerate() {
        rot.push(r.ok_or_else(|| syntax(last, format!("vertex {} has no rotation line", v + 1)))?);
    }
    let graph = PlaneGraph::from_rotation(rot)?;
    if let Some(c) = &outer {
        graph.root_at(c)?;
    }
    Ok(RotationDocument { graph, outer })
}

/// Canonical text for a graph; `parse_rotation` inverts it exactly.
pub fn serialize_rotation(g: &PlaneGraph, outer: Option<&[Vertex]>) -> String {
    let mut s = format!("pgraph v1\nn {}\n", g.rotation().len());
    for (v, list) in g.rotation().iter().enumerate() {
        s.push_str(&(v + 1).to_string());
        s.push(':');
        for &u in list {
            s.push(' ');
            s.push_str(&(u + 1).to_string());
        }
        s.push('\n');
    }
    if let Some(c) = outer {
        s.push_str("outer:");
        for &v in c {
            s.push(' ');
            s.push_str(&(v + 1).to_string());
        }
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane_graph::{Adjacency, GraphError};

    const TRIANGLE: &str = "pgraph v1\nn 3\n1: 2 3\n2: 3 1\n3: 1 2\n";

    #[test]
    fn triangle_document() {
        let d = parse_rotation(TRIANGLE).unwrap();
        assert_eq!(d.graph.edge_count(), 3);
        assert!(d.outer.is_none());
        assert_eq!(serialize_rotation(&d.graph, None), TRIANGLE);
    }

    #[test]
    fn outer_line_roots() {
        let text = format!("{TRIANGLE}outer: 1 2 3\n");
        let d = parse_rotation(&text).unwrap();
        assert_eq!(d.outer, Some(vec![0, 1, 2]));
        assert!(d.rooted().unwrap().is_ok());
        assert_eq!(serialize_rotation(&d.graph, d.outer.as_deref()), text);
    }

    #[test]
    fn comments_are_ignored() {
        let text = "# a triangle\npgraph v1\nn 3 # three vertices\n\n1: 2 3\n2: 3 1\n3: 1 2\n";
        assert_eq!(serialize_rotation(&parse_rotation(text).unwrap().graph, None), TRIANGLE);
    }

    #[test]
    fn errors() {
        assert_eq!(
            parse_rotation("pgraph v1\nn 2\n1: 2\n2:\n"),
            Err(FormatError::Graph(GraphError::MissingReverseEdge { from: 0, to: 1 }))
        );
        assert!(matches!(parse_rotation("pgraph v2\n"), Err(FormatError::Syntax { line: 1, .. })));
        assert!(matches!(parse_rotation("pgraph v1\nn 2\n1: 3\n"), Err(FormatError::Syntax { line: 3, .. })));
        assert!(matches!(parse_rotation("pgraph v1\nn 2\n1: 2\n"), Err(FormatError::Syntax { .. })));
        assert!(matches!(
            parse_rotation(&format!("{TRIANGLE}outer: 1 2\n")),
            Err(FormatError::Graph(GraphError::NotAFace(_)))
        ));
    }
}
