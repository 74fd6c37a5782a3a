use super::FormatError;
use crate::plane_graph::PlaneGraph;

pub const PLANAR_CODE_HEADER: &[u8] = b">>planar_code<<";

/// Decodes a planar_code stream (header optional).
///
/// Each graph is a byte `N` followed by, for every vertex `1..=N`, its
/// neighbors in clockwise order terminated by `0`.
pub fn read_planar_code(bytes: &[u8]) -> Result<Vec<PlaneGraph>, FormatError> {
    let mut i = 0;
    if bytes.starts_with(b">>") {
        if !bytes.starts_with(PLANAR_CODE_HEADER) {
            return Err(FormatError::BadHeader);
        }
        i = PLANAR_CODE_HEADER.len();
    }
    let mut graphs = Vec::new();
    while i < bytes.len() {
        let start = i;
        let n = bytes[i] as usize;
        i += 1;
        if n == 0 {
            return Err(FormatError::WideVariant { offset: start });
        }
        let mut rot = Vec::with_capacity(n);
        for _ in 0..n {
            let mut list = Vec::new();
            loop {
                let &b = bytes.get(i).ok_or(FormatError::TruncatedStream { offset: i })?;
                i += 1;
                if b == 0 {
                    break;
                }
                // Out-of-range ids are reported by graph construction.
                list.push(b as usize - 1);
            }
            rot.push(list);
        }
        graphs.push(PlaneGraph::from_rotation(rot)?);
    }
    Ok(graphs)
}

/// Encodes graphs, always writing the header.
pub fn write_planar_code<'a>(graphs: impl IntoIterator<Item = &'a PlaneGraph>) -> Vec<u8> {
    let mut out = PLANAR_CODE_HEADER.to_vec();
    for g in graphs {
        let n = g.rotation().len();
        assert!(n <= 255, "planar_code single-byte variant holds at most 255 vertices");
        out.push(n as u8);
        for list in g.rotation() {
            out.extend(list.iter().map(|&u| (u + 1) as u8));
            out.push(0);
        }
    }
    out
}
