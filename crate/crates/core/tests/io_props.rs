//! Both file formats round-trip exactly, reading never panics, and the
//! canonical form ignores names and mirror images.

mod common;

use common::{any_graph, any_rooted, fixture_dir, fixtures, relabel};
use plancol_core::io::{canonical_form, parse_rotation, read_planar_code, serialize_rotation, write_planar_code};
use plancol_core::PlaneGraph;
use proptest::prelude::*;

#[test]
fn fixtures_round_trip_modulo_comments() {
    for (name, g, outer) in fixtures() {
        let text = serialize_rotation(&g, outer.as_deref());
        let stripped: String = std::fs::read_to_string(fixture_dir().join(&name))
            .unwrap()
            .lines()
            .filter(|l| !l.trim_start().starts_with('#'))
            .map(|l| format!("{l}\n"))
            .collect();
        assert_eq!(text, stripped, "{name}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 300, ..ProptestConfig::default() })]

    #[test]
    fn rotation_text_round_trips(r in any_rooted()) {
        let outer = r.outer_is_cycle().then(|| r.outer().to_vec());
        let text = serialize_rotation(r.base(), outer.as_deref());
        let doc = parse_rotation(&text).unwrap();
        prop_assert_eq!(&doc.graph, r.base());
        prop_assert_eq!(&doc.outer, &outer);
        prop_assert_eq!(serialize_rotation(&doc.graph, doc.outer.as_deref()), text);
    }

    #[test]
    fn planar_code_round_trips(gs in prop::collection::vec(any_graph(), 0..5)) {
        let bytes = write_planar_code(&gs);
        let back = read_planar_code(&bytes).unwrap();
        prop_assert_eq!(&back, &gs);
        prop_assert_eq!(write_planar_code(&back), bytes.clone());
        // Concatenated streams are the concatenated graph lists.
        let mut twice = bytes.clone();
        twice.extend_from_slice(&bytes[plancol_core::io::PLANAR_CODE_HEADER.len()..]);
        prop_assert_eq!(read_planar_code(&twice).unwrap().len(), 2 * gs.len());
    }

    #[test]
    fn reading_arbitrary_bytes_never_panics(bytes in prop::collection::vec(any::<u8>(), 0..64)) {
        let _ = read_planar_code(&bytes);
        let _ = parse_rotation(&String::from_utf8_lossy(&bytes));
    }

    #[test]
    fn truncating_a_stream_is_an_error(g in any_graph(), cut in any::<prop::sample::Index>()) {
        let bytes = write_planar_code([&g]);
        let header = plancol_core::io::PLANAR_CODE_HEADER.len();
        let at = header + 1 + cut.index(bytes.len() - header - 1);
        prop_assume!(at < bytes.len());
        prop_assert!(read_planar_code(&bytes[..at]).is_err());
    }

    #[test]
    fn canonical_form_ignores_names_and_reflection(g in any_graph()) {
        let c = canonical_form(&g);
        prop_assert_eq!(canonical_form(&c), c.clone());
        let mirrored = PlaneGraph::from_rotation(g.rotation().iter().map(|l| l.iter().rev().copied().collect()).collect()).unwrap();
        prop_assert_eq!(canonical_form(&mirrored), c.clone());
        let n = g.rotation().len();
        let reversed: Vec<usize> = (0..n).rev().collect();
        prop_assert_eq!(canonical_form(&relabel(&g, &reversed, false)), c);
    }
}
