use super::{parse_configurations, Configuration};

const CATALOG: &str = include_str!("catalog.txt");
const FALSIFIED: &str = include_str!("falsified.txt");

/// The catalog in its text form.
pub fn catalog_text() -> &'static str {
    CATALOG
}

pub fn catalog() -> Vec<Configuration> {
    parse_configurations(CATALOG).expect("built-in catalog parses")
}

/// Deliberately broken encodings, kept outside the catalog: each must fail.
pub fn falsified_variants() -> Vec<Configuration> {
    parse_configurations(FALSIFIED).expect("built-in variants parse")
}
