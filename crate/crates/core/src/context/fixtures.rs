//! Small contexts shared by tests, benches and the acceptance suite.

use super::formal::FormalContext;

pub const FAMILY_OBJECTS: [&str; 4] = ["AngelinaJolie", "MileyCyrus", "NaomiWatts", "Victoria"];
pub const FAMILY_ATTRIBUTES: [&str; 3] = ["isMother", "godparent", "mother"];

/// The mother/godparent cross table over four people.
pub fn family_table() -> FormalContext {
    FormalContext::from_cross_table(&FAMILY_OBJECTS, &FAMILY_ATTRIBUTES, &["xxx", ".xx", "x.x", "xxx"])
        .expect("valid fixture")
}

/// `n` objects over `n` attributes, object `i` lacking exactly attribute `i`.
pub fn contranominal(n: usize) -> FormalContext {
    let objects = (1..=n).map(|i| format!("g{i}")).collect();
    let attributes = (1..=n).map(|i| format!("m{i}")).collect();
    let pairs = (0..n).flat_map(|g| (0..n).filter(move |&m| m != g).map(move |m| (g, m)));
    FormalContext::new(objects, attributes, pairs).expect("valid fixture")
}

/// Every object has every attribute.
pub fn full(objects: usize, attributes: usize) -> FormalContext {
    let g = (1..=objects).map(|i| format!("g{i}")).collect();
    let m = (1..=attributes).map(|i| format!("m{i}")).collect();
    let pairs = (0..objects).flat_map(|g| (0..attributes).map(move |m| (g, m)));
    FormalContext::new(g, m, pairs).expect("valid fixture")
}
