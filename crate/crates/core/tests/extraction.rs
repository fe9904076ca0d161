mod common;

use std::collections::BTreeSet;

use common::*;
use kgfca::context::{build_classified, build_directed, build_plain, build_qualified, Direction, QualifiedOptions};
use kgfca::kg::EntityId;
use kgfca::FormalContext;

fn p(n: u64) -> EntityId {
    EntityId::property(n)
}

fn dir(d: &str) -> Direction {
    d.parse().unwrap()
}

fn strings(xs: &[&str]) -> BTreeSet<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn labels(k: &FormalContext) -> (BTreeSet<String>, BTreeSet<String>) {
    (
        k.objects().iter().cloned().collect(),
        k.attributes().iter().cloned().collect(),
    )
}

/// Objects come out in dump order: record subjects, then value-only entities.
fn assert_dump_order(k: &FormalContext) {
    let rank = |o: &String| FIXTURE_ENTITIES.iter().position(|e| e == o).unwrap();
    let ranks: Vec<usize> = k.objects().iter().map(rank).collect();
    assert!(ranks.windows(2).all(|w| w[0] < w[1]), "{:?}", k.objects());
    let attrs = k.attributes().to_vec();
    let mut sorted = attrs.clone();
    sorted.sort();
    assert_eq!(attrs, sorted);
}

#[test]
fn plain_matches_naive_and_prunes_expected_lines() {
    let records = fixture_statements();
    let kept = kept(&records);
    let props = [p(22), p(25), p(26), p(31), p(40), p(1082)];
    let naive = plain(&kept, &props);
    let all_attrs: Vec<String> = props.iter().map(|p| p.to_string()).collect();
    let (rows, cols) = empty_lines(&naive, &FIXTURE_ENTITIES, &all_attrs);
    assert_eq!(rows, strings(&["Q5", "Q634", "Q5107", "Q791801"]));
    assert_eq!(cols, strings(&["P22", "P40"]));

    let k = build_plain(&fixture_graph(), &props.into_iter().collect());
    assert_eq!(relation_of(&k), naive);
    let (objects, attributes) = labels(&k);
    let expect_objects: BTreeSet<String> = FIXTURE_ENTITIES
        .iter()
        .map(|s| s.to_string())
        .filter(|o| !rows.contains(o))
        .collect();
    assert_eq!(objects, expect_objects);
    assert_eq!(
        attributes,
        all_attrs.into_iter().filter(|a| !cols.contains(a)).collect()
    );
    assert_dump_order(&k);
}

#[test]
fn directed_matches_naive_and_prunes_expected_lines() {
    let records = fixture_statements();
    let kept = kept(&records);
    let props = [
        (p(22), "subj"),
        (p(22), "obj"),
        (p(25), "subj"),
        (p(25), "obj"),
        (p(26), "subj"),
        (p(26), "obj"),
        (p(31), "obj"),
        (p(40), "subj"),
    ];
    let naive = directed(&kept, &props);
    let all_attrs: Vec<String> = props.iter().map(|(p, d)| format!("{p}@{d}")).collect();
    let (rows, cols) = empty_lines(&naive, &FIXTURE_ENTITIES, &all_attrs);
    assert_eq!(rows, strings(&["Q1794", "Q339", "Q634", "Q791801"]));
    assert_eq!(cols, strings(&["P22@subj", "P22@obj", "P40@subj"]));

    let k = build_directed(&fixture_graph(), &props.iter().map(|(p, d)| (*p, dir(d))).collect());
    assert_eq!(relation_of(&k), naive);
    assert_eq!(k.object_count(), FIXTURE_ENTITIES.len() - rows.len());
    assert_eq!(k.attribute_count(), all_attrs.len() - cols.len());
    assert_dump_order(&k);
}

#[test]
fn qualified_matches_naive() {
    let records = fixture_statements();
    let kept = kept(&records);
    let props = [(p(26), "subj"), (p(26), "obj"), (p(1082), "subj"), (p(25), "subj")];
    let naive = qualified(&kept, &props);
    let k = build_qualified(
        &fixture_graph(),
        &props.iter().map(|(p, d)| (*p, dir(d))).collect(),
        &QualifiedOptions::default(),
    );
    assert_eq!(relation_of(&k), naive);
    let (objects, attributes) = labels(&k);
    // the family statements carry no qualifiers, the novalue-qualified spouse
    // statement is gone
    assert_eq!(objects, strings(&["Q34851", "Q151973", "Q1794"]));
    assert_eq!(
        attributes,
        strings(&[
            "P26@subj?P580=+1964",
            "P26@subj?P582=+1974",
            "P26@subj?P580=+1983",
            "P26@subj?P582=+1984",
            "P26@obj?P580=+1964",
            "P26@obj?P582=+1974",
            "P26@obj?P580=+1983",
            "P26@obj?P582=+1984",
            "P1082@subj?P585=+2016-12-31",
            "P1082@subj?P585=+2014-12-31",
            "P1082@subj?P459=Q791801",
        ])
    );
    assert_dump_order(&k);
}

#[test]
fn qualified_rank_flag() {
    let props = [(p(1082), Direction::Subject)].into_iter().collect();
    let opts = QualifiedOptions {
        include_rank: true,
        ..Default::default()
    };
    let k = build_qualified(&fixture_graph(), &props, &opts);
    let attrs: BTreeSet<String> = k.attributes().iter().cloned().collect();
    assert!(attrs.contains("P1082@subj?rank=preferred"));
    assert!(attrs.contains("P1082@subj?rank=normal"));
}

#[test]
fn classified_matches_naive() {
    let records = fixture_statements();
    let kept = kept(&records);
    let props = [(p(25), "subj"), (p(25), "obj"), (p(26), "subj"), (p(26), "obj")];
    let naive = classified(&kept, &props);
    let k = build_classified(
        &fixture_graph(),
        &props.iter().map(|(p, d)| (*p, dir(d))).collect(),
        None,
    );
    assert_eq!(relation_of(&k), naive);
    let expected: BTreeSet<(String, String)> = [
        ("Q13909", "P25@subj:Q5"),
        ("Q4235", "P25@subj:Q5"),
        ("Q132616", "P25@subj:Q5"),
        ("Q9439", "P25@obj:Q5"),
        ("Q13909", "P25@obj:Q5"),
        ("Q34851", "P26@subj:Q5"),
        ("Q151973", "P26@obj:Q5"),
    ]
    .iter()
    .map(|(a, b)| (a.to_string(), b.to_string()))
    .collect();
    assert_eq!(naive, expected);
    assert_dump_order(&k);
}

#[test]
fn deprecated_class_edge_is_ignored() {
    let g = fixture_graph();
    let pluto = EntityId::item(339);
    assert_eq!(g.instances_of(&pluto), &BTreeSet::from([EntityId::item(5107)]));
}
