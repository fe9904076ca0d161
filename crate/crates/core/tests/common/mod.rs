//! Fixture loading and a direct, unoptimised reading of the four incidence
//! definitions, shared by integration tests and the acceptance suite.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;

use kgfca::kg::{parse_dump, DataValue, EntityId, Rank, Selection, Statement};
use kgfca::{build_graph, FormalContext, KnowledgeGraph};

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

pub fn fixture_statements() -> Vec<(EntityId, Vec<Statement>)> {
    let file = BufReader::new(File::open(data("fixture.json")).unwrap());
    parse_dump(file, Selection::All)
        .map(|r| {
            let r = r.unwrap();
            (r.id, r.statements)
        })
        .collect()
}

pub fn fixture_graph() -> KnowledgeGraph {
    build_graph(fixture_statements(), None)
}

fn special(v: &DataValue) -> bool {
    matches!(v, DataValue::SomeValue | DataValue::NoValue)
}

/// Statements surviving the load-time rules, decided here from scratch.
pub fn kept(records: &[(EntityId, Vec<Statement>)]) -> Vec<Statement> {
    records
        .iter()
        .flat_map(|(_, s)| s.iter())
        .filter(|t| t.rank != Rank::Deprecated && !special(&t.value) && !t.annotation.iter().any(|a| special(&a.value)))
        .cloned()
        .collect()
}

fn object(t: &Statement) -> Option<EntityId> {
    match &t.value {
        DataValue::Entity(e) => Some(*e),
        _ => None,
    }
}

fn in_position(t: &Statement, dir: &str) -> Option<EntityId> {
    if dir == "subj" {
        Some(t.subject)
    } else {
        object(t)
    }
}

/// Incidence as a relation between entity labels and attribute labels.
pub type Relation = BTreeSet<(String, String)>;

pub fn plain(kept: &[Statement], props: &[EntityId]) -> Relation {
    let mut rel = Relation::new();
    for t in kept {
        if props.contains(&t.property) {
            rel.insert((t.subject.to_string(), t.property.to_string()));
        }
    }
    rel
}

pub fn directed(kept: &[Statement], props: &[(EntityId, &str)]) -> Relation {
    let mut rel = Relation::new();
    for t in kept {
        for (p, dir) in props {
            if t.property == *p {
                if let Some(e) = in_position(t, dir) {
                    rel.insert((e.to_string(), format!("{p}@{dir}")));
                }
            }
        }
    }
    rel
}

pub fn qualified(kept: &[Statement], props: &[(EntityId, &str)]) -> Relation {
    let mut rel = Relation::new();
    for t in kept {
        for (p, dir) in props {
            if t.property != *p {
                continue;
            }
            if let Some(e) = in_position(t, dir) {
                for a in &t.annotation {
                    rel.insert((e.to_string(), format!("{p}@{dir}?{}={}", a.property, a.value)));
                }
            }
        }
    }
    rel
}

pub fn classified(kept: &[Statement], props: &[(EntityId, &str)]) -> Relation {
    let p31 = EntityId::property(31);
    let mut classes: BTreeMap<EntityId, BTreeSet<EntityId>> = BTreeMap::new();
    for t in kept.iter().filter(|t| t.property == p31) {
        if let Some(c) = object(t) {
            classes.entry(t.subject).or_default().insert(c);
        }
    }
    let classes_of = |e: &EntityId| classes.get(e).cloned().unwrap_or_default();
    let mut rel = Relation::new();
    for (p, dir) in props {
        let w: Vec<&Statement> = kept.iter().filter(|t| t.property == *p).collect();
        if *dir == "subj" {
            for t in &w {
                if let Some(o) = object(t) {
                    for c in classes_of(&o) {
                        rel.insert((t.subject.to_string(), format!("{p}@subj:{c}")));
                    }
                }
            }
        } else {
            let objects: BTreeSet<EntityId> = w.iter().filter_map(|t| object(t)).collect();
            for q in objects {
                for c in classes_of(&q) {
                    rel.insert((q.to_string(), format!("{p}@obj:{c}")));
                }
            }
        }
    }
    rel
}

pub fn relation_of(k: &FormalContext) -> Relation {
    let mut rel = Relation::new();
    for (g, row) in k.rows().iter().enumerate() {
        for m in row {
            rel.insert((k.objects()[g].clone(), k.attributes()[m].clone()));
        }
    }
    rel
}

/// Labels of rows and columns with no crosses, given the full universes.
pub fn empty_lines(rel: &Relation, objects: &[&str], attributes: &[String]) -> (BTreeSet<String>, BTreeSet<String>) {
    let rows = objects
        .iter()
        .filter(|o| !rel.iter().any(|(g, _)| g == *o))
        .map(|o| o.to_string())
        .collect();
    let cols = attributes
        .iter()
        .filter(|a| !rel.iter().any(|(_, m)| m == *a))
        .cloned()
        .collect();
    (rows, cols)
}

/// Every entity mentioned anywhere in the fixture dump.
pub const FIXTURE_ENTITIES: [&str; 12] = [
    "Q34851", "Q151973", "Q1794", "Q339", "Q13909", "Q4235", "Q132616", "Q9439", "Q5", "Q634", "Q5107", "Q791801",
];
