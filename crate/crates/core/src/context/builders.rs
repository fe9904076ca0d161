//! Context construction under the plain, directed, qualified and classified
//! incidences.
//!
//! Objects are the entities incident with at least one selected attribute,
//! ordered by first appearance in the dump. Attributes are ordered by their
//! text form. Every builder returns a pruned context.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::attribute::{AttributeSpec, Direction, Qualifier};
use super::formal::FormalContext;
use crate::bitset::BitSet;
use crate::kg::{EntityId, KnowledgeGraph, Statement};

/// Per attribute name, the entities incident with it.
#[derive(Default)]
struct Incidence {
    pairs: BTreeMap<String, BTreeSet<EntityId>>,
}

impl Incidence {
    fn add(&mut self, attribute: &AttributeSpec, object: EntityId) {
        self.pairs.entry(attribute.to_string()).or_default().insert(object);
    }

    fn into_context(self, g: &KnowledgeGraph) -> FormalContext {
        let mut objects: Vec<EntityId> = self
            .pairs
            .values()
            .flatten()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        objects.sort_by_key(|e| (g.appearance_rank(e), *e));
        let index: HashMap<EntityId, usize> = objects.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        let attributes: Vec<String> = self.pairs.keys().cloned().collect();
        let mut rows = vec![BitSet::new(attributes.len()); objects.len()];
        for (m, members) in self.pairs.values().enumerate() {
            for e in members {
                rows[index[e]].insert(m);
            }
        }
        let labels = objects.iter().map(EntityId::to_string).collect();
        FormalContext::from_rows(labels, attributes, rows)
            .expect("entity labels are distinct")
            .prune_empty()
    }
}

/// The entity in position `dir` of a statement, if that position holds one.
fn position(t: &Statement, dir: Direction) -> Option<EntityId> {
    match dir {
        Direction::Subject => Some(t.subject),
        Direction::Object => t.object_entity(),
    }
}

/// Properties declared instances of `class`.
pub fn select_properties_by_class(g: &KnowledgeGraph, class: &EntityId) -> BTreeSet<EntityId> {
    g.relation(&g.config().instance_of)
        .filter(|t| t.subject.is_property() && t.object_entity() == Some(*class))
        .map(|t| t.subject)
        .collect()
}

/// `(e, p)` incident iff `e` is the subject of some `p`-statement.
pub fn build_plain(g: &KnowledgeGraph, props: &BTreeSet<EntityId>) -> FormalContext {
    let mut inc = Incidence::default();
    for p in props {
        let attribute = AttributeSpec::Plain(*p);
        for t in g.relation(p) {
            inc.add(&attribute, t.subject);
        }
    }
    inc.into_context(g)
}

/// `(e, (p, d))` incident iff `e` is in position `d` of some `p`-statement.
pub fn build_directed(g: &KnowledgeGraph, props: &BTreeSet<(EntityId, Direction)>) -> FormalContext {
    let mut inc = Incidence::default();
    for (p, dir) in props {
        let attribute = AttributeSpec::Directed(*p, *dir);
        for t in g.relation(p) {
            if let Some(e) = position(t, *dir) {
                inc.add(&attribute, e);
            }
        }
    }
    inc.into_context(g)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QualifiedOptions {
    /// Only qualifiers on these properties become attributes.
    pub qualifier_filter: Option<BTreeSet<EntityId>>,
    /// Per property, direction and qualifier property, keep only the most
    /// frequent values (ties broken by text form).
    pub max_values_per_qualifier: Option<usize>,
    /// Expose the statement rank as a `rank=...` pseudo-qualifier.
    pub include_rank: bool,
}

impl QualifiedOptions {
    fn annotation<'a>(&'a self, t: &'a Statement) -> impl Iterator<Item = Qualifier> + 'a {
        let filter = self.qualifier_filter.as_ref();
        t.annotation
            .iter()
            .filter(move |s| filter.is_none_or(|f| f.contains(&s.property)))
            .cloned()
            .map(Qualifier::Snak)
            .chain(self.include_rank.then_some(Qualifier::Rank(t.rank)))
    }
}

/// `(e, (p, d, a))` incident iff `e` is in position `d` of some
/// `p`-statement whose annotation contains `a`.
pub fn build_qualified(
    g: &KnowledgeGraph,
    props: &BTreeSet<(EntityId, Direction)>,
    opts: &QualifiedOptions,
) -> FormalContext {
    let mut inc = Incidence::default();
    for (p, dir) in props {
        let allowed: Option<BTreeSet<Qualifier>> = opts.max_values_per_qualifier.map(|k| {
            let mut freq: BTreeMap<Option<EntityId>, HashMap<Qualifier, usize>> = BTreeMap::new();
            for t in g.relation(p).filter(|t| position(t, *dir).is_some()) {
                for a in opts.annotation(t) {
                    *freq.entry(a.key()).or_default().entry(a).or_default() += 1;
                }
            }
            freq.into_values()
                .flat_map(|counts| {
                    let mut ranked: Vec<(usize, String, Qualifier)> =
                        counts.into_iter().map(|(a, n)| (n, a.to_string(), a)).collect();
                    ranked.sort_by(|x, y| y.0.cmp(&x.0).then_with(|| x.1.cmp(&y.1)));
                    ranked.into_iter().take(k).map(|(_, _, a)| a)
                })
                .collect()
        });
        for t in g.relation(p) {
            let Some(e) = position(t, *dir) else { continue };
            for a in opts.annotation(t) {
                if allowed.as_ref().is_none_or(|set| set.contains(&a)) {
                    inc.add(&AttributeSpec::Qualified(*p, *dir, a), e);
                }
            }
        }
    }
    inc.into_context(g)
}

/// Subject direction: `q` incident with `(p, subj, c)` iff some
/// `p`-statement on `q` has an object that is an instance of `c`.
/// Object direction: `q` incident with `(p, obj, c)` iff `q` is the object
/// of some `p`-statement and `q` itself is an instance of `c`.
pub fn build_classified(
    g: &KnowledgeGraph,
    props: &BTreeSet<(EntityId, Direction)>,
    class_filter: Option<&BTreeSet<EntityId>>,
) -> FormalContext {
    let wanted = |c: &EntityId| class_filter.is_none_or(|f| f.contains(c));
    let mut inc = Incidence::default();
    for (p, dir) in props {
        match dir {
            Direction::Subject => {
                for t in g.relation(p) {
                    let Some(object) = t.object_entity() else { continue };
                    for c in g.instances_of(&object).iter().filter(|c| wanted(c)) {
                        inc.add(&AttributeSpec::Classified(*p, *dir, *c), t.subject);
                    }
                }
            }
            Direction::Object => {
                let objects: BTreeSet<EntityId> = crate::kg::statement::object_entities(g.relation(p));
                for q in objects {
                    for c in g.instances_of(&q).iter().filter(|c| wanted(c)) {
                        inc.add(&AttributeSpec::Classified(*p, *dir, *c), q);
                    }
                }
            }
        }
    }
    inc.into_context(g)
}
