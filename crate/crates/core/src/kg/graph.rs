use std::collections::{BTreeMap, BTreeSet, HashMap};

use indexmap::IndexSet;

use super::id::EntityId;
use super::statement::{is_kept, Statement};
use super::translate::{apply_property_translations, ids, TranslationMap};

/// Identifiers of the class-hierarchy properties.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphConfig {
    pub instance_of: EntityId,
    pub subclass_of: EntityId,
}

impl Default for GraphConfig {
    fn default() -> Self {
        GraphConfig {
            instance_of: ids::INSTANCE_OF,
            subclass_of: ids::SUBCLASS_OF,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LoadStats {
    pub records: u64,
    pub statements_seen: u64,
    pub statements_kept: u64,
}

/// Filtered statement store: property ↦ set of statements.
///
/// Never holds deprecated statements or unknown/no values. Immutable once
/// built.
#[derive(Clone, Debug, Default)]
pub struct KnowledgeGraph {
    config: GraphConfig,
    relations: BTreeMap<EntityId, BTreeSet<Statement>>,
    classes: HashMap<EntityId, BTreeSet<EntityId>>,
    subject_order: IndexSet<EntityId>,
    value_order: IndexSet<EntityId>,
    stats: LoadStats,
}

impl KnowledgeGraph {
    pub fn config(&self) -> &GraphConfig {
        &self.config
    }

    pub fn stats(&self) -> LoadStats {
        self.stats
    }

    /// `W(p)`; empty for unused properties.
    pub fn relation(&self, p: &EntityId) -> impl Iterator<Item = &Statement> + Clone {
        self.relations.get(p).into_iter().flatten()
    }

    pub fn properties(&self) -> impl Iterator<Item = &EntityId> {
        self.relations.keys()
    }

    pub fn statement_count(&self) -> usize {
        self.relations.values().map(BTreeSet::len).sum()
    }

    pub fn statements(&self) -> impl Iterator<Item = &Statement> {
        self.relations.values().flatten()
    }

    /// Direct classes of `e` via instance-of; no subclass closure.
    pub fn instances_of(&self, e: &EntityId) -> &BTreeSet<EntityId> {
        static EMPTY: BTreeSet<EntityId> = BTreeSet::new();
        self.classes.get(e).unwrap_or(&EMPTY)
    }

    /// Position in dump order: record subjects first, then entities seen
    /// only as values, each by first appearance.
    pub fn appearance_rank(&self, e: &EntityId) -> usize {
        self.subject_order
            .get_index_of(e)
            .or_else(|| self.value_order.get_index_of(e).map(|i| self.subject_order.len() + i))
            .unwrap_or(usize::MAX)
    }

    /// All entities that occur in the graph, in dump order.
    pub fn entities(&self) -> impl Iterator<Item = &EntityId> {
        self.subject_order
            .iter()
            .chain(self.value_order.iter().filter(|e| !self.subject_order.contains(*e)))
    }
}

pub fn instances_of(g: &KnowledgeGraph, e: &EntityId) -> BTreeSet<EntityId> {
    g.instances_of(e).clone()
}

/// Incremental graph construction from dump records.
pub struct GraphBuilder {
    graph: KnowledgeGraph,
    translations: Option<TranslationMap>,
}

impl GraphBuilder {
    pub fn new(config: GraphConfig, translations: Option<TranslationMap>) -> Self {
        GraphBuilder {
            graph: KnowledgeGraph {
                config,
                ..KnowledgeGraph::default()
            },
            translations,
        }
    }

    pub fn add_record(&mut self, id: EntityId, statements: impl IntoIterator<Item = Statement>) {
        self.graph.stats.records += 1;
        self.graph.subject_order.insert(id);
        for s in statements {
            match &self.translations {
                Some(map) => {
                    for t in apply_property_translations(&s, map) {
                        self.add_statement(t);
                    }
                }
                None => self.add_statement(s),
            }
        }
    }

    /// Filters, then stores one statement.
    pub fn add_statement(&mut self, s: Statement) {
        let g = &mut self.graph;
        g.stats.statements_seen += 1;
        if !is_kept(&s) {
            return;
        }
        g.stats.statements_kept += 1;
        g.subject_order.insert(s.subject);
        if let Some(object) = s.object_entity() {
            g.value_order.insert(object);
            if s.property == g.config.instance_of {
                g.classes.entry(s.subject).or_default().insert(object);
            }
        }
        g.relations.entry(s.property).or_default().insert(s);
    }

    pub fn finish(self) -> KnowledgeGraph {
        self.graph
    }
}

/// Builds a graph with the default class properties: translate, then filter.
pub fn build_graph<I>(records: I, translations: Option<&TranslationMap>) -> KnowledgeGraph
where
    I: IntoIterator<Item = (EntityId, Vec<Statement>)>,
{
    let mut builder = GraphBuilder::new(GraphConfig::default(), translations.cloned());
    for (id, statements) in records {
        builder.add_record(id, statements);
    }
    builder.finish()
}
