//! Knowledge-graph model: entities, values, statements, dump ingestion and
//! the filtered statement store.

pub mod dump;
pub mod fixtures;
pub mod graph;
pub mod id;
pub mod statement;
pub mod translate;
pub mod value;

pub use dump::{open_dump, parse_dump, DumpReader, EntityRecord, Selection};
pub use graph::{build_graph, instances_of, GraphBuilder, GraphConfig, KnowledgeGraph, LoadStats};
pub use id::{EntityId, EntityKind};
pub use statement::{filter_statement, is_kept, project, Projected, Projection, Rank, Snak, Statement, Verdict};
pub use translate::{apply_property_translations, Translation, TranslationMap};
pub use value::{DataValue, Degrees, ValueTag};
