//! Formal contexts and their construction from a knowledge graph.

pub mod attribute;
pub mod builders;
pub mod burmeister;
pub mod fixtures;
pub mod formal;

pub use attribute::{
    directed_properties, plain_properties, read_property_selection, AttributeSpec, Direction, PropertySelector,
    Qualifier,
};
pub use builders::{
    build_classified, build_directed, build_plain, build_qualified, select_properties_by_class, QualifiedOptions,
};
pub use burmeister::{read_burmeister, write_burmeister, write_burmeister_string};
pub use formal::{union_contexts, ContextStats, FormalContext};
