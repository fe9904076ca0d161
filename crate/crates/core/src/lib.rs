//! Formal concept analysis over knowledge-graph dumps.
//!
//! The pipeline runs dump → [`kg::KnowledgeGraph`] → [`context::FormalContext`]
//! → implication bases ([`fca`]), association rules ([`assoc`]) or PAC bases
//! ([`pac`]).

pub mod assoc;
pub mod bitset;
pub mod context;
pub mod error;
pub mod fca;
pub mod kg;
pub mod kv;
pub mod lines;
pub mod pac;
pub mod rational;

#[cfg(test)]
mod testing;

pub use assoc::{
    all_association_rules_oracle, confidence, frequent_closed, luxenburger_base, AssociationRule, IcebergLattice,
};
pub use bitset::{AttributeSet, BitSet, ObjectSet};
pub use context::{
    build_classified, build_directed, build_plain, build_qualified, read_burmeister, select_properties_by_class,
    union_contexts, write_burmeister, AttributeSpec, ContextStats, Direction, FormalContext, QualifiedOptions,
};
pub use error::{Error, Result};
pub use fca::{
    canonical_base, closure, count_supported, entails, extent, intent, is_valid, lin_closure, support, theory_oracle,
    Implication, ImplicationBase, RuleSet,
};
pub use kg::{build_graph, parse_dump, DataValue, EntityId, KnowledgeGraph, Statement};
pub use kv::KeyValues;
pub use pac::{horn_distance, pac_basis, PacParams};
pub use rational::{parse_rational, Rational};
