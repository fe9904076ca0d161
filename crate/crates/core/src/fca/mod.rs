//! Derivation, closure, implications and the canonical base.

pub mod canonical;
pub mod closure;
pub mod concepts;
pub mod derivation;
pub mod format;
pub mod implication;
pub mod oracle;

pub use canonical::{canonical_base, CanonicalBase};
pub use closure::{entails, lin_closure, LinClosure};
pub use concepts::{closed_sets, concepts, Concept};
pub use derivation::{closure, closure_with_extent, extent, intent, is_closed, is_valid, itemset_support, support};
pub use format::{parse_implication, Rule, RuleSet};
pub use implication::{Implication, ImplicationBase};
pub use oracle::{theory_oracle, theory_oracle_with_cap};

use crate::context::FormalContext;

/// Rules whose premise is shared by at least one object.
pub fn count_supported(k: &FormalContext, base: &ImplicationBase) -> usize {
    base.iter().filter(|r| !extent(k, &r.premise).is_empty()).count()
}
