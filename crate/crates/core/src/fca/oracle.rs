//! Brute-force theory enumeration for small contexts.

use super::derivation::closure;
use super::implication::Implication;
use crate::bitset::BitSet;
use crate::context::FormalContext;
use crate::error::{Error, Result};

pub const DEFAULT_ORACLE_CAP: usize = 12;

/// `X → X″` for every `X ⊆ M`; a complete description of the theory.
pub fn theory_oracle(k: &FormalContext) -> Result<Vec<Implication>> {
    theory_oracle_with_cap(k, DEFAULT_ORACLE_CAP)
}

pub fn theory_oracle_with_cap(k: &FormalContext, cap: usize) -> Result<Vec<Implication>> {
    let m = k.attribute_count();
    if m > cap {
        return Err(Error::CapExceeded { attributes: m, cap });
    }
    Ok(all_subsets(m)
        .map(|x| {
            let c = closure(k, &x);
            Implication::new(x, c)
        })
        .collect())
}

/// Every subset of `0..m`, counting upward in binary.
pub fn all_subsets(m: usize) -> impl Iterator<Item = BitSet> {
    assert!(m < 64, "too many attributes to enumerate");
    (0u64..1 << m).map(move |bits| BitSet::from_indices(m, (0..m).filter(|i| bits >> i & 1 == 1)))
}
