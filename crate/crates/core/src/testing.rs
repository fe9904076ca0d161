//! Proptest strategies shared by unit tests.

use proptest::prelude::*;

use crate::bitset::BitSet;
use crate::context::FormalContext;
use crate::fca::{Implication, ImplicationBase};

/// Contexts with up to `max_g` objects and `max_m` attributes.
pub fn arb_context(max_g: usize, max_m: usize) -> impl Strategy<Value = FormalContext> {
    (0..=max_g, 0..=max_m).prop_flat_map(|(n, m)| {
        proptest::collection::vec(any::<bool>(), n * m).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|g| (0..m).map(move |a| (g, a)));
            FormalContext::new(
                (0..n).map(|i| format!("g{i}")).collect(),
                (0..m).map(|i| format!("m{i}")).collect(),
                pairs.filter(|&(g, a)| bits[g * m + a]),
            )
            .unwrap()
        })
    })
}

pub fn arb_subset(m: usize) -> impl Strategy<Value = BitSet> {
    proptest::collection::vec(any::<bool>(), m).prop_map(move |b| BitSet::from_indices(m, (0..m).filter(|&i| b[i])))
}

pub fn arb_base(m: usize, max_rules: usize) -> impl Strategy<Value = ImplicationBase> {
    proptest::collection::vec((arb_subset(m), arb_subset(m)), 0..=max_rules)
        .prop_map(move |rules| ImplicationBase::from_rules(m, rules.into_iter().map(|(x, y)| Implication::new(x, y))))
}

/// Fixpoint of repeated rule application; the reference for closure tests.
pub fn naive_closure(base: &ImplicationBase, x: &BitSet) -> BitSet {
    let mut out = x.clone();
    loop {
        let before = out.clone();
        for r in base.iter() {
            if r.premise.is_subset(&out) {
                out.union_with(&r.conclusion);
            }
        }
        if out == before {
            return out;
        }
    }
}
