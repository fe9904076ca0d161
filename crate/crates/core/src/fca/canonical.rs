//! The Duquenne-Guigues base via NextClosure.
//!
//! Sets are visited in lectic order under the closure operator of the
//! partial base found so far. Each visited set is either an intent or a
//! pseudo-intent; the latter contributes `P → P″` and is added to the
//! partial base before the walk continues.

use super::closure::LinClosure;
use super::derivation::closure;
use super::implication::{Implication, ImplicationBase};
use crate::bitset::{AttributeSet, BitSet};
use crate::context::FormalContext;

/// Lazily yields the canonical base in lectic order of premises.
///
/// Lets callers stop between rules, e.g. on a time budget.
pub struct CanonicalBase<'a> {
    k: &'a FormalContext,
    partial: LinClosure,
    next: Option<AttributeSet>,
    visited: u64,
}

impl<'a> CanonicalBase<'a> {
    pub fn new(k: &'a FormalContext) -> Self {
        let m = k.attribute_count();
        CanonicalBase {
            k,
            partial: LinClosure::new(m),
            next: Some(BitSet::new(m)),
            visited: 0,
        }
    }

    /// Number of closed sets of the partial-base operator visited so far.
    pub fn visited(&self) -> u64 {
        self.visited
    }

    /// Lectically next set closed under the partial base, if any.
    fn advance(&mut self, a: &AttributeSet) -> Option<AttributeSet> {
        let m = self.k.attribute_count();
        let mut seed = a.clone();
        for i in (0..m).rev() {
            if a.contains(i) {
                seed.remove(i);
                continue;
            }
            seed.insert(i);
            let b = self.partial.close(&seed);
            seed.remove(i);
            if b.agrees_below(a, i) {
                return Some(b);
            }
        }
        None
    }
}

impl Iterator for CanonicalBase<'_> {
    type Item = Implication;

    fn next(&mut self) -> Option<Implication> {
        while let Some(a) = self.next.take() {
            self.visited += 1;
            let closed = closure(self.k, &a);
            let rule = (closed != a).then(|| Implication::new(a.clone(), closed));
            if let Some(r) = &rule {
                self.partial.push(r);
            }
            self.next = self.advance(&a);
            if rule.is_some() {
                return rule;
            }
        }
        None
    }
}

pub fn canonical_base(k: &FormalContext) -> ImplicationBase {
    ImplicationBase::from_rules(k.attribute_count(), CanonicalBase::new(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::fixtures::{contranominal, family_table, full};
    use crate::fca::closure::{entails, lin_closure};
    use crate::fca::derivation::is_valid;
    use crate::fca::oracle::theory_oracle;
    use crate::testing::arb_context;
    use proptest::prelude::*;

    #[test]
    fn family_table_has_one_rule() {
        let k = family_table();
        let base = canonical_base(&k);
        let mother = k.attribute_set(["mother"]).unwrap();
        assert_eq!(base.rules(), [Implication::new(BitSet::new(3), mother)]);
    }

    #[test]
    fn contranominal_has_empty_base() {
        assert!(canonical_base(&contranominal(3)).is_empty());
    }

    #[test]
    fn full_context_base() {
        let base = canonical_base(&full(2, 2));
        assert_eq!(base.rules(), [Implication::new(BitSet::new(2), BitSet::full(2))]);
    }

    #[test]
    fn degenerate_contexts() {
        assert!(canonical_base(&FormalContext::empty()).is_empty());
        // no objects: everything follows from nothing
        let k = FormalContext::from_cross_table(&[], &["a", "b", "c"], &[]).unwrap();
        assert_eq!(
            canonical_base(&k).rules(),
            [Implication::new(BitSet::new(3), BitSet::full(3))]
        );
    }

    #[test]
    fn textbook_example() {
        // a -> b and b,c -> a over a 4-attribute context
        let k = FormalContext::from_cross_table(
            &["1", "2", "3", "4"],
            &["a", "b", "c", "d"],
            &["xx..", ".x.x", "xxx.", "..xx"],
        )
        .unwrap();
        let base = canonical_base(&k);
        for r in &base {
            assert!(is_valid(&k, r));
        }
        let premises: Vec<Vec<usize>> = base.iter().map(|r| r.premise.iter().collect()).collect();
        // lectic order of pseudo-intents
        for w in base.rules().windows(2) {
            assert_eq!(w[0].premise.lectic_cmp(&w[1].premise), std::cmp::Ordering::Less);
        }
        assert!(premises.contains(&vec![0]));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn sound_complete_nonredundant(k in arb_context(8, 6)) {
            let base = canonical_base(&k);
            for r in &base {
                prop_assert!(is_valid(&k, r));
            }
            for t in theory_oracle(&k).unwrap() {
                prop_assert!(entails(&base, &t));
            }
            for (i, r) in base.iter().enumerate() {
                prop_assert!(!entails(&base.without(i), r));
            }
        }

        #[test]
        fn premises_are_closed_under_the_rest(k in arb_context(8, 6)) {
            // pseudo-intents: not closed, but closed under the other rules
            let base = canonical_base(&k);
            for (i, r) in base.iter().enumerate() {
                prop_assert_ne!(closure(&k, &r.premise), r.premise.clone());
                prop_assert_eq!(lin_closure(&base.without(i), &r.premise), r.premise.clone());
            }
        }
    }
}
