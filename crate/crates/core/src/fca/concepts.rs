//! Closed-set enumeration by Close-by-One, optionally cut at a minimum
//! extent size. Supports are anti-monotone along the search tree, so the cut
//! prunes whole subtrees.

use super::derivation::{extent, intent};
use crate::bitset::{AttributeSet, ObjectSet};
use crate::context::FormalContext;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Concept {
    pub extent: ObjectSet,
    pub intent: AttributeSet,
}

/// All formal concepts, in lectic order of their intents.
pub fn concepts(k: &FormalContext) -> Vec<Concept> {
    closed_sets(k, 0)
}

/// Concepts whose extent has at least `min_extent` objects, in lectic order
/// of intents.
pub fn closed_sets(k: &FormalContext, min_extent: usize) -> Vec<Concept> {
    let mut out = Vec::new();
    let top_extent = extent(k, &AttributeSet::new(k.attribute_count()));
    if top_extent.count() >= min_extent {
        let top = Concept {
            intent: intent(k, &top_extent),
            extent: top_extent,
        };
        close_by_one(k, top, 0, min_extent, &mut out);
    }
    out.sort_by(|a, b| a.intent.lectic_cmp(&b.intent));
    out
}

fn close_by_one(k: &FormalContext, c: Concept, start: usize, min_extent: usize, out: &mut Vec<Concept>) {
    let mut children = Vec::new();
    for j in start..k.attribute_count() {
        if c.intent.contains(j) {
            continue;
        }
        let ext = c.extent.intersection(k.column(j));
        if ext.count() < min_extent {
            continue;
        }
        let int = intent(k, &ext);
        // canonicity: the new intent adds nothing below j
        if int.agrees_below(&c.intent, j) {
            children.push((
                Concept {
                    extent: ext,
                    intent: int,
                },
                j + 1,
            ));
        }
    }
    out.push(c);
    for (child, next) in children {
        close_by_one(k, child, next, min_extent, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitset::BitSet;
    use crate::context::fixtures::{contranominal, family_table};
    use crate::fca::derivation::closure;
    use crate::testing::arb_context;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    #[test]
    fn family_concepts() {
        let k = family_table();
        let intents: Vec<AttributeSet> = concepts(&k).into_iter().map(|c| c.intent).collect();
        let expected: Vec<AttributeSet> = [
            vec!["mother"],
            vec!["godparent", "mother"],
            vec!["isMother", "mother"],
            vec!["isMother", "godparent", "mother"],
        ]
        .iter()
        .map(|l| k.attribute_set(l.iter().copied()).unwrap())
        .collect();
        assert_eq!(intents, expected);
    }

    #[test]
    fn empty_context_has_one_concept() {
        let cs = concepts(&FormalContext::empty());
        assert_eq!(cs.len(), 1);
        assert!(cs[0].extent.is_empty() && cs[0].intent.is_empty());
    }

    #[test]
    fn contranominal_has_all_subsets() {
        assert_eq!(concepts(&contranominal(3)).len(), 8);
        assert_eq!(concepts(&contranominal(6)).len(), 64);
    }

    #[test]
    fn support_cut() {
        let k = family_table();
        assert_eq!(closed_sets(&k, 3).len(), 3);
        assert_eq!(closed_sets(&k, 4).len(), 1);
        assert_eq!(closed_sets(&k, 5).len(), 0);
    }

    proptest! {
        #[test]
        fn matches_brute_force(k in arb_context(8, 7)) {
            let m = k.attribute_count();
            let brute: BTreeSet<Vec<usize>> = (0u32..1 << m)
                .map(|bits| closure(&k, &BitSet::from_indices(m, (0..m).filter(|i| bits >> i & 1 == 1))))
                .map(|c| c.iter().collect())
                .collect();
            let cs = concepts(&k);
            prop_assert_eq!(cs.len(), brute.len());
            for c in &cs {
                prop_assert_eq!(extent(&k, &c.intent), c.extent.clone());
                prop_assert_eq!(intent(&k, &c.extent), c.intent.clone());
            }
            for w in cs.windows(2) {
                prop_assert_eq!(w[0].intent.lectic_cmp(&w[1].intent), std::cmp::Ordering::Less);
            }
        }
    }
}
