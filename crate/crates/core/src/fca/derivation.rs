//! Derivation operators, closure, validity and support.

use num_rational::Ratio;

use super::implication::Implication;
use crate::bitset::{AttributeSet, BitSet, ObjectSet};
use crate::context::FormalContext;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// `B′`: objects having every attribute of `b`.
pub fn extent(k: &FormalContext, b: &AttributeSet) -> ObjectSet {
    let mut ext = BitSet::full(k.object_count());
    for m in b {
        ext.intersect_with(k.column(m));
        if ext.is_empty() {
            break;
        }
    }
    ext
}

/// `A′`: attributes shared by every object of `a`.
pub fn intent(k: &FormalContext, a: &ObjectSet) -> AttributeSet {
    let mut int = BitSet::full(k.attribute_count());
    for g in a {
        int.intersect_with(k.row(g));
        if int.is_empty() {
            break;
        }
    }
    int
}

/// `B″`.
pub fn closure(k: &FormalContext, b: &AttributeSet) -> AttributeSet {
    closure_with_extent(k, b).0
}

/// `(B″, B′)`. The intent scan stops as soon as it reaches `b`, which it
/// can never shrink below.
pub fn closure_with_extent(k: &FormalContext, b: &AttributeSet) -> (AttributeSet, ObjectSet) {
    let ext = extent(k, b);
    let mut int = BitSet::full(k.attribute_count());
    for g in &ext {
        int.intersect_with(k.row(g));
        if int == *b {
            break;
        }
    }
    (int, ext)
}

pub fn is_closed(k: &FormalContext, b: &AttributeSet) -> bool {
    closure(k, b) == *b
}

/// `X → Y` holds iff `X′ ⊆ Y′`, i.e. iff `Y ⊆ X″`.
pub fn is_valid(k: &FormalContext, imp: &Implication) -> bool {
    let ext = extent(k, &imp.premise);
    imp.conclusion.iter().all(|m| ext.is_subset(k.column(m)))
}

/// `|X′| / |G|`.
pub fn support(k: &FormalContext, imp: &Implication) -> Result<Rational> {
    itemset_support(k, &imp.premise)
}

pub fn itemset_support(k: &FormalContext, b: &AttributeSet) -> Result<Rational> {
    if k.object_count() == 0 {
        return Err(Error::EmptyContext);
    }
    Ok(Ratio::new(extent(k, b).count() as u64, k.object_count() as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::fixtures::{contranominal, family_table, full};
    use crate::testing::{arb_context, arb_subset};
    use proptest::prelude::*;

    fn attrs(k: &FormalContext, labels: &[&str]) -> AttributeSet {
        k.attribute_set(labels.iter().copied()).unwrap()
    }

    fn objs(k: &FormalContext, labels: &[&str]) -> ObjectSet {
        k.object_set(labels.iter().copied()).unwrap()
    }

    fn imp(k: &FormalContext, x: &[&str], y: &[&str]) -> Implication {
        Implication::new(attrs(k, x), attrs(k, y))
    }

    #[test]
    fn extents_of_family_table() {
        let k = family_table();
        assert_eq!(extent(&k, &attrs(&k, &["mother"])).count(), 4);
        assert_eq!(extent(&k, &attrs(&k, &[])), BitSet::full(4));
        assert_eq!(
            extent(&k, &attrs(&k, &["isMother", "godparent"])),
            objs(&k, &["AngelinaJolie", "Victoria"])
        );
    }

    #[test]
    fn intents_of_family_table() {
        let k = family_table();
        assert_eq!(
            intent(&k, &objs(&k, &["MileyCyrus"])),
            attrs(&k, &["godparent", "mother"])
        );
        assert_eq!(intent(&k, &BitSet::new(4)), BitSet::full(3));
        assert_eq!(intent(&k, &BitSet::full(4)), attrs(&k, &["mother"]));
    }

    #[test]
    fn closures_of_family_table() {
        let k = family_table();
        assert_eq!(closure(&k, &BitSet::new(3)), attrs(&k, &["mother"]));
        let closed = attrs(&k, &["godparent", "mother"]);
        assert_eq!(closure(&k, &closed), closed);
        assert_eq!(
            closure(&k, &attrs(&k, &["isMother"])),
            attrs(&k, &["isMother", "mother"])
        );
    }

    #[test]
    fn validity() {
        let k = family_table();
        assert!(is_valid(&k, &imp(&k, &[], &["mother"])));
        assert!(is_valid(&k, &imp(&k, &["godparent"], &["godparent"])));
        assert!(!is_valid(&k, &imp(&k, &["mother"], &["godparent"])));
    }

    #[test]
    fn supports() {
        let k = family_table();
        assert_eq!(support(&k, &imp(&k, &[], &["mother"])).unwrap(), Ratio::from_integer(1));
        assert_eq!(
            support(&k, &imp(&k, &["isMother", "godparent"], &["mother"])).unwrap(),
            Ratio::new(1, 2)
        );
        let c = contranominal(3);
        assert_eq!(
            support(&c, &imp(&c, &["m1", "m2", "m3"], &[])).unwrap(),
            Ratio::from_integer(0)
        );
        assert!(matches!(
            support(
                &FormalContext::empty(),
                &Implication::new(BitSet::new(0), BitSet::new(0))
            ),
            Err(Error::EmptyContext)
        ));
    }

    #[test]
    fn objectless_context_closes_to_everything() {
        let k = FormalContext::from_cross_table(&[], &["a", "b"], &[]).unwrap();
        assert_eq!(closure(&k, &BitSet::new(2)), BitSet::full(2));
        assert_eq!(closure(&full(2, 2), &BitSet::new(2)), BitSet::full(2));
    }

    fn arb_pair_of_sets() -> impl Strategy<Value = (FormalContext, AttributeSet, AttributeSet)> {
        arb_context(8, 7).prop_flat_map(|k| {
            let m = k.attribute_count();
            (Just(k), arb_subset(m), arb_subset(m))
        })
    }

    proptest! {
        #[test]
        fn galois_connection((k, a, b) in arb_pair_of_sets()) {
            let a2 = closure(&k, &a);
            prop_assert!(a.is_subset(&a2));
            prop_assert_eq!(closure(&k, &a2), a2.clone());
            prop_assert_eq!(intent(&k, &extent(&k, &a)), a2.clone());
            // A′ = A‴
            prop_assert_eq!(extent(&k, &a2), extent(&k, &a));
            if a.is_subset(&b) {
                prop_assert!(extent(&k, &b).is_subset(&extent(&k, &a)));
                prop_assert!(a2.is_subset(&closure(&k, &b)));
            }
            let ab = a.union(&b);
            prop_assert!(closure(&k, &a).union(&closure(&k, &b)).is_subset(&closure(&k, &ab)));
        }

        #[test]
        fn validity_is_closure_containment((k, x, y) in arb_pair_of_sets()) {
            let imp = Implication::new(x.clone(), y.clone());
            prop_assert_eq!(is_valid(&k, &imp), y.is_subset(&closure(&k, &x)));
        }
    }
}
