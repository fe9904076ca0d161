use std::hash::{Hash, Hasher};

use crate::bitset::{AttributeSet, BitSet};

/// `premise → conclusion` over attribute indices.
///
/// Equality and hashing are semantic: `X → Y` and `X → Y ∪ X` are the same
/// implication.
#[derive(Clone, Debug)]
pub struct Implication {
    pub premise: AttributeSet,
    pub conclusion: AttributeSet,
}

impl Implication {
    pub fn new(premise: AttributeSet, conclusion: AttributeSet) -> Self {
        assert_eq!(premise.universe(), conclusion.universe(), "mixed attribute universes");
        Implication { premise, conclusion }
    }

    pub fn universe(&self) -> usize {
        self.premise.universe()
    }

    /// `Y \ X`, the part of the conclusion that says something.
    pub fn proper_conclusion(&self) -> AttributeSet {
        self.conclusion.difference(&self.premise)
    }

    /// `Y ∪ X`.
    pub fn full_conclusion(&self) -> AttributeSet {
        self.conclusion.union(&self.premise)
    }

    pub fn is_trivial(&self) -> bool {
        self.conclusion.is_subset(&self.premise)
    }

    /// Holds for `set`: if `set ⊇ X` then `set ⊇ Y`.
    pub fn respected_by(&self, set: &BitSet) -> bool {
        !self.premise.is_subset(set) || self.conclusion.is_subset(set)
    }
}

impl PartialEq for Implication {
    fn eq(&self, other: &Self) -> bool {
        self.premise == other.premise && self.full_conclusion() == other.full_conclusion()
    }
}

impl Eq for Implication {}

impl Hash for Implication {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.premise.hash(state);
        self.full_conclusion().hash(state);
    }
}

/// An ordered list of implications over a fixed attribute universe.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ImplicationBase {
    universe: usize,
    rules: Vec<Implication>,
}

impl ImplicationBase {
    pub fn new(universe: usize) -> Self {
        ImplicationBase {
            universe,
            rules: Vec::new(),
        }
    }

    pub fn from_rules<I: IntoIterator<Item = Implication>>(universe: usize, rules: I) -> Self {
        let mut base = ImplicationBase::new(universe);
        for r in rules {
            base.push(r);
        }
        base
    }

    pub fn push(&mut self, rule: Implication) {
        assert_eq!(
            rule.universe(),
            self.universe,
            "rule over a different attribute universe"
        );
        self.rules.push(rule);
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Implication> {
        self.rules.iter()
    }

    pub fn rules(&self) -> &[Implication] {
        &self.rules
    }

    pub fn rules_mut(&mut self) -> &mut Vec<Implication> {
        &mut self.rules
    }

    /// Sum of premise and conclusion sizes.
    pub fn size(&self) -> usize {
        self.rules
            .iter()
            .map(|r| r.premise.count() + r.conclusion.count())
            .sum()
    }

    pub fn without(&self, index: usize) -> ImplicationBase {
        let mut rest = self.clone();
        rest.rules.remove(index);
        rest
    }
}

impl<'a> IntoIterator for &'a ImplicationBase {
    type Item = &'a Implication;
    type IntoIter = std::slice::Iter<'a, Implication>;

    fn into_iter(self) -> Self::IntoIter {
        self.rules.iter()
    }
}

impl IntoIterator for ImplicationBase {
    type Item = Implication;
    type IntoIter = std::vec::IntoIter<Implication>;

    fn into_iter(self) -> Self::IntoIter {
        self.rules.into_iter()
    }
}
