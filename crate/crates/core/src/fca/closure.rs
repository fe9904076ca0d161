//! Closure under a set of implications in time linear in the base size.
//!
//! Every rule keeps a counter of premise attributes not yet derived; an
//! attribute entering the closure decrements the counters of the rules it
//! occurs in, and a rule fires when its counter hits zero.

use super::implication::{Implication, ImplicationBase};
use crate::bitset::{AttributeSet, BitSet};

/// Indexed base supporting repeated closure queries and incremental growth.
#[derive(Clone, Debug)]
pub struct LinClosure {
    universe: usize,
    premise_sizes: Vec<u32>,
    conclusions: Vec<AttributeSet>,
    /// Rules with an empty premise, folded into one set.
    axioms: AttributeSet,
    /// For each attribute, the rules whose premise contains it.
    occurrences: Vec<Vec<u32>>,
    // scratch buffers reused across queries
    counters: Vec<u32>,
    queue: Vec<usize>,
}

impl LinClosure {
    pub fn new(universe: usize) -> Self {
        LinClosure {
            universe,
            premise_sizes: Vec::new(),
            conclusions: Vec::new(),
            axioms: BitSet::new(universe),
            occurrences: vec![Vec::new(); universe],
            counters: Vec::new(),
            queue: Vec::new(),
        }
    }

    pub fn from_base(base: &ImplicationBase) -> Self {
        let mut lc = LinClosure::new(base.universe());
        for r in base {
            lc.push(r);
        }
        lc
    }

    pub fn push(&mut self, rule: &Implication) {
        assert_eq!(
            rule.universe(),
            self.universe,
            "rule over a different attribute universe"
        );
        let size = rule.premise.count();
        if size == 0 {
            self.axioms.union_with(&rule.conclusion);
            return;
        }
        let id = self.conclusions.len() as u32;
        for m in &rule.premise {
            self.occurrences[m].push(id);
        }
        self.premise_sizes.push(size as u32);
        self.conclusions.push(rule.conclusion.clone());
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    /// Smallest superset of `x` respecting every rule.
    pub fn close(&mut self, x: &AttributeSet) -> AttributeSet {
        let mut out = x.clone();
        out.union_with(&self.axioms);
        self.counters.clear();
        self.counters.extend_from_slice(&self.premise_sizes);
        self.queue.clear();
        self.queue.extend(out.iter());
        while let Some(m) = self.queue.pop() {
            for &r in &self.occurrences[m] {
                let c = &mut self.counters[r as usize];
                *c -= 1;
                if *c == 0 {
                    for n in &self.conclusions[r as usize] {
                        if out.insert(n) {
                            self.queue.push(n);
                        }
                    }
                }
            }
        }
        out
    }
}

/// `X^L`.
pub fn lin_closure(base: &ImplicationBase, x: &AttributeSet) -> AttributeSet {
    LinClosure::from_base(base).close(x)
}

/// `L ⊨ X → Y` iff `Y ⊆ X^L`.
pub fn entails(base: &ImplicationBase, imp: &Implication) -> bool {
    imp.conclusion.is_subset(&lin_closure(base, &imp.premise))
}
