//! Frequent closed itemsets and the Luxenburger base.

use std::cmp::Ordering;

use num_rational::Ratio;

use crate::bitset::{AttributeSet, BitSet};
use crate::context::FormalContext;
use crate::error::{Error, Result};
use crate::fca::concepts::closed_sets;
use crate::fca::derivation::{closure, extent};
use crate::fca::format::Rule;
use crate::fca::oracle::all_subsets;
use crate::rational::Rational;

pub const DEFAULT_ORACLE_CAP: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociationRule {
    pub premise: AttributeSet,
    pub conclusion: AttributeSet,
    /// `supp(premise ∪ conclusion)`.
    pub support: Rational,
    pub confidence: Rational,
}

impl From<&AssociationRule> for Rule {
    fn from(r: &AssociationRule) -> Self {
        Rule {
            premise: r.premise.clone(),
            conclusion: r.conclusion.clone(),
            support: Some(r.support),
            confidence: Some(r.confidence),
        }
    }
}

/// A frequent closed itemset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    pub intent: AttributeSet,
    pub count: usize,
    pub support: Rational,
}

/// Frequent closed sets (lectic order) and their covering pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IcebergLattice {
    pub nodes: Vec<Node>,
    /// `(lower, upper)` node indices, sorted.
    pub covers: Vec<(usize, usize)>,
}

impl IcebergLattice {
    pub fn node_index(&self, intent: &AttributeSet) -> Option<usize> {
        self.nodes.binary_search_by(|n| n.intent.lectic_cmp(intent)).ok()
    }

    pub fn upper_covers(&self, node: usize) -> impl Iterator<Item = usize> + '_ {
        let start = self.covers.partition_point(|&(lo, _)| lo < node);
        self.covers[start..]
            .iter()
            .take_while(move |&&(lo, _)| lo == node)
            .map(|&(_, hi)| hi)
    }
}

/// `⌈minsupp · n⌉`, the least object count meeting the threshold.
fn min_count(minsupp: Rational, n: usize) -> usize {
    let (num, den) = (*minsupp.numer() as u128, *minsupp.denom() as u128);
    let needed = (num * n as u128).div_ceil(den);
    needed.min(usize::MAX as u128) as usize
}

/// Closed sets with support at least `minsupp`, with their covering
/// relation. An objectless context has no supports and yields nothing.
pub fn frequent_closed(k: &FormalContext, minsupp: Rational) -> IcebergLattice {
    let n = k.object_count();
    if n == 0 {
        return IcebergLattice::default();
    }
    let nodes: Vec<Node> = closed_sets(k, min_count(minsupp, n))
        .into_iter()
        .map(|c| Node {
            count: c.extent.count(),
            support: Ratio::new(c.extent.count() as u64, n as u64),
            intent: c.intent,
        })
        .collect();
    let mut lattice = IcebergLattice {
        nodes,
        covers: Vec::new(),
    };
    // Upper covers of B are the minimal sets among (B + m)″; every set
    // between a frequent node and B is frequent, so covers survive the cut.
    for (i, node) in lattice.nodes.iter().enumerate() {
        let mut candidates: Vec<usize> = Vec::new();
        for m in 0..k.attribute_count() {
            if node.intent.contains(m) {
                continue;
            }
            let mut b = node.intent.clone();
            b.insert(m);
            if let Some(j) = lattice.node_index(&closure(k, &b)) {
                if !candidates.contains(&j) {
                    candidates.push(j);
                }
            }
        }
        let nodes = &lattice.nodes;
        for &j in &candidates {
            let minimal = candidates
                .iter()
                .all(|&o| o == j || !nodes[o].intent.is_subset(&nodes[j].intent));
            if minimal {
                lattice.covers.push((i, j));
            }
        }
    }
    lattice.covers.sort_unstable();
    lattice
}

/// `supp(X ∪ Y) / supp(X)`.
pub fn confidence(k: &FormalContext, premise: &AttributeSet, conclusion: &AttributeSet) -> Result<Rational> {
    let base = extent(k, premise);
    if base.is_empty() {
        return Err(Error::UndefinedConfidence);
    }
    let both = conclusion.iter().fold(base.clone(), |mut e, m| {
        e.intersect_with(k.column(m));
        e
    });
    Ok(Ratio::new(both.count() as u64, base.count() as u64))
}

/// Descending support, descending confidence, then premise and conclusion
/// in lectic order.
pub fn rule_order(a: &AssociationRule, b: &AssociationRule) -> Ordering {
    b.support
        .cmp(&a.support)
        .then_with(|| b.confidence.cmp(&a.confidence))
        .then_with(|| a.premise.lectic_cmp(&b.premise))
        .then_with(|| a.conclusion.lectic_cmp(&b.conclusion))
}

/// One rule `B1 → B2 \ B1` per cover `B1 ≺ B2` of the iceberg lattice with
/// confidence at least `minconf`.
pub fn luxenburger_base(k: &FormalContext, minsupp: Rational, minconf: Rational) -> Vec<AssociationRule> {
    luxenburger_from_lattice(&frequent_closed(k, minsupp), minconf)
}

pub fn luxenburger_from_lattice(lattice: &IcebergLattice, minconf: Rational) -> Vec<AssociationRule> {
    let mut rules: Vec<AssociationRule> = lattice
        .covers
        .iter()
        .filter_map(|&(lo, hi)| {
            let (b1, b2) = (&lattice.nodes[lo], &lattice.nodes[hi]);
            // only the bottom M can have zero support, and it covers nothing
            if b1.count == 0 {
                return None;
            }
            let conf = Ratio::new(b2.count as u64, b1.count as u64);
            (conf >= minconf).then(|| AssociationRule {
                premise: b1.intent.clone(),
                conclusion: b2.intent.difference(&b1.intent),
                support: b2.support,
                confidence: conf,
            })
        })
        .collect();
    rules.sort_by(rule_order);
    rules
}

/// Every rule `X → Y` with `Y` nonempty and disjoint from `X`, meeting both
/// thresholds, by exhaustive enumeration.
pub fn all_association_rules_oracle(
    k: &FormalContext,
    minsupp: Rational,
    minconf: Rational,
) -> Result<Vec<AssociationRule>> {
    let m = k.attribute_count();
    if m > DEFAULT_ORACLE_CAP {
        return Err(Error::CapExceeded {
            attributes: m,
            cap: DEFAULT_ORACLE_CAP,
        });
    }
    let n = k.object_count();
    let mut out = Vec::new();
    if n == 0 {
        return Ok(out);
    }
    let subsets: Vec<BitSet> = all_subsets(m).collect();
    let counts: Vec<usize> = subsets.iter().map(|s| extent(k, s).count()).collect();
    let index = |s: &BitSet| s.words().first().copied().unwrap_or(0) as usize;
    for x in &subsets {
        let cx = counts[index(x)];
        if cx == 0 {
            continue;
        }
        for y in &subsets {
            if y.is_empty() || !x.is_disjoint(y) {
                continue;
            }
            let cxy = counts[index(&x.union(y))];
            let support = Ratio::new(cxy as u64, n as u64);
            let confidence = Ratio::new(cxy as u64, cx as u64);
            if support >= minsupp && confidence >= minconf {
                out.push(AssociationRule {
                    premise: x.clone(),
                    conclusion: y.clone(),
                    support,
                    confidence,
                });
            }
        }
    }
    out.sort_by(rule_order);
    Ok(out)
}
