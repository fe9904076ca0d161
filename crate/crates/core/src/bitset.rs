//! Fixed-width bit sets used for attribute sets, object sets and context rows.

use std::cmp::Ordering;
use std::fmt;

const WORD: usize = 64;

/// A subset of `0..universe` packed into 64-bit words.
///
/// Bits at positions `>= universe` are always zero, so derived equality and
/// hashing are set equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitSet {
    words: Vec<u64>,
    universe: usize,
}

/// Attribute subsets of a context.
pub type AttributeSet = BitSet;
/// Object subsets of a context.
pub type ObjectSet = BitSet;

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

impl BitSet {
    pub fn new(universe: usize) -> Self {
        BitSet {
            words: vec![0; words_for(universe)],
            universe,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = BitSet {
            words: vec![!0; words_for(universe)],
            universe,
        };
        set.clear_tail();
        set
    }

    /// Panics if an index is outside the universe.
    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, indices: I) -> Self {
        let mut set = BitSet::new(universe);
        for i in indices {
            set.insert(i);
        }
        set
    }

    fn clear_tail(&mut self) {
        let rem = self.universe % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        assert!(i < self.universe, "index {i} outside universe {}", self.universe);
        let (w, b) = (i / WORD, 1u64 << (i % WORD));
        let fresh = self.words[w] & b == 0;
        self.words[w] |= b;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        if i < self.universe {
            self.words[i / WORD] &= !(1u64 << (i % WORD));
        }
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.universe && self.words[i / WORD] & (1u64 << (i % WORD)) != 0
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.universe
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    pub fn fill(&mut self) {
        self.words.iter_mut().for_each(|w| *w = !0);
        self.clear_tail();
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    #[inline]
    pub fn intersect_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    #[inline]
    pub fn union_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn difference_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn union(&self, other: &BitSet) -> BitSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn difference(&self, other: &BitSet) -> BitSet {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    /// Number of common elements, without allocating.
    pub fn intersection_count(&self, other: &BitSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Keeps only the elements `< bound`.
    pub fn truncate_to(&mut self, bound: usize) {
        let bound = bound.min(self.universe);
        let (w, b) = (bound / WORD, bound % WORD);
        if w < self.words.len() {
            self.words[w] &= (1u64 << b) - 1;
            for word in &mut self.words[w + 1..] {
                *word = 0;
            }
        }
    }

    /// True when both sets agree on every element `< bound`.
    pub fn agrees_below(&self, other: &BitSet, bound: usize) -> bool {
        let bound = bound.min(self.universe);
        let (w, b) = (bound / WORD, bound % WORD);
        if self.words[..w] != other.words[..w] {
            return false;
        }
        if b == 0 || w >= self.words.len() {
            return true;
        }
        let mask = (1u64 << b) - 1;
        (self.words[w] ^ other.words[w]) & mask == 0
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    /// Smallest element on which the two sets differ.
    pub fn first_difference(&self, other: &BitSet) -> Option<usize> {
        self.words.iter().zip(&other.words).enumerate().find_map(|(i, (a, b))| {
            let x = a ^ b;
            (x != 0).then(|| i * WORD + x.trailing_zeros() as usize)
        })
    }

    /// Lectic order: `A < B` iff the smallest element in which they differ
    /// belongs to `B`.
    pub fn lectic_cmp(&self, other: &BitSet) -> Ordering {
        match self.first_difference(other) {
            None => Ordering::Equal,
            Some(i) if other.contains(i) => Ordering::Less,
            Some(_) => Ordering::Greater,
        }
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}

impl<'a> IntoIterator for &'a BitSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}
