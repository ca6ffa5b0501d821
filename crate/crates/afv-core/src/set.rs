//! Bit-sets of argument ids and canonically ordered families of them.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// A set of argument ids, stored as a bit vector.
///
/// Sets whose members all lie below 64 live in a single inline word; larger
/// universes fall back to a heap-allocated block vector. All operations are
/// value-producing; an `ArgSet` is never mutated in place once shared.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ArgSet {
    bits: Bits,
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Bits {
    Word(u64),
    // Invariants: len > 1, last block non-zero.
    Wide(Vec<u64>),
}

impl Default for Bits {
    fn default() -> Self {
        Bits::Word(0)
    }
}

impl ArgSet {
    pub fn empty() -> Self {
        ArgSet { bits: Bits::Word(0) }
    }

    pub fn singleton(id: usize) -> Self {
        let mut s = Self::empty();
        s.insert(id);
        s
    }

    /// The set `{0, 1, .., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut words = vec![u64::MAX; n / 64];
        if !n.is_multiple_of(64) {
            words.push((1u64 << (n % 64)) - 1);
        }
        Self::from_words(words)
    }

    pub(crate) fn from_words(mut words: Vec<u64>) -> Self {
        while words.len() > 1 && *words.last().unwrap() == 0 {
            words.pop();
        }
        if words.len() <= 1 {
            ArgSet { bits: Bits::Word(words.first().copied().unwrap_or(0)) }
        } else {
            ArgSet { bits: Bits::Wide(words) }
        }
    }

    fn words(&self) -> &[u64] {
        match &self.bits {
            Bits::Word(w) => core::slice::from_ref(w),
            Bits::Wide(v) => v,
        }
    }

    pub fn len(&self) -> usize {
        self.words().iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words().iter().all(|&w| w == 0)
    }

    pub fn contains(&self, id: usize) -> bool {
        let ws = self.words();
        id / 64 < ws.len() && ws[id / 64] >> (id % 64) & 1 == 1
    }

    pub fn insert(&mut self, id: usize) {
        let mut words = self.words().to_vec();
        if id / 64 >= words.len() {
            words.resize(id / 64 + 1, 0);
        }
        words[id / 64] |= 1 << (id % 64);
        *self = Self::from_words(words);
    }

    pub fn remove(&mut self, id: usize) {
        let mut words = self.words().to_vec();
        if id / 64 < words.len() {
            words[id / 64] &= !(1 << (id % 64));
        }
        *self = Self::from_words(words);
    }

    /// Largest member, if any. Useful for validating sets against a universe.
    pub fn max_member(&self) -> Option<usize> {
        let ws = self.words();
        for (i, &w) in ws.iter().enumerate().rev() {
            if w != 0 {
                return Some(i * 64 + 63 - w.leading_zeros() as usize);
            }
        }
        None
    }

    fn zip_words(&self, other: &Self, len: usize, f: impl Fn(u64, u64) -> u64) -> Self {
        let a = self.words();
        let b = other.words();
        let words = (0..len)
            .map(|i| f(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0)))
            .collect();
        Self::from_words(words)
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_words(other, self.words().len().max(other.words().len()), |x, y| x | y)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_words(other, self.words().len().min(other.words().len()), |x, y| x & y)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_words(other, self.words().len(), |x, y| x & !y)
    }

    pub fn symmetric_difference(&self, other: &Self) -> Self {
        self.zip_words(other, self.words().len().max(other.words().len()), |x, y| x ^ y)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        let b = other.words();
        self.words()
            .iter()
            .enumerate()
            .all(|(i, &x)| x & !b.get(i).copied().unwrap_or(0) == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        let b = other.words();
        self.words()
            .iter()
            .enumerate()
            .all(|(i, &x)| x & b.get(i).copied().unwrap_or(0) == 0)
    }

    /// Ascending iterator over member ids.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words().iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            core::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let bit = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(i * 64 + bit)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for ArgSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ArgSet::empty();
        for id in iter {
            s.insert(id);
        }
        s
    }
}

/// Canonical order: by cardinality first, then lexicographically on the
/// ascending member lists. Gives every family of sets one deterministic
/// presentation, independent of how it was produced.
impl Ord for ArgSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let a = self.words();
            let b = other.words();
            for i in 0..a.len().max(b.len()) {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                let diff = x ^ y;
                if diff != 0 {
                    let low = 1u64 << diff.trailing_zeros();
                    // The set holding the lowest differing id has the smaller
                    // member list.
                    return if x & low != 0 { Ordering::Less } else { Ordering::Greater };
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for ArgSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ArgSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, id) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{id}")?;
        }
        f.write_str("}")
    }
}

/// All subsets of `{0, .., n-1}`, in ascending bit-pattern order.
///
/// The cursor is a plain binary counter over blocks, so the iterator is not
/// limited to word-sized universes (though walking `2^n` subsets is only
/// feasible for small `n`).
pub(crate) fn subsets_of_universe(n: usize) -> Subsets {
    Subsets { current: vec![0; n.div_ceil(64)], n, exhausted: false }
}

/// All subsets of `set`, by enumerating subsets of its member list.
pub(crate) fn subsets_of(set: &ArgSet) -> impl Iterator<Item = ArgSet> + '_ {
    let members = set.to_vec();
    subsets_of_universe(members.len())
        .map(move |idx| idx.iter().map(|i| members[i]).collect())
}

pub(crate) struct Subsets {
    current: Vec<u64>,
    n: usize,
    exhausted: bool,
}

impl Iterator for Subsets {
    type Item = ArgSet;

    fn next(&mut self) -> Option<ArgSet> {
        if self.exhausted {
            return None;
        }
        let out = ArgSet::from_words(self.current.clone());
        let mut carry = true;
        for w in &mut self.current {
            if carry {
                let (v, c) = w.overflowing_add(1);
                *w = v;
                carry = c;
            }
        }
        let past_top =
            !self.n.is_multiple_of(64) && self.current[self.n / 64] >> (self.n % 64) != 0;
        if carry || past_top {
            self.exhausted = true;
        }
        Some(out)
    }
}

/// A deduplicated family of argument sets in canonical order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExtensionSet {
    sets: Vec<ArgSet>,
}

impl ExtensionSet {
    pub fn new(mut sets: Vec<ArgSet>) -> Self {
        sets.sort();
        sets.dedup();
        ExtensionSet { sets }
    }

    /// The empty family (no extensions at all; distinct from `{{}}`).
    pub fn none() -> Self {
        ExtensionSet { sets: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, set: &ArgSet) -> bool {
        self.sets.binary_search(set).is_ok()
    }

    pub fn iter(&self) -> core::slice::Iter<'_, ArgSet> {
        self.sets.iter()
    }

    pub fn sets(&self) -> &[ArgSet] {
        &self.sets
    }

    /// Intersection of all members; `None` for the empty family.
    pub fn common_core(&self) -> Option<ArgSet> {
        let mut it = self.sets.iter();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, s| acc.intersection(s)))
    }
}

impl FromIterator<ArgSet> for ExtensionSet {
    fn from_iter<I: IntoIterator<Item = ArgSet>>(iter: I) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

impl fmt::Debug for ExtensionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.sets.iter()).finish()
    }
}
