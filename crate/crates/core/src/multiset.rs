//! Multisets of positive letters, multiset partitions, and the reverse
//! lexicographic order.
//!
//! The letter alphabet is totally ordered as 1~ < 2~ < ... < 1 < 2 < ...
//! (barred letters below all unbarred ones). Two letter collections are
//! compared by reverse lex: scan both sorted decreasingly from the largest
//! entry; the first strict difference decides, and if one sequence runs out
//! first it is the smaller.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::partition::{Composition, Partition};

/// A letter of the tableau alphabet. Derived `Ord` puts every barred letter
/// below every unbarred one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Barred(u32),
    Unbarred(u32),
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Barred(j) => write!(f, "{}~", j),
            Letter::Unbarred(i) => write!(f, "{}", i),
        }
    }
}

/// Reverse lexicographic comparison of two decreasing letter sequences.
pub fn reverse_lex_cmp<I, J>(mut a: I, mut b: J) -> Ordering
where
    I: Iterator<Item = Letter>,
    J: Iterator<Item = Letter>,
{
    loop {
        match (a.next(), b.next()) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(x), Some(y)) => {
                if x != y {
                    return x.cmp(&y);
                }
            }
        }
    }
}

/// A multiset of positive unbarred letters, stored as letter -> multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Multiset {
    entries: BTreeMap<u32, u32>,
}

impl Multiset {
    pub fn empty() -> Self {
        Multiset::default()
    }

    pub fn from_letters(letters: &[u32]) -> Self {
        let mut m = Multiset::empty();
        for &l in letters {
            m.insert(l, 1);
        }
        m
    }

    /// Content multiset {{1^{c_1}, 2^{c_2}, ...}} of a count vector.
    pub fn from_counts(counts: &[u32]) -> Self {
        let mut m = Multiset::empty();
        for (i, &c) in counts.iter().enumerate() {
            if c > 0 {
                m.entries.insert(i as u32 + 1, c);
            }
        }
        m
    }

    pub fn insert(&mut self, letter: u32, count: u32) {
        assert!(letter > 0, "letters are positive");
        if count > 0 {
            *self.entries.entry(letter).or_insert(0) += count;
        }
    }

    /// Remove `count` copies; panics if absent.
    pub fn remove(&mut self, letter: u32, count: u32) {
        let m = self.entries.get_mut(&letter).expect("letter present");
        assert!(*m >= count);
        *m -= count;
        if *m == 0 {
            self.entries.remove(&letter);
        }
    }

    pub fn multiplicity(&self, letter: u32) -> u32 {
        self.entries.get(&letter).copied().unwrap_or(0)
    }

    /// Total number of letters, with multiplicity.
    pub fn size(&self) -> usize {
        self.entries.values().map(|&c| c as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Distinct letters in increasing order.
    pub fn letters(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.entries.iter().map(|(&l, &c)| (l, c))
    }

    /// All letters with multiplicity, decreasing.
    pub fn letters_desc(&self) -> impl Iterator<Item = Letter> + '_ {
        self.entries
            .iter()
            .rev()
            .flat_map(|(&l, &c)| std::iter::repeat_n(Letter::Unbarred(l), c as usize))
    }

    pub fn union(&self, other: &Multiset) -> Multiset {
        let mut m = self.clone();
        for (l, c) in other.letters() {
            m.insert(l, c);
        }
        m
    }

    pub fn is_submultiset_of(&self, other: &Multiset) -> bool {
        self.letters().all(|(l, c)| other.multiplicity(l) >= c)
    }

    pub fn minus(&self, other: &Multiset) -> Multiset {
        let mut m = self.clone();
        for (l, c) in other.letters() {
            m.remove(l, c);
        }
        m
    }

    /// True when no letter repeats.
    pub fn is_set(&self) -> bool {
        self.entries.values().all(|&c| c == 1)
    }

    /// All non-empty sub-multisets, each exactly once.
    pub fn sub_multisets_nonempty(&self) -> Vec<Multiset> {
        let letters: Vec<(u32, u32)> = self.letters().collect();
        let mut out = Vec::new();
        let mut current = Multiset::empty();
        fn rec(
            letters: &[(u32, u32)],
            idx: usize,
            current: &mut Multiset,
            out: &mut Vec<Multiset>,
        ) {
            if idx == letters.len() {
                if !current.is_empty() {
                    out.push(current.clone());
                }
                return;
            }
            let (letter, max) = letters[idx];
            for take in 0..=max {
                if take > 0 {
                    current.insert(letter, take);
                }
                rec(letters, idx + 1, current, out);
                if take > 0 {
                    current.remove(letter, take);
                }
            }
        }
        rec(&letters, 0, &mut current, &mut out);
        out
    }
}

impl PartialOrd for Multiset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Multiset {
    fn cmp(&self, other: &Self) -> Ordering {
        reverse_lex_cmp(self.letters_desc(), other.letters_desc())
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for (l, c) in self.letters() {
            for _ in 0..c {
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{}", l)?;
                first = false;
            }
        }
        write!(f, "}}")
    }
}

/// A multiset of non-empty multisets; blocks are kept sorted increasingly so
/// equal multiset partitions compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MultisetPartition {
    blocks: Vec<Multiset>,
}

impl MultisetPartition {
    pub fn new(mut blocks: Vec<Multiset>) -> Self {
        assert!(blocks.iter().all(|b| !b.is_empty()), "blocks are non-empty");
        blocks.sort();
        MultisetPartition { blocks }
    }

    pub fn blocks(&self) -> &[Multiset] {
        &self.blocks
    }

    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Union of all blocks with multiplicity.
    pub fn content(&self) -> Multiset {
        self.blocks
            .iter()
            .fold(Multiset::empty(), |acc, b| acc.union(b))
    }

    /// The partition of len(self) listing the multiplicities of the distinct
    /// blocks in decreasing order.
    pub fn multiplicity_partition(&self) -> Partition {
        Partition::from_unsorted(self.multiplicities()).expect("positive multiplicities")
    }

    /// Multiplicities of the distinct blocks listed in increasing reverse-lex
    /// block order.
    pub fn multiplicity_composition(&self) -> Composition {
        Composition::from_parts(self.multiplicities()).expect("positive multiplicities")
    }

    fn multiplicities(&self) -> Vec<u32> {
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.blocks.len() {
            let mut count = 1u32;
            while i + count as usize != self.blocks.len()
                && self.blocks[i + count as usize] == self.blocks[i]
            {
                count += 1;
            }
            out.push(count);
            i += count as usize;
        }
        out
    }
}

impl fmt::Display for MultisetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", b)?;
        }
        write!(f, "}}")
    }
}

/// Every multiset partition of `content` exactly once, generated with blocks
/// in decreasing reverse-lex order (largest block first) so the stream is
/// deterministic. With `set_blocks_only`, only partitions whose blocks have
/// no repeated letters.
pub fn enumerate_multiset_partitions(
    content: &Multiset,
    set_blocks_only: bool,
) -> Vec<MultisetPartition> {
    let mut out = Vec::new();
    let mut acc: Vec<Multiset> = Vec::new();
    rec_msp(content, None, set_blocks_only, &mut acc, &mut out);
    out
}

fn rec_msp(
    remaining: &Multiset,
    bound: Option<&Multiset>,
    set_blocks_only: bool,
    acc: &mut Vec<Multiset>,
    out: &mut Vec<MultisetPartition>,
) {
    if remaining.is_empty() {
        out.push(MultisetPartition::new(acc.clone()));
        return;
    }
    let mut candidates: Vec<Multiset> = remaining
        .sub_multisets_nonempty()
        .into_iter()
        .filter(|b| !set_blocks_only || b.is_set())
        .filter(|b| bound.is_none_or(|m| b <= m))
        .collect();
    candidates.sort();
    candidates.reverse();
    for block in candidates {
        let rest = remaining.minus(&block);
        acc.push(block.clone());
        rec_msp(&rest, Some(&block), set_blocks_only, acc, out);
        acc.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(letters: &[u32]) -> Multiset {
        Multiset::from_letters(letters)
    }

    #[test]
    fn reverse_lex_orders_by_largest_entry() {
        // {5~,1,1,1,2,2,3,4} < {2~,1,1,2,3,3,4}
        let mut a: Vec<Letter> = vec![4, 3, 2, 2, 1, 1, 1]
            .into_iter()
            .map(Letter::Unbarred)
            .collect();
        a.push(Letter::Barred(5));
        let mut b: Vec<Letter> = vec![4, 3, 3, 2, 1, 1]
            .into_iter()
            .map(Letter::Unbarred)
            .collect();
        b.push(Letter::Barred(2));
        assert_eq!(
            reverse_lex_cmp(a.into_iter(), b.into_iter()),
            Ordering::Less
        );
    }

    #[test]
    fn reverse_lex_shorter_suffix_is_smaller() {
        assert!(ms(&[2]) < ms(&[1, 2]));
        assert!(ms(&[]) < ms(&[1]));
        assert_eq!(
            reverse_lex_cmp(
                [Letter::Barred(1)].into_iter(),
                [Letter::Unbarred(1)].into_iter()
            ),
            Ordering::Less
        );
    }

    #[test]
    fn multiplicity_partition_examples() {
        // {{1,1,2},{1,1,2},{1,4}} -> (2,1)
        let pi = MultisetPartition::new(vec![ms(&[1, 1, 2]), ms(&[1, 1, 2]), ms(&[1, 4])]);
        assert_eq!(pi.multiplicity_partition(), Partition::of(&[2, 1]));

        let singles = MultisetPartition::new(vec![ms(&[1]), ms(&[2]), ms(&[3])]);
        assert_eq!(singles.multiplicity_partition(), Partition::of(&[1, 1, 1]));

        let repeated = MultisetPartition::new(vec![ms(&[1]), ms(&[1])]);
        assert_eq!(repeated.multiplicity_partition(), Partition::of(&[2]));
    }

    #[test]
    fn multiplicity_composition_examples() {
        // blocks ordered {1} < {1,1} < {2}
        let pi = MultisetPartition::new(vec![ms(&[1]), ms(&[1]), ms(&[1, 1]), ms(&[2])]);
        assert_eq!(pi.multiplicity_composition(), Composition::of(&[2, 1, 1]));
        assert_eq!(
            pi.multiplicity_composition().sorted(),
            pi.multiplicity_partition()
        );

        let one = MultisetPartition::new(vec![ms(&[1])]);
        assert_eq!(one.multiplicity_composition(), Composition::of(&[1]));

        let twin = MultisetPartition::new(vec![ms(&[1, 2]), ms(&[1, 2])]);
        assert_eq!(twin.multiplicity_composition(), Composition::of(&[2]));
    }

    #[test]
    fn enumerate_small_contents() {
        let two_ones = enumerate_multiset_partitions(&ms(&[1, 1]), false);
        assert_eq!(two_ones.len(), 2);

        let set_partitions = enumerate_multiset_partitions(&ms(&[1, 2]), true);
        assert_eq!(set_partitions.len(), 2);

        let empty = enumerate_multiset_partitions(&Multiset::empty(), false);
        assert_eq!(empty.len(), 1);
        assert!(empty[0].is_empty());
    }

    #[test]
    fn enumerate_is_duplicate_free() {
        let content = ms(&[1, 1, 2, 3]);
        let all = enumerate_multiset_partitions(&content, false);
        let mut sorted = all.clone();
        sorted.sort_by(|a, b| format!("{}", a).cmp(&format!("{}", b)));
        sorted.dedup();
        assert_eq!(sorted.len(), all.len());
        for pi in &all {
            assert_eq!(pi.content(), content);
        }
    }
}
