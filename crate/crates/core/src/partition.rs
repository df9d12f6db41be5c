//! Integer partitions and compositions.
//!
//! Partitions index everything in this crate: bases of symmetric functions,
//! tableau shapes, cycle types and characters. The canonical order used for
//! term maps and output is by size first, then lexicographically on the part
//! sequence; within a fixed size this agrees with reverse lexicographic
//! comparison of the parts as a multiset.

use std::cmp::Ordering;
use std::fmt;

use num::BigInt;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. The empty sequence is
/// the unique partition of 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Validating constructor; parts must be weakly decreasing and positive.
    pub fn from_parts(parts: Vec<u32>) -> Result<Self> {
        for i in 0..parts.len() {
            if parts[i] == 0 {
                return Err(Error::InvalidPartition(format!(
                    "zero part in {:?}",
                    parts
                )));
            }
            if i + 1 < parts.len() && parts[i] < parts[i + 1] {
                return Err(Error::InvalidPartition(format!(
                    "parts not weakly decreasing: {:?}",
                    parts
                )));
            }
        }
        Ok(Partition { parts })
    }

    /// Constructor for statically known-good part lists.
    ///
    /// Panics on invalid input; use [`Partition::from_parts`] for data from
    /// the outside world.
    pub fn of(parts: &[u32]) -> Self {
        Partition::from_parts(parts.to_vec()).expect("valid partition literal")
    }

    /// Sort a list of positive integers into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "zero part in {:?}",
                parts
            )));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The i-th part (1-indexed), 0 beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 || i > self.parts.len() {
            0
        } else {
            self.parts[i - 1]
        }
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, 0 for the empty partition.
    pub fn first_part(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The partition with the first part removed.
    pub fn tail(&self) -> Partition {
        Partition {
            parts: self.parts.iter().skip(1).copied().collect(),
        }
    }

    /// Prepend a part `a >= first_part`; prepending 0 is the identity on the
    /// empty partition and invalid otherwise.
    pub fn prepend(&self, a: u32) -> Result<Partition> {
        if a < self.first_part() {
            return Err(Error::InvalidPartition(format!(
                "cannot prepend {} to {}",
                a, self
            )));
        }
        if a == 0 {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::with_capacity(self.parts.len() + 1);
        parts.push(a);
        parts.extend_from_slice(&self.parts);
        Ok(Partition { parts })
    }

    /// Pad to the partition `(n - |self|, self)`; fails when `n - |self|`
    /// would be smaller than the first part.
    pub fn padded(&self, n: usize) -> Result<Partition> {
        let size = self.size();
        if n < size {
            return Err(Error::InvalidPadding(format!(
                "n = {} smaller than |{}| = {}",
                n, self, size
            )));
        }
        let head = (n - size) as u32;
        self.prepend(head)
            .map_err(|_| Error::InvalidPadding(format!("(n-|{0}|, {0}) at n = {1}", self, n)))
    }

    /// Multiplicity of the part `i`.
    pub fn multiplicity(&self, i: u32) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// The conjugate partition: row i of the result counts the parts >= i.
    pub fn conjugate(&self) -> Partition {
        let mut parts = Vec::new();
        let mut i = 1;
        loop {
            let count = self.parts.iter().filter(|&&p| p >= i).count() as u32;
            if count == 0 {
                break;
            }
            parts.push(count);
            i += 1;
        }
        Partition { parts }
    }

    /// z_lambda = prod_i i^{m_i} m_i!, the size of the centralizer of a
    /// permutation with this cycle type.
    pub fn zee(&self) -> BigInt {
        let mut z = BigInt::from(1u32);
        let mut i = 0;
        while i < self.parts.len() {
            let part = self.parts[i];
            let mut mult = 0u32;
            while i < self.parts.len() && self.parts[i] == part {
                mult += 1;
                i += 1;
            }
            for _ in 0..mult {
                z *= BigInt::from(part);
            }
            for k in 1..=mult {
                z *= BigInt::from(k);
            }
        }
        z
    }

    /// Componentwise containment of Young diagrams.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| self.part(i + 1) >= p)
    }

    /// Dominance comparison is not needed; canonical order is (size, lex).
    fn canonical_cmp(&self, other: &Partition) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.cmp(&other.parts))
    }

    /// Parse a bracketed literal such as `[2,1]` or `[]`.
    pub fn parse(text: &str) -> Result<Partition> {
        let parts = parse_bracketed(text)?;
        Partition::from_parts(parts).map_err(|e| Error::Parse {
            position: 0,
            message: e.to_string(),
        })
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_cmp(other)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "]")
    }
}

/// A sequence of positive integers where the order is significant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn empty() -> Self {
        Composition { parts: Vec::new() }
    }

    pub fn from_parts(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "zero part in composition {:?}",
                parts
            )));
        }
        Ok(Composition { parts })
    }

    pub fn of(parts: &[u32]) -> Self {
        Composition::from_parts(parts.to_vec()).expect("valid composition literal")
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sort descending into a partition.
    pub fn sorted(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Parse a bracketed literal such as `[1,2]` or `[]`.
    pub fn parse(text: &str) -> Result<Composition> {
        let parts = parse_bracketed(text)?;
        Composition::from_parts(parts).map_err(|e| Error::Parse {
            position: 0,
            message: e.to_string(),
        })
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition {
            parts: p.parts.clone(),
        }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "]")
    }
}

fn parse_bracketed(text: &str) -> Result<Vec<u32>> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix('[')
        .and_then(|rest| rest.strip_suffix(']'))
        .ok_or_else(|| Error::Parse {
            position: 0,
            message: format!("expected a bracketed list, got {:?}", text),
        })?;
    let inner = inner.trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|piece| {
            piece.trim().parse::<u32>().map_err(|_| Error::Parse {
                position: 0,
                message: format!("invalid entry {:?} in {:?}", piece, text),
            })
        })
        .collect()
}

/// `outer/inner` is a horizontal strip: `inner` fits inside `outer` and every
/// column gains at most one cell, i.e. `outer_{i+1} <= inner_i` for all i.
pub fn is_horizontal_strip(outer: &Partition, inner: &Partition) -> bool {
    if !outer.contains(inner) {
        return false;
    }
    (1..=outer.len()).all(|i| outer.part(i + 1) <= inner.part(i))
}

/// All partitions of `n` in canonical order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: usize, max_part: usize, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let cap = remaining.min(max_part);
        for next in (1..=cap).rev() {
            current.push(next as u32);
            rec(remaining - next, next, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out.sort();
    out
}

/// All partitions of size at most `n`, smallest sizes first.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// All compositions of `n` (ordered sequences of positive parts).
pub fn compositions_of(n: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: usize, current: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if remaining == 0 {
            out.push(Composition {
                parts: current.clone(),
            });
            return;
        }
        for next in 1..=remaining {
            current.push(next as u32);
            rec(remaining - next, current, out);
            current.pop();
        }
    }
    rec(n, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::of(&[3, 1]).conjugate(), Partition::of(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(Partition::of(&[2, 2]).conjugate(), Partition::of(&[2, 2]));
    }

    #[test]
    fn zee_examples() {
        assert_eq!(Partition::of(&[1]).zee(), BigInt::from(1));
        assert_eq!(Partition::of(&[2, 1]).zee(), BigInt::from(2));
        assert_eq!(Partition::of(&[2, 2, 1]).zee(), BigInt::from(8));
        assert_eq!(Partition::empty().zee(), BigInt::from(1));
    }

    #[test]
    fn horizontal_strip_examples() {
        assert!(is_horizontal_strip(
            &Partition::of(&[3, 1]),
            &Partition::of(&[2])
        ));
        assert!(is_horizontal_strip(
            &Partition::of(&[2, 2]),
            &Partition::of(&[2])
        ));
        // column 2 would gain two cells
        assert!(!is_horizontal_strip(
            &Partition::of(&[3, 2]),
            &Partition::of(&[1])
        ));
    }

    /// Brute-force horizontal strip check: mark the added cells by column and
    /// require containment plus at most one new cell per column.
    fn horizontal_strip_by_columns(outer: &Partition, inner: &Partition) -> bool {
        if !outer.contains(inner) {
            return false;
        }
        let width = outer.first_part() as usize;
        for col in 1..=width {
            let outer_height = outer.parts().iter().filter(|&&p| p as usize >= col).count();
            let inner_height = inner.parts().iter().filter(|&&p| p as usize >= col).count();
            if outer_height > inner_height + 1 {
                return false;
            }
        }
        true
    }

    #[test]
    fn horizontal_strip_matches_column_count() {
        for outer in partitions_up_to(6) {
            for inner in partitions_up_to(6) {
                assert_eq!(
                    is_horizontal_strip(&outer, &inner),
                    horizontal_strip_by_columns(&outer, &inner),
                    "outer={} inner={}",
                    outer,
                    inner
                );
            }
        }
    }

    #[test]
    fn invalid_partitions_rejected() {
        assert!(Partition::from_parts(vec![1, 2]).is_err());
        assert!(Partition::from_parts(vec![2, 0]).is_err());
        assert!(Composition::from_parts(vec![1, 2]).is_ok());
        assert!(Composition::from_parts(vec![0]).is_err());
    }

    #[test]
    fn parse_and_display_round_trip() {
        for text in ["[]", "[1]", "[2,1]", "[5,3,3,1]"] {
            let p = Partition::parse(text).unwrap();
            assert_eq!(p.to_string(), text);
        }
        assert!(Partition::parse("[1,2]").is_err());
        assert!(Partition::parse("2,1").is_err());
        assert_eq!(Composition::parse("[1,2]").unwrap(), Composition::of(&[1, 2]));
    }

    #[test]
    fn canonical_order_is_size_then_reverse_lex() {
        let expected = [
            Partition::empty(),
            Partition::of(&[1]),
            Partition::of(&[1, 1]),
            Partition::of(&[2]),
            Partition::of(&[1, 1, 1]),
            Partition::of(&[2, 1]),
            Partition::of(&[3]),
        ];
        let mut sorted = expected.to_vec();
        sorted.reverse();
        sorted.sort();
        assert_eq!(sorted, expected);
    }

    #[test]
    fn partition_counts() {
        let expected = [1usize, 1, 2, 3, 5, 7, 11, 15, 22];
        for (n, &count) in expected.iter().enumerate() {
            assert_eq!(partitions_of(n).len(), count);
        }
    }

    #[test]
    fn composition_counts() {
        assert_eq!(compositions_of(0).len(), 1);
        for n in 1..=6 {
            assert_eq!(compositions_of(n).len(), 1 << (n - 1));
        }
    }

    #[test]
    fn padding() {
        assert_eq!(
            Partition::of(&[2, 1]).padded(7).unwrap(),
            Partition::of(&[4, 2, 1])
        );
        assert!(Partition::of(&[3]).padded(5).is_err());
        // a zero head degenerates to the empty partition
        assert_eq!(Partition::empty().padded(0).unwrap(), Partition::empty());
        assert!(Partition::of(&[1]).padded(1).is_err());
    }
}
