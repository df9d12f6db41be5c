//! Chains of skew tableaux whose layers rectify to prescribed shapes and
//! whose concatenated reading word is lattice.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tableau::cst::{enumerate_fillings, FillConstraints};
use crate::tableau::skew::{SkewShape, SkewTableau};
use crate::word::{LatticeCounter, Word};

/// A sequence (T_0, ..., T_l): T_0 is straight-shape superstandard, each
/// layer's inner shape is the previous layer's outer shape, and the
/// concatenated reading word is lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableauSequence {
    layers: Vec<SkewTableau>,
}

impl TableauSequence {
    pub fn layers(&self) -> &[SkewTableau] {
        &self.layers
    }

    /// Concatenated reading word of all layers.
    pub fn word(&self) -> Word {
        self.layers
            .iter()
            .flat_map(|t| t.reading_word())
            .collect()
    }

    /// Outer shape of the last layer.
    pub fn outer_shape(&self) -> Partition {
        self.layers
            .last()
            .map(SkewTableau::outer)
            .unwrap_or_else(Partition::empty)
    }

    /// Content of the concatenated word, as a partition.
    pub fn content_partition(&self) -> Partition {
        let word = self.word();
        let max = word.iter().copied().max().unwrap_or(0) as usize;
        let mut counts = vec![0u32; max];
        for letter in word {
            counts[letter as usize - 1] += 1;
        }
        Partition::from_parts(counts).expect("lattice word content is a partition")
    }

    /// Straight shapes the layers rectify to.
    pub fn rectified_shapes(&self) -> Vec<Partition> {
        self.layers.iter().map(|t| t.rectify().outer()).collect()
    }
}

/// All sequences for the given rectification shapes with final outer shape
/// `outer` and word content `content`. Errors when the sizes disagree.
pub fn enumerate_tableau_sequences(
    taus: &[Partition],
    outer: &Partition,
    content: &Partition,
) -> Result<Vec<TableauSequence>> {
    let total: usize = taus.iter().map(Partition::size).sum();
    if total != outer.size() {
        return Err(Error::SizeMismatch {
            left: format!("{:?}", taus.iter().map(ToString::to_string).collect::<Vec<_>>()),
            left_size: total,
            right: outer.to_string(),
            right_size: outer.size(),
        });
    }
    if total != content.size() {
        return Err(Error::SizeMismatch {
            left: format!("{:?}", taus.iter().map(ToString::to_string).collect::<Vec<_>>()),
            left_size: total,
            right: content.to_string(),
            right_size: content.size(),
        });
    }
    let mut out = Vec::new();
    search(taus, Some(outer), Some(content), &mut |seq| out.push(seq));
    Ok(out)
}

/// Counts of sequences for the given rectification shapes, grouped by
/// (final outer shape, word content). Used for exhaustive identity sweeps.
pub fn tableau_sequence_counts_grouped(
    taus: &[Partition],
) -> BTreeMap<(Partition, Partition), u64> {
    let mut map = BTreeMap::new();
    search(taus, None, None, &mut |seq| {
        *map.entry((seq.outer_shape(), seq.content_partition()))
            .or_insert(0) += 1;
    });
    map
}

fn search(
    taus: &[Partition],
    outer: Option<&Partition>,
    content: Option<&Partition>,
    emit: &mut impl FnMut(TableauSequence),
) {
    let total: usize = taus.iter().map(Partition::size).sum();
    let first = match taus.first() {
        Some(first) => first,
        None => {
            if outer.is_none_or(Partition::is_empty)
                && content.is_none_or(Partition::is_empty)
            {
                emit(TableauSequence { layers: Vec::new() });
            }
            return;
        }
    };
    if let Some(outer) = outer {
        if !outer.contains(first) {
            return;
        }
    }
    let max_letter = match content {
        Some(content) => content.len() as u32,
        None => total as u32,
    };
    if first.len() as u32 > max_letter {
        return;
    }
    let mut counts = vec![0u32; max_letter as usize];
    for i in 1..=first.len() {
        if let Some(content) = content {
            if first.part(i) > content.part(i) {
                return;
            }
        }
        counts[i - 1] = first.part(i);
    }
    let mut layers = vec![SkewTableau::superstandard(first)];
    rec_layers(
        taus,
        1,
        first.clone(),
        &mut counts,
        &mut layers,
        outer,
        content,
        max_letter,
        emit,
    );
}

#[allow(clippy::too_many_arguments)]
fn rec_layers(
    taus: &[Partition],
    idx: usize,
    zeta: Partition,
    counts: &mut Vec<u32>,
    layers: &mut Vec<SkewTableau>,
    outer: Option<&Partition>,
    content: Option<&Partition>,
    max_letter: u32,
    emit: &mut impl FnMut(TableauSequence),
) {
    if idx == taus.len() {
        let outer_ok = outer.is_none_or(|o| &zeta == o);
        let content_ok = content.is_none_or(|c| {
            (1..=counts.len()).all(|i| counts[i - 1] == c.part(i))
        });
        if outer_ok && content_ok {
            emit(TableauSequence {
                layers: layers.clone(),
            });
        }
        return;
    }
    let size = zeta.size() + taus[idx].size();
    let candidates = if idx + 1 == taus.len() {
        match outer {
            Some(o) => {
                if o.size() == size && o.contains(&zeta) {
                    vec![o.clone()]
                } else {
                    Vec::new()
                }
            }
            None => partitions_between(&zeta, None, size),
        }
    } else {
        partitions_between(&zeta, outer, size)
    };
    let remaining_bound: Option<Vec<u32>> = content.map(|c| {
        (1..=counts.len())
            .map(|i| c.part(i) - counts[i - 1])
            .collect()
    });
    for zeta_next in candidates {
        let shape = SkewShape::new(zeta_next.clone(), zeta.clone()).expect("nested shapes");
        let fillings = enumerate_fillings(
            &shape,
            FillConstraints {
                max_letter,
                exact: None,
                bound: remaining_bound.as_deref(),
                lattice: Some(LatticeCounter::with_counts(counts.clone())),
            },
        );
        for filling in fillings {
            if filling.rectify().outer() != taus[idx] {
                continue;
            }
            let layer_content = filling.content();
            for (i, &c) in layer_content.iter().enumerate() {
                counts[i] += c;
            }
            layers.push(filling);
            rec_layers(
                taus,
                idx + 1,
                zeta_next.clone(),
                counts,
                layers,
                outer,
                content,
                max_letter,
                emit,
            );
            layers.pop();
            for (i, &c) in layer_content.iter().enumerate() {
                counts[i] -= c;
            }
        }
    }
}

/// Partitions of `size` containing `lo` and contained in `hi` (when given).
fn partitions_between(lo: &Partition, hi: Option<&Partition>, size: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    if size < lo.size() {
        return out;
    }
    if size == 0 {
        out.push(Partition::empty());
        return out;
    }
    let mut acc = Vec::new();
    rec_between(lo, hi, 1, u32::MAX, size, &mut acc, &mut out);
    out
}

fn rec_between(
    lo: &Partition,
    hi: Option<&Partition>,
    row: usize,
    prev: u32,
    remaining: usize,
    acc: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        if row > lo.len() {
            out.push(Partition::of(acc));
        }
        return;
    }
    let mut cap = prev.min(remaining as u32);
    if let Some(hi) = hi {
        cap = cap.min(hi.part(row));
    }
    let start = lo.part(row).max(1);
    for v in start..=cap {
        acc.push(v);
        rec_between(lo, hi, row + 1, v, remaining - v as usize, acc, out);
        acc.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts(list: &[&[u32]]) -> Vec<Partition> {
        list.iter().map(|p| Partition::of(p)).collect()
    }

    #[test]
    fn worked_example_counts() {
        let gamma = Partition::of(&[5, 4]);
        let lambda = Partition::of(&[5, 2, 2]);
        let counts: Vec<u64> = [
            parts(&[&[5, 1], &[2], &[1]]),
            parts(&[&[4, 2], &[2], &[1]]),
            parts(&[&[4, 2], &[1, 1], &[1]]),
        ]
        .iter()
        .map(|taus| enumerate_tableau_sequences(taus, &gamma, &lambda).unwrap().len() as u64)
        .collect();
        assert_eq!(counts, vec![1, 4, 1]);
    }

    #[test]
    fn worked_example_unique_sequence() {
        let taus = parts(&[&[5, 1], &[2], &[1]]);
        let seqs = enumerate_tableau_sequences(
            &taus,
            &Partition::of(&[5, 4]),
            &Partition::of(&[5, 2, 2]),
        )
        .unwrap();
        assert_eq!(seqs.len(), 1);
        let seq = &seqs[0];
        assert_eq!(seq.rectified_shapes(), taus);
        assert_eq!(seq.word(), vec![1, 1, 1, 1, 1, 2, 3, 2, 3]);
        assert_eq!(
            seq.layers()[1].reading_word(),
            vec![3, 2],
            "second layer holds the cells 2,3 in row two"
        );
    }

    #[test]
    fn degenerate_single_shape_chain() {
        let tau = Partition::of(&[2, 1]);
        let seqs =
            enumerate_tableau_sequences(std::slice::from_ref(&tau), &tau, &tau).unwrap();
        assert_eq!(seqs.len(), 1);
        let other = enumerate_tableau_sequences(
            std::slice::from_ref(&tau),
            &Partition::of(&[3]),
            &tau,
        )
        .unwrap();
        assert!(other.is_empty());
    }

    #[test]
    fn size_mismatch_is_an_error() {
        let taus = parts(&[&[2], &[1]]);
        assert!(enumerate_tableau_sequences(
            &taus,
            &Partition::of(&[2]),
            &Partition::of(&[2, 1])
        )
        .is_err());
    }

    #[test]
    fn grouped_counts_match_direct_enumeration() {
        let taus = parts(&[&[2, 1], &[2]]);
        let grouped = tableau_sequence_counts_grouped(&taus);
        for ((outer, content), count) in grouped {
            let direct =
                enumerate_tableau_sequences(&taus, &outer, &content).unwrap().len() as u64;
            assert_eq!(direct, count);
        }
    }

    #[test]
    fn partitions_between_bounds() {
        let lo = Partition::of(&[2, 1]);
        let hi = Partition::of(&[4, 3, 1]);
        for p in partitions_between(&lo, Some(&hi), 5) {
            assert!(p.contains(&lo));
            assert!(hi.contains(&p));
            assert_eq!(p.size(), 5);
        }
        assert_eq!(
            partitions_between(&lo, Some(&hi), 5).len(),
            // (4,1),(3,2),(2,2,1),(3,1,1)
            4
        );
    }
}
