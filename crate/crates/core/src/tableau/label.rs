//! Cell labels of multiset-valued tableaux: at most one barred letter plus a
//! multiset of unbarred letters.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::multiset::{reverse_lex_cmp, Letter, Multiset};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CellLabel {
    barred: Option<u32>,
    unbarred: Multiset,
}

impl CellLabel {
    pub fn new(barred: Option<u32>, unbarred: Multiset) -> Result<Self> {
        if barred == Some(0) {
            return Err(Error::InvalidPartition("barred letter must be positive".into()));
        }
        if barred.is_none() && unbarred.is_empty() {
            return Err(Error::InvalidPartition("cells are non-empty".into()));
        }
        Ok(CellLabel { barred, unbarred })
    }

    /// Label with a single barred letter.
    pub fn barred_only(j: u32) -> Self {
        CellLabel::new(Some(j), Multiset::empty()).expect("non-empty")
    }

    /// Label with unbarred letters only.
    pub fn unbarred_only(letters: &[u32]) -> Self {
        CellLabel::new(None, Multiset::from_letters(letters)).expect("non-empty")
    }

    /// Label {j~, letters...}.
    pub fn with_bar(j: u32, letters: &[u32]) -> Self {
        CellLabel::new(Some(j), Multiset::from_letters(letters)).expect("non-empty")
    }

    pub fn barred(&self) -> Option<u32> {
        self.barred
    }

    pub fn unbarred(&self) -> &Multiset {
        &self.unbarred
    }

    /// Total number of letters, barred included.
    pub fn total_size(&self) -> usize {
        self.unbarred.size() + usize::from(self.barred.is_some())
    }

    /// All letters in decreasing order (the barred letter, if any, is last).
    pub fn letters_desc(&self) -> impl Iterator<Item = Letter> + '_ {
        self.unbarred
            .letters_desc()
            .chain(self.barred.map(Letter::Barred))
    }
}

impl PartialOrd for CellLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CellLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        reverse_lex_cmp(self.letters_desc(), other.letters_desc())
    }
}

impl fmt::Display for CellLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        if let Some(j) = self.barred {
            write!(f, "{}~", j)?;
        }
        for (l, c) in self.unbarred.letters() {
            for _ in 0..c {
                write!(f, "{}", l)?;
            }
        }
        write!(f, "]")
    }
}

/// Strict total order on labels (reverse lex); exposed for tests and callers
/// who want the comparison as a named operation.
pub fn reverse_lex_less(a: &CellLabel, b: &CellLabel) -> bool {
    a < b
}

/// Restrictions on how the content may be grouped into cell labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FillProfile {
    /// Unbarred part of each cell is an arbitrary multiset.
    Multiset,
    /// Unbarred part of each cell has no repeated letter.
    Set,
    /// Set cells, and no label of total size 1 in the first row.
    SetNoSingletonRow1,
    /// At most one unbarred letter (and at most one barred) per cell.
    Pair,
}

impl FillProfile {
    /// Is the label allowed anywhere in the tableau?
    pub fn admits_label(&self, label: &CellLabel) -> bool {
        match self {
            FillProfile::Multiset => true,
            FillProfile::Set | FillProfile::SetNoSingletonRow1 => label.unbarred().is_set(),
            FillProfile::Pair => label.unbarred().size() <= 1,
        }
    }

    /// Is the label allowed in the first row? Cells whose letters are all
    /// barred are never allowed there.
    pub fn admits_in_row1(&self, label: &CellLabel) -> bool {
        if label.unbarred().is_empty() {
            return false;
        }
        match self {
            FillProfile::SetNoSingletonRow1 => label.total_size() >= 2,
            _ => true,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn label_order_examples() {
        // barred letters precede unbarred ones
        assert!(CellLabel::barred_only(1) < CellLabel::unbarred_only(&[1]));
        // {2} < {1,2} (shorter suffix)
        assert!(CellLabel::unbarred_only(&[2]) < CellLabel::unbarred_only(&[1, 2]));
        // {1~} < {2~,1}: largest letters 1~ vs 1
        assert!(CellLabel::barred_only(1) < CellLabel::with_bar(2, &[1]));
        // equal labels are not less
        assert!(!reverse_lex_less(
            &CellLabel::with_bar(2, &[1]),
            &CellLabel::with_bar(2, &[1])
        ));
    }

    #[test]
    fn empty_label_rejected() {
        assert!(CellLabel::new(None, Multiset::empty()).is_err());
    }

    #[test]
    fn profiles() {
        let multi = CellLabel::with_bar(2, &[1, 1]);
        let set = CellLabel::with_bar(2, &[1, 2]);
        let pair = CellLabel::with_bar(2, &[1]);
        let single = CellLabel::unbarred_only(&[3]);
        let bar = CellLabel::barred_only(1);

        assert!(FillProfile::Multiset.admits_label(&multi));
        assert!(!FillProfile::Set.admits_label(&multi));
        assert!(FillProfile::Set.admits_label(&set));
        assert!(!FillProfile::Pair.admits_label(&set));
        assert!(FillProfile::Pair.admits_label(&pair));

        assert!(!FillProfile::Multiset.admits_in_row1(&bar));
        assert!(FillProfile::Set.admits_in_row1(&single));
        assert!(!FillProfile::SetNoSingletonRow1.admits_in_row1(&single));
        assert!(FillProfile::SetNoSingletonRow1.admits_in_row1(&pair));
    }
}
