//! Tableau machinery: integer column-strict tableaux, jeu de taquin,
//! Littlewood-Richardson rules, multiset-valued tableaux, and chained
//! tableau sequences.

pub mod bset;
pub mod cst;
pub mod label;
pub mod lr;
pub mod mct;
pub mod skew;

pub use bset::{enumerate_tableau_sequences, tableau_sequence_counts_grouped, TableauSequence};
pub use cst::{enumerate_cst, enumerate_cst_bounded, kostka};
pub use label::{reverse_lex_less, CellLabel, FillProfile};
pub use lr::{lr_coefficient, multi_lr, LrMethod};
pub use mct::{
    enumerate_multiset_tableaux, enumerate_multiset_tableaux_counts,
    enumerate_multiset_tableaux_with_blocks, MultisetTableau,
};
pub use skew::{SkewShape, SkewTableau};
