//! Backtracking enumeration of column-strict fillings and Kostka numbers.

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tableau::skew::{SkewShape, SkewTableau};
use crate::word::LatticeCounter;

/// Options for [`enumerate_fillings`]. Letters run from 1 to `max_letter`;
/// `exact` pins the full content, `bound` caps it componentwise, and
/// `lattice` requires the reading word (appended to the carried-in counts)
/// to stay lattice.
pub(crate) struct FillConstraints<'a> {
    pub max_letter: u32,
    pub exact: Option<&'a [u32]>,
    pub bound: Option<&'a [u32]>,
    pub lattice: Option<LatticeCounter>,
}

/// All column-strict fillings of `shape` subject to the constraints, filled
/// in reading order so lattice violations prune early.
pub(crate) fn enumerate_fillings(
    shape: &SkewShape,
    constraints: FillConstraints<'_>,
) -> Vec<SkewTableau> {
    let cells = shape.cells_reading_order();
    if let Some(exact) = constraints.exact {
        let total: usize = exact.iter().map(|&c| c as usize).sum();
        if total != cells.len() {
            return Vec::new();
        }
    }
    let outer = shape.outer();
    let inner = shape.inner();
    let nrows = outer.len();
    let mut grid: Vec<Vec<u32>> = (1..=nrows)
        .map(|row| vec![0; outer.part(row) as usize])
        .collect();
    let mut remaining: Vec<u32> = match constraints.exact {
        Some(exact) => exact.to_vec(),
        None => Vec::new(),
    };
    let mut used: Vec<u32> = vec![0; constraints.max_letter as usize];
    let mut lattice = constraints.lattice;
    let mut out = Vec::new();

    struct Ctx<'b> {
        cells: Vec<(usize, usize)>,
        inner_parts: Vec<u32>,
        max_letter: u32,
        exact: bool,
        bound: Option<&'b [u32]>,
    }
    let ctx = Ctx {
        cells,
        inner_parts: (1..=nrows).map(|row| inner.part(row)).collect(),
        max_letter: constraints.max_letter,
        exact: constraints.exact.is_some(),
        bound: constraints.bound,
    };

    fn live(ctx: &Ctx, grid: &[Vec<u32>], row: usize, col: usize) -> Option<u32> {
        if row == 0 || row > grid.len() || col == 0 {
            return None;
        }
        let lo = ctx.inner_parts[row - 1] as usize;
        let r = &grid[row - 1];
        if col <= lo || col > r.len() {
            None
        } else {
            Some(r[col - 1])
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn rec(
        ctx: &Ctx,
        idx: usize,
        grid: &mut Vec<Vec<u32>>,
        remaining: &mut Vec<u32>,
        used: &mut Vec<u32>,
        lattice: &mut Option<LatticeCounter>,
        out: &mut Vec<SkewTableau>,
    ) {
        if idx == ctx.cells.len() {
            let rows: Vec<Vec<u32>> = grid
                .iter()
                .enumerate()
                .map(|(i, full)| full[ctx.inner_parts[i] as usize..].to_vec())
                .collect();
            out.push(SkewTableau::from_raw(ctx.inner_parts.clone(), rows));
            return;
        }
        let (row, col) = ctx.cells[idx];
        // reading order fills the right neighbour and the cell below first
        let hi = match live(ctx, grid, row, col + 1) {
            Some(v) => v,
            None => ctx.max_letter,
        };
        let lo = match live(ctx, grid, row - 1, col) {
            Some(v) => v + 1,
            None => 1,
        };
        for value in lo..=hi {
            let vi = value as usize - 1;
            if ctx.exact && remaining[vi] == 0 {
                continue;
            }
            if let Some(bound) = ctx.bound {
                if used[vi] + 1 > bound.get(vi).copied().unwrap_or(0) {
                    continue;
                }
            }
            if let Some(counter) = lattice.as_ref() {
                if !counter.can_push(value) {
                    continue;
                }
            }
            grid[row - 1][col - 1] = value;
            if ctx.exact {
                remaining[vi] -= 1;
            }
            used[vi] += 1;
            if let Some(counter) = lattice.as_mut() {
                counter.push(value);
            }
            rec(ctx, idx + 1, grid, remaining, used, lattice, out);
            if let Some(counter) = lattice.as_mut() {
                counter.pop(value);
            }
            used[vi] -= 1;
            if ctx.exact {
                remaining[vi] += 1;
            }
            grid[row - 1][col - 1] = 0;
        }
    }

    rec(
        &ctx,
        0,
        &mut grid,
        &mut remaining,
        &mut used,
        &mut lattice,
        &mut out,
    );
    out
}

/// All column-strict fillings of `shape` with letters at most `max_letter`
/// and no constraint on the content.
pub fn enumerate_cst_bounded(shape: &SkewShape, max_letter: u32) -> Vec<SkewTableau> {
    enumerate_fillings(
        shape,
        FillConstraints {
            max_letter,
            exact: None,
            bound: None,
            lattice: None,
        },
    )
}

/// All column-strict fillings of `shape` with letter i used `content[i-1]`
/// times.
pub fn enumerate_cst(shape: &SkewShape, content: &[u32]) -> Vec<SkewTableau> {
    enumerate_fillings(
        shape,
        FillConstraints {
            max_letter: content.len() as u32,
            exact: Some(content),
            bound: None,
            lattice: None,
        },
    )
}

/// Kostka number: column-strict tableaux of straight shape `lambda` and
/// content `mu`.
pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<u64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.to_string(),
            left_size: lambda.size(),
            right: mu.to_string(),
            right_size: mu.size(),
        });
    }
    Ok(kostka_unchecked(lambda, mu.parts()))
}

/// Kostka count for a content given as a composition; sizes assumed equal.
pub(crate) fn kostka_unchecked(lambda: &Partition, content: &[u32]) -> u64 {
    enumerate_cst(&SkewShape::straight(lambda.clone()), content).len() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    #[test]
    fn cst_examples() {
        let shape = SkewShape::straight(Partition::of(&[2, 1]));
        assert_eq!(enumerate_cst(&shape, &[1, 1, 1]).len(), 2);

        // superstandard is the unique filling of content = shape
        let lam = Partition::of(&[3, 2, 1]);
        let fillings = enumerate_cst(&SkewShape::straight(lam.clone()), &[3, 2, 1]);
        assert_eq!(fillings.len(), 1);
        assert_eq!(fillings[0], SkewTableau::superstandard(&lam));

        // column strictness kills two equal letters in a column
        let col = SkewShape::straight(Partition::of(&[1, 1]));
        assert_eq!(enumerate_cst(&col, &[2]).len(), 0);
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(
            kostka(&Partition::of(&[2, 1]), &Partition::of(&[1, 1, 1])).unwrap(),
            2
        );
        for lam in partitions_of(5) {
            assert_eq!(kostka(&lam, &lam).unwrap(), 1);
            assert_eq!(kostka(&Partition::of(&[5]), &lam).unwrap(), 1);
        }
        assert!(kostka(&Partition::of(&[2]), &Partition::of(&[1])).is_err());
    }

    #[test]
    fn kostka_vanishes_unless_dominated() {
        // K_{(1,1,1),(2,1)} = 0
        assert_eq!(
            kostka(&Partition::of(&[1, 1, 1]), &Partition::of(&[2, 1])).unwrap(),
            0
        );
    }
}
