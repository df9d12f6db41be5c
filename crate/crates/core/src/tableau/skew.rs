//! Integer-filled (skew) column-strict tableaux and jeu de taquin.
//!
//! French convention throughout: row 1 is the bottom row and columns strictly
//! increase upward. Reading words scan bottom row to top row, right to left
//! within each row.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::word::Word;

/// A skew shape `outer/inner` with `inner` contained in `outer`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidPartition(format!(
                "inner {} not contained in outer {}",
                inner, outer
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn num_cells(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Live cells in reading order: bottom row to top row, right to left.
    pub fn cells_reading_order(&self) -> Vec<(usize, usize)> {
        let mut cells = Vec::with_capacity(self.num_cells());
        for row in 1..=self.outer.len() {
            let lo = self.inner.part(row) as usize;
            let hi = self.outer.part(row) as usize;
            for col in (lo + 1..=hi).rev() {
                cells.push((row, col));
            }
        }
        cells
    }
}

/// A column-strict filling of a skew shape by positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewTableau {
    inner: Vec<u32>,     // padded with zeros to rows.len()
    rows: Vec<Vec<u32>>, // live entries of French row i+1
}

impl SkewTableau {
    /// Build from a shape and its live row entries (bottom row first); checks
    /// row lengths and column-strictness.
    pub fn new(shape: &SkewShape, rows: Vec<Vec<u32>>) -> Result<Self> {
        let outer = shape.outer();
        let inner = shape.inner();
        if rows.len() != outer.len() {
            return Err(Error::InvalidPartition(format!(
                "expected {} rows, got {}",
                outer.len(),
                rows.len()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            let expected = (outer.part(i + 1) - inner.part(i + 1)) as usize;
            if row.len() != expected {
                return Err(Error::InvalidPartition(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    expected
                )));
            }
        }
        let t = SkewTableau {
            inner: (1..=outer.len()).map(|i| inner.part(i)).collect(),
            rows,
        };
        if !t.is_column_strict() {
            return Err(Error::InvalidPartition(
                "filling is not column strict".into(),
            ));
        }
        Ok(t)
    }

    /// The straight-shape tableau with every row-i cell equal to i.
    pub fn superstandard(shape: &Partition) -> SkewTableau {
        SkewTableau {
            inner: vec![0; shape.len()],
            rows: shape
                .parts()
                .iter()
                .enumerate()
                .map(|(i, &len)| vec![i as u32 + 1; len as usize])
                .collect(),
        }
    }

    pub(crate) fn from_raw(inner: Vec<u32>, rows: Vec<Vec<u32>>) -> SkewTableau {
        SkewTableau { inner, rows }
    }

    pub fn outer(&self) -> Partition {
        let parts: Vec<u32> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, row)| self.inner[i] + row.len() as u32)
            .take_while(|&len| len > 0)
            .collect();
        Partition::from_parts(parts).expect("outer shape is a partition")
    }

    pub fn inner_shape(&self) -> Partition {
        let parts: Vec<u32> = self.inner.iter().copied().take_while(|&p| p > 0).collect();
        Partition::from_parts(parts).expect("inner shape is a partition")
    }

    pub fn shape(&self) -> SkewShape {
        SkewShape::new(self.outer(), self.inner_shape()).expect("consistent shape")
    }

    pub fn num_cells(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_straight(&self) -> bool {
        self.inner.iter().all(|&p| p == 0)
    }

    /// Entry at (row, col), 1-indexed, if the cell is live.
    pub fn entry(&self, row: usize, col: usize) -> Option<u32> {
        if row == 0 || row > self.rows.len() || col == 0 {
            return None;
        }
        let lo = self.inner[row - 1] as usize;
        let live = &self.rows[row - 1];
        if col <= lo || col > lo + live.len() {
            None
        } else {
            Some(live[col - lo - 1])
        }
    }

    fn is_column_strict(&self) -> bool {
        for row in 1..=self.rows.len() {
            let lo = self.inner[row - 1] as usize;
            let live = &self.rows[row - 1];
            for k in 1..live.len() {
                if live[k - 1] > live[k] {
                    return false;
                }
            }
            if row > 1 {
                for (k, &value) in live.iter().enumerate() {
                    let col = lo + 1 + k;
                    if let Some(below) = self.entry(row - 1, col) {
                        if below >= value {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Bottom row to top row, right to left within rows.
    pub fn reading_word(&self) -> Word {
        let mut word = Vec::with_capacity(self.num_cells());
        for row in &self.rows {
            word.extend(row.iter().rev().copied());
        }
        word
    }

    /// Letter counts, index i holds the number of (i+1)'s.
    pub fn content(&self) -> Vec<u32> {
        let max = self
            .rows
            .iter()
            .flat_map(|r| r.iter())
            .copied()
            .max()
            .unwrap_or(0) as usize;
        let mut counts = vec![0u32; max];
        for row in &self.rows {
            for &v in row {
                counts[v as usize - 1] += 1;
            }
        }
        counts
    }

    /// Jeu de taquin rectification to straight shape; inner corners are
    /// slid in decreasing row, then decreasing column order.
    pub fn rectify(&self) -> SkewTableau {
        self.rectify_by(|corners| corners.len() - 1)
    }

    /// Rectification with a caller-chosen corner order; used to check that
    /// the result does not depend on the slide order.
    pub fn rectify_by(&self, pick: impl Fn(&[(usize, usize)]) -> usize) -> SkewTableau {
        let mut grid = Grid::from_tableau(self);
        loop {
            let corners = grid.inner_corners();
            if corners.is_empty() {
                break;
            }
            let corner = corners[pick(&corners)];
            grid.slide(corner);
        }
        grid.into_tableau()
    }
}

impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in (0..self.rows.len()).rev() {
            for _ in 0..self.inner[row] {
                write!(f, " . ")?;
            }
            for &v in &self.rows[row] {
                write!(f, "{:2} ", v)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Mutable grid used while sliding; rows indexed from the bottom.
struct Grid {
    inner: Vec<u32>,
    outer: Vec<u32>,
    cells: Vec<Vec<u32>>, // full rows, entries under inner are unused
}

impl Grid {
    fn from_tableau(t: &SkewTableau) -> Grid {
        let outer: Vec<u32> = t
            .rows
            .iter()
            .enumerate()
            .map(|(i, row)| t.inner[i] + row.len() as u32)
            .collect();
        let cells = t
            .rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut full = vec![0u32; t.inner[i] as usize];
                full.extend_from_slice(row);
                full
            })
            .collect();
        Grid {
            inner: t.inner.clone(),
            outer,
            cells,
        }
    }

    fn into_tableau(self) -> SkewTableau {
        let Grid {
            inner,
            outer,
            cells,
        } = self;
        let rows: Vec<Vec<u32>> = cells
            .into_iter()
            .enumerate()
            .filter(|(i, _)| outer[*i] > 0)
            .map(|(i, full)| full[inner[i] as usize..outer[i] as usize].to_vec())
            .collect();
        let inner = inner[..rows.len()].to_vec();
        SkewTableau::from_raw(inner, rows)
    }

    /// Cells (row, col) of the inner shape with no inner cell above or to the
    /// right, 0-indexed rows, col = inner[row] - 1.
    fn inner_corners(&self) -> Vec<(usize, usize)> {
        let mut corners = Vec::new();
        for row in 0..self.inner.len() {
            if self.inner[row] == 0 {
                continue;
            }
            let above = if row + 1 < self.inner.len() {
                self.inner[row + 1]
            } else {
                0
            };
            if above < self.inner[row] {
                corners.push((row, self.inner[row] as usize - 1));
            }
        }
        corners
    }

    fn live(&self, row: usize, col: usize) -> bool {
        row < self.outer.len()
            && (col as u32) < self.outer[row]
            && (col as u32) >= self.inner[row]
    }

    /// One slide starting at the given inner corner: the hole moves by the
    /// smaller of its up/right neighbours (up on ties) until it reaches an
    /// outer corner, which is then removed.
    fn slide(&mut self, (mut row, mut col): (usize, usize)) {
        self.inner[row] -= 1;
        loop {
            let up = if self.live(row + 1, col) {
                Some(self.cells[row + 1][col])
            } else {
                None
            };
            let right = if self.live(row, col + 1) {
                Some(self.cells[row][col + 1])
            } else {
                None
            };
            match (up, right) {
                (None, None) => {
                    self.outer[row] -= 1;
                    return;
                }
                (Some(u), Some(r)) if u <= r => {
                    self.cells[row][col] = u;
                    row += 1;
                }
                (Some(u), None) => {
                    self.cells[row][col] = u;
                    row += 1;
                }
                (_, Some(r)) => {
                    self.cells[row][col] = r;
                    col += 1;
                }
            }
        }
    }
}
