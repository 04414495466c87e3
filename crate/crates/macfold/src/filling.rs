//! Fillings of Young diagrams by permutations, and precomputed per-shape
//! geometry for evaluating the shape statistics over many words.
//!
//! Reading order places the word row by row starting from the top (shortest)
//! row, left to right within a row, ending at the bottom (longest) row.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{CellCoord, Partition};
use crate::perm::Permutation;

/// A partition shape together with a permutation assigned in reading order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShapedFilling {
    shape: Partition,
    perm: Permutation,
}

impl ShapedFilling {
    pub fn new(shape: Partition, perm: Permutation) -> Result<Self> {
        if shape.n() != perm.n() {
            return Err(Error::SizeMismatch {
                shape: shape.to_string(),
                shape_n: shape.n(),
                word_n: perm.n(),
            });
        }
        Ok(Self { shape, perm })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn n(&self) -> usize {
        self.perm.n()
    }

    /// Cell holding the position-th reading letter, 1-based.
    pub fn cell_of(&self, position: usize) -> Result<CellCoord> {
        let n = self.n();
        if position < 1 || position > n {
            return Err(Error::PositionOutOfRange { position, n });
        }
        let mut remaining = position;
        for row in (1..=self.shape.rows()).rev() {
            let len = self.shape.row_len(row);
            if remaining <= len {
                return Ok(CellCoord::new(row, remaining));
            }
            remaining -= len;
        }
        unreachable!("position within n always lands in a row")
    }

    /// Reading position of a cell, 1-based; inverse of `cell_of`.
    pub fn position_of(&self, cell: CellCoord) -> Result<usize> {
        if !self.shape.contains(cell) {
            return Err(Error::CellOutsideShape {
                row: cell.row,
                col: cell.col,
                shape: self.shape.to_string(),
            });
        }
        let above: usize = (cell.row + 1..=self.shape.rows())
            .map(|r| self.shape.row_len(r))
            .sum();
        Ok(above + cell.col)
    }

    pub fn entry(&self, cell: CellCoord) -> Result<u8> {
        let pos = self.position_of(cell)?;
        Ok(self.perm.letters()[pos - 1])
    }

    pub fn cell_of_value(&self, value: u8) -> Result<CellCoord> {
        let pos = self.perm.position_of(value)?;
        self.cell_of(pos)
    }

    /// Rows of entries from the top row down, as drawn.
    pub fn rows_top_down(&self) -> Vec<Vec<u8>> {
        let mut rows = Vec::with_capacity(self.shape.rows());
        let letters = self.perm.letters();
        let mut at = 0usize;
        for row in (1..=self.shape.rows()).rev() {
            let len = self.shape.row_len(row);
            rows.push(letters[at..at + len].to_vec());
            at += len;
        }
        rows
    }
}

impl fmt::Display for ShapedFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on ({})", self.perm, self.shape)
    }
}

/// Reading-order geometry of one shape, precomputed so that the shape
/// statistics of a word cost one pass over the qualifying cell pairs.
#[derive(Clone)]
pub struct ShapeGeometry {
    n: usize,
    cells: Vec<CellCoord>,
    below: Vec<Option<usize>>,
    leg_plus_one: Vec<usize>,
    arm: Vec<usize>,
    // 0-based reading positions (i, j), i < j, in the same row or with j one
    // row lower and strictly left of i
    attack_pairs: Vec<(usize, usize)>,
    attack_matrix: Vec<bool>,
}

impl ShapeGeometry {
    pub fn new(shape: &Partition) -> Self {
        let n = shape.n();
        let cells: Vec<CellCoord> = shape.cells().collect();
        let mut position: Vec<Vec<usize>> = vec![Vec::new(); shape.rows() + 1];
        for (row, slots) in position.iter_mut().enumerate().skip(1) {
            *slots = vec![usize::MAX; shape.row_len(row) + 1];
        }
        for (p, cell) in cells.iter().enumerate() {
            position[cell.row][cell.col] = p;
        }
        let below = cells
            .iter()
            .map(|cell| (cell.row > 1).then(|| position[cell.row - 1][cell.col]))
            .collect();
        let leg_plus_one = cells
            .iter()
            .map(|&cell| shape.leg(cell).expect("cell of shape") + 1)
            .collect();
        let arm = cells
            .iter()
            .map(|&cell| shape.arm(cell).expect("cell of shape"))
            .collect();
        let mut attack_pairs = Vec::new();
        let mut attack_matrix = vec![false; n * n];
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (cells[i], cells[j]);
                let attack =
                    a.row == b.row || (b.row + 1 == a.row && b.col < a.col);
                if attack {
                    attack_pairs.push((i, j));
                    attack_matrix[i * n + j] = true;
                    attack_matrix[j * n + i] = true;
                }
            }
        }
        Self {
            n,
            cells,
            below,
            leg_plus_one,
            arm,
            attack_pairs,
            attack_matrix,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cell(&self, position0: usize) -> CellCoord {
        self.cells[position0]
    }

    /// Whether two reading positions form a qualifying inversion-geometry pair.
    pub fn attacks(&self, p: usize, q: usize) -> bool {
        self.attack_matrix[p * self.n + q]
    }

    /// Whether one of the two reading positions sits directly below the other.
    pub fn vertically_adjacent(&self, p: usize, q: usize) -> bool {
        self.below[p] == Some(q) || self.below[q] == Some(p)
    }

    /// 0-based reading positions of the descent cells of a word.
    pub fn descent_positions(&self, w: &[u8]) -> Vec<usize> {
        debug_assert_eq!(w.len(), self.n);
        (0..self.n)
            .filter(|&p| self.below[p].is_some_and(|q| w[p] > w[q]))
            .collect()
    }

    /// Inversion pairs as value pairs in reading order.
    pub fn inversion_pairs(&self, w: &[u8]) -> Vec<(u8, u8)> {
        self.attack_pairs
            .iter()
            .filter(|&&(i, j)| w[i] > w[j])
            .map(|&(i, j)| (w[i], w[j]))
            .collect()
    }

    pub fn maj(&self, w: &[u8]) -> usize {
        debug_assert_eq!(w.len(), self.n);
        let mut maj = 0;
        for p in 0..self.n {
            if let Some(q) = self.below[p] {
                if w[p] > w[q] {
                    maj += self.leg_plus_one[p];
                }
            }
        }
        maj
    }

    pub fn inv(&self, w: &[u8]) -> usize {
        self.stats(w).0
    }

    /// (inv, maj) of a word on this shape.
    pub fn stats(&self, w: &[u8]) -> (usize, usize) {
        debug_assert_eq!(w.len(), self.n);
        let mut pairs = 0usize;
        for &(i, j) in &self.attack_pairs {
            if w[i] > w[j] {
                pairs += 1;
            }
        }
        let mut maj = 0usize;
        let mut arms = 0usize;
        for p in 0..self.n {
            if let Some(q) = self.below[p] {
                if w[p] > w[q] {
                    maj += self.leg_plus_one[p];
                    arms += self.arm[p];
                }
            }
        }
        let inv = pairs
            .checked_sub(arms)
            .expect("inversion pairs always cover descent arms");
        (inv, maj)
    }
}
