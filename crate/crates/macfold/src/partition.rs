//! Partitions and the cell coordinate frame of their Young diagrams.
//!
//! Rows are indexed from the bottom: row 1 is the longest (bottom) row, so a
//! cell's leg counts the cells strictly above it and its arm the cells
//! strictly to its right.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A cell of a Young diagram; row 1 is the bottom row, col 1 the leftmost.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellCoord {
    pub row: usize,
    pub col: usize,
}

impl CellCoord {
    pub fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }
}

impl fmt::Display for CellCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl fmt::Debug for CellCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CellCoord{self}")
    }
}

/// A partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u8>,
}

impl Partition {
    pub fn new(parts: Vec<u8>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        for window in parts.windows(2) {
            if window[0] < window[1] {
                return Err(Error::InvalidPartition(format!(
                    "parts {:?} are not weakly decreasing",
                    parts
                )));
            }
        }
        if parts.last() == Some(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        Ok(Self { parts })
    }

    /// The single-row shape (n).
    pub fn row(n: usize) -> Self {
        Self::new(vec![n as u8]).expect("row shape")
    }

    /// The single-column shape (1^n).
    pub fn column(n: usize) -> Self {
        Self::new(vec![1; n]).expect("column shape")
    }

    pub fn n(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn parts(&self) -> &[u8] {
        &self.parts
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Length of a row, 1-based from the bottom.
    pub fn row_len(&self, row: usize) -> usize {
        self.parts[row - 1] as usize
    }

    /// Second part, or 0 when there is a single row.
    pub fn second_part(&self) -> usize {
        self.parts.get(1).copied().unwrap_or(0) as usize
    }

    /// Number of parts that are >= col, i.e. the height of a column.
    pub fn col_height(&self, col: usize) -> usize {
        self.parts.iter().filter(|&&p| p as usize >= col).count()
    }

    pub fn contains(&self, cell: CellCoord) -> bool {
        cell.row >= 1
            && cell.row <= self.rows()
            && cell.col >= 1
            && cell.col <= self.row_len(cell.row)
    }

    fn check_cell(&self, cell: CellCoord) -> Result<()> {
        if self.contains(cell) {
            Ok(())
        } else {
            Err(Error::CellOutsideShape {
                row: cell.row,
                col: cell.col,
                shape: self.to_string(),
            })
        }
    }

    /// Cells strictly right of the cell in its row.
    pub fn arm(&self, cell: CellCoord) -> Result<usize> {
        self.check_cell(cell)?;
        Ok(self.row_len(cell.row) - cell.col)
    }

    /// Cells strictly above the cell in its column.
    pub fn leg(&self, cell: CellCoord) -> Result<usize> {
        self.check_cell(cell)?;
        Ok(self.col_height(cell.col) - cell.row)
    }

    /// Cells in reading order: top row first, left to right within a row.
    pub fn cells(&self) -> impl Iterator<Item = CellCoord> + '_ {
        (1..=self.rows())
            .rev()
            .flat_map(move |row| (1..=self.row_len(row)).map(move |col| CellCoord { row, col }))
    }

    /// Prefix sums mu_1, mu_1+mu_2, ..., n.
    pub fn prefix_sums(&self) -> Vec<usize> {
        let mut acc = 0usize;
        self.parts
            .iter()
            .map(|&p| {
                acc += p as usize;
                acc
            })
            .collect()
    }

    /// All partitions of n in descending lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn rec(remaining: usize, max: usize, prefix: &mut Vec<u8>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for part in (1..=remaining.min(max)).rev() {
                prefix.push(part as u8);
                rec(remaining - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, n, &mut Vec::new(), &mut out);
        }
        out
    }
}

/// Dominance order: every prefix sum of `mu` is at most that of `nu`.
pub fn dominance_leq(mu: &Partition, nu: &Partition) -> Result<bool> {
    if mu.n() != nu.n() {
        return Err(Error::UnequalSums {
            left: mu.to_string(),
            right: nu.to_string(),
        });
    }
    let a = mu.prefix_sums();
    let b = nu.prefix_sums();
    let total = mu.n();
    for i in 0..a.len().max(b.len()) {
        let x = a.get(i).copied().unwrap_or(total);
        let y = b.get(i).copied().unwrap_or(total);
        if x > y {
            return Ok(false);
        }
    }
    Ok(true)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self
            .parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        f.write_str(&s)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .trim()
            .split(',')
            .map(|p| p.trim().parse::<u8>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::InvalidPartition(e.to_string()))?;
        Self::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u8>::deserialize(deserializer)?;
        Partition::new(parts).map_err(D::Error::custom)
    }
}
