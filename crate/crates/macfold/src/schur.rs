//! Schur-side machinery: standard Young tableaux, Schur functions in the
//! fundamental basis, Kostka numbers, and the exact decomposition of a
//! fundamental expansion into Schur functions.
//!
//! The decomposition solves the unitriangular Kostka system along a linear
//! extension of dominance order and then verifies itself by reconstructing
//! the input expansion term by term; the reconstruction mismatch doubles as
//! the symmetry test used by the conjecture scans.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::expansion::{DescentSubset, FundExpansion, SchurExpansion};
use crate::partition::{CellCoord, Partition};
use crate::perm::{factorial, Permutation};
use crate::poly::QtPolynomial;
use crate::stats::inverse_descents;

pub use crate::partition::dominance_leq;

/// A standard Young tableau: rows increase left to right, columns increase
/// bottom to top. `rows[0]` is the bottom (longest) row.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<u8>>,
}

impl StandardTableau {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Entry rows from the bottom row up.
    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn entry(&self, cell: CellCoord) -> Result<u8> {
        self.rows
            .get(cell.row - 1)
            .and_then(|row| row.get(cell.col - 1))
            .copied()
            .ok_or_else(|| Error::CellOutsideShape {
                row: cell.row,
                col: cell.col,
                shape: self.shape.to_string(),
            })
    }

    /// The word reading the rows from the top row down.
    pub fn reading_word(&self) -> Permutation {
        let letters: Vec<u8> = self.rows.iter().rev().flatten().copied().collect();
        Permutation::new(letters).expect("tableau entries are 1..n")
    }
}

/// All standard Young tableaux of a shape.
pub fn enumerate_syt(shape: &Partition) -> Vec<StandardTableau> {
    let n = shape.n();
    let parts: Vec<usize> = shape.parts().iter().map(|&p| p as usize).collect();
    let mut filled = vec![0usize; parts.len()];
    let mut rows: Vec<Vec<u8>> = parts.iter().map(|&len| Vec::with_capacity(len)).collect();
    let mut out = Vec::new();

    fn rec(
        value: u8,
        n: usize,
        parts: &[usize],
        filled: &mut [usize],
        rows: &mut Vec<Vec<u8>>,
        shape: &Partition,
        out: &mut Vec<StandardTableau>,
    ) {
        if value as usize > n {
            out.push(StandardTableau {
                shape: shape.clone(),
                rows: rows.clone(),
            });
            return;
        }
        for r in 0..parts.len() {
            let col = filled[r] + 1;
            let row_ok = col <= parts[r];
            let col_ok = r == 0 || filled[r - 1] >= col;
            if row_ok && col_ok {
                filled[r] += 1;
                rows[r].push(value);
                rec(value + 1, n, parts, filled, rows, shape, out);
                rows[r].pop();
                filled[r] -= 1;
            }
        }
    }

    rec(1, n, &parts, &mut filled, &mut rows, shape, &mut out);
    out
}

/// Number of standard Young tableaux by the hook length formula.
pub fn syt_count(shape: &Partition) -> u64 {
    let n = shape.n();
    let mut numerator = factorial(n) as u128;
    for cell in shape.cells() {
        let hook = (shape.arm(cell).unwrap() + shape.leg(cell).unwrap() + 1) as u128;
        numerator /= hook;
    }
    numerator as u64
}

/// The Schur function as a fundamental expansion: one F-term per tableau
/// reading word.
pub fn schur_fund_expansion(shape: &Partition) -> FundExpansion {
    let mut out = FundExpansion::new(shape.n());
    for tableau in enumerate_syt(shape) {
        let d = inverse_descents(&tableau.reading_word());
        out.add_monomial(d, 0, 0, 1);
    }
    out
}

/// Coefficient of the monomial x_1^{mu_1} x_2^{mu_2} ... in F_D: 1 exactly
/// when every element of D is a prefix sum of mu.
pub fn fund_monomial_coeff(d: &DescentSubset, mu: &Partition) -> Result<i64> {
    if d.n() != mu.n() {
        return Err(Error::UnequalSums {
            left: format!("[{}]", d.n()),
            right: mu.to_string(),
        });
    }
    Ok(if d.bits() & !prefix_sum_bits(mu) == 0 { 1 } else { 0 })
}

// Bit i-1 set when i is a proper prefix sum of mu.
fn prefix_sum_bits(mu: &Partition) -> u64 {
    let mut bits = 0u64;
    for sum in mu.prefix_sums() {
        if sum < mu.n() {
            bits |= 1 << (sum - 1);
        }
    }
    bits
}

/// Kostka number: semistandard Young tableaux of shape lambda and content mu,
/// counted as chains of horizontal strips.
pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<u64> {
    if lambda.n() != mu.n() {
        return Err(Error::UnequalSums {
            left: lambda.to_string(),
            right: mu.to_string(),
        });
    }
    let lambda_parts: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let content: Vec<usize> = mu.parts().iter().map(|&p| p as usize).collect();
    let mut memo: HashMap<(Vec<usize>, usize), u64> = HashMap::new();
    let start = vec![0usize; lambda_parts.len()];
    Ok(count_strip_chains(&start, 0, &lambda_parts, &content, &mut memo))
}

// Chains 0 = nu^(0) subset ... subset nu^(k) = lambda where step j adds a
// horizontal strip of content[j] cells.
fn count_strip_chains(
    current: &[usize],
    step: usize,
    lambda: &[usize],
    content: &[usize],
    memo: &mut HashMap<(Vec<usize>, usize), u64>,
) -> u64 {
    if step == content.len() {
        return if current == lambda { 1 } else { 0 };
    }
    let key = (current.to_vec(), step);
    if let Some(&hit) = memo.get(&key) {
        return hit;
    }
    let mut total = 0u64;
    let mut shape = current.to_vec();
    add_strip(
        0,
        content[step],
        &mut shape,
        current,
        lambda,
        step,
        content,
        memo,
        &mut total,
    );
    memo.insert(key, total);
    total
}

// Extend `shape` row by row with `remaining` cells so that the result stays
// a partition within lambda and no two added cells share a column (the row
// above in `base` bounds how far this row may extend).
#[allow(clippy::too_many_arguments)]
fn add_strip(
    row: usize,
    remaining: usize,
    shape: &mut Vec<usize>,
    base: &[usize],
    lambda: &[usize],
    step: usize,
    content: &[usize],
    memo: &mut HashMap<(Vec<usize>, usize), u64>,
    total: &mut u64,
) {
    if row == shape.len() {
        if remaining == 0 {
            *total += count_strip_chains(shape, step + 1, lambda, content, memo);
        }
        return;
    }
    let mut cap = lambda[row];
    if row > 0 {
        // partition condition against the already-placed row below, and the
        // strip condition: this row may not extend past the old row below
        cap = cap.min(shape[row - 1]).min(base[row - 1]);
    }
    let strip_cap = cap;
    let max_add = strip_cap.saturating_sub(shape[row]).min(remaining);
    let old = shape[row];
    for add in 0..=max_add {
        shape[row] = old + add;
        add_strip(
            row + 1,
            remaining - add,
            shape,
            base,
            lambda,
            step,
            content,
            memo,
            total,
        );
    }
    shape[row] = old;
}

/// Precomputed Schur data for one fixed n, reusable across decompositions.
pub struct SchurContext {
    n: usize,
    partitions: Vec<Partition>,
    prefix_bits: Vec<u64>,
    kostka: Vec<Vec<u64>>,
    schur_f: Vec<FundExpansion>,
}

impl SchurContext {
    pub fn new(n: usize) -> Self {
        let partitions = Partition::all_of(n);
        let prefix_bits = partitions.iter().map(prefix_sum_bits).collect();
        let kostka: Vec<Vec<u64>> = partitions
            .iter()
            .map(|lambda| {
                partitions
                    .iter()
                    .map(|mu| kostka(lambda, mu).expect("equal sums"))
                    .collect()
            })
            .collect();
        let schur_f = partitions.iter().map(schur_fund_expansion).collect();
        Self {
            n,
            partitions,
            prefix_bits,
            kostka,
            schur_f,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Partitions of n in descending lexicographic order, a linear extension
    /// of dominance.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn schur_fund(&self, idx: usize) -> &FundExpansion {
        &self.schur_f[idx]
    }

    /// Decompose a fundamental expansion into Schur functions, verifying the
    /// result by exact reconstruction.
    pub fn decompose(&self, f: &FundExpansion) -> Result<SchurExpansion> {
        assert_eq!(f.n(), self.n, "expansion of mismatched ambient size");

        // monomial coefficients c_mu = sum of coeff(D) over D within the
        // prefix sums of mu
        let monomial: Vec<QtPolynomial> = self
            .prefix_bits
            .iter()
            .map(|&bits| {
                let mut c = QtPolynomial::zero();
                for (d, poly) in f.terms() {
                    if d.bits() & !bits == 0 {
                        c.add_assign(poly);
                    }
                }
                c
            })
            .collect();

        // unitriangular solve from the dominant end: c_mu = sum_lambda
        // a_lambda K_{lambda,mu} with K_{mu,mu} = 1
        let mut coeffs: Vec<QtPolynomial> = Vec::with_capacity(self.partitions.len());
        for (idx, c_mu) in monomial.iter().enumerate() {
            let mut a = c_mu.clone();
            for j in 0..idx {
                let k = self.kostka[j][idx];
                if k != 0 {
                    a.add_scaled(&coeffs[j], -(k as i64));
                }
            }
            coeffs.push(a);
        }

        // verify by reconstruction; equality here is the symmetry test
        let mut rebuilt = FundExpansion::new(self.n);
        for (idx, a) in coeffs.iter().enumerate() {
            if !a.is_zero() {
                rebuilt.add_scaled(&self.schur_f[idx], a);
            }
        }
        if &rebuilt != f {
            return Err(Error::NotSymmetric(first_difference(f, &rebuilt)));
        }

        let mut out = SchurExpansion::new(self.n);
        for (idx, a) in coeffs.into_iter().enumerate() {
            if !a.is_zero() {
                out.add_term(self.partitions[idx].clone(), &a);
            }
        }
        Ok(out)
    }
}

fn first_difference(f: &FundExpansion, g: &FundExpansion) -> String {
    for (d, poly) in f.terms() {
        let other = g.coeff(d);
        if &other != poly {
            return format!("coefficient of F_{d} is {poly}, reconstruction gives {other}");
        }
    }
    for (d, poly) in g.terms() {
        if f.coeff(d).is_zero() {
            return format!("reconstruction has spurious term ({poly}) F_{d}");
        }
    }
    "expansions differ".into()
}

/// One-off decomposition; builds the context for f's ambient size.
pub fn decompose_to_schur(f: &FundExpansion) -> Result<SchurExpansion> {
    SchurContext::new(f.n()).decompose(f)
}
