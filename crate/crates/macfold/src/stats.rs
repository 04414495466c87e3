//! Permutation statistics: inverse descent sets, de-standardization,
//! super-standard words, and the shape statistics maj and inv.

use std::collections::BTreeMap;
use std::fmt;

use crate::expansion::DescentSubset;
use crate::filling::{ShapeGeometry, ShapedFilling};
use crate::partition::{CellCoord, Partition};
use crate::perm::{for_each_permutation, Permutation};

/// Bit i-1 set when i+1 occurs left of i, for i in 1..n.
pub(crate) fn ides_bits(w: &[u8]) -> u64 {
    let n = w.len();
    let mut pos = [0usize; 65];
    for (p, &x) in w.iter().enumerate() {
        pos[x as usize] = p;
    }
    let mut bits = 0u64;
    for i in 1..n {
        if pos[i + 1] < pos[i] {
            bits |= 1 << (i - 1);
        }
    }
    bits
}

/// The inverse descent set: indices i with i+1 left of i.
pub fn inverse_descents(w: &Permutation) -> DescentSubset {
    DescentSubset::from_bits(w.n(), ides_bits(w.letters()))
}

/// A word with repeats obtained by collapsing the value blocks of a
/// permutation between its inverse descents, plus the composition recording
/// how often each letter occurs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DestandardizedWord {
    letters: Vec<u8>,
    weight: Vec<u8>,
}

impl DestandardizedWord {
    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    /// Occurrence counts of 1, 2, ... as a composition summing to n.
    pub fn weight(&self) -> &[u8] {
        &self.weight
    }
}

impl fmt::Display for DestandardizedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.iter().all(|&x| x <= 9) {
            for &x in &self.letters {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            let s = self
                .letters
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",");
            f.write_str(&s)
        }
    }
}

// Block index of a value: 1 + the number of inverse descents below it.
fn block_of(bits: u64, value: u8) -> u8 {
    1 + (bits & ((1u64 << (value - 1)) - 1)).count_ones() as u8
}

/// Collapse value blocks delimited by the inverse descents to 1, 2, 3, ...
pub fn destandardize(w: &Permutation) -> DestandardizedWord {
    let bits = ides_bits(w.letters());
    let blocks = bits.count_ones() as usize + 1;
    let letters: Vec<u8> = w.letters().iter().map(|&x| block_of(bits, x)).collect();
    let mut weight = vec![0u8; blocks];
    for &b in &letters {
        weight[b as usize - 1] += 1;
    }
    DestandardizedWord { letters, weight }
}

/// Weight of the word when every suffix of its de-standardization has
/// partition weight; `None` otherwise.
pub(crate) fn super_standard_weight(w: &[u8]) -> Option<Vec<u8>> {
    let bits = ides_bits(w);
    let blocks = bits.count_ones() as usize + 1;
    let mut counts = vec![0u8; blocks + 1];
    for &x in w.iter().rev() {
        let b = block_of(bits, x) as usize;
        counts[b] += 1;
        if b >= 2 && counts[b] > counts[b - 1] {
            return None;
        }
    }
    Some(counts[1..].to_vec())
}

/// Test the suffix condition on the de-standardization; returns the weight
/// partition (the type of w) when it holds.
pub fn is_super_standard(w: &Permutation) -> Option<Partition> {
    super_standard_weight(w.letters())
        .map(|parts| Partition::new(parts).expect("suffix condition forces a partition"))
}

/// All super-standard permutations of the given weight, by filtering S_n.
pub fn enumerate_super_standard(lambda: &Partition) -> Vec<Permutation> {
    let n = lambda.n();
    let target = lambda.parts();
    let mut out = Vec::new();
    for_each_permutation(n, |w| {
        if let Some(weight) = super_standard_weight(w) {
            if weight == target {
                out.push(Permutation::from_slice_unchecked(w));
            }
        }
    });
    out
}

/// One sweep of S_n grouping every super-standard permutation by its weight.
pub fn super_standard_by_weight(n: usize) -> BTreeMap<Partition, Vec<Permutation>> {
    let mut out: BTreeMap<Partition, Vec<Permutation>> = BTreeMap::new();
    for_each_permutation(n, |w| {
        if let Some(weight) = super_standard_weight(w) {
            let lambda = Partition::new(weight).expect("super-standard weight");
            out.entry(lambda)
                .or_default()
                .push(Permutation::from_slice_unchecked(w));
        }
    });
    out
}

/// Cells whose entry strictly exceeds the entry directly below.
pub fn mu_descent_cells(f: &ShapedFilling) -> Vec<CellCoord> {
    let geom = ShapeGeometry::new(f.shape());
    geom.descent_positions(f.perm().letters())
        .into_iter()
        .map(|p| geom.cell(p))
        .collect()
}

/// Sum of leg+1 over the descent cells.
pub fn maj_mu(f: &ShapedFilling) -> usize {
    ShapeGeometry::new(f.shape()).maj(f.perm().letters())
}

/// Out-of-order value pairs in the same row, or with the later letter one
/// row lower and strictly left, in reading order.
pub fn mu_inversion_pairs(f: &ShapedFilling) -> Vec<(u8, u8)> {
    ShapeGeometry::new(f.shape()).inversion_pairs(f.perm().letters())
}

/// Number of inversion pairs minus the arms of the descent cells.
pub fn inv_mu(f: &ShapedFilling) -> usize {
    ShapeGeometry::new(f.shape()).inv(f.perm().letters())
}

/// (inv, maj) of a word on a shape.
pub fn stats_mu(f: &ShapedFilling) -> (usize, usize) {
    ShapeGeometry::new(f.shape()).stats(f.perm().letters())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn filling(shape: &str, word: &str) -> ShapedFilling {
        ShapedFilling::new(shape.parse().unwrap(), word.parse().unwrap()).unwrap()
    }

    // independent oracles: classical statistics computed directly
    fn classical_maj(w: &[u8]) -> usize {
        w.windows(2)
            .enumerate()
            .filter(|(_, pair)| pair[0] > pair[1])
            .map(|(i, _)| i + 1)
            .sum()
    }

    fn classical_inv(w: &[u8]) -> usize {
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn inverse_descent_examples() {
        assert_eq!(inverse_descents(&perm("583691724")).members(), vec![2, 4, 7]);
        assert!(inverse_descents(&Permutation::identity(6)).is_empty());
        assert_eq!(inverse_descents(&perm("841567392")).members(), vec![2, 3, 7]);
    }

    #[test]
    fn destandardize_examples() {
        let d = destandardize(&perm("583691724"));
        assert_eq!(d.to_string(), "342341312");
        assert_eq!(d.weight(), &[2, 2, 3, 2]);

        let d = destandardize(&perm("719852364"));
        assert_eq!(d.to_string(), "314321121");
        assert_eq!(d.weight(), &[4, 2, 2, 1]);

        let d = destandardize(&Permutation::identity(3));
        assert_eq!(d.to_string(), "111");
        assert_eq!(d.weight(), &[3]);
    }

    #[test]
    fn super_standard_examples() {
        assert_eq!(
            is_super_standard(&perm("719852364")),
            Some("4,2,2,1".parse().unwrap())
        );
        assert_eq!(is_super_standard(&perm("3412")), Some("2,2".parse().unwrap()));
        assert_eq!(is_super_standard(&perm("1423")), Some("3,1".parse().unwrap()));
        // dst(213) = 212 and the suffix "2" lacks a 1
        assert_eq!(is_super_standard(&perm("213")), None);
        for n in 1..=8 {
            assert_eq!(
                is_super_standard(&Permutation::identity(n)),
                Some(Partition::row(n))
            );
        }
    }

    #[test]
    fn enumerate_super_standard_examples() {
        for n in 1..=6 {
            assert_eq!(
                enumerate_super_standard(&Partition::row(n)),
                vec![Permutation::identity(n)]
            );
        }
        assert_eq!(enumerate_super_standard(&"3,1".parse().unwrap()).len(), 3);
        let ss21 = enumerate_super_standard(&"2,1".parse().unwrap());
        assert_eq!(ss21, vec![perm("132"), perm("312")]);
    }

    #[test]
    fn descent_cells_of_worked_examples() {
        let f = filling("4,2,2,1", "583691724");
        let cells = mu_descent_cells(&f);
        let entries: Vec<u8> = cells.iter().map(|&c| f.entry(c).unwrap()).collect();
        assert_eq!(entries, vec![8, 6, 9]);

        let f = filling("6", "314562");
        assert!(mu_descent_cells(&f).is_empty());

        let f = filling("4,2,2,1", "845163279");
        let entries: Vec<u8> = mu_descent_cells(&f)
            .iter()
            .map(|&c| f.entry(c).unwrap())
            .collect();
        assert_eq!(entries, vec![8, 4, 6]);
    }

    #[test]
    fn maj_examples() {
        assert_eq!(maj_mu(&filling("4,2,2,1", "583691724")), 7);
        assert_eq!(maj_mu(&filling("1,1,1,1,1,1,1,1,1", "841567392")), 17);
        assert_eq!(maj_mu(&filling("4,2,2,1", "845163279")), 5);
    }

    #[test]
    fn inversion_pair_examples() {
        let pairs = mu_inversion_pairs(&filling("4,2,2,1", "583691724"));
        assert_eq!(pairs, vec![(8, 3), (9, 1), (7, 2), (7, 4)]);

        let pairs = mu_inversion_pairs(&filling("1,1,1,1", "3142"));
        assert!(pairs.is_empty());

        let mut pairs = mu_inversion_pairs(&filling("4,2,2,1", "845163279"));
        pairs.sort();
        assert_eq!(pairs, vec![(3, 2), (5, 1), (6, 3)]);
    }

    #[test]
    fn inv_examples() {
        assert_eq!(inv_mu(&filling("4,2,2,1", "583691724")), 2);
        let f = filling("4,1,1,1,1,1", "841567392");
        assert_eq!(stats_mu(&f), (4, 3));
        let f = filling("4,2,2,1", "845163279");
        assert_eq!(stats_mu(&f), (2, 5));
    }

    #[test]
    fn column_and_row_shapes_recover_classical_statistics() {
        for n in 1..=8 {
            let column = ShapeGeometry::new(&Partition::column(n));
            let row = ShapeGeometry::new(&Partition::row(n));
            for_each_permutation(n, |w| {
                let (ci, cm) = column.stats(w);
                assert_eq!(ci, 0);
                assert_eq!(cm, classical_maj(w));
                let (ri, rm) = row.stats(w);
                assert_eq!(rm, 0);
                assert_eq!(ri, classical_inv(w));
            });
        }
    }

    #[test]
    fn inv_is_nonnegative_exhaustively() {
        for n in 1..=8 {
            for mu in Partition::all_of(n) {
                let geom = ShapeGeometry::new(&mu);
                for_each_permutation(n, |w| {
                    let _ = geom.stats(w); // panics inside if inv went negative
                });
            }
        }
    }

    #[test]
    fn destandardized_weight_determined_by_inverse_descents() {
        for n in 1..=6 {
            for_each_permutation(n, |w| {
                let p = Permutation::from_slice_unchecked(w);
                let d = destandardize(&p);
                // weight = gaps of iDes(w) extended by n
                let ides = inverse_descents(&p).members();
                let mut expect = Vec::new();
                let mut prev = 0;
                for &i in ides.iter().chain(std::iter::once(&n)) {
                    expect.push((i - prev) as u8);
                    prev = i;
                }
                assert_eq!(d.weight(), expect.as_slice());
                // the letters are the value blocks read through the word
                for (j, &x) in w.iter().enumerate() {
                    let block = 1 + ides.iter().filter(|&&i| (i as u8) < x).count() as u8;
                    assert_eq!(d.letters()[j], block);
                }
            });
        }
    }

    #[test]
    fn super_standard_counts_match_involution_counts_small() {
        // |SS(lambda)| summed over all lambda of n = number of involutions in S_n
        let involutions = [1u64, 2, 4, 10, 26, 76];
        for (i, &expect) in involutions.iter().enumerate() {
            let n = i + 1;
            let by_weight = super_standard_by_weight(n);
            let total: u64 = by_weight.values().map(|v| v.len() as u64).sum();
            assert_eq!(total, expect);
        }
    }
}
