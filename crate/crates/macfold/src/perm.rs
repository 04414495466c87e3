//! Permutations of 1..n, words with distinct letters, and exhaustive
//! enumeration of the symmetric group.
//!
//! Positions and letters are 1-based everywhere in the public API; words of
//! size at most 9 display as compact digit strings, larger ones as
//! comma-separated lists.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A permutation of n: every value 1..=n exactly once.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    letters: Vec<u8>,
}

impl Permutation {
    pub fn new(letters: Vec<u8>) -> Result<Self> {
        let n = letters.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty word".into()));
        }
        if n > 64 {
            return Err(Error::InvalidPermutation(format!(
                "size {n} exceeds the supported maximum of 64"
            )));
        }
        let mut seen = vec![false; n + 1];
        for &x in &letters {
            if x == 0 || x as usize > n || seen[x as usize] {
                return Err(Error::InvalidPermutation(format!(
                    "{} is not a rearrangement of 1..{n}",
                    display_letters(&letters)
                )));
            }
            seen[x as usize] = true;
        }
        Ok(Self { letters })
    }

    pub fn identity(n: usize) -> Self {
        Self::new((1..=n as u8).collect()).expect("identity is a permutation")
    }

    pub(crate) fn from_slice_unchecked(letters: &[u8]) -> Self {
        debug_assert!(Self::new(letters.to_vec()).is_ok());
        Self {
            letters: letters.to_vec(),
        }
    }

    pub fn n(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    /// 1-based position of a value.
    pub fn position_of(&self, value: u8) -> Result<usize> {
        self.letters
            .iter()
            .position(|&x| x == value)
            .map(|p| p + 1)
            .ok_or_else(|| Error::PositionOutOfRange {
                position: value as usize,
                n: self.n(),
            })
    }

    pub fn as_word(&self) -> Word {
        Word {
            letters: self.letters.clone(),
        }
    }
}

/// A word: distinct positive letters, not necessarily 1..n.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<u8>,
}

impl Word {
    pub fn new(letters: Vec<u8>) -> Result<Self> {
        let mut seen = [false; 256];
        for &x in &letters {
            if x == 0 {
                return Err(Error::InvalidWord("letters must be positive".into()));
            }
            if seen[x as usize] {
                return Err(Error::InvalidWord(format!(
                    "repeated letter {x} in {}",
                    display_letters(&letters)
                )));
            }
            seen[x as usize] = true;
        }
        Ok(Self { letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn contains(&self, letter: u8) -> bool {
        self.letters.contains(&letter)
    }
}

fn display_letters(letters: &[u8]) -> String {
    if letters.iter().all(|&x| x <= 9) {
        letters.iter().map(|x| x.to_string()).collect()
    } else {
        letters
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn parse_letters(s: &str) -> std::result::Result<Vec<u8>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if s.contains(',') {
        s.split(',')
            .map(|p| p.trim().parse::<u8>().map_err(|e| e.to_string()))
            .collect()
    } else {
        s.chars()
            .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(|| format!("bad digit {c:?}")))
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&display_letters(&self.letters))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&display_letters(&self.letters))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = parse_letters(s).map_err(Error::InvalidPermutation)?;
        Self::new(letters)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = parse_letters(s).map_err(Error::InvalidWord)?;
        Self::new(letters)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// n! as a u64; defined for n <= 20.
pub fn factorial(n: usize) -> u64 {
    assert!(n <= 20, "factorial overflows u64 for n > 20");
    (2..=n as u64).product()
}

/// Advance to the next permutation in lexicographic order; false at the last.
pub(crate) fn next_permutation(w: &mut [u8]) -> bool {
    let n = w.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// Visit every permutation of 1..=n in lexicographic order.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[u8])) {
    assert!(n >= 1 && n <= 20);
    let mut w: Vec<u8> = (1..=n as u8).collect();
    loop {
        f(&w);
        if !next_permutation(&mut w) {
            return;
        }
    }
}

/// Lexicographic rank of a permutation of 1..=n, 0-based.
pub fn permutation_rank(w: &[u8]) -> usize {
    let n = w.len();
    let mut rank = 0usize;
    let mut fact = factorial(n.saturating_sub(1)) as usize;
    for i in 0..n {
        let smaller = w[i + 1..].iter().filter(|&&x| x < w[i]).count();
        rank += smaller * fact;
        if n - i >= 2 {
            fact /= n - i - 1;
        }
    }
    rank
}

/// Fold over all of S_n in parallel shards with a deterministic merge.
///
/// Shards are the (first, second) letter prefixes enumerated in lexicographic
/// order; shard results are merged in that fixed order, so the outcome does
/// not depend on the thread count.
pub fn par_fold_permutations<T, M, F, G>(n: usize, make: M, fold: F, merge: G) -> T
where
    T: Send,
    M: Fn() -> T + Sync,
    F: Fn(&mut T, &[u8]) + Sync,
    G: Fn(T, T) -> T,
{
    use rayon::prelude::*;

    assert!(n >= 1 && n <= 20);
    if n < 6 {
        let mut acc = make();
        for_each_permutation(n, |w| fold(&mut acc, w));
        return acc;
    }

    let mut prefixes = Vec::with_capacity(n * (n - 1));
    for a in 1..=n as u8 {
        for b in 1..=n as u8 {
            if a != b {
                prefixes.push((a, b));
            }
        }
    }

    let shards: Vec<T> = prefixes
        .par_iter()
        .map(|&(a, b)| {
            let mut w: Vec<u8> = Vec::with_capacity(n);
            w.push(a);
            w.push(b);
            w.extend((1..=n as u8).filter(|&x| x != a && x != b));
            let mut acc = make();
            loop {
                fold(&mut acc, &w);
                if !next_permutation(&mut w[2..]) {
                    break;
                }
            }
            acc
        })
        .collect();

    shards.into_iter().fold(make(), merge)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_validates() {
        assert!(Permutation::new(vec![5, 8, 3, 6, 9, 1, 7, 2, 4]).is_ok());
        assert!(Permutation::new(vec![1, 1, 2]).is_err());
        assert!(Permutation::new(vec![2, 3]).is_err());
        assert!(Permutation::new(vec![]).is_err());
        assert!(Word::new(vec![9, 1, 7, 2, 4]).is_ok());
        assert!(Word::new(vec![]).is_ok());
        assert!(Word::new(vec![3, 3]).is_err());
    }

    #[test]
    fn parse_and_display_round_trip() {
        let w: Permutation = "583691724".parse().unwrap();
        assert_eq!(w.to_string(), "583691724");
        let big: Permutation = "10,2,3,4,5,6,7,8,9,1".parse().unwrap();
        assert_eq!(big.to_string(), "10,2,3,4,5,6,7,8,9,1");
        assert_eq!(big.n(), 10);
    }

    #[test]
    fn enumeration_counts_and_order() {
        let mut seen = Vec::new();
        for_each_permutation(3, |w| seen.push(w.to_vec()));
        assert_eq!(
            seen,
            vec![
                vec![1, 2, 3],
                vec![1, 3, 2],
                vec![2, 1, 3],
                vec![2, 3, 1],
                vec![3, 1, 2],
                vec![3, 2, 1]
            ]
        );
        let mut count = 0u64;
        for_each_permutation(6, |_| count += 1);
        assert_eq!(count, factorial(6));
    }

    #[test]
    fn rank_matches_enumeration_order() {
        let mut expect = 0usize;
        for_each_permutation(5, |w| {
            assert_eq!(permutation_rank(w), expect);
            expect += 1;
        });
    }

    #[test]
    fn parallel_fold_agrees_with_sequential() {
        let seq: u64 = {
            let mut acc = 0u64;
            for_each_permutation(7, |w| acc += w[0] as u64 * permutation_rank(w) as u64);
            acc
        };
        let par = par_fold_permutations(
            7,
            || 0u64,
            |acc, w| *acc += w[0] as u64 * permutation_rank(w) as u64,
            |a, b| a + b,
        );
        assert_eq!(seq, par);
    }
}
