//! The two symmetric-function representations used throughout: expansions in
//! Gessel's fundamental quasisymmetric basis (indexed by descent subsets) and
//! in the Schur basis (indexed by partitions).
//!
//! The infinite variable set is never materialized; an expansion is a finite
//! map from basis indices to coefficient polynomials in q and t.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::QtPolynomial;

/// A subset of [n-1] with its ambient size n, stored as a bit set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DescentSubset {
    n: usize,
    bits: u64,
}

impl DescentSubset {
    pub fn new(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut bits = 0u64;
        for i in members {
            if i < 1 || i >= n {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    min: 1,
                    max: n.saturating_sub(1),
                });
            }
            bits |= 1 << (i - 1);
        }
        Ok(Self { n, bits })
    }

    pub fn empty(n: usize) -> Self {
        Self { n, bits: 0 }
    }

    pub(crate) fn from_bits(n: usize, bits: u64) -> Self {
        debug_assert!(n >= 64 || bits < (1 << (n.max(1) - 1)));
        Self { n, bits }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub(crate) fn bits(&self) -> u64 {
        self.bits
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && i < self.n && self.bits & (1 << (i - 1)) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn members(&self) -> Vec<usize> {
        (1..self.n).filter(|&i| self.contains(i)).collect()
    }
}

impl fmt::Display for DescentSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner = self
            .members()
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "{{{inner}}}")
    }
}

impl fmt::Debug for DescentSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DescentSubset(n={}, {})", self.n, self)
    }
}

impl Serialize for DescentSubset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let members = self.members();
        let mut seq = serializer.serialize_seq(Some(members.len()))?;
        for m in members {
            seq.serialize_element(&m)?;
        }
        seq.end()
    }
}

/// An expansion sum_D c_D(q,t) F_D over descent subsets of a fixed n.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct FundExpansion {
    n: usize,
    coeffs: BTreeMap<DescentSubset, QtPolynomial>,
}

impl FundExpansion {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, d: &DescentSubset) -> QtPolynomial {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    /// Terms in ascending bit-set order of the index.
    pub fn terms(&self) -> impl Iterator<Item = (&DescentSubset, &QtPolynomial)> {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, d: DescentSubset, poly: &QtPolynomial) {
        assert_eq!(d.n(), self.n, "descent subset of mismatched ambient size");
        if poly.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(d).or_default();
        entry.add_assign(poly);
        if entry.is_zero() {
            self.coeffs.remove(&d);
        }
    }

    pub fn add_monomial(&mut self, d: DescentSubset, q_exp: u32, t_exp: u32, coeff: i64) {
        assert_eq!(d.n(), self.n, "descent subset of mismatched ambient size");
        let entry = self.coeffs.entry(d).or_default();
        entry.add_term(q_exp, t_exp, coeff);
        if entry.is_zero() {
            self.coeffs.remove(&d);
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.n, other.n, "expansions of mismatched ambient size");
        for (d, poly) in other.terms() {
            self.add_term(*d, poly);
        }
    }

    /// self += factor * other with a polynomial factor.
    pub fn add_scaled(&mut self, other: &Self, factor: &QtPolynomial) {
        assert_eq!(self.n, other.n, "expansions of mismatched ambient size");
        for (d, poly) in other.terms() {
            self.add_term(*d, &poly.mul(factor));
        }
    }

    /// Sum of all coefficients evaluated at q = t = 1.
    pub fn total_at_one(&self) -> i64 {
        self.coeffs.values().map(|p| p.eval_at_one()).sum()
    }
}

impl fmt::Debug for FundExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FundExpansion(n={}", self.n)?;
        for (d, poly) in self.terms() {
            write!(f, ", {d}: {poly}")?;
        }
        write!(f, ")")
    }
}

#[derive(Serialize)]
struct FundTermDto<'a> {
    ides: &'a DescentSubset,
    coeff: &'a QtPolynomial,
}

impl Serialize for FundExpansion {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("FundExpansion", 2)?;
        st.serialize_field("n", &self.n)?;
        let terms: Vec<FundTermDto> = self
            .terms()
            .map(|(d, poly)| FundTermDto { ides: d, coeff: poly })
            .collect();
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

#[derive(Deserialize)]
struct FundTermOwned {
    ides: Vec<usize>,
    coeff: QtPolynomial,
}

#[derive(Deserialize)]
struct FundDto {
    n: usize,
    terms: Vec<FundTermOwned>,
}

impl<'de> Deserialize<'de> for FundExpansion {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let dto = FundDto::deserialize(deserializer)?;
        let mut out = FundExpansion::new(dto.n);
        for term in dto.terms {
            let d = DescentSubset::new(dto.n, term.ides).map_err(D::Error::custom)?;
            out.add_term(d, &term.coeff);
        }
        Ok(out)
    }
}

/// An expansion sum_lambda a_lambda(q,t) s_lambda over partitions of n.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    n: usize,
    coeffs: BTreeMap<Partition, QtPolynomial>,
}

impl SchurExpansion {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, lambda: &Partition) -> QtPolynomial {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    /// Terms in descending lexicographic order of the partition, the
    /// canonical table order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &QtPolynomial)> {
        self.coeffs.iter().rev()
    }

    pub fn add_term(&mut self, lambda: Partition, poly: &QtPolynomial) {
        assert_eq!(lambda.n(), self.n, "partition of mismatched size");
        if poly.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(lambda.clone()).or_default();
        entry.add_assign(poly);
        if entry.is_zero() {
            self.coeffs.remove(&lambda);
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|p| p.is_nonnegative())
    }

    pub fn total_at_one(&self) -> i64 {
        self.coeffs.values().map(|p| p.eval_at_one()).sum()
    }
}

impl fmt::Debug for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SchurExpansion(n={}", self.n)?;
        for (lambda, poly) in self.terms() {
            write!(f, ", s({lambda}): {poly}")?;
        }
        write!(f, ")")
    }
}

#[derive(Serialize)]
struct SchurTermDto<'a> {
    lambda: &'a Partition,
    coeff: &'a QtPolynomial,
}

impl Serialize for SchurExpansion {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("SchurExpansion", 2)?;
        st.serialize_field("n", &self.n)?;
        let terms: Vec<SchurTermDto> = self
            .terms()
            .map(|(lambda, poly)| SchurTermDto { lambda, coeff: poly })
            .collect();
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

#[derive(Deserialize)]
struct SchurTermOwned {
    lambda: Partition,
    coeff: QtPolynomial,
}

#[derive(Deserialize)]
struct SchurDto {
    n: usize,
    terms: Vec<SchurTermOwned>,
}

impl<'de> Deserialize<'de> for SchurExpansion {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let dto = SchurDto::deserialize(deserializer)?;
        let mut out = SchurExpansion::new(dto.n);
        for term in dto.terms {
            if term.lambda.n() != dto.n {
                return Err(D::Error::custom(format!(
                    "partition ({}) does not sum to {}",
                    term.lambda, dto.n
                )));
            }
            out.add_term(term.lambda, &term.coeff);
        }
        Ok(out)
    }
}
