//! Sparse polynomials in the two formal parameters q and t with exact
//! integer coefficients.
//!
//! The canonical text form sorts terms by ascending (q-exponent, t-exponent)
//! and omits unit factors and unit exponents: `q^2*t^7`, `q + t`, `3*t^2`.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A polynomial in q and t; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QtPolynomial {
    terms: BTreeMap<(u32, u32), i64>,
}

impl QtPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    /// c * q^a * t^b.
    pub fn monomial(q_exp: u32, t_exp: u32, coeff: i64) -> Self {
        let mut p = Self::default();
        p.add_term(q_exp, t_exp, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, q_exp: u32, t_exp: u32) -> i64 {
        self.terms.get(&(q_exp, t_exp)).copied().unwrap_or(0)
    }

    /// Terms in ascending (q-exponent, t-exponent) order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, i64)> + '_ {
        self.terms.iter().map(|(&(a, b), &c)| (a, b, c))
    }

    pub fn add_term(&mut self, q_exp: u32, t_exp: u32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry((q_exp, t_exp)).or_insert(0);
        *entry = entry.checked_add(coeff).expect("coefficient overflow");
        if *entry == 0 {
            self.terms.remove(&(q_exp, t_exp));
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (a, b, c) in other.terms() {
            self.add_term(a, b, c);
        }
    }

    /// self += factor * other, with an integer factor.
    pub fn add_scaled(&mut self, other: &Self, factor: i64) {
        if factor == 0 {
            return;
        }
        for (a, b, c) in other.terms() {
            self.add_term(a, b, c.checked_mul(factor).expect("coefficient overflow"));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (a1, b1, c1) in self.terms() {
            for (a2, b2, c2) in other.terms() {
                out.add_term(a1 + a2, b1 + b2, c1.checked_mul(c2).expect("coefficient overflow"));
            }
        }
        out
    }

    pub fn scale(&self, factor: i64) -> Self {
        let mut out = Self::default();
        out.add_scaled(self, factor);
        out
    }

    /// Coefficient sum, i.e. the evaluation at q = t = 1.
    pub fn eval_at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c >= 0)
    }

    /// LaTeX fragment in the same canonical term order.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (a, b, c)) in self.terms().enumerate() {
            push_term(&mut out, i == 0, a, b, c, true);
        }
        out
    }
}

fn push_term(out: &mut String, first: bool, a: u32, b: u32, c: i64, latex: bool) {
    let mag = c.unsigned_abs();
    if first {
        if c < 0 {
            out.push('-');
        }
    } else if c < 0 {
        out.push_str(" - ");
    } else {
        out.push_str(" + ");
    }
    let mut factors: Vec<String> = Vec::new();
    if mag != 1 || (a == 0 && b == 0) {
        factors.push(mag.to_string());
    }
    for (sym, e) in [("q", a), ("t", b)] {
        if e == 1 {
            factors.push(sym.into());
        } else if e > 1 {
            if latex {
                factors.push(format!("{sym}^{{{e}}}"));
            } else {
                factors.push(format!("{sym}^{e}"));
            }
        }
    }
    let sep = if latex { "" } else { "*" };
    out.push_str(&factors.join(sep));
}

impl fmt::Display for QtPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (a, b, c)) in self.terms().enumerate() {
            push_term(&mut out, i == 0, a, b, c, false);
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for QtPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QtPolynomial({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct TermDto {
    q: u32,
    t: u32,
    c: i64,
}

impl Serialize for QtPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (a, b, c) in self.terms() {
            seq.serialize_element(&TermDto { q: a, t: b, c })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for QtPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermDto>::deserialize(deserializer)?;
        let mut p = QtPolynomial::default();
        for term in terms {
            if p.coeff(term.q, term.t) != 0 {
                return Err(D::Error::custom(format!(
                    "duplicate term q^{}*t^{}",
                    term.q, term.t
                )));
            }
            p.add_term(term.q, term.t, term.c);
        }
        Ok(p)
    }
}
