//! Dual equivalence involutions on permutations and their orbit structure.
//!
//! Three families act for 1 < i < n: the standard involution d_i swaps i with
//! the positionally farther of i-1 and i+1, the twisted involution rotates
//! the three values so that i crosses to the other side, and the
//! shape-generalized involution picks one of the two according to the cell
//! geometry of i and its neighbors in the filling. Orbits are computed by
//! union-find over the whole symmetric group.

use std::fmt;

use crate::error::{Error, Result};
use crate::expansion::FundExpansion;
use crate::filling::{ShapeGeometry, ShapedFilling};
use crate::partition::Partition;
use crate::perm::{factorial, for_each_permutation, permutation_rank, Permutation};
use crate::stats::{inverse_descents, is_super_standard};

// Positions (0-based) of the values i-1, i, i+1 in one scan.
fn neighbor_positions(w: &[u8], i: usize) -> (usize, usize, usize) {
    let (mut lo, mut mid, mut hi) = (usize::MAX, usize::MAX, usize::MAX);
    let i = i as u8;
    for (p, &x) in w.iter().enumerate() {
        if x == i - 1 {
            lo = p;
        } else if x == i {
            mid = p;
        } else if x == i + 1 {
            hi = p;
        }
    }
    (lo, mid, hi)
}

fn medial(lo: usize, mid: usize, hi: usize) -> bool {
    (lo < mid && mid < hi) || (hi < mid && mid < lo)
}

pub(crate) fn d_apply(i: usize, w: &mut [u8]) {
    let (lo, mid, hi) = neighbor_positions(w, i);
    if medial(lo, mid, hi) {
        return;
    }
    // swap i with whichever of i-1, i+1 sits farther away
    let partner = if lo.abs_diff(mid) > hi.abs_diff(mid) {
        lo
    } else {
        hi
    };
    w.swap(mid, partner);
}

pub(crate) fn d_twisted_apply(i: usize, w: &mut [u8]) {
    let (lo, mid, hi) = neighbor_positions(w, i);
    if medial(lo, mid, hi) {
        return;
    }
    // cycle the three values one step so that i moves from its extreme
    // position to the opposite one
    let mut ps = [lo, mid, hi];
    ps.sort_unstable();
    let [a, b, c] = ps;
    if mid == a {
        w[a] = w[b];
        w[b] = w[c];
        w[c] = i as u8;
    } else {
        debug_assert_eq!(mid, c);
        w[c] = w[b];
        w[b] = w[a];
        w[a] = i as u8;
    }
}

// Sort the three positions holding i-1, i, i+1 in reading order; the
// twisted rotation applies exactly when both adjacent cell pairs of the
// triple attack. The standard move swaps the values at the two outer
// positions, so it preserves the shape statistics precisely when the outer
// cells neither attack nor sit one directly above the other, and either of
// those outer interactions forces both adjacent pairs to attack; the
// twisted rotation exchanges the order data of the two adjacent pairs, so
// it preserves the statistics exactly when those pairs carry equal weight,
// i.e. both attack (two stacked column pairs never weigh the same). The
// attack-chain condition therefore always selects a statistic-preserving
// move, and it depends only on the cell triple, which neither move changes,
// so the composite is an involution.
pub(crate) fn uses_twisted_raw(geom: &ShapeGeometry, w: &[u8], i: usize) -> bool {
    let (lo, mid, hi) = neighbor_positions(w, i);
    let mut ps = [lo, mid, hi];
    ps.sort_unstable();
    geom.attacks(ps[0], ps[1]) && geom.attacks(ps[1], ps[2])
}

pub(crate) fn d_mu_apply(geom: &ShapeGeometry, i: usize, w: &mut [u8]) {
    if uses_twisted_raw(geom, w, i) {
        d_twisted_apply(i, w);
    } else {
        d_apply(i, w);
    }
}

fn check_index(i: usize, n: usize) -> Result<()> {
    if n >= 3 && i > 1 && i < n {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange {
            index: i,
            min: 2,
            max: n.saturating_sub(1),
        })
    }
}

/// The standard involution d_i; preserves the descent set.
pub fn d(i: usize, w: &Permutation) -> Result<Permutation> {
    check_index(i, w.n())?;
    let mut letters = w.letters().to_vec();
    d_apply(i, &mut letters);
    Ok(Permutation::from_slice_unchecked(&letters))
}

/// The twisted involution; preserves the inversion number.
pub fn d_twisted(i: usize, w: &Permutation) -> Result<Permutation> {
    check_index(i, w.n())?;
    let mut letters = w.letters().to_vec();
    d_twisted_apply(i, &mut letters);
    Ok(Permutation::from_slice_unchecked(&letters))
}

/// Whether the shape-generalized involution acts by the twisted move: the
/// outermost two cells among those of i-1, i, i+1 in reading order form an
/// inversion-geometry pair (same row, or adjacent rows with the lower cell
/// strictly left) or are vertically adjacent.
pub fn uses_twisted(i: usize, f: &ShapedFilling) -> Result<bool> {
    check_index(i, f.n())?;
    let geom = ShapeGeometry::new(f.shape());
    Ok(uses_twisted_raw(&geom, f.perm().letters(), i))
}

/// The shape-generalized involution; preserves both shape statistics.
pub fn d_mu(i: usize, f: &ShapedFilling) -> Result<ShapedFilling> {
    check_index(i, f.n())?;
    let geom = ShapeGeometry::new(f.shape());
    let mut letters = f.perm().letters().to_vec();
    d_mu_apply(&geom, i, &mut letters);
    ShapedFilling::new(
        f.shape().clone(),
        Permutation::from_slice_unchecked(&letters),
    )
}

/// Which involution family generates an equivalence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GeneratorKind {
    Standard,
    Twisted,
    Mu(Partition),
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorKind::Standard => f.write_str("standard"),
            GeneratorKind::Twisted => f.write_str("twisted"),
            GeneratorKind::Mu(mu) => write!(f, "mu ({mu})"),
        }
    }
}

impl GeneratorKind {
    fn validate(&self, n: usize) -> Result<()> {
        if let GeneratorKind::Mu(mu) = self {
            if mu.n() != n {
                return Err(Error::SizeMismatch {
                    shape: mu.to_string(),
                    shape_n: mu.n(),
                    word_n: n,
                });
            }
        }
        Ok(())
    }
}

// Plain union-find over lexicographic ranks with deterministic roots.
struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(size: usize) -> Self {
        Self {
            parent: (0..size as u32).collect(),
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let grand = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grand;
            x = grand;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // smaller rank wins, so the root is the lex-least member
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi as usize] = lo;
        }
    }
}

/// The orbit partition of S_n under one involution family, indexable by
/// permutation.
pub struct ClassPartition {
    n: usize,
    kind: GeneratorKind,
    class_of: Vec<u32>,
    class_count: usize,
}

impl ClassPartition {
    pub fn new(n: usize, kind: GeneratorKind) -> Result<Self> {
        kind.validate(n)?;
        assert!(n >= 1 && n <= 12, "orbit enumeration is desk-scale");
        let size = factorial(n) as usize;
        let mut uf = UnionFind::new(size);
        let geom = match &kind {
            GeneratorKind::Mu(mu) => Some(ShapeGeometry::new(mu)),
            _ => None,
        };
        let mut scratch = vec![0u8; n];
        let mut rank = 0u32;
        for_each_permutation(n, |w| {
            for i in 2..n {
                scratch.copy_from_slice(w);
                match &kind {
                    GeneratorKind::Standard => d_apply(i, &mut scratch),
                    GeneratorKind::Twisted => d_twisted_apply(i, &mut scratch),
                    GeneratorKind::Mu(_) => {
                        d_mu_apply(geom.as_ref().unwrap(), i, &mut scratch)
                    }
                }
                if scratch.as_slice() != w {
                    uf.union(rank, permutation_rank(&scratch) as u32);
                }
            }
            rank += 1;
        });

        // number classes by first appearance in lexicographic order
        let mut class_of = vec![u32::MAX; size];
        let mut class_count = 0usize;
        for r in 0..size as u32 {
            let root = uf.find(r) as usize;
            if class_of[root] == u32::MAX {
                class_of[root] = class_count as u32;
                class_count += 1;
            }
            class_of[r as usize] = class_of[root];
        }
        Ok(Self {
            n,
            kind,
            class_of,
            class_count,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> &GeneratorKind {
        &self.kind
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    /// Class index of a permutation, by lex order of least members.
    pub fn class_id(&self, w: &[u8]) -> usize {
        self.class_of[permutation_rank(w)] as usize
    }
}

/// One orbit: members in lexicographic order, closed under the generators.
#[derive(Clone, Debug)]
pub struct EquivClass {
    kind: GeneratorKind,
    members: Vec<Permutation>,
}

impl EquivClass {
    pub fn kind(&self) -> &GeneratorKind {
        &self.kind
    }

    pub fn members(&self) -> &[Permutation] {
        &self.members
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// The lexicographically least member, the canonical label of the class.
    pub fn representative(&self) -> &Permutation {
        &self.members[0]
    }
}

/// All orbits of S_n under the chosen involutions, ordered by their least
/// members.
pub fn enumerate_classes(n: usize, kind: &GeneratorKind) -> Result<Vec<EquivClass>> {
    let partition = ClassPartition::new(n, kind.clone())?;
    let mut classes: Vec<EquivClass> = (0..partition.class_count())
        .map(|_| EquivClass {
            kind: kind.clone(),
            members: Vec::new(),
        })
        .collect();
    for_each_permutation(n, |w| {
        let id = partition.class_id(w);
        classes[id].members.push(Permutation::from_slice_unchecked(w));
    });
    Ok(classes)
}

/// The quasisymmetric generating function of a class: each member
/// contributes F at its inverse descent set, weighted by q^inv t^maj on the
/// given shape when one is supplied.
pub fn class_fund_gf(class: &EquivClass, mu: Option<&Partition>) -> Result<FundExpansion> {
    let n = class.representative().n();
    let geom = match mu {
        Some(mu) => {
            if mu.n() != n {
                return Err(Error::SizeMismatch {
                    shape: mu.to_string(),
                    shape_n: mu.n(),
                    word_n: n,
                });
            }
            Some(ShapeGeometry::new(mu))
        }
        None => None,
    };
    let mut out = FundExpansion::new(n);
    for member in class.members() {
        let d = inverse_descents(member);
        let (q_exp, t_exp) = match &geom {
            Some(geom) => {
                let (inv, maj) = geom.stats(member.letters());
                (inv as u32, maj as u32)
            }
            None => (0, 0),
        };
        out.add_monomial(d, q_exp, t_exp, 1);
    }
    Ok(out)
}

/// The unique super-standard member of a standard class.
pub fn super_standard_representative(class: &EquivClass) -> Result<Permutation> {
    let supers: Vec<&Permutation> = class
        .members()
        .iter()
        .filter(|w| is_super_standard(w).is_some())
        .collect();
    match supers.as_slice() {
        [unique] => Ok((*unique).clone()),
        found => Err(Error::InvariantViolation(format!(
            "class of {} has {} super-standard members, expected exactly 1",
            class.representative(),
            found.len()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schur::decompose_to_schur;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn filling(shape: &str, word: &str) -> ShapedFilling {
        ShapedFilling::new(shape.parse().unwrap(), word.parse().unwrap()).unwrap()
    }

    #[test]
    fn standard_involution_examples() {
        assert_eq!(d(2, &perm("2314")).unwrap(), perm("1324"));
        assert_eq!(d(3, &perm("1324")).unwrap(), perm("1423"));
        for i in 2..=8 {
            assert_eq!(d(i, &Permutation::identity(9)).unwrap(), Permutation::identity(9));
        }
        assert_eq!(d(7, &perm("583691724")).unwrap(), perm("573691824"));
        assert!(d(1, &perm("2314")).is_err());
        assert!(d(4, &perm("2314")).is_err());
    }

    #[test]
    fn twisted_involution_examples() {
        assert_eq!(d_twisted(2, &perm("2314")).unwrap(), perm("3124"));
        assert_eq!(d_twisted(3, &perm("3124")).unwrap(), perm("2143"));
        assert_eq!(d_twisted(2, &perm("2143")).unwrap(), perm("1342"));
        assert_eq!(d_twisted(3, &perm("1342")).unwrap(), perm("1423"));
        for i in 2..=5 {
            assert_eq!(
                d_twisted(i, &Permutation::identity(6)).unwrap(),
                Permutation::identity(6)
            );
        }
        assert_eq!(d_twisted(7, &perm("593687124")).unwrap(), perm("593768124"));
    }

    #[test]
    fn twisted_predicate_examples() {
        // left pair: the standard move applies
        assert!(!uses_twisted(7, &filling("4,2,2,1", "583691724")).unwrap());
        // right pair: the twisted move applies
        assert!(uses_twisted(7, &filling("4,2,2,1", "593687124")).unwrap());
        // a column never attacks, a row always does
        for n in [4usize, 6] {
            for_each_permutation(n, |w| {
                let p = Permutation::from_slice_unchecked(w);
                let col = ShapedFilling::new(Partition::column(n), p.clone()).unwrap();
                let row = ShapedFilling::new(Partition::row(n), p).unwrap();
                for i in 2..n {
                    assert!(!uses_twisted(i, &col).unwrap());
                    assert!(uses_twisted(i, &row).unwrap());
                }
            });
        }
    }

    #[test]
    fn generalized_involution_examples() {
        let f = d_mu(7, &filling("4,2,2,1", "583691724")).unwrap();
        assert_eq!(f.perm(), &perm("573691824"));
        let f = d_mu(7, &filling("4,2,2,1", "593687124")).unwrap();
        assert_eq!(f.perm(), &perm("593768124"));
    }

    #[test]
    fn generalized_matches_extremes() {
        // on a column the generalized move is the standard one, on a row the
        // twisted one
        for n in 3..=6 {
            let col_geom = ShapeGeometry::new(&Partition::column(n));
            let row_geom = ShapeGeometry::new(&Partition::row(n));
            for_each_permutation(n, |w| {
                for i in 2..n {
                    let mut a = w.to_vec();
                    let mut b = w.to_vec();
                    d_mu_apply(&col_geom, i, &mut a);
                    d_apply(i, &mut b);
                    assert_eq!(a, b);
                    let mut a = w.to_vec();
                    let mut b = w.to_vec();
                    d_mu_apply(&row_geom, i, &mut a);
                    d_twisted_apply(i, &mut b);
                    assert_eq!(a, b);
                }
            });
        }
    }

    #[test]
    fn involution_property_small() {
        for n in 3..=6 {
            let shapes = Partition::all_of(n);
            let geoms: Vec<ShapeGeometry> = shapes.iter().map(ShapeGeometry::new).collect();
            for_each_permutation(n, |w| {
                for i in 2..n {
                    let mut a = w.to_vec();
                    d_apply(i, &mut a);
                    d_apply(i, &mut a);
                    assert_eq!(a, w);
                    let mut a = w.to_vec();
                    d_twisted_apply(i, &mut a);
                    d_twisted_apply(i, &mut a);
                    assert_eq!(a, w);
                    for geom in &geoms {
                        let mut a = w.to_vec();
                        d_mu_apply(geom, i, &mut a);
                        d_mu_apply(geom, i, &mut a);
                        assert_eq!(a, w);
                    }
                }
            });
        }
    }

    #[test]
    fn preservation_small() {
        for n in 3..=6 {
            let column = ShapeGeometry::new(&Partition::column(n));
            let row = ShapeGeometry::new(&Partition::row(n));
            let shapes = Partition::all_of(n);
            let geoms: Vec<ShapeGeometry> = shapes.iter().map(ShapeGeometry::new).collect();
            for_each_permutation(n, |w| {
                let maj = column.maj(w);
                let inv = row.inv(w);
                let descents: Vec<usize> =
                    (1..n).filter(|&i| w[i - 1] > w[i]).collect();
                for i in 2..n {
                    // d preserves the descent set (hence maj)
                    let mut a = w.to_vec();
                    d_apply(i, &mut a);
                    let da: Vec<usize> = (1..n).filter(|&i| a[i - 1] > a[i]).collect();
                    assert_eq!(da, descents);
                    let _ = maj;
                    // twisted d preserves the inversion number
                    let mut a = w.to_vec();
                    d_twisted_apply(i, &mut a);
                    assert_eq!(row.inv(&a), inv);
                    // the generalized move preserves both shape statistics
                    for geom in &geoms {
                        let stats = geom.stats(w);
                        let mut a = w.to_vec();
                        d_mu_apply(geom, i, &mut a);
                        assert_eq!(geom.stats(&a), stats);
                    }
                }
            });
        }
    }

    #[test]
    fn standard_classes_of_s4() {
        let classes = enumerate_classes(4, &GeneratorKind::Standard).unwrap();
        let column = ShapeGeometry::new(&Partition::column(4));
        let with_maj2: Vec<Vec<String>> = classes
            .iter()
            .filter(|c| column.maj(c.representative().letters()) == 2)
            .map(|c| c.members().iter().map(|m| m.to_string()).collect())
            .collect();
        assert_eq!(
            with_maj2,
            vec![
                vec!["1324".to_string(), "1423".into(), "2314".into()],
                vec!["2413".to_string(), "3412".into()],
            ]
        );
    }

    #[test]
    fn twisted_classes_of_s4() {
        let classes = enumerate_classes(4, &GeneratorKind::Twisted).unwrap();
        let row = ShapeGeometry::new(&Partition::row(4));
        let with_inv2: Vec<Vec<String>> = classes
            .iter()
            .filter(|c| row.inv(c.representative().letters()) == 2)
            .map(|c| c.members().iter().map(|m| m.to_string()).collect())
            .collect();
        assert_eq!(
            with_inv2,
            vec![vec![
                "1342".to_string(),
                "1423".into(),
                "2143".into(),
                "2314".into(),
                "3124".into()
            ]]
        );
    }

    #[test]
    fn tiny_class_partitions() {
        let classes = enumerate_classes(1, &GeneratorKind::Standard).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].size(), 1);
        // without applicable generators S_2 falls apart into singletons
        let classes = enumerate_classes(2, &GeneratorKind::Twisted).unwrap();
        assert_eq!(classes.len(), 2);
    }

    #[test]
    fn class_generating_functions() {
        let classes = enumerate_classes(4, &GeneratorKind::Standard).unwrap();
        let find = |member: &str| {
            classes
                .iter()
                .find(|c| c.members().contains(&perm(member)))
                .unwrap()
        };
        let s = decompose_to_schur(&class_fund_gf(find("2413"), None).unwrap()).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.coeff(&"2,2".parse().unwrap()).to_string(), "1");
        let s = decompose_to_schur(&class_fund_gf(find("2314"), None).unwrap()).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.coeff(&"3,1".parse().unwrap()).to_string(), "1");

        let twisted = enumerate_classes(4, &GeneratorKind::Twisted).unwrap();
        let class = twisted
            .iter()
            .find(|c| c.members().contains(&perm("2314")))
            .unwrap();
        let s = decompose_to_schur(&class_fund_gf(class, None).unwrap()).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.coeff(&"3,1".parse().unwrap()).to_string(), "1");
        assert_eq!(s.coeff(&"2,2".parse().unwrap()).to_string(), "1");
    }

    #[test]
    fn super_standard_representatives() {
        let classes = enumerate_classes(4, &GeneratorKind::Standard).unwrap();
        let find = |member: &str| {
            classes
                .iter()
                .find(|c| c.members().contains(&perm(member)))
                .unwrap()
        };
        let rep = super_standard_representative(find("2314")).unwrap();
        assert_eq!(rep, perm("1423"));
        assert_eq!(is_super_standard(&rep), Some("3,1".parse().unwrap()));
        let rep = super_standard_representative(find("3412")).unwrap();
        assert_eq!(rep, perm("3412"));
        assert_eq!(is_super_standard(&rep), Some("2,2".parse().unwrap()));
        let rep = super_standard_representative(find("1234")).unwrap();
        assert_eq!(rep, Permutation::identity(4));
    }

    #[test]
    fn twisted_class_characterization_small() {
        for n in 2..=6 {
            let partition = ClassPartition::new(n, GeneratorKind::Twisted).unwrap();
            let row = ShapeGeometry::new(&Partition::row(n));
            let mut profiles: Vec<(usize, bool, usize)> = Vec::new();
            for_each_permutation(n, |w| {
                profiles.push((row.inv(w), w[0] > w[n - 1], partition.class_id(w)));
            });
            for a in &profiles {
                for b in &profiles {
                    let same_profile = a.0 == b.0 && a.1 == b.1;
                    assert_eq!(same_profile, a.2 == b.2);
                }
            }
        }
    }

    #[test]
    fn mu_class_stats_constant() {
        for n in 3..=5 {
            for mu in Partition::all_of(n) {
                let geom = ShapeGeometry::new(&mu);
                let classes = enumerate_classes(n, &GeneratorKind::Mu(mu.clone())).unwrap();
                for class in &classes {
                    let stats = geom.stats(class.representative().letters());
                    for member in class.members() {
                        assert_eq!(geom.stats(member.letters()), stats);
                    }
                }
            }
        }
    }

    #[test]
    fn shape_size_mismatch_rejected() {
        let kind = GeneratorKind::Mu("2,1".parse().unwrap());
        assert!(enumerate_classes(4, &kind).is_err());
    }
}
