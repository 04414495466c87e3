//! Named verification checks over the whole crate, grouped into suites.
//!
//! Each check runs one property at an explicit size bound and reports pass or
//! fail with a counted detail line; the CLI prints one line per check and the
//! acceptance tests assert on the outcomes.

use std::fmt;
use std::time::{Duration, Instant};

use crate::dual_equiv::{
    class_fund_gf, d, d_mu, d_twisted, enumerate_classes, super_standard_representative,
    ClassPartition, GeneratorKind,
};
use crate::error::Error;
use crate::expansion::DescentSubset;
use crate::filling::{ShapeGeometry, ShapedFilling};
use crate::fold::{
    beta, beta_indices, gamma, gamma_blocks, gamma_inverse, phi_ab, phi_k, phi_mu,
    phi_mu_with_trace, sigma,
};
use crate::macdonald::{
    compare_methods, conjecture_scan, kostka_macdonald_oracle, EnumerationBudget,
};
use crate::partition::Partition;
use crate::perm::{factorial, for_each_permutation, permutation_rank, Permutation, Word};
use crate::poly::QtPolynomial;
use crate::schur::{syt_count, SchurContext};
use crate::stats::{inverse_descents, is_super_standard, super_standard_by_weight};

/// Result of one named check.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub suite: Suite,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

/// The five check suites.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Examples,
    Involutions,
    Bijections,
    Folding,
    Conjecture,
}

impl Suite {
    pub fn all() -> [Suite; 5] {
        [
            Suite::Examples,
            Suite::Involutions,
            Suite::Bijections,
            Suite::Folding,
            Suite::Conjecture,
        ]
    }

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Examples => "examples",
            Suite::Involutions => "involutions",
            Suite::Bijections => "bijections",
            Suite::Folding => "folding",
            Suite::Conjecture => "conjecture",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "examples" => Ok(Suite::Examples),
            "involutions" => Ok(Suite::Involutions),
            "bijections" => Ok(Suite::Bijections),
            "folding" => Ok(Suite::Folding),
            "conjecture" => Ok(Suite::Conjecture),
            other => Err(Error::InvalidPartition(format!("unknown suite {other:?}"))),
        }
    }
}

/// Size overrides for the exhaustive checks.
#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyConfig {
    pub max_n: Option<usize>,
}

impl VerifyConfig {
    fn bound(&self, default: usize) -> usize {
        self.max_n.unwrap_or(default).max(2)
    }
}

type CheckResult = Result<(u64, String), String>;

fn run(suite: Suite, name: &'static str, f: impl FnOnce() -> CheckResult) -> CheckOutcome {
    let start = Instant::now();
    let result = f();
    let elapsed = start.elapsed();
    match result {
        Ok((cases, extra)) => CheckOutcome {
            suite,
            name,
            passed: true,
            detail: if extra.is_empty() {
                format!("{cases} cases")
            } else {
                format!("{cases} cases; {extra}")
            },
            elapsed,
        },
        Err(detail) => CheckOutcome {
            suite,
            name,
            passed: false,
            detail,
            elapsed,
        },
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn perm(s: &str) -> Permutation {
    s.parse().expect("valid permutation literal")
}

fn word(s: &str) -> Word {
    s.parse().expect("valid word literal")
}

fn part(s: &str) -> Partition {
    s.parse().expect("valid partition literal")
}

fn filling(shape: &str, w: &str) -> ShapedFilling {
    ShapedFilling::new(part(shape), perm(w)).expect("sizes match")
}

/// Run every check of a suite.
pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Vec<CheckOutcome> {
    match suite {
        Suite::Examples => examples_suite(),
        Suite::Involutions => involutions_suite(cfg),
        Suite::Bijections => bijections_suite(cfg),
        Suite::Folding => folding_suite(cfg),
        Suite::Conjecture => conjecture_suite(cfg),
    }
}

// ---------------------------------------------------------------------------
// examples
// ---------------------------------------------------------------------------

fn examples_suite() -> Vec<CheckOutcome> {
    vec![
        run(Suite::Examples, "haglund statistics worked example", || {
            let f = filling("4,2,2,1", "583691724");
            ensure(crate::stats::maj_mu(&f) == 7, || "maj != 7".into())?;
            ensure(crate::stats::inv_mu(&f) == 2, || "inv != 2".into())?;
            let entries: Vec<u8> = crate::stats::mu_descent_cells(&f)
                .iter()
                .map(|&c| f.entry(c).unwrap())
                .collect();
            ensure(entries == vec![8, 6, 9], || format!("descent cells {entries:?}"))?;
            let pairs = crate::stats::mu_inversion_pairs(&f);
            ensure(
                pairs == vec![(8, 3), (9, 1), (7, 2), (7, 4)],
                || format!("inversion pairs {pairs:?}"),
            )?;
            let ides = inverse_descents(f.perm());
            ensure(ides.members() == vec![2, 4, 7], || format!("iDes {ides}"))?;
            Ok((5, String::new()))
        }),
        run(Suite::Examples, "per-block rotation worked examples", || {
            let blocks: Vec<String> = gamma_blocks(5, &word("83691724"))
                .map_err(|e| e.to_string())?
                .iter()
                .map(|b| b.to_string())
                .collect();
            ensure(blocks == ["83", "6", "91", "724"], || format!("blocks {blocks:?}"))?;
            let image = gamma(5, &word("83691724")).map_err(|e| e.to_string())?;
            ensure(image == word("38619247"), || format!("gamma image {image}"))?;
            let back = gamma_inverse(5, &image).map_err(|e| e.to_string())?;
            ensure(back == word("83691724"), || format!("inverse image {back}"))?;
            let folded = phi_k(4, &perm("583691724")).map_err(|e| e.to_string())?;
            ensure(folded == perm("583619247"), || format!("phi_4 image {folded}"))?;
            Ok((4, String::new()))
        }),
        run(Suite::Examples, "straddle swap worked examples", || {
            let idx = beta_indices(5, &word("83691724")).map_err(|e| e.to_string())?;
            ensure(idx == vec![1, 3, 5], || format!("B_5 {idx:?}"))?;
            let image = beta(5, &word("83691724")).map_err(|e| e.to_string())?;
            ensure(image == word("38967124"), || format!("beta_5 {image}"))?;
            let idx = beta_indices(4, &word("1536")).map_err(|e| e.to_string())?;
            ensure(idx == vec![1, 3], || format!("B_4 {idx:?}"))?;
            let s = sigma(5, 2, &perm("841567392")).map_err(|e| e.to_string())?;
            ensure(s == perm("841563792"), || format!("sigma_(5,2) {s}"))?;
            let s = sigma(4, 2, &s).map_err(|e| e.to_string())?;
            ensure(s == perm("841536792"), || format!("sigma_(4,2) {s}"))?;
            Ok((5, String::new()))
        }),
        run(Suite::Examples, "generalized involution worked examples", || {
            let left = filling("4,2,2,1", "583691724");
            ensure(
                !crate::dual_equiv::uses_twisted(7, &left).map_err(|e| e.to_string())?,
                || "expected the standard move".into(),
            )?;
            let image = d_mu(7, &left).map_err(|e| e.to_string())?;
            ensure(image.perm() == &perm("573691824"), || format!("left image {}", image.perm()))?;
            let right = filling("4,2,2,1", "593687124");
            ensure(
                crate::dual_equiv::uses_twisted(7, &right).map_err(|e| e.to_string())?,
                || "expected the twisted move".into(),
            )?;
            let image = d_mu(7, &right).map_err(|e| e.to_string())?;
            ensure(image.perm() == &perm("593768124"), || format!("right image {}", image.perm()))?;
            Ok((4, String::new()))
        }),
        run(Suite::Examples, "size-four class structure", || {
            let classes = enumerate_classes(4, &GeneratorKind::Standard).map_err(|e| e.to_string())?;
            let column = ShapeGeometry::new(&Partition::column(4));
            let maj2: Vec<Vec<String>> = classes
                .iter()
                .filter(|c| column.maj(c.representative().letters()) == 2)
                .map(|c| c.members().iter().map(|m| m.to_string()).collect())
                .collect();
            ensure(
                maj2 == vec![
                    vec!["1324".to_string(), "1423".into(), "2314".into()],
                    vec!["2413".to_string(), "3412".into()],
                ],
                || format!("standard classes {maj2:?}"),
            )?;
            let ctx = SchurContext::new(4);
            let class_of = |member: &str| {
                classes
                    .iter()
                    .find(|c| c.members().contains(&perm(member)))
                    .expect("class")
            };
            let s = ctx
                .decompose(&class_fund_gf(class_of("2314"), None).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            ensure(s.len() == 1 && s.coeff(&part("3,1")) == QtPolynomial::one(), || {
                format!("gf of the three-element class: {s:?}")
            })?;
            let s = ctx
                .decompose(&class_fund_gf(class_of("2413"), None).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            ensure(s.len() == 1 && s.coeff(&part("2,2")) == QtPolynomial::one(), || {
                format!("gf of the two-element class: {s:?}")
            })?;
            ensure(
                super_standard_representative(class_of("2314")).map_err(|e| e.to_string())?
                    == perm("1423"),
                || "representative of the three-element class".into(),
            )?;
            ensure(
                super_standard_representative(class_of("2413")).map_err(|e| e.to_string())?
                    == perm("3412"),
                || "representative of the two-element class".into(),
            )?;

            let twisted = enumerate_classes(4, &GeneratorKind::Twisted).map_err(|e| e.to_string())?;
            let row = ShapeGeometry::new(&Partition::row(4));
            let inv2: Vec<Vec<String>> = twisted
                .iter()
                .filter(|c| row.inv(c.representative().letters()) == 2)
                .map(|c| c.members().iter().map(|m| m.to_string()).collect())
                .collect();
            ensure(
                inv2 == vec![vec![
                    "1342".to_string(),
                    "1423".into(),
                    "2143".into(),
                    "2314".into(),
                    "3124".into(),
                ]],
                || format!("twisted classes {inv2:?}"),
            )?;
            let class = twisted
                .iter()
                .find(|c| c.members().contains(&perm("2314")))
                .expect("twisted class");
            let s = ctx
                .decompose(&class_fund_gf(class, None).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            ensure(
                s.len() == 2
                    && s.coeff(&part("3,1")) == QtPolynomial::one()
                    && s.coeff(&part("2,2")) == QtPolynomial::one(),
                || format!("twisted gf {s:?}"),
            )?;
            Ok((7, String::new()))
        }),
        run(Suite::Examples, "hook folding trace", || {
            let (result, trace) =
                phi_mu_with_trace(&part("4,1,1,1,1,1"), &perm("841567392")).map_err(|e| e.to_string())?;
            ensure(result == perm("841567392"), || format!("final word {result}"))?;
            let rows: Vec<(String, String, (usize, usize))> = trace
                .steps
                .iter()
                .map(|s| {
                    let stats = ShapeGeometry::new(&s.shape).stats(s.word.letters());
                    (s.word.to_string(), s.shape.to_string(), stats)
                })
                .collect();
            let expect = vec![
                ("841567392".to_string(), "1,1,1,1,1,1,1,1,1".to_string(), (0, 17)),
                ("841567392".into(), "2,1,1,1,1,1,1,1".into(), (1, 9)),
                ("841567329".into(), "3,1,1,1,1,1,1".into(), (1, 9)),
                ("841567392".into(), "4,1,1,1,1,1".into(), (4, 3)),
            ];
            ensure(rows == expect, || format!("trace rows {rows:?}"))?;
            let ides = DescentSubset::new(9, [2, 3, 7]).map_err(|e| e.to_string())?;
            for step in &trace.steps {
                ensure(inverse_descents(&step.word) == ides, || {
                    format!("iDes drifted at {}", step.label)
                })?;
            }
            Ok((trace.steps.len() as u64, String::new()))
        }),
        run(Suite::Examples, "two-row folding trace", || {
            let (result, trace) =
                phi_mu_with_trace(&part("4,2,2,1"), &perm("841567392")).map_err(|e| e.to_string())?;
            ensure(result == perm("845163279"), || format!("final word {result}"))?;
            let tail: Vec<(String, String, (usize, usize))> = trace
                .steps
                .iter()
                .skip(3)
                .map(|s| {
                    let stats = ShapeGeometry::new(&s.shape).stats(s.word.letters());
                    (s.word.to_string(), s.shape.to_string(), stats)
                })
                .collect();
            let expect = vec![
                ("841567392".to_string(), "4,1,1,1,1,1".to_string(), (4, 3)),
                ("841536729".into(), "4,2,1,1,1".into(), (3, 3)),
                ("845163279".into(), "4,2,2,1".into(), (2, 5)),
            ];
            ensure(tail == expect, || format!("trace tail {tail:?}"))?;
            let ides = DescentSubset::new(9, [2, 3, 7]).map_err(|e| e.to_string())?;
            for step in &trace.steps {
                ensure(inverse_descents(&step.word) == ides, || {
                    format!("iDes drifted at {}", step.label)
                })?;
            }
            Ok((trace.steps.len() as u64, String::new()))
        }),
    ]
}

// ---------------------------------------------------------------------------
// involutions
// ---------------------------------------------------------------------------

fn involutions_suite(cfg: &VerifyConfig) -> Vec<CheckOutcome> {
    let n_invol = cfg.bound(7);
    let n_classes = cfg.bound(8);
    let n_counts = cfg.bound(9);
    vec![
        run(Suite::Involutions, "involutions square to the identity", || {
            let mut cases = 0u64;
            for n in 2..=n_invol {
                let geoms: Vec<ShapeGeometry> =
                    Partition::all_of(n).iter().map(ShapeGeometry::new).collect();
                let mut bad = None;
                for_each_permutation(n, |w| {
                    if bad.is_some() {
                        return;
                    }
                    let p = Permutation::from_slice_unchecked(w);
                    for i in 2..n {
                        let a = d(i, &p).unwrap();
                        if d(i, &a).unwrap() != p {
                            bad = Some(format!("d_{i} on {p}"));
                            return;
                        }
                        let a = d_twisted(i, &p).unwrap();
                        if d_twisted(i, &a).unwrap() != p {
                            bad = Some(format!("twisted d_{i} on {p}"));
                            return;
                        }
                        cases += 2;
                    }
                });
                if let Some(bad) = bad {
                    return Err(bad);
                }
                for (mu, geom) in Partition::all_of(n).iter().zip(&geoms) {
                    let mut bad = None;
                    for_each_permutation(n, |w| {
                        if bad.is_some() {
                            return;
                        }
                        for i in 2..n {
                            let mut a = w.to_vec();
                            crate::dual_equiv::d_mu_apply(geom, i, &mut a);
                            crate::dual_equiv::d_mu_apply(geom, i, &mut a);
                            if a != w {
                                bad = Some(format!("generalized d_{i} on ({mu})"));
                                return;
                            }
                            cases += 1;
                        }
                    });
                    if let Some(bad) = bad {
                        return Err(bad);
                    }
                }
            }
            Ok((cases, format!("n <= {n_invol}, all shapes")))
        }),
        run(Suite::Involutions, "involutions preserve their statistics", || {
            let mut cases = 0u64;
            for n in 2..=n_invol {
                let row = ShapeGeometry::new(&Partition::row(n));
                let mut bad = None;
                for_each_permutation(n, |w| {
                    if bad.is_some() {
                        return;
                    }
                    let descents: Vec<usize> = (1..n).filter(|&i| w[i - 1] > w[i]).collect();
                    let inv = row.inv(w);
                    for i in 2..n {
                        let mut a = w.to_vec();
                        crate::dual_equiv::d_apply(i, &mut a);
                        let da: Vec<usize> = (1..n).filter(|&i| a[i - 1] > a[i]).collect();
                        if da != descents {
                            bad = Some(format!("descent set broken by d_{i} on {a:?}"));
                            return;
                        }
                        let mut a = w.to_vec();
                        crate::dual_equiv::d_twisted_apply(i, &mut a);
                        if row.inv(&a) != inv {
                            bad = Some(format!("inversions broken by twisted d_{i} on {a:?}"));
                            return;
                        }
                        cases += 2;
                    }
                });
                if let Some(bad) = bad {
                    return Err(bad);
                }
                for mu in Partition::all_of(n) {
                    let geom = ShapeGeometry::new(&mu);
                    let mut bad = None;
                    for_each_permutation(n, |w| {
                        if bad.is_some() {
                            return;
                        }
                        let stats = geom.stats(w);
                        for i in 2..n {
                            let mut a = w.to_vec();
                            crate::dual_equiv::d_mu_apply(&geom, i, &mut a);
                            if geom.stats(&a) != stats {
                                bad = Some(format!("statistics broken on ({mu}) at w={w:?} i={i}"));
                                return;
                            }
                            cases += 1;
                        }
                    });
                    if let Some(bad) = bad {
                        return Err(bad);
                    }
                }
            }
            Ok((cases, format!("n <= {n_invol}, all shapes")))
        }),
        run(Suite::Involutions, "one super-standard member per class", || {
            let mut cases = 0u64;
            for n in 1..=n_classes {
                for class in enumerate_classes(n, &GeneratorKind::Standard).map_err(|e| e.to_string())? {
                    super_standard_representative(&class).map_err(|e| e.to_string())?;
                    cases += 1;
                }
            }
            Ok((cases, format!("classes over n <= {n_classes}")))
        }),
        run(Suite::Involutions, "class functions are single Schur functions", || {
            let mut cases = 0u64;
            for n in 1..=n_classes {
                let ctx = SchurContext::new(n);
                for class in enumerate_classes(n, &GeneratorKind::Standard).map_err(|e| e.to_string())? {
                    let rep = super_standard_representative(&class).map_err(|e| e.to_string())?;
                    let weight = is_super_standard(&rep).expect("representative weight");
                    let gf = class_fund_gf(&class, None).map_err(|e| e.to_string())?;
                    let schur = ctx.decompose(&gf).map_err(|e| e.to_string())?;
                    ensure(
                        schur.len() == 1 && schur.coeff(&weight) == QtPolynomial::one(),
                        || format!("class of {} decomposes as {schur:?}", class.representative()),
                    )?;
                    cases += 1;
                }
            }
            Ok((cases, format!("classes over n <= {n_classes}")))
        }),
        run(Suite::Involutions, "super-standard counts match tableau counts", || {
            let mut cases = 0u64;
            for n in 1..=n_counts {
                let by_weight = super_standard_by_weight(n);
                for lambda in Partition::all_of(n) {
                    let count = by_weight.get(&lambda).map_or(0, |v| v.len()) as u64;
                    ensure(count == syt_count(&lambda), || {
                        format!("|SS({lambda})| = {count} but f = {}", syt_count(&lambda))
                    })?;
                    cases += 1;
                }
            }
            Ok((cases, format!("weights over n <= {n_counts}")))
        }),
        run(Suite::Involutions, "twisted classes sorted by inversions and ends", || {
            let mut cases = 0u64;
            for n in 2..=n_classes {
                let partition =
                    ClassPartition::new(n, GeneratorKind::Twisted).map_err(|e| e.to_string())?;
                let row = ShapeGeometry::new(&Partition::row(n));
                let mut profiles: std::collections::BTreeMap<(usize, bool), usize> =
                    std::collections::BTreeMap::new();
                let mut bad = None;
                for_each_permutation(n, |w| {
                    if bad.is_some() {
                        return;
                    }
                    let profile = (row.inv(w), w[0] > w[n - 1]);
                    let id = partition.class_id(w);
                    match profiles.get(&profile) {
                        None => {
                            profiles.insert(profile, id);
                        }
                        Some(&known) => {
                            if known != id {
                                bad = Some(format!("profile {profile:?} split at {w:?}"));
                                return;
                            }
                        }
                    }
                    cases += 1;
                });
                if let Some(bad) = bad {
                    return Err(bad);
                }
                ensure(profiles.len() == partition.class_count(), || {
                    format!(
                        "n={n}: {} profiles vs {} classes",
                        profiles.len(),
                        partition.class_count()
                    )
                })?;
            }
            Ok((cases, format!("n <= {n_classes}")))
        }),
    ]
}

// ---------------------------------------------------------------------------
// bijections
// ---------------------------------------------------------------------------

// deterministic congruential generator for the randomized round trips
struct Lcg(u64);

impl Lcg {
    fn next_u64(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0
    }

    fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() >> 16) as usize % bound
    }
}

fn random_pivot_and_word(rng: &mut Lcg) -> (u8, Vec<u8>) {
    let span = 2 + rng.below(14);
    let mut letters: Vec<u8> = (1..=span as u8).collect();
    for i in (1..letters.len()).rev() {
        letters.swap(i, rng.below(i + 1));
    }
    let len = 1 + rng.below(letters.len() - 1);
    let x = letters[len];
    (x, letters[..len].to_vec())
}

fn bijections_suite(cfg: &VerifyConfig) -> Vec<CheckOutcome> {
    let n_exh = cfg.bound(7);
    let n_dist = cfg.bound(8);
    vec![
        run(Suite::Bijections, "rotation round trips", || {
            let mut rng = Lcg(0x5eed);
            for _ in 0..10_000 {
                let (x, letters) = random_pivot_and_word(&mut rng);
                let w = Word::new(letters).expect("distinct letters");
                let image = gamma(x, &w).map_err(|e| e.to_string())?;
                let back = gamma_inverse(x, &image).map_err(|e| e.to_string())?;
                ensure(back == w, || format!("round trip failed at x={x} w={w}"))?;
            }
            Ok((10_000, "randomized words".into()))
        }),
        run(Suite::Bijections, "fold maps are injective", || {
            let mut cases = 0u64;
            for n in 2..=n_exh.min(7) {
                let size = factorial(n) as usize;
                let mut maps: Vec<(String, Box<dyn Fn(&Permutation) -> Permutation>)> = Vec::new();
                for k in 1..n {
                    maps.push((format!("phi_{k}"), Box::new(move |w| phi_k(k, w).unwrap())));
                }
                for k in 1..=n {
                    for m in 0..=(n - k) {
                        maps.push((
                            format!("sigma_({k},{m})"),
                            Box::new(move |w| sigma(k, m, w).unwrap()),
                        ));
                    }
                }
                for a in 2..n {
                    for b in 0..=(n.saturating_sub(a + 2)) / 2 {
                        if a + 2 * b + 2 <= n {
                            maps.push((
                                format!("phi_({a},{b})"),
                                Box::new(move |w| phi_ab(a, b, w).unwrap()),
                            ));
                        }
                    }
                }
                for mu in Partition::all_of(n) {
                    if mu.second_part() <= 2 {
                        let label = format!("phi_({mu})");
                        maps.push((label, Box::new(move |w| phi_mu(&mu, w).unwrap())));
                    }
                }
                for (label, map) in &maps {
                    let mut seen = vec![false; size];
                    let mut bad = None;
                    for_each_permutation(n, |w| {
                        if bad.is_some() {
                            return;
                        }
                        let img = map(&Permutation::from_slice_unchecked(w));
                        let rank = permutation_rank(img.letters());
                        if seen[rank] {
                            bad = Some(format!("{label} collides at {img} (n={n})"));
                            return;
                        }
                        seen[rank] = true;
                        cases += 1;
                    });
                    if let Some(bad) = bad {
                        return Err(bad);
                    }
                }
            }
            Ok((cases, format!("maps over n <= {}", n_exh.min(7))))
        }),
        run(Suite::Bijections, "inverse descent sets preserved", || {
            let mut cases = 0u64;
            for n in 2..=n_exh.min(7) {
                let mut bad = None;
                for_each_permutation(n, |w| {
                    if bad.is_some() {
                        return;
                    }
                    let p = Permutation::from_slice_unchecked(w);
                    let ides = inverse_descents(&p);
                    for k in 1..n {
                        if inverse_descents(&phi_k(k, &p).unwrap()) != ides {
                            bad = Some(format!("phi_{k} moved iDes of {p}"));
                            return;
                        }
                        cases += 1;
                    }
                    for k in 1..=n {
                        for m in 0..=(n - k) {
                            if inverse_descents(&sigma(k, m, &p).unwrap()) != ides {
                                bad = Some(format!("sigma_({k},{m}) moved iDes of {p}"));
                                return;
                            }
                            cases += 1;
                        }
                    }
                    for mu in Partition::all_of(n) {
                        if mu.second_part() <= 2 {
                            if inverse_descents(&phi_mu(&mu, &p).unwrap()) != ides {
                                bad = Some(format!("phi_({mu}) moved iDes of {p}"));
                                return;
                            }
                            cases += 1;
                        }
                    }
                });
                if let Some(bad) = bad {
                    return Err(bad);
                }
            }
            Ok((cases, format!("n <= {}", n_exh.min(7))))
        }),
        run(Suite::Bijections, "major index and inversions equidistributed", || {
            use std::collections::BTreeMap;
            let mut cases = 0u64;
            for n in 2..=n_dist {
                let row = Partition::row(n);
                let row_geom = ShapeGeometry::new(&row);
                let col_geom = ShapeGeometry::new(&Partition::column(n));
                let mut maj_dist: BTreeMap<usize, u64> = BTreeMap::new();
                let mut inv_dist: BTreeMap<usize, u64> = BTreeMap::new();
                for_each_permutation(n, |w| {
                    *maj_dist.entry(col_geom.maj(w)).or_default() += 1;
                    let image = phi_mu(&row, &Permutation::from_slice_unchecked(w)).unwrap();
                    *inv_dist.entry(row_geom.inv(image.letters())).or_default() += 1;
                    cases += 1;
                });
                ensure(maj_dist == inv_dist, || format!("distributions differ at n={n}"))?;
            }
            Ok((cases, format!("n <= {n_dist}")))
        }),
        run(Suite::Bijections, "hook folds merge classes", || {
            merge_check(n_exh, true)
        }),
        run(Suite::Bijections, "two-row folds merge classes", || {
            merge_check(n_exh, false)
        }),
    ]
}

// Edge transport for the single fold between consecutive shapes: every
// generalized-equivalence edge of the source must land on one target class.
fn merge_check(max_n: usize, hooks: bool) -> CheckResult {
    let mut cases = 0u64;
    let mut total_bad = 0u64;
    let mut failures: Vec<String> = Vec::new();
    for n in 3..=max_n {
        for mu in Partition::all_of(n) {
            let rest = &mu.parts()[1..];
            let a = rest.iter().filter(|&&p| p == 1).count();
            let b = rest.iter().filter(|&&p| p == 2).count();
            if mu.second_part() > 2 || mu.parts()[0] as usize + 2 * b + a != n {
                continue;
            }
            let (target, map): (Partition, Box<dyn Fn(&Permutation) -> Permutation>) = if hooks {
                // (m, 1^k) -> (m+1, 1^{k-1}) via phi_k
                if b != 0 || a == 0 {
                    continue;
                }
                let k = a;
                let mut parts = vec![mu.parts()[0] + 1];
                parts.extend(std::iter::repeat_n(1, k - 1));
                (
                    Partition::new(parts).expect("hook target"),
                    Box::new(move |w| phi_k(k, w).unwrap()),
                )
            } else {
                // (m, 2^b, 1^a) -> (m, 2^{b+1}, 1^{a-2}) via phi_(a,b)
                if a < 2 || mu.parts()[0] < 2 {
                    continue;
                }
                let mut parts = vec![mu.parts()[0]];
                parts.extend(std::iter::repeat_n(2, b + 1));
                parts.extend(std::iter::repeat_n(1, a - 2));
                let (aa, bb) = (a, b);
                (
                    Partition::new(parts).expect("two-row target"),
                    Box::new(move |w| phi_ab(aa, bb, w).unwrap()),
                )
            };
            let src_geom = ShapeGeometry::new(&mu);
            let classes =
                ClassPartition::new(n, GeneratorKind::Mu(target.clone())).map_err(|e| e.to_string())?;
            let mut bad = 0u64;
            let mut first = String::new();
            for_each_permutation(n, |w| {
                let u = Permutation::from_slice_unchecked(w);
                let fu = classes.class_id(map(&u).letters());
                for i in 2..n {
                    let mut img = w.to_vec();
                    crate::dual_equiv::d_mu_apply(&src_geom, i, &mut img);
                    if img.as_slice() == w {
                        continue;
                    }
                    cases += 1;
                    let v = Permutation::from_slice_unchecked(&img);
                    if classes.class_id(map(&v).letters()) != fu {
                        if bad == 0 {
                            first = format!("first edge {u} ~ {v} (i={i})");
                        }
                        bad += 1;
                    }
                }
            });
            if bad > 0 {
                total_bad += bad;
                failures.push(format!("({mu})->({target}): {bad} edges, {first}"));
            }
        }
    }
    if failures.is_empty() {
        Ok((cases, format!("edges over n <= {max_n}")))
    } else {
        Err(format!(
            "{total_bad} of {cases} edges break transport: {}",
            failures.join("; ")
        ))
    }
}

// ---------------------------------------------------------------------------
// folding
// ---------------------------------------------------------------------------

fn folding_suite(cfg: &VerifyConfig) -> Vec<CheckOutcome> {
    let n_cmp = cfg.bound(8);
    let n_spec = cfg.bound(7);
    vec![
        run(Suite::Folding, "folding matches enumeration on hooks", || {
            let budget = EnumerationBudget::with_max_n(n_cmp);
            let mut cases = 0u64;
            for n in 1..=n_cmp {
                for mu in Partition::all_of(n) {
                    if mu.second_part() > 1 {
                        continue;
                    }
                    let cmp = compare_methods(&mu, budget).map_err(|e| e.to_string())?;
                    ensure(cmp.equal(), || format!("({mu}) differs: {:?}", cmp.diffs))?;
                    cases += 1;
                }
            }
            Ok((cases, format!("hooks over n <= {n_cmp}")))
        }),
        run(Suite::Folding, "folding matches enumeration on two-row shapes", || {
            let budget = EnumerationBudget::with_max_n(n_cmp);
            let mut cases = 0u64;
            let mut failures = Vec::new();
            for n in 1..=n_cmp {
                for mu in Partition::all_of(n) {
                    if mu.second_part() != 2 {
                        continue;
                    }
                    let cmp = compare_methods(&mu, budget).map_err(|e| e.to_string())?;
                    cases += 1;
                    if !cmp.equal() {
                        failures.push(format!("({mu})"));
                    }
                }
            }
            if failures.is_empty() {
                Ok((cases, format!("two-row shapes over n <= {n_cmp}")))
            } else {
                Err(format!(
                    "{} of {cases} shapes differ from the enumeration tables: {}",
                    failures.len(),
                    failures.join(", ")
                ))
            }
        }),
        run(Suite::Folding, "folding matches enumeration at the size-nine benchmark", || {
            let mu = part("4,2,2,1");
            let cmp = compare_methods(&mu, EnumerationBudget::with_max_n(9))
                .map_err(|e| e.to_string())?;
            if cmp.equal() {
                Ok((1, "(4,2,2,1) at n = 9".into()))
            } else {
                Err(format!(
                    "(4,2,2,1) differs in {} entries, first: {:?}",
                    cmp.diffs.len(),
                    cmp.diffs.first()
                ))
            }
        }),
        run(Suite::Folding, "small coefficient tables", || {
            let budget = EnumerationBudget::default();
            let t = kostka_macdonald_oracle(&part("2"), budget).map_err(|e| e.to_string())?;
            ensure(
                t.entries.coeff(&part("2")).to_string() == "1"
                    && t.entries.coeff(&part("1,1")).to_string() == "q",
                || format!("table for (2): {:?}", t.entries),
            )?;
            let t = kostka_macdonald_oracle(&part("1,1"), budget).map_err(|e| e.to_string())?;
            ensure(
                t.entries.coeff(&part("2")).to_string() == "1"
                    && t.entries.coeff(&part("1,1")).to_string() == "t",
                || format!("table for (1,1): {:?}", t.entries),
            )?;
            let t = kostka_macdonald_oracle(&part("2,1"), budget).map_err(|e| e.to_string())?;
            ensure(
                t.entries.coeff(&part("3")).to_string() == "1"
                    && t.entries.coeff(&part("2,1")).to_string() == "t + q"
                    && t.entries.coeff(&part("1,1,1")).to_string() == "q*t",
                || format!("table for (2,1): {:?}", t.entries),
            )?;
            Ok((3, String::new()))
        }),
        run(Suite::Folding, "coefficients specialize to tableau counts", || {
            let budget = EnumerationBudget::default();
            let mut cases = 0u64;
            for n in 1..=n_spec {
                for mu in Partition::all_of(n) {
                    let t = kostka_macdonald_oracle(&mu, budget).map_err(|e| e.to_string())?;
                    for lambda in Partition::all_of(n) {
                        ensure(
                            t.entries.coeff(&lambda).eval_at_one() == syt_count(&lambda) as i64,
                            || format!("K~({lambda},{mu}) at q=t=1"),
                        )?;
                        cases += 1;
                    }
                }
            }
            Ok((cases, format!("pairs over n <= {n_spec}")))
        }),
    ]
}

// ---------------------------------------------------------------------------
// conjecture
// ---------------------------------------------------------------------------

fn conjecture_suite(cfg: &VerifyConfig) -> Vec<CheckOutcome> {
    let n_pos = cfg.bound(8);
    let n_scan = cfg.bound(7);
    vec![
        run(Suite::Conjecture, "enumerated coefficients are nonnegative", || {
            let budget = EnumerationBudget::with_max_n(n_pos);
            let mut cases = 0u64;
            for n in 1..=n_pos {
                for mu in Partition::all_of(n) {
                    let t = kostka_macdonald_oracle(&mu, budget).map_err(|e| e.to_string())?;
                    ensure(t.entries.is_nonnegative(), || format!("negative entry for ({mu})"))?;
                    cases += 1;
                }
            }
            Ok((cases, format!("shapes over n <= {n_pos}")))
        }),
        run(Suite::Conjecture, "class scan reports no failures", || {
            let budget = EnumerationBudget::with_max_n(n_scan);
            let mut cases = 0u64;
            for n in 1..=n_scan {
                let report = conjecture_scan(n, budget).map_err(|e| e.to_string())?;
                ensure(report.passed(), || {
                    format!(
                        "n={n}: {} failing classes, first: {:?}",
                        report.failures.len(),
                        report.failures.first()
                    )
                })?;
                cases += report.classes_checked;
            }
            Ok((cases, format!("classes over n <= {n_scan}")))
        }),
    ]
}
