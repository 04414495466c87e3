//! The folding bijections that transport the column shape (1^n) to a target
//! shape with second part at most 2: per-block rotations gamma keyed by a
//! pivot letter, prefix folds phi_k, straddle-driven adjacent swaps beta,
//! windowed swaps sigma, and the two-row folds phi_(a,b).
//!
//! Every map here preserves the inverse descent set of the whole word and is
//! a bijection on S_n for fixed parameters.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::{Permutation, Word};

fn check_absent(x: u8, w: &[u8]) -> Result<()> {
    if w.contains(&x) {
        return Err(Error::LetterInWord {
            letter: x,
            word: Word::new(w.to_vec()).map_or_else(|_| format!("{w:?}"), |v| v.to_string()),
        });
    }
    Ok(())
}

// 0-based indices at which a new block of Gamma_x starts; index 0 always
// starts one. Breaks fall before letters on the same side of x as the first
// letter.
fn gamma_boundaries(x: u8, w: &[u8]) -> Vec<usize> {
    if w.is_empty() {
        return Vec::new();
    }
    let first_small = w[0] < x;
    (0..w.len())
        .filter(|&i| (w[i] < x) == first_small)
        .collect()
}

pub(crate) fn gamma_in_place(x: u8, w: &mut [u8]) {
    if w.is_empty() {
        return;
    }
    let bounds = gamma_boundaries(x, w);
    for (k, &start) in bounds.iter().enumerate() {
        let end = bounds.get(k + 1).copied().unwrap_or(w.len());
        w[start..end].rotate_left(1);
    }
}

pub(crate) fn gamma_inverse_in_place(x: u8, w: &mut [u8]) {
    if w.is_empty() {
        return;
    }
    // the image of gamma_x ends each block with its pivot-side letter, so
    // break after letters on the same side of x as the last letter and cycle
    // the last letter of each block to the front
    let last_small = *w.last().unwrap() < x;
    let mut start = 0;
    for i in 0..w.len() {
        if (w[i] < x) == last_small {
            w[start..=i].rotate_right(1);
            start = i + 1;
        }
    }
    debug_assert_eq!(start, w.len());
}

/// The block partition of a word induced by the pivot letter x.
pub fn gamma_blocks(x: u8, w: &Word) -> Result<Vec<Word>> {
    check_absent(x, w.letters())?;
    let letters = w.letters();
    let bounds = gamma_boundaries(x, letters);
    Ok(bounds
        .iter()
        .enumerate()
        .map(|(k, &start)| {
            let end = bounds.get(k + 1).copied().unwrap_or(letters.len());
            Word::new(letters[start..end].to_vec()).expect("subword of a word")
        })
        .collect())
}

/// Cycle the first letter of each block to the end of the block.
pub fn gamma(x: u8, w: &Word) -> Result<Word> {
    check_absent(x, w.letters())?;
    let mut letters = w.letters().to_vec();
    gamma_in_place(x, &mut letters);
    Ok(Word::new(letters).expect("rearranged word"))
}

/// Inverse of `gamma`: blocks are read off the image by breaking after each
/// letter on the pivot side, cycling last letters back to the front.
pub fn gamma_inverse(x: u8, v: &Word) -> Result<Word> {
    check_absent(x, v.letters())?;
    let mut letters = v.letters().to_vec();
    gamma_inverse_in_place(x, &mut letters);
    Ok(Word::new(letters).expect("rearranged word"))
}

/// Fold the suffix after position k: the prefix stays, gamma keyed by the
/// k-th letter acts on the rest.
pub fn phi_k(k: usize, w: &Permutation) -> Result<Permutation> {
    let n = w.n();
    if k < 1 || k >= n {
        return Err(Error::IndexOutOfRange {
            index: k,
            min: 1,
            max: n.saturating_sub(1),
        });
    }
    let mut letters = w.letters().to_vec();
    let x = letters[k - 1];
    gamma_in_place(x, &mut letters[k..]);
    Ok(Permutation::from_slice_unchecked(&letters))
}

fn between(v: u8, a: u8, b: u8) -> bool {
    a.min(b) < v && v < a.max(b)
}

// 0-based swap positions of beta_x: start at 0 when x straddles the first
// pair, then advance by two while exactly one of the current pair straddles
// the next pair; the chain needs the next pair to exist in full.
pub(crate) fn beta_indices_raw(x: u8, w: &[u8]) -> Vec<usize> {
    let n = w.len();
    let mut out = Vec::new();
    if n < 2 || !between(x, w[0], w[1]) {
        return out;
    }
    out.push(0);
    let mut i = 0;
    while i + 3 < n {
        let lo = between(w[i], w[i + 2], w[i + 3]);
        let hi = between(w[i + 1], w[i + 2], w[i + 3]);
        if lo != hi {
            out.push(i + 2);
            i += 2;
        } else {
            break;
        }
    }
    out
}

pub(crate) fn beta_in_place(x: u8, w: &mut [u8]) {
    for i in beta_indices_raw(x, w) {
        w.swap(i, i + 1);
    }
}

/// The recursively defined swap set of beta_x, as 1-based indices.
pub fn beta_indices(x: u8, w: &Word) -> Result<Vec<usize>> {
    check_absent(x, w.letters())?;
    Ok(beta_indices_raw(x, w.letters())
        .into_iter()
        .map(|i| i + 1)
        .collect())
}

/// Swap the two letters at each index of the swap set; an involution.
pub fn beta(x: u8, w: &Word) -> Result<Word> {
    check_absent(x, w.letters())?;
    let mut letters = w.letters().to_vec();
    beta_in_place(x, &mut letters);
    Ok(Word::new(letters).expect("rearranged word"))
}

/// Apply beta keyed by the k-th letter to the window of the next m letters.
pub fn sigma(k: usize, m: usize, w: &Permutation) -> Result<Permutation> {
    let n = w.n();
    if k < 1 {
        return Err(Error::IndexOutOfRange {
            index: k,
            min: 1,
            max: n,
        });
    }
    if k + m > n {
        return Err(Error::IndexOutOfRange {
            index: k + m,
            min: k,
            max: n,
        });
    }
    let mut letters = w.letters().to_vec();
    let x = letters[k - 1];
    beta_in_place(x, &mut letters[k..k + m]);
    Ok(Permutation::from_slice_unchecked(&letters))
}

/// One two-row fold: two sigma passes over the window of length 2b+2, then a
/// phi fold of the tail when the second pass moved the letter at position
/// a+2b+1.
pub fn phi_ab(a: usize, b: usize, w: &Permutation) -> Result<Permutation> {
    Ok(phi_ab_steps(a, b, w)?.0)
}

// (result, beta keys, gamma key when the tail fold fired)
fn phi_ab_steps(a: usize, b: usize, w: &Permutation) -> Result<(Permutation, [u8; 2], Option<u8>)> {
    let n = w.n();
    // the second pass keys on the letter at position a-1
    if a < 2 {
        return Err(Error::IndexOutOfRange {
            index: a,
            min: 2,
            max: n,
        });
    }
    let m = 2 * b + 2;
    if a + m > n {
        return Err(Error::IndexOutOfRange {
            index: a + m,
            min: a,
            max: n,
        });
    }
    let z1 = w.letters()[a - 1];
    let u = sigma(a, m, w)?;
    let z2 = u.letters()[a - 2];
    let v = sigma(a - 1, m, &u)?;
    let pivot = a + 2 * b + 1;
    // The tail fold compensates a letter migrating through the window's last
    // position. When the second pass's swap of the final pair exchanges two
    // values that straddle a single value (consecutive neighbors m-1, m+1),
    // it is an equivalence adjustment rather than a migration and the tail
    // stays put.
    let changed = v.letters()[pivot - 1] != u.letters()[pivot - 1];
    if changed {
        let p = u.letters()[pivot - 2];
        let q = u.letters()[pivot - 1];
        let neighbor_swap = p.abs_diff(q) == 2;
        if !neighbor_swap {
            let g = v.letters()[pivot - 1];
            return Ok((phi_k(pivot, &v)?, [z1, z2], Some(g)));
        }
    }
    Ok((v, [z1, z2], None))
}

/// One entry of a folding trace.
#[derive(Clone, Debug, Serialize)]
pub struct FoldStep {
    pub label: String,
    pub word: Permutation,
    pub shape: Partition,
}

/// The intermediate words and shapes of a full folding pipeline, starting
/// from the column shape.
#[derive(Clone, Debug, Serialize)]
pub struct FoldTrace {
    pub steps: Vec<FoldStep>,
}

// Split mu = (mu_1, 2^b, 1^a); requires every part after the first <= 2.
fn fold_profile(mu: &Partition) -> Result<(usize, usize)> {
    if mu.second_part() > 2 {
        return Err(Error::UnsupportedShape {
            shape: mu.to_string(),
        });
    }
    let rest = &mu.parts()[1..];
    let b = rest.iter().filter(|&&p| p == 2).count();
    let a = rest.iter().filter(|&&p| p == 1).count();
    Ok((a, b))
}

fn hook_shape(n: usize, arm_end: usize) -> Partition {
    let mut parts = vec![(n - arm_end + 1) as u8];
    parts.extend(std::iter::repeat_n(1, arm_end - 1));
    Partition::new(parts).expect("hook shape")
}

fn two_row_shape(first: usize, twos: usize, ones: usize) -> Partition {
    let mut parts = vec![first as u8];
    parts.extend(std::iter::repeat_n(2, twos));
    parts.extend(std::iter::repeat_n(1, ones));
    Partition::new(parts).expect("two-row shape")
}

fn fold_pipeline(
    mu: &Partition,
    w: &Permutation,
    mut trace: Option<&mut FoldTrace>,
) -> Result<Permutation> {
    let n = w.n();
    if mu.n() != n {
        return Err(Error::SizeMismatch {
            shape: mu.to_string(),
            shape_n: mu.n(),
            word_n: n,
        });
    }
    let (a, b) = fold_profile(mu)?;
    let leg = a + 2 * b;
    let first = n - leg;

    let mut current = w.clone();
    if let Some(trace) = trace.as_deref_mut() {
        trace.steps.push(FoldStep {
            label: "start".into(),
            word: current.clone(),
            shape: Partition::column(n),
        });
    }
    // grow the arm of the hook: phi_{n-1}, ..., phi_{leg+1}
    for k in ((leg + 1)..n).rev() {
        let key = current.letters()[k - 1];
        current = phi_k(k, &current)?;
        if let Some(trace) = trace.as_deref_mut() {
            trace.steps.push(FoldStep {
                label: format!("phi_{k} (gamma_{key})"),
                word: current.clone(),
                shape: hook_shape(n, k),
            });
        }
    }
    // fold the leg into the second column: phi_(a+2b,0), ..., phi_(a+2,b-1)
    for t in 0..b {
        let a_t = a + 2 * (b - t);
        let (next, betas, gamma_key) = phi_ab_steps(a_t, t, &current)?;
        current = next;
        if let Some(trace) = trace.as_deref_mut() {
            let mut parts = format!("beta_{}, beta_{}", betas[0], betas[1]);
            if let Some(g) = gamma_key {
                parts.push_str(&format!(", gamma_{g}"));
            }
            trace.steps.push(FoldStep {
                label: format!("phi_({a_t},{t}) ({parts})"),
                word: current.clone(),
                shape: two_row_shape(first, t + 1, a_t - 2),
            });
        }
    }
    Ok(current)
}

/// The full folding map for a shape with second part at most 2.
///
/// Writing the shape as (m, 2^b, 1^a), the pipeline applies the hook folds
/// phi_{n-1}, ..., phi_{a+2b+1}, growing the bottom row one cell at a time,
/// and then the row folds phi_(a+2b,0), phi_(a+2b-2,1), ..., phi_(a+2,b-1),
/// each moving the two lowest leg cells into a new width-2 row.
pub fn phi_mu(mu: &Partition, w: &Permutation) -> Result<Permutation> {
    fold_pipeline(mu, w, None)
}

/// The full folding map together with its step-by-step trace.
pub fn phi_mu_with_trace(mu: &Partition, w: &Permutation) -> Result<(Permutation, FoldTrace)> {
    let mut trace = FoldTrace { steps: Vec::new() };
    let result = fold_pipeline(mu, w, Some(&mut trace))?;
    Ok((result, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expansion::DescentSubset;
    use crate::filling::ShapeGeometry;
    use crate::perm::for_each_permutation;
    use crate::stats::inverse_descents;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn gamma_block_examples() {
        let blocks = gamma_blocks(5, &word("83691724")).unwrap();
        let rendered: Vec<String> = blocks.iter().map(|b| b.to_string()).collect();
        assert_eq!(rendered, vec!["83", "6", "91", "724"]);

        let blocks = gamma_blocks(6, &word("91724")).unwrap();
        let rendered: Vec<String> = blocks.iter().map(|b| b.to_string()).collect();
        assert_eq!(rendered, vec!["91", "724"]);

        assert_eq!(gamma_blocks(4, &word("7")).unwrap().len(), 1);
        assert!(gamma_blocks(8, &word("83691724")).is_err());
        assert!(gamma_blocks(5, &Word::new(vec![]).unwrap()).unwrap().is_empty());
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma(5, &word("83691724")).unwrap(), word("38619247"));
        assert_eq!(gamma(4, &word("7")).unwrap(), word("7"));
        assert_eq!(gamma(9, &word("2")).unwrap(), word("2"));
    }

    #[test]
    fn gamma_inverse_examples() {
        assert_eq!(gamma_inverse(5, &word("38619247")).unwrap(), word("83691724"));
        assert_eq!(gamma_inverse(4, &word("7")).unwrap(), word("7"));
    }

    #[test]
    fn phi_k_examples() {
        assert_eq!(phi_k(4, &perm("583691724")).unwrap(), perm("583619247"));
        for w in ["3142", "583691724"] {
            let w = perm(w);
            assert_eq!(phi_k(w.n() - 1, &w).unwrap(), w);
        }
        assert_eq!(phi_k(7, &perm("841567392")).unwrap(), perm("841567329"));
        assert_eq!(phi_k(6, &perm("841567329")).unwrap(), perm("841567392"));
        assert!(phi_k(0, &perm("3142")).is_err());
        assert!(phi_k(4, &perm("3142")).is_err());
    }

    #[test]
    fn beta_index_examples() {
        assert_eq!(beta_indices(5, &word("83691724")).unwrap(), vec![1, 3, 5]);
        assert_eq!(beta_indices(4, &word("1536")).unwrap(), vec![1, 3]);
        assert_eq!(beta_indices(6, &word("73")).unwrap(), vec![1]);
        // 1 is never strictly between two larger letters
        for w in ["5367", "8369724", "42"] {
            assert!(beta_indices(1, &word(w)).unwrap().is_empty());
        }
        assert!(beta_indices(4, &word("1436")).is_err());
    }

    #[test]
    fn beta_examples() {
        assert_eq!(beta(5, &word("83691724")).unwrap(), word("38967124"));
        assert_eq!(beta(6, &word("73")).unwrap(), word("37"));
        assert_eq!(beta(1, &word("5367")).unwrap(), word("5367"));
        assert!(beta(3, &word("5367")).is_err());
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(5, 2, &perm("841567392")).unwrap(), perm("841563792"));
        assert_eq!(sigma(4, 2, &perm("841563792")).unwrap(), perm("841536792"));
        for w in ["3142", "841567392"] {
            let w = perm(w);
            for k in 1..w.n() {
                assert_eq!(sigma(k, 1, &w).unwrap(), w, "sigma({k},1)");
            }
        }
        assert!(sigma(0, 2, &perm("3142")).is_err());
        assert!(sigma(3, 2, &perm("3142")).is_err());
    }

    #[test]
    fn phi_ab_examples() {
        assert_eq!(phi_ab(5, 0, &perm("841567392")).unwrap(), perm("841536729"));
        assert_eq!(phi_ab(3, 1, &perm("841536729")).unwrap(), perm("845163279"));
        // both windows act as the identity
        assert_eq!(phi_ab(2, 0, &perm("123456")).unwrap(), perm("123456"));
        assert!(phi_ab(1, 0, &perm("3142")).is_err());
        assert!(phi_ab(3, 1, &perm("3142")).is_err());
    }

    #[test]
    fn phi_mu_examples() {
        let hook: Partition = "4,1,1,1,1,1".parse().unwrap();
        assert_eq!(phi_mu(&hook, &perm("841567392")).unwrap(), perm("841567392"));

        let mu: Partition = "4,2,2,1".parse().unwrap();
        assert_eq!(phi_mu(&mu, &perm("841567392")).unwrap(), perm("845163279"));

        for n in [3usize, 5, 7] {
            let column = Partition::column(n);
            for_each_permutation(n, |w| {
                let p = Permutation::from_slice_unchecked(w);
                assert_eq!(phi_mu(&column, &p).unwrap(), p);
            });
        }

        let bad: Partition = "3,3,1".parse().unwrap();
        assert!(matches!(
            phi_mu(&bad, &perm("1234567")),
            Err(Error::UnsupportedShape { .. })
        ));
    }

    #[test]
    fn hook_trace_shapes_and_words() {
        let hook: Partition = "4,1,1,1,1,1".parse().unwrap();
        let (result, trace) = phi_mu_with_trace(&hook, &perm("841567392")).unwrap();
        assert_eq!(result, perm("841567392"));
        let rows: Vec<(String, String)> = trace
            .steps
            .iter()
            .map(|s| (s.word.to_string(), s.shape.to_string()))
            .collect();
        assert_eq!(
            rows,
            vec![
                ("841567392".into(), "1,1,1,1,1,1,1,1,1".into()),
                ("841567392".into(), "2,1,1,1,1,1,1,1".into()),
                ("841567329".into(), "3,1,1,1,1,1,1".into()),
                ("841567392".into(), "4,1,1,1,1,1".into()),
            ]
        );
        assert!(trace.steps[1].label.contains("gamma_9"));
        assert!(trace.steps[2].label.contains("gamma_3"));
        assert!(trace.steps[3].label.contains("gamma_7"));
    }

    #[test]
    fn two_row_trace_matches_figures() {
        let mu: Partition = "4,2,2,1".parse().unwrap();
        let (result, trace) = phi_mu_with_trace(&mu, &perm("841567392")).unwrap();
        assert_eq!(result, perm("845163279"));
        // five hook steps (start + three folds) then two row folds
        assert_eq!(trace.steps.len(), 6);
        let rows: Vec<(String, String)> = trace
            .steps
            .iter()
            .skip(4)
            .map(|s| (s.word.to_string(), s.shape.to_string()))
            .collect();
        assert_eq!(
            rows,
            vec![
                ("841536729".into(), "4,2,1,1,1".into()),
                ("845163279".into(), "4,2,2,1".into()),
            ]
        );
        assert!(trace.steps[4].label.starts_with("phi_(5,0)"));
        assert!(trace.steps[4].label.contains("beta_6"));
        assert!(trace.steps[4].label.contains("beta_5"));
        assert!(trace.steps[4].label.contains("gamma_6"));
        assert!(trace.steps[5].label.starts_with("phi_(3,1)"));
        assert!(trace.steps[5].label.contains("beta_1"));
        assert!(trace.steps[5].label.contains("beta_4"));
        assert!(trace.steps[5].label.contains("gamma_3"));

        // inverse descents stay fixed and the shape statistics follow the
        // advertised weights
        let expect = DescentSubset::new(9, [2, 3, 7]).unwrap();
        for step in &trace.steps {
            assert_eq!(inverse_descents(&step.word), expect, "{}", step.label);
        }
        let weights: Vec<(usize, usize)> = trace
            .steps
            .iter()
            .map(|s| ShapeGeometry::new(&s.shape).stats(s.word.letters()))
            .collect();
        assert_eq!(
            weights,
            vec![(0, 17), (1, 9), (1, 9), (4, 3), (3, 3), (2, 5)]
        );
    }

    #[test]
    fn ides_preserved_exhaustively_small() {
        for n in 2..=6 {
            for_each_permutation(n, |w| {
                let p = Permutation::from_slice_unchecked(w);
                let ides = inverse_descents(&p);
                for k in 1..n {
                    assert_eq!(inverse_descents(&phi_k(k, &p).unwrap()), ides);
                }
                for k in 1..=n {
                    for m in 0..=(n - k) {
                        assert_eq!(inverse_descents(&sigma(k, m, &p).unwrap()), ides);
                    }
                }
                for mu in Partition::all_of(n) {
                    if mu.second_part() <= 2 {
                        assert_eq!(inverse_descents(&phi_mu(&mu, &p).unwrap()), ides);
                    }
                }
            });
        }
    }

    #[test]
    fn fold_maps_are_bijections_small() {
        for n in 2..=6 {
            let mut maps: Vec<Box<dyn Fn(&Permutation) -> Permutation>> = Vec::new();
            for k in 1..n {
                maps.push(Box::new(move |w| phi_k(k, w).unwrap()));
            }
            for mu in Partition::all_of(n) {
                if mu.second_part() <= 2 {
                    maps.push(Box::new(move |w| phi_mu(&mu, w).unwrap()));
                }
            }
            for map in &maps {
                let mut images = BTreeSet::new();
                for_each_permutation(n, |w| {
                    let img = map(&Permutation::from_slice_unchecked(w));
                    assert!(images.insert(img.letters().to_vec()));
                });
            }
        }
    }

    #[test]
    fn sigma_is_an_involution_small() {
        for n in 2..=6 {
            for_each_permutation(n, |w| {
                let p = Permutation::from_slice_unchecked(w);
                for k in 1..=n {
                    for m in 0..=(n - k) {
                        let once = sigma(k, m, &p).unwrap();
                        assert_eq!(sigma(k, m, &once).unwrap(), p);
                    }
                }
            });
        }
    }

    #[test]
    fn classical_equidistribution_small() {
        use std::collections::BTreeMap;
        for n in 2..=7 {
            let row = Partition::row(n);
            let row_geom = ShapeGeometry::new(&row);
            let col_geom = ShapeGeometry::new(&Partition::column(n));
            let mut maj_dist: BTreeMap<usize, usize> = BTreeMap::new();
            let mut inv_dist: BTreeMap<usize, usize> = BTreeMap::new();
            for_each_permutation(n, |w| {
                *maj_dist.entry(col_geom.maj(w)).or_default() += 1;
                let image = phi_mu(&row, &Permutation::from_slice_unchecked(w)).unwrap();
                *inv_dist.entry(row_geom.inv(image.letters())).or_default() += 1;
            });
            assert_eq!(maj_dist, inv_dist);
        }
    }

    fn arb_pivot_and_word() -> impl Strategy<Value = (u8, Vec<u8>)> {
        // shuffle a span of letters, split off the first as the pivot
        (2usize..=12)
            .prop_flat_map(|len| Just((1..=(len as u8 + 4)).collect::<Vec<u8>>()).prop_shuffle()
                .prop_map(move |v| (v[0], v[1..len].to_vec())))
    }

    proptest! {
        #[test]
        fn gamma_round_trip((x, letters) in arb_pivot_and_word()) {
            let w = Word::new(letters).unwrap();
            let image = gamma(x, &w).unwrap();
            prop_assert_eq!(gamma_inverse(x, &image).unwrap(), w);
        }

        #[test]
        fn beta_involution((x, letters) in arb_pivot_and_word()) {
            let w = Word::new(letters).unwrap();
            let image = beta(x, &w).unwrap();
            prop_assert_eq!(beta(x, &image).unwrap(), w);
        }
    }
}
