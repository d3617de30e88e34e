//! Last-letter derivation of word posets and the contraction chain that
//! certifies a family as constructible by interval doubling.
//!
//! The derivation decrements the last letter of every word whose last
//! letter is maximal in the poset.  On a nested family this merges pairs of
//! elements along an interval, so running it until all last letters vanish
//! and then stripping the trailing zero walks the family down one size.
//! The runner here replays that walk and verifies every step against Day's
//! doubling construction by explicit isomorphism search.

use crate::error::{CliffError, Result};
use crate::poset::{build_poset, Poset};
use crate::range_map::Letter;
use crate::subset::GradedSubset;
use crate::words::Word;
use std::collections::BTreeSet;

/// One application of the last-letter derivation.
#[derive(Debug, Clone)]
pub struct Derivation {
    /// Largest last letter of the input elements; 0 on degenerate inputs.
    pub m: Letter,
    /// Pairs (element, image) in the element order of the input poset.
    pub map: Vec<(Word, Word)>,
    /// The image set under the componentwise order.
    pub derived: Poset<Word>,
}

/// Decrements the last letter of every word whose last letter equals the
/// maximum over the poset; other words are fixed.  The image may leave the
/// family the input was built from.
pub fn derivation(p: &Poset<Word>) -> Derivation {
    let n = p.elements().first().map_or(0, Word::len);
    let m = if n == 0 {
        0
    } else {
        p.elements().iter().map(|u| u.at(n)).max().unwrap_or(0)
    };
    if m == 0 {
        return Derivation {
            m,
            map: p.elements().iter().map(|u| (u.clone(), u.clone())).collect(),
            derived: p.clone(),
        };
    }
    let map: Vec<(Word, Word)> = p
        .elements()
        .iter()
        .map(|u| {
            let image = if u.at(n) == m {
                let mut letters = u.letters().to_vec();
                letters[n - 1] -= 1;
                Word::new(letters)
            } else {
                u.clone()
            };
            (u.clone(), image)
        })
        .collect();
    let images: Vec<Word> = map.iter().map(|(_, v)| v.clone()).collect();
    Derivation {
        m,
        map,
        derived: Poset::new(images, Word::leq),
    }
}

/// Is the family nested at size `n`: writing `m` for the largest last
/// letter, every word `0^(n-1) a` with `a <= m` is a member, and for each
/// `a` the set of members ending in `a`, with the last letter overwritten
/// by `m`, stays inside the family and forms an interval of its poset.
pub fn nested_check<S: GradedSubset + ?Sized>(s: &S, n: usize) -> bool {
    if n == 0 {
        return s.contains(&Word::empty());
    }
    let poset = match build_poset(s, n, None) {
        Ok(p) => p,
        Err(_) => return false,
    };
    if poset.is_empty() {
        return false;
    }
    let m = poset.elements().iter().map(|u| u.at(n)).max().unwrap();
    for a in 0..=m {
        let mut spine = vec![0; n - 1];
        spine.push(a);
        if !s.contains(&Word::new(spine)) {
            return false;
        }
        let mut raised = Vec::new();
        for u in poset.elements() {
            if u.at(n) != a {
                continue;
            }
            let mut letters = u.letters().to_vec();
            letters[n - 1] = m;
            raised.push(Word::new(letters));
        }
        let indices: Option<Vec<usize>> = raised.iter().map(|v| poset.index_of(v)).collect();
        match indices {
            // Membership of every raised word doubles as the subset check.
            Some(ix) => {
                if !poset.is_interval_set(&ix) {
                    return false;
                }
            }
            None => return false,
        }
    }
    true
}

/// One verified doubling step of the contraction chain.
#[derive(Debug, Clone)]
pub struct DoublingStep {
    /// Word size at which the step happens.
    pub size: usize,
    /// The larger poset, before the derivation.
    pub before: Poset<Word>,
    /// The image poset after the derivation.
    pub after: Poset<Word>,
    /// Indices into `after` of the doubled interval (the images with two
    /// preimages).
    pub interval: Vec<usize>,
}

/// Runs the derivation chain from size `n` all the way down to the empty
/// word.  Each returned step is verified: the two-preimage images form an
/// interval of the derived poset, and doubling that interval rebuilds the
/// larger poset up to isomorphism.  Between sizes, the all-zero last
/// letters are stripped and the result is compared with the family slice
/// one size down.
pub fn contraction_sequence<S: GradedSubset + ?Sized>(
    s: &S,
    n: usize,
) -> Result<Vec<DoublingStep>> {
    if s.delta().at(1) != 0 {
        return Err(CliffError::ContractionPrecondition {
            reason: "bound at position 1 must be 0".into(),
        });
    }
    if !s.contains(&Word::empty()) {
        return Err(CliffError::ContractionPrecondition {
            reason: "empty word must be a member".into(),
        });
    }
    for k in 1..=n {
        if !nested_check(s, k) {
            return Err(CliffError::ContractionPrecondition {
                reason: format!("family is not nested at size {k}"),
            });
        }
    }
    let mut steps: Vec<DoublingStep> = Vec::new();
    for k in (1..=n).rev() {
        let mut current = build_poset(s, k, None)?;
        loop {
            let d = derivation(&current);
            if d.m == 0 {
                break;
            }
            let step_index = steps.len() + 1;
            let interval = verify_step(&current, &d, step_index)?;
            let after = d.derived;
            let next_m = derivation(&after).m;
            if next_m + 1 != d.m {
                return Err(CliffError::DoublingFailed {
                    step: step_index,
                    reason: format!("largest last letter fell from {} to {next_m}", d.m),
                });
            }
            steps.push(DoublingStep {
                size: k,
                before: current,
                after: after.clone(),
                interval,
            });
            current = after;
        }
        let stripped: BTreeSet<Word> = current
            .elements()
            .iter()
            .map(|u| u.prefix(k - 1))
            .collect();
        let target: BTreeSet<Word> = s.elements(k - 1).into_iter().collect();
        if stripped != target {
            return Err(CliffError::DoublingFailed {
                step: steps.len(),
                reason: format!(
                    "stripping the trailing zero at size {k} does not reach the family at size {}",
                    k - 1
                ),
            });
        }
    }
    Ok(steps)
}

/// Checks one derivation step: preimage fibers have size one or two, the
/// two-preimage images form an interval, and Day-doubling that interval in
/// the derived poset gives back the input poset.
fn verify_step(before: &Poset<Word>, d: &Derivation, step: usize) -> Result<Vec<usize>> {
    let mut fiber = vec![0usize; d.derived.len()];
    for (_, image) in &d.map {
        let i = d
            .derived
            .index_of(image)
            .expect("derived poset carries every image");
        fiber[i] += 1;
    }
    if let Some(i) = (0..fiber.len()).find(|&i| fiber[i] > 2) {
        return Err(CliffError::DoublingFailed {
            step,
            reason: format!(
                "image {} has {} preimages under the derivation",
                d.derived.element(i),
                fiber[i]
            ),
        });
    }
    let interval: Vec<usize> = (0..fiber.len()).filter(|&i| fiber[i] == 2).collect();
    if !d.derived.is_interval_set(&interval) {
        return Err(CliffError::DoublingFailed {
            step,
            reason: "the doubled-image set is not an interval".into(),
        });
    }
    let doubled = d.derived.doubled(&interval);
    if before.isomorphism_to(&doubled).is_none() {
        return Err(CliffError::DoublingFailed {
            step,
            reason: "doubling the image interval does not rebuild the input poset".into(),
        });
    }
    Ok(interval)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;
    use crate::range_map::RangeMap;
    use crate::subset::FullBox;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn st(m: Letter) -> RangeMap {
        RangeMap::staircase(m)
    }

    #[test]
    fn derivation_decrements_maximal_last_letters() {
        let hills = build_poset(&Family::hill(st(1)), 2, None).unwrap();
        let d = derivation(&hills);
        assert_eq!(d.m, 1);
        assert_eq!(d.derived.elements(), &[w("00")]);

        let canyons = build_poset(&Family::canyon(st(1)), 3, None).unwrap();
        let d = derivation(&canyons);
        assert_eq!(d.m, 2);
        assert_eq!(
            d.derived.elements(),
            &["000", "001", "010", "011"].map(|s| w(s))
        );
        // 011 left the canyon family: the derivation ignores membership.
        assert_eq!(
            d.map
                .iter()
                .filter(|(u, v)| u != v)
                .map(|(u, v)| (u.to_string(), v.to_string()))
                .collect::<Vec<_>>(),
            [("0,0,2", "0,0,1"), ("0,1,2", "0,1,1")]
                .map(|(a, b)| (a.to_string(), b.to_string()))
        );
    }

    #[test]
    fn derivation_of_the_point_is_the_point() {
        let point = build_poset(&Family::hill(st(1)), 0, None).unwrap();
        let d = derivation(&point);
        assert_eq!(d.m, 0);
        assert_eq!(d.derived.elements(), point.elements());
    }

    #[test]
    fn nestedness_of_small_families() {
        assert!(nested_check(&Family::hill(st(1)), 3));
        assert!(nested_check(&Family::canyon(st(2)), 3));
        assert!(nested_check(&FullBox::new(st(1)), 2));
        assert!(nested_check(&Family::hill(st(2)), 0));
        // Avalanches break nestedness: raising 010 to last letter 2 gives
        // 012, whose full weight exceeds the bound.
        assert!(!nested_check(&Family::avalanche(st(1)), 3));
    }

    #[test]
    fn canyon_chain_has_three_verified_steps() {
        let steps = contraction_sequence(&Family::canyon(st(1)), 3).unwrap();
        assert_eq!(steps.len(), 3);
        assert_eq!(
            steps.iter().map(|s| s.size).collect::<Vec<_>>(),
            vec![3, 3, 2]
        );
    }

    #[test]
    fn hill_two_chain_contracts_to_a_point() {
        let steps = contraction_sequence(&Family::hill(st(1)), 2).unwrap();
        assert_eq!(steps.len(), 1);
        let step = &steps[0];
        assert_eq!(step.before.elements(), &[w("00"), w("01")]);
        assert_eq!(step.after.elements(), &[w("00")]);
        assert_eq!(step.interval, vec![0]);
    }

    #[test]
    fn wide_hill_slice_needs_four_steps_at_size_three() {
        let steps = contraction_sequence(&Family::hill(st(2)), 3).unwrap();
        assert_eq!(steps.iter().filter(|s| s.size == 3).count(), 4);
    }

    #[test]
    fn preconditions_are_reported() {
        let shifted = Family::cliff(RangeMap::constant(1));
        assert!(matches!(
            contraction_sequence(&shifted, 2),
            Err(CliffError::ContractionPrecondition { .. })
        ));
        assert!(matches!(
            contraction_sequence(&Family::avalanche(st(1)), 3),
            Err(CliffError::ContractionPrecondition { .. })
        ));
    }
}
