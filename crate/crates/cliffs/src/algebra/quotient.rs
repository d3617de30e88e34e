//! Soundness checks for the quotient algebras on a family of words.
//!
//! Dropping non-members from the box product is only well defined when
//! the family is closed by prefix and by suffix reduction, and the
//! quotient has the interval property when every product support is a
//! full order interval of its graded slice.  Both checks run the honest
//! definitions over a bounded range.

use crate::families::Family;
use crate::subset::GradedSubset;
use crate::words::Word;
use std::collections::BTreeSet;

use super::product::product_support;

/// Checks that the family is closed by prefix and that the reduction of
/// every suffix of a member is again a member, for all sizes up to
/// `n_max`.  These closures make the span of the non-members a two-sided
/// ideal of the box algebra.
pub fn quotient_wellformed<S: GradedSubset + ?Sized>(s: &S, n_max: usize) -> bool {
    let delta = s.delta().clone();
    for n in 0..=n_max {
        for u in s.elements(n) {
            for k in 0..n {
                if !s.contains(&u.prefix(k)) {
                    return false;
                }
            }
            for k in 0..n {
                let suffix = Word::new(u.letters()[k..].to_vec());
                if !s.contains(&suffix.reduce(&delta)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Checks that every product support of total size at most `degree_cap`
/// is empty or a full order interval of the family slice, with a unique
/// bottom and top.  Returns the first failing factor pair as a witness.
pub fn interval_condition_check(
    ambient: &Family,
    degree_cap: usize,
) -> Option<(Word, Word)> {
    let slices: Vec<Vec<Word>> = (0..=degree_cap).map(|n| ambient.elements(n)).collect();
    for total in 0..=degree_cap {
        for i in 0..=total {
            for u in &slices[i] {
                for v in &slices[total - i] {
                    let support = product_support(ambient, u, v);
                    if support.is_empty() {
                        continue;
                    }
                    let bottom = support.iter().find(|a| support.iter().all(|w| a.leq(w)));
                    let top = support.iter().find(|b| support.iter().all(|w| w.leq(b)));
                    let (Some(bottom), Some(top)) = (bottom, top) else {
                        return Some((u.clone(), v.clone()));
                    };
                    let interval: BTreeSet<Word> = slices[total]
                        .iter()
                        .filter(|w| bottom.leq(w) && w.leq(top))
                        .cloned()
                        .collect();
                    if interval != support.iter().cloned().collect() {
                        return Some((u.clone(), v.clone()));
                    }
                }
            }
        }
    }
    None
}
