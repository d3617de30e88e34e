//! Prime words, unique factorization, and the truncated presentation of
//! the algebra by generators and relations.
//!
//! A word is prime when no proper suffix is itself valid for the bound
//! map; cutting at every position with a valid suffix and repeating on the
//! pieces yields the unique factorization into primes.  For an associative
//! algebra the primes generate, and the minimal vanishing monomials found
//! below present it up to the degree cap.

use crate::error::{CliffError, Result};
use crate::range_map::RangeMap;
use crate::subset::{FullBox, GradedSubset};
use crate::words::Word;
use std::collections::BTreeSet;

use super::product::over;

/// A factorization into primes; concatenating the factors gives back the
/// original word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeFactorization {
    pub factors: Vec<Word>,
}

impl PrimeFactorization {
    pub fn concatenation(&self) -> Word {
        self.factors
            .iter()
            .fold(Word::empty(), |acc, f| acc.concat(f))
    }
}

/// Positions after which the remaining suffix is itself a valid word.
fn split_positions(delta: &RangeMap, u: &Word) -> Vec<usize> {
    let n = u.len();
    (1..n)
        .filter(|&k| (1..=n - k).all(|i| u.at(k + i) <= delta.at(i)))
        .collect()
}

/// A nonempty word is prime when it cannot be cut into two valid words.
pub fn is_prime(delta: &RangeMap, u: &Word) -> Result<bool> {
    if u.is_empty() {
        return Err(CliffError::BadWord {
            input: u.to_string(),
            reason: "the empty word is neither prime nor composite".into(),
        });
    }
    Ok(split_positions(delta, u).is_empty())
}

/// All prime words of size `n`, ascending.
pub fn primes(delta: &RangeMap, n: usize) -> Vec<Word> {
    if n == 0 {
        return Vec::new();
    }
    FullBox::new(delta.clone())
        .elements(n)
        .into_iter()
        .filter(|u| split_positions(delta, u).is_empty())
        .collect()
}

/// The unique factorization of a nonempty word into primes: cut at every
/// position with a valid suffix, then factor the pieces the same way.  A
/// piece can expose cuts that the longer word hid, so the recursion is
/// essential; it terminates because pieces shrink strictly.
pub fn prime_factorize(delta: &RangeMap, u: &Word) -> Result<PrimeFactorization> {
    if u.is_empty() {
        return Err(CliffError::BadWord {
            input: u.to_string(),
            reason: "the empty word has no prime factorization".into(),
        });
    }
    let mut factors = Vec::new();
    cut_into_primes(delta, u, &mut factors);
    Ok(PrimeFactorization { factors })
}

fn cut_into_primes(delta: &RangeMap, u: &Word, out: &mut Vec<Word>) {
    let splits = split_positions(delta, u);
    if splits.is_empty() {
        out.push(u.clone());
        return;
    }
    let mut start = 0;
    for k in splits.into_iter().chain([u.len()]) {
        let piece = Word::new(u.letters()[start..k].to_vec());
        cut_into_primes(delta, &piece, out);
        start = k;
    }
}

/// One vanishing monomial of the presentation: the product of the primes
/// in `left`, times the prime `right`, is zero in the algebra.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Relation {
    pub left: Vec<Word>,
    pub right: Word,
}

impl Relation {
    /// The relation as one flat prime sequence, left factors then `right`.
    pub fn sequence(&self) -> Vec<Word> {
        let mut s = self.left.clone();
        s.push(self.right.clone());
        s
    }
}

/// The vanishing monomials of total size at most `degree_cap`, filtered to
/// those minimal in the suffix order on prime sequences: a relation whose
/// factor sequence ends in a shorter relation is implied by it and is
/// dropped.  The full relation ideal is infinite in general; the
/// truncation only claims the range it searched.
pub fn presentation_relations(delta: &RangeMap, degree_cap: usize) -> Result<Vec<Relation>> {
    if !delta.is_valley_free() {
        return Err(CliffError::NotValleyFree);
    }
    let full = FullBox::new(delta.clone());
    let prime_slices: Vec<Vec<Word>> = (0..=degree_cap).map(|n| primes(delta, n)).collect();
    let mut sequences: BTreeSet<Vec<Word>> = BTreeSet::new();
    for nu in 1..degree_cap {
        for u in full.elements(nu) {
            let factors = prime_factorize(delta, &u)?.factors;
            for nv in 1..=degree_cap - nu {
                for v in &prime_slices[nv] {
                    if over(delta, &u, v).is_none() {
                        let mut seq = factors.clone();
                        seq.push(v.clone());
                        sequences.insert(seq);
                    }
                }
            }
        }
    }
    let minimal: Vec<Relation> = sequences
        .iter()
        .filter(|seq| {
            // Drop a sequence when a proper tail is itself a relation.
            !(1..seq.len() - 1).any(|start| sequences.contains(&seq[start..].to_vec()))
        })
        .map(|seq| Relation {
            left: seq[..seq.len() - 1].to_vec(),
            right: seq[seq.len() - 1].clone(),
        })
        .collect();
    Ok(minimal)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn dm(spec: &str) -> RangeMap {
        RangeMap::parse(spec).unwrap()
    }

    #[test]
    fn primality_of_pinned_words() {
        let delta = dm("seq[0,2];const(1)");
        for prime in ["0", "01", "0,2,1,1,1,1"] {
            assert!(is_prime(&delta, &w(prime)).unwrap(), "{prime}");
        }
        assert!(!is_prime(&delta, &w("0210")).unwrap());
        assert!(is_prime(&RangeMap::staircase(1), &w("0")).unwrap());
        assert!(!is_prime(&RangeMap::staircase(1), &w("00")).unwrap());
        assert!(matches!(
            is_prime(&delta, &Word::empty()),
            Err(CliffError::BadWord { .. })
        ));
    }

    #[test]
    fn factorization_cuts_at_valid_suffixes() {
        let staircase = RangeMap::staircase(1);
        assert_eq!(
            prime_factorize(&staircase, &w("00")).unwrap().factors,
            vec![w("0"), w("0")]
        );
        assert_eq!(
            prime_factorize(&dm("seq[0,2];const(1)"), &w("0210"))
                .unwrap()
                .factors,
            vec![w("021"), w("0")]
        );
        assert!(matches!(
            prime_factorize(&staircase, &Word::empty()),
            Err(CliffError::BadWord { .. })
        ));
    }

    #[test]
    fn factoring_a_piece_can_expose_hidden_cuts() {
        // 020 is no valid suffix of 0020, but once the front 00 splits off
        // it factors further: the unique decomposition is four letters.
        let delta = dm("seq[2,0];const(9)");
        let factorization = prime_factorize(&delta, &w("0020")).unwrap();
        assert_eq!(
            factorization.factors,
            vec![w("0"), w("0"), w("2"), w("0")]
        );
        assert_eq!(factorization.concatenation(), w("0020"));
    }

    #[test]
    fn factorizations_rebuild_and_are_prime_up_to_size_five() {
        for delta in [
            RangeMap::staircase(1),
            RangeMap::staircase(2),
            dm("seq[0,2];const(1)"),
            dm("seq[2,3];const(1)"),
        ] {
            let full = FullBox::new(delta.clone());
            for n in 1..=5 {
                for u in full.elements(n) {
                    let f = prime_factorize(&delta, &u).unwrap();
                    assert_eq!(f.concatenation(), u);
                    for factor in &f.factors {
                        assert!(is_prime(&delta, factor).unwrap(), "{u} gave {factor}");
                    }
                }
            }
        }
    }

    #[test]
    fn staircase_prime_counts_follow_the_free_generator_series() {
        let counts: Vec<usize> = (1..=6)
            .map(|n| primes(&RangeMap::staircase(1), n).len())
            .collect();
        assert_eq!(counts, vec![1, 1, 3, 13, 71, 461]);
    }

    #[test]
    fn increasing_bounds_leave_no_relations() {
        assert_eq!(
            presentation_relations(&RangeMap::staircase(1), 6).unwrap(),
            Vec::new()
        );
    }

    #[test]
    fn dominated_bounds_give_finitely_many_relations() {
        let delta = dm("seq[2,3];const(1)");
        let at_five = presentation_relations(&delta, 5).unwrap();
        assert!(!at_five.is_empty());
        let at_six = presentation_relations(&delta, 6).unwrap();
        let at_seven = presentation_relations(&delta, 7).unwrap();
        assert_eq!(at_six, at_seven);
        assert!(at_five.len() <= at_six.len());
    }

    #[test]
    fn valley_bounds_are_rejected() {
        assert!(matches!(
            presentation_relations(&dm("seq[0,1,3,1];const(2)"), 4),
            Err(CliffError::NotValleyFree)
        ));
    }
}
