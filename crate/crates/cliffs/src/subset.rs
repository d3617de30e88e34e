//! Graded subsets of the bounded-word box and their structural maps.
//!
//! A graded subset pairs a bound map with a membership predicate; the slice
//! at size `n` is a subposet of the full box under the componentwise order.
//! Everything here works through membership tests alone: enumeration, the
//! greedy monotone projections (decrementation and incrementation), the meet
//! and join they induce, and the elevation map with its inverse.

use crate::error::{CliffError, Result};
use crate::range_map::RangeMap;
use crate::words::Word;

/// A graded subset of the box of words bounded by a range map.
pub trait GradedSubset {
    /// Bound map of the ambient box.
    fn delta(&self) -> &RangeMap;

    /// Membership test. Implementations reject words violating the bounds.
    fn contains(&self, u: &Word) -> bool;

    /// May the enumerator skip extensions of non-member prefixes?
    /// Safe to return true exactly when the subset is closed by prefix.
    fn prune_by_prefix(&self) -> bool {
        false
    }

    /// All members of size `n`, in lexicographic order.
    fn elements(&self, n: usize) -> Vec<Word> {
        enumerate(self, n, usize::MAX).expect("enumeration without a guard cannot be rejected")
    }

    /// Like [`GradedSubset::elements`] but aborts past `limit` members.
    fn elements_guarded(&self, n: usize, limit: usize) -> Result<Vec<Word>> {
        enumerate(self, n, limit)
    }
}

/// The full box: every word within the bounds.
pub struct FullBox {
    delta: RangeMap,
}

impl FullBox {
    pub fn new(delta: RangeMap) -> Self {
        FullBox { delta }
    }
}

impl GradedSubset for FullBox {
    fn delta(&self) -> &RangeMap {
        &self.delta
    }

    fn contains(&self, u: &Word) -> bool {
        u.respects(&self.delta)
    }

    fn prune_by_prefix(&self) -> bool {
        true
    }
}

fn enumerate<S: GradedSubset + ?Sized>(s: &S, n: usize, limit: usize) -> Result<Vec<Word>> {
    let mut out = Vec::new();
    let mut current = Word::empty();
    enumerate_rec(s, n, limit, &mut current, &mut out)?;
    Ok(out)
}

fn enumerate_rec<S: GradedSubset + ?Sized>(
    s: &S,
    n: usize,
    limit: usize,
    current: &mut Word,
    out: &mut Vec<Word>,
) -> Result<()> {
    if current.len() == n {
        if s.contains(current) {
            if out.len() >= limit {
                return Err(CliffError::SizeGuardExceeded { limit });
            }
            out.push(current.clone());
        }
        return Ok(());
    }
    let bound = s.delta().at(current.len() + 1);
    for a in 0..=bound {
        let next = current.appended(a);
        // Full-size words are always tested by the leaf case above.
        if next.len() == n || !s.prune_by_prefix() || s.contains(&next) {
            let saved = std::mem::replace(current, next);
            enumerate_rec(s, n, limit, current, out)?;
            *current = saved;
        }
    }
    Ok(())
}

/// Greedy projection below: rebuilds `u` letter by letter, each time taking
/// the largest letter not above the original that keeps the prefix a member.
/// Total on minimally extendable subsets closed by prefix, where it yields
/// the greatest member below `u`.
pub fn decrement_map<S: GradedSubset + ?Sized>(s: &S, u: &Word) -> Result<Word> {
    u.check_respects(s.delta())?;
    let mut out = Word::empty();
    for i in 1..=u.len() {
        let a = u.at(i);
        match (0..=a).rev().find(|&b| s.contains(&out.appended(b))) {
            Some(b) => out.push(b),
            None => {
                return Err(CliffError::NoAdmissibleLetter {
                    position: i,
                    letter: a,
                    direction: "down",
                })
            }
        }
    }
    Ok(out)
}

/// Greedy projection above, the dual of [`decrement_map`]: the smallest
/// letter at least the original that keeps the prefix a member. Total on
/// maximally extendable subsets closed by prefix.
pub fn increment_map<S: GradedSubset + ?Sized>(s: &S, u: &Word) -> Result<Word> {
    u.check_respects(s.delta())?;
    let mut out = Word::empty();
    for i in 1..=u.len() {
        let a = u.at(i);
        let bound = s.delta().at(i);
        match (a..=bound).find(|&b| s.contains(&out.appended(b))) {
            Some(b) => out.push(b),
            None => {
                return Err(CliffError::NoAdmissibleLetter {
                    position: i,
                    letter: a,
                    direction: "up",
                })
            }
        }
    }
    Ok(out)
}

/// Meet inside the subset: componentwise minimum, then projected down.
pub fn sub_meet<S: GradedSubset + ?Sized>(s: &S, u: &Word, v: &Word) -> Result<Word> {
    require_member(s, u)?;
    require_member(s, v)?;
    decrement_map(s, &u.meet(v)?)
}

/// Join inside the subset: componentwise maximum, then projected up.
pub fn sub_join<S: GradedSubset + ?Sized>(s: &S, u: &Word, v: &Word) -> Result<Word> {
    require_member(s, u)?;
    require_member(s, v)?;
    increment_map(s, &u.join(v)?)
}

fn require_member<S: GradedSubset + ?Sized>(s: &S, u: &Word) -> Result<()> {
    if s.contains(u) {
        Ok(())
    } else {
        Err(CliffError::NotAMember {
            word: u.to_string(),
        })
    }
}

/// Elevation: letter `i` becomes the number of smaller letters that could
/// replace `u_i` while keeping the prefix a member.
pub fn elevation<S: GradedSubset + ?Sized>(s: &S, u: &Word) -> Result<Word> {
    require_member(s, u)?;
    let mut out = Word::empty();
    for i in 1..=u.len() {
        let prefix = u.prefix(i - 1);
        let count = (0..u.at(i))
            .filter(|&a| s.contains(&prefix.appended(a)))
            .count() as u32;
        out.push(count);
    }
    Ok(out)
}

/// Inverse of [`elevation`] on its image: letter `i` of the preimage is the
/// `(w_i + 1)`-th smallest member continuation of the prefix built so far.
/// Fails at the first position where too few continuations exist, which
/// happens exactly when `w` is outside the image.
pub fn elevation_inverse<S: GradedSubset + ?Sized>(s: &S, w: &Word) -> Result<Word> {
    if w.is_empty() {
        return if s.contains(&Word::empty()) {
            Ok(Word::empty())
        } else {
            Err(CliffError::NotInElevationImage { position: 0 })
        };
    }
    let mut out = Word::empty();
    for i in 1..=w.len() {
        let bound = s.delta().at(i);
        let target = w.at(i) as usize;
        let chosen = (0..=bound)
            .filter(|&a| s.contains(&out.appended(a)))
            .nth(target);
        match chosen {
            Some(a) => out.push(a),
            None => return Err(CliffError::NotInElevationImage { position: i }),
        }
    }
    Ok(out)
}
