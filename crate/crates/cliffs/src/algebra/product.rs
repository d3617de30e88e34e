//! The product on the fundamental basis and its interval description.
//!
//! The product of two basis words is supported on a componentwise interval
//! of the ambient box: concatenation at the bottom, and at the top the
//! right factor with every locally maximal letter lifted to the bound at
//! its shifted position.  Quotient ambients keep only the members.  On the
//! other bases the product collapses to a single monomial rule.

use crate::error::{CliffError, Result};
use crate::families::Family;
use crate::range_map::RangeMap;
use crate::subset::GradedSubset;
use crate::words::Word;
use num::BigRational;

use super::{Basis, Element};

/// Concatenation, defined when the right factor stays under the bound at
/// its shifted positions.  Inputs are assumed valid for the bound map.
pub fn over(delta: &RangeMap, u: &Word, v: &Word) -> Option<Word> {
    let shift = u.len();
    let fits = (1..=v.len()).all(|i| v.at(i) <= delta.at(shift + i));
    fits.then(|| u.concat(v))
}

/// Concatenation with every letter of the right factor that sits at its
/// local bound lifted to the bound at its shifted position.  The result is
/// valid whenever the plain concatenation is.
pub fn under(delta: &RangeMap, u: &Word, v: &Word) -> Word {
    let shift = u.len();
    let mut letters = u.letters().to_vec();
    for i in 1..=v.len() {
        let a = v.at(i);
        letters.push(if a == delta.at(i) { delta.at(shift + i) } else { a });
    }
    Word::new(letters)
}

/// The bounds of the product support: present exactly when the
/// concatenation is valid, in which case the support of the product of the
/// two fundamental words is the componentwise interval between the bounds.
pub fn product_interval_form(delta: &RangeMap, u: &Word, v: &Word) -> Option<(Word, Word)> {
    over(delta, u, v).map(|lo| (lo, under(delta, u, v)))
}

/// All words of the componentwise box between `lo` and `hi`, ascending.
fn box_words(lo: &Word, hi: &Word) -> Vec<Word> {
    let n = lo.len();
    if (1..=n).any(|i| lo.at(i) > hi.at(i)) {
        return Vec::new();
    }
    let mut out = vec![Vec::with_capacity(n)];
    for i in 1..=n {
        let mut next = Vec::with_capacity(out.len());
        for stem in &out {
            for a in lo.at(i)..=hi.at(i) {
                let mut grown = stem.clone();
                grown.push(a);
                next.push(grown);
            }
        }
        out = next;
    }
    out.into_iter().map(Word::new).collect()
}

/// Support of the product of two fundamental words in `ambient`: the
/// members of the interval between the concatenation and its lift.
/// Ascending order.  Inputs are assumed ambient members.
pub fn product_support(ambient: &Family, u: &Word, v: &Word) -> Vec<Word> {
    let lo = u.concat(v);
    let hi = under(ambient.delta(), u, v);
    box_words(&lo, &hi)
        .into_iter()
        .filter(|w| ambient.contains(w))
        .collect()
}

/// Product of two fundamental basis words as an element.
pub fn product_f_words(ambient: &Family, u: &Word, v: &Word) -> Result<Element> {
    for word in [u, v] {
        if !ambient.contains(word) {
            return Err(CliffError::NotAMember {
                word: word.to_string(),
            });
        }
    }
    let one = BigRational::from_integer(1.into());
    Ok(Element::from_terms(
        ambient.clone(),
        Basis::F,
        product_support(ambient, u, v)
            .into_iter()
            .map(|w| (w, one.clone())),
    ))
}

/// Bilinear product of two elements in the fundamental basis.
pub fn product_f(x: &Element, y: &Element) -> Result<Element> {
    if x.ambient() != y.ambient() {
        return Err(CliffError::AmbientMismatch);
    }
    for factor in [x, y] {
        if factor.basis() != Basis::F {
            return Err(CliffError::BadElement {
                input: factor.to_string(),
                reason: "products are computed in the F basis".into(),
            });
        }
    }
    let mut terms: Vec<(Word, BigRational)> = Vec::new();
    for (u, cu) in x.terms() {
        for (v, cv) in y.terms() {
            let c = cu * cv;
            terms.extend(
                product_support(x.ambient(), u, v)
                    .into_iter()
                    .map(|w| (w, c.clone())),
            );
        }
    }
    Ok(Element::from_terms(x.ambient().clone(), Basis::F, terms))
}

/// Product of two elementary basis words over the full box: the
/// elementary word at the concatenation when it is valid, zero otherwise.
pub fn product_e(delta: &RangeMap, u: &Word, v: &Word) -> Result<Element> {
    let ambient = Family::cliff(delta.clone());
    for word in [u, v] {
        if !ambient.contains(word) {
            return Err(CliffError::NotAMember {
                word: word.to_string(),
            });
        }
    }
    Ok(match over(delta, u, v) {
        Some(w) => Element::basis_word(ambient, Basis::E, w)?,
        None => Element::zero(ambient, Basis::E),
    })
}

/// Product of two homogeneous basis words over the full box: the
/// homogeneous word at the reduced lift of the concatenation.
pub fn product_h(delta: &RangeMap, u: &Word, v: &Word) -> Result<Element> {
    let ambient = Family::cliff(delta.clone());
    for word in [u, v] {
        if !ambient.contains(word) {
            return Err(CliffError::NotAMember {
                word: word.to_string(),
            });
        }
    }
    let w = under(delta, u, v).reduce(delta);
    Element::basis_word(ambient, Basis::H, w)
}

/// Searches all triples of box words with total size at most `degree_cap`
/// for a failure of associativity of the fundamental product, in
/// ascending size and lexicographic order.  Returns the first violating
/// triple, or nothing when the product associates on the whole range.
pub fn associativity_check(
    delta: &RangeMap,
    degree_cap: usize,
) -> Option<(Word, Word, Word)> {
    let ambient = Family::cliff(delta.clone());
    let slices: Vec<Vec<Word>> = (0..=degree_cap).map(|n| ambient.elements(n)).collect();
    for total in 0..=degree_cap {
        for i in 0..=total {
            for j in 0..=total - i {
                let k = total - i - j;
                for u in &slices[i] {
                    for v in &slices[j] {
                        let uv = product_f_words(&ambient, u, v).expect("members");
                        for w in &slices[k] {
                            let vw = product_f_words(&ambient, v, w).expect("members");
                            let fw = Element::basis_word(
                                ambient.clone(),
                                Basis::F,
                                w.clone(),
                            )
                            .expect("member");
                            let fu = Element::basis_word(
                                ambient.clone(),
                                Basis::F,
                                u.clone(),
                            )
                            .expect("member");
                            let left = product_f(&uv, &fw).expect("same ambient");
                            let right = product_f(&fu, &vw).expect("same ambient");
                            if left != right {
                                return Some((u.clone(), v.clone(), w.clone()));
                            }
                        }
                    }
                }
            }
        }
    }
    None
}
