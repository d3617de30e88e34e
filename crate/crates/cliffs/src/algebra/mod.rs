//! The graded algebra spanned by the words of an ambient family, with its
//! fundamental, elementary, and homogeneous bases.
//!
//! An [`Element`] is a finite rational combination of basis words.  The
//! fundamental basis F carries the product; E and H are triangular
//! rewritings of F along the componentwise order, so conversions are exact
//! and round-trip.  Products, primes, quotients, and generator counting
//! live in the submodules.

pub mod generators;
pub mod primes;
pub mod product;
pub mod quotient;

use crate::error::{CliffError, Result};
use crate::families::Family;
use crate::subset::GradedSubset;
use crate::words::Word;
use num::{BigRational, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// The three bases of the algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    F,
    E,
    H,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::F => write!(f, "F"),
            Basis::E => write!(f, "E"),
            Basis::H => write!(f, "H"),
        }
    }
}

/// A finite rational combination of basis words of one ambient family.
///
/// Keys are always ambient members and zero coefficients are never stored,
/// so equality of elements is equality of the maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    ambient: Family,
    basis: Basis,
    terms: BTreeMap<Word, BigRational>,
}

impl Element {
    pub fn zero(ambient: Family, basis: Basis) -> Self {
        Element {
            ambient,
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The basis element indexed by `word`, which must be an ambient
    /// member.
    pub fn basis_word(ambient: Family, basis: Basis, word: Word) -> Result<Self> {
        if !ambient.contains(&word) {
            return Err(CliffError::NotAMember {
                word: word.to_string(),
            });
        }
        let mut terms = BTreeMap::new();
        terms.insert(word, BigRational::from_integer(1.into()));
        Ok(Element {
            ambient,
            basis,
            terms,
        })
    }

    /// Builds an element from raw terms, summing repeats and dropping
    /// zeros.  Callers guarantee the words are ambient members.
    pub(crate) fn from_terms(
        ambient: Family,
        basis: Basis,
        terms: impl IntoIterator<Item = (Word, BigRational)>,
    ) -> Self {
        let mut map: BTreeMap<Word, BigRational> = BTreeMap::new();
        for (word, coeff) in terms {
            let entry = map.entry(word).or_insert_with(BigRational::zero);
            *entry += coeff;
        }
        map.retain(|_, c| !c.is_zero());
        Element {
            ambient,
            basis,
            terms: map,
        }
    }

    pub fn ambient(&self) -> &Family {
        &self.ambient
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// Terms in the canonical order: size first, then lexicographic.
    pub fn terms(&self) -> &BTreeMap<Word, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, word: &Word) -> BigRational {
        self.terms.get(word).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        if self.ambient != other.ambient {
            return Err(CliffError::AmbientMismatch);
        }
        if self.basis != other.basis {
            return Err(CliffError::BadElement {
                input: other.to_string(),
                reason: format!("expected the {} basis", self.basis),
            });
        }
        Ok(Element::from_terms(
            self.ambient.clone(),
            self.basis,
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(w, c)| (w.clone(), c.clone())),
        ))
    }

    pub fn scale(&self, factor: &BigRational) -> Element {
        Element::from_terms(
            self.ambient.clone(),
            self.basis,
            self.terms
                .iter()
                .map(|(w, c)| (w.clone(), c * factor)),
        )
    }

    /// Rewrites the element in `target`.  Both directions go through the
    /// fundamental basis; the change is unitriangular along the
    /// componentwise order on each graded slice, so coefficients stay
    /// exact and conversion round-trips.
    pub fn to_basis(&self, target: Basis) -> Element {
        if self.basis == target {
            return self.clone();
        }
        let fundamental = self.expand_to_fundamental();
        if target == Basis::F {
            return fundamental;
        }
        fundamental.fundamental_to(target)
    }

    /// Expands E or H terms into F terms: an E word collects the members
    /// above it, an H word the members below it.
    fn expand_to_fundamental(&self) -> Element {
        if self.basis == Basis::F {
            return self.clone();
        }
        let upward = self.basis == Basis::E;
        let mut out: Vec<(Word, BigRational)> = Vec::new();
        for (u, c) in &self.terms {
            for v in self.ambient.elements(u.len()) {
                let related = if upward { u.leq(&v) } else { v.leq(u) };
                if related {
                    out.push((v, c.clone()));
                }
            }
        }
        Element::from_terms(self.ambient.clone(), Basis::F, out)
    }

    /// Solves the unitriangular system expressing an F element in E or H.
    /// Lexicographic order on a fixed-size slice extends the componentwise
    /// order, so a single sweep in the right direction back-substitutes.
    fn fundamental_to(&self, target: Basis) -> Element {
        let sizes: Vec<usize> = {
            let mut s: Vec<usize> = self.terms.keys().map(Word::len).collect();
            s.dedup();
            s
        };
        let mut out: Vec<(Word, BigRational)> = Vec::new();
        for n in sizes {
            let members = self.ambient.elements(n);
            let mut coeffs: Vec<BigRational> = members
                .iter()
                .map(|w| self.coefficient(w))
                .collect();
            match target {
                Basis::E => {
                    for j in 0..members.len() {
                        for i in 0..j {
                            if members[i].leq(&members[j]) && !coeffs[i].is_zero() {
                                let c = coeffs[i].clone();
                                coeffs[j] -= c;
                            }
                        }
                    }
                }
                Basis::H => {
                    for j in (0..members.len()).rev() {
                        for i in j + 1..members.len() {
                            if members[j].leq(&members[i]) && !coeffs[i].is_zero() {
                                let c = coeffs[i].clone();
                                coeffs[j] -= c;
                            }
                        }
                    }
                }
                Basis::F => unreachable!("fundamental_to is only called for E or H"),
            }
            out.extend(members.into_iter().zip(coeffs));
        }
        Element::from_terms(self.ambient.clone(), target, out)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (word, coeff)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{coeff}*{}_{word}", self.basis)?;
        }
        Ok(())
    }
}
