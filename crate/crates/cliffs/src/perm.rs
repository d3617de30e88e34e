//! Permutations, the right weak order, and the Lehmer-code bridge into the
//! staircase cliff family.

use crate::error::{CliffError, Result};
use crate::range_map::Letter;
use crate::words::Word;
use std::collections::BTreeSet;
use std::fmt;

/// A permutation of 1..n in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Permutation {
    line: Vec<u32>,
}

impl Permutation {
    /// Validates that `line` is a rearrangement of 1..n.
    pub fn new(line: Vec<u32>) -> Result<Self> {
        let n = line.len();
        let mut seen = vec![false; n];
        for &v in &line {
            if v == 0 || v as usize > n {
                return Err(CliffError::BadPermutation {
                    reason: format!("value {v} outside 1..{n}"),
                });
            }
            if seen[v as usize - 1] {
                return Err(CliffError::BadPermutation {
                    reason: format!("value {v} repeats"),
                });
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation { line })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            line: (1..=n as u32).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.line.len()
    }

    pub fn is_empty(&self) -> bool {
        self.line.is_empty()
    }

    pub fn one_line(&self) -> &[u32] {
        &self.line
    }

    /// All permutations of 1..n in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        fn extend(rest: &mut Vec<u32>, line: &mut Vec<u32>, out: &mut Vec<Permutation>) {
            if rest.is_empty() {
                out.push(Permutation { line: line.clone() });
                return;
            }
            for i in 0..rest.len() {
                let v = rest.remove(i);
                line.push(v);
                extend(rest, line, out);
                line.pop();
                rest.insert(i, v);
            }
        }
        let mut out = Vec::new();
        extend(&mut (1..=n as u32).collect(), &mut Vec::new(), &mut out);
        out
    }

    /// Pairs of values (a, b) with a < b and a standing right of b.
    pub fn inversions(&self) -> BTreeSet<(u32, u32)> {
        let mut inv = BTreeSet::new();
        for (i, &b) in self.line.iter().enumerate() {
            for &a in &self.line[i + 1..] {
                if a < b {
                    inv.insert((a, b));
                }
            }
        }
        inv
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.line.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// The Lehmer code, read off by value: letter v counts the smaller values
/// standing right of v.  Letter v is at most v - 1, so the code lands in
/// the staircase cliff family at level 1, and the map is a bijection onto
/// it.
pub fn lehmer_code(sigma: &Permutation) -> Word {
    let n = sigma.len();
    let mut position = vec![0usize; n + 1];
    for (i, &v) in sigma.one_line().iter().enumerate() {
        position[v as usize] = i;
    }
    let letters: Vec<Letter> = (1..=n)
        .map(|v| (1..v).filter(|&u| position[u] > position[v]).count() as Letter)
        .collect();
    Word::new(letters)
}

/// Rebuilds the permutation from its Lehmer code by inserting values in
/// increasing order, each placed so that its letter counts the values
/// already standing right of it.
pub fn from_lehmer_code(code: &Word) -> Result<Permutation> {
    let n = code.len();
    let mut line: Vec<u32> = Vec::with_capacity(n);
    for v in 1..=n {
        let c = code.at(v) as usize;
        if c >= v {
            return Err(CliffError::BadPermutation {
                reason: format!("code letter {c} at position {v} exceeds {}", v - 1),
            });
        }
        line.insert(v - 1 - c, v as u32);
    }
    Ok(Permutation { line })
}

/// Right weak order by inversion-set containment.
pub fn weak_order_leq(sigma: &Permutation, tau: &Permutation) -> Result<bool> {
    if sigma.len() != tau.len() {
        return Err(CliffError::SizeMismatch {
            left: sigma.len(),
            right: tau.len(),
        });
    }
    Ok(sigma.inversions().is_subset(&tau.inversions()))
}
