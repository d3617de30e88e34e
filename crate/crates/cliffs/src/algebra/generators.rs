//! Exact generator counting for an associative ambient algebra.
//!
//! The degree-n generators are counted as indecomposables: the dimension
//! of the graded slice minus the rank of the span of all products of two
//! lower-degree basis words.  Supports of fundamental products are 0/1
//! vectors, and the rank is computed by integer-preserving elimination
//! with division-free row updates and gcd stripping, falling back to big
//! integers in the unlikely event a row update overflows.

use crate::error::{CliffError, Result};
use crate::families::Family;
use crate::subset::GradedSubset;
use crate::words::Word;
use num::{BigInt, Integer, Zero};
use std::collections::{BTreeMap, BTreeSet};

use super::product::product_support;

/// Generator counts per degree from 0 to `n_max`.  Degree 0 counts no
/// generators because the unit is not one.
pub fn generator_counts(ambient: &Family, n_max: usize) -> Result<Vec<u64>> {
    if !ambient.delta().is_valley_free() {
        return Err(CliffError::NotValleyFree);
    }
    let slices: Vec<Vec<Word>> = (0..=n_max).map(|n| ambient.elements(n)).collect();
    let mut counts = vec![0u64];
    for n in 1..=n_max {
        let members = &slices[n];
        let index: BTreeMap<&Word, usize> = members
            .iter()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect();
        let mut supports: BTreeSet<Vec<usize>> = BTreeSet::new();
        for i in 1..n {
            for x in &slices[i] {
                for y in &slices[n - i] {
                    let support: Vec<usize> = product_support(ambient, x, y)
                        .iter()
                        .map(|w| index[w])
                        .collect();
                    if !support.is_empty() {
                        supports.insert(support);
                    }
                }
            }
        }
        let rank = rank_of_supports(&supports, members.len());
        counts.push((members.len() - rank) as u64);
    }
    Ok(counts)
}

/// Hilbert dimensions, generator counts, and whether they satisfy the
/// quasi-inverse identity a free algebra would.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreenessEvidence {
    pub hilbert: Vec<u64>,
    pub generators: Vec<u64>,
    pub free_consistent: bool,
}

/// Compares the Hilbert series with the series freely generated by the
/// counted generators: h_n = sum of g_k h_(n-k).  Agreement through
/// `n_max` is consistent with freeness, disagreement refutes it.
pub fn freeness_evidence(ambient: &Family, n_max: usize) -> Result<FreenessEvidence> {
    let generators = generator_counts(ambient, n_max)?;
    let hilbert: Vec<u64> = (0..=n_max)
        .map(|n| ambient.elements(n).len() as u64)
        .collect();
    let mut quasi = vec![1u128];
    for n in 1..=n_max {
        let h: u128 = (1..=n)
            .map(|k| generators[k] as u128 * quasi[n - k])
            .sum();
        quasi.push(h);
    }
    let free_consistent = (0..=n_max).all(|n| quasi[n] == u128::from(hilbert[n]));
    Ok(FreenessEvidence {
        hilbert,
        generators,
        free_consistent,
    })
}

fn rank_of_supports(supports: &BTreeSet<Vec<usize>>, width: usize) -> usize {
    let rows: Vec<Vec<i64>> = supports
        .iter()
        .map(|s| {
            let mut row = vec![0i64; width];
            for &j in s {
                row[j] = 1;
            }
            row
        })
        .collect();
    match rank_machine_ints(&rows) {
        Some(rank) => rank,
        None => rank_big_ints(&rows),
    }
}

/// Incremental elimination over the integers.  Each candidate row is
/// cleared against the pivots in column order with the cross-multiplied
/// update a*row - b*pivot, then stripped of its content; a surviving
/// nonzero entry makes it a pivot.  Returns nothing if an update
/// overflows.
fn rank_machine_ints(rows: &[Vec<i64>]) -> Option<usize> {
    let mut pivots: Vec<(usize, Vec<i64>)> = Vec::new();
    for row in rows {
        let mut row = row.clone();
        for (col, pivot) in &pivots {
            let b = row[*col];
            if b == 0 {
                continue;
            }
            let a = pivot[*col];
            let g = a.gcd(&b);
            let (fa, fb) = (a / g, b / g);
            for (x, y) in row.iter_mut().zip(pivot) {
                *x = x.checked_mul(fa)?.checked_sub(y.checked_mul(fb)?)?;
            }
            strip_content(&mut row);
        }
        if let Some(col) = row.iter().position(|&x| x != 0) {
            let at = pivots.partition_point(|(c, _)| *c < col);
            pivots.insert(at, (col, row));
        }
    }
    Some(pivots.len())
}

fn strip_content(row: &mut [i64]) {
    let mut g: i64 = 0;
    for &x in row.iter() {
        g = g.gcd(&x);
        if g == 1 {
            return;
        }
    }
    if g > 1 {
        for x in row.iter_mut() {
            *x /= g;
        }
    }
}

/// The same elimination over arbitrary-precision integers; only reached
/// when the machine-integer pass overflows.
fn rank_big_ints(rows: &[Vec<i64>]) -> usize {
    let mut pivots: Vec<(usize, Vec<BigInt>)> = Vec::new();
    for row in rows {
        let mut row: Vec<BigInt> = row.iter().map(|&x| BigInt::from(x)).collect();
        for (col, pivot) in &pivots {
            if row[*col].is_zero() {
                continue;
            }
            let a = pivot[*col].clone();
            let b = row[*col].clone();
            let g = a.gcd(&b);
            let (fa, fb) = (a / &g, b / &g);
            for (x, y) in row.iter_mut().zip(pivot) {
                *x = &*x * &fa - y * &fb;
            }
            let mut content = BigInt::zero();
            for x in &row {
                content = content.gcd(x);
            }
            if content > BigInt::from(1) {
                for x in row.iter_mut() {
                    *x = &*x / &content;
                }
            }
        }
        if let Some(col) = row.iter().position(|x| !x.is_zero()) {
            let at = pivots.partition_point(|(c, _)| *c < col);
            pivots.insert(at, (col, row));
        }
    }
    pivots.len()
}
