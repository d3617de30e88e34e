//! Interactions between the product, prime, and generator-count machinery
//! that no single module can check on its own.

use cliffs::algebra::generators::generator_counts;
use cliffs::algebra::primes::{presentation_relations, prime_factorize, primes};
use cliffs::algebra::product::{over, product_f};
use cliffs::algebra::{Basis, Element};
use cliffs::families::Family;
use cliffs::subset::GradedSubset;
use cliffs::{RangeMap, Word};

fn f_word(family: &Family, w: &Word) -> Element {
    Element::basis_word(family.clone(), Basis::F, w.clone()).unwrap()
}

#[test]
fn quotient_products_associate() {
    let ambients = [
        Family::hill(RangeMap::staircase(1)),
        Family::canyon(RangeMap::staircase(1)),
        Family::canyon(RangeMap::staircase(2)),
    ];
    for family in &ambients {
        let slices: Vec<Vec<Word>> = (0..=5).map(|n| family.elements(n)).collect();
        for total in 0..=5usize {
            for i in 0..=total {
                for j in 0..=total - i {
                    let k = total - i - j;
                    for x in &slices[i] {
                        for y in &slices[j] {
                            for z in &slices[k] {
                                let xy_z = product_f(
                                    &product_f(&f_word(family, x), &f_word(family, y)).unwrap(),
                                    &f_word(family, z),
                                )
                                .unwrap();
                                let x_yz = product_f(
                                    &f_word(family, x),
                                    &product_f(&f_word(family, y), &f_word(family, z)).unwrap(),
                                )
                                .unwrap();
                                assert_eq!(
                                    xy_z,
                                    x_yz,
                                    "{} ({x})({y})({z})",
                                    family.kind().name()
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn free_boxes_have_as_many_generators_as_primes() {
    let cases: [(&str, usize); 3] = [("m(1)", 5), ("m(2)", 4), ("seq[2,3];const(1)", 4)];
    for (spec, n_max) in cases {
        let delta = RangeMap::parse(spec).unwrap();
        let family = Family::cliff(delta.clone());
        let counts = generator_counts(&family, n_max).unwrap();
        for n in 0..=n_max {
            assert_eq!(
                counts[n] as usize,
                primes(&delta, n).len(),
                "{spec} at size {n}"
            );
        }
    }
}

#[test]
fn products_of_prime_factors_sit_above_the_factored_word() {
    let delta = RangeMap::staircase(1);
    let family = Family::cliff(delta.clone());
    for n in 1..=4 {
        for u in family.elements(n) {
            let factors = prime_factorize(&delta, &u).unwrap().factors;
            let mut acc = f_word(&family, &factors[0]);
            for p in &factors[1..] {
                acc = product_f(&acc, &f_word(&family, p)).unwrap();
            }
            assert_eq!(acc.coefficient(&u).to_string(), "1", "bottom term of {u}");
            for (w, _) in acc.terms() {
                assert!(u.leq(w), "{w} under the concatenation {u}");
            }
        }
    }
}

/// A factor sequence vanishes when its concatenation is a valid word whose
/// extension by the final prime overflows the bounds.
fn vanishes(delta: &RangeMap, seq: &[Word]) -> bool {
    let mut acc = Some(seq[0].clone());
    for p in &seq[1..seq.len() - 1] {
        acc = acc.and_then(|u| over(delta, &u, p));
    }
    match acc {
        Some(u) => over(delta, &u, &seq[seq.len() - 1]).is_none(),
        None => false,
    }
}

#[test]
fn presentation_relations_vanish_and_are_minimal() {
    let delta = RangeMap::parse("seq[2,3];const(1)").unwrap();
    let relations = presentation_relations(&delta, 6).unwrap();
    assert!(!relations.is_empty());
    for r in &relations {
        let seq = r.sequence();
        assert!(vanishes(&delta, &seq), "relation {seq:?} does not vanish");
        for start in 1..seq.len() - 1 {
            assert!(
                !vanishes(&delta, &seq[start..]),
                "tail of {seq:?} already vanishes"
            );
        }
    }
}
