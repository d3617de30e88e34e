//! The three named subfamilies counted by Fuss-Catalan numbers, their wing
//! characterizations, and the explicit recodings between them.
//!
//! Avalanches cap the weight of every nonempty prefix by the bound at the
//! prefix length, hills ask for weakly increasing letters, and canyons force
//! a strict staircase below each letter.  All three conditions are inherited
//! by prefixes, so the family enumerators prune by prefix.

use crate::error::{CliffError, Result};
use crate::range_map::{Letter, RangeMap};
use crate::subset::{elevation, elevation_inverse, GradedSubset};
use crate::words::Word;
use num::{BigUint, Integer, Zero};

/// The membership shapes a [`Family`] can take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Cliff,
    Avalanche,
    Hill,
    Canyon,
}

impl FamilyKind {
    /// Short lowercase name used in tables and on the command line.
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Cliff => "cliff",
            FamilyKind::Avalanche => "av",
            FamilyKind::Hill => "hi",
            FamilyKind::Canyon => "ca",
        }
    }
}

/// A named family over a fixed bound map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    kind: FamilyKind,
    delta: RangeMap,
}

impl Family {
    pub fn new(kind: FamilyKind, delta: RangeMap) -> Self {
        Family { kind, delta }
    }

    pub fn cliff(delta: RangeMap) -> Self {
        Family::new(FamilyKind::Cliff, delta)
    }

    pub fn avalanche(delta: RangeMap) -> Self {
        Family::new(FamilyKind::Avalanche, delta)
    }

    pub fn hill(delta: RangeMap) -> Self {
        Family::new(FamilyKind::Hill, delta)
    }

    pub fn canyon(delta: RangeMap) -> Self {
        Family::new(FamilyKind::Canyon, delta)
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }
}

impl GradedSubset for Family {
    fn delta(&self) -> &RangeMap {
        &self.delta
    }

    fn contains(&self, u: &Word) -> bool {
        u.respects(&self.delta)
            && match self.kind {
                FamilyKind::Cliff => true,
                FamilyKind::Avalanche => is_avalanche(&self.delta, u),
                FamilyKind::Hill => is_hill(u),
                FamilyKind::Canyon => is_canyon(u),
            }
    }

    // All four membership conditions are inherited by prefixes.
    fn prune_by_prefix(&self) -> bool {
        true
    }
}

/// Does every nonempty prefix keep its letter sum within the bound at its
/// own length?
pub fn is_avalanche(delta: &RangeMap, u: &Word) -> bool {
    let mut total = 0u64;
    for i in 1..=u.len() {
        total += u64::from(u.at(i));
        if total > u64::from(delta.at(i)) {
            return false;
        }
    }
    true
}

/// Are the letters weakly increasing?
pub fn is_hill(u: &Word) -> bool {
    u.letters().windows(2).all(|p| p[0] <= p[1])
}

/// Does every letter dominate a strict staircase below itself, i.e.
/// `u[i-j] <= u[i] - j` for all `j in 1..=u[i]` with `i - j >= 1`?
pub fn is_canyon(u: &Word) -> bool {
    let ls = u.letters();
    for i in 1..ls.len() {
        let a = u64::from(ls[i]);
        let reach = (a as usize).min(i);
        for j in 1..=reach {
            if u64::from(ls[i - j]) + j as u64 > a {
                return false;
            }
        }
    }
    true
}

/// The Fuss-Catalan number `binomial(m*n + n, n) / (m*n + 1)`, exactly.
pub fn fuss_catalan(m: u32, n: usize) -> BigUint {
    let m = u64::from(m);
    let n = n as u64;
    let mut binom = BigUint::from(1u32);
    // Partial products are binomial(m*n + i, i), so each division is exact.
    for i in 1..=n {
        binom = binom * (m * n + i) / i;
    }
    let (q, r) = binom.div_rem(&BigUint::from(m * n + 1));
    assert!(r.is_zero(), "fuss-catalan division must be exact");
    q
}

/// The avalanches of size `n` over the staircase bound whose weight reaches
/// the ceiling `m * (n - 1)`; these are exactly the maximal elements of the
/// avalanche poset.
pub fn avalanche_maximal_elements(m: Letter, n: usize) -> Vec<Word> {
    let family = Family::avalanche(RangeMap::staircase(m));
    let target = u64::from(m) * (n.saturating_sub(1) as u64);
    family
        .elements(n)
        .into_iter()
        .filter(|u| u.weight() == target)
        .collect()
}

/// Output-wing shape over the staircase bound `m`: letters satisfy
/// `u_1 <= u_2 < u_3 < ...` and stay strictly below `m * (i - 1)` from the
/// second position on.
pub fn is_hill_output_wing(m: Letter, u: &Word) -> bool {
    let ls = u.letters();
    for i in 2..=ls.len() {
        if u64::from(ls[i - 1]) >= u64::from(m) * (i as u64 - 1) {
            return false;
        }
    }
    if ls.len() >= 2 && ls[0] > ls[1] {
        return false;
    }
    ls.len() < 2 || ls[1..].windows(2).all(|p| p[0] < p[1])
}

/// Input-wing shape: strictly increasing letters.
pub fn is_canyon_input_wing(u: &Word) -> bool {
    u.letters().windows(2).all(|p| p[0] < p[1])
}

/// Butterfly shape over the staircase bound `m`: `1 <= u_i < m * (i - 1)`
/// from the second position on, with jumps of at least 2 from the third.
pub fn is_canyon_butterfly(m: Letter, u: &Word) -> bool {
    let ls = u.letters();
    for i in 2..=ls.len() {
        let a = u64::from(ls[i - 1]);
        if a < 1 || a >= u64::from(m) * (i as u64 - 1) {
            return false;
        }
    }
    ls.len() < 3 || ls[1..].windows(2).all(|p| u64::from(p[1]) >= u64::from(p[0]) + 2)
}

fn require_output_wing(m: Letter, u: &Word) -> Result<()> {
    if !u.respects(&RangeMap::staircase(m)) || !is_hill_output_wing(m, u) {
        return Err(CliffError::NotAWingMember {
            word: u.to_string(),
            reason: format!("not an output wing of the hill family at level {m}"),
        });
    }
    Ok(())
}

fn require_input_wing(m: Letter, u: &Word) -> Result<()> {
    if !u.respects(&RangeMap::staircase(m)) || !is_canyon_input_wing(u) {
        return Err(CliffError::NotAWingMember {
            word: u.to_string(),
            reason: format!("not an input wing of the canyon family at level {m}"),
        });
    }
    Ok(())
}

/// Recodes an output wing of the level-`m` hill family into a hill one
/// staircase level down: the first letter drops to zero and letter `i`
/// becomes `u_i - i + 2`.  Poset isomorphism onto; inverted by
/// [`hill_to_output_wing`].
pub fn output_wing_to_hill(m: Letter, u: &Word) -> Result<Word> {
    require_output_wing(m, u)?;
    let out = (1..=u.len())
        .map(|i| {
            if i == 1 {
                0
            } else {
                (u64::from(u.at(i)) + 2 - i as u64) as Letter
            }
        })
        .collect();
    Ok(Word::new(out))
}

/// Inverse of [`output_wing_to_hill`]: letter `i >= 2` becomes `w_i + i - 2`.
pub fn hill_to_output_wing(m: Letter, w: &Word) -> Result<Word> {
    if m == 0 || !Family::hill(RangeMap::staircase(m - 1)).contains(w) {
        return Err(CliffError::NotAMember {
            word: w.to_string(),
        });
    }
    let out = (1..=w.len())
        .map(|i| {
            if i == 1 {
                0
            } else {
                (u64::from(w.at(i)) + i as u64 - 2) as Letter
            }
        })
        .collect();
    Ok(Word::new(out))
}

/// Recodes an input wing of the level-`m` canyon family into a hill one
/// staircase level down: letter `i` becomes `u_i - i + 1`.  Poset
/// isomorphism onto; inverted by [`hill_to_input_wing`].
pub fn input_wing_to_hill(m: Letter, u: &Word) -> Result<Word> {
    require_input_wing(m, u)?;
    let out = (1..=u.len())
        .map(|i| (u64::from(u.at(i)) + 1 - i as u64) as Letter)
        .collect();
    Ok(Word::new(out))
}

/// Inverse of [`input_wing_to_hill`]: letter `i` becomes `w_i + i - 1`.
pub fn hill_to_input_wing(m: Letter, w: &Word) -> Result<Word> {
    if m == 0 || !Family::hill(RangeMap::staircase(m - 1)).contains(w) {
        return Err(CliffError::NotAMember {
            word: w.to_string(),
        });
    }
    let out = (1..=w.len())
        .map(|i| (u64::from(w.at(i)) + i as u64 - 1) as Letter)
        .collect();
    Ok(Word::new(out))
}

/// Recodes an input wing of the level-`m` canyon family into a butterfly of
/// the level-`m + 1` canyon family: the first letter drops to zero and
/// letter `i` becomes `u_i + i - 2`.
pub fn input_wing_to_butterfly(m: Letter, u: &Word) -> Result<Word> {
    require_input_wing(m, u)?;
    let out = (1..=u.len())
        .map(|i| {
            if i == 1 {
                0
            } else {
                (u64::from(u.at(i)) + i as u64 - 2) as Letter
            }
        })
        .collect();
    Ok(Word::new(out))
}

/// The elevation-composition bijection from canyons to hills over the same
/// bound map: elevate in the canyon family, then invert elevation in the
/// hill family.  Order-preserving (though not an order isomorphism).
/// Defined only for strictly increasing bound maps, where both elevation
/// images coincide.
pub fn canyon_to_hill(delta: &RangeMap, u: &Word) -> Result<Word> {
    if !delta.is_increasing() {
        return Err(CliffError::NotIncreasing);
    }
    let canyons = Family::canyon(delta.clone());
    let hills = Family::hill(delta.clone());
    let code = elevation(&canyons, u)?;
    elevation_inverse(&hills, &code)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::build_poset;
    use std::collections::BTreeSet;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn st(m: Letter) -> RangeMap {
        RangeMap::staircase(m)
    }

    #[test]
    fn avalanche_checks_prefix_weights() {
        let d = st(1);
        assert!(is_avalanche(&d, &w("011")));
        assert!(!is_avalanche(&d, &w("012")));
        assert!(is_avalanche(&d, &Word::empty()));
    }

    #[test]
    fn hill_checks_weak_increase() {
        assert!(is_hill(&w("011")));
        assert!(!is_hill(&w("010")));
        assert!(is_hill(&w("000")));
        assert!(is_hill(&Word::empty()));
    }

    #[test]
    fn canyon_checks_staircase_below_letters() {
        assert!(is_canyon(&w("012")));
        assert!(!is_canyon(&w("011")));
        assert!(is_canyon(&w("024")));
        assert!(is_canyon(&w("000")));
        // 0112 fails: the second 1 forces the letter before it down to 0.
        assert!(is_canyon(&w("0013")));
        assert!(!is_canyon(&w("0112")));
    }

    #[test]
    fn enumeration_counts_match_fuss_catalan() {
        for m in 0..=2u32 {
            for n in 0..=5usize {
                let expected = fuss_catalan(m, n);
                for kind in [FamilyKind::Avalanche, FamilyKind::Hill, FamilyKind::Canyon] {
                    let fam = Family::new(kind, st(m));
                    let members = fam.elements(n);
                    assert_eq!(
                        BigUint::from(members.len()),
                        expected,
                        "family {} at m={m} n={n}",
                        kind.name()
                    );
                    assert!(members.windows(2).all(|p| p[0] < p[1]), "sorted output");
                }
            }
        }
    }

    #[test]
    fn size_three_members_are_pinned() {
        let av = Family::avalanche(st(1));
        let hi = Family::hill(st(1));
        let ca = Family::canyon(st(1));
        assert_eq!(
            av.elements(3),
            ["000", "001", "002", "010", "011"].map(|s| w(s)).to_vec()
        );
        assert_eq!(
            hi.elements(3),
            ["000", "001", "002", "011", "012"].map(|s| w(s)).to_vec()
        );
        assert_eq!(
            ca.elements(3),
            ["000", "001", "002", "010", "012"].map(|s| w(s)).to_vec()
        );
    }

    #[test]
    fn fuss_catalan_values() {
        assert_eq!(fuss_catalan(1, 3), 5u32.into());
        assert_eq!(fuss_catalan(0, 7), 1u32.into());
        assert_eq!(fuss_catalan(2, 3), 12u32.into());
        assert_eq!(fuss_catalan(2, 4), 55u32.into());
        assert_eq!(fuss_catalan(3, 2), 4u32.into());
        assert_eq!(fuss_catalan(1, 0), 1u32.into());
        assert_eq!(fuss_catalan(1, 8), 1430u32.into());
    }

    #[test]
    fn avalanche_maxima_have_full_weight() {
        assert_eq!(
            avalanche_maximal_elements(1, 3),
            ["002", "011"].map(|s| w(s)).to_vec()
        );
        assert_eq!(
            avalanche_maximal_elements(2, 3),
            ["004", "013", "022"].map(|s| w(s)).to_vec()
        );
        assert_eq!(avalanche_maximal_elements(3, 1), vec![w("0")]);

        // Same set as the maximal elements of the order itself.
        let p = build_poset(&Family::avalanche(st(1)), 3, None).unwrap();
        let maxima: Vec<Word> = p
            .maximal_elements()
            .into_iter()
            .map(|i| p.element(i).clone())
            .collect();
        assert_eq!(maxima, avalanche_maximal_elements(1, 3));
    }

    #[test]
    fn wing_shapes() {
        assert!(is_hill_output_wing(1, &w("001")));
        assert!(!is_hill_output_wing(1, &w("000")));
        assert!(is_hill_output_wing(2, &w("013")));
        assert!(is_hill_output_wing(1, &w("0")));

        assert!(is_canyon_input_wing(&w("012")));
        assert!(!is_canyon_input_wing(&w("010")));

        assert!(is_canyon_butterfly(2, &w("013")));
        assert!(!is_canyon_butterfly(2, &w("012")));
        assert!(is_canyon_butterfly(3, &w("01")));
    }

    #[test]
    fn output_wing_recoding_drops_one_level() {
        assert_eq!(output_wing_to_hill(1, &w("001")).unwrap(), w("000"));
        assert_eq!(output_wing_to_hill(2, &w("013")).unwrap(), w("012"));
        assert_eq!(output_wing_to_hill(2, &w("0")).unwrap(), w("0"));
        assert!(matches!(
            output_wing_to_hill(1, &w("010")),
            Err(CliffError::NotAWingMember { .. })
        ));
        assert_eq!(hill_to_output_wing(2, &w("012")).unwrap(), w("013"));
    }

    #[test]
    fn input_wing_recodings() {
        assert_eq!(input_wing_to_hill(1, &w("012")).unwrap(), w("000"));
        assert_eq!(input_wing_to_hill(2, &w("013")).unwrap(), w("001"));
        assert_eq!(input_wing_to_hill(1, &w("0")).unwrap(), w("0"));
        assert!(matches!(
            input_wing_to_hill(1, &w("011")),
            Err(CliffError::NotAWingMember { .. })
        ));
        assert_eq!(hill_to_input_wing(2, &w("001")).unwrap(), w("013"));

        assert_eq!(input_wing_to_butterfly(1, &w("012")).unwrap(), w("013"));
        assert_eq!(input_wing_to_butterfly(2, &w("01")).unwrap(), w("01"));
        assert_eq!(input_wing_to_butterfly(1, &w("0")).unwrap(), w("0"));
        let image = input_wing_to_butterfly(1, &w("012")).unwrap();
        assert!(is_canyon_butterfly(2, &image));
    }

    #[test]
    fn canyon_to_hill_is_a_bijection_at_size_three() {
        let d = st(1);
        assert_eq!(canyon_to_hill(&d, &w("012")).unwrap(), w("012"));
        assert_eq!(canyon_to_hill(&d, &w("000")).unwrap(), w("000"));
        assert_eq!(canyon_to_hill(&d, &w("010")).unwrap(), w("011"));

        let canyons = Family::canyon(d.clone());
        let hills = Family::hill(d.clone());
        let images: BTreeSet<Word> = canyons
            .elements(3)
            .iter()
            .map(|u| canyon_to_hill(&d, u).unwrap())
            .collect();
        let targets: BTreeSet<Word> = hills.elements(3).into_iter().collect();
        assert_eq!(images, targets);

        assert!(matches!(
            canyon_to_hill(&st(0), &w("00")),
            Err(CliffError::NotIncreasing)
        ));
    }
}
