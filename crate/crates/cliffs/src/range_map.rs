//! Finitely presented maps from positive positions to letter bounds.
//!
//! A [`RangeMap`] assigns a natural bound to every position `i >= 1`. It is
//! stored as an explicit prefix plus a tail rule (constant, affine, or
//! periodic), which makes the monotonicity and valley predicates decidable
//! exactly: the prefix region is scanned, the tail is handled analytically.
//!
//! The staircase maps `m(k)` with values `0, k, 2k, 3k, ...` are the bounds
//! under which the classical Fuss-Catalan families live; they are represented
//! as an empty prefix with an affine tail.

use std::fmt;

use crate::error::{CliffError, Result};

/// Letters and bounds are small naturals.
pub type Letter = u32;

/// Tail rule of a [`RangeMap`], applied beyond the explicit prefix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Tail {
    /// Every remaining position gets the same bound.
    Const(Letter),
    /// Position `|prefix| + 1 + k` gets `base + step * k`.
    Affine { base: Letter, step: Letter },
    /// The word repeats forever beyond the prefix. Never empty.
    Periodic(Vec<Letter>),
}

/// A finitely presented map from positions `1, 2, 3, ...` to bounds.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RangeMap {
    prefix: Vec<Letter>,
    tail: Tail,
}

/// Predicate values computed by [`RangeMap::classify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    /// `delta(i) <= delta(i+1)` for all positions.
    pub weakly_increasing: bool,
    /// `delta(i) < delta(i+1)` for all positions.
    pub increasing: bool,
    /// No positions `i1 < i2 < i3` with `delta(i1) > delta(i2) < delta(i3)`.
    pub valley_free: bool,
    /// Some k exists with `delta(j) >= delta(k')` for all `k' >= k`.
    pub j_dominated: bool,
}

impl RangeMap {
    /// Builds a map from an explicit prefix and a tail rule.
    pub fn new(prefix: Vec<Letter>, tail: Tail) -> Result<Self> {
        if let Tail::Periodic(w) = &tail {
            if w.is_empty() {
                return Err(CliffError::EmptyPeriod);
            }
        }
        Ok(RangeMap { prefix, tail })
    }

    /// The staircase map with values `0, m, 2m, 3m, ...`.
    pub fn staircase(m: Letter) -> Self {
        RangeMap {
            prefix: Vec::new(),
            tail: Tail::Affine { base: 0, step: m },
        }
    }

    /// The constant map `c, c, c, ...`.
    pub fn constant(c: Letter) -> Self {
        RangeMap {
            prefix: Vec::new(),
            tail: Tail::Const(c),
        }
    }

    /// Explicit prefix of the presentation.
    pub fn prefix(&self) -> &[Letter] {
        &self.prefix
    }

    /// Tail rule of the presentation.
    pub fn tail(&self) -> &Tail {
        &self.tail
    }

    /// Value at a 1-based position.
    ///
    /// Panics if `i == 0`; range maps are defined on positive positions only.
    pub fn at(&self, i: usize) -> Letter {
        assert!(i >= 1, "range maps are defined on positions >= 1");
        if i <= self.prefix.len() {
            return self.prefix[i - 1];
        }
        let k = (i - self.prefix.len() - 1) as u64;
        match &self.tail {
            Tail::Const(c) => *c,
            Tail::Affine { base, step } => {
                let v = u64::from(*base) + u64::from(*step) * k;
                Letter::try_from(v).expect("range map value exceeds letter capacity")
            }
            Tail::Periodic(w) => w[(k % w.len() as u64) as usize],
        }
    }

    /// Smallest horizon accepted by [`RangeMap::classify`].
    ///
    /// Covers the prefix plus two full periods of the tail (constant and
    /// affine tails count as period one), which is enough to decide every
    /// tail-boundary interaction by scanning.
    pub fn required_horizon(&self) -> usize {
        let period = match &self.tail {
            Tail::Periodic(w) => w.len(),
            _ => 1,
        };
        self.prefix.len() + 2 * period
    }

    /// Decides the four order-shape predicates.
    ///
    /// `horizon` must be at least [`RangeMap::required_horizon`]; `j >= 1` is
    /// the position tested for domination. Answers are exact for the whole
    /// infinite map, not just the scanned region.
    pub fn classify(&self, horizon: usize, j: usize) -> Result<Classification> {
        let needed = self.required_horizon();
        if horizon < needed {
            return Err(CliffError::HorizonTooSmall {
                given: horizon,
                needed,
            });
        }
        if j == 0 {
            return Err(CliffError::ZeroPosition);
        }
        Ok(Classification {
            weakly_increasing: self.is_weakly_increasing(),
            increasing: self.is_increasing(),
            valley_free: self.is_valley_free(),
            j_dominated: self.is_dominated(j),
        })
    }

    /// `delta(i) <= delta(i+1)` for every position.
    pub fn is_weakly_increasing(&self) -> bool {
        for i in 1..=self.prefix.len() {
            if self.at(i) > self.at(i + 1) {
                return false;
            }
        }
        match &self.tail {
            Tail::Const(_) | Tail::Affine { .. } => true,
            Tail::Periodic(w) => w.iter().all(|&x| x == w[0]),
        }
    }

    /// `delta(i) < delta(i+1)` for every position.
    pub fn is_increasing(&self) -> bool {
        for i in 1..=self.prefix.len() {
            if self.at(i) >= self.at(i + 1) {
                return false;
            }
        }
        // An infinite tail with repeated values can never be strict.
        match &self.tail {
            Tail::Const(_) => false,
            Tail::Affine { step, .. } => *step > 0,
            Tail::Periodic(_) => false,
        }
    }

    /// No `i1 < i2 < i3` with `delta(i1) > delta(i2) < delta(i3)`.
    pub fn is_valley_free(&self) -> bool {
        // Valley with the middle position inside the prefix.
        let mut max_before: Option<Letter> = None;
        for t in 1..=self.prefix.len() {
            let v = self.at(t);
            if max_before.is_some_and(|m| m > v) {
                let later_in_prefix = (t + 1..=self.prefix.len()).any(|s| self.at(s) > v);
                if later_in_prefix || self.tail_has_value_gt(v) {
                    return false;
                }
            }
            max_before = Some(max_before.map_or(v, |m| m.max(v)));
        }
        // Valley with the middle position inside the tail. Constant tails
        // have nothing larger after them; affine tails are weakly increasing,
        // so only a prefix value above the tail start can sit before a
        // growing tail; a non-constant periodic word revisits its minimum
        // with its maximum on both sides forever.
        let prefix_max = self.prefix.iter().copied().max();
        match &self.tail {
            Tail::Const(_) => true,
            Tail::Affine { base, step } => {
                !(*step > 0 && prefix_max.is_some_and(|p| p > *base))
            }
            Tail::Periodic(w) => w.iter().all(|&x| x == w[0]),
        }
    }

    /// Does any position beyond the prefix carry a value `> x`?
    fn tail_has_value_gt(&self, x: Letter) -> bool {
        match &self.tail {
            Tail::Const(c) => *c > x,
            Tail::Affine { base, step } => {
                if *step > 0 {
                    true
                } else {
                    *base > x
                }
            }
            Tail::Periodic(w) => w.iter().any(|&v| v > x),
        }
    }

    /// Least upper bound of all but finitely many values, when bounded.
    fn eventual_sup(&self) -> Option<Letter> {
        match &self.tail {
            Tail::Const(c) => Some(*c),
            Tail::Affine { base, step } => {
                if *step > 0 {
                    None
                } else {
                    Some(*base)
                }
            }
            Tail::Periodic(w) => w.iter().copied().max(),
        }
    }

    /// Is `delta(j)` eventually at least every later value?
    pub fn is_dominated(&self, j: usize) -> bool {
        match self.eventual_sup() {
            None => false,
            Some(s) => self.at(j) >= s,
        }
    }

    /// Number of positions `i <= n` with a nonzero bound.
    pub fn alpha(&self, n: usize) -> usize {
        (1..=n).filter(|&i| self.at(i) != 0).count()
    }

    /// Parses the textual presentation grammar:
    /// `m(<k>)`, `seq[..];const(<c>)`, `seq[..];affine(<a>,<b>)`,
    /// `seq[..];periodic[..]`.
    pub fn parse(input: &str) -> Result<Self> {
        let bad = |reason: &str| CliffError::BadRangeMapSpec {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let s = input.trim();
        if let Some(rest) = s.strip_prefix("m(") {
            let inner = rest.strip_suffix(')').ok_or_else(|| bad("missing `)`"))?;
            let m = parse_letter(inner).map_err(|r| bad(&r))?;
            return Ok(RangeMap::staircase(m));
        }
        let rest = s
            .strip_prefix("seq[")
            .ok_or_else(|| bad("expected `m(...)` or `seq[...]`"))?;
        let close = rest.find(']').ok_or_else(|| bad("missing `]` after seq"))?;
        let prefix = parse_letter_list(&rest[..close]).map_err(|r| bad(&r))?;
        let rest = rest[close + 1..]
            .strip_prefix(';')
            .ok_or_else(|| bad("expected `;` after seq[...]"))?;
        let tail = if let Some(arg) = rest.strip_prefix("const(") {
            let inner = arg.strip_suffix(')').ok_or_else(|| bad("missing `)`"))?;
            Tail::Const(parse_letter(inner).map_err(|r| bad(&r))?)
        } else if let Some(arg) = rest.strip_prefix("affine(") {
            let inner = arg.strip_suffix(')').ok_or_else(|| bad("missing `)`"))?;
            let parts: Vec<&str> = inner.split(',').collect();
            if parts.len() != 2 {
                return Err(bad("affine takes exactly two arguments"));
            }
            Tail::Affine {
                base: parse_letter(parts[0]).map_err(|r| bad(&r))?,
                step: parse_letter(parts[1]).map_err(|r| bad(&r))?,
            }
        } else if let Some(arg) = rest.strip_prefix("periodic[") {
            let inner = arg.strip_suffix(']').ok_or_else(|| bad("missing `]`"))?;
            let word = parse_letter_list(inner).map_err(|r| bad(&r))?;
            if word.is_empty() {
                return Err(CliffError::EmptyPeriod);
            }
            Tail::Periodic(word)
        } else {
            return Err(bad("expected const(...), affine(...) or periodic[...]"));
        };
        RangeMap::new(prefix, tail)
    }
}

fn parse_letter(s: &str) -> std::result::Result<Letter, String> {
    s.trim()
        .parse::<Letter>()
        .map_err(|_| format!("`{}` is not a natural number", s.trim()))
}

fn parse_letter_list(s: &str) -> std::result::Result<Vec<Letter>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_letter).collect()
}

impl fmt::Display for RangeMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.prefix.is_empty() {
            if let Tail::Affine { base: 0, step } = self.tail {
                return write!(f, "m({step})");
            }
        }
        write!(f, "seq[")?;
        for (k, d) in self.prefix.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "];")?;
        match &self.tail {
            Tail::Const(c) => write!(f, "const({c})"),
            Tail::Affine { base, step } => write!(f, "affine({base},{step})"),
            Tail::Periodic(w) => {
                write!(f, "periodic[")?;
                for (k, d) in w.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{d}")?;
                }
                write!(f, "]")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Scanning oracle for the predicates: checks all positions (or triples)
    /// up to a horizon that provably suffices for the presentations tested.
    fn scan_weakly_increasing(d: &RangeMap, h: usize) -> bool {
        (1..h).all(|i| d.at(i) <= d.at(i + 1))
    }

    fn scan_increasing(d: &RangeMap, h: usize) -> bool {
        (1..h).all(|i| d.at(i) < d.at(i + 1))
    }

    fn scan_valley_free(d: &RangeMap, h: usize) -> bool {
        for i1 in 1..=h {
            for i2 in i1 + 1..=h {
                for i3 in i2 + 1..=h {
                    if d.at(i1) > d.at(i2) && d.at(i2) < d.at(i3) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn all_test_maps() -> Vec<RangeMap> {
        vec![
            RangeMap::staircase(0),
            RangeMap::staircase(1),
            RangeMap::staircase(2),
            RangeMap::staircase(3),
            RangeMap::constant(0),
            RangeMap::constant(2),
            RangeMap::parse("seq[2,3];const(1)").unwrap(),
            RangeMap::parse("seq[0,1,3,1];const(2)").unwrap(),
            RangeMap::parse("seq[1,0];const(2)").unwrap(),
            RangeMap::parse("seq[0,2];const(1)").unwrap(),
            RangeMap::parse("seq[5,1];affine(0,2)").unwrap(),
            RangeMap::parse("seq[];periodic[0,2,1]").unwrap(),
            RangeMap::parse("seq[3];periodic[1,1]").unwrap(),
            RangeMap::parse("seq[1,1,2,3,3];const(4)").unwrap(),
            RangeMap::parse("seq[1,0,2,1];periodic[1]").unwrap(),
        ]
    }

    #[test]
    fn evaluation_matches_presentation() {
        let d = RangeMap::staircase(2);
        assert_eq!(
            (1..=5).map(|i| d.at(i)).collect::<Vec<_>>(),
            vec![0, 2, 4, 6, 8]
        );
        let d = RangeMap::parse("seq[0,1,3,1];const(2)").unwrap();
        assert_eq!(
            (1..=6).map(|i| d.at(i)).collect::<Vec<_>>(),
            vec![0, 1, 3, 1, 2, 2]
        );
        let d = RangeMap::parse("seq[3];periodic[1,2]").unwrap();
        assert_eq!(
            (1..=6).map(|i| d.at(i)).collect::<Vec<_>>(),
            vec![3, 1, 2, 1, 2, 1]
        );
    }

    #[test]
    fn predicates_agree_with_scanning_oracle() {
        // Horizon 40 is far past every prefix + period + affine crossover
        // among the test maps, so the scan decides the same language.
        for d in all_test_maps() {
            let h = 40;
            assert_eq!(
                d.is_weakly_increasing(),
                scan_weakly_increasing(&d, h),
                "weakly increasing mismatch for {d}"
            );
            assert_eq!(
                d.is_increasing(),
                scan_increasing(&d, h),
                "increasing mismatch for {d}"
            );
            assert_eq!(
                d.is_valley_free(),
                scan_valley_free(&d, h),
                "valley-free mismatch for {d}"
            );
        }
    }

    #[test]
    fn classification_of_named_maps() {
        let d = RangeMap::parse("seq[0,1,3,1];const(2)").unwrap();
        let c = d.classify(d.required_horizon(), 1).unwrap();
        assert!(!c.valley_free);

        let d = RangeMap::parse("seq[2,3];const(1)").unwrap();
        let c = d.classify(d.required_horizon(), 1).unwrap();
        assert!(c.valley_free);
        assert!(c.j_dominated);
        assert!(!c.weakly_increasing);

        let d = RangeMap::staircase(2);
        let c = d.classify(d.required_horizon(), 1).unwrap();
        assert!(c.weakly_increasing && c.increasing && c.valley_free);
        assert!(!c.j_dominated);

        let d = RangeMap::staircase(0);
        let c = d.classify(d.required_horizon(), 1).unwrap();
        assert!(c.weakly_increasing && !c.increasing && c.valley_free);
        assert!(c.j_dominated);
    }

    #[test]
    fn alpha_counts_nonzero_bounds() {
        assert_eq!(RangeMap::staircase(1).alpha(3), 2);
        assert_eq!(RangeMap::staircase(2).alpha(1), 0);
        assert_eq!(RangeMap::parse("seq[2,3];const(1)").unwrap().alpha(4), 4);
        assert_eq!(RangeMap::staircase(0).alpha(5), 0);
    }

    #[test]
    fn domination_checks_eventual_values_only() {
        // The large prefix value dominates a constant tail.
        let d = RangeMap::parse("seq[9,0];const(3)").unwrap();
        assert!(d.is_dominated(1));
        assert!(!d.is_dominated(2));
        assert!(d.is_dominated(3));
        // Nothing dominates an unbounded tail.
        let d = RangeMap::parse("seq[9];affine(0,1)").unwrap();
        assert!(!d.is_dominated(1));
    }

    #[test]
    fn horizon_and_position_are_validated() {
        let d = RangeMap::parse("seq[1,2];periodic[0,1,2]").unwrap();
        assert_eq!(d.required_horizon(), 8);
        assert!(matches!(
            d.classify(7, 1),
            Err(CliffError::HorizonTooSmall { given: 7, needed: 8 })
        ));
        assert!(matches!(d.classify(8, 0), Err(CliffError::ZeroPosition)));
        assert!(d.classify(8, 1).is_ok());
    }

    #[test]
    fn parse_display_round_trip() {
        for d in all_test_maps() {
            let shown = d.to_string();
            let back = RangeMap::parse(&shown).unwrap();
            assert_eq!(d, back, "round trip failed for {shown}");
        }
        assert_eq!(RangeMap::parse("m(2)").unwrap(), RangeMap::staircase(2));
        assert_eq!(RangeMap::staircase(2).to_string(), "m(2)");
        assert_eq!(
            RangeMap::parse("seq[];const(1)").unwrap(),
            RangeMap::constant(1)
        );
        assert!(RangeMap::parse("seq[1;const(1)").is_err());
        assert!(RangeMap::parse("seq[1];periodic[]").is_err());
        assert!(RangeMap::parse("wat(3)").is_err());
        assert!(RangeMap::parse("seq[x];const(1)").is_err());
    }
}
