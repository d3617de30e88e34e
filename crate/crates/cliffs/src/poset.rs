//! Finite posets with explicit order matrices.
//!
//! Elements are kept sorted by their natural order so every derived listing
//! (covers, intervals, exports) is deterministic. The order relation is
//! stored as one bit row per element in both directions, which makes cover
//! computation, interval extraction, and meet / join searches cheap set
//! arithmetic.

use std::fmt;
use std::fmt::Write as _;

use crate::error::{CliffError, Result};
use crate::subset::GradedSubset;
use crate::words::Word;

/// Fixed-capacity bit set used for the order rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bitset {
    words: Vec<u64>,
    len: usize,
}

impl Bitset {
    pub fn new(len: usize) -> Self {
        Bitset {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn intersection(&self, other: &Bitset) -> Bitset {
        debug_assert_eq!(self.len, other.len);
        Bitset {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
            len: self.len,
        }
    }

    pub fn intersection_count(&self, other: &Bitset) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_superset(&self, other: &Bitset) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| b & !a == 0)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(64 * k + b)
                }
            })
        })
    }
}

/// A finite poset over sorted, deduplicated elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset<T> {
    elements: Vec<T>,
    below: Vec<Bitset>,
    above: Vec<Bitset>,
    lower_covers: Vec<Vec<usize>>,
    upper_covers: Vec<Vec<usize>>,
}

impl<T: Ord + Clone> Poset<T> {
    /// Builds the poset of `elements` under `leq`. Elements are sorted and
    /// deduplicated; `leq` must be a partial order on them.
    pub fn new(mut elements: Vec<T>, leq: impl Fn(&T, &T) -> bool) -> Self {
        elements.sort();
        elements.dedup();
        let n = elements.len();
        let mut below = vec![Bitset::new(n); n];
        let mut above = vec![Bitset::new(n); n];
        for i in 0..n {
            for j in 0..n {
                if leq(&elements[i], &elements[j]) {
                    below[j].set(i);
                    above[i].set(j);
                }
            }
        }
        // j covers i exactly when the closed interval [i, j] has two points.
        let mut lower_covers = vec![Vec::new(); n];
        let mut upper_covers = vec![Vec::new(); n];
        for i in 0..n {
            for j in 0..n {
                if i != j && below[j].get(i) && above[i].intersection_count(&below[j]) == 2 {
                    upper_covers[i].push(j);
                    lower_covers[j].push(i);
                }
            }
        }
        Poset {
            elements,
            below,
            above,
            lower_covers,
            upper_covers,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &T {
        &self.elements[i]
    }

    pub fn index_of(&self, x: &T) -> Option<usize> {
        self.elements.binary_search(x).ok()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.below[j].get(i)
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper_covers[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower_covers[i]
    }

    /// All cover pairs `(lower, upper)`, in index order.
    pub fn cover_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, ups) in self.upper_covers.iter().enumerate() {
            for &j in ups {
                out.push((i, j));
            }
        }
        out
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.lower_covers[i].is_empty())
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.upper_covers[i].is_empty())
            .collect()
    }

    /// Least element, when it exists.
    pub fn minimum(&self) -> Option<usize> {
        (0..self.len()).find(|&i| self.above[i].count() == self.len())
    }

    /// Greatest element, when it exists.
    pub fn maximum(&self) -> Option<usize> {
        (0..self.len()).find(|&i| self.below[i].count() == self.len())
    }

    /// Greatest lower bound of two elements, when it exists.
    pub fn meet(&self, i: usize, j: usize) -> Option<usize> {
        let common = self.below[i].intersection(&self.below[j]);
        let best = common.ones().find(|&k| self.below[k].is_superset(&common));
        best
    }

    /// Least upper bound of two elements, when it exists.
    pub fn join(&self, i: usize, j: usize) -> Option<usize> {
        let common = self.above[i].intersection(&self.above[j]);
        let best = common.ones().find(|&k| self.above[k].is_superset(&common));
        best
    }

    /// Do all pairs admit both a meet and a join?
    pub fn is_lattice(&self) -> bool {
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.meet(i, j).is_none() || self.join(i, j).is_none() {
                    return false;
                }
            }
        }
        true
    }

    /// Indices of the closed interval `[i, j]`, ascending.
    pub fn interval(&self, i: usize, j: usize) -> Vec<usize> {
        self.above[i].intersection(&self.below[j]).ones().collect()
    }

    /// Is `set` exactly a closed interval `[a, b]` of this poset?
    pub fn is_interval_set(&self, set: &[usize]) -> bool {
        if set.is_empty() {
            return false;
        }
        let mut in_set = Bitset::new(self.len());
        for &k in set {
            in_set.set(k);
        }
        let minimals: Vec<usize> = set
            .iter()
            .copied()
            .filter(|&k| self.below[k].intersection_count(&in_set) == 1)
            .collect();
        let maximals: Vec<usize> = set
            .iter()
            .copied()
            .filter(|&k| self.above[k].intersection_count(&in_set) == 1)
            .collect();
        if minimals.len() != 1 || maximals.len() != 1 {
            return false;
        }
        let full = self.above[minimals[0]].intersection(&self.below[maximals[0]]);
        full == in_set
    }

    /// Induced subposet on the elements at `keep`.
    pub fn induced(&self, keep: &[usize]) -> Poset<T> {
        let elems: Vec<T> = keep.iter().map(|&k| self.elements[k].clone()).collect();
        Poset::new(elems, |a, b| {
            let ia = self.index_of(a).expect("element of the parent poset");
            let ib = self.index_of(b).expect("element of the parent poset");
            self.leq(ia, ib)
        })
    }

    /// Replaces the interval `set` by two stacked copies (Day's doubling).
    /// Copies carry tag 0 / 1; outside elements keep tag 0 and compare by
    /// the original order alone. `set` must be convex (an interval), else
    /// the tagged relation is not transitive.
    pub fn doubled(&self, set: &[usize]) -> Poset<(T, u8)> {
        let mut in_set = vec![false; self.len()];
        for &k in set {
            in_set[k] = true;
        }
        let mut elems: Vec<(T, u8)> = Vec::with_capacity(self.len() + set.len());
        for (i, e) in self.elements.iter().enumerate() {
            elems.push((e.clone(), 0));
            if in_set[i] {
                elems.push((e.clone(), 1));
            }
        }
        Poset::new(elems, |(x, a), (y, b)| {
            let ix = self.index_of(x).expect("element of the parent poset");
            let iy = self.index_of(y).expect("element of the parent poset");
            self.leq(ix, iy) && (!in_set[ix] || !in_set[iy] || a <= b)
        })
    }

    /// One deterministic linear extension (indices in topological order).
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut remaining: Vec<usize> = (0..self.len()).collect();
        let mut placed = Bitset::new(self.len());
        let mut out = Vec::with_capacity(self.len());
        while !remaining.is_empty() {
            let pos = remaining
                .iter()
                .position(|&i| self.lower_covers[i].iter().all(|&k| placed.get(k)))
                .expect("cover relation is acyclic");
            let i = remaining.remove(pos);
            placed.set(i);
            out.push(i);
        }
        out
    }

    /// Longest-chain statistics used for isomorphism pruning.
    fn signatures(&self) -> Vec<(usize, usize, usize, usize, usize, usize)> {
        let order = self.linear_extension();
        let mut height = vec![0usize; self.len()];
        for &i in &order {
            height[i] = self.lower_covers[i]
                .iter()
                .map(|&k| height[k] + 1)
                .max()
                .unwrap_or(0);
        }
        let mut depth = vec![0usize; self.len()];
        for &i in order.iter().rev() {
            depth[i] = self.upper_covers[i]
                .iter()
                .map(|&k| depth[k] + 1)
                .max()
                .unwrap_or(0);
        }
        (0..self.len())
            .map(|i| {
                (
                    height[i],
                    depth[i],
                    self.lower_covers[i].len(),
                    self.upper_covers[i].len(),
                    self.below[i].count(),
                    self.above[i].count(),
                )
            })
            .collect()
    }

    /// Searches for an order isomorphism onto `other`; the result maps this
    /// poset's indices to indices of `other`.
    pub fn isomorphism_to<U: Ord + Clone>(&self, other: &Poset<U>) -> Option<Vec<usize>> {
        if self.len() != other.len() {
            return None;
        }
        let sig_a = self.signatures();
        let sig_b = other.signatures();
        {
            let mut sa = sig_a.clone();
            let mut sb = sig_b.clone();
            sa.sort_unstable();
            sb.sort_unstable();
            if sa != sb {
                return None;
            }
        }
        let candidates: Vec<Vec<usize>> = sig_a
            .iter()
            .map(|s| (0..self.len()).filter(|&j| sig_b[j] == *s).collect())
            .collect();
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| candidates[i].len());
        let mut map = vec![usize::MAX; self.len()];
        let mut used = vec![false; self.len()];
        if self.assign(other, &candidates, &order, 0, &mut map, &mut used) {
            Some(map)
        } else {
            None
        }
    }

    fn assign<U: Ord + Clone>(
        &self,
        other: &Poset<U>,
        candidates: &[Vec<usize>],
        order: &[usize],
        pos: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let i = order[pos];
        for &j in &candidates[i] {
            if used[j] {
                continue;
            }
            let consistent = order[..pos].iter().all(|&k| {
                self.leq(i, k) == other.leq(j, map[k]) && self.leq(k, i) == other.leq(map[k], j)
            });
            if consistent {
                map[i] = j;
                used[j] = true;
                if self.assign(other, candidates, order, pos + 1, map, used) {
                    return true;
                }
                map[i] = usize::MAX;
                used[j] = false;
            }
        }
        false
    }
}

impl<T: Ord + Clone + fmt::Display> Poset<T> {
    /// Hasse diagram as a DOT digraph, drawn bottom to top.
    pub fn dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{name}\" {{");
        let _ = writeln!(out, "  rankdir=BT;");
        let _ = writeln!(out, "  node [shape=box];");
        for (i, e) in self.elements.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{e}\"];");
        }
        for (i, j) in self.cover_edges() {
            let _ = writeln!(out, "  n{i} -> n{j};");
        }
        out.push_str("}\n");
        out
    }
}

/// Default cap on poset sizes built from a subset enumeration.
pub const DEFAULT_SIZE_GUARD: usize = 1_000_000;

/// Builds the size-`n` slice of a graded subset as a poset under the
/// componentwise order.
pub fn build_poset<S: GradedSubset + ?Sized>(
    s: &S,
    n: usize,
    guard: Option<usize>,
) -> Result<Poset<Word>> {
    let elements = s.elements_guarded(n, guard.unwrap_or(DEFAULT_SIZE_GUARD))?;
    Ok(Poset::new(elements, Word::leq))
}

/// Does every cover of this word poset change exactly one letter?
fn covers_change_one_letter(p: &Poset<Word>) -> bool {
    p.cover_edges().into_iter().all(|(i, j)| {
        let u = p.element(i);
        let v = p.element(j);
        u.letters()
            .iter()
            .zip(v.letters())
            .filter(|(a, b)| a != b)
            .count()
            == 1
    })
}

/// Structural evidence about a graded subset, checked exhaustively for all
/// sizes up to a bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubsetEvidence {
    /// Every cover changes exactly one letter.
    pub straight: bool,
    /// Mixing a prefix of a member below another member keeps membership.
    pub coated: bool,
    pub closed_by_prefix: bool,
    /// The empty word is a member and appending 0 preserves membership.
    pub min_extendable: bool,
    /// Appending the bound letter preserves membership.
    pub max_extendable: bool,
}

/// Checks the five structural predicates for all sizes `<= n_max`. This is
/// bounded-size evidence, not a proof.
pub fn subset_predicates<S: GradedSubset + ?Sized>(s: &S, n_max: usize) -> Result<SubsetEvidence> {
    let mut ev = SubsetEvidence {
        straight: true,
        coated: true,
        closed_by_prefix: true,
        min_extendable: s.contains(&Word::empty()),
        max_extendable: s.contains(&Word::empty()),
    };
    for n in 0..=n_max {
        let poset = build_poset(s, n, None)?;
        if !covers_change_one_letter(&poset) {
            ev.straight = false;
        }
        for u in poset.elements() {
            if n >= 1 && !s.contains(&u.prefix(n - 1)) {
                ev.closed_by_prefix = false;
            }
            if !s.contains(&u.appended(0)) {
                ev.min_extendable = false;
            }
            if !s.contains(&u.appended(s.delta().at(n + 1))) {
                ev.max_extendable = false;
            }
        }
        for i in 0..poset.len() {
            for j in 0..poset.len() {
                if !poset.leq(i, j) {
                    continue;
                }
                let u = poset.element(i);
                let v = poset.element(j);
                for cut in 1..n {
                    let mixed = u.prefix(cut).concat(&Word::from(&v.letters()[cut..]));
                    if !s.contains(&mixed) {
                        ev.coated = false;
                    }
                }
            }
        }
    }
    Ok(ev)
}

/// Cover-degree extremes of a straight subset at one size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wings {
    /// Elements with exactly `alpha_n` lower covers.
    pub input_wings: Vec<Word>,
    /// Elements with exactly `alpha_n` upper covers.
    pub output_wings: Vec<Word>,
    /// Elements in both lists.
    pub butterflies: Vec<Word>,
}

/// Computes the wing sets at size `n`; the subset must be straight there.
pub fn wings<S: GradedSubset + ?Sized>(s: &S, n: usize) -> Result<Wings> {
    let poset = build_poset(s, n, None)?;
    if !covers_change_one_letter(&poset) {
        return Err(CliffError::NotStraight { n });
    }
    let alpha = s.delta().alpha(n);
    let mut wings = Wings {
        input_wings: Vec::new(),
        output_wings: Vec::new(),
        butterflies: Vec::new(),
    };
    for i in 0..poset.len() {
        let input = poset.lower_covers(i).len() == alpha;
        let output = poset.upper_covers(i).len() == alpha;
        if input {
            wings.input_wings.push(poset.element(i).clone());
        }
        if output {
            wings.output_wings.push(poset.element(i).clone());
        }
        if input && output {
            wings.butterflies.push(poset.element(i).clone());
        }
    }
    Ok(wings)
}

/// Lattice-theoretic report on a subset poset inside its ambient box.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeChecks {
    pub is_lattice: bool,
    /// Componentwise minima of members stay members.
    pub is_meet_semisub: bool,
    /// Componentwise maxima of members stay members.
    pub is_join_semisub: bool,
    /// Positions where the arguments agree survive into the poset meet.
    /// Absent when the poset is not a lattice.
    pub is_meet_stable: Option<bool>,
    /// Dual of `is_meet_stable`, for the poset join.
    pub is_join_stable: Option<bool>,
}

/// Runs the lattice checks of a word poset against its ambient box poset.
pub fn lattice_checks(p: &Poset<Word>, ambient: &Poset<Word>) -> Result<LatticeChecks> {
    for u in p.elements() {
        if ambient.index_of(u).is_none() {
            return Err(CliffError::NotAMember {
                word: u.to_string(),
            });
        }
    }
    let is_lattice = p.is_lattice();
    let mut meet_semisub = true;
    let mut join_semisub = true;
    let mut meet_stable = true;
    let mut join_stable = true;
    for i in 0..p.len() {
        for j in i..p.len() {
            let u = p.element(i);
            let v = p.element(j);
            if p.index_of(&u.meet(v)?).is_none() {
                meet_semisub = false;
            }
            if p.index_of(&u.join(v)?).is_none() {
                join_semisub = false;
            }
            if is_lattice {
                let pm = p.element(p.meet(i, j).expect("lattice has meets"));
                let pj = p.element(p.join(i, j).expect("lattice has joins"));
                for k in 0..u.len() {
                    let (a, b) = (u.letters()[k], v.letters()[k]);
                    if a == b {
                        if pm.letters()[k] != a {
                            meet_stable = false;
                        }
                        if pj.letters()[k] != a {
                            join_stable = false;
                        }
                    }
                }
            }
        }
    }
    Ok(LatticeChecks {
        is_lattice,
        is_meet_semisub: meet_semisub,
        is_join_semisub: join_semisub,
        is_meet_stable: is_lattice.then_some(meet_stable),
        is_join_stable: is_lattice.then_some(join_stable),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::range_map::RangeMap;
    use crate::subset::FullBox;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn box_poset(m: u32, n: usize) -> Poset<Word> {
        build_poset(&FullBox::new(RangeMap::staircase(m)), n, None).unwrap()
    }

    fn edge_strings(p: &Poset<Word>) -> Vec<String> {
        p.cover_edges()
            .into_iter()
            .map(|(i, j)| format!("{}<{}", p.element(i), p.element(j)))
            .collect()
    }

    #[test]
    fn covers_of_the_small_box() {
        let p = box_poset(1, 3);
        assert_eq!(
            p.elements().iter().map(Word::to_string).collect::<Vec<_>>(),
            vec!["0,0,0", "0,0,1", "0,0,2", "0,1,0", "0,1,1", "0,1,2"]
        );
        assert_eq!(
            edge_strings(&p),
            vec![
                "0,0,0<0,0,1",
                "0,0,0<0,1,0",
                "0,0,1<0,0,2",
                "0,0,1<0,1,1",
                "0,0,2<0,1,2",
                "0,1,0<0,1,1",
                "0,1,1<0,1,2",
            ]
        );
    }

    #[test]
    fn box_is_a_lattice_with_componentwise_bounds() {
        let p = box_poset(2, 3);
        assert!(p.is_lattice());
        for i in 0..p.len() {
            for j in 0..p.len() {
                let m = p.meet(i, j).unwrap();
                let jn = p.join(i, j).unwrap();
                assert_eq!(
                    p.element(m),
                    &p.element(i).meet(p.element(j)).unwrap(),
                    "meet is componentwise in the box"
                );
                assert_eq!(p.element(jn), &p.element(i).join(p.element(j)).unwrap());
            }
        }
        assert_eq!(p.minimum(), Some(0));
        assert_eq!(p.maximum(), Some(p.len() - 1));
    }

    #[test]
    fn intervals_and_interval_sets() {
        let p = box_poset(1, 3);
        let bot = p.index_of(&w("000")).unwrap();
        let mid = p.index_of(&w("011")).unwrap();
        let seg: Vec<String> = p
            .interval(bot, mid)
            .into_iter()
            .map(|k| p.element(k).to_string())
            .collect();
        assert_eq!(seg, vec!["0,0,0", "0,0,1", "0,1,0", "0,1,1"]);
        let idx: Vec<usize> = ["000", "001", "010", "011"]
            .iter()
            .map(|s| p.index_of(&w(s)).unwrap())
            .collect();
        assert!(p.is_interval_set(&idx));
        let not_convex: Vec<usize> = ["000", "011"]
            .iter()
            .map(|s| p.index_of(&w(s)).unwrap())
            .collect();
        assert!(!p.is_interval_set(&not_convex));
        let no_max: Vec<usize> = ["000", "001", "010"]
            .iter()
            .map(|s| p.index_of(&w(s)).unwrap())
            .collect();
        assert!(!p.is_interval_set(&no_max));
    }

    #[test]
    fn doubling_a_point_yields_a_chain() {
        let p = Poset::new(vec![0u32], |a, b| a <= b);
        let d = p.doubled(&[0]);
        assert_eq!(d.len(), 2);
        assert!(d.leq(0, 1));
        assert!(!d.leq(1, 0));
    }

    #[test]
    fn doubling_an_interval_of_a_chain() {
        // Chain 0 < 1 < 2, doubling the interval [1, 1].
        let p = Poset::new(vec![0u32, 1, 2], |a, b| a <= b);
        let i = [1usize];
        assert!(p.is_interval_set(&i));
        let d = p.doubled(&i);
        // Result is the 4-chain 0 < (1,0) < (1,1) < 2.
        let four = Poset::new(vec![0u32, 1, 2, 3], |a, b| a <= b);
        assert!(d.isomorphism_to(&four).is_some());
    }

    #[test]
    fn isomorphism_search_distinguishes_shapes() {
        let chain = Poset::new(vec![0u32, 1, 2, 3], |a, b| a <= b);
        let p = box_poset(1, 2); // 2-chain
        assert!(p.isomorphism_to(&p.clone()).is_some());
        assert!(p.isomorphism_to(&chain).is_none());
        let diamond = Poset::new(vec![(0u8, 0u8), (0, 1), (1, 0), (1, 1)], |a, b| {
            a.0 <= b.0 && a.1 <= b.1
        });
        let other_diamond = box_poset(1, 3).induced(&[0, 1, 3, 4]);
        let iso = other_diamond.isomorphism_to(&diamond).unwrap();
        for i in 0..other_diamond.len() {
            for j in 0..other_diamond.len() {
                assert_eq!(other_diamond.leq(i, j), diamond.leq(iso[i], iso[j]));
            }
        }
    }

    #[test]
    fn dot_export_is_deterministic() {
        let p = box_poset(1, 2);
        let dot = p.dot("box");
        assert!(dot.starts_with("digraph \"box\" {"));
        assert!(dot.contains("rankdir=BT"));
        assert!(dot.contains("n0 [label=\"0,0\"];"));
        assert!(dot.contains("n0 -> n1;"));
        assert_eq!(dot, p.dot("box"));
    }

    #[test]
    fn box_predicates_all_hold() {
        let b = FullBox::new(RangeMap::staircase(1));
        let ev = subset_predicates(&b, 4).unwrap();
        assert!(
            ev.straight
                && ev.coated
                && ev.closed_by_prefix
                && ev.min_extendable
                && ev.max_extendable
        );
    }

    #[test]
    fn box_wings_at_small_sizes() {
        let b = FullBox::new(RangeMap::staircase(1));
        let wings = wings(&b, 2).unwrap();
        assert_eq!(wings.input_wings, vec![w("01")]);
        assert_eq!(wings.output_wings, vec![w("00")]);
        assert!(wings.butterflies.is_empty());
    }

    #[test]
    fn lattice_checks_on_the_box_itself() {
        let p = box_poset(2, 3);
        let checks = lattice_checks(&p, &p).unwrap();
        assert!(checks.is_lattice && checks.is_meet_semisub && checks.is_join_semisub);
        assert_eq!(checks.is_meet_stable, Some(true));
        assert_eq!(checks.is_join_stable, Some(true));
    }
}
