//! Permutations in one-line notation, Bruhat order and the elementary
//! operations on them (left multiplication by value transpositions, parabolic
//! cosets, pattern search).
//!
//! Conventions: a permutation `w` of size `n` is stored through its images
//! `w(1), …, w(n)`; indices and values are 1-based in the whole public API.
//! The graph of `w` is the set of points `(x, w(x))`: `x` is the abscissa
//! (position), `y = w(x)` the ordinate (value). Left multiplication acts on
//! values: `(i j)·w` exchanges the values `i` and `j` in the one-line word.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point `(x, w(x))` of the graph of a permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GraphPoint {
    pub x: usize,
    pub y: usize,
}

impl GraphPoint {
    pub fn new(x: usize, y: usize) -> Self {
        GraphPoint { x, y }
    }
}

impl fmt::Display for GraphPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// A permutation of `{1, …, n}` with its inverse cached.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
    inverse: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its one-line notation `w(1), …, w(n)`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut inverse = vec![0; n];
        for (pos, &value) in images.iter().enumerate() {
            if value == 0 || value > n || inverse[value - 1] != 0 {
                return Err(Error::NotAPermutation { n, images });
            }
            inverse[value - 1] = pos + 1;
        }
        Ok(Permutation { images, inverse })
    }

    /// Builds from images already known to form a permutation.
    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        let mut inverse = vec![0; images.len()];
        for (pos, &value) in images.iter().enumerate() {
            inverse[value - 1] = pos + 1;
        }
        debug_assert!(inverse.iter().all(|&p| p != 0));
        Permutation { images, inverse }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_images_unchecked((1..=n).collect())
    }

    /// The longest element `(n, n-1, …, 1)`.
    pub fn longest(n: usize) -> Self {
        Self::from_images_unchecked((1..=n).rev().collect())
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// `w(x)`; panics when `x` is outside `1..=n`.
    pub fn at(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    /// `w⁻¹(y)`; panics when `y` is outside `1..=n`.
    pub fn position(&self, y: usize) -> usize {
        self.inverse[y - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Permutation {
        Permutation { images: self.inverse.clone(), inverse: self.images.clone() }
    }

    /// The graph points `(x, w(x))` in increasing abscissa.
    pub fn graph(&self) -> impl Iterator<Item = GraphPoint> + '_ {
        self.images.iter().enumerate().map(|(i, &y)| GraphPoint::new(i + 1, y))
    }

    /// The graph point with abscissa `x`.
    pub fn point(&self, x: usize) -> GraphPoint {
        GraphPoint::new(x, self.at(x))
    }

    /// The graph point with ordinate `y`.
    pub fn point_with_value(&self, y: usize) -> GraphPoint {
        GraphPoint::new(self.position(y), y)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `r_w(p, q) = #{i ≤ p : w(i) ≤ q}` for `p, q ∈ 0..=n`.
    pub fn rank(&self, p: usize, q: usize) -> Result<usize> {
        let n = self.size();
        if p > n {
            return Err(Error::OutOfRange { what: "p", value: p, max: n });
        }
        if q > n {
            return Err(Error::OutOfRange { what: "q", value: q, max: n });
        }
        Ok(self.images[..p].iter().filter(|&&v| v <= q).count())
    }

    /// The full rank table of `w`.
    pub fn rank_matrix(&self) -> RankMatrix {
        RankMatrix::new(self)
    }

    /// Composition `self ∘ other`: `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        check_same_size(self, other)?;
        Ok(Self::from_images_unchecked(other.images.iter().map(|&v| self.at(v)).collect()))
    }

    /// `(i j)·w`: exchanges the values `i` and `j`.
    pub fn swap_values(&self, i: usize, j: usize) -> Permutation {
        let mut images = self.images.clone();
        let (pi, pj) = (self.position(i), self.position(j));
        images.swap(pi - 1, pj - 1);
        Self::from_images_unchecked(images)
    }

    /// `γ·w` for the cycle `γ = (c_1 c_2 … c_k)`, which sends `c_1 ↦ c_2 ↦ … ↦ c_k ↦ c_1`.
    /// The entries must be distinct values of `1..=n`.
    pub fn apply_cycle(&self, cycle: &[usize]) -> Result<Permutation> {
        let n = self.size();
        let mut seen = BTreeSet::new();
        for &c in cycle {
            if c == 0 || c > n || !seen.insert(c) {
                return Err(Error::Precondition(format!(
                    "cycle {cycle:?} is not a list of distinct values in 1..={n}"
                )));
            }
        }
        let mut images = self.images.clone();
        for (k, &from) in cycle.iter().enumerate() {
            let to = cycle[(k + 1) % cycle.len()];
            images[self.position(from) - 1] = to;
        }
        Ok(Self::from_images_unchecked(images))
    }

    /// Bruhat comparison `self ≤ other`. Panics if sizes differ; use
    /// [`bruhat_leq`] for a checked version.
    pub fn bruhat_le(&self, other: &Permutation) -> bool {
        assert_eq!(self.size(), other.size(), "Bruhat comparison of different sizes");
        leq_images(&self.images, &other.images)
    }

    /// All permutations of size `n` in lexicographic order.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations { next: Some((1..=n).collect()) }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Parses `"5,10,7,2"`, `"5 10 7 2"` or `"(5,10,7,2)"`.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        let images = trimmed
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|tok| !tok.is_empty())
            .map(|tok| tok.parse::<usize>().map_err(|_| Error::Parse(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        if images.is_empty() {
            return Err(Error::Parse(s.to_string()));
        }
        Permutation::new(images)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Permutation::new(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

/// Iterator over the permutations of a fixed size in lexicographic order.
pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        // Standard next-permutation step.
        if let Some(i) = (1..succ.len()).rev().find(|&i| succ[i - 1] < succ[i]) {
            let j = (i..succ.len()).rev().find(|&j| succ[j] > succ[i - 1]).unwrap();
            succ.swap(i - 1, j);
            succ[i..].reverse();
            self.next = Some(succ);
        }
        Some(Permutation::from_images_unchecked(current))
    }
}

/// The rank table `r_w(p, q)` for `p, q ∈ 0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankMatrix {
    n: usize,
    table: Vec<usize>,
}

impl RankMatrix {
    pub fn new(w: &Permutation) -> Self {
        let n = w.size();
        let mut table = vec![0; (n + 1) * (n + 1)];
        for p in 1..=n {
            for q in 0..=n {
                let above = table[(p - 1) * (n + 1) + q];
                table[p * (n + 1) + q] = above + usize::from(w.at(p) <= q);
            }
        }
        RankMatrix { n, table }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// `r(p, q)`; panics outside `0..=n`.
    pub fn get(&self, p: usize, q: usize) -> usize {
        self.table[p * (self.n + 1) + q]
    }
}

fn check_same_size(v: &Permutation, w: &Permutation) -> Result<()> {
    if v.size() != w.size() {
        return Err(Error::SizeMismatch { left: v.size(), right: w.size() });
    }
    Ok(())
}

/// Rank comparison sweep: `v ≤ w` iff `r_v(p, q) ≥ r_w(p, q)` for all `p, q`.
/// The running difference `r_v(p, ·) - r_w(p, ·)` changes by ±1 on the
/// interval between `v(p)` and `w(p)`, so only that interval is touched.
fn leq_images(v: &[usize], w: &[usize]) -> bool {
    let n = v.len();
    let mut diff = vec![0i32; n + 1];
    for p in 0..n {
        let (a, b) = (v[p], w[p]);
        if a < b {
            for d in &mut diff[a..b] {
                *d += 1;
            }
        } else {
            for d in &mut diff[b..a] {
                *d -= 1;
                if *d < 0 {
                    return false;
                }
            }
        }
    }
    true
}

/// Bruhat order test `v ≤ w`.
pub fn bruhat_leq(v: &Permutation, w: &Permutation) -> Result<bool> {
    check_same_size(v, w)?;
    Ok(leq_images(&v.images, &w.images))
}

/// Length change `ℓ((i j)·v) - ℓ(v)` for `i < j` with `v⁻¹(i) > v⁻¹(j)`:
/// equals `-1 - 2·#{i < k < j : v⁻¹(j) < v⁻¹(k) < v⁻¹(i)}`.
pub fn transposition_length_delta(v: &Permutation, i: usize, j: usize) -> Result<i64> {
    let n = v.size();
    for (what, value) in [("i", i), ("j", j)] {
        if value == 0 || value > n {
            return Err(Error::OutOfRange { what, value, max: n });
        }
    }
    if i >= j || v.position(i) <= v.position(j) {
        return Err(Error::Precondition(format!("need i < j and v⁻¹(i) > v⁻¹(j) for (i, j) = ({i}, {j}) and v = {v}")));
    }
    let (lo, hi) = (v.position(j), v.position(i));
    let between = (i + 1..j).filter(|&k| (lo + 1..hi).contains(&v.position(k))).count();
    Ok(-1 - 2 * between as i64)
}

/// Deletes the positions where `v` and `w` agree and renumbers positions and
/// values monotonically. Bruhat comparability is preserved.
pub fn focalize(v: &Permutation, w: &Permutation) -> Result<(Permutation, Permutation)> {
    check_same_size(v, w)?;
    let kept: Vec<usize> = (1..=v.size()).filter(|&x| v.at(x) != w.at(x)).collect();
    let values: BTreeSet<usize> = kept.iter().map(|&x| v.at(x)).collect();
    let rename = |y: usize| values.range(..y).count() + 1;
    let reduce = |p: &Permutation| Permutation::from_images_unchecked(kept.iter().map(|&x| rename(p.at(x))).collect());
    Ok((reduce(v), reduce(w)))
}

/// `s_i * v = max(v, s_i·v)` in Bruhat order.
pub fn star(i: usize, v: &Permutation) -> Result<Permutation> {
    let n = v.size();
    if i == 0 || i >= n {
        return Err(Error::OutOfRange { what: "i", value: i, max: n.saturating_sub(1) });
    }
    if v.position(i) < v.position(i + 1) {
        Ok(v.swap_values(i, i + 1))
    } else {
        Ok(v.clone())
    }
}

/// The two patterns governing smoothness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pattern {
    /// `a<b<c<d` with `w(d) < w(b) < w(c) < w(a)`.
    P4231,
    /// `a<b<c<d` with `w(c) < w(d) < w(a) < w(b)`.
    P3412,
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::P4231 => write!(f, "4231"),
            Pattern::P3412 => write!(f, "3412"),
        }
    }
}

/// All occurrences `[a, b, c, d]` (positions, increasing) of the pattern, in
/// lexicographic order.
pub fn pattern_occurrences(w: &Permutation, pattern: Pattern) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    visit_occurrences(w, pattern, |occ| {
        out.push(occ);
        true
    });
    out
}

/// Whether `w` contains the pattern.
pub fn contains_pattern(w: &Permutation, pattern: Pattern) -> bool {
    let mut found = false;
    visit_occurrences(w, pattern, |_| {
        found = true;
        false
    });
    found
}

/// Calls `visit` on each occurrence until it returns `false`.
fn visit_occurrences(w: &Permutation, pattern: Pattern, mut visit: impl FnMut([usize; 4]) -> bool) {
    let n = w.size();
    for a in 1..=n {
        let wa = w.at(a);
        for b in a + 1..=n {
            let wb = w.at(b);
            let b_ok = match pattern {
                Pattern::P3412 => wb > wa,
                Pattern::P4231 => wb < wa,
            };
            if !b_ok {
                continue;
            }
            for c in b + 1..=n {
                let wc = w.at(c);
                let c_ok = match pattern {
                    Pattern::P3412 => wc < wa,
                    Pattern::P4231 => wb < wc && wc < wa,
                };
                if !c_ok {
                    continue;
                }
                for d in c + 1..=n {
                    let wd = w.at(d);
                    let d_ok = match pattern {
                        Pattern::P3412 => wc < wd && wd < wa,
                        Pattern::P4231 => wd < wb,
                    };
                    if d_ok && !visit([a, b, c, d]) {
                        return;
                    }
                }
            }
        }
    }
}

/// A set of simple reflections `{s_k}`, given by their indices `k ∈ 1..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParabolicSet {
    n: usize,
    generators: BTreeSet<usize>,
}

impl ParabolicSet {
    pub fn new(n: usize, generators: impl IntoIterator<Item = usize>) -> Result<Self> {
        let generators: BTreeSet<usize> = generators.into_iter().collect();
        if let Some(&bad) = generators.iter().find(|&&k| k == 0 || k >= n) {
            return Err(Error::OutOfRange { what: "generator", value: bad, max: n.saturating_sub(1) });
        }
        Ok(ParabolicSet { n, generators })
    }

    /// `{s_lo, …, s_hi}` (empty when `lo > hi`).
    pub fn interval(n: usize, lo: usize, hi: usize) -> Result<Self> {
        Self::new(n, lo..=hi)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> impl Iterator<Item = usize> + '_ {
        self.generators.iter().copied()
    }

    pub fn contains(&self, k: usize) -> bool {
        self.generators.contains(&k)
    }

    pub fn without(&self, k: usize) -> Self {
        let mut generators = self.generators.clone();
        generators.remove(&k);
        ParabolicSet { n: self.n, generators }
    }

    /// The value intervals `[lo, hi]` permuted by the connected blocks: a run
    /// `s_k, …, s_m` of consecutive generators acts on the values `k..=m+1`.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut blocks: Vec<(usize, usize)> = Vec::new();
        for &k in &self.generators {
            match blocks.last_mut() {
                Some(last) if last.1 == k => last.1 = k + 1,
                _ => blocks.push((k, k + 1)),
            }
        }
        blocks
    }
}

/// The longest element of the parabolic subgroup generated by `set`: each
/// connected block of values is reversed.
pub fn longest_element(set: &ParabolicSet) -> Permutation {
    let mut images: Vec<usize> = (1..=set.size()).collect();
    for (lo, hi) in set.blocks() {
        images[lo - 1..hi].reverse();
    }
    Permutation::from_images_unchecked(images)
}

/// Which end of a coset to pick.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CosetEnd {
    Min,
    Max,
}

/// The minimal or maximal representative of the coset `W_I·w`. Left
/// multiplication permutes values inside each block of `I`, so the
/// representative places each block's values in increasing (min) or
/// decreasing (max) order along the positions they occupy.
pub fn coset_representative(w: &Permutation, set: &ParabolicSet, end: CosetEnd) -> Result<Permutation> {
    if w.size() != set.size() {
        return Err(Error::SizeMismatch { left: w.size(), right: set.size() });
    }
    let mut images = w.images().to_vec();
    for (lo, hi) in set.blocks() {
        let mut positions: Vec<usize> = (lo..=hi).map(|y| w.position(y)).collect();
        positions.sort_unstable();
        for (k, &pos) in positions.iter().enumerate() {
            images[pos - 1] = match end {
                CosetEnd::Min => lo + k,
                CosetEnd::Max => hi - k,
            };
        }
    }
    Ok(Permutation::from_images_unchecked(images))
}

/// Whether `w` is the representative of its coset `W_I·w` at the given end.
pub fn is_coset_representative(w: &Permutation, set: &ParabolicSet, end: CosetEnd) -> Result<bool> {
    Ok(&coset_representative(w, set, end)? == w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Permutation::new(vec![1, 1, 2]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![3, 1]).is_err());
        assert!("1,x,2".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().is_err());
    }

    #[test]
    fn parses_all_separators() {
        assert_eq!(p("(3,1,2)"), p("3 1 2"));
        assert_eq!(p("3, 1, 2").images(), &[3, 1, 2]);
        assert_eq!(p("3,1,2").to_string(), "(3,1,2)");
    }

    #[test]
    fn length_and_rank_goldens() {
        let w = p("5,10,7,2,9,8,1,6,3,4");
        assert_eq!(w.length(), 29);
        assert_eq!(w.rank(3, 7).unwrap(), 2);
        assert_eq!(Permutation::identity(4).length(), 0);
        assert_eq!(Permutation::longest(4).length(), 6);
        assert!(w.rank(11, 1).is_err());
    }

    #[test]
    fn rank_matrix_matches_direct_count() {
        let w = p("4,1,5,3,2");
        let r = w.rank_matrix();
        for a in 0..=5 {
            for b in 0..=5 {
                assert_eq!(r.get(a, b), w.rank(a, b).unwrap());
            }
        }
    }

    #[test]
    fn bruhat_examples() {
        assert!(bruhat_leq(&p("1,3,2,4"), &p("3,4,1,2")).unwrap());
        assert!(!bruhat_leq(&p("3,4,1,2"), &p("4,2,3,1")).unwrap());
        assert!(!bruhat_leq(&p("4,2,3,1"), &p("3,4,1,2")).unwrap());
        assert!(bruhat_leq(&p("1,2"), &p("1,2,3")).is_err());
    }

    #[test]
    fn bruhat_agrees_with_subword_free_characterisation_on_s4() {
        // v ≤ w iff for all k the sorted prefixes of v are entrywise ≤ those of w.
        let perms: Vec<_> = Permutation::all(4).collect();
        for v in &perms {
            for w in &perms {
                let tableau = (1..=4).all(|k| {
                    let mut a: Vec<_> = v.images()[..k].to_vec();
                    let mut b: Vec<_> = w.images()[..k].to_vec();
                    a.sort_unstable();
                    b.sort_unstable();
                    a.iter().zip(&b).all(|(x, y)| x <= y)
                });
                assert_eq!(v.bruhat_le(w), tableau, "{v} vs {w}");
            }
        }
    }

    #[test]
    fn transposition_deltas() {
        assert_eq!(transposition_length_delta(&p("3,2,1"), 1, 3).unwrap(), -3);
        assert_eq!(transposition_length_delta(&p("3,1,2"), 1, 3).unwrap(), -1);
        assert!(transposition_length_delta(&p("1,2,3"), 1, 3).is_err());
        assert!(transposition_length_delta(&p("3,2,1"), 3, 1).is_err());
    }

    #[test]
    fn transposition_delta_matches_lengths_on_s5() {
        for v in Permutation::all(5) {
            for i in 1..=5 {
                for j in i + 1..=5 {
                    if v.position(i) > v.position(j) {
                        let delta = transposition_length_delta(&v, i, j).unwrap();
                        let after = v.swap_values(i, j).length() as i64;
                        assert_eq!(after - v.length() as i64, delta);
                    }
                }
            }
        }
    }

    #[test]
    fn focalize_example() {
        let (a, b) = focalize(&p("1,3,2,4"), &p("1,4,3,2")).unwrap();
        assert_eq!(a, p("2,1,3"));
        assert_eq!(b, p("3,2,1"));
    }

    #[test]
    fn focalize_preserves_comparability_on_s4() {
        let perms: Vec<_> = Permutation::all(4).collect();
        for v in &perms {
            for w in &perms {
                let (fv, fw) = focalize(v, w).unwrap();
                assert_eq!(v.bruhat_le(w), fv.bruhat_le(&fw));
            }
        }
    }

    #[test]
    fn star_is_max() {
        assert_eq!(star(1, &p("1,2,3")).unwrap(), p("2,1,3"));
        assert_eq!(star(1, &p("2,1,3")).unwrap(), p("2,1,3"));
        assert!(star(3, &p("1,2,3")).is_err());
    }

    #[test]
    fn pattern_goldens() {
        assert_eq!(pattern_occurrences(&p("4,2,3,1"), Pattern::P4231), vec![[1, 2, 3, 4]]);
        assert_eq!(pattern_occurrences(&p("3,4,1,2"), Pattern::P3412), vec![[1, 2, 3, 4]]);
        assert!(pattern_occurrences(&p("3,4,1,2"), Pattern::P4231).is_empty());
        assert!(!contains_pattern(&p("2,1,4,3"), Pattern::P3412));
    }

    #[test]
    fn parabolic_goldens() {
        let set = ParabolicSet::new(5, [2, 3]).unwrap();
        assert_eq!(set.blocks(), vec![(2, 4)]);
        assert_eq!(longest_element(&set), p("1,4,3,2,5"));
        let set = ParabolicSet::new(8, [3, 4, 5]).unwrap();
        let w = p("6,7,5,1,8,4,2,3");
        assert_eq!(coset_representative(&w, &set, CosetEnd::Max).unwrap(), w);
        assert_eq!(coset_representative(&w, &set, CosetEnd::Min).unwrap(), p("3,7,4,1,8,5,2,6"));
        assert!(ParabolicSet::new(5, [5]).is_err());
        let split = ParabolicSet::new(8, [3, 5]).unwrap();
        assert_eq!(split.blocks(), vec![(3, 4), (5, 6)]);
    }

    #[test]
    fn apply_cycle_direction() {
        // (3 1 2 4): 3↦1, 1↦2, 2↦4, 4↦3.
        assert_eq!(p("3,4,1,2").apply_cycle(&[3, 1, 2, 4]).unwrap(), p("1,3,2,4"));
        assert!(p("1,2").apply_cycle(&[1, 1]).is_err());
    }

    #[test]
    fn enumerates_all() {
        let all: Vec<_> = Permutation::all(4).collect();
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(Permutation::all(0).count(), 1);
    }

    #[test]
    fn serde_is_plain_list() {
        // Round-trip through the derived impls without a JSON dependency.
        let w = p("2,3,1");
        let images: Vec<usize> = w.clone().into();
        assert_eq!(Permutation::try_from(images).unwrap(), w);
    }
}
