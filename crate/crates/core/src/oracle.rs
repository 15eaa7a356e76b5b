//! Independent ground truth by brute force.
//!
//! The singular locus is recomputed from the tangent-space criterion: the
//! Zariski tangent space of `X_w` at the fixed point `e_v` has dimension
//! `#{transpositions t : t·v ≤ w}`, and `e_v` is singular exactly when this
//! exceeds `ℓ(w)`. Nothing here uses configurations.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::{enumerate_config_i, enumerate_config_ii, sigma, tau, ConfigurationI};
use crate::error::{Error, Result};
use crate::perm::{GraphPoint, Permutation, RankMatrix};
use crate::plane::{Boundary, Rectangle};
use crate::sing_locus::singular_components;

/// Dimension of the Zariski tangent space of `X_w` at `e_v`.
pub fn tangent_dim(v: &Permutation, w: &Permutation) -> Result<usize> {
    if v.size() != w.size() {
        return Err(Error::SizeMismatch { left: v.size(), right: w.size() });
    }
    if !v.bruhat_le(w) {
        return Err(Error::Precondition(format!("{v} is not below {w}")));
    }
    Ok(TangentCounter::new(w).dim(v))
}

/// `#{t : t·v ≤ w}` straight from the Bruhat comparison, one test per
/// transposition.
pub fn tangent_dim_by_definition(v: &Permutation, w: &Permutation) -> usize {
    let n = v.size();
    (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).filter(|&(i, j)| v.swap_values(i, j).bruhat_le(w)).count()
}

/// Counts transpositions `t` with `t·v ≤ w` for points `v ≤ w` of one
/// Schubert variety. Exchanging the values `i < j` lowers the rank function
/// of `v` by one on `[v⁻¹(i), v⁻¹(j)[ × [i, j[` when `i` comes first and
/// raises it otherwise, so only the first case can leave the interval, and
/// it does exactly when `r_v - r_w` vanishes somewhere on that rectangle.
pub struct TangentCounter {
    w: Permutation,
    rank: RankMatrix,
}

impl TangentCounter {
    pub fn new(w: &Permutation) -> Self {
        TangentCounter { w: w.clone(), rank: w.rank_matrix() }
    }

    pub fn length(&self) -> usize {
        self.w.length()
    }

    fn slack(&self, v: &Permutation) -> Vec<Vec<usize>> {
        let n = v.size();
        let rv = v.rank_matrix();
        (0..=n).map(|p| (0..=n).map(|q| rv.get(p, q) - self.rank.get(p, q)).collect()).collect()
    }

    /// The rising exchanges `(i, j)` (value `i` placed before `j`) with
    /// `(i j)·v ≤ w`, for `v ≤ w`.
    fn rising_below(&self, v: &Permutation) -> Vec<(usize, usize)> {
        let n = v.size();
        let slack = self.slack(v);
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                let (a, b) = (v.position(i), v.position(j));
                if a < b && (a..b).all(|p| (i..j).all(|q| slack[p][q] >= 1)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Tangent dimension at `v ≤ w`.
    pub fn dim(&self, v: &Permutation) -> usize {
        let falling = v.length();
        falling + self.rising_below(v).len()
    }

    pub fn is_singular(&self, v: &Permutation) -> bool {
        self.dim(v) > self.length()
    }

    /// Upper covers of `v ≤ w` that stay below `w`.
    pub fn upper_covers_below(&self, v: &Permutation) -> Vec<Permutation> {
        self.rising_below(v)
            .into_iter()
            .filter(|&(i, j)| {
                let (a, b) = (v.position(i), v.position(j));
                !(i + 1..j).any(|k| (a + 1..b).contains(&v.position(k)))
            })
            .map(|(i, j)| v.swap_values(i, j))
            .collect()
    }
}

/// The Bruhat-maximal elements of a set.
pub fn maximal_elements(set: &[Permutation]) -> Vec<Permutation> {
    let mut out: Vec<Permutation> =
        set.iter().filter(|v| !set.iter().any(|u| u != *v && v.bruhat_le(u))).cloned().collect();
    out.sort();
    out.dedup();
    out
}

/// The lower covers of `u`: `(i j)·u` with `j` before `i` in `u` and no value
/// strictly between them placed strictly between them.
pub fn lower_covers(u: &Permutation) -> Vec<Permutation> {
    let n = u.size();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let (pi, pj) = (u.position(i), u.position(j));
            if pj < pi && !(i + 1..j).any(|k| (pj + 1..pi).contains(&u.position(k))) {
                out.push(u.swap_values(i, j));
            }
        }
    }
    out
}

/// Singular locus by scanning every `v ≤ w` in the symmetric group; meant
/// for `n ≤ 8`.
pub fn singular_locus_exhaustive(w: &Permutation) -> Vec<Permutation> {
    let counter = TangentCounter::new(w);
    let singular: Vec<Permutation> =
        Permutation::all(w.size()).filter(|v| v.bruhat_le(w) && counter.is_singular(v)).collect();
    maximal_elements(&singular)
}

/// Singular locus by walking down from `w` through lower covers, stopping at
/// the first singular points met. Relies on the singular locus being closed
/// (a lower set), which the exhaustive scan confirms on small cases; it lets
/// the search stay inside the smooth part of the interval, and a singular
/// point met on the way is maximal exactly when none of its upper covers
/// below `w` is singular.
pub fn singular_locus_brute(w: &Permutation) -> Vec<Permutation> {
    let counter = TangentCounter::new(w);
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut stack = vec![w.clone()];
    seen.insert(w.clone());
    let mut boundary = Vec::new();
    while let Some(u) = stack.pop() {
        if counter.is_singular(&u) {
            boundary.push(u);
            continue;
        }
        for c in lower_covers(&u) {
            if seen.insert(c.clone()) {
                stack.push(c);
            }
        }
    }
    let mut out: Vec<Permutation> = boundary
        .into_iter()
        .filter(|v| counter.upper_covers_below(v).iter().all(|u| !counter.is_singular(u)))
        .collect();
    out.sort();
    out
}

/// The Bruhat order on the whole symmetric group, built as the transitive
/// closure of the covering relation (not from rank tables).
pub struct BruhatPoset {
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    below: Vec<Vec<u64>>,
}

impl BruhatPoset {
    pub fn new(n: usize) -> Self {
        let mut elements: Vec<Permutation> = Permutation::all(n).collect();
        elements.sort_by_key(|p| p.length());
        let index: HashMap<Permutation, usize> = elements.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let words = elements.len().div_ceil(64);
        let mut below: Vec<Vec<u64>> = vec![vec![0; words]; elements.len()];
        for (i, u) in elements.iter().enumerate() {
            let mut bits = vec![0u64; words];
            bits[i / 64] |= 1 << (i % 64);
            for c in lower_covers(u) {
                let k = index[&c];
                for (b, other) in bits.iter_mut().zip(&below[k]) {
                    *b |= other;
                }
            }
            below[i] = bits;
        }
        BruhatPoset { elements, index, below }
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    /// `v ≤ w` read from the closure.
    pub fn leq(&self, v: &Permutation, w: &Permutation) -> bool {
        let (i, k) = (self.index[v], self.index[w]);
        self.below[k][i / 64] >> (i % 64) & 1 == 1
    }
}

/// Maximal elements of `{z ∈ S_n : z ≤ v for every v}`.
pub fn maximal_common_lower_bounds(perms: &[Permutation]) -> Vec<Permutation> {
    let Some(first) = perms.first() else {
        return Vec::new();
    };
    let lower: Vec<Permutation> =
        Permutation::all(first.size()).filter(|z| perms.iter().all(|v| z.bruhat_le(v))).collect();
    maximal_elements(&lower)
}

/// Maximal elements of `{τ < z : s_j·τ < τ}` by scanning `S_n`.
pub fn max_below_with_descent_brute(z: &Permutation, j: usize) -> Vec<Permutation> {
    let set: Vec<Permutation> =
        Permutation::all(z.size()).filter(|t| t != z && t.bruhat_le(z) && t.position(j + 1) < t.position(j)).collect();
    maximal_elements(&set)
}

/// Every type I configuration of `w` straight from the definition: two
/// anchors, two suites in the prescribed relative position, and coverage of
/// the graph points between the anchors. Exponential; for small `n` only.
pub fn configurations_i_by_definition(w: &Permutation) -> Vec<ConfigurationI> {
    let n = w.size();
    let mut out = BTreeSet::new();
    for x_plus in 1..=n {
        for x_minus in x_plus + 1..=n {
            let (p_plus, p_minus) = (w.point(x_plus), w.point(x_minus));
            if p_plus.y < p_minus.y {
                continue;
            }
            let inner = Rectangle::spanned(p_plus, p_minus, Boundary::Open).graph_points(w);
            let k = inner.len();
            for mask in 0u32..(1 << k) {
                let chosen: Vec<GraphPoint> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| inner[i]).collect();
                for split in 0..=chosen.len() {
                    let so_suite = chosen[..split].to_vec();
                    let mut ne_suite = chosen[split..].to_vec();
                    ne_suite.reverse();
                    let conf = ConfigurationI { p_plus, p_minus, ne_suite, so_suite };
                    if conf.validate(w).is_ok() {
                        out.insert(conf);
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}

/// `k` distinct-seeded uniform samples of `S_n`.
pub fn sample_permutations(n: usize, k: usize, seed: u64) -> Vec<Permutation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..k)
        .map(|_| {
            let mut images: Vec<usize> = (1..=n).collect();
            images.shuffle(&mut rng);
            Permutation::new(images).expect("shuffle of 1..=n")
        })
        .collect()
}

/// A disagreement between the engine and the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub w: Permutation,
    pub oracle: Vec<Permutation>,
    pub engine: Vec<Permutation>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub n: usize,
    pub tested: usize,
    pub mismatches: Vec<Mismatch>,
    pub elapsed: Duration,
}

impl EquivalenceReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Which permutations to test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selection {
    All,
    Sample { count: usize, seed: u64 },
}

pub fn select(n: usize, selection: Selection) -> Vec<Permutation> {
    match selection {
        Selection::All => Permutation::all(n).collect(),
        Selection::Sample { count, seed } => sample_permutations(n, count, seed),
    }
}

/// Compares the component list with the oracle on the selected permutations.
pub fn equivalence_harness(n: usize, selection: Selection) -> EquivalenceReport {
    let start = Instant::now();
    let perms = select(n, selection);
    let mismatches: Vec<Mismatch> = perms
        .par_iter()
        .filter_map(|w| {
            let oracle = if n <= 8 { singular_locus_exhaustive(w) } else { singular_locus_brute(w) };
            let mut engine: Vec<Permutation> = singular_components(w).into_iter().map(|c| c.v).collect();
            engine.sort();
            (engine != oracle).then(|| Mismatch { w: w.clone(), oracle, engine })
        })
        .collect();
    EquivalenceReport { n, tested: perms.len(), mismatches, elapsed: start.elapsed() }
}

/// Structural invariants that must hold for every `w`; returns a description
/// of each violation.
pub fn property_violations(w: &Permutation) -> Vec<String> {
    let mut bad = Vec::new();
    let lw = w.length();
    let rw = w.rank_matrix();
    let n = w.size();
    let rank_excess_ok = |v: &Permutation, region: &crate::config::Region| {
        let rv = v.rank_matrix();
        (1..=n).all(|a| (1..=n).all(|b| rv.get(a, b) == rw.get(a, b) + region.indicator(a, b)))
    };
    for conf in enumerate_config_i(w) {
        match tau(w, &conf) {
            Err(e) => bad.push(format!("{w}: type I {conf:?} invalid: {e}")),
            Ok(t) => {
                if lw - t.length() != conf.length_drop() {
                    bad.push(format!("{w}: length drop of τ = {t} is not s+t+1"));
                }
                if !rank_excess_ok(&t, &conf.region()) {
                    bad.push(format!("{w}: rank excess of τ = {t} differs from its region"));
                }
                if conf.is_degenerate() && TangentCounter::new(w).dim(&t) != lw {
                    bad.push(format!("{w}: degenerate τ = {t} is a singular point"));
                }
            }
        }
    }
    for conf in enumerate_config_ii(w) {
        match sigma(w, &conf) {
            Err(e) => bad.push(format!("{w}: type II {conf:?} invalid: {e}")),
            Ok(s) => {
                if lw - s.length() != conf.length_drop() {
                    bad.push(format!("{w}: length drop of σ = {s} is not 2r+s+t+3"));
                }
                if !rank_excess_ok(&s, &conf.region()) {
                    bad.push(format!("{w}: rank excess of σ = {s} differs from its region"));
                }
            }
        }
    }
    let comps = singular_components(w);
    for (i, a) in comps.iter().enumerate() {
        if a.codim != a.transversal.dim() {
            bad.push(format!("{w}: component {} has codim {} but cone {}", a.v, a.codim, a.transversal));
        }
        for b in &comps[i + 1..] {
            if a.v.bruhat_le(&b.v) || b.v.bruhat_le(&a.v) {
                bad.push(format!("{w}: components {} and {} are comparable", a.v, b.v));
            }
        }
    }
    match crate::sing_locus::containment_report(w) {
        Err(e) => bad.push(format!("{w}: containment configurations invalid: {e}")),
        Ok(entries) => {
            for entry in entries {
                for (_, t, shape) in &entry.witnesses {
                    if !entry.sigma.bruhat_le(t) {
                        bad.push(format!("{w}: σ = {} not below τ = {t}", entry.sigma));
                    }
                    if lw - t.length() != shape.dim() {
                        bad.push(format!("{w}: containment τ = {t} has the wrong length"));
                    }
                    if !comps.iter().any(|c| &c.v == t) {
                        bad.push(format!("{w}: containment τ = {t} is not a component"));
                    }
                }
            }
        }
    }
    bad
}

/// Runs a per-permutation check over `perms` in parallel and gathers its
/// violations in input order.
pub fn collect_violations(perms: &[Permutation], check: impl Fn(&Permutation) -> Vec<String> + Sync) -> Vec<String> {
    perms.par_iter().map(&check).collect::<Vec<_>>().concat()
}

/// Cross-checks the anchor-pair description of the maximal common lower
/// bounds of `w` and the cobigrassmannian below every admissible corner.
pub fn lambda_max_violations(w: &Permutation) -> Vec<String> {
    let n = w.size();
    let mut bad = Vec::new();
    for p in 1..=n {
        for q in 1..=n {
            let Ok(c) = crate::lambda_max::cobigrassmannian_below_corner(w, p, q) else {
                continue;
            };
            let ours = crate::lambda_max::lambda_max(w, p, q).expect("admissible corner");
            let brute = maximal_common_lower_bounds(&[w.clone(), c.realize()]);
            if ours != brute {
                bad.push(format!("{w} at ({p},{q}): engine {ours:?}, oracle {brute:?}"));
            }
        }
    }
    bad
}

/// Cross-checks the three-shape description of the maximal elements below
/// `w` with a left descent at every ascent `j`.
pub fn descent_violations(w: &Permutation) -> Vec<String> {
    let mut bad = Vec::new();
    for j in 1..w.size() {
        if w.position(j) > w.position(j + 1) {
            continue;
        }
        let mut ours: Vec<Permutation> =
            crate::lambda_max::max_below_with_descent(w, j).expect("ascent").into_iter().map(|e| e.tau).collect();
        ours.sort();
        let brute = max_below_with_descent_brute(w, j);
        if ours != brute {
            bad.push(format!("{w} at j = {j}: engine {ours:?}, oracle {brute:?}"));
        }
    }
    bad
}

/// Cross-checks the quasi-resolutions of a non-covexillary `w`: dimensions
/// and coset maximality of every `w_i`, validity and incomparability of the
/// exceptional components, containment of every transversal intersection of
/// exceptional loci in the singular locus, the good-pair witness of
/// degenerate families, and the transport of singular components of each
/// `X_{w_i}` back to `X_w`. Empty for covexillary `w`.
pub fn quasi_res_violations(w: &Permutation) -> Vec<String> {
    use crate::perm::{is_coset_representative, longest_element, CosetEnd};
    use crate::quasi_res::{build_quasi_resolutions, ExceptionalComponent, ExceptionalKind, Transport};

    let Ok(qr) = build_quasi_resolutions(w) else {
        return Vec::new();
    };
    let mut bad = Vec::new();
    let components: Vec<Permutation> = singular_components(w).into_iter().map(|c| c.v).collect();
    let h = qr.height();
    let frame = qr.frame;

    let mut exceptional: Vec<Vec<ExceptionalComponent>> = Vec::with_capacity(h);
    for piece in &qr.pieces {
        let i = piece.index;
        if piece.dim != w.length() {
            bad.push(format!("{w}, i = {i}: dim Z_i = {} but ℓ(w) = {}", piece.dim, w.length()));
        }
        if !is_coset_representative(&piece.w_i, &piece.parabolic, CosetEnd::Max).unwrap_or(false) {
            bad.push(format!("{w}, i = {i}: w_i = {} is not maximal in its coset", piece.w_i));
        }
        let comps = qr.exceptional_components(i).expect("index in range");
        for comp in &comps {
            let valid = match &comp.config {
                crate::sing_locus::ConfigSource::TypeI(c) => c.validate(w).is_ok(),
                crate::sing_locus::ConfigSource::TypeII(c) => c.validate(w).is_ok() && c.is_mixed() && c.r() == 0,
            };
            if !valid || !comp.v.bruhat_le(w) {
                bad.push(format!("{w}, i = {i}: exceptional component {} ({:?}) is invalid", comp.v, comp.kind));
            }
            if h == 1 && comp.is_degenerate() {
                bad.push(format!("{w}: height one but {} comes from a degenerate configuration", comp.v));
            }
        }
        for (k, x) in comps.iter().enumerate() {
            for y in &comps[k + 1..] {
                if x.v.bruhat_le(&y.v) || y.v.bruhat_le(&x.v) {
                    bad.push(format!("{w}, i = {i}: exceptional components {} and {} are comparable", x.v, y.v));
                }
            }
        }
        let north: Vec<usize> = comps
            .iter()
            .filter_map(|c| match c.kind {
                ExceptionalKind::NorthWest { b } => Some(b),
                _ => None,
            })
            .collect();
        let south: Vec<usize> = comps
            .iter()
            .filter_map(|c| match c.kind {
                ExceptionalKind::SouthEast { c } => Some(c),
                _ => None,
            })
            .collect();
        if i > 1 && north.iter().min() != Some(&frame.b) {
            bad.push(format!("{w}, i = {i}: westernmost North-West anchor is not b = {}", frame.b));
        }
        if i < h && south.iter().max() != Some(&frame.c) {
            bad.push(format!("{w}, i = {i}: easternmost South-East anchor is not c = {}", frame.c));
        }
        exceptional.push(comps);
    }

    let below_singular = |z: &Permutation| components.iter().any(|v| z.bruhat_le(v));
    let mut family_bounds: BTreeSet<Permutation> = BTreeSet::new();
    let mut choice = vec![0usize; h];
    if exceptional.iter().all(|comps| !comps.is_empty()) {
        loop {
            let family: Vec<ExceptionalComponent> =
                choice.iter().zip(&exceptional).map(|(&k, comps)| comps[k].clone()).collect();
            let perms: Vec<Permutation> = family.iter().map(|c| c.v.clone()).collect();
            let bounds = maximal_common_lower_bounds(&perms);
            for z in &bounds {
                if !below_singular(z) {
                    bad.push(format!("{w}: {z} bounds the family {perms:?} but lies outside the singular locus"));
                }
            }
            family_bounds.extend(bounds.iter().cloned());
            if family.iter().all(ExceptionalComponent::is_degenerate) {
                match qr.good_family_witness(&family) {
                    Ok(Some(witness)) => {
                        if !bounds.iter().all(|z| z.bruhat_le(&witness.sigma)) {
                            bad.push(format!("{w}: family {perms:?} is not contained in σ = {}", witness.sigma));
                        }
                    }
                    Ok(None) => bad.push(format!("{w}: degenerate family {perms:?} has no good pair")),
                    Err(e) => bad.push(format!("{w}: degenerate family {perms:?}: {e}")),
                }
            }
            let Some(slot) = (0..h).rev().find(|&k| choice[k] + 1 < exceptional[k].len()) else {
                break;
            };
            choice[slot] += 1;
            choice[slot + 1..].iter_mut().for_each(|k| *k = 0);
        }
    }

    let full_length = longest_element(&qr.parabolic).length();
    let mut carried: BTreeSet<Permutation> = BTreeSet::new();
    for piece in &qr.pieces {
        let sub_length = longest_element(&piece.parabolic).length();
        for comp in singular_components(&piece.w_i) {
            for source in &comp.sources {
                match qr.transport_configuration(piece.index, source) {
                    Ok(Transport::Carried { v, .. }) => {
                        if v.length() + sub_length != comp.v.length() + full_length {
                            bad.push(format!("{w}: carried {} → {v} has the wrong length", comp.v));
                        }
                        if !components.contains(&v) {
                            bad.push(format!("{w}: carried {} → {v} is not a singular component", comp.v));
                        }
                        carried.insert(v);
                    }
                    Ok(Transport::Exceptional { .. }) => {}
                    Err(e) => bad.push(format!("{w}, i = {}: transport of {} failed: {e}", piece.index, comp.v)),
                }
            }
        }
    }
    for v in &components {
        if !carried.contains(v) && !family_bounds.iter().any(|z| v.bruhat_le(z)) {
            bad.push(format!("{w}: singular component {v} is neither carried nor in every exceptional locus"));
        }
    }
    bad
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn tangent_dim_goldens() {
        assert_eq!(tangent_dim(&Permutation::identity(4), &p("3,4,1,2")).unwrap(), 5);
        assert!(tangent_dim(&p("4,3,2,1"), &p("1,2,3,4")).is_err());
    }

    #[test]
    fn tangent_dim_is_length_on_smooth_schubert_varieties() {
        for w in Permutation::all(5).filter(crate::sing_locus::is_smooth) {
            for v in Permutation::all(5).filter(|v| v.bruhat_le(&w)) {
                assert_eq!(tangent_dim(&v, &w).unwrap(), w.length(), "{v} {w}");
            }
        }
    }

    #[test]
    fn rank_slack_count_matches_the_definition() {
        for w in Permutation::all(5) {
            let counter = TangentCounter::new(&w);
            for v in Permutation::all(5).filter(|v| v.bruhat_le(&w)) {
                assert_eq!(counter.dim(&v), tangent_dim_by_definition(&v, &w), "{v} {w}");
                let mut covers = counter.upper_covers_below(&v);
                covers.sort();
                let mut expected: Vec<Permutation> =
                    Permutation::all(5).filter(|u| u.bruhat_le(&w) && lower_covers(u).contains(&v)).collect();
                expected.sort();
                assert_eq!(covers, expected, "{v} {w}");
            }
        }
    }

    #[test]
    fn tangent_dim_right_multiplication_agrees() {
        // t·v and v·t' with t' = v⁻¹tv range over the same set, so counts match.
        for w in Permutation::all(4) {
            for v in Permutation::all(4).filter(|v| v.bruhat_le(&w)) {
                let mut right = 0;
                for i in 1..=4 {
                    for j in i + 1..=4 {
                        let mut images = v.images().to_vec();
                        images.swap(i - 1, j - 1);
                        if Permutation::new(images).unwrap().bruhat_le(&w) {
                            right += 1;
                        }
                    }
                }
                assert_eq!(right, tangent_dim(&v, &w).unwrap());
            }
        }
    }

    #[test]
    fn singular_locus_small_cases() {
        assert_eq!(singular_locus_exhaustive(&p("3,4,1,2")), vec![p("1,3,2,4")]);
        assert_eq!(singular_locus_exhaustive(&p("4,2,3,1")), vec![p("2,1,4,3")]);
        assert!(singular_locus_exhaustive(&p("2,1,4,3")).is_empty());
    }

    #[test]
    fn singular_set_is_closed_and_walk_agrees_on_s6() {
        let perms: Vec<_> = Permutation::all(6).collect();
        perms.par_iter().for_each(|w| {
            let bound = w.length();
            let lower: Vec<_> = perms.iter().filter(|v| v.bruhat_le(w)).collect();
            let singular: HashSet<&Permutation> =
                lower.iter().copied().filter(|v| tangent_dim_by_definition(v, w) > bound).collect();
            for v in &singular {
                for c in lower_covers(v) {
                    assert!(singular.contains(&c), "{w}: {v} singular but {c} not");
                }
            }
            assert_eq!(singular_locus_brute(w), singular_locus_exhaustive(w), "{w}");
        });
    }

    #[test]
    fn poset_matches_rank_criterion_on_s5() {
        let poset = BruhatPoset::new(5);
        for v in poset.elements() {
            for w in poset.elements() {
                assert_eq!(poset.leq(v, w), v.bruhat_le(w), "{v} {w}");
            }
        }
    }

    #[test]
    fn lower_covers_drop_length_by_one() {
        for u in Permutation::all(5) {
            for c in lower_covers(&u) {
                assert_eq!(c.length() + 1, u.length());
            }
        }
    }

    #[test]
    fn samples_are_deterministic() {
        assert_eq!(sample_permutations(7, 5, 42), sample_permutations(7, 5, 42));
        assert_ne!(sample_permutations(7, 5, 42), sample_permutations(7, 5, 43));
    }

    #[test]
    fn quasi_resolutions_hold_on_s5() {
        for w in Permutation::all(5) {
            assert!(quasi_res_violations(&w).is_empty(), "{w}: {:?}", quasi_res_violations(&w));
        }
    }
}
