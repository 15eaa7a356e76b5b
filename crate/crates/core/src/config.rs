//! The two families of point configurations in the graph of `w`.
//!
//! *Type I*: an anchor `P+ = (x∞, y∞)` to the North-West, an anchor
//! `P- = (x-∞, y-∞)` to the South-East, a North-East suite and a South-West
//! suite in between. Its permutation `τ` is obtained by rotating the
//! ordinates of the configuration along the cycle
//! `(y∞, y-1, …, y-t, y-∞, y1, …, ys)`.
//!
//! *Type II*: an incompressible 3412 occurrence `a < b < c < d` together
//! with the graph points of its central zone and its North-East and
//! South-West suites. Its permutation `σ` rotates ordinates along
//! `(w(a), y-1, …, y-t, w(c), w(d), y1, …, ys, w(b))`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::cograssmann::coessential_set;
use crate::error::{Error, Result};
use crate::perm::{pattern_occurrences, GraphPoint, Pattern, Permutation};
use crate::plane::{frontier, Boundary, Frontier, Quadrant, Rectangle};

/// An explicit set of rank-table cells `(p, q)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Region {
    cells: BTreeSet<(usize, usize)>,
}

impl Region {
    pub fn contains(&self, p: usize, q: usize) -> bool {
        self.cells.contains(&(p, q))
    }

    /// `χ(p, q)`: 1 inside the region, 0 outside.
    pub fn indicator(&self, p: usize, q: usize) -> usize {
        usize::from(self.contains(p, q))
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.cells.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Cells of `[x_lo, x_hi] × [y_lo, y_hi]` accepted by `keep`.
    fn from_box(x_lo: usize, x_hi: usize, y_lo: usize, y_hi: usize, keep: impl Fn(usize, usize) -> bool) -> Self {
        let mut cells = BTreeSet::new();
        for p in x_lo..=x_hi {
            for q in y_lo..=y_hi {
                if keep(p, q) {
                    cells.insert((p, q));
                }
            }
        }
        Region { cells }
    }
}

fn check_on_graph(w: &Permutation, points: &[GraphPoint]) -> Result<()> {
    for pt in points {
        if pt.x == 0 || pt.x > w.size() || w.at(pt.x) != pt.y {
            return Err(Error::InvalidConfiguration(format!("{pt} is not on the graph of {w}")));
        }
    }
    Ok(())
}

fn strictly_increasing(values: impl IntoIterator<Item = usize>) -> bool {
    let v: Vec<usize> = values.into_iter().collect();
    v.windows(2).all(|p| p[0] < p[1])
}

/// A configuration of type I.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ConfigurationI {
    /// The North-West anchor `(x∞, y∞)`.
    pub p_plus: GraphPoint,
    /// The South-East anchor `(x-∞, y-∞)`.
    pub p_minus: GraphPoint,
    /// `(x1, y1), …, (xs, ys)`: abscissae decreasing, ordinates increasing.
    pub ne_suite: Vec<GraphPoint>,
    /// `(x-1, y-1), …, (x-t, y-t)`: abscissae increasing, ordinates decreasing.
    pub so_suite: Vec<GraphPoint>,
}

impl ConfigurationI {
    /// The suites cut out by the anchors relative to the corner `(p, q)`:
    /// the North-East suite is the South-West frontier of the graph points
    /// North-East of the corner strictly between the anchors, and the
    /// South-West suite is the North-East frontier of those South-West of it.
    /// No validity check is made.
    pub fn from_anchors(w: &Permutation, corner: (usize, usize), p_plus: GraphPoint, p_minus: GraphPoint) -> Self {
        let (p, q) = corner;
        let inside = Rectangle::spanned(p_plus, p_minus, Boundary::Open).graph_points(w);
        let ne: Vec<_> = inside.iter().copied().filter(|pt| Quadrant::north_east(p, q).contains_point(*pt)).collect();
        let so: Vec<_> = inside.iter().copied().filter(|pt| Quadrant::south_west(p, q).contains_point(*pt)).collect();
        let mut ne_suite = frontier(&ne, Frontier::SouthWest);
        ne_suite.reverse();
        let so_suite = frontier(&so, Frontier::NorthEast);
        ConfigurationI { p_plus, p_minus, ne_suite, so_suite }
    }

    /// Number of points in the North-East suite.
    pub fn s(&self) -> usize {
        self.ne_suite.len()
    }

    /// Number of points in the South-West suite.
    pub fn t(&self) -> usize {
        self.so_suite.len()
    }

    /// A configuration is degenerate when one of its suites is empty.
    pub fn is_degenerate(&self) -> bool {
        self.s() * self.t() == 0
    }

    /// `ℓ(w) - ℓ(τ)`.
    pub fn length_drop(&self) -> usize {
        self.s() + self.t() + 1
    }

    /// All points of the configuration by increasing abscissa.
    pub fn points(&self) -> Vec<GraphPoint> {
        let mut pts = vec![self.p_plus, self.p_minus];
        pts.extend(&self.ne_suite);
        pts.extend(&self.so_suite);
        pts.sort_unstable();
        pts
    }

    /// The ordinate cycle `(y∞, y-1, …, y-t, y-∞, y1, …, ys)`.
    pub fn cycle(&self) -> Vec<usize> {
        let mut cycle = vec![self.p_plus.y];
        cycle.extend(self.so_suite.iter().map(|pt| pt.y));
        cycle.push(self.p_minus.y);
        cycle.extend(self.ne_suite.iter().map(|pt| pt.y));
        cycle
    }

    /// Checks membership in the graph, the ordering of abscissae and
    /// ordinates, and that every graph point strictly between the anchors is
    /// covered by a closed South-West quadrant at a South-West suite point or
    /// a closed North-East quadrant at a North-East suite point.
    pub fn validate(&self, w: &Permutation) -> Result<()> {
        check_on_graph(w, &self.points())?;
        let xs = std::iter::once(self.p_plus.x)
            .chain(self.so_suite.iter().map(|pt| pt.x))
            .chain(self.ne_suite.iter().rev().map(|pt| pt.x))
            .chain(std::iter::once(self.p_minus.x));
        let ys = std::iter::once(self.p_minus.y)
            .chain(self.so_suite.iter().rev().map(|pt| pt.y))
            .chain(self.ne_suite.iter().map(|pt| pt.y))
            .chain(std::iter::once(self.p_plus.y));
        if !strictly_increasing(xs) || !strictly_increasing(ys) {
            return Err(Error::InvalidConfiguration(format!("points of {self:?} are not in type I position")));
        }
        let inside = Rectangle::spanned(self.p_plus, self.p_minus, Boundary::Open).graph_points(w);
        for pt in inside {
            let covered = self.so_suite.iter().any(|s| pt.x <= s.x && pt.y <= s.y)
                || self.ne_suite.iter().any(|s| pt.x >= s.x && pt.y >= s.y);
            if !covered {
                return Err(Error::InvalidConfiguration(format!(
                    "graph point {pt} between the anchors is not covered by the suites of {self:?}"
                )));
            }
        }
        Ok(())
    }

    /// The region where the rank table of `τ` exceeds that of `w` by one:
    /// the closed box between the anchors, minus the cells strictly
    /// South-West of each South-West suite point, minus the cells weakly
    /// North-East of each North-East suite point, minus the top row `y∞` and
    /// the right column `x-∞`.
    pub fn region(&self) -> Region {
        let (lo, hi) = (self.p_plus, self.p_minus);
        Region::from_box(lo.x, hi.x, hi.y, lo.y, |p, q| {
            p != hi.x
                && q != lo.y
                && !self.so_suite.iter().any(|s| p < s.x && q < s.y)
                && !self.ne_suite.iter().any(|s| p >= s.x && q >= s.y)
        })
    }

    /// Maps every point through `f`, keeping roles.
    pub fn map_points(&self, f: impl Fn(GraphPoint) -> GraphPoint) -> Self {
        ConfigurationI {
            p_plus: f(self.p_plus),
            p_minus: f(self.p_minus),
            ne_suite: self.ne_suite.iter().map(|&pt| f(pt)).collect(),
            so_suite: self.so_suite.iter().map(|&pt| f(pt)).collect(),
        }
    }
}

/// `τ(I)`, after validating the configuration against `w`.
pub fn tau(w: &Permutation, conf: &ConfigurationI) -> Result<Permutation> {
    conf.validate(w)?;
    w.apply_cycle(&conf.cycle())
}

/// The bordered coessential points: coessential points whose corner has
/// graph points both North-West and South-East of it. Returned as corners.
pub fn bordered_corners(w: &Permutation) -> Vec<(usize, usize)> {
    coessential_set(w)
        .into_iter()
        .map(|pt| pt.corner())
        .filter(|&(p, q)| {
            !Quadrant::north_west(p, q).graph_points(w).is_empty()
                && !Quadrant::south_east(p, q).graph_points(w).is_empty()
        })
        .collect()
}

/// The minimal anchor pairs at a corner: `P+` North-West and `P-`
/// South-East of the corner such that no graph point strictly between them
/// lies North-West or South-East of the corner.
pub fn minimal_anchor_pairs(w: &Permutation, corner: (usize, usize)) -> Vec<(GraphPoint, GraphPoint)> {
    let (p, q) = corner;
    let nw = Quadrant::north_west(p, q);
    let se = Quadrant::south_east(p, q);
    let mut out = Vec::new();
    for &p_plus in &nw.graph_points(w) {
        for &p_minus in &se.graph_points(w) {
            let blocked = Rectangle::spanned(p_plus, p_minus, Boundary::Open)
                .graph_points(w)
                .into_iter()
                .any(|pt| nw.contains_point(pt) || se.contains_point(pt));
            if !blocked {
                out.push((p_plus, p_minus));
            }
        }
    }
    out
}

/// All configurations of type I of `w`, read off the minimal anchor pairs
/// at the bordered coessential corners, without repetition and sorted.
pub fn enumerate_config_i(w: &Permutation) -> Vec<ConfigurationI> {
    let mut found = BTreeSet::new();
    for corner in bordered_corners(w) {
        for (p_plus, p_minus) in minimal_anchor_pairs(w, corner) {
            found.insert(ConfigurationI::from_anchors(w, corner, p_plus, p_minus));
        }
    }
    found.into_iter().collect()
}

/// A configuration of type II.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ConfigurationII {
    /// The 3412 occurrence `a < b < c < d` as graph points.
    pub a: GraphPoint,
    pub b: GraphPoint,
    pub c: GraphPoint,
    pub d: GraphPoint,
    /// Graph points of the central zone, abscissae increasing (ordinates then decrease).
    pub central: Vec<GraphPoint>,
    /// `(x1, y1), …, (xs, ys)`: abscissae decreasing, ordinates increasing.
    pub ne_suite: Vec<GraphPoint>,
    /// `(x-1, y-1), …, (x-t, y-t)`: abscissae increasing, ordinates decreasing.
    pub so_suite: Vec<GraphPoint>,
}

/// Whether `a < b < c < d` is a 3412 occurrence of `w`.
pub fn is_3412(w: &Permutation, [a, b, c, d]: [usize; 4]) -> bool {
    let n = w.size();
    a >= 1 && a < b && b < c && c < d && d <= n && w.at(c) < w.at(d) && w.at(d) < w.at(a) && w.at(a) < w.at(b)
}

/// Incompressibility of a 3412 occurrence, through its zones: the four
/// median zones are free of graph points and the central points form a
/// decreasing chain.
pub fn is_incompressible(w: &Permutation, quad: [usize; 4]) -> bool {
    if !is_3412(w, quad) {
        return false;
    }
    let [a, b, c, d] = quad;
    let (wa, wb, wc, wd) = (w.at(a), w.at(b), w.at(c), w.at(d));
    let mut central_prev: Option<usize> = None;
    for x in a + 1..d {
        if x == b || x == c {
            continue;
        }
        let y = w.at(x);
        let west = x < b;
        let middle = b < x && x < c;
        let east = x > c;
        let band_mid = wd < y && y < wa;
        let band_top = wa <= y && y <= wb;
        let band_bottom = wc <= y && y <= wd;
        if (west || east) && band_mid {
            return false;
        }
        if middle && (band_top || band_bottom) {
            return false;
        }
        if middle && band_mid {
            if central_prev.is_some_and(|prev| prev < y) {
                return false;
            }
            central_prev = Some(y);
        }
    }
    true
}

impl ConfigurationII {
    /// Builds the configuration carried by an incompressible 3412 occurrence.
    pub fn from_quadruple(w: &Permutation, quad: [usize; 4]) -> Result<Self> {
        if !is_3412(w, quad) {
            return Err(Error::InvalidConfiguration(format!("{quad:?} is not a 3412 occurrence of {w}")));
        }
        if !is_incompressible(w, quad) {
            return Err(Error::InvalidConfiguration(format!("{quad:?} is a compressible 3412 occurrence of {w}")));
        }
        let [a, b, c, d] = quad;
        let (wa, wb, wc, wd) = (w.at(a), w.at(b), w.at(c), w.at(d));
        let central: Vec<GraphPoint> = (b + 1..c).map(|x| w.point(x)).filter(|pt| wd < pt.y && pt.y < wa).collect();
        let ne: Vec<GraphPoint> = (c + 1..d).map(|x| w.point(x)).filter(|pt| wa < pt.y && pt.y < wb).collect();
        let so: Vec<GraphPoint> = (a + 1..b).map(|x| w.point(x)).filter(|pt| wc < pt.y && pt.y < wd).collect();
        let mut ne_suite = frontier(&ne, Frontier::SouthWest);
        ne_suite.reverse();
        let so_suite = frontier(&so, Frontier::NorthEast);
        Ok(ConfigurationII { a: w.point(a), b: w.point(b), c: w.point(c), d: w.point(d), central, ne_suite, so_suite })
    }

    pub fn quadruple(&self) -> [usize; 4] {
        [self.a.x, self.b.x, self.c.x, self.d.x]
    }

    /// Number of central points.
    pub fn r(&self) -> usize {
        self.central.len()
    }

    pub fn s(&self) -> usize {
        self.ne_suite.len()
    }

    pub fn t(&self) -> usize {
        self.so_suite.len()
    }

    /// No central point.
    pub fn is_mixed(&self) -> bool {
        self.r() == 0
    }

    /// Central points but empty suites.
    pub fn is_pure(&self) -> bool {
        self.r() >= 1 && self.s() == 0 && self.t() == 0
    }

    /// `ℓ(w) - ℓ(σ)`.
    pub fn length_drop(&self) -> usize {
        2 * self.r() + self.s() + self.t() + 3
    }

    /// All points of the configuration by increasing abscissa.
    pub fn points(&self) -> Vec<GraphPoint> {
        let mut pts = vec![self.a, self.b, self.c, self.d];
        pts.extend(&self.central);
        pts.extend(&self.ne_suite);
        pts.extend(&self.so_suite);
        pts.sort_unstable();
        pts
    }

    /// The ordinate cycle `(w(a), y-1, …, y-t, w(c), w(d), y1, …, ys, w(b))`.
    pub fn cycle(&self) -> Vec<usize> {
        let mut cycle = vec![self.a.y];
        cycle.extend(self.so_suite.iter().map(|pt| pt.y));
        cycle.push(self.c.y);
        cycle.push(self.d.y);
        cycle.extend(self.ne_suite.iter().map(|pt| pt.y));
        cycle.push(self.b.y);
        cycle
    }

    /// Checks that the configuration is exactly the one carried by its
    /// quadruple in `w`.
    pub fn validate(&self, w: &Permutation) -> Result<()> {
        check_on_graph(w, &self.points())?;
        let rebuilt = Self::from_quadruple(w, self.quadruple())?;
        if &rebuilt != self {
            return Err(Error::InvalidConfiguration(format!("{self:?} does not match the suites of its quadruple")));
        }
        Ok(())
    }

    /// The region where the rank table of `σ` exceeds that of `w` by one:
    /// the closed box `[a, d] × [w(c), w(b)]` minus the cells strictly
    /// South-West of each South-West suite point, weakly North-East of each
    /// North-East suite point, West of `b` and weakly above `w(a)`, weakly
    /// East of `c` and strictly below `w(d)`; minus the top row `w(b)` and the
    /// right column `d`.
    pub fn region(&self) -> Region {
        let (a, b, c, d) = (self.a, self.b, self.c, self.d);
        Region::from_box(a.x, d.x, c.y, b.y, |p, q| {
            p != d.x
                && q != b.y
                && !self.so_suite.iter().any(|s| p < s.x && q < s.y)
                && !self.ne_suite.iter().any(|s| p >= s.x && q >= s.y)
                && !(p < b.x && q >= a.y)
                && !(p >= c.x && q < d.y)
        })
    }

    /// Maps every point through `f`, keeping roles.
    pub fn map_points(&self, f: impl Fn(GraphPoint) -> GraphPoint) -> Self {
        ConfigurationII {
            a: f(self.a),
            b: f(self.b),
            c: f(self.c),
            d: f(self.d),
            central: self.central.iter().map(|&pt| f(pt)).collect(),
            ne_suite: self.ne_suite.iter().map(|&pt| f(pt)).collect(),
            so_suite: self.so_suite.iter().map(|&pt| f(pt)).collect(),
        }
    }
}

/// `σ(II)`, after validating the configuration against `w`.
pub fn sigma(w: &Permutation, conf: &ConfigurationII) -> Result<Permutation> {
    conf.validate(w)?;
    w.apply_cycle(&conf.cycle())
}

/// All configurations of type II of `w`, by increasing quadruple.
pub fn enumerate_config_ii(w: &Permutation) -> Vec<ConfigurationII> {
    pattern_occurrences(w, Pattern::P3412)
        .into_iter()
        .filter(|&quad| is_incompressible(w, quad))
        .map(|quad| ConfigurationII::from_quadruple(w, quad).expect("incompressible occurrence"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn worked() -> Permutation {
        p("5,10,7,2,9,8,1,6,3,4")
    }

    /// Literal compressibility moves: another 3412 occurrence sharing `c, d`
    /// whose first two points lie weakly South-East of `a, b`, or sharing
    /// `a, b` whose last two lie weakly North-West of `c, d`.
    fn incompressible_by_moves(w: &Permutation, [a, b, c, d]: [usize; 4]) -> bool {
        let se_of = |x: usize, anchor: usize| x >= anchor && w.at(x) <= w.at(anchor);
        let nw_of = |x: usize, anchor: usize| x <= anchor && w.at(x) >= w.at(anchor);
        let occurrences = pattern_occurrences(w, Pattern::P3412);
        !occurrences.iter().any(|&[x, y, u, v]| {
            let shrink_left = u == c && v == d && (x, y) != (a, b) && se_of(x, a) && se_of(y, b);
            let shrink_right = x == a && y == b && (u, v) != (c, d) && nw_of(u, c) && nw_of(v, d);
            shrink_left || shrink_right
        })
    }

    #[test]
    fn worked_example_type_ii_quadruples() {
        let quads: Vec<_> = enumerate_config_ii(&worked()).iter().map(|c| c.quadruple()).collect();
        assert_eq!(
            quads,
            vec![[1, 3, 4, 9], [1, 3, 4, 10], [1, 6, 7, 9], [1, 6, 7, 10], [1, 8, 9, 10], [3, 6, 7, 8], [3, 6, 9, 10]]
        );
        let pure = ConfigurationII::from_quadruple(&worked(), [3, 6, 9, 10]).unwrap();
        assert!(pure.is_pure());
    }

    #[test]
    fn worked_example_bordered_corners() {
        let w = worked();
        let corners = bordered_corners(&w);
        assert!(corners.contains(&(4, 5)) && corners.contains(&(4, 7)));
        let xs = |corner| -> Vec<(usize, usize)> {
            minimal_anchor_pairs(&w, corner).iter().map(|(a, b)| (a.x, b.x)).collect()
        };
        assert_eq!(xs((4, 5)), vec![(3, 7), (3, 9), (3, 10)]);
        assert_eq!(xs((4, 7)), vec![(2, 7), (2, 8)]);
        for (pp, pm) in minimal_anchor_pairs(&w, (4, 5)) {
            assert!(ConfigurationI::from_anchors(&w, (4, 5), pp, pm).is_degenerate());
        }
        let confs = enumerate_config_i(&w);
        assert_eq!(confs.len(), 8);
        assert_eq!(confs.iter().filter(|c| !c.is_degenerate()).count(), 2);
    }

    #[test]
    fn worked_example_tau() {
        let w = worked();
        let conf = ConfigurationI::from_anchors(&w, (4, 7), w.point(2), w.point(7));
        assert_eq!((conf.s(), conf.t()), (2, 2));
        assert_eq!(tau(&w, &conf).unwrap(), p("5,7,2,1,10,9,8,6,3,4"));
        let conf = ConfigurationI::from_anchors(&w, (4, 7), w.point(2), w.point(8));
        assert_eq!((conf.s(), conf.t()), (2, 1));
        assert_eq!(tau(&w, &conf).unwrap(), p("5,7,6,2,10,9,1,8,3,4"));
    }

    #[test]
    fn large_example_sigma() {
        let w = p("11,12,17,7,3,5,16,10,1,9,2,6,15,4,18,13,8,14");
        let conf = ConfigurationII::from_quadruple(&w, [2, 7, 11, 17]).unwrap();
        assert_eq!((conf.r(), conf.s(), conf.t()), (2, 2, 2));
        let s = sigma(&w, &conf).unwrap();
        assert_eq!(s, p("11,7,17,5,3,2,12,10,1,9,8,6,16,4,18,15,13,14"));
        assert_eq!(w.length() - s.length(), 11);
    }

    #[test]
    fn smallest_sigma() {
        let w = p("3,4,1,2");
        let conf = ConfigurationII::from_quadruple(&w, [1, 2, 3, 4]).unwrap();
        assert_eq!(sigma(&w, &conf).unwrap(), p("1,3,2,4"));
    }

    #[test]
    fn rejects_invalid_configurations() {
        let w = p("3,4,1,2");
        assert!(ConfigurationII::from_quadruple(&w, [1, 2, 4, 3]).is_err());
        let bogus = ConfigurationI {
            p_plus: GraphPoint::new(1, 3),
            p_minus: GraphPoint::new(3, 2),
            ne_suite: vec![],
            so_suite: vec![],
        };
        assert!(tau(&w, &bogus).is_err());
    }

    #[test]
    fn incompressibility_zone_test_matches_moves_on_s7() {
        for w in Permutation::all(7) {
            for quad in pattern_occurrences(&w, Pattern::P3412) {
                assert_eq!(is_incompressible(&w, quad), incompressible_by_moves(&w, quad), "{w} {quad:?}");
            }
        }
    }

    fn rank_identity_holds(w: &Permutation, v: &Permutation, region: &Region) -> bool {
        let (rw, rv) = (w.rank_matrix(), v.rank_matrix());
        let n = w.size();
        (1..=n).all(|a| (1..=n).all(|b| rv.get(a, b) == rw.get(a, b) + region.indicator(a, b)))
    }

    #[test]
    fn lengths_and_ranks_on_s6() {
        for w in Permutation::all(6) {
            for conf in enumerate_config_i(&w) {
                conf.validate(&w).unwrap();
                let t = tau(&w, &conf).unwrap();
                assert_eq!(w.length() - t.length(), conf.length_drop(), "{w} {conf:?}");
                assert!(rank_identity_holds(&w, &t, &conf.region()), "{w} {conf:?}");
            }
            for conf in enumerate_config_ii(&w) {
                let s = sigma(&w, &conf).unwrap();
                assert_eq!(w.length() - s.length(), conf.length_drop(), "{w} {conf:?}");
                assert!(rank_identity_holds(&w, &s, &conf.region()), "{w} {conf:?}");
            }
        }
    }

    #[test]
    fn central_points_decrease() {
        for w in Permutation::all(7).step_by(3) {
            for conf in enumerate_config_ii(&w) {
                assert!(conf.central.windows(2).all(|p| p[0].y > p[1].y));
            }
        }
    }
}
