//! Quadrants, rectangles and frontiers in the plane of a permutation graph.
//!
//! North means larger ordinate, East larger abscissa. Quadrants are anchored
//! at a corner `(p, q)`; rectangles are spanned by two graph points.

use serde::{Deserialize, Serialize};

use crate::perm::{GraphPoint, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QuadrantKind {
    /// `{i ≤ p, j > q}`
    NorthWest,
    /// `{i ≤ p, j ≤ q}`
    SouthWest,
    /// `{i > p, j > q}`
    NorthEast,
    /// `{i > p, j ≤ q}`
    SouthEast,
}

/// A closed quadrant anchored at the corner `(p, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Quadrant {
    pub p: usize,
    pub q: usize,
    pub kind: QuadrantKind,
}

impl Quadrant {
    pub fn new(kind: QuadrantKind, p: usize, q: usize) -> Self {
        Quadrant { p, q, kind }
    }

    pub fn north_west(p: usize, q: usize) -> Self {
        Self::new(QuadrantKind::NorthWest, p, q)
    }

    pub fn south_west(p: usize, q: usize) -> Self {
        Self::new(QuadrantKind::SouthWest, p, q)
    }

    pub fn north_east(p: usize, q: usize) -> Self {
        Self::new(QuadrantKind::NorthEast, p, q)
    }

    pub fn south_east(p: usize, q: usize) -> Self {
        Self::new(QuadrantKind::SouthEast, p, q)
    }

    /// Whether the cell `(i, j)` lies in the quadrant.
    pub fn contains(&self, i: usize, j: usize) -> bool {
        let (west, south) = (i <= self.p, j <= self.q);
        match self.kind {
            QuadrantKind::NorthWest => west && !south,
            QuadrantKind::SouthWest => west && south,
            QuadrantKind::NorthEast => !west && !south,
            QuadrantKind::SouthEast => !west && south,
        }
    }

    pub fn contains_point(&self, pt: GraphPoint) -> bool {
        self.contains(pt.x, pt.y)
    }

    /// The graph points of `w` inside the quadrant, by increasing abscissa.
    pub fn graph_points(&self, w: &Permutation) -> Vec<GraphPoint> {
        w.graph().filter(|&pt| self.contains_point(pt)).collect()
    }
}

/// Whether a rectangle includes its boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Boundary {
    Open,
    Closed,
}

/// An axis-parallel box `[x_lo, x_hi] × [y_lo, y_hi]` (or its interior).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rectangle {
    pub x_lo: usize,
    pub x_hi: usize,
    pub y_lo: usize,
    pub y_hi: usize,
    pub boundary: Boundary,
}

impl Rectangle {
    /// The box spanned by two graph points (endpoints taken in either order).
    pub fn spanned(p1: GraphPoint, p2: GraphPoint, boundary: Boundary) -> Self {
        Rectangle { x_lo: p1.x.min(p2.x), x_hi: p1.x.max(p2.x), y_lo: p1.y.min(p2.y), y_hi: p1.y.max(p2.y), boundary }
    }

    /// The box spanned by the graph points with abscissae `a` and `b`.
    pub fn between_abscissae(w: &Permutation, a: usize, b: usize, boundary: Boundary) -> Self {
        Self::spanned(w.point(a), w.point(b), boundary)
    }

    /// The box spanned by the graph points with ordinates `a` and `b`.
    pub fn between_ordinates(w: &Permutation, a: usize, b: usize, boundary: Boundary) -> Self {
        Self::spanned(w.point_with_value(a), w.point_with_value(b), boundary)
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        match self.boundary {
            Boundary::Open => self.x_lo < i && i < self.x_hi && self.y_lo < j && j < self.y_hi,
            Boundary::Closed => self.x_lo <= i && i <= self.x_hi && self.y_lo <= j && j <= self.y_hi,
        }
    }

    pub fn contains_point(&self, pt: GraphPoint) -> bool {
        self.contains(pt.x, pt.y)
    }

    /// The graph points of `w` inside the box, by increasing abscissa.
    pub fn graph_points(&self, w: &Permutation) -> Vec<GraphPoint> {
        w.graph().filter(|&pt| self.contains_point(pt)).collect()
    }
}

/// Which frontier of a point set to extract: the points with no other point
/// of the set strictly in the named direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Frontier {
    /// No other point to the South-West (the minimal elements).
    SouthWest,
    /// No other point to the North-East (the maximal elements).
    NorthEast,
    /// No other point to the North-West.
    NorthWest,
    /// No other point to the South-East.
    SouthEast,
}

/// The frontier of a set of graph points, sorted by increasing abscissa.
/// Points of a graph never share a row or column, so "strictly" is the only
/// meaningful reading.
pub fn frontier(points: &[GraphPoint], which: Frontier) -> Vec<GraphPoint> {
    let dominates = |o: &GraphPoint, p: &GraphPoint| match which {
        Frontier::SouthWest => o.x < p.x && o.y < p.y,
        Frontier::NorthEast => o.x > p.x && o.y > p.y,
        Frontier::NorthWest => o.x < p.x && o.y > p.y,
        Frontier::SouthEast => o.x > p.x && o.y < p.y,
    };
    let mut out: Vec<GraphPoint> = points.iter().filter(|p| !points.iter().any(|o| dominates(o, p))).copied().collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadrant_membership() {
        let q = Quadrant::north_west(4, 5);
        assert!(q.contains(4, 6));
        assert!(!q.contains(4, 5));
        assert!(!q.contains(5, 6));
        let w: Permutation = "5,10,7,2,9,8,1,6,3,4".parse().unwrap();
        let pts: Vec<_> = q.graph_points(&w).iter().map(|p| p.x).collect();
        assert_eq!(pts, vec![2, 3]);
        let se: Vec<_> = Quadrant::south_east(4, 5).graph_points(&w).iter().map(|p| p.x).collect();
        assert_eq!(se, vec![7, 9, 10]);
    }

    #[test]
    fn rectangle_endpoints_unordered() {
        let w: Permutation = "3,4,1,2".parse().unwrap();
        let r1 = Rectangle::between_abscissae(&w, 1, 4, Boundary::Open);
        let r2 = Rectangle::between_abscissae(&w, 4, 1, Boundary::Open);
        assert_eq!(r1, r2);
        assert_eq!(r1.graph_points(&w), vec![]);
        let closed = Rectangle::between_ordinates(&w, 1, 4, Boundary::Closed);
        assert_eq!(closed.graph_points(&w).len(), 2);
    }

    #[test]
    fn frontiers_of_antichain_and_chain() {
        let pts = vec![GraphPoint::new(1, 3), GraphPoint::new(2, 1), GraphPoint::new(3, 2)];
        assert_eq!(frontier(&pts, Frontier::SouthWest), vec![GraphPoint::new(1, 3), GraphPoint::new(2, 1)]);
        assert_eq!(frontier(&pts, Frontier::NorthEast), vec![GraphPoint::new(1, 3), GraphPoint::new(3, 2)]);
        assert_eq!(frontier(&pts, Frontier::SouthEast), vec![GraphPoint::new(2, 1), GraphPoint::new(3, 2)]);
        assert_eq!(frontier(&pts, Frontier::NorthWest), vec![GraphPoint::new(1, 3)]);
    }
}
