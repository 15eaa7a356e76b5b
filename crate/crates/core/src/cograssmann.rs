//! Cobigrassmannian permutations, the coessential set and corectrices.
//!
//! A cobigrassmannian is described by a quadruple `(n0, n1, n2, n3)` with
//! `n1, n2 ≥ 1`: cut `(n, n-1, …, 1)` into four consecutive blocks and
//! exchange the two middle ones so that, after the exchange, the blocks
//! occupy `n0, n1, n2, n3` positions from left to right. With
//! `P = n0 + n1` and `Q = n1 + n3`, a permutation `w` lies below it exactly
//! when `r_w(P, Q) ≥ n1`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cobigrassmannian {
    pub n0: usize,
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
}

impl Cobigrassmannian {
    pub fn new(n0: usize, n1: usize, n2: usize, n3: usize) -> Result<Self> {
        if n1 == 0 || n2 == 0 {
            return Err(Error::Precondition(format!("quadruple ({n0},{n1},{n2},{n3}) needs n1, n2 ≥ 1")));
        }
        Ok(Cobigrassmannian { n0, n1, n2, n3 })
    }

    /// The quadruple attached to the corner `(p, q)` of `w`:
    /// `(p - r, r, n - p - q + r, q - r)` with `r = r_w(p, q)`; it is the
    /// smallest cobigrassmannian above `w` cutting along that corner.
    pub fn at_corner(w: &Permutation, p: usize, q: usize) -> Result<Self> {
        let n = w.size();
        let r = w.rank(p, q)?;
        Self::new(p - r, r, n + r - p - q, q - r)
    }

    pub fn size(&self) -> usize {
        self.n0 + self.n1 + self.n2 + self.n3
    }

    /// The corner `(n0 + n1, n1 + n3)` along which the rank condition is read.
    pub fn corner(&self) -> (usize, usize) {
        (self.n0 + self.n1, self.n1 + self.n3)
    }

    /// The permutation in one-line notation: the largest element with
    /// `r(n0 + n1, n1 + n3) ≥ n1`.
    pub fn realize(&self) -> Permutation {
        let descending: Vec<usize> = (1..=self.size()).rev().collect();
        let (top, rest) = descending.split_at(self.n0);
        let (upper_middle, rest) = rest.split_at(self.n2);
        let (lower_middle, bottom) = rest.split_at(self.n1);
        let images = [top, lower_middle, upper_middle, bottom].concat();
        Permutation::from_images_unchecked(images)
    }

    pub fn is_iterable(&self) -> bool {
        self.n0 >= 1 && self.n3 >= 1
    }

    /// `(n0 - 1, n1 + 1, n2 + 1, n3 - 1)`, the next cobigrassmannian down
    /// along the same corner.
    pub fn iterate(&self) -> Result<Self> {
        if !self.is_iterable() {
            return Err(Error::Precondition(format!("{self} is not iterable (needs n0, n3 ≥ 1)")));
        }
        Ok(Cobigrassmannian { n0: self.n0 - 1, n1: self.n1 + 1, n2: self.n2 + 1, n3: self.n3 - 1 })
    }

    /// Every valid quadruple of total size `n`.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for n1 in 1..=n {
            for n2 in 1..=n - n1 {
                for n0 in 0..=n - n1 - n2 {
                    let n3 = n - n1 - n2 - n0;
                    out.push(Cobigrassmannian { n0, n1, n2, n3 });
                }
            }
        }
        out.sort_unstable();
        out
    }
}

impl fmt::Display for Cobigrassmannian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.n0, self.n1, self.n2, self.n3)
    }
}

/// `w ≤ realize(c)`, read off the rank condition at the corner of `c`.
pub fn leq_cobigrassmannian(w: &Permutation, c: &Cobigrassmannian) -> Result<bool> {
    if w.size() != c.size() {
        return Err(Error::SizeMismatch { left: w.size(), right: c.size() });
    }
    let (p, q) = c.corner();
    Ok(w.rank(p, q)? >= c.n1)
}

/// A coessential point `(p, q)`: `w(p-1) ≤ q < w(p)` and
/// `w⁻¹(q) ≤ p-1 < w⁻¹(q+1)`, with `w(0) = 0` and `w⁻¹(n+1) = n+1`.
/// Its associated corner is `(p - 1, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CoessentialPoint {
    pub p: usize,
    pub q: usize,
}

impl CoessentialPoint {
    /// The corner `(p - 1, q)` of the rank condition it carries.
    pub fn corner(&self) -> (usize, usize) {
        (self.p - 1, self.q)
    }
}

/// The coessential set, sorted lexicographically.
pub fn coessential_set(w: &Permutation) -> Vec<CoessentialPoint> {
    let n = w.size();
    let value_at = |x: usize| if x == 0 { 0 } else { w.at(x) };
    let position_of = |y: usize| if y > n { n + 1 } else { w.position(y) };
    let mut out = Vec::new();
    for p in 1..=n {
        for q in 1..=n {
            if value_at(p - 1) <= q && q < w.at(p) && position_of(q) < p && p - 1 < position_of(q + 1) {
                out.push(CoessentialPoint { p, q });
            }
        }
    }
    out
}

/// The cobigrassmannian attached to a coessential point of `w`.
pub fn corectrix(w: &Permutation, point: CoessentialPoint) -> Result<Cobigrassmannian> {
    if point.p < 2 || point.p > w.size() || point.q == 0 || point.q > w.size() {
        return Err(Error::Precondition(format!("({}, {}) is not a coessential point", point.p, point.q)));
    }
    let (p, q) = point.corner();
    Cobigrassmannian::at_corner(w, p, q)
}

/// The minimal cobigrassmannians above `w`, one per coessential point, in
/// the order of the coessential set.
pub fn corectrices(w: &Permutation) -> Vec<Cobigrassmannian> {
    coessential_set(w)
        .into_iter()
        .map(|pt| corectrix(w, pt).expect("coessential points carry valid quadruples"))
        .collect()
}
