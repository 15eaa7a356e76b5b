//! Maximal elements of two lower sets that drive the whole construction:
//!
//! * the common lower bounds of `w` and the cobigrassmannian one step below
//!   the corner `(p, q)`, obtained from pairs of anchors on the frontiers of
//!   the North-West and South-East parts of the graph;
//! * the elements strictly below `z` having a prescribed left descent,
//!   obtained from transposition chains in three shapes.

use serde::{Deserialize, Serialize};

use crate::cograssmann::Cobigrassmannian;
use crate::config::ConfigurationI;
use crate::error::{Error, Result};
use crate::perm::{GraphPoint, Permutation};
use crate::plane::{frontier, Boundary, Frontier, Quadrant, Rectangle};

/// A pair of anchors at a corner: `P+` on the South-East frontier of the
/// graph points North-West of the corner, `P-` on the North-West frontier of
/// those South-East of it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bordage {
    pub corner: (usize, usize),
    pub p_plus: GraphPoint,
    pub p_minus: GraphPoint,
}

impl Bordage {
    /// The configuration spanned by the anchors (suites relative to the corner).
    pub fn configuration(&self, w: &Permutation) -> ConfigurationI {
        ConfigurationI::from_anchors(w, self.corner, self.p_plus, self.p_minus)
    }

    /// `τ = γ·w` for the configuration spanned by the anchors.
    pub fn tau(&self, w: &Permutation) -> Permutation {
        w.apply_cycle(&self.configuration(w).cycle()).expect("configuration ordinates are distinct values")
    }
}

fn check_corner(w: &Permutation, p: usize, q: usize) -> Result<usize> {
    let n = w.size();
    if p == 0 || p > n {
        return Err(Error::OutOfRange { what: "p", value: p, max: n });
    }
    if q == 0 || q > n {
        return Err(Error::OutOfRange { what: "q", value: q, max: n });
    }
    let r = w.rank(p, q)?;
    if r >= p.min(q) {
        return Err(Error::Precondition(format!("r_w({p},{q}) = {r} is not below min(p, q)")));
    }
    Ok(r)
}

/// The cobigrassmannian `(p-r-1, r+1, n-p-q+r+1, q-r-1)` with `r = r_w(p,q)`:
/// the first one along the corner that `w` does not lie below.
pub fn cobigrassmannian_below_corner(w: &Permutation, p: usize, q: usize) -> Result<Cobigrassmannian> {
    let r = check_corner(w, p, q)?;
    let n = w.size();
    Cobigrassmannian::new(p - r - 1, r + 1, n + r + 1 - p - q, q - r - 1)
}

/// All anchor pairs at the corner `(p, q)`.
pub fn bordages(w: &Permutation, p: usize, q: usize) -> Result<Vec<Bordage>> {
    check_corner(w, p, q)?;
    let nw = frontier(&Quadrant::north_west(p, q).graph_points(w), Frontier::SouthEast);
    let se = frontier(&Quadrant::south_east(p, q).graph_points(w), Frontier::NorthWest);
    let mut out = Vec::new();
    for &p_plus in &nw {
        for &p_minus in &se {
            out.push(Bordage { corner: (p, q), p_plus, p_minus });
        }
    }
    Ok(out)
}

/// The maximal elements of `{z : z ≤ w, z ≤ c}` where `c` is
/// [`cobigrassmannian_below_corner`]: one `τ` per anchor pair, sorted.
pub fn lambda_max(w: &Permutation, p: usize, q: usize) -> Result<Vec<Permutation>> {
    let mut out: Vec<Permutation> = bordages(w, p, q)?.iter().map(|b| b.tau(w)).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Shape of a maximal element below `z` with a left descent at `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DescentKind {
    /// Anchored at a graph point `(b, β)` West of `j` and above `j+1`.
    NorthWest { b: usize },
    /// Anchored at a graph point `(c, γ)` East of `j+1` and below `j`.
    SouthEast { c: usize },
    /// Anchored at `(b, β)` and `(c, γ)` between the positions of `j` and `j+1`.
    Mixed { b: usize, c: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DescentMaxElement {
    pub kind: DescentKind,
    pub tau: Permutation,
}

/// Applies `(v0 v1)(v1 v2)…(v_{k-1} v_k)` on the left of `z`.
fn apply_chain(z: &Permutation, chain: &[usize]) -> Permutation {
    chain.windows(2).rev().fold(z.clone(), |acc, pair| acc.swap_values(pair[0], pair[1]))
}

/// Chain `j+1, y1, …, ys, β`: the `y` are the ordinates, increasing, of the
/// South-West frontier of the graph points strictly inside the box spanned
/// by the points of ordinates `j+1` and `β`.
fn north_chain(z: &Permutation, j: usize, beta: usize) -> Vec<usize> {
    let inside = Rectangle::between_ordinates(z, j + 1, beta, Boundary::Open).graph_points(z);
    let mut ys: Vec<usize> = frontier(&inside, Frontier::SouthWest).iter().map(|pt| pt.y).collect();
    ys.sort_unstable();
    let mut chain = vec![j + 1];
    chain.extend(ys);
    chain.push(beta);
    chain
}

/// Chain `j, y-1, …, y-t, γ`: the `y` are the ordinates, decreasing, of the
/// North-East frontier of the graph points strictly inside the box spanned
/// by the points of ordinates `γ` and `j`.
fn south_chain(z: &Permutation, j: usize, gamma: usize) -> Vec<usize> {
    let inside = Rectangle::between_ordinates(z, gamma, j, Boundary::Open).graph_points(z);
    let mut ys: Vec<usize> = frontier(&inside, Frontier::NorthEast).iter().map(|pt| pt.y).collect();
    ys.sort_unstable_by(|a, b| b.cmp(a));
    let mut chain = vec![j];
    chain.extend(ys);
    chain.push(gamma);
    chain
}

/// The maximal elements of `{τ < z : s_j·τ < τ}`, for `z` with
/// `z < s_j·z` (the value `j` occurs before `j+1`).
pub fn max_below_with_descent(z: &Permutation, j: usize) -> Result<Vec<DescentMaxElement>> {
    let n = z.size();
    if j == 0 || j >= n {
        return Err(Error::OutOfRange { what: "j", value: j, max: n.saturating_sub(1) });
    }
    let (pos_j, pos_next) = (z.position(j), z.position(j + 1));
    if pos_j > pos_next {
        return Err(Error::Precondition(format!("{z} already has a left descent at {j}")));
    }
    let mut out = Vec::new();

    let north: Vec<GraphPoint> = z.graph().filter(|pt| pt.x < pos_j && pt.y > j + 1).collect();
    for pt in frontier(&north, Frontier::SouthEast) {
        out.push(DescentMaxElement {
            kind: DescentKind::NorthWest { b: pt.x },
            tau: apply_chain(z, &north_chain(z, j, pt.y)),
        });
    }

    let south: Vec<GraphPoint> = z.graph().filter(|pt| pt.x > pos_next && pt.y < j).collect();
    for pt in frontier(&south, Frontier::NorthWest) {
        out.push(DescentMaxElement {
            kind: DescentKind::SouthEast { c: pt.x },
            tau: apply_chain(z, &south_chain(z, j, pt.y)),
        });
    }

    for b in pos_j + 1..pos_next {
        let beta = z.at(b);
        if beta <= j + 1 {
            continue;
        }
        for c in b + 1..pos_next {
            let gamma = z.at(c);
            if gamma >= j {
                continue;
            }
            let empty = Rectangle::between_abscissae(z, b, c, Boundary::Open).graph_points(z).is_empty();
            if !empty {
                continue;
            }
            let after_south = apply_chain(z, &south_chain(z, j, gamma));
            out.push(DescentMaxElement {
                kind: DescentKind::Mixed { b, c },
                tau: apply_chain(&after_south, &north_chain(z, j, beta)),
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn bigrassmannian_base_case() {
        // b = (1,3,2,4) from (1,1,1,1) at the corner (2, 2).
        let b = p("1,3,2,4");
        assert_eq!(lambda_max(&b, 2, 2).unwrap(), vec![Permutation::identity(4)]);
    }

    #[test]
    fn bigrassmannian_family() {
        // b = (1..n1, n1+n3+1..n1+n3+n0, n1+1..n1+n3, rest), corner (n0+n1, n1+n3).
        for (n0, n1, n2, n3) in [(2, 1, 1, 2), (1, 2, 1, 2), (3, 1, 2, 1), (2, 2, 2, 1)] {
            let mut images: Vec<usize> = (1..=n1).collect();
            images.extend(n1 + n3 + 1..=n1 + n3 + n0);
            images.extend(n1 + 1..=n1 + n3);
            images.extend(n1 + n3 + n0 + 1..=n0 + n1 + n2 + n3);
            let b = Permutation::new(images).unwrap();
            let (p_, q_) = (n0 + n1, n1 + n3);
            let mut expected: Vec<Permutation> = Vec::new();
            for i in n1 + 1..=q_ {
                for j in q_ + 1..=q_ + n0 {
                    expected.push(b.swap_values(i, j));
                }
            }
            expected.sort();
            assert_eq!(lambda_max(&b, p_, q_).unwrap(), expected, "{b}");
        }
    }

    #[test]
    fn rejects_full_rank_corner() {
        let w = Permutation::identity(4);
        assert!(lambda_max(&w, 2, 2).is_err());
        assert!(lambda_max(&w, 0, 2).is_err());
    }

    #[test]
    fn descent_examples() {
        let z = p("2,3,1");
        assert!(max_below_with_descent(&z, 1).is_err());
        let got: Vec<_> = max_below_with_descent(&z, 2).unwrap().into_iter().map(|e| e.tau).collect();
        assert_eq!(got, vec![p("1,3,2")]);
        assert!(max_below_with_descent(&Permutation::identity(3), 1).unwrap().is_empty());
        assert!(max_below_with_descent(&z, 3).is_err());
    }

    #[test]
    fn chain_product_is_a_cycle() {
        let z = p("1,2,3,4");
        // (1 2)(2 3)(3 4)·id = cycle 1→2→3→4→1 applied to values.
        assert_eq!(apply_chain(&z, &[1, 2, 3, 4]), z.apply_cycle(&[1, 2, 3, 4]).unwrap());
    }
}
