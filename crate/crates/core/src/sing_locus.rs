//! Irreducible components of the singular locus of `X_w` and their generic
//! singularity type.
//!
//! The components are the `X_τ` for non-degenerate configurations of type I,
//! and the `X_σ` for configurations of type II that are either mixed (no
//! central point) or pure (no suite point). Along each component the
//! transversal slice is a rank-at-most-one determinantal cone `C_{i,j}` of
//! `i × j` matrices or a nondegenerate quadric cone `K_m`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::config::{enumerate_config_i, enumerate_config_ii, sigma, tau, ConfigurationI, ConfigurationII};
use crate::error::{Error, Result};
use crate::perm::{contains_pattern, Pattern, Permutation};

/// Isomorphism type of the generic transversal slice to a component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum TransversalType {
    /// `C_{rows,cols}`: `rows × cols` matrices of rank at most one.
    #[serde(rename = "C")]
    RankOneCone { rows: usize, cols: usize },
    /// `K_dim`: cone over a smooth quadric, of dimension `dim` (odd).
    #[serde(rename = "K")]
    QuadraticCone { dim: usize },
}

impl TransversalType {
    pub fn rank_one(rows: usize, cols: usize) -> Result<Self> {
        if rows < 2 || cols < 2 {
            return Err(Error::Precondition(format!("C_{{{rows},{cols}}} needs both sizes ≥ 2")));
        }
        Ok(TransversalType::RankOneCone { rows, cols })
    }

    pub fn quadric(dim: usize) -> Result<Self> {
        if dim < 5 || dim.is_multiple_of(2) {
            return Err(Error::Precondition(format!("K_{dim} needs an odd dimension ≥ 5")));
        }
        Ok(TransversalType::QuadraticCone { dim })
    }

    /// Dimension of the cone, which equals the codimension of the component.
    pub fn dim(&self) -> usize {
        match *self {
            TransversalType::RankOneCone { rows, cols } => rows + cols - 1,
            TransversalType::QuadraticCone { dim } => dim,
        }
    }

    /// Equality up to isomorphism: `C_{i,j} ≅ C_{j,i}` by transposition.
    pub fn is_isomorphic(&self, other: &TransversalType) -> bool {
        match (*self, *other) {
            (TransversalType::RankOneCone { rows: a, cols: b }, TransversalType::RankOneCone { rows: c, cols: d }) => {
                (a, b) == (c, d) || (a, b) == (d, c)
            }
            (x, y) => x == y,
        }
    }
}

impl fmt::Display for TransversalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransversalType::RankOneCone { rows, cols } => write!(f, "C_{{{rows},{cols}}}"),
            TransversalType::QuadraticCone { dim } => write!(f, "K_{dim}"),
        }
    }
}

/// A polynomial in `q` with positive integer coefficients, serialized as its
/// dense coefficient list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<u64>", into = "Vec<u64>")]
pub struct KLPolynomial {
    coefficients: BTreeMap<u32, u64>,
}

impl KLPolynomial {
    /// From dense coefficients, index = exponent; zero entries are dropped.
    pub fn from_dense(coefficients: &[u64]) -> Self {
        KLPolynomial {
            coefficients: coefficients
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(e, &c)| (e as u32, c))
                .collect(),
        }
    }

    /// Dense coefficient list, index = exponent.
    pub fn to_dense(&self) -> Vec<u64> {
        let degree = self.degree().unwrap_or(0) as usize;
        let mut dense = vec![0; degree + 1];
        for (&e, &c) in &self.coefficients {
            dense[e as usize] = c;
        }
        dense
    }

    pub fn degree(&self) -> Option<u32> {
        self.coefficients.keys().next_back().copied()
    }

    pub fn coefficient(&self, exponent: u32) -> u64 {
        self.coefficients.get(&exponent).copied().unwrap_or(0)
    }

    /// Value at `q = 1`.
    pub fn value_at_one(&self) -> u64 {
        self.coefficients.values().sum()
    }
}

impl From<Vec<u64>> for KLPolynomial {
    fn from(dense: Vec<u64>) -> Self {
        KLPolynomial::from_dense(&dense)
    }
}

impl From<KLPolynomial> for Vec<u64> {
    fn from(poly: KLPolynomial) -> Self {
        poly.to_dense()
    }
}

/// Renders as `1+q+q^2`, `1+q^2`, `1`.
impl fmt::Display for KLPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return write!(f, "0");
        }
        for (k, (&e, &c)) in self.coefficients.iter().enumerate() {
            if k > 0 {
                write!(f, "+")?;
            }
            let coef = if c == 1 && e > 0 { String::new() } else { c.to_string() };
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{coef}q")?,
                _ => write!(f, "{coef}q^{e}")?,
            }
        }
        Ok(())
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128) as u64
}

/// Kazhdan–Lusztig polynomial `P_{v,w}` and multiplicity of `X_w` at a generic
/// point of a component with the given transversal type:
/// `C_{i+1,j+1}` gives `1 + q + … + q^{min(i,j)}` and `binom(i+j, i)`;
/// `K_{2k+1}` gives `1 + q^k` and `2`.
pub fn kl_and_mult(transversal: &TransversalType) -> Result<(KLPolynomial, u64)> {
    match *transversal {
        TransversalType::RankOneCone { rows, cols } => {
            if rows < 2 || cols < 2 {
                return Err(Error::Precondition(format!("{transversal} is not a singular cone")));
            }
            let (i, j) = ((rows - 1) as u64, (cols - 1) as u64);
            let poly = KLPolynomial::from_dense(&vec![1; i.min(j) as usize + 1]);
            Ok((poly, binomial(i + j, i)))
        }
        TransversalType::QuadraticCone { dim } => {
            if dim < 5 || dim % 2 == 0 {
                return Err(Error::Precondition(format!("{transversal} is not a quadric cone of odd dimension ≥ 5")));
            }
            let k = (dim - 1) / 2;
            let mut dense = vec![0; k + 1];
            dense[0] = 1;
            dense[k] = 1;
            Ok((KLPolynomial::from_dense(&dense), 2))
        }
    }
}

/// The configuration a component was read from.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum ConfigSource {
    #[serde(rename = "I")]
    TypeI(ConfigurationI),
    #[serde(rename = "II")]
    TypeII(ConfigurationII),
}

impl ConfigSource {
    /// The component permutation `τ` or `σ` in `w`.
    pub fn permutation(&self, w: &Permutation) -> Result<Permutation> {
        match self {
            ConfigSource::TypeI(c) => tau(w, c),
            ConfigSource::TypeII(c) => sigma(w, c),
        }
    }

    /// Short label: `I`, `II_m` (mixed), `II_p` (pure), or `II`.
    pub fn label(&self) -> &'static str {
        match self {
            ConfigSource::TypeI(_) => "I",
            ConfigSource::TypeII(c) if c.is_mixed() => "II_m",
            ConfigSource::TypeII(c) if c.is_pure() => "II_p",
            ConfigSource::TypeII(_) => "II",
        }
    }

    pub fn points(&self) -> Vec<crate::perm::GraphPoint> {
        match self {
            ConfigSource::TypeI(c) => c.points(),
            ConfigSource::TypeII(c) => c.points(),
        }
    }

    /// Display rank: type I first, then mixed, then pure.
    fn family_rank(&self) -> u8 {
        match self {
            ConfigSource::TypeI(_) => 0,
            ConfigSource::TypeII(c) if c.is_mixed() => 1,
            ConfigSource::TypeII(_) => 2,
        }
    }

    /// The generic transversal type when this configuration yields a component.
    pub fn transversal(&self) -> Option<TransversalType> {
        match self {
            ConfigSource::TypeI(c) if !c.is_degenerate() => {
                Some(TransversalType::RankOneCone { rows: c.s() + 1, cols: c.t() + 1 })
            }
            ConfigSource::TypeI(_) => None,
            ConfigSource::TypeII(c) if c.is_mixed() => {
                Some(TransversalType::RankOneCone { rows: c.s() + c.t() + 2, cols: 2 })
            }
            ConfigSource::TypeII(c) if c.is_pure() => Some(TransversalType::QuadraticCone { dim: 2 * c.r() + 3 }),
            ConfigSource::TypeII(_) => None,
        }
    }
}

/// One irreducible component `X_v` of the singular locus of `X_w`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularComponent {
    pub v: Permutation,
    /// Every configuration yielding `v`, the first one being the reference.
    pub sources: Vec<ConfigSource>,
    pub transversal: TransversalType,
    /// `ℓ(w) - ℓ(v)`.
    pub codim: usize,
    pub kl: KLPolynomial,
    pub mult: u64,
}

/// `X_w` is smooth iff `w` avoids 4231 and 3412.
pub fn is_smooth(w: &Permutation) -> bool {
    !contains_pattern(w, Pattern::P4231) && !contains_pattern(w, Pattern::P3412)
}

/// The components of the singular locus, type I first, then mixed, then
/// pure; within a family by configuration order.
pub fn singular_components(w: &Permutation) -> Vec<SingularComponent> {
    let sources = enumerate_config_i(w)
        .into_iter()
        .map(ConfigSource::TypeI)
        .chain(enumerate_config_ii(w).into_iter().map(ConfigSource::TypeII));
    let mut components: Vec<SingularComponent> = Vec::new();
    for source in sources {
        let Some(transversal) = source.transversal() else {
            continue;
        };
        let v = source.permutation(w).expect("enumerated configurations are valid");
        if let Some(existing) = components.iter_mut().find(|c| c.v == v) {
            existing.sources.push(source);
            continue;
        }
        let (kl, mult) = kl_and_mult(&transversal).expect("component cones are singular");
        components.push(SingularComponent {
            codim: w.length() - v.length(),
            v,
            sources: vec![source],
            transversal,
            kl,
            mult,
        });
    }
    components
        .sort_by(|x, y| (x.sources[0].family_rank(), &x.sources[0]).cmp(&(y.sources[0].family_rank(), &y.sources[0])));
    components
}

/// For a type II configuration with central points and a non-empty suite,
/// the type I configurations through which its `X_σ` is contained in a
/// larger component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContainmentEntry {
    pub config: ConfigurationII,
    pub sigma: Permutation,
    /// `(configuration, τ, transversal)` for each available witness.
    pub witnesses: Vec<(ConfigurationI, Permutation, TransversalType)>,
}

/// Builds, for every type II configuration with `r ≥ 1` and `s + t ≥ 1`,
/// the configurations of type I formed by (i) `a`, `c`, the South-West
/// suite and the central points (when `t ≥ 1`), and (ii) `b`, `d`, the
/// central points and the North-East suite (when `s ≥ 1`).
pub fn containment_report(w: &Permutation) -> Result<Vec<ContainmentEntry>> {
    let mut out = Vec::new();
    for conf in enumerate_config_ii(w) {
        if conf.r() == 0 || conf.s() + conf.t() == 0 {
            continue;
        }
        let sigma = sigma(w, &conf)?;
        let mut witnesses = Vec::new();
        let mut central_desc_x = conf.central.clone();
        central_desc_x.reverse();
        if conf.t() >= 1 {
            let ci = ConfigurationI {
                p_plus: conf.a,
                p_minus: conf.c,
                ne_suite: central_desc_x.clone(),
                so_suite: conf.so_suite.clone(),
            };
            let t = tau(w, &ci)?;
            witnesses.push((ci, t, TransversalType::RankOneCone { rows: conf.r() + 1, cols: conf.t() + 1 }));
        }
        if conf.s() >= 1 {
            let ci = ConfigurationI {
                p_plus: conf.b,
                p_minus: conf.d,
                ne_suite: conf.ne_suite.clone(),
                so_suite: conf.central.clone(),
            };
            let t = tau(w, &ci)?;
            witnesses.push((ci, t, TransversalType::RankOneCone { rows: conf.s() + 1, cols: conf.r() + 1 }));
        }
        out.push(ContainmentEntry { config: conf, sigma, witnesses });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::GraphPoint;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn kl_goldens() {
        let c33 = TransversalType::rank_one(3, 3).unwrap();
        let (poly, m) = kl_and_mult(&c33).unwrap();
        assert_eq!((poly.to_string(), m), ("1+q+q^2".to_string(), 6));
        let (poly, m) = kl_and_mult(&TransversalType::rank_one(2, 3).unwrap()).unwrap();
        assert_eq!((poly.to_string(), m), ("1+q".to_string(), 3));
        let (poly, m) = kl_and_mult(&TransversalType::quadric(5).unwrap()).unwrap();
        assert_eq!((poly.to_string(), m), ("1+q^2".to_string(), 2));
        assert_eq!(poly.to_dense(), vec![1, 0, 1]);
        assert!(kl_and_mult(&TransversalType::RankOneCone { rows: 1, cols: 3 }).is_err());
        assert!(kl_and_mult(&TransversalType::QuadraticCone { dim: 4 }).is_err());
        assert!(TransversalType::quadric(3).is_err());
    }

    #[test]
    fn multiplicity_is_kl_value_at_one_only_for_small_cones() {
        // For C_{2,j} the multiplicity j equals P(1) = 2 only when j = 2.
        let (poly, m) = kl_and_mult(&TransversalType::rank_one(2, 2).unwrap()).unwrap();
        assert_eq!(poly.value_at_one(), m);
    }

    #[test]
    fn smallest_singular_schubert_varieties() {
        let comps = singular_components(&p("3,4,1,2"));
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].v, p("1,3,2,4"));
        assert_eq!(comps[0].transversal, TransversalType::RankOneCone { rows: 2, cols: 2 });
        assert_eq!(comps[0].codim, 3);
        assert_eq!(comps[0].mult, 2);
        let comps = singular_components(&p("4,2,3,1"));
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].v, p("2,1,4,3"));
        assert_eq!(comps[0].transversal, TransversalType::RankOneCone { rows: 2, cols: 2 });
        assert!(singular_components(&Permutation::identity(5)).is_empty());
        assert!(singular_components(&Permutation::longest(5)).is_empty());
    }

    #[test]
    fn containment_on_large_example() {
        let w = p("11,12,17,7,3,5,16,10,1,9,2,6,15,4,18,13,8,14");
        let report = containment_report(&w).unwrap();
        let entry = report.iter().find(|e| e.config.quadruple() == [2, 7, 11, 17]).unwrap();
        assert_eq!(entry.witnesses.len(), 2);
        let comps: Vec<_> = singular_components(&w).into_iter().map(|c| c.v).collect();
        for (_, t, shape) in &entry.witnesses {
            assert!(entry.sigma.bruhat_le(t));
            assert!(comps.contains(t), "{t} not a component");
            assert_eq!(w.length() - t.length(), shape.dim());
        }
        assert_ne!(entry.witnesses[0].1, entry.witnesses[1].1);
    }

    #[test]
    fn worked_example_in_s10() {
        let w = p("5,10,7,2,9,8,1,6,3,4");
        let rows: Vec<(String, String, usize, String, u64)> = singular_components(&w)
            .into_iter()
            .map(|c| (c.v.to_string(), c.transversal.to_string(), c.codim, c.kl.to_string(), c.mult))
            .collect();
        let expected = [
            ("(5,7,2,1,10,9,8,6,3,4)", "C_{3,3}", 5, "1+q+q^2", 6),
            ("(5,7,6,2,10,9,1,8,3,4)", "C_{3,2}", 4, "1+q", 3),
            ("(2,10,5,3,9,8,1,7,6,4)", "C_{3,2}", 4, "1+q", 3),
            ("(2,10,5,4,9,8,1,7,3,6)", "C_{3,2}", 4, "1+q", 3),
            ("(2,10,7,1,9,5,3,8,6,4)", "C_{4,2}", 5, "1+q", 4),
            ("(2,10,7,1,9,5,4,8,3,6)", "C_{4,2}", 5, "1+q", 4),
            ("(3,10,7,2,9,8,1,5,4,6)", "C_{2,2}", 3, "1+q", 2),
            ("(5,10,2,1,9,7,6,8,3,4)", "C_{3,2}", 4, "1+q", 3),
            ("(5,10,3,2,9,7,1,6,4,8)", "K_5", 5, "1+q^2", 2),
        ];
        let expected: Vec<_> =
            expected.iter().map(|&(v, t, d, kl, m)| (v.to_string(), t.to_string(), d, kl.to_string(), m)).collect();
        assert_eq!(rows, expected);

        // The mixed configurations on (1,6,7,9) and (1,6,7,10) carry the
        // South-West point (4,2); dropping it gives a permutation strictly
        // below the component, of codimension 6 instead of 5.
        for (quad, component) in [([1, 6, 7, 9], "2,10,7,1,9,5,3,8,6,4"), ([1, 6, 7, 10], "2,10,7,1,9,5,4,8,3,6")] {
            let mut conf = ConfigurationII::from_quadruple(&w, quad).unwrap();
            assert_eq!(conf.so_suite, vec![GraphPoint::new(4, 2)]);
            conf.so_suite.clear();
            let truncated = w.apply_cycle(&conf.cycle()).unwrap();
            assert!(truncated.bruhat_le(&p(component)) && truncated != p(component));
            assert_eq!(w.length() - truncated.length(), 6);
        }
    }
}
