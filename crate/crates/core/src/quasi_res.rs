//! Quasi-resolutions of a non-covexillary Schubert variety and their
//! exceptional loci.
//!
//! A well-filled 3412 occurrence of minimal amplitude (the *frame*) fixes a
//! band of consecutive values `[δ', α']` on which `w` is maximal in its
//! parabolic coset. For each `i ∈ 1..=h` (`h` the frame height) removing one
//! generator `s_{k_i}` from that band gives a smaller permutation `w_i` and a
//! birational map onto `X_w`; the components of its exceptional locus and the
//! transport of singular components of `X_{w_i}` back to `X_w` are computed
//! here.

use serde::{Deserialize, Serialize};

use crate::config::{ConfigurationI, ConfigurationII};
use crate::error::{Error, Result};
use crate::perm::{
    coset_representative, is_coset_representative, longest_element, pattern_occurrences, CosetEnd, GraphPoint,
    ParabolicSet, Pattern, Permutation,
};
use crate::plane::{frontier, Frontier};
use crate::sing_locus::ConfigSource;

/// The chosen 3412 occurrence `a < b < c < d` with ordinates
/// `γ = w(c) < δ = w(d) < α = w(a) < β = w(b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Frame {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
    pub delta: usize,
}

impl Frame {
    /// `h = α - δ`.
    pub fn height(&self) -> usize {
        self.alpha - self.delta
    }

    /// `β - γ`.
    pub fn amplitude(&self) -> usize {
        self.beta - self.gamma
    }

    pub fn quadruple(&self) -> [usize; 4] {
        [self.a, self.b, self.c, self.d]
    }
}

/// Among 3412 occurrences whose values strictly between `δ` and `α` all sit
/// strictly between positions `b` and `c`, the one of minimal amplitude,
/// ties broken by the lexicographically largest quadruple.
pub fn select_frame(w: &Permutation) -> Result<Frame> {
    pattern_occurrences(w, Pattern::P3412)
        .into_iter()
        .map(|[a, b, c, d]| Frame { a, b, c, d, alpha: w.at(a), beta: w.at(b), gamma: w.at(c), delta: w.at(d) })
        .filter(|f| (f.delta + 1..f.alpha).all(|y| (f.b + 1..f.c).contains(&w.position(y))))
        .min_by_key(|f| (f.amplitude(), std::cmp::Reverse(f.quadruple())))
        .ok_or_else(|| Error::Covexillary(w.to_string()))
}

/// One quasi-resolution `Z_i → X_w`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiResolution {
    /// `i ∈ 1..=h`.
    pub index: usize,
    /// The removed generator `k_i = δ' + α' - α + i - 1`.
    pub removed: usize,
    /// `J_i = I \ {k_i}`.
    pub parabolic: ParabolicSet,
    /// `w_i = w_{J_i} · w_I · w`.
    pub w_i: Permutation,
    /// `dim Z_i = ℓ(w_I) - ℓ(w_{J_i}) + ℓ(w_i)`.
    pub dim: usize,
}

/// The frame, its extended band `[δ', α']` and the `h` quasi-resolutions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiResolutions {
    pub w: Permutation,
    pub frame: Frame,
    /// `α'`: `α` extended upwards while each next value sits further left.
    pub alpha_ext: usize,
    /// `δ'`: `δ` extended downwards while each next value sits further right.
    pub delta_ext: usize,
    /// `I = {s_δ', …, s_{α'-1}}`.
    pub parabolic: ParabolicSet,
    pub pieces: Vec<QuasiResolution>,
}

/// Builds the frame and the `h` quasi-resolutions of a non-covexillary `w`.
pub fn build_quasi_resolutions(w: &Permutation) -> Result<QuasiResolutions> {
    let frame = select_frame(w)?;
    let n = w.size();
    let mut alpha_ext = frame.alpha;
    while alpha_ext < n && w.position(alpha_ext + 1) < w.position(alpha_ext) {
        alpha_ext += 1;
    }
    let mut delta_ext = frame.delta;
    while delta_ext > 1 && w.position(delta_ext - 1) > w.position(delta_ext) {
        delta_ext -= 1;
    }
    let parabolic = ParabolicSet::interval(n, delta_ext, alpha_ext - 1)?;
    if !is_coset_representative(w, &parabolic, CosetEnd::Max)? {
        return Err(Error::Precondition(format!(
            "{w} is not maximal in its coset for the band [{delta_ext}, {alpha_ext}]"
        )));
    }
    let longest_full = longest_element(&parabolic);
    let folded = longest_full.compose(w)?;
    let pieces = (1..=frame.height())
        .map(|i| {
            let removed = delta_ext + alpha_ext - frame.alpha + i - 1;
            let sub = parabolic.without(removed);
            let longest_sub = longest_element(&sub);
            let w_i = longest_sub.compose(&folded)?;
            let dim = longest_full.length() - longest_sub.length() + w_i.length();
            Ok(QuasiResolution { index: i, removed, parabolic: sub, w_i, dim })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(QuasiResolutions { w: w.clone(), frame, alpha_ext, delta_ext, parabolic, pieces })
}

/// Shape of a component of an exceptional locus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ExceptionalKind {
    /// From a graph point `(b', β')` North-West of the band.
    NorthWest { b: usize },
    /// From a graph point `(c', γ')` South-East of the band.
    SouthEast { c: usize },
    /// From an incompressible occurrence through `(b', β')` and `(c', γ')`.
    Mixed { b: usize, c: usize },
}

/// A component `X_v` of the exceptional locus of the `index`-th quasi-resolution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionalComponent {
    pub index: usize,
    pub kind: ExceptionalKind,
    pub v: Permutation,
    pub config: ConfigSource,
}

impl ExceptionalComponent {
    /// A component coming from a degenerate type I configuration.
    pub fn is_degenerate(&self) -> bool {
        matches!(&self.config, ConfigSource::TypeI(c) if c.is_degenerate())
    }
}

impl QuasiResolutions {
    pub fn height(&self) -> usize {
        self.frame.height()
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.height() {
            return Err(Error::OutOfRange { what: "i", value: i, max: self.height() });
        }
        Ok(())
    }

    /// The components of the exceptional locus of the `i`-th quasi-resolution:
    /// North-West ones, then South-East ones, then mixed ones.
    pub fn exceptional_components(&self, i: usize) -> Result<Vec<ExceptionalComponent>> {
        self.check_index(i)?;
        let w = &self.w;
        let (alpha, alpha_ext, delta_ext) = (self.frame.alpha, self.alpha_ext, self.delta_ext);
        let upper = w.point_with_value(alpha - i + 1);
        let lower = w.point_with_value(alpha - i);
        let mut out = Vec::new();

        let north: Vec<GraphPoint> = w.graph().filter(|pt| pt.x < upper.x && pt.y > alpha_ext).collect();
        for anchor in frontier(&north, Frontier::SouthEast) {
            let top = (upper.y..=alpha_ext)
                .rev()
                .find(|&y| anchor.x < w.position(y))
                .expect("the upper band point lies East of the anchor");
            let so_suite: Vec<GraphPoint> = (upper.y..=top).rev().map(|y| w.point_with_value(y)).collect();
            let between: Vec<GraphPoint> = w
                .graph()
                .filter(|pt| upper.x < pt.x && pt.x < lower.x && alpha_ext < pt.y && pt.y < anchor.y)
                .collect();
            let mut ne_suite = frontier(&between, Frontier::SouthWest);
            ne_suite.reverse();
            let conf = ConfigurationI { p_plus: anchor, p_minus: lower, ne_suite, so_suite };
            out.push(self.component(i, ExceptionalKind::NorthWest { b: anchor.x }, ConfigSource::TypeI(conf))?);
        }

        let south: Vec<GraphPoint> = w.graph().filter(|pt| pt.x > lower.x && pt.y < delta_ext).collect();
        for anchor in frontier(&south, Frontier::NorthWest) {
            let bottom = (delta_ext..=lower.y)
                .find(|&y| w.position(y) < anchor.x)
                .expect("the lower band point lies West of the anchor");
            let ne_suite: Vec<GraphPoint> = (bottom..=lower.y).map(|y| w.point_with_value(y)).collect();
            let between: Vec<GraphPoint> = w
                .graph()
                .filter(|pt| upper.x < pt.x && pt.x < lower.x && anchor.y < pt.y && pt.y < delta_ext)
                .collect();
            let so_suite = frontier(&between, Frontier::NorthEast);
            let conf = ConfigurationI { p_plus: upper, p_minus: anchor, ne_suite, so_suite };
            out.push(self.component(i, ExceptionalKind::SouthEast { c: anchor.x }, ConfigSource::TypeI(conf))?);
        }

        for b in upper.x + 1..lower.x {
            for c in b + 1..lower.x {
                let quad = [upper.x, b, c, lower.x];
                if let Ok(conf) = ConfigurationII::from_quadruple(w, quad) {
                    out.push(self.component(i, ExceptionalKind::Mixed { b, c }, ConfigSource::TypeII(conf))?);
                }
            }
        }
        Ok(out)
    }

    fn component(&self, index: usize, kind: ExceptionalKind, config: ConfigSource) -> Result<ExceptionalComponent> {
        let v = config.permutation(&self.w)?;
        Ok(ExceptionalComponent { index, kind, v, config })
    }

    /// For a family holding one degenerate exceptional component per index
    /// (in index order), finds `i < j` with the `i`-th member of South-East
    /// kind at `c_i`, the `j`-th of North-West kind at `b_j`, and
    /// `w⁻¹(α-i+1) < b_j < c_i < w⁻¹(α-j)`. Returns `None` if there is none.
    pub fn good_family_witness(&self, family: &[ExceptionalComponent]) -> Result<Option<GoodFamilyWitness>> {
        if family.len() != self.height() {
            return Err(Error::Precondition(format!(
                "family has {} members, expected one per index 1..={}",
                family.len(),
                self.height()
            )));
        }
        for (k, member) in family.iter().enumerate() {
            if member.index != k + 1 {
                return Err(Error::Precondition(format!("member {k} belongs to index {}", member.index)));
            }
            if !member.is_degenerate() {
                return Err(Error::Precondition(format!("member {} is not a degenerate component", member.v)));
            }
        }
        let w = &self.w;
        let alpha = self.frame.alpha;
        for (ii, first) in family.iter().enumerate() {
            let ExceptionalKind::SouthEast { c } = first.kind else { continue };
            let i = ii + 1;
            for (jj, second) in family.iter().enumerate().skip(ii + 1) {
                let ExceptionalKind::NorthWest { b } = second.kind else { continue };
                let j = jj + 1;
                if !(w.position(alpha - i + 1) < b && b < c && c < w.position(alpha - j)) {
                    continue;
                }
                let top = (self.delta_ext + 1..=self.alpha_ext)
                    .find(|&q| w.position(q) < b && b < w.position(q - 1))
                    .ok_or_else(|| Error::Precondition(format!("no band value brackets position {b}")))?;
                let bottom = (self.delta_ext..self.alpha_ext)
                    .find(|&q| w.position(q + 1) < c && c < w.position(q))
                    .ok_or_else(|| Error::Precondition(format!("no band value brackets position {c}")))?;
                let quadruple = [w.position(top), b, c, w.position(bottom)];
                let config = ConfigurationII::from_quadruple(w, quadruple)?;
                let sigma = w.apply_cycle(&config.cycle())?;
                return Ok(Some(GoodFamilyWitness { i, j, quadruple, config, sigma }));
            }
        }
        Ok(None)
    }

    /// Carries a configuration parametrizing a singular component of
    /// `X_{w_i}` over to `X_w`, or reports that its image lies in the
    /// exceptional locus.
    ///
    /// With `v` the component permutation in `w_i` and `θ = w_{J_i}·v`, the
    /// component stays outside the exceptional locus exactly when `θ` is
    /// minimal in its `I`-coset and exchanging the band ends `δ'`, `α'` on `v`
    /// leaves the interval below `w_i`. It is then carried to the same
    /// points with ordinates read in `w`, a configuration of the same type
    /// whose permutation is `w_I · θ`.
    pub fn transport_configuration(&self, i: usize, conf: &ConfigSource) -> Result<Transport> {
        self.check_index(i)?;
        let piece = &self.pieces[i - 1];
        let v = conf.permutation(&piece.w_i)?;
        let theta = longest_element(&piece.parabolic).compose(&v)?;
        let minimal = coset_representative(&theta, &self.parabolic, CosetEnd::Min)? == theta;
        let swapped_below = v.swap_values(self.delta_ext, self.alpha_ext).bruhat_le(&piece.w_i);
        if !minimal || swapped_below {
            return Ok(Transport::Exceptional { v });
        }
        let w = &self.w;
        let lift = |pt: GraphPoint| w.point(pt.x);
        let carried = match conf {
            ConfigSource::TypeI(c) => ConfigSource::TypeI(c.map_points(lift)),
            ConfigSource::TypeII(c) => ConfigSource::TypeII(c.map_points(lift)),
        };
        let image = carried.permutation(w)?;
        let expected = longest_element(&self.parabolic).compose(&theta)?;
        if image != expected {
            return Err(Error::InvalidConfiguration(format!(
                "carried configuration gives {image}, expected {expected}"
            )));
        }
        Ok(Transport::Carried { config: carried, v: image })
    }
}

/// A good pair inside a family of degenerate exceptional components, with
/// the type II configuration whose component contains the intersection of
/// the pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodFamilyWitness {
    pub i: usize,
    pub j: usize,
    pub quadruple: [usize; 4],
    pub config: ConfigurationII,
    pub sigma: Permutation,
}

/// Outcome of carrying a singular component of `X_{w_i}` over to `X_w`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Transport {
    /// The image lies in the exceptional locus; `v` is the component in `w_i`.
    Exceptional { v: Permutation },
    /// The image is the component `X_v` of the singular locus of `X_w`.
    Carried { config: ConfigSource, v: Permutation },
}

/// Free-function form of [`QuasiResolutions::exceptional_components`].
pub fn exceptional_components(w: &Permutation, i: usize) -> Result<Vec<ExceptionalComponent>> {
    build_quasi_resolutions(w)?.exceptional_components(i)
}

/// Free-function form of [`QuasiResolutions::good_family_witness`].
pub fn good_family_witness(w: &Permutation, family: &[ExceptionalComponent]) -> Result<Option<GoodFamilyWitness>> {
    build_quasi_resolutions(w)?.good_family_witness(family)
}

/// Free-function form of [`QuasiResolutions::transport_configuration`].
pub fn transport_configuration(w: &Permutation, i: usize, conf: &ConfigSource) -> Result<Transport> {
    build_quasi_resolutions(w)?.transport_configuration(i, conf)
}
