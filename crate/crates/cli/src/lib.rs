//! Report types and text rendering for the `schubert` command-line tool.

use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use schubert_core::perm::{pattern_occurrences, GraphPoint, Pattern};
use schubert_core::quasi_res::{build_quasi_resolutions, ExceptionalComponent, ExceptionalKind, Frame};
use schubert_core::sing_locus::{
    is_smooth, singular_components, ConfigSource, KLPolynomial, SingularComponent, TransversalType,
};
use schubert_core::{Error, Permutation};

/// Output format selected on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Table,
    Json,
}

/// One row of the component table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub v: Permutation,
    /// `C` for a rank-one cone, `K` for a quadratic cone.
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rows: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cols: Option<usize>,
    /// Dimension of the transversal cone.
    pub dim: usize,
    pub codim: usize,
    pub kl: KLPolynomial,
    pub mult: u64,
    pub config: ConfigSource,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub other_configs: Vec<ConfigSource>,
}

impl From<SingularComponent> for ComponentReport {
    fn from(c: SingularComponent) -> Self {
        let (kind, rows, cols) = match c.transversal {
            TransversalType::RankOneCone { rows, cols } => ("C", Some(rows), Some(cols)),
            TransversalType::QuadraticCone { .. } => ("K", None, None),
        };
        let mut sources = c.sources.into_iter();
        let config = sources.next().expect("a component has at least one source");
        ComponentReport {
            v: c.v,
            kind: kind.to_string(),
            rows,
            cols,
            dim: c.transversal.dim(),
            codim: c.codim,
            kl: c.kl,
            mult: c.mult,
            config,
            other_configs: sources.collect(),
        }
    }
}

impl ComponentReport {
    pub fn transversal(&self) -> TransversalType {
        match (self.rows, self.cols) {
            (Some(rows), Some(cols)) => TransversalType::RankOneCone { rows, cols },
            _ => TransversalType::QuadraticCone { dim: self.dim },
        }
    }
}

/// One quasi-resolution and the components of its exceptional locus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieceReport {
    pub index: usize,
    pub removed: usize,
    pub w_i: Permutation,
    pub exceptional: Vec<ExceptionalComponent>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiResReport {
    pub frame: Frame,
    pub height: usize,
    pub alpha_ext: usize,
    pub delta_ext: usize,
    pub pieces: Vec<PieceReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub version: String,
    pub elapsed_us: u64,
}

/// Everything `analyze` reports about `X_w`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub w: Permutation,
    pub smooth: bool,
    pub components: Vec<ComponentReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quasi_resolutions: Option<QuasiResReport>,
    pub meta: Meta,
}

fn meta(start: Instant) -> Meta {
    Meta {
        version: env!("CARGO_PKG_VERSION").to_string(),
        elapsed_us: u64::try_from(start.elapsed().as_micros()).unwrap_or(u64::MAX),
    }
}

/// Components of the singular locus, plus the quasi-resolutions when `w`
/// contains 3412.
pub fn analyze(w: &Permutation) -> Report {
    let start = Instant::now();
    let components: Vec<ComponentReport> = singular_components(w).into_iter().map(Into::into).collect();
    let quasi_resolutions = quasi_resolutions(w).ok();
    Report { w: w.clone(), smooth: components.is_empty(), components, quasi_resolutions, meta: meta(start) }
}

/// The quasi-resolution summary; fails for covexillary `w`.
pub fn quasi_resolutions(w: &Permutation) -> Result<QuasiResReport, Error> {
    let qr = build_quasi_resolutions(w)?;
    let pieces = qr
        .pieces
        .iter()
        .map(|piece| {
            Ok(PieceReport {
                index: piece.index,
                removed: piece.removed,
                w_i: piece.w_i.clone(),
                exceptional: qr.exceptional_components(piece.index)?,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(QuasiResReport {
        frame: qr.frame,
        height: qr.height(),
        alpha_ext: qr.alpha_ext,
        delta_ext: qr.delta_ext,
        pieces,
    })
}

/// Smoothness and the first occurrence of each obstructing pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmoothReport {
    pub w: Permutation,
    pub smooth: bool,
    pub occurrence_4231: Option<[usize; 4]>,
    pub occurrence_3412: Option<[usize; 4]>,
}

pub fn smoothness(w: &Permutation) -> SmoothReport {
    SmoothReport {
        w: w.clone(),
        smooth: is_smooth(w),
        occurrence_4231: pattern_occurrences(w, Pattern::P4231).into_iter().next(),
        occurrence_3412: pattern_occurrences(w, Pattern::P3412).into_iter().next(),
    }
}

/// Columns joined by two spaces, each padded to its widest cell.
pub fn render_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(cell, &w)| format!("{cell}{}", " ".repeat(w - cell.chars().count())))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = String::new();
    writeln!(out, "{}", line(headers.iter().map(|h| h.to_string()).collect())).unwrap();
    writeln!(out, "{}", line(widths.iter().map(|&w| "-".repeat(w)).collect())).unwrap();
    for row in rows {
        writeln!(out, "{}", line(row.clone())).unwrap();
    }
    out
}

fn ordinates(points: &[GraphPoint]) -> String {
    let ys: Vec<String> = points.iter().map(|pt| pt.y.to_string()).collect();
    format!("[{}]", ys.join(","))
}

fn point(pt: GraphPoint) -> String {
    format!("({},{})", pt.x, pt.y)
}

/// Anchors and suite ordinates of a configuration, e.g.
/// `I (2,10)/(9,3) ne[7] so[6,4]` or `II_p [1,2,8,10] c[7,6] ne[] so[]`.
pub fn describe_config(source: &ConfigSource) -> String {
    match source {
        ConfigSource::TypeI(c) => format!(
            "I {}/{} ne{} so{}",
            point(c.p_plus),
            point(c.p_minus),
            ordinates(&c.ne_suite),
            ordinates(&c.so_suite)
        ),
        ConfigSource::TypeII(c) => format!(
            "{} [{},{},{},{}] c{} ne{} so{}",
            source.label(),
            c.a,
            c.b,
            c.c,
            c.d,
            ordinates(&c.central),
            ordinates(&c.ne_suite),
            ordinates(&c.so_suite)
        ),
    }
}

fn describe_kind(kind: ExceptionalKind) -> String {
    match kind {
        ExceptionalKind::NorthWest { b } => format!("north-west [b'={b}]"),
        ExceptionalKind::SouthEast { c } => format!("south-east [c'={c}]"),
        ExceptionalKind::Mixed { b, c } => format!("mixed [b'={b}, c'={c}]"),
    }
}

/// The component table: configuration, `v`, transversal, codimension,
/// Kazhdan–Lusztig polynomial, multiplicity.
pub fn render_report(report: &Report) -> String {
    if report.smooth {
        return format!("{}: smooth\n", report.w);
    }
    let rows: Vec<Vec<String>> = report
        .components
        .iter()
        .map(|c| {
            vec![
                describe_config(&c.config),
                c.v.to_string(),
                c.transversal().to_string(),
                c.codim.to_string(),
                c.kl.to_string(),
                c.mult.to_string(),
            ]
        })
        .collect();
    let mut out = format!("{}: {} singular component(s)\n", report.w, report.components.len());
    out.push_str(&render_table(&["config", "v", "N", "d", "P", "m"], &rows));
    out
}

pub fn render_quasi_resolutions(w: &Permutation, qr: &QuasiResReport) -> String {
    let f = &qr.frame;
    let mut out = String::new();
    writeln!(out, "{w}").unwrap();
    writeln!(
        out,
        "frame [{},{},{},{}]  h={}  alpha={} alpha'={}  delta={} delta'={}",
        f.a, f.b, f.c, f.d, qr.height, f.alpha, qr.alpha_ext, f.delta, qr.delta_ext
    )
    .unwrap();
    let rows: Vec<Vec<String>> = qr
        .pieces
        .iter()
        .flat_map(|piece| {
            piece.exceptional.iter().map(move |e| {
                vec![
                    piece.index.to_string(),
                    piece.removed.to_string(),
                    piece.w_i.to_string(),
                    describe_kind(e.kind),
                    e.v.to_string(),
                ]
            })
        })
        .collect();
    out.push_str(&render_table(&["i", "k_i", "w_i", "exceptional", "v"], &rows));
    out
}

pub fn render_smoothness(report: &SmoothReport) -> String {
    let fmt = |occ: Option<[usize; 4]>| occ.map_or("-".to_string(), |[a, b, c, d]| format!("[{a},{b},{c},{d}]"));
    let verdict = if report.smooth { "smooth" } else { "singular" };
    format!(
        "{}: {verdict}\n4231 at {}\n3412 at {}\n",
        report.w,
        fmt(report.occurrence_4231),
        fmt(report.occurrence_3412)
    )
}

/// Engine components against the oracle's maximal singular points, with the
/// Zariski tangent dimension at each.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub w: Permutation,
    pub length: usize,
    pub engine: Vec<Permutation>,
    pub oracle: Vec<Permutation>,
    pub tangent_dims: Vec<usize>,
    pub agree: bool,
}

pub fn oracle_check(w: &Permutation) -> OracleReport {
    use schubert_core::oracle::{singular_locus_brute, tangent_dim};
    let mut engine: Vec<Permutation> = singular_components(w).into_iter().map(|c| c.v).collect();
    engine.sort();
    let oracle = singular_locus_brute(w);
    let tangent_dims = oracle.iter().map(|v| tangent_dim(v, w).expect("oracle points lie below w")).collect();
    OracleReport { w: w.clone(), length: w.length(), agree: engine == oracle, engine, oracle, tangent_dims }
}

pub fn render_oracle(report: &OracleReport) -> String {
    let rows: Vec<Vec<String>> = report
        .oracle
        .iter()
        .zip(&report.tangent_dims)
        .map(|(v, dim)| {
            let found = if report.engine.contains(v) { "yes" } else { "no" };
            vec![v.to_string(), v.length().to_string(), dim.to_string(), found.to_string()]
        })
        .collect();
    let mut out = format!(
        "{}: l(w)={}  engine {}  oracle {}  {}\n",
        report.w,
        report.length,
        report.engine.len(),
        report.oracle.len(),
        if report.agree { "agree" } else { "DISAGREE" }
    );
    out.push_str(&render_table(&["v", "l(v)", "dim T_v", "engine"], &rows));
    for v in report.engine.iter().filter(|v| !report.oracle.contains(v)) {
        writeln!(out, "engine only: {v}").unwrap();
    }
    out
}

/// Outcome of one verification suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub name: String,
    pub tested: usize,
    pub violations: usize,
    pub first: Option<String>,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub n: usize,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.violations == 0)
    }
}

/// Runs the oracle equivalence and the property suites on the selected
/// permutations of `S_n`. The Λ-max and descent suites scan all of `S_n`
/// per permutation and only run for `n ≤ 6`.
pub fn verify(n: usize, selection: schubert_core::oracle::Selection) -> VerifyReport {
    use schubert_core::oracle::{
        collect_violations, descent_violations, equivalence_harness, lambda_max_violations, property_violations,
        quasi_res_violations, select,
    };
    let mut suites = Vec::new();
    let equivalence = equivalence_harness(n, selection);
    suites.push(SuiteReport {
        name: "oracle equivalence".to_string(),
        tested: equivalence.tested,
        violations: equivalence.mismatches.len(),
        first: equivalence.mismatches.first().map(|m| format!("{}: engine {:?}, oracle {:?}", m.w, m.engine, m.oracle)),
        elapsed_ms: u64::try_from(equivalence.elapsed.as_millis()).unwrap_or(u64::MAX),
    });
    let perms = select(n, selection);
    let mut run = |name: &str, check: fn(&Permutation) -> Vec<String>| {
        let start = Instant::now();
        let bad = collect_violations(&perms, check);
        suites.push(SuiteReport {
            name: name.to_string(),
            tested: perms.len(),
            violations: bad.len(),
            first: bad.into_iter().next(),
            elapsed_ms: u64::try_from(start.elapsed().as_millis()).unwrap_or(u64::MAX),
        });
    };
    run("configuration properties", property_violations);
    run("quasi-resolutions", quasi_res_violations);
    if n <= 6 {
        run("lambda-max", lambda_max_violations);
        run("descent maxima", descent_violations);
    }
    VerifyReport { n, suites }
}

pub fn render_verify(report: &VerifyReport) -> String {
    let rows: Vec<Vec<String>> = report
        .suites
        .iter()
        .map(|s| {
            let verdict = if s.violations == 0 { "PASS" } else { "FAIL" };
            vec![
                s.name.clone(),
                s.tested.to_string(),
                s.violations.to_string(),
                format!("{} ms", s.elapsed_ms),
                verdict.to_string(),
            ]
        })
        .collect();
    let mut out = format!("S_{}\n", report.n);
    out.push_str(&render_table(&["suite", "tested", "violations", "time", "result"], &rows));
    for s in report.suites.iter().filter(|s| s.violations > 0) {
        if let Some(first) = &s.first {
            writeln!(out, "first counterexample ({}): {first}", s.name).unwrap();
        }
    }
    out
}
