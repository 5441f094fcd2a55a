//! Parameter sweeps: the full pipeline per draw, theorem sweeps, and the
//! counterexample search for the two-gap conjectures.
//!
//! # Sweep files
//!
//! Flat `key = value` lines, `#` starts a comment, repeated keys append grid
//! points. Numeric values may also be `lin:lo:hi:count` or
//! `geom:lo:hi:count`; angles accept the `p/qpi` syntax.
//!
//! | key | meaning |
//! |-----|---------|
//! | `family` | `jacobi`, `mp` or `pj` |
//! | `n`, `n_range` | degrees, `n_range = lo..hi` inclusive |
//! | `alpha`, `beta` | Jacobi grids |
//! | `lambda`, `phi` | Meixner-Pollaczek grids |
//! | `phi_window`, `phi_margin` | sample `count` angles inside each φ-window |
//! | `a`, `b` | Pseudo-Jacobi grids |
//! | `a_offset` | `a = -n - 2 - δ` |
//! | `b_margin` | `b = ±(threshold(n, a) + δ)` |
//! | `seed`, `random` | add `random` seeded draws per degree |

use std::collections::BTreeMap;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{
    mp_phi_window, parse_angle, pj_b_threshold, sign_checks_with, ExtraPoints, FamilyKind,
    FamilySpec, MixedRelation, ShiftedPair, SignChecks,
};
use crate::interlace::{classify, verify_chain, Chain, InterlaceReport, TheoremVariant, Verdict};
use crate::recurrence::ZeroSet;

pub use crate::tables::reproduce_table;

/// Largest degree a sweep accepts.
pub const MAX_SWEEP_DEGREE: usize = 30;
const DEFAULT_PHI_MARGIN: f64 = 1e-3;

/// Everything computed for one `(family, n)` draw.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairAnalysis {
    pub family: FamilySpec,
    pub n: usize,
    pub extra: ExtraPoints,
    pub p_zeros: ZeroSet,
    pub g_zeros: ZeroSet,
    pub signs: SignChecks,
    pub report: InterlaceReport,
}

impl PairAnalysis {
    /// Placements `(Gap k, Gap k')` with `k != k'`, where the conjectures
    /// claim one of the two cross chains.
    pub fn conjecture_applies(&self) -> bool {
        self.report.is_two_gap()
    }

    pub fn cross_chains(&self) -> (bool, bool) {
        let p = self.p_zeros.as_slice();
        let g = self.g_zeros.as_slice();
        let (e1, e2) = (self.extra.e1, self.extra.e2);
        (
            Chain::CrossI.holds(p, g, e1, e2),
            Chain::CrossII.holds(p, g, e1, e2),
        )
    }

    pub fn is_conjecture_counterexample(&self) -> bool {
        if !self.conjecture_applies() {
            return false;
        }
        let (i, ii) = self.cross_chains();
        !(i || ii)
    }

    /// A theorem defect: a verdict the theorems rule out, a chain that does
    /// not verify, or a broken hypothesis.
    pub fn defect(&self) -> Option<String> {
        let r = &self.report;
        if !self.signs.all() {
            return Some(format!("hypothesis check failed: {:?}", self.signs));
        }
        if !r.parity_consistent {
            return Some("gap parity disagrees with sign H_k".into());
        }
        match &r.verdict {
            Verdict::ImpossibleConfig => Some(format!(
                "excluded placement ({}, {})",
                r.placement_e1, r.placement_e2
            )),
            Verdict::Inconclusive { detail } => Some(format!("inconclusive: {detail:?}")),
            _ if !r.checked
                || !verify_chain(r, &self.p_zeros, &self.g_zeros, self.extra.e1, self.extra.e2) =>
            {
                Some(format!("{} did not verify", r.verdict))
            }
            _ => None,
        }
    }
}

/// Runs recurrences, zeros, extra points, hypothesis checks and the verdict
/// engine for one pair `P_n`, `G_{n+1}`.
pub fn analyze_pair(family: FamilySpec, n: usize) -> Result<PairAnalysis> {
    let pair = ShiftedPair::new(family, n)?;
    let relation = MixedRelation::new(family, n)?;
    let extra = relation.extra;
    let p_zeros = pair.p_zeros()?;
    let g_zeros = pair.g_zeros()?;
    let signs = sign_checks_with(family, n, &relation, &p_zeros, &g_zeros);
    let report = classify(family.variant(), &p_zeros, &g_zeros, extra.e1, extra.e2)?;
    Ok(PairAnalysis {
        family,
        n,
        extra,
        p_zeros,
        g_zeros,
        signs,
        report,
    })
}

// ---------------------------------------------------------------------------
// Sweep specifications

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum PhiGrid {
    Values { values: Vec<f64> },
    /// `count` angles inside the window of each `(n, λ)`, `margin` in from
    /// every window edge.
    Window { count: usize, margin: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum AGrid {
    Values { values: Vec<f64> },
    /// `a = -n - 2 - δ`.
    Offsets { deltas: Vec<f64> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum BGrid {
    Values { values: Vec<f64> },
    /// `b = -(t + δ)` and `b = t + δ` with `t` the `|b|` threshold.
    Margins { deltas: Vec<f64> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum ParamGrid {
    Jacobi {
        alpha: Vec<f64>,
        beta: Vec<f64>,
    },
    #[serde(rename = "mp")]
    MeixnerPollaczek { lambda: Vec<f64>, phi: PhiGrid },
    #[serde(rename = "pj")]
    PseudoJacobi { a: AGrid, b: BGrid },
}

impl ParamGrid {
    pub fn kind(&self) -> FamilyKind {
        match self {
            ParamGrid::Jacobi { .. } => FamilyKind::Jacobi,
            ParamGrid::MeixnerPollaczek { .. } => FamilyKind::MeixnerPollaczek,
            ParamGrid::PseudoJacobi { .. } => FamilyKind::PseudoJacobi,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub n_values: Vec<usize>,
    pub params: ParamGrid,
    pub seed: u64,
    /// Extra seeded draws per degree, uniform over the grid's bounding box.
    pub random: usize,
}

/// `count` points from `lo` to `hi` evenly spaced in log scale.
pub fn geometric(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    if count == 1 {
        return vec![lo];
    }
    let (l, h) = (lo.ln(), hi.ln());
    (0..count)
        .map(|i| (l + (h - l) * i as f64 / (count - 1) as f64).exp())
        .collect()
}

pub fn linear(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    if count == 1 {
        return vec![lo];
    }
    (0..count)
        .map(|i| lo + (hi - lo) * i as f64 / (count - 1) as f64)
        .collect()
}

impl SweepSpec {
    pub fn kind(&self) -> FamilyKind {
        self.params.kind()
    }

    /// 20 λ values and 20 window angles per `n = 1..=10`.
    pub fn default_conjecture1() -> Self {
        Self {
            n_values: (1..=10).collect(),
            params: ParamGrid::MeixnerPollaczek {
                lambda: geometric(0.05, 20.0, 20),
                phi: PhiGrid::Window {
                    count: 20,
                    margin: DEFAULT_PHI_MARGIN,
                },
            },
            seed: 0,
            random: 0,
        }
    }

    /// 20 offsets of `a` below `-n - 2` and 10 margins of `|b|` above its
    /// threshold, both signs of `b`, per `n = 1..=10`.
    pub fn default_conjecture2() -> Self {
        Self {
            n_values: (1..=10).collect(),
            params: ParamGrid::PseudoJacobi {
                a: AGrid::Offsets {
                    deltas: geometric(1e-3, 30.0, 20),
                },
                b: BGrid::Margins {
                    deltas: geometric(1e-3, 20.0, 10),
                },
            },
            seed: 0,
            random: 0,
        }
    }

    pub fn default_theorem_jacobi() -> Self {
        let grid = vec![-0.5, 0.0, 1.0, 2.0, 5.0, 8.0];
        Self {
            n_values: (2..=10).collect(),
            params: ParamGrid::Jacobi {
                alpha: grid.clone(),
                beta: grid,
            },
            seed: 0,
            random: 0,
        }
    }

    pub fn default_theorem_mp() -> Self {
        Self {
            n_values: (2..=8).collect(),
            params: ParamGrid::MeixnerPollaczek {
                lambda: vec![0.12, 0.5, 1.5, 2.0, 6.0],
                phi: PhiGrid::Window {
                    count: 5,
                    margin: DEFAULT_PHI_MARGIN,
                },
            },
            seed: 0,
            random: 0,
        }
    }

    pub fn default_theorem_pj() -> Self {
        Self {
            n_values: (2..=8).collect(),
            params: ParamGrid::PseudoJacobi {
                a: AGrid::Offsets {
                    deltas: vec![0.5, 1.0, 2.0, 5.0],
                },
                b: BGrid::Margins {
                    deltas: vec![0.01, 0.5, 2.0, 5.0],
                },
            },
            seed: 0,
            random: 0,
        }
    }

    pub fn default_theorem(kind: FamilyKind) -> Self {
        match kind {
            FamilyKind::Jacobi => Self::default_theorem_jacobi(),
            FamilyKind::MeixnerPollaczek => Self::default_theorem_mp(),
            FamilyKind::PseudoJacobi => Self::default_theorem_pj(),
        }
    }

    /// Enumerates the grid in order: degrees outermost, then parameters in
    /// declaration order, then the seeded random draws for that degree.
    /// Returns kept draws and skipped draws with their reasons.
    pub fn draws(&self) -> (Vec<(usize, FamilySpec)>, Vec<SkippedDraw>) {
        let mut kept = Vec::new();
        let mut skipped = Vec::new();
        for &n in &self.n_values {
            let mut candidates = self.grid_points(n);
            candidates.extend(self.random_points(n));
            for family in candidates {
                match draw_validity(family, n) {
                    Ok(()) => kept.push((n, family)),
                    Err(reason) => skipped.push(SkippedDraw { n, family, reason }),
                }
            }
        }
        (kept, skipped)
    }

    fn grid_points(&self, n: usize) -> Vec<FamilySpec> {
        let mut out = Vec::new();
        match &self.params {
            ParamGrid::Jacobi { alpha, beta } => {
                for &alpha in alpha {
                    for &beta in beta {
                        out.push(FamilySpec::Jacobi { alpha, beta });
                    }
                }
            }
            ParamGrid::MeixnerPollaczek { lambda, phi } => {
                for &lambda in lambda {
                    let angles = match phi {
                        PhiGrid::Values { values } => values.clone(),
                        PhiGrid::Window { count, margin } => {
                            mp_phi_window(n, lambda).sample(*count, *margin)
                        }
                    };
                    for phi in angles {
                        out.push(FamilySpec::MeixnerPollaczek { lambda, phi });
                    }
                }
            }
            ParamGrid::PseudoJacobi { a, b } => {
                let a_values: Vec<f64> = match a {
                    AGrid::Values { values } => values.clone(),
                    AGrid::Offsets { deltas } => {
                        deltas.iter().map(|d| -(n as f64) - 2.0 - d).collect()
                    }
                };
                for a in a_values {
                    let b_values: Vec<f64> = match b {
                        BGrid::Values { values } => values.clone(),
                        BGrid::Margins { deltas } => {
                            let t = pj_b_threshold(n, a);
                            deltas
                                .iter()
                                .flat_map(|d| [-(t + d), t + d])
                                .collect()
                        }
                    };
                    for b in b_values {
                        out.push(FamilySpec::PseudoJacobi { a, b });
                    }
                }
            }
        }
        out
    }

    fn random_points(&self, n: usize) -> Vec<FamilySpec> {
        if self.random == 0 {
            return Vec::new();
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed ^ (n as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let span = |v: &[f64]| -> (f64, f64) {
            let lo = v.iter().copied().fold(f64::INFINITY, f64::min);
            let hi = v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            (lo, hi)
        };
        let draw = |rng: &mut ChaCha8Rng, (lo, hi): (f64, f64)| {
            if hi > lo {
                rng.gen_range(lo..hi)
            } else {
                lo
            }
        };
        let mut out = Vec::with_capacity(self.random);
        for _ in 0..self.random {
            let family = match &self.params {
                ParamGrid::Jacobi { alpha, beta } => FamilySpec::Jacobi {
                    alpha: draw(&mut rng, span(alpha)),
                    beta: draw(&mut rng, span(beta)),
                },
                ParamGrid::MeixnerPollaczek { lambda, phi } => {
                    let lambda = draw(&mut rng, span(lambda));
                    let phi = match phi {
                        PhiGrid::Values { values } => draw(&mut rng, span(values)),
                        PhiGrid::Window { margin, .. } => {
                            let theta = mp_phi_window(n, lambda).theta;
                            let t = draw(&mut rng, (*margin, theta - margin));
                            if rng.gen_bool(0.5) {
                                t
                            } else {
                                std::f64::consts::PI - t
                            }
                        }
                    };
                    FamilySpec::MeixnerPollaczek { lambda, phi }
                }
                ParamGrid::PseudoJacobi { a, b } => {
                    let a = match a {
                        AGrid::Values { values } => draw(&mut rng, span(values)),
                        AGrid::Offsets { deltas } => -(n as f64) - 2.0 - draw(&mut rng, span(deltas)),
                    };
                    let b = match b {
                        BGrid::Values { values } => draw(&mut rng, span(values)),
                        BGrid::Margins { deltas } => {
                            let mag = pj_b_threshold(n, a) + draw(&mut rng, span(deltas));
                            if rng.gen_bool(0.5) {
                                mag
                            } else {
                                -mag
                            }
                        }
                    };
                    FamilySpec::PseudoJacobi { a, b }
                }
            };
            out.push(family);
        }
        out
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            Error::InvalidParameter(format!("cannot read {}: {e}", path.display()))
        })?;
        text.parse()
    }
}

/// Validity predicate for a sweep draw: family parameters, both degrees
/// orthogonal, extra points real.
pub fn draw_validity(family: FamilySpec, n: usize) -> std::result::Result<(), String> {
    if n == 0 || n > MAX_SWEEP_DEGREE {
        return Err(format!("degree {n} outside 1..={MAX_SWEEP_DEGREE}"));
    }
    family.validate_degree(n).map_err(|e| e.to_string())?;
    family
        .shifted()
        .validate_degree(n + 1)
        .map_err(|e| format!("shifted family: {e}"))?;
    family.extra_points(n).map(|_| ()).map_err(|e| match e {
        Error::ComplexRoots { reason } => reason,
        other => other.to_string(),
    })
}

fn parse_values(value: &str, angle: bool) -> Result<Vec<f64>> {
    let bad = || Error::InvalidParameter(format!("cannot parse value '{value}'"));
    let parts: Vec<&str> = value.split(':').map(str::trim).collect();
    if parts.len() == 4 && (parts[0] == "lin" || parts[0] == "geom") {
        let lo: f64 = if angle { parse_angle(parts[1])? } else { parts[1].parse().map_err(|_| bad())? };
        let hi: f64 = if angle { parse_angle(parts[2])? } else { parts[2].parse().map_err(|_| bad())? };
        let count: usize = parts[3].parse().map_err(|_| bad())?;
        if count == 0 {
            return Err(bad());
        }
        return Ok(if parts[0] == "lin" {
            linear(lo, hi, count)
        } else {
            if !(lo > 0.0 && hi > 0.0) {
                return Err(Error::InvalidParameter(format!(
                    "geometric range needs positive bounds: '{value}'"
                )));
            }
            geometric(lo, hi, count)
        });
    }
    let v = if angle {
        parse_angle(value)?
    } else {
        value.parse().map_err(|_| bad())?
    };
    Ok(vec![v])
}

impl std::str::FromStr for SweepSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut family: Option<FamilyKind> = None;
        let mut n_values = Vec::new();
        let mut seed = 0u64;
        let mut random = 0usize;
        let mut lists: BTreeMap<&str, Vec<f64>> = BTreeMap::new();
        let mut phi_window: Option<usize> = None;
        let mut phi_margin = DEFAULT_PHI_MARGIN;

        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| Error::InvalidParameter(format!("line {}: {msg}", lineno + 1));
            let (key, value) = line.split_once('=').ok_or_else(|| err("expected key = value"))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "family" => family = Some(value.parse()?),
                "n" => n_values.push(value.parse().map_err(|_| err("bad degree"))?),
                "n_range" => {
                    let (lo, hi) = value.split_once("..").ok_or_else(|| err("expected lo..hi"))?;
                    let lo: usize = lo.trim().parse().map_err(|_| err("bad range"))?;
                    let hi: usize = hi.trim().trim_start_matches('=').parse().map_err(|_| err("bad range"))?;
                    n_values.extend(lo..=hi);
                }
                "seed" => seed = value.parse().map_err(|_| err("bad seed"))?,
                "random" => random = value.parse().map_err(|_| err("bad count"))?,
                "phi_window" => phi_window = Some(value.parse().map_err(|_| err("bad count"))?),
                "phi_margin" => phi_margin = value.parse().map_err(|_| err("bad margin"))?,
                "alpha" | "beta" | "lambda" | "a" | "a_offset" | "b" | "b_margin" => {
                    let key: &'static str = match key {
                        "alpha" => "alpha",
                        "beta" => "beta",
                        "lambda" => "lambda",
                        "a" => "a",
                        "a_offset" => "a_offset",
                        "b" => "b",
                        _ => "b_margin",
                    };
                    lists.entry(key).or_default().extend(parse_values(value, false)?);
                }
                "phi" => lists.entry("phi").or_default().extend(parse_values(value, true)?),
                other => return Err(err(&format!("unknown key '{other}'"))),
            }
        }

        let family = family.ok_or_else(|| Error::InvalidParameter("missing 'family'".into()))?;
        let mut take = |k: &str| lists.remove(k).unwrap_or_default();
        let params = match family {
            FamilyKind::Jacobi => ParamGrid::Jacobi {
                alpha: take("alpha"),
                beta: take("beta"),
            },
            FamilyKind::MeixnerPollaczek => ParamGrid::MeixnerPollaczek {
                lambda: take("lambda"),
                phi: match phi_window {
                    Some(count) => PhiGrid::Window {
                        count,
                        margin: phi_margin,
                    },
                    None => PhiGrid::Values { values: take("phi") },
                },
            },
            FamilyKind::PseudoJacobi => {
                let offsets = take("a_offset");
                let margins = take("b_margin");
                ParamGrid::PseudoJacobi {
                    a: if offsets.is_empty() {
                        AGrid::Values { values: take("a") }
                    } else {
                        AGrid::Offsets { deltas: offsets }
                    },
                    b: if margins.is_empty() {
                        BGrid::Values { values: take("b") }
                    } else {
                        BGrid::Margins { deltas: margins }
                    },
                }
            }
        };
        if let Some(k) = lists.keys().next() {
            return Err(Error::InvalidParameter(format!(
                "key '{k}' does not apply to family {}",
                family.name()
            )));
        }
        Ok(SweepSpec {
            n_values,
            params,
            seed,
            random,
        })
    }
}

// ---------------------------------------------------------------------------
// Results

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanKind {
    Conjecture1,
    Conjecture2,
    Theorem,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SkippedDraw {
    pub n: usize,
    pub family: FamilySpec,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Defect {
    /// Index into `records`.
    pub record: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanResult {
    pub kind: ScanKind,
    pub records: Vec<PairAnalysis>,
    /// Two-gap draws where neither cross chain holds.
    pub counterexamples: Vec<PairAnalysis>,
    /// Theorem sweeps only.
    pub defects: Vec<Defect>,
    /// Draws outside the validity region.
    pub skipped: Vec<SkippedDraw>,
    /// Draws that passed the filter but hit a numerical or degenerate
    /// configuration on the way.
    pub failed: Vec<SkippedDraw>,
    /// Record count per verdict name.
    pub summary: BTreeMap<String, usize>,
    /// Records to which the two-gap conjecture applies.
    pub conjecture_cases: usize,
}

impl ScanResult {
    fn empty(kind: ScanKind) -> Self {
        Self {
            kind,
            records: Vec::new(),
            counterexamples: Vec::new(),
            defects: Vec::new(),
            skipped: Vec::new(),
            failed: Vec::new(),
            summary: BTreeMap::new(),
            conjecture_cases: 0,
        }
    }

    /// Appends `other`, re-indexing its defects.
    pub fn merge(&mut self, other: ScanResult) {
        let offset = self.records.len();
        self.records.extend(other.records);
        self.counterexamples.extend(other.counterexamples);
        self.defects.extend(other.defects.into_iter().map(|d| Defect {
            record: d.record + offset,
            reason: d.reason,
        }));
        self.skipped.extend(other.skipped);
        self.failed.extend(other.failed);
        for (k, v) in other.summary {
            *self.summary.entry(k).or_default() += v;
        }
        self.conjecture_cases += other.conjecture_cases;
    }

    pub fn verdict_count(&self, verdict: &str) -> usize {
        self.summary.get(verdict).copied().unwrap_or(0)
    }
}

fn run_sweep(spec: &SweepSpec, kind: ScanKind) -> ScanResult {
    let (draws, skipped) = spec.draws();
    let outcomes: Vec<std::result::Result<PairAnalysis, SkippedDraw>> = draws
        .par_iter()
        .map(|&(n, family)| {
            analyze_pair(family, n).map_err(|e| SkippedDraw {
                n,
                family,
                reason: e.to_string(),
            })
        })
        .collect();

    let mut result = ScanResult::empty(kind);
    result.skipped = skipped;
    for outcome in outcomes {
        match outcome {
            Ok(rec) => {
                *result
                    .summary
                    .entry(rec.report.verdict.name().to_string())
                    .or_default() += 1;
                if rec.conjecture_applies() {
                    result.conjecture_cases += 1;
                }
                if kind != ScanKind::Theorem && rec.is_conjecture_counterexample() {
                    result.counterexamples.push(rec.clone());
                }
                if kind == ScanKind::Theorem {
                    if let Some(reason) = rec.defect() {
                        result.defects.push(Defect {
                            record: result.records.len(),
                            reason,
                        });
                    }
                }
                result.records.push(rec);
            }
            Err(skip) => result.failed.push(skip),
        }
    }
    result
}

fn require_kind(spec: &SweepSpec, kind: FamilyKind) -> Result<()> {
    if spec.kind() == kind {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "sweep is over {}, expected {}",
            spec.kind().name(),
            kind.name()
        )))
    }
}

/// Counterexample search for the Meixner-Pollaczek two-gap conjecture.
pub fn scan_conjecture1(spec: &SweepSpec) -> Result<ScanResult> {
    require_kind(spec, FamilyKind::MeixnerPollaczek)?;
    Ok(run_sweep(spec, ScanKind::Conjecture1))
}

/// Counterexample search for the Pseudo-Jacobi two-gap conjecture.
pub fn scan_conjecture2(spec: &SweepSpec) -> Result<ScanResult> {
    require_kind(spec, FamilyKind::PseudoJacobi)?;
    Ok(run_sweep(spec, ScanKind::Conjecture2))
}

/// Runs the pipeline on every draw and records any defect.
pub fn theorem_sweep(spec: &SweepSpec, variant: TheoremVariant) -> Result<ScanResult> {
    if spec.kind().variant() != variant {
        return Err(Error::InvalidParameter(format!(
            "{} satisfies the {:?} relation, not {variant:?}",
            spec.kind().name(),
            spec.kind().variant()
        )));
    }
    Ok(run_sweep(spec, ScanKind::Theorem))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn parse_sweep_file() {
        let text = "\
# two degrees, explicit angles
family = mp
n = 6
n_range = 7..8
lambda = 0.12
lambda = geom:0.5:2:3
phi = 7/9pi
seed = 3
";
        let spec: SweepSpec = text.parse().unwrap();
        assert_eq!(spec.n_values, vec![6, 7, 8]);
        assert_eq!(spec.seed, 3);
        match &spec.params {
            ParamGrid::MeixnerPollaczek { lambda, phi } => {
                assert_eq!(lambda.len(), 4);
                assert!((lambda[2] - 1.0).abs() < 1e-12);
                assert_eq!(phi, &PhiGrid::Values { values: vec![7.0 * PI / 9.0] });
            }
            other => panic!("unexpected grid {other:?}"),
        }
    }

    #[test]
    fn parse_errors() {
        assert!("n = 3".parse::<SweepSpec>().is_err());
        assert!("family = mp\nalpha = 1".parse::<SweepSpec>().is_err());
        assert!("family = jacobi\nwat = 1".parse::<SweepSpec>().is_err());
        assert!("family = jacobi\nn 3".parse::<SweepSpec>().is_err());
    }

    #[test]
    fn empty_grid_gives_empty_result() {
        let spec: SweepSpec = "family = mp".parse().unwrap();
        let r = scan_conjecture1(&spec).unwrap();
        assert!(r.records.is_empty());
        assert!(r.counterexamples.is_empty());
        assert!(r.summary.is_empty());
    }

    #[test]
    fn invalid_points_are_skipped() {
        let spec: SweepSpec = "family = jacobi\nn = 3\nalpha = -2\nalpha = 1\nbeta = 0".parse().unwrap();
        let (kept, skipped) = spec.draws();
        assert_eq!(kept.len(), 1);
        assert_eq!(skipped.len(), 1);
        let spec: SweepSpec = "family = mp\nn = 4\nlambda = 5\nphi = 1/2pi".parse().unwrap();
        let (kept, skipped) = spec.draws();
        assert!(kept.is_empty());
        assert_eq!(skipped[0].reason, "phi-outside-window");
    }

    #[test]
    fn wrong_family_is_rejected() {
        assert!(scan_conjecture2(&SweepSpec::default_conjecture1()).is_err());
        assert!(theorem_sweep(&SweepSpec::default_theorem_jacobi(), TheoremVariant::Plus).is_err());
    }

    #[test]
    fn single_point_conjecture_records() {
        let spec: SweepSpec = "family = mp\nn = 6\nlambda = 0.12\nphi = 7/9pi".parse().unwrap();
        let r = scan_conjecture1(&spec).unwrap();
        assert_eq!(r.records.len(), 1);
        assert_eq!(r.records[0].report.verdict, Verdict::CrossAugmentedI);

        let spec: SweepSpec = "family = pj\nn = 7\na = -9.23\nb = -0.22".parse().unwrap();
        let r = scan_conjecture2(&spec).unwrap();
        assert_eq!(r.records.len(), 1);
        assert_eq!(r.records[0].report.verdict, Verdict::CrossAugmentedII);
        let w = r.records[0].report.precondition_ii.unwrap();
        assert_eq!(w.statement("E_2"), "y_2<z_1<E_2<z_2<y_3");
    }

    #[test]
    fn random_draws_are_seeded() {
        let mut spec = SweepSpec::default_theorem_pj();
        spec.n_values = vec![3];
        spec.random = 5;
        spec.seed = 11;
        let a = spec.draws().0;
        let b = spec.draws().0;
        assert_eq!(a, b);
        spec.seed = 12;
        assert_ne!(a, spec.draws().0);
    }
}
