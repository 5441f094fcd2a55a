//! The three families and everything parameter-dependent about them:
//! recurrence tables, the quadratic whose roots are the extra points, the
//! admissibility windows that keep those roots real, and the mixed
//! recurrences linking `P_n` to its shifted degree-`n + 1` partner.
//!
//! Shifts: Jacobi `(α, β) -> (α + 1, β + 1)`, Meixner-Pollaczek `λ -> λ + 1`,
//! Pseudo-Jacobi `(a, b) -> (a + 1, b)`.

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interlace::TheoremVariant;
use crate::recurrence::{RecurrenceTable, ZeroSet};

/// `|B(E_i)|` must exceed this for the theorem hypotheses to hold.
pub const B_NONZERO_THRESHOLD: f64 = 1e-10;
/// Minimum distance between zeros of `P_n` and `G_{n+1}`.
pub const COMMON_ZERO_THRESHOLD: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    Jacobi,
    #[serde(rename = "mp")]
    MeixnerPollaczek,
    #[serde(rename = "pj")]
    PseudoJacobi,
}

impl FamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Jacobi => "jacobi",
            FamilyKind::MeixnerPollaczek => "mp",
            FamilyKind::PseudoJacobi => "pj",
        }
    }

    /// Sign in front of the `(x - E1)(x - E2) Q_n` term of the family's
    /// mixed recurrence.
    pub fn variant(self) -> TheoremVariant {
        match self {
            FamilyKind::Jacobi => TheoremVariant::Minus,
            FamilyKind::MeixnerPollaczek | FamilyKind::PseudoJacobi => TheoremVariant::Plus,
        }
    }
}

impl std::str::FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "jacobi" => Ok(FamilyKind::Jacobi),
            "mp" | "meixner-pollaczek" | "meixnerpollaczek" => Ok(FamilyKind::MeixnerPollaczek),
            "pj" | "pseudo-jacobi" | "pseudojacobi" => Ok(FamilyKind::PseudoJacobi),
            other => Err(Error::InvalidParameter(format!("unknown family '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum FamilySpec {
    Jacobi {
        alpha: f64,
        beta: f64,
    },
    #[serde(rename = "mp")]
    MeixnerPollaczek {
        lambda: f64,
        phi: f64,
    },
    /// Validity depends on the degree (`a < -n`); see [`FamilySpec::validate_degree`].
    #[serde(rename = "pj")]
    PseudoJacobi {
        a: f64,
        b: f64,
    },
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Jacobi { alpha, beta } => write!(f, "Jacobi(α={alpha}, β={beta})"),
            FamilySpec::MeixnerPollaczek { lambda, phi } => {
                write!(f, "MeixnerPollaczek(λ={lambda}, φ={phi})")
            }
            FamilySpec::PseudoJacobi { a, b } => write!(f, "PseudoJacobi(a={a}, b={b})"),
        }
    }
}

impl FamilySpec {
    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilySpec::Jacobi { .. } => FamilyKind::Jacobi,
            FamilySpec::MeixnerPollaczek { .. } => FamilyKind::MeixnerPollaczek,
            FamilySpec::PseudoJacobi { .. } => FamilyKind::PseudoJacobi,
        }
    }

    pub fn variant(&self) -> TheoremVariant {
        self.kind().variant()
    }

    /// The parameter-shifted partner family.
    pub fn shifted(&self) -> FamilySpec {
        match *self {
            FamilySpec::Jacobi { alpha, beta } => FamilySpec::Jacobi {
                alpha: alpha + 1.0,
                beta: beta + 1.0,
            },
            FamilySpec::MeixnerPollaczek { lambda, phi } => FamilySpec::MeixnerPollaczek {
                lambda: lambda + 1.0,
                phi,
            },
            FamilySpec::PseudoJacobi { a, b } => FamilySpec::PseudoJacobi { a: a + 1.0, b },
        }
    }

    /// Degree-independent parameter checks.
    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::Jacobi { alpha, beta } => check_jacobi(alpha, beta),
            FamilySpec::MeixnerPollaczek { lambda, phi } => check_mp(lambda, phi),
            FamilySpec::PseudoJacobi { a, b } => {
                if a.is_finite() && b.is_finite() {
                    Ok(())
                } else {
                    Err(Error::InvalidParameter(format!("a = {a}, b = {b} must be finite")))
                }
            }
        }
    }

    /// Checks that degrees up to `n` are orthogonal.
    pub fn validate_degree(&self, n: usize) -> Result<()> {
        self.validate()?;
        if let FamilySpec::PseudoJacobi { a, .. } = *self {
            check_pj_range(a, n)?;
        }
        Ok(())
    }

    pub fn recurrence(&self, max_degree: usize) -> Result<RecurrenceTable> {
        match *self {
            FamilySpec::Jacobi { alpha, beta } => jacobi_recurrence(alpha, beta, max_degree),
            FamilySpec::MeixnerPollaczek { lambda, phi } => mp_recurrence(lambda, phi, max_degree),
            FamilySpec::PseudoJacobi { a, b } => pj_recurrence(a, b, max_degree),
        }
    }

    pub fn extra_points(&self, n: usize) -> Result<ExtraPoints> {
        match *self {
            FamilySpec::Jacobi { alpha, beta } => jacobi_extra_points(n, alpha, beta),
            FamilySpec::MeixnerPollaczek { lambda, phi } => mp_extra_points(n, lambda, phi),
            FamilySpec::PseudoJacobi { a, b } => pj_extra_points(n, a, b),
        }
    }
}

fn check_jacobi(alpha: f64, beta: f64) -> Result<()> {
    if alpha > -1.0 && beta > -1.0 && alpha.is_finite() && beta.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "Jacobi parameters need α, β > -1 (got α = {alpha}, β = {beta})"
        )))
    }
}

fn check_mp(lambda: f64, phi: f64) -> Result<()> {
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(Error::InvalidParameter(format!("λ = {lambda} must be positive")));
    }
    if !(phi > 0.0 && phi < PI) {
        return Err(Error::InvalidParameter(format!("φ = {phi} must lie in (0, π)")));
    }
    Ok(())
}

fn check_pj_range(a: f64, max_degree: usize) -> Result<()> {
    let bound = -(max_degree as f64);
    if a < bound {
        Ok(())
    } else {
        Err(Error::OrthogonalityRange {
            degree: max_degree,
            bound,
        })
    }
}

fn check_max_degree(max_degree: usize) -> Result<()> {
    if max_degree == 0 {
        Err(Error::InvalidParameter("max degree must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// Parses an angle given either in plain radians (`2.44`) or as a rational
/// multiple of π (`7/9pi`, `1/4pi`, `pi`, `2pi`, `0.25pi`).
pub fn parse_angle(text: &str) -> Result<f64> {
    let s = text.trim().to_ascii_lowercase().replace('π', "pi");
    let bad = || Error::InvalidParameter(format!("cannot parse angle '{text}'"));
    if let Some(coef) = s.strip_suffix("pi") {
        let coef = coef.trim().trim_end_matches('*').trim();
        let factor = if coef.is_empty() {
            1.0
        } else if let Some((num, den)) = coef.split_once('/') {
            let num: f64 = num.trim().parse().map_err(|_| bad())?;
            let den: f64 = den.trim().parse().map_err(|_| bad())?;
            if den == 0.0 {
                return Err(bad());
            }
            num / den
        } else {
            coef.parse().map_err(|_| bad())?
        };
        Ok(factor * PI)
    } else {
        s.parse().map_err(|_| bad())
    }
}

// ---------------------------------------------------------------------------
// Recurrence tables

/// `c_{n+1}` for monic Jacobi.
fn jacobi_center(alpha: f64, beta: f64, n: usize) -> f64 {
    let s = alpha + beta;
    if n == 0 {
        // (β² - α²) / ((α+β)(α+β+2)) with the α+β factor cancelled.
        (beta - alpha) / (s + 2.0)
    } else {
        let m = 2.0 * n as f64 + s;
        (beta * beta - alpha * alpha) / (m * (m + 2.0))
    }
}

/// `λ_{n+1}` for monic Jacobi, `n >= 1`.
fn jacobi_weight(alpha: f64, beta: f64, n: usize) -> f64 {
    let s = alpha + beta;
    let nf = n as f64;
    if n == 1 {
        // (n + α + β) cancels against (2n + α + β - 1) at n = 1.
        4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + s).powi(2) * (3.0 + s))
    } else {
        let m = 2.0 * nf + s;
        4.0 * nf * (nf + alpha) * (nf + beta) * (nf + s) / (m * m * (m + 1.0) * (m - 1.0))
    }
}

pub fn jacobi_recurrence(alpha: f64, beta: f64, max_degree: usize) -> Result<RecurrenceTable> {
    check_jacobi(alpha, beta)?;
    check_max_degree(max_degree)?;
    let centers: Vec<f64> = (0..max_degree).map(|n| jacobi_center(alpha, beta, n)).collect();
    let weights: Vec<f64> = (1..max_degree).map(|n| jacobi_weight(alpha, beta, n)).collect();
    if centers.iter().chain(&weights).any(|v| !v.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "Jacobi coefficients not finite for α = {alpha}, β = {beta}"
        )));
    }
    RecurrenceTable::new(centers, weights)
}

/// Monic Meixner-Pollaczek: `c_{n+1} = -(n + λ) cot φ`,
/// `λ_{n+1} = n (n + 2λ - 1) / (4 sin² φ)`.
pub fn mp_recurrence(lambda: f64, phi: f64, max_degree: usize) -> Result<RecurrenceTable> {
    check_mp(lambda, phi)?;
    check_max_degree(max_degree)?;
    let cot = phi.cos() / phi.sin();
    let four_sin2 = 4.0 * phi.sin().powi(2);
    let centers = (0..max_degree).map(|n| -(n as f64 + lambda) * cot).collect();
    let weights = (1..max_degree)
        .map(|n| {
            let nf = n as f64;
            nf * (nf + 2.0 * lambda - 1.0) / four_sin2
        })
        .collect();
    RecurrenceTable::new(centers, weights)
}

/// Monic Pseudo-Jacobi, obtained from monic Jacobi with `α = a + ib`,
/// `β = a - ib` evaluated at `ix`:
/// `c_{n+1} = -ab / ((n + a)(n + a + 1))` (`-b/(a + 1)` at `n = 0`),
/// `λ_{n+1} = -n ((n + a)² + b²)(n + 2a) / ((n + a)² (2n + 2a + 1)(2n + 2a - 1))`.
pub fn pj_recurrence(a: f64, b: f64, max_degree: usize) -> Result<RecurrenceTable> {
    check_max_degree(max_degree)?;
    FamilySpec::PseudoJacobi { a, b }.validate()?;
    check_pj_range(a, max_degree)?;
    let centers = (0..max_degree)
        .map(|n| {
            if n == 0 {
                -b / (a + 1.0)
            } else {
                let m = n as f64 + a;
                -a * b / (m * (m + 1.0))
            }
        })
        .collect();
    let weights = (1..max_degree)
        .map(|n| {
            let nf = n as f64;
            let m = nf + a;
            -nf * (m * m + b * b) * (nf + 2.0 * a) / (m * m * (2.0 * m + 1.0) * (2.0 * m - 1.0))
        })
        .collect();
    RecurrenceTable::new(centers, weights)
}

// ---------------------------------------------------------------------------
// Extra points

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExtraPoints {
    pub e1: f64,
    pub e2: f64,
    pub family: FamilySpec,
    pub n: usize,
    /// Discriminant of the family's quadratic (Δ for Jacobi and
    /// Pseudo-Jacobi, D for Meixner-Pollaczek).
    pub discriminant: f64,
}

impl ExtraPoints {
    pub fn sum(&self) -> f64 {
        self.e1 + self.e2
    }

    pub fn product(&self) -> f64 {
        self.e1 * self.e2
    }

    /// `(x - E1)(x - E2)`.
    pub fn quadratic(&self, x: f64) -> f64 {
        (x - self.e1) * (x - self.e2)
    }
}

/// Real roots of `a2 x² + a1 x + a0` given a nonnegative discriminant,
/// sorted ascending. The larger-magnitude root is formed first and the other
/// is recovered from the product.
fn stable_roots(a2: f64, a1: f64, a0: f64, disc: f64) -> (f64, f64) {
    let sq = disc.max(0.0).sqrt();
    let q = -0.5 * (a1 + a1.signum() * sq);
    let (r1, r2) = if a1 == 0.0 {
        let r = sq / (2.0 * a2.abs());
        (-r, r)
    } else {
        (q / a2, a0 / q)
    };
    if r1 <= r2 {
        (r1, r2)
    } else {
        (r2, r1)
    }
}

fn require_degree(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidParameter("extra points need n >= 1".into()))
    } else {
        Ok(())
    }
}

/// Pieces of the Jacobi relation
/// `A P_n^{(α,β)} = B(x) P_{n+1}^{(α+1,β+1)} - T(x) P_n^{(α+1,β+1)}`,
/// `B(x) = x - (α - β)/(2n + α + β + 2)`,
/// `T(x) = B(x)(x - c_{n+1}^{(α+1,β+1)}) - κ λ_{n+1}^{(α+1,β+1)}`, `κ = (2n + α + β + 1)/n`.
struct JacobiPieces {
    b_root: f64,
    shifted_center: f64,
    kappa: f64,
    shifted_weight: f64,
    a_coef: f64,
}

fn jacobi_pieces(n: usize, alpha: f64, beta: f64) -> JacobiPieces {
    let nf = n as f64;
    let s = alpha + beta;
    let shifted_weight = jacobi_weight(alpha + 1.0, beta + 1.0, n);
    JacobiPieces {
        b_root: (alpha - beta) / (2.0 * nf + s + 2.0),
        shifted_center: jacobi_center(alpha + 1.0, beta + 1.0, n),
        kappa: (2.0 * nf + s + 1.0) / nf,
        shifted_weight,
        a_coef: (nf + s + 1.0) * shifted_weight / nf,
    }
}

pub fn jacobi_extra_points(n: usize, alpha: f64, beta: f64) -> Result<ExtraPoints> {
    require_degree(n)?;
    check_jacobi(alpha, beta)?;
    let p = jacobi_pieces(n, alpha, beta);
    let sum = p.b_root + p.shifted_center;
    let product = p.b_root * p.shifted_center - p.kappa * p.shifted_weight;
    // (b_root - c')² + 4κλ' equals sum² - 4·product without the cancellation.
    let disc = (p.b_root - p.shifted_center).powi(2) + 4.0 * p.kappa * p.shifted_weight;
    if !(disc >= 0.0) {
        return Err(Error::DiscriminantNegative(disc));
    }
    let (e1, e2) = stable_roots(1.0, -sum, product, disc);
    Ok(ExtraPoints {
        e1,
        e2,
        family: FamilySpec::Jacobi { alpha, beta },
        n,
        discriminant: disc,
    })
}

/// `(0, θ) ∪ (π - θ, π)` with `θ = ½ arccos((2λ - n - 1)/(2λ + n + 1))`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhiWindow {
    pub theta: f64,
}

impl PhiWindow {
    pub fn contains(&self, phi: f64) -> bool {
        (phi > 0.0 && phi < self.theta) || (phi > PI - self.theta && phi < PI)
    }

    pub fn intervals(&self) -> [(f64, f64); 2] {
        [(0.0, self.theta), (PI - self.theta, PI)]
    }

    /// `count` angles inside the window, split between both intervals, each
    /// interval sampled evenly from `margin` inside its left edge to `margin`
    /// inside its right edge.
    pub fn sample(&self, count: usize, margin: f64) -> Vec<f64> {
        let left = count.div_ceil(2);
        let right = count / 2;
        let mut out = Vec::with_capacity(count);
        for (m, (lo, hi)) in [left, right].into_iter().zip(self.intervals()) {
            let (lo, hi) = (lo + margin, hi - margin);
            if hi <= lo {
                continue;
            }
            for j in 0..m {
                let t = if m == 1 { 0.5 } else { j as f64 / (m - 1) as f64 };
                out.push(lo + t * (hi - lo));
            }
        }
        out.sort_by(f64::total_cmp);
        out
    }
}

pub fn mp_phi_window(n: usize, lambda: f64) -> PhiWindow {
    let a = n as f64 + 1.0;
    let r = (2.0 * lambda - a) / (2.0 * lambda + a);
    PhiWindow {
        theta: 0.5 * r.acos(),
    }
}

/// Discriminant of `T_{n,λ,φ}`, written as
/// `(n + 1 + 2λ)² (1 - cos 2φ)(cos 2φ - (2λ - n - 1)/(2λ + n + 1))`.
pub fn mp_discriminant(n: usize, lambda: f64, phi: f64) -> f64 {
    let a = n as f64 + 1.0;
    let y = (2.0 * phi).cos();
    let r = (2.0 * lambda - a) / (2.0 * lambda + a);
    (a + 2.0 * lambda).powi(2) * (1.0 - y) * (y - r)
}

/// Coefficients `(quadratic, linear, constant)` of `T_{n,λ,φ}`.
pub fn mp_quadratic(n: usize, lambda: f64, phi: f64) -> (f64, f64, f64) {
    let nf = n as f64;
    let y = (2.0 * phi).cos();
    (
        1.0 - y,
        (nf + 1.0) * (2.0 * phi).sin(),
        lambda * lambda - (lambda * lambda + nf * lambda + lambda) * y,
    )
}

pub fn mp_extra_points(n: usize, lambda: f64, phi: f64) -> Result<ExtraPoints> {
    require_degree(n)?;
    check_mp(lambda, phi)?;
    let disc = mp_discriminant(n, lambda, phi);
    if !(disc > 0.0) {
        return Err(Error::ComplexRoots {
            reason: "phi-outside-window".into(),
        });
    }
    let (a2, a1, a0) = mp_quadratic(n, lambda, phi);
    let (e1, e2) = stable_roots(a2, a1, a0, disc);
    Ok(ExtraPoints {
        e1,
        e2,
        family: FamilySpec::MeixnerPollaczek { lambda, phi },
        n,
        discriminant: disc,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AdmissibilityReason {
    Admissible,
    InvalidDegree,
    ABoundViolated,
    ExcludedPoint,
    #[serde(rename = "pj-b-below-threshold")]
    BBelowThreshold,
}

impl AdmissibilityReason {
    pub fn code(self) -> &'static str {
        match self {
            AdmissibilityReason::Admissible => "admissible",
            AdmissibilityReason::InvalidDegree => "invalid-degree",
            AdmissibilityReason::ABoundViolated => "a-bound-violated",
            AdmissibilityReason::ExcludedPoint => "excluded-point",
            AdmissibilityReason::BBelowThreshold => "pj-b-below-threshold",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Admissibility {
    pub admissible: bool,
    pub reason: AdmissibilityReason,
    /// Upper bound on `a`.
    pub a_bound: f64,
    /// Discriminant of `R_{n,a,b}`, when the `a` conditions hold.
    pub discriminant: Option<f64>,
    /// `|b|` threshold from the closed form read with absolute values.
    pub b_threshold: Option<f64>,
    /// Whether `|b| >= b_threshold` agrees with the discriminant test.
    pub closed_form_agrees: Option<bool>,
}

/// `(-3n - 5 - sqrt(n² + 2n + 5)) / 4`.
pub fn pj_a_bound(n: usize) -> f64 {
    let nf = n as f64;
    (-3.0 * nf - 5.0 - (nf * nf + 2.0 * nf + 5.0).sqrt()) / 4.0
}

/// `K(u) = -4u² + (2n - 2)u + (n + 1)` with `u = a + n + 1`.
fn pj_k(n: usize, a: f64) -> f64 {
    let nf = n as f64;
    let u = a + nf + 1.0;
    -4.0 * u * u + (2.0 * nf - 2.0) * u + (nf + 1.0)
}

/// Discriminant of `R_{n,a,b}` as `𝒩 / (u²(u+1)²(2u+1))`.
pub fn pj_discriminant(n: usize, a: f64, b: f64) -> f64 {
    let nf = n as f64;
    let u = a + nf + 1.0;
    let uu1 = u * (u + 1.0);
    let numer = b * b * (nf + 1.0) * pj_k(n, a) - 4.0 * uu1 * uu1 * (2.0 * a + nf + 2.0);
    numer / (uu1 * uu1 * (2.0 * u + 1.0))
}

/// Coefficients `(sum, product)` of the monic `R_{n,a,b} = x² - sum x + product`.
pub fn pj_quadratic(n: usize, a: f64, b: f64) -> (f64, f64) {
    let nf = n as f64;
    let u = a + nf + 1.0;
    let uu1 = u * (u + 1.0);
    (
        b * (nf + 1.0) / uu1,
        (uu1 * (2.0 * a + nf + 2.0) + b * b * (nf + 1.0)) / (uu1 * (2.0 * a + 2.0 * nf + 3.0)),
    )
}

/// `|b|` threshold `sqrt(|4u²(u+1)²(2a+n+2)| / ((n+1)|K(u)|))`.
pub fn pj_b_threshold(n: usize, a: f64) -> f64 {
    let nf = n as f64;
    let u = a + nf + 1.0;
    let numer = 4.0 * (u * (u + 1.0)).powi(2) * (2.0 * a + nf + 2.0);
    let denom = (nf + 1.0) * pj_k(n, a);
    (numer / denom).abs().sqrt()
}

pub fn pj_admissible(n: usize, a: f64, b: f64) -> Admissibility {
    let a_bound = pj_a_bound(n);
    let reject = |reason| Admissibility {
        admissible: false,
        reason,
        a_bound,
        discriminant: None,
        b_threshold: None,
        closed_form_agrees: None,
    };
    if n == 0 || !a.is_finite() || !b.is_finite() {
        return reject(AdmissibilityReason::InvalidDegree);
    }
    if !(a < a_bound) {
        return reject(AdmissibilityReason::ABoundViolated);
    }
    if a == -(n as f64) - 2.0 {
        return reject(AdmissibilityReason::ExcludedPoint);
    }
    let disc = pj_discriminant(n, a, b);
    let threshold = pj_b_threshold(n, a);
    let admissible = disc >= 0.0;
    Admissibility {
        admissible,
        reason: if admissible {
            AdmissibilityReason::Admissible
        } else {
            AdmissibilityReason::BBelowThreshold
        },
        a_bound,
        discriminant: Some(disc),
        b_threshold: Some(threshold),
        closed_form_agrees: Some((b.abs() >= threshold) == admissible),
    }
}

pub fn pj_extra_points(n: usize, a: f64, b: f64) -> Result<ExtraPoints> {
    require_degree(n)?;
    let adm = pj_admissible(n, a, b);
    if !adm.admissible {
        return Err(Error::ComplexRoots {
            reason: adm.reason.code().into(),
        });
    }
    let disc = adm.discriminant.unwrap_or_default();
    let (sum, product) = pj_quadratic(n, a, b);
    let (e1, e2) = stable_roots(1.0, -sum, product, disc);
    Ok(ExtraPoints {
        e1,
        e2,
        family: FamilySpec::PseudoJacobi { a, b },
        n,
        discriminant: disc,
    })
}

// ---------------------------------------------------------------------------
// Mixed recurrences

/// A degree-`n` member `P_n` and its shifted partner `G_{n+1}`, with
/// `Q_n` the degree-`n` member of the shifted family.
#[derive(Debug, Clone)]
pub struct ShiftedPair {
    pub base: FamilySpec,
    pub shifted: FamilySpec,
    pub n: usize,
    pub p_table: RecurrenceTable,
    pub g_table: RecurrenceTable,
}

impl ShiftedPair {
    pub fn new(base: FamilySpec, n: usize) -> Result<Self> {
        require_degree(n)?;
        let shifted = base.shifted();
        base.validate_degree(n)?;
        shifted.validate_degree(n + 1)?;
        Ok(Self {
            base,
            shifted,
            n,
            p_table: base.recurrence(n)?,
            g_table: shifted.recurrence(n + 1)?,
        })
    }

    pub fn p(&self, x: f64) -> f64 {
        self.p_table.eval_monic(self.n, x).unwrap_or(f64::NAN)
    }

    pub fn g(&self, x: f64) -> f64 {
        self.g_table.eval_monic(self.n + 1, x).unwrap_or(f64::NAN)
    }

    pub fn q(&self, x: f64) -> f64 {
        self.g_table.eval_monic(self.n, x).unwrap_or(f64::NAN)
    }

    pub fn p_zeros(&self) -> Result<ZeroSet> {
        self.p_table.zeros(self.n)
    }

    pub fn g_zeros(&self) -> Result<ZeroSet> {
        self.g_table.zeros(self.n + 1)
    }

    pub fn q_zeros(&self) -> Result<ZeroSet> {
        self.g_table.zeros(self.n)
    }
}

/// `A P_n = B(x) G_{n+1} ± (x - E1)(x - E2) Q_n` with constant `A` and
/// `B(x) = b_slope (x - b_root)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MixedRelation {
    pub variant: TheoremVariant,
    pub a_coef: f64,
    pub b_slope: f64,
    pub b_root: f64,
    pub extra: ExtraPoints,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MixedResidual {
    /// `|LHS - RHS|`.
    pub residual: f64,
    /// Sum of the magnitudes of the three terms.
    pub scale: f64,
}

impl MixedResidual {
    pub fn relative(&self) -> f64 {
        if self.scale > 0.0 {
            self.residual / self.scale
        } else {
            self.residual
        }
    }
}

fn pochhammer(x: f64, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, j| acc * (x + j as f64))
}

impl MixedRelation {
    pub fn new(family: FamilySpec, n: usize) -> Result<Self> {
        let extra = family.extra_points(n)?;
        let nf = n as f64;
        let (a_coef, b_slope, b_root) = match family {
            FamilySpec::Jacobi { alpha, beta } => {
                let p = jacobi_pieces(n, alpha, beta);
                (p.a_coef, 1.0, p.b_root)
            }
            FamilySpec::MeixnerPollaczek { lambda, phi } => {
                let one_minus = 1.0 - (2.0 * phi).cos();
                (
                    (2.0 * lambda + nf) * (2.0 * lambda + nf + 1.0) / (2.0 * one_minus),
                    -2.0 * phi.sin().powi(2) / one_minus,
                    lambda * phi.cos() / phi.sin(),
                )
            }
            FamilySpec::PseudoJacobi { a, b } => {
                let u = nf + a + 1.0;
                (
                    2.0 * pochhammer(2.0 * a + nf + 1.0, 2) * (u * u + b * b)
                        / (u * pochhammer(2.0 * a + 2.0 * nf + 1.0, 3)),
                    -1.0,
                    b / u,
                )
            }
        };
        Ok(Self {
            variant: family.variant(),
            a_coef,
            b_slope,
            b_root,
            extra,
        })
    }

    pub fn b_at(&self, x: f64) -> f64 {
        self.b_slope * (x - self.b_root)
    }

    pub fn residual(&self, pair: &ShiftedPair, x: f64) -> MixedResidual {
        let lhs = self.a_coef * pair.p(x);
        let b_term = self.b_at(x) * pair.g(x);
        let t_term = self.extra.quadratic(x) * pair.q(x);
        let rhs = match self.variant {
            TheoremVariant::Minus => b_term - t_term,
            TheoremVariant::Plus => b_term + t_term,
        };
        MixedResidual {
            residual: (lhs - rhs).abs(),
            scale: lhs.abs() + b_term.abs() + t_term.abs(),
        }
    }

    /// Sign of the constant `A`, worked out factor by factor.
    pub fn a_positive(family: FamilySpec, n: usize) -> bool {
        let nf = n as f64;
        let factors: Vec<f64> = match family {
            FamilySpec::Jacobi { alpha, beta } => vec![
                nf + alpha + beta + 1.0,
                jacobi_weight(alpha + 1.0, beta + 1.0, n),
                1.0 / nf,
            ],
            FamilySpec::MeixnerPollaczek { lambda, phi } => vec![
                2.0 * lambda + nf,
                2.0 * lambda + nf + 1.0,
                1.0 - (2.0 * phi).cos(),
            ],
            FamilySpec::PseudoJacobi { a, b } => {
                let u = nf + a + 1.0;
                vec![
                    2.0 * a + nf + 1.0,
                    2.0 * a + nf + 2.0,
                    u * u + b * b,
                    u,
                    2.0 * a + 2.0 * nf + 1.0,
                    2.0 * a + 2.0 * nf + 2.0,
                    2.0 * a + 2.0 * nf + 3.0,
                ]
            }
        };
        if factors.iter().any(|f| *f == 0.0 || !f.is_finite()) {
            return false;
        }
        factors.iter().filter(|f| **f < 0.0).count() % 2 == 0
    }
}

pub fn mixed_residual(family: FamilySpec, n: usize, x: f64) -> Result<MixedResidual> {
    let pair = ShiftedPair::new(family, n)?;
    let relation = MixedRelation::new(family, n)?;
    Ok(relation.residual(&pair, x))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignChecks {
    pub a_positive: bool,
    pub b_nonzero_at_e: bool,
    pub no_common_zero: bool,
}

impl SignChecks {
    pub fn all(&self) -> bool {
        self.a_positive && self.b_nonzero_at_e && self.no_common_zero
    }
}

fn min_distance(a: &[f64], b: &[f64]) -> f64 {
    let mut best = f64::INFINITY;
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        best = best.min((a[i] - b[j]).abs());
        if a[i] < b[j] {
            i += 1;
        } else {
            j += 1;
        }
    }
    best
}

pub fn sign_checks_with(
    family: FamilySpec,
    n: usize,
    relation: &MixedRelation,
    p_zeros: &ZeroSet,
    g_zeros: &ZeroSet,
) -> SignChecks {
    SignChecks {
        a_positive: MixedRelation::a_positive(family, n),
        b_nonzero_at_e: relation.b_at(relation.extra.e1).abs() > B_NONZERO_THRESHOLD
            && relation.b_at(relation.extra.e2).abs() > B_NONZERO_THRESHOLD,
        no_common_zero: min_distance(p_zeros.as_slice(), g_zeros.as_slice())
            > COMMON_ZERO_THRESHOLD,
    }
}

pub fn sign_checks(family: FamilySpec, n: usize) -> Result<SignChecks> {
    let pair = ShiftedPair::new(family, n)?;
    let relation = MixedRelation::new(family, n)?;
    Ok(sign_checks_with(
        family,
        n,
        &relation,
        &pair.p_zeros()?,
        &pair.g_zeros()?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    #[test]
    fn angle_syntax() {
        assert_relative_eq!(parse_angle("7/9pi").unwrap(), 7.0 * PI / 9.0);
        assert_relative_eq!(parse_angle("1/4pi").unwrap(), PI / 4.0);
        assert_relative_eq!(parse_angle("pi").unwrap(), PI);
        assert_relative_eq!(parse_angle("0.5pi").unwrap(), PI / 2.0);
        assert_relative_eq!(parse_angle("2.44").unwrap(), 2.44);
        assert!(parse_angle("1/0pi").is_err());
        assert!(parse_angle("abc").is_err());
    }

    #[test]
    fn jacobi_coefficients() {
        let t = jacobi_recurrence(6.0, 5.0, 3).unwrap();
        assert_relative_eq!(t.center(1), -11.0 / 143.0, max_relative = 1e-14);
        let t = jacobi_recurrence(0.0, 0.0, 3).unwrap();
        assert_relative_eq!(t.weight(2), 1.0 / 3.0, max_relative = 1e-14);
        let t = jacobi_recurrence(1.7, 1.7, 6).unwrap();
        assert!(t.centers().iter().all(|&c| c == 0.0));
    }

    #[test]
    fn jacobi_sum_minus_one_is_finite() {
        // α + β = -1 makes the generic λ_2 formula 0/0.
        let t = jacobi_recurrence(-0.5, -0.5, 4).unwrap();
        // Chebyshev first kind, monic: λ_2 = 1/2, λ_k = 1/4.
        assert_relative_eq!(t.weight(2), 0.5, max_relative = 1e-14);
        assert_relative_eq!(t.weight(3), 0.25, max_relative = 1e-14);
    }

    #[test]
    fn jacobi_rejects_out_of_range() {
        assert!(matches!(
            jacobi_recurrence(-1.0, 0.0, 3),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn mp_coefficients() {
        let t = mp_recurrence(1.3, PI / 2.0, 5).unwrap();
        assert!(t.centers().iter().all(|c| c.abs() < 1e-15));
        let t = mp_recurrence(2.0, PI / 4.0, 3).unwrap();
        assert_relative_eq!(t.zeros(1).unwrap().get(1), -2.0, max_relative = 1e-14);
        assert!(mp_recurrence(0.0, 1.0, 3).is_err());
        assert!(mp_recurrence(1.0, PI, 3).is_err());
    }

    #[test]
    fn pj_coefficients() {
        let (a, b) = (-6.3, 1.7);
        let t = pj_recurrence(a, b, 5).unwrap();
        assert_relative_eq!(t.zeros(1).unwrap().get(1), -b / (a + 1.0), max_relative = 1e-14);
        assert!(matches!(
            pj_recurrence(-4.0, 1.0, 5),
            Err(Error::OrthogonalityRange { .. })
        ));
    }

    #[test]
    fn pj_symmetric_weight_gives_symmetric_zeros() {
        let t = pj_recurrence(-8.5, 0.0, 7).unwrap();
        for n in 1..=7 {
            let z = t.zeros(n).unwrap();
            let zs = z.as_slice();
            for k in 0..n {
                assert_abs_diff_eq!(zs[k], -zs[n - 1 - k], epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn jacobi_extra_points_symmetric_case() {
        let e = jacobi_extra_points(5, 2.5, 2.5).unwrap();
        assert!(e.e1 < e.e2);
        assert!(e.sum().abs() <= 1e-14);
    }

    #[test]
    fn jacobi_extra_point_root_sum() {
        for &(n, alpha, beta) in &[(6, 6.0, 5.0), (7, 5.0, 4.0), (3, -0.5, 2.0), (10, 8.0, -0.9)] {
            let e = jacobi_extra_points(n, alpha, beta).unwrap();
            let nf = n as f64;
            let s = alpha + beta;
            let expected = 2.0 * (nf + 1.0) * (alpha - beta) / ((2.0 * nf + s + 4.0) * (2.0 * nf + s + 2.0));
            assert_relative_eq!(e.sum(), expected, max_relative = 1e-12, epsilon = 1e-15);
        }
    }

    #[test]
    fn mp_window_values() {
        let w = mp_phi_window(6, 0.12);
        assert_abs_diff_eq!(w.theta, 0.5 * (-6.76f64 / 7.24).acos(), epsilon = 1e-15);
        assert_abs_diff_eq!(w.theta, 1.3877, epsilon = 1e-3);
        assert!(w.contains(7.0 * PI / 9.0));
        let w = mp_phi_window(5, 3.0);
        assert_abs_diff_eq!(w.theta, PI / 4.0, epsilon = 1e-15);
        let w = mp_phi_window(7, 2.0);
        assert_abs_diff_eq!(w.theta, 0.5 * (-1.0f64 / 3.0).acos(), epsilon = 1e-15);
        assert!(w.contains(PI / 4.0));
    }

    #[test]
    fn mp_window_sample_stays_inside() {
        let w = mp_phi_window(4, 0.8);
        let pts = w.sample(20, 1e-3);
        assert_eq!(pts.len(), 20);
        assert!(pts.iter().all(|&p| w.contains(p)));
        assert!(pts.iter().any(|&p| (p - (w.theta - 1e-3)).abs() < 1e-12));
    }

    #[test]
    fn mp_closed_form_quarter_pi() {
        let e = mp_extra_points(7, 2.0, PI / 4.0).unwrap();
        assert_abs_diff_eq!(e.e1, -4.0 - 2.0 * 3f64.sqrt(), epsilon = 1e-13);
        assert_abs_diff_eq!(e.e2, -4.0 + 2.0 * 3f64.sqrt(), epsilon = 1e-13);
    }

    #[test]
    fn mp_outside_window_errors() {
        assert!(matches!(
            mp_extra_points(4, 5.0, PI / 2.0),
            Err(Error::ComplexRoots { .. })
        ));
    }

    #[test]
    fn mp_discriminant_matches_literal_form() {
        for &(n, lambda, phi) in &[(6, 0.12, 7.0 * PI / 9.0), (8, 1.5, 0.8 * PI), (3, 4.0, 1.4)] {
            let nf = n as f64;
            let y = (2.0 * phi).cos();
            let literal = (nf + 1.0).powi(2) * (2.0 * phi).sin().powi(2)
                - 4.0 * (1.0 - y) * (lambda * lambda - (lambda * lambda + nf * lambda + lambda) * y);
            assert_relative_eq!(mp_discriminant(n, lambda, phi), literal, max_relative = 1e-12, epsilon = 1e-12);
        }
    }

    #[test]
    fn pj_admissibility_cases() {
        let ok = pj_admissible(6, -9.60, 2.81);
        assert!(ok.admissible);
        assert_eq!(ok.closed_form_agrees, Some(true));

        let excluded = pj_admissible(6, -8.0, 5.0);
        assert!(!excluded.admissible);
        assert_eq!(excluded.reason, AdmissibilityReason::ExcludedPoint);

        let low_b = pj_admissible(6, -9.60, 0.0);
        assert!(!low_b.admissible);
        assert_eq!(low_b.reason, AdmissibilityReason::BBelowThreshold);
        assert!(low_b.discriminant.unwrap() < 0.0);
        assert_abs_diff_eq!(low_b.b_threshold.unwrap(), 1.55, epsilon = 5e-3);

        let high_a = pj_admissible(6, -7.0, 5.0);
        assert_eq!(high_a.reason, AdmissibilityReason::ABoundViolated);
    }

    #[test]
    fn pj_discriminant_forms_agree() {
        for &(n, a, b) in &[(6, -9.6, 2.81), (7, -12.83, -5.85), (3, -7.1, 0.4)] {
            let (s, p) = pj_quadratic(n, a, b);
            assert_relative_eq!(pj_discriminant(n, a, b), s * s - 4.0 * p, max_relative = 1e-10);
        }
    }

    #[test]
    fn pj_symmetric_extra_points() {
        let n = 4;
        let a = -9.0;
        let b = 0.0;
        // b = 0 is admissible only when the constant term is negative.
        let adm = pj_admissible(n, a, b);
        if adm.admissible {
            let e = pj_extra_points(n, a, b).unwrap();
            assert_abs_diff_eq!(e.e1, -e.e2, epsilon = 1e-14);
        } else {
            assert!(matches!(pj_extra_points(n, a, b), Err(Error::ComplexRoots { .. })));
        }
    }

    #[test]
    fn mixed_at_extra_point_drops_quadratic() {
        let fam = FamilySpec::PseudoJacobi { a: -9.60, b: 2.81 };
        let pair = ShiftedPair::new(fam, 6).unwrap();
        let rel = MixedRelation::new(fam, 6).unwrap();
        let x = rel.extra.e1;
        let lhs = rel.a_coef * pair.p(x);
        let rhs = rel.b_at(x) * pair.g(x);
        assert_relative_eq!(lhs, rhs, max_relative = 1e-9);
    }

    #[test]
    fn sign_checks_on_reference_points() {
        let s = sign_checks(FamilySpec::Jacobi { alpha: 6.0, beta: 5.0 }, 6).unwrap();
        assert!(s.all());
        let s = sign_checks(FamilySpec::PseudoJacobi { a: -9.60, b: 2.81 }, 6).unwrap();
        assert!(s.a_positive);
        let s = sign_checks(FamilySpec::MeixnerPollaczek { lambda: 0.3, phi: 2.9 }, 5).unwrap();
        assert!(s.a_positive);
    }

    #[test]
    fn shifted_pair_requires_orthogonal_partner() {
        // a = -8.5 is fine for n = 6 but a + 1 = -7.5 is not below -(n + 1) = -7 ... it is;
        // a = -7.6 gives a + 1 = -6.6 > -7.
        assert!(ShiftedPair::new(FamilySpec::PseudoJacobi { a: -8.5, b: 3.0 }, 6).is_ok());
        assert!(matches!(
            ShiftedPair::new(FamilySpec::PseudoJacobi { a: -7.6, b: 3.0 }, 6),
            Err(Error::OrthogonalityRange { .. })
        ));
    }

    #[test]
    fn family_serde_tags() {
        let f = FamilySpec::MeixnerPollaczek { lambda: 2.0, phi: 1.0 };
        let v = serde_json::to_value(f).unwrap();
        assert_eq!(v["family"], "mp");
        let back: FamilySpec = serde_json::from_value(v).unwrap();
        assert_eq!(back, f);
    }
}
