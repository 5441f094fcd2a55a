//! Interlacing predicates and the verdict engine.
//!
//! `X ≺ Y` means: when `X` has one more zero than `Y`, every zero of `Y`
//! sits strictly between consecutive zeros of `X`; when the degrees agree,
//! the zeros alternate starting with `X`. Every strict inequality needs a
//! gap larger than [`STRICT_SEPARATION`].
//!
//! [`classify`] places `E1`, `E2` on the zeros `y_1 < ... < y_{n+1}` of
//! `G_{n+1}`, predicts the arrangement the completed-interlacing theorems
//! force for that placement, and then checks the prediction against the
//! actual zeros of `P_n`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::recurrence::ZeroSet;

pub const STRICT_SEPARATION: f64 = 1e-12;
/// A point this close to a grid zero is a coincidence, not a placement.
pub const COINCIDENCE_TOLERANCE: f64 = 1e-10;

/// Sign in front of `(x - E1)(x - E2) Q_n` in `A P_n = B G_{n+1} ∓ (x - E1)(x - E2) Q_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoremVariant {
    Minus,
    Plus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "k")]
pub enum Placement {
    LeftOfAll,
    /// Strictly between the `k`-th and `(k+1)`-th grid zeros.
    Gap(usize),
    RightOfAll,
    CoincidesWithZero(usize),
}

impl fmt::Display for Placement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Placement::LeftOfAll => write!(f, "left"),
            Placement::Gap(k) => write!(f, "gap {k}"),
            Placement::RightOfAll => write!(f, "right"),
            Placement::CoincidesWithZero(k) => write!(f, "on zero {k}"),
        }
    }
}

fn separated(a: f64, b: f64) -> bool {
    b - a > STRICT_SEPARATION
}

fn chain_is_strict(seq: impl Iterator<Item = f64>) -> bool {
    let mut prev: Option<f64> = None;
    for x in seq {
        if let Some(p) = prev {
            if !separated(p, x) {
                return false;
            }
        }
        prev = Some(x);
    }
    true
}

fn strict_interlace_slices(lower: &[f64], upper: &[f64]) -> bool {
    debug_assert_eq!(lower.len() + 1, upper.len());
    let merged = upper
        .iter()
        .zip(lower.iter().map(Some).chain(std::iter::once(None)))
        .flat_map(|(u, l)| std::iter::once(*u).chain(l.copied()));
    chain_is_strict(merged)
}

fn alternate_slices(first: &[f64], second: &[f64]) -> bool {
    debug_assert_eq!(first.len(), second.len());
    let merged = first.iter().zip(second).flat_map(|(x, y)| [*x, *y]);
    chain_is_strict(merged)
}

/// `upper[1] < lower[1] < upper[2] < ... < lower[n] < upper[n+1]`.
pub fn strict_interlace(lower: &ZeroSet, upper: &ZeroSet) -> Result<bool> {
    if lower.degree() + 1 != upper.degree() {
        return Err(Error::Arity(format!(
            "interlacing needs degrees n and n + 1, got {} and {}",
            lower.degree(),
            upper.degree()
        )));
    }
    Ok(strict_interlace_slices(lower.as_slice(), upper.as_slice()))
}

/// `x_1 < y_1 < x_2 < ... < x_n < y_n`.
pub fn alternate(first: &ZeroSet, second: &ZeroSet) -> Result<bool> {
    if first.degree() != second.degree() {
        return Err(Error::Arity(format!(
            "alternation needs equal degrees, got {} and {}",
            first.degree(),
            second.degree()
        )));
    }
    Ok(alternate_slices(first.as_slice(), second.as_slice()))
}

/// Position of `e` relative to a nonempty sorted grid.
pub fn place_point(e: f64, grid: &ZeroSet) -> Placement {
    let ys = grid.as_slice();
    if let Some((k, _)) = ys
        .iter()
        .enumerate()
        .find(|(_, y)| (e - **y).abs() <= COINCIDENCE_TOLERANCE)
    {
        return Placement::CoincidesWithZero(k + 1);
    }
    match ys.partition_point(|y| *y < e) {
        0 => Placement::LeftOfAll,
        i if i == ys.len() => Placement::RightOfAll,
        i => Placement::Gap(i),
    }
}

fn sign(v: f64) -> i8 {
    if v > 0.0 {
        1
    } else if v < 0.0 {
        -1
    } else {
        0
    }
}

/// Sign of `h_k(E1) h_k(E2)` where `h_k(x) = (y_k - x)(y_{k+1} - x)`.
/// Negative exactly when one point is inside `(y_k, y_{k+1})` and the other
/// is not.
pub fn hk_sign(e1: f64, e2: f64, yk: f64, yk1: f64) -> i8 {
    sign(yk - e1) * sign(yk1 - e1) * sign(yk - e2) * sign(yk1 - e2)
}

/// The 3 x 3 sign table over `L_k`, `M_k`, `R_k`, keyed by placements on the
/// two-point grid `{y_k, y_{k+1}}`.
pub fn table1_sign(p1: Placement, p2: Placement) -> i8 {
    let inside = |p: Placement| match p {
        Placement::Gap(_) => Some(true),
        Placement::LeftOfAll | Placement::RightOfAll => Some(false),
        Placement::CoincidesWithZero(_) => None,
    };
    match (inside(p1), inside(p2)) {
        (Some(a), Some(b)) => {
            if a == b {
                1
            } else {
                -1
            }
        }
        _ => 0,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Chain {
    /// `(x - E1)(x - E2) P ≺ G`
    AugmentedBelowG,
    /// `G ≺ P`
    GOverP,
    /// `G ≺ (x - E2) P`
    GOverPWithE2,
    /// `(x - E1) P ≺ G`
    PWithE1OverG,
    /// `(x - E2) P ≺ G`
    PWithE2OverG,
    /// `G ≺ (x - E1) P`
    GOverPWithE1,
    /// `(x - E1) G ≺ (x - E2) P`
    CrossI,
    /// `(x - E2) G ≺ (x - E1) P`
    CrossII,
}

fn with_point(zeros: &[f64], e: f64) -> Vec<f64> {
    let mut v = Vec::with_capacity(zeros.len() + 1);
    v.extend_from_slice(zeros);
    v.push(e);
    v.sort_by(f64::total_cmp);
    v
}

impl Chain {
    pub fn label(self) -> &'static str {
        match self {
            Chain::AugmentedBelowG => "(x-E1)(x-E2)P ≺ G",
            Chain::GOverP => "G ≺ P",
            Chain::GOverPWithE2 => "G ≺ (x-E2)P",
            Chain::PWithE1OverG => "(x-E1)P ≺ G",
            Chain::PWithE2OverG => "(x-E2)P ≺ G",
            Chain::GOverPWithE1 => "G ≺ (x-E1)P",
            Chain::CrossI => "(x-E1)G ≺ (x-E2)P",
            Chain::CrossII => "(x-E2)G ≺ (x-E1)P",
        }
    }

    /// Whether the chain holds for `p` of degree `n` and `g` of degree `n + 1`.
    pub fn holds(self, p: &[f64], g: &[f64], e1: f64, e2: f64) -> bool {
        if p.len() + 1 != g.len() {
            return false;
        }
        match self {
            Chain::AugmentedBelowG => {
                let aug = with_point(&with_point(p, e1), e2);
                strict_interlace_slices(g, &aug)
            }
            Chain::GOverP => strict_interlace_slices(p, g),
            Chain::GOverPWithE2 => alternate_slices(g, &with_point(p, e2)),
            Chain::PWithE1OverG => alternate_slices(&with_point(p, e1), g),
            Chain::PWithE2OverG => alternate_slices(&with_point(p, e2), g),
            Chain::GOverPWithE1 => alternate_slices(g, &with_point(p, e1)),
            Chain::CrossI => strict_interlace_slices(&with_point(p, e2), &with_point(g, e1)),
            Chain::CrossII => strict_interlace_slices(&with_point(p, e1), &with_point(g, e2)),
        }
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum InconclusiveDetail {
    /// The arrangement the theorem predicts is absent from the zero data.
    ChainViolated { chain: Chain },
    /// Neither sub-case of the two-gap configuration has its positional
    /// precondition.
    PreconditionUnmet,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Verdict {
    TwoPointCompleted,
    GFullyInterlacesP,
    OnePointLeft,
    OnePointRight,
    #[serde(rename = "CrossAugmented_i")]
    CrossAugmentedI,
    #[serde(rename = "CrossAugmented_ii")]
    CrossAugmentedII,
    ImpossibleConfig,
    Inconclusive { detail: InconclusiveDetail },
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::TwoPointCompleted => "TwoPointCompleted",
            Verdict::GFullyInterlacesP => "GFullyInterlacesP",
            Verdict::OnePointLeft => "OnePointLeft",
            Verdict::OnePointRight => "OnePointRight",
            Verdict::CrossAugmentedI => "CrossAugmented_i",
            Verdict::CrossAugmentedII => "CrossAugmented_ii",
            Verdict::ImpossibleConfig => "ImpossibleConfig",
            Verdict::Inconclusive { .. } => "Inconclusive",
        }
    }

    /// The chain this verdict asserts, if any.
    pub fn chain(&self, variant: TheoremVariant) -> Option<Chain> {
        match (self, variant) {
            (Verdict::TwoPointCompleted, _) => Some(Chain::AugmentedBelowG),
            (Verdict::GFullyInterlacesP, _) => Some(Chain::GOverP),
            (Verdict::OnePointLeft, TheoremVariant::Minus) => Some(Chain::GOverPWithE2),
            (Verdict::OnePointLeft, TheoremVariant::Plus) => Some(Chain::PWithE2OverG),
            (Verdict::OnePointRight, TheoremVariant::Minus) => Some(Chain::PWithE1OverG),
            (Verdict::OnePointRight, TheoremVariant::Plus) => Some(Chain::GOverPWithE1),
            (Verdict::CrossAugmentedI, _) => Some(Chain::CrossI),
            (Verdict::CrossAugmentedII, _) => Some(Chain::CrossII),
            (Verdict::ImpossibleConfig | Verdict::Inconclusive { .. }, _) => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChainCheck {
    pub chain: Chain,
    pub label: String,
    pub holds: bool,
}

impl ChainCheck {
    fn run(chain: Chain, p: &[f64], g: &[f64], e1: f64, e2: f64) -> Self {
        Self {
            chain,
            label: chain.label().to_string(),
            holds: chain.holds(p, g, e1, e2),
        }
    }
}

/// `y_k < z_l < E < z_{l+1} < y_{k+1}`, all indices 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositionalWitness {
    pub k: usize,
    pub l: usize,
    pub holds: bool,
}

impl PositionalWitness {
    pub fn statement(&self, point: &str) -> String {
        format!(
            "y_{}<z_{}<{}<z_{}<y_{}",
            self.k,
            self.l,
            point,
            self.l + 1,
            self.k + 1
        )
    }
}

fn positional(p: &[f64], g: &[f64], e: f64, k: usize) -> PositionalWitness {
    let l = p.partition_point(|z| *z < e);
    let holds = l >= 1
        && l < p.len()
        && separated(g[k - 1], p[l - 1])
        && separated(p[l - 1], e)
        && separated(e, p[l])
        && separated(p[l], g[k]);
    PositionalWitness { k, l, holds }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InterlaceReport {
    pub theorem_variant: TheoremVariant,
    pub placement_e1: Placement,
    pub placement_e2: Placement,
    pub verdict: Verdict,
    /// The verdict's chain was confirmed on the zero sets.
    pub checked: bool,
    /// Every chain evaluated while reaching the verdict.
    pub chains: Vec<ChainCheck>,
    pub precondition_i: Option<PositionalWitness>,
    pub precondition_ii: Option<PositionalWitness>,
    /// `sign H_k` for `k = 1..n`.
    pub hk_signs: Vec<i8>,
    /// Each gap holds an odd number of `P` zeros when `H_k > 0` and an even
    /// number when `H_k < 0`.
    pub parity_consistent: bool,
    pub diagnostics: Vec<String>,
}

impl InterlaceReport {
    pub fn chain_result(&self, chain: Chain) -> Option<bool> {
        self.chains.iter().find(|c| c.chain == chain).map(|c| c.holds)
    }

    pub fn is_two_gap(&self) -> bool {
        matches!(
            (self.placement_e1, self.placement_e2),
            (Placement::Gap(a), Placement::Gap(b)) if a != b
        )
    }
}

pub fn classify(
    variant: TheoremVariant,
    p_zeros: &ZeroSet,
    g_zeros: &ZeroSet,
    e1: f64,
    e2: f64,
) -> Result<InterlaceReport> {
    if p_zeros.degree() + 1 != g_zeros.degree() {
        return Err(Error::Arity(format!(
            "classify needs P of degree n and G of degree n + 1, got {} and {}",
            p_zeros.degree(),
            g_zeros.degree()
        )));
    }
    if e1 > e2 {
        return Err(Error::Ordering { e1, e2 });
    }
    let p = p_zeros.as_slice();
    let g = g_zeros.as_slice();
    let pl1 = place_point(e1, g_zeros);
    let pl2 = place_point(e2, g_zeros);
    for (name, pl, e) in [("E1", pl1, e1), ("E2", pl2, e2)] {
        if let Placement::CoincidesWithZero(k) = pl {
            return Err(Error::DegenerateConfiguration(format!(
                "{name} = {e} coincides with zero y_{k} = {} of G",
                g[k - 1]
            )));
        }
    }

    let hk_signs: Vec<i8> = g.windows(2).map(|w| hk_sign(e1, e2, w[0], w[1])).collect();
    let parity_consistent = g.windows(2).zip(&hk_signs).all(|(w, s)| {
        let count = p.iter().filter(|z| **z > w[0] && **z < w[1]).count();
        match s {
            1 => count % 2 == 1,
            -1 => count % 2 == 0,
            _ => true,
        }
    });

    let mut report = InterlaceReport {
        theorem_variant: variant,
        placement_e1: pl1,
        placement_e2: pl2,
        verdict: Verdict::ImpossibleConfig,
        checked: false,
        chains: Vec::new(),
        precondition_i: None,
        precondition_ii: None,
        hk_signs,
        parity_consistent,
        diagnostics: Vec::new(),
    };
    if !parity_consistent {
        report
            .diagnostics
            .push("gap parity of P zeros disagrees with sign H_k".into());
    }
    let run = |chain: Chain, report: &mut InterlaceReport| -> bool {
        let check = ChainCheck::run(chain, p, g, e1, e2);
        let holds = check.holds;
        report.chains.push(check);
        holds
    };

    use Placement::*;
    let predicted: Option<Verdict> = match variant {
        TheoremVariant::Minus => {
            // The two-point chain is evaluated for every placement so the
            // merge-consistency property can be checked downstream.
            run(Chain::AugmentedBelowG, &mut report);
            match (pl1, pl2) {
                (LeftOfAll, LeftOfAll) | (RightOfAll, RightOfAll) => None,
                (Gap(a), Gap(b)) if a == b => None,
                (Gap(_), Gap(_)) => Some(Verdict::TwoPointCompleted),
                (LeftOfAll, Gap(_)) => Some(Verdict::OnePointLeft),
                (Gap(_), RightOfAll) => Some(Verdict::OnePointRight),
                (LeftOfAll, RightOfAll) => Some(Verdict::GFullyInterlacesP),
                _ => None,
            }
        }
        TheoremVariant::Plus => match (pl1, pl2) {
            (LeftOfAll, RightOfAll) => None,
            (LeftOfAll, LeftOfAll) | (RightOfAll, RightOfAll) => Some(Verdict::GFullyInterlacesP),
            (Gap(a), Gap(b)) if a == b => Some(Verdict::GFullyInterlacesP),
            (LeftOfAll, Gap(_)) => Some(Verdict::OnePointLeft),
            (Gap(_), RightOfAll) => Some(Verdict::OnePointRight),
            (Gap(k), Gap(k2)) => {
                let w1 = positional(p, g, e1, k);
                let w2 = positional(p, g, e2, k2);
                report.precondition_i = Some(w1);
                report.precondition_ii = Some(w2);
                let ci = run(Chain::CrossI, &mut report);
                let cii = run(Chain::CrossII, &mut report);
                if w1.holds {
                    Some(Verdict::CrossAugmentedI)
                } else if w2.holds {
                    Some(Verdict::CrossAugmentedII)
                } else {
                    report.diagnostics.push(format!(
                        "no positional precondition; chain (i) {}, chain (ii) {}",
                        if ci { "holds" } else { "fails" },
                        if cii { "holds" } else { "fails" }
                    ));
                    report.verdict = Verdict::Inconclusive {
                        detail: InconclusiveDetail::PreconditionUnmet,
                    };
                    return Ok(report);
                }
            }
            _ => None,
        },
    };

    let Some(verdict) = predicted else {
        report.verdict = Verdict::ImpossibleConfig;
        report.diagnostics.push(format!(
            "placement ({pl1}, {pl2}) is excluded by the theorem for this sign"
        ));
        return Ok(report);
    };
    let chain = verdict.chain(variant).expect("predicted verdicts name a chain");
    let holds = match report.chain_result(chain) {
        Some(h) => h,
        None => run(chain, &mut report),
    };
    // Under the minus sign every admissible placement also completes the
    // interlacing with both points.
    let failed = if !holds {
        Some(chain)
    } else if variant == TheoremVariant::Minus
        && report.chain_result(Chain::AugmentedBelowG) == Some(false)
    {
        Some(Chain::AugmentedBelowG)
    } else {
        None
    };
    match failed {
        None => {
            report.verdict = verdict;
            report.checked = true;
        }
        Some(chain) => {
            report
                .diagnostics
                .push(format!("predicted {verdict} but {} fails", chain.label()));
            report.verdict = Verdict::Inconclusive {
                detail: InconclusiveDetail::ChainViolated { chain },
            };
        }
    }
    Ok(report)
}

/// Re-checks the verdict's chain elementwise. Verdicts without a chain give
/// `false`.
pub fn verify_chain(
    report: &InterlaceReport,
    p_zeros: &ZeroSet,
    g_zeros: &ZeroSet,
    e1: f64,
    e2: f64,
) -> bool {
    match report.verdict.chain(report.theorem_variant) {
        Some(chain) => chain.holds(p_zeros.as_slice(), g_zeros.as_slice(), e1, e2),
        None => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::jacobi_recurrence;
    use proptest::prelude::*;

    fn zs(v: &[f64]) -> ZeroSet {
        ZeroSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn interlace_basics() {
        assert!(strict_interlace(&zs(&[0.0]), &zs(&[-1.0, 1.0])).unwrap());
        assert!(!strict_interlace(&zs(&[-1.0, 1.0]), &zs(&[-1.0, 0.0, 1.0])).unwrap());
        assert!(strict_interlace(&zs(&[0.0]), &zs(&[0.0, 1.0, 2.0])).is_err());
    }

    #[test]
    fn consecutive_jacobi_degrees_interlace() {
        let t = jacobi_recurrence(7.0, 6.0, 7).unwrap();
        assert!(strict_interlace(&t.zeros(6).unwrap(), &t.zeros(7).unwrap()).unwrap());
    }

    #[test]
    fn alternate_basics() {
        assert!(alternate(&zs(&[0.0]), &zs(&[1.0])).unwrap());
        assert!(!alternate(&zs(&[1.0]), &zs(&[0.0])).unwrap());
        assert!(alternate(&zs(&[-1.0, 0.0]), &zs(&[-0.5, 0.5])).unwrap());
        assert!(alternate(&zs(&[0.0]), &zs(&[0.0, 1.0])).is_err());
    }

    #[test]
    fn placement() {
        let g = zs(&[-1.0, 0.0, 1.0]);
        assert_eq!(place_point(-2.0, &g), Placement::LeftOfAll);
        assert_eq!(place_point(0.5, &g), Placement::Gap(2));
        assert_eq!(place_point(3.0, &g), Placement::RightOfAll);
        assert_eq!(place_point(1e-11, &g), Placement::CoincidesWithZero(2));
    }

    #[test]
    fn hk_sign_cells() {
        assert_eq!(hk_sign(-3.0, -2.0, 0.0, 1.0), 1);
        assert_eq!(hk_sign(0.5, 2.0, 0.0, 1.0), -1);
        assert_eq!(hk_sign(0.0, 2.0, 0.0, 1.0), 0);
        assert_eq!(hk_sign(0.2, 0.8, 0.0, 1.0), 1);
        assert_eq!(hk_sign(-1.0, 2.0, 0.0, 1.0), 1);
    }

    #[test]
    fn plus_exclusion_is_flagged() {
        let p = zs(&[-0.5, 0.5]);
        let g = zs(&[-1.0, 0.0, 1.0]);
        let r = classify(TheoremVariant::Plus, &p, &g, -2.0, 2.0).unwrap();
        assert_eq!(r.verdict, Verdict::ImpossibleConfig);
        assert!(!r.checked);
        assert!(!verify_chain(&r, &p, &g, -2.0, 2.0));
    }

    #[test]
    fn minus_same_gap_is_flagged() {
        let p = zs(&[-0.5, 0.5]);
        let g = zs(&[-1.0, 0.0, 1.0]);
        let r = classify(TheoremVariant::Minus, &p, &g, 0.2, 0.3).unwrap();
        assert_eq!(r.verdict, Verdict::ImpossibleConfig);
    }

    #[test]
    fn synthetic_full_interlacing() {
        let p = zs(&[-0.5, 0.5]);
        let g = zs(&[-1.0, 0.0, 1.0]);
        let r = classify(TheoremVariant::Minus, &p, &g, -2.0, 2.0).unwrap();
        assert_eq!(r.verdict, Verdict::GFullyInterlacesP);
        assert!(r.checked);
        assert!(r.parity_consistent);
        assert_eq!(r.chain_result(Chain::AugmentedBelowG), Some(true));
    }

    #[test]
    fn synthetic_two_gap_plus() {
        // One gap holds z_1 < E1 < z_2, the other holds only E2.
        let g = zs(&[-3.0, 0.0, 3.0, 6.0]);
        let p = zs(&[-2.0, -1.0, 4.0]);
        let r = classify(TheoremVariant::Plus, &p, &g, -1.5, 1.0).unwrap();
        assert_eq!(r.verdict, Verdict::CrossAugmentedI);
        assert!(r.checked);
        assert_eq!(r.precondition_i.unwrap().statement("E_1"), "y_1<z_1<E_1<z_2<y_2");
    }

    #[test]
    fn errors() {
        let p = zs(&[0.0]);
        let g = zs(&[-1.0, 1.0]);
        assert!(matches!(
            classify(TheoremVariant::Minus, &p, &g, 1.0, -1.0),
            Err(Error::Ordering { .. })
        ));
        assert!(matches!(
            classify(TheoremVariant::Minus, &p, &g, -1.0, 2.0),
            Err(Error::DegenerateConfiguration(_))
        ));
    }

    #[test]
    fn shared_point_breaks_every_chain() {
        let p = zs(&[0.0, 1.0]);
        let g = zs(&[-1.0, 0.0, 2.0]);
        for chain in [Chain::GOverP, Chain::AugmentedBelowG, Chain::CrossI, Chain::CrossII] {
            assert!(!chain.holds(p.as_slice(), g.as_slice(), -5.0, 5.0));
        }
    }

    proptest! {
        #[test]
        fn hk_sign_matches_product_and_table(
            yk in -10.0f64..10.0,
            width in 1e-3f64..10.0,
            e1 in -20.0f64..20.0,
            e2 in -20.0f64..20.0,
        ) {
            let yk1 = yk + width;
            let product = (yk - e1) * (yk1 - e1) * (yk - e2) * (yk1 - e2);
            let s = hk_sign(e1, e2, yk, yk1);
            prop_assert_eq!(s, sign(product));
            let grid = ZeroSet::new(vec![yk, yk1]).unwrap();
            let cell = table1_sign(place_point(e1, &grid), place_point(e2, &grid));
            if cell != 0 {
                prop_assert_eq!(s, cell);
            }
        }

        #[test]
        fn interlace_of_midpoints(mut v in proptest::collection::vec(-100.0f64..100.0, 2..12)) {
            v.sort_by(f64::total_cmp);
            v.dedup_by(|a, b| (*a - *b).abs() < 1e-6);
            prop_assume!(v.len() >= 2);
            let mids: Vec<f64> = v.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
            let upper = ZeroSet::new(v.clone()).unwrap();
            let lower = ZeroSet::new(mids).unwrap();
            prop_assert!(strict_interlace(&lower, &upper).unwrap());
        }
    }
}
