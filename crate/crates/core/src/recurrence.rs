//! Monic three-term recurrences and their zeros.
//!
//! A [`RecurrenceTable`] stores the centers `c_1..c_N` and weights
//! `λ_2..λ_N` of
//!
//! ```text
//! P_k(x) = (x - c_k) P_{k-1}(x) - λ_k P_{k-2}(x),   P_{-1} = 0, P_0 = 1.
//! ```
//!
//! `c_k` and `λ_k` are the coefficients of the step that *produces* `P_k`, so
//! the coefficient written `c_{n+1}` in the usual `P_{n+1} = (x - c_{n+1}) P_n
//! - λ_{n+1} P_{n-1}` form is `centers[n]` here, and `λ_{n+1}` is
//! `weights[n - 1]`.
//!
//! Zeros of `P_n` are the eigenvalues of the `n x n` Jacobi matrix with
//! diagonal `c_1..c_n` and off-diagonal `sqrt(λ_2)..sqrt(λ_n)`. They are
//! bracketed by Sturm-count bisection and then polished with Newton steps on
//! the recurrence itself.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute width at which eigenvalue bisection stops.
pub const BISECTION_WIDTH: f64 = 1e-13;
/// Newton iterations allowed in [`RecurrenceTable::refine_zero`].
pub const NEWTON_MAX_ITER: usize = 8;

const BISECTION_MAX_ITER: usize = 400;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RecurrenceTable {
    centers: Vec<f64>,
    weights: Vec<f64>,
}

impl RecurrenceTable {
    /// Builds a table from `c_1..c_N` and `λ_2..λ_N`.
    pub fn new(centers: Vec<f64>, weights: Vec<f64>) -> Result<Self> {
        if centers.is_empty() {
            return Err(Error::InvalidTable("max degree must be at least 1".into()));
        }
        if weights.len() + 1 != centers.len() {
            return Err(Error::InvalidTable(format!(
                "{} centers need {} weights, got {}",
                centers.len(),
                centers.len() - 1,
                weights.len()
            )));
        }
        if let Some(k) = centers.iter().position(|c| !c.is_finite()) {
            return Err(Error::InvalidTable(format!("c_{} is not finite", k + 1)));
        }
        if let Some(k) = weights.iter().position(|&w| !(w > 0.0 && w.is_finite())) {
            return Err(Error::InvalidTable(format!(
                "λ_{} = {} is not a positive finite number",
                k + 2,
                weights[k]
            )));
        }
        Ok(Self { centers, weights })
    }

    pub fn max_degree(&self) -> usize {
        self.centers.len()
    }

    /// `c_k`, 1-based.
    pub fn center(&self, k: usize) -> f64 {
        self.centers[k - 1]
    }

    /// `λ_k`, 1-based, `k >= 2`.
    pub fn weight(&self, k: usize) -> f64 {
        self.weights[k - 2]
    }

    pub fn centers(&self) -> &[f64] {
        &self.centers
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    fn check_degree(&self, n: usize) -> Result<()> {
        if n > self.max_degree() {
            return Err(Error::DegreeOutOfRange {
                degree: n,
                max_degree: self.max_degree(),
            });
        }
        Ok(())
    }

    /// Value of the monic degree-`n` polynomial at `x`.
    pub fn eval_monic(&self, n: usize, x: f64) -> Result<f64> {
        self.check_degree(n)?;
        let (mut prev, mut cur) = (0.0, 1.0);
        for k in 1..=n {
            let next = (x - self.center(k)) * cur - self.lambda_or_zero(k) * prev;
            prev = cur;
            cur = next;
        }
        Ok(cur)
    }

    /// `(P_n(x), P_n'(x))`.
    pub fn eval_with_derivative(&self, n: usize, x: f64) -> Result<(f64, f64)> {
        self.check_degree(n)?;
        let (mut p_prev, mut p) = (0.0, 1.0);
        let (mut d_prev, mut d) = (0.0, 0.0);
        for k in 1..=n {
            let shift = x - self.center(k);
            let lam = self.lambda_or_zero(k);
            let p_next = shift * p - lam * p_prev;
            let d_next = p + shift * d - lam * d_prev;
            p_prev = p;
            p = p_next;
            d_prev = d;
            d = d_next;
        }
        Ok((p, d))
    }

    /// Magnitude bound for the forward recurrence at `x`: the same recurrence
    /// run on absolute values. Rounding error in [`eval_monic`] is a small
    /// multiple of `n * eps` times this.
    ///
    /// [`eval_monic`]: Self::eval_monic
    pub fn eval_abs_bound(&self, n: usize, x: f64) -> Result<f64> {
        self.check_degree(n)?;
        let (mut prev, mut cur) = (0.0, 1.0_f64);
        for k in 1..=n {
            let next = (x - self.center(k)).abs() * cur + self.lambda_or_zero(k) * prev;
            prev = cur;
            cur = next;
        }
        Ok(cur)
    }

    fn lambda_or_zero(&self, k: usize) -> f64 {
        if k >= 2 {
            self.weight(k)
        } else {
            0.0
        }
    }

    /// Number of zeros of `P_n` strictly below `x` (Sturm count on the
    /// leading `n x n` Jacobi matrix).
    pub fn sturm_count(&self, n: usize, x: f64) -> usize {
        let guard = f64::EPSILON * self.gershgorin(n).1.abs().max(1.0) * 1e-3;
        let mut count = 0;
        let mut q = 1.0;
        for k in 1..=n {
            let ratio = if k >= 2 { self.weight(k) / q } else { 0.0 };
            q = (self.center(k) - x) - ratio;
            if q == 0.0 {
                q = -guard;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Interval containing every zero of `P_n`.
    fn gershgorin(&self, n: usize) -> (f64, f64) {
        let off: Vec<f64> = (2..=n).map(|k| self.weight(k).sqrt()).collect();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for k in 1..=n {
            let left = if k >= 2 { off[k - 2] } else { 0.0 };
            let right = if k < n { off[k - 1] } else { 0.0 };
            let r = left + right;
            lo = lo.min(self.center(k) - r);
            hi = hi.max(self.center(k) + r);
        }
        (lo, hi)
    }

    /// All zeros of `P_n`, strictly increasing.
    pub fn zeros(&self, n: usize) -> Result<ZeroSet> {
        self.check_degree(n)?;
        if n == 0 {
            return Ok(ZeroSet::empty());
        }
        let (g_lo, g_hi) = self.gershgorin(n);
        let pad = 1e-12 * g_lo.abs().max(g_hi.abs()).max(1.0);
        let (g_lo, g_hi) = (g_lo - pad, g_hi + pad);

        let mut zeros = Vec::with_capacity(n);
        for index in 0..n {
            let (lo, hi) = self.bisect(n, index, g_lo, g_hi)?;
            let mid = 0.5 * (lo + hi);
            let polished = match self.refine_zero(n, mid) {
                Ok(z) if z >= lo - BISECTION_WIDTH && z <= hi + BISECTION_WIDTH => z,
                _ => mid,
            };
            zeros.push(polished);
        }
        ZeroSet::new(zeros).map_err(|e| Error::NumericalFailure {
            index: n,
            detail: format!("zeros not strictly increasing after polish: {e}"),
        })
    }

    /// Bracket of the `index`-th (0-based) zero.
    fn bisect(&self, n: usize, index: usize, mut lo: f64, mut hi: f64) -> Result<(f64, f64)> {
        for _ in 0..BISECTION_MAX_ITER {
            if hi - lo <= BISECTION_WIDTH {
                return Ok((lo, hi));
            }
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                // Interval is down to adjacent floats.
                return Ok((lo, hi));
            }
            if self.sturm_count(n, mid) > index {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        if lo.is_finite() && hi.is_finite() {
            Ok((lo, hi))
        } else {
            Err(Error::NumericalFailure {
                index,
                detail: "eigenvalue bisection did not converge".into(),
            })
        }
    }

    /// Newton polish of a simple zero of `P_n` starting at `z0`.
    pub fn refine_zero(&self, n: usize, z0: f64) -> Result<f64> {
        self.check_degree(n)?;
        if n == 0 {
            return Err(Error::InvalidParameter("P_0 has no zeros".into()));
        }
        let start_residual = self.eval_monic(n, z0)?.abs();
        if start_residual == 0.0 {
            return Ok(z0);
        }
        let mut z = z0;
        for _ in 0..NEWTON_MAX_ITER {
            let (p, dp) = self.eval_with_derivative(n, z)?;
            if p == 0.0 {
                return Ok(z);
            }
            if dp == 0.0 || !dp.is_finite() {
                return Err(Error::NumericalFailure {
                    index: 0,
                    detail: format!("vanishing derivative near {z}"),
                });
            }
            let step = p / dp;
            let next = z - step;
            if !next.is_finite() {
                return Err(Error::NumericalFailure {
                    index: 0,
                    detail: format!("Newton iterate left the reals from {z0}"),
                });
            }
            z = next;
            if step.abs() <= 4.0 * f64::EPSILON * z.abs().max(f64::MIN_POSITIVE) {
                break;
            }
        }
        let residual = self.eval_monic(n, z)?.abs();
        let floor = 64.0 * (n as f64) * f64::EPSILON * self.eval_abs_bound(n, z)?;
        if residual <= start_residual * 1e-3 || residual <= floor {
            Ok(z)
        } else {
            Err(Error::NumericalFailure {
                index: 0,
                detail: format!(
                    "Newton polish from {z0} diverged (residual {residual:e} vs start {start_residual:e})"
                ),
            })
        }
    }

    /// Largest `|P_n|` over a coarse grid bracketing the zeros: the midpoints
    /// between consecutive zeros, or `z ± 1` when there is a single zero.
    pub fn bracket_scale(&self, n: usize, zeros: &ZeroSet) -> Result<f64> {
        self.check_degree(n)?;
        let z = zeros.as_slice();
        let points: Vec<f64> = match z.len() {
            0 => vec![0.0],
            1 => vec![z[0] - 1.0, z[0] + 1.0],
            _ => z.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect(),
        };
        let mut scale: f64 = 0.0;
        for x in points {
            scale = scale.max(self.eval_monic(n, x)?.abs());
        }
        Ok(scale)
    }
}

/// Strictly increasing real zeros of a degree-`n` polynomial.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawZeroSet", into = "RawZeroSet")]
pub struct ZeroSet {
    zeros: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct RawZeroSet {
    degree: usize,
    zeros: Vec<f64>,
}

impl TryFrom<RawZeroSet> for ZeroSet {
    type Error = Error;

    fn try_from(raw: RawZeroSet) -> Result<Self> {
        if raw.degree != raw.zeros.len() {
            return Err(Error::Arity(format!(
                "degree {} but {} zeros",
                raw.degree,
                raw.zeros.len()
            )));
        }
        ZeroSet::new(raw.zeros)
    }
}

impl From<ZeroSet> for RawZeroSet {
    fn from(set: ZeroSet) -> Self {
        RawZeroSet {
            degree: set.zeros.len(),
            zeros: set.zeros,
        }
    }
}

impl ZeroSet {
    pub fn new(zeros: Vec<f64>) -> Result<Self> {
        if let Some(i) = zeros.iter().position(|z| !z.is_finite()) {
            return Err(Error::InvalidParameter(format!("zero {} is not finite", i + 1)));
        }
        if let Some(i) = zeros.windows(2).position(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParameter(format!(
                "zeros not strictly increasing at position {}: {} >= {}",
                i + 1,
                zeros[i],
                zeros[i + 1]
            )));
        }
        Ok(Self { zeros })
    }

    pub fn empty() -> Self {
        Self { zeros: Vec::new() }
    }

    pub fn degree(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.zeros
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.zeros
    }

    /// 1-based access, matching `z_{k,n}`.
    pub fn get(&self, k: usize) -> f64 {
        self.zeros[k - 1]
    }

    pub fn first(&self) -> Option<f64> {
        self.zeros.first().copied()
    }

    pub fn last(&self) -> Option<f64> {
        self.zeros.last().copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    /// Monic Legendre: c_k = 0, λ_k = (k-1)^2 / (4(k-1)^2 - 1).
    fn legendre(n: usize) -> RecurrenceTable {
        let weights = (2..=n)
            .map(|k| {
                let m = (k - 1) as f64;
                m * m / (4.0 * m * m - 1.0)
            })
            .collect();
        RecurrenceTable::new(vec![0.0; n], weights).unwrap()
    }

    #[test]
    fn constructor_rejects_bad_tables() {
        assert!(matches!(
            RecurrenceTable::new(vec![], vec![]),
            Err(Error::InvalidTable(_))
        ));
        assert!(matches!(
            RecurrenceTable::new(vec![0.0, 0.0], vec![]),
            Err(Error::InvalidTable(_))
        ));
        assert!(matches!(
            RecurrenceTable::new(vec![0.0, 0.0], vec![0.0]),
            Err(Error::InvalidTable(_))
        ));
        assert!(matches!(
            RecurrenceTable::new(vec![0.0, 0.0], vec![-1.0]),
            Err(Error::InvalidTable(_))
        ));
    }

    #[test]
    fn low_degrees_are_forced() {
        let t = RecurrenceTable::new(vec![0.3, -1.2, 2.0], vec![0.5, 0.7]).unwrap();
        assert_eq!(t.eval_monic(0, 3.7).unwrap(), 1.0);
        assert_eq!(t.eval_monic(1, 2.0).unwrap(), 2.0 - 0.3);
        assert!(matches!(
            t.eval_monic(4, 0.0),
            Err(Error::DegreeOutOfRange { degree: 4, max_degree: 3 })
        ));
    }

    #[test]
    fn legendre_p2_vanishes_at_inverse_sqrt3() {
        let t = legendre(4);
        let x = 1.0 / 3f64.sqrt();
        assert_abs_diff_eq!(t.eval_monic(2, x).unwrap(), 0.0, epsilon = 1e-12);
        let z = t.zeros(2).unwrap();
        assert_abs_diff_eq!(z.get(1), -x, epsilon = 1e-13);
        assert_abs_diff_eq!(z.get(2), x, epsilon = 1e-13);
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let t = legendre(6);
        let h = 1e-6;
        for &x in &[-0.8, -0.1, 0.35, 0.9] {
            let (_, d) = t.eval_with_derivative(5, x).unwrap();
            let fd = (t.eval_monic(5, x + h).unwrap() - t.eval_monic(5, x - h).unwrap()) / (2.0 * h);
            assert_abs_diff_eq!(d, fd, epsilon = 1e-8);
        }
    }

    #[test]
    fn zero_degree_gives_empty_set() {
        let z = legendre(3).zeros(0).unwrap();
        assert!(z.is_empty());
    }

    #[test]
    fn refine_from_nearby_start() {
        let t = legendre(3);
        let exact = 1.0 / 3f64.sqrt();
        assert_abs_diff_eq!(t.refine_zero(2, 0.58).unwrap(), exact, epsilon = 1e-12);
        assert_abs_diff_eq!(t.refine_zero(2, exact).unwrap(), exact, epsilon = 1e-15);
    }

    #[test]
    fn refine_rejects_critical_point() {
        // P_2' vanishes at 0 for the symmetric table.
        let t = legendre(3);
        assert!(matches!(
            t.refine_zero(2, 0.0),
            Err(Error::NumericalFailure { .. })
        ));
    }

    #[test]
    fn zero_set_validation() {
        assert!(ZeroSet::new(vec![0.0, 0.0]).is_err());
        assert!(ZeroSet::new(vec![1.0, 0.0]).is_err());
        assert!(ZeroSet::new(vec![f64::NAN]).is_err());
        assert_eq!(ZeroSet::new(vec![-1.0, 2.0]).unwrap().degree(), 2);
    }

    #[test]
    fn sturm_count_brackets_zeros() {
        let t = legendre(5);
        let z = t.zeros(5).unwrap();
        for (i, &x) in z.as_slice().iter().enumerate() {
            assert_eq!(t.sturm_count(5, x - 1e-9), i);
            assert_eq!(t.sturm_count(5, x + 1e-9), i + 1);
        }
    }
}
