//! Terminating Gauss hypergeometric series and the monomial expansions of the
//! three families built from them.
//!
//! Everything here is computed in complex arithmetic with running Pochhammer
//! products (no Gamma functions). Polynomials are realized once at the very
//! end, after checking that the discarded imaginary parts are negligible. The
//! module never touches [`crate::recurrence`]; it is the independent side of
//! the recurrence/oracle comparison.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Imaginary parts up to this fraction of the largest coefficient are
/// discarded during realization.
pub const IMAG_RESIDUE_LIMIT: f64 = 1e-9;
/// Allowed relative distance of the leading coefficient from 1.
pub const MONIC_TOLERANCE: f64 = 1e-8;

const POLE_EPS: f64 = 1e-14;

/// Real polynomial in ascending powers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MonomialPoly {
    pub coeffs: Vec<f64>,
    pub imag_residue: f64,
}

impl MonomialPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> f64 {
        *self.coeffs.last().unwrap_or(&0.0)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    /// `sum |c_k| |x|^k`, the natural error scale for evaluating in the
    /// monomial basis.
    pub fn abs_scale(&self, x: f64) -> f64 {
        let ax = x.abs();
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * ax + c.abs())
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().fold(0.0_f64, |m, c| m.max(c.abs()))
    }
}

/// `(a)_k` computed as a running product.
fn pochhammer(a: Complex64, k: usize) -> Complex64 {
    (0..k).fold(Complex64::new(1.0, 0.0), |acc, j| acc * (a + j as f64))
}

fn check_terminating(a: Complex64, n_terms: usize) -> Result<()> {
    let target = -(n_terms as f64);
    if (a.re - target).abs() > 1e-12 * (1.0 + target.abs()) || a.im.abs() > 1e-12 {
        return Err(Error::InvalidParameter(format!(
            "series does not terminate: first parameter {a} is not -{n_terms}"
        )));
    }
    Ok(())
}

fn check_denominator(c: Complex64, n_terms: usize) -> Result<()> {
    for j in 0..n_terms {
        if (c + j as f64).norm() <= POLE_EPS {
            return Err(Error::InvalidParameter(format!(
                "pole: (c)_k vanishes at c + {j} = 0 with c = {c}"
            )));
        }
    }
    Ok(())
}

/// `2F1(a, b; c; z)` for `a = -n_terms`, summed left to right over
/// `k = 0..=n_terms`.
pub fn hyp2f1_terminating(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    z: Complex64,
    n_terms: usize,
) -> Result<Complex64> {
    check_terminating(a, n_terms)?;
    check_denominator(c, n_terms)?;
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for k in 0..n_terms {
        let kf = k as f64;
        term = term * (a + kf) * (b + kf) * z / ((c + kf) * (kf + 1.0));
        sum += term;
    }
    Ok(sum)
}

/// Complex polynomial in ascending powers.
#[derive(Debug, Clone)]
struct CPoly(Vec<Complex64>);

impl CPoly {
    fn constant(c: Complex64) -> Self {
        CPoly(vec![c])
    }

    /// Multiply by `p0 + p1 x`.
    fn mul_affine(&self, p0: Complex64, p1: Complex64) -> Self {
        let mut out = vec![Complex64::new(0.0, 0.0); self.0.len() + 1];
        for (i, &c) in self.0.iter().enumerate() {
            out[i] += c * p0;
            out[i + 1] += c * p1;
        }
        CPoly(out)
    }

    fn scale(&self, s: Complex64) -> Self {
        CPoly(self.0.iter().map(|&c| c * s).collect())
    }

    fn add_assign(&mut self, other: &CPoly) {
        if other.0.len() > self.0.len() {
            self.0.resize(other.0.len(), Complex64::new(0.0, 0.0));
        }
        for (i, &c) in other.0.iter().enumerate() {
            self.0[i] += c;
        }
    }
}

/// Affine complex function `c0 + c1 x`.
#[derive(Debug, Clone, Copy)]
struct Affine {
    c0: Complex64,
    c1: Complex64,
}

/// Expands `sum_k (-n)_k (b(x))_k / ((c)_k k!) z(x)^k` with affine `b` and `z`.
fn hyp2f1_poly(n: usize, b: Affine, c: Complex64, z: Affine) -> Result<CPoly> {
    check_denominator(c, n)?;
    let a = -(n as f64);
    let mut term = CPoly::constant(Complex64::new(1.0, 0.0));
    let mut sum = term.clone();
    for k in 0..n {
        let kf = k as f64;
        let coef = Complex64::new(a + kf, 0.0) / ((c + kf) * (kf + 1.0));
        term = term
            .mul_affine(b.c0 + kf, b.c1)
            .mul_affine(z.c0, z.c1)
            .scale(coef);
        sum.add_assign(&term);
    }
    Ok(sum)
}

fn realize(poly: CPoly, degree: usize) -> Result<MonomialPoly> {
    let mut coeffs: Vec<f64> = poly.0.iter().map(|c| c.re).collect();
    coeffs.resize(degree + 1, 0.0);
    let imag_residue = poly.0.iter().fold(0.0_f64, |m, c| m.max(c.im.abs()));
    let max_abs = coeffs.iter().fold(0.0_f64, |m, c| m.max(c.abs()));
    let limit = IMAG_RESIDUE_LIMIT * max_abs;
    if !(imag_residue <= limit) {
        return Err(Error::RealizationFailure {
            residue: imag_residue,
            limit,
        });
    }
    let lead = coeffs[degree];
    if !((lead - 1.0).abs() <= MONIC_TOLERANCE) {
        return Err(Error::InvalidParameter(format!(
            "expansion is not monic: leading coefficient {lead}"
        )));
    }
    Ok(MonomialPoly {
        coeffs,
        imag_residue,
    })
}

fn i_pow(n: usize) -> Complex64 {
    match n % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// Monic Meixner-Pollaczek polynomial
/// `i^n (2λ)_n (e^{2iφ} / (e^{2iφ} - 1))^n 2F1(-n, λ + ix; 2λ; 1 - e^{-2iφ})`.
pub fn mp_poly(n: usize, lambda: f64, phi: f64) -> Result<MonomialPoly> {
    if !(lambda > 0.0) {
        return Err(Error::InvalidParameter(format!("λ = {lambda} must be positive")));
    }
    if !(phi > 0.0 && phi < std::f64::consts::PI) {
        return Err(Error::InvalidParameter(format!("φ = {phi} must lie in (0, π)")));
    }
    let e2 = Complex64::from_polar(1.0, 2.0 * phi);
    let z = Complex64::new(1.0, 0.0) - Complex64::from_polar(1.0, -2.0 * phi);
    let two_lambda = Complex64::new(2.0 * lambda, 0.0);
    let series = hyp2f1_poly(
        n,
        Affine {
            c0: Complex64::new(lambda, 0.0),
            c1: Complex64::new(0.0, 1.0),
        },
        two_lambda,
        Affine {
            c0: z,
            c1: Complex64::new(0.0, 0.0),
        },
    )?;
    let prefactor = i_pow(n) * pochhammer(two_lambda, n) * (e2 / (e2 - 1.0)).powu(n as u32);
    realize(series.scale(prefactor), n)
}

/// Monic Pseudo-Jacobi polynomial
/// `2^n (a + ib + 1)_n / (i^n (2a + n + 1)_n) 2F1(-n, 2a + n + 1; a + ib + 1; (1 - ix)/2)`.
pub fn pj_poly(n: usize, a: f64, b: f64) -> Result<MonomialPoly> {
    if !(a < -(n as f64)) {
        return Err(Error::OrthogonalityRange {
            degree: n,
            bound: -(n as f64),
        });
    }
    let upper = Complex64::new(2.0 * a + n as f64 + 1.0, 0.0);
    let lower = Complex64::new(a + 1.0, b);
    let denom = pochhammer(upper, n);
    if denom.norm() <= POLE_EPS {
        return Err(Error::InvalidParameter(format!(
            "(2a + n + 1)_n vanishes for a = {a}, n = {n}"
        )));
    }
    // The numerator parameter 2a + n + 1 enters the series as a constant; the
    // x-dependence sits in the argument (1 - ix)/2.
    let series = hyp2f1_constant_b(n, upper, lower, Affine {
        c0: Complex64::new(0.5, 0.0),
        c1: Complex64::new(0.0, -0.5),
    })?;
    let prefactor =
        Complex64::new(2f64.powi(n as i32), 0.0) * pochhammer(lower, n) / (i_pow(n) * denom);
    realize(series.scale(prefactor), n)
}

fn hyp2f1_constant_b(n: usize, b: Complex64, c: Complex64, z: Affine) -> Result<CPoly> {
    hyp2f1_poly(
        n,
        Affine {
            c0: b,
            c1: Complex64::new(0.0, 0.0),
        },
        c,
        z,
    )
}

/// Monic Jacobi polynomial from
/// `P_n^{(α,β)}(x) = (α+1)_n / n! 2F1(-n, n+α+β+1; α+1; (1-x)/2)`, rescaled by
/// the reciprocal of its leading coefficient `(n+α+β+1)_n / (2^n n!)`.
pub fn jacobi_poly_oracle(n: usize, alpha: f64, beta: f64) -> Result<MonomialPoly> {
    if !(alpha > -1.0 && beta > -1.0) {
        return Err(Error::InvalidParameter(format!(
            "Jacobi parameters α = {alpha}, β = {beta} must exceed -1"
        )));
    }
    let nf = n as f64;
    let upper = Complex64::new(nf + alpha + beta + 1.0, 0.0);
    let lower = Complex64::new(alpha + 1.0, 0.0);
    let series = hyp2f1_constant_b(n, upper, lower, Affine {
        c0: Complex64::new(0.5, 0.0),
        c1: Complex64::new(-0.5, 0.0),
    })?;
    let prefactor =
        Complex64::new(2f64.powi(n as i32), 0.0) * pochhammer(lower, n) / pochhammer(upper, n);
    realize(series.scale(prefactor), n)
}
