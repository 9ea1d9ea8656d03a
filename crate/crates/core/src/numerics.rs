//! Floating-point analytic layer: complex gamma, Hurwitz/Riemann zeta by
//! Euler–Maclaurin summation, and the entire function `s·ζ(s+1, x)` that
//! interpolates the Bernoulli polynomials.
//!
//! This layer is the independent numeric oracle for the exact identities in
//! [`crate::zetasym`]: it never consults the exact polynomials when
//! evaluating, only shares the rational Bernoulli constants `B_{2j}/(2j)!`
//! of the tail correction.

use crate::bernoulli::bernoulli_number;
use crate::EvalError;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use std::f64::consts::{E, PI};
use std::sync::LazyLock;

pub use num_complex::Complex64;

/// Distance below which an argument counts as sitting on a pole.
pub const POLE_TOLERANCE: f64 = 1e-12;

/// Largest admissible number of tail corrections.
pub const MAX_CORRECTION_ORDER: usize = 20;

/// Euler–Maclaurin truncation parameters: `head_terms` summands taken
/// directly, then `correction_order` Bernoulli tail corrections.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EulerMaclaurinParams {
    head_terms: usize,
    correction_order: usize,
}

impl EulerMaclaurinParams {
    /// Validated constructor; requires `head_terms >= 8` and
    /// `1 <= correction_order <= 20`.
    pub fn new(head_terms: usize, correction_order: usize) -> Result<Self, EvalError> {
        if head_terms < 8 {
            return Err(EvalError::DomainViolation(format!(
                "head_terms = {head_terms} < 8"
            )));
        }
        if !(1..=MAX_CORRECTION_ORDER).contains(&correction_order) {
            return Err(EvalError::DomainViolation(format!(
                "correction_order = {correction_order} outside 1..=20"
            )));
        }
        Ok(EulerMaclaurinParams {
            head_terms,
            correction_order,
        })
    }

    /// Parameters adapted to the argument: `head_terms` grows with
    /// `|Im s|` so the correction series stays in its decreasing regime.
    pub fn for_argument(s: Complex64) -> Self {
        EulerMaclaurinParams {
            head_terms: (s.im.abs().ceil() as usize + 16).max(16),
            correction_order: 12,
        }
    }

    pub fn head_terms(&self) -> usize {
        self.head_terms
    }

    pub fn correction_order(&self) -> usize {
        self.correction_order
    }
}

impl Default for EulerMaclaurinParams {
    fn default() -> Self {
        EulerMaclaurinParams {
            head_terms: 16,
            correction_order: 12,
        }
    }
}

/// `x^w` for real `x > 0` via the principal logarithm (no branch cut is
/// ever approached).
pub(crate) fn real_pow(x: f64, w: Complex64) -> Complex64 {
    (w * x.ln()).exp()
}

// Lanczos approximation in Pugh's form, r = 10.900511, 11 coefficients
// ("An Analysis of the Lanczos Gamma Approximation", 2004, p. 116).
// Coefficients kept at their published precision.
const GAMMA_R: f64 = 10.900511;
#[allow(clippy::excessive_precision)]
const GAMMA_DK: [f64; 11] = [
    2.48574089138753565546e-5,
    1.05142378581721974210,
    -3.45687097222016235469,
    4.51227709466894823700,
    -2.98285225323576655721,
    1.05639711577126713077,
    -1.95428773191645869583e-1,
    1.70970543404441224307e-2,
    -5.71926117404305781283e-4,
    4.63399473359905636708e-6,
    -2.71994908488607703910e-9,
];
#[allow(clippy::excessive_precision)]
const TWO_SQRT_E_OVER_PI: f64 = 1.8603827342052657173362492472666631120594218414085755;

fn gamma_unchecked(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // Reflection: Γ(z) Γ(1-z) sin(πz) = π; 1-z lands in the stable
        // half-plane.
        PI / ((PI * z).sin() * gamma_unchecked(Complex64::new(1.0, 0.0) - z))
    } else {
        let mut s = Complex64::new(GAMMA_DK[0], 0.0);
        for (i, &dk) in GAMMA_DK.iter().enumerate().skip(1) {
            s += dk / (z + (i as f64 - 1.0));
        }
        s * TWO_SQRT_E_OVER_PI * ((z - 0.5 + GAMMA_R) / E).powc(z - 0.5)
    }
}

/// Complex gamma function; relative accuracy around `1e-13` away from the
/// poles at the non-positive integers, where `PoleHit` is reported.
pub fn gamma(z: Complex64) -> Result<Complex64, EvalError> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(EvalError::DomainViolation(format!(
            "z = {z} has non-finite components"
        )));
    }
    if z.im.abs() < POLE_TOLERANCE {
        let nearest = z.re.round();
        if nearest <= 0.0 && (z.re - nearest).abs() < POLE_TOLERANCE {
            return Err(EvalError::PoleHit(format!("gamma pole at z = {nearest}")));
        }
    }
    Ok(gamma_unchecked(z))
}

// B_{2j}/(2j)! for j = 1..=MAX_CORRECTION_ORDER, rounded once from the
// exact rationals.
static BERN_OVER_FACT: LazyLock<Vec<f64>> = LazyLock::new(|| {
    let mut table = Vec::with_capacity(MAX_CORRECTION_ORDER);
    let mut factorial = BigInt::from(1);
    for i in 1..=2 * MAX_CORRECTION_ORDER {
        factorial *= BigInt::from(i);
        if i % 2 == 0 {
            let value = bernoulli_number(i) / BigRational::from_integer(factorial.clone());
            table.push(value.to_f64().unwrap());
        }
    }
    table
});

/// If `s` is within tolerance of a non-positive integer `-m`, return `m`.
fn nearest_nonpositive_integer(s: Complex64) -> Option<usize> {
    if s.im.abs() >= POLE_TOLERANCE {
        return None;
    }
    let nearest = s.re.round();
    if nearest <= 0.0 && (s.re - nearest).abs() < POLE_TOLERANCE {
        Some((-nearest) as usize)
    } else {
        None
    }
}

/// Head length for arguments where the correction series does not
/// terminate.
///
/// For `Re s < 1/2` the summands grow with `n`, so the head is capped to
/// bound cancellation while staying above the convergence floor of the
/// correction series; otherwise the caller's head length is used, raised
/// to the floor if needed.
fn effective_head(s: Complex64, params: &EulerMaclaurinParams) -> usize {
    let j = params.correction_order;
    let convergence_floor = ((s.norm() + 2.0 * j as f64) / 6.0).ceil() as usize;
    if s.re < 0.5 {
        let cancellation_cap = (s.im.abs().ceil() as usize + 8).max(8);
        params
            .head_terms
            .min(cancellation_cap)
            .max(convergence_floor)
    } else {
        params.head_terms.max(convergence_floor)
    }
}

/// Hurwitz zeta `ζ(s, α)` for complex `s != 1` and real `α > 0`, by
/// Euler–Maclaurin summation:
///
/// ```text
/// Σ_{n=0}^{N-1} (n+α)^{-s} + (N+α)^{1-s}/(s-1) + (N+α)^{-s}/2
///   + Σ_{j=1}^{J} B_{2j}/(2j)! · s(s+1)···(s+2j-2) · (N+α)^{-s-2j+1}
/// ```
pub fn hurwitz_zeta_num(
    s: Complex64,
    alpha: f64,
    params: &EulerMaclaurinParams,
) -> Result<Complex64, EvalError> {
    if !s.re.is_finite() || !s.im.is_finite() || !alpha.is_finite() {
        return Err(EvalError::DomainViolation(format!(
            "non-finite argument: s = {s}, alpha = {alpha}"
        )));
    }
    if alpha <= 0.0 {
        return Err(EvalError::DomainViolation(format!(
            "alpha = {alpha} must be positive"
        )));
    }
    if (s - Complex64::new(1.0, 0.0)).norm() < POLE_TOLERANCE {
        return Err(EvalError::PoleHit("zeta pole at s = 1".into()));
    }

    // At a non-positive integer -m with m <= 2J-2 the Pochhammer factor
    // reaches zero and the formula is an exact polynomial identity for
    // any head length; snapping s onto the integer and taking an empty
    // head keeps every intermediate small.
    let terminating =
        nearest_nonpositive_integer(s).filter(|&m| m + 2 <= 2 * params.correction_order);
    let (s, n_head) = match terminating {
        Some(m) => (Complex64::new(-(m as f64), 0.0), 0),
        None => (s, effective_head(s, params)),
    };

    let mut total = Complex64::new(0.0, 0.0);
    for n in 0..n_head {
        total += real_pow(alpha + n as f64, -s);
    }
    let base = alpha + n_head as f64;
    let pw = real_pow(base, -s); // (N+α)^{-s}
    total += pw * base / (s - 1.0) + 0.5 * pw;

    let mut pochhammer = s; // s(s+1)···(s+2j-2), here j = 1
    let mut power = pw / base; // (N+α)^{-s-2j+1}, here j = 1
    let base_sq = base * base;
    for j in 1..=params.correction_order {
        if pochhammer == Complex64::new(0.0, 0.0) {
            break; // series has terminated; `power` may be about to overflow
        }
        total += BERN_OVER_FACT[j - 1] * pochhammer * power;
        pochhammer *= (s + (2 * j) as f64 - 1.0) * (s + (2 * j) as f64);
        power /= base_sq;
    }
    Ok(total)
}

/// Riemann zeta `ζ(s) = ζ(s, 1)`.
pub fn riemann_zeta_num(
    s: Complex64,
    params: &EulerMaclaurinParams,
) -> Result<Complex64, EvalError> {
    hurwitz_zeta_num(s, 1.0, params)
}

/// The entire interpolation `B(s, α) = s·ζ(s+1, α)` of the Bernoulli
/// polynomials: `B(-m, α) = B_m(α)` for integer `m >= 0`, and the
/// removable point `s = 0` is defined to its limit value 1.
pub fn bernoulli_function(
    s: Complex64,
    alpha: f64,
    params: &EulerMaclaurinParams,
) -> Result<Complex64, EvalError> {
    if !alpha.is_finite() || alpha <= 0.0 {
        return Err(EvalError::DomainViolation(format!(
            "alpha = {alpha} must be positive"
        )));
    }
    if !s.re.is_finite() || !s.im.is_finite() {
        return Err(EvalError::DomainViolation(format!(
            "s = {s} has non-finite components"
        )));
    }
    if s.norm() < POLE_TOLERANCE {
        return Ok(Complex64::new(1.0, 0.0));
    }
    Ok(s * hurwitz_zeta_num(s + 1.0, alpha, params)?)
}
