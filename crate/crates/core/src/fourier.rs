//! Fourier partial sums of periodic Bernoulli functions, the Parseval
//! product-integral identity for Hurwitz zeta, and constrained lattice
//! sums for products of Bernoulli polynomials.
//!
//! Truncated sums here converge to exact rational values produced by the
//! other modules; each operation names its reference so the two routes can
//! be compared at any cutoff.

use crate::bernoulli::{bernoulli_number, bernoulli_poly};
use crate::exact::{binomial_rat, rat_int, BigRational, RationalPoly};
use crate::numerics::{
    gamma, hurwitz_zeta_num, real_pow, riemann_zeta_num, Complex64, EulerMaclaurinParams,
};
use crate::EvalError;
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use std::f64::consts::{PI, TAU};
use std::sync::LazyLock;

/// Symmetric truncation of a two-sided Fourier sum: indices
/// `1 <= |n| <= cutoff` are retained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FourierTruncation {
    cutoff: usize,
}

impl FourierTruncation {
    pub fn new(cutoff: usize) -> Result<Self, EvalError> {
        if cutoff == 0 {
            return Err(EvalError::DomainViolation("cutoff must be >= 1".into()));
        }
        Ok(FourierTruncation { cutoff })
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }
}

impl Default for FourierTruncation {
    fn default() -> Self {
        FourierTruncation { cutoff: 10_000 }
    }
}

/// The truncated constrained sum
/// `Σ ∏_i (2πi n_i)^{-p_i}` over integer tuples with `1 <= |n_i| <= cutoff`
/// and `Σ_i n_i = target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeSum {
    exponents: Vec<usize>,
    cutoff: usize,
    target: i64,
}

impl LatticeSum {
    pub fn new(exponents: Vec<usize>, cutoff: usize, target: i64) -> Result<Self, EvalError> {
        if exponents.is_empty() {
            return Err(EvalError::DomainViolation(
                "lattice sum needs at least one coordinate".into(),
            ));
        }
        if exponents.contains(&0) {
            return Err(EvalError::DomainViolation(
                "lattice exponents must be >= 1".into(),
            ));
        }
        if cutoff == 0 {
            return Err(EvalError::DomainViolation("cutoff must be >= 1".into()));
        }
        Ok(LatticeSum {
            exponents,
            cutoff,
            target,
        })
    }

    /// Deterministic evaluation: the free coordinates run in ascending
    /// order and the last coordinate is solved from the constraint, so the
    /// result is bit-reproducible.
    pub fn evaluate(&self) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        self.walk(0, 0, Complex64::new(1.0, 0.0), &mut acc);
        acc
    }

    fn walk(&self, idx: usize, partial: i64, prod: Complex64, acc: &mut Complex64) {
        let n_max = self.cutoff as i64;
        if idx == self.exponents.len() - 1 {
            let n_last = self.target - partial;
            if n_last != 0 && n_last.abs() <= n_max {
                *acc += prod * inv_pow_two_pi_i(n_last, self.exponents[idx]);
            }
            return;
        }
        for n in -n_max..=n_max {
            if n == 0 {
                continue;
            }
            self.walk(
                idx + 1,
                partial + n,
                prod * inv_pow_two_pi_i(n, self.exponents[idx]),
                acc,
            );
        }
    }
}

/// `(2πi n)^{-p}` with the unit factor `i^{-p}` taken from an exact
/// quarter-turn table, so conjugate index pairs cancel exactly.
fn inv_pow_two_pi_i(n: i64, p: usize) -> Complex64 {
    const INV_I_POW: [(f64, f64); 4] = [(1.0, 0.0), (0.0, -1.0), (-1.0, 0.0), (0.0, 1.0)];
    let (re, im) = INV_I_POW[p % 4];
    let unit = if n > 0 {
        Complex64::new(re, im)
    } else {
        Complex64::new(re, -im)
    };
    unit * (TAU * n.abs() as f64).powi(-(p as i32))
}

fn factorial_f64(m: usize) -> f64 {
    (1..=m).fold(1.0, |acc, i| acc * i as f64)
}

fn factorial_big(m: usize) -> BigInt {
    (1..=m).fold(BigInt::from(1), |acc, i| acc * BigInt::from(i))
}

/// `cos(2πnx - mπ/2)` split so the quarter turn is exact.
fn quarter_turn_cos(n: usize, x: f64, m: usize) -> f64 {
    const COS_SIN: [(f64, f64); 4] = [(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)];
    let theta = TAU * (n as f64 * x).fract();
    let (c4, s4) = COS_SIN[m % 4];
    c4 * theta.cos() + s4 * theta.sin()
}

/// Truncated Fourier series of the periodic Bernoulli function:
/// `-m! Σ_{0<|n|<=N} e^{2πinx}/(2πin)^m`, paired into the real form
/// `-m! Σ_{n=1}^{N} 2 cos(2πnx - mπ/2)/(2πn)^m`; converges to `B_m(x)` on
/// `[0, 1]` for `m >= 2` and on the open interval for `m = 1` (at the
/// endpoints the sawtooth series converges to 0, not `B_1`).
pub fn bernoulli_fourier_partial(
    m: usize,
    alpha: f64,
    trunc: &FourierTruncation,
) -> Result<f64, EvalError> {
    if !alpha.is_finite() || !(0.0..=1.0).contains(&alpha) {
        return Err(EvalError::DomainViolation(format!(
            "alpha = {alpha} outside [0, 1]"
        )));
    }
    if m == 0 {
        return Err(EvalError::DomainViolation(
            "index m must be >= 1".into(),
        ));
    }
    if m == 1 && (alpha == 0.0 || alpha == 1.0) {
        return Err(EvalError::DomainViolation(
            "m = 1 series converges to the midpoint, not B_1, at the endpoints".into(),
        ));
    }
    let mut sum = 0.0;
    for n in 1..=trunc.cutoff() {
        sum += 2.0 * quarter_turn_cos(n, alpha, m) * (TAU * n as f64).powi(-(m as i32));
    }
    Ok(-factorial_f64(m) * sum)
}

/// Truncated Hurwitz-formula Fourier series
/// `Γ(1-s) Σ_{0<|n|<=N} e^{2πinx} (2πin)^{s-1}` for `Re s < 1` and
/// `0 < x < 1`, with `(2πin)^{s-1} = exp((s-1)(ln(2π|n|) ± iπ/2))`.
pub fn hurwitz_fourier_partial(
    s: Complex64,
    alpha: f64,
    trunc: &FourierTruncation,
) -> Result<Complex64, EvalError> {
    if !s.re.is_finite() || !s.im.is_finite() || s.re >= 1.0 {
        return Err(EvalError::DomainViolation(format!(
            "s = {s} must have Re s < 1"
        )));
    }
    if !alpha.is_finite() || alpha <= 0.0 || alpha >= 1.0 {
        return Err(EvalError::DomainViolation(format!(
            "alpha = {alpha} outside (0, 1)"
        )));
    }
    let half_turn = Complex64::new(0.0, PI / 2.0);
    let mut sum = Complex64::new(0.0, 0.0);
    for n in 1..=trunc.cutoff() {
        let theta = TAU * (n as f64 * alpha).fract();
        let phase = Complex64::new(0.0, theta).exp();
        let ln_mod = (TAU * n as f64).ln();
        let pos = ((s - 1.0) * (ln_mod + half_turn)).exp();
        let neg = ((s - 1.0) * (ln_mod - half_turn)).exp();
        sum += phase * pos + phase.conj() * neg;
    }
    Ok(gamma(Complex64::new(1.0, 0.0) - s)? * sum)
}

/// Closed form of `∫_0^1 ζ(s1, x) ζ(s2, x) dx` for `Re(s1+s2) < 1`:
/// `2 (2π)^{s1+s2-2} cos(π(s1-s2)/2) Γ(1-s1) Γ(1-s2) ζ(2-s1-s2)`.
pub fn parseval_rhs(
    s1: Complex64,
    s2: Complex64,
    params: &EulerMaclaurinParams,
) -> Result<Complex64, EvalError> {
    check_parseval_domain(s1, s2, false)?;
    let g1 = gamma(Complex64::new(1.0, 0.0) - s1)?;
    let g2 = gamma(Complex64::new(1.0, 0.0) - s2)?;
    let zeta = riemann_zeta_num(Complex64::new(2.0, 0.0) - s1 - s2, params)?;
    let cos = ((s1 - s2) * (PI / 2.0)).cos();
    Ok(2.0 * real_pow(TAU, s1 + s2 - 2.0) * cos * g1 * g2 * zeta)
}

/// Quadrature of `∫_0^1 ζ(s1, x) ζ(s2, x) dx` for `Re s1 < 1`,
/// `Re s2 < 1`, `Re(s1+s2) < 1`: fixed-order Gauss–Legendre panels on a
/// dyadic subdivision of `(0, 1]` graded toward the integrable endpoint
/// singularity `x^{-s1-s2}`.
pub fn parseval_lhs_num(
    s1: Complex64,
    s2: Complex64,
    params: &EulerMaclaurinParams,
) -> Result<Complex64, EvalError> {
    check_parseval_domain(s1, s2, true)?;
    let mut total = Complex64::new(0.0, 0.0);
    let mut upper = 1.0_f64;
    for panel in 0..QUADRATURE_PANELS {
        let lower = if panel + 1 == QUADRATURE_PANELS {
            0.0
        } else {
            upper / 2.0
        };
        let mid = 0.5 * (upper + lower);
        let half = 0.5 * (upper - lower);
        for (&x, &w) in GAUSS_NODES.0.iter().zip(GAUSS_NODES.1.iter()) {
            let alpha = mid + half * x;
            let f = hurwitz_zeta_num(s1, alpha, params)? * hurwitz_zeta_num(s2, alpha, params)?;
            total += w * half * f;
        }
        upper = lower;
    }
    Ok(total)
}

fn check_parseval_domain(
    s1: Complex64,
    s2: Complex64,
    each_below_one: bool,
) -> Result<(), EvalError> {
    for s in [s1, s2] {
        if !s.re.is_finite() || !s.im.is_finite() {
            return Err(EvalError::DomainViolation(format!(
                "s = {s} has non-finite components"
            )));
        }
    }
    if each_below_one && (s1.re >= 1.0 || s2.re >= 1.0) {
        return Err(EvalError::DomainViolation(
            "both exponents must have real part < 1".into(),
        ));
    }
    if s1.re + s2.re >= 1.0 {
        return Err(EvalError::DomainViolation(format!(
            "Re(s1 + s2) = {} must be < 1",
            s1.re + s2.re
        )));
    }
    Ok(())
}

const QUADRATURE_PANELS: usize = 40;
const GAUSS_ORDER: usize = 16;

static GAUSS_NODES: LazyLock<(Vec<f64>, Vec<f64>)> =
    LazyLock::new(|| gauss_legendre(GAUSS_ORDER));

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Nodes and weights of `n`-point Gauss–Legendre quadrature on `[-1, 1]`,
/// by Newton refinement of Chebyshev initial guesses.
fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..64 {
            let (p, dp) = legendre_with_derivative(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_with_derivative(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[n - 1 - i] = x;
        nodes[i] = -x;
        weights[n - 1 - i] = w;
        weights[i] = w;
    }
    (nodes, weights)
}

/// Both sides of the Parseval identity at `s1 = -a`, `s2 = -b`, rendered
/// exactly in the rationals.
///
/// Left: `∫_0^1 B_{a+1}(x) B_{b+1}(x) dx / ((a+1)(b+1))` by polynomial
/// multiplication and integration. Right: zero when `a + b` is odd (the
/// cosine factor vanishes); otherwise
/// `(-1)^a a! b! B_{a+b+2} / (a+b+2)!`, which is the closed form with
/// `ζ(2n) = (-1)^{n+1} B_{2n} (2π)^{2n} / (2 (2n)!)` substituted so every
/// power of `π` cancels.
pub fn parseval_exact_negint(a: usize, b: usize) -> (BigRational, BigRational) {
    let product = &bernoulli_poly(a + 1) * &bernoulli_poly(b + 1);
    let lhs = product.integrate_01() / rat_int(((a + 1) * (b + 1)) as i64);

    let rhs = if (a + b) % 2 == 1 {
        BigRational::zero()
    } else {
        let sign = if a.is_multiple_of(2) { 1 } else { -1 };
        rat_int(sign)
            * BigRational::from_integer(factorial_big(a) * factorial_big(b))
            * bernoulli_number(a + b + 2)
            / BigRational::from_integer(factorial_big(a + b + 2))
    };
    (lhs, rhs)
}

/// Exact nested-coefficient form of the mean of a Bernoulli-polynomial
/// product:
/// `Σ_{k_1=0}^{m_1+1} ... Σ_{k_r=0}^{m_r+1}
///   [Π_i B_{k_i} C(m_i+1, k_i)] / (1 + Σ_i (m_i+1-k_i))`,
/// equal to `∫_0^1 Π_i B_{m_i+1}(x) dx`.
pub fn prop2_lhs(m_list: &[usize]) -> Result<BigRational, EvalError> {
    if m_list.is_empty() {
        return Err(EvalError::DomainViolation(
            "need at least one factor".into(),
        ));
    }
    let mut total = BigRational::zero();
    let mut index = vec![0usize; m_list.len()];
    loop {
        let mut coeff = BigRational::from_integer(BigInt::from(1));
        let mut weight = 1i64;
        for (i, &m) in m_list.iter().enumerate() {
            let k = index[i];
            coeff *= binomial_rat(m as u64 + 1, k as u64) * bernoulli_number(k);
            weight += (m + 1 - k) as i64;
        }
        total += coeff / rat_int(weight);

        // odometer over 0..=m_i+1 per digit
        let mut pos = 0;
        loop {
            if pos == index.len() {
                return Ok(total);
            }
            index[pos] += 1;
            if index[pos] <= m_list[pos] + 1 {
                break;
            }
            index[pos] = 0;
            pos += 1;
        }
    }
}

/// Shared admission rule for the truncated lattice sums. A single factor
/// is always admitted (its constrained sum is empty or a single term).
/// For `r >= 3` the sum is refused unless `Σ (m_i + 1) >= r + 2`, where
/// the dyadic truncation tail is no longer provably negligible. Pairs are
/// always admitted: the constraint reduces them to a one-dimensional sum
/// with exponent `Σ (m_i + 1) >= 2`, which converges absolutely.
fn lattice_admission(m_list: &[usize]) -> Result<(), EvalError> {
    if m_list.is_empty() {
        return Err(EvalError::DomainViolation(
            "need at least one factor".into(),
        ));
    }
    let r = m_list.len();
    let weight: usize = m_list.iter().map(|&m| m + 1).sum();
    if r >= 3 && weight < r + 2 {
        return Err(EvalError::ConvergenceUnsafe(format!(
            "lattice sum with exponent weight {weight} over {r} factors \
             converges too slowly for a trustworthy truncation"
        )));
    }
    Ok(())
}

/// Truncated lattice-sum side of the product-mean identity:
/// `(-1)^r Π_i (m_i+1)! · Σ_{Σn_i=0, 1<=|n_i|<=N} Π_i (2πi n_i)^{-(m_i+1)}`.
/// Converges to [`prop2_lhs`] as the cutoff grows; the imaginary part
/// cancels in conjugate pairs and stays below `1e-10`.
pub fn prop2_rhs_truncated(
    m_list: &[usize],
    trunc: &FourierTruncation,
) -> Result<f64, EvalError> {
    let value = product_fourier_coeff(m_list, 0, trunc)?;
    debug_assert!(value.im.abs() <= 1e-10);
    Ok(value.re)
}

/// Truncated Fourier coefficient of `Π_i B_{m_i+1}(x)`:
/// `(-1)^r Π_i (m_i+1)! · Σ_{Σn_i=target} Π_i (2πi n_i)^{-(m_i+1)}`.
pub fn product_fourier_coeff(
    m_list: &[usize],
    target: i64,
    trunc: &FourierTruncation,
) -> Result<Complex64, EvalError> {
    lattice_admission(m_list)?;
    let exponents: Vec<usize> = m_list.iter().map(|&m| m + 1).collect();
    let lattice = LatticeSum::new(exponents, trunc.cutoff(), target)?;
    let mut prefactor = if m_list.len().is_multiple_of(2) { 1.0 } else { -1.0 };
    for &m in m_list {
        prefactor *= factorial_f64(m + 1);
    }
    Ok(prefactor * lattice.evaluate())
}

/// One row of a truncation sweep: approximation against its exact
/// reference at a given cutoff.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceRow {
    pub cutoff: usize,
    pub approximation: f64,
    pub reference: f64,
    pub abs_error: f64,
}

impl ConvergenceRow {
    fn new(cutoff: usize, approximation: f64, reference: f64) -> Self {
        ConvergenceRow {
            cutoff,
            approximation,
            reference,
            abs_error: (approximation - reference).abs(),
        }
    }
}

/// Sweep of [`prop2_rhs_truncated`] against the exact [`prop2_lhs`].
pub fn prop2_convergence(
    m_list: &[usize],
    cutoffs: &[usize],
) -> Result<Vec<ConvergenceRow>, EvalError> {
    let reference = prop2_lhs(m_list)?.to_f64().unwrap();
    cutoffs
        .iter()
        .map(|&n| {
            let approx = prop2_rhs_truncated(m_list, &FourierTruncation::new(n)?)?;
            Ok(ConvergenceRow::new(n, approx, reference))
        })
        .collect()
}

/// Sweep of [`bernoulli_fourier_partial`] against the exact polynomial
/// value `B_m(alpha)`.
pub fn bernoulli_fourier_convergence(
    m: usize,
    alpha: f64,
    cutoffs: &[usize],
) -> Result<Vec<ConvergenceRow>, EvalError> {
    let reference = bernoulli_poly(m).eval_f64(alpha);
    cutoffs
        .iter()
        .map(|&n| {
            let approx = bernoulli_fourier_partial(m, alpha, &FourierTruncation::new(n)?)?;
            Ok(ConvergenceRow::new(n, approx, reference))
        })
        .collect()
}

/// Exact Fourier coefficient `∫_0^1 p(x) e^{-2πi t x} dx` of a polynomial
/// with `t != 0`, by repeated integration by parts: with `c = -2πit` and
/// `e^c = 1`, the value is `Σ_j (-1)^j (p^{(j)}(1) - p^{(j)}(0)) / c^{j+1}`.
pub fn poly_fourier_coeff(p: &RationalPoly, t: i64) -> Result<Complex64, EvalError> {
    if t == 0 {
        return Err(EvalError::DomainViolation(
            "t = 0 is the plain integral; use integrate_01".into(),
        ));
    }
    let c = Complex64::new(0.0, -TAU * t as f64);
    let mut value = Complex64::new(0.0, 0.0);
    let mut derivative = p.clone();
    let mut c_power = c;
    let mut sign = 1.0;
    while !derivative.is_zero() {
        let jump = (derivative.eval(&rat_int(1)) - derivative.eval(&rat_int(0)))
            .to_f64()
            .unwrap();
        value += sign * jump / c_power;
        derivative = derivative.derivative();
        c_power *= c;
        sign = -sign;
    }
    Ok(value)
}
