//! Exact zeta values at non-positive integers and the reduction of nested
//! zeta sums.
//!
//! For integer `m >= 0` the Hurwitz zeta function is polynomial in its
//! second argument: `ζ(-m, x) = -B_{m+1}(x)/(m+1)`, and shifting gives
//! `ζ(-m, x+1) = -B̄_{m+1}(x)/(m+1)`. Those two polynomials drive
//! everything here: a nested sum
//! `Σ_{n1≥1} n1^{-s1} Σ_{n2>n1} n2^{m2} ... Σ_{nk>n(k-1)} nk^{mk}`
//! collapses level by level (innermost first) into a finite rational
//! combination `Σ_e c_e ζ(s1 - e)`, represented by [`ZetaCombination`].

use crate::bernoulli::{bernoulli_bar, bernoulli_bar_poly, bernoulli_poly};
use crate::exact::{binomial_rat, rat_int, BigRational, RationalPoly};
use crate::numerics::{riemann_zeta_num, Complex64, EulerMaclaurinParams, POLE_TOLERANCE};
use crate::EvalError;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A finite combination `Σ_e c_e ζ(s - e)` with nonzero rational
/// coefficients and distinct non-negative integer shifts.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ZetaCombination {
    terms: BTreeMap<usize, BigRational>,
}

impl ZetaCombination {
    pub fn new() -> Self {
        Self::default()
    }

    /// The single term `c·ζ(s - shift)`.
    pub fn single(shift: usize, coeff: BigRational) -> Self {
        let mut c = Self::new();
        c.add_term(shift, coeff);
        c
    }

    /// Accumulate `coeff` onto `shift`, dropping the term if it cancels.
    pub fn add_term(&mut self, shift: usize, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(shift).or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&shift);
        }
    }

    /// Coefficient of `ζ(s - shift)`, zero if absent.
    pub fn coeff(&self, shift: usize) -> BigRational {
        self.terms
            .get(&shift)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Terms in ascending shift order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Terms in descending shift order (the canonical reporting order).
    pub fn terms_desc(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.terms.iter().rev().map(|(&e, c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest stored shift, if any term is present.
    pub fn max_shift(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }

    /// Reinterpret a polynomial `Σ c_e n^e` as `Σ c_e ζ(s - e)`.
    pub fn from_poly(p: &RationalPoly) -> Self {
        let mut comb = Self::new();
        for (e, c) in p.monomials() {
            comb.add_term(e, c.clone());
        }
        comb
    }
}

impl fmt::Display for ZetaCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (shift, c) in self.terms_desc() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            if shift == 0 {
                write!(f, "zeta(s)")?;
            } else {
                write!(f, "zeta(s-{shift})")?;
            }
        }
        Ok(())
    }
}

/// Trailing arguments `(m_2, ..., m_k)` of a nested zeta sum; the first
/// argument `s_1` is supplied at evaluation time. The empty list is the
/// plain Riemann zeta function (`k = 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MZVSpec {
    trailing_args: Vec<usize>,
}

impl MZVSpec {
    pub fn new(trailing_args: Vec<usize>) -> Self {
        MZVSpec { trailing_args }
    }

    /// Depth `k` of the nested sum.
    pub fn depth(&self) -> usize {
        self.trailing_args.len() + 1
    }

    pub fn trailing_args(&self) -> &[usize] {
        &self.trailing_args
    }
}

impl From<&[usize]> for MZVSpec {
    fn from(args: &[usize]) -> Self {
        MZVSpec::new(args.to_vec())
    }
}

/// Exact `ζ(-m) = -B̄_{m+1}/(m+1)`.
pub fn zeta_neg(m: usize) -> BigRational {
    -bernoulli_bar(m + 1) / rat_int(m as i64 + 1)
}

/// The polynomial `ζ(-m, x) = -B_{m+1}(x)/(m+1)`, degree `m + 1`.
pub fn hurwitz_neg_poly(m: usize) -> RationalPoly {
    bernoulli_poly(m + 1).scale(&-rat_int(m as i64 + 1).recip())
}

/// The polynomial `ζ(-m, x+1) = -B̄_{m+1}(x)/(m+1)`.
pub fn hurwitz_neg_poly_shifted(m: usize) -> RationalPoly {
    bernoulli_bar_poly(m + 1).scale(&-rat_int(m as i64 + 1).recip())
}

/// `ζ(-m, x)` rebuilt literally from the expansion
/// `Σ_{k=0}^{m} C(m,k) ζ(-k) x^{m-k} + x^m - x^{m+1}/(m+1)`,
/// an independent route that must agree with [`hurwitz_neg_poly`].
pub fn hurwitz_neg_via_lemma3(m: usize) -> RationalPoly {
    let mut p = RationalPoly::zero();
    for k in 0..=m {
        let c = binomial_rat(m as u64, k as u64) * zeta_neg(k);
        p = &p + &RationalPoly::monomial(c, m - k);
    }
    p = &p + &RationalPoly::monomial(BigRational::one(), m);
    &p - &RationalPoly::monomial(rat_int(m as i64 + 1).recip(), m + 1)
}

/// Level polynomials `[P_k, ..., P_2]` of the downward reduction.
///
/// `P_k(n) = ζ(-m_k, n+1)`; each step replaces a monomial `c·n^e` of
/// `P_j` by `c·ζ(-(m_{j-1} + e), n+1)`, the continuation of
/// `c·Σ_{n'>n} n'^{m_{j-1}+e}`. Empty for the depth-1 spec.
pub fn mzv_reduce_levels(spec: &MZVSpec) -> Vec<RationalPoly> {
    let args = spec.trailing_args();
    let Some((&last, rest)) = args.split_last() else {
        return Vec::new();
    };
    let mut levels = vec![hurwitz_neg_poly_shifted(last)];
    for &m in rest.iter().rev() {
        let prev = levels.last().unwrap();
        let mut next = RationalPoly::zero();
        for (e, c) in prev.monomials() {
            next = &next + &hurwitz_neg_poly_shifted(m + e).scale(c);
        }
        levels.push(next);
    }
    levels
}

/// Reduce the nested sum with trailing arguments `(-m_2, ..., -m_k)` to a
/// rational combination of shifted `ζ(s_1 - e)`. The depth-1 spec reduces
/// to `ζ(s_1)` itself.
pub fn mzv_reduce(spec: &MZVSpec) -> ZetaCombination {
    match mzv_reduce_levels(spec).last() {
        None => ZetaCombination::single(0, BigRational::one()),
        Some(p2) => ZetaCombination::from_poly(p2),
    }
}

/// The explicit depth-3 double sum: for trailing arguments `(-m2, -m3)`,
/// each pair `(k3, k2)` with `0 <= k3 <= m3+1` and
/// `0 <= k2 <= m2+m3+2-k3` contributes
/// `C(m3+1,k3)·B̄_{k3}/(m3+1) · C(M,k2)·B̄_{k2}/M` at shift `M - k2`,
/// where `M = m2+m3+2-k3`. Must agree with `mzv_reduce` on `(m2, m3)`.
pub fn mzv_theorem_k3(m2: usize, m3: usize) -> ZetaCombination {
    let mut comb = ZetaCombination::new();
    for k3 in 0..=m3 + 1 {
        let outer = binomial_rat(m3 as u64 + 1, k3 as u64) * bernoulli_bar(k3)
            / rat_int(m3 as i64 + 1);
        if outer.is_zero() {
            continue;
        }
        let cap = m2 + m3 + 2 - k3;
        for k2 in 0..=cap {
            let inner = binomial_rat(cap as u64, k2 as u64) * bernoulli_bar(k2)
                / rat_int(cap as i64);
            comb.add_term(cap - k2, &outer * &inner);
        }
    }
    comb
}

/// Exact value at `s_1 = -m_1`: `Σ_e c_e ζ(-(m_1 + e))`.
pub fn mzv_eval_exact(spec: &MZVSpec, m1: usize) -> BigRational {
    mzv_reduce(spec)
        .terms()
        .map(|(e, c)| c * zeta_neg(m1 + e))
        .sum()
}

/// Floating evaluation at a complex `s_1` satisfying the reduction's
/// hypothesis: `Re s_1 <= 0`, or `Re s_1 > 0` with `s_1` not an integer.
///
/// Reports `PoleHit` when `s_1 - e = 1` (within `1e-12`) for a stored
/// shift `e` — there the combination meets the pole of `ζ` — and
/// `DomainViolation` for other positive-integer `s_1`, which sit outside
/// the hypothesis. The pole check runs first: a pole point `s_1 = 1 + e`
/// is itself a positive integer, so the reverse order would never report
/// a pole at all.
pub fn mzv_eval_numeric(spec: &MZVSpec, s1: Complex64) -> Result<Complex64, EvalError> {
    if !s1.re.is_finite() || !s1.im.is_finite() {
        return Err(EvalError::DomainViolation(format!(
            "s1 = {s1} has non-finite components"
        )));
    }
    let comb = mzv_reduce(spec);
    for (e, _) in comb.terms() {
        if (s1 - Complex64::new(e as f64 + 1.0, 0.0)).norm() < POLE_TOLERANCE {
            return Err(EvalError::PoleHit(format!(
                "s1 - {e} = 1 meets the zeta pole with nonzero coefficient"
            )));
        }
    }
    if s1.im.abs() < POLE_TOLERANCE {
        let nearest = s1.re.round();
        if nearest >= 1.0 && (s1.re - nearest).abs() < POLE_TOLERANCE {
            return Err(EvalError::DomainViolation(format!(
                "s1 = {} is a positive integer, outside the hypothesis",
                s1.re
            )));
        }
    }
    let mut total = Complex64::new(0.0, 0.0);
    for (e, c) in comb.terms() {
        let arg = s1 - Complex64::new(e as f64, 0.0);
        let params = EulerMaclaurinParams::for_argument(arg);
        total += c.to_f64().unwrap() * riemann_zeta_num(arg, &params)?;
    }
    Ok(total)
}
