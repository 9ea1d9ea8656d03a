//! Arbitrary-precision rational arithmetic and dense univariate polynomials.
//!
//! [`BigRational`] (re-exported from `num-rational`) is the carrier of every
//! exact result in this crate: values are always kept in canonical form
//! (positive denominator, fully reduced), so equality of values is equality
//! of representations.
//!
//! [`RationalPoly`] stores coefficients in ascending degree order. The
//! representation is canonical: the vector is empty for the zero polynomial
//! and the last element is nonzero otherwise.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub use num_rational::BigRational;

/// Rational `num/den` from machine integers. Panics if `den` is zero.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from a machine integer.
pub fn rat_int(num: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(num))
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
///
/// Computed by the multiplicative formula with stepwise exact division;
/// every intermediate quotient is an integer because it equals
/// `C(n - k + i, i)`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}

/// `C(n, k)` as a rational, for use in coefficient formulas.
pub fn binomial_rat(n: u64, k: u64) -> BigRational {
    BigRational::from_integer(binomial(n, k))
}

/// Dense univariate polynomial with exact rational coefficients.
///
/// `coeffs[i]` is the coefficient of the `i`-th power of the variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPoly {
    coeffs: Vec<BigRational>,
}

impl RationalPoly {
    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        RationalPoly { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// A constant polynomial (the zero polynomial when `c` is zero).
    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `c·x^deg`.
    pub fn monomial(c: BigRational, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        coeffs[deg] = c;
        RationalPoly { coeffs }
    }

    /// The variable itself, `x`.
    pub fn var() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    /// Construct from coefficients in ascending degree order; trailing
    /// zeros are stripped.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = RationalPoly { coeffs };
        p.normalize();
        p
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of the `i`-th power (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Coefficients in ascending degree order (canonical form).
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Nonzero monomials as `(degree, coefficient)` pairs, ascending.
    pub fn monomials(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
    }

    /// Exact Horner evaluation at a rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation with coefficients rounded to `f64`.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    /// Multiply every coefficient by `c`.
    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Exact composition `p(x + offset)` by Horner in the polynomial ring.
    pub fn translate(&self, offset: &BigRational) -> Self {
        let linear = Self::from_coeffs(vec![offset.clone(), BigRational::one()]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &linear) + &Self::constant(c.clone());
        }
        acc
    }

    /// `p(x + 1)`.
    pub fn shift(&self) -> Self {
        self.translate(&BigRational::one())
    }

    /// Exact value of the integral of `p` over `[0, 1]`: `Σ c_j / (j + 1)`.
    pub fn integrate_01(&self) -> BigRational {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| c / rat_int(j as i64 + 1))
            .sum()
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigRational::zero());
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / rat_int(j as i64 + 1));
        }
        Self::from_coeffs(coeffs)
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| c * rat_int(j as i64))
            .collect();
        Self::from_coeffs(coeffs)
    }
}

impl Add for &RationalPoly {
    type Output = RationalPoly;
    fn add(self, other: Self) -> RationalPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        RationalPoly::from_coeffs(coeffs)
    }
}

impl Sub for &RationalPoly {
    type Output = RationalPoly;
    fn sub(self, other: Self) -> RationalPoly {
        self + &(-other)
    }
}

impl Neg for &RationalPoly {
    type Output = RationalPoly;
    fn neg(self) -> RationalPoly {
        RationalPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &RationalPoly {
    type Output = RationalPoly;
    fn mul(self, other: Self) -> RationalPoly {
        if self.is_zero() || other.is_zero() {
            return RationalPoly::zero();
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RationalPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for RationalPoly {
    /// Human-readable form in descending powers, variable `a`,
    /// e.g. `a^2 - a + 1/6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.monomials().collect::<Vec<_>>().into_iter().rev() {
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
            let unit = mag.is_one();
            match (deg, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "a")?,
                (1, false) => write!(f, "{mag}*a")?,
                (_, true) => write!(f, "a^{deg}")?,
                (_, false) => write!(f, "{mag}*a^{deg}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(coeffs: &[(i64, i64)]) -> RationalPoly {
        RationalPoly::from_coeffs(coeffs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(7, 0), BigInt::one());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 5), BigInt::zero());
    }

    #[test]
    fn binomial_matches_pascal_recurrence() {
        // Independent oracle: build Pascal's triangle by addition only.
        let mut row = vec![BigInt::one()];
        for n in 1..=64u64 {
            let mut next = vec![BigInt::one()];
            for k in 1..n {
                next.push(&row[(k - 1) as usize] + &row[k as usize]);
            }
            next.push(BigInt::one());
            row = next;
            for k in 0..=n {
                assert_eq!(binomial(n, k), row[k as usize], "C({n},{k})");
            }
        }
    }

    #[test]
    fn mul_hand_expansion() {
        // (a - 1/2)^2 = a^2 - a + 1/4
        let p = poly(&[(-1, 2), (1, 1)]);
        assert_eq!(&p * &p, poly(&[(1, 4), (-1, 1), (1, 1)]));
    }

    #[test]
    fn mul_identity_and_annihilator() {
        let p = poly(&[(1, 6), (-1, 1), (1, 1)]);
        assert_eq!(&p * &RationalPoly::one(), p);
        assert!((&p * &RationalPoly::zero()).is_zero());
    }

    #[test]
    fn degree_of_product_adds() {
        let p = poly(&[(1, 1), (0, 1), (2, 1)]);
        let q = poly(&[(3, 1), (1, 1)]);
        assert_eq!((&p * &q).degree(), Some(3));
    }

    #[test]
    fn integrate_01_examples() {
        assert_eq!(RationalPoly::one().integrate_01(), rat_int(1));
        assert_eq!(poly(&[(-1, 2), (1, 1)]).integrate_01(), rat_int(0));
        assert_eq!(RationalPoly::monomial(rat_int(1), 2).integrate_01(), rat(1, 3));
    }

    #[test]
    fn translate_examples() {
        let x = RationalPoly::var();
        assert_eq!(x.shift(), poly(&[(1, 1), (1, 1)]));
        let x2 = RationalPoly::monomial(rat_int(1), 2);
        assert_eq!(x2.shift(), poly(&[(1, 1), (2, 1), (1, 1)]));
        let c = RationalPoly::constant(rat(7, 3));
        assert_eq!(c.shift(), c);
    }

    #[test]
    fn eval_examples() {
        let p = poly(&[(1, 6), (-1, 1), (1, 1)]); // a^2 - a + 1/6
        assert_eq!(p.eval(&rat_int(0)), rat(1, 6));
        assert_eq!(p.eval(&rat(1, 4)), rat(-1, 48));
        let q = poly(&[(-1, 2), (1, 1)]);
        assert_eq!(q.eval(&rat(1, 2)), rat_int(0));
    }

    #[test]
    fn display_form() {
        assert_eq!(poly(&[(1, 6), (-1, 1), (1, 1)]).to_string(), "a^2 - a + 1/6");
        assert_eq!(poly(&[(1, 2), (-1, 1)]).to_string(), "-a + 1/2");
        assert_eq!(RationalPoly::zero().to_string(), "0");
        assert_eq!(poly(&[(0, 1), (1, 2)]).to_string(), "1/2*a");
    }

    fn arb_rat() -> impl Strategy<Value = BigRational> {
        (-9i64..=9, 1i64..=9).prop_map(|(n, d)| rat(n, d))
    }

    fn arb_poly() -> impl Strategy<Value = RationalPoly> {
        prop::collection::vec(arb_rat(), 0..=13).prop_map(RationalPoly::from_coeffs)
    }

    proptest! {
        #[test]
        fn eval_is_ring_homomorphism(p in arb_poly(), q in arb_poly()) {
            for x in [rat_int(0), rat_int(1), rat(-1, 2), rat(2, 3), rat_int(-3)] {
                prop_assert_eq!(
                    (&p * &q).eval(&x),
                    p.eval(&x) * q.eval(&x)
                );
            }
        }

        #[test]
        fn integral_matches_antiderivative(p in arb_poly()) {
            let f = p.antiderivative();
            prop_assert_eq!(p.integrate_01(), f.eval(&rat_int(1)) - f.eval(&rat_int(0)));
            prop_assert_eq!(f.derivative(), p);
        }

        #[test]
        fn translate_round_trip(p in arb_poly()) {
            let back = p.translate(&rat_int(-1)).shift();
            prop_assert_eq!(back, p);
        }
    }
}
