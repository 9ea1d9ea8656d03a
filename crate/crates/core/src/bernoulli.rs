//! Bernoulli numbers and polynomials, exact.
//!
//! Conventions: `B_n = B_n(0)`, so `B_1 = -1/2`; the shifted numbers are
//! `B̄_n = B_n(1)`, which differ from `B_n` only at `n = 1` where
//! `B̄_1 = 1/2`. Polynomials use the expansion
//! `B_m(x) = Σ_{k=0}^{m} C(m,k) B_k x^{m-k}`.

use crate::exact::{binomial_rat, rat, rat_int, BigRational, RationalPoly};
use num_traits::{One, Zero};
use std::sync::{LazyLock, Mutex};

/// Incrementally extended cache of the numbers `B_0, B_1, ...`.
///
/// Entry `n` is produced from all lower entries by the recurrence
/// `Σ_{k=0}^{n} C(n+1, k) B_k = 0`.
#[derive(Debug)]
pub struct BernoulliTable {
    values: Vec<BigRational>,
}

impl BernoulliTable {
    pub fn new() -> Self {
        BernoulliTable {
            values: vec![BigRational::one()],
        }
    }

    /// `B_n`, computing and caching any missing lower entries.
    pub fn get(&mut self, n: usize) -> BigRational {
        while self.values.len() <= n {
            let m = self.values.len(); // computing B_m
            let sum: BigRational = self
                .values
                .iter()
                .enumerate()
                .map(|(k, b)| binomial_rat(m as u64 + 1, k as u64) * b)
                .sum();
            self.values.push(-sum / rat_int(m as i64 + 1));
        }
        self.values[n].clone()
    }
}

impl Default for BernoulliTable {
    fn default() -> Self {
        Self::new()
    }
}

static TABLE: LazyLock<Mutex<BernoulliTable>> =
    LazyLock::new(|| Mutex::new(BernoulliTable::new()));

/// The Bernoulli number `B_n` (`B_1 = -1/2`).
pub fn bernoulli_number(n: usize) -> BigRational {
    TABLE.lock().unwrap().get(n)
}

/// The shifted Bernoulli number `B̄_n = B_n(1)`: equal to `B_n` except
/// `B̄_1 = B_1 + 1 = 1/2`.
pub fn bernoulli_bar(n: usize) -> BigRational {
    if n == 1 {
        rat(1, 2)
    } else {
        bernoulli_number(n)
    }
}

/// The Bernoulli polynomial `B_m(x)`, degree `m`, leading coefficient 1.
pub fn bernoulli_poly(m: usize) -> RationalPoly {
    expansion(m, bernoulli_number)
}

/// The shifted polynomial `Σ_{k=0}^{m} C(m,k) B̄_k x^{m-k}`, equal to
/// `B_m(x + 1)`.
pub fn bernoulli_bar_poly(m: usize) -> RationalPoly {
    expansion(m, bernoulli_bar)
}

fn expansion(m: usize, number: impl Fn(usize) -> BigRational) -> RationalPoly {
    let mut coeffs = vec![BigRational::zero(); m + 1];
    for k in 0..=m {
        coeffs[m - k] = binomial_rat(m as u64, k as u64) * number(k);
    }
    RationalPoly::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::binomial;
    use num_bigint::BigInt;

    fn poly(coeffs: &[(i64, i64)]) -> RationalPoly {
        RationalPoly::from_coeffs(coeffs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn first_numbers() {
        assert_eq!(bernoulli_number(0), rat_int(1));
        assert_eq!(bernoulli_number(1), rat(-1, 2));
        assert_eq!(bernoulli_number(2), rat(1, 6));
        assert_eq!(bernoulli_number(12), rat(-691, 2730));
    }

    #[test]
    fn odd_numbers_vanish() {
        for n in (3..=29).step_by(2) {
            assert!(bernoulli_number(n).is_zero(), "B_{n}");
        }
    }

    #[test]
    fn defining_recurrence_holds() {
        for n in 1..=40usize {
            let sum: BigRational = (0..=n)
                .map(|k| binomial_rat(n as u64 + 1, k as u64) * bernoulli_number(k))
                .sum();
            assert!(sum.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn shifted_numbers() {
        assert_eq!(bernoulli_bar(0), rat_int(1));
        assert_eq!(bernoulli_bar(1), rat(1, 2));
        assert_eq!(bernoulli_bar(4), rat(-1, 30));
    }

    #[test]
    fn small_polynomials() {
        assert_eq!(bernoulli_poly(0), RationalPoly::one());
        assert_eq!(bernoulli_poly(1), poly(&[(-1, 2), (1, 1)]));
        assert_eq!(bernoulli_poly(2), poly(&[(1, 6), (-1, 1), (1, 1)]));
        assert_eq!(bernoulli_bar_poly(0), RationalPoly::one());
        assert_eq!(bernoulli_bar_poly(1), poly(&[(1, 2), (1, 1)]));
        assert_eq!(bernoulli_bar_poly(2), poly(&[(1, 6), (1, 1), (1, 1)]));
    }

    #[test]
    fn forward_difference_identity() {
        // B_m(x+1) - B_m(x) = m x^{m-1}, exactly as polynomials.
        for m in 0..=30usize {
            let b = bernoulli_poly(m);
            let diff = &b.shift() - &b;
            let expected = if m == 0 {
                RationalPoly::zero()
            } else {
                RationalPoly::monomial(rat_int(m as i64), m - 1)
            };
            assert_eq!(diff, expected, "m = {m}");
        }
    }

    #[test]
    fn bar_poly_is_shift() {
        for m in 0..=30usize {
            assert_eq!(bernoulli_bar_poly(m), bernoulli_poly(m).shift(), "m = {m}");
        }
    }

    #[test]
    fn endpoint_values() {
        for m in 0..=20usize {
            let b = bernoulli_poly(m);
            assert_eq!(b.eval(&rat_int(0)), bernoulli_number(m));
            assert_eq!(b.eval(&rat_int(1)), bernoulli_bar(m));
        }
    }

    #[test]
    fn zero_mean_on_unit_interval() {
        for m in 1..=30usize {
            assert!(bernoulli_poly(m).integrate_01().is_zero(), "m = {m}");
        }
    }

    /// Generating-function oracle: the series of `z·e^{xz}/(e^z - 1)` is
    /// rebuilt by formal power-series division (coefficients are polynomials
    /// in `x`), with no reference to the Bernoulli recurrence, and compared
    /// coefficientwise through order 16.
    #[test]
    fn generating_function_series() {
        const ORDER: usize = 16;
        let mut factorial = vec![BigInt::from(1)];
        for n in 1..=ORDER as i64 + 1 {
            let last = factorial.last().unwrap().clone();
            factorial.push(last * BigInt::from(n));
        }
        let inv_fact = |n: usize| {
            BigRational::new(BigInt::from(1), factorial[n].clone())
        };

        // Numerator e^{xz}: coefficient of z^n is x^n/n!.
        let numer: Vec<RationalPoly> = (0..=ORDER)
            .map(|n| RationalPoly::monomial(inv_fact(n), n))
            .collect();
        // Denominator (e^z - 1)/z: coefficient of z^n is 1/(n+1)!.
        let denom: Vec<BigRational> = (0..=ORDER).map(|n| inv_fact(n + 1)).collect();

        // Power-series division: q_n = numer_n - Σ_{j=1}^{n} denom_j q_{n-j}.
        let mut quotient: Vec<RationalPoly> = Vec::with_capacity(ORDER + 1);
        for n in 0..=ORDER {
            let mut q = numer[n].clone();
            for j in 1..=n {
                q = &q - &quotient[n - j].scale(&denom[j]);
            }
            quotient.push(q);
        }

        for (n, q) in quotient.iter().enumerate() {
            assert_eq!(
                *q,
                bernoulli_poly(n).scale(&inv_fact(n)),
                "coefficient of z^{n}"
            );
        }
        // Spot-check the integer binomial path against the same series.
        assert_eq!(binomial(16, 8), BigInt::from(12870));
    }
}
