//! Verification suites surfacing the library's identity checks as
//! reportable cases.

use crate::render::VerificationReport;
use clap::ValueEnum;
use mzv_core::bernoulli::bernoulli_poly;
use mzv_core::exact::{rat, rat_int, BigRational, RationalPoly};
use mzv_core::fourier::{
    bernoulli_fourier_partial, hurwitz_fourier_partial, parseval_exact_negint, parseval_lhs_num,
    parseval_rhs, prop2_lhs, prop2_rhs_truncated, FourierTruncation,
};
use mzv_core::numerics::{
    bernoulli_function, hurwitz_zeta_num, riemann_zeta_num, Complex64, EulerMaclaurinParams,
};
use mzv_core::zetasym::{
    hurwitz_neg_poly, hurwitz_neg_poly_shifted, hurwitz_neg_via_lemma3, mzv_eval_exact,
    mzv_reduce, mzv_theorem_k3, zeta_neg, MZVSpec,
};
use num_traits::{One, ToPrimitive, Zero};
use std::f64::consts::PI;

const ALPHA_GRID: [f64; 6] = [0.1, 0.25, 0.5, 0.9, 1.0, 2.5];

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Forward-difference identities for both polynomial families.
    Lemmas,
    /// Equality of the two exact routes to the zeta polynomial.
    Prop1,
    /// Product means: nested coefficient sum, integral, lattice sum.
    Prop2,
    /// Parseval pairs, exact and numeric.
    Parseval,
    /// Fourier partial-sum convergence spot checks.
    Fourier,
    /// Closed form vs recursion and vs numeric continuation.
    MzvCrosscheck,
    /// Floating layer against exact rational values.
    Numerics,
}

pub fn run_suite(suite: Suite, max_m: Option<usize>) -> VerificationReport {
    match suite {
        Suite::Lemmas => lemmas(max_m.unwrap_or(30)),
        Suite::Prop1 => prop1(max_m.unwrap_or(30)),
        Suite::Prop2 => prop2(),
        Suite::Parseval => parseval(),
        Suite::Fourier => fourier(),
        Suite::MzvCrosscheck => mzv_crosscheck(max_m.unwrap_or(10)),
        Suite::Numerics => numerics(),
    }
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn lemmas(max_m: usize) -> VerificationReport {
    let mut report = VerificationReport::new("lemmas");
    for m in 0..=max_m {
        let lhs = &hurwitz_neg_poly(m) - &hurwitz_neg_poly_shifted(m);
        let rhs = RationalPoly::monomial(BigRational::one(), m);
        report.push_exact(
            format!("zeta-diff m={m}"),
            lhs == rhs,
            lhs.to_string(),
            rhs.to_string(),
        );

        let b = bernoulli_poly(m);
        let lhs = &b.shift() - &b;
        let rhs = if m == 0 {
            RationalPoly::zero()
        } else {
            RationalPoly::monomial(rat_int(m as i64), m - 1)
        };
        report.push_exact(
            format!("bernoulli-diff m={m}"),
            lhs == rhs,
            lhs.to_string(),
            rhs.to_string(),
        );
    }
    report
}

fn prop1(max_m: usize) -> VerificationReport {
    let mut report = VerificationReport::new("prop1");
    for m in 0..=max_m {
        let lhs = hurwitz_neg_via_lemma3(m);
        let rhs = hurwitz_neg_poly(m);
        report.push_exact(
            format!("m={m}"),
            lhs == rhs,
            lhs.to_string(),
            rhs.to_string(),
        );
    }
    report
}

fn prop2() -> VerificationReport {
    let mut report = VerificationReport::new("prop2");
    for r in 1..=3usize {
        let mut m_list = vec![0usize; r];
        loop {
            let lhs = prop2_lhs(&m_list).unwrap();
            let rhs = m_list
                .iter()
                .fold(RationalPoly::one(), |acc, &m| &acc * &bernoulli_poly(m + 1))
                .integrate_01();
            report.push_exact(
                format!("nested-vs-integral {m_list:?}"),
                lhs == rhs,
                lhs.to_string(),
                rhs.to_string(),
            );

            let mut pos = 0;
            loop {
                if pos == r {
                    break;
                }
                m_list[pos] += 1;
                if m_list[pos] <= 4 {
                    break;
                }
                m_list[pos] = 0;
                pos += 1;
            }
            if pos == r {
                break;
            }
        }
    }

    let lattice = prop2_rhs_truncated(&[1, 1], &FourierTruncation::new(5000).unwrap()).unwrap();
    report.push_numeric("lattice (1,1) N=5000".into(), lattice, 1.0 / 180.0, 1e-6);

    for m in 0..=4usize {
        let v = prop2_rhs_truncated(&[m], &FourierTruncation::new(100).unwrap()).unwrap();
        report.push_exact(
            format!("single-factor m={m}"),
            v == 0.0,
            format!("{v}"),
            "0".into(),
        );
    }
    report
}

fn parseval() -> VerificationReport {
    let mut report = VerificationReport::new("parseval");
    for a in 0..=8usize {
        for b in 0..=8usize {
            let (lhs, rhs) = parseval_exact_negint(a, b);
            let forced_zero_ok = (a + b) % 2 == 0 || lhs.is_zero();
            report.push_exact(
                format!("exact ({a},{b})"),
                lhs == rhs && forced_zero_ok,
                lhs.to_string(),
                rhs.to_string(),
            );
        }
    }
    let params = EulerMaclaurinParams::default();
    let lhs = parseval_lhs_num(c(-0.3), c(-0.4), &params).unwrap();
    let rhs = parseval_rhs(c(-0.3), c(-0.4), &params).unwrap();
    report.push_numeric("numeric (-0.3,-0.4)".into(), lhs.re, rhs.re, 1e-6);
    report
}

fn fourier() -> VerificationReport {
    let mut report = VerificationReport::new("fourier");
    let trunc = FourierTruncation::new(10_000).unwrap();

    let approx = bernoulli_fourier_partial(3, 0.3, &trunc).unwrap();
    report.push_numeric(
        "bernoulli m=3 alpha=0.3 N=10^4".into(),
        approx,
        bernoulli_poly(3).eval_f64(0.3),
        1e-6,
    );

    let approx = hurwitz_fourier_partial(c(-2.0), 0.4, &trunc).unwrap();
    report.push_numeric(
        "hurwitz s=-2 alpha=0.4 N=10^4".into(),
        approx.re,
        hurwitz_neg_poly(2).eval_f64(0.4),
        1e-5,
    );

    let sawtooth = bernoulli_fourier_partial(1, 0.5, &trunc).unwrap();
    report.push_numeric("sawtooth midpoint".into(), sawtooth, 0.0, 1e-12);

    let sym = hurwitz_fourier_partial(c(-1.0), 0.5, &trunc).unwrap();
    report.push_numeric("conjugate-pair imaginary".into(), sym.im, 0.0, 1e-12);
    report
}

fn mzv_crosscheck(max_m: usize) -> VerificationReport {
    let mut report = VerificationReport::new("mzv-crosscheck");
    for m2 in 0..=max_m {
        for m3 in 0..=max_m {
            let lhs = mzv_theorem_k3(m2, m3);
            let rhs = mzv_reduce(&MZVSpec::new(vec![m2, m3]));
            report.push_exact(
                format!("closed-form ({m2},{m3})"),
                lhs == rhs,
                lhs.to_string(),
                rhs.to_string(),
            );
        }
    }

    let depth2 = mzv_reduce(&MZVSpec::new(vec![0]));
    let expected = {
        let mut c = mzv_core::zetasym::ZetaCombination::new();
        c.add_term(1, rat_int(-1));
        c.add_term(0, rat(-1, 2));
        c
    };
    report.push_exact(
        "depth-2 hand oracle".into(),
        depth2 == expected,
        depth2.to_string(),
        expected.to_string(),
    );

    let value = mzv_eval_exact(&MZVSpec::new(vec![0, 0]), 0);
    report.push_exact(
        "exact value (0,0) at s1=0".into(),
        value == rat(-1, 4),
        value.to_string(),
        "-1/4".into(),
    );

    let params = EulerMaclaurinParams::default();
    for m2 in 0..=3usize {
        for m3 in 0..=3usize {
            let p3 = hurwitz_neg_poly_shifted(m3);
            let p2 = mzv_reduce(&MZVSpec::new(vec![m2, m3]));
            for n in [1i64, 5, 10] {
                let mut assembled = 0.0;
                for (e, coeff) in p3.monomials() {
                    let z = hurwitz_zeta_num(c(-((m2 + e) as f64)), n as f64 + 1.0, &params)
                        .unwrap();
                    assembled += coeff.to_f64().unwrap() * z.re;
                }
                let exact: BigRational = p2
                    .terms()
                    .map(|(e, coeff)| coeff * rat_int(n).pow(e as i32))
                    .sum();
                let exact = exact.to_f64().unwrap();
                report.push_numeric(
                    format!("continuation ({m2},{m3}) n={n}"),
                    assembled,
                    exact,
                    1e-9 * exact.abs(),
                );
            }
        }
    }
    report
}

fn numerics() -> VerificationReport {
    let mut report = VerificationReport::new("numerics");
    let params = EulerMaclaurinParams::default();

    for m in 0..=10usize {
        let poly = hurwitz_neg_poly(m);
        for &alpha in &ALPHA_GRID {
            let num = hurwitz_zeta_num(c(-(m as f64)), alpha, &params).unwrap();
            report.push_numeric(
                format!("hurwitz (-{m},{alpha})"),
                num.re,
                poly.eval_f64(alpha),
                1e-10,
            );
        }
    }

    let basel = riemann_zeta_num(c(2.0), &params).unwrap();
    report.push_numeric("zeta(2)".into(), basel.re, PI * PI / 6.0, 1e-10);
    let z4 = riemann_zeta_num(c(4.0), &params).unwrap();
    report.push_numeric("zeta(4)".into(), z4.re, PI.powi(4) / 90.0, 1e-10);
    for m in 0..=10usize {
        let num = riemann_zeta_num(c(-(m as f64)), &params).unwrap();
        report.push_numeric(
            format!("zeta(-{m})"),
            num.re,
            zeta_neg(m).to_f64().unwrap(),
            1e-10,
        );
    }

    for m in 0..=8usize {
        let poly = bernoulli_poly(m);
        for &alpha in &ALPHA_GRID {
            let num = bernoulli_function(c(-(m as f64)), alpha, &params).unwrap();
            report.push_numeric(
                format!("bfunc (-{m},{alpha})"),
                num.re,
                poly.eval_f64(alpha),
                1e-9,
            );
        }
    }

    for &alpha in &ALPHA_GRID {
        let v = bernoulli_function(c(0.0), alpha, &params).unwrap();
        report.push_exact(
            format!("bfunc (0,{alpha}) contract"),
            v == c(1.0),
            crate::render::format_complex(v),
            "1".into(),
        );
    }
    report
}
