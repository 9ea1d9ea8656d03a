//! Output rendering: canonical rational strings, complex formatting, and
//! the JSON wire forms for combinations and verification reports.

use mzv_core::exact::{BigRational, RationalPoly};
use mzv_core::numerics::Complex64;
use mzv_core::zetasym::ZetaCombination;
use serde::{Deserialize, Serialize};

/// Canonical rational text: `p/q` with `q` omitted when it is 1.
pub fn format_rational(x: &BigRational) -> String {
    x.to_string()
}

/// Complex text in the same syntax the flags accept.
pub fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im < 0.0 {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub shift: usize,
    pub coeff: String,
}

/// Wire form of a combination: terms sorted by descending shift with
/// bit-exact coefficient strings.
#[derive(Debug, Serialize, Deserialize)]
pub struct CombinationJson {
    pub terms: Vec<TermJson>,
}

impl CombinationJson {
    pub fn from_combination(c: &ZetaCombination) -> Self {
        CombinationJson {
            terms: c
                .terms_desc()
                .map(|(shift, coeff)| TermJson {
                    shift,
                    coeff: format_rational(coeff),
                })
                .collect(),
        }
    }

    #[cfg(test)]
    pub fn into_combination(self) -> Result<ZetaCombination, String> {
        use std::str::FromStr;
        let mut c = ZetaCombination::new();
        for term in self.terms {
            let coeff = BigRational::from_str(&term.coeff)
                .map_err(|e| format!("bad coefficient `{}`: {e}", term.coeff))?;
            c.add_term(term.shift, coeff);
        }
        Ok(c)
    }
}

/// Wire form of a polynomial: coefficient strings in ascending degree.
#[derive(Debug, Serialize, Deserialize)]
pub struct PolyJson {
    pub coeffs: Vec<String>,
}

impl PolyJson {
    pub fn from_poly(p: &RationalPoly) -> Self {
        PolyJson {
            coeffs: p.coeffs().iter().map(format_rational).collect(),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CaseReport {
    pub id: String,
    pub status: String,
    pub lhs: String,
    pub rhs: String,
    /// Error magnitude for numeric cases; absent for exact comparisons.
    pub error: Option<f64>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub overall: String,
    pub cases: Vec<CaseReport>,
}

impl VerificationReport {
    pub fn new(suite: &str) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            overall: "pass".to_string(),
            cases: Vec::new(),
        }
    }

    fn push(&mut self, case: CaseReport) {
        if case.status == "fail" {
            self.overall = "fail".to_string();
        }
        self.cases.push(case);
    }

    /// Structural comparison already decided by the caller.
    pub fn push_exact(&mut self, id: String, pass: bool, lhs: String, rhs: String) {
        self.push(CaseReport {
            id,
            status: if pass { "pass" } else { "fail" }.to_string(),
            lhs,
            rhs,
            error: None,
        });
    }

    /// Numeric comparison at an absolute tolerance.
    pub fn push_numeric(&mut self, id: String, lhs: f64, rhs: f64, tolerance: f64) {
        let error = (lhs - rhs).abs();
        self.push(CaseReport {
            id,
            status: if error <= tolerance { "pass" } else { "fail" }.to_string(),
            lhs: format!("{lhs}"),
            rhs: format!("{rhs}"),
            error: Some(error),
        });
    }

    pub fn passed(&self) -> bool {
        self.overall == "pass"
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn render_table(&self) -> String {
        let mut out = String::new();
        for case in &self.cases {
            let err = match case.error {
                Some(e) => format!("{e:e}"),
                None => "exact".to_string(),
            };
            out.push_str(&format!(
                "{}  {}  lhs={}  rhs={}  err={}\n",
                case.id,
                case.status.to_uppercase(),
                case.lhs,
                case.rhs,
                err
            ));
        }
        let passed = self.cases.iter().filter(|c| c.status == "pass").count();
        out.push_str(&format!(
            "suite {}: {} ({passed}/{} cases)\n",
            self.suite,
            self.overall.to_uppercase(),
            self.cases.len()
        ));
        out
    }
}
