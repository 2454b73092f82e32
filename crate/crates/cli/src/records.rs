//! Serialized output rows. Big integers are written as decimal strings.

use serde::Serialize;

use degchrom_core::theorem::{BoundReport, VerificationReport};
use degchrom_core::BigPolynomial;

#[derive(Debug, Serialize)]
pub struct PolynomialRecord {
    pub n: usize,
    pub m: usize,
    pub method: String,
    pub coefficients: Vec<String>,
}

impl PolynomialRecord {
    pub const CSV_HEADER: &'static str = "n,m,method,coefficients";

    pub fn csv_row(&self) -> String {
        format!("{},{},{},{}", self.n, self.m, self.method, self.coefficients.join(" "))
    }

    pub fn text(&self, poly: &BigPolynomial) -> String {
        format!("P_{}(G, k) = {poly}    [n = {}, {}]", self.m, self.n, self.method)
    }
}

#[derive(Debug, Serialize)]
pub struct CountRecord {
    pub n: usize,
    pub m: usize,
    pub k: u32,
    pub count: String,
    pub method: String,
}

impl CountRecord {
    pub const CSV_HEADER: &'static str = "n,m,k,count,method";

    pub fn csv_row(&self) -> String {
        format!("{},{},{},{},{}", self.n, self.m, self.k, self.count, self.method)
    }

    pub fn text(&self) -> String {
        format!(
            "P_{}(G, {}) = {}    [n = {}, {}]",
            self.m, self.k, self.count, self.n, self.method
        )
    }
}

#[derive(Debug, Serialize)]
pub struct ChecksRecord {
    pub monic: bool,
    pub zero_band: bool,
    pub second_coefficient: bool,
}

#[derive(Debug, Serialize)]
pub struct VerifyRecord {
    pub tree: String,
    pub seed: Option<u64>,
    pub n: usize,
    pub m: usize,
    pub pass: bool,
    pub checks: ChecksRecord,
    pub second_coeff_expected: String,
    pub second_coeff_actual: String,
    pub coefficients: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

impl VerifyRecord {
    pub const CSV_HEADER: &'static str = "seed,n,m,pass,second_coeff_expected,second_coeff_actual,elapsed_ms";

    pub fn new(report: &VerificationReport, tree: String, seed: Option<u64>, timings: bool) -> Self {
        VerifyRecord {
            tree,
            seed,
            n: report.n,
            m: report.m,
            pass: report.pass,
            checks: ChecksRecord {
                monic: report.checks.monic,
                zero_band: report.checks.zero_band,
                second_coefficient: report.checks.second_coefficient,
            },
            second_coeff_expected: report.expected.second.to_string(),
            second_coeff_actual: report.second_actual.to_string(),
            coefficients: report.coefficients.iter().map(ToString::to_string).collect(),
            elapsed_ms: timings.then_some(report.elapsed.as_millis()),
        }
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.seed.map(|s| s.to_string()).unwrap_or_default(),
            self.n,
            self.m,
            self.pass,
            self.second_coeff_expected,
            self.second_coeff_actual,
            self.elapsed_ms.map(|t| t.to_string()).unwrap_or_default(),
        )
    }

    pub fn text(&self, report: &VerificationReport) -> String {
        let status = if self.pass { "PASS" } else { "FAIL" };
        let mut line = format!(
            "{status} {} n={} m={} second expected={} actual={}",
            self.tree, self.n, self.m, self.second_coeff_expected, self.second_coeff_actual
        );
        if !self.pass {
            line.push_str(&format!("\n  P = {}", report.polynomial()));
        }
        line
    }
}

#[derive(Debug, Serialize)]
pub struct BoundRecord {
    pub v1: usize,
    pub v2: usize,
    pub case: &'static str,
    pub adjacent: bool,
    pub m: usize,
    pub k: u32,
    pub w_size: Option<usize>,
    pub measured: String,
    pub a_v1: String,
    pub bound: String,
    pub slack: String,
    pub strict_required: bool,
    pub strict_holds: bool,
    pub pass: bool,
}

impl BoundRecord {
    pub const CSV_HEADER: &'static str =
        "v1,v2,case,adjacent,m,k,w_size,measured,a_v1,bound,slack,strict_required,strict_holds,pass";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.v1,
            self.v2,
            self.case,
            self.adjacent,
            self.m,
            self.k,
            self.w_size.map(|w| w.to_string()).unwrap_or_default(),
            self.measured,
            self.a_v1,
            self.bound,
            self.slack,
            self.strict_required,
            self.strict_holds,
            self.pass
        )
    }

    pub fn text(&self) -> String {
        let status = if self.pass { "PASS" } else { "FAIL" };
        let rel = if self.strict_required { "<" } else { "<=" };
        format!(
            "{status} {} ({}, {}) m={} k={}: {} {rel} {} (|A_v1| = {})",
            self.case, self.v1, self.v2, self.m, self.k, self.measured, self.bound, self.a_v1
        )
    }
}

impl From<&BoundReport> for BoundRecord {
    fn from(r: &BoundReport) -> Self {
        BoundRecord {
            v1: r.v1,
            v2: r.v2,
            case: r.case.tag(),
            adjacent: r.w_size.is_some(),
            m: r.m,
            k: r.k,
            w_size: r.w_size,
            measured: r.measured.to_string(),
            a_v1: r.a_v1.to_string(),
            bound: r.bound.to_string(),
            slack: r.slack.to_string(),
            strict_required: r.strict_required,
            strict_holds: r.strict_holds,
            pass: r.pass,
        }
    }
}
