use std::collections::BTreeMap;
use std::io::Write;

use mindex_core::algebra::{Poly, Rational};
use mindex_core::darboux::Calibration;
use mindex_core::recurrence::{InvariantTable, RecurrenceTable, Row};
use serde::{Deserialize, Serialize};

use crate::config::RunConfig;
use crate::error::CliError;
use crate::golden::GoldenReport;

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CalibrationSummary {
    pub virtual_ids: [String; 2],
    pub c_f: String,
    /// Parameter shifts of the shift-family `F-hat`, `B-hat`.
    pub shift: [String; 2],
    pub tried: usize,
    pub passed: usize,
    pub n_checked: usize,
}

impl From<&Calibration> for CalibrationSummary {
    fn from(c: &Calibration) -> Self {
        let conv = &c.conventions;
        CalibrationSummary {
            virtual_ids: conv.virtual_ids.map(String::from),
            c_f: conv.c_f.to_string(),
            shift: [conv.shift.f.to_string(), conv.shift.b.to_string()],
            tried: c.tried,
            passed: c.passed,
            n_checked: c.n_checked,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStatus {
    Consistent,
    Inconsistent,
    NonPolynomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowReport {
    pub n: usize,
    pub status: RowStatus,
    /// `k -> r_{n,k}`.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub r: BTreeMap<i64, String>,
    /// Residual or remainder witnessing a failure.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub level: Option<usize>,
}

pub fn rows(table: &RecurrenceTable<Rational>) -> Vec<RowReport> {
    table
        .rows
        .iter()
        .enumerate()
        .map(|(n, row)| match row {
            Row::Consistent(c) => RowReport {
                n,
                status: RowStatus::Consistent,
                r: c.iter().map(|(k, v)| (*k, v.to_string())).collect(),
                witness: None,
                level: None,
            },
            Row::Inconsistent { witness_degree, residual } => RowReport {
                n,
                status: RowStatus::Inconsistent,
                r: BTreeMap::new(),
                witness: Some(format!("residual {residual} at eta^{witness_degree}")),
                level: None,
            },
            Row::NonPolynomial { level, remainder } => RowReport {
                n,
                status: RowStatus::NonPolynomial,
                r: BTreeMap::new(),
                witness: Some(remainder.to_string()),
                level: Some(*level),
            },
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantEntry {
    pub n: usize,
    pub k: usize,
    /// `None` marks an undefined value.
    pub value: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub rho: Vec<InvariantEntry>,
    pub sigma: Vec<InvariantEntry>,
    pub pair: Vec<InvariantEntry>,
}

impl From<&InvariantTable<Rational>> for InvariantReport {
    fn from(t: &InvariantTable<Rational>) -> Self {
        let s = |v: &Option<Rational>| v.as_ref().map(ToString::to_string);
        InvariantReport {
            rho: t.rho.iter().map(|((n, k), v)| InvariantEntry { n: *n, k: *k, value: s(v) }).collect(),
            sigma: t.sigma.iter().map(|(n, v)| InvariantEntry { n: *n, k: 0, value: s(v) }).collect(),
            pair: t.pair.iter().map(|((n, k), v)| InvariantEntry { n: *n, k: *k, value: s(v) }).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NecessaryReport {
    pub passed: bool,
    /// Quotient `Y` on success, remainder on failure.
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Route2Report {
    pub rows: Vec<RowReport>,
    /// Route-2 over route-1 when it is a single constant.
    pub constant_ratio: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    /// A failed check: inconsistency, band violation, route disagreement
    /// or golden mismatch.
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub config: RunConfig,
    pub calibration: CalibrationSummary,
    pub round_trip: bool,
    pub ell: usize,
    pub band: usize,
    /// Coefficients of X, constant term first.
    pub x: Vec<String>,
    pub necessary: NecessaryReport,
    pub band_violations: Vec<(usize, i64, String)>,
    pub rows: Vec<RowReport>,
    pub route2: Option<Route2Report>,
    pub invariants: InvariantReport,
    pub golden: Option<GoldenReport>,
    pub timing_ms: BTreeMap<String, u64>,
    pub outcome: Outcome,
    pub failures: Vec<String>,
}

pub fn coeff_strings(p: &Poly<Rational>) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

impl VerificationReport {
    pub fn to_json(&self) -> Result<String, CliError> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self, CliError> {
        let r: VerificationReport = serde_json::from_str(s)?;
        if r.schema != SCHEMA {
            return Err(CliError::Usage(format!("unsupported report schema {}", r.schema)));
        }
        Ok(r)
    }

    /// The r-table as CSV: `n,k,r` (consistent rows only) plus status rows.
    pub fn write_csv<W: Write>(&self, w: W) -> Result<(), CliError> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(["n", "k", "r", "status"])?;
        for row in &self.rows {
            let status = serde_json::to_value(&row.status)?;
            let status = status.as_str().unwrap_or_default().to_string();
            if row.r.is_empty() {
                out.write_record([row.n.to_string(), String::new(), String::new(), status.clone()])?;
            }
            for (k, v) in &row.r {
                out.write_record([row.n.to_string(), k.to_string(), v.clone(), status.clone()])?;
            }
        }
        out.flush()?;
        Ok(())
    }
}
