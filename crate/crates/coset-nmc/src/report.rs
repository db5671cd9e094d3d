//! JSON report documents.
//!
//! Key order is part of the output contract (golden files compare bytes),
//! so every document is a struct with fields declared in emission order;
//! maps use string keys whose natural sort is the intended one.
//! Probabilities render as reduced fractions `"p/q"`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::dist::ExactDistribution;
use crate::verify::{NmReport, SweepSummary};
use crate::Result;

/// Reduced fraction rendering; zero is `"0/1"`, one is `"1/1"`.
pub fn rational_str(value: &BigRational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

fn prob_str(count: u64, total: u64) -> String {
    rational_str(&BigRational::new(BigInt::from(count), BigInt::from(total)))
}

/// Outcome → probability map of one distribution.
pub fn distribution_map(d: &ExactDistribution) -> BTreeMap<String, String> {
    d.iter()
        .map(|(o, c)| (o.as_key(), prob_str(c, d.total())))
        .collect()
}

/// The verification report document.
#[derive(Debug, Serialize)]
pub struct NmReportDoc {
    pub code: String,
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub d_dual: usize,
    pub nm_threshold: usize,
    pub tamper: String,
    pub fixed_count: usize,
    pub condition_met: bool,
    pub max_sd: String,
    pub leakage_bits: f64,
    pub witness: String,
    pub per_message: BTreeMap<String, BTreeMap<String, String>>,
    pub df: BTreeMap<String, String>,
    /// Monte-Carlo counterpart of `per_message`, present only when the
    /// caller asked for sampling.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sampled: Option<BTreeMap<String, BTreeMap<String, String>>>,
}

impl NmReportDoc {
    pub fn new(report: &NmReport) -> Self {
        NmReportDoc {
            code: report.code.clone(),
            n: report.n,
            k: report.k,
            r: report.r,
            d_dual: report.d_dual,
            nm_threshold: report.nm_threshold,
            tamper: report.tamper.clone(),
            fixed_count: report.fixed_count,
            condition_met: report.condition_met,
            max_sd: rational_str(&report.max_sd),
            leakage_bits: report.leakage_bits,
            witness: report.witness.as_str().to_string(),
            per_message: report
                .per_message
                .iter()
                .map(|(m, d)| (m.to_string(), distribution_map(d)))
                .collect(),
            df: distribution_map(&report.df),
            sampled: None,
        }
    }
}

/// The family-sweep summary document.
#[derive(Debug, Serialize)]
pub struct SweepDoc {
    pub code: String,
    pub n: usize,
    pub d_dual: usize,
    pub nm_threshold: usize,
    pub min_fixed: usize,
    pub total: u64,
    pub sd_zero_count: u64,
    pub max_sd: String,
    pub worst_tamper: String,
}

impl SweepDoc {
    pub fn new(
        code_label: &str,
        n: usize,
        d_dual: usize,
        summary: &SweepSummary,
    ) -> Self {
        SweepDoc {
            code: code_label.to_string(),
            n,
            d_dual,
            nm_threshold: n - d_dual,
            min_fixed: summary.min_fixed,
            total: summary.total,
            sd_zero_count: summary.sd_zero_count,
            max_sd: rational_str(&summary.max_sd),
            worst_tamper: summary.worst_tamper.clone(),
        }
    }
}

/// The wiretap observation document. `positions` echoes the observed
/// coordinates, 1-based as on the command line.
#[derive(Debug, Serialize)]
pub struct WiretapDoc {
    pub code: String,
    pub positions: Vec<usize>,
    pub positions_count: usize,
    pub d_dual: usize,
    pub leakage_bits: f64,
}

/// Pretty JSON with a trailing newline — the one serialization used for
/// stdout and `--out` files alike.
pub fn to_json_string<T: Serialize>(doc: &T) -> Result<String> {
    let mut text = serde_json::to_string_pretty(doc)
        .map_err(|e| crate::Error::BadParams(format!("serialization failed: {e}")))?;
    text.push('\n');
    Ok(text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};
    use std::collections::BTreeMap as Map;

    use crate::dist::Outcome;

    #[test]
    fn rationals_render_reduced_with_explicit_denominator() {
        assert_eq!(rational_str(&BigRational::zero()), "0/1");
        assert_eq!(rational_str(&BigRational::one()), "1/1");
        assert_eq!(prob_str(2, 16), "1/8");
        assert_eq!(prob_str(3, 4), "3/4");
    }

    #[test]
    fn distribution_maps_use_outcome_keys() {
        let d = ExactDistribution::from_counts(Map::from([
            (Outcome::Value("01".parse().unwrap()), 1),
            (Outcome::Same, 3),
        ]))
        .unwrap();
        let map = distribution_map(&d);
        assert_eq!(map["01"], "1/4");
        assert_eq!(map["_same_"], "3/4");
    }

    #[test]
    fn json_is_pretty_printed_with_trailing_newline() {
        #[derive(Serialize)]
        struct Doc {
            a: usize,
        }
        let text = to_json_string(&Doc { a: 1 }).unwrap();
        assert_eq!(text, "{\n  \"a\": 1\n}\n");
    }
}
