//! The JSON report document every CLI invocation prints: tool version,
//! command echo, a digest of the input, the structured results, and wall
//! time. Rationals ride as exact numerator/denominator pairs or "inf";
//! every collection is emitted in a deterministic order so documents are
//! diffable and golden-testable byte for byte.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::factor::{Certificate, FactorKind, PathFactor};
use crate::graph::Graph;
use crate::graph6::emit_graph6;
use crate::harness::{HuntSummary, RemarkExpectation, VerificationReport};
use crate::toughness::ParameterResult;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ReportDocument {
    pub tool_version: String,
    pub command: String,
    pub input_digest: String,
    pub results: Results,
    pub timing_ms: u64,
}

impl ReportDocument {
    pub fn new(command: String, input_digest: String, results: Results, timing_ms: u64) -> Self {
        ReportDocument {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            command,
            input_digest,
            results,
            timing_ms,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Hex SHA-256 of the canonical graph6 form: identical digests for
/// identical graphs however they were supplied.
pub fn graph_digest(g: &Graph) -> String {
    match emit_graph6(g) {
        Ok(text) => text_digest(&text),
        Err(_) => text_digest(&format!("order-{}", g.order())),
    }
}

pub fn text_digest(text: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(text.as_bytes());
    hex_string(&hasher.finalize())
}

fn hex_string(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Results {
    Analyze(AnalyzeResults),
    Decide(DecideResults),
    Generate(GenerateResults),
    Verify(VerifyResults),
    Hunt(HuntResults),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AnalyzeResults {
    pub graph6: String,
    pub order: usize,
    pub edge_count: usize,
    pub isolated: usize,
    pub components: usize,
    /// Absent only for the empty graph, where the parameters are undefined.
    pub connectivity: Option<usize>,
    pub toughness: Option<ParameterResult>,
    pub isolated_toughness: Option<ParameterResult>,
    pub sun_count: usize,
    pub factors: Vec<FactorStatus>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct FactorStatus {
    pub k: FactorKind,
    pub exists: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factor: Option<PathFactor>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DecideResults {
    pub k: FactorKind,
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub removal_count: Option<usize>,
    pub holds: bool,
    pub vacuous: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factor: Option<PathFactor>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GenerateResults {
    pub graph6: String,
    pub order: usize,
    pub edge_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub removal_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub margin: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expression: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<RemarkExpectation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifyResults {
    pub mode: String,
    pub id: u8,
    pub removal_count: usize,
    pub margin: usize,
    pub report: VerificationReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct HuntResults {
    pub condition: u8,
    pub removal_count: usize,
    pub margin: usize,
    pub max_order: usize,
    pub samples: usize,
    pub seed: u64,
    pub summary: HuntSummaryJson,
    pub reports: Vec<VerificationReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct HuntSummaryJson {
    pub samples: usize,
    pub consistent: usize,
    pub vacuous: usize,
    pub counterexamples: usize,
    pub non_vacuous: usize,
}

impl From<&HuntSummary> for HuntSummaryJson {
    fn from(s: &HuntSummary) -> Self {
        HuntSummaryJson {
            samples: s.samples,
            consistent: s.consistent,
            vacuous: s.vacuous,
            counterexamples: s.counterexamples,
            non_vacuous: s.non_vacuous(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ExtRational;

    #[test]
    fn document_round_trips() {
        let doc = ReportDocument::new(
            "analyze --expr K4".to_string(),
            graph_digest(&Graph::complete(4)),
            Results::Analyze(AnalyzeResults {
                graph6: "C~".to_string(),
                order: 4,
                edge_count: 6,
                isolated: 0,
                components: 1,
                connectivity: Some(3),
                toughness: Some(ParameterResult {
                    value: ExtRational::Infinity,
                    witness: None,
                }),
                isolated_toughness: Some(ParameterResult {
                    value: ExtRational::Infinity,
                    witness: None,
                }),
                sun_count: 0,
                factors: vec![],
            }),
            12,
        );
        let text = doc.to_json();
        let back: ReportDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(doc, back);
        assert!(text.contains("\"value\": \"inf\""));
    }

    #[test]
    fn digests_are_stable_and_input_independent() {
        let a = graph_digest(&Graph::cycle(4));
        let b = graph_digest(&crate::graph6::parse_graph6("Cl").unwrap());
        assert_eq!(a, b);
        assert_eq!(a.len(), 64);
        assert_ne!(a, graph_digest(&Graph::path(4)));
    }

    #[test]
    fn rationals_never_serialize_as_floats() {
        let r = ParameterResult {
            value: ExtRational::new(3, 2),
            witness: Some([0, 2].into_iter().collect()),
        };
        let text = serde_json::to_string(&r).unwrap();
        assert_eq!(text, r#"{"value":{"num":3,"den":2},"witness":[0,2]}"#);
    }
}
