//! Stable JSON emission, schema version 1. Field names and their order
//! are frozen by golden-file tests.

use serde::Serialize;
use stress_core::classify::ClassificationReport;
use stress_core::closed_form::SrgParameters;
use stress_core::verify::VerificationReport;
use stress_core::StressProfile;

use crate::formats::emit_graph6;
use crate::CliError;

const SCHEMA: u32 = 1;

#[derive(Serialize)]
struct ProfileJson<'a> {
    schema: u32,
    n: usize,
    stress: &'a [u64],
    total: u64,
}

pub fn profile_json(n: usize, profile: &StressProfile) -> String {
    to_string(&ProfileJson {
        schema: SCHEMA,
        n,
        stress: &profile.stress,
        total: profile.total,
    })
}

#[derive(Serialize)]
struct SrgJson {
    v: usize,
    k: usize,
    lambda: usize,
    mu: usize,
}

impl From<&SrgParameters> for SrgJson {
    fn from(p: &SrgParameters) -> Self {
        SrgJson {
            v: p.v,
            k: p.k,
            lambda: p.lambda,
            mu: p.mu,
        }
    }
}

#[derive(Serialize)]
struct ClassifyJson<'a> {
    schema: u32,
    n: usize,
    is_connected: bool,
    diameter: Option<u32>,
    stress_regular_k: Option<u64>,
    simplicial: &'a [usize],
    srg: Option<SrgJson>,
    one_stress_center: Option<usize>,
    recognized_family: &'a str,
    findings: &'a [String],
}

pub fn classification_json(report: &ClassificationReport) -> String {
    to_string(&ClassifyJson {
        schema: SCHEMA,
        n: report.n,
        is_connected: report.is_connected,
        diameter: report.diameter,
        stress_regular_k: report.stress_regular_k,
        simplicial: &report.simplicial,
        srg: report.srg.as_ref().map(SrgJson::from),
        one_stress_center: report.one_stress_center,
        recognized_family: report.recognized_family.tag(),
        findings: &report.findings,
    })
}

#[derive(Serialize)]
struct CounterexampleJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct ReportJson {
    schema: u32,
    theorem: &'static str,
    max_n: usize,
    graphs_scanned: u64,
    /// Witness isomorphism classes as graph6 strings of their canonical
    /// representatives.
    witnesses: Vec<String>,
    counterexamples: Vec<CounterexampleJson>,
    elapsed_ms: u64,
}

fn report_value(report: &VerificationReport) -> Result<ReportJson, CliError> {
    let witnesses = report
        .witnesses
        .iter()
        .map(|key| emit_graph6(&key.to_graph()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ReportJson {
        schema: SCHEMA,
        theorem: report.theorem.tag(),
        max_n: report.max_n,
        graphs_scanned: report.graphs_scanned,
        witnesses,
        counterexamples: report
            .counterexamples
            .iter()
            .map(|c| CounterexampleJson {
                n: c.n,
                edges: c.edges.clone(),
            })
            .collect(),
        elapsed_ms: report.elapsed.as_millis() as u64,
    })
}

pub fn verification_json(report: &VerificationReport) -> Result<String, CliError> {
    Ok(to_string(&report_value(report)?))
}

pub fn verification_batch_json(reports: &[VerificationReport]) -> Result<String, CliError> {
    let values = reports
        .iter()
        .map(report_value)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(to_string(&values))
}

fn to_string<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report serialization cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;
    use stress_core::generators;
    use stress_core::stress::stress_profile;

    #[test]
    fn profile_schema_is_stable() {
        let g = generators::cycle(4).unwrap();
        let p = stress_profile(&g).unwrap();
        assert_eq!(
            profile_json(g.n(), &p),
            r#"{"schema":1,"n":4,"stress":[1,1,1,1],"total":4}"#
        );
    }

    #[test]
    fn classify_schema_mentions_family() {
        let g = generators::complete(3).unwrap();
        let r = stress_core::classify::classify(&g).unwrap();
        let json = classification_json(&r);
        assert!(json.contains(r#""stress_regular_k":0"#));
        assert!(json.contains(r#""recognized_family":"COMPLETE""#));
        assert!(json.starts_with(r#"{"schema":1,"#));
    }
}
