//! JSON reports for verification scenarios.

use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Flagged,
}

/// A named boolean check with a human-readable detail.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, holds: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.to_string(),
            holds,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Parameters {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q_poly: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub split: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub through_origin: Option<bool>,
    pub seed: u64,
    pub trials: usize,
    pub accept_threshold: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MainTrial {
    pub index: usize,
    pub seed: u64,
    pub nonempty: bool,
    pub dim: i64,
    pub minimal_r: Option<i64>,
    /// Whether `E[f]` is `r`-almost dense at the input's `r`.
    pub dense_at_r: Option<bool>,
    /// Criterion (ii) over the cells of `E[f]`, when the input's cells are
    /// asserted components.
    pub criterion_ii: Option<bool>,
    pub success: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpansionTrial {
    pub index: usize,
    pub seed: u64,
    pub fiber_dim: i64,
    pub proj2_dim: i64,
    pub expected: i64,
    pub success: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrintsTrial {
    pub index: usize,
    pub seed: u64,
    /// Dimension of the closure of the partial substitution in `F^n`.
    pub partial_dim: i64,
    /// Dimension of the pulled-back print set in `F^k`.
    pub pullback_dim: i64,
    pub success: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InterpolationTrial {
    pub index: usize,
    pub seed: u64,
    pub rank: usize,
    pub solution_dim: usize,
    pub expected_rank: usize,
    pub expected_solution_dim: i64,
    pub consistent: bool,
    pub success: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum TrialRecord {
    Main(MainTrial),
    Expansion(ExpansionTrial),
    Prints(PrintsTrial),
    Interpolation(InterpolationTrial),
}

impl TrialRecord {
    pub fn success(&self) -> bool {
        match self {
            TrialRecord::Main(t) => t.success,
            TrialRecord::Expansion(t) => t.success,
            TrialRecord::Prints(t) => t.success,
            TrialRecord::Interpolation(t) => t.success,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScenarioReport {
    pub schema_version: u32,
    pub scenario: String,
    pub prime: u64,
    pub parameters: Parameters,
    pub preconditions: Vec<Check>,
    pub required_successes: usize,
    pub successes: usize,
    pub trials: Vec<TrialRecord>,
    pub assertions: Vec<Check>,
    pub verdict: Verdict,
}

impl ScenarioReport {
    /// Assembles a report and derives its verdict from the records.
    pub fn new(
        scenario: &str,
        prime: u64,
        parameters: Parameters,
        preconditions: Vec<Check>,
        required_successes: usize,
        trials: Vec<TrialRecord>,
        assertions: Vec<Check>,
    ) -> Self {
        let mut report = ScenarioReport {
            schema_version: SCHEMA_VERSION,
            scenario: scenario.to_string(),
            prime,
            parameters,
            preconditions,
            required_successes,
            successes: trials.iter().filter(|t| t.success()).count(),
            trials,
            assertions,
            verdict: Verdict::Fail,
        };
        report.verdict = report.recompute_verdict();
        report
    }

    /// Flagged if a precondition fails; otherwise fail on a broken
    /// assertion or too few successful trials.
    pub fn recompute_verdict(&self) -> Verdict {
        if self.preconditions.iter().any(|c| !c.holds) {
            return Verdict::Flagged;
        }
        if self.assertions.iter().any(|c| !c.holds) {
            return Verdict::Fail;
        }
        let successes = self.trials.iter().filter(|t| t.success()).count();
        if successes >= self.required_successes {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn preconditions_hold(&self) -> bool {
        self.preconditions.iter().all(|c| c.holds)
    }
}

/// Pretty JSON with a trailing newline.
pub fn emit_report<T: Serialize>(report: &T) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}

/// Wraps a non-scenario payload with the schema header.
#[derive(Debug, Clone, Serialize)]
pub struct Envelope<T: Serialize> {
    pub schema_version: u32,
    pub command: String,
    #[serde(flatten)]
    pub payload: T,
}

impl<T: Serialize> Envelope<T> {
    pub fn new(command: &str, payload: T) -> Self {
        Envelope {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            payload,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial(success: bool) -> TrialRecord {
        TrialRecord::Expansion(ExpansionTrial {
            index: 0,
            seed: 1,
            fiber_dim: 1,
            proj2_dim: 1,
            expected: 1,
            success,
        })
    }

    #[test]
    fn verdict_rules() {
        let p = Parameters::default();
        let ok = vec![Check::new("pre", true, "")];
        let r = ScenarioReport::new(
            "x",
            5,
            p.clone(),
            ok.clone(),
            2,
            vec![trial(true), trial(true)],
            vec![],
        );
        assert_eq!(r.verdict, Verdict::Pass);
        let r = ScenarioReport::new(
            "x",
            5,
            p.clone(),
            ok.clone(),
            2,
            vec![trial(true), trial(false)],
            vec![],
        );
        assert_eq!(r.verdict, Verdict::Fail);
        let bad = vec![Check::new("pre", false, "")];
        let r = ScenarioReport::new("x", 5, p.clone(), bad, 0, vec![], vec![]);
        assert_eq!(r.verdict, Verdict::Flagged);
        let r = ScenarioReport::new("x", 5, p, ok, 0, vec![], vec![Check::new("a", false, "")]);
        assert_eq!(r.verdict, Verdict::Fail);
    }

    #[test]
    fn json_shape() {
        let r = ScenarioReport::new(
            "x",
            5,
            Parameters::default(),
            vec![],
            1,
            vec![trial(true)],
            vec![],
        );
        let v: serde_json::Value = serde_json::from_str(&emit_report(&r)).unwrap();
        assert_eq!(v["schema_version"], 1);
        assert_eq!(v["verdict"], "pass");
        assert_eq!(v["trials"][0]["proj2_dim"], 1);
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert!(keys.contains(&"parameters"));
    }
}
