use std::fmt;

use galois_rings::Mat;
use gmodules::conditions::{
    condition_distinct_characters, condition_odd, condition_prime_bound, condition_regular, condition_spanning,
    condition_unipotent, TwistCollision, Verdict, DEFAULT_GROUP_CAP,
};
use gmodules::GroupData;
use root_data::RootDatum;

use crate::error::LadderError;

/// Inputs the checker cannot derive from generator images alone.
#[derive(Clone, Debug, Default)]
pub struct Designations {
    /// Image of complex conjugation.
    pub complex_conjugation: Option<Mat>,
    /// Generators of the decomposition group at `p`.
    pub decomposition: Option<Vec<usize>>,
    /// Global inputs taken on trust, echoed into the report.
    pub assumptions: Vec<String>,
    /// Cap for the group enumeration behind the unipotent-image check; `None` uses the default.
    pub group_cap: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct ConditionResult {
    pub id: &'static str,
    pub name: &'static str,
    pub verdict: Verdict,
    /// Witnesses for the distinctness condition.
    pub collisions: Vec<TwistCollision>,
}

#[derive(Clone, Debug)]
pub struct HypothesisReport {
    pub results: Vec<ConditionResult>,
    pub assumptions: Vec<String>,
}

impl HypothesisReport {
    pub fn get(&self, id: &str) -> Option<&ConditionResult> {
        self.results.iter().find(|r| r.id == id)
    }
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.verdict.passed)
    }
    pub fn failed(&self) -> Vec<&ConditionResult> {
        self.results.iter().filter(|r| !r.verdict.passed).collect()
    }
}

impl fmt::Display for HypothesisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            let tag = if r.verdict.passed { "PASS" } else { "FAIL" };
            writeln!(f, "({}) {}: {} - {}", r.id, r.name, tag, r.verdict.detail)?;
            for c in &r.collisions {
                writeln!(f, "    collision: {c}")?;
            }
        }
        for a in &self.assumptions {
            writeln!(f, "assumed: {a}")?;
        }
        Ok(())
    }
}

fn entry(id: &'static str, name: &'static str, verdict: Verdict) -> ConditionResult {
    ConditionResult { id, name, verdict, collisions: Vec::new() }
}

/// Evaluates the residual hypotheses `(1)–(5)` and `(8)`; `(6)` and `(7)` are recorded as assumptions.
pub fn check_hypotheses(
    datum: &RootDatum,
    data: &GroupData,
    designations: &Designations,
) -> Result<HypothesisReport, LadderError> {
    let c = designations
        .complex_conjugation
        .as_ref()
        .ok_or(LadderError::MissingDesignation("complex conjugation image"))?;
    let dec = designations
        .decomposition
        .as_ref()
        .ok_or(LadderError::MissingDesignation("decomposition group generators"))?;
    let p = data.field().p();
    let mut results = vec![
        entry("1", "p > 2n", condition_prime_bound(datum.n(), p)),
        entry("2", "odd", condition_odd(datum, c)?),
    ];
    let cap = designations.group_cap.unwrap_or(DEFAULT_GROUP_CAP);
    let unip = condition_unipotent(datum, data, cap).unwrap_or_else(|e| Verdict {
        passed: false,
        detail: format!("not certified: {e}"),
    });
    results.push(entry("3", "image contains U1", unip));
    let (v, collisions) = condition_distinct_characters(datum, data);
    results.push(ConditionResult { id: "4", name: "distinct characters", verdict: v, collisions });
    results.push(entry("5", "spanning", condition_spanning(datum, data)));
    results.push(entry("8", "regularity", condition_regular(datum, data, dec)?));
    let mut assumptions = vec![
        "(6) local conditions at primes of S other than p are liftable".to_string(),
        "(7) the Selmer and dual Selmer bookkeeping inputs hold".to_string(),
    ];
    assumptions.extend(designations.assumptions.iter().cloned());
    Ok(HypothesisReport { results, assumptions })
}
