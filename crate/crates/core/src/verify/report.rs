use std::fmt;

use serde::Serialize;
use serde_json::Value;

/// One checked claim inside a case.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Step {
    pub claim: String,
    pub computed: String,
    pub expected: String,
    pub pass: bool,
    /// Where `expected` comes from: a named result or an oracle.
    pub provenance: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CaseReport {
    pub case_id: String,
    pub inputs: Value,
    pub steps: Vec<Step>,
    pub verdict: Verdict,
}

impl CaseReport {
    pub fn new(case_id: &str, inputs: Value) -> Self {
        CaseReport {
            case_id: case_id.to_string(),
            inputs,
            steps: Vec::new(),
            // An empty report proves nothing.
            verdict: Verdict::Fail,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Records a step whose pass flag is `computed == expected`.
    pub fn check_eq<T: fmt::Display + PartialEq>(
        &mut self,
        claim: impl Into<String>,
        computed: T,
        expected: T,
        provenance: &str,
    ) -> bool {
        let pass = computed == expected;
        self.push(claim, computed.to_string(), expected.to_string(), pass, provenance)
    }

    /// Records a step with an explicit outcome.
    pub fn check(
        &mut self,
        claim: impl Into<String>,
        computed: impl fmt::Display,
        expected: impl fmt::Display,
        pass: bool,
        provenance: &str,
    ) -> bool {
        self.push(claim, computed.to_string(), expected.to_string(), pass, provenance)
    }

    fn push(&mut self, claim: impl Into<String>, computed: String, expected: String, pass: bool, provenance: &str) -> bool {
        self.steps.push(Step {
            claim: claim.into(),
            computed,
            expected,
            pass,
            provenance: provenance.to_string(),
        });
        pass
    }

    /// Sets the verdict to the conjunction of step passes.
    pub fn finish(mut self) -> Self {
        self.verdict = if !self.steps.is_empty() && self.steps.iter().all(|s| s.pass) {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        self
    }

    pub fn failures(&self) -> impl Iterator<Item = &Step> {
        self.steps.iter().filter(|s| !s.pass)
    }
}

impl fmt::Display for CaseReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(f, "case {} {}: {v}", self.case_id, self.inputs)?;
        for s in &self.steps {
            let mark = if s.pass { "ok  " } else { "FAIL" };
            writeln!(
                f,
                "  [{mark}] {}: computed {}, expected {} ({})",
                s.claim, s.computed, s.expected, s.provenance
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn verdict_is_conjunction() {
        let mut r = CaseReport::new("x", json!({}));
        r.check_eq("one", 1, 1, "arithmetic");
        assert!(r.clone().finish().passed());
        r.check_eq("two", 2, 3, "arithmetic");
        let r = r.finish();
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1);
        assert!(!CaseReport::new("empty", json!({})).finish().passed());
    }
}
