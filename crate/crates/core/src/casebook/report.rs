use std::fmt;

use serde_json::{json, Value};

/// One comparison between a golden value and a computed one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub computed: String,
}

impl Check {
    pub fn new(name: impl Into<String>, expected: impl ToString, computed: impl ToString) -> Self {
        Check {
            name: name.into(),
            expected: expected.to_string(),
            computed: computed.to_string(),
        }
    }

    pub fn passed(&self) -> bool {
        self.expected == self.computed
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub id: &'static str,
    pub summary: &'static str,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    /// The failing checks.
    pub fn diff(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed()).collect()
    }

    pub fn status(&self) -> &'static str {
        if self.passed() {
            "PASS"
        } else {
            "FAIL"
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "summary": self.summary,
            "status": self.status(),
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "expected": c.expected,
                "computed": c.computed,
                "pass": c.passed(),
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}: {}", self.status(), self.id, self.summary)?;
        for c in &self.checks {
            if c.passed() {
                writeln!(f, "  ok   {} = {}", c.name, c.computed)?;
            } else {
                writeln!(f, "  DIFF {}: expected {}, computed {}", c.name, c.expected, c.computed)?;
            }
        }
        Ok(())
    }
}
