use serde_json::{json, Value};

use aalkit_core::{FiniteAlgebra, Partition, Subset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// The result of one subcommand. `holds` decides the exit status.
pub struct Outcome {
    pub query: Value,
    pub answer: Value,
    pub witness: Value,
    pub text: String,
    pub holds: bool,
}

impl Outcome {
    pub fn new(query: Value, answer: Value, text: impl Into<String>) -> Self {
        Outcome {
            query,
            answer,
            witness: Value::Null,
            text: text.into(),
            holds: true,
        }
    }

    pub fn witness(mut self, witness: Value) -> Self {
        self.witness = witness;
        self
    }

    pub fn holds(mut self, holds: bool) -> Self {
        self.holds = holds;
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.trim_end().to_string(),
            Format::Json => serde_json::to_string_pretty(&json!({
                "query": self.query,
                "answer": self.answer,
                "witness": self.witness,
            }))
            .expect("values serialize"),
        }
    }

    pub fn exit_code(&self) -> u8 {
        if self.holds {
            0
        } else {
            1
        }
    }
}

pub fn set_labels(alg: &FiniteAlgebra, s: &Subset) -> Vec<String> {
    s.iter().map(|e| alg.label(e)).collect()
}

pub fn set_text(alg: &FiniteAlgebra, s: &Subset) -> String {
    format!("{{{}}}", set_labels(alg, s).join(","))
}

pub fn block_labels(alg: &FiniteAlgebra, p: &Partition) -> Value {
    json!(p
        .blocks()
        .iter()
        .map(|b| b.iter().map(|&e| alg.label(e)).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}
