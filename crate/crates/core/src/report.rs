//! Pass/fail records with the first counterexample found.

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomCheck {
    pub axiom: String,
    pub pass: bool,
    pub checked: u64,
    pub witness: Option<Value>,
}

pub(crate) struct Check {
    name: String,
    checked: u64,
    witness: Option<Value>,
}

impl Check {
    pub(crate) fn new(name: impl Into<String>) -> Self {
        Check { name: name.into(), checked: 0, witness: None }
    }

    pub(crate) fn record(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.checked += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    pub(crate) fn finish(self) -> AxiomCheck {
        AxiomCheck { axiom: self.name, pass: self.witness.is_none(), checked: self.checked, witness: self.witness }
    }
}
