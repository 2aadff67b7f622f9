use serde::Serialize;

use crate::galois::{FieldElement, FieldSpecJson};
use crate::hermitian::FieldVector;

pub const BRANCH_RULE: &str = "uniform over branches with nonzero component (seeded convention)";

/// Replayable record of one protocol run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProtocolTranscript {
    pub protocol: &'static str,
    pub alpha: FieldElement,
    pub beta: FieldElement,
    pub seed: Option<u64>,
    /// Intermediate states in order, with a name for each.
    pub states: Vec<(String, FieldVector)>,
    pub basis_labels: Vec<&'static str>,
    pub possible_branches: Vec<usize>,
    pub branch: usize,
    pub classical_message: String,
    /// Bob's qubit before correction.
    pub pre_correction: FieldVector,
    pub correction: &'static str,
    pub final_state: FieldVector,
    /// Scalar factor of the Bell-basis expansion that Bob's state is read
    /// without ("1/2" in odd characteristic, "1" otherwise).
    pub expansion_factor: &'static str,
    /// Internal algebraic identity checked during the run.
    pub identity_check: Option<(&'static str, bool)>,
}

impl ProtocolTranscript {
    pub fn input_state(&self) -> FieldVector {
        FieldVector::new(self.alpha.spec(), &[self.alpha.clone(), self.beta.clone()]).expect("qubit")
    }

    pub fn recovered(&self) -> bool {
        self.final_state == self.input_state()
    }

    pub fn branch_label(&self) -> &'static str {
        self.basis_labels[self.branch]
    }

    pub fn to_json(&self) -> TranscriptJson {
        TranscriptJson {
            protocol: self.protocol,
            field: self.alpha.spec().to_json(),
            alpha: self.alpha.to_string(),
            beta: self.beta.to_string(),
            seed: self.seed,
            states: self
                .states
                .iter()
                .map(|(name, v)| NamedState { name: name.clone(), terms: labeled_terms(v) })
                .collect(),
            measurement_basis: self.basis_labels.clone(),
            possible_branches: self.possible_branches.iter().map(|&i| self.basis_labels[i]).collect(),
            branch: self.branch_label(),
            branch_rule: BRANCH_RULE,
            classical_message: self.classical_message.clone(),
            expansion_factor: self.expansion_factor,
            pre_correction: labeled_terms(&self.pre_correction),
            correction: self.correction,
            final_state: labeled_terms(&self.final_state),
            recovered: self.recovered(),
            identity_check: self.identity_check.map(|(name, ok)| IdentityCheck { name, holds: ok }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabeledTerm {
    pub basis: String,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedState {
    pub name: String,
    pub terms: Vec<LabeledTerm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TranscriptJson {
    pub protocol: &'static str,
    pub field: FieldSpecJson,
    pub alpha: String,
    pub beta: String,
    pub seed: Option<u64>,
    pub states: Vec<NamedState>,
    pub measurement_basis: Vec<&'static str>,
    pub possible_branches: Vec<&'static str>,
    pub branch: &'static str,
    pub branch_rule: &'static str,
    pub classical_message: String,
    pub expansion_factor: &'static str,
    pub pre_correction: Vec<LabeledTerm>,
    pub correction: &'static str,
    pub final_state: Vec<LabeledTerm>,
    pub recovered: bool,
    pub identity_check: Option<IdentityCheck>,
}

/// Nonzero coefficients keyed by computational basis kets |b...⟩. Vectors
/// whose length is not a power of two are keyed by index.
pub fn labeled_terms(v: &FieldVector) -> Vec<LabeledTerm> {
    let n = v.len();
    let qubits = n.trailing_zeros() as usize;
    let label = |i: usize| {
        if n.is_power_of_two() {
            format!("|{:0width$b}>", i, width = qubits.max(1))
        } else {
            format!("e{i}")
        }
    };
    v.entries()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| LabeledTerm { basis: label(i), coeff: c.to_string() })
        .collect()
}
