use crate::clifford::FockVector;

/// One failed check: which generators were involved, on which input, and
/// what the nonzero discrepancy was.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub label: String,
    pub input: Option<FockVector>,
    pub discrepancy: String,
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.input {
            Some(v) => write!(f, "{} on {}: {}", self.label, v, self.discrepancy),
            None => write!(f, "{}: {}", self.label, self.discrepancy),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: usize,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
    }
}
