use std::fmt;

use crate::fssmc::Term;

/// A named condition that failed, with whatever certifies the failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NotGeneratorPreserving,
    NotInjectiveOnObjects,
    NotFaithful { left: Term, right: Term },
    FaithfulnessUndetermined { budget: usize },
    UncoveredGenerators(Vec<String>),
    SemanticsDoNotCommute { generator: String },
    NotCoequalizing { generator: String },
    NotUniversal(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotGeneratorPreserving => {
                f.write_str("some object generator is not sent to a single generator")
            }
            Violation::NotInjectiveOnObjects => {
                f.write_str("two object generators are sent to the same generator")
            }
            Violation::NotFaithful { left, right } => {
                write!(f, "not faithful: {left} and {right} have equal images")
            }
            Violation::FaithfulnessUndetermined { budget } => {
                write!(f, "faithfulness search gave up after {budget} candidates")
            }
            Violation::UncoveredGenerators(gens) => {
                write!(f, "target generators not covered: {}", gens.join(", "))
            }
            Violation::SemanticsDoNotCommute { generator } => {
                write!(f, "folds disagree on `{generator}`")
            }
            Violation::NotCoequalizing { generator } => {
                write!(f, "the witness maps of `{generator}` have different images")
            }
            Violation::NotUniversal(reason) => write!(f, "not a coequalizer: {reason}"),
        }
    }
}

/// Outcome of checking a morphism of nets against a definition.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Verdict {
    /// Bound used for the faithfulness search, when one was run.
    pub faithful_bound: Option<usize>,
    pub failures: Vec<Violation>,
}

impl Verdict {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pass() {
            f.write_str("pass")?;
        } else {
            f.write_str("fail")?;
            for v in &self.failures {
                write!(f, "; {v}")?;
            }
        }
        if let Some(k) = self.faithful_bound {
            write!(f, " (faithfulness checked up to {k} generators)")?;
        }
        Ok(())
    }
}
