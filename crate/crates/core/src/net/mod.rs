//! Petri nets with well-ordered places and their free symmetric strict
//! monoidal categories of executions.

mod multiset;
mod petri;
mod presentation;

pub use multiset::Multiset;
pub use petri::{
    free_smc, is_fsm, linearize, net_coproduct, net_of_presentation, prune_isolated_places,
    CoproductInjection, PetriNet, Transition,
};
pub use presentation::{GeneratorSig, SmcPresentation};

use crate::error::{Error, Result};

/// Names must survive the term s-expression syntax unquoted.
pub fn validate_name(name: &str) -> Result<()> {
    let bad = name.is_empty()
        || name
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '(' | ')' | '[' | ']' | ',' | '"'));
    if bad {
        Err(Error::InvalidName(name.to_string()))
    } else {
        Ok(())
    }
}
