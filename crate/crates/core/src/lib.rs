//! Petri nets with categorical semantics.
//!
//! A net presents a free symmetric strict monoidal category of executions.
//! Attaching a fold into a semantics category gives a net with semantics;
//! this crate builds new nets from old ones (synchronizing transitions,
//! identifying places and transitions, gluing along shared parts,
//! composing along boundaries) and checks the conditions these
//! constructions are defined by.

pub mod error;
pub mod fssmc;
pub mod functor;
pub mod gluing;
pub mod io;
pub mod net;
pub mod semantics;

#[cfg(test)]
pub(crate) mod testing;

pub use error::{Error, Result};
pub use fssmc::{diagram_equal, terms_equal, to_diagram, ObjectWord, StringDiagram, Term};
pub use functor::{compose_functors, StrictFunctor};
pub use net::{free_smc, Multiset, PetriNet, SmcPresentation, Transition};
pub use semantics::{Fold, NetWithSemantics, Semantics};
