//! Constructions on nets with semantics: synchronization, identification,
//! coproducts, pushouts and boundary composition.

mod boundary;
mod coequalizer;
mod identify;
mod product;
mod sync;
mod verdict;

pub use boundary::{boundary_compose, minimal_firing_vector, BoundaryComposition, FiringVector};
pub use coequalizer::{coequalize_tp, merge_two_places};
pub use identify::{identify, verify_identification, Witness};
pub use product::{monoidal_product, place_pairing, pushout_glue, Glued};
pub use sync::{
    commutes_with_semantics, is_synchronization, make_synchronization,
    make_synchronization_bounded, synchronize_transitions, synchronize_transitions_bounded,
    SyncRecipe, DEFAULT_FAITHFUL_BOUND,
};
pub use verdict::{Verdict, Violation};
