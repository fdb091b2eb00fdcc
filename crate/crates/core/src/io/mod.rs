//! Reading and writing documents, and DOT rendering.

mod doc;
mod dot;
mod sexpr;

pub use doc::{
    fold_doc, fold_from_doc, functor_from_images, images_of, parse_functor, parse_net,
    parse_petri_net, parse_recipe, parse_semantics_functor, parse_witness, serialize_functor,
    serialize_net, to_canonical_json, FoldDoc, FunctorDoc, GeneratorDoc, NetDocument, PetriNetDoc,
    RecipeDoc, SemanticsDoc, TransitionDoc, WitnessDoc,
};
pub use dot::export_dot;
pub use sexpr::{parse_term, MAX_DEPTH};
