//! Morphisms of free symmetric strict monoidal categories: term syntax,
//! typing and equality via string diagrams.

mod diagram;
pub mod perm;
mod term;
mod word;

pub use diagram::{
    diagram_equal, terms_equal, to_diagram, Conjugate, DiagramBox, Source, StringDiagram, Target,
};
pub use term::{belongs, block_swap, symmetry, Term};
pub use word::ObjectWord;
