use std::collections::BTreeSet;

use crate::error::{Error, Result};

use super::StrictFunctor;

pub fn is_generator_preserving_on_objects(f: &StrictFunctor) -> bool {
    f.object_map().values().all(|w| w.len() == 1)
}

pub fn is_injective_on_object_generators(f: &StrictFunctor) -> Result<bool> {
    if !is_generator_preserving_on_objects(f) {
        return Err(Error::PreconditionFailed(
            "injectivity on object generators needs single-generator object images".into(),
        ));
    }
    let images: BTreeSet<&String> = f.object_map().values().map(|w| &w.0[0]).collect();
    Ok(images.len() == f.object_map().len())
}

/// Every generator goes to `σ ; u ; σ'` for a single generator `u`. Images
/// with wires bypassing the box are rejected, since then the image is not a
/// conjugate of `u` alone.
pub fn is_transition_preserving(f: &StrictFunctor) -> bool {
    f.source().morphisms().iter().all(|g| {
        f.image_diagram(&g.name)
            .is_some_and(|d| d.as_conjugate().is_some())
    })
}

/// Target generators that occur in no generator image.
pub fn uncovered_target_generators(f: &StrictFunctor) -> Vec<String> {
    let covered: BTreeSet<String> = f
        .morphism_map()
        .values()
        .flat_map(|t| t.decomposition())
        .collect();
    f.target()
        .morphisms()
        .iter()
        .filter(|m| !covered.contains(&m.name))
        .map(|m| m.name.clone())
        .collect()
}

pub fn covers_all_target_generators(f: &StrictFunctor) -> bool {
    uncovered_target_generators(f).is_empty()
}

/// A bijection on object generators that sends each morphism generator to a
/// conjugate of a distinct generator, hitting every target generator. Such
/// a functor has an inverse of the same shape.
pub fn is_isomorphism(f: &StrictFunctor) -> bool {
    if !is_generator_preserving_on_objects(f) || !is_transition_preserving(f) {
        return false;
    }
    let objects: BTreeSet<&String> = f.object_map().values().map(|w| &w.0[0]).collect();
    if objects.len() != f.source().objects().len() || objects.len() != f.target().objects().len() {
        return false;
    }
    let generators: BTreeSet<String> = f
        .source()
        .morphisms()
        .iter()
        .filter_map(|g| {
            f.image_diagram(&g.name)?
                .as_conjugate()
                .map(|c| c.generator)
        })
        .collect();
    generators.len() == f.source().morphisms().len()
        && generators.len() == f.target().morphisms().len()
}
