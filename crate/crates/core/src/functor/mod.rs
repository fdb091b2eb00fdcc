//! Strict monoidal functors between free presentations.

mod factor;
mod faithful;
mod predicates;

pub use factor::factor_through;
pub use faithful::{
    check_faithful_bounded, check_faithful_with_budget, Faithfulness, DEFAULT_BUDGET,
};
pub use predicates::{
    covers_all_target_generators, is_generator_preserving_on_objects,
    is_injective_on_object_generators, is_isomorphism, is_transition_preserving,
    uncovered_target_generators,
};

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::fssmc::{perm, terms_equal, to_diagram, ObjectWord, Term};
use crate::net::SmcPresentation;

/// A strict monoidal functor given by its action on generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrictFunctor {
    source: SmcPresentation,
    target: SmcPresentation,
    objects: BTreeMap<String, ObjectWord>,
    morphisms: BTreeMap<String, Term>,
}

impl StrictFunctor {
    /// Checks totality and strictness: every generator image must have
    /// exactly the mapped domain and codomain.
    pub fn new(
        source: SmcPresentation,
        target: SmcPresentation,
        objects: BTreeMap<String, ObjectWord>,
        morphisms: BTreeMap<String, Term>,
    ) -> Result<Self> {
        for o in source.objects() {
            let image = objects
                .get(o)
                .ok_or_else(|| Error::MissingImage(o.clone()))?;
            target.check_word(image)?;
        }
        if let Some(extra) = objects.keys().find(|o| !source.has_object(o)) {
            return Err(Error::ExtraImage(extra.clone()));
        }
        if let Some(extra) = morphisms.keys().find(|m| source.morphism(m).is_none()) {
            return Err(Error::ExtraImage(extra.clone()));
        }
        let f = Self {
            source,
            target,
            objects,
            morphisms,
        };
        for g in f.source.morphisms() {
            let image = f
                .morphisms
                .get(&g.name)
                .ok_or_else(|| Error::MissingImage(g.name.clone()))?;
            let (found_dom, found_cod) = image.typecheck(&f.target)?;
            let expected_dom = f.map_word(&g.dom);
            let expected_cod = f.map_word(&g.cod);
            if found_dom != expected_dom || found_cod != expected_cod {
                return Err(Error::NotStrict {
                    generator: g.name.clone(),
                    expected_dom,
                    expected_cod,
                    found_dom,
                    found_cod,
                });
            }
        }
        Ok(f)
    }

    pub fn identity(sig: &SmcPresentation) -> Self {
        Self {
            source: sig.clone(),
            target: sig.clone(),
            objects: sig
                .objects()
                .iter()
                .map(|o| (o.clone(), ObjectWord::from_letters([o.clone()])))
                .collect(),
            morphisms: sig
                .morphisms()
                .iter()
                .map(|m| (m.name.clone(), Term::gen(m.name.clone())))
                .collect(),
        }
    }

    pub fn source(&self) -> &SmcPresentation {
        &self.source
    }

    pub fn target(&self) -> &SmcPresentation {
        &self.target
    }

    pub fn object_map(&self) -> &BTreeMap<String, ObjectWord> {
        &self.objects
    }

    pub fn morphism_map(&self) -> &BTreeMap<String, Term> {
        &self.morphisms
    }

    pub fn object_image(&self, object: &str) -> Option<&ObjectWord> {
        self.objects.get(object)
    }

    pub fn morphism_image(&self, generator: &str) -> Option<&Term> {
        self.morphisms.get(generator)
    }

    /// Letterwise image of a word.
    pub fn map_word(&self, word: &ObjectWord) -> ObjectWord {
        word.iter()
            .flat_map(|l| self.objects.get(l).map(|w| w.0.clone()).unwrap_or_default())
            .collect()
    }

    /// Homomorphic image of a term over the source.
    pub fn apply(&self, term: &Term) -> Result<Term> {
        term.typecheck(&self.source)?;
        Ok(map_term(term, &|l| self.objects[l].clone(), &|g| {
            self.morphisms[g].clone()
        }))
    }

    /// Generator-wise equality up to the free SMC equations.
    pub fn equivalent(&self, other: &StrictFunctor) -> bool {
        self.source == other.source
            && self.target == other.target
            && self.objects == other.objects
            && self.source.morphisms().iter().all(|g| {
                terms_equal(
                    &self.morphisms[&g.name],
                    &other.morphisms[&g.name],
                    &self.target,
                )
                .unwrap_or(false)
            })
    }

    /// Diagram of a generator image.
    pub(crate) fn image_diagram(&self, generator: &str) -> Option<crate::fssmc::StringDiagram> {
        to_diagram(self.morphisms.get(generator)?, &self.target).ok()
    }
}

/// Lift object and generator assignments to a term. Symmetries become the
/// induced block permutations.
pub(crate) fn map_term(
    term: &Term,
    obj: &dyn Fn(&str) -> ObjectWord,
    gen: &dyn Fn(&str) -> Term,
) -> Term {
    let map_word = |w: &ObjectWord| -> ObjectWord { w.iter().flat_map(|l| obj(l).0).collect() };
    match term {
        Term::Gen(g) => gen(g),
        Term::Id(w) => Term::Id(map_word(w)),
        Term::Perm(w, p) => {
            let lengths: Vec<usize> = w.iter().map(|l| obj(l).len()).collect();
            Term::Perm(map_word(w), perm::blocks(&lengths, p))
        }
        Term::Comp(a, b) => map_term(a, obj, gen).comp(map_term(b, obj, gen)),
        Term::Ten(a, b) => map_term(a, obj, gen).ten(map_term(b, obj, gen)),
    }
}

/// `F ; G`, first `F` then `G`.
pub fn compose_functors(f: &StrictFunctor, g: &StrictFunctor) -> Result<StrictFunctor> {
    if f.target != g.source {
        return Err(Error::SourceTargetMismatch(
            "the first functor's target is not the second functor's source".into(),
        ));
    }
    let objects = f
        .objects
        .iter()
        .map(|(o, w)| (o.clone(), g.map_word(w)))
        .collect();
    let morphisms = f
        .morphisms
        .iter()
        .map(|(m, t)| Ok((m.clone(), g.apply(t)?.simplify())))
        .collect::<Result<_>>()?;
    Ok(StrictFunctor {
        source: f.source.clone(),
        target: g.target.clone(),
        objects,
        morphisms,
    })
}
