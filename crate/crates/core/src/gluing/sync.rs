//! Synchronization: conflating several firings into a single transition.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::fssmc::{perm, ObjectWord, Term};
use crate::functor::{
    check_faithful_bounded, covers_all_target_generators, is_generator_preserving_on_objects,
    is_injective_on_object_generators, uncovered_target_generators, Faithfulness, StrictFunctor,
};
use crate::net::{free_smc, prune_isolated_places, validate_name, Multiset, PetriNet, Transition};
use crate::semantics::{NetWithSemantics, Semantics};

use super::{Verdict, Violation};

pub const DEFAULT_FAITHFUL_BOUND: usize = 3;

/// How to build a synchronized net: the new transition's name, the
/// morphism it stands for, and whether to drop places left isolated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyncRecipe {
    pub name: String,
    pub expression: Term,
    pub prune: bool,
}

fn check_endpoints(
    f: &StrictFunctor,
    src: &NetWithSemantics,
    tgt: &NetWithSemantics,
) -> Result<()> {
    if f.source() != src.presentation() || f.target() != tgt.presentation() {
        return Err(Error::SourceTargetMismatch(
            "functor does not run between the given nets".into(),
        ));
    }
    Ok(())
}

pub(crate) fn semantic_violation(
    f: &StrictFunctor,
    src: &NetWithSemantics,
    tgt: &NetWithSemantics,
) -> Result<Option<Violation>> {
    let pulled = tgt.fold().precompose(f)?;
    Ok(pulled
        .first_disagreement(src.fold())?
        .map(|generator| Violation::SemanticsDoNotCommute { generator }))
}

/// `M♯ = F ; N♯`, generator-wise.
pub fn commutes_with_semantics(
    f: &StrictFunctor,
    src: &NetWithSemantics,
    tgt: &NetWithSemantics,
) -> Result<bool> {
    if src.semantics() != tgt.semantics() {
        return Err(Error::SemanticsMismatch(
            "the nets have different semantics".into(),
        ));
    }
    check_endpoints(f, src, tgt)?;
    Ok(semantic_violation(f, src, tgt)?.is_none())
}

/// Checks injectivity on objects, bounded faithfulness, coverage of the
/// target's generators and compatibility with the folds.
pub fn is_synchronization(
    f: &StrictFunctor,
    src: &NetWithSemantics,
    tgt: &NetWithSemantics,
    k: usize,
) -> Result<Verdict> {
    if src.semantics() != tgt.semantics() {
        return Err(Error::SemanticsMismatch(
            "the nets have different semantics".into(),
        ));
    }
    check_endpoints(f, src, tgt)?;
    let mut verdict = Verdict::default();
    if !is_generator_preserving_on_objects(f) {
        verdict.failures.push(Violation::NotGeneratorPreserving);
    } else if !is_injective_on_object_generators(f)? {
        verdict.failures.push(Violation::NotInjectiveOnObjects);
    }
    verdict.faithful_bound = Some(k);
    match check_faithful_bounded(f, k) {
        Ok(Faithfulness::FaithfulUpTo(_)) => {}
        Ok(Faithfulness::CounterexampleFound(left, right)) => verdict
            .failures
            .push(Violation::NotFaithful { left, right }),
        Err(Error::BudgetExceeded { limit }) => verdict
            .failures
            .push(Violation::FaithfulnessUndetermined { budget: limit }),
        Err(e) => return Err(e),
    }
    if !covers_all_target_generators(f) {
        verdict
            .failures
            .push(Violation::UncoveredGenerators(uncovered_target_generators(
                f,
            )));
    }
    if let Some(v) = semantic_violation(f, src, tgt)? {
        verdict.failures.push(v);
    }
    Ok(verdict)
}

/// `(M, F ; N♯)`, after checking that `F` is a synchronization.
pub fn make_synchronization(
    tgt: &NetWithSemantics,
    m: PetriNet,
    f: &StrictFunctor,
) -> Result<NetWithSemantics> {
    make_synchronization_bounded(tgt, m, f, DEFAULT_FAITHFUL_BOUND)
}

pub fn make_synchronization_bounded(
    tgt: &NetWithSemantics,
    m: PetriNet,
    f: &StrictFunctor,
    k: usize,
) -> Result<NetWithSemantics> {
    let src = NetWithSemantics::new(m, tgt.fold().precompose(f)?)?;
    let verdict = is_synchronization(f, &src, tgt, k)?;
    if !verdict.pass() {
        return Err(Error::VerdictFailed(verdict));
    }
    Ok(src)
}

pub fn synchronize_transitions(
    nets: &NetWithSemantics,
    recipe: &SyncRecipe,
) -> Result<(NetWithSemantics, StrictFunctor)> {
    synchronize_transitions_bounded(nets, recipe, DEFAULT_FAITHFUL_BOUND)
}

/// Replaces the transitions used by the recipe's expression with a single
/// new transition standing for it.
pub fn synchronize_transitions_bounded(
    nets: &NetWithSemantics,
    recipe: &SyncRecipe,
    k: usize,
) -> Result<(NetWithSemantics, StrictFunctor)> {
    let n = nets.net();
    let sig = nets.presentation();
    let (dom, cod) = recipe.expression.typecheck(sig)?;
    let used = recipe.expression.decomposition();
    if used.is_empty() {
        return Err(Error::EmptyDecomposition);
    }
    validate_name(&recipe.name)?;
    let survivors: Vec<&Transition> = n
        .transitions()
        .iter()
        .filter(|t| !used.contains(&t.name))
        .collect();
    if survivors.iter().any(|t| t.name == recipe.name) {
        return Err(Error::DuplicateName {
            kind: "transition",
            name: recipe.name.clone(),
        });
    }

    let fresh = Transition::new(
        recipe.name.clone(),
        Multiset::from_word(&dom),
        Multiset::from_word(&cod),
    );
    let insert_at = n
        .transitions()
        .iter()
        .position(|t| used.contains(&t.name))
        .expect("decomposition names transitions of the net");
    let mut transitions = Vec::with_capacity(survivors.len() + 1);
    for (i, t) in n.transitions().iter().enumerate() {
        if i == insert_at {
            transitions.push(fresh.clone());
        }
        if !used.contains(&t.name) {
            transitions.push(t.clone());
        }
    }
    let mut m = PetriNet::new(n.places().to_vec(), transitions)?;
    if recipe.prune {
        m = prune_isolated_places(&m).0;
    }

    let m_sig = free_smc(&m);
    let objects: BTreeMap<String, ObjectWord> = m
        .places()
        .iter()
        .map(|p| (p.clone(), ObjectWord::from_letters([p.clone()])))
        .collect();
    let mut morphisms: BTreeMap<String, Term> = survivors
        .iter()
        .map(|t| (t.name.clone(), Term::gen(t.name.clone())))
        .collect();
    let new_sig = m_sig.morphism(&recipe.name).expect("just added");
    let into = perm::matching(&new_sig.dom, &dom).expect("same letters");
    let out = perm::matching(&cod, &new_sig.cod).expect("same letters");
    let image = Term::Perm(new_sig.dom.clone(), into)
        .comp(recipe.expression.clone())
        .comp(Term::Perm(cod, out))
        .simplify();
    morphisms.insert(recipe.name.clone(), image);
    let f = StrictFunctor::new(m_sig, sig.clone(), objects, morphisms)?;
    let synced = make_synchronization_bounded(nets, m, &f, k)?;
    Ok((synced, f))
}

pub(crate) fn same_semantics(a: &NetWithSemantics, b: &NetWithSemantics) -> Result<Semantics> {
    let s = a.semantics();
    if s != b.semantics() {
        return Err(Error::SemanticsMismatch(
            "the nets have different semantics".into(),
        ));
    }
    Ok(s)
}
