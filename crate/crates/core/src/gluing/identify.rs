//! Identification of places and transitions carrying equal semantics.

use crate::error::{Error, Result};
use crate::fssmc::{terms_equal, ObjectWord};
use crate::functor::{
    compose_functors, factor_through, is_generator_preserving_on_objects, is_isomorphism,
    is_transition_preserving, StrictFunctor,
};
use crate::net::{free_smc, net_of_presentation, PetriNet, SmcPresentation};
use crate::semantics::NetWithSemantics;

use super::sync::semantic_violation;
use super::{coequalize_tp, merge_two_places, place_pairing, Verdict, Violation};

/// A net `W` with two transition-preserving functors into the net being
/// quotiented; `x ∈ W` asks for `l x` and `r x` to be identified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub net: PetriNet,
    pub l: StrictFunctor,
    pub r: StrictFunctor,
}

impl Witness {
    /// The discrete witness `O_n` identifying each pair of places.
    pub fn places(target: &SmcPresentation, pairs: &[(String, String)]) -> Result<Witness> {
        let (net, l, r) = place_pairing(target, target, pairs)?;
        Ok(Witness { net, l, r })
    }

    pub fn is_discrete(&self) -> bool {
        self.net.transitions().is_empty()
    }

    fn check(&self, target: &SmcPresentation) -> Result<()> {
        let sig = free_smc(&self.net);
        for (label, h) in [("l", &self.l), ("r", &self.r)] {
            if h.source() != &sig || h.target() != target {
                return Err(Error::SourceTargetMismatch(format!(
                    "witness map {label} does not run from the witness net to the net"
                )));
            }
            if !is_generator_preserving_on_objects(h) || !is_transition_preserving(h) {
                return Err(Error::PredicateFailed(format!(
                    "witness map {label} must be transition- and generator-preserving"
                )));
            }
        }
        Ok(())
    }
}

fn single(w: &ObjectWord) -> &str {
    &w.0[0]
}

/// Quotient of `nets` by the witness, with its fold factored through the
/// quotient.
pub fn identify(nets: &NetWithSemantics, w: &Witness) -> Result<(NetWithSemantics, StrictFunctor)> {
    let sig = nets.presentation();
    w.check(sig)?;
    let via_l = nets.fold().precompose(&w.l)?;
    let via_r = nets.fold().precompose(&w.r)?;
    if let Some(generator) = via_l.first_disagreement(&via_r)? {
        return Err(Error::SemanticsObstruction {
            generator,
            reason: "the two sides have different semantics".into(),
        });
    }

    let (e, coeq) = if w.is_discrete() {
        let mut cumulative = StrictFunctor::identity(sig);
        for x in w.net.places() {
            let a = single(
                cumulative
                    .object_image(single(w.l.object_image(x).expect("total")))
                    .expect("total"),
            )
            .to_string();
            let b = single(
                cumulative
                    .object_image(single(w.r.object_image(x).expect("total")))
                    .expect("total"),
            )
            .to_string();
            if a == b {
                continue;
            }
            let current = cumulative.target().clone();
            let (keep, drop) = if current.object_index(&a) < current.object_index(&b) {
                (a, b)
            } else {
                (b, a)
            };
            let (_, step) = merge_two_places(&current, &keep, &drop)?;
            cumulative = compose_functors(&cumulative, &step)?;
        }
        (cumulative.target().clone(), cumulative)
    } else {
        coequalize_tp(&w.l, &w.r)?
    };

    let fold = nets.fold().factor_through(&coeq)?;
    let quotient = NetWithSemantics::new(net_of_presentation(&e), fold)?;
    if let Some(generator) = quotient
        .fold()
        .precompose(&coeq)?
        .first_disagreement(nets.fold())?
    {
        return Err(Error::WellDefinednessFailure(format!(
            "factored fold does not restore the original on `{generator}`"
        )));
    }
    Ok((quotient, coeq))
}

/// Checks that `f: src -> tgt` is an identification of `src` by `w`: it
/// coequalizes the witness maps, respects the folds, and is isomorphic to
/// the canonical quotient.
pub fn verify_identification(
    f: &StrictFunctor,
    src: &NetWithSemantics,
    tgt: &NetWithSemantics,
    w: &Witness,
) -> Result<Verdict> {
    if src.semantics() != tgt.semantics() {
        return Err(Error::SemanticsMismatch(
            "the nets have different semantics".into(),
        ));
    }
    if f.source() != src.presentation() || f.target() != tgt.presentation() {
        return Err(Error::SourceTargetMismatch(
            "functor does not run between the given nets".into(),
        ));
    }
    w.check(src.presentation())?;
    let mut verdict = Verdict::default();
    if !is_generator_preserving_on_objects(f) {
        verdict.failures.push(Violation::NotGeneratorPreserving);
        return Ok(verdict);
    }
    let lf = compose_functors(&w.l, f)?;
    let rf = compose_functors(&w.r, f)?;
    for x in w.net.places() {
        if lf.object_image(x) != rf.object_image(x) {
            verdict.failures.push(Violation::NotCoequalizing {
                generator: x.clone(),
            });
        }
    }
    for t in w.net.transitions() {
        let same = terms_equal(
            lf.morphism_image(&t.name).expect("total"),
            rf.morphism_image(&t.name).expect("total"),
            f.target(),
        )?;
        if !same {
            verdict.failures.push(Violation::NotCoequalizing {
                generator: t.name.clone(),
            });
        }
    }
    if let Some(v) = semantic_violation(f, src, tgt)? {
        verdict.failures.push(v);
    }
    if verdict.pass() {
        let (_, coeq) = coequalize_tp(&w.l, &w.r)?;
        match factor_through(&coeq, f) {
            Ok(k) if is_isomorphism(&k) => {}
            Ok(_) => verdict.failures.push(Violation::NotUniversal(
                "the mediating functor is not invertible".into(),
            )),
            Err(e) => verdict
                .failures
                .push(Violation::NotUniversal(e.to_string())),
        }
    }
    Ok(verdict)
}
