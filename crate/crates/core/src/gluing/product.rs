//! Coproducts of nets with semantics, and gluing along a shared witness.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::fssmc::{ObjectWord, Term};
use crate::functor::{compose_functors, StrictFunctor};
use crate::net::{free_smc, net_coproduct, CoproductInjection, PetriNet, SmcPresentation};
use crate::semantics::NetWithSemantics;

use super::sync::same_semantics;
use super::{identify, Witness};

fn injection(
    from: &SmcPresentation,
    to: &SmcPresentation,
    names: &CoproductInjection,
) -> StrictFunctor {
    let objects = from
        .objects()
        .iter()
        .map(|o| {
            (
                o.clone(),
                ObjectWord::from_letters([names.places[o].clone()]),
            )
        })
        .collect();
    let morphisms = from
        .morphisms()
        .iter()
        .map(|m| {
            (
                m.name.clone(),
                Term::gen(names.transitions[&m.name].clone()),
            )
        })
        .collect();
    StrictFunctor::new(from.clone(), to.clone(), objects, morphisms)
        .expect("coproduct injections preserve the place order")
}

/// `M ⊗ N`: the disjoint union with the copaired fold.
pub fn monoidal_product(
    m: &NetWithSemantics,
    n: &NetWithSemantics,
) -> Result<(NetWithSemantics, StrictFunctor, StrictFunctor)> {
    same_semantics(m, n)?;
    let (net, left, right) = net_coproduct(m.net(), n.net());
    let sum = free_smc(&net);
    let fold = m.fold().copair(n.fold(), &sum, &left, &right)?;
    let i1 = injection(m.presentation(), &sum, &left);
    let i2 = injection(n.presentation(), &sum, &right);
    Ok((NetWithSemantics::new(net, fold)?, i1, i2))
}

/// Result of gluing two nets along a witness.
#[derive(Debug, Clone)]
pub struct Glued {
    pub net: NetWithSemantics,
    /// Quotient map from the coproduct onto the glued net.
    pub coeq: StrictFunctor,
    /// Composite maps from each summand into the glued net.
    pub inj_left: StrictFunctor,
    pub inj_right: StrictFunctor,
}

/// Pushout of `M <- W -> N`, computed as the coequalizer of the two
/// composites into `M ⊗ N`.
pub fn pushout_glue(
    m: &NetWithSemantics,
    n: &NetWithSemantics,
    w: &PetriNet,
    l: &StrictFunctor,
    r: &StrictFunctor,
) -> Result<Glued> {
    let (sum, i1, i2) = monoidal_product(m, n)?;
    let witness = Witness {
        net: w.clone(),
        l: compose_functors(l, &i1)?,
        r: compose_functors(r, &i2)?,
    };
    let (net, coeq) = identify(&sum, &witness)?;
    Ok(Glued {
        inj_left: compose_functors(&i1, &coeq)?,
        inj_right: compose_functors(&i2, &coeq)?,
        net,
        coeq,
    })
}

/// Discrete witness maps pairing places of `m` with places of `n`.
pub fn place_pairing(
    m: &SmcPresentation,
    n: &SmcPresentation,
    pairs: &[(String, String)],
) -> Result<(PetriNet, StrictFunctor, StrictFunctor)> {
    let names: Vec<String> = (0..pairs.len()).map(|i| format!("x{i}")).collect();
    let w = PetriNet::new(names.clone(), vec![])?;
    let sig = free_smc(&w);
    let side = |target: &SmcPresentation, pick: fn(&(String, String)) -> &String| {
        let objects: BTreeMap<String, ObjectWord> = names
            .iter()
            .zip(pairs)
            .map(|(x, pair)| (x.clone(), ObjectWord::from_letters([pick(pair).clone()])))
            .collect();
        StrictFunctor::new(sig.clone(), target.clone(), objects, BTreeMap::new())
    };
    let l = side(m, |p| &p.0)?;
    let r = side(n, |p| &p.1)?;
    Ok((w, l, r))
}
