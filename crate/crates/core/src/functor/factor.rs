use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::fssmc::{perm, terms_equal, ObjectWord, Term};

use super::{map_term, StrictFunctor};

/// Given a transition-preserving `coeq: D -> E` that is surjective on
/// generators and `h: D -> T`, builds the unique `k: E -> T` with
/// `coeq ; k = h`. Fails with `WellDefinednessFailure` when `h` does not
/// respect the identifications made by `coeq`.
pub fn factor_through(coeq: &StrictFunctor, h: &StrictFunctor) -> Result<StrictFunctor> {
    if coeq.source() != h.source() {
        return Err(Error::SourceMismatch);
    }
    let e = coeq.target();
    let mut objects: BTreeMap<String, ObjectWord> = BTreeMap::new();
    for d in coeq.source().objects() {
        let class = match coeq.object_image(d).map(|w| w.letters()) {
            Some([single]) => single.clone(),
            _ => {
                return Err(Error::PreconditionFailed(format!(
                    "object `{d}` is not sent to a single generator"
                )))
            }
        };
        let image = h.object_image(d).expect("total functor").clone();
        match objects.get(&class) {
            Some(prev) if prev != &image => {
                return Err(Error::WellDefinednessFailure(format!(
                    "object class `{class}` has images {prev} and {image}"
                )))
            }
            _ => {
                objects.insert(class, image);
            }
        }
    }
    if let Some(o) = e.objects().iter().find(|o| !objects.contains_key(*o)) {
        return Err(Error::WellDefinednessFailure(format!(
            "object generator `{o}` is not hit by the quotient"
        )));
    }

    let obj = |l: &str| objects[l].clone();
    let mut morphisms: BTreeMap<String, Term> = BTreeMap::new();
    for m in coeq.source().morphisms() {
        let conj = coeq
            .image_diagram(&m.name)
            .and_then(|d| d.as_conjugate())
            .ok_or_else(|| {
                Error::PreconditionFailed(format!(
                    "generator `{}` is not sent to a conjugate",
                    m.name
                ))
            })?;
        // k(u) = k(σ⁻¹) ; h(m) ; k(σ'⁻¹)
        let undo = |t: &Term| match t {
            Term::Perm(w, p) => Term::Perm(w.permuted(p), perm::inverse(p)),
            other => other.clone(),
        };
        let no_gen = |g: &str| -> Term { unreachable!("symmetry contains generator {g}") };
        let candidate = map_term(&undo(&conj.pre), &obj, &no_gen)
            .comp(h.morphism_image(&m.name).expect("total functor").clone())
            .comp(map_term(&undo(&conj.post), &obj, &no_gen))
            .simplify();
        match morphisms.get(&conj.generator) {
            Some(prev) => {
                if !terms_equal(prev, &candidate, h.target())? {
                    return Err(Error::WellDefinednessFailure(format!(
                        "generator class `{}` has images {prev} and {candidate}",
                        conj.generator
                    )));
                }
            }
            None => {
                morphisms.insert(conj.generator.clone(), candidate);
            }
        }
    }
    if let Some(g) = e
        .morphisms()
        .iter()
        .find(|g| !morphisms.contains_key(&g.name))
    {
        return Err(Error::WellDefinednessFailure(format!(
            "generator `{}` is not hit by the quotient",
            g.name
        )));
    }
    StrictFunctor::new(e.clone(), h.target().clone(), objects, morphisms)
}
