//! Semantics categories, folds into them, and change of semantics.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::fssmc::{terms_equal, ObjectWord, Term};
use crate::functor::{compose_functors, factor_through, StrictFunctor};
use crate::net::{free_smc, CoproductInjection, PetriNet, SmcPresentation};

/// A semantics category. Free presentations have decidable equality, the
/// terminal category has one morphism per hom-set, and products compare
/// componentwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Semantics {
    Free(SmcPresentation),
    Terminal,
    Product(Box<Semantics>, Box<Semantics>),
}

impl Semantics {
    pub fn product(left: Semantics, right: Semantics) -> Semantics {
        Semantics::Product(Box::new(left), Box::new(right))
    }
}

/// An object of a semantics category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SemObject {
    Free(ObjectWord),
    Unit,
    Pair(Box<SemObject>, Box<SemObject>),
}

/// A morphism of a semantics category; products store pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SemMorphism {
    Free(Term),
    Unit,
    Pair(Box<SemMorphism>, Box<SemMorphism>),
}

impl fmt::Display for SemObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemObject::Free(w) => write!(f, "{w}"),
            SemObject::Unit => f.write_str("*"),
            SemObject::Pair(a, b) => write!(f, "<{a}, {b}>"),
        }
    }
}

impl fmt::Display for SemMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemMorphism::Free(t) => write!(f, "{t}"),
            SemMorphism::Unit => f.write_str("*"),
            SemMorphism::Pair(a, b) => write!(f, "<{a}, {b}>"),
        }
    }
}

/// Equality of parallel morphisms in `s`.
pub fn sem_equal(s: &Semantics, a: &SemMorphism, b: &SemMorphism) -> Result<bool> {
    match (s, a, b) {
        (Semantics::Free(sig), SemMorphism::Free(x), SemMorphism::Free(y)) => {
            let (xd, xc) = x.typecheck(sig)?;
            let (yd, yc) = y.typecheck(sig)?;
            if xd != yd {
                return Err(Error::TypeMismatch {
                    context: "semantic equality (domains)".into(),
                    expected: xd,
                    found: yd,
                });
            }
            if xc != yc {
                return Err(Error::TypeMismatch {
                    context: "semantic equality (codomains)".into(),
                    expected: xc,
                    found: yc,
                });
            }
            terms_equal(x, y, sig)
        }
        (Semantics::Terminal, SemMorphism::Unit, SemMorphism::Unit) => Ok(true),
        (Semantics::Product(l, r), SemMorphism::Pair(a1, a2), SemMorphism::Pair(b1, b2)) => {
            Ok(sem_equal(l, a1, b1)? && sem_equal(r, a2, b2)?)
        }
        _ => Err(Error::SemanticsMismatch(
            "morphisms do not belong to the given semantics".into(),
        )),
    }
}

/// A strict monoidal functor from a free presentation into a semantics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Fold {
    Free(StrictFunctor),
    Terminal { source: SmcPresentation },
    Product(Box<Fold>, Box<Fold>),
}

impl Fold {
    pub fn terminal(source: SmcPresentation) -> Fold {
        Fold::Terminal { source }
    }

    pub fn source(&self) -> &SmcPresentation {
        match self {
            Fold::Free(f) => f.source(),
            Fold::Terminal { source } => source,
            Fold::Product(l, _) => l.source(),
        }
    }

    pub fn semantics(&self) -> Semantics {
        match self {
            Fold::Free(f) => Semantics::Free(f.target().clone()),
            Fold::Terminal { .. } => Semantics::Terminal,
            Fold::Product(l, r) => Semantics::product(l.semantics(), r.semantics()),
        }
    }

    pub fn left(&self) -> Option<&Fold> {
        match self {
            Fold::Product(l, _) => Some(l),
            _ => None,
        }
    }

    pub fn right(&self) -> Option<&Fold> {
        match self {
            Fold::Product(_, r) => Some(r),
            _ => None,
        }
    }

    pub fn object_image(&self, object: &str) -> Option<SemObject> {
        if !self.source().has_object(object) {
            return None;
        }
        Some(match self {
            Fold::Free(f) => SemObject::Free(f.object_image(object)?.clone()),
            Fold::Terminal { .. } => SemObject::Unit,
            Fold::Product(l, r) => SemObject::Pair(
                Box::new(l.object_image(object)?),
                Box::new(r.object_image(object)?),
            ),
        })
    }

    pub fn apply(&self, term: &Term) -> Result<SemMorphism> {
        match self {
            Fold::Free(f) => Ok(SemMorphism::Free(f.apply(term)?)),
            Fold::Terminal { source } => {
                term.typecheck(source)?;
                Ok(SemMorphism::Unit)
            }
            Fold::Product(l, r) => Ok(SemMorphism::Pair(
                Box::new(l.apply(term)?),
                Box::new(r.apply(term)?),
            )),
        }
    }

    /// `f ; self`.
    pub fn precompose(&self, f: &StrictFunctor) -> Result<Fold> {
        if f.target() != self.source() {
            return Err(Error::SourceTargetMismatch(
                "functor target is not the fold's source".into(),
            ));
        }
        Ok(match self {
            Fold::Free(h) => Fold::Free(compose_functors(f, h)?),
            Fold::Terminal { .. } => Fold::terminal(f.source().clone()),
            Fold::Product(l, r) => {
                Fold::Product(Box::new(l.precompose(f)?), Box::new(r.precompose(f)?))
            }
        })
    }

    /// The first generator (object or morphism) on which two folds with the
    /// same source and semantics disagree.
    pub fn first_disagreement(&self, other: &Fold) -> Result<Option<String>> {
        if self.source() != other.source() {
            return Err(Error::SourceMismatch);
        }
        let semantics = self.semantics();
        if semantics != other.semantics() {
            return Err(Error::SemanticsMismatch(
                "folds land in different semantics".into(),
            ));
        }
        for o in self.source().objects() {
            if self.object_image(o) != other.object_image(o) {
                return Ok(Some(o.clone()));
            }
        }
        for g in self.source().morphisms() {
            let t = Term::gen(g.name.clone());
            if !sem_equal(&semantics, &self.apply(&t)?, &other.apply(&t)?)? {
                return Ok(Some(g.name.clone()));
            }
        }
        Ok(None)
    }

    /// Generator-wise semantic equality.
    pub fn agrees_with(&self, other: &Fold) -> Result<bool> {
        Ok(self.first_disagreement(other)?.is_none())
    }

    /// The fold on a coproduct determined by folds on its summands.
    pub fn copair(
        &self,
        other: &Fold,
        sum: &SmcPresentation,
        left: &CoproductInjection,
        right: &CoproductInjection,
    ) -> Result<Fold> {
        Ok(match (self, other) {
            (Fold::Free(m), Fold::Free(n)) => {
                if m.target() != n.target() {
                    return Err(Error::SemanticsMismatch(
                        "copairing folds into different presentations".into(),
                    ));
                }
                let mut objects = BTreeMap::new();
                let mut morphisms = BTreeMap::new();
                for (f, inj) in [(m, left), (n, right)] {
                    for (o, w) in f.object_map() {
                        objects.insert(inj.places[o].clone(), w.clone());
                    }
                    for (g, t) in f.morphism_map() {
                        morphisms.insert(inj.transitions[g].clone(), t.clone());
                    }
                }
                Fold::Free(StrictFunctor::new(
                    sum.clone(),
                    m.target().clone(),
                    objects,
                    morphisms,
                )?)
            }
            (Fold::Terminal { .. }, Fold::Terminal { .. }) => Fold::terminal(sum.clone()),
            (Fold::Product(a, b), Fold::Product(c, d)) => Fold::Product(
                Box::new(a.copair(c, sum, left, right)?),
                Box::new(b.copair(d, sum, left, right)?),
            ),
            _ => {
                return Err(Error::SemanticsMismatch(
                    "copairing folds into different semantics".into(),
                ))
            }
        })
    }

    /// The fold `k` on the quotient with `coeq ; k = self`.
    pub fn factor_through(&self, coeq: &StrictFunctor) -> Result<Fold> {
        Ok(match self {
            Fold::Free(h) => Fold::Free(factor_through(coeq, h)?),
            Fold::Terminal { .. } => Fold::terminal(coeq.target().clone()),
            Fold::Product(l, r) => Fold::Product(
                Box::new(l.factor_through(coeq)?),
                Box::new(r.factor_through(coeq)?),
            ),
        })
    }
}

pub fn product_semantics(left: Semantics, right: Semantics) -> Semantics {
    Semantics::product(left, right)
}

/// The fold `<f1, f2>` into the product semantics.
pub fn pair_folds(f1: &Fold, f2: &Fold) -> Result<Fold> {
    if f1.source() != f2.source() {
        return Err(Error::SourceMismatch);
    }
    Ok(Fold::Product(Box::new(f1.clone()), Box::new(f2.clone())))
}

/// An object of `Petri^S`: a net with a fold of its executions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NetWithSemantics {
    net: PetriNet,
    fold: Fold,
}

impl NetWithSemantics {
    pub fn new(net: PetriNet, fold: Fold) -> Result<Self> {
        if fold.source() != &free_smc(&net) {
            return Err(Error::SourceTargetMismatch(
                "fold source is not the free category of the net".into(),
            ));
        }
        Ok(Self { net, fold })
    }

    /// The net with its unique fold into the terminal semantics.
    pub fn terminal(net: PetriNet) -> Self {
        let fold = Fold::terminal(free_smc(&net));
        Self { net, fold }
    }

    pub fn net(&self) -> &PetriNet {
        &self.net
    }

    pub fn fold(&self) -> &Fold {
        &self.fold
    }

    pub fn semantics(&self) -> Semantics {
        self.fold.semantics()
    }

    pub fn presentation(&self) -> &SmcPresentation {
        self.fold.source()
    }
}

/// Change of semantics along `h: S1 -> S2`, where `S1` is free.
pub fn transport(h: &Fold, nws: &NetWithSemantics) -> Result<NetWithSemantics> {
    let Fold::Free(fold) = nws.fold() else {
        return Err(Error::SemanticsMismatch(
            "transport needs a net folded into a free semantics".into(),
        ));
    };
    if fold.target() != h.source() {
        return Err(Error::SemanticsMismatch(
            "the semantics functor does not start at the net's semantics".into(),
        ));
    }
    NetWithSemantics::new(nws.net().clone(), h.precompose(fold)?)
}
