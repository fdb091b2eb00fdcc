//! JSON documents for nets, semantics, functors, witnesses and recipes.
//!
//! Serialization is canonical: object keys are sorted, arrays keep
//! declaration order, and terms are written in their s-expression form.

use std::collections::BTreeMap;

use serde::{de::DeserializeOwned, Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fssmc::ObjectWord;
use crate::functor::StrictFunctor;
use crate::gluing::{SyncRecipe, Witness};
use crate::net::{free_smc, GeneratorSig, Multiset, PetriNet, SmcPresentation, Transition};
use crate::semantics::{Fold, NetWithSemantics, Semantics};

use super::parse_term;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransitionDoc {
    pub name: String,
    #[serde(default)]
    pub pre: BTreeMap<String, u32>,
    #[serde(default)]
    pub post: BTreeMap<String, u32>,
}

/// A bare net: places in order and transitions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PetriNetDoc {
    pub places: Vec<String>,
    #[serde(default)]
    pub transitions: Vec<TransitionDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorDoc {
    pub name: String,
    pub dom: Vec<String>,
    pub cod: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "backend", rename_all = "lowercase", deny_unknown_fields)]
pub enum SemanticsDoc {
    Free {
        objects: Vec<String>,
        #[serde(default)]
        morphisms: Vec<GeneratorDoc>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        equations: Vec<serde_json::Value>,
    },
    Terminal,
    Product {
        left: Box<SemanticsDoc>,
        right: Box<SemanticsDoc>,
    },
}

/// Generator images of a fold or functor. Folds into products use `left`
/// and `right`; folds into the terminal semantics are empty.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FoldDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub objects: Option<BTreeMap<String, Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub morphisms: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<Box<FoldDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<Box<FoldDoc>>,
}

impl FoldDoc {
    pub fn is_empty(&self) -> bool {
        self == &FoldDoc::default()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NetDocument {
    pub places: Vec<String>,
    #[serde(default)]
    pub transitions: Vec<TransitionDoc>,
    pub semantics: SemanticsDoc,
    #[serde(default, skip_serializing_if = "FoldDoc::is_empty")]
    pub fold: FoldDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<SemanticsDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<SemanticsDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub objects: Option<BTreeMap<String, Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub morphisms: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<Box<FoldDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<Box<FoldDoc>>,
}

impl FunctorDoc {
    fn images(&self) -> FoldDoc {
        FoldDoc {
            objects: self.objects.clone(),
            morphisms: self.morphisms.clone(),
            left: self.left.clone(),
            right: self.right.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessDoc {
    pub net: PetriNetDoc,
    pub l: FunctorDoc,
    pub r: FunctorDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RecipeDoc {
    pub name: String,
    pub expression: String,
    #[serde(default)]
    pub prune: bool,
}

fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| {
        let (line, column) = (e.line(), e.column());
        let full = e.to_string();
        let message = full
            .strip_suffix(&format!(" at line {line} column {column}"))
            .unwrap_or(&full)
            .to_string();
        Error::Parse {
            line,
            column,
            message,
        }
    })
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("documents serialize");
    let mut out = serde_json::to_string_pretty(&value).expect("values serialize");
    out.push('\n');
    out
}

fn invalid(context: &str, e: Error) -> Error {
    match e {
        Error::Validation(_) | Error::Parse { .. } => e,
        other => Error::Validation(format!("{context}: {other}")),
    }
}

fn multiset(map: &BTreeMap<String, u32>) -> Result<Multiset> {
    Multiset::from_counts(map.iter().map(|(k, v)| (k.clone(), *v)))
}

impl PetriNetDoc {
    pub fn to_net(&self) -> Result<PetriNet> {
        let transitions = self
            .transitions
            .iter()
            .map(|t| {
                Ok(Transition::new(
                    t.name.clone(),
                    multiset(&t.pre)?,
                    multiset(&t.post)?,
                ))
            })
            .collect::<Result<Vec<_>>>()
            .map_err(|e| invalid("net", e))?;
        PetriNet::new(self.places.clone(), transitions).map_err(|e| invalid("net", e))
    }

    pub fn from_net(net: &PetriNet) -> Self {
        Self {
            places: net.places().to_vec(),
            transitions: net
                .transitions()
                .iter()
                .map(|t| TransitionDoc {
                    name: t.name.clone(),
                    pre: t.pre.as_map().clone(),
                    post: t.post.as_map().clone(),
                })
                .collect(),
        }
    }
}

impl SemanticsDoc {
    pub fn to_semantics(&self) -> Result<Semantics> {
        Ok(match self {
            SemanticsDoc::Free {
                objects,
                morphisms,
                equations,
            } => {
                if !equations.is_empty() {
                    return Err(Error::Validation(
                        "semantics with equations are not supported: their word problem is undecidable in general; use a free, terminal or product semantics".into(),
                    ));
                }
                let gens = morphisms
                    .iter()
                    .map(|g| {
                        GeneratorSig::new(
                            g.name.clone(),
                            ObjectWord(g.dom.clone()),
                            ObjectWord(g.cod.clone()),
                        )
                    })
                    .collect();
                Semantics::Free(
                    SmcPresentation::new(objects.clone(), gens)
                        .map_err(|e| invalid("semantics", e))?,
                )
            }
            SemanticsDoc::Terminal => Semantics::Terminal,
            SemanticsDoc::Product { left, right } => {
                Semantics::product(left.to_semantics()?, right.to_semantics()?)
            }
        })
    }

    pub fn from_semantics(s: &Semantics) -> Self {
        match s {
            Semantics::Free(sig) => SemanticsDoc::Free {
                objects: sig.objects().to_vec(),
                morphisms: sig
                    .morphisms()
                    .iter()
                    .map(|m| GeneratorDoc {
                        name: m.name.clone(),
                        dom: m.dom.0.clone(),
                        cod: m.cod.0.clone(),
                    })
                    .collect(),
                equations: vec![],
            },
            Semantics::Terminal => SemanticsDoc::Terminal,
            Semantics::Product(l, r) => SemanticsDoc::Product {
                left: Box::new(Self::from_semantics(l)),
                right: Box::new(Self::from_semantics(r)),
            },
        }
    }
}

/// A functor between free presentations from its generator images.
pub fn functor_from_images(
    doc: &FoldDoc,
    source: &SmcPresentation,
    target: &SmcPresentation,
) -> Result<StrictFunctor> {
    if doc.left.is_some() || doc.right.is_some() {
        return Err(Error::Validation(
            "`left`/`right` only apply to folds into product semantics".into(),
        ));
    }
    let objects = doc
        .objects
        .iter()
        .flatten()
        .map(|(k, v)| (k.clone(), ObjectWord(v.clone())))
        .collect();
    let morphisms = doc
        .morphisms
        .iter()
        .flatten()
        .map(|(k, v)| {
            parse_term(v)
                .map(|t| (k.clone(), t))
                .map_err(|e| Error::Validation(format!("image of `{k}`: {e}")))
        })
        .collect::<Result<_>>()?;
    StrictFunctor::new(source.clone(), target.clone(), objects, morphisms)
        .map_err(|e| invalid("functor", e))
}

pub fn fold_from_doc(
    doc: &FoldDoc,
    source: &SmcPresentation,
    semantics: &Semantics,
) -> Result<Fold> {
    match semantics {
        Semantics::Free(target) => Ok(Fold::Free(functor_from_images(doc, source, target)?)),
        Semantics::Terminal => {
            if !doc.is_empty() {
                return Err(Error::Validation(
                    "a fold into the terminal semantics has no generator images".into(),
                ));
            }
            Ok(Fold::terminal(source.clone()))
        }
        Semantics::Product(l, r) => {
            let (Some(ld), Some(rd)) = (&doc.left, &doc.right) else {
                return Err(Error::Validation(
                    "a fold into a product semantics needs `left` and `right`".into(),
                ));
            };
            if doc.objects.is_some() || doc.morphisms.is_some() {
                return Err(Error::Validation(
                    "a fold into a product semantics is given by `left` and `right` only".into(),
                ));
            }
            Ok(Fold::Product(
                Box::new(fold_from_doc(ld, source, l)?),
                Box::new(fold_from_doc(rd, source, r)?),
            ))
        }
    }
}

pub fn images_of(f: &StrictFunctor) -> FoldDoc {
    FoldDoc {
        objects: Some(
            f.object_map()
                .iter()
                .map(|(k, v)| (k.clone(), v.0.clone()))
                .collect(),
        ),
        morphisms: Some(
            f.morphism_map()
                .iter()
                .map(|(k, v)| (k.clone(), v.to_string()))
                .collect(),
        ),
        left: None,
        right: None,
    }
}

pub fn fold_doc(fold: &Fold) -> FoldDoc {
    match fold {
        Fold::Free(f) => images_of(f),
        Fold::Terminal { .. } => FoldDoc::default(),
        Fold::Product(l, r) => FoldDoc {
            left: Some(Box::new(fold_doc(l))),
            right: Some(Box::new(fold_doc(r))),
            ..FoldDoc::default()
        },
    }
}

impl NetDocument {
    pub fn to_model(&self) -> Result<NetWithSemantics> {
        let net = PetriNetDoc {
            places: self.places.clone(),
            transitions: self.transitions.clone(),
        }
        .to_net()?;
        let semantics = self.semantics.to_semantics()?;
        let fold = fold_from_doc(&self.fold, &free_smc(&net), &semantics)?;
        NetWithSemantics::new(net, fold).map_err(|e| invalid("net", e))
    }

    pub fn from_model(nets: &NetWithSemantics) -> Self {
        let bare = PetriNetDoc::from_net(nets.net());
        Self {
            places: bare.places,
            transitions: bare.transitions,
            semantics: SemanticsDoc::from_semantics(&nets.semantics()),
            fold: fold_doc(nets.fold()),
        }
    }
}

pub fn parse_net(text: &str) -> Result<NetWithSemantics> {
    from_json::<NetDocument>(text)?.to_model()
}

pub fn serialize_net(nets: &NetWithSemantics) -> String {
    to_canonical_json(&NetDocument::from_model(nets))
}

pub fn parse_petri_net(text: &str) -> Result<PetriNet> {
    from_json::<PetriNetDoc>(text)?.to_net()
}

fn check_declared(
    declared: &Option<SemanticsDoc>,
    actual: &SmcPresentation,
    side: &str,
) -> Result<()> {
    if let Some(doc) = declared {
        if doc.to_semantics()? != Semantics::Free(actual.clone()) {
            return Err(Error::Validation(format!(
                "declared {side} does not match the presentation it is used with"
            )));
        }
    }
    Ok(())
}

/// A functor between two given presentations. Declared `source` and
/// `target`, when present, must agree with them.
pub fn parse_functor(
    text: &str,
    source: &SmcPresentation,
    target: &SmcPresentation,
) -> Result<StrictFunctor> {
    let doc: FunctorDoc = from_json(text)?;
    check_declared(&doc.source, source, "source")?;
    check_declared(&doc.target, target, "target")?;
    functor_from_images(&doc.images(), source, target)
}

/// A semantics functor out of `source`; its `target` is required.
pub fn parse_semantics_functor(text: &str, source: &SmcPresentation) -> Result<Fold> {
    let doc: FunctorDoc = from_json(text)?;
    check_declared(&doc.source, source, "source")?;
    let target = doc
        .target
        .as_ref()
        .ok_or_else(|| Error::Validation("a semantics functor needs a `target`".into()))?
        .to_semantics()?;
    fold_from_doc(&doc.images(), source, &target)
}

pub fn serialize_functor(f: &StrictFunctor) -> String {
    let images = images_of(f);
    to_canonical_json(&FunctorDoc {
        source: Some(SemanticsDoc::from_semantics(&Semantics::Free(
            f.source().clone(),
        ))),
        target: Some(SemanticsDoc::from_semantics(&Semantics::Free(
            f.target().clone(),
        ))),
        objects: images.objects,
        morphisms: images.morphisms,
        left: None,
        right: None,
    })
}

pub fn parse_witness(text: &str, target: &SmcPresentation) -> Result<Witness> {
    let doc: WitnessDoc = from_json(text)?;
    let net = doc.net.to_net()?;
    let sig = free_smc(&net);
    let l = functor_from_images(&doc.l.images(), &sig, target)?;
    let r = functor_from_images(&doc.r.images(), &sig, target)?;
    Ok(Witness { net, l, r })
}

pub fn parse_recipe(text: &str) -> Result<SyncRecipe> {
    let doc: RecipeDoc = from_json(text)?;
    let expression = parse_term(&doc.expression)
        .map_err(|e| Error::Validation(format!("recipe expression: {e}")))?;
    Ok(SyncRecipe {
        name: doc.name,
        expression,
        prune: doc.prune,
    })
}
