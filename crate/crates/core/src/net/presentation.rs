use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::fssmc::{perm, ObjectWord};

use super::validate_name;

/// A generating morphism `name: dom -> cod`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorSig {
    pub name: String,
    pub dom: ObjectWord,
    pub cod: ObjectWord,
}

impl GeneratorSig {
    pub fn new(name: impl Into<String>, dom: ObjectWord, cod: ObjectWord) -> Self {
        Self {
            name: name.into(),
            dom,
            cod,
        }
    }
}

/// Presentation of a free symmetric strict monoidal category: ordered object
/// generators and typed morphism generators. The object order doubles as
/// the well-order used to linearize multisets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SmcPresentation {
    objects: Vec<String>,
    morphisms: Vec<GeneratorSig>,
}

impl SmcPresentation {
    pub fn new(objects: Vec<String>, morphisms: Vec<GeneratorSig>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for o in &objects {
            validate_name(o)?;
            if !seen.insert(o.as_str()) {
                return Err(Error::DuplicateName {
                    kind: "object generator",
                    name: o.clone(),
                });
            }
        }
        let mut seen_m = BTreeSet::new();
        for m in &morphisms {
            validate_name(&m.name)?;
            if !seen_m.insert(m.name.as_str()) {
                return Err(Error::DuplicateName {
                    kind: "morphism generator",
                    name: m.name.clone(),
                });
            }
            for letter in m.dom.iter().chain(m.cod.iter()) {
                if !seen.contains(letter.as_str()) {
                    return Err(Error::UnknownGenerator(letter.clone()));
                }
            }
        }
        Ok(Self { objects, morphisms })
    }

    pub fn empty() -> Self {
        Self {
            objects: Vec::new(),
            morphisms: Vec::new(),
        }
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[GeneratorSig] {
        &self.morphisms
    }

    pub fn morphism(&self, name: &str) -> Option<&GeneratorSig> {
        self.morphisms.iter().find(|m| m.name == name)
    }

    pub fn has_object(&self, name: &str) -> bool {
        self.objects.iter().any(|o| o == name)
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn morphism_index(&self, name: &str) -> Option<usize> {
        self.morphisms.iter().position(|m| m.name == name)
    }

    pub fn check_word(&self, word: &ObjectWord) -> Result<()> {
        match word.iter().find(|l| !self.has_object(l)) {
            Some(l) => Err(Error::UnknownGenerator(l.clone())),
            None => Ok(()),
        }
    }

    /// Stable sort of a word by object order; returns the sorted word and the
    /// permutation producing it.
    pub fn sort_word(&self, word: &ObjectWord) -> (ObjectWord, Vec<usize>) {
        let p = perm::stable_sort_by_key(word, |l| self.object_index(l).unwrap_or(usize::MAX));
        (word.permuted(&p), p)
    }

    pub fn is_sorted(&self, word: &ObjectWord) -> bool {
        word.0
            .windows(2)
            .all(|w| self.object_index(&w[0]) <= self.object_index(&w[1]))
    }
}
