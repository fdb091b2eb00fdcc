use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A word in the free monoid on object generators. The empty word is the
/// monoidal unit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ObjectWord(pub Vec<String>);

impl ObjectWord {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn from_letters<I, S>(letters: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self(letters.into_iter().map(Into::into).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[String] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, String> {
        self.0.iter()
    }

    pub fn concat(&self, other: &ObjectWord) -> ObjectWord {
        let mut letters = self.0.clone();
        letters.extend(other.0.iter().cloned());
        ObjectWord(letters)
    }

    /// Letter counts, ignoring order.
    pub fn counts(&self) -> BTreeMap<String, u32> {
        let mut counts = BTreeMap::new();
        for letter in &self.0 {
            *counts.entry(letter.clone()).or_insert(0) += 1;
        }
        counts
    }

    /// The word rearranged by `perm`, where output position `i` holds
    /// input letter `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> ObjectWord {
        ObjectWord(perm.iter().map(|&i| self.0[i].clone()).collect())
    }
}

impl fmt::Display for ObjectWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        f.write_str(&self.0.join("·"))
    }
}

impl FromIterator<String> for ObjectWord {
    fn from_iter<T: IntoIterator<Item = String>>(iter: T) -> Self {
        ObjectWord(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a ObjectWord {
    type Item = &'a String;
    type IntoIter = std::slice::Iter<'a, String>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}
