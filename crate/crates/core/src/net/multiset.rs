use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::fssmc::ObjectWord;

/// Finite multiset of places. Absent keys have multiplicity zero; stored
/// counts are always positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Multiset(BTreeMap<String, u32>);

impl Multiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_counts<I, S>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, u32)>,
        S: Into<String>,
    {
        let mut map = BTreeMap::new();
        for (place, count) in entries {
            let place = place.into();
            if count == 0 {
                return Err(Error::ZeroCount(place));
            }
            *map.entry(place).or_insert(0) += count;
        }
        Ok(Self(map))
    }

    /// Counts the letters of a word.
    pub fn from_word(word: &ObjectWord) -> Self {
        Self(word.counts())
    }

    pub fn get(&self, place: &str) -> u32 {
        self.0.get(place).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, u32)> {
        self.0.iter().map(|(k, &v)| (k.as_str(), v))
    }

    pub fn places(&self) -> impl Iterator<Item = &str> {
        self.0.keys().map(String::as_str)
    }

    pub fn contains(&self, place: &str) -> bool {
        self.0.contains_key(place)
    }

    pub fn as_map(&self) -> &BTreeMap<String, u32> {
        &self.0
    }

    pub fn rename(&self, f: impl Fn(&str) -> String) -> Multiset {
        let mut map = BTreeMap::new();
        for (k, &v) in &self.0 {
            *map.entry(f(k)).or_insert(0) += v;
        }
        Multiset(map)
    }
}
