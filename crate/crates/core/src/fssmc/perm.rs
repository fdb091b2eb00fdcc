//! Permutation helpers. Throughout the crate a permutation `p` acting on a
//! word `w` produces the word whose `i`-th letter is `w[p[i]]`.

use super::ObjectWord;

pub fn is_bijection(perm: &[usize], len: usize) -> bool {
    if perm.len() != len {
        return false;
    }
    let mut seen = vec![false; len];
    for &i in perm {
        if i >= len || seen[i] {
            return false;
        }
        seen[i] = true;
    }
    true
}

pub fn identity(len: usize) -> Vec<usize> {
    (0..len).collect()
}

pub fn is_identity(perm: &[usize]) -> bool {
    perm.iter().enumerate().all(|(i, &p)| i == p)
}

pub fn inverse(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

/// Permutation equal to applying `first` and then `second`.
pub fn then(first: &[usize], second: &[usize]) -> Vec<usize> {
    second.iter().map(|&i| first[i]).collect()
}

/// Stable sort of `word` by `key`. Returns the permutation taking `word`
/// to its sorted form.
pub fn stable_sort_by_key<K: Ord>(word: &ObjectWord, key: impl Fn(&str) -> K) -> Vec<usize> {
    let mut perm = identity(word.len());
    perm.sort_by_key(|&i| key(&word.0[i]));
    perm
}

/// Permutation `p` with `to[i] = from[p[i]]`, pairing the k-th occurrence of
/// each letter in `to` with its k-th occurrence in `from`. `None` if the
/// words are not rearrangements of each other.
pub fn matching(from: &ObjectWord, to: &ObjectWord) -> Option<Vec<usize>> {
    if from.len() != to.len() {
        return None;
    }
    let mut used = vec![false; from.len()];
    let mut perm = Vec::with_capacity(to.len());
    for letter in to {
        let j = (0..from.len()).find(|&j| !used[j] && &from.0[j] == letter)?;
        used[j] = true;
        perm.push(j);
    }
    Some(perm)
}

/// Lift a permutation of blocks to a permutation of their letters.
pub fn blocks(lengths: &[usize], perm: &[usize]) -> Vec<usize> {
    let mut offsets = Vec::with_capacity(lengths.len());
    let mut acc = 0;
    for &l in lengths {
        offsets.push(acc);
        acc += l;
    }
    perm.iter()
        .flat_map(|&b| offsets[b]..offsets[b] + lengths[b])
        .collect()
}

/// Swap of two adjacent blocks of sizes `left` and `right`.
pub fn block_swap(left: usize, right: usize) -> Vec<usize> {
    (left..left + right).chain(0..left).collect()
}
