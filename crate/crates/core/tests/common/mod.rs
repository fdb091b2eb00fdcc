//! Helpers shared by the integration tests: fixture loading, random
//! presentations and terms, and an independent presentation isomorphism
//! check.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;

use petrisem::fssmc::{perm, symmetry};
use petrisem::io::parse_net;
use petrisem::net::{GeneratorSig, Transition};
use petrisem::{Multiset, NetWithSemantics, ObjectWord, PetriNet, SmcPresentation, Term};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn fixture_path(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(rel)
}

pub fn fixture(rel: &str) -> String {
    std::fs::read_to_string(fixture_path(rel)).unwrap_or_else(|e| panic!("reading {rel}: {e}"))
}

pub fn load_net(rel: &str) -> NetWithSemantics {
    parse_net(&fixture(rel)).unwrap_or_else(|e| panic!("loading {rel}: {e}"))
}

/// Whitespace-separated letters.
pub fn word(s: &str) -> ObjectWord {
    ObjectWord::from_letters(s.split_whitespace())
}

pub fn ms(entries: &[(&str, u32)]) -> Multiset {
    Multiset::from_counts(entries.iter().map(|(p, n)| (p.to_string(), *n))).unwrap()
}

pub fn random_word(rng: &mut ChaCha8Rng, objects: &[String], max: usize) -> ObjectWord {
    let n = rng.gen_range(0..=max);
    (0..n)
        .map(|_| objects.choose(rng).unwrap().clone())
        .collect()
}

/// `objects` object generators named `{prefix}0..`, and `morphisms`
/// generators with random types of length at most `max_len`.
pub fn random_presentation(
    rng: &mut ChaCha8Rng,
    prefix: &str,
    objects: usize,
    morphisms: usize,
    max_len: usize,
) -> SmcPresentation {
    let names: Vec<String> = (0..objects).map(|i| format!("{prefix}{i}")).collect();
    let gens = (0..morphisms)
        .map(|i| {
            GeneratorSig::new(
                format!("{}{i}", prefix.to_lowercase()),
                random_word(rng, &names, max_len),
                random_word(rng, &names, max_len),
            )
        })
        .collect();
    SmcPresentation::new(names, gens).unwrap()
}

/// Up to `places` places `P0..` and `transitions` transitions `t0..` with
/// arc weights below three.
pub fn random_net(rng: &mut ChaCha8Rng, places: usize, transitions: usize) -> PetriNet {
    let names: Vec<String> = (0..rng.gen_range(1..=places))
        .map(|i| format!("P{i}"))
        .collect();
    let side = |rng: &mut ChaCha8Rng| {
        let counts: Vec<(String, u32)> = names
            .iter()
            .filter_map(|p| {
                let n = rng.gen_range(0..3u32);
                (n > 0).then(|| (p.clone(), n))
            })
            .collect();
        Multiset::from_counts(counts).unwrap()
    };
    let ts = (0..rng.gen_range(0..=transitions))
        .map(|i| {
            let pre = side(rng);
            Transition::new(format!("t{i}"), pre, side(rng))
        })
        .collect();
    PetriNet::new(names.clone(), ts).unwrap()
}

pub fn shuffled(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut p = perm::identity(n);
    p.shuffle(rng);
    p
}

/// A uniformly random `p` with `from.permuted(p) == to`; `None` unless the
/// words are rearrangements of each other.
pub fn random_matching(
    rng: &mut ChaCha8Rng,
    from: &ObjectWord,
    to: &ObjectWord,
) -> Option<Vec<usize>> {
    if from.len() != to.len() {
        return None;
    }
    let mut free: Vec<usize> = (0..from.len()).collect();
    free.shuffle(rng);
    let mut p = Vec::with_capacity(to.len());
    for letter in to.iter() {
        let at = free.iter().position(|&j| &from.0[j] == letter)?;
        p.push(free.remove(at));
    }
    Some(p)
}

/// `σ ; g ; σ'` with random symmetries from `dom` and onto `cod`.
pub fn random_conjugate(
    rng: &mut ChaCha8Rng,
    g: &GeneratorSig,
    dom: &ObjectWord,
    cod: &ObjectWord,
) -> Option<Term> {
    let pre = random_matching(rng, dom, &g.dom)?;
    let post = random_matching(rng, &g.cod, cod)?;
    Some(
        Term::Perm(dom.clone(), pre)
            .comp(Term::gen(g.name.clone()))
            .comp(Term::Perm(g.cod.clone(), post))
            .simplify(),
    )
}

/// A random well-typed term with domain `start`: firings of generators
/// that fit a prefix of the current word, separated by random symmetries.
pub fn random_chain(
    rng: &mut ChaCha8Rng,
    sig: &SmcPresentation,
    start: ObjectWord,
    steps: usize,
) -> Term {
    let mut current = start;
    let mut parts = vec![Term::id(current.clone())];
    for _ in 0..steps {
        let p = shuffled(rng, current.len());
        parts.push(Term::Perm(current.clone(), p.clone()));
        current = current.permuted(&p);
        let fits: Vec<&GeneratorSig> = sig
            .morphisms()
            .iter()
            .filter(|g| g.dom.len() <= current.len() && current.0[..g.dom.len()] == g.dom.0[..])
            .collect();
        if let Some(g) = fits.choose(rng) {
            let rest = ObjectWord(current.0[g.dom.len()..].to_vec());
            let firing = if rng.gen_bool(0.5) {
                Term::gen(g.name.clone()).ten(Term::id(rest.clone()))
            } else {
                // the same firing written with the generator on the right
                let n = g.dom.len();
                let to_back = perm::block_swap(n, rest.len());
                Term::Perm(current.clone(), to_back)
                    .comp(Term::id(rest.clone()).ten(Term::gen(g.name.clone())))
                    .comp(Term::Perm(
                        rest.concat(&g.cod),
                        perm::block_swap(rest.len(), g.cod.len()),
                    ))
            };
            parts.push(firing);
            current = g.cod.concat(&rest);
        }
    }
    Term::comp_all(parts).unwrap()
}

/// A random term over `sig`: one or two chains side by side.
pub fn random_term(rng: &mut ChaCha8Rng, sig: &SmcPresentation) -> Term {
    let chain = |rng: &mut ChaCha8Rng| {
        let start = random_word(rng, sig.objects(), 3);
        let steps = rng.gen_range(0..4);
        random_chain(rng, sig, start, steps)
    };
    let a = chain(rng);
    if rng.gen_bool(0.5) {
        a.ten(chain(rng))
    } else {
        a
    }
}

pub fn swap(x: &ObjectWord, y: &ObjectWord) -> Term {
    symmetry(x.concat(y), perm::block_swap(x.len(), y.len())).unwrap()
}

/// Whether two presentations differ only by renaming: a bijection of
/// object generators and a bijection of morphism generators under which
/// every generator's domain and codomain agree as multisets. Found by
/// brute force, independently of the library's functor machinery.
pub fn presentations_isomorphic(a: &SmcPresentation, b: &SmcPresentation) -> bool {
    if a.objects().len() != b.objects().len() || a.morphisms().len() != b.morphisms().len() {
        return false;
    }
    let index_a: BTreeMap<&str, usize> = a
        .objects()
        .iter()
        .enumerate()
        .map(|(i, o)| (o.as_str(), i))
        .collect();
    let index_b: BTreeMap<&str, usize> = b
        .objects()
        .iter()
        .enumerate()
        .map(|(i, o)| (o.as_str(), i))
        .collect();
    let counts =
        |w: &ObjectWord, index: &BTreeMap<&str, usize>, relabel: &dyn Fn(usize) -> usize| {
            let mut c = vec![0usize; index.len()];
            for l in w.iter() {
                c[relabel(index[l.as_str()])] += 1;
            }
            c
        };
    let n = a.objects().len();
    let mut objects = perm::identity(n);
    loop {
        let sig_a: Vec<(Vec<usize>, Vec<usize>)> = a
            .morphisms()
            .iter()
            .map(|g| {
                (
                    counts(&g.dom, &index_a, &|i| objects[i]),
                    counts(&g.cod, &index_a, &|i| objects[i]),
                )
            })
            .collect();
        let mut sig_b: Vec<(Vec<usize>, Vec<usize>)> = b
            .morphisms()
            .iter()
            .map(|g| {
                (
                    counts(&g.dom, &index_b, &|i| i),
                    counts(&g.cod, &index_b, &|i| i),
                )
            })
            .collect();
        let mut sorted_a = sig_a.clone();
        sorted_a.sort();
        sig_b.sort();
        if sorted_a == sig_b {
            return true;
        }
        if !next_permutation(&mut objects) {
            return false;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}
