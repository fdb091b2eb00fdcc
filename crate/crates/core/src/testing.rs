//! Fixtures and generators shared by unit tests.

use proptest::prelude::*;
use rand::{seq::SliceRandom, Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::fssmc::{perm, ObjectWord, Term};
use crate::net::{GeneratorSig, Multiset, PetriNet, SmcPresentation, Transition};

/// Whitespace-separated letters.
pub fn word(s: &str) -> ObjectWord {
    ObjectWord::from_letters(s.split_whitespace())
}

pub fn ms(entries: &[(&str, u32)]) -> Multiset {
    Multiset::from_counts(entries.iter().map(|(p, n)| (p.to_string(), *n))).unwrap()
}

pub fn sample_net() -> PetriNet {
    PetriNet::new(
        ["A", "B", "C", "D", "E", "F"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
        vec![
            Transition::new("f", Multiset::new(), ms(&[("A", 3), ("B", 1), ("C", 5)])),
            Transition::new(
                "g",
                ms(&[("A", 2), ("B", 1), ("C", 3)]),
                ms(&[("E", 1), ("F", 1)]),
            ),
            Transition::new("h", ms(&[("C", 1), ("D", 4)]), ms(&[("F", 1)])),
            Transition::new("k", ms(&[("E", 1), ("F", 1)]), Multiset::new()),
        ],
    )
    .unwrap()
}

/// `a: A -> B` and `b: C -> D`.
pub fn small_sig() -> SmcPresentation {
    SmcPresentation::new(
        ["A", "B", "C", "D"].iter().map(|s| s.to_string()).collect(),
        vec![
            GeneratorSig::new("a", word("A"), word("B")),
            GeneratorSig::new("b", word("C"), word("D")),
        ],
    )
    .unwrap()
}

pub fn arb_net() -> impl Strategy<Value = PetriNet> {
    (1usize..5, 0usize..4).prop_flat_map(|(np, nt)| {
        let counts = proptest::collection::vec((0u32..3, 0u32..3), np * nt);
        counts.prop_map(move |counts| {
            let places: Vec<String> = (0..np).map(|i| format!("P{i}")).collect();
            let transitions = (0..nt)
                .map(|t| {
                    let row = &counts[t * np..(t + 1) * np];
                    let pre = row
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| c.0 > 0)
                        .map(|(i, c)| (places[i].clone(), c.0));
                    let post = row
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| c.1 > 0)
                        .map(|(i, c)| (places[i].clone(), c.1));
                    Transition::new(
                        format!("t{t}"),
                        Multiset::from_counts(pre).unwrap(),
                        Multiset::from_counts(post).unwrap(),
                    )
                })
                .collect();
            PetriNet::new(places, transitions).unwrap()
        })
    })
}

fn random_word(rng: &mut ChaCha8Rng, objects: &[String], max: usize) -> ObjectWord {
    let n = rng.gen_range(0..=max);
    (0..n)
        .map(|_| objects.choose(rng).unwrap().clone())
        .collect()
}

pub fn random_sig(rng: &mut ChaCha8Rng) -> SmcPresentation {
    let objects: Vec<String> = (0..rng.gen_range(1..=3)).map(|i| format!("O{i}")).collect();
    let morphisms = (0..rng.gen_range(1..=4))
        .map(|i| {
            GeneratorSig::new(
                format!("m{i}"),
                random_word(rng, &objects, 2),
                random_word(rng, &objects, 2),
            )
        })
        .collect();
    SmcPresentation::new(objects, morphisms).unwrap()
}

/// A random well-typed term: a few firings interleaved with symmetries,
/// tensored with a second such chain.
pub fn random_term(rng: &mut ChaCha8Rng, sig: &SmcPresentation) -> Term {
    let chain = |rng: &mut ChaCha8Rng| {
        let mut current = random_word(rng, sig.objects(), 3);
        let mut steps = vec![Term::id(current.clone())];
        for _ in 0..rng.gen_range(0..4) {
            let mut p = perm::identity(current.len());
            p.shuffle(rng);
            steps.push(Term::Perm(current.clone(), p.clone()));
            current = current.permuted(&p);
            let fits: Vec<&GeneratorSig> = sig
                .morphisms()
                .iter()
                .filter(|g| g.dom.len() <= current.len() && current.0[..g.dom.len()] == g.dom.0[..])
                .collect();
            if let Some(g) = fits.choose(rng) {
                let rest = ObjectWord(current.0[g.dom.len()..].to_vec());
                steps.push(Term::gen(g.name.clone()).ten(Term::id(rest.clone())));
                current = g.cod.concat(&rest);
            }
        }
        Term::comp_all(steps).unwrap()
    };
    let a = chain(rng);
    if rng.gen_bool(0.5) {
        a.ten(chain(rng))
    } else {
        a
    }
}

pub fn arb_term_over() -> impl Strategy<Value = (SmcPresentation, Term)> {
    any::<u64>().prop_map(|seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sig = random_sig(&mut rng);
        let t = random_term(&mut rng, &sig);
        (sig, t)
    })
}
