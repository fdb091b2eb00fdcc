use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::fssmc::ObjectWord;

use super::{validate_name, GeneratorSig, Multiset, SmcPresentation};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Transition {
    pub name: String,
    pub pre: Multiset,
    pub post: Multiset,
}

impl Transition {
    pub fn new(name: impl Into<String>, pre: Multiset, post: Multiset) -> Self {
        Self {
            name: name.into(),
            pre,
            post,
        }
    }
}

/// A place/transition net. Places are well-ordered by declaration order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PetriNet {
    places: Vec<String>,
    transitions: Vec<Transition>,
}

impl PetriNet {
    pub fn new(places: Vec<String>, transitions: Vec<Transition>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for p in &places {
            validate_name(p)?;
            if !seen.insert(p.as_str()) {
                return Err(Error::DuplicateName {
                    kind: "place",
                    name: p.clone(),
                });
            }
        }
        let mut seen_t = BTreeSet::new();
        for t in &transitions {
            validate_name(&t.name)?;
            if !seen_t.insert(t.name.as_str()) {
                return Err(Error::DuplicateName {
                    kind: "transition",
                    name: t.name.clone(),
                });
            }
            for p in t.pre.places().chain(t.post.places()) {
                if !seen.contains(p) {
                    return Err(Error::UnknownPlace(p.to_string()));
                }
            }
        }
        Ok(Self {
            places,
            transitions,
        })
    }

    pub fn empty() -> Self {
        Self {
            places: Vec::new(),
            transitions: Vec::new(),
        }
    }

    pub fn places(&self) -> &[String] {
        &self.places
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    pub fn transition(&self, name: &str) -> Option<&Transition> {
        self.transitions.iter().find(|t| t.name == name)
    }

    pub fn has_place(&self, name: &str) -> bool {
        self.places.iter().any(|p| p == name)
    }
}

/// Spell out a multiset as a word, places sorted by `order`.
pub fn linearize(ms: &Multiset, order: &[String]) -> Result<ObjectWord> {
    if let Some(p) = ms.places().find(|p| !order.iter().any(|o| o == p)) {
        return Err(Error::UnknownPlace(p.to_string()));
    }
    let mut letters = Vec::with_capacity(ms.total() as usize);
    for place in order {
        for _ in 0..ms.get(place) {
            letters.push(place.clone());
        }
    }
    Ok(ObjectWord(letters))
}

/// The presentation of the category of executions of `net`: places generate
/// objects, and each transition becomes a generator between its linearized
/// pre- and post-sets.
pub fn free_smc(net: &PetriNet) -> SmcPresentation {
    let morphisms = net
        .transitions
        .iter()
        .map(|t| {
            GeneratorSig::new(
                t.name.clone(),
                linearize(&t.pre, &net.places).expect("validated net"),
                linearize(&t.post, &net.places).expect("validated net"),
            )
        })
        .collect();
    SmcPresentation::new(net.places.clone(), morphisms).expect("validated net")
}

/// Forget a presentation back to a net; word order is discarded.
pub fn net_of_presentation(sig: &SmcPresentation) -> PetriNet {
    let transitions = sig
        .morphisms()
        .iter()
        .map(|m| {
            Transition::new(
                m.name.clone(),
                Multiset::from_word(&m.dom),
                Multiset::from_word(&m.cod),
            )
        })
        .collect();
    PetriNet::new(sig.objects().to_vec(), transitions).expect("validated presentation")
}

pub fn is_fsm(net: &PetriNet) -> bool {
    net.transitions
        .iter()
        .all(|t| t.pre.total() == 1 && t.post.total() == 1)
}

/// Old-name to new-name maps recording where a coproduct summand landed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CoproductInjection {
    pub places: BTreeMap<String, String>,
    pub transitions: BTreeMap<String, String>,
}

impl CoproductInjection {
    pub fn place(&self, name: &str) -> Option<&str> {
        self.places.get(name).map(String::as_str)
    }

    pub fn transition(&self, name: &str) -> Option<&str> {
        self.transitions.get(name).map(String::as_str)
    }
}

fn disjoint_names<'a>(
    left: impl Iterator<Item = &'a String> + Clone,
    right: impl Iterator<Item = &'a String> + Clone,
) -> BTreeMap<String, String> {
    let left_set: BTreeSet<&str> = left.clone().map(String::as_str).collect();
    let mut used: BTreeSet<String> = left.chain(right.clone()).cloned().collect();
    let mut map = BTreeMap::new();
    for name in right {
        let fresh = if left_set.contains(name.as_str()) {
            let mut candidate = format!("{name}'");
            while used.contains(&candidate) {
                candidate.push('\'');
            }
            used.insert(candidate.clone());
            candidate
        } else {
            name.clone()
        };
        map.insert(name.clone(), fresh);
    }
    map
}

/// Disjoint union. The first operand keeps its names; colliding names of the
/// second operand get primes appended.
pub fn net_coproduct(
    m: &PetriNet,
    n: &PetriNet,
) -> (PetriNet, CoproductInjection, CoproductInjection) {
    let left = CoproductInjection {
        places: m.places.iter().map(|p| (p.clone(), p.clone())).collect(),
        transitions: m
            .transitions
            .iter()
            .map(|t| (t.name.clone(), t.name.clone()))
            .collect(),
    };
    let right = CoproductInjection {
        places: disjoint_names(m.places.iter(), n.places.iter()),
        transitions: disjoint_names(
            m.transitions.iter().map(|t| &t.name),
            n.transitions.iter().map(|t| &t.name),
        ),
    };

    let mut places = m.places.clone();
    places.extend(n.places.iter().map(|p| right.places[p].clone()));
    let mut transitions = m.transitions.clone();
    transitions.extend(n.transitions.iter().map(|t| {
        Transition::new(
            right.transitions[&t.name].clone(),
            t.pre.rename(|p| right.places[p].clone()),
            t.post.rename(|p| right.places[p].clone()),
        )
    }));
    let net = PetriNet::new(places, transitions).expect("disjoint union of valid nets");
    (net, left, right)
}

/// Drop places that no transition touches. Survivors keep their order.
pub fn prune_isolated_places(net: &PetriNet) -> (PetriNet, Vec<String>) {
    let used: BTreeSet<&str> = net
        .transitions
        .iter()
        .flat_map(|t| t.pre.places().chain(t.post.places()))
        .collect();
    let (kept, removed): (Vec<String>, Vec<String>) = net
        .places
        .iter()
        .cloned()
        .partition(|p| used.contains(p.as_str()));
    let pruned = PetriNet {
        places: kept,
        transitions: net.transitions.clone(),
    };
    (pruned, removed)
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::testing::{arb_net, ms, sample_net, word};

    fn abc() -> Vec<String> {
        ["A", "B", "C", "D", "E", "F"]
            .iter()
            .map(|s| s.to_string())
            .collect()
    }

    #[test]
    fn linearize_examples() {
        assert_eq!(
            linearize(&Multiset::new(), &abc()).unwrap(),
            ObjectWord::empty()
        );
        assert_eq!(
            linearize(&ms(&[("A", 2), ("C", 1)]), &abc()).unwrap(),
            word("A A C")
        );
        assert_eq!(
            linearize(&ms(&[("A", 2), ("B", 1), ("C", 3)]), &abc()).unwrap(),
            word("A A B C C C")
        );
        assert_eq!(
            linearize(&ms(&[("Q", 1)]), &abc()),
            Err(Error::UnknownPlace("Q".into()))
        );
    }

    #[test]
    fn free_smc_of_sample_net() {
        let sig = free_smc(&sample_net());
        assert_eq!(sig.objects(), abc().as_slice());
        let ty = |n: &str| {
            let m = sig.morphism(n).unwrap();
            (m.dom.clone(), m.cod.clone())
        };
        assert_eq!(ty("g"), (word("A A B C C C"), word("E F")));
        assert_eq!(ty("h"), (word("C D D D D"), word("F")));
        assert_eq!(ty("k"), (word("E F"), word("")));
        assert_eq!(ty("f"), (word(""), word("A A A B C C C C C")));
    }

    #[test]
    fn single_place_net() {
        let net = PetriNet::new(vec!["A".into()], vec![]).unwrap();
        let sig = free_smc(&net);
        assert_eq!(sig.objects(), &["A".to_string()]);
        assert!(sig.morphisms().is_empty());
        assert_eq!(net_of_presentation(&sig), net);
    }

    #[test]
    fn unsorted_domain_forgets_order() {
        let sig = SmcPresentation::new(
            vec!["A".into(), "C".into()],
            vec![GeneratorSig::new("t", word("C A A"), word(""))],
        )
        .unwrap();
        let net = net_of_presentation(&sig);
        assert_eq!(net.transition("t").unwrap().pre, ms(&[("A", 2), ("C", 1)]));
        let back = free_smc(&net);
        assert_eq!(back.morphism("t").unwrap().dom, word("A A C"));
    }

    #[test]
    fn fsm_predicate() {
        let t = |pre, post| Transition::new("t", pre, post);
        let places = vec!["A".to_string(), "B".to_string()];
        let fsm = PetriNet::new(places.clone(), vec![t(ms(&[("A", 1)]), ms(&[("B", 1)]))]).unwrap();
        assert!(is_fsm(&fsm));
        assert!(!is_fsm(&sample_net()));
        let source = PetriNet::new(places, vec![t(Multiset::new(), ms(&[("A", 1)]))]).unwrap();
        assert!(!is_fsm(&source));
    }

    #[test]
    fn validation_errors() {
        let bad = PetriNet::new(
            vec!["A".into()],
            vec![Transition::new("t", ms(&[("B", 1)]), Multiset::new())],
        );
        assert_eq!(bad, Err(Error::UnknownPlace("B".into())));
        let dup = PetriNet::new(vec!["A".into(), "A".into()], vec![]);
        assert!(matches!(
            dup,
            Err(Error::DuplicateName { kind: "place", .. })
        ));
        assert!(matches!(
            Multiset::from_counts([("A", 0)]),
            Err(Error::ZeroCount(_))
        ));
        assert!(matches!(
            PetriNet::new(vec!["a b".into()], vec![]),
            Err(Error::InvalidName(_))
        ));
    }

    #[test]
    fn coproduct_of_boundary_nets() {
        let left = PetriNet::new(
            vec!["A".into(), "C".into(), "B".into()],
            vec![Transition::new(
                "f",
                ms(&[("A", 2)]),
                ms(&[("C", 1), ("B", 1)]),
            )],
        )
        .unwrap();
        let right = PetriNet::new(
            vec!["C".into(), "D".into(), "E".into()],
            vec![
                Transition::new("h", ms(&[("C", 2)]), ms(&[("D", 1)])),
                Transition::new("k", ms(&[("C", 1)]), ms(&[("E", 1)])),
            ],
        )
        .unwrap();
        let (sum, i1, i2) = net_coproduct(&left, &right);
        let names: Vec<&str> = sum.places().iter().map(String::as_str).collect();
        assert_eq!(names, ["A", "C", "B", "C'", "D", "E"]);
        let ts: Vec<&str> = sum.transitions().iter().map(|t| t.name.as_str()).collect();
        assert_eq!(ts, ["f", "h", "k"]);
        assert_eq!(i1.place("C"), Some("C"));
        assert_eq!(i2.place("C"), Some("C'"));
        assert_eq!(sum.transition("h").unwrap().pre, ms(&[("C'", 2)]));
    }

    #[test]
    fn coproduct_with_empty_net_is_unit() {
        let net = sample_net();
        let (sum, i1, _) = net_coproduct(&net, &PetriNet::empty());
        assert_eq!(sum, net);
        assert!(i1.places.iter().all(|(a, b)| a == b));
        let (sum, _, i2) = net_coproduct(&PetriNet::empty(), &net);
        assert_eq!(sum, net);
        assert!(i2.places.iter().all(|(a, b)| a == b));
    }

    #[test]
    fn coproduct_primes_avoid_existing_primed_names() {
        let m = PetriNet::new(vec!["C".into()], vec![]).unwrap();
        let n = PetriNet::new(vec!["C".into(), "C'".into()], vec![]).unwrap();
        let (sum, _, i2) = net_coproduct(&m, &n);
        assert_eq!(i2.place("C"), Some("C''"));
        assert_eq!(i2.place("C'"), Some("C'"));
        assert_eq!(sum.places().len(), 3);
    }

    #[test]
    fn prune_removes_exactly_isolated_places() {
        let net = PetriNet::new(
            vec!["A".into(), "E".into(), "F".into()],
            vec![Transition::new("t", ms(&[("A", 1)]), ms(&[("F", 1)]))],
        )
        .unwrap();
        let (pruned, removed) = prune_isolated_places(&net);
        assert_eq!(removed, vec!["E".to_string()]);
        assert_eq!(pruned.places(), &["A".to_string(), "F".to_string()]);
        let (same, none) = prune_isolated_places(&sample_net());
        assert!(none.is_empty());
        assert_eq!(same, sample_net());
    }

    proptest! {
        #[test]
        fn presentation_round_trip(net in arb_net()) {
            prop_assert_eq!(net_of_presentation(&free_smc(&net)), net);
        }

        #[test]
        fn linearize_counts_letters(net in arb_net()) {
            for t in net.transitions() {
                let w = linearize(&t.pre, net.places()).unwrap();
                prop_assert_eq!(w.len() as u32, t.pre.total());
                prop_assert_eq!(Multiset::from_word(&w), t.pre.clone());
            }
        }

        #[test]
        fn coproduct_injections_partition(m in arb_net(), n in arb_net()) {
            let (sum, i1, i2) = net_coproduct(&m, &n);
            prop_assert_eq!(sum.places().len(), m.places().len() + n.places().len());
            prop_assert_eq!(sum.transitions().len(), m.transitions().len() + n.transitions().len());
            let mut hit: Vec<&String> = i1.places.values().chain(i2.places.values()).collect();
            hit.sort();
            hit.dedup();
            prop_assert_eq!(hit.len(), sum.places().len());
            let mut hit_t: Vec<&String> = i1.transitions.values().chain(i2.transitions.values()).collect();
            hit_t.sort();
            hit_t.dedup();
            prop_assert_eq!(hit_t.len(), sum.transitions().len());
        }

        #[test]
        fn prune_is_idempotent(net in arb_net()) {
            let (once, _) = prune_isolated_places(&net);
            let (twice, removed) = prune_isolated_places(&once);
            prop_assert!(removed.is_empty());
            prop_assert_eq!(once, twice);
        }
    }
}
