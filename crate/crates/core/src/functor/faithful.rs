//! Bounded search for faithfulness counterexamples.
//!
//! Candidates are the morphisms obtained by firing at most `k` generators
//! one after another, where each firing draws some of its inputs from
//! tokens produced earlier (oldest first) and the rest from the domain.
//! Domains and codomains are `𝔒`-sorted, so candidates sharing a type are
//! parallel. Distinct candidates with equal images are a genuine
//! counterexample; the family does not contain every morphism, so a clean
//! run is evidence, not proof.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::fssmc::{
    diagram_equal, to_diagram, DiagramBox, ObjectWord, Source, StringDiagram, Term,
};
use crate::net::SmcPresentation;

use super::StrictFunctor;

pub const DEFAULT_BUDGET: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Faithfulness {
    FaithfulUpTo(usize),
    CounterexampleFound(Term, Term),
}

impl Faithfulness {
    pub fn is_faithful(&self) -> bool {
        matches!(self, Faithfulness::FaithfulUpTo(_))
    }
}

pub fn check_faithful_bounded(f: &StrictFunctor, k: usize) -> Result<Faithfulness> {
    check_faithful_with_budget(f, k, DEFAULT_BUDGET)
}

pub fn check_faithful_with_budget(
    f: &StrictFunctor,
    k: usize,
    budget: usize,
) -> Result<Faithfulness> {
    let mut search = Search {
        sig: f.source(),
        budget,
        produced: 0,
        buckets: BTreeMap::new(),
    };
    search.extend(&mut State::default(), k)?;
    for found in search.buckets.into_iter().map(|((dom, cod), groups)| {
        let mut found: Vec<StringDiagram> = Vec::new();
        if dom == cod {
            found.push(StringDiagram::identity(dom));
        }
        let mut keys: Vec<_> = groups.into_iter().collect();
        keys.sort_by_key(|k| k.0);
        found.extend(keys.into_iter().flat_map(|(_, ds)| ds));
        found
    }) {
        let mut images: HashMap<u64, Vec<(usize, StringDiagram)>> = HashMap::new();
        for (i, d) in found.iter().enumerate() {
            let image = to_diagram(&f.apply(&d.to_term())?, f.target())?;
            let same = images.entry(image.invariant()).or_default();
            if let Some((j, _)) = same.iter().find(|(_, other)| diagram_equal(other, &image)) {
                return Ok(Faithfulness::CounterexampleFound(
                    found[*j].to_term(),
                    d.to_term(),
                ));
            }
            same.push((i, image));
        }
    }
    Ok(Faithfulness::FaithfulUpTo(k))
}

#[derive(Default, Clone)]
struct State {
    boxes: Vec<DiagramBox>,
    fresh: Vec<String>,
    pool: Vec<(Source, String)>,
}

struct Search<'a> {
    sig: &'a SmcPresentation,
    budget: usize,
    produced: usize,
    /// Candidates by type, then by `StringDiagram::invariant`, which equal
    /// diagrams share.
    buckets: BTreeMap<(ObjectWord, ObjectWord), HashMap<u64, Vec<StringDiagram>>>,
}

impl Search<'_> {
    fn extend(&mut self, state: &mut State, remaining: usize) -> Result<()> {
        if remaining == 0 {
            return Ok(());
        }
        for g in self.sig.morphisms() {
            // per distinct input letter: how many ports may come from the pool
            let mut letters: Vec<&String> = g.dom.iter().collect();
            letters.sort();
            letters.dedup();
            let limits: Vec<usize> = letters
                .iter()
                .map(|l| {
                    let need = g.dom.iter().filter(|x| x == l).count();
                    let have = state.pool.iter().filter(|(_, x)| x == *l).count();
                    need.min(have)
                })
                .collect();
            let mut choice = vec![0usize; letters.len()];
            loop {
                self.fire(state, g, &letters, &choice, remaining)?;
                if !advance(&mut choice, &limits) {
                    break;
                }
            }
        }
        Ok(())
    }

    fn fire(
        &mut self,
        state: &mut State,
        g: &crate::net::GeneratorSig,
        letters: &[&String],
        choice: &[usize],
        remaining: usize,
    ) -> Result<()> {
        let saved = state.clone();
        let mut from_pool: Vec<usize> = choice.to_vec();
        let mut inputs = Vec::with_capacity(g.dom.len());
        for letter in g.dom.iter() {
            let slot = letters
                .iter()
                .position(|l| *l == letter)
                .expect("letter listed");
            if from_pool[slot] > 0 {
                from_pool[slot] -= 1;
                let at = state
                    .pool
                    .iter()
                    .position(|(_, l)| l == letter)
                    .expect("limit respected");
                inputs.push(state.pool.remove(at).0);
            } else {
                inputs.push(Source::Input(state.fresh.len()));
                state.fresh.push(letter.clone());
            }
        }
        let node = state.boxes.len();
        state.boxes.push(DiagramBox {
            generator: g.name.clone(),
            dom: g.dom.clone(),
            cod: g.cod.clone(),
            inputs,
        });
        state.pool.extend(
            g.cod
                .iter()
                .enumerate()
                .map(|(port, l)| (Source::BoxOut { node, port }, l.clone())),
        );

        self.produced += 1;
        if self.produced > self.budget {
            return Err(Error::BudgetExceeded { limit: self.budget });
        }
        self.record(state);
        self.extend(state, remaining - 1)?;
        *state = saved;
        Ok(())
    }

    fn record(&mut self, state: &State) {
        let order = |l: &str| self.sig.object_index(l).unwrap_or(usize::MAX);
        let mut dom_order: Vec<usize> = (0..state.fresh.len()).collect();
        dom_order.sort_by_key(|&i| order(&state.fresh[i]));
        let mut position = vec![0; dom_order.len()];
        for (new, &old) in dom_order.iter().enumerate() {
            position[old] = new;
        }
        let relabel = |s: Source| match s {
            Source::Input(i) => Source::Input(position[i]),
            other => other,
        };
        let boxes: Vec<DiagramBox> = state
            .boxes
            .iter()
            .map(|b| DiagramBox {
                inputs: b.inputs.iter().map(|&s| relabel(s)).collect(),
                ..b.clone()
            })
            .collect();
        let mut pool = state.pool.clone();
        pool.sort_by_key(|(_, l)| order(l));
        let dom: ObjectWord = dom_order.iter().map(|&i| state.fresh[i].clone()).collect();
        let cod: ObjectWord = pool.iter().map(|(_, l)| l.clone()).collect();
        let outputs = pool.into_iter().map(|(s, _)| s).collect();
        let d = StringDiagram::from_parts(dom.clone(), cod.clone(), boxes, outputs)
            .expect("candidate wiring is linear");
        let key = d.invariant();
        let bucket = self
            .buckets
            .entry((dom, cod))
            .or_default()
            .entry(key)
            .or_default();
        if !bucket.iter().any(|other| diagram_equal(other, &d)) {
            bucket.push(d);
        }
    }
}

/// Odometer step over `0..=limits[i]`; false once every choice was visited.
fn advance(choice: &mut [usize], limits: &[usize]) -> bool {
    for (c, &l) in choice.iter_mut().zip(limits) {
        if *c < l {
            *c += 1;
            return true;
        }
        *c = 0;
    }
    false
}
