//! Anchored acyclic string diagrams: the normal form of morphisms in a free
//! symmetric strict monoidal category.
//!
//! A diagram is a list of boxes in topological order. Every box input port
//! and every output position names the unique wire end feeding it, so each
//! wire is recorded exactly once, at its target. Two terms denote the same
//! morphism iff their diagrams are isomorphic by a label-preserving box
//! bijection that fixes the interface positions.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::net::SmcPresentation;

use super::{perm, ObjectWord, Term};

/// Where a wire starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Source {
    Input(usize),
    BoxOut { node: usize, port: usize },
}

/// Where a wire ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Target {
    BoxIn { node: usize, port: usize },
    Output(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiagramBox {
    pub generator: String,
    pub dom: ObjectWord,
    pub cod: ObjectWord,
    pub inputs: Vec<Source>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StringDiagram {
    dom: ObjectWord,
    cod: ObjectWord,
    boxes: Vec<DiagramBox>,
    outputs: Vec<Source>,
}

/// A one-box diagram `σ ; u ; σ'` with no wire bypassing the box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conjugate {
    pub pre: Term,
    pub generator: String,
    pub post: Term,
}

impl StringDiagram {
    /// Checks the wiring invariants: every wire end used exactly once, equal
    /// labels at both ends, boxes in topological order.
    pub fn from_parts(
        dom: ObjectWord,
        cod: ObjectWord,
        boxes: Vec<DiagramBox>,
        outputs: Vec<Source>,
    ) -> Result<Self> {
        let d = Self {
            dom,
            cod,
            boxes,
            outputs,
        };
        d.validate()?;
        Ok(d)
    }

    fn validate(&self) -> Result<()> {
        let invalid = |msg: String| Err(Error::Validation(format!("string diagram: {msg}")));
        if self.outputs.len() != self.cod.len() {
            return invalid("output interface length mismatch".into());
        }
        let mut used: BTreeSet<Source> = BTreeSet::new();
        let mut check = |s: Source, expected: &String, before: usize| -> Result<()> {
            let label = match s {
                Source::Input(i) => self.dom.0.get(i),
                Source::BoxOut { node, port } if node < before => self.boxes[node].cod.0.get(port),
                Source::BoxOut { .. } => None,
            };
            match label {
                Some(l) if l == expected => {}
                _ => return invalid(format!("wire {s:?} is dangling or mislabelled")),
            }
            if !used.insert(s) {
                return invalid(format!("wire end {s:?} used twice"));
            }
            Ok(())
        };
        for (b, node) in self.boxes.iter().enumerate() {
            if node.inputs.len() != node.dom.len() {
                return invalid(format!("box {b} has wrong input arity"));
            }
            for (s, expected) in node.inputs.iter().zip(node.dom.iter()) {
                check(*s, expected, b)?;
            }
        }
        for (s, expected) in self.outputs.iter().zip(self.cod.iter()) {
            check(*s, expected, self.boxes.len())?;
        }
        let total = self.dom.len() + self.boxes.iter().map(|b| b.cod.len()).sum::<usize>();
        if used.len() != total {
            return invalid("some wire has no target".into());
        }
        Ok(())
    }

    pub fn identity(word: ObjectWord) -> Self {
        let outputs = (0..word.len()).map(Source::Input).collect();
        Self {
            dom: word.clone(),
            cod: word,
            boxes: Vec::new(),
            outputs,
        }
    }

    pub fn symmetry(word: ObjectWord, p: &[usize]) -> Self {
        Self {
            cod: word.permuted(p),
            dom: word,
            boxes: Vec::new(),
            outputs: p.iter().map(|&i| Source::Input(i)).collect(),
        }
    }

    pub fn generator(name: &str, dom: ObjectWord, cod: ObjectWord) -> Self {
        let inputs = (0..dom.len()).map(Source::Input).collect();
        let outputs = (0..cod.len())
            .map(|port| Source::BoxOut { node: 0, port })
            .collect();
        Self {
            boxes: vec![DiagramBox {
                generator: name.to_string(),
                dom: dom.clone(),
                cod: cod.clone(),
                inputs,
            }],
            dom,
            cod,
            outputs,
        }
    }

    pub fn compose(&self, next: &StringDiagram) -> Result<StringDiagram> {
        if self.cod != next.dom {
            return Err(Error::TypeMismatch {
                context: "diagram composition".into(),
                expected: self.cod.clone(),
                found: next.dom.clone(),
            });
        }
        let offset = self.boxes.len();
        let resolve = |s: Source| match s {
            Source::Input(i) => self.outputs[i],
            Source::BoxOut { node, port } => Source::BoxOut {
                node: node + offset,
                port,
            },
        };
        let mut boxes = self.boxes.clone();
        boxes.extend(next.boxes.iter().map(|b| DiagramBox {
            inputs: b.inputs.iter().map(|&s| resolve(s)).collect(),
            ..b.clone()
        }));
        Ok(StringDiagram {
            dom: self.dom.clone(),
            cod: next.cod.clone(),
            boxes,
            outputs: next.outputs.iter().map(|&s| resolve(s)).collect(),
        })
    }

    pub fn tensor(&self, other: &StringDiagram) -> StringDiagram {
        let in_offset = self.dom.len();
        let box_offset = self.boxes.len();
        let shift = |s: Source| match s {
            Source::Input(i) => Source::Input(i + in_offset),
            Source::BoxOut { node, port } => Source::BoxOut {
                node: node + box_offset,
                port,
            },
        };
        let mut boxes = self.boxes.clone();
        boxes.extend(other.boxes.iter().map(|b| DiagramBox {
            inputs: b.inputs.iter().map(|&s| shift(s)).collect(),
            ..b.clone()
        }));
        let mut outputs = self.outputs.clone();
        outputs.extend(other.outputs.iter().map(|&s| shift(s)));
        StringDiagram {
            dom: self.dom.concat(&other.dom),
            cod: self.cod.concat(&other.cod),
            boxes,
            outputs,
        }
    }

    pub fn dom(&self) -> &ObjectWord {
        &self.dom
    }

    pub fn cod(&self) -> &ObjectWord {
        &self.cod
    }

    pub fn boxes(&self) -> &[DiagramBox] {
        &self.boxes
    }

    pub fn outputs(&self) -> &[Source] {
        &self.outputs
    }

    pub fn box_count(&self) -> usize {
        self.boxes.len()
    }

    /// Generator labels used, as a set.
    pub fn decomposition(&self) -> BTreeSet<String> {
        self.boxes.iter().map(|b| b.generator.clone()).collect()
    }

    /// Generator labels with multiplicity.
    pub fn label_counts(&self) -> BTreeMap<String, usize> {
        let mut counts = BTreeMap::new();
        for b in &self.boxes {
            *counts.entry(b.generator.clone()).or_insert(0) += 1;
        }
        counts
    }

    /// A hash unchanged by renumbering boxes: each box's label with where
    /// its inputs come from, and where each output comes from, with other
    /// boxes named by label only. Equal diagrams have equal invariants.
    pub fn invariant(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let origin = |s: &Source| match s {
            Source::Input(i) => (None, *i),
            Source::BoxOut { node, port } => (Some(self.boxes[*node].generator.as_str()), *port),
        };
        type Origin<'a> = (Option<&'a str>, usize);
        let mut boxes: Vec<(&str, Vec<Origin>)> = self
            .boxes
            .iter()
            .map(|b| (b.generator.as_str(), b.inputs.iter().map(origin).collect()))
            .collect();
        boxes.sort();
        let outputs: Vec<Origin> = self.outputs.iter().map(origin).collect();
        let mut h = std::collections::hash_map::DefaultHasher::new();
        (&self.dom, &self.cod, boxes, outputs).hash(&mut h);
        h.finish()
    }

    /// Wires running straight from the input to the output interface.
    pub fn pass_through_wires(&self) -> usize {
        self.outputs
            .iter()
            .filter(|s| matches!(s, Source::Input(_)))
            .count()
    }

    /// The consumer of each wire start.
    pub fn targets(&self) -> HashMap<Source, Target> {
        let mut map = HashMap::new();
        for (node, b) in self.boxes.iter().enumerate() {
            for (port, &s) in b.inputs.iter().enumerate() {
                map.insert(s, Target::BoxIn { node, port });
            }
        }
        for (j, &s) in self.outputs.iter().enumerate() {
            map.insert(s, Target::Output(j));
        }
        map
    }

    /// Longest path from the input interface to each box.
    pub fn depths(&self) -> Vec<usize> {
        let mut depth = vec![0; self.boxes.len()];
        for (b, node) in self.boxes.iter().enumerate() {
            depth[b] = node
                .inputs
                .iter()
                .map(|s| match s {
                    Source::Input(_) => 0,
                    Source::BoxOut { node, .. } => depth[*node] + 1,
                })
                .max()
                .unwrap_or(0);
        }
        depth
    }

    /// Read the diagram back as a term: boxes are fired one at a time, each
    /// preceded by the symmetry that brings its inputs to the front.
    pub fn to_term(&self) -> Term {
        let mut alive: Vec<Source> = (0..self.dom.len()).map(Source::Input).collect();
        let mut labels: Vec<String> = self.dom.0.clone();
        let mut steps = Vec::new();
        for (b, node) in self.boxes.iter().enumerate() {
            let front: Vec<usize> = node
                .inputs
                .iter()
                .map(|s| {
                    alive
                        .iter()
                        .position(|a| a == s)
                        .expect("topological order")
                })
                .collect();
            let rest: Vec<usize> = (0..alive.len()).filter(|i| !front.contains(i)).collect();
            let p: Vec<usize> = front.iter().chain(rest.iter()).copied().collect();
            let rest_word: ObjectWord = rest.iter().map(|&i| labels[i].clone()).collect();
            steps.push(Term::Perm(ObjectWord(labels.clone()), p));
            steps.push(Term::gen(node.generator.clone()).ten(Term::Id(rest_word.clone())));
            alive = (0..node.cod.len())
                .map(|port| Source::BoxOut { node: b, port })
                .chain(rest.iter().map(|&i| alive[i]))
                .collect();
            labels = node.cod.0.iter().cloned().chain(rest_word.0).collect();
        }
        let q: Vec<usize> = self
            .outputs
            .iter()
            .map(|s| alive.iter().position(|a| a == s).expect("linear wiring"))
            .collect();
        steps.push(Term::Perm(ObjectWord(labels), q));
        Term::comp_all(steps).expect("non-empty").simplify()
    }

    /// Splits a one-box diagram without bypass wires into `σ ; u ; σ'`.
    pub fn as_conjugate(&self) -> Option<Conjugate> {
        let [node] = self.boxes.as_slice() else {
            return None;
        };
        let pre: Option<Vec<usize>> = node
            .inputs
            .iter()
            .map(|s| match s {
                Source::Input(i) => Some(*i),
                Source::BoxOut { .. } => None,
            })
            .collect();
        let post: Option<Vec<usize>> = self
            .outputs
            .iter()
            .map(|s| match s {
                Source::BoxOut { port, .. } => Some(*port),
                Source::Input(_) => None,
            })
            .collect();
        let (pre, post) = (pre?, post?);
        if pre.len() != self.dom.len() {
            return None;
        }
        Some(Conjugate {
            pre: Term::Perm(self.dom.clone(), pre),
            generator: node.generator.clone(),
            post: Term::Perm(node.cod.clone(), post),
        })
    }
}

/// Builds the diagram of a term, typechecking along the way.
pub fn to_diagram(term: &Term, sig: &SmcPresentation) -> Result<StringDiagram> {
    match term {
        Term::Gen(name) => {
            let m = sig
                .morphism(name)
                .ok_or_else(|| Error::UnknownGenerator(name.clone()))?;
            Ok(StringDiagram::generator(name, m.dom.clone(), m.cod.clone()))
        }
        Term::Id(w) => {
            sig.check_word(w)?;
            Ok(StringDiagram::identity(w.clone()))
        }
        Term::Perm(w, p) => {
            sig.check_word(w)?;
            if !perm::is_bijection(p, w.len()) {
                return Err(Error::BadPermutation {
                    perm: p.clone(),
                    len: w.len(),
                });
            }
            Ok(StringDiagram::symmetry(w.clone(), p))
        }
        Term::Comp(a, b) => to_diagram(a, sig)?.compose(&to_diagram(b, sig)?),
        Term::Ten(a, b) => Ok(to_diagram(a, sig)?.tensor(&to_diagram(b, sig)?)),
    }
}

/// Equality of morphisms in the free symmetric strict monoidal category.
pub fn diagram_equal(d1: &StringDiagram, d2: &StringDiagram) -> bool {
    if d1.dom != d2.dom || d1.cod != d2.cod || d1.boxes.len() != d2.boxes.len() {
        return false;
    }
    if d1.label_counts() != d2.label_counts() {
        return false;
    }
    Matcher::new(d1, d2).run()
}

/// Term-level equality over a presentation.
pub fn terms_equal(a: &Term, b: &Term, sig: &SmcPresentation) -> Result<bool> {
    Ok(diagram_equal(&to_diagram(a, sig)?, &to_diagram(b, sig)?))
}

/// Box-bijection search. Wires pin the bijection down wherever they reach,
/// so only components disconnected from the interface need backtracking.
struct Matcher<'a> {
    d1: &'a StringDiagram,
    d2: &'a StringDiagram,
    t1: HashMap<Source, Target>,
    t2: HashMap<Source, Target>,
    depth1: Vec<usize>,
    depth2: Vec<usize>,
    fwd: Vec<Option<usize>>,
    bwd: Vec<Option<usize>>,
}

impl<'a> Matcher<'a> {
    fn new(d1: &'a StringDiagram, d2: &'a StringDiagram) -> Self {
        let n = d1.boxes.len();
        Self {
            d1,
            d2,
            t1: d1.targets(),
            t2: d2.targets(),
            depth1: d1.depths(),
            depth2: d2.depths(),
            fwd: vec![None; n],
            bwd: vec![None; n],
        }
    }

    fn run(mut self) -> bool {
        let mut queue = Vec::new();
        for (s1, s2) in self.d1.outputs.iter().zip(self.d2.outputs.iter()) {
            if !self.match_sources(*s1, *s2, &mut queue) {
                return false;
            }
        }
        for i in 0..self.d1.dom.len() {
            let (a, b) = (self.t1[&Source::Input(i)], self.t2[&Source::Input(i)]);
            if !self.match_targets(a, b, &mut queue) {
                return false;
            }
        }
        if !self.propagate(&mut queue) {
            return false;
        }
        self.match_floating()
    }

    fn assign(&mut self, b1: usize, b2: usize, queue: &mut Vec<(usize, usize)>) -> bool {
        match (self.fwd[b1], self.bwd[b2]) {
            (Some(x), _) => x == b2,
            (None, Some(_)) => false,
            (None, None) => {
                let (x, y) = (&self.d1.boxes[b1], &self.d2.boxes[b2]);
                if x.generator != y.generator
                    || x.dom != y.dom
                    || x.cod != y.cod
                    || self.depth1[b1] != self.depth2[b2]
                {
                    return false;
                }
                self.fwd[b1] = Some(b2);
                self.bwd[b2] = Some(b1);
                queue.push((b1, b2));
                true
            }
        }
    }

    fn match_sources(&mut self, s1: Source, s2: Source, queue: &mut Vec<(usize, usize)>) -> bool {
        match (s1, s2) {
            (Source::Input(i), Source::Input(j)) => i == j,
            (Source::BoxOut { node: a, port: p }, Source::BoxOut { node: b, port: q }) => {
                p == q && self.assign(a, b, queue)
            }
            _ => false,
        }
    }

    fn match_targets(&mut self, t1: Target, t2: Target, queue: &mut Vec<(usize, usize)>) -> bool {
        match (t1, t2) {
            (Target::Output(i), Target::Output(j)) => i == j,
            (Target::BoxIn { node: a, port: p }, Target::BoxIn { node: b, port: q }) => {
                p == q && self.assign(a, b, queue)
            }
            _ => false,
        }
    }

    fn propagate(&mut self, queue: &mut Vec<(usize, usize)>) -> bool {
        while let Some((b1, b2)) = queue.pop() {
            let (x, y) = (&self.d1.boxes[b1], &self.d2.boxes[b2]);
            let pairs: Vec<(Source, Source)> = x
                .inputs
                .iter()
                .copied()
                .zip(y.inputs.iter().copied())
                .collect();
            for (s1, s2) in pairs {
                if !self.match_sources(s1, s2, queue) {
                    return false;
                }
            }
            for port in 0..x.cod.len() {
                let a = self.t1[&Source::BoxOut { node: b1, port }];
                let b = self.t2[&Source::BoxOut { node: b2, port }];
                if !self.match_targets(a, b, queue) {
                    return false;
                }
            }
        }
        true
    }

    fn match_floating(&mut self) -> bool {
        let Some(b1) = self.fwd.iter().position(Option::is_none) else {
            return true;
        };
        for b2 in 0..self.d2.boxes.len() {
            if self.bwd[b2].is_some() {
                continue;
            }
            let (saved_fwd, saved_bwd) = (self.fwd.clone(), self.bwd.clone());
            let mut queue = Vec::new();
            if self.assign(b1, b2, &mut queue)
                && self.propagate(&mut queue)
                && self.match_floating()
            {
                return true;
            }
            self.fwd = saved_fwd;
            self.bwd = saved_bwd;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::fssmc::symmetry;
    use crate::net::{free_smc, GeneratorSig};
    use crate::testing::{arb_term_over, sample_net, small_sig, word};

    fn sig() -> SmcPresentation {
        free_smc(&sample_net())
    }

    #[test]
    fn identity_has_one_wire() {
        let d = to_diagram(&Term::id(word("A")), &sig()).unwrap();
        assert_eq!(d.box_count(), 0);
        assert_eq!(d.outputs(), &[Source::Input(0)]);
    }

    #[test]
    fn tensor_of_g_and_h() {
        let d = to_diagram(&Term::gen("g").ten(Term::gen("h")), &sig()).unwrap();
        assert_eq!(d.box_count(), 2);
        assert_eq!(d.dom(), &word("A A B C C C C D D D D"));
        assert_eq!(d.cod(), &word("E F F"));
    }

    #[test]
    fn reflexive_and_label_sensitive() {
        let s = sig();
        let d = to_diagram(&Term::gen("g"), &s).unwrap();
        assert!(diagram_equal(&d, &d));
        let p = SmcPresentation::new(
            vec!["A".into()],
            vec![
                GeneratorSig::new("g", word("A"), word("A")),
                GeneratorSig::new("h", word("A"), word("A")),
            ],
        )
        .unwrap();
        assert!(!terms_equal(&Term::gen("g"), &Term::gen("h"), &p).unwrap());
    }

    #[test]
    fn symmetry_cancels() {
        let s = sig();
        let swap = symmetry(word("A B"), vec![1, 0]).unwrap();
        let back = symmetry(word("B A"), vec![1, 0]).unwrap();
        assert!(terms_equal(&swap.comp(back), &Term::id(word("A B")), &s).unwrap());
        let id_perm = symmetry(word("A B C"), vec![0, 1, 2]).unwrap();
        assert!(terms_equal(&id_perm, &Term::id(word("A B C")), &s).unwrap());
        assert!(!terms_equal(
            &symmetry(word("A B"), vec![1, 0]).unwrap(),
            &Term::id(word("A B")),
            &s
        )
        .unwrap_or(false));
    }

    #[test]
    fn swapping_equal_letters_is_not_identity() {
        let s = sig();
        let swap = symmetry(word("A A"), vec![1, 0]).unwrap();
        assert!(!terms_equal(&swap, &Term::id(word("A A")), &s).unwrap());
    }

    #[test]
    fn interchange_law() {
        let p = small_sig();
        let (a, b) = (Term::gen("a"), Term::gen("b"));
        let (ad, ac) = a.typecheck(&p).unwrap();
        let (bd, bc) = b.typecheck(&p).unwrap();
        let lhs = a
            .clone()
            .ten(Term::id(bd))
            .comp(Term::id(ac).ten(b.clone()));
        let rhs = a.ten(b);
        assert!(terms_equal(&lhs, &rhs, &p).unwrap());
        let _ = ad;
        let _ = bc;
    }

    #[test]
    fn floating_components_are_matched() {
        // two scalars in different orders
        let p = SmcPresentation::new(
            vec!["A".into()],
            vec![
                GeneratorSig::new("s", word(""), word("")),
                GeneratorSig::new("u", word(""), word("A")),
                GeneratorSig::new("v", word("A"), word("")),
            ],
        )
        .unwrap();
        let loop_ = Term::gen("u").comp(Term::gen("v"));
        let x = Term::gen("s").ten(loop_.clone());
        let y = loop_.clone().ten(Term::gen("s"));
        assert!(terms_equal(&x, &y, &p).unwrap());
        let z = loop_.clone().ten(loop_);
        assert!(!terms_equal(&x, &z, &p).unwrap());
    }

    #[test]
    fn conjugate_split() {
        let s = sig();
        let t = symmetry(word("C D D D D"), vec![1, 0, 2, 3, 4])
            .unwrap()
            .comp(symmetry(word("D C D D D"), vec![1, 0, 2, 3, 4]).unwrap())
            .comp(Term::gen("h"));
        let c = to_diagram(&t, &s).unwrap().as_conjugate().unwrap();
        assert_eq!(c.generator, "h");
        let rebuilt = c.pre.comp(Term::gen("h")).comp(c.post);
        assert!(terms_equal(&rebuilt, &t, &s).unwrap());
        let bypass = to_diagram(&Term::gen("h").ten(Term::id(word("A"))), &s).unwrap();
        assert!(bypass.as_conjugate().is_none());
    }

    #[test]
    fn from_parts_rejects_bad_wiring() {
        let bad = StringDiagram::from_parts(
            word("A"),
            word("A A"),
            vec![],
            vec![Source::Input(0), Source::Input(0)],
        );
        assert!(bad.is_err());
    }

    proptest! {
        #[test]
        fn readback_round_trips((p, t) in arb_term_over()) {
            let d = to_diagram(&t, &p).unwrap();
            let back = d.to_term();
            let d2 = to_diagram(&back, &p).unwrap();
            prop_assert!(diagram_equal(&d, &d2));
            prop_assert_eq!(d.box_count(), t.generator_count());
            prop_assert_eq!(d.decomposition(), t.decomposition());
            prop_assert!(StringDiagram::from_parts(d.dom().clone(), d.cod().clone(), d.boxes().to_vec(), d.outputs().to_vec()).is_ok());
        }

        #[test]
        fn simplify_preserves_meaning((p, t) in arb_term_over()) {
            prop_assert!(terms_equal(&t, &t.simplify(), &p).unwrap());
        }
    }
}
