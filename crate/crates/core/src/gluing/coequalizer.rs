//! Coequalizers of transition-preserving functors between free categories.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::fssmc::{perm, ObjectWord, Term};
use crate::functor::{is_generator_preserving_on_objects, is_transition_preserving, StrictFunctor};
use crate::net::{GeneratorSig, SmcPresentation};

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        Self((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut cur = x;
        while self.0[cur] != root {
            cur = std::mem::replace(&mut self.0[cur], root);
        }
        root
    }

    /// Union keeping the smaller index as root, so every root is the
    /// minimum of its class.
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

/// Permutations `(into, out)` with `Perm(q(dom m), into) ; [m] ; Perm(cod [m], out)`
/// the image of `m` in the quotient.
type Conjugation = (Vec<usize>, Vec<usize>);

fn sorting(class: &GeneratorSig, dom: &ObjectWord, cod: &ObjectWord) -> Option<Conjugation> {
    Some((
        perm::matching(dom, &class.dom)?,
        perm::matching(&class.cod, cod)?,
    ))
}

/// Builds the quotient presentation from object and generator
/// representatives, and the quotient functor. Generators without an entry
/// in `chosen` are conjugated by the sorting symmetries.
fn quotient(
    d: &SmcPresentation,
    object_rep: &dyn Fn(&str) -> String,
    generator_rep: &dyn Fn(&str) -> String,
    objects: Vec<String>,
    chosen: &BTreeMap<String, Conjugation>,
) -> Result<(SmcPresentation, StrictFunctor)> {
    let q = |w: &ObjectWord| -> ObjectWord { w.iter().map(|l| object_rep(l)).collect() };
    let skeleton = SmcPresentation::new(objects.clone(), vec![])?;
    let mut classes: Vec<GeneratorSig> = Vec::new();
    for m in d.morphisms() {
        if generator_rep(&m.name) == m.name {
            let (dom, _) = skeleton.sort_word(&q(&m.dom));
            let (cod, _) = skeleton.sort_word(&q(&m.cod));
            classes.push(GeneratorSig::new(m.name.clone(), dom, cod));
        }
    }
    let e = SmcPresentation::new(objects, classes)?;
    let object_map = d
        .objects()
        .iter()
        .map(|o| (o.clone(), ObjectWord::from_letters([object_rep(o)])))
        .collect();
    let mut morphism_map = BTreeMap::new();
    for m in d.morphisms() {
        let class = e
            .morphism(&generator_rep(&m.name))
            .expect("representative kept");
        let (dom, cod) = (q(&m.dom), q(&m.cod));
        let (into, out) = match chosen.get(&m.name) {
            Some(c) => c.clone(),
            None => sorting(class, &dom, &cod).ok_or_else(|| {
                Error::PredicateFailed(format!(
                    "generators identified with `{}` have incompatible types",
                    class.name
                ))
            })?,
        };
        let image = Term::Perm(dom, into)
            .comp(Term::gen(class.name.clone()))
            .comp(Term::Perm(class.cod.clone(), out))
            .simplify();
        morphism_map.insert(m.name.clone(), image);
    }
    let coeq = StrictFunctor::new(d.clone(), e.clone(), object_map, morphism_map)?;
    Ok((e, coeq))
}

/// Coequalizer of two transition-preserving, generator-preserving functors
/// `F, G: C -> D`. Object and generator classes are named after their
/// least member in the order of `D`.
///
/// The representative of each generator class is conjugated by sorting
/// symmetries; every other member gets the symmetries forced by the
/// equation `CoEq(F c) = CoEq(G c)` linking it to an already placed member.
/// When a cycle of such equations forces a generator to absorb a
/// non-trivial symmetry, the coequalizer is not free and
/// `NonFreeCoequalizer` is returned.
pub fn coequalize_tp(
    f: &StrictFunctor,
    g: &StrictFunctor,
) -> Result<(SmcPresentation, StrictFunctor)> {
    if f.source() != g.source() || f.target() != g.target() {
        return Err(Error::SourceTargetMismatch(
            "functors are not parallel".into(),
        ));
    }
    for (label, h) in [("first", f), ("second", g)] {
        if !is_generator_preserving_on_objects(h) {
            return Err(Error::PredicateFailed(format!(
                "{label} functor is not generator-preserving on objects"
            )));
        }
        if !is_transition_preserving(h) {
            return Err(Error::PredicateFailed(format!(
                "{label} functor is not transition-preserving"
            )));
        }
    }
    let c = f.source();
    let d = f.target();

    let mut objects = UnionFind::new(d.objects().len());
    for x in c.objects() {
        let a = d
            .object_index(&f.object_image(x).expect("total").0[0])
            .expect("declared");
        let b = d
            .object_index(&g.object_image(x).expect("total").0[0])
            .expect("declared");
        objects.union(a, b);
    }
    // each generator of C links the generators under its two images
    let conjugate_of = |h: &StrictFunctor, x: &str| -> (usize, Vec<usize>, Vec<usize>) {
        let conj = h
            .image_diagram(x)
            .and_then(|diag| diag.as_conjugate())
            .expect("transition-preserving");
        let (Term::Perm(_, pre), Term::Perm(_, post)) = (conj.pre, conj.post) else {
            unreachable!("conjugates carry explicit permutations")
        };
        (
            d.morphism_index(&conj.generator).expect("declared"),
            pre,
            post,
        )
    };
    let links: Vec<_> = c
        .morphisms()
        .iter()
        .map(|x| {
            (
                x.name.clone(),
                conjugate_of(f, &x.name),
                conjugate_of(g, &x.name),
            )
        })
        .collect();
    let mut generators = UnionFind::new(d.morphisms().len());
    for (_, (a, ..), (b, ..)) in &links {
        generators.union(*a, *b);
    }

    let object_rep: BTreeMap<String, String> = d
        .objects()
        .iter()
        .enumerate()
        .map(|(i, o)| (o.clone(), d.objects()[objects.find(i)].clone()))
        .collect();
    let generator_rep: BTreeMap<String, String> = d
        .morphisms()
        .iter()
        .enumerate()
        .map(|(i, m)| {
            (
                m.name.clone(),
                d.morphisms()[generators.find(i)].name.clone(),
            )
        })
        .collect();
    let kept: Vec<String> = d
        .objects()
        .iter()
        .filter(|o| &object_rep[*o] == *o)
        .cloned()
        .collect();

    // place representatives first, then propagate along the links
    let q = |w: &ObjectWord| -> ObjectWord { w.iter().map(|l| object_rep[l].clone()).collect() };
    let skeleton = SmcPresentation::new(kept.clone(), vec![])?;
    let mut placed: Vec<Option<Conjugation>> = vec![None; d.morphisms().len()];
    for (i, m) in d.morphisms().iter().enumerate() {
        if generator_rep[&m.name] == m.name {
            let (dom, cod) = (q(&m.dom), q(&m.cod));
            let class = GeneratorSig::new(
                m.name.clone(),
                skeleton.sort_word(&dom).0,
                skeleton.sort_word(&cod).0,
            );
            placed[i] = sorting(&class, &dom, &cod);
        }
    }
    // Perm(w, p) ; Perm(w', a) is Perm(w, then(p, a)); solving
    // then(p1, a1) = then(p2, a2) for a2 gives then(inverse(p2), then(p1, a1)).
    let transfer = |from: &Conjugation, pre: (&[usize], &[usize]), post: (&[usize], &[usize])| {
        let into = perm::then(&perm::inverse(pre.1), &perm::then(pre.0, &from.0));
        let out = perm::then(&perm::then(&from.1, post.0), &perm::inverse(post.1));
        (into, out)
    };
    let mut progress = true;
    while progress {
        progress = false;
        for (_, (a, p1, q1), (b, p2, q2)) in &links {
            match (&placed[*a], &placed[*b]) {
                (Some(ca), None) => {
                    placed[*b] = Some(transfer(ca, (p1, p2), (q1, q2)));
                    progress = true;
                }
                (None, Some(cb)) => {
                    placed[*a] = Some(transfer(cb, (p2, p1), (q2, q1)));
                    progress = true;
                }
                _ => {}
            }
        }
    }
    for (name, (a, p1, q1), (b, p2, q2)) in &links {
        let (ca, cb) = (
            placed[*a].as_ref().expect("placed"),
            placed[*b].as_ref().expect("placed"),
        );
        if perm::then(p1, &ca.0) != perm::then(p2, &cb.0)
            || perm::then(&ca.1, q1) != perm::then(&cb.1, q2)
        {
            return Err(Error::NonFreeCoequalizer(format!(
                "identifying along `{name}` forces `{}` to absorb a symmetry",
                generator_rep[&d.morphisms()[*a].name]
            )));
        }
    }
    let chosen: BTreeMap<String, Conjugation> = d
        .morphisms()
        .iter()
        .zip(placed)
        .map(|(m, c)| (m.name.clone(), c.expect("placed")))
        .collect();
    quotient(
        d,
        &|l| object_rep[l].clone(),
        &|m| generator_rep[m].clone(),
        kept,
        &chosen,
    )
}

/// Identify two object generators by deleting `drop` and writing `keep` in
/// its place. Words are re-sorted and the sorting symmetries recorded in
/// the quotient functor.
pub fn merge_two_places(
    sig: &SmcPresentation,
    keep: &str,
    drop: &str,
) -> Result<(SmcPresentation, StrictFunctor)> {
    for p in [keep, drop] {
        if !sig.has_object(p) {
            return Err(Error::UnknownGenerator(p.to_string()));
        }
    }
    if keep == drop {
        return Err(Error::SamePlace(keep.to_string()));
    }
    let kept: Vec<String> = sig
        .objects()
        .iter()
        .filter(|o| *o != drop)
        .cloned()
        .collect();
    let rename = |l: &str| {
        if l == drop {
            keep.to_string()
        } else {
            l.to_string()
        }
    };
    quotient(sig, &rename, &|m| m.to_string(), kept, &BTreeMap::new())
}
