use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::net::SmcPresentation;

use super::{perm, ObjectWord};

/// Syntax for morphisms of a free symmetric strict monoidal category.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Gen(String),
    Id(ObjectWord),
    /// `Perm(w, p)` has domain `w` and codomain `w.permuted(p)`.
    Perm(ObjectWord, Vec<usize>),
    Comp(Box<Term>, Box<Term>),
    Ten(Box<Term>, Box<Term>),
}

impl Term {
    pub fn gen(name: impl Into<String>) -> Term {
        Term::Gen(name.into())
    }

    pub fn id(word: ObjectWord) -> Term {
        Term::Id(word)
    }

    pub fn comp(self, next: Term) -> Term {
        Term::Comp(Box::new(self), Box::new(next))
    }

    pub fn ten(self, other: Term) -> Term {
        Term::Ten(Box::new(self), Box::new(other))
    }

    /// Sequential composite of a non-empty list.
    pub fn comp_all(terms: impl IntoIterator<Item = Term>) -> Option<Term> {
        terms.into_iter().reduce(Term::comp)
    }

    /// Monoidal product of a list; the empty product is `Id(ε)`.
    pub fn ten_all(terms: impl IntoIterator<Item = Term>) -> Term {
        terms
            .into_iter()
            .reduce(Term::ten)
            .unwrap_or(Term::Id(ObjectWord::empty()))
    }

    /// Returns `(dom, cod)` of a well-formed term.
    pub fn typecheck(&self, sig: &SmcPresentation) -> Result<(ObjectWord, ObjectWord)> {
        match self {
            Term::Gen(name) => sig
                .morphism(name)
                .map(|m| (m.dom.clone(), m.cod.clone()))
                .ok_or_else(|| Error::UnknownGenerator(name.clone())),
            Term::Id(w) => {
                sig.check_word(w)?;
                Ok((w.clone(), w.clone()))
            }
            Term::Perm(w, p) => {
                sig.check_word(w)?;
                if !perm::is_bijection(p, w.len()) {
                    return Err(Error::BadPermutation {
                        perm: p.clone(),
                        len: w.len(),
                    });
                }
                Ok((w.clone(), w.permuted(p)))
            }
            Term::Comp(f, g) => {
                let (fd, fc) = f.typecheck(sig)?;
                let (gd, gc) = g.typecheck(sig)?;
                if fc != gd {
                    return Err(Error::TypeMismatch {
                        context: format!("composite {self}"),
                        expected: fc,
                        found: gd,
                    });
                }
                Ok((fd, gc))
            }
            Term::Ten(f, g) => {
                let (fd, fc) = f.typecheck(sig)?;
                let (gd, gc) = g.typecheck(sig)?;
                Ok((fd.concat(&gd), fc.concat(&gc)))
            }
        }
    }

    /// The set of generators the morphism is built from.
    pub fn decomposition(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_generators(&mut out);
        out
    }

    fn collect_generators(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Gen(n) => {
                out.insert(n.clone());
            }
            Term::Id(_) | Term::Perm(..) => {}
            Term::Comp(a, b) | Term::Ten(a, b) => {
                a.collect_generators(out);
                b.collect_generators(out);
            }
        }
    }

    /// Number of generator occurrences.
    pub fn generator_count(&self) -> usize {
        match self {
            Term::Gen(_) => 1,
            Term::Id(_) | Term::Perm(..) => 0,
            Term::Comp(a, b) | Term::Ten(a, b) => a.generator_count() + b.generator_count(),
        }
    }

    /// Drop identity permutations and units. The result denotes the same
    /// morphism.
    pub fn simplify(&self) -> Term {
        match self {
            Term::Perm(w, p) if perm::is_identity(p) => Term::Id(w.clone()),
            Term::Comp(a, b) => match (a.simplify(), b.simplify()) {
                (Term::Id(_), t) | (t, Term::Id(_)) => t,
                (Term::Perm(w, p), Term::Perm(_, q)) => {
                    let r = perm::then(&p, &q);
                    if perm::is_identity(&r) {
                        Term::Id(w)
                    } else {
                        Term::Perm(w, r)
                    }
                }
                (x, y) => x.comp(y),
            },
            Term::Ten(a, b) => match (a.simplify(), b.simplify()) {
                (Term::Id(x), Term::Id(y)) => Term::Id(x.concat(&y)),
                (Term::Id(x), t) | (t, Term::Id(x)) if x.is_empty() => t,
                (x, y) => x.ten(y),
            },
            t => t.clone(),
        }
    }
}

/// `Perm(word, p)` after checking that `p` is a bijection.
pub fn symmetry(word: ObjectWord, p: Vec<usize>) -> Result<Term> {
    if !perm::is_bijection(&p, word.len()) {
        return Err(Error::BadPermutation {
            perm: p,
            len: word.len(),
        });
    }
    Ok(Term::Perm(word, p))
}

/// Symmetry `x·y -> y·x` swapping two blocks.
pub fn block_swap(x: &ObjectWord, y: &ObjectWord) -> Term {
    Term::Perm(x.concat(y), perm::block_swap(x.len(), y.len()))
}

/// `f ∈ g`: the generator occurs in the decomposition of `g`.
pub fn belongs(generator: &str, term: &Term) -> bool {
    term.decomposition().contains(generator)
}

fn write_word(f: &mut fmt::Formatter<'_>, w: &ObjectWord) -> fmt::Result {
    f.write_str("[")?;
    f.write_str(&w.0.join(","))?;
    f.write_str("]")
}

/// Prints the s-expression form accepted by [`crate::io::parse_term`].
impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Gen(n) => write!(f, "gen({n})"),
            Term::Id(w) => {
                f.write_str("id(")?;
                write_word(f, w)?;
                f.write_str(")")
            }
            Term::Perm(w, p) => {
                f.write_str("perm(")?;
                write_word(f, w)?;
                let ps: Vec<String> = p.iter().map(usize::to_string).collect();
                write!(f, ",[{}])", ps.join(","))
            }
            Term::Comp(a, b) => write!(f, "comp({a},{b})"),
            Term::Ten(a, b) => write!(f, "ten({a},{b})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::net::free_smc;
    use crate::testing::{sample_net, word};

    #[test]
    fn identity_types() {
        let sig = free_smc(&sample_net());
        let t = Term::id(word("A B"));
        assert_eq!(t.typecheck(&sig).unwrap(), (word("A B"), word("A B")));
    }

    #[test]
    fn composite_g_then_k() {
        let sig = free_smc(&sample_net());
        let gk = Term::gen("g").comp(Term::gen("k"));
        assert_eq!(gk.typecheck(&sig).unwrap(), (word("A A B C C C"), word("")));
        let kg = Term::gen("k").comp(Term::gen("g"));
        match kg.typecheck(&sig) {
            Err(Error::TypeMismatch {
                expected, found, ..
            }) => {
                assert_eq!(expected, word(""));
                assert_eq!(found, word("A A B C C C"));
            }
            other => panic!("expected mismatch, got {other:?}"),
        }
    }

    #[test]
    fn unknown_and_bad_permutation() {
        let sig = free_smc(&sample_net());
        assert_eq!(
            Term::gen("zz").typecheck(&sig),
            Err(Error::UnknownGenerator("zz".into()))
        );
        assert!(matches!(
            symmetry(word("A B"), vec![0, 0]),
            Err(Error::BadPermutation { .. })
        ));
        assert!(matches!(
            Term::Perm(word("A B"), vec![1]).typecheck(&sig),
            Err(Error::BadPermutation { .. })
        ));
    }

    #[test]
    fn swap_codomain() {
        let sig = free_smc(&sample_net());
        let s = symmetry(word("A B"), vec![1, 0]).unwrap();
        assert_eq!(s.typecheck(&sig).unwrap().1, word("B A"));
    }

    #[test]
    fn decompositions() {
        let ff = Term::gen("f").ten(Term::gen("f"));
        assert_eq!(ff.decomposition(), BTreeSet::from(["f".to_string()]));
        let fg = Term::gen("f").comp(Term::gen("g"));
        assert_eq!(
            fg.decomposition(),
            BTreeSet::from(["f".to_string(), "g".to_string()])
        );
        assert!(Term::Perm(word("A B"), vec![1, 0])
            .decomposition()
            .is_empty());
        assert!(belongs("f", &fg));
        assert!(!belongs("h", &Term::gen("f").ten(Term::gen("g"))));
        assert!(!belongs("x", &Term::id(word("A"))));
    }

    #[test]
    fn display_is_sexpr() {
        let t = Term::gen("g")
            .ten(Term::gen("h"))
            .comp(Term::gen("k").ten(Term::id(word("F"))))
            .comp(Term::Perm(word("F"), vec![0]));
        assert_eq!(
            t.to_string(),
            "comp(comp(ten(gen(g),gen(h)),ten(gen(k),id([F]))),perm([F],[0]))"
        );
    }

    #[test]
    fn simplify_removes_identities() {
        let t = Term::Perm(word("A"), vec![0])
            .comp(Term::gen("g"))
            .ten(Term::id(ObjectWord::empty()));
        assert_eq!(t.simplify(), Term::gen("g"));
    }
}
