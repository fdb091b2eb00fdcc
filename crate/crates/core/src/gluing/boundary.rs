//! Composition of nets along boundary places: merge the paired places, then
//! synchronize the transitions around each merged place so that the place
//! itself becomes internal and disappears.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::fssmc::{ObjectWord, Term};
use crate::functor::StrictFunctor;
use crate::semantics::NetWithSemantics;

use super::sync::synchronize_transitions_bounded;
use super::{place_pairing, pushout_glue, SyncRecipe};

/// Firing counts balancing the tokens produced and consumed on a place.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiringVector {
    pub producers: Vec<(String, u64)>,
    pub consumers: Vec<(String, u64)>,
}

impl FiringVector {
    pub fn total(&self) -> u64 {
        self.producers
            .iter()
            .chain(&self.consumers)
            .map(|(_, n)| n)
            .sum()
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Next composition of `total` into `parts.len()` positive parts in
/// lexicographic order.
fn next_composition(parts: &mut [u64]) -> bool {
    let n = parts.len();
    // rightmost position (not the last) that can grow by taking from the tail
    for i in (0..n.saturating_sub(1)).rev() {
        let tail: u64 = parts[i + 1..].iter().sum();
        if tail > (n - i - 1) as u64 {
            parts[i] += 1;
            let rest = tail - 1;
            for p in &mut parts[i + 1..n - 1] {
                *p = 1;
            }
            parts[n - 1] = rest - (n - i - 2) as u64;
            return true;
        }
    }
    false
}

/// Least total number of firings, each transition firing at least once,
/// such that producers put exactly as many tokens on the place as consumers
/// take. Ties go to the lexicographically smallest vector.
pub fn minimal_firing_vector(
    producers: &[(String, u64)],
    consumers: &[(String, u64)],
) -> Result<FiringVector> {
    if producers.is_empty() || consumers.is_empty() {
        return Err(Error::PreconditionFailed(
            "both producers and consumers must be non-empty".into(),
        ));
    }
    if producers.iter().chain(consumers).any(|(_, a)| *a == 0) {
        return Err(Error::PreconditionFailed(
            "token amounts must be positive".into(),
        ));
    }
    let (p, q) = (producers.len() as u64, consumers.len() as u64);
    let s: u64 = producers.iter().map(|(_, a)| a).sum();
    let t: u64 = consumers.iter().map(|(_, b)| b).sum();
    // every producer firing t/g times and every consumer s/g times balances
    let bound = (p * t + q * s) / gcd(s, t);
    let weights: Vec<u64> = producers.iter().map(|(_, a)| *a).collect();
    let costs: Vec<u64> = consumers.iter().map(|(_, b)| *b).collect();
    let width = producers.len() + consumers.len();
    for total in width as u64..=bound {
        let mut parts = vec![1u64; width];
        parts[width - 1] = total - (width as u64 - 1);
        loop {
            let (np, nc) = parts.split_at(producers.len());
            let made: u64 = np.iter().zip(&weights).map(|(n, a)| n * a).sum();
            let used: u64 = nc.iter().zip(&costs).map(|(m, b)| m * b).sum();
            if made == used {
                return Ok(FiringVector {
                    producers: producers
                        .iter()
                        .zip(np)
                        .map(|((n, _), c)| (n.clone(), *c))
                        .collect(),
                    consumers: consumers
                        .iter()
                        .zip(nc)
                        .map(|((n, _), c)| (n.clone(), *c))
                        .collect(),
                });
            }
            if !next_composition(&mut parts) {
                break;
            }
        }
    }
    Err(Error::NoSolutionWithinBound { bound })
}

/// What boundary composition produced, stage by stage.
#[derive(Debug, Clone)]
pub struct BoundaryComposition {
    /// The composite net.
    pub net: NetWithSemantics,
    /// The glued net before synchronization.
    pub glued: NetWithSemantics,
    /// For each merged place: its name in the glued net and the firing
    /// counts used.
    pub firings: Vec<(String, FiringVector)>,
    /// One synchronization functor per merged place, in order.
    pub synchronizations: Vec<StrictFunctor>,
}

fn repeated(name: &str, n: u64) -> impl Iterator<Item = Term> + '_ {
    (0..n).map(move |_| Term::gen(name))
}

fn synced_name(v: &FiringVector) -> String {
    v.producers
        .iter()
        .chain(&v.consumers)
        .map(|(n, c)| {
            if *c == 1 {
                n.clone()
            } else {
                format!("{n}^{c}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// `(⊗ producers ⊗ Id_R) ; σ ; (⊗ consumers ⊗ Id_rest)`, where `R` holds the
/// consumers' inputs from other places and `σ` routes the place's tokens
/// from producers to consumers in order.
fn boundary_expression(nets: &NetWithSemantics, place: &str, v: &FiringVector) -> Term {
    let sig = nets.presentation();
    let ty = |n: &str| sig.morphism(n).expect("transition of the net");
    let produced: Vec<Term> = v
        .producers
        .iter()
        .flat_map(|(n, c)| repeated(n, *c))
        .collect();
    let consumed: Vec<Term> = v
        .consumers
        .iter()
        .flat_map(|(n, c)| repeated(n, *c))
        .collect();
    let out: ObjectWord = v
        .producers
        .iter()
        .flat_map(|(n, c)| (0..*c).flat_map(move |_| ty(n).cod.0.clone()))
        .collect();
    let need: ObjectWord = v
        .consumers
        .iter()
        .flat_map(|(n, c)| (0..*c).flat_map(move |_| ty(n).dom.0.clone()))
        .collect();
    let extra: ObjectWord = need.iter().filter(|l| *l != place).cloned().collect();

    // route: positions in out·extra feeding need, then leftovers of out
    let mut taken = vec![false; out.len()];
    let mut next_extra = out.len();
    let mut route = Vec::with_capacity(out.len() + extra.len());
    for letter in need.iter() {
        if letter == place {
            let i = (0..out.len())
                .find(|&i| !taken[i] && out.0[i] == place)
                .expect("balanced firing vector");
            taken[i] = true;
            route.push(i);
        } else {
            route.push(next_extra);
            next_extra += 1;
        }
    }
    let rest: ObjectWord = (0..out.len())
        .filter(|&i| !taken[i])
        .map(|i| out.0[i].clone())
        .collect();
    route.extend((0..out.len()).filter(|&i| !taken[i]));

    Term::ten_all(produced)
        .ten(Term::id(extra.clone()))
        .comp(Term::Perm(out.concat(&extra), route))
        .comp(Term::ten_all(consumed).ten(Term::id(rest)))
        .simplify()
}

/// Compose `left` and `right` by connecting each paired left place (an
/// output of `left`) with its right place (an input of `right`).
pub fn boundary_compose(
    left: &NetWithSemantics,
    right: &NetWithSemantics,
    pairing: &[(String, String)],
    k: usize,
) -> Result<BoundaryComposition> {
    let mut seen_l = BTreeSet::new();
    let mut seen_r = BTreeSet::new();
    for (lp, rp) in pairing {
        if !left.net().has_place(lp) {
            return Err(Error::UnknownPlace(lp.clone()));
        }
        if !right.net().has_place(rp) {
            return Err(Error::UnknownPlace(rp.clone()));
        }
        if !seen_l.insert(lp) || !seen_r.insert(rp) {
            return Err(Error::BoundaryOrientation(format!(
                "place paired twice in `{lp}={rp}`"
            )));
        }
        if let Some(t) = left.net().transitions().iter().find(|t| t.pre.contains(lp)) {
            return Err(Error::BoundaryOrientation(format!(
                "`{}` consumes from the left boundary place `{lp}`",
                t.name
            )));
        }
        if let Some(t) = right
            .net()
            .transitions()
            .iter()
            .find(|t| t.post.contains(rp))
        {
            return Err(Error::BoundaryOrientation(format!(
                "`{}` produces on the right boundary place `{rp}`",
                t.name
            )));
        }
    }

    let (w, l, r) = place_pairing(left.presentation(), right.presentation(), pairing)?;
    let glued = pushout_glue(left, right, &w, &l, &r)?;

    let mut current = glued.net.clone();
    let mut firings = Vec::new();
    let mut synchronizations = Vec::new();
    for (lp, _) in pairing {
        let place = glued.inj_left.object_image(lp).expect("total").0[0].clone();
        let net = current.net();
        let producers: Vec<(String, u64)> = net
            .transitions()
            .iter()
            .filter(|t| t.post.contains(&place))
            .map(|t| (t.name.clone(), u64::from(t.post.get(&place))))
            .collect();
        let consumers: Vec<(String, u64)> = net
            .transitions()
            .iter()
            .filter(|t| t.pre.contains(&place))
            .map(|t| (t.name.clone(), u64::from(t.pre.get(&place))))
            .collect();
        if producers.is_empty() || consumers.is_empty() {
            return Err(Error::BoundaryOrientation(format!(
                "merged place `{place}` needs both a producer and a consumer"
            )));
        }
        if producers
            .iter()
            .any(|p| consumers.iter().any(|c| c.0 == p.0))
        {
            return Err(Error::BoundaryOrientation(format!(
                "a transition both produces and consumes on `{place}`"
            )));
        }
        let vector = minimal_firing_vector(&producers, &consumers)?;
        let recipe = SyncRecipe {
            name: synced_name(&vector),
            expression: boundary_expression(&current, &place, &vector),
            prune: true,
        };
        let (next, f) = synchronize_transitions_bounded(&current, &recipe, k)?;
        firings.push((place, vector));
        synchronizations.push(f);
        current = next;
    }
    Ok(BoundaryComposition {
        net: current,
        glued: glued.net,
        firings,
        synchronizations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(v: &[(&str, u64)]) -> Vec<(String, u64)> {
        v.iter().map(|(n, a)| (n.to_string(), *a)).collect()
    }

    #[test]
    fn three_f_one_h_one_k() {
        let v = minimal_firing_vector(&named(&[("f", 1)]), &named(&[("h", 2), ("k", 1)])).unwrap();
        assert_eq!(v.producers, named(&[("f", 3)]));
        assert_eq!(v.consumers, named(&[("h", 1), ("k", 1)]));
    }

    #[test]
    fn simple_vectors() {
        let v = minimal_firing_vector(&named(&[("p", 1)]), &named(&[("c", 1)])).unwrap();
        assert_eq!(v.total(), 2);
        let v = minimal_firing_vector(&named(&[("p", 2)]), &named(&[("c", 3)])).unwrap();
        assert_eq!(v.producers, named(&[("p", 3)]));
        assert_eq!(v.consumers, named(&[("c", 2)]));
    }

    #[test]
    fn compositions_in_lex_order() {
        let mut parts = vec![1, 1, 2];
        let mut seen = vec![parts.clone()];
        while next_composition(&mut parts) {
            seen.push(parts.clone());
        }
        assert_eq!(seen, vec![vec![1, 1, 2], vec![1, 2, 1], vec![2, 1, 1]]);
    }
}
