use std::fmt::Write;

use crate::fssmc::Term;
use crate::net::PetriNet;
use crate::semantics::{Fold, SemMorphism};

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' | '\\' => {
                out.push('\\');
                out.push(c);
            }
            '\n' => out.push_str("\\n"),
            _ => out.push(c),
        }
    }
    out.push('"');
    out
}

fn label(name: &str, decoration: Option<String>) -> String {
    match decoration {
        Some(d) => quote(&format!("{name} : {d}")),
        None => quote(name),
    }
}

/// Renders a net in Graphviz DOT. Places are circles, transitions boxes;
/// with a fold, labels carry the decorations. Arc weights above one become
/// edge labels. Output depends only on the inputs.
pub fn export_dot(net: &PetriNet, fold: Option<&Fold>) -> String {
    let place_decoration = |p: &str| match fold {
        None | Some(Fold::Terminal { .. }) => None,
        Some(f) => f.object_image(p).map(|o| o.to_string()),
    };
    let transition_decoration = |t: &str| match fold {
        None | Some(Fold::Terminal { .. }) => None,
        Some(f) => match f.apply(&Term::gen(t)).ok()? {
            SemMorphism::Free(term) => Some(term.simplify().to_string()),
            other => Some(other.to_string()),
        },
    };

    let mut out = String::from("digraph net {\n  rankdir=LR;\n");
    for p in net.places() {
        let _ = writeln!(
            out,
            "  {} [shape=circle, label={}];",
            quote(&format!("place:{p}")),
            label(p, place_decoration(p))
        );
    }
    for t in net.transitions() {
        let _ = writeln!(
            out,
            "  {} [shape=box, label={}];",
            quote(&format!("transition:{}", t.name)),
            label(&t.name, transition_decoration(&t.name))
        );
    }
    let edge = |out: &mut String, from: String, to: String, n: u32| {
        let weight = if n > 1 {
            format!(" [label={}]", quote(&n.to_string()))
        } else {
            String::new()
        };
        let _ = writeln!(out, "  {} -> {}{};", quote(&from), quote(&to), weight);
    };
    for t in net.transitions() {
        for p in net.places() {
            let n = t.pre.get(p);
            if n > 0 {
                edge(
                    &mut out,
                    format!("place:{p}"),
                    format!("transition:{}", t.name),
                    n,
                );
            }
        }
        for p in net.places() {
            let n = t.post.get(p);
            if n > 0 {
                edge(
                    &mut out,
                    format!("transition:{}", t.name),
                    format!("place:{p}"),
                    n,
                );
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::sample_net;

    #[test]
    fn empty_net_has_no_nodes() {
        let dot = export_dot(&PetriNet::empty(), None);
        assert_eq!(dot, "digraph net {\n  rankdir=LR;\n}\n");
    }

    #[test]
    fn sample_net_shapes_and_weights() {
        let dot = export_dot(&sample_net(), None);
        assert_eq!(dot.matches("shape=circle").count(), 6);
        assert_eq!(dot.matches("shape=box").count(), 4);
        assert!(dot.contains("\"transition:f\" -> \"place:A\" [label=\"3\"];"));
        assert!(dot.contains("\"transition:f\" -> \"place:B\";"));
        assert_eq!(dot, export_dot(&sample_net(), None));
    }
}
