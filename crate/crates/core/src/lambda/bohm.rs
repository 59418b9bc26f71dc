use std::collections::BTreeSet;
use std::fmt;

use super::reduce::{head_normal_form, print_head, HeadOutcome, VarRef};
use super::term::{binder_name, Printer, Term};

/// A finite approximant of a Böhm tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BohmTree {
    Bottom,
    /// subtree removed by the depth bound
    Cut,
    Node { prefix: usize, head: VarRef, children: Vec<BohmTree> },
}

/// Principal-hnf tree of `t` down to `depth`; nodes whose hnf is not found
/// within `fuel` head steps become `Bottom`.
pub fn bohm_approximant(t: &Term, depth: usize, fuel: usize) -> BohmTree {
    match head_normal_form(t, fuel) {
        HeadOutcome::NoHnfWithinFuel => BohmTree::Bottom,
        HeadOutcome::Hnf(h) => {
            let children = h
                .args
                .iter()
                .map(|a| if depth == 0 { BohmTree::Cut } else { bohm_approximant(a, depth - 1, fuel) })
                .collect();
            BohmTree::Node { prefix: h.prefix_len, head: h.head, children }
        }
    }
}

impl BohmTree {
    /// Replaces every subtree strictly below `depth` with `Cut`.
    pub fn cut_at(&self, depth: usize) -> BohmTree {
        match self {
            BohmTree::Node { prefix, head, children } => BohmTree::Node {
                prefix: *prefix,
                head: head.clone(),
                children: children
                    .iter()
                    .map(|c| if depth == 0 { BohmTree::Cut } else { c.cut_at(depth - 1) })
                    .collect(),
            },
            other => other.clone(),
        }
    }

    /// The Böhm order: `self` is obtained from `other` by cutting subtrees.
    pub fn below(&self, other: &BohmTree) -> bool {
        match (self, other) {
            (BohmTree::Bottom, _) | (BohmTree::Cut, _) => true,
            (
                BohmTree::Node { prefix: p1, head: h1, children: c1 },
                BohmTree::Node { prefix: p2, head: h2, children: c2 },
            ) => p1 == p2 && h1 == h2 && c1.len() == c2.len() && c1.iter().zip(c2).all(|(a, b)| a.below(b)),
            _ => false,
        }
    }

    fn write(&self, depth: usize, avoid: &BTreeSet<String>, out: &mut String) {
        match self {
            BohmTree::Bottom => out.push_str("_|_"),
            BohmTree::Cut => out.push_str("..."),
            BohmTree::Node { prefix, head, children } => {
                if *prefix > 0 {
                    out.push('\\');
                    let names: Vec<String> = (depth..depth + prefix).map(|d| binder_name(d, avoid)).collect();
                    out.push_str(&names.join(" "));
                    out.push('.');
                }
                let d = depth + prefix;
                out.push_str(&print_head(head, d, &Printer::new(avoid)));
                if !children.is_empty() {
                    out.push('[');
                    for (i, c) in children.iter().enumerate() {
                        if i > 0 {
                            out.push_str("; ");
                        }
                        c.write(d, avoid, out);
                    }
                    out.push(']');
                }
            }
        }
    }

    fn free_names(&self, out: &mut BTreeSet<String>) {
        if let BohmTree::Node { head, children, .. } = self {
            if let VarRef::Free(n) = head {
                out.insert(n.clone());
            }
            for c in children {
                c.free_names(out);
            }
        }
    }
}

impl fmt::Display for BohmTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut avoid = BTreeSet::new();
        self.free_names(&mut avoid);
        let mut out = String::new();
        self.write(0, &avoid, &mut out);
        f.write_str(&out)
    }
}
