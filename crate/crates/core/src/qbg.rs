//! The quantum Bruhat graph of the type `C_n` Weyl group.

use std::fmt;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Result;
use crate::weyl::letter::{position, less};
use crate::weyl::{enumerate_group, rho, RootC, SignedPerm};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum EdgeKind {
    Bruhat,
    Quantum,
}

impl fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeKind::Bruhat => "B",
            EdgeKind::Quantum => "Q",
        })
    }
}

impl fmt::Debug for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct QbgEdge {
    pub source: SignedPerm,
    pub root: RootC,
    pub target: SignedPerm,
    pub kind: EdgeKind,
}

/// `⟨ρ, α^∨⟩`.
pub fn rho_height(n: usize, root: &RootC) -> i64 {
    root.pair(&rho(n))
}

/// Classifies `w → w s_α` by comparing lengths.
pub fn edge_by_length(w: &SignedPerm, root: &RootC) -> Option<EdgeKind> {
    let n = w.rank();
    let l = w.length() as i64;
    let y = w.times_reflection(root).length() as i64;
    if y == l + 1 {
        Some(EdgeKind::Bruhat)
    } else if y == l - 2 * rho_height(n, root) + 1 {
        Some(EdgeKind::Quantum)
    } else {
        None
    }
}

fn sign(x: i32) -> i32 {
    x.signum()
}

/// Classifies `w → w s_α` by the window-pattern criterion for signed
/// permutations.
pub fn edge_by_pattern(w: &SignedPerm, root: &RootC) -> Option<EdgeKind> {
    let n = w.rank();
    let (a, b) = root.letters();
    let (wa, wb) = (w.act(a), w.act(b));
    let between = || {
        (position(n, a) + 1..position(n, b)).map(move |p| w.act(crate::weyl::letter::from_position(n, p)))
    };
    let lt = |x: i32, y: i32| less(n, x, y);
    match root {
        RootC::Minus(..) | RootC::Long(..) => {
            if lt(wa, wb) {
                if between().any(|wk| lt(wa, wk) && lt(wk, wb)) {
                    None
                } else {
                    Some(EdgeKind::Bruhat)
                }
            } else if between().all(|wk| lt(wk, wa) && lt(wb, wk)) {
                Some(EdgeKind::Quantum)
            } else {
                None
            }
        }
        RootC::Plus(..) => {
            let ok = lt(wa, wb)
                && sign(wa) == sign(wb)
                && !between().any(|wk| lt(wa, wk) && lt(wk, wb));
            ok.then_some(EdgeKind::Bruhat)
        }
    }
}

/// All edges of `QBG(W)`, ordered by source (group enumeration order) and
/// then by root.
pub fn build_graph(n: usize) -> Result<Vec<QbgEdge>> {
    let group = enumerate_group(n)?;
    let roots = RootC::positive_roots(n);
    let per_vertex: Vec<Vec<QbgEdge>> = group
        .par_iter()
        .map(|w| {
            roots
                .iter()
                .filter_map(|r| {
                    edge_by_length(w, r).map(|kind| QbgEdge {
                        source: w.clone(),
                        root: *r,
                        target: w.times_reflection(r),
                        kind,
                    })
                })
                .collect()
        })
        .collect();
    Ok(per_vertex.into_iter().flatten().collect())
}

pub fn export_json(n: usize, edges: &[QbgEdge]) -> Result<Value> {
    let vertices: Vec<String> = enumerate_group(n)?.iter().map(|w| w.to_string()).collect();
    let edges: Vec<Value> = edges
        .iter()
        .map(|e| {
            json!({
                "src": e.source.to_string(),
                "root": e.root.label(),
                "dst": e.target.to_string(),
                "kind": e.kind.to_string(),
            })
        })
        .collect();
    Ok(json!({ "vertices": vertices, "edges": edges }))
}

pub fn export_dot(n: usize, edges: &[QbgEdge]) -> Result<String> {
    let mut out = String::new();
    writeln!(out, "digraph QBG_C{n} {{").unwrap();
    for w in enumerate_group(n)? {
        writeln!(out, "  \"{w}\";").unwrap();
    }
    for e in edges {
        let style = match e.kind {
            EdgeKind::Bruhat => "solid",
            EdgeKind::Quantum => "dashed",
        };
        writeln!(
            out,
            "  \"{}\" -> \"{}\" [label=\"{} {}\", style={style}];",
            e.source, e.target, e.root, e.kind
        )
        .unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_to_simple_reflection_is_bruhat() {
        for n in 1..=4 {
            for i in 1..=n {
                let r = RootC::simple(n, i);
                assert_eq!(edge_by_length(&SignedPerm::identity(n), &r), Some(EdgeKind::Bruhat));
            }
        }
    }

    #[test]
    fn rank_one_graph() {
        let edges = build_graph(1).unwrap();
        assert_eq!(edges.len(), 2);
        assert_eq!(edges[0].kind, EdgeKind::Bruhat);
        assert!(edges[0].source.is_identity());
        assert_eq!(edges[1].kind, EdgeKind::Quantum);
        assert!(edges[1].target.is_identity());
    }

    #[test]
    fn pattern_agrees_with_length_small() {
        for n in 1..=3 {
            for w in enumerate_group(n).unwrap() {
                for r in RootC::positive_roots(n) {
                    assert_eq!(edge_by_pattern(&w, &r), edge_by_length(&w, &r), "w={w} α={r}");
                }
            }
        }
    }
}
