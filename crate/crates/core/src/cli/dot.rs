//! Graphviz output with fixed node names `M<id>` and `E<id>`.

use crate::exactstruct::{hasse_edges, ExactStructure};
use crate::repmod::Indecomposables;
use std::fmt::Write;

fn dimvec(d: &[usize]) -> String {
    d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// AR quiver: solid edges are irreducible maps, dashed edges run `Z -> τZ`.
pub fn ar_quiver(ind: &Indecomposables) -> String {
    let mut out = String::from("digraph ar {\n  rankdir=LR;\n  node [shape=box, fontname=\"monospace\"];\n");
    for (k, m) in ind.modules.iter().enumerate() {
        let mut flags = String::new();
        if ind.projective[k] {
            flags.push('P');
        }
        if ind.injective[k] {
            flags.push('I');
        }
        if ind.simple[k] {
            flags.push('S');
        }
        let flags = if flags.is_empty() { String::new() } else { format!(" [{flags}]") };
        writeln!(out, "  M{k} [label=\"M{k}\\n{}{flags}\"];", dimvec(m.dims())).unwrap();
    }
    for &(a, b, mult) in &ind.irreducible {
        if mult > 1 {
            writeln!(out, "  M{a} -> M{b} [label=\"{mult}\"];").unwrap();
        } else {
            writeln!(out, "  M{a} -> M{b};").unwrap();
        }
    }
    for (k, ar) in ind.ar.iter().enumerate() {
        if let Some(ar) = ar {
            writeln!(out, "  M{k} -> M{} [style=dashed, constraint=false];", ar.tau).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram of the exact structures under inclusion, smaller below.
pub fn lattice(list: &[ExactStructure]) -> String {
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=ellipse, fontname=\"monospace\"];\n");
    for (i, e) in list.iter().enumerate() {
        writeln!(out, "  E{i} [label=\"E{i}\\ndim {}\"];", e.total_dim()).unwrap();
    }
    for (a, b) in hasse_edges(list) {
        writeln!(out, "  E{a} -> E{b};").unwrap();
    }
    out.push_str("}\n");
    out
}
