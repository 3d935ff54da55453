#![allow(dead_code)]

use auslander_lab::algebra::{build_from_quiver, samples, Algebra, QuiverPresentation};
use auslander_lab::functorcat::{end_algebra, CategorySpec, EndAlgebra};
use auslander_lab::linalg::FieldPrime;
use auslander_lab::repmod::{all_indecomposables, Indecomposables, Module, ModuleMap};
use rand::Rng;
use std::sync::Arc;

pub fn alg(p: u64, q: QuiverPresentation) -> Arc<Algebra> {
    build_from_quiver(FieldPrime::new(p).unwrap(), &q).unwrap()
}

/// `(name, presentation)` for the four test algebras.
pub fn test_quivers() -> Vec<(&'static str, QuiverPresentation)> {
    vec![
        ("kA2", samples::a2()),
        ("k[x]/x^2", samples::dual_numbers()),
        ("kA3/rel", samples::a3(true)),
        ("kA3", samples::a3(false)),
    ]
}

pub fn auslander(p: u64, q: QuiverPresentation) -> (Indecomposables, EndAlgebra) {
    let a = alg(p, q);
    let ind = all_indecomposables(&a, 12).unwrap();
    let spec = CategorySpec::from_indecomposables(&ind);
    let e = end_algebra(&spec).unwrap();
    (ind, e)
}

pub fn random_map(basis: &[ModuleMap], src: &Module, tgt: &Module, rng: &mut impl Rng) -> ModuleMap {
    let p = src.field().p();
    let mut acc = ModuleMap::zero(src, tgt);
    for b in basis {
        acc = acc.add(&b.scale(rng.gen_range(0..p)));
    }
    acc
}
