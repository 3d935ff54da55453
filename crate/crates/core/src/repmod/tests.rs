use super::*;
use crate::algebra::{build_from_quiver, samples, Algebra};
use crate::linalg::{FieldPrime, Matrix};
use std::sync::Arc;

fn alg(p: u64, q: crate::algebra::QuiverPresentation) -> Arc<Algebra> {
    build_from_quiver(FieldPrime::new(p).unwrap(), &q).unwrap()
}

#[test]
fn homs_over_a2() {
    let a = alg(3, samples::a2());
    let s = standard_modules(&a);
    assert_eq!(hom_dim(&s.simples[0], &s.simples[0]), 1);
    assert_eq!(hom_dim(&s.simples[0], &s.simples[1]), 0);
    assert_eq!(hom_dim(&s.projectives[0], &s.simples[0]), 1);
    for f in hom_basis(&s.projectives[0], &s.injectives[1]).unwrap() {
        assert!(f.is_homomorphism());
    }
}

#[test]
fn map_parts_cases() {
    let a = alg(2, samples::a2());
    let s = standard_modules(&a);
    let p1 = &s.projectives[0];
    let id = ModuleMap::identity(p1);
    let mp = map_parts(&id);
    assert!(mp.kernel.is_zero() && mp.cokernel.module.is_zero());
    assert_eq!(mp.image.dims(), p1.dims());
    let z = ModuleMap::zero(p1, &s.simples[0]);
    let mp = map_parts(&z);
    assert_eq!(mp.kernel.dims(), p1.dims());
    assert!(mp.image.is_zero());
    let f = hom_basis(p1, &s.simples[0]).unwrap().remove(0);
    let mp = map_parts(&f);
    assert!(is_isomorphic(&mp.kernel, &s.simples[1]).is_some());
    assert_eq!(mp.mono_part.compose(&mp.epi_part), f);
}

#[test]
fn decompositions() {
    let a = alg(5, samples::a2());
    let s = standard_modules(&a);
    let ss = DirectSum::new(&a, &[s.simples[0].clone(), s.simples[0].clone()]).module;
    let d = decompose(&ss);
    assert_eq!(d.len(), 2);
    assert!(d.iter().all(|x| is_isomorphic(&x.module, &s.simples[0]).is_some()));
    let reg = standard::regular_module(&a);
    let d = decompose(&reg);
    assert_eq!(d.len(), 2);
    assert!(d.iter().all(|x| is_projective(&x.module) && is_indecomposable(&x.module)));
    for x in &d {
        assert!(x.proj.compose(&x.incl).is_iso());
    }
}

#[test]
fn dual_numbers_standard() {
    let a = alg(2, samples::dual_numbers());
    let s = standard_modules(&a);
    assert_eq!(s.simples.len(), 1);
    assert!(is_isomorphic(&s.projectives[0], &s.injectives[0]).is_some());
    assert!(is_isomorphic(&s.projectives[0], &standard::regular_module(&a)).is_some());
}

#[test]
fn semisimple_standard() {
    let a = alg(3, samples::semisimple(2));
    let s = standard_modules(&a);
    for v in 0..2 {
        assert_eq!(s.simples[v], s.projectives[v]);
        assert!(is_isomorphic(&s.simples[v], &s.injectives[v]).is_some());
    }
}

#[test]
fn iso_under_base_change() {
    use rand::SeedableRng;
    let a = alg(5, samples::a3(false));
    let m = standard::regular_module(&a);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let g: Vec<Matrix> = m.dims().iter().map(|&d| decompose::random_invertible(a.field(), d, &mut rng)).collect();
    let (n, iso) = m.transport(&g).unwrap();
    assert!(iso.is_homomorphism());
    let w = is_isomorphic(&m, &n).unwrap();
    assert!(w.is_iso() && w.is_homomorphism());
    let s = standard_modules(&a);
    assert!(is_isomorphic(&s.simples[0], &s.simples[1]).is_none());
}

#[test]
fn covers_and_presentations() {
    let a = alg(2, samples::a2());
    let s = standard_modules(&a);
    let c = projective_cover(&s.projectives[0]);
    assert!(c.map.is_iso());
    let c = projective_cover(&s.simples[0]);
    assert_eq!(c.vertices, vec![0]);
    assert_eq!(c.sum.module.dims(), &[1, 1]);
    let pres = minimal_presentation(&s.simples[0]);
    assert_eq!(pres.p1(), &[1]);
    let z = projective_cover(&Module::zero(&a));
    assert!(z.vertices.is_empty());
    let pres = minimal_presentation(&s.projectives[1]);
    assert!(pres.p1().is_empty());

    let d = alg(5, samples::dual_numbers());
    let sd = standard_modules(&d);
    let pres = minimal_presentation(&sd.simples[0]);
    assert_eq!((pres.p0(), pres.p1()), (&[0usize][..], &[0usize][..]));
}

#[test]
fn ext_dims() {
    let a = alg(3, samples::a2());
    let s = standard_modules(&a);
    assert_eq!(ext_dim(1, &s.simples[0], &s.simples[1]), 1);
    assert_eq!(ext_dim(1, &s.simples[1], &s.simples[0]), 0);
    for m in &s.projectives {
        for n in s.simples.iter().chain(&s.injectives) {
            assert_eq!(ext_dim(1, m, n), 0);
        }
    }
    assert_eq!(ext_dim(0, &s.projectives[0], &s.injectives[1]), hom_dim(&s.projectives[0], &s.injectives[1]));
}

#[test]
fn ext_classes_roundtrip() {
    let a = alg(5, samples::a3(false));
    let s = standard_modules(&a);
    let syz = SyzygyData::new(&s.simples[0]);
    let e = ExtSpace::new(&syz, &s.simples[1]).unwrap();
    assert_eq!(e.dim(), 1);
    let seq = e.realize(&[3]);
    assert!(seq.is_exact());
    assert!(!seq.is_split());
    assert_eq!(e.class_of(&seq).unwrap(), vec![3]);
    assert!(e.realize(&[0]).is_split());
}

#[test]
fn transposes() {
    let a = alg(2, samples::a2());
    let s = standard_modules(&a);
    assert!(transpose_module(&s.projectives[0]).is_zero());
    let t = transpose_module(&s.simples[0]);
    assert_eq!(t.dim(), 1);
    let d = alg(5, samples::dual_numbers());
    let sd = standard_modules(&d);
    let t = transpose_module(&sd.simples[0]);
    assert_eq!(t.dims(), &[1]);
}

#[test]
fn ar_sequences_small() {
    let a = alg(2, samples::a2());
    let ind = all_indecomposables(&a, 10).unwrap();
    assert_eq!(ind.len(), 3);
    let s = standard_modules(&a);
    let ar = ar_sequence(&s.simples[0], &ind.modules).unwrap();
    assert!(is_isomorphic(&ar.tau_z, &s.simples[1]).is_some());
    assert!(is_isomorphic(ar.seq.middle(), &s.projectives[0]).is_some());
    assert!(ar_sequence(&s.projectives[0], &ind.modules).is_err());

    let d = alg(2, samples::dual_numbers());
    let ind = all_indecomposables(&d, 10).unwrap();
    assert_eq!(ind.len(), 2);
    let sd = standard_modules(&d);
    let ar = ar_sequence(&sd.simples[0], &ind.modules).unwrap();
    assert!(is_isomorphic(ar.seq.middle(), &sd.projectives[0]).is_some());
}

#[test]
fn knitting_counts() {
    for p in [2, 5] {
        assert_eq!(all_indecomposables(&alg(p, samples::a3(true)), 10).unwrap().len(), 5);
        assert_eq!(all_indecomposables(&alg(p, samples::a3(false)), 10).unwrap().len(), 6);
        assert_eq!(all_indecomposables(&alg(p, samples::semisimple(3)), 10).unwrap().len(), 3);
    }
}

#[test]
fn knitting_matches_brute_force() {
    for p in [2, 3] {
        for q in [samples::a2(), samples::dual_numbers(), samples::a3(true), samples::a3(false)] {
            let a = alg(p, q);
            let ind = all_indecomposables(&a, 10).unwrap();
            let maxd = ind.modules.iter().map(|m| m.dim()).max().unwrap();
            let bf = brute_force_indecomposables(&a, maxd, 1 << 20).unwrap();
            assert_eq!(bf.len(), ind.len());
            for m in &bf {
                assert!(ind.find(m).is_some());
            }
        }
    }
}

#[test]
fn homological_dimensions() {
    let s = alg(3, samples::semisimple(2));
    let ind = all_indecomposables(&s, 5).unwrap();
    let h = homological_dims(&ind, 12);
    assert_eq!(h.global_dimension, Bounded::Exactly(0));
    assert_eq!(h.dominant_dimension, Bounded::AtLeast(12));
    let d = alg(3, samples::dual_numbers());
    let ind = all_indecomposables(&d, 5).unwrap();
    let h = homological_dims(&ind, 12);
    assert_eq!(h.global_dimension, Bounded::AtLeast(12));
    assert_eq!(h.dominant_dimension, Bounded::AtLeast(12));
    let a = alg(3, samples::a2());
    let ind = all_indecomposables(&a, 5).unwrap();
    assert_eq!(homological_dims(&ind, 12).global_dimension, Bounded::Exactly(1));
}
