mod common;

use auslander_lab::algebra::{samples, QuiverPresentation};
use auslander_lab::auslander::{
    auslander_algebra_dims, build_subcategories, eff_membership, grade, in_add, injectives_transfer, is_resolving,
    reconstruct_structure, resolving_closure, restricted_description, smodad_domdim, smodad_membership, star_dual,
    evaluation_map, torsion_decomposition, transpose_functor, Caps, Carrier, Setting, SubTag, SubcategorySpec,
};
use auslander_lab::exactstruct::{classify_morphism, enumerate_exact_structures, ExactStructure};
use auslander_lab::repmod::{
    ext_dim, hom_basis, hom_dim, is_isomorphic, is_projective, projective_dimension, DirectSum, Indecomposables, Module,
    ModuleMap,
};
use auslander_lab::repmod::presentation::transpose_with;
use auslander_lab::Error;
use common::{alg, random_map, test_quivers};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn setting(p: u64, q: QuiverPresentation) -> (Indecomposables, Setting) {
    Setting::mod_lambda(&alg(p, q), Caps::default()).unwrap()
}

/// The epimorphism from the non-simple projective onto the simple injective of kA₂.
fn a2_epi(lam: &Indecomposables) -> (Module, Module, ModuleMap) {
    let pb = (0..lam.len()).find(|&k| lam.projective[k] && !lam.simple[k]).unwrap();
    let sb = (0..lam.len()).find(|&k| lam.simple[k] && !lam.projective[k]).unwrap();
    let (pm, sm) = (lam.modules[pb].clone(), lam.modules[sb].clone());
    let f = hom_basis(&pm, &sm).unwrap().remove(0);
    assert!(f.is_surjective());
    (pm, sm, f)
}

/// `coker yoneda(f)` for a map between summands of `M`.
fn coker_functor(s: &Setting, x: &Module, y: &Module, f: &ModuleMap) -> Module {
    let (xi, yi) = (s.ea.spec.find(x).unwrap(), s.ea.spec.find(y).unwrap());
    let yf = s.ea.yoneda_proj(f, &[xi], &[yi]).to_module_map(&s.ea.representable(&[xi]), &s.ea.representable(&[yi]));
    auslander_lab::repmod::module::cokernel(&yf).module
}

#[test]
fn split_structure_gives_projectives() {
    for p in [2, 5] {
        for (name, q) in test_quivers() {
            let (_, s) = setting(p, q);
            let subs = build_subcategories(&s, &ExactStructure::split(&s.table)).unwrap();
            assert!(subs.eff.is_empty(), "{name}");
            assert_eq!(subs.smodad.ids, s.projective_ids(Carrier::Gamma).ids, "{name}");
        }
    }
}

#[test]
fn abelian_structure_gives_all_of_mod_gamma() {
    for (name, q) in test_quivers() {
        let (_, s) = setting(5, q);
        let subs = build_subcategories(&s, &ExactStructure::maximal(&s.table)).unwrap();
        assert_eq!(subs.smodad.len(), s.gind.len(), "{name}");
    }
    let (_, s) = setting(2, samples::a2());
    let subs = build_subcategories(&s, &ExactStructure::maximal(&s.table)).unwrap();
    assert_eq!(subs.smodad.len(), 5);
    assert_eq!(subs.eff.len(), 1);
}

#[test]
fn membership_examples_on_a2() {
    let (lam, s) = setting(5, samples::a2());
    let split = ExactStructure::split(&s.table);
    let ab = ExactStructure::maximal(&s.table);
    for v in 0..s.ea.n() {
        let fo = &s.functors[s.representable_id(v)];
        assert!(!eff_membership(&s, fo, &ab).unwrap());
        assert!(smodad_membership(&s, fo, &split).unwrap());
    }
    let (pm, sm, f) = a2_epi(&lam);
    let fo = s.ea.functor(&coker_functor(&s, &pm, &sm, &f)).unwrap();
    assert!(eff_membership(&s, &fo, &ab).unwrap());
    assert!(!eff_membership(&s, &fo, &split).unwrap());
    assert!(!smodad_membership(&s, &fo, &split).unwrap());
    for fo in &s.functors {
        assert!(smodad_membership(&s, fo, &ab).unwrap());
    }
}

#[test]
fn strict_intermediate_structure_has_non_admissible_presentations() {
    let (_, s) = setting(2, samples::a3(false));
    let es = enumerate_exact_structures(&s.table).unwrap();
    let mid = es.iter().find(|e| e.dims().iter().flatten().sum::<usize>() == 1).unwrap();
    let outside: Vec<usize> =
        (0..s.gind.len()).filter(|&k| !smodad_membership(&s, &s.functors[k], mid).unwrap()).collect();
    assert!(!outside.is_empty());
    for &k in &outside {
        assert!(!classify_morphism(&s.table, &s.functors[k].f, mid).unwrap().admissible);
    }
}

#[test]
fn membership_rejects_other_algebras() {
    let (_, s) = setting(2, samples::a2());
    let (_, t) = setting(2, samples::dual_numbers());
    let e = ExactStructure::maximal(&s.table);
    assert!(matches!(eff_membership(&s, &t.functors[0], &e), Err(Error::AlgebraMismatch)));
    assert!(matches!(smodad_membership(&s, &t.functors[0], &e), Err(Error::AlgebraMismatch)));
}

#[test]
fn torsion_decomposition_examples() {
    let (lam, s) = setting(5, samples::a2());
    let ab = ExactStructure::maximal(&s.table);
    let subs = build_subcategories(&s, &ab).unwrap();
    let k = subs.eff.ids[0];
    let tp = torsion_decomposition(&s, &s.functors[k], &ab).unwrap();
    assert_eq!(tp.torsion_ids, vec![k]);
    assert!(tp.free_ids.is_empty());
    let r = s.representable_id(0);
    let tp = torsion_decomposition(&s, &s.functors[r], &ab).unwrap();
    assert!(tp.torsion_ids.is_empty());
    assert_eq!(tp.free_ids, vec![r]);

    for k in 0..s.gind.len() {
        assert!(torsion_decomposition(&s, &s.functors[k], &ab).unwrap().seq.is_exact());
    }
    // mixed: an effaceable summand next to a representable one
    let (pm, sm, f) = a2_epi(&lam);
    let sum = DirectSum::new(s.gamma(), &[coker_functor(&s, &pm, &sm, &f), s.projectives(Carrier::Gamma)[0].clone()]);
    let fo = s.ea.functor(&sum.module).unwrap();
    let tp = torsion_decomposition(&s, &fo, &ab).unwrap();
    assert!(tp.seq.is_exact());
    assert_eq!(tp.torsion_ids, subs.eff.ids);
    assert_eq!(tp.free_ids, vec![s.representable_id(0)]);

    let split = ExactStructure::split(&s.table);
    let outside = (0..s.gind.len()).find(|&k| !s.gind.projective[k]).unwrap();
    assert!(matches!(torsion_decomposition(&s, &s.functors[outside], &split), Err(Error::Precondition(_))));
}

#[test]
fn star_and_grade_examples() {
    let (_, s) = setting(5, samples::a2());
    let ab = ExactStructure::maximal(&s.table);
    let subs = build_subcategories(&s, &ab).unwrap();
    let op = s.gamma().op();
    let reps = s.projectives(Carrier::Gamma);
    for &k in &subs.eff.ids {
        let m = &s.gind.modules[k];
        assert!(star_dual(m, &op).unwrap().module.is_zero());
        assert_eq!(grade(m, reps, 6), auslander_lab::repmod::Bounded::Exactly(2));
        assert_eq!(ext_dim(0, m, &reps[0]) + ext_dim(1, m, &reps[0]), 0);
    }
    for p in reps {
        assert_eq!(grade(p, reps, 6), auslander_lab::repmod::Bounded::Exactly(0));
        assert!(transpose_functor(p).is_zero());
        assert!(evaluation_map(p).unwrap().ev.is_iso());
    }
    let zero = Module::zero(s.gamma());
    assert_eq!(grade(&zero, reps, 4), auslander_lab::repmod::Bounded::AtLeast(5));
    assert!(star_dual(&zero, s.gamma()).is_err());
}

#[test]
fn double_transpose_is_stable() {
    for (name, q) in test_quivers() {
        let (_, s) = setting(5, q);
        for (k, m) in s.gind.modules.iter().enumerate() {
            let tt = transpose_with(&transpose_functor(m), s.gamma());
            if s.gind.projective[k] {
                assert!(tt.is_zero(), "{name} {k}");
            } else {
                assert!(is_isomorphic(&tt, m).is_some(), "{name} {k}");
            }
        }
    }
}

#[test]
fn resolving_examples() {
    let (_, s) = setting(2, samples::a2());
    let all = s.all(Carrier::Gamma);
    let proj = s.projective_ids(Carrier::Gamma);
    assert!(is_resolving(&s.gind, &proj, &all).passed());
    let subs = build_subcategories(&s, &ExactStructure::maximal(&s.table)).unwrap();
    let r = is_resolving(&s.gind, &subs.eff, &all);
    assert!(!r.passed());
    let failing: Vec<&str> = r.failures().iter().map(|i| i.name.as_str()).collect();
    assert!(failing.contains(&"generating"), "{r}");

    let empty = SubcategorySpec::new(Carrier::Gamma, vec![], SubTag::Custom);
    let cl = resolving_closure(&s.gind, &empty, &all).unwrap();
    assert_eq!(cl.ids, proj.ids);
    let cl = resolving_closure(&s.gind, &subs.eff, &all).unwrap();
    let again = resolving_closure(&s.gind, &cl, &all).unwrap();
    assert!(cl.same_ids(&again));
    assert!(cl.same_ids(&subs.smodad));
}

#[test]
fn reconstruction_examples() {
    let (_, s) = setting(5, samples::a2());
    let proj = s.projective_ids(Carrier::Gamma);
    assert!(reconstruct_structure(&s, &proj).unwrap().same_as(&ExactStructure::split(&s.table)));
    let ab = ExactStructure::maximal(&s.table);
    let subs = build_subcategories(&s, &ab).unwrap();
    assert!(reconstruct_structure(&s, &subs.smodad).unwrap().same_as(&ab));
}

#[test]
fn reconstruction_rejects_a_corrupted_subcategory() {
    let (_, s) = setting(2, samples::a3(false));
    let ab = ExactStructure::maximal(&s.table);
    let subs = build_subcategories(&s, &ab).unwrap();
    let detected = subs.torsion_free.ids.iter().copied().filter(|&k| !s.gind.projective[k]).all(|cut| {
        let ids = subs.smodad.ids.iter().copied().filter(|&k| k != cut).collect();
        let x = SubcategorySpec::new(Carrier::Gamma, ids, SubTag::Custom);
        reconstruct_structure(&s, &x).map_or(true, |e| !e.same_as(&ab))
    });
    assert!(detected);
}

#[test]
fn auslander_algebra_of_dual_numbers() {
    let (_, s) = setting(5, samples::dual_numbers());
    let (dd, gd) = auslander_algebra_dims(&s);
    assert!(dd.at_least(2));
    assert_eq!(gd, auslander_lab::repmod::Bounded::Exactly(2));
    // oracle: resolve every simple Γ-module directly
    let simples: Vec<&Module> =
        (0..s.gind.len()).filter(|&k| s.gind.simple[k]).map(|k| &s.gind.modules[k]).collect();
    let longest = simples.iter().map(|m| projective_dimension(m, 6).unwrap()).max().unwrap();
    assert_eq!(longest, 2);
    let subs = build_subcategories(&s, &ExactStructure::maximal(&s.table)).unwrap();
    assert!(smodad_domdim(&s, &subs, 6).at_least(2));
}

#[test]
fn split_smodad_has_infinite_domdim() {
    let (_, s) = setting(2, samples::a3(true));
    let subs = build_subcategories(&s, &ExactStructure::split(&s.table)).unwrap();
    assert_eq!(smodad_domdim(&s, &subs, 5), auslander_lab::repmod::Bounded::AtLeast(5));
}

#[test]
fn injectives_transfer_on_a2() {
    let (lam, s) = setting(2, samples::a2());
    let t = injectives_transfer(&s, &lam);
    assert_eq!(t.len(), 2);
    assert!(t.iter().all(|&(_, ok)| ok));
}

#[test]
fn restricted_description_cases() {
    let (lam, _) = setting(5, samples::dual_numbers());
    let x = SubcategorySpec::new(Carrier::Lambda, (0..lam.len()).collect(), SubTag::Custom);
    assert!(restricted_description(&lam, &x, Caps::default()).unwrap().passed());

    let (lam, _) = setting(2, samples::a3(true));
    let pd1: Vec<usize> =
        (0..lam.len()).filter(|&k| projective_dimension(&lam.modules[k], 4).is_some_and(|d| d <= 1)).collect();
    assert!(pd1.len() < lam.len());
    let x = SubcategorySpec::new(Carrier::Lambda, pd1, SubTag::Custom);
    let r = restricted_description(&lam, &x, Caps::default()).unwrap();
    assert!(r.passed(), "{r}");

    let simples = SubcategorySpec::new(Carrier::Lambda, (0..lam.len()).filter(|&k| lam.simple[k]).collect(), SubTag::Custom);
    assert!(!restricted_description(&lam, &simples, Caps::default()).unwrap().passed());
}

#[test]
fn ext_in_smodad_agrees_with_subcategory_closure() {
    // classes between smod_ad members split into add(smod_ad): the inherited structure is the restricted one
    for (name, q) in test_quivers() {
        let (_, s) = setting(5, q);
        for e in enumerate_exact_structures(&s.table).unwrap() {
            let subs = build_subcategories(&s, &e).unwrap();
            let r = is_resolving(&s.gind, &subs.smodad, &s.all(Carrier::Gamma));
            let ext = r.items.iter().find(|i| i.name == "closed under extensions").unwrap();
            assert!(ext.pass, "{name}: {}", ext.detail);
        }
    }
}

fn padded(s: &Setting, k: usize, j: usize) -> ModuleMap {
    let fo = &s.functors[k];
    let z = s.ea.summand(j).clone();
    let src = DirectSum::new(&s.ea.spec.alg, &[fo.x.module.clone(), z.clone()]);
    let tgt = DirectSum::new(&s.ea.spec.alg, &[fo.y.module.clone(), z.clone()]);
    src.assemble(
        &tgt,
        &[
            vec![fo.f.clone(), ModuleMap::zero(&z, &fo.y.module)],
            vec![ModuleMap::zero(&fo.x.module, &z), ModuleMap::identity(&z)],
        ],
    )
}

/// A random idempotent `g π g⁻¹` on `a ⊕ b`.
fn random_idempotent(s: &Setting, a: usize, b: usize, seed: u64) -> Option<(DirectSum, ModuleMap)> {
    let sum = DirectSum::new(s.gamma(), &[s.gind.modules[a].clone(), s.gind.modules[b].clone()]);
    let basis = hom_basis(&sum.module, &sum.module).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = (0..20).map(|_| random_map(&basis, &sum.module, &sum.module, &mut rng)).find(|g| g.is_iso())?;
    let pi = sum.incl(0).compose(&sum.proj(0));
    Some((sum.clone(), g.compose(&pi).compose(&g.inverse().unwrap())))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn padding_presentations_keeps_membership(alg_i in 0usize..4, p_i in 0usize..2, k in 0usize..64, j in 0usize..8, e_i in 0usize..8) {
        let (_, q) = test_quivers().swap_remove(alg_i);
        let (_, s) = setting([2, 5][p_i], q);
        let es = enumerate_exact_structures(&s.table).unwrap();
        let e = &es[e_i % es.len()];
        let k = k % s.gind.len();
        let j = j % s.ea.n();
        let plain = classify_morphism(&s.table, &s.functors[k].f, e).unwrap();
        let pad = classify_morphism(&s.table, &padded(&s, k, j), e).unwrap();
        prop_assert_eq!(plain.admissible, pad.admissible);
        prop_assert_eq!(plain.deflation, pad.deflation);
        prop_assert_eq!(plain.inflation, pad.inflation);
    }

    #[test]
    fn idempotents_of_smodad_objects_split_inside(alg_i in 0usize..4, a in 0usize..64, b in 0usize..64, e_i in 0usize..8, seed in 0u64..1000) {
        let (_, q) = test_quivers().swap_remove(alg_i);
        let (_, s) = setting(5, q);
        let es = enumerate_exact_structures(&s.table).unwrap();
        let e = &es[e_i % es.len()];
        let subs = build_subcategories(&s, e).unwrap();
        let a = subs.smodad.ids[a % subs.smodad.len()];
        let b = subs.smodad.ids[b % subs.smodad.len()];
        if let Some((_, idem)) = random_idempotent(&s, a, b, seed) {
            prop_assert!(idem.compose(&idem).sub(&idem).is_zero());
            let (im, _, _) = auslander_lab::repmod::module::image(&idem);
            prop_assert!(in_add(&s.gind, &subs.smodad, &im));
            let (ker, _) = auslander_lab::repmod::module::kernel(&idem);
            prop_assert!(in_add(&s.gind, &subs.smodad, &ker));
        }
    }

    #[test]
    fn representables_have_grade_zero(alg_i in 0usize..4, v in 0usize..8) {
        let (_, q) = test_quivers().swap_remove(alg_i);
        let (_, s) = setting(2, q);
        let reps = s.projectives(Carrier::Gamma);
        let p = &reps[v % reps.len()];
        prop_assert!(is_projective(p));
        prop_assert_eq!(grade(p, reps, 4), auslander_lab::repmod::Bounded::Exactly(0));
        prop_assert!(hom_dim(p, p) > 0);
    }
}
