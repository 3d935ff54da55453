mod common;

use auslander_lab::algebra::samples;
use auslander_lab::auslander::{build_subcategories, in_add, Caps, Setting};
use auslander_lab::exactstruct::enumerate_exact_structures;
use auslander_lab::linalg::{FieldPrime, Matrix};
use auslander_lab::repmod::{
    all_indecomposables, decompose, ext_dim, hom_basis, hom_dim, is_isomorphic, map_parts, DirectSum, ExtSpace, Module,
    SyzygyData,
};
use common::{alg, random_map, test_quivers};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn matrix(p: u32) -> impl Strategy<Value = Matrix> {
    (1usize..8, 1usize..8).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(0..p, r * c)
            .prop_map(move |d| Matrix::from_vec(FieldPrime::new(p as u64).unwrap(), r, c, d))
    })
}

fn linalg_invariants(m: &Matrix, seed: u64) -> Result<(), TestCaseError> {
    let (r, _) = m.rref();
    prop_assert_eq!(&r.rref().0, &r);
    prop_assert_eq!(m.rank() + m.kernel_basis().cols(), m.cols());
    prop_assert!(m.mul(&m.kernel_basis()).is_zero());
    // b in the column space by construction
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x0: Vec<u32> = (0..m.cols()).map(|_| rand::Rng::gen_range(&mut rng, 0..m.p())).collect();
    let b = Matrix::column_vector(m.field(), &m.mul_vec(&x0));
    let x = m.solve_right(&b).unwrap();
    prop_assert_eq!(m.mul(&x), b);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn linalg_over_gf2(m in matrix(2), seed in any::<u64>()) {
        linalg_invariants(&m, seed)?;
    }

    #[test]
    fn linalg_over_gf5(m in matrix(5), seed in any::<u64>()) {
        linalg_invariants(&m, seed)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn decomposition_ignores_summand_order(alg_i in 0usize..4, p_i in 0usize..2, picks in proptest::collection::vec(0usize..64, 1..4), seed in any::<u64>()) {
        let (_, q) = test_quivers().swap_remove(alg_i);
        let a = alg([2, 5][p_i], q);
        let ind = all_indecomposables(&a, 12).unwrap();
        let mut parts: Vec<Module> = picks.iter().map(|&k| ind.modules[k % ind.len()].clone()).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let first = DirectSum::new(&a, &parts);
        parts.shuffle(&mut rng);
        let second = DirectSum::new(&a, &parts);
        let mut ids1: Vec<usize> = decompose(&first.module).iter().map(|s| ind.find(&s.module).unwrap()).collect();
        let mut ids2: Vec<usize> = decompose(&second.module).iter().map(|s| ind.find(&s.module).unwrap()).collect();
        let mut want: Vec<usize> = picks.iter().map(|&k| k % ind.len()).collect();
        ids1.sort();
        ids2.sort();
        want.sort();
        prop_assert_eq!(&ids1, &want);
        prop_assert_eq!(&ids2, &want);
        prop_assert!(is_isomorphic(&first.module, &second.module).is_some());
    }

    #[test]
    fn map_parts_factor_and_count(alg_i in 0usize..4, a in 0usize..64, b in 0usize..64, seed in any::<u64>()) {
        let (_, q) = test_quivers().swap_remove(alg_i);
        let al = alg(5, q);
        let ind = all_indecomposables(&al, 12).unwrap();
        let x = DirectSum::new(&al, &[ind.modules[a % ind.len()].clone(), ind.modules[b % ind.len()].clone()]).module;
        let y = &ind.modules[(a + b) % ind.len()];
        let basis = hom_basis(&x, y).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_map(&basis, &x, y, &mut rng);
        let mp = map_parts(&f);
        prop_assert!(mp.mono_part.compose(&mp.epi_part).sub(&f).is_zero());
        prop_assert_eq!(x.dim(), mp.kernel.dim() + mp.image.dim());
        prop_assert_eq!(ext_dim(0, &x, y), hom_dim(&x, y));
    }

    #[test]
    fn localization_is_exact_on_smodad(alg_i in 0usize..4, e_i in 0usize..8, g in 0usize..64, h in 0usize..64, c in proptest::collection::vec(0u32..5, 4)) {
        let (_, q) = test_quivers().swap_remove(alg_i);
        let (_, s) = Setting::mod_lambda(&alg(5, q), Caps::default()).unwrap();
        let es = enumerate_exact_structures(&s.table).unwrap();
        let e = &es[e_i % es.len()];
        let subs = build_subcategories(&s, e).unwrap();
        let gk = subs.smodad.ids[g % subs.smodad.len()];
        let hk = subs.smodad.ids[h % subs.smodad.len()];
        let (gm, hm) = (&s.gind.modules[gk], &s.gind.modules[hk]);
        let ext = ExtSpace::new(&SyzygyData::new(gm), hm).unwrap();
        prop_assume!(ext.dim() > 0);
        let coords: Vec<u32> = (0..ext.dim()).map(|i| c[i % c.len()]).collect();
        prop_assume!(coords.iter().any(|&x| x != 0));
        let seq = ext.realize(&coords);
        prop_assume!(in_add(&s.gind, &subs.smodad, seq.middle()));
        let fa = s.ea.functor(seq.left()).unwrap();
        let fb = s.ea.functor(seq.middle()).unwrap();
        let fc = s.ea.functor(seq.right()).unwrap();
        let (la, lb, li) = s.ea.localize_map(&seq.i, &fa, &fb);
        let (_, lc, lp) = s.ea.localize_map(&seq.p, &fb, &fc);
        prop_assert!(li.is_injective());
        prop_assert!(lp.is_surjective());
        prop_assert!(lp.compose(&li).is_zero());
        prop_assert_eq!(la.module.dim() + lc.module.dim(), lb.module.dim());
    }
}

#[test]
fn opposite_is_an_involution() {
    for (name, q) in test_quivers() {
        let a = alg(3, q);
        let oo = a.op().opposite().unwrap();
        assert_eq!(oo.to_table(), a.to_table(), "{name}");
    }
    let a = alg(2, samples::semisimple(3));
    assert_eq!(a.op().opposite().unwrap().to_table(), a.to_table());
}
