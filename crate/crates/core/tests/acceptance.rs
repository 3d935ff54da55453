mod common;

use auslander_lab::auslander::{
    ab_sequence, auslander_algebra_dims, build_subcategories, check_auslander_axioms, injectives_transfer, p2_ambient,
    reconstruct_structure, resolving_closure, restricted_description, is_resolving, smodad_domdim, transpose_functor,
    transpose_sub, verify_ab_sequences, verify_formula_and_localization, verify_injective_projective_correspondence,
    verify_torsion_identities, Caps, Carrier, Setting, SubTag, SubcategorySpec, Subcategories,
};
use auslander_lab::exactstruct::{brute_force_structures, enumerate_exact_structures, ExactStructure};
use auslander_lab::linalg::{FieldPrime, Matrix};
use auslander_lab::repmod::presentation::{injective_envelope, projective_resolution};
use auslander_lab::repmod::{
    all_indecomposables, brute_force_indecomposables, decompose, ext_dim, hom_dim, is_projective, map_parts, Bounded,
    DirectSum, Indecomposables, Module,
};
use common::{alg, test_quivers};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// Everything is exact arithmetic: counts and id-sets are compared for equality.
const FIELDS: [u64; 2] = [2, 5];
const MIN_SAMPLED_MORPHISMS: usize = 50;
const LINALG_MATRICES: usize = 1000;
const SHUFFLES_PER_ALGEBRA: usize = 20;
const BRUTE_FORCE_DIM: usize = 3;
const ORACLE_GUARD: u64 = 1 << 22;
const CUTOFF: usize = 6;
const SEED: u64 = 2024;

struct Case {
    name: String,
    lam: Indecomposables,
    s: Setting,
    list: Vec<ExactStructure>,
    subs: Vec<Subcategories>,
}

fn cases() -> Vec<Case> {
    let mut out = Vec::new();
    for p in FIELDS {
        for (name, q) in test_quivers() {
            let a = alg(p, q);
            let caps = Caps { seed: SEED, ..Caps::default() };
            let (lam, s) = Setting::mod_lambda(&a, caps).unwrap();
            let list = enumerate_exact_structures(&s.table).unwrap();
            let subs = list.iter().map(|e| build_subcategories(&s, e).unwrap()).collect();
            out.push(Case { name: format!("{name} / GF({p})"), lam, s, list, subs });
        }
    }
    out
}

struct Tally {
    failures: Vec<String>,
    checked: usize,
}

impl Tally {
    fn new() -> Self {
        Tally { failures: Vec::new(), checked: 0 }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn report(self, n: usize, title: &str, all: &mut Vec<usize>) {
        if self.failures.is_empty() {
            println!("PASS {n:>2} {title} ({} checks)", self.checked);
        } else {
            println!("FAIL {n:>2} {title} ({} of {} checks failed)", self.failures.len(), self.checked);
            for f in self.failures.iter().take(10) {
                println!("        {f}");
            }
            all.push(n);
        }
    }
}

fn failures(r: &auslander_lab::report::Report) -> String {
    r.failures().iter().map(|i| format!("{}: {}", i.name, i.detail)).collect::<Vec<_>>().join("; ")
}

fn expected_count(name: &str) -> Option<usize> {
    match name.split(" / ").next().unwrap() {
        "kA2" | "k[x]/x^2" => Some(2),
        "kA3" => Some(8),
        _ => None,
    }
}

fn criterion_counts(cs: &[Case]) -> Tally {
    let mut t = Tally::new();
    for c in cs {
        if let Some(n) = expected_count(&c.name) {
            t.check(c.list.len() == n, || format!("{}: {} structures, expected {n}", c.name, c.list.len()));
        }
        let oracle = brute_force_structures(&c.s.table, 2, ORACLE_GUARD).unwrap();
        let same = oracle.len() == c.list.len()
            && oracle.iter().all(|o| c.list.iter().any(|e| e.same_as(o)))
            && c.list.iter().all(|e| oracle.iter().any(|o| o.same_as(e)));
        t.check(same, || format!("{}: enumeration {} vs brute force {}", c.name, c.list.len(), oracle.len()));
    }
    t
}

fn criterion_axioms(cs: &[Case]) -> Tally {
    let mut t = Tally::new();
    for c in cs {
        for (i, (e, subs)) in c.list.iter().zip(&c.subs).enumerate() {
            let r = check_auslander_axioms(&c.s, e, subs).unwrap();
            t.check(r.passed(), || format!("{} E{i}: {}", c.name, failures(&r)));
            // independent: minimal resolutions over Γ of every smod_ad object have length ≤ 2
            for &k in &subs.smodad.ids {
                let res = projective_resolution(&c.s.gind.modules[k], CUTOFF);
                t.check(res.length().is_some_and(|l| l <= 2), || format!("{} E{i}: F{k} resolution {:?}", c.name, res.length()));
            }
        }
    }
    t
}

fn sampled_morphisms(detail: &str) -> usize {
    detail.split(' ').next().and_then(|w| w.parse().ok()).unwrap_or(0)
}

fn criterion_formula(cs: &[Case]) -> Tally {
    let mut t = Tally::new();
    for c in cs {
        for (i, (e, subs)) in c.list.iter().zip(&c.subs).enumerate() {
            let r = verify_formula_and_localization(&c.s, e, subs).unwrap();
            t.check(r.passed(), || format!("{} E{i}: {}", c.name, failures(&r)));
            let item = r.items.iter().find(|it| it.name.contains("admissible")).unwrap();
            let n = sampled_morphisms(&item.detail);
            t.check(n >= MIN_SAMPLED_MORPHISMS, || format!("{} E{i}: only {n} morphisms sampled", c.name));
        }
    }
    t
}

fn criterion_torsion(cs: &[Case]) -> Tally {
    let mut t = Tally::new();
    for c in cs {
        let reps = c.s.projectives(Carrier::Gamma);
        for (i, subs) in c.subs.iter().enumerate() {
            let r = verify_torsion_identities(&c.s, subs);
            t.check(r.passed(), || format!("{} E{i}: {}", c.name, failures(&r)));
            t.check(subs.eff.same_ids(&subs.perp_q), || format!("{} E{i}: eff ≠ ⊥Q", c.name));
            t.check(subs.torsion_free.same_ids(&subs.cogen_q), || format!("{} E{i}: torsion-free ≠ cogen Q", c.name));
            for &k in &subs.eff.ids {
                for (v, pv) in reps.iter().enumerate() {
                    let d = ext_dim(1, &c.s.gind.modules[k], pv);
                    t.check(d == 0, || format!("{} E{i}: Ext¹(F{k}, P{v}) = {d}", c.name));
                }
            }
        }
    }
    t
}

// Ext^i(X, Γ) as a vector over the Γ-projectives, via syzygy dimension counting.
fn ext_against(m: &Module, projectives: &[Module], i: usize) -> Vec<usize> {
    projectives.iter().map(|p| ext_dim(i, m, p)).collect()
}

fn criterion_ab(cs: &[Case]) -> Tally {
    let mut t = Tally::new();
    for c in cs {
        let r = verify_ab_sequences(&c.s).unwrap();
        t.check(r.passed(), || format!("{}: {}", c.name, failures(&r)));
        let op_proj = c.s.projectives(Carrier::GammaOp);
        for (k, m) in c.s.gind.modules.iter().enumerate() {
            let ab = ab_sequence(m).unwrap();
            t.check(ab.exact(), || format!("{} F{k}: not exact", c.name));
            if is_projective(m) {
                t.check(ab.ev_iso, || format!("{} F{k}: ev not iso on a projective", c.name));
                continue;
            }
            let tr = transpose_functor(m);
            let e1: usize = ext_against(&tr, op_proj, 1).iter().sum();
            let e2: usize = ext_against(&tr, op_proj, 2).iter().sum();
            let (k1, k2): (usize, usize) = (ab.ext1.iter().sum(), ab.ext2.iter().sum());
            t.check(e1 == k1 && e2 == k2, || format!("{} F{k}: Ext dims ({e1}, {e2}) vs sequence ({k1}, {k2})", c.name));
        }
    }
    t
}

// grade 1 ⟺ Hom(X, Γ) = 0 and Ext¹(X, Γ) ≠ 0
fn is_grade_one(m: &Module, projectives: &[Module]) -> bool {
    let hom: usize = projectives.iter().map(|p| hom_dim(m, p)).sum();
    let e1: usize = ext_against(m, projectives, 1).iter().sum();
    !m.is_zero() && hom == 0 && e1 > 0
}

fn criterion_grade(cs: &[Case]) -> Tally {
    let mut t = Tally::new();
    for c in cs {
        let gp = c.s.projectives(Carrier::Gamma);
        let op = c.s.projectives(Carrier::GammaOp);
        for (i, subs) in c.subs.iter().enumerate() {
            for &k in &subs.smodad.ids {
                t.check(!is_grade_one(&c.s.gind.modules[k], gp), || format!("{} E{i}: F{k} has grade 1", c.name));
            }
            let tr = transpose_sub(&c.s, &subs.smodad).unwrap();
            for &k in &tr.ids {
                t.check(!is_grade_one(&c.s.op_ind.modules[k], op), || format!("{} E{i}: Tr member {k} has grade 1", c.name));
            }
        }
    }
    t
}

fn criterion_round_trip(cs: &[Case]) -> Tally {
    let mut t = Tally::new();
    for c in cs {
        let amb = p2_ambient(&c.s.gind, Carrier::Gamma, CUTOFF);
        let amb_op = p2_ambient(&c.s.op_ind, Carrier::GammaOp, CUTOFF);
        for (i, (e, subs)) in c.list.iter().zip(&c.subs).enumerate() {
            let back = reconstruct_structure(&c.s, &subs.smodad).unwrap();
            let same = back.same_as(e) && back.dims() == e.dims();
            t.check(same, || format!("{} E{i}: reconstructed {:?} vs {:?}", c.name, back.dims(), e.dims()));
            let r = is_resolving(&c.s.gind, &subs.smodad, &amb);
            t.check(r.passed(), || format!("{} E{i} smod_ad: {}", c.name, failures(&r)));
            let tr = transpose_sub(&c.s, &subs.smodad).unwrap();
            let r = is_resolving(&c.s.op_ind, &tr, &amb_op);
            t.check(r.passed(), || format!("{} E{i} Tr(smod_ad): {}", c.name, failures(&r)));
        }
    }
    t
}

fn criterion_closure(cs: &[Case]) -> Tally {
    let mut t = Tally::new();
    for c in cs {
        let amb = p2_ambient(&c.s.gind, Carrier::Gamma, CUTOFF);
        for (i, subs) in c.subs.iter().enumerate() {
            let cl = resolving_closure(&c.s.gind, &subs.eff, &amb).unwrap();
            t.check(cl.same_ids(&subs.smodad), || format!("{} E{i}: closure {:?} vs {:?}", c.name, cl.ids, subs.smodad.ids));
        }
    }
    t
}

// Direct computation: the first two terms of the minimal injective coresolution of each Γ-projective.
fn domdim_at_least_two(projectives: &[Module]) -> bool {
    projectives.iter().all(|p| {
        let (i0, iota) = injective_envelope(p).unwrap();
        if !is_projective(&i0) {
            return false;
        }
        let c = map_parts(&iota).cokernel.module;
        c.is_zero() || is_projective(&injective_envelope(&c).unwrap().0)
    })
}

fn gldim_by_simples(g: &Indecomposables) -> Option<usize> {
    let mut longest = 0;
    for k in (0..g.len()).filter(|&k| g.simple[k]) {
        longest = longest.max(projective_resolution(&g.modules[k], CUTOFF).length()?);
    }
    Some(longest)
}

fn criterion_injectives(cs: &[Case]) -> Tally {
    let mut t = Tally::new();
    for c in cs {
        let e = ExactStructure::maximal(&c.s.table);
        let subs = build_subcategories(&c.s, &e).unwrap();
        t.check(subs.smodad.len() == c.s.gind.len(), || format!("{}: smod_ad is not all of mod Γ", c.name));
        let (dd, gd) = auslander_algebra_dims(&c.s);
        let sd = smodad_domdim(&c.s, &subs, CUTOFF);
        t.check(sd.at_least(2) && dd.at_least(2), || format!("{}: domdim {sd} / {dd}", c.name));
        t.check(matches!(gd, Bounded::Exactly(g) if g <= 2), || format!("{}: gldim {gd}", c.name));
        let r = verify_injective_projective_correspondence(&c.s, &e, &subs).unwrap();
        t.check(r.passed(), || format!("{}: {}", c.name, failures(&r)));
        for (k, ok) in injectives_transfer(&c.s, &c.lam) {
            t.check(ok, || format!("{}: yoneda(M{k}) not injective", c.name));
        }
        // independent: yoneda of each injective indecomposable is injective over Γ
        for k in (0..c.lam.len()).filter(|&k| c.lam.injective[k]) {
            let y = &c.s.projectives(Carrier::Gamma)[k];
            let (env, _) = injective_envelope(y).unwrap();
            t.check(env.dim() == y.dim(), || format!("{}: yoneda(M{k}) has a proper envelope", c.name));
        }
        let direct_dd = domdim_at_least_two(c.s.projectives(Carrier::Gamma));
        let direct_gd = gldim_by_simples(&c.s.gind);
        t.check(direct_dd, || format!("{}: direct domdim < 2", c.name));
        t.check(direct_gd.is_some_and(|g| g <= 2), || format!("{}: direct gldim {direct_gd:?}", c.name));
        if c.name.starts_with("k[x]/x^2") {
            t.check(gd == Bounded::Exactly(2) && direct_gd == Some(2), || format!("{}: gldim {gd}, direct {direct_gd:?}", c.name));
        }
    }
    t
}

fn criterion_restricted(cs: &[Case]) -> Tally {
    let mut t = Tally::new();
    for c in cs {
        let ids: Vec<usize> = match c.name.split(" / ").next().unwrap() {
            "k[x]/x^2" => (0..c.lam.len()).collect(),
            "kA3/rel" => (0..c.lam.len())
                .filter(|&k| projective_resolution(&c.lam.modules[k], CUTOFF).length().is_some_and(|l| l <= 1))
                .collect(),
            _ => continue,
        };
        let x = SubcategorySpec::new(Carrier::Lambda, ids, SubTag::Custom);
        let r = restricted_description(&c.lam, &x, Caps::default()).unwrap();
        t.check(r.passed(), || format!("{}: {}", c.name, failures(&r)));
    }
    t
}

fn random_matrix(f: FieldPrime, rng: &mut ChaCha8Rng) -> Matrix {
    let (r, c) = (rng.gen_range(1..9), rng.gen_range(1..9));
    let data = (0..r * c).map(|_| rng.gen_range(0..f.p())).collect();
    Matrix::from_vec(f, r, c, data)
}

fn criterion_infrastructure(cs: &[Case]) -> Tally {
    let mut t = Tally::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for c in cs {
        let a = c.lam.modules[0].alg().clone();
        let bf = brute_force_indecomposables(&a, BRUTE_FORCE_DIM, ORACLE_GUARD).unwrap();
        let small = c.lam.modules.iter().filter(|m| m.dim() <= BRUTE_FORCE_DIM).count();
        let agree = bf.len() == small && bf.iter().all(|m| c.lam.find(m).is_some());
        t.check(agree, || format!("{}: knitting {small} vs brute force {}", c.name, bf.len()));
        let largest = c.lam.modules.iter().map(|m| m.dim()).max().unwrap();
        t.check(largest < BRUTE_FORCE_DIM || small == c.lam.len(), || format!("{}: brute force stops below dim {largest}", c.name));
        let again = all_indecomposables(&a, Caps::default().dim).unwrap();
        t.check(again.len() == c.lam.len(), || format!("{}: knitting is not deterministic", c.name));
        for _ in 0..SHUFFLES_PER_ALGEBRA {
            let picks: Vec<usize> = (0..rng.gen_range(1..4)).map(|_| rng.gen_range(0..c.lam.len())).collect();
            let mut parts: Vec<Module> = picks.iter().map(|&k| c.lam.modules[k].clone()).collect();
            let before = ids_of(&c.lam, &DirectSum::new(&a, &parts).module);
            parts.shuffle(&mut rng);
            let after = ids_of(&c.lam, &DirectSum::new(&a, &parts).module);
            let mut want = picks.clone();
            want.sort();
            t.check(before == want && after == want, || format!("{}: {picks:?} gave {before:?} / {after:?}", c.name));
        }
    }
    for p in FIELDS {
        let f = FieldPrime::new(p).unwrap();
        for _ in 0..LINALG_MATRICES {
            let m = random_matrix(f, &mut rng);
            let (r, _) = m.rref();
            let k = m.kernel_basis();
            let x0: Vec<u32> = (0..m.cols()).map(|_| rng.gen_range(0..p as u32)).collect();
            let b = Matrix::column_vector(f, &m.mul_vec(&x0));
            let solved = m.solve_right(&b).map(|x| m.mul(&x) == b).unwrap_or(false);
            let ok = r.rref().0 == r && m.rank() + k.cols() == m.cols() && m.mul(&k).is_zero() && solved;
            t.check(ok, || format!("GF({p}): invariants fail on {m:?}"));
        }
    }
    t
}

fn ids_of(lam: &Indecomposables, m: &Module) -> Vec<usize> {
    let mut ids: Vec<usize> = decompose(m).iter().map(|s| lam.find(&s.module).unwrap_or(usize::MAX)).collect();
    ids.sort();
    ids
}

fn main() {
    let cs = cases();
    let mut failed = Vec::new();
    criterion_counts(&cs).report(1, "exact-structure counts match the brute-force oracle", &mut failed);
    criterion_axioms(&cs).report(2, "Auslander axioms on every structure", &mut failed);
    criterion_formula(&cs).report(3, "formula, ker L = eff, admissibility reflection", &mut failed);
    criterion_torsion(&cs).report(4, "torsion-pair identities", &mut failed);
    criterion_ab(&cs).report(5, "Auslander-Bridger sequences", &mut failed);
    criterion_grade(&cs).report(6, "grade dichotomy", &mut failed);
    criterion_round_trip(&cs).report(7, "round trip and resolving", &mut failed);
    criterion_closure(&cs).report(8, "smallest resolving subcategory", &mut failed);
    criterion_injectives(&cs).report(9, "injectives and dominant dimension", &mut failed);
    criterion_restricted(&cs).report(10, "restricted description", &mut failed);
    criterion_infrastructure(&cs).report(11, "infrastructure oracles", &mut failed);
    if !failed.is_empty() {
        println!("failing criteria {failed:?}");
        std::process::exit(1);
    }
}
