use super::duality::{ab_sequence, grade, transpose_sub};
use super::resolving::{in_add, is_resolving, p2_ambient, reconstruct_structure, resolving_closure};
use super::{
    build_subcategories, left_approximation, right_approximation, same_subspaces, torsion_decomposition, trace, Caps,
    Carrier, Setting, SubTag, SubcategorySpec, Subcategories,
};
use crate::algebra::Algebra;
use crate::error::Result;
use crate::exactstruct::{classify_morphism, multisets, ExactStructure};
use crate::functorcat::CategorySpec;
use crate::linalg::Matrix;
use crate::report::Report;
use crate::repmod::decompose::{decompose, is_isomorphic};
use crate::repmod::dims::{dominant_dimension, global_dimension, Bounded};
use crate::repmod::ext::ext_dim;
use crate::repmod::hom::{hom_basis, hom_dim, hom_space};
use crate::repmod::module::{cokernel, image, kernel, map_parts, DirectSum, Module, ModuleMap};
use crate::repmod::presentation::{is_injective, minimal_presentation, projective_resolution};
use crate::repmod::Indecomposables;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

fn ids_str(v: &[usize]) -> String {
    format!("{v:?}")
}

fn mods(s: &Setting, x: &SubcategorySpec) -> Vec<Module> {
    super::modules_of(s, Carrier::Gamma, x)
}

/// Projective resolution of length at most two with all syzygies in `smod_ad`.
fn short_resolution(s: &Setting, subs: &Subcategories, k: usize) -> Option<Vec<Vec<usize>>> {
    let res = projective_resolution(&s.gind.modules[k], 3);
    let len = res.length()?;
    if len > 2 {
        return None;
    }
    if !res.syzygies.iter().all(|m| in_add(&s.gind, &subs.smodad, m)) {
        return None;
    }
    Some(res.terms)
}

pub fn check_auslander_axioms(s: &Setting, e: &ExactStructure, subs: &Subcategories) -> Result<Report> {
    let mut r = Report::new("Auslander exact axioms on smod_ad");
    let g = &s.gind;
    // (i)
    let perp = mods(s, &subs.perp_q);
    let mut bad = Vec::new();
    for &k in &subs.smodad.ids {
        let tp = torsion_decomposition(s, &s.functors[k], e)?;
        let im = image(&tp.seq.i).2;
        let im_spaces: Vec<Matrix> = im.parts().iter().map(|m| m.column_space()).collect();
        let ok = tp.seq.is_exact()
            && tp.torsion_ids.iter().all(|&i| subs.perp_q.contains(i))
            && tp.free_ids.iter().all(|&i| subs.cogen_q.contains(i))
            && same_subspaces(&trace(&perp, &g.modules[k]), &im_spaces);
        if !ok {
            bad.push(k);
        }
    }
    let mut crossing = Vec::new();
    for &a in &subs.perp_q.ids {
        for &b in &subs.cogen_q.ids {
            if hom_dim(&g.modules[a], &g.modules[b]) != 0 {
                crossing.push((a, b));
            }
        }
    }
    r.check(
        "(i) (⊥P, cogen P) is a torsion pair",
        bad.is_empty() && crossing.is_empty(),
        format!(
            "{} objects decomposed, torsion part equals the ⊥P trace; failing {bad:?}; nonzero Hom(⊥P, cogen P) at {crossing:?}",
            subs.smodad.len()
        ),
    );
    // (ii)
    let mut bad = Vec::new();
    let mut count = 0usize;
    for &a in &subs.smodad.ids {
        for &b in &subs.perp_q.ids {
            for phi in hom_basis(&g.modules[a], &g.modules[b])? {
                count += 1;
                let mp = map_parts(&phi);
                let ok = in_add(g, &subs.smodad, &mp.kernel)
                    && in_add(g, &subs.perp_q, &mp.image)
                    && in_add(g, &subs.smodad, &mp.cokernel.module);
                if !ok {
                    bad.push((a, b));
                }
            }
        }
    }
    r.check(
        "(ii) maps into ⊥P are admissible with image in ⊥P",
        bad.is_empty(),
        format!("{count} hom basis maps; failing {bad:?}"),
    );
    // (iii)
    let reps = s.projectives(Carrier::Gamma);
    let bad: Vec<usize> =
        subs.perp_q.ids.iter().copied().filter(|&k| reps.iter().any(|p| ext_dim(1, &g.modules[k], p) != 0)).collect();
    r.check("(iii) Ext¹(⊥P, P) = 0", bad.is_empty(), format!("failing {bad:?}"));
    // (iv)
    let mut bad = Vec::new();
    let mut longest = 0usize;
    for &k in &subs.smodad.ids {
        match short_resolution(s, subs, k) {
            Some(t) => longest = longest.max(t.iter().rposition(|x| !x.is_empty()).unwrap_or(0)),
            None => bad.push(k),
        }
    }
    r.check(
        "(iv) gldim ≤ 2",
        bad.is_empty(),
        format!("resolutions inside smod_ad of length ≤ {longest}; failing {bad:?}"),
    );
    Ok(r)
}

/// `eff = ⊥Q`, `torsion-free = cogen Q`, `Ext¹(eff, Q) = 0`, `Hom(eff, torsion-free) = 0`.
pub fn verify_torsion_identities(s: &Setting, subs: &Subcategories) -> Report {
    let mut r = Report::new("torsion pair identities");
    let g = &s.gind;
    r.check(
        "eff = ⊥Q",
        subs.eff.same_ids(&subs.perp_q),
        format!("eff {} vs ⊥Q {}", ids_str(&subs.eff.ids), ids_str(&subs.perp_q.ids)),
    );
    r.check(
        "torsion-free = cogen Q",
        subs.torsion_free.same_ids(&subs.cogen_q),
        format!("inflation-presented {} vs cogen Q {}", ids_str(&subs.torsion_free.ids), ids_str(&subs.cogen_q.ids)),
    );
    let reps = s.projectives(Carrier::Gamma);
    let bad: Vec<usize> =
        subs.eff.ids.iter().copied().filter(|&k| reps.iter().any(|p| ext_dim(1, &g.modules[k], p) != 0)).collect();
    r.check("Ext¹(eff, representables) = 0", bad.is_empty(), format!("failing {bad:?}"));
    let mut crossing = Vec::new();
    for &a in &subs.eff.ids {
        for &b in &subs.torsion_free.ids {
            if hom_dim(&g.modules[a], &g.modules[b]) != 0 {
                crossing.push((a, b));
            }
        }
    }
    r.check("Hom(eff, torsion-free) = 0", crossing.is_empty(), format!("failing {crossing:?}"));
    r
}

/// `η` admissible in `smod_ad`: kernel, image and cokernel stay in `add(smod_ad)`.
fn admissible_in(ind: &Indecomposables, x: &SubcategorySpec, eta: &ModuleMap) -> bool {
    let mp = map_parts(eta);
    in_add(ind, x, &mp.kernel) && in_add(ind, x, &mp.image) && in_add(ind, x, &mp.cokernel.module)
}

pub const RANDOM_SAMPLES: usize = 50;

pub fn verify_formula_and_localization(s: &Setting, e: &ExactStructure, subs: &Subcategories) -> Result<Report> {
    let mut r = Report::new("Auslander's formula and the localization L");
    let ea = &s.ea;
    let g = &s.gind;
    let n = ea.n();
    let mut bad = Vec::new();
    let ls: Vec<Module> = (0..n).map(|i| ea.localize_l(&s.projectives(Carrier::Gamma)[i])).collect::<Result<_>>()?;
    for i in 0..n {
        if is_isomorphic(&ls[i], ea.summand(i)).is_none() {
            bad.push((i, i));
        }
        for j in 0..n {
            let d = ea.hom(i, j).dim();
            let dg = hom_dim(&s.projectives(Carrier::Gamma)[i], &s.projectives(Carrier::Gamma)[j]);
            if hom_dim(&ls[i], &ls[j]) != d || dg != d {
                bad.push((i, j));
            }
        }
    }
    r.check(
        "L on representables: L(yoneda M_i) ≅ M_i, hom dimensions agree",
        bad.is_empty(),
        format!("{n}×{n} pairs; failing {bad:?}"),
    );
    let mut killed = Vec::new();
    for &k in &subs.smodad.ids {
        if ea.localize(&s.functors[k]).module.is_zero() {
            killed.push(k);
        }
    }
    r.check(
        "ker L = eff",
        killed == subs.eff.ids,
        format!("ker L on smod_ad {} vs eff {}", ids_str(&killed), ids_str(&subs.eff.ids)),
    );
    let mut sample: Vec<(usize, usize, ModuleMap)> = Vec::new();
    let mut pairs = Vec::new();
    for &a in &subs.smodad.ids {
        for &b in &subs.smodad.ids {
            let basis = hom_basis(&g.modules[a], &g.modules[b])?;
            if basis.is_empty() {
                continue;
            }
            pairs.push((a, b, basis.clone()));
            for phi in basis {
                sample.push((a, b, phi));
            }
        }
    }
    let basis_count = sample.len();
    let mut rng = ChaCha8Rng::seed_from_u64(s.caps.seed);
    let p = s.table.field().p();
    if !pairs.is_empty() {
        for _ in 0..RANDOM_SAMPLES {
            let (a, b, basis) = &pairs[rng.gen_range(0..pairs.len())];
            let mut acc = ModuleMap::zero(&g.modules[*a], &g.modules[*b]);
            for phi in basis {
                acc = acc.add(&phi.scale(rng.gen_range(0..p)));
            }
            sample.push((*a, *b, acc));
        }
    }
    let mut bad = Vec::new();
    let mut admissible = 0usize;
    for (idx, (a, b, eta)) in sample.iter().enumerate() {
        let lhs = admissible_in(g, &subs.smodad, eta);
        let (_, _, lmap) = ea.localize_map(eta, &s.functors[*a], &s.functors[*b]);
        let rhs = classify_morphism(&s.table, &lmap, e)?.admissible;
        admissible += usize::from(lhs);
        if lhs != rhs {
            bad.push((idx, *a, *b, lhs));
        }
    }
    r.check(
        "η admissible in smod_ad ⟺ L(η) admissible in (C, e)",
        bad.is_empty(),
        format!(
            "{} morphisms ({basis_count} basis maps, {} seeded random combinations, seed {}), {admissible} admissible; counterexamples {bad:?}",
            sample.len(),
            sample.len() - basis_count,
            s.caps.seed
        ),
    );
    Ok(r)
}

fn e_injective(e: &ExactStructure, a: usize) -> bool {
    let d = e.dims();
    (0..d.len()).all(|z| d[z][a] == 0)
}

fn e_projective(e: &ExactStructure, z: usize) -> bool {
    e.dims()[z].iter().all(|&x| x == 0)
}

/// Length of the initial projective-injective coresolutions of projectives inside `smod_ad`.
pub fn smodad_domdim(s: &Setting, subs: &Subcategories, cutoff: usize) -> Bounded {
    let g = &s.gind;
    let reps = s.projectives(Carrier::Gamma);
    let pi: Vec<Module> = reps
        .iter()
        .filter(|p| subs.smodad.ids.iter().all(|&k| ext_dim(1, &g.modules[k], p) == 0))
        .cloned()
        .collect();
    let pi_ids: Vec<usize> = pi.iter().map(|p| g.find(p).expect("knitted projective")).collect();
    let mut cur: Vec<usize> = (0..reps.len()).map(|v| s.representable_id(v)).collect();
    for step in 0..cutoff {
        cur.retain(|k| !pi_ids.contains(k));
        if cur.is_empty() {
            return Bounded::AtLeast(cutoff);
        }
        let mut next = Vec::new();
        for &k in &cur {
            let (_, u) = left_approximation(&g.modules[k], &pi);
            if !u.is_injective() {
                return Bounded::Exactly(step);
            }
            let c = cokernel(&u).module;
            match g.ids_of(&c) {
                Some(ids) if ids.iter().all(|&i| subs.smodad.contains(i)) => next.extend(ids),
                _ => return Bounded::Exactly(step),
            }
        }
        next.sort();
        next.dedup();
        cur = next;
    }
    Bounded::AtLeast(cutoff)
}

pub fn verify_injective_projective_correspondence(s: &Setting, e: &ExactStructure, subs: &Subcategories) -> Result<Report> {
    let mut r = Report::new("injectives, projectives and dominant dimension");
    let t = &s.table;
    let g = &s.gind;
    let n = s.ea.n();
    let reps = s.projectives(Carrier::Gamma);
    let ms = &s.ea.spec.summands;
    let mut bad = Vec::new();
    for a in 0..n {
        let lhs = e_injective(e, a);
        let rhs = subs.smodad.ids.iter().all(|&k| ext_dim(1, &g.modules[k], &reps[a]) == 0);
        if lhs != rhs {
            bad.push(a);
        }
    }
    r.check("I injective in (C, e) ⟺ yoneda(I) injective in smod_ad", bad.is_empty(), format!("failing {bad:?}"));
    let injectives: Vec<Module> = (0..n).filter(|&a| e_injective(e, a)).map(|a| ms[a].clone()).collect();
    let mut enough_inj = true;
    for m in ms {
        let (_, u) = left_approximation(m, &injectives);
        let ok = t.spec.contains(&cokernel(&u).module) && classify_morphism(t, &u, e)?.inflation;
        enough_inj &= ok;
    }
    let dd = smodad_domdim(s, subs, s.caps.resolution);
    r.check(
        "enough injectives ⟺ domdim(smod_ad) ≥ 2 ⟺ domdim(smod_ad) ≥ 1",
        enough_inj == dd.at_least(2) && dd.at_least(2) == dd.at_least(1),
        format!("enough injectives {enough_inj}, domdim {dd}"),
    );
    if subs.smodad.len() == g.len() {
        let direct = dominant_dimension(s.gamma(), s.caps.resolution);
        let agree = match (dd, direct) {
            (Bounded::Exactly(a), Bounded::Exactly(b)) => a == b,
            (Bounded::AtLeast(_), Bounded::AtLeast(_)) => true,
            _ => false,
        };
        r.check("domdim inside smod_ad = mod Γ matches injective envelopes", agree, format!("{dd} vs {direct}"));
    }
    let mut bad = Vec::new();
    for z in 0..n {
        let lhs = e_projective(e, z);
        let rhs = subs.eff.ids.iter().all(|&k| g.modules[k].dim_at(z) == 0);
        if lhs != rhs {
            bad.push(z);
        }
    }
    r.check("P projective in (C, e) ⟺ yoneda(P) ∈ ⊥eff", bad.is_empty(), format!("failing {bad:?}"));
    let projectives: Vec<Module> = (0..n).filter(|&z| e_projective(e, z)).map(|z| ms[z].clone()).collect();
    let mut enough_proj = true;
    for m in ms {
        let (_, c) = right_approximation(&projectives, m);
        let ok = c.is_surjective()
            && t.spec.contains(&kernel(&c).0)
            && classify_morphism(t, &c, e)?.deflation;
        enough_proj &= ok;
    }
    let qp: Vec<Module> = (0..n).filter(|&z| e_projective(e, z)).map(|z| reps[z].clone()).collect();
    let mut decomposes = true;
    for p in reps.iter() {
        let (_, c) = right_approximation(&qp, p);
        let (im, epi, _) = image(&c);
        let quotient = cokernel(&c).module;
        decomposes &= in_add(g, &subs.smodad, &im)
            && in_add(g, &subs.smodad, &kernel(&epi).0)
            && in_add(g, &subs.eff, &quotient);
    }
    r.check(
        "enough projectives ⟺ every representable is in gen(Q ∩ ⊥eff) * eff",
        enough_proj == decomposes,
        format!("enough projectives {enough_proj}, decompositions {decomposes}"),
    );
    let gl_ok = subs.smodad.ids.iter().all(|&k| short_resolution(s, subs, k).is_some());
    if dd.at_least(2) && gl_ok {
        let bad: Vec<usize> =
            subs.perp_q.ids.iter().copied().filter(|&k| reps.iter().any(|p| ext_dim(1, &g.modules[k], p) != 0)).collect();
        r.check("domdim ≥ 2 ≥ gldim gives Ext¹(⊥P, P) = 0", bad.is_empty(), format!("failing {bad:?}"));
        let (count, bad) = admissible_subobjects(s, subs)?;
        let bound = s.caps.multiplicity;
        r.check(
            "domdim ≥ 1 gives ⊥P closed under admissible subobjects",
            bad.is_empty(),
            format!("{count} inflations E ↣ X with X a sum of ≤ {bound} ⊥P indecomposables, hom basis plus 8 seeded combinations per pair; failing {bad:?}"),
        );
    }
    Ok(r)
}

fn admissible_subobjects(s: &Setting, subs: &Subcategories) -> Result<(usize, Vec<usize>)> {
    let g = &s.gind;
    let mut rng = ChaCha8Rng::seed_from_u64(s.caps.seed ^ 0x5eed);
    let p = s.table.field().p();
    let mut count = 0;
    let mut bad = Vec::new();
    let perp: Vec<usize> = subs.perp_q.ids.clone();
    for combo in multisets(perp.len(), s.caps.multiplicity) {
        if combo.is_empty() {
            continue;
        }
        let parts: Vec<Module> = combo.iter().map(|&i| g.modules[perp[i]].clone()).collect();
        let xsum = DirectSum::new(s.gamma(), &parts);
        for &k in &subs.smodad.ids {
            let hs = hom_space(&g.modules[k], &xsum.module)?;
            let mut cands = hs.basis.clone();
            if !hs.basis.is_empty() {
                for _ in 0..8 {
                    let c: Vec<u32> = (0..hs.dim()).map(|_| rng.gen_range(0..p)).collect();
                    cands.push(hs.elem(&c));
                }
            }
            for phi in cands {
                if !phi.is_injective() || !in_add(g, &subs.smodad, &cokernel(&phi).module) {
                    continue;
                }
                count += 1;
                if !subs.perp_q.contains(k) {
                    bad.push(k);
                }
            }
        }
    }
    bad.sort();
    bad.dedup();
    Ok((count, bad))
}

/// Auslander–Bridger sequence and its dimensions for every `Γ`-indecomposable.
pub fn verify_ab_sequences(s: &Setting) -> Result<Report> {
    let mut r = Report::new("Auslander–Bridger sequence");
    let mut bad = Vec::new();
    let mut proj_bad = Vec::new();
    for (k, m) in s.gind.modules.iter().enumerate() {
        let ab = ab_sequence(m)?;
        if !ab.exact() {
            bad.push(k);
        }
        if ab.projective && !ab.ev_iso {
            proj_bad.push(k);
        }
    }
    r.check(
        "0 -> Ext¹(TrF, Γ^op) -> F -> F** -> Ext²(TrF, Γ^op) -> 0 pointwise",
        bad.is_empty(),
        format!("{} indecomposables; failing {bad:?}", s.gind.len()),
    );
    r.check("ev is an isomorphism on projectives", proj_bad.is_empty(), format!("failing {proj_bad:?}"));
    Ok(r)
}

/// All per-structure checks.
pub fn verify_structure(s: &Setting, e: &ExactStructure) -> Result<Report> {
    let mut r = Report::new("structure checks");
    let subs = build_subcategories(s, e)?;
    r.absorb("axioms: ", check_auslander_axioms(s, e, &subs)?);
    r.absorb("formula: ", verify_formula_and_localization(s, e, &subs)?);
    r.absorb("torsion: ", verify_torsion_identities(s, &subs));
    r.absorb("injectives: ", verify_injective_projective_correspondence(s, e, &subs)?);
    let cutoff = s.caps.resolution;
    match reconstruct_structure(s, &subs.smodad) {
        Ok(back) => r.check("round trip: reconstruct(smod_ad(e)) = e", back.same_as(e), format!("dims {:?}", back.dims())),
        Err(err) => r.check("round trip: reconstruct(smod_ad(e)) = e", false, err.to_string()),
    };
    let amb = p2_ambient(&s.gind, Carrier::Gamma, cutoff);
    r.absorb("resolving smod_ad: ", is_resolving(&s.gind, &subs.smodad, &amb));
    let tr = transpose_sub(s, &subs.smodad)?;
    let amb_op = p2_ambient(&s.op_ind, Carrier::GammaOp, cutoff);
    r.absorb("resolving Tr(smod_ad): ", is_resolving(&s.op_ind, &tr, &amb_op));
    match resolving_closure(&s.gind, &subs.eff, &amb) {
        Ok(cl) => r.check(
            "smallest resolving: closure(eff) = smod_ad",
            cl.same_ids(&subs.smodad),
            format!("closure {} vs smod_ad {}", ids_str(&cl.ids), ids_str(&subs.smodad.ids)),
        ),
        Err(err) => r.check("smallest resolving: closure(eff) = smod_ad", false, err.to_string()),
    };
    let ones: Vec<usize> = subs
        .smodad
        .ids
        .iter()
        .copied()
        .filter(|&k| grade(&s.gind.modules[k], s.projectives(Carrier::Gamma), cutoff) == Bounded::Exactly(1))
        .collect();
    let ones_op: Vec<usize> = tr
        .ids
        .iter()
        .copied()
        .filter(|&k| grade(&s.op_ind.modules[k], s.projectives(Carrier::GammaOp), cutoff) == Bounded::Exactly(1))
        .collect();
    r.check(
        "grade: dichotomy on smod_ad and Tr(smod_ad)",
        ones.is_empty() && ones_op.is_empty(),
        format!("grade-1 objects {ones:?} over Γ, {ones_op:?} over Γ^op"),
    );
    Ok(r)
}

/// The `eΓe`-module `N e` for the vertices `vs`.
fn corner_algebra(gamma: &Arc<Algebra>, vs: &[usize]) -> Result<Arc<Algebra>> {
    let keep: Vec<usize> = (0..gamma.dim()).filter(|&b| vs.contains(&gamma.src(b)) && vs.contains(&gamma.tgt(b))).collect();
    let pos = |b: usize| keep.iter().position(|&x| x == b);
    let vpos = |v: usize| vs.iter().position(|&x| x == v).expect("kept vertex");
    let d = keep.len();
    let mut table = vec![Vec::new(); d * d];
    for (x, &bx) in keep.iter().enumerate() {
        for (y, &by) in keep.iter().enumerate() {
            table[x * d + y] = gamma
                .mul_basis(bx, by)
                .iter()
                .map(|&(z, c)| (pos(z).expect("corner is closed under products"), c))
                .collect();
        }
    }
    Algebra::new(
        gamma.field(),
        vs.iter().map(|&v| gamma.vertex_labels()[v].clone()).collect(),
        keep.iter().map(|&b| gamma.label(b).to_string()).collect(),
        keep.iter().map(|&b| vpos(gamma.src(b))).collect(),
        keep.iter().map(|&b| vpos(gamma.tgt(b))).collect(),
        table,
        vs.iter().map(|&v| pos(gamma.idempotent(v)).expect("idempotent kept")).collect(),
        keep.iter().enumerate().filter(|(_, &b)| gamma.is_radical(b)).map(|(i, _)| i).collect(),
    )
}

fn restrict(m: &Module, corner: &Arc<Algebra>, vs: &[usize]) -> Result<Module> {
    let gamma = m.alg();
    let keep: Vec<usize> = (0..gamma.dim()).filter(|&b| vs.contains(&gamma.src(b)) && vs.contains(&gamma.tgt(b))).collect();
    let dims = vs.iter().map(|&v| m.dim_at(v)).collect();
    let act = keep.iter().map(|&b| m.act(b).clone()).collect();
    Module::from_actions(corner, dims, act)
}

/// `smod_ad(X)` over `Γ_X = End(M_X)` two ways: the membership test, and `{N : N e ∈ X}`.
pub fn restricted_description(lam: &Indecomposables, x: &SubcategorySpec, caps: Caps) -> Result<Report> {
    let mut r = Report::new(format!("restricted description for X = {}", ids_str(&x.ids)));
    let summands: Vec<Module> = x.ids.iter().map(|&k| lam.modules[k].clone()).collect();
    let spec = CategorySpec::new(&lam.alg, summands.clone())?;
    let syz_ok = x.ids.iter().all(|&k| in_add(lam, x, &minimal_presentation(&lam.modules[k]).syzygy));
    let hyp = spec.contains_projectives && spec.extension_closed && syz_ok;
    r.check(
        "X contains projectives, closed under extensions and kernels of epimorphisms",
        hyp,
        format!(
            "projectives {}, extensions {}, syzygies {}",
            spec.contains_projectives, spec.extension_closed, syz_ok
        ),
    );
    if !hyp {
        return Ok(r);
    }
    let s = Setting::new(&spec, caps)?;
    let e = ExactStructure::maximal(&s.table);
    let subs = build_subcategories(&s, &e)?;
    let proj_vs: Vec<usize> = (0..lam.alg.num_vertices())
        .map(|v| spec.find(&crate::repmod::standard::projective(&lam.alg, v)).expect("projective summand"))
        .collect();
    let corner = corner_algebra(s.gamma(), &proj_vs)?;
    let tests: Vec<Module> =
        (0..s.ea.n()).map(|i| restrict(&s.projectives(Carrier::Gamma)[i], &corner, &proj_vs)).collect::<Result<_>>()?;
    let mut via_corner = Vec::new();
    for (k, m) in s.gind.modules.iter().enumerate() {
        let ne = restrict(m, &corner, &proj_vs)?;
        let ok = decompose(&ne).iter().all(|sm| tests.iter().any(|t| t.dims() == sm.module.dims() && is_isomorphic(t, &sm.module).is_some()));
        if ok {
            via_corner.push(k);
        }
    }
    let via_corner = SubcategorySpec::new(Carrier::Gamma, via_corner, SubTag::Restricted);
    r.check(
        "smod_ad(X) = {N : N e ∈ X}",
        via_corner.same_ids(&subs.smodad),
        format!("membership {} vs restriction {}", ids_str(&subs.smodad.ids), ids_str(&via_corner.ids)),
    );
    Ok(r)
}

/// Dimensions of the Auslander algebra of `mod Λ`.
pub fn auslander_algebra_dims(s: &Setting) -> (Bounded, Bounded) {
    (dominant_dimension(s.gamma(), s.caps.resolution), global_dimension(s.gamma(), s.caps.resolution))
}

/// `yoneda(I)` is an injective `Γ`-module for every injective indecomposable `I` of `mod Λ`.
pub fn injectives_transfer(s: &Setting, lam: &Indecomposables) -> Vec<(usize, bool)> {
    (0..lam.len())
        .filter(|&k| lam.injective[k])
        .map(|k| {
            let id = s.ea.spec.find(&lam.modules[k]).expect("summand");
            (k, is_injective(&s.projectives(Carrier::Gamma)[id]))
        })
        .collect()
}

