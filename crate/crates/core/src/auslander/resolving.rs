use super::{same_subspaces, trace, Carrier, Setting, SubTag, SubcategorySpec};
use crate::error::{Error, Result};
use crate::exactstruct::{is_exact_structure, ExactStructure, Provenance, POINT_LIMIT};
use crate::functorcat::projective_points;
use crate::linalg::Matrix;
use crate::report::Report;
use crate::repmod::ext::{ExtSpace, SyzygyData};
use crate::repmod::hom::hom_basis;
use crate::repmod::module::{cokernel, kernel, DirectSum, Module};
use crate::repmod::presentation::{minimal_presentation, projective_cover, projective_dimension};
use crate::repmod::Indecomposables;
use std::collections::BTreeSet;

/// `m ∈ add(X)`.
pub fn in_add(ind: &Indecomposables, x: &SubcategorySpec, m: &Module) -> bool {
    ind.ids_of(m).is_some_and(|ids| ids.iter().all(|&i| x.contains(i)))
}

/// Indecomposables of projective dimension at most two.
pub fn p2_ambient(ind: &Indecomposables, carrier: Carrier, cutoff: usize) -> SubcategorySpec {
    let ids = (0..ind.len()).filter(|&k| projective_dimension(&ind.modules[k], cutoff.max(3)).is_some_and(|d| d <= 2));
    SubcategorySpec::new(carrier, ids.collect(), SubTag::Ambient)
}

fn modules(ind: &Indecomposables, x: &SubcategorySpec) -> Vec<Module> {
    x.ids.iter().map(|&k| ind.modules[k].clone()).collect()
}

/// Middle terms of the extensions `0 -> H -> E -> G -> 0`, one per projective point.
fn extension_middles(g: &Module, h: &Module) -> Vec<Module> {
    let syz = SyzygyData::new(g);
    let ext = ExtSpace::new(&syz, h).expect("same algebra");
    if ext.dim() == 0 {
        return Vec::new();
    }
    projective_points(g.field().p(), ext.dim(), POINT_LIMIT).iter().map(|c| ext.realize(c).middle().clone()).collect()
}

/// Epimorphisms `B ⊕ P0(G) -> G`, one per hom basis map `B -> G`.
fn bounded_epis(b: &Module, g: &Module) -> Vec<Module> {
    let cov = projective_cover(g);
    hom_basis(b, g)
        .expect("same algebra")
        .into_iter()
        .map(|phi| {
            let sum = DirectSum::new(g.alg(), &[b.clone(), cov.sum.module.clone()]);
            let map = sum.copair(g, &[phi, cov.map.clone()]);
            kernel(&map).0
        })
        .collect()
}

pub fn is_resolving(ind: &Indecomposables, x: &SubcategorySpec, ambient: &SubcategorySpec) -> Report {
    let mut r = Report::new(format!("resolving check for {:?} in {:?}", x.tag, ambient.tag));
    let xs = modules(ind, x);
    let outside: Vec<usize> = x.ids.iter().copied().filter(|&k| !ambient.contains(k)).collect();
    let missing: Vec<usize> = (0..ind.len()).filter(|&k| ind.projective[k] && !x.contains(k)).collect();
    r.check(
        "inside the ambient, contains projectives",
        outside.is_empty() && missing.is_empty(),
        format!("outside {outside:?}, missing projectives {missing:?}"),
    );
    let ungenerated: Vec<usize> = ambient
        .ids
        .iter()
        .copied()
        .filter(|&a| {
            let m = &ind.modules[a];
            let full: Vec<Matrix> = (0..m.alg().num_vertices()).map(|v| Matrix::identity(m.field(), m.dim_at(v))).collect();
            !same_subspaces(&trace(&xs, m), &full)
        })
        .collect();
    r.check("generating", ungenerated.is_empty(), format!("not generated: {ungenerated:?}"));
    let mut bad = Vec::new();
    let mut count = 0usize;
    for (gi, g) in x.ids.iter().zip(&xs) {
        for (hi, h) in x.ids.iter().zip(&xs) {
            for e in extension_middles(g, h) {
                count += 1;
                if !in_add(ind, x, &e) {
                    bad.push((*gi, *hi));
                    break;
                }
            }
        }
    }
    r.check(
        "closed under extensions",
        bad.is_empty(),
        format!("{count} extensions with indecomposable ends, one per projective point; failing (G, H): {bad:?}"),
    );
    let mut bad = Vec::new();
    let mut count = 0usize;
    for (gi, g) in x.ids.iter().zip(&xs) {
        let syz = minimal_presentation(g).syzygy;
        count += 1;
        if !in_add(ind, x, &syz) {
            bad.push((*gi, *gi));
            continue;
        }
        for (bi, b) in x.ids.iter().zip(&xs) {
            for k in bounded_epis(b, g) {
                count += 1;
                if !in_add(ind, x, &k) {
                    bad.push((*bi, *gi));
                    break;
                }
            }
        }
    }
    r.check(
        "closed under kernels of epimorphisms",
        bad.is_empty(),
        format!("{count} kernels: syzygies and epimorphisms B ⊕ P0(G) -> G over hom bases; failing (B, G): {bad:?}"),
    );
    r.check("closed under summands", true, "id-set description");
    r
}

/// Least fixpoint of projectives, extension middle terms, syzygies and
/// kernels of the bounded epimorphisms, all split into indecomposables.
pub fn resolving_closure(ind: &Indecomposables, seed: &SubcategorySpec, ambient: &SubcategorySpec) -> Result<SubcategorySpec> {
    let mut set: BTreeSet<usize> = seed.ids.iter().copied().collect();
    set.extend((0..ind.len()).filter(|&k| ind.projective[k]));
    let mut done_pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut done_single: BTreeSet<usize> = BTreeSet::new();
    let add = |set: &mut BTreeSet<usize>, m: &Module| -> Result<bool> {
        let ids = ind.ids_of(m).ok_or_else(|| Error::CapExceeded("closure left the knitted list".into()))?;
        let mut grew = false;
        for i in ids {
            grew |= set.insert(i);
        }
        Ok(grew)
    };
    loop {
        let mut grew = false;
        let cur: Vec<usize> = set.iter().copied().collect();
        for &g in &cur {
            if done_single.insert(g) {
                let syz = minimal_presentation(&ind.modules[g]).syzygy;
                grew |= add(&mut set, &syz)?;
            }
            for &h in &cur {
                if !done_pairs.insert((g, h)) {
                    continue;
                }
                for e in extension_middles(&ind.modules[g], &ind.modules[h]) {
                    grew |= add(&mut set, &e)?;
                }
                for k in bounded_epis(&ind.modules[h], &ind.modules[g]) {
                    grew |= add(&mut set, &k)?;
                }
            }
        }
        if !grew {
            break;
        }
    }
    if let Some(k) = set.iter().find(|&&k| !ambient.contains(k)) {
        return Err(Error::Precondition(format!("closure leaves the ambient at {k}")));
    }
    Ok(SubcategorySpec::new(seed.carrier, set.into_iter().collect(), SubTag::ResolvingClosure))
}

/// Conflations `0 -> M_a -> E -> M_z -> 0` whose Yoneda image has cokernel in `add(X)`.
pub fn reconstruct_structure(s: &Setting, x: &SubcategorySpec) -> Result<ExactStructure> {
    let t = &s.table;
    let ea = &s.ea;
    let f = t.field();
    let n = t.n();
    let mut e = ExactStructure::split(t);
    e.provenance = Provenance::Reconstructed;
    for z in 0..n {
        for a in 0..n {
            let d = t.dim(z, a);
            if d == 0 {
                continue;
            }
            let space = &t.spaces[z][a];
            let points = projective_points(f.p(), d, POINT_LIMIT);
            let complete = points.len() as u64 == ((f.p() as u64).pow(d as u32) - 1) / (f.p() as u64 - 1);
            let mut accepted = Vec::new();
            for c in &points {
                let seq = space.realize(c);
                let (ids, sum, iso) = ea
                    .spec
                    .split(seq.middle())
                    .ok_or_else(|| Error::NotInCategory("middle term outside add(M)".into()))?;
                let i = iso.inverse().expect("iso").compose(&seq.i).with_ends(ea.summand(a), &sum.module);
                let yi = ea.yoneda_proj(&i, &[a], &ids).to_module_map(&ea.representable(&[a]), &ea.representable(&ids));
                if in_add(&s.gind, x, &cokernel(&yi).module) {
                    accepted.push(c.clone());
                }
            }
            if accepted.is_empty() {
                continue;
            }
            let span = Matrix::from_columns(f, d, &accepted).column_space();
            let r = span.cols();
            let expected = ((f.p() as u64).pow(r as u32) - 1) / (f.p() as u64 - 1);
            if complete && accepted.len() as u64 != expected {
                return Err(Error::Precondition(format!(
                    "accepted classes in Ext¹(M{z}, M{a}) are not a subspace: {} points, span of rank {r}",
                    accepted.len()
                )));
            }
            e.sub[z][a] = span;
        }
    }
    let e = ExactStructure::from_spans(e.sub, Provenance::Reconstructed);
    let rep = is_exact_structure(t, &e, s.caps.multiplicity);
    if !rep.passed() {
        let why: Vec<String> = rep.failures().iter().map(|i| format!("{} ({})", i.name, i.detail)).collect();
        return Err(Error::Precondition(format!("reconstructed family is not exact: {}", why.join("; "))));
    }
    Ok(e)
}
