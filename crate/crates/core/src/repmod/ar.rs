//! Almost split sequences, knitting, and a brute-force enumeration oracle.

use super::decompose::{are_isomorphic_indecomposables, decompose, end_structure, is_indecomposable, EndStructure, Summand};
use super::ext::{ExtSpace, ShortExactSeq, SyzygyData};
use super::hom::hom_basis;
use super::module::{quotient, Module, ModuleMap};
use super::presentation::{is_injective, is_projective, radical_of, tau, tau_inverse};
use super::standard::{injective, projective};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{in_span, Matrix};
use std::collections::VecDeque;
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct ArSequence {
    pub tau_z: Module,
    pub seq: ShortExactSeq,
    pub class: Vec<u32>,
}

/// Basis of `rad End(z)` for indecomposable `z`.
pub fn radical_of_end(z: &Module) -> Vec<ModuleMap> {
    match end_structure(z) {
        EndStructure::Local { radical } | EndStructure::NoSplitFound { radical } => radical,
        _ => Vec::new(),
    }
}

/// Basis of `rad(W, Z)` for indecomposable `W`, `Z`.
pub fn radical_maps(w: &Module, z: &Module) -> Vec<ModuleMap> {
    let hs = hom_basis(w, z).expect("same algebra");
    if w.dims() != z.dims() {
        return hs;
    }
    let Some(phi) = hs.iter().find(|f| f.is_iso()).cloned().or_else(|| {
        if are_isomorphic_indecomposables(w, z) {
            super::decompose::is_isomorphic(w, z)
        } else {
            None
        }
    }) else {
        return hs;
    };
    radical_of_end(w).iter().map(|r| phi.compose(r)).collect()
}

/// Every radical map `W -> Z` with `W` listed factors through `p`, and the sequence is non-split.
pub fn almost_split_test(seq: &ShortExactSeq, known: &[Module]) -> bool {
    if seq.is_split() || !seq.is_exact() {
        return false;
    }
    let z = seq.right();
    let e = seq.middle();
    let f = z.field();
    known.iter().all(|w| {
        let rad = radical_maps(w, z);
        if rad.is_empty() {
            return true;
        }
        let lifts: Vec<Vec<u32>> = hom_basis(w, e).expect("same algebra").iter().map(|h| seq.p.compose(h).flatten()).collect();
        let n = rad[0].flatten().len();
        let span = Matrix::from_columns(f, n, &lifts);
        let target = Matrix::from_columns(f, n, &rad.iter().map(|r| r.flatten()).collect::<Vec<_>>());
        in_span(&span, &target)
    })
}

/// Classes of `Ext¹(z, τz)` killed by pulling back along `rad End(z)`.
fn socle_candidates(ext: &ExtSpace, z: &Module) -> Matrix {
    let f = z.field();
    let rads = radical_of_end(z);
    let mut stack = Matrix::zeros(f, 0, ext.dim());
    for r in &rads {
        stack = stack.vstack(&ext.pull(r, ext));
    }
    stack.kernel_basis()
}

/// An almost split sequence candidate built from the socle of `Ext¹(z, τz)`.
pub fn ar_candidate(z: &Module) -> Result<ArSequence> {
    let tz = tau(z);
    if tz.is_zero() {
        return Err(Error::Precondition("almost split sequences end in non-projective modules".into()));
    }
    let syz = SyzygyData::new(z);
    let ext = ExtSpace::new(&syz, &tz)?;
    let soc = socle_candidates(&ext, z);
    if soc.cols() == 0 {
        return Err(Error::Precondition("Ext¹(z, τz) has no socle class".into()));
    }
    let class = soc.column(0);
    let seq = ext.realize(&class);
    Ok(ArSequence { tau_z: tz, seq, class })
}

/// Almost split sequence ending in `z`, validated against the listed indecomposables.
pub fn ar_sequence(z: &Module, known: &[Module]) -> Result<ArSequence> {
    if is_projective(z) {
        return Err(Error::Precondition("z is projective".into()));
    }
    if !is_indecomposable(z) {
        return Err(Error::Precondition("z is decomposable".into()));
    }
    let tz = tau(z);
    let syz = SyzygyData::new(z);
    let ext = ExtSpace::new(&syz, &tz)?;
    let f = z.field();
    let soc = socle_candidates(&ext, z);
    let mut candidates: Vec<Vec<u32>> = soc.columns();
    candidates.extend((0..ext.dim()).map(|k| {
        let mut e = vec![0u32; ext.dim()];
        e[k] = 1;
        e
    }));
    for class in candidates {
        let seq = ext.realize(&class);
        if almost_split_test(&seq, known) {
            return Ok(ArSequence { tau_z: tz, seq, class });
        }
    }
    // exhaustive over projective points
    let d = ext.dim();
    let total = (f.p() as u64).checked_pow(d as u32).filter(|&t| t <= 1 << 16);
    if let Some(total) = total {
        let mut c = vec![0u32; d];
        for _ in 0..total {
            for x in c.iter_mut() {
                *x += 1;
                if *x < f.p() {
                    break;
                }
                *x = 0;
            }
            let lead = c.iter().rev().find(|&&x| x != 0);
            if lead != Some(&1) {
                continue;
            }
            let seq = ext.realize(&c);
            if almost_split_test(&seq, known) {
                return Ok(ArSequence { tau_z: tz, seq, class: c.clone() });
            }
        }
    }
    Err(Error::Precondition("no Ext class passes the almost split test".into()))
}

#[derive(Clone, Debug)]
pub struct ArEntry {
    pub tau: usize,
    pub seq: ShortExactSeq,
    /// Middle term summand ids, with repetition.
    pub middle: Vec<usize>,
}

/// Pairwise non-isomorphic indecomposables with stable ids.
#[derive(Clone, Debug)]
pub struct Indecomposables {
    pub alg: Arc<Algebra>,
    pub modules: Vec<Module>,
    pub projective: Vec<bool>,
    pub injective: Vec<bool>,
    pub simple: Vec<bool>,
    pub ar: Vec<Option<ArEntry>>,
    /// `(from, to, multiplicity)`
    pub irreducible: Vec<(usize, usize, usize)>,
}

impl Indecomposables {
    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    pub fn find(&self, m: &Module) -> Option<usize> {
        find_in(&self.modules, m)
    }

    /// Summands of `m` with their ids.
    pub fn identify(&self, m: &Module) -> Option<Vec<(usize, Summand)>> {
        decompose(m).into_iter().map(|s| self.find(&s.module).map(|i| (i, s))).collect()
    }

    pub fn ids_of(&self, m: &Module) -> Option<Vec<usize>> {
        let mut v: Vec<usize> = self.identify(m)?.into_iter().map(|(i, _)| i).collect();
        v.sort();
        Some(v)
    }

    pub fn tau_of(&self, id: usize) -> Option<usize> {
        self.ar[id].as_ref().map(|e| e.tau)
    }
}

fn find_in(list: &[Module], m: &Module) -> Option<usize> {
    list.iter().position(|x| x.dims() == m.dims() && are_isomorphic_indecomposables(x, m))
}

/// Summands of `I / soc I`.
fn injective_quotient(i: &Module) -> Module {
    let alg = i.alg();
    let f = i.field();
    // soc I: common kernel of the radical actions
    let socle: Vec<Matrix> = (0..alg.num_vertices())
        .map(|v| {
            let mut stack = Matrix::zeros(f, 0, i.dim_at(v));
            for &b in alg.radical_basis() {
                if alg.src(b) == v {
                    stack = stack.vstack(i.act(b));
                }
            }
            stack.kernel_basis()
        })
        .collect();
    quotient(i, &socle).expect("socle is a submodule").module
}

/// Knitting from projectives along almost split sequences.
pub fn all_indecomposables(alg: &Arc<Algebra>, dim_cap: usize) -> Result<Indecomposables> {
    let nv = alg.num_vertices();
    let mut list: Vec<Module> = Vec::new();
    let mut queue = VecDeque::new();
    let add = |m: &Module, list: &mut Vec<Module>, queue: &mut VecDeque<usize>| -> Result<()> {
        for s in decompose(m) {
            if s.module.dim() > dim_cap {
                return Err(Error::CapExceeded(format!(
                    "indecomposable of dimension {} exceeds the cap {dim_cap}",
                    s.module.dim()
                )));
            }
            if find_in(list, &s.module).is_none() {
                list.push(s.module);
                queue.push_back(list.len() - 1);
            }
        }
        Ok(())
    };
    for v in 0..nv {
        add(&projective(alg, v), &mut list, &mut queue)?;
    }
    for v in 0..nv {
        add(&injective(alg, v), &mut list, &mut queue)?;
    }
    for v in 0..nv {
        let p = projective(alg, v);
        let rad = radical_of(&p);
        let (r, _) = super::module::submodule(&p, &rad)?;
        add(&r, &mut list, &mut queue)?;
        add(&injective_quotient(&injective(alg, v)), &mut list, &mut queue)?;
    }
    let mut seqs: Vec<Option<ArSequence>> = Vec::new();
    while let Some(id) = queue.pop_front() {
        let x = list[id].clone();
        if !is_projective(&x) {
            let ar = ar_candidate(&x)?;
            add(&ar.tau_z, &mut list, &mut queue)?;
            add(ar.seq.middle(), &mut list, &mut queue)?;
            if seqs.len() <= id {
                seqs.resize(id + 1, None);
            }
            seqs[id] = Some(ar);
        }
        if !is_injective(&x) {
            add(&tau_inverse(&x), &mut list, &mut queue)?;
        }
        if list.len() > 10_000 {
            return Err(Error::CapExceeded("too many indecomposables".into()));
        }
    }
    seqs.resize(list.len(), None);

    // canonical order: by total dimension, then dimension vector, then discovery
    let mut order: Vec<usize> = (0..list.len()).collect();
    order.sort_by(|&a, &b| {
        list[a]
            .dim()
            .cmp(&list[b].dim())
            .then_with(|| list[b].dims().cmp(list[a].dims()))
            .then(a.cmp(&b))
    });
    let modules: Vec<Module> = order.iter().map(|&i| list[i].clone()).collect();
    let mut out = Indecomposables {
        alg: alg.clone(),
        projective: modules.iter().map(is_projective).collect(),
        injective: modules.iter().map(is_injective).collect(),
        simple: modules.iter().map(|m| m.dim() == 1).collect(),
        modules,
        ar: Vec::new(),
        irreducible: Vec::new(),
    };
    let mut ar = Vec::new();
    for &old in &order {
        ar.push(match &seqs[old] {
            None => None,
            Some(s) => {
                let tau = out.find(&s.tau_z).expect("τ is listed");
                let middle = out.ids_of(s.seq.middle()).expect("middle terms are listed");
                Some(ArEntry { tau, seq: s.seq.clone(), middle })
            }
        });
    }
    out.ar = ar;
    let mut edges = std::collections::BTreeMap::new();
    for z in 0..out.len() {
        let preds = match &out.ar[z] {
            Some(e) => e.middle.clone(),
            None => {
                let p = &out.modules[z];
                let rad = radical_of(p);
                let (r, _) = super::module::submodule(p, &rad)?;
                out.ids_of(&r).expect("radical summands are listed")
            }
        };
        for x in preds {
            *edges.entry((x, z)).or_insert(0) += 1;
        }
    }
    out.irreducible = edges.into_iter().map(|((a, b), m)| (a, b, m)).collect();
    Ok(out)
}

/// Every indecomposable of total dimension at most `max_dim`, by enumerating
/// generator matrices. `guard` bounds the number of candidates per dimension vector.
pub fn brute_force_indecomposables(alg: &Arc<Algebra>, max_dim: usize, guard: u64) -> Result<Vec<Module>> {
    let nv = alg.num_vertices();
    let f = alg.field();
    let p = f.p() as u64;
    let mut found: Vec<Module> = Vec::new();
    let mut dims = vec![0usize; nv];
    loop {
        // next dimension vector with total <= max_dim
        let mut k = 0;
        loop {
            if k == nv {
                return Ok(found);
            }
            dims[k] += 1;
            if dims.iter().sum::<usize>() <= max_dim {
                break;
            }
            dims[k] = 0;
            k += 1;
        }
        let shapes: Vec<(usize, usize)> = alg.generators().iter().map(|&g| (dims[alg.tgt(g)], dims[alg.src(g)])).collect();
        let entries: usize = shapes.iter().map(|(r, c)| r * c).sum();
        let count = p
            .checked_pow(entries as u32)
            .filter(|&c| c <= guard)
            .ok_or_else(|| Error::CapExceeded(format!("{entries} free entries at dimension vector {dims:?}")))?;
        let mut vals = vec![0u32; entries];
        for _ in 0..count {
            let mut off = 0;
            let gens: Vec<Matrix> = shapes
                .iter()
                .map(|&(r, c)| {
                    let m = Matrix::from_vec(f, r, c, vals[off..off + r * c].to_vec());
                    off += r * c;
                    m
                })
                .collect();
            if let Ok(m) = Module::from_generators(alg, dims.clone(), &gens) {
                if is_indecomposable(&m) && find_in(&found, &m).is_none() {
                    found.push(m);
                }
            }
            for x in vals.iter_mut() {
                *x += 1;
                if (*x as u64) < p {
                    break;
                }
                *x = 0;
            }
        }
    }
}
