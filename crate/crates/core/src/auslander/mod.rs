//! `eff(E)` and `smod_ad(E)` inside `mod Γ`, the transpose and grade on
//! functors, resolving subcategories, and the checks relating them to exact
//! structures on `C = add(M)`.
//!
//! Exact structures on subcategories of `mod Γ` are the ones inherited from
//! `mod Γ`, so `Ext¹` and conflations there are computed in `mod Γ`.

mod duality;
mod resolving;
mod verify;

pub use duality::{ab_sequence, evaluation_map, grade, star_dual, transpose_functor, transpose_sub, AbSequence, Evaluation, StarDual};
pub use resolving::{in_add, is_resolving, p2_ambient, reconstruct_structure, resolving_closure};
pub use verify::{
    auslander_algebra_dims, check_auslander_axioms, injectives_transfer, restricted_description, smodad_domdim, verify_ab_sequences, verify_formula_and_localization,
    verify_injective_projective_correspondence, verify_structure, verify_torsion_identities,
};

use crate::error::{Error, Result};
use crate::exactstruct::{classify_morphism, ExactStructure, ExtTable};
use crate::functorcat::{end_algebra, CategorySpec, EndAlgebra, FunctorObject};
use crate::linalg::Matrix;
use crate::repmod::ext::ShortExactSeq;
use crate::repmod::hom::{hom_basis, hom_dim};
use crate::repmod::module::{cokernel, image, DirectSum, Module, ModuleMap};
use crate::repmod::standard::projective;
use crate::repmod::{all_indecomposables, Indecomposables};
use crate::algebra::Algebra;
use serde::Serialize;
use std::sync::Arc;

/// Size limits shared by the searches and verifications.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Caps {
    /// Largest module dimension reached by knitting.
    pub dim: usize,
    /// Resolution length cutoff for projective dimension, grade and dominant dimension.
    pub resolution: usize,
    /// Largest number of summands on either end in bounded checks.
    pub multiplicity: usize,
    pub seed: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { dim: 40, resolution: 6, multiplicity: 2, seed: 0 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Carrier {
    Lambda,
    Gamma,
    GammaOp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SubTag {
    Eff,
    Smodad,
    CogenQ,
    PerpQ,
    TorsionFree,
    Transpose,
    Ambient,
    ResolvingClosure,
    Restricted,
    Custom,
}

/// A subcategory `add` of some indecomposables, by their knitting ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubcategorySpec {
    pub carrier: Carrier,
    pub ids: Vec<usize>,
    pub tag: SubTag,
}

impl SubcategorySpec {
    pub fn new(carrier: Carrier, mut ids: Vec<usize>, tag: SubTag) -> SubcategorySpec {
        ids.sort();
        ids.dedup();
        SubcategorySpec { carrier, ids, tag }
    }

    pub fn contains(&self, id: usize) -> bool {
        self.ids.binary_search(&id).is_ok()
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn same_ids(&self, other: &SubcategorySpec) -> bool {
        self.carrier == other.carrier && self.ids == other.ids
    }

    pub fn with_tag(&self, tag: SubTag) -> SubcategorySpec {
        SubcategorySpec { tag, ..self.clone() }
    }
}

/// `C`, `Γ = End(M)` and the indecomposables of `mod Γ` and `mod Γ^op`.
#[derive(Clone, Debug)]
pub struct Setting {
    pub ea: EndAlgebra,
    pub table: ExtTable,
    pub gind: Indecomposables,
    pub op_ind: Indecomposables,
    /// Minimal presentations of the `Γ`-indecomposables, in `gind` order.
    pub functors: Vec<FunctorObject>,
    pub caps: Caps,
    gproj: Vec<Module>,
    op_proj: Vec<Module>,
}

impl Setting {
    pub fn new(spec: &CategorySpec, caps: Caps) -> Result<Setting> {
        let ea = end_algebra(spec)?;
        let table = ExtTable::new(spec)?;
        let gamma = ea.gamma.clone();
        let op = gamma.op();
        let gind = all_indecomposables(&gamma, caps.dim)?;
        let op_ind = all_indecomposables(&op, caps.dim)?;
        let functors = gind.modules.iter().map(|m| ea.functor(m)).collect::<Result<Vec<_>>>()?;
        let gproj = (0..gamma.num_vertices()).map(|v| projective(&gamma, v)).collect();
        let op_proj = (0..op.num_vertices()).map(|v| projective(&op, v)).collect();
        Ok(Setting { ea, table, gind, op_ind, functors, caps, gproj, op_proj })
    }

    /// `C = mod Λ`, with `M` the sum of the knitted indecomposables.
    pub fn mod_lambda(alg: &Arc<Algebra>, caps: Caps) -> Result<(Indecomposables, Setting)> {
        let ind = all_indecomposables(alg, caps.dim)?;
        let s = Setting::new(&CategorySpec::from_indecomposables(&ind), caps)?;
        Ok((ind, s))
    }

    pub fn gamma(&self) -> &Arc<Algebra> {
        &self.ea.gamma
    }

    pub fn list(&self, c: Carrier) -> &Indecomposables {
        match c {
            Carrier::GammaOp => &self.op_ind,
            _ => &self.gind,
        }
    }

    /// Indecomposable projectives `e_v Γ`, which are `yoneda(M_v)`.
    pub fn projectives(&self, c: Carrier) -> &[Module] {
        match c {
            Carrier::GammaOp => &self.op_proj,
            _ => &self.gproj,
        }
    }

    pub fn all(&self, c: Carrier) -> SubcategorySpec {
        SubcategorySpec::new(c, (0..self.list(c).len()).collect(), SubTag::Custom)
    }

    pub fn projective_ids(&self, c: Carrier) -> SubcategorySpec {
        let l = self.list(c);
        SubcategorySpec::new(c, (0..l.len()).filter(|&k| l.projective[k]).collect(), SubTag::Custom)
    }

    /// Knitting id of `yoneda(M_v)`.
    pub fn representable_id(&self, v: usize) -> usize {
        self.gind.find(&self.gproj[v]).expect("projectives are knitted")
    }
}

/// Membership classes of the `Γ`-indecomposables for one exact structure.
#[derive(Clone, Debug, Serialize)]
pub struct Subcategories {
    pub eff: SubcategorySpec,
    pub smodad: SubcategorySpec,
    /// Objects of `smod_ad` with an inflation into a representable.
    pub cogen_q: SubcategorySpec,
    /// Objects of `smod_ad` without nonzero maps to representables.
    pub perp_q: SubcategorySpec,
    /// Objects whose presentation morphism is an inflation.
    pub torsion_free: SubcategorySpec,
}

fn check_gamma(s: &Setting, fo: &FunctorObject) -> Result<()> {
    if !Algebra::same(fo.module.alg(), s.gamma()) {
        return Err(Error::AlgebraMismatch);
    }
    Ok(())
}

/// `F ∈ eff(e)`: the minimal presentation morphism is an `e`-deflation.
pub fn eff_membership(s: &Setting, fo: &FunctorObject, e: &ExactStructure) -> Result<bool> {
    check_gamma(s, fo)?;
    Ok(classify_morphism(&s.table, &fo.f, e)?.deflation)
}

/// `F ∈ smod_ad(e)`: the minimal presentation morphism is `e`-admissible.
pub fn smodad_membership(s: &Setting, fo: &FunctorObject, e: &ExactStructure) -> Result<bool> {
    check_gamma(s, fo)?;
    Ok(classify_morphism(&s.table, &fo.f, e)?.admissible)
}

/// `m -> ⊕ T^{hom(m, T)}` over hom bases.
pub fn left_approximation(m: &Module, targets: &[Module]) -> (DirectSum, ModuleMap) {
    let mut parts = Vec::new();
    let mut maps = Vec::new();
    for t in targets {
        for b in hom_basis(m, t).expect("same algebra") {
            parts.push(t.clone());
            maps.push(b);
        }
    }
    let sum = DirectSum::new(m.alg(), &parts);
    let u = sum.pair(m, &maps);
    (sum, u)
}

/// `⊕ S^{hom(S, m)} -> m` over hom bases.
pub fn right_approximation(sources: &[Module], m: &Module) -> (DirectSum, ModuleMap) {
    let mut parts = Vec::new();
    let mut maps = Vec::new();
    for t in sources {
        for b in hom_basis(t, m).expect("same algebra") {
            parts.push(t.clone());
            maps.push(b);
        }
    }
    let sum = DirectSum::new(m.alg(), &parts);
    let u = sum.copair(m, &maps);
    (sum, u)
}

/// Per-vertex column spaces of the sum of images of maps `S -> m`.
pub fn trace(sources: &[Module], m: &Module) -> Vec<Matrix> {
    let f = m.field();
    let mut acc: Vec<Matrix> = (0..m.alg().num_vertices()).map(|v| Matrix::zeros(f, m.dim_at(v), 0)).collect();
    for t in sources {
        for b in hom_basis(t, m).expect("same algebra") {
            for (v, a) in acc.iter_mut().enumerate() {
                *a = a.hstack(b.part(v));
            }
        }
    }
    acc.into_iter().map(|a| a.column_space()).collect()
}

pub fn same_subspaces(a: &[Matrix], b: &[Matrix]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.rank() == y.rank() && x.hstack(y).rank() == x.rank())
}

pub(crate) fn modules_of(s: &Setting, c: Carrier, sub: &SubcategorySpec) -> Vec<Module> {
    sub.ids.iter().map(|&k| s.list(c).modules[k].clone()).collect()
}

pub fn build_subcategories(s: &Setting, e: &ExactStructure) -> Result<Subcategories> {
    let c = Carrier::Gamma;
    let mut eff = Vec::new();
    let mut smodad = Vec::new();
    let mut free = Vec::new();
    for (k, fo) in s.functors.iter().enumerate() {
        let class = classify_morphism(&s.table, &fo.f, e)?;
        if class.deflation {
            eff.push(k);
        }
        if class.admissible {
            smodad.push(k);
        }
        if class.inflation {
            free.push(k);
        }
    }
    let smodad = SubcategorySpec::new(c, smodad, SubTag::Smodad);
    let reps = s.projectives(c).to_vec();
    let perp: Vec<usize> = smodad
        .ids
        .iter()
        .copied()
        .filter(|&k| reps.iter().all(|p| hom_dim(&s.gind.modules[k], p) == 0))
        .collect();
    let cogen: Vec<usize> = smodad
        .ids
        .iter()
        .copied()
        .filter(|&k| {
            let (_, u) = left_approximation(&s.gind.modules[k], &reps);
            u.is_injective() && in_add(&s.gind, &smodad, &cokernel(&u).module)
        })
        .collect();
    Ok(Subcategories {
        eff: SubcategorySpec::new(c, eff, SubTag::Eff),
        cogen_q: SubcategorySpec::new(c, cogen, SubTag::CogenQ),
        perp_q: SubcategorySpec::new(c, perp, SubTag::PerpQ),
        torsion_free: SubcategorySpec::new(c, free, SubTag::TorsionFree),
        smodad,
    })
}

/// `tF ↪ F ↠ fF` from the factorization `X ↠ I ↣ Y` of the presentation morphism.
#[derive(Clone, Debug)]
pub struct TorsionParts {
    pub seq: ShortExactSeq,
    pub torsion_ids: Vec<usize>,
    pub free_ids: Vec<usize>,
}

pub fn torsion_decomposition(s: &Setting, fo: &FunctorObject, e: &ExactStructure) -> Result<TorsionParts> {
    check_gamma(s, fo)?;
    if !classify_morphism(&s.table, &fo.f, e)?.admissible {
        return Err(Error::Precondition("functor is not admissibly presented".into()));
    }
    let ea = &s.ea;
    let (im, epi, mono) = image(&fo.f);
    let (i_ids, isum, iso) = ea.spec.split(&im).ok_or_else(|| Error::NotInCategory("image outside add(M)".into()))?;
    let inv = iso.inverse().expect("iso");
    let epi = inv.compose(&epi).with_ends(&fo.x.module, &isum.module);
    let mono = mono.compose(&iso).with_ends(&isum.module, &fo.y.module);
    let (x_ids, y_ids) = (fo.x_ids(), fo.y_ids());
    let px = ea.representable(x_ids);
    let pi = ea.representable(&i_ids);
    let py = &fo.pres.cover.sum;
    let ye = ea.yoneda_proj(&epi, x_ids, &i_ids).to_module_map(&px, &pi);
    let ym = ea.yoneda_proj(&mono, &i_ids, y_ids).to_module_map(&pi, py);
    let tq = cokernel(&ye);
    let incl = tq.factor(&fo.pres.cover.map.compose(&ym));
    let q = cokernel(&incl);
    let seq = ShortExactSeq { i: incl, p: q.proj };
    let not_knit = || Error::CapExceeded("torsion part outside the knitted list".into());
    let torsion_ids = s.gind.ids_of(seq.left()).ok_or_else(not_knit)?;
    let free_ids = s.gind.ids_of(seq.right()).ok_or_else(not_knit)?;
    Ok(TorsionParts { seq, torsion_ids, free_ids })
}
