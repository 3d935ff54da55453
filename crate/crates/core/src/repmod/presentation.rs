use super::module::{cokernel, kernel, DirectSum, Module, ModuleMap};
use super::standard::{map_from_generators, projective_sum, ProjMap};
use crate::linalg::Matrix;
use crate::Result;
use std::sync::Arc;

/// Projective cover `⊕ P_{v_k} ↠ m`.
#[derive(Clone, Debug)]
pub struct Cover {
    pub vertices: Vec<usize>,
    pub sum: DirectSum,
    pub map: ModuleMap,
}

/// Per-vertex basis of `rad m = m·J`.
pub fn radical_of(m: &Module) -> Vec<Matrix> {
    let alg = m.alg();
    let f = m.field();
    (0..alg.num_vertices())
        .map(|v| {
            let mut span = Matrix::zeros(f, m.dim_at(v), 0);
            for &b in alg.radical_basis() {
                if alg.tgt(b) == v && m.dim_at(alg.src(b)) > 0 {
                    span = span.hstack(m.act(b));
                }
            }
            span.column_space()
        })
        .collect()
}

pub fn top_dims(m: &Module) -> Vec<usize> {
    radical_of(m).iter().enumerate().map(|(v, r)| m.dim_at(v) - r.cols()).collect()
}

pub fn projective_cover(m: &Module) -> Cover {
    let alg = m.alg();
    let rad = radical_of(m);
    let mut vertices = Vec::new();
    let mut images = Vec::new();
    for (v, r) in rad.iter().enumerate() {
        for c in r.complement_indices() {
            let mut e = vec![0u32; m.dim_at(v)];
            e[c] = 1;
            vertices.push(v);
            images.push(e);
        }
    }
    let sum = projective_sum(alg, &vertices);
    let map = map_from_generators(&sum, &vertices, m, &images);
    Cover { vertices, sum, map }
}

/// `P1 --d--> P0 --cover--> m -> 0` with both maps projective covers onto their images.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub cover: Cover,
    pub syzygy: Module,
    /// `Ω m -> P0`
    pub syzygy_incl: ModuleMap,
    pub syzygy_cover: Cover,
    /// `P1 -> P0`
    pub d: ModuleMap,
    pub d_proj: ProjMap,
}

impl Presentation {
    pub fn p0(&self) -> &[usize] {
        &self.cover.vertices
    }

    pub fn p1(&self) -> &[usize] {
        &self.syzygy_cover.vertices
    }
}

pub fn syzygy(m: &Module) -> (Cover, Module, ModuleMap) {
    let cover = projective_cover(m);
    let (k, incl) = kernel(&cover.map);
    (cover, k, incl)
}

pub fn minimal_presentation(m: &Module) -> Presentation {
    let (cover, syz, incl) = syzygy(m);
    let syzygy_cover = projective_cover(&syz);
    let d = incl.compose(&syzygy_cover.map);
    let d_proj = ProjMap::from_module_map(&d, &syzygy_cover.sum, &syzygy_cover.vertices, &cover.sum, &cover.vertices);
    Presentation { cover, syzygy: syz, syzygy_incl: incl, syzygy_cover, d, d_proj }
}

/// Minimal projective resolution up to `cutoff` terms: vertex lists of
/// `P0, P1, ...` and whether it terminated.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub terms: Vec<Vec<usize>>,
    pub syzygies: Vec<Module>,
    pub finite: bool,
}

impl Resolution {
    /// Projective dimension when finite.
    pub fn length(&self) -> Option<usize> {
        if !self.finite {
            return None;
        }
        Some(self.terms.iter().rposition(|t| !t.is_empty()).unwrap_or(0))
    }
}

pub fn projective_resolution(m: &Module, cutoff: usize) -> Resolution {
    let mut terms = Vec::new();
    let mut syzygies = vec![m.clone()];
    let mut cur = m.clone();
    for _ in 0..=cutoff {
        if cur.is_zero() {
            return Resolution { terms, syzygies, finite: true };
        }
        let (cover, k, _) = syzygy(&cur);
        terms.push(cover.vertices.clone());
        syzygies.push(k.clone());
        cur = k;
    }
    let finite = cur.is_zero();
    Resolution { terms, syzygies, finite }
}

/// `None` when the resolution is longer than `cutoff`.
pub fn projective_dimension(m: &Module, cutoff: usize) -> Option<usize> {
    if m.is_zero() {
        return Some(0);
    }
    projective_resolution(m, cutoff).length()
}

/// Auslander–Bridger transpose: cokernel of `Hom(d, A)`, over the opposite algebra.
pub fn transpose_module(m: &Module) -> Module {
    let op = m.alg().op();
    transpose_with(m, &op)
}

pub fn transpose_with(m: &Module, op: &Arc<crate::algebra::Algebra>) -> Module {
    if m.is_zero() {
        return Module::zero(op);
    }
    let pres = minimal_presentation(m);
    let t = pres.d_proj.transpose(op);
    let src = projective_sum(op, &t.src);
    let tgt = projective_sum(op, &t.tgt);
    let map = t.to_module_map(&src, &tgt);
    cokernel(&map).module
}

/// `τ m = D Tr m`
pub fn tau(m: &Module) -> Module {
    let op = m.alg().op();
    transpose_with(m, &op).dual(m.alg())
}

/// `τ⁻¹ m = Tr D m`
pub fn tau_inverse(m: &Module) -> Module {
    let op = m.alg().op();
    let dm = m.dual(&op);
    transpose_with(&dm, m.alg())
}

pub fn is_projective(m: &Module) -> bool {
    projective_cover(m).sum.module.dim() == m.dim()
}

pub fn is_injective(m: &Module) -> bool {
    is_projective(&m.dual_default())
}

/// Injective envelope `m ↪ I` as the dual of a projective cover of `D m`.
pub fn injective_envelope(m: &Module) -> Result<(Module, ModuleMap)> {
    let op = m.alg().op();
    let dm = m.dual(&op);
    let cov = projective_cover(&dm);
    let i = cov.sum.module.dual(m.alg());
    // D(cov.map): D(dm) = m -> D(P)
    let incl = cov.map.dual(m, &i);
    Ok((i, incl))
}
