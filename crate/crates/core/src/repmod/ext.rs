//! `Ext¹` via a fixed projective presentation of the first argument:
//! `Ext¹(Z, A) = Hom(ΩZ, A) / ι*Hom(P0, A)`.

use super::hom::{hom_dim, hom_space, HomSpace};
use super::module::{kernel, quotient, solve_through, DirectSum, Module, ModuleMap};
use super::presentation::{projective_cover, Cover};
use super::standard::lift_from_projective;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use std::sync::Arc;

/// The data of `0 -> ΩZ -> P0 -> Z -> 0` shared by all `Ext¹(Z, -)`.
#[derive(Clone, Debug)]
pub struct SyzygyData {
    pub z: Module,
    pub cover: Cover,
    pub omega: Module,
    pub iota: ModuleMap,
}

impl SyzygyData {
    pub fn new(z: &Module) -> Arc<SyzygyData> {
        let cover = projective_cover(z);
        let (omega, iota) = kernel(&cover.map);
        Arc::new(SyzygyData { z: z.clone(), cover, omega, iota })
    }
}

#[derive(Clone, Debug)]
pub struct ShortExactSeq {
    pub i: ModuleMap,
    pub p: ModuleMap,
}

impl ShortExactSeq {
    pub fn left(&self) -> &Module {
        self.i.src()
    }

    pub fn middle(&self) -> &Module {
        self.i.tgt()
    }

    pub fn right(&self) -> &Module {
        self.p.tgt()
    }

    pub fn is_exact(&self) -> bool {
        self.i.is_injective()
            && self.p.is_surjective()
            && self.p.compose(&self.i).is_zero()
            && self.left().dim() + self.right().dim() == self.middle().dim()
    }

    /// Split iff `p` has a section.
    pub fn is_split(&self) -> bool {
        let Ok(h) = hom_space(self.right(), self.middle()) else {
            return false;
        };
        // p ∘ s = 1 is linear in s
        let id = ModuleMap::identity(self.right()).flatten();
        let f = self.right().field();
        let cols: Vec<Vec<u32>> = h.basis.iter().map(|s| self.p.compose(s).flatten()).collect();
        let a = Matrix::from_columns(f, id.len(), &cols);
        a.solve_right(&Matrix::column_vector(f, &id)).is_ok()
    }
}

#[derive(Clone, Debug)]
pub struct ExtSpace {
    pub syz: Arc<SyzygyData>,
    pub a: Module,
    pub hom_omega: HomSpace,
    /// Change of coordinates `[R | standard complement]^{-1}`.
    to_quotient: Matrix,
    r_dim: usize,
    complement: Vec<usize>,
}

impl ExtSpace {
    pub fn new(syz: &Arc<SyzygyData>, a: &Module) -> Result<ExtSpace> {
        let f = a.field();
        let hom_omega = hom_space(&syz.omega, a)?;
        let hom_p0 = hom_space(&syz.cover.sum.module, a)?;
        let restricted: Vec<ModuleMap> = hom_p0.basis.iter().map(|g| g.compose(&syz.iota)).collect();
        let r = hom_omega.coords_of_span(&restricted).column_space();
        let complement = r.complement_indices();
        let n = hom_omega.dim();
        let full = r.hstack(&Matrix::identity(f, n).select_columns(&complement));
        let to_quotient = full.inverse().expect("complement completes a basis");
        Ok(ExtSpace { syz: syz.clone(), a: a.clone(), hom_omega, to_quotient, r_dim: r.cols(), complement })
    }

    pub fn z(&self) -> &Module {
        &self.syz.z
    }

    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    /// Class of a map `ΩZ -> A`.
    pub fn class_of_map(&self, g: &ModuleMap) -> Vec<u32> {
        let c = self.hom_omega.coords(g).expect("map out of the syzygy");
        let y = self.to_quotient.mul_vec(&c);
        y[self.r_dim..].to_vec()
    }

    /// A representative `ΩZ -> A` of a class.
    pub fn rep(&self, class: &[u32]) -> ModuleMap {
        let n = self.hom_omega.dim();
        let mut c = vec![0u32; n];
        for (k, &j) in self.complement.iter().enumerate() {
            c[j] = class[k];
        }
        self.hom_omega.elem(&c)
    }

    /// Pushout realization `0 -> A -> E -> Z -> 0`.
    pub fn realize(&self, class: &[u32]) -> ShortExactSeq {
        let g = self.rep(class);
        let alg = self.a.alg();
        let p0 = &self.syz.cover.sum.module;
        let sum = DirectSum::new(alg, &[self.a.clone(), p0.clone()]);
        // image of ΩZ -> A ⊕ P0, w ↦ (g w, -ι w)
        let emb = sum.pair(&self.syz.omega, &[g.clone(), self.syz.iota.neg()]);
        let basis: Vec<Matrix> = emb.parts().iter().map(|m| m.column_space()).collect();
        let q = quotient(&sum.module, &basis).expect("pushout quotient");
        let i = q.proj.compose(&sum.incl(0));
        let to_z = sum.copair(self.z(), &[ModuleMap::zero(&self.a, self.z()), self.syz.cover.map.clone()]);
        let p = q.factor(&to_z);
        ShortExactSeq { i, p }
    }

    /// Class of a short exact sequence `0 -> A -> E -> Z -> 0` with these exact ends.
    pub fn class_of(&self, s: &ShortExactSeq) -> Result<Vec<u32>> {
        if s.left() != &self.a || s.right() != self.z() {
            return Err(Error::DimensionMismatch("sequence ends differ from the Ext arguments".into()));
        }
        let cov = &self.syz.cover;
        let p = s.p.with_ends(s.middle(), self.z());
        let h = lift_from_projective(&cov.sum, &cov.vertices, &cov.map, &p)
            .ok_or_else(|| Error::Precondition("sequence is not surjective".into()))?;
        let hw = h.compose(&self.syz.iota);
        let i = s.i.with_ends(&self.a, s.middle());
        let g = solve_through(&i, &hw).ok_or_else(|| Error::Precondition("sequence is not exact".into()))?;
        Ok(self.class_of_map(&g))
    }

    /// Pushout along `u: A -> A'`, into `target = Ext¹(Z, A')` over the same syzygy data.
    pub fn push(&self, u: &ModuleMap, target: &ExtSpace) -> Matrix {
        let f = self.a.field();
        let cols: Vec<Vec<u32>> = (0..self.dim())
            .map(|k| {
                let mut e = vec![0u32; self.dim()];
                e[k] = 1;
                let g = self.rep(&e);
                target.class_of_map(&u.with_ends(&self.a, &target.a).compose(&g))
            })
            .collect();
        Matrix::from_columns(f, target.dim(), &cols)
    }

    /// Pullback along `v: Z' -> Z`, into `target = Ext¹(Z', A)`.
    pub fn pull(&self, v: &ModuleMap, target: &ExtSpace) -> Matrix {
        let f = self.a.field();
        let v1 = syzygy_lift(&target.syz, &self.syz, v);
        let cols: Vec<Vec<u32>> = (0..self.dim())
            .map(|k| {
                let mut e = vec![0u32; self.dim()];
                e[k] = 1;
                let g = self.rep(&e).with_ends(&self.syz.omega, &target.a);
                target.class_of_map(&g.compose(&v1))
            })
            .collect();
        Matrix::from_columns(f, target.dim(), &cols)
    }
}

/// The map `ΩZ' -> ΩZ` induced by `v: Z' -> Z` and a lift to projective covers.
pub fn syzygy_lift(from: &SyzygyData, to: &SyzygyData, v: &ModuleMap) -> ModuleMap {
    let cov = &from.cover;
    let v = v.with_ends(&from.z, &to.z);
    let target = v.compose(&cov.map);
    let h = lift_from_projective(&cov.sum, &cov.vertices, &target, &to.cover.map).expect("projective lifting");
    let hw = h.compose(&from.iota);
    solve_through(&to.iota, &hw).expect("lands in the syzygy")
}

/// `dim Ext^i(m, n)` by dimension shifting along minimal syzygies.
pub fn ext_dim(i: usize, m: &Module, n: &Module) -> usize {
    if i == 0 {
        return hom_dim(m, n);
    }
    let mut cur = m.clone();
    for _ in 1..i {
        if cur.is_zero() {
            return 0;
        }
        let cover = projective_cover(&cur);
        cur = kernel(&cover.map).0;
    }
    if cur.is_zero() {
        return 0;
    }
    let cover = projective_cover(&cur);
    let omega = kernel(&cover.map).0;
    let hom_p0: usize = cover.vertices.iter().map(|&v| n.dim_at(v)).sum();
    hom_dim(&omega, n) + hom_dim(&cur, n) - hom_p0
}
