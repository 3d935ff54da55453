use super::{Carrier, Setting, SubTag, SubcategorySpec};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::repmod::dims::Bounded;
use crate::repmod::ext::ext_dim;
use crate::repmod::hom::{hom_space, HomSpace};
use crate::repmod::module::{Module, ModuleMap};
use crate::repmod::presentation::{is_projective, transpose_with};
use crate::repmod::standard::{map_from_generators, proj_pos, projective, projective_sum};
use std::sync::Arc;

pub fn transpose_functor(m: &Module) -> Module {
    transpose_with(m, &m.alg().op())
}

/// `Tr(X)` over `Γ^op`: the transposes of the non-projective members, and all projectives.
pub fn transpose_sub(s: &Setting, x: &SubcategorySpec) -> Result<SubcategorySpec> {
    let op = s.gamma().op();
    let mut ids: Vec<usize> = (0..s.op_ind.len()).filter(|&k| s.op_ind.projective[k]).collect();
    for &k in &x.ids {
        if s.gind.projective[k] {
            continue;
        }
        let tr = transpose_with(&s.gind.modules[k], &op);
        let found = s.op_ind.ids_of(&tr).ok_or_else(|| Error::CapExceeded("transpose outside the knitted list".into()))?;
        ids.extend(found);
    }
    Ok(SubcategorySpec::new(Carrier::GammaOp, ids, SubTag::Transpose))
}

/// `F* = Hom(F, A)` as a module over `target`, the opposite of `F`'s algebra.
#[derive(Clone, Debug)]
pub struct StarDual {
    pub module: Module,
    /// `homs[v] = Hom(F, e_v A)`, the basis of vertex `v`.
    pub homs: Vec<HomSpace>,
}

fn is_opposite(a: &Algebra, b: &Algebra) -> bool {
    a.dim() == b.dim()
        && a.num_vertices() == b.num_vertices()
        && (0..a.dim()).all(|x| a.src(x) == b.tgt(x) && a.tgt(x) == b.src(x))
}

/// Left multiplication by the basis element `x ∈ e_j A e_i`, as `P_i -> P_j`.
fn left_mult(alg: &Arc<Algebra>, x: usize, pi: &Module, pj: &Module) -> ModuleMap {
    let i = alg.tgt(x);
    let sum = projective_sum(alg, &[i]);
    let mut img = vec![0u32; pj.dim_at(i)];
    img[proj_pos(alg, x)] = 1;
    map_from_generators(&sum, &[i], pj, &[img]).with_ends(pi, pj)
}

pub fn star_dual(m: &Module, target: &Arc<Algebra>) -> Result<StarDual> {
    let alg = m.alg();
    if !is_opposite(alg, target) || alg.field() != target.field() {
        return Err(Error::AlgebraMismatch);
    }
    let f = alg.field();
    let n = alg.num_vertices();
    let ps: Vec<Module> = (0..n).map(|v| projective(alg, v)).collect();
    let homs: Vec<HomSpace> = ps.iter().map(|p| hom_space(m, p)).collect::<Result<_>>()?;
    let dims: Vec<usize> = homs.iter().map(|h| h.dim()).collect();
    let act = (0..alg.dim())
        .map(|x| {
            let (j, i) = (alg.src(x), alg.tgt(x));
            let lx = left_mult(alg, x, &ps[i], &ps[j]);
            let cols: Vec<Vec<u32>> =
                homs[i].basis.iter().map(|psi| homs[j].coords(&lx.compose(psi)).expect("composite")).collect();
            Matrix::from_columns(f, dims[j], &cols)
        })
        .collect();
    let module = Module::from_actions(target, dims, act)?;
    Ok(StarDual { module, homs })
}

/// `ev_F: F -> F**`, `ev(x)(ψ) = ψ(x)`.
#[derive(Clone, Debug)]
pub struct Evaluation {
    pub star: StarDual,
    pub double: StarDual,
    pub ev: ModuleMap,
}

pub fn evaluation_map(m: &Module) -> Result<Evaluation> {
    let alg = m.alg();
    let op = alg.op();
    let f = alg.field();
    let star = star_dual(m, &op)?;
    let double = star_dual(&star.module, alg)?;
    let n = alg.num_vertices();
    let mut parts = Vec::with_capacity(n);
    for v in 0..n {
        let pv = projective(&op, v);
        let mut cols = Vec::with_capacity(m.dim_at(v));
        for k in 0..m.dim_at(v) {
            let mut x = vec![0u32; m.dim_at(v)];
            x[k] = 1;
            // (e_w A e_v) and (e_v A^op e_w) share their basis order
            let theta_parts: Vec<Matrix> = (0..n)
                .map(|w| {
                    let c: Vec<Vec<u32>> = star.homs[w].basis.iter().map(|psi| psi.part(v).mul_vec(&x)).collect();
                    Matrix::from_columns(f, pv.dim_at(w), &c)
                })
                .collect();
            let theta = ModuleMap::new(&star.module, &pv, theta_parts)?;
            cols.push(double.homs[v].coords(&theta).expect("lies in the hom space"));
        }
        parts.push(Matrix::from_columns(f, double.module.dim_at(v), &cols));
    }
    let ev = ModuleMap::new(m, &double.module, parts)?;
    Ok(Evaluation { star, double, ev })
}

/// Least `i` with `Ext^i(m, P) ≠ 0` for an indecomposable projective `P`.
pub fn grade(m: &Module, projectives: &[Module], cutoff: usize) -> Bounded {
    for i in 0..=cutoff {
        if projectives.iter().any(|p| ext_dim(i, m, p) != 0) {
            return Bounded::Exactly(i);
        }
    }
    Bounded::AtLeast(cutoff + 1)
}

/// Per-vertex dimensions in `0 -> Ext¹(TrF, A^op) -> F -> F** -> Ext²(TrF, A^op) -> 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbSequence {
    pub ker: Vec<usize>,
    pub ext1: Vec<usize>,
    pub coker: Vec<usize>,
    pub ext2: Vec<usize>,
    pub projective: bool,
    pub ev_iso: bool,
}

impl AbSequence {
    pub fn exact(&self) -> bool {
        self.ker == self.ext1 && self.coker == self.ext2
    }
}

pub fn ab_sequence(m: &Module) -> Result<AbSequence> {
    let op = m.alg().op();
    let ev = evaluation_map(m)?;
    let tr = transpose_with(m, &op);
    let n = m.alg().num_vertices();
    let ps: Vec<Module> = (0..n).map(|v| projective(&op, v)).collect();
    let mut out = AbSequence {
        ker: Vec::new(),
        ext1: Vec::new(),
        coker: Vec::new(),
        ext2: Vec::new(),
        projective: is_projective(m),
        ev_iso: ev.ev.is_iso(),
    };
    for (v, p) in ps.iter().enumerate() {
        let r = ev.ev.part(v).rank();
        out.ker.push(m.dim_at(v) - r);
        out.coker.push(ev.double.module.dim_at(v) - r);
        out.ext1.push(ext_dim(1, &tr, p));
        out.ext2.push(ext_dim(2, &tr, p));
    }
    Ok(out)
}
