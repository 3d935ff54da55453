use super::module::{DirectSum, Module, ModuleMap};
use crate::algebra::{Algebra, Elem};
use crate::linalg::Matrix;
use std::sync::Arc;

/// `P_v = e_v A`. At vertex `w` the basis is the basis elements of `e_v A e_w`
/// in increasing index order.
pub fn projective(alg: &Arc<Algebra>, v: usize) -> Module {
    let f = alg.field();
    let nv = alg.num_vertices();
    let start = alg.starting_at(v);
    let at: Vec<Vec<usize>> = (0..nv).map(|w| start.iter().copied().filter(|&b| alg.tgt(b) == w).collect()).collect();
    let pos = |b: usize| at[alg.tgt(b)].iter().position(|&x| x == b).expect("basis element of P_v");
    let dims: Vec<usize> = at.iter().map(|l| l.len()).collect();
    let act = (0..alg.dim())
        .map(|c| {
            let (i, j) = (alg.src(c), alg.tgt(c));
            let mut m = Matrix::zeros(f, dims[j], dims[i]);
            for (col, &b) in at[i].iter().enumerate() {
                for &(z, coef) in alg.mul_basis(b, c) {
                    m.set(pos(z), col, coef);
                }
            }
            m
        })
        .collect();
    Module::from_actions_unchecked(alg, dims, act)
}

pub fn simple(alg: &Arc<Algebra>, v: usize) -> Module {
    let f = alg.field();
    let mut dims = vec![0; alg.num_vertices()];
    dims[v] = 1;
    let act = (0..alg.dim())
        .map(|b| {
            let (i, j) = (alg.src(b), alg.tgt(b));
            if alg.is_radical(b) {
                Matrix::zeros(f, dims[j], dims[i])
            } else {
                Matrix::identity(f, dims[i])
            }
        })
        .collect();
    Module::from_actions_unchecked(alg, dims, act)
}

/// `I_v = D(e_v A^op)`.
pub fn injective(alg: &Arc<Algebra>, v: usize) -> Module {
    let op = alg.op();
    projective(&op, v).dual(alg)
}

pub struct StandardModules {
    pub simples: Vec<Module>,
    pub projectives: Vec<Module>,
    pub injectives: Vec<Module>,
}

pub fn standard_modules(alg: &Arc<Algebra>) -> StandardModules {
    let nv = alg.num_vertices();
    StandardModules {
        simples: (0..nv).map(|v| simple(alg, v)).collect(),
        projectives: (0..nv).map(|v| projective(alg, v)).collect(),
        injectives: (0..nv).map(|v| injective(alg, v)).collect(),
    }
}

/// `⊕ P_{v_k}` for a vertex list, as a direct sum.
pub fn projective_sum(alg: &Arc<Algebra>, vertices: &[usize]) -> DirectSum {
    let ps: Vec<Module> = vertices.iter().map(|&v| projective(alg, v)).collect();
    DirectSum::new(alg, &ps)
}

pub fn regular_module(alg: &Arc<Algebra>) -> Module {
    projective_sum(alg, &(0..alg.num_vertices()).collect::<Vec<_>>()).module
}

/// Position of basis element `b` inside vertex `tgt(b)` of `P_{src(b)}`.
pub fn proj_pos(alg: &Algebra, b: usize) -> usize {
    (0..b).filter(|&x| alg.src(x) == alg.src(b) && alg.tgt(x) == alg.tgt(b)).count()
}

/// The map `⊕ P_{v_k} -> y` sending the generator `e_{v_k}` to `images[k] ∈ y_{v_k}`.
pub fn map_from_generators(sum: &DirectSum, vertices: &[usize], y: &Module, images: &[Vec<u32>]) -> ModuleMap {
    let alg = y.alg();
    let f = y.field();
    let nv = alg.num_vertices();
    let mut parts: Vec<Matrix> = (0..nv).map(|w| Matrix::zeros(f, y.dim_at(w), sum.module.dim_at(w))).collect();
    for (k, &v) in vertices.iter().enumerate() {
        for b in alg.starting_at(v) {
            let w = alg.tgt(b);
            let col = sum.offsets[k][w] + proj_pos(alg, b);
            let img = y.act(b).mul_vec(&images[k]);
            for (r, &c) in img.iter().enumerate() {
                parts[w].set(r, col, c);
            }
        }
    }
    ModuleMap::new_unchecked(&sum.module, y, parts)
}

/// Image of the generator `e_{v_k}` under a map out of `⊕ P_{v_k}`.
pub fn generator_image(sum: &DirectSum, vertices: &[usize], f: &ModuleMap, k: usize) -> Vec<u32> {
    let alg = f.src().alg();
    let v = vertices[k];
    let col = sum.offsets[k][v] + proj_pos(alg, alg.idempotent(v));
    f.part(v).column(col)
}

/// Lift `g: ⊕P -> z` through a surjection-onto-its-image `p: e -> z`.
pub fn lift_from_projective(
    sum: &DirectSum,
    vertices: &[usize],
    g: &ModuleMap,
    p: &ModuleMap,
) -> Option<ModuleMap> {
    let mut images = Vec::new();
    for (k, &v) in vertices.iter().enumerate() {
        let want = Matrix::column_vector(g.src().field(), &generator_image(sum, vertices, g, k));
        let x = p.part(v).solve_right(&want).ok()?;
        images.push(x.column(0));
    }
    Some(map_from_generators(sum, vertices, p.src(), &images))
}

/// Matrix of algebra elements describing a map between sums of standard
/// projectives: entry `(k, l)` lies in `e_{tgt_k} A e_{src_l}` and the
/// component `P_{src_l} -> P_{tgt_k}` is left multiplication by it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjMap {
    pub alg: Arc<Algebra>,
    pub src: Vec<usize>,
    pub tgt: Vec<usize>,
    pub entries: Vec<Vec<Elem>>,
}

impl ProjMap {
    pub fn from_module_map(f: &ModuleMap, src_sum: &DirectSum, src: &[usize], tgt_sum: &DirectSum, tgt: &[usize]) -> ProjMap {
        let alg = f.src().alg().clone();
        let mut entries = vec![vec![vec![0u32; alg.dim()]; src.len()]; tgt.len()];
        for l in 0..src.len() {
            let img = generator_image(src_sum, src, f, l);
            let v = src[l];
            for (k, &t) in tgt.iter().enumerate() {
                for b in alg.between(t, v) {
                    let row = tgt_sum.offsets[k][v] + proj_pos(&alg, b);
                    entries[k][l][b] = img[row];
                }
            }
        }
        ProjMap { alg, src: src.to_vec(), tgt: tgt.to_vec(), entries }
    }

    pub fn to_module_map(&self, src_sum: &DirectSum, tgt_sum: &DirectSum) -> ModuleMap {
        let alg = &self.alg;
        let f = alg.field();
        let mut images = Vec::new();
        for l in 0..self.src.len() {
            let v = self.src[l];
            let mut img = vec![0u32; tgt_sum.module.dim_at(v)];
            for (k, &t) in self.tgt.iter().enumerate() {
                for b in alg.between(t, v) {
                    let row = tgt_sum.offsets[k][v] + proj_pos(alg, b);
                    img[row] = f.add(img[row], self.entries[k][l][b]);
                }
            }
            images.push(img);
        }
        map_from_generators(src_sum, &self.src, &tgt_sum.module, &images)
    }

    /// `Hom_A(-, A)` applied: a map over the opposite algebra in the reverse direction.
    pub fn transpose(&self, op: &Arc<Algebra>) -> ProjMap {
        let entries = (0..self.src.len())
            .map(|l| (0..self.tgt.len()).map(|k| self.entries[k][l].clone()).collect())
            .collect();
        ProjMap { alg: op.clone(), src: self.tgt.clone(), tgt: self.src.clone(), entries }
    }
}
