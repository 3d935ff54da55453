use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{FieldPrime, Matrix};
use std::fmt;
use std::sync::Arc;

struct Inner {
    alg: Arc<Algebra>,
    dims: Vec<usize>,
    /// Action of every basis element `b: src -> tgt`, a `dims[tgt] x dims[src]` matrix.
    act: Vec<Matrix>,
}

/// A finite-dimensional right module, stored as vector spaces at vertices with
/// basis-element actions. `M_{xy} = M_y M_x`.
#[derive(Clone)]
pub struct Module(Arc<Inner>);

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module{:?}", self.dims())
    }
}

impl PartialEq for Module {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (Algebra::same(&self.0.alg, &other.0.alg) && self.0.dims == other.0.dims && self.0.act == other.0.act)
    }
}

impl Eq for Module {}

fn word_action(alg: &Algebra, dims: &[usize], gen_act: &dyn Fn(usize) -> Matrix, w: &[usize]) -> Matrix {
    let f = alg.field();
    let mut m = Matrix::identity(f, dims[alg.src(w[0])]);
    for &g in w {
        m = gen_act(g).mul(&m);
    }
    m
}

impl Module {
    /// Builds a module from generator actions, checking all relations.
    pub fn from_generators(alg: &Arc<Algebra>, dims: Vec<usize>, gens: &[Matrix]) -> Result<Module> {
        if dims.len() != alg.num_vertices() || gens.len() != alg.generators().len() {
            return Err(Error::InvalidModule("wrong number of vertices or generators".into()));
        }
        let f = alg.field();
        let mut gen_mat: Vec<Option<Matrix>> = vec![None; alg.dim()];
        for (k, &g) in alg.generators().iter().enumerate() {
            let m = &gens[k];
            if m.rows() != dims[alg.tgt(g)] || m.cols() != dims[alg.src(g)] || m.field() != f {
                return Err(Error::InvalidModule(format!("generator {} has the wrong shape", alg.label(g))));
            }
            gen_mat[g] = Some(m.clone());
        }
        let ga = |g: usize| gen_mat[g].clone().expect("generator");
        let mut act = Vec::with_capacity(alg.dim());
        for b in 0..alg.dim() {
            let (s, t) = (alg.src(b), alg.tgt(b));
            if !alg.is_radical(b) {
                act.push(Matrix::identity(f, dims[s]));
            } else if let Some(m) = &gen_mat[b] {
                act.push(m.clone());
            } else {
                let mut m = Matrix::zeros(f, dims[t], dims[s]);
                for (w, c) in alg.words(b) {
                    m.axpy(*c, &word_action(alg, &dims, &ga, w));
                }
                act.push(m);
            }
        }
        let m = Module(Arc::new(Inner { alg: alg.clone(), dims, act }));
        m.check_relations()?;
        Ok(m)
    }

    pub(crate) fn from_actions_unchecked(alg: &Arc<Algebra>, dims: Vec<usize>, act: Vec<Matrix>) -> Module {
        debug_assert_eq!(act.len(), alg.dim());
        Module(Arc::new(Inner { alg: alg.clone(), dims, act }))
    }

    pub fn from_actions(alg: &Arc<Algebra>, dims: Vec<usize>, act: Vec<Matrix>) -> Result<Module> {
        if act.len() != alg.dim() || dims.len() != alg.num_vertices() {
            return Err(Error::InvalidModule("wrong number of actions".into()));
        }
        for (b, m) in act.iter().enumerate() {
            if m.rows() != dims[alg.tgt(b)] || m.cols() != dims[alg.src(b)] {
                return Err(Error::InvalidModule(format!("action of {} has the wrong shape", alg.label(b))));
            }
        }
        let m = Module::from_actions_unchecked(alg, dims, act);
        m.check_relations()?;
        Ok(m)
    }

    /// Every product `x y = sum c_z z` must act as `M_y M_x = sum c_z M_z`.
    pub fn check_relations(&self) -> Result<()> {
        let alg = self.alg();
        let f = alg.field();
        let n = alg.dim();
        for (v, &e) in alg.idempotents().iter().enumerate() {
            if self.act(e) != &Matrix::identity(f, self.dims()[v]) {
                return Err(Error::InvalidModule("idempotent must act as identity".into()));
            }
        }
        for x in 0..n {
            for y in 0..n {
                if alg.tgt(x) != alg.src(y) {
                    continue;
                }
                let lhs = self.act(y).mul(self.act(x));
                let mut rhs = Matrix::zeros(f, lhs.rows(), lhs.cols());
                for &(z, c) in alg.mul_basis(x, y) {
                    rhs.axpy(c, self.act(z));
                }
                if lhs != rhs {
                    return Err(Error::InvalidModule(format!(
                        "relation fails for {}*{}",
                        alg.label(x),
                        alg.label(y)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn zero(alg: &Arc<Algebra>) -> Module {
        let f = alg.field();
        let act = (0..alg.dim()).map(|_| Matrix::zeros(f, 0, 0)).collect();
        Module::from_actions_unchecked(alg, vec![0; alg.num_vertices()], act)
    }

    pub fn alg(&self) -> &Arc<Algebra> {
        &self.0.alg
    }

    pub fn field(&self) -> FieldPrime {
        self.0.alg.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.0.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.0.dims[v]
    }

    pub fn dim(&self) -> usize {
        self.0.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn act(&self, b: usize) -> &Matrix {
        &self.0.act[b]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.0.act
    }

    /// Action of an algebra element `a` restricted to `M_i -> M_j`.
    pub fn act_elem(&self, a: &[u32], i: usize, j: usize) -> Matrix {
        let alg = self.alg();
        let mut m = Matrix::zeros(self.field(), self.dim_at(j), self.dim_at(i));
        for (b, &c) in a.iter().enumerate() {
            if c != 0 && alg.src(b) == i && alg.tgt(b) == j {
                m.axpy(c, self.act(b));
            }
        }
        m
    }

    pub fn same_alg(&self, other: &Module) -> bool {
        Algebra::same(self.alg(), other.alg())
    }

    /// Offsets of each vertex block in the flattened total space.
    pub fn offsets(&self) -> Vec<usize> {
        let mut o = Vec::with_capacity(self.dims().len() + 1);
        let mut s = 0;
        for &d in self.dims() {
            o.push(s);
            s += d;
        }
        o.push(s);
        o
    }

    /// Change of basis by invertible per-vertex matrices `g_v`: the new module
    /// has actions `g_j M_x g_i^{-1}`, and `g` becomes an isomorphism onto it.
    pub fn transport(&self, g: &[Matrix]) -> Result<(Module, ModuleMap)> {
        let alg = self.alg();
        let mut inv = Vec::new();
        for (v, m) in g.iter().enumerate() {
            if m.rows() != self.dim_at(v) {
                return Err(Error::DimensionMismatch("transport".into()));
            }
            inv.push(m.inverse().ok_or_else(|| Error::Precondition("transport needs invertible matrices".into()))?);
        }
        let act = (0..alg.dim())
            .map(|b| g[alg.tgt(b)].mul(self.act(b)).mul(&inv[alg.src(b)]))
            .collect();
        let n = Module::from_actions_unchecked(alg, self.dims().to_vec(), act);
        let iso = ModuleMap::new_unchecked(self, &n, g.to_vec());
        Ok((n, iso))
    }

    /// Linear dual, a module over the opposite algebra `op`.
    pub fn dual(&self, op: &Arc<Algebra>) -> Module {
        let act = self.actions().iter().map(|m| m.transpose()).collect();
        Module::from_actions_unchecked(op, self.dims().to_vec(), act)
    }

    pub fn dual_default(&self) -> Module {
        self.dual(&self.alg().op())
    }

    pub fn describe(&self) -> String {
        format!("{:?}", self.dims())
    }
}

/// A module homomorphism, stored as per-vertex matrices `tgt_v x src_v`.
#[derive(Clone, PartialEq, Eq)]
pub struct ModuleMap {
    src: Module,
    tgt: Module,
    parts: Vec<Matrix>,
}

impl fmt::Debug for ModuleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleMap({:?} -> {:?}, {:?})", self.src.dims(), self.tgt.dims(), self.parts)
    }
}

impl ModuleMap {
    pub fn new(src: &Module, tgt: &Module, parts: Vec<Matrix>) -> Result<ModuleMap> {
        if !src.same_alg(tgt) {
            return Err(Error::AlgebraMismatch);
        }
        if parts.len() != src.dims().len() {
            return Err(Error::DimensionMismatch("map needs one matrix per vertex".into()));
        }
        for (v, m) in parts.iter().enumerate() {
            if m.rows() != tgt.dim_at(v) || m.cols() != src.dim_at(v) {
                return Err(Error::DimensionMismatch(format!("map block at vertex {v}")));
            }
        }
        let f = ModuleMap { src: src.clone(), tgt: tgt.clone(), parts };
        if !f.is_homomorphism() {
            return Err(Error::InvalidModule("map does not commute with the action".into()));
        }
        Ok(f)
    }

    pub(crate) fn new_unchecked(src: &Module, tgt: &Module, parts: Vec<Matrix>) -> ModuleMap {
        debug_assert!(parts.iter().enumerate().all(|(v, m)| m.rows() == tgt.dim_at(v) && m.cols() == src.dim_at(v)));
        ModuleMap { src: src.clone(), tgt: tgt.clone(), parts }
    }

    pub fn is_homomorphism(&self) -> bool {
        let alg = self.src.alg();
        alg.generators().iter().all(|&g| {
            let (i, j) = (alg.src(g), alg.tgt(g));
            self.parts[j].mul(self.src.act(g)) == self.tgt.act(g).mul(&self.parts[i])
        })
    }

    pub fn zero(src: &Module, tgt: &Module) -> ModuleMap {
        let f = src.field();
        let parts = (0..src.dims().len()).map(|v| Matrix::zeros(f, tgt.dim_at(v), src.dim_at(v))).collect();
        ModuleMap::new_unchecked(src, tgt, parts)
    }

    pub fn identity(m: &Module) -> ModuleMap {
        let f = m.field();
        let parts = m.dims().iter().map(|&d| Matrix::identity(f, d)).collect();
        ModuleMap::new_unchecked(m, m, parts)
    }

    pub fn src(&self) -> &Module {
        &self.src
    }

    pub fn tgt(&self) -> &Module {
        &self.tgt
    }

    pub fn parts(&self) -> &[Matrix] {
        &self.parts
    }

    pub fn part(&self, v: usize) -> &Matrix {
        &self.parts[v]
    }

    /// `self ∘ g`
    pub fn compose(&self, g: &ModuleMap) -> ModuleMap {
        assert!(g.tgt.dims() == self.src.dims(), "compose: {:?} after {:?}", self.src.dims(), g.tgt.dims());
        let parts = self.parts.iter().zip(&g.parts).map(|(a, b)| a.mul(b)).collect();
        ModuleMap::new_unchecked(&g.src, &self.tgt, parts)
    }

    pub fn add(&self, g: &ModuleMap) -> ModuleMap {
        let parts = self.parts.iter().zip(&g.parts).map(|(a, b)| a.add(b)).collect();
        ModuleMap::new_unchecked(&self.src, &self.tgt, parts)
    }

    pub fn sub(&self, g: &ModuleMap) -> ModuleMap {
        let parts = self.parts.iter().zip(&g.parts).map(|(a, b)| a.sub(b)).collect();
        ModuleMap::new_unchecked(&self.src, &self.tgt, parts)
    }

    pub fn scale(&self, c: u32) -> ModuleMap {
        let parts = self.parts.iter().map(|a| a.scale(c)).collect();
        ModuleMap::new_unchecked(&self.src, &self.tgt, parts)
    }

    pub fn neg(&self) -> ModuleMap {
        self.scale(self.src.field().p() - 1)
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|m| m.is_zero())
    }

    pub fn rank(&self) -> usize {
        self.parts.iter().map(|m| m.rank()).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.src.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.tgt.dim()
    }

    pub fn is_iso(&self) -> bool {
        self.src.dim() == self.tgt.dim() && self.is_injective()
    }

    pub fn inverse(&self) -> Option<ModuleMap> {
        let parts: Option<Vec<Matrix>> = self.parts.iter().map(|m| m.inverse()).collect();
        Some(ModuleMap::new_unchecked(&self.tgt, &self.src, parts?))
    }

    /// Replace the endpoints by modules with identical structure.
    pub fn with_ends(&self, src: &Module, tgt: &Module) -> ModuleMap {
        assert_eq!(src.dims(), self.src.dims());
        assert_eq!(tgt.dims(), self.tgt.dims());
        ModuleMap::new_unchecked(src, tgt, self.parts.clone())
    }

    /// Concatenated row-major entries of all vertex blocks.
    pub fn flatten(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for m in &self.parts {
            out.extend_from_slice(m.data());
        }
        out
    }

    pub fn from_flat(src: &Module, tgt: &Module, v: &[u32]) -> ModuleMap {
        let f = src.field();
        let mut parts = Vec::new();
        let mut off = 0;
        for w in 0..src.dims().len() {
            let (r, c) = (tgt.dim_at(w), src.dim_at(w));
            parts.push(Matrix::from_vec(f, r, c, v[off..off + r * c].to_vec()));
            off += r * c;
        }
        ModuleMap::new_unchecked(src, tgt, parts)
    }

    /// Dual map `D(tgt) -> D(src)` over the opposite algebra.
    pub fn dual(&self, dsrc: &Module, dtgt: &Module) -> ModuleMap {
        // dsrc = D(self.tgt), dtgt = D(self.src)
        ModuleMap::new_unchecked(dsrc, dtgt, self.parts.iter().map(|m| m.transpose()).collect())
    }

    /// Block-diagonal matrix on the total space.
    pub fn total(&self) -> Matrix {
        let f = self.src.field();
        let mut m = Matrix::zeros(f, self.tgt.dim(), self.src.dim());
        let (so, to) = (self.src.offsets(), self.tgt.offsets());
        for (v, p) in self.parts.iter().enumerate() {
            m.set_block(to[v], so[v], p);
        }
        m
    }

    pub fn from_total(src: &Module, tgt: &Module, m: &Matrix) -> ModuleMap {
        let (so, to) = (src.offsets(), tgt.offsets());
        let parts = (0..src.dims().len())
            .map(|v| m.block(to[v], so[v], tgt.dim_at(v), src.dim_at(v)))
            .collect();
        ModuleMap::new_unchecked(src, tgt, parts)
    }
}

/// A direct sum with its structure maps.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: Module,
    pub summands: Vec<Module>,
    /// `offsets[k][v]`: start of summand `k` inside vertex `v`.
    pub offsets: Vec<Vec<usize>>,
}

impl DirectSum {
    pub fn new(alg: &Arc<Algebra>, summands: &[Module]) -> DirectSum {
        let f = alg.field();
        let nv = alg.num_vertices();
        let mut dims = vec![0; nv];
        let mut offsets = Vec::new();
        for s in summands {
            offsets.push(dims.clone());
            for v in 0..nv {
                dims[v] += s.dim_at(v);
            }
        }
        let act = (0..alg.dim())
            .map(|b| {
                let (i, j) = (alg.src(b), alg.tgt(b));
                let mut m = Matrix::zeros(f, dims[j], dims[i]);
                for (k, s) in summands.iter().enumerate() {
                    m.set_block(offsets[k][j], offsets[k][i], s.act(b));
                }
                m
            })
            .collect();
        DirectSum {
            module: Module::from_actions_unchecked(alg, dims, act),
            summands: summands.to_vec(),
            offsets,
        }
    }

    pub fn incl(&self, k: usize) -> ModuleMap {
        let f = self.module.field();
        let s = &self.summands[k];
        let parts = (0..s.dims().len())
            .map(|v| {
                let mut m = Matrix::zeros(f, self.module.dim_at(v), s.dim_at(v));
                m.set_block(self.offsets[k][v], 0, &Matrix::identity(f, s.dim_at(v)));
                m
            })
            .collect();
        ModuleMap::new_unchecked(s, &self.module, parts)
    }

    pub fn proj(&self, k: usize) -> ModuleMap {
        let f = self.module.field();
        let s = &self.summands[k];
        let parts = (0..s.dims().len())
            .map(|v| {
                let mut m = Matrix::zeros(f, s.dim_at(v), self.module.dim_at(v));
                m.set_block(0, self.offsets[k][v], &Matrix::identity(f, s.dim_at(v)));
                m
            })
            .collect();
        ModuleMap::new_unchecked(&self.module, s, parts)
    }

    /// Map `self -> tgt` from components `blocks[k][l]: self_l -> tgt_k`.
    pub fn assemble(&self, tgt: &DirectSum, blocks: &[Vec<ModuleMap>]) -> ModuleMap {
        let f = self.module.field();
        let nv = self.module.dims().len();
        let mut parts: Vec<Matrix> =
            (0..nv).map(|v| Matrix::zeros(f, tgt.module.dim_at(v), self.module.dim_at(v))).collect();
        for (k, row) in blocks.iter().enumerate() {
            for (l, b) in row.iter().enumerate() {
                for v in 0..nv {
                    parts[v].set_block(tgt.offsets[k][v], self.offsets[l][v], b.part(v));
                }
            }
        }
        ModuleMap::new_unchecked(&self.module, &tgt.module, parts)
    }

    /// Map `self -> y` from components `maps[l]: self_l -> y`.
    pub fn copair(&self, y: &Module, maps: &[ModuleMap]) -> ModuleMap {
        let mut acc = ModuleMap::zero(&self.module, y);
        for (l, m) in maps.iter().enumerate() {
            acc = acc.add(&m.compose(&self.proj(l)));
        }
        acc
    }

    /// Map `x -> self` from components `maps[k]: x -> self_k`.
    pub fn pair(&self, x: &Module, maps: &[ModuleMap]) -> ModuleMap {
        let mut acc = ModuleMap::zero(x, &self.module);
        for (k, m) in maps.iter().enumerate() {
            acc = acc.add(&self.incl(k).compose(m));
        }
        acc
    }
}

/// A submodule or quotient, with its structure map and per-vertex data.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub module: Module,
    pub proj: ModuleMap,
    /// `section[v]` lifts quotient coordinates: `proj_v * section_v = 1`.
    pub section: Vec<Matrix>,
}

/// Submodule spanned at each vertex by the columns of `basis[v]`
/// (columns independent and the family action-stable).
pub fn submodule(m: &Module, basis: &[Matrix]) -> Result<(Module, ModuleMap)> {
    let alg = m.alg();
    let mut act = Vec::with_capacity(alg.dim());
    for b in 0..alg.dim() {
        let (i, j) = (alg.src(b), alg.tgt(b));
        let image = m.act(b).mul(&basis[i]);
        let x = basis[j]
            .solve_right(&image)
            .map_err(|_| Error::InvalidModule("subspace family is not a submodule".into()))?;
        act.push(x);
    }
    let dims = basis.iter().map(|u| u.cols()).collect();
    let s = Module::from_actions_unchecked(alg, dims, act);
    let incl = ModuleMap::new_unchecked(&s, m, basis.to_vec());
    Ok((s, incl))
}

/// Quotient by the submodule spanned by the columns of `basis[v]`.
pub fn quotient(m: &Module, basis: &[Matrix]) -> Result<Quotient> {
    let alg = m.alg();
    let f = m.field();
    let nv = m.dims().len();
    let mut section = Vec::with_capacity(nv);
    let mut projm = Vec::with_capacity(nv);
    for v in 0..nv {
        let u = basis[v].column_space();
        let comp = u.complement_indices();
        let cm = Matrix::identity(f, m.dim_at(v)).select_columns(&comp);
        let full = u.hstack(&cm);
        let inv = full.inverse().expect("complement completes a basis");
        projm.push(inv.block(u.cols(), 0, comp.len(), m.dim_at(v)));
        section.push(cm);
    }
    let mut act = Vec::with_capacity(alg.dim());
    for b in 0..alg.dim() {
        let (i, j) = (alg.src(b), alg.tgt(b));
        act.push(projm[j].mul(m.act(b)).mul(&section[i]));
    }
    let dims = section.iter().map(|c| c.cols()).collect();
    let q = Module::from_actions_unchecked(alg, dims, act);
    // kernel of the projection must be action-stable
    for b in 0..alg.dim() {
        let (i, j) = (alg.src(b), alg.tgt(b));
        let image = projm[j].mul(m.act(b)).mul(&basis[i]);
        if !image.is_zero() {
            return Err(Error::InvalidModule("subspace family is not a submodule".into()));
        }
    }
    let proj = ModuleMap::new_unchecked(m, &q, projm);
    Ok(Quotient { module: q, proj, section })
}

impl Quotient {
    /// The map `Q -> y` induced by `h: M -> y` vanishing on the kernel.
    pub fn factor(&self, h: &ModuleMap) -> ModuleMap {
        let parts = h.parts().iter().zip(&self.section).map(|(a, s)| a.mul(s)).collect();
        ModuleMap::new_unchecked(&self.module, h.tgt(), parts)
    }
}

/// Kernel, image and cokernel of a map.
#[derive(Clone, Debug)]
pub struct MapParts {
    pub kernel: Module,
    pub kernel_incl: ModuleMap,
    pub image: Module,
    pub epi_part: ModuleMap,
    pub mono_part: ModuleMap,
    pub cokernel: Quotient,
}

pub fn kernel(f: &ModuleMap) -> (Module, ModuleMap) {
    let basis: Vec<Matrix> = f.parts().iter().map(|m| m.kernel_basis()).collect();
    submodule(f.src(), &basis).expect("kernels are submodules")
}

pub fn image(f: &ModuleMap) -> (Module, ModuleMap, ModuleMap) {
    let basis: Vec<Matrix> = f.parts().iter().map(|m| m.column_space()).collect();
    let (im, mono) = submodule(f.tgt(), &basis).expect("images are submodules");
    let epi_parts = f
        .parts()
        .iter()
        .zip(&basis)
        .map(|(m, u)| u.solve_right(m).expect("map lands in its image"))
        .collect();
    let epi = ModuleMap::new_unchecked(f.src(), &im, epi_parts);
    (im, epi, mono)
}

pub fn cokernel(f: &ModuleMap) -> Quotient {
    let basis: Vec<Matrix> = f.parts().iter().map(|m| m.column_space()).collect();
    quotient(f.tgt(), &basis).expect("images are submodules")
}

pub fn map_parts(f: &ModuleMap) -> MapParts {
    let (kernel, kernel_incl) = kernel(f);
    let (image, epi_part, mono_part) = image(f);
    let cokernel = cokernel(f);
    MapParts { kernel, kernel_incl, image, epi_part, mono_part, cokernel }
}

/// `x` with `f ∘ x = g`, if one exists (no homomorphism check on `x`).
pub fn solve_through(f: &ModuleMap, g: &ModuleMap) -> Option<ModuleMap> {
    let parts: Option<Vec<Matrix>> = f.parts().iter().zip(g.parts()).map(|(a, b)| a.solve_right(b).ok()).collect();
    Some(ModuleMap::new_unchecked(g.src(), f.src(), parts?))
}
