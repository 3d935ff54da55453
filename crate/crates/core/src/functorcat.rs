//! `C = add(M)` and `mod Γ` for `Γ = End(M)`: the Yoneda functor `Hom(M, -)`,
//! its inverse on projectives, and the left adjoint `L`.
//!
//! A `Λ`-map `M_i -> M_j` is the `Γ` basis element with tags `(src, tgt) = (j, i)`;
//! the product `x·y` in `Γ` is the composite `x ∘ y`.

use crate::algebra::{Algebra, Elem};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::repmod::ar::{radical_of_end, Indecomposables};
use crate::repmod::decompose::{are_isomorphic_indecomposables, decompose, end_structure, is_isomorphic, EndStructure};
use crate::repmod::ext::{ExtSpace, SyzygyData};
use crate::repmod::hom::{hom_space, HomSpace};
use crate::repmod::module::{cokernel, DirectSum, Module, ModuleMap, Quotient};
use crate::repmod::presentation::{is_projective, minimal_presentation, projective_cover, Presentation};
use crate::repmod::standard::{lift_from_projective, projective_sum, ProjMap};
use std::sync::Arc;

/// Additive closure of a list of pairwise non-isomorphic indecomposables.
#[derive(Clone, Debug)]
pub struct CategorySpec {
    pub alg: Arc<Algebra>,
    pub summands: Vec<Module>,
    pub contains_projectives: bool,
    /// Checked on sequences with indecomposable end terms.
    pub extension_closed: bool,
}

const EXTENSION_POINT_LIMIT: u64 = 1 << 12;

impl CategorySpec {
    pub fn new(alg: &Arc<Algebra>, summands: Vec<Module>) -> Result<CategorySpec> {
        for (i, m) in summands.iter().enumerate() {
            if !Algebra::same(m.alg(), alg) {
                return Err(Error::AlgebraMismatch);
            }
            if !matches!(end_structure(m), EndStructure::Local { .. }) {
                return Err(Error::InvalidModule(format!("summand {i} is not indecomposable with split local End")));
            }
            for n in &summands[..i] {
                if are_isomorphic_indecomposables(m, n) {
                    return Err(Error::InvalidModule(format!("summand {i} repeats an earlier summand")));
                }
            }
        }
        let mut spec = CategorySpec { alg: alg.clone(), summands, contains_projectives: false, extension_closed: false };
        spec.contains_projectives = (0..alg.num_vertices())
            .all(|v| spec.find(&crate::repmod::standard::projective(alg, v)).is_some());
        spec.extension_closed = spec.check_extension_closed();
        Ok(spec)
    }

    /// All of `mod Λ`, with the knitting ids as summand ids.
    pub fn from_indecomposables(ind: &Indecomposables) -> CategorySpec {
        CategorySpec {
            alg: ind.alg.clone(),
            summands: ind.modules.clone(),
            contains_projectives: true,
            extension_closed: true,
        }
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn find(&self, m: &Module) -> Option<usize> {
        self.summands.iter().position(|x| x.dims() == m.dims() && are_isomorphic_indecomposables(x, m))
    }

    /// Sorted summand ids of `m`, or `None` when `m ∉ add(M)`.
    pub fn ids_of(&self, m: &Module) -> Option<Vec<usize>> {
        let mut ids: Vec<usize> = decompose(m).iter().map(|s| self.find(&s.module)).collect::<Option<_>>()?;
        ids.sort();
        Some(ids)
    }

    /// An isomorphism `⊕ M_{ids} -> m` with `ids` sorted, when `m ∈ add(M)`.
    pub fn split(&self, m: &Module) -> Option<(Vec<usize>, DirectSum, ModuleMap)> {
        let mut parts: Vec<(usize, ModuleMap)> = Vec::new();
        for s in decompose(m) {
            let i = self.find(&s.module)?;
            let phi = is_isomorphic(&self.summands[i], &s.module)?;
            parts.push((i, s.incl.compose(&phi)));
        }
        parts.sort_by_key(|x| x.0);
        let ids: Vec<usize> = parts.iter().map(|x| x.0).collect();
        let sum = self.sum_of(&ids);
        let maps: Vec<ModuleMap> = parts.into_iter().map(|x| x.1).collect();
        let iso = sum.copair(m, &maps);
        Some((ids, sum, iso))
    }

    /// `⊕ M_{ids_k}` in `mod Λ`.
    pub fn sum_of(&self, ids: &[usize]) -> DirectSum {
        let ms: Vec<Module> = ids.iter().map(|&i| self.summands[i].clone()).collect();
        DirectSum::new(&self.alg, &ms)
    }

    pub fn contains(&self, m: &Module) -> bool {
        self.ids_of(m).is_some()
    }

    fn check_extension_closed(&self) -> bool {
        let f = self.alg.field();
        for z in &self.summands {
            let syz = SyzygyData::new(z);
            for a in &self.summands {
                let Ok(ext) = ExtSpace::new(&syz, a) else { return false };
                let d = ext.dim();
                if d == 0 {
                    continue;
                }
                let points = projective_points(f.p(), d, EXTENSION_POINT_LIMIT);
                for c in points {
                    if !self.contains(ext.realize(&c).middle()) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Representatives of the points of `P^{d-1}(GF(p))` (last nonzero coordinate 1),
/// or the standard basis when there are more than `limit`.
pub fn projective_points(p: u32, d: usize, limit: u64) -> Vec<Vec<u32>> {
    let total = (p as u64).checked_pow(d as u32).filter(|&t| t <= limit);
    let Some(total) = total else {
        return (0..d)
            .map(|k| {
                let mut e = vec![0; d];
                e[k] = 1;
                e
            })
            .collect();
    };
    let mut out = Vec::new();
    let mut c = vec![0u32; d];
    for _ in 1..total {
        for x in c.iter_mut() {
            *x += 1;
            if *x < p {
                break;
            }
            *x = 0;
        }
        if c.iter().rev().find(|&&x| x != 0) == Some(&1) {
            out.push(c.clone());
        }
    }
    out
}

/// `Γ = End(⊕ M_i)` with its basis dictionary.
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    pub spec: CategorySpec,
    pub gamma: Arc<Algebra>,
    /// `Γ` basis element -> `Λ`-map between summands.
    pub dictionary: Vec<ModuleMap>,
    /// `blocks[i][j]`: `Γ` basis indices of the maps `M_i -> M_j`, in basis order.
    pub blocks: Vec<Vec<Vec<usize>>>,
    spaces: Vec<Vec<HomSpace>>,
}

pub fn end_algebra(spec: &CategorySpec) -> Result<EndAlgebra> {
    let n = spec.len();
    let alg = &spec.alg;
    let f = alg.field();
    let ms = &spec.summands;
    let mut spaces: Vec<Vec<HomSpace>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let hs = hom_space(&ms[i], &ms[j])?;
            if i != j {
                if hs.basis.iter().any(|b| b.is_iso()) {
                    return Err(Error::InvalidAlgebra(format!("summands {i} and {j} are isomorphic")));
                }
                row.push(hs);
                continue;
            }
            let rad = radical_of_end(&ms[i]);
            if rad.len() + 1 != hs.dim() {
                return Err(Error::InvalidAlgebra(format!("End of summand {i} is not split local")));
            }
            let mut basis = vec![ModuleMap::identity(&ms[i])];
            basis.extend(rad);
            row.push(HomSpace::with_basis(&ms[i], &ms[i], basis));
        }
        spaces.push(row);
    }
    let mut labels = Vec::new();
    let mut src = Vec::new();
    let mut tgt = Vec::new();
    let mut dictionary = Vec::new();
    let mut blocks = vec![vec![Vec::new(); n]; n];
    let mut radical = Vec::new();
    for i in 0..n {
        labels.push(format!("e{}", i + 1));
        src.push(i);
        tgt.push(i);
        dictionary.push(spaces[i][i].basis[0].clone());
        blocks[i][i].push(i);
    }
    for i in 0..n {
        for j in 0..n {
            let skip = usize::from(i == j);
            for (k, b) in spaces[i][j].basis.iter().enumerate().skip(skip) {
                let idx = labels.len();
                labels.push(format!("f{}_{}_{}", i + 1, j + 1, k + 1 - skip));
                src.push(j);
                tgt.push(i);
                dictionary.push(b.clone());
                blocks[i][j].push(idx);
                radical.push(idx);
            }
        }
    }
    let dim = labels.len();
    // Λ-map of basis element b: M_{tgt b} -> M_{src b}
    let mut table = vec![Vec::new(); dim * dim];
    for x in 0..dim {
        for y in 0..dim {
            if tgt[x] != src[y] {
                continue;
            }
            let (a, c) = (src[x], tgt[y]);
            let comp = dictionary[x].compose(&dictionary[y]);
            let coords = spaces[c][a].coords(&comp).expect("composite lies in the hom space");
            table[x * dim + y] = coords
                .iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(k, &v)| (blocks[c][a][k], v))
                .collect();
        }
    }
    let gamma = Algebra::new(
        f,
        (0..n).map(|i| format!("M{i}")).collect(),
        labels,
        src,
        tgt,
        table,
        (0..n).collect(),
        radical,
    )?;
    let report = gamma.validate();
    if !report.passed() {
        return Err(Error::InvalidAlgebra(format!("End algebra failed validation: {}", report.failures().iter().map(|i| i.name.as_str()).collect::<Vec<_>>().join("; "))));
    }
    Ok(EndAlgebra { spec: spec.clone(), gamma, dictionary, blocks, spaces })
}

/// `Hom(M, x)` as a right `Γ`-module, with the hom-space bases used.
#[derive(Clone, Debug)]
pub struct Yoneda {
    pub x: Module,
    pub homs: Vec<HomSpace>,
    pub module: Module,
}

/// A `Γ`-module with its minimal presentation transported to `f: X -> Y` in `add(M)`.
#[derive(Clone, Debug)]
pub struct FunctorObject {
    pub module: Module,
    pub pres: Presentation,
    pub x: DirectSum,
    pub y: DirectSum,
    pub f: ModuleMap,
}

impl FunctorObject {
    pub fn x_ids(&self) -> &[usize] {
        self.pres.p1()
    }

    pub fn y_ids(&self) -> &[usize] {
        self.pres.p0()
    }
}

/// `unyoneda` of a map between projective `Γ`-modules, with the identifications used.
#[derive(Clone, Debug)]
pub struct Unyoneda {
    pub src_ids: Vec<usize>,
    pub tgt_ids: Vec<usize>,
    pub src: DirectSum,
    pub tgt: DirectSum,
    pub map: ModuleMap,
    /// `⊕ e_l Γ -> g.src`
    pub src_iso: ModuleMap,
    pub tgt_iso: ModuleMap,
}

impl EndAlgebra {
    pub fn n(&self) -> usize {
        self.spec.len()
    }

    pub fn summand(&self, i: usize) -> &Module {
        &self.spec.summands[i]
    }

    /// Dictionary basis of `Hom(M_i, M_j)`.
    pub fn hom(&self, i: usize, j: usize) -> &HomSpace {
        &self.spaces[i][j]
    }

    /// `⊕ M_{ids_k}` in `mod Λ`.
    pub fn sum_of(&self, ids: &[usize]) -> DirectSum {
        self.spec.sum_of(ids)
    }

    /// The `Γ` element of a map `M_i -> M_j`.
    pub fn elem_of(&self, i: usize, j: usize, g: &ModuleMap) -> Elem {
        let mut e = vec![0u32; self.gamma.dim()];
        let c = self.spaces[i][j].coords(&g.with_ends(self.summand(i), self.summand(j))).expect("map between summands");
        for (k, &v) in c.iter().enumerate() {
            e[self.blocks[i][j][k]] = v;
        }
        e
    }

    /// The `Λ`-map `M_i -> M_j` of an element of `e_j Γ e_i`.
    pub fn map_of(&self, i: usize, j: usize, e: &[u32]) -> ModuleMap {
        let mut acc = ModuleMap::zero(self.summand(i), self.summand(j));
        for &b in &self.blocks[i][j] {
            if e[b] != 0 {
                acc = acc.add(&self.dictionary[b].scale(e[b]));
            }
        }
        acc
    }

    /// `Hom(M, x)` without checking `x ∈ add(M)`.
    pub fn yoneda_unchecked(&self, x: &Module) -> Yoneda {
        let n = self.n();
        let homs: Vec<HomSpace> = (0..n).map(|i| hom_space(self.summand(i), x).expect("same algebra")).collect();
        let f = self.gamma.field();
        let dims: Vec<usize> = homs.iter().map(|h| h.dim()).collect();
        let act = (0..self.gamma.dim())
            .map(|b| {
                let (j, i) = (self.gamma.src(b), self.gamma.tgt(b));
                let d = &self.dictionary[b];
                let cols: Vec<Vec<u32>> =
                    homs[j].basis.iter().map(|phi| homs[i].coords(&phi.compose(d)).expect("composite")).collect();
                Matrix::from_columns(f, dims[i], &cols)
            })
            .collect();
        let module = Module::from_actions_unchecked(&self.gamma, dims, act);
        Yoneda { x: x.clone(), homs, module }
    }

    pub fn yoneda(&self, x: &Module) -> Result<Yoneda> {
        if !self.spec.contains(x) {
            return Err(Error::NotInCategory(format!("module {} is not in add(M)", x.describe())));
        }
        Ok(self.yoneda_unchecked(x))
    }

    /// `Hom(M, f): Hom(M, x) -> Hom(M, y)`.
    pub fn yoneda_map(&self, f: &ModuleMap, yx: &Yoneda, yy: &Yoneda) -> ModuleMap {
        let parts = (0..self.n())
            .map(|i| {
                let cols: Vec<Vec<u32>> = yx.homs[i]
                    .basis
                    .iter()
                    .map(|phi| yy.homs[i].coords(&f.with_ends(&yx.x, &yy.x).compose(phi)).expect("composite"))
                    .collect();
                Matrix::from_columns(self.gamma.field(), yy.homs[i].dim(), &cols)
            })
            .collect();
        ModuleMap::new_unchecked(&yx.module, &yy.module, parts)
    }

    /// `⊕ M_{src_l} -> ⊕ M_{tgt_k}` from a map between standard projective sums.
    pub fn unyoneda_proj(&self, g: &ProjMap) -> (DirectSum, DirectSum, ModuleMap) {
        let xs = self.sum_of(&g.src);
        let ys = self.sum_of(&g.tgt);
        let blocks: Vec<Vec<ModuleMap>> = (0..g.tgt.len())
            .map(|k| (0..g.src.len()).map(|l| self.map_of(g.src[l], g.tgt[k], &g.entries[k][l])).collect())
            .collect();
        let map = xs.assemble(&ys, &blocks);
        (xs, ys, map)
    }

    /// The map between standard projective sums whose `unyoneda` is `f: ⊕M_src -> ⊕M_tgt`.
    pub fn yoneda_proj(&self, f: &ModuleMap, src: &[usize], tgt: &[usize]) -> ProjMap {
        let xs = self.sum_of(src);
        let ys = self.sum_of(tgt);
        let f = f.with_ends(&xs.module, &ys.module);
        let entries = (0..tgt.len())
            .map(|k| {
                (0..src.len())
                    .map(|l| self.elem_of(src[l], tgt[k], &ys.proj(k).compose(&f).compose(&xs.incl(l))))
                    .collect()
            })
            .collect();
        ProjMap { alg: self.gamma.clone(), src: src.to_vec(), tgt: tgt.to_vec(), entries }
    }

    /// The map in `add(M)` whose Yoneda image is `g`, for `g` between projectives.
    pub fn unyoneda_map(&self, g: &ModuleMap) -> Result<Unyoneda> {
        if !Algebra::same(g.src().alg(), &self.gamma) {
            return Err(Error::AlgebraMismatch);
        }
        if !is_projective(g.src()) || !is_projective(g.tgt()) {
            return Err(Error::Precondition("unyoneda needs projective end terms".into()));
        }
        let cs = projective_cover(g.src());
        let ct = projective_cover(g.tgt());
        let t_inv = ct.map.inverse().expect("cover of a projective is an isomorphism");
        let g0 = t_inv.compose(g).compose(&cs.map).with_ends(&cs.sum.module, &ct.sum.module);
        let pm = ProjMap::from_module_map(&g0, &cs.sum, &cs.vertices, &ct.sum, &ct.vertices);
        let (src, tgt, map) = self.unyoneda_proj(&pm);
        Ok(Unyoneda {
            src_ids: cs.vertices.clone(),
            tgt_ids: ct.vertices.clone(),
            src,
            tgt,
            map,
            src_iso: cs.map,
            tgt_iso: ct.map,
        })
    }

    pub fn functor(&self, m: &Module) -> Result<FunctorObject> {
        if !Algebra::same(m.alg(), &self.gamma) {
            return Err(Error::AlgebraMismatch);
        }
        let pres = minimal_presentation(m);
        let (x, y, f) = self.unyoneda_proj(&pres.d_proj);
        Ok(FunctorObject { module: m.clone(), pres, x, y, f })
    }

    /// `L(F) = coker f` in `mod Λ`, with the quotient map from `Y`.
    pub fn localize(&self, fo: &FunctorObject) -> Quotient {
        cokernel(&fo.f)
    }

    pub fn localize_l(&self, m: &Module) -> Result<Module> {
        Ok(self.localize(&self.functor(m)?).module)
    }

    /// The map `L(P0(F)) -> L(P0(G))` lifting `η`, as a `Λ`-map `Y_F -> Y_G`.
    pub fn lift_top(&self, eta: &ModuleMap, a: &FunctorObject, b: &FunctorObject) -> ModuleMap {
        let ca = &a.pres.cover;
        let cb = &b.pres.cover;
        let target = eta.with_ends(&a.module, &b.module).compose(&ca.map);
        let eta0 = lift_from_projective(&ca.sum, &ca.vertices, &target, &cb.map).expect("projective lifting");
        let pm = ProjMap::from_module_map(&eta0, &ca.sum, &ca.vertices, &cb.sum, &cb.vertices);
        self.unyoneda_proj(&pm).2
    }

    /// `L(η): L(F) -> L(G)`.
    pub fn localize_map(&self, eta: &ModuleMap, a: &FunctorObject, b: &FunctorObject) -> (Quotient, Quotient, ModuleMap) {
        let la = self.localize(a);
        let lb = self.localize(b);
        let u = self.lift_top(eta, a, b);
        let map = la.factor(&lb.proj.compose(&u));
        (la, lb, map)
    }

    /// `⊕ e_{ids} Γ`, which is `yoneda(⊕ M_{ids})` in the dictionary basis.
    pub fn representable(&self, ids: &[usize]) -> DirectSum {
        projective_sum(&self.gamma, ids)
    }

    /// `dim Hom_Γ(yoneda M_i, yoneda M_j) = dim Hom_Λ(M_i, M_j)` for all pairs.
    pub fn fully_faithful(&self) -> bool {
        let ps: Vec<Module> = (0..self.n()).map(|i| crate::repmod::standard::projective(&self.gamma, i)).collect();
        (0..self.n()).all(|i| {
            (0..self.n()).all(|j| crate::repmod::hom::hom_dim(&ps[i], &ps[j]) == self.spaces[i][j].dim())
        })
    }
}
