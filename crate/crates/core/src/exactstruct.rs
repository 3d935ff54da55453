//! Exact structures on `C = add(M)` as closed subbifunctors of `Ext¹`, stored
//! as one subspace of `Ext¹(M_z, M_a)` per ordered pair of summands.

use crate::error::{Error, Result};
use crate::functorcat::{projective_points, CategorySpec};
use crate::linalg::{canonical_span, in_span, FieldPrime, Matrix};
use crate::report::Report;
use crate::repmod::ar::radical_maps;
use crate::repmod::ext::{syzygy_lift, ExtSpace, ShortExactSeq, SyzygyData};
use crate::repmod::hom::{hom_space, HomSpace};
use crate::repmod::module::{DirectSum, ModuleMap};
use serde::Serialize;
use std::collections::BTreeSet;
use std::sync::Arc;

/// Largest projective space enumerated when checking composition closure.
pub const POINT_LIMIT: u64 = 1 << 14;

/// `Ext¹` between all summand pairs with the action of all basis maps.
#[derive(Clone, Debug)]
pub struct ExtTable {
    pub spec: Arc<CategorySpec>,
    pub syz: Vec<Arc<SyzygyData>>,
    /// `spaces[z][a] = Ext¹(M_z, M_a)`
    pub spaces: Vec<Vec<ExtSpace>>,
    /// `homs[a][b] = Hom(M_a, M_b)`
    pub homs: Vec<Vec<HomSpace>>,
    /// `push[z][a][b][k]`: pushout along the `k`-th basis map `M_a -> M_b`.
    push: Vec<Vec<Vec<Vec<Matrix>>>>,
    /// `pull[z][a][w][k]`: pullback along the `k`-th basis map `M_w -> M_z`.
    pull: Vec<Vec<Vec<Vec<Matrix>>>>,
    /// Almost split classes: `(τ id, class)` per summand.
    pub ar: Vec<Option<(usize, Vec<u32>)>>,
}

impl ExtTable {
    pub fn new(spec: &CategorySpec) -> Result<ExtTable> {
        let n = spec.len();
        let ms = &spec.summands;
        let syz: Vec<Arc<SyzygyData>> = ms.iter().map(SyzygyData::new).collect();
        let mut spaces = Vec::with_capacity(n);
        for z in 0..n {
            let row: Result<Vec<ExtSpace>> = (0..n).map(|a| ExtSpace::new(&syz[z], &ms[a])).collect();
            spaces.push(row?);
        }
        let mut homs = Vec::with_capacity(n);
        for a in 0..n {
            let row: Result<Vec<HomSpace>> = (0..n).map(|b| hom_space(&ms[a], &ms[b])).collect();
            homs.push(row?);
        }
        let mut push = vec![vec![vec![Vec::new(); n]; n]; n];
        let mut pull = vec![vec![vec![Vec::new(); n]; n]; n];
        for z in 0..n {
            for a in 0..n {
                if spaces[z][a].dim() == 0 {
                    continue;
                }
                for b in 0..n {
                    let e: &ExtSpace = &spaces[z][a];
                    push[z][a][b] = homs[a][b].basis.iter().map(|u| e.push(u, &spaces[z][b])).collect();
                }
                for w in 0..n {
                    let e: &ExtSpace = &spaces[z][a];
                    pull[z][a][w] = homs[w][z].basis.iter().map(|v| e.pull(v, &spaces[w][a])).collect();
                }
            }
        }
        let mut t = ExtTable { spec: Arc::new(spec.clone()), syz, spaces, homs, push, pull, ar: Vec::new() };
        t.ar = (0..n).map(|z| t.almost_split_class(z)).collect();
        Ok(t)
    }

    pub fn n(&self) -> usize {
        self.spec.len()
    }

    pub fn field(&self) -> FieldPrime {
        self.spec.alg.field()
    }

    pub fn dim(&self, z: usize, a: usize) -> usize {
        self.spaces[z][a].dim()
    }

    /// Pushout matrix `Ext¹(M_z, M_a) -> Ext¹(M_z, M_b)` along `u: M_a -> M_b`.
    pub fn push_map(&self, z: usize, a: usize, b: usize, u: &ModuleMap) -> Matrix {
        let f = self.field();
        let mut m = Matrix::zeros(f, self.dim(z, b), self.dim(z, a));
        if self.dim(z, a) == 0 || self.dim(z, b) == 0 {
            return m;
        }
        let ms = &self.spec.summands;
        let c = self.homs[a][b].coords(&u.with_ends(&ms[a], &ms[b])).expect("map between summands");
        for (k, &x) in c.iter().enumerate() {
            if x != 0 {
                m.axpy(x, &self.push[z][a][b][k]);
            }
        }
        m
    }

    /// Pullback matrix `Ext¹(M_z, M_a) -> Ext¹(M_w, M_a)` along `v: M_w -> M_z`.
    pub fn pull_map(&self, z: usize, a: usize, w: usize, v: &ModuleMap) -> Matrix {
        let f = self.field();
        let mut m = Matrix::zeros(f, self.dim(w, a), self.dim(z, a));
        if self.dim(z, a) == 0 || self.dim(w, a) == 0 {
            return m;
        }
        let ms = &self.spec.summands;
        let c = self.homs[w][z].coords(&v.with_ends(&ms[w], &ms[z])).expect("map between summands");
        for (k, &x) in c.iter().enumerate() {
            if x != 0 {
                m.axpy(x, &self.pull[z][a][w][k]);
            }
        }
        m
    }

    /// Classes in `Ext¹(M_z, -)` killed by every radical pullback and pushout.
    fn almost_split_class(&self, z: usize) -> Option<(usize, Vec<u32>)> {
        let f = self.field();
        let ms = &self.spec.summands;
        let n = self.n();
        for a in 0..n {
            let d = self.dim(z, a);
            if d == 0 {
                continue;
            }
            let mut stack = Matrix::zeros(f, 0, d);
            for w in 0..n {
                for r in radical_maps(&ms[w], &ms[z]) {
                    stack = stack.vstack(&self.pull_map(z, a, w, &r));
                }
            }
            for b in 0..n {
                for r in radical_maps(&ms[a], &ms[b]) {
                    stack = stack.vstack(&self.push_map(z, a, b, &r));
                }
            }
            let k = stack.kernel_basis();
            if k.cols() > 0 {
                return Some((a, k.column(0)));
            }
        }
        None
    }

    /// Ids with an almost split sequence in `C`.
    pub fn non_projective_ids(&self) -> Vec<usize> {
        (0..self.n()).filter(|&z| self.ar[z].is_some()).collect()
    }

    pub fn total_ext_dim(&self) -> usize {
        (0..self.n()).flat_map(|z| (0..self.n()).map(move |a| (z, a))).map(|(z, a)| self.dim(z, a)).sum()
    }
}

/// An element of `Ext¹(M_z, M_a)` in the table basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtClass {
    pub z: usize,
    pub a: usize,
    pub coords: Vec<u32>,
}

#[derive(Clone, Debug)]
pub enum Action {
    /// along `u: M_a -> M_b`
    Push(usize, ModuleMap),
    /// along `v: M_w -> M_z`
    Pull(usize, ModuleMap),
}

impl ExtClass {
    pub fn realize(&self, t: &ExtTable) -> ShortExactSeq {
        t.spaces[self.z][self.a].realize(&self.coords)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&x| x == 0)
    }
}

pub fn ext_action(t: &ExtTable, c: &ExtClass, g: &Action) -> Result<ExtClass> {
    let ms = &t.spec.summands;
    match g {
        Action::Push(b, u) => {
            if u.src() != &ms[c.a] || u.tgt() != &ms[*b] {
                return Err(Error::DimensionMismatch("pushout map does not leave the left end".into()));
            }
            let m = t.push_map(c.z, c.a, *b, u);
            Ok(ExtClass { z: c.z, a: *b, coords: m.mul_vec(&c.coords) })
        }
        Action::Pull(w, v) => {
            if v.tgt() != &ms[c.z] || v.src() != &ms[*w] {
                return Err(Error::DimensionMismatch("pullback map does not land in the right end".into()));
            }
            let m = t.pull_map(c.z, c.a, *w, v);
            Ok(ExtClass { z: *w, a: c.a, coords: m.mul_vec(&c.coords) })
        }
    }
}

/// `Ext¹(⊕ M_{c_l}, ⊕ M_{a_j})` with block coordinates `(l, j)` in the table bases.
#[derive(Clone, Debug)]
pub struct SumExt {
    pub c_ids: Vec<usize>,
    pub a_ids: Vec<usize>,
    pub c: DirectSum,
    pub a: DirectSum,
    pub ext: ExtSpace,
    /// `offsets[l][j]`: start of block `(l, j)`.
    pub offsets: Vec<Vec<usize>>,
    to_blocks: Matrix,
    from_blocks: Matrix,
}

impl SumExt {
    pub fn new(t: &ExtTable, c_ids: &[usize], a_ids: &[usize]) -> SumExt {
        let f = t.field();
        let c = t.spec.sum_of(c_ids);
        let a = t.spec.sum_of(a_ids);
        let syz = SyzygyData::new(&c.module);
        let ext = ExtSpace::new(&syz, &a.module).expect("same algebra");
        let mut offsets = Vec::new();
        let mut total = 0;
        for &cl in c_ids {
            let mut row = Vec::new();
            for &aj in a_ids {
                row.push(total);
                total += t.dim(cl, aj);
            }
            offsets.push(row);
        }
        let lifts: Vec<ModuleMap> =
            (0..c_ids.len()).map(|l| syzygy_lift(&t.syz[c_ids[l]], &syz, &c.incl(l))).collect();
        let cols: Vec<Vec<u32>> = (0..ext.dim())
            .map(|m| {
                let mut e = vec![0u32; ext.dim()];
                e[m] = 1;
                let g = ext.rep(&e);
                let mut out = vec![0u32; total];
                for (l, &cl) in c_ids.iter().enumerate() {
                    for (j, &aj) in a_ids.iter().enumerate() {
                        let s = &t.spaces[cl][aj];
                        if s.dim() == 0 {
                            continue;
                        }
                        let h = a.proj(j).compose(&g).compose(&lifts[l]);
                        let h = h.with_ends(&t.syz[cl].omega, &t.spec.summands[aj]);
                        let v = s.class_of_map(&h);
                        out[offsets[l][j]..offsets[l][j] + v.len()].copy_from_slice(&v);
                    }
                }
                out
            })
            .collect();
        let to_blocks = Matrix::from_columns(f, total, &cols);
        let from_blocks = to_blocks.inverse().expect("block coordinates of Ext over sums");
        SumExt { c_ids: c_ids.to_vec(), a_ids: a_ids.to_vec(), c, a, ext, offsets, to_blocks, from_blocks }
    }

    pub fn dim(&self) -> usize {
        self.ext.dim()
    }

    pub fn realize_blocks(&self, v: &[u32]) -> ShortExactSeq {
        self.ext.realize(&self.from_blocks.mul_vec(v))
    }

    /// Block coordinates of a sequence with ends exactly `self.a`, `self.c`.
    pub fn blocks_of(&self, s: &ShortExactSeq) -> Result<Vec<u32>> {
        Ok(self.to_blocks.mul_vec(&self.ext.class_of(s)?))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Provenance {
    ArSubset(Vec<usize>),
    Oracle,
    Reconstructed,
    Custom,
}

/// Subspaces `sub[z][a] ⊆ Ext¹(M_z, M_a)`, as canonical column bases.
#[derive(Clone, Debug)]
pub struct ExactStructure {
    pub sub: Vec<Vec<Matrix>>,
    pub provenance: Provenance,
}

pub type StructureKey = Vec<Vec<Vec<Vec<u32>>>>;

fn canonical_cols(m: &Matrix) -> Matrix {
    canonical_span(m).transpose()
}

impl ExactStructure {
    pub fn split(t: &ExtTable) -> ExactStructure {
        let f = t.field();
        let n = t.n();
        let sub = (0..n).map(|z| (0..n).map(|a| Matrix::zeros(f, t.dim(z, a), 0)).collect()).collect();
        ExactStructure { sub, provenance: Provenance::ArSubset(Vec::new()) }
    }

    pub fn maximal(t: &ExtTable) -> ExactStructure {
        let f = t.field();
        let n = t.n();
        let sub = (0..n).map(|z| (0..n).map(|a| Matrix::identity(f, t.dim(z, a))).collect()).collect();
        ExactStructure { sub, provenance: Provenance::ArSubset(t.non_projective_ids()) }
    }

    /// Family from arbitrary spanning sets, canonicalized but not closed.
    pub fn from_spans(spans: Vec<Vec<Matrix>>, provenance: Provenance) -> ExactStructure {
        let sub = spans.iter().map(|row| row.iter().map(canonical_cols).collect()).collect();
        ExactStructure { sub, provenance }
    }

    pub fn key(&self) -> StructureKey {
        self.sub
            .iter()
            .map(|row| row.iter().map(|m| (0..m.cols()).map(|c| m.column(c)).collect()).collect())
            .collect()
    }

    pub fn same_as(&self, other: &ExactStructure) -> bool {
        self.key() == other.key()
    }

    pub fn contains(&self, z: usize, a: usize, v: &[u32]) -> bool {
        let m = &self.sub[z][a];
        if v.iter().all(|&x| x == 0) {
            return true;
        }
        in_span(m, &Matrix::column_vector(m.field(), v))
    }

    /// Pointwise containment `self ⊆ other`.
    pub fn le(&self, other: &ExactStructure) -> bool {
        self.sub.iter().zip(&other.sub).all(|(r, s)| r.iter().zip(s).all(|(u, v)| in_span(v, u)))
    }

    pub fn dims(&self) -> Vec<Vec<usize>> {
        self.sub.iter().map(|r| r.iter().map(|m| m.cols()).collect()).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.sub.iter().flatten().map(|m| m.cols()).sum()
    }

    /// Basis of `F(⊕ c, ⊕ a)` in block coordinates of `SumExt`.
    pub fn block_subspace(&self, t: &ExtTable, c_ids: &[usize], a_ids: &[usize]) -> Matrix {
        let f = t.field();
        let mut total = 0;
        let mut cols = Vec::new();
        let mut blocks = Vec::new();
        for &cl in c_ids {
            for &aj in a_ids {
                blocks.push((total, cl, aj));
                total += t.dim(cl, aj);
            }
        }
        for (off, cl, aj) in blocks {
            let m = &self.sub[cl][aj];
            for c in 0..m.cols() {
                let mut v = vec![0u32; total];
                v[off..off + m.rows()].copy_from_slice(&m.column(c));
                cols.push(v);
            }
        }
        Matrix::from_columns(f, total, &cols)
    }

    /// Whether every block of `v` lies in the corresponding subspace.
    pub fn contains_blocks(&self, t: &ExtTable, c_ids: &[usize], a_ids: &[usize], v: &[u32]) -> bool {
        let mut off = 0;
        for &cl in c_ids {
            for &aj in a_ids {
                let d = t.dim(cl, aj);
                if !self.contains(cl, aj, &v[off..off + d]) {
                    return false;
                }
                off += d;
            }
        }
        true
    }
}

/// Smallest action-stable family containing the given spans.
pub fn close_family(t: &ExtTable, spans: Vec<Vec<Matrix>>, provenance: Provenance) -> ExactStructure {
    let n = t.n();
    let mut e = ExactStructure::from_spans(spans, provenance);
    loop {
        let mut changed = false;
        for z in 0..n {
            for a in 0..n {
                let s = e.sub[z][a].clone();
                if s.cols() == 0 {
                    continue;
                }
                for b in 0..n {
                    for m in &t.push[z][a][b] {
                        let img = m.mul(&s);
                        if !in_span(&e.sub[z][b], &img) {
                            e.sub[z][b] = canonical_cols(&e.sub[z][b].hstack(&img));
                            changed = true;
                        }
                    }
                }
                for w in 0..n {
                    for m in &t.pull[z][a][w] {
                        let img = m.mul(&s);
                        if !in_span(&e.sub[w][a], &img) {
                            e.sub[w][a] = canonical_cols(&e.sub[w][a].hstack(&img));
                            changed = true;
                        }
                    }
                }
            }
        }
        if !changed {
            return e;
        }
    }
}

/// `F_X`: classes whose pullback along every map from a summand in `x_ids` splits.
pub fn relative_structure(t: &ExtTable, x_ids: &[usize], provenance: Provenance) -> ExactStructure {
    let f = t.field();
    let n = t.n();
    let mut e = ExactStructure::split(t);
    e.provenance = provenance;
    for z in 0..n {
        for a in 0..n {
            let d = t.dim(z, a);
            if d == 0 {
                continue;
            }
            let mut stack = Matrix::zeros(f, 0, d);
            for &x in x_ids {
                for v in &t.homs[x][z].basis {
                    stack = stack.vstack(&t.pull_map(z, a, x, v));
                }
            }
            e.sub[z][a] = canonical_cols(&stack.kernel_basis());
        }
    }
    e
}

/// Smallest closed subbifunctor containing the almost split classes of the chosen ids:
/// `F_X` for `X` the summands outside `chosen`.
pub fn generate_from_ar_subset(t: &ExtTable, chosen: &[usize]) -> Result<ExactStructure> {
    for &z in chosen {
        if t.ar.get(z).and_then(|x| x.as_ref()).is_none() {
            return Err(Error::Precondition(format!("no almost split sequence ends in summand {z}")));
        }
    }
    let mut ids = chosen.to_vec();
    ids.sort();
    ids.dedup();
    let others: Vec<usize> = (0..t.n()).filter(|z| !ids.contains(z)).collect();
    Ok(relative_structure(t, &others, Provenance::ArSubset(ids)))
}

/// Smallest action-stable family containing the chosen almost split classes.
pub fn ar_ideal(t: &ExtTable, chosen: &[usize]) -> Result<ExactStructure> {
    let f = t.field();
    let n = t.n();
    let mut spans: Vec<Vec<Matrix>> = (0..n).map(|z| (0..n).map(|a| Matrix::zeros(f, t.dim(z, a), 0)).collect()).collect();
    for &z in chosen {
        let Some((a, class)) = t.ar.get(z).and_then(|x| x.as_ref()) else {
            return Err(Error::Precondition(format!("no almost split sequence ends in summand {z}")));
        };
        spans[z][*a] = spans[z][*a].hstack(&Matrix::column_vector(f, class));
    }
    Ok(close_family(t, spans, Provenance::Custom))
}

/// Deduplicated closures over all subsets of non-projective ids, in subset order.
pub fn enumerate_exact_structures(t: &ExtTable) -> Result<Vec<ExactStructure>> {
    let np = t.non_projective_ids();
    if np.len() > 20 {
        return Err(Error::CapExceeded(format!("{} almost split sequences", np.len())));
    }
    let mut out: Vec<ExactStructure> = Vec::new();
    let mut seen = BTreeSet::new();
    let mut masks: Vec<u32> = (0..1u32 << np.len()).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    for mask in masks {
        let chosen: Vec<usize> = (0..np.len()).filter(|&k| mask >> k & 1 == 1).map(|k| np[k]).collect();
        let e = generate_from_ar_subset(t, &chosen)?;
        if seen.insert(e.key()) {
            out.push(e);
        }
    }
    Ok(out)
}

/// Multisets of summand ids with between 1 and `bound` elements, sorted.
pub fn multisets(n: usize, bound: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: usize, bound: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == bound {
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, bound, i, cur, out);
            cur.pop();
        }
    }
    rec(n, bound, 0, &mut cur, &mut out);
    out
}

/// Block matrix of pushouts `Ext¹(M_x, ⊕a) -> Ext¹(M_x, ⊕b)` along `u: ⊕a -> ⊕b`.
fn push_blocks(t: &ExtTable, x: usize, a: &DirectSum, a_ids: &[usize], b: &DirectSum, b_ids: &[usize], u: &ModuleMap) -> Matrix {
    let f = t.field();
    let da: Vec<usize> = a_ids.iter().map(|&j| t.dim(x, j)).collect();
    let db: Vec<usize> = b_ids.iter().map(|&k| t.dim(x, k)).collect();
    let mut m = Matrix::zeros(f, db.iter().sum(), da.iter().sum());
    let mut ro = 0;
    for (k, &bk) in b_ids.iter().enumerate() {
        let mut co = 0;
        for (j, &aj) in a_ids.iter().enumerate() {
            if da[j] > 0 && db[k] > 0 {
                let comp = b.proj(k).compose(u).compose(&a.incl(j));
                m.set_block(ro, co, &t.push_map(x, aj, bk, &comp));
            }
            co += da[j];
        }
        ro += db[k];
    }
    m
}

/// Block matrix of pullbacks `Ext¹(⊕c, M_x) -> Ext¹(⊕b, M_x)` along `v: ⊕b -> ⊕c`.
fn pull_blocks(t: &ExtTable, x: usize, c: &DirectSum, c_ids: &[usize], b: &DirectSum, b_ids: &[usize], v: &ModuleMap) -> Matrix {
    let f = t.field();
    let dc: Vec<usize> = c_ids.iter().map(|&l| t.dim(l, x)).collect();
    let db: Vec<usize> = b_ids.iter().map(|&k| t.dim(k, x)).collect();
    let mut m = Matrix::zeros(f, db.iter().sum(), dc.iter().sum());
    let mut ro = 0;
    for (k, &bk) in b_ids.iter().enumerate() {
        let mut co = 0;
        for (l, &cl) in c_ids.iter().enumerate() {
            if dc[l] > 0 && db[k] > 0 {
                let comp = c.proj(l).compose(v).compose(&b.incl(k));
                m.set_block(ro, co, &t.pull_map(cl, x, bk, &comp));
            }
            co += dc[l];
        }
        ro += db[k];
    }
    m
}

/// Like `block_subspace`, for a single column or row of pairs.
fn fam_left(e: &ExactStructure, t: &ExtTable, x: usize, a_ids: &[usize]) -> Matrix {
    e.block_subspace(t, &[x], a_ids)
}

fn fam_right(e: &ExactStructure, t: &ExtTable, c_ids: &[usize], x: usize) -> Matrix {
    e.block_subspace(t, c_ids, &[x])
}

/// `W ∩ ker P ⊆ span(I)` for column bases `W`, `I` and a matrix `P`.
fn kernel_inside(w: &Matrix, p: &Matrix, i: &Matrix) -> bool {
    if w.cols() == 0 {
        return true;
    }
    let k = p.mul(w).kernel_basis();
    if k.cols() == 0 {
        return true;
    }
    in_span(i, &w.mul(&k))
}

/// One conflation `⊕a ↣ B ↠ ⊕c` transported to a sum of summands in the middle.
pub struct SplitConflation {
    pub a_ids: Vec<usize>,
    pub b_ids: Vec<usize>,
    pub c_ids: Vec<usize>,
    pub a: DirectSum,
    pub b: DirectSum,
    pub c: DirectSum,
    pub i: ModuleMap,
    pub p: ModuleMap,
}

pub fn split_conflation(t: &ExtTable, se: &SumExt, s: &ShortExactSeq) -> Option<SplitConflation> {
    let (b_ids, b, iso) = t.spec.split(s.middle())?;
    let inv = iso.inverse()?;
    let i = inv.compose(&s.i).with_ends(&se.a.module, &b.module);
    let p = s.p.compose(&iso).with_ends(&b.module, &se.c.module);
    Some(SplitConflation {
        a_ids: se.a_ids.clone(),
        b_ids,
        c_ids: se.c_ids.clone(),
        a: se.a.clone(),
        b,
        c: se.c.clone(),
        i,
        p,
    })
}

/// Exactness of `F(X, A) -> F(X, B) -> F(X, C)` and `F(C, X) -> F(B, X) -> F(A, X)` at the middle.
pub fn middle_exactness(t: &ExtTable, e: &ExactStructure, sc: &SplitConflation) -> Option<String> {
    for x in 0..t.n() {
        let w = fam_left(e, t, x, &sc.b_ids);
        let pp = push_blocks(t, x, &sc.b, &sc.b_ids, &sc.c, &sc.c_ids, &sc.p);
        let ip = push_blocks(t, x, &sc.a, &sc.a_ids, &sc.b, &sc.b_ids, &sc.i);
        let img = ip.mul(&fam_left(e, t, x, &sc.a_ids));
        if !kernel_inside(&w, &pp, &img) {
            return Some(format!("F({x}, -) not exact at the middle term {:?}", sc.b_ids));
        }
        let w = fam_right(e, t, &sc.b_ids, x);
        let ipull = pull_blocks(t, x, &sc.b, &sc.b_ids, &sc.a, &sc.a_ids, &sc.i);
        let ppull = pull_blocks(t, x, &sc.c, &sc.c_ids, &sc.b, &sc.b_ids, &sc.p);
        let img = ppull.mul(&fam_right(e, t, &sc.c_ids, x));
        if !kernel_inside(&w, &ipull, &img) {
            return Some(format!("F(-, {x}) not exact at the middle term {:?}", sc.b_ids));
        }
    }
    None
}

/// Bifunctor closure (exact) and composition closure over conflations whose
/// end terms have at most `bound` indecomposable summands.
pub fn is_exact_structure(t: &ExtTable, e: &ExactStructure, bound: usize) -> Report {
    let mut r = Report::new("exact structure");
    let n = t.n();
    let mut action_ok = true;
    let mut detail = String::new();
    'outer: for z in 0..n {
        for a in 0..n {
            let s = &e.sub[z][a];
            if s.rows() != t.dim(z, a) {
                action_ok = false;
                detail = format!("subspace ({z}, {a}) has the wrong ambient dimension");
                break 'outer;
            }
            if s.cols() == 0 {
                continue;
            }
            for b in 0..n {
                for m in &t.push[z][a][b] {
                    if !in_span(&e.sub[z][b], &m.mul(s)) {
                        action_ok = false;
                        detail = format!("pushout ({z}, {a}) -> ({z}, {b}) leaves the family");
                        break 'outer;
                    }
                }
            }
            for w in 0..n {
                for m in &t.pull[z][a][w] {
                    if !in_span(&e.sub[w][a], &m.mul(s)) {
                        action_ok = false;
                        detail = format!("pullback ({z}, {a}) -> ({w}, {a}) leaves the family");
                        break 'outer;
                    }
                }
            }
        }
    }
    r.check("R2/L2: stable under pullbacks and pushouts", action_ok, detail);
    if !action_ok {
        r.check(format!("R1/L1: composition closure (ends ≤ {bound} summands)"), false, "skipped: not a subbifunctor");
        return r;
    }
    let (ok, detail) = composition_closure(t, e, bound);
    r.check(format!("R1/L1: composition closure (ends ≤ {bound} summands)"), ok, detail);
    r
}

fn composition_closure(t: &ExtTable, e: &ExactStructure, bound: usize) -> (bool, String) {
    let f = t.field();
    let sets = multisets(t.n(), bound);
    let mut checked = 0usize;
    for c_ids in &sets {
        for a_ids in &sets {
            let fam = e.block_subspace(t, c_ids, a_ids);
            if fam.cols() == 0 {
                continue;
            }
            let se = SumExt::new(t, c_ids, a_ids);
            for coeffs in projective_points(f.p(), fam.cols(), POINT_LIMIT) {
                let v = fam.mul_vec(&coeffs);
                let s = se.realize_blocks(&v);
                let Some(sc) = split_conflation(t, &se, &s) else {
                    return (false, format!("middle term of a conflation {c_ids:?} -> {a_ids:?} is outside add(M)"));
                };
                checked += 1;
                if let Some(msg) = middle_exactness(t, e, &sc) {
                    return (false, msg);
                }
            }
        }
    }
    (true, format!("{checked} conflations checked"))
}

/// Conflation test for a short exact sequence with all terms in `add(M)`.
pub fn is_conflation(t: &ExtTable, s: &ShortExactSeq, e: &ExactStructure) -> Result<bool> {
    if !s.is_exact() {
        return Ok(false);
    }
    let spec = &t.spec;
    let not_in = || Error::NotInCategory("sequence term outside add(M)".into());
    let (a_ids, _, a_iso) = spec.split(s.left()).ok_or_else(not_in)?;
    let (c_ids, _, c_iso) = spec.split(s.right()).ok_or_else(not_in)?;
    if !spec.contains(s.middle()) {
        return Err(not_in());
    }
    if a_ids.is_empty() || c_ids.is_empty() {
        return Ok(true);
    }
    let se = SumExt::new(t, &c_ids, &a_ids);
    let c_inv = c_iso.inverse().expect("iso");
    let i = s.i.compose(&a_iso).with_ends(&se.a.module, s.middle());
    let p = c_inv.compose(&s.p).with_ends(s.middle(), &se.c.module);
    let v = se.blocks_of(&ShortExactSeq { i, p })?;
    Ok(e.contains_blocks(t, &c_ids, &a_ids, &v))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MorphismClass {
    pub inflation: bool,
    pub deflation: bool,
    pub admissible: bool,
}

fn is_deflation(t: &ExtTable, f: &ModuleMap, e: &ExactStructure) -> Result<bool> {
    if !f.is_surjective() {
        return Ok(false);
    }
    let (k, incl) = crate::repmod::module::kernel(f);
    if !t.spec.contains(&k) {
        return Ok(false);
    }
    is_conflation(t, &ShortExactSeq { i: incl, p: f.clone() }, e)
}

fn is_inflation(t: &ExtTable, f: &ModuleMap, e: &ExactStructure) -> Result<bool> {
    if !f.is_injective() {
        return Ok(false);
    }
    let q = crate::repmod::module::cokernel(f);
    if !t.spec.contains(&q.module) {
        return Ok(false);
    }
    is_conflation(t, &ShortExactSeq { i: f.clone(), p: q.proj }, e)
}

pub fn classify_morphism(t: &ExtTable, f: &ModuleMap, e: &ExactStructure) -> Result<MorphismClass> {
    if !t.spec.contains(f.src()) || !t.spec.contains(f.tgt()) {
        return Err(Error::NotInCategory("morphism end outside add(M)".into()));
    }
    let deflation = is_deflation(t, f, e)?;
    let inflation = is_inflation(t, f, e)?;
    let (im, epi, mono) = crate::repmod::module::image(f);
    let admissible = t.spec.contains(&im) && is_deflation(t, &epi, e)? && is_inflation(t, &mono, e)?;
    Ok(MorphismClass { inflation, deflation, admissible })
}

/// All subspaces of `GF(p)^d` as canonical column bases.
pub fn all_subspaces(f: FieldPrime, d: usize) -> Vec<Matrix> {
    let p = f.p();
    let mut out = Vec::new();
    for mask in 0u32..1 << d {
        let piv: Vec<usize> = (0..d).filter(|&i| mask >> i & 1 == 1).collect();
        let k = piv.len();
        // free entries: row r, columns after piv[r] that are not pivots
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|r| ((piv[r] + 1)..d).filter(|c| !piv.contains(c)).map(move |c| (r, c)))
            .collect();
        let count = (p as u64).pow(free.len() as u32);
        for idx in 0..count {
            let mut rows = Matrix::zeros(f, k, d);
            for (r, &c) in piv.iter().enumerate() {
                rows.set(r, c, 1);
            }
            let mut x = idx;
            for &(r, c) in &free {
                rows.set(r, c, (x % p as u64) as u32);
                x /= p as u64;
            }
            out.push(rows.transpose());
        }
    }
    out
}

/// Every action-stable family passing the axiom check at `bound`.
pub fn brute_force_structures(t: &ExtTable, bound: usize, guard: u64) -> Result<Vec<ExactStructure>> {
    let f = t.field();
    let n = t.n();
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|z| (0..n).map(move |a| (z, a))).filter(|&(z, a)| t.dim(z, a) > 0).collect();
    let choices: Vec<Vec<Matrix>> = pairs.iter().map(|&(z, a)| all_subspaces(f, t.dim(z, a))).collect();
    let mut total: u64 = 1;
    for c in &choices {
        total = total.saturating_mul(c.len() as u64);
    }
    if total > guard {
        return Err(Error::CapExceeded(format!("{total} subspace families exceed the guard {guard}")));
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; pairs.len()];
    for _ in 0..total {
        let mut e = ExactStructure::split(t);
        e.provenance = Provenance::Oracle;
        for (k, &(z, a)) in pairs.iter().enumerate() {
            e.sub[z][a] = choices[k][idx[k]].clone();
        }
        if is_exact_structure(t, &e, bound).passed() {
            out.push(e);
        }
        for (k, x) in idx.iter_mut().enumerate() {
            *x += 1;
            if *x < choices[k].len() {
                break;
            }
            *x = 0;
        }
    }
    Ok(out)
}

/// Hasse diagram edges `(i, j)` with `s_i ⊂ s_j` covering.
pub fn hasse_edges(list: &[ExactStructure]) -> Vec<(usize, usize)> {
    let n = list.len();
    let lt = |i: usize, j: usize| i != j && list[i].le(&list[j]) && !list[j].le(&list[i]);
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if lt(i, j) && !(0..n).any(|k| lt(i, k) && lt(k, j)) {
                out.push((i, j));
            }
        }
    }
    out
}
