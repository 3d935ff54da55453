use super::hom::hom_basis;
use super::module::{submodule, Module, ModuleMap};
use crate::linalg::Matrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Module,
    /// summand -> whole
    pub incl: ModuleMap,
    /// whole -> summand
    pub proj: ModuleMap,
}

/// Outcome of inspecting `End(m)`.
#[derive(Clone, Debug)]
pub enum EndStructure {
    /// `End(m) = k·1 ⊕ rad` with the given radical basis.
    Local { radical: Vec<ModuleMap> },
    /// An endomorphism that is neither nilpotent nor invertible.
    Splitting(ModuleMap),
    /// No splitting element found by the full search schedule; treated as local.
    NoSplitFound { radical: Vec<ModuleMap> },
    Zero,
}

const EXHAUSTIVE_LIMIT: u64 = 1 << 20;

fn is_nilpotent(t: &Matrix) -> bool {
    t.power(t.rows() as u64).is_zero()
}

fn classify(t: &Matrix) -> (bool, bool) {
    (is_nilpotent(t), t.is_invertible())
}

/// Eigenvalue `λ` with `t - λ` nilpotent, if any.
fn single_eigenvalue(t: &Matrix) -> Option<u32> {
    let f = t.field();
    let n = t.rows();
    let id = Matrix::identity(f, n);
    let try_l = |l: u32| is_nilpotent(&t.sub(&id.scale(l)));
    if !(n as u64).is_multiple_of(f.p() as u64) {
        let l = f.mul(t.trace(), f.inv(f.reduce(n as i64)));
        return try_l(l).then_some(l);
    }
    if f.p() > 4096 {
        return None;
    }
    (0..f.p()).find(|&l| try_l(l))
}

/// Span of `n` closed under products and nilpotent as an algebra.
fn is_nilpotent_ideal(n: &[Matrix]) -> bool {
    if n.is_empty() {
        return true;
    }
    let f = n[0].field();
    let d = n[0].rows();
    let flat = |m: &Matrix| m.data().to_vec();
    let span = Matrix::from_columns(f, d * d, &n.iter().map(flat).collect::<Vec<_>>());
    let mut power: Vec<Matrix> = n.to_vec();
    for _ in 0..=d {
        let mut next = Vec::new();
        for a in &power {
            for b in n {
                let prod = a.mul(b);
                if prod.is_zero() {
                    continue;
                }
                if !crate::linalg::in_span(&span, &Matrix::column_vector(f, prod.data())) {
                    return false;
                }
                next.push(prod);
            }
        }
        if next.is_empty() {
            return true;
        }
        let basis = Matrix::from_columns(f, d * d, &next.iter().map(flat).collect::<Vec<_>>()).column_space();
        power = basis.columns().into_iter().map(|c| Matrix::from_vec(f, d, d, c)).collect();
    }
    false
}

pub fn end_structure(m: &Module) -> EndStructure {
    if m.is_zero() {
        return EndStructure::Zero;
    }
    let basis = hom_basis(m, m).expect("same algebra");
    let totals: Vec<Matrix> = basis.iter().map(|b| b.total()).collect();
    for (b, t) in basis.iter().zip(&totals) {
        let (nil, inv) = classify(t);
        if !nil && !inv {
            return EndStructure::Splitting(b.clone());
        }
    }
    let f = m.field();
    let d = m.dim();
    let id = Matrix::identity(f, d);
    let lambdas: Vec<Option<u32>> = totals.iter().map(single_eigenvalue).collect();
    if lambdas.iter().all(|l| l.is_some()) {
        let rad: Vec<Matrix> = totals.iter().zip(&lambdas).map(|(t, l)| t.sub(&id.scale(l.unwrap()))).collect();
        let rad_span = Matrix::from_columns(f, d * d, &rad.iter().map(|x| x.data().to_vec()).collect::<Vec<_>>());
        if is_nilpotent_ideal(&rad) {
            let cols = rad_span.column_space().columns();
            let radical = cols.iter().map(|c| ModuleMap::from_total(m, m, &Matrix::from_vec(f, d, d, c.clone()))).collect();
            return EndStructure::Local { radical };
        }
    }
    let combo = |c: &[u32]| {
        let mut acc = Matrix::zeros(f, d, d);
        for (t, &x) in totals.iter().zip(c) {
            acc.axpy(x, t);
        }
        acc
    };
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001 ^ d as u64);
    let k = totals.len();
    for _ in 0..(64 * k).max(256) {
        let c: Vec<u32> = (0..k).map(|_| rng.gen_range(0..f.p())).collect();
        let t = combo(&c);
        let (nil, inv) = classify(&t);
        if !nil && !inv {
            return EndStructure::Splitting(ModuleMap::from_total(m, m, &t));
        }
    }
    let space = (f.p() as u64).checked_pow(k as u32);
    if let Some(total) = space.filter(|&s| s <= EXHAUSTIVE_LIMIT) {
        let mut c = vec![0u32; k];
        for _ in 0..total {
            let t = combo(&c);
            let (nil, inv) = classify(&t);
            if !nil && !inv {
                return EndStructure::Splitting(ModuleMap::from_total(m, m, &t));
            }
            for x in c.iter_mut() {
                *x += 1;
                if *x < f.p() {
                    break;
                }
                *x = 0;
            }
        }
    }
    // local with a residue field larger than GF(p), or an exhausted schedule
    let radical = basis
        .iter()
        .zip(&totals)
        .filter(|(_, t)| is_nilpotent(t))
        .map(|(b, _)| b.clone())
        .collect();
    EndStructure::NoSplitFound { radical }
}

pub fn is_indecomposable(m: &Module) -> bool {
    matches!(end_structure(m), EndStructure::Local { .. } | EndStructure::NoSplitFound { .. })
}

/// Krull–Schmidt decomposition with structure maps.
pub fn decompose(m: &Module) -> Vec<Summand> {
    let mut out = Vec::new();
    split_into(m, &ModuleMap::identity(m), &ModuleMap::identity(m), &mut out);
    out
}

fn split_into(m: &Module, incl: &ModuleMap, proj: &ModuleMap, out: &mut Vec<Summand>) {
    match end_structure(m) {
        EndStructure::Zero => {}
        EndStructure::Local { .. } | EndStructure::NoSplitFound { .. } => {
            out.push(Summand { module: m.clone(), incl: incl.clone(), proj: proj.clone() });
        }
        EndStructure::Splitting(phi) => {
            let d = m.dim() as u64;
            let psi: Vec<Matrix> = phi.parts().iter().map(|p| p.power(d)).collect();
            let kb: Vec<Matrix> = psi.iter().map(|p| p.kernel_basis()).collect();
            let ib: Vec<Matrix> = psi.iter().map(|p| p.column_space()).collect();
            let (km, kincl) = submodule(m, &kb).expect("Fitting kernel");
            let (im, iincl) = submodule(m, &ib).expect("Fitting image");
            let mut kproj = Vec::new();
            let mut iproj = Vec::new();
            for v in 0..m.dims().len() {
                let full = kb[v].hstack(&ib[v]);
                let inv = full.inverse().expect("Fitting decomposition");
                let kc = kb[v].cols();
                kproj.push(inv.block(0, 0, kc, m.dim_at(v)));
                iproj.push(inv.block(kc, 0, ib[v].cols(), m.dim_at(v)));
            }
            let kproj = ModuleMap::new_unchecked(m, &km, kproj);
            let iproj = ModuleMap::new_unchecked(m, &im, iproj);
            split_into(&km, &incl.compose(&kincl), &kproj.compose(proj), out);
            split_into(&im, &incl.compose(&iincl), &iproj.compose(proj), out);
        }
    }
}

/// Iso between indecomposables, by searching basis pairs with `g ∘ f` invertible.
fn indecomposable_iso(x: &Module, y: &Module) -> Option<ModuleMap> {
    if x.dims() != y.dims() {
        return None;
    }
    let fs = hom_basis(x, y).ok()?;
    for f in &fs {
        if f.is_iso() {
            return Some(f.clone());
        }
    }
    let gs = hom_basis(y, x).ok()?;
    for f in &fs {
        for g in &gs {
            if g.compose(f).is_iso() {
                return Some(f.clone());
            }
        }
    }
    None
}

/// An isomorphism `m -> n`, if one exists.
pub fn is_isomorphic(m: &Module, n: &Module) -> Option<ModuleMap> {
    if !m.same_alg(n) || m.dims() != n.dims() {
        return None;
    }
    if m.is_zero() {
        return Some(ModuleMap::zero(m, n));
    }
    if let Some(f) = indecomposable_iso_if_cheap(m, n) {
        return Some(f);
    }
    let dm = decompose(m);
    let dn = decompose(n);
    if dm.len() != dn.len() {
        return None;
    }
    iso_from_decompositions(m, n, &dm, &dn)
}

fn indecomposable_iso_if_cheap(m: &Module, n: &Module) -> Option<ModuleMap> {
    hom_basis(m, n).ok()?.into_iter().find(|f| f.is_iso())
}

pub fn iso_from_decompositions(m: &Module, n: &Module, dm: &[Summand], dn: &[Summand]) -> Option<ModuleMap> {
    let mut used = vec![false; dn.len()];
    let mut w = ModuleMap::zero(m, n);
    for s in dm {
        let mut found = None;
        for (j, t) in dn.iter().enumerate() {
            if used[j] {
                continue;
            }
            if let Some(iso) = indecomposable_iso(&s.module, &t.module) {
                found = Some((j, iso));
                break;
            }
        }
        let (j, iso) = found?;
        used[j] = true;
        w = w.add(&dn[j].incl.compose(&iso).compose(&s.proj));
    }
    w.is_iso().then_some(w)
}

pub fn are_isomorphic_indecomposables(x: &Module, y: &Module) -> bool {
    x.same_alg(y) && indecomposable_iso(x, y).is_some()
}

/// Deterministic pseudo-random invertible matrix.
pub fn random_invertible(f: crate::linalg::FieldPrime, n: usize, rng: &mut impl Rng) -> Matrix {
    loop {
        let data = (0..n * n).map(|_| rng.gen_range(0..f.p())).collect();
        let m = Matrix::from_vec(f, n, n, data);
        if m.is_invertible() {
            return m;
        }
    }
}
