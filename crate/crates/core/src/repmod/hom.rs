use super::module::{Module, ModuleMap};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// `Hom(m, n)` with a fixed basis.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub src: Module,
    pub tgt: Module,
    pub basis: Vec<ModuleMap>,
    /// Flattened basis maps as columns.
    mat: Matrix,
}

/// Matrix of the intertwiner equations `f_j M_g - N_g f_i = 0` over the generators.
fn intertwiner_system(m: &Module, n: &Module) -> Matrix {
    let alg = m.alg();
    let f = m.field();
    let nv = m.dims().len();
    let mut off = vec![0; nv + 1];
    for v in 0..nv {
        off[v + 1] = off[v] + n.dim_at(v) * m.dim_at(v);
    }
    let unknowns = off[nv];
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for &g in alg.generators() {
        let (i, j) = (alg.src(g), alg.tgt(g));
        let (mg, ng) = (m.act(g), n.act(g));
        let (dmi, dmj, dni, dnj) = (m.dim_at(i), m.dim_at(j), n.dim_at(i), n.dim_at(j));
        for r in 0..dnj {
            for c in 0..dmi {
                let mut row = vec![0u32; unknowns];
                // (f_j M_g)[r][c] = sum_k f_j[r][k] M_g[k][c]
                for k in 0..dmj {
                    let v = mg.get(k, c);
                    if v != 0 {
                        let idx = off[j] + r * dmj + k;
                        row[idx] = f.add(row[idx], v);
                    }
                }
                // (N_g f_i)[r][c] = sum_k N_g[r][k] f_i[k][c]
                for k in 0..dni {
                    let v = ng.get(r, k);
                    if v != 0 {
                        let idx = off[i] + k * dmi + c;
                        row[idx] = f.sub(row[idx], v);
                    }
                }
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
    }
    let mut sys = Matrix::zeros(f, rows.len(), unknowns);
    for (r, row) in rows.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            if v != 0 {
                sys.set(r, c, v);
            }
        }
    }
    sys
}

pub fn hom_space(m: &Module, n: &Module) -> Result<HomSpace> {
    if !m.same_alg(n) {
        return Err(Error::AlgebraMismatch);
    }
    let sys = intertwiner_system(m, n);
    let k = sys.kernel_basis();
    let basis = (0..k.cols()).map(|c| ModuleMap::from_flat(m, n, &k.column(c))).collect();
    Ok(HomSpace { src: m.clone(), tgt: n.clone(), basis, mat: k })
}

pub fn hom_basis(m: &Module, n: &Module) -> Result<Vec<ModuleMap>> {
    Ok(hom_space(m, n)?.basis)
}

pub fn hom_dim(m: &Module, n: &Module) -> usize {
    if m.is_zero() || n.is_zero() {
        return 0;
    }
    let sys = intertwiner_system(m, n);
    sys.cols() - sys.rank()
}

impl HomSpace {
    /// A hom space with a prescribed basis (assumed independent and complete).
    pub fn with_basis(src: &Module, tgt: &Module, basis: Vec<ModuleMap>) -> HomSpace {
        let n: usize = (0..src.dims().len()).map(|v| src.dim_at(v) * tgt.dim_at(v)).sum();
        let cols: Vec<Vec<u32>> = basis.iter().map(|b| b.flatten()).collect();
        let mat = Matrix::from_columns(src.field(), n, &cols);
        HomSpace { src: src.clone(), tgt: tgt.clone(), basis, mat }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn coords(&self, f: &ModuleMap) -> Option<Vec<u32>> {
        let v = Matrix::column_vector(self.src.field(), &f.flatten());
        self.mat.solve_right(&v).ok().map(|x| x.column(0))
    }

    pub fn elem(&self, c: &[u32]) -> ModuleMap {
        let mut acc = ModuleMap::zero(&self.src, &self.tgt);
        for (b, &x) in self.basis.iter().zip(c) {
            if x != 0 {
                acc = acc.add(&b.scale(x));
            }
        }
        acc
    }

    /// Columns: flattened basis maps.
    pub fn matrix(&self) -> &Matrix {
        &self.mat
    }

    /// Subspace (in basis coordinates) of maps of the form `f ∘ x`.
    pub fn coords_of_span(&self, maps: &[ModuleMap]) -> Matrix {
        let f = self.src.field();
        let cols: Vec<Vec<u32>> = maps.iter().map(|m| self.coords(m).expect("map in hom space")).collect();
        Matrix::from_columns(f, self.dim(), &cols)
    }
}
