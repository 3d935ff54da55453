//! Finite-dimensional basic algebras given by a basis with vertex tags.
//!
//! Convention: a basis element `x` with `src(x) = i`, `tgt(x) = j` lies in
//! `e_i A e_j`, and products compose left to right like paths.

use crate::error::{Error, Result};
use crate::linalg::{FieldPrime, Matrix};
use crate::report::Report;
use serde::{Deserialize, Serialize};
use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, HashMap};
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

pub type Elem = Vec<u32>;

/// A word in the generators together with a coefficient.
pub type WordExpr = Vec<(Vec<usize>, u32)>;

#[derive(Clone, Debug)]
pub struct Algebra {
    field: FieldPrime,
    vertices: Vec<String>,
    labels: Vec<String>,
    src: Vec<usize>,
    tgt: Vec<usize>,
    table: Vec<Vec<(usize, u32)>>,
    idempotents: Vec<usize>,
    radical: Vec<usize>,
    is_radical: Vec<bool>,
    generators: Vec<usize>,
    words: Vec<WordExpr>,
    loewy: usize,
    fingerprint: u64,
    op_cache: OnceLock<Arc<Algebra>>,
}

/// Serializable multiplication table.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TableSpec {
    pub vertices: Vec<String>,
    /// `(label, source vertex, target vertex)`
    pub basis: Vec<(String, usize, usize)>,
    /// `(x, y, [(z, coefficient)])`; omitted products are zero.
    pub products: Vec<(usize, usize, Vec<(usize, i64)>)>,
    pub idempotents: Vec<usize>,
    pub radical: Vec<usize>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.fingerprint == other.fingerprint
            && self.field == other.field
            && self.src == other.src
            && self.tgt == other.tgt
            && self.table == other.table
            && self.idempotents == other.idempotents
            && self.radical == other.radical
    }
}

impl Eq for Algebra {}

impl Algebra {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        field: FieldPrime,
        vertices: Vec<String>,
        labels: Vec<String>,
        src: Vec<usize>,
        tgt: Vec<usize>,
        table: Vec<Vec<(usize, u32)>>,
        idempotents: Vec<usize>,
        radical: Vec<usize>,
    ) -> Result<Arc<Algebra>> {
        let n = labels.len();
        let nv = vertices.len();
        if src.len() != n || tgt.len() != n || table.len() != n * n || idempotents.len() != nv {
            return Err(Error::InvalidAlgebra("inconsistent table sizes".into()));
        }
        if src.iter().chain(&tgt).any(|&v| v >= nv) {
            return Err(Error::InvalidAlgebra("vertex tag out of range".into()));
        }
        let mut seen = vec![0u8; n];
        for &i in idempotents.iter().chain(&radical) {
            if i >= n {
                return Err(Error::InvalidAlgebra("basis index out of range".into()));
            }
            seen[i] += 1;
        }
        if seen.iter().any(|&s| s != 1) {
            return Err(Error::InvalidAlgebra(
                "basis must be the disjoint union of idempotents and radical".into(),
            ));
        }
        for (v, &e) in idempotents.iter().enumerate() {
            if src[e] != v || tgt[e] != v {
                return Err(Error::InvalidAlgebra(format!("idempotent {} has wrong tags", labels[e])));
            }
        }
        let mut table = table;
        for entry in table.iter_mut() {
            entry.retain(|&(_, c)| c % field.p() != 0);
            for t in entry.iter_mut() {
                t.1 %= field.p();
                if t.0 >= n {
                    return Err(Error::InvalidAlgebra("product index out of range".into()));
                }
            }
            entry.sort();
        }
        let mut is_radical = vec![false; n];
        for &r in &radical {
            is_radical[r] = true;
        }
        let mut a = Algebra {
            field,
            vertices,
            labels,
            src,
            tgt,
            table,
            idempotents,
            radical,
            is_radical,
            generators: Vec::new(),
            words: Vec::new(),
            loewy: 0,
            fingerprint: 0,
            op_cache: OnceLock::new(),
        };
        a.fingerprint = a.compute_fingerprint();
        a.compute_generators()?;
        Ok(Arc::new(a))
    }

    pub fn from_table(field: FieldPrime, t: &TableSpec) -> Result<Arc<Algebra>> {
        let n = t.basis.len();
        let mut table = vec![Vec::new(); n * n];
        for (x, y, terms) in &t.products {
            if *x >= n || *y >= n {
                return Err(Error::InvalidAlgebra("product index out of range".into()));
            }
            let mut acc: BTreeMap<usize, u32> = BTreeMap::new();
            for &(z, c) in terms {
                let e = acc.entry(z).or_insert(0);
                *e = field.add(*e, field.reduce(c));
            }
            table[x * n + y] = acc.into_iter().collect();
        }
        Algebra::new(
            field,
            t.vertices.clone(),
            t.basis.iter().map(|b| b.0.clone()).collect(),
            t.basis.iter().map(|b| b.1).collect(),
            t.basis.iter().map(|b| b.2).collect(),
            table,
            t.idempotents.clone(),
            t.radical.clone(),
        )
    }

    pub fn to_table(&self) -> TableSpec {
        let n = self.dim();
        let mut products = Vec::new();
        for x in 0..n {
            for y in 0..n {
                let e = &self.table[x * n + y];
                if !e.is_empty() {
                    products.push((x, y, e.iter().map(|&(z, c)| (z, c as i64)).collect()));
                }
            }
        }
        TableSpec {
            vertices: self.vertices.clone(),
            basis: (0..n).map(|i| (self.labels[i].clone(), self.src[i], self.tgt[i])).collect(),
            products,
            idempotents: self.idempotents.clone(),
            radical: self.radical.clone(),
        }
    }

    fn compute_fingerprint(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.field.hash(&mut h);
        self.src.hash(&mut h);
        self.tgt.hash(&mut h);
        self.table.hash(&mut h);
        self.idempotents.hash(&mut h);
        self.radical.hash(&mut h);
        h.finish()
    }

    /// Greedy basis of `J / J^2` among radical basis elements, and word
    /// expressions of every radical basis element in those generators.
    fn compute_generators(&mut self) -> Result<()> {
        let n = self.dim();
        let f = self.field;
        let mut sq: Vec<Elem> = Vec::new();
        for &x in &self.radical {
            for &y in &self.radical {
                let e = self.mul_basis_elem(x, y);
                if e.iter().any(|&c| c != 0) {
                    sq.push(e);
                }
            }
        }
        let mut span = Matrix::from_columns(f, n, &sq).column_space();
        let mut gens = Vec::new();
        for &r in &self.radical {
            let e = self.basis_elem(r);
            let trial = span.hstack(&Matrix::column_vector(f, &e));
            if trial.rank() > span.cols() {
                gens.push(r);
                span = trial;
            }
        }
        self.generators = gens.clone();

        let mut kept: Vec<(Vec<usize>, Elem)> = Vec::new();
        let mut kept_span = Matrix::zeros(f, n, 0);
        let mut level: Vec<(Vec<usize>, Elem)> = Vec::new();
        for &g in &gens {
            let e = self.basis_elem(g);
            let trial = kept_span.hstack(&Matrix::column_vector(f, &e));
            if trial.rank() > kept_span.cols() {
                kept_span = trial;
                kept.push((vec![g], e.clone()));
                level.push((vec![g], e));
            }
        }
        let mut depth = 1;
        while !level.is_empty() {
            depth += 1;
            if depth > n + 1 {
                return Err(Error::InvalidAlgebra("radical is not nilpotent".into()));
            }
            let mut next = Vec::new();
            for (w, e) in &level {
                for &g in &gens {
                    let prod = self.mul(e, &self.basis_elem(g));
                    if prod.iter().all(|&c| c == 0) {
                        continue;
                    }
                    let trial = kept_span.hstack(&Matrix::column_vector(f, &prod));
                    if trial.rank() > kept_span.cols() {
                        kept_span = trial;
                        let mut w2 = w.clone();
                        w2.push(g);
                        kept.push((w2.clone(), prod.clone()));
                        next.push((w2, prod));
                    }
                }
            }
            level = next;
        }
        self.loewy = self.radical_power_bound();

        let word_mat = Matrix::from_columns(f, n, &kept.iter().map(|k| k.1.clone()).collect::<Vec<_>>());
        let mut words = vec![Vec::new(); n];
        for &r in &self.radical {
            let b = Matrix::column_vector(f, &self.basis_elem(r));
            let x = word_mat.solve_right(&b).map_err(|_| {
                Error::InvalidAlgebra(format!("{} is not generated by the radical generators", self.labels[r]))
            })?;
            words[r] = (0..kept.len())
                .filter(|&k| x.get(k, 0) != 0)
                .map(|k| (kept[k].0.clone(), x.get(k, 0)))
                .collect();
        }
        self.words = words;
        Ok(())
    }

    fn radical_power_bound(&self) -> usize {
        let n = self.dim();
        let mut power: Vec<Elem> = self.radical.iter().map(|&r| self.basis_elem(r)).collect();
        let mut k = 1;
        while !power.is_empty() && k <= n + 1 {
            let mut next = Vec::new();
            for a in &power {
                for &r in &self.radical {
                    let pr = self.mul(a, &self.basis_elem(r));
                    if pr.iter().any(|&c| c != 0) {
                        next.push(pr);
                    }
                }
            }
            power = if next.is_empty() {
                next
            } else {
                Matrix::from_columns(self.field, n, &next).column_space().columns()
            };
            k += 1;
        }
        k
    }

    pub fn field(&self) -> FieldPrime {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertices
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn src(&self, i: usize) -> usize {
        self.src[i]
    }

    pub fn tgt(&self, i: usize) -> usize {
        self.tgt[i]
    }

    pub fn idempotent(&self, v: usize) -> usize {
        self.idempotents[v]
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    pub fn radical_basis(&self) -> &[usize] {
        &self.radical
    }

    pub fn is_radical(&self, i: usize) -> bool {
        self.is_radical[i]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn words(&self, i: usize) -> &WordExpr {
        &self.words[i]
    }

    /// Smallest `k` with `J^k = 0`.
    pub fn loewy_length(&self) -> usize {
        self.loewy
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn same(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }

    pub fn basis_elem(&self, i: usize) -> Elem {
        let mut e = vec![0; self.dim()];
        e[i] = 1;
        e
    }

    pub fn mul_basis(&self, x: usize, y: usize) -> &[(usize, u32)] {
        &self.table[x * self.dim() + y]
    }

    fn mul_basis_elem(&self, x: usize, y: usize) -> Elem {
        let mut e = vec![0; self.dim()];
        for &(z, c) in self.mul_basis(x, y) {
            e[z] = c;
        }
        e
    }

    pub fn mul(&self, a: &[u32], b: &[u32]) -> Elem {
        let n = self.dim();
        let f = self.field;
        let mut out = vec![0u32; n];
        for x in 0..n {
            if a[x] == 0 {
                continue;
            }
            for y in 0..n {
                if b[y] == 0 {
                    continue;
                }
                let s = f.mul(a[x], b[y]);
                for &(z, c) in self.mul_basis(x, y) {
                    out[z] = f.add(out[z], f.mul(s, c));
                }
            }
        }
        out
    }

    /// Basis indices of `e_v A`, in increasing order.
    pub fn starting_at(&self, v: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.src[i] == v).collect()
    }

    /// Basis indices of `e_i A e_j`.
    pub fn between(&self, i: usize, j: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.src[b] == i && self.tgt[b] == j).collect()
    }

    pub fn opposite(&self) -> Result<Arc<Algebra>> {
        let n = self.dim();
        let mut table = vec![Vec::new(); n * n];
        for x in 0..n {
            for y in 0..n {
                table[x * n + y] = self.table[y * n + x].clone();
            }
        }
        Algebra::new(
            self.field,
            self.vertices.clone(),
            self.labels.clone(),
            self.tgt.clone(),
            self.src.clone(),
            table,
            self.idempotents.clone(),
            self.radical.clone(),
        )
    }

    /// Cached opposite algebra.
    pub fn op(&self) -> Arc<Algebra> {
        self.op_cache
            .get_or_init(|| self.opposite().expect("opposite of a valid algebra"))
            .clone()
    }

    /// Verified radical basis: nilpotent span with idempotent-spanned quotient.
    pub fn checked_radical_basis(&self) -> Result<&[usize]> {
        let rep = self.validate();
        for it in &rep.items {
            if !it.pass && (it.name.starts_with("radical") || it.name.starts_with("basic")) {
                return Err(Error::InvalidAlgebra(format!("{}: {}", it.name, it.detail)));
            }
        }
        Ok(&self.radical)
    }

    pub fn validate(&self) -> Report {
        let n = self.dim();
        let mut rep = Report::new("algebra validation");

        let mut bad_tags = Vec::new();
        for x in 0..n {
            for y in 0..n {
                let prod = self.mul_basis(x, y);
                if self.tgt[x] != self.src[y] && !prod.is_empty() {
                    bad_tags.push(format!("{}*{}", self.labels[x], self.labels[y]));
                }
                for &(z, _) in prod {
                    if self.src[z] != self.src[x] || self.tgt[z] != self.tgt[y] {
                        bad_tags.push(format!("{}*{} -> {}", self.labels[x], self.labels[y], self.labels[z]));
                    }
                }
            }
        }
        rep.check("vertex tags", bad_tags.is_empty(), bad_tags.join(", "));

        let mut assoc_fail = None;
        'outer: for x in 0..n {
            for y in 0..n {
                let xy = self.mul_basis_elem(x, y);
                for z in 0..n {
                    let l = self.mul(&xy, &self.basis_elem(z));
                    let yz = self.mul_basis_elem(y, z);
                    let r = self.mul(&self.basis_elem(x), &yz);
                    if l != r {
                        assoc_fail = Some(format!("({}{}){}", self.labels[x], self.labels[y], self.labels[z]));
                        break 'outer;
                    }
                }
            }
        }
        rep.check("associativity", assoc_fail.is_none(), assoc_fail.unwrap_or_default());

        let mut idem_fail = Vec::new();
        for (i, &ei) in self.idempotents.iter().enumerate() {
            for (j, &ej) in self.idempotents.iter().enumerate() {
                let prod = self.mul_basis_elem(ei, ej);
                let want = if i == j { self.basis_elem(ei) } else { vec![0; n] };
                if prod != want {
                    idem_fail.push(format!("{}{}", self.labels[ei], self.labels[ej]));
                }
            }
        }
        rep.check("idempotents orthogonal", idem_fail.is_empty(), idem_fail.join(", "));

        let mut unit_fail = Vec::new();
        let one: Elem = {
            let mut e = vec![0; n];
            for &i in &self.idempotents {
                e[i] = 1;
            }
            e
        };
        for x in 0..n {
            let bx = self.basis_elem(x);
            if self.mul(&one, &bx) != bx || self.mul(&bx, &one) != bx {
                unit_fail.push(self.labels[x].clone());
            }
        }
        rep.check("unit is the sum of idempotents", unit_fail.is_empty(), unit_fail.join(", "));

        let mut ideal_fail = Vec::new();
        for &r in &self.radical {
            for x in 0..n {
                for prod in [self.mul_basis(r, x), self.mul_basis(x, r)] {
                    if prod.iter().any(|&(z, _)| !self.is_radical[z]) {
                        ideal_fail.push(format!("{}/{}", self.labels[r], self.labels[x]));
                    }
                }
            }
        }
        rep.check("radical is a two-sided ideal", ideal_fail.is_empty(), ideal_fail.join(", "));

        let k = self.radical_power_bound();
        rep.check("radical nilpotent", k <= n + 1, format!("J^{k} = 0"));
        rep.check(
            "basic split quotient",
            self.idempotents.len() + self.radical.len() == n,
            "quotient spanned by idempotent images",
        );
        rep
    }

    /// Render an element as a combination of basis labels.
    pub fn show(&self, e: &[u32]) -> String {
        let terms: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| if c == 1 { self.labels[i].clone() } else { format!("{c}*{}", self.labels[i]) })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// A quiver with relations. Arrows are `(label, source, target)` with vertex
/// indices; a relation is a list of `(coefficient, path)` where a path lists
/// arrow labels in composition order.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct QuiverPresentation {
    pub vertices: Vec<String>,
    pub arrows: Vec<(String, usize, usize)>,
    #[serde(default)]
    pub relations: Vec<Vec<(i64, Vec<String>)>>,
    #[serde(default = "default_path_cap")]
    pub path_length_cap: usize,
}

fn default_path_cap() -> usize {
    8
}

type Path = Vec<usize>;

struct Rewriter {
    field: FieldPrime,
    rules: Vec<(Path, Vec<(u32, Path)>)>,
}

fn path_order(a: &Path, b: &Path) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

fn find_sub(hay: &[usize], needle: &[usize]) -> Option<usize> {
    if needle.len() > hay.len() {
        return None;
    }
    (0..=hay.len() - needle.len()).find(|&s| &hay[s..s + needle.len()] == needle)
}

impl Rewriter {
    fn reducible(&self, p: &[usize]) -> bool {
        self.rules.iter().any(|(lead, _)| find_sub(p, lead).is_some())
    }

    /// Normal form of a combination of nonempty paths; leftmost-first strategy.
    fn reduce(&self, input: Vec<(u32, Path)>) -> BTreeMap<Path, u32> {
        let f = self.field;
        let mut done: BTreeMap<Path, u32> = BTreeMap::new();
        let mut work = input;
        let mut steps = 0usize;
        while let Some((c, p)) = work.pop() {
            if c == 0 {
                continue;
            }
            steps += 1;
            assert!(steps < 10_000_000, "rewriting does not terminate");
            let hit = self
                .rules
                .iter()
                .filter_map(|(lead, rhs)| find_sub(&p, lead).map(|s| (s, lead.len(), rhs)))
                .min_by_key(|t| t.0);
            match hit {
                None => {
                    let e = done.entry(p).or_insert(0);
                    *e = f.add(*e, c);
                }
                Some((s, len, rhs)) => {
                    for (rc, rp) in rhs {
                        let mut q = p[..s].to_vec();
                        q.extend_from_slice(rp);
                        q.extend_from_slice(&p[s + len..]);
                        work.push((f.mul(c, *rc), q));
                    }
                }
            }
        }
        done.retain(|_, c| *c != 0);
        done
    }
}

pub fn build_from_quiver(field: FieldPrime, q: &QuiverPresentation) -> Result<Arc<Algebra>> {
    let nv = q.vertices.len();
    let na = q.arrows.len();
    let mut arrow_ix: HashMap<&str, usize> = HashMap::new();
    for (i, (l, s, t)) in q.arrows.iter().enumerate() {
        if *s >= nv || *t >= nv {
            return Err(Error::InvalidAlgebra(format!("arrow {l} has an unknown endpoint")));
        }
        if arrow_ix.insert(l.as_str(), i).is_some() {
            return Err(Error::InvalidAlgebra(format!("duplicate arrow label {l}")));
        }
    }
    let a_src = |a: usize| q.arrows[a].1;
    let a_tgt = |a: usize| q.arrows[a].2;

    let mut rules = Vec::new();
    for (ri, rel) in q.relations.iter().enumerate() {
        let mut terms: BTreeMap<Path, u32> = BTreeMap::new();
        let mut ends = None;
        for (c, labels) in rel {
            let mut path = Vec::new();
            for l in labels {
                let &a = arrow_ix
                    .get(l.as_str())
                    .ok_or_else(|| Error::InvalidAlgebra(format!("relation {ri}: unknown arrow {l}")))?;
                path.push(a);
            }
            if path.len() < 2 {
                return Err(Error::InvalidAlgebra(format!(
                    "relation {ri} is not admissible: every path needs length at least 2"
                )));
            }
            for w in path.windows(2) {
                if a_tgt(w[0]) != a_src(w[1]) {
                    return Err(Error::InvalidAlgebra(format!("relation {ri}: path is not composable")));
                }
            }
            let e = (a_src(path[0]), a_tgt(*path.last().unwrap()));
            if *ends.get_or_insert(e) != e {
                return Err(Error::InvalidAlgebra(format!("relation {ri}: paths are not parallel")));
            }
            let v = terms.entry(path).or_insert(0);
            *v = field.add(*v, field.reduce(*c));
        }
        terms.retain(|_, c| *c != 0);
        let Some(lead) = terms.keys().max_by(|a, b| path_order(a, b)).cloned() else {
            continue;
        };
        let lc = terms[&lead];
        let inv = field.inv(lc);
        let rhs: Vec<(u32, Path)> = terms
            .into_iter()
            .filter(|(p, _)| *p != lead)
            .map(|(p, c)| (field.neg(field.mul(c, inv)), p))
            .collect();
        rules.push((lead, rhs));
    }
    let rw = Rewriter { field, rules };

    // ambiguity resolution (diamond lemma)
    for (i, (u, ru)) in rw.rules.iter().enumerate() {
        for (j, (v, rv)) in rw.rules.iter().enumerate() {
            // overlaps: u = A B, v = B C
            for k in 1..u.len().min(v.len()) {
                if u[u.len() - k..] != v[..k] {
                    continue;
                }
                let a = &u[..u.len() - k];
                let c = &v[k..];
                let left: Vec<(u32, Path)> = ru
                    .iter()
                    .map(|(cc, p)| {
                        let mut q = p.clone();
                        q.extend_from_slice(c);
                        (*cc, q)
                    })
                    .collect();
                let right: Vec<(u32, Path)> = rv
                    .iter()
                    .map(|(cc, p)| {
                        let mut q = a.to_vec();
                        q.extend_from_slice(p);
                        (*cc, q)
                    })
                    .collect();
                if rw.reduce(left) != rw.reduce(right) {
                    return Err(Error::InvalidAlgebra(format!("relations are not confluent (rules {i}, {j})")));
                }
            }
            if i != j {
                if let Some(s) = find_sub(u, v) {
                    let left: Vec<(u32, Path)> = ru.clone();
                    let right: Vec<(u32, Path)> = rv
                        .iter()
                        .map(|(cc, p)| {
                            let mut q = u[..s].to_vec();
                            q.extend_from_slice(p);
                            q.extend_from_slice(&u[s + v.len()..]);
                            (*cc, q)
                        })
                        .collect();
                    if rw.reduce(left) != rw.reduce(right) {
                        return Err(Error::InvalidAlgebra(format!(
                            "relations are not confluent (rules {i}, {j})"
                        )));
                    }
                }
            }
        }
    }

    // irreducible paths of length >= 1
    let mut paths: Vec<Path> = Vec::new();
    let mut level: Vec<Path> = (0..na).map(|a| vec![a]).filter(|p| !rw.reducible(p)).collect();
    let mut len = 1;
    while !level.is_empty() {
        if len > q.path_length_cap {
            return Err(Error::CapExceeded(format!(
                "nonzero path longer than the cap {}",
                q.path_length_cap
            )));
        }
        paths.extend(level.iter().cloned());
        let mut next = Vec::new();
        for p in &level {
            for a in 0..na {
                if a_tgt(*p.last().unwrap()) == a_src(a) {
                    let mut r = p.clone();
                    r.push(a);
                    if !rw.reducible(&r) {
                        next.push(r);
                    }
                }
            }
        }
        next.sort_by(path_order);
        level = next;
        len += 1;
    }
    paths.sort_by(path_order);

    let n = nv + paths.len();
    let mut labels: Vec<String> = q.vertices.iter().map(|v| format!("e{v}")).collect();
    let mut src: Vec<usize> = (0..nv).collect();
    let mut tgt: Vec<usize> = (0..nv).collect();
    let mut index: HashMap<Path, usize> = HashMap::new();
    for (k, p) in paths.iter().enumerate() {
        labels.push(p.iter().map(|&a| q.arrows[a].0.as_str()).collect::<Vec<_>>().join("*"));
        src.push(a_src(p[0]));
        tgt.push(a_tgt(*p.last().unwrap()));
        index.insert(p.clone(), nv + k);
    }
    let mut table = vec![Vec::new(); n * n];
    for x in 0..n {
        for y in 0..n {
            if tgt[x] != src[y] {
                continue;
            }
            table[x * n + y] = if x < nv {
                vec![(y, 1)]
            } else if y < nv {
                vec![(x, 1)]
            } else {
                let mut cat = paths[x - nv].clone();
                cat.extend_from_slice(&paths[y - nv]);
                rw.reduce(vec![(1, cat)]).into_iter().map(|(p, c)| (index[&p], c)).collect()
            };
        }
    }
    let alg = Algebra::new(field, q.vertices.clone(), labels, src, tgt, table, (0..nv).collect(), (nv..n).collect())?;
    let rep = alg.validate();
    if !rep.passed() {
        return Err(Error::InvalidAlgebra(format!(
            "relations are not confluent: {}",
            rep.failures().iter().map(|i| i.name.clone()).collect::<Vec<_>>().join(", ")
        )));
    }
    Ok(alg)
}

/// Standard test algebras.
pub mod samples {
    use super::*;

    fn s(x: &str) -> String {
        x.to_string()
    }

    /// `1 -> 2`
    pub fn a2() -> QuiverPresentation {
        QuiverPresentation {
            vertices: vec![s("1"), s("2")],
            arrows: vec![(s("a"), 0, 1)],
            relations: vec![],
            path_length_cap: 8,
        }
    }

    /// One loop `x` with `x^2 = 0`.
    pub fn dual_numbers() -> QuiverPresentation {
        QuiverPresentation {
            vertices: vec![s("1")],
            arrows: vec![(s("x"), 0, 0)],
            relations: vec![vec![(1, vec![s("x"), s("x")])]],
            path_length_cap: 8,
        }
    }

    /// `1 -> 2 -> 3`, optionally with the composite set to zero.
    pub fn a3(zero_relation: bool) -> QuiverPresentation {
        QuiverPresentation {
            vertices: vec![s("1"), s("2"), s("3")],
            arrows: vec![(s("a"), 0, 1), (s("b"), 1, 2)],
            relations: if zero_relation { vec![vec![(1, vec![s("a"), s("b")])]] } else { vec![] },
            path_length_cap: 8,
        }
    }

    /// `n` vertices and no arrows.
    pub fn semisimple(n: usize) -> QuiverPresentation {
        QuiverPresentation {
            vertices: (1..=n).map(|i| i.to_string()).collect(),
            arrows: vec![],
            relations: vec![],
            path_length_cap: 8,
        }
    }
}
