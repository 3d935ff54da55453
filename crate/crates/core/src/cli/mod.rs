//! Session files, the four commands and their text/JSON/DOT outputs.

pub mod dot;

use crate::algebra::{build_from_quiver, Algebra, QuiverPresentation, TableSpec};
use crate::auslander::{
    auslander_algebra_dims, build_subcategories, grade, injectives_transfer, verify_ab_sequences, verify_structure,
    Caps, Carrier, Setting,
};
use crate::error::{Error, Result};
use crate::exactstruct::{brute_force_structures, enumerate_exact_structures, is_exact_structure, ExactStructure, ExtTable, Provenance};
use crate::functorcat::CategorySpec;
use crate::linalg::{FieldPrime, Matrix};
use crate::report::Report;
use crate::repmod::{all_indecomposables, projective_dimension, Indecomposables};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::fmt::Write;
use std::sync::Arc;

pub const ORACLE_GUARD: u64 = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CapsSpec {
    #[serde(default = "default_dim")]
    pub dim: usize,
    #[serde(default = "default_resolution")]
    pub resolution: usize,
    #[serde(default = "default_multiplicity")]
    pub multiplicity: usize,
}

fn default_dim() -> usize {
    Caps::default().dim
}

fn default_resolution() -> usize {
    Caps::default().resolution
}

fn default_multiplicity() -> usize {
    Caps::default().multiplicity
}

impl Default for CapsSpec {
    fn default() -> Self {
        CapsSpec { dim: default_dim(), resolution: default_resolution(), multiplicity: default_multiplicity() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Indecomposables,
    ExactStructures,
    Verify,
    Smodad(usize),
}

/// An explicit family of Ext¹ subspaces: `[z, a, basis vectors]`, absent pairs are zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    #[serde(default)]
    pub name: String,
    pub spans: Vec<(usize, usize, Vec<Vec<i64>>)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SessionSpec {
    pub p: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quiver: Option<QuiverPresentation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<TableSpec>,
    #[serde(default)]
    pub caps: CapsSpec,
    #[serde(default)]
    pub seed: u64,
    /// Knitting ids of the summands of `M`; all indecomposables when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<usize>>,
    #[serde(default)]
    pub oracle: bool,
    /// Structures to verify instead of the enumerated ones.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub structures: Vec<StructureFile>,
    #[serde(default)]
    pub commands: Vec<Command>,
}

impl SessionSpec {
    pub fn parse(text: &str) -> Result<SessionSpec> {
        let s: SessionSpec = serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))?;
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        match (&self.quiver, &self.table) {
            (Some(_), Some(_)) => return Err(Error::Input("give either quiver or table, not both".into())),
            (None, None) => return Err(Error::Input("missing algebra: quiver or table".into())),
            _ => {}
        }
        let c = self.caps;
        if c.dim == 0 || c.resolution == 0 || c.multiplicity == 0 {
            return Err(Error::Input("caps must be positive".into()));
        }
        Ok(())
    }

    pub fn caps(&self) -> Caps {
        Caps { dim: self.caps.dim, resolution: self.caps.resolution, multiplicity: self.caps.multiplicity, seed: self.seed }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

/// The result of one command.
#[derive(Clone, Debug)]
pub struct Output {
    pub command: String,
    pub text: String,
    pub json: Value,
    /// `(file stem, DOT source)`
    pub dots: Vec<(String, String)>,
    pub passed: bool,
}

/// Exit code for a command result: 0 pass, 1 failed check, 2 bad input, 3 cap or guard.
pub fn exit_code(r: &Result<Output>) -> i32 {
    match r {
        Ok(o) if o.passed => 0,
        Ok(_) => 1,
        Err(Error::CapExceeded(_)) => 3,
        Err(_) => 2,
    }
}

/// Algebra, `mod Λ` and the chosen `add(M)`.
pub struct Context {
    pub session: SessionSpec,
    pub alg: Arc<Algebra>,
    pub lam: Indecomposables,
    pub spec: CategorySpec,
}

impl Context {
    pub fn new(session: &SessionSpec) -> Result<Context> {
        session.validate()?;
        let field = FieldPrime::new(session.p).map_err(|e| Error::Input(e.to_string()))?;
        let alg = match (&session.quiver, &session.table) {
            (Some(q), _) => build_from_quiver(field, q),
            (_, Some(t)) => Algebra::from_table(field, t),
            _ => unreachable!("validated"),
        }
        .map_err(|e| match e {
            Error::CapExceeded(_) => e,
            other => Error::Input(other.to_string()),
        })?;
        let lam = all_indecomposables(&alg, session.caps.dim)?;
        let spec = match &session.generators {
            None => CategorySpec::from_indecomposables(&lam),
            Some(ids) => {
                if let Some(bad) = ids.iter().find(|&&k| k >= lam.len()) {
                    return Err(Error::Input(format!("generator id {bad} out of range 0..{}", lam.len())));
                }
                let mut ids = ids.clone();
                ids.sort();
                ids.dedup();
                let ms = ids.iter().map(|&k| lam.modules[k].clone()).collect();
                CategorySpec::new(&alg, ms).map_err(|e| Error::Input(e.to_string()))?
            }
        };
        Ok(Context { session: session.clone(), alg, lam, spec })
    }

    fn is_mod_lambda(&self) -> bool {
        self.spec.len() == self.lam.len()
    }

    fn heading(&self, what: &str) -> String {
        let name = match &self.session.quiver {
            Some(q) => format!("quiver on {} vertices, {} arrows", q.vertices.len(), q.arrows.len()),
            None => format!("table algebra of dimension {}", self.alg.dim()),
        };
        format!("== {what}: {name} over GF({}) ==\n", self.session.p)
    }

    fn structures(&self, t: &ExtTable) -> Result<Vec<ExactStructure>> {
        if self.session.structures.is_empty() {
            return enumerate_exact_structures(t);
        }
        self.session.structures.iter().map(|s| parse_structure(t, s)).collect()
    }
}

fn parse_structure(t: &ExtTable, s: &StructureFile) -> Result<ExactStructure> {
    let f = t.field();
    let n = t.n();
    let mut sub: Vec<Vec<Matrix>> = (0..n).map(|z| (0..n).map(|a| Matrix::zeros(f, t.dim(z, a), 0)).collect()).collect();
    for (z, a, vecs) in &s.spans {
        if *z >= n || *a >= n {
            return Err(Error::Input(format!("structure {:?}: pair ({z}, {a}) out of range", s.name)));
        }
        let d = t.dim(*z, *a);
        let mut cols = Vec::new();
        for v in vecs {
            if v.len() != d {
                return Err(Error::Input(format!("structure {:?}: Ext¹(M{z}, M{a}) has dimension {d}", s.name)));
            }
            cols.push(v.iter().map(|&c| f.reduce(c)).collect::<Vec<u32>>());
        }
        sub[*z][*a] = Matrix::from_columns(f, d, &cols).hstack(&sub[*z][*a]).column_space();
    }
    Ok(ExactStructure::from_spans(sub, Provenance::Custom))
}

fn dims_str(d: &[usize]) -> String {
    d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn nonzero_pairs(e: &ExactStructure) -> Vec<(usize, usize, usize)> {
    let d = e.dims();
    let mut out = Vec::new();
    for (z, row) in d.iter().enumerate() {
        for (a, &k) in row.iter().enumerate() {
            if k > 0 {
                out.push((z, a, k));
            }
        }
    }
    out
}

pub fn cmd_indecomposables(ctx: &Context) -> Result<Output> {
    let lam = &ctx.lam;
    let mut text = ctx.heading("indecomposables");
    writeln!(text, "{} indecomposables", lam.len()).unwrap();
    let mut rows = Vec::new();
    for (k, m) in lam.modules.iter().enumerate() {
        let tau = lam.ar[k].as_ref().map(|a| a.tau);
        let mut flags = Vec::new();
        for (on, f) in [(lam.projective[k], "projective"), (lam.injective[k], "injective"), (lam.simple[k], "simple")] {
            if on {
                flags.push(f);
            }
        }
        let tau_s = tau.map_or("-".to_string(), |t| format!("M{t}"));
        writeln!(text, "  M{k}  dim [{}]  τ = {tau_s}  {}", dims_str(m.dims()), flags.join(", ")).unwrap();
        rows.push(json!({"id": k, "dims": m.dims(), "projective": lam.projective[k], "injective": lam.injective[k], "simple": lam.simple[k], "tau": tau}));
    }
    writeln!(text, "irreducible maps:").unwrap();
    for &(a, b, mult) in &lam.irreducible {
        writeln!(text, "  M{a} -> M{b}  ×{mult}").unwrap();
    }
    let json = json!({"command": "indecomposables", "p": ctx.session.p, "indecomposables": rows, "irreducible": lam.irreducible});
    Ok(Output { command: "indecomposables".into(), text, json, dots: vec![("ar".into(), dot::ar_quiver(lam))], passed: true })
}

pub fn cmd_exact_structures(ctx: &Context, oracle: bool) -> Result<Output> {
    let t = ExtTable::new(&ctx.spec)?;
    let list = enumerate_exact_structures(&t)?;
    let mut text = ctx.heading("exact structures");
    writeln!(text, "{} exact structures on add(M), M with {} summands", list.len(), t.n()).unwrap();
    let mut rows = Vec::new();
    for (i, e) in list.iter().enumerate() {
        let pairs: Vec<String> = nonzero_pairs(e).iter().map(|(z, a, k)| format!("Ext¹(M{z}, M{a}):{k}")).collect();
        let desc = if pairs.is_empty() { "split".to_string() } else { pairs.join(", ") };
        writeln!(text, "  E{i}  dim {}  {desc}", e.total_dim()).unwrap();
        rows.push(json!({"id": i, "total_dim": e.total_dim(), "dims": e.dims(), "provenance": e.provenance}));
    }
    let edges = crate::exactstruct::hasse_edges(&list);
    writeln!(text, "covering relations:").unwrap();
    for (a, b) in &edges {
        writeln!(text, "  E{a} < E{b}").unwrap();
    }
    let mut passed = true;
    let mut oracle_json = Value::Null;
    if oracle {
        let bf = brute_force_structures(&t, ctx.session.caps.multiplicity, ORACLE_GUARD)?;
        let same = bf.len() == list.len() && bf.iter().all(|o| list.iter().any(|e| e.same_as(o)));
        passed = same;
        let tag = if same { "PASS" } else { "FAIL" };
        writeln!(text, "[{tag}] brute-force oracle: {} structures", bf.len()).unwrap();
        oracle_json = json!({"count": bf.len(), "agrees": same});
    }
    let json = json!({"command": "exact-structures", "p": ctx.session.p, "structures": rows, "hasse": edges, "oracle": oracle_json});
    Ok(Output { command: "exact-structures".into(), text, json, dots: vec![("lattice".into(), dot::lattice(&list))], passed })
}

/// Section name of a report item: the text before the first `": "`.
fn section(name: &str) -> (&str, &str) {
    name.split_once(": ").unwrap_or(("other", name))
}

fn verify_one(s: &Setting, e: &ExactStructure) -> Report {
    let mut r = match verify_structure(s, e) {
        Ok(r) => r,
        Err(err) => {
            let mut r = Report::new("structure checks");
            r.check("aborted: verification", false, err.to_string());
            r
        }
    };
    if e.provenance == Provenance::Custom {
        let ex = is_exact_structure(&s.table, e, s.caps.multiplicity);
        r.items.insert(0, crate::report::Item {
            name: "input: family is an exact structure".into(),
            pass: ex.passed(),
            detail: ex.failures().iter().map(|i| i.name.clone()).collect::<Vec<_>>().join("; "),
        });
    }
    r
}

pub fn cmd_verify(ctx: &Context) -> Result<Output> {
    let s = Setting::new(&ctx.spec, ctx.session.caps())?;
    let list = ctx.structures(&s.table)?;
    let reports: Vec<Report> = std::thread::scope(|scope| {
        let handles: Vec<_> = list.iter().map(|e| scope.spawn(|| verify_one(&s, e))).collect();
        handles.into_iter().map(|h| h.join().expect("verification thread")).collect()
    });
    let mut text = ctx.heading("verify");
    writeln!(text, "{} structures", list.len()).unwrap();
    let mut sections: Vec<String> = Vec::new();
    for r in &reports {
        for it in &r.items {
            let sec = section(&it.name).0.to_string();
            if !sections.contains(&sec) {
                sections.push(sec);
            }
        }
    }
    let mut passed = true;
    let mut sec_json = Vec::new();
    for sec in &sections {
        let ok = reports.iter().all(|r| r.items.iter().filter(|i| section(&i.name).0 == sec).all(|i| i.pass));
        writeln!(text, "-- {sec} [{}] --", if ok { "PASS" } else { "FAIL" }).unwrap();
        let mut per = Vec::new();
        for (i, r) in reports.iter().enumerate() {
            let items: Vec<_> = r.items.iter().filter(|it| section(&it.name).0 == sec).collect();
            let sok = items.iter().all(|it| it.pass);
            writeln!(text, "  E{i} {}", if sok { "PASS" } else { "FAIL" }).unwrap();
            for it in &items {
                let tag = if it.pass { "PASS" } else { "FAIL" };
                writeln!(text, "    [{tag}] {}: {}", section(&it.name).1, it.detail).unwrap();
            }
            per.push(json!({"structure": i, "pass": sok, "items": items}));
        }
        passed &= ok;
        sec_json.push(json!({"section": sec, "pass": ok, "structures": per}));
    }
    let mut global = verify_ab_sequences(&s)?;
    if ctx.is_mod_lambda() {
        let (dd, gd) = auslander_algebra_dims(&s);
        global.check(
            "Auslander algebra: domdim ≥ 2 ≥ gldim",
            dd.at_least(2) && gd.at_most(2),
            format!("domdim {dd}, gldim {gd}, cutoff {}", s.caps.resolution),
        );
        let tr = injectives_transfer(&s, &ctx.lam);
        let bad: Vec<usize> = tr.iter().filter(|(_, ok)| !ok).map(|(k, _)| *k).collect();
        global.check("yoneda(I) injective for injective I", bad.is_empty(), format!("{} injectives; failing {bad:?}", tr.len()));
    }
    passed &= global.passed();
    write!(text, "{global}").unwrap();
    writeln!(text, "overall: {}", if passed { "PASS" } else { "FAIL" }).unwrap();
    let structs: Vec<Value> = list.iter().enumerate().map(|(i, e)| json!({"id": i, "dims": e.dims()})).collect();
    let json = json!({
        "command": "verify", "p": ctx.session.p, "caps": s.caps, "structures": structs,
        "sections": sec_json, "global": global, "pass": passed,
    });
    Ok(Output { command: "verify".into(), text, json, dots: Vec::new(), passed })
}

pub fn cmd_smodad(ctx: &Context, id: usize) -> Result<Output> {
    let s = Setting::new(&ctx.spec, ctx.session.caps())?;
    let list = ctx.structures(&s.table)?;
    let e = list.get(id).ok_or_else(|| Error::Input(format!("unknown structure id {id}; {} structures", list.len())))?;
    let subs = build_subcategories(&s, e)?;
    let mut text = ctx.heading(&format!("smod_ad of E{id}"));
    let show = |v: &[usize]| v.iter().map(|k| format!("F{k}")).collect::<Vec<_>>().join(" ");
    writeln!(text, "Γ has dimension {} and {} indecomposable modules", s.gamma().dim(), s.gind.len()).unwrap();
    writeln!(text, "smod_ad   ({}): {}", subs.smodad.len(), show(&subs.smodad.ids)).unwrap();
    writeln!(text, "eff       ({}): {}", subs.eff.len(), show(&subs.eff.ids)).unwrap();
    writeln!(text, "cogen Q   ({}): {}", subs.cogen_q.len(), show(&subs.cogen_q.ids)).unwrap();
    writeln!(text, "⊥Q        ({}): {}", subs.perp_q.len(), show(&subs.perp_q.ids)).unwrap();
    writeln!(text, "torsion-free ({}): {}", subs.torsion_free.len(), show(&subs.torsion_free.ids)).unwrap();
    writeln!(text, "members:").unwrap();
    let cutoff = s.caps.resolution;
    let mut rows = Vec::new();
    for &k in &subs.smodad.ids {
        let m = &s.gind.modules[k];
        let g = grade(m, s.projectives(Carrier::Gamma), cutoff);
        let pd = projective_dimension(m, cutoff);
        let pd_s = pd.map_or(format!("> {cutoff}"), |d| d.to_string());
        let kind = if subs.eff.contains(k) { "eff" } else if s.gind.projective[k] { "projective" } else { "" };
        writeln!(text, "  F{k}  dim [{}]  grade {g}  pd {pd_s}  {kind}", dims_str(m.dims())).unwrap();
        rows.push(json!({"id": k, "dims": m.dims(), "grade": g.to_string(), "pd": pd, "eff": subs.eff.contains(k)}));
    }
    let json = json!({"command": "smodad", "structure": id, "subcategories": subs, "members": rows});
    Ok(Output { command: format!("smodad-{id}"), text, json, dots: Vec::new(), passed: true })
}

pub fn run_command(ctx: &Context, c: &Command, oracle: bool) -> Result<Output> {
    match c {
        Command::Indecomposables => cmd_indecomposables(ctx),
        Command::ExactStructures => cmd_exact_structures(ctx, oracle),
        Command::Verify => cmd_verify(ctx),
        Command::Smodad(id) => cmd_smodad(ctx, *id),
    }
}
