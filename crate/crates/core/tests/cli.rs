use auslander_lab::cli::{
    cmd_exact_structures, cmd_indecomposables, cmd_smodad, cmd_verify, exit_code, CapsSpec, Command, Context, SessionSpec,
};
use proptest::prelude::*;
use std::path::PathBuf;
use std::process::Command as Proc;

fn sessions() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../sessions")
}

fn load(name: &str) -> SessionSpec {
    SessionSpec::parse(&std::fs::read_to_string(sessions().join(name)).unwrap()).unwrap()
}

fn ctx(name: &str) -> Context {
    Context::new(&load(name)).unwrap()
}

fn auslab(args: &[&str]) -> (i32, String) {
    let out = Proc::new(env!("CARGO_BIN_EXE_auslab")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn session_path(name: &str) -> String {
    sessions().join(name).to_string_lossy().into_owned()
}

fn edge_lines(dot: &str) -> (usize, usize) {
    let edges: Vec<&str> = dot.lines().filter(|l| l.contains("->")).collect();
    let dashed = edges.iter().filter(|l| l.contains("dashed")).count();
    (edges.len() - dashed, dashed)
}

fn node_lines(dot: &str, prefix: &str) -> usize {
    dot.lines().filter(|l| l.trim_start().starts_with(prefix) && l.contains("[label")).count()
}

#[test]
fn a2_ar_quiver() {
    let out = cmd_indecomposables(&ctx("a2.json")).unwrap();
    let dot = &out.dots[0].1;
    assert_eq!(node_lines(dot, "M"), 3);
    assert_eq!(edge_lines(dot), (2, 1));
}

#[test]
fn semisimple_ar_quiver_is_discrete() {
    let out = cmd_indecomposables(&ctx("semisimple.json")).unwrap();
    let dot = &out.dots[0].1;
    assert_eq!(node_lines(dot, "M"), 3);
    assert_eq!(edge_lines(dot), (0, 0));
    let out = cmd_exact_structures(&ctx("semisimple.json"), true).unwrap();
    assert_eq!(node_lines(&out.dots[0].1, "E"), 1);
    assert!(out.passed);
}

#[test]
fn lattice_shapes() {
    let out = cmd_exact_structures(&ctx("a2.json"), false).unwrap();
    assert_eq!(node_lines(&out.dots[0].1, "E"), 2);
    assert_eq!(edge_lines(&out.dots[0].1), (1, 0));

    let out = cmd_exact_structures(&ctx("a3.json"), true).unwrap();
    assert!(out.passed);
    let dot = &out.dots[0].1;
    assert_eq!(node_lines(dot, "E"), 8);
    assert_eq!(edge_lines(dot), (12, 0));
    // Boolean lattice on 3 atoms: out-degrees 3,2,2,2,1,1,1,0
    let mut deg = [0usize; 8];
    for l in dot.lines().filter(|l| l.contains("->")) {
        let src: usize = l.trim().trim_start_matches('E').split(' ').next().unwrap().parse().unwrap();
        deg[src] += 1;
    }
    let mut sorted = deg.to_vec();
    sorted.sort();
    assert_eq!(sorted, vec![0, 1, 1, 1, 2, 2, 2, 3]);
}

#[test]
fn stock_sessions_verify_green() {
    for name in ["a2.json", "dual_numbers.json"] {
        let out = cmd_verify(&ctx(name)).unwrap();
        assert!(out.passed, "{name}\n{}", out.text);
        assert!(out.text.contains("multiplicity") || out.text.contains("≤ 2"), "bounds are stated");
    }
}

#[test]
fn corrupted_structure_fails_round_trip() {
    let out = cmd_verify(&ctx("a3_corrupted.json")).unwrap();
    assert!(!out.passed);
    assert!(out.text.contains("-- round trip [FAIL] --"));
    let (code, _) = auslab(&["verify", &session_path("a3_corrupted.json")]);
    assert_eq!(code, 1);
}

#[test]
fn smodad_tables() {
    let c = ctx("a2.json");
    let split = cmd_smodad(&c, 0).unwrap();
    let subs = &split.json["subcategories"];
    assert_eq!(subs["eff"]["ids"].as_array().unwrap().len(), 0);
    assert_eq!(subs["smodad"]["ids"].as_array().unwrap().len(), 3);
    let ab = cmd_smodad(&c, 1).unwrap();
    let subs = &ab.json["subcategories"];
    assert_eq!(subs["smodad"]["ids"].as_array().unwrap().len(), 5);
    assert_eq!(subs["eff"]["ids"].as_array().unwrap().len(), 1);
    let r = cmd_smodad(&c, 2);
    assert!(r.is_err());
    assert_eq!(exit_code(&r), 2);
}

#[test]
fn exit_codes() {
    assert_eq!(auslab(&["run", &session_path("a2.json")]).0, 0);
    assert_eq!(auslab(&["smodad", &session_path("a2.json"), "--structure", "5"]).0, 2);
    assert_eq!(auslab(&["run", &session_path("kronecker.json")]).0, 3);
    let dir = std::env::temp_dir().join(format!("auslab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{\"p\": 2, \"quiver\": ").unwrap();
    assert_eq!(auslab(&["run", bad.to_str().unwrap()]).0, 2);
    std::fs::write(&bad, "{\"p\": 4, \"quiver\": {\"vertices\": [\"1\"], \"arrows\": []}}").unwrap();
    assert_eq!(auslab(&["indecomposables", bad.to_str().unwrap()]).0, 2);
    std::fs::write(&bad, "{\"p\": 2, \"quiver\": {\"vertices\": [\"1\"], \"arrows\": []}, \"caps\": {\"dim\": 0}}").unwrap();
    assert_eq!(auslab(&["indecomposables", bad.to_str().unwrap()]).0, 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn reports_are_byte_identical() {
    let base = std::env::temp_dir().join(format!("auslab-det-{}", std::process::id()));
    let (a, b) = (base.join("a"), base.join("b"));
    for d in [&a, &b] {
        let (code, _) = auslab(&["run", &session_path("a3_rel.json"), "--out", d.to_str().unwrap()]);
        assert_eq!(code, 0);
    }
    let mut names: Vec<_> = std::fs::read_dir(&a).unwrap().map(|e| e.unwrap().file_name()).collect();
    names.sort();
    assert!(names.len() >= 4);
    for n in names {
        assert_eq!(std::fs::read(a.join(&n)).unwrap(), std::fs::read(b.join(&n)).unwrap(), "{n:?}");
    }
    std::fs::remove_dir_all(&base).unwrap();
}

#[test]
fn table_sessions_match_quiver_sessions() {
    let q = ctx("a2.json");
    let mut s = load("a2.json");
    s.table = Some(q.alg.to_table());
    s.quiver = None;
    let t = Context::new(&s).unwrap();
    assert_eq!(t.lam.len(), 3);
    assert_eq!(cmd_exact_structures(&t, false).unwrap().json["structures"], cmd_exact_structures(&q, false).unwrap().json["structures"]);
    s.quiver = load("a2.json").quiver;
    assert!(Context::new(&s).is_err());
}

#[test]
fn generators_select_a_subcategory() {
    let mut s = load("a3_rel.json");
    let c = Context::new(&s).unwrap();
    let proj: Vec<usize> = (0..c.lam.len()).filter(|&k| c.lam.projective[k]).collect();
    s.generators = Some(proj.clone());
    let c = Context::new(&s).unwrap();
    assert_eq!(c.spec.len(), proj.len());
    let out = cmd_exact_structures(&c, false).unwrap();
    assert_eq!(out.json["structures"].as_array().unwrap().len(), 1);
    s.generators = Some(vec![99]);
    assert!(Context::new(&s).is_err());
}

fn command() -> impl Strategy<Value = Command> {
    prop_oneof![
        Just(Command::Indecomposables),
        Just(Command::ExactStructures),
        Just(Command::Verify),
        (0usize..10).prop_map(Command::Smodad),
    ]
}

proptest! {
    #[test]
    fn sessions_parse_losslessly(
        p in prop_oneof![Just(2u64), Just(3), Just(5), Just(7)],
        dim in 1usize..100, resolution in 1usize..10, multiplicity in 1usize..4,
        seed in any::<u64>(), oracle in any::<bool>(),
        commands in proptest::collection::vec(command(), 0..5),
    ) {
        let mut s = load("a3.json");
        s.p = p;
        s.caps = CapsSpec { dim, resolution, multiplicity };
        s.seed = seed;
        s.oracle = oracle;
        s.commands = commands;
        let back = SessionSpec::parse(&s.to_json()).unwrap();
        prop_assert_eq!(back, s);
    }
}
