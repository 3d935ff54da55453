// The lattice of exact structures on mod kA3, checked against the brute-force oracle.

use auslander_lab::algebra::{build_from_quiver, samples};
use auslander_lab::cli::dot;
use auslander_lab::exactstruct::{brute_force_structures, enumerate_exact_structures, is_exact_structure, ExtTable};
use auslander_lab::functorcat::CategorySpec;
use auslander_lab::linalg::FieldPrime;
use auslander_lab::repmod::all_indecomposables;
use auslander_lab::Result;

pub fn run_example() -> Result<()> {
    let a = build_from_quiver(FieldPrime::new(2)?, &samples::a3(false))?;
    let ind = all_indecomposables(&a, 12)?;
    let t = ExtTable::new(&CategorySpec::from_indecomposables(&ind))?;
    let list = enumerate_exact_structures(&t)?;
    let oracle = brute_force_structures(&t, 2, 1 << 16)?;
    assert_eq!(list.len(), 8);
    assert!(oracle.iter().all(|o| list.iter().any(|e| e.same_as(o))));
    for e in &list {
        assert!(is_exact_structure(&t, e, 2).passed());
    }
    print!("{}", dot::lattice(&list));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
