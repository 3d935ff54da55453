// Knitting the AR quiver of kA3 and printing it in DOT.

use auslander_lab::algebra::{build_from_quiver, samples};
use auslander_lab::cli::dot;
use auslander_lab::linalg::FieldPrime;
use auslander_lab::repmod::{all_indecomposables, brute_force_indecomposables};
use auslander_lab::Result;

pub fn run_example() -> Result<()> {
    let a = build_from_quiver(FieldPrime::new(2)?, &samples::a3(false))?;
    let ind = all_indecomposables(&a, 12)?;
    assert_eq!(ind.len(), 6);
    let bf = brute_force_indecomposables(&a, 3, 1 << 20)?;
    assert_eq!(bf.len(), ind.len());
    assert!(bf.iter().all(|m| ind.find(m).is_some()));
    print!("{}", dot::ar_quiver(&ind));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
