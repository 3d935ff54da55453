// Splitting a module into indecomposables via idempotents of its endomorphism ring.

use auslander_lab::algebra::{build_from_quiver, samples};
use auslander_lab::linalg::FieldPrime;
use auslander_lab::repmod::standard::regular_module;
use auslander_lab::repmod::{decompose, is_isomorphic, DirectSum};
use auslander_lab::Result;

pub fn run_example() -> Result<()> {
    let a = build_from_quiver(FieldPrime::new(5)?, &samples::a3(false))?;
    let reg = regular_module(&a);
    let parts = decompose(&reg);
    println!("Λ_Λ for linear kA3 splits into {} summands:", parts.len());
    for p in &parts {
        println!("  dim {:?}", p.module.dims());
    }
    assert_eq!(parts.len(), 3);
    let rebuilt = DirectSum::new(&a, &parts.iter().map(|p| p.module.clone()).collect::<Vec<_>>());
    assert!(is_isomorphic(&rebuilt.module, &reg).is_some());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
