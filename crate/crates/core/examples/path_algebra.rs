// A bound quiver algebra from a presentation, and its opposite.

use auslander_lab::algebra::{build_from_quiver, samples};
use auslander_lab::linalg::FieldPrime;
use auslander_lab::Result;

pub fn run_example() -> Result<()> {
    let a = build_from_quiver(FieldPrime::new(3)?, &samples::a3(true))?;
    println!("kA3 with ab = 0: dimension {}, Loewy length {}", a.dim(), a.loewy_length());
    for b in 0..a.dim() {
        println!("  {:>4}  {} -> {}", a.label(b), a.src(b), a.tgt(b));
    }
    assert_eq!(a.dim(), 5);
    assert!(a.validate().passed());
    let op = a.op();
    assert!(op.validate().passed());
    assert_eq!(op.opposite()?.to_table(), a.to_table());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
