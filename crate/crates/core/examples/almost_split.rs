// Almost split sequences over k[x]/(x²) and kA2.

use auslander_lab::algebra::{build_from_quiver, samples};
use auslander_lab::linalg::FieldPrime;
use auslander_lab::repmod::{all_indecomposables, ar_sequence, is_projective};
use auslander_lab::Result;

pub fn run_example() -> Result<()> {
    for q in [samples::dual_numbers(), samples::a2()] {
        let a = build_from_quiver(FieldPrime::new(3)?, &q)?;
        let ind = all_indecomposables(&a, 12)?;
        for z in ind.modules.iter().filter(|m| !is_projective(m)) {
            let s = ar_sequence(z, &ind.modules)?;
            assert!(s.seq.is_exact() && !s.seq.is_split());
            println!(
                "0 -> {:?} -> {:?} -> {:?} -> 0",
                s.seq.left().dims(),
                s.seq.middle().dims(),
                s.seq.right().dims()
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
