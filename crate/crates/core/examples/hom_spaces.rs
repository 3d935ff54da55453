// Homomorphism spaces between quiver representations.

use auslander_lab::algebra::{build_from_quiver, samples};
use auslander_lab::linalg::FieldPrime;
use auslander_lab::repmod::{hom_basis, hom_dim, standard_modules};
use auslander_lab::Result;

pub fn run_example() -> Result<()> {
    let a = build_from_quiver(FieldPrime::new(2)?, &samples::a3(false))?;
    let s = standard_modules(&a);
    let n = a.num_vertices();
    println!("dim Hom(P_i, P_j) for linear kA3:");
    for i in 0..n {
        let row: Vec<usize> = (0..n).map(|j| hom_dim(&s.projectives[i], &s.projectives[j])).collect();
        println!("  {row:?}");
    }
    let basis = hom_basis(&s.projectives[0], &s.injectives[2])?;
    assert!(basis.iter().all(|f| f.is_homomorphism()));
    assert_eq!(hom_dim(&s.simples[0], &s.simples[1]), 0);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
