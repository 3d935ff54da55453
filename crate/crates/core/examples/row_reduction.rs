// Exact linear algebra over GF(5): rref, kernel, rank and an exact solve.

use auslander_lab::linalg::{FieldPrime, Matrix};
use auslander_lab::Result;

pub fn run_example() -> Result<()> {
    let f = FieldPrime::new(5)?;
    let m = Matrix::from_rows(f, &[vec![1, 2, 3, 4], vec![2, 4, 1, 3], vec![3, 1, 4, 2]]);
    let (r, pivots) = m.rref();
    println!("rref = {r:?}, pivots {pivots:?}");
    let k = m.kernel_basis();
    assert_eq!(m.rank() + k.cols(), m.cols());
    assert!(m.mul(&k).is_zero());
    let b = Matrix::column_vector(f, &m.mul_vec(&[1, 0, 2, 0]));
    let x = m.solve_right(&b)?;
    assert_eq!(m.mul(&x), b);
    println!("rank {}, nullity {}, solved a·x = b exactly", m.rank(), k.cols());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
