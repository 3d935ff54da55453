// Projective resolutions, Ext dimensions and the Auslander–Bridger transpose.

use auslander_lab::algebra::{build_from_quiver, samples};
use auslander_lab::linalg::FieldPrime;
use auslander_lab::repmod::presentation::projective_resolution;
use auslander_lab::repmod::{all_indecomposables, ext_dim, is_isomorphic, is_projective, tau, transpose_module};
use auslander_lab::Result;

pub fn run_example() -> Result<()> {
    let a = build_from_quiver(FieldPrime::new(5)?, &samples::a3(true))?;
    let ind = all_indecomposables(&a, 12)?;
    for (k, m) in ind.modules.iter().enumerate() {
        let res = projective_resolution(m, 5);
        let tr = transpose_module(m);
        println!("M{k} {:?}: pd {:?}, Tr {:?}, τ {:?}", m.dims(), res.length(), tr.dims(), tau(m).dims());
        if !is_projective(m) {
            let back = transpose_module(&tr);
            assert!(is_isomorphic(&back, m).is_some());
        }
    }
    let s1 = &ind.modules[0];
    println!("Ext^i(M0, M0) for i = 0..3: {:?}", (0..3).map(|i| ext_dim(i, s1, s1)).collect::<Vec<_>>());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
