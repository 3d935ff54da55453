// smod_ad of a resolving subcategory, read off from restriction to the projectives.

use auslander_lab::algebra::{build_from_quiver, samples};
use auslander_lab::auslander::{restricted_description, Caps, Carrier, SubTag, SubcategorySpec};
use auslander_lab::linalg::FieldPrime;
use auslander_lab::repmod::{all_indecomposables, projective_dimension};
use auslander_lab::Result;

pub fn run_example() -> Result<()> {
    let a = build_from_quiver(FieldPrime::new(2)?, &samples::a3(true))?;
    let lam = all_indecomposables(&a, 12)?;
    let ids = (0..lam.len()).filter(|&k| projective_dimension(&lam.modules[k], 4).is_some_and(|d| d <= 1)).collect();
    let x = SubcategorySpec::new(Carrier::Lambda, ids, SubTag::Custom);
    let r = restricted_description(&lam, &x, Caps::default())?;
    print!("{r}");
    assert!(r.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
