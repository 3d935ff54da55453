// The sequence 0 -> Ext¹(TrF, Γ) -> F -> F** -> Ext²(TrF, Γ) -> 0 over an Auslander algebra.

use auslander_lab::algebra::{build_from_quiver, samples};
use auslander_lab::auslander::{ab_sequence, Caps, Setting};
use auslander_lab::linalg::FieldPrime;
use auslander_lab::Result;

pub fn run_example() -> Result<()> {
    let a = build_from_quiver(FieldPrime::new(3)?, &samples::a2())?;
    let (_, s) = Setting::mod_lambda(&a, Caps::default())?;
    for (k, m) in s.gind.modules.iter().enumerate() {
        let ab = ab_sequence(m)?;
        println!("F{k} {:?}: ker ev {:?} = Ext¹ {:?}, coker ev {:?} = Ext² {:?}", m.dims(), ab.ker, ab.ext1, ab.coker, ab.ext2);
        assert!(ab.exact());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
