// Every exact structure on mod kA3 is recovered from its smod_ad.

use auslander_lab::algebra::{build_from_quiver, samples};
use auslander_lab::auslander::{build_subcategories, reconstruct_structure, resolving_closure, p2_ambient, Caps, Carrier, Setting};
use auslander_lab::exactstruct::enumerate_exact_structures;
use auslander_lab::linalg::FieldPrime;
use auslander_lab::Result;

pub fn run_example() -> Result<()> {
    let a = build_from_quiver(FieldPrime::new(5)?, &samples::a3(false))?;
    let (_, s) = Setting::mod_lambda(&a, Caps::default())?;
    let amb = p2_ambient(&s.gind, Carrier::Gamma, 6);
    for (i, e) in enumerate_exact_structures(&s.table)?.iter().enumerate() {
        let subs = build_subcategories(&s, e)?;
        let back = reconstruct_structure(&s, &subs.smodad)?;
        assert!(back.same_as(e));
        let cl = resolving_closure(&s.gind, &subs.eff, &amb)?;
        assert!(cl.same_ids(&subs.smodad));
        println!("E{i}: |smod_ad| = {}, |eff| = {}, recovered", subs.smodad.len(), subs.eff.len());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
