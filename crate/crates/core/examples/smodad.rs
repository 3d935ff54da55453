// eff, smod_ad and the torsion decomposition for the abelian structure on mod kA2.

use auslander_lab::algebra::{build_from_quiver, samples};
use auslander_lab::auslander::{build_subcategories, torsion_decomposition, Caps, Setting};
use auslander_lab::exactstruct::ExactStructure;
use auslander_lab::linalg::FieldPrime;
use auslander_lab::Result;

pub fn run_example() -> Result<()> {
    let a = build_from_quiver(FieldPrime::new(2)?, &samples::a2())?;
    let (_, s) = Setting::mod_lambda(&a, Caps::default())?;
    for (name, e) in [("split", ExactStructure::split(&s.table)), ("abelian", ExactStructure::maximal(&s.table))] {
        let subs = build_subcategories(&s, &e)?;
        println!("{name}: smod_ad {:?}, eff {:?}, cogen Q {:?}", subs.smodad.ids, subs.eff.ids, subs.cogen_q.ids);
        for &k in &subs.smodad.ids {
            let tp = torsion_decomposition(&s, &s.functors[k], &e)?;
            assert!(tp.seq.is_exact());
            println!("  F{k}: torsion {:?}, free {:?}", tp.torsion_ids, tp.free_ids);
        }
        assert!(subs.eff.same_ids(&subs.perp_q));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
