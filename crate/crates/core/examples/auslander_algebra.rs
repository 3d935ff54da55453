// The Auslander algebra of k[x]/(x²): Yoneda, localization and homological dimensions.

use auslander_lab::algebra::{build_from_quiver, samples};
use auslander_lab::auslander::{auslander_algebra_dims, Caps, Carrier, Setting};
use auslander_lab::linalg::FieldPrime;
use auslander_lab::repmod::{is_isomorphic, is_projective, Bounded};
use auslander_lab::Result;

pub fn run_example() -> Result<()> {
    let a = build_from_quiver(FieldPrime::new(5)?, &samples::dual_numbers())?;
    let (_, s) = Setting::mod_lambda(&a, Caps::default())?;
    println!("Γ = End(M): dimension {}, {} indecomposable modules", s.gamma().dim(), s.gind.len());
    for (i, p) in s.projectives(Carrier::Gamma).iter().enumerate() {
        assert!(is_projective(p));
        let back = s.ea.localize_l(p)?;
        assert!(is_isomorphic(&back, s.ea.summand(i)).is_some());
    }
    let (dd, gd) = auslander_algebra_dims(&s);
    println!("domdim {dd}, gldim {gd}");
    assert!(dd.at_least(2));
    assert_eq!(gd, Bounded::Exactly(2));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
