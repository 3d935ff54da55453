// Driving the command layer from an in-memory session.

use auslander_lab::cli::{cmd_smodad, cmd_verify, Context, SessionSpec};
use auslander_lab::Result;

const SESSION: &str = r#"{
  "p": 3,
  "quiver": {"vertices": ["1"], "arrows": [["x", 0, 0]], "relations": [[[1, ["x", "x"]]]]},
  "caps": {"dim": 20, "resolution": 5, "multiplicity": 2},
  "seed": 11
}"#;

pub fn run_example() -> Result<()> {
    let ctx = Context::new(&SessionSpec::parse(SESSION)?)?;
    let v = cmd_verify(&ctx)?;
    print!("{}", v.text);
    assert!(v.passed);
    print!("{}", cmd_smodad(&ctx, 1)?.text);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
