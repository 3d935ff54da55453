mod row_reduction {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/row_reduction.rs"));
}
mod path_algebra {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/path_algebra.rs"));
}
mod hom_spaces {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/hom_spaces.rs"));
}
mod krull_schmidt {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/krull_schmidt.rs"));
}
mod knitting {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/knitting.rs"));
}
mod almost_split {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/almost_split.rs"));
}
mod transpose_ext {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/transpose_ext.rs"));
}
mod exact_structures {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/exact_structures.rs"));
}
mod auslander_algebra {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/auslander_algebra.rs"));
}
mod smodad {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/smodad.rs"));
}
mod ab_sequence {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/ab_sequence.rs"));
}
mod round_trip {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/round_trip.rs"));
}
mod restricted {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/restricted.rs"));
}
mod session {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/session.rs"));
}

#[test]
fn row_reduction_runs() {
    row_reduction::run_example().expect("row_reduction");
}

#[test]
fn path_algebra_runs() {
    path_algebra::run_example().expect("path_algebra");
}

#[test]
fn hom_spaces_runs() {
    hom_spaces::run_example().expect("hom_spaces");
}

#[test]
fn krull_schmidt_runs() {
    krull_schmidt::run_example().expect("krull_schmidt");
}

#[test]
fn knitting_runs() {
    knitting::run_example().expect("knitting");
}

#[test]
fn almost_split_runs() {
    almost_split::run_example().expect("almost_split");
}

#[test]
fn transpose_ext_runs() {
    transpose_ext::run_example().expect("transpose_ext");
}

#[test]
fn exact_structures_runs() {
    exact_structures::run_example().expect("exact_structures");
}

#[test]
fn auslander_algebra_runs() {
    auslander_algebra::run_example().expect("auslander_algebra");
}

#[test]
fn smodad_runs() {
    smodad::run_example().expect("smodad");
}

#[test]
fn ab_sequence_runs() {
    ab_sequence::run_example().expect("ab_sequence");
}

#[test]
fn round_trip_runs() {
    round_trip::run_example().expect("round_trip");
}

#[test]
fn restricted_runs() {
    restricted::run_example().expect("restricted");
}

#[test]
fn session_runs() {
    session::run_example().expect("session");
}
