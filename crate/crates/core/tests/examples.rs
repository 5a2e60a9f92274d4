//! Every crate example runs to completion.

macro_rules! example {
    ($name:ident, $file:literal) => {
        #[path = $file]
        mod $name;
    };
}

example!(lattice_invariants, "../examples/lattice_invariants.rs");
example!(binary_forms, "../examples/binary_forms.rs");
example!(k3_cones, "../examples/k3_cones.rs");
example!(polarizations, "../examples/polarizations.rs");
example!(hilbert_square_dynamics, "../examples/hilbert_square_dynamics.rs");
example!(product_mds, "../examples/product_mds.rs");
example!(verify_paper, "../examples/verify_paper.rs");

#[test]
fn lattice_invariants_runs() {
    lattice_invariants::run_example().unwrap();
}

#[test]
fn binary_forms_runs() {
    binary_forms::run_example().unwrap();
}

#[test]
fn k3_cones_runs() {
    k3_cones::run_example().unwrap();
}

#[test]
fn polarizations_runs() {
    polarizations::run_example().unwrap();
}

#[test]
fn hilbert_square_dynamics_runs() {
    hilbert_square_dynamics::run_example().unwrap();
}

#[test]
fn product_mds_runs() {
    product_mds::run_example().unwrap();
}

#[test]
fn verify_paper_runs() {
    verify_paper::run_example().unwrap();
}
