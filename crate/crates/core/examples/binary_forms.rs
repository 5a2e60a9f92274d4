//! Classes of given square and degree on a hyperbolic plane lattice, and the
//! Pell-type constraints coming from sublattice discriminants.

use k3lat::quadform::{
    isotropic_classes_exist, pell_solutions, solve_norm_degree, sublattice_discriminant_constraint,
    Isotropic, NormDegreeQuery,
};
use k3lat::Lattice;

pub fn run_example() -> k3lat::Result<()> {
    let lambda = Lattice::from_rows(&[[2, 5], [5, 4]])?;
    let l = lambda.basis_vector(0);

    for degree in [0, 8] {
        let roots = solve_norm_degree(&NormDegreeQuery::new(&l, -2, degree))?;
        let shown: Vec<String> = roots.iter().map(ToString::to_string).collect();
        println!("(x,x) = -2, (x,L) = {degree}: [{}]", shown.join(", "));
    }

    match isotropic_classes_exist(&lambda)? {
        Isotropic::No => println!("no isotropic classes"),
        Isotropic::Yes(w) => println!("isotropic class {w}"),
    }
    if let Isotropic::Yes(w) = isotropic_classes_exist(&Lattice::hyperbolic_plane())? {
        println!("U has the isotropic class {w}");
    }

    for (x_norm, k_max) in [(-2, 8), (2, 4)] {
        let p = sublattice_discriminant_constraint(&lambda, 2, x_norm)?.with_range(1, k_max);
        println!("{} on 1..={k_max}: {:?}", p.equation(), pell_solutions(&p));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> k3lat::Result<()> {
    run_example()
}
