//! Effective and nef cones of a Picard-rank-2 K3 surface, chamber reduction
//! and Riemann-Roch.

use k3lat::k3geom::{chamber_reduce, effective_cone, is_ample, nef_cone, rr_h0, K3Model};
use k3lat::Lattice;

pub fn run_example() -> k3lat::Result<()> {
    let lambda = Lattice::from_rows(&[[2, 5], [5, 4]])?;
    let k = K3Model::new(&lambda, &lambda.basis_vector(0))?;

    let eff = effective_cone(&k, 40)?;
    let nef = nef_cone(&k)?;
    println!("effective rays {} and {}", eff.rays()[0], eff.rays()[1]);
    println!("nef rays {} and {}", nef.rays()[0], nef.rays()[1]);

    for c in [[0, 1], [1, 0], [-1, 2]] {
        let x = lambda.vec_i64(&c);
        println!("{x}: ample = {}", is_ample(&k, &x)?);
    }

    let x = lambda.vec_i64(&[-7, 16]);
    let r = chamber_reduce(&k, &x)?;
    let roots: Vec<String> = r.roots.iter().map(ToString::to_string).collect();
    println!("{x} reduces to {} via reflections in [{}]", r.image, roots.join(", "));

    for c in [[1, 0], [0, 1]] {
        let d = lambda.vec_i64(&c);
        println!("h0({d}) = {}", rr_h0(&k, &d)?);
    }

    // a lattice with isotropic classes: the cone has an isotropic edge
    let odd_cone = Lattice::from_rows(&[[2, 0], [0, -2]])?;
    let ki = K3Model::new(&odd_cone, &odd_cone.vec_i64(&[2, 1]))?;
    let cone = ki.cached_effective_cone()?;
    println!("<2> + <-2>: effective rays {} and {}", cone.rays()[0], cone.rays()[1]);
    Ok(())
}

#[allow(dead_code)]
fn main() -> k3lat::Result<()> {
    run_example()
}
