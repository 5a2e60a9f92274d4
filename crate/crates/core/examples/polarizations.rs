//! Freeness, very ampleness and lines for candidate polarizations, and the
//! covering involution of a double plane.

use k3lat::k3geom::{
    bpf_check, covering_involution, no_line_check, rational_curve_degrees, very_ample_check, K3Model,
};
use k3lat::Lattice;

pub fn run_example() -> k3lat::Result<()> {
    let lambda = Lattice::from_rows(&[[2, 5], [5, 4]])?;
    let k = K3Model::new(&lambda, &lambda.basis_vector(0))?;

    for c in [[1, 0], [2, 0], [0, 1], [5, -1]] {
        let h = lambda.vec_i64(&c);
        let free = bpf_check(&k, &h)?;
        let va = very_ample_check(&k, &h)?;
        let degrees: Vec<String> = rational_curve_degrees(&k, &h)?
            .into_iter()
            .map(|(_, d)| d.to_string())
            .collect();
        println!(
            "{h}: {free:?}, {va:?}, curve degrees [{}], no line = {}",
            degrees.join(", "),
            no_line_check(&k, &h)?
        );
    }

    let tau = covering_involution(&k, &lambda.basis_vector(0))?;
    let h = lambda.vec_i64(&[0, 1]);
    println!("tau* = {}, tau*(H) = {}", tau.matrix(), tau.apply(&h)?);

    let u = Lattice::hyperbolic_plane();
    let ku = K3Model::new(&u, &u.vec_i64(&[1, 2]))?;
    println!("U with d = (1, 2): {:?}", bpf_check(&ku, &u.vec_i64(&[1, 2]))?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> k3lat::Result<()> {
    run_example()
}
