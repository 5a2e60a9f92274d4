//! Beauville involutions on the Hilbert square and the infinite-order
//! automorphism they generate.

use k3lat::hilb2::{
    beauville_involution, composite_dynamics, intersection_of_polarizations, orbit, BeauvillePolarization,
    HilbSquareLattice, PolarizationFrame,
};
use k3lat::k3geom::K3Model;
use k3lat::Lattice;

pub fn run_example() -> k3lat::Result<()> {
    let lambda = Lattice::from_rows(&[[2, 5], [5, 4]])?;
    let k = K3Model::new(&lambda, &lambda.basis_vector(0))?;
    let (h1, h2) = (lambda.vec_i64(&[0, 1]), lambda.vec_i64(&[5, -1]));
    let m = intersection_of_polarizations(&k, &h1, &h2)?;
    println!("m = (H1, H2) = {m}");

    let hl = HilbSquareLattice::extend(&lambda)?;
    let i1 = beauville_involution(&hl, &BeauvillePolarization::certify(&k, &h1)?)?;
    let i2 = beauville_involution(&hl, &BeauvillePolarization::certify(&k, &h2)?)?;
    let frame = PolarizationFrame::new(&hl, &h1, &h2)?;
    let f1 = frame.to_frame(&i1)?;
    let f2 = frame.to_frame(&i2)?;
    println!("iota1* = {}", f1.matrix());
    println!("iota2* = {}", f2.matrix());

    let d = composite_dynamics(&f1, &f2)?;
    println!("iota1* iota2* = {}", d.matrix.matrix());
    println!("F(t) = {}", d.factorization);
    if let Some(iv) = d.certificate.growth_interval() {
        println!("beta in ({}, {}), about {:.9}", iv.lo, iv.hi, iv.midpoint_f64());
    }
    if let Some(v) = d.fixed_vector() {
        println!("fixed vector {v} of square {}", v.norm());
    }

    let pts = orbit(&d.matrix, &frame.e(), 6)?;
    let first = |v: &k3lat::LatticeVector| v.coords()[0].to_string().parse::<f64>().unwrap_or(f64::NAN);
    for w in pts.windows(2).skip(1) {
        println!("{} (ratio {:.6})", w[1], first(&w[1]) / first(&w[0]));
    }

    // the symbolic family
    for m in [5, 6, 10] {
        let f = PolarizationFrame::from_intersection(m)?;
        let d = composite_dynamics(&f.involution(1)?, &f.involution(2)?)?;
        println!("m = {m}: {} infinite = {}", d.factorization, d.certificate.is_infinite());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> k3lat::Result<()> {
    run_example()
}
