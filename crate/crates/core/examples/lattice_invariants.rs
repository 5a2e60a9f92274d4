//! Invariants, reflections and order certificates on the rank-2 lattice
//! `[[2, 5], [5, 4]]` and its extension by `⟨-2⟩`.

use k3lat::{anti_involution, order_certificate, reflect, Lattice, OrderCertificate};

pub fn run_example() -> k3lat::Result<()> {
    let lambda = Lattice::from_rows(&[[2, 5], [5, 4]])?;
    let d = lambda.discriminant();
    let c = lambda.classify();
    println!("det = {}, |det| = {}", d.det, d.abs_det);
    println!("even = {}, signature = ({}, {})", c.even, c.positive, c.negative);

    let extended = lambda.direct_sum(&Lattice::rank_one(-2)?);
    let ce = extended.classify();
    println!("with <-2>: det = {}, signature = ({}, {})", extended.det(), ce.positive, ce.negative);

    let l = lambda.basis_vector(0);
    let root = lambda.vec_i64(&[-1, 2]);
    let r = reflect(&root)?;
    println!("(L, C) = {}, r_C(L) = {}", l.pair(&root)?, r.apply(&l)?);

    let tau = anti_involution(&l)?;
    println!("tau* = {} with char poly {}", tau.matrix(), tau.char_poly());

    let mixed = r.compose(&tau)?;
    let cert = order_certificate(&mixed);
    match (&cert, cert.growth_interval()) {
        (OrderCertificate::Finite { order }, _) => println!("r_C tau* has order {order}"),
        (_, Some(iv)) => println!("r_C tau* has infinite order, eigenvalue near {:.6}", iv.midpoint_f64()),
        (OrderCertificate::Infinite(w), None) => println!("r_C tau* has infinite order: {w:?}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> k3lat::Result<()> {
    run_example()
}
