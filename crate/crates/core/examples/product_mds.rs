//! Products of K3 surfaces: block lattices, the product nef cone, an
//! invariant ample class, and the MDS checklist against the Hilbert square.

use k3lat::hilb2::PolarizationFrame;
use k3lat::k3geom::{covering_involution, nef_cone, K3Model};
use k3lat::products::{
    direct_sum, invariant_ample_from_rays, mds_checklist, non_polyhedral_witness, product_cone_membership,
    FiniteRayCone,
};
use k3lat::Lattice;

pub fn run_example() -> k3lat::Result<()> {
    let lambda = Lattice::from_rows(&[[2, 5], [5, 4]])?;
    let k = K3Model::new(&lambda, &lambda.basis_vector(0))?;
    let p = direct_sum(&[(k.clone(), 2)])?;
    println!("S x S: rank {}, det {}", p.total().rank(), p.total().det());

    let nef = [nef_cone(&k)?];
    let l = lambda.basis_vector(0);
    for parts in [[l.clone(), l.clone()], [l.clone(), -&l]] {
        let x = p.assemble(&parts)?;
        println!("{x} in the product nef cone: {}", product_cone_membership(&p, &x, &nef)?);
    }

    let cone = FiniteRayCone::product_nef(&p, &[true, true])?;
    let tau = covering_involution(&k, &l)?;
    let group = [p.block_permutation(&[1, 0])?, p.block_isometry(&[tau.clone(), tau.clone()])?];
    println!("invariant class {}", invariant_ample_from_rays(&cone, &group)?);
    println!("S x S: {:?}", mds_checklist(Some(&cone), true, None).conclusion);

    let eff = FiniteRayCone::new(k.cached_effective_cone()?.rays(), &[true, true])?;
    println!("tau-invariant sum of the curves: {}", invariant_ample_from_rays(&eff, &[tau])?);

    let f = PolarizationFrame::from_intersection(21)?;
    let a = f.involution(1)?.compose(&f.involution(2)?)?;
    let w = non_polyhedral_witness(&a, &f.e(), 12)?;
    println!("Hilbert square: {:?}", mds_checklist(None, false, Some(&w)).conclusion);
    Ok(())
}

#[allow(dead_code)]
fn main() -> k3lat::Result<()> {
    run_example()
}
