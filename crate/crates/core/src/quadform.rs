//! Diophantine problems on rank-2 hyperbolic lattices.
//!
//! The central solver finds every class `x` with prescribed square `(x, x)`
//! and prescribed degree `(x, A)` against a class `A` of positive square.
//! Since `A^⊥` is negative definite, the solutions lie on a rank-1 coset and
//! there are finitely many of them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{Lattice, LatticeVector};

/// Find all `x` with `(x, x) = norm` and `(x, polarization) = degree`.
#[derive(Clone, Debug)]
pub struct NormDegreeQuery {
    pub polarization: LatticeVector,
    pub norm: BigInt,
    pub degree: BigInt,
}

impl NormDegreeQuery {
    pub fn new(polarization: &LatticeVector, norm: i64, degree: i64) -> Self {
        NormDegreeQuery {
            polarization: polarization.clone(),
            norm: BigInt::from(norm),
            degree: BigInt::from(degree),
        }
    }
}

fn require_rank2_hyperbolic(l: &Lattice) -> Result<()> {
    if l.rank() != 2 {
        return Err(Error::WrongRank {
            expected: 2,
            found: l.rank(),
        });
    }
    let c = l.classify();
    if (c.positive, c.negative) != (1, 1) {
        return Err(Error::WrongSignature {
            p: c.positive,
            n: c.negative,
            expected_p: 1,
            expected_n: 1,
        });
    }
    Ok(())
}

/// The affine line `{x : (x, A) = d}` written as `base + t * dir`, with
/// `dir` a primitive generator of `A^⊥`.
struct Fiber {
    base: [BigInt; 2],
    dir: [BigInt; 2],
}

fn degree_fiber(l: &Lattice, a: &LatticeVector, degree: &BigInt) -> Option<Fiber> {
    let w = l.gram().mul_vec(a.coords());
    let (w0, w1) = (&w[0], &w[1]);
    let ext = w0.extended_gcd(w1);
    let g = ext.gcd;
    if g.is_zero() || !degree.is_multiple_of(&g) {
        return None;
    }
    let k = degree / &g;
    let base = [&ext.x * &k, &ext.y * &k];
    let dir = [w1 / &g, -(w0 / &g)];
    Some(Fiber { base, dir })
}

/// Every nonzero integer class with the given square and degree, sorted
/// lexicographically by coordinates.
///
/// The zero vector is never reported, even for `norm = degree = 0`.
pub fn solve_norm_degree(q: &NormDegreeQuery) -> Result<Vec<LatticeVector>> {
    let l = q.polarization.lattice();
    require_rank2_hyperbolic(l)?;
    let a_norm = q.polarization.norm();
    if !a_norm.is_positive() {
        return Err(Error::InvalidPolarization { norm: a_norm });
    }
    // Hodge index: (x,x) (A,A) <= (x,A)^2 for every x
    if &q.norm * &a_norm > &q.degree * &q.degree {
        return Ok(Vec::new());
    }
    let Some(fiber) = degree_fiber(l, &q.polarization, &q.degree) else {
        return Ok(Vec::new());
    };
    // (base + t dir)^2 = qa t^2 + 2 qb t + qc, with qa = (dir, dir) < 0
    let qa = l.pair_coords(&fiber.dir, &fiber.dir);
    let qb = l.pair_coords(&fiber.base, &fiber.dir);
    let qc = l.pair_coords(&fiber.base, &fiber.base) - &q.norm;
    debug_assert!(qa.is_negative());
    let disc = &qb * &qb - &qa * &qc;
    if disc.is_negative() {
        return Ok(Vec::new());
    }
    let s = disc.sqrt();
    if &s * &s != disc {
        return Ok(Vec::new());
    }
    let mut out: Vec<LatticeVector> = Vec::new();
    for num in [-&qb + &s, -&qb - &s] {
        if !num.is_multiple_of(&qa) {
            continue;
        }
        let t = &num / &qa;
        let coords = vec![&fiber.base[0] + &t * &fiber.dir[0], &fiber.base[1] + &t * &fiber.dir[1]];
        let v = l.vector(coords)?;
        if !v.is_zero() && !out.contains(&v) {
            out.push(v);
        }
    }
    out.sort_by(|x, y| x.coords().cmp(y.coords()));
    Ok(out)
}

/// Coordinate box guaranteed to contain every solution of `q`.
///
/// Writing `x = (d / (A,A)) A + s u` with `u` a primitive generator of `A^⊥`,
/// the square gives `s^2 = (d^2 / (A,A) - norm) / |(u,u)|`. The bound is
/// computed exactly and rounded outward; it backs brute-force cross-checks.
pub fn coordinate_bound(q: &NormDegreeQuery) -> Result<BigInt> {
    let l = q.polarization.lattice();
    require_rank2_hyperbolic(l)?;
    let a_norm = q.polarization.norm();
    if !a_norm.is_positive() {
        return Err(Error::InvalidPolarization { norm: a_norm });
    }
    let w = l.gram().mul_vec(q.polarization.coords());
    let g = w[0].gcd(&w[1]);
    let u = [&w[1] / &g, -(&w[0] / &g)];
    let u_norm = l.pair_coords(&u, &u).abs();
    let a_r = BigRational::from_integer(a_norm.clone());
    let d = BigRational::from_integer(q.degree.clone());
    let s2 = (&d * &d / &a_r - BigRational::from_integer(q.norm.clone())) / BigRational::from_integer(u_norm);
    if s2.is_negative() {
        return Ok(BigInt::zero());
    }
    // |s| <= ceil(sqrt(ceil(s2)))
    let s_bound = s2.ceil().to_integer().sqrt() + BigInt::one();
    // x = (d/a) A + s u, so each coordinate is at most |d/a| |A_i| + |s| |u_i|
    let d_over_a = (d.abs() / a_r).ceil().to_integer();
    let bound = q
        .polarization
        .coords()
        .iter()
        .zip(&u)
        .map(|(ai, ui)| &d_over_a * ai.abs() + &s_bound * ui.abs())
        .max()
        .unwrap_or_default();
    Ok(bound)
}

/// Result of the isotropic-class decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Isotropic {
    No,
    Yes(LatticeVector),
}

/// Decides whether a rank-2 lattice has a nonzero class of square 0.
///
/// For the binary form `a x^2 + b xy + c y^2` (with `b = 2 g_12`) a nonzero
/// rational zero exists iff `b^2 - 4ac` is a perfect square.
pub fn isotropic_classes_exist(l: &Lattice) -> Result<Isotropic> {
    Ok(match isotropic_directions(l)? {
        Some([e, _]) => Isotropic::Yes(e),
        None => Isotropic::No,
    })
}

/// Both primitive isotropic directions of a rank-2 lattice, when rational.
///
/// Each is primitive with its first nonzero coordinate positive; the first
/// returned comes from the `+sqrt` branch.
pub fn isotropic_directions(l: &Lattice) -> Result<Option<[LatticeVector; 2]>> {
    if l.rank() != 2 {
        return Err(Error::WrongRank {
            expected: 2,
            found: l.rank(),
        });
    }
    let g = l.gram();
    let a = g[(0, 0)].clone();
    let b: BigInt = &g[(0, 1)] * 2;
    let c = g[(1, 1)].clone();
    let disc: BigInt = &b * &b - BigInt::from(4) * &a * &c;
    if disc.is_negative() {
        return Ok(None);
    }
    let s = disc.sqrt();
    if &s * &s != disc {
        return Ok(None);
    }
    let dirs = if a.is_zero() {
        [vec![BigInt::one(), BigInt::zero()], vec![-c.clone(), b.clone()]]
    } else {
        [
            vec![-&b + &s, &a * 2],
            vec![-&b - &s, &a * 2],
        ]
    };
    let [d0, d1] = dirs;
    Ok(Some([
        l.vector(d0)?.primitive_normalized(),
        l.vector(d1)?.primitive_normalized(),
    ]))
}

/// `|k^2 + offset| = rhs_disc * l^2` for `k` in an inclusive range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PellConstraint {
    pub rhs_disc: BigInt,
    pub offset: BigInt,
    pub k_min: BigInt,
    pub k_max: BigInt,
}

impl PellConstraint {
    pub fn new(rhs_disc: i64, offset: i64, k_min: i64, k_max: i64) -> Self {
        PellConstraint {
            rhs_disc: BigInt::from(rhs_disc),
            offset: BigInt::from(offset),
            k_min: BigInt::from(k_min),
            k_max: BigInt::from(k_max),
        }
    }

    pub fn with_range(mut self, k_min: i64, k_max: i64) -> Self {
        self.k_min = BigInt::from(k_min);
        self.k_max = BigInt::from(k_max);
        self
    }

    /// Human-readable form of the equation, e.g. `|k^2 + 4| = 17 l^2`.
    pub fn equation(&self) -> String {
        let off = if self.offset.is_zero() {
            String::new()
        } else if self.offset.is_negative() {
            format!(" - {}", self.offset.abs())
        } else {
            format!(" + {}", self.offset)
        };
        format!("|k^2{off}| = {} l^2", self.rhs_disc)
    }
}

/// All `(k, l)` with `l >= 0` solving the constraint over its finite `k` range.
pub fn pell_solutions(p: &PellConstraint) -> Vec<(BigInt, BigInt)> {
    let mut out = Vec::new();
    if p.k_min > p.k_max || p.rhs_disc.is_zero() {
        return out;
    }
    let mut k = p.k_min.clone();
    while k <= p.k_max {
        let lhs = (&k * &k + &p.offset).abs();
        if lhs.is_multiple_of(&p.rhs_disc) {
            let q = &lhs / &p.rhs_disc;
            let l = q.sqrt();
            if &l * &l == q {
                out.push((k.clone(), l));
            }
        }
        k += 1;
    }
    out
}

/// Discriminant constraint for a sublattice `<A, X>` of a rank-2 lattice.
///
/// With `(A,A) = a_norm`, `(X,X) = x_norm` and `(A,X) = k`, the Gram
/// determinant of `<A, X>` is `a_norm x_norm - k^2`. When `A, X` are
/// independent this equals `det(ambient)` times the squared index, hence
/// `|k^2 - a_norm x_norm| = |det(ambient)| l^2`. The returned constraint has
/// an empty `k` range; set one with [`PellConstraint::with_range`].
pub fn sublattice_discriminant_constraint(ambient: &Lattice, a_norm: i64, x_norm: i64) -> Result<PellConstraint> {
    if ambient.rank() != 2 {
        return Err(Error::WrongRank {
            expected: 2,
            found: ambient.rank(),
        });
    }
    Ok(PellConstraint {
        rhs_disc: ambient.discriminant().abs_det,
        offset: -BigInt::from(a_norm) * BigInt::from(x_norm),
        k_min: BigInt::one(),
        k_max: BigInt::zero(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn lambda() -> Lattice {
        Lattice::from_rows(&[[2, 5], [5, 4]]).unwrap()
    }

    /// Exhaustive scan of the coordinate box.
    fn brute(l: &Lattice, a: &LatticeVector, norm: i64, degree: i64, bound: i64) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        for x in -bound..=bound {
            for y in -bound..=bound {
                let v = l.vec_i64(&[x, y]);
                if !v.is_zero() && v.norm() == BigInt::from(norm) && v.pair(a).unwrap() == BigInt::from(degree) {
                    out.push(vec![x, y]);
                }
            }
        }
        out
    }

    fn coords(v: &[LatticeVector]) -> Vec<Vec<i64>> {
        v.iter().map(|x| x.to_i64().unwrap()).collect()
    }

    #[test]
    fn rational_curves_of_degree_eight() {
        let l = lambda();
        let sol = solve_norm_degree(&NormDegreeQuery::new(&l.basis_vector(0), -2, 8)).unwrap();
        assert_eq!(coords(&sol), vec![vec![-1, 2], vec![9, -2]]);
    }

    #[test]
    fn no_rational_curve_orthogonal_to_l() {
        let l = lambda();
        assert!(solve_norm_degree(&NormDegreeQuery::new(&l.basis_vector(0), -2, 0)).unwrap().is_empty());
    }

    #[test]
    fn no_isotropic_classes_in_low_degree() {
        let l = lambda();
        let a = l.basis_vector(0);
        for d in 0..=10 {
            let q = NormDegreeQuery::new(&a, 0, d);
            let sol = solve_norm_degree(&q).unwrap();
            assert!(sol.is_empty());
            assert_eq!(coords(&sol), brute(&l, &a, 0, d, 50));
        }
    }

    #[test]
    fn matches_brute_force_within_bound() {
        let l = lambda();
        let a = l.basis_vector(1);
        for norm in [-4, -2, 0, 2, 4] {
            for d in -12..=12 {
                let q = NormDegreeQuery::new(&a, norm, d);
                let b = coordinate_bound(&q).unwrap().to_i64().unwrap();
                assert_eq!(coords(&solve_norm_degree(&q).unwrap()), brute(&l, &a, norm, d, b + 1), "{norm} {d}");
            }
        }
    }

    #[test]
    fn rejects_bad_polarization_and_rank() {
        let l = lambda();
        let q = NormDegreeQuery::new(&l.vec_i64(&[-1, 2]), -2, 1);
        assert!(matches!(solve_norm_degree(&q), Err(Error::InvalidPolarization { .. })));
        let l3 = l.direct_sum(&Lattice::rank_one(-2).unwrap());
        let q = NormDegreeQuery::new(&l3.basis_vector(0), -2, 1);
        assert!(matches!(solve_norm_degree(&q), Err(Error::WrongRank { .. })));
    }

    #[test]
    fn isotropy_decisions() {
        assert_eq!(isotropic_classes_exist(&lambda()).unwrap(), Isotropic::No);
        let u = Lattice::hyperbolic_plane();
        match isotropic_classes_exist(&u).unwrap() {
            Isotropic::Yes(e) => assert_eq!(e, u.basis_vector(0)),
            Isotropic::No => panic!("U is isotropic"),
        }
        let l = Lattice::from_rows(&[[2, 0], [0, -2]]).unwrap();
        let [e, f] = isotropic_directions(&l).unwrap().unwrap();
        assert!(e.norm().is_zero() && f.norm().is_zero());
        assert!(!e.is_proportional(&f));
        let mut both = coords(&[e, f]);
        both.sort();
        assert_eq!(both, vec![vec![1, -1], vec![1, 1]]);
    }

    #[test]
    fn pell_examples() {
        let sols = pell_solutions(&PellConstraint::new(17, 4, 1, 8));
        assert_eq!(sols, vec![(BigInt::from(8), BigInt::from(2))]);
        let sols = pell_solutions(&PellConstraint::new(17, -4, 1, 4));
        assert_eq!(sols, vec![(BigInt::from(2), BigInt::from(0))]);
        assert!(pell_solutions(&PellConstraint::new(17, 0, 1, 16)).is_empty());
    }

    #[test]
    fn sublattice_constraints() {
        let l = lambda();
        let c = sublattice_discriminant_constraint(&l, 2, -2).unwrap();
        assert_eq!((c.rhs_disc.clone(), c.offset.clone()), (BigInt::from(17), BigInt::from(4)));
        assert_eq!(c.equation(), "|k^2 + 4| = 17 l^2");
        let c = sublattice_discriminant_constraint(&l, 2, 2).unwrap();
        assert_eq!(c.equation(), "|k^2 - 4| = 17 l^2");
        let c = sublattice_discriminant_constraint(&l, 0, 0).unwrap();
        assert!(c.offset.is_zero());
    }
}
