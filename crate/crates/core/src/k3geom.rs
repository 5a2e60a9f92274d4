//! Numerical K3 surfaces of Picard rank 2.
//!
//! A [`K3Model`] is an even hyperbolic rank-2 lattice together with an ample
//! class. From it we compute the effective and nef cones, reduce positive
//! classes into the nef chamber with reflections in (-2)-classes, and decide
//! the numerical conditions for freeness, very ampleness and absence of
//! lines.
//!
//! A (-2)-class `X` with `(X, A) > 0` for the ample class `A` is effective.
//! On each side of the ample ray, the effective (-2)-class of *smallest*
//! degree is the extremal one: writing `X = (d/(A,A)) A + s u` with `u`
//! spanning `A^⊥`, the slope `s^2 / d^2 = (1/(A,A) + 2/d^2) / |(u,u)|`
//! decreases with `d`. So the scan over degrees `1, 2, ...` stops at the
//! first hit on each side and is complete up to that degree.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{anti_involution, reflect, Isometry, Lattice, LatticeVector};
use crate::quadform::{isotropic_directions, solve_norm_degree, NormDegreeQuery};

pub const DEFAULT_SEARCH_DEGREE_MAX: u32 = 50;

/// `a_0 b_1 - a_1 b_0`
fn cross(a: &LatticeVector, b: &LatticeVector) -> BigInt {
    let (a, b) = (a.coords(), b.coords());
    &a[0] * &b[1] - &a[1] * &b[0]
}

/// Which side of the ample ray a class lies on, by orientation of the basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Negative,
    Positive,
}

impl Side {
    fn name(self) -> &'static str {
        match self {
            Side::Negative => "negative",
            Side::Positive => "positive",
        }
    }
}

/// Rational polyhedral cone in a rank-2 lattice, spanned by two rays.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeR2 {
    lattice: Lattice,
    rays: [LatticeVector; 2],
    certified: bool,
}

impl ConeR2 {
    /// Rays are made primitive; they must be independent and span a cone
    /// containing a class of positive square.
    pub fn new(r1: &LatticeVector, r2: &LatticeVector) -> Result<Self> {
        let lattice = r1.lattice().clone();
        if lattice.rank() != 2 {
            return Err(Error::WrongRank {
                expected: 2,
                found: lattice.rank(),
            });
        }
        if r2.lattice() != &lattice {
            return Err(Error::LatticeMismatch);
        }
        let (r1, r2) = (r1.primitive(), r2.primitive());
        if cross(&r1, &r2).is_zero() {
            return Err(Error::InvalidCone("rays are linearly dependent".into()));
        }
        // a r1 + b r2 with a, b >= 0 has positive square somewhere iff one ray
        // is positive or (r1, r2) > 0 with (r1, r2)^2 > r1^2 r2^2
        let (q1, q2, b) = (r1.norm(), r2.norm(), r1.pair(&r2)?);
        let meets_positive = q1.is_positive() || q2.is_positive() || (b.is_positive() && &b * &b > &q1 * &q2);
        if !meets_positive {
            return Err(Error::InvalidCone("cone does not meet the positive cone".into()));
        }
        let mut rays = [r1, r2];
        rays.sort_by(|x, y| x.coords().cmp(y.coords()));
        Ok(ConeR2 {
            lattice,
            rays,
            certified: false,
        })
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn rays(&self) -> &[LatticeVector; 2] {
        &self.rays
    }

    /// Whether the cone came out of a certified effective-cone computation
    /// (or is the dual of one).
    pub fn is_certified(&self) -> bool {
        self.certified
    }

    /// Coefficient signs of `x = a r1 + b r2`.
    fn coefficient_signs(&self, x: &LatticeVector) -> (i8, i8) {
        let [r1, r2] = &self.rays;
        let d = cross(r1, r2);
        let a = cross(x, r2) * d.signum();
        let b = cross(r1, x) * d.signum();
        (sign(&a), sign(&b))
    }

    /// Membership in the closed cone.
    pub fn contains(&self, x: &LatticeVector) -> bool {
        let (a, b) = self.coefficient_signs(x);
        a >= 0 && b >= 0
    }

    /// Membership in the open cone.
    pub fn contains_interior(&self, x: &LatticeVector) -> bool {
        let (a, b) = self.coefficient_signs(x);
        a > 0 && b > 0
    }

    /// The dual cone `{y : (y, r) >= 0 for both rays r}`.
    pub fn dual(&self) -> Result<ConeR2> {
        let [r1, r2] = &self.rays;
        let n1 = orthogonal_ray(r1, r2)?;
        let n2 = orthogonal_ray(r2, r1)?;
        let mut c = ConeR2::new(&n1, &n2)?;
        c.certified = self.certified;
        Ok(c)
    }
}

fn sign(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Primitive `n` with `(n, r) = 0` and `(n, other) > 0`.
fn orthogonal_ray(r: &LatticeVector, other: &LatticeVector) -> Result<LatticeVector> {
    let l = r.lattice();
    let w = l.gram().mul_vec(r.coords());
    let n = l.vector(vec![w[1].clone(), -w[0].clone()])?.primitive();
    let p = n.pair(other)?;
    debug_assert!(!p.is_zero());
    Ok(if p.is_negative() { -&n } else { n })
}

/// Even hyperbolic rank-2 lattice with a distinguished ample class.
#[derive(Clone, Debug)]
pub struct K3Model {
    ns: Lattice,
    ample: LatticeVector,
    search_degree_max: u32,
    cone: OnceLock<Result<ConeR2>>,
    no_isotropic: OnceLock<bool>,
}

impl K3Model {
    pub fn new(ns: &Lattice, ample: &LatticeVector) -> Result<Self> {
        Self::with_search_bound(ns, ample, DEFAULT_SEARCH_DEGREE_MAX)
    }

    pub fn with_search_bound(ns: &Lattice, ample: &LatticeVector, search_degree_max: u32) -> Result<Self> {
        if ns.rank() != 2 {
            return Err(Error::WrongRank {
                expected: 2,
                found: ns.rank(),
            });
        }
        let c = ns.classify();
        if !c.even {
            return Err(Error::NotEven);
        }
        if (c.positive, c.negative) != (1, 1) {
            return Err(Error::WrongSignature {
                p: c.positive,
                n: c.negative,
                expected_p: 1,
                expected_n: 1,
            });
        }
        if ample.lattice() != ns {
            return Err(Error::LatticeMismatch);
        }
        let norm = ample.norm();
        if !norm.is_positive() {
            return Err(Error::NonPositiveSquare { norm });
        }
        Ok(K3Model {
            ns: ns.clone(),
            ample: ample.clone(),
            search_degree_max: search_degree_max.max(1),
            cone: OnceLock::new(),
            no_isotropic: OnceLock::new(),
        })
    }

    pub fn ns(&self) -> &Lattice {
        &self.ns
    }

    pub fn ample(&self) -> &LatticeVector {
        &self.ample
    }

    pub fn search_degree_max(&self) -> u32 {
        self.search_degree_max
    }

    pub fn has_no_isotropic(&self) -> bool {
        *self.no_isotropic.get_or_init(|| {
            isotropic_directions(&self.ns).map(|d| d.is_none()).unwrap_or(true)
        })
    }

    /// Effective cone at the model's search bound, computed once.
    pub fn cached_effective_cone(&self) -> Result<&ConeR2> {
        self.cone
            .get_or_init(|| effective_cone(self, self.search_degree_max))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Extremal (-2)-classes of the effective cone: the smooth rational curves.
    pub fn rational_curves(&self) -> Result<Vec<LatticeVector>> {
        let cone = self.cached_effective_cone()?;
        Ok(cone
            .rays()
            .iter()
            .filter(|r| r.norm() == BigInt::from(-2))
            .cloned()
            .collect())
    }

    fn side(&self, x: &LatticeVector) -> Option<Side> {
        match sign(&cross(&self.ample, x)) {
            1 => Some(Side::Positive),
            -1 => Some(Side::Negative),
            _ => None,
        }
    }

    fn degree(&self, x: &LatticeVector) -> BigInt {
        x.pair(&self.ample).expect("class lies in the model lattice")
    }

    fn check(&self, x: &LatticeVector) -> Result<()> {
        if x.lattice() != &self.ns {
            return Err(Error::LatticeMismatch);
        }
        Ok(())
    }
}

fn minus_two_classes(k: &K3Model, degree: u32) -> Result<Vec<LatticeVector>> {
    solve_norm_degree(&NormDegreeQuery::new(&k.ample, -2, i64::from(degree)))
}

/// The cone of curves, spanned by one extremal class on each side of the
/// ample ray.
///
/// Each extremal class is either the lowest-degree (-2)-class on that side,
/// found by scanning degrees up to `search_degree_max`, or, when the lattice
/// is isotropic and provably has no (-2)-class on that side, the isotropic
/// ray. Anything else is reported as inconclusive rather than guessed.
pub fn effective_cone(k: &K3Model, search_degree_max: u32) -> Result<ConeR2> {
    let zero_degree = solve_norm_degree(&NormDegreeQuery::new(&k.ample, -2, 0))?;
    if let Some(c) = zero_degree.first() {
        return Err(Error::NotAmple {
            class: format!("{} (orthogonal to the (-2)-class {c})", k.ample),
        });
    }
    let mut extremal: [Option<LatticeVector>; 2] = [None, None];
    let slot = |s: Side| match s {
        Side::Negative => 0,
        Side::Positive => 1,
    };
    for d in 1..=search_degree_max {
        if extremal.iter().all(Option::is_some) {
            break;
        }
        for x in minus_two_classes(k, d)? {
            let s = k.side(&x).expect("(-2)-classes are not proportional to the ample class");
            extremal[slot(s)].get_or_insert(x);
        }
    }
    let iso = isotropic_directions(&k.ns)?;
    if extremal.iter().all(Option::is_none) && iso.is_none() {
        return Err(Error::NoEffectiveClasses {
            bound: search_degree_max,
        });
    }
    for s in [Side::Negative, Side::Positive] {
        if extremal[slot(s)].is_some() {
            continue;
        }
        let Some([e1, e2]) = &iso else {
            return Err(Error::Inconclusive {
                side: s.name(),
                bound: search_degree_max,
            });
        };
        let orient = |e: &LatticeVector| if k.degree(e).is_negative() { -e } else { e.clone() };
        let (e1, e2) = (orient(e1), orient(e2));
        let candidate = if k.side(&e1) == Some(s) { e1.clone() } else { e2.clone() };
        // (-2)-classes X = a e1 + b e2 have a, b in (1/N)Z with N = |cross(e1, e2)|
        // and a b (e1, e2) = -1, so their degree is at most
        // N ((e1, A) + (e2, A)) / |(e1, e2)|.
        let n = cross(&e1, &e2).abs();
        let p = e1.pair(&e2)?.abs();
        let bound = (n * (k.degree(&e1) + k.degree(&e2))).div_ceil(&p);
        if bound > BigInt::from(search_degree_max) {
            return Err(Error::Inconclusive {
                side: s.name(),
                bound: search_degree_max,
            });
        }
        extremal[slot(s)] = Some(candidate);
    }
    let [Some(a), Some(b)] = extremal else {
        unreachable!("both sides resolved above")
    };
    let mut cone = ConeR2::new(&a, &b)?;
    cone.certified = true;
    Ok(cone)
}

/// The nef cone: dual of the (certified) effective cone.
pub fn nef_cone(k: &K3Model) -> Result<ConeR2> {
    k.cached_effective_cone()?.dual()
}

/// Kleiman: positive square and positive on both effective rays.
pub fn is_ample(k: &K3Model, d: &LatticeVector) -> Result<bool> {
    k.check(d)?;
    let cone = k.cached_effective_cone()?;
    if !d.norm().is_positive() {
        return Ok(false);
    }
    for r in cone.rays() {
        if !d.pair(r)?.is_positive() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_nef(k: &K3Model, d: &LatticeVector) -> Result<bool> {
    k.check(d)?;
    let cone = k.cached_effective_cone()?;
    for r in cone.rays() {
        if d.pair(r)?.is_negative() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Reflection word taking a positive class into the nef chamber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChamberReduction {
    /// `-id` was applied first.
    pub sign_flipped: bool,
    /// Roots `c_1, ..., c_n` of the reflections, in the order applied.
    pub roots: Vec<LatticeVector>,
    /// `(r_{c_n} ∘ ... ∘ r_{c_1})(±x)`, a nef class.
    pub image: LatticeVector,
}

impl ChamberReduction {
    pub fn is_trivial(&self) -> bool {
        !self.sign_flipped && self.roots.is_empty()
    }
}

/// Moves `x` into the nef cone by `±id` and reflections in effective
/// (-2)-classes that pair negatively with the current image.
///
/// Each reflection strictly lowers the (positive, integral) degree of the
/// image, so the loop terminates.
pub fn chamber_reduce(k: &K3Model, x: &LatticeVector) -> Result<ChamberReduction> {
    k.check(x)?;
    let norm = x.norm();
    if !norm.is_positive() {
        return Err(Error::NonPositiveSquare { norm });
    }
    let cone = k.cached_effective_cone()?;
    let max_degree = cone
        .rays()
        .iter()
        .filter(|r| r.norm() == BigInt::from(-2))
        .map(|r| k.degree(r))
        .max()
        .unwrap_or_default();
    let mut image = x.clone();
    let sign_flipped = k.degree(&image).is_negative();
    if sign_flipped {
        image = -&image;
    }
    let mut roots = Vec::new();
    'outer: while !is_nef(k, &image)? {
        let mut d = 1u32;
        while BigInt::from(d) <= max_degree {
            for c in minus_two_classes(k, d)? {
                if image.pair(&c)?.is_negative() {
                    image = reflect(&c)?.apply(&image)?;
                    roots.push(c);
                    continue 'outer;
                }
            }
            d += 1;
        }
        // a non-nef positive class always pairs negatively with an extremal
        // (-2)-ray, which the scan above covers
        unreachable!("no reflecting root found for a non-nef class");
    }
    Ok(ChamberReduction {
        sign_flipped,
        roots,
        image,
    })
}

/// Riemann-Roch `h^0 = 2 + (d, d)/2` for a nonzero nef class.
pub fn rr_h0(k: &K3Model, d: &LatticeVector) -> Result<BigInt> {
    k.check(d)?;
    let norm = d.norm();
    if d.is_zero() || norm.is_negative() || !is_nef(k, d)? {
        return Err(Error::NotNef { class: d.to_string() });
    }
    Ok(BigInt::from(2) + norm / 2)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Freeness {
    Free,
    /// An isotropic class of degree 1 against the divisor.
    NotFree(LatticeVector),
}

/// For ample `d`: free unless some isotropic `E` has `(E, d) = 1`.
pub fn bpf_check(k: &K3Model, d: &LatticeVector) -> Result<Freeness> {
    if !is_ample(k, d)? {
        return Err(Error::NotAmple { class: d.to_string() });
    }
    let sol = solve_norm_degree(&NormDegreeQuery::new(d, 0, 1))?;
    Ok(match sol.into_iter().next() {
        Some(e) => Freeness::NotFree(e),
        None => Freeness::Free,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VeryAmpleFailure {
    /// An isotropic class of degree 1 or 2.
    E2,
    /// `h = 2B` with `(B, B) = 2`.
    B2,
    /// A (-2)-class of degree 0.
    ContractedCurve,
    /// `(h, h) < 4`.
    TooSmall,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VeryAmpleness {
    VeryAmple,
    Fails {
        reason: VeryAmpleFailure,
        witness: Option<LatticeVector>,
    },
}

/// Numerical very-ampleness test for an ample, base-point free class.
pub fn very_ample_check(k: &K3Model, h: &LatticeVector) -> Result<VeryAmpleness> {
    if let Freeness::NotFree(_) = bpf_check(k, h)? {
        return Err(Error::NotFree { class: h.to_string() });
    }
    let fails = |reason, witness| Ok(VeryAmpleness::Fails { reason, witness });
    let norm = h.norm();
    if norm < BigInt::from(4) {
        return fails(VeryAmpleFailure::TooSmall, None);
    }
    for degree in [1, 2] {
        if let Some(e) = solve_norm_degree(&NormDegreeQuery::new(h, 0, degree))?.into_iter().next() {
            return fails(VeryAmpleFailure::E2, Some(e));
        }
    }
    if h.coords().iter().all(Integer::is_even) {
        let b = h.lattice().vector(h.coords().iter().map(|c| c / 2).collect())?;
        if b.norm() == BigInt::from(2) {
            return fails(VeryAmpleFailure::B2, Some(b));
        }
    }
    if let Some(c) = solve_norm_degree(&NormDegreeQuery::new(h, -2, 0))?.into_iter().next() {
        return fails(VeryAmpleFailure::ContractedCurve, Some(c));
    }
    Ok(VeryAmpleness::VeryAmple)
}

/// Degrees of the smooth rational curves against `h`.
pub fn rational_curve_degrees(k: &K3Model, h: &LatticeVector) -> Result<Vec<(LatticeVector, BigInt)>> {
    k.check(h)?;
    k.rational_curves()?
        .into_iter()
        .map(|c| {
            let d = c.pair(h)?;
            Ok((c, d))
        })
        .collect()
}

/// True iff no smooth rational curve has degree 1 against `h`.
pub fn no_line_check(k: &K3Model, h: &LatticeVector) -> Result<bool> {
    Ok(rational_curve_degrees(k, h)?
        .iter()
        .all(|(_, d)| d != &BigInt::from(1)))
}

/// Action of the covering involution of the double plane given by `|l|`,
/// `(l, l) = 2`: `x -> -x + (x, l) l`.
pub fn covering_involution(k: &K3Model, l: &LatticeVector) -> Result<Isometry> {
    let norm = l.norm();
    if norm != BigInt::from(2) {
        return Err(Error::InvalidAxis { norm });
    }
    if let Freeness::NotFree(_) = bpf_check(k, l)? {
        return Err(Error::NotFree { class: l.to_string() });
    }
    anti_involution(l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::IntMatrix;

    fn lambda_model() -> K3Model {
        let l = Lattice::from_rows(&[[2, 5], [5, 4]]).unwrap();
        K3Model::new(&l, &l.basis_vector(0)).unwrap()
    }

    fn v(k: &K3Model, c: &[i64]) -> LatticeVector {
        k.ns().vec_i64(c)
    }

    #[test]
    fn lambda_effective_cone() {
        let k = lambda_model();
        let cone = effective_cone(&k, 40).unwrap();
        assert_eq!(cone.rays(), &[v(&k, &[-1, 2]), v(&k, &[9, -2])]);
        for r in cone.rays() {
            assert!(r.pair(k.ample()).unwrap().is_positive());
        }
        assert!(cone.is_certified());
    }

    #[test]
    fn effective_cone_bound_too_small_is_inconclusive() {
        let k = lambda_model();
        assert!(matches!(effective_cone(&k, 7), Err(Error::NoEffectiveClasses { .. })));
    }

    #[test]
    fn isotropic_effective_cone() {
        let l = Lattice::from_rows(&[[2, 0], [0, -2]]).unwrap();
        let k = K3Model::new(&l, &l.vec_i64(&[2, 1])).unwrap();
        let cone = effective_cone(&k, 10).unwrap();
        assert_eq!(cone.rays(), &[l.vec_i64(&[0, -1]), l.vec_i64(&[1, 1])]);
        let bad = K3Model::new(&l, &l.basis_vector(0)).unwrap();
        assert!(matches!(effective_cone(&bad, 10), Err(Error::NotAmple { .. })));
    }

    #[test]
    fn lambda_nef_cone() {
        let k = lambda_model();
        let nef = nef_cone(&k).unwrap();
        let eff = k.cached_effective_cone().unwrap();
        for n in nef.rays() {
            let p: Vec<BigInt> = eff.rays().iter().map(|r| n.pair(r).unwrap()).collect();
            assert!(p.iter().all(|x| !x.is_negative()));
            assert_eq!(p.iter().filter(|x| x.is_zero()).count(), 1);
        }
        let h = v(&k, &[0, 1]);
        assert!(nef.contains_interior(&h));
        assert_eq!(nef.dual().unwrap().rays(), eff.rays());
    }

    #[test]
    fn ampleness_on_lambda() {
        let k = lambda_model();
        assert!(is_ample(&k, &v(&k, &[0, 1])).unwrap());
        assert!(is_ample(&k, &v(&k, &[1, 0])).unwrap());
        assert!(!is_ample(&k, &v(&k, &[-1, 2])).unwrap());
    }

    #[test]
    fn chamber_reduction() {
        let k = lambda_model();
        let l = v(&k, &[1, 0]);
        let r = chamber_reduce(&k, &l).unwrap();
        assert!(r.is_trivial() && r.image == l);
        let r = chamber_reduce(&k, &-&l).unwrap();
        assert!(r.sign_flipped && r.roots.is_empty() && r.image == l);
        let x = v(&k, &[-7, 16]);
        let r = chamber_reduce(&k, &x).unwrap();
        assert_eq!(r.roots, vec![v(&k, &[-1, 2])]);
        assert_eq!(r.image, l);
        assert!(matches!(chamber_reduce(&k, &v(&k, &[-1, 2])), Err(Error::NonPositiveSquare { .. })));
    }

    #[test]
    fn riemann_roch_counts() {
        let k = lambda_model();
        assert_eq!(rr_h0(&k, &v(&k, &[1, 0])).unwrap(), BigInt::from(3));
        assert_eq!(rr_h0(&k, &v(&k, &[0, 1])).unwrap(), BigInt::from(4));
        assert!(matches!(rr_h0(&k, &v(&k, &[-1, 2])), Err(Error::NotNef { .. })));
        let l = Lattice::from_rows(&[[2, 0], [0, -2]]).unwrap();
        let ki = K3Model::new(&l, &l.vec_i64(&[2, 1])).unwrap();
        assert_eq!(rr_h0(&ki, &l.vec_i64(&[1, 1])).unwrap(), BigInt::from(2));
    }

    #[test]
    fn freeness() {
        let k = lambda_model();
        assert_eq!(bpf_check(&k, &v(&k, &[1, 0])).unwrap(), Freeness::Free);
        assert_eq!(bpf_check(&k, &v(&k, &[0, 1])).unwrap(), Freeness::Free);
        // U with ample (1, 2): e2 has degree 1
        let u = Lattice::hyperbolic_plane();
        let ku = K3Model::new(&u, &u.vec_i64(&[1, 2])).unwrap();
        assert_eq!(bpf_check(&ku, &u.vec_i64(&[1, 2])).unwrap(), Freeness::NotFree(u.vec_i64(&[0, 1])));
    }

    #[test]
    fn very_ampleness() {
        let k = lambda_model();
        assert_eq!(very_ample_check(&k, &v(&k, &[0, 1])).unwrap(), VeryAmpleness::VeryAmple);
        assert_eq!(
            very_ample_check(&k, &v(&k, &[2, 0])).unwrap(),
            VeryAmpleness::Fails {
                reason: VeryAmpleFailure::B2,
                witness: Some(v(&k, &[1, 0]))
            }
        );
        assert_eq!(
            very_ample_check(&k, &v(&k, &[1, 0])).unwrap(),
            VeryAmpleness::Fails {
                reason: VeryAmpleFailure::TooSmall,
                witness: None
            }
        );
    }

    #[test]
    fn lines() {
        let k = lambda_model();
        let h = v(&k, &[0, 1]);
        let degs: Vec<BigInt> = rational_curve_degrees(&k, &h).unwrap().into_iter().map(|(_, d)| d).collect();
        assert_eq!(degs, vec![BigInt::from(3), BigInt::from(37)]);
        assert!(no_line_check(&k, &h).unwrap());
        let h2 = v(&k, &[5, -1]);
        let degs: Vec<BigInt> = rational_curve_degrees(&k, &h2).unwrap().into_iter().map(|(_, d)| d).collect();
        assert_eq!(degs, vec![BigInt::from(37), BigInt::from(3)]);
        assert!(no_line_check(&k, &h2).unwrap());
        // U with ample (1, 2) has the (-2)-curve (1, -1) of degree 1
        let u = Lattice::hyperbolic_plane();
        let ku = K3Model::new(&u, &u.vec_i64(&[1, 2])).unwrap();
        assert!(!no_line_check(&ku, &u.vec_i64(&[1, 2])).unwrap());
    }

    #[test]
    fn covering_involution_of_double_plane() {
        let k = lambda_model();
        let tau = covering_involution(&k, &v(&k, &[1, 0])).unwrap();
        assert_eq!(tau.matrix(), &IntMatrix::from_i64(&[[1, 5], [0, -1]]));
        assert_eq!(tau.apply(&v(&k, &[-1, 2])).unwrap(), v(&k, &[9, -2]));
        assert!(tau.pow(2).is_identity());
        assert!(matches!(covering_involution(&k, &v(&k, &[0, 1])), Err(Error::InvalidAxis { .. })));
    }

    #[test]
    fn model_validation() {
        let odd = Lattice::from_rows(&[[2, 5], [5, 3]]).unwrap();
        assert_eq!(K3Model::new(&odd, &odd.basis_vector(0)).unwrap_err(), Error::NotEven);
        let l = Lattice::from_rows(&[[2, 5], [5, 4]]).unwrap();
        assert!(matches!(K3Model::new(&l, &l.vec_i64(&[-1, 2])), Err(Error::NonPositiveSquare { .. })));
    }
}
