//! Products of K3 surfaces and the cone bookkeeping of Mori dream spaces.
//!
//! For `M = S_1^{m_1} × ... × S_n^{m_n}` the Néron-Severi lattice is the
//! orthogonal sum of the factors and the nef cone is the product of the
//! factor nef cones. Semi-ampleness of generators is a geometric input and is
//! carried as a declared flag, never computed.

use std::ops::Range;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::k3geom::{nef_cone, ConeR2, K3Model};
use crate::lattice::{Isometry, Lattice, LatticeVector};
use crate::matrix::IntMatrix;

/// One copy of a factor inside the product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorSlice {
    pub factor: usize,
    pub copy: usize,
    pub range: Range<usize>,
}

#[derive(Clone, Debug)]
pub struct ProductModel {
    factors: Vec<(K3Model, usize)>,
    total: Lattice,
    slices: Vec<FactorSlice>,
}

impl ProductModel {
    pub fn factors(&self) -> &[(K3Model, usize)] {
        &self.factors
    }

    pub fn total(&self) -> &Lattice {
        &self.total
    }

    pub fn slices(&self) -> &[FactorSlice] {
        &self.slices
    }

    fn slice(&self, s: usize) -> Result<&FactorSlice> {
        self.slices.get(s).ok_or(Error::DimensionMismatch {
            expected: self.slices.len(),
            found: s,
        })
    }

    /// The component of `x` in slice `s`, as a class on that factor.
    pub fn project(&self, x: &LatticeVector, s: usize) -> Result<LatticeVector> {
        if x.lattice() != &self.total {
            return Err(Error::LatticeMismatch);
        }
        let sl = self.slice(s)?;
        self.factors[sl.factor].0.ns().vector(x.coords()[sl.range.clone()].to_vec())
    }

    /// A factor class placed in slice `s`, zero elsewhere.
    pub fn embed(&self, v: &LatticeVector, s: usize) -> Result<LatticeVector> {
        let sl = self.slice(s)?;
        if v.lattice() != self.factors[sl.factor].0.ns() {
            return Err(Error::LatticeMismatch);
        }
        let mut c = vec![BigInt::zero(); self.total.rank()];
        for (i, x) in sl.range.clone().zip(v.coords()) {
            c[i] = x.clone();
        }
        self.total.vector(c)
    }

    /// Assembles a class from one factor class per slice.
    pub fn assemble(&self, parts: &[LatticeVector]) -> Result<LatticeVector> {
        if parts.len() != self.slices.len() {
            return Err(Error::DimensionMismatch {
                expected: self.slices.len(),
                found: parts.len(),
            });
        }
        let mut sum = self.total.zero_vector();
        for (s, v) in parts.iter().enumerate() {
            sum = sum.checked_add(&self.embed(v, s)?)?;
        }
        Ok(sum)
    }

    /// Block-diagonal isometry acting by `isos[s]` on slice `s`.
    pub fn block_isometry(&self, isos: &[Isometry]) -> Result<Isometry> {
        if isos.len() != self.slices.len() {
            return Err(Error::DimensionMismatch {
                expected: self.slices.len(),
                found: isos.len(),
            });
        }
        let mut m = IntMatrix::zeros(self.total.rank(), self.total.rank());
        for (sl, g) in self.slices.iter().zip(isos) {
            if g.lattice() != self.factors[sl.factor].0.ns() {
                return Err(Error::LatticeMismatch);
            }
            let r = sl.range.start;
            for i in 0..sl.range.len() {
                for j in 0..sl.range.len() {
                    m[(r + i, r + j)] = g.matrix()[(i, j)].clone();
                }
            }
        }
        Isometry::new(&self.total, m)
    }

    /// Moves slice `s` to slice `perm[s]`; only copies of the same factor may
    /// be exchanged.
    pub fn block_permutation(&self, perm: &[usize]) -> Result<Isometry> {
        let n = self.slices.len();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&t| t >= n || std::mem::replace(&mut seen[t], true)) {
            return Err(Error::Hypothesis("not a permutation of the slices".into()));
        }
        let mut m = IntMatrix::zeros(self.total.rank(), self.total.rank());
        for (s, &t) in perm.iter().enumerate() {
            let (a, b) = (&self.slices[s], &self.slices[t]);
            if a.factor != b.factor {
                return Err(Error::Hypothesis(format!(
                    "slice {s} and slice {t} carry different factors"
                )));
            }
            for i in 0..a.range.len() {
                m[(b.range.start + i, a.range.start + i)] = BigInt::from(1);
            }
        }
        Isometry::new(&self.total, m)
    }
}

/// Orthogonal sum of `multiplicity` copies of each factor, in order.
pub fn direct_sum(factors: &[(K3Model, usize)]) -> Result<ProductModel> {
    let mut total: Option<Lattice> = None;
    let mut slices = Vec::new();
    let mut start = 0;
    for (i, (k, mult)) in factors.iter().enumerate() {
        for copy in 0..*mult {
            let r = k.ns().rank();
            slices.push(FactorSlice {
                factor: i,
                copy,
                range: start..start + r,
            });
            start += r;
            total = Some(match total {
                None => k.ns().clone(),
                Some(t) => t.direct_sum(k.ns()),
            });
        }
    }
    let total = total.ok_or(Error::EmptyProduct)?;
    Ok(ProductModel {
        factors: factors.to_vec(),
        total,
        slices,
    })
}

/// Membership of `x` in the product of the closed factor nef cones.
///
/// `cones[i]` must be the certified nef cone of factor `i`.
pub fn product_cone_membership(p: &ProductModel, x: &LatticeVector, cones: &[ConeR2]) -> Result<bool> {
    if cones.len() != p.factors.len() {
        return Err(Error::DimensionMismatch {
            expected: p.factors.len(),
            found: cones.len(),
        });
    }
    for (i, ((k, _), c)) in p.factors.iter().zip(cones).enumerate() {
        if !c.is_certified() || c != &nef_cone(k)? {
            return Err(Error::UncertifiedCone { factor: i });
        }
    }
    for (s, sl) in p.slices.iter().enumerate() {
        if !cones[sl.factor].contains(&p.project(x, s)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A finite set of rays with declared semi-ampleness of each generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteRayCone {
    lattice: Lattice,
    rays: Vec<LatticeVector>,
    semi_ample: Vec<bool>,
}

impl FiniteRayCone {
    /// Rays are made primitive (direction kept) and must be pairwise
    /// non-proportional.
    pub fn new(rays: &[LatticeVector], semi_ample: &[bool]) -> Result<Self> {
        let first = rays.first().ok_or_else(|| Error::InvalidCone("no rays".into()))?;
        if semi_ample.len() != rays.len() {
            return Err(Error::DimensionMismatch {
                expected: rays.len(),
                found: semi_ample.len(),
            });
        }
        let lattice = first.lattice().clone();
        let mut prim = Vec::with_capacity(rays.len());
        for r in rays {
            if r.lattice() != &lattice {
                return Err(Error::LatticeMismatch);
            }
            if r.is_zero() {
                return Err(Error::InvalidCone("zero ray".into()));
            }
            prim.push(r.primitive());
        }
        if let Some((a, b)) = first_proportional_pair(&prim) {
            return Err(Error::InvalidCone(format!("rays {a} and {b} are proportional")));
        }
        Ok(FiniteRayCone {
            lattice,
            rays: prim,
            semi_ample: semi_ample.to_vec(),
        })
    }

    /// The product of the factor nef cones, one ray per factor nef ray and
    /// slice. `semi_ample` is declared per slice.
    pub fn product_nef(p: &ProductModel, semi_ample: &[bool]) -> Result<Self> {
        if semi_ample.len() != p.slices.len() {
            return Err(Error::DimensionMismatch {
                expected: p.slices.len(),
                found: semi_ample.len(),
            });
        }
        let mut rays = Vec::new();
        let mut flags = Vec::new();
        for (s, sl) in p.slices.iter().enumerate() {
            for r in nef_cone(&p.factors[sl.factor].0)?.rays() {
                rays.push(p.embed(r, s)?);
                flags.push(semi_ample[s]);
            }
        }
        FiniteRayCone::new(&rays, &flags)
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn semi_ample_flags(&self) -> &[bool] {
        &self.semi_ample
    }

    /// Whether `g` permutes the rays.
    pub fn is_stable_under(&self, g: &Isometry) -> Result<bool> {
        if g.lattice() != &self.lattice {
            return Err(Error::LatticeMismatch);
        }
        for r in &self.rays {
            if !self.rays.contains(&g.apply(r)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn first_proportional_pair(v: &[LatticeVector]) -> Option<(usize, usize)> {
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i].is_proportional(&v[j]) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Sum of the primitive ray generators, which every ray-permuting isometry
/// fixes.
pub fn invariant_ample_from_rays(c: &FiniteRayCone, group: &[Isometry]) -> Result<LatticeVector> {
    for (index, g) in group.iter().enumerate() {
        if !c.is_stable_under(g)? {
            return Err(Error::StabilityViolation { index });
        }
    }
    let mut sum = c.lattice.zero_vector();
    for r in &c.rays {
        sum = sum.checked_add(r)?;
    }
    if !sum.norm().is_positive() {
        return Err(Error::InvalidCone(format!(
            "sum of rays {sum} has square {}, cone misses the positive cone",
            sum.norm()
        )));
    }
    for (index, g) in group.iter().enumerate() {
        if g.apply(&sum)? != sum {
            return Err(Error::StabilityViolation { index });
        }
    }
    Ok(sum)
}

/// `count` orbit classes `A^n(seed)`, `n = 0..count`, checked pairwise
/// non-proportional. A proportional pair is reported as an anomaly.
pub fn non_polyhedral_witness(a: &Isometry, seed: &LatticeVector, count: usize) -> Result<Vec<LatticeVector>> {
    if seed.is_zero() {
        return Err(Error::Hypothesis("orbit seed must be nonzero".into()));
    }
    let mut orbit = Vec::with_capacity(count);
    let mut x = seed.clone();
    for _ in 0..count {
        let next = a.apply(&x)?;
        orbit.push(x);
        x = next;
    }
    if let Some((first, second)) = first_proportional_pair(&orbit) {
        return Err(Error::ProportionalityAnomaly { first, second });
    }
    Ok(orbit)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MdsConclusion {
    /// Every numerical proxy of the definition holds.
    Consistent,
    NotEstablished { reasons: Vec<String> },
}

/// Which lattice-level conditions of the Mori dream space definition hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MdsReport {
    /// Condition (1), Q-factoriality with finitely generated Picard group:
    /// taken as an assumption.
    pub condition1_assumed: bool,
    /// Condition (2): nef cone generated by finitely many declared
    /// semi-ample classes.
    pub condition2: bool,
    /// Condition (3): movable cone is the nef cone (one chamber).
    pub condition3: bool,
    pub ray_count: Option<usize>,
    pub conclusion: MdsConclusion,
}

impl MdsReport {
    pub fn is_consistent(&self) -> bool {
        self.conclusion == MdsConclusion::Consistent
    }
}

/// Numerical MDS checklist. `cone` is the candidate finite generator set of
/// the nef cone, if any; `orbit_witness` is an infinite-orbit obstruction
/// from [`non_polyhedral_witness`].
pub fn mds_checklist(
    cone: Option<&FiniteRayCone>,
    movable_equals_nef: bool,
    orbit_witness: Option<&[LatticeVector]>,
) -> MdsReport {
    let mut reasons = Vec::new();
    let condition2 = match cone {
        None => {
            reasons.push("no finite generator set for the nef cone".to_string());
            false
        }
        Some(c) if c.semi_ample.iter().all(|&f| f) => true,
        Some(_) => {
            reasons.push("some generator is not declared semi-ample".to_string());
            false
        }
    };
    if !movable_equals_nef {
        reasons.push("movable cone not declared equal to the nef cone".to_string());
    }
    if let Some(w) = orbit_witness {
        reasons.push(format!(
            "infinite ray orbit: {} pairwise non-proportional classes in one automorphism orbit",
            w.len()
        ));
    }
    MdsReport {
        condition1_assumed: true,
        condition2: condition2 && orbit_witness.is_none(),
        condition3: movable_equals_nef,
        ray_count: cone.map(|c| c.rays.len()),
        conclusion: if reasons.is_empty() {
            MdsConclusion::Consistent
        } else {
            MdsConclusion::NotEstablished { reasons }
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilb2::PolarizationFrame;
    use crate::k3geom::covering_involution;

    fn lambda() -> K3Model {
        let l = Lattice::from_rows(&[[2, 5], [5, 4]]).unwrap();
        K3Model::new(&l, &l.basis_vector(0)).unwrap()
    }

    #[test]
    fn square_of_lambda() {
        let k = lambda();
        let p = direct_sum(&[(k.clone(), 2)]).unwrap();
        assert_eq!(p.total().rank(), 4);
        assert_eq!(p.total().det(), &BigInt::from(289));
        let a = p.embed(&k.ns().vec_i64(&[1, 2]), 0).unwrap();
        let b = p.embed(&k.ns().vec_i64(&[3, -1]), 1).unwrap();
        assert!(a.pair(&b).unwrap().is_zero());
        let single = direct_sum(&[(k.clone(), 1)]).unwrap();
        assert_eq!(single.total(), k.ns());
        assert_eq!(direct_sum(&[]).unwrap_err(), Error::EmptyProduct);
    }

    #[test]
    fn membership() {
        let k = lambda();
        let p = direct_sum(&[(k.clone(), 2)]).unwrap();
        let nef = [nef_cone(&k).unwrap()];
        let v = |c: &[i64]| k.ns().vec_i64(c);
        let x = |a: &[i64], b: &[i64]| p.assemble(&[v(a), v(b)]).unwrap();
        assert!(product_cone_membership(&p, &x(&[1, 0], &[1, 0]), &nef).unwrap());
        assert!(!product_cone_membership(&p, &x(&[1, 0], &[-1, 0]), &nef).unwrap());
        assert!(!product_cone_membership(&p, &x(&[-1, 2], &[0, 1]), &nef).unwrap());
        let eff = [k.cached_effective_cone().unwrap().clone()];
        assert_eq!(
            product_cone_membership(&p, &x(&[1, 0], &[1, 0]), &eff).unwrap_err(),
            Error::UncertifiedCone { factor: 0 }
        );
    }

    #[test]
    fn block_isometries_preserve_the_product_cone() {
        let k = lambda();
        let p = direct_sum(&[(k.clone(), 2)]).unwrap();
        let cone = FiniteRayCone::product_nef(&p, &[true, true]).unwrap();
        assert_eq!(cone.rays().len(), 4);
        let swap = p.block_permutation(&[1, 0]).unwrap();
        assert!(cone.is_stable_under(&swap).unwrap());
        let tau = covering_involution(&k, k.ample()).unwrap();
        let t = p.block_isometry(&[tau.clone(), tau]).unwrap();
        assert!(cone.is_stable_under(&t).unwrap());
        let h = invariant_ample_from_rays(&cone, &[swap, t]).unwrap();
        assert!(product_cone_membership(&p, &h, &[nef_cone(&k).unwrap()]).unwrap());
    }

    #[test]
    fn invariant_class_of_lambda_rays() {
        let k = lambda();
        let eff = k.cached_effective_cone().unwrap();
        let c = FiniteRayCone::new(eff.rays(), &[true, true]).unwrap();
        let tau = covering_involution(&k, k.ample()).unwrap();
        assert_eq!(invariant_ample_from_rays(&c, &[tau]).unwrap(), k.ns().vec_i64(&[8, 0]));
        assert_eq!(
            invariant_ample_from_rays(&c, &[k.ns().identity()]).unwrap(),
            k.ns().vec_i64(&[8, 0])
        );
        let r = crate::lattice::reflect(&k.ns().vec_i64(&[-1, 2])).unwrap();
        assert_eq!(
            invariant_ample_from_rays(&c, &[k.ns().identity(), r]).unwrap_err(),
            Error::StabilityViolation { index: 1 }
        );
    }

    #[test]
    fn swap_on_a_square_lattice() {
        let l = Lattice::from_rows(&[[2, 0], [0, 2]]).unwrap();
        let swap = Isometry::new(&l, IntMatrix::from_i64(&[[0, 1], [1, 0]])).unwrap();
        let c = FiniteRayCone::new(&[l.vec_i64(&[1, 0]), l.vec_i64(&[0, 1])], &[true, true]).unwrap();
        assert_eq!(invariant_ample_from_rays(&c, &[swap]).unwrap(), l.vec_i64(&[1, 1]));
    }

    #[test]
    fn orbit_witnesses() {
        let f = PolarizationFrame::from_intersection(21).unwrap();
        let a = f.involution(1).unwrap().compose(&f.involution(2).unwrap()).unwrap();
        let w = non_polyhedral_witness(&a, &f.e(), 10).unwrap();
        assert_eq!(w.len(), 10);
        assert_eq!(non_polyhedral_witness(&a, &f.e(), 1).unwrap(), vec![f.e()]);
        let i1 = f.involution(1).unwrap();
        assert!(matches!(
            non_polyhedral_witness(&i1, &f.e(), 3),
            Err(Error::ProportionalityAnomaly { first: 0, second: 2 })
        ));
        let report = mds_checklist(None, false, Some(&w));
        assert!(!report.is_consistent());
        match report.conclusion {
            MdsConclusion::NotEstablished { reasons } => {
                assert!(reasons.iter().any(|r| r.starts_with("infinite ray orbit")))
            }
            MdsConclusion::Consistent => unreachable!(),
        }
    }

    #[test]
    fn checklist_for_products() {
        let k = lambda();
        let p = direct_sum(&[(k, 2)]).unwrap();
        let cone = FiniteRayCone::product_nef(&p, &[true, true]).unwrap();
        assert!(mds_checklist(Some(&cone), true, None).is_consistent());
        let partial = FiniteRayCone::product_nef(&p, &[true, false]).unwrap();
        assert!(!mds_checklist(Some(&partial), true, None).is_consistent());
    }
}
