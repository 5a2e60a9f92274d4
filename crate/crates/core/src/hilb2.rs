//! The Hilbert square of a K3 surface at the lattice level.
//!
//! `NS(S^[2]) = NS(S) ⊕ Z e` with `(e, e) = -2`, where `2e` is the class of
//! the exceptional divisor of the Hilbert-Chow morphism. A quartic
//! polarization `h` (square 4, very ample, no lines) gives a biregular
//! Beauville involution acting by the anti-involution with axis `h - e`.
//!
//! Pullbacks compose contravariantly: the pullback of `ι₂ ∘ ι₁` is
//! `ι₁* · ι₂*`, which is what [`composite_dynamics`] computes from
//! `(ι₁*, ι₂*)`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::k3geom::{is_ample, no_line_check, very_ample_check, K3Model, VeryAmpleness};
use crate::lattice::{anti_involution, Isometry, Lattice, LatticeVector};
use crate::matrix::IntMatrix;
use crate::order::{order_certificate, OrderCertificate};
use crate::poly::{Factorization, IntPolynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbSquareLattice {
    surface: Lattice,
    extended: Lattice,
}

impl HilbSquareLattice {
    /// `ns ⊕ ⟨-2⟩` for an even hyperbolic rank-2 lattice.
    pub fn extend(ns: &Lattice) -> Result<Self> {
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
        if !c.is_hyperbolic() {
            return Err(Error::WrongSignature {
                p: c.positive,
                n: c.negative,
                expected_p: 1,
                expected_n: 1,
            });
        }
        let extended = ns.direct_sum(&Lattice::rank_one(-2)?);
        Ok(HilbSquareLattice {
            surface: ns.clone(),
            extended,
        })
    }

    pub fn surface_ns(&self) -> &Lattice {
        &self.surface
    }

    pub fn extended(&self) -> &Lattice {
        &self.extended
    }

    /// Position of `e` in the basis of the extended lattice.
    pub fn e_index(&self) -> usize {
        self.surface.rank()
    }

    pub fn e(&self) -> LatticeVector {
        self.extended.basis_vector(self.e_index())
    }

    /// A surface class viewed in `NS(S^[2])`.
    pub fn lift(&self, x: &LatticeVector) -> Result<LatticeVector> {
        if x.lattice() != &self.surface {
            return Err(Error::LatticeMismatch);
        }
        let mut c = x.coords().to_vec();
        c.push(BigInt::zero());
        self.extended.vector(c)
    }

    /// The surface part of a class, dropping its `e`-coefficient.
    pub fn project(&self, x: &LatticeVector) -> Result<LatticeVector> {
        if x.lattice() != &self.extended {
            return Err(Error::LatticeMismatch);
        }
        self.surface.vector(x.coords()[..self.e_index()].to_vec())
    }

    /// `h - e`, of square `(h, h) - 2`.
    pub fn axis(&self, h: &LatticeVector) -> Result<LatticeVector> {
        Ok(&self.lift(h)? - &self.e())
    }
}

/// A quartic polarization, with the record of whether it passed the
/// very-ampleness and no-line checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BeauvillePolarization {
    h: LatticeVector,
    certified: bool,
}

impl BeauvillePolarization {
    /// Runs the ampleness, very-ampleness and no-line checks on `h`.
    pub fn certify(k: &K3Model, h: &LatticeVector) -> Result<Self> {
        check_quartic(h)?;
        if !is_ample(k, h)? {
            return Err(Error::NotAmple { class: h.to_string() });
        }
        if let VeryAmpleness::Fails { reason, .. } = very_ample_check(k, h)? {
            return Err(Error::Hypothesis(format!("{h} is not very ample ({reason:?})")));
        }
        if !no_line_check(k, h)? {
            return Err(Error::Hypothesis(format!("the quartic model of {h} contains a line")));
        }
        Ok(BeauvillePolarization {
            h: h.clone(),
            certified: true,
        })
    }

    /// A square-4 class with no geometric checks attached.
    pub fn uncertified(h: &LatticeVector) -> Result<Self> {
        check_quartic(h)?;
        Ok(BeauvillePolarization {
            h: h.clone(),
            certified: false,
        })
    }

    pub fn class(&self) -> &LatticeVector {
        &self.h
    }

    pub fn is_certified(&self) -> bool {
        self.certified
    }
}

fn check_quartic(h: &LatticeVector) -> Result<()> {
    let norm = h.norm();
    if norm != BigInt::from(4) {
        return Err(Error::InvalidPolarization { norm });
    }
    Ok(())
}

/// Debarre's formula `x -> -x + (x, h - e)(h - e)`.
pub fn beauville_involution(hl: &HilbSquareLattice, p: &BeauvillePolarization) -> Result<Isometry> {
    if !p.certified {
        return Err(Error::UncertifiedPolarization);
    }
    anti_involution(&hl.axis(&p.h)?)
}

/// `m = (h1, h2)` for two distinct ample quartic classes; by Hodge index
/// `m^2 > 16`, and ampleness makes `m` positive, so `m >= 5`.
pub fn intersection_of_polarizations(k: &K3Model, h1: &LatticeVector, h2: &LatticeVector) -> Result<BigInt> {
    check_quartic(h1)?;
    check_quartic(h2)?;
    if h1 == h2 {
        return Err(Error::Hypothesis("the two polarizations coincide".into()));
    }
    for h in [h1, h2] {
        if !is_ample(k, h)? {
            return Err(Error::NotAmple { class: h.to_string() });
        }
    }
    let m = h1.pair(h2)?;
    if &m * &m <= BigInt::from(16) || m < BigInt::from(5) {
        return Err(Error::Hypothesis(format!("(h1, h2) = {m} violates m^2 > 16, m >= 5")));
    }
    Ok(m)
}

/// The rational basis `⟨H₁ - e, H₂ - e, e⟩` of `NS(S^[2]) ⊗ Q`, viewed as a
/// lattice in its own right with Gram matrix
/// `[[2, m-2, 2], [m-2, 2, 2], [2, 2, -2]]`.
#[derive(Clone, Debug)]
pub struct PolarizationFrame {
    lattice: Lattice,
    m: BigInt,
    /// Columns: the frame vectors in the integral basis, when known.
    embedding: Option<(HilbSquareLattice, IntMatrix)>,
}

impl PolarizationFrame {
    /// The frame of two quartic classes with `(H₁, H₂) = m`, without a
    /// surface behind it. Nondegenerate unless `m = ±4`.
    pub fn from_intersection(m: i64) -> Result<Self> {
        let lattice = Lattice::from_rows(&[[2, m - 2, 2], [m - 2, 2, 2], [2, 2, -2]])?;
        Ok(PolarizationFrame {
            lattice,
            m: BigInt::from(m),
            embedding: None,
        })
    }

    pub fn new(hl: &HilbSquareLattice, h1: &LatticeVector, h2: &LatticeVector) -> Result<Self> {
        check_quartic(h1)?;
        check_quartic(h2)?;
        let basis = [hl.axis(h1)?, hl.axis(h2)?, hl.e()];
        let lattice = hl.extended().sublattice(&basis)?;
        let cols: Vec<Vec<BigInt>> = basis.iter().map(|v| v.coords().to_vec()).collect();
        Ok(PolarizationFrame {
            lattice,
            m: h1.pair(h2)?,
            embedding: Some((hl.clone(), IntMatrix::from_columns(&cols)?)),
        })
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn m(&self) -> &BigInt {
        &self.m
    }

    /// `H_k - e` for `k = 1, 2`.
    pub fn axis(&self, k: usize) -> LatticeVector {
        assert!(k == 1 || k == 2, "polarization index must be 1 or 2");
        self.lattice.basis_vector(k - 1)
    }

    pub fn e(&self) -> LatticeVector {
        self.lattice.basis_vector(2)
    }

    /// `ι_k*` written in the frame basis.
    pub fn involution(&self, k: usize) -> Result<Isometry> {
        anti_involution(&self.axis(k))
    }

    /// Frame-to-integral change of basis, when the frame came from a surface.
    pub fn basis_matrix(&self) -> Option<&IntMatrix> {
        self.embedding.as_ref().map(|(_, p)| p)
    }

    /// Rewrites an isometry of `NS(S^[2])` in the frame basis.
    pub fn to_frame(&self, a: &Isometry) -> Result<Isometry> {
        let (hl, p) = self
            .embedding
            .as_ref()
            .ok_or_else(|| Error::Hypothesis("frame has no integral embedding".into()))?;
        if a.lattice() != hl.extended() {
            return Err(Error::LatticeMismatch);
        }
        a.rebase(p, &self.lattice)
    }

    /// Rewrites a frame isometry in the integral basis; fails if the result
    /// is not an integer matrix.
    pub fn to_integral(&self, a: &Isometry) -> Result<Isometry> {
        let (hl, p) = self
            .embedding
            .as_ref()
            .ok_or_else(|| Error::Hypothesis("frame has no integral embedding".into()))?;
        if a.lattice() != &self.lattice {
            return Err(Error::LatticeMismatch);
        }
        let inv = p.to_rational().inverse().ok_or(Error::Degenerate)?;
        let m = p.to_rational().mul(&a.matrix().to_rational()).mul(&inv);
        Isometry::new(hl.extended(), m.to_integer().ok_or(Error::NotIntegral)?)
    }

    /// The matrix of `ι₁*ι₂*` in the frame basis:
    /// `[[(m-2)^2 - 1, m-2, 2m-6], [-(m-2), -1, -2], [0, 0, 1]]`.
    pub fn expected_product(&self) -> IntMatrix {
        let m = &self.m;
        let a: BigInt = m - 2;
        let rows = vec![
            vec![&a * &a - 1, a.clone(), BigInt::from(2) * m - 6],
            vec![-a, BigInt::from(-1), BigInt::from(-2)],
            vec![BigInt::zero(), BigInt::zero(), BigInt::one()],
        ];
        IntMatrix::from_rows(&rows).expect("3x3 rows")
    }

    /// `f(t) = t^2 - ((m-2)^2 - 2) t + 1`.
    pub fn expected_salem_factor(&self) -> IntPolynomial {
        let a: BigInt = &self.m - 2;
        IntPolynomial::new(vec![BigInt::one(), -(&a * &a - BigInt::from(2)), BigInt::one()])
    }
}

/// Spectral data of `M = i1 · i2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositeDynamics {
    pub matrix: Isometry,
    pub char_poly: IntPolynomial,
    pub factorization: Factorization,
    pub certificate: OrderCertificate,
    /// Primitive generators of `ker(M - I)`.
    pub fixed_space: Vec<LatticeVector>,
}

impl CompositeDynamics {
    /// The fixed vector, when the fixed space is a line. Primitive, with
    /// last coordinate `<= 0` (first nonzero coordinate positive if it is 0).
    pub fn fixed_vector(&self) -> Option<&LatticeVector> {
        match self.fixed_space.as_slice() {
            [v] => Some(v),
            _ => None,
        }
    }

    pub fn fixed_vector_norm(&self) -> Option<BigInt> {
        self.fixed_vector().map(LatticeVector::norm)
    }
}

pub fn composite_dynamics(i1: &Isometry, i2: &Isometry) -> Result<CompositeDynamics> {
    let m = i1.compose(i2)?;
    let char_poly = m.char_poly();
    let factorization = char_poly.factor();
    let certificate = order_certificate(&m);
    let n = m.lattice().rank();
    let kernel = m.matrix().sub(&IntMatrix::identity(n)).to_rational().integer_kernel();
    let fixed_space = kernel
        .into_iter()
        .map(|c| {
            let v = m.lattice().vector(c)?;
            let last = v.coords()[n - 1].clone();
            Ok(if last.is_positive() {
                -&v
            } else if last.is_zero() {
                v.primitive_normalized()
            } else {
                v
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CompositeDynamics {
        matrix: m,
        char_poly,
        factorization,
        certificate,
        fixed_space,
    })
}

/// `[x, Ax, ..., A^n x]`.
pub fn orbit(a: &Isometry, x: &LatticeVector, n: usize) -> Result<Vec<LatticeVector>> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(x.clone());
    for _ in 0..n {
        let next = a.apply(out.last().expect("orbit is nonempty"))?;
        out.push(next);
    }
    Ok(out)
}
