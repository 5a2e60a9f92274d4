//! Integer lattices, their vectors and isometries.
//!
//! A [`Lattice`] is a free module with a fixed basis and a symmetric,
//! non-degenerate integer Gram matrix. Vectors are integer coordinate columns
//! in that basis and every isometry acts on columns, so the image of the
//! `j`-th basis vector is the `j`-th column of its matrix.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::{self, IntMatrix};

#[derive(Debug)]
struct Inner {
    gram: IntMatrix,
    det: BigInt,
}

/// Free Z-module of finite rank with a symmetric non-degenerate integer form.
///
/// Cloning is cheap; clones share the Gram matrix.
#[derive(Clone, Debug)]
pub struct Lattice(Arc<Inner>);

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.gram == other.0.gram
    }
}

impl Eq for Lattice {}

/// Signature and parity of a lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub even: bool,
    pub positive: usize,
    pub negative: usize,
}

impl Classification {
    pub fn is_hyperbolic(&self) -> bool {
        self.positive == 1
    }
}

/// Determinant of the Gram matrix, with its absolute value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discriminant {
    pub det: BigInt,
    pub abs_det: BigInt,
}

impl Lattice {
    pub fn new(gram: IntMatrix) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::NotSquare);
        }
        if gram.rows() == 0 {
            return Err(Error::WrongRank { expected: 1, found: 0 });
        }
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let det = gram.det();
        if det.is_zero() {
            return Err(Error::Degenerate);
        }
        Ok(Lattice(Arc::new(Inner { gram, det })))
    }

    pub fn from_rows<const C: usize>(rows: &[[i64; C]]) -> Result<Self> {
        Self::new(IntMatrix::from_i64(rows))
    }

    /// Rank-one lattice `<n>`.
    pub fn rank_one(n: i64) -> Result<Self> {
        Self::from_rows(&[[n]])
    }

    /// The hyperbolic plane `U`.
    pub fn hyperbolic_plane() -> Self {
        Self::from_rows(&[[0, 1], [1, 0]]).expect("U is non-degenerate")
    }

    pub fn rank(&self) -> usize {
        self.0.gram.rows()
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.0.gram
    }

    pub fn discriminant(&self) -> Discriminant {
        Discriminant {
            det: self.0.det.clone(),
            abs_det: self.0.det.abs(),
        }
    }

    pub fn det(&self) -> &BigInt {
        &self.0.det
    }

    /// Parity and signature, the latter by exact congruence diagonalization.
    pub fn classify(&self) -> Classification {
        let n = self.rank();
        let g = self.gram();
        let even = (0..n).all(|i| g[(i, i)].is_even());
        let diag = congruence_diagonal(g);
        Classification {
            even,
            positive: diag.iter().filter(|d| d.is_positive()).count(),
            negative: diag.iter().filter(|d| d.is_negative()).count(),
        }
    }

    pub fn is_even_hyperbolic(&self) -> bool {
        let c = self.classify();
        c.even && c.is_hyperbolic()
    }

    /// Orthogonal direct sum, block-diagonal Gram matrix.
    pub fn direct_sum(&self, other: &Lattice) -> Lattice {
        let (a, b) = (self.rank(), other.rank());
        let mut g = IntMatrix::zeros(a + b, a + b);
        for i in 0..a {
            for j in 0..a {
                g[(i, j)] = self.gram()[(i, j)].clone();
            }
        }
        for i in 0..b {
            for j in 0..b {
                g[(a + i, a + j)] = other.gram()[(i, j)].clone();
            }
        }
        Lattice::new(g).expect("direct sum of non-degenerate lattices is non-degenerate")
    }

    /// The same lattice in the basis given by the columns of a unimodular matrix.
    pub fn rebase(&self, basis: &IntMatrix) -> Result<Lattice> {
        let det = basis.det();
        if !det.abs().is_one() {
            return Err(Error::NotUnimodular { det });
        }
        Lattice::new(&(&basis.transpose() * self.gram()) * basis)
    }

    /// The sublattice spanned by the given vectors, with its own basis.
    pub fn sublattice(&self, basis: &[LatticeVector]) -> Result<Lattice> {
        let cols = basis
            .iter()
            .map(|v| self.check(v).map(|_| v.coords.clone()))
            .collect::<Result<Vec<_>>>()?;
        let b = IntMatrix::from_columns(&cols)?;
        Lattice::new(&(&b.transpose() * self.gram()) * &b)
    }

    pub fn vector(&self, coords: Vec<BigInt>) -> Result<LatticeVector> {
        if coords.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: coords.len(),
            });
        }
        Ok(LatticeVector {
            lattice: self.clone(),
            coords,
        })
    }

    /// Vector from small coordinates. Panics if the length is wrong.
    pub fn vec_i64(&self, coords: &[i64]) -> LatticeVector {
        self.vector(coords.iter().map(|&c| BigInt::from(c)).collect())
            .expect("coordinate count must equal the rank")
    }

    pub fn zero_vector(&self) -> LatticeVector {
        LatticeVector {
            lattice: self.clone(),
            coords: vec![BigInt::zero(); self.rank()],
        }
    }

    pub fn basis_vector(&self, i: usize) -> LatticeVector {
        let mut v = self.zero_vector();
        v.coords[i] = BigInt::one();
        v
    }

    fn check(&self, v: &LatticeVector) -> Result<()> {
        if &v.lattice != self {
            return Err(Error::LatticeMismatch);
        }
        Ok(())
    }

    /// `a^T G b`.
    pub fn pair(&self, a: &LatticeVector, b: &LatticeVector) -> Result<BigInt> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.pair_coords(&a.coords, &b.coords))
    }

    pub(crate) fn pair_coords(&self, a: &[BigInt], b: &[BigInt]) -> BigInt {
        let gb = self.gram().mul_vec(b);
        a.iter().zip(&gb).map(|(x, y)| x * y).sum()
    }

    pub fn identity(&self) -> Isometry {
        Isometry {
            lattice: self.clone(),
            matrix: IntMatrix::identity(self.rank()),
        }
    }

    /// `-id`
    pub fn negation(&self) -> Isometry {
        Isometry {
            lattice: self.clone(),
            matrix: IntMatrix::identity(self.rank()).scale(&BigInt::from(-1)),
        }
    }
}

/// Diagonal of a rational congruence diagonalization `P^T G P = D`.
fn congruence_diagonal(g: &IntMatrix) -> Vec<BigRational> {
    let n = g.rows();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| g.row(i).iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let mut diag = Vec::with_capacity(n);
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                // swap basis vectors k and j
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // x_k <- x_k + x_j makes the pivot 2 a_kj
                for c in 0..n {
                    let t = a[j][c].clone();
                    a[k][c] += t;
                }
                for r in 0..n {
                    let t = a[r][j].clone();
                    a[r][k] += t;
                }
            }
        }
        let p = a[k][k].clone();
        if p.is_zero() {
            // the remaining row is zero: degenerate direction
            diag.push(p);
            continue;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &p;
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
            for r in 0..n {
                let t = &f * &a[r][k];
                a[r][i] -= t;
            }
        }
        diag.push(p);
    }
    diag
}

/// Integer coordinate vector in a lattice's basis.
#[derive(Clone, PartialEq, Eq)]
pub struct LatticeVector {
    lattice: Lattice,
    coords: Vec<BigInt>,
}

impl LatticeVector {
    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.coords
    }

    pub fn pair(&self, other: &LatticeVector) -> Result<BigInt> {
        self.lattice.pair(self, other)
    }

    /// Self-intersection `(v, v)`.
    pub fn norm(&self) -> BigInt {
        self.lattice.pair_coords(&self.coords, &self.coords)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &BigInt) -> LatticeVector {
        LatticeVector {
            lattice: self.lattice.clone(),
            coords: self.coords.iter().map(|c| c * k).collect(),
        }
    }

    pub fn scale_i64(&self, k: i64) -> LatticeVector {
        self.scale(&BigInt::from(k))
    }

    /// Gcd of the coordinates.
    pub fn content(&self) -> BigInt {
        matrix::content(&self.coords)
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    /// Divided by the coordinate gcd, first nonzero coordinate made positive.
    pub fn primitive_normalized(&self) -> LatticeVector {
        let mut coords = matrix::primitive(&self.coords);
        if coords.iter().find(|c| !c.is_zero()).is_some_and(Signed::is_negative) {
            coords.iter_mut().for_each(|c| *c = -&*c);
        }
        LatticeVector {
            lattice: self.lattice.clone(),
            coords,
        }
    }

    /// Divided by the coordinate gcd, sign kept.
    pub fn primitive(&self) -> LatticeVector {
        LatticeVector {
            lattice: self.lattice.clone(),
            coords: matrix::primitive(&self.coords),
        }
    }

    /// Whether `self` and `other` span a line, tested by all 2x2 minors.
    pub fn is_proportional(&self, other: &LatticeVector) -> bool {
        let (a, b) = (&self.coords, &other.coords);
        (0..a.len()).all(|i| (i + 1..a.len()).all(|j| (&a[i] * &b[j] - &a[j] * &b[i]).is_zero()))
    }

    pub fn checked_add(&self, other: &LatticeVector) -> Result<LatticeVector> {
        if self.lattice != other.lattice {
            return Err(Error::LatticeMismatch);
        }
        Ok(LatticeVector {
            lattice: self.lattice.clone(),
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        })
    }

    /// Coordinates as `i64`, if they fit.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.coords.iter().map(ToPrimitive::to_i64).collect()
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add for &LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: &LatticeVector) -> LatticeVector {
        self.checked_add(rhs).expect("vectors must lie in the same lattice")
    }
}

impl Sub for &LatticeVector {
    type Output = LatticeVector;
    fn sub(self, rhs: &LatticeVector) -> LatticeVector {
        self + &(-rhs)
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector {
            lattice: self.lattice.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul<&LatticeVector> for i64 {
    type Output = LatticeVector;
    fn mul(self, rhs: &LatticeVector) -> LatticeVector {
        rhs.scale_i64(self)
    }
}

/// Integer matrix preserving the Gram pairing, acting on coordinate columns.
#[derive(Clone, PartialEq, Eq)]
pub struct Isometry {
    lattice: Lattice,
    matrix: IntMatrix,
}

impl fmt::Debug for Isometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Isometry({})", self.matrix)
    }
}

impl Isometry {
    /// Validates `M^T G M = G`; the determinant is then automatically ±1.
    pub fn new(lattice: &Lattice, matrix: IntMatrix) -> Result<Self> {
        let n = lattice.rank();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: matrix.rows(),
            });
        }
        let g = lattice.gram();
        if &(&matrix.transpose() * g) * &matrix != *g {
            return Err(Error::NotIsometry);
        }
        debug_assert!(matrix.det().abs().is_one());
        Ok(Isometry {
            lattice: lattice.clone(),
            matrix,
        })
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn det(&self) -> BigInt {
        self.matrix.det()
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    pub fn apply(&self, v: &LatticeVector) -> Result<LatticeVector> {
        self.lattice.check(v)?;
        Ok(LatticeVector {
            lattice: self.lattice.clone(),
            coords: self.matrix.mul_vec(&v.coords),
        })
    }

    /// Matrix product `self * other`: apply `other` first, then `self`.
    ///
    /// For pullbacks this is the natural order: `(g f)^* = f^* g^*`, so the
    /// pullback of `g ∘ f` is `compose(f^*, g^*)`.
    pub fn compose(&self, other: &Isometry) -> Result<Isometry> {
        if self.lattice != other.lattice {
            return Err(Error::LatticeMismatch);
        }
        Ok(Isometry {
            lattice: self.lattice.clone(),
            matrix: &self.matrix * &other.matrix,
        })
    }

    pub fn pow(&self, n: u64) -> Isometry {
        Isometry {
            lattice: self.lattice.clone(),
            matrix: self.matrix.pow(n),
        }
    }

    /// Characteristic polynomial `det(t I - M)`, by Faddeev-LeVerrier.
    ///
    /// The recursion divides by `k` at step `k`; those divisions are exact
    /// for integer matrices.
    pub fn char_poly(&self) -> crate::poly::IntPolynomial {
        char_poly(&self.matrix)
    }

    /// The same isometry written in the basis given by the columns of `basis`.
    pub fn rebase(&self, basis: &IntMatrix, rebased: &Lattice) -> Result<Isometry> {
        let inv = basis
            .to_rational()
            .inverse()
            .ok_or(Error::NotUnimodular { det: BigInt::zero() })?;
        let m = inv.mul(&self.matrix.to_rational()).mul(&basis.to_rational());
        let m = m.to_integer().ok_or(Error::NotIntegral)?;
        Isometry::new(rebased, m)
    }
}

/// Characteristic polynomial of a square integer matrix.
pub fn char_poly(m: &IntMatrix) -> crate::poly::IntPolynomial {
    let n = m.rows();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k) / k
    let mut mk = IntMatrix::zeros(n, n);
    for k in 1..=n {
        let mut next = m * &mk;
        for i in 0..n {
            next[(i, i)] += &coeffs[n - k + 1];
        }
        mk = next;
        let tr = (m * &mk).trace();
        coeffs[n - k] = -tr / BigInt::from(k);
    }
    crate::poly::IntPolynomial::new(coeffs)
}

/// The reflection `x -> x + (x, c) c` in a (-2)-vector.
pub fn reflect(c: &LatticeVector) -> Result<Isometry> {
    let norm = c.norm();
    if norm != BigInt::from(-2) {
        return Err(Error::InvalidRoot { norm });
    }
    Ok(rank_one_update(c, 1))
}

/// The anti-involution `x -> -x + (x, v) v` fixing a vector of square 2.
pub fn anti_involution(v: &LatticeVector) -> Result<Isometry> {
    let norm = v.norm();
    if norm != BigInt::from(2) {
        return Err(Error::InvalidAxis { norm });
    }
    Ok(rank_one_update(v, -1))
}

/// `sign * I + v (G v)^T`.
fn rank_one_update(v: &LatticeVector, sign: i64) -> Isometry {
    let l = v.lattice();
    let n = l.rank();
    let gv = l.gram().mul_vec(&v.coords);
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = &v.coords[i] * &gv[j];
        }
        m[(i, i)] += BigInt::from(sign);
    }
    Isometry::new(l, m).expect("reflections and anti-involutions preserve the form")
}
