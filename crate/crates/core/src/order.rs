//! Finite/infinite order certificates for lattice isometries.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use crate::lattice::Isometry;
use crate::poly::{IntPolynomial, RootInterval};

/// Default width of the isolating interval reported for a growth eigenvalue.
pub fn default_isolation_width() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(1_000_000_000u64))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderCertificate {
    /// `A^order = I` and no smaller positive power is the identity.
    Finite { order: u64 },
    Infinite(GrowthWitness),
}

impl OrderCertificate {
    pub fn is_infinite(&self) -> bool {
        matches!(self, OrderCertificate::Infinite(_))
    }

    /// The isolating interval of the real eigenvalue `> 1`, if that is the witness.
    pub fn growth_interval(&self) -> Option<&RootInterval> {
        match self {
            OrderCertificate::Infinite(GrowthWitness::RealRoot { interval, negated: false }) => Some(interval),
            _ => None,
        }
    }
}

/// Why an isometry cannot have finite order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GrowthWitness {
    /// A real eigenvalue `λ` with `|λ| > 1` isolated in `(lo, hi)`, `lo > 1`.
    /// When `negated` is set the interval brackets `-λ`.
    RealRoot { interval: RootInterval, negated: bool },
    /// A non-cyclotomic factor of the characteristic polynomial without real
    /// roots of modulus above one; some complex root lies off the unit circle.
    OffUnitCircle { factor: IntPolynomial },
    /// All eigenvalues are roots of unity but `A^period - I` is a nonzero
    /// nilpotent matrix.
    Unipotent { period: u64 },
}

pub fn order_certificate(a: &Isometry) -> OrderCertificate {
    order_certificate_with_width(a, &default_isolation_width())
}

/// Certifies the order of `a`, isolating a growth eigenvalue to `width`.
pub fn order_certificate_with_width(a: &Isometry, width: &BigRational) -> OrderCertificate {
    let p = a.char_poly();
    let one = BigRational::one();
    if let Some(interval) = p.isolate_roots_above(&one, width).pop() {
        return OrderCertificate::Infinite(GrowthWitness::RealRoot { interval, negated: false });
    }
    if let Some(interval) = p.reflect().isolate_roots_above(&one, width).pop() {
        return OrderCertificate::Infinite(GrowthWitness::RealRoot { interval, negated: true });
    }
    let (indices, rest) = p.split_cyclotomic();
    if rest.degree() != Some(0) {
        return OrderCertificate::Infinite(GrowthWitness::OffUnitCircle { factor: rest });
    }
    let period = indices.iter().fold(1u64, |acc, &n| acc.lcm(&n));
    if !a.pow(period).is_identity() {
        return OrderCertificate::Infinite(GrowthWitness::Unipotent { period });
    }
    let order = (1..=period)
        .filter(|d| period % d == 0)
        .find(|&d| a.pow(d).is_identity())
        .expect("period itself is a valid exponent");
    OrderCertificate::Finite { order }
}
