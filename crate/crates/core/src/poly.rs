//! Univariate integer polynomials, Sturm sequences and real-root isolation.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Integer polynomial, coefficients lowest degree first.
///
/// Trailing zero coefficients are always trimmed, so the zero polynomial has
/// an empty coefficient list and every other polynomial has a nonzero leading
/// coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `t - r`
    pub fn linear_root(r: &BigInt) -> Self {
        Self::new(vec![-r.clone(), BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant(&self) -> BigInt {
        self.coeffs.first().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| {
            acc * x + BigRational::from_integer(c.clone())
        })
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).cloned().unwrap_or_default()
                        + other.coeffs.get(i).cloned().unwrap_or_default()
                })
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// `p(-t)`
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn content(&self) -> BigInt {
        crate::matrix::content(&self.coeffs)
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Exact quotient over the integers, `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = RatPoly::from_int(self).div_rem(&RatPoly::from_int(divisor));
        if !r.is_zero() {
            return None;
        }
        q.to_int()
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_exact(self).is_some()
    }

    /// `p / gcd(p, p')`, primitive with positive leading coefficient.
    pub fn square_free_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.primitive_part();
        }
        let p = RatPoly::from_int(self);
        let g = p.gcd(&RatPoly::from_int(&self.derivative()));
        let (q, _) = p.div_rem(&g);
        q.to_primitive_int()
    }

    /// Sturm sequence of the square-free part, over the rationals.
    pub fn sturm_sequence(&self) -> SturmSequence {
        SturmSequence::new(&self.square_free_part())
    }

    /// Number of distinct real roots in the open interval `(lo, hi)`; `None` for +∞.
    pub fn count_real_roots(&self, lo: &BigRational, hi: Option<&BigRational>) -> usize {
        let sq = self.square_free_part();
        let seq = SturmSequence::new(&sq);
        // roots at the endpoints are excluded from the open interval
        let at_hi = match hi {
            Some(h) if sq.eval_rational(h).is_zero() => 1,
            _ => 0,
        };
        let v_lo = seq.variations_at(lo);
        let v_hi = match hi {
            Some(h) => seq.variations_at(h),
            None => seq.variations_at_pos_infinity(),
        };
        (v_lo - v_hi) - at_hi
    }

    /// Isolates every distinct real root strictly greater than `lower`, each to
    /// an open interval of width at most `width`, in increasing order.
    pub fn isolate_roots_above(&self, lower: &BigRational, width: &BigRational) -> Vec<RootInterval> {
        assert!(width.is_positive());
        let mut sq = self.square_free_part();
        if sq.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        // strip an exact root at the lower endpoint so Sturm counts stay clean
        let lin = RatPoly::new(vec![-lower.clone(), BigRational::one()]);
        let (q, r) = RatPoly::from_int(&sq).div_rem(&lin);
        if r.is_zero() {
            sq = q.to_primitive_int();
        }
        let seq = SturmSequence::new(&sq);
        let bound = sq.cauchy_bound();
        let hi = if &bound > lower { bound } else { lower + BigRational::one() };
        let mut out = Vec::new();
        let mut stack = vec![(lower.clone(), hi)];
        while let Some((a, b)) = stack.pop() {
            let count = seq.variations_at(&a) - seq.variations_at(&b);
            match count {
                0 => {}
                1 => out.push(refine(&sq, a, b, width)),
                _ => {
                    let m = split_point(&sq, &a, &b);
                    stack.push((m.clone(), b));
                    stack.push((a, m));
                }
            }
        }
        out.sort_by(|x, y| x.lo.cmp(&y.lo));
        out
    }

    /// Cauchy bound: every root has absolute value strictly below it.
    pub fn cauchy_bound(&self) -> BigRational {
        let lead = BigRational::from_integer(self.leading().expect("nonzero polynomial").abs());
        let max = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| BigRational::from_integer(c.abs()) / &lead)
            .max()
            .unwrap_or_else(BigRational::zero);
        max + BigRational::one()
    }

    /// The n-th cyclotomic polynomial.
    pub fn cyclotomic(n: u64) -> Self {
        assert!(n >= 1);
        let mut coeffs = vec![BigInt::zero(); n as usize + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n as usize] = BigInt::one();
        let mut p = Self::new(coeffs);
        for d in 1..n {
            if n.is_multiple_of(d) {
                p = p.div_exact(&Self::cyclotomic(d)).expect("cyclotomic factor divides t^n - 1");
            }
        }
        p
    }

    /// If every root is a root of unity, the indices `n` of the cyclotomic
    /// factors (with repetition). `None` otherwise.
    pub fn cyclotomic_indices(&self) -> Option<Vec<u64>> {
        let (indices, rest) = self.split_cyclotomic();
        (rest.degree() == Some(0) && rest.coeffs[0].abs().is_one()).then_some(indices)
    }

    /// Divides out every cyclotomic factor. Returns the indices removed (with
    /// repetition) and the remaining cofactor.
    pub fn split_cyclotomic(&self) -> (Vec<u64>, IntPolynomial) {
        let mut rest = self.clone();
        let mut indices = Vec::new();
        let Some(deg) = self.degree() else {
            return (indices, rest);
        };
        // phi(n) >= sqrt(n / 2), so only n <= 2 deg^2 can contribute
        let max_n = 2 * (deg as u64).pow(2) + 2;
        for n in 1..=max_n {
            if rest.degree().unwrap_or(0) == 0 {
                break;
            }
            if euler_phi(n) as usize > rest.degree().unwrap_or(0) {
                continue;
            }
            let phi = Self::cyclotomic(n);
            while let Some(q) = rest.div_exact(&phi) {
                indices.push(n);
                rest = q;
            }
        }
        (indices, rest)
    }

    /// Factorization over the integers into linear factors and remaining cofactors.
    ///
    /// Linear factors come from the rational root test. A leftover factor of
    /// degree 2 or 3 is then irreducible; monic leftovers of degree 4 or 5 are
    /// searched for monic quadratic divisors. Anything larger is reported as a
    /// single cofactor whose irreducibility is not certified.
    pub fn factor(&self) -> Factorization {
        assert!(!self.is_zero(), "cannot factor the zero polynomial");
        let prim = self.primitive_part();
        let unit_content = self.leading().map_or(BigInt::one(), |l| {
            let c = self.content();
            if l.is_negative() { -c } else { c }
        });
        let mut rest = prim;
        let mut factors: Vec<Factor> = Vec::new();
        let push = |p: IntPolynomial, certified: bool, factors: &mut Vec<Factor>| {
            if let Some(f) = factors.iter_mut().find(|f| f.poly == p) {
                f.multiplicity += 1;
            } else {
                factors.push(Factor {
                    poly: p,
                    multiplicity: 1,
                    certified_irreducible: certified,
                });
            }
        };
        for lin in rational_root_factors(&rest) {
            while let Some(q) = rest.div_exact(&lin) {
                push(lin.clone(), true, &mut factors);
                rest = q;
            }
        }
        if rest.degree().unwrap_or(0) >= 4 && rest.degree().unwrap_or(0) <= 5 && rest.is_monic() {
            while let Some(quad) = monic_quadratic_divisor(&rest) {
                let q = rest.div_exact(&quad).expect("divisor found by search");
                push(quad, true, &mut factors);
                rest = q;
                if rest.degree().unwrap_or(0) < 4 {
                    break;
                }
            }
        }
        if rest.degree().unwrap_or(0) >= 1 {
            // without rational roots, degree <= 3 is irreducible, and a monic
            // quartic or quintic factors only through a monic quadratic
            let deg = rest.degree().unwrap();
            let certified = deg <= 3
                || (deg <= 5 && rest.is_monic() && monic_quadratic_divisor(&rest).is_none()
                    && positive_divisors(&rest.constant()).is_some());
            push(rest, certified, &mut factors);
        }
        factors.sort_by(|a, b| {
            a.poly
                .degree()
                .cmp(&b.poly.degree())
                .then_with(|| a.poly.coeffs.cmp(&b.poly.coeffs))
        });
        Factorization {
            unit: unit_content,
            factors,
        }
    }

    /// Formats with `var` as the indeterminate.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let show_coeff = !a.is_one() || i == 0;
            if show_coeff {
                s.push_str(&a.to_string());
            }
            match i {
                0 => {}
                1 => s.push_str(var),
                _ => s.push_str(&format!("{var}^{i}")),
            }
        }
        s
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("t"))
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

/// One irreducible (or uncertified) factor with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub poly: IntPolynomial,
    pub multiplicity: u32,
    pub certified_irreducible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    /// Signed content; the product of the factors times `unit` is the input.
    pub unit: BigInt,
    pub factors: Vec<Factor>,
}

impl Factorization {
    pub fn expand(&self) -> IntPolynomial {
        let mut p = IntPolynomial::new(vec![self.unit.clone()]);
        for f in &self.factors {
            for _ in 0..f.multiplicity {
                p = p.mul(&f.poly);
            }
        }
        p
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if !self.unit.is_one() || self.factors.is_empty() {
            write!(f, "{}", self.unit)?;
            first = false;
        }
        for fac in &self.factors {
            if !first {
                write!(f, " * ")?;
            }
            first = false;
            write!(f, "({})", fac.poly)?;
            if fac.multiplicity > 1 {
                write!(f, "^{}", fac.multiplicity)?;
            }
        }
        Ok(())
    }
}

/// Open rational interval `(lo, hi)` containing exactly one real root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootInterval {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// Whether this interval sits inside the closed interval `[a, b]`.
    pub fn within(&self, a: &BigRational, b: &BigRational) -> bool {
        &self.lo >= a && &self.hi <= b
    }

    pub fn midpoint_f64(&self) -> f64 {
        let m = (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2));
        rational_to_f64(&m)
    }
}

pub fn rational_to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Sturm sequence over the rationals for a square-free polynomial.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    seq: Vec<RatPoly>,
}

impl SturmSequence {
    pub fn new(p: &IntPolynomial) -> Self {
        let p0 = RatPoly::from_int(p);
        let mut seq = vec![p0.clone()];
        if p0.degree().unwrap_or(0) == 0 {
            return SturmSequence { seq };
        }
        seq.push(RatPoly::from_int(&p.derivative()));
        loop {
            let n = seq.len();
            let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(r.neg());
        }
        SturmSequence { seq }
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        variations(self.seq.iter().map(|p| p.eval(x).cmp(&BigRational::zero())))
    }

    pub fn variations_at_pos_infinity(&self) -> usize {
        variations(self.seq.iter().map(|p| p.leading_sign()))
    }
}

fn variations(signs: impl Iterator<Item = Ordering>) -> usize {
    let mut last = Ordering::Equal;
    let mut count = 0;
    for s in signs {
        if s == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// A point strictly between `a` and `b` that is not a root of `p`.
fn split_point(p: &IntPolynomial, a: &BigRational, b: &BigRational) -> BigRational {
    let w = b - a;
    for (num, den) in [(1, 2), (1, 3), (2, 3), (2, 5), (3, 5), (3, 7), (4, 7)] {
        let m = a + &w * BigRational::new(BigInt::from(num), BigInt::from(den));
        if !p.eval_rational(&m).is_zero() {
            return m;
        }
    }
    // p has finitely many roots; keep trying dyadic offsets
    let mut k = 3u32;
    loop {
        let m = a + &w * BigRational::new(BigInt::one(), BigInt::from(2).pow(k));
        if !p.eval_rational(&m).is_zero() {
            return m;
        }
        k += 1;
    }
}

/// Bisects an interval holding one simple root until it is narrow enough.
fn refine(p: &IntPolynomial, mut a: BigRational, mut b: BigRational, width: &BigRational) -> RootInterval {
    let mut sa = p.eval_rational(&a).cmp(&BigRational::zero());
    while &(&b - &a) > width {
        let m = split_point(p, &a, &b);
        let sm = p.eval_rational(&m).cmp(&BigRational::zero());
        if sa == Ordering::Equal || sm == sa {
            a = m;
            sa = sm;
        } else {
            b = m;
        }
    }
    RootInterval { lo: a, hi: b }
}

fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

const DIVISOR_SEARCH_LIMIT: u64 = 1_000_000_000_000;

/// Positive divisors of `n`, or `None` when `n` is too large to trial-divide.
fn positive_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64().filter(|&v| v <= DIVISOR_SEARCH_LIMIT)?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let r = n.sqrt();
    for d in 1..=r {
        if n % d == 0 {
            small.push(BigInt::from(d));
            if d != n / d {
                large.push(BigInt::from(n / d));
            }
        }
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

/// Primitive linear factors `q t - p` of a primitive polynomial.
fn rational_root_factors(poly: &IntPolynomial) -> Vec<IntPolynomial> {
    let mut out = Vec::new();
    let Some(deg) = poly.degree() else { return out };
    if deg == 0 {
        return out;
    }
    let mut p = poly.clone();
    if p.constant().is_zero() {
        out.push(IntPolynomial::from_i64(&[0, 1]));
        while p.constant().is_zero() {
            p = IntPolynomial::new(p.coeffs[1..].to_vec());
        }
    }
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let (nums, dens) = match (positive_divisors(&p.constant()), positive_divisors(p.leading().unwrap())) {
        (Some(n), Some(d)) => (n, d),
        _ => (vec![BigInt::one()], vec![BigInt::one()]),
    };
    let mut seen = Vec::new();
    for q in &dens {
        for a in &nums {
            for num in [a.clone(), -a.clone()] {
                if num.gcd(q) != BigInt::one() {
                    continue;
                }
                let r = BigRational::new(num.clone(), q.clone());
                if seen.contains(&r) {
                    continue;
                }
                seen.push(r.clone());
                if p.eval_rational(&r).is_zero() {
                    out.push(IntPolynomial::new(vec![-num.clone(), q.clone()]));
                }
            }
        }
    }
    out
}

/// Searches for a monic quadratic `t^2 + b t + c` dividing a monic polynomial.
fn monic_quadratic_divisor(p: &IntPolynomial) -> Option<IntPolynomial> {
    let cs = positive_divisors(&p.constant())?;
    let bound = p.cauchy_bound().ceil().to_integer().to_i64().filter(|&b| b <= 50_000)?;
    for c in cs.iter().flat_map(|c| [c.clone(), -c.clone()]) {
        for b in -2 * bound..=2 * bound {
            let quad = IntPolynomial::new(vec![c.clone(), BigInt::from(b), BigInt::one()]);
            if p.divides_by_monic(&quad) {
                return Some(quad);
            }
        }
    }
    None
}

impl IntPolynomial {
    fn divides_by_monic(&self, monic: &IntPolynomial) -> bool {
        let d = monic.degree().expect("nonzero divisor");
        let mut r = self.coeffs.clone();
        if r.len() <= d {
            return r.iter().all(Zero::is_zero);
        }
        for i in (d..r.len()).rev() {
            let lead = r[i].clone();
            if lead.is_zero() {
                continue;
            }
            for (j, c) in monic.coeffs.iter().enumerate() {
                r[i - d + j] -= &lead * c;
            }
        }
        r[..d].iter().all(Zero::is_zero)
    }
}

/// Polynomial over the rationals; internal helper for gcds and Sturm chains.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub(crate) fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub(crate) fn from_int(p: &IntPolynomial) -> Self {
        RatPoly {
            coeffs: p
                .coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn neg(&self) -> Self {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    fn leading_sign(&self) -> Ordering {
        self.coeffs
            .last()
            .map_or(Ordering::Equal, |c| c.cmp(&BigRational::zero()))
    }

    pub(crate) fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.coeffs[dd].clone();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (RatPoly::new(Vec::new()), RatPoly::new(r));
        }
        let mut q = vec![BigRational::zero(); r.len() - dd];
        for i in (dd..r.len()).rev() {
            let c = &r[i] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = &c * dc;
                r[i - dd + j] -= t;
            }
            q[i - dd] = c;
        }
        r.truncate(dd);
        (RatPoly::new(q), RatPoly::new(r))
    }

    fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a
    }

    fn to_int(&self) -> Option<IntPolynomial> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPolynomial::new)
    }

    fn to_primitive_int(&self) -> IntPolynomial {
        IntPolynomial::new(crate::matrix::primitive_from_rational(&self.coeffs)).primitive_part()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(IntPolynomial::cyclotomic(1), IntPolynomial::from_i64(&[-1, 1]));
        assert_eq!(IntPolynomial::cyclotomic(2), IntPolynomial::from_i64(&[1, 1]));
        assert_eq!(IntPolynomial::cyclotomic(4), IntPolynomial::from_i64(&[1, 0, 1]));
        assert_eq!(IntPolynomial::cyclotomic(6), IntPolynomial::from_i64(&[1, -1, 1]));
        assert_eq!(IntPolynomial::cyclotomic(12), IntPolynomial::from_i64(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn cyclotomic_screen() {
        // (t - 1)^3
        let p = IntPolynomial::from_i64(&[-1, 3, -3, 1]);
        assert_eq!(p.cyclotomic_indices(), Some(vec![1, 1, 1]));
        // (t + 1)(t^2 + t + 1)
        let p = IntPolynomial::from_i64(&[1, 1]).mul(&IntPolynomial::from_i64(&[1, 1, 1]));
        assert_eq!(p.cyclotomic_indices(), Some(vec![2, 3]));
        let salem = IntPolynomial::from_i64(&[-1, 1]).mul(&IntPolynomial::from_i64(&[1, -359, 1]));
        assert_eq!(salem.cyclotomic_indices(), None);
    }

    #[test]
    fn sturm_counts_roots_of_known_quadratic() {
        // t^2 - 359 t + 1: roots ~ 0.0027855 and ~ 358.99721
        let f = IntPolynomial::from_i64(&[1, -359, 1]);
        assert_eq!(f.count_real_roots(&rat(1, 1), None), 1);
        assert_eq!(f.count_real_roots(&rat(0, 1), None), 2);
        assert_eq!(f.count_real_roots(&rat(358, 1), Some(&rat(359, 1))), 1);
        assert_eq!(f.count_real_roots(&rat(-100, 1), Some(&rat(0, 1))), 0);
    }

    #[test]
    fn isolation_width_and_location() {
        let f = IntPolynomial::from_i64(&[-1, 1]).mul(&IntPolynomial::from_i64(&[1, -359, 1]));
        let w = rat(1, 1_000_000);
        let roots = f.isolate_roots_above(&rat(1, 1), &w);
        assert_eq!(roots.len(), 1);
        let r = &roots[0];
        assert!(r.width() <= w);
        assert!(r.within(&rat(358, 1), &rat(359, 1)));
        assert!(f.eval_rational(&r.lo).is_negative() != f.eval_rational(&r.hi).is_negative());
    }

    #[test]
    fn isolation_handles_rational_roots() {
        // (2t - 3)(t - 5)(t + 7)
        let f = IntPolynomial::from_i64(&[-3, 2])
            .mul(&IntPolynomial::from_i64(&[-5, 1]))
            .mul(&IntPolynomial::from_i64(&[7, 1]));
        let roots = f.isolate_roots_above(&rat(1, 1), &rat(1, 1000));
        assert_eq!(roots.len(), 2);
        assert!(roots[0].lo < rat(3, 2) && rat(3, 2) < roots[0].hi);
        assert!(roots[1].lo < rat(5, 1) && rat(5, 1) < roots[1].hi);
    }

    #[test]
    fn factor_salem_times_linear() {
        let f = IntPolynomial::from_i64(&[-1, 1]).mul(&IntPolynomial::from_i64(&[1, -359, 1]));
        let fac = f.factor();
        assert_eq!(fac.factors.len(), 2);
        assert!(fac.factors.iter().all(|f| f.certified_irreducible));
        assert_eq!(fac.expand(), f);
        assert_eq!(fac.to_string(), "(t - 1) * (t^2 - 359t + 1)");
    }

    #[test]
    fn factor_with_multiplicity_and_quadratics() {
        let f = IntPolynomial::from_i64(&[-1, 1])
            .mul(&IntPolynomial::from_i64(&[-1, 1]))
            .mul(&IntPolynomial::from_i64(&[1, -7, 1]))
            .mul(&IntPolynomial::from_i64(&[1, -3, 1]));
        let fac = f.factor();
        assert_eq!(fac.expand(), f);
        assert_eq!(fac.factors[0].multiplicity, 2);
        assert_eq!(fac.factors.len(), 3);
        let g = IntPolynomial::from_i64(&[6, 4]).mul(&IntPolynomial::from_i64(&[1, 0, 1]));
        let fac = g.factor();
        assert_eq!(fac.unit, BigInt::from(2));
        assert_eq!(fac.expand(), g);
    }

    #[test]
    fn square_free_part_drops_repeats() {
        let f = IntPolynomial::from_i64(&[-1, 3, -3, 1]);
        assert_eq!(f.square_free_part(), IntPolynomial::from_i64(&[-1, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(IntPolynomial::from_i64(&[-1, 360, -360, 1]).to_string(), "t^3 - 360t^2 + 360t - 1");
        assert_eq!(IntPolynomial::from_i64(&[0, -1]).to_string(), "-t");
    }
}
