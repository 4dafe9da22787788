//! Exact arithmetic in the cyclotomic field Q(ζ_n).
//!
//! Elements are stored in the power basis 1, ζ, …, ζ^{φ(n)-1} with reduced
//! rational coefficients, so two scalars are equal iff their coefficient
//! vectors are equal.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{HopfError, Result};

#[derive(Debug)]
struct FieldData {
    order: u32,
    /// Coefficients of Φ_n, lowest degree first; monic.
    modulus: Vec<BigInt>,
}

/// The field Q(ζ_n) for a declared order `n` (`n = 1` gives Q).
#[derive(Clone, Debug)]
pub struct FieldSpec(Arc<FieldData>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.order == other.0.order
    }
}

impl Eq for FieldSpec {}

impl FieldSpec {
    pub fn new(order: i64) -> Result<Self> {
        if order < 1 || order > u32::MAX as i64 {
            return Err(HopfError::InvalidOrder(order));
        }
        let order = order as u32;
        Ok(FieldSpec(Arc::new(FieldData {
            order,
            modulus: cyclotomic_polynomial(order),
        })))
    }

    pub fn rationals() -> Self {
        Self::new(1).expect("order 1 is valid")
    }

    pub fn order(&self) -> u32 {
        self.0.order
    }

    /// φ(n), the degree of Q(ζ_n) over Q.
    pub fn degree(&self) -> usize {
        self.0.modulus.len() - 1
    }

    /// Coefficients of Φ_n, lowest degree first.
    pub fn modulus(&self) -> &[BigInt] {
        &self.0.modulus
    }

    pub fn zero(&self) -> Scalar {
        Scalar {
            field: self.clone(),
            coeffs: vec![BigRational::zero(); self.degree()],
        }
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn int(&self, value: i64) -> Scalar {
        self.rational(BigRational::from_integer(BigInt::from(value)))
    }

    pub fn frac(&self, num: i64, den: i64) -> Scalar {
        self.rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn rational(&self, value: BigRational) -> Scalar {
        let mut s = self.zero();
        s.coeffs[0] = value;
        s
    }

    /// ζ^k for the fixed primitive n-th root of unity ζ.
    pub fn zeta_pow(&self, k: u64) -> Scalar {
        let n = self.order() as u64;
        let mut poly = vec![BigRational::zero(); (k % n) as usize + 1];
        poly[(k % n) as usize] = BigRational::one();
        Scalar::from_poly(self, poly)
    }

    /// Builds a scalar from an arbitrary-degree polynomial in ζ.
    pub fn from_poly(&self, poly: Vec<BigRational>) -> Scalar {
        Scalar::from_poly(self, poly)
    }

    pub(crate) fn check_same(&self, other: &FieldSpec) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(HopfError::FieldMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Multiplicative inverse; fails on zero.
pub fn invert_scalar(s: &Scalar) -> Result<Scalar> {
    s.inv()
}

/// Φ_n, computed as (x^n − 1) / ∏_{d | n, d < n} Φ_d.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    let mut poly = vec![BigInt::zero(); n as usize + 1];
    poly[0] = BigInt::from(-1);
    poly[n as usize] = BigInt::one();
    for d in divisors(n) {
        if d < n {
            poly = exact_div_monic(&poly, &cyclotomic_polynomial(d));
        }
    }
    poly
}

/// Divides `num` by the monic polynomial `den`, asserting zero remainder.
fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![BigInt::zero(); qlen];
    for t in (0..qlen).rev() {
        let c = rem[t + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (s, ds) in den.iter().enumerate() {
            rem[t + s] -= &c * ds;
        }
        quot[t] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// An exact element of Q(ζ_n).
#[derive(Clone, Debug)]
pub struct Scalar {
    field: FieldSpec,
    coeffs: Vec<BigRational>,
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}

impl Eq for Scalar {}

impl Scalar {
    fn from_poly(field: &FieldSpec, mut poly: Vec<BigRational>) -> Scalar {
        let modulus = field.modulus();
        let deg = field.degree();
        if poly.len() > deg {
            for t in (deg..poly.len()).rev() {
                let c = std::mem::take(&mut poly[t]);
                if c.is_zero() {
                    continue;
                }
                // x^t = x^{t-deg} * x^deg and x^deg = -Σ_{s<deg} m_s x^s
                for (s, ms) in modulus.iter().enumerate().take(deg) {
                    if !ms.is_zero() {
                        poly[t - deg + s] -= &c * BigRational::from_integer(ms.clone());
                    }
                }
            }
            poly.truncate(deg);
        }
        poly.resize(deg, BigRational::zero());
        Scalar {
            field: field.clone(),
            coeffs: poly,
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// Power-basis coefficients (length φ(n)).
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the scalar lies in Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(HopfError::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(self.field.rational(r.recip()));
        }
        // Extended Euclid in Q[x]: find u with u·s ≡ 1 (mod Φ_n).
        let modulus: Vec<BigRational> = self
            .field
            .modulus()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let (g, u) = ext_gcd(trimmed(self.coeffs.clone()), modulus);
        // Φ_n is irreducible, so g is a nonzero constant.
        debug_assert_eq!(g.len(), 1);
        let ginv = g[0].recip();
        let u = u.into_iter().map(|c| c * &ginv).collect();
        Ok(Scalar::from_poly(&self.field, u))
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    fn assert_same(&self, other: &Scalar) {
        assert!(
            self.field == other.field,
            "scalar field mismatch: Q(zeta_{}) vs Q(zeta_{})",
            self.field.order(),
            other.field.order()
        );
    }

    pub(crate) fn mul_ref(&self, rhs: &Scalar) -> Scalar {
        self.assert_same(rhs);
        if self.coeffs.len() == 1 {
            return Scalar {
                field: self.field.clone(),
                coeffs: vec![&self.coeffs[0] * &rhs.coeffs[0]],
            };
        }
        if self.is_zero() || rhs.is_zero() {
            return self.field.zero();
        }
        let n = self.coeffs.len();
        let mut prod = vec![BigRational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Scalar::from_poly(&self.field, prod)
    }
}

fn trimmed(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let b = trimmed(b.to_vec());
    let mut rem = trimmed(a.to_vec());
    if rem.len() < b.len() {
        return (vec![BigRational::zero()], rem);
    }
    let lead_inv = b.last().unwrap().recip();
    let mut quot = vec![BigRational::zero(); rem.len() - b.len() + 1];
    for t in (0..quot.len()).rev() {
        let c = &rem[t + b.len() - 1] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (s, bs) in b.iter().enumerate() {
            rem[t + s] -= &c * bs;
        }
        quot[t] = c;
    }
    (quot, trimmed(rem))
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trimmed(out)
}

fn is_zero_poly(p: &[BigRational]) -> bool {
    p.iter().all(Zero::is_zero)
}

/// Returns (g, u) with g = gcd(a, m) and u·a ≡ g (mod m).
fn ext_gcd(a: Vec<BigRational>, m: Vec<BigRational>) -> (Vec<BigRational>, Vec<BigRational>) {
    let (mut r0, mut r1) = (a, m);
    let (mut s0, mut s1) = (vec![BigRational::one()], vec![BigRational::zero()]);
    while !is_zero_poly(&r1) {
        let (q, r) = poly_divrem(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    (trimmed(r0), s0)
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.assert_same(rhs);
        Scalar {
            field: self.field.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.assert_same(rhs);
        Scalar {
            field: self.field.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.mul_ref(rhs)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.assert_same(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.assert_same(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

impl fmt::Display for Scalar {
    /// Canonical literal: terms by increasing power of z, no spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = if first { c.clone() } else { c.abs() };
            if !first {
                f.write_str(if c.is_negative() { "-" } else { "+" })?;
            }
            first = false;
            let zpow = match k {
                0 => None,
                1 => Some("z".to_string()),
                _ => Some(format!("z^{k}")),
            };
            match zpow {
                None => write!(f, "{magnitude}")?,
                Some(z) if magnitude.is_one() => f.write_str(&z)?,
                Some(z) if (-&magnitude).is_one() => write!(f, "-{z}")?,
                Some(z) => write!(f, "{magnitude}*{z}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
