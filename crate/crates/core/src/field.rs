//! Coefficient fields.
//!
//! Two fields are supported: the rationals (certified mode) and a prime field
//! `F_p` for odd primes below 2^31 (fast, advisory mode). Both implement
//! [`Field`], which is deliberately small: the Gröbner engine only needs ring
//! operations, inversion, and a way to strip common content.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default modulus for the fast mode.
pub const DEFAULT_PRIME: u32 = 32003;

/// Which coefficient field a ring works over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldMode {
    Rationals,
    PrimeField(u32),
}

impl FieldMode {
    pub fn prime(p: u32) -> Result<Self> {
        if p <= 2 || !is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not an odd prime")));
        }
        if p >= 1 << 31 {
            return Err(Error::InvalidRing(format!("prime {p} exceeds 2^31")));
        }
        Ok(FieldMode::PrimeField(p))
    }

    /// Only rational results are certified; prime-field results are advisory.
    pub fn is_certified(&self) -> bool {
        matches!(self, FieldMode::Rationals)
    }
}

impl Display for FieldMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldMode::Rationals => write!(f, "q"),
            FieldMode::PrimeField(p) => write!(f, "fp:{p}"),
        }
    }
}

/// `q`, `fp` (default prime) or `fp:<p>`.
impl std::str::FromStr for FieldMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "q" => Ok(FieldMode::Rationals),
            "fp" => FieldMode::prime(DEFAULT_PRIME),
            _ => {
                let p = s
                    .strip_prefix("fp:")
                    .and_then(|p| p.parse::<u32>().ok())
                    .ok_or_else(|| {
                        Error::InvalidArgument(format!("field must be q, fp or fp:<prime>, got {s:?}"))
                    })?;
                FieldMode::prime(p)
            }
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p as u64 {
        if (p as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub trait Field: Clone + PartialEq + Eq + Hash + Debug + Display + Send + Sync + 'static {
    fn from_bigint(v: &BigInt, mode: FieldMode) -> Result<Self>;

    fn from_i64(v: i64, mode: FieldMode) -> Result<Self> {
        Self::from_bigint(&BigInt::from(v), mode)
    }

    fn mode(&self) -> FieldMode;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }

    /// A scalar `c` such that every coefficient divided by `c` is "small"
    /// (coprime integers over Q). `None` when no rescaling is useful.
    fn content<'a, I>(coeffs: I) -> Option<Self>
    where
        I: Iterator<Item = &'a Self>,
        Self: 'a;

    /// Multipliers `(s, t)` with `s * a` and `t * b` both multiples of a
    /// common value, used to cancel `b` against `a` without division:
    /// `s * b == t * a`. Over Q these are coprime integers.
    fn cancel_factors(a: &Self, b: &Self) -> (Self, Self) {
        (a.clone(), b.clone())
    }

    /// Textual form used in reports: `p/q` for rationals.
    fn to_exact_string(&self) -> String {
        self.to_string()
    }
}

impl Field for BigRational {
    fn from_bigint(v: &BigInt, mode: FieldMode) -> Result<Self> {
        match mode {
            FieldMode::Rationals => Ok(BigRational::from_integer(v.clone())),
            other => Err(Error::InvalidRing(format!(
                "rational coefficient requested in field {other}"
            ))),
        }
    }

    fn mode(&self) -> FieldMode {
        FieldMode::Rationals
    }

    fn zero_like(&self) -> Self {
        BigRational::zero()
    }

    fn one_like(&self) -> Self {
        BigRational::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_one(&self) -> bool {
        One::is_one(self)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    fn content<'a, I>(coeffs: I) -> Option<Self>
    where
        I: Iterator<Item = &'a Self>,
    {
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        let mut any = false;
        for c in coeffs {
            any = true;
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        if !any || num_gcd.is_zero() {
            return None;
        }
        if num_gcd.is_one() && den_lcm.is_one() {
            return None;
        }
        Some(BigRational::new(num_gcd.abs(), den_lcm))
    }

    fn cancel_factors(a: &Self, b: &Self) -> (Self, Self) {
        // b / a = t / s in lowest terms
        let q = b / a;
        (
            BigRational::from_integer(q.denom().clone()),
            BigRational::from_integer(q.numer().clone()),
        )
    }

    fn to_exact_string(&self) -> String {
        if self.denom().is_one() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }
}

/// An element of `F_p`, carrying its modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u32,
    modulus: u32,
}

impl Fp {
    pub fn new(value: i64, modulus: u32) -> Self {
        let m = modulus as i64;
        Fp {
            value: value.rem_euclid(m) as u32,
            modulus,
        }
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    fn pow(&self, mut e: u64) -> Self {
        let p = self.modulus as u64;
        let mut base = self.value as u64;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        Fp {
            value: acc as u32,
            modulus: self.modulus,
        }
    }
}

impl Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Field for Fp {
    fn from_bigint(v: &BigInt, mode: FieldMode) -> Result<Self> {
        match mode {
            FieldMode::PrimeField(p) => {
                let r = v.mod_floor(&BigInt::from(p));
                Ok(Fp::new(r.to_i64().unwrap_or(0), p))
            }
            FieldMode::Rationals => Err(Error::InvalidRing(
                "prime-field coefficient requested over Q".into(),
            )),
        }
    }

    fn mode(&self) -> FieldMode {
        FieldMode::PrimeField(self.modulus)
    }

    fn zero_like(&self) -> Self {
        Fp::new(0, self.modulus)
    }

    fn one_like(&self) -> Self {
        Fp::new(1, self.modulus)
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn is_one(&self) -> bool {
        self.value == 1
    }

    fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let s = self.value as u64 + other.value as u64;
        Fp {
            value: (s % self.modulus as u64) as u32,
            modulus: self.modulus,
        }
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        Fp {
            value: (self.value as u64 * other.value as u64 % self.modulus as u64) as u32,
            modulus: self.modulus,
        }
    }

    fn neg(&self) -> Self {
        if self.value == 0 {
            *self
        } else {
            Fp {
                value: self.modulus - self.value,
                modulus: self.modulus,
            }
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            None
        } else {
            Some(self.pow(self.modulus as u64 - 2))
        }
    }

    fn content<'a, I>(_coeffs: I) -> Option<Self>
    where
        I: Iterator<Item = &'a Self>,
    {
        None
    }

    fn cancel_factors(a: &Self, b: &Self) -> (Self, Self) {
        (a.one_like(), b.div(a).expect("nonzero"))
    }
}

/// Rational coefficient from a pair of machine integers (tests, fixtures).
pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
