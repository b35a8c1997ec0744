use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Largest modulus accepted for prime fields (exclusive).
pub const MAX_MODULUS: u64 = 1 << 31;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("modulus {0} is too large (must be below 2^31)")]
    ModulusTooLarge(u64),
    #[error("cannot parse field {0:?} (expected \"Q\" or \"GF(p)\")")]
    BadFieldName(String),
    #[error("cannot parse scalar {0:?}")]
    BadScalar(String),
    #[error("division by zero")]
    DivisionByZero,
}

/// A prime below 2^31, checked at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeModulus(u32);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p >= MAX_MODULUS {
            return Err(FieldError::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(PrimeModulus(p as u32))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    fn reduce_i64(self, v: i64) -> u32 {
        v.rem_euclid(self.0 as i64) as u32
    }

    fn reduce_bigint(self, v: &BigInt) -> u32 {
        let p = BigInt::from(self.0);
        let r = v.mod_floor(&p);
        r.try_into().expect("residue fits in u32")
    }

    fn inverse(self, v: u32) -> Option<u32> {
        if v == 0 {
            return None;
        }
        // Extended Euclid on (v, p).
        let (mut r0, mut r1) = (self.0 as i64, v as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Some(self.reduce_i64(t0))
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The ground field of a computation: the rationals or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(PrimeModulus),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        PrimeModulus::new(p).map(FieldSpec::Prime)
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => p.get() as u64,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::Prime(p) => Scalar::Residue {
                value: p.reduce_i64(v),
                modulus: p,
            },
        }
    }

    /// Maps an exact rational into this field. Fails if the denominator
    /// vanishes modulo p.
    pub fn from_rational(self, v: &BigRational) -> Result<Scalar, FieldError> {
        match self {
            FieldSpec::Rationals => Ok(Scalar::Rational(v.clone())),
            FieldSpec::Prime(p) => {
                let num = p.reduce_bigint(v.numer());
                let den = p.reduce_bigint(v.denom());
                let inv = p.inverse(den).ok_or(FieldError::DivisionByZero)?;
                Ok(Scalar::Residue {
                    value: ((num as u64 * inv as u64) % p.get() as u64) as u32,
                    modulus: p,
                })
            }
        }
    }

    /// Parses `"3"`, `"-1/2"` (rationals) or a plain integer (residues).
    pub fn parse_scalar(self, s: &str) -> Result<Scalar, FieldError> {
        let bad = || FieldError::BadScalar(s.to_string());
        let t = s.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (
                BigInt::from_str(n.trim()).map_err(|_| bad())?,
                BigInt::from_str(d.trim()).map_err(|_| bad())?,
            ),
            None => (BigInt::from_str(t).map_err(|_| bad())?, BigInt::one()),
        };
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        self.from_rational(&BigRational::new(num, den))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "GF({})", p.get()),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rationals);
        }
        let upper = t.to_ascii_uppercase();
        let inner = upper
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| FieldError::BadFieldName(s.to_string()))?;
        let p: u64 = inner
            .trim()
            .parse()
            .map_err(|_| FieldError::BadFieldName(s.to_string()))?;
        FieldSpec::prime(p)
    }
}

/// An exact field element.
///
/// Rationals are kept in lowest terms with a positive denominator (guaranteed
/// by `BigRational`); residues live in `[0, p)`. Mixing elements of different
/// fields in one operation is a programming error and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u32, modulus: PrimeModulus },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Residue { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(r) if r.is_zero() => None,
            Scalar::Rational(r) => Some(Scalar::Rational(r.recip())),
            Scalar::Residue { value, modulus } => modulus.inverse(*value).map(|v| Scalar::Residue {
                value: v,
                modulus: *modulus,
            }),
        }
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, FieldError> {
        let inv = rhs.inv().ok_or(FieldError::DivisionByZero)?;
        Ok(self * &inv)
    }

    /// JSON encoding: rationals as `"num/den"` strings, residues as integers.
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Scalar::Rational(r) => serde_json::Value::String(format!("{}/{}", r.numer(), r.denom())),
            Scalar::Residue { value, .. } => serde_json::Value::from(*value),
        }
    }

    /// The residue as a signed representative in `(-p/2, p/2]`, or the
    /// rational itself. Used for compact text output.
    pub fn to_signed_string(&self) -> String {
        match self {
            Scalar::Rational(_) => self.to_string(),
            Scalar::Residue { value, modulus } => {
                let p = modulus.get() as i64;
                let v = *value as i64;
                if v > p / 2 {
                    (v - p).to_string()
                } else {
                    v.to_string()
                }
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Scalar::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("field mismatch: {} vs {}", a.field(), b.field())
}

impl Add for &Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) if p == q => {
                Scalar::Residue {
                    value: ((*a as u64 + *b as u64) % p.get() as u64) as u32,
                    modulus: *p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) if p == q => {
                let m = p.get() as u64;
                Scalar::Residue {
                    value: ((*a as u64 + m - *b as u64) % m) as u32,
                    modulus: *p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) if p == q => {
                Scalar::Residue {
                    value: ((*a as u64 * *b as u64) % p.get() as u64) as u32,
                    modulus: *p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: if *value == 0 { 0 } else { modulus.get() - value },
                modulus: *modulus,
            },
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
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
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Scalar {
    /// True for negative rationals. Residues are never negative.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_negative(),
            Scalar::Residue { .. } => false,
        }
    }
}
