//! Exact ground-field scalars: arbitrary-precision rationals or `Z/p`.

use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Largest modulus accepted for a prime field.
pub const MAX_PRIME: u64 = 1 << 31;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("{0} is not a prime at most 2^31")]
    NotPrime(u64),
    #[error("denominator vanishes in the field")]
    ZeroDenominator,
}

/// The ground field of an algebra.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Field {
    #[default]
    Rational,
    Prime(u32),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field, ScalarError> {
        if !(2..=MAX_PRIME).contains(&p) || !is_prime(p) {
            return Err(ScalarError::NotPrime(p));
        }
        Ok(Field::Prime(p as u32))
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Mod { value: n.rem_euclid(p as i64) as u32, modulus: p },
        }
    }

    /// The image of `num / den` in this field.
    pub fn from_ratio(self, num: &BigInt, den: &BigInt) -> Result<Scalar, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::ZeroDenominator);
        }
        match self {
            Field::Rational => Ok(Scalar::Rat(BigRational::new(num.clone(), den.clone()))),
            Field::Prime(p) => {
                let m = BigInt::from(p);
                let reduce = |x: &BigInt| x.mod_floor(&m).to_u32().expect("reduced below modulus");
                let n = Scalar::Mod { value: reduce(num), modulus: p };
                let d = Scalar::Mod { value: reduce(den), modulus: p };
                let inv = d.inv().ok_or(ScalarError::ZeroDenominator)?;
                Ok(n * inv)
            }
        }
    }

    pub fn of(s: &Scalar) -> Field {
        match s {
            Scalar::Rat(_) => Field::Rational,
            Scalar::Mod { modulus, .. } => Field::Prime(*modulus),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => f.write_str("rat"),
            Field::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 4 {
        return n >= 2;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of a [`Field`]. Mixing scalars of different fields panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Mod { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    /// True for rationals below zero. Prime-field scalars are never negative.
    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_negative())
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rat(r) => Scalar::Rat(r.recip()),
            Scalar::Mod { value, modulus } => {
                let p = *modulus as u64;
                Scalar::Mod { value: pow_mod(*value as u64, p - 2, p) as u32, modulus: *modulus }
            }
        })
    }

    pub fn field(&self) -> Field {
        Field::of(self)
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

fn same_modulus(a: u32, b: u32) -> u32 {
    assert_eq!(a, b, "scalars from different prime fields");
    a
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) => {
                let p = same_modulus(*p, *q);
                Scalar::Mod { value: ((*a as u64 + *b as u64) % p as u64) as u32, modulus: p }
            }
            _ => panic!("scalars from different fields"),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) => {
                let p = same_modulus(*p, *q);
                Scalar::Mod { value: ((*a as u64 * *b as u64) % p as u64) as u32, modulus: p }
            }
            _ => panic!("scalars from different fields"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod { value, modulus } => {
                Scalar::Mod { value: if *value == 0 { 0 } else { modulus - value }, modulus: *modulus }
            }
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => *a += b,
            _ => *self = &*self + rhs,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}
