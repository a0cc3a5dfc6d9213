//! Exact coefficient fields.
//!
//! Every computation in this crate is carried out over an exact field: the
//! rationals (arbitrary precision) or a prime field `GF(p)`. A [`Field`] value
//! is the context that knows how to produce constants; its elements
//! ([`Scalar`]) carry enough information to do arithmetic on their own.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::AnickError;

/// An element of an exact field.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn is_zero(&self) -> bool;

    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;

    fn is_one(&self) -> bool;
}

/// A coefficient field: a factory for constants of its element type.
pub trait Field: Clone + Debug + Send + Sync + 'static {
    type Elem: Scalar;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;

    /// Short human-readable name, e.g. `Q` or `GF(101)`.
    fn name(&self) -> String;

    /// Characteristic of the field (0 for the rationals).
    fn characteristic(&self) -> u64;
}

/// Arbitrary-precision rational number.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Self {
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }
}

impl Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational(self.0 + rhs.0)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        Rational(self.0 - rhs.0)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational(self.0 * rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Scalar for Rational {
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn inverse(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }
}

/// The field of rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational(BigRational::zero())
    }

    fn one(&self) -> Rational {
        Rational(BigRational::one())
    }

    fn from_i64(&self, n: i64) -> Rational {
        Rational::integer(n)
    }

    fn name(&self) -> String {
        "Q".to_string()
    }

    fn characteristic(&self) -> u64 {
        0
    }
}

/// Element of `GF(p)`; carries its modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn check(&self, other: &Fp) {
        assert_eq!(
            self.modulus, other.modulus,
            "mixing elements of GF({}) and GF({})",
            self.modulus, other.modulus
        );
    }

    fn pow(self, mut exp: u64) -> Fp {
        let p = u128::from(self.modulus);
        let mut base = u128::from(self.value);
        let mut acc: u128 = 1 % p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        Fp {
            value: acc as u64,
            modulus: self.modulus,
        }
    }
}

impl Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        let s = (u128::from(self.value) + u128::from(rhs.value)) % u128::from(self.modulus);
        Fp {
            value: s as u64,
            modulus: self.modulus,
        }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self + (-rhs)
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        let s = u128::from(self.value) * u128::from(rhs.value) % u128::from(self.modulus);
        Fp {
            value: s as u64,
            modulus: self.modulus,
        }
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        let value = if self.value == 0 {
            0
        } else {
            self.modulus - self.value
        };
        Fp {
            value,
            modulus: self.modulus,
        }
    }
}

impl Scalar for Fp {
    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn inverse(&self) -> Option<Self> {
        if self.value == 0 {
            None
        } else {
            // Fermat: a^(p-2) = a^-1 for prime p.
            Some(self.pow(self.modulus - 2))
        }
    }

    fn is_one(&self) -> bool {
        self.value == 1
    }
}

/// The prime field `GF(p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Fails with [`AnickError::NotPrime`] unless `p` is prime.
    pub fn new(p: u64) -> Result<Self, AnickError> {
        if is_prime(p) {
            Ok(PrimeField { p })
        } else {
            Err(AnickError::NotPrime(p))
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl Field for PrimeField {
    type Elem = Fp;

    fn zero(&self) -> Fp {
        Fp {
            value: 0,
            modulus: self.p,
        }
    }

    fn one(&self) -> Fp {
        Fp {
            value: 1,
            modulus: self.p,
        }
    }

    fn from_i64(&self, n: i64) -> Fp {
        let p = i128::from(self.p);
        let v = i128::from(n).rem_euclid(p);
        Fp {
            value: v as u64,
            modulus: self.p,
        }
    }

    fn name(&self) -> String {
        format!("GF({})", self.p)
    }

    fn characteristic(&self) -> u64 {
        self.p
    }
}

/// Trial-division primality test; the moduli used here are small.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Converts a rational into `GF(p)`; `None` if the denominator vanishes mod p.
pub fn rational_to_fp(q: &Rational, field: &PrimeField) -> Option<Fp> {
    let p = BigInt::from(field.modulus());
    let reduce = |x: &BigInt| -> u64 {
        let r = ((x % &p) + &p) % &p;
        r.abs().try_into().unwrap_or(0)
    };
    let num = field.from_i64(reduce(q.0.numer()) as i64);
    let den = field.from_i64(reduce(q.0.denom()) as i64);
    den.inverse().map(|inv| num * inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_is_exact() {
        let q = Rationals;
        let third = Rational::new(1, 3);
        let sum = third.clone() + third.clone() + third;
        assert_eq!(sum, q.one());
        assert_eq!(Rational::new(2, 4).to_string(), "1/2");
        assert_eq!(q.from_i64(-3).to_string(), "-3");
    }

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField::new(101).unwrap();
        for n in 1..101 {
            let a = f.from_i64(n);
            assert!((a * a.inverse().unwrap()).is_one());
        }
        assert!(f.zero().inverse().is_none());
        assert_eq!(f.from_i64(-1).value(), 100);
    }

    #[test]
    fn gf2_characteristic() {
        let f = PrimeField::new(2).unwrap();
        assert!((f.one() + f.one()).is_zero());
        assert_eq!(-f.one(), f.one());
    }

    #[test]
    fn non_primes_rejected() {
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(91).is_err());
        assert!(PrimeField::new(2).is_ok());
    }

    #[test]
    fn rational_reduction_mod_p() {
        let f = PrimeField::new(7).unwrap();
        let half = rational_to_fp(&Rational::new(1, 2), &f).unwrap();
        assert_eq!(half.value(), 4);
        assert!(rational_to_fp(&Rational::new(1, 7), &f).is_none());
    }
}
