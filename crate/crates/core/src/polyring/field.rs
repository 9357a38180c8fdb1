//! Coefficient fields: exact rationals and small prime fields.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Arithmetic needed by the polynomial and linear-algebra code.
///
/// Elements of a prime field carry their modulus, so constants are always
/// produced from an existing element (`zero_like`, `one_like`).
pub trait Field: Clone + PartialEq + Eq + Hash + Debug + Display + Send + Sync + 'static {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Multiplicative inverse. Panics on zero.
    fn inverse(&self) -> Self;
    /// Image of an integer in the field of `self`.
    fn from_int_like(&self, n: i64) -> Self;
    /// Image of a rational in the field of `self`, if defined.
    fn from_rational_like(&self, r: &Rational) -> Result<Self>;
    /// Characteristic (0 for the rationals).
    fn characteristic(&self) -> u32;
}

impl Field for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverse of zero");
        self.recip()
    }
    fn from_int_like(&self, n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
    fn from_rational_like(&self, r: &Rational) -> Result<Self> {
        Ok(r.clone())
    }
    fn characteristic(&self) -> u32 {
        0
    }
}

/// Element of GF(p) for a prime p < 2^31.
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

    /// Zero of GF(p), after checking that `p` is a usable prime.
    pub fn field(p: u32) -> Result<Self> {
        if !(2..(1 << 31)).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not a prime below 2^31")));
        }
        Ok(Fp { value: 0, modulus: p })
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
        Fp { value: acc as u32, modulus: self.modulus }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 4 {
        return p >= 2;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut q = 3u64;
    while q * q <= p as u64 {
        if (p as u64).is_multiple_of(q) {
            return false;
        }
        q += 2;
    }
    true
}

impl Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // symmetric representative reads better in printed polynomials
        let v = self.value as i64;
        let p = self.modulus as i64;
        if v > p / 2 {
            write!(f, "{}", v - p)
        } else {
            write!(f, "{v}")
        }
    }
}

impl Field for Fp {
    fn zero_like(&self) -> Self {
        Fp { value: 0, modulus: self.modulus }
    }
    fn one_like(&self) -> Self {
        Fp { value: 1, modulus: self.modulus }
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn is_one(&self) -> bool {
        self.value == 1
    }
    fn plus(&self, other: &Self) -> Self {
        let s = self.value as u64 + other.value as u64;
        Fp { value: (s % self.modulus as u64) as u32, modulus: self.modulus }
    }
    fn minus(&self, other: &Self) -> Self {
        let s = self.value as u64 + self.modulus as u64 - other.value as u64;
        Fp { value: (s % self.modulus as u64) as u32, modulus: self.modulus }
    }
    fn times(&self, other: &Self) -> Self {
        let s = self.value as u64 * other.value as u64;
        Fp { value: (s % self.modulus as u64) as u32, modulus: self.modulus }
    }
    fn negated(&self) -> Self {
        if self.value == 0 {
            *self
        } else {
            Fp { value: self.modulus - self.value, modulus: self.modulus }
        }
    }
    fn inverse(&self) -> Self {
        assert!(self.value != 0, "inverse of zero");
        self.pow(self.modulus as u64 - 2)
    }
    fn from_int_like(&self, n: i64) -> Self {
        Fp::new(n, self.modulus)
    }
    fn from_rational_like(&self, r: &Rational) -> Result<Self> {
        let p = BigInt::from(self.modulus);
        let num = r.numer().mod_floor(&p).to_i64().expect("reduced below p");
        let den = r.denom().mod_floor(&p).to_i64().expect("reduced below p");
        if den == 0 {
            return Err(Error::BadReduction(r.to_string(), self.modulus));
        }
        Ok(Fp::new(num, self.modulus).times(&Fp::new(den, self.modulus).inverse()))
    }
    fn characteristic(&self) -> u32 {
        self.modulus
    }
}

/// Least common multiple of the denominators of a set of rationals.
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_inverse_roundtrip() {
        let z = Fp::field(32003).unwrap();
        for v in 1..200 {
            let a = z.from_int_like(v);
            assert!(a.times(&a.inverse()).is_one());
        }
    }

    #[test]
    fn fp_rejects_composite() {
        assert!(Fp::field(32001).is_err());
        assert!(Fp::field(1).is_err());
    }

    #[test]
    fn fp_rational_image() {
        let z = Fp::field(7).unwrap();
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(z.from_rational_like(&half).unwrap().value(), 4);
        let bad = Rational::new(BigInt::from(1), BigInt::from(14));
        assert!(z.from_rational_like(&bad).is_err());
    }
}
