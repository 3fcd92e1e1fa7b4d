//! Exact scalar arithmetic over the rationals and over prime fields 𝔽_p.
//!
//! Every computation in this crate is exact: rationals are kept in reduced
//! form with arbitrary-precision integers, prime-field elements as least
//! nonnegative residues modulo a prime below 2³¹. There is no floating
//! point anywhere.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

/// Errors raised while constructing a field.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NotPrime(u64),
    #[error("characteristic {0} exceeds the supported bound 2^31")]
    TooLarge(u64),
}

/// The coefficient field of a computation: ℚ or 𝔽_p with p prime, p < 2³¹.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u32),
}

/// An element of the active field.
///
/// `Mod` values store the least nonnegative residue; the modulus lives in
/// the enclosing [`FieldSpec`], which performs all arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Rat(BigRational),
    Mod(u32),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    /// Build 𝔽_p, validating primality and the 2³¹ bound.
    pub fn prime_field(p: u64) -> Result<Self, FieldError> {
        if p >= 1u64 << 31 {
            return Err(FieldError::TooLarge(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(FieldSpec::PrimeField(p as u32))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::zero()),
            FieldSpec::PrimeField(_) => Scalar::Mod(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::one()),
            FieldSpec::PrimeField(_) => Scalar::Mod(1),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::PrimeField(p) => {
                let p = i128::from(*p);
                let r = (i128::from(n) % p + p) % p;
                Scalar::Mod(r as u32)
            }
        }
    }

    /// Reduced fraction a/b over ℚ; a·b⁻¹ over 𝔽_p.
    pub fn fraction(&self, num: i64, den: i64) -> Scalar {
        assert!(den != 0, "zero denominator");
        match self {
            FieldSpec::Rationals => {
                Scalar::Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
            }
            FieldSpec::PrimeField(_) => {
                let d = self.from_i64(den);
                assert!(!self.is_zero(&d), "denominator vanishes modulo p");
                self.mul(&self.from_i64(num), &self.inv(&d))
            }
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod(v) => *v == 0,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (FieldSpec::PrimeField(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(((u64::from(*x) + u64::from(*y)) % u64::from(*p)) as u32)
            }
            _ => panic!("scalar kind does not match field"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Rationals, Scalar::Rat(x)) => Scalar::Rat(-x),
            (FieldSpec::PrimeField(p), Scalar::Mod(x)) => {
                Scalar::Mod(if *x == 0 { 0 } else { p - x })
            }
            _ => panic!("scalar kind does not match field"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (FieldSpec::PrimeField(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(((u64::from(*x) * u64::from(*y)) % u64::from(*p)) as u32)
            }
            _ => panic!("scalar kind does not match field"),
        }
    }

    /// Multiplicative inverse of a nonzero element.
    pub fn inv(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Rationals, Scalar::Rat(x)) => {
                assert!(!x.is_zero(), "inverse of zero");
                Scalar::Rat(x.recip())
            }
            (FieldSpec::PrimeField(p), Scalar::Mod(x)) => {
                assert!(*x != 0, "inverse of zero");
                // Extended Euclid on (x, p).
                let (mut r0, mut r1) = (i64::from(*x), i64::from(*p));
                let (mut s0, mut s1) = (1i64, 0i64);
                while r1 != 0 {
                    let q = r0 / r1;
                    (r0, r1) = (r1, r0 - q * r1);
                    (s0, s1) = (s1, s0 - q * s1);
                }
                debug_assert_eq!(r0, 1);
                let p = i64::from(*p);
                Scalar::Mod(((s0 % p + p) % p) as u32)
            }
            _ => panic!("scalar kind does not match field"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.mul(a, &self.inv(b))
    }

    /// Render a scalar the way fixtures and reports print it ("3/2", "7").
    pub fn render(&self, a: &Scalar) -> String {
        match a {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod(v) => v.to_string(),
        }
    }

    /// True for rational scalars with negative sign (used only for pretty
    /// printing); prime-field residues are never negative.
    pub fn is_negative(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rat(r) => r.is_negative(),
            Scalar::Mod(_) => false,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "F{p}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_rejects_composites_and_large_moduli() {
        assert_eq!(FieldSpec::prime_field(12), Err(FieldError::NotPrime(12)));
        assert_eq!(FieldSpec::prime_field(1), Err(FieldError::NotPrime(1)));
        assert!(matches!(
            FieldSpec::prime_field(1 << 31),
            Err(FieldError::TooLarge(_))
        ));
        assert!(FieldSpec::prime_field(13).is_ok());
        assert!(FieldSpec::prime_field(2).is_ok());
    }

    #[test]
    fn f13_constants_used_by_the_sl3_fixture() {
        // i = 5 and ω = 4 satisfy i² = −1 and ω² − ω + 1 = 0 in 𝔽₁₃.
        let f = FieldSpec::prime_field(13).unwrap();
        let i = f.from_i64(5);
        assert_eq!(f.mul(&i, &i), f.from_i64(-1));
        let w = f.from_i64(4);
        let w2 = f.mul(&w, &w);
        assert!(f.is_zero(&f.add(&f.sub(&w2, &w), &f.one())));
    }

    #[test]
    fn rational_arithmetic_is_reduced() {
        let q = FieldSpec::Rationals;
        let half = q.fraction(1, 2);
        let third = q.fraction(1, 3);
        let sum = q.add(&half, &third);
        assert_eq!(q.render(&sum), "5/6");
        assert_eq!(q.render(&q.mul(&half, &q.from_i64(2))), "1");
    }

    #[test]
    fn modular_inverse() {
        let f = FieldSpec::prime_field(13).unwrap();
        for v in 1..13 {
            let a = Scalar::Mod(v);
            assert_eq!(f.mul(&a, &f.inv(&a)), f.one());
        }
    }
}
