use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::LinalgError;

/// The coefficient field `K`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub enum Field {
    #[default]
    Rationals,
    Prime(u64),
}

/// An element of a [`Field`]. The variant always matches the field that
/// produced it; residues are kept in `[0, p)` and fractions in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Rational(BigRational),
    Residue(u64),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue(r) => *r == 0,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::Residue(r) => write!(f, "{r}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
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

impl Field {
    pub fn prime(p: u64) -> Result<Field, LinalgError> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(LinalgError::NotPrime(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::zero()),
            Field::Prime(_) => Scalar::Residue(0),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, x: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(x))),
            Field::Prime(p) => Scalar::Residue((x as i128).rem_euclid(*p as i128) as u64),
        }
    }

    /// `num / den`, reduced into the field.
    pub fn from_fraction(&self, num: i64, den: i64) -> Result<Scalar, LinalgError> {
        if den == 0 {
            return Err(LinalgError::DivisionByZero);
        }
        match self {
            Field::Rationals => Ok(Scalar::Rational(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))),
            Field::Prime(_) => {
                let d = self.from_i64(den);
                if d.is_zero() {
                    return Err(LinalgError::DivisionByZero);
                }
                Ok(self.mul(&self.from_i64(num), &self.inv(&d)))
            }
        }
    }

    fn residue(&self, s: &Scalar) -> u64 {
        match s {
            Scalar::Residue(r) => *r,
            Scalar::Rational(_) => panic!("rational scalar used in {self:?}"),
        }
    }

    fn rational<'a>(&self, s: &'a Scalar) -> &'a BigRational {
        match s {
            Scalar::Rational(q) => q,
            Scalar::Residue(_) => panic!("residue scalar used in {self:?}"),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(self.rational(a) + self.rational(b)),
            Field::Prime(p) => {
                let s = (self.residue(a) as u128 + self.residue(b) as u128) % (*p as u128);
                Scalar::Residue(s as u64)
            }
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(-self.rational(a)),
            Field::Prime(p) => {
                let r = self.residue(a);
                Scalar::Residue(if r == 0 { 0 } else { p - r })
            }
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(self.rational(a) * self.rational(b)),
            Field::Prime(p) => {
                let s = (self.residue(a) as u128 * self.residue(b) as u128) % (*p as u128);
                Scalar::Residue(s as u64)
            }
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: &Scalar) -> Scalar {
        assert!(!a.is_zero(), "inverse of zero");
        match self {
            Field::Rationals => Scalar::Rational(self.rational(a).recip()),
            Field::Prime(p) => {
                // Fermat: a^(p-2)
                let m = *p as u128;
                let mut base = self.residue(a) as u128 % m;
                let mut e = p - 2;
                let mut acc = 1u128;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = acc * base % m;
                    }
                    base = base * base % m;
                    e >>= 1;
                }
                Scalar::Residue(acc as u64)
            }
        }
    }

    /// A small integer representative, when one exists.
    pub fn to_i64(&self, a: &Scalar) -> Option<i64> {
        match a {
            Scalar::Rational(q) if q.is_integer() => q.numer().to_i64(),
            Scalar::Rational(_) => None,
            Scalar::Residue(r) => i64::try_from(*r).ok(),
        }
    }

    pub fn is_negative(&self, a: &Scalar) -> bool {
        matches!(a, Scalar::Rational(q) if q.is_negative())
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue(r) => *r == 1,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn prime_validation() {
        assert!(Field::prime(2).is_ok());
        assert!(Field::prime(32003).is_ok());
        assert_eq!(Field::prime(1), Err(LinalgError::NotPrime(1)));
        assert_eq!(Field::prime(91), Err(LinalgError::NotPrime(91)));
    }

    #[test]
    fn residues_stay_reduced() {
        let f = Field::prime(7).unwrap();
        assert_eq!(f.from_i64(-1), Scalar::Residue(6));
        assert_eq!(f.mul(&f.from_i64(3), &f.inv(&f.from_i64(3))), f.one());
        assert_eq!(f.from_fraction(1, 7), Err(LinalgError::DivisionByZero));
    }

    #[test]
    fn fractions_in_lowest_terms() {
        let q = Field::Rationals;
        let a = q.from_fraction(6, -4).unwrap();
        match &a {
            Scalar::Rational(r) => {
                assert_eq!(*r.numer(), BigInt::from(-3));
                assert_eq!(*r.denom(), BigInt::from(2));
            }
            _ => unreachable!(),
        }
    }

    proptest! {
        #[test]
        fn rational_add_mul_round_trip(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50) {
            let q = Field::Rationals;
            let x = q.from_fraction(a, b).unwrap();
            let y = q.from_fraction(c, d).unwrap();
            prop_assert_eq!(q.sub(&q.add(&x, &y), &y), x.clone());
            if !y.is_zero() {
                prop_assert_eq!(q.mul(&q.mul(&x, &y), &q.inv(&y)), x);
            }
        }

        #[test]
        fn prime_field_round_trip(a in -1000i64..1000, b in -1000i64..1000) {
            let f = Field::prime(101).unwrap();
            let x = f.from_i64(a);
            let y = f.from_i64(b);
            prop_assert_eq!(f.sub(&f.add(&x, &y), &y), x.clone());
            if !y.is_zero() {
                prop_assert_eq!(f.mul(&f.mul(&x, &y), &f.inv(&y)), x);
            }
        }
    }
}
