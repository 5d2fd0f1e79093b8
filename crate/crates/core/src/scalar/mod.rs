//! Exact scalars: rationals and elements of a cyclotomic field ℚ(ζ_n).

mod cyclotomic;
mod rational;

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_integer::Integer;
use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

pub use cyclotomic::Cyclotomic;
pub use rational::Rational;

use crate::error::{Error, Result};

/// A field element. Values that happen to be rational are always stored as
/// [`Scalar::Rat`], so each value has exactly one representation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(Rational),
    Cyc(Cyclotomic),
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(Rational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(Rational::one())
    }

    pub fn int(n: i64) -> Self {
        Scalar::Rat(Rational::from_int(n))
    }

    pub fn ratio(n: i64, d: i64) -> Result<Self> {
        Ok(Scalar::Rat(Rational::new(n, d)?))
    }

    /// Canonicalizes a cyclotomic value, demoting it when it is rational.
    pub fn from_cyclotomic(c: Cyclotomic) -> Self {
        if c.is_rational() {
            Scalar::Rat(c.coeffs[0].clone())
        } else {
            Scalar::Cyc(c)
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_one())
    }

    /// Conductor of a genuinely irrational value, `None` for rationals.
    pub fn conductor(&self) -> Option<u32> {
        match self {
            Scalar::Rat(_) => None,
            Scalar::Cyc(c) => Some(c.conductor()),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Cyc(_) => None,
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        Ok(match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Rat(a), Scalar::Cyc(c)) | (Scalar::Cyc(c), Scalar::Rat(a)) => {
                if a.is_zero() {
                    Scalar::Cyc(c.clone())
                } else {
                    let mut c = c.clone();
                    c.coeffs[0] = &c.coeffs[0] + a;
                    Scalar::Cyc(c)
                }
            }
            (Scalar::Cyc(a), Scalar::Cyc(b)) => Scalar::from_cyclotomic(a.add(b)?),
        })
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        Ok(match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Rat(a), Scalar::Cyc(c)) | (Scalar::Cyc(c), Scalar::Rat(a)) => {
                if a.is_zero() {
                    Scalar::zero()
                } else {
                    Scalar::Cyc(c.scale(a))
                }
            }
            (Scalar::Cyc(a), Scalar::Cyc(b)) => Scalar::from_cyclotomic(a.mul(b)?),
        })
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rat(r) => r.recip().map(Scalar::Rat),
            Scalar::Cyc(c) => c.recip().map(Scalar::from_cyclotomic),
        }
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, e: i64) -> Scalar {
        let base = if e < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut e = e.unsigned_abs();
        let mut acc = Scalar::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        acc
    }

    /// Least `m` in `1..=bound` with `self^m = 1`.
    pub fn multiplicative_order(&self, bound: u64) -> Option<u64> {
        let mut acc = self.clone();
        for m in 1..=bound {
            if acc.is_one() {
                return Some(m);
            }
            acc = &acc * self;
        }
        None
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv().expect("division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Cyc(c) => Scalar::Cyc(c.neg()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
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

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::Rat(r)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Cyc(c) => write!(f, "{c}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// ζ_n^k for `k` coprime to `n`, a primitive n-th root of unity.
pub fn root_of_unity(n: u32, k: i64) -> Result<Scalar> {
    if n == 0 {
        return Err(Error::Domain("order must be positive".into()));
    }
    if (k.rem_euclid(n as i64)).gcd(&(n as i64)) != 1 && n != 1 {
        return Err(Error::InvalidPrimitivity { n: n as u64, k });
    }
    Ok(Scalar::from_cyclotomic(Cyclotomic::zeta_power(n, k)))
}

/// ζ_n^k for any integer `k`, canonicalized so that rational powers are
/// stored as rationals.
pub fn zeta_power(n: u32, k: i64) -> Result<Scalar> {
    if n == 0 {
        return Err(Error::Domain("order must be positive".into()));
    }
    Ok(Scalar::from_cyclotomic(Cyclotomic::zeta_power(n, k)))
}

/// Gaussian binomial (m choose l)_p, evaluated through the q-Pascal
/// recurrence so no division ever happens.
pub fn q_binomial(m: usize, l: usize, p: &Scalar) -> Result<Scalar> {
    if l > m {
        return Err(Error::Domain(format!(
            "q_binomial: l = {l} exceeds m = {m}"
        )));
    }
    // row[j] holds (i choose j)_p for the current i
    let mut row = vec![Scalar::one()];
    let mut pw = vec![Scalar::one()];
    for _ in 0..m {
        pw.push(&pw[pw.len() - 1] * p);
    }
    for i in 1..=m {
        let mut next = Vec::with_capacity(i + 1);
        for j in 0..=i {
            let left = if j >= 1 {
                row[j - 1].clone()
            } else {
                Scalar::zero()
            };
            let right = if j < i {
                &pw[j] * &row[j]
            } else {
                Scalar::zero()
            };
            next.push(&left + &right);
        }
        row = next;
    }
    Ok(row[l].clone())
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Scalar::Rat(r) => s.serialize_str(&r.to_string()),
            Scalar::Cyc(c) => {
                let mut m = s.serialize_map(Some(2))?;
                let coeffs: Vec<String> = c.coeffs().iter().map(|r| r.to_string()).collect();
                m.serialize_entry("coeffs", &coeffs)?;
                m.serialize_entry("n", &c.conductor())?;
                m.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Wire {
            Str(String),
            Int(i64),
            Cyc { n: u32, coeffs: Vec<String> },
        }
        match Wire::deserialize(d)? {
            Wire::Str(s) => s.parse().map(Scalar::Rat).map_err(de::Error::custom),
            Wire::Int(i) => Ok(Scalar::int(i)),
            Wire::Cyc { n, coeffs } => {
                let coeffs = coeffs
                    .iter()
                    .map(|c| c.parse::<Rational>())
                    .collect::<Result<Vec<_>>>()
                    .map_err(de::Error::custom)?;
                Cyclotomic::new(n, coeffs)
                    .map(Scalar::from_cyclotomic)
                    .map_err(de::Error::custom)
            }
        }
    }
}
