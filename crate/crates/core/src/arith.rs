//! Integer and residue arithmetic.
//!
//! A [`Modulus`] of zero stands for the integers themselves, so `Z/0 = Z`.
//! Residues modulo a positive modulus are always stored in `[0, m)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Modulus of a cyclic ring `Z/m`; `m = 0` encodes `Z`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(BigInt);

impl Modulus {
    /// Builds a modulus; negative inputs are replaced by their absolute value.
    pub fn new(m: impl Into<BigInt>) -> Self {
        Modulus(m.into().abs())
    }

    pub fn integers() -> Self {
        Modulus(BigInt::zero())
    }

    pub fn value(&self) -> &BigInt {
        &self.0
    }

    pub fn is_integers(&self) -> bool {
        self.0.is_zero()
    }

    /// Canonical representative of `x`: `x` itself over `Z`, otherwise `x mod m` in `[0, m)`.
    pub fn reduce(&self, x: &BigInt) -> BigInt {
        if self.0.is_zero() {
            x.clone()
        } else {
            x.mod_floor(&self.0)
        }
    }

    /// Representative of least absolute value (ties go to the positive side).
    pub fn symmetric(&self, x: &BigInt) -> BigInt {
        if self.0.is_zero() {
            return x.clone();
        }
        let r = x.mod_floor(&self.0);
        let twice: BigInt = &r * 2;
        if twice > self.0 {
            r - &self.0
        } else {
            r
        }
    }

    pub fn is_zero_class(&self, x: &BigInt) -> bool {
        self.reduce(x).is_zero()
    }

    pub fn residue(&self, x: impl Into<BigInt>) -> Residue {
        Residue::new(self.clone(), x)
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            write!(f, "Z")
        } else {
            write!(f, "Z/{}", self.0)
        }
    }
}

impl From<u64> for Modulus {
    fn from(m: u64) -> Self {
        Modulus(BigInt::from(m))
    }
}

/// An element of `Z/m`, stored canonically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Residue {
    modulus: Modulus,
    value: BigInt,
}

impl Residue {
    pub fn new(modulus: Modulus, value: impl Into<BigInt>) -> Self {
        let value = modulus.reduce(&value.into());
        Residue { modulus, value }
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    pub fn value(&self) -> &BigInt {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Residues sharing one modulus, built from plain integers.
pub fn residues<I, T>(modulus: &Modulus, xs: I) -> Vec<Residue>
where
    I: IntoIterator<Item = T>,
    T: Into<BigInt>,
{
    xs.into_iter().map(|x| modulus.residue(x)).collect()
}

/// Extended Euclid: returns `(g, u, v)` with `u*a + v*b = g = gcd(a, b) >= 0`.
///
/// `bezout(0, 0) = (0, 0, 0)`.
pub fn bezout(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    if a.is_zero() && b.is_zero() {
        return (BigInt::zero(), BigInt::zero(), BigInt::zero());
    }
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Non-negative gcd of an integer sequence; the empty gcd is 0.
pub fn gcd_all<'a, I>(xs: I) -> BigInt
where
    I: IntoIterator<Item = &'a BigInt>,
{
    xs.into_iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

/// `gcd(x_1, ..., x_r, m)` for residues of the common modulus `m`.
///
/// With `m = 0` and all residues zero the result is 0.
pub fn gcd_m(modulus: &Modulus, xs: &[Residue]) -> Result<BigInt> {
    let mut g = modulus.value().clone();
    for x in xs {
        if x.modulus() != modulus {
            return Err(Error::MixedModuli {
                expected: modulus.value().to_string(),
                found: x.modulus().value().to_string(),
            });
        }
        g = g.gcd(x.value());
    }
    Ok(g)
}
