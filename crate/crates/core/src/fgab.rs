//! Finitely generated abelian groups in Smith form.
//!
//! `Z^t' (+) Z/s_1 (+) ... (+) Z/s_k` with `s_j >= 2` and `s_j | s_{j+1}`.
//! Infinite orders and cardinalities are reported as 0.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::smith_diagonal;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FgAbGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

impl FgAbGroup {
    pub fn trivial() -> Self {
        FgAbGroup {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    /// `Z^rank`.
    pub fn free(rank: usize) -> Self {
        FgAbGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// `Z/n`; `cyclic(0) = Z`, `cyclic(1)` is trivial.
    pub fn cyclic(n: impl Into<BigInt>) -> Self {
        FgAbGroup::from_diagonal(&[n.into()])
    }

    /// The group presented by `Z^k / diag(d_1, ..., d_k)`.
    pub fn from_diagonal(diagonal: &[BigInt]) -> Self {
        let (free_rank, torsion) = smith_diagonal(diagonal);
        FgAbGroup { free_rank, torsion }
    }

    /// Accepts free rank and torsion orders in any order; re-normalizes.
    pub fn new(free_rank: usize, torsion: &[BigInt]) -> Result<Self> {
        if torsion.iter().any(|s| s.is_zero()) {
            return Err(Error::Precondition("torsion orders must be nonzero".into()));
        }
        let mut diagonal = vec![BigInt::zero(); free_rank];
        diagonal.extend(torsion.iter().cloned());
        Ok(FgAbGroup::from_diagonal(&diagonal))
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    /// Number of Smith generators (free first, then torsion).
    pub fn generator_count(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.generator_count() == 0
    }

    /// Order of the group, 0 when infinite.
    pub fn cardinality(&self) -> BigInt {
        if self.free_rank > 0 {
            return BigInt::zero();
        }
        self.torsion.iter().product()
    }

    /// Least `d >= 1` killing every element, 0 when the group is infinite.
    pub fn exponent(&self) -> BigInt {
        if self.free_rank > 0 {
            return BigInt::zero();
        }
        self.torsion.last().cloned().unwrap_or_else(BigInt::one)
    }

    /// Modulus of the `i`-th generator's coordinate (0 for free generators).
    pub fn generator_order(&self, i: usize) -> BigInt {
        if i < self.free_rank {
            BigInt::zero()
        } else {
            self.torsion[i - self.free_rank].clone()
        }
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            group: self.clone(),
            coeffs: vec![BigInt::zero(); self.generator_count()],
        }
    }

    /// Element with the given generator coefficients, torsion parts reduced.
    pub fn element<I, T>(&self, coeffs: I) -> Result<GroupElement>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let coeffs: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        if coeffs.len() != self.generator_count() {
            return Err(Error::DimensionMismatch(format!(
                "group {} has {} generators, got {} coefficients",
                self,
                self.generator_count(),
                coeffs.len()
            )));
        }
        Ok(GroupElement::normalized(self.clone(), coeffs))
    }
}

/// Smith form of the direct sum of `groups`.
pub fn direct_sum<'a, I>(groups: I) -> FgAbGroup
where
    I: IntoIterator<Item = &'a FgAbGroup>,
{
    let mut diagonal = Vec::new();
    for g in groups {
        diagonal.extend(std::iter::repeat_n(BigInt::zero(), g.free_rank));
        diagonal.extend(g.torsion.iter().cloned());
    }
    FgAbGroup::from_diagonal(&diagonal)
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            a => parts.push(format!("Z^{a}")),
        }
        parts.extend(self.torsion.iter().map(|s| format!("Z/{s}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" (+) "))
        }
    }
}

/// An element of an [`FgAbGroup`] written in its Smith generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    group: FgAbGroup,
    coeffs: Vec<BigInt>,
}

impl GroupElement {
    fn normalized(group: FgAbGroup, mut coeffs: Vec<BigInt>) -> Self {
        for (i, c) in coeffs.iter_mut().enumerate().skip(group.free_rank) {
            *c = c.mod_floor(&group.torsion[i - group.free_rank]);
        }
        GroupElement { group, coeffs }
    }

    pub fn group(&self) -> &FgAbGroup {
        &self.group
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn same_group(&self, other: &GroupElement) -> Result<()> {
        if self.group != other.group {
            return Err(Error::GroupMismatch(
                self.group.to_string(),
                other.group.to_string(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &GroupElement) -> Result<GroupElement> {
        self.same_group(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(GroupElement::normalized(self.group.clone(), coeffs))
    }

    pub fn scale(&self, k: &BigInt) -> GroupElement {
        let coeffs = self.coeffs.iter().map(|c| c * k).collect();
        GroupElement::normalized(self.group.clone(), coeffs)
    }

    /// Least `n >= 1` with `n x = 0`; 0 when `x` has infinite order.
    pub fn order(&self) -> BigInt {
        let free = self.group.free_rank;
        if self.coeffs[..free].iter().any(|c| !c.is_zero()) {
            return BigInt::zero();
        }
        self.coeffs[free..]
            .iter()
            .zip(&self.group.torsion)
            .fold(BigInt::one(), |acc, (c, s)| acc.lcm(&(s / s.gcd(c))))
    }
}

pub fn element_order(x: &GroupElement) -> BigInt {
    x.order()
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ") in {}", self.group)
    }
}
