//! Orbits of `GL_r(Z)` acting on `(Z/m)^r`, the generators `Q` and `T`,
//! and the induced linear action of integer matrices on tuples of group
//! elements.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{bezout, gcd_m, Modulus, Residue};
use crate::error::{Error, Result};
use crate::fgab::GroupElement;
use crate::matrix::IntMatrix;

/// Reduction of a vector to its canonical orbit representative `(d, 0, ..., 0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitCertificate {
    /// Unimodular `D` with `D x = canonical` modulo `m`.
    pub transform: IntMatrix,
    pub canonical: Vec<Residue>,
    pub modulus: Modulus,
}

impl OrbitCertificate {
    /// `d = gcd_m(x)`, the orbit invariant.
    pub fn invariant(&self) -> BigInt {
        gcd_m(&self.modulus, &self.canonical).expect("canonical residues share the modulus")
    }

    /// Re-checks unimodularity and `transform * x == canonical (mod m)`.
    pub fn verify(&self, x: &[Residue]) -> bool {
        if !self.transform.is_unimodular() {
            return false;
        }
        let values: Vec<BigInt> = x.iter().map(|r| r.value().clone()).collect();
        match self.transform.apply(&values) {
            Ok(image) => image
                .iter()
                .zip(&self.canonical)
                .all(|(y, c)| self.modulus.reduce(y) == *c.value()),
            Err(_) => false,
        }
    }
}

/// Tracks a vector under elementary row operations together with the
/// accumulated transform.
struct RowState {
    modulus: Modulus,
    v: Vec<BigInt>,
    d: IntMatrix,
}

impl RowState {
    fn add_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        let delta = factor * &self.v[src];
        self.v[dst] += delta;
        self.v[dst] = self.modulus.symmetric(&self.v[dst]);
        self.d.add_row_multiple(dst, src, factor);
    }

    fn swap(&mut self, a: usize, b: usize) {
        self.v.swap(a, b);
        self.d.swap_rows(a, b);
    }

    fn nonzero(&self) -> Vec<usize> {
        (0..self.v.len())
            .filter(|&i| !self.v[i].is_zero())
            .collect()
    }
}

fn check_common_modulus(modulus: &Modulus, x: &[Residue]) -> Result<()> {
    gcd_m(modulus, x).map(|_| ())
}

/// Finds a unimodular `D` with `D x = (gcd_m(x), 0, ..., 0)` in `(Z/m)^r`.
///
/// Follows the constructive orbit argument: while two coordinates are
/// nonzero, subtract the smaller (in absolute value) from the larger with
/// the sign that shrinks `sum |x_i|`; runs of identical subtractions are
/// batched into one quotient step. Once at most one coordinate is nonzero,
/// a single Bezout row addition puts `d` in the first slot and one more
/// addition clears the rest.
pub fn orbit_reduce(modulus: &Modulus, x: &[Residue]) -> Result<OrbitCertificate> {
    let r = x.len();
    if r < 2 {
        return Err(Error::TooFewCoordinates(r));
    }
    check_common_modulus(modulus, x)?;

    let mut st = RowState {
        modulus: modulus.clone(),
        v: x.iter().map(|c| modulus.symmetric(c.value())).collect(),
        d: IntMatrix::identity(r),
    };

    loop {
        let nz = st.nonzero();
        if nz.len() <= 1 {
            break;
        }
        // 0 < |x_i| <= |x_j|
        let i = *nz.iter().min_by_key(|&&k| st.v[k].abs()).unwrap();
        let j = *nz
            .iter()
            .filter(|&&k| k != i)
            .max_by_key(|&&k| st.v[k].abs())
            .unwrap();
        let q = st.v[j].abs().div_floor(&st.v[i].abs());
        let eps = if st.v[i].signum() == st.v[j].signum() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        st.add_multiple(j, i, &(eps * q));
    }

    let nz = st.nonzero();
    if let Some(&k) = nz.first() {
        if k != 1 {
            st.swap(1, k);
        }
        let x2 = modulus.reduce(&st.v[1]);
        st.v[1] = x2.clone();
        let (d, a, _) = bezout(&x2, modulus.value());
        st.add_multiple(0, 1, &a);
        let c = x2 / &d;
        st.add_multiple(1, 0, &(-c));
    }

    let canonical = st.v.iter().map(|v| modulus.residue(v.clone())).collect();
    Ok(OrbitCertificate {
        transform: st.d,
        canonical,
        modulus: modulus.clone(),
    })
}

/// `x` and `y` lie in one `GL_r(Z)`-orbit of `(Z/m)^r` iff their `gcd_m` agree.
pub fn same_orbit(modulus: &Modulus, x: &[Residue], y: &[Residue]) -> Result<bool> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch(format!(
            "vectors of length {} and {}",
            x.len(),
            y.len()
        )));
    }
    if x.len() < 2 {
        return Err(Error::TooFewCoordinates(x.len()));
    }
    Ok(gcd_m(modulus, x)? == gcd_m(modulus, y)?)
}

/// The generators `Q = I + E_{2,1}` and `T = (-1)^(r-1) P` of `GL_r(Z)`,
/// `P` the cyclic permutation sending `e_i` to `e_{i+1}`.
pub fn glr_generators(r: usize) -> Result<(IntMatrix, IntMatrix)> {
    if r < 2 {
        return Err(Error::TooFewCoordinates(r));
    }
    let mut q = IntMatrix::identity(r);
    q[(1, 0)] = BigInt::one();

    let sign = if (r - 1).is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    let mut t = IntMatrix::zeros(r, r);
    t[(0, r - 1)] = sign.clone();
    for i in 1..r {
        t[(i, i - 1)] = sign.clone();
    }
    Ok((q, t))
}

/// Induced action of an integer matrix on an `r`-tuple of elements of one
/// abelian group: `(A v)_i = sum_j a_ij v_j`.
pub fn matrix_map_action(a: &IntMatrix, v: &[GroupElement]) -> Result<Vec<GroupElement>> {
    if !a.is_square() || a.rows() != v.len() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix acting on {} elements",
            a.rows(),
            a.cols(),
            v.len()
        )));
    }
    let Some(first) = v.first() else {
        return Ok(Vec::new());
    };
    let group = first.group().clone();
    if let Some(bad) = v.iter().find(|x| x.group() != &group) {
        return Err(Error::GroupMismatch(
            group.to_string(),
            bad.group().to_string(),
        ));
    }
    (0..a.rows())
        .map(|i| {
            v.iter()
                .enumerate()
                .try_fold(group.zero(), |acc, (j, x)| acc.add(&x.scale(&a[(i, j)])))
        })
        .collect()
}

/// Canonical representative `(d, 0, ..., 0)` of the orbit of `x`, without the transform.
pub fn canonical_form(modulus: &Modulus, x: &[Residue]) -> Result<Vec<Residue>> {
    let d = gcd_m(modulus, x)?;
    let mut out = vec![modulus.residue(BigInt::zero()); x.len()];
    if let Some(first) = out.first_mut() {
        *first = modulus.residue(d);
    }
    Ok(out)
}
