//! Connected sums of `S^q`-bundles over `S^n` with cross sections.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::arith::Modulus;
use crate::echelon::{echelon_rank, row_echelon_mixed};
use crate::error::{Error, Result};
use crate::fgab::GroupElement;
use crate::json;
use crate::matrix::{IntMatrix, MixedMatrix};
use crate::orbit::matrix_map_action;
use crate::tables::{HomotopyTables, JImageData};

/// `M = #_i M_i` where `M_i` is the `S^q`-bundle over `S^n` with
/// characteristic element `xi[i]`. Each `xi[i]` is the coefficient of a
/// fixed generator of `pi_{n-1}(SO(q))`; for `(4, 3)` that group is `Z`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConnectedSumSpec {
    pub n: u32,
    pub q: u32,
    pub xi: Vec<BigInt>,
}

impl ConnectedSumSpec {
    pub fn new<I, T>(n: u32, q: u32, xi: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let xi: Vec<BigInt> = xi.into_iter().map(Into::into).collect();
        if n < 2 || q < 2 {
            return Err(Error::InvalidSpec(format!(
                "need n >= 2 and q >= 2, got n={n}, q={q}"
            )));
        }
        if xi.is_empty() {
            return Err(Error::InvalidSpec("xi must have at least one entry".into()));
        }
        Ok(ConnectedSumSpec { n, q, xi })
    }

    pub fn r(&self) -> usize {
        self.xi.len()
    }

    /// Parses `{"n":4,"q":3,"xi":[1,0]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("malformed spec JSON: {e}")))?;
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse("spec must be a JSON object".into()))?;
        let dim = |key: &str| -> Result<u32> {
            obj.get(key)
                .and_then(Value::as_u64)
                .and_then(|x| u32::try_from(x).ok())
                .ok_or_else(|| {
                    Error::Parse(format!("spec field {key:?} must be a non-negative integer"))
                })
        };
        let xi = obj
            .get("xi")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("spec field \"xi\" must be an array of integers".into()))?
            .iter()
            .map(|x| {
                json::to_int(x)
                    .ok_or_else(|| Error::Parse(format!("xi entry {x} is not an integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some(extra) = obj.keys().find(|k| !matches!(k.as_str(), "n" | "q" | "xi")) {
            return Err(Error::Parse(format!("unknown spec field {extra:?}")));
        }
        ConnectedSumSpec::new(dim("n")?, dim("q")?, xi)
    }

    pub fn to_json(&self) -> Value {
        json!({ "n": self.n, "q": self.q, "xi": json::ints(&self.xi) })
    }
}

impl fmt::Display for ConnectedSumSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let xi: Vec<String> = self.xi.iter().map(ToString::to_string).collect();
        write!(f, "(n={}, q={}, xi=({}))", self.n, self.q, xi.join(", "))
    }
}

/// One summand of the attaching map: `J(xi^i)` plus the Whitehead product
/// `[iota_n, iota_q]`, kept as an opaque marker.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttachingTerm {
    /// `None` when `pi_{n+q-1}(S^q)` and the J-image are not tabulated.
    pub eta_bar: Option<GroupElement>,
    pub n: u32,
    pub q: u32,
}

impl fmt::Display for AttachingTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.eta_bar {
            Some(e) if e.coeffs().len() == 1 => write!(f, "{}", e.coeffs()[0])?,
            Some(e) => {
                let cs: Vec<String> = e.coeffs().iter().map(ToString::to_string).collect();
                write!(f, "({})", cs.join(", "))?
            }
            None => write!(f, "J(xi)")?,
        }
        write!(f, " + [i_{}, i_{}]", self.n, self.q)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttachingMap {
    pub terms: Vec<AttachingTerm>,
}

impl AttachingMap {
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|t| {
                    json!({
                        "eta_bar": t.eta_bar.as_ref().map(json::element),
                        "whitehead": format!("[i_{}, i_{}]", t.n, t.q),
                        "text": t.to_string(),
                    })
                })
                .collect(),
        )
    }
}

impl fmt::Display for AttachingMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(|t| format!("({t})")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn j_data<'a>(tables: &'a HomotopyTables, spec: &ConnectedSumSpec) -> Result<&'a JImageData> {
    tables.j_image(spec.n, spec.q).ok_or_else(|| {
        Error::MissingTable(format!(
            "(S^{}, {}): E J images of pi_{}(SO({})) for (n, q) = ({}, {})",
            spec.q + 1,
            spec.n + spec.q,
            spec.n - 1,
            spec.q,
            spec.n,
            spec.q
        ))
    })
}

fn j_rows(data: &JImageData, spec: &ConnectedSumSpec) -> Result<Vec<GroupElement>> {
    spec.xi
        .iter()
        .map(|x| data.j_target.element(data.j_image.iter().map(|c| c * x)))
        .collect()
}

pub fn attaching_map(tables: &HomotopyTables, spec: &ConnectedSumSpec) -> AttachingMap {
    let rows = tables
        .j_image(spec.n, spec.q)
        .and_then(|d| j_rows(d, spec).ok());
    let terms = (0..spec.r())
        .map(|i| AttachingTerm {
            eta_bar: rows.as_ref().map(|r| r[i].clone()),
            n: spec.n,
            q: spec.q,
        })
        .collect();
    AttachingMap { terms }
}

/// Rows `E J(xi^i)` in the Smith generators of `pi_{n+q}(S^{q+1})`.
pub fn nf_matrix(tables: &HomotopyTables, spec: &ConnectedSumSpec) -> Result<MixedMatrix> {
    let data = j_data(tables, spec)?;
    let target = &data.ej_target;
    let moduli: Vec<Modulus> = (0..target.generator_count())
        .map(|i| {
            if i < target.free_rank() {
                Modulus::integers()
            } else {
                Modulus::new(target.generator_order(i))
            }
        })
        .collect();
    let rows: Vec<Vec<BigInt>> = spec
        .xi
        .iter()
        .map(|x| data.ej_image.iter().map(|c| c * x).collect())
        .collect();
    let values = IntMatrix::from_rows(rows)?;
    let values = if values.cols() == 0 {
        IntMatrix::zeros(spec.r(), 0)
    } else {
        values
    };
    MixedMatrix::new(values, moduli)
}

/// `min(r, rank N_F)`.
pub fn tbar(tables: &HomotopyTables, spec: &ConnectedSumSpec) -> Result<usize> {
    if spec.xi.iter().all(Zero::is_zero) {
        return Ok(0);
    }
    let (_, b) = row_echelon_mixed(&nf_matrix(tables, spec)?)?;
    Ok(echelon_rank(&b)?.min(spec.r()))
}

/// `Y_F`, the cofibre of `alpha: S^{n+q-1} -> V^tbar S^q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YFDescriptor {
    pub n: u32,
    pub q: u32,
    pub tbar: usize,
    pub alpha: Vec<GroupElement>,
    pub resolved: bool,
}

impl YFDescriptor {
    /// With `tbar = 0` the cofibre is the sphere `S^{n+q}`.
    pub fn is_degenerate(&self) -> bool {
        self.tbar == 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "tbar": self.tbar,
            "alpha": self.alpha.iter().map(json::element).collect::<Vec<_>>(),
            "resolved": self.resolved,
            "degenerate": self.is_degenerate().then(|| format!("S^{}", self.n + self.q)),
        })
    }
}

pub fn y_f(tables: &HomotopyTables, spec: &ConnectedSumSpec) -> Result<YFDescriptor> {
    let t = tbar(tables, spec)?;
    let mut out = YFDescriptor {
        n: spec.n,
        q: spec.q,
        tbar: t,
        alpha: Vec::new(),
        resolved: tables.j_image(spec.n, spec.q).is_some(),
    };
    if t == 0 {
        return Ok(out);
    }
    let data = j_data(tables, spec)?;
    let (d, _) = row_echelon_mixed(&nf_matrix(tables, spec)?)?;
    let moved = matrix_map_action(&d, &j_rows(data, spec)?)?;
    out.alpha = moved.into_iter().take(t).collect();
    Ok(out)
}

/// `Sigma M = V^r S^{n+1} v V^{r-tbar} S^{q+1} v Sigma Y_F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuspensionSplitting {
    pub r: usize,
    pub n: u32,
    pub q: u32,
    pub y_f: YFDescriptor,
}

impl SuspensionSplitting {
    pub fn summands(&self) -> Vec<String> {
        let mut out = vec![format!("S^{}", self.n + 1); self.r];
        out.extend(vec![format!("S^{}", self.q + 1); self.r - self.y_f.tbar]);
        out.push("Sigma Y_F".to_string());
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "spheres": [
                { "dim": self.n + 1, "count": self.r },
                { "dim": self.q + 1, "count": self.r - self.y_f.tbar },
            ],
            "y_f": self.y_f.to_json(),
            "text": self.to_string(),
        })
    }
}

impl fmt::Display for SuspensionSplitting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.summands().join(" v "))
    }
}

pub fn suspension_splitting(
    tables: &HomotopyTables,
    spec: &ConnectedSumSpec,
) -> Result<SuspensionSplitting> {
    Ok(SuspensionSplitting {
        r: spec.r(),
        n: spec.n,
        q: spec.q,
        y_f: y_f(tables, spec)?,
    })
}
