//! Homotopy decompositions of gauge groups as canonical product expressions.

use std::cmp::{Ordering, Reverse};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::arith::gcd_all;
use crate::classify::{classify_conditions, ClassificationCase};
use crate::error::{Error, Result};
use crate::fgab::{direct_sum, FgAbGroup};
use crate::json;
use crate::manifold::{y_f, ConnectedSumSpec, YFDescriptor};
use crate::tables::{HomotopyTables, SpaceId};

/// `l(K) = gcd(o(delta_1), k_1, ..., k_r)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ell {
    Known(BigInt),
    /// `o(delta_1)` is not tabulated; `k_gcd = gcd(k_1, ..., k_r)`.
    Unresolved {
        k_gcd: BigInt,
    },
}

impl Ell {
    pub fn known(&self) -> Option<&BigInt> {
        match self {
            Ell::Known(l) => Some(l),
            Ell::Unresolved { .. } => None,
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Ell::Known(l) => json::int(l),
            Ell::Unresolved { k_gcd } => json!({ "unresolved_gcd_with": json::int(k_gcd) }),
        }
    }
}

impl fmt::Display for Ell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ell::Known(l) => write!(f, "{l}"),
            Ell::Unresolved { k_gcd } if k_gcd.is_zero() => write!(f, "o(delta_1)"),
            Ell::Unresolved { k_gcd } => write!(f, "gcd(o(delta_1), {k_gcd})"),
        }
    }
}

pub fn ell(tables: &HomotopyTables, g: SpaceId, n: u32, k: &[BigInt]) -> Result<Ell> {
    if k.is_empty() {
        return Err(Error::Precondition("K must have at least one entry".into()));
    }
    let k_gcd = gcd_all(k);
    Ok(match tables.connecting_order(g, n) {
        Some(o) => Ell::Known(o.order.gcd(&k_gcd)),
        None if k_gcd.is_one() => Ell::Known(BigInt::one()),
        None => Ell::Unresolved { k_gcd },
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LoopBase {
    Group(SpaceId),
    Label(String),
}

impl fmt::Display for LoopBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoopBase::Group(g) => write!(f, "{g}"),
            LoopBase::Label(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Factor {
    /// `G^l(S^n)`, the gauge group of the bundle over `S^n` with class `l`.
    GaugeOverSphere {
        group: SpaceId,
        n: u32,
        ell: Ell,
    },
    /// `F^{kf}`, homotopy fibre of `k` times the map `f`.
    FibrePower {
        k: BigInt,
        map: String,
    },
    /// `(Omega^degree base)^multiplicity`.
    LoopSpace {
        base: LoopBase,
        degree: u32,
        multiplicity: usize,
    },
    /// `Map_*(Y_F, G)`.
    MapStar {
        y_f: YFDescriptor,
        group: SpaceId,
    },
    Unknown(String),
}

impl Factor {
    fn kind_rank(&self) -> u8 {
        match self {
            Factor::GaugeOverSphere { .. } => 0,
            Factor::FibrePower { .. } => 1,
            Factor::LoopSpace { .. } => 2,
            Factor::MapStar { .. } => 3,
            Factor::Unknown(_) => 4,
        }
    }

    pub fn loop_space(base: LoopBase, degree: u32, multiplicity: usize) -> Self {
        Factor::LoopSpace {
            base,
            degree,
            multiplicity,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Factor::GaugeOverSphere { group, n, ell } => json!({
                "kind": "gauge_over_sphere", "group": group.to_string(), "n": n, "ell": ell.to_json(),
            }),
            Factor::FibrePower { k, map } => json!({
                "kind": "fibre_power", "k": json::int(k), "map": map,
            }),
            Factor::LoopSpace {
                base,
                degree,
                multiplicity,
            } => json!({
                "kind": "loop_space", "base": base.to_string(), "degree": degree, "multiplicity": multiplicity,
            }),
            Factor::MapStar { y_f, group } => json!({
                "kind": "map_star", "group": group.to_string(), "y_f": y_f.to_json(),
            }),
            Factor::Unknown(label) => json!({ "kind": "unknown", "label": label }),
        }
    }
}

impl Ord for Factor {
    fn cmp(&self, other: &Self) -> Ordering {
        use Factor::*;
        match (self, other) {
            (
                GaugeOverSphere {
                    group: a,
                    n: b,
                    ell: c,
                },
                GaugeOverSphere {
                    group: x,
                    n: y,
                    ell: z,
                },
            ) => (a, b, c).cmp(&(x, y, z)),
            (FibrePower { k: a, map: b }, FibrePower { k: x, map: y }) => (a, b).cmp(&(x, y)),
            (
                LoopSpace {
                    base: a,
                    degree: b,
                    multiplicity: c,
                },
                LoopSpace {
                    base: x,
                    degree: y,
                    multiplicity: z,
                },
            ) => (a, Reverse(b), c).cmp(&(x, Reverse(y), z)),
            (MapStar { y_f: a, group: b }, MapStar { y_f: x, group: y }) => (b, a).cmp(&(y, x)),
            (Unknown(a), Unknown(x)) => a.cmp(x),
            _ => self.kind_rank().cmp(&other.kind_rank()),
        }
    }
}

impl PartialOrd for Factor {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::GaugeOverSphere {
                group: _,
                n,
                ell: Ell::Known(l),
            } => write!(f, "G^{l}(S^{n})"),
            Factor::GaugeOverSphere { group: _, n, ell } => write!(f, "G^({ell})(S^{n})"),
            Factor::FibrePower { k, map } if k.is_one() => write!(f, "F^{map}"),
            Factor::FibrePower { k, map } => write!(f, "F^({k}{map})"),
            Factor::LoopSpace {
                base,
                degree,
                multiplicity,
            } => {
                let omega = match degree {
                    1 => "Omega".to_string(),
                    d => format!("Omega^{d}"),
                };
                match multiplicity {
                    1 => write!(f, "{omega} {base}"),
                    m => write!(f, "({omega} {base})^{m}"),
                }
            }
            Factor::MapStar { group, .. } => write!(f, "Map*(Y_F, {group})"),
            Factor::Unknown(label) => write!(f, "{label}"),
        }
    }
}

/// A product of factors in canonical order: loop spaces on the same base and
/// degree are merged and empty powers dropped, so structural equality is
/// equality of expressions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomotopyTypeExpr {
    factors: Vec<Factor>,
}

impl HomotopyTypeExpr {
    pub fn new(factors: impl IntoIterator<Item = Factor>) -> Self {
        let mut out: Vec<Factor> = Vec::new();
        for f in factors {
            if let Factor::LoopSpace {
                base,
                degree,
                multiplicity,
            } = &f
            {
                if *multiplicity == 0 {
                    continue;
                }
                let existing = out.iter_mut().find_map(|g| match g {
                    Factor::LoopSpace {
                        base: b,
                        degree: d,
                        multiplicity: m,
                    } if b == base && d == degree => Some(m),
                    _ => None,
                });
                if let Some(m) = existing {
                    *m += multiplicity;
                    continue;
                }
            }
            out.push(f);
        }
        out.sort();
        HomotopyTypeExpr { factors: out }
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn to_json(&self) -> Value {
        json!({
            "factors": self.factors.iter().map(Factor::to_json).collect::<Vec<_>>(),
            "text": self.to_string(),
        })
    }
}

impl fmt::Display for HomotopyTypeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "*");
        }
        let parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// `G^K(V^r S^n) = G^{l(K)}(S^n) x (Omega^n G)^{r-1}`.
pub fn decompose_wedge(
    tables: &HomotopyTables,
    g: SpaceId,
    n: u32,
    r: usize,
    k: &[BigInt],
) -> Result<HomotopyTypeExpr> {
    if r == 0 {
        return Err(Error::Precondition("wedge needs r >= 1".into()));
    }
    check_len(k, r, "K")?;
    Ok(HomotopyTypeExpr::new([
        Factor::GaugeOverSphere {
            group: g,
            n,
            ell: ell(tables, g, n, k)?,
        },
        Factor::loop_space(LoopBase::Group(g), n, r - 1),
    ]))
}

/// `F^g = F^{kf} x (Omega Y)^{r-1}` with `k = gcd(m, k_1, ..., k_r)`.
pub fn fibre_decompose(m: &BigInt, r: usize, ks: &[BigInt], y: &str) -> Result<HomotopyTypeExpr> {
    if r < 2 {
        return Err(Error::Precondition(
            "fibre decomposition needs r >= 2".into(),
        ));
    }
    check_len(ks, r, "ks")?;
    let k = ks.iter().fold(m.clone(), |acc, x| acc.gcd(x));
    Ok(HomotopyTypeExpr::new([
        Factor::FibrePower { k, map: "f".into() },
        Factor::loop_space(LoopBase::Label(y.to_string()), 1, r - 1),
    ]))
}

fn check_len(k: &[BigInt], r: usize, name: &str) -> Result<()> {
    if k.len() != r {
        return Err(Error::DimensionMismatch(format!(
            "{name} has {} entries but the connected sum has r = {r} summands",
            k.len()
        )));
    }
    Ok(())
}

fn supported_case(
    tables: &HomotopyTables,
    g: SpaceId,
    spec: &ConnectedSumSpec,
) -> Result<ClassificationCase> {
    match classify_conditions(tables, g, spec) {
        c if c.is_bijective() => Ok(c),
        ClassificationCase::Unsupported(reason) => Err(Error::Unsupported(reason)),
        c => Err(Error::Unsupported(format!(
            "gauge decomposition needs one of SU_stable, Sp_stable, Dim7_pi6coprime; {g} over {spec} is {}",
            c.name()
        ))),
    }
}

/// `(Omega^q G)^{r - tbar} x Map_*(Y_F, G)`, or unknown terms naming the
/// missing table key.
fn fibre_factors(
    tables: &HomotopyTables,
    g: SpaceId,
    spec: &ConnectedSumSpec,
) -> Result<Vec<Factor>> {
    match y_f(tables, spec) {
        Ok(y) => Ok(vec![
            Factor::loop_space(LoopBase::Group(g), spec.q, spec.r() - y.tbar),
            Factor::MapStar { y_f: y, group: g },
        ]),
        Err(Error::MissingTable(key)) => Ok(vec![
            Factor::Unknown(format!(
                "(Omega^{} {g})^({} - tbar) [tbar needs {key}]",
                spec.q,
                spec.r()
            )),
            Factor::Unknown(format!("Map*(Y_F, {g}) [Y_F needs {key}]")),
        ]),
        Err(e) => Err(e),
    }
}

/// `G^K(M) = G^{l(K)}(S^n) x (Omega^n G)^{r-1} x (Omega^q G)^{r-tbar} x Map_*(Y_F, G)`.
///
/// For `r = 1` the same formula is used with the single-sphere wedge part.
pub fn decompose_unpointed(
    tables: &HomotopyTables,
    g: SpaceId,
    spec: &ConnectedSumSpec,
    k: &[BigInt],
) -> Result<HomotopyTypeExpr> {
    supported_case(tables, g, spec)?;
    let r = spec.r();
    let mut factors = decompose_wedge(tables, g, spec.n, r, k)?.factors;
    factors.extend(fibre_factors(tables, g, spec)?);
    Ok(HomotopyTypeExpr::new(factors))
}

/// `G^K_*(M) = (Omega^n G)^r x (Omega^q G)^{r-tbar} x Map_*(Y_F, G)`; independent of `K`.
pub fn decompose_pointed(
    tables: &HomotopyTables,
    g: SpaceId,
    spec: &ConnectedSumSpec,
    k: &[BigInt],
) -> Result<HomotopyTypeExpr> {
    supported_case(tables, g, spec)?;
    check_len(k, spec.r(), "K")?;
    let mut factors = vec![Factor::loop_space(LoopBase::Group(g), spec.n, spec.r())];
    factors.extend(fibre_factors(tables, g, spec)?);
    Ok(HomotopyTypeExpr::new(factors))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Equivalent,
    NotEquivalent,
    Unknown,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Equivalent => "Equivalent",
            Verdict::NotEquivalent => "NotEquivalent",
            Verdict::Unknown => "Unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceVerdict {
    pub verdict: Verdict,
    pub reason: String,
}

impl EquivalenceVerdict {
    pub fn to_json(&self) -> Value {
        json!({ "verdict": self.verdict.name(), "reason": self.reason })
    }
}

/// Whether `G^K(M)` and `G^{K'}(M)` are homotopy equivalent.
///
/// A complete answer exists for `SU(2)` over `(n, q) = (4, 3)` with
/// `gcd(12, xi) = 1`. Elsewhere equal `l` values give `Equivalent` and
/// anything else is `Unknown`.
pub fn equivalent(
    tables: &HomotopyTables,
    g: SpaceId,
    spec: &ConnectedSumSpec,
    k: &[BigInt],
    k2: &[BigInt],
) -> Result<EquivalenceVerdict> {
    let a = decompose_unpointed(tables, g, spec, k)?;
    let b = decompose_unpointed(tables, g, spec, k2)?;
    let (l1, l2) = (ell(tables, g, spec.n, k)?, ell(tables, g, spec.n, k2)?);
    let case = classify_conditions(tables, g, spec);
    let order = tables.connecting_order(g, spec.n);
    if let (true, Some(o)) = (
        g.canonical() == SpaceId::su(2)
            && (spec.n, spec.q) == (4, 3)
            && case == ClassificationCase::Dim7Pi6Coprime,
        order,
    ) {
        let verdict = if l1 == l2 {
            Verdict::Equivalent
        } else {
            Verdict::NotEquivalent
        };
        let reason = format!(
            "SU(2) over (n, q) = (4, 3) with gcd(12, xi) = 1: o(delta_1) = {} ({}); \
             G^K(M) ~ G^K'(M) iff gcd({}, K) = gcd({}, K'), here {l1} and {l2}",
            o.order, o.citation, o.order, o.order
        );
        return Ok(EquivalenceVerdict { verdict, reason });
    }
    if a == b {
        return Ok(EquivalenceVerdict {
            verdict: Verdict::Equivalent,
            reason: format!("both decompose as {a} (l(K) = l(K') = {l1})"),
        });
    }
    Ok(EquivalenceVerdict {
        verdict: Verdict::Unknown,
        reason: format!(
            "l(K) = {l1} and l(K') = {l2} are not known to agree; the decomposition only gives \
             sufficiency and no inequivalence criterion is available for {g} over {spec}"
        ),
    })
}

/// A direct sum of tabulated groups and symbolic summands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomotopyGroupSum {
    pub known: FgAbGroup,
    pub symbolic: Vec<String>,
}

impl HomotopyGroupSum {
    pub fn is_resolved(&self) -> bool {
        self.symbolic.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "known": json::group(&self.known),
            "symbolic": self.symbolic,
            "resolved": self.is_resolved(),
            "text": self.to_string(),
        })
    }
}

impl fmt::Display for HomotopyGroupSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.known.is_trivial() || self.symbolic.is_empty() {
            parts.push(self.known.to_string());
        }
        parts.extend(self.symbolic.iter().cloned());
        write!(f, "{}", parts.join(" (+) "))
    }
}

/// `xi^i = 1` for one summand and `xi^j = 0` for the others, modulo 12, over
/// `(n, q) = (4, 3)`. Then `[Y_F, BG] = 0`.
pub fn map_star_vanishes_on_pi0(spec: &ConnectedSumSpec) -> bool {
    if (spec.n, spec.q) != (4, 3) {
        return false;
    }
    let twelve = BigInt::from(12);
    let residues: Vec<BigInt> = spec.xi.iter().map(|x| x.mod_floor(&twelve)).collect();
    residues.iter().filter(|x| x.is_one()).count() == 1
        && residues.iter().filter(|x| x.is_zero()).count() == residues.len() - 1
}

/// `pi_j(G^K_*(M)) = (+)^r pi_{j+n}(G) (+) (+)^{r-tbar} pi_{j+q}(G) (+) pi_j(Map_*(Y_F, G))`.
pub fn pointed_homotopy_groups(
    tables: &HomotopyTables,
    g: SpaceId,
    spec: &ConnectedSumSpec,
    j: u32,
) -> Result<HomotopyGroupSum> {
    supported_case(tables, g, spec)?;
    let r = spec.r();
    let mut known = Vec::new();
    let mut symbolic = Vec::new();
    let mut power = |degree: u32, count: Option<usize>, symbolic: &mut Vec<String>| match (
        tables.lookup_pi(g, degree),
        count,
    ) {
        (_, Some(0)) => {}
        (Some(e), Some(c)) => known.extend(std::iter::repeat_n(e.group.clone(), c)),
        (Some(e), None) if e.group.is_trivial() => {}
        (Some(e), None) => symbolic.push(format!("({})^({r} - tbar)", e.group)),
        (None, Some(c)) => symbolic.push(format!("pi_{degree}({g})^{c}")),
        (None, None) => symbolic.push(format!("pi_{degree}({g})^({r} - tbar)")),
    };
    power(j + spec.n, Some(r), &mut symbolic);
    let t = match y_f(tables, spec) {
        Ok(y) => Some(y.tbar),
        Err(Error::MissingTable(_)) => None,
        Err(e) => return Err(e),
    };
    power(j + spec.q, t.map(|t| r - t), &mut symbolic);
    if j == 0 && map_star_vanishes_on_pi0(spec) {
        // [Y_F, BG] = 0
    } else if let Some(e) = tables.mapping_space(g, spec.n, spec.q, &spec.xi, j) {
        known.push(e.value.clone());
    } else {
        symbolic.push(format!("pi_{j}(Map*(Y_F, {g}))"));
    }
    Ok(HomotopyGroupSum {
        known: direct_sum(&known),
        symbolic,
    })
}

/// `|pi_2(G^lambda(S^4))| = lambda` for `SU(2)`.
pub fn pi2_order_sphere_factor(lambda: &BigInt) -> Result<BigInt> {
    if lambda < &BigInt::one() {
        return Err(Error::Precondition(format!(
            "lambda must be positive, got {lambda}"
        )));
    }
    Ok(lambda.clone())
}
