//! Homotopy-group and connecting-map tables.
//!
//! Every value here comes from a table entry carrying a citation. Built-in
//! data is overlaid by user files; a missing key is reported as absent and
//! never filled with a default.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::fgab::FgAbGroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Deserialize)]
pub enum LieFamily {
    SU,
    Sp,
    Spin,
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl LieFamily {
    fn fixed_rank(self) -> Option<u32> {
        match self {
            LieFamily::G2 => Some(2),
            LieFamily::F4 => Some(4),
            LieFamily::E6 => Some(6),
            LieFamily::E7 => Some(7),
            LieFamily::E8 => Some(8),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LieFamily::SU => "SU",
            LieFamily::Sp => "Sp",
            LieFamily::Spin => "Spin",
            LieFamily::G2 => "G2",
            LieFamily::F4 => "F4",
            LieFamily::E6 => "E6",
            LieFamily::E7 => "E7",
            LieFamily::E8 => "E8",
        }
    }
}

/// A sphere `S^n` or a simply connected simple compact Lie group.
///
/// For the classical families the parameter is the matrix size: `SU(m)`,
/// `Sp(m)`, `Spin(m)`. Exceptional groups carry their rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpaceId {
    Sphere(u32),
    Lie { family: LieFamily, rank: u32 },
}

impl SpaceId {
    pub fn sphere(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSpace("sphere dimension must be >= 1".into()));
        }
        Ok(SpaceId::Sphere(n))
    }

    pub fn lie(family: LieFamily, rank: u32) -> Result<Self> {
        let ok = match family {
            LieFamily::SU => rank >= 2,
            LieFamily::Sp => rank >= 1,
            LieFamily::Spin => rank == 3 || rank >= 5,
            f => f.fixed_rank() == Some(rank),
        };
        if !ok {
            return Err(Error::InvalidSpace(format!(
                "{}({rank}) is not a simply connected simple compact Lie group",
                family.name()
            )));
        }
        Ok(SpaceId::Lie { family, rank })
    }

    pub fn su(m: u32) -> Self {
        SpaceId::lie(LieFamily::SU, m).expect("SU(m) needs m >= 2")
    }

    pub fn sp(m: u32) -> Self {
        SpaceId::lie(LieFamily::Sp, m).expect("Sp(m) needs m >= 1")
    }

    pub fn spin(m: u32) -> Self {
        SpaceId::lie(LieFamily::Spin, m).expect("Spin(m) needs m = 3 or m >= 5")
    }

    pub fn exceptional(family: LieFamily) -> Self {
        let rank = family.fixed_rank().expect("exceptional family");
        SpaceId::Lie { family, rank }
    }

    pub fn is_lie(&self) -> bool {
        matches!(self, SpaceId::Lie { .. })
    }

    /// Identifies the low-rank isomorphisms `Sp(1) = Spin(3) = SU(2)`,
    /// `Spin(5) = Sp(2)`, `Spin(6) = SU(4)`.
    pub fn canonical(self) -> Self {
        match self {
            SpaceId::Lie {
                family: LieFamily::Sp,
                rank: 1,
            }
            | SpaceId::Lie {
                family: LieFamily::Spin,
                rank: 3,
            } => SpaceId::su(2),
            SpaceId::Lie {
                family: LieFamily::Spin,
                rank: 5,
            } => SpaceId::sp(2),
            SpaceId::Lie {
                family: LieFamily::Spin,
                rank: 6,
            } => SpaceId::su(4),
            other => other,
        }
    }

    /// Key used for homotopy groups: `SU(2)` is the 3-sphere.
    pub fn homotopy_key(self) -> Self {
        match self.canonical() {
            SpaceId::Lie {
                family: LieFamily::SU,
                rank: 2,
            } => SpaceId::Sphere(3),
            other => other,
        }
    }
}

impl fmt::Display for SpaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceId::Sphere(n) => write!(f, "S^{n}"),
            SpaceId::Lie { family, rank } => match family.fixed_rank() {
                Some(_) => write!(f, "{}", family.name()),
                None => write!(f, "{}({rank})", family.name()),
            },
        }
    }
}

impl FromStr for SpaceId {
    type Err = Error;

    /// Accepts `SU2`, `SU(2)`, `Sp3`, `Spin7`, `G2`, `E8`, `S3`, `S^3`,
    /// and the prefixed forms `sphere:3`, `lie:SU3`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("sphere:") {
            let n = rest
                .trim()
                .parse()
                .map_err(|_| Error::InvalidSpace(format!("bad sphere dimension in {s:?}")))?;
            return SpaceId::sphere(n);
        }
        let body = s.strip_prefix("lie:").unwrap_or(s);
        let compact: String = body
            .chars()
            .filter(|c| !matches!(c, '(' | ')' | ' ' | '_'))
            .collect();
        for (name, family) in [
            ("G2", LieFamily::G2),
            ("F4", LieFamily::F4),
            ("E6", LieFamily::E6),
            ("E7", LieFamily::E7),
            ("E8", LieFamily::E8),
        ] {
            if compact.eq_ignore_ascii_case(name) {
                return Ok(SpaceId::exceptional(family));
            }
        }
        let lower = compact.to_ascii_lowercase();
        let parse_rank = |digits: &str| -> Result<u32> {
            digits
                .parse()
                .map_err(|_| Error::InvalidSpace(format!("cannot parse space {s:?}")))
        };
        if let Some(d) = lower.strip_prefix("spin") {
            return SpaceId::lie(LieFamily::Spin, parse_rank(d)?);
        }
        if let Some(d) = lower.strip_prefix("su") {
            return SpaceId::lie(LieFamily::SU, parse_rank(d)?);
        }
        if let Some(d) = lower.strip_prefix("sp") {
            return SpaceId::lie(LieFamily::Sp, parse_rank(d)?);
        }
        if !s.starts_with("lie:") {
            if let Some(d) = lower.strip_prefix('s') {
                return SpaceId::sphere(parse_rank(d.trim_start_matches('^'))?);
            }
        }
        Err(Error::InvalidSpace(format!("cannot parse space {s:?}")))
    }
}

/// One homotopy group `pi_degree(space)` with its source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableEntry {
    pub space: SpaceId,
    pub degree: u32,
    pub group: FgAbGroup,
    pub citation: String,
}

/// Order of the connecting map `G -> Omega^(n-1) G` of the evaluation
/// fibration for bundles over `S^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectingOrder {
    pub group: SpaceId,
    pub n: u32,
    pub order: BigInt,
    pub citation: String,
}

/// J-homomorphism data for `S^q`-bundles over `S^n`: the images of the
/// chosen generator of `pi_{n-1}(SO(q))` under `J` (in `pi_{n+q-1}(S^q)`)
/// and under `E J` (in `pi_{n+q}(S^{q+1})`, or the subgroup it spans),
/// written in Smith generators of the stated target groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JImageData {
    pub n: u32,
    pub q: u32,
    pub j_target: FgAbGroup,
    pub j_image: Vec<BigInt>,
    pub ej_target: FgAbGroup,
    pub ej_image: Vec<BigInt>,
    pub citation: String,
}

/// A user-supplied value of `pi_j(Map_*(Y_F, G))` for an exact `(n, q, xi)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MappingSpaceEntry {
    pub group: SpaceId,
    pub n: u32,
    pub q: u32,
    pub xi: Vec<BigInt>,
    pub degree: u32,
    pub value: FgAbGroup,
    pub citation: String,
}

type MapKey = (SpaceId, u32, u32, Vec<BigInt>, u32);

#[derive(Debug, Clone, Default)]
pub struct HomotopyTables {
    pi: BTreeMap<(SpaceId, u32), TableEntry>,
    orders: BTreeMap<(SpaceId, u32), ConnectingOrder>,
    j_images: BTreeMap<(u32, u32), JImageData>,
    mapping_spaces: BTreeMap<MapKey, MappingSpaceEntry>,
}

const TODA: &str = "Toda, Composition methods in homotopy groups of spheres (1962)";
const HUREWICZ: &str = "Hurewicz theorem / degree theory";
const CIRCLE: &str = "universal cover R -> S^1";
const MIMURA: &str = "Mimura, Homotopy theory of Lie groups, Handbook of Algebraic Topology (1995)";
const KONO: &str = "Kono, A note on the homotopy type of certain gauge groups, Proc. Roy. Soc. Edinburgh 117A (1991)";
const J_43: &str = "J: pi_3(SO(3)) -> pi_6(S^3) = Z/12 is reduction mod 12; im(E J) = Z/12 generated by the suspended Samelson product";

/// Largest sphere dimension and classical-group parameter covered by the built-in data.
pub const BUILTIN_MAX_DIM: u32 = 24;

impl HomotopyTables {
    pub fn empty() -> Self {
        HomotopyTables::default()
    }

    /// The built-in core: low homotopy of spheres, `pi_k` for `k <= 6` of the
    /// simple simply connected compact groups, `o(delta_1) = 12` for `SU(2)`
    /// over `S^4`, and the J-homomorphism for `S^3`-bundles over `S^4`.
    pub fn builtin() -> Self {
        let mut t = HomotopyTables::empty();
        let z = FgAbGroup::free(1);
        let zero = FgAbGroup::trivial();
        let c = |n: i64| FgAbGroup::cyclic(n);

        for n in 1..=BUILTIN_MAX_DIM {
            for k in 1..n {
                t.put(SpaceId::Sphere(n), k, zero.clone(), HUREWICZ);
            }
            t.put(SpaceId::Sphere(n), n, z.clone(), HUREWICZ);
        }
        for k in 2..=BUILTIN_MAX_DIM {
            t.put(SpaceId::Sphere(1), k, zero.clone(), CIRCLE);
        }
        // Hopf fibration: pi_k(S^2) = pi_k(S^3) for k >= 3.
        t.put(SpaceId::Sphere(2), 3, z.clone(), TODA);
        t.put(SpaceId::Sphere(2), 4, c(2), TODA);
        t.put(SpaceId::Sphere(2), 5, c(2), TODA);
        t.put(SpaceId::Sphere(2), 6, c(12), TODA);
        for n in 3..=BUILTIN_MAX_DIM {
            t.put(SpaceId::Sphere(n), n + 1, c(2), TODA);
            t.put(SpaceId::Sphere(n), n + 2, c(2), TODA);
            let third = match n {
                3 => c(12),
                4 => crate::fgab::direct_sum([&z, &c(12)]),
                _ => c(24),
            };
            t.put(SpaceId::Sphere(n), n + 3, third, TODA);
        }

        // Degrees 1..=6. SU(2) is covered by S^3 above.
        let mut lie = |g: SpaceId, values: [FgAbGroup; 4]| {
            t.put(g, 1, zero.clone(), MIMURA);
            t.put(g, 2, zero.clone(), MIMURA);
            t.put(g, 3, z.clone(), MIMURA);
            let [p4, p5, p6, _] = values;
            t.put(g, 4, p4, MIMURA);
            t.put(g, 5, p5, MIMURA);
            t.put(g, 6, p6, MIMURA);
        };
        for m in 3..=BUILTIN_MAX_DIM {
            let p6 = if m == 3 { c(6) } else { zero.clone() };
            lie(SpaceId::su(m), [zero.clone(), z.clone(), p6, zero.clone()]);
        }
        for m in 2..=BUILTIN_MAX_DIM {
            lie(SpaceId::sp(m), [c(2), c(2), zero.clone(), zero.clone()]);
        }
        for m in 7..=BUILTIN_MAX_DIM {
            lie(
                SpaceId::spin(m),
                [zero.clone(), zero.clone(), zero.clone(), zero.clone()],
            );
        }
        lie(
            SpaceId::exceptional(LieFamily::G2),
            [zero.clone(), zero.clone(), c(3), zero.clone()],
        );
        for f in [LieFamily::F4, LieFamily::E6, LieFamily::E7, LieFamily::E8] {
            lie(
                SpaceId::exceptional(f),
                [zero.clone(), zero.clone(), zero.clone(), zero.clone()],
            );
        }

        t.orders.insert(
            (SpaceId::su(2), 4),
            ConnectingOrder {
                group: SpaceId::su(2),
                n: 4,
                order: BigInt::from(12),
                citation: KONO.into(),
            },
        );
        t.j_images.insert(
            (4, 3),
            JImageData {
                n: 4,
                q: 3,
                j_target: c(12),
                j_image: vec![BigInt::one()],
                ej_target: c(12),
                ej_image: vec![BigInt::one()],
                citation: J_43.into(),
            },
        );
        t
    }

    fn put(&mut self, space: SpaceId, degree: u32, group: FgAbGroup, citation: &str) {
        let key = space.homotopy_key();
        self.pi.insert(
            (key, degree),
            TableEntry {
                space: key,
                degree,
                group,
                citation: citation.to_string(),
            },
        );
    }

    /// `pi_k(space)` if the tables hold it.
    pub fn lookup_pi(&self, space: SpaceId, k: u32) -> Option<&TableEntry> {
        self.pi.get(&(space.homotopy_key(), k))
    }

    /// `|pi_6(G)|` for a simple simply connected compact `G`.
    pub fn pi6_order(&self, g: SpaceId) -> Result<BigInt> {
        if !g.is_lie() {
            return Err(Error::InvalidSpace(format!("{g} is not a Lie group")));
        }
        let entry = self
            .lookup_pi(g, 6)
            .ok_or_else(|| Error::MissingTable(format!("({g}, 6)")))?;
        let n = entry.group.cardinality();
        if n.is_zero() {
            return Err(Error::Precondition(format!("pi_6({g}) is infinite")));
        }
        Ok(n)
    }

    /// `o(delta_1)` for `G`-bundles over `S^n`, if tabulated.
    pub fn connecting_order(&self, g: SpaceId, n: u32) -> Option<&ConnectingOrder> {
        self.orders.get(&(g.canonical(), n))
    }

    pub fn j_image(&self, n: u32, q: u32) -> Option<&JImageData> {
        self.j_images.get(&(n, q))
    }

    pub fn mapping_space(
        &self,
        g: SpaceId,
        n: u32,
        q: u32,
        xi: &[BigInt],
        degree: u32,
    ) -> Option<&MappingSpaceEntry> {
        self.mapping_spaces
            .get(&(g.canonical(), n, q, xi.to_vec(), degree))
    }

    pub fn entries(&self) -> impl Iterator<Item = &TableEntry> {
        self.pi.values()
    }

    pub fn connecting_orders(&self) -> impl Iterator<Item = &ConnectingOrder> {
        self.orders.values()
    }

    /// Overlays `other` on `self`; entries of `other` win.
    pub fn overlay(&mut self, other: HomotopyTables) {
        self.pi.extend(other.pi);
        self.orders.extend(other.orders);
        self.j_images.extend(other.j_images);
        self.mapping_spaces.extend(other.mapping_spaces);
    }

    /// Parses one table file (see [`TableFile`]). Duplicate keys are an error.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: TableFile =
            serde_json::from_str(text).map_err(|e| Error::TableLoad(e.to_string()))?;
        file.into_tables()
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::TableLoad(format!("{}: {e}", path.display())))?;
        HomotopyTables::from_json(&text)
            .map_err(|e| Error::TableLoad(format!("{}: {e}", path.display())))
    }

    /// Built-in data overlaid by `paths`; earlier paths take precedence.
    pub fn load_layered<P: AsRef<Path>>(paths: &[P]) -> Result<Self> {
        let mut tables = HomotopyTables::builtin();
        for p in paths.iter().rev() {
            tables.overlay(HomotopyTables::from_path(p.as_ref())?);
        }
        Ok(tables)
    }
}

/// `pi_{q-1}(G) = 0`, `pi_{n-1}(G) = Z`, `pi_{n+q-1}(G) = 0` in the stable
/// range `G = SU(m)`, `n = 2k`, `q = 2k' - 1`, `2 <= k' <= k`, `k + k' <= m`
/// or `G = Sp(m)`, `n = 4k`, `q = 4k' - 1`, `1 <= k' <= k`, `k + k' <= m`.
pub fn stable_pi_rule(g: SpaceId, n: u32, q: u32, degree: u32) -> Result<FgAbGroup> {
    if !in_stable_range(g, n, q) {
        return Err(Error::Unsupported(format!(
            "({g}, n={n}, q={q}) is outside the stable range"
        )));
    }
    if degree + 1 == n {
        Ok(FgAbGroup::free(1))
    } else if degree + 1 == q || degree + 1 == n + q {
        Ok(FgAbGroup::trivial())
    } else {
        Err(Error::Unsupported(format!(
            "stable rule covers degrees {}, {}, {} only",
            q - 1,
            n - 1,
            n + q - 1
        )))
    }
}

/// `(k, k')` witnessing the stable-range condition for `(G, n, q)`.
pub fn stable_range_witness(g: SpaceId, n: u32, q: u32) -> Option<(u32, u32)> {
    let SpaceId::Lie { family, rank: m } = g else {
        return None;
    };
    match family {
        LieFamily::SU => {
            if !n.is_multiple_of(2) || q % 2 != 1 {
                return None;
            }
            let (k, kp) = (n / 2, q.div_ceil(2));
            (2 <= kp && kp <= k && k + kp <= m).then_some((k, kp))
        }
        LieFamily::Sp => {
            if !n.is_multiple_of(4) || !(q + 1).is_multiple_of(4) {
                return None;
            }
            let (k, kp) = (n / 4, (q + 1) / 4);
            (1 <= kp && kp <= k && k + kp <= m).then_some((k, kp))
        }
        _ => None,
    }
}

pub fn in_stable_range(g: SpaceId, n: u32, q: u32) -> bool {
    stable_range_witness(g, n, q).is_some()
}

// ---------------------------------------------------------------------------
// File format

/// On-disk table: either a bare array of homotopy-group entries or an object
/// with the sections below.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum TableFile {
    Entries(Vec<RawEntry>),
    Sections(RawSections),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSections {
    #[serde(default)]
    entries: Vec<RawEntry>,
    #[serde(default)]
    connecting_orders: Vec<RawOrder>,
    #[serde(default)]
    j_images: Vec<RawJImage>,
    #[serde(default)]
    mapping_spaces: Vec<RawMappingSpace>,
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "lowercase")]
enum RawSpace {
    Sphere(u32),
    Lie(RawLie),
}

#[derive(Debug, Deserialize)]
struct RawLie {
    family: LieFamily,
    rank: u32,
}

impl RawLie {
    fn resolve(&self) -> Result<SpaceId> {
        SpaceId::lie(self.family, self.rank)
    }
}

impl RawSpace {
    fn resolve(&self) -> Result<SpaceId> {
        match self {
            RawSpace::Sphere(n) => SpaceId::sphere(*n),
            RawSpace::Lie(l) => l.resolve(),
        }
    }
}

#[derive(Debug, Deserialize)]
struct RawGroup {
    #[serde(default)]
    free: usize,
    #[serde(default)]
    torsion: Vec<u64>,
}

impl RawGroup {
    fn resolve(&self) -> Result<FgAbGroup> {
        let torsion: Vec<BigInt> = self.torsion.iter().map(|&s| BigInt::from(s)).collect();
        FgAbGroup::new(self.free, &torsion).map_err(|e| Error::TableLoad(e.to_string()))
    }
}

#[derive(Debug, Deserialize)]
struct RawEntry {
    space: RawSpace,
    degree: u32,
    group: RawGroup,
    citation: String,
}

#[derive(Debug, Deserialize)]
struct RawOrder {
    lie: RawLie,
    n: u32,
    order: u64,
    citation: String,
}

#[derive(Debug, Deserialize)]
struct RawJImage {
    n: u32,
    q: u32,
    j_target: RawGroup,
    j_image: Vec<i64>,
    ej_target: RawGroup,
    ej_image: Vec<i64>,
    citation: String,
}

#[derive(Debug, Deserialize)]
struct RawMappingSpace {
    lie: RawLie,
    n: u32,
    q: u32,
    xi: Vec<i64>,
    degree: u32,
    group: RawGroup,
    citation: String,
}

fn duplicate(what: String) -> Error {
    Error::TableLoad(format!("duplicate key {what}"))
}

impl TableFile {
    fn into_tables(self) -> Result<HomotopyTables> {
        let sections = match self {
            TableFile::Entries(entries) => RawSections {
                entries,
                connecting_orders: Vec::new(),
                j_images: Vec::new(),
                mapping_spaces: Vec::new(),
            },
            TableFile::Sections(s) => s,
        };
        let mut t = HomotopyTables::empty();
        for e in sections.entries {
            let space = e.space.resolve()?;
            let key = (space.homotopy_key(), e.degree);
            if t.pi.contains_key(&key) {
                return Err(duplicate(format!("({space}, {})", e.degree)));
            }
            t.pi.insert(
                key,
                TableEntry {
                    space: key.0,
                    degree: e.degree,
                    group: e.group.resolve()?,
                    citation: e.citation,
                },
            );
        }
        for o in sections.connecting_orders {
            let g = o.lie.resolve()?.canonical();
            if o.order == 0 {
                return Err(Error::TableLoad(format!(
                    "connecting order for ({g}, {}) must be positive",
                    o.n
                )));
            }
            if t.orders.contains_key(&(g, o.n)) {
                return Err(duplicate(format!("connecting order ({g}, {})", o.n)));
            }
            t.orders.insert(
                (g, o.n),
                ConnectingOrder {
                    group: g,
                    n: o.n,
                    order: BigInt::from(o.order),
                    citation: o.citation,
                },
            );
        }
        for j in sections.j_images {
            let j_target = j.j_target.resolve()?;
            let ej_target = j.ej_target.resolve()?;
            if j.j_image.len() != j_target.generator_count()
                || j.ej_image.len() != ej_target.generator_count()
            {
                return Err(Error::TableLoad(format!(
                    "j_images ({}, {}): image length must match the target's generator count",
                    j.n, j.q
                )));
            }
            if t.j_images.contains_key(&(j.n, j.q)) {
                return Err(duplicate(format!("j_images ({}, {})", j.n, j.q)));
            }
            t.j_images.insert(
                (j.n, j.q),
                JImageData {
                    n: j.n,
                    q: j.q,
                    j_target,
                    j_image: j.j_image.into_iter().map(BigInt::from).collect(),
                    ej_target,
                    ej_image: j.ej_image.into_iter().map(BigInt::from).collect(),
                    citation: j.citation,
                },
            );
        }
        for ms in sections.mapping_spaces {
            let g = ms.lie.resolve()?.canonical();
            let xi: Vec<BigInt> = ms.xi.into_iter().map(BigInt::from).collect();
            let key = (g, ms.n, ms.q, xi.clone(), ms.degree);
            if t.mapping_spaces.contains_key(&key) {
                return Err(duplicate(format!(
                    "mapping space ({g}, n={}, q={}, degree {})",
                    ms.n, ms.q, ms.degree
                )));
            }
            t.mapping_spaces.insert(
                key,
                MappingSpaceEntry {
                    group: g,
                    n: ms.n,
                    q: ms.q,
                    xi,
                    degree: ms.degree,
                    value: ms.group.resolve()?,
                    citation: ms.citation,
                },
            );
        }
        Ok(t)
    }
}

/// `gcd(|pi_6(G)|, xi_1, ..., xi_r) = 1`.
pub fn pi6_coprime(tables: &HomotopyTables, g: SpaceId, xi: &[BigInt]) -> Result<bool> {
    let order = tables.pi6_order(g)?;
    Ok(xi.iter().fold(order, |acc, x| acc.gcd(x)).is_one())
}
