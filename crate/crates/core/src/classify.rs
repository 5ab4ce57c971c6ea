//! Which classification of principal `G`-bundles over `M` applies, and the
//! resulting description of `[M, BG]`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fgab::{direct_sum, FgAbGroup};
use crate::json;
use crate::manifold::{tbar, ConnectedSumSpec};
use crate::tables::{stable_range_witness, HomotopyTables, LieFamily, SpaceId};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ClassificationCase {
    SuStable { k: u32, k_prime: u32 },
    SpStable { k: u32, k_prime: u32 },
    Dim7Pi6Coprime,
    StableWedgeFormula,
    Unsupported(String),
}

impl ClassificationCase {
    pub fn name(&self) -> &'static str {
        match self {
            ClassificationCase::SuStable { .. } => "SU_stable",
            ClassificationCase::SpStable { .. } => "Sp_stable",
            ClassificationCase::Dim7Pi6Coprime => "Dim7_pi6coprime",
            ClassificationCase::StableWedgeFormula => "Stable_wedge_formula",
            ClassificationCase::Unsupported(_) => "Unsupported",
        }
    }

    /// Cases in which `[M, BG] = Z^r` via the projection onto `V^r S^n`.
    pub fn is_bijective(&self) -> bool {
        matches!(
            self,
            ClassificationCase::SuStable { .. }
                | ClassificationCase::SpStable { .. }
                | ClassificationCase::Dim7Pi6Coprime
        )
    }
}

impl fmt::Display for ClassificationCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassificationCase::Unsupported(reason) => write!(f, "Unsupported ({reason})"),
            other => write!(f, "{}", other.name()),
        }
    }
}

/// `gcd(|pi_6(G)|, xi_1, ..., xi_r) = 1`: the suspended attaching map
/// induces a surjection onto `pi_6(G)`.
pub fn coker_check(tables: &HomotopyTables, g: SpaceId, xi: &[BigInt]) -> Result<bool> {
    let order = tables.pi6_order(g)?;
    Ok(xi.iter().fold(order, |acc, x| acc.gcd(x)).is_one())
}

fn in_wedge_range(g: SpaceId, n: u32, q: u32) -> bool {
    match g.canonical() {
        SpaceId::Lie {
            family: LieFamily::SU,
            rank: m,
        } => 2 * m >= n + q,
        SpaceId::Lie {
            family: LieFamily::Sp,
            rank: m,
        } => 4 * m + 2 >= n + q,
        _ => false,
    }
}

pub fn classify_conditions(
    tables: &HomotopyTables,
    g: SpaceId,
    spec: &ConnectedSumSpec,
) -> ClassificationCase {
    let (n, q) = (spec.n, spec.q);
    if !g.is_lie() {
        return ClassificationCase::Unsupported(format!("{g} is not a Lie group"));
    }
    if (n, q) == (4, 3) && coker_check(tables, g, &spec.xi) == Ok(true) {
        return ClassificationCase::Dim7Pi6Coprime;
    }
    let canonical = g.canonical();
    if let Some((k, k_prime)) = stable_range_witness(canonical, n, q) {
        return match canonical {
            SpaceId::Lie {
                family: LieFamily::SU,
                ..
            } => ClassificationCase::SuStable { k, k_prime },
            _ => ClassificationCase::SpStable { k, k_prime },
        };
    }
    if in_wedge_range(g, n, q) {
        return ClassificationCase::StableWedgeFormula;
    }
    let reason = if (n, q) == (4, 3) {
        match tables.pi6_order(g) {
            Ok(order) => format!(
                "gcd(|pi_6({g})|, xi) = gcd({order}, {}) != 1 and {g} is outside the stable ranges",
                join(&spec.xi)
            ),
            Err(e) => e.to_string(),
        }
    } else {
        format!("no classification covers {g} over {spec}")
    };
    ClassificationCase::Unsupported(reason)
}

fn join(xs: &[BigInt]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

/// How many copies of a summand appear.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Multiplicity {
    Exactly(usize),
    /// `r - rank(N_F)` with the rank not computable from the tables.
    RMinusRank(usize),
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplicity::Exactly(k) => write!(f, "{k}"),
            Multiplicity::RMinusRank(r) => write!(f, "({r} - rk)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormulaTerm {
    /// `label^multiplicity`, with the group if the tables know it.
    Power {
        label: String,
        group: Option<FgAbGroup>,
        multiplicity: Multiplicity,
    },
    Symbolic(String),
}

impl FormulaTerm {
    fn to_json(&self) -> Value {
        match self {
            FormulaTerm::Power {
                label,
                group,
                multiplicity,
            } => json!({
                "term": label,
                "group": group.as_ref().map(json::group),
                "multiplicity": match multiplicity {
                    Multiplicity::Exactly(k) => json!(k),
                    Multiplicity::RMinusRank(r) => json!({ "r_minus_rank": r }),
                },
            }),
            FormulaTerm::Symbolic(s) => json!({ "symbolic": s }),
        }
    }
}

impl fmt::Display for FormulaTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormulaTerm::Power {
                label,
                group,
                multiplicity,
            } => {
                let base = match group {
                    Some(g) if g.generator_count() > 1 => format!("({g})"),
                    Some(g) => g.to_string(),
                    None => label.clone(),
                };
                write!(f, "{base}^{multiplicity}")
            }
            FormulaTerm::Symbolic(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BundleSet {
    /// `[M, BG] = Z^r`, the pullback along `M -> V^r S^n` being a bijection.
    Free { rank: usize },
    /// `(+)^r pi_{n-1}(G) (+) (+)^{r-rk} pi_{q-1}(G) (+) [Y_F, BG]`.
    Formula { terms: Vec<FormulaTerm> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub group: SpaceId,
    pub case: ClassificationCase,
    pub bundles: BundleSet,
}

impl Classification {
    /// The fully evaluated group, when no term is symbolic.
    pub fn evaluated(&self) -> Option<FgAbGroup> {
        match &self.bundles {
            BundleSet::Free { rank } => Some(FgAbGroup::free(*rank)),
            BundleSet::Formula { terms } => {
                let mut parts = Vec::new();
                for t in terms {
                    match t {
                        FormulaTerm::Power {
                            group: Some(g),
                            multiplicity: Multiplicity::Exactly(k),
                            ..
                        } => parts.extend(std::iter::repeat_n(g.clone(), *k)),
                        FormulaTerm::Power { group: Some(g), .. } if g.is_trivial() => {}
                        _ => return None,
                    }
                }
                Some(direct_sum(&parts))
            }
        }
    }

    pub fn to_json(&self) -> Value {
        let bundles = match &self.bundles {
            BundleSet::Free { rank } => json!({
                "free_rank": rank,
                "statement": format!(
                    "pullback along M -> V^{rank} S^n is a bijection (+)^{rank} pi_(n-1)({}) = Z^{rank} -> [M, B{}]",
                    self.group, self.group
                ),
            }),
            BundleSet::Formula { terms } => json!({
                "formula": terms.iter().map(FormulaTerm::to_json).collect::<Vec<_>>(),
            }),
        };
        json!({
            "group": self.group.to_string(),
            "case": self.case.name(),
            "bundles": bundles,
            "text": self.to_string(),
        })
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.bundles {
            BundleSet::Free { rank: 1 } => write!(f, "Z"),
            BundleSet::Free { rank } => write!(f, "Z^{rank}"),
            BundleSet::Formula { terms } => {
                let parts: Vec<String> = terms.iter().map(ToString::to_string).collect();
                write!(f, "{}", parts.join(" (+) "))
            }
        }
    }
}

pub fn prin_bundles(
    tables: &HomotopyTables,
    g: SpaceId,
    spec: &ConnectedSumSpec,
) -> Result<Classification> {
    let case = classify_conditions(tables, g, spec);
    let r = spec.r();
    let bundles = match &case {
        ClassificationCase::Unsupported(reason) => return Err(Error::Unsupported(reason.clone())),
        c if c.is_bijective() => BundleSet::Free { rank: r },
        _ => {
            let pi = |degree: u32| tables.lookup_pi(g, degree).map(|e| e.group.clone());
            let rest = match tbar(tables, spec) {
                Ok(t) => Multiplicity::Exactly(r - t),
                Err(Error::MissingTable(_)) => Multiplicity::RMinusRank(r),
                Err(e) => return Err(e),
            };
            BundleSet::Formula {
                terms: vec![
                    FormulaTerm::Power {
                        label: format!("pi_{}({g})", spec.n - 1),
                        group: pi(spec.n - 1),
                        multiplicity: Multiplicity::Exactly(r),
                    },
                    FormulaTerm::Power {
                        label: format!("pi_{}({g})", spec.q - 1),
                        group: pi(spec.q - 1),
                        multiplicity: rest,
                    },
                    FormulaTerm::Symbolic(format!("[Y_F, B{g}]")),
                ],
            }
        }
    };
    Ok(Classification {
        group: g,
        case,
        bundles,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn b(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn spec(n: u32, q: u32, xi: &[i64]) -> ConnectedSumSpec {
        ConnectedSumSpec::new(n, q, xi.iter().copied()).unwrap()
    }

    #[test]
    fn dispatch_examples() {
        let t = HomotopyTables::builtin();
        assert_eq!(
            classify_conditions(&t, SpaceId::su(5), &spec(6, 3, &[0, 0])),
            ClassificationCase::SuStable { k: 3, k_prime: 2 }
        );
        assert_eq!(
            classify_conditions(&t, SpaceId::su(2), &spec(4, 3, &[1, 0])),
            ClassificationCase::Dim7Pi6Coprime
        );
        assert!(matches!(
            classify_conditions(&t, SpaceId::su(2), &spec(4, 3, &[2, 2])),
            ClassificationCase::Unsupported(_)
        ));
        // stable and dim-7 both apply: dim-7 wins
        assert_eq!(
            classify_conditions(&t, SpaceId::sp(2), &spec(4, 3, &[1, 0])),
            ClassificationCase::Dim7Pi6Coprime
        );
        // pi_6(Sp(2)) = 0, so the coprimality condition always holds
        assert_eq!(
            classify_conditions(&t, SpaceId::spin(5), &spec(4, 3, &[2, 2])),
            ClassificationCase::Dim7Pi6Coprime
        );
        assert_eq!(
            classify_conditions(&t, SpaceId::sp(3), &spec(8, 3, &[2, 2])),
            ClassificationCase::SpStable { k: 2, k_prime: 1 }
        );
        assert_eq!(
            classify_conditions(&t, SpaceId::su(6), &spec(6, 5, &[1, 2])),
            ClassificationCase::SuStable { k: 3, k_prime: 3 }
        );
        assert_eq!(
            classify_conditions(&t, SpaceId::su(4), &spec(4, 2, &[1, 2])),
            ClassificationCase::StableWedgeFormula
        );
        assert!(matches!(
            classify_conditions(&t, SpaceId::Sphere(3), &spec(4, 3, &[1])),
            ClassificationCase::Unsupported(_)
        ));
    }

    #[test]
    fn bundle_sets() {
        let t = HomotopyTables::builtin();
        let c = prin_bundles(&t, SpaceId::su(5), &spec(6, 3, &[0, 0])).unwrap();
        assert_eq!(c.evaluated(), Some(FgAbGroup::free(2)));
        let c = prin_bundles(&t, SpaceId::su(2), &spec(4, 3, &[1, 0])).unwrap();
        assert_eq!(c.to_string(), "Z^2");
        assert!(matches!(
            prin_bundles(&t, SpaceId::su(2), &spec(4, 3, &[2, 2])),
            Err(Error::Unsupported(_))
        ));

        let c = prin_bundles(&t, SpaceId::su(4), &spec(4, 2, &[1, 2])).unwrap();
        assert_eq!(c.case, ClassificationCase::StableWedgeFormula);
        assert_eq!(c.to_string(), "Z^2 (+) 0^(2 - rk) (+) [Y_F, BSU(4)]");
        assert_eq!(c.evaluated(), None);

        let c = prin_bundles(&t, SpaceId::su(3), &spec(2, 3, &[0, 0, 0])).unwrap();
        assert_eq!(c.case, ClassificationCase::StableWedgeFormula);
        assert_eq!(c.to_string(), "0^3 (+) 0^3 (+) [Y_F, BSU(3)]");
    }

    #[test]
    fn coker_examples() {
        let t = HomotopyTables::builtin();
        assert!(coker_check(&t, SpaceId::su(3), &b(&[5])).unwrap());
        assert!(!coker_check(&t, SpaceId::exceptional(LieFamily::G2), &b(&[3, 6])).unwrap());
        assert!(coker_check(&t, SpaceId::exceptional(LieFamily::E7), &b(&[0, 0])).unwrap());
        assert!(coker_check(&t, SpaceId::sp(1), &b(&[7])).unwrap());
    }

    proptest! {
        #[test]
        fn dispatch_is_permutation_invariant(xi in proptest::collection::vec(-30i64..30, 1..5), rot in 0usize..5, m in 2u32..7) {
            let t = HomotopyTables::builtin();
            let mut moved = xi.clone();
            moved.rotate_left(rot % xi.len());
            for g in [SpaceId::su(m), SpaceId::sp(m)] {
                for (n, q) in [(4, 3), (6, 3), (8, 3), (4, 2), (8, 7)] {
                    let a = classify_conditions(&t, g, &spec(n, q, &xi));
                    let b = classify_conditions(&t, g, &spec(n, q, &moved));
                    prop_assert_eq!(a.name(), b.name());
                    if a.is_bijective() {
                        let c = prin_bundles(&t, g, &spec(n, q, &xi)).unwrap();
                        prop_assert_eq!(c.evaluated(), Some(FgAbGroup::free(xi.len())));
                    }
                }
            }
        }

        #[test]
        fn coker_is_periodic(xi in proptest::collection::vec(-50i64..50, 1..5), c in -3i64..3) {
            let t = HomotopyTables::builtin();
            for g in [SpaceId::su(2), SpaceId::su(3), SpaceId::exceptional(LieFamily::G2)] {
                let order = t.pi6_order(g).unwrap();
                let mut shifted = b(&xi);
                shifted[0] += &order * c;
                prop_assert_eq!(coker_check(&t, g, &b(&xi)).unwrap(), coker_check(&t, g, &shifted).unwrap());
            }
        }
    }
}
