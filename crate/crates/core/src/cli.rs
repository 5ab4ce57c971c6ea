//! Command-line front end. Every report is built as JSON first; the plain
//! text form is rendered from that value.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::arith::{residues, Modulus};
use crate::classify::prin_bundles;
use crate::echelon::{echelon_rank, pivots, row_echelon_mixed};
use crate::error::{Error, Result};
use crate::gauge::{decompose_pointed, decompose_unpointed, equivalent, pointed_homotopy_groups};
use crate::json;
use crate::manifold::{suspension_splitting, ConnectedSumSpec};
use crate::matrix::{IntMatrix, MixedMatrix};
use crate::orbit::orbit_reduce;
use crate::tables::{HomotopyTables, SpaceId};

/// Environment variable holding extra table files, separated like `PATH`.
pub const TABLES_ENV: &str = "GAUGETYPE_TABLES";

#[derive(Debug, Parser)]
#[command(
    name = "gaugetype",
    version,
    about = "Principal bundles and gauge groups over connected sums of sphere bundles"
)]
pub struct Cli {
    /// Extra table files (comma separated); earlier files take precedence.
    #[arg(long, global = true, value_delimiter = ',')]
    pub tables: Vec<PathBuf>,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Target {
    /// Structure group, e.g. SU2, Sp3, Spin7, G2.
    #[arg(long)]
    pub group: String,

    /// Connected sum as a JSON file path or inline JSON, e.g. {"n":4,"q":3,"xi":[1,0]}.
    #[arg(long)]
    pub spec: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify principal bundles over the connected sum.
    Classify {
        #[command(flatten)]
        target: Target,
    },
    /// Homotopy decomposition of the gauge group with bundle class K.
    Decompose {
        #[command(flatten)]
        target: Target,
        #[arg(long, allow_hyphen_values = true)]
        k: String,
        /// Decompose the pointed gauge group.
        #[arg(long)]
        pointed: bool,
    },
    /// Decide whether the gauge groups for K and K' are homotopy equivalent.
    Equivalent {
        #[command(flatten)]
        target: Target,
        #[arg(long, allow_hyphen_values = true)]
        k: String,
        #[arg(long, allow_hyphen_values = true)]
        k2: String,
    },
    /// Homotopy group pi_j of the pointed gauge group.
    Pi {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        j: u32,
    },
    /// Canonical form of x in (Z/m)^r with a unimodular certificate.
    OrbitReduce {
        /// Modulus; 0 means the integers.
        #[arg(long)]
        m: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Row echelon form of a matrix with per-column moduli.
    Echelon {
        /// Rows as JSON, e.g. [[2,4],[3,5]].
        #[arg(long)]
        matrix: String,
        /// Column moduli (comma separated, 0 = Z); defaults to all 0.
        #[arg(long)]
        moduli: Option<String>,
    },
    /// Inspect the homotopy tables.
    Tables {
        /// SPACE,DEGREE such as sphere:3,6 or lie:SU3,6.
        #[arg(long)]
        lookup: Option<String>,
        /// GROUP,N for the connecting-map order, e.g. SU2,4.
        #[arg(long)]
        order: Option<String>,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => 2,
        _ => 1,
    }
}

fn parse_ints(name: &str, text: &str) -> Result<Vec<BigInt>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("--{name}: {s:?} is not an integer")))
        })
        .collect()
}

fn parse_space(text: &str) -> Result<SpaceId> {
    text.parse().map_err(|e: Error| Error::Parse(e.to_string()))
}

fn load_spec(text: &str) -> Result<ConnectedSumSpec> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        return ConnectedSumSpec::from_json(trimmed);
    }
    let body = std::fs::read_to_string(text)
        .map_err(|e| Error::Parse(format!("cannot read spec file {text}: {e}")))?;
    ConnectedSumSpec::from_json(&body)
}

fn split_pair(name: &str, text: &str) -> Result<(String, u32)> {
    let (head, tail) = text
        .rsplit_once(',')
        .ok_or_else(|| Error::Parse(format!("--{name} expects NAME,NUMBER, got {text:?}")))?;
    let k = tail
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("--{name}: {tail:?} is not a non-negative integer")))?;
    Ok((head.trim().to_string(), k))
}

fn load_tables(cli: &Cli, env_tables: Option<OsString>) -> Result<HomotopyTables> {
    let mut paths = cli.tables.clone();
    if let Some(env) = env_tables {
        paths.extend(std::env::split_paths(&env).filter(|p| !p.as_os_str().is_empty()));
    }
    HomotopyTables::load_layered(&paths)
}

fn target(t: &Target) -> Result<(SpaceId, ConnectedSumSpec)> {
    Ok((parse_space(&t.group)?, load_spec(&t.spec)?))
}

/// Runs one request and returns its JSON report, plus whether it counts as a
/// domain failure.
fn execute(cli: &Cli, tables: &HomotopyTables) -> Result<(Value, bool)> {
    match &cli.command {
        Command::Classify { target: t } => {
            let (g, spec) = target(t)?;
            match prin_bundles(tables, g, &spec) {
                Ok(c) => {
                    let mut report = c.to_json();
                    report["spec"] = spec.to_json();
                    if let Ok(s) = suspension_splitting(tables, &spec) {
                        report["suspension"] = json!(s.to_string());
                    }
                    Ok((report, false))
                }
                Err(Error::Unsupported(reason)) => Ok((
                    json!({
                        "group": g.to_string(),
                        "spec": spec.to_json(),
                        "case": "Unsupported",
                        "reason": reason,
                    }),
                    true,
                )),
                Err(e) => Err(e),
            }
        }
        Command::Decompose {
            target: t,
            k,
            pointed,
        } => {
            let (g, spec) = target(t)?;
            let k = parse_ints("k", k)?;
            let expr = if *pointed {
                decompose_pointed(tables, g, &spec, &k)?
            } else {
                decompose_unpointed(tables, g, &spec, &k)?
            };
            Ok((
                json!({
                    "group": g.to_string(),
                    "spec": spec.to_json(),
                    "k": json::ints(&k),
                    "pointed": pointed,
                    "expression": expr.to_json(),
                }),
                false,
            ))
        }
        Command::Equivalent { target: t, k, k2 } => {
            let (g, spec) = target(t)?;
            let (k, k2) = (parse_ints("k", k)?, parse_ints("k2", k2)?);
            let v = equivalent(tables, g, &spec, &k, &k2)?;
            Ok((v.to_json(), false))
        }
        Command::Pi { target: t, j } => {
            let (g, spec) = target(t)?;
            let sum = pointed_homotopy_groups(tables, g, &spec, *j)?;
            Ok((
                json!({
                    "group": g.to_string(),
                    "spec": spec.to_json(),
                    "j": j,
                    "pi": sum.to_json(),
                }),
                false,
            ))
        }
        Command::OrbitReduce { m, x } => {
            let m = parse_ints("m", m)?;
            let [m] = m.as_slice() else {
                return Err(Error::Parse("--m expects a single integer".into()));
            };
            if m < &BigInt::from(0) {
                return Err(Error::Parse("--m must be non-negative".into()));
            }
            let modulus = Modulus::new(m.clone());
            let x = residues(&modulus, parse_ints("x", x)?);
            let cert = orbit_reduce(&modulus, &x)?;
            let canonical: Vec<BigInt> = cert.canonical.iter().map(|r| r.value().clone()).collect();
            let input: Vec<BigInt> = x.iter().map(|r| r.value().clone()).collect();
            Ok((
                json!({
                    "modulus": json::int(m),
                    "x": json::ints(&input),
                    "canonical": json::ints(&canonical),
                    "gcd": json::int(&cert.invariant()),
                    "transform": matrix_json(&cert.transform),
                    "det": json::int(&cert.transform.det()?),
                }),
                false,
            ))
        }
        Command::Echelon { matrix, moduli } => {
            let rows = parse_matrix(matrix)?;
            let values = IntMatrix::from_rows(rows).map_err(|e| Error::Parse(e.to_string()))?;
            let moduli: Vec<Modulus> = match moduli {
                Some(text) => parse_ints("moduli", text)?
                    .into_iter()
                    .map(Modulus::new)
                    .collect(),
                None => vec![Modulus::integers(); values.cols()],
            };
            if moduli.iter().any(|m| m.value() < &BigInt::from(0)) {
                return Err(Error::Parse("--moduli must be non-negative".into()));
            }
            let a = MixedMatrix::new(values, moduli.clone())?;
            let (d, b) = row_echelon_mixed(&a)?;
            let pivots: Vec<Value> = pivots(&b)
                .into_iter()
                .map(|(col, v)| json!({ "column": col, "value": json::int(&v) }))
                .collect();
            Ok((
                json!({
                    "moduli": moduli.iter().map(|m| json::int(m.value())).collect::<Vec<_>>(),
                    "d": matrix_json(&d),
                    "b": matrix_json(b.values()),
                    "det": json::int(&d.det()?),
                    "rank": echelon_rank(&b)?,
                    "pivots": pivots,
                }),
                false,
            ))
        }
        Command::Tables { lookup, order } => {
            if let Some(text) = lookup {
                let (space, k) = split_pair("lookup", text)?;
                let space = parse_space(&space)?;
                let entry = tables
                    .lookup_pi(space, k)
                    .ok_or_else(|| Error::MissingTable(format!("({space}, {k})")))?;
                return Ok((
                    json!({
                        "space": space.to_string(),
                        "degree": k,
                        "group": json::group(&entry.group),
                        "citation": entry.citation,
                    }),
                    false,
                ));
            }
            if let Some(text) = order {
                let (g, n) = split_pair("order", text)?;
                let g = parse_space(&g)?;
                let entry = tables
                    .connecting_order(g, n)
                    .ok_or_else(|| Error::MissingTable(format!("connecting order ({g}, {n})")))?;
                return Ok((
                    json!({
                        "group": g.to_string(),
                        "n": n,
                        "order": json::int(&entry.order),
                        "citation": entry.citation,
                    }),
                    false,
                ));
            }
            Ok((
                json!({
                    "homotopy_entries": tables.entries().count(),
                    "connecting_orders": tables
                        .connecting_orders()
                        .map(|o| format!("({}, {}) = {}", o.group, o.n, o.order))
                        .collect::<Vec<_>>(),
                }),
                false,
            ))
        }
    }
}

fn parse_matrix(text: &str) -> Result<Vec<Vec<BigInt>>> {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("malformed --matrix JSON: {e}")))?;
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Parse("--matrix must be an array of rows".into()))?;
    rows.iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| Error::Parse("--matrix rows must be arrays".into()))?
                .iter()
                .map(|x| {
                    json::to_int(x).ok_or_else(|| {
                        Error::Parse(format!("--matrix entry {x} is not an integer"))
                    })
                })
                .collect()
        })
        .collect()
}

fn matrix_json(m: &IntMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| json::ints(r)).collect())
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Object(o) => match o.get("text") {
            Some(Value::String(s)) => s.clone(),
            _ => v.to_string(),
        },
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            let parts: Vec<String> = items.iter().map(inline).collect();
            format!("[{}]", parts.join(", "))
        }
        other => other.to_string(),
    }
}

/// Plain-text rendering of a JSON report: one `key: value` line per field.
pub fn render_text(v: &Value) -> String {
    match v {
        Value::Object(map) => map
            .iter()
            .map(|(k, x)| format!("{k}: {}\n", inline(x)))
            .collect(),
        other => format!("{}\n", inline(other)),
    }
}

/// Parses `args` (including the program name) and runs the request.
pub fn run<I, T>(args: I, env_tables: Option<OsString>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let result = load_tables(&cli, env_tables).and_then(|tables| execute(&cli, &tables));
    match result {
        Ok((report, failed)) => {
            let stdout = if cli.json {
                format!(
                    "{}\n",
                    serde_json::to_string_pretty(&report).expect("serializable")
                )
            } else {
                render_text(&report)
            };
            Outcome {
                code: if failed { 1 } else { 0 },
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => {
            let code = match &e {
                Error::TableLoad(_) => 2,
                other => exit_code(other),
            };
            let stdout = if cli.json {
                format!("{}\n", json!({ "error": e.to_string() }))
            } else {
                String::new()
            };
            Outcome {
                code,
                stdout,
                stderr: format!("error: {e}\n"),
            }
        }
    }
}
