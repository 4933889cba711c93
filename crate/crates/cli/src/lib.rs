//! Command-line front end for `deltamap`.
//!
//! [`run`] takes the full argument vector and returns the exit code together
//! with everything that would be printed, so the binary is a thin wrapper and
//! the tests can drive it in-process.
//!
//! Exit codes: 0 success, 1 parse or validation error, 2 property violation
//! (the counterexample is printed), 3 the map exceeds the enumeration guard.

use std::fmt::Write;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use deltamap::delta::{check_symmetric_exchange, lower_matroid, parity_uniform, upper_matroid, DeltaError};
use deltamap::reconstruct::{reconstruct, ReconstructError};
use deltamap::selection::{feasible_family, EnumError, FamilyColor, Variant, MAX_ENUM_EDGES};
use deltamap::text::{emit_family, emit_map, leading_keyword, parse_family, parse_graph, parse_map};
use deltamap::{fixtures, random, report, CombinatorialMap, SetFamily};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_VIOLATION: u8 = 2;
pub const EXIT_TOO_LARGE: u8 = 3;

/// Default `--max-edges` for the `random` subcommand.
const RANDOM_MAX_EDGES: usize = 8;

#[derive(Parser, Debug)]
#[command(name = "deltamap", version, about = "Delta-matroids of combinatorial maps")]
struct Cli {
    /// Seed for `random`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest edge count to enumerate; for `random`, the largest edge count
    /// to generate.
    #[arg(long, global = true)]
    max_edges: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and validate a map.
    Validate { map: String },
    /// List the feasible sets of D_gamma or D_K.
    Feasible {
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value_t = ColorArg::Green)]
        color: ColorArg,
        map: String,
    },
    /// Upper and lower matroids of D_gamma.
    Matroids { map: String },
    /// Check the symmetric exchange axiom on a FAMILY file, or on both
    /// feasible families of a map.
    CheckDelta { input: String },
    /// Vertex, edge and face counts and the Euler characteristic.
    Euler { map: String },
    Orientable { map: String },
    /// Rebuild a map from a graph and its dual (GRAPH files).
    Reconstruct {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        dual: String,
    },
    /// Run every delta-matroid check on one map.
    VerifyAll { map: String },
    /// Built-in fixture maps.
    Examples {
        #[command(subcommand)]
        action: Option<ExamplesAction>,
    },
    /// Emit seeded random maps in MAP format.
    Random {
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
}

#[derive(Subcommand, Debug)]
enum ExamplesAction {
    List,
    Show { name: String },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VariantArg {
    Gamma,
    K,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ColorArg {
    Green,
    Red,
}

/// Result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: u8, stderr: impl Into<String>) -> Self {
        Output {
            code,
            stdout: String::new(),
            stderr: stderr.into(),
        }
    }
}

struct Failure(u8, String);

impl From<EnumError> for Failure {
    fn from(e: EnumError) -> Self {
        Failure(EXIT_TOO_LARGE, e.to_string())
    }
}

fn input_error(e: impl std::fmt::Display) -> Failure {
    Failure(EXIT_INPUT, e.to_string())
}

fn read(path: &str) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure(EXIT_INPUT, format!("{path}: {e}")))
}

/// A map argument is a MAP file or, failing that, a fixture name.
fn load_map(arg: &str) -> Result<(String, CombinatorialMap), Failure> {
    if Path::new(arg).is_file() {
        let file = parse_map(&read(arg)?).map_err(|e| Failure(EXIT_INPUT, format!("{arg}: {e}")))?;
        return Ok((file.name, file.map));
    }
    fixtures::get(arg)
        .map(|m| (arg.to_string(), m))
        .ok_or_else(|| Failure(EXIT_INPUT, format!("{arg}: no such file or fixture")))
}

/// Parses `argv` (program name first) and runs the subcommand.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output::fail(EXIT_INPUT, text)
            } else {
                Output::ok(text)
            };
        }
    };
    match dispatch(&cli) {
        Ok(out) => out,
        Err(Failure(code, msg)) => Output::fail(code, format!("error: {msg}\n")),
    }
}

fn dispatch(cli: &Cli) -> Result<Output, Failure> {
    let limit = cli.max_edges.unwrap_or(MAX_ENUM_EDGES);
    let mut out = String::new();
    match &cli.command {
        Command::Validate { map } => {
            let (name, map) = load_map(map)?;
            writeln!(out, "{name}: valid map, {} flags, {} edges", map.flag_count(), map.edge_count()).unwrap();
        }
        Command::Feasible { variant, color, map } => {
            let (_, map) = load_map(map)?;
            let variant = match variant {
                VariantArg::Gamma => Variant::Gamma,
                VariantArg::K => Variant::K,
            };
            let color = match color {
                ColorArg::Green => FamilyColor::Green,
                ColorArg::Red => FamilyColor::Red,
            };
            out = emit_family(&feasible_family(&map, variant, color, limit)?);
        }
        Command::Matroids { map } => {
            let (_, map) = load_map(map)?;
            let family = feasible_family(&map, Variant::Gamma, FamilyColor::Green, limit)?;
            match (lower_matroid(&family), upper_matroid(&family)) {
                (Ok(lower), Ok(upper)) => {
                    writeln!(out, "lower rank {}: {}", lower.rank(), lower.bases()).unwrap();
                    writeln!(out, "upper rank {}: {}", upper.rank(), upper.bases()).unwrap();
                }
                (Err(e), _) | (_, Err(e)) => return Err(Failure(EXIT_VIOLATION, e.to_string())),
            }
        }
        Command::CheckDelta { input } => return check_delta(input, limit),
        Command::Euler { map } => {
            let (_, map) = load_map(map)?;
            writeln!(
                out,
                "vertices {}  edges {}  faces {}  euler {}",
                map.vertex_count(),
                map.edge_count(),
                map.face_count(),
                map.euler_characteristic()
            )
            .unwrap();
        }
        Command::Orientable { map } => {
            let (_, map) = load_map(map)?;
            writeln!(out, "{}", if map.is_orientable() { "orientable" } else { "non-orientable" }).unwrap();
        }
        Command::Reconstruct { graph, dual } => {
            let g = parse_graph(&read(graph)?).map_err(|e| input_error(format!("{graph}: {e}")))?;
            let d = parse_graph(&read(dual)?).map_err(|e| input_error(format!("{dual}: {e}")))?;
            let map = reconstruct(&g.graph, &d.graph).map_err(|e| match e {
                ReconstructError::LabelMismatch => input_error(e),
                e => Failure(EXIT_VIOLATION, e.to_string()),
            })?;
            out = emit_map(&g.name, &map);
        }
        Command::VerifyAll { map } => {
            let (name, map) = load_map(map)?;
            let report = report::verify_all(&name, &map, limit)?;
            let code = if report.all_passed() { EXIT_OK } else { EXIT_VIOLATION };
            return Ok(Output {
                code,
                stdout: report.to_string(),
                stderr: String::new(),
            });
        }
        Command::Examples { action } => match action {
            None | Some(ExamplesAction::List) => {
                for (name, map) in fixtures::all() {
                    writeln!(
                        out,
                        "{name:<10} m={}  euler {}  {}",
                        map.edge_count(),
                        map.euler_characteristic(),
                        if map.is_orientable() { "orientable" } else { "non-orientable" }
                    )
                    .unwrap();
                }
            }
            Some(ExamplesAction::Show { name }) => {
                let map = fixtures::get(name).ok_or_else(|| input_error(format!("no fixture named `{name}`")))?;
                out = emit_map(name, &map);
            }
        },
        Command::Random { count } => {
            let max = cli.max_edges.unwrap_or(RANDOM_MAX_EDGES);
            if max == 0 {
                return Err(input_error("--max-edges must be at least 1"));
            }
            for (i, map) in random::corpus(cli.seed, *count, max).iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                out.push_str(&emit_map(&format!("random-{}", cli.seed.wrapping_add(i as u64)), map));
            }
        }
    }
    Ok(Output::ok(out))
}

fn check_family(label: &str, family: &SetFamily, out: &mut String) -> bool {
    match check_symmetric_exchange(family) {
        Ok(None) => {
            let lower = lower_matroid(family).expect("exchange holds");
            let upper = upper_matroid(family).expect("exchange holds");
            writeln!(
                out,
                "{label}: delta-matroid, {} feasible sets, lower rank {}, upper rank {}, parity uniform {}",
                family.len(),
                lower.rank(),
                upper.rank(),
                if parity_uniform(family).unwrap() { "yes" } else { "no" }
            )
            .unwrap();
            true
        }
        Ok(Some(v)) => {
            writeln!(out, "{label}: not a delta-matroid").unwrap();
            writeln!(out, "counterexample: {v}").unwrap();
            false
        }
        Err(DeltaError::EmptyFamily) => {
            writeln!(out, "{label}: not a delta-matroid (no feasible sets)").unwrap();
            false
        }
        Err(e) => {
            writeln!(out, "{label}: {e}").unwrap();
            false
        }
    }
}

fn check_delta(input: &str, limit: usize) -> Result<Output, Failure> {
    let is_file = Path::new(input).is_file();
    let text = if is_file { Some(read(input)?) } else { None };
    let mut out = String::new();
    let mut stderr = String::new();
    let ok = if !is_file || text.as_deref().and_then(leading_keyword) == Some("map") {
        let (_, map) = load_map(input)?;
        let gamma = feasible_family(&map, Variant::Gamma, FamilyColor::Green, limit)?;
        let k = feasible_family(&map, Variant::K, FamilyColor::Green, limit)?;
        let a = check_family("D_gamma", &gamma, &mut out);
        let b = check_family("D_K", &k, &mut out);
        a && b
    } else {
        let parsed = parse_family(text.as_deref().unwrap()).map_err(|e| input_error(format!("{input}: {e}")))?;
        for (line, set) in &parsed.duplicates {
            writeln!(stderr, "warning: line {line}: duplicate set {set} ignored").unwrap();
        }
        check_family("family", &parsed.family, &mut out)
    };
    Ok(Output {
        code: if ok { EXIT_OK } else { EXIT_VIOLATION },
        stdout: out,
        stderr,
    })
}
