//! The `vkmap` command line.
//!
//! Every subcommand prints one JSON document on stdout. Exit codes: 0 when
//! the check passes, 1 when a condition fails or a counterexample turns up,
//! 2 for unreadable input or bad usage. Darts in arguments and in reports are
//! numbered as in the map file; regions and vertices are 0-based indices.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::conditions::{
    classify_map, find_cut_corners, find_thick_configurations, ClassFilter, CutCornerReport, ThickConfigReport,
    ThinnessReading,
};
use crate::io::{export_dot, parse_map, parse_presentation, DotOptions, MapDocument};
use crate::map::{BoundaryDecomposition, CombinatorialMap, Dart, Side};
use crate::presentation::{classify_presentation_with, validate_diagram, PairScope, Word};
use crate::verify::{enumerate_maps, run_campaign_with, verify, Dedup, EnumConfig, Theorem, VerdictStatus};

#[derive(Parser, Debug)]
#[command(name = "vkmap", version, about = "Van Kampen maps, cut corners and small-cancellation checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and validate a map file.
    CheckMap { map: PathBuf },
    /// Report V(6), proper V(6), proper C(7) and proper C(4)&T(4) membership.
    ClassifyMap { map: PathBuf },
    /// Classify a presentation file; exits 1 unless it is V(6).
    ClassifyPres {
        pres: PathBuf,
        /// Skip symmetric closure of the relators.
        #[arg(long)]
        no_symmetrize: bool,
        #[arg(long, value_enum, default_value_t = Scope::All)]
        scope: Scope,
    },
    /// Cut corners along μ and σ of a decomposition.
    CutCorners {
        map: PathBuf,
        #[command(flatten)]
        dec: DecArgs,
    },
    /// Thick configurations along μ and σ of a decomposition.
    ThickConfigs {
        map: PathBuf,
        #[command(flatten)]
        dec: DecArgs,
    },
    /// Check that a labelled map is a diagram over a presentation.
    ValidateDiagram {
        map: PathBuf,
        pres: PathBuf,
        /// Word the boundary must read, in either direction from any start.
        #[arg(long)]
        boundary: Option<String>,
    },
    /// Check a theorem on one decomposition (with --map) or run a campaign.
    Verify {
        #[arg(long, value_enum, default_value_t = TheoremArg::Main)]
        theorem: TheoremArg,
        #[arg(long)]
        map: Option<PathBuf>,
        #[command(flatten)]
        dec: OptDecArgs,
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, value_enum, default_value_t = Reading::Vertex)]
        thinness: Reading,
        /// Also exit 1 when a side condition of the corollary fails.
        #[arg(long)]
        strict: bool,
    },
    /// Enumerate shellable maps.
    Enumerate {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, value_enum, default_value_t = ClassArg::None)]
        class: ClassArg,
        /// Include every map in `kmap 1` format.
        #[arg(long)]
        list: bool,
    },
    /// Graphviz DOT for a map, highlighting detector hits when a
    /// decomposition is given.
    ExportDot {
        map: PathBuf,
        #[command(flatten)]
        dec: OptDecArgs,
    },
}

#[derive(Args, Debug)]
struct DecArgs {
    #[arg(long)]
    base: usize,
    #[arg(long, default_value_t = 0)]
    xi: usize,
    #[arg(long)]
    mu: usize,
    #[arg(long, default_value_t = 0)]
    tau: usize,
}

#[derive(Args, Debug)]
struct OptDecArgs {
    #[arg(long)]
    base: Option<usize>,
    #[arg(long, default_value_t = 0)]
    xi: usize,
    #[arg(long)]
    mu: Option<usize>,
    #[arg(long, default_value_t = 0)]
    tau: usize,
}

#[derive(Args, Debug)]
struct SpaceArgs {
    #[arg(long, default_value_t = 4)]
    max_regions: usize,
    /// Shorthand for --min-edges N --max-edges N.
    #[arg(long)]
    gon: Option<usize>,
    #[arg(long, default_value_t = 4)]
    min_edges: usize,
    #[arg(long, default_value_t = 8)]
    max_edges: usize,
    #[arg(long, default_value_t = 16)]
    max_boundary: usize,
    #[arg(long)]
    no_dedup: bool,
}

impl SpaceArgs {
    fn config(&self) -> EnumConfig {
        let range = match self.gon {
            Some(k) => (k, k),
            None => (self.min_edges, self.max_edges),
        };
        let dedup = if self.no_dedup { Dedup::Off } else { Dedup::On };
        EnumConfig::new(self.max_regions, range)
            .with_max_boundary(self.max_boundary)
            .with_dedup(dedup)
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Scope {
    All,
    Distinct,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TheoremArg {
    Main,
    C7,
    C4t4,
}

impl From<TheoremArg> for Theorem {
    fn from(t: TheoremArg) -> Self {
        match t {
            TheoremArg::Main => Theorem::Main,
            TheoremArg::C7 => Theorem::C7,
            TheoremArg::C4t4 => Theorem::C4T4,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Reading {
    Vertex,
    Edge,
    Rungs,
}

impl From<Reading> for ThinnessReading {
    fn from(r: Reading) -> Self {
        match r {
            Reading::Vertex => ThinnessReading::Vertex,
            Reading::Edge => ThinnessReading::Edge,
            Reading::Rungs => ThinnessReading::EdgeWithRungs,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ClassArg {
    None,
    ProperV6,
    ProperC7,
    ProperC4t4,
}

impl From<ClassArg> for ClassFilter {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::None => ClassFilter::None,
            ClassArg::ProperV6 => ClassFilter::ProperV6,
            ClassArg::ProperC7 => ClassFilter::ProperC7,
            ClassArg::ProperC4t4 => ClassFilter::ProperC4T4,
        }
    }
}

/// Output of a subcommand before printing.
enum Outcome {
    Json(String, bool),
    Text(String),
}

struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

/// Runs the CLI on `args` (program name first), printing to stdout and
/// stderr. Returns the process exit code.
pub fn run_cli<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(cli.command) {
        Ok(Outcome::Json(value, ok)) => {
            println!("{value}");
            if ok {
                0
            } else {
                1
            }
        }
        Ok(Outcome::Text(text)) => {
            print!("{text}");
            0
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn json(value: impl Serialize, ok: bool) -> Result<Outcome, InputError> {
    Ok(Outcome::Json(serde_json::to_string_pretty(&value)?, ok))
}

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn load_map(path: &Path) -> Result<MapDocument, InputError> {
    parse_map(&read(path)?).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn decomposition(
    map: &CombinatorialMap,
    base: usize,
    xi: usize,
    mu: usize,
    tau: usize,
) -> Result<BoundaryDecomposition, InputError> {
    if base == 0 || base > map.num_darts() {
        return Err(InputError(format!("--base {base} is not a dart of this map")));
    }
    Ok(BoundaryDecomposition::from_lengths(map, Dart(base - 1), xi, mu, tau)?)
}

fn optional_decomposition(map: &CombinatorialMap, dec: &OptDecArgs) -> Result<Option<BoundaryDecomposition>, InputError> {
    match (dec.base, dec.mu) {
        (Some(base), Some(mu)) => decomposition(map, base, dec.xi, mu, dec.tau).map(Some),
        (None, None) => Ok(None),
        _ => Err(InputError("--base and --mu go together".into())),
    }
}

#[derive(Serialize)]
struct MapSummary {
    darts: usize,
    vertices: usize,
    edges: usize,
    regions: usize,
    boundary_length: usize,
    euler_characteristic: i64,
    labelled: bool,
}

#[derive(Serialize)]
struct SideReports<T> {
    mu: Vec<T>,
    sigma: Vec<T>,
}

#[derive(Serialize)]
struct EnumerateReport {
    config: EnumConfig,
    maps_generated: usize,
    maps_emitted: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    maps: Vec<String>,
}

fn run(command: Command) -> Result<Outcome, InputError> {
    match command {
        Command::CheckMap { map } => {
            let doc = load_map(&map)?;
            let m = &doc.map;
            json(
                MapSummary {
                    darts: m.num_darts(),
                    vertices: m.num_vertices(),
                    edges: m.num_edges(),
                    regions: m.num_regions(),
                    boundary_length: m.boundary_length(),
                    euler_characteristic: m.euler_characteristic(),
                    labelled: doc.labels.is_some(),
                },
                true,
            )
        }
        Command::ClassifyMap { map } => json(classify_map(&load_map(&map)?.map), true),
        Command::ClassifyPres {
            pres,
            no_symmetrize,
            scope,
        } => {
            let p = parse_presentation(&read(&pres)?, !no_symmetrize)?;
            let scope = match scope {
                Scope::All => PairScope::AllOrderedPairs,
                Scope::Distinct => PairScope::DistinctTriples,
            };
            let class = classify_presentation_with(&p, scope)?;
            let ok = class.v6;
            json(class, ok)
        }
        Command::CutCorners { map, dec } => {
            let m = load_map(&map)?.map;
            let d = decomposition(&m, dec.base, dec.xi, dec.mu, dec.tau)?;
            let reports = SideReports {
                mu: find_cut_corners(&m, &d, Side::Mu)?,
                sigma: find_cut_corners(&m, &d, Side::Sigma)?,
            };
            let ok = !(reports.mu.is_empty() && reports.sigma.is_empty());
            json(reports, ok)
        }
        Command::ThickConfigs { map, dec } => {
            let m = load_map(&map)?.map;
            let d = decomposition(&m, dec.base, dec.xi, dec.mu, dec.tau)?;
            let reports = SideReports {
                mu: find_thick_configurations(&m, &d.mu)?,
                sigma: find_thick_configurations(&m, &d.sigma)?,
            };
            let ok = !(reports.mu.is_empty() && reports.sigma.is_empty());
            json(reports, ok)
        }
        Command::ValidateDiagram { map, pres, boundary } => {
            let doc = load_map(&map)?;
            let labels = doc
                .labels
                .ok_or_else(|| InputError(format!("{}: no label lines", map.display())))?;
            let p = parse_presentation(&read(&pres)?, false)?;
            let boundary = boundary.map(|w| Word::parse(&w)).transpose()?;
            let verdict = crate::presentation::diagnose_diagram(&doc.map, &labels, &p, boundary.as_ref())?;
            // The strict validator names the first failure; surface it on stderr.
            if let Err(e) = validate_diagram(&doc.map, &labels, &p, boundary.as_ref()) {
                eprintln!("{e}");
            }
            let ok = verdict.is_valid();
            json(verdict, ok)
        }
        Command::Verify {
            theorem,
            map,
            dec,
            space,
            thinness,
            strict,
        } => {
            let theorem = Theorem::from(theorem);
            match map {
                Some(path) => {
                    let m = load_map(&path)?.map;
                    let d = optional_decomposition(&m, &dec)?
                        .ok_or_else(|| InputError("--map needs --base and --mu".into()))?;
                    let v = verify(&m, &d, theorem)?;
                    let ok = v.status != VerdictStatus::Counterexample;
                    json(v, ok)
                }
                None => {
                    let report = run_campaign_with(&space.config(), theorem, thinness.into())?;
                    let ok = report.counterexamples.is_empty() && !(strict && !report.consistency_failures.is_empty());
                    json(report, ok)
                }
            }
        }
        Command::Enumerate { space, class, list } => {
            let cfg = space.config().with_filter(class.into());
            let mut stream = enumerate_maps(&cfg)?;
            let mut maps = Vec::new();
            let mut emitted = 0;
            for m in stream.by_ref() {
                emitted += 1;
                if list {
                    maps.push(crate::io::serialize_map(&m, None));
                }
            }
            json(
                EnumerateReport {
                    config: cfg,
                    maps_generated: stream.generated(),
                    maps_emitted: emitted,
                    maps,
                },
                true,
            )
        }
        Command::ExportDot { map, dec } => {
            let m = load_map(&map)?.map;
            let (mut cut_corners, mut thick): (Vec<CutCornerReport>, Vec<ThickConfigReport>) = (vec![], vec![]);
            if let Some(d) = optional_decomposition(&m, &dec)? {
                for side in [Side::Mu, Side::Sigma] {
                    cut_corners.extend(find_cut_corners(&m, &d, side)?);
                    thick.extend(find_thick_configurations(&m, d.side(side))?);
                }
            }
            let opts = DotOptions {
                cut_corners: &cut_corners,
                thick: &thick,
            };
            Ok(Outcome::Text(export_dot(&m, &opts)))
        }
    }
}
