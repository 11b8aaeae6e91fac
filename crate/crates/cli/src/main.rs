mod golden;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use chordal::crystals::enumerate_zero_par;
use chordal::growth::{growth_inverse, CornerGrid};
use chordal::promotion::orbit;
use chordal::sieving::{csp_check, f_poly, g_poly, h_poly, CspReport, IntPolynomial};
use chordal::verify::{box_ranges, run_suite_on, Suite};
use chordal::virtualize::{iota, Embedding};
use chordal::{chord_matrix, growth_diagram, promote, ChordMap, Family, FilledMatrix, TableauSeq};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

#[derive(Parser)]
#[command(name = "chordal", version, about = "Promotion, growth diagrams and chord diagrams for weight-zero tableaux")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads for enumeration and verification.
    #[arg(long, global = true, env = "CHORDAL_THREADS", value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Ascii,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(alias = "oscillating")]
    Osc,
    #[value(alias = "fans")]
    Fan,
    #[value(alias = "vacillating")]
    Vac,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Osc => Family::Oscillating,
            FamilyArg::Fan => Family::Fan,
            FamilyArg::Vac => Family::Vacillating,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MapArg {
    #[value(name = "M_O", alias = "mo")]
    Mo,
    #[value(name = "M_F", alias = "mf")]
    Mf,
    #[value(name = "M_VO", alias = "mvo")]
    Mvo,
    #[value(name = "M_VF", alias = "mvf")]
    Mvf,
}

impl From<MapArg> for ChordMap {
    fn from(m: MapArg) -> ChordMap {
        match m {
            MapArg::Mo => ChordMap::MO,
            MapArg::Mf => ChordMap::MF,
            MapArg::Mvo => ChordMap::MVO,
            MapArg::Mvf => ChordMap::MVF,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum EmbedArg {
    FanToOsc,
    VacToOsc,
    VacToFan,
}

impl From<EmbedArg> for Embedding {
    fn from(e: EmbedArg) -> Embedding {
        match e {
            EmbedArg::FanToOsc => Embedding::FanToOsc,
            EmbedArg::VacToOsc => Embedding::VacToOsc,
            EmbedArg::VacToFan => Embedding::VacToFan,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum PolyArg {
    F,
    G,
    H,
}

impl PolyArg {
    fn name(self) -> &'static str {
        match self {
            PolyArg::F => "f",
            PolyArg::G => "g",
            PolyArg::H => "h",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    OscMain,
    FansMain,
    VacMain,
    Rotation,
    Order,
    BlowupLemmas,
    RuleInversion,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::OscMain => Suite::OscMain,
            SuiteArg::FansMain => Suite::FansMain,
            SuiteArg::VacMain => Suite::VacMain,
            SuiteArg::Rotation => Suite::Rotation,
            SuiteArg::Order => Suite::Order,
            SuiteArg::BlowupLemmas => Suite::BlowupLemmas,
            SuiteArg::RuleInversion => Suite::RuleInversion,
        }
    }
}

/// A single tableau given inline or in a file, as JSON or in compact notation.
#[derive(Args)]
struct TableauInput {
    /// Family, needed for compact notation.
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,
    /// Rank, needed for compact notation.
    #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
    r: Option<u16>,
    /// Inline tableau: JSON or compact such as "000,111,222,111,000".
    #[arg(long, conflicts_with = "input")]
    tableau: Option<String>,
    /// File holding the tableau.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// List all weight-zero tableaux of a family, one per line.
    Enumerate {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
        r: u16,
        #[arg(long)]
        n: usize,
        /// Print only the number of tableaux.
        #[arg(long)]
        count_only: bool,
    },
    /// Apply promotion.
    Promote {
        #[command(flatten)]
        input: TableauInput,
        /// Number of applications.
        #[arg(long, default_value_t = 1)]
        times: usize,
        /// Print the whole orbit instead.
        #[arg(long)]
        orbit: bool,
    },
    /// Chord diagram adjacency matrix of a tableau.
    Chord {
        #[command(flatten)]
        input: TableauInput,
        /// Which construction; defaults to the family's own.
        #[arg(long, value_enum)]
        map: Option<MapArg>,
    },
    /// Growth diagram of a tableau and its round trip through the inverse rules.
    Growth {
        #[command(flatten)]
        input: TableauInput,
    },
    /// Virtual embedding into a larger family.
    Embed {
        #[command(flatten)]
        input: TableauInput,
        #[arg(long, value_enum)]
        embedding: EmbedArg,
    },
    /// Run an exhaustive property suite.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        /// Domain for the rotation and order suites.
        #[arg(long, value_enum, default_value = "osc")]
        family: FamilyArg,
        /// Largest rank.
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u16).range(1..))]
        r: u16,
        /// Largest length.
        #[arg(long, default_value_t = 6)]
        n: usize,
        /// Random cells for rule-inversion.
        #[arg(long, default_value_t = 10_000)]
        cases: usize,
        /// Every rank and length with r + n <= 10 (half-length for fans and oscillating tableaux).
        #[arg(long)]
        deep: bool,
    },
    /// Check a cyclic sieving triple under promotion.
    Csp {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, required_unless_present = "deep", value_parser = clap::value_parser!(u16).range(1..))]
        r: Option<u16>,
        /// Tableau length.
        #[arg(long, required_unless_present = "deep")]
        n: Option<usize>,
        #[arg(long, value_enum, default_value = "f")]
        poly: PolyArg,
        /// Record the outcome instead of failing on it.
        #[arg(long)]
        conjecture: bool,
        /// Every rank and length with r + n <= 10 (half-length for fans and oscillating tableaux).
        #[arg(long)]
        deep: bool,
    },
    /// Replay the worked examples and diff them against checked-in fixtures.
    Golden {
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

type Outcome = Result<bool, CliError>;

fn read_tableau(input: &TableauInput) -> Result<TableauSeq, CliError> {
    let text = match (&input.tableau, &input.input) {
        (Some(t), _) => t.clone(),
        (None, Some(p)) => std::fs::read_to_string(p)?,
        (None, None) => return Err(usage("give --tableau or --input")),
    };
    let text = text.trim();
    if text.starts_with('{') {
        let t: TableauSeq = serde_json::from_str(text).map_err(usage)?;
        if input.family.is_some_and(|f| Family::from(f) != t.family)
            || input.r.is_some_and(|r| usize::from(r) != t.rank)
        {
            return Err(usage("--family/--r disagree with the JSON tableau"));
        }
        return Ok(t);
    }
    let (Some(family), Some(r)) = (input.family, input.r) else {
        return Err(usage("compact notation needs --family and --r"));
    };
    TableauSeq::parse_compact(family.into(), r.into(), text).map_err(usage)
}

fn emit<T: Serialize>(format: Format, value: &T, ascii: impl FnOnce() -> String) -> Result<(), CliError> {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value)?),
        Format::Ascii => print!("{}", ascii()),
    }
    Ok(())
}

/// Pairs (rank, length) with rank + size <= 10, where size is half the length for even-length families.
fn deep_ranges(family: Family) -> Vec<(usize, usize)> {
    let halved = family != Family::Vacillating;
    (1..=9).flat_map(|r| (1..=10 - r).map(move |m| (r, if halved { 2 * m } else { m }))).collect()
}

#[derive(Serialize)]
struct CspRun {
    family: Family,
    r: usize,
    n: usize,
    poly: PolyArg,
    polynomial: String,
    conjecture: bool,
    #[serde(flatten)]
    report: CspReport,
}

fn polynomial(poly: PolyArg, family: Family, r: usize, n: usize) -> Result<IntPolynomial, CliError> {
    match poly {
        PolyArg::F => f_poly(family, r, n).map_err(usage),
        PolyArg::G => {
            if family != Family::Fan || !n.is_multiple_of(2) {
                return Err(usage("g is defined for fans of even length"));
            }
            g_poly(n / 2, r).map_err(usage)
        }
        PolyArg::H => {
            if family != Family::Vacillating {
                return Err(usage("h is defined for vacillating tableaux"));
            }
            h_poly(n, r).map_err(usage)
        }
    }
}

fn csp_run(family: Family, r: usize, n: usize, poly: PolyArg, conjecture: bool) -> Result<CspRun, CliError> {
    let f = polynomial(poly, family, r, n)?;
    let xs = enumerate_zero_par(family, r, n);
    let report = csp_check(&xs, n, &f).map_err(usage)?;
    Ok(CspRun { family, r, n, poly, polynomial: f.to_string(), conjecture, report })
}

fn run(cli: Cli) -> Outcome {
    let format = cli.format;
    match cli.command {
        Command::Enumerate { family, r, n, count_only } => {
            let xs = enumerate_zero_par(family.into(), r.into(), n);
            if count_only {
                println!("{}", xs.len());
            } else {
                for t in &xs {
                    match format {
                        Format::Json => println!("{}", serde_json::to_string(t)?),
                        Format::Ascii => println!("{t}"),
                    }
                }
            }
            Ok(true)
        }
        Command::Promote { input, times, orbit: whole } => {
            let t = read_tableau(&input)?;
            if whole {
                let o = orbit(&t).map_err(usage)?;
                emit(format, &o, || o.iter().map(|t| format!("{t}\n")).collect())?;
            } else {
                let mut u = t;
                for _ in 0..times {
                    u = promote(&u).map_err(usage)?;
                }
                emit(format, &u, || format!("{u}\n"))?;
            }
            Ok(true)
        }
        Command::Chord { input, map } => {
            let t = read_tableau(&input)?;
            let map = map.map(ChordMap::from).unwrap_or_else(|| ChordMap::for_family(t.family));
            let m = chord_matrix(map, &t).map_err(usage)?;
            emit(format, &m, || format!("{}\n{}", render::matrix(&m), render::chords(&m)))?;
            Ok(true)
        }
        Command::Growth { input } => {
            let t = read_tableau(&input)?;
            let grid = growth_diagram(&t).map_err(usage)?;
            let back = growth_inverse(t.family, t.rank, &grid.triangle()).map_err(usage)?;
            let out = GrowthOut::new(&t, &grid, back == t);
            emit(format, &out, || render::growth(&out.diagonals, &out.matrix, out.round_trip))?;
            Ok(out.round_trip)
        }
        Command::Embed { input, embedding } => {
            let t = read_tableau(&input)?;
            let u = iota(embedding.into(), &t).map_err(usage)?;
            emit(format, &u, || format!("{u}\n"))?;
            Ok(true)
        }
        Command::Verify { suite, family, r, n, cases, deep } => {
            let family = Family::from(family);
            let suite = Suite::from(suite);
            let ranges = if deep { deep_ranges(family) } else { box_ranges(r.into(), n) };
            let rep = run_suite_on(suite, family, &ranges, cases);
            emit(format, &rep, || render::suite(&rep))?;
            Ok(rep.passed)
        }
        Command::Csp { family, r, n, poly, conjecture, deep } => {
            let family = Family::from(family);
            if deep {
                let runs = deep_ranges(family)
                    .into_iter()
                    .map(|(r, n)| csp_run(family, r, n, poly, conjecture))
                    .collect::<Result<Vec<_>, _>>()?;
                let all = runs.iter().all(|c| c.report.holds);
                emit(format, &runs, || runs.iter().map(render_csp).collect())?;
                Ok(all || conjecture)
            } else {
                let (Some(r), Some(n)) = (r, n) else {
                    return Err(usage("--r and --n are required without --deep"));
                };
                let c = csp_run(family, r.into(), n, poly, conjecture)?;
                emit(format, &c, || render_csp(&c))?;
                Ok(c.report.holds || conjecture)
            }
        }
        Command::Golden { fixtures } => {
            let path = fixtures.unwrap_or_else(golden::default_path);
            let results = golden::replay(&path)?;
            let ok = results.iter().all(|r| r.passed);
            emit(format, &results, || golden::render(&results))?;
            Ok(ok)
        }
    }
}

fn render_csp(c: &CspRun) -> String {
    format!("{} r={} n={} {}: {}\n{}", c.family.short(), c.r, c.n, c.poly.name(), c.polynomial, render::csp(&c.report))
}

#[derive(Serialize)]
struct GrowthOut {
    tableau: TableauSeq,
    diagonals: Vec<String>,
    matrix: FilledMatrix,
    round_trip: bool,
}

impl GrowthOut {
    fn new(t: &TableauSeq, grid: &CornerGrid, round_trip: bool) -> GrowthOut {
        let width = t.steps.iter().map(|p| p.len()).max().unwrap_or(0).max(t.rank);
        GrowthOut { tableau: t.clone(), diagonals: grid.diagonals(width), matrix: grid.matrix(), round_trip }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(k) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(k.into()).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
