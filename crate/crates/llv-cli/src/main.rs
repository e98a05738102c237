//! Command-line front end: parses JSON inputs, dispatches to the library,
//! and emits reports as JSON, Markdown or CSV.
//!
//! Exit codes: 0 on success, 1 on validation failure, 2 on input or parse
//! errors.

mod report;

use clap::{Parser, Subcommand, ValueEnum};
use llv::io::{DecompositionJson, NilpotentJson, WeightJson};
use llv::nilpotent::{normal_form, NormalFormTag, ReductionType};
use llv::predict::{
    predict_nu_even, predict_nu_odd_from_components, theorem71_check, LlvDecomposition, NuTable,
};
use llv::quad::standard_bbf_gram;
use llv::reduction::verify_cases;
use llv::weights::weyl_orbit_max;
use report::*;
use serde::Deserialize;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Markdown,
    Csv,
}

#[derive(Parser)]
#[command(
    name = "llv",
    version,
    about = "Exact computations for orthogonal Lie algebras acting on hyper-Kähler-style \
             cohomology: nilpotency indices, weight filtrations, Clifford modules and \
             reduction-type tables"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Markdown)]
    format: Format,
    /// Write output to a file instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// JSON input file; stdin is used when omitted
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Cap the worker thread count for parallel enumerations
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Nilpotency index, graded dimensions and filtration of a nilpotent
    Nu,
    /// Weight filtration level dimensions of a nilpotent
    Filtration,
    /// Normalized degree-two operator for a reduction type
    NormalForm {
        #[arg(long, value_parser = parse_type)]
        r#type: ReductionType,
        #[arg(long)]
        b2: usize,
    },
    /// Clifford algebra dimensions and commutant verification on a split form
    CliffordCheck {
        /// Split form parameter: dimension is 2r or 2r+1
        #[arg(long)]
        r: usize,
        #[arg(long)]
        odd: bool,
    },
    /// Enumerate consistent reduction cases and compare with the expected table
    VerifyThm52 {
        #[arg(long, conflicts_with = "range")]
        b2: Option<usize>,
        /// Inclusive range such as 4..24
        #[arg(long)]
        range: Option<String>,
    },
    /// Maximum of a cocharacter pairing over the Weyl orbit of a weight
    WeylMax,
    /// Restriction of an ambient irreducible to the reduced system, graded
    Branch,
    /// Equivalence check between the degree-wise criterion and the weight bound
    Criterion,
    /// Per-degree nilpotency table for a decomposition and reduction type
    Predict {
        #[arg(long, value_parser = parse_type)]
        r#type: ReductionType,
        /// Include odd-degree rows (needs half-integral components or b2 = 7 data)
        #[arg(long)]
        odd: bool,
    },
    /// Total Lie algebra of the degree-4 model algebra on a split form
    LlvToy {
        #[arg(long)]
        b2: usize,
    },
}

fn parse_type(s: &str) -> Result<ReductionType, String> {
    match s {
        "I" | "i" | "1" => Ok(ReductionType::I),
        "II" | "ii" | "2" => Ok(ReductionType::II),
        "III" | "iii" | "3" => Ok(ReductionType::III),
        other => Err(format!("unknown reduction type `{other}` (expected I, II or III)")),
    }
}

enum CliError {
    /// exit code 2
    Input(String),
    /// exit code 1
    Validation(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Validation(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Validation(m) => m,
        }
    }
}

fn input_err(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

fn validation_err(e: impl std::fmt::Display) -> CliError {
    CliError::Validation(e.to_string())
}

fn read_input(path: &Option<PathBuf>) -> Result<String, CliError> {
    match path {
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", p.display()))),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Input(format!("cannot read stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn parse_json<T: for<'a> Deserialize<'a>>(text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(input_err)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        llv::par::configure_jobs(jobs);
    }
    match run(&cli) {
        Ok(rendered) => {
            let out = if rendered.ends_with('\n') { rendered } else { rendered + "\n" };
            match &cli.output {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, out) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{out}"),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn render<R: serde::Serialize + Tabular>(report: &R, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => serde_json::to_string_pretty(report).map_err(input_err),
        Format::Markdown => Ok(report.table().to_markdown()),
        Format::Csv => Ok(report.table().to_csv()),
    }
}

fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Nu => {
            let spec: NilpotentJson = parse_json(&read_input(&cli.input)?)?;
            let op = to_operator(&spec)?;
            render(&NuReport::build(&op), cli.format)
        }
        Command::Filtration => {
            let spec: NilpotentJson = parse_json(&read_input(&cli.input)?)?;
            let op = to_operator(&spec)?;
            render(&FiltrationReport::build(&op), cli.format)
        }
        Command::NormalForm { r#type, b2 } => {
            let op = normal_form(NormalFormTag { reduction_type: *r#type, b2: *b2 })
                .map_err(validation_err)?;
            render(&NormalFormReport::build(*r#type, *b2, &op), cli.format)
        }
        Command::CliffordCheck { r, odd } => {
            let q = standard_bbf_gram(*r, *odd).map_err(validation_err)?;
            let report = CliffordReport::build(&q).map_err(validation_err)?;
            render(&report, cli.format)
        }
        Command::VerifyThm52 { b2, range } => {
            let (lo, hi) = match (b2, range) {
                (Some(b), None) => (*b, *b),
                (None, Some(r)) => parse_range(r)?,
                _ => return Err(CliError::Input("give exactly one of --b2 or --range".into())),
            };
            let mut rows = Vec::new();
            for b in lo..=hi {
                let cases = verify_cases(b).map_err(validation_err)?;
                for case in cases {
                    rows.push(CaseRow::build(b, &case));
                }
            }
            render(&CaseTable { rows }, cli.format)
        }
        Command::WeylMax => {
            let spec: WeylMaxInput = parse_json(&read_input(&cli.input)?)?;
            let w = WeightJson { family: spec.family, rank: spec.rank, coords: spec.lambda };
            let (lambda, rs) = w.to_weight().map_err(input_err)?;
            if spec.h.len() != rs.rank {
                return Err(CliError::Input("cocharacter length must equal the rank".into()));
            }
            let value = weyl_orbit_max(&lambda, &spec.h, &rs).map_err(validation_err)?;
            render(&WeylMaxReport { value: llv::format_rat(&value) }, cli.format)
        }
        Command::Branch => {
            let spec: BranchInput = parse_json(&read_input(&cli.input)?)?;
            let report = BranchReport::build(&spec).map_err(input_err)?;
            render(&report, cli.format)
        }
        Command::Criterion => {
            let spec: DecompositionJson = parse_json(&read_input(&cli.input)?)?;
            let d = spec.to_decomposition().map_err(input_err)?;
            let report = theorem71_check(&d).map_err(validation_err)?;
            let wrapped = CriterionReport::build(&report);
            let rendered = render(&wrapped, cli.format)?;
            if !report.agree {
                // would contradict the equivalence: bad input or a bug
                eprintln!("{rendered}");
                return Err(CliError::Validation(
                    "conditions disagree on this decomposition".into(),
                ));
            }
            Ok(rendered)
        }
        Command::Predict { r#type, odd } => {
            let spec: DecompositionJson = parse_json(&read_input(&cli.input)?)?;
            let d = spec.to_decomposition().map_err(input_err)?;
            let table = build_prediction(&d, *r#type, *odd)?;
            render(&PredictReport::build(&table), cli.format)
        }
        Command::LlvToy { b2 } => {
            let report = LlvToyReport::build(*b2).map_err(validation_err)?;
            let rendered = render(&report, cli.format)?;
            if !report.matches {
                return Err(CliError::Validation(format!(
                    "generated dimension {} differs from the orthogonal target {}",
                    report.generated_dim, report.target_dim
                )));
            }
            Ok(rendered)
        }
    }
}

fn to_operator(spec: &NilpotentJson) -> Result<llv::NilpotentOperator, CliError> {
    match spec.to_operator() {
        Ok(op) => Ok(op),
        Err(llv::Error::Parse(m)) => Err(CliError::Input(m)),
        Err(e) => Err(validation_err(e)),
    }
}

fn parse_range(s: &str) -> Result<(usize, usize), CliError> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| CliError::Input(format!("range must look like 4..24, got `{s}`")))?;
    let lo = lo.trim().parse().map_err(input_err)?;
    let hi = hi.trim().parse().map_err(input_err)?;
    if lo > hi {
        return Err(CliError::Input("empty range".into()));
    }
    Ok((lo, hi))
}

fn build_prediction(
    d: &LlvDecomposition,
    t: ReductionType,
    odd: bool,
) -> Result<NuTable, CliError> {
    use llv::predict::{DeformationTypeData, NuEntry};
    let even = predict_nu_even(d, t).map_err(validation_err)?;
    let odd_entries = if odd {
        // half-integral components of the input drive the odd rows; a
        // b2 = 7 decomposition without them falls back to the generalized
        // Kummer data, anything else is rejected
        let comps = odd_components_by_degree(d);
        if !comps.is_empty() {
            let mut entries =
                predict_nu_odd_from_components(d.n, d.b2, &comps, t).map_err(validation_err)?;
            // degrees with no supplied components carry only what the
            // general statements give: zero for type I, the 2i-1 bound
            // otherwise, sharpened to equality for type III when the
            // third cohomology is nonzero
            let degree3_present = comps.contains_key(&3);
            for i in 1..d.n {
                let degree = 2 * i + 1;
                entries.entry(degree).or_insert(match t {
                    ReductionType::I => NuEntry::Exact(0),
                    ReductionType::III if degree3_present => NuEntry::Exact((2 * i - 1) as u64),
                    _ => NuEntry::AtMost((2 * i - 1) as u64),
                });
            }
            Some(entries)
        } else if d.b2 == 7 {
            let data = DeformationTypeData::kumn(d.n).map_err(validation_err)?;
            Some(llv::predict::predict_nu_odd(&data, t).map_err(validation_err)?)
        } else {
            return Err(CliError::Validation(
                "odd-degree predictions need half-integral components or b2 = 7 data".into(),
            ));
        }
    } else {
        None
    };
    NuTable::assemble(t, d.n, &even, odd_entries.as_ref()).map_err(validation_err)
}

/// Groups the half-integral components of a decomposition by the odd
/// degree of each graded piece of their restriction.
fn odd_components_by_degree(
    d: &LlvDecomposition,
) -> std::collections::BTreeMap<usize, Vec<(llv::HighestWeight, u64)>> {
    use llv::weights::{grade_and_branch, DegreeParity};
    let mut out: std::collections::BTreeMap<usize, Vec<(llv::HighestWeight, u64)>> =
        std::collections::BTreeMap::new();
    let ambient = d.ambient_system();
    let target = d.target_system();
    for c in d.components.iter().filter(|c| c.parity == DegreeParity::Odd) {
        let Ok(branched) = grade_and_branch(&c.mu, &ambient, &target) else { continue };
        for (h_eig, comps) in branched {
            let degree = 2 * d.n as i64 + h_eig;
            if degree < 3 || degree > 2 * d.n as i64 - 1 {
                continue;
            }
            let slot = out.entry(degree as usize).or_default();
            for comp in comps {
                slot.push((comp.weight, comp.mult * c.mult));
            }
        }
    }
    out
}

#[derive(Deserialize)]
struct WeylMaxInput {
    family: llv::Family,
    rank: usize,
    lambda: Vec<String>,
    h: Vec<i64>,
}

#[derive(Deserialize)]
pub struct BranchInput {
    pub b2: usize,
    pub mu: Vec<String>,
}
