//! Command line definitions and command implementations.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use runexp_core::bounds::{check_bounds, exceeds_lower_bound_target, Thresholds};
use runexp_core::exact::{self, Rounding};
use runexp_core::families::{FamilySpec, PAPER_W_MAX_INDEX};
use runexp_core::runs::{analyze, DEFAULT_ORACLE_CAP};
use runexp_core::{find_runs_bruteforce, verify_handle_properties, Alphabet, RunStats, Word};

use crate::error::CliError;
use crate::formats;
use crate::report::{bounds_json, OracleJson, StatsJson, VerifyReport};
use crate::tables::{self, TableId, TableRow};

/// Largest `w_i` index reproduced without `--large`.
pub const DEFAULT_TABLE_MAX: usize = 8;
/// Default length limit for generated words.
pub const DEFAULT_MAX_LEN: usize = 20_000_000;

#[derive(Debug, Parser)]
#[command(name = "runexp", version, about = "Runs, exponent sums and run handles in words")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a word from a family or file
    Generate {
        #[command(flatten)]
        input: InputArgs,
        /// Write the word here instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Count runs and sum their exponents
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Also print the run listing
        #[arg(long)]
        runs: bool,
        /// Compare with a published row, e.g. `w:5`, `franek-yang:3`, `padovan:12`
        #[arg(long, value_name = "TABLE:I")]
        expect: Option<String>,
        #[command(flatten)]
        thresholds: ThresholdArgs,
    },
    /// Print the run listing
    Runs {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Check runs against the brute-force oracle, handle properties and known bounds
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Longest word checked against the brute-force oracle
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: usize,
        #[command(flatten)]
        thresholds: ThresholdArgs,
    },
    /// Reproduce the table of sums of exponents for the binary family w_i
    Table3 {
        #[arg(long, default_value_t = DEFAULT_TABLE_MAX)]
        max_i: usize,
        /// Allow i = 9 and 10
        #[arg(long)]
        large: bool,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
        /// Also write table3.md and table3.csv into this directory
        #[arg(long)]
        output_dir: Option<PathBuf>,
    },
    /// Check exactly whether sigma(u)/|u| exceeds the lower-bound target for u = (w_i)^k
    CertifyLowerBound {
        #[arg(long, default_value_t = 8)]
        i: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Use a family file instead of the built-in family
        #[arg(long)]
        family_spec: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_LEN)]
        max_len: usize,
        #[command(flatten)]
        thresholds: ThresholdArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Md,
    Csv,
    Json,
}

/// Where the word comes from. Exactly one source must be given.
#[derive(Debug, Clone, Default, Args)]
pub struct InputArgs {
    /// Word file
    pub file: Option<PathBuf>,
    /// Literal word
    #[arg(long)]
    pub text: Option<String>,
    /// Member i of the built-in binary family
    #[arg(long, value_name = "I")]
    pub w: Option<usize>,
    /// Family file; member chosen with --index
    #[arg(long, value_name = "FILE")]
    pub family_spec: Option<PathBuf>,
    #[arg(long, value_name = "I")]
    pub index: Option<usize>,
    /// Repeat the word k times
    #[arg(long, default_value_t = 1)]
    pub power: usize,
    /// Declared alphabet for file and literal input (default: letters present)
    #[arg(long)]
    pub alphabet: Option<String>,
    #[arg(long, default_value_t = DEFAULT_MAX_LEN)]
    pub max_len: usize,
}

#[derive(Debug, Clone, Default, Args)]
pub struct ThresholdArgs {
    /// Override a bound constant, e.g. `runs_bound=1.029`
    #[arg(long = "threshold", value_name = "NAME=VALUE")]
    pub overrides: Vec<String>,
}

impl ThresholdArgs {
    pub fn resolve(&self) -> Result<Thresholds, CliError> {
        let mut t = Thresholds::default();
        for o in &self.overrides {
            let (name, value) = o
                .split_once('=')
                .ok_or_else(|| CliError::usage(format!("--threshold expects NAME=VALUE, got {o:?}")))?;
            let value = exact::parse_decimal(value.trim())?;
            if !t.set(name.trim(), value) {
                return Err(CliError::usage(format!(
                    "unknown threshold {name:?}; expected one of {}",
                    Thresholds::NAMES.join(", ")
                )));
            }
        }
        Ok(t)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_pass(pass: bool) -> Self {
        if pass {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load_family(path: &Path) -> Result<FamilySpec, CliError> {
    let shown = path.display().to_string();
    formats::parse_family(&read(path)?, &shown).map_err(|source| CliError::Format { path: shown, source })
}

pub fn load_word_file(path: &Path, alphabet: Option<Alphabet>) -> Result<Word, CliError> {
    formats::parse_word(&read(path)?, alphabet).map_err(|source| CliError::Format {
        path: path.display().to_string(),
        source,
    })
}

/// Resolves the input to a word and a short label for reports.
pub fn load_input(input: &InputArgs) -> Result<(String, Word), CliError> {
    let given = [
        input.file.is_some(),
        input.text.is_some(),
        input.w.is_some(),
        input.family_spec.is_some(),
    ]
    .iter()
    .filter(|&&b| b)
    .count();
    if given != 1 {
        return Err(CliError::usage(
            "give exactly one of FILE, --text, --w, --family-spec",
        ));
    }
    if input.index.is_some() && input.family_spec.is_none() {
        return Err(CliError::usage("--index needs --family-spec"));
    }
    let alphabet = input.alphabet.as_deref().map(Alphabet::new).transpose()?;

    let (label, base) = if let Some(path) = &input.file {
        (path.display().to_string(), load_word_file(path, alphabet)?)
    } else if let Some(text) = &input.text {
        let w = match alphabet {
            Some(a) => Word::from_text(text, a)?,
            None => Word::from_text_inferred(text)?,
        };
        (format!("{text:?}"), w)
    } else if let Some(i) = input.w {
        if !(1..=PAPER_W_MAX_INDEX).contains(&i) {
            return Err(runexp_core::Error::IndexOutOfRange {
                index: i,
                max: PAPER_W_MAX_INDEX,
            }
            .into());
        }
        (
            format!("w_{i}"),
            FamilySpec::paper_w().generate_bounded(i, input.max_len)?,
        )
    } else {
        let path = input.family_spec.as_ref().expect("counted above");
        let spec = load_family(path)?;
        let i = input
            .index
            .ok_or_else(|| CliError::usage("--family-spec needs --index"))?;
        (format!("{}_{i}", spec.name), spec.generate_bounded(i, input.max_len)?)
    };

    if input.power == 1 {
        return Ok((label, base));
    }
    let total = base.len() as u128 * input.power as u128;
    if total > input.max_len as u128 {
        return Err(runexp_core::Error::TooLong {
            len: total,
            limit: input.max_len as u128,
        }
        .into());
    }
    Ok((format!("({label})^{}", input.power), base.power(input.power)?))
}

fn parse_expect(spec: &str) -> Result<&'static tables::ExpectedRow, CliError> {
    let (table, i) = spec
        .split_once(':')
        .ok_or_else(|| CliError::usage(format!("--expect wants TABLE:I, got {spec:?}")))?;
    let table = TableId::parse(table)
        .ok_or_else(|| CliError::usage(format!("unknown table {table:?} (w, franek-yang, padovan)")))?;
    let i: usize = i
        .parse()
        .map_err(|_| CliError::usage(format!("bad row index {i:?}")))?;
    table
        .row(i)
        .ok_or_else(|| CliError::usage(format!("table {spec:?} has no row {i}")))
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<Status, CliError> {
    match cli.command {
        Command::Generate { input, output } => {
            let (_, w) = load_input(&input)?;
            let body = formats::format_word(&w);
            match output {
                Some(path) => std::fs::write(&path, body).map_err(|source| CliError::Io { path, source })?,
                None => out.write_all(body.as_bytes())?,
            }
            Ok(Status::Pass)
        }
        Command::Analyze {
            input,
            format,
            runs,
            expect,
            thresholds,
        } => cmd_analyze(&input, format, runs, expect.as_deref(), &thresholds.resolve()?, out, err),
        Command::Runs { input } => {
            let (_, w) = load_input(&input)?;
            let (runs, _) = analyze(&w);
            out.write_all(formats::format_listing(&runs).as_bytes())?;
            Ok(Status::Pass)
        }
        Command::Verify {
            input,
            oracle_cap,
            thresholds,
        } => cmd_verify(&input, oracle_cap, &thresholds.resolve()?, out, err),
        Command::Table3 {
            max_i,
            large,
            format,
            output_dir,
        } => cmd_table3(max_i, large, format, output_dir.as_deref(), out, err),
        Command::CertifyLowerBound {
            i,
            k,
            family_spec,
            max_len,
            thresholds,
        } => cmd_certify(i, k, family_spec.as_deref(), max_len, &thresholds.resolve()?, out),
    }
}

fn stats_text(label: &str, s: &RunStats) -> String {
    let j = StatsJson::from(s);
    format!(
        "input: {label}\nn: {}\nrho: {}\nrho/n: {}\nsigma: {} ({})\nsigma/n: {}\nrho_cubic: {}\nsigma_cubic: {} ({})\n",
        j.n, j.rho, j.rho_over_n, j.sigma, j.sigma_exact, j.sigma_over_n, j.rho_cubic, j.sigma_cubic, j.sigma_cubic_exact
    )
}

const STATS_COLUMNS: [&str; 9] = [
    "n",
    "rho",
    "rho_over_n",
    "sigma",
    "sigma_over_n",
    "rho_cubic",
    "sigma_cubic",
    "sigma_exact",
    "sigma_cubic_exact",
];

fn stats_cells(s: &RunStats) -> [String; 9] {
    let j = StatsJson::from(s);
    [
        j.n.to_string(),
        j.rho.to_string(),
        j.rho_over_n,
        j.sigma,
        j.sigma_over_n,
        j.rho_cubic.to_string(),
        j.sigma_cubic,
        j.sigma_exact,
        j.sigma_cubic_exact,
    ]
}

pub fn cmd_analyze(
    input: &InputArgs,
    format: Format,
    list_runs: bool,
    expect: Option<&str>,
    thresholds: &Thresholds,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<Status, CliError> {
    let expected = expect.map(parse_expect).transpose()?;
    let (label, w) = load_input(input)?;
    let (runs, stats) = analyze(&w);
    let bounds = check_bounds(&stats, thresholds);

    match format {
        Format::Text => out.write_all(stats_text(&label, &stats).as_bytes())?,
        Format::Json => {
            let value = serde_json::json!({
                "input": label,
                "stats": StatsJson::from(&stats),
                "bounds": bounds_json(&bounds),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("json"))?;
        }
        Format::Md => {
            writeln!(out, "| {} |", STATS_COLUMNS.join(" | "))?;
            writeln!(out, "|{}", "---:|".repeat(STATS_COLUMNS.len()))?;
            writeln!(out, "| {} |", stats_cells(&stats).join(" | "))?;
        }
        Format::Csv => {
            writeln!(out, "{}", STATS_COLUMNS.join(","))?;
            writeln!(out, "{}", stats_cells(&stats).join(","))?;
        }
    }
    if list_runs {
        out.write_all(formats::format_listing(&runs).as_bytes())?;
    }

    let mut pass = true;
    for (name, holds) in bounds.entries() {
        if !holds {
            writeln!(err, "bound violated: {name}")?;
            pass = false;
        }
    }
    if let Some(row) = expected {
        let mismatches = tables::compare(row, &stats);
        for m in &mismatches {
            writeln!(err, "mismatch in {}: expected {}, computed {}", m.column, m.expected, m.computed)?;
        }
        if mismatches.is_empty() {
            writeln!(err, "matches published row {}", expect.unwrap_or_default())?;
        }
        pass &= mismatches.is_empty();
    }
    Ok(Status::from_pass(pass))
}

/// Builds the full verification report for a word.
pub fn verify_word(label: &str, w: &Word, oracle_cap: usize, thresholds: &Thresholds) -> VerifyReport {
    let (runs, stats) = analyze(w);
    let oracle = match find_runs_bruteforce(w, oracle_cap) {
        Ok(slow) => OracleJson {
            checked: true,
            cap: oracle_cap,
            agrees: Some(slow == runs),
        },
        Err(_) => OracleJson {
            checked: false,
            cap: oracle_cap,
            agrees: None,
        },
    };
    let handles = verify_handle_properties(w, &runs);
    let bounds = check_bounds(&stats, thresholds);
    let pass = oracle.agrees != Some(false) && handles.all_pass() && bounds.all_pass();
    VerifyReport {
        input: label.to_string(),
        stats: (&stats).into(),
        oracle,
        handles: (&handles).into(),
        bounds: bounds_json(&bounds),
        pass,
    }
}

pub fn cmd_verify(
    input: &InputArgs,
    oracle_cap: usize,
    thresholds: &Thresholds,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<Status, CliError> {
    let (label, w) = load_input(input)?;
    let report = verify_word(&label, &w, oracle_cap, thresholds);
    writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("json"))?;
    writeln!(
        err,
        "{label}: {}",
        if report.pass { "all checks pass" } else { "verification FAILED" }
    )?;
    Ok(Status::from_pass(report.pass))
}

/// Computes rows `1..=max_i` of the `w_i` table with their comparison.
pub fn table3_rows(max_i: usize) -> Result<Vec<TableRow>, CliError> {
    let spec = FamilySpec::paper_w();
    (1..=max_i)
        .map(|i| {
            let predicted = spec.predicted_length(i)?;
            let w = spec.generate(i)?;
            // letter-count prediction guards the morphism transcription
            if predicted != w.len() as u128 {
                return Err(CliError::usage(format!(
                    "length prediction {predicted} disagrees with generated length {} for i = {i}",
                    w.len()
                )));
            }
            let (_, stats) = analyze(&w);
            Ok(TableRow::new(i, &stats, TableId::W.row(i)))
        })
        .collect()
}

pub fn cmd_table3(
    max_i: usize,
    large: bool,
    format: Format,
    output_dir: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<Status, CliError> {
    if max_i == 0 || max_i > PAPER_W_MAX_INDEX {
        return Err(CliError::usage(format!(
            "--max-i must be in 1..={PAPER_W_MAX_INDEX}"
        )));
    }
    if max_i > DEFAULT_TABLE_MAX && !large {
        return Err(CliError::usage(format!(
            "--max-i above {DEFAULT_TABLE_MAX} needs --large"
        )));
    }
    let rows = table3_rows(max_i)?;
    let rendered = match format {
        Format::Md | Format::Text => tables::to_markdown(&rows),
        Format::Csv => tables::to_csv(&rows),
        Format::Json => tables::to_json(&rows) + "\n",
    };
    out.write_all(rendered.as_bytes())?;
    if let Some(dir) = output_dir {
        for (name, body) in [
            ("table3.md", tables::to_markdown(&rows)),
            ("table3.csv", tables::to_csv(&rows)),
        ] {
            let path = dir.join(name);
            std::fs::write(&path, body).map_err(|source| CliError::Io { path, source })?;
        }
    }
    let mut pass = true;
    for r in &rows {
        for m in r.mismatches.iter().flatten() {
            writeln!(
                err,
                "row {}: {} expected {}, computed {}",
                r.i, m.column, m.expected, m.computed
            )?;
            pass = false;
        }
    }
    Ok(Status::from_pass(pass))
}

/// Outcome of the lower-bound check on `(w_i)^k`.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub label: String,
    pub stats: RunStats,
    pub exceeds: bool,
}

pub fn certify(
    spec: &FamilySpec,
    i: usize,
    k: usize,
    max_len: usize,
    thresholds: &Thresholds,
) -> Result<Certificate, CliError> {
    if k == 0 {
        return Err(runexp_core::Error::ZeroPower.into());
    }
    let base_len = spec.predicted_length(i)?;
    let total = base_len.saturating_mul(k as u128);
    if total > max_len as u128 {
        return Err(runexp_core::Error::TooLong {
            len: total,
            limit: max_len as u128,
        }
        .into());
    }
    let w = spec.generate(i)?.power(k)?;
    let (_, stats) = analyze(&w);
    let exceeds = exceeds_lower_bound_target(&stats, thresholds);
    Ok(Certificate {
        label: format!("({}_{i})^{k}", spec.name),
        stats,
        exceeds,
    })
}

pub fn cmd_certify(
    i: usize,
    k: usize,
    family_spec: Option<&Path>,
    max_len: usize,
    thresholds: &Thresholds,
    out: &mut dyn Write,
) -> Result<Status, CliError> {
    let spec = match family_spec {
        Some(path) => load_family(path)?,
        None => {
            if !(1..=PAPER_W_MAX_INDEX).contains(&i) {
                return Err(runexp_core::Error::IndexOutOfRange {
                    index: i,
                    max: PAPER_W_MAX_INDEX,
                }
                .into());
            }
            FamilySpec::paper_w()
        }
    };
    let c = certify(&spec, i, k, max_len, thresholds)?;
    let ratio = c.stats.sigma_over_n();
    writeln!(out, "word: {}", c.label)?;
    writeln!(out, "n: {}", c.stats.n)?;
    writeln!(out, "sigma: {}", exact::to_fraction(&c.stats.sigma))?;
    writeln!(
        out,
        "sigma/n: {} ({})",
        exact::to_decimal(&ratio, 6, Rounding::HalfUp),
        exact::to_fraction(&ratio)
    )?;
    writeln!(
        out,
        "target: {}",
        exact::to_fraction(&thresholds.lower_bound_target)
    )?;
    writeln!(out, "verdict: {}", if c.exceeds { "PASS" } else { "FAIL" })?;
    Ok(Status::from_pass(c.exceeds))
}
