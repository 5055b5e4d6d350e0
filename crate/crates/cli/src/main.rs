use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kroncode::analyze::{
    analyze, reproduce_counterexample, AnalysisConfig, Counterexample, DEFAULT_BUDGET,
};
use kroncode::construct::min_distance_is_3;
use kroncode::{hamming_check, kron_cr_code, kron_up_code, repetition_check, CodeSpec};
use kroncode_cli::verify::{self, VerifyRow};
use kroncode_cli::{CliError, CodeFile, ReportFile, Result};

#[derive(Parser)]
#[command(
    name = "kroncode",
    version,
    about = "Kronecker product codes over GF(q): construction and exhaustive analysis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct BudgetArg {
    /// Maximum syndrome-space size (q^(n-k)) to enumerate.
    #[arg(long, env = "KRONCODE_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    /// Hamming ⊗ Hamming
    Cr,
    /// repetition ⊗ Hamming
    Up,
    Hamming,
    Repetition,
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepArg {
    Cr,
    Up,
}

#[derive(Subcommand)]
enum Command {
    /// Build a code and write its CodeFile.
    Construct {
        family: FamilyArg,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        ma: Option<usize>,
        #[arg(long)]
        mb: Option<usize>,
        #[arg(long)]
        na: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Output path; stdout if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Analyze a CodeFile and emit a report.
    Analyze {
        input: PathBuf,
        /// Report path; stdout if omitted.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Include wall-clock time in the report.
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Compare computed properties with closed-form predictions over a grid.
    Verify {
        sweep: Option<SweepArg>,
        /// Semicolon-separated triples, e.g. "2,2,2;2,2,3".
        #[arg(long)]
        grid: Option<String>,
        /// Verify a single CodeFile against its family instead of a sweep.
        #[arg(long, conflicts_with_all = ["sweep", "grid"])]
        code: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = VerifyFormat::Table)]
        format: VerifyFormat,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Replay a weight-2 counterexample to complete regularity.
    Repro {
        /// binary28 or ternary12
        case: String,
        #[command(flatten)]
        budget: BudgetArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyFormat {
    Table,
    Csv,
}

fn require(v: Option<usize>, flag: &str) -> Result<usize> {
    v.ok_or_else(|| CliError::Usage(format!("missing --{flag}")))
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load(path: &Path) -> Result<CodeSpec> {
    CodeFile::from_json(&read(path)?)?.to_spec()
}

#[allow(clippy::too_many_arguments)]
fn construct(
    family: FamilyArg,
    q: u32,
    ma: Option<usize>,
    mb: Option<usize>,
    na: Option<usize>,
    m: Option<usize>,
    n: Option<usize>,
    out: Option<&Path>,
) -> Result<()> {
    let spec = match family {
        FamilyArg::Cr => kron_cr_code(q, require(ma, "ma")?, require(mb, "mb")?)?,
        FamilyArg::Up => kron_up_code(q, require(na, "na")?, require(m, "m")?)?,
        FamilyArg::Hamming => hamming_check(q, require(m, "m")?)?,
        FamilyArg::Repetition => repetition_check(q, require(n, "n")?)?,
    };
    let json = CodeFile::from_spec(&spec).to_json();
    let d = if min_distance_is_3(&spec) { "3" } else { "!=3" };
    let summary = format!(
        "[{},{},{}]_{} {}",
        spec.len(),
        spec.dimension(),
        d,
        spec.q(),
        spec.family()
    );
    match out {
        Some(path) => {
            write(path, &json)?;
            println!("{summary}");
        }
        None => {
            eprintln!("{summary}");
            print!("{json}");
        }
    }
    Ok(())
}

fn run_analyze(
    input: &Path,
    report: Option<&Path>,
    format: Format,
    timing: bool,
    budget: u64,
) -> Result<()> {
    let spec = load(input)?;
    let start = Instant::now();
    let r = analyze(&spec, &AnalysisConfig { budget })?;
    let mut file = ReportFile::new(&spec, &r)?;
    if timing {
        file.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    let text = match format {
        Format::Json => file.to_json(),
        Format::Csv => file.to_csv(),
    };
    match report {
        Some(path) => write(path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run_verify(
    sweep: Option<SweepArg>,
    grid: Option<&str>,
    code: Option<&Path>,
    format: VerifyFormat,
    budget: u64,
) -> Result<()> {
    let rows: Vec<VerifyRow> = match (code, sweep) {
        (Some(path), _) => vec![verify::verify_spec(&load(path)?, budget)?],
        (None, Some(SweepArg::Cr)) => {
            let g = grid.map(verify::parse_grid).transpose()?;
            verify::sweep_cr(g.as_deref().unwrap_or(&verify::DEFAULT_CR_GRID), budget)?
        }
        (None, Some(SweepArg::Up)) => {
            let g = grid.map(verify::parse_grid).transpose()?;
            verify::sweep_up(g.as_deref().unwrap_or(&verify::DEFAULT_UP_GRID), budget)?
        }
        (None, None) => return Err(CliError::Usage("verify needs `cr`, `up` or --code".into())),
    };
    match format {
        VerifyFormat::Table => print!("{}", verify::render_table(&rows)),
        VerifyFormat::Csv => print!("{}", verify::render_csv(&rows)),
    }
    let failed = rows.iter().filter(|r| !r.passed()).count();
    if failed > 0 {
        return Err(CliError::Mismatch(format!(
            "{failed} of {} instances failed",
            rows.len()
        )));
    }
    Ok(())
}

fn run_repro(case: &str, budget: u64) -> Result<()> {
    let case: Counterexample = case.parse()?;
    let rep = reproduce_counterexample(case, budget)?;
    let (x1, x2) = case.vectors();
    println!("{case}: [{},{}] code", rep.n, rep.k);
    for (label, text, check) in [("x1", x1, &rep.first), ("x2", x2, &rep.second)] {
        println!(
            "{label} = {text}  d(x, C) = {}  in C(2): {}  c = {}",
            check.distance,
            check.distance == 2,
            check.closer_neighbors
        );
    }
    let counts = rep.closer_counts();
    if counts == (4, 2) && rep.first.distance == 2 && rep.second.distance == 2 {
        println!("c_2 differs: {} vs {}", counts.0, counts.1);
        Ok(())
    } else {
        Err(CliError::Mismatch(format!(
            "expected c_2 values (4, 2), got ({}, {})",
            counts.0, counts.1
        )))
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Construct {
            family,
            q,
            ma,
            mb,
            na,
            m,
            n,
            out,
        } => construct(family, q, ma, mb, na, m, n, out.as_deref()),
        Command::Analyze {
            input,
            report,
            format,
            timing,
            budget,
        } => run_analyze(&input, report.as_deref(), format, timing, budget.budget),
        Command::Verify {
            sweep,
            grid,
            code,
            format,
            budget,
        } => run_verify(
            sweep,
            grid.as_deref(),
            code.as_deref(),
            format,
            budget.budget,
        ),
        Command::Repro { case, budget } => run_repro(&case, budget.budget),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
