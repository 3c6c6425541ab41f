use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use posdet::boxmod::BoxModule;
use posdet::format::{parse_document, Document};
use posdet::harness::{
    parse_field, reference_examples, replay, run_check, seq_cm_fixtures, Check, CheckReport, FixtureReport, Repro,
    SuiteOptions,
};
use posdet::homological::{betti_table, classify, ext_box, ext_window, minimal_resolution};
use posdet::lattice::{ExponentVector, Window};
use posdet::linalg::Field;

#[derive(Parser)]
#[command(name = "posdet", version, about = "Positively t-determined multigraded modules")]
struct Cli {
    /// Coefficient field: `q` or `fp:<prime>`.
    #[arg(long, global = true, default_value = "q")]
    field: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Radicals of the ideals in a file, or the support of r*M.
    Radical { file: PathBuf },
    /// Multigraded Betti numbers.
    Betti {
        file: PathBuf,
        /// Collapse to total degree.
        #[arg(long)]
        total: bool,
    },
    /// Krull dimension.
    Dim { file: PathBuf },
    /// Depth via the minimal resolution.
    Depth { file: PathBuf },
    /// Cohen-Macaulay type flags as JSON.
    Cm { file: PathBuf },
    /// Hilbert function of the Alexander dual A_t M.
    Adual { file: PathBuf },
    /// Hilbert function of Ext^p(M, S(-c)) on [0, t].
    Ext {
        file: PathBuf,
        #[arg(long)]
        p: usize,
        #[arg(long, value_enum, default_value = "t")]
        c: Twist,
    },
    /// Run property checks on random instances.
    Verify(VerifyArgs),
    /// Assert the two worked examples and the sequentially CM fixtures.
    #[command(alias = "paper-examples")]
    Examples,
    /// List the available checks.
    Checks,
}

#[derive(Clone, Copy, ValueEnum)]
enum Twist {
    One,
    T,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Check to run; repeatable. Defaults to every non-literal check.
    #[arg(long = "check")]
    checks: Vec<String>,
    /// Include the checks whose verbatim statements admit counterexamples.
    #[arg(long)]
    literal: bool,
    /// Instances per check; each check has its own default.
    #[arg(long)]
    count: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Rerun a stored reproduction file instead of sampling.
    #[arg(long)]
    replay: Option<PathBuf>,
    /// Write one JSON record per instance to this file (`-` for stdout).
    #[arg(long)]
    records: Option<PathBuf>,
    /// Write a reproduction file for each failure into this directory.
    #[arg(long)]
    repro_dir: Option<PathBuf>,
}

fn read_document(path: &Path) -> Result<Document> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_document(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_module(path: &Path, field: Field) -> Result<(Document, BoxModule)> {
    let doc = read_document(path)?;
    let m = doc.module(field).context("building the module")?;
    Ok((doc, m))
}

fn print_hilbert(m: &BoxModule) {
    for a in m.window().iter() {
        let d = m.dim_at(&a);
        if d > 0 {
            println!("{a}  {d}");
        }
    }
}

fn radical(path: &Path, field: Field) -> Result<()> {
    let (doc, m) = read_module(path, field)?;
    if !doc.ideals.is_empty() {
        for (name, i) in &doc.ideals {
            println!("sqrt {name} = {}", i.radical().display_with(&doc.variables));
        }
        return Ok(());
    }
    print_hilbert(&m.radical_functor()?);
    Ok(())
}

fn betti(path: &Path, field: Field, total: bool) -> Result<()> {
    let (_, m) = read_module(path, field)?;
    let table = betti_table(&m)?;
    if total {
        for ((i, d), count) in table.by_total_degree() {
            println!("{i}  {d}  {count}");
        }
    } else {
        print!("{table}");
    }
    Ok(())
}

fn nonzero(m: &BoxModule) -> Result<()> {
    if m.is_zero() {
        bail!("the module is zero");
    }
    Ok(())
}

fn ext(path: &Path, field: Field, p: usize, c: Twist) -> Result<()> {
    let (_, m) = read_module(path, field)?;
    let e = match c {
        Twist::T => ext_box(&m, p)?,
        Twist::One => {
            let t = m.bound()?;
            let one = ExponentVector::one(m.arity());
            ext_window(&minimal_resolution(&m)?, &one, p, &Window::bounded(&t), false)?
        }
    };
    print_hilbert(&e);
    Ok(())
}

fn print_fixtures(title: &str, report: &FixtureReport) {
    for case in &report.cases {
        let verdict = if case.passed { "PASS" } else { "FAIL" };
        println!("{verdict}  {title}.{}  {}", case.name, case.detail);
    }
}

fn examples(field: Field) -> Result<bool> {
    let reference = reference_examples(field)?;
    print_fixtures("examples", &reference);
    let seq = seq_cm_fixtures(field)?;
    print_fixtures("seq_cm", &seq);
    Ok(reference.is_pass() && seq.is_pass())
}

fn emit_records(reports: &[CheckReport], target: Option<&Path>) -> Result<()> {
    let Some(target) = target else {
        return Ok(());
    };
    let mut out: Box<dyn Write> = if target == Path::new("-") {
        Box::new(std::io::stdout().lock())
    } else {
        Box::new(fs::File::create(target).with_context(|| format!("creating {}", target.display()))?)
    };
    for report in reports {
        for record in &report.records {
            writeln!(out, "{}", serde_json::to_string(record)?)?;
        }
    }
    Ok(())
}

fn verify(args: &VerifyArgs, field: Field) -> Result<bool> {
    let reports = if let Some(path) = &args.replay {
        let repro = Repro::read(path).with_context(|| format!("reading {}", path.display()))?;
        vec![replay(&repro)?]
    } else {
        let checks: Vec<Check> = if args.checks.is_empty() {
            if args.literal {
                Check::ALL.to_vec()
            } else {
                Check::defaults()
            }
        } else {
            args.checks
                .iter()
                .map(|name| Check::from_name(name).with_context(|| format!("unknown check `{name}`")))
                .collect::<Result<_>>()?
        };
        let options = SuiteOptions {
            count: args.count,
            seed: args.seed,
            field,
            range: None,
        };
        let mut reports = Vec::new();
        for check in checks {
            let report = run_check(check, &options)?;
            println!("{}", report.summary_line());
            reports.push(report);
        }
        reports
    };
    if args.replay.is_some() {
        for r in &reports {
            println!("{}", r.summary_line());
        }
    }
    for r in &reports {
        for f in &r.failures {
            println!("FAIL {} seed {}: {}", f.check, f.seed, f.message);
            if let Some(dir) = &args.repro_dir {
                let path = f.write(dir)?;
                println!("     reproduction written to {}", path.display());
            }
        }
    }
    emit_records(&reports, args.records.as_deref())?;
    Ok(reports.iter().all(CheckReport::is_pass))
}

fn run(cli: Cli) -> Result<bool> {
    let field = parse_field(&cli.field)?;
    match cli.command {
        Command::Radical { file } => radical(&file, field)?,
        Command::Betti { file, total } => betti(&file, field, total)?,
        Command::Dim { file } => {
            let (_, m) = read_module(&file, field)?;
            println!("{}", m.annihilator_and_dim()?.dim);
        }
        Command::Depth { file } => {
            let (_, m) = read_module(&file, field)?;
            nonzero(&m)?;
            println!("{}", classify(&m)?.depth);
        }
        Command::Cm { file } => {
            let (_, m) = read_module(&file, field)?;
            nonzero(&m)?;
            println!("{}", serde_json::to_string(&classify(&m)?)?);
        }
        Command::Adual { file } => {
            let (_, m) = read_module(&file, field)?;
            print_hilbert(&m.alexander_dual()?);
        }
        Command::Ext { file, p, c } => ext(&file, field, p, c)?,
        Command::Verify(args) => return verify(&args, field),
        Command::Examples => return examples(field),
        Command::Checks => {
            for c in Check::ALL {
                let tag = if c.is_literal() { " (literal)" } else { "" };
                println!("{:<22} {}{tag}", c.name(), c.description());
            }
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
