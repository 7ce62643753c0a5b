use clap::{Args, Parser, Subcommand};
use semitrace_cli::commands::{self, FamilyArgs};
use semitrace_cli::report::{rows_to_csv, shift_rows_to_csv, to_sorted_json, Report, ShiftReport};
use std::path::PathBuf;
use std::process::ExitCode;

/// Canonical trace ideals and residues of numerical semigroups.
#[derive(Parser)]
#[command(name = "semitrace", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    output: OutputArgs,
    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for sampled corpora.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct OutputArgs {
    /// Emit the report as JSON (default when no format is chosen).
    #[arg(long, global = true)]
    json: bool,
    /// Emit the report rows as CSV.
    #[arg(long, global = true)]
    csv: bool,
    /// Write the report to a file; .csv extension selects CSV.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Basic invariants of the semigroup generated by GENS.
    Info { gens: Vec<i128> },
    /// Canonical trace ideal, sporadic elements and position.
    Trace {
        gens: Vec<i128>,
        /// Stress the dual computation with an enlarged scan window.
        #[arg(long)]
        window_override: Option<i128>,
    },
    /// Residue res(H) = |H \ tr(H)|.
    Residue { gens: Vec<i128> },
    /// Full classification record (symmetric, almost symmetric, nearly
    /// Gorenstein, bounds).
    Classify { gens: Vec<i128> },
    /// Structure matrix of a non-symmetric 3-generated semigroup.
    Matrix3 { gens: Vec<i128> },
    /// Construct a parametrized family member and verify its predictions.
    Family {
        #[arg(long, value_parser = ["arithmetic", "med", "tm1", "tm2", "conductor"])]
        kind: String,
        #[arg(long)]
        a: Option<i128>,
        #[arg(long)]
        b: Option<i128>,
        #[arg(long)]
        c: Option<i128>,
        #[arg(long)]
        d: Option<i128>,
        #[arg(long)]
        e: Option<i128>,
        #[arg(long)]
        m: Option<i128>,
        #[arg(long)]
        q: Option<i128>,
    },
    /// Scan the shifted family <j, j+a, j+b> and check the periodicity,
    /// symmetry and bound verdicts.
    #[command(name = "shift-scan")]
    ShiftScan {
        #[arg(long)]
        a: Option<i128>,
        #[arg(long)]
        b: Option<i128>,
        #[arg(long)]
        jmax: i128,
        /// Offsets a1,a2,...,ae for a general-family evidence scan.
        #[arg(long, value_delimiter = ',')]
        general: Option<Vec<i128>>,
    },
    /// Enumerate semigroups by bounded minimal generators.
    Enumerate {
        #[arg(long, value_parser = ["threegen", "bounded"])]
        kind: String,
        #[arg(long)]
        max: i128,
        #[arg(long, default_value_t = 4)]
        edim: usize,
        #[arg(long)]
        sample: Option<usize>,
    },
    /// Theorem sweeps; proved-statement violations exit 1.
    Experiment {
        #[arg(long, value_parser = ["q12", "cor13", "prop11", "prop22"])]
        name: String,
        #[arg(long, value_parser = ["threegen", "bounded"], default_value = "bounded")]
        corpus: String,
        #[arg(long)]
        max: i128,
        #[arg(long, default_value_t = 5)]
        edim: usize,
        #[arg(long)]
        sample: Option<usize>,
    },
}

enum AnyReport {
    Rows(Report),
    Shift(ShiftReport),
}

fn emit(report: &AnyReport, out: &OutputArgs) -> std::io::Result<()> {
    let want_csv = out.csv
        || out
            .out
            .as_ref()
            .and_then(|p| p.extension())
            .map(|e| e == "csv")
            .unwrap_or(false);
    let text = match (report, want_csv) {
        (AnyReport::Rows(r), false) => to_sorted_json(r),
        (AnyReport::Rows(r), true) => rows_to_csv(&r.rows),
        (AnyReport::Shift(r), false) => to_sorted_json(r),
        (AnyReport::Shift(r), true) => shift_rows_to_csv(&r.rows),
    };
    match &out.out {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| e.to_string())?;
    }
    let err2 = |e: semitrace::Error| e.to_string();
    let (report, code) = match &cli.command {
        Command::Info { gens } => (
            AnyReport::Rows(commands::cmd_single("info", gens, false).map_err(err2)?),
            0,
        ),
        Command::Trace {
            gens,
            window_override,
        } => {
            let rep = commands::cmd_single("trace", gens, false).map_err(err2)?;
            if let Some(slack) = window_override {
                let (h, _) = commands::input_semigroup(gens).map_err(err2)?;
                commands::check_window_override(&h, *slack).map_err(err2)?;
            }
            (AnyReport::Rows(rep), 0)
        }
        Command::Residue { gens } => (
            AnyReport::Rows(commands::cmd_single("residue", gens, false).map_err(err2)?),
            0,
        ),
        Command::Classify { gens } => (
            AnyReport::Rows(commands::cmd_single("classify", gens, false).map_err(err2)?),
            0,
        ),
        Command::Matrix3 { gens } => (
            AnyReport::Rows(commands::cmd_single("matrix3", gens, true).map_err(err2)?),
            0,
        ),
        Command::Family {
            kind,
            a,
            b,
            c,
            d,
            e,
            m,
            q,
        } => {
            let args = FamilyArgs {
                a: *a,
                b: *b,
                c: *c,
                d: *d,
                e: *e,
                m: *m,
                q: *q,
            };
            (
                AnyReport::Rows(commands::cmd_family(kind, &args).map_err(err2)?),
                0,
            )
        }
        Command::ShiftScan {
            a,
            b,
            jmax,
            general,
        } => {
            let rep = match general {
                Some(offsets) => commands::cmd_shift_scan_general(offsets, *jmax).map_err(err2)?,
                None => {
                    let a = a.ok_or("missing --a")?;
                    let b = b.ok_or("missing --b")?;
                    commands::cmd_shift_scan(a, b, *jmax).map_err(err2)?
                }
            };
            (AnyReport::Shift(rep), 0)
        }
        Command::Enumerate {
            kind,
            max,
            edim,
            sample,
        } => (
            AnyReport::Rows(
                commands::cmd_enumerate(kind, *max, *edim, *sample, cli.seed).map_err(err2)?,
            ),
            0,
        ),
        Command::Experiment {
            name,
            corpus,
            max,
            edim,
            sample,
        } => {
            let kind = commands::parse_experiment(name).map_err(err2)?;
            let (rep, outcome) =
                commands::cmd_experiment(kind, corpus, *max, *edim, *sample, cli.seed)
                    .map_err(err2)?;
            // Open-question findings are reported, not failed; proved-theorem
            // violations are bugs.
            let code = if !outcome.violations.is_empty() && !kind.is_open_question() {
                1
            } else {
                0
            };
            (AnyReport::Rows(rep), code)
        }
    };
    emit(&report, &cli.output).map_err(|e| e.to_string())?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
