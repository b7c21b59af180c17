use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use bordered_splice::cfk::{parse_complex, Sign};
use bordered_splice::splice::{conjecture_check, predict_theorem, splice_report, survey, Knot, SpliceReport};
use bordered_splice::type_a::derive_cfa;
use bordered_splice::type_d::{find_durable_pairs, solve_gradings};
use bordered_splice::{Error, Result};

#[derive(Parser)]
#[command(
    name = "bsplice",
    version,
    about = "Bordered invariants of framed knot complements and L-space splices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum CfdFormat {
    Text,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum CfaFormat {
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Check a knot complex and print its invariants.
    Validate { file: PathBuf },
    /// Print the type D module of the framed complement.
    Cfd {
        file: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        framing: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: CfdFormat,
    },
    /// Print the type A operations of the framed complement.
    Cfa {
        file: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        framing: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: CfaFormat,
    },
    /// Compute the splice of two framed complements.
    #[command(allow_negative_numbers = true)]
    Splice {
        file1: PathBuf,
        n1: i64,
        file2: PathBuf,
        n2: i64,
        #[arg(long)]
        json: bool,
    },
    /// Splice over a grid of framings.
    Survey {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        range1: (i64, i64),
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        range2: (i64, i64),
        #[arg(long)]
        json: bool,
    },
    /// List durable and weakly durable pairs of the type D module.
    Durable {
        file: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        framing: i64,
    },
    /// Predicted answer and slope conditions, without computing homology.
    #[command(allow_negative_numbers = true)]
    Predict {
        file1: PathBuf,
        n1: i64,
        file2: PathBuf,
        n2: i64,
    },
}

fn parse_range(s: &str) -> std::result::Result<(i64, i64), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected <a>..<b>, got `{s}`"))?;
    let a: i64 = a.trim().parse().map_err(|e| format!("{a}: {e}"))?;
    let b: i64 = b
        .trim()
        .trim_start_matches('=')
        .parse()
        .map_err(|e| format!("{b}: {e}"))?;
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok((a, b))
}

fn load(path: &Path) -> Result<Knot> {
    let text = std::fs::read_to_string(path)?;
    let complex = parse_complex(&text)?;
    let name = path
        .file_stem()
        .map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned());
    Knot::new(name, complex)
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

fn print_report(r: &SpliceReport) {
    let prediction = match r.prediction.as_bool() {
        Some(b) => b.to_string(),
        None => "out-of-theorem-scope".into(),
    };
    println!(
        "{} [{}] x {} [{}]: ranks ({}, {}), L-space {}, predicted {}, {}",
        r.knot1.name,
        r.n1,
        r.knot2.name,
        r.n2,
        r.computed.rank0,
        r.computed.rank1,
        r.verdict,
        prediction,
        if r.agree { "agree" } else { "DISAGREE" },
    );
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Validate { file } => {
            let text = std::fs::read_to_string(&file)?;
            let complex = parse_complex(&text)?;
            let report = complex.validate();
            println!("generators: {}", complex.len());
            println!("d^2 = 0: {}", report.d_squared_zero);
            println!("filtered: {}", report.filtered);
            println!("reduced: {}", report.reduced);
            println!("vertical homology rank: {}", report.vertical_homology_rank);
            println!("horizontal homology rank: {}", report.horizontal_homology_rank);
            for w in &report.warnings {
                println!("warning: {w}");
            }
            if !report.passed() {
                for f in report.failures() {
                    eprintln!("error: {f}");
                }
                return Ok(ExitCode::from(1));
            }
            let knot = Knot::new(file.display().to_string(), complex)?;
            let inv = &knot.bases.invariants;
            println!("tau: {}", inv.tau);
            println!("genus: {}", inv.genus);
            println!("lspace_form: {}", inv.lspace_form);
            if let (Some(sign), Some(steps)) = (inv.sign, &inv.steps) {
                let sign = if sign == Sign::Plus { "+" } else { "-" };
                let steps: Vec<String> = steps.iter().map(|s| s.to_string()).collect();
                println!("staircase: {sign} {}", steps.join(" "));
            }
        }
        Command::Cfd { file, framing, format } => {
            let m = solve_gradings(&load(&file)?.cfd(framing)?)?;
            match format {
                CfdFormat::Text => print!("{}", m.to_text()),
                CfdFormat::Dot => print!("{}", m.to_dot()),
            }
        }
        Command::Cfa {
            file,
            framing,
            format: CfaFormat::Text,
        } => {
            let a = derive_cfa(&load(&file)?.cfd(framing)?)?;
            let report = a.validate();
            if !report.passed() {
                return Err(Error::Invariant(report.problems.join("; ")));
            }
            print!("{}", a.to_text());
        }
        Command::Splice {
            file1,
            n1,
            file2,
            n2,
            json: as_json,
        } => {
            let r = splice_report(&load(&file1)?, n1, &load(&file2)?, n2)?;
            if as_json {
                println!("{}", json(&r));
            } else {
                print_report(&r);
            }
        }
        Command::Survey {
            file1,
            file2,
            range1,
            range2,
            json: as_json,
        } => {
            let s = survey(&load(&file1)?, range1.0..=range1.1, &load(&file2)?, range2.0..=range2.1)?;
            if as_json {
                println!("{}", json(&s));
            } else {
                for r in &s.rows {
                    print_report(r);
                }
                println!(
                    "{} rows, {} agree, {} disagree",
                    s.rows.len(),
                    s.agreements,
                    s.disagreements
                );
            }
        }
        Command::Durable { file, framing } => {
            let knot = load(&file)?;
            let m = knot.cfd(framing)?;
            let pairs = find_durable_pairs(&m, &knot.bases);
            if pairs.is_empty() {
                println!("no durable pairs");
            }
            for p in pairs {
                println!("{:?}: {} -> {}", p.strength, m.describe(&p.x), m.describe(&p.y));
            }
        }
        Command::Predict { file1, n1, file2, n2 } => {
            let (k1, k2) = (load(&file1)?, load(&file2)?);
            let p = predict_theorem(k1.tau(), k1.lspace_form(), n1, k2.tau(), k2.lspace_form(), n2);
            match p.as_bool() {
                Some(b) => println!("predicted L-space: {b}"),
                None => println!("predicted L-space: out-of-theorem-scope"),
            }
            println!(
                "slope conditions: {}",
                json(&conjecture_check(k1.tau(), n1, n2, k2.tau()))
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_validation() { 1 } else { 2 })
        }
    }
}
