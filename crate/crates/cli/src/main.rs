//! `lk`: build root systems and representation matrices, run verification
//! suites, compute heads and Charney lengths.

mod suites;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use lk_core::charney::{charney_length_bfs, charney_length_matrix};
use lk_core::garside::{head_l, star_act_word};
use lk_core::rep::GeneratorExport;
use lk_core::{ClosedSet, Family, LkRep, PositiveWord, Rational, RootSystem, SignedWord, TypeSpec};
use serde::Serialize;

use crate::suites::{Suite, SuiteConfig};

#[derive(Parser)]
#[command(name = "lk", version, about = "Lawrence-Krammer representations of ADE Artin groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct TypeArgs {
    /// Diagram family.
    #[arg(long = "type", value_name = "A|D|E")]
    family: Family,
    #[arg(long)]
    rank: usize,
}

impl TypeArgs {
    fn system(&self) -> Result<RootSystem> {
        Ok(RootSystem::build(TypeSpec::new(self.family, self.rank)?))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the positive roots and Cartan matrix as JSON.
    Roots {
        #[command(flatten)]
        ty: TypeArgs,
        /// Write roots.json here instead of printing it.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Write one JSON file per generator matrix σ_k plus the T-table.
    Rep {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run verification suites; the exit code is 0 iff every check passes.
    Verify {
        #[command(flatten)]
        ty: TypeArgs,
        /// Comma-separated suites; all of them when omitted.
        #[arg(long, value_delimiter = ',')]
        suite: Vec<Suite>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Specialization of r for the cone suites, as p/q.
        #[arg(long, default_value = "1/2")]
        r0: String,
        /// Write report.json (and the timings in timing.json) here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print the JSON report instead of a table.
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Word and Weyl-group enumeration budget.
        #[arg(long, env = "LK_BUDGET")]
        budget: Option<u128>,
    },
    /// Print the Charney length of a signed word from the matrix formula.
    Charney {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        word: String,
        /// Also search products of simple elements and require agreement.
        #[arg(long)]
        oracle: bool,
        /// Longest factorization the search may find.
        #[arg(long, default_value_t = 6)]
        maxlen: usize,
    },
    /// Print a reduced word for the head L(x) and the closed set x * ∅.
    Head {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        word: String,
    },
}

fn parse_r0(s: &str) -> Result<Rational> {
    let r: Rational = s.trim().parse().map_err(|_| anyhow::anyhow!("--r0 expects p/q, got {s:?}"))?;
    let zero = Rational::from_integer(0.into());
    let one = Rational::from_integer(1.into());
    if r <= zero || r >= one {
        bail!("--r0 must lie strictly between 0 and 1, got {r}");
    }
    Ok(r)
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let text = serde_json::to_string(value)?;
    fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Roots { ty, out, format: Format::Json } => {
            let rs = ty.system()?;
            match out {
                Some(dir) => {
                    fs::create_dir_all(&dir)?;
                    write_json(&dir.join("roots.json"), &rs.export())?;
                }
                None => println!("{}", serde_json::to_string(&rs.export())?),
            }
        }
        Command::Rep { ty, out, format: Format::Json } => {
            let rs = ty.system()?;
            let rep = LkRep::new(&rs)?;
            fs::create_dir_all(&out)?;
            for k in 0..rs.rank() {
                write_json(&out.join(format!("sigma_{}.json", k + 1)), &GeneratorExport::new(k, rep.sigma(k)))?;
            }
            write_json(&out.join("ttable.json"), &rep.table().export(&rs))?;
            println!("wrote {} generator matrices of size {} and ttable.json to {}", rs.rank(), rs.len(), out.display());
        }
        Command::Verify { ty, suite, seed, r0, out, format, budget } => {
            let rs = ty.system()?;
            let config = SuiteConfig { seed, r0: parse_r0(&r0)?, budget };
            let suites = if suite.is_empty() {
                let (all, note) = Suite::defaults(&rs, budget);
                if let Some(note) = note {
                    eprintln!("{note}");
                }
                all
            } else {
                suite
            };
            let report = suites::run(&rs, &suites, &config)?;
            if let Some(dir) = out {
                fs::create_dir_all(&dir)?;
                write_json(&dir.join("report.json"), &report.data)?;
                write_json(&dir.join("timing.json"), &report.timing)?;
            }
            match format {
                Some(Format::Json) => println!("{}", serde_json::to_string(&report.data)?),
                None => print!("{}", report.table()),
            }
            return Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::FAILURE });
        }
        Command::Charney { ty, word, oracle, maxlen } => {
            let rs = ty.system()?;
            let x = SignedWord::parse(&word, rs.rank())?;
            let rep = LkRep::new(&rs)?;
            let value = charney_length_matrix(&rep, &x);
            println!("{value}");
            if oracle {
                let found = charney_length_bfs(&rep, &x, maxlen)?;
                println!("oracle {found}");
                if found as i32 != value {
                    eprintln!("mismatch: matrix formula {value}, search {found}");
                    return Ok(ExitCode::FAILURE);
                }
            }
        }
        Command::Head { ty, word } => {
            let rs = ty.system()?;
            let x = PositiveWord::parse(&word, rs.rank())?;
            let head = head_l(&rs, &x);
            println!("{}", PositiveWord::new(head.reduced_word(&rs)));
            let set = star_act_word(&rs, &x, ClosedSet::empty());
            let roots: Vec<&[i32]> = set.set().iter().map(|b| rs.root(b).coords()).collect();
            println!("{}", serde_json::to_string(&roots)?);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
