//! Command-line interface. Exit codes: 0 all checks pass, 1 a check fails,
//! 2 usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use super::{census, orbits_cmd, rep_orbit, small_q, verify, HarnessError, OrbitReport, VerifyOptions};
use crate::cubic::{CubicModel, LineClass};
use crate::orbits::Method;

#[derive(Debug, Parser)]
#[command(name = "twcubic", version, about = "Line orbits of the twisted cubic in PG(3,q)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the number of lines of each class as CSV.
    Census {
        #[arg(long)]
        q: u32,
        /// Field modulus coefficients, constant term first.
        #[arg(long, value_delimiter = ',')]
        poly: Option<Vec<u16>>,
    },
    /// Split one class (or every line) into orbits and print JSON.
    Orbits {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        class: Option<LineClass>,
        #[arg(long, default_value = "bfs")]
        method: Method,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        dump_members: bool,
    },
    /// Check all orbit counts and sizes against the closed formulas.
    Verify {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long, default_value = "bfs")]
        method: Method,
        #[arg(long, value_delimiter = ',')]
        poly: Option<Vec<u16>>,
    },
    /// Orbit patterns for q = 2, 3, 4.
    SmallQ {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=4))]
        q: u32,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Orbit of a single line, given as "x0:x1:x2:x3;y0:y1:y2:y3" or a Plücker tuple.
    RepOrbit {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        line: String,
    },
    /// JSON dump of the cubic, its osculating planes, tangents and axis.
    Model {
        #[arg(long)]
        q: u32,
    },
}

enum Failure {
    Usage(String),
    Io(String),
}

impl From<HarnessError> for Failure {
    fn from(e: HarnessError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn print_report(report: &OrbitReport, json: Option<PathBuf>) -> Result<bool, Failure> {
    println!("q={} xi={} {} L_sigma={} L_EnG={}", report.q, report.xi, report.parity, report.l_sigma, report.l_eng);
    for v in &report.verdicts {
        println!("{}", v.line());
    }
    if let Some(path) = json {
        std::fs::write(path, report.to_json() + "\n")?;
    }
    Ok(report.all_pass())
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Census { q, poly } => {
            let c = census(q, poly.as_deref())?;
            print!("{}", c.to_csv());
            Ok(c.classes.iter().all(|(class, n)| class.expected_size(q) == Some(*n)))
        }
        Command::Orbits { q, class, method, out, dump_members } => {
            let p = orbits_cmd(q, class, method, dump_members)?;
            let text = p.to_json() + "\n";
            match out {
                Some(path) => std::fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(true)
        }
        Command::Verify { q, json, threads, method, poly } => {
            let opts = VerifyOptions { method, threads, modulus: poly, rho: None };
            print_report(&verify(q, &opts)?, json)
        }
        Command::SmallQ { q, json } => print_report(&small_q(q)?, json),
        Command::RepOrbit { q, line } => {
            let r = rep_orbit(q, &line)?;
            println!("{}", serde_json::to_string_pretty(&r).expect("serializes"));
            Ok(true)
        }
        Command::Model { q } => {
            let m = CubicModel::new(super::field(q, None)?);
            println!("{}", serde_json::to_string_pretty(&m.dump()).expect("serializes"));
            Ok(true)
        }
    }
}

/// Parses `std::env::args` and runs the selected command.
pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
