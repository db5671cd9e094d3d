//! Command-line front end.
//!
//! Six subcommands: `profile`, `encode`, `decode`, `verify`, `sweep`,
//! `wiretap`. Every command takes exactly one code source (`--builtin`,
//! `--dense`, or `--alist`), an optional `--cap`, and an optional `--out`;
//! randomized operations require an explicit `--seed` so every run is
//! reproducible.
//!
//! Exit statuses: 0 success, 2 user/input error, 3 enumeration cap
//! exceeded.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::analysis::{all_messages, dual_distance, profile};
use crate::code::{CodeSpec, LinearCode};
use crate::coset::{decode, encode, BitSource, Codeword, Message};
use crate::report::{distribution_map, to_json_string, NmReportDoc, SweepDoc, WiretapDoc};
use crate::tamper::TamperFunction;
use crate::verify::{sweep_family, tamper_sampled, verify_theorem, wiretap_leakage};
use crate::{Cap, Error, Result};

#[derive(Debug, Parser)]
#[command(
    name = "coset-nmc",
    about = "Linear coset codes as non-malleable codes: encoding, tampering experiments, and exact verification"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute block length, dimension, distances, generalized weights,
    /// and the non-malleability threshold.
    Profile {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Encode a message to a random member of its coset.
    Encode {
        #[command(flatten)]
        common: CommonArgs,
        /// Message bits, e.g. 101.
        #[arg(long, value_name = "BITS")]
        message: String,
    },
    /// Decode a word to its syndrome message.
    Decode {
        #[command(flatten)]
        common: CommonArgs,
        /// Word bits of length n.
        #[arg(long, value_name = "BITS")]
        word: String,
    },
    /// Verify non-malleability for one tamper function.
    Verify {
        #[command(flatten)]
        common: CommonArgs,
        /// Tamper actions over {k, f, 0, 1}, one per coordinate.
        #[arg(long, value_name = "STR")]
        tamper: String,
        /// Also sample the tampering experiment this many times per
        /// message (requires --seed) and report the empirical counts.
        #[arg(long, value_name = "INT")]
        trials: Option<u64>,
    },
    /// Verify every tamper function with at least this many constant
    /// coordinates and summarize.
    Sweep {
        #[command(flatten)]
        common: CommonArgs,
        /// Minimum number of set-to-constant coordinates.
        #[arg(long, value_name = "INT")]
        min_fixed: usize,
    },
    /// Mutual information exposed to an observer of chosen coordinates.
    Wiretap {
        #[command(flatten)]
        common: CommonArgs,
        /// Comma-separated 1-based coordinates, e.g. 1,2,3; may be empty.
        #[arg(long, value_name = "CSV")]
        positions: String,
    },
}

#[derive(Debug, Args)]
struct CommonArgs {
    #[command(flatten)]
    code: CodeArgs,

    /// Upper bound on any single exhaustive enumeration.
    #[arg(long, value_name = "INT", default_value_t = 1 << 20)]
    cap: u64,

    /// Seed for randomized operations (encoding, random codes, sampling).
    #[arg(long, value_name = "INT")]
    seed: Option<u64>,

    /// Write the output here instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct CodeArgs {
    /// Built-in code family: hamming:M, repetition:N, parity:N, random:NxR.
    #[arg(long, value_name = "NAME:PARAMS")]
    builtin: Option<String>,

    /// Dense matrix file ("r n" header, then r rows of {0,1}).
    #[arg(long, value_name = "PATH")]
    dense: Option<PathBuf>,

    /// MacKay alist matrix file.
    #[arg(long, value_name = "PATH")]
    alist: Option<PathBuf>,
}

impl CommonArgs {
    fn load_code(&self) -> Result<LinearCode> {
        let spec = if let Some(b) = &self.code.builtin {
            CodeSpec::parse_builtin(b)?
        } else if let Some(p) = &self.code.dense {
            CodeSpec::DenseFile(p.clone())
        } else if let Some(p) = &self.code.alist {
            CodeSpec::AlistFile(p.clone())
        } else {
            unreachable!("clap enforces exactly one code source");
        };
        spec.realize(self.seed)
    }

    fn cap(&self) -> Cap {
        Cap(self.cap)
    }

    fn require_seed(&self, what: &str) -> Result<u64> {
        self.seed
            .ok_or_else(|| Error::BadParams(format!("{what} requires --seed")))
    }

    fn emit(&self, text: &str) -> Result<()> {
        match &self.out {
            Some(path) => std::fs::write(path, text)?,
            None => print!("{text}"),
        }
        Ok(())
    }
}

/// Parses the entry point's arguments and runs; returns the process exit
/// code described in the module docs.
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::TooLarge { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn execute(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Profile { common } => {
            let code = common.load_code()?;
            let doc = profile(&code, common.cap())?;
            common.emit(&to_json_string(&doc)?)
        }
        Command::Encode { common, message } => {
            let code = common.load_code()?;
            let seed = common.require_seed("encode")?;
            let m: Message = message.parse()?;
            let x = encode(&code, &m, &mut BitSource::from_seed(seed))?;
            common.emit(&format!("{x}\n"))
        }
        Command::Decode { common, word } => {
            let code = common.load_code()?;
            let x: Codeword = word.parse()?;
            let m = decode(&code, &x)?;
            common.emit(&format!("{m}\n"))
        }
        Command::Verify {
            common,
            tamper,
            trials,
        } => {
            let code = common.load_code()?;
            let f: TamperFunction = tamper.parse()?;
            let report = verify_theorem(&code, &f, common.cap())?;
            let mut doc = NmReportDoc::new(&report);
            if let Some(trials) = trials {
                let seed = common.require_seed("--trials")?;
                let mut source = BitSource::from_seed(seed);
                let mut sampled = BTreeMap::new();
                for m in all_messages(code.r()) {
                    let d = tamper_sampled(&code, &f, &m, &mut source, trials)?;
                    sampled.insert(m.to_string(), distribution_map(&d));
                }
                doc.sampled = Some(sampled);
            }
            common.emit(&to_json_string(&doc)?)
        }
        Command::Sweep { common, min_fixed } => {
            let code = common.load_code()?;
            let summary = sweep_family(&code, min_fixed, common.cap())?;
            let d_dual = dual_distance(&code, common.cap())?;
            let doc = SweepDoc::new(code.label(), code.n(), d_dual, &summary);
            common.emit(&to_json_string(&doc)?)
        }
        Command::Wiretap { common, positions } => {
            let code = common.load_code()?;
            let observed = parse_positions(&positions)?;
            let leakage = wiretap_leakage(&code, &observed, common.cap())?;
            let doc = WiretapDoc {
                code: code.label().to_string(),
                positions: observed.iter().map(|&p| p + 1).collect(),
                positions_count: observed.len(),
                d_dual: dual_distance(&code, common.cap())?,
                leakage_bits: leakage,
            };
            common.emit(&to_json_string(&doc)?)
        }
    }
}

/// Parses a comma-separated list of 1-based coordinates into 0-based
/// indices; the empty string means "observe nothing".
fn parse_positions(csv: &str) -> Result<Vec<usize>> {
    if csv.trim().is_empty() {
        return Ok(Vec::new());
    }
    csv.split(',')
        .map(|token| {
            let p: usize = token
                .trim()
                .parse()
                .map_err(|_| Error::BadParams(format!("bad position {token:?}")))?;
            if p == 0 {
                return Err(Error::BadParams("positions are 1-based".into()));
            }
            Ok(p - 1)
        })
        .collect()
}
