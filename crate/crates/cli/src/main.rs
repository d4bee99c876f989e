//! `shiftlab`: algebraic shifting and related invariants from the command line.
//!
//! Every command prints JSON on stdout. `verify` prints one JSON line per check.
//!
//! Exit codes: 0 success, 1 unreadable or malformed input, 2 generic
//! computation unstable, 3 bad flags or parameters, 4 a verify check failed,
//! 5 any other error.

mod verify;

use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use shiftlab::homology::betti;
use shiftlab::io::parse_auto;
use shiftlab::linalg::DEFAULT_PRIME;
use shiftlab::minors::{contract, is_admissible, is_minor};
use shiftlab::obstruction::{smith_class, vk_vanishes_z};
use shiftlab::rigidity::rigidity_ranks;
use shiftlab::vectors::{f_vector, h_vector};
use shiftlab::{shift, Error, GenericConfig, SimplicialComplex, Variant};

use verify::Check;

#[derive(Parser)]
#[command(name = "shiftlab", version, about = "Algebraic shifting of simplicial complexes")]
struct Cli {
    /// Prime for generic computations and homology.
    #[arg(long, global = true, env = "SHIFTLAB_PRIME", default_value_t = DEFAULT_PRIME)]
    prime: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Ext,
    Sym,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Ext => Variant::Exterior,
            VariantArg::Sym => Variant::Symmetric,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Obstruction {
    Smith,
    Vk,
}

#[derive(Subcommand)]
enum Command {
    /// Shift a complex read from FILE (facet list or JSON, `-` for stdin).
    Shift {
        file: String,
        #[arg(long, value_enum, default_value = "ext")]
        variant: VariantArg,
        /// Seed for the first generic draw; the second is derived from it.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// f- and h-vectors.
    Fvector { file: String },
    /// Reduced Betti numbers over the chosen prime.
    Betti { file: String },
    /// Generic rigidity of the 1-skeleton in R^d.
    Rigidity {
        file: String,
        #[arg(long)]
        dim: u32,
    },
    /// Smith class over Z2 or the integer Van Kampen class in degree M.
    Obstruction {
        #[arg(value_enum)]
        kind: Obstruction,
        file: String,
        #[arg(long)]
        m: usize,
    },
    /// Search for TARGET as a minor of the complex in FILE.
    Minor {
        file: String,
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 5_000_000)]
        budget: u64,
    },
    /// Identify vertex U with vertex V.
    Contract { file: String, u: u32, v: u32 },
    /// Run a named check (or `all`) and print one JSON line per check.
    Verify {
        #[arg(value_enum)]
        name: Check,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

fn read_complex(path: &str) -> Result<SimplicialComplex> {
    let text = if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))?
    };
    parse_auto(&text).with_context(|| format!("parsing {path}"))
}

fn print(value: serde_json::Value) {
    println!("{value}");
}

fn run(cli: Cli) -> Result<ExitCode> {
    let cfg = GenericConfig::with_prime(cli.prime);
    match cli.command {
        Command::Shift { file, variant, seed } => {
            let k = read_complex(&file)?;
            let cfg = seed.map_or(cfg, |s| cfg.with_seed(s));
            let r = shift(&k, variant.into(), &cfg)?;
            print(json!({
                "variant": r.variant,
                "shifted": r.shifted,
                "f_vector": f_vector(&r.shifted).0,
                "prime": r.prime,
                "seeds": r.seeds,
                "stable": r.stable,
                "input": k,
            }));
        }
        Command::Fvector { file } => {
            let k = read_complex(&file)?;
            print(json!({ "f_vector": f_vector(&k).0, "h_vector": h_vector(&k).0 }));
        }
        Command::Betti { file } => {
            let k = read_complex(&file)?;
            let b = betti(&k, cli.prime)?;
            print(json!({ "prime": cli.prime, "reduced_betti": b, "euler": b.euler() }));
        }
        Command::Rigidity { file, dim } => {
            let k = read_complex(&file)?;
            let r = rigidity_ranks(&k.skeleton(1), dim, &cfg)?;
            print(json!({
                "dim": dim,
                "ranks": r,
                "rigid": r.rigid(),
                "stress_free": r.stress_free(),
                "stress_space_dim": r.stress_space_dim(),
            }));
        }
        Command::Obstruction { kind, file, m } => {
            let k = read_complex(&file)?;
            match kind {
                Obstruction::Smith => {
                    let s = smith_class(&k, m)?;
                    print(json!({ "kind": "smith", "m": m, "vanishes": s.vanishes, "support": s.cochain.support() }));
                }
                Obstruction::Vk => {
                    let r = vk_vanishes_z(&k, m)?;
                    print(json!({ "kind": "vk", "report": r }));
                }
            }
        }
        Command::Minor { file, target, budget } => {
            let k = read_complex(&file)?;
            let h = read_complex(&target)?;
            let w = is_minor(&h, &k, budget)?;
            print(json!({ "is_minor": w.is_some(), "witness": w }));
        }
        Command::Contract { file, u, v } => {
            let k = read_complex(&file)?;
            let admissible = is_admissible(&k, u, v)?;
            let c = contract(&k, u, v)?;
            print(json!({ "u": u, "v": v, "admissible": admissible, "result": c }));
        }
        Command::Verify { name, seed } => {
            let mut all_pass = true;
            for check in name.expand() {
                let line = verify::run(check, seed, &cfg);
                all_pass &= line.pass;
                print(serde_json::to_value(&line)?);
            }
            if !all_pass {
                return Ok(ExitCode::from(4));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<io::Error>().is_some() {
        return 1;
    }
    match err.downcast_ref::<Error>() {
        Some(
            Error::Parse(_) | Error::VertexOutOfRange { .. } | Error::UnsortableFace(_) | Error::TooManyVertices(_),
        ) => 1,
        Some(Error::GenericInstability { .. } | Error::NonGeneric(_) | Error::ClosureViolation(_)) => 2,
        Some(
            Error::BadParameters(_)
            | Error::NotPrime(_)
            | Error::PrimeTooSmall { .. }
            | Error::VertexMissing(_)
            | Error::DimensionExhausted { .. },
        ) => 3,
        _ => 5,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
