use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use legmon::braid::{parse_script, torus_word};
use legmon::explorer::{
    faithfulness_sweep, verify_relations, xi_pluecker_report, DEFAULT_MAX_SYLLABLES,
    DEFAULT_POINTS, DEFAULT_PROBE_BUDGET, DEFAULT_RELATIONS_SEED, DEFAULT_SWEEP_SEED,
};
use legmon::moduli::{flags_from_point, validate_bott_samelson};
use legmon::{
    act_word, builtin_script, default_field, pluecker, random_point, verify_loop, BraidWord,
    Builtin, Error, Family, Field, GroupWord, ModuliPoint, MoveScript, PlueckerIndex,
};

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_DEGENERATE: u8 = 3;

/// Legendrian loop monodromy toolkit.
#[derive(Parser)]
#[command(name = "legmon", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Replay a move script and report whether it closes up.
    VerifyLoop {
        #[arg(long, conflicts_with = "builtin")]
        script: Option<PathBuf>,
        /// sigma1, xi1, xi2, xi3 or delta_power
        #[arg(long)]
        builtin: Option<String>,
        #[arg(long, default_value_t = 2)]
        s: usize,
        /// Strand count for delta_power.
        #[arg(long)]
        k: Option<u8>,
        /// Base word for --script, letters separated by spaces or commas.
        #[arg(long)]
        base: Option<String>,
        #[arg(long)]
        strands: Option<u8>,
    },
    /// Apply a word of loops to a point.
    Act {
        #[arg(long)]
        point: PathBuf,
        #[arg(long)]
        word: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print one Plücker coordinate; reads the point from stdin without --point.
    Pluecker {
        #[arg(long)]
        point: Option<PathBuf>,
        #[arg(long)]
        idx: String,
    },
    /// Sample a valid point.
    RandomPoint {
        #[arg(long)]
        family: String,
        #[arg(long)]
        seed: u64,
        /// "q" for rationals; defaults to F_p with p from LEGMON_PRIME.
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rebuild the flag tuple of a point and check the Bott–Samelson conditions.
    Flags {
        #[arg(long)]
        point: PathBuf,
    },
    /// Check a^3 and b^2 on the orbit of P147.
    Relations {
        #[arg(long, default_value_t = DEFAULT_POINTS)]
        points: usize,
        #[arg(long, default_value_t = DEFAULT_RELATIONS_SEED)]
        seed: u64,
    },
    /// Search separation witnesses for every reduced word.
    Faithful {
        #[arg(long, default_value_t = DEFAULT_MAX_SYLLABLES)]
        max_syllables: usize,
        #[arg(long, default_value_t = DEFAULT_PROBE_BUDGET)]
        probe_budget: usize,
        #[arg(long, default_value_t = DEFAULT_POINTS)]
        points: usize,
        #[arg(long, default_value_t = DEFAULT_SWEEP_SEED)]
        seed: u64,
    },
    /// Tabulate seed Plückers under the Ξ words on Gr(4,8).
    XiReport {
        #[arg(long, default_value_t = DEFAULT_POINTS)]
        points: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAILED),
        Err(e) => {
            eprintln!("error: {e}");
            if let Error::IllegalStep { trace, .. } = &e {
                for (i, w) in trace.iter().enumerate() {
                    eprintln!("{i:>3}  {w}");
                }
            }
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        _ if e.is_degeneracy() => EXIT_DEGENERATE,
        Error::IllegalStep { .. } | Error::IllegalMove { .. } | Error::SamplingExhausted(_) => {
            EXIT_FAILED
        }
        _ => EXIT_USAGE,
    }
}

fn read_point(path: Option<&Path>) -> legmon::Result<ModuliPoint> {
    let text = match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p)?,
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    ModuliPoint::from_json(&text)
}

fn emit(text: &str, out: Option<&Path>) -> legmon::Result<()> {
    match out {
        Some(p) => fs::write(p, format!("{text}\n"))?,
        None => println!("{text}"),
    }
    Ok(())
}

fn run(cmd: Command) -> legmon::Result<bool> {
    match cmd {
        Command::VerifyLoop {
            script,
            builtin,
            s,
            k,
            base,
            strands,
        } => {
            let script = match (script, builtin) {
                (Some(path), None) => {
                    let moves = parse_script(&fs::read_to_string(path)?)?;
                    let base = match base {
                        Some(b) => {
                            let w: BraidWord = b.parse()?;
                            match strands {
                                Some(n) => BraidWord::new(n, w.letters().to_vec())?,
                                None => w,
                            }
                        }
                        None => torus_word(3, 9),
                    };
                    MoveScript::new(base, moves)
                }
                (None, Some(name)) => builtin_script(name.parse::<Builtin>()?, s, k)?,
                _ => return Err(Error::Precondition("give --script or --builtin".into())),
            };
            let report = verify_loop(&script)?;
            println!("{report}");
            Ok(report.is_loop)
        }
        Command::Act { point, word, out } => {
            let p = read_point(Some(&point))?;
            let w: GroupWord = word.parse()?;
            let q = act_word(&p, &w)?;
            emit(&q.to_json()?, out.as_deref())?;
            Ok(true)
        }
        Command::Pluecker { point, idx } => {
            let p = read_point(point.as_deref())?;
            let idx = PlueckerIndex::parse(p.family(), &idx)?;
            println!("{}", pluecker(&p, &idx)?);
            Ok(true)
        }
        Command::RandomPoint {
            family,
            seed,
            field,
            out,
        } => {
            let family: Family = family.parse()?;
            let field = match field.as_deref() {
                None | Some("fp") => default_field()?,
                Some("q") => Field::Q,
                Some(other) => return Err(Error::BadToken(other.to_string())),
            };
            let p = random_point(family, field, seed)?;
            emit(&p.to_json()?, out.as_deref())?;
            Ok(true)
        }
        Command::Flags { point } => {
            let p = read_point(Some(&point))?;
            let flags = flags_from_point(&p)?;
            for (m, flag) in flags.flags.iter().enumerate() {
                let levels: Vec<String> = flag.iter().map(|s| s.to_string()).collect();
                println!("{m:>3}  {}", levels.join(" ⊂ "));
            }
            let ok = validate_bott_samelson(&flags, &p.family().braid())?;
            println!("bott-samelson: {}", if ok { "yes" } else { "no" });
            Ok(ok)
        }
        Command::Relations { points, seed } => {
            let r = verify_relations(points, seed, default_field()?)?;
            println!("{}", serde_json::to_string_pretty(&r)?);
            Ok(r.all_passed)
        }
        Command::Faithful {
            max_syllables,
            probe_budget,
            points,
            seed,
        } => {
            let r =
                faithfulness_sweep(max_syllables, probe_budget, points, seed, default_field()?)?;
            println!("{}", serde_json::to_string_pretty(&r)?);
            Ok(r.complete())
        }
        Command::XiReport { points, seed } => {
            let r = xi_pluecker_report(points, seed, default_field()?)?;
            println!("{}", serde_json::to_string_pretty(&r)?);
            Ok(r.step_check_failures == 0)
        }
    }
}
