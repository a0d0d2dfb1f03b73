//! `ncfree`: partitions, series arithmetic and the verification suites from
//! the command line.
//!
//! Exit codes: 0 success, 1 a verification suite failed, 2 usage or domain error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use ncfree::epscomp::{is_eps_alternating, EpsString};
use ncfree::freespace::{m_from_r, r_from_m, MomentFunctional};
use ncfree::ncpart::{enumerate_nc, is_parity_alternating, is_parity_preserving, kreweras, relative_kreweras, MAX_GROUND_SET};
use ncfree::ncseries::{moeb_series, sum_series, zeta_series};
use ncfree::{verify, NCSeries, Partition};

/// Default largest ground set for `enumerate`; `NCFREE_MAX_N` may raise it
/// up to the library bound.
const DEFAULT_MAX_N: usize = 10;

#[derive(Parser)]
#[command(name = "ncfree", version, about = "Exact combinatorial free probability")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Class {
    All,
    PAlt,
    PPrsv,
    EpsAlt,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    RFromM,
    MFromR,
}

#[derive(Clone, Copy, ValueEnum)]
enum Named {
    Zeta,
    Moeb,
    Sum,
}

#[derive(Subcommand)]
enum Cmd {
    /// List NC(n) or one of its classes.
    Enumerate {
        n: usize,
        #[arg(long, value_enum, default_value = "all")]
        class: Class,
        /// ε string such as 1212, for `--class eps-alt`.
        #[arg(long)]
        eps: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Kreweras complement of a partition literal like "{1,4}{2,3}".
    Kreweras {
        partition: String,
        /// Complement relative to this coarser partition.
        #[arg(long)]
        relative: Option<String>,
    },
    /// f ⋆ g of two series files.
    Boxstar { f: PathBuf, g: PathBuf },
    /// R-transform from moments or back.
    Transform {
        #[arg(value_enum)]
        direction: Direction,
        file: PathBuf,
    },
    /// Print Zeta, Moeb or Sum as a series file.
    Series {
        #[arg(value_enum)]
        name: Named,
        #[arg(long, default_value_t = 1)]
        nvars: usize,
        #[arg(long)]
        degree: usize,
    },
    /// Run a named verification suite.
    Verify {
        suite: String,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        instances: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// List the verification suites.
    Suites,
}

enum Failure {
    Usage(String),
    Verification,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn max_n() -> Result<usize, Failure> {
    match std::env::var("NCFREE_MAX_N") {
        Err(_) => Ok(DEFAULT_MAX_N),
        Ok(v) => match v.parse::<usize>() {
            Ok(n) if (1..=MAX_GROUND_SET).contains(&n) => Ok(n),
            _ => Err(Failure::Usage(format!("NCFREE_MAX_N must be in 1..={MAX_GROUND_SET}, got {v:?}"))),
        },
    }
}

fn read_series(path: &PathBuf) -> Result<NCSeries, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(NCSeries::from_json(&text)?)
}

fn run(cmd: Cmd) -> Result<(), Failure> {
    match cmd {
        Cmd::Enumerate { n, class, eps, json } => {
            let cap = max_n()?;
            if n == 0 || n > cap {
                return Err(Failure::Usage(format!("n must be in 1..={cap}")));
            }
            let eps = match (class, eps) {
                (Class::EpsAlt, Some(e)) => {
                    let e: EpsString = e.parse()?;
                    if e.m() != n {
                        return Err(Failure::Usage(format!("ε has length {}, expected {n}", e.m())));
                    }
                    Some(e)
                }
                (Class::EpsAlt, None) => return Err(Failure::Usage("--class eps-alt needs --eps".into())),
                (_, Some(_)) => return Err(Failure::Usage("--eps only applies to --class eps-alt".into())),
                (_, None) => None,
            };
            let mut keep = Vec::new();
            for p in enumerate_nc(n)? {
                let ok = match class {
                    Class::All => true,
                    Class::PAlt => is_parity_alternating(&p)?,
                    Class::PPrsv => is_parity_preserving(&p)?,
                    Class::EpsAlt => is_eps_alternating(&p, eps.as_ref().expect("checked above")),
                };
                if ok {
                    keep.push(p.to_string());
                }
            }
            if json {
                println!("{}", json!({ "n": n, "count": keep.len(), "partitions": keep }));
            } else {
                keep.iter().for_each(|p| println!("{p}"));
                println!("count: {}", keep.len());
            }
        }
        Cmd::Kreweras { partition, relative } => {
            let pi: Partition = partition.parse()?;
            let out = match relative {
                Some(r) => relative_kreweras(&pi, &r.parse()?)?,
                None => kreweras(&pi),
            };
            println!("{out}");
        }
        Cmd::Boxstar { f, g } => print!("{}", read_series(&f)?.boxstar(&read_series(&g)?)?.to_json()),
        Cmd::Transform { direction, file } => {
            let s = read_series(&file)?;
            let out = match direction {
                Direction::RFromM => r_from_m(&MomentFunctional::new(s)),
                Direction::MFromR => m_from_r(&s).into_series(),
            };
            print!("{}", out.to_json());
        }
        Cmd::Series { name, nvars, degree } => {
            let s = match name {
                Named::Zeta => zeta_series(nvars, degree)?,
                Named::Moeb => moeb_series(nvars, degree)?,
                Named::Sum => sum_series(nvars, degree)?,
            };
            print!("{}", s.to_json());
        }
        Cmd::Verify { suite, degree, instances, seed, json } => {
            let report = verify::run(&suite, degree, instances, seed)?;
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{report}");
            }
            if !report.passed() {
                return Err(Failure::Verification);
            }
        }
        Cmd::Suites => {
            for s in verify::SUITES {
                println!(
                    "{:<10} degree {:>2} (max {:>2}), {:>2} instances  {}",
                    s.name, s.default_degree, s.max_degree, s.default_instances, s.about
                );
            }
        }
    }
    Ok(())
}
