//! Command-line front end. The binary is a thin wrapper around [`run`].
//!
//! Exit codes: 0 success (and "isomorphic" for `iso`), 1 a negative semantic
//! result (`iso` found nothing, `verify` had a failing check), 2 bad input,
//! 3 a cap was exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::config::Caps;
use crate::error::Result;
use crate::format::{self, read_hypergraph};
use crate::group::{aut, iso, AutOptions, DetMethod};
use crate::matrix::RowOrder;
use crate::oracle::{brute_aut, brute_iso, OracleConfig};
use crate::perm::PermSet;
use crate::verify::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "hyperaut",
    version,
    about = "Hypergraph automorphisms and isomorphisms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Automorphism group of a hypergraph.
    Aut {
        file: PathBuf,
        /// Print every element.
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value_t = AutFormat::Tworow)]
        format: AutFormat,
        #[arg(long, value_enum, default_value_t = Method::Initiators)]
        method: Method,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Isomorphisms from the first hypergraph onto the second.
    Iso {
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value_t = IsoFormat::Tworow)]
        format: IsoFormat,
        #[arg(long, value_enum, default_value_t = Method::Initiators)]
        method: Method,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Print the determinant of the canonical matrix as a polypartial.
    Det {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Engine::Initiators)]
        method: Engine,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Cross-check the determinant against brute force and the coset structure.
    Verify {
        file: PathBuf,
        /// Largest ground set the brute-force oracle accepts (at most 10).
        #[arg(long, default_value_t = 8)]
        max_ground: usize,
        #[command(flatten)]
        caps: CapArgs,
    },
}

#[derive(Debug, Args)]
struct CapArgs {
    /// Largest edge size for which brackets are built.
    #[arg(long, default_value_t = 6)]
    max_arity: usize,
    /// Largest number of permutations ever listed or expanded.
    #[arg(long, default_value_t = 3_628_800)]
    max_expand: u128,
    /// Largest section block for the Leibniz engine.
    #[arg(long, default_value_t = 9)]
    max_leibniz_dim: usize,
    #[arg(long, value_enum, default_value_t = Heuristic::Greedy)]
    order_heuristic: Heuristic,
}

impl CapArgs {
    fn caps(&self) -> Caps {
        Caps {
            max_arity: self.max_arity,
            max_expand: self.max_expand,
            max_leibniz_dim: self.max_leibniz_dim,
        }
    }

    fn options(&self, method: Method) -> AutOptions {
        AutOptions {
            caps: self.caps(),
            method: match method {
                Method::Leibniz => DetMethod::Leibniz,
                _ => DetMethod::Initiators,
            },
            row_order: match self.order_heuristic {
                Heuristic::Greedy => RowOrder::Greedy,
                Heuristic::Given => RowOrder::Given,
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AutFormat {
    Tworow,
    Cycles,
    Count,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IsoFormat {
    Tworow,
    Map,
    Count,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Initiators,
    Leibniz,
    Brute,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    Initiators,
    Leibniz,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Heuristic {
    Greedy,
    Given,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_cap() {
                EXIT_CAP
            } else {
                EXIT_INPUT
            }
        }
    }
}

fn write_lines(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Aut {
            file,
            list,
            format: fmt,
            method,
            caps,
        } => {
            let g = read_hypergraph(&file)?;
            let cap = caps.max_expand;
            let (order, elements) = if method == Method::Brute {
                let oracle = OracleConfig::default();
                let set = brute_aut(&g, &oracle)?;
                (set.len() as u128, Some(set))
            } else {
                let r = aut(&g, &caps.options(method))?;
                let els = if list && fmt != AutFormat::Count {
                    Some(r.elements(cap)?)
                } else {
                    None
                };
                (r.order, els)
            };
            let ground = g.ground();
            let mut text = String::new();
            if fmt == AutFormat::Count {
                text.push_str(&format!("{order}\n"));
            } else {
                text.push_str(&format!("order: {order}\n"));
                if list {
                    for p in elements.iter().flatten() {
                        let line = match fmt {
                            AutFormat::Cycles => format::cycles(p, ground),
                            _ => format::two_row(p, ground, ground),
                        };
                        text.push_str(&line);
                        text.push('\n');
                    }
                }
            }
            write_lines(out, &text)?;
            Ok(EXIT_OK)
        }
        Command::Iso {
            first,
            second,
            list,
            format: fmt,
            method,
            caps,
        } => {
            let g1 = read_hypergraph(&first)?;
            let g2 = read_hypergraph(&second)?;
            let cap = caps.max_expand;
            let (count, bijections): (u128, Option<PermSet>) = if method == Method::Brute {
                let set = brute_iso(&g1, &g2, &OracleConfig::default())?;
                (set.len() as u128, Some(set))
            } else {
                let r = iso(&g1, &g2, &caps.options(method))?;
                let els = if list && fmt != IsoFormat::Count {
                    Some(r.bijections(cap)?)
                } else {
                    None
                };
                (r.order, els)
            };
            let (x, y) = (g1.ground(), g2.ground());
            let mut text = String::new();
            if fmt == IsoFormat::Count {
                text.push_str(&format!("{count}\n"));
            } else {
                text.push_str(&format!("count: {count}\n"));
                if list {
                    for p in bijections.iter().flatten() {
                        let line = match fmt {
                            IsoFormat::Map => format::mapping(p, x, y),
                            _ => format::two_row(p, x, y),
                        };
                        text.push_str(&line);
                        text.push('\n');
                    }
                }
            }
            write_lines(out, &text)?;
            Ok(if count > 0 { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Det { file, method, caps } => {
            let g = read_hypergraph(&file)?;
            let method = match method {
                Engine::Initiators => Method::Initiators,
                Engine::Leibniz => Method::Leibniz,
            };
            let r = aut(&g, &caps.options(method))?;
            let text = format::polypartial(&r.determinant, g.ground(), g.ground());
            write_lines(out, &format!("{text}\n"))?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            file,
            max_ground,
            caps,
        } => {
            let g = read_hypergraph(&file)?;
            let oracle = OracleConfig {
                max_ground_size: max_ground,
                ..OracleConfig::default()
            };
            let checks = verify(&g, &caps.caps(), &oracle)?;
            let mut text = String::new();
            for c in &checks {
                let status = if c.passed { "PASS" } else { "FAIL" };
                if c.detail.is_empty() {
                    text.push_str(&format!("{status} {}\n", c.name));
                } else {
                    text.push_str(&format!("{status} {} ({})\n", c.name, c.detail));
                }
            }
            let all = checks.iter().all(|c| c.passed);
            text.push_str(if all {
                "all checks passed\n"
            } else {
                "some checks failed\n"
            });
            write_lines(out, &text)?;
            if !all {
                let _ = writeln!(err, "verification failed");
            }
            Ok(if all { EXIT_OK } else { EXIT_NEGATIVE })
        }
    }
}
