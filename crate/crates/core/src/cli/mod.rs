//! Command-line front end.

mod document;
mod render;

pub use document::{parse_document, render_machine, DocumentError, MackeyDocument, TierDocument};
pub use render::{render_lewis, Format};

use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};

use crate::mackey::{burnside, constant_z, permutation, twisted_burnside, GSet, MackeyFunctor, Prime};
use crate::separation::{classify_invertible, gamma_functor, invert, phi_functor, try_find_isomorphism, IsoOutcome, Verdict};
use crate::{box_product, Int};

#[derive(Parser, Debug)]
#[command(name = "mackey", version, about = "Finitely presented C_p-Mackey functors")]
struct Cli {
    /// Output format for functors.
    #[arg(long, value_enum, global = true, default_value_t = Format::Machine)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the Mackey functor axioms.
    Check {
        #[arg(default_value = "-")]
        file: String,
    },
    /// Box product of two functors.
    Box {
        left: String,
        right: String,
        /// Keep the raw presentation instead of simplifying it.
        #[arg(long)]
        raw: bool,
    },
    /// Decide whether a functor is invertible under the box product.
    Classify {
        #[arg(default_value = "-")]
        file: String,
    },
    /// Print the box inverse of an invertible functor.
    Invert {
        #[arg(default_value = "-")]
        file: String,
    },
    /// The subfunctor generated by transfers.
    Gamma {
        #[arg(default_value = "-")]
        file: String,
        #[arg(long)]
        raw: bool,
    },
    /// The geometric fixed points.
    Phi {
        #[arg(default_value = "-")]
        file: String,
        #[arg(long)]
        raw: bool,
    },
    /// Look for an isomorphism between two functors.
    Iso {
        left: String,
        right: String,
        /// Largest absolute matrix entry tried by the fallback search.
        #[arg(long, default_value_t = 2)]
        bound: u64,
    },
    /// Print a standard functor.
    Make {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long)]
        p: u64,
        /// Restriction of 1 for `twisted`.
        #[arg(long, allow_hyphen_values = true)]
        twist: Option<i64>,
        /// Number of fixed points for `permutation`.
        #[arg(long, default_value_t = 0)]
        fixed: usize,
        /// Number of free orbits for `permutation`.
        #[arg(long, default_value_t = 0)]
        free: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Burnside,
    Constant,
    Permutation,
    Twisted,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Input-side failure: bad arguments, unreadable files, malformed documents.
struct InputError(String);

impl From<DocumentError> for InputError {
    fn from(e: DocumentError) -> Self {
        InputError(format!("error[{}]: {e}", e.code()))
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
}

impl Io<'_> {
    fn load(&mut self, path: &str) -> Result<MackeyFunctor<Int>, InputError> {
        let text = if path == "-" {
            if self.stdin_used {
                return Err(InputError("error[usage]: standard input can only be read once".into()));
            }
            self.stdin_used = true;
            let mut s = String::new();
            self.stdin.read_to_string(&mut s).map_err(|e| InputError(format!("error[io]: stdin: {e}")))?;
            s
        } else {
            std::fs::read_to_string(path).map_err(|e| InputError(format!("error[io]: {path}: {e}")))?
        };
        let doc = parse_document(&text).map_err(|e| {
            let InputError(msg) = e.into();
            InputError(if path == "-" { msg } else { format!("{path}: {msg}") })
        })?;
        Ok(doc.to_functor())
    }
}

fn functor_output(m: &MackeyFunctor<Int>, raw: bool, format: Format) -> String {
    if raw {
        render_lewis(m, format)
    } else {
        render_lewis(&m.simplified().0, format)
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit status.
pub fn run<I, S>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{rendered}");
            return code;
        }
    };
    let mut io = Io { stdin, stdin_used: false };
    match execute(cli, &mut io, stdout, stderr) {
        Ok(code) => code,
        Err(InputError(msg)) => {
            let _ = writeln!(stderr, "{msg}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: Cli, io: &mut Io<'_>, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, InputError> {
    let format = cli.format;
    let mut emit = |text: &str| {
        let _ = write!(out, "{text}");
    };
    match cli.command {
        Command::Check { file } => {
            let m = io.load(&file)?;
            let report = m.check_axioms();
            emit(&format!("{report}\n"));
            Ok(if report.passed() { EXIT_OK } else { EXIT_FAILURE })
        }
        Command::Box { left, right, raw } => {
            let m = io.load(&left)?;
            let n = io.load(&right)?;
            let b = box_product(&m, &n).map_err(|e| InputError(format!("error[prime-mismatch]: {e}")))?;
            emit(&functor_output(&b, raw, format));
            Ok(EXIT_OK)
        }
        Command::Classify { file } => {
            let m = io.load(&file)?;
            match classify_invertible(&m) {
                Ok(result) => {
                    emit(&format!("{}\n", result.verdict));
                    if format == Format::Text {
                        if let Verdict::TwistedBurnside { sign_ambiguous, .. } = result.verdict {
                            emit(&format!("sign ambiguous: {}\n", if sign_ambiguous { "yes" } else { "no" }));
                        }
                        emit(&format!("rank of Gamma top (k): {}\n", result.gamma_rank));
                    }
                    Ok(if result.is_invertible() { EXIT_OK } else { EXIT_FAILURE })
                }
                Err(e) => {
                    let _ = writeln!(err, "{e}");
                    Ok(EXIT_FAILURE)
                }
            }
        }
        Command::Invert { file } => {
            let m = io.load(&file)?;
            match invert(&m) {
                Some(inv) => {
                    emit(&render_lewis(&inv.inverse, format));
                    Ok(EXIT_OK)
                }
                None => {
                    let why = match classify_invertible(&m) {
                        Ok(r) => r.verdict.to_string(),
                        Err(e) => e.to_string(),
                    };
                    let _ = writeln!(err, "not invertible: {why}");
                    Ok(EXIT_FAILURE)
                }
            }
        }
        Command::Gamma { file, raw } => {
            let m = io.load(&file)?;
            emit(&functor_output(&gamma_functor(&m).0, raw, format));
            Ok(EXIT_OK)
        }
        Command::Phi { file, raw } => {
            let m = io.load(&file)?;
            emit(&functor_output(&phi_functor(&m).0, raw, format));
            Ok(EXIT_OK)
        }
        Command::Iso { left, right, bound } => {
            let m = io.load(&left)?;
            let n = io.load(&right)?;
            match try_find_isomorphism(&m, &n, bound) {
                IsoOutcome::Found(f) => {
                    emit(&format!("Found\ntop: {}\nbottom: {}\n", f.top, f.bottom));
                    Ok(EXIT_OK)
                }
                IsoOutcome::NotIsomorphic(reason) => {
                    emit(&format!("NotIsomorphic({reason:?})\n"));
                    Ok(EXIT_FAILURE)
                }
                IsoOutcome::Unknown => {
                    emit("Unknown\n");
                    Ok(EXIT_FAILURE)
                }
            }
        }
        Command::Make { kind, p, twist, fixed, free } => {
            let p = Prime::new(p).map_err(|e| InputError(format!("error[not-prime]: {e}")))?;
            let m = match kind {
                Kind::Burnside => burnside(p),
                Kind::Constant => constant_z(p),
                Kind::Permutation => permutation(p, GSet::new(fixed, free)),
                Kind::Twisted => {
                    let d = twist.ok_or_else(|| InputError("error[usage]: `make twisted` needs --twist".into()))?;
                    twisted_burnside(p, Int::from(d))
                }
            };
            emit(&render_lewis(&m, format));
            Ok(EXIT_OK)
        }
    }
}
