//! Command-line front end: file formats and subcommands over the core
//! library. See `afv --help` for the command list.

pub mod apx;
pub mod dot;
pub mod mine;
pub mod render;
pub mod tgf;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use afv_core::{
    apply_kernel, expansion_equivalent, expansion_equivalent_bounded, extensions,
    find_verifiability_counterexample, kernel_for, minimal_classes, standard_equivalent,
    verification_class, Af, KernelKind, NeighborhoodFn, SemanticsKind,
};

use apx::{parse_apx, write_apx, ParsedAf};
use dot::write_dot;
use render::{format_class, format_extensions, format_extensions_iccma};
use tgf::parse_tgf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FINDING: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "afv",
    version,
    about = "Argumentation framework semantics, kernels, and verification classes",
    after_help = "Semantics tags: cf na stb ad pr co gr ss stg id eg sad sta\n\
                  Kernel tags: stb ad gr co na\n\
                  Neighborhood functions: canonical names (eps + - pm mp cap cup delta \
                  +pm +mp pmmp capcup -pm -mp +-) or comma-joined basics like `p,mp`.\n\
                  Exit codes: 0 ok, 1 negative verdict or counterexample found, 2 usage/parse error."
)]
struct Cli {
    /// Reject inputs that mention undeclared arguments instead of adding them.
    #[arg(long, global = true)]
    strict: bool,

    /// Worker threads for `mine`.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, ValueEnum)]
enum Format {
    #[default]
    Apx,
    Tgf,
}

#[derive(Subcommand)]
enum Command {
    /// Print the extensions of a framework under a semantics.
    Solve {
        #[arg(short = 's', long = "semantics", value_name = "SEM")]
        semantics: String,
        #[arg(short = 'f', long = "file", value_name = "FILE")]
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Single-line nested-list output.
        #[arg(long)]
        iccma: bool,
    },
    /// Print the kernel of a framework as APX.
    Kernel {
        #[arg(short = 'k', long = "kernel", value_name = "KERNEL")]
        kernel: String,
        #[arg(short = 'f', long = "file", value_name = "FILE")]
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print a framework as DOT.
    Dot {
        #[arg(short = 'f', long = "file", value_name = "FILE")]
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print the verification class of a framework under a neighborhood function.
    Vclass {
        #[arg(short = 'x', long = "function", value_name = "FN", allow_hyphen_values = true)]
        function: String,
        #[arg(short = 'f', long = "file", value_name = "FILE")]
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Decide equivalence of two frameworks under a semantics.
    Equiv {
        #[arg(short = 's', long = "semantics", value_name = "SEM")]
        semantics: String,
        first: PathBuf,
        second: PathBuf,
        /// Compare plain extensions instead of expansion equivalence.
        #[arg(long)]
        standard: bool,
        /// Fresh arguments for the bounded witness search.
        #[arg(long, default_value_t = 1)]
        fresh: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Search exhaustively for two frameworks the class cannot tell apart.
    Verify {
        #[arg(short = 's', long = "semantics", value_name = "SEM")]
        semantics: String,
        #[arg(short = 'x', long = "function", value_name = "FN", allow_hyphen_values = true)]
        function: String,
        #[arg(short = 'n', long = "bound", value_name = "N")]
        bound: usize,
    },
    /// Print the minimal classes verifying a semantics at a bound.
    Exact {
        #[arg(short = 's', long = "semantics", value_name = "SEM")]
        semantics: String,
        #[arg(short = 'n', long = "bound", value_name = "N")]
        bound: usize,
    },
    /// Print the informativeness lattice of the fifteen neighborhood functions.
    Hierarchy,
    /// Run the whole bounded theorem suite.
    Mine {
        #[arg(short = 'n', long = "bound", value_name = "N", default_value_t = 3)]
        bound: usize,
    },
}

/// Entry point used by `main` and by tests; writes to the given sinks and
/// returns the process exit code.
pub fn run_with_output<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_USAGE
        }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut stdout = std::io::stdout();
    let mut stderr = std::io::stderr();
    run_with_output(args, &mut stdout, &mut stderr)
}

fn load(path: &Path, format: Format, strict: bool, err: &mut dyn Write) -> Result<Af, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let ParsedAf { af, warnings } = match format {
        Format::Apx => parse_apx(&text, strict),
        Format::Tgf => parse_tgf(&text),
    }
    .map_err(|e| format!("{}: {e}", path.display()))?;
    for w in warnings {
        let _ = writeln!(err, "{}: {w}", path.display());
    }
    Ok(af)
}

fn semantics(tag: &str) -> Result<SemanticsKind, String> {
    SemanticsKind::from_tag(tag).ok_or_else(|| format!("unknown semantics `{tag}`"))
}

fn neighborhood(text: &str) -> Result<NeighborhoodFn, String> {
    NeighborhoodFn::parse(text).ok_or_else(|| format!("unknown neighborhood function `{text}`"))
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, String> {
    match &cli.command {
        Command::Solve { semantics: tag, file, format, iccma } => {
            let kind = semantics(tag)?;
            let af = load(file, *format, cli.strict, err)?;
            let es = extensions(&af, kind);
            let text = if *iccma {
                format_extensions_iccma(&af, &es)
            } else {
                format_extensions(&af, &es)
            };
            let _ = write!(out, "{text}");
            Ok(EXIT_OK)
        }
        Command::Kernel { kernel, file, format } => {
            let kind = KernelKind::from_tag(kernel)
                .ok_or_else(|| format!("unknown kernel `{kernel}`"))?;
            let af = load(file, *format, cli.strict, err)?;
            let _ = write!(out, "{}", write_apx(&apply_kernel(&af, kind)));
            Ok(EXIT_OK)
        }
        Command::Dot { file, format } => {
            let af = load(file, *format, cli.strict, err)?;
            let _ = write!(out, "{}", write_dot(&af));
            Ok(EXIT_OK)
        }
        Command::Vclass { function, file, format } => {
            let nf = neighborhood(function)?;
            let af = load(file, *format, cli.strict, err)?;
            let _ = write!(out, "{}", format_class(&af, &verification_class(&af, nf)));
            Ok(EXIT_OK)
        }
        Command::Equiv { semantics: tag, first, second, standard, fresh, format } => {
            let kind = semantics(tag)?;
            let f = load(first, *format, cli.strict, err)?;
            let g = load(second, *format, cli.strict, err)?;
            if *standard {
                return if standard_equivalent(&f, &g, kind) {
                    let _ = writeln!(out, "EQUIVALENT");
                    Ok(EXIT_OK)
                } else {
                    let _ = writeln!(out, "NOT");
                    Ok(EXIT_FINDING)
                };
            }
            equiv_expansion(&f, &g, kind, *fresh, out)
        }
        Command::Verify { semantics: tag, function, bound } => {
            let kind = semantics(tag)?;
            let nf = neighborhood(function)?;
            match find_verifiability_counterexample(kind, nf, *bound)
                .map_err(|e| e.to_string())?
            {
                None => {
                    let _ = writeln!(out, "OK up to n={bound}");
                    Ok(EXIT_OK)
                }
                Some((f, g)) => {
                    let _ = writeln!(out, "COUNTEREXAMPLE");
                    let _ = writeln!(out, "F:");
                    let _ = write!(out, "{}", write_apx(&f));
                    let _ = writeln!(out, "G:");
                    let _ = write!(out, "{}", write_apx(&g));
                    Ok(EXIT_FINDING)
                }
            }
        }
        Command::Exact { semantics: tag, bound } => {
            let kind = semantics(tag)?;
            let classes = minimal_classes(kind, *bound).map_err(|e| e.to_string())?;
            let names: Vec<&str> = classes.iter().map(|c| c.ascii_name()).collect();
            let _ = writeln!(out, "{}", names.join(" "));
            Ok(EXIT_OK)
        }
        Command::Hierarchy => {
            for (lower, upper) in afv_core::verification::cover_edges() {
                let _ = writeln!(out, "{} < {}", lower.ascii_name(), upper.ascii_name());
            }
            Ok(EXIT_OK)
        }
        Command::Mine { bound } => mine::run(*bound, cli.threads, out).map_err(|e| e.to_string()),
    }
}

fn equiv_expansion(
    f: &Af,
    g: &Af,
    kind: SemanticsKind,
    fresh: usize,
    out: &mut dyn Write,
) -> Result<i32, String> {
    match kernel_for(kind) {
        Ok(_) => {
            let verdict = expansion_equivalent(f, g, kind).map_err(|e| e.to_string())?;
            if verdict.equivalent {
                let _ = writeln!(out, "EQUIVALENT");
                return Ok(EXIT_OK);
            }
            let _ = writeln!(out, "NOT");
            match expansion_equivalent_bounded(f, g, kind, fresh) {
                Ok(v) if !v.equivalent => {
                    let _ = writeln!(out, "witness:");
                    let _ = write!(out, "{}", write_apx(&v.witness.unwrap()));
                }
                Ok(_) => {
                    let _ = writeln!(
                        out,
                        "witness: none within the bounded search; the kernel verdict is exact"
                    );
                }
                Err(e) => {
                    let _ = writeln!(out, "witness: search skipped ({e})");
                }
            }
            Ok(EXIT_FINDING)
        }
        Err(_) => {
            // No kernel: the bounded oracle is all there is.
            let verdict =
                expansion_equivalent_bounded(f, g, kind, fresh).map_err(|e| e.to_string())?;
            if verdict.equivalent {
                let note = verdict.bound_note.unwrap_or_default();
                let _ = writeln!(out, "EQUIVALENT ({note})");
                Ok(EXIT_OK)
            } else {
                let _ = writeln!(out, "NOT");
                let _ = writeln!(out, "witness:");
                let _ = write!(out, "{}", write_apx(&verdict.witness.unwrap()));
                Ok(EXIT_FINDING)
            }
        }
    }
}
