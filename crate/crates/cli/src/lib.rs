//! The `dominotab` command line. [`run`] does all the work so tests can drive
//! it with in-memory streams.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use dominotab::render::{ascii_domino_tableau, ascii_paving, ascii_tableau, latex_domino_tableau, latex_tableau, parse_rendered};
use dominotab::*;

#[derive(Debug, Parser)]
#[command(name = "dominotab", version, about = "Domino tableaux, 2-quotients and product formulas")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Human-readable text.
    Text,
    /// One line of canonical JSON.
    Canonical,
    Ascii,
    Latex,
}

#[derive(Debug, Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to FILE instead of standard output.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    /// Flat tableaux.
    Tableaux,
    /// Domino tableaux.
    Dominoes,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the 2-quotient of a shape.
    Quotient {
        #[arg(long)]
        shape: Partition,
        #[command(flatten)]
        output: Output,
    },
    /// Print the pavable shape with 2-quotient (--shape, --shape2).
    InverseQuotient {
        #[arg(long)]
        shape: Partition,
        #[arg(long)]
        shape2: Partition,
        #[command(flatten)]
        output: Output,
    },
    /// Whether a shape has a domino paving (a shifted paving for shifted families).
    Pavable {
        #[arg(long)]
        shape: Partition,
        #[arg(long)]
        family: Option<Family>,
        #[command(flatten)]
        output: Output,
    },
    /// List the pavings (or shifted pavings) of a shape.
    Pavings {
        #[arg(long)]
        shape: Partition,
        #[arg(long)]
        family: Option<Family>,
        #[command(flatten)]
        output: Output,
    },
    /// List every tableau of a family and shape.
    Enumerate {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long)]
        family: Family,
        #[arg(long)]
        shape: Partition,
        #[arg(long, default_value_t = 3)]
        max_letter: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Split a domino tableau into its pair of flat tableaux.
    Split {
        /// Canonical or rendered input; standard input if absent or `-`.
        input: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Merge a pair of flat tableaux into a domino tableau.
    Merge {
        /// Canonical `pair` document; standard input if absent or `-`.
        input: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Print a generating function truncated to --vars variables.
    Genfun {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        shape: Partition,
        #[arg(long, default_value_t = 3)]
        vars: usize,
        /// Sum over domino tableaux instead of flat tableaux.
        #[arg(long)]
        domino: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Check the product formula for one shape or a sweep of shapes.
    Verify {
        #[arg(long)]
        family: Family,
        #[arg(long, required_unless_present = "max_size", conflicts_with = "max_size")]
        shape: Option<Partition>,
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long, default_value_t = 3)]
        vars: usize,
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Draw a tableau or domino tableau.
    Render {
        /// Canonical input; standard input if absent or `-`.
        input: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
}

/// A failure reported as a one-line diagnostic with exit status 2.
#[derive(Debug)]
struct Usage(String);

type Outcome<T> = std::result::Result<T, Usage>;

impl<E: std::error::Error> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

/// Runs one invocation. Returns 0 on success, 1 when a verification fails
/// and 2 on usage or input errors.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let text = e.to_string();
            let _ = writeln!(err, "{}", text.lines().next().unwrap_or("invalid arguments"));
            return 2;
        }
        Err(e) => {
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    match execute(cli.command, stdin, out) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn execute(command: Command, stdin: &mut dyn Read, out: &mut dyn Write) -> Outcome<i32> {
    match command {
        Command::Quotient { shape, output } => {
            let (mu, nu) = two_quotient(&shape);
            let text = format!("({mu},{nu})\n");
            emit(&output, out, Document::Quotient { mu, nu }, text, None)?;
        }
        Command::InverseQuotient { shape, shape2, output } => {
            let lambda = inverse_two_quotient(&shape, &shape2);
            let text = format!("{lambda}\n");
            emit(&output, out, Document::Partition { shape: lambda }, text, None)?;
        }
        Command::Pavable { shape, family, output } => {
            let shifted = family.is_some_and(Family::is_shifted);
            let answer = if shifted { is_shifted_pavable(&shape) } else { is_pavable(&shape) };
            let text = format!("{answer}\n");
            if output.format == Format::Text {
                write_out(&output, out, &text)?;
            } else {
                return Err(Usage(format!("pavable only prints text, not {:?}", output.format)));
            }
        }
        Command::Pavings { shape, family, output } => {
            let pavings = if family.is_some_and(Family::is_shifted) {
                dominotab::pavings::shifted_pavings(&shape)
            } else {
                enumerate_pavings(&shape)
            };
            let text: String = pavings.iter().map(|p| format!("{p}\n")).collect();
            let ascii = pavings.iter().map(ascii_paving).collect::<Vec<_>>().join("\n");
            emit(&output, out, Document::Pavings { shape, pavings }, text, Some(ascii))?;
        }
        Command::Enumerate { kind, family, shape, max_letter, output } => match kind {
            Kind::Tableaux => {
                let ts = enumerate_tableaux(family, &shape, max_letter)?;
                let rendered = render_all(&output, &ts, ascii_tableau, latex_tableau);
                let text = ts.iter().map(|t| format!("{t}\n")).collect();
                emit_rendered(&output, out, Document::Tableaux { tableaux: ts }, text, rendered)?;
            }
            Kind::Dominoes => {
                let ts = enumerate_domino_tableaux(family, &shape, max_letter)?;
                let rendered = render_all(&output, &ts, ascii_domino_tableau, latex_domino_tableau);
                let text = ts.iter().map(|t| format!("{t}\n")).collect();
                emit_rendered(&output, out, Document::DominoTableaux { tableaux: ts }, text, rendered)?;
            }
        },
        Command::Split { input, output } => {
            let t = match read_document(input.as_deref(), stdin)? {
                Document::DominoTableau { tableau } => tableau,
                other => return Err(Usage(format!("split expects a domino-tableau, got {}", kind_of(&other)))),
            };
            let (t1, t2) = gamma_split(&t)?;
            let text = format!("t1: {t1}\nt2: {t2}\n");
            let rendered = match output.format {
                Format::Ascii => Some(format!("{}\n{}", ascii_tableau(&t1), ascii_tableau(&t2))),
                Format::Latex => Some(format!("{}\n{}", latex_tableau(&t1), latex_tableau(&t2))),
                _ => None,
            };
            emit_rendered(&output, out, Document::Pair { t1, t2 }, text, rendered)?;
        }
        Command::Merge { input, output } => {
            let (t1, t2) = match read_document(input.as_deref(), stdin)? {
                Document::Pair { t1, t2 } => (t1, t2),
                other => return Err(Usage(format!("merge expects a pair, got {}", kind_of(&other)))),
            };
            let t = gamma_merge(t1.family(), &t1, &t2)?;
            let rendered = render_all(&output, std::slice::from_ref(&t), ascii_domino_tableau, latex_domino_tableau);
            let text = format!("{t}\n");
            emit_rendered(&output, out, Document::DominoTableau { tableau: t }, text, rendered)?;
        }
        Command::Genfun { family, shape, vars, domino, output } => {
            let p = if domino { domino_genfun(family, &shape, vars)? } else { genfun(family, &shape, vars)? };
            let text = if p.is_zero() { "0\n".to_string() } else { format!("{}\n", p.to_string().trim_end()) };
            emit(&output, out, Document::Polynomial { polynomial: p }, text, None)?;
        }
        Command::Verify { family, shape, max_size, vars, jobs, output } => {
            let reports = match (shape, max_size) {
                (Some(lambda), _) => vec![verify_identity(family, &lambda, vars)],
                (None, Some(m)) => verify_sweep(family, m, vars, jobs),
                (None, None) => unreachable!("clap requires one of --shape and --max-size"),
            };
            let failed = reports.iter().any(|r| r.status == Status::Fail);
            let text: String = reports.iter().map(|r| format!("{r}\n")).collect();
            let doc = Document::Reports { reports };
            match output.format {
                Format::Text => {
                    out.write_all(text.as_bytes())?;
                    if let Some(path) = &output.out {
                        std::fs::write(path, to_canonical(&doc) + "\n")
                            .map_err(|e| Usage(format!("{}: {e}", path.display())))?;
                    }
                }
                _ => emit(&output, out, doc, text, None)?,
            }
            return Ok(if failed { 1 } else { 0 });
        }
        Command::Render { input, output } => {
            let text = match (read_document(input.as_deref(), stdin)?, output.format) {
                (doc @ (Document::Tableau { .. } | Document::DominoTableau { .. }), Format::Canonical) => {
                    to_canonical(&doc) + "\n"
                }
                (Document::Tableau { tableau }, Format::Latex) => latex_tableau(&tableau),
                (Document::Tableau { tableau }, _) => ascii_tableau(&tableau),
                (Document::DominoTableau { tableau }, Format::Latex) => latex_domino_tableau(&tableau),
                (Document::DominoTableau { tableau }, _) => ascii_domino_tableau(&tableau),
                (other, _) => return Err(Usage(format!("cannot render a {}", kind_of(&other)))),
            };
            write_out(&output, out, &text)?;
        }
    }
    Ok(0)
}

fn render_all<T>(output: &Output, items: &[T], ascii: fn(&T) -> String, latex: fn(&T) -> String) -> Option<String> {
    let f = match output.format {
        Format::Ascii => ascii,
        Format::Latex => latex,
        _ => return None,
    };
    Some(items.iter().map(f).collect::<Vec<_>>().join("\n"))
}

/// Writes `text`, the canonical document or a drawing, as `--format` asks.
fn emit(output: &Output, out: &mut dyn Write, doc: Document, text: String, ascii: Option<String>) -> Outcome<()> {
    let body = match output.format {
        Format::Text => text,
        Format::Canonical => to_canonical(&doc) + "\n",
        Format::Ascii => ascii.ok_or_else(|| Usage(format!("no ascii drawing of a {}", kind_of(&doc))))?,
        Format::Latex => return Err(Usage(format!("no latex drawing of a {}", kind_of(&doc)))),
    };
    write_out(output, out, &body)
}

fn emit_rendered(output: &Output, out: &mut dyn Write, doc: Document, text: String, rendered: Option<String>) -> Outcome<()> {
    match rendered {
        Some(r) => write_out(output, out, &r),
        None => emit(output, out, doc, text, None),
    }
}

fn write_out(output: &Output, out: &mut dyn Write, body: &str) -> Outcome<()> {
    match &output.out {
        Some(path) => std::fs::write(path, body).map_err(|e| Usage(format!("{}: {e}", path.display()))),
        None => Ok(out.write_all(body.as_bytes())?),
    }
}

fn read_document(path: Option<&Path>, stdin: &mut dyn Read) -> Outcome<Document> {
    let mut text = String::new();
    match path {
        Some(p) if p != Path::new("-") => {
            text = std::fs::read_to_string(p).map_err(|e| Usage(format!("{}: {e}", p.display())))?;
        }
        _ => {
            stdin.read_to_string(&mut text)?;
        }
    }
    from_canonical(&text).or_else(|e| parse_rendered(&text).map_err(|_| Usage(e.to_string())))
}

fn kind_of(doc: &Document) -> &'static str {
    match doc {
        Document::Partition { .. } => "partition",
        Document::Quotient { .. } => "quotient",
        Document::Pavings { .. } => "pavings",
        Document::Tableau { .. } => "tableau",
        Document::DominoTableau { .. } => "domino-tableau",
        Document::Tableaux { .. } => "tableaux",
        Document::DominoTableaux { .. } => "domino-tableaux",
        Document::Pair { .. } => "pair",
        Document::Polynomial { .. } => "polynomial",
        Document::Reports { .. } => "reports",
    }
}
