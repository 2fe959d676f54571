//! Command line front end and the JSON/CSV table formats.

use std::collections::HashMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::catalog::{
    contragredient, enumerate, lowest_weight, parse_label, AlgebraKind, FoldConvention, Label,
    Level,
};
use crate::error::{Error, Result};
use crate::outcome::FusionOutcome;
use crate::para_rings::{ClauseSet, OrbParaOptions};
use crate::qdim::{precision_digits, qdim_of, NumericBasis, QDim, MIN_DIGITS};
use crate::rational::Rational;
use crate::verify::{table_for, verify_ring, verify_table, CheckName, FusionTable, VerifyOptions};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "fusionlab",
    version,
    about = "Fusion rings of affine sl2, parafermions and their Z2-orbifolds",
    after_help = "Labels: A:i  AU:i:+  AT:i:-  P:i,j  PI:i,j:+  PII:i,j  PT:i:+  PTt:-\n\
                  Quote labels in the shell, e.g. fusionlab fuse --algebra para-orb --level 4 'PI:2,1:+' 'PT:1:-'"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Target {
    /// affine, affine-orb, para or para-orb
    #[arg(long)]
    pub algebra: AlgebraKind,
    /// The level k
    #[arg(long)]
    pub level: i64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print every irreducible module label
    List {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        json: bool,
    },
    /// Fuse two labels
    Fuse {
        #[command(flatten)]
        target: Target,
        left: String,
        right: String,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        ring: RingFlags,
    },
    /// Quantum dimension of a label
    Qdim {
        #[command(flatten)]
        target: Target,
        label: String,
        /// Significant digits of the decimal value
        #[arg(long, default_value_t = MIN_DIGITS)]
        digits: usize,
        #[arg(long)]
        json: bool,
    },
    /// Lowest conformal weight of a label
    Weight {
        #[command(flatten)]
        target: Target,
        label: String,
        #[arg(long)]
        json: bool,
    },
    /// Contragredient of a label
    Dual {
        #[command(flatten)]
        target: Target,
        label: String,
        #[arg(long)]
        json: bool,
    },
    /// Export the catalog and fusion table (JSON, or CSV when PATH ends in .csv)
    Table {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        out: PathBuf,
        /// Emit every ordered pair instead of unordered pairs
        #[arg(long)]
        ordered: bool,
        #[command(flatten)]
        ring: RingFlags,
    },
    /// Check the ring axioms exhaustively
    Verify(VerifyArgs),
}

#[derive(Debug, Args, Clone)]
pub struct RingFlags {
    /// Sign carried by W(k,l) when folded to W(k,k-l)
    #[arg(long, default_value = "preserve")]
    pub fold_convention: FoldConvention,
    /// Reading of the level k/2 twisted products: consistent or as-printed
    #[arg(long, default_value = "consistent")]
    pub clauses: ClauseSet,
}

impl RingFlags {
    fn options(&self) -> OrbParaOptions {
        OrbParaOptions {
            fold: self.fold_convention,
            clauses: self.clauses,
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, required_unless_present = "from_table")]
    pub algebra: Option<AlgebraKind>,
    #[arg(long, required_unless_present = "from_table")]
    pub level: Option<i64>,
    /// Comma separated checks, or `all`
    #[arg(long, default_value = "all")]
    pub checks: String,
    #[arg(long)]
    pub workers: Option<usize>,
    #[command(flatten)]
    pub ring: RingFlags,
    /// Use [i+1] as the qdim of every affine orbifold module
    #[arg(long)]
    pub affine_qdim_extension: bool,
    /// Verify a JSON table written by `table` instead of the live ring
    #[arg(long, conflicts_with_all = ["algebra", "level"])]
    pub from_table: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

// ---------------------------------------------------------------------------
// table document

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableDocument {
    pub algebra: String,
    pub level: u32,
    pub schema_version: u32,
    pub ordered: bool,
    pub modules: Vec<ModuleEntry>,
    pub fusion: Vec<FusionEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModuleEntry {
    pub id: String,
    pub kind: String,
    pub weight: Option<String>,
    pub qdim: QDimEntry,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QDimEntry {
    pub a: Vec<String>,
    pub b: Vec<String>,
    pub numeric: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FusionEntry {
    pub left: String,
    pub right: String,
    pub outputs: Vec<OutputEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputEntry {
    pub id: String,
    pub mult: u32,
}

fn outputs(o: &FusionOutcome<Label>) -> Vec<OutputEntry> {
    o.iter()
        .map(|(l, m)| OutputEntry {
            id: l.to_string(),
            mult: m,
        })
        .collect()
}

impl TableDocument {
    pub fn build(t: &FusionTable, ordered: bool) -> TableDocument {
        let k = t.level();
        let mut basis = NumericBasis::new(k, MIN_DIGITS);
        let modules = t
            .labels()
            .iter()
            .zip(t.qdims())
            .map(|(l, q)| {
                let v = basis.eval(q);
                ModuleEntry {
                    id: l.to_string(),
                    kind: l.kind().to_string(),
                    weight: lowest_weight(k, *l).ok().map(|w| w.to_string()),
                    qdim: QDimEntry {
                        a: q.a().iter().map(Rational::to_string).collect(),
                        b: q.b().iter().map(Rational::to_string).collect(),
                        numeric: basis.to_decimal(&v, MIN_DIGITS),
                    },
                }
            })
            .collect();
        let ls = t.labels();
        let mut fusion = Vec::new();
        for (x, a) in ls.iter().enumerate() {
            let start = if ordered { 0 } else { x };
            for b in &ls[start..] {
                let o = t.product(a, b).expect("labels of the table");
                fusion.push(FusionEntry {
                    left: a.to_string(),
                    right: b.to_string(),
                    outputs: outputs(&o),
                });
            }
        }
        TableDocument {
            algebra: t.algebra().name().to_string(),
            level: k.k(),
            schema_version: SCHEMA_VERSION,
            ordered,
            modules,
            fusion,
        }
    }

    /// Rebuild a table; unordered documents are read symmetrically.
    pub fn to_table(&self) -> Result<FusionTable> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::Table(format!(
                "schema version {} (expected {SCHEMA_VERSION})",
                self.schema_version
            )));
        }
        let algebra: AlgebraKind = self.algebra.parse()?;
        let k = Level::new(algebra, self.level as i64)?;
        let parse = |s: &str| parse_label(algebra, k, s);
        let rationals = |v: &[String]| {
            v.iter()
                .map(|s| s.parse::<Rational>().map_err(Error::Table))
                .collect::<Result<Vec<_>>>()
        };
        let mut labels = Vec::new();
        let mut qdims = Vec::new();
        for m in &self.modules {
            labels.push(parse(&m.id)?);
            qdims.push(QDim::from_parts(
                k,
                rationals(&m.qdim.a)?,
                rationals(&m.qdim.b)?,
            )?);
        }
        let mut products: HashMap<(Label, Label), FusionOutcome<Label>> = HashMap::new();
        for e in &self.fusion {
            let (a, b) = (parse(&e.left)?, parse(&e.right)?);
            let o = e
                .outputs
                .iter()
                .map(|x| Ok((parse(&x.id)?, x.mult)))
                .collect::<Result<FusionOutcome<Label>>>()?;
            if !self.ordered {
                products.insert((b, a), o.clone());
            }
            products.insert((a, b), o);
        }
        let ls = labels.clone();
        FusionTable::from_parts(algebra, k, labels, qdims, |a, b| {
            products
                .get(&(ls[a], ls[b]))
                .cloned()
                .ok_or_else(|| Error::Table(format!("no entry for {} x {}", ls[a], ls[b])))
        })
    }

    /// `left,right,output,mult` rows.
    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let io = |e: csv::Error| Error::Table(e.to_string());
        let mut out = csv::Writer::from_writer(w);
        out.write_record(["left", "right", "output", "mult"])
            .map_err(io)?;
        for e in &self.fusion {
            for o in &e.outputs {
                out.write_record([&e.left, &e.right, &o.id, &o.mult.to_string()])
                    .map_err(io)?;
            }
        }
        out.flush().map_err(|e| Error::Table(e.to_string()))
    }
}

// ---------------------------------------------------------------------------
// running

/// Errors the CLI reports with exit code 2.
#[derive(Debug)]
enum Failure {
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn level(t: &Target) -> Result<Level> {
    Level::new(t.algebra, t.level)
}

fn label(t: &Target, s: &str) -> Result<(Level, Label)> {
    let k = level(t)?;
    Ok((k, parse_label(t.algebra, k, s)?))
}

fn emit_json<W: Write>(out: &mut W, v: &impl Serialize) -> std::result::Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, v)?;
    writeln!(out)?;
    Ok(())
}

/// Run with `argv` (program name first) and return the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(
        argv,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}

/// [`run`] writing to the given streams.
pub fn run_with<I, T, O: Write, E: Write>(argv: I, out: &mut O, err: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(passed) => {
            if passed {
                0
            } else {
                1
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

/// Returns whether the command succeeded in the verification sense.
fn dispatch<W: Write>(cmd: Command, out: &mut W) -> std::result::Result<bool, Failure> {
    match cmd {
        Command::List { target, json } => {
            let k = level(&target)?;
            let labels = enumerate(target.algebra, k)?;
            if json {
                #[derive(Serialize)]
                struct Entry {
                    id: String,
                    kind: &'static str,
                }
                #[derive(Serialize)]
                struct Doc {
                    algebra: AlgebraKind,
                    level: u32,
                    count: usize,
                    labels: Vec<Entry>,
                }
                emit_json(
                    out,
                    &Doc {
                        algebra: target.algebra,
                        level: k.k(),
                        count: labels.len(),
                        labels: labels
                            .iter()
                            .map(|l| Entry {
                                id: l.to_string(),
                                kind: l.kind(),
                            })
                            .collect(),
                    },
                )?;
            } else {
                for l in labels {
                    writeln!(out, "{l}")?;
                }
            }
        }
        Command::Fuse {
            target,
            left,
            right,
            json,
            ring,
        } => {
            let (k, a) = label(&target, &left)?;
            let b = parse_label(target.algebra, k, &right)?;
            let o = crate::ring::fuse_labels(target.algebra, k, ring.options(), &a, &b)?;
            if json {
                emit_json(
                    out,
                    &FusionEntry {
                        left: a.to_string(),
                        right: b.to_string(),
                        outputs: outputs(&o),
                    },
                )?;
            } else {
                writeln!(out, "{o}")?;
            }
        }
        Command::Qdim {
            target,
            label: text,
            digits,
            json,
        } => {
            let (k, x) = label(&target, &text)?;
            let q = qdim_of(k, x);
            let numeric = q.numeric(digits)?;
            if json {
                #[derive(Serialize)]
                struct Doc<'a> {
                    id: String,
                    exact: String,
                    a: &'a [Rational],
                    b: &'a [Rational],
                    numeric: String,
                }
                emit_json(
                    out,
                    &Doc {
                        id: x.to_string(),
                        exact: q.to_string(),
                        a: q.a(),
                        b: q.b(),
                        numeric,
                    },
                )?;
            } else {
                writeln!(out, "{numeric}")?;
            }
        }
        Command::Weight {
            target,
            label: text,
            json,
        } => {
            let (k, x) = label(&target, &text)?;
            let w = lowest_weight(k, x)?;
            if json {
                emit_json(out, &serde_json::json!({"id": x.to_string(), "weight": w}))?;
            } else {
                writeln!(out, "{w}")?;
            }
        }
        Command::Dual {
            target,
            label: text,
            json,
        } => {
            let (k, x) = label(&target, &text)?;
            let d = contragredient(k, x);
            if json {
                emit_json(
                    out,
                    &serde_json::json!({"id": x.to_string(), "dual": d.to_string()}),
                )?;
            } else {
                writeln!(out, "{d}")?;
            }
        }
        Command::Table {
            target,
            out: path,
            ordered,
            ring,
        } => {
            let k = level(&target)?;
            let opts = VerifyOptions {
                orb_para: ring.options(),
                ..VerifyOptions::default()
            };
            let doc = TableDocument::build(&table_for(target.algebra, k.k(), &opts)?, ordered);
            write_table(&doc, &path)?;
            writeln!(
                out,
                "wrote {} fusion entries to {}",
                doc.fusion.len(),
                path.display()
            )?;
        }
        Command::Verify(args) => {
            let checks = CheckName::parse_list(&args.checks)?;
            let workers = args
                .workers
                .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            if workers == 0 {
                return Err(Failure::Usage("--workers must be positive".into()));
            }
            let opts = VerifyOptions {
                orb_para: args.ring.options(),
                affine_qdim_extension: args.affine_qdim_extension,
                digits: precision_digits(),
            };
            let report = match &args.from_table {
                Some(path) => {
                    let doc: TableDocument = serde_json::from_reader(std::io::BufReader::new(
                        std::fs::File::open(path)?,
                    ))?;
                    verify_table(&doc.to_table()?, &checks, workers, &opts)
                }
                None => {
                    let algebra = args.algebra.expect("required by clap");
                    let k = Level::new(algebra, args.level.expect("required by clap"))?;
                    verify_ring(algebra, k.k(), &checks, workers, &opts)?
                }
            };
            if args.json {
                emit_json(out, &report)?;
            } else {
                writeln!(out, "{report}")?;
            }
            return Ok(report.passed);
        }
    }
    Ok(true)
}

fn write_table(doc: &TableDocument, path: &Path) -> std::result::Result<(), Failure> {
    let file = std::io::BufWriter::new(std::fs::File::create(path)?);
    if path
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("csv"))
    {
        doc.write_csv(file)?;
    } else {
        serde_json::to_writer_pretty(file, doc)?;
    }
    Ok(())
}
