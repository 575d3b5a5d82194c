//! `cuntz`: batch queries over Cuntz semigroups, representation semirings
//! and the worked equivariant examples.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cuntz::axioms::{AxiomConfig, AxiomReport};
use cuntz::concrete::AtomCount;
use cuntz::gallery;
use cuntz::literal::split_top_level;
use cuntz::registry::{lookup_with, GroupFiles};
use cuntz::rep::{tensor, CuGElem, RepSemiring};
use cuntz::{CuError, CuSemigroup, ExtNat};

#[derive(Parser)]
#[command(name = "cuntz", version, about = "Cuntz semigroups, representation semirings and equivariant examples")]
struct Cli {
    /// Seed for every sampled check.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Cases per sampled check.
    #[arg(long, global = true, default_value_t = 1000)]
    samples: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,

    /// Multiplication table for the `table` group.
    #[arg(long, global = true)]
    group_table: Option<PathBuf>,

    /// Character table for the `table` group.
    #[arg(long, global = true)]
    char_table: Option<PathBuf>,

    /// Also write the structured report to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Tensor product of two representations of a finite group.
    Fusion { group: String, left: String, right: String },
    /// Order and way-below relation between two elements.
    Order { semigroup: String, left: String, right: String },
    /// Sum of terms, each a literal or `<n>*<literal>`.
    Eval {
        semigroup: String,
        #[arg(required = true)]
        terms: Vec<String>,
    },
    /// Axiom suite of a semigroup, or of a gallery entry with `example:<name>`.
    Axioms {
        name: String,
        /// Replace way-below by the order before checking.
        #[arg(long)]
        mutate: bool,
    },
    /// Builds a gallery entry and optionally verifies it.
    Example {
        name: String,
        #[arg(long)]
        verify: bool,
    },
    /// Number of atoms (minimal nonzero compact elements).
    Atoms { semigroup: String },
    /// Separates two semigroups by their atom counts.
    Distinguish { left: String, right: String },
    /// Lists semigroup and gallery names.
    List,
}

/// Command output: `KEY value` records, plus a verdict for the exit code.
struct Output {
    records: Vec<(String, String)>,
    human: Option<String>,
    passed: bool,
}

impl Output {
    fn new() -> Self {
        Output {
            records: Vec::new(),
            human: None,
            passed: true,
        }
    }

    fn push(&mut self, key: &str, value: impl Into<String>) -> &mut Self {
        self.records.push((key.to_string(), value.into()));
        self
    }

    fn structured(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.records {
            writeln!(out, "{k} {v}").unwrap();
        }
        out
    }

    fn from_report(report: &AxiomReport) -> Self {
        let text = report.to_structured();
        let mut out = Output::new();
        for line in text.lines() {
            let (k, v) = line.split_once(' ').unwrap_or((line, ""));
            out.push(k, v);
        }
        out.human = Some(report.to_human() + if report.passed() { "PASS\n" } else { "FAIL\n" });
        out.passed = report.passed();
        out
    }
}

fn exit_code_for(e: &CuError) -> u8 {
    if e.is_parse() {
        2
    } else {
        3
    }
}

fn parse_count(s: &str) -> cuntz::Result<ExtNat> {
    match s.trim() {
        "inf" => Ok(ExtNat::Inf),
        t => t
            .parse()
            .map(ExtNat::Fin)
            .map_err(|_| CuError::parse(format!("bad multiplier `{t}`"))),
    }
}

fn run(cli: &Cli) -> cuntz::Result<Output> {
    let files = GroupFiles {
        group_table: cli.group_table.clone(),
        char_table: cli.char_table.clone(),
    };
    let config = AxiomConfig::new(cli.seed, cli.samples);
    let mut out = Output::new();
    match &cli.command {
        Command::Fusion { group, left, right } => {
            let ring = RepSemiring::new(files.load(group)?);
            let (a, b): (CuGElem, CuGElem) = (ring.parse(left)?, ring.parse(right)?);
            let product = tensor(&a, &b)?;
            out.push("GROUP", ring.group().name())
                .push("LEFT", ring.format(&a))
                .push("RIGHT", ring.format(&b))
                .push("PRODUCT", ring.format(&product));
            out.human = Some(format!("{}\n", ring.format(&product)));
        }
        Command::Order { semigroup, left, right } => {
            let s = lookup_with(semigroup, &files)?;
            let (a, b) = (s.canonical(left)?, s.canonical(right)?);
            let rel = s.relation(&a, &b)?;
            let yes_no = |v: bool| if v { "yes" } else { "no" };
            out.push("SEMIGROUP", s.name())
                .push("LEFT", a.clone())
                .push("RIGHT", b.clone())
                .push("ORDER", rel.label())
                .push("WAY_BELOW_LEFT_RIGHT", yes_no(rel.way_below))
                .push("WAY_BELOW_RIGHT_LEFT", yes_no(rel.way_above));
            out.human = Some(format!(
                "{a} {} {b}\nWAY_BELOW {a} << {b}: {}\nWAY_BELOW {b} << {a}: {}\n",
                rel.label(),
                yes_no(rel.way_below),
                yes_no(rel.way_above)
            ));
        }
        Command::Eval { semigroup, terms } => {
            let s = lookup_with(semigroup, &files)?;
            let mut total: Option<String> = None;
            for term in terms.iter().flat_map(|t| split_top_level(t, '+')) {
                let term = term.trim();
                if term.is_empty() {
                    continue;
                }
                let value = match term.split_once('*') {
                    Some((n, lit)) if !n.contains(':') => s.scale(parse_count(n)?, lit.trim())?,
                    _ => s.canonical(term)?,
                };
                total = Some(match total {
                    None => value,
                    Some(acc) => s.add(&acc, &value)?,
                });
            }
            let total = total.ok_or_else(|| CuError::parse("nothing to evaluate"))?;
            out.push("SEMIGROUP", s.name()).push("VALUE", total.clone());
            out.human = Some(format!("{total}\n"));
        }
        Command::Axioms { name, mutate } => {
            let report = match name.strip_prefix("example:") {
                Some(entry) if !mutate => gallery::lookup(entry)?.axioms(config),
                _ => lookup_with(name, &files)?.axioms(config, *mutate),
            };
            out = Output::from_report(&report);
        }
        Command::Example { name, verify } => {
            let entry = gallery::lookup(name)?;
            out.push("EXAMPLE", entry.name());
            for (k, v) in entry.facts() {
                out.push(&k, v);
            }
            let mut human = out.structured();
            if *verify {
                let report = entry.verify(config);
                let verified = Output::from_report(&report);
                out.records.extend(verified.records);
                human.push_str(verified.human.as_deref().unwrap_or(""));
                out.passed = verified.passed;
            }
            out.human = Some(human);
        }
        Command::Atoms { semigroup } => {
            let s = lookup_with(semigroup, &files)?;
            let count = s.atoms()?;
            out.push("SEMIGROUP", s.name()).push("ATOMS", count.to_string());
            out.human = Some(format!("{count}\n"));
        }
        Command::Distinguish { left, right } => {
            let (a, b) = (lookup_with(left, &files)?, lookup_with(right, &files)?);
            let (ca, cb) = (a.atoms()?, b.atoms()?);
            let differ = ca != cb;
            out.push("LEFT", a.name())
                .push("RIGHT", b.name())
                .push("ATOMS_LEFT", ca.to_string())
                .push("ATOMS_RIGHT", cb.to_string())
                .push("ISOMORPHIC", if differ { "no" } else { "undecided" });
            out.human = Some(if differ {
                format!("not isomorphic: {} has {ca} atoms, {} has {cb}\n", a.name(), b.name())
            } else {
                let count = match ca {
                    AtomCount::Count(n) => n.to_string(),
                    AtomCount::None => "no".into(),
                };
                format!("undecided: both have {count} atoms\n")
            });
            out.passed = differ;
        }
        Command::List => {
            for name in ["nat", "rat", "uhf<n>", "step[<base>]", "fn[<base>;z<n>x...]", "fn[<base>;<size>]", "rep[<group>]"] {
                out.push("SEMIGROUP", name);
            }
            for name in gallery::ENTRY_NAMES {
                out.push("EXAMPLE", name);
            }
            for name in ["cyclic:<n>", "product:<n1>,<n2>,...", "s3", "d4", "q8", "table:<path>", "table"] {
                out.push("GROUP", name);
            }
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let structured = out.structured();
            let text = match (cli.format, &out.human) {
                (Format::Human, Some(h)) => h.clone(),
                _ => structured.clone(),
            };
            print!("{text}");
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &structured) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            ExitCode::from(if out.passed { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
