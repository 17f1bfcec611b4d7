use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use codeal::render::render;
use codeal::{
    buchberger, circuits, closed_form_gb, graver, is_singleton_code, parse_code_file,
    universal_gb_binary, verify_chain, BasisKind, BasisSet, BinomialIdealPresentation, Error,
    GroebnerBasis, LinearCode, MonomialOrder, VariableNames, DEFAULT_ENUMERATION_CAP,
};

/// Code ideals of linear codes over prime fields.
///
/// Code files hold a header line `p k n` followed by the k rows of a
/// generator matrix; lines starting with `#` are ignored. Variables are
/// numbered from 1.
#[derive(Parser)]
#[command(name = "codeal", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Code file.
    input: PathBuf,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Name variables a, b, c, ... instead of x1, x2, ...
    #[arg(long)]
    aliases: bool,
    /// Largest number of codewords or candidate binomials to enumerate.
    #[arg(long, env = "CODEAL_CAP")]
    cap: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Parameters, generator and parity check matrices.
    Info(Common),
    /// Reduced Gröbner basis of the code ideal.
    Gb {
        #[command(flatten)]
        common: Common,
        /// `lex:<i,j,...>`, `grlex` or `grevlex`. The lex list is either an
        /// information set or a priority over all variables.
        #[arg(long, default_value = "grevlex")]
        order: String,
        /// Recompute a lex basis with the Buchberger engine and compare.
        #[arg(long)]
        check: bool,
    },
    /// Circuits of the code ideal.
    Circuits(Common),
    /// Graver basis (all primitive binomials).
    Graver(Common),
    /// Universal Gröbner basis of a binary code.
    Ugb(Common),
    /// Whether a binary code is a Singleton code.
    Singleton(Common),
    /// Weight distribution.
    Weights(Common),
    /// Check circuits ⊆ universal basis ⊆ Graver basis and the weight/rank
    /// characterization of primitive binomials.
    Verify(Common),
}

enum Failure {
    Error(Error),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

impl Common {
    fn names(&self) -> VariableNames {
        if self.aliases {
            VariableNames::Alphabetic
        } else {
            VariableNames::Indexed
        }
    }

    fn load(&self) -> Result<LinearCode, Failure> {
        let text = std::fs::read_to_string(&self.input).map_err(|e| Error::Parse {
            line: 0,
            message: format!("cannot read {}: {e}", self.input.display()),
        })?;
        let code = parse_code_file(&text)?;
        Ok(code.with_enumeration_cap(self.cap.unwrap_or(DEFAULT_ENUMERATION_CAP)))
    }
}

/// How `gb` should compute the basis for a parsed order spec.
enum Plan {
    ClosedForm(Vec<usize>),
    Engine(MonomialOrder),
}

fn parse_order(spec: &str, code: &LinearCode) -> Result<Plan, Error> {
    let n = code.length();
    let bad = || Error::InvalidOrder(spec.to_string());
    match spec {
        "grlex" => return Ok(Plan::Engine(MonomialOrder::grlex(n))),
        "grevlex" => return Ok(Plan::Engine(MonomialOrder::grevlex(n))),
        _ => {}
    }
    let list = spec.strip_prefix("lex:").ok_or_else(bad)?;
    let indices = list
        .split(',')
        .map(|s| match s.trim().parse::<usize>() {
            Ok(i) if (1..=n).contains(&i) => Ok(i - 1),
            _ => Err(bad()),
        })
        .collect::<Result<Vec<usize>, Error>>()?;
    if indices.len() == code.dimension() {
        return Ok(Plan::ClosedForm(indices));
    }
    if indices.len() != n {
        return Err(bad());
    }
    let order = MonomialOrder::lex_with(indices.clone()).map_err(|_| bad())?;
    // A priority that lists its greedy information set first and the
    // remaining variables in ascending order is exactly a closed-form order.
    let j = code.greedy_information_set(&indices)?;
    let mut block = j.clone();
    block.extend((0..n).filter(|i| !j.contains(i)));
    if block == indices {
        Ok(Plan::ClosedForm(j))
    } else {
        Ok(Plan::Engine(order))
    }
}

fn reduced_set(code: &LinearCode, gb: &GroebnerBasis) -> BasisSet {
    BasisSet::from_oriented(BasisKind::Reduced, code, gb.elements().to_vec())
}

fn run(cli: Cli) -> Result<String, Failure> {
    let mut out = String::new();
    match cli.command {
        Command::Info(c) => {
            let code = c.load()?;
            if c.json {
                let doc = serde_json::json!({
                    "p": code.p(),
                    "n": code.length(),
                    "k": code.dimension(),
                    "generator": code.generator().row_vecs(),
                    "parity_check": code.parity_check().row_vecs(),
                    "information_sets": code.information_sets().len(),
                    "minimum_distance": code.minimum_distance()?,
                });
                writeln!(out, "{doc}").unwrap();
            } else {
                writeln!(out, "{code}").unwrap();
                write!(out, "generator:\n{}", code.generator()).unwrap();
                write!(out, "parity check:\n{}", code.parity_check()).unwrap();
                writeln!(out, "information sets: {}", code.information_sets().len()).unwrap();
                writeln!(out, "minimum distance: {}", code.minimum_distance()?).unwrap();
                writeln!(out, "Singleton bound n - k + 1: {}", code.singleton_bound()).unwrap();
            }
        }
        Command::Gb {
            common,
            order,
            check,
        } => {
            let code = common.load()?;
            let gb = match parse_order(&order, &code)? {
                Plan::ClosedForm(j) => {
                    let gb = closed_form_gb(&code, &j)?;
                    if check {
                        let engine =
                            buchberger(&BinomialIdealPresentation::of_code(&code), gb.order())?;
                        if engine.to_set() != gb.to_set() {
                            return Err(Failure::Verification(
                                "closed-form basis differs from the Buchberger basis".into(),
                            ));
                        }
                    }
                    gb
                }
                Plan::Engine(o) => buchberger(&BinomialIdealPresentation::of_code(&code), &o)?,
            };
            out = render(&reduced_set(&code, &gb), common.json, common.names());
        }
        Command::Circuits(c) => out = render(&circuits(&c.load()?)?, c.json, c.names()),
        Command::Graver(c) => out = render(&graver(&c.load()?)?, c.json, c.names()),
        Command::Ugb(c) => out = render(&universal_gb_binary(&c.load()?)?, c.json, c.names()),
        Command::Singleton(c) => {
            let v = is_singleton_code(&c.load()?)?;
            if c.json {
                let witness = v.witness.as_ref().map(|w| w.coords().to_vec());
                let doc = serde_json::json!({ "singleton": v.is_singleton, "witness": witness });
                writeln!(out, "{doc}").unwrap();
            } else {
                match v.witness {
                    None => writeln!(out, "Singleton code").unwrap(),
                    Some(w) => writeln!(out, "not a Singleton code; witness {w}").unwrap(),
                }
            }
        }
        Command::Weights(c) => {
            let wd = c.load()?.weight_distribution()?;
            if c.json {
                writeln!(out, "{}", serde_json::json!({ "weights": wd.counts() })).unwrap();
            } else {
                writeln!(out, "{wd}").unwrap();
            }
        }
        Command::Verify(c) => {
            let code = c.load()?;
            let report = verify_chain(&code)?;
            if c.json {
                writeln!(out, "{}", serde_json::to_string(&report).unwrap()).unwrap();
            } else {
                writeln!(out, "{report}").unwrap();
            }
            if !report.holds() {
                print!("{out}");
                return Err(Failure::Verification("verification failed".into()));
            }
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Error(e @ Error::TooLarge { .. })) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
