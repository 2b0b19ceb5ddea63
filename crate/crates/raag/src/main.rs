//! Command-line front end.
//!
//! Exit codes: 0 for a positive verdict (or plain success), 1 for a
//! negative verdict, 2 for usage or validation errors, 3 when an output
//! file cannot be written.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use raag::conjugacy::{self, ConjugacyResult};
use raag::graphs::{factorise, non_split_factors, DefiningGraph};
use raag::pilings::Piling;
use raag::render::{draw_piling, RenderOptions};
use raag::words::{GroupSpec, Word};

#[derive(Parser)]
#[command(
    name = "raag",
    version,
    about = "Equality and conjugacy in right-angled Artin groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GroupArgs {
    /// Number of generators
    #[arg(long)]
    n: u32,

    /// Commuting pairs as semicolon-separated "a,b" entries, e.g.
    /// "1,4;2,3;2,4"; the empty string is the free group
    #[arg(long, default_value = "")]
    commuting: String,
}

impl GroupArgs {
    fn spec(&self) -> Result<GroupSpec, Failure> {
        let mut pairs = Vec::new();
        for entry in self.commuting.split(';') {
            let entry = entry.trim();
            if entry.is_empty() {
                continue;
            }
            let mut halves = entry.split(',');
            let (Some(a), Some(b), None) = (halves.next(), halves.next(), halves.next()) else {
                return Err(Failure::usage(format!(
                    "commuting entry {entry:?} is not of the form a,b"
                )));
            };
            let parse = |s: &str| -> Result<i64, Failure> {
                s.trim()
                    .parse()
                    .map_err(|_| Failure::usage(format!("bad generator index {s:?}")))
            };
            let (a, b) = (parse(a)?, parse(b)?);
            if a < 1 || b < 1 || a > i64::from(self.n) || b > i64::from(self.n) {
                return Err(Failure::usage(format!(
                    "commuting pair ({a},{b}) is out of range for {} generators",
                    self.n
                )));
            }
            pairs.push((a as u32, b as u32));
        }
        GroupSpec::new(self.n, pairs).map_err(Failure::from)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether two words are conjugate and print a witness
    Conjugate {
        #[command(flatten)]
        group: GroupArgs,
        /// First word, e.g. "1,2,-1"
        #[arg(long, allow_hyphen_values = true)]
        w1: Option<String>,
        /// Second word
        #[arg(long, allow_hyphen_values = true)]
        w2: Option<String>,
        /// Read the words from a file instead (first two lines)
        #[arg(long, conflicts_with_all = ["w1", "w2"])]
        file: Option<PathBuf>,
        /// Print the result as JSON
        #[arg(long)]
        json: bool,
        /// Skip the free/abelian shortcuts and run the general pipeline
        #[arg(long)]
        force_general: bool,
    },
    /// Print the shortlex normal form of a piling
    NormalForm {
        #[command(flatten)]
        group: GroupArgs,
        /// Piling in bracket syntax, e.g. "[[1,0],[0,0,-1],[-1,0]]"
        #[arg(long)]
        piling: String,
    },
    /// Decide whether two words represent the same element
    Equal {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, allow_hyphen_values = true)]
        w1: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        w2: Option<String>,
        #[arg(long, conflicts_with_all = ["w1", "w2"])]
        file: Option<PathBuf>,
    },
    /// Decide whether a word represents the identity
    Identity {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, allow_hyphen_values = true)]
        word: Option<String>,
        #[arg(long, conflicts_with = "word")]
        file: Option<PathBuf>,
    },
    /// Cyclically reduce a word; print the reduced normal form, then the
    /// conjugator
    ReduceCyclic {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, allow_hyphen_values = true)]
        word: Option<String>,
        #[arg(long, conflicts_with = "word")]
        file: Option<PathBuf>,
    },
    /// Print the non-split factor pilings of a word, one per line
    Factor {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, allow_hyphen_values = true)]
        word: Option<String>,
        #[arg(long, conflicts_with = "word")]
        file: Option<PathBuf>,
    },
    /// Render a piling as an SVG file
    Draw {
        /// Number of generators (required with --word)
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, default_value = "")]
        commuting: String,
        /// Piling to draw, in bracket syntax
        #[arg(long)]
        piling: Option<String>,
        /// Word whose piling is drawn (requires --n)
        #[arg(long, conflicts_with = "piling", allow_hyphen_values = true)]
        word: Option<String>,
        /// Read the word from a file (first line)
        #[arg(long, conflicts_with_all = ["piling", "word"])]
        file: Option<PathBuf>,
        /// Output path
        #[arg(long, default_value = "piling.svg")]
        out: PathBuf,
        #[arg(long, default_value_t = 100.0)]
        scale: f64,
        #[arg(long, default_value = "red")]
        plus_colour: String,
        #[arg(long, default_value = "grey")]
        zero_colour: String,
        #[arg(long, default_value = "blue")]
        minus_colour: String,
    },
}

struct Failure {
    message: String,
    code: u8,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            message: message.into(),
            code: 2,
        }
    }
}

impl From<raag::Error> for Failure {
    fn from(err: raag::Error) -> Self {
        Failure::usage(err.to_string())
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Conjugate {
            group,
            w1,
            w2,
            file,
            json,
            force_general,
        } => {
            let spec = group.spec()?;
            let (w1, w2) = two_words(w1, w2, file)?;
            let result = if force_general {
                conjugacy::is_conjugate_general(&w1, &w2, &spec)
            } else {
                conjugacy::is_conjugate(&w1, &w2, &spec)
            }
            .map_err(Failure::from)?;
            print_conjugacy(&result, json);
            Ok(if result.conjugate { 0 } else { 1 })
        }
        Command::NormalForm { group, piling } => {
            let spec = group.spec()?;
            let piling = parse_piling(&piling, Some(spec.n_generators()))?;
            let word = piling.normal_form(&spec).map_err(Failure::from)?;
            println!("{word}");
            Ok(0)
        }
        Command::Equal {
            group,
            w1,
            w2,
            file,
        } => {
            let spec = group.spec()?;
            let (w1, w2) = two_words(w1, w2, file)?;
            let equal = conjugacy::equal(&w1, &w2, &spec).map_err(Failure::from)?;
            println!("{equal}");
            Ok(if equal { 0 } else { 1 })
        }
        Command::Identity { group, word, file } => {
            let spec = group.spec()?;
            let word = one_word(word, file)?;
            let trivial = conjugacy::is_identity(&word, &spec).map_err(Failure::from)?;
            println!("{trivial}");
            Ok(if trivial { 0 } else { 1 })
        }
        Command::ReduceCyclic { group, word, file } => {
            let spec = group.spec()?;
            let word = one_word(word, file)?;
            let piling = Piling::from_word(&word, &spec).map_err(Failure::from)?;
            let reduction = piling.cyclically_reduce(&spec);
            let normal_form = reduction.reduced.normal_form(&spec).map_err(Failure::from)?;
            println!("{normal_form}");
            println!("{}", reduction.conjugator);
            Ok(0)
        }
        Command::Factor { group, word, file } => {
            let spec = group.spec()?;
            let word = one_word(word, file)?;
            let piling = Piling::from_word(&word, &spec).map_err(Failure::from)?;
            let graph = DefiningGraph::from_spec(&spec);
            let components = factorise(&graph, &piling);
            let normal_form = piling.normal_form(&spec).map_err(Failure::from)?;
            for factor in non_split_factors(&components, &normal_form, &spec) {
                println!("{factor}");
            }
            Ok(0)
        }
        Command::Draw {
            n,
            commuting,
            piling,
            word,
            file,
            out,
            scale,
            plus_colour,
            zero_colour,
            minus_colour,
        } => {
            let piling = match (piling, word, file) {
                (Some(text), None, None) => parse_piling(&text, n)?,
                (None, word, file) => {
                    let n = n.ok_or_else(|| Failure::usage("--word requires --n"))?;
                    let group = GroupArgs { n, commuting };
                    let spec = group.spec()?;
                    let word = one_word(word, file)?;
                    Piling::from_word(&word, &spec).map_err(Failure::from)?
                }
                _ => unreachable!("clap enforces the conflicts"),
            };
            if !scale.is_finite() || scale <= 0.0 {
                return Err(Failure::usage("--scale must be positive"));
            }
            let opts = RenderOptions {
                scale,
                plus_colour,
                zero_colour,
                minus_colour,
            };
            let svg = draw_piling(&piling, &opts).map_err(Failure::from)?;
            if let Err(err) = fs::write(&out, svg) {
                return Err(Failure {
                    message: format!("cannot write {}: {err}", out.display()),
                    code: 3,
                });
            }
            println!("{}", out.display());
            Ok(0)
        }
    }
}

fn print_conjugacy(result: &ConjugacyResult, json: bool) {
    if json {
        let witness = result
            .witness
            .as_ref()
            .map(|w| w.letters().to_vec());
        println!(
            "{}",
            serde_json::json!({ "conjugate": result.conjugate, "witness": witness })
        );
    } else if result.conjugate {
        println!("true");
        println!("{}", result.witness.as_ref().expect("positive verdict"));
    } else {
        println!("false");
    }
}

fn parse_word(text: &str) -> Result<Word, Failure> {
    text.parse().map_err(Failure::from)
}

fn parse_piling(text: &str, n: Option<u32>) -> Result<Piling, Failure> {
    let piling: Piling = text.parse().map_err(Failure::from)?;
    if let Some(n) = n {
        if piling.n_columns() != n as usize {
            return Err(Failure::usage(format!(
                "piling has {} columns but --n is {n}",
                piling.n_columns()
            )));
        }
    }
    Ok(piling)
}

fn file_lines(path: &Path, want: usize) -> Result<Vec<String>, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|err| Failure::usage(format!("cannot read {}: {err}", path.display())))?;
    let lines: Vec<String> = text.lines().take(want).map(str::to_owned).collect();
    if lines.len() < want {
        return Err(Failure::usage(format!(
            "{} holds {} words but {want} are needed",
            path.display(),
            lines.len()
        )));
    }
    Ok(lines)
}

fn two_words(
    w1: Option<String>,
    w2: Option<String>,
    file: Option<PathBuf>,
) -> Result<(Word, Word), Failure> {
    match (w1, w2, file) {
        (Some(a), Some(b), None) => Ok((parse_word(&a)?, parse_word(&b)?)),
        (None, None, Some(path)) => {
            let lines = file_lines(&path, 2)?;
            Ok((parse_word(&lines[0])?, parse_word(&lines[1])?))
        }
        _ => Err(Failure::usage("provide --w1 and --w2, or --file")),
    }
}

fn one_word(word: Option<String>, file: Option<PathBuf>) -> Result<Word, Failure> {
    match (word, file) {
        (Some(text), None) => parse_word(&text),
        (None, Some(path)) => parse_word(&file_lines(&path, 1)?[0]),
        _ => Err(Failure::usage("provide --word or --file")),
    }
}
