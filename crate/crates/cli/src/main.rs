use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use goldman_core::{Error, ProjectiveMatrix, SubgroupSpec};

mod commands;
mod plot;
mod render;

#[derive(Parser, Debug)]
#[command(name = "goldman", version, about = "Goldman bracket and intersection numbers on the modular orbifold")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// full, gamma0:N, gamma1:N or gamma:N.
    #[arg(long, global = true, default_value = "full")]
    subgroup: String,
    /// Worker threads; falls back to GOLDMAN_THREADS.
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Matrix, trace, class and translation length of a word.
    Eval { word: String },
    /// Canonical conjugacy class name and a conjugator onto its representative.
    Nf { word: String },
    /// Decide conjugacy and give a witness.
    Conj { first: String, second: String },
    /// The bracket of two classes.
    Bracket { first: String, second: String },
    /// The bracket of powers, collated from one enumeration.
    BracketPowers { first: String, second: String, p: u32, q: u32 },
    /// Intersection number from brackets of powers.
    Intersect {
        first: String,
        second: String,
        #[arg(long, default_value_t = goldman_core::DEFAULT_P_MAX)]
        pmax: u32,
    },
    /// Self-intersection number from brackets of powers.
    SelfIntersect {
        word: String,
        #[arg(long, default_value_t = goldman_core::DEFAULT_P_MAX)]
        pmax: u32,
    },
    /// Count of crossing double cosets; with one word, half the self count.
    Oracle { first: String, second: Option<String> },
    /// Sum of the three nested brackets.
    Jacobi { first: String, second: String, third: String },
    /// SVG picture of the axes in the upper half-plane.
    Plot {
        first: String,
        second: String,
        #[arg(long)]
        out: PathBuf,
        /// XMIN XMAX YMAX.
        #[arg(long, num_args = 3, allow_negative_numbers = true, value_names = ["XMIN", "XMAX", "YMAX"])]
        window: Option<Vec<f64>>,
        /// P Q.
        #[arg(long, num_args = 2, value_names = ["P", "Q"])]
        quasigeodesic: Option<Vec<u32>>,
    },
}

/// A parsed input: its source text and matrix.
pub struct Input {
    pub text: String,
    pub matrix: ProjectiveMatrix,
}

impl Input {
    fn parse(text: &str) -> Result<Input, Error> {
        Ok(Input { text: text.to_string(), matrix: goldman_core::parse_element(text)? })
    }
}

pub struct Output {
    pub text: String,
    pub inputs: Vec<serde_json::Value>,
    pub result: serde_json::Value,
    /// A file to write before anything is printed.
    pub file: Option<(PathBuf, String)>,
}

fn configure_threads(requested: Option<usize>) {
    let from_env = || std::env::var("GOLDMAN_THREADS").ok().and_then(|v| v.trim().parse().ok());
    if let Some(n) = requested.or_else(from_env).filter(|&n| n > 0) {
        // Fails only if a pool already exists, which cannot happen this early.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn run(cli: &Cli) -> Result<Output, Error> {
    let spec: SubgroupSpec = cli.subgroup.parse()?;
    let inputs = |words: &[&str]| words.iter().map(|w| Input::parse(w)).collect::<Result<Vec<_>, _>>();
    match &cli.command {
        Command::Eval { word } => commands::eval(&inputs(&[word])?[0], &spec),
        Command::Nf { word } => commands::nf(&inputs(&[word])?[0], &spec),
        Command::Conj { first, second } => commands::conj(&inputs(&[first, second])?, &spec),
        Command::Bracket { first, second } => commands::bracket(&inputs(&[first, second])?, 1, 1, &spec),
        Command::BracketPowers { first, second, p, q } => {
            if *p == 0 || *q == 0 {
                return Err(Error::Syntax { position: 0, message: "exponents must be positive".into() });
            }
            commands::bracket(&inputs(&[first, second])?, *p, *q, &spec)
        }
        Command::Intersect { first, second, pmax } => commands::intersect(&inputs(&[first, second])?, *pmax, &spec),
        Command::SelfIntersect { word, pmax } => commands::self_intersect(&inputs(&[word])?[0], *pmax, &spec),
        Command::Oracle { first, second } => match second {
            Some(second) => commands::oracle(&inputs(&[first, second])?, &spec),
            None => commands::oracle(&inputs(&[first])?, &spec),
        },
        Command::Jacobi { first, second, third } => commands::jacobi(&inputs(&[first, second, third])?, &spec),
        Command::Plot { first, second, out, window, quasigeodesic } => {
            let ins = inputs(&[first, second])?;
            let window = window.as_ref().map(|w| (w[0], w[1], w[2]));
            let qg = quasigeodesic.as_ref().map(|v| (v[0], v[1]));
            plot::plot(&ins, &spec, out, window, qg)
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Eval { .. } => "eval",
        Command::Nf { .. } => "nf",
        Command::Conj { .. } => "conj",
        Command::Bracket { .. } => "bracket",
        Command::BracketPowers { .. } => "bracket-powers",
        Command::Intersect { .. } => "intersect",
        Command::SelfIntersect { .. } => "self-intersect",
        Command::Oracle { .. } => "oracle",
        Command::Jacobi { .. } => "jacobi",
        Command::Plot { .. } => "plot",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads(cli.threads);
    match run(&cli) {
        Ok(out) => {
            if let Some((path, contents)) = &out.file {
                if let Err(e) = std::fs::write(path, contents) {
                    eprintln!("error: Io: {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            }
            if cli.json {
                let doc = render::document(command_name(&cli.command), &cli.subgroup, out.inputs, out.result);
                println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}: {e}", e.code());
            ExitCode::from(if e.is_syntax() { 2 } else { 3 })
        }
    }
}
