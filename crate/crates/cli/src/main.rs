mod input;
mod verify;

use std::panic;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use demazure_core::poly::demazure_character_with_word;
use demazure_core::{
    counterexample_segment, demazure_character_ops, demazure_character_tableaux,
    enumerate_demazure, enumerate_ssyt, frank_filling, is_convex_lattice_set, is_demazure,
    key_of_composition, key_of_permutation, left_key, local_condition_set, right_key,
    right_key_jdt, staircase, LatticePointSet, Partition, Permutation, SparsePoly, Tableau,
};
use serde_json::json;

use input::{parse_ints, parse_partition, parse_permutation, read_tableau};

/// Right keys, Demazure characters and Demazure tableaux.
#[derive(Parser)]
#[command(name = "demazure", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Right key of a semistandard tableau by the scanning method.
    RightKey(RightKeyArgs),
    /// Demazure character or key polynomial.
    Character(CharacterArgs),
    /// Stream semistandard or Demazure tableaux as JSON lines.
    Enumerate(EnumerateArgs),
    /// Whether a tableau is a Demazure tableau for a permutation.
    IsDemazure(IsDemazureArgs),
    /// Whether the Demazure tableaux for a permutation form a convex set.
    Convexity(ConvexityArgs),
    /// Run an exhaustive check of one of the main results.
    Verify(verify::VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Ops,
    Tableaux,
    Both,
}

#[derive(Args)]
struct RightKeyArgs {
    /// Tableau file, `-` for stdin, or inline JSON.
    input: String,
    /// Alphabet size; defaults to the largest entry.
    #[arg(long)]
    n: Option<usize>,
    /// Compute the left key instead.
    #[arg(long)]
    left: bool,
    /// Recompute the key by jeu de taquin and fail on disagreement.
    #[arg(long)]
    oracle: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct CharacterArgs {
    /// Partition, e.g. 2,1,0.
    #[arg(long, required_unless_present = "theta")]
    shape: Option<String>,
    /// Permutation in one-rowed form, e.g. 3,1,2.
    #[arg(long, conflicts_with_all = ["word", "theta"])]
    perm: Option<String>,
    /// Product of simple reflections as written, e.g. 2,1 for s2 s1.
    #[arg(long, conflicts_with = "theta")]
    word: Option<String>,
    /// Weak composition; computes its key polynomial.
    #[arg(long, conflicts_with = "shape")]
    theta: Option<String>,
    #[arg(long, value_enum, default_value_t = Method::Ops)]
    method: Method,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    shape: String,
    /// All semistandard tableaux of the shape.
    #[arg(long, conflicts_with = "demazure")]
    ssyt: bool,
    /// Only the Demazure tableaux for --perm.
    #[arg(long, requires = "perm")]
    demazure: bool,
    #[arg(long)]
    perm: Option<String>,
}

#[derive(Args)]
struct IsDemazureArgs {
    /// Tableau file, `-` for stdin, or inline JSON.
    input: String,
    #[arg(long)]
    perm: String,
    #[arg(long)]
    n: Option<usize>,
    /// Print the local condition set of every cell.
    #[arg(long)]
    explain: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct ConvexityArgs {
    #[arg(long)]
    perm: String,
    /// Defaults to the staircase (n, n-1, ..., 1).
    #[arg(long)]
    shape: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

/// An internal consistency check failed.
#[derive(Debug)]
pub struct Broken(pub String);

impl std::fmt::Display for Broken {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "internal invariant violated: {}", self.0)
    }
}

impl std::error::Error for Broken {}

/// Largest tableau size accepted by enumerating commands.
pub fn cell_bound() -> Result<usize> {
    match std::env::var("DEMAZURE_MAX_CELLS") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| anyhow::anyhow!("DEMAZURE_MAX_CELLS must be a nonnegative integer")),
        Err(_) => Ok(10),
    }
}

pub fn check_cells(size: usize) -> Result<()> {
    let bound = cell_bound()?;
    if size > bound {
        bail!("{size} cells exceeds the limit of {bound} (set DEMAZURE_MAX_CELLS to raise it)");
    }
    Ok(())
}

/// Rows separated by ` / `, for one-line display.
pub fn inline(t: &Tableau) -> String {
    t.rows()
        .iter()
        .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(" / ")
}

pub fn perm_string(w: &[u32]) -> String {
    let parts: Vec<String> = w.iter().map(u32::to_string).collect();
    format!("({})", parts.join(","))
}

fn print_tableau(t: &Tableau, format: Format) -> Result<()> {
    match format {
        Format::Text => print!("{}", t.to_text()),
        Format::Json => println!("{}", serde_json::to_string(t)?),
    }
    Ok(())
}

fn cmd_right_key(args: &RightKeyArgs) -> Result<bool> {
    let t = read_tableau(&args.input, args.n)?;
    t.check_semistandard()?;
    let key = if args.left {
        left_key(&t)
    } else {
        right_key(&t)
    };
    if args.oracle {
        let z = t.shape().column_lengths().to_vec();
        let reference = if args.left {
            // Frank fillings are found by search, so the left oracle is bounded.
            check_cells(t.shape().size())?;
            let cols = (0..z.len())
                .map(|i| {
                    let mut lengths = z.clone();
                    let zi = lengths.remove(i);
                    lengths.insert(0, zi);
                    frank_filling(&t, &lengths).map(|f| f.column(1).to_vec())
                })
                .collect::<demazure_core::Result<Vec<_>>>()?;
            Tableau::new(t.shape().clone(), cols)?
        } else {
            right_key_jdt(&t)?
        };
        if reference != key {
            return Err(Broken(format!(
                "scanning gives {} but jeu de taquin gives {}",
                inline(&key),
                inline(&reference)
            ))
            .into());
        }
    }
    print_tableau(&key, args.format)?;
    Ok(true)
}

fn cmd_character(args: &CharacterArgs) -> Result<bool> {
    let (shape, w, word) = if let Some(theta) = &args.theta {
        let ck = key_of_composition(&parse_ints(theta)?)?;
        let word = ck.perm.reduced_word();
        (ck.shape, ck.perm, word)
    } else {
        let shape = parse_partition(args.shape.as_deref().expect("required by clap"))?;
        let n = shape.n();
        if let Some(word) = &args.word {
            let written: Vec<usize> = parse_ints(word)?.into_iter().map(|i| i as usize).collect();
            let applied: Vec<usize> = written.into_iter().rev().collect();
            let w = Permutation::from_word(n, &applied)?;
            (shape, w, applied)
        } else {
            let w = match &args.perm {
                Some(p) => parse_permutation(p)?,
                None => Permutation::identity(n),
            };
            let word = w.reduced_word();
            (shape, w, word)
        }
    };
    if shape.n() != w.n() {
        bail!(
            "shape has {} parts but the permutation has n = {}",
            shape.n(),
            w.n()
        );
    }
    let ops = || -> Result<SparsePoly> {
        if args.word.is_some() {
            Ok(demazure_character_with_word(&shape, &word)?)
        } else {
            Ok(demazure_character_ops(&shape, &w)?)
        }
    };
    let tableaux = || -> Result<SparsePoly> {
        check_cells(shape.size())?;
        Ok(demazure_character_tableaux(&shape, &w)?)
    };
    let render = |p: &SparsePoly| -> Result<String> {
        Ok(match args.format {
            Format::Text => p.to_string(),
            Format::Json => serde_json::to_string(&p.to_json())?,
        })
    };
    match args.method {
        Method::Ops => println!("{}", render(&ops()?)?),
        Method::Tableaux => println!("{}", render(&tableaux()?)?),
        Method::Both => {
            let (a, b) = (ops()?, tableaux()?);
            match args.format {
                Format::Text => {
                    println!("ops: {a}");
                    println!("tableaux: {b}");
                }
                Format::Json => {
                    println!("{}", json!({"ops": a.to_json(), "tableaux": b.to_json()}))
                }
            }
            if a != b {
                return Err(Broken("operator and tableau characters differ".into()).into());
            }
        }
    }
    Ok(true)
}

fn cmd_enumerate(args: &EnumerateArgs) -> Result<bool> {
    let shape = parse_partition(&args.shape)?;
    check_cells(shape.size())?;
    let list = if args.demazure {
        let w = parse_permutation(args.perm.as_deref().expect("required by clap"))?;
        enumerate_demazure(&shape, &w)?
    } else if args.ssyt {
        enumerate_ssyt(&shape)
    } else {
        bail!("choose --ssyt or --demazure");
    };
    for t in &list {
        println!("{}", serde_json::to_string(t)?);
    }
    println!("{}", json!({ "count": list.len() }));
    Ok(true)
}

fn cmd_is_demazure(args: &IsDemazureArgs) -> Result<bool> {
    let t = read_tableau(&args.input, args.n)?;
    let w = parse_permutation(&args.perm)?;
    let verdict = is_demazure(&t, &w)?;
    let y = key_of_permutation(t.shape(), &w)?;
    let s = right_key(&t);
    let mut cells = Vec::new();
    if args.explain {
        for c in t.shape().cells() {
            let b = local_condition_set(&t, &w, c.col, c.row)?;
            cells.push((c, t.at(c.col, c.row), b));
        }
    }
    match args.format {
        Format::Text => {
            println!("{verdict}");
            if args.explain {
                println!("right key: {}", inline(&s));
                println!("key of w:  {}", inline(&y));
                for (c, v, b) in &cells {
                    let mark = if b.contains(*v) { "ok" } else { "FAIL" };
                    println!("{c} entry {v} in {}: {mark}", b.values);
                }
            }
        }
        Format::Json => {
            let mut out = json!({"demazure": verdict, "right_key": s, "key": y});
            if args.explain {
                out["cells"] = cells
                    .iter()
                    .map(|(c, v, b)| {
                        json!({"col": c.col, "row": c.row, "entry": v, "allowed": b.values.intervals()})
                    })
                    .collect();
            }
            println!("{out}");
        }
    }
    Ok(verdict)
}

fn cmd_convexity(args: &ConvexityArgs) -> Result<bool> {
    let w = parse_permutation(&args.perm)?;
    let n = w.n();
    // The default staircase is sized by n alone, so only explicit shapes are bounded.
    let shape: Partition = match &args.shape {
        Some(s) => {
            let shape = parse_partition(s)?;
            check_cells(shape.size())?;
            shape
        }
        None if n <= 5 => staircase(n, n)?,
        None => bail!("the default staircase needs n <= 5; pass --shape"),
    };
    let set = enumerate_demazure(&shape, &w)?;
    let points = LatticePointSet::from_tableaux(&shape, &set)?;
    let (convex, missing) = is_convex_lattice_set(&points);
    let segment = if !convex && shape == staircase(n, n)? && !w.is_312_avoiding() {
        Some(counterexample_segment(&shape, &w)?)
    } else {
        None
    };
    match args.format {
        Format::Text => {
            println!(
                "w={} shape={shape} |D|={} {}",
                perm_string(w.one_rowed()),
                set.len(),
                if convex { "convex" } else { "not convex" }
            );
            if let Some(m) = &missing {
                println!(
                    "missing point {:?} between {:?} and {:?}",
                    m.missing, m.p, m.q
                );
            }
            if let Some(s) = &segment {
                println!(
                    "segment: u(0) = {}, u(1) = {}, u({}/{}) = {}",
                    inline(&s.endpoints[0]),
                    inline(&s.endpoints[1]),
                    s.r.num,
                    s.r.den,
                    inline(&s.point)
                );
            }
        }
        Format::Json => println!(
            "{}",
            json!({
                "w": w.one_rowed(),
                "shape": shape.parts(),
                "set_size": set.len(),
                "convex": convex,
                "missing": missing,
                "witness": segment,
            })
        ),
    }
    Ok(convex)
}

fn run(cli: &Cli) -> Result<bool> {
    match &cli.command {
        Command::RightKey(a) => cmd_right_key(a),
        Command::Character(a) => cmd_character(a),
        Command::Enumerate(a) => cmd_enumerate(a),
        Command::IsDemazure(a) => cmd_is_demazure(a),
        Command::Convexity(a) => cmd_convexity(a),
        Command::Verify(a) => verify::run(a),
    }
}

fn exit_code_for(err: &anyhow::Error) -> u8 {
    let broken = err.chain().any(|e| {
        e.is::<Broken>()
            || matches!(
                e.downcast_ref::<demazure_core::Error>(),
                Some(demazure_core::Error::Invariant(_))
            )
    });
    if broken {
        3
    } else {
        2
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match panic::catch_unwind(|| run(&cli)) {
        Ok(Ok(true)) => ExitCode::SUCCESS,
        Ok(Ok(false)) => ExitCode::from(1),
        Ok(Err(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code_for(&e))
        }
        Err(_) => ExitCode::from(3),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_separate_bugs_from_bad_input() {
        let invariant = anyhow::Error::from(demazure_core::Error::Invariant("x".into()));
        assert_eq!(exit_code_for(&invariant), 3);
        assert_eq!(exit_code_for(&Broken("x".into()).into()), 3);
        assert_eq!(exit_code_for(&invariant.context("while scanning")), 3);
        assert_eq!(exit_code_for(&demazure_core::Error::NotKey.into()), 2);
        assert_eq!(exit_code_for(&anyhow::anyhow!("bad flag")), 2);
    }

    #[test]
    fn inline_rendering() {
        let t = Tableau::from_rows(3, &[vec![1, 1], vec![2]]).unwrap();
        assert_eq!(inline(&t), "1 1 / 2");
        assert_eq!(perm_string(&[3, 1, 2]), "(3,1,2)");
    }
}
