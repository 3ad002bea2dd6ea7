use anyhow::{bail, Result};
use clap::{Args, ValueEnum};
use demazure_core::{
    convexity_report, demazure_character_ops, demazure_character_tableaux, enumerate_ssyt,
    is_demazure, is_demazure_by_key, right_key, right_key_jdt, Partition, Permutation,
};
use serde_json::json;

use crate::{check_cells, inline, perm_string, Broken, Format};

/// Largest alphabet accepted by `verify`.
const MAX_N: usize = 5;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    /// Scanning right key equals the jeu de taquin right key.
    #[value(name = "2.5.5")]
    ScanningKey,
    /// Operator and tableau Demazure characters agree (shapes with first part at most 3).
    #[value(name = "1.18.2")]
    Characters,
    /// The local condition characterizes Demazure tableaux.
    #[value(name = "3.4.1")]
    LocalCondition,
    /// Convex exactly when 312-avoiding.
    #[value(name = "3.9.1")]
    Convexity,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    theorem: Theorem,
    #[arg(long)]
    n: usize,
    /// Largest tableau size to sweep; default 8.
    #[arg(long)]
    max_cells: Option<usize>,
    /// Staircase depth for the convexity sweep; default n.
    #[arg(long)]
    d: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

pub fn run(args: &VerifyArgs) -> Result<bool> {
    if args.n == 0 || args.n > MAX_N {
        bail!("--n must be between 1 and {MAX_N}");
    }
    let max_cells = args.max_cells.unwrap_or(8);
    match args.theorem {
        Theorem::ScanningKey => {
            check_cells(max_cells)?;
            scanning_key(args, max_cells)
        }
        Theorem::Characters => characters(args),
        Theorem::LocalCondition => {
            check_cells(max_cells)?;
            local_condition(args, max_cells)
        }
        Theorem::Convexity => convexity(args),
    }
}

fn summary(args: &VerifyArgs, name: &str, checked: usize) {
    match args.format {
        Format::Text => println!("{name}, n={}: {checked} cases checked, pass", args.n),
        Format::Json => println!(
            "{}",
            json!({"theorem": name, "n": args.n, "checked": checked, "pass": true})
        ),
    }
}

fn scanning_key(args: &VerifyArgs, max_cells: usize) -> Result<bool> {
    let mut checked = 0;
    for shape in Partition::all_up_to(args.n, max_cells) {
        for t in enumerate_ssyt(&shape) {
            let (a, b) = (right_key(&t), right_key_jdt(&t)?);
            if a != b {
                return Err(Broken(format!(
                    "T = {}: scanning {} vs jeu de taquin {}",
                    inline(&t),
                    inline(&a),
                    inline(&b)
                ))
                .into());
            }
            checked += 1;
        }
    }
    summary(args, "2.5.5", checked);
    Ok(true)
}

fn characters(args: &VerifyArgs) -> Result<bool> {
    let bound = 3 * args.n;
    let shapes: Vec<Partition> = Partition::all_up_to(args.n, bound)
        .into_iter()
        .filter(|s| s.parts().first().is_none_or(|&p| p <= 3))
        .collect();
    let mut checked = 0;
    for shape in &shapes {
        for w in Permutation::all(args.n) {
            let (a, b) = (
                demazure_character_ops(shape, &w)?,
                demazure_character_tableaux(shape, &w)?,
            );
            if a != b {
                return Err(Broken(format!(
                    "shape {shape}, w = {}: operators give {a}, tableaux give {b}",
                    perm_string(w.one_rowed())
                ))
                .into());
            }
            checked += 1;
        }
    }
    summary(args, "1.18.2", checked);
    Ok(true)
}

fn local_condition(args: &VerifyArgs, max_cells: usize) -> Result<bool> {
    let perms = Permutation::all(args.n);
    let mut checked = 0;
    for shape in Partition::all_up_to(args.n, max_cells) {
        for t in enumerate_ssyt(&shape) {
            for w in &perms {
                let (a, b) = (is_demazure(&t, w)?, is_demazure_by_key(&t, w)?);
                if a != b {
                    return Err(Broken(format!(
                        "T = {}, w = {}: local condition {a}, key comparison {b}",
                        inline(&t),
                        perm_string(w.one_rowed())
                    ))
                    .into());
                }
                checked += 1;
            }
        }
    }
    summary(args, "3.4.1", checked);
    Ok(true)
}

fn convexity(args: &VerifyArgs) -> Result<bool> {
    let n = args.n;
    let d = args.d.unwrap_or(n);
    if d == 0 || d > n {
        bail!("--d must be between 1 and n");
    }
    let report = convexity_report(d, n)?;
    let full = d == n;
    // On a partial staircase only "avoiding implies convex" is asserted.
    let failure = report.entries.iter().find(|e| {
        if full {
            e.convex != e.avoiding || (!e.avoiding && e.witness.is_none())
        } else {
            e.avoiding && !e.convex
        }
    });
    match args.format {
        Format::Text => {
            for e in &report.entries {
                let mut line = format!(
                    "w={} {} {} |D|={}",
                    perm_string(&e.w),
                    if e.avoiding { "avoiding" } else { "containing" },
                    if e.convex { "convex" } else { "non-convex" },
                    e.set_size
                );
                if let Some(wit) = &e.witness {
                    line.push_str(&format!(
                        " witness u(0)=[{}] u(1)=[{}] r={}/{} u(r)=[{}]",
                        inline(&wit.endpoints[0]),
                        inline(&wit.endpoints[1]),
                        wit.r.num,
                        wit.r.den,
                        inline(&wit.point)
                    ));
                }
                println!("{line}");
            }
            let verdict = if failure.is_some() { "FAIL" } else { "pass" };
            let scope = if full {
                ""
            } else {
                " (partial staircase: avoiding implies convex only)"
            };
            println!(
                "3.9.1, n={n}, d={d}: {}/{} convex, {verdict}{scope}",
                report.convex_count(),
                report.entries.len()
            );
        }
        Format::Json => println!(
            "{}",
            json!({
                "theorem": "3.9.1",
                "n": n,
                "d": d,
                "entries": report,
                "pass": failure.is_none(),
            })
        ),
    }
    if let Some(e) = failure {
        return Err(Broken(format!(
            "w = {} breaks the convexity criterion",
            perm_string(&e.w)
        ))
        .into());
    }
    Ok(true)
}
