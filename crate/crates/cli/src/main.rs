use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use freiman_core::checks::{check_lemma, dim1_threshold_scan, hypothesis_scan, partial_case_form};
use freiman_core::extremal::{
    construct_base, construct_multi, multi_extra_sums, predicted_t, predicted_v, ExtremalParams,
};
use freiman_core::family::{enumerate_family, family_stats};
use freiman_core::iso::{freiman_dimension, isomorphism, quadruple_pattern, universal_model};
use freiman_core::knapsack::{density_profile, solve, Instance, Outcome};
use freiman_core::volume::{volume_exact_1d, VolumeSearch};
use freiman_core::{doubling_stats, sumset, IntSet, Threads};
use serde_json::{json, Value};

/// Exit codes: 0 success, 1 a valid negative answer, 2 bad usage or input.
#[derive(Parser)]
#[command(
    name = "freiman",
    version,
    about = "Additive structure of finite integer sets"
)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// A + B.
    Sumset {
        #[arg(allow_hyphen_values = true)]
        a: IntSet,
        #[arg(allow_hyphen_values = true)]
        b: IntSet,
    },
    /// |2A| and the doubling coefficient |2A|/|A|.
    Doubling {
        #[arg(allow_hyphen_values = true)]
        a: IntSet,
    },
    /// Whether A and B are Freiman isomorphic of order 2.
    Iso {
        #[arg(allow_hyphen_values = true)]
        a: IntSet,
        #[arg(allow_hyphen_values = true)]
        b: IntSet,
    },
    /// Freiman dimension of A.
    Dim {
        #[arg(allow_hyphen_values = true)]
        a: IntSet,
    },
    /// A lattice image of A of maximal dimension with exactly its identities.
    Model {
        #[arg(allow_hyphen_values = true)]
        a: IntSet,
    },
    /// Exact volume of a one-dimensional set, searching diameters up to the bound.
    Volume {
        #[arg(allow_hyphen_values = true)]
        a: IntSet,
        #[arg(long)]
        bound: u64,
    },
    /// Extremal set for (k, c, b); with --d, its lift to d dimensions.
    Construct {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        c: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        d: Option<usize>,
    },
    /// The binary family grown from every base set of size m.
    Family {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Exhaustive scans over normalized k-sets.
    Scan {
        #[command(subcommand)]
        kind: ScanKind,
    },
    /// Compares |2A| with the least doubling for the dimension of A.
    Lemma {
        #[arg(allow_hyphen_values = true)]
        a: IntSet,
    },
    /// The set {0, 1, ..., k-3, k-2+b, 2(k-2+b)} and its doubling.
    Partial {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        b: usize,
    },
    /// Decides a 0-1 equation read from FILE ("-" for stdin).
    Knapsack { file: PathBuf },
}

#[derive(Subcommand)]
enum ScanKind {
    /// Volume bound on one-dimensional sets.
    Hypothesis(ScanArgs),
    /// Every set with |2A| <= 3k-4 has dimension 1.
    Dim1(ScanArgs),
}

#[derive(clap::Args)]
struct ScanArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    bound: i64,
    /// Worker threads; 1 runs sequentially. Output does not depend on it.
    #[arg(long)]
    threads: Option<usize>,
    /// Omit elapsed_ms so reports compare byte for byte.
    #[arg(long)]
    no_timing: bool,
}

/// Whether the answer was affirmative.
enum Answer {
    Yes,
    No,
}

fn threads(n: Option<usize>) -> Result<Threads> {
    match n {
        Some(0) => bail!("--threads must be at least 1"),
        n => Ok(Threads(n)),
    }
}

fn emit(json: bool, value: &Value, text: impl FnOnce() -> String) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(value).expect("serializable")
        );
    } else {
        println!("{}", text());
    }
}

fn run(cli: Cli) -> Result<Answer> {
    let json = cli.json;
    match cli.command {
        Command::Sumset { a, b } => {
            let s = sumset(&a, &b)?;
            emit(
                json,
                &json!({"a": a, "b": b, "sumset": s, "size": s.len()}),
                || s.to_string(),
            );
        }
        Command::Doubling { a } => {
            let st = doubling_stats(&a)?;
            emit(json, &serde_json::to_value(&st)?, || {
                format!("{}\nk = {}, T/k = {}", st.t, st.k, st.coefficient)
            });
        }
        Command::Iso { a, b } => {
            let witness = isomorphism(&a, &b);
            let map: Option<Vec<[i64; 2]>> = witness.as_ref().map(|phi| {
                phi.iter()
                    .enumerate()
                    .map(|(i, &j)| [a.elements()[i], b.elements()[j]])
                    .collect()
            });
            let value = json!({"isomorphic": witness.is_some(), "map": map});
            emit(json, &value, || match &map {
                Some(pairs) => {
                    let parts: Vec<String> =
                        pairs.iter().map(|[x, y]| format!("{x}->{y}")).collect();
                    format!("isomorphic\n{}", parts.join(" "))
                }
                None => "not isomorphic".into(),
            });
            if witness.is_none() {
                return Ok(Answer::No);
            }
        }
        Command::Dim { a } => {
            let d = freiman_dimension(&a);
            let pattern = quadruple_pattern(&a);
            emit(
                json,
                &json!({"set": a, "dimension": d, "identities": pattern.len()}),
                || d.to_string(),
            );
        }
        Command::Model { a } => {
            let m = universal_model(&a)?;
            emit(json, &serde_json::to_value(&m)?, || {
                a.iter()
                    .zip(m.points())
                    .map(|(x, p)| format!("{x} -> {p:?}"))
                    .collect::<Vec<_>>()
                    .join("\n")
            });
        }
        Command::Volume { a, bound } => {
            let result = volume_exact_1d(&a, bound)?;
            emit(json, &serde_json::to_value(&result)?, || match &result {
                VolumeSearch::Found(r) => format!(
                    "{}\nwitness {}, every diameter below {} ruled out",
                    r.value,
                    r.witness_set(),
                    r.exhausted_bound
                ),
                VolumeSearch::BoundExceeded { bound } => {
                    format!("no image with diameter <= {bound}")
                }
            });
            if let VolumeSearch::BoundExceeded { .. } = result {
                return Ok(Answer::No);
            }
        }
        Command::Construct { k, c, b, d } => match d {
            None | Some(1) => {
                let p = ExtremalParams::new(k, c, b)?;
                let set = construct_base(&p)?;
                let (t, v) = (predicted_t(&p), predicted_v(&p)?);
                let value = json!({"params": p, "set": set, "t": t, "v": v});
                emit(json, &value, || format!("{set}\nT = {t}, V = {v}"));
            }
            Some(d) => {
                if k < d + 2 {
                    bail!("requires k − d + 1 ≥ 3, got k = {k}, d = {d}");
                }
                let p = ExtremalParams::new(k - d + 1, c, b)?;
                let t = predicted_t(&p) + multi_extra_sums(k, d);
                let lifted = construct_multi(k, t, d)?;
                let value = json!({"params": p, "d": d, "t": t, "points": lifted.points()});
                emit(json, &value, || {
                    let pts: Vec<String> = lifted
                        .points()
                        .iter()
                        .map(|p| {
                            format!(
                                "({})",
                                p.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
                            )
                        })
                        .collect();
                    format!("{}\nT = {t}", pts.join(" "))
                });
            }
        },
        Command::Family {
            k,
            m,
            b,
            threads: n,
        } => {
            let params = ExtremalParams::from_block(k, m, b)?;
            let fam = enumerate_family(&params, threads(n)?)?;
            let stats = family_stats(&fam.nodes, &params)?;
            let t_values: std::collections::BTreeSet<usize> = stats.iter().map(|s| s.t).collect();
            let max_values: std::collections::BTreeSet<i64> = stats.iter().map(|s| s.max).collect();
            let summary = json!({
                "count": fam.nodes.len(),
                "base_sets": fam.base_sets.len(),
                "t": t_values,
                "max": max_values,
                "predicted_t": predicted_t(&params),
                "predicted_v": predicted_v(&params)?,
                "all_t_match": stats.iter().all(|s| s.t_matches),
                "all_max_match": stats.iter().all(|s| s.max_matches),
                "duplicates": fam.duplicates,
            });
            if json {
                let nodes: Vec<Value> = fam
                    .nodes
                    .iter()
                    .zip(&stats)
                    .map(|(n, s)| json!({"set": n.set, "path": n.path, "base_index": n.base_index, "t": s.t, "max": s.max}))
                    .collect();
                emit(
                    true,
                    &json!({"nodes": nodes, "summary": summary}),
                    String::new,
                );
            } else {
                for n in &fam.nodes {
                    println!("{}", n.set);
                }
                println!("{}", serde_json::to_string(&summary)?);
            }
        }
        Command::Scan { kind } => {
            let (negative, value) = match kind {
                ScanKind::Hypothesis(args) => {
                    let mut r = hypothesis_scan(args.k, args.bound, threads(args.threads)?)?;
                    if args.no_timing {
                        r = r.without_timing();
                    }
                    let negative = !r.violations.is_empty() || !r.lemma_failures.is_empty();
                    (negative, serde_json::to_value(&r)?)
                }
                ScanKind::Dim1(args) => {
                    let r = dim1_threshold_scan(args.k, args.bound, threads(args.threads)?);
                    (!r.violations.is_empty(), serde_json::to_value(&r)?)
                }
            };
            // Reports are JSON in both modes.
            println!("{}", serde_json::to_string_pretty(&value)?);
            if negative {
                return Ok(Answer::No);
            }
        }
        Command::Lemma { a } => {
            let l = check_lemma(&a);
            emit(json, &serde_json::to_value(&l)?, || {
                format!(
                    "{}\nd = {}, T = {}, bound = {}",
                    if l.holds { "holds" } else { "fails" },
                    l.dimension,
                    l.t,
                    l.bound
                )
            });
            if !l.holds {
                return Ok(Answer::No);
            }
        }
        Command::Partial { k, b } => {
            let p = partial_case_form(k, b)?;
            emit(json, &serde_json::to_value(&p)?, || {
                format!("{}\nT = {}, 3k-4+b = {}", p.set, p.t, p.predicted_t)
            });
        }
        Command::Knapsack { file } => {
            let text = if file.as_os_str() == "-" {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s)?;
                s
            } else {
                std::fs::read_to_string(&file)
                    .with_context(|| format!("reading {}", file.display()))?
            };
            let inst = Instance::parse(&text)?;
            let outcome = solve(&inst)?;
            let profile = density_profile(&inst);
            let mut value = serde_json::to_value(&outcome)?;
            value["density"] = serde_json::to_value(&profile)?;
            emit(json, &value, || match &outcome {
                Outcome::Feasible(sol) => {
                    let idx: Vec<String> = sol.selection.iter().map(usize::to_string).collect();
                    format!("feasible\n{}", idx.join(" "))
                }
                Outcome::Infeasible => "infeasible".into(),
            });
            if !outcome.is_feasible() {
                return Ok(Answer::No);
            }
        }
    }
    Ok(Answer::Yes)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Answer::Yes) => ExitCode::SUCCESS,
        Ok(Answer::No) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
