use std::fmt::Display;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qpleth_core::expansion::{BasisKey, Expansion};
use qpleth_core::hall_littlewood::{pleth_expand_hl, straighten, straighten_tree, PathNode};
use qpleth_core::pleth_q::{coeff_pfaffian, is_strip, pleth_expand_comb, pleth_expand_pf};
use qpleth_core::verify::{oracle_hl, oracle_q, run_suite, Suite, SweepConfig, VerifyReport};
use qpleth_core::{Composition, Error, Partition, StrictPartition, TRational};

const SCHEMA: &str = "qpleth/1";

#[derive(Parser)]
#[command(name = "qpleth", version, about = "Plethystic Murnaghan-Nakayama rules for Schur Q and Hall-Littlewood functions")]
struct Cli {
    /// Print human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum QMethod {
    Comb,
    Pf,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum HMethod {
    Rule,
    Oracle,
}

#[derive(Subcommand)]
enum Command {
    /// Expand (p_s o q_k) Q_mu in the Schur Q-basis.
    ExpandQ {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value = "")]
        mu: String,
        #[arg(long, value_enum, default_value = "comb")]
        method: QMethod,
    },
    /// Expand (p_s <> q_k(t)) H_mu.1 in the Hall-Littlewood basis.
    ExpandHl {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value = "")]
        mu: String,
        #[arg(long, value_enum, default_value = "rule")]
        method: HMethod,
    },
    /// Coefficient of Q_lambda in (p_s o q_k) Q_mu via the Pfaffian.
    Coeff {
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value = "")]
        mu: String,
        #[arg(long)]
        s: u32,
    },
    /// Strip certificate for lambda/mu.
    StripCert {
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value = "")]
        mu: String,
        #[arg(long)]
        s: u32,
    },
    /// Straighten H_{w_1} ... H_{w_n}.1 into the H_lambda.1 basis.
    Straighten {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// Include the canonical path tree.
        #[arg(long)]
        tree: bool,
    },
    /// Run verification suites.
    Verify {
        /// Suite name, or "all".
        #[arg(long, default_value = "all")]
        suite: String,
        /// key=value config file.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Also write the JSON report to this path.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn parse_parts(text: &str) -> Result<Vec<i64>, Failure> {
    let inner = text.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|x| !x.is_empty())
        .map(|x| x.parse::<i64>().map_err(|_| Failure::Usage(format!("not an integer list: {text:?}"))))
        .collect()
}

fn parse_partition(text: &str) -> Result<Partition, Failure> {
    let parts = parse_parts(text)?;
    let parts = parts
        .iter()
        .map(|&x| u32::try_from(x))
        .collect::<Result<Vec<u32>, _>>()
        .map_err(|_| Error::InvalidPartition(parts.clone(), "negative part"))?;
    Ok(Partition::new(parts)?)
}

fn parse_strict(text: &str) -> Result<StrictPartition, Failure> {
    Ok(StrictPartition::try_from(parse_partition(text)?)?)
}

/// Constants print as plain rationals, anything else in canonical form.
fn coeff_string(c: &TRational) -> String {
    c.as_constant().map_or_else(|| c.to_string(), |q| q.to_string())
}

fn terms_json<K: BasisKey>(e: &Expansion<K>, coeff_field: &str) -> Value {
    Value::Array(
        e.terms()
            .map(|(k, c)| {
                let mut m = serde_json::Map::new();
                m.insert("lambda".into(), json!(k));
                let text = if coeff_field == "coeff" { coeff_string(c) } else { c.to_string() };
                m.insert(coeff_field.into(), json!(text));
                Value::Object(m)
            })
            .collect(),
    )
}

fn table<K: Display>(rows: impl Iterator<Item = (K, String)>, header: (&str, &str)) -> String {
    let rows: Vec<(String, String)> = rows.map(|(k, v)| (k.to_string(), v)).collect();
    let width = rows.iter().map(|r| r.0.len()).chain([header.0.len()]).max().unwrap_or(0);
    let mut out = format!("{:<width$}  {}\n", header.0, header.1);
    for (k, v) in rows {
        out.push_str(&format!("{k:<width$}  {v}\n"));
    }
    out
}

fn expansion_table<K: BasisKey>(e: &Expansion<K>, coeff: fn(&TRational) -> String) -> String {
    if e.is_empty() {
        return "0\n".into();
    }
    table(e.terms().map(|(k, c)| (k, coeff(c))), ("lambda", "coeff"))
}

fn tree_lines(node: &PathNode, depth: usize, out: &mut String) {
    let step = node.step.map_or(String::new(), |(i, a)| format!("  S_{{{i},{a}}}  C = {}", node.coeff));
    out.push_str(&format!("{}{}{}\n", "  ".repeat(depth), node.state, step));
    for child in &node.children {
        tree_lines(child, depth + 1, out);
    }
}

fn emit(pretty: bool, value: Value, text: impl FnOnce() -> String) {
    if pretty {
        print!("{}", text());
    } else {
        println!("{value}");
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let pretty = cli.pretty;
    match cli.command {
        Command::ExpandQ { s, k, mu, method } => {
            let mu = parse_strict(&mu)?;
            let e = match method {
                QMethod::Comb => pleth_expand_comb(s, k, &mu)?,
                QMethod::Pf => pleth_expand_pf(s, k, &mu)?,
                QMethod::Oracle => oracle_q(s, k, &mu)?,
            };
            let v = json!({"schema": SCHEMA, "s": s, "k": k, "mu": mu, "terms": terms_json(&e, "coeff")});
            emit(pretty, v, || expansion_table(&e, coeff_string));
        }
        Command::ExpandHl { s, k, mu, method } => {
            let mu = parse_partition(&mu)?;
            let e = match method {
                HMethod::Rule => pleth_expand_hl(s, k, &mu)?,
                HMethod::Oracle => oracle_hl(s, k, &mu)?,
            };
            let v = json!({"schema": SCHEMA, "s": s, "k": k, "mu": mu, "terms": terms_json(&e, "t_coeff")});
            emit(pretty, v, || expansion_table(&e, TRational::to_string));
        }
        Command::Coeff { lambda, mu, s } => {
            let (lambda, mu) = (parse_strict(&lambda)?, parse_strict(&mu)?);
            let pf = coeff_pfaffian(&lambda, &mu, s)?;
            let scale = TRational::pow2(mu.len() as i64 - lambda.len() as i64);
            let coeff = scale.scale(&pf.clone().into());
            let v = json!({
                "schema": SCHEMA, "s": s, "lambda": lambda, "mu": mu,
                "k": (lambda.weight() - mu.weight()) / s,
                "pfaffian": pf.to_string(), "coeff": coeff_string(&coeff),
            });
            emit(pretty, v, || format!("Pf     {pf}\ncoeff  {}\n", coeff_string(&coeff)));
        }
        Command::StripCert { lambda, mu, s } => {
            let (lambda, mu) = (parse_strict(&lambda)?, parse_strict(&mu)?);
            let cert = is_strip(&lambda, &mu, s)?;
            let v = json!({"schema": SCHEMA, "strip": cert.is_some(), "certificate": cert});
            emit(pretty, v, || match &cert {
                None => format!("{lambda}/{mu} is not a ({s})-strip\n"),
                Some(c) => table(
                    [
                        ("k", c.k.to_string()),
                        ("padded", c.padded.to_string()),
                        ("A", c.a_value.to_string()),
                        ("reordered", format!("{:?}", c.reordered)),
                        ("sigma", c.sigma.to_string()),
                        ("sign", c.sign.to_string()),
                    ]
                    .into_iter(),
                    ("field", "value"),
                ),
            });
        }
        Command::Straighten { word, tree } => {
            let word = Composition(parse_parts(&word)?);
            let b: Vec<(Partition, TRational)> =
                straighten(&word).into_iter().map(|(l, c)| (l, TRational::from_poly(c))).collect();
            let terms: Vec<Value> = b.iter().map(|(l, c)| json!({"lambda": l, "t_coeff": c.to_string()})).collect();
            let path_tree = tree.then(|| straighten_tree(&word));
            let mut v = json!({"schema": SCHEMA, "word": word, "terms": terms});
            if let Some(t) = &path_tree {
                v["tree"] = json!(t);
            }
            emit(pretty, v, || {
                let mut out = if b.is_empty() {
                    "0\n".to_string()
                } else {
                    table(b.iter().map(|(l, c)| (l, c.to_string())), ("lambda", "B(lambda, word)"))
                };
                if let Some(t) = &path_tree {
                    out.push('\n');
                    tree_lines(t, 0, &mut out);
                }
                out
            });
        }
        Command::Verify { suite, config, report } => {
            let cfg = match config {
                Some(path) => fs::read_to_string(&path)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
                    .parse::<SweepConfig>()?,
                None => SweepConfig::default(),
            };
            let names: Vec<&str> = if suite == "all" {
                Suite::ALL.iter().map(|s| s.name()).collect()
            } else {
                vec![suite.as_str()]
            };
            let reports = names.iter().map(|n| run_suite(n, &cfg)).collect::<Result<Vec<VerifyReport>, _>>()?;
            let passed = reports.iter().all(VerifyReport::passed);
            let v = json!({"schema": SCHEMA, "config": cfg, "passed": passed, "reports": reports});
            if let Some(path) = report {
                fs::write(&path, format!("{v:#}\n")).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            }
            emit(pretty, v, || reports.iter().map(|r| format!("{r}\n")).collect());
            if !passed {
                return Err(Failure::Checks);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
