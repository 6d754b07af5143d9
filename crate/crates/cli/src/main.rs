use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use skewposet::lrrule::decompose;
use skewposet::poset::{down_cover_moves, is_geq, reduce_to_staircase, up_cover_moves};
use skewposet::sequences::{bar_partitions, bijection_forward, render_table, SequenceName};
use skewposet::verifier::{run_suite, Check, SweepConfig};
use skewposet::{decay, Error, SkewClass, SkewDiagram};

/// Skew characters of symmetric groups and the poset of skew diagrams.
#[derive(Parser, Debug)]
#[command(name = "skewposet", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decompose a skew character into irreducible characters.
    Decompose { skew: String },
    /// Print the cc-type and the number of one-box pairs.
    Cc { skew: String },
    /// Print the delta value.
    Delta { skew: String },
    /// Print the outer and inner boundary paths.
    Paths { skew: String },
    /// List the classes covering or covered by a diagram.
    Covers(CoversArgs),
    /// Compare two diagrams in the poset.
    Compare { a: String, b: String },
    /// Print a witness chain down to the staircase class.
    Reduce { skew: String },
    /// Tabulate p_n, f_n, g_n or pbar_n.
    Seq {
        /// Sequences to print, comma separated.
        #[arg(long, value_delimiter = ',', default_values_t = ["g".to_string(), "p".to_string(), "f".to_string()])]
        name: Vec<String>,
        #[arg(long, default_value_t = 13)]
        max: usize,
        #[arg(long, default_value_t = 1)]
        min: usize,
    },
    /// Print the bijection between two-coloured partitions of n and one-box
    /// pairs of partitions of n + 2.
    Bijection {
        #[arg(long)]
        n: usize,
    },
    /// Run the verification sweep.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("direction").required(true).args(["up", "down"])))]
struct CoversArgs {
    skew: String,
    #[arg(long)]
    up: bool,
    #[arg(long)]
    down: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value_t = 6)]
    max_boxes: usize,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Checks to run, comma separated. Defaults to all.
    #[arg(long, value_delimiter = ',')]
    checks: Vec<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
}

/// Output of a successful command.
struct Output {
    text: String,
    json: Value,
    violations: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Self { text, json, violations: false }
    }
}

fn skew(s: &str) -> Result<SkewDiagram, Error> {
    s.parse()
}

fn class(s: &str) -> Result<SkewClass, Error> {
    Ok(decay(&skew(s)?))
}

fn run(command: Command) -> Result<Output, Error> {
    match command {
        Command::Decompose { skew: s } => {
            let d = skew(&s)?;
            let ch = decompose(&d);
            let cc = ch.cc_type();
            Ok(Output::ok(
                ch.to_string(),
                json!({
                    "skew": d,
                    "terms": ch.structured(),
                    "cc": [cc.components, cc.constituents],
                    "pairs": ch.one_box_pairs(),
                }),
            ))
        }
        Command::Cc { skew: s } => {
            let d = skew(&s)?;
            let ch = decompose(&d);
            let cc = ch.cc_type();
            let pairs = ch.one_box_pairs();
            Ok(Output::ok(
                format!("{cc}\none-box pairs: {pairs}"),
                json!({ "skew": d, "cc": [cc.components, cc.constituents], "pairs": pairs }),
            ))
        }
        Command::Delta { skew: s } => {
            let d = skew(&s)?;
            let delta = d.delta_value()?;
            Ok(Output::ok(delta.to_string(), json!({ "skew": d, "delta": delta })))
        }
        Command::Paths { skew: s } => {
            let d = skew(&s)?;
            let p = d.paths()?;
            Ok(Output::ok(
                p.to_string(),
                json!({
                    "skew": d,
                    "outer": p.outer_string(),
                    "inner": p.inner_string(),
                    "shared_segment": p.has_shared_segment(),
                }),
            ))
        }
        Command::Covers(args) => {
            let c = class(&args.skew)?;
            let moves = if args.up { up_cover_moves(&c) } else { down_cover_moves(&c) };
            let mut seen: Vec<SkewClass> = Vec::new();
            let mut lines = Vec::new();
            let mut rows = Vec::new();
            for (cover, mv) in moves {
                if seen.contains(&cover) {
                    continue;
                }
                lines.push(format!("{mv} {cover}"));
                rows.push(json!({ "move": mv, "class": cover }));
                seen.push(cover);
            }
            let direction = if args.up { "up" } else { "down" };
            Ok(Output::ok(lines.join("\n"), json!({ "class": c, "direction": direction, "covers": rows })))
        }
        Command::Compare { a, b } => {
            let (ca, cb) = (class(&a)?, class(&b)?);
            let (geq, leq) = (is_geq(&ca, &cb), is_geq(&cb, &ca));
            let relation = match (geq, leq) {
                (true, true) => "equal",
                (true, false) => "greater",
                (false, true) => "less",
                (false, false) => "incomparable",
            };
            let text = match relation {
                "equal" => format!("{ca} = {cb}"),
                "greater" => format!("{ca} > {cb}"),
                "less" => format!("{ca} < {cb}"),
                _ => format!("{ca} and {cb} are incomparable"),
            };
            Ok(Output::ok(text, json!({ "a": ca, "b": cb, "relation": relation })))
        }
        Command::Reduce { skew: s } => {
            let chain = reduce_to_staircase(&class(&s)?)?;
            Ok(Output::ok(chain.to_string(), serde_json::to_value(&chain).expect("chain serializes")))
        }
        Command::Seq { name, max, min } => {
            let names = name.iter().map(|n| n.parse::<SequenceName>()).collect::<Result<Vec<_>, _>>()?;
            let ns: Vec<usize> = (min..=max).collect();
            let mut rows = Vec::new();
            let mut doc = serde_json::Map::new();
            for seq in names {
                let values = ns.iter().map(|&n| seq.value(n)).collect::<Result<Vec<u64>, _>>()?;
                let key = seq.label().trim_end_matches("_n");
                doc.insert(key.to_string(), json!(values));
                rows.push((seq.label(), values));
            }
            Ok(Output::ok(render_table(&ns, &rows).trim_end().to_string(), json!({ "n": ns, "sequences": doc })))
        }
        Command::Bijection { n } => {
            let mut table = vec![["bar".to_string(), "core".into(), "nu1".into(), "nu2".into()]];
            let mut rows = Vec::new();
            for b in bar_partitions(n) {
                let pair = bijection_forward(&b);
                let core = format!("({})", b.core);
                table.push([b.to_string(), core, format!("({})", pair.nu1()), format!("({})", pair.nu2())]);
                rows.push(json!({ "bar": b.to_string(), "core": b.core, "nu1": pair.nu1(), "nu2": pair.nu2() }));
            }
            let widths: Vec<usize> = (0..4).map(|j| table.iter().map(|r| r[j].len()).max().unwrap_or(0)).collect();
            let text = table
                .iter()
                .map(|r| {
                    r.iter()
                        .zip(&widths)
                        .map(|(c, w)| format!("{c:<w$}"))
                        .collect::<Vec<_>>()
                        .join("  ")
                        .trim_end()
                        .to_string()
                })
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Output::ok(text, json!({ "n": n, "count": rows.len(), "rows": rows })))
        }
        Command::Verify(args) => {
            let checks = if args.checks.is_empty() {
                Check::ALL.to_vec()
            } else {
                args.checks.iter().map(|c| c.parse()).collect::<Result<Vec<Check>, _>>()?
            };
            let cfg = SweepConfig {
                max_boxes: args.max_boxes,
                checks,
                sample_seed: args.seed,
                samples: args.samples,
                parallel_jobs: args.jobs.max(1),
            };
            let report = run_suite(&cfg)?;
            Ok(Output {
                text: report.to_string(),
                json: serde_json::to_value(&report).expect("report serializes"),
                violations: !report.pass,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(out) => {
            match cli.format {
                Format::Text => println!("{}", out.text),
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("json value")),
            }
            if out.violations {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
