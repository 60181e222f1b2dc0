//! Command-line front end: every capability of the library is reachable as
//! a subcommand reading and writing plain text, JSON, or DOT.
//!
//! Exit codes: 0 for a positive answer, 1 for a negative verdict (no
//! filling, not below in the order, a failed identity, a reproduction
//! mismatch), 2 for malformed input or other errors.

use std::fs;
use std::io::Read;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::json;

use crate::arc::{deviation, ArcDiagram};
use crate::error::{Error, Result};
use crate::ff::oracle::census;
use crate::order::{delta_hom, move_sequence, Step, Strategy};
use crate::partition::Partition;
use crate::poset::Poset;
use crate::s2::{orbit_dim_embedding, orbit_dim_moments, Module};
use crate::tableau::{KleinTableau, LrTableau};

#[derive(Parser)]
#[command(
    name = "arcdeg",
    version,
    about = "Degeneration order for invariant subspaces of nilpotent operators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum StrategyArg {
    Baseline,
    Parallelogram,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Strategy {
        match s {
            StrategyArg::Baseline => Strategy::Baseline,
            StrategyArg::Parallelogram => Strategy::Parallelogram,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Validate a tableau from JSON, or count the fillings of a triple
    Validate {
        /// JSON file holding a subscripted tableau, or - for stdin
        #[arg(long, conflicts_with_all = ["alpha", "beta", "gamma"])]
        input: Option<String>,
        /// Subspace type
        #[arg(long, requires = "beta", requires = "gamma")]
        alpha: Option<Partition>,
        /// Ambient type
        #[arg(long)]
        beta: Option<Partition>,
        /// Quotient type
        #[arg(long)]
        gamma: Option<Partition>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the fillings of a triple of types
    EnumLr {
        #[arg(long)]
        alpha: Partition,
        #[arg(long)]
        beta: Partition,
        #[arg(long)]
        gamma: Partition,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the subscripted refinements of every filling of a triple
    Refine {
        #[arg(long)]
        alpha: Partition,
        #[arg(long)]
        beta: Partition,
        #[arg(long)]
        gamma: Partition,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Draw the arc diagram of a subscripted tableau and count crossings
    Arc {
        /// JSON file holding a subscripted tableau, or - for stdin
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decide whether y degenerates to z: JSON input {"y": ..., "z": ...}
    Order {
        /// JSON file holding the pair, or - for stdin
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, default_value_t = StrategyArg::Baseline)]
        strategy: StrategyArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Produce the chain of moves from z down to y
    Sequence {
        /// JSON file holding the pair, or - for stdin
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, default_value_t = StrategyArg::Baseline)]
        strategy: StrategyArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build the full order on the refinements of a filling or a triple
    Poset {
        /// JSON file holding a filling {"gamma","zeta","beta"}, or - for stdin
        #[arg(long, conflicts_with_all = ["alpha", "beta", "gamma"])]
        input: Option<String>,
        #[arg(long, requires = "beta", requires = "gamma")]
        alpha: Option<Partition>,
        #[arg(long)]
        beta: Option<Partition>,
        #[arg(long)]
        gamma: Option<Partition>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decompose a subscripted tableau and report its dimension invariants
    Dims {
        /// JSON file holding a subscripted tableau, or - for stdin
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Sweep all embeddings over a prime field and classify them
    Oracle {
        #[arg(long)]
        alpha: Partition,
        #[arg(long)]
        beta: Partition,
        /// Restrict the report to classes with this quotient type
        #[arg(long)]
        gamma: Option<Partition>,
        #[arg(long, default_value_t = 2)]
        prime: u32,
        /// Largest number of field points the sweep may visit
        #[arg(long, default_value_t = 1 << 25)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Recompute the checked-in reference outputs and compare
    Repro {
        /// Rewrite the reference files under goldens/ instead of comparing
        #[arg(long)]
        write: bool,
    },
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(command: Command) -> Result<i32> {
    match command {
        Command::Validate {
            input,
            alpha,
            beta,
            gamma,
            format,
        } => match (input, alpha, beta, gamma) {
            (Some(input), ..) => validate_input(&input, format),
            (None, Some(alpha), Some(beta), Some(gamma)) => {
                validate_triple(&alpha, &beta, &gamma, format)
            }
            _ => Err(Error::Malformed(
                "provide either --input or all of --alpha, --beta, --gamma".into(),
            )),
        },
        Command::EnumLr {
            alpha,
            beta,
            gamma,
            format,
        } => enum_lr(&alpha, &beta, &gamma, format),
        Command::Refine {
            alpha,
            beta,
            gamma,
            format,
        } => refine(&alpha, &beta, &gamma, format),
        Command::Arc { input, format } => arc(&input, format),
        Command::Order {
            input,
            strategy,
            format,
        } => order(&input, strategy.into(), format),
        Command::Sequence {
            input,
            strategy,
            format,
        } => sequence(&input, strategy.into(), format),
        Command::Poset {
            input,
            alpha,
            beta,
            gamma,
            format,
        } => match (input, alpha, beta, gamma) {
            (Some(input), ..) => {
                let lr: LrTableau = parse_json(&read_input(&input)?)?;
                poset_out(&Poset::for_filling(&lr), format)
            }
            (None, Some(alpha), Some(beta), Some(gamma)) => {
                poset_out(&Poset::for_type(&alpha, &beta, &gamma)?, format)
            }
            _ => Err(Error::Malformed(
                "provide either --input or all of --alpha, --beta, --gamma".into(),
            )),
        },
        Command::Dims { input, format } => dims(&input, format),
        Command::Oracle {
            alpha,
            beta,
            gamma,
            prime,
            budget,
            format,
        } => oracle(&alpha, &beta, gamma.as_ref(), prime, budget, format),
        Command::Repro { write } => repro(write),
    }
}

fn read_input(input: &str) -> Result<String> {
    if input == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Malformed(format!("cannot read stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(input).map_err(|e| Error::Malformed(format!("cannot read {input}: {e}")))
    }
}

fn parse_json<T: DeserializeOwned>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Malformed(format!("bad input: {e}")))
}

fn no_dot(format: Format) -> Result<()> {
    if format == Format::Dot {
        return Err(Error::Malformed(
            "dot output is only available for poset".into(),
        ));
    }
    Ok(())
}

fn validate_input(input: &str, format: Format) -> Result<i32> {
    no_dot(format)?;
    let text = read_input(input)?;
    match serde_json::from_str::<KleinTableau>(&text) {
        Ok(k) => {
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({"valid": true, "tableau": k})).unwrap()
                ),
                _ => println!("valid: {k}"),
            }
            Ok(0)
        }
        Err(e) => {
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({"valid": false, "error": e.to_string()}))
                        .unwrap()
                ),
                _ => println!("invalid: {e}"),
            }
            Ok(1)
        }
    }
}

fn validate_triple(
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    format: Format,
) -> Result<i32> {
    no_dot(format)?;
    let fillings = LrTableau::enumerate(alpha, beta, gamma)?;
    let klein: usize = fillings
        .iter()
        .map(|lr| KleinTableau::refinements(lr).len())
        .sum();
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "alpha": alpha, "beta": beta, "gamma": gamma,
                "fillings": fillings.len(), "refinements": klein,
            }))
            .unwrap()
        ),
        _ => println!(
            "{} filling(s) of {beta} / {gamma} with content {alpha}, {klein} refinement(s)",
            fillings.len()
        ),
    }
    Ok(if fillings.is_empty() { 1 } else { 0 })
}

fn enum_lr(alpha: &Partition, beta: &Partition, gamma: &Partition, format: Format) -> Result<i32> {
    no_dot(format)?;
    let fillings = LrTableau::enumerate(alpha, beta, gamma)?;
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&fillings).unwrap()),
        _ => {
            for lr in &fillings {
                println!("{}", lr.ascii());
            }
            println!("{} filling(s)", fillings.len());
        }
    }
    Ok(if fillings.is_empty() { 1 } else { 0 })
}

fn refine(alpha: &Partition, beta: &Partition, gamma: &Partition, format: Format) -> Result<i32> {
    no_dot(format)?;
    let fillings = LrTableau::enumerate(alpha, beta, gamma)?;
    let groups: Vec<(LrTableau, Vec<KleinTableau>)> = fillings
        .into_iter()
        .map(|lr| {
            let r = KleinTableau::refinements(&lr);
            (lr, r)
        })
        .collect();
    match format {
        Format::Json => {
            let out: Vec<_> = groups
                .iter()
                .map(|(lr, r)| json!({"filling": lr, "refinements": r}))
                .collect();
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        _ => {
            for (lr, refinements) in &groups {
                println!("filling {lr}");
                for k in refinements {
                    let x = ArcDiagram::from(k).crossings();
                    println!("  {k} x={x}");
                }
            }
        }
    }
    Ok(if groups.is_empty() { 1 } else { 0 })
}

fn arc(input: &str, format: Format) -> Result<i32> {
    no_dot(format)?;
    let k: KleinTableau = parse_json(&read_input(input)?)?;
    let diagram = ArcDiagram::from(&k);
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "diagram": diagram,
                "crossings": diagram.crossings(),
            }))
            .unwrap()
        ),
        _ => {
            print!("{}", diagram.ascii());
            println!("crossings: {}", diagram.crossings());
        }
    }
    Ok(0)
}

#[derive(Deserialize)]
struct PairInput {
    y: KleinTableau,
    z: KleinTableau,
}

fn order(input: &str, strategy: Strategy, format: Format) -> Result<i32> {
    no_dot(format)?;
    let pair: PairInput = parse_json(&read_input(input)?)?;
    let delta = delta_hom(&pair.y, &pair.z)?;
    match delta.first_negative() {
        None => {
            let witness = move_sequence(&pair.y, &pair.z, strategy)?;
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({"leq": true, "witness": witness}))
                        .unwrap()
                ),
                _ => {
                    println!("y <= z: every hom count grows weakly");
                    for (i, step) in witness.iter().enumerate() {
                        println!("  {}. {}", i + 1, step.mv);
                    }
                }
            }
            Ok(0)
        }
        Some(cert) => {
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(
                        &json!({"leq": false, "certificate": cert.to_string()})
                    )
                    .unwrap()
                ),
                _ => println!("y <= z fails: the hom count from {cert} drops"),
            }
            Ok(1)
        }
    }
}

fn sequence(input: &str, strategy: Strategy, format: Format) -> Result<i32> {
    no_dot(format)?;
    let pair: PairInput = parse_json(&read_input(input)?)?;
    let delta = delta_hom(&pair.y, &pair.z)?;
    if let Some(cert) = delta.first_negative() {
        match format {
            Format::Json => println!(
                "{}",
                serde_json::to_string_pretty(
                    &json!({"leq": false, "certificate": cert.to_string()})
                )
                .unwrap()
            ),
            _ => println!("no chain: the hom count from {cert} drops"),
        }
        return Ok(1);
    }
    let steps = move_sequence(&pair.y, &pair.z, strategy)?;
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&sequence_report(&pair, strategy, &steps)).unwrap()
        ),
        _ => {
            let mut x = ArcDiagram::from(&pair.z).crossings();
            println!("start {} x={x}", pair.z);
            for (i, step) in steps.iter().enumerate() {
                x = ArcDiagram::from(&step.result).crossings();
                println!("  {}. {} -> {} x={x}", i + 1, step.mv, step.result);
            }
            println!("reached the target in {} move(s)", steps.len());
        }
    }
    Ok(0)
}

fn sequence_report(pair: &PairInput, strategy: Strategy, steps: &[Step]) -> serde_json::Value {
    json!({
        "strategy": strategy,
        "y": pair.y,
        "z": pair.z,
        "steps": steps,
    })
}

fn poset_out(poset: &Poset, format: Format) -> Result<i32> {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(poset).unwrap()),
        Format::Dot => print!("{}", poset.to_dot()),
        Format::Text => {
            println!("{} node(s)", poset.nodes().len());
            for (i, node) in poset.nodes().iter().enumerate() {
                let x = ArcDiagram::from(node).crossings();
                println!("  {i}: {node} x={x}");
            }
            println!("cover(s):");
            for &(lower, upper, kind) in poset.edges() {
                println!("  {lower} -> {upper} ({kind})");
            }
            let fmt = |ids: Vec<usize>| {
                ids.iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            println!("minimal: {}", fmt(poset.minimal()));
            println!("maximal: {}", fmt(poset.maximal()));
        }
    }
    Ok(0)
}

fn dims(input: &str, format: Format) -> Result<i32> {
    no_dot(format)?;
    let k: KleinTableau = parse_json(&read_input(input)?)?;
    let module = Module::from_klein(&k);
    let diagram = ArcDiagram::from(&k);
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "alpha": k.alpha(),
                "beta": k.beta(),
                "gamma": k.gamma(),
                "module": module,
                "dim_end": module.dim_end(),
                "orbit_dim_embedding": orbit_dim_embedding(&k),
                "orbit_dim_moments": orbit_dim_moments(&k),
                "crossings": diagram.crossings(),
                "deviation": deviation(&k),
            }))
            .unwrap()
        ),
        _ => {
            println!("module: {module}");
            println!("dim end: {}", module.dim_end());
            println!("orbit dim (embedding count): {}", orbit_dim_embedding(&k));
            println!("orbit dim (moments): {}", orbit_dim_moments(&k));
            println!("crossings: {}", diagram.crossings());
            println!("deviation: {}", deviation(&k));
        }
    }
    Ok(0)
}

fn oracle(
    alpha: &Partition,
    beta: &Partition,
    gamma: Option<&Partition>,
    prime: u32,
    budget: u64,
    format: Format,
) -> Result<i32> {
    no_dot(format)?;
    let mut report = census(alpha, beta, prime, budget)?;
    let all_ok = report.classes.iter().all(|c| c.orbit_identity);
    if let Some(gamma) = gamma {
        report.classes.retain(|c| &c.gamma == gamma);
    }
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
        _ => {
            println!(
                "GF({}): {} points, {} injective, group order {}",
                report.prime, report.points, report.injective, report.group_order
            );
            for class in &report.classes {
                println!(
                    "  gamma {} module {} count {} stabilizer {} identity {}",
                    class.gamma,
                    class.module,
                    class.count,
                    class.stabilizer,
                    if class.orbit_identity { "ok" } else { "FAILED" }
                );
            }
        }
    }
    Ok(if all_ok { 0 } else { 1 })
}

/// The reference outputs under goldens/, produced from scratch.
pub fn golden_set() -> Vec<(&'static str, String)> {
    let p = |parts: &[u32]| Partition::new(parts.to_vec()).expect("fixed reference types");
    let gamma7 = p(&[6, 5, 4, 3, 2, 1]);
    let beta7 = p(&[7, 6, 5, 4, 3, 2, 1]);
    let y = KleinTableau::from_arcs(gamma7.clone(), beta7.clone(), vec![(7, 3), (6, 2), (5, 4)])
        .expect("fixed reference tableau");
    let z = KleinTableau::from_arcs(gamma7, beta7, vec![(7, 2), (6, 3), (5, 1)])
        .expect("fixed reference tableau");
    let steps = move_sequence(&y, &z, Strategy::Baseline).expect("the reference pair is ordered");
    let seq = sequence_report(
        &PairInput {
            y: y.clone(),
            z: z.clone(),
        },
        Strategy::Baseline,
        &steps,
    );

    let lr = LrTableau::new(
        p(&[4, 3, 2, 2, 1]),
        p(&[4, 3, 3, 3, 2, 1]),
        p(&[5, 4, 3, 3, 2, 1]),
    )
    .expect("fixed reference filling");
    let by_filling = Poset::for_filling(&lr);
    let by_type = Poset::for_type(&p(&[2, 1, 1]), &p(&[4, 3, 2, 1]), &p(&[3, 2, 1]))
        .expect("fixed reference type");

    let pretty = |v: &serde_json::Value| format!("{}\n", serde_json::to_string_pretty(v).unwrap());
    let pretty_poset =
        |q: &Poset| format!("{}\n", serde_json::to_string_pretty(q).unwrap());
    vec![
        ("sequence_2221_7654321.json", pretty(&seq)),
        ("poset_gamma_543321.json", pretty_poset(&by_filling)),
        ("poset_gamma_543321.dot", by_filling.to_dot()),
        ("poset_type_4321.json", pretty_poset(&by_type)),
        ("poset_type_4321.dot", by_type.to_dot()),
    ]
}

const GOLDENS: [(&str, &str); 5] = [
    (
        "sequence_2221_7654321.json",
        include_str!("../goldens/sequence_2221_7654321.json"),
    ),
    (
        "poset_gamma_543321.json",
        include_str!("../goldens/poset_gamma_543321.json"),
    ),
    (
        "poset_gamma_543321.dot",
        include_str!("../goldens/poset_gamma_543321.dot"),
    ),
    (
        "poset_type_4321.json",
        include_str!("../goldens/poset_type_4321.json"),
    ),
    (
        "poset_type_4321.dot",
        include_str!("../goldens/poset_type_4321.dot"),
    ),
];

fn repro(write: bool) -> Result<i32> {
    let fresh = golden_set();
    if write {
        let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("goldens");
        fs::create_dir_all(&dir).map_err(|e| Error::Malformed(format!("cannot create {dir:?}: {e}")))?;
        for (name, content) in &fresh {
            let path = dir.join(name);
            fs::write(&path, content)
                .map_err(|e| Error::Malformed(format!("cannot write {path:?}: {e}")))?;
            println!("wrote {}", path.display());
        }
        return Ok(0);
    }
    let mut ok = true;
    for ((name, content), (gname, golden)) in fresh.iter().zip(GOLDENS) {
        assert_eq!(*name, gname, "golden lists stay aligned");
        if content == golden {
            println!("{name}: ok");
        } else {
            println!("{name}: MISMATCH");
            ok = false;
        }
    }
    Ok(if ok { 0 } else { 1 })
}
