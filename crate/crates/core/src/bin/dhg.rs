use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use definable_hypergraphs::builders::{build_example, parse_example_ref, Example};
use definable_hypergraphs::field::{PrimeField, DEFAULT_PRIME};
use definable_hypergraphs::hypergraph::{density_report, induce, DefinableHypergraph};
use definable_hypergraphs::maps::sample_map;
use definable_hypergraphs::oracle::{estimate_dimension, estimate_projection_dimension};
use definable_hypergraphs::report::{emit_report, Envelope, ScenarioReport, Verdict};
use definable_hypergraphs::sampling::GenericTrialPolicy;
use definable_hypergraphs::scenarios::{
    interpolation_rank, parse_denominator, verify_expansion, verify_main, verify_prints,
};
use definable_hypergraphs::spec_file::{emit_spec, parse_spec_with_prime};

type Res<T> = Result<T, Box<dyn std::error::Error>>;

#[derive(Parser)]
#[command(
    name = "dhg",
    version,
    about = "Definable hypergraphs over prime fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Field characteristic; overrides the input's `prime` line.
    #[arg(long, global = true)]
    prime: Option<u64>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 5)]
    trials: usize,
    #[arg(long, global = true)]
    accept_threshold: Option<usize>,
    /// Numerator degree bound.
    #[arg(long, global = true, default_value_t = 1)]
    d: u32,
    /// Parameter space dimension.
    #[arg(long, global = true, default_value_t = 1)]
    k: usize,
    /// Common denominator in y1..yk.
    #[arg(long, global = true, default_value = "1")]
    q_poly: String,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    json_out: Option<PathBuf>,
    /// Treat the input's cells as its irreducible components.
    #[arg(long, global = true)]
    components: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Projection dimensions and the minimal r.
    Density {
        input: String,
        #[arg(long)]
        r: Option<i64>,
    },
    /// Sample f and print E[f].
    Induce {
        input: String,
    },
    VerifyMain {
        input: String,
    },
    VerifyExpansion {
        input: String,
        /// Size of the first factor; defaults to the example's split or n.
        #[arg(long)]
        split: Option<usize>,
        #[arg(long)]
        through_origin: bool,
    },
    VerifyPrints {
        input: String,
    },
    InterpRank {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
    },
    /// Point-count dimension estimate over small primes.
    OracleDim {
        input: String,
        #[arg(long, value_delimiter = ',', default_value = "5,7,11,13")]
        primes: Vec<u64>,
        /// 0-based coordinates to project onto.
        #[arg(long, value_delimiter = ',')]
        coords: Option<Vec<usize>>,
    },
    /// Print a named example as a spec file.
    BuildExample {
        /// `name` or `name:n=..,t=..,k=..,m=..`.
        name: String,
    },
}

/// A spec file path or `@name:key=val,...`.
fn load(input: &str, common: &Common) -> Res<Example> {
    let mut example = if let Some(reference) = input.strip_prefix('@') {
        let (name, params) = parse_example_ref(reference)?;
        build_example(&name, params, field(common)?)?
    } else {
        let text = fs::read_to_string(input).map_err(|e| format!("{input}: {e}"))?;
        let hypergraph =
            parse_spec_with_prime(&text, common.prime).map_err(|e| format!("{input}: {e}"))?;
        let split = hypergraph.n();
        Example { hypergraph, split }
    };
    if common.components {
        example.hypergraph = example.hypergraph.with_components_asserted(true);
    }
    Ok(example)
}

fn field(common: &Common) -> Res<PrimeField> {
    Ok(PrimeField::new(common.prime.unwrap_or(DEFAULT_PRIME))?)
}

fn policy(common: &Common) -> GenericTrialPolicy {
    let threshold = common.accept_threshold.unwrap_or_else(|| {
        GenericTrialPolicy::default()
            .accept_threshold
            .min(common.trials)
    });
    GenericTrialPolicy::new(common.trials, threshold, common.seed)
}

fn write(common: &Common, text: &str) -> Res<()> {
    match &common.json_out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn scenario(common: &Common, report: ScenarioReport) -> Res<ExitCode> {
    write(common, &emit_report(&report))?;
    Ok(if report.verdict == Verdict::Fail {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

#[derive(Serialize)]
struct Induced {
    seed: u64,
    d: u32,
    k: usize,
    q_poly: String,
    numerators: Vec<String>,
    dim: i64,
    spec: String,
}

fn run(cli: Cli) -> Res<ExitCode> {
    let common = &cli.common;
    let hypergraph_of =
        |input: &str| -> Res<DefinableHypergraph> { Ok(load(input, common)?.hypergraph) };
    let denominator =
        |e: &DefinableHypergraph| parse_denominator(&common.q_poly, common.k, e.field());
    match &cli.command {
        Command::Density { input, r } => {
            let e = hypergraph_of(input)?;
            let report = density_report(&e, *r)?;
            write(common, &emit_report(&Envelope::new("density", report)))?;
        }
        Command::Induce { input } => {
            let e = hypergraph_of(input)?;
            let q = denominator(&e)?;
            let f = sample_map(common.d, common.k, e.n(), &q, common.seed)?;
            let ef = induce(&e, &f)?;
            let payload = Induced {
                seed: common.seed,
                d: common.d,
                k: common.k,
                q_poly: q.to_string(),
                numerators: f.numerators().iter().map(ToString::to_string).collect(),
                dim: ef.dimension()?,
                spec: emit_spec(&ef),
            };
            write(common, &emit_report(&Envelope::new("induce", payload)))?;
        }
        Command::VerifyMain { input } => {
            let e = hypergraph_of(input)?;
            let q = denominator(&e)?;
            return scenario(common, verify_main(&e, common.d, &q, &policy(common))?);
        }
        Command::VerifyExpansion {
            input,
            split,
            through_origin,
        } => {
            let example = load(input, common)?;
            let split = split.unwrap_or(example.split);
            let report = verify_expansion(
                example.hypergraph.set(),
                split,
                common.d,
                common.k,
                *through_origin,
                &policy(common),
            )?;
            return scenario(common, report);
        }
        Command::VerifyPrints { input } => {
            let e = hypergraph_of(input)?;
            let q = denominator(&e)?;
            return scenario(common, verify_prints(&e, common.d, &q, &policy(common))?);
        }
        Command::InterpRank { n, t } => {
            let q = parse_denominator(&common.q_poly, common.k, field(common)?)?;
            return scenario(
                common,
                interpolation_rank(*n, *t, common.d, &q, &policy(common))?,
            );
        }
        Command::OracleDim {
            input,
            primes,
            coords,
        } => {
            let e = hypergraph_of(input)?;
            let profile = match coords {
                Some(c) => estimate_projection_dimension(e.set(), c, primes)?,
                None => estimate_dimension(e.set(), primes)?,
            };
            write(common, &emit_report(&Envelope::new("oracle-dim", profile)))?;
        }
        Command::BuildExample { name } => {
            let example = load(&format!("@{name}"), common)?;
            write(common, &emit_spec(&example.hypergraph))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
