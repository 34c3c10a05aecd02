//! Pairs (x, y) with x != y and x - y in a fixed subspace: induced subhypergraphs
//! survive a generic map from F^2 but vanish for maps from F^1.

use definable_hypergraphs::builders::subspace_hypergraph;
use definable_hypergraphs::field::PrimeField;
use definable_hypergraphs::hypergraph::density_report;
use definable_hypergraphs::report::TrialRecord;
use definable_hypergraphs::sampling::GenericTrialPolicy;
use definable_hypergraphs::scenarios::{parse_denominator, verify_main};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let field = PrimeField::default();
    let e = subspace_hypergraph(3, 1, field)?;
    let density = density_report(&e, None)?;
    println!(
        "dim E = {}, minimal r = {:?}",
        density.dim, density.minimal_r
    );

    let policy = GenericTrialPolicy::default().with_seed(7);
    for k in [1, 2] {
        let q = parse_denominator("1", k, field)?;
        let report = verify_main(&e, 1, &q, &policy)?;
        println!("k = {k}: verdict {:?}", report.verdict);
        for trial in &report.trials {
            if let TrialRecord::Main(t) = trial {
                println!(
                    "  trial {}: nonempty {}, dim {}, dense at r {:?}",
                    t.index, t.nonempty, t.dim, t.dense_at_r
                );
            }
        }
        for check in report.preconditions.iter().chain(&report.assertions) {
            println!("  {}: {} ({})", check.name, check.holds, check.detail);
        }
    }
    Ok(())
}
