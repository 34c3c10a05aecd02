//! Pin all but one block to random affine images and look at what is left.

use definable_hypergraphs::builders::subspace_hypergraph;
use definable_hypergraphs::field::PrimeField;
use definable_hypergraphs::report::TrialRecord;
use definable_hypergraphs::sampling::GenericTrialPolicy;
use definable_hypergraphs::scenarios::{parse_denominator, verify_prints};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let field = PrimeField::default();
    let e = subspace_hypergraph(3, 1, field)?;
    let policy = GenericTrialPolicy::default();
    for k in [2, 1] {
        let q = parse_denominator("1", k, field)?;
        let report = verify_prints(&e, 1, &q, &policy)?;
        println!("k = {k}: verdict {:?}", report.verdict);
        for trial in &report.trials {
            if let TrialRecord::Prints(t) = trial {
                println!(
                    "  trial {}: partial set dim {}, print set dim {}",
                    t.index, t.partial_dim, t.pullback_dim
                );
            }
        }
        for check in report.preconditions.iter().chain(&report.assertions) {
            println!("  {}: {}", check.name, check.holds);
        }
    }
    Ok(())
}
