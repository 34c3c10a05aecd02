//! The projection formula min{dim A - n + k, dim proj_2 A} on two sets.

use definable_hypergraphs::builders::{linear_graph, lines_example};
use definable_hypergraphs::field::PrimeField;
use definable_hypergraphs::report::TrialRecord;
use definable_hypergraphs::sampling::GenericTrialPolicy;
use definable_hypergraphs::scenarios::verify_expansion;

fn proj2_dims(trials: &[TrialRecord]) -> Vec<i64> {
    trials
        .iter()
        .filter_map(|t| match t {
            TrialRecord::Expansion(e) => Some(e.proj2_dim),
            _ => None,
        })
        .collect()
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let field = PrimeField::default();
    let policy = GenericTrialPolicy::default();

    // A = {(x, y, z) : y = z x, x != 0}, split as F^2 x F.
    let a = lines_example(field);
    for through_origin in [false, true] {
        let report = verify_expansion(a.set(), 2, 1, 1, through_origin, &policy)?;
        println!(
            "lines, through origin {through_origin}: proj2 dims {:?}, verdict {:?}",
            proj2_dims(&report.trials),
            report.verdict
        );
    }

    // Graph of a surjective linear map F^3 -> F^2.
    let g = linear_graph(3, 2, field)?;
    for k in 1..=3 {
        let report = verify_expansion(g.set(), 3, 1, k, false, &policy)?;
        println!(
            "linear graph, k = {k}: proj2 dims {:?}, verdict {:?}",
            proj2_dims(&report.trials),
            report.verdict
        );
    }
    Ok(())
}
