//! Rank of the linear conditions f(y_i) = x_i on the numerator coefficients.

use definable_hypergraphs::field::PrimeField;
use definable_hypergraphs::maps::{interpolation_solution_dim, source_ring};
use definable_hypergraphs::parse::parse_polynomial;
use definable_hypergraphs::sampling::GenericTrialPolicy;
use definable_hypergraphs::scenarios::{interpolation_rank, parse_denominator};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let field = PrimeField::default();

    // A hand-made system: three points in F^2, targets in F^1, q = 1 + y1.
    let q = parse_polynomial("1 + y1", &source_ring(2, field))?;
    let points = vec![vec![1, 2], vec![3, 5], vec![7, 11]];
    let targets = vec![vec![4], vec![6], vec![8]];
    let sys = interpolation_solution_dim(&points, &targets, 2, &q)?;
    println!(
        "unknowns {}, rank {}, solution dim {}, consistent {}",
        sys.unknowns, sys.rank, sys.solution_dim, sys.consistent
    );

    let policy = GenericTrialPolicy::new(20, 20, 1);
    for (k, n, t, d) in [(1, 1, 3, 2), (2, 3, 3, 2), (1, 2, 4, 3), (1, 1, 4, 1)] {
        let q = parse_denominator("1", k, field)?;
        let report = interpolation_rank(n, t, d, &q, &policy)?;
        println!(
            "(k, n, t, d) = ({k}, {n}, {t}, {d}): {}/{} trials at full rank, verdict {:?}",
            report.successes,
            report.trials.len(),
            report.verdict
        );
    }
    Ok(())
}
