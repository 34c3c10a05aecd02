//! Brute-force point counts over small primes as a dimension cross-check.

use definable_hypergraphs::builders::ap_hypergraph;
use definable_hypergraphs::field::PrimeField;
use definable_hypergraphs::geometry::{self, Cell, ConstructibleSet};
use definable_hypergraphs::oracle::{
    count_points, estimate_dimension, estimate_projection_dimension,
};
use definable_hypergraphs::parse::parse_polynomial;
use definable_hypergraphs::poly::Ring;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let primes = [5, 7, 11, 13];
    let ring = Ring::numbered("x", 3, PrimeField::default());
    let p = |s: &str| parse_polynomial(s, &ring);

    let cone = ConstructibleSet::new(
        &ring,
        vec![Cell::from_polys(
            &ring,
            vec![p("x1^2 + x2^2 - x3^2")?],
            vec![],
        )?],
    )?;
    let profile = estimate_dimension(&cone, &primes)?;
    println!(
        "cone: counts {:?}, estimate {:?}, symbolic {}",
        profile.counts,
        profile.estimated_dim,
        geometry::dimension(&cone)?
    );

    // No points at all when -1 is not a square.
    let sparse = ConstructibleSet::new(
        &ring,
        vec![Cell::from_polys(&ring, vec![p("x1^2 + 1")?], vec![])?],
    )?;
    for q in primes {
        println!(
            "x1^2 + 1 = 0 over F_{q}: {} points",
            count_points(&sparse, q)?
        );
    }
    println!(
        "estimate: {:?}",
        estimate_dimension(&sparse, &primes)?.estimated_dim
    );

    let ap = ap_hypergraph(1, 3, PrimeField::default())?;
    let pair = estimate_projection_dimension(ap.set(), &[0, 2], &primes)?;
    println!(
        "progressions projected to (x1, x3): counts {:?}",
        pair.counts
    );
    Ok(())
}
