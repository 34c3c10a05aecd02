//! Non-collinear triples: dense, yet every degree-1 curve misses it entirely.

use definable_hypergraphs::builders::collinear_complement;
use definable_hypergraphs::field::PrimeField;
use definable_hypergraphs::hypergraph::{density_report, induce};
use definable_hypergraphs::maps::sample_map;
use definable_hypergraphs::scenarios::parse_denominator;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let field = PrimeField::default();
    let e = collinear_complement(4, field)?;
    let report = density_report(&e, None)?;
    println!("dim H = {}, minimal r {:?}", report.dim, report.minimal_r);

    let q = parse_denominator("1", 1, field)?;
    for d in [1, 2] {
        for seed in 0..3 {
            let f = sample_map(d, 1, 4, &q, seed)?;
            let induced = induce(&e, &f)?;
            println!("d = {d}, seed {seed}: dim H[f] = {}", induced.dimension()?);
        }
    }
    Ok(())
}
