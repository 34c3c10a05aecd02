//! Almost-density of arithmetic-progression hypergraphs.

use definable_hypergraphs::builders::ap_hypergraph;
use definable_hypergraphs::field::PrimeField;
use definable_hypergraphs::hypergraph::{density_report, is_injective};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let field = PrimeField::default();
    for (n, t) in [(1, 3), (2, 3), (1, 4)] {
        let e = ap_hypergraph(n, t, field)?;
        let report = density_report(&e, None)?;
        println!(
            "n = {n}, t = {t}: dim {}, minimal r {:?}",
            report.dim, report.minimal_r
        );
        for (subset, dim) in report.dims() {
            println!("  S = {subset:?}: dim {dim}");
        }
    }

    for p in [2, 3, 2147483647] {
        let e = ap_hypergraph(1, 3, PrimeField::new(p)?)?;
        println!(
            "3-term progressions injective over F_{p}: {}",
            is_injective(&e)?
        );
    }
    Ok(())
}
