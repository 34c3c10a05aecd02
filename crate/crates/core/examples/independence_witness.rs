//! When no component projects onto every block, a full-dimensional
//! independent set exists. Build one and check it by brute force.

use definable_hypergraphs::builders::{ap_hypergraph, axes_hypergraph};
use definable_hypergraphs::field::PrimeField;
use definable_hypergraphs::hypergraph::{independence_criterion, witness_is_independent};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let field = PrimeField::default();
    for n in [1, 2] {
        let e = axes_hypergraph(n, field)?;
        let v = independence_criterion(&e)?;
        println!(
            "axes, n = {n}: criterion holds {}, deficient blocks {:?}, witness dim {:?} [{}]",
            v.criterion_ii_holds,
            v.deficient_blocks,
            v.witness_dim,
            v.label()
        );
        if let Some(w) = &v.witness {
            for q in [5, 7] {
                println!(
                    "  edge-free over F_{q}: {}",
                    witness_is_independent(&e, w, q)?
                );
            }
        }
    }

    let ap = independence_criterion(&ap_hypergraph(1, 3, field)?)?;
    println!(
        "3-term progressions: criterion holds {} via cell {:?}",
        ap.criterion_ii_holds, ap.full_cell
    );
    Ok(())
}
