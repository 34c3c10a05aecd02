//! Reduced Groebner bases under different orders, membership, and elimination.

use definable_hypergraphs::field::PrimeField;
use definable_hypergraphs::groebner::{buchberger, eliminate, ideal_dimension, Ideal};
use definable_hypergraphs::monomial::MonomialOrder;
use definable_hypergraphs::parse::parse_polynomial;
use definable_hypergraphs::poly::Ring;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ring = Ring::new(["t", "x", "y", "z"], PrimeField::default());
    let p = |s: &str| parse_polynomial(s, &ring);
    // Twisted cubic parametrized by t.
    let ideal = Ideal::new(&ring, [p("x - t")?, p("y - t^2")?, p("z - t^3")?])?;

    for order in [MonomialOrder::Lex, MonomialOrder::GrevLex] {
        let gb = buchberger(&ideal, order)?;
        println!("{order:?} basis:");
        for g in gb.basis() {
            println!("  {g}");
        }
        println!("  contains x*z - y^2: {}", gb.contains(&p("x*z - y^2")?)?);
        println!("  contains x + y: {}", gb.contains(&p("x + y")?)?);
    }

    let implicit = eliminate(&ideal, &[0])?;
    println!("eliminating t:");
    for g in implicit.generators() {
        println!("  {g}");
    }
    println!("dimension of the curve: {}", ideal_dimension(&implicit)?);
    Ok(())
}
