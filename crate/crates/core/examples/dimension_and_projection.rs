//! Constructible sets: dimension, projection closures, complements, fibers.

use definable_hypergraphs::field::PrimeField;
use definable_hypergraphs::geometry::{
    self, complement, generic_fiber_dimension, projection_closure, Cell, ConstructibleSet,
};
use definable_hypergraphs::parse::parse_polynomial;
use definable_hypergraphs::poly::Ring;
use definable_hypergraphs::sampling::GenericTrialPolicy;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ring = Ring::new(["x", "y", "z"], PrimeField::default());
    let p = |s: &str| parse_polynomial(s, &ring);

    // {y = x z, x != 0}: a surface whose projection to (x, y) misses the
    // punctured axis x = 0, y != 0.
    let cell = Cell::from_polys(&ring, vec![p("y - x*z")?], vec![p("x")?])?;
    let a = ConstructibleSet::new(&ring, vec![cell])?;
    println!("dim A = {}", geometry::dimension(&a)?);

    let proj = projection_closure(&a, &[0, 1])?;
    println!("closure of proj_(x,y) A has dimension {}", proj.dimension);
    for ideal in &proj.ideals {
        println!("  ideal generators: {:?}", ideal.generators());
    }

    let proj_z = projection_closure(&a, &[2])?;
    println!("dim proj_z A = {}", proj_z.dimension);

    let fiber = generic_fiber_dimension(&a, 2, &GenericTrialPolicy::default())?;
    println!(
        "generic fiber over (x, y): dim {} (votes {:?})",
        fiber.value, fiber.votes
    );

    let rest = complement(&a)?;
    println!(
        "complement has {} cells and dimension {}",
        rest.cells().len(),
        geometry::dimension(&rest)?
    );
    println!("(1, 2, 2) in A: {}", a.contains_point(&[1, 2, 2])?);
    println!(
        "(0, 0, 5) in complement: {}",
        rest.contains_point(&[0, 0, 5])?
    );
    Ok(())
}
