use definable_hypergraphs::builders::{build_example, parse_example_ref};
use definable_hypergraphs::field::PrimeField;
use definable_hypergraphs::spec_file::{emit_spec, parse_spec, parse_spec_with_prime};

const AP: &str = "\
# 3-term progressions in F
prime 2147483647
hypergraph n=1 t=3
cell
  eq x3_1 - 2*x2_1 + x1_1
  neq x1_1 - x2_1
end
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let e = parse_spec(AP)?;
    println!(
        "parsed n = {}, t = {}, {} cell(s)",
        e.n(),
        e.t(),
        e.set().cells().len()
    );
    print!("{}", emit_spec(&e));

    let small = parse_spec_with_prime(AP, Some(7))?;
    println!("same file over F_{}", small.field().modulus());

    match parse_spec("hypergraph n=1 t=2\ncell\n  eq x1_1^ + 1\nend\n") {
        Ok(_) => unreachable!(),
        Err(err) => println!("error: {err}"),
    }

    let (name, params) = parse_example_ref("subspace:n=4,k=2")?;
    let example = build_example(&name, params, PrimeField::default())?;
    print!("{}", emit_spec(&example.hypergraph));
    Ok(())
}
