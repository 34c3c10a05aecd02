#![allow(dead_code)]

use definable_hypergraphs::field::PrimeField;
use definable_hypergraphs::geometry::{Cell, ConstructibleSet};
use definable_hypergraphs::parse::parse_polynomial;
use definable_hypergraphs::poly::{Polynomial, Ring};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Case {
    pub name: &'static str,
    pub set: ConstructibleSet,
    /// Dimension worked out by hand.
    pub expected: i64,
}

pub fn set_from(arity: usize, field: PrimeField, cells: &[(&[&str], &[&str])]) -> ConstructibleSet {
    let ring = Ring::numbered("x", arity, field);
    let parse = |s: &&str| parse_polynomial(s, &ring).unwrap();
    let cells = cells
        .iter()
        .map(|(eqs, neqs)| {
            Cell::from_polys(
                &ring,
                eqs.iter().map(parse).collect(),
                neqs.iter().map(parse).collect(),
            )
            .unwrap()
        })
        .collect();
    ConstructibleSet::new(&ring, cells).unwrap()
}

/// Sets with known dimension for comparing symbolic and counting answers.
pub fn regression_suite() -> Vec<Case> {
    let f = PrimeField::default();
    let case = |name, arity, cells: &[(&[&str], &[&str])], expected| Case {
        name,
        set: set_from(arity, f, cells),
        expected,
    };
    vec![
        case("plane", 2, &[(&[], &[])], 2),
        case("diagonal", 2, &[(&["x1 - x2"], &[])], 1),
        case("parabola", 2, &[(&["x2 - x1^2"], &[])], 1),
        case("origin", 2, &[(&["x1", "x2"], &[])], 0),
        case("inconsistent", 2, &[(&["x1", "x1 - 1"], &[])], -1),
        case("circle", 2, &[(&["x1^2 + x2^2 - 1"], &[])], 1),
        case("hyperbola", 2, &[(&["x1*x2 - 1"], &[])], 1),
        case("cusp", 2, &[(&["x1^2 - x2^3"], &[])], 1),
        case("no_real_points", 2, &[(&["x1^2 + 1", "x2"], &[])], 0),
        case("cone", 3, &[(&["x1^2 + x2^2 - x3^2"], &[])], 2),
        case("sum_of_squares", 3, &[(&["x1^2 + x2^2 + x3^2"], &[])], 2),
        case("twisted_cubic", 3, &[(&["x2 - x1^2", "x3 - x1^3"], &[])], 1),
        case(
            "plane_and_line",
            3,
            &[(&["x3"], &[]), (&["x1", "x2"], &[])],
            2,
        ),
        case("punctured_plane", 3, &[(&["x3"], &["x1"])], 2),
        case("progression", 3, &[(&["x3 - 2*x2 + x1"], &["x1 - x2"])], 2),
        case(
            "coordinate_axes",
            3,
            &[(&["x1*x2", "x2*x3", "x1*x3"], &[])],
            1,
        ),
        case("coordinate_planes", 3, &[(&["x1*x2*x3"], &[])], 2),
        case("product_graph", 3, &[(&["x1 - x2*x3"], &["x2"])], 2),
        case(
            "reducible_minus_component",
            3,
            &[(&["x3*(x1 - x2)"], &["x3"])],
            2,
        ),
        case("determinantal", 4, &[(&["x1*x4 - x2*x3"], &[])], 3),
        case("two_diagonals", 4, &[(&["x1 - x2", "x3 - x4"], &[])], 2),
        case(
            "hyperplane_complement",
            4,
            &[(&[], &["x1 + x2 + x3 + x4"])],
            4,
        ),
        case(
            "curve_in_4_space",
            4,
            &[(&["x1^2 - x2", "x3^2 - x4", "x1*x3 - 1"], &[])],
            1,
        ),
        case(
            "sum_product_graph",
            4,
            &[(&["x3 - x1*x2", "x4 - x1 - x2"], &[])],
            2,
        ),
    ]
}

/// A graph `{(g(x), x)}` with the image coordinates placed first, so that
/// `split` coordinates form the target side.
pub struct GraphCase {
    pub set: ConstructibleSet,
    pub split: usize,
    pub description: String,
}

fn random_small_poly<R: Rng>(ring: &Ring, vars: &[usize], rng: &mut R) -> Polynomial {
    let mut p = Polynomial::zero(ring);
    while p.is_zero() || p.is_constant() {
        for _ in 0..rng.gen_range(1..=3) {
            let mut term = Polynomial::from_i64(ring, rng.gen_range(-3..=3));
            for _ in 0..rng.gen_range(1..=3) {
                if rng.gen_bool(0.7) {
                    term = &term * &Polynomial::var(ring, vars[rng.gen_range(0..vars.len())]);
                }
            }
            p = &p + &term;
        }
    }
    p
}

pub fn graph_of_map_sets(count: usize, seed: u64) -> Vec<GraphCase> {
    let field = PrimeField::default();
    (0..count)
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i as u64));
            let a = rng.gen_range(1..=3usize);
            let b = rng.gen_range(1..=4 - a);
            let ring = Ring::numbered("x", a + b, field);
            let source: Vec<usize> = (b..a + b).collect();
            let eqs: Vec<Polynomial> = (0..b)
                .map(|j| &Polynomial::var(&ring, j) - &random_small_poly(&ring, &source, &mut rng))
                .collect();
            let description = eqs
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ");
            let cell = Cell::from_polys(&ring, eqs, Vec::new()).unwrap();
            GraphCase {
                set: ConstructibleSet::new(&ring, vec![cell]).unwrap(),
                split: b,
                description,
            }
        })
        .collect()
}
