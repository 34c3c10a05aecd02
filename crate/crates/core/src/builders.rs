//! Named example sets.

use crate::field::PrimeField;
use crate::geometry::{Cell, ConstructibleSet};
use crate::hypergraph::{block, hypergraph_ring, DefinableHypergraph};
use crate::poly::{Polynomial, Ring};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BuildError {
    #[error("unknown example `{0}`")]
    UnknownName(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

/// Parameters for [`build_example`]; unused ones are ignored.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExampleParams {
    pub n: usize,
    pub t: usize,
    pub k: usize,
    pub m: usize,
}

impl Default for ExampleParams {
    fn default() -> Self {
        ExampleParams {
            n: 1,
            t: 3,
            k: 1,
            m: 1,
        }
    }
}

pub const EXAMPLE_NAMES: &[&str] = &[
    "ap",
    "subspace",
    "collinear",
    "axes",
    "lines",
    "linear-graph",
];

/// A built example; `split` is the number of leading coordinates forming
/// the first factor when the set is read as `A ⊆ F^split × F^rest`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Example {
    pub hypergraph: DefinableHypergraph,
    pub split: usize,
}

pub fn build_example(
    name: &str,
    params: ExampleParams,
    field: PrimeField,
) -> Result<Example, BuildError> {
    let ExampleParams { n, t, k, m } = params;
    let hypergraph = match name {
        "ap" => ap_hypergraph(n, t, field)?,
        "subspace" => subspace_hypergraph(n, k, field)?,
        "collinear" => collinear_complement(n, field)?,
        "axes" => axes_hypergraph(n, field)?,
        "lines" => {
            return Ok(Example {
                hypergraph: lines_example(field),
                split: 2,
            })
        }
        "linear-graph" => {
            return Ok(Example {
                hypergraph: linear_graph(n, m, field)?,
                split: n,
            })
        }
        other => return Err(BuildError::UnknownName(other.to_string())),
    };
    let split = hypergraph.n();
    Ok(Example { hypergraph, split })
}

/// Parses `name` or `name:key=val,...` with keys `n`, `t`, `k`, `m`.
pub fn parse_example_ref(text: &str) -> Result<(String, ExampleParams), BuildError> {
    let (name, rest) = text.split_once(':').unwrap_or((text, ""));
    if !EXAMPLE_NAMES.contains(&name) {
        return Err(BuildError::UnknownName(name.to_string()));
    }
    let mut params = ExampleParams {
        n: match name {
            "collinear" => 4,
            "subspace" => 3,
            "linear-graph" => 2,
            _ => 1,
        },
        ..ExampleParams::default()
    };
    for pair in rest.split(',').filter(|s| !s.trim().is_empty()) {
        let (key, value) = pair.split_once('=').ok_or_else(|| {
            BuildError::InvalidParams(format!("expected key=value, found `{pair}`"))
        })?;
        let value: usize = value.trim().parse().map_err(|_| {
            BuildError::InvalidParams(format!("`{value}` is not a nonnegative integer"))
        })?;
        match key.trim() {
            "n" => params.n = value,
            "t" => params.t = value,
            "k" => params.k = value,
            "m" => params.m = value,
            other => return Err(BuildError::InvalidParams(format!("unknown key `{other}`"))),
        }
    }
    Ok((name.to_string(), params))
}

fn var(ring: &Ring, n: usize, block_index: usize, coord: usize) -> Polynomial {
    Polynomial::var(ring, block_index * n + coord)
}

fn single_cells(ring: &Ring, eqs: &[Polynomial], neqs: Vec<Polynomial>) -> ConstructibleSet {
    let cells = neqs
        .into_iter()
        .map(|g| Cell::from_polys(ring, eqs.to_vec(), vec![g]).expect("nonzero inequation"))
        .collect();
    ConstructibleSet::new(ring, cells).expect("same ring")
}

/// `t`-term arithmetic progressions in `F^n`: `x_{i+2} - 2 x_{i+1} + x_i = 0`
/// and `x_1 != x_2`, one cell per coordinate where `x_1` and `x_2` differ.
pub fn ap_hypergraph(
    n: usize,
    t: usize,
    field: PrimeField,
) -> Result<DefinableHypergraph, BuildError> {
    if n == 0 || t < 3 {
        return Err(BuildError::InvalidParams(
            "ap needs n >= 1 and t >= 3".into(),
        ));
    }
    let ring = hypergraph_ring(n, t, field);
    let mut eqs = Vec::new();
    for i in 0..t - 2 {
        for j in 0..n {
            let two = Polynomial::from_i64(&ring, 2);
            eqs.push(
                &(&var(&ring, n, i + 2, j) - &(&two * &var(&ring, n, i + 1, j)))
                    + &var(&ring, n, i, j),
            );
        }
    }
    let neqs = (0..n)
        .map(|j| &var(&ring, n, 0, j) - &var(&ring, n, 1, j))
        .collect();
    Ok(DefinableHypergraph::new(n, t, single_cells(&ring, &eqs, neqs)).unwrap())
}

/// Pairs `(x, y)` with `x != y` and `x - y` in the coordinate subspace
/// `V = {v_1 = ... = v_k = 0}` of dimension `n - k`.
pub fn subspace_hypergraph(
    n: usize,
    k: usize,
    field: PrimeField,
) -> Result<DefinableHypergraph, BuildError> {
    if k == 0 || k >= n {
        return Err(BuildError::InvalidParams(
            "subspace needs 1 <= k < n".into(),
        ));
    }
    let ring = hypergraph_ring(n, 2, field);
    let diff = |j: usize| &var(&ring, n, 0, j) - &var(&ring, n, 1, j);
    let eqs: Vec<Polynomial> = (0..k).map(diff).collect();
    let neqs = (k..n).map(diff).collect();
    Ok(DefinableHypergraph::new(n, 2, single_cells(&ring, &eqs, neqs)).unwrap())
}

/// Non-collinear triples in `F^n` (`n >= 4`): some 2x2 minor of
/// `[x_2 - x_1, x_3 - x_1]` is nonzero. No degree-1 curve meets it in three
/// points, while its closure is everything.
pub fn collinear_complement(
    n: usize,
    field: PrimeField,
) -> Result<DefinableHypergraph, BuildError> {
    if n < 4 {
        return Err(BuildError::InvalidParams(
            "collinear needs n > t = 3".into(),
        ));
    }
    let ring = hypergraph_ring(n, 3, field);
    let u = |j: usize| &var(&ring, n, 1, j) - &var(&ring, n, 0, j);
    let w = |j: usize| &var(&ring, n, 2, j) - &var(&ring, n, 0, j);
    let mut minors = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            minors.push(&(&u(a) * &w(b)) - &(&u(b) * &w(a)));
        }
    }
    Ok(DefinableHypergraph::new(n, 3, single_cells(&ring, &[], minors)).unwrap())
}

/// `(F^n × {0}) ∪ ({0} × F^n)`, with the two cells asserted as components.
pub fn axes_hypergraph(n: usize, field: PrimeField) -> Result<DefinableHypergraph, BuildError> {
    if n == 0 {
        return Err(BuildError::InvalidParams("axes needs n >= 1".into()));
    }
    let ring = hypergraph_ring(n, 2, field);
    let zero = |i: usize| {
        let gens = block(n, i)
            .into_iter()
            .map(|v| Polynomial::var(&ring, v))
            .collect();
        Cell::from_polys(&ring, gens, Vec::new()).unwrap()
    };
    let set = ConstructibleSet::new(&ring, vec![zero(1), zero(0)]).unwrap();
    Ok(DefinableHypergraph::new(n, 2, set)
        .unwrap()
        .with_components_asserted(true))
}

/// `A = {(x, y, z) : y = z x, x != 0} ⊆ F^2 × F`, stored with `n = 1, t = 3`
/// as variables `x1_1, x2_1, x3_1`.
pub fn lines_example(field: PrimeField) -> DefinableHypergraph {
    let ring = hypergraph_ring(1, 3, field);
    let (x, y, z) = (
        var(&ring, 1, 0, 0),
        var(&ring, 1, 1, 0),
        var(&ring, 1, 2, 0),
    );
    let cell = Cell::from_polys(&ring, vec![&y - &(&z * &x)], vec![x]).unwrap();
    DefinableHypergraph::new(1, 3, ConstructibleSet::new(&ring, vec![cell]).unwrap())
        .unwrap()
        .with_components_asserted(true)
}

/// Graph `{(u, v) ∈ F^n × F^m : v = M u}` of the surjective coordinate
/// map with `v_i = u_i + u_{i+m} + ...`, stored with `n = 1`.
pub fn linear_graph(
    n: usize,
    m: usize,
    field: PrimeField,
) -> Result<DefinableHypergraph, BuildError> {
    if m == 0 || m > n {
        return Err(BuildError::InvalidParams(
            "linear-graph needs 1 <= m <= n".into(),
        ));
    }
    let ring = hypergraph_ring(1, n + m, field);
    let eqs: Vec<Polynomial> = (0..m)
        .map(|i| {
            let image = (i..n).step_by(m).fold(Polynomial::zero(&ring), |acc, j| {
                &acc + &Polynomial::var(&ring, j)
            });
            &Polynomial::var(&ring, n + i) - &image
        })
        .collect();
    let cell = Cell::from_polys(&ring, eqs, Vec::new()).unwrap();
    Ok(
        DefinableHypergraph::new(1, n + m, ConstructibleSet::new(&ring, vec![cell]).unwrap())
            .unwrap()
            .with_components_asserted(true),
    )
}
