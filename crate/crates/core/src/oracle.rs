//! Brute-force point enumeration over small prime fields.

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::field::{FieldError, PrimeField};
use crate::geometry::ConstructibleSet;
use crate::hypergraph::DefinableHypergraph;
use crate::poly::Polynomial;

/// Default bound on the number of grid points or tuples scanned.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("scan of {needed} points exceeds the budget of {budget}")]
    Budget { needed: String, budget: u64 },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("dimension estimation needs at least two primes")]
    TooFewPrimes,
}

/// A polynomial flattened for fast repeated evaluation.
struct Compiled {
    terms: Vec<(u64, Vec<(usize, u32)>)>,
}

impl Compiled {
    fn new(p: &Polynomial) -> Self {
        Compiled {
            terms: p
                .terms()
                .iter()
                .map(|(m, c)| {
                    let exps = m.support().map(|v| (v, m.exponent(v) as u32)).collect();
                    (*c, exps)
                })
                .collect(),
        }
    }

    fn eval(&self, f: PrimeField, pt: &[u64]) -> u64 {
        let mut acc = 0;
        for (c, exps) in &self.terms {
            let mut t = *c;
            for &(v, e) in exps {
                t = f.mul(t, f.pow(pt[v], e as u64));
            }
            acc = f.add(acc, t);
        }
        acc
    }
}

struct CompiledSet {
    field: PrimeField,
    cells: Vec<(Vec<Compiled>, Vec<Compiled>)>,
}

impl CompiledSet {
    fn new(set: &ConstructibleSet) -> Self {
        CompiledSet {
            field: set.ring().field(),
            cells: set
                .cells()
                .iter()
                .map(|c| {
                    (
                        c.equations()
                            .generators()
                            .iter()
                            .map(Compiled::new)
                            .collect(),
                        c.inequations().iter().map(Compiled::new).collect(),
                    )
                })
                .collect(),
        }
    }

    fn contains(&self, pt: &[u64]) -> bool {
        let f = self.field;
        self.cells.iter().any(|(eqs, neqs)| {
            eqs.iter().all(|g| g.eval(f, pt) == 0) && neqs.iter().all(|g| g.eval(f, pt) != 0)
        })
    }
}

fn grid_size(q: u64, arity: usize, budget: u64) -> Result<u64, OracleError> {
    let mut total: u64 = 1;
    for _ in 0..arity {
        total = match total.checked_mul(q) {
            Some(t) if t <= budget => t,
            _ => {
                return Err(OracleError::Budget {
                    needed: format!("{q}^{arity}"),
                    budget,
                })
            }
        };
    }
    Ok(total)
}

fn decode(mut index: u64, q: u64, arity: usize) -> Vec<u64> {
    let mut pt = vec![0; arity];
    for slot in pt.iter_mut().rev() {
        *slot = index % q;
        index /= q;
    }
    pt
}

/// All `F_q`-points of `set`, in lexicographic order.
pub fn enumerate_points(set: &ConstructibleSet, q: u64) -> Result<Vec<Vec<u64>>, OracleError> {
    enumerate_points_with_budget(set, q, DEFAULT_BUDGET)
}

pub fn enumerate_points_with_budget(
    set: &ConstructibleSet,
    q: u64,
    budget: u64,
) -> Result<Vec<Vec<u64>>, OracleError> {
    let field = PrimeField::new(q)?;
    let arity = set.arity();
    let total = grid_size(q, arity, budget)?;
    let compiled = CompiledSet::new(&set.over_field(field));
    Ok((0..total)
        .into_par_iter()
        .filter_map(|i| {
            let pt = decode(i, q, arity);
            compiled.contains(&pt).then_some(pt)
        })
        .collect())
}

pub fn count_points(set: &ConstructibleSet, q: u64) -> Result<u64, OracleError> {
    let field = PrimeField::new(q)?;
    let arity = set.arity();
    let total = grid_size(q, arity, DEFAULT_BUDGET)?;
    let compiled = CompiledSet::new(&set.over_field(field));
    Ok((0..total)
        .into_par_iter()
        .filter(|&i| compiled.contains(&decode(i, q, arity)))
        .count() as u64)
}

/// Number of distinct images of the `F_q`-points under a coordinate projection.
pub fn count_projected_points(
    set: &ConstructibleSet,
    coords: &[usize],
    q: u64,
) -> Result<u64, OracleError> {
    let mut images: Vec<Vec<u64>> = enumerate_points(set, q)?
        .into_iter()
        .map(|pt| coords.iter().map(|&c| pt[c]).collect())
        .collect();
    images.sort_unstable();
    images.dedup();
    Ok(images.len() as u64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Estimate {
    Dim(i64),
    Indeterminate,
}

impl Serialize for Estimate {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Estimate::Dim(d) => s.serialize_i64(*d),
            Estimate::Indeterminate => s.serialize_str("indeterminate"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountProfile {
    pub primes: Vec<u64>,
    pub counts: Vec<u64>,
    pub estimated_dim: Estimate,
}

/// Dimension estimate from the growth `N(q) ≈ c q^dim`.
pub fn estimate_from_counts(primes: &[u64], counts: &[u64]) -> Estimate {
    if counts.iter().all(|&c| c == 0) {
        return Estimate::Dim(-1);
    }
    if counts.contains(&0) {
        return Estimate::Indeterminate;
    }
    let mut slopes: Vec<f64> = primes
        .windows(2)
        .zip(counts.windows(2))
        .map(|(p, c)| (c[1] as f64 / c[0] as f64).ln() / (p[1] as f64 / p[0] as f64).ln())
        .collect();
    slopes.sort_by(f64::total_cmp);
    let m = slopes.len();
    let median = if m % 2 == 1 {
        slopes[m / 2]
    } else {
        (slopes[m / 2 - 1] + slopes[m / 2]) / 2.0
    };
    Estimate::Dim(median.round() as i64)
}

pub fn estimate_dimension(
    set: &ConstructibleSet,
    primes: &[u64],
) -> Result<CountProfile, OracleError> {
    if primes.len() < 2 {
        return Err(OracleError::TooFewPrimes);
    }
    let counts = primes
        .iter()
        .map(|&q| count_points(set, q))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CountProfile {
        primes: primes.to_vec(),
        estimated_dim: estimate_from_counts(primes, &counts),
        counts,
    })
}

/// Dimension estimate of the projected point set.
pub fn estimate_projection_dimension(
    set: &ConstructibleSet,
    coords: &[usize],
    primes: &[u64],
) -> Result<CountProfile, OracleError> {
    if primes.len() < 2 {
        return Err(OracleError::TooFewPrimes);
    }
    let counts = primes
        .iter()
        .map(|&q| count_projected_points(set, coords, q))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CountProfile {
        primes: primes.to_vec(),
        estimated_dim: estimate_from_counts(primes, &counts),
        counts,
    })
}

/// Whether no `t`-tuple drawn from `points` is an edge of `e` over `F_q`.
pub fn check_edge_free(
    points: &[Vec<u64>],
    e: &DefinableHypergraph,
    q: u64,
) -> Result<bool, OracleError> {
    let field = PrimeField::new(q)?;
    let t = e.t();
    let w = points.len() as u64;
    let needed = (0..t).try_fold(1u64, |acc, _| acc.checked_mul(w));
    if !matches!(needed, Some(n) if n <= DEFAULT_BUDGET) {
        return Err(OracleError::Budget {
            needed: format!("{w}^{t}"),
            budget: DEFAULT_BUDGET,
        });
    }
    if points.is_empty() {
        return Ok(true);
    }
    let compiled = CompiledSet::new(&e.set().over_field(field));
    let total = needed.unwrap();
    let hit = (0..total).into_par_iter().any(|i| {
        let idx = decode(i, w, t);
        let tuple: Vec<u64> = idx
            .iter()
            .flat_map(|&j| points[j as usize].iter().copied())
            .collect();
        compiled.contains(&tuple)
    });
    Ok(!hit)
}
