//! Seeded verification scenarios for induced subhypergraphs,
//! the expansion formula, prints and the interpolation rank law.

use rand::Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::field::PrimeField;
use crate::geometry::{self, cell_closure, ConstructibleSet, GeometryError};
use crate::groebner::{buchberger, GroebnerError};
use crate::hypergraph::{
    self, density_report, independence_criterion, induce, partial_induce, print_set,
    pull_back_cells, DefinableHypergraph, HypergraphError,
};
use crate::maps::{
    family_dimension, interpolation_solution_dim, sample_affine, sample_map, source_ring, MapError,
    RationalMap,
};
use crate::monomial::{binomial, MonomialOrder};
use crate::parse::{parse_polynomial, ParseError};
use crate::poly::{BlockMap, PolyError, Polynomial, Ring};
use crate::report::{
    Check, ExpansionTrial, InterpolationTrial, MainTrial, Parameters, PrintsTrial, ScenarioReport,
    TrialRecord,
};
use crate::sampling::GenericTrialPolicy;

const STREAM_MAIN: u64 = 1;
const STREAM_EXPANSION: u64 = 2;
const STREAM_PRINTS: u64 = 3;
const STREAM_INTERP: u64 = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScenarioError {
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("the set is not dominant: dim proj_1 = {projection_dim} < {n}")]
    NotDominant { projection_dim: i64, n: usize },
    #[error("{0}")]
    Invalid(String),
}

impl From<PolyError> for ScenarioError {
    fn from(e: PolyError) -> Self {
        ScenarioError::Geometry(e.into())
    }
}

impl From<GroebnerError> for ScenarioError {
    fn from(e: GroebnerError) -> Self {
        ScenarioError::Geometry(e.into())
    }
}

/// The denominator `q` as a polynomial in `y1, ..., yk`.
pub fn parse_denominator(
    text: &str,
    k: usize,
    field: PrimeField,
) -> Result<Polynomial, ScenarioError> {
    let q = parse_polynomial(text, &source_ring(k, field))?;
    if q.is_zero() {
        return Err(MapError::ZeroDenominator.into());
    }
    Ok(q)
}

fn base_parameters(policy: &GenericTrialPolicy) -> Parameters {
    Parameters {
        seed: policy.seed,
        trials: policy.trials,
        accept_threshold: policy.accept_threshold,
        ..Parameters::default()
    }
}

/// Samples `f ∈ R_d(k, n; q)` per trial, forms `E[f]`, and checks that it is
/// nonempty and `r`-almost dense at `r = minimal_r(E)`.
pub fn verify_main(
    e: &DefinableHypergraph,
    d: u32,
    q: &Polynomial,
    policy: &GenericTrialPolicy,
) -> Result<ScenarioReport, ScenarioError> {
    let k = q.ring().arity();
    let (n, t) = (e.n(), e.t());
    let base = density_report(e, None)?;
    let r = base.minimal_r;
    let preconditions = vec![
        Check::new(
            "degree",
            d as usize + 1 >= t,
            format!("d = {d}, t - 1 = {}", t - 1),
        ),
        Check::new(
            "k_exceeds_r",
            r.is_some_and(|r| k as i64 > r),
            format!("k = {k}, minimal_r = {r:?}"),
        ),
    ];
    let records: Vec<TrialRecord> = (0..policy.trials)
        .into_par_iter()
        .map(|i| -> Result<TrialRecord, ScenarioError> {
            let seed = policy.trial_seed(STREAM_MAIN, i);
            let f = sample_map(d, k, n, q, seed)?;
            let ef = induce(e, &f)?;
            let dim = ef.dimension()?;
            let nonempty = dim >= 0;
            let (minimal_r, dense_at_r) = match (nonempty, r) {
                (true, Some(r)) => {
                    let rep = density_report(&ef, Some(r))?;
                    (rep.minimal_r, rep.dense)
                }
                _ => (None, None),
            };
            let criterion_ii = if e.components_asserted() && nonempty {
                Some(independence_criterion(&ef)?.criterion_ii_holds)
            } else {
                None
            };
            Ok(TrialRecord::Main(MainTrial {
                index: i,
                seed,
                nonempty,
                dim,
                minimal_r,
                dense_at_r,
                criterion_ii,
                success: nonempty && dense_at_r == Some(true),
            }))
        })
        .collect::<Result<_, _>>()?;
    let successes = records.iter().filter(|t| t.success()).count();
    let mut assertions = Vec::new();
    if successes >= policy.accept_threshold {
        let bound = (t * n) as i64 - (t as i64 - 1) * k as i64;
        assertions.push(Check::new(
            "size_of_E",
            base.dim >= bound,
            format!("dim E = {} >= tn - (t-1)k = {bound}", base.dim),
        ));
    }
    let parameters = Parameters {
        n: Some(n),
        t: Some(t),
        d: Some(d),
        k: Some(k),
        r,
        q_poly: Some(q.to_string()),
        ..base_parameters(policy)
    };
    Ok(ScenarioReport::new(
        "verify-main",
        e.field().modulus(),
        parameters,
        preconditions,
        policy.accept_threshold,
        records,
        assertions,
    ))
}

/// `A_f = {(y, x_2) : (f(y), x_2) ∈ A}` for `A ⊆ F^split × F^m`.
pub fn fiber_product(
    a: &ConstructibleSet,
    split: usize,
    f: &RationalMap,
) -> Result<ConstructibleSet, ScenarioError> {
    let n_total = a.arity();
    let k = f.k();
    let field = a.ring().field();
    let mut names: Vec<String> = source_ring(k, field).vars().to_vec();
    names.extend(a.ring().vars()[split..].iter().cloned());
    let target = Ring::new(names, field);
    let y: Vec<usize> = (0..k).collect();
    let rest: Vec<usize> = (k..k + n_total - split).collect();
    let blocks = vec![
        f.block_map(&target, (0..split).collect(), &y),
        BlockMap::rename(&target, (split..n_total).collect(), &rest),
    ];
    let domain = vec![f.denominator().map_vars(&target, &y)];
    let cells = pull_back_cells(a, &target, &blocks, &domain)?;
    Ok(ConstructibleSet::new(&target, cells)?)
}

/// Compares `dim proj_2(A_f)` with `min{dim A - n + k, dim proj_2 A}` for
/// sampled `f ∈ R_d(k, n; 1)`; `through_origin` forces `f(0) = 0`.
pub fn verify_expansion(
    a: &ConstructibleSet,
    split: usize,
    d: u32,
    k: usize,
    through_origin: bool,
    policy: &GenericTrialPolicy,
) -> Result<ScenarioReport, ScenarioError> {
    let total = a.arity();
    if split == 0 || split >= total {
        return Err(ScenarioError::Invalid(format!(
            "split {split} must be in 1..{total}"
        )));
    }
    let first: Vec<usize> = (0..split).collect();
    let second: Vec<usize> = (split..total).collect();
    let dim_a = geometry::dimension(a)?;
    let proj1 = geometry::projection_dimension(a, &first)?;
    let proj2 = geometry::projection_dimension(a, &second)?;
    if proj1 < split as i64 {
        return Err(ScenarioError::NotDominant {
            projection_dim: proj1,
            n: split,
        });
    }
    let expected = (dim_a - split as i64 + k as i64).min(proj2);
    let field = a.ring().field();
    let q = Polynomial::one(&source_ring(k, field));
    let records: Vec<TrialRecord> = (0..policy.trials)
        .into_par_iter()
        .map(|i| -> Result<TrialRecord, ScenarioError> {
            let seed = policy.trial_seed(STREAM_EXPANSION, i);
            let mut f = sample_map(d, k, split, &q, seed)?;
            if through_origin {
                f = vanish_at_origin(&f)?;
            }
            let af = fiber_product(a, split, &f)?;
            let fiber_dim = geometry::dimension(&af)?;
            let kept: Vec<usize> = (k..af.arity()).collect();
            let proj2_dim = geometry::projection_dimension(&af, &kept)?;
            Ok(TrialRecord::Expansion(ExpansionTrial {
                index: i,
                seed,
                fiber_dim,
                proj2_dim,
                expected,
                success: proj2_dim == expected,
            }))
        })
        .collect::<Result<_, _>>()?;
    let preconditions = vec![
        Check::new("dominant", true, format!("dim proj_1 A = {proj1} = n")),
        Check::new(
            "generic_family",
            !through_origin,
            if through_origin {
                "maps forced through the origin"
            } else {
                "uniform maps"
            },
        ),
    ];
    let assertions = vec![Check::new(
        "expected_value",
        true,
        format!("dim A = {dim_a}, dim proj_2 A = {proj2}, min = {expected}"),
    )];
    let parameters = Parameters {
        n: Some(split),
        d: Some(d),
        k: Some(k),
        q_poly: Some("1".into()),
        split: Some(split),
        through_origin: Some(through_origin),
        ..base_parameters(policy)
    };
    Ok(ScenarioReport::new(
        "verify-expansion",
        field.modulus(),
        parameters,
        preconditions,
        policy.accept_threshold,
        records,
        assertions,
    ))
}

/// The same map with constant terms of the numerators removed.
fn vanish_at_origin(f: &RationalMap) -> Result<RationalMap, MapError> {
    let numerators = f
        .numerators()
        .iter()
        .map(|p| {
            Polynomial::from_terms(
                p.ring(),
                p.terms().iter().filter(|(m, _)| !m.is_one()).cloned(),
            )
        })
        .collect();
    RationalMap::new(f.d(), f.denominator().clone(), numerators)
}

/// Whether all cells have the same closure.
fn single_closure(e: &DefinableHypergraph) -> Result<bool, ScenarioError> {
    let mut bases = Vec::new();
    for c in e.set().cells() {
        bases.push(
            buchberger(&cell_closure(c)?, MonomialOrder::GrevLex)?
                .basis()
                .to_vec(),
        );
    }
    Ok(bases.windows(2).all(|w| w[0] == w[1]))
}

/// Samples `f` and pins `ℓ_1, ..., ℓ_{t-1} ∈ L(r, k)` and measures the
/// closure of `E(f; ℓ_1, ..., ℓ_{t-1}) ⊆ F^n` and the pulled-back print set
/// in `F^k`.
pub fn verify_prints(
    e: &DefinableHypergraph,
    d: u32,
    q: &Polynomial,
    policy: &GenericTrialPolicy,
) -> Result<ScenarioReport, ScenarioError> {
    let k = q.ring().arity();
    let (n, t) = (e.n(), e.t());
    let base = density_report(e, None)?;
    let Some(r) = base.minimal_r else {
        return Err(ScenarioError::Invalid(
            "some single-block projection is not full-dimensional".into(),
        ));
    };
    let single = single_closure(e)?;
    let preconditions = vec![
        Check::new("injective", base.injective, ""),
        Check::new("single_cell", single, "all cells share one closure"),
        Check::new(
            "degree",
            d as usize + 1 >= t,
            format!("d = {d}, t - 1 = {}", t - 1),
        ),
        Check::new("k_exceeds_r", k as i64 > r, format!("k = {k}, r = {r}")),
    ];
    let field = e.field();
    let records: Vec<TrialRecord> = (0..policy.trials)
        .into_par_iter()
        .map(|i| -> Result<TrialRecord, ScenarioError> {
            let seed = policy.trial_seed(STREAM_PRINTS, i);
            let f = sample_map(d, k, n, q, seed)?;
            let pins: Vec<_> = (0..t - 1)
                .map(|j| {
                    sample_affine(
                        r as usize,
                        k,
                        field,
                        crate::sampling::derive_seed(seed, 7, j as u64),
                    )
                })
                .collect();
            let partial_dim = partial_induce(e, &f, &pins)?.dimension()?;
            let pullback_dim = print_set(e, &f, &pins)?.dimension()?;
            Ok(TrialRecord::Prints(PrintsTrial {
                index: i,
                seed,
                partial_dim,
                pullback_dim,
                success: partial_dim == n as i64,
            }))
        })
        .collect::<Result<_, _>>()?;
    let dense_prints = records
        .iter()
        .filter(|rec| matches!(rec, TrialRecord::Prints(p) if p.pullback_dim == k as i64))
        .count();
    let mut assertions = Vec::new();
    if preconditions.iter().all(|c| c.holds) {
        assertions.push(Check::new(
            "prints_dense_in_parameter_space",
            dense_prints >= policy.accept_threshold,
            format!("{dense_prints} trials with pullback dimension k = {k}"),
        ));
    }
    let parameters = Parameters {
        n: Some(n),
        t: Some(t),
        d: Some(d),
        k: Some(k),
        r: Some(r),
        q_poly: Some(q.to_string()),
        ..base_parameters(policy)
    };
    Ok(ScenarioReport::new(
        "verify-prints",
        field.modulus(),
        parameters,
        preconditions,
        policy.accept_threshold,
        records,
        assertions,
    ))
}

/// Rank of the interpolation system at `t` random distinct points off `V(q)`
/// with random targets in `F^n`; every trial must reach rank `t n` when
/// `d >= t - 1`.
pub fn interpolation_rank(
    n: usize,
    t: usize,
    d: u32,
    q: &Polynomial,
    policy: &GenericTrialPolicy,
) -> Result<ScenarioReport, ScenarioError> {
    let k = q.ring().arity();
    let field = q.ring().field();
    let within = d as usize + 1 >= t;
    let expected_rank = t * n;
    let expected_solution_dim =
        (binomial((k as u64) + d as u64, d as u64) as i64 - t as i64) * n as i64;
    let records: Vec<TrialRecord> = (0..policy.trials)
        .into_par_iter()
        .map(|i| -> Result<TrialRecord, ScenarioError> {
            let seed = policy.trial_seed(STREAM_INTERP, i);
            let mut rng = policy.trial_rng(STREAM_INTERP, i);
            let mut points: Vec<Vec<u64>> = Vec::with_capacity(t);
            while points.len() < t {
                let y: Vec<u64> = (0..k).map(|_| field.random(&mut rng)).collect();
                if !points.contains(&y) && q.evaluate(&y)? != 0 {
                    points.push(y);
                }
            }
            let targets: Vec<Vec<u64>> = (0..t)
                .map(|_| (0..n).map(|_| rng.gen_range(0..field.modulus())).collect())
                .collect();
            let sys = interpolation_solution_dim(&points, &targets, d, q)?;
            Ok(TrialRecord::Interpolation(InterpolationTrial {
                index: i,
                seed,
                rank: sys.rank,
                solution_dim: sys.solution_dim,
                expected_rank,
                expected_solution_dim,
                consistent: sys.consistent,
                success: sys.rank == expected_rank
                    && sys.solution_dim as i64 == expected_solution_dim,
            }))
        })
        .collect::<Result<_, _>>()?;
    let preconditions = vec![Check::new(
        "degree",
        within,
        format!("d = {d}, t - 1 = {}; no rank law below this degree", t - 1),
    )];
    let assertions = vec![Check::new(
        "unknowns",
        true,
        format!("n C(k+d, d) = {}", family_dimension(d, k, n)),
    )];
    let parameters = Parameters {
        n: Some(n),
        t: Some(t),
        d: Some(d),
        k: Some(k),
        q_poly: Some(q.to_string()),
        ..base_parameters(policy)
    };
    Ok(ScenarioReport::new(
        "interp-rank",
        field.modulus(),
        parameters,
        preconditions,
        policy.trials,
        records,
        assertions,
    ))
}

/// Convenience: `minimal_r` of a hypergraph, if any.
pub fn minimal_r(e: &DefinableHypergraph) -> Result<Option<i64>, ScenarioError> {
    Ok(hypergraph::density_report(e, None)?.minimal_r)
}
