//! Constructible sets: finite unions of cells `V(I) \ V(g_1 ... g_s)`.
//!
//! Every set here is described over the algebraic closure of the working
//! prime field. Dimensions, emptiness and projection closures are computed
//! symbolically and never depend on whether the defining ideals are radical.

use rand::Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::field::PrimeField;
use crate::groebner::{self, buchberger, GroebnerError, Ideal};
use crate::monomial::MonomialOrder;
use crate::poly::{PolyError, Polynomial, Ring};
use crate::sampling::GenericTrialPolicy;
use crate::univariate;

/// Default bound on the number of cells produced by [`complement`].
pub const DEFAULT_CELL_BUDGET: usize = 10_000;

/// Resampling budget when looking for a rational point on a variety.
pub const SAMPLING_ATTEMPTS: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("inequations must be nonzero polynomials")]
    ZeroInequation,
    #[error("projection needs at least one coordinate")]
    EmptyCoords,
    #[error("coordinate {0} is outside the ambient space")]
    CoordOutOfRange(usize),
    #[error("complement would exceed {0} cells")]
    CellBudget(usize),
    #[error("no rational point found on the projection after {0} attempts")]
    SamplingFailed(usize),
    #[error("no value reached the acceptance threshold; votes {0:?}")]
    NoConsensus(Vec<i64>),
}

/// `V(equations) \ V(prod inequations)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    equations: Ideal,
    inequations: Vec<Polynomial>,
}

impl Cell {
    pub fn new(equations: Ideal, inequations: Vec<Polynomial>) -> Result<Cell, GeometryError> {
        let ring = equations.ring().clone();
        let mut kept: Vec<Polynomial> = Vec::new();
        for g in inequations {
            if g.ring() != &ring {
                return Err(PolyError::RingMismatch.into());
            }
            if g.is_zero() {
                return Err(GeometryError::ZeroInequation);
            }
            if !g.is_constant() && !kept.contains(&g) {
                kept.push(g);
            }
        }
        Ok(Cell {
            equations,
            inequations: kept,
        })
    }

    pub fn from_polys(
        ring: &Ring,
        equations: Vec<Polynomial>,
        inequations: Vec<Polynomial>,
    ) -> Result<Cell, GeometryError> {
        Cell::new(Ideal::new(ring, equations)?, inequations)
    }

    /// The whole ambient space.
    pub fn full(ring: &Ring) -> Cell {
        Cell {
            equations: Ideal::zero(ring),
            inequations: Vec::new(),
        }
    }

    pub fn ring(&self) -> &Ring {
        self.equations.ring()
    }

    pub fn equations(&self) -> &Ideal {
        &self.equations
    }

    pub fn inequations(&self) -> &[Polynomial] {
        &self.inequations
    }

    pub fn inequation_product(&self) -> Polynomial {
        self.inequations
            .iter()
            .fold(Polynomial::one(self.ring()), |acc, g| &acc * g)
    }

    /// Obviously empty: a nonzero constant among the equations.
    pub fn is_syntactically_empty(&self) -> bool {
        self.equations
            .generators()
            .iter()
            .any(|g| g.constant_value().is_some_and(|c| c != 0))
    }

    /// Intersection with another cell of the same ring.
    pub fn intersect(&self, other: &Cell) -> Cell {
        let mut eqs: Vec<Polynomial> = self.equations.generators().to_vec();
        for g in other.equations.generators() {
            if !eqs.contains(g) {
                eqs.push(g.clone());
            }
        }
        let mut neqs = self.inequations.clone();
        for g in &other.inequations {
            if !neqs.contains(g) {
                neqs.push(g.clone());
            }
        }
        Cell {
            equations: Ideal::new(self.ring(), eqs).expect("same ring"),
            inequations: neqs,
        }
    }

    /// Whether a point satisfies every equation and no inequation vanishes.
    pub fn contains_point(&self, point: &[u64]) -> Result<bool, PolyError> {
        for g in self.equations.generators() {
            if g.evaluate(point)? != 0 {
                return Ok(false);
            }
        }
        for g in &self.inequations {
            if g.evaluate(point)? == 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The ideal `I + (1 - w * prod g)` in the ring with a fresh last
    /// variable `w`; its variety is isomorphic to the cell.
    fn graph_ideal(&self) -> Ideal {
        let ring = self.ring();
        let n = ring.arity();
        let ext = ring.extended(&["_w"]);
        let ids: Vec<usize> = (0..n).collect();
        let mut gens: Vec<Polynomial> = self
            .equations
            .generators()
            .iter()
            .map(|g| g.map_vars(&ext, &ids))
            .collect();
        let w = Polynomial::var(&ext, n);
        let g = self.inequation_product().map_vars(&ext, &ids);
        gens.push(&Polynomial::one(&ext) - &(&w * &g));
        Ideal::new(&ext, gens).expect("same ring")
    }

    fn map_vars(&self, target: &Ring, var_map: &[usize]) -> Result<Cell, GeometryError> {
        Cell::new(
            self.equations.map_vars(target, var_map),
            self.inequations
                .iter()
                .map(|g| g.map_vars(target, var_map))
                .collect(),
        )
    }
}

/// Finite union of cells in a common ambient ring. No cells means empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructibleSet {
    ring: Ring,
    cells: Vec<Cell>,
}

impl ConstructibleSet {
    pub fn new(ring: &Ring, cells: Vec<Cell>) -> Result<Self, GeometryError> {
        if cells.iter().any(|c| c.ring() != ring) {
            return Err(PolyError::RingMismatch.into());
        }
        Ok(ConstructibleSet {
            ring: ring.clone(),
            cells,
        })
    }

    pub fn empty(ring: &Ring) -> Self {
        ConstructibleSet {
            ring: ring.clone(),
            cells: Vec::new(),
        }
    }

    pub fn full(ring: &Ring) -> Self {
        ConstructibleSet {
            ring: ring.clone(),
            cells: vec![Cell::full(ring)],
        }
    }

    /// The variety `V(I)` as a single cell.
    pub fn variety(ideal: Ideal) -> Self {
        let ring = ideal.ring().clone();
        ConstructibleSet {
            ring,
            cells: vec![Cell {
                equations: ideal,
                inequations: Vec::new(),
            }],
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn arity(&self) -> usize {
        self.ring.arity()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn union(&self, other: &ConstructibleSet) -> Result<Self, GeometryError> {
        if self.ring != other.ring {
            return Err(PolyError::RingMismatch.into());
        }
        let mut cells = self.cells.clone();
        cells.extend(other.cells.iter().cloned());
        Ok(ConstructibleSet {
            ring: self.ring.clone(),
            cells,
        })
    }

    pub fn contains_point(&self, point: &[u64]) -> Result<bool, PolyError> {
        for c in &self.cells {
            if c.contains_point(point)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// The same set with coefficients reinterpreted over another prime.
    /// Exact when all coefficients are small integers.
    pub fn over_field(&self, field: PrimeField) -> ConstructibleSet {
        let target = self.ring.with_field(field);
        let cells = self
            .cells
            .iter()
            .filter_map(|c| {
                let eqs: Vec<Polynomial> = c
                    .equations
                    .generators()
                    .iter()
                    .map(|g| g.reduce_to(&target))
                    .collect();
                let neqs: Vec<Polynomial> =
                    c.inequations.iter().map(|g| g.reduce_to(&target)).collect();
                // an inequation vanishing mod q empties the cell
                if neqs.iter().any(Polynomial::is_zero) {
                    return None;
                }
                Some(Cell::from_polys(&target, eqs, neqs).expect("same ring"))
            })
            .collect();
        ConstructibleSet {
            ring: target,
            cells,
        }
    }

    /// Renames the ambient variables into `target`.
    pub fn map_vars(&self, target: &Ring, var_map: &[usize]) -> Result<Self, GeometryError> {
        let cells = self
            .cells
            .iter()
            .map(|c| c.map_vars(target, var_map))
            .collect::<Result<_, _>>()?;
        ConstructibleSet::new(target, cells)
    }
}

/// Ideal of the Zariski closure of a cell: `I : (prod g)^∞`.
pub fn cell_closure(cell: &Cell) -> Result<Ideal, GeometryError> {
    if cell.inequations.is_empty() {
        return Ok(cell.equations.clone());
    }
    Ok(groebner::saturate(
        &cell.equations,
        &cell.inequation_product(),
    )?)
}

/// Dimension of a single cell, `-1` if empty.
pub fn cell_dimension(cell: &Cell) -> Result<i64, GeometryError> {
    if cell.is_syntactically_empty() {
        return Ok(-1);
    }
    Ok(groebner::ideal_dimension(&cell.graph_ideal())?)
}

/// `dim S`: the maximum over cells of the dimension of the closure; `-1` for
/// the empty set.
pub fn dimension(set: &ConstructibleSet) -> Result<i64, GeometryError> {
    let mut best = -1;
    for c in &set.cells {
        best = best.max(cell_dimension(c)?);
    }
    Ok(best)
}

pub fn is_empty(set: &ConstructibleSet) -> Result<bool, GeometryError> {
    for c in &set.cells {
        if c.is_syntactically_empty() {
            continue;
        }
        if !groebner::is_trivial(&c.graph_ideal())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Closure of a coordinate projection, one ideal per cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Projection {
    /// Ring of the kept coordinates, in increasing index order.
    pub ring: Ring,
    pub coords: Vec<usize>,
    pub ideals: Vec<Ideal>,
    pub cell_dimensions: Vec<i64>,
    pub dimension: i64,
}

impl Projection {
    /// The closure as a constructible set (one inequation-free cell per ideal).
    pub fn to_set(&self) -> ConstructibleSet {
        ConstructibleSet {
            ring: self.ring.clone(),
            cells: self
                .ideals
                .iter()
                .zip(&self.cell_dimensions)
                .filter(|(_, &d)| d >= 0)
                .map(|(i, _)| Cell {
                    equations: i.clone(),
                    inequations: Vec::new(),
                })
                .collect(),
        }
    }
}

fn normalize_coords(set: &ConstructibleSet, coords: &[usize]) -> Result<Vec<usize>, GeometryError> {
    if coords.is_empty() {
        return Err(GeometryError::EmptyCoords);
    }
    if let Some(&bad) = coords.iter().find(|&&c| c >= set.arity()) {
        return Err(GeometryError::CoordOutOfRange(bad));
    }
    let mut kept = coords.to_vec();
    kept.sort_unstable();
    kept.dedup();
    Ok(kept)
}

/// Closure of the projection of one cell onto the (sorted) coordinates.
pub fn cell_projection(cell: &Cell, kept: &[usize]) -> Result<(Ideal, i64), GeometryError> {
    let ring = cell.ring();
    let sub = ring.subring(kept);
    if cell.is_syntactically_empty() {
        return Ok((Ideal::unit(&sub), -1));
    }
    let graph = cell.graph_ideal();
    let n_ext = graph.ring().arity();
    let elim: Vec<usize> = (0..n_ext).filter(|v| !kept.contains(v)).collect();
    let projected = groebner::eliminate(&graph, &elim)?;
    let ids: Vec<usize> = (0..kept.len()).collect();
    let ideal = projected.map_vars(&sub, &ids);
    let dim = groebner::ideal_dimension(&ideal)?;
    Ok((ideal, dim))
}

/// Closure of `proj_coords S`, computed cell by cell by elimination.
pub fn projection_closure(
    set: &ConstructibleSet,
    coords: &[usize],
) -> Result<Projection, GeometryError> {
    let kept = normalize_coords(set, coords)?;
    let ring = set.ring.subring(&kept);
    let mut ideals = Vec::with_capacity(set.cells.len());
    let mut dims = Vec::with_capacity(set.cells.len());
    for c in &set.cells {
        let (i, d) = cell_projection(c, &kept)?;
        ideals.push(i);
        dims.push(d);
    }
    let dimension = dims.iter().copied().max().unwrap_or(-1);
    Ok(Projection {
        ring,
        coords: kept,
        ideals,
        cell_dimensions: dims,
        dimension,
    })
}

pub fn projection_dimension(
    set: &ConstructibleSet,
    coords: &[usize],
) -> Result<i64, GeometryError> {
    Ok(projection_closure(set, coords)?.dimension)
}

/// Complement in the ambient space, with the default cell budget.
pub fn complement(set: &ConstructibleSet) -> Result<ConstructibleSet, GeometryError> {
    complement_with_budget(set, DEFAULT_CELL_BUDGET)
}

/// De Morgan expansion: the complement of `V(I) \ V(g_1 ... g_s)` is
/// `U_f {f != 0} ∪ U_j V(g_j)` over generators `f` of `I`, and the complement of
/// a union is the intersection of the complements.
pub fn complement_with_budget(
    set: &ConstructibleSet,
    budget: usize,
) -> Result<ConstructibleSet, GeometryError> {
    let ring = &set.ring;
    let mut acc: Vec<Cell> = vec![Cell::full(ring)];
    for cell in &set.cells {
        if cell.is_syntactically_empty() {
            continue;
        }
        let mut pieces: Vec<Cell> = Vec::new();
        for f in cell.equations.generators() {
            pieces.push(Cell::new(Ideal::zero(ring), vec![f.clone()])?);
        }
        for g in &cell.inequations {
            pieces.push(Cell::from_polys(ring, vec![g.clone()], Vec::new())?);
        }
        let mut next: Vec<Cell> = Vec::new();
        for a in &acc {
            for b in &pieces {
                let c = a.intersect(b);
                if c.is_syntactically_empty() || next.contains(&c) {
                    continue;
                }
                next.push(c);
                if next.len() > budget {
                    return Err(GeometryError::CellBudget(budget));
                }
            }
        }
        acc = next;
        if acc.is_empty() {
            break;
        }
    }
    Ok(ConstructibleSet {
        ring: ring.clone(),
        cells: acc,
    })
}

/// Fiber over a point of the first `split` coordinates, as a set in the
/// remaining coordinates.
pub fn fiber(
    set: &ConstructibleSet,
    split: usize,
    point: &[u64],
) -> Result<ConstructibleSet, GeometryError> {
    if point.len() != split || split > set.arity() {
        return Err(PolyError::ArityMismatch {
            expected: split,
            got: point.len(),
        }
        .into());
    }
    let n = set.arity();
    let rest: Vec<usize> = (split..n).collect();
    let target = set.ring.subring(&rest);
    let images: Vec<Polynomial> = (0..n)
        .map(|i| {
            if i < split {
                Polynomial::constant(&target, point[i])
            } else {
                Polynomial::var(&target, i - split)
            }
        })
        .collect();
    let mut cells = Vec::new();
    for c in &set.cells {
        let eqs = c
            .equations
            .generators()
            .iter()
            .map(|g| g.substitute(&target, &images))
            .collect::<Result<Vec<_>, _>>()?;
        let neqs = c
            .inequations
            .iter()
            .map(|g| g.substitute(&target, &images))
            .collect::<Result<Vec<_>, _>>()?;
        if neqs.iter().any(Polynomial::is_zero) {
            continue;
        }
        let cell = Cell::from_polys(&target, eqs, neqs)?;
        if !cell.is_syntactically_empty() {
            cells.push(cell);
        }
    }
    Ok(ConstructibleSet {
        ring: target,
        cells,
    })
}

/// Outcome of a sampled genericity experiment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericOutcome {
    pub value: i64,
    pub votes: Vec<i64>,
}

/// Fiber dimension over a generic point of `proj_1 S` (first `split`
/// coordinates), decided by majority vote under `policy`.
///
/// Points are drawn from the closure of the highest-dimensional cell
/// projection by slicing with random affine hyperplanes.
pub fn generic_fiber_dimension(
    set: &ConstructibleSet,
    split: usize,
    policy: &GenericTrialPolicy,
) -> Result<GenericOutcome, GeometryError> {
    let coords: Vec<usize> = (0..split).collect();
    if split == 0 {
        let d = dimension(set)?;
        return Ok(GenericOutcome {
            value: d,
            votes: vec![d; policy.trials],
        });
    }
    let proj = projection_closure(set, &coords)?;
    if proj.dimension < 0 {
        return Ok(GenericOutcome {
            value: -1,
            votes: vec![-1; policy.trials],
        });
    }
    let best = proj
        .cell_dimensions
        .iter()
        .position(|&d| d == proj.dimension)
        .unwrap();
    let target = &proj.ideals[best];
    let votes: Vec<Result<i64, GeometryError>> = (0..policy.trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = policy.trial_rng(0xF1BE, t);
            let point = sample_point(target, proj.dimension, &mut rng)?;
            dimension(&fiber(set, split, &point)?)
        })
        .collect();
    let votes: Vec<i64> = votes.into_iter().collect::<Result<_, _>>()?;
    match policy.majority(&votes) {
        Some(value) => Ok(GenericOutcome { value, votes }),
        None => Err(GeometryError::NoConsensus(votes)),
    }
}

/// A random `F_p`-point of `V(ideal)`, where `dim` is the dimension of the
/// variety: slice with `dim` random affine hyperplanes and solve the
/// zero-dimensional system variable by variable.
pub fn sample_point<R: Rng + ?Sized>(
    ideal: &Ideal,
    dim: i64,
    rng: &mut R,
) -> Result<Vec<u64>, GeometryError> {
    let ring = ideal.ring();
    let field = ring.field();
    let n = ring.arity();
    for _ in 0..SAMPLING_ATTEMPTS {
        let mut gens = ideal.generators().to_vec();
        for _ in 0..dim.max(0) {
            let mut h = Polynomial::constant(ring, field.random(rng));
            for v in 0..n {
                h = &h + &Polynomial::var(ring, v).scale(field.random(rng));
            }
            gens.push(h);
        }
        let sliced = Ideal::new(ring, gens)?;
        if let Some(pt) = solve_zero_dimensional(&sliced, rng)? {
            return Ok(pt);
        }
    }
    Err(GeometryError::SamplingFailed(SAMPLING_ATTEMPTS))
}

/// Some `F_p`-rational solution of a zero-dimensional system, if one is found.
pub fn solve_zero_dimensional<R: Rng + ?Sized>(
    ideal: &Ideal,
    rng: &mut R,
) -> Result<Option<Vec<u64>>, GeometryError> {
    let ring = ideal.ring();
    let n = ring.arity();
    let gb = buchberger(ideal, MonomialOrder::GrevLex)?;
    if gb.is_trivial() || gb.dimension() != 0 {
        return Ok(None);
    }
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    // eliminant in the last variable
    let uni = groebner::eliminate(&gb.ideal(), &(0..n - 1).collect::<Vec<_>>())?;
    let uni_gb = buchberger(&uni, MonomialOrder::GrevLex)?;
    let Some(h) = uni_gb.basis().first() else {
        return Ok(None);
    };
    let deg = h.degree().unwrap_or(0) as usize;
    let mut dense = vec![0u64; deg + 1];
    for (m, c) in h.terms() {
        dense[m.exponent(0) as usize] = *c;
    }
    let Some(mut roots) = univariate::roots(&dense, ring.field(), rng) else {
        return Ok(None);
    };
    // random order so repeated calls explore different branches
    for i in (1..roots.len()).rev() {
        roots.swap(i, rng.gen_range(0..=i));
    }
    let sub = ring.subring(&(0..n - 1).collect::<Vec<_>>());
    for r in roots.into_iter().take(4) {
        let images: Vec<Polynomial> = (0..n)
            .map(|i| {
                if i + 1 < n {
                    Polynomial::var(&sub, i)
                } else {
                    Polynomial::constant(&sub, r)
                }
            })
            .collect();
        let reduced = gb
            .basis()
            .iter()
            .map(|g| g.substitute(&sub, &images))
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(mut pt) = solve_zero_dimensional(&Ideal::new(&sub, reduced)?, rng)? {
            pt.push(r);
            return Ok(Some(pt));
        }
    }
    Ok(None)
}
