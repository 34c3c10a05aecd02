//! Definable hypergraphs `E ⊆ (F^n)^t`: almost-density, injectivity,
//! induced subhypergraphs and independent-set witnesses.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::field::PrimeField;
use crate::geometry::{self, Cell, ConstructibleSet, GeometryError};
use crate::groebner::Ideal;
use crate::maps::{compose_affine, AffineMap, MapError, RationalMap};
use crate::oracle::{self, OracleError};
use crate::poly::{substitute_rational, BlockMap, PolyError, Polynomial, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("ambient arity {got} is not t*n = {expected}")]
    Arity { expected: usize, got: usize },
    #[error("map target arity {got} does not match vertex dimension {expected}")]
    MapArity { expected: usize, got: usize },
    #[error("at most t - 1 = {max} blocks can be substituted, got {got}")]
    TooManyPins { max: usize, got: usize },
}

impl From<PolyError> for HypergraphError {
    fn from(e: PolyError) -> Self {
        HypergraphError::Geometry(e.into())
    }
}

/// Variables `x{i}_{j}` for block `i ∈ [t]`, coordinate `j ∈ [n]`.
pub fn hypergraph_ring(n: usize, t: usize, field: PrimeField) -> Ring {
    Ring::new(
        (1..=t).flat_map(|i| (1..=n).map(move |j| format!("x{i}_{j}"))),
        field,
    )
}

/// The vertex space `F^n` with variables `v1, ..., vn`.
pub fn vertex_ring(n: usize, field: PrimeField) -> Ring {
    Ring::numbered("v", n, field)
}

/// Variable indices of block `i` (0-based).
pub fn block(n: usize, i: usize) -> Vec<usize> {
    (i * n..(i + 1) * n).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefinableHypergraph {
    n: usize,
    t: usize,
    set: ConstructibleSet,
    components_asserted: bool,
}

impl DefinableHypergraph {
    pub fn new(n: usize, t: usize, set: ConstructibleSet) -> Result<Self, HypergraphError> {
        if set.arity() != n * t {
            return Err(HypergraphError::Arity {
                expected: n * t,
                got: set.arity(),
            });
        }
        Ok(DefinableHypergraph {
            n,
            t,
            set,
            components_asserted: false,
        })
    }

    /// `(F^n)^t` as a single cell.
    pub fn full(n: usize, t: usize, field: PrimeField) -> Self {
        DefinableHypergraph {
            n,
            t,
            set: ConstructibleSet::full(&hypergraph_ring(n, t, field)),
            components_asserted: true,
        }
    }

    /// Marks the cells as the user-asserted irreducible components.
    pub fn with_components_asserted(mut self, asserted: bool) -> Self {
        self.components_asserted = asserted;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn set(&self) -> &ConstructibleSet {
        &self.set
    }

    pub fn ring(&self) -> &Ring {
        self.set.ring()
    }

    pub fn field(&self) -> PrimeField {
        self.ring().field()
    }

    pub fn components_asserted(&self) -> bool {
        self.components_asserted
    }

    pub fn over_field(&self, field: PrimeField) -> Self {
        DefinableHypergraph {
            set: self.set.over_field(field),
            ..self.clone()
        }
    }

    /// Coordinates of the blocks in `subset` (0-based block indices).
    pub fn coords(&self, subset: &[usize]) -> Vec<usize> {
        subset.iter().flat_map(|&i| block(self.n, i)).collect()
    }

    pub fn dimension(&self) -> Result<i64, HypergraphError> {
        Ok(geometry::dimension(&self.set)?)
    }
}

/// Projection data for one nonempty `S ⊆ [t]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubsetDensity {
    /// 1-based block indices.
    pub subset: Vec<usize>,
    pub dim: i64,
    /// `|S| n - (|S| - 1) r`, when `r` was given.
    pub threshold: Option<i64>,
    pub passes: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DensityReport {
    pub prime: u64,
    pub n: usize,
    pub t: usize,
    pub dim: i64,
    pub r: Option<i64>,
    pub subsets: Vec<SubsetDensity>,
    /// `None` when some single-block projection has dimension `< n`.
    pub minimal_r: Option<i64>,
    pub dense: Option<bool>,
    pub injective: bool,
}

impl DensityReport {
    pub fn dims(&self) -> impl Iterator<Item = (&[usize], i64)> {
        self.subsets.iter().map(|s| (s.subset.as_slice(), s.dim))
    }

    /// Whether the stored dimensions satisfy every `S`-constraint at `r`.
    pub fn satisfies(&self, r: i64) -> bool {
        self.subsets
            .iter()
            .all(|s| s.dim >= density_threshold(s.subset.len(), self.n, r))
    }
}

/// `|S| n - (|S| - 1) r`.
pub fn density_threshold(size: usize, n: usize, r: i64) -> i64 {
    (size * n) as i64 - (size as i64 - 1) * r
}

/// Smallest `r >= 0` meeting every constraint, from `(|S|, dim proj_S)` pairs.
pub fn minimal_r_from_dims(n: usize, dims: &[(usize, i64)]) -> Option<i64> {
    if dims.iter().any(|&(size, d)| size == 1 && d < n as i64) {
        return None;
    }
    let mut r = 0i64;
    for &(size, d) in dims.iter().filter(|(s, _)| *s >= 2) {
        let need = (size * n) as i64 - d;
        let denom = size as i64 - 1;
        r = r.max(need.div_euclid(denom) + i64::from(need.rem_euclid(denom) != 0));
    }
    Some(r)
}

/// Nonempty subsets of `0..t`, by size and then lexicographically.
pub fn nonempty_subsets(t: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (1u32..(1 << t))
        .map(|mask| (0..t).filter(|&i| mask & (1 << i) != 0).collect())
        .collect();
    out.sort_by(|a: &Vec<usize>, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

pub fn density_report(
    e: &DefinableHypergraph,
    r: Option<i64>,
) -> Result<DensityReport, HypergraphError> {
    let subsets = nonempty_subsets(e.t);
    let dims: Vec<i64> = subsets
        .par_iter()
        .map(|s| geometry::projection_dimension(&e.set, &e.coords(s)))
        .collect::<Result<_, _>>()?;
    let pairs: Vec<(usize, i64)> = subsets
        .iter()
        .map(Vec::len)
        .zip(dims.iter().copied())
        .collect();
    let minimal_r = minimal_r_from_dims(e.n, &pairs);
    let rows: Vec<SubsetDensity> = subsets
        .iter()
        .zip(&dims)
        .map(|(s, &dim)| {
            let threshold = r.map(|r| density_threshold(s.len(), e.n, r));
            SubsetDensity {
                subset: s.iter().map(|i| i + 1).collect(),
                dim,
                threshold,
                passes: threshold.map(|th| dim >= th),
            }
        })
        .collect();
    let dense = r.map(|_| rows.iter().all(|s| s.passes == Some(true)));
    let dim = dims.last().copied().unwrap_or(-1);
    Ok(DensityReport {
        prime: e.field().modulus(),
        n: e.n,
        t: e.t,
        dim,
        r,
        subsets: rows,
        minimal_r,
        dense,
        injective: is_injective(e)?,
    })
}

/// Whether every edge has pairwise distinct vertices.
pub fn is_injective(e: &DefinableHypergraph) -> Result<bool, HypergraphError> {
    let ring = e.ring();
    for cell in e.set.cells() {
        for i in 0..e.t {
            for j in i + 1..e.t {
                let mut gens = cell.equations().generators().to_vec();
                for c in 0..e.n {
                    gens.push(
                        &Polynomial::var(ring, i * e.n + c) - &Polynomial::var(ring, j * e.n + c),
                    );
                }
                let diagonal = Cell::new(Ideal::new(ring, gens)?, cell.inequations().to_vec())?;
                let piece = ConstructibleSet::new(ring, vec![diagonal])?;
                if !geometry::is_empty(&piece)? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `E[f] = {(y_1, ..., y_t) : q(y_i) != 0, (f(y_1), ..., f(y_t)) ∈ E}`.
pub fn induce(
    e: &DefinableHypergraph,
    f: &RationalMap,
) -> Result<DefinableHypergraph, HypergraphError> {
    if f.n() != e.n {
        return Err(HypergraphError::MapArity {
            expected: e.n,
            got: f.n(),
        });
    }
    let k = f.k();
    let target = hypergraph_ring(k, e.t, e.field());
    let blocks: Vec<BlockMap> = (0..e.t)
        .map(|i| f.block_map(&target, block(e.n, i), &block(k, i)))
        .collect();
    let domain: Vec<Polynomial> = (0..e.t)
        .map(|i| f.denominator().map_vars(&target, &block(k, i)))
        .collect();
    let cells = pull_back_cells(&e.set, &target, &blocks, &domain)?;
    Ok(DefinableHypergraph {
        n: k,
        t: e.t,
        set: ConstructibleSet::new(&target, cells)?,
        components_asserted: false,
    })
}

pub(crate) fn pull_back_cells(
    set: &ConstructibleSet,
    target: &Ring,
    blocks: &[BlockMap],
    domain: &[Polynomial],
) -> Result<Vec<Cell>, HypergraphError> {
    let mut cells = Vec::new();
    for cell in set.cells() {
        let eqs = cell
            .equations()
            .generators()
            .iter()
            .map(|g| substitute_rational(g, target, blocks))
            .collect::<Result<Vec<_>, _>>()?;
        let mut neqs = cell
            .inequations()
            .iter()
            .map(|g| substitute_rational(g, target, blocks))
            .collect::<Result<Vec<_>, _>>()?;
        if neqs.iter().any(Polynomial::is_zero) {
            continue;
        }
        neqs.extend(domain.iter().cloned());
        let cell = Cell::from_polys(target, eqs, neqs)?;
        if !cell.is_syntactically_empty() {
            cells.push(cell);
        }
    }
    Ok(cells)
}

/// Closure of `E(f; ℓ_1, ..., ℓ_s)`: tuples `(x_1, ..., x_{t-s})` such that
/// `((f∘ℓ_1)(z_1), ..., (f∘ℓ_s)(z_s), x_1, ..., x_{t-s}) ∈ E` for some `z_i`.
pub fn partial_induce(
    e: &DefinableHypergraph,
    f: &RationalMap,
    pins: &[AffineMap],
) -> Result<DefinableHypergraph, HypergraphError> {
    let s = pins.len();
    if s + 1 > e.t {
        return Err(HypergraphError::TooManyPins {
            max: e.t - 1,
            got: s,
        });
    }
    if f.n() != e.n {
        return Err(HypergraphError::MapArity {
            expected: e.n,
            got: f.n(),
        });
    }
    if s == 0 {
        return Ok(e.clone());
    }
    let field = e.field();
    let composites = pins
        .iter()
        .map(|l| compose_affine(f, l))
        .collect::<Result<Vec<_>, _>>()?;
    let mut names: Vec<String> = Vec::new();
    let mut z_blocks: Vec<Vec<usize>> = Vec::new();
    for (i, l) in pins.iter().enumerate() {
        z_blocks.push((names.len()..names.len() + l.r()).collect());
        names.extend((1..=l.r()).map(|j| format!("z{}_{j}", i + 1)));
    }
    let offset = names.len();
    let rest = e.t - s;
    names.extend(hypergraph_ring(e.n, rest, field).vars().iter().cloned());
    let ext = Ring::new(names, field);

    let mut blocks: Vec<BlockMap> = composites
        .iter()
        .enumerate()
        .map(|(i, g)| g.block_map(&ext, block(e.n, i), &z_blocks[i]))
        .collect();
    for i in 0..rest {
        let targets: Vec<usize> = block(e.n, i).iter().map(|v| v + offset).collect();
        blocks.push(BlockMap::rename(&ext, block(e.n, s + i), &targets));
    }
    let domain: Vec<Polynomial> = composites
        .iter()
        .zip(&z_blocks)
        .map(|(g, zb)| g.denominator().map_vars(&ext, zb))
        .collect();
    let cells = pull_back_cells(&e.set, &ext, &blocks, &domain)?;
    let lifted = ConstructibleSet::new(&ext, cells)?;
    let kept: Vec<usize> = (offset..ext.arity()).collect();
    let closure = geometry::projection_closure(&lifted, &kept)?.to_set();
    Ok(DefinableHypergraph {
        n: e.n,
        t: rest,
        set: closure,
        components_asserted: false,
    })
}

/// Closure of `{y ∈ F^k : ∃ z_i, (ℓ_1(z_1), ..., ℓ_{t-1}(z_{t-1}), y) ∈ E[f]}`.
pub fn print_set(
    e: &DefinableHypergraph,
    f: &RationalMap,
    pins: &[AffineMap],
) -> Result<DefinableHypergraph, HypergraphError> {
    let pulled = induce(e, f)?;
    partial_induce(&pulled, &RationalMap::identity(f.k(), e.field()), pins)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependenceVerdict {
    /// Some cell projects onto every block with full dimension.
    pub criterion_ii_holds: bool,
    pub full_cell: Option<usize>,
    pub has_fulldim_independent_set: bool,
    pub witness: Option<ConstructibleSet>,
    pub witness_dim: Option<i64>,
    /// Per cell: the deficient block chosen (1-based), if any.
    pub deficient_blocks: Vec<Option<usize>>,
    pub decomposition_asserted: bool,
}

impl IndependenceVerdict {
    pub fn label(&self) -> &'static str {
        if self.decomposition_asserted {
            "component-level"
        } else {
            "cell-level, decomposition-unverified"
        }
    }
}

/// Decides whether some cell projects onto every block with dimension `n`;
/// if none does, builds a full-dimensional independent set as the complement
/// of the union of deficient single-block projection closures.
pub fn independence_criterion(
    e: &DefinableHypergraph,
) -> Result<IndependenceVerdict, HypergraphError> {
    let ring = e.ring();
    let vring = vertex_ring(e.n, e.field());
    let ids: Vec<usize> = (0..e.n).collect();
    let mut closures: Vec<Cell> = Vec::new();
    let mut deficient_blocks = Vec::new();
    for (c, cell) in e.set.cells().iter().enumerate() {
        let single = ConstructibleSet::new(ring, vec![cell.clone()])?;
        let mut deficient = None;
        for i in 0..e.t {
            let proj = geometry::projection_closure(&single, &block(e.n, i))?;
            if proj.dimension < e.n as i64 {
                deficient = Some((i, proj.ideals[0].map_vars(&vring, &ids)));
                break;
            }
        }
        match deficient {
            None => {
                return Ok(IndependenceVerdict {
                    criterion_ii_holds: true,
                    full_cell: Some(c),
                    has_fulldim_independent_set: false,
                    witness: None,
                    witness_dim: None,
                    deficient_blocks: Vec::new(),
                    decomposition_asserted: e.components_asserted,
                });
            }
            Some((i, ideal)) => {
                deficient_blocks.push(Some(i + 1));
                closures.push(Cell::new(ideal, Vec::new())?);
            }
        }
    }
    let union = ConstructibleSet::new(&vring, closures)?;
    let witness = geometry::complement(&union)?;
    let witness_dim = geometry::dimension(&witness)?;
    Ok(IndependenceVerdict {
        criterion_ii_holds: false,
        full_cell: None,
        has_fulldim_independent_set: witness_dim == e.n as i64,
        witness: Some(witness),
        witness_dim: Some(witness_dim),
        deficient_blocks,
        decomposition_asserted: e.components_asserted,
    })
}

/// Exhaustive check over `F_q` that no `t`-tuple of points of `w` is an edge.
pub fn witness_is_independent(
    e: &DefinableHypergraph,
    w: &ConstructibleSet,
    q: u64,
) -> Result<bool, HypergraphError> {
    let points = oracle::enumerate_points(w, q)?;
    Ok(oracle::check_edge_free(&points, e, q)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::{sample_affine, sample_map, source_ring};
    use crate::parse::parse_polynomial;

    fn ap3() -> DefinableHypergraph {
        let ring = hypergraph_ring(1, 3, PrimeField::default());
        let p = |s: &str| parse_polynomial(s, &ring).unwrap();
        let cell = Cell::from_polys(
            &ring,
            vec![p("x3_1 - 2*x2_1 + x1_1")],
            vec![p("x1_1 - x2_1")],
        )
        .unwrap();
        DefinableHypergraph::new(1, 3, ConstructibleSet::new(&ring, vec![cell]).unwrap())
            .unwrap()
            .with_components_asserted(true)
    }

    fn axes(n: usize) -> DefinableHypergraph {
        let ring = hypergraph_ring(n, 2, PrimeField::default());
        let zero_block = |i: usize| {
            Cell::from_polys(
                &ring,
                block(n, i)
                    .into_iter()
                    .map(|v| Polynomial::var(&ring, v))
                    .collect(),
                vec![],
            )
            .unwrap()
        };
        DefinableHypergraph::new(
            n,
            2,
            ConstructibleSet::new(&ring, vec![zero_block(1), zero_block(0)]).unwrap(),
        )
        .unwrap()
        .with_components_asserted(true)
    }

    #[test]
    fn minimal_r_arithmetic() {
        assert_eq!(minimal_r_from_dims(1, &[(1, 1), (2, 2), (3, 2)]), Some(1));
        assert_eq!(minimal_r_from_dims(2, &[(1, 1), (2, 4)]), None);
        assert_eq!(minimal_r_from_dims(2, &[(1, 2), (2, 4)]), Some(0));
        assert_eq!(minimal_r_from_dims(3, &[(1, 3), (2, 5)]), Some(1));
    }

    #[test]
    fn subsets_are_ordered() {
        assert_eq!(
            nonempty_subsets(3),
            vec![
                vec![0],
                vec![1],
                vec![2],
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                vec![0, 1, 2]
            ]
        );
    }

    #[test]
    fn full_hypergraph_is_zero_dense() {
        let e = DefinableHypergraph::full(2, 3, PrimeField::default());
        let rep = density_report(&e, Some(0)).unwrap();
        assert_eq!(rep.minimal_r, Some(0));
        assert_eq!(rep.dense, Some(true));
        assert!(!rep.injective);
    }

    #[test]
    fn ap_density() {
        let rep = density_report(&ap3(), None).unwrap();
        assert_eq!(rep.dim, 2);
        assert_eq!(rep.minimal_r, Some(1));
        assert!(rep.injective);
        assert!(rep.satisfies(1));
        assert!(!rep.satisfies(0));
    }

    #[test]
    fn ap_injectivity_depends_on_characteristic() {
        assert!(is_injective(&ap3()).unwrap());
        let two = ap3().over_field(PrimeField::new(2).unwrap());
        assert!(!is_injective(&two).unwrap());
    }

    #[test]
    fn diagonal_is_not_injective() {
        let ring = hypergraph_ring(1, 2, PrimeField::default());
        let cell = Cell::from_polys(
            &ring,
            vec![parse_polynomial("x1_1 - x2_1", &ring).unwrap()],
            vec![],
        )
        .unwrap();
        let e = DefinableHypergraph::new(1, 2, ConstructibleSet::new(&ring, vec![cell]).unwrap())
            .unwrap();
        assert!(!is_injective(&e).unwrap());
    }

    #[test]
    fn identity_induction_keeps_points() {
        let e = ap3();
        let id = RationalMap::identity(1, e.field());
        let pulled = induce(&e, &id).unwrap();
        for pt in [[1, 2, 3], [1, 1, 1], [0, 5, 10], [0, 5, 11]] {
            assert_eq!(
                pulled.set().contains_point(&pt).unwrap(),
                e.set().contains_point(&pt).unwrap()
            );
        }
    }

    #[test]
    fn induced_ap_is_nonempty() {
        let e = ap3();
        let q = Polynomial::one(&source_ring(2, e.field()));
        let f = sample_map(2, 2, 1, &q, 3).unwrap();
        let pulled = induce(&e, &f).unwrap();
        assert_eq!(pulled.n(), 2);
        assert!(!geometry::is_empty(pulled.set()).unwrap());
    }

    #[test]
    fn partial_induce_trivial_cases() {
        let e = ap3();
        let q = Polynomial::one(&source_ring(2, e.field()));
        let f = sample_map(2, 2, 1, &q, 3).unwrap();
        assert_eq!(partial_induce(&e, &f, &[]).unwrap(), e);

        let full = DefinableHypergraph::full(2, 3, e.field());
        let f = sample_map(2, 2, 2, &q, 4).unwrap();
        let pins = [
            sample_affine(1, 2, e.field(), 1),
            sample_affine(1, 2, e.field(), 2),
        ];
        let c = partial_induce(&full, &f, &pins).unwrap();
        assert_eq!(c.t(), 1);
        assert_eq!(c.dimension().unwrap(), 2);
        assert!(matches!(
            partial_induce(
                &full,
                &f,
                &[pins[0].clone(), pins[0].clone(), pins[1].clone()]
            ),
            Err(HypergraphError::TooManyPins { .. })
        ));
    }

    #[test]
    fn ap_prints_are_dense() {
        // k = 2 >= r + 1 with r = 1, d = 2 >= t - 1
        let e = ap3();
        let q = Polynomial::one(&source_ring(2, e.field()));
        let f = sample_map(2, 2, 1, &q, 8).unwrap();
        let pins = [
            sample_affine(1, 2, e.field(), 5),
            sample_affine(1, 2, e.field(), 6),
        ];
        assert_eq!(
            partial_induce(&e, &f, &pins).unwrap().dimension().unwrap(),
            1
        );
        assert_eq!(print_set(&e, &f, &pins).unwrap().dimension().unwrap(), 2);
    }

    #[test]
    fn ap_satisfies_criterion() {
        let v = independence_criterion(&ap3()).unwrap();
        assert!(v.criterion_ii_holds);
        assert!(!v.has_fulldim_independent_set);
        assert!(v.witness.is_none());
    }

    #[test]
    fn axes_have_independent_witness() {
        for n in [1, 2] {
            let e = axes(n);
            let v = independence_criterion(&e).unwrap();
            assert!(!v.criterion_ii_holds);
            assert_eq!(v.witness_dim, Some(n as i64));
            assert!(v.has_fulldim_independent_set);
            assert_eq!(v.label(), "component-level");
            assert!(witness_is_independent(&e, v.witness.as_ref().unwrap(), 5).unwrap());
        }
    }

    #[test]
    fn empty_hypergraph_witness_is_everything() {
        let ring = hypergraph_ring(2, 2, PrimeField::default());
        let e = DefinableHypergraph::new(2, 2, ConstructibleSet::empty(&ring)).unwrap();
        let v = independence_criterion(&e).unwrap();
        assert_eq!(
            v.witness.clone().unwrap(),
            ConstructibleSet::full(&vertex_ring(2, e.field()))
        );
        assert_eq!(v.label(), "cell-level, decomposition-unverified");
    }

    #[test]
    fn full_space_is_not_independent() {
        let e = ap3();
        let w = ConstructibleSet::full(&vertex_ring(1, e.field()));
        assert!(!witness_is_independent(&e, &w, 5).unwrap());
        assert!(witness_is_independent(
            &e,
            &ConstructibleSet::empty(&vertex_ring(1, e.field())),
            5
        )
        .unwrap());
    }
}
