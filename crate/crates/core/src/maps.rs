//! Rational maps with a fixed denominator, affine maps, restriction families
//! and the interpolation system behind injectivity of generic maps.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::field::PrimeField;
use crate::linalg::{self, Matrix};
use crate::monomial::{binomial, monomials_up_to, Monomial};
use crate::poly::{BlockMap, PolyError, Polynomial, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("the denominator is the zero polynomial")]
    ZeroDenominator,
    #[error("numerator {index} has degree {degree} > {bound}")]
    DegreeExceeded {
        index: usize,
        degree: u32,
        bound: u32,
    },
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("the denominator vanishes identically after composition")]
    InvalidComposite,
    #[error("map does not belong to the family (d, k, n, q)")]
    FamilyMismatch,
    #[error("pin {0} must have source arity < k and target arity k")]
    PinArity(usize),
    #[error("points {0} and {1} coincide")]
    RepeatedPoint(usize, usize),
    #[error("the denominator vanishes at point {0}")]
    DenominatorVanishes(usize),
    #[error("a product of {needed} affine forms does not fit degree bound {bound}")]
    PerturbationDegree { needed: usize, bound: u32 },
}

/// The ring `F[y1, ..., yk]` that all maps with source arity `k` live in.
pub fn source_ring(k: usize, field: PrimeField) -> Ring {
    Ring::numbered("y", k, field)
}

/// `y -> (p_1(y), ..., p_n(y)) / q(y)` with `deg p_j <= d`, identified with
/// its coefficient tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMap {
    d: u32,
    q: Polynomial,
    numerators: Vec<Polynomial>,
}

impl RationalMap {
    pub fn new(d: u32, q: Polynomial, numerators: Vec<Polynomial>) -> Result<Self, MapError> {
        if q.is_zero() {
            return Err(MapError::ZeroDenominator);
        }
        for (index, p) in numerators.iter().enumerate() {
            if p.ring() != q.ring() {
                return Err(PolyError::RingMismatch.into());
            }
            let degree = p.degree().unwrap_or(0);
            if degree > d {
                return Err(MapError::DegreeExceeded {
                    index,
                    degree,
                    bound: d,
                });
            }
        }
        Ok(RationalMap { d, q, numerators })
    }

    /// The identity `F^k -> F^k` as an element of `R_1(k, k; 1)`.
    pub fn identity(k: usize, field: PrimeField) -> Self {
        let ring = source_ring(k, field);
        RationalMap {
            d: 1,
            q: Polynomial::one(&ring),
            numerators: (0..k).map(|i| Polynomial::var(&ring, i)).collect(),
        }
    }

    pub fn ring(&self) -> &Ring {
        self.q.ring()
    }

    pub fn k(&self) -> usize {
        self.ring().arity()
    }

    pub fn n(&self) -> usize {
        self.numerators.len()
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.q
    }

    pub fn numerators(&self) -> &[Polynomial] {
        &self.numerators
    }

    /// Coefficients of the numerators over the monomials of degree `<= d`,
    /// numerator by numerator.
    pub fn coefficients(&self) -> Vec<u64> {
        let basis = monomials_up_to(self.k(), self.d);
        self.numerators
            .iter()
            .flat_map(|p| basis.iter().map(move |m| p.coefficient(m)))
            .collect()
    }

    /// `f(y)`, or `None` on the denominator locus.
    pub fn evaluate(&self, y: &[u64]) -> Result<Option<Vec<u64>>, PolyError> {
        let field = self.ring().field();
        let Some(inv) = field.inv(self.q.evaluate(y)?) else {
            return Ok(None);
        };
        let mut out = Vec::with_capacity(self.n());
        for p in &self.numerators {
            out.push(field.mul(p.evaluate(y)?, inv));
        }
        Ok(Some(out))
    }

    /// Substitution data for one block: source variables `vars` are replaced
    /// by this map written in the target variables `target_vars`.
    pub fn block_map(&self, target: &Ring, vars: Vec<usize>, target_vars: &[usize]) -> BlockMap {
        assert_eq!(vars.len(), self.n());
        assert_eq!(target_vars.len(), self.k());
        BlockMap {
            vars,
            numerators: self
                .numerators
                .iter()
                .map(|p| p.map_vars(target, target_vars))
                .collect(),
            denominator: self.q.map_vars(target, target_vars),
        }
    }
}

/// Number of free coefficients of `R_d(k, n; q)`.
pub fn family_dimension(d: u32, k: usize, n: usize) -> usize {
    n * binomial(k as u64 + d as u64, d as u64) as usize
}

/// Uniform random element of `R_d(k, n; q)`, deterministic per seed.
pub fn sample_map(
    d: u32,
    k: usize,
    n: usize,
    q: &Polynomial,
    seed: u64,
) -> Result<RationalMap, MapError> {
    if q.ring().arity() != k {
        return Err(MapError::ArityMismatch {
            expected: k,
            got: q.ring().arity(),
        });
    }
    if q.is_zero() {
        return Err(MapError::ZeroDenominator);
    }
    let ring = q.ring();
    let field = ring.field();
    let basis = monomials_up_to(k, d);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let numerators = (0..n)
        .map(|_| {
            let terms: Vec<(Monomial, u64)> = basis
                .iter()
                .map(|m| (m.clone(), field.random(&mut rng)))
                .collect();
            Polynomial::from_terms(ring, terms)
        })
        .collect();
    RationalMap::new(d, q.clone(), numerators)
}

/// `z -> M z + b` from `F^r` to `F^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMap {
    field: PrimeField,
    r: usize,
    /// `k` rows of length `r`.
    matrix: Vec<Vec<u64>>,
    offset: Vec<u64>,
}

impl AffineMap {
    pub fn new(
        field: PrimeField,
        r: usize,
        matrix: Vec<Vec<u64>>,
        offset: Vec<u64>,
    ) -> Result<Self, MapError> {
        if matrix.len() != offset.len() {
            return Err(MapError::ArityMismatch {
                expected: offset.len(),
                got: matrix.len(),
            });
        }
        if let Some(row) = matrix.iter().find(|row| row.len() != r) {
            return Err(MapError::ArityMismatch {
                expected: r,
                got: row.len(),
            });
        }
        let p = field.modulus();
        Ok(AffineMap {
            field,
            r,
            matrix: matrix
                .into_iter()
                .map(|row| row.into_iter().map(|c| c % p).collect())
                .collect(),
            offset: offset.into_iter().map(|c| c % p).collect(),
        })
    }

    pub fn identity(k: usize, field: PrimeField) -> Self {
        let matrix = (0..k)
            .map(|i| (0..k).map(|j| u64::from(i == j)).collect())
            .collect();
        AffineMap {
            field,
            r: k,
            matrix,
            offset: vec![0; k],
        }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn k(&self) -> usize {
        self.offset.len()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn matrix(&self) -> &[Vec<u64>] {
        &self.matrix
    }

    pub fn offset(&self) -> &[u64] {
        &self.offset
    }

    pub fn num_coefficients(&self) -> usize {
        self.k() * (self.r + 1)
    }

    /// The same linear part with zero offset.
    pub fn through_origin(&self) -> Self {
        AffineMap {
            offset: vec![0; self.k()],
            ..self.clone()
        }
    }

    pub fn apply(&self, z: &[u64]) -> Vec<u64> {
        assert_eq!(z.len(), self.r);
        let f = self.field;
        self.matrix
            .iter()
            .zip(&self.offset)
            .map(|(row, &b)| {
                row.iter()
                    .zip(z)
                    .fold(b, |acc, (&a, &x)| f.add(acc, f.mul(a, x)))
            })
            .collect()
    }

    /// Coordinate functions as affine forms in `ring` (arity `r`).
    pub fn forms(&self, ring: &Ring) -> Vec<Polynomial> {
        assert_eq!(ring.arity(), self.r);
        self.matrix
            .iter()
            .zip(&self.offset)
            .map(|(row, &b)| {
                let mut terms = vec![(Monomial::one(self.r), b)];
                for (j, &a) in row.iter().enumerate() {
                    terms.push((Monomial::var(self.r, j, 1), a));
                }
                Polynomial::from_terms(ring, terms)
            })
            .collect()
    }

    pub fn is_injective(&self) -> bool {
        self.linear_part().rank(self.field) == self.r
    }

    fn linear_part(&self) -> Matrix {
        if self.matrix.is_empty() {
            Matrix::zeros(0, self.r)
        } else {
            Matrix::from_rows(&self.matrix)
        }
    }

    /// This map as an element of `R_1(r, k; 1)`.
    pub fn to_rational(&self) -> RationalMap {
        let ring = source_ring(self.r, self.field);
        RationalMap {
            d: 1,
            q: Polynomial::one(&ring),
            numerators: self.forms(&ring),
        }
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &AffineMap) -> Result<AffineMap, MapError> {
        if inner.k() != self.r {
            return Err(MapError::ArityMismatch {
                expected: self.r,
                got: inner.k(),
            });
        }
        let f = self.field;
        let matrix = self
            .matrix
            .iter()
            .map(|row| {
                (0..inner.r)
                    .map(|c| {
                        row.iter()
                            .zip(&inner.matrix)
                            .fold(0, |acc, (&a, irow)| f.add(acc, f.mul(a, irow[c])))
                    })
                    .collect()
            })
            .collect();
        let offset = self.apply(&inner.offset);
        AffineMap::new(f, inner.r, matrix, offset)
    }
}

/// Uniform random element of `L(r, k)`, deterministic per seed.
pub fn sample_affine(r: usize, k: usize, field: PrimeField, seed: u64) -> AffineMap {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let matrix = (0..k)
        .map(|_| (0..r).map(|_| field.random(&mut rng)).collect())
        .collect();
    let offset = (0..k).map(|_| field.random(&mut rng)).collect();
    AffineMap {
        field,
        r,
        matrix,
        offset,
    }
}

fn composed_numerators(
    f: &RationalMap,
    l: &AffineMap,
) -> Result<(Polynomial, Vec<Polynomial>), MapError> {
    if l.k() != f.k() {
        return Err(MapError::ArityMismatch {
            expected: f.k(),
            got: l.k(),
        });
    }
    let target = source_ring(l.r(), f.ring().field());
    let forms = l.forms(&target);
    let q = f.q.substitute(&target, &forms)?;
    let ps = f
        .numerators
        .iter()
        .map(|p| p.substitute(&target, &forms))
        .collect::<Result<_, _>>()?;
    Ok((q, ps))
}

/// `f ∘ ℓ`; the degree bound of `f` is kept.
pub fn compose_affine(f: &RationalMap, l: &AffineMap) -> Result<RationalMap, MapError> {
    let (q, numerators) = composed_numerators(f, l)?;
    if q.is_zero() {
        return Err(MapError::InvalidComposite);
    }
    RationalMap::new(f.d, q, numerators)
}

/// Maps of `R_d(k, n; q)` agreeing with an anchor on the images of pinned
/// affine maps of lower source arity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionFamily {
    anchor: RationalMap,
    pins: Vec<AffineMap>,
}

impl RestrictionFamily {
    pub fn new(anchor: RationalMap, pins: Vec<AffineMap>) -> Result<Self, MapError> {
        let k = anchor.k();
        if let Some(i) = pins.iter().position(|l| l.k() != k || l.r() >= k) {
            return Err(MapError::PinArity(i));
        }
        Ok(RestrictionFamily { anchor, pins })
    }

    pub fn anchor(&self) -> &RationalMap {
        &self.anchor
    }

    pub fn pins(&self) -> &[AffineMap] {
        &self.pins
    }

    pub fn contains(&self, f: &RationalMap) -> Result<bool, MapError> {
        restriction_contains(self, f)
    }
}

/// Whether `f ∘ ℓ = g ∘ ℓ` coefficientwise for every pin `ℓ`.
pub fn restriction_contains(family: &RestrictionFamily, f: &RationalMap) -> Result<bool, MapError> {
    let g = &family.anchor;
    if f.d != g.d || f.ring() != g.ring() || f.n() != g.n() || f.q != g.q {
        return Err(MapError::FamilyMismatch);
    }
    for l in &family.pins {
        let (_, fl) = composed_numerators(f, l)?;
        let (_, gl) = composed_numerators(g, l)?;
        if fl != gl {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A nonzero affine form vanishing on the image of `l` (which needs `r < k`).
fn vanishing_form(l: &AffineMap, ring: &Ring, seed: u64) -> Polynomial {
    let field = l.field();
    let kernel = l.linear_part().transpose().nullspace(field);
    assert!(!kernel.is_empty(), "image of a pin is a proper subspace");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut a = vec![0u64; l.k()];
    while a.iter().all(|&c| c == 0) {
        for v in &kernel {
            let c = field.random(&mut rng);
            for (ai, &vi) in a.iter_mut().zip(v) {
                *ai = field.add(*ai, field.mul(c, vi));
            }
        }
    }
    let b = a
        .iter()
        .zip(l.offset())
        .fold(0, |acc, (&ai, &oi)| field.add(acc, field.mul(ai, oi)));
    let mut terms = vec![(Monomial::one(l.k()), field.neg(b))];
    for (j, &aj) in a.iter().enumerate() {
        terms.push((Monomial::var(l.k(), j, 1), aj));
    }
    Polynomial::from_terms(ring, terms)
}

/// `g + c · φ_1 ⋯ φ_s` where each affine form `φ_i` vanishes on the image of
/// pin `i` and `c ∈ F^n` is random, so the result stays in the family.
pub fn perturb_within(family: &RestrictionFamily, seed: u64) -> Result<RationalMap, MapError> {
    let g = &family.anchor;
    if family.pins.len() > g.d as usize {
        return Err(MapError::PerturbationDegree {
            needed: family.pins.len(),
            bound: g.d,
        });
    }
    let ring = g.ring();
    let field = ring.field();
    let mut product = Polynomial::one(ring);
    for (i, l) in family.pins.iter().enumerate() {
        product = &product * &vanishing_form(l, ring, seed.wrapping_add(i as u64));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5EED);
    let numerators = g
        .numerators
        .iter()
        .map(|p| p + &product.scale(field.random_nonzero(&mut rng)))
        .collect();
    RationalMap::new(g.d, g.q.clone(), numerators)
}

/// The linear system `p_j(y_i) = q(y_i) x_i(j)` in the numerator
/// coefficients, with its exact rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterpolationSystem {
    pub matrix: Matrix,
    pub rhs: Vec<u64>,
    pub rank: usize,
    pub unknowns: usize,
    pub solution_dim: usize,
    pub consistent: bool,
    /// `d >= t - 1`, where full rank `t n` is guaranteed.
    pub within_hypothesis: bool,
}

pub fn interpolation_solution_dim(
    points: &[Vec<u64>],
    targets: &[Vec<u64>],
    d: u32,
    q: &Polynomial,
) -> Result<InterpolationSystem, MapError> {
    let k = q.ring().arity();
    let field = q.ring().field();
    if points.len() != targets.len() {
        return Err(MapError::ArityMismatch {
            expected: points.len(),
            got: targets.len(),
        });
    }
    let n = targets.first().map_or(0, Vec::len);
    for p in points {
        if p.len() != k {
            return Err(MapError::ArityMismatch {
                expected: k,
                got: p.len(),
            });
        }
    }
    for x in targets {
        if x.len() != n {
            return Err(MapError::ArityMismatch {
                expected: n,
                got: x.len(),
            });
        }
    }
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if points[i] == points[j] {
                return Err(MapError::RepeatedPoint(i, j));
            }
        }
    }
    let qs: Vec<u64> = points
        .iter()
        .map(|y| q.evaluate(y))
        .collect::<Result<_, _>>()?;
    if let Some(i) = qs.iter().position(|&v| v == 0) {
        return Err(MapError::DenominatorVanishes(i));
    }

    let basis = monomials_up_to(k, d);
    let m = basis.len();
    let t = points.len();
    let unknowns = n * m;
    let mut matrix = Matrix::zeros(t * n, unknowns);
    let mut rhs = vec![0; t * n];
    let mono_ring = Ring::numbered("y", k, field);
    for (i, y) in points.iter().enumerate() {
        let values: Vec<u64> = basis
            .iter()
            .map(|mono| Polynomial::from_terms(&mono_ring, [(mono.clone(), 1)]).evaluate(y))
            .collect::<Result<_, _>>()?;
        for (j, &target) in targets[i].iter().enumerate() {
            let row = i * n + j;
            for (c, &v) in values.iter().enumerate() {
                matrix.set(row, j * m + c, v);
            }
            rhs[row] = field.mul(qs[i], target);
        }
    }
    let rank = matrix.rank(field);
    let consistent = linalg::is_consistent(&matrix, &rhs, field);
    Ok(InterpolationSystem {
        matrix,
        rhs,
        rank,
        unknowns,
        solution_dim: unknowns - rank,
        consistent,
        within_hypothesis: d as usize + 1 >= t,
    })
}
