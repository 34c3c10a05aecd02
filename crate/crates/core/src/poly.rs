//! Sparse multivariate polynomials over a prime field.
//!
//! A [`Polynomial`] is a list of `(monomial, coefficient)` pairs with nonzero
//! coefficients, kept sorted in descending graded reverse lexicographic order.
//! That sorted list is the canonical form, so structural equality is equality
//! of polynomials.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::field::PrimeField;
use crate::monomial::{monomials_up_to, Exponent, Monomial, MonomialOrder};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("expected {expected} values, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("denominator is identically zero")]
    ZeroDenominator,
    #[error("substitution blocks do not match: {0}")]
    BlockMismatch(String),
}

struct RingInner {
    vars: Vec<String>,
    field: PrimeField,
}

/// Polynomial ring `F_p[vars]`. Cheap to clone.
#[derive(Clone)]
pub struct Ring(Arc<RingInner>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.field == other.0.field && self.0.vars == other.0.vars)
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "F_{}[{}]",
            self.0.field.modulus(),
            self.0.vars.join(", ")
        )
    }
}

impl Ring {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = S>, field: PrimeField) -> Ring {
        Ring(Arc::new(RingInner {
            vars: vars.into_iter().map(Into::into).collect(),
            field,
        }))
    }

    /// Ring with variables `prefix1, ..., prefix{arity}`.
    pub fn numbered(prefix: &str, arity: usize, field: PrimeField) -> Ring {
        Ring::new((1..=arity).map(|i| format!("{prefix}{i}")), field)
    }

    #[inline]
    pub fn arity(&self) -> usize {
        self.0.vars.len()
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.0.field
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    /// Same variables over another prime field.
    pub fn with_field(&self, field: PrimeField) -> Ring {
        Ring::new(self.0.vars.iter().cloned(), field)
    }

    /// Ring on a subset of the variables, in the given order.
    pub fn subring(&self, keep: &[usize]) -> Ring {
        Ring::new(keep.iter().map(|&i| self.0.vars[i].clone()), self.0.field)
    }

    /// This ring with extra variables appended. Names clashing with existing
    /// ones get primes appended.
    pub fn extended<S: AsRef<str>>(&self, extra: &[S]) -> Ring {
        let mut vars = self.0.vars.clone();
        for name in extra {
            let mut name = name.as_ref().to_string();
            while vars.contains(&name) {
                name.push('\'');
            }
            vars.push(name);
        }
        Ring::new(vars, self.0.field)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, u64)>,
}

fn sort_desc(terms: &mut [(Monomial, u64)]) {
    terms.sort_by(|a, b| MonomialOrder::GrevLex.cmp(&b.0, &a.0));
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring, c: u64) -> Self {
        let c = c % ring.field().modulus();
        let terms = if c == 0 {
            Vec::new()
        } else {
            vec![(Monomial::one(ring.arity()), c)]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn from_i64(ring: &Ring, c: i64) -> Self {
        Polynomial::constant(ring, ring.field().from_i64(c))
    }

    pub fn one(ring: &Ring) -> Self {
        Polynomial::constant(ring, 1)
    }

    pub fn var(ring: &Ring, index: usize) -> Self {
        assert!(index < ring.arity(), "variable index out of range");
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var(ring.arity(), index, 1), 1)],
        }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates and
    /// dropping zeros.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, u64)>) -> Self {
        let field = ring.field();
        let mut acc: HashMap<Monomial, u64> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.arity(), ring.arity(), "monomial arity mismatch");
            let e = acc.entry(m).or_insert(0);
            *e = field.add(*e, c % field.modulus());
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        sort_desc(&mut terms);
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Terms already sorted descending in grevlex with nonzero coefficients.
    pub(crate) fn from_sorted_terms(ring: &Ring, terms: Vec<(Monomial, u64)>) -> Self {
        debug_assert!(terms.iter().all(|(_, c)| *c != 0));
        debug_assert!(terms
            .windows(2)
            .all(|w| MonomialOrder::GrevLex.cmp(&w[0].0, &w[1].0).is_gt()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn field(&self) -> PrimeField {
        self.ring.field()
    }

    pub fn terms(&self) -> &[(Monomial, u64)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Value of a constant polynomial (zero included).
    pub fn constant_value(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [(m, c)] if m.is_one() => Some(*c),
            _ => None,
        }
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Total degree in a subset of the variables (0 for the zero polynomial).
    pub fn degree_in(&self, vars: &[usize]) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.degree_in(vars))
            .max()
            .unwrap_or(0)
    }

    /// Variables that occur in some term.
    pub fn support(&self) -> Vec<usize> {
        let mut seen = vec![false; self.ring.arity()];
        for (m, _) in &self.terms {
            for v in m.support() {
                seen[v] = true;
            }
        }
        (0..seen.len()).filter(|&i| seen[i]).collect()
    }

    /// Leading term under `order`.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, u64)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.0, &b.0))
            .map(|(m, c)| (m, *c))
    }

    pub fn coefficient(&self, m: &Monomial) -> u64 {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| *c)
            .unwrap_or(0)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let field = self.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        let fix = |c: u64| if negate { field.neg(c) } else { c };
        while i < a.len() && j < b.len() {
            match MonomialOrder::GrevLex.cmp(&a[i].0, &b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((b[j].0.clone(), fix(b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = field.add(a[i].1, fix(b[j].1));
                    if c != 0 {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), fix(*c))));
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let field = self.field();
        let mut acc: HashMap<Monomial, u64> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let e = acc.entry(ma.mul(mb)).or_insert(0);
                *e = field.add(*e, field.mul(*ca, *cb));
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        sort_desc(&mut terms);
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn scale(&self, c: u64) -> Polynomial {
        let field = self.field();
        let c = c % field.modulus();
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), field.mul(*a, c)))
                .collect(),
        }
    }

    /// Multiplies by a monomial and a scalar.
    pub fn mul_term(&self, m: &Monomial, c: u64) -> Polynomial {
        let field = self.field();
        if c.is_multiple_of(field.modulus()) {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), field.mul(*a, c)))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Scales so the leading coefficient (under `order`) is 1.
    pub fn monic(&self, order: MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(self.field().inv(c).expect("nonzero")),
        }
    }

    /// Exact evaluation at a point, using per-variable power tables.
    pub fn evaluate(&self, point: &[u64]) -> Result<u64, PolyError> {
        if point.len() != self.ring.arity() {
            return Err(PolyError::ArityMismatch {
                expected: self.ring.arity(),
                got: point.len(),
            });
        }
        let field = self.field();
        let mut max_exp = vec![0 as Exponent; point.len()];
        for (m, _) in &self.terms {
            for (slot, &e) in max_exp.iter_mut().zip(m.exponents()) {
                *slot = (*slot).max(e);
            }
        }
        let powers: Vec<Vec<u64>> = point
            .iter()
            .zip(&max_exp)
            .map(|(&x, &top)| {
                let x = x % field.modulus();
                let mut row = Vec::with_capacity(top as usize + 1);
                let mut acc = 1;
                row.push(acc);
                for _ in 0..top {
                    acc = field.mul(acc, x);
                    row.push(acc);
                }
                row
            })
            .collect();
        let mut total = 0;
        for (m, c) in &self.terms {
            let mut v = *c;
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    v = field.mul(v, powers[i][e as usize]);
                }
            }
            total = field.add(total, v);
        }
        Ok(total)
    }

    /// Composition: replaces variable `i` by `images[i]`, a polynomial in `target`.
    pub fn substitute(
        &self,
        target: &Ring,
        images: &[Polynomial],
    ) -> Result<Polynomial, PolyError> {
        if images.len() != self.ring.arity() {
            return Err(PolyError::ArityMismatch {
                expected: self.ring.arity(),
                got: images.len(),
            });
        }
        if images.iter().any(|p| p.ring != *target) || target.field() != self.field() {
            return Err(PolyError::RingMismatch);
        }
        let mut cache = PowerCache::new(images);
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, *c);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term = &term * cache.power(i, e as u32);
                }
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Renames variables into `target`: variable `i` becomes `var_map[i]`.
    pub fn map_vars(&self, target: &Ring, var_map: &[usize]) -> Polynomial {
        assert_eq!(var_map.len(), self.ring.arity());
        assert_eq!(target.field(), self.field());
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = vec![0 as Exponent; target.arity()];
            for (i, &e) in m.exponents().iter().enumerate() {
                exps[var_map[i]] += e;
            }
            (Monomial::from_exponents(&exps), *c)
        });
        Polynomial::from_terms(target, terms)
    }

    /// Reinterprets the coefficients over another prime via their symmetric
    /// integer lift. Exact for polynomials whose integer coefficients have
    /// absolute value below `p / 2`.
    pub fn reduce_to(&self, target: &Ring) -> Polynomial {
        assert_eq!(target.vars(), self.ring.vars());
        let src = self.field();
        let dst = target.field();
        Polynomial::from_terms(
            target,
            self.terms
                .iter()
                .map(|(m, c)| (m.clone(), dst.from_i64(src.to_i64(*c)))),
        )
    }
}

struct PowerCache<'a> {
    images: &'a [Polynomial],
    powers: Vec<Vec<Polynomial>>,
}

impl<'a> PowerCache<'a> {
    fn new(images: &'a [Polynomial]) -> Self {
        PowerCache {
            images,
            powers: images
                .iter()
                .map(|p| vec![Polynomial::one(p.ring())])
                .collect(),
        }
    }

    fn power(&mut self, i: usize, e: u32) -> &Polynomial {
        while self.powers[i].len() <= e as usize {
            let next = self.powers[i].last().unwrap() * &self.images[i];
            self.powers[i].push(next);
        }
        &self.powers[i][e as usize]
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs)
                    .expect("polynomials from different rings")
            }
        }
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(self.field().modulus() - 1)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.field();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let signed = field.to_i64(*c);
            let (neg, abs) = (signed < 0, signed.unsigned_abs());
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.vars()[i].clone()),
                    _ => factors.push(format!("{}^{}", self.ring.vars()[i], e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs == 1 {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Dense random polynomial: every monomial of total degree `<= degree` gets an
/// independent uniform coefficient. Deterministic in `(seed, ring, degree)`.
pub fn random_polynomial(ring: &Ring, degree: u32, seed: u64) -> Polynomial {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_polynomial_with(ring, degree, &mut rng)
}

pub fn random_polynomial_with<R: Rng + ?Sized>(
    ring: &Ring,
    degree: u32,
    rng: &mut R,
) -> Polynomial {
    let field = ring.field();
    let terms: Vec<_> = monomials_up_to(ring.arity(), degree)
        .into_iter()
        .map(|m| (m, field.random(rng)))
        .collect();
    Polynomial::from_terms(ring, terms)
}

/// One block of a rational substitution.
///
/// The source variables `vars` are replaced by `numerators[j] / denominator`,
/// all of which live in the target ring.
#[derive(Debug, Clone)]
pub struct BlockMap {
    pub vars: Vec<usize>,
    pub numerators: Vec<Polynomial>,
    pub denominator: Polynomial,
}

impl BlockMap {
    /// Identity-style block: source variables map to target variables.
    pub fn rename(target: &Ring, vars: Vec<usize>, target_vars: &[usize]) -> BlockMap {
        BlockMap {
            numerators: target_vars
                .iter()
                .map(|&v| Polynomial::var(target, v))
                .collect(),
            vars,
            denominator: Polynomial::one(target),
        }
    }
}

/// Substitutes a rational map into each block of variables and clears
/// denominators.
///
/// Returns `N` with `P(f_1(y_1), ..., f_t(y_t)) = N / prod_i q_i(y_i)^{d_i}`,
/// where `d_i` is the total degree of `P` in block `i`. Every source variable
/// must belong to exactly one block.
pub fn substitute_rational(
    p: &Polynomial,
    target: &Ring,
    blocks: &[BlockMap],
) -> Result<Polynomial, PolyError> {
    let arity = p.ring().arity();
    let mut owner = vec![None; arity];
    for (b, block) in blocks.iter().enumerate() {
        if block.vars.len() != block.numerators.len() {
            return Err(PolyError::BlockMismatch(format!(
                "block {b} has {} variables but {} numerators",
                block.vars.len(),
                block.numerators.len()
            )));
        }
        if block.denominator.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        for (j, &v) in block.vars.iter().enumerate() {
            if v >= arity || owner[v].is_some() {
                return Err(PolyError::BlockMismatch(format!(
                    "variable {v} is out of range or covered twice"
                )));
            }
            owner[v] = Some((b, j));
        }
        if block
            .numerators
            .iter()
            .chain([&block.denominator])
            .any(|q| q.ring() != target)
        {
            return Err(PolyError::RingMismatch);
        }
    }
    if owner.iter().any(Option::is_none) {
        return Err(PolyError::BlockMismatch(
            "some variable is not covered".into(),
        ));
    }
    if target.field() != p.field() {
        return Err(PolyError::RingMismatch);
    }

    let block_degrees: Vec<u32> = blocks.iter().map(|b| p.degree_in(&b.vars)).collect();
    let mut numerator_powers: Vec<PowerCache> = blocks
        .iter()
        .map(|b| PowerCache::new(&b.numerators))
        .collect();
    let denominators: Vec<Polynomial> = blocks.iter().map(|b| b.denominator.clone()).collect();
    let mut denominator_powers = PowerCache::new(&denominators);

    let mut acc = Polynomial::zero(target);
    for (m, c) in p.terms() {
        let mut term = Polynomial::constant(target, *c);
        for (b, block) in blocks.iter().enumerate() {
            let used = m.degree_in(&block.vars);
            for (j, &v) in block.vars.iter().enumerate() {
                let e = m.exponent(v) as u32;
                if e > 0 {
                    term = &term * numerator_powers[b].power(j, e);
                }
            }
            let pad = block_degrees[b] - used;
            if pad > 0 {
                term = &term * denominator_powers.power(b, pad);
            }
        }
        acc = &acc + &term;
    }
    Ok(acc)
}
