//! Buchberger's algorithm with the Gebauer-Moeller pair criteria, normal
//! forms, elimination, and saturation.

use std::cmp::Ordering;

use thiserror::Error;

use crate::field::PrimeField;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{PolyError, Polynomial, Ring};

/// Default S-pair budget for a single Groebner basis computation.
pub const DEFAULT_PAIR_BUDGET: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("S-pair budget of {0} exhausted")]
    Budget(usize),
    #[error("basis order {order:?} does not eliminate the first {count} variables")]
    WrongOrder { order: MonomialOrder, count: usize },
    #[error("cannot saturate by the zero polynomial")]
    ZeroSaturator,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Ideal given by generators; zero generators are dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(
        ring: &Ring,
        generators: impl IntoIterator<Item = Polynomial>,
    ) -> Result<Ideal, PolyError> {
        let mut gens = Vec::new();
        for g in generators {
            if g.ring() != ring {
                return Err(PolyError::RingMismatch);
            }
            if !g.is_zero() {
                gens.push(g);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: gens,
        })
    }

    /// The zero ideal.
    pub fn zero(ring: &Ring) -> Ideal {
        Ideal {
            ring: ring.clone(),
            generators: Vec::new(),
        }
    }

    /// The unit ideal.
    pub fn unit(ring: &Ring) -> Ideal {
        Ideal {
            ring: ring.clone(),
            generators: vec![Polynomial::one(ring)],
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn with_generator(&self, g: Polynomial) -> Result<Ideal, PolyError> {
        Ideal::new(&self.ring, self.generators.iter().cloned().chain([g]))
    }

    pub fn map_vars(&self, target: &Ring, var_map: &[usize]) -> Ideal {
        Ideal {
            ring: target.clone(),
            generators: self
                .generators
                .iter()
                .map(|g| g.map_vars(target, var_map))
                .filter(|g| !g.is_zero())
                .collect(),
        }
    }
}

type Terms = Vec<(Monomial, u64)>;

/// Reduced Groebner basis: monic, auto-reduced, sorted by decreasing leading
/// monomial.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ring: Ring,
    order: MonomialOrder,
    basis: Vec<Polynomial>,
    sorted: Vec<Terms>,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.order == other.order && self.basis == other.basis
    }
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.sorted.iter().map(|t| &t[0].0)
    }

    pub fn is_trivial(&self) -> bool {
        self.sorted.len() == 1 && self.sorted[0][0].0.is_one()
    }

    pub fn ideal(&self) -> Ideal {
        Ideal {
            ring: self.ring.clone(),
            generators: self.basis.clone(),
        }
    }

    /// Fully reduced remainder of `f` on division by the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial, PolyError> {
        if f.ring() != &self.ring {
            return Err(PolyError::RingMismatch);
        }
        let engine = Engine::new(self.ring.field(), self.order);
        let refs: Vec<&Terms> = self.sorted.iter().collect();
        let r = engine.reduce(engine.sort(f), &refs);
        Ok(engine.to_poly(&self.ring, r))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool, PolyError> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Krull dimension of `R / I`, or `-1` for the unit ideal, computed from the
    /// leading monomials: the largest set of variables containing the support of
    /// no leading monomial.
    pub fn dimension(&self) -> i64 {
        let n = self.ring.arity();
        assert!(n <= 128, "dimension search supports at most 128 variables");
        let mut masks: Vec<u128> = self
            .leading_monomials()
            .map(|m| m.support().fold(0u128, |acc, v| acc | (1 << v)))
            .collect();
        if masks.contains(&0) {
            return -1;
        }
        masks.sort_by_key(|m| m.count_ones());
        let mut minimal: Vec<u128> = Vec::new();
        for m in masks {
            if minimal.iter().all(|&k| k & m != k) {
                minimal.push(m);
            }
        }
        let mut best = n;
        min_hitting_set(&minimal, 0, 0, &mut best);
        (n - best) as i64
    }
}

fn min_hitting_set(masks: &[u128], chosen: u128, size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    match masks.iter().find(|&&m| m & chosen == 0) {
        None => *best = size,
        Some(&m) => {
            let mut bits = m;
            while bits != 0 {
                let v = bits.trailing_zeros();
                bits &= bits - 1;
                min_hitting_set(masks, chosen | (1 << v), size + 1, best);
            }
        }
    }
}

struct Engine {
    field: PrimeField,
    order: MonomialOrder,
}

impl Engine {
    fn new(field: PrimeField, order: MonomialOrder) -> Self {
        Engine { field, order }
    }

    fn sort(&self, f: &Polynomial) -> Terms {
        let mut t = f.terms().to_vec();
        if self.order != MonomialOrder::GrevLex {
            t.sort_by(|a, b| self.order.cmp(&b.0, &a.0));
        }
        t
    }

    fn to_poly(&self, ring: &Ring, t: Terms) -> Polynomial {
        if self.order == MonomialOrder::GrevLex {
            Polynomial::from_sorted_terms(ring, t)
        } else {
            Polynomial::from_terms(ring, t)
        }
    }

    /// `a - c * m * b`, with `a` and `b` sorted descending.
    fn sub_mul(&self, a: &[(Monomial, u64)], b: &[(Monomial, u64)], c: u64, m: &Monomial) -> Terms {
        let f = self.field;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let mut i = 0;
        let mut j = 0;
        let mut bj: Option<Monomial> = b.first().map(|t| t.0.mul(m));
        while i < a.len() {
            let Some(ref bm) = bj else { break };
            match self.order.cmp(&a[i].0, bm) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((bm.clone(), f.neg(f.mul(c, b[j].1))));
                    j += 1;
                    bj = b.get(j).map(|t| t.0.mul(m));
                }
                Ordering::Equal => {
                    let v = f.sub(a[i].1, f.mul(c, b[j].1));
                    if v != 0 {
                        out.push((a[i].0.clone(), v));
                    }
                    i += 1;
                    j += 1;
                    bj = b.get(j).map(|t| t.0.mul(m));
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        while let Some(bm) = bj {
            out.push((bm, f.neg(f.mul(c, b[j].1))));
            j += 1;
            bj = b.get(j).map(|t| t.0.mul(m));
        }
        out
    }

    /// Full reduction by monic divisors.
    fn reduce(&self, mut f: Terms, divisors: &[&Terms]) -> Terms {
        let mut rem: Terms = Vec::new();
        let mut start = 0;
        while start < f.len() {
            let (lm, lc) = (&f[start].0, f[start].1);
            let ld = lm.degree();
            let hit = divisors
                .iter()
                .find(|g| g[0].0.degree() <= ld && g[0].0.divides(lm));
            match hit {
                Some(g) => {
                    let q = g[0].0.quotient_of(lm);
                    f = self.sub_mul(&f[start + 1..], &g[1..], lc, &q);
                    start = 0;
                }
                None => {
                    rem.push(f[start].clone());
                    start += 1;
                }
            }
        }
        rem
    }

    fn make_monic(&self, mut f: Terms) -> Terms {
        if let Some(&(_, lc)) = f.first() {
            if lc != 1 {
                let inv = self.field.inv(lc).unwrap();
                for t in &mut f {
                    t.1 = self.field.mul(t.1, inv);
                }
            }
        }
        f
    }

    fn spoly(&self, a: &Terms, b: &Terms) -> Terms {
        let lcm = a[0].0.lcm(&b[0].0);
        let ma = a[0].0.quotient_of(&lcm);
        let mb = b[0].0.quotient_of(&lcm);
        // a, b monic: ma*a - mb*b, leading terms cancel
        let scaled_a: Terms = a[1..].iter().map(|(m, c)| (m.mul(&ma), *c)).collect();
        self.sub_mul(&scaled_a, &b[1..], 1, &mb)
    }
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Reduced Groebner basis with the default S-pair budget.
pub fn buchberger(ideal: &Ideal, order: MonomialOrder) -> Result<GroebnerBasis, GroebnerError> {
    buchberger_with_budget(ideal, order, DEFAULT_PAIR_BUDGET)
}

pub fn buchberger_with_budget(
    ideal: &Ideal,
    order: MonomialOrder,
    budget: usize,
) -> Result<GroebnerBasis, GroebnerError> {
    let ring = ideal.ring().clone();
    let engine = Engine::new(ring.field(), order);
    let mut polys: Vec<Terms> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let unit = |ring: &Ring| GroebnerBasis {
        ring: ring.clone(),
        order,
        basis: vec![Polynomial::one(ring)],
        sorted: vec![vec![(Monomial::one(ring.arity()), 1)]],
    };

    let mut inputs: Vec<Terms> = ideal.generators().iter().map(|g| engine.sort(g)).collect();
    inputs.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    for f in inputs {
        let divisors: Vec<&Terms> = active_refs(&polys, &active);
        let h = engine.reduce(f, &divisors);
        if h.is_empty() {
            continue;
        }
        let h = engine.make_monic(h);
        if h[0].0.is_one() {
            return Ok(unit(&ring));
        }
        update(&mut polys, &mut active, &mut pairs, h);
    }

    let mut processed = 0usize;
    while !pairs.is_empty() {
        processed += 1;
        if processed > budget {
            return Err(GroebnerError::Budget(budget));
        }
        // normal strategy: smallest lcm
        let idx = (0..pairs.len())
            .min_by(|&a, &b| {
                let (la, lb) = (&pairs[a].lcm, &pairs[b].lcm);
                la.degree()
                    .cmp(&lb.degree())
                    .then_with(|| order.cmp(la, lb))
            })
            .unwrap();
        let pair = pairs.swap_remove(idx);
        let s = engine.spoly(&polys[pair.i], &polys[pair.j]);
        let divisors = active_refs(&polys, &active);
        let h = engine.reduce(s, &divisors);
        if h.is_empty() {
            continue;
        }
        let h = engine.make_monic(h);
        if h[0].0.is_one() {
            return Ok(unit(&ring));
        }
        update(&mut polys, &mut active, &mut pairs, h);
    }

    // the active set is minimal; inter-reduce tails
    let mut basis: Vec<Terms> = polys
        .iter()
        .zip(&active)
        .filter(|(_, &a)| a)
        .map(|(p, _)| p.clone())
        .collect();
    basis.sort_by(|a, b| order.cmp(&b[0].0, &a[0].0));
    let mut reduced = Vec::with_capacity(basis.len());
    for k in 0..basis.len() {
        let others: Vec<&Terms> = basis
            .iter()
            .enumerate()
            .filter(|(m, _)| *m != k)
            .map(|(_, t)| t)
            .collect();
        let head = basis[k][0].clone();
        let tail = engine.reduce(basis[k][1..].to_vec(), &others);
        let mut full = vec![head];
        full.extend(tail);
        reduced.push(full);
    }
    let polys_out = reduced
        .iter()
        .map(|t| engine.to_poly(&ring, t.clone()))
        .collect();
    Ok(GroebnerBasis {
        ring,
        order,
        basis: polys_out,
        sorted: reduced,
    })
}

fn active_refs<'a>(polys: &'a [Terms], active: &[bool]) -> Vec<&'a Terms> {
    polys
        .iter()
        .zip(active)
        .filter(|(_, &a)| a)
        .map(|(p, _)| p)
        .collect()
}

/// Gebauer-Moeller installation of a new basis element.
fn update(polys: &mut Vec<Terms>, active: &mut Vec<bool>, pairs: &mut Vec<Pair>, h: Terms) {
    let hi = polys.len();
    let lh = h[0].0.clone();
    polys.push(h);
    active.push(true);

    let candidates: Vec<(usize, Monomial, bool)> = (0..hi)
        .filter(|&g| active[g])
        .map(|g| {
            let lg = &polys[g][0].0;
            (g, lh.lcm(lg), lh.is_coprime(lg))
        })
        .collect();

    // chain criterion among new pairs
    let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
    for (idx, (g, lcm, coprime)) in candidates.iter().enumerate() {
        let dominated = |other: &(usize, Monomial, bool)| other.1.divides(lcm);
        let keep = *coprime
            || (!candidates[idx + 1..].iter().any(dominated) && !kept.iter().any(dominated));
        if keep {
            kept.push((*g, lcm.clone(), *coprime));
        }
    }
    // drop pairs whose lcm equals another kept lcm more than once, and coprime ones
    let mut fresh: Vec<Pair> = Vec::new();
    for (g, lcm, coprime) in kept {
        if coprime {
            continue;
        }
        if fresh.iter().any(|p| p.lcm == lcm) {
            continue;
        }
        fresh.push(Pair { i: g, j: hi, lcm });
    }

    // old pairs made redundant by the new leading monomial
    pairs.retain(|p| {
        if !lh.divides(&p.lcm) {
            return true;
        }
        let li = lh.lcm(&polys[p.i][0].0);
        let lj = lh.lcm(&polys[p.j][0].0);
        li == p.lcm || lj == p.lcm
    });
    pairs.extend(fresh);

    for g in 0..hi {
        if active[g] && lh.divides(&polys[g][0].0) {
            active[g] = false;
        }
    }
}

/// `I ∩ F[remaining variables]` from a basis computed under an order that
/// eliminates the first `eliminated` variables. The result lives in the
/// subring of the remaining variables.
pub fn elimination_ideal(gb: &GroebnerBasis, eliminated: usize) -> Result<Ideal, GroebnerError> {
    if !gb.order().eliminates(eliminated) {
        return Err(GroebnerError::WrongOrder {
            order: gb.order(),
            count: eliminated,
        });
    }
    let n = gb.ring().arity();
    let keep: Vec<usize> = (eliminated..n).collect();
    let sub = gb.ring().subring(&keep);
    let mut map = vec![usize::MAX; n];
    for (new, &old) in keep.iter().enumerate() {
        map[old] = new;
    }
    let gens = gb
        .basis()
        .iter()
        .filter(|g| g.support().iter().all(|&v| v >= eliminated))
        .map(|g| {
            let m: Vec<usize> = map
                .iter()
                .map(|&x| if x == usize::MAX { 0 } else { x })
                .collect();
            g.map_vars(&sub, &m)
        });
    Ok(Ideal::new(&sub, gens)?)
}

/// Eliminates the listed variables. The result lives in the subring of the
/// remaining variables, in their original relative order.
pub fn eliminate(ideal: &Ideal, vars: &[usize]) -> Result<Ideal, GroebnerError> {
    let ring = ideal.ring();
    let n = ring.arity();
    let mut is_elim = vec![false; n];
    for &v in vars {
        is_elim[v] = true;
    }
    let kept: Vec<usize> = (0..n).filter(|&v| !is_elim[v]).collect();
    let elim: Vec<usize> = (0..n).filter(|&v| is_elim[v]).collect();
    if elim.is_empty() {
        return Ok(ideal.clone());
    }
    let perm: Vec<usize> = elim.iter().chain(&kept).copied().collect();
    let permuted_ring = ring.subring(&perm);
    let mut to_perm = vec![0; n];
    for (new, &old) in perm.iter().enumerate() {
        to_perm[old] = new;
    }
    let permuted = ideal.map_vars(&permuted_ring, &to_perm);
    let gb = buchberger(&permuted, MonomialOrder::Elimination { split: elim.len() })?;
    elimination_ideal(&gb, elim.len())
}

/// Saturation `I : g^∞` by the Rabinowitsch construction.
pub fn saturate(ideal: &Ideal, g: &Polynomial) -> Result<Ideal, GroebnerError> {
    if g.is_zero() {
        return Err(GroebnerError::ZeroSaturator);
    }
    if g.ring() != ideal.ring() {
        return Err(PolyError::RingMismatch.into());
    }
    if g.is_constant() {
        return Ok(ideal.clone());
    }
    let ring = ideal.ring();
    let n = ring.arity();
    // fresh variable first so it is the eliminated block
    let mut names = vec!["_w".to_string()];
    while ring.var_index(&names[0]).is_some() {
        names[0].push('_');
    }
    names.extend(ring.vars().iter().cloned());
    let ext = Ring::new(names, ring.field());
    let shift: Vec<usize> = (1..=n).collect();
    let w = Polynomial::var(&ext, 0);
    let rabinowitsch = &Polynomial::one(&ext) - &(&w * &g.map_vars(&ext, &shift));
    let gens = ideal
        .generators()
        .iter()
        .map(|f| f.map_vars(&ext, &shift))
        .chain([rabinowitsch]);
    let gb = buchberger(
        &Ideal::new(&ext, gens)?,
        MonomialOrder::Elimination { split: 1 },
    )?;
    let elim = elimination_ideal(&gb, 1)?;
    // elimination_ideal returns the subring, which has the original names
    Ok(Ideal::new(
        ring,
        elim.generators()
            .iter()
            .map(|p| p.map_vars(ring, &(0..n).collect::<Vec<_>>())),
    )?)
}

pub fn ideal_membership(f: &Polynomial, ideal: &Ideal) -> Result<bool, GroebnerError> {
    let gb = buchberger(ideal, MonomialOrder::GrevLex)?;
    Ok(gb.contains(f)?)
}

pub fn is_trivial(ideal: &Ideal) -> Result<bool, GroebnerError> {
    Ok(buchberger(ideal, MonomialOrder::GrevLex)?.is_trivial())
}

/// Krull dimension of `V(I)` (`-1` when empty), from a grevlex basis.
pub fn ideal_dimension(ideal: &Ideal) -> Result<i64, GroebnerError> {
    Ok(buchberger(ideal, MonomialOrder::GrevLex)?.dimension())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn ring(vars: &[&str]) -> Ring {
        Ring::new(vars.iter().copied(), PrimeField::default())
    }

    fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|g| parse_polynomial(g, r).unwrap())).unwrap()
    }

    fn p(r: &Ring, s: &str) -> Polynomial {
        parse_polynomial(s, r).unwrap()
    }

    #[test]
    fn twisted_cubic_lex() {
        let r = ring(&["x", "y", "z"]);
        let gb = buchberger(&ideal(&r, &["x^2 - y", "x^3 - z"]), MonomialOrder::Lex).unwrap();
        // hand computation: {x^2 - y, x*y - z, x*z - y^2, y^3 - z^2}
        let expected = ["x^2 - y", "x*y - z", "x*z - y^2", "y^3 - z^2"];
        assert_eq!(gb.basis().len(), 4);
        for e in expected {
            assert!(
                gb.basis().contains(&p(&r, e)),
                "missing {e}: {:?}",
                gb.basis()
            );
        }
    }

    #[test]
    fn trivial_examples() {
        let r = ring(&["x"]);
        let gb = buchberger(&ideal(&r, &["x"]), MonomialOrder::GrevLex).unwrap();
        assert_eq!(gb.basis(), &[p(&r, "x")]);
        let gb = buchberger(&ideal(&r, &["x", "x + 1"]), MonomialOrder::GrevLex).unwrap();
        assert!(gb.is_trivial());
        assert_eq!(gb.basis(), &[Polynomial::one(&r)]);
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(&["x", "y"]);
        let gb = buchberger(&ideal(&r, &["x^2 - y"]), MonomialOrder::Lex).unwrap();
        assert_eq!(gb.normal_form(&p(&r, "x^3")).unwrap(), p(&r, "x*y"));
        assert_eq!(
            gb.normal_form(&p(&r, "x^4 - y^2")).unwrap(),
            Polynomial::zero(&r)
        );
        assert_eq!(
            gb.normal_form(&Polynomial::one(&r)).unwrap(),
            Polynomial::one(&r)
        );
    }

    #[test]
    fn elimination_examples() {
        let r = ring(&["x", "y"]);
        // parabola projects densely onto y
        let e = eliminate(&ideal(&r, &["y - x^2"]), &[0]).unwrap();
        assert!(e.is_zero());
        // hyperbola: closure of the image is the whole line
        let e = eliminate(&ideal(&r, &["x*y - 1"]), &[0]).unwrap();
        assert!(e.is_zero());

        let r = ring(&["t", "x", "y"]);
        let e = eliminate(&ideal(&r, &["x - t", "y - t^2"]), &[0]).unwrap();
        let sub = e.ring().clone();
        assert_eq!(sub.vars(), &["x", "y"]);
        let gb = buchberger(&e, MonomialOrder::GrevLex).unwrap();
        assert_eq!(
            gb.basis(),
            &[p(&sub, "x^2 - y").monic(MonomialOrder::GrevLex)]
        );
    }

    #[test]
    fn elimination_rejects_wrong_order() {
        let r = ring(&["x", "y"]);
        let gb = buchberger(&ideal(&r, &["x - y"]), MonomialOrder::GrevLex).unwrap();
        assert!(matches!(
            elimination_ideal(&gb, 1),
            Err(GroebnerError::WrongOrder { .. })
        ));
    }

    #[test]
    fn saturation_examples() {
        let r = ring(&["x", "y", "z"]);
        let s = saturate(&ideal(&r, &["x*y"]), &p(&r, "x")).unwrap();
        assert_eq!(
            buchberger(&s, MonomialOrder::GrevLex).unwrap().basis(),
            &[p(&r, "y")]
        );

        let s = saturate(&ideal(&r, &["x^2"]), &p(&r, "x")).unwrap();
        assert!(is_trivial(&s).unwrap());

        let s = saturate(&ideal(&r, &["x*y", "x*z"]), &p(&r, "x")).unwrap();
        let gb = buchberger(&s, MonomialOrder::GrevLex).unwrap();
        assert_eq!(gb.basis(), &[p(&r, "y"), p(&r, "z")]);

        assert_eq!(
            saturate(&ideal(&r, &["x"]), &Polynomial::zero(&r)),
            Err(GroebnerError::ZeroSaturator)
        );
    }

    #[test]
    fn membership_examples() {
        let r = ring(&["x", "y", "z"]);
        assert!(ideal_membership(&p(&r, "x^2 - y"), &ideal(&r, &["x^2 - y", "z"])).unwrap());
        assert!(is_trivial(&ideal(&r, &["x", "x - 1"])).unwrap());
        assert!(
            ideal_membership(&p(&r, "y^3 - z^2"), &ideal(&r, &["x^2 - y", "x^3 - z"])).unwrap()
        );
        assert!(!ideal_membership(&p(&r, "y"), &ideal(&r, &["x^2 - y", "x^3 - z"])).unwrap());
    }

    #[test]
    fn dimension_examples() {
        let r = ring(&["x", "y", "z"]);
        assert_eq!(
            ideal_dimension(&ideal(&r, &["x^2 - y", "x^3 - z"])).unwrap(),
            1
        );
        assert_eq!(ideal_dimension(&ideal(&r, &["x"])).unwrap(), 2);
        assert_eq!(ideal_dimension(&Ideal::zero(&r)).unwrap(), 3);
        assert_eq!(ideal_dimension(&ideal(&r, &["x", "x - 1"])).unwrap(), -1);
        assert_eq!(ideal_dimension(&ideal(&r, &["x", "y", "z"])).unwrap(), 0);
        // union of a plane and a line
        assert_eq!(ideal_dimension(&ideal(&r, &["x*y", "x*z"])).unwrap(), 2);
    }

    #[test]
    fn budget_exhaustion() {
        let r = ring(&["x", "y", "z"]);
        let i = ideal(&r, &["x^2 - y", "x^3 - z"]);
        assert_eq!(
            buchberger_with_budget(&i, MonomialOrder::Lex, 0),
            Err(GroebnerError::Budget(0))
        );
    }

    #[test]
    fn idempotent_on_reduced_basis() {
        let r = ring(&["x", "y", "z"]);
        for order in [MonomialOrder::Lex, MonomialOrder::GrevLex] {
            let gb = buchberger(
                &ideal(&r, &["x^2 - y*z", "x*y - z^2 + 1", "y^3 - x"]),
                order,
            )
            .unwrap();
            let again = buchberger(&gb.ideal(), order).unwrap();
            assert_eq!(gb, again);
        }
    }
}
