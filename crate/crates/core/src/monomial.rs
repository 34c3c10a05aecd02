use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

pub type Exponent = u16;

/// Exponent vector, one entry per ring variable.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[Exponent; 16]>,
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, arity),
        }
    }

    pub fn var(arity: usize, index: usize, exp: Exponent) -> Self {
        let mut m = Monomial::one(arity);
        m.exps[index] = exp;
        m
    }

    pub fn from_exponents(exps: &[Exponent]) -> Self {
        Monomial {
            exps: SmallVec::from_slice(exps),
        }
    }

    #[inline]
    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn exponents(&self) -> &[Exponent] {
        &self.exps
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> Exponent {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    /// Total degree restricted to the given variables.
    pub fn degree_in(&self, vars: &[usize]) -> u32 {
        vars.iter().map(|&v| self.exps[v] as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self | other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| b - a)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with a positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }
}

/// A multiplicative well-order on monomials of a fixed arity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    /// Two-block order: variables `0..split` form the eliminated block and are
    /// compared first (grevlex within the block), then the remaining variables
    /// break ties (grevlex).
    Elimination {
        split: usize,
    },
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Lex => lex(a.exponents(), b.exponents()),
            MonomialOrder::GrevLex => grevlex(a.exponents(), b.exponents()),
            MonomialOrder::Elimination { split } => {
                let (a0, a1) = a.exponents().split_at(split.min(a.arity()));
                let (b0, b1) = b.exponents().split_at(split.min(b.arity()));
                grevlex(a0, b0).then_with(|| grevlex(a1, b1))
            }
        }
    }

    /// Whether the order eliminates the first `count` variables, i.e. every
    /// monomial involving one of them is larger than every monomial free of them.
    pub fn eliminates(&self, count: usize) -> bool {
        match *self {
            MonomialOrder::Lex => true,
            MonomialOrder::GrevLex => count == 0,
            MonomialOrder::Elimination { split } => split == count,
        }
    }
}

fn lex(a: &[Exponent], b: &[Exponent]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

fn grevlex(a: &[Exponent], b: &[Exponent]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            // smaller exponent in the last variable wins
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

/// All monomials in `arity` variables of total degree `<= max_degree`,
/// listed by increasing degree and lexicographically within a degree.
pub fn monomials_up_to(arity: usize, max_degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for deg in 0..=max_degree {
        let mut current = vec![0 as Exponent; arity];
        fill(&mut out, &mut current, 0, deg);
    }
    out
}

fn fill(out: &mut Vec<Monomial>, current: &mut [Exponent], index: usize, remaining: u32) {
    if index + 1 >= current.len() {
        if current.is_empty() {
            if remaining == 0 {
                out.push(Monomial::one(0));
            }
            return;
        }
        current[index] = remaining as Exponent;
        out.push(Monomial::from_exponents(current));
        current[index] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        current[index] = e as Exponent;
        fill(out, current, index + 1, remaining - e);
    }
    current[index] = 0;
}

/// `C(n, k)` for small arguments.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}
