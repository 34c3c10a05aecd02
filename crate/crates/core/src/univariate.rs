//! Dense univariate polynomials over `F_p` and root finding in `F_p`.

use rand::Rng;

use crate::field::PrimeField;

/// Coefficients in ascending degree order, no trailing zeros.
pub type Dense = Vec<u64>;

fn trim(mut a: Dense) -> Dense {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn degree(a: &Dense) -> Option<usize> {
    a.len().checked_sub(1)
}

fn mul(a: &Dense, b: &Dense, f: PrimeField) -> Dense {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(out)
}

fn rem(a: &Dense, m: &Dense, f: PrimeField) -> Dense {
    let dm = degree(m).expect("division by zero polynomial");
    let inv = f.inv(m[dm]).expect("nonzero leading coefficient");
    let mut r = a.clone();
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        let c = f.mul(r[dr], inv);
        let shift = dr - dm;
        for (i, &mi) in m.iter().enumerate() {
            r[i + shift] = f.sub(r[i + shift], f.mul(c, mi));
        }
        r = trim(r);
    }
    r
}

fn monic(a: Dense, f: PrimeField) -> Dense {
    match a.last() {
        None => a,
        Some(&lc) => {
            let inv = f.inv(lc).expect("nonzero");
            a.into_iter().map(|c| f.mul(c, inv)).collect()
        }
    }
}

pub fn gcd(a: &Dense, b: &Dense, f: PrimeField) -> Dense {
    let (mut x, mut y) = (trim(a.clone()), trim(b.clone()));
    while !y.is_empty() {
        let r = rem(&x, &y, f);
        x = y;
        y = r;
    }
    monic(x, f)
}

fn powmod(base: &Dense, mut e: u64, m: &Dense, f: PrimeField) -> Dense {
    let mut acc = rem(&vec![1], m, f);
    let mut b = rem(base, m, f);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(&mul(&acc, &b, f), m, f);
        }
        b = rem(&mul(&b, &b, f), m, f);
        e >>= 1;
    }
    acc
}

pub fn evaluate(a: &Dense, x: u64, f: PrimeField) -> u64 {
    a.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

/// Distinct roots of `a` in `F_p`, sorted. The zero polynomial has no
/// well-defined root set and returns `None`.
pub fn roots<R: Rng + ?Sized>(a: &Dense, f: PrimeField, rng: &mut R) -> Option<Vec<u64>> {
    let a = trim(a.clone());
    if a.is_empty() {
        return None;
    }
    let p = f.modulus();
    if p <= 4096 {
        return Some((0..p).filter(|&x| evaluate(&a, x, f) == 0).collect());
    }
    if a.len() == 1 {
        return Some(Vec::new());
    }
    // product of the distinct linear factors: gcd(a, x^p - x)
    let xp = powmod(&vec![0, 1], p, &a, f);
    let mut h = xp;
    h.resize(h.len().max(2), 0);
    h[1] = f.sub(h[1], 1);
    let g = gcd(&a, &trim(h), f);
    let mut out = Vec::new();
    split(g, f, rng, &mut out);
    out.sort_unstable();
    Some(out)
}

fn split<R: Rng + ?Sized>(g: Dense, f: PrimeField, rng: &mut R, out: &mut Vec<u64>) {
    match degree(&g) {
        None | Some(0) => {}
        Some(1) => out.push(f.neg(f.mul(g[0], f.inv(g[1]).unwrap()))),
        Some(_) => loop {
            let shift = f.random(rng);
            let half = powmod(&vec![shift, 1], (f.modulus() - 1) / 2, &g, f);
            let mut h = half;
            if h.is_empty() {
                continue;
            }
            h[0] = f.sub(h[0], 1);
            let d = gcd(&g, &trim(h), f);
            let dd = degree(&d).unwrap_or(0);
            if dd > 0 && dd < degree(&g).unwrap() {
                let other = quotient(&g, &d, f);
                split(d, f, rng, out);
                split(other, f, rng, out);
                return;
            }
        },
    }
}

fn quotient(a: &Dense, m: &Dense, f: PrimeField) -> Dense {
    let dm = degree(m).unwrap();
    let inv = f.inv(m[dm]).unwrap();
    let mut r = a.clone();
    let mut q = vec![0; a.len().saturating_sub(dm).max(1)];
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        let c = f.mul(r[dr], inv);
        q[dr - dm] = c;
        for (i, &mi) in m.iter().enumerate() {
            r[i + dr - dm] = f.sub(r[i + dr - dm], f.mul(c, mi));
        }
        r = trim(r);
    }
    trim(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn roots_of_split_polynomial_large_prime() {
        let f = PrimeField::default();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        // (x - 5)(x - 1000)(x^2 + 1)^? : x^2 + 1 has roots iff p = 1 mod 4; 2^31-1 = 3 mod 4
        let lin = |r: u64| vec![f.neg(r), 1];
        let a = mul(&mul(&lin(5), &lin(1_000), f), &vec![1, 0, 1], f);
        assert_eq!(roots(&a, f, &mut rng), Some(vec![5, 1_000]));
        let sq = mul(&lin(7), &lin(7), f);
        assert_eq!(roots(&sq, f, &mut rng), Some(vec![7]));
        assert_eq!(roots(&vec![3], f, &mut rng), Some(vec![]));
        assert_eq!(roots(&vec![], f, &mut rng), None);
    }

    #[test]
    fn roots_small_prime_by_scan() {
        let f = PrimeField::new(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        // x^2 - 1
        assert_eq!(roots(&vec![4, 0, 1], f, &mut rng), Some(vec![1, 4]));
    }
}
