//! Polynomials over a prime field `F_p` with `p < 2^31`.

use num_bigint::BigUint;
use rand::Rng;

pub(crate) type Poly = Vec<u64>;

pub(crate) fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

pub(crate) fn inv(a: u64, p: u64) -> u64 {
    assert!(!a.is_multiple_of(p), "zero has no inverse mod p");
    pow_mod(a, p - 2, p)
}

pub(crate) fn sub(a: &[u64], b: &[u64], p: u64) -> Poly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect(),
    )
}

pub(crate) fn add(a: &[u64], b: &[u64], p: u64) -> Poly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

pub(crate) fn scale(a: &[u64], c: u64, p: u64) -> Poly {
    trim(a.iter().map(|&x| x * c % p).collect())
}

pub(crate) fn divrem(a: &[u64], b: &[u64], p: u64) -> (Poly, Poly) {
    let mut r = trim(a.to_vec());
    let b = trim(b.to_vec());
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let li = inv(b[db], p);
    let mut q = vec![0u64; r.len() - db];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r[r.len() - 1] * li % p;
        for (i, &bc) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * bc % p) % p;
        }
        q[shift] = c;
        r = trim(r);
    }
    (trim(q), r)
}

pub(crate) fn rem(a: &[u64], b: &[u64], p: u64) -> Poly {
    divrem(a, b, p).1
}

pub(crate) fn monic(a: &[u64], p: u64) -> Poly {
    let a = trim(a.to_vec());
    match a.last() {
        None => a,
        Some(&l) => scale(&a, inv(l, p), p),
    }
}

pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> Poly {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

/// `(g, s, t)` with `s·a + t·b = g` monic.
pub(crate) fn ext_gcd(a: &[u64], b: &[u64], p: u64) -> (Poly, Poly, Poly) {
    let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let s2 = sub(&s0, &mul(&q, &s1, p), p);
        let t2 = sub(&t0, &mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let li = inv(*r0.last().unwrap(), p);
    (scale(&r0, li, p), scale(&s0, li, p), scale(&t0, li, p))
}

pub(crate) fn derivative(a: &[u64], p: u64) -> Poly {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| (i as u64 % p) * c % p)
            .collect(),
    )
}

fn powmod_poly(base: &[u64], e: &BigUint, m: &[u64], p: u64) -> Poly {
    let mut result = vec![1u64];
    let mut b = rem(base, m, p);
    for i in 0..e.bits() {
        if e.bit(i) {
            result = rem(&mul(&result, &b, p), m, p);
        }
        b = rem(&mul(&b, &b, p), m, p);
    }
    result
}

/// Distinct-degree factorization of a monic square-free polynomial:
/// pairs `(product of all irreducible factors of degree d, d)`.
pub(crate) fn distinct_degree(f: &[u64], p: u64) -> Vec<(Poly, usize)> {
    let mut f = f.to_vec();
    let mut out = Vec::new();
    let x = vec![0u64, 1];
    let mut h = x.clone();
    let pb = BigUint::from(p);
    let mut d = 0;
    while f.len() > 1 && 2 * (d + 1) < f.len() {
        d += 1;
        h = powmod_poly(&h, &pb, &f, p);
        let g = gcd(&sub(&h, &x, p), &f, p);
        if g.len() > 1 {
            f = divrem(&f, &g, p).0;
            h = rem(&h, &f, p);
            out.push((g, d));
        }
    }
    if f.len() > 1 {
        let deg = f.len() - 1;
        out.push((f, deg));
    }
    out
}

/// Cantor–Zassenhaus splitting of a product of degree-`d` irreducibles.
pub(crate) fn equal_degree<R: Rng>(f: &[u64], d: usize, p: u64, rng: &mut R) -> Vec<Poly> {
    let n = f.len() - 1;
    if n == d {
        return vec![f.to_vec()];
    }
    let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a: Poly = trim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.len() < 2 {
            continue;
        }
        let b = sub(&powmod_poly(&a, &e, f, p), &[1], p);
        let g = gcd(&b, f, p);
        if g.len() > 1 && g.len() < f.len() {
            let h = monic(&divrem(f, &g, p).0, p);
            let mut out = equal_degree(&g, d, p, rng);
            out.extend(equal_degree(&h, d, p, rng));
            return out;
        }
    }
}

/// Monic irreducible factors of a monic square-free polynomial.
pub(crate) fn factor_squarefree<R: Rng>(f: &[u64], p: u64, rng: &mut R) -> Vec<Poly> {
    let mut out = Vec::new();
    for (g, d) in distinct_degree(f, p) {
        out.extend(equal_degree(&g, d, p, rng));
    }
    out
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2;
    while i * i <= n {
        if n.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn factors_mod_p() {
        let p = 101;
        // (x - 1)(x - 2)(x^2 + 2)
        let f = mul(&mul(&[p - 1, 1], &[p - 2, 1], p), &[2, 0, 1], p);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut fs = factor_squarefree(&f, p, &mut rng);
        fs.sort();
        let prod = fs.iter().fold(vec![1u64], |a, g| mul(&a, g, p));
        assert_eq!(prod, f);
        assert!(fs.len() >= 3);
        let (g, s, t) = ext_gcd(&[p - 1, 1], &[p - 2, 1], p);
        assert_eq!(g, vec![1]);
        assert_eq!(
            add(&mul(&s, &[p - 1, 1], p), &mul(&t, &[p - 2, 1], p), p),
            vec![1]
        );
    }
}
