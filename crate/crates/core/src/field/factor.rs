//! Factorization of univariate polynomials over `Q` (Zassenhaus: modular
//! factorization, Hensel lifting and recombination) and over towers of
//! number fields (Trager's norm method).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp;
use super::{prefix, tower_levels, Tower, UPoly, K};
use crate::num::Q;

/// Yun's square-free decomposition: monic `a_i` with `f = lc · Π a_i^i`.
pub fn squarefree_decomposition(f: &UPoly) -> Vec<(UPoly, u32)> {
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let f = f.monic();
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.exact_div(&a0);
    let mut c = df.exact_div(&a0);
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    while b.deg() > 0 {
        let a = b.gcd(&d);
        b = b.exact_div(&a);
        c = d.exact_div(&a);
        d = c.sub(&b.derivative());
        if a.deg() > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

/// Irreducible factors with multiplicities over the tower of `f`'s
/// coefficients, or over the longer tower `t` when given.
pub fn factor(f: &UPoly, t: &Tower) -> Vec<(UPoly, u32)> {
    let t = super::join(&f.tower(), t);
    let mut out = Vec::new();
    for (a, i) in squarefree_decomposition(f) {
        for g in factor_squarefree(&a, &t) {
            out.push((g, i));
        }
    }
    out
}

/// Monic irreducible factors of a square-free polynomial over `t`.
pub fn factor_squarefree(f: &UPoly, t: &Tower) -> Vec<UPoly> {
    let f = f.monic();
    if f.deg() <= 1 {
        return if f.deg() == 1 { vec![f] } else { Vec::new() };
    }
    let t = super::join(&f.tower(), t);
    if tower_levels(&t).is_empty() {
        zassenhaus_rational(&f)
    } else {
        trager(&f, &t)
    }
}

fn zassenhaus_rational(f: &UPoly) -> Vec<UPoly> {
    let ints = to_primitive_integer(f);
    zassenhaus(&ints)
        .into_iter()
        .map(|g| UPoly::new(g.into_iter().map(|c| K::rat(Q::from_integer(c))).collect()).monic())
        .collect()
}

fn to_primitive_integer(f: &UPoly) -> Vec<BigInt> {
    let qs: Vec<Q> = f
        .coeffs()
        .iter()
        .map(|k| k.as_rational().expect("rational polynomial").clone())
        .collect();
    let den = qs.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
    let ints: Vec<BigInt> = qs.iter().map(|q| (q * &den).to_integer()).collect();
    primitive(ints)
}

fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    let mut out: Vec<BigInt> = v.into_iter().map(|c| c / &g).collect();
    if out.last().is_some_and(|c| c.is_negative()) {
        out.iter_mut().for_each(|c| *c = -c.clone());
    }
    out
}

fn mod_u64(c: &BigInt, p: u64) -> u64 {
    c.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

fn reduce(f: &[BigInt], p: u64) -> modp::Poly {
    modp::trim(f.iter().map(|c| mod_u64(c, p)).collect())
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn lift_u64(a: &[u64]) -> Vec<BigInt> {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// Exact division over `Z`; `None` if `g` does not divide `f`.
fn zdiv(f: &[BigInt], g: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    if r.len() < g.len() {
        return None;
    }
    let lg = &g[dg];
    let mut q = vec![BigInt::zero(); r.len() - dg];
    for shift in (0..q.len()).rev() {
        let top = &r[shift + dg];
        let (c, rem) = top.div_rem(lg);
        if !rem.is_zero() {
            return None;
        }
        for (i, gc) in g.iter().enumerate() {
            r[shift + i] -= &c * gc;
        }
        q[shift] = c;
    }
    r.iter().all(Zero::is_zero).then_some(q)
}

/// Lift `F ≡ g·h (mod p)` to `mod p^k`, `g` monic and `lc(h) = lc(F)`.
fn hensel2(f: &[BigInt], g: &[u64], h: &[u64], p: u64, k: u32) -> (Vec<BigInt>, Vec<BigInt>) {
    let (one, s, t) = modp::ext_gcd(g, h, p);
    debug_assert_eq!(one, vec![1]);
    let mut gz = lift_u64(g);
    let mut hz = lift_u64(h);
    *hz.last_mut().unwrap() = f.last().unwrap().clone();
    let pb = BigInt::from(p);
    let mut pk = pb.clone();
    for _ in 1..k {
        let gh = zmul(&gz, &hz);
        let e: Vec<BigInt> = (0..f.len())
            .map(|i| {
                let x = f[i].clone() - gh.get(i).cloned().unwrap_or_default();
                debug_assert!((&x % &pk).is_zero());
                x / &pk
            })
            .collect();
        let e = reduce(&e, p);
        let gp = reduce(&gz, p);
        let hp = reduce(&hz, p);
        let (q, tau) = modp::divrem(&modp::mul(&t, &e, p), &gp, p);
        let sigma = modp::add(&modp::mul(&s, &e, p), &modp::mul(&q, &hp, p), p);
        for (i, c) in tau.iter().enumerate() {
            gz[i] += &pk * BigInt::from(*c);
        }
        for (i, c) in sigma.iter().enumerate() {
            hz[i] += &pk * BigInt::from(*c);
        }
        pk *= &pb;
    }
    (gz, hz)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Irreducible primitive factors over `Z` of a primitive square-free
/// integer polynomial.
fn zassenhaus(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    if f[0].is_zero() {
        let mut out = vec![vec![BigInt::zero(), BigInt::one()]];
        out.extend(zassenhaus(&primitive(f[1..].to_vec())));
        return out;
    }
    let lc = f[n].clone();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut best: Option<(u64, Vec<modp::Poly>)> = None;
    let mut candidate = 1u64 << 15;
    let mut tried = 0;
    while tried < 5 {
        candidate += 1;
        if !modp::is_prime(candidate) {
            continue;
        }
        let p = candidate;
        if mod_u64(&lc, p) == 0 {
            continue;
        }
        let fp = reduce(f, p);
        if modp::gcd(&fp, &modp::derivative(&fp, p), p).len() > 1 {
            continue;
        }
        tried += 1;
        let fs = modp::factor_squarefree(&modp::monic(&fp, p), p, &mut rng);
        let better = best.as_ref().is_none_or(|(_, b)| fs.len() < b.len());
        if better {
            best = Some((p, fs));
        }
        if best.as_ref().unwrap().1.len() == 1 {
            break;
        }
    }
    let (p, fs) = best.expect("a good prime exists");
    if fs.len() == 1 {
        return vec![f.to_vec()];
    }
    // Coefficient bound for lc · (monic factor).
    let maxc = f.iter().map(|c| c.abs()).max().unwrap();
    let bound: BigInt =
        BigInt::from(2) * lc.abs() * BigInt::from(n + 1) * maxc * (BigInt::one() << n);
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut modulus = pb.clone();
    while modulus <= bound {
        modulus *= &pb;
        k += 1;
    }
    // Multifactor lifting, one factor at a time.
    let lcp = mod_u64(&lc, p);
    let mut lifted: Vec<Vec<BigInt>> = Vec::new();
    let mut cur = f.to_vec();
    for i in 0..fs.len() - 1 {
        let h = fs[i + 1..]
            .iter()
            .fold(vec![lcp], |acc, g| modp::mul(&acc, g, p));
        let (g, hz) = hensel2(&cur, &fs[i], &h, p, k);
        lifted.push(g.iter().map(|c| c.mod_floor(&modulus)).collect());
        cur = hz.iter().map(|c| c.mod_floor(&modulus)).collect();
    }
    let lc_inv = lc
        .mod_floor(&modulus)
        .modinv(&modulus)
        .expect("lc invertible");
    lifted.push(
        cur.iter()
            .map(|c| (c * &lc_inv).mod_floor(&modulus))
            .collect(),
    );

    let half = &modulus / 2;
    let symmetric = |v: Vec<BigInt>| -> Vec<BigInt> {
        v.into_iter()
            .map(|c| {
                let c = c.mod_floor(&modulus);
                if c > half {
                    c - &modulus
                } else {
                    c
                }
            })
            .collect()
    };
    let mut remaining = lifted;
    let mut rest = f.to_vec();
    let mut out = Vec::new();
    let mut s = 1;
    while 2 * s <= remaining.len() {
        let mut hit = None;
        for combo in combinations(remaining.len(), s) {
            let lcr = rest.last().unwrap().clone();
            let prod = combo.iter().fold(vec![lcr], |acc, &i| {
                zmul(&acc, &remaining[i])
                    .into_iter()
                    .map(|c| c.mod_floor(&modulus))
                    .collect()
            });
            let g = primitive(symmetric(prod));
            if let Some(q) = zdiv(&rest, &g) {
                hit = Some((combo, g, q));
                break;
            }
        }
        match hit {
            Some((combo, g, q)) => {
                out.push(g);
                rest = q;
                remaining = remaining
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !combo.contains(i))
                    .map(|(_, v)| v)
                    .collect();
            }
            None => s += 1,
        }
    }
    if rest.len() > 1 {
        out.push(primitive(rest));
    }
    out
}

/// Trager's algorithm over the top level of the tower.
fn trager(f: &UPoly, t: &Tower) -> Vec<UPoly> {
    let levels = tower_levels(t);
    let top = levels.len();
    let sub = prefix(t, top - 1);
    let alpha = K::generator_at(t, top);
    let m = UPoly::new(
        levels[top - 1]
            .modulus
            .iter()
            .map(|e| K::from_elem(&sub, e.clone()))
            .collect(),
    );
    let dn = f.deg() * m.deg();
    let nodes: Vec<K> = (0..=dn as i64).map(K::int).collect();
    for attempt in 0..64i64 {
        let s = if attempt % 2 == 0 {
            attempt / 2
        } else {
            -(attempt + 1) / 2
        };
        let shift = &K::int(s) * &alpha;
        let g = f.taylor_shift(&-&shift);
        let values: Vec<K> = nodes
            .iter()
            .map(|y| {
                let v = g.eval(y);
                let gz = UPoly::new(
                    v.e.coeffs_at(top)
                        .into_iter()
                        .map(|e| K::from_elem(&sub, e))
                        .collect(),
                );
                m.resultant(&gz)
            })
            .collect();
        let norm = UPoly::interpolate(&nodes, &values);
        if !norm.is_squarefree() {
            continue;
        }
        let mut out = Vec::new();
        for ni in factor_squarefree(&norm, &sub) {
            let h = ni.taylor_shift(&shift);
            let fi = f.gcd(&h);
            if fi.deg() > 0 {
                out.push(fi);
            }
        }
        return out;
    }
    panic!("no square-free norm found for a square-free polynomial");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::adjoin;

    fn prod(fs: &[UPoly]) -> UPoly {
        fs.iter().fold(UPoly::constant(K::one()), |a, g| a.mul(g))
    }

    #[test]
    fn rational_factorization() {
        // (x^2 - 2)(x - 3)(x^3 + x + 1)(2x + 1)
        let parts = [
            UPoly::from_ints(&[-2, 0, 1]),
            UPoly::from_ints(&[-3, 1]),
            UPoly::from_ints(&[1, 1, 0, 1]),
            UPoly::from_ints(&[1, 2]),
        ];
        let f = prod(&parts);
        let fs = factor_squarefree(&f, &None);
        assert_eq!(fs.len(), 4);
        assert_eq!(prod(&fs), f.monic());
        // x^4 + 1 is irreducible over Q but splits modulo every prime.
        let g = UPoly::from_ints(&[1, 0, 0, 0, 1]);
        assert_eq!(factor_squarefree(&g, &None), vec![g.clone()]);
        // Swinnerton-Dyer style product of two quartics.
        let h = UPoly::from_ints(&[1, 0, -10, 0, 1]).mul(&UPoly::from_ints(&[1, 0, 0, 0, 1]));
        assert_eq!(factor_squarefree(&h, &None).len(), 2);
    }

    #[test]
    fn multiplicities() {
        let a = UPoly::from_ints(&[-1, 1]);
        let b = UPoly::from_ints(&[2, 0, 1]);
        let f = a.pow(3).mul(&b.pow(2));
        let mut fs = factor(&f, &None);
        fs.sort_by_key(|(g, _)| g.deg());
        assert_eq!(fs, vec![(a, 3), (b, 2)]);
    }

    #[test]
    fn factorization_over_extension() {
        let t = adjoin(&None, "u", &UPoly::from_ints(&[-2, 0, 1]));
        let f = UPoly::from_ints(&[-2, 0, 1]);
        let fs = factor_squarefree(&f, &t);
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().all(|g| g.deg() == 1));
        // x^4 - 2 over Q(√2) splits as (x^2 - u)(x^2 + u).
        let g = UPoly::from_ints(&[-2, 0, 0, 0, 1]);
        let gs = factor_squarefree(&g, &t);
        assert_eq!(gs.len(), 2);
        assert_eq!(prod(&gs), g);
        // x^2 - 3 stays irreducible over Q(√2).
        assert_eq!(
            factor_squarefree(&UPoly::from_ints(&[-3, 0, 1]), &t).len(),
            1
        );
    }
}
