//! Newton polyhedra in dimension `d ≤ 4`: exact covolumes, mixed covolumes
//! and multiplicities of monomial ideals.
//!
//! A polyhedron is stored by its vertices together with its facets
//! `n · x ≥ c`, where `n` is a primitive nonnegative integer normal. Volumes
//! are computed exactly with Lasserre's recursion over the H-representation.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::num::{qu, rank, solve, Q};
use crate::par::Exec;
use crate::polygon::NewtonPolygon;

pub const MAX_DIM: usize = 4;

/// A supporting hyperplane `normal · x = rhs` of a facet; the region lies
/// on the side `normal · x ≥ rhs`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Facet {
    pub normal: Vec<u64>,
    pub rhs: u64,
}

impl Facet {
    /// Compact facets are the ones whose normal has no zero entry.
    pub fn is_compact(&self) -> bool {
        self.normal.iter().all(|&n| n > 0)
    }

    fn eval(&self, p: &[u64]) -> u64 {
        self.normal.iter().zip(p).map(|(a, b)| a * b).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    dim: usize,
    vertices: Vec<Vec<u64>>,
    facets: Vec<Facet>,
}

impl NewtonPolyhedron {
    pub fn from_support(dim: usize, points: &[Vec<u64>]) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ParameterOutOfRange(
                "dimension must be positive".into(),
            ));
        }
        if dim > MAX_DIM {
            return Err(Error::DimensionTooLarge(dim));
        }
        if points.is_empty() {
            return Err(Error::EmptySupport);
        }
        if let Some(p) = points.iter().find(|p| p.len() != dim) {
            return Err(Error::DimensionMismatch(dim, p.len()));
        }
        let mut pts: Vec<Vec<u64>> = points.to_vec();
        pts.sort();
        pts.dedup();
        // Drop points dominated componentwise by another point.
        let minimal: Vec<Vec<u64>> = pts
            .iter()
            .filter(|p| {
                !pts.iter()
                    .any(|o| o != *p && o.iter().zip(p.iter()).all(|(a, b)| a <= b))
            })
            .cloned()
            .collect();
        let facets = enumerate_facets(dim, &minimal);
        let vertices = minimal
            .into_iter()
            .filter(|v| {
                let tight: Vec<Vec<Q>> = facets
                    .iter()
                    .filter(|f| f.eval(v) == f.rhs)
                    .map(|f| f.normal.iter().map(|&n| qu(n)).collect())
                    .collect();
                rank(tight) == dim
            })
            .collect();
        Ok(NewtonPolyhedron {
            dim,
            vertices,
            facets,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<u64>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Every coordinate axis meets the region.
    pub fn is_finite_volume(&self) -> bool {
        (0..self.dim).all(|i| {
            self.vertices
                .iter()
                .any(|v| v.iter().enumerate().all(|(j, &c)| j == i || c == 0))
        })
    }

    pub fn contains(&self, p: &[u64]) -> bool {
        self.facets.iter().all(|f| f.eval(p) >= f.rhs)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        let mut pts = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for a in &self.vertices {
            for b in &other.vertices {
                pts.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        Self::from_support(self.dim, &pts)
    }

    /// The homothetic image `k · N`; `k = 0` gives the whole orthant.
    pub fn scale(&self, k: u64) -> Self {
        let pts: Vec<Vec<u64>> = self
            .vertices
            .iter()
            .map(|v| v.iter().map(|c| c * k).collect())
            .collect();
        Self::from_support(self.dim, &pts).expect("scaling keeps the support valid")
    }

    fn max_coordinate(&self) -> u64 {
        self.vertices
            .iter()
            .flat_map(|v| v.iter().copied())
            .max()
            .unwrap_or(0)
    }

    /// Region constraints in the form `a · x ≤ b`, cut by the box `[0, M]^d`.
    fn boxed_rows(&self) -> Vec<Row> {
        let m = qu(self.max_coordinate());
        let mut rows: Vec<Row> = self
            .facets
            .iter()
            .map(|f| Row {
                a: f.normal.iter().map(|&n| -qu(n)).collect(),
                b: -qu(f.rhs),
            })
            .collect();
        for i in 0..self.dim {
            let mut e = vec![Q::zero(); self.dim];
            e[i] = Q::one();
            rows.push(Row {
                a: e.clone(),
                b: m.clone(),
            });
            e[i] = -Q::one();
            rows.push(Row { a: e, b: Q::zero() });
        }
        rows
    }

    /// Volume of the complement of the region in the positive orthant.
    pub fn covolume(&self) -> Result<Q> {
        if !self.is_finite_volume() {
            return Err(Error::InfiniteVolume);
        }
        let m = qu(self.max_coordinate());
        let cube = num_traits::pow(m, self.dim);
        Ok(cube - volume(self.boxed_rows(), self.dim))
    }

    /// `(d · covolume, Σ h_i Vol(σ_i))` over the compact facets `σ_i`.
    ///
    /// For a facet `n · x = c` the product of the Euclidean distance
    /// `c/|n|` with the facet volume equals `c/n_j` times the volume of the
    /// projection of the facet along the `j`-th axis, which is rational.
    pub fn face_identity_check(&self) -> Result<(Q, Q)> {
        let lhs = self.covolume()? * qu(self.dim as u64);
        let rows = self.boxed_rows();
        let mut rhs = Q::zero();
        for f in self.facets.iter().filter(|f| f.is_compact()) {
            let mut sys = rows.clone();
            sys.push(Row {
                a: f.normal.iter().map(|&n| qu(n)).collect(),
                b: qu(f.rhs),
            });
            let i = sys.len() - 1;
            let j = 0;
            let face = volume(project(&sys, i, j), self.dim - 1);
            rhs += qu(f.rhs) / qu(f.normal[j]) * face;
        }
        Ok((lhs, rhs))
    }

    /// `d! · covolume`, the multiplicity of the monomial ideal generated by
    /// the support.
    pub fn monomial_multiplicity(&self) -> Result<u64> {
        let v = self.covolume()? * factorial(self.dim);
        if !v.is_integer() {
            return Err(Error::NonIntegralMultiplicity(v.to_string()));
        }
        v.to_integer()
            .to_u64()
            .ok_or_else(|| Error::NonIntegralMultiplicity(v.to_string()))
    }

    /// Agreement with the plane polygon of the same support (`d = 2`).
    pub fn to_polygon(&self) -> Option<NewtonPolygon> {
        if self.dim != 2 {
            return None;
        }
        NewtonPolygon::from_support(self.vertices.iter().map(|v| (v[0], v[1]))).ok()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&Wire {
            dim: self.dim,
            generators: self.vertices.clone(),
        })
        .expect("polyhedron serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let w: Wire = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_support(w.dim, &w.generators)
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    dim: usize,
    generators: Vec<Vec<u64>>,
}

fn factorial(n: usize) -> Q {
    (1..=n as u64).map(qu).fold(Q::one(), |a, b| a * b)
}

/// Determinant of a small integer matrix by cofactor expansion.
fn det(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|c| {
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != c)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let s = if c % 2 == 0 { 1 } else { -1 };
                s * m[0][c] * det(&minor)
            })
            .sum(),
    }
}

/// A vector orthogonal to the `d − 1` given vectors of `Z^d`.
fn cross(vectors: &[Vec<i128>], d: usize) -> Vec<i128> {
    (0..d)
        .map(|k| {
            let minor: Vec<Vec<i128>> = vectors
                .iter()
                .map(|v| {
                    v.iter()
                        .enumerate()
                        .filter(|&(i, _)| i != k)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let s = if k % 2 == 0 { 1 } else { -1 };
            s * det(&minor)
        })
        .collect()
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

/// All facets of `conv(points) + R_{≥0}^d`. A facet hyperplane is spanned
/// by some generators together with the coordinate directions it contains.
fn enumerate_facets(d: usize, points: &[Vec<u64>]) -> Vec<Facet> {
    let mut found: BTreeSet<Facet> = BTreeSet::new();
    for mask in 0u32..(1 << d) {
        let zeros: Vec<usize> = (0..d).filter(|&j| mask & (1 << j) != 0).collect();
        if zeros.len() >= d {
            continue;
        }
        let k = d - zeros.len();
        for combo in combinations(points.len(), k) {
            let base: Vec<i128> = points[combo[0]].iter().map(|&x| x as i128).collect();
            let mut vs: Vec<Vec<i128>> = combo[1..]
                .iter()
                .map(|&i| {
                    points[i]
                        .iter()
                        .zip(&base)
                        .map(|(&x, &b)| x as i128 - b)
                        .collect()
                })
                .collect();
            for &j in &zeros {
                let mut e = vec![0i128; d];
                e[j] = 1;
                vs.push(e);
            }
            let mut n = cross(&vs, d);
            if n.iter().all(|&x| x == 0) {
                continue;
            }
            if n.iter().any(|&x| x < 0) && n.iter().any(|&x| x > 0) {
                continue;
            }
            if n.iter().all(|&x| x <= 0) {
                n.iter_mut().for_each(|x| *x = -*x);
            }
            let g = n.iter().fold(0i128, |a, &b| a.gcd(&b));
            let normal: Vec<u64> = n.iter().map(|&x| (x / g) as u64).collect();
            let facet = Facet { normal, rhs: 0 };
            let c = points.iter().map(|p| facet.eval(p)).min().unwrap();
            if facet.eval(&points[combo[0]]) == c {
                found.insert(Facet { rhs: c, ..facet });
            }
        }
    }
    found.into_iter().collect()
}

/// A half-space `a · x ≤ b`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Row {
    a: Vec<Q>,
    b: Q,
}

/// Scale rows so the first nonzero coefficient has absolute value 1 and
/// drop duplicates and trivial rows; `None` if some row is infeasible.
fn normalize(rows: Vec<Row>) -> Option<Vec<Row>> {
    let mut out: BTreeSet<Row> = BTreeSet::new();
    for r in rows {
        match r.a.iter().find(|c| !c.is_zero()) {
            None => {
                if r.b.is_negative() {
                    return None;
                }
            }
            Some(lead) => {
                let s = lead.abs().recip();
                out.insert(Row {
                    a: r.a.iter().map(|c| c * &s).collect(),
                    b: &r.b * &s,
                });
            }
        }
    }
    Some(out.into_iter().collect())
}

/// The system restricted to the hyperplane of row `i`, with coordinate `j`
/// eliminated.
fn project(rows: &[Row], i: usize, j: usize) -> Vec<Row> {
    let pivot = &rows[i];
    let aij = &pivot.a[j];
    rows.iter()
        .enumerate()
        .filter(|&(k, _)| k != i)
        .map(|(_, r)| {
            let f = &r.a[j] / aij;
            Row {
                a: r.a
                    .iter()
                    .zip(&pivot.a)
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, (x, p))| x - &f * p)
                    .collect(),
                b: &r.b - &f * &pivot.b,
            }
        })
        .collect()
}

/// Lasserre's recursion: `Vol_d = (1/d) Σ_i b_i/|a_ij| · Vol_{d−1}(π_j F_i)`.
fn volume(rows: Vec<Row>, d: usize) -> Q {
    let Some(rows) = normalize(rows) else {
        return Q::zero();
    };
    if d == 0 {
        return Q::one();
    }
    if d == 1 {
        let mut lo: Option<Q> = None;
        let mut hi: Option<Q> = None;
        for r in &rows {
            let v = &r.b / &r.a[0];
            if r.a[0].is_positive() {
                hi = Some(hi.map_or(v.clone(), |h| h.min(v)));
            } else {
                lo = Some(lo.map_or(v.clone(), |l| l.max(v)));
            }
        }
        let (lo, hi) = (lo.expect("bounded below"), hi.expect("bounded above"));
        return if hi > lo { hi - lo } else { Q::zero() };
    }
    let mut total = Q::zero();
    for (i, r) in rows.iter().enumerate() {
        if r.b.is_zero() {
            continue;
        }
        let j = r.a.iter().position(|c| !c.is_zero()).unwrap();
        let face = volume(project(&rows, i, j), d - 1);
        if !face.is_zero() {
            total += &r.b / r.a[j].abs() * face;
        }
    }
    total / qu(d as u64)
}

/// All exponent vectors of length `r` and total degree `d`.
fn compositions(r: usize, d: usize) -> Vec<Vec<usize>> {
    if r == 1 {
        return vec![vec![d]];
    }
    (0..=d)
        .rev()
        .flat_map(|first| {
            compositions(r - 1, d - first)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

/// Covolume of `Σ λ_i N_i` for nonnegative integer weights.
pub fn weighted_covolume(ns: &[NewtonPolyhedron], lambda: &[u64]) -> Result<Q> {
    let d = ns[0].dim;
    let mut acc = NewtonPolyhedron::from_support(d, &[vec![0; d]])?;
    for (n, &l) in ns.iter().zip(lambda) {
        if l > 0 {
            acc = acc.sum(&n.scale(l))?;
        }
    }
    acc.covolume()
}

/// The mixed covolume `Vol(N_1^[α_1], …, N_r^[α_r])`: the coefficient of
/// `λ^α` in `covolume(Σ λ_i N_i)`, multiplied by `α!/d!`.
pub fn mixed_covolume(ns: &[NewtonPolyhedron], alpha: &[usize]) -> Result<Q> {
    mixed_covolume_with(Exec::default(), ns, alpha)
}

pub fn mixed_covolume_with(exec: Exec, ns: &[NewtonPolyhedron], alpha: &[usize]) -> Result<Q> {
    if ns.is_empty() || ns.len() != alpha.len() {
        return Err(Error::IndexMismatch);
    }
    let d = ns[0].dim;
    if let Some(n) = ns.iter().find(|n| n.dim != d) {
        return Err(Error::DimensionMismatch(d, n.dim));
    }
    if alpha.iter().sum::<usize>() != d {
        return Err(Error::IndexMismatch);
    }
    if ns.iter().any(|n| !n.is_finite_volume()) {
        return Err(Error::InfiniteVolume);
    }
    let r = ns.len();
    let monomials = compositions(r, d);
    // Evaluation points (β, 1) with |β| ≤ d are unisolvent for the
    // dehomogenized polynomial.
    let points: Vec<Vec<u64>> = (0..=d)
        .flat_map(|s| compositions(r, s))
        .filter(|c| c[r - 1] == 0)
        .map(|c| {
            let mut l: Vec<u64> = c.iter().map(|&x| x as u64).collect();
            l[r - 1] = 1;
            l
        })
        .collect();
    debug_assert_eq!(points.len(), monomials.len());
    let values = exec.map(&points, |l| weighted_covolume(ns, l));
    let values = values.into_iter().collect::<Result<Vec<Q>>>()?;
    let matrix: Vec<Vec<Q>> = points
        .iter()
        .map(|l| {
            monomials
                .iter()
                .map(|m| {
                    let v: u64 = l.iter().zip(m).map(|(&b, &e)| b.pow(e as u32)).product();
                    qu(v)
                })
                .collect()
        })
        .collect();
    let coeffs = solve(matrix, values).expect("interpolation points are unisolvent");
    let idx = monomials.iter().position(|m| m == alpha).unwrap();
    let alpha_fact: Q = alpha
        .iter()
        .map(|&a| factorial(a))
        .fold(Q::one(), |x, y| x * y);
    Ok(&coeffs[idx] * alpha_fact / factorial(d))
}

/// Minimal elements of the `k`-fold sums of the generators.
fn power_support(d: usize, gens: &[Vec<u64>], k: u64) -> Vec<Vec<u64>> {
    let minimal = |pts: Vec<Vec<u64>>| -> Vec<Vec<u64>> {
        let mut pts = pts;
        pts.sort();
        pts.dedup();
        pts.iter()
            .filter(|p| {
                !pts.iter()
                    .any(|o| o != *p && o.iter().zip(p.iter()).all(|(a, b)| a <= b))
            })
            .cloned()
            .collect()
    };
    let mut cur = vec![vec![0u64; d]];
    for _ in 0..k {
        let mut next = Vec::with_capacity(cur.len() * gens.len());
        for a in &cur {
            for g in gens {
                next.push(a.iter().zip(g).map(|(x, y)| x + y).collect());
            }
        }
        cur = minimal(next);
    }
    cur
}

/// Number of monomials outside the ideal generated by `x^s`, `s ∈ support`.
fn colength(exec: Exec, d: usize, support: &[Vec<u64>]) -> u64 {
    let bound: Vec<u64> = (0..d)
        .map(|i| {
            support
                .iter()
                .filter(|s| s.iter().enumerate().all(|(j, &c)| j == i || c == 0))
                .map(|s| s[i])
                .min()
                .expect("finite colength")
        })
        .collect();
    if d == 1 {
        return bound[0];
    }
    let last = d - 1;
    let count_slice = |a0: usize| -> u64 {
        let a0 = a0 as u64;
        let mut total = 0u64;
        let mut a = vec![0u64; last];
        a[0] = a0;
        loop {
            let threshold = support
                .iter()
                .filter(|s| s[..last].iter().zip(&a).all(|(x, y)| x <= y))
                .map(|s| s[last])
                .min()
                .unwrap_or(bound[last]);
            total += threshold;
            // Advance the odometer over coordinates 1..last.
            let mut i = 1;
            loop {
                if i >= last {
                    return total;
                }
                a[i] += 1;
                if a[i] < bound[i] {
                    break;
                }
                a[i] = 0;
                i += 1;
            }
        }
    };
    exec.sum_range(0..bound[0] as usize, count_slice)
}

/// The multiplicity of the monomial ideal with the given generators, read
/// off the growth of `colength(n^k)` for `k ≤ kmax` by `d`-fold finite
/// differencing.
pub fn colength_growth_oracle(d: usize, gens: &[Vec<u64>], kmax: u64) -> Result<u64> {
    colength_growth_oracle_with(Exec::default(), d, gens, kmax)
}

pub fn colength_growth_oracle_with(
    exec: Exec,
    d: usize,
    gens: &[Vec<u64>],
    kmax: u64,
) -> Result<u64> {
    if kmax < 2 * d as u64 + 2 {
        return Err(Error::ParameterOutOfRange(format!(
            "kmax must be at least {}",
            2 * d + 2
        )));
    }
    let n = NewtonPolyhedron::from_support(d, gens)?;
    if !n.is_finite_volume() {
        return Err(Error::InfiniteVolume);
    }
    let mut seq: Vec<BigInt> = vec![BigInt::zero()];
    for k in 1..=kmax {
        let support = power_support(d, gens, k);
        seq.push(BigInt::from(colength(exec, d, &support)));
    }
    for _ in 0..d {
        seq = seq.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    let tail = &seq[seq.len() - 3..];
    if tail.iter().any(|v| v != &tail[0]) || tail[0].is_negative() {
        return Err(Error::NonPolynomialGrowth);
    }
    tail[0].to_u64().ok_or(Error::NonPolynomialGrowth)
}

/// Decide `e12^{1/d} ≤ e1^{1/d} + e2^{1/d}` for positive integers.
///
/// Integer `d`-th roots of the values scaled by `2^{d·P}` bracket the real
/// roots within `2^{-P}`; a bracket that cannot separate the two sides is
/// read as equality.
pub fn minkowski_inequality_holds(e1: u64, e2: u64, e12: u64, d: u32) -> bool {
    const P: u32 = 256;
    let root = |v: u64| -> (BigInt, BigInt) {
        let scaled = BigInt::from(v) << (d * P) as usize;
        let r = scaled.nth_root(d);
        let exact = num_traits::pow(r.clone(), d as usize) == scaled;
        let hi = if exact { r.clone() } else { &r + 1 };
        (r, hi)
    };
    let (lo1, hi1) = root(e1);
    let (lo2, hi2) = root(e2);
    let (lo12, hi12) = root(e12);
    if hi12 <= lo1.clone() + lo2.clone() {
        return true;
    }
    if lo12 > hi1 + hi2 {
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{q, qr};

    fn ph(d: usize, pts: &[&[u64]]) -> NewtonPolyhedron {
        NewtonPolyhedron::from_support(d, &pts.iter().map(|p| p.to_vec()).collect::<Vec<_>>())
            .unwrap()
    }

    fn degree_two_3d() -> NewtonPolyhedron {
        let mut pts = Vec::new();
        for a in 0..=2u64 {
            for b in 0..=2 - a {
                pts.push(vec![a, b, 2 - a - b]);
            }
        }
        NewtonPolyhedron::from_support(3, &pts).unwrap()
    }

    #[test]
    fn support_examples() {
        let p = ph(2, &[&[0, 2], &[3, 0]]);
        assert_eq!(p.to_polygon().unwrap(), crate::polygon::poly(&[(3, 2)]));
        assert_eq!(p.covolume().unwrap(), q(3));
        let s = degree_two_3d();
        assert_eq!(s.facets().iter().filter(|f| f.is_compact()).count(), 1);
        assert_eq!(s.vertices().len(), 3);
        assert!(!ph(3, &[&[1, 0, 0]]).is_finite_volume());
        assert_eq!(
            NewtonPolyhedron::from_support(5, &[vec![0; 5]]),
            Err(Error::DimensionTooLarge(5))
        );
    }

    #[test]
    fn covolume_examples() {
        assert_eq!(degree_two_3d().covolume().unwrap(), qr(4, 3));
        let unit = ph(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(unit.covolume().unwrap(), qr(1, 6));
        let n = ph(3, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 1], &[1, 1, 0]]);
        assert_eq!(
            n.sum(&n).unwrap().covolume().unwrap(),
            n.covolume().unwrap() * q(8)
        );
        let d4 = ph(
            4,
            &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]],
        );
        assert_eq!(d4.covolume().unwrap(), qr(1, 24));
        assert_eq!(ph(3, &[&[1, 0, 0]]).covolume(), Err(Error::InfiniteVolume));
    }

    #[test]
    fn mixed_examples() {
        let a = ph(2, &[&[0, 1], &[2, 0]]);
        let b = ph(2, &[&[0, 2], &[1, 0]]);
        assert_eq!(
            mixed_covolume(&[a.clone(), b.clone()], &[1, 1]).unwrap(),
            qr(1, 2)
        );
        assert_eq!(
            mixed_covolume(&[a.clone(), b.clone()], &[2, 0]).unwrap(),
            q(1)
        );
        assert_eq!(
            mixed_covolume(&[a.clone(), a.clone()], &[1, 1]).unwrap(),
            q(1)
        );
        assert_eq!(
            mixed_covolume(&[a.clone(), b], &[1, 0]),
            Err(Error::IndexMismatch)
        );
    }

    #[test]
    fn face_identity_examples() {
        let (l, r) = ph(2, &[&[0, 1], &[2, 0]]).face_identity_check().unwrap();
        assert_eq!((l.clone(), r), (q(2), q(2)));
        let (l, r) = ph(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])
            .face_identity_check()
            .unwrap();
        assert_eq!((l.clone(), r), (qr(1, 2), qr(1, 2)));
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(
            ph(2, &[&[2, 0], &[0, 3]]).monomial_multiplicity().unwrap(),
            6
        );
        assert_eq!(degree_two_3d().monomial_multiplicity().unwrap(), 8);
        assert_eq!(
            ph(2, &[&[1, 0], &[0, 1]]).monomial_multiplicity().unwrap(),
            1
        );
        assert_eq!(
            colength_growth_oracle(2, &[vec![2, 0], vec![0, 3]], 30).unwrap(),
            6
        );
        let m2: Vec<Vec<u64>> = degree_two_3d().vertices().to_vec();
        assert_eq!(colength_growth_oracle(3, &m2, 8).unwrap(), 8);
        assert_eq!(
            colength_growth_oracle(2, &[vec![1, 0], vec![0, 1]], 6).unwrap(),
            1
        );
    }

    #[test]
    fn minkowski_decision() {
        assert!(minkowski_inequality_holds(1, 1, 4, 2));
        assert!(minkowski_inequality_holds(6, 8, 27, 3));
        assert!(!minkowski_inequality_holds(1, 1, 5, 2));
    }
}
