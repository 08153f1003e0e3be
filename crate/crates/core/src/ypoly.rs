//! Polynomials in `y` over truncated power series in `x`: Newton polygons,
//! edge polynomials, nondegeneracy, resultants and intersection numbers.

use crate::error::{Error, Result};
use crate::field::{join, Tower, UPoly, K};
use crate::par::Exec;
use crate::polygon::{NewtonPolygon, Point};
use crate::series::TruncatedSeries;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct YPolynomial {
    coeffs: Vec<TruncatedSeries>,
}

impl YPolynomial {
    /// Coefficients indexed by the power of `y`.
    pub fn new(mut coeffs: Vec<TruncatedSeries>) -> Self {
        while coeffs.last().is_some_and(TruncatedSeries::is_exact_zero) {
            coeffs.pop();
        }
        YPolynomial { coeffs }
    }

    /// Exact polynomial from terms `c · x^a · y^b`.
    pub fn from_terms<I: IntoIterator<Item = (u32, u32, K)>>(terms: I) -> Self {
        let mut rows: Vec<Vec<(u32, K)>> = Vec::new();
        for (a, b, c) in terms {
            let b = b as usize;
            if rows.len() <= b {
                rows.resize_with(b + 1, Vec::new);
            }
            rows[b].push((a, c));
        }
        Self::new(
            rows.into_iter()
                .map(|r| TruncatedSeries::from_terms(r, None))
                .collect(),
        )
    }

    /// Exact polynomial from integer terms `(c, a, b)` meaning `c x^a y^b`.
    pub fn from_int_terms(terms: &[(i64, u32, u32)]) -> Self {
        Self::from_terms(terms.iter().map(|&(c, a, b)| (a, b, K::int(c))))
    }

    /// The polynomial `y`.
    pub fn y() -> Self {
        Self::from_int_terms(&[(1, 0, 1)])
    }

    pub fn constant(s: TruncatedSeries) -> Self {
        Self::new(vec![s])
    }

    pub fn coeffs(&self) -> &[TruncatedSeries] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> TruncatedSeries {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `y` (0 for the zero polynomial).
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Leading coefficient in `y` is a unit of the series ring.
    pub fn is_unitary(&self) -> bool {
        self.coeffs.last().is_some_and(TruncatedSeries::is_unit)
    }

    pub fn is_exact(&self) -> bool {
        self.coeffs.iter().all(TruncatedSeries::is_exact)
    }

    /// Smallest precision among the coefficients (`None` if exact).
    pub fn min_prec(&self) -> Option<u32> {
        self.coeffs.iter().filter_map(TruncatedSeries::prec).min()
    }

    pub fn tower(&self) -> Tower {
        self.coeffs.iter().fold(None, |t, c| join(&t, &c.tower()))
    }

    /// Exponents `(a, b)` of the known nonzero terms.
    pub fn support(&self) -> Vec<Point> {
        let mut out = Vec::new();
        for (b, c) in self.coeffs.iter().enumerate() {
            for (a, _) in c.terms() {
                out.push((a as u64, b as u64));
            }
        }
        out
    }

    /// All known terms `(a, b, c)`.
    pub fn terms(&self) -> Vec<(u32, u32, K)> {
        let mut out = Vec::new();
        for (b, s) in self.coeffs.iter().enumerate() {
            for (a, c) in s.terms() {
                out.push((a, b as u32, c.clone()));
            }
        }
        out
    }

    pub fn max_x_degree(&self) -> u32 {
        self.coeffs
            .iter()
            .map(TruncatedSeries::max_degree)
            .max()
            .unwrap_or(0)
    }

    /// Lowest total degree of a known term.
    pub fn multiplicity(&self) -> Option<u32> {
        self.terms().iter().map(|(a, b, _)| a + b).min()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|j| self.coeff(j).add(&o.coeff(j))).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(TruncatedSeries::neg).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::default();
        }
        let mut out = vec![TruncatedSeries::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant(TruncatedSeries::one());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn scale(&self, s: &TruncatedSeries) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.mul(s)).collect())
    }

    pub fn truncate(&self, p: u32) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.truncate(p)).collect())
    }

    pub fn derivative_y(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c.scale(&K::int(j as i64)))
                .collect(),
        )
    }

    pub fn derivative_x(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .map(TruncatedSeries::derivative)
                .collect(),
        )
    }

    /// `f(x, s(x))` by Horner's rule.
    pub fn eval_y(&self, s: &TruncatedSeries) -> TruncatedSeries {
        self.coeffs
            .iter()
            .rev()
            .fold(TruncatedSeries::zero(), |acc, c| acc.mul(s).add(c))
    }

    /// Substitute a numeric value for `x` in the known part.
    pub fn specialize_x(&self, x0: &K) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|c| c.eval(x0)).collect())
    }

    /// Exchange the roles of `x` and `y` (exact polynomials only).
    pub fn swap_xy(&self) -> Self {
        Self::from_terms(self.terms().into_iter().map(|(a, b, c)| (b, a, c)))
    }

    /// Apply `x ↦ x + a·y` to an exact polynomial.
    pub fn shear(&self, a: &K) -> Self {
        // x^i y^j ↦ (x + a y)^i y^j
        let x_plus = Self::from_terms([(1, 0, K::one()), (0, 1, a.clone())]);
        let mut powers = vec![Self::constant(TruncatedSeries::one())];
        let mut out = Self::default();
        for (i, j, c) in self.terms() {
            while powers.len() <= i as usize {
                let next = powers.last().unwrap().mul(&x_plus);
                powers.push(next);
            }
            let term = powers[i as usize].mul(&Self::from_terms([(0, j, c)]));
            out = out.add(&term);
        }
        out
    }
}

/// Newton polygon of the known support, certified against hidden terms.
pub fn newton_polygon_of(f: &YPolynomial) -> Result<NewtonPolygon> {
    let support = f.support();
    if support.is_empty() {
        return Err(if f.is_exact() {
            Error::IdenticallyZero
        } else {
            Error::PrecisionInsufficient(None)
        });
    }
    let n = NewtonPolygon::from_support(support)?;
    let mut needed: Option<Option<u64>> = None;
    for (j, c) in f.coeffs().iter().enumerate() {
        let Some(p) = c.prec() else { continue };
        if !c.is_zero_known() {
            continue;
        }
        let j = j as u64;
        if n.contains((p as u64, j)) {
            continue;
        }
        // Smallest abscissa at height j inside the region, if any.
        let need = if j < n.y_offset() {
            None
        } else {
            let mut x = p as u64;
            while !n.contains((x, j)) {
                x += 1;
            }
            Some(x)
        };
        needed = Some(match (needed, need) {
            (Some(None), _) | (_, None) => None,
            (Some(Some(a)), Some(b)) => Some(a.max(b)),
            (None, b) => b,
        });
    }
    match needed {
        Some(p) => Err(Error::PrecisionInsufficient(p)),
        None => Ok(n),
    }
}

/// The compact edges of a polygon as `(upper-left, lower-right)` vertex
/// pairs.
pub fn compact_edges(n: &NewtonPolygon) -> Vec<(Point, Point)> {
    n.vertices().windows(2).map(|w| (w[0], w[1])).collect()
}

/// The sum of the terms of `f` whose exponents lie on the segment `a–b`,
/// which must be a compact edge of `N(f)`.
pub fn edge_polynomial(f: &YPolynomial, a: Point, b: Point) -> Result<YPolynomial> {
    let n = newton_polygon_of(f)?;
    let (a, b) = if a.0 <= b.0 { (a, b) } else { (b, a) };
    if !compact_edges(&n).contains(&(a, b)) {
        return Err(Error::NotAnEdge);
    }
    Ok(YPolynomial::from_terms(f.terms().into_iter().filter(
        |&(i, j, _)| on_segment((i as u64, j as u64), a, b),
    )))
}

fn on_segment(p: Point, a: Point, b: Point) -> bool {
    let (px, py) = (p.0 as i128, p.1 as i128);
    let (ax, ay, bx, by) = (a.0 as i128, a.1 as i128, b.0 as i128, b.1 as i128);
    (px - ax) * (by - ay) == (py - ay) * (bx - ax) && ax <= px && px <= bx
}

/// The univariate polynomial `ψ(w) = Σ c_k w^k` of the terms of `f` at
/// the lattice points `a + k·(ℓ', −h')` of the edge `a–b`, where
/// `(ℓ', h')` is the primitive edge direction.
pub fn edge_psi(f: &YPolynomial, a: Point, b: Point) -> UPoly {
    let (l, h) = (b.0 - a.0, a.1 - b.1);
    let g = num_integer::gcd(l, h);
    let (lp, hp) = (l / g, h / g);
    UPoly::new(
        (0..=g)
            .map(|k| {
                let (i, j) = (a.0 + k * lp, a.1 - k * hp);
                f.coeff(j as usize).coeff(i as u32)
            })
            .collect(),
    )
}

/// Edge slope as a reduced pair `(h', ℓ')`.
fn reduced_slope(a: Point, b: Point) -> (u64, u64) {
    let (l, h) = (b.0 - a.0, a.1 - b.1);
    let g = num_integer::gcd(l, h);
    (h / g, l / g)
}

/// No common zero of the edge polynomials off the coordinate axes.
///
/// Initial forms for a weight vector that is normal to an edge of only one
/// polygon meet a monomial of the other, so only pairs of edges of equal
/// slope can share a zero in the torus; for such a pair, common zeros are
/// common roots of the two `ψ` polynomials.
pub fn is_nondegenerate_pair(f1: &YPolynomial, f2: &YPolynomial) -> Result<bool> {
    let (n1, n2) = (newton_polygon_of(f1)?, newton_polygon_of(f2)?);
    for (a1, b1) in compact_edges(&n1) {
        for (a2, b2) in compact_edges(&n2) {
            if reduced_slope(a1, b1) != reduced_slope(a2, b2) {
                continue;
            }
            let g = edge_psi(f1, a1, b1).gcd(&edge_psi(f2, a2, b2));
            if g.deg() > 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn check_unitary(f: &YPolynomial) -> Result<()> {
    if f.degree() >= 1 && !f.is_unitary() {
        return Err(Error::NotUnitary);
    }
    Ok(())
}

fn min_opt(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(x), Some(y)) => Some(x.min(y)),
    }
}

/// Precision of a determinant built from `m` rows of `a`'s coefficients and
/// `n` rows of `b`'s: an unknown term in one row is multiplied by the
/// smallest orders available in all the other rows.
fn resultant_precision(a: &YPolynomial, b: &YPolynomial, rows_a: u32, rows_b: u32) -> Option<u32> {
    let ord = |f: &YPolynomial| {
        f.coeffs()
            .iter()
            .filter_map(TruncatedSeries::order_bound)
            .min()
            .unwrap_or(0)
    };
    let (oa, ob) = (ord(a), ord(b));
    let pa = a
        .min_prec()
        .map(|p| p + (rows_a.saturating_sub(1)) * oa + rows_b * ob);
    let pb = b
        .min_prec()
        .map(|p| p + rows_a * oa + (rows_b.saturating_sub(1)) * ob);
    let pa = if rows_a == 0 { None } else { pa };
    let pb = if rows_b == 0 { None } else { pb };
    min_opt(pa, pb)
}

/// Interpolation nodes `x0 = 0, 1, 2, …` at which neither leading
/// coefficient vanishes.
fn good_nodes(a: &YPolynomial, b: &YPolynomial, count: usize) -> Vec<K> {
    let (la, lb) = (a.coeff(a.degree()), b.coeff(b.degree()));
    let mut nodes = Vec::with_capacity(count);
    let mut x = 0i64;
    while nodes.len() < count {
        let k = K::int(x);
        if !la.eval(&k).is_zero() && !lb.eval(&k).is_zero() {
            nodes.push(k);
        }
        x += 1;
    }
    nodes
}

/// `Res_y(a, b)` for exact polynomials, by evaluation at `x`-nodes.
fn exact_resultant(exec: Exec, a: &YPolynomial, b: &YPolynomial) -> UPoly {
    let (n, m) = (a.degree() as u32, b.degree() as u32);
    let bound = (m * a.max_x_degree() + n * b.max_x_degree()) as usize;
    let nodes = good_nodes(a, b, bound + 1);
    let values = exec.map(&nodes, |x0| {
        a.specialize_x(x0).resultant(&b.specialize_x(x0))
    });
    UPoly::interpolate(&nodes, &values)
}

/// Sylvester resultant eliminating `y`, with precision tracking.
pub fn sylvester_resultant(p1: &YPolynomial, p2: &YPolynomial) -> Result<TruncatedSeries> {
    sylvester_resultant_with(Exec::default(), p1, p2)
}

pub fn sylvester_resultant_with(
    exec: Exec,
    p1: &YPolynomial,
    p2: &YPolynomial,
) -> Result<TruncatedSeries> {
    check_unitary(p1)?;
    check_unitary(p2)?;
    if p1.is_zero() || p2.is_zero() {
        return Ok(TruncatedSeries::zero());
    }
    let (n, m) = (p1.degree() as u32, p2.degree() as u32);
    if m == 0 {
        return Ok(p2.coeff(0).pow(n));
    }
    if n == 0 {
        return Ok(p1.coeff(0).pow(m));
    }
    let prec = resultant_precision(p1, p2, m, n);
    let (a, b) = (known(p1), known(p2));
    let r = TruncatedSeries::from_upoly(&exact_resultant(exec, &a, &b));
    Ok(match prec {
        Some(p) => r.truncate(p),
        None => r,
    })
}

fn known(f: &YPolynomial) -> YPolynomial {
    YPolynomial::new(f.coeffs().iter().map(TruncatedSeries::known_part).collect())
}

/// `Res_U(P1(T + U), P2(U))` as a polynomial in `T` over the series ring.
pub fn shifted_resultant(p1: &YPolynomial, p2: &YPolynomial) -> Result<YPolynomial> {
    shifted_resultant_with(Exec::default(), p1, p2)
}

pub fn shifted_resultant_with(
    exec: Exec,
    p1: &YPolynomial,
    p2: &YPolynomial,
) -> Result<YPolynomial> {
    check_unitary(p1)?;
    check_unitary(p2)?;
    if p1.coeff(0).is_exact_zero() || p2.coeff(0).is_exact_zero() {
        return Err(Error::DivisibleByY);
    }
    let (n, m) = (p1.degree() as u32, p2.degree() as u32);
    let prec = resultant_precision(p1, p2, m, n);
    let (a, b) = (known(p1), known(p2));
    let deg_t = (n * m) as usize;
    let bound = (m * a.max_x_degree() + n * b.max_x_degree()) as usize;
    let xs = good_nodes(&a, &b, bound + 1);
    let ts: Vec<K> = (0..=deg_t as i64).map(K::int).collect();
    let per_x: Vec<UPoly> = exec.map(&xs, |x0| {
        let (ax, bx) = (a.specialize_x(x0), b.specialize_x(x0));
        let vals: Vec<K> = ts
            .iter()
            .map(|t0| ax.taylor_shift(t0).resultant(&bx))
            .collect();
        UPoly::interpolate(&ts, &vals)
    });
    let coeffs = (0..=deg_t)
        .map(|j| {
            let vals: Vec<K> = per_x.iter().map(|p| p.coeff(j)).collect();
            let s = TruncatedSeries::from_upoly(&UPoly::interpolate(&xs, &vals));
            match prec {
                Some(p) => s.truncate(p),
                None => s,
            }
        })
        .collect();
    Ok(YPolynomial::new(coeffs))
}

/// `ord_x Res_y(f1, f2)`.
pub fn intersection_number(f1: &YPolynomial, f2: &YPolynomial) -> Result<u64> {
    let r = sylvester_resultant(f1, f2)?;
    r.order().map(u64::from).ok_or(Error::NotIsolated)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygon::poly;

    fn yp(t: &[(i64, u32, u32)]) -> YPolynomial {
        YPolynomial::from_int_terms(t)
    }

    #[test]
    fn polygon_examples() {
        assert_eq!(
            newton_polygon_of(&yp(&[(1, 0, 2), (-1, 3, 0)])).unwrap(),
            poly(&[(3, 2)])
        );
        let f = yp(&[(1, 0, 1), (-1, 1, 0)])
            .mul(&yp(&[(1, 0, 1), (-1, 2, 0)]))
            .mul(&yp(&[(1, 0, 2), (-1, 3, 0)]));
        assert_eq!(
            newton_polygon_of(&f).unwrap(),
            poly(&[(1, 1), (2, 1), (3, 2)])
        );
        // y - x where the x-coefficient is only known modulo x^1.
        let g = YPolynomial::new(vec![
            TruncatedSeries::from_terms(Vec::new(), Some(1)),
            TruncatedSeries::one(),
        ]);
        assert_eq!(
            newton_polygon_of(&g),
            Err(Error::PrecisionInsufficient(None))
        );
        // y^2 + O(x) y + x^3: the hidden point (1, 1) lies below the edge.
        let h = YPolynomial::new(vec![
            TruncatedSeries::monomial(K::one(), 3),
            TruncatedSeries::from_terms(Vec::new(), Some(1)),
            TruncatedSeries::one(),
        ]);
        assert_eq!(
            newton_polygon_of(&h),
            Err(Error::PrecisionInsufficient(Some(2)))
        );
    }

    #[test]
    fn edge_polynomial_examples() {
        let f = yp(&[(1, 0, 2), (-1, 3, 0), (1, 4, 0)]);
        assert_eq!(
            edge_polynomial(&f, (0, 2), (3, 0)).unwrap(),
            yp(&[(1, 0, 2), (-1, 3, 0)])
        );
        let g = yp(&[(1, 0, 2), (2, 1, 1), (1, 2, 0), (1, 3, 0)]);
        assert_eq!(
            edge_polynomial(&g, (0, 2), (2, 0)).unwrap(),
            yp(&[(1, 0, 2), (2, 1, 1), (1, 2, 0)])
        );
        assert_eq!(edge_polynomial(&f, (0, 2), (4, 0)), Err(Error::NotAnEdge));
    }

    #[test]
    fn nondegeneracy_examples() {
        let a = yp(&[(1, 0, 1), (-1, 2, 0)]);
        assert!(is_nondegenerate_pair(&a, &yp(&[(1, 0, 2), (1, 3, 0)])).unwrap());
        let l = yp(&[(1, 0, 1), (-1, 1, 0)]);
        assert!(!is_nondegenerate_pair(&l, &l).unwrap());
        assert!(is_nondegenerate_pair(&l, &yp(&[(1, 0, 1), (-2, 1, 0)])).unwrap());
    }

    #[test]
    fn resultant_examples() {
        let r = sylvester_resultant(&yp(&[(1, 0, 1), (-1, 2, 0)]), &yp(&[(1, 0, 2), (-1, 3, 0)]))
            .unwrap();
        assert_eq!(r.order(), Some(3));
        let f = yp(&[(1, 0, 2), (-1, 3, 0)]);
        assert!(sylvester_resultant(&f, &f).unwrap().is_exact_zero());
        assert_eq!(intersection_number(&f, &f), Err(Error::NotIsolated));
        assert_eq!(
            intersection_number(&yp(&[(1, 0, 1), (-1, 2, 0)]), &yp(&[(1, 0, 2), (1, 3, 0)])),
            Ok(3)
        );
        assert_eq!(
            intersection_number(&yp(&[(1, 0, 1)]), &yp(&[(1, 1, 0)])),
            Ok(1)
        );
    }

    #[test]
    fn shifted_resultant_examples() {
        let p1 = yp(&[(1, 0, 1), (-1, 1, 0)]);
        let p2 = yp(&[(1, 0, 1), (-2, 1, 0)]);
        let s = shifted_resultant(&p1, &p2).unwrap();
        assert_eq!(s.degree(), 1);
        assert_eq!(newton_polygon_of(&s).unwrap(), poly(&[(1, 1)]));
        assert_eq!(s.coeff(0), sylvester_resultant(&p1, &p2).unwrap());
        let d = shifted_resultant(&p1, &p1).unwrap();
        assert!(d.coeff(0).is_exact_zero());
        assert_eq!(d.degree(), 1);
    }
}
