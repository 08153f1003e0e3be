//! Newton–Puiseux expansion of the roots `y(x)` of `f ∈ K[[x]][y]`.
//!
//! Branches are rational parameterizations `x = X·t^e`, `y = Y(t)` with
//! `X` and the coefficients of `Y` in a finite extension of the input
//! field. A branch stands for `conj` Galois-conjugate parameterizations,
//! each of which accounts for `e` roots.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::field::{
    adjoin, describe_tower, factor, join, tower_degree, tower_levels, Tower, UPoly, K,
};
use crate::num::Q;
use crate::series::TruncatedSeries;
use crate::text::{coeff_text, parse_series, parse_tower};
use crate::ypoly::{compact_edges, edge_psi, newton_polygon_of, sylvester_resultant, YPolynomial};

/// Default bound on the degree of the field tower over `Q`.
pub const DEFAULT_TOWER_BOUND: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PuiseuxBranch {
    /// Ramification: `x = x_scale · t^e`.
    pub e: u32,
    pub x_scale: K,
    pub y: TruncatedSeries,
    /// Number of conjugate parameterizations this branch represents.
    pub conj: u32,
    /// Field of definition of the coefficients.
    pub tower: Tower,
}

impl PuiseuxBranch {
    /// `ord_t(y)/e`; `None` for the exact branch `y = 0`.
    pub fn valuation(&self) -> Option<Q> {
        if self.y.is_exact_zero() {
            return None;
        }
        let o = self.y.order().unwrap_or_else(|| self.y.prec().unwrap());
        Some(Q::new(o.into(), self.e.into()))
    }

    pub fn passes_through_origin(&self) -> bool {
        self.y.order_bound().is_none_or(|o| o >= 1)
    }

    /// Number of roots of `f` this branch accounts for.
    pub fn root_count(&self) -> u32 {
        self.e * self.conj
    }
}

impl fmt::Display for PuiseuxBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = match self.e {
            1 => "t".to_string(),
            e => format!("t^{e}"),
        };
        let x = if self.x_scale.is_one() {
            t
        } else {
            format!("{}*{t}", coeff_text(&self.x_scale))
        };
        write!(
            f,
            "x = {x}; y = {}; conj = {}; field = {}",
            self.y.display_in("t"),
            self.conj,
            describe_tower(&self.tower)
        )
    }
}

/// Parse the output of `Display`.
pub fn parse_branch(s: &str) -> Result<PuiseuxBranch> {
    let mut parts = [None; 4];
    for item in s.split(';') {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected 'key = value' in '{item}'")))?;
        let slot = match k.trim() {
            "x" => 0,
            "y" => 1,
            "conj" => 2,
            "field" => 3,
            other => return Err(Error::Parse(format!("unknown branch field '{other}'"))),
        };
        parts[slot] = Some(v.trim());
    }
    let [Some(x), Some(y), Some(conj), Some(field)] = parts else {
        return Err(Error::Parse("branch needs x, y, conj and field".into()));
    };
    let tower = parse_tower(field)?;
    let xs = parse_series(x, "t", &tower)?;
    let mut terms = xs.terms();
    let (e, x_scale) = match (terms.next(), terms.next(), xs.prec()) {
        (Some((e, c)), None, None) if e >= 1 => (e, c.clone()),
        _ => return Err(Error::Parse("x must be a single monomial in t".into())),
    };
    Ok(PuiseuxBranch {
        e,
        x_scale,
        y: parse_series(y, "t", &tower)?,
        conj: conj
            .parse()
            .map_err(|_| Error::Parse(format!("bad conjugacy '{conj}'")))?,
        tower,
    })
}

#[derive(Clone, Debug)]
pub struct PuiseuxOptions {
    /// Precision in `t` of every output series; `None` selects
    /// `4 · deg_y f · max(length N(f), 1)`.
    pub t_precision: Option<u32>,
    pub max_tower_degree: usize,
    /// Skip the roots with `y(0) != 0`.
    pub origin_only: bool,
}

impl Default for PuiseuxOptions {
    fn default() -> Self {
        PuiseuxOptions {
            t_precision: None,
            max_tower_degree: DEFAULT_TOWER_BOUND,
            origin_only: false,
        }
    }
}

/// Default `t` precision for `f`.
pub fn default_t_precision(f: &YPolynomial) -> u32 {
    let len = newton_polygon_of(f)
        .ok()
        .and_then(|n| n.length().finite())
        .unwrap_or(1)
        .max(1) as u32;
    4 * f.degree().max(1) as u32 * len
}

pub fn puiseux_expand(f: &YPolynomial, t_precision: u32) -> Result<Vec<PuiseuxBranch>> {
    puiseux_expand_with(
        f,
        &PuiseuxOptions {
            t_precision: Some(t_precision),
            ..Default::default()
        },
    )
}

/// Partial parameterization `x = X·s^e`, `y = prefix(s) + κ·s^k·y1`, where
/// `f` is the transformed polynomial in `(s, y1)`.
#[derive(Clone)]
struct Node {
    f: YPolynomial,
    x_scale: K,
    e: u32,
    prefix: TruncatedSeries,
    kappa: K,
    k: u32,
    conj: u32,
    tower: Tower,
}

struct Ctx {
    n: u32,
    bound: usize,
}

pub fn puiseux_expand_with(f: &YPolynomial, opts: &PuiseuxOptions) -> Result<Vec<PuiseuxBranch>> {
    if f.degree() == 0 {
        return Ok(Vec::new());
    }
    if !f.is_unitary() {
        return Err(Error::NotUnitary);
    }
    let disc = sylvester_resultant(f, &f.derivative_y())?;
    if disc.is_exact_zero() {
        return Err(Error::NotSquareFree);
    }
    if disc.is_zero_known() {
        return Err(Error::PrecisionInsufficient(None));
    }
    let ctx = Ctx {
        n: opts.t_precision.unwrap_or_else(|| default_t_precision(f)),
        bound: opts.max_tower_degree,
    };
    if tower_degree(&f.tower()) > ctx.bound {
        return Err(Error::ExtensionTooDeep {
            degree: tower_degree(&f.tower()),
            bound: ctx.bound,
        });
    }
    let root = Node {
        f: f.clone(),
        x_scale: K::one(),
        e: 1,
        prefix: TruncatedSeries::zero(),
        kappa: K::one(),
        k: 0,
        conj: 1,
        tower: f.tower(),
    };
    let mut out = Vec::new();
    // Roots with y(0) != 0: roots of f(0, y) / y^j0.
    let f0 = UPoly::new(f.coeffs().iter().map(|c| c.coeff(0)).collect());
    let j0 = f0.coeffs().iter().position(|c| !c.is_zero()).unwrap_or(0);
    let g0 = UPoly::new(f0.coeffs()[j0..].to_vec());
    if g0.deg() > 0 && !opts.origin_only {
        for (phi, m) in factor(&g0, &root.tower) {
            let (tower, c, d) = root_of(&phi, &root.tower, ctx.bound)?;
            let child = Node {
                f: substitute(f, &K::one(), 1, 0, &c, 0),
                prefix: TruncatedSeries::constant(c),
                conj: d,
                tower,
                ..root.clone()
            };
            descend(child, m, &ctx, &mut out)?;
        }
    }
    expand_node(root, &ctx, &mut out)?;
    sort_branches(&mut out);
    Ok(out)
}

fn sort_branches(out: &mut [PuiseuxBranch]) {
    out.sort_by(|a, b| {
        match (a.valuation(), b.valuation()) {
            (None, None) => Ordering::Equal,
            (None, _) => Ordering::Less,
            (_, None) => Ordering::Greater,
            (Some(x), Some(y)) => y.cmp(&x),
        }
        .then_with(|| a.y.display_in("t").cmp(&b.y.display_in("t")))
    });
}

fn descend(node: Node, m: u32, ctx: &Ctx, out: &mut Vec<PuiseuxBranch>) -> Result<()> {
    if m == 1 {
        out.push(leaf(node, ctx)?);
        Ok(())
    } else {
        expand_node(node, ctx, out)
    }
}

/// A root of the monic irreducible `phi` over `t`: rational roots stay in
/// `t`, others adjoin a new level. Returns the tower, the root and the
/// degree of `phi`.
fn root_of(phi: &UPoly, t: &Tower, bound: usize) -> Result<(Tower, K, u32)> {
    if phi.deg() == 1 {
        return Ok((t.clone(), -&phi.coeff(0), 1));
    }
    let levels = tower_levels(t);
    let mut i = levels.len() + 1;
    while levels.iter().any(|l| l.name == format!("w{i}")) {
        i += 1;
    }
    let nt = adjoin(t, &format!("w{i}"), phi);
    let degree = tower_degree(&nt);
    if degree > bound {
        return Err(Error::ExtensionTooDeep { degree, bound });
    }
    let w = K::generator(&nt);
    Ok((nt, w, phi.deg() as u32))
}

/// `f(λ s^q, s^p (μ + y)) / s^ord`.
fn substitute(f: &YPolynomial, lambda: &K, q: u32, p: u32, mu: &K, ord: u32) -> YPolynomial {
    let n = f.degree();
    let mut out = vec![TruncatedSeries::zero(); n + 1];
    for (j, c) in f.coeffs().iter().enumerate() {
        if c.is_exact_zero() {
            continue;
        }
        let cj = c.substitute_monomial(lambda, q).shift(p * j as u32);
        // (μ + y)^j = Σ binom(j, i) μ^(j-i) y^i
        let mut binom = K::one();
        for (i, slot) in out.iter_mut().enumerate().take(j + 1) {
            let k = &binom * &mu.pow((j - i) as u64);
            *slot = slot.add(&cj.scale(&k));
            binom = &(&binom * &K::int((j - i) as i64)) / &K::int(i as i64 + 1);
        }
    }
    YPolynomial::new(out.into_iter().map(|c| c.unshift(ord)).collect())
}

fn expand_node(node: Node, ctx: &Ctx, out: &mut Vec<PuiseuxBranch>) -> Result<()> {
    let mut f = node.f.clone();
    if f.coeff(0).is_exact_zero() {
        out.push(finish(&node, TruncatedSeries::zero(), ctx));
        f = YPolynomial::new(f.coeffs()[1..].to_vec());
    }
    if f.degree() == 0 {
        return Ok(());
    }
    let np = newton_polygon_of(&f)?;
    for (a, b) in compact_edges(&np) {
        let (l, h) = ((b.0 - a.0) as u32, (a.1 - b.1) as u32);
        let g = l.gcd(&h);
        let (p, q) = (l / g, h / g);
        let psi = edge_psi(&f, a, b);
        let u = if q == 1 { 0 } else { mod_inverse(p, q) };
        let v = (i64::from(u) * i64::from(p) - 1) / i64::from(q);
        let ord = q * a.0 as u32 + p * a.1 as u32;
        for (phi, m) in factor(&psi, &node.tower) {
            let (tower, w0, d) = root_of(&phi, &node.tower, ctx.bound)?;
            let lambda = w0.pow(u as u64);
            let mu = if v >= 0 {
                w0.pow(v as u64)
            } else {
                w0.inv()?.pow(v.unsigned_abs())
            };
            let f_next = substitute(&f, &lambda, q, p, &mu, ord);
            let kappa = &node.kappa * &lambda.pow(node.k as u64);
            let k = node.k * q + p;
            let prefix = node
                .prefix
                .substitute_monomial(&lambda, q)
                .add(&TruncatedSeries::monomial(&kappa * &mu, k));
            let child = Node {
                f: f_next,
                x_scale: &node.x_scale * &lambda.pow(node.e as u64),
                e: node.e * q,
                prefix,
                kappa,
                k,
                conj: node.conj * d,
                tower: join(&node.tower, &tower),
            };
            descend(child, m, ctx, out)?;
        }
    }
    Ok(())
}

fn mod_inverse(p: u32, q: u32) -> u32 {
    (1..q).find(|u| (u * p) % q == 1).expect("coprime slope")
}

/// The node's transformed polynomial has a simple root `y1` of positive
/// valuation; find it by Newton iteration.
fn leaf(node: Node, ctx: &Ctx) -> Result<PuiseuxBranch> {
    let f = &node.f;
    if f.coeff(0).is_exact_zero() {
        return Ok(finish(&node, TruncatedSeries::zero(), ctx));
    }
    let need = ctx.n.saturating_sub(node.k);
    let df = f.derivative_y();
    let mut y = TruncatedSeries::zero();
    let mut prec = 1;
    while prec < need {
        prec = (2 * prec).min(need);
        // The current approximation is treated as exact: Newton's step
        // doubles the number of correct terms.
        let y0 = y.known_part();
        let val = f.eval_y(&y0).truncate(prec);
        let der = df.eval_y(&y0).truncate(prec).inverse(prec)?;
        y = y0.sub(&val.mul(&der)).truncate(prec);
    }
    let y = y.truncate(need.max(1));
    if y.prec().is_some_and(|p| p < need) {
        return Err(Error::PrecisionInsufficient(None));
    }
    Ok(finish(&node, y, ctx))
}

fn finish(node: &Node, y1: TruncatedSeries, ctx: &Ctx) -> PuiseuxBranch {
    let tail = y1.scale(&node.kappa).shift(node.k);
    let y = node.prefix.add(&tail);
    let y = if y.is_exact() && y.max_degree() < ctx.n {
        y
    } else {
        y.truncate(ctx.n)
    };
    PuiseuxBranch {
        e: node.e,
        x_scale: node.x_scale.clone(),
        y,
        conj: node.conj,
        tower: node.tower.clone(),
    }
}

/// Valuations of the roots through the origin with their counts, read
/// off the compact edges of `N(f)`.
pub fn root_valuations(f: &YPolynomial) -> Result<Vec<(Q, u64)>> {
    if f.coeff(0).is_exact_zero() {
        return Err(Error::DivisibleByY);
    }
    let n = newton_polygon_of(f)?;
    Ok(compact_edges(&n)
        .into_iter()
        .map(|(a, b)| {
            let (l, h) = (b.0 - a.0, a.1 - b.1);
            (Q::new(l.into(), h.into()), h)
        })
        .collect())
}

/// `g(X·t^e, Y(t))` with precision tracking.
pub fn substitute_branch(g: &YPolynomial, b: &PuiseuxBranch) -> TruncatedSeries {
    let mut acc = TruncatedSeries::zero();
    for c in g.coeffs().iter().rev() {
        acc = acc.mul(&b.y).add(&c.substitute_monomial(&b.x_scale, b.e));
    }
    acc
}

/// `ord_t g(X·t^e, Y(t))`.
pub fn order_along_branch(g: &YPolynomial, b: &PuiseuxBranch) -> Result<u32> {
    let exact = YPolynomial::new(g.coeffs().iter().map(TruncatedSeries::known_part).collect());
    let r = substitute_branch(&exact, b);
    let Some(o) = r.order() else {
        return Err(Error::IdenticallyZero);
    };
    let full = substitute_branch(g, b);
    match full.order() {
        Some(p) if p == o => Ok(o),
        _ => Err(Error::PrecisionInsufficient(None)),
    }
}

/// Multiplicity at the origin of the curve component the branch stands
/// for: `conj · min(e, ord_t y)`, and 0 off the origin.
pub fn branch_multiplicity(b: &PuiseuxBranch) -> u32 {
    let oy = b.y.order_bound();
    match oy {
        Some(0) => 0,
        Some(o) => b.conj * o.min(b.e),
        None => b.conj * b.e,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::qr;
    use crate::text::parse_ypoly;

    fn expand(s: &str, n: u32) -> Vec<PuiseuxBranch> {
        puiseux_expand(&parse_ypoly(s).unwrap(), n).unwrap()
    }

    #[test]
    fn cusp() {
        let b = expand("y^2 - x^3", 10);
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].to_string(), "x = t^2; y = t^3; conj = 1; field = Q");
        assert_eq!(branch_multiplicity(&b[0]), 2);
        let x = parse_ypoly("x").unwrap();
        let y = parse_ypoly("y").unwrap();
        assert_eq!(order_along_branch(&x, &b[0]), Ok(2));
        assert_eq!(order_along_branch(&y, &b[0]), Ok(3));
        let f = parse_ypoly("y^2 - x^3").unwrap();
        assert_eq!(order_along_branch(&f, &b[0]), Err(Error::IdenticallyZero));
    }

    #[test]
    fn three_factors() {
        let b = expand("(y - x)*(y - x^2)*(y^2 - x^3)", 12);
        let vals: Vec<(Q, u32)> = b
            .iter()
            .map(|b| (b.valuation().unwrap(), b.root_count()))
            .collect();
        assert_eq!(vals, vec![(qr(2, 1), 1), (qr(3, 2), 2), (qr(1, 1), 1)]);
        let f = parse_ypoly("(y - x)*(y - x^2)*(y^2 - x^3)").unwrap();
        assert_eq!(
            root_valuations(&f).unwrap(),
            vec![(qr(1, 1), 1), (qr(3, 2), 2), (qr(2, 1), 1)]
        );
    }

    #[test]
    fn node_binomial_series() {
        let b = expand("y^2 - x^2 - x^3", 6);
        assert_eq!(b.len(), 2);
        let ys: Vec<String> = b.iter().map(|b| b.y.display_in("t")).collect();
        assert!(ys.contains(&"t + 1/2*t^2 - 1/8*t^3 + 1/16*t^4 - 5/128*t^5 + O(t^6)".to_string()));
        assert!(ys.contains(&"-t - 1/2*t^2 + 1/8*t^3 - 1/16*t^4 + 5/128*t^5 + O(t^6)".to_string()));
    }

    #[test]
    fn algebraic_and_scaled() {
        let b = expand("y^2 - 2*x^2", 4);
        assert_eq!(b.len(), 1);
        assert_eq!((b[0].e, b[0].conj), (1, 2));
        assert_eq!(describe_tower(&b[0].tower), "Q(w1: w1^2 - 1/2)");
        let f = parse_ypoly("y^2 - 2*x^2").unwrap();
        assert_eq!(order_along_branch(&f, &b[0]), Err(Error::IdenticallyZero));
        let c = expand("y^2 - 2*x^3", 6);
        assert_eq!(
            c[0].to_string(),
            "x = 1/2*t^2; y = 1/2*t^3; conj = 1; field = Q"
        );
    }

    #[test]
    fn axis_and_off_origin_roots() {
        let b = expand("y*(y - x)*(y - 1)", 5);
        let total: u32 = b.iter().map(PuiseuxBranch::root_count).sum();
        assert_eq!(total, 3);
        assert!(b[0].y.is_exact_zero());
        assert_eq!(branch_multiplicity(&b[0]), 1);
        assert!(b.iter().any(|b| !b.passes_through_origin()));
        let f = parse_ypoly("y*(y - x)").unwrap();
        assert_eq!(root_valuations(&f), Err(Error::DivisibleByY));
        let g = parse_ypoly("(y - x)^2").unwrap();
        assert_eq!(puiseux_expand(&g, 4), Err(Error::NotSquareFree));
    }

    #[test]
    fn branch_round_trip() {
        for s in [
            "y^2 - x^3",
            "y^2 - 2*x^2",
            "y^2 - 2*x^3 - x^4",
            "y^3 - x^2*y - x^5",
        ] {
            for b in expand(s, 8) {
                let text = b.to_string();
                assert_eq!(parse_branch(&text).unwrap(), b, "{text}");
            }
        }
    }
}
