//! Jacobian Newton polygons of plane curve singularities: from the
//! semigroup of a branch, and directly from an equation via its polar
//! curve; plus the invariants they carry.

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::K;
use crate::num::{floor_u64, Q};
use crate::polygon::{ElementaryPolygon, NewtonPolygon};
use crate::puiseux::{
    branch_multiplicity, order_along_branch, puiseux_expand_with, PuiseuxOptions,
};
use crate::ypoly::{intersection_number, YPolynomial};

/// Seed used when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 1_729;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupType {
    generators: Vec<u64>,
    l: Vec<u64>,
    n: Vec<u64>,
}

impl SemigroupType {
    /// `β̄_0, …, β̄_g`.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// `l_i = gcd(β̄_0, …, β̄_i)`.
    pub fn l(&self) -> &[u64] {
        &self.l
    }

    /// `n_i = l_{i-1}/l_i` for `i = 1..=g` (stored from index 0).
    pub fn n(&self) -> &[u64] {
        &self.n
    }

    pub fn genus(&self) -> usize {
        self.generators.len() - 1
    }
}

fn in_monoid(v: u64, gens: &[u64]) -> bool {
    let mut reach = vec![false; v as usize + 1];
    reach[0] = true;
    for i in 1..=v as usize {
        reach[i] = gens
            .iter()
            .any(|&g| g as usize <= i && reach[i - g as usize]);
    }
    reach[v as usize]
}

pub fn validate_semigroup(generators: &[u64]) -> Result<SemigroupType> {
    if generators.is_empty() || generators[0] == 0 {
        return Err(Error::GcdChainInvalid);
    }
    if generators.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NotMinimal);
    }
    let mut l = vec![generators[0]];
    for &b in &generators[1..] {
        let next = l.last().unwrap().gcd(&b);
        if next >= *l.last().unwrap() {
            return Err(Error::GcdChainInvalid);
        }
        l.push(next);
    }
    if *l.last().unwrap() != 1 {
        return Err(Error::GcdChainInvalid);
    }
    let n: Vec<u64> = l.windows(2).map(|w| w[0] / w[1]).collect();
    let g = n.len();
    for i in 1..=g {
        let nb = n[i - 1] * generators[i];
        if i < g && nb >= generators[i + 1] {
            return Err(Error::NotMinimal);
        }
        if !in_monoid(nb, &generators[..i]) {
            return Err(Error::NotRealizable);
        }
    }
    Ok(SemigroupType {
        generators: generators.to_vec(),
        l,
        n,
    })
}

/// Pairs `(e_q, m_q)` and their polygon `Σ{e_q/m_q}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobianPolygon {
    pairs: Vec<(u64, u64)>,
}

impl JacobianPolygon {
    /// Pairs are sorted by increasing `e/m`, then by `e`.
    pub fn from_pairs(mut pairs: Vec<(u64, u64)>) -> Self {
        pairs.sort_by(|a, b| {
            (u128::from(a.0) * u128::from(b.1))
                .cmp(&(u128::from(b.0) * u128::from(a.1)))
                .then(a.0.cmp(&b.0))
        });
        JacobianPolygon { pairs }
    }

    pub fn pairs(&self) -> &[(u64, u64)] {
        &self.pairs
    }

    pub fn view(&self) -> NewtonPolygon {
        NewtonPolygon::from_edges(
            self.pairs
                .iter()
                .map(|&(e, m)| ElementaryPolygon::new(e, m).expect("positive pair"))
                .collect(),
        )
    }

    pub fn length(&self) -> u64 {
        self.pairs.iter().map(|p| p.0).sum()
    }

    pub fn height(&self) -> u64 {
        self.pairs.iter().map(|p| p.1).sum()
    }
}

pub fn merle_polygon(s: &SemigroupType) -> JacobianPolygon {
    let mut prod = 1;
    let mut pairs = Vec::new();
    for (q, &nq) in s.n.iter().enumerate() {
        let m = prod * (nq - 1);
        let e = (nq - 1) * s.generators[q + 1] - m;
        pairs.push((e, m));
        prod *= nq;
    }
    JacobianPolygon::from_pairs(pairs)
}

/// Invert Merle's formula.
pub fn semigroup_from_polygon(j: &JacobianPolygon) -> Result<SemigroupType> {
    let edges = j
        .view()
        .canonical_decomposition()
        .map_err(|_| Error::NotMerleShaped)?;
    let mut prod = 1u64;
    let mut betas = Vec::new();
    for e in edges {
        let (eq, mq) = (e.length().finite().unwrap(), e.height().finite().unwrap());
        if mq % prod != 0 {
            return Err(Error::NotMerleShaped);
        }
        let nq = mq / prod + 1;
        if (eq + mq) % (nq - 1) != 0 {
            return Err(Error::NotMerleShaped);
        }
        betas.push((eq + mq) / (nq - 1));
        prod *= nq;
    }
    let mut gens = vec![prod];
    gens.extend(betas);
    let s = validate_semigroup(&gens).map_err(|_| Error::NotMerleShaped)?;
    if merle_polygon(&s).view() != j.view() {
        return Err(Error::NotMerleShaped);
    }
    Ok(s)
}

/// Seeded nonzero integer for the linear change `x ↦ x + a·y`.
fn shear_parameter(seed: u64) -> i64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a: i64 = rng.gen_range(1..=40);
    if rng.gen_bool(0.5) {
        -a
    } else {
        a
    }
}

fn sheared(f: &YPolynomial, seed: u64) -> Result<YPolynomial> {
    if !f.is_exact() {
        return Err(Error::PrecisionInsufficient(None));
    }
    Ok(f.shear(&K::int(shear_parameter(seed))))
}

fn milnor_once(f: &YPolynomial, seed: u64) -> Result<u64> {
    let g = sheared(f, seed)?;
    let (fx, fy) = (g.derivative_x(), g.derivative_y());
    if fx.is_zero() || fy.is_zero() {
        return Err(Error::NotIsolated);
    }
    intersection_number(&fx, &fy)
}

/// Derived seed for the `i`-th independent attempt.
fn nth_seed(seed: u64, i: u64) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(i)
}

/// `ord_x Res_y(f_x, f_y)` after a generic linear change, certified by
/// agreement of two seeds.
pub fn milnor_number(f: &YPolynomial, seed: u64) -> Result<u64> {
    let mut seen: Vec<u64> = Vec::new();
    let mut last_err = None;
    for i in 0..5 {
        match milnor_once(f, nth_seed(seed, i)) {
            Ok(mu) => {
                if seen.contains(&mu) {
                    return Ok(mu);
                }
                seen.push(mu);
            }
            Err(Error::NotUnitary) => {}
            Err(e) => last_err = Some(e),
        }
    }
    Err(last_err
        .unwrap_or_else(|| Error::GenericityFailure(format!("{seen:?}"), "no agreement".into())))
}

/// Lowest total degree of a term.
pub fn multiplicity(f: &YPolynomial) -> u64 {
    f.multiplicity().map_or(0, u64::from)
}

fn jacobian_once(f: &YPolynomial, seed: u64, mu: u64) -> Result<JacobianPolygon> {
    let g = sheared(f, seed)?;
    let polar = g.derivative_y();
    if !polar.is_unitary() {
        return Err(Error::NotUnitary);
    }
    let mut prec = (mu + multiplicity(f) + 2) as u32;
    for _ in 0..4 {
        let opts = PuiseuxOptions {
            t_precision: Some(prec),
            origin_only: true,
            ..Default::default()
        };
        let branches = puiseux_expand_with(&polar, &opts)?;
        let mut pairs = Vec::new();
        let mut retry = false;
        for b in branches.iter().filter(|b| b.passes_through_origin()) {
            let m = u64::from(branch_multiplicity(b));
            match order_along_branch(&g, b) {
                Ok(o) => {
                    let total = u64::from(o) * u64::from(b.conj);
                    pairs.push((total - m, m));
                }
                Err(Error::IdenticallyZero | Error::PrecisionInsufficient(_)) => {
                    retry = true;
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        if !retry {
            return Ok(JacobianPolygon::from_pairs(pairs));
        }
        prec *= 2;
    }
    Err(Error::NotIsolated)
}

/// The jacobian polygon from the polar curve of `f` in generic
/// coordinates. Two seeds must agree (a third breaks ties) and the length
/// must equal the Milnor number.
pub fn jacobian_polygon_direct(f: &YPolynomial, seed: u64) -> Result<JacobianPolygon> {
    let mu = milnor_number(f, seed)?;
    let mut found: Vec<JacobianPolygon> = Vec::new();
    let mut i = 0;
    while found.len() < 3 && i < 8 {
        match jacobian_once(f, nth_seed(seed, 100 + i), mu) {
            Ok(j) => {
                if let Some(prev) = found.iter().find(|p| p.view() == j.view()) {
                    let out = prev.clone();
                    if out.length() != mu {
                        return Err(Error::GenericityFailure(
                            format!("length {}", out.length()),
                            format!("milnor number {mu}"),
                        ));
                    }
                    return Ok(out);
                }
                found.push(j);
            }
            Err(Error::NotUnitary) => {}
            Err(e) => return Err(e),
        }
        i += 1;
    }
    Err(Error::GenericityFailure(
        found
            .first()
            .map_or_else(|| "none".into(), |j| j.view().to_string()),
        found
            .get(1)
            .map_or_else(|| "none".into(), |j| j.view().to_string()),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub mu_n: u64,
    pub mu_n1: u64,
    pub class_diminution: u64,
    pub theta1: Q,
    pub theta2: Q,
    pub determinacy: u64,
    /// `2δ` lies in the bracket `(delta_lower, delta_upper]`.
    pub delta_lower: Q,
    pub delta_upper: Q,
    pub is_ak: bool,
}

impl InvariantReport {
    pub fn to_json(&self) -> Value {
        json!({
            "mu_n": self.mu_n,
            "mu_n1": self.mu_n1,
            "class_diminution": self.class_diminution,
            "theta1": self.theta1.to_string(),
            "theta2": self.theta2.to_string(),
            "determinacy": self.determinacy,
            "delta_lower": self.delta_lower.to_string(),
            "delta_upper": self.delta_upper.to_string(),
            "is_Ak": self.is_ak,
        })
    }
}

pub fn invariants_from_polygon(j: &JacobianPolygon) -> Result<InvariantReport> {
    if j.pairs.is_empty() {
        return Err(Error::ParameterOutOfRange("empty jacobian polygon".into()));
    }
    let mu_n = j.length();
    let mu_n1 = j.height();
    let q = |a: u64, b: u64| Q::new(a.into(), b.into());
    let theta2 = j.pairs.iter().map(|&(e, m)| q(e, m)).max().unwrap();
    let theta1 = j.pairs.iter().map(|&(e, m)| q(e, e + m)).max().unwrap();
    Ok(InvariantReport {
        mu_n,
        mu_n1,
        class_diminution: mu_n + mu_n1,
        determinacy: floor_u64(&theta2) + 1,
        delta_lower: theta2.clone(),
        delta_upper: q(mu_n + mu_n1, 1),
        is_ak: theta2 == q(mu_n, 1),
        theta1,
        theta2,
    })
}

/// `d(d-1)^(n-1) - Σ (μ^(n) + μ^(n-1))`.
pub fn dual_degree(d: u64, n: u32, singularities: &[(u64, u64)]) -> Result<i64> {
    if d < 2 || n < 2 {
        return Err(Error::ParameterOutOfRange(format!("d = {d}, n = {n}")));
    }
    let top = i64::try_from(d * (d - 1).pow(n - 1))
        .map_err(|_| Error::ParameterOutOfRange("degree too large".into()))?;
    let drop: u64 = singularities.iter().map(|(a, b)| a + b).sum();
    Ok(top - drop as i64)
}

/// Stored jacobian polygons of the special and generic members of the
/// Briançon–Speder family for `β`.
pub fn briancon_speder_polygons(beta: u64) -> Result<(JacobianPolygon, JacobianPolygon)> {
    if beta < 4 || !(2 * beta + 1).is_multiple_of(3) {
        return Err(Error::ParameterOutOfRange(format!(
            "beta = {beta} needs beta >= 4 and 3 | 2*beta + 1"
        )));
    }
    let b2 = 2 * beta;
    let special = JacobianPolygon::from_pairs(vec![(b2, 2), (b2 * (b2 - 2), b2 - 2)]);
    let generic = JacobianPolygon::from_pairs(vec![(b2 * (b2 - 1), b2 - 1)]);
    Ok((special, generic))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::qr;
    use crate::polygon::poly;
    use crate::text::parse_ypoly;

    #[test]
    fn semigroups() {
        let s = validate_semigroup(&[4, 6, 13]).unwrap();
        assert_eq!((s.l(), s.n()), (&[4, 2, 1][..], &[2, 2][..]));
        assert_eq!(validate_semigroup(&[4, 6, 8]), Err(Error::GcdChainInvalid));
        assert_eq!(validate_semigroup(&[4, 6, 11]), Err(Error::NotMinimal));
        assert_eq!(merle_polygon(&s).view(), poly(&[(5, 1), (11, 2)]));
        let cusp = validate_semigroup(&[2, 3]).unwrap();
        assert_eq!(merle_polygon(&cusp).view(), poly(&[(2, 1)]));
        assert_eq!(semigroup_from_polygon(&merle_polygon(&s)), Ok(s));
        let bad = JacobianPolygon::from_pairs(vec![(3, 2), (4, 1)]);
        assert_eq!(semigroup_from_polygon(&bad), Err(Error::NotMerleShaped));
    }

    #[test]
    fn reports() {
        let r = invariants_from_polygon(&JacobianPolygon::from_pairs(vec![(2, 1)])).unwrap();
        assert_eq!(
            (r.mu_n, r.mu_n1, r.class_diminution, r.determinacy, r.is_ak),
            (2, 1, 3, 3, true)
        );
        assert_eq!((r.theta1, r.theta2), (qr(2, 3), qr(2, 1)));
        let r =
            invariants_from_polygon(&JacobianPolygon::from_pairs(vec![(5, 1), (11, 2)])).unwrap();
        assert_eq!((r.mu_n, r.mu_n1, r.determinacy, r.is_ak), (16, 3, 6, false));
        assert_eq!((r.theta1, r.theta2), (qr(11, 13), qr(11, 2)));
        assert_eq!(dual_degree(3, 2, &[(1, 1)]), Ok(4));
        assert_eq!(dual_degree(3, 2, &[(2, 1)]), Ok(3));
        assert_eq!(dual_degree(3, 3, &[]), Ok(12));
    }

    #[test]
    fn direct_cusp_and_ak() {
        let f = parse_ypoly("y^2 - x^3").unwrap();
        assert_eq!(milnor_number(&f, DEFAULT_SEED), Ok(2));
        assert_eq!(
            jacobian_polygon_direct(&f, DEFAULT_SEED).unwrap().view(),
            poly(&[(2, 1)])
        );
        let a4 = parse_ypoly("y^2 - x^5").unwrap();
        assert_eq!(
            jacobian_polygon_direct(&a4, 3).unwrap().view(),
            poly(&[(4, 1)])
        );
        let smooth = parse_ypoly("y - x^2").unwrap();
        assert_eq!(milnor_number(&smooth, DEFAULT_SEED), Ok(0));
    }

    #[test]
    fn briancon_speder() {
        let (s, g) = briancon_speder_polygons(4).unwrap();
        assert_eq!(
            (s.length(), g.length(), s.height(), g.height()),
            (56, 56, 8, 7)
        );
        assert!(s.view().dominates(&g.view()));
        let (s7, g7) = briancon_speder_polygons(7).unwrap();
        assert_eq!(s7.view(), poly(&[(14, 2), (168, 12)]));
        assert_eq!(g7.view(), poly(&[(182, 13)]));
        assert!(briancon_speder_polygons(3).is_err());
    }
}
