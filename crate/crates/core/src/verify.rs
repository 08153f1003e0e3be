//! Property suites, each checking a family of identities against an
//! independent oracle on seeded random samples.

use std::time::{Duration, Instant};

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::corpus::{branch_equation, corpus};
use crate::curve::{
    briancon_speder_polygons, dual_degree, invariants_from_polygon, jacobian_polygon_direct,
    merle_polygon, milnor_number, multiplicity, semigroup_from_polygon, validate_semigroup,
};
use crate::error::{Error, Result};
use crate::field::{adjoin, UPoly, K};
use crate::num::{qr, qu, Q};
use crate::par::Exec;
use crate::polygon::{ElementaryPolygon, NewtonPolygon};
use crate::polyhedra::{
    colength_growth_oracle_with, minkowski_inequality_holds, mixed_covolume, NewtonPolyhedron,
};
use crate::product::{is_special, mixed_height, product, product_of_decompositions};
use crate::puiseux::{parse_branch, puiseux_expand};
use crate::series::TruncatedSeries;
use crate::text::{parse_polygon, parse_semigroup, parse_ypoly, print_semigroup, print_ypoly};
use crate::ypoly::{
    intersection_number, is_nondegenerate_pair, newton_polygon_of, shifted_resultant,
    sylvester_resultant, YPolynomial,
};

/// Suite names, in acceptance-criterion order, followed by the extra
/// round-trip suite.
pub const SUITES: [&str; 11] = [
    "laws",
    "puiseux",
    "product-realization",
    "mixed-volume",
    "intersection",
    "merle",
    "invariants",
    "multiplicity",
    "dual-degree",
    "briancon-speder",
    "roundtrip",
];

#[derive(Clone, Debug)]
pub struct Outcome {
    pub suite: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
    pub elapsed: Duration,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Collects checks for one suite.
struct Tally {
    cases: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failures.len() < 20 {
            self.failures.push(what());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, got: T, want: T, what: &str) {
        self.cases += 1;
        if got != want && self.failures.len() < 20 {
            self.failures
                .push(format!("{what}: got {got:?}, want {want:?}"));
        }
    }

    fn merge(&mut self, other: Tally) {
        self.cases += other.cases;
        for f in other.failures {
            if self.failures.len() < 20 {
                self.failures.push(f);
            }
        }
    }
}

fn rng_for(seed: u64, suite: &str) -> ChaCha8Rng {
    let salt = suite
        .bytes()
        .fold(0u64, |h, b| h.wrapping_mul(131).wrapping_add(u64::from(b)));
    ChaCha8Rng::seed_from_u64(seed ^ salt)
}

/// Run one suite by name.
pub fn run_suite(name: &str, seed: u64, exec: Exec) -> Result<Outcome> {
    let suite = SUITES
        .iter()
        .copied()
        .find(|s| *s == name)
        .ok_or_else(|| Error::ParameterOutOfRange(format!("unknown suite '{name}'")))?;
    let start = Instant::now();
    let mut rng = rng_for(seed, suite);
    let t = match suite {
        "laws" => laws(&mut rng, exec),
        "puiseux" => puiseux_suite(&mut rng, exec),
        "product-realization" => product_realization(&mut rng, exec),
        "mixed-volume" => mixed_volume(&mut rng, exec),
        "intersection" => intersection(&mut rng, exec),
        "merle" => merle(&mut rng, seed, exec),
        "invariants" => invariants(seed, exec),
        "multiplicity" => multiplicity_suite(&mut rng, exec),
        "dual-degree" => dual_degree_suite(),
        "briancon-speder" => briancon_speder(),
        _ => roundtrip(&mut rng),
    };
    Ok(Outcome {
        suite,
        cases: t.cases,
        failures: t.failures,
        elapsed: start.elapsed(),
    })
}

/// Run every suite; suites run concurrently under [`Exec::Parallel`].
pub fn run_all(seed: u64, exec: Exec) -> Vec<Outcome> {
    exec.map(&SUITES, |s| run_suite(s, seed, exec).expect("known suite"))
}

// ---------------------------------------------------------------- samplers

/// Random polygon with up to `k` edges of sides at most `side`, each side
/// a multiple of a random primitive direction.
pub fn random_polygon(rng: &mut impl Rng, k: usize, side: u64) -> NewtonPolygon {
    let n = rng.gen_range(1..=k);
    let edges = (0..n)
        .map(|_| {
            let m = rng.gen_range(1..=2u64);
            let l = rng.gen_range(1..=side);
            let h = rng.gen_range(1..=side);
            ElementaryPolygon::new(m * l, m * h).unwrap()
        })
        .collect();
    NewtonPolygon::from_edges(edges)
}

/// Random polygon that may carry offsets and infinite edges.
pub fn random_general_polygon(rng: &mut impl Rng) -> NewtonPolygon {
    let mut edges = random_polygon(rng, 3, 5).edges().to_vec();
    if rng.gen_bool(0.15) {
        edges.push(ElementaryPolygon::new(rng.gen_range(1..=4u64), crate::Inf).unwrap());
    }
    if rng.gen_bool(0.15) {
        edges.push(ElementaryPolygon::new(crate::Inf, rng.gen_range(1..=4u64)).unwrap());
    }
    let (a, b) = if rng.gen_bool(0.3) {
        (rng.gen_range(0..3), rng.gen_range(0..3))
    } else {
        (0, 0)
    };
    NewtonPolygon::from_parts(a, b, edges)
}

fn nonzero(rng: &mut impl Rng, m: i64) -> i64 {
    let v = rng.gen_range(1..=m);
    if rng.gen_bool(0.5) {
        -v
    } else {
        v
    }
}

/// Random Weierstrass polynomial `y^n + Σ c x^i y^j` with `i ≥ 1` and a
/// pure power of `x`.
pub fn random_weierstrass(rng: &mut impl Rng, max_n: u32, max_i: u32) -> Vec<(u32, u32)> {
    let n = rng.gen_range(1..=max_n);
    let mut support = vec![(0, n), (rng.gen_range(1..=max_i), 0)];
    for j in 1..n {
        if rng.gen_bool(0.6) {
            support.push((rng.gen_range(1..=max_i), j));
        }
    }
    support
}

fn with_coefficients(rng: &mut impl Rng, support: &[(u32, u32)]) -> YPolynomial {
    YPolynomial::from_terms(support.iter().map(|&(a, b)| {
        let c = if a == 0 { 1 } else { nonzero(rng, 5) };
        (a, b, K::int(c))
    }))
}

/// A pair of Weierstrass polynomials with coefficients resampled until the
/// pair is nondegenerate.
pub fn random_nondegenerate_pair(rng: &mut impl Rng) -> (YPolynomial, YPolynomial) {
    loop {
        let (s1, s2) = (random_weierstrass(rng, 3, 5), random_weierstrass(rng, 3, 5));
        for _ in 0..50 {
            let (f1, f2) = (with_coefficients(rng, &s1), with_coefficients(rng, &s2));
            if is_nondegenerate_pair(&f1, &f2) == Ok(true) {
                return (f1, f2);
            }
        }
    }
}

fn polyhedron(p: &NewtonPolygon) -> NewtonPolyhedron {
    let pts: Vec<Vec<u64>> = p.vertices().into_iter().map(|(a, b)| vec![a, b]).collect();
    NewtonPolyhedron::from_support(2, &pts).expect("plane support")
}

/// Random semigroup of a plane branch with `g ≤ 3`.
pub fn random_semigroup(rng: &mut impl Rng) -> Vec<u64> {
    loop {
        let g = rng.gen_range(1..=3);
        let ns: Vec<u64> = (0..g).map(|_| rng.gen_range(2..=3)).collect();
        let mut gens = vec![ns.iter().product::<u64>()];
        let mut ok = true;
        for i in 0..g {
            let li: u64 = ns[i + 1..].iter().product();
            let floor = if i == 0 { gens[0] } else { ns[i - 1] * gens[i] };
            let mut r = floor / li + 1 + rng.gen_range(0..4);
            while r.gcd(&ns[i]) != 1 {
                r += 1;
            }
            gens.push(r * li);
            ok &= gens[i + 1] > floor;
        }
        if ok && validate_semigroup(&gens).is_ok() {
            return gens;
        }
    }
}

// ------------------------------------------------------------------ suites

fn laws(rng: &mut ChaCha8Rng, exec: Exec) -> Tally {
    let mut t = Tally::new();
    for _ in 0..1000 {
        let (a, b, c) = (
            random_general_polygon(rng),
            random_general_polygon(rng),
            random_general_polygon(rng),
        );
        t.eq(a.sum(&b), b.sum(&a), "sum commutes");
        t.eq(a.sum(&b).sum(&c), a.sum(&b.sum(&c)), "sum associates");
        t.eq(
            a.sum(&NewtonPolygon::empty()),
            a.clone(),
            "empty is the identity",
        );
    }
    let els: Vec<NewtonPolygon> = (1..=6u64)
        .flat_map(|l| (1..=6u64).map(move |h| NewtonPolygon::elementary(l, h).unwrap()))
        .collect();
    let per_first: Vec<Tally> = exec.map(&els, |p| {
        let mut t = Tally::new();
        for q in &els {
            let pq = product(p, q).unwrap();
            t.eq(
                pq.clone(),
                product(q, p).unwrap(),
                "elementary product commutes",
            );
            for r in &els {
                t.eq(
                    product(&pq, r).unwrap(),
                    product(p, &product(q, r).unwrap()).unwrap(),
                    "elementary product associates",
                );
                t.eq(
                    product(p, &q.sum(r)).unwrap(),
                    pq.sum(&product(p, r).unwrap()),
                    "elementary product distributes",
                );
            }
        }
        t
    });
    for x in per_first {
        t.merge(x);
    }
    for _ in 0..500 {
        let (p, q, r) = (
            random_polygon(rng, 3, 4),
            random_polygon(rng, 3, 4),
            random_polygon(rng, 3, 4),
        );
        let pq = product(&p, &q).unwrap();
        t.eq(pq.clone(), product(&q, &p).unwrap(), "product commutes");
        t.eq(
            product(&pq, &r).unwrap(),
            product(&p, &product(&q, &r).unwrap()).unwrap(),
            "product associates",
        );
        t.eq(
            product(&p, &q.sum(&r)).unwrap(),
            pq.sum(&product(&p, &r).unwrap()),
            "product distributes",
        );
        let (sp, sq) = (split(rng, &p), split(rng, &q));
        t.eq(
            product_of_decompositions(&sp, &sq).unwrap(),
            pq,
            "product is independent of the decomposition",
        );
        let inf = NewtonPolygon::elementary(rng.gen_range(1..=3u64), crate::Inf).unwrap();
        t.eq(
            product(&inf, &p),
            product(&p, &inf),
            "product with {l/inf} commutes",
        );
    }
    t
}

/// A non-canonical elementary decomposition: edges split into lattice
/// pieces and shuffled.
fn split(rng: &mut impl Rng, p: &NewtonPolygon) -> Vec<ElementaryPolygon> {
    let mut out = Vec::new();
    for e in p.canonical_decomposition().unwrap() {
        let (l, h) = (e.length().finite().unwrap(), e.height().finite().unwrap());
        let g = l.gcd(&h);
        let k = rng.gen_range(1..=g);
        let (pl, ph) = (l / g, h / g);
        out.push(ElementaryPolygon::new(pl * k, ph * k).unwrap());
        if k < g {
            out.push(ElementaryPolygon::new(pl * (g - k), ph * (g - k)).unwrap());
        }
    }
    let n = out.len();
    for i in (1..n).rev() {
        out.swap(i, rng.gen_range(0..=i));
    }
    out
}

/// Random irreducible branch factor with valuation `p/q`.
fn branch_factor(rng: &mut impl Rng) -> (u32, u32, YPolynomial) {
    loop {
        let q = rng.gen_range(1..=3u32);
        let p = rng.gen_range(1..=5u32);
        if p.gcd(&q) != 1 {
            continue;
        }
        let mut ys = vec![(nonzero(rng, 3), p)];
        if rng.gen_bool(0.5) {
            ys.push((nonzero(rng, 3), p + 1));
        }
        return (p, q, branch_equation(q, &ys));
    }
}

fn puiseux_suite(rng: &mut ChaCha8Rng, exec: Exec) -> Tally {
    let mut samples = Vec::new();
    for _ in 0..100 {
        let k = rng.gen_range(1..=3);
        samples.push((0..k).map(|_| branch_factor(rng)).collect::<Vec<_>>());
    }
    let irreducible: Vec<_> = (0..20).map(|_| branch_factor(rng)).collect();
    let tallies = exec.map(&samples, |factors| {
        let mut t = Tally::new();
        let f = factors
            .iter()
            .fold(YPolynomial::from_int_terms(&[(1, 0, 0)]), |acc, x| {
                acc.mul(&x.2)
            });
        let oracle = factors
            .iter()
            .fold(NewtonPolygon::empty(), |acc, &(p, q, _)| {
                acc.sum(&NewtonPolygon::elementary(u64::from(p), u64::from(q)).unwrap())
            });
        let n = newton_polygon_of(&f);
        t.eq(n.clone(), Ok(oracle.clone()), "N(f) = Σ{m_ρ ρ / m_ρ}");
        // The factors of each valuation multiply to the matching canonical part.
        let parts = oracle.canonical_decomposition().unwrap();
        for part in &parts {
            let slope = part.slope();
            let group = factors
                .iter()
                .filter(|(p, q, _)| Some(qr(i64::from(*q), i64::from(*p))) == slope)
                .fold(YPolynomial::from_int_terms(&[(1, 0, 0)]), |acc, x| {
                    acc.mul(&x.2)
                });
            t.eq(
                newton_polygon_of(&group),
                Ok(NewtonPolygon::from_edges(vec![*part])),
                "factor grouping realizes the canonical part",
            );
        }
        match puiseux_expand(&f, 8) {
            Ok(bs) => {
                let total: u32 = bs.iter().map(|b| b.root_count()).sum();
                t.eq(total as usize, f.degree(), "Σ e·conj = deg_y f");
                for part in &parts {
                    let rho = Q::new(
                        part.length().finite().unwrap().into(),
                        part.height().finite().unwrap().into(),
                    );
                    let count: u64 = bs
                        .iter()
                        .filter(|b| b.valuation() == Some(rho.clone()))
                        .map(|b| u64::from(b.root_count()))
                        .sum();
                    t.eq(
                        count,
                        part.height().finite().unwrap(),
                        "roots of valuation ρ",
                    );
                }
            }
            Err(Error::NotSquareFree) => {}
            Err(e) => t.check(false, || format!("expansion failed: {e}")),
        }
        t
    });
    let mut t = Tally::new();
    for x in tallies {
        t.merge(x);
    }
    for (p, q, f) in irreducible {
        let n = newton_polygon_of(&f).unwrap();
        t.check(n.is_elementary(), || {
            format!("irreducible branch polygon {n} not elementary")
        });
        t.eq(
            n,
            NewtonPolygon::elementary(u64::from(p), u64::from(q)).unwrap(),
            "branch polygon",
        );
    }
    t
}

fn product_realization(rng: &mut ChaCha8Rng, exec: Exec) -> Tally {
    let pairs: Vec<_> = (0..50).map(|_| random_nondegenerate_pair(rng)).collect();
    let tallies = exec.map(&pairs, |(p1, p2)| {
        let mut t = Tally::new();
        let (n1, n2) = (
            newton_polygon_of(p1).unwrap(),
            newton_polygon_of(p2).unwrap(),
        );
        let s = shifted_resultant(p1, p2).unwrap();
        let want = product(&n1.transpose(), &n2.transpose()).unwrap();
        match newton_polygon_of(&s) {
            Ok(ns) => t.eq(
                ns.transpose(),
                want,
                "N(Res_U(P1(T+U), P2(U)))ᵀ = N1ᵀ * N2ᵀ",
            ),
            Err(e) => t.check(false, || format!("shifted resultant polygon: {e}")),
        }
        t.eq(
            s.coeff(0),
            sylvester_resultant(p1, p2).unwrap(),
            "constant term of the shifted resultant",
        );
        t
    });
    let mut t = Tally::new();
    for x in tallies {
        t.merge(x);
    }
    t
}

fn mixed_volume(rng: &mut ChaCha8Rng, exec: Exec) -> Tally {
    let pairs: Vec<_> = (0..100)
        .map(|_| (random_polygon(rng, 3, 4), random_polygon(rng, 3, 4)))
        .collect();
    let tallies = exec.map(&pairs, |(p, q)| {
        let mut t = Tally::new();
        let mh = mixed_height(p, q).unwrap();
        let h = product(p, q).unwrap().height().finite().unwrap();
        let mv = mixed_covolume(&[polyhedron(p), polyhedron(q)], &[1, 1]).unwrap();
        let polar = p.sum(q).covolume2().unwrap() - p.covolume2().unwrap() - q.covolume2().unwrap();
        t.eq(mh, h, "mixed_height = height(P*Q)");
        t.eq(qu(h), mv.clone() * qu(2), "height(P*Q) = 2 Vol(P, Q)");
        t.eq(
            mv * qu(2),
            polar,
            "2 Vol(P, Q) = Vol(P+Q) - Vol(P) - Vol(Q)",
        );
        t.eq(
            qu(product(p, p).unwrap().height().finite().unwrap()),
            p.covolume2().unwrap() * qu(2),
            "h(P*P) = 2 Vol(P)",
        );
        t
    });
    let mut t = Tally::new();
    for x in tallies {
        t.merge(x);
    }
    let p = NewtonPolygon::elementary(2u64, 1u64).unwrap();
    let q = NewtonPolygon::elementary(1u64, 2u64).unwrap();
    t.eq(mixed_height(&p, &q), Ok(1), "mixed_height({2/1}, {1/2})");
    t.eq(p.sum(&q).covolume2(), Ok(qu(3)), "Vol({2/1} + {1/2})");
    t
}

fn intersection(rng: &mut ChaCha8Rng, exec: Exec) -> Tally {
    let pairs: Vec<_> = (0..50).map(|_| random_nondegenerate_pair(rng)).collect();
    let tallies = exec.map(&pairs, |(f1, f2)| {
        let mut t = Tally::new();
        let (n1, n2) = (
            newton_polygon_of(f1).unwrap(),
            newton_polygon_of(f2).unwrap(),
        );
        let mv = mixed_covolume(&[polyhedron(&n1), polyhedron(&n2)], &[1, 1]).unwrap();
        match intersection_number(f1, f2) {
            Ok(i) => t.eq(qu(i), mv * qu(2), "ord_x Res_y = 2 Vol(N1, N2)"),
            Err(e) => t.check(false, || format!("intersection number: {e}")),
        }
        t
    });
    let mut t = Tally::new();
    for x in tallies {
        t.merge(x);
    }
    let f1 = parse_ypoly("y - x^2").unwrap();
    let f2 = parse_ypoly("y^2 + x^3").unwrap();
    t.eq(intersection_number(&f1, &f2), Ok(3), "(y - x^2, y^2 + x^3)");
    t
}

fn merle(rng: &mut ChaCha8Rng, seed: u64, exec: Exec) -> Tally {
    let branches: Vec<_> = corpus()
        .into_iter()
        .filter(|c| c.semigroup.is_some())
        .collect();
    let tallies = exec.map(&branches, |c| {
        let mut t = Tally::new();
        let s = validate_semigroup(c.semigroup.as_ref().unwrap()).unwrap();
        let m = merle_polygon(&s);
        match jacobian_polygon_direct(&c.f, seed) {
            Ok(j) => t.eq(j.view(), m.view(), &format!("Merle = direct on {}", c.name)),
            Err(e) => t.check(false, || format!("direct polygon of {}: {e}", c.name)),
        }
        t
    });
    let mut t = Tally::new();
    for x in tallies {
        t.merge(x);
    }
    let pin = |g: &[u64], edges: &[(u64, u64)]| {
        (
            merle_polygon(&validate_semigroup(g).unwrap()).view(),
            crate::polygon::poly(edges),
        )
    };
    let (a, b) = pin(&[2, 3], &[(2, 1)]);
    t.eq(a, b, "<2,3>");
    for k in 1..=5 {
        let (a, b) = pin(&[2, 2 * k + 1], &[(2 * k, 1)]);
        t.eq(a, b, "<2,2k+1>");
    }
    let (a, b) = pin(&[4, 6, 13], &[(5, 1), (11, 2)]);
    t.eq(a, b, "<4,6,13>");
    let f = branch_equation(4, &[(1, 6), (1, 7)]);
    t.eq(milnor_number(&f, seed), Ok(16), "μ of <4,6,13>");
    for _ in 0..50 {
        let g = random_semigroup(rng);
        let s = validate_semigroup(&g).unwrap();
        t.eq(
            semigroup_from_polygon(&merle_polygon(&s)).map(|s| s.generators().to_vec()),
            Ok(g),
            "semigroup round trip",
        );
    }
    t
}

fn invariants(seed: u64, exec: Exec) -> Tally {
    let curves = corpus();
    let tallies = exec.map(&curves, |c| {
        let mut t = Tally::new();
        let name = &c.name;
        let (j, mu) = match (
            jacobian_polygon_direct(&c.f, seed),
            milnor_number(&c.f, seed),
        ) {
            (Ok(j), Ok(mu)) => (j, mu),
            (a, b) => {
                t.check(false, || format!("{name}: {:?} {:?}", a.err(), b.err()));
                return t;
            }
        };
        let mult = multiplicity(&c.f);
        t.eq(j.length(), mu, &format!("{name}: length = μ"));
        t.eq(j.height(), mult - 1, &format!("{name}: height = mult - 1"));
        t.eq(is_special(&j.view()), Ok(true), &format!("{name}: special"));
        let r = invariants_from_polygon(&j).unwrap();
        t.eq(
            r.theta2 == qu(mu),
            mult == 2,
            &format!("{name}: θ₂ = μ iff A_k"),
        );
        t.eq(r.is_ak, mult == 2, &format!("{name}: A_k flag"));
        for k in 1..3u64 {
            let other = jacobian_polygon_direct(&c.f, seed.wrapping_add(k * 7919));
            t.eq(
                other.map(|o| o.view()),
                Ok(j.view()),
                &format!("{name}: seed independence"),
            );
        }
        t
    });
    let mut t = Tally::new();
    for x in tallies {
        t.merge(x);
    }
    let cusp = parse_ypoly("y^2 - x^3").unwrap();
    match jacobian_polygon_direct(&cusp, seed).and_then(|j| invariants_from_polygon(&j)) {
        Ok(r) => {
            t.eq(
                (r.mu_n, r.theta2, r.theta1, r.determinacy),
                (2, qu(2), qr(2, 3), 3),
                "cusp report",
            );
        }
        Err(e) => t.check(false, || format!("cusp report: {e}")),
    }
    t
}

fn multiplicity_suite(rng: &mut ChaCha8Rng, exec: Exec) -> Tally {
    let mut t = Tally::new();
    let v = |xs: &[&[u64]]| xs.iter().map(|x| x.to_vec()).collect::<Vec<_>>();
    let ideals: Vec<(usize, Vec<Vec<u64>>, Option<u64>)> = vec![
        (2, v(&[&[2, 0], &[0, 3]]), Some(6)),
        (2, v(&[&[1, 0], &[0, 1]]), Some(1)),
        (2, v(&[&[2, 0], &[1, 1], &[0, 2]]), Some(4)),
        (2, v(&[&[3, 0], &[1, 1], &[0, 3]]), None),
        (2, v(&[&[4, 0], &[2, 1], &[0, 3]]), None),
        (2, v(&[&[5, 0], &[1, 2], &[0, 4]]), None),
        (
            3,
            v(&[
                &[2, 0, 0],
                &[0, 2, 0],
                &[0, 0, 2],
                &[1, 1, 0],
                &[1, 0, 1],
                &[0, 1, 1],
            ]),
            Some(8),
        ),
        (3, v(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), Some(1)),
        (3, v(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 1]]), Some(6)),
        (
            3,
            v(&[&[3, 0, 0], &[0, 2, 0], &[0, 0, 2], &[1, 1, 1]]),
            None,
        ),
        (
            3,
            v(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, 3], &[1, 1, 0]]),
            None,
        ),
    ];
    let results = exec.map(&ideals, |(d, gens, _)| {
        let e = NewtonPolyhedron::from_support(*d, gens).and_then(|n| n.monomial_multiplicity());
        let oracle = colength_growth_oracle_with(Exec::Sequential, *d, gens, 2 * *d as u64 + 6);
        (e, oracle)
    });
    for ((_, gens, pinned), (e, oracle)) in ideals.iter().zip(results) {
        t.eq(e.clone(), oracle, &format!("e = d! Vol on {gens:?}"));
        if let Some(p) = pinned {
            t.eq(e, Ok(*p), &format!("pinned multiplicity of {gens:?}"));
        }
    }
    let random_gens = |rng: &mut ChaCha8Rng, d: usize| -> Vec<Vec<u64>> {
        let mut gens = Vec::new();
        for i in 0..d {
            let mut g = vec![0; d];
            g[i] = rng.gen_range(1..=4);
            gens.push(g);
        }
        for _ in 0..rng.gen_range(0..=3) {
            gens.push((0..d).map(|_| rng.gen_range(0..=3)).collect());
        }
        gens
    };
    let polys: Vec<(usize, Vec<Vec<u64>>)> = (0..50)
        .map(|_| {
            let d = rng.gen_range(2..=3);
            (d, random_gens(rng, d))
        })
        .collect();
    for (d, g) in &polys {
        match NewtonPolyhedron::from_support(*d, g).and_then(|n| n.face_identity_check()) {
            Ok((l, r)) => t.eq(l, r, "d Vol = Σ h_i Vol(σ_i)"),
            Err(e) => t.check(false, || format!("face identity on {g:?}: {e}")),
        }
    }
    for _ in 0..50 {
        let d = rng.gen_range(2..=3);
        let (a, b) = (random_gens(rng, d), random_gens(rng, d));
        let ab: Vec<Vec<u64>> = a
            .iter()
            .flat_map(|x| {
                b.iter()
                    .map(move |y| x.iter().zip(y).map(|(p, q)| p + q).collect())
            })
            .collect();
        let e = |g: &[Vec<u64>]| {
            NewtonPolyhedron::from_support(d, g)
                .and_then(|n| n.monomial_multiplicity())
                .unwrap()
        };
        let (e1, e2, e12) = (e(&a), e(&b), e(&ab));
        t.check(minkowski_inequality_holds(e1, e2, e12, d as u32), || {
            format!("Minkowski inequality fails: {e1} {e2} {e12} (d = {d})")
        });
    }
    t
}

fn dual_degree_suite() -> Tally {
    let mut t = Tally::new();
    t.eq(dual_degree(3, 2, &[(1, 1)]), Ok(4), "nodal cubic");
    t.eq(dual_degree(3, 2, &[(2, 1)]), Ok(3), "cuspidal cubic");
    t.eq(dual_degree(3, 3, &[]), Ok(12), "smooth cubic surface");
    t
}

fn briancon_speder() -> Tally {
    let mut t = Tally::new();
    match briancon_speder_polygons(4) {
        Ok((s, g)) => {
            t.eq((s.length(), g.length()), (56, 56), "lengths");
            t.eq((s.height(), g.height()), (8, 7), "heights");
            t.eq(
                s.view().dominates(&g.view()),
                true,
                "special dominates generic",
            );
            t.eq(
                g.view().dominates(&s.view()),
                false,
                "generic does not dominate special",
            );
        }
        Err(e) => t.check(false, || format!("β = 4: {e}")),
    }
    t
}

fn roundtrip(rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::new();
    for _ in 0..100 {
        let p = random_general_polygon(rng);
        t.eq(
            NewtonPolygon::from_json(&p.to_json()),
            Ok(p.clone()),
            "polygon JSON",
        );
        t.eq(parse_polygon(&p.to_string()), Ok(p), "polygon text");
    }
    for _ in 0..30 {
        let d = rng.gen_range(2..=3);
        let gens: Vec<Vec<u64>> = (0..4)
            .map(|_| (0..d).map(|_| rng.gen_range(0..5)).collect())
            .collect();
        let n = NewtonPolyhedron::from_support(d, &gens).unwrap();
        t.eq(
            NewtonPolyhedron::from_json(&n.to_json()),
            Ok(n),
            "polyhedron JSON",
        );
    }
    let tower = adjoin(&None, "u", &UPoly::from_ints(&[-3, 0, 1]));
    let u = K::generator(&tower);
    for _ in 0..50 {
        let mut terms = Vec::new();
        for _ in 0..rng.gen_range(1..6) {
            let c = if rng.gen_bool(0.3) {
                &u * &K::int(nonzero(rng, 4)) + K::rat(qr(nonzero(rng, 5), rng.gen_range(1..4)))
            } else {
                K::rat(qr(nonzero(rng, 9), rng.gen_range(1..4)))
            };
            terms.push((rng.gen_range(0..5), rng.gen_range(0..4), c));
        }
        let mut f = YPolynomial::from_terms(terms);
        if rng.gen_bool(0.3) {
            let p = rng.gen_range(1..6);
            f = YPolynomial::new(f.coeffs().iter().map(|c| c.truncate(p)).collect());
        }
        t.eq(parse_ypoly(&print_ypoly(&f)), Ok(f), "polynomial text");
    }
    for _ in 0..20 {
        let g = random_semigroup(rng);
        t.eq(
            parse_semigroup(&print_semigroup(&g)),
            Ok(g),
            "semigroup text",
        );
    }
    for s in [
        "y^2 - x^3",
        "y^2 - 2*x^2",
        "y^3 - x^2*y - x^5",
        "y^2 - x^2 - x^3",
    ] {
        for b in puiseux_expand(&parse_ypoly(s).unwrap(), 6).unwrap() {
            t.eq(parse_branch(&b.to_string()), Ok(b), "branch text");
        }
    }
    t.eq(
        TruncatedSeries::from_terms([(1, K::one())], Some(3)).prec(),
        Some(3),
        "series precision",
    );
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_suites_pass() {
        for s in ["dual-degree", "briancon-speder", "roundtrip"] {
            let o = run_suite(s, 7, Exec::default()).unwrap();
            assert!(o.passed(), "{s}: {:?}", o.failures);
        }
        assert!(run_suite("nope", 7, Exec::default()).is_err());
    }
}
