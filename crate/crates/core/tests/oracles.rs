//! Library results against brute-force oracles written independently here.

use newtonpoly::curve::{merle_polygon, milnor_number, validate_semigroup, DEFAULT_SEED};
use newtonpoly::field::K;
use newtonpoly::num::qu;
use newtonpoly::polygon::poly;
use newtonpoly::polyhedra::NewtonPolyhedron;
use newtonpoly::product::mixed_height;
use newtonpoly::text::parse_ypoly;
use newtonpoly::ypoly::{sylvester_resultant, YPolynomial};
use newtonpoly::{NewtonPolygon, Q};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Pt = (u64, u64);

fn weights() -> Vec<(i64, i64)> {
    (0..=12)
        .flat_map(|a| (0..=12).map(move |b| (a, b)))
        .filter(|&w| w != (0, 0))
        .collect()
}

fn dot(w: (i64, i64), p: Pt) -> i64 {
    w.0 * p.0 as i64 + w.1 * p.1 as i64
}

fn support_min(s: &[Pt], w: (i64, i64)) -> i64 {
    s.iter().map(|&p| dot(w, p)).min().unwrap()
}

/// Membership in `conv(S) + R²₊` through its supporting half-planes.
fn in_region(s: &[Pt], p: Pt) -> bool {
    weights()
        .into_iter()
        .all(|w| dot(w, p) >= support_min(s, w))
}

fn on_boundary(s: &[Pt], p: Pt) -> bool {
    in_region(s, p)
        && weights()
            .into_iter()
            .any(|w| dot(w, p) == support_min(s, w))
}

/// Area under the Newton boundary by Pick's theorem on the complement.
fn pick_covolume(s: &[Pt]) -> Q {
    let l = s.iter().filter(|p| p.1 == 0).map(|p| p.0).min().unwrap();
    let h = s.iter().filter(|p| p.0 == 0).map(|p| p.1).min().unwrap();
    let (mut interior, mut boundary) = (0i64, 0i64);
    for x in 0..=l {
        for y in 0..=h {
            let b = on_boundary(s, (x, y));
            if in_region(s, (x, y)) && !b {
                continue;
            }
            if x == 0 || y == 0 || b {
                boundary += 1;
            } else {
                interior += 1;
            }
        }
    }
    Q::new((2 * interior + boundary - 2).into(), 2.into())
}

/// Support in `[0,8]²` containing points on both axes but not the origin.
fn random_convenient_support(rng: &mut ChaCha8Rng) -> Vec<Pt> {
    let mut s = vec![(rng.gen_range(1..=8), 0), (0, rng.gen_range(1..=8))];
    for _ in 0..rng.gen_range(0..5) {
        let p = (rng.gen_range(0..=8), rng.gen_range(0..=8));
        if p != (0, 0) {
            s.push(p);
        }
    }
    s
}

#[test]
fn hull_matches_half_plane_membership() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let mut s = random_convenient_support(&mut rng);
        if rng.gen_bool(0.3) {
            // Offsets: drop the axis points.
            s = s.into_iter().map(|(a, b)| (a + 1, b + 2)).collect();
        }
        let p = NewtonPolygon::from_support(s.clone()).unwrap();
        for x in 0..=14 {
            for y in 0..=14 {
                assert_eq!(
                    p.contains((x, y)),
                    in_region(&s, (x, y)),
                    "{s:?} at ({x},{y})"
                );
            }
        }
    }
}

#[test]
fn covolume_matches_pick() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..60 {
        let s = random_convenient_support(&mut rng);
        let p = NewtonPolygon::from_support(s.clone()).unwrap();
        assert_eq!(p.covolume2().unwrap(), pick_covolume(&s), "{s:?}");
    }
}

#[test]
fn mixed_height_matches_pick_polarization() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..40 {
        let (s1, s2) = (
            random_convenient_support(&mut rng),
            random_convenient_support(&mut rng),
        );
        let sum: Vec<Pt> = s1
            .iter()
            .flat_map(|a| s2.iter().map(move |b| (a.0 + b.0, a.1 + b.1)))
            .collect();
        let (p1, p2) = (
            NewtonPolygon::from_support(s1.clone()).unwrap(),
            NewtonPolygon::from_support(s2.clone()).unwrap(),
        );
        let polar = pick_covolume(&sum) - pick_covolume(&s1) - pick_covolume(&s2);
        assert_eq!(qu(mixed_height(&p1, &p2).unwrap()), polar);
    }
}

/// Determinant by Gaussian elimination over the ground field.
fn det(mut m: Vec<Vec<K>>) -> K {
    let n = m.len();
    let mut d = K::one();
    for c in 0..n {
        let Some(r) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return K::zero();
        };
        if r != c {
            m.swap(r, c);
            d = -d;
        }
        d = &d * &m[c][c];
        for r in c + 1..n {
            let f = &m[r][c] / &m[c][c];
            for k in c..n {
                let v = &m[r][k] - &(&f * &m[c][k]);
                m[r][k] = v;
            }
        }
    }
    d
}

fn sylvester_det(a: &[K], b: &[K]) -> K {
    let (n, m) = (a.len() - 1, b.len() - 1);
    let size = n + m;
    let mut rows = Vec::new();
    for i in 0..m {
        let mut row = vec![K::zero(); size];
        for (j, c) in a.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..n {
        let mut row = vec![K::zero(); size];
        for (j, c) in b.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    det(rows)
}

#[test]
fn resultant_matches_sylvester_determinant() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..30 {
        let mk = |rng: &mut ChaCha8Rng| {
            let n = rng.gen_range(1..=3u32);
            let mut terms = vec![(1, 0, n)];
            for j in 0..n {
                for i in 0..3 {
                    if rng.gen_bool(0.4) {
                        terms.push((rng.gen_range(-4..=4), i, j));
                    }
                }
            }
            YPolynomial::from_int_terms(&terms)
        };
        let (f, g) = (mk(&mut rng), mk(&mut rng));
        let r = sylvester_resultant(&f, &g).unwrap();
        for x0 in -3..=3 {
            let x0 = K::int(x0);
            let (a, b) = (f.specialize_x(&x0), g.specialize_x(&x0));
            assert_eq!(r.eval(&x0), sylvester_det(a.coeffs(), b.coeffs()));
        }
    }
}

#[test]
fn monomial_multiplicity_closed_forms() {
    for a in 1..=4u64 {
        for b in 1..=4u64 {
            let n = NewtonPolyhedron::from_support(2, &[vec![a, 0], vec![0, b]]).unwrap();
            assert_eq!(n.monomial_multiplicity().unwrap(), a * b);
            for c in 1..=3u64 {
                let n = NewtonPolyhedron::from_support(
                    3,
                    &[vec![a, 0, 0], vec![0, b, 0], vec![0, 0, c]],
                )
                .unwrap();
                assert_eq!(n.monomial_multiplicity().unwrap(), a * b * c);
            }
        }
    }
    // Powers of the maximal ideal: e(m^k) = k^d.
    for d in 2..=3usize {
        for k in 1..=3u64 {
            let gens: Vec<Vec<u64>> = (0..=k)
                .flat_map(|i| (0..=k - i).map(move |j| (i, j)))
                .filter_map(|(i, j)| match d {
                    2 if i + j == k => Some(vec![i, j]),
                    3 => Some(vec![i, j, k - i - j]),
                    _ => None,
                })
                .collect();
            let n = NewtonPolyhedron::from_support(d, &gens).unwrap();
            assert_eq!(n.monomial_multiplicity().unwrap(), k.pow(d as u32));
        }
    }
}

#[test]
fn milnor_numbers_of_brieskorn_curves() {
    for a in 2..=4u32 {
        for b in 2..=6u32 {
            let f = parse_ypoly(&format!("y^{a} - x^{b}")).unwrap();
            let want = u64::from((a - 1) * (b - 1));
            assert_eq!(
                milnor_number(&f, DEFAULT_SEED).unwrap(),
                want,
                "y^{a} - x^{b}"
            );
        }
    }
}

#[test]
fn merle_polygon_of_one_pair_branches() {
    for n in 2..=5u64 {
        for m in n + 1..=11 {
            if num_integer::gcd(n, m) != 1 {
                continue;
            }
            let s = validate_semigroup(&[n, m]).unwrap();
            assert_eq!(
                merle_polygon(&s).view(),
                poly(&[((n - 1) * (m - 1), n - 1)])
            );
        }
    }
}
