use newtonpoly::num::qu;
use newtonpoly::product::{is_special, one, product};
use newtonpoly::text::parse_polygon;
use newtonpoly::{ElementaryPolygon, Fin, NewtonPolygon};
use proptest::prelude::*;

fn edge() -> impl Strategy<Value = ElementaryPolygon> {
    (1u64..=6, 1u64..=6).prop_map(|(l, h)| ElementaryPolygon::new(l, h).unwrap())
}

fn finite_polygon() -> impl Strategy<Value = NewtonPolygon> {
    prop::collection::vec(edge(), 1..4).prop_map(NewtonPolygon::from_edges)
}

fn any_polygon() -> impl Strategy<Value = NewtonPolygon> {
    (
        finite_polygon(),
        0u64..3,
        0u64..3,
        prop::option::of(1u64..4),
        prop::option::of(1u64..4),
    )
        .prop_map(|(p, a, b, up, right)| {
            let mut edges = p.edges().to_vec();
            if let Some(l) = up {
                edges.push(ElementaryPolygon::new(l, newtonpoly::Inf).unwrap());
            }
            if let Some(h) = right {
                edges.push(ElementaryPolygon::new(newtonpoly::Inf, h).unwrap());
            }
            NewtonPolygon::from_parts(a, b, edges)
        })
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn sum_is_a_commutative_monoid(p in any_polygon(), q in any_polygon(), r in any_polygon()) {
        prop_assert_eq!(p.sum(&q), q.sum(&p));
        prop_assert_eq!(p.sum(&q).sum(&r), p.sum(&q.sum(&r)));
        prop_assert_eq!(p.sum(&NewtonPolygon::empty()), p.clone());
    }

    #[test]
    fn length_and_height_add(p in finite_polygon(), q in finite_polygon()) {
        let s = p.sum(&q);
        prop_assert_eq!(s.length(), Fin(p.length().finite().unwrap() + q.length().finite().unwrap()));
        prop_assert_eq!(s.height(), Fin(p.height().finite().unwrap() + q.height().finite().unwrap()));
        prop_assert!(s.dominates(&p));
    }

    #[test]
    fn transpose_is_an_involution(p in any_polygon()) {
        prop_assert_eq!(p.transpose().transpose(), p.clone());
        prop_assert_eq!(p.transpose().length(), p.height());
    }

    #[test]
    fn product_distributes(p in finite_polygon(), q in finite_polygon(), r in finite_polygon()) {
        let lhs = product(&p, &q.sum(&r)).unwrap();
        let rhs = product(&p, &q).unwrap().sum(&product(&p, &r).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn product_lengths_multiply(p in finite_polygon(), q in finite_polygon()) {
        let pq = product(&p, &q).unwrap();
        prop_assert_eq!(
            pq.length(),
            Fin(p.length().finite().unwrap() * q.length().finite().unwrap())
        );
        prop_assert_eq!(product(&pq, &pq).unwrap().height().finite().map(qu), Some(pq.covolume2().unwrap() * qu(2)));
    }

    #[test]
    fn one_is_a_unit_on_special_polygons(p in finite_polygon()) {
        if is_special(&p).unwrap() {
            prop_assert_eq!(product(&p, &one()).unwrap(), p.clone());
        }
    }

    #[test]
    fn text_and_json_round_trip(p in any_polygon()) {
        prop_assert_eq!(parse_polygon(&p.to_string()).unwrap(), p.clone());
        prop_assert_eq!(NewtonPolygon::from_json(&p.to_json()).unwrap(), p);
    }

    /// Support of `t^a - u^b + λ t^p u^q` with `p, q ≥ 1`: the axis points fix length and
    /// height; the middle term adds a vertex exactly when it lies strictly
    /// below the segment joining them.
    #[test]
    fn three_term_support(a in 1u64..12, b in 1u64..12, p in 1u64..12, q in 1u64..12) {
        let n = NewtonPolygon::from_support([(a, 0), (0, b), (p, q)]).unwrap();
        prop_assert_eq!(n.length(), Fin(a));
        prop_assert_eq!(n.height(), Fin(b));
        let below = p * b + q * a < a * b;
        prop_assert_eq!(n.edges().len(), if below { 2 } else { 1 });
        prop_assert_eq!(n.vertices().contains(&(p, q)), below);
    }
}
