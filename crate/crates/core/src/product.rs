//! The `*` product of Newton polygons.

use crate::error::{Error, Result};
use crate::extnat::{ExtNat, Fin};
use crate::polygon::{ElementaryPolygon, NewtonPolygon};

/// `{ℓ/h} * {ℓ'/h'} = {ℓℓ' / min(ℓh', ℓ'h)}`.
pub fn product_elementary(
    p: &ElementaryPolygon,
    q: &ElementaryPolygon,
) -> Result<ElementaryPolygon> {
    let (l, h, lp, hp) = (p.length(), p.height(), q.length(), q.height());
    let ell = l.checked_mul(lp).ok_or(Error::IndeterminateForm)?;
    let a = l.checked_mul(hp).ok_or(Error::IndeterminateForm)?;
    let b = lp.checked_mul(h).ok_or(Error::IndeterminateForm)?;
    ElementaryPolygon::new(ell, a.min(b)).map_err(|_| Error::IndeterminateForm)
}

fn admitted_infinite(p: &NewtonPolygon) -> bool {
    p.is_elementary() && p.has_infinite_edge()
}

/// `P * Q = Σ_{i,j} P_i * Q_j` over canonical decompositions.
pub fn product(p: &NewtonPolygon, q: &NewtonPolygon) -> Result<NewtonPolygon> {
    let (pi, qi) = (admitted_infinite(p), admitted_infinite(q));
    if pi && qi {
        return Err(Error::UnsupportedInfiniteCombination);
    }
    let ok = |x: &NewtonPolygon, inf: bool| inf || x.is_finite_volume();
    if !ok(p, pi) || !ok(q, qi) {
        return Err(Error::NotFiniteVolume);
    }
    let mut edges = Vec::with_capacity(p.edges().len() * q.edges().len());
    for a in p.edges() {
        for b in q.edges() {
            edges.push(product_elementary(a, b)?);
        }
    }
    Ok(NewtonPolygon::from_edges(edges))
}

/// Product computed from an arbitrary list of elementary summands of each
/// factor; agrees with [`product`] whatever decomposition is used.
pub fn product_of_decompositions(
    p: &[ElementaryPolygon],
    q: &[ElementaryPolygon],
) -> Result<NewtonPolygon> {
    let mut edges = Vec::new();
    for a in p {
        for b in q {
            edges.push(product_elementary(a, b)?);
        }
    }
    Ok(NewtonPolygon::from_edges(edges))
}

/// True iff every canonical edge satisfies `ℓ ≥ h`.
pub fn is_special(p: &NewtonPolygon) -> Result<bool> {
    Ok(p.canonical_decomposition()?
        .iter()
        .all(|e| e.length() >= e.height()))
}

/// `Σ_{i,j} min(ℓ_i h'_j, ℓ'_j h_i)`.
pub fn mixed_height(p: &NewtonPolygon, q: &NewtonPolygon) -> Result<u64> {
    let (dp, dq) = (p.canonical_decomposition()?, q.canonical_decomposition()?);
    let mut total = 0u64;
    for a in &dp {
        for b in &dq {
            let x = a.length().checked_mul(b.height()).unwrap();
            let y = b.length().checked_mul(a.height()).unwrap();
            match x.min(y) {
                Fin(v) => total += v,
                ExtNat::Inf => unreachable!("finite-volume edges"),
            }
        }
    }
    Ok(total)
}

/// The polygon `{1/1}`, the unit of `*` on special polygons.
pub fn one() -> NewtonPolygon {
    NewtonPolygon::elementary(1u64, 1u64).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extnat::Inf;
    use crate::polygon::poly;

    fn el(l: impl Into<ExtNat>, h: impl Into<ExtNat>) -> ElementaryPolygon {
        ElementaryPolygon::new(l, h).unwrap()
    }

    #[test]
    fn elementary_examples() {
        assert_eq!(
            product_elementary(&el(2u64, 1u64), &el(3u64, 1u64)).unwrap(),
            el(6u64, 2u64)
        );
        for (l, h) in [(1, 1), (3, 7), (5, 2)] {
            assert_eq!(
                product_elementary(&el(l, h), &el(1u64, Inf)).unwrap(),
                el(l, h)
            );
            assert_eq!(
                product_elementary(&el(l, h), &el(Inf, 4u64)).unwrap(),
                el(Inf, l * 4)
            );
        }
        assert_eq!(
            product_elementary(&el(3u64, 3u64), &el(4u64, 4u64)).unwrap(),
            el(12u64, 12u64)
        );
    }

    #[test]
    fn polygon_examples() {
        let p = poly(&[(2, 1), (1, 2)]);
        assert_eq!(product(&p, &one()).unwrap(), poly(&[(2, 1), (1, 1)]));
        let s = poly(&[(3, 2), (5, 1)]);
        assert_eq!(product(&s, &one()).unwrap(), s);
        let r = NewtonPolygon::elementary(1u64, Inf).unwrap();
        assert_eq!(product(&p, &r).unwrap(), p);
        assert_eq!(product(&r, &r), Err(Error::UnsupportedInfiniteCombination));
        assert_eq!(
            product(&NewtonPolygon::monomial(1, 0), &p),
            Err(Error::NotFiniteVolume)
        );
    }

    #[test]
    fn special_and_mixed_height_examples() {
        assert!(is_special(&poly(&[(2, 1), (3, 3)])).unwrap());
        assert!(!is_special(&poly(&[(1, 2)])).unwrap());
        assert_eq!(mixed_height(&poly(&[(2, 1)]), &poly(&[(1, 2)])).unwrap(), 1);
        assert_eq!(mixed_height(&poly(&[(2, 1)]), &poly(&[(2, 1)])).unwrap(), 2);
        assert_eq!(mixed_height(&one(), &one()).unwrap(), 1);
    }
}
