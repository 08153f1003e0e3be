//! Newton polygons in the positive quadrant and their additive monoid.
//!
//! A polygon is stored in canonical form: two axis offsets and a list of
//! elementary edges `{ℓ/h}` sorted by strictly decreasing slope `h/ℓ`.
//! Because edges of equal slope are merged on construction, structural
//! equality coincides with equality of polygons.

use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extnat::{cmp_ratio, ExtNat, Fin, Inf};
use crate::num::{qu, Q};

/// An elementary polygon `{ℓ/h}`: one edge of horizontal extent `ℓ` and
/// vertical extent `h`. One (not both) of the two may be infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ElementaryPolygon {
    ell: ExtNat,
    h: ExtNat,
}

impl ElementaryPolygon {
    pub fn new(ell: impl Into<ExtNat>, h: impl Into<ExtNat>) -> Result<Self> {
        let (ell, h) = (ell.into(), h.into());
        if ell.is_inf() && h.is_inf() {
            return Err(Error::BothInfinite);
        }
        if ell.is_zero() || h.is_zero() {
            return Err(Error::ZeroDimension);
        }
        Ok(ElementaryPolygon { ell, h })
    }

    /// Finite constructor for internal use; panics on zero entries.
    pub(crate) fn fin(ell: u64, h: u64) -> Self {
        Self::new(ell, h).expect("elementary polygon with zero entry")
    }

    pub fn length(&self) -> ExtNat {
        self.ell
    }

    pub fn height(&self) -> ExtNat {
        self.h
    }

    pub fn is_finite(&self) -> bool {
        !self.ell.is_inf() && !self.h.is_inf()
    }

    /// The slope `h/ℓ` as an extended rational; `None` stands for `+∞`.
    pub fn slope(&self) -> Option<Q> {
        match (self.ell, self.h) {
            (_, Inf) => None,
            (Inf, _) => Some(Q::zero()),
            (Fin(l), Fin(h)) => Some(Q::new(h.into(), l.into())),
        }
    }

    /// Compare slopes `h/ℓ` exactly.
    pub fn cmp_slope(&self, other: &Self) -> Ordering {
        cmp_ratio(self.h, self.ell, other.h, other.ell)
    }

    fn merge(self, other: Self) -> Self {
        ElementaryPolygon {
            ell: self.ell + other.ell,
            h: self.h + other.h,
        }
    }

    pub fn transpose(&self) -> Self {
        ElementaryPolygon {
            ell: self.h,
            h: self.ell,
        }
    }
}

impl fmt::Display for ElementaryPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}/{}}}", self.ell, self.h)
    }
}

/// A lattice point of the plane.
pub type Point = (u64, u64);

/// A Newton polygon in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct NewtonPolygon {
    x_offset: u64,
    y_offset: u64,
    edges: Vec<ElementaryPolygon>,
}

impl NewtonPolygon {
    /// The empty polygon: the additive identity (the whole quadrant).
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn elementary(ell: impl Into<ExtNat>, h: impl Into<ExtNat>) -> Result<Self> {
        Ok(Self::from_edges(vec![ElementaryPolygon::new(ell, h)?]))
    }

    pub fn from_edges(edges: Vec<ElementaryPolygon>) -> Self {
        Self::from_parts(0, 0, edges)
    }

    /// Build a polygon from offsets and an arbitrary multiset of edges.
    pub fn from_parts(x_offset: u64, y_offset: u64, mut edges: Vec<ElementaryPolygon>) -> Self {
        edges.sort_by(|a, b| b.cmp_slope(a));
        let mut merged: Vec<ElementaryPolygon> = Vec::with_capacity(edges.len());
        for e in edges {
            match merged.last_mut() {
                Some(last) if last.cmp_slope(&e) == Ordering::Equal => *last = last.merge(e),
                _ => merged.push(e),
            }
        }
        NewtonPolygon {
            x_offset,
            y_offset,
            edges: merged,
        }
    }

    /// The single-monomial polygon `(a, b) + N²`.
    pub fn monomial(a: u64, b: u64) -> Self {
        Self::from_parts(a, b, Vec::new())
    }

    pub fn x_offset(&self) -> u64 {
        self.x_offset
    }

    pub fn y_offset(&self) -> u64 {
        self.y_offset
    }

    pub fn edges(&self) -> &[ElementaryPolygon] {
        &self.edges
    }

    pub fn is_empty(&self) -> bool {
        self.x_offset == 0 && self.y_offset == 0 && self.edges.is_empty()
    }

    pub fn is_finite_volume(&self) -> bool {
        self.x_offset == 0
            && self.y_offset == 0
            && !self.edges.is_empty()
            && self.edges.iter().all(ElementaryPolygon::is_finite)
    }

    pub fn has_infinite_edge(&self) -> bool {
        self.edges.iter().any(|e| !e.is_finite())
    }

    pub fn is_elementary(&self) -> bool {
        self.x_offset == 0 && self.y_offset == 0 && self.edges.len() == 1
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        Self::from_parts(
            self.x_offset + other.x_offset,
            self.y_offset + other.y_offset,
            edges,
        )
    }

    /// `k`-fold sum of the polygon with itself.
    pub fn scale(&self, k: u64) -> Self {
        let mul = |n: ExtNat| n.checked_mul(Fin(k)).unwrap_or(Fin(0));
        if k == 0 {
            return Self::empty();
        }
        NewtonPolygon {
            x_offset: self.x_offset * k,
            y_offset: self.y_offset * k,
            edges: self
                .edges
                .iter()
                .map(|e| ElementaryPolygon {
                    ell: mul(e.ell),
                    h: mul(e.h),
                })
                .collect(),
        }
    }

    /// The unique decomposition into elementary polygons of pairwise
    /// distinct slopes.
    pub fn canonical_decomposition(&self) -> Result<Vec<ElementaryPolygon>> {
        if !self.is_finite_volume() {
            return Err(Error::NotFiniteVolume);
        }
        Ok(self.edges.clone())
    }

    /// Boundary of the convex hull of `∪ (A + N²)` over the given points.
    pub fn from_support<I: IntoIterator<Item = Point>>(points: I) -> Result<Self> {
        let mut pts: Vec<Point> = points.into_iter().collect();
        if pts.is_empty() {
            return Err(Error::EmptySupport);
        }
        pts.sort_unstable();
        pts.dedup();
        let x_min = pts[0].0;
        let y_min = pts.iter().map(|p| p.1).min().unwrap();
        let start = (
            x_min,
            pts.iter()
                .filter(|p| p.0 == x_min)
                .map(|p| p.1)
                .min()
                .unwrap(),
        );
        let end_x = pts
            .iter()
            .filter(|p| p.1 == y_min)
            .map(|p| p.0)
            .min()
            .unwrap();
        // Lowest point per abscissa within [start.x, end.x].
        let mut column: Vec<Point> = Vec::new();
        for &p in &pts {
            if p.0 > end_x {
                break;
            }
            match column.last() {
                Some(last) if last.0 == p.0 => {}
                _ => column.push(p),
            }
        }
        let mut hull: Vec<Point> = Vec::new();
        for p in column {
            if p.1 > hull.last().map_or(u64::MAX, |l: &Point| l.1) {
                continue;
            }
            while hull.len() >= 2 {
                let a = hull[hull.len() - 2];
                let b = hull[hull.len() - 1];
                // Remove b unless it lies strictly below segment a-p.
                let cross = (b.0 as i128 - a.0 as i128) * (p.1 as i128 - a.1 as i128)
                    - (b.1 as i128 - a.1 as i128) * (p.0 as i128 - a.0 as i128);
                if cross <= 0 {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push(p);
        }
        debug_assert_eq!(hull[0], start);
        let edges = hull
            .windows(2)
            .map(|w| ElementaryPolygon::fin(w[1].0 - w[0].0, w[0].1 - w[1].1))
            .collect();
        Ok(Self::from_parts(x_min, y_min, edges))
    }

    /// `x_offset + Σ ℓ_i`.
    pub fn length(&self) -> ExtNat {
        self.edges
            .iter()
            .fold(Fin(self.x_offset), |acc, e| acc + e.ell)
    }

    /// `y_offset + Σ h_i`.
    pub fn height(&self) -> ExtNat {
        self.edges
            .iter()
            .fold(Fin(self.y_offset), |acc, e| acc + e.h)
    }

    /// Swap the two coordinate axes.
    pub fn transpose(&self) -> Self {
        Self::from_parts(
            self.y_offset,
            self.x_offset,
            self.edges
                .iter()
                .map(ElementaryPolygon::transpose)
                .collect(),
        )
    }

    /// The finite vertices of the boundary, from the top-left one to the
    /// bottom-right one. The region is bounded on the left by a vertical
    /// ray above the first vertex and on the right by a horizontal ray
    /// starting at the last one.
    pub fn vertices(&self) -> Vec<Point> {
        let mut finite = self.edges.iter().filter(|e| e.is_finite());
        let lead = self
            .edges
            .first()
            .filter(|e| e.h.is_inf())
            .map_or(0, |e| e.ell.finite().unwrap());
        let tail = self
            .edges
            .last()
            .filter(|e| e.ell.is_inf())
            .map_or(0, |e| e.h.finite().unwrap());
        let drop: u64 = self
            .edges
            .iter()
            .filter(|e| e.is_finite())
            .map(|e| e.h.finite().unwrap())
            .sum();
        let mut cur = (self.x_offset + lead, self.y_offset + tail + drop);
        let mut out = vec![cur];
        for e in finite.by_ref() {
            cur = (
                cur.0 + e.ell.finite().unwrap(),
                cur.1 - e.h.finite().unwrap(),
            );
            out.push(cur);
        }
        out
    }

    /// Lower boundary ordinate of the region at abscissa `x`; `None` is
    /// `+∞` (left of the vertical ray).
    pub fn boundary_at(&self, x: &Q) -> Option<Q> {
        let vs = self.vertices();
        let first = vs[0];
        if *x < qu(first.0) {
            return None;
        }
        for w in vs.windows(2) {
            let (a, b) = (w[0], w[1]);
            if *x <= qu(b.0) {
                let t = (x - qu(a.0)) / qu(b.0 - a.0);
                return Some(qu(a.1) - t * qu(a.1 - b.1));
            }
        }
        Some(qu(vs.last().unwrap().1))
    }

    /// Whether the lattice point lies in the closed region.
    pub fn contains(&self, p: Point) -> bool {
        self.boundary_at(&qu(p.0)).is_some_and(|b| qu(p.1) >= b)
    }

    /// True iff the region bounded by `self` is contained in the region
    /// bounded by `other`.
    pub fn dominates(&self, other: &Self) -> bool {
        let mut xs: Vec<u64> = self
            .vertices()
            .into_iter()
            .chain(other.vertices())
            .map(|p| p.0)
            .collect();
        xs.sort_unstable();
        xs.dedup();
        let mut probes: Vec<Q> = Vec::new();
        if xs[0] > 0 {
            probes.push(qu(xs[0]) / qu(2));
        }
        for (i, &x) in xs.iter().enumerate() {
            probes.push(qu(x));
            if let Some(&next) = xs.get(i + 1) {
                probes.push((qu(x) + qu(next)) / qu(2));
            }
        }
        probes.push(qu(*xs.last().unwrap() + 1));
        probes
            .iter()
            .all(|x| match (self.boundary_at(x), other.boundary_at(x)) {
                (None, _) => true,
                (Some(_), None) => false,
                (Some(a), Some(b)) => a >= b,
            })
    }

    /// Area of the complement of the region inside the quadrant.
    pub fn covolume2(&self) -> Result<Q> {
        if !self.is_finite_volume() {
            return Err(Error::NotFiniteVolume);
        }
        let vs = self.vertices();
        let twice: u128 = vs
            .windows(2)
            .map(|w| (w[1].0 - w[0].0) as u128 * (w[0].1 + w[1].1) as u128)
            .sum();
        Ok(Q::new(twice.into(), 2.into()))
    }

    /// Largest edge ratio `ℓ/h` (finite edges only), if any edge exists.
    pub fn max_ratio(&self) -> Option<Q> {
        self.edges
            .iter()
            .filter(|e| e.is_finite())
            .map(|e| Q::new(e.ell.finite().unwrap().into(), e.h.finite().unwrap().into()))
            .max()
    }
}

impl fmt::Display for NewtonPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.x_offset != 0 || self.y_offset != 0 {
            parts.push(format!("({},{})", self.x_offset, self.y_offset));
        }
        parts.extend(self.edges.iter().map(|e| e.to_string()));
        if parts.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", parts.join("+"))
    }
}

#[derive(Serialize, Deserialize)]
struct WireEdge {
    l: ExtNat,
    h: ExtNat,
}

#[derive(Serialize, Deserialize)]
struct WirePolygon {
    #[serde(default)]
    x_offset: u64,
    #[serde(default)]
    y_offset: u64,
    #[serde(default)]
    edges: Vec<WireEdge>,
}

impl Serialize for NewtonPolygon {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WirePolygon {
            x_offset: self.x_offset,
            y_offset: self.y_offset,
            edges: self
                .edges
                .iter()
                .map(|e| WireEdge { l: e.ell, h: e.h })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for NewtonPolygon {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = WirePolygon::deserialize(d)?;
        let edges = w
            .edges
            .into_iter()
            .map(|e| ElementaryPolygon::new(e.l, e.h))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        let p = NewtonPolygon::from_parts(w.x_offset, w.y_offset, edges);
        if p.edges.first().is_some_and(|e| e.ell.is_inf()) && p.edges.len() > 1
            || p.edges.iter().filter(|e| e.h.is_inf()).count() > 1
        {
            return Err(serde::de::Error::custom("invalid infinite edges"));
        }
        Ok(p)
    }
}

impl NewtonPolygon {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polygon serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Shorthand used by tests and examples: `poly(&[(2, 1), (3, 2)])`.
pub fn poly(edges: &[(u64, u64)]) -> NewtonPolygon {
    NewtonPolygon::from_edges(
        edges
            .iter()
            .map(|&(l, h)| ElementaryPolygon::fin(l, h))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{q, qr};

    #[test]
    fn make_elementary_examples() {
        let p = NewtonPolygon::elementary(2u64, 1u64).unwrap();
        assert_eq!(p.vertices(), vec![(0, 1), (2, 0)]);
        let ray = NewtonPolygon::elementary(1u64, Inf).unwrap();
        assert_eq!(ray.vertices(), vec![(1, 0)]);
        assert_eq!(ray.boundary_at(&qr(1, 2)), None);
        assert_eq!(
            NewtonPolygon::elementary(0u64, 3u64),
            Err(Error::ZeroDimension)
        );
        assert_eq!(
            NewtonPolygon::elementary(Inf, Inf),
            Err(Error::BothInfinite)
        );
    }

    #[test]
    fn sum_examples() {
        let s = poly(&[(2, 1)]).sum(&poly(&[(3, 2)]));
        assert_eq!(
            s.edges(),
            &[ElementaryPolygon::fin(3, 2), ElementaryPolygon::fin(2, 1)]
        );
        assert_eq!(poly(&[(1, 1)]).sum(&poly(&[(2, 2)])), poly(&[(3, 3)]));
        let (l, h, lp) = (4u64, 3u64, 2u64);
        let s = poly(&[(l, h)]).sum(&NewtonPolygon::elementary(lp, Inf).unwrap());
        assert_eq!(s.edges()[0].height(), Inf);
        assert_eq!(s.vertices(), vec![(lp, h), (l + lp, 0)]);
        assert_eq!(s.length(), Fin(l + lp));
    }

    #[test]
    fn decomposition_examples() {
        let p = NewtonPolygon::from_support([(0, 3), (1, 1), (3, 0)]).unwrap();
        assert_eq!(
            p.canonical_decomposition().unwrap(),
            vec![ElementaryPolygon::fin(1, 2), ElementaryPolygon::fin(2, 1)]
        );
        assert_eq!(
            poly(&[(4, 2)]).canonical_decomposition().unwrap(),
            vec![ElementaryPolygon::fin(4, 2)]
        );
        assert_eq!(
            NewtonPolygon::empty().canonical_decomposition(),
            Err(Error::NotFiniteVolume)
        );
    }

    #[test]
    fn support_examples() {
        assert_eq!(
            NewtonPolygon::from_support([(0, 2), (3, 0)]).unwrap(),
            poly(&[(3, 2)])
        );
        assert_eq!(
            NewtonPolygon::from_support([(0, 2), (1, 1), (3, 0)]).unwrap(),
            poly(&[(1, 1), (2, 1)])
        );
        let m = NewtonPolygon::from_support([(1, 1)]).unwrap();
        assert_eq!((m.x_offset(), m.y_offset(), m.edges().len()), (1, 1, 0));
        assert_eq!(
            NewtonPolygon::from_support(Vec::<Point>::new()),
            Err(Error::EmptySupport)
        );
        // Collinear and interior points are absorbed.
        assert_eq!(
            NewtonPolygon::from_support([(0, 2), (1, 1), (2, 0), (2, 2), (5, 5)]).unwrap(),
            poly(&[(2, 2)])
        );
    }

    #[test]
    fn length_height_examples() {
        let p = poly(&[(1, 2), (2, 1)]);
        assert_eq!((p.length(), p.height()), (Fin(3), Fin(3)));
        let beta = 4;
        let bs = poly(&[(2 * beta, 2), (2 * beta * (2 * beta - 2), 2 * beta - 2)]);
        assert_eq!((bs.length(), bs.height()), (Fin(56), Fin(8)));
        let r = NewtonPolygon::elementary(1u64, Inf).unwrap();
        assert_eq!((r.length(), r.height()), (Fin(1), Inf));
    }

    #[test]
    fn boundary_examples() {
        let p = poly(&[(2, 1)]);
        assert_eq!(p.boundary_at(&q(1)), Some(qr(1, 2)));
        assert_eq!(p.boundary_at(&q(5)), Some(q(0)));
        let bs = poly(&[(8, 2), (48, 6)]);
        assert_eq!(bs.vertices(), vec![(0, 8), (8, 6), (56, 0)]);
        assert_eq!(bs.boundary_at(&q(8)), Some(q(6)));
    }

    #[test]
    fn dominance_examples() {
        let special = poly(&[(8, 2), (48, 6)]);
        let generic = poly(&[(56, 7)]);
        assert!(special.dominates(&generic));
        assert!(!generic.dominates(&special));
        assert!(special.dominates(&special));
        let (a, b) = (poly(&[(2, 1)]), poly(&[(1, 2)]));
        assert!(!a.dominates(&b) && !b.dominates(&a));
    }

    #[test]
    fn covolume_examples() {
        assert_eq!(poly(&[(2, 1)]).covolume2().unwrap(), q(1));
        assert_eq!(poly(&[(1, 2), (2, 1)]).covolume2().unwrap(), q(3));
        assert_eq!(poly(&[(3, 2)]).covolume2().unwrap(), q(3));
        assert_eq!(
            NewtonPolygon::monomial(1, 0).covolume2(),
            Err(Error::NotFiniteVolume)
        );
    }

    #[test]
    fn json_round_trip_and_normalization() {
        let p = NewtonPolygon::from_json(r#"{"edges":[{"l":2,"h":1},{"l":3,"h":2}]}"#).unwrap();
        assert_eq!(
            p.to_json(),
            r#"{"x_offset":0,"y_offset":0,"edges":[{"l":3,"h":2},{"l":2,"h":1}]}"#
        );
        let r = NewtonPolygon::from_json(r#"{"edges":[{"l":1,"h":"inf"}]}"#).unwrap();
        assert_eq!(r, NewtonPolygon::elementary(1u64, Inf).unwrap());
        assert!(NewtonPolygon::from_json(r#"{"edges":[{"l":0,"h":1}]}"#).is_err());
    }
}
