//! Truncated power series in one variable with exact coefficients.
//!
//! A series carries an explicit precision: terms of order `≥ prec` are
//! unknown. `prec = None` marks an exact polynomial.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{join, Tower, UPoly, K};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TruncatedSeries {
    terms: BTreeMap<u32, K>,
    prec: Option<u32>,
}

fn min_prec(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(x), Some(y)) => Some(x.min(y)),
    }
}

impl TruncatedSeries {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(K::one())
    }

    pub fn constant(c: K) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: K, e: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        TruncatedSeries { terms, prec: None }
    }

    /// Build from `(exponent, coefficient)` pairs; repeated exponents add.
    pub fn from_terms<I: IntoIterator<Item = (u32, K)>>(terms: I, prec: Option<u32>) -> Self {
        let mut map: BTreeMap<u32, K> = BTreeMap::new();
        for (e, c) in terms {
            if prec.is_some_and(|p| e >= p) {
                continue;
            }
            let slot = map.entry(e).or_default();
            *slot += &c;
        }
        map.retain(|_, c| !c.is_zero());
        TruncatedSeries { terms: map, prec }
    }

    pub fn from_upoly(p: &UPoly) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (i as u32, c.clone())),
            None,
        )
    }

    pub fn prec(&self) -> Option<u32> {
        self.prec
    }

    pub fn is_exact(&self) -> bool {
        self.prec.is_none()
    }

    /// Lower the precision to `p` (never raises it).
    pub fn truncate(&self, p: u32) -> Self {
        let prec = min_prec(self.prec, Some(p));
        Self::from_terms(self.terms.clone(), prec)
    }

    /// Forget the precision bound: treat the known part as exact.
    pub fn known_part(&self) -> Self {
        TruncatedSeries {
            terms: self.terms.clone(),
            prec: None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &K)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: u32) -> K {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// True when no nonzero term is known.
    pub fn is_zero_known(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_exact_zero(&self) -> bool {
        self.terms.is_empty() && self.prec.is_none()
    }

    /// Order of the first known nonzero term.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().next().copied()
    }

    /// A lower bound for the true order: the order if known, else the
    /// precision; `None` for the exact zero series.
    pub fn order_bound(&self) -> Option<u32> {
        self.order().or(self.prec)
    }

    pub fn is_unit(&self) -> bool {
        self.order() == Some(0)
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().next_back().copied().unwrap_or(0)
    }

    pub fn tower(&self) -> Tower {
        self.terms.values().fold(None, |t, k| join(&t, k.tower()))
    }

    pub fn add(&self, o: &Self) -> Self {
        let prec = min_prec(self.prec, o.prec);
        Self::from_terms(
            self.terms
                .iter()
                .chain(o.terms.iter())
                .map(|(e, c)| (*e, c.clone())),
            prec,
        )
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
            prec: self.prec,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_exact_zero() || o.is_exact_zero() {
            return Self::zero();
        }
        // Unknown terms of one factor meet the first term of the other.
        let pa = self.prec.map(|p| p + o.order_bound().unwrap_or(0));
        let pb = o.prec.map(|p| p + self.order_bound().unwrap_or(0));
        let prec = min_prec(pa, pb);
        let mut map: BTreeMap<u32, K> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let e = ea + eb;
                if prec.is_some_and(|p| e >= p) {
                    break;
                }
                let slot = map.entry(e).or_default();
                *slot += &(ca * cb);
            }
        }
        map.retain(|_, c| !c.is_zero());
        TruncatedSeries { terms: map, prec }
    }

    pub fn scale(&self, k: &K) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        TruncatedSeries {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
            prec: self.prec,
        }
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: u32) -> Self {
        TruncatedSeries {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
            prec: self.prec.map(|p| p + k),
        }
    }

    /// Divide by `x^k`; every known term must have order `≥ k`.
    pub fn unshift(&self, k: u32) -> Self {
        assert!(self.order().is_none_or(|o| o >= k), "series not divisible");
        TruncatedSeries {
            terms: self.terms.iter().map(|(e, c)| (e - k, c.clone())).collect(),
            prec: self.prec.map(|p| p.saturating_sub(k)),
        }
    }

    /// Substitute `x ↦ λ · x^q`.
    pub fn substitute_monomial(&self, lambda: &K, q: u32) -> Self {
        let mut pw = K::one();
        let mut last = 0u32;
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            pw = &pw * &lambda.pow((e - last) as u64);
            last = *e;
            terms.insert(e * q, c * &pw);
        }
        TruncatedSeries {
            terms,
            prec: self.prec.map(|p| p * q),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse of a unit, to precision `target` (or the
    /// series' own precision if smaller).
    pub fn inverse(&self, target: u32) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::DivisionByZero);
        }
        let prec = min_prec(self.prec, Some(target)).unwrap();
        let c0inv = self.coeff(0).inv()?;
        let mut out: Vec<K> = vec![c0inv.clone()];
        for n in 1..prec {
            let mut s = K::zero();
            for (e, c) in self.terms.range(1..=n) {
                s += &(c * &out[(n - e) as usize]);
            }
            out.push(-&(&s * &c0inv));
        }
        Ok(Self::from_terms(
            out.into_iter().enumerate().map(|(i, c)| (i as u32, c)),
            Some(prec),
        ))
    }

    pub fn derivative(&self) -> Self {
        TruncatedSeries {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| **e > 0)
                .map(|(e, c)| (e - 1, c * &K::int(*e as i64)))
                .collect(),
            prec: self.prec.map(|p| p.saturating_sub(1)),
        }
    }

    /// Evaluate the known part at a point.
    pub fn eval(&self, x: &K) -> K {
        let mut acc = K::zero();
        for (e, c) in &self.terms {
            acc += &(c * &x.pow(*e as u64));
        }
        acc
    }

    /// Print in the variable `var`, with a trailing `O(var^N)` when
    /// truncated.
    pub fn display_in(&self, var: &str) -> String {
        let mut s = String::new();
        for (e, c) in &self.terms {
            let neg = c.looks_negative();
            let a = if neg { -c } else { c.clone() };
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = match e {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{e}"),
            };
            let coeff = if a.is_compound() {
                format!("({a})")
            } else {
                a.to_string()
            };
            if *e == 0 {
                s.push_str(&coeff);
            } else if a.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{coeff}*{mono}"));
            }
        }
        if let Some(p) = self.prec {
            if !s.is_empty() {
                s.push_str(" + ");
            }
            s.push_str(&format!("O({var}^{p})"));
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(terms: &[(u32, i64)], prec: Option<u32>) -> TruncatedSeries {
        TruncatedSeries::from_terms(terms.iter().map(|&(e, c)| (e, K::int(c))), prec)
    }

    #[test]
    fn precision_tracking() {
        let a = s(&[(0, 1), (1, 1)], Some(4));
        let b = s(&[(2, 1)], Some(6));
        let p = a.mul(&b);
        // min(4 + 2, 6 + 0)
        assert_eq!(p.prec(), Some(6));
        assert_eq!(p, s(&[(2, 1), (3, 1)], Some(6)));
        assert_eq!(a.add(&b).prec(), Some(4));
        let exact = s(&[(1, 2)], None);
        assert_eq!(exact.mul(&exact), s(&[(2, 4)], None));
    }

    #[test]
    fn inverse_of_unit() {
        let a = s(&[(0, 1), (1, -1)], None);
        let inv = a.inverse(5).unwrap();
        assert_eq!(inv, s(&[(0, 1), (1, 1), (2, 1), (3, 1), (4, 1)], Some(5)));
        assert_eq!(a.mul(&inv), s(&[(0, 1)], Some(5)));
        assert!(s(&[(1, 1)], None).inverse(3).is_err());
    }

    #[test]
    fn substitution_and_display() {
        let a = s(&[(1, 1), (2, 3)], Some(3));
        let b = a.substitute_monomial(&K::int(2), 2);
        assert_eq!(b, s(&[(2, 2), (4, 12)], Some(6)));
        assert_eq!(b.display_in("t"), "2*t^2 + 12*t^4 + O(t^6)");
        assert_eq!(s(&[(0, -1)], None).display_in("t"), "-1");
    }
}
