//! Exact arithmetic in towers of simple algebraic extensions of `Q`.
//!
//! An element of level `k` is a polynomial of degree `< deg m_k` in the
//! `k`-th generator with coefficients of level `< k`. Representations are
//! canonical (trailing zeros trimmed, constants collapsed to the lowest
//! level), so structural equality is field equality.

mod factor;
mod modp;
mod upoly;

pub use factor::{factor, factor_squarefree, squarefree_decomposition};
pub use upoly::UPoly;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::num::Q;

/// Raw element data; interpreted relative to a tower.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Elem {
    Rat(Q),
    Ext(usize, Vec<Elem>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level {
    pub name: String,
    /// Monic defining polynomial, lowest degree first.
    pub modulus: Vec<Elem>,
}

impl Level {
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }
}

/// A ground field: `Q` followed by a list of simple extensions.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GroundField {
    levels: Vec<Level>,
}

pub type Tower = Option<Arc<GroundField>>;

impl GroundField {
    pub fn rationals() -> Tower {
        None
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn degree(&self) -> usize {
        self.levels.iter().map(Level::degree).product()
    }
}

pub fn tower_levels(t: &Tower) -> &[Level] {
    t.as_deref().map_or(&[], |g| &g.levels)
}

pub fn tower_degree(t: &Tower) -> usize {
    t.as_deref().map_or(1, GroundField::degree)
}

/// Extend a tower by a root of the monic irreducible polynomial `m`.
/// Irreducibility is the caller's obligation.
pub fn adjoin(t: &Tower, name: &str, m: &UPoly) -> Tower {
    let mut levels = tower_levels(t).to_vec();
    let lc = m.lc();
    let modulus = m.coeffs().iter().map(|c| (c / &lc).e).collect();
    levels.push(Level {
        name: name.to_string(),
        modulus,
    });
    Some(Arc::new(GroundField { levels }))
}

/// The first `len` levels of a tower.
pub fn prefix(t: &Tower, len: usize) -> Tower {
    if len == 0 {
        return None;
    }
    Some(Arc::new(GroundField {
        levels: tower_levels(t)[..len].to_vec(),
    }))
}

/// Longer of two towers; towers met in one computation are nested.
pub fn join(a: &Tower, b: &Tower) -> Tower {
    match (a, b) {
        (None, _) => b.clone(),
        (_, None) => a.clone(),
        (Some(x), Some(y)) => {
            if Arc::ptr_eq(x, y) || x.levels.len() >= y.levels.len() {
                debug_assert!(y.levels.iter().zip(&x.levels).all(|(p, q)| p == q));
                a.clone()
            } else {
                debug_assert!(x.levels.iter().zip(&y.levels).all(|(p, q)| p == q));
                b.clone()
            }
        }
    }
}

impl Elem {
    pub fn zero() -> Elem {
        Elem::Rat(Q::zero())
    }

    pub fn level(&self) -> usize {
        match self {
            Elem::Rat(_) => 0,
            Elem::Ext(k, _) => *k,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Elem::Rat(q) if q.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Elem::Rat(q) if q.is_one())
    }

    fn canon(k: usize, mut v: Vec<Elem>) -> Elem {
        while v.last().is_some_and(Elem::is_zero) {
            v.pop();
        }
        match v.len() {
            0 => Elem::zero(),
            1 => v.pop().unwrap(),
            _ => Elem::Ext(k, v),
        }
    }

    /// Coefficients as a polynomial in generator `k` (level must be ≤ k).
    fn coeffs_at(&self, k: usize) -> Vec<Elem> {
        match self {
            Elem::Ext(j, v) if *j == k => v.clone(),
            _ => vec![self.clone()],
        }
    }
}

fn e_add(a: &Elem, b: &Elem) -> Elem {
    match (a, b) {
        (Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x + y),
        _ => {
            let k = a.level().max(b.level());
            let (ca, cb) = (a.coeffs_at(k), b.coeffs_at(k));
            let n = ca.len().max(cb.len());
            let z = Elem::zero();
            let v = (0..n)
                .map(|i| e_add(ca.get(i).unwrap_or(&z), cb.get(i).unwrap_or(&z)))
                .collect();
            Elem::canon(k, v)
        }
    }
}

fn e_neg(a: &Elem) -> Elem {
    match a {
        Elem::Rat(x) => Elem::Rat(-x),
        Elem::Ext(k, v) => Elem::Ext(*k, v.iter().map(e_neg).collect()),
    }
}

fn e_scale(levels: &[Level], s: &Elem, v: &[Elem]) -> Vec<Elem> {
    v.iter().map(|c| e_mul(levels, s, c)).collect()
}

/// Product of raw coefficient vectors (no reduction).
fn raw_mul(levels: &[Level], a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Elem::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] = e_add(&out[i + j], &e_mul(levels, x, y));
        }
    }
    out
}

/// Reduce modulo the monic modulus of level `k`.
fn reduce(levels: &[Level], k: usize, mut v: Vec<Elem>) -> Vec<Elem> {
    let m = &levels[k - 1].modulus;
    let n = m.len() - 1;
    while v.len() > n {
        let top = v.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let shift = v.len() - n;
        for (i, c) in m[..n].iter().enumerate() {
            let t = e_mul(levels, &top, c);
            v[shift + i] = e_add(&v[shift + i], &e_neg(&t));
        }
    }
    v
}

fn e_mul(levels: &[Level], a: &Elem, b: &Elem) -> Elem {
    match (a, b) {
        (Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x * y),
        _ if a.is_zero() || b.is_zero() => Elem::zero(),
        _ => {
            let (la, lb) = (a.level(), b.level());
            let k = la.max(lb);
            if la < k {
                return Elem::canon(k, e_scale(levels, a, &b.coeffs_at(k)));
            }
            if lb < k {
                return Elem::canon(k, e_scale(levels, b, &a.coeffs_at(k)));
            }
            let prod = raw_mul(levels, &a.coeffs_at(k), &b.coeffs_at(k));
            Elem::canon(k, reduce(levels, k, prod))
        }
    }
}

fn trim(v: &mut Vec<Elem>) {
    while v.last().is_some_and(Elem::is_zero) {
        v.pop();
    }
}

/// Division with remainder of coefficient vectors over a field of level
/// below the generator.
fn raw_divrem(levels: &[Level], a: &[Elem], b: &[Elem]) -> (Vec<Elem>, Vec<Elem>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let inv = e_inv(levels, &b[db]);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut quo = vec![Elem::zero(); r.len() - db];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = e_mul(levels, r.last().unwrap(), &inv);
        for (i, bc) in b.iter().enumerate() {
            let t = e_mul(levels, &c, bc);
            r[shift + i] = e_add(&r[shift + i], &e_neg(&t));
        }
        quo[shift] = c;
        r.pop();
        trim(&mut r);
    }
    (quo, r)
}

fn e_inv(levels: &[Level], a: &Elem) -> Elem {
    match a {
        Elem::Rat(x) => Elem::Rat(x.recip()),
        Elem::Ext(k, v) => {
            // Extended Euclid: track s with s·a ≡ r (mod m).
            let m = levels[*k - 1].modulus.clone();
            let (mut r0, mut r1) = (m, v.clone());
            let (mut s0, mut s1): (Vec<Elem>, Vec<Elem>) = (Vec::new(), vec![Elem::Rat(Q::one())]);
            while r1.len() > 1 {
                let (qt, r) = raw_divrem(levels, &r0, &r1);
                let qs = raw_mul(levels, &qt, &s1);
                let n = s0.len().max(qs.len());
                let z = Elem::zero();
                let mut s2: Vec<Elem> = (0..n)
                    .map(|i| e_add(s0.get(i).unwrap_or(&z), &e_neg(qs.get(i).unwrap_or(&z))))
                    .collect();
                trim(&mut s2);
                r0 = std::mem::replace(&mut r1, r);
                s0 = std::mem::replace(&mut s1, s2);
            }
            assert!(
                !r1.is_empty(),
                "element is not invertible (reducible modulus?)"
            );
            let c = e_inv(levels, &r1[0]);
            let s = e_scale(levels, &c, &s1);
            Elem::canon(*k, reduce(levels, *k, s))
        }
    }
}

/// An element of a ground field.
#[derive(Clone, Debug)]
pub struct K {
    pub(crate) t: Tower,
    pub(crate) e: Elem,
}

impl PartialEq for K {
    fn eq(&self, other: &Self) -> bool {
        self.e == other.e
    }
}

impl Eq for K {}

impl Hash for K {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.e.hash(state)
    }
}

impl K {
    pub fn zero() -> K {
        K {
            t: None,
            e: Elem::zero(),
        }
    }

    pub fn one() -> K {
        K::rat(Q::one())
    }

    pub fn rat(q: Q) -> K {
        K {
            t: None,
            e: Elem::Rat(q),
        }
    }

    pub fn int(n: i64) -> K {
        K::rat(Q::from_integer(BigInt::from(n)))
    }

    /// The generator of the top level of the tower.
    pub fn generator(t: &Tower) -> K {
        let k = tower_levels(t).len();
        assert!(k > 0, "the rationals have no generator");
        K {
            t: t.clone(),
            e: Elem::Ext(k, vec![Elem::zero(), Elem::Rat(Q::one())]),
        }
    }

    /// Generator of level `k` (1-based) within the tower.
    pub fn generator_at(t: &Tower, k: usize) -> K {
        K {
            t: t.clone(),
            e: Elem::Ext(k, vec![Elem::zero(), Elem::Rat(Q::one())]),
        }
    }

    pub fn from_elem(t: &Tower, e: Elem) -> K {
        K { t: t.clone(), e }
    }

    pub fn tower(&self) -> &Tower {
        &self.t
    }

    pub fn elem(&self) -> &Elem {
        &self.e
    }

    pub fn is_zero(&self) -> bool {
        self.e.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.e.is_one()
    }

    pub fn as_rational(&self) -> Option<&Q> {
        match &self.e {
            Elem::Rat(q) => Some(q),
            Elem::Ext(..) => None,
        }
    }

    /// Re-attach to a (longer) tower.
    pub fn with_tower(mut self, t: &Tower) -> K {
        self.t = join(&self.t, t);
        self
    }

    pub fn inv(&self) -> Result<K> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(K {
            t: self.t.clone(),
            e: e_inv(tower_levels(&self.t), &self.e),
        })
    }

    pub fn pow(&self, mut n: u64) -> K {
        let mut base = self.clone();
        let mut acc = K::one().with_tower(&self.t);
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    /// Whether the printed form needs parentheses as a factor.
    pub fn is_compound(&self) -> bool {
        match &self.e {
            Elem::Rat(_) => false,
            Elem::Ext(_, v) => {
                v.iter().filter(|c| !c.is_zero()).count() > 1 || {
                    let c = v.iter().find(|c| !c.is_zero()).unwrap();
                    !c.is_one()
                }
            }
        }
    }

    /// Whether the printed form starts with a minus sign.
    pub fn looks_negative(&self) -> bool {
        looks_negative(&self.e)
    }
}

impl Default for K {
    fn default() -> Self {
        K::zero()
    }
}

impl From<Q> for K {
    fn from(q: Q) -> K {
        K::rat(q)
    }
}

impl From<i64> for K {
    fn from(n: i64) -> K {
        K::int(n)
    }
}

impl<'a> Add<&'a K> for &'a K {
    type Output = K;
    fn add(self, o: &K) -> K {
        K {
            t: join(&self.t, &o.t),
            e: e_add(&self.e, &o.e),
        }
    }
}

impl<'a> Sub<&'a K> for &'a K {
    type Output = K;
    fn sub(self, o: &K) -> K {
        K {
            t: join(&self.t, &o.t),
            e: e_add(&self.e, &e_neg(&o.e)),
        }
    }
}

impl<'a> Mul<&'a K> for &'a K {
    type Output = K;
    fn mul(self, o: &K) -> K {
        let t = join(&self.t, &o.t);
        let e = e_mul(tower_levels(&t), &self.e, &o.e);
        K { t, e }
    }
}

impl<'a> Div<&'a K> for &'a K {
    type Output = K;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: &K) -> K {
        self * &o.inv().expect("division by zero")
    }
}

impl Neg for &K {
    type Output = K;
    fn neg(self) -> K {
        K {
            t: self.t.clone(),
            e: e_neg(&self.e),
        }
    }
}

impl Neg for K {
    type Output = K;
    fn neg(self) -> K {
        -&self
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<K> for K {
            type Output = K;
            fn $m(self, o: K) -> K {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a K> for K {
            type Output = K;
            fn $m(self, o: &K) -> K {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<K> for &'a K {
            type Output = K;
            fn $m(self, o: K) -> K {
                self.$m(&o)
            }
        }
    };
}

owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);
owned_ops!(Div, div);

impl AddAssign<&K> for K {
    fn add_assign(&mut self, o: &K) {
        *self = &*self + o;
    }
}

impl SubAssign<&K> for K {
    fn sub_assign(&mut self, o: &K) {
        *self = &*self - o;
    }
}

impl MulAssign<&K> for K {
    fn mul_assign(&mut self, o: &K) {
        *self = &*self * o;
    }
}

fn looks_negative(e: &Elem) -> bool {
    match e {
        Elem::Rat(q) => q.is_negative(),
        Elem::Ext(_, v) => looks_negative(v.last().unwrap()),
    }
}

fn fmt_elem(f: &mut fmt::Formatter<'_>, levels: &[Level], e: &Elem) -> fmt::Result {
    match e {
        Elem::Rat(q) => write!(f, "{q}"),
        Elem::Ext(k, v) => {
            let name = levels
                .get(k - 1)
                .map_or_else(|| format!("a{k}"), |l| l.name.clone());
            let mut first = true;
            for (i, c) in v.iter().enumerate().rev() {
                if c.is_zero() {
                    continue;
                }
                let neg = looks_negative(c);
                let c_abs = if neg { e_neg(c) } else { c.clone() };
                if first {
                    if neg {
                        write!(f, "-")?;
                    }
                } else {
                    write!(f, " {} ", if neg { "-" } else { "+" })?;
                }
                first = false;
                let mono = match i {
                    0 => String::new(),
                    1 => name.clone(),
                    _ => format!("{name}^{i}"),
                };
                if i == 0 {
                    fmt_elem(f, levels, &c_abs)?;
                } else if c_abs.is_one() {
                    write!(f, "{mono}")?;
                } else if matches!(c_abs, Elem::Rat(_)) {
                    fmt_elem(f, levels, &c_abs)?;
                    write!(f, "*{mono}")?;
                } else {
                    write!(f, "(")?;
                    fmt_elem(f, levels, &c_abs)?;
                    write!(f, ")*{mono}")?;
                }
            }
            Ok(())
        }
    }
}

impl fmt::Display for K {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_elem(f, tower_levels(&self.t), &self.e)
    }
}

/// Display a tower as its chain of `adjoin` declarations, or `Q`.
pub fn describe_tower(t: &Tower) -> String {
    let levels = tower_levels(t);
    if levels.is_empty() {
        return "Q".to_string();
    }
    let mut out = String::from("Q");
    for (k, l) in levels.iter().enumerate() {
        let sub = prefix(t, k);
        let poly = UPoly::new(
            l.modulus
                .iter()
                .map(|c| K::from_elem(&sub, c.clone()))
                .collect(),
        );
        out.push_str(&format!("({}: {})", l.name, poly.display_in(&l.name)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::q;

    fn sqrt2() -> Tower {
        adjoin(
            &None,
            "u",
            &UPoly::new(vec![K::int(-2), K::zero(), K::one()]),
        )
    }

    #[test]
    fn quadratic_arithmetic() {
        let t = sqrt2();
        let u = K::generator(&t);
        assert_eq!(&u * &u, K::int(2));
        let a = &u + &K::one();
        let inv = a.inv().unwrap();
        assert_eq!(&a * &inv, K::one());
        assert_eq!(inv, &u - &K::one());
        assert_eq!(a.to_string(), "u + 1");
    }

    #[test]
    fn two_level_tower() {
        // v^2 = u with u^2 = 2, so v is a fourth root of 2.
        let t1 = sqrt2();
        let u = K::generator(&t1);
        let m = UPoly::new(vec![-&u, K::zero(), K::one()]);
        let t2 = adjoin(&t1, "v", &m);
        let v = K::generator(&t2);
        assert_eq!(v.pow(4), K::int(2));
        let x = &(&v + &u) + &K::rat(q(3));
        assert_eq!(&x * &x.inv().unwrap(), K::one());
        assert_eq!(tower_degree(&t2), 4);
        assert_eq!(describe_tower(&t2), "Q(u: u^2 - 2)(v: v^2 - u)");
    }
}
