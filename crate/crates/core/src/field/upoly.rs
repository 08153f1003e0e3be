//! Dense univariate polynomials over a ground field.

use std::fmt;

use super::{join, Tower, K};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    c: Vec<K>,
}

impl UPoly {
    /// Coefficients lowest degree first.
    pub fn new(mut c: Vec<K>) -> UPoly {
        while c.last().is_some_and(K::is_zero) {
            c.pop();
        }
        UPoly { c }
    }

    pub fn zero() -> UPoly {
        UPoly { c: Vec::new() }
    }

    pub fn constant(k: K) -> UPoly {
        UPoly::new(vec![k])
    }

    /// The polynomial `x`.
    pub fn x() -> UPoly {
        UPoly::new(vec![K::zero(), K::one()])
    }

    pub fn from_ints(c: &[i64]) -> UPoly {
        UPoly::new(c.iter().map(|&n| K::int(n)).collect())
    }

    pub fn coeffs(&self) -> &[K] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> K {
        self.c.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; the zero polynomial has degree `None`.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> K {
        self.c.last().cloned().unwrap_or_default()
    }

    pub fn tower(&self) -> Tower {
        self.c.iter().fold(None, |t, k| join(&t, &k.t))
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        UPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        UPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn neg(&self) -> UPoly {
        UPoly::new(self.c.iter().map(|k| -k).collect())
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![K::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        UPoly::new(out)
    }

    pub fn scale(&self, k: &K) -> UPoly {
        UPoly::new(self.c.iter().map(|c| c * k).collect())
    }

    pub fn pow(&self, n: u32) -> UPoly {
        let mut acc = UPoly::constant(K::one());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![K::zero(); k];
        c.extend(self.c.iter().cloned());
        UPoly::new(c)
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let inv = self.lc().inv().unwrap();
        self.scale(&inv)
    }

    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let mut r = self.c.clone();
        let dd = d.c.len() - 1;
        if r.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let inv = d.lc().inv().unwrap();
        let mut q = vec![K::zero(); r.len() - dd];
        while r.len() > dd {
            let top = r.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let c = &top * &inv;
            let shift = r.len() - dd;
            for (i, b) in d.c[..dd].iter().enumerate() {
                r[shift + i] -= &(&c * b);
            }
            q[shift] = c;
        }
        (UPoly::new(q), UPoly::new(r))
    }

    pub fn rem(&self, d: &UPoly) -> UPoly {
        self.divrem(d).1
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn exact_div(&self, d: &UPoly) -> UPoly {
        let (q, r) = self.divrem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &K::int(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &K) -> K {
        self.c
            .iter()
            .rev()
            .fold(K::zero(), |acc, c| &(&acc * x) + c)
    }

    /// `p(x + s)`.
    pub fn taylor_shift(&self, s: &K) -> UPoly {
        let lin = UPoly::new(vec![s.clone(), K::one()]);
        self.c.iter().rev().fold(UPoly::zero(), |acc, c| {
            acc.mul(&lin).add(&UPoly::constant(c.clone()))
        })
    }

    /// `p(s · x)`.
    pub fn scale_var(&self, s: &K) -> UPoly {
        let mut pw = K::one();
        let mut out = Vec::with_capacity(self.c.len());
        for c in &self.c {
            out.push(c * &pw);
            pw = &pw * s;
        }
        UPoly::new(out)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).deg() == 0
    }

    /// Resultant by the Euclidean algorithm, with the Sylvester sign
    /// convention `Res(a, b) = lc(a)^deg b · Π b(α)`.
    pub fn resultant(&self, o: &UPoly) -> K {
        if self.is_zero() || o.is_zero() {
            return K::zero();
        }
        let (mut a, mut b) = (self.clone(), o.clone());
        let mut acc = K::one();
        loop {
            let (n, m) = (a.deg(), b.deg());
            if m == 0 {
                return &acc * &b.lc().pow(n as u64);
            }
            let r = a.rem(&b);
            if r.is_zero() {
                return K::zero();
            }
            let k = r.deg();
            if (n * m) % 2 == 1 {
                acc = -acc;
            }
            acc = &acc * &b.lc().pow((n - k) as u64);
            a = b;
            b = r;
        }
    }

    /// Lagrange interpolation through `(x_i, y_i)` with distinct nodes.
    pub fn interpolate(xs: &[K], ys: &[K]) -> UPoly {
        // Newton divided differences.
        let n = xs.len();
        let mut coef: Vec<K> = ys.to_vec();
        for j in 1..n {
            for i in (j..n).rev() {
                let num = &coef[i] - &coef[i - 1];
                let den = &xs[i] - &xs[i - j];
                coef[i] = &num / &den;
            }
        }
        let mut p = UPoly::constant(coef[n - 1].clone());
        for i in (0..n - 1).rev() {
            let lin = UPoly::new(vec![-&xs[i], K::one()]);
            p = p.mul(&lin).add(&UPoly::constant(coef[i].clone()));
        }
        p
    }

    /// Print as a polynomial in the named variable.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, c) in self.c.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.looks_negative();
            let a = if neg { -c } else { c.clone() };
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 {
                if a.is_compound() {
                    s.push_str(&format!("({a})"));
                } else {
                    s.push_str(&a.to_string());
                }
            } else if a.is_one() {
                s.push_str(&mono);
            } else if a.is_compound() {
                s.push_str(&format!("({a})*{mono}"));
            } else {
                s.push_str(&format!("{a}*{mono}"));
            }
        }
        s
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in("z"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euclid_and_resultant() {
        let a = UPoly::from_ints(&[-1, 0, 1]);
        let b = UPoly::from_ints(&[-1, 1]);
        assert_eq!(a.gcd(&b), b);
        let (q, r) = a.divrem(&b);
        assert_eq!((q, r.is_zero()), (UPoly::from_ints(&[1, 1]), true));
        // Res(x^2 - 2, x - 3) = 9 - 2.
        let c = UPoly::from_ints(&[-2, 0, 1]);
        assert_eq!(c.resultant(&UPoly::from_ints(&[-3, 1])), K::int(7));
        assert_eq!(UPoly::from_ints(&[-3, 1]).resultant(&c), K::int(7));
        // Res(x - a, x - b) = b - a under lc(a)^m Π b(α).
        assert_eq!(
            UPoly::from_ints(&[-2, 1]).resultant(&UPoly::from_ints(&[-5, 1])),
            K::int(-3)
        );
    }

    #[test]
    fn shift_and_interpolate() {
        let p = UPoly::from_ints(&[1, 2, 3]);
        let s = p.taylor_shift(&K::int(1));
        assert_eq!(s, UPoly::from_ints(&[6, 8, 3]));
        let xs: Vec<K> = (0..3).map(K::int).collect();
        let ys: Vec<K> = xs.iter().map(|x| p.eval(x)).collect();
        assert_eq!(UPoly::interpolate(&xs, &ys), p);
        assert_eq!(p.display_in("w"), "3*w^2 + 2*w + 1");
    }
}
