//! Exact rational helpers shared across modules.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qu(n: u64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Floor of a nonnegative rational as `u64`.
pub fn floor_u64(x: &Q) -> u64 {
    let f = x.floor().to_integer();
    u64::try_from(f).expect("value does not fit in u64")
}

pub fn is_integral(x: &Q) -> bool {
    x.is_integer()
}

pub fn abs(x: &Q) -> Q {
    x.abs()
}

pub fn pow(x: &Q, e: i64) -> Q {
    if e >= 0 {
        let mut r = Q::one();
        for _ in 0..e {
            r *= x;
        }
        r
    } else {
        assert!(!x.is_zero(), "negative power of zero");
        pow(&x.recip(), -e)
    }
}

/// Solve the square system `a · x = b` by Gaussian elimination; `None` if
/// the matrix is singular.
pub fn solve(mut a: Vec<Vec<Q>>, mut b: Vec<Q>) -> Option<Vec<Q>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] * &inv;
            for c in col..n {
                let t = &factor * &a[col][c];
                a[r][c] -= t;
            }
            let t = &factor * &b[col];
            b[r] -= t;
        }
    }
    Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

/// Rank of a rational matrix.
pub fn rank(mut a: Vec<Vec<Q>>) -> usize {
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..a.len() {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &a[r][c];
            for k in c..cols {
                let t = &f * &a[r][k];
                a[i][k] -= t;
            }
        }
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_and_rank() {
        let a = vec![vec![q(2), q(1)], vec![q(1), q(3)]];
        assert_eq!(
            solve(a.clone(), vec![q(3), q(5)]),
            Some(vec![qr(4, 5), qr(7, 5)])
        );
        assert_eq!(rank(a), 2);
        assert_eq!(rank(vec![vec![q(1), q(2)], vec![q(2), q(4)]]), 1);
        assert_eq!(
            solve(vec![vec![q(1), q(2)], vec![q(2), q(4)]], vec![q(0), q(0)]),
            None
        );
    }
}
