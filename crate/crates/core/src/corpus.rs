//! Test curves: branches built from semigroup parameterizations and a few
//! reducible singularities.

use crate::field::{UPoly, K};
use crate::series::TruncatedSeries;
use crate::text::parse_ypoly;
use crate::ypoly::{sylvester_resultant, YPolynomial};

/// Equation of the branch `x = t^n`, `y = Σ c·t^k`, obtained as
/// `Res_t(t^n - x, y - Y(t))` normalized to be monic in `y`.
pub fn branch_equation(n: u32, y_terms: &[(i64, u32)]) -> YPolynomial {
    let a = YPolynomial::from_int_terms(&[(1, 0, n), (-1, 1, 0)]);
    let nodes: Vec<K> = (0..=i64::from(n)).map(K::int).collect();
    let values: Vec<TruncatedSeries> = nodes
        .iter()
        .map(|y0| {
            let b = YPolynomial::from_terms(
                std::iter::once((0, 0, y0.clone()))
                    .chain(y_terms.iter().map(|&(c, k)| (0, k, K::int(-c)))),
            );
            sylvester_resultant(&a, &b).expect("exact unitary inputs")
        })
        .collect();
    let max_a = values
        .iter()
        .map(TruncatedSeries::max_degree)
        .max()
        .unwrap_or(0);
    let mut terms = Vec::new();
    for i in 0..=max_a {
        let ys: Vec<K> = values.iter().map(|v| v.coeff(i)).collect();
        let p = UPoly::interpolate(&nodes, &ys);
        for (b, c) in p.coeffs().iter().enumerate() {
            terms.push((i, b as u32, c.clone()));
        }
    }
    let f = YPolynomial::from_terms(terms);
    let lc = f
        .coeff(f.degree())
        .coeff(0)
        .inv()
        .expect("monic up to a constant");
    f.scale(&TruncatedSeries::constant(lc))
}

#[derive(Clone, Debug)]
pub struct CorpusCurve {
    pub name: String,
    pub f: YPolynomial,
    /// Semigroup of the branch, for irreducible curves.
    pub semigroup: Option<Vec<u64>>,
}

/// A branch `x = t^n`, `y = Σ c·t^k` with its semigroup.
pub type BranchSpec = (Vec<u64>, u32, Vec<(i64, u32)>);

/// Irreducible corpus curves.
pub fn branch_specs() -> Vec<BranchSpec> {
    let mut out = Vec::new();
    for k in 1..=5u32 {
        out.push((vec![2, u64::from(2 * k + 1)], 2, vec![(1, 2 * k + 1)]));
    }
    out.push((vec![3, 4], 3, vec![(1, 4)]));
    out.push((vec![3, 5], 3, vec![(1, 5)]));
    out.push((vec![4, 6, 13], 4, vec![(1, 6), (1, 7)]));
    out
}

pub fn corpus() -> Vec<CorpusCurve> {
    let mut out: Vec<CorpusCurve> = branch_specs()
        .into_iter()
        .map(|(s, n, y)| CorpusCurve {
            name: crate::text::print_semigroup(&s),
            f: branch_equation(n, &y),
            semigroup: Some(s),
        })
        .collect();
    for (name, f) in [
        ("A1", "y^2 - x^2"),
        ("A3", "y^2 - x^4"),
        ("D4", "y^3 - x^2*y"),
        ("cusp+line", "(y^2 - x^3)*(y - x)"),
        ("two cusps", "(y^2 - x^3)*(y^2 - 2*x^3)"),
    ] {
        out.push(CorpusCurve {
            name: name.into(),
            f: parse_ypoly(f).unwrap(),
            semigroup: None,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn branch_equations() {
        assert_eq!(
            branch_equation(2, &[(1, 3)]),
            parse_ypoly("y^2 - x^3").unwrap()
        );
        assert_eq!(
            branch_equation(3, &[(1, 4)]),
            parse_ypoly("y^3 - x^4").unwrap()
        );
        let f = branch_equation(4, &[(1, 6), (1, 7)]);
        assert_eq!(f.degree(), 4);
        // The parameterization satisfies the equation.
        let t = |c: i64, e: u32| TruncatedSeries::monomial(K::int(c), e);
        let x = t(1, 4);
        let y = t(1, 6).add(&t(1, 7));
        let mut acc = TruncatedSeries::zero();
        for c in f.coeffs().iter().rev() {
            let cx = c.terms().fold(TruncatedSeries::zero(), |s, (a, k)| {
                s.add(&x.pow(a).scale(k))
            });
            acc = acc.mul(&y).add(&cx);
        }
        assert!(acc.is_exact_zero());
    }
}
