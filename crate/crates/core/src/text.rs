//! Text formats: polynomials with `adjoin` declarations, series, field
//! towers, semigroups and polygons.
//!
//! A polynomial is written as a sparse sum of terms `c * x^a * y^b`,
//! optionally preceded by declarations `adjoin u: u^2 - 3;` and followed
//! by precision markers: a bare `O(x^N)` truncates every coefficient, while
//! `O(x^N) * y^b` truncates only the coefficient of `y^b`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::extnat::ExtNat;
use crate::field::{adjoin, tower_levels, Tower, UPoly, K};
use crate::polygon::{ElementaryPolygon, NewtonPolygon};
use crate::series::TruncatedSeries;
use crate::ypoly::YPolynomial;

fn perr<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse(msg.into()))
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = cs[st..i].iter().collect();
            out.push(Tok::Num(digits.parse().unwrap()));
        } else if c.is_alphabetic() || c == '_' {
            let st = i;
            while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(cs[st..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return perr(format!("unexpected character '{c}'"));
        }
    }
    Ok(out)
}

/// Sparse bivariate polynomial used while evaluating an expression.
type Poly2 = BTreeMap<(u32, u32), K>;

fn p_const(k: K) -> Poly2 {
    let mut m = Poly2::new();
    if !k.is_zero() {
        m.insert((0, 0), k);
    }
    m
}

fn p_add(mut a: Poly2, b: &Poly2) -> Poly2 {
    for (e, c) in b {
        let slot = a.entry(*e).or_default();
        *slot += c;
    }
    a.retain(|_, c| !c.is_zero());
    a
}

fn p_neg(a: &Poly2) -> Poly2 {
    a.iter().map(|(e, c)| (*e, -c)).collect()
}

fn p_mul(a: &Poly2, b: &Poly2) -> Poly2 {
    let mut out = Poly2::new();
    for ((i1, j1), c1) in a {
        for ((i2, j2), c2) in b {
            let slot = out.entry((i1 + i2, j1 + j2)).or_default();
            *slot += &(c1 * c2);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Precision marker `O(x^N)`, optionally restricted to one power of `y`.
struct OTerm {
    prec: u32,
    y_power: Option<u32>,
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    x: &'a str,
    y: Option<&'a str>,
    gens: &'a [(String, K)],
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            perr(format!("expected '{c}'"))
        }
    }

    fn small(&mut self) -> Result<u32> {
        match self.next() {
            Some(Tok::Num(n)) => u32::try_from(n).or_else(|_| perr("exponent too large")),
            _ => perr("expected an exponent"),
        }
    }

    /// Top-level sum, which may contain precision markers.
    fn top(&mut self) -> Result<(Poly2, Vec<OTerm>)> {
        let mut acc = Poly2::new();
        let mut os = Vec::new();
        let mut first = true;
        loop {
            let neg = if self.eat('-') {
                true
            } else if first || self.eat('+') {
                false
            } else {
                break;
            };
            first = false;
            if self.peek() == Some(&Tok::Ident("O".into())) {
                os.push(self.o_term()?);
                continue;
            }
            let t = self.product()?;
            acc = p_add(acc, &if neg { p_neg(&t) } else { t });
        }
        if self.pos != self.toks.len() {
            return perr("trailing input");
        }
        Ok((acc, os))
    }

    fn o_term(&mut self) -> Result<OTerm> {
        self.next();
        self.expect('(')?;
        match self.next() {
            Some(Tok::Ident(v)) if v == self.x => {}
            _ => return perr(format!("expected O({}^N)", self.x)),
        }
        let prec = if self.eat('^') { self.small()? } else { 1 };
        self.expect(')')?;
        let mut y_power = None;
        if self.eat('*') {
            match (self.next(), self.y) {
                (Some(Tok::Ident(v)), Some(y)) if v == y => {}
                _ => return perr("expected a power of y after O(...)*"),
            }
            y_power = Some(if self.eat('^') { self.small()? } else { 1 });
        }
        Ok(OTerm { prec, y_power })
    }

    fn sum(&mut self) -> Result<Poly2> {
        let mut acc = Poly2::new();
        let mut first = true;
        loop {
            let neg = if self.eat('-') {
                true
            } else if first || self.eat('+') {
                false
            } else {
                break;
            };
            first = false;
            let t = self.product()?;
            acc = p_add(acc, &if neg { p_neg(&t) } else { t });
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<Poly2> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = p_mul(&acc, &self.power()?);
            } else if self.eat('/') {
                let d = self.power()?;
                let k = match (d.len(), d.get(&(0, 0))) {
                    (1, Some(k)) => k.clone(),
                    _ => return perr("division by a non-constant"),
                };
                let inv = k.inv().or_else(|_| perr("division by zero"))?;
                acc = p_mul(&acc, &p_const(inv));
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<Poly2> {
        let base = self.atom()?;
        if self.eat('^') {
            let n = self.small()?;
            let mut acc = p_const(K::one());
            for _ in 0..n {
                acc = p_mul(&acc, &base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly2> {
        match self.next() {
            Some(Tok::Num(n)) => Ok(p_const(K::rat(BigRational::from_integer(n)))),
            Some(Tok::Sym('(')) => {
                let v = self.sum()?;
                self.expect(')')?;
                Ok(v)
            }
            Some(Tok::Sym('-')) => Ok(p_neg(&self.power()?)),
            Some(Tok::Ident(v)) => {
                if v == self.x {
                    Ok(Poly2::from([((1, 0), K::one())]))
                } else if Some(v.as_str()) == self.y {
                    Ok(Poly2::from([((0, 1), K::one())]))
                } else if let Some((_, k)) = self.gens.iter().find(|(n, _)| *n == v) {
                    Ok(p_const(k.clone()))
                } else {
                    perr(format!("unknown symbol '{v}'"))
                }
            }
            Some(t) => perr(format!("unexpected token {t:?}")),
            None => perr("unexpected end of input"),
        }
    }
}

fn generators(t: &Tower) -> Vec<(String, K)> {
    tower_levels(t)
        .iter()
        .enumerate()
        .map(|(k, l)| (l.name.clone(), K::generator_at(t, k + 1)))
        .collect()
}

fn parse_expr(s: &str, x: &str, y: Option<&str>, t: &Tower) -> Result<(Poly2, Vec<OTerm>)> {
    let gens = generators(t);
    let mut p = Parser {
        toks: lex(s)?,
        pos: 0,
        x,
        y,
        gens: &gens,
    };
    if p.toks.is_empty() {
        return perr("empty expression");
    }
    p.top()
}

/// Parse a univariate polynomial in `var` over the tower.
pub fn parse_upoly(s: &str, var: &str, t: &Tower) -> Result<UPoly> {
    let (p, os) = parse_expr(s, var, None, t)?;
    if !os.is_empty() {
        return perr("precision marker in an exact polynomial");
    }
    let deg = p.keys().map(|e| e.0).max().unwrap_or(0) as usize;
    let mut c = vec![K::zero(); deg + 1];
    for ((i, _), k) in p {
        c[i as usize] = k;
    }
    Ok(UPoly::new(c))
}

fn add_level(t: &Tower, name: &str, body: &str) -> Result<Tower> {
    if name == "x" || name == "y" || name == "t" || name == "O" {
        return perr(format!("reserved generator name '{name}'"));
    }
    if tower_levels(t).iter().any(|l| l.name == name) {
        return perr(format!("generator '{name}' declared twice"));
    }
    let m = parse_upoly(body, name, t)?;
    if m.deg() < 2 {
        return perr(format!(
            "defining polynomial of '{name}' must have degree >= 2"
        ));
    }
    Ok(adjoin(t, name, &m))
}

/// Parse a polynomial in `x` and `y`, with optional `adjoin` declarations.
pub fn parse_ypoly(s: &str) -> Result<YPolynomial> {
    let mut t: Tower = None;
    let mut body: Option<&str> = None;
    for stmt in s.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        if body.is_some() {
            return perr("declarations must precede the polynomial");
        }
        if let Some(rest) = stmt.strip_prefix("adjoin") {
            let (name, m) = rest
                .split_once(':')
                .ok_or_else(|| Error::Parse("expected 'adjoin NAME: POLY'".into()))?;
            t = add_level(&t, name.trim(), m)?;
        } else {
            body = Some(stmt);
        }
    }
    let body = body.ok_or_else(|| Error::Parse("missing polynomial".into()))?;
    let (p, os) = parse_expr(body, "x", Some("y"), &t)?;
    let deg_terms = p.keys().map(|e| e.1).max();
    let deg_o = os.iter().filter_map(|o| o.y_power).max();
    let deg = deg_terms.max(deg_o).unwrap_or(0) as usize;
    let mut precs: Vec<Option<u32>> = vec![None; deg + 1];
    for o in &os {
        let range = match o.y_power {
            Some(b) => b as usize..b as usize + 1,
            None => 0..deg + 1,
        };
        for j in range {
            precs[j] = Some(precs[j].map_or(o.prec, |q| q.min(o.prec)));
        }
    }
    let mut rows: Vec<Vec<(u32, K)>> = vec![Vec::new(); deg + 1];
    for ((a, b), k) in p {
        rows[b as usize].push((a, k.with_tower(&t)));
    }
    Ok(YPolynomial::new(
        rows.into_iter()
            .zip(precs)
            .map(|(r, p)| TruncatedSeries::from_terms(r, p))
            .collect(),
    ))
}

/// Parse a series in `var` over the tower, with an optional `O(var^N)`.
pub fn parse_series(s: &str, var: &str, t: &Tower) -> Result<TruncatedSeries> {
    let (p, os) = parse_expr(s, var, None, t)?;
    let prec = os.iter().map(|o| o.prec).min();
    Ok(TruncatedSeries::from_terms(
        p.into_iter().map(|((a, _), k)| (a, k.with_tower(t))),
        prec,
    ))
}

/// Coefficient as it appears in front of a monomial.
pub(crate) fn coeff_text(c: &K) -> String {
    if c.is_compound() {
        format!("({c})")
    } else {
        c.to_string()
    }
}

/// Print `terms` (already ordered) as a signed sum of monomials.
pub(crate) fn signed_sum<'a, I>(terms: I, mono: impl Fn(u32, u32) -> String) -> String
where
    I: IntoIterator<Item = (u32, u32, &'a K)>,
{
    let mut s = String::new();
    for (a, b, c) in terms {
        let neg = c.looks_negative();
        let abs = if neg { -c } else { c.clone() };
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let m = mono(a, b);
        if m.is_empty() {
            s.push_str(&coeff_text(&abs));
        } else if abs.is_one() {
            s.push_str(&m);
        } else {
            s.push_str(&format!("{}*{m}", coeff_text(&abs)));
        }
    }
    s
}

fn var_pow(v: &str, e: u32) -> Option<String> {
    match e {
        0 => None,
        1 => Some(v.to_string()),
        _ => Some(format!("{v}^{e}")),
    }
}

/// The `adjoin` declarations for a tower, one per line.
pub fn print_declarations(t: &Tower) -> String {
    let mut out = String::new();
    for (k, l) in tower_levels(t).iter().enumerate() {
        let sub = crate::field::prefix(t, k);
        let m = UPoly::new(
            l.modulus
                .iter()
                .map(|c| K::from_elem(&sub, c.clone()))
                .collect(),
        );
        out.push_str(&format!("adjoin {}: {};\n", l.name, m.display_in(&l.name)));
    }
    out
}

/// Print a polynomial; `parse_ypoly(print_ypoly(f)) == f`.
pub fn print_ypoly(f: &YPolynomial) -> String {
    let mut terms = f.terms();
    terms.sort_by(|p, q| q.1.cmp(&p.1).then(p.0.cmp(&q.0)));
    let mut s = signed_sum(terms.iter().map(|(a, b, c)| (*a, *b, c)), |a, b| {
        [var_pow("x", a), var_pow("y", b)]
            .into_iter()
            .flatten()
            .collect::<Vec<_>>()
            .join("*")
    });
    let precs: Vec<Option<u32>> = f.coeffs().iter().map(TruncatedSeries::prec).collect();
    let uniform = precs.first().copied().flatten().filter(|p| {
        precs.iter().all(|q| *q == Some(*p))
            && !f
                .coeffs()
                .last()
                .is_some_and(TruncatedSeries::is_zero_known)
    });
    let mut markers = Vec::new();
    if let Some(p) = uniform {
        markers.push(format!("O(x^{p})"));
    } else {
        for (j, p) in precs.iter().enumerate() {
            if let Some(p) = p {
                markers.push(format!("O(x^{p})*y^{j}"));
            }
        }
    }
    for m in markers {
        if !s.is_empty() {
            s.push_str(" + ");
        }
        s.push_str(&m);
    }
    if s.is_empty() {
        s.push('0');
    }
    format!("{}{s}", print_declarations(&f.tower()))
}

/// Parse a tower description `Q(u: u^2 - 2)(v: v^2 - u)`.
pub fn parse_tower(s: &str) -> Result<Tower> {
    let s = s.trim();
    let mut rest = s
        .strip_prefix('Q')
        .ok_or_else(|| Error::Parse("tower must start with Q".into()))?
        .trim_start();
    let mut t: Tower = None;
    while !rest.is_empty() {
        let inner = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse("expected '(' in tower".into()))?;
        let close = inner
            .find(')')
            .ok_or_else(|| Error::Parse("unbalanced tower".into()))?;
        // Moduli may contain parentheses; find the matching one.
        let mut depth = 1;
        let mut end = None;
        for (i, c) in inner.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth == 0 {
                        end = Some(i);
                        break;
                    }
                }
                _ => {}
            }
        }
        let end = end.unwrap_or(close);
        let (name, m) = inner[..end]
            .split_once(':')
            .ok_or_else(|| Error::Parse("expected 'name: poly' in tower".into()))?;
        t = add_level(&t, name.trim(), m)?;
        rest = inner[end + 1..].trim_start();
    }
    Ok(t)
}

/// Parse `<4,6,13>` (angle brackets optional).
pub fn parse_semigroup(s: &str) -> Result<Vec<u64>> {
    let s = s.trim();
    let s = s.strip_prefix('<').unwrap_or(s);
    let s = s.strip_suffix('>').unwrap_or(s);
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<u64>()
                .or_else(|_| perr(format!("bad generator '{p}'")))
        })
        .collect()
}

pub fn print_semigroup(g: &[u64]) -> String {
    let parts: Vec<String> = g.iter().map(u64::to_string).collect();
    format!("<{}>", parts.join(","))
}

fn ext(s: &str) -> Result<ExtNat> {
    let s = s.trim();
    if s == "inf" || s == "∞" {
        return Ok(ExtNat::Inf);
    }
    s.parse::<u64>()
        .map(ExtNat::Fin)
        .or_else(|_| perr(format!("bad number '{s}'")))
}

/// Parse a polygon from JSON or from the brace notation
/// `(a,b)+{l/h}+...`, where the optional `(a,b)` is the offset.
pub fn parse_polygon(s: &str) -> Result<NewtonPolygon> {
    let s = s.trim();
    if s.starts_with('[') || s.starts_with("{\"") || s.starts_with("{ \"") || s.starts_with("{}") {
        return NewtonPolygon::from_json(s);
    }
    if s == "0" {
        return Ok(NewtonPolygon::empty());
    }
    let (mut xo, mut yo) = (0, 0);
    let mut edges = Vec::new();
    for part in s.split('+').map(str::trim) {
        if let Some(p) = part.strip_prefix('(').and_then(|p| p.strip_suffix(')')) {
            let (a, b) = p
                .split_once(',')
                .ok_or_else(|| Error::Parse("offset must be (a,b)".into()))?;
            xo = a.trim().parse().or_else(|_| perr("bad offset"))?;
            yo = b.trim().parse().or_else(|_| perr("bad offset"))?;
        } else if let Some(p) = part.strip_prefix('{').and_then(|p| p.strip_suffix('}')) {
            let (l, h) = p
                .split_once('/')
                .ok_or_else(|| Error::Parse("edge must be {l/h}".into()))?;
            edges.push(ElementaryPolygon::new(ext(l)?, ext(h)?)?);
        } else {
            return perr(format!("bad polygon term '{part}'"));
        }
    }
    Ok(NewtonPolygon::from_parts(xo, yo, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygon::poly;

    #[test]
    fn polynomial_round_trip() {
        for s in [
            "y^2 - x^3",
            "y^3 - 3/2*x*y + x^5",
            "-y + 2*x^2",
            "adjoin u: u^2 - 3;\ny^2 + (u + 1)*x*y - u*x^3",
            "adjoin u: u^2 - 2;\nadjoin v: v^2 - u;\ny - v*x + O(x^4)",
            "y^2 + x^2*y + O(x^3)*y^0",
            "0",
        ] {
            let f = parse_ypoly(s).unwrap();
            let p = print_ypoly(&f);
            assert_eq!(parse_ypoly(&p).unwrap(), f, "{s} -> {p}");
        }
        assert_eq!(
            print_ypoly(&parse_ypoly("x^3 - y^2").unwrap()),
            "-y^2 + x^3"
        );
        assert_eq!(
            print_ypoly(&parse_ypoly("(y - x)*(y + x)").unwrap()),
            "y^2 - x^2"
        );
    }

    #[test]
    fn precision_markers() {
        let f = parse_ypoly("y^2 + x^5 + O(x^4)").unwrap();
        assert_eq!(f.coeff(0).prec(), Some(4));
        assert!(f.coeff(0).is_zero_known());
        let g = parse_ypoly("y^2 + x*y + O(x^2)*y").unwrap();
        assert_eq!(g.coeff(1).prec(), Some(2));
        assert_eq!(g.coeff(0).prec(), None);
    }

    #[test]
    fn parse_errors() {
        assert!(parse_ypoly("y^2 +").unwrap_err().is_parse());
        assert!(parse_ypoly("z + y").unwrap_err().is_parse());
        assert!(parse_ypoly("y / x").unwrap_err().is_parse());
    }

    #[test]
    fn towers_semigroups_polygons() {
        let t = parse_tower("Q(u: u^2 - 2)(v: v^2 - u)").unwrap();
        assert_eq!(
            crate::field::describe_tower(&t),
            "Q(u: u^2 - 2)(v: v^2 - u)"
        );
        assert_eq!(parse_semigroup("<4,6,13>").unwrap(), vec![4, 6, 13]);
        assert_eq!(print_semigroup(&[2, 3]), "<2,3>");
        assert_eq!(
            parse_polygon("{5/1}+{11/2}").unwrap(),
            poly(&[(5, 1), (11, 2)])
        );
        let p = parse_polygon("(1,2)+{2/1}+{inf/3}").unwrap();
        assert_eq!(parse_polygon(&p.to_string()).unwrap(), p);
        assert_eq!(
            parse_polygon(r#"{"edges":[{"l":2,"h":1}]}"#).unwrap(),
            poly(&[(2, 1)])
        );
    }
}
