//! ASCII and SVG pictures of Newton polygons.
//!
//! The horizontal axis carries the exponent of `x`, the vertical axis the
//! exponent of `y`.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::num::qu;
use crate::polygon::{NewtonPolygon, Point};

fn check(p: &NewtonPolygon) -> Result<()> {
    let inf = p.edges().iter().filter(|e| !e.is_finite()).count();
    if inf > 1 {
        return Err(Error::Unrenderable);
    }
    Ok(())
}

/// Whether the polygon has a vertical ray `{ℓ/∞}` first, resp. a
/// horizontal ray `{∞/h}` last.
fn rays(p: &NewtonPolygon) -> (bool, bool) {
    let e = p.edges();
    let up = e.first().is_some_and(|e| e.height().is_inf());
    let right = e.last().is_some_and(|e| e.length().is_inf());
    (up, right)
}

/// Extent of the drawing: the largest vertex coordinates.
fn extent(p: &NewtonPolygon) -> Point {
    let vs = p.vertices();
    (
        vs.iter().map(|v| v.0).max().unwrap_or(0),
        vs.iter().map(|v| v.1).max().unwrap_or(0),
    )
}

/// Lattice picture: `*` vertex, `+` other boundary point, `#` interior,
/// `.` outside; rays continue with `^` and `>`.
pub fn render_ascii(p: &NewtonPolygon) -> Result<String> {
    check(p)?;
    let (up, right) = rays(p);
    let vs = p.vertices();
    let (mx, my) = extent(p);
    let (w, h) = (mx + u64::from(right), my + u64::from(up));
    let lw = h.to_string().len();
    let mut out = String::from("exp y\n");
    for y in (0..=h).rev() {
        let mut row = String::new();
        let mut labels = Vec::new();
        for x in 0..=w {
            let c = if vs.contains(&(x, y)) {
                labels.push(format!("({x},{y})"));
                '*'
            } else if up && y == h && x == vs[0].0 {
                '^'
            } else if right && x == w && y == vs.last().unwrap().1 {
                '>'
            } else if !p.contains((x, y)) {
                '.'
            } else if p.boundary_at(&qu(x)) == Some(qu(y)) {
                '+'
            } else {
                '#'
            };
            row.push(c);
        }
        let line = format!("{y:>lw$} |{row} {}", labels.join(" "));
        out.push_str(line.trim_end());
        out.push('\n');
    }
    let _ = writeln!(out, "{:lw$} +{} exp x", "", "-".repeat(w as usize + 1));
    let ticks: String = (0..=w).map(|x| char::from(b'0' + (x % 10) as u8)).collect();
    let _ = writeln!(out, "{:lw$}  {ticks}", "");
    Ok(out)
}

const COLORS: [&str; 4] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd"];

/// SVG 1.1 drawing of one or more polygons on common axes; each region is
/// shaded, so the part of one region outside another stays visible.
pub fn render_svg(ps: &[NewtonPolygon]) -> Result<String> {
    for p in ps {
        check(p)?;
    }
    let (mut mx, mut my) = (1, 1);
    for p in ps {
        let (a, b) = extent(p);
        let (up, right) = rays(p);
        mx = mx.max(a + u64::from(right));
        my = my.max(b + u64::from(up));
    }
    let (mx, my) = (mx + 1, my + 1);
    let size = 400.0;
    let scale = size / (mx.max(my) as f64);
    let margin = 40.0;
    let sx = |x: f64| margin + x * scale;
    let sy = |y: f64| margin + size - y * scale;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{w}" viewBox="0 0 {w} {w}">"#,
        w = size + 2.0 * margin
    );
    let _ = writeln!(
        s,
        r#"<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}" stroke="black"/>
<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}" stroke="black"/>
<text x="{x1}" y="{ty}" font-size="12" text-anchor="end">exponent of x</text>
<text x="{tx}" y="{y1}" font-size="12">exponent of y</text>"#,
        x0 = sx(0.0),
        y0 = sy(0.0),
        x1 = sx(mx as f64),
        y1 = sy(my as f64),
        ty = sy(0.0) + 28.0,
        tx = sx(0.0) + 4.0,
    );
    for (i, p) in ps.iter().enumerate() {
        let color = COLORS[i % COLORS.len()];
        let vs = p.vertices();
        let first = vs.first().copied().unwrap_or((0, 0));
        let last = vs.last().copied().unwrap_or((0, 0));
        let mut pts: Vec<(f64, f64)> = vec![(first.0 as f64, my as f64)];
        pts.extend(vs.iter().map(|v| (v.0 as f64, v.1 as f64)));
        pts.push((mx as f64, last.1 as f64));
        pts.push((mx as f64, my as f64));
        let path: Vec<String> = pts
            .iter()
            .map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y)))
            .collect();
        let _ = writeln!(
            s,
            r#"<polygon points="{}" fill="{color}" fill-opacity="0.2" stroke="{color}" stroke-width="2"/>"#,
            path.join(" ")
        );
        for v in &vs {
            let _ = writeln!(
                s,
                r#"<circle cx="{:.2}" cy="{:.2}" r="3" fill="{color}"/>
<text x="{:.2}" y="{:.2}" font-size="11" fill="{color}">({},{})</text>"#,
                sx(v.0 as f64),
                sy(v.1 as f64),
                sx(v.0 as f64) + 5.0,
                sy(v.1 as f64) - 5.0 - 12.0 * i as f64,
                v.0,
                v.1
            );
        }
    }
    s.push_str("</svg>\n");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygon::poly;

    #[test]
    fn ascii_staircase() {
        let s = render_ascii(&poly(&[(2, 1)])).unwrap();
        assert_eq!(
            s,
            "exp y\n1 |*## (0,1)\n0 |..* (2,0)\n  +--- exp x\n   012\n"
        );
        let e = render_ascii(&NewtonPolygon::empty()).unwrap();
        assert_eq!(e, "exp y\n0 |* (0,0)\n  +- exp x\n   0\n");
    }

    #[test]
    fn rays_and_refusal() {
        let p = crate::text::parse_polygon("{1/inf}+{2/1}").unwrap();
        assert!(render_ascii(&p).unwrap().contains('^'));
        let q = crate::text::parse_polygon("{1/inf}+{inf/1}").unwrap();
        assert_eq!(render_ascii(&q), Err(Error::Unrenderable));
        let svg = render_svg(&[poly(&[(8, 2), (48, 6)]), poly(&[(56, 7)])]).unwrap();
        assert!(svg.starts_with("<?xml") && svg.ends_with("</svg>\n"));
        assert_eq!(svg.matches("<polygon").count(), 2);
    }
}
