//! Drawing a 2D slice of the arrangement: matter walls solid, Coxeter
//! walls dotted.
//!
//! The plain view draws the walls φ_i = 0 and φ_i = −1 of the lift
//! chambers and the Coxeter walls α = 0. The unrolled view draws every
//! translate ⟨λ_i,x⟩ = ε_i + n and α = n that meets the window.

use gaugealg::gauge::GaugeDatum;
use gaugealg::linalg::rank;
use gaugealg::rational::{dot, floor_q, fmt_q, q, qi, to_i64, Q};
use gaugealg::{Error, Result};
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::json;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum View {
    Plain,
    Unrolled,
}

#[derive(Clone, Debug)]
pub struct Slice {
    pub origin: Vec<Q>,
    pub u: Vec<Q>,
    pub v: Vec<Q>,
}

impl Slice {
    pub fn standard(n: usize) -> Result<Self> {
        if n != 2 {
            return Err(Error::Input(format!("rank {n} datum: give origin=, u= and v= to pick a 2D slice")));
        }
        Ok(Slice { origin: vec![qi(0), qi(0)], u: vec![qi(1), qi(0)], v: vec![qi(0), qi(1)] })
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if self.origin.len() != n || self.u.len() != n || self.v.len() != n {
            return Err(Error::Input(format!("slice vectors must have {n} coordinates")));
        }
        if rank(&vec![self.u.clone(), self.v.clone()]) != 2 {
            return Err(Error::Input("slice is not 2D: u and v are dependent".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct Window {
    pub lo: [Q; 2],
    pub hi: [Q; 2],
}

impl Window {
    pub fn square(r: Q) -> Self {
        Window { lo: [-r.clone(), -r.clone()], hi: [r.clone(), r] }
    }

    fn inside_open(&self, p: &[Q; 2]) -> bool {
        (0..2).all(|k| p[k] > self.lo[k] && p[k] < self.hi[k])
    }

    fn inside_closed(&self, p: &[Q; 2]) -> bool {
        (0..2).all(|k| p[k] >= self.lo[k] && p[k] <= self.hi[k])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Matter,
    Coxeter,
    Axis,
}

/// The segment a·s + b·t + c = 0 inside the window.
#[derive(Clone, Debug)]
pub struct Segment {
    pub kind: Kind,
    pub label: String,
    pub from: [Q; 2],
    pub to: [Q; 2],
    eq: [Q; 3],
}

pub struct Picture {
    pub window: Window,
    pub segments: Vec<Segment>,
}

impl Picture {
    pub fn count(&self, kind: Kind) -> usize {
        self.segments.iter().filter(|s| s.kind == kind).count()
    }
}

fn clip(eq: &[Q; 3], w: &Window) -> Option<([Q; 2], [Q; 2])> {
    let [a, b, c] = eq;
    let mut pts: Vec<[Q; 2]> = Vec::new();
    for k in 0..2 {
        for bound in [&w.lo[k], &w.hi[k]] {
            // fix coordinate k, solve for the other
            let (fixed, free) = if k == 0 { (a, b) } else { (b, a) };
            if free.is_zero() {
                continue;
            }
            let other = -(fixed * bound + c) / free;
            let p = if k == 0 { [bound.clone(), other] } else { [other, bound.clone()] };
            if w.inside_closed(&p) && !pts.contains(&p) {
                pts.push(p);
            }
        }
    }
    pts.sort();
    if pts.len() < 2 {
        return None;
    }
    let (from, to) = (pts[0].clone(), pts[pts.len() - 1].clone());
    let mid = [(&from[0] + &to[0]) / qi(2), (&from[1] + &to[1]) / qi(2)];
    w.inside_open(&mid).then_some((from, to))
}

/// Normalize so the first nonzero of (a, b) is 1.
fn normalize(eq: [Q; 3]) -> [Q; 3] {
    let lead = if eq[0].is_zero() { eq[1].clone() } else { eq[0].clone() };
    [&eq[0] / &lead, &eq[1] / &lead, &eq[2] / &lead]
}

/// Integers n with lo < n < hi.
fn integers_between(lo: &Q, hi: &Q) -> Vec<i64> {
    let start = to_i64(&floor_q(lo)).unwrap_or(0) + 1;
    (start..).take_while(|n| &qi(*n) < hi).collect()
}

pub fn picture(g: &GaugeDatum, slice: &Slice, view: View, window: Window) -> Result<Picture> {
    slice.check(g.rank)?;
    let mut segs: Vec<Segment> = Vec::new();
    // hyperplane ⟨cov, x⟩ = value, restricted to the slice
    let push = |kind: Kind, label: String, cov: &[Q], value: Q, segs: &mut Vec<Segment>| {
        let (a, b) = (dot(cov, &slice.u), dot(cov, &slice.v));
        if a.is_zero() && b.is_zero() {
            return;
        }
        let eq = normalize([a, b, dot(cov, &slice.origin) - value]);
        if let Some(s) = segs.iter_mut().find(|s| s.eq == eq) {
            if s.kind == Kind::Coxeter && kind == Kind::Matter {
                s.kind = Kind::Matter;
            }
            s.label = format!("{} {}", s.label, label);
            return;
        }
        if let Some((from, to)) = clip(&eq, &window) {
            segs.push(Segment { kind, label, from, to, eq });
        }
    };
    // value range of a covector over the window corners
    let range = |cov: &[Q]| -> (Q, Q) {
        let mut vals = Vec::new();
        for x in [&window.lo[0], &window.hi[0]] {
            for y in [&window.lo[1], &window.hi[1]] {
                let p: Vec<Q> = (0..g.rank).map(|k| &slice.origin[k] + &slice.u[k] * x + &slice.v[k] * y).collect();
                vals.push(dot(cov, &p));
            }
        }
        vals.sort();
        (vals[0].clone(), vals[3].clone())
    };
    match view {
        View::Plain => {
            for (i, w) in g.weights.iter().enumerate() {
                // φ_i = ⟨λ_i,x⟩ − f_i ∈ {0, −1}
                push(Kind::Matter, format!("phi{}=0", i + 1), &w.linear, w.flavor.clone(), &mut segs);
                push(Kind::Matter, format!("phi{}=-1", i + 1), &w.linear, &w.flavor - qi(1), &mut segs);
            }
            for (a, r) in g.roots.iter().enumerate() {
                push(Kind::Coxeter, format!("alpha{}=0", a + 1), &r.linear, Q::zero(), &mut segs);
            }
        }
        View::Unrolled => {
            for (i, w) in g.weights.iter().enumerate() {
                let (lo, hi) = range(&w.linear);
                for n in integers_between(&(&lo - &w.epsilon), &(&hi - &w.epsilon)) {
                    let value = &w.epsilon + qi(n);
                    push(Kind::Matter, format!("phi{}={}", i + 1, fmt_q(&value)), &w.linear, value, &mut segs);
                }
            }
            for (a, r) in g.roots.iter().enumerate() {
                let (lo, hi) = range(&r.linear);
                for n in integers_between(&lo, &hi) {
                    push(Kind::Coxeter, format!("alpha{}={n}", a + 1), &r.linear, qi(n), &mut segs);
                }
            }
        }
    }
    // slice axes s = 0 and t = 0
    for (k, label) in [(0usize, "s"), (1, "t")] {
        let eq = if k == 0 { [qi(0), qi(1), qi(0)] } else { [qi(1), qi(0), qi(0)] };
        if let Some((from, to)) = clip(&eq, &window) {
            segs.push(Segment { kind: Kind::Axis, label: format!("{label}-axis"), from, to, eq });
        }
    }
    Ok(Picture { window, segments: segs })
}

const SIZE: f64 = 480.0;
const MARGIN: f64 = 40.0;

fn f(x: &Q) -> f64 {
    x.to_f64().unwrap_or(0.0)
}

fn to_px(p: &Window, x: &[Q; 2]) -> (f64, f64) {
    let sx = (SIZE - 2.0 * MARGIN) / f(&(&p.hi[0] - &p.lo[0]));
    let sy = (SIZE - 2.0 * MARGIN) / f(&(&p.hi[1] - &p.lo[1]));
    (MARGIN + (f(&x[0]) - f(&p.lo[0])) * sx, SIZE - MARGIN - (f(&x[1]) - f(&p.lo[1])) * sy)
}

fn esc(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub fn svg(p: &Picture) -> String {
    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    s.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">\n"
    ));
    s.push_str(&format!("<rect x=\"0\" y=\"0\" width=\"{SIZE}\" height=\"{SIZE}\" fill=\"white\"/>\n"));
    let (x0, y0) = to_px(&p.window, &p.window.lo);
    let (x1, y1) = to_px(&p.window, &p.window.hi);
    s.push_str(&format!(
        "<rect x=\"{x0:.2}\" y=\"{y1:.2}\" width=\"{:.2}\" height=\"{:.2}\" fill=\"none\" stroke=\"#bbbbbb\"/>\n",
        x1 - x0,
        y0 - y1
    ));
    let order = [Kind::Axis, Kind::Coxeter, Kind::Matter];
    for kind in order {
        for seg in p.segments.iter().filter(|x| x.kind == kind) {
            let (ax, ay) = to_px(&p.window, &seg.from);
            let (bx, by) = to_px(&p.window, &seg.to);
            let style = match kind {
                Kind::Matter => "stroke=\"black\" stroke-width=\"1.5\"",
                Kind::Coxeter => "stroke=\"#1f5fbf\" stroke-width=\"1.2\" stroke-dasharray=\"2,3\"",
                Kind::Axis => "stroke=\"#999999\" stroke-width=\"0.8\"",
            };
            s.push_str(&format!(
                "<line x1=\"{ax:.2}\" y1=\"{ay:.2}\" x2=\"{bx:.2}\" y2=\"{by:.2}\" {style}><title>{}</title></line>\n",
                esc(&seg.label)
            ));
            if kind != Kind::Axis {
                s.push_str(&format!(
                    "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"9\" font-family=\"monospace\">{}</text>\n",
                    bx + 2.0,
                    by - 2.0,
                    esc(&seg.label)
                ));
            }
        }
    }
    s.push_str("</svg>\n");
    s
}

/// Character raster with exact rational sampling.
pub fn ascii(p: &Picture, cols: usize, rows: usize) -> String {
    let mut grid = vec![vec![' '; cols]; rows];
    let w = &p.window;
    let xs: Vec<Q> = (0..cols).map(|c| &w.lo[0] + (&w.hi[0] - &w.lo[0]) * q(2 * c as i64 + 1, 2 * cols as i64)).collect();
    let ys: Vec<Q> = (0..rows).map(|r| &w.hi[1] - (&w.hi[1] - &w.lo[1]) * q(2 * r as i64 + 1, 2 * rows as i64)).collect();
    let dx = (&w.hi[0] - &w.lo[0]) / qi(cols as i64);
    let dy = (&w.hi[1] - &w.lo[1]) / qi(rows as i64);
    for kind in [Kind::Axis, Kind::Coxeter, Kind::Matter] {
        for seg in p.segments.iter().filter(|x| x.kind == kind) {
            let [a, b, c] = &seg.eq;
            for (r, y) in ys.iter().enumerate() {
                for (col, x) in xs.iter().enumerate() {
                    // half-open test, so a line on a cell boundary marks one cell
                    let v = a * x + b * y + c;
                    let tol = (a.abs() * &dx + b.abs() * &dy) / qi(2);
                    if -&tol < v && v <= tol {
                        grid[r][col] = match kind {
                            Kind::Matter => '#',
                            Kind::Coxeter => ':',
                            Kind::Axis if b.is_zero() => '|',
                            Kind::Axis => '-',
                        };
                    }
                }
            }
        }
    }
    let mut s = String::new();
    for row in grid {
        s.push_str(row.iter().collect::<String>().trim_end());
        s.push('\n');
    }
    s
}

pub fn to_json(p: &Picture) -> serde_json::Value {
    let kind = |k: Kind| match k {
        Kind::Matter => "matter",
        Kind::Coxeter => "coxeter",
        Kind::Axis => "axis",
    };
    json!({
        "window": [p.window.lo.iter().map(fmt_q).collect::<Vec<_>>(), p.window.hi.iter().map(fmt_q).collect::<Vec<_>>()],
        "matter": p.count(Kind::Matter),
        "coxeter": p.count(Kind::Coxeter),
        "lines": p.segments.iter().map(|s| json!({
            "kind": kind(s.kind),
            "label": s.label,
            "from": s.from.iter().map(fmt_q).collect::<Vec<_>>(),
            "to": s.to.iter().map(fmt_q).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use gaugealg::presets;

    #[test]
    fn running_example_counts() {
        let g = presets::gl2_running();
        let s = Slice::standard(2).unwrap();
        let p = picture(&g, &s, View::Plain, Window::square(qi(3))).unwrap();
        assert_eq!((p.count(Kind::Matter), p.count(Kind::Coxeter)), (8, 1));
        let u = picture(&g, &s, View::Unrolled, Window::square(q(5, 2))).unwrap();
        let labels: Vec<&str> = u.segments.iter().filter(|x| x.kind == Kind::Coxeter).map(|x| x.label.as_str()).collect();
        assert_eq!(labels, (-4..=4).map(|n| format!("alpha1={n}")).collect::<Vec<_>>());
    }

    #[test]
    fn clipping() {
        let w = Window::square(qi(1));
        // through a corner only
        assert!(clip(&[qi(1), qi(1), qi(2)], &w).is_none());
        // on the boundary
        assert!(clip(&[qi(1), qi(0), qi(1)], &w).is_none());
        let (a, b) = clip(&[qi(1), qi(-1), qi(0)], &w).unwrap();
        assert_eq!((a, b), ([qi(-1), qi(-1)], [qi(1), qi(1)]));
    }

    #[test]
    fn slices() {
        assert!(Slice::standard(1).is_err());
        let bad = Slice { origin: vec![qi(0)], u: vec![qi(1)], v: vec![qi(2)] };
        assert!(bad.check(1).is_err());
    }
}
