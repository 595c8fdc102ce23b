//! Static SVG 1.1 pictures of planar bodies, annuli and plank coverings.

use std::f64::consts::PI;
use std::fmt::Write;

use plankforge::geom::{Body2, ConvexBody, Piece, Plank, Vec2};

#[derive(Clone, Debug, PartialEq)]
pub struct RenderSpec {
    /// Longer side of the canvas in px.
    pub size: f64,
    pub body_stroke: f64,
    pub plank_stroke: f64,
    /// In `[0, 1]`.
    pub plank_opacity: f64,
    pub colors: Vec<&'static str>,
    /// Fraction of the body extent added on every side.
    pub padding: f64,
}

impl Default for RenderSpec {
    fn default() -> Self {
        Self {
            size: 800.0,
            body_stroke: 2.0,
            plank_stroke: 0.5,
            plank_opacity: 0.25,
            colors: vec!["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2"],
            padding: 0.25,
        }
    }
}

/// World to screen: uniform scale, y flipped.
struct View {
    lo: Vec2,
    hi: Vec2,
    scale: f64,
}

impl View {
    fn new(body: &Body2, spec: &RenderSpec) -> Self {
        let (lo, hi) = body.bounds();
        let ext = hi - lo;
        let pad = ext.max() * spec.padding;
        let lo = lo - Vec2::new(pad, pad);
        let hi = hi + Vec2::new(pad, pad);
        let scale = spec.size / (hi - lo).max();
        Self { lo, hi, scale }
    }

    fn px(&self, p: &Vec2) -> (f64, f64) {
        ((p.x - self.lo.x) * self.scale, (self.hi.y - p.y) * self.scale)
    }

    fn dims(&self) -> (f64, f64) {
        ((self.hi.x - self.lo.x) * self.scale, (self.hi.y - self.lo.y) * self.scale)
    }

    fn corners(&self) -> Vec<Vec2> {
        vec![self.lo, Vec2::new(self.hi.x, self.lo.y), self.hi, Vec2::new(self.lo.x, self.hi.y)]
    }
}

fn path(body: &Body2, view: &View) -> String {
    let mut d = String::new();
    let (x0, y0) = view.px(&body.pieces()[0].start_point());
    write!(d, "M {x0:.3} {y0:.3}").unwrap();
    for p in body.pieces() {
        let (x, y) = view.px(&p.end_point());
        match *p {
            Piece::Segment { .. } => write!(d, " L {x:.3} {y:.3}").unwrap(),
            Piece::Arc { radius, sweep, .. } => {
                let r = radius * view.scale;
                // A full circle needs two half arcs.
                if sweep > 2.0 * PI - 1e-9 {
                    let (mx, my) = view.px(&p.point_at(radius * PI));
                    write!(d, " A {r:.3} {r:.3} 0 0 0 {mx:.3} {my:.3}").unwrap();
                }
                let large = u8::from(sweep > PI && sweep <= 2.0 * PI - 1e-9);
                // Counterclockwise in the world is clockwise on screen.
                write!(d, " A {r:.3} {r:.3} 0 {large} 0 {x:.3} {y:.3}").unwrap();
            }
        }
    }
    d.push_str(" Z");
    d
}

/// The slab clipped to the view rectangle.
fn clip(plank: &Plank<2>, view: &View) -> Vec<Vec2> {
    let mut poly = view.corners();
    for (n, c) in [(plank.normal, plank.hi), (-plank.normal, -plank.lo)] {
        let mut out = Vec::new();
        for i in 0..poly.len() {
            let a = poly[i];
            let b = poly[(i + 1) % poly.len()];
            let (fa, fb) = (a.dot(&n) - c, b.dot(&n) - c);
            if fa <= 0.0 {
                out.push(a);
            }
            if fa * fb < 0.0 {
                out.push(a + (b - a) * (fa / (fa - fb)));
            }
        }
        poly = out;
    }
    poly
}

/// Body outline, then the inner body when given, then one polygon per plank.
pub fn render(body: &Body2, inner: Option<&Body2>, planks: &[Plank<2>], spec: &RenderSpec) -> String {
    let view = View::new(body, spec);
    let (w, h) = view.dims();
    let mut s = String::new();
    writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.3} {h:.3}">"#
    )
    .unwrap();
    writeln!(s, r#"  <rect class="background" x="0" y="0" width="{w:.3}" height="{h:.3}" fill="white"/>"#).unwrap();
    for (i, p) in planks.iter().enumerate() {
        let pts: Vec<String> = clip(p, &view)
            .iter()
            .map(|q| {
                let (x, y) = view.px(q);
                format!("{x:.3},{y:.3}")
            })
            .collect();
        let color = spec.colors[i % spec.colors.len()];
        writeln!(
            s,
            r#"  <polygon class="plank" points="{}" fill="{color}" fill-opacity="{}" stroke="{color}" stroke-width="{}"/>"#,
            pts.join(" "),
            spec.plank_opacity,
            spec.plank_stroke
        )
        .unwrap();
    }
    writeln!(
        s,
        r#"  <path class="body" d="{}" fill="none" stroke="black" stroke-width="{}"/>"#,
        path(body, &view),
        spec.body_stroke
    )
    .unwrap();
    if let Some(inner) = inner {
        writeln!(
            s,
            r##"  <path class="inner" d="{}" fill="#dddddd" fill-opacity="0.6" stroke="black" stroke-dasharray="6 4" stroke-width="{}"/>"##,
            path(inner, &view),
            spec.body_stroke * 0.75
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    s
}
