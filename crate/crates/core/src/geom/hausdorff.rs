//! Hausdorff distance between finite unions of planar primitives.
//!
//! Directed distances from points and segments to point/segment/polygon
//! unions are exact: along a segment the distance to each primitive feature
//! is convex, so the lower envelope is maximized at a segment end, at a
//! feature's activation boundary, or where two features cross. Those
//! candidates are enumerated in closed form. Arcs and filled polygons on
//! the source side fall back to dense sampling with golden-section
//! refinement.

use super::polygon::{point_segment_distance, ConvexPolygon};
use super::{golden_min, GeomError, Vec2};
use crate::geom::body2::angle_in_range;
const SAMPLES_PER_PIECE: usize = 1024;

#[derive(Clone, Debug, PartialEq)]
pub enum Shape2 {
    Point(Vec2),
    Segment(Vec2, Vec2),
    /// CCW arc of `center + radius (cos φ, sin φ)`, `φ ∈ [start, start + sweep]`.
    Arc { center: Vec2, radius: f64, start: f64, sweep: f64 },
    /// Filled convex polygon.
    Polygon(ConvexPolygon),
}

impl Shape2 {
    fn distance(&self, x: &Vec2) -> f64 {
        match self {
            Shape2::Point(p) => (x - p).norm(),
            Shape2::Segment(a, b) => point_segment_distance(x, a, b),
            Shape2::Arc { center, radius, start, sweep } => {
                let d = x - center;
                if d.norm() == 0.0 || angle_in_range(d.y.atan2(d.x), *start, *sweep) {
                    (d.norm() - radius).abs()
                } else {
                    let a = center + Vec2::new(start.cos(), start.sin()) * *radius;
                    let e = start + sweep;
                    let b = center + Vec2::new(e.cos(), e.sin()) * *radius;
                    (x - a).norm().min((x - b).norm())
                }
            }
            Shape2::Polygon(p) => p.signed_distance(x).max(0.0),
        }
    }

    fn arc_point(center: &Vec2, radius: f64, phi: f64) -> Vec2 {
        center + Vec2::new(phi.cos(), phi.sin()) * radius
    }
}

fn set_distance(x: &Vec2, set: &[Shape2]) -> f64 {
    set.iter().map(|s| s.distance(x)).fold(f64::INFINITY, f64::min)
}

/// Convex feature of a target set, as seen from a parametrized segment.
enum Feature {
    Point(Vec2),
    /// Distance to the line through `q` with unit normal `n`, valid where
    /// the foot lands inside the segment.
    Line { q: Vec2, n: Vec2, a: Vec2, b: Vec2 },
    /// Zero inside a convex polygon.
    Inside(ConvexPolygon),
}

fn features(set: &[Shape2]) -> Option<Vec<Feature>> {
    let mut out = Vec::new();
    for s in set {
        match s {
            Shape2::Point(p) => out.push(Feature::Point(*p)),
            Shape2::Segment(a, b) => {
                out.push(Feature::Point(*a));
                out.push(Feature::Point(*b));
                let d = b - a;
                if d.norm() > 0.0 {
                    let n = Vec2::new(-d.y, d.x).normalize();
                    out.push(Feature::Line { q: *a, n, a: *a, b: *b });
                }
            }
            Shape2::Polygon(poly) => {
                for (a, b) in poly.edges() {
                    out.push(Feature::Point(a));
                    let d = b - a;
                    let n = Vec2::new(-d.y, d.x).normalize();
                    out.push(Feature::Line { q: a, n, a, b });
                }
                out.push(Feature::Inside(poly.clone()));
            }
            Shape2::Arc { .. } => return None,
        }
    }
    Some(out)
}

/// Exact `sup_{a ∈ [p0, p1]} dist(a, target)` for arc-free targets.
fn segment_directed_exact(p0: &Vec2, p1: &Vec2, target: &[Shape2], feats: &[Feature]) -> f64 {
    let d = p1 - p0;
    let mut cands: Vec<f64> = vec![0.0, 1.0];
    let at = |lam: f64| p0 + d * lam;
    // Activation boundaries.
    for f in feats {
        match f {
            Feature::Line { a, b, .. } => {
                let e = b - a;
                let de = d.dot(&e);
                if de.abs() > 1e-300 {
                    cands.push((a - p0).dot(&e) / de);
                    cands.push((b - p0).dot(&e) / de);
                }
            }
            Feature::Inside(poly) => {
                for (n, c) in poly.edge_lines() {
                    let dn = d.dot(&n);
                    if dn.abs() > 1e-300 {
                        cands.push((c - p0.dot(&n)) / dn);
                    }
                }
            }
            Feature::Point(_) => {}
        }
    }
    // Pairwise crossings.
    for i in 0..feats.len() {
        for j in i + 1..feats.len() {
            crossings(p0, &d, &feats[i], &feats[j], &mut cands);
        }
    }
    cands
        .into_iter()
        .filter(|l| l.is_finite() && (-1e-12..=1.0 + 1e-12).contains(l))
        .map(|l| set_distance(&at(l.clamp(0.0, 1.0)), target))
        .fold(0.0, f64::max)
}

fn crossings(p0: &Vec2, d: &Vec2, f: &Feature, g: &Feature, out: &mut Vec<f64>) {
    match (f, g) {
        (Feature::Point(a), Feature::Point(b)) => {
            // |p0 + λd - a|² = |p0 + λd - b|²  is linear in λ.
            let den = 2.0 * d.dot(&(b - a));
            if den.abs() > 1e-300 {
                out.push((b.norm_squared() - a.norm_squared() - 2.0 * p0.dot(&(b - a))) / den);
            }
        }
        (Feature::Point(p), Feature::Line { q, n, .. }) | (Feature::Line { q, n, .. }, Feature::Point(p)) => {
            // |p0 + λd - p|² = (<p0 + λd - q, n>)², a quadratic.
            let w = p0 - p;
            let s0 = (p0 - q).dot(n);
            let s1 = d.dot(n);
            let a = d.norm_squared() - s1 * s1;
            let b = 2.0 * (w.dot(d) - s0 * s1);
            let c = w.norm_squared() - s0 * s0;
            if a.abs() < 1e-300 {
                if b.abs() > 1e-300 {
                    out.push(-c / b);
                }
            } else {
                let disc = b * b - 4.0 * a * c;
                if disc >= 0.0 {
                    let r = disc.sqrt();
                    out.push((-b - r) / (2.0 * a));
                    out.push((-b + r) / (2.0 * a));
                }
            }
        }
        (Feature::Line { q: q1, n: n1, .. }, Feature::Line { q: q2, n: n2, .. }) => {
            let (s0, s1) = ((p0 - q1).dot(n1), d.dot(n1));
            let (r0, r1) = ((p0 - q2).dot(n2), d.dot(n2));
            for sign in [1.0, -1.0] {
                let den = s1 - sign * r1;
                if den.abs() > 1e-300 {
                    out.push((sign * r0 - s0) / den);
                }
            }
        }
        _ => {}
    }
}

/// Dense sampling with golden refinement of the best samples.
fn sampled_sup(param: impl Fn(f64) -> Vec2, target: &[Shape2]) -> f64 {
    let n = SAMPLES_PER_PIECE;
    let f = |s: f64| set_distance(&param(s.clamp(0.0, 1.0)), target);
    let vals: Vec<f64> = (0..=n).map(|k| f(k as f64 / n as f64)).collect();
    let mut best = vals.iter().copied().fold(0.0, f64::max);
    for k in 0..=n {
        let left = if k > 0 { vals[k - 1] } else { f64::NEG_INFINITY };
        let right = if k < n { vals[k + 1] } else { f64::NEG_INFINITY };
        if vals[k] >= left && vals[k] >= right {
            let h = 1.0 / n as f64;
            let (_, neg) = golden_min(|s| -f(s), k as f64 * h - h, k as f64 * h + h, 1e-9);
            best = best.max(-neg);
        }
    }
    best
}

/// `sup_{a ∈ source} dist(a, target)`.
pub fn directed_hausdorff(source: &[Shape2], target: &[Shape2]) -> Result<f64, GeomError> {
    if source.is_empty() || target.is_empty() {
        return Err(GeomError::EmptySet);
    }
    let feats = features(target);
    let mut best: f64 = 0.0;
    for s in source {
        let v = match s {
            Shape2::Point(p) => set_distance(p, target),
            Shape2::Segment(a, b) => match &feats {
                Some(f) => segment_directed_exact(a, b, target, f),
                None => sampled_sup(|l| a + (b - a) * l, target),
            },
            Shape2::Arc { center, radius, start, sweep } => {
                sampled_sup(|l| Shape2::arc_point(center, *radius, start + sweep * l), target)
            }
            Shape2::Polygon(poly) => {
                let boundary: Vec<Shape2> = poly.edges().map(|(a, b)| Shape2::Segment(a, b)).collect();
                let mut m = directed_hausdorff(&boundary, target)?;
                m = m.max(polygon_interior_sup(poly, target));
                m
            }
        };
        best = best.max(v);
    }
    Ok(best)
}

fn polygon_interior_sup(poly: &ConvexPolygon, target: &[Shape2]) -> f64 {
    // Barycentric grid over a fan, then coordinate-wise golden refinement.
    let v = poly.vertices();
    let c = v.iter().sum::<Vec2>() / v.len() as f64;
    let steps = 48;
    let mut best = (0.0, c);
    for k in 0..v.len() {
        let (a, b) = (v[k], v[(k + 1) % v.len()]);
        for i in 0..=steps {
            for j in 0..=steps - i {
                let (s, t) = (i as f64 / steps as f64, j as f64 / steps as f64);
                let p = c + (a - c) * s + (b - c) * t;
                let d = set_distance(&p, target);
                if d > best.0 {
                    best = (d, p);
                }
            }
        }
    }
    let mut p = best.1;
    let mut h = poly.perimeter() / steps as f64;
    for _ in 0..60 {
        for dir in [Vec2::x(), Vec2::y()] {
            let g = |s: f64| {
                let q = p + dir * s;
                if poly.signed_distance(&q) > 0.0 {
                    f64::INFINITY
                } else {
                    -set_distance(&q, target)
                }
            };
            let (s, _) = golden_min(g, -h, h, 1e-12);
            p += dir * s;
        }
        h *= 0.7;
    }
    best.0.max(set_distance(&p, target))
}

/// `max(sup_A dist(·, B), sup_B dist(·, A))`.
pub fn hausdorff_distance(a: &[Shape2], b: &[Shape2]) -> Result<f64, GeomError> {
    Ok(directed_hausdorff(a, b)?.max(directed_hausdorff(b, a)?))
}
