//! Tangent cones, spikiness, minimal-width chords and standard position.

use nalgebra::SMatrix;
use serde::Serialize;
use std::cmp::Ordering;

use crate::geom::{
    convex_hull_2d, cross2, lex_cmp, Body2, ConvexBody, Direction, GeomError, Point, Polytope3, Vec2, Vec3,
};

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum SpikyError {
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error("direction is not spiky")]
    NotSpiky,
    #[error("direction is not a minimal width direction (chord gap {0:e})")]
    NotMinimal(f64),
    #[error("cone is not pointed; no interior shift direction")]
    NotPointed,
    #[error("standardization check failed: {0}")]
    Standardization(String),
}

/// Closed cone `apex + {Σ λ_i g_i : λ_i ≥ 0}`, also described as the
/// intersection of the half-spaces `<x - apex, n> ≤ 0` over `facet_normals`.
/// In the plane `generators` is `[forward, backward]` in boundary order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TangentCone<const D: usize> {
    pub apex: Point<D>,
    pub generators: Vec<Point<D>>,
    pub facet_normals: Vec<Point<D>>,
}

impl<const D: usize> TangentCone<D> {
    /// `max_g <g, u>` over unit generators.
    pub fn aperture(&self, u: &Point<D>) -> f64 {
        self.generators
            .iter()
            .map(|g| g.dot(u))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Signed distance style membership: `max_n <x - apex, n>`.
    pub fn excess(&self, x: &Point<D>) -> f64 {
        self.facet_normals
            .iter()
            .map(|n| (x - self.apex).dot(n))
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Proof that the body is spiky in `direction`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpikeWitness<const D: usize> {
    pub direction: Direction<D>,
    pub apex: Point<D>,
    pub cone: TangentCone<D>,
    /// `max_g <g, direction>`; strictly negative.
    pub aperture: f64,
}

/// Capabilities the spikiness machinery needs from a body.
pub trait SpikyBody<const D: usize>: ConvexBody<D> + Sized {
    fn tangent_cone(&self, x: &Point<D>) -> Result<TangentCone<D>, GeomError>;

    /// Extreme points of the support set `K ∩ H_K(u)`, within `tol`.
    fn support_points(&self, u: &Point<D>, tol: f64) -> Vec<Point<D>>;

    /// All directions (one orientation each) whose width lies within `tol`
    /// of the minimal width.
    fn minimal_width_directions(&self, tol: f64) -> Vec<Direction<D>>;

    /// `x ↦ scale · rot · (x - origin)`.
    fn similar(&self, rot: &SMatrix<f64, D, D>, scale: f64, origin: &Point<D>) -> Result<Self, GeomError>;
}

impl SpikyBody<2> for Body2 {
    fn tangent_cone(&self, x: &Vec2) -> Result<TangentCone<2>, GeomError> {
        let s = self.boundary_param(x)?;
        let (fwd, back) = self.tangents_at(s);
        Ok(TangentCone {
            apex: *x,
            generators: vec![fwd, back],
            facet_normals: vec![Vec2::new(fwd.y, -fwd.x), Vec2::new(-back.y, back.x)],
        })
    }

    fn support_points(&self, u: &Vec2, tol: f64) -> Vec<Vec2> {
        self.support_set(u, tol)
    }

    fn minimal_width_directions(&self, tol: f64) -> Vec<Direction<2>> {
        self.width_minimizers(tol).into_iter().map(|m| m.1).collect()
    }

    fn similar(&self, rot: &SMatrix<f64, 2, 2>, scale: f64, origin: &Vec2) -> Result<Self, GeomError> {
        let angle = rot[(1, 0)].atan2(rot[(0, 0)]);
        self.similarity(1.0, 0.0, &-origin)?.similarity(scale, angle, &Vec2::zeros())
    }
}

impl SpikyBody<3> for Polytope3 {
    fn tangent_cone(&self, x: &Vec3) -> Result<TangentCone<3>, GeomError> {
        let tol = crate::tol::GEOM;
        let sd = self.signed_distance(x);
        if sd.abs() > tol {
            return Err(GeomError::NotOnBoundary(sd.abs()));
        }
        let facets = self.facets_through(x, tol);
        let facet_normals: Vec<Vec3> = facets.iter().map(|&f| self.facets()[f].normal).collect();
        let generators = if let Some(i) = self.vertex_index(x, tol) {
            self.neighbors(i)
                .into_iter()
                .map(|j| (self.vertices()[j] - self.vertices()[i]).normalize())
                .collect()
        } else if facet_normals.len() >= 2 {
            let n1 = facet_normals[0];
            let n2 = facet_normals[1];
            let e = n1.cross(&n2).normalize();
            vec![e, -e, n1.cross(&e).normalize(), e.cross(&n2).normalize()]
                .into_iter()
                .map(|g| if facet_normals.iter().any(|n| n.dot(&g) > tol) { -g } else { g })
                .collect()
        } else {
            let n = facet_normals[0];
            let (b1, b2) = crate::geom::plane_basis(&n);
            vec![b1, -b1, b2, -b2, -n]
        };
        Ok(TangentCone {
            apex: *x,
            generators,
            facet_normals,
        })
    }

    fn support_points(&self, u: &Vec3, tol: f64) -> Vec<Vec3> {
        let h = self.support(u);
        let mut pts: Vec<Vec3> = self.vertices().iter().filter(|v| v.dot(u) >= h - tol).copied().collect();
        pts.sort_by(lex_cmp);
        pts
    }

    fn minimal_width_directions(&self, tol: f64) -> Vec<Direction<3>> {
        let cands = self.width_candidates();
        let widths: Vec<f64> = cands.iter().map(|u| self.width_in_direction(u)).collect();
        let w = widths.iter().copied().fold(f64::INFINITY, f64::min);
        let mut out: Vec<Direction<3>> = cands
            .into_iter()
            .zip(widths)
            .filter(|(_, wc)| *wc <= w + tol)
            .map(|(u, _)| u)
            .collect();
        out.sort_by(|a, b| lex_cmp(a.as_vec(), b.as_vec()));
        out.dedup_by(|a, b| (a.as_vec() - b.as_vec()).norm() < 1e-12 || (a.as_vec() + b.as_vec()).norm() < 1e-12);
        out
    }

    fn similar(&self, rot: &SMatrix<f64, 3, 3>, scale: f64, origin: &Vec3) -> Result<Self, GeomError> {
        self.transformed(|v| rot * (v - origin) * scale)
    }
}

fn scale_of<const D: usize, B: SpikyBody<D>>(body: &B) -> f64 {
    let (lo, hi) = body.bounds();
    (hi - lo).norm().max(f64::MIN_POSITIVE)
}

/// Witness if the support set at `u` is a single point whose tangent cone
/// meets the supporting hyperplane only at that point.
pub fn is_spiky<const D: usize, B: SpikyBody<D>>(body: &B, u: &Direction<D>, tol: f64) -> Option<SpikeWitness<D>> {
    let scale = scale_of(body);
    let pts = body.support_points(u, tol * scale);
    let apex = pts[0];
    if pts.iter().any(|p| (p - apex).norm() > tol * scale) {
        return None;
    }
    let cone = body.tangent_cone(&apex).ok()?;
    let aperture = cone.aperture(u);
    (aperture <= -tol).then_some(SpikeWitness {
        direction: *u,
        apex,
        cone,
        aperture,
    })
}

/// Among all minimal-width directions (both orientations), the spiky one with
/// the most negative aperture; ties broken lexicographically on the
/// direction.
pub fn find_spiky_minimal_width_direction<const D: usize, B: SpikyBody<D>>(
    body: &B,
    tol: f64,
) -> Option<SpikeWitness<D>> {
    let (w, _) = body.minimal_width();
    let mut best: Option<SpikeWitness<D>> = None;
    for u in body.minimal_width_directions(tol * w.max(1.0)) {
        for cand in [u, -u] {
            if let Some(wit) = is_spiky(body, &cand, tol) {
                let better = match &best {
                    None => true,
                    Some(b) => match wit.aperture.total_cmp(&b.aperture) {
                        Ordering::Less => wit.aperture < b.aperture - 1e-12,
                        _ => {
                            (wit.aperture - b.aperture).abs() <= 1e-12
                                && lex_cmp(wit.direction.as_vec(), b.direction.as_vec()) == Ordering::Less
                        }
                    },
                };
                if better {
                    best = Some(wit);
                }
            }
        }
    }
    best
}

/// Segment `[a, b]` with `a ∈ K ∩ H_K(u)`, `b ∈ K ∩ H_K(-u)`, `b - a = -w u`.
pub fn minimal_width_chord<const D: usize, B: SpikyBody<D>>(
    body: &B,
    u: &Direction<D>,
    tol: f64,
) -> Result<(Point<D>, Point<D>), SpikyError> {
    let scale = scale_of(body);
    let w = body.width_in_direction(u);
    let (w_min, _) = body.minimal_width();
    if w > w_min + tol * scale {
        return Err(SpikyError::NotMinimal(w - w_min));
    }
    let top = body.support_points(u, tol * scale);
    let bottom: Vec<Point<D>> = body
        .support_points(&-u.into_inner(), tol * scale)
        .into_iter()
        .map(|p| p + u.into_inner() * w)
        .collect();
    let basis = plane_coordinates::<D>(u);
    let flat = |p: &Point<D>| {
        let mut q = Vec2::zeros();
        for (k, e) in basis.iter().enumerate() {
            q[k] = p.dot(e);
        }
        q
    };
    let ft: Vec<Vec2> = top.iter().map(flat).collect();
    let fb: Vec<Vec2> = bottom.iter().map(flat).collect();
    let (q, gap) = closest_common_point(&ft, &fb, tol * scale);
    if gap > tol * scale {
        return Err(SpikyError::NotMinimal(gap));
    }
    // Lift the plane coordinates back using any top point's height along u.
    let base = top[0].dot(u) * u.into_inner();
    let mut a = base;
    for (k, e) in basis.iter().enumerate() {
        a += e * q[k];
    }
    Ok((a, a - u.into_inner() * w))
}

/// Point of `hull(a) ∩ hull(b)` in the plane, or the closest vertex pair
/// candidate and its gap when they are disjoint.
fn closest_common_point(a: &[Vec2], b: &[Vec2], tol: f64) -> (Vec2, f64) {
    let ha = convex_hull_2d(a, tol);
    let hb = convex_hull_2d(b, tol);
    let mut best = (ha[0], f64::INFINITY);
    let mut consider = |p: Vec2, gap: f64| {
        if gap < best.1 - 1e-15 || (gap <= best.1 + 1e-15 && lex_cmp(&p, &best.0) == Ordering::Less) {
            best = (p, gap);
        }
    };
    for p in &ha {
        consider(*p, hull_distance(p, &hb));
    }
    for p in &hb {
        consider(*p, hull_distance(p, &ha));
    }
    for (a0, a1) in hull_edges(&ha) {
        for (b0, b1) in hull_edges(&hb) {
            if let Some(x) = segment_intersection(&a0, &a1, &b0, &b1) {
                consider(x, 0.0);
            }
        }
    }
    best
}

fn hull_edges(h: &[Vec2]) -> Vec<(Vec2, Vec2)> {
    match h.len() {
        0 | 1 => Vec::new(),
        2 => vec![(h[0], h[1])],
        n => (0..n).map(|i| (h[i], h[(i + 1) % n])).collect(),
    }
}

fn hull_distance(p: &Vec2, h: &[Vec2]) -> f64 {
    if h.len() >= 3 {
        let inside = hull_edges(h).iter().all(|(a, b)| cross2(&(b - a), &(p - a)) >= 0.0);
        if inside {
            return 0.0;
        }
    }
    if h.len() == 1 {
        return (p - h[0]).norm();
    }
    hull_edges(h)
        .iter()
        .map(|(a, b)| crate::geom::point_segment_distance(p, a, b))
        .fold(f64::INFINITY, f64::min)
}

fn segment_intersection(a0: &Vec2, a1: &Vec2, b0: &Vec2, b1: &Vec2) -> Option<Vec2> {
    let da = a1 - a0;
    let db = b1 - b0;
    let den = cross2(&da, &db);
    if den.abs() < 1e-300 {
        return None;
    }
    let s = cross2(&(b0 - a0), &db) / den;
    let t = cross2(&(b0 - a0), &da) / den;
    ((0.0..=1.0).contains(&s) && (0.0..=1.0).contains(&t)).then(|| a0 + da * s)
}

/// Orthonormal basis of `u^⊥` (one vector in 2D, two in 3D).
fn plane_coordinates<const D: usize>(u: &Direction<D>) -> Vec<Point<D>> {
    let mut basis: Vec<Point<D>> = Vec::new();
    for k in 0..D {
        let mut e = Point::<D>::zeros();
        e[k] = 1.0;
        let mut v = e - u.into_inner() * u.dot(&e);
        for b in &basis {
            v -= b * b.dot(&v);
        }
        if v.norm() > 1e-6 {
            basis.push(v.normalize());
        }
        if basis.len() == D - 1 {
            break;
        }
    }
    basis
}

/// Rotation taking `u` to `-e_d`: a Householder reflection followed by a
/// reflection across a hyperplane containing `-e_d`.
pub fn rotation_to_down<const D: usize>(u: &Direction<D>) -> SMatrix<f64, D, D> {
    let mut down = Point::<D>::zeros();
    down[D - 1] = -1.0;
    let diff = u.into_inner() - down;
    if diff.norm() < 1e-15 {
        return SMatrix::identity();
    }
    let w1 = diff.normalize();
    let h1 = SMatrix::<f64, D, D>::identity() - w1 * w1.transpose() * 2.0;
    let mut w2 = Point::<D>::zeros();
    w2[0] = 1.0;
    let h2 = SMatrix::<f64, D, D>::identity() - w2 * w2.transpose() * 2.0;
    h2 * h1
}

/// Similarity placing a spiky body in standard position.
#[derive(Clone, Debug, PartialEq)]
pub struct Standardization<const D: usize, B> {
    pub rotation: SMatrix<f64, D, D>,
    pub scale: f64,
    pub apex: Point<D>,
    /// Minimal width of the original body.
    pub width: f64,
    pub body: B,
}

impl<const D: usize, B> Standardization<D, B> {
    pub fn forward(&self, x: &Point<D>) -> Point<D> {
        self.rotation * (x - self.apex) * self.scale
    }

    pub fn inverse(&self, y: &Point<D>) -> Point<D> {
        self.apex + self.rotation.transpose() * y / self.scale
    }

    pub fn forward_dir(&self, v: &Point<D>) -> Point<D> {
        self.rotation * v
    }

    pub fn inverse_dir(&self, v: &Point<D>) -> Point<D> {
        self.rotation.transpose() * v
    }
}

/// Rotate `witness.direction` to `-e_d`, move the apex to the origin and
/// scale to minimal width 1.
pub fn standardize<const D: usize, B: SpikyBody<D>>(
    body: &B,
    witness: &SpikeWitness<D>,
    tol: f64,
) -> Result<Standardization<D, B>, SpikyError> {
    let (w, _) = body.minimal_width();
    let wu = body.width_in_direction(&witness.direction);
    if wu > w + tol * w.max(1.0) {
        return Err(SpikyError::NotMinimal(wu - w));
    }
    let rotation = rotation_to_down(&witness.direction);
    let scale = 1.0 / w;
    let std_body = body.similar(&rotation, scale, &witness.apex)?;
    let mut down = Point::<D>::zeros();
    down[D - 1] = -1.0;
    let (w_std, _) = std_body.minimal_width();
    if (w_std - 1.0).abs() > 1e-9 {
        return Err(SpikyError::Standardization(format!("width {w_std} after scaling")));
    }
    let low = std_body.support(&down);
    if low.abs() > 1e-9 {
        return Err(SpikyError::Standardization(format!("apex height {low}")));
    }
    Ok(Standardization {
        rotation,
        scale,
        apex: witness.apex,
        width: w,
        body: std_body,
    })
}

/// Unit vector strictly inside a pointed cone, checked against every facet
/// normal.
pub fn interior_shift_direction<const D: usize>(cone: &TangentCone<D>, tol: f64) -> Result<Direction<D>, SpikyError> {
    let ok = |v: &Direction<D>| cone.facet_normals.iter().all(|n| v.dot(n) < -tol);
    let first = if D == 2 {
        Direction::new(cone.generators.iter().sum())
    } else {
        Direction::new(-cone.facet_normals.iter().sum::<Point<D>>())
    };
    if let Some(v) = first.filter(|v| ok(v)) {
        return Ok(v);
    }
    Direction::new(cone.generators.iter().map(|g| g.normalize()).sum())
        .filter(|v| ok(v))
        .ok_or(SpikyError::NotPointed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    const TOL: f64 = 1e-9;

    fn square() -> Body2 {
        Body2::polygon(&[
            Vec2::new(-0.5, -0.5),
            Vec2::new(0.5, -0.5),
            Vec2::new(0.5, 0.5),
            Vec2::new(-0.5, 0.5),
        ])
        .unwrap()
    }

    fn triangle_apex_down() -> Body2 {
        let h = 3f64.sqrt() / 2.0;
        Body2::polygon(&[Vec2::new(0.0, 0.0), Vec2::new(0.5, h), Vec2::new(-0.5, h)]).unwrap()
    }

    fn pyramid() -> Polytope3 {
        Polytope3::hull(&[
            Vec3::new(0.0, 0.0, 0.0),
            Vec3::new(0.5, 0.5, 0.5),
            Vec3::new(-0.5, 0.5, 0.5),
            Vec3::new(0.5, -0.5, 0.5),
            Vec3::new(-0.5, -0.5, 0.5),
        ])
        .unwrap()
    }

    #[test]
    fn tangent_cones_in_the_plane() {
        let c = square().tangent_cone(&Vec2::new(-0.5, -0.5)).unwrap();
        assert_relative_eq!(c.generators[0], Vec2::new(1.0, 0.0), epsilon = 1e-15);
        assert_relative_eq!(c.generators[1], Vec2::new(0.0, 1.0), epsilon = 1e-15);
        let disc = Body2::disc(Vec2::zeros(), 1.0).unwrap();
        let c = disc.tangent_cone(&Vec2::new(1.0, 0.0)).unwrap();
        assert_relative_eq!(c.generators[0], Vec2::new(0.0, 1.0), epsilon = 1e-12);
        assert_relative_eq!(c.generators[1], Vec2::new(0.0, -1.0), epsilon = 1e-12);
        let r = Body2::reuleaux(1.0).unwrap();
        let c = r.tangent_cone(&Vec2::zeros()).unwrap();
        let opening = c.generators[0].dot(&c.generators[1]).acos();
        assert_relative_eq!(opening, 2.0 * PI / 3.0, epsilon = 1e-12);
        assert!(square().tangent_cone(&Vec2::zeros()).is_err());
    }

    #[test]
    fn spikiness_examples() {
        assert!(is_spiky(&square(), &Direction::new(Vec2::new(0.0, -1.0)).unwrap(), TOL).is_none());
        let diag = Direction::new(Vec2::new(-1.0, -1.0)).unwrap();
        let w = is_spiky(&square(), &diag, TOL).unwrap();
        assert_relative_eq!(w.apex, Vec2::new(-0.5, -0.5));
        assert_relative_eq!(w.aperture, -0.5f64.sqrt(), epsilon = 1e-15);
        let down = Direction::new(Vec2::new(0.0, -1.0)).unwrap();
        let w = is_spiky(&triangle_apex_down(), &down, TOL).unwrap();
        assert_relative_eq!(w.apex, Vec2::zeros());
    }

    #[test]
    fn spiky_minimal_width_directions() {
        assert!(find_spiky_minimal_width_direction(&square(), TOL).is_none());
        let r = find_spiky_minimal_width_direction(&Body2::reuleaux(1.0).unwrap(), TOL).unwrap();
        // The vertex at the origin, axis through the opposite arc midpoint, or a symmetric image.
        assert_relative_eq!(r.aperture, -0.5, epsilon = 1e-6);
        let p = find_spiky_minimal_width_direction(&pyramid(), TOL).unwrap();
        assert_relative_eq!(*p.direction.as_vec(), Vec3::new(0.0, 0.0, -1.0), epsilon = 1e-15);
        assert_relative_eq!(p.aperture, -1.0 / 3f64.sqrt(), epsilon = 1e-15);
    }

    #[test]
    fn chords() {
        let up = Direction::new(Vec2::new(0.0, 1.0)).unwrap();
        let (a, b) = minimal_width_chord(&square(), &up, TOL).unwrap();
        assert_relative_eq!(a, Vec2::new(-0.5, 0.5), epsilon = 1e-15);
        assert_relative_eq!(b, Vec2::new(-0.5, -0.5), epsilon = 1e-15);
        let down = Direction::new(Vec2::new(0.0, -1.0)).unwrap();
        let (a, b) = minimal_width_chord(&triangle_apex_down(), &down, TOL).unwrap();
        assert_relative_eq!(a, Vec2::zeros(), epsilon = 1e-15);
        assert_relative_eq!((b - a).norm(), 3f64.sqrt() / 2.0, epsilon = 1e-15);
        let r = Body2::reuleaux(1.0).unwrap();
        let (a, b) = minimal_width_chord(&r, &down, TOL).unwrap();
        assert_relative_eq!(a, Vec2::zeros(), epsilon = 1e-12);
        assert_relative_eq!(b, Vec2::new(0.0, 1.0), epsilon = 1e-12);
        let diag = Direction::new(Vec2::new(1.0, 1.0)).unwrap();
        assert!(matches!(minimal_width_chord(&square(), &diag, TOL), Err(SpikyError::NotMinimal(_))));
    }

    #[test]
    fn standardize_triangle_and_reuleaux() {
        let h = 3f64.sqrt() / 2.0;
        let tri = Body2::polygon(&[Vec2::new(0.0, 0.0), Vec2::new(1.0, 0.0), Vec2::new(0.5, h)]).unwrap();
        let wit = find_spiky_minimal_width_direction(&tri, TOL).unwrap();
        let st = standardize(&tri, &wit, TOL).unwrap();
        assert_relative_eq!(st.scale, 2.0 / 3f64.sqrt(), epsilon = 1e-15);
        assert_relative_eq!(st.body.minimal_width().0, 1.0, epsilon = 1e-12);
        assert!(st.body.support(&Vec2::new(0.0, -1.0)).abs() < 1e-12);
        assert_relative_eq!(st.body.support(&Vec2::new(0.0, 1.0)), 1.0, epsilon = 1e-12);
        for v in tri.corners() {
            assert_relative_eq!(st.inverse(&st.forward(&v)), v, epsilon = 1e-12);
        }
        let r = Body2::reuleaux(1.0).unwrap();
        let wit = find_spiky_minimal_width_direction(&r, TOL).unwrap();
        let st = standardize(&r, &wit, TOL).unwrap();
        assert_relative_eq!(st.scale, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn shift_directions() {
        let c = square().tangent_cone(&Vec2::new(-0.5, -0.5)).unwrap();
        let v = interior_shift_direction(&c, TOL).unwrap();
        assert_relative_eq!(*v.as_vec(), Vec2::new(1.0, 1.0).normalize(), epsilon = 1e-15);
        let c = pyramid().tangent_cone(&Vec3::zeros()).unwrap();
        let v = interior_shift_direction(&c, TOL).unwrap();
        assert_relative_eq!(*v.as_vec(), Vec3::new(0.0, 0.0, 1.0), epsilon = 1e-15);
        let c = Body2::reuleaux(1.0).unwrap().tangent_cone(&Vec2::zeros()).unwrap();
        let v = interior_shift_direction(&c, TOL).unwrap();
        assert_relative_eq!(*v.as_vec(), Vec2::new(0.0, 1.0), epsilon = 1e-12);
        let flat = Body2::disc(Vec2::zeros(), 1.0).unwrap().tangent_cone(&Vec2::new(0.0, -1.0)).unwrap();
        assert_eq!(interior_shift_direction(&flat, TOL), Err(SpikyError::NotPointed));
    }

    #[test]
    fn rotation_maps_direction_down() {
        for u in [Vec3::new(0.0, 0.0, 1.0), Vec3::new(0.0, 0.0, -1.0), Vec3::new(0.3, -0.2, 0.9)] {
            let d = Direction::new(u).unwrap();
            let r = rotation_to_down(&d);
            assert_relative_eq!(r * d.as_vec(), Vec3::new(0.0, 0.0, -1.0), epsilon = 1e-15);
            assert_relative_eq!(r.determinant(), 1.0, epsilon = 1e-14);
        }
    }
}
