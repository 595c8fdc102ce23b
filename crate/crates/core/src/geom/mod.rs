//! Convex-body representations and metric primitives.

mod body2;
pub mod hausdorff;
mod polygon;
mod polytope;

pub use body2::{Body2, Piece};
pub use hausdorff::{hausdorff_distance, Shape2};
pub use polygon::{convex_hull_2d, ConvexPolygon};
pub use polytope::{Facet, Polytope3};
pub(crate) use polygon::point_segment_distance;
pub(crate) use polytope::plane_basis;

use nalgebra::SVector;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

pub type Vec2 = nalgebra::Vector2<f64>;
pub type Vec3 = nalgebra::Vector3<f64>;
pub type Point<const D: usize> = SVector<f64, D>;

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum GeomError {
    #[error("invalid body: {0}")]
    InvalidBody(String),
    #[error("empty input set")]
    EmptySet,
    #[error("empty cross-section at height {0}")]
    EmptySlice(f64),
    #[error("point is not on the boundary (distance {0:e})")]
    NotOnBoundary(f64),
}

/// Unit vector. Construction normalizes; the zero vector is rejected.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Direction<const D: usize>(SVector<f64, D>);

impl<const D: usize> Direction<D> {
    pub fn new(v: SVector<f64, D>) -> Option<Self> {
        let n = v.norm();
        (n > 0.0 && n.is_finite()).then(|| Self(v / n))
    }

    pub fn as_vec(&self) -> &SVector<f64, D> {
        &self.0
    }

    pub fn into_inner(self) -> SVector<f64, D> {
        self.0
    }
}

impl<const D: usize> std::ops::Neg for Direction<D> {
    type Output = Self;
    fn neg(self) -> Self {
        Self(-self.0)
    }
}

impl<const D: usize> std::ops::Deref for Direction<D> {
    type Target = SVector<f64, D>;
    fn deref(&self) -> &Self::Target {
        &self.0
    }
}

impl Direction<2> {
    pub fn from_angle(theta: f64) -> Self {
        Self(Vec2::new(theta.cos(), theta.sin()))
    }

    pub fn angle(&self) -> f64 {
        self.0.y.atan2(self.0.x)
    }
}

/// `{x : <x, normal> = offset}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Hyperplane<const D: usize> {
    pub normal: Direction<D>,
    pub offset: f64,
}

impl<const D: usize> Hyperplane<D> {
    pub fn signed_distance(&self, x: &Point<D>) -> f64 {
        x.dot(&self.normal) - self.offset
    }
}

/// Closed slab `lo <= <x, normal> <= hi`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Plank<const D: usize> {
    pub normal: SVector<f64, D>,
    pub lo: f64,
    pub hi: f64,
}

impl<const D: usize> Plank<D> {
    /// `normal` is normalized; `lo` and `hi` are swapped if given out of order.
    pub fn new(normal: SVector<f64, D>, lo: f64, hi: f64) -> Self {
        let n = normal.norm();
        let (lo, hi) = (lo / n, hi / n);
        let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
        Self {
            normal: normal / n,
            lo,
            hi,
        }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: &Point<D>, tol: f64) -> bool {
        let v = x.dot(&self.normal);
        self.lo - tol <= v && v <= self.hi + tol
    }

    /// Grow by `kappa` on each side, about the central hyperplane.
    pub fn inflate(&self, kappa: f64) -> Self {
        Self {
            normal: self.normal,
            lo: self.lo - kappa,
            hi: self.hi + kappa,
        }
    }
}

/// Sum of plank widths, in list order.
pub fn total_width<const D: usize>(planks: &[Plank<D>]) -> f64 {
    planks.iter().map(Plank::width).sum()
}

/// Width function and its minimum shared by the planar and solid bodies.
pub trait ConvexBody<const D: usize> {
    fn support(&self, u: &Point<D>) -> f64;

    fn width_in_direction(&self, u: &Point<D>) -> f64 {
        self.support(u) + self.support(&-u)
    }

    fn minimal_width(&self) -> (f64, Direction<D>);

    /// Negative inside, zero on the boundary, positive outside. Magnitude is
    /// the Euclidean distance to the boundary.
    fn signed_distance(&self, x: &Point<D>) -> f64;

    fn contains(&self, x: &Point<D>, strict: bool) -> bool {
        let sd = self.signed_distance(x);
        if strict {
            sd < -tol_membership()
        } else {
            sd <= tol_membership()
        }
    }

    fn distance_to_complement(&self, x: &Point<D>) -> f64 {
        (-self.signed_distance(x)).max(0.0)
    }

    /// Axis-aligned bounding box `(min, max)`.
    fn bounds(&self) -> (Point<D>, Point<D>);

    /// Points that witness strict containment of this body inside another:
    /// vertices, arc extremes and a dense sample along curved pieces.
    fn containment_witnesses(&self) -> Vec<Point<D>>;

    fn scaled_translated(&self, scale: f64, shift: &Point<D>) -> Self
    where
        Self: Sized;
}

fn tol_membership() -> f64 {
    crate::tol::MEMBERSHIP
}

/// Reduce an angle to `[0, 2π)`.
pub fn wrap_angle(a: f64) -> f64 {
    let r = a.rem_euclid(2.0 * PI);
    if r >= 2.0 * PI {
        0.0
    } else {
        r
    }
}

/// Lexicographic comparison of vectors, for deterministic tie-breaking.
pub fn lex_cmp<const D: usize>(a: &Point<D>, b: &Point<D>) -> std::cmp::Ordering {
    for i in 0..D {
        match a[i].total_cmp(&b[i]) {
            std::cmp::Ordering::Equal => continue,
            o => return o,
        }
    }
    std::cmp::Ordering::Equal
}

pub(crate) fn cross2(a: &Vec2, b: &Vec2) -> f64 {
    a.x * b.y - a.y * b.x
}

/// Golden-section minimization on `[a, b]` down to interval length `tol`.
pub(crate) fn golden_min(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - g * (b - a);
    let mut d = a + g * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    let mut iter = 0;
    while (b - a).abs() > tol && iter < 200 {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
        iter += 1;
    }
    let x = 0.5 * (a + b);
    let fx = f(x);
    [(c, fc), (d, fd), (x, fx)]
        .into_iter()
        .min_by(|p, q| p.1.total_cmp(&q.1))
        .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plank_membership_and_inflation() {
        let p = Plank::new(Vec2::new(0.0, 2.0), 0.0, 2.0);
        assert_eq!(p.width(), 1.0);
        assert!(p.contains(&Vec2::new(5.0, 1.0), 0.0));
        assert!(!p.contains(&Vec2::new(0.0, 1.5), 0.0));
        let q = p.inflate(0.25);
        assert!((q.width() - 1.5).abs() < 1e-15);
        assert!(q.contains(&Vec2::new(0.0, -0.2), 0.0));
    }

    #[test]
    fn zero_width_plank_is_legal() {
        let p = Plank::new(Vec2::new(1.0, 0.0), 0.3, 0.3);
        assert_eq!(p.width(), 0.0);
        assert!(p.contains(&Vec2::new(0.3, 9.0), 1e-12));
    }

    #[test]
    fn direction_is_unit() {
        let d = Direction::new(Vec3::new(3.0, 4.0, 12.0)).unwrap();
        assert!((d.norm() - 1.0).abs() < 1e-12);
        assert!(Direction::new(Vec2::zeros()).is_none());
    }

    #[test]
    fn golden_finds_parabola_minimum() {
        let (x, fx) = golden_min(|x| (x - 0.3).powi(2) + 1.0, 0.0, 1.0, 1e-12);
        assert!((x - 0.3).abs() < 1e-6);
        assert!((fx - 1.0).abs() < 1e-12);
    }
}
