use std::f64::consts::{PI, TAU};

use super::polygon::{point_segment_distance, ConvexPolygon};
use super::{cross2, golden_min, lex_cmp, wrap_angle, ConvexBody, Direction, GeomError, Vec2};

/// Grid resolution for minimizing the width function of arc-gons.
pub(crate) const WIDTH_GRID: usize = 2048;
const ARC_WITNESS_SAMPLES: usize = 64;

/// A boundary piece, traversed counterclockwise.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Piece {
    Segment { from: Vec2, to: Vec2 },
    /// Points `center + radius * (cos φ, sin φ)` for `φ ∈ [start, start + sweep]`.
    Arc { center: Vec2, radius: f64, start: f64, sweep: f64 },
}

impl Piece {
    /// Arc from `from_angle` to `to_angle` CCW. Equal angles mean a full turn.
    pub fn arc(center: Vec2, radius: f64, from_angle: f64, to_angle: f64) -> Self {
        let mut sweep = (to_angle - from_angle).rem_euclid(TAU);
        if sweep <= 1e-15 {
            sweep = TAU;
        }
        Piece::Arc {
            center,
            radius,
            start: from_angle,
            sweep,
        }
    }

    pub fn length(&self) -> f64 {
        match *self {
            Piece::Segment { from, to } => (to - from).norm(),
            Piece::Arc { radius, sweep, .. } => radius * sweep,
        }
    }

    pub fn start_point(&self) -> Vec2 {
        self.point_at(0.0)
    }

    pub fn end_point(&self) -> Vec2 {
        self.point_at(self.length())
    }

    /// Point at arc length `s` from the piece start.
    pub fn point_at(&self, s: f64) -> Vec2 {
        match *self {
            Piece::Segment { from, to } => {
                let len = (to - from).norm();
                if s >= len {
                    to
                } else {
                    from + (to - from) * (s / len)
                }
            }
            Piece::Arc { center, radius, start, .. } => {
                let phi = start + s / radius;
                center + Vec2::new(phi.cos(), phi.sin()) * radius
            }
        }
    }

    /// Outward normal angle at the start of the piece (not wrapped).
    fn normal_angle_start(&self) -> f64 {
        match *self {
            Piece::Segment { from, to } => {
                let d = to - from;
                (-d.x).atan2(d.y)
            }
            Piece::Arc { start, .. } => start,
        }
    }

    /// Total normal turn across the piece.
    fn turn(&self) -> f64 {
        match *self {
            Piece::Segment { .. } => 0.0,
            Piece::Arc { sweep, .. } => sweep,
        }
    }

    /// Unit tangent (direction of travel) at arc length `s`.
    pub fn tangent_at(&self, s: f64) -> Vec2 {
        match *self {
            Piece::Segment { from, to } => (to - from).normalize(),
            Piece::Arc { radius, start, .. } => {
                let phi = start + s / radius;
                Vec2::new(-phi.sin(), phi.cos())
            }
        }
    }

    fn support(&self, u: &Vec2) -> (f64, Vec2) {
        match *self {
            Piece::Segment { from, to } => {
                if from.dot(u) >= to.dot(u) {
                    (from.dot(u), from)
                } else {
                    (to.dot(u), to)
                }
            }
            Piece::Arc { center, radius, start, sweep } => {
                let theta = u.y.atan2(u.x);
                if angle_in_range(theta, start, sweep) {
                    let p = center + u.normalize() * radius;
                    (p.dot(u), p)
                } else {
                    let a = self.start_point();
                    let b = self.end_point();
                    if a.dot(u) >= b.dot(u) {
                        (a.dot(u), a)
                    } else {
                        (b.dot(u), b)
                    }
                }
            }
        }
    }

    fn distance(&self, x: &Vec2) -> f64 {
        match *self {
            Piece::Segment { from, to } => point_segment_distance(x, &from, &to),
            Piece::Arc { center, radius, start, sweep } => {
                let d = x - center;
                let r = d.norm();
                if r == 0.0 || angle_in_range(d.y.atan2(d.x), start, sweep) {
                    (r - radius).abs()
                } else {
                    (x - self.start_point()).norm().min((x - self.end_point()).norm())
                }
            }
        }
    }

    fn transformed(&self, f: &impl Fn(Vec2) -> Vec2, scale: f64, rotation: f64) -> Piece {
        match *self {
            Piece::Segment { from, to } => Piece::Segment { from: f(from), to: f(to) },
            Piece::Arc { center, radius, start, sweep } => Piece::Arc {
                center: f(center),
                radius: radius * scale,
                start: start + rotation,
                sweep,
            },
        }
    }
}

/// `true` if `theta` lies on the CCW arc from `start` spanning `sweep`.
pub(crate) fn angle_in_range(theta: f64, start: f64, sweep: f64) -> bool {
    if sweep >= TAU - 1e-15 {
        return true;
    }
    let rel = wrap_angle(theta - start);
    rel <= sweep + 1e-15 || rel >= TAU - 1e-15
}

/// Planar convex body bounded by a closed CCW chain of segments and arcs.
#[derive(Clone, Debug, PartialEq)]
pub struct Body2 {
    pieces: Vec<Piece>,
    /// Arc length at the start of each piece; last entry is the perimeter.
    offsets: Vec<f64>,
    /// Unwrapped outward normal angle at the start of each piece.
    normal_start: Vec<f64>,
}

impl Body2 {
    pub fn new(pieces: Vec<Piece>) -> Result<Self, GeomError> {
        let tol = crate::tol::GEOM;
        let pieces: Vec<Piece> = pieces.into_iter().filter(|p| p.length() > tol * 1e-3).collect();
        if pieces.is_empty() {
            return Err(GeomError::InvalidBody("no pieces".into()));
        }
        for p in &pieces {
            if let Piece::Arc { radius, .. } = p {
                if !(*radius > 0.0) {
                    return Err(GeomError::InvalidBody("arc radius must be positive".into()));
                }
            }
        }
        let n = pieces.len();
        let mut offsets = Vec::with_capacity(n + 1);
        let mut normal_start = Vec::with_capacity(n + 1);
        let mut s = 0.0;
        let mut theta = pieces[0].normal_angle_start();
        for i in 0..n {
            let next = &pieces[(i + 1) % n];
            let gap = (pieces[i].end_point() - next.start_point()).norm();
            if gap > tol {
                return Err(GeomError::InvalidBody(format!("chain not closed after piece {i} (gap {gap:e})")));
            }
            offsets.push(s);
            normal_start.push(theta);
            s += pieces[i].length();
            theta += pieces[i].turn();
            let end_normal = theta;
            let mut jump = (next.normal_angle_start() - end_normal).rem_euclid(TAU);
            if jump > TAU - 1e-7 {
                jump -= TAU;
            }
            if jump < -tol || jump >= PI {
                return Err(GeomError::InvalidBody(format!("chain is not convex at the end of piece {i}")));
            }
            theta = end_normal + jump.max(0.0);
        }
        offsets.push(s);
        normal_start.push(theta);
        let total_turn = theta - normal_start[0];
        if (total_turn - TAU).abs() > 1e-7 {
            return Err(GeomError::InvalidBody(format!("total turn {total_turn} is not 2π")));
        }
        let body = Self {
            pieces,
            offsets,
            normal_start,
        };
        if body.area() <= tol * tol {
            return Err(GeomError::InvalidBody("empty interior".into()));
        }
        Ok(body)
    }

    /// Polygon from CCW vertices.
    pub fn polygon(vertices: &[Vec2]) -> Result<Self, GeomError> {
        let n = vertices.len();
        if n < 3 {
            return Err(GeomError::InvalidBody("polygon needs at least 3 vertices".into()));
        }
        Self::new(
            (0..n)
                .map(|i| Piece::Segment {
                    from: vertices[i],
                    to: vertices[(i + 1) % n],
                })
                .collect(),
        )
    }

    pub fn disc(center: Vec2, radius: f64) -> Result<Self, GeomError> {
        Self::new(vec![Piece::arc(center, radius, 0.0, 0.0)])
    }

    /// Reuleaux triangle of the given width, one vertex pointing down at the
    /// origin.
    pub fn reuleaux(width: f64) -> Result<Self, GeomError> {
        let w = width;
        let a = Vec2::new(0.0, 0.0);
        let b = Vec2::new(w / 2.0, w * 3f64.sqrt() / 2.0);
        let c = Vec2::new(-w / 2.0, w * 3f64.sqrt() / 2.0);
        // Arc opposite each vertex, centered at that vertex, CCW: a→b centered c, b→c centered a, c→a centered b.
        Self::new(vec![
            Piece::arc(c, w, -PI / 3.0, 0.0),
            Piece::arc(a, w, PI / 3.0, 2.0 * PI / 3.0),
            Piece::arc(b, w, PI, 4.0 * PI / 3.0),
        ])
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn is_polygon(&self) -> bool {
        self.pieces.iter().all(|p| matches!(p, Piece::Segment { .. }))
    }

    /// Piece start points, CCW.
    pub fn corners(&self) -> Vec<Vec2> {
        self.pieces.iter().map(Piece::start_point).collect()
    }

    pub fn as_polygon(&self) -> Option<ConvexPolygon> {
        if self.is_polygon() {
            ConvexPolygon::hull(&self.corners())
        } else {
            None
        }
    }

    pub fn perimeter(&self) -> f64 {
        *self.offsets.last().unwrap()
    }

    pub fn area(&self) -> f64 {
        // Green's theorem over the chain.
        self.pieces
            .iter()
            .map(|p| match *p {
                Piece::Segment { from, to } => 0.5 * cross2(&from, &to),
                Piece::Arc { radius, sweep, .. } => {
                    let a = p.start_point();
                    let b = p.end_point();
                    // Chord term plus circular segment area.
                    0.5 * cross2(&a, &b) + 0.5 * radius * radius * (sweep - sweep.sin())
                }
            })
            .sum()
    }

    fn locate(&self, s: f64) -> (usize, f64) {
        let rho = self.perimeter();
        let s = s.rem_euclid(rho);
        let i = match self.offsets[..self.pieces.len()].binary_search_by(|o| o.total_cmp(&s)) {
            Ok(i) => i,
            Err(i) => i - 1,
        };
        (i, s - self.offsets[i])
    }

    /// Boundary point at arc length `s` (wrapping) from the first piece start.
    pub fn point_at(&self, s: f64) -> Vec2 {
        let (i, local) = self.locate(s);
        self.pieces[i].point_at(local)
    }

    /// Unwrapped outward normal angle just after arc length `s`.
    pub fn forward_normal_angle(&self, s: f64) -> f64 {
        let rho = self.perimeter();
        let laps = (s / rho).floor();
        let (i, local) = self.locate(s);
        let base = self.normal_start[i] + laps * TAU;
        match self.pieces[i] {
            Piece::Segment { .. } => base,
            Piece::Arc { radius, .. } => base + local / radius,
        }
    }

    /// Unwrapped outward normal angle just before arc length `s`.
    pub fn backward_normal_angle(&self, s: f64) -> f64 {
        let rho = self.perimeter();
        let laps = (s / rho).floor();
        let (i, local) = self.locate(s);
        if local == 0.0 {
            // End of the previous piece.
            let prev = if i == 0 { self.pieces.len() - 1 } else { i - 1 };
            let lap_adj = if i == 0 { -TAU } else { 0.0 };
            return self.normal_start[prev] + self.pieces[prev].turn() + laps * TAU + lap_adj;
        }
        self.forward_normal_angle(s)
    }

    /// Forward and backward unit tangents at arc length `s`.
    pub fn tangents_at(&self, s: f64) -> (Vec2, Vec2) {
        let (i, local) = self.locate(s);
        let fwd = self.pieces[i].tangent_at(local);
        let back = if local == 0.0 {
            let prev = if i == 0 { self.pieces.len() - 1 } else { i - 1 };
            -self.pieces[prev].tangent_at(self.pieces[prev].length())
        } else {
            -fwd
        };
        (fwd, back)
    }

    /// Arc length of a boundary point, or an error if `x` is not on the boundary.
    pub fn boundary_param(&self, x: &Vec2) -> Result<f64, GeomError> {
        let mut best = (f64::INFINITY, 0.0);
        for (i, p) in self.pieces.iter().enumerate() {
            let local = match *p {
                Piece::Segment { from, to } => {
                    let d = to - from;
                    ((x - from).dot(&d) / d.norm_squared()).clamp(0.0, 1.0) * d.norm()
                }
                Piece::Arc { center, radius, start, sweep } => {
                    let d = x - center;
                    let rel = wrap_angle(d.y.atan2(d.x) - start);
                    let rel = if rel > sweep { if rel - sweep < TAU - rel { sweep } else { 0.0 } } else { rel };
                    rel * radius
                }
            };
            let dist = (p.point_at(local) - x).norm();
            if dist < best.0 - 1e-15 {
                best = (dist, self.offsets[i] + local);
            }
        }
        let scale = self.perimeter().max(1.0);
        if best.0 > crate::tol::GEOM * scale {
            return Err(GeomError::NotOnBoundary(best.0));
        }
        let rho = self.perimeter();
        // Snap onto corners so one-sided tangents are well defined there.
        let mut s = if best.1 >= rho { best.1 - rho } else { best.1 };
        for &o in &self.offsets {
            if (s - o).abs() <= 1e-12 * scale {
                s = if o >= rho { 0.0 } else { o };
            }
        }
        Ok(s)
    }

    /// Arc length of a point attaining `support(u)`. For a flat support set
    /// the CCW-first point is returned.
    pub fn support_param(&self, u: &Vec2) -> f64 {
        let h = self.support(u);
        let scale = self.perimeter().max(1.0);
        let mut best: Option<(f64, f64)> = None;
        for (i, p) in self.pieces.iter().enumerate() {
            let (v, local) = match *p {
                Piece::Segment { from, to } => {
                    let (a, b) = (from.dot(u), to.dot(u));
                    if a >= b - 1e-15 * scale {
                        (a, 0.0)
                    } else {
                        (b, p.length())
                    }
                }
                Piece::Arc { radius, start, sweep, .. } => {
                    let theta = u.y.atan2(u.x);
                    if angle_in_range(theta, start, sweep) {
                        let rel = wrap_angle(theta - start);
                        let rel = if rel > sweep { 0.0 } else { rel };
                        (p.point_at(rel * radius).dot(u), rel * radius)
                    } else {
                        let (a, b) = (p.start_point().dot(u), p.end_point().dot(u));
                        if a >= b {
                            (a, 0.0)
                        } else {
                            (b, p.length())
                        }
                    }
                }
            };
            if v >= h - 1e-12 * scale && best.is_none_or(|b| v > b.0 + 1e-12 * scale) {
                best = Some((v, self.offsets[i] + local));
            }
        }
        let s = best.unwrap().1;
        if s >= self.perimeter() {
            s - self.perimeter()
        } else {
            s
        }
    }

    /// Distinct boundary points within `tol` of `support(u)`: one point, or the
    /// two ends of a flat support segment.
    pub fn support_set(&self, u: &Vec2, tol: f64) -> Vec<Vec2> {
        let h = self.support(u);
        let mut pts: Vec<Vec2> = Vec::new();
        for p in &self.pieces {
            let mut cand = vec![p.start_point(), p.end_point()];
            if let Piece::Arc { .. } = p {
                cand.push(p.support(u).1);
            }
            for c in cand {
                if c.dot(u) >= h - tol && !pts.iter().any(|q| (q - c).norm() <= tol) {
                    pts.push(c);
                }
            }
        }
        if pts.len() > 2 {
            // Keep extremes along the support line.
            let t = Vec2::new(-u.y, u.x);
            pts.sort_by(|a, b| a.dot(&t).total_cmp(&b.dot(&t)));
            pts = vec![pts[0], *pts.last().unwrap()];
        }
        pts.sort_by(lex_cmp);
        pts
    }

    /// First arc length `s* >= s0` (walking CCW, or CW when `backward`) at
    /// which `<x(s), n>` drops below `level`, measured as a distance along the
    /// walk from `s0`. The walk is limited to one lap; `None` if it never drops.
    pub fn descent_crossing(&self, s0: f64, n: &Vec2, level: f64, backward: bool) -> Option<f64> {
        let rho = self.perimeter();
        let np = self.pieces.len();
        let scale = rho.max(1.0);
        let eps = 1e-13 * scale;
        let (mut i, mut local) = self.locate(s0);
        if backward && local == 0.0 {
            i = if i == 0 { np - 1 } else { i - 1 };
            local = self.pieces[i].length();
        }
        let mut walked = 0.0;
        for _ in 0..=np + 1 {
            let p = self.pieces[i];
            let len = p.length();
            let avail = if backward { local } else { len - local };
            let hit = match p {
                Piece::Segment { from, to } => {
                    let (a_pt, b_pt) = if backward {
                        (from + (to - from) * (local / len), from)
                    } else {
                        (from + (to - from) * (local / len), to)
                    };
                    let ga = a_pt.dot(n);
                    let gb = b_pt.dot(n);
                    if gb >= level - eps {
                        None
                    } else if ga <= level {
                        Some(0.0)
                    } else {
                        Some(avail * (ga - level) / (ga - gb))
                    }
                }
                Piece::Arc { center, radius, start, .. } => {
                    let phi0 = start + local / radius;
                    let theta_n = n.y.atan2(n.x);
                    let scale_n = n.norm();
                    let q = (level - center.dot(n)) / (radius * scale_n);
                    if q >= 1.0 {
                        Some(0.0)
                    } else if q <= -1.0 {
                        None
                    } else {
                        let beta = q.acos();
                        // Angle measured in the walking direction.
                        let psi = if backward {
                            wrap_angle(-(phi0 - theta_n))
                        } else {
                            wrap_angle(phi0 - theta_n)
                        };
                        let entry = if psi <= beta {
                            beta - psi
                        } else if psi >= TAU - beta {
                            TAU - psi + beta
                        } else {
                            0.0
                        };
                        let d = entry * radius;
                        (d <= avail + eps).then_some(d.min(avail))
                    }
                }
            };
            if let Some(d) = hit {
                let total = walked + d;
                return (total <= rho + eps).then_some(total);
            }
            walked += avail;
            if walked > rho + eps {
                return None;
            }
            if backward {
                i = if i == 0 { np - 1 } else { i - 1 };
                local = self.pieces[i].length();
            } else {
                i = (i + 1) % np;
                local = 0.0;
            }
        }
        None
    }

    /// Walking CCW from `s`, skip segments lying on `{<x, n> = level}` and
    /// return the arc length (not wrapped) at the far end of that flat run.
    pub fn skip_flat(&self, s: f64, n: &Vec2, level: f64, tol: f64) -> f64 {
        let mut s = s;
        for _ in 0..self.pieces.len() {
            let (i, local) = self.locate(s);
            let p = &self.pieces[i];
            let end = p.end_point();
            let flat = matches!(p, Piece::Segment { .. })
                && (p.point_at(local).dot(n) - level).abs() <= tol
                && (end.dot(n) - level).abs() <= tol;
            if !flat {
                break;
            }
            s += p.length() - local;
        }
        s
    }

    /// `K ∩ {<x, n> = c}` as its two endpoints, or `None` if the line misses
    /// the interior.
    pub fn chord(&self, n: &Vec2, c: f64) -> Option<(Vec2, Vec2)> {
        let hi = self.support(n);
        let lo = -self.support(&-n);
        if !(c < hi && c > lo) {
            return None;
        }
        let s_top = self.support_param(n);
        let d1 = self.descent_crossing(s_top, n, c, false)?;
        let s_bot = self.support_param(&-n);
        let d2 = self.descent_crossing(s_bot, &-n, -c, false)?;
        Some((self.point_at(s_top + d1), self.point_at(s_bot + d2)))
    }

    fn width_at_angle(&self, theta: f64) -> f64 {
        let u = Vec2::new(theta.cos(), theta.sin());
        self.width_in_direction(&u)
    }

    /// Local minima of the width function within `tol` of the global minimum,
    /// as directions with angle in `[0, π)`. Exact edge normals for polygons;
    /// grid plus golden-section refinement otherwise, with segment normals and
    /// normal-cone bisectors at corners added as exact candidates.
    pub fn width_minimizers(&self, tol: f64) -> Vec<(f64, Direction<2>)> {
        let mut cands: Vec<(f64, f64)> = Vec::new();
        if let Some(poly) = self.as_polygon() {
            for (w, n, _) in poly.caliper_widths() {
                cands.push((w, wrap_angle(n.y.atan2(n.x)) % PI));
            }
        } else {
            let m = WIDTH_GRID;
            let h = PI / m as f64;
            let grid: Vec<f64> = (0..m).map(|k| self.width_at_angle(k as f64 * h)).collect();
            for k in 0..m {
                let prev = grid[(k + m - 1) % m];
                let next = grid[(k + 1) % m];
                if grid[k] <= prev && grid[k] <= next {
                    let th = k as f64 * h;
                    let (x, fx) = golden_min(|t| self.width_at_angle(t), th - h, th + h, crate::tol::REFINE);
                    cands.push((fx, wrap_angle(x) % PI));
                }
            }
            for p in &self.pieces {
                if let Piece::Segment { .. } = p {
                    let th = wrap_angle(p.normal_angle_start()) % PI;
                    cands.push((self.width_at_angle(th), th));
                }
            }
            for i in 0..self.pieces.len() {
                let lo = self.normal_start[i];
                let prev_end = if i == 0 {
                    self.normal_start[self.pieces.len()] - TAU
                } else {
                    self.normal_start[i - 1] + self.pieces[i - 1].turn()
                };
                if lo - prev_end > 1e-12 {
                    let th = wrap_angle(0.5 * (lo + prev_end)) % PI;
                    cands.push((self.width_at_angle(th), th));
                }
            }
        }
        let w = cands.iter().map(|c| c.0).fold(f64::INFINITY, f64::min);
        let mut out: Vec<(f64, Direction<2>)> = cands
            .into_iter()
            .filter(|c| c.0 <= w + tol)
            .map(|(wc, th)| (wc, Direction::from_angle(th)))
            .collect();
        out.sort_by(|a, b| lex_cmp(a.1.as_vec(), b.1.as_vec()));
        out.dedup_by(|a, b| (a.1.as_vec() - b.1.as_vec()).norm() < 1e-12);
        out
    }

    /// Apply `x ↦ scale · R(rotation) · x + shift`.
    pub fn similarity(&self, scale: f64, rotation: f64, shift: &Vec2) -> Result<Self, GeomError> {
        let (c, s) = (rotation.cos(), rotation.sin());
        let f = |p: Vec2| Vec2::new(c * p.x - s * p.y, s * p.x + c * p.y) * scale + shift;
        Self::new(self.pieces.iter().map(|p| p.transformed(&f, scale, rotation)).collect())
    }

    fn inside_raw(&self, x: &Vec2) -> bool {
        // K is the corner polygon plus one circular segment per arc.
        let corners = self.corners();
        let n = corners.len();
        if n >= 3 {
            let inside = (0..n).all(|i| cross2(&(corners[(i + 1) % n] - corners[i]), &(x - corners[i])) >= 0.0);
            if inside {
                return true;
            }
        }
        self.pieces.iter().any(|p| match *p {
            Piece::Arc { center, radius, sweep, .. } => {
                if (x - center).norm() > radius {
                    return false;
                }
                if sweep >= TAU - 1e-15 {
                    return true;
                }
                let a = p.start_point();
                let b = p.end_point();
                cross2(&(b - a), &(x - a)) <= 0.0
            }
            Piece::Segment { .. } => false,
        })
    }

    /// Distance to the boundary (unsigned).
    pub fn boundary_distance(&self, x: &Vec2) -> f64 {
        self.pieces.iter().map(|p| p.distance(x)).fold(f64::INFINITY, f64::min)
    }
}

impl ConvexBody<2> for Body2 {
    fn support(&self, u: &Vec2) -> f64 {
        self.pieces.iter().map(|p| p.support(u).0).fold(f64::NEG_INFINITY, f64::max)
    }

    fn minimal_width(&self) -> (f64, Direction<2>) {
        if let Some(poly) = self.as_polygon() {
            return poly.minimal_width();
        }
        let mins = self.width_minimizers(0.0);
        let w = mins.iter().map(|m| m.0).fold(f64::INFINITY, f64::min);
        let scale = w.max(1.0);
        let u = mins
            .iter()
            .filter(|m| m.0 <= w + crate::tol::REFINE * scale)
            .flat_map(|m| [*m.1.as_vec(), -*m.1.as_vec()])
            .min_by(lex_cmp)
            .unwrap();
        (w, Direction::new(u).unwrap())
    }

    fn signed_distance(&self, x: &Vec2) -> f64 {
        let d = self.boundary_distance(x);
        if self.inside_raw(x) {
            -d
        } else {
            d
        }
    }

    fn bounds(&self) -> (Vec2, Vec2) {
        let hx = self.support(&Vec2::new(1.0, 0.0));
        let lx = -self.support(&Vec2::new(-1.0, 0.0));
        let hy = self.support(&Vec2::new(0.0, 1.0));
        let ly = -self.support(&Vec2::new(0.0, -1.0));
        (Vec2::new(lx, ly), Vec2::new(hx, hy))
    }

    fn containment_witnesses(&self) -> Vec<Vec2> {
        let mut out = Vec::new();
        for p in &self.pieces {
            out.push(p.start_point());
            if let Piece::Arc { radius, sweep, .. } = *p {
                for k in 1..ARC_WITNESS_SAMPLES {
                    out.push(p.point_at(radius * sweep * k as f64 / ARC_WITNESS_SAMPLES as f64));
                }
                for u in [Vec2::x(), Vec2::y(), -Vec2::x(), -Vec2::y()] {
                    let (_, q) = p.support(&u);
                    out.push(q);
                }
            }
        }
        out
    }

    fn scaled_translated(&self, scale: f64, shift: &Vec2) -> Self {
        self.similarity(scale, 0.0, shift).expect("similarity of a valid body is valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn square() -> Body2 {
        Body2::polygon(&[
            Vec2::new(-0.5, -0.5),
            Vec2::new(0.5, -0.5),
            Vec2::new(0.5, 0.5),
            Vec2::new(-0.5, 0.5),
        ])
        .unwrap()
    }

    #[test]
    fn support_of_square_and_disc() {
        assert_relative_eq!(square().support(&Vec2::new(1.0, 0.0)), 0.5);
        let disc = Body2::disc(Vec2::zeros(), 1.0).unwrap();
        for k in 0..16 {
            let u = Direction::from_angle(k as f64 * 0.41);
            assert_relative_eq!(disc.support(&u), 1.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn widths() {
        let s = square();
        assert_relative_eq!(s.width_in_direction(&Vec2::new(1.0, 0.0)), 1.0);
        let d = Vec2::new(1.0, 1.0).normalize();
        assert_relative_eq!(s.width_in_direction(&d), 2f64.sqrt(), epsilon = 1e-15);
        let r = Body2::reuleaux(1.0).unwrap();
        for k in 0..50 {
            let u = Direction::from_angle(k as f64 * 0.1257);
            assert!((r.width_in_direction(&u) - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn perimeters() {
        assert_relative_eq!(square().perimeter(), 4.0);
        assert_relative_eq!(Body2::reuleaux(1.0).unwrap().perimeter(), PI, epsilon = 1e-14);
        assert_relative_eq!(Body2::disc(Vec2::zeros(), 1.0).unwrap().perimeter(), TAU);
    }

    #[test]
    fn reuleaux_area_matches_closed_form() {
        let r = Body2::reuleaux(1.0).unwrap();
        assert_relative_eq!(r.area(), (PI - 3f64.sqrt()) / 2.0, epsilon = 1e-14);
    }

    #[test]
    fn distance_to_complement_examples() {
        let s = square();
        assert_relative_eq!(s.distance_to_complement(&Vec2::zeros()), 0.5);
        assert_eq!(s.distance_to_complement(&Vec2::new(0.5, 0.0)), 0.0);
        let disc = Body2::disc(Vec2::zeros(), 1.0).unwrap();
        assert_relative_eq!(disc.distance_to_complement(&Vec2::new(0.3, 0.0)), 0.7, epsilon = 1e-15);
        assert_eq!(s.distance_to_complement(&Vec2::new(3.0, 0.0)), 0.0);
    }

    #[test]
    fn containment_examples() {
        let s = square();
        assert!(s.contains(&Vec2::zeros(), true));
        assert!(!s.contains(&Vec2::new(0.5, 0.5), true));
        assert!(s.contains(&Vec2::new(0.5, 0.5), false));
        assert!(!s.contains(&Vec2::new(0.6, 0.0), false));
        assert!(!s.contains(&Vec2::new(0.6, 0.0), true));
        let r = Body2::reuleaux(1.0).unwrap();
        // Just outside the straight triangle but inside the arc bulge.
        assert!(r.contains(&Vec2::new(0.3487, 0.376), true));
        assert!(!r.contains(&Vec2::new(0.7, 0.5), false));
    }

    #[test]
    fn rejects_non_convex_and_open_chains() {
        let bad = Body2::polygon(&[
            Vec2::new(0.0, 0.0),
            Vec2::new(2.0, 0.0),
            Vec2::new(1.0, 0.2),
            Vec2::new(2.0, 2.0),
            Vec2::new(0.0, 2.0),
        ]);
        assert!(matches!(bad, Err(GeomError::InvalidBody(_))));
        let cw = Body2::polygon(&[Vec2::new(0.0, 0.0), Vec2::new(0.0, 1.0), Vec2::new(1.0, 0.0)]);
        assert!(cw.is_err());
        let open = Body2::new(vec![
            Piece::Segment { from: Vec2::new(0.0, 0.0), to: Vec2::new(1.0, 0.0) },
            Piece::Segment { from: Vec2::new(1.0, 0.0), to: Vec2::new(0.0, 1.0) },
        ]);
        assert!(open.is_err());
    }

    #[test]
    fn minimal_width_of_polygons_and_arcgons() {
        let (w, u) = square().minimal_width();
        assert_relative_eq!(w, 1.0);
        assert!(u.x.abs() < 1e-15 || u.y.abs() < 1e-15);
        let h = 3f64.sqrt() / 2.0;
        let tri = Body2::polygon(&[Vec2::new(0.0, 0.0), Vec2::new(1.0, 0.0), Vec2::new(0.5, h)]).unwrap();
        assert_relative_eq!(tri.minimal_width().0, h, epsilon = 1e-15);
        let r = Body2::reuleaux(1.0).unwrap();
        assert!((r.minimal_width().0 - 1.0).abs() < 1e-12);
        // Stadium: width 2 (the diameter of the caps).
        let stadium = Body2::new(vec![
            Piece::Segment { from: Vec2::new(-1.0, -1.0), to: Vec2::new(1.0, -1.0) },
            Piece::arc(Vec2::new(1.0, 0.0), 1.0, -PI / 2.0, PI / 2.0),
            Piece::Segment { from: Vec2::new(1.0, 1.0), to: Vec2::new(-1.0, 1.0) },
            Piece::arc(Vec2::new(-1.0, 0.0), 1.0, PI / 2.0, 3.0 * PI / 2.0),
        ])
        .unwrap();
        let (w, u) = stadium.minimal_width();
        assert!((w - 2.0).abs() < 1e-12);
        assert!(u.x.abs() < 1e-6);
    }

    #[test]
    fn chord_and_crossings() {
        let s = square();
        let (a, b) = s.chord(&Vec2::new(0.0, 1.0), 0.25).unwrap();
        let (lo, hi) = if a.x < b.x { (a, b) } else { (b, a) };
        assert_relative_eq!(lo, Vec2::new(-0.5, 0.25), epsilon = 1e-15);
        assert_relative_eq!(hi, Vec2::new(0.5, 0.25), epsilon = 1e-15);
        assert!(s.chord(&Vec2::new(0.0, 1.0), 0.5).is_none());
        let disc = Body2::disc(Vec2::zeros(), 1.0).unwrap();
        let (a, b) = disc.chord(&Vec2::new(0.0, 1.0), 0.6).unwrap();
        assert_relative_eq!((a - b).norm(), 1.6, epsilon = 1e-12);
    }

    #[test]
    fn boundary_params_round_trip() {
        let r = Body2::reuleaux(1.0).unwrap();
        for k in 0..40 {
            let s = r.perimeter() * k as f64 / 40.0;
            let x = r.point_at(s);
            let back = r.boundary_param(&x).unwrap();
            assert!((r.point_at(back) - x).norm() < 1e-12);
        }
        assert!(r.boundary_param(&Vec2::new(0.0, 0.5)).is_err());
    }
}
