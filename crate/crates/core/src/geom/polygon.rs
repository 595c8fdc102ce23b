use super::{cross2, lex_cmp, Direction, Vec2};

/// Convex polygon with CCW vertices and no repeated or collinear vertices.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Vec2>,
}

/// Andrew's monotone chain. Drops collinear points; output is CCW starting at
/// the lexicographically smallest vertex.
pub fn convex_hull_2d(points: &[Vec2], tol: f64) -> Vec<Vec2> {
    let mut pts: Vec<Vec2> = points.to_vec();
    pts.sort_by(lex_cmp);
    pts.dedup_by(|a, b| (*a - *b).norm() <= tol);
    if pts.len() < 3 {
        return pts;
    }
    let turn = |o: &Vec2, a: &Vec2, b: &Vec2| cross2(&(a - o), &(b - o));
    let mut lower: Vec<Vec2> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && turn(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= tol * tol {
            lower.pop();
        }
        lower.push(*p);
    }
    let mut upper: Vec<Vec2> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && turn(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= tol * tol {
            upper.pop();
        }
        upper.push(*p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

impl ConvexPolygon {
    /// Convex hull of `points`. `None` if the hull has no interior.
    pub fn hull(points: &[Vec2]) -> Option<Self> {
        let vertices = convex_hull_2d(points, crate::tol::GEOM);
        let poly = Self { vertices };
        (poly.vertices.len() >= 3 && poly.area() > 0.0).then_some(poly)
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Edges `(a, b)` in CCW order.
    pub fn edges(&self) -> impl Iterator<Item = (Vec2, Vec2)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Outward unit normal and offset of each edge line.
    pub fn edge_lines(&self) -> Vec<(Vec2, f64)> {
        self.edges()
            .map(|(a, b)| {
                let d = b - a;
                let n = Vec2::new(d.y, -d.x).normalize();
                (n, n.dot(&a))
            })
            .collect()
    }

    pub fn area(&self) -> f64 {
        0.5 * self.edges().map(|(a, b)| cross2(&a, &b)).sum::<f64>()
    }

    pub fn perimeter(&self) -> f64 {
        self.edges().map(|(a, b)| (b - a).norm()).sum()
    }

    pub fn support(&self, u: &Vec2) -> f64 {
        self.vertices
            .iter()
            .map(|v| v.dot(u))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Negative inside. Exact Euclidean distance to the boundary.
    pub fn signed_distance(&self, x: &Vec2) -> f64 {
        let inside = self.edge_lines().iter().map(|(n, c)| n.dot(x) - c).fold(f64::NEG_INFINITY, f64::max);
        if inside <= 0.0 {
            inside
        } else {
            self.edges()
                .map(|(a, b)| point_segment_distance(x, &a, &b))
                .fold(f64::INFINITY, f64::min)
        }
    }

    /// Minimal width by rotating calipers. Every minimum is attained with one
    /// plank boundary flush with an edge; returns all edges attaining the
    /// minimum within `tol` as `(width, outward edge normal, edge index)`.
    pub fn caliper_widths(&self) -> Vec<(f64, Vec2, usize)> {
        let v = &self.vertices;
        let n = v.len();
        let mut out = Vec::with_capacity(n);
        let mut j = 1usize;
        for i in 0..n {
            let a = v[i];
            let b = v[(i + 1) % n];
            let e = b - a;
            let len = e.norm();
            let dist = |k: usize| cross2(&e, &(v[k % n] - a)) / len;
            if i == 0 {
                j = 1;
            }
            while dist(j + 1) > dist(j) {
                j += 1;
            }
            out.push((dist(j), Vec2::new(e.y, -e.x) / len, i));
        }
        out
    }

    pub fn minimal_width(&self) -> (f64, Direction<2>) {
        let widths = self.caliper_widths();
        let w = widths.iter().map(|c| c.0).fold(f64::INFINITY, f64::min);
        let scale = w.max(1.0);
        let u = widths
            .iter()
            .filter(|c| c.0 <= w + crate::tol::REFINE * scale)
            .flat_map(|c| [c.1, -c.1])
            .min_by(lex_cmp)
            .unwrap();
        (w, Direction::new(u).unwrap())
    }

    /// Vertices reached by walking CCW; `i` wraps.
    pub fn vertex(&self, i: usize) -> Vec2 {
        self.vertices[i % self.vertices.len()]
    }
}

pub(crate) fn point_segment_distance(x: &Vec2, a: &Vec2, b: &Vec2) -> f64 {
    let d = b - a;
    let l2 = d.norm_squared();
    if l2 == 0.0 {
        return (x - a).norm();
    }
    let t = ((x - a).dot(&d) / l2).clamp(0.0, 1.0);
    (x - (a + d * t)).norm()
}
