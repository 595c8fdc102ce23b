use super::polygon::convex_hull_2d;
use super::{lex_cmp, ConvexBody, Direction, GeomError, Vec2, Vec3};

/// Planar facet of a polytope: outward unit normal, plane offset and CCW
/// (seen from outside) vertex indices.
#[derive(Clone, Debug, PartialEq)]
pub struct Facet {
    pub normal: Vec3,
    pub offset: f64,
    pub vertices: Vec<usize>,
}

/// Convex polytope in R³ given as the hull of a point set.
#[derive(Clone, Debug, PartialEq)]
pub struct Polytope3 {
    vertices: Vec<Vec3>,
    facets: Vec<Facet>,
    edges: Vec<(usize, usize)>,
}

/// In-plane orthonormal basis `(e1, e2)` with `e1 × e2 = n`.
pub(crate) fn plane_basis(n: &Vec3) -> (Vec3, Vec3) {
    let helper = if n.x.abs() < 0.6 { Vec3::x() } else { Vec3::y() };
    let e1 = (helper - n * n.dot(&helper)).normalize();
    let e2 = n.cross(&e1);
    (e1, e2)
}

impl Polytope3 {
    /// Convex hull; vertices are deduplicated at the geometric tolerance and
    /// input with affine dimension below 3 is rejected.
    pub fn hull(points: &[Vec3]) -> Result<Self, GeomError> {
        let tol = crate::tol::GEOM;
        let mut pts: Vec<Vec3> = Vec::new();
        for p in points {
            if !p.iter().all(|c| c.is_finite()) {
                return Err(GeomError::InvalidBody("non-finite coordinate".into()));
            }
            if !pts.iter().any(|q| (q - p).norm() <= tol) {
                pts.push(*p);
            }
        }
        let n = pts.len();
        if n < 4 {
            return Err(GeomError::InvalidBody("need at least 4 distinct points".into()));
        }
        let scale = pts.iter().map(|p| p.norm()).fold(1.0, f64::max);
        let ptol = tol * scale;
        let mut planes: Vec<(Vec3, f64)> = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let c = (pts[j] - pts[i]).cross(&(pts[k] - pts[i]));
                    let len = c.norm();
                    if len <= ptol * scale {
                        continue;
                    }
                    let nrm = c / len;
                    let off = nrm.dot(&pts[i]);
                    let (mut above, mut below) = (false, false);
                    for p in &pts {
                        let d = nrm.dot(p) - off;
                        above |= d > ptol;
                        below |= d < -ptol;
                    }
                    let plane = match (above, below) {
                        (false, true) => (nrm, off),
                        (true, false) => (-nrm, -off),
                        (false, false) => {
                            return Err(GeomError::InvalidBody("points are coplanar".into()));
                        }
                        _ => continue,
                    };
                    if !planes.iter().any(|q| (q.0 - plane.0).norm() <= tol && (q.1 - plane.1).abs() <= ptol) {
                        planes.push(plane);
                    }
                }
            }
        }
        if planes.len() < 4 {
            return Err(GeomError::InvalidBody("degenerate point set".into()));
        }
        let mut used: Vec<usize> = Vec::new();
        let mut raw_facets: Vec<(Vec3, f64, Vec<usize>)> = Vec::new();
        for (nrm, off) in planes {
            let on: Vec<usize> = (0..n).filter(|&i| (nrm.dot(&pts[i]) - off).abs() <= ptol).collect();
            let (e1, e2) = plane_basis(&nrm);
            let flat: Vec<Vec2> = on.iter().map(|&i| Vec2::new(pts[i].dot(&e1), pts[i].dot(&e2))).collect();
            let hull = convex_hull_2d(&flat, ptol);
            let ids: Vec<usize> = hull
                .iter()
                .map(|h| on[flat.iter().position(|f| (f - h).norm() == 0.0).unwrap()])
                .collect();
            for &i in &ids {
                if !used.contains(&i) {
                    used.push(i);
                }
            }
            raw_facets.push((nrm, off, ids));
        }
        used.sort_unstable();
        let remap = |i: usize| used.binary_search(&i).unwrap();
        let vertices: Vec<Vec3> = used.iter().map(|&i| pts[i]).collect();
        let facets: Vec<Facet> = raw_facets
            .into_iter()
            .map(|(normal, offset, ids)| Facet {
                normal,
                offset,
                vertices: ids.into_iter().map(remap).collect(),
            })
            .collect();
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for f in &facets {
            let m = f.vertices.len();
            for a in 0..m {
                let (i, j) = (f.vertices[a], f.vertices[(a + 1) % m]);
                let e = (i.min(j), i.max(j));
                if !edges.contains(&e) {
                    edges.push(e);
                }
            }
        }
        edges.sort_unstable();
        Ok(Self {
            vertices,
            facets,
            edges,
        })
    }

    pub fn vertices(&self) -> &[Vec3] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn centroid(&self) -> Vec3 {
        self.vertices.iter().sum::<Vec3>() / self.vertices.len() as f64
    }

    /// Fan triangulation of every facet, CCW from outside.
    pub fn triangles(&self) -> Vec<[Vec3; 3]> {
        let mut out = Vec::new();
        for f in &self.facets {
            let v = &f.vertices;
            for k in 1..v.len() - 1 {
                out.push([self.vertices[v[0]], self.vertices[v[k]], self.vertices[v[k + 1]]]);
            }
        }
        out
    }

    /// Candidate minimal-width directions: facet normals and normalized cross
    /// products of all edge-direction pairs.
    pub fn width_candidates(&self) -> Vec<Direction<3>> {
        let mut out: Vec<Direction<3>> = self.facets.iter().filter_map(|f| Direction::new(f.normal)).collect();
        let dirs: Vec<Vec3> = self
            .edges
            .iter()
            .map(|&(i, j)| (self.vertices[j] - self.vertices[i]).normalize())
            .collect();
        for a in 0..dirs.len() {
            for b in a + 1..dirs.len() {
                let c = dirs[a].cross(&dirs[b]);
                if c.norm() > 1e-9 {
                    out.push(Direction::new(c).unwrap());
                }
            }
        }
        out
    }

    /// Indices of facets whose planes pass through `x`.
    pub fn facets_through(&self, x: &Vec3, tol: f64) -> Vec<usize> {
        (0..self.facets.len())
            .filter(|&f| (self.facets[f].normal.dot(x) - self.facets[f].offset).abs() <= tol)
            .collect()
    }

    pub fn vertex_index(&self, x: &Vec3, tol: f64) -> Option<usize> {
        self.vertices.iter().position(|v| (v - x).norm() <= tol)
    }

    /// Vertices adjacent to vertex `i` along hull edges.
    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == i {
                    Some(b)
                } else if b == i {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    /// `K ∩ {z = t}` as a CCW polygon in `(x, y)`; `None` if the slice has
    /// no relative interior.
    pub fn horizontal_section(&self, t: f64) -> Option<Vec<Vec2>> {
        let tol = crate::tol::GEOM;
        let mut pts: Vec<Vec2> = Vec::new();
        for &(i, j) in &self.edges {
            let (a, b) = (self.vertices[i], self.vertices[j]);
            let (da, db) = (a.z - t, b.z - t);
            if da.abs() <= tol * 1e-3 {
                pts.push(a.xy());
            }
            if db.abs() <= tol * 1e-3 {
                pts.push(b.xy());
            }
            if da * db < 0.0 {
                let lam = da / (da - db);
                pts.push((a + (b - a) * lam).xy());
            }
        }
        let hull = convex_hull_2d(&pts, tol * 1e-3);
        if hull.len() < 3 {
            return None;
        }
        let area: f64 = (0..hull.len())
            .map(|k| super::cross2(&hull[k], &hull[(k + 1) % hull.len()]))
            .sum::<f64>()
            * 0.5;
        (area > tol * tol).then_some(hull)
    }

    pub fn transformed(&self, f: impl Fn(&Vec3) -> Vec3) -> Result<Self, GeomError> {
        let pts: Vec<Vec3> = self.vertices.iter().map(f).collect();
        Self::hull(&pts)
    }
}

impl ConvexBody<3> for Polytope3 {
    fn support(&self, u: &Vec3) -> f64 {
        self.vertices.iter().map(|v| v.dot(u)).fold(f64::NEG_INFINITY, f64::max)
    }

    fn minimal_width(&self) -> (f64, Direction<3>) {
        let cands = self.width_candidates();
        let widths: Vec<f64> = cands.iter().map(|u| self.width_in_direction(u)).collect();
        let w = widths.iter().copied().fold(f64::INFINITY, f64::min);
        let scale = w.max(1.0);
        let u = cands
            .iter()
            .zip(&widths)
            .filter(|(_, &wc)| wc <= w + crate::tol::REFINE * scale)
            .flat_map(|(u, _)| [*u.as_vec(), -*u.as_vec()])
            .min_by(lex_cmp)
            .unwrap();
        (w, Direction::new(u).unwrap())
    }

    fn signed_distance(&self, x: &Vec3) -> f64 {
        let inside = self
            .facets
            .iter()
            .map(|f| f.normal.dot(x) - f.offset)
            .fold(f64::NEG_INFINITY, f64::max);
        if inside <= 0.0 {
            return inside;
        }
        // Outside: distance to the nearest facet polygon.
        self.facets
            .iter()
            .map(|f| {
                let (e1, e2) = plane_basis(&f.normal);
                let poly: Vec<Vec2> = f
                    .vertices
                    .iter()
                    .map(|&i| Vec2::new(self.vertices[i].dot(&e1), self.vertices[i].dot(&e2)))
                    .collect();
                let q = Vec2::new(x.dot(&e1), x.dot(&e2));
                let h = f.normal.dot(x) - f.offset;
                let m = poly.len();
                let inside_face = (0..m).all(|k| super::cross2(&(poly[(k + 1) % m] - poly[k]), &(q - poly[k])) >= 0.0);
                let planar = if inside_face {
                    0.0
                } else {
                    (0..m)
                        .map(|k| super::polygon::point_segment_distance(&q, &poly[k], &poly[(k + 1) % m]))
                        .fold(f64::INFINITY, f64::min)
                };
                (planar * planar + h * h).sqrt()
            })
            .fold(f64::INFINITY, f64::min)
    }

    fn bounds(&self) -> (Vec3, Vec3) {
        let mut lo = Vec3::repeat(f64::INFINITY);
        let mut hi = Vec3::repeat(f64::NEG_INFINITY);
        for v in &self.vertices {
            lo = lo.inf(v);
            hi = hi.sup(v);
        }
        (lo, hi)
    }

    fn containment_witnesses(&self) -> Vec<Vec3> {
        self.vertices.clone()
    }

    fn scaled_translated(&self, scale: f64, shift: &Vec3) -> Self {
        self.transformed(|v| v * scale + shift).expect("similarity of a valid polytope is valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    pub(crate) fn pyramid() -> Polytope3 {
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
    fn pyramid_structure() {
        let p = pyramid();
        assert_eq!(p.vertices().len(), 5);
        assert_eq!(p.facets().len(), 5);
        assert_eq!(p.edges().len(), 8);
        let c = p.centroid();
        for f in p.facets() {
            let v = p.vertices()[f.vertices[0]];
            assert!(f.normal.dot(&(v - c)) > 0.0);
        }
    }

    #[test]
    fn pyramid_support_and_width() {
        let p = pyramid();
        assert_eq!(p.support(&Vec3::new(0.0, 0.0, -1.0)), 0.0);
        let (w, u) = p.minimal_width();
        assert_relative_eq!(w, 0.5, epsilon = 1e-15);
        assert!(u.x.abs() < 1e-15 && u.y.abs() < 1e-15);
    }

    #[test]
    fn hull_removes_interior_and_duplicate_points() {
        let mut pts = vec![];
        for &x in &[0.0, 1.0] {
            for &y in &[0.0, 1.0] {
                for &z in &[0.0, 1.0] {
                    pts.push(Vec3::new(x, y, z));
                }
            }
        }
        pts.push(Vec3::new(0.5, 0.5, 0.5));
        pts.push(Vec3::new(0.5, 0.5, 1.0));
        pts.push(Vec3::new(1.0, 1.0, 1.0 + 1e-12));
        let cube = Polytope3::hull(&pts).unwrap();
        assert_eq!(cube.vertices().len(), 8);
        assert_eq!(cube.facets().len(), 6);
        assert_eq!(cube.edges().len(), 12);
        assert_eq!(cube.triangles().len(), 12);
    }

    #[test]
    fn rejects_flat_input() {
        let flat = Polytope3::hull(&[
            Vec3::new(0.0, 0.0, 0.0),
            Vec3::new(1.0, 0.0, 0.0),
            Vec3::new(0.0, 1.0, 0.0),
            Vec3::new(1.0, 1.0, 0.0),
        ]);
        assert!(flat.is_err());
    }

    #[test]
    fn sections_and_distance() {
        let p = pyramid();
        let s = p.horizontal_section(0.25).unwrap();
        assert_eq!(s.len(), 4);
        for v in &s {
            assert_relative_eq!(v.x.abs(), 0.25, epsilon = 1e-15);
            assert_relative_eq!(v.y.abs(), 0.25, epsilon = 1e-15);
        }
        assert_eq!(p.horizontal_section(0.5).unwrap().len(), 4);
        assert!(p.horizontal_section(0.6).is_none());
        assert!(p.contains(&Vec3::new(0.0, 0.0, 0.25), true));
        assert!(!p.contains(&Vec3::zeros(), true));
        assert!(p.contains(&Vec3::zeros(), false));
        assert_relative_eq!(p.signed_distance(&Vec3::new(0.0, 0.0, 1.0)), 0.5, epsilon = 1e-15);
    }
}
