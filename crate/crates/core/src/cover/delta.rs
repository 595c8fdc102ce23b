//! Hausdorff deviation `δ_t` between the cone slice boundary and the annulus
//! slice, in standard position.

use crate::geom::{hausdorff_distance, Body2, ConvexPolygon, GeomError, Polytope3, Shape2, Vec2};
use crate::spiky::TangentCone;

/// `T_K ∩ {y = t}` for a planar cone with apex at the origin, as `(left, right)`.
pub fn cone_interval(cone: &TangentCone<2>, t: f64) -> Result<(f64, f64), GeomError> {
    let xs: Vec<f64> = cone
        .generators
        .iter()
        .map(|g| {
            if g.y > 0.0 {
                Ok(t * g.x / g.y)
            } else {
                Err(GeomError::InvalidBody("cone generator does not point up".into()))
            }
        })
        .collect::<Result<_, _>>()?;
    Ok((xs[0].min(xs[1]), xs[0].max(xs[1])))
}

/// `T_K ∩ {z = t}` for a cone with apex at the origin, as a polygon in `(x, y)`.
pub fn cone_slice(cone: &TangentCone<3>, t: f64) -> Result<ConvexPolygon, GeomError> {
    let mut pts = Vec::with_capacity(cone.generators.len());
    for g in &cone.generators {
        if g.z <= 0.0 {
            return Err(GeomError::InvalidBody("cone generator does not point up".into()));
        }
        pts.push(Vec2::new(g.x, g.y) * (t / g.z));
    }
    ConvexPolygon::hull(&pts).ok_or(GeomError::EmptySlice(t))
}

fn segment(a: Vec2, b: Vec2) -> Shape2 {
    if a == b {
        Shape2::Point(a)
    } else {
        Shape2::Segment(a, b)
    }
}

/// Planar `δ_t`: the cone slice boundary is two points and the annulus slice
/// is one or two segments of the line `{y = t}`.
pub fn delta_t_2d(cone: &TangentCone<2>, inner: &Body2, t: f64) -> Result<f64, GeomError> {
    let (a, b) = cone_interval(cone, t)?;
    let at = |x: f64| Vec2::new(x, t);
    let boundary = [Shape2::Point(at(a)), Shape2::Point(at(b))];
    let annulus = match inner.chord(&Vec2::new(0.0, 1.0), t) {
        Some((p, q)) => {
            let (c, d) = (p.x.min(q.x).max(a), p.x.max(q.x).min(b));
            vec![segment(at(a), at(c)), segment(at(d), at(b))]
        }
        None => vec![segment(at(a), at(b))],
    };
    hausdorff_distance(&boundary, &annulus)
}

/// `x ↦ min_j (hi_j − <n_j, x>)`: distance to the polygon boundary from inside.
fn depth(lines: &[(Vec2, f64)], x: &Vec2) -> f64 {
    lines.iter().map(|(n, c)| c - n.dot(x)).fold(f64::INFINITY, f64::min)
}

/// A maximizer of [`depth`] over the polygon (Chebyshev center), by
/// enumerating points equidistant from three edge lines.
fn deepest_point(poly: &ConvexPolygon) -> (Vec2, f64) {
    let lines = poly.edge_lines();
    let m = lines.len();
    let mut best = (poly.vertices()[0], 0.0);
    for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                // (n_l · x) + r = c_l for l ∈ {i, j, k}.
                let sys = nalgebra::Matrix3::new(
                    lines[i].0.x, lines[i].0.y, 1.0,
                    lines[j].0.x, lines[j].0.y, 1.0,
                    lines[k].0.x, lines[k].0.y, 1.0,
                );
                let rhs = nalgebra::Vector3::new(lines[i].1, lines[j].1, lines[k].1);
                if let Some(sol) = sys.lu().solve(&rhs) {
                    let x = Vec2::new(sol.x, sol.y);
                    let r = depth(&lines, &x);
                    if r > best.1 {
                        best = (x, r);
                    }
                }
            }
        }
    }
    best
}

/// Max of [`depth`] along a segment: endpoints and pairwise breakpoints.
fn max_depth_on_segment(lines: &[(Vec2, f64)], u: &Vec2, v: &Vec2) -> f64 {
    let mut best = depth(lines, u).max(depth(lines, v));
    let d = v - u;
    for (i, (ni, ci)) in lines.iter().enumerate() {
        for (nj, cj) in &lines[i + 1..] {
            // ci - ni·(u + λd) = cj - nj·(u + λd)
            let den = (ni - nj).dot(&d);
            if den.abs() < 1e-300 {
                continue;
            }
            let lam = (ci - cj - (ni - nj).dot(u)) / den;
            if (0.0..=1.0).contains(&lam) {
                best = best.max(depth(lines, &(u + d * lam)));
            }
        }
    }
    best
}

/// Spatial `δ_t` for a polytope in standard position; `inner` is `εK`.
pub fn delta_t_3d(cone: &TangentCone<3>, inner: &Polytope3, t: f64) -> Result<f64, GeomError> {
    let slice = cone_slice(cone, t)?;
    let lines = slice.edge_lines();
    let (center, top) = deepest_point(&slice);
    let Some(section) = inner.horizontal_section(t).and_then(|v| ConvexPolygon::hull(&v)) else {
        return Ok(top);
    };
    let mut best = section
        .edges()
        .map(|(u, v)| max_depth_on_segment(&lines, &u, &v))
        .fold(0.0, f64::max);
    if section.signed_distance(&center) >= -crate::tol::MEMBERSHIP {
        best = best.max(top);
    }
    Ok(best.max(0.0))
}

/// Lower estimate of [`delta_t_3d`] from `n` quasi-random points of the cone
/// slice outside `int εK`; used as a cross-check.
pub fn delta_t_3d_sampled(cone: &TangentCone<3>, inner: &Polytope3, t: f64, n: usize) -> Result<f64, GeomError> {
    let slice = cone_slice(cone, t)?;
    let lines = slice.edge_lines();
    let section = inner.horizontal_section(t).and_then(|v| ConvexPolygon::hull(&v));
    let verts = slice.vertices();
    let (lo, hi) = verts.iter().fold((verts[0], verts[0]), |(lo, hi), v| (lo.inf(v), hi.sup(v)));
    let mut best: f64 = 0.0;
    let mut probe = |x: Vec2| {
        let d = depth(&lines, &x);
        let outside = section.as_ref().is_none_or(|s| s.signed_distance(&x) >= 0.0);
        if d >= 0.0 && outside {
            best = best.max(d);
        }
    };
    for i in 1..=n {
        let u = Vec2::new(halton::number(2, i), halton::number(3, i));
        probe(lo + (hi - lo).component_mul(&u));
    }
    if let Some(s) = &section {
        for (u, v) in s.edges() {
            for k in 0..=16 {
                probe(u + (v - u) * (k as f64 / 16.0));
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{ConvexBody, Vec3};
    use crate::spiky::{find_spiky_minimal_width_direction, standardize, SpikyBody};

    fn standard_2d(body: &Body2) -> (Body2, TangentCone<2>) {
        let w = find_spiky_minimal_width_direction(body, 1e-9).unwrap();
        let st = standardize(body, &w, 1e-9).unwrap();
        let cone = st.body.tangent_cone(&Vec2::zeros()).unwrap();
        (st.body, cone)
    }

    /// Grid sup of the distance to `{a, b}` over annulus points of the slice.
    fn dense_delta(cone: &TangentCone<2>, inner: &Body2, t: f64) -> f64 {
        let (a, b) = cone_interval(cone, t).unwrap();
        let m = 200_000;
        (0..=m)
            .map(|k| a + (b - a) * k as f64 / m as f64)
            .filter(|&x| inner.signed_distance(&Vec2::new(x, t)) >= 0.0)
            .map(|x| (x - a).min(b - x))
            .fold(0.0, f64::max)
    }

    #[test]
    fn triangle_slices_coincide() {
        let h = 3f64.sqrt() / 2.0;
        let tri = Body2::polygon(&[Vec2::new(0.0, 0.0), Vec2::new(1.0, 0.0), Vec2::new(0.5, h)]).unwrap();
        let (k, cone) = standard_2d(&tri);
        for eps in [0.1, 0.5, 0.9] {
            let inner = k.scaled_translated(eps, &Vec2::zeros());
            for t in [0.01, 0.05 * eps, 0.5 * eps] {
                assert!(delta_t_2d(&cone, &inner, t).unwrap() < 1e-12);
            }
        }
    }

    #[test]
    fn reuleaux_matches_dense_oracle_and_decays_quadratically() {
        let (k, cone) = standard_2d(&Body2::reuleaux(1.0).unwrap());
        let inner = k.scaled_translated(0.9, &Vec2::zeros());
        let ts: Vec<f64> = (3..=8).map(|e| 0.5f64.powi(e)).collect();
        let ds: Vec<f64> = ts.iter().map(|&t| delta_t_2d(&cone, &inner, t).unwrap()).collect();
        for (&t, &d) in ts.iter().zip(&ds) {
            assert!(d > 0.0);
            let oracle = dense_delta(&cone, &inner, t);
            let (a, b) = cone_interval(&cone, t).unwrap();
            assert!((d - oracle).abs() <= 2.0 * (b - a) / 200_000.0, "t={t} exact={d} oracle={oracle}");
        }
        // The inner arc has radius ε and leaves the apex at 30° above the
        // horizontal, so δ_t/t² rises towards 1/(2ε sin³30°).
        let limit = 1.0 / (2.0 * 0.9 * 0.125);
        let ratios: Vec<f64> = ts.iter().zip(&ds).map(|(t, d)| d / (t * t)).collect();
        assert!(ratios.windows(2).all(|r| r[0] <= r[1]), "{ratios:?}");
        assert!(ratios.iter().all(|&r| r < limit), "{ratios:?}");
        assert!(limit - ratios[ratios.len() - 1] < 0.05 * limit, "{ratios:?}");
    }

    fn pyramid() -> Polytope3 {
        Polytope3::hull(&[
            Vec3::zeros(),
            Vec3::new(0.5, 0.5, 0.5),
            Vec3::new(-0.5, 0.5, 0.5),
            Vec3::new(0.5, -0.5, 0.5),
            Vec3::new(-0.5, -0.5, 0.5),
        ])
        .unwrap()
    }

    #[test]
    fn pyramid_slices_coincide() {
        let p = pyramid();
        let cone = p.tangent_cone(&Vec3::zeros()).unwrap();
        let inner = p.scaled_translated(0.5, &Vec3::zeros());
        assert!(delta_t_3d(&cone, &inner, 0.1).unwrap() < 1e-12);
        // Above the inner body the whole slice is annulus: the inradius.
        assert!((delta_t_3d(&cone, &inner, 0.4).unwrap() - 0.4).abs() < 1e-12);
    }

    #[test]
    fn capped_pyramid_matches_sampling() {
        let mut pts = vec![Vec3::zeros()];
        for (x, y) in [(1.0, 1.0), (-1.0, 1.0), (1.0, -1.0), (-1.0, -1.0)] {
            pts.push(Vec3::new(0.5 * x, 0.5 * y, 0.5));
            pts.push(Vec3::new(0.3 * x, 0.2 * y, 0.7));
        }
        let k = Polytope3::hull(&pts).unwrap();
        let cone = k.tangent_cone(&Vec3::zeros()).unwrap();
        let inner = k.scaled_translated(0.5, &Vec3::zeros());
        for t in [0.26, 0.3, 0.33] {
            let exact = delta_t_3d(&cone, &inner, t).unwrap();
            let sampled = delta_t_3d_sampled(&cone, &inner, t, 1000).unwrap();
            assert!(exact > 0.0);
            assert!(sampled <= exact + 1e-12, "t={t} exact={exact} sampled={sampled}");
            assert!(exact - sampled < 0.02 * t, "t={t} exact={exact} sampled={sampled}");
        }
    }
}
