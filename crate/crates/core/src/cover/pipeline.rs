use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use super::delta::{cone_interval, cone_slice, delta_t_2d, delta_t_3d};
use super::lemma2::{lemma2_cover, WalkRecord};
use super::CoverError;
use crate::geom::{total_width, Body2, ConvexBody, Plank, Point, Polytope3};
use crate::spiky::{
    find_spiky_minimal_width_direction, interior_shift_direction, standardize, SpikyBody, TangentCone,
};
use crate::tol::Tolerances;

/// Maximum number of halvings of `t` and of the shift length.
pub const MAX_HALVINGS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    /// Planar bodies: two slice planks at the wedge boundary points.
    TwoPlank,
    /// Spatial bodies: boundary walk on the cone slice.
    Lemma2,
    /// Spatial bodies with a polyhedral tangent cone: one plank per cone facet.
    Polyhedral,
}

impl Strategy {
    pub fn name(&self) -> &'static str {
        match self {
            Strategy::TwoPlank => "two_plank",
            Strategy::Lemma2 => "lemma2",
            Strategy::Polyhedral => "polyhedral",
        }
    }
}

impl std::str::FromStr for Strategy {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "two_plank" | "two-plank" => Ok(Strategy::TwoPlank),
            "lemma2" => Ok(Strategy::Lemma2),
            "polyhedral" => Ok(Strategy::Polyhedral),
            _ => Err(format!("unknown strategy `{s}`")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoverParams {
    pub epsilon: f64,
    pub t: f64,
    pub delta_t: f64,
    /// Half-width used for the slice covering; equals `delta_t` except on the
    /// walk strategy, where a positive value is needed.
    pub delta_cover: f64,
    /// Strict upper bound that `delta_t` must respect at this `t`.
    pub bound: f64,
    /// Minimal width of the cone slice at `t`.
    pub slice_width: f64,
    pub kappa: f64,
    pub strategy: Strategy,
}

/// One evaluated candidate height during the search for `t`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TStep {
    pub t: f64,
    pub delta_t: f64,
    pub bound: f64,
    pub slice_width: f64,
}

/// Plank inside the slice hyperplane `{x_d = t}`, in its first `d − 1`
/// coordinates.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SlicePlank {
    pub normal: Vec<f64>,
    pub lo: f64,
    pub hi: f64,
}

impl SlicePlank {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoverTrace {
    /// Spiky direction and apex in the input frame.
    pub direction: Vec<f64>,
    pub apex: Vec<f64>,
    pub aperture: f64,
    /// Generators of the tangent cone at the apex, standard frame.
    pub cone_generators: Vec<Vec<f64>>,
    pub halvings: Vec<TStep>,
    pub cross_section: Vec<SlicePlank>,
    pub walk: Option<WalkRecord>,
    /// Perimeter of the cone slice at height 1 (walk strategy).
    pub cone_perimeter: f64,
    /// Planks in the standard frame before inflation, top plank last.
    pub standard_planks: Vec<SlicePlank>,
    pub kappa_geom: f64,
    pub shift_direction: Vec<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Budget {
    pub w: f64,
    pub total_width: f64,
    pub margin: f64,
}

impl Budget {
    pub fn new<const D: usize>(w: f64, planks: &[Plank<D>]) -> Self {
        let total_width = total_width(planks);
        Self {
            w,
            total_width,
            margin: w - total_width,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoverResult<const D: usize> {
    /// The covered set is `K \ int(εK + y)`.
    pub y: Point<D>,
    pub planks: Vec<Plank<D>>,
    pub params: CoverParams,
    pub trace: CoverTrace,
    pub budget: Budget,
}

/// Dimension-specific parts of the construction.
pub trait Coverable<const D: usize>: SpikyBody<D> + Clone {
    fn default_strategy(&self) -> Strategy;

    fn allows(strategy: Strategy) -> bool;

    /// `δ_t` for the cone at the origin and `inner = εK` in standard position.
    fn delta_t(cone: &TangentCone<D>, inner: &Self, t: f64) -> Result<f64, CoverError>;

    /// `(bound, slice minimal width)` at height `t`.
    fn slice_limits(cone: &TangentCone<D>, t: f64, strategy: Strategy) -> Result<(f64, f64), CoverError>;

    /// Vertices of the cone slice at `t`, first `d − 1` coordinates.
    fn slice_vertices(cone: &TangentCone<D>, t: f64) -> Result<Vec<Vec<f64>>, CoverError>;

    fn cross_section_planks(
        cone: &TangentCone<D>,
        params: &CoverParams,
    ) -> Result<(Vec<SlicePlank>, Option<WalkRecord>), CoverError>;
}

impl Coverable<2> for Body2 {
    fn default_strategy(&self) -> Strategy {
        Strategy::TwoPlank
    }

    fn allows(strategy: Strategy) -> bool {
        strategy == Strategy::TwoPlank
    }

    fn delta_t(cone: &TangentCone<2>, inner: &Self, t: f64) -> Result<f64, CoverError> {
        Ok(delta_t_2d(cone, inner, t)?)
    }

    fn slice_limits(cone: &TangentCone<2>, t: f64, _: Strategy) -> Result<(f64, f64), CoverError> {
        let (a, b) = cone_interval(cone, t)?;
        Ok((t / 2.0, b - a))
    }

    fn slice_vertices(cone: &TangentCone<2>, t: f64) -> Result<Vec<Vec<f64>>, CoverError> {
        let (a, b) = cone_interval(cone, t)?;
        Ok(vec![vec![a], vec![b]])
    }

    fn cross_section_planks(
        cone: &TangentCone<2>,
        params: &CoverParams,
    ) -> Result<(Vec<SlicePlank>, Option<WalkRecord>), CoverError> {
        let (a, b) = cone_interval(cone, params.t)?;
        let d = params.delta_cover;
        Ok((
            vec![
                SlicePlank { normal: vec![-1.0], lo: -a - d, hi: -a },
                SlicePlank { normal: vec![1.0], lo: b - d, hi: b },
            ],
            None,
        ))
    }
}

impl Coverable<3> for Polytope3 {
    fn default_strategy(&self) -> Strategy {
        Strategy::Polyhedral
    }

    fn allows(strategy: Strategy) -> bool {
        matches!(strategy, Strategy::Lemma2 | Strategy::Polyhedral)
    }

    fn delta_t(cone: &TangentCone<3>, inner: &Self, t: f64) -> Result<f64, CoverError> {
        Ok(delta_t_3d(cone, inner, t)?)
    }

    fn slice_limits(cone: &TangentCone<3>, t: f64, strategy: Strategy) -> Result<(f64, f64), CoverError> {
        let unit = cone_slice(cone, 1.0)?;
        let bound = match strategy {
            Strategy::Polyhedral => t / unit.len() as f64,
            _ => t / (8.0 * PI * unit.perimeter()),
        };
        Ok((bound, cone_slice(cone, t)?.minimal_width().0))
    }

    fn slice_vertices(cone: &TangentCone<3>, t: f64) -> Result<Vec<Vec<f64>>, CoverError> {
        Ok(cone_slice(cone, t)?.vertices().iter().map(|v| vec![v.x, v.y]).collect())
    }

    fn cross_section_planks(
        cone: &TangentCone<3>,
        params: &CoverParams,
    ) -> Result<(Vec<SlicePlank>, Option<WalkRecord>), CoverError> {
        let slice = cone_slice(cone, params.t)?;
        match params.strategy {
            Strategy::Polyhedral => Ok((
                slice
                    .edge_lines()
                    .into_iter()
                    .map(|(n, c)| SlicePlank { normal: vec![n.x, n.y], lo: c - params.delta_cover, hi: c })
                    .collect(),
                None,
            )),
            _ => {
                let body = Body2::polygon(slice.vertices())?;
                let (planks, walk) = lemma2_cover(&body, params.delta_cover)?;
                let planks = planks
                    .into_iter()
                    .map(|p| SlicePlank { normal: vec![p.normal.x, p.normal.y], lo: p.lo, hi: p.hi })
                    .collect();
                Ok((planks, Some(walk)))
            }
        }
    }
}

/// Walk-strategy half-width when `δ_t` vanishes: any value in
/// `[δ_t, t/(8πρ))` covers the slice annulus, and a larger one means fewer
/// planks.
fn walk_delta(cone_perimeter: f64, t: f64, delta_t: f64) -> f64 {
    delta_t.max(t / (16.0 * PI * cone_perimeter))
}

/// Halve `t` from 1/2 until `δ_t < safety · bound(t)` and `δ_t` is below the
/// slice's minimal width.
pub fn choose_t<const D: usize, B: Coverable<D>>(
    standard: &B,
    cone: &TangentCone<D>,
    epsilon: f64,
    strategy: Strategy,
    tol: &Tolerances,
) -> Result<(CoverParams, Vec<TStep>), CoverError> {
    if !B::allows(strategy) {
        return Err(CoverError::StrategyMismatch(strategy, D));
    }
    let inner = standard.scaled_translated(epsilon, &Point::<D>::zeros());
    let mut steps = Vec::new();
    let mut t = 0.5;
    for _ in 0..MAX_HALVINGS {
        let delta_t = B::delta_t(cone, &inner, t)?;
        let (bound, slice_width) = B::slice_limits(cone, t, strategy)?;
        steps.push(TStep { t, delta_t, bound, slice_width });
        if delta_t < tol.safety * bound && delta_t < slice_width {
            let delta_cover = match strategy {
                Strategy::Lemma2 => {
                    let rho = t / (8.0 * PI * bound);
                    walk_delta(rho, t, delta_t)
                }
                _ => delta_t,
            };
            if delta_cover >= slice_width {
                return Err(CoverError::Degenerate(format!("slice width {slice_width} at t = {t}")));
            }
            let params = CoverParams {
                epsilon,
                t,
                delta_t,
                delta_cover,
                bound,
                slice_width,
                kappa: 0.0,
                strategy,
            };
            return Ok((params, steps));
        }
        t *= 0.5;
    }
    Err(CoverError::IterationCap(MAX_HALVINGS))
}

/// Lift a slice plank at height `t` to the plank bounded by the hyperplane
/// through its outer flat and the origin. The outer flat must support the
/// slice and the lifted outer hyperplane must support the cone.
pub fn lift_plank<const D: usize>(
    plank: &SlicePlank,
    t: f64,
    cone: &TangentCone<D>,
    slice_vertices: &[Vec<f64>],
    tol: f64,
) -> Result<Plank<D>, CoverError> {
    if plank.normal.len() != D - 1 || !(t > 0.0) {
        return Err(CoverError::Degenerate("slice plank has the wrong dimension".into()));
    }
    let dot = |v: &[f64]| v.iter().zip(&plank.normal).map(|(a, b)| a * b).sum::<f64>();
    let scale = slice_vertices.iter().flatten().fold(1.0f64, |m, x| m.max(x.abs()));
    if slice_vertices.iter().any(|v| dot(v) > plank.hi + tol * scale) {
        return Err(CoverError::Degenerate("slice plank does not support the slice".into()));
    }
    let mut n = Point::<D>::zeros();
    for (k, c) in plank.normal.iter().enumerate() {
        n[k] = *c;
    }
    n[D - 1] = -plank.hi / t;
    let len = n.norm();
    let n = n / len;
    if cone.generators.iter().any(|g| g.dot(&n) > tol) {
        return Err(CoverError::Degenerate("lifted hyperplane does not support the cone".into()));
    }
    Ok(Plank { normal: n, lo: (plank.lo - plank.hi) / len, hi: 0.0 })
}

/// Largest `κ = s / 2^k` (at most `k = 64`) with `εK + κv ⊂ int K`, checked on
/// the inner body's containment witnesses.
pub fn geometric_shift_limit<const D: usize, B: ConvexBody<D>>(
    standard: &B,
    epsilon: f64,
    v: &Point<D>,
    start: f64,
) -> Result<f64, CoverError> {
    let mut kappa = start;
    for _ in 0..MAX_HALVINGS {
        let inner = standard.scaled_translated(epsilon, &(v * kappa));
        let inside = inner
            .containment_witnesses()
            .iter()
            .all(|p| standard.signed_distance(p) < -crate::tol::MEMBERSHIP);
        if inside {
            return Ok(kappa);
        }
        kappa *= 0.5;
    }
    Err(CoverError::Degenerate("no strictly interior shift found".into()))
}

fn slice_plank_of<const D: usize>(p: &Plank<D>) -> SlicePlank {
    SlicePlank { normal: p.normal.iter().copied().collect(), lo: p.lo, hi: p.hi }
}

/// Full construction: find a spiky minimal-width direction, standardize,
/// cover the cross-section, lift, add the top plank, inflate and shift, and
/// map back. `strategy = None` picks the dimension's default.
pub fn spiky_annulus_cover<const D: usize, B: Coverable<D>>(
    body: &B,
    epsilon: f64,
    strategy: Option<Strategy>,
    tol: &Tolerances,
) -> Result<CoverResult<D>, CoverError> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(CoverError::EpsilonOutOfRange(epsilon));
    }
    let strategy = strategy.unwrap_or_else(|| body.default_strategy());
    if !B::allows(strategy) {
        return Err(CoverError::StrategyMismatch(strategy, D));
    }
    let witness = find_spiky_minimal_width_direction(body, tol.geom).ok_or(CoverError::NotSpiky)?;
    let st = standardize(body, &witness, tol.geom)?;
    let origin = Point::<D>::zeros();
    let cone = st.body.tangent_cone(&origin)?;
    let (mut params, halvings) = choose_t(&st.body, &cone, epsilon, strategy, tol)?;
    let (slice, walk) = B::cross_section_planks(&cone, &params)?;
    let verts = B::slice_vertices(&cone, params.t)?;
    let mut planks: Vec<Plank<D>> = slice
        .iter()
        .map(|p| lift_plank(p, params.t, &cone, &verts, tol.geom))
        .collect::<Result<_, _>>()?;
    let mut up = Point::<D>::zeros();
    up[D - 1] = 1.0;
    planks.push(Plank { normal: up, lo: params.t, hi: st.body.support(&up) });
    let standard_planks: Vec<SlicePlank> = planks.iter().map(slice_plank_of).collect();

    let slack = st.body.minimal_width().0 - total_width(&planks);
    if !(slack > 0.0) {
        return Err(CoverError::Degenerate(format!("no width left before inflation ({slack:e})")));
    }
    let v = interior_shift_direction(&cone, tol.geom)?;
    let kappa_geom = geometric_shift_limit(&st.body, epsilon, v.as_vec(), slack)?;
    let kappa = (slack / (4.0 * planks.len() as f64)).min(kappa_geom);
    params.kappa = kappa;

    let w = st.width;
    let planks: Vec<Plank<D>> = planks
        .iter()
        .map(|p| {
            let q = p.inflate(kappa);
            let n = st.inverse_dir(&q.normal);
            let off = st.apex.dot(&n);
            Plank { normal: n, lo: q.lo * w + off, hi: q.hi * w + off }
        })
        .collect();
    let y = st.apex * (1.0 - epsilon) + st.inverse_dir(&(v.as_vec() * kappa)) * w;
    let budget = Budget::new(w, &planks);
    let cone_perimeter = match strategy {
        Strategy::Lemma2 => params.t / (8.0 * PI * params.bound),
        _ => 0.0,
    };
    let trace = CoverTrace {
        direction: witness.direction.iter().copied().collect(),
        apex: witness.apex.iter().copied().collect(),
        aperture: witness.aperture,
        cone_generators: cone.generators.iter().map(|g| g.iter().copied().collect()).collect(),
        halvings,
        cross_section: slice,
        walk,
        cone_perimeter,
        standard_planks,
        kappa_geom,
        shift_direction: v.iter().copied().collect(),
    };
    Ok(CoverResult { y, planks, params, trace, budget })
}

/// Convenience for planar bodies.
pub fn cover_planar(body: &Body2, epsilon: f64) -> Result<CoverResult<2>, CoverError> {
    spiky_annulus_cover(body, epsilon, None, &Tolerances::default())
}

/// Convenience for polytopes.
pub fn cover_polytope(body: &Polytope3, epsilon: f64, strategy: Strategy) -> Result<CoverResult<3>, CoverError> {
    spiky_annulus_cover(body, epsilon, Some(strategy), &Tolerances::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{Vec2, Vec3};
    use crate::spiky::standardize;

    fn triangle() -> Body2 {
        let h = 3f64.sqrt() / 2.0;
        Body2::polygon(&[Vec2::new(0.0, 0.0), Vec2::new(1.0, 0.0), Vec2::new(0.5, h)]).unwrap()
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

    fn standard<const D: usize, B: Coverable<D>>(body: &B) -> (B, TangentCone<D>) {
        let w = find_spiky_minimal_width_direction(body, 1e-9).unwrap();
        let st = standardize(body, &w, 1e-9).unwrap();
        let cone = st.body.tangent_cone(&Point::<D>::zeros()).unwrap();
        (st.body, cone)
    }

    #[test]
    fn choose_t_examples() {
        let tol = Tolerances::default();
        let (k, cone) = standard(&triangle());
        let (p, _) = choose_t(&k, &cone, 0.5, Strategy::TwoPlank, &tol).unwrap();
        assert!(p.delta_t < p.t / 2.0);
        let (k, cone) = standard(&Body2::reuleaux(1.0).unwrap());
        let (p, steps) = choose_t(&k, &cone, 0.9, Strategy::TwoPlank, &tol).unwrap();
        assert!(p.t <= 0.5 && p.delta_t > 0.0 && p.delta_t < p.t / 2.0);
        assert!(steps.iter().take(steps.len() - 1).all(|s| s.delta_t >= 0.99 * s.bound || s.delta_t >= s.slice_width));
        let (k, cone) = standard(&pyramid());
        let (p, _) = choose_t(&k, &cone, 0.5, Strategy::Polyhedral, &tol).unwrap();
        assert!(p.delta_t < p.t / 4.0);
        assert!(matches!(
            choose_t(&k, &cone, 0.5, Strategy::TwoPlank, &tol),
            Err(CoverError::StrategyMismatch(Strategy::TwoPlank, 3))
        ));
    }

    #[test]
    fn cross_sections() {
        let tol = Tolerances::default();
        let (k, cone) = standard(&triangle());
        let (p, _) = choose_t(&k, &cone, 0.5, Strategy::TwoPlank, &tol).unwrap();
        let (planks, walk) = Body2::cross_section_planks(&cone, &p).unwrap();
        assert_eq!(planks.len(), 2);
        assert!(walk.is_none() && planks.iter().all(|q| q.width() < 1e-12));
        let (k, cone) = standard(&pyramid());
        let (p, _) = choose_t(&k, &cone, 0.5, Strategy::Polyhedral, &tol).unwrap();
        let (planks, _) = Polytope3::cross_section_planks(&cone, &p).unwrap();
        assert_eq!(planks.len(), 4);
        assert!(planks.iter().all(|q| q.width() < 1e-12));
        let (k, cone) = standard(&Body2::reuleaux(1.0).unwrap());
        let (p, _) = choose_t(&k, &cone, 0.9, Strategy::TwoPlank, &tol).unwrap();
        let (planks, _) = Body2::cross_section_planks(&cone, &p).unwrap();
        assert!(planks.iter().all(|q| (q.width() - p.delta_t).abs() < 1e-15));
        assert!(2.0 * p.delta_t < p.t);
    }

    #[test]
    fn lifting_supports_the_cone_and_keeps_width() {
        let (_, cone) = standard(&Body2::reuleaux(1.0).unwrap());
        let t = 0.125;
        let (a, b) = cone_interval(&cone, t).unwrap();
        let verts = vec![vec![a], vec![b]];
        let p = SlicePlank { normal: vec![1.0], lo: b - 0.01, hi: b };
        let lifted: Plank<2> = lift_plank(&p, t, &cone, &verts, 1e-9).unwrap();
        assert!(lifted.width() <= p.width() + 1e-12);
        assert!(cone.generators.iter().all(|g| g.dot(&lifted.normal) <= 1e-9));
        assert!(lifted.contains(&Vec2::new(b, t), 1e-12) && lifted.contains(&Vec2::new(b - 0.01, t), 1e-12));
        let inside = SlicePlank { normal: vec![1.0], lo: 0.0, hi: 0.5 * b };
        assert!(matches!(lift_plank::<2>(&inside, t, &cone, &verts, 1e-9), Err(CoverError::Degenerate(_))));
        let outside = SlicePlank { normal: vec![-1.0], lo: -2.0, hi: -0.5 * b };
        assert!(matches!(lift_plank::<2>(&outside, t, &cone, &verts, 1e-9), Err(CoverError::Degenerate(_))));
    }

    #[test]
    fn end_to_end_budgets() {
        for eps in [0.1, 0.5, 0.9] {
            for body in [triangle(), Body2::reuleaux(1.0).unwrap()] {
                let r = cover_planar(&body, eps).unwrap();
                assert!(r.budget.margin > 0.0);
                assert!(r.params.kappa > 0.0);
                let inner = body.scaled_translated(eps, &r.y);
                assert!(inner.containment_witnesses().iter().all(|p| body.signed_distance(p) < 0.0));
            }
        }
        for s in [Strategy::Polyhedral, Strategy::Lemma2] {
            let r = cover_polytope(&pyramid(), 0.5, s).unwrap();
            assert!(r.budget.margin > 0.0);
            let cs: f64 = r.trace.cross_section.iter().map(|p| p.width()).sum();
            assert!(cs < r.params.t);
            assert_eq!(r.trace.walk.is_some(), s == Strategy::Lemma2);
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let square = Body2::polygon(&[
            Vec2::new(0.0, 0.0),
            Vec2::new(1.0, 0.0),
            Vec2::new(1.0, 1.0),
            Vec2::new(0.0, 1.0),
        ])
        .unwrap();
        assert_eq!(cover_planar(&square, 0.5), Err(CoverError::NotSpiky));
        assert_eq!(cover_planar(&triangle(), 1.0), Err(CoverError::EpsilonOutOfRange(1.0)));
        assert!(matches!(
            spiky_annulus_cover(&triangle(), 0.5, Some(Strategy::Lemma2), &Tolerances::default()),
            Err(CoverError::StrategyMismatch(..))
        ));
    }
}
