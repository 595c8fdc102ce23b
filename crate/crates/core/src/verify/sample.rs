//! Deterministic quasi-random samples of annuli and metric annuli.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::geom::{Body2, ConvexBody, Point, Polytope3, Vec2, Vec3};
use crate::par::{self, Execution};

const BASES: [u8; 3] = [2, 3, 5];
/// Candidate budget per requested interior sample before giving up.
const REJECTION_CAP: usize = 400;
const BATCH: usize = 8192;

/// Sample counts for certification. Offsets are multiples of the minimal
/// width; each offset is applied inward from `∂K` and outward from the inner
/// body's boundary.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SamplePlan {
    pub interior: usize,
    pub boundary_per_offset: usize,
    pub offsets: Vec<f64>,
    pub seed: u64,
    #[serde(skip)]
    pub execution: Execution,
}

impl Default for SamplePlan {
    fn default() -> Self {
        Self::with_total(100_000, 0)
    }
}

impl SamplePlan {
    /// 40% interior points, the rest split evenly over three offsets and two
    /// boundaries.
    pub fn with_total(total: usize, seed: u64) -> Self {
        Self {
            interior: total * 2 / 5,
            boundary_per_offset: total / 10,
            offsets: vec![0.0, 1e-6, 1e-3],
            seed,
            execution: Execution::default(),
        }
    }

    pub fn total(&self) -> usize {
        self.interior + 2 * self.offsets.len() * self.boundary_per_offset
    }
}

/// Boundary parametrization by the unit cube.
pub trait Sampleable<const D: usize>: ConvexBody<D> + Sync + Sized {
    /// Boundary points with outward unit normals for parameters in `[0,1)^3`.
    fn boundary_points(&self, params: &[[f64; 3]]) -> Vec<(Point<D>, Point<D>)>;
}

impl Sampleable<2> for Body2 {
    fn boundary_points(&self, params: &[[f64; 3]]) -> Vec<(Vec2, Vec2)> {
        let rho = self.perimeter();
        params
            .iter()
            .map(|u| {
                let s = u[0] * rho;
                let th = self.forward_normal_angle(s);
                (self.point_at(s), Vec2::new(th.cos(), th.sin()))
            })
            .collect()
    }
}

impl Sampleable<3> for Polytope3 {
    fn boundary_points(&self, params: &[[f64; 3]]) -> Vec<(Vec3, Vec3)> {
        let tris = self.triangles();
        let mut cum = Vec::with_capacity(tris.len());
        let mut acc = 0.0;
        for [a, b, c] in &tris {
            acc += (b - a).cross(&(c - a)).norm();
            cum.push(acc);
        }
        params
            .iter()
            .map(|u| {
                let target = u[0] * acc;
                let k = cum.partition_point(|&c| c <= target).min(tris.len() - 1);
                let [a, b, c] = tris[k];
                let r = u[1].sqrt();
                let p = a * (1.0 - r) + b * (r * (1.0 - u[2])) + c * (r * u[2]);
                (p, (b - a).cross(&(c - a)).normalize())
            })
            .collect()
    }
}

fn shift(seed: u64, stream: u64) -> [f64; 3] {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    [rng.random(), rng.random(), rng.random()]
}

/// Halton point `index` (from 1) with a Cranley–Patterson rotation.
fn halton(index: usize, rot: &[f64; 3]) -> [f64; 3] {
    let mut u = [0.0; 3];
    for k in 0..3 {
        u[k] = (halton::number(BASES[k], index) + rot[k]).fract();
    }
    u
}

fn box_point<const D: usize>(lo: &Point<D>, hi: &Point<D>, u: &[f64; 3]) -> Point<D> {
    let mut x = *lo;
    for k in 0..D {
        x[k] += (hi[k] - lo[k]) * u[k];
    }
    x
}

/// First `count` quasi-random points of the bounding box accepted by `keep`,
/// in sequence order.
pub fn rejection_samples<const D: usize, B, F>(
    body: &B,
    count: usize,
    seed: u64,
    stream: u64,
    exec: Execution,
    keep: F,
) -> Vec<Point<D>>
where
    B: ConvexBody<D>,
    F: Fn(&Point<D>) -> bool + Sync + Send,
{
    let (lo, hi) = body.bounds();
    let rot = shift(seed, stream);
    let mut out = Vec::with_capacity(count);
    let mut next = 1usize;
    while out.len() < count && next <= count.saturating_mul(REJECTION_CAP).max(BATCH) {
        let idx: Vec<usize> = (next..next + BATCH).collect();
        next += BATCH;
        let got = par::map(exec, &idx, |&i| {
            let x = box_point(&lo, &hi, &halton(i, &rot));
            keep(&x).then_some(x)
        });
        out.extend(got.into_iter().flatten().take(count - out.len()));
    }
    out
}

/// `count` boundary points of `body` displaced by `offset` along the outward
/// normal (negative means inward) and accepted by `keep`, continuing the
/// sequence past rejected points.
pub fn boundary_samples<const D: usize, B, F>(
    body: &B,
    count: usize,
    offset: f64,
    seed: u64,
    stream: u64,
    keep: F,
) -> Vec<Point<D>>
where
    B: Sampleable<D>,
    F: Fn(&Point<D>) -> bool,
{
    let rot = shift(seed, stream);
    let mut out = Vec::with_capacity(count);
    let mut next = 1usize;
    while out.len() < count && next <= 4 * count + BATCH {
        let want = (count - out.len()).max(64);
        let params: Vec<[f64; 3]> = (next..next + want).map(|i| halton(i, &rot)).collect();
        next += want;
        let got = body.boundary_points(&params).into_iter().map(|(p, n)| p + n * offset).filter(|x| keep(x));
        out.extend(got.take(count - out.len()));
    }
    out
}

/// Points of `K \ int(inner)`: quasi-random interior points plus the offset
/// ladder along both boundaries.
pub fn annulus_samples<const D: usize, B: Sampleable<D>>(body: &B, inner: &B, w: f64, plan: &SamplePlan) -> Vec<Point<D>> {
    let tol = crate::tol::MEMBERSHIP;
    let in_annulus = |x: &Point<D>| body.signed_distance(x) <= tol && inner.signed_distance(x) >= -tol;
    let mut pts = rejection_samples(body, plan.interior, plan.seed, 0, plan.execution, in_annulus);
    for (k, &o) in plan.offsets.iter().enumerate() {
        let k = k as u64;
        pts.extend(boundary_samples(body, plan.boundary_per_offset, -o * w, plan.seed, 1 + 2 * k, in_annulus));
        pts.extend(boundary_samples(inner, plan.boundary_per_offset, o * w, plan.seed, 2 + 2 * k, in_annulus));
    }
    pts
}

/// Points of the metric annulus `K^δ`: half from boundary points pushed
/// inward by a quasi-random fraction of `δ`, half by rejection.
pub fn metric_annulus_samples<const D: usize, B: Sampleable<D>>(
    body: &B,
    delta: f64,
    count: usize,
    seed: u64,
    exec: Execution,
) -> Vec<Point<D>> {
    let rot = shift(seed, 100);
    let half = count / 2;
    let params: Vec<[f64; 3]> = (1..=half).map(|i| halton(i, &rot)).collect();
    let depths: Vec<f64> = (1..=half).map(|i| (halton::number(7, i) + rot[0]).fract() * delta).collect();
    let mut pts: Vec<Point<D>> = body
        .boundary_points(&params)
        .into_iter()
        .zip(depths)
        .map(|((p, n), r)| p - n * r)
        .filter(|x| body.signed_distance(x) <= 0.0)
        .collect();
    let rest = count - pts.len();
    pts.extend(rejection_samples(body, rest, seed, 101, exec, |x| {
        let d = body.signed_distance(x);
        d <= 0.0 && d >= -delta
    }));
    pts
}
