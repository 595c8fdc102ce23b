//! Boundary walk covering the metric annulus of a planar convex body.

use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

use super::CoverError;
use crate::geom::{Body2, ConvexBody, Direction, Hyperplane, Plank, Vec2};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Termination {
    /// `p₁ ∉ P_n`: the last line is the supporting line at `p_{n+1}`.
    FirstOutside,
    /// `p₁ ∈ P_n`: `p_{n+1}` and `ℓ_{n+1}` are redefined as `p₁` and `ℓ₁`.
    Redefined,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WalkStep {
    pub p: Vec2,
    /// Arc length of `p` along the boundary, unwrapped and increasing.
    pub s: f64,
    /// Supporting line at `p`, outward normal.
    pub line: Hyperplane<2>,
    /// `line` moved `δ` into the body.
    pub shifted: Hyperplane<2>,
    /// Turn of the outward normal from this line to the next one.
    pub alpha: f64,
    /// Arc length from `p` to the next walk point.
    pub arc: f64,
    /// Arc length where the strip between `line` and `shifted` starts, walking
    /// backwards from `p`.
    pub back: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WalkRecord {
    pub delta: f64,
    pub perimeter: f64,
    pub steps: Vec<WalkStep>,
    /// `p_{n+1}` and `ℓ_{n+1}` after termination handling.
    pub end: Vec2,
    pub end_line: Hyperplane<2>,
    pub termination: Termination,
    pub n: usize,
}

impl WalkRecord {
    /// `√(2πρ/δ)`.
    pub fn count_bound(&self) -> f64 {
        (TAU * self.perimeter / self.delta).sqrt()
    }
}

fn unit(theta: f64) -> Vec2 {
    Vec2::new(theta.cos(), theta.sin())
}

fn line(theta: f64, offset: f64) -> Hyperplane<2> {
    Hyperplane {
        normal: Direction::from_angle(theta),
        offset,
    }
}

/// Planks of width `2δ` covering `K^δ`, following the boundary walk from the
/// lowest point (lexicographically first on a flat bottom).
pub fn lemma2_cover(body: &Body2, delta: f64) -> Result<(Vec<Plank<2>>, WalkRecord), CoverError> {
    let (w, _) = body.minimal_width();
    if !(delta > 0.0 && delta < w) {
        return Err(CoverError::DeltaOutOfRange { delta, width: w });
    }
    let rho = body.perimeter();
    let tol = 1e-12 * rho.max(1.0);
    let s1 = body.support_param(&Vec2::new(0.0, -1.0));
    let max_steps = (rho / delta).ceil() as usize + 4;

    // (s, θ, h, back) per plank.
    let mut raw: Vec<(f64, f64, f64, f64)> = Vec::new();
    let mut s = s1;
    let mut min_back = f64::INFINITY;
    let next = loop {
        let theta = body.forward_normal_angle(s);
        let n = unit(theta);
        let h = body.point_at(s).dot(&n);
        let level = h - delta;
        let d = body
            .descent_crossing(s, &n, level, false)
            .ok_or_else(|| CoverError::Degenerate(format!("walk stalled at arc length {s}")))?;
        let next = body.skip_flat(s + d, &n, level, tol);
        let back = s - body.descent_crossing(s, &n, level, true).unwrap_or(rho);
        min_back = min_back.min(back);
        raw.push((s, theta, h, back));
        if next >= s1 + rho - tol || min_back + rho <= next + tol {
            break next;
        }
        if raw.len() > max_steps {
            return Err(CoverError::Degenerate("walk did not close".into()));
        }
        s = next;
    };

    let n = raw.len();
    let p1 = body.point_at(s1);
    let (_, theta_n, h_n, _) = raw[n - 1];
    let termination = if p1.dot(&unit(theta_n)) >= h_n - delta - tol {
        Termination::Redefined
    } else {
        Termination::FirstOutside
    };
    let (end_s, end_theta) = match termination {
        Termination::Redefined => (s1 + rho, raw[0].1 + TAU),
        Termination::FirstOutside => (next, body.forward_normal_angle(next)),
    };
    let end = body.point_at(end_s);

    let mut steps = Vec::with_capacity(n);
    let mut planks = Vec::with_capacity(n);
    for (i, &(s, theta, h, back)) in raw.iter().enumerate() {
        let (s_next, theta_next) = if i + 1 < n { (raw[i + 1].0, raw[i + 1].1) } else { (end_s, end_theta) };
        steps.push(WalkStep {
            p: body.point_at(s),
            s,
            line: line(theta, h),
            shifted: line(theta, h - delta),
            alpha: theta_next - theta,
            arc: s_next - s,
            back,
        });
        planks.push(Plank::new(unit(theta), h - 2.0 * delta, h));
    }
    let end_offset = end.dot(&unit(end_theta));
    let record = WalkRecord {
        delta,
        perimeter: rho,
        steps,
        end,
        end_line: line(end_theta, end_offset),
        termination,
        n,
    };
    Ok((planks, record))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Vec2;
    use crate::par::Execution;
    use crate::verify::{audit_walk, metric_annulus_samples, uncovered_points};

    fn unit_square() -> Body2 {
        Body2::polygon(&[Vec2::new(0.0, 0.0), Vec2::new(1.0, 0.0), Vec2::new(1.0, 1.0), Vec2::new(0.0, 1.0)]).unwrap()
    }

    fn assert_covers(body: &Body2, planks: &[Plank<2>], delta: f64) {
        let pts = metric_annulus_samples(body, delta, 10_000, 3, Execution::Sequential);
        assert_eq!(pts.len(), 10_000);
        assert!(uncovered_points(planks, &pts, 1e-12, Execution::Sequential).is_empty());
    }

    #[test]
    fn square_walk() {
        let sq = unit_square();
        let (planks, walk) = lemma2_cover(&sq, 0.1).unwrap();
        assert!(planks.len() <= 15);
        assert!((planks.len() as f64) < (TAU * 4.0 / 0.1).sqrt());
        assert!(planks.iter().all(|p| (p.width() - 0.2).abs() < 1e-15));
        assert_eq!(walk.steps[0].p, Vec2::zeros());
        assert!(audit_walk(&walk).iter().all(|a| a.passed));
        assert_covers(&sq, &planks, 0.1);
    }

    #[test]
    fn disc_walk() {
        let disc = Body2::disc(Vec2::zeros(), 1.0).unwrap();
        let (planks, walk) = lemma2_cover(&disc, 0.05).unwrap();
        assert!((planks.len() as f64) < (TAU * TAU / 0.05).sqrt());
        assert!(audit_walk(&walk).iter().all(|a| a.passed), "{:?}", audit_walk(&walk));
        assert_covers(&disc, &planks, 0.05);
    }

    #[test]
    fn reuleaux_walk_audits() {
        let r = Body2::reuleaux(1.0).unwrap();
        for delta in [0.02, 0.05, 0.1] {
            let (planks, walk) = lemma2_cover(&r, delta).unwrap();
            assert!(audit_walk(&walk).iter().all(|a| a.passed));
            assert!(walk.steps.windows(2).all(|w| w[0].s < w[1].s));
            assert!(walk.steps.iter().all(|s| s.alpha > 0.0 && s.alpha < std::f64::consts::PI));
            assert_covers(&r, &planks, delta);
        }
    }

    #[test]
    fn delta_must_be_below_width() {
        let sq = unit_square();
        assert!(matches!(lemma2_cover(&sq, 1.0), Err(CoverError::DeltaOutOfRange { .. })));
        assert!(matches!(lemma2_cover(&sq, 0.0), Err(CoverError::DeltaOutOfRange { .. })));
    }

    #[test]
    fn forged_angle_fails_the_angle_sum() {
        let (_, mut walk) = lemma2_cover(&unit_square(), 0.1).unwrap();
        walk.steps[0].alpha = 1.5 * std::f64::consts::PI;
        let audits = audit_walk(&walk);
        let angle_sum = audits.iter().find(|a| a.name == "walk.angle_sum").unwrap();
        assert!(!angle_sum.passed);
    }
}
