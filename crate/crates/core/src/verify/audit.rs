//! Re-evaluation of the construction's inequalities from raw trace data.

use serde::{Deserialize, Serialize};
use std::f64::consts::{PI, TAU};

use crate::cover::{CoverParams, CoverTrace, Strategy, Termination, WalkRecord};

/// Slack added to the walk's sum inequalities and the per-step arc estimate.
pub const WALK_SLACK: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Audit {
    pub name: String,
    /// Left-hand side of `value < limit` (or `≤`).
    pub value: f64,
    pub limit: f64,
    pub passed: bool,
}

impl Audit {
    fn lt(name: &str, value: f64, limit: f64) -> Self {
        Self { name: name.into(), value, limit, passed: value < limit }
    }

    fn le(name: &str, value: f64, limit: f64) -> Self {
        Self { name: name.into(), value, limit, passed: value <= limit }
    }
}

/// Turn from `a` to `b` in `[0, 2π)`.
fn turn(a: &crate::geom::Hyperplane<2>, b: &crate::geom::Hyperplane<2>) -> f64 {
    let (u, v) = (a.normal.as_vec(), b.normal.as_vec());
    (u.x * v.y - u.y * v.x).atan2(u.dot(v)).rem_euclid(TAU)
}

/// Count bound, arc estimate, perimeter and angle sums, angle range, and
/// consistency of the recorded angles with the recorded lines.
pub fn audit_walk(walk: &WalkRecord) -> Vec<Audit> {
    let d = walk.delta;
    let n = walk.steps.len();
    let mut out = vec![
        Audit::lt("walk.count_bound", n as f64, walk.count_bound()),
        Audit::le("walk.count_matches", (n as f64 - walk.n as f64).abs(), 0.0),
    ];
    let mut worst_arc = f64::NEG_INFINITY;
    let mut worst_angle = f64::NEG_INFINITY;
    let mut worst_consistency: f64 = 0.0;
    let mut worst_order = f64::NEG_INFINITY;
    for (i, st) in walk.steps.iter().enumerate() {
        let next_line = walk.steps.get(i + 1).map(|s| &s.line).unwrap_or(&walk.end_line);
        worst_consistency = worst_consistency.max((turn(&st.line, next_line) - st.alpha.rem_euclid(TAU)).abs().min(
            TAU - (turn(&st.line, next_line) - st.alpha.rem_euclid(TAU)).abs(),
        ));
        worst_arc = worst_arc.max(d / st.alpha.sin() - WALK_SLACK - st.arc);
        worst_angle = worst_angle.max((-st.alpha).max(st.alpha - PI));
        if let Some(nx) = walk.steps.get(i + 1) {
            worst_order = worst_order.max(st.s - nx.s);
        }
    }
    let sum_arc: f64 = walk.steps.iter().map(|s| d / s.alpha.sin()).sum();
    let sum_alpha: f64 = walk.steps.iter().map(|s| s.alpha).sum();
    out.push(Audit::le("walk.arc_estimate", worst_arc, 0.0));
    out.push(Audit::le("walk.perimeter_sum", sum_arc, walk.perimeter + WALK_SLACK));
    out.push(Audit::le("walk.angle_sum", sum_alpha, TAU + WALK_SLACK));
    out.push(Audit::lt("walk.alpha_range", worst_angle, 0.0));
    out.push(Audit::le("walk.alpha_matches_lines", worst_consistency, 1e-9));
    if n > 1 {
        out.push(Audit::lt("walk.arc_order", worst_order, 0.0));
    }
    if walk.termination == Termination::Redefined {
        let first = &walk.steps[0];
        out.push(Audit::le("walk.redefined_end", (walk.end - first.p).norm(), 1e-9));
    }
    out
}

/// Every inequality recorded by the construction, recomputed.
pub fn audit_trace(params: &CoverParams, trace: &CoverTrace) -> Vec<Audit> {
    let mut out = vec![
        Audit::lt("t.positive", -params.t, 0.0),
        Audit::lt("delta_t.bound", params.delta_t, params.bound),
        Audit::lt("delta_t.slice_width", params.delta_cover, params.slice_width),
        Audit::le("delta_cover.at_least_delta_t", params.delta_t, params.delta_cover),
        Audit::lt("kappa.positive", -params.kappa, 0.0),
    ];
    let bound_at_t = match params.strategy {
        Strategy::TwoPlank => params.t / 2.0,
        Strategy::Polyhedral => params.t / trace.cross_section.len().max(1) as f64,
        Strategy::Lemma2 => params.t / (8.0 * PI * trace.cone_perimeter),
    };
    out.push(Audit::le("delta_t.bound_matches_strategy", (params.bound - bound_at_t).abs(), 1e-12 * params.t));
    let min_width = trace
        .cross_section
        .iter()
        .chain(&trace.standard_planks)
        .map(|p| p.width())
        .fold(f64::INFINITY, f64::min);
    out.push(Audit::le("planks.nonnegative_width", -min_width, 0.0));
    let cross: f64 = trace.cross_section.iter().map(|p| p.width()).sum();
    out.push(Audit::lt("cross_section.total_below_t", cross, params.t));
    if let Some(walk) = &trace.walk {
        out.push(Audit::le("walk.delta_matches", (walk.delta - params.delta_cover).abs(), 0.0));
        let n = walk.steps.len() as f64;
        let rho_t = params.t * trace.cone_perimeter;
        out.push(Audit::lt(
            "cross_section.lemma2_total",
            2.0 * walk.delta * n,
            (8.0 * PI * rho_t * walk.delta).sqrt().min(params.t),
        ));
        out.extend(audit_walk(walk));
    }
    let standard_total: f64 = trace.standard_planks.iter().map(|p| p.width()).sum();
    out.push(Audit::lt(
        "standard.total_with_inflation",
        standard_total + 2.0 * params.kappa * trace.standard_planks.len() as f64,
        1.0,
    ));
    out
}
