//! Independent adjudication of a covering: sampling plus trace audits.

mod audit;
mod sample;

pub use audit::{audit_trace, audit_walk, Audit, WALK_SLACK};
pub use sample::{
    annulus_samples, boundary_samples, metric_annulus_samples, rejection_samples, SamplePlan, Sampleable,
};

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

use crate::cover::CoverResult;
use crate::geom::{lex_cmp, total_width, ConvexBody, Plank, Point};
use crate::par::{self, Execution};

/// Reported uncovered points are capped at this many.
pub const MAX_UNCOVERED: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    CertifiedBySampling,
    Refuted,
    AuditFailed,
}

impl Verdict {
    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::CertifiedBySampling => 0,
            Verdict::Refuted => 1,
            Verdict::AuditFailed => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub verdict: Verdict,
    pub seed: u64,
    pub samples: usize,
    pub uncovered_count: usize,
    /// Lexicographically sorted, at most [`MAX_UNCOVERED`].
    pub uncovered: Vec<Vec<f64>>,
    pub w: f64,
    pub total_width: f64,
    pub margin: f64,
    pub audits: Vec<Audit>,
}

impl VerifyReport {
    /// Add audits and recompute the verdict.
    pub fn with_audits(mut self, audits: Vec<Audit>) -> Self {
        self.audits.extend(audits);
        self.verdict = decide(self.uncovered_count, self.margin, &self.audits);
        self
    }
}

fn decide(uncovered: usize, margin: f64, audits: &[Audit]) -> Verdict {
    if uncovered > 0 {
        Verdict::Refuted
    } else if !(margin > 0.0) || audits.iter().any(|a| !a.passed) {
        Verdict::AuditFailed
    } else {
        Verdict::CertifiedBySampling
    }
}

/// `x ∈ K` and `x ∉ int(inner)`.
pub fn annulus_membership<const D: usize, B: ConvexBody<D>>(body: &B, inner: &B, x: &Point<D>) -> bool {
    body.signed_distance(x) <= 0.0 && inner.signed_distance(x) >= 0.0
}

pub fn covered<const D: usize>(planks: &[Plank<D>], x: &Point<D>, tol: f64) -> bool {
    planks.iter().any(|p| p.contains(x, tol))
}

/// Points not contained in any plank, sorted lexicographically.
pub fn uncovered_points<const D: usize>(
    planks: &[Plank<D>],
    points: &[Point<D>],
    tol: f64,
    exec: Execution,
) -> Vec<Point<D>> {
    let flags = par::map(exec, points, |x| !covered(planks, x, tol));
    let mut out: Vec<Point<D>> = points.iter().zip(flags).filter(|(_, f)| *f).map(|(x, _)| *x).collect();
    out.sort_by(|a, b| lex_cmp(a, b).then(Ordering::Equal));
    out
}

/// Sample `K \ int(inner)` per `plan` and test plank membership. The verdict
/// only reflects sampling and the width budget until audits are added.
pub fn verify_covering<const D: usize, B: Sampleable<D>>(
    body: &B,
    inner: &B,
    planks: &[Plank<D>],
    plan: &SamplePlan,
) -> VerifyReport {
    let w = body.minimal_width().0;
    let pts = annulus_samples(body, inner, w, plan);
    let bad = uncovered_points(planks, &pts, crate::tol::MEMBERSHIP, plan.execution);
    let total = total_width(planks);
    let margin = w - total;
    VerifyReport {
        verdict: decide(bad.len(), margin, &[]),
        seed: plan.seed,
        samples: pts.len(),
        uncovered_count: bad.len(),
        uncovered: bad.iter().take(MAX_UNCOVERED).map(|x| x.iter().copied().collect()).collect(),
        w,
        total_width: total,
        margin,
        audits: Vec::new(),
    }
}

/// Verify a construction result end to end: sampling against
/// `K \ int(εK + y)` and every trace audit.
pub fn verify_result<const D: usize, B: Sampleable<D>>(
    body: &B,
    result: &CoverResult<D>,
    plan: &SamplePlan,
) -> VerifyReport {
    let inner = body.scaled_translated(result.params.epsilon, &result.y);
    verify_covering(body, &inner, &result.planks, plan).with_audits(audit_trace(&result.params, &result.trace))
}
