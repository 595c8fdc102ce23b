//! Central tolerance record.

use std::env;

/// Environment variable that overrides [`Tolerances::geom`].
pub const TOL_ENV: &str = "PLANKFORGE_TOL";

/// Every numeric tolerance used by the pipeline lives here.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    /// Geometric equality, spikiness strictness, support-set uniqueness.
    pub geom: f64,
    /// Golden-section and bisection refinement.
    pub refine: f64,
    /// Point-in-plank and point-in-body membership.
    pub membership: f64,
    /// Safety factor applied to each strict inequality when selecting `t`.
    pub safety: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            geom: 1e-9,
            refine: 1e-12,
            membership: 1e-12,
            safety: 0.99,
        }
    }
}

impl Tolerances {
    /// Defaults, with `geom` replaced by `PLANKFORGE_TOL` when it parses as a
    /// positive finite float.
    pub fn from_env() -> Self {
        let mut tol = Self::default();
        if let Some(v) = env::var(TOL_ENV).ok().and_then(|s| s.trim().parse::<f64>().ok()) {
            if v.is_finite() && v > 0.0 {
                tol.geom = v;
            }
        }
        tol
    }
}

pub(crate) const GEOM: f64 = 1e-9;
pub(crate) const REFINE: f64 = 1e-12;
pub(crate) const MEMBERSHIP: f64 = 1e-12;
