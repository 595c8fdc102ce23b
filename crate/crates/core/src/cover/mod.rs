//! Covering construction: boundary walk, slice deviations, the lifted
//! cross-section covering and the final inflation and shift.

pub mod delta;
pub mod lemma2;
mod pipeline;

pub use delta::{delta_t_2d, delta_t_3d};
pub use lemma2::{lemma2_cover, Termination, WalkRecord, WalkStep};
pub use pipeline::*;

use crate::geom::GeomError;
use crate::spiky::SpikyError;

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum CoverError {
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Spiky(#[from] SpikyError),
    #[error("no spiky minimal width direction")]
    NotSpiky,
    #[error("δ = {delta} must lie in (0, w) with w = {width}")]
    DeltaOutOfRange { delta: f64, width: f64 },
    #[error("ε = {0} must lie in (0, 1)")]
    EpsilonOutOfRange(f64),
    #[error("no admissible t after {0} halvings")]
    IterationCap(usize),
    #[error("strategy {0:?} does not apply in dimension {1}")]
    StrategyMismatch(Strategy, usize),
    #[error("degenerate construction: {0}")]
    Degenerate(String),
}
