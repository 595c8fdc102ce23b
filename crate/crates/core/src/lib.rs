//! Plank coverings of spiky convex annuli.
//!
//! Given a convex body that is spiky in a minimal-width direction and a
//! homothety ratio `ε ∈ (0, 1)`, [`cover::spiky_annulus_cover`] builds a
//! shift `y` and a finite set of planks of total width strictly below the
//! minimal width, covering `K \ int(εK + y)`. [`verify`] adjudicates such
//! coverings independently by sampling and by re-auditing the construction
//! trace.

// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cover;
pub mod geom;
pub mod io;
pub mod par;
pub mod spiky;
pub mod tol;
pub mod verify;
