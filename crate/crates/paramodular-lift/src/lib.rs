//! Paramodular levels of theta lifts from GSO(2, 2) to GSp(4).
//!
//! The crate works with symbolic local data: characters of Q_p^x known
//! through exact nu-exponents and opaque finite-order labels, and GL(2)
//! representations known through the data entering conductor formulas. On
//! top of that sit the local lift dispatch with its paramodular levels, the
//! global level of the lift of a pair of elliptic newforms, the archimedean
//! parameter tables for Siegel threefolds, and the dimension bookkeeping for
//! the endoscopic part of their cohomology. Everything that the symbolic
//! data cannot decide is reported as indeterminate rather than guessed.

pub mod archimedean;
pub mod cli;
pub mod endoscopy;
pub mod global_lift;
pub mod local_reps;
pub mod theta_resolver;
