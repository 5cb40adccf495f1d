//! Unique path partitions: a partition μ such that every partition λ of
//! the same size admits at most one μ-path (chain of rim-hook removals
//! following the parts of μ).
//!
//! The crate implements the full circle of results around these objects:
//!
//! * rim-hook removal on beta sets and Murnaghan–Nakayama path counting
//!   ([`partition`], [`paths`]);
//! * the classification of up-partitions through strongly decreasing
//!   partitions, decided both by the criterion and by brute force
//!   ([`classify`]);
//! * the bijections with restricted binary partitions ([`biject`]);
//! * the counting sequences s, s_t, s*, s*_t, u, w, w_r with their
//!   divide-and-floor recurrences and generating functions ([`counting`],
//!   [`series`]);
//! * congruences of w(n) = u(2n)/2 modulo powers of 2, verified by sweep
//!   ([`congruence`]);
//! * OEIS b-file cross-checks ([`bfile`]).

pub mod bfile;
pub mod biject;
pub mod classify;
pub mod congruence;
pub mod counting;
pub mod partition;
pub mod paths;
pub mod series;
