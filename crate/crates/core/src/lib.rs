//! Exact analysis of skew-signings of positive weighted loopless symmetric
//! (pwls) digraphs.
//!
//! A skew-signing keeps every arc weight up to sign and makes the two arcs
//! of each digon opposite in sign. The central question is whether all
//! skew-signings share one characteristic polynomial; it holds exactly
//! when the digraph has no even cycle of length at least 4 and is
//! cycle-symmetric (diagonally similar to a symmetric matrix). The crate
//! decides this structurally, checks it by brute force, and exposes the
//! combinatorial coefficient expansions behind it. All arithmetic is exact.

pub mod charpoly;
pub mod cli;
pub mod error;
pub mod format;
pub mod graph;
pub mod invariance;
pub mod rational;
pub mod signing;
pub mod subdigraph;
pub mod symmetry;

pub use charpoly::{char_poly, determinant, elimination_determinant, CharPolynomial};
pub use error::{Error, Result};
pub use graph::{RationalMatrix, ValidationReport, Violation, WeightedDigraph};
pub use invariance::{
    brute_force_invariance, decide_invariance, invariant_char_poly, orientations_of_graph,
    signed_cycle_coefficient, BruteForceOutcome, InvarianceVerdict, OrientationSummary,
};
pub use rational::Rational;
pub use signing::{apply_signing, enumerate_skew_signings, Sign, SkewSigning, DEFAULT_CAP};
pub use subdigraph::{
    coefficient_via_subdigraphs, enumerate_cycles, enumerate_digon_covers,
    enumerate_linear_subdigraphs, partition_cycles_by_sign, reverse_cycle,
    skew_coefficient_via_even_subdigraphs, Cycle, DigonCover, LinearSubdigraph,
};
pub use symmetry::{
    build_scaling_certificate, check_matrix_cycle_symmetric, cycle_symmetry_up_to, skew_symmetrize,
    symmetrize, ScalingCertificate, SymmetryVerdict,
};
