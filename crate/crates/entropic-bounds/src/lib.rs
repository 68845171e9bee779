//! Conditional entropic uncertainty bounds for a two-qubit system with
//! quantum memory.
//!
//! The model: a pure Schmidt state `sqrt(lambda)|00> + sqrt(1-lambda)|11>`
//! shared between a measured qubit and a qubit memory, with two binary
//! observables whose eigenbases are planar rotations separated by an angle
//! `epsilon`. The crate computes the exact conditional entropy sum
//! `T_q(X|B) + T_q(Y|B)` in the Tsallis family (von Neumann at q = 1),
//! every implemented closed-form lower bound on it, the analytic minima with
//! their single-minimum boundary condition, and a key-rate lower bound for
//! the derived QKD scenario. A brute-force minimizer and grid sweeps verify
//! the closed forms independently.
//!
//! All entropic quantities are in nats; one bit = ln 2 nats.

pub mod analysis;
pub mod bounds;
pub mod entropy;
pub mod keyrate;
pub mod scenario;

mod error;

pub use analysis::{BoundaryCurve, GapViolation, MinimizationResult, PropositionReport, Regime};
pub use bounds::BoundSet;
pub use entropy::{EntropyOrder, Spectrum};
pub use error::{Error, Result};
pub use keyrate::KeyRateInputs;
pub use scenario::{EigenPair, Scenario};
