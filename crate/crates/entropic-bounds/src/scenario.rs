//! The two-qubit Schmidt-state measurement model.
//!
//! The state is `sqrt(lambda)|00> + sqrt(1-lambda)|11>`; the two binary
//! observables on the first qubit have eigenvectors `O(theta)|i>` and
//! `O(theta + epsilon)|i>` for a planar rotation `O`. Restricting to real
//! rotations loses nothing here because the post-measurement eigenvalues are
//! invariant under the equivalence that reduces general unitaries to SO(2).
//!
//! The post-measurement state of measurement-register-plus-memory is rank 2
//! and its nonzero eigenvalues have the closed form implemented by
//! [`post_measurement_eigs`]; no diagonalization is performed in this module
//! (the integration tests guard the closed form against an explicitly
//! constructed 4x4 state).

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use crate::entropy::{clamp_prob, t_point_raw, EntropyOrder};
use crate::{Error, Result};

const ANGLE_TOL: f64 = 1e-12;

fn clamp_angle(name: &'static str, x: f64) -> Result<f64> {
    if (0.0..=FRAC_PI_2).contains(&x) {
        return Ok(x);
    }
    if x > -ANGLE_TOL && x < 0.0 {
        return Ok(0.0);
    }
    if x > FRAC_PI_2 && x < FRAC_PI_2 + ANGLE_TOL {
        return Ok(FRAC_PI_2);
    }
    Err(Error::OutsideDomain {
        name,
        value: x,
        domain: "[0, pi/2]",
    })
}

/// Full parameter tuple fixing a state, a measurement pair and an entropy
/// order: Schmidt weight `lambda` in [0, 1], measurement angles `theta`,
/// `epsilon` in [0, pi/2] (radians) and the order `q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scenario {
    lambda: f64,
    theta: f64,
    epsilon: f64,
    order: EntropyOrder,
}

impl Scenario {
    pub fn new(lambda: f64, theta: f64, epsilon: f64, order: EntropyOrder) -> Result<Self> {
        Ok(Self {
            lambda: clamp_prob("lambda", lambda)?,
            theta: clamp_angle("theta", theta)?,
            epsilon: clamp_angle("epsilon", epsilon)?,
            order,
        })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn order(&self) -> EntropyOrder {
        self.order
    }

    /// The same scenario with a new measurement angle, folded into
    /// [0, pi/2) by the exact pi/2 periodicity of the conditional sum in
    /// theta (sin^2 and cos^2 have period pi and the point entropies are
    /// symmetric under mu -> 1 - mu).
    pub fn at_theta(&self, theta: f64) -> Self {
        Self {
            theta: theta.rem_euclid(FRAC_PI_2),
            ..*self
        }
    }
}

/// Maximal overlap between the eigenbases of the two observables:
/// `c = cos(epsilon)` for `epsilon <= pi/4`, else `sin(epsilon)`.
/// The result lies in [sqrt(2)/2, 1].
pub fn overlap_c(epsilon: f64) -> Result<f64> {
    let epsilon = clamp_angle("epsilon", epsilon)?;
    Ok(if epsilon <= FRAC_PI_4 {
        epsilon.cos()
    } else {
        epsilon.sin()
    })
}

/// Planar rotation `[[cos t, -sin t], [sin t, cos t]]`; columns are the
/// measurement eigenvectors `O(t)|0>` and `O(t)|1>`.
pub fn rotation(theta: f64) -> [[f64; 2]; 2] {
    let (s, c) = theta.sin_cos();
    [[c, -s], [s, c]]
}

/// Nonzero eigenvalues of the rank-2 post-measurement state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenPair {
    mu1: f64,
    mu2: f64,
}

impl EigenPair {
    pub fn mu1(&self) -> f64 {
        self.mu1
    }

    pub fn mu2(&self) -> f64 {
        self.mu2
    }
}

pub(crate) fn mu1_raw(lambda: f64, theta: f64) -> f64 {
    let s = theta.sin();
    let c = theta.cos();
    (lambda * s * s + (1.0 - lambda) * c * c).clamp(0.0, 1.0)
}

/// Closed-form eigenvalues `mu1 = lambda sin^2(theta) + (1-lambda) cos^2(theta)`,
/// `mu2 = 1 - mu1` of the post-measurement state. For the second observable
/// pass `theta + epsilon`; the angle is unrestricted.
pub fn post_measurement_eigs(lambda: f64, theta: f64) -> Result<EigenPair> {
    let lambda = clamp_prob("lambda", lambda)?;
    let mu1 = mu1_raw(lambda, theta);
    Ok(EigenPair { mu1, mu2: 1.0 - mu1 })
}

/// Exact conditional entropy sum
/// `T_q(X|B) + T_q(Y|B) = t_q(mu1(theta)) + t_q(mu1(theta + epsilon)) - 2 t_q(lambda)`.
pub fn conditional_sum(s: &Scenario) -> f64 {
    let mu_x = mu1_raw(s.lambda, s.theta);
    let mu_y = mu1_raw(s.lambda, s.theta + s.epsilon);
    t_point_raw(mu_x, s.order) + t_point_raw(mu_y, s.order) - 2.0 * t_point_raw(s.lambda, s.order)
}

/// Conditional entropy of the Schmidt state itself: the joint state is pure,
/// so `T_q(A|B) = -T_q(B) = -t_q(lambda)`. Negative for entangled states.
pub fn schmidt_conditional_entropy(lambda: f64, order: EntropyOrder) -> Result<f64> {
    Ok(-t_point_raw(clamp_prob("lambda", lambda)?, order))
}
