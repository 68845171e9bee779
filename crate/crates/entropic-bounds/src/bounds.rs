//! Closed-form lower bounds on the conditional entropy sum, analytic minima
//! and the single-minimum boundary condition.
//!
//! State-independent literature bounds (all in nats, `c` = basis overlap):
//!
//! - Deutsch:        `B_D    = -2 ln((1 + c) / 2)`
//! - Maassen-Uffink: `B_MU   = -2 ln c`
//! - qubit majorization: `B_Maj2 = -c ln c - (1 - c) ln(1 - c)`
//! - memory-assisted (q = 1 only): `B_BCCRR = B_MU + S(A|B)`
//!
//! The entanglement-dependent Tsallis bound is
//!
//! ```text
//! T_q(X|B) + T_q(Y|B) >= 2 (l^q + (1-l)^q - 2^(1-q)) / (l^q + (1-l)^q + q - 2)
//!                          * (1 - t_q(l)) * (1 - c^2)
//! ```
//!
//! with the removable q -> 1 limit `2 (ln 2 - h(l)) (1 - c^2)` and the
//! state-dependent sharpening that replaces `2 (1 - c^2)` by
//! `sin^2(2 theta + 2 epsilon) + sin^2(2 theta)`.
//!
//! When the boundary condition holds, the exact minimum over theta is
//! attained at the distinguished extremum and has the closed form computed by
//! [`analytic_min_vn`] / [`analytic_min_tsallis`]; otherwise two symmetric
//! minima emerge and only numerical minimization gives the value.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, LN_2};

use crate::entropy::{clamp_prob, eta_raw, h_raw, t_point_raw, EntropyOrder};
use crate::scenario::{overlap_c, Scenario};
use crate::{Error, Result};

const C_TOL: f64 = 1e-9;

/// Named values of all implemented lower bounds for one scenario.
/// `b_bccrr` is present only in the q -> 1 band; `analytic_min` only when
/// the boundary condition certifies the distinguished extremum as the global
/// minimum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundSet {
    pub b_deutsch: f64,
    pub b_mu: f64,
    pub b_maj2: f64,
    pub b_bccrr: Option<f64>,
    pub b_kpp: f64,
    pub b_theta: Option<f64>,
    pub analytic_min: Option<f64>,
}

fn clamp_c_positive(c: f64) -> Result<f64> {
    if c > 0.0 && c <= 1.0 {
        return Ok(c);
    }
    if c > 1.0 && c < 1.0 + C_TOL {
        return Ok(1.0);
    }
    Err(Error::OutsideDomain {
        name: "c",
        value: c,
        domain: "(0, 1]",
    })
}

fn clamp_c_qubit(c: f64) -> Result<f64> {
    if (FRAC_1_SQRT_2..=1.0).contains(&c) {
        return Ok(c);
    }
    if c > FRAC_1_SQRT_2 - C_TOL && c < FRAC_1_SQRT_2 {
        return Ok(FRAC_1_SQRT_2);
    }
    if c > 1.0 && c < 1.0 + C_TOL {
        return Ok(1.0);
    }
    Err(Error::OutsideDomain {
        name: "c",
        value: c,
        domain: "[sqrt(2)/2, 1]",
    })
}

fn clamp_angle_range(name: &'static str, x: f64) -> Result<f64> {
    if (0.0..=FRAC_PI_2).contains(&x) {
        return Ok(x);
    }
    if x > -1e-12 && x < 0.0 {
        return Ok(0.0);
    }
    if x > FRAC_PI_2 && x < FRAC_PI_2 + 1e-12 {
        return Ok(FRAC_PI_2);
    }
    Err(Error::OutsideDomain {
        name,
        value: x,
        domain: "[0, pi/2]",
    })
}

fn require_nonzero_order(order: EntropyOrder) -> Result<f64> {
    if order.value() == 0.0 {
        return Err(Error::InvalidOrder {
            q: 0.0,
            reason: "numerator and denominator of the coefficient both vanish at q = 0",
        });
    }
    Ok(order.value())
}

/// Deutsch bound `-2 ln((1 + c) / 2)`.
pub fn bound_deutsch(c: f64) -> Result<f64> {
    let c = clamp_c_positive(c)?;
    Ok(-2.0 * ((1.0 + c) / 2.0).ln())
}

/// Maassen-Uffink bound `-2 ln c`.
pub fn bound_mu(c: f64) -> Result<f64> {
    let c = clamp_c_positive(c)?;
    Ok(-2.0 * c.ln())
}

/// Qubit majorization bound `-c ln c - (1 - c) ln(1 - c)`.
pub fn bound_maj2(c: f64) -> Result<f64> {
    let c = clamp_c_positive(c)?;
    Ok(h_raw(c))
}

/// Memory-assisted bound `B_MU + S(A|B) = -2 ln c - h(lambda)` for the pure
/// Schmidt state; von Neumann (q = 1) semantics only. May be negative.
pub fn bound_bccrr(c: f64, lambda: f64) -> Result<f64> {
    let lambda = clamp_prob("lambda", lambda)?;
    Ok(bound_mu(c)? - h_raw(lambda))
}

/// The lambda-dependent prefactor of `(1 - c^2)` in the Tsallis bound,
/// `2 (l^q + (1-l)^q - 2^(1-q)) / (l^q + (1-l)^q + q - 2) * (1 - t_q(l))`.
///
/// The 0/0 at q = 1 is removable with limit `2 (ln 2 - h(lambda))`, used
/// inside the switch band. At lambda = 1/2 the numerator vanishes
/// identically (`2 (1/2)^q = 2^(1-q)`), so the coefficient is exactly 0 for
/// every order. q = 0 is rejected: there both numerator and denominator are
/// identically zero and the coefficient is indeterminate.
pub fn kpp_coefficient(lambda: f64, order: EntropyOrder) -> Result<f64> {
    let lambda = clamp_prob("lambda", lambda)?;
    let q = require_nonzero_order(order)?;
    if lambda == 0.5 {
        return Ok(0.0);
    }
    if order.is_limit() {
        return Ok(2.0 * (LN_2 - h_raw(lambda)));
    }
    let pow_sum = lambda.powf(q) + (1.0 - lambda).powf(q);
    let num = pow_sum - (2.0f64).powf(1.0 - q);
    let den = pow_sum + q - 2.0;
    Ok(2.0 * (num / den) * (1.0 - t_point_raw(lambda, order)))
}

/// Entanglement-dependent lower bound `kpp_coefficient(lambda, q) * (1 - c^2)`
/// on the conditional entropy sum, minimized over the measurement angle.
pub fn bound_kpp_tsallis(lambda: f64, c: f64, order: EntropyOrder) -> Result<f64> {
    let c = clamp_c_qubit(c)?;
    Ok(kpp_coefficient(lambda, order)? * (1.0 - c * c))
}

/// State-dependent bound before minimizing over theta:
/// `(kpp_coefficient / 2) * (sin^2(2 theta + 2 epsilon) + sin^2(2 theta))`.
pub fn bound_state_dependent(
    lambda: f64,
    theta: f64,
    epsilon: f64,
    order: EntropyOrder,
) -> Result<f64> {
    let theta = clamp_angle_range("theta", theta)?;
    let epsilon = clamp_angle_range("epsilon", epsilon)?;
    let s1 = (2.0 * theta + 2.0 * epsilon).sin();
    let s2 = (2.0 * theta).sin();
    Ok(kpp_coefficient(lambda, order)? / 2.0 * (s1 * s1 + s2 * s2))
}

/// Mixed-state von Neumann bound `2 (ln 2 - S(B)) (1 - c^2)` where `s_b` is
/// the memory entropy in nats (at most ln 2 for a qubit memory).
pub fn bound_mixed_vn(s_b: f64, c: f64) -> Result<f64> {
    if !((-1e-9..=LN_2 + 1e-9).contains(&s_b)) {
        return Err(Error::OutsideDomain {
            name: "s_b",
            value: s_b,
            domain: "[0, ln 2]",
        });
    }
    let s_b = s_b.clamp(0.0, LN_2);
    let c = clamp_c_qubit(c)?;
    Ok(2.0 * (LN_2 - s_b) * (1.0 - c * c))
}

/// Analytic minimum of the von Neumann conditional sum,
/// `ln 4 + eta(1 + c - 2 lambda c) + eta(1 - c + 2 lambda c) - 2 h(lambda)`.
///
/// This equals the global minimum only where [`boundary_condition`] holds;
/// the caller is responsible for checking it.
pub fn analytic_min_vn(lambda: f64, c: f64) -> Result<f64> {
    let lambda = clamp_prob("lambda", lambda)?;
    let c = clamp_c_qubit(c)?;
    let a = 1.0 + c - 2.0 * lambda * c;
    let b = 1.0 - c + 2.0 * lambda * c;
    Ok((4.0f64).ln() + eta_raw(a) + eta_raw(b) - 2.0 * h_raw(lambda))
}

fn eta_q_ext(x: f64, q: f64) -> f64 {
    // -x^q / (q - 1) on [0, 2]; 0^q = 0 for the q > 0 callers below
    if x == 0.0 {
        0.0
    } else {
        -x.powf(q) / (q - 1.0)
    }
}

/// Analytic minimum of the Tsallis conditional sum,
/// `2/(q-1) + 2^(1-q) (eta_q(1 + c - 2 lambda c) + eta_q(1 - c + 2 lambda c)) - 2 t_q(lambda)`.
/// Delegates to [`analytic_min_vn`] inside the q -> 1 band. Subject to the
/// same boundary-condition caveat.
pub fn analytic_min_tsallis(lambda: f64, c: f64, order: EntropyOrder) -> Result<f64> {
    if order.is_limit() {
        return analytic_min_vn(lambda, c);
    }
    let lambda = clamp_prob("lambda", lambda)?;
    let c = clamp_c_qubit(c)?;
    let q = require_nonzero_order(order)?;
    let a = 1.0 + c - 2.0 * lambda * c;
    let b = 1.0 - c + 2.0 * lambda * c;
    Ok(2.0 / (q - 1.0) + (2.0f64).powf(1.0 - q) * (eta_q_ext(a, q) + eta_q_ext(b, q))
        - 2.0 * t_point_raw(lambda, order))
}

/// Left-hand side of the q = 1 boundary inequality,
/// `-c atanh((1 - 2 lambda) c) + (2 lambda - 1)(1 - c^2) / (c^2 (1 - 2 lambda)^2 - 1)`.
///
/// The distinguished extremum is the global minimum iff this is negative
/// (zero at the bifurcation). The inequality is stated for lambda <= 1/2;
/// since the conditional sum is invariant under lambda <-> 1 - lambda the
/// weight is folded onto [0, 1/2] before evaluation. Requires c < 1.
pub fn boundary_lhs_vn(lambda: f64, c: f64) -> Result<f64> {
    let lambda = clamp_prob("lambda", lambda)?;
    let c = clamp_c_qubit(c)?;
    if c >= 1.0 {
        return Err(Error::OutsideDomain {
            name: "c",
            value: c,
            domain: "[sqrt(2)/2, 1)",
        });
    }
    let lam = lambda.min(1.0 - lambda);
    let d = 1.0 - 2.0 * lam;
    Ok(-c * (d * c).atanh() + (2.0 * lam - 1.0) * (1.0 - c * c) / (c * c * d * d - 1.0))
}

/// Left-hand side of the Tsallis boundary inequality; the distinguished
/// extremum is the global minimum iff this is positive (zero at the
/// bifurcation). Folded onto lambda <= 1/2 like [`boundary_lhs_vn`].
/// Orders inside the q -> 1 band are rejected: the two 1/(q-1) poles cancel
/// only in exact arithmetic, so the band must use the q = 1 form.
pub fn boundary_lhs_tsallis(lambda: f64, c: f64, order: EntropyOrder) -> Result<f64> {
    let lambda = clamp_prob("lambda", lambda)?;
    let c = clamp_c_qubit(c)?;
    if c >= 1.0 {
        return Err(Error::OutsideDomain {
            name: "c",
            value: c,
            domain: "[sqrt(2)/2, 1)",
        });
    }
    let q = require_nonzero_order(order)?;
    if order.is_limit() {
        return Err(Error::InvalidOrder {
            q,
            reason: "use the q = 1 boundary inequality inside the limit band",
        });
    }
    let lam = lambda.min(1.0 - lambda);
    let d = 1.0 - 2.0 * lam;
    let a = 1.0 + c * d;
    let b = 1.0 - c * d;
    Ok(a.powf(q - 2.0) * (2.0 * lam - 1.0 + (q * c * c * d + c) / (q - 1.0))
        + b.powf(q - 2.0) * (2.0 * lam - 1.0 + (q * c * c * d - c) / (q - 1.0)))
}

/// True iff the distinguished extremum of the conditional sum is its global
/// minimum, so that the analytic minimum formulas apply.
///
/// Conventions: exact equality of the inequality (the bifurcation point) is
/// reported as true, where the analytic formula still gives the minimum by
/// continuity. c = 1 (commuting observables) is true by convention: the sum's
/// minimum value 0 is attained and the atanh singularity is avoided.
pub fn boundary_condition(lambda: f64, c: f64, order: EntropyOrder) -> Result<bool> {
    let lambda = clamp_prob("lambda", lambda)?;
    let c = clamp_c_qubit(c)?;
    if c >= 1.0 {
        return Ok(true);
    }
    if order.is_limit() {
        Ok(boundary_lhs_vn(lambda, c)? <= 0.0)
    } else {
        Ok(boundary_lhs_tsallis(lambda, c, order)? >= 0.0)
    }
}

/// Every applicable bound for one scenario.
pub fn all_bounds(s: &Scenario) -> Result<BoundSet> {
    let c = overlap_c(s.epsilon())?;
    let order = s.order();
    let b_bccrr = if order.is_limit() {
        Some(bound_bccrr(c, s.lambda())?)
    } else {
        None
    };
    let analytic_min = if boundary_condition(s.lambda(), c, order)? {
        Some(analytic_min_tsallis(s.lambda(), c, order)?)
    } else {
        None
    };
    Ok(BoundSet {
        b_deutsch: bound_deutsch(c)?,
        b_mu: bound_mu(c)?,
        b_maj2: bound_maj2(c)?,
        b_bccrr,
        b_kpp: bound_kpp_tsallis(s.lambda(), c, order)?,
        b_theta: Some(bound_state_dependent(s.lambda(), s.theta(), s.epsilon(), order)?),
        analytic_min,
    })
}
