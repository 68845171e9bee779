//! Scalar and spectrum-level entropies with a uniform q -> 1 limit policy.
//!
//! All entropies are in nats. The Tsallis point entropy
//! `t_q(x) = (1 - x^q - (1-x)^q) / (q - 1)` tends to the binary Shannon
//! entropy `h(x) = -x ln x - (1-x) ln(1-x)` as q -> 1, which is what fixes
//! the natural-log convention: only in that base is the q -> 1 limit of the
//! algebraic Tsallis expression the familiar binary entropy.
//!
//! Every function that takes an [`EntropyOrder`] routes through the Shannon
//! limit when the order lies inside the switch band around q = 1 (see
//! [`Q_SWITCH`]); direct evaluation there loses six or more digits to the
//! cancellation in `1 - x^q - (1-x)^q`.

use crate::{Error, Result};

/// Half-width of the switch band around q = 1. Orders with |q - 1| below
/// this are evaluated through their Shannon limit formulas.
pub const Q_SWITCH: f64 = 1e-6;

/// Inputs within this distance of [0, 1] are clamped onto the boundary.
pub(crate) const PROB_TOL: f64 = 1e-12;

const SUM_TOL: f64 = 1e-10;

/// Entropic order q >= 0 of the Tsallis family.
///
/// Construction rejects negative or non-finite q. Whether the order falls in
/// the q -> 1 switch band is exposed through [`EntropyOrder::is_limit`];
/// consumers must use limit formulas when it is set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyOrder {
    q: f64,
}

impl EntropyOrder {
    pub fn new(q: f64) -> Result<Self> {
        if !q.is_finite() || q < 0.0 {
            return Err(Error::OutsideDomain {
                name: "q",
                value: q,
                domain: "[0, inf)",
            });
        }
        Ok(Self { q })
    }

    /// The Shannon / von Neumann case q = 1.
    pub fn shannon() -> Self {
        Self { q: 1.0 }
    }

    pub fn value(self) -> f64 {
        self.q
    }

    /// True iff |q - 1| < [`Q_SWITCH`].
    pub fn is_limit(self) -> bool {
        (self.q - 1.0).abs() < Q_SWITCH
    }
}

/// A probability vector (eigenvalue list) on which entropies act.
///
/// Entries are validated into [0, 1] (clamped within 1e-12 of the boundary)
/// and must sum to 1 within 1e-10.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    probs: Vec<f64>,
}

impl Spectrum {
    pub fn new(probs: impl Into<Vec<f64>>) -> Result<Self> {
        let mut probs = probs.into();
        let mut sum = 0.0;
        for p in probs.iter_mut() {
            *p = clamp_prob("spectrum entry", *p)?;
            sum += *p;
        }
        if (sum - 1.0).abs() > SUM_TOL {
            return Err(Error::SpectrumNotNormalized { sum });
        }
        Ok(Self { probs })
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }
}

pub(crate) fn clamp_prob(name: &'static str, x: f64) -> Result<f64> {
    if (0.0..=1.0).contains(&x) {
        return Ok(x);
    }
    if x > -PROB_TOL && x < 0.0 {
        return Ok(0.0);
    }
    if x > 1.0 && x < 1.0 + PROB_TOL {
        return Ok(1.0);
    }
    Err(Error::OutsideDomain {
        name,
        value: x,
        domain: "[0, 1]",
    })
}

/// `-x ln x`, extended by continuity to 0 at x = 0. Valid for any x >= 0,
/// in particular the arguments in [0, 2] used by the analytic minima.
pub(crate) fn eta_raw(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        -x * x.ln()
    }
}

pub(crate) fn h_raw(x: f64) -> f64 {
    eta_raw(x) + eta_raw(1.0 - x)
}

/// Tsallis point entropy without input validation; `x` must lie in [0, 1].
///
/// Exactly-zero factors are skipped so that deterministic outcomes contribute
/// nothing for every q >= 0, including q = 0 where the naive 0^0 = 1 would
/// miscount the support.
pub(crate) fn t_point_raw(x: f64, order: EntropyOrder) -> f64 {
    if order.is_limit() {
        return h_raw(x);
    }
    let q = order.value();
    let mut s = 0.0;
    if x > 0.0 {
        s += x.powf(q);
    }
    if x < 1.0 {
        s += (1.0 - x).powf(q);
    }
    (1.0 - s) / (q - 1.0)
}

/// Point entropy contribution `eta(x) = -x ln x` with `eta(0) = 0`.
pub fn eta(x: f64) -> Result<f64> {
    Ok(eta_raw(clamp_prob("x", x)?))
}

/// Binary Shannon entropy `h(x) = eta(x) + eta(1 - x)` in nats.
pub fn binary_shannon(x: f64) -> Result<f64> {
    Ok(h_raw(clamp_prob("x", x)?))
}

/// Tsallis point contribution `eta_q(x) = -x^q / (q - 1)`.
///
/// Unlike [`tsallis_point`], `eta_q` itself has no finite q -> 1 limit, so
/// orders inside the switch band are rejected.
pub fn eta_q(x: f64, order: EntropyOrder) -> Result<f64> {
    let x = clamp_prob("x", x)?;
    if order.is_limit() {
        return Err(Error::InvalidOrder {
            q: order.value(),
            reason: "eta_q has no finite q -> 1 limit",
        });
    }
    Ok(-x.powf(order.value()) / (order.value() - 1.0))
}

/// Tsallis point entropy `t_q(x)`; reduces to [`binary_shannon`] inside the
/// q -> 1 switch band.
pub fn tsallis_point(x: f64, order: EntropyOrder) -> Result<f64> {
    Ok(t_point_raw(clamp_prob("x", x)?, order))
}

/// Tsallis entropy `T_q = (1 - sum nu_i^q) / (q - 1)` of a spectrum; the
/// Shannon sum `sum eta(nu_i)` inside the switch band.
pub fn tsallis_entropy(s: &Spectrum, order: EntropyOrder) -> f64 {
    if order.is_limit() {
        return s.probs().iter().map(|&p| eta_raw(p)).sum();
    }
    let q = order.value();
    let sum: f64 = s
        .probs()
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| p.powf(q))
        .sum();
    (1.0 - sum) / (q - 1.0)
}

/// Conditional Tsallis entropy by the chain rule,
/// `T_q(A|B) = T_q(A, B) - T_q(B)`. May be negative for entangled states.
pub fn conditional_tsallis(joint: &Spectrum, marginal: &Spectrum, order: EntropyOrder) -> f64 {
    tsallis_entropy(joint, order) - tsallis_entropy(marginal, order)
}
