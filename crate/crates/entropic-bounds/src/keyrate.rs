//! Lower bound on the extractable key of an entanglement-based QKD protocol,
//! `K >= 2 (1 - c^2)(ln 2 - S(B)) - S(A|B) - S(X|X') - S(Y|Y')`,
//! evaluated from user-supplied or scenario-derived entropies (all in nats).

use std::f64::consts::{FRAC_1_SQRT_2, LN_2};

use crate::entropy::{binary_shannon, clamp_prob};
use crate::scenario::overlap_c;
use crate::{Error, Result};

const VAL_TOL: f64 = 1e-9;

/// The five entropic quantities entering the key-rate bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KeyRateInputs {
    c: f64,
    s_b: f64,
    s_a_given_b: f64,
    s_x_given_xp: f64,
    s_y_given_yp: f64,
}

fn clamp_into(name: &'static str, value: f64, min: f64, max: f64, domain: &'static str) -> Result<f64> {
    if value >= min - VAL_TOL && value <= max + VAL_TOL {
        Ok(value.clamp(min, max))
    } else {
        Err(Error::OutsideDomain {
            name,
            value,
            domain,
        })
    }
}

impl KeyRateInputs {
    /// Validates: `c` in [sqrt(2)/2, 1]; `s_b`, `s_x_given_xp`, `s_y_given_yp`
    /// in [0, ln 2] (qubit registers); `s_a_given_b` in [-ln 2, ln 2]
    /// (negative values certify entanglement).
    pub fn new(
        c: f64,
        s_b: f64,
        s_a_given_b: f64,
        s_x_given_xp: f64,
        s_y_given_yp: f64,
    ) -> Result<Self> {
        Ok(Self {
            c: clamp_into("c", c, FRAC_1_SQRT_2, 1.0, "[sqrt(2)/2, 1]")?,
            s_b: clamp_into("s_b", s_b, 0.0, LN_2, "[0, ln 2]")?,
            s_a_given_b: clamp_into("s_a_given_b", s_a_given_b, -LN_2, LN_2, "[-ln 2, ln 2]")?,
            s_x_given_xp: clamp_into("s_x_given_xp", s_x_given_xp, 0.0, LN_2, "[0, ln 2]")?,
            s_y_given_yp: clamp_into("s_y_given_yp", s_y_given_yp, 0.0, LN_2, "[0, ln 2]")?,
        })
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn s_b(&self) -> f64 {
        self.s_b
    }

    pub fn s_a_given_b(&self) -> f64 {
        self.s_a_given_b
    }

    pub fn s_x_given_xp(&self) -> f64 {
        self.s_x_given_xp
    }

    pub fn s_y_given_yp(&self) -> f64 {
        self.s_y_given_yp
    }
}

/// The key-rate lower bound itself. Returned as-is, with no clamping: a
/// negative value means the bound certifies no key.
pub fn key_rate_lower_bound(inputs: &KeyRateInputs) -> f64 {
    2.0 * (1.0 - inputs.c * inputs.c) * (LN_2 - inputs.s_b)
        - inputs.s_a_given_b
        - inputs.s_x_given_xp
        - inputs.s_y_given_yp
}

/// True iff the bound certifies a strictly positive key rate.
pub fn positive_key(inputs: &KeyRateInputs) -> bool {
    key_rate_lower_bound(inputs) > 0.0
}

/// Key-rate bound for the pure Schmidt scenario: `c = overlap(epsilon)`,
/// `S(B) = h(lambda)` and `S(A|B) = -h(lambda)` (pre-measurement state).
pub fn key_rate_for_scenario(
    lambda: f64,
    epsilon: f64,
    s_x_given_xp: f64,
    s_y_given_yp: f64,
) -> Result<f64> {
    let lambda = clamp_prob("lambda", lambda)?;
    let c = overlap_c(epsilon)?;
    let s_b = binary_shannon(lambda)?;
    let inputs = KeyRateInputs::new(c, s_b, -s_b, s_x_given_xp, s_y_given_yp)?;
    Ok(key_rate_lower_bound(&inputs))
}
