//! Shared fixtures for the criterion benchmarks.

use entropic_bounds::{EntropyOrder, Scenario};

/// A deterministic spread of scenarios covering both overlap branches and
/// several entropic orders.
pub fn scenario_grid(per_axis: usize) -> Vec<Scenario> {
    let orders = [0.5, 1.0, 2.0, 5.0];
    let mut out = Vec::with_capacity(per_axis * per_axis * orders.len());
    for (k, &q) in orders.iter().enumerate() {
        let order = EntropyOrder::new(q).unwrap();
        for i in 0..per_axis {
            let lambda = i as f64 / per_axis as f64;
            for j in 0..per_axis {
                let angle = j as f64 / per_axis as f64 * std::f64::consts::FRAC_PI_2;
                let theta = ((i + j + k) % per_axis) as f64 / per_axis as f64
                    * std::f64::consts::FRAC_PI_2;
                out.push(Scenario::new(lambda, theta, angle, order).unwrap());
            }
        }
    }
    out
}
