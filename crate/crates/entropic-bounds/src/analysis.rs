//! Independent numerical verification: brute-force minimization of the exact
//! conditional sum over the measurement angle, bisection of the boundary
//! condition in the overlap, and grid verification of the pointwise gap
//! inequality underlying the Tsallis bound.
//!
//! The minimizer is deterministic by construction: a coarse scan of the
//! periodic fundamental domain [0, pi/2) followed by golden-section
//! refinement of every bracketed minimum. The objective is smooth and
//! one-dimensional on a compact interval, so reproducibility wins over
//! cleverness here.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, LN_2};

use crate::bounds::{boundary_lhs_tsallis, boundary_lhs_vn};
use crate::entropy::{clamp_prob, h_raw, t_point_raw, EntropyOrder};
use crate::scenario::{conditional_sum, Scenario};
use crate::{Error, Result};

/// Default angular tolerance of the refinement stage.
pub const DEFAULT_THETA_TOL: f64 = 1e-9;

/// Default number of coarse-scan points on [0, pi/2).
pub const DEFAULT_GRID_POINTS: usize = 2000;

/// Total variation below which the objective counts as constant in theta.
const FLAT_TOL: f64 = 1e-12;

/// Resolution of the bisection in the overlap c.
const BISECT_C_TOL: f64 = 1e-8;

/// How the minima of the conditional sum are arranged over theta.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// One minimizer (up to the pi/2 periodicity).
    SingleMinimum,
    /// Two minimizers, symmetric about the distinguished extremum.
    DoubleMinimum,
    /// The objective is constant in theta (lambda = 1/2, or c = 1 edge).
    Flat,
}

/// Global minimum over theta together with all located local minima.
#[derive(Debug, Clone, PartialEq)]
pub struct MinimizationResult {
    pub theta_star: f64,
    pub min_value: f64,
    /// (theta, value) pairs sorted by theta, one entry per distinct minimum.
    pub local_minima: Vec<(f64, f64)>,
    pub regime: Regime,
}

/// Critical overlaps c*(lambda) at which the boundary condition changes sign.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryCurve {
    pub order: EntropyOrder,
    /// (lambda, c_star) pairs; lambda values without a sign change are omitted.
    pub points: Vec<(f64, f64)>,
}

/// A grid point where the gap function dipped below -tol.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GapViolation {
    pub alpha: f64,
    pub p: f64,
    pub q: f64,
    pub gap: f64,
}

/// Summary of a gap-function grid sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct PropositionReport {
    pub q_values: Vec<f64>,
    pub grid_min_gap: f64,
    /// Largest |gap| observed at the equality orders q = 2 and q = 3.
    pub equality_max_abs: f64,
    pub violations: Vec<GapViolation>,
}

fn validate_tol(tol: f64) -> Result<f64> {
    if tol > 0.0 && tol <= 1e-3 {
        Ok(tol)
    } else {
        Err(Error::OutsideDomain {
            name: "tol",
            value: tol,
            domain: "(0, 1e-3]",
        })
    }
}

/// Golden-section search for the minimum of `f` on [a, b].
fn golden_section_min(f: &dyn Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while b - a > tol {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
    }
    let xm = 0.5 * (a + b);
    let fm = f(xm);
    let mut best = (xm, fm);
    if f1 < best.1 {
        best = (x1, f1);
    }
    if f2 < best.1 {
        best = (x2, f2);
    }
    best
}

/// Distance between two angles on the circle of circumference pi/2.
fn cyclic_dist(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(FRAC_PI_2);
    d.min(FRAC_PI_2 - d)
}

/// Brute-force minimization of the conditional sum over theta.
///
/// A coarse scan of `grid_points` samples on the periodic fundamental domain
/// [0, pi/2) brackets every local minimum; each bracket is refined by
/// golden-section search to an angular error below `tol`. Refined minimizers
/// closer than 10 * tol (cyclically) are merged. The regime is `Flat` when
/// the scan's total variation is below 1e-12, `SingleMinimum` for exactly one
/// merged minimizer and `DoubleMinimum` otherwise.
pub fn minimize_conditional_sum_grid(
    lambda: f64,
    epsilon: f64,
    order: EntropyOrder,
    tol: f64,
    grid_points: usize,
) -> Result<MinimizationResult> {
    let tol = validate_tol(tol)?;
    if grid_points < 16 {
        return Err(Error::OutsideDomain {
            name: "grid_points",
            value: grid_points as f64,
            domain: "[16, inf)",
        });
    }
    let base = Scenario::new(lambda, 0.0, epsilon, order)?;
    let f = move |theta: f64| conditional_sum(&base.at_theta(theta));

    let n = grid_points;
    let step = FRAC_PI_2 / n as f64;
    let values: Vec<f64> = (0..n).map(|i| f(i as f64 * step)).collect();

    let total_variation: f64 = (0..n)
        .map(|i| (values[(i + 1) % n] - values[i]).abs())
        .sum();
    if total_variation < FLAT_TOL {
        let guess = (FRAC_PI_2 - epsilon / 2.0).rem_euclid(FRAC_PI_2);
        let value = f(guess);
        return Ok(MinimizationResult {
            theta_star: guess,
            min_value: value,
            local_minima: vec![(guess, value)],
            regime: Regime::Flat,
        });
    }

    // refine every cyclic local minimum of the scan
    let mut refined: Vec<(f64, f64)> = Vec::new();
    for i in 0..n {
        let prev = values[(i + n - 1) % n];
        let next = values[(i + 1) % n];
        let v = values[i];
        if v <= prev && v <= next && (v < prev || v < next) {
            let a = (i as f64 - 1.0) * step;
            let b = (i as f64 + 1.0) * step;
            let (t, val) = golden_section_min(&f, a, b, tol);
            refined.push((t.rem_euclid(FRAC_PI_2), val));
        }
    }
    refined.sort_by(|a, b| a.0.total_cmp(&b.0));

    // merge refinements that converged to the same attractor
    let merge_dist = 10.0 * tol;
    let mut minima: Vec<(f64, f64)> = Vec::new();
    for (t, v) in refined {
        match minima.last_mut() {
            Some(last) if cyclic_dist(last.0, t) <= merge_dist => {
                if v < last.1 {
                    *last = (t, v);
                }
            }
            _ => minima.push((t, v)),
        }
    }
    if minima.len() > 1 {
        let first = minima[0];
        let last = *minima.last().unwrap();
        if cyclic_dist(first.0, last.0) <= merge_dist {
            if last.1 < first.1 {
                minima[0] = last;
            }
            minima.pop();
        }
    }

    let &(theta_star, min_value) = minima
        .iter()
        .min_by(|a, b| a.1.total_cmp(&b.1).then(a.0.total_cmp(&b.0)))
        .expect("non-flat objective has at least one cyclic minimum");
    let regime = if minima.len() == 1 {
        Regime::SingleMinimum
    } else {
        Regime::DoubleMinimum
    };
    Ok(MinimizationResult {
        theta_star,
        min_value,
        local_minima: minima,
        regime,
    })
}

/// [`minimize_conditional_sum_grid`] with the default coarse scan.
pub fn minimize_conditional_sum(
    lambda: f64,
    epsilon: f64,
    order: EntropyOrder,
    tol: f64,
) -> Result<MinimizationResult> {
    minimize_conditional_sum_grid(lambda, epsilon, order, tol, DEFAULT_GRID_POINTS)
}

fn boundary_lhs(lambda: f64, c: f64, order: EntropyOrder) -> Result<f64> {
    if order.is_limit() {
        boundary_lhs_vn(lambda, c)
    } else {
        boundary_lhs_tsallis(lambda, c, order)
    }
}

/// For each Schmidt weight, bisect the overlap interval on the sign of the
/// boundary-condition left-hand side to locate the critical overlap c*.
///
/// `lambda_grid` values must lie in [0, 1/2] (the condition is symmetric
/// under lambda <-> 1 - lambda). Weights without a sign change on the open
/// interval are omitted; in particular the curve terminates towards
/// lambda = 1/2 where the left-hand side vanishes identically.
pub fn boundary_curve(order: EntropyOrder, lambda_grid: &[f64]) -> Result<BoundaryCurve> {
    if order.value() == 0.0 {
        return Err(Error::InvalidOrder {
            q: 0.0,
            reason: "boundary condition is undefined at q = 0",
        });
    }
    // endpoints stay clear of the atanh singularity at c -> 1 and the
    // degenerate edge c = sqrt(2)/2
    let lo = FRAC_1_SQRT_2 + 1e-9;
    let hi = 1.0 - 1e-9;
    let mut points = Vec::new();
    for &lambda in lambda_grid {
        let lambda = clamp_prob("lambda", lambda)?;
        if lambda > 0.5 {
            return Err(Error::OutsideDomain {
                name: "lambda",
                value: lambda,
                domain: "[0, 1/2]",
            });
        }
        let f_lo = boundary_lhs(lambda, lo, order)?;
        let f_hi = boundary_lhs(lambda, hi, order)?;
        if f_lo == 0.0 || f_hi == 0.0 || f_lo.signum() == f_hi.signum() {
            continue;
        }
        let (mut a, mut b, mut fa) = (lo, hi, f_lo);
        while b - a > BISECT_C_TOL {
            let mid = 0.5 * (a + b);
            let fm = boundary_lhs(lambda, mid, order)?;
            if fm == 0.0 {
                a = mid;
                b = mid;
                break;
            }
            if fm.signum() == fa.signum() {
                a = mid;
                fa = fm;
            } else {
                b = mid;
            }
        }
        points.push((lambda, 0.5 * (a + b)));
    }
    Ok(BoundaryCurve { order, points })
}

/// Gap function of the pointwise inequality,
/// `f(p) = t_q(alpha p + (1-alpha)(1-p)) - 4 C(alpha, q) p (1-p) (1 - t_q(alpha)) - t_q(alpha)`
/// with `C` the coefficient ratio of the Tsallis bound. Nonnegative for
/// q in [0, 2] union [3, inf); identically zero at q = 2 and q = 3.
pub fn proposition_gap(alpha: f64, p: f64, order: EntropyOrder) -> Result<f64> {
    let alpha = clamp_prob("alpha", alpha)?;
    let p = clamp_prob("p", p)?;
    if order.value() == 0.0 {
        return Err(Error::InvalidOrder {
            q: 0.0,
            reason: "coefficient ratio is 0/0 at q = 0",
        });
    }
    let m = (alpha * p + (1.0 - alpha) * (1.0 - p)).clamp(0.0, 1.0);
    if order.is_limit() {
        let ha = h_raw(alpha);
        return Ok(h_raw(m) - 4.0 * (LN_2 - ha) * p * (1.0 - p) - ha);
    }
    let q = order.value();
    let pow_sum = alpha.powf(q) + (1.0 - alpha).powf(q);
    let ratio = (pow_sum - (2.0f64).powf(1.0 - q)) / (pow_sum + q - 2.0);
    let ta = t_point_raw(alpha, order);
    Ok(t_point_raw(m, order) - 4.0 * ratio * p * (1.0 - p) * (1.0 - ta) - ta)
}

/// Closed-form slope g(alpha) of the gap function at p = 0. Positive for
/// alpha away from 1/2 on the valid q range, with g(1/2) = 0.
pub fn proposition_slope_origin(alpha: f64, order: EntropyOrder) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::OutsideDomain {
            name: "alpha",
            value: alpha,
            domain: "(0, 1)",
        });
    }
    let q = order.value();
    if q == 0.0 {
        return Err(Error::InvalidOrder {
            q,
            reason: "slope formula is indeterminate at q = 0",
        });
    }
    if order.is_limit() {
        return Err(Error::InvalidOrder {
            q,
            reason: "slope formula has 1/(q-1) poles inside the limit band",
        });
    }
    let t1 = alpha.powf(q - 1.0) * (2.0 * alpha * (q - 2.0) - q) / (q - 1.0);
    let t2 = ((4.0 * alpha - 2.0 * alpha * q + q - 4.0) * (1.0 - alpha).powf(q - 1.0)
        + (2.0f64).powf(3.0 - q))
        / (q - 1.0);
    Ok(t1 + t2)
}

/// Evaluate the gap function on the full grid, recording the minimum gap,
/// every dip below -tol and the largest |gap| at the equality orders.
pub fn verify_proposition(
    alpha_grid: &[f64],
    p_grid: &[f64],
    q_list: &[f64],
    tol: f64,
) -> Result<PropositionReport> {
    let tol = validate_tol(tol)?;
    let mut grid_min_gap = f64::INFINITY;
    let mut equality_max_abs: f64 = 0.0;
    let mut violations = Vec::new();
    for &q in q_list {
        let order = EntropyOrder::new(q)?;
        let is_equality_order = (q - 2.0).abs() < 1e-12 || (q - 3.0).abs() < 1e-12;
        for &alpha in alpha_grid {
            for &p in p_grid {
                let gap = proposition_gap(alpha, p, order)?;
                grid_min_gap = grid_min_gap.min(gap);
                if is_equality_order {
                    equality_max_abs = equality_max_abs.max(gap.abs());
                }
                if gap < -tol {
                    violations.push(GapViolation { alpha, p, q, gap });
                }
            }
        }
    }
    Ok(PropositionReport {
        q_values: q_list.to_vec(),
        grid_min_gap,
        equality_max_abs,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{analytic_min_tsallis, analytic_min_vn};
    use std::f64::consts::{FRAC_PI_4, PI};

    fn ord(q: f64) -> EntropyOrder {
        EntropyOrder::new(q).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    #[test]
    fn maximally_entangled_is_flat() {
        let r = minimize_conditional_sum(0.5, PI / 6.0, ord(2.0), 1e-9).unwrap();
        assert_eq!(r.regime, Regime::Flat);
        assert!(r.min_value.abs() < 1e-12);
    }

    #[test]
    fn double_minimum_at_quarter_pi_overlap() {
        // at lambda = 0, eps = pi/4 the boundary condition fails; the two
        // symmetric minima sit at pi/4 and pi/2 == 0 with value ln 2
        // (each achieving the Maassen-Uffink bound)
        let r = minimize_conditional_sum(0.0, FRAC_PI_4, ord(1.0), 1e-9).unwrap();
        assert_eq!(r.regime, Regime::DoubleMinimum);
        close(r.min_value, LN_2, 1e-10);
        assert_eq!(r.local_minima.len(), 2);
        let (t1, v1) = r.local_minima[0];
        let (t2, v2) = r.local_minima[1];
        assert!((v1 - v2).abs() < 1e-10);
        // pair midpoint matches the guess axis pi/2 - eps/2 modulo pi/4
        // (adding the pi/2 period to one member shifts the midpoint by pi/4)
        let guess = FRAC_PI_2 - FRAC_PI_4 / 2.0;
        let mid_offset = ((t1 + t2) / 2.0 - guess).rem_euclid(PI / 4.0);
        assert!(
            mid_offset < 1e-6 || (PI / 4.0 - mid_offset) < 1e-6,
            "midpoint offset {mid_offset}"
        );
    }

    #[test]
    fn single_minimum_large_epsilon() {
        // eps = pi/2.5 > pi/4, c = sin(eps) = 0.951: the condition holds and
        // the single minimum sits at pi/4 - eps/2
        let eps = PI / 2.5;
        let r = minimize_conditional_sum(0.0, eps, ord(1.0), 1e-9).unwrap();
        assert_eq!(r.regime, Regime::SingleMinimum);
        close(r.min_value, 0.229_931_557_808_412_1, 1e-10);
        close(r.theta_star, FRAC_PI_4 - eps / 2.0, 1e-6);
    }

    #[test]
    fn single_minimum_matches_analytic_form() {
        let eps = PI / 8.0;
        let r = minimize_conditional_sum(0.4, eps, ord(1.0), 1e-9).unwrap();
        assert_eq!(r.regime, Regime::SingleMinimum);
        let analytic = analytic_min_vn(0.4, eps.cos()).unwrap();
        close(r.min_value, analytic, 1e-7);
        close(r.min_value, 0.005_931_907_722_554_374, 1e-9);
        close(r.theta_star, FRAC_PI_2 - eps / 2.0, 1e-6);
    }

    #[test]
    fn tsallis_minimum_matches_analytic_form() {
        let c: f64 = 0.9;
        let eps = c.acos();
        let r = minimize_conditional_sum(0.0, eps, ord(5.0), 1e-9).unwrap();
        close(r.min_value, 0.113_109_375, 1e-9);
        close(
            r.min_value,
            analytic_min_tsallis(0.0, c, ord(5.0)).unwrap(),
            1e-9,
        );
    }

    #[test]
    fn min_value_never_exceeds_guess_point() {
        for (lambda, eps, q) in [(0.0, 0.9, 1.0), (0.2, 0.4, 0.5), (0.7, 1.2, 3.0)] {
            let tol = 1e-9;
            let r = minimize_conditional_sum(lambda, eps, ord(q), tol).unwrap();
            let s = Scenario::new(lambda, 0.0, eps, ord(q)).unwrap();
            let guess = conditional_sum(&s.at_theta(FRAC_PI_2 - eps / 2.0));
            assert!(r.min_value <= guess + tol);
        }
    }

    #[test]
    fn guess_point_is_stationary() {
        // central difference of the conditional sum vanishes at
        // theta = pi/2 - eps/2 for every (lambda, eps, q)
        let delta = 1e-5;
        for &lambda in &[0.0, 0.15, 0.5, 0.85] {
            for &eps in &[0.2, FRAC_PI_4, 1.2] {
                for &q in &[0.5, 1.0, 2.5] {
                    let s = Scenario::new(lambda, 0.0, eps, ord(q)).unwrap();
                    let guess = FRAC_PI_2 - eps / 2.0;
                    let d = (conditional_sum(&s.at_theta(guess + delta))
                        - conditional_sum(&s.at_theta(guess - delta)))
                        / (2.0 * delta);
                    assert!(d.abs() < 1e-6, "lambda={lambda} eps={eps} q={q}: {d}");
                }
            }
        }
    }

    #[test]
    fn tolerance_validation() {
        assert!(minimize_conditional_sum(0.1, 0.4, ord(1.0), 0.0).is_err());
        assert!(minimize_conditional_sum(0.1, 0.4, ord(1.0), 1e-2).is_err());
    }

    #[test]
    fn boundary_curve_q1() {
        // at lambda = 0 the root solves c atanh(c) = 1
        let curve = boundary_curve(ord(1.0), &[0.0]).unwrap();
        assert_eq!(curve.points.len(), 1);
        close(curve.points[0].1, 0.833_556_559_600_964_7, 1e-6);
        // identically-zero left-hand side at lambda = 1/2: omitted
        let curve = boundary_curve(ord(1.0), &[0.5]).unwrap();
        assert!(curve.points.is_empty());
        assert!(boundary_curve(ord(1.0), &[0.7]).is_err());
    }

    #[test]
    fn boundary_curve_sign_flip() {
        for q in [1.0, 1.5, 5.0] {
            let curve = boundary_curve(ord(q), &[0.0, 0.2, 0.4]).unwrap();
            for &(lambda, c_star) in &curve.points {
                let below = boundary_lhs(lambda, c_star - 1e-6, ord(q)).unwrap();
                let above = boundary_lhs(lambda, c_star + 1e-6, ord(q)).unwrap();
                assert!(
                    below.signum() != above.signum(),
                    "q={q} lambda={lambda} c*={c_star}"
                );
            }
        }
    }

    #[test]
    fn boundary_curve_q2_has_no_interior_root() {
        // q = 2: the inequality holds on the whole open interval
        let curve = boundary_curve(ord(2.0), &[0.0, 0.1, 0.3]).unwrap();
        assert!(curve.points.is_empty());
    }

    #[test]
    fn gap_zeros_and_values() {
        for &q in &[0.5, 1.0, 1.5, 4.0] {
            for &alpha in &[0.1, 0.3, 0.5, 0.9] {
                assert!(proposition_gap(alpha, 0.0, ord(q)).unwrap().abs() < 1e-12);
                assert!(proposition_gap(alpha, 0.5, ord(q)).unwrap().abs() < 1e-12);
            }
        }
        for &q in &[2.0, 3.0] {
            assert!(proposition_gap(0.3, 0.2, ord(q)).unwrap().abs() < 1e-15);
        }
        close(
            proposition_gap(0.2, 0.3, ord(1.5)).unwrap(),
            6.619_827_982_688_374e-4,
            1e-12,
        );
        assert!(proposition_gap(0.3, 0.2, ord(0.0)).is_err());
    }

    #[test]
    fn gap_has_no_interior_zero() {
        // 10^4-point scan of (0, 1/2): no dip below noise once p is away
        // from the endpoints
        for &(alpha, q) in &[(0.2, 0.5), (0.3, 1.5), (0.1, 4.0)] {
            let o = ord(q);
            for i in 1..10_000 {
                let p = 0.5 * i as f64 / 10_000.0;
                let gap = proposition_gap(alpha, p, o).unwrap();
                assert!(gap > -1e-13, "alpha={alpha} q={q} p={p}: {gap}");
            }
        }
    }

    #[test]
    fn slope_values() {
        for &q in &[0.5, 1.5, 4.0] {
            assert!(proposition_slope_origin(0.5, ord(q)).unwrap().abs() < 1e-13);
        }
        let g = proposition_slope_origin(0.3, ord(1.5)).unwrap();
        close(g, 3.748_925_723_849_776e-3, 1e-14);
        assert!(g > 0.0);
        let g = proposition_slope_origin(0.7, ord(4.0)).unwrap();
        close(g, 4.266_666_666_666_667e-3, 1e-14);
        assert!(g > 0.0);
        assert!(proposition_slope_origin(0.0, ord(2.0)).is_err());
        assert!(proposition_slope_origin(0.3, ord(1.0)).is_err());
    }

    #[test]
    fn slope_matches_finite_difference() {
        let delta = 1e-6;
        for &(alpha, q) in &[(0.2, 0.5), (0.3, 1.5), (0.7, 4.0), (0.45, 6.0)] {
            let o = ord(q);
            let fd = (proposition_gap(alpha, 2.0 * delta, o).unwrap()
                - proposition_gap(alpha, 0.0, o).unwrap())
                / (2.0 * delta);
            let g = proposition_slope_origin(alpha, o).unwrap();
            assert!((fd - g).abs() < 1e-5, "alpha={alpha} q={q}: {fd} vs {g}");
        }
    }

    #[test]
    fn verify_proposition_report() {
        let grid: Vec<f64> = (0..=100).map(|i| i as f64 / 100.0).collect();
        let report =
            verify_proposition(&grid, &grid, &[0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 10.0], 1e-10)
                .unwrap();
        assert!(report.violations.is_empty());
        assert!(report.grid_min_gap >= -1e-10);
        assert!(report.equality_max_abs < 1e-12);

        // exploratory order outside the valid range: negative gaps recorded,
        // not an artifact failure
        let report = verify_proposition(&grid, &grid, &[2.5], 1e-10).unwrap();
        assert!(report.grid_min_gap < 0.0);
        assert!(!report.violations.is_empty());

        assert!(verify_proposition(&grid, &grid, &[1.0], 0.0).is_err());
    }
}
