use std::f64::consts::FRAC_PI_2;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::Parser;
use rayon::prelude::*;

use entropic_bounds::analysis::verify_proposition;
use entropic_bounds::bounds::{bound_kpp_tsallis, bound_state_dependent};
use entropic_bounds::scenario::{conditional_sum, overlap_c, Scenario};
use entropic_bounds::EntropyOrder;

use crate::config::{resolve, CliError, FileConfig};
use crate::output::sig12;

const BOUND_SLACK: f64 = 1e-9;

#[derive(Parser)]
pub struct Args {
    /// Grid points along the alpha axis of the gap sweep.
    #[arg(long)]
    alpha_points: Option<usize>,
    /// Grid points along the p axis of the gap sweep.
    #[arg(long)]
    p_points: Option<usize>,
    /// Orders for the gap sweep.
    #[arg(long, value_delimiter = ',')]
    q_list: Option<Vec<f64>>,
    /// Treat gap violations at orders in (2, 3) as failures instead of warnings.
    #[arg(long)]
    strict_range: bool,
    /// Violation threshold for the gap sweep.
    #[arg(long)]
    tol: Option<f64>,
    /// Per-axis points of the (lambda, epsilon, theta) bound-validity sweep.
    #[arg(long)]
    grid: Option<usize>,
    /// Orders for the bound-validity sweep.
    #[arg(long, value_delimiter = ',')]
    sweep_q: Option<Vec<f64>>,
    /// Also write the report to this path.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn in_proposition_range(q: f64) -> bool {
    (0.0..=2.0).contains(&q) || q >= 3.0
}

fn linspace(n: usize, max: f64) -> Vec<f64> {
    (0..n).map(|i| i as f64 / (n - 1) as f64 * max).collect()
}

pub fn run(args: Args, file: &FileConfig) -> Result<(), CliError> {
    let alpha_points = resolve(args.alpha_points, file, "alpha_points", 201)?;
    let p_points = resolve(args.p_points, file, "p_points", 201)?;
    let grid = resolve(args.grid, file, "grid", 25)?;
    for (name, n) in [
        ("alpha_points", alpha_points),
        ("p_points", p_points),
        ("grid", grid),
    ] {
        if n < 2 {
            return Err(CliError::Usage(format!("{name} = {n} is outside [2, inf)")));
        }
    }
    let tol = resolve(args.tol, file, "tol", 1e-10)?;
    let strict_range = args.strict_range || file.get_flag("strict_range")?;
    let q_list = match args.q_list {
        Some(qs) => qs,
        None => file
            .get_list("q_list")?
            .unwrap_or_else(|| vec![0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 10.0]),
    };
    let sweep_q = match args.sweep_q {
        Some(qs) => qs,
        None => file
            .get_list("sweep_q")?
            .unwrap_or_else(|| vec![0.5, 1.0, 2.0, 3.0, 5.0]),
    };

    let mut report = String::new();
    let mut failures = 0usize;
    let mut warnings = 0usize;

    // gap-inequality sweep
    let alpha_grid = linspace(alpha_points, 1.0);
    let p_grid = linspace(p_points, 1.0);
    let prop = verify_proposition(&alpha_grid, &p_grid, &q_list, tol)?;
    let (out_of_range, in_range): (
        Vec<&entropic_bounds::GapViolation>,
        Vec<&entropic_bounds::GapViolation>,
    ) = prop
        .violations
        .iter()
        .partition(|v| !in_proposition_range(v.q));
    writeln!(report, "gap inequality sweep:").unwrap();
    writeln!(
        report,
        "  grids: alpha {alpha_points} x p {p_points}, q = {q_list:?}, tol = {tol:e}"
    )
    .unwrap();
    writeln!(report, "  grid_min_gap     = {}", sig12(prop.grid_min_gap)).unwrap();
    writeln!(
        report,
        "  equality_max_abs = {}",
        sig12(prop.equality_max_abs)
    )
    .unwrap();
    failures += in_range.len();
    writeln!(report, "  violations       = {}", in_range.len()).unwrap();
    for v in in_range.iter().take(5) {
        writeln!(
            report,
            "    q={} alpha={} p={}: gap = {}",
            v.q,
            v.alpha,
            v.p,
            sig12(v.gap)
        )
        .unwrap();
    }
    if !out_of_range.is_empty() {
        let line = format!(
            "  {} gap dips at orders in (2, 3), outside the inequality's range",
            out_of_range.len()
        );
        if strict_range {
            failures += out_of_range.len();
            writeln!(report, "{line} [strict-range: counted as failures]").unwrap();
        } else {
            warnings += out_of_range.len();
            writeln!(report, "warnings:").unwrap();
            writeln!(report, "{line}").unwrap();
        }
    }

    // bound-validity sweep
    let lambda_grid = linspace(grid, 1.0);
    let angle_grid = linspace(grid, FRAC_PI_2);
    let mut worst_margin = f64::INFINITY;
    let mut sweep_failures = 0usize;
    for &q in &sweep_q {
        let order = EntropyOrder::new(q)?;
        let results: Vec<(f64, usize)> = lambda_grid
            .par_iter()
            .map(|&lambda| {
                let mut worst = f64::INFINITY;
                let mut bad = 0usize;
                for &epsilon in &angle_grid {
                    let c = overlap_c(epsilon).expect("grid angle in range");
                    let kpp = bound_kpp_tsallis(lambda, c, order).expect("grid weight in range");
                    for &theta in &angle_grid {
                        let s = Scenario::new(lambda, theta, epsilon, order)
                            .expect("grid point in range");
                        let exact = conditional_sum(&s);
                        let bt = bound_state_dependent(lambda, theta, epsilon, order)
                            .expect("grid point in range");
                        let margin = (exact - kpp).min(exact - bt);
                        worst = worst.min(margin);
                        if margin < -BOUND_SLACK {
                            bad += 1;
                        }
                    }
                }
                (worst, bad)
            })
            .collect();
        for (worst, bad) in results {
            worst_margin = worst_margin.min(worst);
            sweep_failures += bad;
        }
    }
    failures += sweep_failures;
    writeln!(report, "bound validity sweep:").unwrap();
    writeln!(
        report,
        "  grid: {grid}^3 over (lambda, epsilon, theta), q = {sweep_q:?}"
    )
    .unwrap();
    writeln!(report, "  worst margin     = {}", sig12(worst_margin)).unwrap();
    writeln!(report, "  failures         = {sweep_failures}").unwrap();

    writeln!(
        report,
        "result: {} ({failures} failures, {warnings} warnings)",
        if failures == 0 { "PASS" } else { "FAIL" }
    )
    .unwrap();

    print!("{report}");
    if let Some(path) = args.out.or(file.get::<PathBuf>("out")?) {
        std::fs::write(&path, &report)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
    }
    if failures > 0 {
        return Err(CliError::Verification(format!(
            "{failures} verification failures"
        )));
    }
    Ok(())
}
