use std::f64::consts::{FRAC_PI_2, PI};
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use rayon::prelude::*;

use entropic_bounds::analysis::{boundary_curve, minimize_conditional_sum};
use entropic_bounds::bounds::{
    bound_bccrr, bound_kpp_tsallis, bound_maj2, bound_mu, bound_state_dependent,
};
use entropic_bounds::scenario::{conditional_sum, overlap_c, Scenario};
use entropic_bounds::EntropyOrder;

use crate::config::{resolve, CliError, FileConfig};
use crate::output::{opt_sig12, sig12, OutputRecord, Unit};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FigureId {
    #[value(name = "1")]
    One,
    #[value(name = "2a")]
    TwoA,
    #[value(name = "2b")]
    TwoB,
    #[value(name = "3")]
    Three,
    #[value(name = "4")]
    Four,
}

impl FigureId {
    fn name(self) -> &'static str {
        match self {
            FigureId::One => "1",
            FigureId::TwoA => "2a",
            FigureId::TwoB => "2b",
            FigureId::Three => "3",
            FigureId::Four => "4",
        }
    }
}

#[derive(Parser)]
pub struct Args {
    /// Which figure's data to emit.
    #[arg(value_enum)]
    id: FigureId,
    /// Grid points along the swept axis (default 201; 51 for figure 4).
    #[arg(long)]
    points: Option<usize>,
    /// Output path (default `fig<id>.csv`).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Display entropic columns in bits instead of nats.
    #[arg(long)]
    bits: bool,
    /// Schmidt weight override for figures 2a/2b.
    #[arg(long)]
    lambda: Option<f64>,
    /// Basis angle override for figures 2a/2b.
    #[arg(long)]
    epsilon: Option<f64>,
    /// Orders for figure 4's boundary curves.
    #[arg(long, value_delimiter = ',')]
    q_list: Option<Vec<f64>>,
    /// Angular tolerance of figure 1's minimizer.
    #[arg(long)]
    tol: Option<f64>,
}

fn linspace(n: usize, max: f64) -> Vec<f64> {
    (0..n).map(|i| i as f64 / (n - 1) as f64 * max).collect()
}

pub fn run(args: Args, file: &FileConfig) -> Result<(), CliError> {
    let default_points = if args.id == FigureId::Four { 51 } else { 201 };
    let points = resolve(args.points, file, "points", default_points)?;
    if points < 2 {
        return Err(CliError::Usage(format!(
            "points = {points} is outside [2, inf)"
        )));
    }
    let unit = Unit {
        bits: args.bits || file.get::<String>("unit")?.as_deref() == Some("bits"),
    };
    let tol = resolve(args.tol, file, "tol", 1e-9)?;
    let out = match args.out {
        Some(p) => p,
        None => file
            .get::<PathBuf>("out")?
            .unwrap_or_else(|| PathBuf::from(format!("fig{}.csv", args.id.name()))),
    };

    let record = match args.id {
        FigureId::One => figure1(points, tol, unit)?,
        FigureId::TwoA | FigureId::TwoB => {
            let default_eps = if args.id == FigureId::TwoA {
                PI / 4.2
            } else {
                PI / 6.0
            };
            let lambda = resolve(args.lambda, file, "lambda", 0.1)?;
            let epsilon = resolve(args.epsilon, file, "epsilon", default_eps)?;
            figure2(args.id.name(), points, lambda, epsilon, unit)?
        }
        FigureId::Three => figure3(points, unit)?,
        FigureId::Four => {
            let q_list = match args.q_list {
                Some(qs) => qs,
                None => file
                    .get_list("q_list")?
                    .unwrap_or_else(|| vec![0.5, 1.0, 1.5, 2.0]),
            };
            figure4(points, &q_list)?
        }
    };

    record.write_file(&out)?;
    eprintln!("wrote {}", out.display());
    Ok(())
}

/// Numerically optimal conditional sum and the state-independent bounds as a
/// function of epsilon at lambda = 0, q = 1.
fn figure1(points: usize, tol: f64, unit: Unit) -> Result<OutputRecord, CliError> {
    let order = EntropyOrder::shannon();
    let eps_grid = linspace(points, FRAC_PI_2);
    let rows: Vec<Result<Vec<String>, CliError>> = eps_grid
        .par_iter()
        .map(|&eps| {
            let c = overlap_c(eps)?;
            let optimal = minimize_conditional_sum(0.0, eps, order, tol)?.min_value;
            Ok(vec![
                sig12(eps),
                sig12(unit.scale(optimal)),
                sig12(unit.scale(bound_mu(c)?)),
                sig12(unit.scale(bound_maj2(c)?)),
                sig12(unit.scale(bound_kpp_tsallis(0.0, c, order)?)),
            ])
        })
        .collect();
    let mut record = OutputRecord::new(
        format!(
            "entropic-bounds figure 1 lambda=0 q=1 points={points} tol={tol} unit={}",
            unit.name()
        ),
        &["epsilon", "optimal", "b_mu", "b_maj2", "b_kpp"],
    );
    for row in rows {
        record.push_row(row?);
    }
    Ok(record)
}

/// Exact sum, theta-form bound and the memory-assisted bound as a function
/// of theta at fixed (lambda, epsilon), q = 1.
fn figure2(
    name: &str,
    points: usize,
    lambda: f64,
    epsilon: f64,
    unit: Unit,
) -> Result<OutputRecord, CliError> {
    let order = EntropyOrder::shannon();
    let c = overlap_c(epsilon)?;
    let bccrr = bound_bccrr(c, lambda)?;
    let mut record = OutputRecord::new(
        format!(
            "entropic-bounds figure {name} lambda={lambda} epsilon={epsilon} q=1 points={points} unit={}",
            unit.name()
        ),
        &["theta", "exact", "b_theta", "b_bccrr"],
    );
    for theta in linspace(points, FRAC_PI_2) {
        let s = Scenario::new(lambda, theta, epsilon, order)?;
        record.push_row(vec![
            sig12(theta),
            sig12(unit.scale(conditional_sum(&s))),
            sig12(unit.scale(bound_state_dependent(lambda, theta, epsilon, order)?)),
            sig12(unit.scale(bccrr)),
        ]);
    }
    Ok(record)
}

/// Exact sum, theta-form bound and the memory-assisted bound as a function
/// of lambda at epsilon = pi/8, theta = pi/2 - epsilon/2, q = 1.
fn figure3(points: usize, unit: Unit) -> Result<OutputRecord, CliError> {
    let order = EntropyOrder::shannon();
    let epsilon = PI / 8.0;
    let theta = FRAC_PI_2 - epsilon / 2.0;
    let c = overlap_c(epsilon)?;
    let mut record = OutputRecord::new(
        format!(
            "entropic-bounds figure 3 epsilon={epsilon} theta={theta} q=1 points={points} unit={}",
            unit.name()
        ),
        &["lambda", "exact", "b_theta", "b_bccrr"],
    );
    for lambda in linspace(points, 1.0) {
        let s = Scenario::new(lambda, theta, epsilon, order)?;
        record.push_row(vec![
            sig12(lambda),
            sig12(unit.scale(conditional_sum(&s))),
            sig12(unit.scale(bound_state_dependent(lambda, theta, epsilon, order)?)),
            sig12(unit.scale(bound_bccrr(c, lambda)?)),
        ]);
    }
    Ok(record)
}

/// Critical overlap c*(lambda) of the boundary condition per order; cells
/// are empty where the condition does not change sign.
fn figure4(points: usize, q_list: &[f64]) -> Result<OutputRecord, CliError> {
    let orders: Vec<EntropyOrder> = q_list
        .iter()
        .map(|&q| EntropyOrder::new(q).map_err(CliError::from))
        .collect::<Result<_, _>>()?;
    let names: Vec<String> = q_list.iter().map(|q| format!("c_star_q{q}")).collect();
    let header: Vec<&str> = std::iter::once("lambda")
        .chain(names.iter().map(String::as_str))
        .collect();
    let mut record = OutputRecord::new(
        format!(
            "entropic-bounds figure 4 points={points} q={}",
            q_list
                .iter()
                .map(f64::to_string)
                .collect::<Vec<_>>()
                .join(",")
        ),
        &header,
    );
    for lambda in linspace(points, 0.5) {
        let mut row = vec![sig12(lambda)];
        for &order in &orders {
            let curve = boundary_curve(order, &[lambda])?;
            row.push(opt_sig12(curve.points.first().map(|&(_, c)| c)));
        }
        record.push_row(row);
    }
    Ok(record)
}
