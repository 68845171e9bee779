use clap::Parser;
use entropic_bounds::bounds::all_bounds;
use entropic_bounds::scenario::{conditional_sum, overlap_c, Scenario};
use entropic_bounds::EntropyOrder;

use crate::config::{CliError, FileConfig};
use crate::output::{opt_sig12, sig12, OutputRecord, Unit};

#[derive(Parser)]
pub struct Args {
    /// Schmidt weight, in [0, 1].
    #[arg(long)]
    lambda: f64,
    /// First measurement angle in radians, in [0, pi/2].
    #[arg(long)]
    theta: f64,
    /// Angle between the two measurement bases in radians, in [0, pi/2].
    #[arg(long)]
    epsilon: f64,
    /// Entropic order.
    #[arg(long)]
    q: f64,
    /// Display entropic outputs in bits instead of nats.
    #[arg(long)]
    bits: bool,
}

pub fn run(args: Args, file: &FileConfig) -> Result<(), CliError> {
    let unit = Unit {
        bits: args.bits || file.get::<String>("unit")?.as_deref() == Some("bits"),
    };
    let order = EntropyOrder::new(args.q)?;
    let scenario = Scenario::new(args.lambda, args.theta, args.epsilon, order)?;
    let exact = conditional_sum(&scenario);
    let c = overlap_c(args.epsilon)?;
    let bounds = all_bounds(&scenario)?;

    let mut record = OutputRecord::new(
        format!(
            "entropic-bounds evaluate lambda={} theta={} epsilon={} q={} unit={}",
            args.lambda,
            args.theta,
            args.epsilon,
            args.q,
            unit.name()
        ),
        &[
            "exact",
            "c",
            "b_deutsch",
            "b_mu",
            "b_maj2",
            "b_bccrr",
            "b_kpp",
            "b_theta",
            "analytic_min",
        ],
    );
    record.push_row(vec![
        sig12(unit.scale(exact)),
        sig12(c),
        sig12(unit.scale(bounds.b_deutsch)),
        sig12(unit.scale(bounds.b_mu)),
        sig12(unit.scale(bounds.b_maj2)),
        opt_sig12(bounds.b_bccrr.map(|v| unit.scale(v))),
        sig12(unit.scale(bounds.b_kpp)),
        opt_sig12(bounds.b_theta.map(|v| unit.scale(v))),
        opt_sig12(bounds.analytic_min.map(|v| unit.scale(v))),
    ]);
    record.print();
    Ok(())
}
