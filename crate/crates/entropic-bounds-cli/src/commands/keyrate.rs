use std::f64::consts::{FRAC_1_SQRT_2, LN_2};

use clap::Parser;
use entropic_bounds::keyrate::{key_rate_lower_bound, positive_key, KeyRateInputs};

use crate::config::{CliError, FileConfig};
use crate::output::{sig12, OutputRecord, Unit};

/// Truncated decimals like 0.7071 or 0.6931 land just outside the closed
/// domains; inputs within this distance are clamped onto the boundary.
const INPUT_CLAMP: f64 = 1e-3;

#[derive(Parser)]
pub struct Args {
    /// Derive c, S(B) and S(A|B) from a pure Schmidt scenario (--lambda,
    /// --epsilon) instead of passing them directly.
    #[arg(long)]
    scenario: bool,
    /// Measurement overlap, in [sqrt(2)/2, 1].
    #[arg(long)]
    c: Option<f64>,
    /// Memory entropy S(B) in nats, in [0, ln 2].
    #[arg(long)]
    sb: Option<f64>,
    /// Conditional entropy S(A|B) in nats, in [-ln 2, ln 2].
    #[arg(long)]
    sab: Option<f64>,
    /// Channel entropy S(X|X') in nats, in [0, ln 2].
    #[arg(long)]
    sx: Option<f64>,
    /// Channel entropy S(Y|Y') in nats, in [0, ln 2].
    #[arg(long)]
    sy: Option<f64>,
    /// Schmidt weight (scenario mode).
    #[arg(long)]
    lambda: Option<f64>,
    /// Basis angle in radians (scenario mode).
    #[arg(long)]
    epsilon: Option<f64>,
    /// Display the bound in bits instead of nats.
    #[arg(long)]
    bits: bool,
}

fn require(name: &'static str, v: Option<f64>) -> Result<f64, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("missing required flag --{name}")))
}

fn clamp_near(v: f64, min: f64, max: f64) -> f64 {
    if v > min - INPUT_CLAMP && v < min {
        min
    } else if v > max && v < max + INPUT_CLAMP {
        max
    } else {
        v
    }
}

pub fn run(args: Args, file: &FileConfig) -> Result<(), CliError> {
    let unit = Unit {
        bits: args.bits || file.get::<String>("unit")?.as_deref() == Some("bits"),
    };
    let sx = clamp_near(require("sx", args.sx)?, 0.0, LN_2);
    let sy = clamp_near(require("sy", args.sy)?, 0.0, LN_2);
    let (comment, rate, positive) = if args.scenario {
        let lambda = require("lambda", args.lambda)?;
        let epsilon = require("epsilon", args.epsilon)?;
        let rate = entropic_bounds::keyrate::key_rate_for_scenario(lambda, epsilon, sx, sy)?;
        (
            format!("entropic-bounds keyrate scenario lambda={lambda} epsilon={epsilon} sx={sx} sy={sy} unit={}", unit.name()),
            rate,
            rate > 0.0,
        )
    } else {
        let c = clamp_near(require("c", args.c)?, FRAC_1_SQRT_2, 1.0);
        let sb = clamp_near(require("sb", args.sb)?, 0.0, LN_2);
        let sab = clamp_near(require("sab", args.sab)?, -LN_2, LN_2);
        let inputs = KeyRateInputs::new(c, sb, sab, sx, sy)?;
        (
            format!(
                "entropic-bounds keyrate c={c} sb={sb} sab={sab} sx={sx} sy={sy} unit={}",
                unit.name()
            ),
            key_rate_lower_bound(&inputs),
            positive_key(&inputs),
        )
    };

    let mut record = OutputRecord::new(comment, &["key_rate", "positive"]);
    record.push_row(vec![
        sig12(unit.scale(rate)),
        if positive { "1" } else { "0" }.to_string(),
    ]);
    record.print();
    Ok(())
}
