use serde_json::{json, Value};

use pdmwell_core::verify::suites::{geometric_sequence, run_suite};
use pdmwell_core::verify::limits::limit_energy_study;
use pdmwell_core::{PhysParams, WellModel};

use crate::args::{
    DensityArgs, Format, LimitStudyArgs, ModelArgs, ModelChoice, PhysArgs, SpectrumArgs, VerifyArgs,
};
use crate::output::{csv, fmt_f64, json_pretty};
use crate::CliError;

/// Rendered command output plus whether it represents a pass.
pub struct Rendered {
    pub text: String,
    pub pass: bool,
}

impl Rendered {
    fn ok(text: String) -> Self {
        Self { text, pass: true }
    }
}

fn phys(args: &PhysArgs) -> Result<PhysParams, CliError> {
    Ok(PhysParams::new(args.m0, args.omega, args.hbar)?)
}

fn build_model(args: &ModelArgs) -> Result<WellModel, CliError> {
    let phys = phys(&args.phys)?;
    match (args.model, args.b) {
        (ModelChoice::Semi, None) => Ok(WellModel::semiconfined(phys, args.a)?),
        (ModelChoice::Semi, Some(_)) => Err(CliError::Usage(
            "--b applies only to --model confined".into(),
        )),
        (ModelChoice::Confined, Some(b)) => Ok(WellModel::confined(phys, args.a, b)?),
        (ModelChoice::Confined, None) => {
            Err(CliError::Usage("--model confined requires --b".into()))
        }
    }
}

pub fn spectrum(args: &SpectrumArgs) -> Result<Rendered, CliError> {
    let model = build_model(&args.model)?;
    let table = model.spectrum_table(args.nmax);
    let text = match args.output.format {
        Format::Csv => csv(
            &["n", "energy"],
            table.iter().map(|l| vec![l.n.to_string(), fmt_f64(l.energy)]),
        ),
        Format::Json => json_pretty(&Value::Array(
            table
                .iter()
                .map(|l| json!({ "n": l.n, "energy": l.energy }))
                .collect(),
        )),
    };
    Ok(Rendered::ok(text))
}

pub fn density(args: &DensityArgs) -> Result<Rendered, CliError> {
    let model = build_model(&args.model)?;
    let rows = model.density_table(args.nmax, args.samples)?;
    let text = match args.output.format {
        Format::Csv => csv(
            &["x", "n", "psi", "density"],
            rows.iter().map(|r| {
                vec![
                    fmt_f64(r.x),
                    r.n.to_string(),
                    fmt_f64(r.psi),
                    fmt_f64(r.density),
                ]
            }),
        ),
        Format::Json => json_pretty(&Value::Array(
            rows.iter()
                .map(|r| json!({ "x": r.x, "n": r.n, "psi": r.psi, "density": r.density }))
                .collect(),
        )),
    };
    Ok(Rendered::ok(text))
}

pub fn verify(args: &VerifyArgs) -> Result<Rendered, CliError> {
    let model = build_model(&args.model)?;
    let report = run_suite(args.suite, &model, args.nmax)?;
    let mut text = report.to_json();
    text.push('\n');
    Ok(Rendered {
        text,
        pass: report.overall_pass,
    })
}

pub fn limit_study(args: &LimitStudyArgs) -> Result<Rendered, CliError> {
    let phys = phys(&args.phys)?;
    if !(args.b_start > args.a) {
        return Err(CliError::Usage(format!(
            "--b-start ({}) must exceed --a ({})",
            args.b_start, args.a
        )));
    }
    if !(args.b_factor > 1.0) || !args.b_factor.is_finite() {
        return Err(CliError::Usage(format!("--b-factor ({}) must be > 1", args.b_factor)));
    }
    if args.steps < 2 {
        return Err(CliError::Usage(format!("--steps ({}) must be >= 2", args.steps)));
    }
    let bs = geometric_sequence(args.b_start, args.b_factor, args.steps);
    let rows = limit_energy_study(&phys, args.a, args.n, &bs)?;
    let ratios: Vec<Option<f64>> = std::iter::once(None)
        .chain(rows.windows(2).map(|w| Some(w[0].error / w[1].error)))
        .collect();
    let text = match args.output.format {
        Format::Csv => csv(
            &["b", "energy_confined", "energy_semi", "error", "ratio_to_previous"],
            rows.iter().zip(&ratios).map(|(r, ratio)| {
                vec![
                    fmt_f64(r.b),
                    fmt_f64(r.energy_confined),
                    fmt_f64(r.energy_semi),
                    fmt_f64(r.error),
                    ratio.map(fmt_f64).unwrap_or_default(),
                ]
            }),
        ),
        Format::Json => json_pretty(&Value::Array(
            rows.iter()
                .zip(&ratios)
                .map(|(r, ratio)| {
                    json!({
                        "b": r.b,
                        "energy_confined": r.energy_confined,
                        "energy_semi": r.energy_semi,
                        "error": r.error,
                        "ratio_to_previous": ratio,
                    })
                })
                .collect(),
        )),
    };
    Ok(Rendered::ok(text))
}
