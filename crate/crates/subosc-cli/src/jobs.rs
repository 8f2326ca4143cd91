//! The five subcommand bodies: plan, synth, spectrum, verify, sweep.

use serde::Serialize;
use subosc::{
    assemble, function_spectrum, measure_dynamic_range, measure_error, verify, BandpassFunction,
    SpectrumJump, SplitMode, SynthesisPlan, TargetKind,
};

use crate::emit::{csv_table, fnum, json_doc, json_table, write_sidecar, OutFormat, Output};
use crate::params::{Job, Sweep};
use crate::plot::{document, panel, Series};
use crate::CliError;

/// The planning document: enough to rerun the same synthesis elsewhere.
#[derive(Serialize)]
struct PlanDoc<'a> {
    target: &'a TargetKind,
    mode: SplitMode,
    plan: &'a SynthesisPlan,
}

pub fn run_plan(job: &Job, out: &Output, format: OutFormat) -> Result<(), CliError> {
    if format != OutFormat::Json {
        return Err(CliError::Config("plan emits json only".into()));
    }
    let doc = PlanDoc {
        target: &job.kind,
        mode: job.mode,
        plan: &job.plan,
    };
    out.write(&json_doc(&doc)?)
}

/// Uniform sample grid over the requested window, dense against the fastest
/// band frequency. Returns (t, value, error) triples; the error is measured
/// against the target itself.
fn sample_grid(job: &Job, f: &BandpassFunction) -> Result<Vec<(f64, num_complex::Complex64, f64)>, CliError> {
    let target = job.kind.at(f.center())?;
    let center = job.plan.interval.midpoint();
    let half = job.window.unwrap_or_else(|| job.plan.interval.half_width());
    if !(half.is_finite() && half > 0.0) {
        return Err(CliError::Config(format!(
            "window half-width must be positive, got {half}"
        )));
    }
    let fastest = f.max_rotation() + std::f64::consts::PI / job.plan.dilation;
    let period = std::f64::consts::TAU / fastest;
    let density = job.grid_density.max(2.0);
    let n = ((2.0 * half) / (period / density)).ceil() as usize;
    let n = n.clamp(2, 20_000_000);
    let (lo, hi) = (center - half, center + half);
    let mut rows = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let t = lo + (hi - lo) * i as f64 / n as f64;
        let v = f.eval(t);
        let err = (v - target.eval(t)).norm();
        rows.push((t, v, err));
    }
    Ok(rows)
}

const SYNTH_COLUMNS: [&str; 5] = ["t", "re", "im", "abs", "log10_abs_error"];

pub fn run_synth(job: &Job, out: &Output, format: OutFormat) -> Result<(), CliError> {
    let f = assemble(&job.plan, &job.kind, job.mode, job.force)?;
    let samples = sample_grid(job, &f)?;
    let rows: Vec<Vec<f64>> = samples
        .iter()
        .map(|(t, v, err)| vec![*t, v.re, v.im, v.norm(), err.log10()])
        .collect();
    match format {
        OutFormat::Csv => out.write(&csv_table(&SYNTH_COLUMNS, &rows)),
        OutFormat::Json => out.write(&json_table(&SYNTH_COLUMNS, &rows)?),
        OutFormat::Svg => {
            let re: Vec<(f64, f64)> = samples.iter().map(|(t, v, _)| (*t, v.re)).collect();
            let im: Vec<(f64, f64)> = samples.iter().map(|(t, v, _)| (*t, v.im)).collect();
            let log_err: Vec<(f64, f64)> =
                samples.iter().map(|(t, _, e)| (*t, e.log10())).collect();
            let title = format!(
                "waveform: order {}, dilation {}, carrier {}",
                job.plan.order,
                fnum(job.plan.dilation),
                fnum(job.plan.omega)
            );
            let svg = document(
                |buf| {
                    panel(
                        buf,
                        0.0,
                        360.0,
                        &title,
                        "value",
                        &[
                            Series {
                                label: "re",
                                color: "#1f77b4",
                                points: &re,
                            },
                            Series {
                                label: "im",
                                color: "#d62728",
                                points: &im,
                            },
                        ],
                    );
                    panel(
                        buf,
                        360.0,
                        280.0,
                        "deviation from the target",
                        "log10 |error|",
                        &[Series {
                            label: "log10 error",
                            color: "#444444",
                            points: &log_err,
                        }],
                    );
                },
                640.0,
            );
            out.write(&svg)
        }
    }
}

const SPECTRUM_COLUMNS: [&str; 4] = ["omega", "re", "im", "abs"];

#[derive(Serialize)]
struct PartMeta<'a> {
    band_shift: f64,
    support: (f64, f64),
    knots: &'a [f64],
    discontinuities: &'a [SpectrumJump],
}

#[derive(Serialize)]
struct SpectrumMeta<'a> {
    support: (f64, f64),
    energy: f64,
    parts: Vec<PartMeta<'a>>,
}

pub fn run_spectrum(job: &Job, out: &Output, format: OutFormat) -> Result<(), CliError> {
    let f = assemble(&job.plan, &job.kind, job.mode, job.force)?;
    let set = function_spectrum(&f)?;
    let (slo, shi) = set.support();
    // A quarter of the support width of exact zeros on each side makes the
    // band edges visible in the data.
    let pad = 0.25 * (shi - slo);
    let (lo, hi) = (slo - pad, shi + pad);
    let spacing = {
        let k = set.parts()[0].knots();
        k[1] - k[0]
    };
    let density = job.grid_density.max(2.0);
    let n = (((hi - lo) / (spacing / density)).ceil() as usize).clamp(2, 5_000_000);
    let mut rows = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let w = lo + (hi - lo) * i as f64 / n as f64;
        let v = set.eval(w);
        rows.push(vec![w, v.re, v.im, v.norm()]);
    }

    let meta = SpectrumMeta {
        support: (slo, shi),
        energy: set.energy(),
        parts: set
            .parts()
            .iter()
            .map(|p| PartMeta {
                band_shift: p.band_shift(),
                support: p.support(),
                knots: p.knots(),
                discontinuities: p.discontinuities(),
            })
            .collect(),
    };

    match format {
        OutFormat::Csv => {
            out.write(&csv_table(&SPECTRUM_COLUMNS, &rows))?;
            if let Some(path) = out.sidecar("meta.json") {
                write_sidecar(&path, &json_doc(&meta)?)?;
            }
            Ok(())
        }
        OutFormat::Json => {
            #[derive(Serialize)]
            struct SpectrumDoc<'a> {
                columns: &'a [&'a str],
                rows: &'a [Vec<f64>],
                meta: &'a SpectrumMeta<'a>,
            }
            out.write(&json_doc(&SpectrumDoc {
                columns: &SPECTRUM_COLUMNS,
                rows: &rows,
                meta: &meta,
            })?)
        }
        OutFormat::Svg => {
            let peak = rows.iter().map(|r| r[3]).fold(0.0f64, f64::max);
            let scale = if peak > 0.0 { peak } else { 1.0 };
            let mag: Vec<(f64, f64)> = rows.iter().map(|r| (r[0], r[3] / scale)).collect();
            let title = format!("spectrum magnitude, peak {}", fnum(peak));
            let svg = document(
                |buf| {
                    panel(
                        buf,
                        0.0,
                        420.0,
                        &title,
                        "|F| / peak",
                        &[Series {
                            label: "|F|",
                            color: "#1f77b4",
                            points: &mag,
                        }],
                    )
                },
                420.0,
            );
            out.write(&svg)
        }
    }
}

pub fn run_verify(job: &Job, out: &Output, format: OutFormat) -> Result<(), CliError> {
    if format != OutFormat::Json {
        return Err(CliError::Config("verify emits json only".into()));
    }
    let f = assemble(&job.plan, &job.kind, job.mode, job.force)?;
    let survey = job.window.unwrap_or(500.0);
    let report = verify(&f, &job.kind, &job.plan, job.mode, survey, job.grid_density)?;
    out.write(&json_doc(&report)?)
}

const SWEEP_COLUMNS: [&str; 9] = [
    "order",
    "dilation",
    "omega",
    "half_width",
    "feasible",
    "truncation_bound",
    "flatness",
    "sup_error",
    "dynamic_range_orders",
];

pub fn run_sweep(sweep: &Sweep, out: &Output, format: OutFormat) -> Result<(), CliError> {
    let mut rows = Vec::with_capacity(sweep.cells.len());
    for cell in &sweep.cells {
        // Infeasible cells are still assembled and measured; the row records
        // both the verdict and the empirical error.
        let f = assemble(&cell.plan, &sweep.kind, sweep.mode, true)?;
        let err = measure_error(&f, &sweep.kind, cell.plan.interval, sweep.grid_density)?;
        let dr = measure_dynamic_range(&f, cell.plan.interval, sweep.survey_half_width)?;
        rows.push(vec![
            cell.plan.order as f64,
            cell.plan.dilation,
            cell.plan.omega,
            cell.half_width,
            if cell.plan.feasible { 1.0 } else { 0.0 },
            cell.plan.eps1,
            cell.plan.eps2,
            err.sup_error,
            dr,
        ]);
    }
    match format {
        OutFormat::Csv => out.write(&csv_table(&SWEEP_COLUMNS, &rows)),
        OutFormat::Json => out.write(&json_table(&SWEEP_COLUMNS, &rows)?),
        OutFormat::Svg => Err(CliError::Config("sweep emits csv or json".into())),
    }
}
