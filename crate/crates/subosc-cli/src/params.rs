//! Job parameters: the serializable record behind every subcommand, the
//! flag/config merge, and resolution into a concrete synthesis job.

use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use subosc::{
    band_mapping, best_remainder_bound, check_feasibility, flatness_bound, plan_synthesis,
    presets, taylor_product, BandIntent, Envelope, Interval, PlanDiagnostics, SelectConfig,
    SplitMode, SynthesisPlan, TargetKind,
};

use crate::CliError;

/// One job's worth of knobs. Every field is optional so a config file and
/// command-line flags can each fill in any subset; flags win field by field.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct JobParams {
    pub preset: Option<String>,
    pub target: Option<TargetKind>,
    pub omega: Option<f64>,
    pub delta: Option<f64>,
    pub order: Option<usize>,
    pub interval: Option<(f64, f64)>,
    pub epsilon: Option<f64>,
    pub band: Option<(f64, f64)>,
    pub mode: Option<SplitMode>,
    pub force: bool,
    pub grid_density: Option<f64>,
    pub window: Option<f64>,
}

impl JobParams {
    /// Field-wise overlay: values present in `self` shadow `base`.
    pub fn over(self, base: JobParams) -> JobParams {
        JobParams {
            preset: self.preset.or(base.preset),
            target: self.target.or(base.target),
            omega: self.omega.or(base.omega),
            delta: self.delta.or(base.delta),
            order: self.order.or(base.order),
            interval: self.interval.or(base.interval),
            epsilon: self.epsilon.or(base.epsilon),
            band: self.band.or(base.band),
            mode: self.mode.or(base.mode),
            force: self.force || base.force,
            grid_density: self.grid_density.or(base.grid_density),
            window: self.window.or(base.window),
        }
    }
}

pub fn load_config(path: &Path) -> Result<JobParams, CliError> {
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
}

pub fn parse_mode(s: &str) -> Result<SplitMode, CliError> {
    match s {
        "one-sided" => Ok(SplitMode::OneSided),
        "two-sided-half" => Ok(SplitMode::TwoSidedHalf),
        "two-sided-conjugate" | "two-sided-conj" => Ok(SplitMode::TwoSidedConjugate),
        other => Err(CliError::Config(format!(
            "unknown mode {other:?}; expected one-sided, two-sided-half, or two-sided-conjugate"
        ))),
    }
}

/// `--target` accepts the bare word `constant` (the unit flat top) or a JSON
/// record such as `{"kind":"sinusoid","frequency":1.5}`.
pub fn parse_target(s: &str) -> Result<TargetKind, CliError> {
    if s == "constant" {
        return Ok(TargetKind::Constant {
            value: Complex64::new(1.0, 0.0),
        });
    }
    serde_json::from_str(s).map_err(|e| {
        CliError::Config(format!(
            "target must be the word \"constant\" or a JSON record like \
             {{\"kind\":\"gaussian\",\"width\":1.0}}: {e}"
        ))
    })
}

/// Order-search settings, with the `SUBOSC_NMAX` cap applied when set.
pub fn select_config() -> Result<SelectConfig, CliError> {
    let mut config = SelectConfig::default();
    if let Ok(v) = std::env::var("SUBOSC_NMAX") {
        config.max_order = v.trim().parse().map_err(|_| {
            CliError::Config(format!("SUBOSC_NMAX must be a nonnegative integer, got {v:?}"))
        })?;
    }
    Ok(config)
}

/// A fully resolved job: the target, a concrete plan, and output knobs.
pub struct Job {
    pub kind: TargetKind,
    pub plan: SynthesisPlan,
    pub mode: SplitMode,
    pub force: bool,
    /// Samples per period (waveform grids) or per spectral piece.
    pub grid_density: f64,
    /// Half-width of the output or survey window, when requested.
    pub window: Option<f64>,
}

pub fn resolve(params: &JobParams) -> Result<Job, CliError> {
    let preset = match &params.preset {
        Some(name) => Some(presets::by_name(name).ok_or_else(|| {
            CliError::Config(format!(
                "unknown preset {name:?}; known presets: {}",
                presets::names().join(", ")
            ))
        })?),
        None => None,
    };

    let kind = params
        .target
        .clone()
        .or_else(|| preset.as_ref().map(|p| p.kind.clone()))
        .ok_or_else(|| CliError::Config("a target is required: pass --target or --preset".into()))?;
    let mode = params
        .mode
        .or_else(|| preset.as_ref().map(|p| p.mode))
        .unwrap_or(SplitMode::OneSided);

    let overridden = params.omega.is_some()
        || params.delta.is_some()
        || params.order.is_some()
        || params.interval.is_some()
        || params.epsilon.is_some()
        || params.band.is_some();
    let plan = match (&preset, overridden) {
        (Some(p), false) => p.plan.clone(),
        _ => build_plan(params, &kind, preset.as_ref().map(|p| &p.plan))?,
    };

    Ok(Job {
        kind,
        plan,
        mode,
        force: params.force,
        grid_density: params.grid_density.unwrap_or(50.0),
        window: params.window,
    })
}

fn build_plan(
    params: &JobParams,
    kind: &TargetKind,
    fallback: Option<&SynthesisPlan>,
) -> Result<SynthesisPlan, CliError> {
    // A band request fixes carrier and dilation together; explicit --omega
    // or --delta otherwise, falling back to the preset's values.
    let (omega, delta, band_note) = if let Some((w1, w2)) = params.band {
        if params.omega.is_some() {
            return Err(CliError::Config(
                "band and omega are mutually exclusive: the band determines the carrier".into(),
            ));
        }
        let intent = if w1 * w2 > 0.0 {
            BandIntent::Bandpass
        } else {
            BandIntent::Superoscillation
        };
        let delta0 = params
            .delta
            .unwrap_or_else(|| (std::f64::consts::TAU / (w2 - w1)).max(1.0));
        let mapping = band_mapping((w1, w2), intent, delta0)?;
        let note = (mapping.time_scale != 1.0).then(|| {
            format!(
                "band mapped with time scale {}: samples are in scaled time",
                mapping.time_scale
            )
        });
        (mapping.omega, mapping.dilation, note)
    } else {
        let omega = params
            .omega
            .or(fallback.map(|p| p.omega))
            .ok_or_else(|| CliError::Config("omega is required: pass --omega, --band, or --preset".into()))?;
        let delta = params
            .delta
            .or(fallback.map(|p| p.dilation))
            .ok_or_else(|| CliError::Config("delta is required: pass --delta, --band, or --preset".into()))?;
        (omega, delta, None)
    };
    let interval = match params.interval {
        Some((a, b)) => Interval::new(a, b)?,
        None => fallback
            .map(|p| p.interval)
            .ok_or_else(|| CliError::Config("an interval is required: pass --interval A B or --preset".into()))?,
    };
    let config = select_config()?;

    let mut plan = if let Some(epsilon) = params.epsilon {
        if params.order.is_some() {
            return Err(CliError::Config(
                "epsilon and order are mutually exclusive: the budget selects the order".into(),
            ));
        }
        plan_synthesis(kind, interval, epsilon, omega, delta, &config)?
    } else {
        let order = params
            .order
            .or(fallback.map(|p| p.order))
            .ok_or_else(|| {
                CliError::Config("either epsilon (budgeted) or order (fixed) is required".into())
            })?;
        fixed_order_plan(kind, interval, order, omega, delta, &config)?
    };
    if let Some(note) = band_note {
        plan.diagnostics.notes.push(note);
    }
    Ok(plan)
}

/// Builds a plan around a caller-chosen order instead of a budget search.
/// The recorded budgets are still certified: `eps1` is the radius-optimized
/// tail bound at that order and `eps2` the envelope sag over the window.
fn fixed_order_plan(
    kind: &TargetKind,
    interval: Interval,
    order: usize,
    omega: f64,
    delta: f64,
    config: &SelectConfig,
) -> Result<SynthesisPlan, CliError> {
    if !(omega.is_finite() && omega >= 0.0) {
        return Err(CliError::Config(format!(
            "omega must be finite and nonnegative, got {omega}"
        )));
    }
    let target = kind.at(interval.midpoint())?;
    let rate = Complex64::new(0.0, omega);
    let eps1 = best_remainder_bound(&target, rate, order, interval.half_width(), config)?;
    let poly = taylor_product(&target, rate, order)?;
    let envelope = Envelope::new(order + 1, delta)?;
    let eps2 = flatness_bound(&poly, &envelope, interval);
    let feasibility = check_feasibility(omega, delta, order, interval);
    Ok(SynthesisPlan {
        omega,
        order,
        dilation: delta,
        interval,
        eps1,
        eps2,
        feasible: feasibility.holds,
        diagnostics: PlanDiagnostics {
            truncation_bound: eps1,
            flatness: eps2,
            min_half_width: feasibility.min_half_width,
            max_half_width: feasibility.max_half_width,
            dilation_doublings: 0,
            notes: vec!["order fixed by request, not chosen from a budget".into()],
        },
    })
}

/// Sweep grids: list-valued axes over the same vocabulary. Axes not given
/// fall back to the preset's single value.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SweepParams {
    pub preset: Option<String>,
    pub target: Option<TargetKind>,
    pub orders: Vec<usize>,
    pub deltas: Vec<f64>,
    pub omegas: Vec<f64>,
    pub half_widths: Vec<f64>,
    pub interval: Option<(f64, f64)>,
    pub mode: Option<SplitMode>,
    pub grid_density: Option<f64>,
    pub window: Option<f64>,
}

impl SweepParams {
    pub fn over(self, base: SweepParams) -> SweepParams {
        fn keep<T>(a: Vec<T>, b: Vec<T>) -> Vec<T> {
            if a.is_empty() {
                b
            } else {
                a
            }
        }
        SweepParams {
            preset: self.preset.or(base.preset),
            target: self.target.or(base.target),
            orders: keep(self.orders, base.orders),
            deltas: keep(self.deltas, base.deltas),
            omegas: keep(self.omegas, base.omegas),
            half_widths: keep(self.half_widths, base.half_widths),
            interval: self.interval.or(base.interval),
            mode: self.mode.or(base.mode),
            grid_density: self.grid_density.or(base.grid_density),
            window: self.window.or(base.window),
        }
    }
}

pub fn load_sweep_config(path: &Path) -> Result<SweepParams, CliError> {
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
}

/// One cell of a sweep, resolved to a fixed-order plan.
pub struct SweepCell {
    pub half_width: f64,
    pub plan: SynthesisPlan,
}

pub struct Sweep {
    pub kind: TargetKind,
    pub mode: SplitMode,
    pub cells: Vec<SweepCell>,
    pub grid_density: f64,
    pub survey_half_width: f64,
}

pub fn resolve_sweep(params: &SweepParams) -> Result<Sweep, CliError> {
    let preset = match &params.preset {
        Some(name) => Some(presets::by_name(name).ok_or_else(|| {
            CliError::Config(format!(
                "unknown preset {name:?}; known presets: {}",
                presets::names().join(", ")
            ))
        })?),
        None => None,
    };
    let kind = params
        .target
        .clone()
        .or_else(|| preset.as_ref().map(|p| p.kind.clone()))
        .ok_or_else(|| CliError::Config("a target is required: pass --target or --preset".into()))?;
    let mode = params
        .mode
        .or_else(|| preset.as_ref().map(|p| p.mode))
        .unwrap_or(SplitMode::OneSided);
    let base = preset.as_ref().map(|p| &p.plan);

    let axis = |given: &[f64], fallback: Option<f64>, what: &str| -> Result<Vec<f64>, CliError> {
        if !given.is_empty() {
            return Ok(given.to_vec());
        }
        fallback
            .map(|v| vec![v])
            .ok_or_else(|| CliError::Config(format!("{what} is required: pass --{what} or --preset")))
    };
    let orders = if !params.orders.is_empty() {
        params.orders.clone()
    } else {
        vec![base
            .map(|p| p.order)
            .ok_or_else(|| CliError::Config("order is required: pass --order or --preset".into()))?]
    };
    let deltas = axis(&params.deltas, base.map(|p| p.dilation), "delta")?;
    let omegas = axis(&params.omegas, base.map(|p| p.omega), "omega")?;
    let interval = match params.interval {
        Some((a, b)) => Some(Interval::new(a, b)?),
        None => base.map(|p| p.interval),
    };
    let half_widths = if !params.half_widths.is_empty() {
        params.half_widths.clone()
    } else {
        vec![interval
            .ok_or_else(|| {
                CliError::Config("a window is required: pass --half-width, --interval, or --preset".into())
            })?
            .half_width()]
    };
    let center = interval.map(|w| w.midpoint()).unwrap_or(0.0);

    let config = select_config()?;
    let mut cells = Vec::new();
    for &order in &orders {
        for &delta in &deltas {
            for &omega in &omegas {
                for &hw in &half_widths {
                    let window = Interval::new(center - hw, center + hw)?;
                    let plan = fixed_order_plan(&kind, window, order, omega, delta, &config)?;
                    cells.push(SweepCell {
                        half_width: hw,
                        plan,
                    });
                }
            }
        }
    }
    Ok(Sweep {
        kind,
        mode,
        cells,
        grid_density: params.grid_density.unwrap_or(50.0),
        survey_half_width: params.window.unwrap_or(500.0),
    })
}
