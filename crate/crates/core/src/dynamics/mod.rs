//! Channel trajectories generated by phase-covariant time-local generators.
//!
//! With `Γ_k(t) = ∫₀ᵗ γ_k` and `Γ = Γ₊ + Γ₋`, the dynamical map at time `t` is
//!
//! ```text
//! λ₁(t) = exp(-½(Γ₊ + Γ₋ + Γ₃))
//! λ₃(t) = exp(-Γ)
//! λ★(t) = ∫₀ᵗ (γ₊ − γ₋)(τ) exp(-(Γ(t) − Γ(τ))) dτ
//! ```
//!
//! `λ★` is carried forward interval by interval,
//! `λ★(t') = e^{-(Γ(t')−Γ(t))} λ★(t) + ∫_t^{t'} …`, so only differences of
//! `Γ` are ever exponentiated and the weight `exp(Γ)` cannot overflow.

pub mod quadrature;
mod schedule;

use std::cell::RefCell;

use serde::{Deserialize, Serialize};

pub use schedule::{Rate, RateSchedule};

use crate::channel::PhaseCovChannel;
use crate::error::DynamicsError;
use quadrature::integrate_piecewise;

pub const DEFAULT_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub channels: Vec<PhaseCovChannel>,
    /// `Γ₊(t)` at each grid time.
    pub gamma_plus_integral: Vec<f64>,
    pub gamma_minus_integral: Vec<f64>,
    pub gamma_3_integral: Vec<f64>,
}

impl Trajectory {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn last(&self) -> Option<(f64, PhaseCovChannel)> {
        Some((*self.times.last()?, *self.channels.last()?))
    }
}

/// Uniform grid of `grid` points on `[0, t_end]`, hitting `t_end` exactly.
pub fn uniform_grid(t_end: f64, grid: usize) -> Vec<f64> {
    let n = (grid - 1) as f64;
    let mut v: Vec<f64> = (0..grid).map(|i| t_end * i as f64 / n).collect();
    v[grid - 1] = t_end;
    v
}

/// Integrates `schedule` on a uniform grid of `grid` points over `[0, t_end]`.
///
/// Every reported value is accurate to roughly `tol` (the quadrature runs
/// at `tol / 100` per grid interval to leave room for accumulation).
pub fn evolve(
    schedule: &RateSchedule,
    t_end: f64,
    grid: usize,
    tol: f64,
) -> Result<Trajectory, DynamicsError> {
    if !(t_end > 0.0 && t_end.is_finite()) {
        return Err(DynamicsError::InvalidArgument(format!(
            "t_end must be positive, got {t_end}"
        )));
    }
    if grid < 2 {
        return Err(DynamicsError::InvalidArgument(format!(
            "grid must be at least 2, got {grid}"
        )));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(DynamicsError::InvalidArgument(format!(
            "tol must be positive, got {tol}"
        )));
    }
    schedule.validate()?;

    let times = uniform_grid(t_end, grid);
    let splits = schedule.breakpoints();
    let quad_tol = tol * 1e-2 / (grid - 1) as f64;

    let mut gp = vec![0.0; grid];
    let mut gm = vec![0.0; grid];
    let mut g3 = vec![0.0; grid];
    let mut star = vec![0.0; grid];

    for k in 0..grid - 1 {
        let (a, b) = (times[k], times[k + 1]);
        let dp = schedule.integrate_rate(&schedule.gamma_plus, a, b, quad_tol)?;
        let dm = schedule.integrate_rate(&schedule.gamma_minus, a, b, quad_tol)?;
        let d3 = schedule.integrate_rate(&schedule.gamma_3, a, b, quad_tol)?;
        gp[k + 1] = gp[k] + dp;
        gm[k + 1] = gm[k] + dm;
        g3[k + 1] = g3[k] + d3;

        // Γ(b) − Γ(τ) for τ in [a, b], by quadrature of γ₊ + γ₋.
        let remaining = |tau: f64| -> Result<f64, DynamicsError> {
            integrate_piecewise(
                |s| schedule.total_population_rate(s),
                tau,
                b,
                &splits,
                quad_tol,
            )
        };
        let failure = RefCell::new(None);
        let source = integrate_piecewise(
            |tau| match remaining(tau) {
                Ok(g) => schedule.imbalance(tau) * (-g).exp(),
                Err(e) => {
                    failure.borrow_mut().get_or_insert(e);
                    f64::NAN
                }
            },
            a,
            b,
            &splits,
            quad_tol,
        );
        if let Some(e) = failure.into_inner() {
            return Err(e);
        }
        star[k + 1] = (-(dp + dm)).exp() * star[k] + source?;
    }

    let channels = (0..grid)
        .map(|k| {
            PhaseCovChannel::new(
                (-0.5 * (gp[k] + gm[k] + g3[k])).exp(),
                (-(gp[k] + gm[k])).exp(),
                star[k],
            )
        })
        .collect();

    Ok(Trajectory {
        times,
        channels,
        gamma_plus_integral: gp,
        gamma_minus_integral: gm,
        gamma_3_integral: g3,
    })
}

/// Region membership of one trajectory slice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SliceClass {
    pub pt: bool,
    pub positive: bool,
    pub cpt: bool,
    pub ebc: bool,
    pub tlg: bool,
}

impl SliceClass {
    pub fn of(c: &PhaseCovChannel, eps: f64) -> Self {
        Self {
            pt: c.in_positivity_region(eps),
            positive: c.is_positive(eps),
            cpt: c.is_cpt(eps),
            ebc: c.is_ebc(eps),
            tlg: c.is_tlg(),
        }
    }
}

/// Classifies every slice. `eps` should be at least the integration
/// tolerance: semigroups with a vanishing rate sit exactly on the CPT
/// boundary.
pub fn classify_trajectory(traj: &Trajectory, eps: f64) -> Vec<SliceClass> {
    traj.channels
        .iter()
        .map(|c| SliceClass::of(c, eps))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProbeResult {
    pub time: f64,
    pub distance: f64,
    pub channel: PhaseCovChannel,
}

/// Grid time whose channel is nearest to `target` in max-abs parameter
/// distance. Illustrates what a schedule reaches; it does not search over
/// schedules.
pub fn reachability_probe(
    schedule: &RateSchedule,
    target: &PhaseCovChannel,
    t_end: f64,
    grid: usize,
    tol: f64,
) -> Result<ProbeResult, DynamicsError> {
    if !target.is_cpt(tol) {
        return Err(DynamicsError::InvalidArgument(format!(
            "target {target:?} is not a channel"
        )));
    }
    let traj = evolve(schedule, t_end, grid, tol)?;
    let (k, distance) = traj
        .channels
        .iter()
        .map(|c| c.distance(target))
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("grid has at least two points");
    Ok(ProbeResult {
        time: traj.times[k],
        distance,
        channel: traj.channels[k],
    })
}
