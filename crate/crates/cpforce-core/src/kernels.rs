//! Polarization-resolved response kernels of the real-dielectric half-space
//! and their endpoint data.
//!
//! `T` kernels carry the traveling (oscillatory) part, `A` kernels the
//! evanescent (exponentially damped) part. The conductor variants are the
//! `eps -> infinity` limits taken inside the kernels, before any
//! differentiation; large finite permittivities must never stand in for the
//! conductor.
//!
//! Endpoint values and derivatives up to third order are frozen as closed
//! forms (cross-checked against central finite differences in the tests);
//! the subtracted integrands that feed the closed-form frequency integrals
//! switch to Taylor series near `t = 0`, where direct evaluation loses all
//! significant digits to cancellation.

use crate::error::CpError;
use crate::quad::{integrate_panels, QuadResult, Tol};

/// Field polarization relative to the interface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Polarization {
    Parallel,
    Perpendicular,
}

impl Polarization {
    /// Trace weight: parallel counts twice (x and y), perpendicular once.
    pub fn weight(self) -> f64 {
        match self {
            Polarization::Parallel => 2.0,
            Polarization::Perpendicular => 1.0,
        }
    }

    pub const BOTH: [Polarization; 2] = [Polarization::Parallel, Polarization::Perpendicular];
}

/// Substrate model the kernels are evaluated for.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum KernelMedium {
    /// Real constant permittivity `eps >= 1`.
    Dielectric(f64),
    /// Symbolic `eps -> infinity` limit.
    Conductor,
}

impl KernelMedium {
    pub fn dielectric(eps: f64) -> Result<Self, CpError> {
        if !(eps >= 1.0 && eps.is_finite()) {
            return Err(CpError::Domain(format!(
                "kernels need eps >= 1, got {eps}"
            )));
        }
        Ok(KernelMedium::Dielectric(eps))
    }
}

/// Traveling-mode kernel `T_sigma(t)` on `t` in `[0, 1]`.
pub fn kernel_t(sigma: Polarization, t: f64, medium: KernelMedium) -> f64 {
    match medium {
        KernelMedium::Conductor => match sigma {
            Polarization::Parallel => -0.25 * (1.0 + t * t),
            Polarization::Perpendicular => 0.5 * (1.0 - t * t),
        },
        KernelMedium::Dielectric(eps) => {
            if eps == 1.0 {
                // no interface; the 0/0 at t = 0 resolves to 0
                return 0.0;
            }
            let s = (eps - 1.0 + t * t).sqrt();
            match sigma {
                Polarization::Parallel => {
                    0.25 * ((t - s) / (t + s) - t * t * (eps * t - s) / (eps * t + s))
                }
                Polarization::Perpendicular => {
                    0.5 * (1.0 - t * t) * (eps * t - s) / (eps * t + s)
                }
            }
        }
    }
}

/// Evanescent-mode kernel `A_sigma(t)` on `t` in `[0, 1]`; identically zero
/// for the conductor.
pub fn kernel_a(sigma: Polarization, t: f64, medium: KernelMedium) -> f64 {
    match medium {
        KernelMedium::Conductor => 0.0,
        KernelMedium::Dielectric(eps) => {
            let e1 = eps - 1.0;
            let sq = e1.sqrt();
            let root = (1.0 - t * t).max(0.0).sqrt();
            let denom = (eps * eps - 1.0) * t * t + 1.0;
            match sigma {
                Polarization::Parallel => {
                    0.5 * sq * ((2.0 * eps + 1.0) * e1 * t * t + 1.0) / denom * t * root
                }
                Polarization::Perpendicular => {
                    eps * sq * (e1 * t * t + 1.0) / denom * t * root
                }
            }
        }
    }
}

/// Weighted kernel sums `sum_sigma W_sigma K_sigma(t)`.
pub fn kernel_t_weighted(t: f64, medium: KernelMedium) -> f64 {
    2.0 * kernel_t(Polarization::Parallel, t, medium)
        + kernel_t(Polarization::Perpendicular, t, medium)
}

pub fn kernel_a_weighted(t: f64, medium: KernelMedium) -> f64 {
    2.0 * kernel_a(Polarization::Parallel, t, medium)
        + kernel_a(Polarization::Perpendicular, t, medium)
}

/// Taylor coefficients of `T_sigma` (orders 0..=6) and `A_sigma`
/// (odd orders 1, 3, 5) about `t = 0`.
#[derive(Debug, Clone, Copy)]
pub struct TaylorData {
    pub ct: [f64; 7],
    pub ca1: f64,
    pub ca3: f64,
    pub ca5: f64,
}

fn taylor(sigma: Polarization, medium: KernelMedium) -> TaylorData {
    match medium {
        KernelMedium::Conductor => match sigma {
            Polarization::Parallel => TaylorData {
                ct: [-0.25, 0.0, -0.25, 0.0, 0.0, 0.0, 0.0],
                ca1: 0.0,
                ca3: 0.0,
                ca5: 0.0,
            },
            Polarization::Perpendicular => TaylorData {
                ct: [0.5, 0.0, -0.5, 0.0, 0.0, 0.0, 0.0],
                ca1: 0.0,
                ca3: 0.0,
                ca5: 0.0,
            },
        },
        KernelMedium::Dielectric(e) => {
            let e1 = e - 1.0;
            let sq = e1.sqrt();
            let e1_32 = e1 * sq;
            let e1_52 = e1 * e1 * sq;
            let q4 = 8.0 * e.powi(4) - 8.0 * e.powi(3) - 4.0 * e * e;
            match sigma {
                Polarization::Parallel => TaylorData {
                    ct: [
                        -0.25,
                        0.5 / sq,
                        (e - 3.0) / (4.0 * e1),
                        -(2.0 * e * e - 2.0 * e - 1.0) / (4.0 * e1_32),
                        e * e / (2.0 * e1),
                        -(q4 + 4.0 * e + 1.0) / (16.0 * e1_52),
                        e * e * (e + 1.0) / (2.0 * e1),
                    ],
                    ca1: 0.5 * sq,
                    ca3: sq * (2.0 * e * e - 2.0 * e - 1.0) / 4.0,
                    ca5: -sq * (q4 + 4.0 * e + 1.0) / 16.0,
                },
                Polarization::Perpendicular => TaylorData {
                    ct: [
                        -0.5,
                        e / sq,
                        -(2.0 * e * e - e + 1.0) / (2.0 * e1),
                        e * (2.0 * e * e - 2.0 * e + 1.0) / (2.0 * e1_32),
                        -e.powi(3) / e1,
                        e * (q4 + 4.0 * e - 1.0) / (8.0 * e1_52),
                        -e.powi(3) * (e + 1.0) / e1,
                    ],
                    ca1: e * sq,
                    ca3: -e * sq * (2.0 * e * e - 2.0 * e + 1.0) / 2.0,
                    ca5: e * sq * (q4 + 4.0 * e - 1.0) / 8.0,
                },
            }
        }
    }
}

/// Endpoint values and derivatives of the kernels at `t = 0` and `t = 1`.
///
/// `degenerate` flags `eps = 1`, where every kernel vanishes identically.
#[derive(Debug, Clone, Copy)]
pub struct KernelEndpoints {
    pub t0: f64,
    pub dt0: f64,
    pub d2t0: f64,
    pub d3t0: f64,
    pub a0: f64,
    pub da0: f64,
    pub d3a0: f64,
    pub t1: f64,
    pub dt1: f64,
    pub d2t1: f64,
    pub d3t1: f64,
    pub degenerate: bool,
}

/// Closed-form endpoint data for one polarization.
pub fn kernel_endpoints(sigma: Polarization, medium: KernelMedium) -> KernelEndpoints {
    match medium {
        KernelMedium::Conductor => match sigma {
            Polarization::Parallel => KernelEndpoints {
                t0: -0.25,
                dt0: 0.0,
                d2t0: -0.5,
                d3t0: 0.0,
                a0: 0.0,
                da0: 0.0,
                d3a0: 0.0,
                t1: -0.5,
                dt1: -0.5,
                d2t1: -0.5,
                d3t1: 0.0,
                degenerate: false,
            },
            Polarization::Perpendicular => KernelEndpoints {
                t0: 0.5,
                dt0: 0.0,
                d2t0: -1.0,
                d3t0: 0.0,
                a0: 0.0,
                da0: 0.0,
                d3a0: 0.0,
                t1: 0.0,
                dt1: -1.0,
                d2t1: -1.0,
                d3t1: 0.0,
                degenerate: false,
            },
        },
        KernelMedium::Dielectric(e) => {
            if e == 1.0 {
                return KernelEndpoints {
                    t0: 0.0,
                    dt0: 0.0,
                    d2t0: 0.0,
                    d3t0: 0.0,
                    a0: 0.0,
                    da0: 0.0,
                    d3a0: 0.0,
                    t1: 0.0,
                    dt1: 0.0,
                    d2t1: 0.0,
                    d3t1: 0.0,
                    degenerate: true,
                };
            }
            let tay = taylor(sigma, medium);
            let r = e.sqrt();
            let (t1, dt1, d2t1, d3t1) = match sigma {
                Polarization::Parallel => (
                    (1.0 - r) / (2.0 * (r + 1.0)),
                    (1.0 - r) / (2.0 * (r + 1.0)),
                    (-r.powi(4) - r.powi(3) - 2.0 * r * r + 6.0 * r - 2.0)
                        / (2.0 * r.powi(3) * (r + 1.0)),
                    6.0 * (r - 1.0) * (2.0 * r - 1.0) / (r.powi(5) * (r + 1.0)),
                ),
                Polarization::Perpendicular => (
                    0.0,
                    (1.0 - r) / (1.0 + r),
                    -(r - 1.0) * (r + 4.0) / (r * (r + 1.0)),
                    6.0 * (r - 1.0) * (r * r - 2.0 * r + 3.0) / (r.powi(3) * (r + 1.0)),
                ),
            };
            KernelEndpoints {
                t0: tay.ct[0],
                dt0: tay.ct[1],
                d2t0: 2.0 * tay.ct[2],
                d3t0: 6.0 * tay.ct[3],
                a0: 0.0,
                da0: tay.ca1,
                d3a0: 6.0 * tay.ca3,
                t1,
                dt1,
                d2t1,
                d3t1,
                degenerate: false,
            }
        }
    }
}

/// Switch-over below which subtracted integrands use their Taylor series.
///
/// Chosen so the series truncation (coefficients grow like powers of eps)
/// stays below the direct-evaluation cancellation noise at the boundary.
fn series_cut(medium: KernelMedium) -> f64 {
    match medium {
        KernelMedium::Conductor => 1e-2,
        KernelMedium::Dielectric(e) => (0.02 / e).min(1e-2),
    }
}

/// Cut for the fourth-order subtracted integrand, whose noise floor rises
/// like 1/t^4: balances truncation `(eps t^2)^2` against noise
/// `eps_f64 / (eps t^4)`.
fn series_cut_g(medium: KernelMedium) -> f64 {
    match medium {
        KernelMedium::Conductor => 1e-2,
        KernelMedium::Dielectric(e) => 8e-3 / e.powf(0.375),
    }
}

/// `(A_sigma(t) - A'_sigma(0) t) / t^3`, regular at `t = 0`.
pub fn i1_subtracted(sigma: Polarization, t: f64, medium: KernelMedium) -> f64 {
    let tay = taylor(sigma, medium);
    if t < series_cut(medium) {
        tay.ca3 + tay.ca5 * t * t
    } else {
        (kernel_a(sigma, t, medium) - tay.ca1 * t) / (t * t * t)
    }
}

/// `(T_sigma(t) - T_sigma(0) - A_sigma(t)/(eps-1)) / t^2`, regular at 0.
///
/// For the conductor the `A/(eps-1)` piece is absent.
pub fn i2_subtracted(sigma: Polarization, t: f64, medium: KernelMedium) -> f64 {
    let tay = taylor(sigma, medium);
    match medium {
        KernelMedium::Conductor => {
            if t < series_cut(medium) {
                tay.ct[2]
            } else {
                (kernel_t(sigma, t, medium) - tay.ct[0]) / (t * t)
            }
        }
        KernelMedium::Dielectric(e) => {
            let e1 = e - 1.0;
            if t < series_cut(medium) {
                // t^1 terms cancel through (eps-1) T'(0) = A'(0)
                tay.ct[2]
                    + e * tay.ct[3] * t
                    + tay.ct[4] * t * t
                    + (tay.ct[5] - tay.ca5 / e1) * t.powi(3)
                    + tay.ct[6] * t.powi(4)
            } else {
                (kernel_t(sigma, t, medium) - tay.ct[0] - kernel_a(sigma, t, medium) / e1)
                    / (t * t)
            }
        }
    }
}

/// `(T - T(0) - T'(0) t - T''(0) t^2/2 + (A - A'(0) t)/(eps-1)^2) / t^4`,
/// regular at 0 because `T'''(0) = -A'''(0)/(eps-1)^2`.
pub fn g_subtracted(sigma: Polarization, t: f64, medium: KernelMedium) -> f64 {
    let tay = taylor(sigma, medium);
    match medium {
        KernelMedium::Conductor => {
            if t < series_cut(medium) {
                tay.ct[4]
            } else {
                (kernel_t(sigma, t, medium)
                    - tay.ct[0]
                    - tay.ct[1] * t
                    - tay.ct[2] * t * t)
                    / t.powi(4)
            }
        }
        KernelMedium::Dielectric(e) => {
            let e1sq = (e - 1.0) * (e - 1.0);
            if t < series_cut_g(medium) {
                tay.ct[4] + (tay.ct[5] + tay.ca5 / e1sq) * t + tay.ct[6] * t * t
            } else {
                (kernel_t(sigma, t, medium)
                    - tay.ct[0]
                    - tay.ct[1] * t
                    - tay.ct[2] * t * t
                    + (kernel_a(sigma, t, medium) - tay.ca1 * t) / e1sq)
                    / t.powi(4)
            }
        }
    }
}

/// Integrate `g(t)` over `t` in `[0, 1]` through the substitution
/// `t = 1 - u^2`, which removes the square-root endpoint the `A` kernels
/// carry at `t = 1`.
pub fn integrate_sqrt_endpoint<F: Fn(f64) -> f64>(g: F, extra_t_points: &[f64], tol: Tol) -> QuadResult {
    let mut pts: Vec<f64> = vec![0.0, 0.25, 0.5, 0.75, 1.0];
    for &t in extra_t_points {
        if t > 0.0 && t < 1.0 {
            pts.push((1.0 - t).sqrt());
        }
    }
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    pts.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
    integrate_panels(
        |u| 2.0 * u * g(1.0 - u * u),
        &pts,
        tol,
    )
}

/// `J_sigma = int_0^1 (A_sigma - A'_sigma(0) t)/t^3 dt`.
pub fn j_integral(sigma: Polarization, medium: KernelMedium, tol: Tol) -> QuadResult {
    if matches!(medium, KernelMedium::Conductor) {
        return QuadResult::zero();
    }
    integrate_sqrt_endpoint(|t| i1_subtracted(sigma, t, medium), &[], tol)
}

/// Bracket of the `omega^2`-moment closed form: `Ihat1_sigma * (-8 zbar^3)`.
///
/// `Ihat1_sigma = -(1/(8 zbar^3)) [ (pi/2) T''(0)
///                + 2 (eps-1)^{-3/2} (A'(0) - J_sigma) ]`.
pub fn i1_bracket(sigma: Polarization, medium: KernelMedium, tol: Tol) -> QuadResult {
    let ep = kernel_endpoints(sigma, medium);
    if ep.degenerate {
        return QuadResult::zero();
    }
    let t_term = std::f64::consts::FRAC_PI_2 * ep.d2t0;
    match medium {
        KernelMedium::Conductor => QuadResult {
            value: t_term,
            abs_err: 0.0,
            evals: 0,
            converged: true,
        },
        KernelMedium::Dielectric(e) => {
            let j = j_integral(sigma, medium, tol);
            let e1 = e - 1.0;
            QuadResult {
                value: t_term + 2.0 / e1.powf(1.5) * (ep.da0 - j.value),
                abs_err: 2.0 / e1.powf(1.5) * j.abs_err,
                evals: j.evals,
                converged: j.converged,
            }
        }
    }
}

/// Bracket of the `omega^1`-moment closed form:
/// `K_sigma = T(0) - int_0^1 (T - T(0) - A/(eps-1))/t^2 dt
///            + A'(0)/(eps-1) ln sqrt(eps-1)`.
pub fn i2_bracket(sigma: Polarization, medium: KernelMedium, tol: Tol) -> QuadResult {
    let ep = kernel_endpoints(sigma, medium);
    if ep.degenerate {
        return QuadResult::zero();
    }
    let integral = integrate_sqrt_endpoint(|t| i2_subtracted(sigma, t, medium), &[], tol);
    let log_term = match medium {
        KernelMedium::Conductor => 0.0,
        KernelMedium::Dielectric(e) => {
            let e1 = e - 1.0;
            ep.da0 / e1 * e1.sqrt().ln()
        }
    };
    QuadResult {
        value: ep.t0 - integral.value + log_term,
        abs_err: integral.abs_err,
        evals: integral.evals,
        converged: integral.converged,
    }
}

/// Long-distance coefficient function `g_sigma(eps)`:
/// `2T(0) + 3T'(0) + 3T''(0) + [3A'(0) - A'''(0) ln sqrt(eps-1)]/(eps-1)^2
///  - 6 int_0^1 g_subtracted dt`.
pub fn g_sigma(sigma: Polarization, medium: KernelMedium, tol: Tol) -> QuadResult {
    let ep = kernel_endpoints(sigma, medium);
    if ep.degenerate {
        return QuadResult::zero();
    }
    let integral = integrate_sqrt_endpoint(|t| g_subtracted(sigma, t, medium), &[], tol);
    let a_term = match medium {
        KernelMedium::Conductor => 0.0,
        KernelMedium::Dielectric(e) => {
            let e1 = e - 1.0;
            (3.0 * ep.da0 - ep.d3a0 * e1.sqrt().ln()) / (e1 * e1)
        }
    };
    QuadResult {
        value: 2.0 * ep.t0 + 3.0 * ep.dt0 + 3.0 * ep.d2t0 + a_term - 6.0 * integral.value,
        abs_err: 6.0 * integral.abs_err,
        evals: integral.evals,
        converged: integral.converged,
    }
}

/// Plain kernel moments `int_0^1 t^m K(t) dt`.
pub fn a_moment(sigma: Polarization, medium: KernelMedium, m: u32, tol: Tol) -> QuadResult {
    if matches!(medium, KernelMedium::Conductor) {
        return QuadResult::zero();
    }
    integrate_sqrt_endpoint(|t| t.powi(m as i32) * kernel_a(sigma, t, medium), &[], tol)
}

pub fn t_moment(sigma: Polarization, medium: KernelMedium, m: u32, tol: Tol) -> QuadResult {
    integrate_panels(
        |t| t.powi(m as i32) * kernel_t(sigma, t, medium),
        &[0.0, 0.5, 1.0],
        tol,
    )
}

/// `int_0^1 A_sigma(t)/t dt` (finite: `A ~ A'(0) t` at the origin).
pub fn a_over_t_integral(sigma: Polarization, medium: KernelMedium, tol: Tol) -> QuadResult {
    if matches!(medium, KernelMedium::Conductor) {
        return QuadResult::zero();
    }
    let tay = match medium {
        KernelMedium::Dielectric(_) => taylor(sigma, medium),
        KernelMedium::Conductor => unreachable!(),
    };
    let cut = series_cut(medium);
    integrate_sqrt_endpoint(
        |t| {
            if t < cut {
                tay.ca1 + tay.ca3 * t * t
            } else {
                kernel_a(sigma, t, medium) / t
            }
        },
        &[],
        tol,
    )
}

/// Panel points in `t` for `int_0^1 h(t) cos(q t) dt`-type oscillatory
/// integrals: half-period spacing, capped at a reasonable panel count.
pub fn osc_t_points(q: f64) -> Vec<f64> {
    let mut pts = vec![0.0f64];
    if q.abs() > std::f64::consts::PI {
        let h = std::f64::consts::PI / q.abs();
        let n = (1.0 / h).floor() as usize;
        if n <= 60_000 {
            for k in 1..=n {
                let x = k as f64 * h;
                if x < 1.0 - 1e-12 {
                    pts.push(x);
                }
            }
        } else {
            // extremely fast phase: fixed fine grid, quadrature refines further
            for k in 1..60_000 {
                pts.push(k as f64 / 60_000.0);
            }
        }
    } else {
        pts.extend_from_slice(&[0.25, 0.5, 0.75]);
    }
    pts.push(1.0);
    pts
}

/// `int_0^1 t^m T_sigma(t) cos(q t) dt` (m = 0) or the `sin` variant (m >= 1
/// pairs with sin in the force path).
pub fn t_osc_moment(
    sigma: Polarization,
    medium: KernelMedium,
    q: f64,
    m: u32,
    use_sin: bool,
    tol: Tol,
) -> QuadResult {
    let pts = osc_t_points(q);
    integrate_panels(
        |t| {
            let phase = q * t;
            let osc = if use_sin { phase.sin() } else { phase.cos() };
            t.powi(m as i32) * kernel_t(sigma, t, medium) * osc
        },
        &pts,
        tol,
    )
}

/// `int_0^1 t^m A_sigma(t) e^{-p t} dt` with square-root-safe substitution
/// and decay-resolving panels.
pub fn a_exp_moment(
    sigma: Polarization,
    medium: KernelMedium,
    p: f64,
    m: u32,
    tol: Tol,
) -> QuadResult {
    if matches!(medium, KernelMedium::Conductor) {
        return QuadResult::zero();
    }
    let mut extra: Vec<f64> = Vec::new();
    if p > 4.0 {
        let mut t = 1.0 / p;
        while t < 1.0 {
            extra.push(t);
            t *= 2.0;
        }
    }
    integrate_sqrt_endpoint(
        |t| t.powi(m as i32) * kernel_a(sigma, t, medium) * (-p * t).exp(),
        &extra,
        tol,
    )
}

/// The composite kernel transform
/// `f_sigma = int_0^1 [A_sigma e^{-2 zbar sqrt(eps-1) x t}
///                     + T_sigma cos(2 zbar x t)] dt`
/// evaluated in dimensionless variables (`x = omega/omega0`).
pub fn f_sigma(sigma: Polarization, medium: KernelMedium, zbar: f64, x: f64, tol: Tol) -> QuadResult {
    let q = 2.0 * zbar * x;
    let p = match medium {
        KernelMedium::Dielectric(e) => 2.0 * zbar * (e - 1.0).sqrt() * x,
        KernelMedium::Conductor => 0.0,
    };
    let a = a_exp_moment(sigma, medium, p, 0, tol);
    let t = t_osc_moment(sigma, medium, q, 0, false, tol);
    QuadResult {
        value: a.value + t.value,
        abs_err: a.abs_err + t.abs_err,
        evals: a.evals + t.evals,
        converged: a.converged && t.converged,
    }
}
