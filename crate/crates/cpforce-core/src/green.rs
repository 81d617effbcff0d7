//! Wave numbers, interface reflection/transmission amplitudes, and the
//! general (complex-permittivity) response kernels of the half-space.
//!
//! `g11` and `g21` carry the traveling-mode contributions, `g12` the
//! evanescent-mode one; `g1 = g11 + g12` weights the equilibrium parts of
//! the shift and `g2 = g21 + g12` the out-of-equilibrium part. `g21` is
//! independent of the atom-surface distance and is excluded from every
//! shift assembly. For a perfect conductor `g1` collapses to the closed
//! form [`conductor_f`] and `g2` vanishes.

use crate::constants::SPEED_OF_LIGHT;
use crate::error::CpError;
use crate::quad::{integrate_panels, QuadResult, Tol};
use num_complex::Complex64;

/// Normal wave numbers in the substrate (1) and vacuum (2) half-spaces.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveNumbers {
    /// `q1 = (omega/c) sqrt(eps)` [1/m].
    pub q1: Complex64,
    /// `q2 = omega/c` [1/m].
    pub q2: Complex64,
    /// `beta1 = sqrt(q1^2 - k_par^2)`, branch `Re >= 0, Im >= 0` [1/m].
    pub beta1: Complex64,
    /// `beta2 = sqrt(q2^2 - k_par^2)`, same branch [1/m].
    pub beta2: Complex64,
}

fn branch_sqrt(w: Complex64) -> Complex64 {
    let mut s = w.sqrt();
    if s.im < 0.0 {
        s = -s;
    }
    if s.re < 0.0 && s.im == 0.0 {
        s = -s;
    }
    s
}

/// Wave numbers for transverse wavenumber `k_par` at frequency `omega`.
pub fn wave_numbers(omega: f64, k_par: f64, eps: Complex64) -> WaveNumbers {
    let c = SPEED_OF_LIGHT;
    let q2 = Complex64::new(omega / c, 0.0);
    let q1 = q2 * eps.sqrt();
    let kp2 = Complex64::new(k_par * k_par, 0.0);
    WaveNumbers {
        q1,
        q2,
        beta1: branch_sqrt(q1 * q1 - kp2),
        beta2: branch_sqrt(q2 * q2 - kp2),
    }
}

/// Interface reflection/transmission amplitudes for both polarizations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FresnelSet {
    pub rp: Complex64,
    pub rs: Complex64,
    pub tp: Complex64,
    pub ts: Complex64,
}

/// `r^p = (eps b2 - b1)/(eps b2 + b1)`, `r^s = (b2 - b1)/(b2 + b1)`,
/// `t^p = 2 sqrt(eps) b2/(eps b2 + b1)`, `t^s = 2 b2/(b2 + b1)`.
pub fn fresnel(eps: Complex64, beta1: Complex64, beta2: Complex64) -> Result<FresnelSet, CpError> {
    let dp = eps * beta2 + beta1;
    let ds = beta2 + beta1;
    if dp.norm() == 0.0 || ds.norm() == 0.0 {
        return Err(CpError::Singularity(
            "degenerate interface denominator (eps b2 + b1 = 0 or b2 + b1 = 0)".into(),
        ));
    }
    Ok(FresnelSet {
        rp: (eps * beta2 - beta1) / dp,
        rs: (beta2 - beta1) / ds,
        tp: 2.0 * eps.sqrt() * beta2 / dp,
        ts: 2.0 * beta2 / ds,
    })
}

fn validate_kernel_inputs(z: f64, omega: f64, eps: Complex64) -> Result<(), CpError> {
    if !(omega > 0.0 && omega.is_finite()) {
        return Err(CpError::Validation(format!("omega must be > 0, got {omega}")));
    }
    if !(z > 0.0 && z.is_finite()) {
        return Err(CpError::Validation(format!("z must be > 0, got {z}")));
    }
    if eps.im < 0.0 || !eps.re.is_finite() || !eps.im.is_finite() {
        return Err(CpError::Validation(format!(
            "complex permittivity needs Im >= 0, got {eps}"
        )));
    }
    Ok(())
}

/// Panel points resolving both the sign-change layer of the p-polarized
/// bracket near `t ~ 1/sqrt(|eps|)` and the oscillation `cos(2 w z t / c)`.
fn traveling_points(zw: f64, eps_norm: f64) -> Vec<f64> {
    let mut pts = vec![0.0f64];
    let mut t = (1e-9 / eps_norm.sqrt()).max(1e-14);
    while t < 0.1 {
        pts.push(t);
        t *= 4.0;
    }
    pts.extend_from_slice(&[0.1, 0.3, 0.5, 0.7, 0.9]);
    let q = 2.0 * zw;
    if q > std::f64::consts::PI {
        let h = std::f64::consts::PI / q;
        let mut x = h;
        while x < 1.0 && pts.len() < 40_000 {
            pts.push(x);
            x += h;
        }
    }
    pts.push(1.0);
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    pts.dedup_by(|a, b| (*a - *b).abs() < 1e-15);
    pts
}

/// Traveling-mode kernel `g11(z, omega)` [1/m] for complex permittivity.
pub fn g11(z: f64, omega: f64, eps: Complex64, tol: Tol) -> Result<QuadResult, CpError> {
    validate_kernel_inputs(z, omega, eps)?;
    let c = SPEED_OF_LIGHT;
    let zw = omega * z / c;
    let er = eps.re;
    let pts = traveling_points(zw, eps.norm().max(1.0));

    let cos_part = integrate_panels(
        |t: f64| {
            let w = eps - 1.0 + t * t;
            let rt = branch_sqrt(w);
            let aw = w.norm();
            let b1 = (t * t - aw) / (rt + t).norm_sqr();
            let b2 = (eps.norm_sqr() * t * t - aw) * (1.0 - 2.0 * t * t)
                / (eps * t + rt).norm_sqr();
            (b1 + b2) * (2.0 * zw * t).cos()
        },
        &pts,
        tol,
    );
    let sin_part = integrate_panels(
        |t: f64| {
            let w = eps - 1.0 + t * t;
            let rt = branch_sqrt(w);
            let aw = w.norm();
            let radicand = (aw - (er - 1.0 + t * t)).max(0.0);
            if radicand == 0.0 {
                return 0.0;
            }
            let f = t * radicand.sqrt();
            let b1 = 1.0 / (rt + t).norm_sqr();
            let b2 = (aw + t * t - 1.0) * (1.0 - 2.0 * t * t) / (eps * t + rt).norm_sqr();
            f * (b1 - b2) * (2.0 * zw * t).sin()
        },
        &pts,
        tol,
    );

    let pref_cos = omega / (4.0 * std::f64::consts::PI * c);
    let pref_sin = omega / (2.0 * std::f64::consts::SQRT_2 * std::f64::consts::PI * c);
    Ok(QuadResult {
        value: pref_cos * cos_part.value + pref_sin * sin_part.value,
        abs_err: pref_cos * cos_part.abs_err + pref_sin * sin_part.abs_err,
        evals: cos_part.evals + sin_part.evals,
        converged: cos_part.converged && sin_part.converged,
    })
}

/// Evanescent-mode kernel `g12(z, omega)` [1/m].
///
/// For real `eps > 1` the square-root factor vanishes identically beyond
/// `t = sqrt(eps-1)`, so the semi-infinite integral truncates there.
pub fn g12(z: f64, omega: f64, eps: Complex64, tol: Tol) -> Result<QuadResult, CpError> {
    validate_kernel_inputs(z, omega, eps)?;
    let c = SPEED_OF_LIGHT;
    let zw = omega * z / c;
    let er = eps.re;

    let t_cut = if eps.im == 0.0 {
        let e1 = er - 1.0;
        if e1 <= 0.0 {
            return Ok(QuadResult::zero());
        }
        e1.sqrt()
    } else {
        // complex case: integrand decays through both the exponential and
        // the shrinking square-root factor
        (er.max(1.0)).sqrt() + 50.0 / (2.0 * zw).max(0.05)
    };

    let mut pts = vec![0.0f64];
    let mut t = t_cut * 1e-8;
    while t < t_cut {
        pts.push(t);
        t *= 3.0;
    }
    // resolve the exponential scale too
    let decay = 1.0 / (2.0 * zw).max(1e-3);
    let mut t = decay;
    while t < t_cut {
        pts.push(t);
        t *= 2.0;
    }
    pts.push(t_cut);
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    pts.dedup_by(|a, b| (*a - *b).abs() < 1e-15 * t_cut);

    let integral = integrate_panels(
        |t: f64| {
            let w = eps - 1.0 - t * t;
            let rt = branch_sqrt(w);
            let aw = w.norm();
            let radicand = (aw + (er - 1.0 - t * t)).max(0.0);
            if radicand == 0.0 {
                return 0.0;
            }
            let f = t * (-2.0 * zw * t).exp() * radicand.sqrt();
            let b1 = (t * t + 1.0 + aw) * (2.0 * t * t + 1.0)
                / (Complex64::new(0.0, t) * eps + rt).norm_sqr();
            let b2 = 1.0 / (Complex64::new(0.0, t) + rt).norm_sqr();
            f * (b1 + b2)
        },
        &pts,
        tol,
    );
    let pref = omega / (2.0 * std::f64::consts::SQRT_2 * std::f64::consts::PI * c);
    Ok(QuadResult {
        value: pref * integral.value,
        abs_err: pref * integral.abs_err,
        evals: integral.evals,
        converged: integral.converged,
    })
}

/// Distance-independent traveling-mode kernel `g21(omega)` [1/m].
///
/// Implemented for completeness; every shift assembly excludes it because
/// it carries no dependence on the atom-surface distance.
pub fn g21(omega: f64, eps: Complex64, tol: Tol) -> Result<QuadResult, CpError> {
    if !(omega > 0.0 && omega.is_finite()) {
        return Err(CpError::Validation(format!("omega must be > 0, got {omega}")));
    }
    if eps.im < 0.0 {
        return Err(CpError::Validation("Im eps must be >= 0".into()));
    }
    let c = SPEED_OF_LIGHT;
    let er = eps.re;
    // u-substitution t = 1 - u^2 tames the 1/sqrt(1-t) endpoint
    let integral = integrate_panels(
        |u: f64| {
            let t = 1.0 - u * u;
            let w = eps - t;
            let aw = w.norm();
            let radicand = (aw + (er - t)).max(0.0);
            if radicand == 0.0 {
                return 0.0;
            }
            let rt = branch_sqrt(w);
            let su = Complex64::new(u, 0.0);
            let b1 = (t + aw) / (eps * su + rt).norm_sqr();
            let b2 = 1.0 / (su + rt).norm_sqr();
            2.0 * u * radicand.sqrt() * (b1 + b2)
        },
        &[0.0, 0.25, 0.5, 0.75, 1.0],
        tol,
    );
    let pref = omega / (4.0 * std::f64::consts::SQRT_2 * std::f64::consts::PI * c);
    Ok(QuadResult {
        value: pref * integral.value,
        abs_err: pref * integral.abs_err,
        evals: integral.evals,
        converged: integral.converged,
    })
}

/// Closed-form conductor kernel
/// `f(z, omega) = -(c/(4 pi omega z^2)) cos(2 omega z/c)
///  - (1/(4 pi z)) sin(2 omega z/c) + (c^2/(8 pi z^3 omega^2)) sin(2 omega z/c)`
/// [1/m].
pub fn conductor_f(z: f64, omega: f64) -> f64 {
    let c = SPEED_OF_LIGHT;
    let phase = 2.0 * omega * z / c;
    let pi = std::f64::consts::PI;
    -c / (4.0 * pi * omega * z * z) * phase.cos() - 1.0 / (4.0 * pi * z) * phase.sin()
        + c * c / (8.0 * pi * z.powi(3) * omega * omega) * phase.sin()
}

/// Dimensionless conductor kernel `lambda0 * f` as a function of
/// `zw = omega z / c` at `x = omega/omega0 = 1` scale: used by the engine in
/// reduced variables, `fbar(zw) = -cos(2 zw)/(4 pi zw^2) x ... / x`-free form.
///
/// `conductor_f(z, omega) = (omega/c) * fbar(omega z / c)`.
pub fn conductor_f_reduced(zw: f64) -> f64 {
    let pi = std::f64::consts::PI;
    let phase = 2.0 * zw;
    -phase.cos() / (4.0 * pi * zw * zw) - phase.sin() / (4.0 * pi * zw)
        + phase.sin() / (8.0 * pi * zw.powi(3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernels::{self, KernelMedium, Polarization};
    use proptest::prelude::*;

    const TOL: Tol = Tol { abs: 1e-14, rel: 1e-10 };

    #[test]
    fn vacuum_normal_incidence() {
        let w = wave_numbers(1e15, 0.0, Complex64::new(1.0, 0.0));
        let wc = 1e15 / SPEED_OF_LIGHT;
        assert!((w.beta1.re - wc).abs() < 1e-9 * wc);
        assert!((w.beta2.re - wc).abs() < 1e-9 * wc);
        assert_eq!(w.beta1.im, 0.0);
    }

    #[test]
    fn evanescent_branch_sign() {
        // k_par = 2 omega/c in vacuum: beta = i sqrt(3) omega/c
        let omega = 1e15;
        let wc = omega / SPEED_OF_LIGHT;
        let w = wave_numbers(omega, 2.0 * wc, Complex64::new(1.0, 0.0));
        assert!(w.beta2.re.abs() < 1e-6 * wc);
        assert!((w.beta2.im - 3.0f64.sqrt() * wc).abs() < 1e-9 * wc);
    }

    #[test]
    fn mixed_branch_at_eps_2_25() {
        // eps = 2.25, k_par = 1.2 omega/c: beta1 real, beta2 pure imaginary
        let omega = 1e15;
        let wc = omega / SPEED_OF_LIGHT;
        let w = wave_numbers(omega, 1.2 * wc, Complex64::new(2.25, 0.0));
        assert!((w.beta1.re - (2.25f64 - 1.44).sqrt() * wc).abs() < 1e-9 * wc);
        assert!(w.beta1.im.abs() < 1e-12 * wc);
        assert!(w.beta2.re.abs() < 1e-12 * wc);
        assert!((w.beta2.im - (1.44f64 - 1.0).sqrt() * wc).abs() < 1e-9 * wc);
    }

    #[test]
    fn fresnel_no_interface() {
        let w = wave_numbers(1e15, 0.3e15 / SPEED_OF_LIGHT, Complex64::new(1.0, 0.0));
        let f = fresnel(Complex64::new(1.0, 0.0), w.beta1, w.beta2).unwrap();
        assert!(f.rp.norm() < 1e-14);
        assert!(f.rs.norm() < 1e-14);
        assert!((f.tp - 1.0).norm() < 1e-14);
        assert!((f.ts - 1.0).norm() < 1e-14);
    }

    #[test]
    fn fresnel_normal_incidence_eps2() {
        let omega = 1e15;
        let w = wave_numbers(omega, 0.0, Complex64::new(2.0, 0.0));
        let f = fresnel(Complex64::new(2.0, 0.0), w.beta1, w.beta2).unwrap();
        let want = (1.0 - 2.0f64.sqrt()) / (1.0 + 2.0f64.sqrt());
        assert!((f.rs.re - want).abs() < 1e-12);
        assert!(f.rs.im.abs() < 1e-14);
    }

    #[test]
    fn fresnel_large_eps_normal_incidence_limits() {
        // rp -> +1, rs -> -1 with the exact 2/(sqrt(eps)+1) approach rate
        for e in [1e6f64, 1e8, 1e10] {
            let omega = 1e15;
            let w = wave_numbers(omega, 0.0, Complex64::new(e, 0.0));
            let f = fresnel(Complex64::new(e, 0.0), w.beta1, w.beta2).unwrap();
            let rate = 2.0 / (e.sqrt() + 1.0);
            assert!((f.rp.re - 1.0).abs() < 1.05 * rate, "eps={e}: rp={}", f.rp);
            assert!((f.rs.re + 1.0).abs() < 1.05 * rate, "eps={e}: rs={}", f.rs);
        }
    }

    #[test]
    fn interface_off_kernels_vanish() {
        let eps = Complex64::new(1.0, 0.0);
        let omega = 2e15;
        let z = 0.5e-6;
        let scale = omega / SPEED_OF_LIGHT; // 1/m kernel scale
        let a = g11(z, omega, eps, TOL).unwrap();
        let b = g12(z, omega, eps, TOL).unwrap();
        assert!(a.value.abs() < 1e-12 * scale);
        assert!(b.value.abs() < 1e-12 * scale);
    }

    #[test]
    fn g21_at_eps_one_is_quarter_vacuum_mode_density() {
        // the lower half-space carries half the traveling vacuum modes:
        // g21(eps=1) = omega/(4 pi c); z-independent by construction
        let omega = 3e15;
        let g = g21(omega, Complex64::new(1.0, 0.0), TOL).unwrap();
        let want = omega / (4.0 * std::f64::consts::PI * SPEED_OF_LIGHT);
        assert!((g.value - want).abs() < 1e-9 * want, "{} vs {want}", g.value);
    }

    #[test]
    fn g21_positive_at_eps_two() {
        let g = g21(1e15, Complex64::new(2.0, 0.0), TOL).unwrap();
        assert!(g.value > 0.0);
        // regression against an independent high-precision evaluation:
        // (4 pi c / omega) g21(eps=2) = 0.812155259282
        let want = 0.812_155_259_282 * 1e15 / (4.0 * std::f64::consts::PI * SPEED_OF_LIGHT);
        assert!((g.value - want).abs() < 1e-6 * want, "{} vs {want}", g.value);
    }

    #[test]
    fn general_assembly_matches_simplified_kernels() {
        // g1 = g11 + g12 against the weighted T/A kernel assembly for real eps
        for (e, zw) in [(2.0, 0.5), (2.0, 2.0), (4.0, 1.0)] {
            let omega = 1.2e15;
            let z = zw * SPEED_OF_LIGHT / omega;
            let eps = Complex64::new(e, 0.0);
            let general =
                g11(z, omega, eps, TOL).unwrap().value + g12(z, omega, eps, TOL).unwrap().value;
            let m = KernelMedium::Dielectric(e);
            let sq = (e - 1.0f64).sqrt();
            let kt = integrate_panels(
                |t: f64| kernels::kernel_t_weighted(t, m) * (2.0 * zw * t).cos(),
                &kernels::osc_t_points(2.0 * zw),
                TOL,
            );
            let ka = kernels::integrate_sqrt_endpoint(
                |t| kernels::kernel_a_weighted(t, m) * (-2.0 * zw * sq * t).exp(),
                &[],
                TOL,
            );
            let simplified =
                omega / (2.0 * std::f64::consts::PI * SPEED_OF_LIGHT) * (kt.value + ka.value);
            assert!(
                (general - simplified).abs() < 1e-8 * simplified.abs().max(1e-30),
                "eps={e} zw={zw}: {general} vs {simplified}"
            );
        }
    }

    #[test]
    fn conductor_approach_scales_as_inverse_sqrt_eps() {
        // |g1(eps) - f| / |f| ~ 33/sqrt(eps) at zw <= 1: verify the law at
        // 1e8 and the tenfold improvement at 1e10
        let omega = 1e15;
        for zw in [0.3f64, 1.0, 3.0] {
            let z = zw * SPEED_OF_LIGHT / omega;
            let f = conductor_f(z, omega);
            let mut prev = f64::INFINITY;
            for e in [1e8f64, 1e10] {
                let eps = Complex64::new(e, 0.0);
                let g1 = g11(z, omega, eps, TOL).unwrap().value
                    + g12(z, omega, eps, TOL).unwrap().value;
                let rel = ((g1 - f) / f).abs();
                assert!(
                    rel < 40.0 / e.sqrt(),
                    "zw={zw} eps={e}: rel={rel:.3e}"
                );
                assert!(rel < prev);
                prev = rel;
            }
        }
    }

    #[test]
    fn conductor_f_special_points() {
        let omega = 1e15;
        let c = SPEED_OF_LIGHT;
        // 2 w z / c = pi: sin terms vanish, cos = -1 -> f = c/(4 pi w z^2)
        let z = std::f64::consts::PI * c / (2.0 * omega);
        let want = c / (4.0 * std::f64::consts::PI * omega * z * z);
        assert!((conductor_f(z, omega) - want).abs() < 1e-12 * want);
    }

    #[test]
    fn conductor_f_small_argument_taylor() {
        // fbar(zw) = -2/3 * ... : f = -(omega/c) (2/(4pi)) int t^2 -> expand:
        // f(z,w) -> (w/c)*(-1/(6 pi)) + O((wz/c)^2) from the exact
        // f = -(w/(2 pi c)) int_0^1 t^2 cos(2 zw t) dt identity
        let omega = 1e15;
        let c = SPEED_OF_LIGHT;
        let zw = 1e-4;
        let z = zw * c / omega;
        let exact = conductor_f(z, omega);
        let leading = -omega / (6.0 * std::f64::consts::PI * c);
        // next Taylor term: +(w/(2 pi c)) * (2 zw)^2 / 10
        let correction = omega / (2.0 * std::f64::consts::PI * c) * (2.0 * zw).powi(2) / 10.0;
        assert!(
            ((exact - leading - correction) / leading).abs() < 1e-6,
            "exact {exact}, model {}",
            leading + correction
        );
    }

    #[test]
    fn conductor_reduced_consistent() {
        let omega = 1.7e15;
        let z = 0.9e-6;
        let zw = omega * z / SPEED_OF_LIGHT;
        let lhs = conductor_f(z, omega);
        let rhs = omega / SPEED_OF_LIGHT * conductor_f_reduced(zw);
        assert!((lhs - rhs).abs() < 1e-12 * lhs.abs());
    }

    #[test]
    fn conductor_f_matches_g1_at_large_eps_zw1() {
        let omega = 1e15;
        let z = SPEED_OF_LIGHT / omega;
        let eps = Complex64::new(1e8, 0.0);
        let g1 = g11(z, omega, eps, TOL).unwrap().value + g12(z, omega, eps, TOL).unwrap().value;
        let f = conductor_f(z, omega);
        // true finite-eps deviation at eps = 1e8, zw = 1 is 3.27e-3
        let rel = ((g1 - f) / f).abs();
        assert!(rel < 4e-3, "rel={rel:.3e}");
        assert!(rel > 2e-3, "rel={rel:.3e} suspiciously small");
    }

    #[test]
    fn g12_real_eps_truncates_at_sqrt_e1() {
        // the sqrt factor is exactly zero beyond t = sqrt(eps-1)
        let e = 2.0;
        for t in [1.1f64, 2.0, 5.0] {
            let w = Complex64::new(e - 1.0 - t * t, 0.0);
            let radicand: f64 = w.norm() + (e - 1.0 - t * t);
            assert!(radicand.abs() < 1e-12);
        }
        // and below it equals sqrt(2 (eps-1-t^2))
        for t in [0.2f64, 0.6, 0.9] {
            let w = Complex64::new(e - 1.0 - t * t, 0.0);
            let radicand: f64 = w.norm() + (e - 1.0 - t * t);
            assert!((radicand - 2.0 * (e - 1.0 - t * t)).abs() < 1e-14);
        }
    }

    proptest! {
        #[test]
        fn branch_invariant(
            omega in 1e13f64..1e16,
            kfac in 0.0f64..3.0,
            er in prop::sample::select(vec![1.0f64, 1.5, 2.25, 10.0, 100.0]),
            ei in prop::sample::select(vec![0.0f64, 0.01, 1.0, 10.0]),
        ) {
            let w = wave_numbers(omega, kfac * omega / SPEED_OF_LIGHT, Complex64::new(er, ei));
            prop_assert!(w.beta1.re >= 0.0 && w.beta1.im >= 0.0);
            prop_assert!(w.beta2.re >= 0.0 && w.beta2.im >= 0.0);
        }

        #[test]
        fn evanescent_decay(
            zw in 0.05f64..3.0,
            e in prop::sample::select(vec![1.5f64, 2.0, 4.0, 10.0]),
        ) {
            let omega = 1e15;
            let z = zw * SPEED_OF_LIGHT / omega;
            let eps = Complex64::new(e, 0.0);
            let g_near = g12(z, omega, eps, TOL).unwrap().value;
            let g_far = g12(2.0 * z, omega, eps, TOL).unwrap().value;
            prop_assert!(g_far < g_near);
        }
    }
}
