//! Shared domain types: atom, medium, temperatures, geometry, and the
//! dimensionless parameterization every computation runs on.
//!
//! All internal computations use the dimensionless ratios
//! `zbar = z/lambda0`, `bs = beta_s/lambda0`, `be = beta_e/lambda0` and the
//! relative permittivity; SI units enter only at the I/O boundary through
//! [`ShiftUnit`].

use crate::constants::{EPSILON_0, HBAR, K_BOLTZMANN, SPEED_OF_LIGHT};
use crate::error::CpError;
use serde::{Deserialize, Serialize};

/// Internal state of the two-level atom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AtomState {
    Ground,
    Excited,
}

impl AtomState {
    /// Sign of the transition frequency `omega_ab / omega0`:
    /// -1 for the ground state, +1 for the excited state.
    pub fn sign(self) -> f64 {
        match self {
            AtomState::Ground => -1.0,
            AtomState::Excited => 1.0,
        }
    }
}

/// Isotropically polarizable two-level atom.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AtomSpec {
    /// Transition angular frequency omega0 [rad/s].
    pub omega0: f64,
    /// Static isotropic polarizability alpha [C^2 m^2 / J].
    pub alpha: f64,
    /// Ground or excited.
    pub state: AtomState,
}

impl AtomSpec {
    pub fn new(omega0: f64, alpha: f64, state: AtomState) -> Result<Self, CpError> {
        if !(omega0 > 0.0 && omega0.is_finite()) {
            return Err(CpError::Validation(format!(
                "omega0 must be positive and finite, got {omega0}"
            )));
        }
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(CpError::Validation(format!(
                "alpha must be positive and finite, got {alpha}"
            )));
        }
        Ok(Self {
            omega0,
            alpha,
            state,
        })
    }

    /// Build from the reduced transition wavelength `lambda0 = c/omega0` [m].
    pub fn from_lambda0(lambda0: f64, alpha: f64, state: AtomState) -> Result<Self, CpError> {
        if !(lambda0 > 0.0 && lambda0.is_finite()) {
            return Err(CpError::Validation(format!(
                "lambda0 must be positive and finite, got {lambda0}"
            )));
        }
        Self::new(SPEED_OF_LIGHT / lambda0, alpha, state)
    }

    /// Reduced transition wavelength `lambda0 = c/omega0` [m].
    pub fn lambda0(&self) -> f64 {
        SPEED_OF_LIGHT / self.omega0
    }

    /// Signed transition frequency omega_ab [rad/s].
    pub fn omega_ab(&self) -> f64 {
        self.state.sign() * self.omega0
    }
}

/// Substrate permittivity model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum MediumSpec {
    /// Non-dispersive real relative permittivity, `eps >= 1`.
    RealConstant { eps: f64 },
    /// Complex permittivity, kernel-level use only (`eps_i >= 0`).
    Complex { eps_r: f64, eps_i: f64 },
    /// Symbolic eps -> infinity limit. Never represented by a large float:
    /// the engine takes the limit inside the kernels before differentiation.
    PerfectConductor,
}

impl MediumSpec {
    pub fn real(eps: f64) -> Result<Self, CpError> {
        if !(eps >= 1.0 && eps.is_finite()) {
            return Err(CpError::Validation(format!(
                "real permittivity must satisfy eps >= 1, got {eps}"
            )));
        }
        Ok(MediumSpec::RealConstant { eps })
    }

    pub fn complex(eps_r: f64, eps_i: f64) -> Result<Self, CpError> {
        if !eps_r.is_finite() || !eps_i.is_finite() || eps_i < 0.0 {
            return Err(CpError::Validation(format!(
                "complex permittivity needs finite parts and eps_i >= 0, got {eps_r}+{eps_i}i"
            )));
        }
        Ok(MediumSpec::Complex { eps_r, eps_i })
    }

    pub fn is_conductor(&self) -> bool {
        matches!(self, MediumSpec::PerfectConductor)
    }
}

/// Substrate and environment temperatures, stored as thermal wavelengths
/// `beta = hbar c / (k_B T)` [m]. `f64::INFINITY` encodes T = 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThermalConfig {
    pub beta_s: f64,
    pub beta_e: f64,
}

impl ThermalConfig {
    pub fn from_betas(beta_s: f64, beta_e: f64) -> Result<Self, CpError> {
        for (name, b) in [("beta_s", beta_s), ("beta_e", beta_e)] {
            if !(b > 0.0) || b.is_nan() {
                return Err(CpError::Validation(format!(
                    "{name} must be positive (infinite encodes T=0), got {b}"
                )));
            }
        }
        Ok(Self { beta_s, beta_e })
    }

    /// Build from temperatures in kelvin; T = 0 maps to beta = infinity.
    pub fn from_temperatures(t_s: f64, t_e: f64) -> Result<Self, CpError> {
        let to_beta = |t: f64, name: &str| -> Result<f64, CpError> {
            if t.is_nan() || t < 0.0 || !t.is_finite() && t != f64::INFINITY {
                return Err(CpError::Validation(format!(
                    "{name} must be a non-negative temperature in K, got {t}"
                )));
            }
            Ok(if t == 0.0 {
                f64::INFINITY
            } else {
                HBAR * SPEED_OF_LIGHT / (K_BOLTZMANN * t)
            })
        };
        Self::from_betas(to_beta(t_s, "T_s")?, to_beta(t_e, "T_e")?)
    }

    /// Substrate temperature [K] (0 for beta = infinity).
    pub fn t_s(&self) -> f64 {
        beta_to_temperature(self.beta_s)
    }

    /// Environment temperature [K].
    pub fn t_e(&self) -> f64 {
        beta_to_temperature(self.beta_e)
    }

    pub fn is_equilibrium(&self) -> bool {
        self.beta_s == self.beta_e
    }
}

fn beta_to_temperature(beta: f64) -> f64 {
    if beta.is_infinite() {
        0.0
    } else {
        HBAR * SPEED_OF_LIGHT / (K_BOLTZMANN * beta)
    }
}

/// Atom-surface geometry: the substrate fills z < 0, the atom sits at z > 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Geometry {
    /// Atom-surface distance [m].
    pub z: f64,
}

impl Geometry {
    pub fn new(z: f64) -> Result<Self, CpError> {
        if !(z > 0.0 && z.is_finite()) {
            return Err(CpError::Validation(format!(
                "distance z must be positive and finite, got {z}"
            )));
        }
        Ok(Self { z })
    }
}

/// Dimensionless parameter set every formula is a function of.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DimensionlessParams {
    /// z / lambda0.
    pub zbar: f64,
    /// beta_s / lambda0 (infinite for T_s = 0).
    pub bs: f64,
    /// beta_e / lambda0 (infinite for T_e = 0).
    pub be: f64,
    /// Relative permittivity (real path); `None` for the perfect conductor.
    pub eps: Option<f64>,
    /// Sign of omega_ab / omega0 (-1 ground, +1 excited).
    pub state_sign: f64,
}

impl DimensionlessParams {
    /// Evanescent decay parameter `a = 2 z sqrt(eps-1) / beta` for a given
    /// thermal wavelength (same lambda0-units as `zbar` and `b`).
    pub fn a_of(&self, b: f64) -> f64 {
        let e1 = self.eps.map(|e| e - 1.0).unwrap_or(f64::INFINITY);
        2.0 * self.zbar * e1.sqrt() / b
    }

    /// Traveling-mode parameter `b = 2 z / beta`.
    pub fn b_of(&self, b: f64) -> f64 {
        2.0 * self.zbar / b
    }

    /// `y0 = beta / lambda0` for a given thermal wavelength in meters.
    pub fn y0_of(beta: f64, lambda0: f64) -> f64 {
        beta / lambda0
    }
}

/// Build the dimensionless parameter set from SI inputs.
pub fn nondimensionalize(
    atom: &AtomSpec,
    medium: &MediumSpec,
    thermal: &ThermalConfig,
    geom: &Geometry,
) -> Result<DimensionlessParams, CpError> {
    let lambda0 = atom.lambda0();
    if !lambda0.is_finite() || lambda0 <= 0.0 {
        return Err(CpError::Validation("invalid lambda0".into()));
    }
    let eps = match medium {
        MediumSpec::RealConstant { eps } => Some(*eps),
        MediumSpec::PerfectConductor => None,
        MediumSpec::Complex { .. } => {
            return Err(CpError::Validation(
                "complex permittivity is kernel-level only; shifts need RealConstant or PerfectConductor".into(),
            ))
        }
    };
    Ok(DimensionlessParams {
        zbar: geom.z / lambda0,
        bs: thermal.beta_s / lambda0,
        be: thermal.beta_e / lambda0,
        eps,
        state_sign: atom.state.sign(),
    })
}

/// Natural output scale `hbar/(4 pi eps0) * alpha omega0 / lambda0^3` [J].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ShiftUnit {
    pub scale_joules: f64,
}

impl ShiftUnit {
    pub fn for_atom(atom: &AtomSpec) -> Self {
        let lambda0 = atom.lambda0();
        Self {
            scale_joules: HBAR / (4.0 * std::f64::consts::PI * EPSILON_0) * atom.alpha
                * atom.omega0
                / lambda0.powi(3),
        }
    }

    /// Force scale [N]: one shift unit per lambda0.
    pub fn force_scale(&self, atom: &AtomSpec) -> f64 {
        self.scale_joules / atom.lambda0()
    }

    pub fn to_si(&self, units: f64) -> f64 {
        units * self.scale_joules
    }

    pub fn from_si(&self, joules: f64) -> f64 {
        joules / self.scale_joules
    }
}

/// Convergence status attached to each computed part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PartStatus {
    Converged,
    /// Quadrature did not reach the requested tolerance; value is best effort.
    NonConverged,
    /// Value supplied from a closed-form asymptotic block instead of quadrature.
    AsymptoticFallback,
}

/// One additive piece of the shift with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ShiftPart {
    /// Value in SI joules.
    pub joules: f64,
    /// Value in [`ShiftUnit`] multiples.
    pub units: f64,
    /// Absolute error estimate [J].
    pub abs_err_joules: f64,
    pub status: PartStatus,
}

impl ShiftPart {
    pub fn zero() -> Self {
        Self {
            joules: 0.0,
            units: 0.0,
            abs_err_joules: 0.0,
            status: PartStatus::Converged,
        }
    }
}

/// The three additive shift parts plus their sum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ShiftBreakdown {
    pub vac: ShiftPart,
    pub eq: ShiftPart,
    pub neq: ShiftPart,
    pub total: ShiftPart,
    /// SI value of one shift unit for this atom [J].
    pub unit_scale_joules: f64,
}
