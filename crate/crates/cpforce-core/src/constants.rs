//! Physical constants (SI, CODATA 2018) and fixed mathematical constants.

/// Speed of light in vacuum [m/s] (exact).
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Reduced Planck constant [J s].
pub const HBAR: f64 = 1.054_571_817e-34;

/// Vacuum permittivity [F/m].
pub const EPSILON_0: f64 = 8.854_187_8128e-12;

/// Boltzmann constant [J/K] (exact).
pub const K_BOLTZMANN: f64 = 1.380_649e-23;

/// Riemann zeta(3), 20 significant digits.
pub const ZETA_3: f64 = 1.202_056_903_159_594_285_4;

/// Riemann zeta(5), 20 significant digits.
pub const ZETA_5: f64 = 1.036_927_755_143_369_926_3;

/// zeta(4) = pi^4 / 90.
pub const ZETA_4: f64 = 1.082_323_233_711_138_191_5;

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn zeta4_is_pi4_over_90() {
        assert!((ZETA_4 - PI.powi(4) / 90.0).abs() < 1e-15);
    }
}
