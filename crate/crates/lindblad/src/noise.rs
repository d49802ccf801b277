//! Noise rates and integrator configuration.

use spin_core::SpinError;

/// Axis-dependent local dephasing rates, in units of the coupling `chi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseSpec {
    pub gamma_x: f64,
    pub gamma_y: f64,
    pub gamma_z: f64,
}

impl NoiseSpec {
    /// Equal rates on all three axes (the default noise model).
    pub fn uniform(gamma: f64) -> Self {
        Self { gamma_x: gamma, gamma_y: gamma, gamma_z: gamma }
    }

    pub fn zero() -> Self {
        Self::uniform(0.0)
    }

    pub fn is_uniform(&self) -> bool {
        self.gamma_x == self.gamma_y && self.gamma_y == self.gamma_z
    }

    pub fn is_zero(&self) -> bool {
        self.gamma_x == 0.0 && self.gamma_y == 0.0 && self.gamma_z == 0.0
    }

    pub fn validate(&self) -> Result<(), SpinError> {
        for (name, g) in
            [("gamma_x", self.gamma_x), ("gamma_y", self.gamma_y), ("gamma_z", self.gamma_z)]
        {
            if !g.is_finite() || g < 0.0 {
                return Err(SpinError::InvalidArgument(format!("{name} = {g} must be >= 0")));
            }
        }
        Ok(())
    }
}

/// Integration method tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OdeMethod {
    /// Adaptive embedded Dormand-Prince 5(4).
    #[default]
    DormandPrince45,
}

/// Tolerances and step limits for the adaptive integrator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegratorConfig {
    pub rtol: f64,
    pub atol: f64,
    pub max_step: f64,
    pub method: OdeMethod,
}

impl Default for IntegratorConfig {
    fn default() -> Self {
        Self { rtol: 1e-8, atol: 1e-10, max_step: f64::INFINITY, method: OdeMethod::DormandPrince45 }
    }
}

impl IntegratorConfig {
    pub fn with_tolerances(rtol: f64, atol: f64) -> Self {
        Self { rtol, atol, ..Self::default() }
    }

    pub fn validate(&self) -> Result<(), SpinError> {
        if !(self.rtol > 0.0) || !(self.atol > 0.0) {
            return Err(SpinError::InvalidArgument(format!(
                "tolerances must be positive (rtol {}, atol {})",
                self.rtol, self.atol
            )));
        }
        if !(self.max_step > 0.0) {
            return Err(SpinError::InvalidArgument("max_step must be positive".into()));
        }
        Ok(())
    }
}
