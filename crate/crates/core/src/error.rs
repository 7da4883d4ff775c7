use core::fmt;

use num_complex::Complex64;

pub type Result<T> = core::result::Result<T, Error>;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain of the function.
    Domain { what: &'static str, value: f64 },
    /// A parameter object violates one of its invariants.
    InvalidParameter {
        name: &'static str,
        reason: &'static str,
    },
    /// The generalized Bessel sum did not converge inside the configured
    /// λ window.
    NonConvergence {
        order: i64,
        lambda_cap: u64,
        partial_sum: Complex64,
        residual: f64,
    },
    /// The requested photon order is energetically forbidden.
    ChannelClosed { order: i64, p_f_squared: f64 },
    /// Adaptive quadrature ran out of subdivisions before meeting tolerance.
    Quadrature { estimate: f64, error_estimate: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain { what, value } => write!(f, "domain error: {what} (got {value})"),
            Error::InvalidParameter { name, reason } => {
                write!(f, "invalid parameter `{name}`: {reason}")
            }
            Error::NonConvergence {
                order,
                lambda_cap,
                partial_sum,
                residual,
            } => write!(
                f,
                "generalized Bessel sum for n = {order} did not converge within |λ| ≤ {lambda_cap} \
                 (partial sum {partial_sum}, tail residual {residual:e})"
            ),
            Error::ChannelClosed { order, p_f_squared } => write!(
                f,
                "channel n = {order} is closed (p_f² = {p_f_squared:e} MeV²/c² ≤ 0)"
            ),
            Error::Quadrature {
                estimate,
                error_estimate,
            } => write!(
                f,
                "quadrature did not converge (estimate {estimate:e}, error {error_estimate:e})"
            ),
        }
    }
}

impl core::error::Error for Error {}

pub(crate) fn ensure_finite(what: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Domain { what, value })
    }
}
