//! Dimensionless reduction of the arbelos.
//!
//! Rescaling every length by the enclosing radius R collapses the
//! two-parameter family to the single ratio t = T/R in [0, 1]. The
//! inscribed radii become ratios r1 = R1/R and r2 = R2/R, the two roots
//! of (r - 1/2)^2 = (1 - t^2)/4, and all areas scale by R^2.

use crate::error::{Error, Result};
use crate::geometry::{clamped_sqrt, ArbelosConfig, Radii};

/// Root selector for the quadratic 4 r (1 - r) = t^2. Plus is the root at
/// or above 1/2, Minus the one at or below.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    /// The opposite root.
    pub fn other(self) -> Branch {
        match self {
            Branch::Plus => Branch::Minus,
            Branch::Minus => Branch::Plus,
        }
    }
}

/// Dimensionless arbelos state: chord ratio t and radius ratios r1, r2
/// with r1 + r2 = 1 and 4 r1 r2 = t^2 under the tolerance policy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimensionlessState {
    t: f64,
    r1: f64,
    r2: f64,
}

impl DimensionlessState {
    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn r1(&self) -> f64 {
        self.r1
    }

    pub fn r2(&self) -> f64 {
        self.r2
    }

    /// Restores lengths at enclosing radius `radius`: the configuration
    /// (R, t R) and the radii (r1 R, r2 R).
    pub fn denormalize(&self, radius: f64) -> Result<(ArbelosConfig, Radii)> {
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::NonPositiveRadius(radius));
        }
        // t admitted through the radicand clamp may sit a few ulps above 1;
        // cap the chord so the rebuilt configuration stays valid.
        let chord = (self.t * radius).min(radius);
        let config = ArbelosConfig::new(radius, chord)?;
        Ok((
            config,
            Radii {
                r1: self.r1 * radius,
                r2: self.r2 * radius,
            },
        ))
    }
}

/// Chord ratio t = T/R of a validated configuration.
pub fn normalize(config: &ArbelosConfig) -> f64 {
    config.chord() / config.radius()
}

/// Solves 4 r (1 - r) = t^2 for the requested branch.
///
/// The Minus root is computed as t^2 / (2 (1 + sqrt(1 - t^2))), which is
/// exact-to-rounding where the textbook form (1 - sqrt(1 - t^2)) / 2
/// cancels near t = 0. The Plus root is its complement, which keeps
/// `solve_r1(t, Plus) + solve_r1(t, Minus) == 1` exact in every case.
pub fn solve_r1(t: f64, branch: Branch) -> Result<f64> {
    if t.is_nan() || t < 0.0 {
        return Err(Error::ParameterOutOfRange(t));
    }
    let s = clamped_sqrt((1.0 - t) * (1.0 + t), 1.0).ok_or(Error::ParameterOutOfRange(t))?;
    let minus = (t * t) / (2.0 * (1.0 + s));
    Ok(match branch {
        Branch::Minus => minus,
        Branch::Plus => 1.0 - minus,
    })
}

/// Completes the state for one chord ratio: r1 from the requested branch,
/// r2 from the opposite one.
pub fn complete_state(t: f64, branch: Branch) -> Result<DimensionlessState> {
    let r1 = solve_r1(t, branch)?;
    let r2 = solve_r1(t, branch.other())?;
    Ok(DimensionlessState { t, r1, r2 })
}
