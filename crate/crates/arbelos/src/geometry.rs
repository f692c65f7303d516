//! Closed-form area calculus for the arbelos.
//!
//! A configuration is the pair (R, T): R is the radius of the enclosing
//! semicircle C on diameter AB, and T is the length of the perpendicular
//! half-chord PN erected at the cusp N. The inscribed semicircles C1 and
//! C2 sit on the sub-diameters AN and NB, and every quantity here is a
//! closed form in R and T. The knife (arbelos) area is pi T^2 / 4, the
//! area of the circle with diameter PN, independent of R.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use crate::dimensionless::Branch;
use crate::error::{Error, Result};

/// Relative tolerance for identity checks, scaled by the larger magnitude.
pub const REL_TOL: f64 = 1e-12;
/// Absolute floor for identity checks between values near zero.
pub const ABS_TOL: f64 = 1e-15;

/// Equality under the shared tolerance policy: relative [`REL_TOL`] against
/// the larger magnitude, with the absolute floor [`ABS_TOL`] near zero.
pub fn approx_eq(a: f64, b: f64) -> bool {
    let scale = a.abs().max(b.abs());
    (a - b).abs() <= (REL_TOL * scale).max(ABS_TOL)
}

/// Fraction of the natural scale below which a negative radicand counts as
/// rounding debris rather than a domain violation.
const RADICAND_SLACK: f64 = 1e-12;

/// Square root of a radicand that is nonnegative up to rounding: values in
/// [-RADICAND_SLACK * scale, 0) clamp to zero, anything more negative (or
/// NaN) is rejected.
pub(crate) fn clamped_sqrt(radicand: f64, scale: f64) -> Option<f64> {
    if radicand >= 0.0 {
        Some(radicand.sqrt())
    } else if radicand >= -RADICAND_SLACK * scale {
        Some(0.0)
    } else {
        None
    }
}

/// Validated arbelos configuration: enclosing radius R and chord T with
/// R > 0 and 0 <= T <= R, both endpoints admissible.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArbelosConfig {
    radius: f64,
    chord: f64,
}

/// Radii of the two inscribed semicircles. `r1` belongs to C1 on AN and
/// `r2` to C2 on NB; the Plus branch puts the larger of the pair in `r1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Radii {
    pub r1: f64,
    pub r2: f64,
}

/// The four areas of the decomposition A(C) = A(C1) + A(C2) + A(knife).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AreaReport {
    pub area_c: f64,
    pub area_c1: f64,
    pub area_c2: f64,
    pub area_knife: f64,
}

impl ArbelosConfig {
    /// Validates and stores (R, T).
    pub fn new(radius: f64, chord: f64) -> Result<Self> {
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::NonPositiveRadius(radius));
        }
        if !(chord.is_finite() && (0.0..=radius).contains(&chord)) {
            return Err(Error::ChordOutOfRange { chord, radius });
        }
        Ok(Self { radius, chord })
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn chord(&self) -> f64 {
        self.chord
    }

    /// Knife area pi T^2 / 4. Depends on the chord alone, not on R.
    pub fn knife_area(&self) -> f64 {
        FRAC_PI_4 * self.chord * self.chord
    }

    /// Inscribed radii for the chosen branch of
    /// (R1 - R/2)^2 = (R^2 - T^2)/4.
    pub fn radii(&self, branch: Branch) -> Radii {
        let (r, t) = (self.radius, self.chord);
        // The factored radicand stays exact-to-rounding when T is within an
        // ulp of R; validation guarantees it is nonnegative.
        let s = clamped_sqrt((r - t) * (r + t), r * r)
            .expect("radicand is nonnegative for a validated config");
        let sum = r + s;
        let larger = 0.5 * sum;
        // Root product R1*R2 = T^2/4 divided by the larger root: the direct
        // difference (R - s)/2 cancels catastrophically for small T.
        let smaller = (t * t) / (2.0 * sum);
        // Rounding can misorder the pair only at T = R where the roots tie.
        let (big, small) = (larger.max(smaller), larger.min(smaller));
        match branch {
            Branch::Plus => Radii { r1: big, r2: small },
            Branch::Minus => Radii { r1: small, r2: big },
        }
    }

    /// Areas (A(C1), A(C2)) with the larger semicircle first.
    pub fn semicircle_areas(&self) -> (f64, f64) {
        let Radii { r1, r2 } = self.radii(Branch::Plus);
        (FRAC_PI_2 * r1 * r1, FRAC_PI_2 * r2 * r2)
    }

    /// Full area decomposition of the configuration.
    pub fn area_decomposition(&self) -> AreaReport {
        let (area_c1, area_c2) = self.semicircle_areas();
        AreaReport {
            area_c: FRAC_PI_2 * self.radius * self.radius,
            area_c1,
            area_c2,
            area_knife: self.knife_area(),
        }
    }
}

/// Chord length 2 sqrt(R1 R2) reconstructed from the inscribed radii.
pub fn chord_from_radii(r1: f64, r2: f64) -> Result<f64> {
    if !(r1.is_finite() && r1 >= 0.0) {
        return Err(Error::NegativeRadius(r1));
    }
    if !(r2.is_finite() && r2 >= 0.0) {
        return Err(Error::NegativeRadius(r2));
    }
    Ok(2.0 * (r1 * r2).sqrt())
}
