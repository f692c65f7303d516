//! Arbelos area calculus: closed forms, dimensionless reduction, and
//! independent numerical verification.
//!
//! The arbelos ("shoemaker's knife") is the region between a semicircle of
//! radius R on diameter AB and two smaller semicircles on AN and NB, where
//! N splits the diameter. Its area equals that of the circle built on the
//! perpendicular half-chord PN of length T, so the whole two-parameter
//! family is governed by closed forms in (R, T) and, after rescaling by R,
//! by the single ratio t = T/R.
//!
//! Module map:
//! - [`geometry`]: validated configurations and the closed-form areas.
//! - [`dimensionless`]: the t = T/R reduction and its two solution branches.
//! - [`construction`]: coordinate-level figure building and membership
//!   predicates.
//! - [`oracle`]: Monte Carlo and grid quadrature estimates that check the
//!   closed forms without reusing them.
//! - [`svg`]: deterministic SVG rendering of the figure.
//! - [`cli`]: the `arbelos` command-line interface.
//!
//! Runnable walkthroughs live in `examples/`; try
//! `cargo run --example areas`.

pub mod cli;
pub mod construction;
pub mod dimensionless;
pub mod error;
pub mod geometry;
pub mod oracle;
pub mod svg;

pub use construction::{Figure, Point, SemicircleId};
pub use dimensionless::{Branch, DimensionlessState};
pub use error::{Error, Result};
pub use geometry::{chord_from_radii, ArbelosConfig, AreaReport, Radii};
pub use oracle::{
    estimate_area, verify_config, BoundingBox, Estimate, Method, OracleConfig, RegionCheck,
    RegionId, SplitMix64, VerificationReport,
};
pub use svg::{render_figure, RenderOptions};
