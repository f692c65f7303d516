//! Independent numerical estimation of region areas.
//!
//! Everything here measures area by membership testing alone: a predicate
//! says whether a point lies in the region, and the oracle counts. No
//! closed form from [`crate::geometry`] enters the estimate, which is what
//! makes the oracle fit to check those closed forms.
//!
//! Two methods are provided. Monte Carlo draws uniform points from a
//! bounding box and scales the hit fraction by the box area; its standard
//! error comes from the binomial variance of the hit count. The grid
//! method evaluates the predicate at cell midpoints of a regular lattice
//! and scores each cell by its midpoint value, bounding the error by the
//! total area of cells whose corner and midpoint samples disagree.
//!
//! Estimates are deterministic functions of [`OracleConfig`]. Monte Carlo
//! work is split into fixed batches of 65536 samples, batch i drawing from
//! generator stream i, and only integer hit counts cross batch boundaries,
//! so the result is bit-identical regardless of how many worker threads
//! rayon schedules.

pub mod rng;

use rayon::prelude::*;

use crate::construction::{Figure, Point, SemicircleId};
use crate::error::{Error, Result};
use crate::geometry::{clamped_sqrt, ArbelosConfig};
pub use rng::SplitMix64;

/// Default Monte Carlo sample count.
pub const DEFAULT_SAMPLES: u64 = 1_000_000;
/// Default grid resolution (cells per axis).
pub const DEFAULT_GRID_RESOLUTION: u32 = 1024;

/// Samples per Monte Carlo batch; batch i uses generator stream i.
const BATCH: u64 = 1 << 16;

/// Estimation method.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    MonteCarlo,
    Grid,
}

/// Parameters of one oracle run.
///
/// `samples` and `seed` drive Monte Carlo, `grid_resolution` drives the
/// grid; the inactive fields are carried so a config can be re-run under
/// either method.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub method: Method,
    pub samples: u64,
    pub grid_resolution: u32,
    pub seed: u64,
}

impl OracleConfig {
    /// Monte Carlo config with default grid resolution.
    pub fn monte_carlo(samples: u64, seed: u64) -> Self {
        Self {
            method: Method::MonteCarlo,
            samples: samples.max(1),
            grid_resolution: DEFAULT_GRID_RESOLUTION,
            seed,
        }
    }

    /// Grid config with default sampling parameters.
    pub fn grid(resolution: u32) -> Self {
        Self {
            method: Method::Grid,
            samples: DEFAULT_SAMPLES,
            grid_resolution: resolution.max(2),
            seed: 0,
        }
    }
}

/// Axis-aligned sampling rectangle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundingBox {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl BoundingBox {
    pub fn new(x_min: f64, x_max: f64, y_min: f64, y_max: f64) -> Self {
        Self {
            x_min,
            x_max,
            y_min,
            y_max,
        }
    }

    fn width(&self) -> f64 {
        self.x_max - self.x_min
    }

    fn height(&self) -> f64 {
        self.y_max - self.y_min
    }

    fn area(&self) -> f64 {
        self.width() * self.height()
    }

    fn validate(&self) -> Result<()> {
        let finite = [self.x_min, self.x_max, self.y_min, self.y_max]
            .iter()
            .all(|v| v.is_finite());
        if !finite || self.width() <= 0.0 || self.height() <= 0.0 {
            return Err(Error::EmptyBox);
        }
        Ok(())
    }
}

/// Area estimate with a method-specific uncertainty.
///
/// For Monte Carlo, `std_error` is one binomial standard deviation; for
/// the grid, it is a hard bound (total area of boundary-straddling cells).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub std_error: f64,
}

/// Estimates the area of `{ q in bounds : predicate(q) }`.
pub fn estimate_area<F>(
    predicate: F,
    bounds: BoundingBox,
    config: &OracleConfig,
) -> Result<Estimate>
where
    F: Fn(Point) -> bool + Sync,
{
    bounds.validate()?;
    match config.method {
        Method::MonteCarlo => Ok(monte_carlo(
            &predicate,
            bounds,
            config.samples.max(1),
            config.seed,
        )),
        Method::Grid => Ok(grid(&predicate, bounds, config.grid_resolution.max(2))),
    }
}

fn monte_carlo<F>(predicate: &F, bounds: BoundingBox, samples: u64, seed: u64) -> Estimate
where
    F: Fn(Point) -> bool + Sync,
{
    let batches = samples.div_ceil(BATCH);
    let hits: u64 = (0..batches)
        .into_par_iter()
        .map(|batch| {
            let quota = BATCH.min(samples - batch * BATCH);
            let mut rng = SplitMix64::with_stream(seed, batch);
            let mut hits = 0u64;
            for _ in 0..quota {
                let x = bounds.x_min + bounds.width() * rng.next_f64();
                let y = bounds.y_min + bounds.height() * rng.next_f64();
                hits += u64::from(predicate(Point::new(x, y)));
            }
            hits
        })
        .sum();

    let fraction = hits as f64 / samples as f64;
    let area = bounds.area();
    Estimate {
        value: area * fraction,
        std_error: area * (fraction * (1.0 - fraction) / samples as f64).sqrt(),
    }
}

fn grid<F>(predicate: &F, bounds: BoundingBox, resolution: u32) -> Estimate
where
    F: Fn(Point) -> bool + Sync,
{
    let m = resolution as usize;
    let cell_w = bounds.width() / f64::from(resolution);
    let cell_h = bounds.height() / f64::from(resolution);

    // Corner lattice, (m + 1)^2 samples shared by adjacent cells.
    let corners: Vec<bool> = (0..=m)
        .into_par_iter()
        .flat_map_iter(|j| {
            let y = bounds.y_min + cell_h * j as f64;
            (0..=m).map(move |i| predicate(Point::new(bounds.x_min + cell_w * i as f64, y)))
        })
        .collect();

    let (inside, straddling) = (0..m)
        .into_par_iter()
        .map(|j| {
            let y_mid = bounds.y_min + cell_h * (j as f64 + 0.5);
            let mut inside = 0u64;
            let mut straddling = 0u64;
            for i in 0..m {
                let x_mid = bounds.x_min + cell_w * (i as f64 + 0.5);
                let mid = predicate(Point::new(x_mid, y_mid));
                inside += u64::from(mid);
                let cell_corners = [
                    corners[j * (m + 1) + i],
                    corners[j * (m + 1) + i + 1],
                    corners[(j + 1) * (m + 1) + i],
                    corners[(j + 1) * (m + 1) + i + 1],
                ];
                if cell_corners.iter().any(|&c| c != mid) {
                    straddling += 1;
                }
            }
            (inside, straddling)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));

    let cells = f64::from(resolution) * f64::from(resolution);
    let area = bounds.area();
    Estimate {
        value: area * inside as f64 / cells,
        std_error: area * straddling as f64 / cells,
    }
}

/// Region labels appearing in a [`VerificationReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegionId {
    Knife,
    C1,
    C2,
    C,
}

impl RegionId {
    pub fn label(self) -> &'static str {
        match self {
            RegionId::Knife => "knife",
            RegionId::C1 => "C1",
            RegionId::C2 => "C2",
            RegionId::C => "C",
        }
    }
}

/// One region's closed-form area against its numerical estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegionCheck {
    pub region: RegionId,
    pub closed_form: f64,
    pub estimate: Estimate,
    pub discrepancy: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Outcome of verifying all four regions of one configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub regions: Vec<RegionCheck>,
    pub pass: bool,
}

/// Checks every closed-form area of `config` against the oracle.
///
/// The figure is laid out in the plus-branch orientation (larger inscribed
/// semicircle on the A side) inside the box [-R, R] x [0, R]. Monte Carlo
/// passes when each discrepancy is within max(4 standard errors, 1e-6 R^2);
/// the grid passes within its straddle bound plus 1e-9 R^2 slack.
///
/// A zero chord degenerates the knife to a point and C2 to nothing, which
/// the membership predicates cannot distinguish from an empty figure, so
/// verification requires `chord > 0`.
pub fn verify_config(config: &ArbelosConfig, oracle: &OracleConfig) -> Result<VerificationReport> {
    let radius = config.radius();
    let chord = config.chord();
    if chord <= 0.0 {
        return Err(Error::DegenerateChord(chord));
    }

    let offset = clamped_sqrt((radius - chord) * (radius + chord), radius * radius)
        .expect("validated config has an admissible chord");
    let figure = Figure::build(radius, offset)?;
    let areas = config.area_decomposition();
    let bounds = BoundingBox::new(-radius, radius, 0.0, radius);
    let scale = radius * radius;

    let targets = [
        (RegionId::Knife, areas.area_knife),
        (RegionId::C1, areas.area_c1),
        (RegionId::C2, areas.area_c2),
        (RegionId::C, areas.area_c),
    ];

    let mut regions = Vec::with_capacity(targets.len());
    for (region, closed_form) in targets {
        let estimate = match region {
            RegionId::Knife => estimate_area(|q| figure.in_knife(q), bounds, oracle)?,
            RegionId::C1 => estimate_area(
                |q| figure.in_semicircle(q, SemicircleId::C1),
                bounds,
                oracle,
            )?,
            RegionId::C2 => estimate_area(
                |q| figure.in_semicircle(q, SemicircleId::C2),
                bounds,
                oracle,
            )?,
            RegionId::C => {
                estimate_area(|q| figure.in_semicircle(q, SemicircleId::C), bounds, oracle)?
            }
        };
        let discrepancy = (closed_form - estimate.value).abs();
        let tolerance = match oracle.method {
            Method::MonteCarlo => (4.0 * estimate.std_error).max(1e-6 * scale),
            Method::Grid => estimate.std_error + 1e-9 * scale,
        };
        regions.push(RegionCheck {
            region,
            closed_form,
            estimate,
            discrepancy,
            tolerance,
            pass: discrepancy <= tolerance,
        });
    }

    Ok(VerificationReport {
        pass: regions.iter().all(|check| check.pass),
        regions,
    })
}
