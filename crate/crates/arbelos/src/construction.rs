//! Coordinate-level Euclidean construction of the arbelos figure.
//!
//! The frame puts the center O at the origin with the base diameter on the
//! x-axis: A = (-R, 0), B = (R, 0), and the cusp N = (n, 0) for a signed
//! offset n in [-R, R]. Lifting N to the enclosing circle gives
//! P = (n, sqrt(R^2 - n^2)). Thales' theorem makes the inscribed angle APB
//! right, and PN is the geometric mean of AN and NB; both claims are
//! checkable on the built coordinates. Membership predicates use strict
//! interiors, so the open regions C1, C2, and knife partition the open
//! upper half-disk up to the measure-zero inner arcs.

use crate::error::{Error, Result};

/// A point of the construction plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }
}

fn dist_squared(a: Point, b: Point) -> f64 {
    let dx = a.x - b.x;
    let dy = a.y - b.y;
    dx * dx + dy * dy
}

/// Selector for the three semicircular disks of the figure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SemicircleId {
    /// The enclosing semicircle on AB.
    C,
    /// The inscribed semicircle on AN.
    C1,
    /// The inscribed semicircle on NB.
    C2,
}

/// The built arbelos figure: the five named points and the derived lengths.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Figure {
    a: Point,
    b: Point,
    n: Point,
    p: Point,
    o: Point,
    radius: f64,
    r1: f64,
    r2: f64,
    chord: f64,
}

impl Figure {
    /// Builds the figure for enclosing radius R and cusp offset n from the
    /// center, with P = (n, sqrt(R^2 - n^2)).
    pub fn build(radius: f64, offset: f64) -> Result<Self> {
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::NonPositiveRadius(radius));
        }
        if !(offset.is_finite() && offset.abs() <= radius) {
            return Err(Error::PointOffDiameter { offset, radius });
        }
        // Factored radicand keeps T accurate when N sits near an endpoint.
        let chord = ((radius - offset) * (radius + offset)).sqrt();
        Ok(Self {
            a: Point::new(-radius, 0.0),
            b: Point::new(radius, 0.0),
            n: Point::new(offset, 0.0),
            p: Point::new(offset, chord),
            o: Point::new(0.0, 0.0),
            radius,
            r1: (radius + offset) / 2.0,
            r2: (radius - offset) / 2.0,
            chord,
        })
    }

    pub fn a(&self) -> Point {
        self.a
    }

    pub fn b(&self) -> Point {
        self.b
    }

    pub fn n(&self) -> Point {
        self.n
    }

    pub fn p(&self) -> Point {
        self.p
    }

    pub fn o(&self) -> Point {
        self.o
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Radius of C1, the semicircle on AN.
    pub fn r1(&self) -> f64 {
        self.r1
    }

    /// Radius of C2, the semicircle on NB.
    pub fn r2(&self) -> f64 {
        self.r2
    }

    /// Length T of the perpendicular half-chord PN.
    pub fn chord(&self) -> f64 {
        self.chord
    }

    /// Center of C1, the midpoint of A and N.
    pub fn c1_center(&self) -> Point {
        Point::new((self.a.x + self.n.x) / 2.0, 0.0)
    }

    /// Center of C2, the midpoint of N and B.
    pub fn c2_center(&self) -> Point {
        Point::new((self.n.x + self.b.x) / 2.0, 0.0)
    }

    /// Deviation |angle APB - pi/2| in radians, measured from the vectors
    /// P->A and P->B.
    pub fn thales_deviation(&self) -> Result<f64> {
        if self.chord == 0.0 {
            return Err(Error::DegenerateTriangle);
        }
        let (ax, ay) = (self.a.x - self.p.x, self.a.y - self.p.y);
        let (bx, by) = (self.b.x - self.p.x, self.b.y - self.p.y);
        let dot = ax * bx + ay * by;
        let cross = ax * by - ay * bx;
        let angle = cross.abs().atan2(dot);
        Ok((angle - std::f64::consts::FRAC_PI_2).abs())
    }

    /// Residual |T^2 - AN * NB| of the geometric-mean relation.
    pub fn geometric_mean_residual(&self) -> f64 {
        let an = self.n.x - self.a.x;
        let nb = self.b.x - self.n.x;
        (self.chord * self.chord - an * nb).abs()
    }

    /// True iff `q` lies strictly inside the selected open semicircular
    /// disk (upper half plane only).
    pub fn in_semicircle(&self, q: Point, which: SemicircleId) -> bool {
        if q.y.is_nan() || q.y <= 0.0 {
            return false;
        }
        let (center, radius) = match which {
            SemicircleId::C => (self.o, self.radius),
            SemicircleId::C1 => (self.c1_center(), self.r1),
            SemicircleId::C2 => (self.c2_center(), self.r2),
        };
        dist_squared(q, center) < radius * radius
    }

    /// True iff `q` lies strictly inside the knife: inside C and strictly
    /// outside both inscribed disks. Points on any bounding arc belong to
    /// no region.
    pub fn in_knife(&self, q: Point) -> bool {
        self.in_semicircle(q, SemicircleId::C)
            && dist_squared(q, self.c1_center()) > self.r1 * self.r1
            && dist_squared(q, self.c2_center()) > self.r2 * self.r2
    }
}
