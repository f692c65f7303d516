//! Deterministic SVG rendering of an arbelos figure.
//!
//! The mathematical frame is y-up with the diameter AB on the x axis; SVG
//! is y-down. A single affine map converts between them:
//!
//! ```text
//! scale = (canvas_width - 2 margin) / (2 R)
//! X(x)  = margin + (x + R) scale
//! Y(y)  = margin + (R - y) scale
//! ```
//!
//! All coordinates are printed with exactly six decimal places and
//! negative zero is normalized, so identical inputs produce identical
//! bytes. Arcs use elliptical-arc path commands (large-arc 0, sweep 1,
//! which traces the upper semicircle when moving left to right); arcs and
//! segments shorter than 1e-9 R are elided rather than emitted as
//! zero-size artifacts.

use std::fmt::Write;

use crate::construction::{Figure, Point};
use crate::error::{Error, Result};

const STROKE: &str = "#1f2933";
const SHADE_FILL: &str = "#cdd9ea";

/// Rendering options.
#[derive(Debug, Clone, PartialEq)]
pub struct RenderOptions {
    pub canvas_width: u32,
    pub margin: u32,
    pub shade_knife: bool,
    pub show_labels: bool,
    pub stroke_width: f64,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self {
            canvas_width: 640,
            margin: 40,
            shade_knife: false,
            show_labels: true,
            stroke_width: 2.0,
        }
    }
}

impl RenderOptions {
    fn validate(&self) -> Result<()> {
        if u64::from(self.canvas_width) <= 2 * u64::from(self.margin) {
            return Err(Error::InvalidOptions(format!(
                "canvas width {} must exceed twice the margin {}",
                self.canvas_width, self.margin
            )));
        }
        if !(self.stroke_width.is_finite() && self.stroke_width > 0.0) {
            return Err(Error::InvalidOptions(format!(
                "stroke width must be positive and finite, got {}",
                self.stroke_width
            )));
        }
        Ok(())
    }
}

/// Affine map from the y-up mathematical frame to y-down pixel space.
struct Frame {
    scale: f64,
    margin: f64,
    radius: f64,
}

impl Frame {
    fn new(figure: &Figure, options: &RenderOptions) -> Self {
        let margin = f64::from(options.margin);
        let inner = f64::from(options.canvas_width) - 2.0 * margin;
        Self {
            scale: inner / (2.0 * figure.radius()),
            margin,
            radius: figure.radius(),
        }
    }

    fn x(&self, x: f64) -> f64 {
        self.margin + (x + self.radius) * self.scale
    }

    fn y(&self, y: f64) -> f64 {
        self.margin + (self.radius - y) * self.scale
    }

    fn map(&self, p: Point) -> (f64, f64) {
        (self.x(p.x), self.y(p.y))
    }
}

/// Fixed six-decimal coordinate formatting with negative zero normalized,
/// so equal coordinates always print identically.
fn fmt6(value: f64) -> String {
    let text = format!("{value:.6}");
    if text == "-0.000000" {
        "0.000000".to_string()
    } else {
        text
    }
}

/// Path data for an upper semicircular arc from `left` to `right`.
fn arc_data(frame: &Frame, left: Point, right: Point, radius: f64) -> String {
    let (x1, y1) = frame.map(left);
    let (x2, y2) = frame.map(right);
    let r = fmt6(radius * frame.scale);
    format!(
        "M {} {} A {r} {r} 0 0 1 {} {}",
        fmt6(x1),
        fmt6(y1),
        fmt6(x2),
        fmt6(y2)
    )
}

/// Renders the figure as a standalone SVG 1.1 document.
///
/// The document contains the three semicircular arcs, the diameter AB, the
/// chord PN, point markers and labels for A, B, N, P, O when
/// `show_labels`, and a single even-odd filled path shading the knife when
/// `shade_knife`. Output is byte-deterministic for identical inputs.
pub fn render_figure(figure: &Figure, options: &RenderOptions) -> Result<String> {
    options.validate()?;
    let frame = Frame::new(figure, options);
    let degenerate = 1e-9 * figure.radius();

    let margin = f64::from(options.margin);
    let inner = f64::from(options.canvas_width) - 2.0 * margin;
    let height = (inner / 2.0).ceil() as u64 + 2 * u64::from(options.margin);
    let width = options.canvas_width;

    // Arcs left to right: C spans AB, C1 spans AN, C2 spans NB.
    let arcs = [
        (figure.a(), figure.b(), figure.radius()),
        (figure.a(), figure.n(), figure.r1()),
        (figure.n(), figure.b(), figure.r2()),
    ];

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );

    if options.shade_knife {
        // One even-odd path: the C subpath minus both inner subpaths
        // leaves exactly the knife filled.
        let subpaths: Vec<String> = arcs
            .iter()
            .filter(|(_, _, radius)| *radius >= degenerate)
            .map(|(left, right, radius)| format!("{} Z", arc_data(&frame, *left, *right, *radius)))
            .collect();
        let _ = writeln!(
            svg,
            "<path d=\"{}\" fill=\"{SHADE_FILL}\" fill-rule=\"evenodd\" stroke=\"none\"/>",
            subpaths.join(" ")
        );
    }

    let stroke_width = fmt6(options.stroke_width);
    for (left, right, radius) in arcs {
        if radius < degenerate {
            continue;
        }
        let _ = writeln!(
            svg,
            "<path d=\"{}\" fill=\"none\" stroke=\"{STROKE}\" stroke-width=\"{stroke_width}\"/>",
            arc_data(&frame, left, right, radius)
        );
    }

    let (ax, ay) = frame.map(figure.a());
    let (bx, by) = frame.map(figure.b());
    let _ = writeln!(
        svg,
        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{STROKE}\" stroke-width=\"{stroke_width}\"/>",
        fmt6(ax),
        fmt6(ay),
        fmt6(bx),
        fmt6(by)
    );
    if figure.chord() >= degenerate {
        let (nx, ny) = frame.map(figure.n());
        let (px, py) = frame.map(figure.p());
        let _ = writeln!(
            svg,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{STROKE}\" stroke-width=\"{stroke_width}\" stroke-dasharray=\"5 4\"/>",
            fmt6(nx),
            fmt6(ny),
            fmt6(px),
            fmt6(py)
        );
    }

    if options.show_labels {
        // Text anchors sit exactly on the mapped point; dy nudges the
        // baseline clear of the geometry (N sits a row below O so the two
        // stay readable when n = 0 makes the points coincide).
        let labels = [
            (figure.a(), "A", 14),
            (figure.b(), "B", 14),
            (figure.o(), "O", 14),
            (figure.n(), "N", 28),
            (figure.p(), "P", -8),
        ];
        let _ = writeln!(svg, "<g fill=\"{STROKE}\">");
        for (point, _, _) in labels {
            let (cx, cy) = frame.map(point);
            let _ = writeln!(
                svg,
                "<circle cx=\"{}\" cy=\"{}\" r=\"3\"/>",
                fmt6(cx),
                fmt6(cy)
            );
        }
        let _ = writeln!(svg, "</g>");
        let _ = writeln!(
            svg,
            "<g font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" fill=\"{STROKE}\">"
        );
        for (point, name, dy) in labels {
            let (x, y) = frame.map(point);
            let _ = writeln!(
                svg,
                "<text x=\"{}\" y=\"{}\" dy=\"{dy}\">{name}</text>",
                fmt6(x),
                fmt6(y)
            );
        }
        let _ = writeln!(svg, "</g>");
    }

    svg.push_str("</svg>\n");
    Ok(svg)
}
