//! Coordinate construction and its classical checks.
//!
//! Places the 3-4-5 figure (R = 5, N offset 3) in the plane, prints every
//! construction point, and evaluates the two classical right-triangle
//! facts on the built coordinates: the angle at P inscribed in the
//! semicircle is right, and the chord is the geometric mean of the two
//! diameter segments. Membership predicates then classify a few points.
//!
//! Run with: cargo run --example construct

use arbelos::{Figure, Point, SemicircleId};

fn main() -> arbelos::Result<()> {
    let figure = Figure::build(5.0, 3.0)?;

    println!("A = ({}, {})", figure.a().x, figure.a().y);
    println!("B = ({}, {})", figure.b().x, figure.b().y);
    println!("O = ({}, {})", figure.o().x, figure.o().y);
    println!("N = ({}, {})", figure.n().x, figure.n().y);
    println!("P = ({}, {})", figure.p().x, figure.p().y);
    println!("chord T = {}", figure.chord());
    println!(
        "inscribed radii: R1 = {}, R2 = {}",
        figure.r1(),
        figure.r2()
    );
    println!();

    println!(
        "angle APB deviation from a right angle: {:e} rad",
        figure.thales_deviation()?
    );
    println!("|T^2 - AN * NB| = {:e}", figure.geometric_mean_residual());
    println!();

    let probes = [
        Point::new(0.0, 1.0),
        Point::new(3.0, 3.9),
        Point::new(-1.0, 2.0),
        Point::new(4.5, 0.4),
    ];
    for q in probes {
        let regions = [
            ("C", figure.in_semicircle(q, SemicircleId::C)),
            ("C1", figure.in_semicircle(q, SemicircleId::C1)),
            ("C2", figure.in_semicircle(q, SemicircleId::C2)),
            ("knife", figure.in_knife(q)),
        ];
        let hits: Vec<&str> = regions
            .iter()
            .filter(|(_, inside)| *inside)
            .map(|(name, _)| *name)
            .collect();
        println!("({}, {}) lies in: {}", q.x, q.y, hits.join(", "));
    }
    Ok(())
}
