//! Deterministic SVG rendering of the figure.
//!
//! Renders the 3-4-5 arbelos with the knife shaded and writes it next to
//! the current directory, then renders the same figure again to show the
//! output is byte-identical. Open arbelos.svg in any browser.
//!
//! Run with: cargo run --example figure_svg

use arbelos::{render_figure, Figure, RenderOptions};

fn main() -> arbelos::Result<()> {
    let figure = Figure::build(5.0, 3.0)?;
    let options = RenderOptions {
        shade_knife: true,
        ..RenderOptions::default()
    };

    let svg = render_figure(&figure, &options)?;
    let again = render_figure(&figure, &options)?;
    assert_eq!(svg, again, "rendering is deterministic");

    let path = "arbelos.svg";
    std::fs::write(path, &svg).expect("current directory is writable");
    println!("wrote {path} ({} bytes)", svg.len());
    println!(
        "figure: R = {}, N offset = {}, chord = {}",
        figure.radius(),
        figure.n().x,
        figure.chord()
    );
    println!("arcs drawn at pixel radii proportional to 5, 4, 1");
    Ok(())
}
