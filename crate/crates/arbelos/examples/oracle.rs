//! Numerical verification of the closed forms.
//!
//! The oracle never touches a closed-form area: it measures regions by
//! membership counting alone, with Monte Carlo sampling and a midpoint
//! grid. This example estimates one knife area both ways, then runs the
//! full four-region verification and prints the report.
//!
//! Run with: cargo run --example oracle

use arbelos::{estimate_area, verify_config, ArbelosConfig, BoundingBox, Figure, OracleConfig};

fn main() -> arbelos::Result<()> {
    let config = ArbelosConfig::new(1.0, 0.6)?;
    let exact = config.knife_area();
    println!("closed-form knife area: {exact:.15}");

    // The plus-branch figure for this configuration has N at offset 0.8.
    let figure = Figure::build(1.0, 0.8)?;
    let bounds = BoundingBox::new(-1.0, 1.0, 0.0, 1.0);

    let mc = estimate_area(
        |q| figure.in_knife(q),
        bounds,
        &OracleConfig::monte_carlo(1_000_000, 42),
    )?;
    println!(
        "monte carlo:  {:.15} (std error {:.2e}, off by {:.2e})",
        mc.value,
        mc.std_error,
        (mc.value - exact).abs()
    );

    let grid = estimate_area(|q| figure.in_knife(q), bounds, &OracleConfig::grid(1024))?;
    println!(
        "midpoint grid: {:.15} (bound {:.2e}, off by {:.2e})",
        grid.value,
        grid.std_error,
        (grid.value - exact).abs()
    );
    println!();

    let report = verify_config(&config, &OracleConfig::monte_carlo(1_000_000, 42))?;
    println!(
        "{:<8}{:<22}{:<22}status",
        "region", "closed form", "estimate"
    );
    for check in &report.regions {
        println!(
            "{:<8}{:<22.15}{:<22.15}{}",
            check.region.label(),
            check.closed_form,
            check.estimate.value,
            if check.pass { "pass" } else { "FAIL" }
        );
    }
    println!("overall: {}", if report.pass { "pass" } else { "FAIL" });
    Ok(())
}
