//! Closed-form area decomposition of one configuration.
//!
//! Builds the (R, T) = (1, 0.6) arbelos, prints every region area, and
//! checks the conservation identity on the spot: the two inscribed
//! semicircles and the knife tile the circumscribing semicircle exactly.
//!
//! Run with: cargo run --example areas

use arbelos::{ArbelosConfig, Branch};

fn main() -> arbelos::Result<()> {
    let config = ArbelosConfig::new(1.0, 0.6)?;
    let areas = config.area_decomposition();
    let radii = config.radii(Branch::Plus);

    println!(
        "configuration: R = {}, T = {}",
        config.radius(),
        config.chord()
    );
    println!(
        "inscribed radii (plus branch): R1 = {}, R2 = {}",
        radii.r1, radii.r2
    );
    println!();
    println!("area of C      = {:.15}", areas.area_c);
    println!("area of C1     = {:.15}", areas.area_c1);
    println!("area of C2     = {:.15}", areas.area_c2);
    println!("area of knife  = {:.15}", areas.area_knife);
    println!();

    let tiles = areas.area_c1 + areas.area_c2 + areas.area_knife;
    let half_disk = std::f64::consts::FRAC_PI_2 * config.radius() * config.radius();
    println!("C1 + C2 + knife = {:.15}", tiles);
    println!("pi R^2 / 2      = {:.15}", half_disk);
    println!("residual        = {:e}", (tiles - half_disk).abs());

    // The knife area equals that of the disk with diameter T, so it only
    // depends on the chord, not on where N splits the diameter.
    let same_chord = ArbelosConfig::new(5.0, 0.6)?;
    println!();
    println!(
        "knife area at R = 5 with the same chord: {:.15}",
        same_chord.knife_area()
    );
    Ok(())
}
