//! Dimensionless reduction and the two quadratic branches.
//!
//! Rescaling all lengths by R collapses the two-parameter family (R, T)
//! to the single parameter t = T / R. This example walks one
//! configuration through normalize, completes the dimensionless state on
//! both branches, restores dimensions, and tabulates the solution over t.
//!
//! Run with: cargo run --example renormalize

use arbelos::dimensionless::{self, complete_state, solve_r1};
use arbelos::{ArbelosConfig, Branch};

fn main() -> arbelos::Result<()> {
    let config = ArbelosConfig::new(2.0, 1.0)?;
    let t = dimensionless::normalize(&config);
    println!(
        "R = {}, T = {} normalizes to t = {}",
        config.radius(),
        config.chord(),
        t
    );

    for branch in [Branch::Plus, Branch::Minus] {
        let r1 = solve_r1(t, branch)?;
        println!("{branch:?} root of 4 r1 (1 - r1) = t^2: r1 = {r1:.15}");
    }

    // The branches are complements: their roots always sum to exactly 1.
    let state = complete_state(t, Branch::Plus)?;
    println!(
        "plus-branch state: t = {}, r1 = {:.15}, r2 = {:.15}",
        state.t(),
        state.r1(),
        state.r2()
    );
    println!("r1 + r2 = {}", state.r1() + state.r2());

    let (restored, radii) = state.denormalize(config.radius())?;
    println!(
        "denormalized back to R = {}, T = {:.15}, R1 = {:.15}, R2 = {:.15}",
        restored.radius(),
        restored.chord(),
        radii.r1,
        radii.r2
    );

    println!();
    println!("{:<8}{:<22}r2", "t", "r1");
    for i in 0..=8 {
        let t = f64::from(i) / 8.0;
        let state = complete_state(t, Branch::Plus)?;
        println!("{t:<8}{:<22.15}{:.15}", state.r1(), state.r2());
    }

    // The stabilized minus root survives where the naive quadratic
    // formula would cancel: at t = 1e-8 it returns t^2 / 4 to the ulp.
    let tiny = solve_r1(1e-8, Branch::Minus)?;
    println!();
    println!("minus root at t = 1e-8: {tiny:e}");
    Ok(())
}
