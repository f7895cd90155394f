//! Invariants of the congruence subgroup Gamma_0(N) and the geometry of
//! the modular curve X_0(N): index, elliptic-point counts, cusps with
//! their widths, genus, and the structure of the fibers over i and omega.
//!
//!     cargo run --example gamma0_invariants

use etadiv::gamma0::{cusps, fiber_over, invariants, BasePoint};

fn main() -> Result<(), etadiv::Error> {
    println!("{:>5} {:>6} {:>4} {:>4} {:>6} {:>6}", "N", "index", "nu2", "nu3", "cusps", "genus");
    for level in [1, 2, 3, 11, 21, 28, 31, 47, 49, 50] {
        let d = invariants(level)?;
        println!(
            "{:>5} {:>6} {:>4} {:>4} {:>6} {:>6}",
            d.level, d.index, d.nu2, d.nu3, d.cusp_count, d.genus
        );
    }
    println!();

    // cusp classes of Gamma_0(28): fractions a/c with c | 28, one
    // representative per class, widths summing to the index
    println!("cusps of Gamma_0(28):");
    let mut width_sum = 0;
    for c in cusps(28)? {
        println!("  {:<5} a/c = {}/{}  width {}", c.label(), c.numerator(), c.denominator(), c.width());
        width_sum += c.width();
    }
    println!("  widths sum to {width_sum} = index");
    println!();

    // over omega, X_0(31) has 2 elliptic points (fixed by an order-3
    // stabilizer) and 10 ordinary points where the covering has index 3
    let fiber = fiber_over(31, BasePoint::Omega)?;
    println!(
        "fiber of X_0(31) over omega: {} elliptic + {} points of index {}",
        fiber.elliptic_count, fiber.ramified_count, fiber.ramification_index
    );
    let fiber = fiber_over(31, BasePoint::I)?;
    println!(
        "fiber of X_0(31) over i:     {} elliptic + {} points of index {}",
        fiber.elliptic_count, fiber.ramified_count, fiber.ramification_index
    );

    Ok(())
}
