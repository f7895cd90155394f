//! Exact q-expansions: the Dedekind eta function, the discriminant form
//! Delta = eta^24 with its Ramanujan tau coefficients, the Eisenstein
//! series E4 and E6, and the identity E4^3 - E6^2 = 1728 Delta checked
//! coefficient by coefficient.
//!
//! Exponents live in units of 1/24, so eta itself (leading term q^(1/24))
//! and integral forms share one representation. All coefficients are exact
//! big rationals.
//!
//!     cargo run --example qexpansion

use etadiv::qseries::{eisenstein_expansion, eta_expansion};
use etadiv::rational::rat;
use etadiv::{EtaQuotient, QSeries};

fn main() -> Result<(), etadiv::Error> {
    // eta(q) = q^(1/24) prod (1 - q^n), computed from the pentagonal-number
    // sparse form, truncated strictly below exponent 24*8
    let eta = eta_expansion(1, 24 * 8)?;
    println!("eta      = {eta}");

    // Delta = eta^24; powers go through repeated squaring
    let delta = eta.pow(24)?.truncated(24 * 8);
    println!("Delta    = {delta}");
    print!("tau(n) for n = 1..12:");
    let delta_long = eta_expansion(1, 24 * 13)?.pow(24)?;
    for n in 1..=12 {
        print!(" {}", delta_long.coeff_q(n).expect("inside precision window"));
    }
    println!();
    println!();

    let e4 = eisenstein_expansion(4, 24 * 8)?;
    let e6 = eisenstein_expansion(6, 24 * 8)?;
    println!("E4       = {e4}");
    println!("E6       = {e6}");

    let lhs = &e4.pow(3)? - &e6.pow(2)?;
    let rhs = &QSeries::constant(rat(1728), 24 * 8) * &delta_long;
    println!("E4^3 - E6^2 = {}", lhs.truncated(24 * 6));
    println!("1728 Delta  = {}", rhs.truncated(24 * 6));
    println!("identity holds on the common window: {}", lhs.agrees_with(&rhs));
    println!();

    // an eta-quotient expansion with a pole: the valuation read off the
    // series equals the closed-form order at infinity
    let f = EtaQuotient::parse(11, "1:12,11:-12")?;
    let series = f.expansion(-120 + 24 * 7)?;
    println!("f = {f}");
    println!("expansion(f) = {series}");
    println!(
        "valuation = {} (order at infinity from the divisor formula: {})",
        series.valuation()?,
        f.order_at_cusp(&etadiv::gamma0::Cusp::infinity(11))?
    );

    Ok(())
}
