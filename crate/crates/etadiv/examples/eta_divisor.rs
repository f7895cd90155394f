//! Build an eta-quotient, test its modularity conditions, and locate all
//! of its zeros and poles on the modular curve.
//!
//! The running example is the level-11 quotient (eta(q)/eta(q^11))^12, a
//! modular function whose divisor is 5(0) - 5(inf): a pole of order 5 at
//! the cusp infinity, a zero of order 5 at the cusp 0, nothing anywhere
//! else.
//!
//!     cargo run --example eta_divisor

use etadiv::gamma0::Cusp;
use etadiv::rational::format_rational;
use etadiv::EtaQuotient;

fn main() -> Result<(), etadiv::Error> {
    let f = EtaQuotient::parse(11, "1:12,11:-12")?;
    println!("f = {f}");
    println!("weight = {}", format_rational(&f.weight()));
    println!();

    // the four congruence/square conditions for modularity on Gamma_0(N)
    let rep = f.ligozat_check();
    println!("cond1 (sum d*r_d = 0 mod 24):       {}", rep.cond1);
    println!("cond2 (sum (N/d)*r_d = 0 mod 24):   {}", rep.cond2);
    println!("cond3 (sum r_d = 0):                {}", rep.cond3);
    println!("cond4 (prod (N/d)^r_d is a square): {}", rep.cond4);
    println!("modular function on Gamma_0(11):    {}", rep.all_conditions_hold());
    println!();

    // exact order of vanishing at each cusp, via the closed-form sum over
    // divisors; no series expansion is involved
    let div = f.divisor();
    println!("divisor: {div}");
    for (cusp, order) in div.orders() {
        println!("  order at {} (width {}): {}", cusp.label(), cusp.width(), format_rational(order));
    }
    println!("degree (sum of orders): {}", format_rational(&div.degree()));
    println!();

    // the Fricke involution z -> -1/(Nz) maps d -> N/d on exponents and
    // swaps the cusps 0 and infinity
    let g = f.fricke_transform();
    println!("Fricke transform: {g}");
    println!(
        "  order at inf: {}  (was {} at 0)",
        format_rational(&g.order_at_cusp(&Cusp::infinity(11))?),
        format_rational(&f.order_at_cusp(&Cusp::zero(11))?),
    );

    Ok(())
}
