//! The valence formula as an accounting identity: a nonzero modular form
//! of weight k on Gamma_0(N) has total zero-mass k*mu/12, counting cusps
//! with weight 1, elliptic points over i with 1/2, over omega with 1/3.
//!
//! Given a divisor one can check the identity at a stated weight, or run
//! it backwards and infer the only weight that balances. For weight-2
//! forms at prime level, subtracting the cusp mass (the genus at infinity
//! plus matching mass elsewhere) leaves a residue depending only on
//! p mod 12.
//!
//!     cargo run --example valence_budget

use etadiv::rational::{format_rational, rat};
use etadiv::valence::{budget, check_valence, dim_level1, infer_weight, residual_weight, Divisor};

fn main() -> Result<(), etadiv::Error> {
    // the weight-1 form on Gamma_0(31): simple zeros at both cusps plus
    // the two elliptic points over omega, each counting 1/3
    let div = Divisor::parse(31, "0=1;inf=1;w=2")?;
    println!("divisor on X_0(31): {div}");
    println!("weighted degree:    {}", format_rational(&div.weighted_degree()));
    println!("budget(31, 1):      {}", format_rational(&budget(31, &rat(1))?));
    println!("balances at weight 1: {}", check_valence(&div, 31, &rat(1))?);
    println!();

    // run backwards: the square of that form must have weight 2
    let square = div.scale(2);
    println!("doubled divisor:    {square}");
    println!("inferred weight:    {}", format_rational(&infer_weight(&square, 31)?));
    println!();

    // residual zero-mass of weight-2 forms at prime level, after removing
    // 2*genus(p) of cusp mass; the value depends only on p mod 12
    println!("residual weights at prime level (weight 2):");
    for p in [13, 17, 19, 29, 31, 37, 41, 43] {
        println!("  p = {:>3} (p mod 12 = {:>2}): {}", p, p % 12, format_rational(&residual_weight(p)?));
    }
    // p = 11 mod 12 stays open: nu2 = nu3 = 0 leaves no forced residue
    match residual_weight(11) {
        Err(e) => println!("  p =  11: {e}"),
        Ok(_) => unreachable!("11 mod 12 is not decided"),
    }
    println!();

    // level 1 dimension counts, the classical staircase
    print!("dim M_k(SL_2(Z)) for k = 0, 2, ..., 24:");
    for k in (0..=24).step_by(2) {
        print!(" {}", dim_level1(k)?);
    }
    println!();

    Ok(())
}
