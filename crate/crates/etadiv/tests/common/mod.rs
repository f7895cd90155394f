//! Helpers shared by the integration tests.
//!
//! The dense-product routines here are an independent oracle: they compute
//! eta-quotient coefficients by direct polynomial multiplication, one
//! factor `(1 - q^m)` at a time, with none of the sparse pentagonal
//! machinery the library uses.

use num::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use etadiv::arith::divisors;
use etadiv::EtaQuotient;

/// In-place multiplication of a dense polynomial by `1 - q^m`.
fn mul_one_minus(out: &mut [BigInt], m: usize) {
    for i in (m..out.len()).rev() {
        let v = &out[i] - &out[i - m];
        out[i] = v;
    }
}

/// In-place multiplication by `1/(1 - q^m) = 1 + q^m + q^{2m} + ...`.
fn div_one_minus(out: &mut [BigInt], m: usize) {
    for i in m..out.len() {
        let v = &out[i] + &out[i - m];
        out[i] = v;
    }
}

/// Coefficients of `prod_{d, r} prod_{n >= 1} (1 - q^{dn})^r` through
/// `q^(len-1)`. The full eta-quotient is this series times
/// `q^(sum d*r_d / 24)`.
pub fn dense_quotient_coeffs(exponents: &[(u64, i64)], len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(0); len];
    out[0] = BigInt::from(1);
    for &(d, r) in exponents {
        let mut m = d as usize;
        while m < len {
            for _ in 0..r.unsigned_abs() {
                if r > 0 {
                    mul_one_minus(&mut out, m);
                } else {
                    div_one_minus(&mut out, m);
                }
            }
            m += d as usize;
        }
    }
    out
}

/// Deterministic sample of nonzero eta-quotients with level at most
/// `max_level` and exponents bounded by `max_exp` in absolute value.
pub fn random_quotients(seed: u64, count: usize, max_level: u64, max_exp: i64) -> Vec<EtaQuotient> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let level = rng.gen_range(1..=max_level);
        let exps: Vec<(u64, i64)> = divisors(level)
            .into_iter()
            .map(|d| (d, rng.gen_range(-max_exp..=max_exp)))
            .collect();
        if exps.iter().any(|&(_, r)| r != 0) {
            out.push(EtaQuotient::new(level, exps).expect("divisor exponents are valid"));
        }
    }
    out
}
