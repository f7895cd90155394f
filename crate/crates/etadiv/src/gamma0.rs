//! Arithmetic invariants of the congruence subgroup Gamma_0(N): index,
//! elliptic-point counts, genus, cusp enumeration with widths, and the
//! ramification structure of the covering X_0(N) -> X_0(1) over the two
//! elliptic base points i and omega.

use crate::arith::{divisors, euler_phi, gcd, legendre, prime_divisors};
use crate::Error;

/// The classical invariants of Gamma_0(N).
///
/// ```text
/// index      mu  = N prod_{p|N} (1 + 1/p)
/// nu2        number of order-2 elliptic points
/// nu3        number of order-3 elliptic points
/// cusp_count nu_inf = sum_{d|N} phi(gcd(d, N/d))
/// genus      1 + mu/12 - nu2/4 - nu3/3 - nu_inf/2
/// ```
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Gamma0Data {
    pub level: u64,
    pub index: u64,
    pub nu2: u64,
    pub nu3: u64,
    pub cusp_count: u64,
    pub genus: u64,
}

/// Compute the invariants of Gamma_0(N).
pub fn invariants(level: u64) -> Result<Gamma0Data, Error> {
    if level == 0 {
        return Err(Error::InvalidArgument("level must be a positive integer".into()));
    }
    let primes = prime_divisors(level);

    let mut index = level;
    for &p in &primes {
        index = index / p * (p + 1);
    }

    // nu2 is multiplicative: factor 1 + (-1|p) at odd primes, 1 at p = 2,
    // and 0 outright when 4 | N.
    let nu2 = if level.is_multiple_of(4) {
        0
    } else {
        let mut v = 1;
        for &p in &primes {
            if p == 2 {
                continue;
            }
            if legendre(-1, p) == 1 {
                v *= 2;
            } else {
                v = 0;
                break;
            }
        }
        v
    };

    // nu3 likewise with factor 1 + (-3|p): 2 when p = 1 mod 3, 0 when
    // p = 2 mod 3 (this includes p = 2), 1 at p = 3; 0 outright when 9 | N.
    let nu3 = if level.is_multiple_of(9) {
        0
    } else {
        let mut v = 1;
        for &p in &primes {
            match p % 3 {
                0 => {}
                1 => v *= 2,
                _ => {
                    v = 0;
                    break;
                }
            }
        }
        v
    };

    let cusp_count: u64 = divisors(level).iter().map(|&d| euler_phi(gcd(d, level / d))).sum();

    // 12 g = 12 + mu - 3 nu2 - 4 nu3 - 6 nu_inf, always a nonnegative
    // multiple of 12 by Riemann-Hurwitz for the covering of X_0(1).
    let twelve_genus =
        12 + index as i64 - 3 * nu2 as i64 - 4 * nu3 as i64 - 6 * cusp_count as i64;
    assert!(
        twelve_genus >= 0 && twelve_genus % 12 == 0,
        "genus formula broke at level {level}: 12g = {twelve_genus}"
    );

    Ok(Gamma0Data {
        level,
        index,
        nu2,
        nu3,
        cusp_count,
        genus: (twelve_genus / 12) as u64,
    })
}

/// A cusp of Gamma_0(N), stored as a canonical representative a/c.
///
/// Classes are parameterized by a divisor c of N together with a residue
/// a modulo gcd(c, N/c) coprime to c; two fractions a/c and a'/c' are
/// equivalent iff c = c' and a = a' modulo gcd(c, N/c). The canonical
/// representative is the smallest nonnegative a in its class with
/// gcd(a, c) = 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cusp {
    level: u64,
    denom: u64,
    numer: u64,
    width: u64,
}

impl Cusp {
    /// The cusp 0 = 0/1, of width N.
    pub fn zero(level: u64) -> Cusp {
        Cusp { level, denom: 1, numer: 0, width: level }
    }

    /// The cusp infinity, the class with c = N, of width 1.
    pub fn infinity(level: u64) -> Cusp {
        let numer = if level == 1 { 0 } else { 1 };
        Cusp { level, denom: level, numer, width: 1 }
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    /// The numerator a of the representative a/c.
    pub fn numerator(&self) -> u64 {
        self.numer
    }

    /// The denominator c of the representative a/c; always divides N.
    pub fn denominator(&self) -> u64 {
        self.denom
    }

    /// Width N / gcd(c^2, N) of the cusp.
    pub fn width(&self) -> u64 {
        self.width
    }

    /// True for the class of the cusp infinity (c = N).
    pub fn is_infinity(&self) -> bool {
        self.denom == self.level
    }

    /// True for the class of the cusp 0 (c = 1).
    pub fn is_zero(&self) -> bool {
        self.denom == 1
    }

    /// Display label: `inf`, `0`, or `a/c`. At level 1 the unique cusp is
    /// simultaneously 0 and infinity and is labeled `inf`.
    pub fn label(&self) -> String {
        if self.is_infinity() {
            "inf".to_string()
        } else if self.is_zero() {
            "0".to_string()
        } else {
            format!("{}/{}", self.numer, self.denom)
        }
    }
}

/// One canonical representative per cusp class of Gamma_0(N), sorted by
/// denominator then numerator. The first entry is the cusp 0 and the last
/// is infinity; the list length is `invariants(N).cusp_count`.
pub fn cusps(level: u64) -> Result<Vec<Cusp>, Error> {
    if level == 0 {
        return Err(Error::InvalidArgument("level must be a positive integer".into()));
    }
    let mut out = Vec::new();
    for c in divisors(level) {
        let g = gcd(c, level / c);
        // width = N / gcd(c^2, N) = (N/c) / gcd(c, N/c) since c | N
        let width = (level / c) / g;
        for x in 0..g {
            if gcd(x, g) != 1 {
                continue;
            }
            let mut a = x;
            while gcd(a, c) != 1 {
                a += g;
            }
            out.push(Cusp { level, denom: c, numer: a, width });
        }
    }
    out.sort();
    Ok(out)
}

/// The canonical representative of the cusp class containing a/c.
///
/// Requires c | N and gcd(a, c) = 1; the class is determined by c and
/// a modulo gcd(c, N/c).
pub fn class_representative(level: u64, a: u64, c: u64) -> Result<Cusp, Error> {
    if level == 0 || c == 0 || !level.is_multiple_of(c) {
        return Err(Error::InvalidArgument(format!(
            "cusp denominator {c} must divide the level {level}"
        )));
    }
    if gcd(a, c) != 1 {
        return Err(Error::InvalidArgument(format!(
            "cusp {a}/{c} is not in lowest terms"
        )));
    }
    let g = gcd(c, level / c);
    Ok(cusps(level)?
        .into_iter()
        .find(|k| k.denominator() == c && k.numerator() % g == a % g)
        .expect("every residue coprime to c has a representative"))
}

/// The fiber of X_0(N) -> X_0(1) over an elliptic base point: some points
/// are elliptic for Gamma_0(N) (unramified, multiplicity 1 in the fiber)
/// and the rest are ordinary with ramification index 2 (over i) or 3
/// (over omega). Counts satisfy elliptic + index * ramified = mu.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FiberStructure {
    pub elliptic_count: u64,
    pub ramified_count: u64,
    pub ramification_index: u64,
}

/// The two elliptic points of the modular curve X_0(1): i (order 2) and
/// omega = (-1 + sqrt(-3))/2 (order 3).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasePoint {
    I,
    Omega,
}

/// Decompose the fiber of X_0(N) -> X_0(1) over i or omega.
pub fn fiber_over(level: u64, base: BasePoint) -> Result<FiberStructure, Error> {
    let data = invariants(level)?;
    let (elliptic_count, ramification_index) = match base {
        BasePoint::I => (data.nu2, 2),
        BasePoint::Omega => (data.nu3, 3),
    };
    let rest = data.index - elliptic_count;
    assert!(
        rest % ramification_index == 0,
        "fiber over {base:?} at level {level} does not decompose"
    );
    Ok(FiberStructure {
        elliptic_count,
        ramified_count: rest / ramification_index,
        ramification_index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(level: u64) -> (u64, u64, u64, u64, u64) {
        let d = invariants(level).unwrap();
        (d.index, d.nu2, d.nu3, d.cusp_count, d.genus)
    }

    #[test]
    fn known_invariant_table() {
        // (level, mu, nu2, nu3, cusps, genus), frozen from an independent
        // evaluation of the multiplicative formulas.
        let table = [
            (1, 1, 1, 1, 1, 0),
            (2, 3, 1, 0, 2, 0),
            (3, 4, 0, 1, 2, 0),
            (5, 6, 2, 0, 2, 0),
            (7, 8, 0, 2, 2, 0),
            (11, 12, 0, 0, 2, 1),
            (13, 14, 2, 2, 2, 0),
            (17, 18, 2, 0, 2, 1),
            (19, 20, 0, 2, 2, 1),
            (21, 32, 0, 2, 4, 1),
            (26, 42, 2, 0, 4, 2),
            (28, 48, 0, 0, 6, 2),
            (29, 30, 2, 0, 2, 2),
            (31, 32, 0, 2, 2, 2),
            (34, 54, 2, 0, 4, 3),
            (39, 56, 0, 2, 4, 3),
            (41, 42, 2, 0, 2, 3),
            (47, 48, 0, 0, 2, 4),
            (49, 56, 0, 2, 8, 1),
            (50, 90, 2, 0, 12, 2),
        ];
        for (level, index, nu2, nu3, cusp_count, genus) in table {
            assert_eq!(inv(level), (index, nu2, nu3, cusp_count, genus), "level {level}");
        }
    }

    #[test]
    fn level_zero_is_rejected() {
        assert!(matches!(invariants(0), Err(Error::InvalidArgument(_))));
        assert!(matches!(cusps(0), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn prime_levels() {
        for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 97] {
            let d = invariants(p).unwrap();
            assert_eq!(d.index, p + 1);
            assert_eq!(d.cusp_count, 2);
        }
    }

    #[test]
    fn elliptic_counts_vanish_mod_small_powers() {
        assert_eq!(invariants(2).unwrap().nu2, 1);
        assert_eq!(invariants(3).unwrap().nu3, 1);
        assert_eq!(invariants(4).unwrap().nu2, 0);
        assert_eq!(invariants(9).unwrap().nu3, 0);
        for p in [11u64, 23, 47, 59] {
            // p = 11 mod 12: no elliptic points at all
            let d = invariants(p).unwrap();
            assert_eq!((d.nu2, d.nu3), (0, 0), "p = {p}");
        }
    }

    #[test]
    fn cusp_list_structure_through_200() {
        for level in 1..=200 {
            let d = invariants(level).unwrap();
            let list = cusps(level).unwrap();
            assert_eq!(list.len() as u64, d.cusp_count, "count at level {level}");
            assert_eq!(list.iter().map(Cusp::width).sum::<u64>(), d.index, "widths at {level}");
            assert_eq!(list.iter().filter(|c| c.is_zero()).count(), 1);
            assert_eq!(list.iter().filter(|c| c.is_infinity()).count(), 1);
            for c in &list {
                assert_eq!(level % c.denominator(), 0);
                assert_eq!(gcd(c.numerator(), c.denominator()), 1);
                assert_eq!(
                    c.width(),
                    level / gcd(c.denominator() * c.denominator(), level)
                );
            }
            // representatives are pairwise inequivalent
            for (i, a) in list.iter().enumerate() {
                for b in &list[i + 1..] {
                    if a.denominator() == b.denominator() {
                        let g = gcd(a.denominator(), level / a.denominator());
                        assert_ne!(a.numerator() % g, b.numerator() % g, "level {level}");
                    }
                }
            }
        }
    }

    #[test]
    fn fiber_decomposition_through_200() {
        for level in 1..=200 {
            let d = invariants(level).unwrap();
            for base in [BasePoint::I, BasePoint::Omega] {
                let f = fiber_over(level, base).unwrap();
                assert_eq!(
                    f.elliptic_count + f.ramification_index * f.ramified_count,
                    d.index,
                    "level {level} over {base:?}"
                );
            }
        }
    }

    #[test]
    fn cusps_of_eleven() {
        let list = cusps(11).unwrap();
        assert_eq!(list.len(), 2);
        assert_eq!((list[0].label().as_str(), list[0].width()), ("0", 11));
        assert_eq!((list[1].label().as_str(), list[1].width()), ("inf", 1));
    }

    #[test]
    fn cusp_counts_match_known_levels() {
        assert_eq!(cusps(28).unwrap().len(), 6);
        assert_eq!(cusps(50).unwrap().len(), 12);
    }

    #[test]
    fn level_one_cusp_is_labeled_inf() {
        let list = cusps(1).unwrap();
        assert_eq!(list.len(), 1);
        assert!(list[0].is_zero() && list[0].is_infinity());
        assert_eq!(list[0].label(), "inf");
        assert_eq!(Cusp::infinity(1), list[0]);
    }

    #[test]
    fn named_constructors_agree_with_enumeration() {
        for level in [2u64, 11, 28, 31, 47, 50] {
            let list = cusps(level).unwrap();
            assert!(list.contains(&Cusp::zero(level)), "level {level}");
            assert!(list.contains(&Cusp::infinity(level)), "level {level}");
        }
    }

    #[test]
    fn fiber_examples() {
        let f = fiber_over(31, BasePoint::Omega).unwrap();
        assert_eq!((f.elliptic_count, f.ramified_count, f.ramification_index), (2, 10, 3));
        let f = fiber_over(1, BasePoint::I).unwrap();
        assert_eq!((f.elliptic_count, f.ramified_count), (1, 0));
        let f = fiber_over(3, BasePoint::I).unwrap();
        assert_eq!((f.elliptic_count, f.ramified_count, f.ramification_index), (0, 2, 2));
    }

    #[test]
    fn intermediate_cusp_labels() {
        let labels: Vec<String> = cusps(28).unwrap().iter().map(Cusp::label).collect();
        assert_eq!(labels, ["0", "1/2", "1/4", "1/7", "1/14", "inf"]);
    }

    #[test]
    fn class_representatives_canonicalize() {
        assert_eq!(class_representative(11, 0, 1).unwrap(), Cusp::zero(11));
        assert_eq!(class_representative(11, 1, 11).unwrap(), Cusp::infinity(11));
        // 3/2 and 1/2 are the same class at level 28: 3 = 1 mod gcd(2, 14)
        let c = class_representative(28, 3, 2).unwrap();
        assert_eq!(c.label(), "1/2");
        assert!(matches!(class_representative(28, 1, 3), Err(Error::InvalidArgument(_))));
        assert!(matches!(class_representative(28, 2, 14), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn every_fraction_maps_to_an_enumerated_cusp() {
        for level in [12u64, 28, 50] {
            let list = cusps(level).unwrap();
            for c in divisors(level) {
                for a in 0..level {
                    if gcd(a, c) != 1 {
                        continue;
                    }
                    let rep = class_representative(level, a, c).unwrap();
                    assert!(list.contains(&rep), "{a}/{c} at level {level}");
                }
            }
        }
    }
}
