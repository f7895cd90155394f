//! Divisor calculus on the modular curve X_0(N): weighted degrees, valence
//! budgets, weight inference, residual zero-mass at prime level, the level-1
//! dimension count, and the periodic second Bernoulli function.
//!
//! The valence formula for a nonzero weight-k form on Gamma_0(N) reads
//!
//! ```text
//! sum_cusps v_c(f) + (1/2) v_i(f) + (1/3) v_w(f) + sum_P v_P(f) = k mu / 12
//! ```
//!
//! where v_i and v_w are the total orders over the order-2 and order-3
//! elliptic points and P runs over interior points of the fundamental
//! domain. The left-hand side is [`Divisor::weighted_degree`], the
//! right-hand side [`budget`].

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, Zero};

use crate::arith::is_prime;
use crate::gamma0::{class_representative, invariants, Cusp};
use crate::rational::{fractional_part, rat, ratio, Rational};
use crate::Error;

/// A point of X_0(N) where a form may vanish: a cusp, the whole fiber of
/// elliptic points over i or over omega, or a labeled interior point.
///
/// Elliptic places are only meaningful when the corresponding count nu2 or
/// nu3 is positive; with nu = 0, points over i or omega are ordinary and
/// must be encoded as interior places.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Place {
    Cusp(Cusp),
    /// Total over the order-2 elliptic points (the fiber above i).
    EllipticTwo,
    /// Total over the order-3 elliptic points (the fiber above omega).
    EllipticThree,
    /// An interior point of the fundamental domain, identified by label only.
    Interior(String),
}

impl Place {
    /// Grammar token: the cusp label, `i`, `w`, or `pt:LABEL`.
    pub fn text(&self) -> String {
        match self {
            Place::Cusp(c) => c.label(),
            Place::EllipticTwo => "i".to_string(),
            Place::EllipticThree => "w".to_string(),
            Place::Interior(label) => format!("pt:{label}"),
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text())
    }
}

/// A formal sum of places with integer multiplicities; zero entries are
/// not stored. Orders may be negative (poles).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Divisor {
    orders: BTreeMap<Place, i64>,
}

impl Divisor {
    pub fn empty() -> Divisor {
        Divisor::default()
    }

    /// Build from (place, order) pairs; repeated places are summed and
    /// zero totals dropped.
    pub fn from_orders<I>(orders: I) -> Divisor
    where
        I: IntoIterator<Item = (Place, i64)>,
    {
        let mut map: BTreeMap<Place, i64> = BTreeMap::new();
        for (place, order) in orders {
            *map.entry(place).or_insert(0) += order;
        }
        map.retain(|_, v| *v != 0);
        Divisor { orders: map }
    }

    /// A purely cuspidal divisor.
    pub fn from_cusp_orders<I>(orders: I) -> Divisor
    where
        I: IntoIterator<Item = (Cusp, i64)>,
    {
        Divisor::from_orders(orders.into_iter().map(|(c, o)| (Place::Cusp(c), o)))
    }

    /// (place, order) pairs, cusps first (by denominator), then the two
    /// elliptic places, then interior labels.
    pub fn orders(&self) -> impl Iterator<Item = (&Place, i64)> {
        self.orders.iter().map(|(p, &o)| (p, o))
    }

    /// The multiplicity at a place (zero when absent).
    pub fn order(&self, place: &Place) -> i64 {
        self.orders.get(place).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }

    /// Pointwise sum of two divisors.
    pub fn add(&self, rhs: &Divisor) -> Divisor {
        Divisor::from_orders(
            self.orders()
                .map(|(p, o)| (p.clone(), o))
                .chain(rhs.orders().map(|(p, o)| (p.clone(), o))),
        )
    }

    /// Every multiplicity scaled by an integer.
    pub fn scale(&self, k: i64) -> Divisor {
        Divisor::from_orders(self.orders().map(|(p, o)| (p.clone(), o * k)))
    }

    /// The valence-formula left-hand side: cusp and interior orders count
    /// with weight 1, elliptic totals with weight 1/2 (over i) and 1/3
    /// (over omega). Exact rational; additive in the divisor.
    pub fn weighted_degree(&self) -> Rational {
        let mut total = Rational::zero();
        for (place, order) in &self.orders {
            let unit = match place {
                Place::Cusp(_) | Place::Interior(_) => rat(1),
                Place::EllipticTwo => ratio(1, 2),
                Place::EllipticThree => ratio(1, 3),
            };
            total += unit * rat(*order);
        }
        total
    }

    /// Parse the grammar `place=order(;place=order)*` with places
    /// `0 | inf | a/c | i | w | pt:LABEL`. Cusp fractions are canonicalized
    /// to their class representative for the level.
    pub fn parse(level: u64, spec: &str) -> Result<Divisor, Error> {
        let mut orders = Vec::new();
        for piece in spec.split(';') {
            let (place, order) = piece.split_once('=').ok_or_else(|| Error::Parse {
                token: piece.to_string(),
                expected: "a divisor entry `place=order`",
            })?;
            let order: i64 = order.trim().parse().map_err(|_| Error::Parse {
                token: order.to_string(),
                expected: "an integer order",
            })?;
            orders.push((parse_place(level, place.trim())?, order));
        }
        Ok(Divisor::from_orders(orders))
    }

    /// The grammar rendering `place=order;...` (empty string for the zero
    /// divisor, which the grammar cannot express).
    pub fn spec_string(&self) -> String {
        self.orders
            .iter()
            .map(|(p, o)| format!("{}={o}", p.text()))
            .collect::<Vec<_>>()
            .join(";")
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orders.is_empty() {
            f.write_str("(zero divisor)")
        } else {
            f.write_str(&self.spec_string())
        }
    }
}

fn parse_place(level: u64, token: &str) -> Result<Place, Error> {
    match token {
        "0" => return Ok(Place::Cusp(Cusp::zero(level))),
        "inf" => return Ok(Place::Cusp(Cusp::infinity(level))),
        "i" => return Ok(Place::EllipticTwo),
        "w" => return Ok(Place::EllipticThree),
        _ => {}
    }
    if let Some(label) = token.strip_prefix("pt:") {
        if label.is_empty() {
            return Err(Error::Parse {
                token: token.to_string(),
                expected: "an interior place `pt:LABEL` with a nonempty label",
            });
        }
        return Ok(Place::Interior(label.to_string()));
    }
    if let Some((a, c)) = token.split_once('/') {
        let parse_u64 = |s: &str| -> Result<u64, Error> {
            s.parse().map_err(|_| Error::Parse {
                token: s.to_string(),
                expected: "a nonnegative integer in a cusp fraction `a/c`",
            })
        };
        let a = parse_u64(a)?;
        let c = parse_u64(c)?;
        return Ok(Place::Cusp(class_representative(level, a, c)?));
    }
    Err(Error::Parse {
        token: token.to_string(),
        expected: "a place `0`, `inf`, `a/c`, `i`, `w`, or `pt:LABEL`",
    })
}

/// The valence-formula right-hand side k mu(N) / 12, exact.
pub fn budget(level: u64, weight: &Rational) -> Result<Rational, Error> {
    let mu = invariants(level)?.index;
    Ok(weight * Rational::new(BigInt::from(mu), BigInt::from(12)))
}

/// True iff the divisor exactly saturates the valence budget for the given
/// level and weight. Places are validated first: cusps must belong to the
/// level, and elliptic places require nu2 > 0 (for `i`) or nu3 > 0 (for
/// `w`); with nu = 0 such points are ordinary and belong in interior
/// places instead.
pub fn check_valence(divisor: &Divisor, level: u64, weight: &Rational) -> Result<bool, Error> {
    let data = invariants(level)?;
    for (place, _) in divisor.orders() {
        match place {
            Place::Cusp(c) if c.level() != level => {
                return Err(Error::LevelMismatch { expected: level, found: c.level() })
            }
            Place::EllipticTwo if data.nu2 == 0 => {
                return Err(Error::InvalidArgument(format!(
                    "level {level} has no order-2 elliptic points; encode the order as an interior place"
                )))
            }
            Place::EllipticThree if data.nu3 == 0 => {
                return Err(Error::InvalidArgument(format!(
                    "level {level} has no order-3 elliptic points; encode the order as an interior place"
                )))
            }
            _ => {}
        }
    }
    Ok(divisor.weighted_degree() == budget(level, weight)?)
}

/// Invert the valence formula: the weight a form with this divisor must
/// have, k = 12 deg(D) / mu(N). Integrality and positivity are the
/// caller's check.
pub fn infer_weight(divisor: &Divisor, level: u64) -> Result<Rational, Error> {
    let mu = invariants(level)?.index;
    Ok(divisor.weighted_degree() * Rational::new(BigInt::from(12), BigInt::from(mu)))
}

/// The weighted zero-mass a weight-2 form on Gamma_0(p) must place away
/// from the cusps after vanishing to the maximal order (the genus) at
/// both cusps: budget(p, 2) - 2 genus(p). By the class of p mod 12 this
/// is 7/3 (p = 1), 1 (p = 5), or 4/3 (p = 7); the class p = 11 mod 12 is
/// not supported (both elliptic counts vanish there and the source
/// analysis excludes it).
pub fn residual_weight(p: u64) -> Result<Rational, Error> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if p % 12 == 11 {
        return Err(Error::UnsupportedCase(format!(
            "residual analysis is not defined for p = {p} = 11 mod 12"
        )));
    }
    let data = invariants(p)?;
    let b = budget(p, &rat(2))?;
    Ok(b - rat(2 * data.genus as i64))
}

/// Dimension of the space of entire modular forms of even weight k for the
/// full modular group: floor(k/12) when k = 2 mod 12, floor(k/12) + 1
/// otherwise (k = 0 included; the weight-0 forms are the constants).
pub fn dim_level1(weight: u64) -> Result<u64, Error> {
    if !weight.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "dimension formula requires an even weight, got {weight}"
        )));
    }
    Ok(if weight % 12 == 2 { weight / 12 } else { weight / 12 + 1 })
}

/// The periodic second Bernoulli function P2(t) = {t}^2 - {t} + 1/6,
/// where {t} is the fractional part. Period 1; symmetric about t = 1/2.
pub fn bernoulli_p2(t: &Rational) -> Rational {
    let frac = fractional_part(t);
    &frac * &frac - frac + ratio(1, 6)
}
