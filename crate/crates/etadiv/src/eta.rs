//! Eta-quotients on Gamma_0(N): modularity conditions, exact orders of
//! vanishing at every cusp, the cuspidal divisor, the Fricke involution,
//! and q-expansion through the series engine.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, One, Zero};

use crate::arith::{factorize, gcd};
use crate::gamma0::{cusps, Cusp};
use crate::qseries::{eta_expansion, QSeries};
use crate::rational::{format_rational, is_integer, ratio, Rational};
use crate::Error;

/// A formal product `prod_{d|N} eta(q^d)^{r_d}` attached to a level N.
///
/// Keys divide N; exponents may be negative; zero exponents are not stored.
/// The weight is (1/2) sum r_d. Values are immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaQuotient {
    level: u64,
    exponents: BTreeMap<u64, i64>,
}

impl EtaQuotient {
    /// Build a quotient from (d, r_d) pairs; repeated d's are summed.
    pub fn new<I>(level: u64, exponents: I) -> Result<EtaQuotient, Error>
    where
        I: IntoIterator<Item = (u64, i64)>,
    {
        if level == 0 {
            return Err(Error::InvalidArgument("level must be a positive integer".into()));
        }
        let mut map: BTreeMap<u64, i64> = BTreeMap::new();
        for (d, r) in exponents {
            if d == 0 || !level.is_multiple_of(d) {
                return Err(Error::InvalidArgument(format!(
                    "eta argument scale {d} does not divide the level {level}"
                )));
            }
            let entry = map.entry(d).or_insert(0);
            *entry += r;
            if *entry == 0 {
                map.remove(&d);
            }
        }
        Ok(EtaQuotient { level, exponents: map })
    }

    /// Parse a quotient from its spec string `d:r(,d:r)*`, e.g. `1:12,11:-12`.
    pub fn parse(level: u64, spec: &str) -> Result<EtaQuotient, Error> {
        let mut pairs = Vec::new();
        for piece in spec.split(',') {
            let (d, r) = piece
                .split_once(':')
                .ok_or_else(|| Error::Parse {
                    token: piece.to_string(),
                    expected: "an eta term `d:r`",
                })?;
            let d: u64 = d.trim().parse().map_err(|_| Error::Parse {
                token: d.to_string(),
                expected: "a positive integer divisor of the level",
            })?;
            let r: i64 = r.trim().parse().map_err(|_| Error::Parse {
                token: r.to_string(),
                expected: "an integer exponent",
            })?;
            pairs.push((d, r));
        }
        EtaQuotient::new(level, pairs)
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    /// The exponent r_d (zero when the scale is absent).
    pub fn exponent(&self, d: u64) -> i64 {
        self.exponents.get(&d).copied().unwrap_or(0)
    }

    /// Stored (d, r_d) pairs with r_d != 0, in increasing d.
    pub fn exponents(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.exponents.iter().map(|(&d, &r)| (d, r))
    }

    /// The spec-string rendering `d:r,...`; `1:0` for the empty quotient.
    pub fn spec_string(&self) -> String {
        if self.exponents.is_empty() {
            return "1:0".to_string();
        }
        self.exponents
            .iter()
            .map(|(d, r)| format!("{d}:{r}"))
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Weight (1/2) sum r_d as an exact rational.
    pub fn weight(&self) -> Rational {
        ratio(self.exponents.values().sum::<i64>(), 2)
    }

    /// Evaluate the four modularity conditions; see [`LigozatReport`].
    pub fn ligozat_check(&self) -> LigozatReport {
        let n = self.level as i64;
        let sum_r: i64 = self.exponents.values().sum();
        let sum_dr: i64 = self.exponents.iter().map(|(&d, &r)| d as i64 * r).sum();
        let sum_ndr: i64 = self.exponents.iter().map(|(&d, &r)| (n / d as i64) * r).sum();
        let cond4 = square_free_part_is_one(
            self.exponents.iter().map(|(&d, &r)| (self.level / d, r)),
        );
        let character = if sum_r != 0 && sum_r % 2 == 0 {
            let k = sum_r / 2;
            let discriminant_square = square_free_part_is_one(self.exponents.iter().map(|(&d, &r)| (d, r)));
            Some(CharacterData {
                // s = prod d^{r_d} > 0, so (-1)^k s is a square iff k is
                // even and s has even exponents at every prime.
                discriminant: signed_power_product(self.exponents.iter().map(|(&d, &r)| (d, r)), k),
                is_square: k % 2 == 0 && discriminant_square,
            })
        } else {
            None
        };
        LigozatReport {
            cond1: sum_dr % 24 == 0,
            cond2: sum_ndr % 24 == 0,
            cond3: sum_r == 0,
            cond4,
            weight: self.weight(),
            character,
        }
    }

    /// Exact order of vanishing at a cusp a/c, in the local uniformizer of
    /// the modular curve X_0(N):
    ///
    /// ```text
    /// ord_{a/c}(f) = (N/24) sum_{d|N} gcd(c,d)^2 r_d / (gcd(c, N/c) c d)
    /// ```
    ///
    /// With this normalization the orders of a weight-k quotient over all
    /// cusps sum to k mu / 12 with no width factors. At the cusp infinity
    /// (c = N) the value is sum d r_d / 24, the q-valuation; negative
    /// values are poles. The result can be a non-integral rational when
    /// the quotient fails the congruence conditions.
    pub fn order_at_cusp(&self, cusp: &Cusp) -> Result<Rational, Error> {
        if cusp.level() != self.level {
            return Err(Error::LevelMismatch { expected: self.level, found: cusp.level() });
        }
        let n = self.level;
        let c = cusp.denominator();
        let g = gcd(c, n / c);
        let mut total = Rational::zero();
        for (&d, &r) in &self.exponents {
            let num = BigInt::from(n) * BigInt::from(gcd(c, d)).pow(2) * BigInt::from(r);
            let den = BigInt::from(24) * BigInt::from(g) * BigInt::from(c) * BigInt::from(d);
            total += Rational::new(num, den);
        }
        Ok(total)
    }

    /// Orders at every cusp of the level. Eta-quotients have no zeros or
    /// poles on the upper half-plane, so this is the full divisor.
    pub fn divisor(&self) -> CuspDivisor {
        let all = cusps(self.level).expect("level is positive");
        let orders = all
            .into_iter()
            .map(|c| {
                let o = self.order_at_cusp(&c).expect("cusp from the same level");
                (c, o)
            })
            .filter(|(_, o)| !o.is_zero())
            .collect();
        CuspDivisor { orders }
    }

    /// The Fricke involution w_N acts on eta-quotients by d -> N/d. It
    /// swaps the cusps 0 and infinity: the 0-order of f equals the
    /// infinity-order of the transform. Applying it twice is the identity.
    pub fn fricke_transform(&self) -> EtaQuotient {
        EtaQuotient {
            level: self.level,
            exponents: self.exponents.iter().map(|(&d, &r)| (self.level / d, r)).collect(),
        }
    }

    /// q-expansion to the given absolute precision (1/24 units), as the
    /// exact product and quotient of pentagonal-number eta expansions.
    /// The valuation always equals `order_at_cusp` at infinity.
    pub fn expansion(&self, precision: i64) -> Result<QSeries, Error> {
        let leading: i64 = self.exponents.iter().map(|(&d, &r)| d as i64 * r).sum();
        if precision <= leading {
            return Err(Error::InvalidArgument(format!(
                "precision {precision} cannot hold the leading exponent {leading}"
            )));
        }
        let relative = precision - leading;
        let mut numer = QSeries::one(relative);
        let mut denom = QSeries::one(relative);
        for (&d, &r) in &self.exponents {
            let eta = eta_expansion(d, d as i64 + relative)?;
            let power = eta.pow(r.abs())?;
            if r > 0 {
                numer = &numer * &power;
            } else {
                denom = &denom * &power;
            }
        }
        numer.divide(&denom)
    }
}

impl fmt::Display for EtaQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .exponents
            .iter()
            .map(|(&d, &r)| {
                let base = if d == 1 { "eta(q)".to_string() } else { format!("eta(q^{d})") };
                if r == 1 {
                    base
                } else {
                    format!("{base}^{r}")
                }
            })
            .collect();
        f.write_str(&parts.join(" * "))
    }
}

/// True when `prod base^exp` is a square in Q, i.e. every prime occurs
/// with even total exponent.
fn square_free_part_is_one<I>(pairs: I) -> bool
where
    I: IntoIterator<Item = (u64, i64)>,
{
    let mut exponents: BTreeMap<u64, i64> = BTreeMap::new();
    for (base, exp) in pairs {
        for (p, e) in factorize(base) {
            *exponents.entry(p).or_insert(0) += e as i64 * exp;
        }
    }
    exponents.values().all(|e| e % 2 == 0)
}

/// `(-1)^k prod base^exp` as an exact rational.
fn signed_power_product<I>(pairs: I, k: i64) -> Rational
where
    I: IntoIterator<Item = (u64, i64)>,
{
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (base, exp) in pairs {
        let p = BigInt::from(base).pow(exp.unsigned_abs() as u32);
        if exp >= 0 {
            num *= p;
        } else {
            den *= p;
        }
    }
    if k % 2 != 0 {
        num = -num;
    }
    Rational::new(num, den)
}

/// The four modularity conditions for an eta-quotient on Gamma_0(N):
///
/// ```text
/// cond1   sum d r_d        = 0 mod 24
/// cond2   sum (N/d) r_d    = 0 mod 24
/// cond3   sum r_d          = 0
/// cond4   prod (N/d)^{r_d} is a rational square
/// ```
///
/// When all four hold the quotient is a classical modular function
/// (weight 0) for Gamma_0(N). For even nonzero weight 2k the report also
/// carries the character discriminant (-1)^k prod d^{r_d} and whether it
/// is a rational square; certification is only claimed for weight 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LigozatReport {
    pub cond1: bool,
    pub cond2: bool,
    pub cond3: bool,
    pub cond4: bool,
    pub weight: Rational,
    pub character: Option<CharacterData>,
}

/// Character data attached to an even-weight (nonzero) quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterData {
    pub discriminant: Rational,
    pub is_square: bool,
}

impl LigozatReport {
    /// All four conditions hold: the quotient is a modular function of
    /// weight 0 for Gamma_0(N).
    pub fn all_conditions_hold(&self) -> bool {
        self.cond1 && self.cond2 && self.cond3 && self.cond4
    }
}

/// The cuspidal divisor of an eta-quotient: exact rational orders at each
/// cusp of the level, zero orders omitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CuspDivisor {
    orders: Vec<(Cusp, Rational)>,
}

impl CuspDivisor {
    /// (cusp, order) pairs sorted by denominator then numerator.
    pub fn orders(&self) -> &[(Cusp, Rational)] {
        &self.orders
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }

    /// True when every order is an integer (holds whenever the quotient
    /// satisfies the congruence conditions).
    pub fn is_integral(&self) -> bool {
        self.orders.iter().all(|(_, o)| is_integer(o))
    }

    /// Sum of all cusp orders; equals weight * mu / 12 by the valence
    /// formula, since eta-quotients vanish nowhere else.
    pub fn degree(&self) -> Rational {
        self.orders.iter().map(|(_, o)| o).sum()
    }

    /// The orders as plain integers, flagging the first non-integral one
    /// instead of rounding.
    pub fn integer_orders(&self) -> Result<Vec<(Cusp, i64)>, Error> {
        self.orders
            .iter()
            .map(|(c, o)| {
                if !is_integer(o) {
                    return Err(Error::NonIntegralOrder {
                        cusp: c.label(),
                        order: format_rational(o),
                    });
                }
                let n = o.to_integer();
                let n = i64::try_from(&n).map_err(|_| Error::NonIntegralOrder {
                    cusp: c.label(),
                    order: format_rational(o),
                })?;
                Ok((*c, n))
            })
            .collect()
    }

    /// Text rendering `0: 5, inf: -5`; `(zero divisor)` when empty.
    pub fn to_text(&self) -> String {
        if self.orders.is_empty() {
            return "(zero divisor)".to_string();
        }
        self.orders
            .iter()
            .map(|(c, o)| format!("{}: {}", c.label(), format_rational(o)))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Display for CuspDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
