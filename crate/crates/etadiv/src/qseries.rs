//! Exact truncated Laurent series in the local parameter q at the cusp infinity.
//!
//! Exponents are quantized to multiples of 1/24 so that eta expansions such as
//! `eta(z) = q^(1/24) prod (1 - q^n)` live on an integer lattice: a stored
//! exponent `e` means `q^(e/24)`. Coefficients are exact rationals; there is
//! no floating point and no rounding anywhere.
//!
//! # Precision
//!
//! Every series carries an absolute truncation bound `B` (in 1/24 units): all
//! exponents `>= B` are unknown. The bound propagates pessimistically through
//! products and quotients by the usual Laurent rules
//!
//! ```text
//! prec(a * b) = min(prec(a) + val(b), prec(b) + val(a))
//! prec(a / b) = min(prec(a) - val(b), prec(b) - 2 val(b) + val(a))
//! ```
//!
//! so an operation never reports a coefficient beyond justified precision.
//! Exponents may be negative: quotients like `(eta(q)/eta(q^11))^12` have
//! poles at the cusp.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, One, Signed, Zero};

use crate::rational::{format_rational, Rational};
use crate::Error;

/// Truncated Laurent series with exact rational coefficients on the q^(1/24)
/// exponent lattice.
///
/// Invariants: every stored exponent is `< precision`, no stored coefficient
/// is zero. Values are immutable after construction; all operations are pure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    terms: BTreeMap<i64, Rational>,
    precision: i64,
}

impl QSeries {
    /// Build a series from (exponent-numerator, coefficient) pairs.
    ///
    /// Zero coefficients and terms at or beyond `precision` are dropped.
    pub fn from_terms<I>(terms: I, precision: i64) -> QSeries
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        let mut map = BTreeMap::new();
        for (e, c) in terms {
            if e >= precision || c.is_zero() {
                continue;
            }
            let entry = map.entry(e).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                map.remove(&e);
            }
        }
        QSeries { terms: map, precision }
    }

    /// The zero series, known to the given precision.
    pub fn zero(precision: i64) -> QSeries {
        QSeries { terms: BTreeMap::new(), precision }
    }

    /// The constant series `c + O(q^(precision/24))`.
    pub fn constant(c: Rational, precision: i64) -> QSeries {
        QSeries::from_terms([(0, c)], precision)
    }

    /// The constant series 1.
    pub fn one(precision: i64) -> QSeries {
        QSeries::constant(Rational::one(), precision)
    }

    /// `c * q^(e/24) + O(q^(precision/24))`.
    pub fn monomial(c: Rational, exponent: i64, precision: i64) -> QSeries {
        QSeries::from_terms([(exponent, c)], precision)
    }

    /// Truncation bound in 1/24 units: exponents `>= precision` are unknown.
    pub fn precision(&self) -> i64 {
        self.precision
    }

    /// Stored terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Number of stored (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `q^(e/24)`: `None` when `e` lies beyond the precision
    /// window, zero when the term is absent inside it.
    pub fn coeff(&self, e: i64) -> Option<Rational> {
        if e >= self.precision {
            return None;
        }
        Some(self.terms.get(&e).cloned().unwrap_or_else(Rational::zero))
    }

    /// Coefficient of the integral power `q^n`.
    pub fn coeff_q(&self, n: i64) -> Option<Rational> {
        self.coeff(24 * n)
    }

    /// True when no coefficient is known to be nonzero.
    pub fn is_zero_to_precision(&self) -> bool {
        self.terms.is_empty()
    }

    /// Least exponent with a nonzero coefficient, in 1/24 units.
    pub fn valuation_exponent(&self) -> Result<i64, Error> {
        self.terms
            .keys()
            .next()
            .copied()
            .ok_or(Error::IndeterminateValuation)
    }

    /// Order of vanishing at the cusp infinity, in powers of q: the least
    /// exponent with nonzero coefficient divided by 24.
    ///
    /// A series that is zero to its precision has no determinate valuation.
    pub fn valuation(&self) -> Result<Rational, Error> {
        let e = self.valuation_exponent()?;
        Ok(Rational::new(BigInt::from(e), BigInt::from(24)))
    }

    /// Valuation lower bound used for precision propagation: the least stored
    /// exponent, or the precision bound when the series is zero to precision.
    fn valuation_floor(&self) -> i64 {
        self.terms.keys().next().copied().unwrap_or(self.precision)
    }

    /// The same series truncated to a smaller precision window.
    pub fn truncated(&self, precision: i64) -> QSeries {
        let bound = precision.min(self.precision);
        QSeries {
            terms: self.terms.range(..bound).map(|(&e, c)| (e, c.clone())).collect(),
            precision: bound,
        }
    }

    /// Exact equality of all coefficients on the common precision window.
    pub fn agrees_with(&self, other: &QSeries) -> bool {
        let bound = self.precision.min(other.precision);
        let mut lhs = self.terms.range(..bound);
        let mut rhs = other.terms.range(..bound);
        loop {
            match (lhs.next(), rhs.next()) {
                (None, None) => return true,
                (Some((ea, ca)), Some((eb, cb))) if ea == eb && ca == cb => continue,
                _ => return false,
            }
        }
    }

    /// Exact Laurent quotient `self / rhs` to propagated precision.
    ///
    /// Fails when `rhs` is zero to its precision. On the common precision
    /// window, `(a * b).divide(b)` recovers `a`.
    pub fn divide(&self, rhs: &QSeries) -> Result<QSeries, Error> {
        let vb = match rhs.terms.keys().next() {
            Some(&e) => e,
            None => return Err(Error::DivisionByZero),
        };
        let lead = rhs.terms[&vb].clone();
        let bound = (self.precision - vb).min(rhs.precision - 2 * vb + self.valuation_floor());
        // Long division: repeatedly cancel the least remainder term.
        // Remainder exponents >= bound + vb cannot influence the quotient.
        let mut remainder: BTreeMap<i64, Rational> = self
            .terms
            .range(..bound + vb)
            .map(|(&e, c)| (e, c.clone()))
            .collect();
        let mut quotient: BTreeMap<i64, Rational> = BTreeMap::new();
        while let Some((&e, _)) = remainder.iter().next() {
            let t_exp = e - vb;
            if t_exp >= bound {
                break;
            }
            let t_coeff = remainder.remove(&e).unwrap() / &lead;
            for (&eb, cb) in rhs.terms.range(vb + 1..) {
                let ee = t_exp + eb;
                if ee >= bound + vb {
                    break;
                }
                let entry = remainder.entry(ee).or_insert_with(Rational::zero);
                *entry -= &t_coeff * cb;
                if entry.is_zero() {
                    remainder.remove(&ee);
                }
            }
            quotient.insert(t_exp, t_coeff);
        }
        Ok(QSeries { terms: quotient, precision: bound })
    }

    /// `self^n` for any integer n; the valuation multiplies by n.
    ///
    /// Negative exponents require the base to be nonzero to its precision.
    /// `f^0` is the constant 1 on f's relative precision window.
    pub fn pow(&self, n: i64) -> Result<QSeries, Error> {
        if n < 0 && self.is_zero_to_precision() {
            return Err(Error::DivisionByZero);
        }
        let relative = self.precision - self.valuation_floor();
        if n == 0 {
            return Ok(QSeries::one(relative));
        }
        let base = if n < 0 {
            QSeries::one(relative).divide(self)?
        } else {
            self.clone()
        };
        let mut exp = n.unsigned_abs();
        let mut acc: Option<QSeries> = None;
        let mut power = base;
        loop {
            if exp & 1 == 1 {
                acc = Some(match acc {
                    Some(a) => &a * &power,
                    None => power.clone(),
                });
            }
            exp >>= 1;
            if exp == 0 {
                break;
            }
            power = &power * &power;
        }
        Ok(acc.expect("n != 0"))
    }

    /// Plain-text rendering of the series, lowest exponent first, ending in
    /// an explicit `O(...)` tail. Exponents are printed as reduced fractions.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, (e, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let abs = c.abs();
            let power = exponent_text(e);
            match power {
                None => out.push_str(&format_rational(&abs)),
                Some(p) => {
                    if !abs.is_one() {
                        out.push_str(&format_rational(&abs));
                        out.push('*');
                    }
                    out.push_str(&p);
                }
            }
        }
        if !out.is_empty() {
            out.push_str(" + ");
        }
        out.push_str(&format!("O({})", exponent_text(self.precision).unwrap_or_else(|| "1".into())));
        out
    }
}

/// `q^(e/24)` as text with the exponent in lowest terms: `q`, `q^3`, `q^-5`,
/// `q^(1/24)`, `q^(-7/8)`. `None` for the constant power `e = 0`.
fn exponent_text(e: i64) -> Option<String> {
    if e == 0 {
        return None;
    }
    let g = num::integer::gcd(e.unsigned_abs(), 24) as i64;
    let (num, den) = (e / g, 24 / g);
    Some(if den == 1 {
        match num {
            1 => "q".to_string(),
            _ => format!("q^{num}"),
        }
    } else {
        format!("q^({num}/{den})")
    })
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        let precision = self.precision.min(rhs.precision);
        let mut terms: BTreeMap<i64, Rational> =
            self.terms.range(..precision).map(|(&e, c)| (e, c.clone())).collect();
        for (&e, c) in rhs.terms.range(..precision) {
            let entry = terms.entry(e).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(&e);
            }
        }
        QSeries { terms, precision }
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        self + &(-rhs)
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
            precision: self.precision,
        }
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        let precision =
            (self.precision + rhs.valuation_floor()).min(rhs.precision + self.valuation_floor());
        let vb = rhs.valuation_floor();
        let mut terms: BTreeMap<i64, Rational> = BTreeMap::new();
        for (&ea, ca) in &self.terms {
            if ea + vb >= precision {
                break;
            }
            for (&eb, cb) in &rhs.terms {
                let e = ea + eb;
                if e >= precision {
                    break;
                }
                let entry = terms.entry(e).or_insert_with(Rational::zero);
                *entry += ca * cb;
                if entry.is_zero() {
                    terms.remove(&e);
                }
            }
        }
        QSeries { terms, precision }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for QSeries {
            type Output = QSeries;
            fn $method(self, rhs: QSeries) -> QSeries {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        -&self
    }
}

/// Expansion of `eta(q^d) = q^(d/24) prod_{n>=1} (1 - q^(d n))` truncated at
/// the given precision (1/24 units), computed by Euler's pentagonal-number
/// theorem:
///
/// ```text
/// prod (1 - q^n) = sum_{k in Z} (-1)^k q^(k(3k-1)/2)
/// ```
///
/// so only O(sqrt(precision/d)) terms are touched. The leading term is
/// `q^(d/24)` with coefficient 1.
pub fn eta_expansion(d: u64, precision: i64) -> Result<QSeries, Error> {
    if d == 0 {
        return Err(Error::InvalidArgument("eta_expansion requires d >= 1".into()));
    }
    if precision <= d as i64 {
        return Err(Error::InvalidArgument(format!(
            "precision {precision} cannot hold the leading exponent {d} of eta(q^{d})"
        )));
    }
    let d = d as i64;
    let mut terms = Vec::new();
    let mut k: i64 = 0;
    loop {
        // generalized pentagonal exponents k(3k-1)/2 for k = 0, 1, -1, 2, -2, ...
        let e_pos = d * (1 + 12 * k * (3 * k - 1));
        let e_neg = d * (1 + 12 * k * (3 * k + 1));
        if e_pos >= precision && e_neg >= precision {
            break;
        }
        let sign = Rational::from_integer(BigInt::from(if k % 2 == 0 { 1 } else { -1 }));
        if e_pos < precision {
            terms.push((e_pos, sign.clone()));
        }
        if k > 0 && e_neg < precision {
            terms.push((e_neg, sign));
        }
        k += 1;
    }
    Ok(QSeries::from_terms(terms, precision))
}

/// Normalized Eisenstein series of weight 4 or 6 with constant term 1:
///
/// ```text
/// E4 = 1 + 240 sum sigma_3(n) q^n        E6 = 1 - 504 sum sigma_5(n) q^n
/// ```
pub fn eisenstein_expansion(weight: u32, precision: i64) -> Result<QSeries, Error> {
    let (power, scale) = match weight {
        4 => (3u32, BigInt::from(240)),
        6 => (5u32, BigInt::from(-504)),
        _ => {
            return Err(Error::InvalidArgument(format!(
                "eisenstein_expansion supports weight 4 or 6, got {weight}"
            )))
        }
    };
    let mut terms = vec![(0, Rational::one())];
    let mut n: i64 = 1;
    while 24 * n < precision {
        let mut sigma = BigInt::zero();
        for d in 1..=n {
            if n % d == 0 {
                sigma += BigInt::from(d).pow(power);
            }
        }
        terms.push((24 * n, Rational::from_integer(&scale * sigma)));
        n += 1;
    }
    Ok(QSeries::from_terms(terms, precision))
}
