//! Q-divisors on the affine line and the divisor-level criteria used to pin
//! down the DPD pair of an ML1 pseudo-plane.

use alloc::collections::btree_map::{BTreeMap, Entry};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::algebra::{self, parse_rational, Rational, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DivisorError {
    #[error("malformed divisor entry `{0}` (expected point:coefficient)")]
    Parse(String),
    #[error("D+ + D- is positive at point {point} (value {value})")]
    PositiveSum { point: String, value: String },
    #[error("outside classified regime: fractional part of D+ is supported on {0} points")]
    OutsideRegime(usize),
    #[error("k = {k} is not a multiple of denom(D-) = {denom}")]
    NotIntegral { k: u64, denom: BigInt },
    #[error("Q would be non-polynomial: exponent {exponent} at point {point}")]
    NegativeExponent { point: String, exponent: String },
    #[error("exponent {0} too large")]
    ExponentTooLarge(BigInt),
}

/// Finitely supported map from rational points of the affine line to
/// rational coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QDivisor {
    coeffs: BTreeMap<Rational, Rational>,
}

impl QDivisor {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `c * [p]`.
    pub fn point(p: Rational, c: Rational) -> Self {
        Self::from_entries([(p, c)])
    }

    /// Sums coefficients of repeated points and drops zeros.
    pub fn from_entries<I: IntoIterator<Item = (Rational, Rational)>>(entries: I) -> Self {
        let mut d = Self::zero();
        for (p, c) in entries {
            d.add_at(p, c);
        }
        d
    }

    fn add_at(&mut self, p: Rational, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(p) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coeff(&self, p: &Rational) -> Rational {
        self.coeffs.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn entries(&self) -> &BTreeMap<Rational, Rational> {
        &self.coeffs
    }

    pub fn support(&self) -> impl Iterator<Item = &Rational> {
        self.coeffs.keys()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(algebra::is_integral)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.coeffs {
            out.add_at(p.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::from_entries(self.coeffs.iter().map(|(p, c)| (p.clone(), c * k)))
    }

    /// Pointwise floor.
    pub fn floor_div(&self) -> Self {
        Self::from_entries(
            self.coeffs
                .iter()
                .map(|(p, c)| (p.clone(), Rational::from_integer(algebra::floor(c)))),
        )
    }

    /// Pointwise fractional part `D - floor(D)`, coefficients in `[0, 1)`.
    pub fn fract_div(&self) -> Self {
        Self::from_entries(
            self.coeffs
                .iter()
                .map(|(p, c)| (p.clone(), algebra::fract(c))),
        )
    }

    /// Least positive `n` with `n * D` integral.
    pub fn denom(&self) -> BigInt {
        self.coeffs
            .values()
            .fold(BigInt::one(), |acc, c| algebra::lcm_big(&acc, c.denom()))
    }

    /// First point where the divisor is positive, if any.
    pub fn first_positive(&self) -> Option<(&Rational, &Rational)> {
        self.coeffs.iter().find(|(_, c)| c.is_positive())
    }
}

impl fmt::Display for QDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (p, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}:{c}")?;
        }
        Ok(())
    }
}

impl FromStr for QDivisor {
    type Err = DivisorError;

    /// Comma-separated `point:coefficient` entries in any order; the empty
    /// string is the zero divisor.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut d = QDivisor::zero();
        if s.trim().is_empty() {
            return Ok(d);
        }
        for entry in s.split(',') {
            let bad = || DivisorError::Parse(entry.trim().to_string());
            let (p, c) = entry.split_once(':').ok_or_else(bad)?;
            let p = parse_rational(p).ok_or_else(bad)?;
            let c = parse_rational(c).ok_or_else(bad)?;
            d.add_at(p, c);
        }
        Ok(d)
    }
}

/// The pair `(D+, D-)` presenting `A_0[D+, D-]`, subject to `D+ + D- <= 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DpdPair {
    d_plus: QDivisor,
    d_minus: QDivisor,
}

impl DpdPair {
    pub fn new(d_plus: QDivisor, d_minus: QDivisor) -> Result<Self, DivisorError> {
        if let Some((p, v)) = d_plus.add(&d_minus).first_positive() {
            return Err(DivisorError::PositiveSum {
                point: p.to_string(),
                value: v.to_string(),
            });
        }
        Ok(DpdPair { d_plus, d_minus })
    }

    pub fn d_plus(&self) -> &QDivisor {
        &self.d_plus
    }

    pub fn d_minus(&self) -> &QDivisor {
        &self.d_minus
    }

    pub fn sum(&self) -> QDivisor {
        self.d_plus.add(&self.d_minus)
    }

    /// The pair with the roles of `D+` and `D-` exchanged (inverting the
    /// C*-action).
    pub fn swapped(&self) -> Self {
        DpdPair {
            d_plus: self.d_minus.clone(),
            d_minus: self.d_plus.clone(),
        }
    }
}

/// `({D+}, D- + floor(D+))`: an equivalent pair whose `D+` is purely
/// fractional.
pub fn canonical_pair(pair: &DpdPair) -> DpdPair {
    let fl = pair.d_plus.floor_div();
    DpdPair {
        d_plus: pair.d_plus.fract_div(),
        d_minus: pair.d_minus.add(&fl),
    }
}

/// ML1 criterion: with `{D+}` supported on at most one point, the surface is
/// ML1 iff `{D-}` is supported on at least two points.
pub fn ml1_test(pair: &DpdPair) -> Result<bool, DivisorError> {
    let plus_support = pair.d_plus.fract_div().support().count();
    if plus_support > 1 {
        return Err(DivisorError::OutsideRegime(plus_support));
    }
    Ok(pair.d_minus.fract_div().support().count() >= 2)
}

/// Points where `D+ + D-` is negative, and the resulting lower bound
/// `l - 1` on the rank of `Pic X (x) Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegativeLocus {
    pub l: usize,
    pub picard_rank_lower_bound: i64,
    /// A torsion Picard group needs `l <= 1`.
    pub torsion_compatible: bool,
    pub points: Vec<Rational>,
}

pub fn negative_locus(pair: &DpdPair) -> NegativeLocus {
    let points: Vec<Rational> = pair
        .sum()
        .entries()
        .iter()
        .filter(|(_, c)| c.is_negative())
        .map(|(p, _)| p.clone())
        .collect();
    let l = points.len();
    NegativeLocus {
        l,
        picard_rank_lower_bound: l as i64 - 1,
        torsion_compatible: l <= 1,
        points,
    }
}

/// `(l, Q)` with `div(t^l Q(t)) = -k D-`, `Q` monic and `Q(0) != 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorPolynomial {
    pub l: BigInt,
    /// Monic polynomial in `t`.
    pub q: UniPoly,
}

pub fn divisor_to_poly(d_minus: &QDivisor, k: u64) -> Result<DivisorPolynomial, DivisorError> {
    let scaled = d_minus.scale(&-Rational::from_integer(k.into()));
    if !scaled.is_integral() {
        return Err(DivisorError::NotIntegral {
            k,
            denom: d_minus.denom(),
        });
    }
    let zero = Rational::zero();
    let l = scaled.coeff(&zero).to_integer();
    let mut q = UniPoly::one();
    for (p, c) in scaled.entries() {
        if p.is_zero() {
            continue;
        }
        let exponent = c.to_integer();
        if exponent.is_negative() {
            return Err(DivisorError::NegativeExponent {
                point: p.to_string(),
                exponent: exponent.to_string(),
            });
        }
        let n = exponent
            .to_u32()
            .ok_or_else(|| DivisorError::ExponentTooLarge(exponent.clone()))?;
        let linear = UniPoly::from_coeffs(alloc::vec![-p.clone(), Rational::one()]);
        q = &q * &linear.pow(n);
    }
    Ok(DivisorPolynomial { l, q })
}
