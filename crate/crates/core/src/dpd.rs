//! The graded algebra `A = A_0[D+, D-]` over `A_0 = C[t]`.
//!
//! Graded pieces are principal fractional ideals of `C[t]`, recorded by the
//! exponents of their generator `prod (t - p)^e(p)`:
//! `A_n = H^0(floor(n D+))` for `n >= 0` and `A_n = H^0(floor(-n D-))` for
//! `n < 0`, so the generator exponent is `-floor(n D+)(p)`, respectively
//! `-floor(-n D-)(p)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::algebra::{self, Rational};
use crate::qdivisor::{negative_locus, DivisorError, DpdPair, QDivisor};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DpdError {
    #[error("gcd({a}, {b}) = {g}, expected coprime")]
    NotCoprime { a: i64, b: i64, g: i64 },
    #[error("parameter {name} = {value} out of range")]
    OutOfRange { name: &'static str, value: i64 },
    #[error("malformed descriptor: {0}")]
    MalformedDescriptor(String),
    #[error(transparent)]
    Divisor(#[from] DivisorError),
}

/// Principal fractional ideal of `C[t]` generated by `prod (t - p)^e(p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FractionalIdealA1 {
    exponents: BTreeMap<Rational, BigInt>,
}

impl FractionalIdealA1 {
    pub fn unit() -> Self {
        Self::default()
    }

    pub fn from_exponents<I: IntoIterator<Item = (Rational, BigInt)>>(it: I) -> Self {
        let mut out = Self::unit();
        for (p, e) in it {
            let slot = out.exponents.entry(p).or_insert_with(BigInt::zero);
            *slot += e;
        }
        out.exponents.retain(|_, e| !e.is_zero());
        out
    }

    /// Generator exponents `-D` for an integral divisor `D`.
    fn from_negated(d: &QDivisor) -> Self {
        Self::from_exponents(
            d.entries()
                .iter()
                .map(|(p, c)| (p.clone(), -c.to_integer())),
        )
    }

    pub fn exponent(&self, p: &Rational) -> BigInt {
        self.exponents.get(p).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn exponents(&self) -> &BTreeMap<Rational, BigInt> {
        &self.exponents
    }

    pub fn is_unit(&self) -> bool {
        self.exponents.is_empty()
    }
}

impl fmt::Display for FractionalIdealA1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (p, e)) in self.exponents.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}:{e}")?;
        }
        Ok(())
    }
}

/// The pair `(-e'/d [0], e'/d [0] - 1/m [1])`.
pub fn lemma1_divisors(d: u64, e_prime: i64, m: u64) -> Result<DpdPair, DpdError> {
    if d == 0 {
        return Err(DpdError::OutOfRange {
            name: "d",
            value: 0,
        });
    }
    if m == 0 {
        return Err(DpdError::OutOfRange {
            name: "m",
            value: 0,
        });
    }
    if e_prime <= 0 {
        return Err(DpdError::OutOfRange {
            name: "e_prime",
            value: e_prime,
        });
    }
    let g = e_prime.gcd(&(d as i64));
    if g != 1 {
        return Err(DpdError::NotCoprime {
            a: e_prime,
            b: d as i64,
            g,
        });
    }
    let frac = algebra::rat(e_prime, d as i64);
    let zero = algebra::rat_int(0);
    let one = algebra::rat_int(1);
    let d_plus = QDivisor::point(zero.clone(), -frac.clone());
    let d_minus = QDivisor::from_entries([(zero, frac), (one, algebra::rat(-1, m as i64))]);
    Ok(DpdPair::new(d_plus, d_minus)?)
}

/// The graded piece `A_n` as a fractional ideal.
pub fn graded_piece(pair: &DpdPair, n: i64) -> FractionalIdealA1 {
    let (divisor, mult) = if n >= 0 {
        (pair.d_plus(), n)
    } else {
        (pair.d_minus(), -n)
    };
    let scaled = divisor.scale(&algebra::rat_int(mult)).floor_div();
    FractionalIdealA1::from_negated(&scaled)
}

/// Pointwise `e_n + e_n' - e_{n+n'}` of the generator exponents: the
/// divisor of `g_n g_n' / g_{n+n'}`. Zero entries are omitted.
pub fn product_defect(pair: &DpdPair, n: i64, n_prime: i64) -> BTreeMap<Rational, BigInt> {
    let a = graded_piece(pair, n);
    let b = graded_piece(pair, n_prime);
    let c = graded_piece(pair, n + n_prime);
    let mut out = BTreeMap::new();
    for p in a
        .exponents
        .keys()
        .chain(b.exponents.keys())
        .chain(c.exponents.keys())
    {
        let v = a.exponent(p) + b.exponent(p) - c.exponent(p);
        if !v.is_zero() {
            out.insert(p.clone(), v);
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ActionKind {
    Elliptic,
    Parabolic,
    Hyperbolic,
    None,
}

impl ActionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ActionKind::Elliptic => "elliptic",
            ActionKind::Parabolic => "parabolic",
            ActionKind::Hyperbolic => "hyperbolic",
            ActionKind::None => "none",
        }
    }
}

/// Why a configuration cannot be an ML1 affine pseudo-plane.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Exclusion {
    /// The surface is the affine plane, which carries two independent rulings.
    Plane,
    /// A degree-0 homogeneous LND makes the surface `A^1 x C*`, whose
    /// ruling has base `C*`.
    LineTimesTorus,
    /// `rk Pic X (x) Q >= l - 1 >= 1` contradicts a torsion Picard group.
    NonTorsionPicard { l: usize },
}

impl Exclusion {
    pub fn tag(&self) -> &'static str {
        match self {
            Exclusion::Plane => "plane",
            Exclusion::LineTimesTorus => "line-times-torus",
            Exclusion::NonTorsionPicard { .. } => "non-torsion-picard",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionClass {
    pub kind: ActionKind,
    pub exclusion: Option<Exclusion>,
    pub reason: String,
    /// For hyperbolic input: the pair oriented so the LND degree is
    /// non-negative, and whether that needed a swap.
    pub oriented_pair: Option<DpdPair>,
    pub swapped: bool,
}

impl ActionClass {
    pub fn admissible(&self) -> bool {
        self.exclusion.is_none()
    }
}

/// Presentation data for a normal affine C*-surface over the affine line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PresentationDescriptor {
    /// Attractive fixed point; grading concentrated in one sign over a point.
    Elliptic,
    /// `A_0[D]` for a divisor `D` on the affine line.
    Parabolic { divisor: QDivisor },
    /// `A_0[D+, D-]`, optionally with the degree of a homogeneous LND.
    Hyperbolic {
        pair: DpdPair,
        lnd_degree: Option<i64>,
    },
}

/// Decision table for the action type and the rule-outs that prevent a
/// configuration from being a smooth ML1 pseudo-plane. No ring computation
/// happens here.
pub fn classify_presentation(desc: &PresentationDescriptor) -> Result<ActionClass, DpdError> {
    match desc {
        PresentationDescriptor::Elliptic => Ok(ActionClass {
            kind: ActionKind::Elliptic,
            exclusion: Some(Exclusion::Plane),
            reason:
                "elliptic: a smooth affine surface with an elliptic C*-action is the affine plane"
                    .into(),
            oriented_pair: None,
            swapped: false,
        }),
        PresentationDescriptor::Parabolic { divisor } => {
            if !divisor.is_integral() {
                return Err(DpdError::MalformedDescriptor(format!(
                    "parabolic presentation of a smooth surface needs an integral divisor, got {divisor}"
                )));
            }
            Ok(ActionClass {
                kind: ActionKind::Parabolic,
                exclusion: Some(Exclusion::Plane),
                reason: "parabolic: an integral divisor on the affine line is principal, so the surface is A_0[0] = the affine plane".into(),
                oriented_pair: None,
                swapped: false,
            })
        }
        PresentationDescriptor::Hyperbolic { pair, lnd_degree } => {
            let swapped = lnd_degree.is_some_and(|e| e < 0);
            let oriented = if swapped {
                pair.swapped()
            } else {
                pair.clone()
            };
            let (exclusion, reason) = if *lnd_degree == Some(0) {
                (
                    Some(Exclusion::LineTimesTorus),
                    String::from("hyperbolic with a degree-0 LND: the surface is A^1 x C*, its ruling has base C*"),
                )
            } else {
                let nl = negative_locus(&oriented);
                if nl.torsion_compatible {
                    (None, String::from("hyperbolic: admissible"))
                } else {
                    (
                        Some(Exclusion::NonTorsionPicard { l: nl.l }),
                        format!(
                            "hyperbolic with D+ + D- negative at l = {} points: rank of Pic is at least {}, not torsion",
                            nl.l, nl.picard_rank_lower_bound
                        ),
                    )
                }
            };
            Ok(ActionClass {
                kind: ActionKind::Hyperbolic,
                exclusion,
                reason,
                oriented_pair: Some(oriented),
                swapped,
            })
        }
    }
}

/// For `D-(1) = a/m` with `gcd(a, m) = 1`: the surface is smooth only for
/// `a = -1`.
pub fn smoothness_condition(m: u64, a: i64) -> Result<bool, DpdError> {
    if m == 0 {
        return Err(DpdError::OutOfRange {
            name: "m",
            value: 0,
        });
    }
    let g = a.abs().gcd(&(m as i64));
    if g != 1 {
        return Err(DpdError::NotCoprime { a, b: m as i64, g });
    }
    Ok(a == -1)
}

/// Recovers `(d, e', m)` when the pair has exactly the shape
/// `(-e'/d [0], e'/d [0] - 1/m [1])` with `1 <= e' <= d`, `gcd(e', d) = 1`.
pub fn recover_lemma1_parameters(pair: &DpdPair) -> Option<(u64, i64, u64)> {
    let zero = algebra::rat_int(0);
    let one = algebra::rat_int(1);
    let plus = pair.d_plus();
    if plus.support().count() != 1 {
        return None;
    }
    let c = -plus.coeff(&zero);
    if !c.is_positive() {
        return None;
    }
    let (e_prime, d) = (c.numer().clone(), c.denom().clone());
    if e_prime > d {
        return None;
    }
    let minus = pair.d_minus();
    if minus.support().count() != 2 || minus.coeff(&zero) != c {
        return None;
    }
    let at_one = minus.coeff(&one);
    if !at_one.is_negative() || at_one.numer() != &BigInt::from(-1) {
        return None;
    }
    use num_traits::ToPrimitive;
    Some((d.to_u64()?, e_prime.to_i64()?, at_one.denom().to_u64()?))
}
