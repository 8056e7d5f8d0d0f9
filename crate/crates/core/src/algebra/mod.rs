//! Exact arithmetic substrate: rationals, polynomials, gcd and squarefree
//! decomposition.

mod multipoly;
mod text;
mod unipoly;

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

pub use multipoly::{Exponents, MultiPoly};
pub use unipoly::UniPoly;

/// Exact rational number: `numerator / denominator` with a positive,
/// coprime denominator. Zero is `0/1`.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("variable lists differ: {left:?} vs {right:?}")]
    VariableMismatch {
        left: Vec<String>,
        right: Vec<String>,
    },
    #[error("polynomial is not univariate (variables {0:?})")]
    NotUnivariate(Vec<String>),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("zero polynomial has no squarefree decomposition")]
    ZeroPolynomial,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Largest integer `<= x`.
pub fn floor(x: &Rational) -> BigInt {
    x.numer().div_floor(x.denom())
}

/// Smallest integer `>= x`.
pub fn ceil(x: &Rational) -> BigInt {
    -((-x.numer()).div_floor(x.denom()))
}

/// `x - floor(x)`, always in `[0, 1)`.
pub fn fract(x: &Rational) -> Rational {
    x - Rational::from_integer(floor(x))
}

pub fn is_integral(x: &Rational) -> bool {
    x.denom().is_one()
}

pub(crate) fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

/// Monic gcd of two univariate polynomials in the same variable, by the
/// Euclidean algorithm over the rationals. `gcd(0, 0) = 0`.
pub fn poly_gcd(p: &MultiPoly, q: &MultiPoly) -> Result<MultiPoly, AlgebraError> {
    p.check_same_vars(q)?;
    let var = p.univariate_var()?;
    let g = p.to_unipoly()?.gcd(&q.to_unipoly()?);
    Ok(g.to_multi(var))
}

/// Yun's squarefree decomposition. Returns `(factor, multiplicity)` with
/// monic, squarefree, pairwise coprime factors and strictly increasing
/// multiplicities; `p = lc(p) * prod factor^mult`.
pub fn squarefree_decomposition(p: &MultiPoly) -> Result<Vec<(MultiPoly, u32)>, AlgebraError> {
    let var = p.univariate_var()?;
    let u = p.to_unipoly()?;
    Ok(u.squarefree()?
        .into_iter()
        .map(|(f, m)| (f.to_multi(var), m))
        .collect())
}

pub(crate) fn lcm_big(a: &BigInt, b: &BigInt) -> BigInt {
    a.lcm(b)
}
