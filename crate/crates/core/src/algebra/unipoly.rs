use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{AlgebraError, Rational};

/// Dense univariate polynomial, coefficients from low to high degree.
/// The leading coefficient is never zero; the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^n`.
    pub fn monomial(c: Rational, n: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| super::rat_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplication by `x^n`.
    pub fn shift(&self, n: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    /// Multiplicity of the root `0`; `None` for the zero polynomial.
    pub fn order_at_zero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self(x^d)`.
    pub fn compose_power(&self, d: usize) -> Self {
        assert!(d > 0, "compose_power with d = 0");
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); (self.coeffs.len() - 1) * d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * d] = c.clone();
        }
        UniPoly { coeffs }
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), AlgebraError> {
        let dd = divisor.degree().ok_or(AlgebraError::DivisionByZero)?;
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * b;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Quotient when `divisor` divides `self` exactly, otherwise `None`.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        match self.div_rem(divisor) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.exact_div(self).is_some()
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a
    }

    /// Yun's algorithm. Constants decompose to the empty list.
    pub fn squarefree(&self) -> Result<Vec<(Self, u32)>, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        let mut out = Vec::new();
        let dp = self.derivative();
        let b = self.gcd(&dp);
        let mut c = self.exact_div(&b).expect("gcd divides").monic();
        let mut d = &dp
            .exact_div(&b)
            .expect("gcd divides")
            .scale(&self.leading().unwrap().recip())
            - &c.derivative();
        let mut i = 1u32;
        while !c.is_constant() {
            let a = c.gcd(&d);
            c = c.exact_div(&a).expect("gcd divides");
            d = &d.exact_div(&a).expect("gcd divides") - &c.derivative();
            if !a.is_constant() {
                out.push((a, i));
            }
            i += 1;
        }
        Ok(out)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_i64(c)
    }

    #[test]
    fn div_rem_recombines() {
        let a = p(&[-1, 0, 0, 1]);
        let b = p(&[1, 2]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree().is_none() || r.degree() < b.degree());
    }

    #[test]
    fn gcd_small_cases() {
        // s^3 - 1 and 3 s^2
        assert_eq!(p(&[-1, 0, 0, 1]).gcd(&p(&[0, 0, 3])), UniPoly::one());
        // (s-1)^2 and (s-1)(s+1)
        assert_eq!(p(&[1, -2, 1]).gcd(&p(&[-1, 0, 1])), p(&[-1, 1]));
        // gcd with zero is the monic input
        assert_eq!(p(&[4, 2]).gcd(&UniPoly::zero()), p(&[2, 1]));
        assert!(UniPoly::zero().gcd(&UniPoly::zero()).is_zero());
    }

    #[test]
    fn squarefree_of_constants_and_zero() {
        assert!(p(&[5]).squarefree().unwrap().is_empty());
        assert_eq!(
            UniPoly::zero().squarefree(),
            Err(AlgebraError::ZeroPolynomial)
        );
    }

    #[test]
    fn squarefree_mixed_multiplicities() {
        // 2 (s-1) (s+2)^2 (s^2+1)^3
        let f = &(&p(&[-1, 1]) * &p(&[2, 1]).pow(2)) * &p(&[1, 0, 1]).pow(3);
        let f = f.scale(&super::super::rat_int(2));
        let parts = f.squarefree().unwrap();
        assert_eq!(
            parts,
            vec![(p(&[-1, 1]), 1), (p(&[2, 1]), 2), (p(&[1, 0, 1]), 3)]
        );
    }

    #[test]
    fn compose_power_and_eval() {
        let q = p(&[-1, 1]).pow(3); // (t-1)^3
        let s3 = q.compose_power(3); // (s^3-1)^3
        assert_eq!(s3, p(&[-1, 0, 0, 1]).pow(3));
        assert_eq!(s3.eval(&super::super::rat_int(1)), Rational::zero());
        assert_eq!(p(&[0, 0, 1, 3]).order_at_zero(), Some(2));
    }
}
