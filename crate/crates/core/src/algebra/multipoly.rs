use alloc::borrow::ToOwned;
use alloc::collections::btree_map::{BTreeMap, Entry};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{AlgebraError, Rational, UniPoly};

/// One exponent per declared variable.
pub type Exponents = Vec<u32>;

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms are keyed by exponent vectors; the `BTreeMap` order is the
/// lexicographic order in the declared variable order. Zero coefficients are
/// never stored, so the zero polynomial has an empty term map.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Exponents, Rational>,
}

impl MultiPoly {
    pub fn zero<S: AsRef<str>>(vars: &[S]) -> Self {
        MultiPoly {
            vars: vars.iter().map(|v| v.as_ref().to_owned()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant<S: AsRef<str>>(vars: &[S], c: Rational) -> Self {
        let n = vars.len();
        Self::monomial(vars, c, vec![0; n])
    }

    pub fn one<S: AsRef<str>>(vars: &[S]) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn monomial<S: AsRef<str>>(vars: &[S], c: Rational, exps: Exponents) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var<S: AsRef<str>>(vars: &[S], name: &str) -> Result<Self, AlgebraError> {
        let idx = vars
            .iter()
            .position(|v| v.as_ref() == name)
            .ok_or_else(|| AlgebraError::UnknownVariable(name.to_owned()))?;
        let mut exps = vec![0; vars.len()];
        exps[idx] = 1;
        Ok(Self::monomial(vars, Rational::one(), exps))
    }

    /// Builds a polynomial from raw terms, summing duplicates and pruning
    /// zeros.
    pub fn from_terms<S, I>(vars: &[S], terms: I) -> Self
    where
        S: AsRef<str>,
        I: IntoIterator<Item = (Exponents, Rational)>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, Rational> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Exponents, Rational> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn var_index(&self, name: &str) -> Result<usize, AlgebraError> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| AlgebraError::UnknownVariable(name.to_owned()))
    }

    /// Adds `c * x^e` in place.
    pub fn add_term(&mut self, e: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
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

    pub(crate) fn check_same_vars(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(AlgebraError::VariableMismatch {
                left: self.vars.clone(),
                right: other.vars.clone(),
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_same_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_same_vars(other)?;
        let mut out = Self::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    /// Multiplies by the monomial `c * x^e`.
    pub fn mul_monomial(&self, e: &[u32], c: &Rational) -> Self {
        assert_eq!(e.len(), self.vars.len(), "exponent vector length");
        let mut out = Self::zero(&self.vars);
        if c.is_zero() {
            return out;
        }
        for (ea, ca) in &self.terms {
            let ex = ea.iter().zip(e).map(|(a, b)| a + b).collect();
            out.terms.insert(ex, ca * c);
        }
        out
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.vars);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base).expect("same variables");
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base).expect("same variables");
            }
        }
        acc
    }

    /// Partial derivative with respect to `var`.
    pub fn partial(&self, var: &str) -> Result<Self, AlgebraError> {
        let i = self.var_index(var)?;
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[i] -= 1;
            out.add_term(ne, c * Rational::from_integer(e[i].into()));
        }
        Ok(out)
    }

    /// Largest exponent of `var` over all terms (0 for the zero polynomial).
    pub fn degree_in(&self, var: &str) -> Result<u32, AlgebraError> {
        let i = self.var_index(var)?;
        Ok(self.terms.keys().map(|e| e[i]).max().unwrap_or(0))
    }

    /// Re-expresses the polynomial over a new variable list. Every variable
    /// that occurs with a positive exponent must be present in `vars`.
    pub fn align<S: AsRef<str>>(&self, vars: &[S]) -> Result<Self, AlgebraError> {
        let map: Vec<Option<usize>> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w.as_ref() == v))
            .collect();
        let mut out = Self::zero(vars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; vars.len()];
            for (i, &x) in e.iter().enumerate() {
                match map[i] {
                    Some(j) => ne[j] = x,
                    None if x == 0 => {}
                    None => return Err(AlgebraError::UnknownVariable(self.vars[i].clone())),
                }
            }
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    pub(crate) fn univariate_var(&self) -> Result<&str, AlgebraError> {
        match self.vars.as_slice() {
            [v] => Ok(v),
            _ => Err(AlgebraError::NotUnivariate(self.vars.clone())),
        }
    }

    pub fn to_unipoly(&self) -> Result<UniPoly, AlgebraError> {
        self.univariate_var()?;
        let deg = self.terms.keys().map(|e| e[0]).max().unwrap_or(0) as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (e, c) in &self.terms {
            coeffs[e[0] as usize] = c.clone();
        }
        Ok(UniPoly::from_coeffs(coeffs))
    }
}

impl UniPoly {
    pub fn to_multi(&self, var: &str) -> MultiPoly {
        MultiPoly::from_terms(
            &[var],
            self.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (vec![i as u32], c.clone())),
        )
    }
}
