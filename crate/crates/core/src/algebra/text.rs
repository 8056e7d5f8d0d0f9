//! Polynomial text format: `c*u^a*v^b*s^c` terms joined by ` + ` / ` - `,
//! with `^1` exponents and unit coefficients elided and rationals as `p/q`.
//! Terms are printed in descending lexicographic order of the declared
//! variables; the zero polynomial prints as `0`.

use alloc::borrow::ToOwned;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{AlgebraError, MultiPoly, Rational};

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (exps, c)) in self.terms().iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mut first = true;
            if !abs.is_one() || exps.iter().all(|&e| e == 0) {
                write!(f, "{abs}")?;
                first = false;
            }
            for (v, &e) in self.vars().iter().zip(exps) {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                f.write_str(v)?;
                if e != 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> AlgebraError {
        AlgebraError::Parse {
            pos: self.pos,
            msg: msg.to_owned(),
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.as_bytes().get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<&'a str, AlgebraError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(&self.src[start..self.pos])
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        if !self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            return None;
        }
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_')
        {
            self.pos += 1;
        }
        Some(&self.src[start..self.pos])
    }

    fn factor(
        &mut self,
        poly: &mut (Rational, vec::Vec<u32>),
        vars: &[String],
    ) -> Result<(), AlgebraError> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n: BigInt = self
                    .digits()?
                    .parse()
                    .map_err(|_| self.err("bad integer"))?;
                let mut q = Rational::from_integer(n);
                if self.eat(b'/') {
                    let d: BigInt = self
                        .digits()?
                        .parse()
                        .map_err(|_| self.err("bad integer"))?;
                    if d == BigInt::from(0) {
                        return Err(self.err("zero denominator"));
                    }
                    q /= Rational::from_integer(d);
                }
                poly.0 *= q;
                Ok(())
            }
            _ => {
                let start = self.pos;
                let name = self
                    .ident()
                    .ok_or_else(|| self.err("expected number or variable"))?;
                let idx =
                    vars.iter()
                        .position(|v| v == name)
                        .ok_or_else(|| AlgebraError::Parse {
                            pos: start,
                            msg: format!("unknown variable `{name}`"),
                        })?;
                let e: u32 = if self.eat(b'^') {
                    self.digits()?
                        .parse()
                        .map_err(|_| self.err("exponent out of range"))?
                } else {
                    1
                };
                poly.1[idx] += e;
                Ok(())
            }
        }
    }
}

impl MultiPoly {
    /// Parses the polynomial text format over the given variables.
    pub fn parse<S: AsRef<str>>(text: &str, vars: &[S]) -> Result<Self, AlgebraError> {
        let vars: vec::Vec<String> = vars.iter().map(|v| v.as_ref().to_owned()).collect();
        let mut p = Parser { src: text, pos: 0 };
        let mut out = MultiPoly::zero(&vars);
        let mut first = true;
        loop {
            p.skip_ws();
            if p.peek().is_none() {
                if first {
                    return Err(p.err("empty polynomial"));
                }
                break;
            }
            let sign = if p.eat(b'-') {
                -Rational::one()
            } else if p.eat(b'+') || first {
                Rational::one()
            } else {
                return Err(p.err("expected `+` or `-`"));
            };
            first = false;
            let mut term = (sign, vec![0u32; vars.len()]);
            p.factor(&mut term, &vars)?;
            while p.eat(b'*') {
                p.factor(&mut term, &vars)?;
            }
            out.add_term(term.1, term.0);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use alloc::string::ToString;

    use super::super::{rat, rat_int};
    use super::*;

    const UWS: [&str; 3] = ["u", "w", "s"];

    #[test]
    fn prints_relation_in_lex_order() {
        let rel = MultiPoly::from_terms(
            &UWS,
            [
                (vec![2, 1, 0], rat_int(1)),
                (vec![0, 0, 3], rat_int(-1)),
                (vec![0, 0, 0], rat_int(1)),
            ],
        );
        assert_eq!(rel.to_string(), "u^2*w - s^3 + 1");
    }

    #[test]
    fn prints_rational_coefficients() {
        let p = MultiPoly::from_terms(
            &UWS,
            [(vec![1, 0, 1], rat(-3, 2)), (vec![0, 0, 0], rat(2, 7))],
        );
        assert_eq!(p.to_string(), "-3/2*u*s + 2/7");
        assert_eq!(MultiPoly::zero(&UWS).to_string(), "0");
    }

    #[test]
    fn parses_printed_form() {
        let text = "-3/2*u^4*w^2*s + u*s - 7 + 1/3*s^10";
        let p = MultiPoly::parse(text, &UWS).unwrap();
        assert_eq!(MultiPoly::parse(&p.to_string(), &UWS).unwrap(), p);
        assert_eq!(p.terms().len(), 4);
    }

    #[test]
    fn parse_errors() {
        assert!(MultiPoly::parse("", &UWS).is_err());
        assert!(MultiPoly::parse("x + 1", &UWS).is_err());
        assert!(MultiPoly::parse("1/0*u", &UWS).is_err());
        assert!(MultiPoly::parse("u s", &UWS).is_err());
        assert!(MultiPoly::parse("u^", &UWS).is_err());
    }
}
