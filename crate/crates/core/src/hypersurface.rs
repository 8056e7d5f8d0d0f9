//! Hypersurface rings `C[u, v, s] / (u^k v - P(s))`.
//!
//! The rewrite rule `u^k v -> P(s)` strictly lowers the exponent of `v`, so
//! it terminates, and its normal forms (no monomial divisible by `u^k v`)
//! form a basis of the quotient, so it is confluent. Elements are graded by
//! the C*-weights `u: 1`, `v: -k`, `s: 0`.
//!
//! For the normalized ring `A' = C[u, w, s] / (u^m w - (s^d - 1))` the
//! localization at `u` is `C[u, 1/u, s]` with `w = (s^d - 1) / u^m`. The
//! derivation `u^e d/ds` is computed there, and an element of the
//! localization lies in `A'` iff its `u^n` coefficient is divisible by
//! `(s^d - 1)^ceil(-n/m)` for every `n < 0`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{AlgebraError, MultiPoly, Rational, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("P must be nonzero")]
    ZeroRelation,
    #[error("k must be positive")]
    ZeroK,
    #[error("negative s-exponent k e' + d l = {0}")]
    NegativeSExponent(i64),
    #[error("Q must be monic with Q(0) != 0")]
    BadQ,
    #[error("k = {k} is not m * m' = {m} * {m_prime}")]
    KMismatch { k: u32, m: u32, m_prime: u32 },
    #[error("general Q normalization unsupported: P = {0} is not (s^d - 1)^m'")]
    UnsupportedNormalization(String),
    #[error("ring {0} is not of the normalized form u^m w - (s^d - 1)")]
    NotNormalized(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Name of the second generator: `v` in `B_{k,P}`, `w` in the normalization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SecondVar {
    V,
    W,
}

impl SecondVar {
    pub fn name(self) -> &'static str {
        match self {
            SecondVar::V => "v",
            SecondVar::W => "w",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HypersurfaceRing {
    k: u32,
    p: UniPoly,
    second: SecondVar,
}

impl HypersurfaceRing {
    pub fn new(k: u32, p: UniPoly, second: SecondVar) -> Result<Self, RingError> {
        if k == 0 {
            return Err(RingError::ZeroK);
        }
        if p.is_zero() {
            return Err(RingError::ZeroRelation);
        }
        Ok(HypersurfaceRing { k, p, second })
    }

    /// `u^m w - (s^d - 1)`.
    pub fn normalized(m: u32, d: u32) -> Result<Self, RingError> {
        Self::new(m, s_power_minus_one(d), SecondVar::W)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn p(&self) -> &UniPoly {
        &self.p
    }

    pub fn p_multi(&self) -> MultiPoly {
        self.p.to_multi("s")
    }

    pub fn second_var(&self) -> SecondVar {
        self.second
    }

    pub fn vars(&self) -> [&'static str; 3] {
        ["u", self.second.name(), "s"]
    }

    /// C*-weights of `(u, second, s)`.
    pub fn cstar_weights(&self) -> [i64; 3] {
        [1, -(self.k as i64), 0]
    }

    /// `u^k * second - P(s)`.
    pub fn relation(&self) -> MultiPoly {
        let vars = self.vars();
        let mut rel = MultiPoly::monomial(&vars, Rational::one(), vec![self.k, 1, 0]);
        for (i, c) in self.p.coeffs().iter().enumerate() {
            rel.add_term(vec![0, 0, i as u32], -c.clone());
        }
        rel
    }

    /// `(m, d)` when `P = s^d - 1`.
    pub fn normalized_params(&self) -> Option<(u32, u32)> {
        let d = self.p.degree()? as u32;
        (d >= 1 && self.p == s_power_minus_one(d)).then_some((self.k, d))
    }

    /// Weight of a monomial `u^a x^b s^c`.
    pub fn weight_of(&self, exps: &[u32]) -> i64 {
        exps[0] as i64 - self.k as i64 * exps[1] as i64
    }
}

impl fmt::Display for HypersurfaceRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.relation())
    }
}

/// `s^d - 1`.
pub fn s_power_minus_one(d: u32) -> UniPoly {
    &UniPoly::monomial(Rational::one(), d as usize) - &UniPoly::one()
}

/// An element of a hypersurface ring in normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    poly: MultiPoly,
}

impl RingElement {
    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn into_poly(self) -> MultiPoly {
        self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// `B_{k,P}` with `P(s) = Q(s^d) s^(k e' + d l)`.
pub fn build_bkp(
    k: u32,
    d: u32,
    e_prime: i64,
    l: i64,
    q: &UniPoly,
) -> Result<HypersurfaceRing, RingError> {
    if !q.is_monic() || q.coeff(0).is_zero() {
        return Err(RingError::BadQ);
    }
    if d == 0 {
        return Err(RingError::ZeroK);
    }
    let exponent = k as i64 * e_prime + d as i64 * l;
    if exponent < 0 {
        return Err(RingError::NegativeSExponent(exponent));
    }
    let p = q.compose_power(d as usize).shift(exponent as usize);
    HypersurfaceRing::new(k, p, SecondVar::V)
}

/// Reduces `p` modulo the relation by exhaustively rewriting
/// `u^k * second -> P(s)`.
pub fn normal_form(ring: &HypersurfaceRing, p: &MultiPoly) -> Result<RingElement, RingError> {
    let vars = ring.vars();
    let p = p.align(&vars)?;
    let k = ring.k;
    let p_s = ring.p_multi().align(&vars)?;
    let mut powers: Vec<MultiPoly> = vec![MultiPoly::one(&vars)];
    let mut out = MultiPoly::zero(&vars);
    let mut pending: BTreeMap<Vec<u32>, Rational> = p.into_terms();
    while let Some((e, c)) = pending.pop_last() {
        if e[0] < k || e[1] == 0 {
            out.add_term(e, c);
            continue;
        }
        let q = (e[0] / k).min(e[1]);
        while powers.len() <= q as usize {
            let next = powers.last().unwrap().mul(&p_s)?;
            powers.push(next);
        }
        let shift = [e[0] - q * k, e[1] - q, e[2]];
        for (pe, pc) in powers[q as usize].terms() {
            let ne: Vec<u32> = pe.iter().zip(shift.iter()).map(|(a, b)| a + b).collect();
            let slot = pending.entry(ne).or_insert_with(Rational::zero);
            *slot += &c * pc;
        }
        pending.retain(|_, v| !v.is_zero());
    }
    Ok(RingElement { poly: out })
}

impl HypersurfaceRing {
    /// Normal form of `x * y`.
    pub fn mul(&self, x: &RingElement, y: &RingElement) -> Result<RingElement, RingError> {
        normal_form(self, &x.poly.mul(&y.poly)?)
    }

    pub fn element(&self, p: &MultiPoly) -> Result<RingElement, RingError> {
        normal_form(self, p)
    }

    /// The normal-form monomial `u^a x^b s^c`.
    pub fn monomial(&self, a: u32, b: u32, c: u32) -> Result<RingElement, RingError> {
        normal_form(
            self,
            &MultiPoly::monomial(&self.vars(), Rational::one(), vec![a, b, c]),
        )
    }
}

/// Outcome of the Jacobian criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmoothReport {
    pub smooth: bool,
    /// Squarefree factors of `P` with multiplicity `>= 2`; their roots are
    /// the `s`-coordinates of the singular points on `u = 0`.
    pub singular_factors: Vec<(UniPoly, u32)>,
    pub witness: String,
}

/// Singular points of `u^k v = P(s)` lie on `u = 0` at common roots of `P`
/// and `P'`, and only when `k >= 2`.
pub fn smooth_check(ring: &HypersurfaceRing) -> SmoothReport {
    if ring.k == 1 {
        return SmoothReport {
            smooth: true,
            singular_factors: Vec::new(),
            witness: String::from("k = 1: graph of v = P(s)/u"),
        };
    }
    let g = ring.p.gcd(&ring.p.derivative());
    if g.is_constant() {
        return SmoothReport {
            smooth: true,
            singular_factors: Vec::new(),
            witness: format!("gcd(P, P') = 1 for P = {}", ring.p_multi()),
        };
    }
    let singular_factors: Vec<(UniPoly, u32)> = ring
        .p
        .squarefree()
        .expect("P is nonzero")
        .into_iter()
        .filter(|(_, mult)| *mult >= 2)
        .collect();
    let witness = singular_factors
        .iter()
        .map(|(f, mult)| format!("({})^{mult}", f.to_multi("s")))
        .collect::<Vec<_>>()
        .join(" * ");
    SmoothReport {
        smooth: false,
        singular_factors,
        witness: format!("singular along u = 0 at roots of repeated factors {witness}"),
    }
}

/// Part of a fiber of `u`: `components` irreducible components, each with
/// the given multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FiberPart {
    pub components: usize,
    pub multiplicity: u32,
}

/// Fiber of the projection to `u`. Away from `u = 0` it is the curve
/// `second = P(s)/u^k`; over `u = 0` it is `P(s) = 0` times the
/// `second`-line, one component per distinct root of `P`.
pub fn fiber_analysis(ring: &HypersurfaceRing, u_value: &Rational) -> Vec<FiberPart> {
    if !u_value.is_zero() {
        return vec![FiberPart {
            components: 1,
            multiplicity: 1,
        }];
    }
    ring.p
        .squarefree()
        .expect("P is nonzero")
        .into_iter()
        .map(|(f, mult)| FiberPart {
            components: f.degree().unwrap_or(0),
            multiplicity: mult,
        })
        .collect()
}

/// The normalization `u^m w - (s^d - 1)` of `B = u^k v - (s^d - 1)^m'`,
/// with `w = (s^d - 1)/u^m` and `w^m' = v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalization {
    pub ring: HypersurfaceRing,
    /// `u^(m m') v - (s^d - 1)^m'` reduces to zero in `B`.
    pub integrality_witness: bool,
    pub smooth: SmoothReport,
}

pub fn normalize_theorem_case(
    bkp: &HypersurfaceRing,
    m: u32,
    m_prime: u32,
    d: u32,
) -> Result<Normalization, RingError> {
    if m == 0 || m_prime == 0 || bkp.k != m * m_prime {
        return Err(RingError::KMismatch {
            k: bkp.k,
            m,
            m_prime,
        });
    }
    if d == 0 || bkp.p != s_power_minus_one(d).pow(m_prime) {
        return Err(RingError::UnsupportedNormalization(format!(
            "{}",
            bkp.p_multi()
        )));
    }
    let vars = bkp.vars();
    let sd1 = s_power_minus_one(d).to_multi("s").align(&vars)?;
    let u_v = MultiPoly::monomial(&vars, Rational::one(), vec![m * m_prime, 1, 0]);
    let identity = u_v.sub(&sd1.pow(m_prime))?;
    let integrality_witness = normal_form(bkp, &identity)?.is_zero();
    let ring = HypersurfaceRing::normalized(m, d)?;
    let smooth = smooth_check(&ring);
    Ok(Normalization {
        ring,
        integrality_witness,
        smooth,
    })
}

/// Element of `C[u, 1/u, s]`: coefficient of `u^n` for each `n`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Laurent {
    pieces: BTreeMap<i64, UniPoly>,
}

impl Laurent {
    pub fn pieces(&self) -> &BTreeMap<i64, UniPoly> {
        &self.pieces
    }

    pub fn is_zero(&self) -> bool {
        self.pieces.is_empty()
    }

    fn add_piece(&mut self, n: i64, f: UniPoly) {
        let slot = self.pieces.entry(n).or_default();
        *slot = &*slot + &f;
        if slot.is_zero() {
            self.pieces.remove(&n);
        }
    }
}

/// A localization element that does not lie in the ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonPolynomial {
    pub u_exponent: i64,
    pub coefficient: UniPoly,
    /// Power of `s^d - 1` the coefficient would need to be divisible by.
    pub required_power: u32,
}

impl fmt::Display for NonPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "u^{} * ({}) is not divisible by (s^d - 1)^{}",
            self.u_exponent,
            self.coefficient.to_multi("s"),
            self.required_power
        )
    }
}

fn normalized_or_err(ring: &HypersurfaceRing) -> Result<(u32, u32), RingError> {
    ring.normalized_params()
        .ok_or_else(|| RingError::NotNormalized(format!("{ring}")))
}

/// Embeds an element of `u^m w - (s^d - 1)` into `C[u, 1/u, s]`.
pub fn to_laurent(ring: &HypersurfaceRing, x: &RingElement) -> Result<Laurent, RingError> {
    let (m, d) = normalized_or_err(ring)?;
    let sd1 = s_power_minus_one(d);
    let mut out = Laurent::default();
    for (e, c) in x.poly.terms() {
        let n = e[0] as i64 - m as i64 * e[1] as i64;
        let f = sd1.pow(e[1]).shift(e[2] as usize).scale(c);
        out.add_piece(n, f);
    }
    Ok(out)
}

/// Inverse of [`to_laurent`] on the image; reports the first piece that is
/// not in the ring.
pub fn from_laurent(
    ring: &HypersurfaceRing,
    x: &Laurent,
) -> Result<Result<RingElement, NonPolynomial>, RingError> {
    let (m, d) = normalized_or_err(ring)?;
    let sd1 = s_power_minus_one(d);
    let vars = ring.vars();
    let mut out = MultiPoly::zero(&vars);
    for (&n, f) in &x.pieces {
        let b = if n >= 0 {
            0
        } else {
            ((-n + m as i64 - 1) / m as i64) as u32
        };
        let g = match f.exact_div(&sd1.pow(b)) {
            Some(g) => g,
            None => {
                return Ok(Err(NonPolynomial {
                    u_exponent: n,
                    coefficient: f.clone(),
                    required_power: b,
                }))
            }
        };
        let a = (n + m as i64 * b as i64) as u32;
        for (j, c) in g.coeffs().iter().enumerate() {
            out.add_term(vec![a, b, j as u32], c.clone());
        }
    }
    Ok(Ok(RingElement { poly: out }))
}

/// Result of applying the derivation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Derivative {
    Polynomial(RingElement),
    NonPolynomial(NonPolynomial),
}

impl Derivative {
    pub fn polynomial(self) -> Option<RingElement> {
        match self {
            Derivative::Polynomial(x) => Some(x),
            Derivative::NonPolynomial(_) => None,
        }
    }
}

/// `u^e d/ds` on `C[u, 1/u, s]`.
pub fn derive_laurent(x: &Laurent, e: u32) -> Laurent {
    let mut out = Laurent::default();
    for (&n, f) in &x.pieces {
        out.add_piece(n + e as i64, f.derivative());
    }
    out
}

/// Applies `u^e d/ds` (so `du = 0`, `ds = u^e`, `dw = d s^(d-1) u^(e-m)`)
/// to an element of the normalized ring `u^m w - (s^d - 1)`.
pub fn derivation_apply(
    ring: &HypersurfaceRing,
    e: u32,
    x: &RingElement,
) -> Result<Derivative, RingError> {
    let lx = to_laurent(ring, x)?;
    Ok(match from_laurent(ring, &derive_laurent(&lx, e))? {
        Ok(y) => Derivative::Polynomial(y),
        Err(np) => Derivative::NonPolynomial(np),
    })
}

/// `max(c + d b)` over the monomials `u^a w^b s^c` of `x`: the `s`-degree
/// after substituting `w = (s^d - 1)/u^m`. The derivation lowers it by one.
pub fn s_weight(ring: &HypersurfaceRing, x: &RingElement) -> Result<u32, RingError> {
    let (_, d) = normalized_or_err(ring)?;
    Ok(x.poly
        .terms()
        .keys()
        .map(|e| e[2] + d * e[1])
        .max()
        .unwrap_or(0))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Nilpotency {
    /// Least `N` with `D^N x = 0`.
    Index(u32),
    /// Some iterate left the ring.
    NonPolynomial { step: u32, witness: NonPolynomial },
    /// No zero iterate within `1 + s_weight(x)` steps.
    BoundExceeded { bound: u32 },
}

pub fn nilpotency_index(
    ring: &HypersurfaceRing,
    e: u32,
    x: &RingElement,
) -> Result<Nilpotency, RingError> {
    let bound = 1 + s_weight(ring, x)?;
    let mut cur = x.clone();
    for step in 0..=bound {
        if cur.is_zero() {
            return Ok(Nilpotency::Index(step));
        }
        cur = match derivation_apply(ring, e, &cur)? {
            Derivative::Polynomial(y) => y,
            Derivative::NonPolynomial(witness) => {
                return Ok(Nilpotency::NonPolynomial {
                    step: step + 1,
                    witness,
                })
            }
        };
    }
    Ok(Nilpotency::BoundExceeded { bound })
}

#[cfg(test)]
mod tests {
    use alloc::string::ToString;

    use super::*;
    use crate::algebra::{rat_int, UniPoly};

    fn uws(text: &str) -> MultiPoly {
        MultiPoly::parse(text, &["u", "w", "s"]).unwrap()
    }

    fn ring_a(m: u32, d: u32) -> HypersurfaceRing {
        HypersurfaceRing::normalized(m, d).unwrap()
    }

    #[test]
    fn build_bkp_examples() {
        let q = UniPoly::from_i64(&[-1, 1]).pow(3);
        let b = build_bkp(6, 3, 2, -4, &q).unwrap();
        assert_eq!(b.p(), &s_power_minus_one(3).pow(3));
        assert_eq!(b.to_string(), "u^6*v - s^9 + 3*s^6 - 3*s^3 + 1");

        let b = build_bkp(2, 2, 1, -1, &UniPoly::from_i64(&[-1, 1])).unwrap();
        assert_eq!(b.p(), &UniPoly::from_i64(&[-1, 0, 1]));

        // d = 1 triple: l = -e' d' = -1 makes the s-exponent vanish.
        let b = build_bkp(1, 1, 1, -1, &UniPoly::from_i64(&[-1, 1])).unwrap();
        assert_eq!(b.p(), &UniPoly::from_i64(&[-1, 1]));
        let b = build_bkp(1, 1, 1, 0, &UniPoly::from_i64(&[-1, 1])).unwrap();
        assert_eq!(b.p(), &UniPoly::from_i64(&[0, -1, 1]));

        let b = build_bkp(2, 2, 1, 0, &UniPoly::from_i64(&[-1, 1])).unwrap();
        assert_eq!(b.p(), &UniPoly::from_i64(&[0, 0, -1, 0, 1]));
    }

    #[test]
    fn build_bkp_errors() {
        let q = UniPoly::from_i64(&[-1, 1]);
        assert_eq!(
            build_bkp(2, 2, 1, -2, &q),
            Err(RingError::NegativeSExponent(-2))
        );
        assert_eq!(
            build_bkp(2, 2, 1, 0, &UniPoly::from_i64(&[0, 1])),
            Err(RingError::BadQ)
        );
        assert_eq!(
            build_bkp(2, 2, 1, 0, &UniPoly::from_i64(&[1, 2])),
            Err(RingError::BadQ)
        );
    }

    #[test]
    fn normal_form_examples() {
        let a = ring_a(2, 3);
        assert_eq!(
            normal_form(&a, &uws("u^2*w*s")).unwrap().poly(),
            &uws("s^4 - s")
        );
        assert_eq!(
            normal_form(&a, &uws("u*w*s")).unwrap().poly(),
            &uws("u*w*s")
        );
        assert_eq!(
            normal_form(&a, &uws("u^4*w^2")).unwrap().poly(),
            &uws("s^6 - 2*s^3 + 1")
        );
        assert!(normal_form(&a, &a.relation()).unwrap().is_zero());
    }

    #[test]
    fn smooth_examples() {
        assert!(smooth_check(&ring_a(2, 3)).smooth);
        let b = HypersurfaceRing::new(6, s_power_minus_one(3).pow(3), SecondVar::V).unwrap();
        let r = smooth_check(&b);
        assert!(!r.smooth);
        assert_eq!(r.singular_factors, vec![(s_power_minus_one(3), 3)]);
        let g = HypersurfaceRing::new(1, UniPoly::from_i64(&[0, 0, 1]), SecondVar::V).unwrap();
        assert!(smooth_check(&g).smooth);
        let c = HypersurfaceRing::new(3, UniPoly::from_i64(&[5]), SecondVar::V).unwrap();
        assert!(smooth_check(&c).smooth);
    }

    #[test]
    fn fiber_examples() {
        let a = ring_a(2, 3);
        let one = FiberPart {
            components: 1,
            multiplicity: 1,
        };
        assert_eq!(fiber_analysis(&a, &rat_int(1)), vec![one]);
        assert_eq!(
            fiber_analysis(&a, &rat_int(0)),
            vec![FiberPart {
                components: 3,
                multiplicity: 1
            }]
        );
        let b = HypersurfaceRing::new(6, s_power_minus_one(3).pow(3), SecondVar::V).unwrap();
        assert_eq!(
            fiber_analysis(&b, &rat_int(0)),
            vec![FiberPart {
                components: 3,
                multiplicity: 3
            }]
        );
    }

    #[test]
    fn normalize_examples() {
        for (k, m, mp, d) in [(6, 2, 3, 3), (2, 2, 1, 2), (6, 3, 2, 2)] {
            let b = HypersurfaceRing::new(k, s_power_minus_one(d).pow(mp), SecondVar::V).unwrap();
            let n = normalize_theorem_case(&b, m, mp, d).unwrap();
            assert_eq!(n.ring, HypersurfaceRing::normalized(m, d).unwrap());
            assert!(n.integrality_witness);
            assert!(n.smooth.smooth);
        }
        assert_eq!(n_ring_string(3, 3), "u^3*w - s^3 + 1");
    }

    fn n_ring_string(m: u32, d: u32) -> alloc::string::String {
        alloc::string::ToString::to_string(&HypersurfaceRing::normalized(m, d).unwrap())
    }

    #[test]
    fn normalize_errors() {
        let b = HypersurfaceRing::new(6, s_power_minus_one(3).pow(3), SecondVar::V).unwrap();
        assert!(matches!(
            normalize_theorem_case(&b, 4, 2, 3),
            Err(RingError::KMismatch { .. })
        ));
        let general =
            HypersurfaceRing::new(6, UniPoly::from_i64(&[-2, 0, 0, 1]).pow(3), SecondVar::V)
                .unwrap();
        assert!(matches!(
            normalize_theorem_case(&general, 2, 3, 3),
            Err(RingError::UnsupportedNormalization(_))
        ));
    }

    #[test]
    fn derivation_examples() {
        let a = ring_a(2, 3);
        let us = a.element(&uws("u*s")).unwrap();
        let d = derivation_apply(&a, 2, &us).unwrap().polynomial().unwrap();
        assert_eq!(d.poly(), &uws("u^3"));

        let ws = a.element(&uws("w*s")).unwrap();
        let d = derivation_apply(&a, 2, &ws).unwrap().polynomial().unwrap();
        assert_eq!(d.poly(), &uws("4*s^3 - 1"));

        let a23 = ring_a(3, 2);
        let ws = a23.element(&uws("w*s")).unwrap();
        match derivation_apply(&a23, 1, &ws).unwrap() {
            Derivative::NonPolynomial(np) => {
                assert_eq!(np.u_exponent, -2);
                // 2 s^2 u^-2 from dw * s, plus u * w = u^-2 (s^2 - 1)
                assert_eq!(np.coefficient, UniPoly::from_i64(&[-1, 0, 3]));
            }
            other => panic!("expected NonPolynomial, got {other:?}"),
        }
        let b = HypersurfaceRing::new(6, s_power_minus_one(3).pow(3), SecondVar::V).unwrap();
        assert!(matches!(
            derivation_apply(&b, 1, &us),
            Err(RingError::NotNormalized(_))
        ));
    }

    #[test]
    fn nilpotency_examples() {
        let a = ring_a(2, 3);
        let us = a.element(&uws("u*s")).unwrap();
        assert_eq!(nilpotency_index(&a, 2, &us).unwrap(), Nilpotency::Index(2));
        let one = a.element(&uws("1")).unwrap();
        assert_eq!(nilpotency_index(&a, 2, &one).unwrap(), Nilpotency::Index(1));
        let x = a.element(&uws("u*w*s^2")).unwrap();
        assert_eq!(s_weight(&a, &x).unwrap(), 5);
        match nilpotency_index(&a, 2, &x).unwrap() {
            Nilpotency::Index(n) => assert!(n <= 6, "index {n}"),
            other => panic!("{other:?}"),
        }
        let a23 = ring_a(3, 2);
        let ws = a23.element(&uws("w*s")).unwrap();
        assert!(matches!(
            nilpotency_index(&a23, 1, &ws).unwrap(),
            Nilpotency::NonPolynomial { step: 1, .. }
        ));
    }

    #[test]
    fn laurent_round_trip() {
        let a = ring_a(2, 2);
        let x = a.element(&uws("3*u*w^3*s + u^5 - 1/2*w*s^4")).unwrap();
        let back = from_laurent(&a, &to_laurent(&a, &x).unwrap())
            .unwrap()
            .unwrap();
        assert_eq!(back, x);
    }
}
