//! Diagonal `Z_d` actions and the comparison of `A'^{Z_d}` with the DPD
//! presentation.
//!
//! Roots of unity are never evaluated: `zeta^j` is the residue `j mod d`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{rat_int, Rational, UniPoly};
use crate::dpd::{self, DpdError};
use crate::hypersurface::{
    derivation_apply, nilpotency_index, s_power_minus_one, s_weight, Derivative, HypersurfaceRing,
    Nilpotency, RingError,
};

/// Weight range over which accepted LND degrees are certified nilpotent on
/// weight-piece generators.
pub const LND_CERTIFY_WEIGHT: i64 = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CyclicError {
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("gcd({e}, {d}) = {g}: the exponents must be coprime")]
    NotCoprime { e: i64, d: u32, g: i64 },
    #[error("parameter {name} = {value} out of range")]
    OutOfRange { name: &'static str, value: i64 },
    #[error("moduli or variables differ")]
    ActionMismatch,
    #[error("relation is not semi-invariant: monomial residues {0:?}")]
    NotSemiInvariant(Vec<u32>),
    #[error("structural failure: {0}")]
    Structural(String),
    #[error("LND search bound {bound} is below m + d = {min}")]
    BoundTooSmall { bound: u32, min: u32 },
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Dpd(#[from] DpdError),
}

/// Inverse of `e` modulo `d` as a residue in `[1, d]` (`1` when `d = 1`).
pub fn mod_inverse(e: i64, d: u32) -> Result<u32, CyclicError> {
    if d == 0 {
        return Err(CyclicError::ZeroModulus);
    }
    let dm = d as i64;
    let ext = e.rem_euclid(dm).extended_gcd(&dm);
    if ext.gcd != 1 && d != 1 {
        return Err(CyclicError::NotCoprime {
            e,
            d,
            g: e.gcd(&dm),
        });
    }
    if d == 1 {
        return Ok(1);
    }
    Ok(ext.x.rem_euclid(dm) as u32)
}

/// A theorem triple `(d, e, m)` and its derived constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SurfaceTriple {
    pub d: u32,
    pub e: u32,
    pub m: u32,
    /// `e e' = 1 mod d`, in `[1, d]`.
    pub e_prime: u32,
    /// `lcm(d, m)`.
    pub k: u32,
    pub m_prime: u32,
    pub d_prime: u32,
    /// `-e' d'`.
    pub l: i64,
}

impl SurfaceTriple {
    pub fn new(d: u32, e: u32, m: u32) -> Result<Self, CyclicError> {
        if d == 0 {
            return Err(CyclicError::OutOfRange {
                name: "d",
                value: 0,
            });
        }
        if m == 0 {
            return Err(CyclicError::OutOfRange {
                name: "m",
                value: 0,
            });
        }
        if e == 0 {
            return Err(CyclicError::OutOfRange {
                name: "e",
                value: 0,
            });
        }
        let e_prime = mod_inverse(e as i64, d)?;
        let k = d.lcm(&m);
        let m_prime = k / m;
        let d_prime = k / d;
        Ok(SurfaceTriple {
            d,
            e,
            m,
            e_prime,
            k,
            m_prime,
            d_prime,
            l: -(e_prime as i64) * d_prime as i64,
        })
    }

    /// `k e' + d l`, zero by construction.
    pub fn s_exponent(&self) -> i64 {
        self.k as i64 * self.e_prime as i64 + self.d as i64 * self.l
    }

    /// `zeta.(u, w, s) = (zeta u, zeta^-m w, zeta^e s)`.
    pub fn theorem_action(&self) -> CyclicAction {
        CyclicAction::new(
            self.d,
            &[("u", 1), ("w", -(self.m as i64)), ("s", self.e as i64)],
        )
        .expect("positive modulus")
    }

    /// The action `(zeta^e' u, v, zeta s)` on `B` transported to `A'`
    /// through `w = (s^d - 1)/u^m`: `(e', -m e', 1)`.
    pub fn lemma_action(&self) -> CyclicAction {
        let ep = self.e_prime as i64;
        CyclicAction::new(self.d, &[("u", ep), ("w", -(self.m as i64) * ep), ("s", 1)])
            .expect("positive modulus")
    }

    pub fn normalized_ring(&self) -> HypersurfaceRing {
        HypersurfaceRing::normalized(self.m, self.d).expect("m, d positive")
    }
}

/// `zeta . x_i = zeta^(w_i) x_i` with `zeta` a primitive `d`-th root of unity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicAction {
    modulus: u32,
    vars: Vec<String>,
    weights: Vec<u32>,
}

impl CyclicAction {
    /// Weights are reduced into `[0, d)`.
    pub fn new(modulus: u32, weights: &[(&str, i64)]) -> Result<Self, CyclicError> {
        if modulus == 0 {
            return Err(CyclicError::ZeroModulus);
        }
        Ok(CyclicAction {
            modulus,
            vars: weights.iter().map(|(v, _)| v.to_string()).collect(),
            weights: weights
                .iter()
                .map(|(_, w)| w.rem_euclid(modulus as i64) as u32)
                .collect(),
        })
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight(&self, var: &str) -> Option<u32> {
        self.vars
            .iter()
            .position(|v| v == var)
            .map(|i| self.weights[i])
    }

    /// Residue of the monomial with the given exponents.
    pub fn residue(&self, exps: &[u32]) -> u32 {
        let d = self.modulus as u64;
        (exps
            .iter()
            .zip(&self.weights)
            .map(|(&a, &w)| a as u64 * w as u64 % d)
            .sum::<u64>()
            % d) as u32
    }

    pub fn is_invariant(&self, exps: &[u32]) -> bool {
        self.residue(exps) == 0
    }
}

/// Points of the surface fixed by `zeta^power` whose nonzero coordinates are
/// exactly those flagged in `nonzero` (ordered `u, second, s`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedLocus {
    pub power: u32,
    pub nonzero: [bool; 3],
    pub description: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Freeness {
    pub free: bool,
    pub fixed_loci: Vec<FixedLocus>,
}

/// Whether the action is free on `u^k x = P(s)`.
///
/// `zeta^b` fixes a point iff every nonzero coordinate has `b w_i = 0 mod d`,
/// so it suffices to check, for every `b` and every zero/nonzero pattern of
/// coordinates allowed by that condition, whether the surface has a point
/// with exactly that pattern.
pub fn freeness_check(
    action: &CyclicAction,
    ring: &HypersurfaceRing,
) -> Result<Freeness, CyclicError> {
    let names = ring.vars();
    let w: Vec<u32> = names
        .iter()
        .map(|v| action.weight(v).ok_or(CyclicError::ActionMismatch))
        .collect::<Result<_, _>>()?;
    if action.vars.len() != 3 {
        return Err(CyclicError::ActionMismatch);
    }
    let d = action.modulus;
    let aligned = CyclicAction {
        modulus: d,
        vars: names.iter().map(|v| v.to_string()).collect(),
        weights: w.clone(),
    };
    let p = ring.p();
    let mut residues = vec![aligned.residue(&[ring.k(), 1, 0])];
    for (i, c) in p.coeffs().iter().enumerate() {
        if !c.is_zero() {
            residues.push(aligned.residue(&[0, 0, i as u32]));
        }
    }
    if residues.iter().any(|&r| r != residues[0]) {
        residues.dedup();
        return Err(CyclicError::NotSemiInvariant(residues));
    }

    let vanishes_at_zero = p.coeff(0).is_zero();
    let has_nonzero_root = {
        let ord = p.order_at_zero().unwrap_or(0);
        p.degree().unwrap_or(0) > ord
    };
    let mut fixed_loci = Vec::new();
    for b in 1..d {
        let allowed: Vec<bool> = w
            .iter()
            .map(|&wi| (b as u64 * wi as u64).is_multiple_of(d as u64))
            .collect();
        for mask in 0u8..8 {
            let nz = [mask & 1 != 0, mask & 2 != 0, mask & 4 != 0];
            if (0..3).any(|i| nz[i] && !allowed[i]) {
                continue;
            }
            // u^k x = 0 forces P(s) = 0; otherwise P(s) must be nonzero.
            let realizable = if !nz[0] || !nz[1] {
                if nz[2] {
                    has_nonzero_root
                } else {
                    vanishes_at_zero
                }
            } else if nz[2] {
                true
            } else {
                !vanishes_at_zero
            };
            if realizable {
                let coord = |i: usize| {
                    if nz[i] {
                        names[i].to_string()
                    } else {
                        "0".to_string()
                    }
                };
                fixed_loci.push(FixedLocus {
                    power: b,
                    nonzero: nz,
                    description: format!(
                        "zeta^{b} fixes ({}, {}, {}) with nonzero coordinates as shown",
                        coord(0),
                        coord(1),
                        coord(2)
                    ),
                });
            }
        }
    }
    Ok(Freeness {
        free: fixed_loci.is_empty(),
        fixed_loci,
    })
}

/// Minimal generators of the monoid of invariant exponent vectors of a
/// three-variable action.
///
/// Each `d e_i` is invariant, so any invariant vector with a coordinate above
/// `d` splits off `d e_i`; the generators therefore lie in `[0, d]^3`.
pub fn hilbert_basis(action: &CyclicAction) -> Vec<[u32; 3]> {
    assert_eq!(action.vars.len(), 3, "three-variable action");
    let d = action.modulus;
    let mut invariant = Vec::new();
    for a in 0..=d {
        for b in 0..=d {
            for c in 0..=d {
                let x = [a, b, c];
                if x != [0, 0, 0] && action.is_invariant(&x) {
                    invariant.push(x);
                }
            }
        }
    }
    let le = |y: &[u32; 3], x: &[u32; 3]| (0..3).all(|i| y[i] <= x[i]);
    invariant
        .iter()
        .filter(|x| !invariant.iter().any(|y| y != *x && le(y, x)))
        .copied()
        .collect()
}

/// The normal-form monomial `u^a w^b s^c` generating the weight-`n`
/// invariant piece of `A'` over `C[s^d]`: `a - m b = n` with `a < m` or
/// `b = 0`, and the least `c >= 0` making it invariant.
pub fn weight_piece_generator(triple: &SurfaceTriple, n: i64) -> [u32; 3] {
    let m = triple.m as i64;
    let (a, b) = if n >= 0 {
        (n, 0)
    } else {
        let b = (-n + m - 1) / m;
        (n + m * b, b)
    };
    let action = triple.theorem_action();
    let c = (0..triple.d)
        .find(|&c| action.is_invariant(&[a as u32, b as u32, c]))
        .expect("e is a unit mod d");
    [a as u32, b as u32, c]
}

/// Checks by enumeration that every invariant normal-form monomial
/// `u^a w^b s^c` with exponents `<= max_exponent` is the weight-piece
/// generator of its weight times a power of `s^d`, i.e. each invariant
/// weight piece is free of rank one over `C[s^d]`. Returns the first
/// counterexample.
pub fn weight_piece_counterexample(triple: &SurfaceTriple, max_exponent: u32) -> Option<[u32; 3]> {
    let action = triple.theorem_action();
    for a in 0..=max_exponent {
        for b in 0..=max_exponent {
            if a >= triple.m && b > 0 {
                continue;
            }
            for c in 0..=max_exponent {
                if !action.is_invariant(&[a, b, c]) {
                    continue;
                }
                let n = a as i64 - triple.m as i64 * b as i64;
                let [ga, gb, gc] = weight_piece_generator(triple, n);
                if ga != a || gb != b || c < gc || (c - gc) % triple.d != 0 {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductCheck {
    /// `{0: kappa, 1: lambda}` from `g_n g_n' = (s^d)^kappa (s^d - 1)^lambda g_{n+n'}`.
    pub measured: BTreeMap<Rational, BigInt>,
    /// DPD product defect of the matching divisor pair.
    pub predicted: BTreeMap<Rational, BigInt>,
    pub matches: bool,
}

/// Multiplies weight-piece generators in `A'`, factors the product against
/// `g_{n+n'}` and compares with the DPD product defect.
pub fn product_structure_check(
    triple: &SurfaceTriple,
    n: i64,
    n_prime: i64,
) -> Result<ProductCheck, CyclicError> {
    let ring = triple.normalized_ring();
    let gen = |w: i64| -> Result<_, CyclicError> {
        let [a, b, c] = weight_piece_generator(triple, w);
        Ok(ring.monomial(a, b, c)?)
    };
    let product = ring.mul(&gen(n)?, &gen(n_prime)?)?;
    let [a, b, c] = weight_piece_generator(triple, n + n_prime);

    let mut f = vec![Rational::zero(); 1];
    for (e, coef) in product.poly().terms() {
        if e[0] != a || e[1] != b {
            return Err(CyclicError::Structural(format!(
                "product {product} has a monomial outside u^{a} w^{b} C[s]"
            )));
        }
        let j = e[2] as usize;
        if f.len() <= j {
            f.resize(j + 1, Rational::zero());
        }
        f[j] = coef.clone();
    }
    let f = UniPoly::from_coeffs(f);
    let s_c = UniPoly::monomial(rat_int(1), c as usize);
    let mut rest = f.exact_div(&s_c).ok_or_else(|| {
        CyclicError::Structural(format!("s^{c} does not divide {}", f.to_multi("s")))
    })?;
    let t = UniPoly::monomial(rat_int(1), triple.d as usize);
    let t_minus_one = s_power_minus_one(triple.d);
    let mut strip = |factor: &UniPoly| {
        let mut count = 0u32;
        while let Some(q) = rest.exact_div(factor) {
            if q.is_zero() {
                break;
            }
            rest = q;
            count += 1;
        }
        count
    };
    let kappa = strip(&t);
    let lambda = strip(&t_minus_one);
    if rest != UniPoly::one() {
        return Err(CyclicError::Structural(format!(
            "cofactor {} is not a product of s^d and s^d - 1",
            rest.to_multi("s")
        )));
    }

    let mut measured = BTreeMap::new();
    for (p, v) in [(0, kappa), (1, lambda)] {
        if v != 0 {
            measured.insert(rat_int(p), BigInt::from(v));
        }
    }
    let pair = dpd::lemma1_divisors(triple.d as u64, triple.e_prime as i64, triple.m as u64)?;
    let predicted = dpd::product_defect(&pair, n, n_prime);
    let matches = measured == predicted;
    Ok(ProductCheck {
        measured,
        predicted,
        matches,
    })
}

/// Unit `c` with `c * weights(a1) = weights(a2)` pointwise, if any.
pub fn subgroup_unit(a1: &CyclicAction, a2: &CyclicAction) -> Result<Option<u32>, CyclicError> {
    if a1.modulus != a2.modulus || a1.vars != a2.vars {
        return Err(CyclicError::ActionMismatch);
    }
    let d = a1.modulus;
    Ok((1..=d).find(|&c| {
        (c as u64).gcd(&(d as u64)) == 1
            && a1
                .weights
                .iter()
                .zip(&a2.weights)
                .all(|(&x, &y)| (c as u64 * x as u64) % d as u64 == y as u64)
    }))
}

/// Whether two actions differ by an automorphism `zeta -> zeta^c` of `Z_d`.
pub fn same_subgroup(a1: &CyclicAction, a2: &CyclicAction) -> Result<bool, CyclicError> {
    Ok(subgroup_unit(a1, a2)?.is_some())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPermutation {
    /// Cycles of `j -> j + e mod d` on the components `s = zeta^j` of the
    /// fiber `u = 0`.
    pub cycles: Vec<Vec<u32>>,
    pub transitive: bool,
}

pub fn component_permutation(d: u32, e: i64) -> Result<ComponentPermutation, CyclicError> {
    if d == 0 {
        return Err(CyclicError::ZeroModulus);
    }
    let step = e.rem_euclid(d as i64) as u32;
    let mut seen = vec![false; d as usize];
    let mut cycles = Vec::new();
    for start in 0..d {
        if seen[start as usize] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut j = start;
        while !seen[j as usize] {
            seen[j as usize] = true;
            cycle.push(j);
            j = (j + step) % d;
        }
        cycles.push(cycle);
    }
    let transitive = cycles.len() == 1;
    Ok(ComponentPermutation { cycles, transitive })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LndDegree {
    pub degree: u32,
    /// Largest nilpotency index seen on the weight-piece generators.
    pub max_index: u32,
    /// Every generator with `|n| <= LND_CERTIFY_WEIGHT` reached zero within
    /// `1 + s_weight` steps.
    pub certified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LndSearch {
    pub degrees: Vec<LndDegree>,
    /// Congruent degrees rejected, with the generator whose image left the ring.
    pub rejected: Vec<(u32, String)>,
}

impl LndSearch {
    pub fn degree_list(&self) -> Vec<u32> {
        self.degrees.iter().map(|d| d.degree).collect()
    }

    pub fn all_certified(&self) -> bool {
        self.degrees.iter().all(|d| d.certified)
    }
}

/// Degrees `e <= bound`, congruent to the `s`-weight of the action mod `d`,
/// for which `u^e d/ds` maps every invariant generator into `A'`. By the
/// Leibniz rule such a derivation preserves the invariant ring.
pub fn find_valid_lnd_degrees(
    triple: &SurfaceTriple,
    bound: u32,
) -> Result<LndSearch, CyclicError> {
    let min = triple.m + triple.d;
    if bound < min {
        return Err(CyclicError::BoundTooSmall { bound, min });
    }
    let ring = triple.normalized_ring();
    let action = triple.theorem_action();
    let s_res = action.weight("s").expect("s weight");
    let generators = hilbert_basis(&action)
        .into_iter()
        .map(|[a, b, c]| ring.monomial(a, b, c).map(|x| ((a, b, c), x)))
        .collect::<Result<Vec<_>, _>>()?;
    let pieces = (-LND_CERTIFY_WEIGHT..=LND_CERTIFY_WEIGHT)
        .map(|n| {
            let [a, b, c] = weight_piece_generator(triple, n);
            ring.monomial(a, b, c)
        })
        .collect::<Result<Vec<_>, _>>()?;

    let mut search = LndSearch {
        degrees: Vec::new(),
        rejected: Vec::new(),
    };
    'degrees: for e in (1..=bound).filter(|e| e % triple.d == s_res) {
        for ((a, b, c), g) in &generators {
            if let Derivative::NonPolynomial(np) = derivation_apply(&ring, e, g)? {
                search
                    .rejected
                    .push((e, format!("u^{a}*w^{b}*s^{c}: {np}")));
                continue 'degrees;
            }
        }
        let mut certified = true;
        let mut max_index = 0;
        for x in &pieces {
            let limit = 1 + s_weight(&ring, x)?;
            match nilpotency_index(&ring, e, x)? {
                Nilpotency::Index(n) if n <= limit => max_index = max_index.max(n),
                _ => certified = false,
            }
        }
        search.degrees.push(LndDegree {
            degree: e,
            max_index,
            certified,
        });
    }
    Ok(search)
}
