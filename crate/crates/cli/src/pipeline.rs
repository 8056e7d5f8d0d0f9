use std::thread;

use thiserror::Error;

use pseudoplane_core::algebra::rat_int;
use pseudoplane_core::algebra::UniPoly;
use pseudoplane_core::cyclic::{
    component_permutation, find_valid_lnd_degrees, freeness_check, hilbert_basis,
    product_structure_check, same_subgroup, weight_piece_counterexample, SurfaceTriple,
};
use pseudoplane_core::dpd::{
    classify_presentation, lemma1_divisors, recover_lemma1_parameters, PresentationDescriptor,
};
use pseudoplane_core::hypersurface::{
    build_bkp, fiber_analysis, normalize_theorem_case, s_power_minus_one, smooth_check, FiberPart,
    HypersurfaceRing, SecondVar,
};
use pseudoplane_core::qdivisor::{
    canonical_pair, divisor_to_poly, ml1_test, negative_locus, DivisorError, DpdPair, QDivisor,
};

use crate::report::*;

/// Invalid input; maps to exit code 2.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("{name} = {value}: must be at least 1")]
    OutOfRange { name: &'static str, value: i64 },
    #[error("gcd(e, d) = gcd({e}, {d}) = {g}: e and d must be coprime")]
    NotCoprime { e: i64, d: i64, g: i64 },
    #[error("invalid divisor: {0}")]
    Divisor(#[from] DivisorError),
}

impl InputError {
    pub fn kind(&self) -> &'static str {
        match self {
            InputError::OutOfRange { .. } => "out_of_range",
            InputError::NotCoprime { .. } => "not_coprime",
            InputError::Divisor(DivisorError::PositiveSum { .. }) => "positive_sum",
            InputError::Divisor(_) => "divisor",
        }
    }

    pub fn to_report(&self) -> ErrorReport {
        ErrorReport {
            format_version: FORMAT_VERSION,
            error: self.kind().to_string(),
            message: self.to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Product structure is checked for `|n|, |n'| <= max_weight`; 0 skips it.
    pub max_weight: u32,
    /// Exponent bound for the weight-piece enumeration.
    pub max_exponent: u32,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_weight: 8,
            max_exponent: 10,
        }
    }
}

fn positive(name: &'static str, value: i64) -> Result<u32, InputError> {
    u32::try_from(value)
        .ok()
        .filter(|&v| v >= 1)
        .ok_or(InputError::OutOfRange { name, value })
}

fn fibers(parts: &[FiberPart]) -> Vec<FiberJson> {
    parts.iter().map(FiberJson::from).collect()
}

fn non_ml1_reason(d: u32, m: u32) -> String {
    match (d, m) {
        (1, 1) => "d = m = 1: D- is integral and the surface is the affine plane; not ML1".into(),
        (_, 1) => "m = 1: {D-} is supported on one point; y gives a second independent affine ruling that descends to X, so X is not ML1".into(),
        _ => format!(
            "d = 1: {{D-}} is supported on one point; X = {{z = x^{m} y + 1}} is the affine plane, so X is not ML1"
        ),
    }
}

/// Runs the full chain of checks for the triple `(d, e, m)`.
pub fn verify(
    d: i64,
    e: i64,
    m: i64,
    opts: &VerifyOptions,
) -> Result<VerificationReport, InputError> {
    let d = positive("d", d)?;
    let e = positive("e", e)?;
    let m = positive("m", m)?;
    let g = num_integer::gcd(e, d);
    if g != 1 {
        return Err(InputError::NotCoprime {
            e: e.into(),
            d: d.into(),
            g: g.into(),
        });
    }
    let t = SurfaceTriple::new(d, e, m).expect("validated");
    let mut failed = Vec::new();
    let mut check = |ok: bool, name: &str| {
        if !ok {
            failed.push(name.to_string());
        }
    };

    let pair = lemma1_divisors(d.into(), t.e_prime.into(), m.into()).expect("validated");
    let ml1 = ml1_test(&pair).expect("D+ is supported on one point");
    let picard = negative_locus(&pair);

    let theorem_q = UniPoly::from_i64(&[-1, 1]).pow(t.m_prime);
    let dp = divisor_to_poly(pair.d_minus(), t.k.into()).expect("k is a multiple of denom(D-)");
    let dp_ok = dp.q == theorem_q && dp.l == t.l.into();

    let theorem_p = s_power_minus_one(d).pow(t.m_prime);
    let (bkp, built) = match i64::try_from(&dp.l)
        .ok()
        .and_then(|l| build_bkp(t.k, d, t.e_prime.into(), l, &dp.q).ok())
    {
        Some(b) => (b, true),
        None => (
            HypersurfaceRing::new(t.k, theorem_p.clone(), SecondVar::V).expect("nonzero P"),
            false,
        ),
    };
    let exponent_check = built && t.s_exponent() == 0 && bkp.p() == &theorem_p;
    let b_smooth = smooth_check(&bkp);
    let b_fiber = fiber_analysis(&bkp, &rat_int(0));

    let normalization = normalize_theorem_case(&bkp, m, t.m_prime, d).ok();
    let a_ring = t.normalized_ring();
    let a_smooth = smooth_check(&a_ring);
    let a_fiber = fiber_analysis(&a_ring, &rat_int(0));
    let integrality = normalization
        .as_ref()
        .is_some_and(|n| n.integrality_witness && n.ring == a_ring);

    let action = t.theorem_action();
    let freeness = freeness_check(&action, &a_ring)
        .map(|f| f.free)
        .unwrap_or(false);
    let perm = component_permutation(d, e.into()).expect("d >= 1");
    let subgroup = same_subgroup(&t.lemma_action(), &action).unwrap_or(false);

    let basis = hilbert_basis(&action);
    let rank_one = weight_piece_counterexample(&t, opts.max_exponent).is_none();

    let w = opts.max_weight as i64;
    let mut mismatches = Vec::new();
    let mut pairs_checked = 0;
    if w > 0 {
        for n in -w..=w {
            for np in -w..=w {
                pairs_checked += 1;
                match product_structure_check(&t, n, np) {
                    Ok(r) if r.matches => {}
                    Ok(r) => mismatches.push(MismatchJson {
                        n,
                        n_prime: np,
                        detail: format!("measured {:?}, predicted {:?}", r.measured, r.predicted),
                    }),
                    Err(err) => mismatches.push(MismatchJson {
                        n,
                        n_prime: np,
                        detail: err.to_string(),
                    }),
                }
            }
        }
    }
    let product_structure = ProductStructureJson {
        max_weight: opts.max_weight,
        checked: w > 0,
        pairs_checked,
        all_match: mismatches.is_empty(),
        mismatches,
        note: (w == 0).then(|| "not checked".to_string()),
    };

    let lnd_bound = m + 2 * d;
    let lnd = match find_valid_lnd_degrees(&t, lnd_bound) {
        Ok(s) => LndJson {
            bound: lnd_bound,
            degrees_found: s.degree_list(),
            nilpotency_certified: !s.degrees.is_empty() && s.all_certified(),
            max_nilpotency_index: s.degrees.iter().map(|d| d.max_index).max().unwrap_or(0),
        },
        Err(_) => LndJson {
            bound: lnd_bound,
            degrees_found: Vec::new(),
            nilpotency_certified: false,
            max_nilpotency_index: 0,
        },
    };

    let one_fiber = |components: u32, multiplicity: u32| {
        vec![FiberPart {
            components: components as usize,
            multiplicity,
        }]
    };
    check(exponent_check, "exponent_check");
    check(dp_ok, "divisor_poly");
    check(ml1 == (d >= 2 && m >= 2), "ml1");
    check(picard.torsion_compatible && picard.l == 1, "picard");
    check(
        b_smooth.smooth == (t.m_prime == 1),
        "pre_normalization_smooth",
    );
    check(
        b_fiber == one_fiber(d, t.m_prime),
        "pre_normalization_fiber",
    );
    check(integrality && a_smooth.smooth, "normalization");
    check(a_fiber == one_fiber(d, 1), "normalized_fiber");
    check(freeness, "freeness");
    check(
        perm.transitive && perm.cycles.len() == 1,
        "component_transitivity",
    );
    check(subgroup, "action_subgroup_match");
    check(rank_one, "weight_pieces_rank_one");
    check(product_structure.all_match, "product_structure");
    check(lnd.nilpotency_certified, "lnd");

    let verdict = if !failed.is_empty() {
        Verdict::Inconsistent { failed }
    } else if !ml1 {
        Verdict::Excluded {
            reason: non_ml1_reason(d, m),
        }
    } else {
        Verdict::Consistent
    };

    Ok(VerificationReport {
        format_version: FORMAT_VERSION,
        input: TripleInput { d, e, m },
        derived: Derived {
            e_prime: t.e_prime,
            k: t.k,
            m_prime: t.m_prime,
            d_prime: t.d_prime,
            l: t.l,
        },
        exponent_check,
        dpd: PairJson::from(&pair),
        divisor_poly: DivisorPolyJson {
            l: dp.l.to_string(),
            q: dp.q.to_multi("t").to_string(),
            matches_theorem: dp_ok,
        },
        ml1,
        picard: PicardJson::from(&picard),
        pre_normalization: PreNormalizationJson {
            ring: RingJson::from(&bkp),
            smooth: b_smooth.smooth,
            singular_factors: b_smooth
                .singular_factors
                .iter()
                .map(|(f, k)| FactorJson {
                    factor: f.to_multi("s").to_string(),
                    multiplicity: *k,
                })
                .collect(),
            fiber_at_zero: fibers(&b_fiber),
        },
        normalized: NormalizedJson {
            ring: RingJson::from(&a_ring),
            smooth: a_smooth.smooth,
            integrality_witness: integrality,
            fiber_at_zero: fibers(&a_fiber),
        },
        action: ActionJson::from(&action),
        freeness,
        component_cycles: perm.cycles,
        transitive: perm.transitive,
        action_subgroup_match: subgroup,
        invariant_monoid: MonoidJson {
            hilbert_basis: basis,
            max_exponent: opts.max_exponent,
            weight_pieces_rank_one: rank_one,
        },
        product_structure,
        lnd,
        verdict,
    })
}

/// Classifies a raw DPD pair given as divisor strings.
pub fn classify(
    d_plus: &str,
    d_minus: &str,
    lnd_degree: Option<i64>,
) -> Result<ClassifyReport, InputError> {
    let dp: QDivisor = d_plus.parse()?;
    let dm: QDivisor = d_minus.parse()?;
    let pair = DpdPair::new(dp, dm)?;
    let class = classify_presentation(&PresentationDescriptor::Hyperbolic {
        pair: pair.clone(),
        lnd_degree,
    })
    .expect("hyperbolic descriptors are always well formed");
    let oriented = class.oriented_pair.clone().unwrap_or_else(|| pair.clone());
    let ml1 = ml1_test(&oriented).ok();
    let picard = negative_locus(&oriented);
    let canonical = canonical_pair(&oriented);
    let recovered =
        recover_lemma1_parameters(&oriented).map(|(d, e_prime, m)| RecoveredJson { d, e_prime, m });

    let verdict = if class.exclusion.is_some() {
        Verdict::Excluded {
            reason: class.reason.clone(),
        }
    } else {
        match ml1 {
            Some(true) => Verdict::Consistent,
            Some(false) => Verdict::Excluded {
                reason: "not ML1: {D-} is supported on fewer than two points".into(),
            },
            None => Verdict::Excluded {
                reason: "outside classified regime: {D+} is supported on more than one point"
                    .into(),
            },
        }
    };

    Ok(ClassifyReport {
        format_version: FORMAT_VERSION,
        input: PairJson::from(&pair),
        lnd_degree,
        action_class: class.kind.as_str().to_string(),
        admissible: class.admissible(),
        exclusion: class.exclusion.as_ref().map(|e| e.tag().to_string()),
        reason: class.reason,
        oriented: PairJson::from(&oriented),
        swapped: class.swapped,
        ml1,
        picard: PicardJson::from(&picard),
        canonical_pair: PairJson::from(&canonical),
        recovered,
        verdict,
    })
}

/// All admissible triples with `d <= d_max`, `1 <= e <= d` coprime to `d`,
/// `m <= m_max`, ordered by `(d, e, m)`.
pub fn sweep_triples(d_max: u32, m_max: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for d in 1..=d_max {
        for e in (1..=d).filter(|&e| num_integer::gcd(e, d) == 1) {
            for m in 1..=m_max {
                out.push((d, e, m));
            }
        }
    }
    out
}

/// Runs [`verify`] over the grid. Triples are split across threads; rows are
/// merged back in `(d, e, m)` order.
pub fn sweep(d_max: i64, m_max: i64, max_weight: u32) -> Result<SweepReport, InputError> {
    let d_max = positive("d_max", d_max)?;
    let m_max = positive("m_max", m_max)?;
    let opts = VerifyOptions {
        max_weight,
        ..VerifyOptions::default()
    };
    let triples = sweep_triples(d_max, m_max);
    let workers = thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(triples.len().max(1));
    let chunk = triples.len().div_ceil(workers).max(1);
    let rows: Vec<SweepRow> = thread::scope(|scope| {
        let handles: Vec<_> = triples
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    part.iter()
                        .map(|&(d, e, m)| {
                            let verdict = verify(d.into(), e.into(), m.into(), &opts)
                                .expect("grid triples are valid input")
                                .verdict;
                            SweepRow { d, e, m, verdict }
                        })
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    let count = |label: &str| rows.iter().filter(|r| r.verdict.label() == label).count();
    Ok(SweepReport {
        format_version: FORMAT_VERSION,
        d_max,
        m_max,
        max_weight,
        total: rows.len(),
        consistent: count("consistent"),
        excluded: count("excluded"),
        inconsistent: count("inconsistent"),
        rows,
    })
}
