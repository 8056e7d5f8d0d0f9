//! Plain-text rendering of reports.

use std::fmt::Write;

use crate::report::{ClassifyReport, SweepReport, Verdict, VerificationReport};

fn verdict_line(v: &Verdict) -> String {
    match v {
        Verdict::Consistent => "consistent".into(),
        Verdict::Inconsistent { failed } => format!("inconsistent ({})", failed.join(", ")),
        Verdict::Excluded { reason } => format!("excluded: {reason}"),
    }
}

fn fibers(parts: &[crate::report::FiberJson]) -> String {
    parts
        .iter()
        .map(|f| format!("{} x mult {}", f.components, f.multiplicity))
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn verification(r: &VerificationReport) -> String {
    let mut s = String::new();
    let i = &r.input;
    let dv = &r.derived;
    let _ = writeln!(s, "triple (d, e, m) = ({}, {}, {})", i.d, i.e, i.m);
    let _ = writeln!(
        s,
        "derived: e' = {}, k = {}, m' = {}, d' = {}, l = {}",
        dv.e_prime, dv.k, dv.m_prime, dv.d_prime, dv.l
    );
    let _ = writeln!(s, "D+ = {}", r.dpd.d_plus);
    let _ = writeln!(s, "D- = {}", r.dpd.d_minus);
    let _ = writeln!(
        s,
        "-k D- = div(t^l Q): l = {}, Q = {} (theorem shape: {})",
        r.divisor_poly.l, r.divisor_poly.q, r.divisor_poly.matches_theorem
    );
    let _ = writeln!(s, "exponent check k e' + d l = 0: {}", r.exponent_check);
    let _ = writeln!(s, "ML1: {}", r.ml1);
    let _ = writeln!(
        s,
        "Picard: l = {}, rank bound {}, torsion compatible: {}",
        r.picard.l, r.picard.bound, r.picard.torsion_compatible
    );
    let _ = writeln!(
        s,
        "B: u^{}*v - ({}), smooth: {}, fiber u=0: {}",
        r.pre_normalization.ring.k,
        r.pre_normalization.ring.p,
        r.pre_normalization.smooth,
        fibers(&r.pre_normalization.fiber_at_zero)
    );
    let _ = writeln!(
        s,
        "A': u^{}*w - ({}), smooth: {}, w^m' = v: {}, fiber u=0: {}",
        r.normalized.ring.k,
        r.normalized.ring.p,
        r.normalized.smooth,
        r.normalized.integrality_witness,
        fibers(&r.normalized.fiber_at_zero)
    );
    let w = &r.action.weights;
    let _ = writeln!(
        s,
        "Z_{} action (u, w, s) -> ({}, {}, {}), free: {}",
        r.action.d, w.u, w.w, w.s, r.freeness
    );
    let _ = writeln!(
        s,
        "fiber components: cycles {:?}, transitive: {}",
        r.component_cycles, r.transitive
    );
    let _ = writeln!(
        s,
        "lemma action matches theorem action: {}",
        r.action_subgroup_match
    );
    let _ = writeln!(
        s,
        "invariant monoid: {} generators, weight pieces rank one (exponents <= {}): {}",
        r.invariant_monoid.hilbert_basis.len(),
        r.invariant_monoid.max_exponent,
        r.invariant_monoid.weight_pieces_rank_one
    );
    let ps = &r.product_structure;
    if ps.checked {
        let _ = writeln!(
            s,
            "product structure |n|, |n'| <= {}: {} pairs, all match: {}",
            ps.max_weight, ps.pairs_checked, ps.all_match
        );
    } else {
        let _ = writeln!(s, "product structure: not checked");
    }
    let _ = writeln!(
        s,
        "LND degrees <= {}: {:?}, nilpotency certified: {}",
        r.lnd.bound, r.lnd.degrees_found, r.lnd.nilpotency_certified
    );
    let _ = writeln!(s, "verdict: {}", verdict_line(&r.verdict));
    s
}

pub fn classification(r: &ClassifyReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "D+ = {}", r.input.d_plus);
    let _ = writeln!(s, "D- = {}", r.input.d_minus);
    let _ = writeln!(s, "action: {} ({})", r.action_class, r.reason);
    if r.swapped {
        let _ = writeln!(s, "oriented by swapping D+ and D-");
    }
    match r.ml1 {
        Some(b) => {
            let _ = writeln!(s, "ML1: {b}");
        }
        None => {
            let _ = writeln!(s, "ML1: outside classified regime");
        }
    }
    let _ = writeln!(
        s,
        "Picard: l = {}, rank bound {}, torsion compatible: {}",
        r.picard.l, r.picard.bound, r.picard.torsion_compatible
    );
    let _ = writeln!(
        s,
        "canonical pair: D+ = {}, D- = {}",
        r.canonical_pair.d_plus, r.canonical_pair.d_minus
    );
    if let Some(p) = &r.recovered {
        let _ = writeln!(
            s,
            "recovered (d, e', m) = ({}, {}, {})",
            p.d, p.e_prime, p.m
        );
    }
    let _ = writeln!(s, "verdict: {}", verdict_line(&r.verdict));
    s
}

pub fn sweep(r: &SweepReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{:>3} {:>3} {:>3}  verdict", "d", "e", "m");
    for row in &r.rows {
        let _ = writeln!(
            s,
            "{:>3} {:>3} {:>3}  {}",
            row.d,
            row.e,
            row.m,
            verdict_line(&row.verdict)
        );
    }
    let _ = writeln!(
        s,
        "total {}: {} consistent, {} excluded, {} inconsistent",
        r.total, r.consistent, r.excluded, r.inconsistent
    );
    s
}
