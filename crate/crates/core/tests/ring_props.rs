use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use pseudoplane_core::algebra::{MultiPoly, UniPoly};
use pseudoplane_core::hypersurface::{
    build_bkp, derivation_apply, normal_form, s_power_minus_one, smooth_check, Derivative,
    HypersurfaceRing, SecondVar,
};

fn coef() -> impl Strategy<Value = BigRational> {
    (-5i64..=5, 1i64..=3).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn poly(vars: [&'static str; 3]) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(((0u32..6, 0u32..3, 0u32..5), coef()), 0..4).prop_map(move |ts| {
        MultiPoly::from_terms(
            &vars,
            ts.into_iter().map(|((a, b, c), k)| (vec![a, b, c], k)),
        )
    })
}

/// Random monomials of a fixed C*-weight `n` (u: 1, second: -k).
fn homogeneous(k: u32, n: i64) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((0u32..4, 0u32..5, coef()), 0..4).prop_map(move |ts| {
        let terms = ts.into_iter().filter_map(|(b, c, x)| {
            let a = n + k as i64 * b as i64;
            (a >= 0).then(|| (vec![a as u32, b, c], x))
        });
        MultiPoly::from_terms(&["u", "w", "s"], terms)
    })
}

fn ring_params() -> impl Strategy<Value = (u32, u32)> {
    (1u32..=4, 1u32..=4)
}

fn is_normal(ring: &HypersurfaceRing, p: &MultiPoly) -> bool {
    p.terms().keys().all(|e| e[0] < ring.k() || e[1] == 0)
}

proptest! {
    #[test]
    fn normal_form_is_multiplicative((m, d) in ring_params(), x in poly(["u", "w", "s"]), y in poly(["u", "w", "s"])) {
        let ring = HypersurfaceRing::normalized(m, d).unwrap();
        let nx = normal_form(&ring, &x).unwrap();
        let ny = normal_form(&ring, &y).unwrap();
        prop_assert!(is_normal(&ring, nx.poly()));
        let direct = normal_form(&ring, &x.mul(&y).unwrap()).unwrap();
        prop_assert_eq!(ring.mul(&nx, &ny).unwrap(), direct);
    }

    #[test]
    fn normal_form_differs_by_ideal_member((m, d) in ring_params(), x in poly(["u", "w", "s"]), h in poly(["u", "w", "s"])) {
        let ring = HypersurfaceRing::normalized(m, d).unwrap();
        let shifted = x.add(&h.mul(&ring.relation()).unwrap()).unwrap();
        prop_assert_eq!(normal_form(&ring, &shifted).unwrap(), normal_form(&ring, &x).unwrap());
    }

    #[test]
    fn normal_form_preserves_weight(
        (k, p) in (1u32..=4).prop_flat_map(|k| (Just(k), homogeneous(k, 0))),
        d in 1u32..=4,
        power in 1u32..=3,
    ) {
        let ring = HypersurfaceRing::new(k, s_power_minus_one(d).pow(power), SecondVar::W).unwrap();
        let nf = normal_form(&ring, &p).unwrap();
        for e in nf.poly().terms().keys() {
            prop_assert_eq!(ring.weight_of(e), 0);
        }
    }

    #[test]
    fn leibniz_and_degree(
        (m, x, y) in (1u32..=4).prop_flat_map(|m| (Just(m), homogeneous(m, 1), homogeneous(m, -1))),
        d in 1u32..=4,
        e in 1u32..=6,
    ) {
        let ring = HypersurfaceRing::normalized(m, d).unwrap();
        let nx = normal_form(&ring, &x).unwrap();
        let ny = normal_form(&ring, &y).unwrap();
        let xy = ring.mul(&nx, &ny).unwrap();
        let dx = derivation_apply(&ring, e, &nx).unwrap();
        let dy = derivation_apply(&ring, e, &ny).unwrap();
        let dxy = derivation_apply(&ring, e, &xy).unwrap();
        if let (Derivative::Polynomial(dx), Derivative::Polynomial(dy), Derivative::Polynomial(dxy)) =
            (dx.clone(), dy, dxy)
        {
            let rhs = ring.mul(&dx, &ny).unwrap().poly().add(ring.mul(&nx, &dy).unwrap().poly()).unwrap();
            prop_assert_eq!(dxy.poly(), &normal_form(&ring, &rhs).unwrap().into_poly());
        }
        if let Derivative::Polynomial(dx) = dx {
            for ex in dx.poly().terms().keys() {
                prop_assert_eq!(ring.weight_of(ex), 1 + e as i64);
            }
        }
    }
}

#[test]
fn normalized_rings_are_smooth() {
    for d in 1..=8 {
        for m in 1..=8 {
            let ring = HypersurfaceRing::normalized(m, d).unwrap();
            assert!(smooth_check(&ring).smooth, "m = {m}, d = {d}");
        }
    }
}

#[test]
fn theorem_bkp_exponent_vanishes() {
    for d in 1..=6u32 {
        for m in 1..=5u32 {
            for e_prime in (1..=d).filter(|e| num_integer::gcd(*e, d) == 1) {
                let k = num_integer::lcm(d, m);
                let (m_prime, d_prime) = (k / m, k / d);
                let l = -(e_prime as i64) * d_prime as i64;
                let q = UniPoly::from_i64(&[-1, 1]).pow(m_prime);
                let ring = build_bkp(k, d, e_prime as i64, l, &q).unwrap();
                assert_eq!(ring.p(), &s_power_minus_one(d).pow(m_prime));
            }
        }
    }
}
