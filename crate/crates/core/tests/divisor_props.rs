use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use pseudoplane_core::algebra::UniPoly;
use pseudoplane_core::dpd::{graded_piece, lemma1_divisors, product_defect};
use pseudoplane_core::qdivisor::{canonical_pair, divisor_to_poly, ml1_test, DpdPair, QDivisor};

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn points() -> Vec<BigRational> {
    vec![r(0, 1), r(1, 1), r(-1, 1), r(2, 1), r(1, 2), r(-3, 2)]
}

fn coefficient() -> impl Strategy<Value = BigRational> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| r(n, d))
}

fn divisor() -> impl Strategy<Value = QDivisor> {
    prop::collection::vec((0usize..6, coefficient()), 0..5).prop_map(|es| {
        QDivisor::from_entries(es.into_iter().map(|(i, c)| (points()[i].clone(), c)))
    })
}

/// `D- = -D+ - E` with `E >= 0`, so the pair is valid.
fn pair() -> impl Strategy<Value = DpdPair> {
    (
        divisor(),
        prop::collection::vec((0usize..6, 0i64..=8, 1i64..=6), 0..4),
    )
        .prop_map(|(dp, gap)| {
            let e = QDivisor::from_entries(
                gap.into_iter()
                    .map(|(i, n, d)| (points()[i].clone(), r(n, d))),
            );
            let dm = dp.neg().add(&e.neg());
            DpdPair::new(dp, dm).unwrap()
        })
}

proptest! {
    #[test]
    fn floor_fract_split(d in divisor()) {
        prop_assert_eq!(d.floor_div().add(&d.fract_div()), d.clone());
        prop_assert_eq!(d.fract_div().denom(), d.denom());
        for c in d.fract_div().entries().values() {
            prop_assert!(*c >= BigRational::zero() && *c < BigRational::one());
        }
        prop_assert!(d.floor_div().is_integral());
    }

    #[test]
    fn divisor_text_round_trip(d in divisor()) {
        prop_assert_eq!(d.to_string().parse::<QDivisor>().unwrap(), d);
    }

    #[test]
    fn canonical_pair_preserves_sum_and_ml1(p in pair()) {
        let c = canonical_pair(&p);
        prop_assert_eq!(c.sum(), p.sum());
        prop_assert_eq!(c.d_plus(), &p.d_plus().fract_div());
        prop_assert!(DpdPair::new(c.d_plus().clone(), c.d_minus().clone()).is_ok());
        prop_assert_eq!(ml1_test(&c), ml1_test(&p));
    }

    /// `A_n(pair) = h^n A_n(canonical)` with `div h = -floor(D+)`.
    #[test]
    fn graded_piece_shift_identity(p in pair()) {
        let c = canonical_pair(&p);
        let shift = p.d_plus().floor_div();
        for n in -12i64..=12 {
            let lhs = graded_piece(&p, n);
            let rhs = graded_piece(&c, n);
            for pt in points() {
                let expected = rhs.exponent(&pt) - (shift.coeff(&pt) * BigRational::from_integer(n.into())).to_integer();
                prop_assert_eq!(lhs.exponent(&pt), expected, "n = {}, point {}", n, pt);
            }
        }
    }

    #[test]
    fn product_defect_nonnegative(p in pair()) {
        for n in -12i64..=12 {
            for m in -12i64..=12 {
                for v in product_defect(&p, n, m).values() {
                    prop_assert!(*v >= BigInt::zero(), "n = {}, n' = {}", n, m);
                }
            }
        }
    }

    /// Reads the divisor back from `t^l Q` by the order of vanishing at each
    /// candidate point; the orders must account for all of `deg Q`.
    #[test]
    fn divisor_to_poly_round_trip(
        entries in prop::collection::vec((1usize..6, -4i64..=0, 1i64..=3), 0..4),
        at_zero in (-6i64..=6, 1i64..=3),
    ) {
        let mut dm = QDivisor::from_entries(entries.into_iter().map(|(i, n, d)| (points()[i].clone(), r(n, d))));
        dm = dm.add(&QDivisor::point(r(0, 1), r(at_zero.0, at_zero.1)));
        let k: u64 = dm.denom().try_into().unwrap();
        let out = divisor_to_poly(&dm, k).unwrap();
        prop_assert!(out.q.is_monic());
        prop_assert!(!out.q.coeff(0).is_zero());

        let mut rebuilt = QDivisor::point(r(0, 1), BigRational::from_integer(out.l.clone()));
        let mut total = 0usize;
        for pt in points().into_iter().filter(|p| !p.is_zero()) {
            let lin = UniPoly::from_coeffs(vec![-pt.clone(), BigRational::one()]);
            let mut q = out.q.clone();
            let mut order = 0i64;
            while let Some(next) = q.exact_div(&lin) {
                q = next;
                order += 1;
            }
            total += order as usize;
            rebuilt = rebuilt.add(&QDivisor::point(pt, r(order, 1)));
        }
        prop_assert_eq!(total, out.q.degree().unwrap());
        let k_rat = BigRational::from_integer(BigInt::from(k));
        prop_assert_eq!(rebuilt.scale(&-k_rat.recip()), dm);
    }
}

#[test]
fn ml1_grid_for_lemma1_pairs() {
    for d in 1..=6u64 {
        for e in 1..=d as i64 {
            if num_integer::gcd(e, d as i64) != 1 {
                continue;
            }
            for m in 1..=5u64 {
                let p = lemma1_divisors(d, e, m).unwrap();
                assert_eq!(ml1_test(&p).unwrap(), d >= 2 && m >= 2, "({d},{e},{m})");
            }
        }
    }
}
