use num_integer::gcd;
use pseudoplane_core::algebra::rat_int;
use pseudoplane_core::cyclic::{
    find_valid_lnd_degrees, freeness_check, hilbert_basis, product_structure_check, same_subgroup,
    weight_piece_generator, CyclicAction, SurfaceTriple,
};
use pseudoplane_core::dpd::{graded_piece, lemma1_divisors};
use pseudoplane_core::hypersurface::{
    derivation_apply, s_power_minus_one, Derivative, HypersurfaceRing, SecondVar,
};

fn grid() -> impl Iterator<Item = SurfaceTriple> {
    (1..=6u32).flat_map(|d| {
        (1..=d)
            .filter(move |e| gcd(*e, d) == 1)
            .flat_map(move |e| (1..=5u32).map(move |m| SurfaceTriple::new(d, e, m).unwrap()))
    })
}

const BOX: usize = 10;

/// `reach[a][b][c]`: the vector is a sum of elements of `basis`.
fn reachable(basis: &[[u32; 3]]) -> Vec<bool> {
    let idx = |a: usize, b: usize, c: usize| (a * (BOX + 1) + b) * (BOX + 1) + c;
    let mut reach = vec![false; (BOX + 1).pow(3)];
    reach[0] = true;
    for a in 0..=BOX {
        for b in 0..=BOX {
            for c in 0..=BOX {
                if reach[idx(a, b, c)] {
                    continue;
                }
                reach[idx(a, b, c)] = basis.iter().any(|g| {
                    let [x, y, z] = g.map(|v| v as usize);
                    x <= a
                        && y <= b
                        && z <= c
                        && (x, y, z) != (0, 0, 0)
                        && reach[idx(a - x, b - y, c - z)]
                });
            }
        }
    }
    reach
}

fn check_hilbert_basis(action: &CyclicAction) {
    let basis = hilbert_basis(action);
    let reach = reachable(&basis);
    let mut i = 0;
    for a in 0..=BOX as u32 {
        for b in 0..=BOX as u32 {
            for c in 0..=BOX as u32 {
                assert_eq!(
                    reach[i],
                    action.is_invariant(&[a, b, c]),
                    "{action:?} at ({a},{b},{c})"
                );
                i += 1;
            }
        }
    }
    for (j, g) in basis.iter().enumerate() {
        let others: Vec<[u32; 3]> = basis
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != j)
            .map(|(_, g)| *g)
            .collect();
        let reach = reachable(&others);
        let [a, b, c] = g.map(|v| v as usize);
        assert!(
            !reach[(a * (BOX + 1) + b) * (BOX + 1) + c],
            "{g:?} is decomposable"
        );
    }
}

#[test]
fn hilbert_basis_against_exhaustive_decomposition() {
    for d in 1..=6u32 {
        for wu in 0..d as i64 {
            for ww in 0..d as i64 {
                for ws in [0, 1, d as i64 - 1] {
                    let a = CyclicAction::new(d, &[("u", wu), ("w", ww), ("s", ws)]).unwrap();
                    check_hilbert_basis(&a);
                }
            }
        }
    }
    for t in grid() {
        check_hilbert_basis(&t.theorem_action());
    }
}

#[test]
fn freeness_law() {
    for d in 1..=6u32 {
        for e in 1..=6i64 {
            for m in 1..=5u32 {
                let action =
                    CyclicAction::new(d, &[("u", 1), ("w", -(m as i64)), ("s", e)]).unwrap();
                let ring = HypersurfaceRing::new(m, s_power_minus_one(d), SecondVar::W).unwrap();
                let f = freeness_check(&action, &ring).unwrap();
                let coprime = gcd(e, d as i64) == 1;
                assert_eq!(f.free, coprime, "(d,e,m) = ({d},{e},{m})");
                if !coprime {
                    let b = d / gcd(e, d as i64) as u32;
                    assert!(f
                        .fixed_loci
                        .iter()
                        .any(|l| l.power == b && l.nonzero == [false, false, true]));
                }
            }
        }
    }
}

#[test]
fn generator_congruence_and_ceiling_identity() {
    for t in grid() {
        let pair = lemma1_divisors(t.d as u64, t.e_prime as i64, t.m as u64).unwrap();
        let d = t.d as i64;
        let ep = t.e_prime as i64;
        for n in -8i64..=8 {
            let [a, b, c] = weight_piece_generator(&t, n);
            assert_eq!(a as i64 - t.m as i64 * b as i64, n);
            assert!(a < t.m || b == 0);
            assert_eq!(c as i64, (-ep * n).rem_euclid(d));
            // ceil(n e'/d) = (n e' + ((-n e') mod d)) / d
            let ceil = (n * ep + (-n * ep).rem_euclid(d)) / d;
            assert_eq!(
                ceil,
                (n * ep).div_euclid(d) + i64::from((n * ep).rem_euclid(d) != 0)
            );
            // exponent of A_n at 0 is ceil(n e'/d) on both sides of 0
            assert_eq!(
                graded_piece(&pair, n).exponent(&rat_int(0)),
                ceil.into(),
                "{t:?} n = {n}"
            );
        }
    }
}

#[test]
fn product_structure_over_grid() {
    for t in grid() {
        for n in -8..=8 {
            for np in -8..=8 {
                let r = product_structure_check(&t, n, np).unwrap();
                assert!(
                    r.matches,
                    "{t:?} ({n},{np}): measured {:?} predicted {:?}",
                    r.measured, r.predicted
                );
            }
        }
    }
}

#[test]
fn lemma_action_matches_theorem_action() {
    for t in grid() {
        assert!(
            same_subgroup(&t.lemma_action(), &t.theorem_action()).unwrap(),
            "{t:?}"
        );
    }
}

#[test]
fn lnd_equivariance() {
    for t in grid() {
        let ring = t.normalized_ring();
        let action = t.theorem_action();
        let search = find_valid_lnd_degrees(&t, t.m + 2 * t.d).unwrap();
        assert!(!search.degrees.is_empty());
        for deg in &search.degrees {
            assert_eq!(deg.degree % t.d, t.e % t.d);
            for [a, b, c] in hilbert_basis(&action) {
                let g = ring.monomial(a, b, c).unwrap();
                let Derivative::Polynomial(dg) = derivation_apply(&ring, deg.degree, &g).unwrap()
                else {
                    panic!("{t:?}: accepted degree {} leaves the ring", deg.degree);
                };
                for ex in dg.poly().terms().keys() {
                    assert!(action.is_invariant(ex));
                    assert_eq!(
                        ring.weight_of(ex),
                        ring.weight_of(&[a, b, c]) + deg.degree as i64
                    );
                }
            }
        }
    }
}
