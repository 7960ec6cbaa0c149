use proptest::prelude::*;
use qschur::diagram::skew_shapes_of;
use qschur::omega::{ribbon_q, skew_q, straighten, straighten_choosing};
use qschur::oracle::{amenable_q_poly, e_poly, h_poly, ssyt_poly, x1_coeff};
use qschur::{compositions_of, Composition, OmegaElem, SkewShape};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[test]
fn straightening_is_confluent() {
    let mut rng = StdRng::seed_from_u64(2024);
    for _ in 0..120 {
        let len = rng.gen_range(1..=10);
        let parts: Vec<u32> = (0..len).map(|_| rng.gen_range(1..=3)).collect();
        let mut pick = |choices: &[u32]| rng.gen_range(0..choices.len());
        // two independent random orders and the memoized leftmost order
        let a = straighten_choosing(&parts, &mut pick);
        let b = straighten_choosing(&parts, &mut pick);
        assert_eq!(a, b, "{parts:?}");
        assert_eq!(a, straighten(&parts), "{parts:?}");
    }
}

#[test]
fn expansions_are_integral() {
    for n in 1..=9 {
        for alpha in compositions_of(n) {
            assert!(ribbon_q(&alpha).is_integral());
            assert_eq!(ribbon_q(&alpha).degree(), Some(n));
        }
    }
    for d in (1..=6).flat_map(skew_shapes_of) {
        assert!(skew_q(&d).is_integral(), "{d}");
    }
}

#[test]
fn determinant_matches_ribbon_expansion() {
    for n in 1..=8 {
        for alpha in compositions_of(n) {
            assert_eq!(skew_q(&SkewShape::ribbon(&alpha)), ribbon_q(&alpha), "{alpha}");
        }
    }
}

#[test]
fn concurrent_callers_agree() {
    let all: Vec<Composition> = compositions_of(10);
    let reference: Vec<String> = all.iter().map(|a| ribbon_q(a).canonical_key()).collect();
    let handles: Vec<_> = (0..4)
        .map(|t| {
            let mut order = all.clone();
            order.rotate_left(t * 100);
            std::thread::spawn(move || {
                order
                    .iter()
                    .map(|a| (a.clone(), straighten(a.parts()).canonical_key(), ribbon_q(a).canonical_key()))
                    .collect::<Vec<_>>()
            })
        })
        .collect();
    for h in handles {
        for (a, s, r) in h.join().unwrap() {
            assert_eq!(s, straighten(a.parts()).canonical_key());
            let i = all.iter().position(|x| *x == a).unwrap();
            assert_eq!(r, reference[i]);
        }
    }
}

#[test]
fn euler_forms_in_both_parities() {
    for n in 1..=16 {
        assert!(qschur::omega::euler_form(n).is_zero(), "degree {n}");
    }
}

#[test]
fn ring_axioms_on_small_elements() {
    let elems: Vec<OmegaElem> = ["2,1", "1,2", "3", "1,1,1", "2,2"]
        .iter()
        .map(|s| ribbon_q(&s.parse().unwrap()))
        .collect();
    for a in &elems {
        for b in &elems {
            assert_eq!(a.mul(b), b.mul(a));
            for c in &elems {
                assert_eq!(a.mul(&b.mul(c)), a.mul(b).mul(c));
                assert_eq!(a.mul(&(b + c)), &a.mul(b) + &a.mul(c));
            }
        }
    }
}

#[test]
fn tableau_polynomials_are_symmetric_with_expected_degree() {
    for d in (1..=5).flat_map(skew_shapes_of) {
        for k in 1..=4 {
            let q = amenable_q_poly(&d.cells(), k);
            assert!(q.is_symmetric_in(k), "{d} k={k}");
            assert_eq!(q.total_degree(), (!q.is_zero()).then_some(d.size()));
            let s = ssyt_poly(&d, k);
            assert!(s.is_symmetric_in(k), "{d} k={k}");
        }
        let q1 = amenable_q_poly(&d.cells(), 1);
        assert_eq!(u64::try_from(q1.coeff(&[d.size()])).unwrap(), x1_coeff(&d.cells()));
    }
    for n in 0..=4 {
        for k in 1..=4 {
            assert!(h_poly(n, k).is_symmetric_in(k));
            assert!(e_poly(n, k).is_symmetric_in(k));
        }
    }
}

#[test]
fn connected_ribbons_have_even_coefficients() {
    for n in 1..=6 {
        for alpha in compositions_of(n) {
            let p = amenable_q_poly(&SkewShape::ribbon(&alpha).cells(), 3);
            for (_, c) in p.terms() {
                assert!((c % 2u32) == 0u32.into(), "{alpha}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ribbon_multiplication_rule(a in prop::collection::vec(1u32..=3, 1..=3), b in prop::collection::vec(1u32..=3, 1..=3)) {
        let a = Composition::new(a).unwrap();
        let b = Composition::new(b).unwrap();
        prop_assert!(qschur::omega::ribbon_mult_check(&a, &b));
    }

    #[test]
    fn products_stay_in_strict_basis(parts in prop::collection::vec(0u32..=6, 0..=6)) {
        let e = straighten(&parts);
        let deg: u32 = parts.iter().sum();
        prop_assert!(e.terms().all(|(lambda, _)| lambda.size() == deg));
        prop_assert!(e.is_integral());
    }
}
