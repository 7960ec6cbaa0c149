use std::collections::BTreeSet;

use proptest::prelude::*;
use qschur::composition::{partitions_of, Dominance};
use qschur::diagram::{compose, compose_transpose, ribbon, skew_shapes_of};
use qschur::{compositions_of, Composition, Partition, SkewShape};

fn composition(max_parts: usize, max_part: u32) -> impl Strategy<Value = Composition> {
    prop::collection::vec(1..=max_part, 1..=max_parts).prop_map(|v| Composition::new(v).unwrap())
}

/// A ribbon with at most `max_cells` cells.
fn small_ribbon(max_cells: u32) -> impl Strategy<Value = Composition> {
    (1..=max_cells)
        .prop_flat_map(|n| {
            let all = compositions_of(n);
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
}

fn any_shape(max_cells: u32) -> impl Strategy<Value = SkewShape> {
    let all: Vec<SkewShape> = (1..=max_cells).flat_map(skew_shapes_of).collect();
    (0..all.len()).prop_map(move |i| all[i].clone())
}

#[test]
fn coarsening_predicate_matches_generator() {
    for n in 1..=8 {
        let all = compositions_of(n);
        for alpha in &all {
            let generated: BTreeSet<Composition> = alpha.coarsenings().into_iter().collect();
            assert_eq!(generated.len(), 1 << (alpha.len() - 1));
            assert!(generated.contains(alpha));
            assert!(generated.contains(&Composition::row(n)));
            for x in &all {
                assert_eq!(x.is_coarsening_of(alpha), generated.contains(x), "{x} vs {alpha}");
            }
        }
    }
}

#[test]
fn dominance_is_a_partial_order() {
    for n in 1..=8 {
        let ps = partitions_of(n);
        let ge = |a: &Partition, b: &Partition| {
            matches!(a.dominance_compare(b).unwrap(), Dominance::Greater | Dominance::Equal)
        };
        for a in &ps {
            assert_eq!(a.dominance_compare(a).unwrap(), Dominance::Equal);
            for b in &ps {
                if ge(a, b) && ge(b, a) {
                    assert_eq!(a, b);
                }
                let flipped = match a.dominance_compare(b).unwrap() {
                    Dominance::Greater => Dominance::Less,
                    Dominance::Less => Dominance::Greater,
                    other => other,
                };
                assert_eq!(b.dominance_compare(a).unwrap(), flipped);
                for c in &ps {
                    if ge(a, b) && ge(b, c) {
                        assert!(ge(a, c), "{a} {b} {c}");
                    }
                }
            }
        }
    }
}

#[test]
fn enumeration_order_is_reproducible() {
    assert_eq!(compositions_of(4), compositions_of(4));
    for n in 1..=10 {
        let all = compositions_of(n);
        assert_eq!(all.len(), 1 << (n - 1));
        let distinct: BTreeSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), all.len());
    }
}

#[test]
fn ribbons_closed_under_bullet() {
    for a in (1..=4).flat_map(compositions_of) {
        for d in (1..=4).flat_map(compositions_of) {
            let shape = compose_transpose(&a, &SkewShape::ribbon(&d));
            assert_eq!(shape.to_ribbon(), Some(ribbon::compose_transpose(&a, &d)), "{a} • {d}");
            let shape = compose(&a, &SkewShape::ribbon(&d));
            assert_eq!(shape.to_ribbon(), Some(ribbon::compose(&a, &d)), "{a} ∘ {d}");
        }
    }
}

proptest! {
    #[test]
    fn sort_is_idempotent_and_keeps_multiset(alpha in composition(8, 9)) {
        let p = alpha.sort_to_partition();
        prop_assert_eq!(p.to_composition().sort_to_partition(), p.clone());
        let mut a = alpha.parts().to_vec();
        let mut b = p.parts().to_vec();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn text_round_trip(alpha in composition(8, 30)) {
        let back: Composition = alpha.to_string().parse().unwrap();
        prop_assert_eq!(back, alpha);
    }

    #[test]
    fn bullet_is_associative(a in small_ribbon(4), b in small_ribbon(4), d in small_ribbon(4)) {
        let left = ribbon::compose_transpose(&a, &ribbon::compose_transpose(&b, &d));
        let right = ribbon::compose_transpose(&ribbon::compose_transpose(&a, &b), &d);
        prop_assert_eq!(left, right);
    }

    #[test]
    fn bullet_rotation_law(a in small_ribbon(5), d in small_ribbon(5)) {
        let lhs = ribbon::rotate(&ribbon::compose_transpose(&a, &d));
        let inner = if a.size() % 2 == 1 { ribbon::rotate(&d) } else { ribbon::rotate(&ribbon::transpose(&d)) };
        prop_assert_eq!(lhs, ribbon::compose_transpose(&ribbon::rotate(&a), &inner));
    }

    #[test]
    fn bullet_transpose_law(a in small_ribbon(5), d in small_ribbon(5)) {
        let lhs = ribbon::transpose(&ribbon::compose_transpose(&a, &d));
        let inner = if a.size() % 2 == 1 { ribbon::transpose(&d) } else { d.clone() };
        prop_assert_eq!(lhs, ribbon::compose_transpose(&ribbon::transpose(&a), &inner));
    }

    #[test]
    fn bullet_size_multiplies(a in small_ribbon(5), d in small_ribbon(5)) {
        let shape = compose_transpose(&a, &SkewShape::ribbon(&d));
        prop_assert_eq!(shape.size(), a.size() * d.size());
    }

    #[test]
    fn ribbon_shortcuts_agree_with_shapes(a in small_ribbon(8)) {
        let d = SkewShape::ribbon(&a);
        prop_assert_eq!(d.transpose().to_ribbon(), Some(ribbon::transpose(&a)));
        prop_assert_eq!(d.rotate180().to_ribbon(), Some(ribbon::rotate(&a)));
        prop_assert_eq!(d.to_ribbon(), Some(a));
    }

    #[test]
    fn involutions_commute(d in any_shape(7)) {
        prop_assert_eq!(d.transpose().transpose(), d.clone());
        prop_assert_eq!(d.rotate180().rotate180(), d.clone());
        prop_assert_eq!(d.transpose().rotate180(), d.rotate180().transpose());
        prop_assert_eq!(d.rotate180().srl(), d.srl());
        prop_assert_eq!(d.transpose().size(), d.size());
    }

    #[test]
    fn operations_produce_valid_shapes(d in any_shape(5), e in any_shape(5)) {
        for s in [d.concat(&e), d.near_concat(&e), d.disjoint_union(&e)] {
            prop_assert_eq!(s.size(), d.size() + e.size());
            let rebuilt = SkewShape::from_cells(&s.cells()).unwrap();
            prop_assert_eq!(&rebuilt, &s);
            let text: SkewShape = s.to_string().parse().unwrap();
            prop_assert_eq!(text, s);
        }
        prop_assert_eq!(d.disjoint_union(&e).components(), d.components() + e.components());
    }

    #[test]
    fn composition_results_are_valid(a in small_ribbon(3), d in any_shape(4)) {
        for s in [compose(&a, &d), compose_transpose(&a, &d)] {
            prop_assert_eq!(s.size(), a.size() * d.size());
            prop_assert_eq!(SkewShape::from_cells(&s.cells()).unwrap(), s);
        }
    }

    #[test]
    fn factorizations_reassemble(a in small_ribbon(4), d in small_ribbon(4)) {
        let g = ribbon::compose_transpose(&a, &d);
        for (x, y) in ribbon::bullet_factorizations(&g) {
            prop_assert_eq!(ribbon::compose_transpose(&x, &y), g.clone());
        }
        if a.size() > 1 && d.size() > 1 {
            prop_assert!(ribbon::bullet_factorizations(&g).iter().any(|(_, y)| y.size() == d.size()));
        }
        let h = ribbon::compose(&a, &d);
        for (x, y) in ribbon::circ_factorizations(&h) {
            prop_assert_eq!(ribbon::compose(&x, &y), h.clone());
        }
    }
}
