use std::collections::BTreeSet;

use qschur::diagram::ribbon;
use qschur::omega::ribbon_q;
use qschur::oracle::ribbon_q_poly;
use qschur::{compositions_of, Composition};
use qschur_lab::report::render;
use qschur_lab::{build_report, classes, closure_classes, conjecture_check, Format};

fn c(s: &str) -> Composition {
    s.parse().unwrap()
}

#[test]
fn every_move_is_sound() {
    for n in 1..=9 {
        let closure = closure_classes(n);
        for t in &closure.traces {
            assert_eq!(t.replay().as_ref(), Some(&t.target), "{t}");
            assert_eq!(ribbon_q(&t.source), ribbon_q(&t.target), "{t}");
        }
    }
}

#[test]
fn classes_are_closed_under_transpose_and_rotation() {
    for n in 1..=10 {
        let cls = classes(n);
        let total: usize = cls.iter().map(|c| c.members.len()).sum();
        assert_eq!(total, 1 << (n - 1));
        for class in &cls {
            let members: BTreeSet<&Composition> = class.members.iter().collect();
            for m in &class.members {
                assert!(members.contains(&ribbon::transpose(m)));
                assert!(members.contains(&ribbon::rotate(m)));
                assert_eq!(ribbon_q(m).canonical_key(), class.expansion.canonical_key());
            }
        }
    }
}

#[test]
fn closure_refines_equality() {
    for n in 1..=10 {
        let cls = classes(n);
        for component in closure_classes(n).components {
            let key = ribbon_q(&component[0]).canonical_key();
            assert!(component.iter().all(|m| ribbon_q(m).canonical_key() == key));
            assert!(cls.iter().any(|cl| component.iter().all(|m| cl.members.contains(m))));
        }
    }
}

#[test]
fn reports_do_not_depend_on_worker_count() {
    let render_with = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| {
            let r = build_report(9);
            (render(&r, Format::Json).unwrap(), render(&r, Format::Csv).unwrap())
        })
    };
    let one = render_with(1);
    assert_eq!(one, render_with(3));
    assert_eq!(one, render_with(8));
}

#[test]
fn named_examples() {
    // 3•31 and 111•31 share a ribbon function
    assert_eq!(ribbon_q(&c("3,3,1,4,1")), ribbon_q(&c("3,1,2,1,1,3,1")));
    // 2•2•2 and 2•2•11
    assert_eq!(ribbon_q(&c("3,3,1,1")), ribbon_q(&c("1,4,1,2")));
    let (_, closure, _) = conjecture_check(8);
    let home = closure.components.iter().find(|g| g.contains(&c("3,3,1,1"))).unwrap();
    assert!(home.contains(&c("1,4,1,2")));
    assert!(!closure.path_to(&c("1,4,1,2")).is_empty() || home.last() == Some(&c("1,4,1,2")));
}

#[test]
fn size_twelve_pair_outside_the_moves() {
    let (_, _, verdict) = conjecture_check(12);
    assert!(verdict.is_sound());
    assert_eq!(verdict.equal_not_connected, vec![(c("1,1,2,3,1,1,1,2"), c("1,1,5,2,1,2"))]);
    let (a, b) = &verdict.equal_not_connected[0];
    // strict partitions of 12 have at most 4 parts, so 4 variables decide
    assert_eq!(ribbon_q_poly(a, 4), ribbon_q_poly(b, 4));
    for x in [a, b] {
        assert!(ribbon::bullet_factorizations(x).is_empty());
        assert!(ribbon::circ_factorizations(x).is_empty());
    }
    assert!(compositions_of(12).contains(a));
}
