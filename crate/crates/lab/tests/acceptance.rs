//! The ten acceptance criteria, one PASS/FAIL line each. Runs without the
//! libtest harness so the lines are always shown.

use std::time::{Duration, Instant};

use qschur::diagram::{compose, compose_transpose, ribbon};
use qschur::omega::ribbon_q;
use qschur::oracle::poly_equal;
use qschur::{compositions_of, Composition, SkewShape};
use qschur_lab::suites::{self, CheckResult};
use qschur_lab::{build_report, classes, conjecture_check, inequality_witness, Witness};

fn c(s: &str) -> Composition {
    s.parse().unwrap()
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn from_checks(checks: &[CheckResult], budget: Option<Duration>, elapsed: Duration) -> Outcome {
    let failed: Vec<String> = checks.iter().filter(|r| !r.passed()).map(ToString::to_string).collect();
    let instances: usize = checks.iter().map(|r| r.checked).sum();
    let in_time = budget.is_none_or(|b| elapsed <= b);
    let mut detail = format!("{instances} instances");
    if !failed.is_empty() {
        detail = format!("{detail}; {}", failed.join("; "));
    }
    if !in_time {
        detail = format!("{detail}; over time budget {:?}", budget.unwrap());
    }
    Outcome { ok: failed.is_empty() && in_time, detail }
}

fn identities() -> Outcome {
    let t = Instant::now();
    let checks = [suites::euler_forms(16), suites::ribbon_multiplication(10), suites::relation_families(5)];
    from_checks(&checks, Some(Duration::from_secs(60)), t.elapsed())
}

fn conventions() -> Outcome {
    let shape = |s: &str| SkewShape::ribbon(&c(s));
    let two = shape("2");
    let two_two = compose_transpose(&c("2"), &two);
    let cases = [
        ("21∘31", compose(&c("2,1"), &shape("3,1")), shape("3,4,1,3,1")),
        ("21•31", compose_transpose(&c("2,1"), &shape("3,1")), shape("3,3,1,1,3,1")),
        ("312•2", compose_transpose(&c("3,1,2"), &two), shape("3,3,1,1,3,1")),
        ("3•31", compose_transpose(&c("3"), &shape("3,1")), shape("3,3,1,4,1")),
        ("111•31", compose_transpose(&c("1,1,1"), &shape("3,1")), shape("3,1,2,1,1,3,1")),
        ("2•2•2", compose_transpose(&two_two.to_ribbon().unwrap(), &two), shape("3,3,1,1")),
    ];
    let bad: Vec<String> = cases
        .iter()
        .filter(|(_, got, want)| got != want)
        .map(|(name, got, want)| format!("{name} = {got}, expected {want}"))
        .collect();
    Outcome { ok: bad.is_empty(), detail: if bad.is_empty() { "6 shapes".into() } else { bad.join("; ") } }
}

fn oracle() -> Outcome {
    let t = Instant::now();
    let checks = [suites::oracle_shapes(6), suites::oracle_ribbons(7), suites::jacobi_trudi(6, 6)];
    from_checks(&checks, Some(Duration::from_secs(600)), t.elapsed())
}

fn invariance() -> Outcome {
    let t = Instant::now();
    let checks = [suites::bullet_invariance(10), suites::shape_invariance(7)];
    from_checks(&checks, None, t.elapsed())
}

fn class_counts() -> Outcome {
    let names = |v: &[Composition]| -> Vec<String> { v.iter().map(ToString::to_string).collect() };
    let mut problems = Vec::new();
    let three = classes(3);
    if three.len() != 2 {
        problems.push(format!("n=3 has {} classes", three.len()));
    }
    let four = classes(4);
    let got: Vec<Vec<String>> = four.iter().map(|cl| names(&cl.members)).collect();
    let want = vec![
        vec!["4", "1,1,1,1"],
        vec!["3,1", "2,1,1", "1,3", "1,1,2"],
        vec!["2,2", "1,2,1"],
    ];
    if got != want {
        problems.push(format!("n=4 classes {got:?}"));
    }
    // the same partition of compositions of 4, decided by tableau polynomials
    let all = compositions_of(4);
    for a in &all {
        for b in &all {
            let same_class = four.iter().any(|cl| cl.members.contains(a) && cl.members.contains(b));
            if same_class != poly_equal(&ribbon_q(a), &ribbon_q(b), 4) {
                problems.push(format!("oracle disagrees on {a} vs {b}"));
            }
        }
    }
    let six = classes(6);
    let home = six.iter().find(|cl| cl.members.contains(&c("2,3,1"))).unwrap();
    let mut members = names(&home.members);
    members.sort();
    if members != ["1,2,1,2", "1,3,2", "2,1,2,1", "2,3,1"] {
        problems.push(format!("class of 231 = {members:?}"));
    }
    Outcome {
        ok: problems.is_empty(),
        detail: if problems.is_empty() { "n=3: 2, n=4: 3, class of 231 exact".into() } else { problems.join("; ") },
    }
}

fn conjecture() -> Outcome {
    let t = Instant::now();
    let mut problems = Vec::new();
    for n in 1..=11 {
        let (_, closure, v) = conjecture_check(n);
        if !v.is_sound() {
            problems.push(format!("n={n}: unsound move {}", v.connected_not_equal[0]));
        }
        for (a, b) in &v.equal_not_connected {
            problems.push(format!("n={n}: {a} and {b} equal but not connected"));
        }
        if closure.traces.is_empty() && n > 1 {
            problems.push(format!("n={n}: no moves generated"));
        }
    }
    let elapsed = t.elapsed();
    if elapsed > Duration::from_secs(600) {
        problems.push(format!("took {elapsed:?}"));
    }
    Outcome {
        ok: problems.is_empty(),
        detail: if problems.is_empty() {
            format!("partitions equal for n <= 11 in {:.1}s", elapsed.as_secs_f64())
        } else {
            problems.join("; ")
        },
    }
}

fn remark() -> Outcome {
    let a = ribbon::compose(&c("2,1"), &c("1,4"));
    let b = ribbon::compose(&c("1,2"), &c("1,4"));
    let equal = ribbon_q(&a) == ribbon_q(&b);
    let three = c("3");
    let w = inequality_witness(&ribbon::compose_transpose(&three, &a), &ribbon::compose_transpose(&three, &b), 6);
    let ok = equal && w.differs() && !matches!(w, Witness::Inconclusive { .. });
    Outcome { ok, detail: format!("21∘14 vs 12∘14 equal: {equal}; 3•(21∘14) vs 3•(12∘14): {w}") }
}

fn basis() -> Outcome {
    let t = Instant::now();
    let checks = [suites::ribbon_basis(10), suites::triangularity(8)];
    from_checks(&checks, None, t.elapsed())
}

fn x1_trichotomy() -> Outcome {
    let t = Instant::now();
    from_checks(&[suites::x1_trichotomy(7, 7, 6)], None, t.elapsed())
}

fn discrepancy() -> Outcome {
    let report = build_report(8);
    let note = report.notes.iter().find(|n| n.starts_with("r[1,5,1,1] = r[3,3,1,1]: "));
    let computed = ribbon_q(&c("1,5,1,1")) == ribbon_q(&c("3,3,1,1"));
    match note {
        Some(text) => {
            let consistent = text.starts_with(&format!("r[1,5,1,1] = r[3,3,1,1]: {computed};"));
            Outcome { ok: consistent, detail: text.clone() }
        }
        None => Outcome { ok: false, detail: "no verdict in the n=8 report".into() },
    }
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        ("identity suite", identities),
        ("convention lock", conventions),
        ("oracle equivalence", oracle),
        ("invariance theorems", invariance),
        ("class counts", class_counts),
        ("conjecture reproduction", conjecture),
        ("remark reproduction", remark),
        ("basis and triangularity", basis),
        ("x1-coefficient trichotomy", x1_trichotomy),
        ("discrepancy resolution", discrepancy),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let status = if outcome.ok { "PASS" } else { "FAIL" };
        if !outcome.ok {
            failures += 1;
        }
        println!(
            "criterion {:>2} {status} {name} [{:.1}s]: {}",
            i + 1,
            t.elapsed().as_secs_f64(),
            outcome.detail
        );
    }
    if failures > 0 {
        println!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 10 acceptance criteria passed");
}
