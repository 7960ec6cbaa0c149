//! Exhaustive identity suites. Every check counts the instances it
//! evaluated and keeps a description of each failure.

use std::collections::BTreeMap;
use std::fmt;

use qschur::diagram::{ribbon, skew_shapes_of, star_product, Star};
use qschur::omega::{
    euler_form, is_dominance_unitriangular, relation_sides, ribbon_mult_check, ribbon_q,
    ribbon_transition_determinant, skew_mult_check, skew_q, small_integer, RelationKind,
};
use qschur::oracle::{amenable_q_poly, jt_e_check, jt_h_check, omega_to_poly, poly_equal, star_determinant_check, x1_coeff};
use qschur::{compositions_of, Composition, SkewShape};
use rayon::prelude::*;

#[derive(Clone, Debug, Default)]
pub struct CheckResult {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl CheckResult {
    fn new(name: impl Into<String>) -> Self {
        CheckResult { name: name.into(), ..Default::default() }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    /// Fold in `(ok, description)` outcomes computed in parallel.
    fn absorb(&mut self, outcomes: Vec<(bool, String)>) {
        for (ok, what) in outcomes {
            self.record(ok, || what);
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} checked", self.name, self.checked)?;
        if !self.passed() {
            write!(f, ", {} failed; first: {}", self.failures.len(), self.failures[0])?;
        }
        f.write_str(")")
    }
}

fn c(s: &str) -> Composition {
    s.parse().expect("literal composition")
}

fn all_compositions_upto(max: u32) -> Vec<Composition> {
    (1..=max).flat_map(compositions_of).collect()
}

fn all_shapes_upto(max: u32) -> Vec<SkewShape> {
    (1..=max).flat_map(skew_shapes_of).collect()
}

/// `Σ_{r+s=n} (-1)^r q_r q_s = 0` for `1 ≤ n ≤ max_degree`.
pub fn euler_forms(max_degree: u32) -> CheckResult {
    let mut r = CheckResult::new(format!("euler forms vanish, degree <= {max_degree}"));
    for n in 1..=max_degree {
        let e = euler_form(n);
        r.record(e.is_zero(), || format!("degree {n}: {e}"));
    }
    r
}

/// `𝔯_α 𝔯_β = 𝔯_{α·β} + 𝔯_{α⊙β}` for `|α| + |β| ≤ max_total`.
pub fn ribbon_multiplication(max_total: u32) -> CheckResult {
    let mut r = CheckResult::new(format!("ribbon multiplication, |a|+|b| <= {max_total}"));
    let left = all_compositions_upto(max_total.saturating_sub(1));
    let outcomes: Vec<(bool, String)> = left
        .par_iter()
        .flat_map_iter(|a| {
            all_compositions_upto(max_total - a.size())
                .into_iter()
                .map(move |b| (ribbon_mult_check(a, &b), format!("{a} * {b}")))
        })
        .collect();
    r.absorb(outcomes);
    r
}

/// The four relation families for `1 ≤ x ≤ max_x`.
pub fn relation_families(max_x: u32) -> CheckResult {
    let mut r = CheckResult::new(format!("relations EE, EI, T, ET, x <= {max_x}"));
    for kind in RelationKind::ALL {
        for x in 1..=max_x {
            let (lhs, rhs) = relation_sides(kind, x);
            r.record(lhs == rhs, || format!("{kind:?} x={x}: {lhs} vs {rhs}"));
        }
    }
    r
}

/// `𝔯_{α•D}` is unchanged when `α` and `D` are replaced by any of their
/// transpose/rotation variants, for `|α|·|D| ≤ max_product`.
pub fn bullet_invariance(max_product: u32) -> CheckResult {
    let mut r = CheckResult::new(format!("bullet variant invariance, |a|*|D| <= {max_product}"));
    let outer = all_compositions_upto(max_product);
    let outcomes: Vec<(bool, String)> = outer
        .par_iter()
        .flat_map_iter(|alpha| {
            let inner = all_compositions_upto(max_product / alpha.size());
            inner.into_iter().map(move |d| {
                let base = ribbon_q(&ribbon::compose_transpose(alpha, &d));
                let bad = ribbon::variants(alpha).iter().find_map(|a2| {
                    ribbon::variants(&d).iter().find_map(|d2| {
                        let g = ribbon::compose_transpose(a2, d2);
                        (ribbon_q(&g) != base).then(|| format!("{alpha} • {d} vs {a2} • {d2}"))
                    })
                });
                (bad.is_none(), bad.unwrap_or_default())
            })
        })
        .collect();
    r.absorb(outcomes);
    r
}

/// `𝔰_D = 𝔰_{Dᵗ} = 𝔰_{D°}` for every skew shape with at most `max_cells` cells.
pub fn shape_invariance(max_cells: u32) -> CheckResult {
    let mut r = CheckResult::new(format!("transpose/rotation invariance, shapes <= {max_cells} cells"));
    let shapes = all_shapes_upto(max_cells);
    let outcomes: Vec<(bool, String)> = shapes
        .par_iter()
        .map(|d| {
            let s = skew_q(d);
            let ok = skew_q(&d.transpose()) == s && skew_q(&d.rotate180()) == s;
            (ok, d.to_string())
        })
        .collect();
    r.absorb(outcomes);
    r
}

/// `𝔰_D² = 2 𝔰_{2•D}` for ribbons `|D| ≤ max_cells`.
pub fn square_rule(max_cells: u32) -> CheckResult {
    let mut r = CheckResult::new(format!("square rule, ribbons <= {max_cells} cells"));
    let two = c("2");
    for d in all_compositions_upto(max_cells) {
        let s = ribbon_q(&d);
        let ok = s.mul(&s) == ribbon_q(&ribbon::compose_transpose(&two, &d)).scale_int(2);
        r.record(ok, || d.to_string());
    }
    r
}

fn partition_by_key(items: &[Composition], key: impl Fn(&Composition) -> String) -> Vec<Vec<usize>> {
    let mut groups: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for (i, x) in items.iter().enumerate() {
        groups.entry(key(x)).or_default().push(i);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    out.sort();
    out
}

/// `𝔯_D = 𝔯_E ⟺ 𝔯_{2•⋯•2•D} = 𝔯_{2•⋯•2•E}` for `j` leading twos with
/// `2^j |D| ≤ max_total`.
pub fn two_bullet_equivalence(max_total: u32) -> CheckResult {
    let mut r = CheckResult::new(format!("2•…•2 equivalence, total <= {max_total}"));
    let two = c("2");
    for j in 1..=max_total.ilog2() {
        let mut m = 1;
        while (1u32 << j) * m <= max_total {
            let ds = compositions_of(m);
            let prefixed = |d: &Composition| {
                (0..j).fold(d.clone(), |acc, _| ribbon::compose_transpose(&two, &acc))
            };
            let plain = partition_by_key(&ds, |d| ribbon_q(d).canonical_key());
            let lifted = partition_by_key(&ds, |d| ribbon_q(&prefixed(d)).canonical_key());
            r.record(plain == lifted, || format!("|D|={m}, j={j}"));
            m += 1;
        }
    }
    r
}

/// `𝔯_α = 𝔯_β ⇒ 𝔯_{α•γ} = 𝔯_{β•γ}` for `|α|·|γ| ≤ max_product`.
pub fn bullet_well_defined(max_product: u32) -> CheckResult {
    let mut r = CheckResult::new(format!("bullet respects equality, |a|*|g| <= {max_product}"));
    for a in 1..=max_product {
        for class in crate::classes::classes(a) {
            let first = &class.members[0];
            for other in &class.members[1..] {
                for g in all_compositions_upto(max_product / a) {
                    let ok = ribbon_q(&ribbon::compose_transpose(first, &g))
                        == ribbon_q(&ribbon::compose_transpose(other, &g));
                    r.record(ok, || format!("{first} ~ {other}, gamma {g}"));
                }
            }
        }
    }
    r
}

/// `𝔰_D 𝔰_E = 𝔰_{D·E} + 𝔰_{D⊙E}` through determinants, ribbon pairs with
/// `|D| + |E| ≤ max_total`.
pub fn skew_multiplication(max_total: u32) -> CheckResult {
    let mut r = CheckResult::new(format!("skew multiplication, ribbon pairs <= {max_total} cells"));
    let left = all_compositions_upto(max_total.saturating_sub(1));
    let outcomes: Vec<(bool, String)> = left
        .par_iter()
        .flat_map_iter(|a| {
            let d = SkewShape::ribbon(a);
            all_compositions_upto(max_total - a.size()).into_iter().map(move |b| {
                (skew_mult_check(&d, &SkewShape::ribbon(&b)), format!("{a} * {b}"))
            })
        })
        .collect();
    r.absorb(outcomes);
    r
}

/// `𝔰_D - q_{srl(D)}` lies over strictly dominance-greater strict
/// partitions, for ribbons with at most `max_cells` cells.
pub fn triangularity(max_cells: u32) -> CheckResult {
    let mut r = CheckResult::new(format!("dominance unitriangularity, ribbons <= {max_cells} cells"));
    for a in all_compositions_upto(max_cells) {
        let ok = is_dominance_unitriangular(&SkewShape::ribbon(&a));
        r.record(ok, || a.to_string());
    }
    r
}

/// The change of basis from strict-shape ribbons to the strict q-basis has
/// determinant ±1 for every degree up to `max_n`.
pub fn ribbon_basis(max_n: u32) -> CheckResult {
    let mut r = CheckResult::new(format!("ribbon basis determinant ±1, n <= {max_n}"));
    for n in 1..=max_n {
        let d = ribbon_transition_determinant(n);
        let ok = matches!(small_integer(&d), Some(1 | -1));
        r.record(ok, || format!("n={n}: det {d}"));
    }
    r
}

/// Individual equalities between named ribbons.
pub fn named_equalities() -> CheckResult {
    let mut r = CheckResult::new("named ribbon equalities");
    let three = c("3");
    let triple = c("1,1,1");
    let d = c("3,1");
    let two = c("2");
    let cases = [
        (ribbon::compose_transpose(&three, &d), ribbon::compose_transpose(&triple, &d)),
        (c("3,3,1,4,1"), c("3,1,2,1,1,3,1")),
        (c("2,3,1"), c("2,1,2,1")),
        (c("2,3,1"), c("1,3,2")),
        (c("2,3,1"), c("1,2,1,2")),
        (
            ribbon::compose_transpose(&ribbon::compose_transpose(&two, &two), &two),
            ribbon::compose_transpose(&ribbon::compose_transpose(&two, &two), &c("1,1")),
        ),
    ];
    for (a, b) in cases {
        r.record(ribbon_q(&a) == ribbon_q(&b), || format!("{a} vs {b}"));
    }
    r
}

/// `omega_to_poly(𝔰_D, n) = Σ_T x^T` for all skew shapes with `n ≤ max_cells`.
pub fn oracle_shapes(max_cells: u32) -> CheckResult {
    let mut r = CheckResult::new(format!("tableau oracle vs determinant, shapes <= {max_cells} cells"));
    let shapes = all_shapes_upto(max_cells);
    let outcomes: Vec<(bool, String)> = shapes
        .par_iter()
        .map(|d| {
            let k = d.size() as usize;
            (omega_to_poly(&skew_q(d), k) == amenable_q_poly(&d.cells(), k), d.to_string())
        })
        .collect();
    r.absorb(outcomes);
    r
}

/// Ribbon expansions against tableaux (and against the determinant) for all
/// ribbons with `n ≤ max_cells`.
pub fn oracle_ribbons(max_cells: u32) -> CheckResult {
    let mut r = CheckResult::new(format!("tableau oracle vs ribbon expansion, ribbons <= {max_cells} cells"));
    let all = all_compositions_upto(max_cells);
    let outcomes: Vec<(bool, String)> = all
        .par_iter()
        .map(|a| {
            let d = SkewShape::ribbon(a);
            let k = a.size() as usize;
            let e = ribbon_q(a);
            let ok = e == skew_q(&d) && omega_to_poly(&e, k) == amenable_q_poly(&d.cells(), k);
            (ok, a.to_string())
        })
        .collect();
    r.absorb(outcomes);
    r
}

/// Both Jacobi–Trudi forms for every shape with at most `max_cells` cells,
/// in `k` variables.
pub fn jacobi_trudi(max_cells: u32, k: usize) -> CheckResult {
    let mut r = CheckResult::new(format!("Jacobi-Trudi h and e forms, shapes <= {max_cells} cells, k={k}"));
    let shapes = all_shapes_upto(max_cells);
    let outcomes: Vec<(bool, String)> = shapes
        .par_iter()
        .map(|d| (jt_h_check(d, k) && jt_e_check(d, k), d.to_string()))
        .collect();
    r.absorb(outcomes);
    r
}

/// Polynomial equality at `k = n` agrees with q-basis equality on all
/// ribbon pairs of size `n ≤ max_cells`.
pub fn poly_equality_decision(max_cells: u32) -> CheckResult {
    let mut r = CheckResult::new(format!("polynomial equality matches q-basis equality, n <= {max_cells}"));
    for n in 1..=max_cells {
        let all = compositions_of(n);
        for (i, a) in all.iter().enumerate() {
            for b in &all[i..] {
                let by_basis = ribbon_q(a) == ribbon_q(b);
                let by_poly = poly_equal(&ribbon_q(a), &ribbon_q(b), n as usize);
                r.record(by_basis == by_poly, || format!("{a} vs {b}"));
            }
        }
    }
    r
}

/// `x1_coeff` is 2 on ribbons, `2^c` on a union of two ribbons and 0 on
/// shapes containing a 2×2 square.
pub fn x1_trichotomy(max_ribbon: u32, max_union: u32, max_square: u32) -> CheckResult {
    let mut r = CheckResult::new(format!(
        "x1 coefficient: ribbons <= {max_ribbon}, unions <= {max_union}, squares <= {max_square}"
    ));
    for a in all_compositions_upto(max_ribbon) {
        let got = x1_coeff(&SkewShape::ribbon(&a).cells());
        r.record(got == 2, || format!("ribbon {a}: {got}"));
    }
    for a in all_compositions_upto(max_union.saturating_sub(1)) {
        for b in all_compositions_upto(max_union - a.size()) {
            let u = SkewShape::ribbon(&a).disjoint_union(&SkewShape::ribbon(&b));
            let got = x1_coeff(&u.cells());
            r.record(got == 4, || format!("{a} (+) {b}: {got}"));
        }
    }
    for d in all_shapes_upto(max_square).into_iter().filter(SkewShape::contains_2x2) {
        let got = x1_coeff(&d.cells());
        r.record(got == 0, || format!("{d}: {got}"));
    }
    r
}

/// Star-product determinants for all chains of up to three blocks drawn
/// from the shapes with at most two cells.
pub fn star_determinants() -> CheckResult {
    let mut r = CheckResult::new("star-product determinants, up to 3 blocks of <= 2 cells");
    let blocks = all_shapes_upto(2);
    let stars = [Star::Concat, Star::NearConcat];
    for m in 1..=3usize {
        let mut chains: Vec<Vec<SkewShape>> = vec![vec![]];
        for _ in 0..m {
            chains = chains
                .into_iter()
                .flat_map(|ch| {
                    blocks.iter().map(move |b| {
                        let mut next = ch.clone();
                        next.push(b.clone());
                        next
                    })
                })
                .collect();
        }
        for chain in chains {
            for mask in 0..(1usize << (m - 1)) {
                let word: Vec<Star> = (0..m - 1).map(|i| stars[mask >> i & 1]).collect();
                let k = star_product(&chain, &word).size() as usize;
                r.record(star_determinant_check(&chain, &word, k), || {
                    let names: Vec<String> = chain.iter().map(ToString::to_string).collect();
                    format!("{names:?} {word:?}")
                });
            }
        }
    }
    r
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Relations,
    Theorems,
    Oracle,
    All,
}

/// The suites the CLI runs, scaled by `max_n`.
pub fn run_suite(suite: Suite, max_n: u32) -> Vec<CheckResult> {
    let mut out = Vec::new();
    if matches!(suite, Suite::Relations | Suite::All) {
        out.push(euler_forms(max_n));
        out.push(ribbon_multiplication(max_n));
        out.push(relation_families(max_n / 2));
    }
    if matches!(suite, Suite::Theorems | Suite::All) {
        out.push(bullet_invariance(max_n));
        out.push(shape_invariance(max_n.min(7)));
        out.push(square_rule(max_n / 2));
        out.push(two_bullet_equivalence(max_n));
        out.push(bullet_well_defined(max_n));
        out.push(skew_multiplication(max_n.min(9)));
        out.push(triangularity(max_n.min(8)));
        out.push(ribbon_basis(max_n.min(10)));
        out.push(named_equalities());
    }
    if matches!(suite, Suite::Oracle | Suite::All) {
        let m = max_n.min(6);
        out.push(oracle_shapes(m));
        out.push(oracle_ribbons(max_n.min(7)));
        out.push(jacobi_trudi(m, m as usize));
        out.push(poly_equality_decision(m));
        out.push(x1_trichotomy(max_n.min(7), max_n.min(7), m));
        out.push(star_determinants());
    }
    out
}
