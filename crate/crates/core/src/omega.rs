//! Exact arithmetic in Ω on the strict basis `{q_λ : λ strict}`.
//!
//! Products of generators are brought back to the strict basis by
//! straightening: a repeated factor `q_r²` is replaced using the even Euler
//! relation,
//!
//! ```text
//! q_r² = 2 Σ_{j=1..r} (-1)^{j-1} q_{r-j} q_{r+j}        (q_0 = 1)
//! ```
//!
//! Each rewrite strictly increases the sum of squared parts, which is
//! bounded by the squared degree, so rewriting terminates. Results are
//! memoized per sorted multiset in a process-wide table; since the strict
//! `q_λ` form a basis, the result does not depend on which repeated pair is
//! rewritten first, so concurrent fills of the table agree.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::composition::{strict_partitions_of, Composition, Partition, StrictPartition};
use crate::det;
use crate::diagram::SkewShape;

/// An element of Ω: a finite rational combination of strict `q_λ`.
///
/// Zero coefficients are never stored; the empty partition indexes `q_0 = 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct OmegaElem {
    terms: BTreeMap<StrictPartition, BigRational>,
}

impl OmegaElem {
    pub fn zero() -> Self {
        OmegaElem::default()
    }

    pub fn one() -> Self {
        Self::basis(StrictPartition::empty())
    }

    /// `q_n`; `q_0 = 1`.
    pub fn q(n: u32) -> Self {
        if n == 0 {
            Self::one()
        } else {
            Self::basis(StrictPartition::from_parts_unchecked(vec![n]))
        }
    }

    /// The basis element `q_λ`.
    pub fn basis(lambda: StrictPartition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, BigRational::one());
        OmegaElem { terms }
    }

    /// `q_{p1} q_{p2} ⋯` for an arbitrary multiset of parts, straightened.
    pub fn q_product(parts: &[u32]) -> Self {
        straighten(parts)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (StrictPartition, BigRational)>) -> Self {
        let mut out = OmegaElem::zero();
        for (k, v) in terms {
            out.add_term(k, v);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&StrictPartition, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, lambda: &StrictPartition) -> BigRational {
        self.terms.get(lambda).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Degree of every term, or `None` for zero and inhomogeneous elements.
    pub fn degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(StrictPartition::size);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    fn add_term(&mut self, key: StrictPartition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn add_scaled(&mut self, other: &OmegaElem, scale: &BigRational) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * scale);
        }
    }

    pub fn scale(&self, c: &BigRational) -> OmegaElem {
        let mut out = OmegaElem::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn scale_int(&self, c: i64) -> OmegaElem {
        self.scale(&BigRational::from_integer(c.into()))
    }

    /// Product in Ω.
    pub fn mul(&self, other: &OmegaElem) -> OmegaElem {
        let mut out = OmegaElem::zero();
        let mut merged = Vec::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                merged.clear();
                merged.extend_from_slice(a.parts());
                merged.extend_from_slice(b.parts());
                let c = ca * cb;
                if is_strict_after_sort(&mut merged) {
                    out.add_term(StrictPartition::from_parts_unchecked(merged.clone()), c);
                } else {
                    out.add_scaled(&straighten_sorted(&merged), &c);
                }
            }
        }
        out
    }

    /// Exact coefficient-wise equality.
    pub fn equal(&self, other: &OmegaElem) -> bool {
        self == other
    }

    /// Canonical text: the display form, terms in lexicographically
    /// ascending order of their partitions. Equal iff the elements are equal.
    pub fn canonical_key(&self) -> String {
        self.to_string()
    }

    /// Integer coefficients, failing on a proper fraction.
    pub fn integer_terms(&self) -> crate::Result<Vec<(StrictPartition, BigInt)>> {
        self.terms
            .iter()
            .map(|(k, v)| {
                if v.is_integer() {
                    Ok((k.clone(), v.to_integer()))
                } else {
                    Err(crate::Error::NonIntegral(v.to_string()))
                }
            })
            .collect()
    }

    fn assert_integral(self, what: &dyn fmt::Display) -> Self {
        assert!(self.is_integral(), "{what} expanded with a non-integral coefficient: {self}");
        self
    }
}

fn is_strict_after_sort(parts: &mut [u32]) -> bool {
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts.windows(2).all(|w| w[0] > w[1])
}

impl fmt::Display for OmegaElem {
    /// `q[4,2] - q[6]`, `2*q[3,1] - 3*q[4]`; the unit prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if k.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                f.write_str("q[")?;
                for (j, p) in k.parts().iter().enumerate() {
                    if j > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{p}")?;
                }
                f.write_str("]")?;
            }
        }
        Ok(())
    }
}

impl Add for &OmegaElem {
    type Output = OmegaElem;
    fn add(self, rhs: &OmegaElem) -> OmegaElem {
        let mut out = self.clone();
        out.add_scaled(rhs, &BigRational::one());
        out
    }
}

impl Sub for &OmegaElem {
    type Output = OmegaElem;
    fn sub(self, rhs: &OmegaElem) -> OmegaElem {
        let mut out = self.clone();
        out.add_scaled(rhs, &-BigRational::one());
        out
    }
}

impl Neg for &OmegaElem {
    type Output = OmegaElem;
    fn neg(self) -> OmegaElem {
        self.scale(&-BigRational::one())
    }
}

impl Mul for &OmegaElem {
    type Output = OmegaElem;
    fn mul(self, rhs: &OmegaElem) -> OmegaElem {
        OmegaElem::mul(self, rhs)
    }
}

impl det::Ring for OmegaElem {
    fn zero() -> Self {
        OmegaElem::zero()
    }
    fn one() -> Self {
        OmegaElem::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        OmegaElem::mul(self, o)
    }
}

impl det::Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
}

type Memo<K> = LazyLock<RwLock<HashMap<K, Arc<OmegaElem>>>>;

static STRAIGHTEN_MEMO: Memo<Vec<u32>> = LazyLock::new(Default::default);
static RIBBON_MEMO: Memo<Composition> = LazyLock::new(Default::default);

/// `q_{p1} q_{p2} ⋯` in the strict basis. Zero parts are unit factors.
pub fn straighten(parts: &[u32]) -> OmegaElem {
    let mut sorted: Vec<u32> = parts.iter().copied().filter(|&p| p > 0).collect();
    if is_strict_after_sort(&mut sorted) {
        return OmegaElem::basis(StrictPartition::from_parts_unchecked(sorted));
    }
    (*straighten_sorted(&sorted)).clone()
}

/// Memoized straightening of a weakly decreasing multiset with a repeat.
fn straighten_sorted(sorted: &[u32]) -> Arc<OmegaElem> {
    if let Some(hit) = STRAIGHTEN_MEMO.read().unwrap().get(sorted) {
        return hit.clone();
    }
    let i = sorted
        .windows(2)
        .position(|w| w[0] == w[1])
        .expect("straighten_sorted needs a repeated part");
    let result = Arc::new(rewrite_pair(sorted, i, &mut |next| {
        let mut next = next.to_vec();
        if is_strict_after_sort(&mut next) {
            OmegaElem::basis(StrictPartition::from_parts_unchecked(next))
        } else {
            (*straighten_sorted(&next)).clone()
        }
    }));
    STRAIGHTEN_MEMO
        .write()
        .unwrap()
        .entry(sorted.to_vec())
        .or_insert(result)
        .clone()
}

/// Apply `q_r² = 2 Σ (-1)^{j-1} q_{r-j} q_{r+j}` to the equal pair at
/// positions `i, i+1` and hand every resulting multiset to `recurse`.
fn rewrite_pair(
    sorted: &[u32],
    i: usize,
    recurse: &mut dyn FnMut(&[u32]) -> OmegaElem,
) -> OmegaElem {
    let r = sorted[i];
    debug_assert_eq!(sorted[i + 1], r);
    let mut rest: Vec<u32> = sorted[..i].to_vec();
    rest.extend_from_slice(&sorted[i + 2..]);
    let mut out = OmegaElem::zero();
    for j in 1..=r {
        let mut next = rest.clone();
        next.push(r + j);
        if r > j {
            next.push(r - j);
        }
        let sign = if j % 2 == 1 { 2 } else { -2 };
        out.add_scaled(&recurse(&next), &BigRational::from_integer(sign.into()));
    }
    out
}

/// Straightening that bypasses the shared memo and rewrites whichever
/// repeated value `pick` selects (given the distinct repeated values in
/// decreasing order). Each multiset's choice is made once per call and
/// reused. Exists to exercise confluence of the rewriting system.
pub fn straighten_choosing(parts: &[u32], pick: &mut dyn FnMut(&[u32]) -> usize) -> OmegaElem {
    fn go(
        parts: &[u32],
        pick: &mut dyn FnMut(&[u32]) -> usize,
        seen: &mut HashMap<Vec<u32>, OmegaElem>,
    ) -> OmegaElem {
        let mut sorted: Vec<u32> = parts.iter().copied().filter(|&p| p > 0).collect();
        if is_strict_after_sort(&mut sorted) {
            return OmegaElem::basis(StrictPartition::from_parts_unchecked(sorted));
        }
        if let Some(hit) = seen.get(&sorted) {
            return hit.clone();
        }
        let mut repeated: Vec<u32> = sorted.windows(2).filter(|w| w[0] == w[1]).map(|w| w[0]).collect();
        repeated.dedup();
        let value = repeated[pick(&repeated) % repeated.len()];
        let i = sorted.iter().position(|&p| p == value).unwrap();
        let out = rewrite_pair(&sorted, i, &mut |next| go(next, pick, seen));
        seen.insert(sorted, out.clone());
        out
    }
    go(parts, pick, &mut HashMap::new())
}

/// Signed multiplicities of `λ(β)` over the coarsenings `β` of `α`, with
/// sign `(-1)^{ℓ(α) - ℓ(β)}`.
fn coarsening_profile(alpha: &Composition) -> BTreeMap<Vec<u32>, i64> {
    let parts = alpha.parts();
    let gaps = parts.len() - 1;
    let mut profile: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    let mut merged = Vec::with_capacity(parts.len());
    for keep in 0..(1u64 << gaps) {
        merged.clear();
        let mut acc = parts[0];
        for (i, &p) in parts.iter().enumerate().skip(1) {
            if keep >> (i - 1) & 1 == 1 {
                merged.push(acc);
                acc = p;
            } else {
                acc += p;
            }
        }
        merged.push(acc);
        let sign = if (parts.len() - merged.len()).is_multiple_of(2) { 1 } else { -1 };
        merged.sort_unstable_by(|a, b| b.cmp(a));
        *profile.entry(merged.clone()).or_insert(0) += sign;
    }
    profile
}

/// Ribbon Schur Q-function `𝔯_α = (-1)^{ℓ(α)} Σ_{β ≽ α} (-1)^{ℓ(β)} q_{λ(β)}`.
///
/// Memoized per composition. Panics if the expansion is not integral.
pub fn ribbon_q(alpha: &Composition) -> OmegaElem {
    assert!(!alpha.is_empty(), "the ribbon of the empty composition is the unit; use OmegaElem::one");
    if let Some(hit) = RIBBON_MEMO.read().unwrap().get(alpha) {
        return (**hit).clone();
    }
    let mut out = OmegaElem::zero();
    for (lambda, count) in coarsening_profile(alpha) {
        if count != 0 {
            out.add_scaled(&straighten(&lambda), &BigRational::from_integer(count.into()));
        }
    }
    let out = out.assert_integral(alpha);
    RIBBON_MEMO
        .write()
        .unwrap()
        .entry(alpha.clone())
        .or_insert_with(|| Arc::new(out.clone()));
    out
}

/// `𝔰_D = det(q_{λ_i - μ_j - i + j})`, with `q_m = 0` for `m < 0`.
pub fn skew_q(d: &SkewShape) -> OmegaElem {
    if d.is_empty() {
        return OmegaElem::one();
    }
    let lambda = d.lambda();
    let mu = d.mu();
    let n = lambda.len();
    let mu_at = |j: usize| mu.parts().get(j).copied().unwrap_or(0) as i64;
    let matrix: Vec<Vec<OmegaElem>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let m = lambda.parts()[i] as i64 - mu_at(j) - i as i64 + j as i64;
                    if m < 0 {
                        OmegaElem::zero()
                    } else {
                        OmegaElem::q(m as u32)
                    }
                })
                .collect()
        })
        .collect();
    det::determinant(&matrix).assert_integral(d)
}

/// `Σ_{r+s=n} (-1)^r q_r q_s`, straightened.
pub fn euler_form(n: u32) -> OmegaElem {
    let mut out = OmegaElem::zero();
    for r in 0..=n {
        let term = straighten(&[r, n - r]);
        out = if r % 2 == 0 { &out + &term } else { &out - &term };
    }
    out
}

/// The relation families between ribbon functions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RelationKind {
    /// `𝔯_{2x} = Σ_{i=1}^{2x-1} (-1)^{i+1} 𝔯_{(2x-i) i}`
    EE,
    /// `2𝔯_{2x} = Σ_{i=1}^{2x-1} (-1)^{i+1} 𝔯_{2x-i} 𝔯_i`
    EI,
    /// `𝔯_x = 𝔯_{1^x}`
    T,
    /// `𝔯_{2x} = 𝔯_{1^{2x}}`
    ET,
}

impl RelationKind {
    pub const ALL: [RelationKind; 4] = [Self::EE, Self::EI, Self::T, Self::ET];
}

/// Both sides of one instance of a relation family.
pub fn relation_sides(kind: RelationKind, x: u32) -> (OmegaElem, OmegaElem) {
    assert!(x >= 1, "relations are indexed by x ≥ 1");
    let r = |parts: Vec<u32>| ribbon_q(&Composition::new(parts).unwrap());
    match kind {
        RelationKind::EE => {
            let n = 2 * x;
            let mut rhs = OmegaElem::zero();
            for i in 1..n {
                let t = r(vec![n - i, i]);
                rhs = if i % 2 == 1 { &rhs + &t } else { &rhs - &t };
            }
            (r(vec![n]), rhs)
        }
        RelationKind::EI => {
            let n = 2 * x;
            let mut rhs = OmegaElem::zero();
            for i in 1..n {
                let t = r(vec![n - i]).mul(&r(vec![i]));
                rhs = if i % 2 == 1 { &rhs + &t } else { &rhs - &t };
            }
            (r(vec![n]).scale_int(2), rhs)
        }
        RelationKind::T => (r(vec![x]), r(vec![1; x as usize])),
        RelationKind::ET => (r(vec![2 * x]), r(vec![1; 2 * x as usize])),
    }
}

pub fn relation_check(kind: RelationKind, x: u32) -> bool {
    let (lhs, rhs) = relation_sides(kind, x);
    lhs == rhs
}

/// `𝔯_α 𝔯_β = 𝔯_{α·β} + 𝔯_{α⊙β}`.
pub fn ribbon_mult_check(alpha: &Composition, beta: &Composition) -> bool {
    let lhs = ribbon_q(alpha).mul(&ribbon_q(beta));
    let rhs = &ribbon_q(&alpha.concat(beta)) + &ribbon_q(&alpha.near_concat(beta));
    lhs == rhs
}

/// `𝔰_D 𝔰_E = 𝔰_{D·E} + 𝔰_{D⊙E}` evaluated with determinants.
pub fn skew_mult_check(d: &SkewShape, e: &SkewShape) -> bool {
    let lhs = skew_q(d).mul(&skew_q(e));
    let rhs = &skew_q(&d.concat(e)) + &skew_q(&d.near_concat(e));
    lhs == rhs
}

/// Whether `𝔰_D - q_{srl(D)}` is supported on strict partitions strictly
/// above `srl(D)` in dominance order (`q_{srl(D)}` straightened when
/// `srl(D)` has repeated parts).
pub fn is_dominance_unitriangular(d: &SkewShape) -> bool {
    let srl = d.srl();
    let rest = &skew_q(d) - &straighten(srl.parts());
    let lowest_ok = match StrictPartition::try_from(srl.clone()) {
        Ok(s) => skew_q(d).coeff(&s).is_one(),
        Err(_) => true,
    };
    lowest_ok
        && rest.terms().all(|(mu, _)| {
            matches!(
                crate::composition::dominance_compare(mu.parts(), srl.parts()),
                Ok(crate::Dominance::Greater)
            )
        })
}

/// Rows `𝔯_λ` for strict `λ ⊢ n`, columns `q_μ` for strict `μ ⊢ n`, both in
/// lexicographically decreasing order.
pub fn ribbon_transition_matrix(n: u32) -> (Vec<StrictPartition>, Vec<Vec<BigRational>>) {
    let basis = strict_partitions_of(n);
    let rows = basis
        .iter()
        .map(|lambda| {
            let r = ribbon_q(&lambda.as_partition().to_composition());
            basis.iter().map(|mu| r.coeff(mu)).collect()
        })
        .collect();
    (basis, rows)
}

/// Determinant of [`ribbon_transition_matrix`].
pub fn ribbon_transition_determinant(n: u32) -> BigRational {
    let (_, m) = ribbon_transition_matrix(n);
    det::determinant(&m)
}

/// `c` as an `i64`, when it is an integer that fits.
pub fn small_integer(c: &BigRational) -> Option<i64> {
    if c.is_integer() {
        c.to_integer().to_i64()
    } else {
        None
    }
}

/// `q_λ` for any partition, straightened.
pub fn q_partition(lambda: &Partition) -> OmegaElem {
    straighten(lambda.parts())
}
