//! Compositions, partitions and strict partitions, with the coarsening,
//! dominance and lexicographic orders.
//!
//! All three types share the text encoding `p1,p2,...,pk` (decimal parts,
//! comma separated). The empty composition/partition prints as `0`; it is
//! an identity value only and is never produced by enumeration.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

fn parse_parts(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s == "0" {
        return Ok(Vec::new());
    }
    if s.is_empty() {
        return Err(Error::MalformedComposition(s.to_string()));
    }
    let mut parts = Vec::new();
    for tok in s.split(',') {
        let p: u32 = tok
            .trim()
            .parse()
            .map_err(|_| Error::MalformedComposition(s.to_string()))?;
        if p == 0 {
            return Err(Error::ZeroPart(s.to_string()));
        }
        parts.push(p);
    }
    Ok(parts)
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[u32]) -> fmt::Result {
    if parts.is_empty() {
        return f.write_str("0");
    }
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

/// A finite sequence of positive integers.
///
/// The derived `Ord` is the lexicographic order (first differing part
/// decides, a proper prefix is smaller).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::MalformedComposition(String::new()));
        }
        if parts.contains(&0) {
            return Err(Error::ZeroPart(format!("{parts:?}")));
        }
        Ok(Composition(parts))
    }

    /// The empty composition of 0.
    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    /// `n` cells in a single row.
    pub fn row(n: u32) -> Self {
        assert!(n > 0, "a one-part composition needs a positive part");
        Composition(vec![n])
    }

    /// `1^n`, a single column.
    pub fn column(n: u32) -> Self {
        Composition(vec![1; n as usize])
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(!parts.contains(&0));
        Composition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Self {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// `α · β`: parts concatenated.
    pub fn concat(&self, other: &Self) -> Self {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    /// `α ⊙ β`: the last part of `α` merged with the first part of `β`.
    pub fn near_concat(&self, other: &Self) -> Self {
        if self.is_empty() {
            return other.clone();
        }
        if other.is_empty() {
            return self.clone();
        }
        let mut parts = self.0.clone();
        *parts.last_mut().unwrap() += other.0[0];
        parts.extend_from_slice(&other.0[1..]);
        Composition(parts)
    }

    /// `λ(α)`: the parts sorted into weakly decreasing order.
    pub fn sort_to_partition(&self) -> Partition {
        let mut parts = self.0.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// All coarsenings of `self`, itself included.
    ///
    /// Bit `i` of the mask set means the `i`-th gap (left to right) between
    /// parts is kept; the full mask is `self`, mask 0 is the one-part
    /// composition. Output is in descending mask order, so `self` comes first.
    pub fn coarsenings(&self) -> Vec<Composition> {
        let gaps = self.len().saturating_sub(1);
        let mut out = Vec::with_capacity(1 << gaps);
        for mask in (0..(1u64 << gaps)).rev() {
            out.push(Composition(merge_by_mask(&self.0, mask)));
        }
        out
    }

    /// True iff adjacent parts of `finer` can be summed to give `self`.
    pub fn is_coarsening_of(&self, finer: &Composition) -> bool {
        if self.size() != finer.size() {
            return false;
        }
        let mut fine = finer.0.iter();
        for &target in &self.0 {
            let mut acc = 0;
            while acc < target {
                match fine.next() {
                    Some(&p) => acc += p,
                    None => return false,
                }
            }
            if acc != target {
                return false;
            }
        }
        fine.next().is_none()
    }
}

/// Sum runs of `parts`; gap `i` (between part `i` and `i+1`) survives iff
/// bit `i` of `keep` is set.
pub(crate) fn merge_by_mask(parts: &[u32], keep: u64) -> Vec<u32> {
    let mut out = Vec::with_capacity(parts.len());
    let mut acc = parts[0];
    for (i, &p) in parts.iter().enumerate().skip(1) {
        if keep >> (i - 1) & 1 == 1 {
            out.push(acc);
            acc = p;
        } else {
            acc += p;
        }
    }
    out.push(acc);
    out
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(Composition(parse_parts(s)?))
    }
}

/// All `2^(n-1)` compositions of `n`.
///
/// The order is ascending in the cut bitmask, where bit `i` cuts the gap
/// `i` positions from the right end; for `n = 3` this gives `3, 21, 12, 111`.
/// `n = 0` yields nothing.
pub fn compositions_of(n: u32) -> Vec<Composition> {
    if n == 0 {
        return Vec::new();
    }
    let gaps = n - 1;
    (0..(1u64 << gaps))
        .map(|mask| {
            let mut parts = Vec::new();
            let mut run = 1;
            // walk cells left to right; gap after cell c is `gaps - c` from the right
            for c in 1..n {
                let bit = gaps - c;
                if mask >> bit & 1 == 1 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            Composition(parts)
        })
        .collect()
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ZeroPart(format!("{parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Drops zero parts, then validates.
    pub fn from_padded(mut parts: Vec<u32>) -> Result<Self> {
        parts.retain(|&p| p > 0);
        Self::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=first)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
                .collect(),
        )
    }

    pub fn to_composition(&self) -> Composition {
        Composition(self.0.clone())
    }

    /// Dominance comparison of prefix sums up to the shorter length.
    pub fn dominance_compare(&self, other: &Partition) -> Result<Dominance> {
        dominance_compare(&self.0, &other.0)
    }
}

/// Dominance on raw weakly decreasing slices; shared with [`StrictPartition`].
pub(crate) fn dominance_compare(a: &[u32], b: &[u32]) -> Result<Dominance> {
    let (sa, sb): (u32, u32) = (a.iter().sum(), b.iter().sum());
    if sa != sb {
        return Err(Error::SizeMismatch(sa, sb));
    }
    let (mut pa, mut pb) = (0u32, 0u32);
    let (mut ge, mut le) = (true, true);
    for (x, y) in a.iter().zip(b) {
        pa += x;
        pb += y;
        ge &= pa >= pb;
        le &= pa <= pb;
    }
    Ok(match (ge, le) {
        (true, true) => Dominance::Equal,
        (true, false) => Dominance::Greater,
        (false, true) => Dominance::Less,
        (false, false) => Dominance::Incomparable,
    })
}

/// Outcome of a dominance comparison.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Dominance {
    Greater,
    Less,
    Equal,
    Incomparable,
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

/// A strictly decreasing sequence of positive integers; the empty partition
/// indexes the unit `q_0 = 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct StrictPartition(Vec<u32>);

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let p = Partition::new(parts)?;
        StrictPartition::try_from(p)
    }

    pub fn empty() -> Self {
        StrictPartition(Vec::new())
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] > w[1]) && !parts.contains(&0));
        StrictPartition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dominance_compare(&self, other: &StrictPartition) -> Result<Dominance> {
        dominance_compare(&self.0, &other.0)
    }

    pub fn as_partition(&self) -> Partition {
        Partition(self.0.clone())
    }
}

impl TryFrom<Partition> for StrictPartition {
    type Error = Error;
    fn try_from(p: Partition) -> Result<Self> {
        if p.is_strict() {
            Ok(StrictPartition(p.0))
        } else {
            Err(Error::NotStrict(p.0))
        }
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl FromStr for StrictPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        StrictPartition::new(parse_parts(s)?)
    }
}

/// Lexicographic comparison of compositions.
pub fn lex_compare(a: &Composition, b: &Composition) -> Ordering {
    a.parts().cmp(b.parts())
}

/// All partitions of `n`, in lexicographically decreasing order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// All strict partitions of `n`, in lexicographically decreasing order.
pub fn strict_partitions_of(n: u32) -> Vec<StrictPartition> {
    partitions_of(n)
        .into_iter()
        .filter(Partition::is_strict)
        .map(|p| StrictPartition(p.0))
        .collect()
}
