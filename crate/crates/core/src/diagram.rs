//! Skew diagrams and the operations on them: transpose, antipodal rotation,
//! shifting, disjoint union, concatenation (`·`), near concatenation (`⊙`),
//! composition of compositions (`∘`) and composition of transpositions (`•`).
//!
//! A [`SkewShape`] is stored as its rows, top first, each a closed column
//! interval `[l, r]`. Shapes are always normalized: the leftmost occupied
//! column is 1 and there are no empty rows or columns. Two shapes are equal
//! exactly when their normalized rows are equal; normalization only moves
//! connected components relative to each other, which no invariant here
//! depends on.
//!
//! Ribbons are in bijection with compositions. The ribbon of `α` has `α_i`
//! cells in row `i` and consecutive rows share exactly one column. Its word
//! reads the cells from the top row down, emitting `⊙` between two cells of
//! the same row and `·` at every change of row, so `21 = □⊙□·□`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::composition::{Composition, Partition};
use crate::error::{Error, Result};

/// A normalized skew diagram.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct SkewShape {
    rows: Vec<(u32, u32)>,
}

/// A finite set of `(row, column)` cells.
///
/// Used for shifted diagrams, which are generally not skew shapes, and as
/// the input of the tableau oracles.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct CellSet(BTreeSet<(i64, i64)>);

impl CellSet {
    pub fn new(cells: impl IntoIterator<Item = (i64, i64)>) -> Self {
        CellSet(cells.into_iter().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, cell: (i64, i64)) -> bool {
        self.0.contains(&cell)
    }

    /// Cells in row-major order (top row first, left to right).
    pub fn iter(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.0.iter().copied()
    }

    /// Translate so the minimal row and column are both 1.
    pub fn normalized(&self) -> CellSet {
        let r0 = self.0.iter().map(|c| c.0).min().unwrap_or(1);
        let c0 = self.0.iter().map(|c| c.1).min().unwrap_or(1);
        CellSet(self.0.iter().map(|&(r, c)| (r - r0 + 1, c - c0 + 1)).collect())
    }

    pub fn ascii(&self) -> String {
        let n = self.normalized();
        let rows = n.0.iter().map(|c| c.0).max().unwrap_or(0);
        let cols = n.0.iter().map(|c| c.1).max().unwrap_or(0);
        let mut s = String::new();
        for r in 1..=rows {
            let line: String = (1..=cols)
                .map(|c| if n.contains((r, c)) { '#' } else { '.' })
                .collect();
            s.push_str(line.trim_end_matches('.'));
            s.push('\n');
        }
        s
    }
}

impl SkewShape {
    /// The empty diagram.
    pub fn empty() -> Self {
        SkewShape { rows: Vec::new() }
    }

    /// Validates arbitrary (possibly translated) row intervals, top row
    /// first, and normalizes them.
    pub fn from_rows(rows: &[(i64, i64)]) -> Result<Self> {
        for &(l, r) in rows {
            if l > r {
                return Err(Error::InvalidShape(format!("empty row interval [{l}, {r}]")));
            }
        }
        for w in rows.windows(2) {
            if w[0].0 < w[1].0 || w[0].1 < w[1].1 {
                return Err(Error::InvalidShape(format!(
                    "row bounds must weakly decrease downwards: {:?} above {:?}",
                    w[0], w[1]
                )));
            }
        }
        Ok(Self::normalize(rows.to_vec()))
    }

    /// `λ/μ`. Rows with `λ_i = μ_i` are dropped, which only separates
    /// components that already share no column.
    pub fn from_lambda_mu(lambda: &Partition, mu: &Partition) -> Result<Self> {
        if mu.len() > lambda.len() {
            return Err(Error::InvalidShape(format!("{mu} is not contained in {lambda}")));
        }
        let mut rows = Vec::new();
        for (i, &l) in lambda.parts().iter().enumerate() {
            let m = mu.parts().get(i).copied().unwrap_or(0);
            if m > l {
                return Err(Error::InvalidShape(format!("{mu} is not contained in {lambda}")));
            }
            if m < l {
                rows.push((m as i64 + 1, l as i64));
            }
        }
        Self::from_rows(&rows)
    }

    /// Rebuild a skew shape from a cell set; fails if the cells do not form
    /// one (a row with a hole, or bounds that are not monotone).
    pub fn from_cells(cells: &CellSet) -> Result<Self> {
        let mut rows: Vec<(i64, i64, i64)> = Vec::new(); // (row, l, r)
        for (r, c) in cells.iter() {
            match rows.last_mut() {
                Some(last) if last.0 == r => {
                    if c != last.2 + 1 {
                        return Err(Error::InvalidShape(format!("row {r} is not contiguous")));
                    }
                    last.2 = c;
                }
                _ => rows.push((r, c, c)),
            }
        }
        let intervals: Vec<(i64, i64)> = rows.iter().map(|&(_, l, r)| (l, r)).collect();
        Self::from_rows(&intervals)
    }

    fn normalize(mut rows: Vec<(i64, i64)>) -> SkewShape {
        if rows.is_empty() {
            return SkewShape::empty();
        }
        // squeeze empty columns: everything above a gap slides left
        let mut shift = 0i64;
        for i in (0..rows.len() - 1).rev() {
            let below_r = rows[i + 1].1;
            let gap = rows[i].0 - shift - below_r - 1;
            if gap > 0 {
                shift += gap;
            }
            rows[i] = (rows[i].0 - shift, rows[i].1 - shift);
        }
        let min_l = rows.iter().map(|r| r.0).min().unwrap();
        SkewShape {
            rows: rows
                .into_iter()
                .map(|(l, r)| ((l - min_l + 1) as u32, (r - min_l + 1) as u32))
                .collect(),
        }
    }

    /// Row intervals `(l, r)`, top row first, 1-indexed columns.
    pub fn rows(&self) -> &[(u32, u32)] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn size(&self) -> u32 {
        self.rows.iter().map(|&(l, r)| r - l + 1).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// `λ` with `λ_i = r_i`.
    pub fn lambda(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.1).collect()).expect("normalized rows")
    }

    /// `μ` with `μ_i = l_i - 1`, zeros dropped.
    pub fn mu(&self) -> Partition {
        Partition::from_padded(self.rows.iter().map(|r| r.0 - 1).collect()).expect("normalized rows")
    }

    pub fn cells(&self) -> CellSet {
        CellSet(
            self.rows
                .iter()
                .enumerate()
                .flat_map(|(i, &(l, r))| (l..=r).map(move |c| (i as i64 + 1, c as i64)))
                .collect(),
        )
    }

    /// Reflection across the main diagonal.
    pub fn transpose(&self) -> SkewShape {
        let cells = CellSet(self.cells().iter().map(|(r, c)| (c, r)).collect());
        SkewShape::from_cells(&cells).expect("transpose of a skew shape is a skew shape")
    }

    /// Rotation by 180 degrees.
    pub fn rotate180(&self) -> SkewShape {
        let rows: Vec<(i64, i64)> = self
            .rows
            .iter()
            .rev()
            .map(|&(l, r)| (-(r as i64), -(l as i64)))
            .collect();
        SkewShape::normalize(rows)
    }

    /// The multiset of row lengths as a partition.
    pub fn srl(&self) -> Partition {
        let mut lens: Vec<u32> = self.rows.iter().map(|&(l, r)| r - l + 1).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(lens).expect("positive row lengths")
    }

    /// Shifted diagram: row `i` moves `i - 1` columns right. Needs `λ` and
    /// `μ` (as read off the normalized rows) to be strict.
    pub fn shift(&self) -> Result<CellSet> {
        let (lambda, mu) = (self.lambda(), self.mu());
        if !lambda.is_strict() || !mu.is_strict() {
            return Err(Error::NonStrictShift {
                lambda: lambda.parts().to_vec(),
                mu: mu.parts().to_vec(),
            });
        }
        Ok(CellSet(
            self.cells().iter().map(|(r, c)| (r, c + r - 1)).collect(),
        ))
    }

    /// True iff the cell set is a single edge-connected piece.
    pub fn is_connected(&self) -> bool {
        self.rows.windows(2).all(|w| w[0].0 <= w[1].1)
    }

    pub fn contains_2x2(&self) -> bool {
        self.rows.windows(2).any(|w| w[1].1 > w[0].0)
    }

    /// Number of edge-connected components.
    pub fn components(&self) -> usize {
        if self.rows.is_empty() {
            return 0;
        }
        1 + self.rows.windows(2).filter(|w| w[0].0 > w[1].1).count()
    }

    /// The ribbon of `α`.
    pub fn ribbon(alpha: &Composition) -> SkewShape {
        let mut rows: Vec<(u32, u32)> = Vec::with_capacity(alpha.len());
        let mut left = 1;
        for &part in alpha.parts().iter().rev() {
            rows.push((left, left + part - 1));
            left += part - 1;
        }
        rows.reverse();
        SkewShape { rows }
    }

    /// The composition of a ribbon; `None` if the shape is not a ribbon.
    pub fn to_ribbon(&self) -> Option<Composition> {
        if self.rows.is_empty() || self.rows.windows(2).any(|w| w[0].0 != w[1].1) {
            return None;
        }
        Some(Composition::from_parts_unchecked(
            self.rows.iter().map(|&(l, r)| r - l + 1).collect(),
        ))
    }

    /// Rows of `d1` placed strictly north-east of `d2`, shifted `west`
    /// columns to the west; `merge` drops `d1` one row so its bottom row
    /// joins the top row of `d2`.
    fn glue(d1: &SkewShape, d2: &SkewShape, west: i64, merge: bool) -> SkewShape {
        if d1.is_empty() {
            return d2.clone();
        }
        if d2.is_empty() {
            return d1.clone();
        }
        let offset = d2.rows[0].1 as i64 + 1 - west - 1; // d1 column 1 lands at d2's rightmost + 1 - west
        let mut rows: Vec<(i64, i64)> = d1
            .rows
            .iter()
            .map(|&(l, r)| (l as i64 + offset, r as i64 + offset))
            .collect();
        let mut rest = d2.rows.iter().map(|&(l, r)| (l as i64, r as i64));
        if merge {
            let top = rest.next().unwrap();
            let last = rows.last_mut().unwrap();
            debug_assert_eq!(last.0, top.1 + 1);
            *last = (top.0, last.1);
        }
        rows.extend(rest);
        SkewShape::normalize(rows)
    }

    /// `D1 ⊕ D2`: `D1` strictly north and east of `D2`, sharing no row or
    /// column.
    pub fn disjoint_union(&self, other: &SkewShape) -> SkewShape {
        Self::glue(self, other, 0, false)
    }

    /// `D1 · D2`: from `D1 ⊕ D2`, move `D1` one cell west.
    pub fn concat(&self, other: &SkewShape) -> SkewShape {
        Self::glue(self, other, 1, false)
    }

    /// `D1 ⊙ D2`: from `D1 ⊕ D2`, move `D1` one cell south.
    pub fn near_concat(&self, other: &SkewShape) -> SkewShape {
        Self::glue(self, other, 0, true)
    }

    pub fn star(&self, star: Star, other: &SkewShape) -> SkewShape {
        match star {
            Star::Concat => self.concat(other),
            Star::NearConcat => self.near_concat(other),
        }
    }

    /// Lattice-path rendering, `#` for cells.
    pub fn ascii(&self) -> String {
        self.cells().ascii()
    }
}

impl fmt::Display for SkewShape {
    /// `λ/μ`, e.g. `3,2,2,1/1,1`; an empty `μ` prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.lambda(), self.mu())
    }
}

impl FromStr for SkewShape {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (l, m) = match s.split_once('/') {
            Some((l, m)) => (l, m),
            None => (s, "0"),
        };
        SkewShape::from_lambda_mu(&l.parse()?, &m.parse()?)
    }
}

/// How two consecutive pieces of a star product are glued.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Star {
    /// `·`: the pieces sit in consecutive rows sharing one column.
    Concat,
    /// `⊙`: the pieces share a row.
    NearConcat,
}

impl Star {
    /// The other operation (`·` ↔ `⊙`).
    pub fn bar(self) -> Star {
        match self {
            Star::Concat => Star::NearConcat,
            Star::NearConcat => Star::Concat,
        }
    }
}

/// The stars of `α = □ ★₁ □ ★₂ ⋯ ★ₙ₋₁ □`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RibbonWord(pub Vec<Star>);

impl RibbonWord {
    pub fn of(alpha: &Composition) -> RibbonWord {
        let mut stars = Vec::with_capacity(alpha.size().saturating_sub(1) as usize);
        for (i, &part) in alpha.parts().iter().enumerate() {
            if i > 0 {
                stars.push(Star::Concat);
            }
            stars.extend(std::iter::repeat_n(Star::NearConcat, part as usize - 1));
        }
        RibbonWord(stars)
    }

    pub fn to_ribbon(&self) -> Composition {
        word_to_ribbon(&self.0)
    }

    pub fn stars(&self) -> &[Star] {
        &self.0
    }

    /// Word of the transposed ribbon: reversed, every star flipped.
    pub fn transposed(&self) -> RibbonWord {
        RibbonWord(self.0.iter().rev().map(|s| s.bar()).collect())
    }

    /// Word of the rotated ribbon: reversed.
    pub fn rotated(&self) -> RibbonWord {
        RibbonWord(self.0.iter().rev().copied().collect())
    }
}

pub fn word(alpha: &Composition) -> RibbonWord {
    RibbonWord::of(alpha)
}

pub fn word_to_ribbon(stars: &[Star]) -> Composition {
    let mut parts = vec![1u32];
    for s in stars {
        match s {
            Star::NearConcat => *parts.last_mut().unwrap() += 1,
            Star::Concat => parts.push(1),
        }
    }
    Composition::from_parts_unchecked(parts)
}

/// `D₁ ★₁ D₂ ★₂ ⋯ ★ₖ₋₁ Dₖ`, evaluated left to right.
pub fn star_product(blocks: &[SkewShape], stars: &[Star]) -> SkewShape {
    assert_eq!(blocks.len(), stars.len() + 1, "one star between each pair of blocks");
    let mut acc = blocks[0].clone();
    for (s, b) in stars.iter().zip(&blocks[1..]) {
        acc = acc.star(*s, b);
    }
    acc
}

/// `α ∘ D`: `|α|` copies of `D` joined by the word of `α`.
pub fn compose(alpha: &Composition, d: &SkewShape) -> SkewShape {
    let w = word(alpha);
    let blocks = vec![d.clone(); alpha.size() as usize];
    star_product(&blocks, w.stars())
}

/// `α • D`: like `α ∘ D` but the blocks alternate `D, Dᵗ, D, …`.
pub fn compose_transpose(alpha: &Composition, d: &SkewShape) -> SkewShape {
    let w = word(alpha);
    let dt = d.transpose();
    let blocks: Vec<SkewShape> = (0..alpha.size())
        .map(|i| if i % 2 == 0 { d.clone() } else { dt.clone() })
        .collect();
    star_product(&blocks, w.stars())
}

/// Ribbon-level shortcuts working on words instead of cells.
pub mod ribbon {
    use super::*;

    pub fn transpose(alpha: &Composition) -> Composition {
        word(alpha).transposed().to_ribbon()
    }

    pub fn rotate(alpha: &Composition) -> Composition {
        alpha.reversed()
    }

    /// The four images of `α` under `{id, ᵗ, °, ᵗ°}`, in that order.
    pub fn variants(alpha: &Composition) -> [Composition; 4] {
        let t = transpose(alpha);
        let r = rotate(alpha);
        let tr = rotate(&t);
        [alpha.clone(), t, r, tr]
    }

    fn blocks_word(alpha: &Composition, d: &Composition, alternate: bool) -> Vec<Star> {
        let outer = word(alpha);
        let wd = word(d);
        let wdt = wd.transposed();
        let mut stars = Vec::with_capacity((alpha.size() * d.size()) as usize);
        for i in 0..alpha.size() as usize {
            if i > 0 {
                stars.push(outer.0[i - 1]);
            }
            let block = if alternate && i % 2 == 1 { &wdt } else { &wd };
            stars.extend_from_slice(&block.0);
        }
        stars
    }

    pub fn compose(alpha: &Composition, d: &Composition) -> Composition {
        word_to_ribbon(&blocks_word(alpha, d, false))
    }

    pub fn compose_transpose(alpha: &Composition, d: &Composition) -> Composition {
        word_to_ribbon(&blocks_word(alpha, d, true))
    }

    fn factorizations(gamma: &Composition, alternate: bool) -> Vec<(Composition, Composition)> {
        let n = gamma.size() as usize;
        let w = word(gamma).0;
        let mut out = Vec::new();
        for d in 2..n {
            if !n.is_multiple_of(d) {
                continue;
            }
            let m = n / d;
            let block = |j: usize| &w[j * d..j * d + d - 1];
            let wd = RibbonWord(block(0).to_vec());
            let wdt = wd.transposed();
            let fits = (0..m).all(|j| {
                let want = if alternate && j % 2 == 1 { &wdt.0 } else { &wd.0 };
                block(j) == want.as_slice()
            });
            if !fits {
                continue;
            }
            let junctions: Vec<Star> = (0..m - 1).map(|j| w[j * d + d - 1]).collect();
            out.push((word_to_ribbon(&junctions), wd.to_ribbon()));
        }
        out
    }

    /// All `(α, D)` with `α • D = γ`, `|α|, |D| ≥ 2`; at most one per divisor.
    pub fn bullet_factorizations(gamma: &Composition) -> Vec<(Composition, Composition)> {
        factorizations(gamma, true)
    }

    /// All `(α, D)` with `α ∘ D = γ`, `|α|, |D| ≥ 2`.
    pub fn circ_factorizations(gamma: &Composition) -> Vec<(Composition, Composition)> {
        factorizations(gamma, false)
    }
}

/// Every normalized skew shape with exactly `n` cells.
pub fn skew_shapes_of(n: u32) -> Vec<SkewShape> {
    fn rec(rem: u32, rows: &mut Vec<(u32, u32)>, out: &mut Vec<SkewShape>) {
        if rem == 0 {
            let mut top_first = rows.clone();
            top_first.reverse();
            out.push(SkewShape { rows: top_first });
            return;
        }
        let &(bl, br) = rows.last().unwrap();
        for l in bl..=br + 1 {
            let r_min = l.max(br);
            for r in r_min..=(l + rem - 1) {
                rows.push((l, r));
                rec(rem - (r - l + 1), rows, out);
                rows.pop();
            }
        }
    }
    let mut out = Vec::new();
    for r in 1..=n {
        let mut rows = vec![(1, r)];
        rec(n - r, &mut rows, &mut out);
    }
    out
}
