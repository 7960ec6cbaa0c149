//! Division-free determinants over commutative rings.
//!
//! Laplace expansion along rows, memoized on the set of columns already
//! consumed by the rows below: `2^n` subproblems, `n` products each.

/// The ring operations a determinant needs.
pub trait Ring: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
}

/// Determinant of a square matrix given by rows.
pub fn determinant<R: Ring>(m: &[Vec<R>]) -> R {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "square matrix expected");
    assert!(n < 25, "subset memo would need 2^{n} entries");
    if n == 0 {
        return R::one();
    }
    // value[s]: determinant of the last |s| rows restricted to columns s
    let mut value: Vec<Option<R>> = vec![None; 1 << n];
    value[0] = Some(R::one());
    for s in 1usize..(1 << n) {
        let k = s.count_ones() as usize;
        let row = &m[n - k];
        let mut acc: Option<R> = None;
        let mut pos = 0;
        for (j, entry) in row.iter().enumerate() {
            if s >> j & 1 == 0 {
                continue;
            }
            let sub = &value[s & !(1 << j)];
            if let Some(minor) = sub {
                if !entry.is_zero() {
                    let term = entry.mul(minor);
                    acc = Some(match acc {
                        None if pos % 2 == 0 => term,
                        None => R::zero().sub(&term),
                        Some(a) if pos % 2 == 0 => a.add(&term),
                        Some(a) => a.sub(&term),
                    });
                }
            }
            pos += 1;
        }
        value[s] = acc.filter(|a| !a.is_zero());
    }
    value[(1 << n) - 1].take().unwrap_or_else(R::zero)
}

impl Ring for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
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
