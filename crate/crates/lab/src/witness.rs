//! Certificates of (in)equality for ribbons too large to expand.

use std::fmt;

use qschur::omega::ribbon_q;
use qschur::oracle::ribbon_q_poly;
use qschur::Composition;

/// Largest ribbon compared through its full q-expansion.
pub const EXPANSION_LIMIT: u32 = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Identical q-expansions.
    Equal,
    /// Different q-expansions.
    DiffersInExpansion,
    /// Images in `k` variables differ.
    DiffersAt { k: usize },
    /// Images agree for every `k ≤ k_max`, which falls short of a proof.
    Inconclusive { k_max: usize },
}

impl Witness {
    pub fn differs(&self) -> bool {
        matches!(self, Witness::DiffersInExpansion | Witness::DiffersAt { .. })
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Equal => f.write_str("equal"),
            Witness::DiffersInExpansion => f.write_str("differs (q-expansion)"),
            Witness::DiffersAt { k } => write!(f, "differs at k={k}"),
            Witness::Inconclusive { k_max } => write!(f, "inconclusive up to k={k_max}"),
        }
    }
}

/// Decide `𝔯_a = 𝔯_b` exactly when small enough, otherwise search for a
/// variable count `2 ≤ k ≤ k_max` at which the polynomial images differ.
/// Agreement at `k ≥ |a|` variables is conclusive.
pub fn inequality_witness(a: &Composition, b: &Composition, k_max: usize) -> Witness {
    assert_eq!(a.size(), b.size(), "ribbons of different sizes");
    if a == b {
        return Witness::Equal;
    }
    if a.size() <= EXPANSION_LIMIT {
        return if ribbon_q(a) == ribbon_q(b) { Witness::Equal } else { Witness::DiffersInExpansion };
    }
    for k in 2..=k_max {
        if ribbon_q_poly(a, k) != ribbon_q_poly(b, k) {
            return Witness::DiffersAt { k };
        }
        if k >= a.size() as usize {
            return Witness::Equal;
        }
    }
    Witness::Inconclusive { k_max }
}
