//! Ribbon equality classes and the classes generated by equality-preserving
//! moves.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use qschur::diagram::ribbon;
use qschur::omega::ribbon_q;
use qschur::{compositions_of, Composition, OmegaElem};
use rayon::prelude::*;

/// One class of compositions whose ribbon functions coincide.
#[derive(Clone, Debug, PartialEq)]
pub struct EqualityClass {
    pub class_id: usize,
    /// Lexicographically decreasing.
    pub members: Vec<Composition>,
    pub expansion: OmegaElem,
}

/// `(α, 𝔯_α)` for every composition of `n`, in lexicographic order.
pub fn expansions(n: u32) -> Vec<(Composition, OmegaElem)> {
    let mut all = compositions_of(n);
    all.sort();
    all.into_par_iter()
        .map(|alpha| {
            let r = ribbon_q(&alpha);
            (alpha, r)
        })
        .collect()
}

/// Sort members decreasingly and number groups by their least member.
fn number_groups(groups: Vec<Vec<Composition>>) -> Vec<Vec<Composition>> {
    let mut groups: Vec<Vec<Composition>> = groups
        .into_iter()
        .map(|mut g| {
            g.sort_by(|a, b| b.cmp(a));
            g
        })
        .collect();
    groups.sort_by(|a, b| a.last().cmp(&b.last()));
    groups
}

/// Compositions of `n` grouped by `canonical_key(ribbon_q(α))`.
pub fn classes(n: u32) -> Vec<EqualityClass> {
    assert!(n >= 1);
    let mut by_key: BTreeMap<String, (OmegaElem, Vec<Composition>)> = BTreeMap::new();
    for (alpha, r) in expansions(n) {
        by_key
            .entry(r.canonical_key())
            .or_insert_with(|| (r, Vec::new()))
            .1
            .push(alpha);
    }
    let mut expansion_of: HashMap<Composition, OmegaElem> = HashMap::new();
    let mut groups = Vec::new();
    for (_, (r, members)) in by_key {
        expansion_of.insert(members[0].clone(), r);
        groups.push(members);
    }
    number_groups(groups)
        .into_iter()
        .enumerate()
        .map(|(class_id, members)| {
            let expansion = members
                .iter()
                .find_map(|m| expansion_of.get(m))
                .expect("every group has a recorded expansion")
                .clone();
            EqualityClass { class_id, members, expansion }
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

/// A move that provably preserves the ribbon function.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Move {
    /// `γ → γᵗ`
    GlobalTranspose,
    /// `γ → γ°`
    GlobalRotate,
    /// `α • D → α' • D'` for variants `α'` of `α` and `D'` of `D`.
    BulletVariant {
        alpha: Composition,
        alpha_to: Composition,
        d: Composition,
        d_to: Composition,
    },
    /// `α ∘ D → α° ∘ D` (left) or `α ∘ D°` (right).
    CircRotate { side: Side, alpha: Composition, d: Composition },
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::GlobalTranspose => f.write_str("GLOBAL_T"),
            Move::GlobalRotate => f.write_str("GLOBAL_ROT"),
            Move::BulletVariant { alpha, alpha_to, d, d_to } => {
                write!(f, "BULLET_VARIANT({alpha}->{alpha_to}, {d}->{d_to})")
            }
            Move::CircRotate { side, alpha, d } => {
                let s = match side {
                    Side::Left => "left",
                    Side::Right => "right",
                };
                write!(f, "CIRC_ROT({s}; {alpha} o {d})")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MoveTrace {
    pub source: Composition,
    pub target: Composition,
    pub mv: Move,
}

impl MoveTrace {
    /// Apply the move to `source`; `None` if the move does not match it.
    pub fn replay(&self) -> Option<Composition> {
        let s = &self.source;
        match &self.mv {
            Move::GlobalTranspose => Some(ribbon::transpose(s)),
            Move::GlobalRotate => Some(ribbon::rotate(s)),
            Move::BulletVariant { alpha, alpha_to, d, d_to } => (ribbon::compose_transpose(alpha, d)
                == *s)
                .then(|| ribbon::compose_transpose(alpha_to, d_to)),
            Move::CircRotate { side, alpha, d } => {
                (ribbon::compose(alpha, d) == *s).then(|| match side {
                    Side::Left => ribbon::compose(&ribbon::rotate(alpha), d),
                    Side::Right => ribbon::compose(alpha, &ribbon::rotate(d)),
                })
            }
        }
    }
}

impl fmt::Display for MoveTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} via {}", self.source, self.target, self.mv)
    }
}

/// Every non-trivial move out of `γ`.
pub fn moves_from(gamma: &Composition) -> Vec<MoveTrace> {
    let mut out = Vec::new();
    let mut push = |target: Composition, mv: Move| {
        if target != *gamma {
            out.push(MoveTrace { source: gamma.clone(), target, mv });
        }
    };
    push(ribbon::transpose(gamma), Move::GlobalTranspose);
    push(ribbon::rotate(gamma), Move::GlobalRotate);
    for (alpha, d) in ribbon::bullet_factorizations(gamma) {
        for alpha_to in ribbon::variants(&alpha) {
            for d_to in ribbon::variants(&d) {
                let target = ribbon::compose_transpose(&alpha_to, &d_to);
                push(
                    target,
                    Move::BulletVariant {
                        alpha: alpha.clone(),
                        alpha_to: alpha_to.clone(),
                        d: d.clone(),
                        d_to,
                    },
                );
            }
        }
    }
    for (alpha, d) in ribbon::circ_factorizations(gamma) {
        push(
            ribbon::compose(&ribbon::rotate(&alpha), &d),
            Move::CircRotate { side: Side::Left, alpha: alpha.clone(), d: d.clone() },
        );
        push(
            ribbon::compose(&alpha, &ribbon::rotate(&d)),
            Move::CircRotate { side: Side::Right, alpha, d },
        );
    }
    out.sort();
    out.dedup_by(|a, b| a.target == b.target && a.mv == b.mv);
    out
}

/// Connected components of the move graph on compositions of `n`.
#[derive(Clone, Debug)]
pub struct Closure {
    /// Members lexicographically decreasing; components ordered by least
    /// member.
    pub components: Vec<Vec<Composition>>,
    /// Every move edge, sorted.
    pub traces: Vec<MoveTrace>,
    /// For each non-root member, the edge by which breadth-first search
    /// first reached it from its component's least member.
    pub tree: BTreeMap<Composition, MoveTrace>,
}

impl Closure {
    /// A chain of moves from the component root to `target`.
    pub fn path_to(&self, target: &Composition) -> Vec<MoveTrace> {
        let mut path = Vec::new();
        let mut at = target.clone();
        while let Some(edge) = self.tree.get(&at) {
            path.push(edge.clone());
            at = edge.source.clone();
        }
        path.reverse();
        path
    }
}

pub fn closure_classes(n: u32) -> Closure {
    assert!(n >= 1);
    let mut all = compositions_of(n);
    all.sort();
    let per_source: Vec<Vec<MoveTrace>> = all.par_iter().map(moves_from).collect();
    let mut adjacency: HashMap<&Composition, Vec<&MoveTrace>> = HashMap::new();
    for t in per_source.iter().flatten() {
        adjacency.entry(&t.source).or_default().push(t);
    }
    let mut seen: HashMap<&Composition, usize> = HashMap::new();
    let mut groups: Vec<Vec<Composition>> = Vec::new();
    let mut tree = BTreeMap::new();
    // roots are visited in increasing order, so each root is its
    // component's least member
    for root in &all {
        if seen.contains_key(root) {
            continue;
        }
        let id = groups.len();
        let mut members = vec![root.clone()];
        seen.insert(root, id);
        let mut queue = VecDeque::from([root]);
        while let Some(at) = queue.pop_front() {
            for edge in adjacency.get(at).into_iter().flatten() {
                if !seen.contains_key(&edge.target) {
                    let target = all
                        .binary_search(&edge.target)
                        .map(|i| &all[i])
                        .expect("moves preserve size");
                    seen.insert(target, id);
                    tree.insert(target.clone(), (*edge).clone());
                    members.push(target.clone());
                    queue.push_back(target);
                }
            }
        }
        groups.push(members);
    }
    let mut traces: Vec<MoveTrace> = per_source.into_iter().flatten().collect();
    traces.sort();
    Closure { components: number_groups(groups), traces, tree }
}

/// Outcome of comparing the move closure with the equality partition.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub n: u32,
    /// Pairs with equal ribbon functions that no chain of moves connects:
    /// the least members of two closure components inside one class.
    pub equal_not_connected: Vec<(Composition, Composition)>,
    /// Move edges whose endpoints have different ribbon functions.
    pub connected_not_equal: Vec<MoveTrace>,
}

impl Verdict {
    pub fn matches(&self) -> bool {
        self.equal_not_connected.is_empty() && self.connected_not_equal.is_empty()
    }

    pub fn is_sound(&self) -> bool {
        self.connected_not_equal.is_empty()
    }
}

/// Compare the partitions; `classes` and `closure` must be for the same `n`.
pub fn compare_partitions(n: u32, classes: &[EqualityClass], closure: &Closure) -> Verdict {
    let class_of: HashMap<&Composition, usize> = classes
        .iter()
        .flat_map(|c| c.members.iter().map(move |m| (m, c.class_id)))
        .collect();
    let connected_not_equal = closure
        .traces
        .iter()
        .filter(|t| class_of[&t.source] != class_of[&t.target])
        .cloned()
        .collect();
    let component_of: HashMap<&Composition, usize> = closure
        .components
        .iter()
        .enumerate()
        .flat_map(|(i, c)| c.iter().map(move |m| (m, i)))
        .collect();
    let mut equal_not_connected = Vec::new();
    for class in classes {
        let mut roots: BTreeMap<usize, &Composition> = BTreeMap::new();
        for m in &class.members {
            let comp = component_of[m];
            // members are decreasing, so the last one seen is the least
            roots.insert(comp, m);
        }
        let mut reps: Vec<&Composition> = roots.into_values().collect();
        reps.sort();
        for other in reps.iter().skip(1) {
            equal_not_connected.push((reps[0].clone(), (*other).clone()));
        }
    }
    Verdict { n, equal_not_connected, connected_not_equal }
}

/// Equality classes, move closure and their comparison at size `n`.
pub fn conjecture_check(n: u32) -> (Vec<EqualityClass>, Closure, Verdict) {
    let cls = classes(n);
    let closure = closure_classes(n);
    let verdict = compare_partitions(n, &cls, &closure);
    (cls, closure, verdict)
}
