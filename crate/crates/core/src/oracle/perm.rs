use std::collections::HashMap;
use std::fmt;

use crate::combinat::{Composition, Partition};
use crate::error::{Error, Result};

/// A permutation of `{0, .., d-1}`, stored as its image list.
///
/// Composition follows `(στ)(t) = σ(τ(t))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(d: usize) -> Self {
        Permutation {
            images: (0..d).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || std::mem::replace(&mut seen[x], true) {
                return Err(Error::Internal(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of degree `d` from disjoint cycles written with
    /// 1-based points, e.g. `&[&[1, 2, 3]]` for `1 → 2 → 3 → 1`.
    pub fn from_cycles(d: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..d).collect();
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                let y = cycle[(k + 1) % cycle.len()];
                if x == 0 || y == 0 || x > d || y > d {
                    return Err(Error::Internal(format!("cycle {cycle:?} leaves 1..={d}")));
                }
                images[x - 1] = y - 1;
            }
        }
        Self::from_images(images)
    }

    /// The canonical element of cycle type `rho`: cycles of decreasing length
    /// on consecutive points.
    pub fn of_cycle_type(rho: &Partition) -> Self {
        let mut images = Vec::with_capacity(rho.degree());
        let mut start = 0;
        for &len in rho.parts() {
            images.extend((1..len).map(|k| start + k));
            images.push(start);
            start += len;
        }
        Permutation { images }
    }

    /// The transposition of positions `t` and `t + 1` (0-based).
    pub fn adjacent_transposition(d: usize, t: usize) -> Self {
        let mut images: Vec<usize> = (0..d).collect();
        images.swap(t, t + 1);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, t: usize) -> usize {
        self.images[t]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.degree(),
            other.degree(),
            "composing permutations of different degree"
        );
        Permutation {
            images: other.images.iter().map(|&t| self.images[t]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (t, &x) in self.images.iter().enumerate() {
            images[x] = t;
        }
        Permutation { images }
    }

    pub fn cycle_type(&self) -> Partition {
        let mut seen = vec![false; self.degree()];
        let mut lengths = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(lengths).expect("cycle lengths are positive")
    }

    pub fn sign(&self) -> i64 {
        let even_cycles = self
            .cycle_type()
            .parts()
            .iter()
            .filter(|&&l| l % 2 == 0)
            .count();
        if even_cycles % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// A `d`-tuple of labels in `1..=n`. The tuple *belongs to* the composition
/// whose `l`-th part counts the entries equal to `l`; it encodes the
/// dissection of the positions into the blocks of equal labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexTuple(Vec<usize>);

impl IndexTuple {
    pub fn new(entries: Vec<usize>) -> Self {
        IndexTuple(entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Counts of each label `1..=n`.
    pub fn content(&self, n: usize) -> Composition {
        let mut counts = vec![0; n];
        for &l in &self.0 {
            counts[l - 1] += 1;
        }
        counts.into()
    }

    pub fn belongs_to(&self, lambda: &Composition) -> bool {
        self.0.iter().all(|&l| l >= 1 && l <= lambda.len()) && self.content(lambda.len()) == *lambda
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Place permutation: `act(σ, i)_t = i_{σ(t)}`. This is a right action,
/// `act(τ, act(σ, i)) = act(στ, i)`.
pub fn act(sigma: &Permutation, i: &IndexTuple) -> Result<IndexTuple> {
    Error::check_degrees(sigma.degree(), i.len())?;
    Ok(IndexTuple(sigma.images.iter().map(|&s| i.0[s]).collect()))
}

/// All tuples belonging to `lambda`, lexicographically increasing.
pub fn enumerate_tuples(lambda: &Composition) -> Vec<IndexTuple> {
    let mut current: Vec<usize> = lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(l, &count)| std::iter::repeat_n(l + 1, count))
        .collect();
    let mut out = vec![IndexTuple(current.clone())];
    while next_permutation(&mut current) {
        out.push(IndexTuple(current.clone()));
    }
    out
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("a larger suffix element exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Positions of the tuples of one composition, with the effect of each
/// adjacent transposition precomputed.
pub(crate) struct TupleBasis {
    pub(crate) tuples: Vec<IndexTuple>,
    pub(crate) swaps: Vec<Vec<usize>>,
}

impl TupleBasis {
    pub(crate) fn new(lambda: &Composition) -> Self {
        let tuples = enumerate_tuples(lambda);
        let position: HashMap<&IndexTuple, usize> =
            tuples.iter().enumerate().map(|(k, t)| (t, k)).collect();
        let d = lambda.degree();
        let swaps = tuples
            .iter()
            .map(|t| {
                (0..d.saturating_sub(1))
                    .map(|s| {
                        let moved = act(&Permutation::adjacent_transposition(d, s), t)
                            .expect("same degree");
                        position[&moved]
                    })
                    .collect()
            })
            .collect();
        TupleBasis { tuples, swaps }
    }
}
