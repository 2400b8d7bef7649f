//! Partitions, compositions and tableau counting.
//!
//! Partitions of a fixed degree are always listed in *canonical order*:
//! reverse lexicographic, so `(d)` comes first and `(1^d)` last. This order
//! refines the dominance order, which makes the Kostka matrix upper
//! unitriangular when rows and columns are indexed canonically.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        if !decreasing || parts.last() == Some(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(d)`; empty when `d == 0`.
    pub fn row(d: usize) -> Self {
        if d == 0 {
            Self::empty()
        } else {
            Partition(vec![d])
        }
    }

    /// The one-column partition `(1^d)`.
    pub fn column(d: usize) -> Self {
        Partition(vec![1; d])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition(
            (1..=width)
                .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
                .collect(),
        )
    }

    /// `self ⊴ other` in the dominance order.
    pub fn dominated_by(&self, other: &Partition) -> Result<bool> {
        dominance_leq(self, other)
    }

    /// Comparison in canonical (reverse lexicographic) order.
    pub fn canonical_cmp(&self, other: &Partition) -> Ordering {
        other.0.cmp(&self.0)
    }

    /// Multiplicity of each part size: entry `k` counts the parts equal to `k`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.part(0) + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    pub fn as_composition(&self) -> Composition {
        Composition(self.0.clone())
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sequence(f, &self.0)
    }
}

/// A finite sequence of nonnegative integers. Zero parts are kept: the length
/// is meaningful.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    /// Drop the zero parts and sort the rest into a partition.
    pub fn sort_to_partition(&self) -> Partition {
        sort_to_partition(self)
    }
}

impl From<Vec<usize>> for Composition {
    fn from(parts: Vec<usize>) -> Self {
        Composition(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Self {
        Composition(p.0)
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition(p.0.clone())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sequence(f, &self.0)
    }
}

fn write_sequence(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    if parts.is_empty() {
        return f.write_str("[]");
    }
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

/// All compositions of `d` with `n` parts, lexicographically descending.
///
/// `n == 0` yields the empty composition when `d == 0` and nothing otherwise.
pub fn enumerate_compositions(n: usize, d: usize) -> Vec<Composition> {
    fn go(n: usize, d: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if n == 1 {
            prefix.push(d);
            out.push(Composition(prefix.clone()));
            prefix.pop();
            return;
        }
        for first in (0..=d).rev() {
            prefix.push(first);
            go(n - 1, d - first, prefix, out);
            prefix.pop();
        }
    }

    let mut out = Vec::new();
    match (n, d) {
        (0, 0) => out.push(Composition::default()),
        (0, _) => {}
        _ => go(n, d, &mut Vec::with_capacity(n), &mut out),
    }
    out
}

/// All partitions of `d` in canonical (reverse lexicographic) order.
pub fn enumerate_partitions(d: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for first in (1..=remaining.min(max)).rev() {
            prefix.push(first);
            go(remaining - first, first, prefix, out);
            prefix.pop();
        }
    }

    let mut out = Vec::new();
    go(d, d, &mut Vec::new(), &mut out);
    out
}

pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

/// The partitions of one degree in canonical order, with their positions.
#[derive(Clone, Debug)]
pub struct PartitionIndex {
    degree: usize,
    partitions: Vec<Partition>,
    positions: HashMap<Partition, usize>,
}

impl PartitionIndex {
    pub fn new(degree: usize) -> Self {
        let partitions = enumerate_partitions(degree);
        let positions = partitions
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        PartitionIndex {
            degree,
            partitions,
            positions,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.partitions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partitions.is_empty()
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn get(&self, i: usize) -> &Partition {
        &self.partitions[i]
    }

    pub fn position(&self, p: &Partition) -> Option<usize> {
        self.positions.get(p).copied()
    }
}

/// `mu ⊴ lambda`: every prefix sum of `mu` is at most the matching prefix sum
/// of `lambda`.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> Result<bool> {
    Error::check_degrees(mu.degree(), lambda.degree())?;
    let len = mu.len().max(lambda.len());
    let (mut a, mut b) = (0, 0);
    for t in 0..len {
        a += mu.part(t);
        b += lambda.part(t);
        if a > b {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn sort_to_partition(c: &Composition) -> Partition {
    let mut parts: Vec<usize> = c.0.iter().copied().filter(|&p| p > 0).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition(parts)
}

/// The Kostka number `K_{λμ}`: semistandard tableaux of shape `lambda` and
/// content `mu`.
///
/// Counted by peeling horizontal strips off the shape, largest entry first,
/// memoised on (remaining shape, remaining content length).
pub fn count_ssyt(lambda: &Partition, mu: &Composition) -> Result<u64> {
    Error::check_degrees(lambda.degree(), mu.degree())?;
    let mut memo = HashMap::new();
    Ok(ssyt_rec(lambda.parts(), mu.parts(), &mut memo))
}

fn ssyt_rec(
    shape: &[usize],
    content: &[usize],
    memo: &mut HashMap<(Vec<usize>, usize), u64>,
) -> u64 {
    let Some((&last, rest)) = content.split_last() else {
        return u64::from(shape.is_empty());
    };
    let key = (shape.to_vec(), content.len());
    if let Some(&hit) = memo.get(&key) {
        return hit;
    }
    let mut total = 0;
    let mut inner = shape.to_vec();
    for_each_strip_removal(shape, last, 0, &mut inner, &mut |nu| {
        let trimmed = nu.iter().position(|&p| p == 0).map_or(nu, |z| &nu[..z]);
        total += ssyt_rec(trimmed, rest, memo);
    });
    memo.insert(key, total);
    total
}

/// Calls `f` with every `nu ⊆ shape` such that `shape / nu` is a horizontal
/// strip of `size` boxes. `nu` is written into `inner` and may carry trailing
/// zeros.
fn for_each_strip_removal(
    shape: &[usize],
    size: usize,
    row: usize,
    inner: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]),
) {
    if row == shape.len() {
        if size == 0 {
            f(inner);
        }
        return;
    }
    let below = shape.get(row + 1).copied().unwrap_or(0);
    let max_remove = (shape[row] - below).min(size);
    // Boxes left in rows below must be able to absorb what remains.
    let capacity_below: usize = (row + 1..shape.len())
        .map(|r| shape[r] - shape.get(r + 1).copied().unwrap_or(0))
        .sum();
    for removed in 0..=max_remove {
        if size - removed > capacity_below {
            continue;
        }
        inner[row] = shape[row] - removed;
        for_each_strip_removal(shape, size - removed, row + 1, inner, f);
    }
    inner[row] = shape[row];
}

/// Standard Young tableaux of shape `lambda`, i.e. `K_{λ,(1^d)}`.
pub fn count_standard_tableaux(lambda: &Partition) -> u64 {
    count_ssyt(lambda, &Composition(vec![1; lambda.degree()]))
        .expect("degrees agree by construction")
}
