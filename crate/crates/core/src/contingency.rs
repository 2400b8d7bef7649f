//! Nonnegative integer matrices with prescribed row and column sums.
//!
//! The matrices with row sums `λ` and column sums `μ` index the orbits of
//! `S_d` on pairs of dissections, so they decompose `M^λ ⊗ M^μ` into
//! permutation modules: each matrix `A` contributes one copy of `M^A`, where
//! `A` is read row-major as a composition.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinat::{sort_to_partition, Composition, Partition};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ContingencyMatrix {
    rows: Vec<Vec<usize>>,
    row_sums: Composition,
    col_sums: Composition,
}

impl ContingencyMatrix {
    /// Builds a matrix, deriving the margins from the entries. All rows must
    /// have `ncols` entries.
    pub fn from_rows(rows: Vec<Vec<usize>>, ncols: usize) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Error::Internal(format!(
                "row {bad:?} has {} entries, expected {ncols}",
                bad.len()
            )));
        }
        let row_sums = rows.iter().map(|r| r.iter().sum()).collect::<Vec<_>>();
        let col_sums = (0..ncols)
            .map(|j| rows.iter().map(|r| r[j]).sum())
            .collect::<Vec<_>>();
        Ok(ContingencyMatrix {
            rows,
            row_sums: row_sums.into(),
            col_sums: col_sums.into(),
        })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn row_sums(&self) -> &Composition {
        &self.row_sums
    }

    pub fn col_sums(&self) -> &Composition {
        &self.col_sums
    }

    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.rows[i][j]
    }

    pub fn degree(&self) -> usize {
        self.row_sums.degree()
    }

    /// Entries read row by row: `(a11, a12, ..., a21, ..., amn)`.
    pub fn as_composition(&self) -> Composition {
        self.rows
            .iter()
            .flatten()
            .copied()
            .collect::<Vec<_>>()
            .into()
    }

    /// Isomorphism class of the permutation module `M^A`.
    pub fn module_class(&self) -> Partition {
        sort_to_partition(&self.as_composition())
    }

    pub fn transpose(&self) -> ContingencyMatrix {
        let ncols = self.col_sums.len();
        ContingencyMatrix {
            rows: (0..ncols)
                .map(|j| self.rows.iter().map(|r| r[j]).collect())
                .collect(),
            row_sums: self.col_sums.clone(),
            col_sums: self.row_sums.clone(),
        }
    }
}

impl fmt::Display for ContingencyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
            f.write_str(&cells.join(" "))?;
        }
        Ok(())
    }
}

/// Multiset of partitions, e.g. the isomorphism classes of the summands of a
/// direct sum of permutation modules.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ModuleDecomposition {
    counts: BTreeMap<Partition, usize>,
}

impl ModuleDecomposition {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, class: Partition, multiplicity: usize) {
        if multiplicity > 0 {
            *self.counts.entry(class).or_default() += multiplicity;
        }
    }

    pub fn multiplicity(&self, class: &Partition) -> usize {
        self.counts.get(class).copied().unwrap_or(0)
    }

    /// Classes with their multiplicities, in canonical partition order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, usize)> + '_ {
        self.counts.iter().rev().map(|(p, &m)| (p, m))
    }

    /// Number of summands counted with multiplicity.
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }
}

impl FromIterator<Partition> for ModuleDecomposition {
    fn from_iter<I: IntoIterator<Item = Partition>>(iter: I) -> Self {
        let mut out = ModuleDecomposition::new();
        for p in iter {
            out.insert(p, 1);
        }
        out
    }
}

impl fmt::Display for ModuleDecomposition {
    /// `2*M[2,1,1] + M[1,1,1,1]`; the empty sum is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        for (i, (class, m)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if m != 1 {
                write!(f, "{m}*")?;
            }
            write!(
                f,
                "M[{}]",
                class
                    .parts()
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            )?;
        }
        Ok(())
    }
}

/// Calls `f` with each row of `total` boxes fitting under `budget`, in
/// lexicographically descending order.
fn for_each_bounded_row(total: usize, budget: &[usize], f: &mut dyn FnMut(&[usize])) {
    fn go(
        total: usize,
        budget: &[usize],
        col: usize,
        row: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]),
    ) {
        if col == budget.len() {
            if total == 0 {
                f(row);
            }
            return;
        }
        let room_after: usize = budget[col + 1..].iter().sum();
        let hi = budget[col].min(total);
        let lo = total.saturating_sub(room_after);
        for v in (lo..=hi).rev() {
            row.push(v);
            go(total - v, budget, col + 1, row, f);
            row.pop();
        }
    }
    go(total, budget, 0, &mut Vec::with_capacity(budget.len()), f);
}

/// Every matrix with row sums `lambda` and column sums `mu`, in row-major
/// lexicographically descending order.
pub fn contingency_matrices(
    lambda: &Composition,
    mu: &Composition,
) -> Result<Vec<ContingencyMatrix>> {
    Error::check_degrees(lambda.degree(), mu.degree())?;

    fn go(
        lambda: &[usize],
        budget: &mut Vec<usize>,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        let Some((&first, rest)) = lambda.split_first() else {
            if budget.iter().all(|&b| b == 0) {
                out.push(rows.clone());
            }
            return;
        };
        let snapshot = budget.clone();
        for_each_bounded_row(first, &snapshot, &mut |row| {
            for (b, v) in budget.iter_mut().zip(row) {
                *b -= v;
            }
            rows.push(row.to_vec());
            go(rest, budget, rows, out);
            rows.pop();
            budget.copy_from_slice(&snapshot);
        });
    }

    let mut raw = Vec::new();
    go(
        lambda.parts(),
        &mut mu.parts().to_vec(),
        &mut Vec::new(),
        &mut raw,
    );
    Ok(raw
        .into_iter()
        .map(|rows| ContingencyMatrix {
            rows,
            row_sums: lambda.clone(),
            col_sums: mu.clone(),
        })
        .collect())
}

/// Decomposes `M^λ ⊗ M^μ` into permutation modules, one summand per matrix.
pub fn decompose_permutation_tensor(
    lambda: &Composition,
    mu: &Composition,
) -> Result<ModuleDecomposition> {
    Ok(contingency_matrices(lambda, mu)?
        .iter()
        .map(ContingencyMatrix::module_class)
        .collect())
}

/// `|A^λ_μ|`, the dimension of the hom space between the corresponding
/// projectives. Counted over column-budget vectors without building matrices.
pub fn hom_dimension(lambda: &Composition, mu: &Composition) -> Result<u128> {
    Error::check_degrees(lambda.degree(), mu.degree())?;

    fn count(
        lambda: &[usize],
        budget: Vec<usize>,
        memo: &mut HashMap<(usize, Vec<usize>), u128>,
    ) -> u128 {
        let Some((&first, rest)) = lambda.split_first() else {
            return u128::from(budget.iter().all(|&b| b == 0));
        };
        if rest.is_empty() {
            // the last row is forced
            return u128::from(budget.iter().sum::<usize>() == first);
        }
        let key = (rest.len(), budget);
        if let Some(&hit) = memo.get(&key) {
            return hit;
        }
        let budget = &key.1;
        let mut total = 0u128;
        for_each_bounded_row(first, budget, &mut |row| {
            let next: Vec<usize> = budget.iter().zip(row).map(|(b, v)| b - v).collect();
            total += count(rest, next, memo);
        });
        memo.insert(key, total);
        total
    }

    Ok(count(
        lambda.parts(),
        mu.parts().to_vec(),
        &mut HashMap::new(),
    ))
}
