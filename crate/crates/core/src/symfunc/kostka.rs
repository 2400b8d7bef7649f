use std::sync::{Arc, LazyLock};

use crate::cache::TableCache;
use crate::combinat::{count_ssyt, Partition, PartitionIndex};

/// Kostka numbers `K_{λμ}` of one degree, rows and columns in canonical order,
/// together with the exact inverse matrix.
#[derive(Clone, Debug)]
pub struct KostkaTable {
    index: PartitionIndex,
    matrix: Vec<Vec<i64>>,
    inverse: Vec<Vec<i64>>,
}

impl KostkaTable {
    pub fn degree(&self) -> usize {
        self.index.degree()
    }

    pub fn index(&self) -> &PartitionIndex {
        &self.index
    }

    pub fn partitions(&self) -> &[Partition] {
        self.index.partitions()
    }

    /// `K[i][j] = K_{λ_i, λ_j}`.
    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn inverse(&self) -> &[Vec<i64>] {
        &self.inverse
    }

    pub fn entry(&self, lambda: &Partition, mu: &Partition) -> i64 {
        match (self.index.position(lambda), self.index.position(mu)) {
            (Some(i), Some(j)) => self.matrix[i][j],
            _ => 0,
        }
    }

    pub fn inverse_entry(&self, lambda: &Partition, mu: &Partition) -> i64 {
        match (self.index.position(lambda), self.index.position(mu)) {
            (Some(i), Some(j)) => self.inverse[i][j],
            _ => 0,
        }
    }
}

pub fn build_kostka_table(d: usize) -> KostkaTable {
    let index = PartitionIndex::new(d);
    let parts = index.partitions();
    let n = parts.len();
    let matrix: Vec<Vec<i64>> = parts
        .iter()
        .map(|lambda| {
            parts
                .iter()
                .map(|mu| {
                    let k = count_ssyt(lambda, &mu.as_composition()).expect("same degree");
                    i64::try_from(k).expect("Kostka number fits in i64")
                })
                .collect()
        })
        .collect();

    // Upper unitriangular, so back-substitution stays in the integers.
    let mut inverse = vec![vec![0i64; n]; n];
    for i in (0..n).rev() {
        debug_assert_eq!(matrix[i][i], 1);
        #[allow(clippy::needless_range_loop)]
        for j in i..n {
            let mut acc = i64::from(i == j);
            for k in i + 1..=j {
                acc -= matrix[i][k] * inverse[k][j];
            }
            inverse[i][j] = acc;
        }
    }
    KostkaTable {
        index,
        matrix,
        inverse,
    }
}

static KOSTKA: LazyLock<TableCache<usize, KostkaTable>> = LazyLock::new(TableCache::new);

/// Cached [`build_kostka_table`].
pub fn kostka_table(d: usize) -> Arc<KostkaTable> {
    KOSTKA.get_or_build(d, || build_kostka_table(d))
}
